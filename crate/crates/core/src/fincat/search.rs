//! Complete backtracking enumeration of functors under per-object and
//! per-arrow candidate constraints. One engine serves plain functor
//! enumeration, morphisms in Cat/X (candidates restricted to a fiber),
//! sections, and exponential transposes.

use std::sync::Arc;

use super::{Cat, FunctorMap};
use crate::{Error, Limits, Result};

/// Enumerate functors `dom → cod` whose object images are restricted to
/// `obj_cands(o)` and whose arrow images are restricted to
/// `arrow_cands(a, src_img, tgt_img)` (which must return arrows
/// `src_img → tgt_img`). Identity arrows are forced automatically.
///
/// The search is complete; `max_found` truncates it after that many results.
pub fn enumerate_functors_constrained(
    dom: &Cat,
    cod: &Cat,
    obj_cands: &dyn Fn(usize) -> Vec<usize>,
    arrow_cands: &dyn Fn(usize, usize, usize) -> Vec<usize>,
    limits: &Limits,
    max_found: Option<usize>,
) -> Result<Vec<FunctorMap>> {
    let search = Search {
        dom: Arc::clone(dom),
        cod: Arc::clone(cod),
        budget: limits.search_nodes,
    };
    search.run(obj_cands, arrow_cands, max_found)
}

/// Enumerate all functors `dom → cod`.
pub fn enumerate_functors(
    dom: &Cat,
    cod: &Cat,
    limits: &Limits,
    max_found: Option<usize>,
) -> Result<Vec<FunctorMap>> {
    let all: Vec<usize> = (0..cod.n_objects()).collect();
    enumerate_functors_constrained(
        dom,
        cod,
        &move |_| all.clone(),
        &|_, s, t| cod.hom(s, t),
        limits,
        max_found,
    )
}

struct Search {
    dom: Cat,
    cod: Cat,
    budget: usize,
}

struct State<'c> {
    obj_img: Vec<usize>,
    arr_img: Vec<usize>,
    /// composable pairs (g, f, gf) grouped by the last arrow position (in
    /// assignment order) at which all three are assigned
    triple_checks: Vec<Vec<(usize, usize, usize)>>,
    arrow_order: Vec<usize>,
    obj_cands: &'c dyn Fn(usize) -> Vec<usize>,
    arrow_cands: &'c dyn Fn(usize, usize, usize) -> Vec<usize>,
    nodes: usize,
    found: Vec<FunctorMap>,
}

impl Search {
    fn run(
        &self,
        obj_cands: &dyn Fn(usize) -> Vec<usize>,
        arrow_cands: &dyn Fn(usize, usize, usize) -> Vec<usize>,
        max_found: Option<usize>,
    ) -> Result<Vec<FunctorMap>> {
        // Non-identity arrows in declaration order; identities are derived.
        let arrow_order: Vec<usize> =
            (0..self.dom.n_arrows()).filter(|&a| !self.dom.is_identity(a)).collect();
        let pos_of = |a: usize| arrow_order.iter().position(|&b| b == a);
        let mut triple_checks: Vec<Vec<(usize, usize, usize)>> =
            vec![Vec::new(); arrow_order.len() + 1];
        for f in 0..self.dom.n_arrows() {
            for &g in self.dom.arrows_from(self.dom.arrow(f).tgt) {
                let gf = self.dom.comp(g, f);
                // position at which the whole triple is known (identities are
                // position 0: known as soon as objects are placed)
                let p = [f, g, gf]
                    .into_iter()
                    .filter_map(pos_of)
                    .map(|p| p + 1)
                    .max()
                    .unwrap_or(0);
                triple_checks[p].push((g, f, gf));
            }
        }
        let mut st = State {
            obj_img: vec![usize::MAX; self.dom.n_objects()],
            arr_img: vec![usize::MAX; self.dom.n_arrows()],
            triple_checks,
            arrow_order,
            obj_cands,
            arrow_cands,
            nodes: 0,
            found: Vec::new(),
        };
        self.assign_object(0, &mut st, max_found)?;
        Ok(st.found)
    }

    fn assign_object(
        &self,
        o: usize,
        st: &mut State,
        max_found: Option<usize>,
    ) -> Result<bool> {
        if o == self.dom.n_objects() {
            for oo in 0..self.dom.n_objects() {
                st.arr_img[self.dom.identity(oo)] = self.cod.identity(st.obj_img[oo]);
            }
            if !self.check_triples(st, 0) {
                return Ok(false);
            }
            return self.assign_arrow(0, st, max_found);
        }
        for cand in (st.obj_cands)(o) {
            st.nodes += 1;
            if st.nodes > self.budget {
                return Err(Error::size("functor search nodes", st.nodes, self.budget));
            }
            st.obj_img[o] = cand;
            // prune: every arrow between already-assigned objects must have at
            // least one candidate image
            let ok = (0..self.dom.n_arrows()).all(|a| {
                let arr = self.dom.arrow(a);
                arr.src > o
                    || arr.tgt > o
                    || self.dom.is_identity(a)
                    || !(st.arrow_cands)(a, st.obj_img[arr.src], st.obj_img[arr.tgt]).is_empty()
            });
            if ok && self.assign_object(o + 1, st, max_found)? {
                return Ok(true);
            }
        }
        st.obj_img[o] = usize::MAX;
        Ok(false)
    }

    fn assign_arrow(&self, k: usize, st: &mut State, max_found: Option<usize>) -> Result<bool> {
        if k == st.arrow_order.len() {
            let f = FunctorMap::new(
                "search",
                Arc::clone(&self.dom),
                Arc::clone(&self.cod),
                st.obj_img.clone(),
                st.arr_img.clone(),
            )
            .expect("search result must validate");
            st.found.push(f);
            return Ok(max_found.is_some_and(|m| st.found.len() >= m));
        }
        let a = st.arrow_order[k];
        let arr = self.dom.arrow(a);
        let cands = (st.arrow_cands)(a, st.obj_img[arr.src], st.obj_img[arr.tgt]);
        for cand in cands {
            st.nodes += 1;
            if st.nodes > self.budget {
                return Err(Error::size("functor search nodes", st.nodes, self.budget));
            }
            let img = self.cod.arrow(cand);
            if img.src != st.obj_img[arr.src] || img.tgt != st.obj_img[arr.tgt] {
                continue;
            }
            st.arr_img[a] = cand;
            if self.check_triples(st, k + 1) && self.assign_arrow(k + 1, st, max_found)? {
                return Ok(true);
            }
        }
        st.arr_img[a] = usize::MAX;
        Ok(false)
    }

    fn check_triples(&self, st: &State, pos: usize) -> bool {
        st.triple_checks[pos].iter().all(|&(g, f, gf)| {
            self.cod.comp(st.arr_img[g], st.arr_img[f]) == st.arr_img[gf]
        })
    }
}

/// A natural transformation between two parallel functors: one codomain
/// arrow `f(x) → g(x)` per object, every naturality square checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorNat {
    pub components: Vec<usize>,
}

impl FunctorNat {
    pub fn new(f: &FunctorMap, g: &FunctorMap, components: Vec<usize>) -> Result<FunctorNat> {
        check_functor_naturality(f, g, &components)?;
        Ok(FunctorNat { components })
    }
}

pub fn check_functor_naturality(
    f: &FunctorMap,
    g: &FunctorMap,
    components: &[usize],
) -> Result<()> {
    if !super::base_eq(&f.dom, &g.dom) || !super::base_eq(&f.cod, &g.cod) {
        return Err(Error::BaseMismatch("naturality between non-parallel functors".into()));
    }
    let (dom, cod) = (&f.dom, &f.cod);
    if components.len() != dom.n_objects() {
        return Err(Error::NaturalityViolation {
            arrow: "<family>".into(),
            detail: "component family has the wrong length".into(),
        });
    }
    for (o, &c) in components.iter().enumerate() {
        let arr = cod.arrow(c);
        if arr.src != f.obj_map[o] || arr.tgt != g.obj_map[o] {
            return Err(Error::NaturalityViolation {
                arrow: dom.object_label(o).into(),
                detail: "component has wrong endpoints".into(),
            });
        }
    }
    for a in 0..dom.n_arrows() {
        let arr = dom.arrow(a);
        let left = cod.comp(components[arr.tgt], f.arrow_map[a]);
        let right = cod.comp(g.arrow_map[a], components[arr.src]);
        if left != right {
            return Err(Error::NaturalityViolation {
                arrow: arr.id.clone(),
                detail: "square does not commute".into(),
            });
        }
    }
    Ok(())
}

/// Complete enumeration of natural transformations `f ⇒ g` between parallel
/// functors; `iso_only` restricts components to invertible arrows.
pub fn enumerate_functor_nats(
    f: &FunctorMap,
    g: &FunctorMap,
    iso_only: bool,
    limits: &Limits,
    max_found: Option<usize>,
) -> Result<Vec<FunctorNat>> {
    if !super::base_eq(&f.dom, &g.dom) || !super::base_eq(&f.cod, &g.cod) {
        return Err(Error::BaseMismatch("nats between non-parallel functors".into()));
    }
    let (dom, cod) = (&f.dom, &f.cod);
    let n = dom.n_objects();

    struct Ctx<'a> {
        dom: &'a Cat,
        cod: &'a Cat,
        f: &'a FunctorMap,
        g: &'a FunctorMap,
        iso_only: bool,
        budget: usize,
        nodes: usize,
        found: Vec<FunctorNat>,
    }

    fn descend(
        ctx: &mut Ctx,
        o: usize,
        comp: &mut Vec<usize>,
        max_found: Option<usize>,
    ) -> Result<bool> {
        let n = ctx.dom.n_objects();
        if o == n {
            let fam = FunctorNat { components: comp.clone() };
            ctx.found.push(fam);
            return Ok(max_found.is_some_and(|m| ctx.found.len() >= m));
        }
        'cand: for c in ctx.cod.hom(ctx.f.obj_map[o], ctx.g.obj_map[o]) {
            ctx.nodes += 1;
            if ctx.nodes > ctx.budget {
                return Err(Error::size("functor-nat search nodes", ctx.nodes, ctx.budget));
            }
            if ctx.iso_only && !ctx.cod.is_iso(c) {
                continue;
            }
            comp[o] = c;
            // check naturality on every arrow whose endpoints are both assigned
            for a in 0..ctx.dom.n_arrows() {
                let arr = ctx.dom.arrow(a);
                if arr.src.max(arr.tgt) != o || comp[arr.src] == usize::MAX || comp[arr.tgt] == usize::MAX
                {
                    continue;
                }
                let left = ctx.cod.comp(comp[arr.tgt], ctx.f.arrow_map[a]);
                let right = ctx.cod.comp(ctx.g.arrow_map[a], comp[arr.src]);
                if left != right {
                    continue 'cand;
                }
            }
            if descend(ctx, o + 1, comp, max_found)? {
                return Ok(true);
            }
        }
        comp[o] = usize::MAX;
        Ok(false)
    }

    let mut ctx = Ctx {
        dom,
        cod,
        f,
        g,
        iso_only,
        budget: limits.search_nodes,
        nodes: 0,
        found: Vec::new(),
    };
    let mut comp = vec![usize::MAX; n];
    descend(&mut ctx, 0, &mut comp, max_found)?;
    Ok(ctx.found)
}

/// Search for a natural isomorphism `f ≅ g`. A natural transformation whose
/// components are all invertible is a natural isomorphism.
pub fn find_functor_iso(
    f: &FunctorMap,
    g: &FunctorMap,
    limits: &Limits,
) -> Result<Option<FunctorNat>> {
    Ok(enumerate_functor_nats(f, g, true, limits, Some(1))?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;
    use crate::Limits;

    #[test]
    fn functors_from_walking_arrow_to_chain3() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let c3 = std_cats::chain(3, &limits).unwrap();
        // functors 2 → chain3 = pairs (i ≤ j) = 6
        let fs = enumerate_functors(&two, &c3, &limits, None).unwrap();
        assert_eq!(fs.len(), 6);
    }

    #[test]
    fn functors_to_parallel_pair_need_arrow_choice() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let pp = std_cats::parallel_pair(&limits).unwrap();
        // object maps: u must go to an arrow a→b (2 choices) or an identity
        // (2 choices): total 4 functors.
        let fs = enumerate_functors(&two, &pp, &limits, None).unwrap();
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn identity_nat_enumeration() {
        let limits = Limits::default();
        let c3 = std_cats::chain(3, &limits).unwrap();
        let id = FunctorMap::identity(&c3);
        let nats = enumerate_functor_nats(&id, &id, false, &limits, None).unwrap();
        // components x → x in a chain are forced to identities
        assert_eq!(nats.len(), 1);
        assert!(find_functor_iso(&id, &id, &limits).unwrap().is_some());
    }
}
