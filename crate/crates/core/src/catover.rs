//! The category over `X`: totals with projections, morphisms over `X`,
//! discrete (op)fibration inclusions `i^ℓ/i^r` with their `◇ ⊣ i ⊣ □`
//! adjoints, fibered products, sections, components and the
//! discrete-opfibration exponential.

use std::collections::HashMap;
use std::sync::Arc;

use crate::action::{
    exists_left_with, exists_right_with, KanCarrier, LeftAction, RightAction,
};
use crate::fincat::diagram::NatTransform;
use crate::fincat::search::enumerate_functors_constrained;
use crate::fincat::{base_eq, Arrow, Cat, FinCat, FinSet, FunctorMap};
use crate::{Error, Limits, Result};

/// An object of `Cat/X`: a total category with a validated projection.
#[derive(Debug, Clone)]
pub struct OverCat {
    pub total: Cat,
    pub proj: FunctorMap,
}

impl PartialEq for OverCat {
    fn eq(&self, other: &Self) -> bool {
        self.proj == other.proj
    }
}

impl OverCat {
    pub fn new(proj: FunctorMap) -> Result<OverCat> {
        Ok(OverCat { total: Arc::clone(&proj.dom), proj })
    }

    pub fn identity(x: &Cat) -> OverCat {
        OverCat { total: Arc::clone(x), proj: FunctorMap::identity(x) }
    }

    pub fn base(&self) -> &Cat {
        &self.proj.cod
    }

    pub fn objects_over(&self, x: usize) -> Vec<usize> {
        (0..self.total.n_objects()).filter(|&o| self.proj.obj_map[o] == x).collect()
    }

    pub fn arrows_over(&self, f: usize) -> Vec<usize> {
        (0..self.total.n_arrows()).filter(|&a| self.proj.arrow_map[a] == f).collect()
    }
}

fn require_same_base(p: &OverCat, q: &OverCat, what: &str) -> Result<()> {
    if base_eq(p.base(), q.base()) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{what}: objects of Cat/X over different bases")))
    }
}

/// Morphisms `p → q` in `Cat/X`: functors between the totals commuting with
/// the projections. Complete enumeration.
pub fn over_maps(
    p: &OverCat,
    q: &OverCat,
    limits: &Limits,
    max_found: Option<usize>,
) -> Result<Vec<FunctorMap>> {
    require_same_base(p, q, "over_maps")?;
    let mut arrows_over: HashMap<usize, Vec<usize>> = HashMap::new();
    for a in 0..q.total.n_arrows() {
        arrows_over.entry(q.proj.arrow_map[a]).or_default().push(a);
    }
    let q_total = Arc::clone(&q.total);
    let p_proj_obj = p.proj.obj_map.clone();
    let p_proj_arr = p.proj.arrow_map.clone();
    let q_proj_obj = q.proj.obj_map.clone();
    enumerate_functors_constrained(
        &p.total,
        &q.total,
        &move |o| {
            (0..q_proj_obj.len()).filter(|&qo| q_proj_obj[qo] == p_proj_obj[o]).collect()
        },
        &move |a, s, t| {
            arrows_over
                .get(&p_proj_arr[a])
                .map(|cands| {
                    cands
                        .iter()
                        .copied()
                        .filter(|&qa| {
                            q_total.arrow(qa).src == s && q_total.arrow(qa).tgt == t
                        })
                        .collect()
                })
                .unwrap_or_default()
        },
        limits,
        max_found,
    )
}

/// Search for an isomorphism `p ≅ q` in `Cat/X`.
pub fn over_iso(p: &OverCat, q: &OverCat, limits: &Limits) -> Result<Option<FunctorMap>> {
    require_same_base(p, q, "over_iso")?;
    if p.total.n_objects() != q.total.n_objects() || p.total.n_arrows() != q.total.n_arrows() {
        return Ok(None);
    }
    let all = over_maps(p, q, limits, None)?;
    Ok(all.into_iter().find(|h| h.is_bijective()))
}

/// Category of elements of a presheaf (`i^ℓ_X A`): a discrete fibration.
/// Objects are `(x, a ∈ A x)`; for `f : x → y` and `b ∈ A y` there is one
/// arrow `(x, A(f)b) → (y, b)`.
#[derive(Debug, Clone)]
pub struct Elements {
    pub over: OverCat,
    /// per total object: (base object, fiber element)
    pub pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Elements {
    pub fn obj_of(&self, x: usize, e: usize) -> usize {
        self.index[&(x, e)]
    }
}

pub fn elements_left(a: &LeftAction, limits: &Limits) -> Result<Elements> {
    let base = a.base();
    let mut objects = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    let mut obj_proj = Vec::new();
    for x in 0..base.n_objects() {
        for e in 0..a.fiber(x).len() {
            index.insert((x, e), objects.len());
            objects.push(format!("({}|{})", base.object_label(x), a.fiber(x).label(e)));
            pairs.push((x, e));
            obj_proj.push(x);
        }
    }
    // arrow over f : x → y with target element b: (x, A(f)b) → (y, b)
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    let mut arr_proj = Vec::new();
    for f in 0..base.n_arrows() {
        let arr = base.arrow(f);
        for b in 0..a.fiber(arr.tgt).len() {
            arr_index.insert((f, b), arrows.len());
            arrows.push(Arrow {
                id: format!("({}|{})", arr.id, a.fiber(arr.tgt).label(b)),
                src: index[&(arr.src, a.apply(f, b))],
                tgt: index[&(arr.tgt, b)],
            });
            arr_proj.push(f);
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(x, e), &o) in &index {
        identities[o] = arr_index[&(base.identity(x), e)];
    }
    let mut compose = HashMap::new();
    for (&(f, b), &a1) in &arr_index {
        let ftgt = base.arrow(f).tgt;
        for &g in base.arrows_from(ftgt) {
            // (g, c) ∘ (f, b) needs b = A(g)(c)
            for c in 0..a.fiber(base.arrow(g).tgt).len() {
                if a.apply(g, c) == b {
                    compose.insert((arr_index[&(g, c)], a1), arr_index[&(base.comp(g, f), c)]);
                }
            }
        }
    }
    let total = FinCat::from_parts(
        format!("El({})", base.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("elᴸ_{}", base.name),
        total.clone(),
        Arc::clone(base),
        obj_proj,
        arr_proj,
    )?;
    Ok(Elements { over: OverCat::new(proj)?, pairs, index })
}

/// Category of elements of a copresheaf (`i^r_X M`): a discrete opfibration.
/// For `f : x → y` and `m ∈ M x` there is one arrow `(x, m) → (y, M(f)m)`.
pub fn elements_right(m: &RightAction, limits: &Limits) -> Result<Elements> {
    let base = m.base();
    let mut objects = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    let mut obj_proj = Vec::new();
    for x in 0..base.n_objects() {
        for e in 0..m.fiber(x).len() {
            index.insert((x, e), objects.len());
            objects.push(format!("({}|{})", base.object_label(x), m.fiber(x).label(e)));
            pairs.push((x, e));
            obj_proj.push(x);
        }
    }
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    let mut arr_proj = Vec::new();
    for f in 0..base.n_arrows() {
        let arr = base.arrow(f);
        for e in 0..m.fiber(arr.src).len() {
            arr_index.insert((f, e), arrows.len());
            arrows.push(Arrow {
                id: format!("({}|{})", arr.id, m.fiber(arr.src).label(e)),
                src: index[&(arr.src, e)],
                tgt: index[&(arr.tgt, m.apply(f, e))],
            });
            arr_proj.push(f);
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(x, e), &o) in &index {
        identities[o] = arr_index[&(base.identity(x), e)];
    }
    let mut compose = HashMap::new();
    for (&(f, e), &a1) in &arr_index {
        let arr = base.arrow(f);
        for &g in base.arrows_from(arr.tgt) {
            compose.insert(
                (arr_index[&(g, m.apply(f, e))], a1),
                arr_index[&(base.comp(g, f), e)],
            );
        }
    }
    let total = FinCat::from_parts(
        format!("El({})", base.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("elᴿ_{}", base.name),
        total.clone(),
        Arc::clone(base),
        obj_proj,
        arr_proj,
    )?;
    Ok(Elements { over: OverCat::new(proj)?, pairs, index })
}

/// Unique-lifting check: for every `f : x → y` in the base and every total
/// object over `y`, exactly one arrow over `f` with that target.
pub fn is_discrete_fibration(p: &OverCat) -> bool {
    let base = p.base();
    (0..base.n_arrows()).all(|f| {
        let y = base.arrow(f).tgt;
        p.objects_over(y).into_iter().all(|b| {
            p.arrows_over(f).into_iter().filter(|&a| p.total.arrow(a).tgt == b).count() == 1
        })
    })
}

/// Dual: unique lifts with a given source.
pub fn is_discrete_opfibration(p: &OverCat) -> bool {
    let base = p.base();
    (0..base.n_arrows()).all(|f| {
        let x = base.arrow(f).src;
        p.objects_over(x).into_iter().all(|e| {
            p.arrows_over(f).into_iter().filter(|&a| p.total.arrow(a).src == e).count() == 1
        })
    })
}

pub fn is_discrete_bifibration(p: &OverCat) -> bool {
    is_discrete_fibration(p) && is_discrete_opfibration(p)
}

/// Pullback `p ×_X q` in `Cat/X`, with the two projection legs.
pub fn fibered_product_with_legs(
    p: &OverCat,
    q: &OverCat,
    limits: &Limits,
) -> Result<(OverCat, FunctorMap, FunctorMap)> {
    require_same_base(p, q, "fibered_product")?;
    let mut objects = Vec::new();
    let mut obj_index = HashMap::new();
    let mut obj_proj = Vec::new();
    let mut leg_p_obj = Vec::new();
    let mut leg_q_obj = Vec::new();
    for a in 0..p.total.n_objects() {
        for b in 0..q.total.n_objects() {
            if p.proj.obj_map[a] == q.proj.obj_map[b] {
                obj_index.insert((a, b), objects.len());
                objects.push(format!(
                    "({}|{})",
                    p.total.object_label(a),
                    q.total.object_label(b)
                ));
                obj_proj.push(p.proj.obj_map[a]);
                leg_p_obj.push(a);
                leg_q_obj.push(b);
            }
        }
    }
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    let mut arr_proj = Vec::new();
    let mut leg_p_arr = Vec::new();
    let mut leg_q_arr = Vec::new();
    for h in 0..p.total.n_arrows() {
        for k in 0..q.total.n_arrows() {
            if p.proj.arrow_map[h] == q.proj.arrow_map[k] {
                let (ha, ka) = (p.total.arrow(h), q.total.arrow(k));
                arr_index.insert((h, k), arrows.len());
                arrows.push(Arrow {
                    id: format!("({}|{})", ha.id, ka.id),
                    src: obj_index[&(ha.src, ka.src)],
                    tgt: obj_index[&(ha.tgt, ka.tgt)],
                });
                arr_proj.push(p.proj.arrow_map[h]);
                leg_p_arr.push(h);
                leg_q_arr.push(k);
            }
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(a, b), &o) in &obj_index {
        identities[o] = arr_index[&(p.total.identity(a), q.total.identity(b))];
    }
    let mut compose = HashMap::new();
    // componentwise composition
    let arr_list: Vec<(usize, usize)> = {
        let mut v = vec![(0usize, 0usize); arrows.len()];
        for (&(h, k), &i) in &arr_index {
            v[i] = (h, k);
        }
        v
    };
    for (i1, &(h1, k1)) in arr_list.iter().enumerate() {
        for (i2, &(h2, k2)) in arr_list.iter().enumerate() {
            if arrows[i2].src == arrows[i1].tgt {
                compose.insert((i2, i1), arr_index[&(p.total.comp(h2, h1), q.total.comp(k2, k1))]);
            }
        }
    }
    let total = FinCat::from_parts(
        format!("({}×{})", p.total.name, q.total.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        "fp_proj",
        total.clone(),
        Arc::clone(p.base()),
        obj_proj,
        arr_proj,
    )?;
    let leg_p = FunctorMap::new("π1", total.clone(), Arc::clone(&p.total), leg_p_obj, leg_p_arr)?;
    let leg_q = FunctorMap::new("π2", total.clone(), Arc::clone(&q.total), leg_q_obj, leg_q_arr)?;
    Ok((OverCat::new(proj)?, leg_p, leg_q))
}

pub fn fibered_product(p: &OverCat, q: &OverCat, limits: &Limits) -> Result<OverCat> {
    Ok(fibered_product_with_legs(p, q, limits)?.0)
}

/// Substitution in `Cat/−`: pull `p` (over `Y`) back along `f : X → Y`.
pub fn pullback_along(f: &FunctorMap, p: &OverCat, limits: &Limits) -> Result<OverCat> {
    if !base_eq(&f.cod, p.base()) {
        return Err(Error::BaseMismatch("pullback_along: functor must land in the base of p".into()));
    }
    let f_over = OverCat::new(f.clone())?;
    let (_, leg_f, _leg_p) = fibered_product_with_legs(&f_over, p, limits)?;
    // the first leg lands in f_over.total = X and is the pullback projection
    let mut proj = leg_f;
    proj.name = format!("{}*({})", f.name, p.proj.name);
    OverCat::new(proj)
}

/// Connected components of a category: union-find over arrows.
pub fn components_of(cat: &Cat) -> (FinSet, Vec<usize>) {
    let mut uf = crate::util::UnionFind::new(cat.n_objects());
    for a in 0..cat.n_arrows() {
        let arr = cat.arrow(a);
        uf.union(arr.src, arr.tgt);
    }
    let (labels, class_of) = crate::fincat::diagram::class_labels(&mut uf, cat.objects());
    (FinSet::new(labels).expect("class labels distinct"), class_of)
}

/// π₀ of the total category.
pub fn total_components(p: &OverCat) -> FinSet {
    components_of(&p.total).0
}

impl OverCat {
    /// π₀ of the total.
    pub fn components(&self) -> FinSet {
        components_of(&self.total).0
    }
}

/// Sections of `p`: morphisms `id_X → p` in `Cat/X`, with canonical labels.
#[derive(Debug, Clone)]
pub struct SectionSet {
    pub set: FinSet,
    pub items: Vec<FunctorMap>,
}

impl SectionSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position_of(&self, f: &FunctorMap) -> Option<usize> {
        self.items.iter().position(|g| g == f)
    }
}

fn functor_label(f: &FunctorMap) -> String {
    let objs: Vec<String> = f.obj_map.iter().map(|o| o.to_string()).collect();
    let arrs: Vec<String> = f
        .arrow_map
        .iter()
        .enumerate()
        .filter(|&(a, _)| !f.dom.is_identity(a))
        .map(|(_, v)| v.to_string())
        .collect();
    format!("s({};{})", objs.join(","), arrs.join(","))
}

fn section_set(items: Vec<FunctorMap>) -> Result<SectionSet> {
    let labels = items.iter().map(functor_label).collect();
    Ok(SectionSet { set: FinSet::new(labels)?, items })
}

pub fn sections(p: &OverCat, limits: &Limits) -> Result<SectionSet> {
    let id = OverCat::identity(p.base());
    section_set(over_maps(&id, p, limits, None)?)
}

/// `◇^ℓ_X ⊣ i^ℓ_X`: the presheaf reflection of `p`, computed as
/// `∃^ℓ_p I_P`.
pub fn diamond_left(p: &OverCat, limits: &Limits) -> Result<LeftAction> {
    Ok(diamond_left_with(p, limits)?.0)
}

pub fn diamond_left_with(p: &OverCat, limits: &Limits) -> Result<(LeftAction, KanCarrier)> {
    let terminal = LeftAction::terminal(&p.total);
    exists_left_with(&p.proj, &terminal, limits)
}

/// `◇^r_X ⊣ i^r_X`: the copresheaf reflection of `p`, computed as
/// `∃^r_p I_P`.
pub fn diamond_right(p: &OverCat, limits: &Limits) -> Result<RightAction> {
    Ok(diamond_right_with(p, limits)?.0)
}

pub fn diamond_right_with(p: &OverCat, limits: &Limits) -> Result<(RightAction, KanCarrier)> {
    let terminal = RightAction::terminal(&p.total);
    exists_right_with(&p.proj, &terminal, limits)
}

/// Functorial action of `◇^r` on an over-map `h : p → q`.
pub fn diamond_right_map(
    h: &FunctorMap,
    dp: &RightAction,
    cp: &KanCarrier,
    dq: &RightAction,
    cq: &KanCarrier,
) -> Result<NatTransform> {
    let n = dp.base().n_objects();
    let mut comps = vec![Vec::new(); n];
    for y in 0..n {
        let mut comp = vec![usize::MAX; dp.fiber(y).len()];
        for (i, &(a, u, _)) in cp.entries[y].iter().enumerate() {
            let c = cp.class[y][i];
            comp[c] = cq.class_of(y, h.obj_map[a], u, 0);
        }
        comps[y] = comp;
    }
    NatTransform::new(dp.diagram(), dq.diagram(), comps)
}

/// Unit `p → i^r(◇^r p)` of `◇^r ⊣ i^r`, as an over-map.
pub fn unit_diamond_right(
    p: &OverCat,
    dp: &RightAction,
    carrier: &KanCarrier,
    elements: &Elements,
) -> Result<FunctorMap> {
    let base = p.base();
    let obj_map: Vec<usize> = (0..p.total.n_objects())
        .map(|a| {
            let x = p.proj.obj_map[a];
            elements.obj_of(x, carrier.class_of(x, a, base.identity(x), 0))
        })
        .collect();
    // arrows: the elements category of ◇p is a discrete opfibration, so the
    // lift is determined by the source
    let el_total = &elements.over.total;
    let arrow_map: Vec<usize> = (0..p.total.n_arrows())
        .map(|h| {
            let f = p.proj.arrow_map[h];
            let src = obj_map[p.total.arrow(h).src];
            elements
                .over
                .arrows_over(f)
                .into_iter()
                .find(|&a| el_total.arrow(a).src == src)
                .expect("opfibration lift exists")
        })
        .collect();
    let f = FunctorMap::new(
        "unit_◇r",
        Arc::clone(&p.total),
        Arc::clone(el_total),
        obj_map,
        arrow_map,
    )?;
    let _ = dp;
    Ok(f)
}

/// Counit `◇^r(i^r M) → M` of `◇^r ⊣ i^r`.
pub fn counit_diamond_right(
    m: &RightAction,
    elements: &Elements,
    dm: &RightAction,
    carrier: &KanCarrier,
) -> Result<NatTransform> {
    let n = m.base().n_objects();
    let mut comps = vec![Vec::new(); n];
    for y in 0..n {
        let mut comp = vec![usize::MAX; dm.fiber(y).len()];
        for (i, &(o, u, _)) in carrier.entries[y].iter().enumerate() {
            let c = carrier.class[y][i];
            let (_, e) = elements.pairs[o];
            comp[c] = m.apply(u, e);
        }
        comps[y] = comp;
    }
    NatTransform::new(dm.diagram(), m.diagram(), comps)
}

/// The section data behind `□^ℓ p` / `□^r p`: the slice (or coslice) commas
/// and the per-object section sets, in fiber order.
#[derive(Debug, Clone)]
pub struct SquareData {
    pub commas: Vec<crate::fincat::comma::Comma>,
    pub sections: Vec<SectionSet>,
}

/// `□^ℓ_X`: right adjoint to `i^ℓ_X`; `(□^ℓ p)x` is the set of sections of
/// `p` over the slice `X/x`, with the restriction action.
pub fn square_left(p: &OverCat, limits: &Limits) -> Result<LeftAction> {
    Ok(square_left_with(p, limits)?.0)
}

pub fn square_left_with(p: &OverCat, limits: &Limits) -> Result<(LeftAction, SquareData)> {
    let base = p.base();
    let n = base.n_objects();
    let slices: Vec<crate::fincat::comma::Comma> =
        (0..n).map(|x| crate::fincat::comma::slice_comma(base, x, limits)).collect::<Result<_>>()?;
    let mut fibersets = Vec::with_capacity(n);
    for x in 0..n {
        let sl_over = slices[x].over()?;
        let maps = over_maps(&sl_over, p, limits, None)?;
        fibersets.push(section_set(maps)?);
    }
    let fibers: Vec<FinSet> = fibersets.iter().map(|s| s.set.clone()).collect();
    let maps = (0..base.n_arrows())
        .map(|f| -> Result<Vec<usize>> {
            let arr = base.arrow(f);
            let (xp, x) = (arr.src, arr.tgt);
            let post = crate::fincat::comma::slice_postcompose(base, f, &slices[xp], &slices[x])?;
            fibersets[x]
                .items
                .iter()
                .map(|s| -> Result<usize> {
                    let restricted = s.after(&post)?;
                    fibersets[xp].position_of(&restricted).ok_or_else(|| {
                        Error::EngineBug("square_left: restriction is not a section".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let action = LeftAction::new(base, fibers, maps)?;
    Ok((action, SquareData { commas: slices, sections: fibersets }))
}

/// `□^r_X`: right adjoint to `i^r_X`; `(□^r p)x` is the set of sections over
/// the coslice `x\X`.
pub fn square_right(p: &OverCat, limits: &Limits) -> Result<RightAction> {
    Ok(square_right_with(p, limits)?.0)
}

pub fn square_right_with(p: &OverCat, limits: &Limits) -> Result<(RightAction, SquareData)> {
    let base = p.base();
    let n = base.n_objects();
    let coslices: Vec<crate::fincat::comma::Comma> = (0..n)
        .map(|x| crate::fincat::comma::coslice_comma(base, x, limits))
        .collect::<Result<_>>()?;
    let mut fibersets = Vec::with_capacity(n);
    for x in 0..n {
        let co_over = coslices[x].over()?;
        let maps = over_maps(&co_over, p, limits, None)?;
        fibersets.push(section_set(maps)?);
    }
    let fibers: Vec<FinSet> = fibersets.iter().map(|s| s.set.clone()).collect();
    let maps = (0..base.n_arrows())
        .map(|f| -> Result<Vec<usize>> {
            let arr = base.arrow(f);
            let (x, y) = (arr.src, arr.tgt);
            let pre = crate::fincat::comma::coslice_precompose(base, f, &coslices[y], &coslices[x])?;
            fibersets[x]
                .items
                .iter()
                .map(|s| -> Result<usize> {
                    let restricted = s.after(&pre)?;
                    fibersets[y].position_of(&restricted).ok_or_else(|| {
                        Error::EngineBug("square_right: restriction is not a section".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let action = RightAction::new(base, fibers, maps)?;
    Ok((action, SquareData { commas: coslices, sections: fibersets }))
}

/// The exponential `(i^r N)^{i^r M}` of discrete opfibrations, computed by
/// comprehension of the hom profunctor `M ⇒^r N`.
pub fn opfib_exponential(
    m: &RightAction,
    n: &RightAction,
    limits: &Limits,
) -> Result<OverCat> {
    let h = crate::profunctor::hom_arrow(m, n, limits)?;
    Ok(crate::profunctor::comprehend(&h, limits)?.over)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::iso_left;
    use crate::fincat::comma::slice;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn elements_of_terminal_presheaf_is_identity() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let el = elements_left(&LeftAction::terminal(&two), &limits()).unwrap();
        assert_eq!(el.over.total.n_objects(), two.n_objects());
        assert_eq!(el.over.total.n_arrows(), two.n_arrows());
        assert!(over_iso(&el.over, &OverCat::identity(&two), &limits()).unwrap().is_some());
    }

    #[test]
    fn elements_of_representable_is_slice() {
        for cat in std_cats::library(&limits()) {
            for x in 0..cat.n_objects() {
                let rep = LeftAction::representable(&cat, x).unwrap();
                let el = elements_left(&rep, &limits()).unwrap();
                let sl = slice(&cat, x, &limits()).unwrap();
                assert!(
                    over_iso(&el.over, &sl, &limits()).unwrap().is_some(),
                    "El(y_{x}) vs slice in {}",
                    cat.name
                );
            }
        }
    }

    #[test]
    fn elements_left_is_discrete_fibration() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let rep = LeftAction::representable(&c3, 2).unwrap();
        let el = elements_left(&rep, &limits()).unwrap();
        assert!(is_discrete_fibration(&el.over));
        let m = RightAction::representable(&c3, 0).unwrap();
        let er = elements_right(&m, &limits()).unwrap();
        assert!(is_discrete_opfibration(&er.over));
    }

    #[test]
    fn identity_is_a_bifibration_slice_is_not_opfib() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let id = OverCat::identity(&two);
        assert!(is_discrete_bifibration(&id));
        // X/a for X = the walking arrow is a fibration but not an opfibration
        let a = two.object_id("a").unwrap();
        let sl = slice(&two, a, &limits()).unwrap();
        assert!(is_discrete_fibration(&sl));
        assert!(!is_discrete_opfibration(&sl));
    }

    #[test]
    fn fibered_product_with_identity_is_identity() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let sl = slice(&two, 1, &limits()).unwrap();
        let id = OverCat::identity(&two);
        let fp = fibered_product(&sl, &id, &limits()).unwrap();
        assert!(over_iso(&fp, &sl, &limits()).unwrap().is_some());
    }

    #[test]
    fn diamond_left_reflects_elements() {
        // ◇^ℓ(i^ℓ A) ≅ A
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let a = LeftAction::representable(&c3, 1).unwrap();
        let el = elements_left(&a, &limits()).unwrap();
        let d = diamond_left(&el.over, &limits()).unwrap();
        assert!(iso_left(&d, &a, &limits()).unwrap().is_some());
    }

    #[test]
    fn diamond_left_of_identity_is_terminal() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let d = diamond_left(&OverCat::identity(&c3), &limits()).unwrap();
        assert!(iso_left(&d, &LeftAction::terminal(&c3), &limits()).unwrap().is_some());
    }

    #[test]
    fn diamond_matches_comma_components_oracle() {
        // (◇^ℓ p)x = π₀(x ↓ p), computed through an independent comma + BFS
        // component count.
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let sl = slice(&two, 1, &l).unwrap();
        let d = diamond_left(&sl, &l).unwrap();
        for x in 0..two.n_objects() {
            let comma = crate::fincat::comma::comma_from(x, &sl.proj, &l).unwrap();
            let (comps, _) = components_of(&comma.total);
            assert_eq!(d.fiber(x).len(), comps.len());
        }
        let dr = diamond_right(&sl, &l).unwrap();
        for x in 0..two.n_objects() {
            let comma = crate::fincat::comma::comma_to(&sl.proj, x, &l).unwrap();
            let (comps, _) = components_of(&comma.total);
            assert_eq!(dr.fiber(x).len(), comps.len());
        }
    }

    #[test]
    fn square_left_of_identity_is_terminal() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let sq = square_left(&OverCat::identity(&two), &limits()).unwrap();
        assert!(iso_left(&sq, &LeftAction::terminal(&two), &limits()).unwrap().is_some());
    }

    #[test]
    fn square_left_recovers_presheaf_from_elements() {
        // □^ℓ(i^ℓ A) ≅ A
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let el = elements_left(&a, &limits()).unwrap();
        let sq = square_left(&el.over, &limits()).unwrap();
        assert!(iso_left(&sq, &a, &limits()).unwrap().is_some());
    }

    #[test]
    fn square_adjunction_counts() {
        // |Cat/X(i^ℓ A, p)| = |Nat(A, □^ℓ p)|
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let p = slice(&two, 1, &l).unwrap();
        let el = elements_left(&a, &l).unwrap();
        let lhs = over_maps(&el.over, &p, &l, None).unwrap().len();
        let sq = square_left(&p, &l).unwrap();
        let rhs = crate::action::hom_left(&a, &sq, &l).unwrap().len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sections_of_identity_is_singleton() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let s = sections(&OverCat::identity(&c3), &limits()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn sections_of_elements_count_hom_from_terminal() {
        // sections(i^ℓ A) ≅ hom(I, A)
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let el = elements_left(&a, &limits()).unwrap();
        let s = sections(&el.over, &limits()).unwrap();
        let h =
            crate::action::hom_left(&LeftAction::terminal(&two), &a, &limits()).unwrap();
        assert_eq!(s.len(), h.len());
    }

    #[test]
    fn diamond_triangle_identities() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        // triangle 2: i(ε_M) ∘ η_{iM} = id on i^r M
        let m = RightAction::representable(&two, 0).unwrap();
        let el = elements_right(&m, &l).unwrap();
        let (dm, carrier) = diamond_right_with(&el.over, &l).unwrap();
        let counit = counit_diamond_right(&m, &el, &dm, &carrier).unwrap();
        let el_dm = elements_right(&dm, &l).unwrap();
        let unit = unit_diamond_right(&el.over, &dm, &carrier, &el_dm).unwrap();
        // i(ε): El(◇iM) → El(M): (x, class) ↦ (x, ε(class))
        for o in 0..el.over.total.n_objects() {
            let (x, e) = el.pairs[o];
            let u = unit.obj_map[o];
            let (x2, c) = el_dm.pairs[u];
            assert_eq!(x, x2);
            assert_eq!(counit.components[x][c], e);
        }
    }

    #[test]
    fn opfib_exponential_over_terminal_is_function_set() {
        let l = limits();
        let one = std_cats::terminal(&l).unwrap();
        let m = RightAction::constant(&one, &crate::fincat::FinSet::numbered("m", 2));
        let n = RightAction::constant(&one, &crate::fincat::FinSet::numbered("n", 3));
        let e = opfib_exponential(&m, &n, &l).unwrap();
        assert_eq!(e.total.n_objects(), 9);
    }

    #[test]
    fn opfib_exponential_with_terminal_exponent() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let n = RightAction::representable(&two, 0).unwrap();
        let e = opfib_exponential(&RightAction::terminal(&two), &n, &l).unwrap();
        let el_n = elements_right(&n, &l).unwrap();
        assert!(over_iso(&e, &el_n.over, &l).unwrap().is_some());
    }
}
