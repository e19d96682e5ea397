//! Comma categories, slices, coslices and intervals, with their projections
//! and the index data needed to build induced functors between them.

use std::collections::HashMap;

use super::{Arrow, Cat, FinCat, FunctorMap};
use crate::catover::OverCat;
use crate::{Limits, Result};

/// A comma category together with the pairs its objects and arrows encode.
///
/// For `comma_to(f, x)` (that is `(f ↓ x)`): objects are `(a, u : f a → x)`
/// and arrows are `(h : a → a', u' : f a' → x)`, from `(src h, u'∘f(h))` to
/// `(tgt h, u')`.
///
/// For `comma_from(x, f)` (that is `(x ↓ f)`): objects are `(a, u : x → f a)`
/// and arrows are `(h, u : x → f(src h))`, from `(src h, u)` to
/// `(tgt h, f(h)∘u)`.
#[derive(Debug, Clone)]
pub struct Comma {
    pub total: Cat,
    /// projection to the domain of `f`
    pub proj: FunctorMap,
    pub objs: Vec<(usize, usize)>,
    pub arrs: Vec<(usize, usize)>,
    obj_index: HashMap<(usize, usize), usize>,
    arr_index: HashMap<(usize, usize), usize>,
}

impl Comma {
    pub fn obj_of(&self, a: usize, u: usize) -> usize {
        self.obj_index[&(a, u)]
    }

    pub fn try_obj_of(&self, a: usize, u: usize) -> Option<usize> {
        self.obj_index.get(&(a, u)).copied()
    }

    pub fn arr_of(&self, h: usize, u: usize) -> usize {
        self.arr_index[&(h, u)]
    }

    pub fn over(&self) -> Result<OverCat> {
        OverCat::new(self.proj.clone())
    }
}

/// The comma category `(f ↓ x)` for `f : P → X`.
pub fn comma_to(f: &FunctorMap, x: usize, limits: &Limits) -> Result<Comma> {
    let p = &f.dom;
    let xc = &f.cod;
    let mut objects = Vec::new();
    let mut obj_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut objs = Vec::new();
    let mut obj_proj = Vec::new();
    for a in 0..p.n_objects() {
        for u in xc.hom(f.obj_map[a], x) {
            obj_index.insert((a, u), objects.len());
            objects.push(format!("({}|{})", p.object_label(a), xc.arrow(u).id));
            objs.push((a, u));
            obj_proj.push(a);
        }
    }
    let mut arrows = Vec::new();
    let mut arr_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut arrs = Vec::new();
    let mut arr_proj = Vec::new();
    for h in 0..p.n_arrows() {
        let ha = p.arrow(h);
        for up in xc.hom(f.obj_map[ha.tgt], x) {
            let u = xc.comp(up, f.arrow_map[h]);
            arr_index.insert((h, up), arrows.len());
            arrows.push(Arrow {
                id: format!("({}|{})", ha.id, xc.arrow(up).id),
                src: obj_index[&(ha.src, u)],
                tgt: obj_index[&(ha.tgt, up)],
            });
            arrs.push((h, up));
            arr_proj.push(h);
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(a, u), &o) in &obj_index {
        identities[o] = arr_index[&(p.identity(a), u)];
    }
    let mut compose = HashMap::new();
    for (a1, &(h1, _u1)) in arrs.iter().enumerate() {
        for (a2, &(h2, u2)) in arrs.iter().enumerate() {
            if arrows[a2].src == arrows[a1].tgt {
                compose.insert((a2, a1), arr_index[&(p.comp(h2, h1), u2)]);
            }
        }
    }
    let total = FinCat::from_parts(
        format!("({}↓{})", f.name, xc.object_label(x)),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("proj_({}↓{})", f.name, xc.object_label(x)),
        total.clone(),
        p.clone(),
        obj_proj,
        arr_proj,
    )?;
    Ok(Comma { total, proj, objs, arrs, obj_index, arr_index })
}

/// The comma category `(x ↓ f)`.
pub fn comma_from(x: usize, f: &FunctorMap, limits: &Limits) -> Result<Comma> {
    let p = &f.dom;
    let xc = &f.cod;
    let mut objects = Vec::new();
    let mut obj_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut objs = Vec::new();
    let mut obj_proj = Vec::new();
    for a in 0..p.n_objects() {
        for u in xc.hom(x, f.obj_map[a]) {
            obj_index.insert((a, u), objects.len());
            objects.push(format!("({}|{})", p.object_label(a), xc.arrow(u).id));
            objs.push((a, u));
            obj_proj.push(a);
        }
    }
    let mut arrows = Vec::new();
    let mut arr_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut arrs = Vec::new();
    let mut arr_proj = Vec::new();
    for h in 0..p.n_arrows() {
        let ha = p.arrow(h);
        for u in xc.hom(x, f.obj_map[ha.src]) {
            let u2 = xc.comp(f.arrow_map[h], u);
            arr_index.insert((h, u), arrows.len());
            arrows.push(Arrow {
                id: format!("({}|{})", ha.id, xc.arrow(u).id),
                src: obj_index[&(ha.src, u)],
                tgt: obj_index[&(ha.tgt, u2)],
            });
            arrs.push((h, u));
            arr_proj.push(h);
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(a, u), &o) in &obj_index {
        identities[o] = arr_index[&(p.identity(a), u)];
    }
    let mut compose = HashMap::new();
    for (a1, &(h1, u1)) in arrs.iter().enumerate() {
        for (a2, &(h2, _u2)) in arrs.iter().enumerate() {
            if arrows[a2].src == arrows[a1].tgt {
                compose.insert((a2, a1), arr_index[&(p.comp(h2, h1), u1)]);
            }
        }
    }
    let total = FinCat::from_parts(
        format!("({}↓{})", xc.object_label(x), f.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("proj_({}↓{})", xc.object_label(x), f.name),
        total.clone(),
        p.clone(),
        obj_proj,
        arr_proj,
    )?;
    Ok(Comma { total, proj, objs, arrs, obj_index, arr_index })
}

/// The slice `X/x` as a comma `(id ↓ x)`.
pub fn slice_comma(x_cat: &Cat, x: usize, limits: &Limits) -> Result<Comma> {
    comma_to(&FunctorMap::identity(x_cat), x, limits)
}

/// The coslice `x\X` as a comma `(x ↓ id)`.
pub fn coslice_comma(x_cat: &Cat, x: usize, limits: &Limits) -> Result<Comma> {
    comma_from(x, &FunctorMap::identity(x_cat), limits)
}

/// The slice `X/x` with its forgetful projection.
pub fn slice(x_cat: &Cat, x: usize, limits: &Limits) -> Result<OverCat> {
    slice_comma(x_cat, x, limits)?.over()
}

/// The coslice `x\X` with its forgetful projection.
pub fn coslice(x_cat: &Cat, x: usize, limits: &Limits) -> Result<OverCat> {
    coslice_comma(x_cat, x, limits)?.over()
}

/// Post-composition functor `X/x' → X/x` induced by `f : x' → x`; it is a
/// map over `X`.
pub fn slice_postcompose(
    x_cat: &Cat,
    f: usize,
    src: &Comma,
    dst: &Comma,
) -> Result<FunctorMap> {
    let obj_map = src
        .objs
        .iter()
        .map(|&(w, u)| dst.obj_of(w, x_cat.comp(f, u)))
        .collect();
    let arrow_map = src
        .arrs
        .iter()
        .map(|&(h, up)| dst.arr_of(h, x_cat.comp(f, up)))
        .collect();
    FunctorMap::new(
        format!("{}∘−", x_cat.arrow(f).id),
        src.total.clone(),
        dst.total.clone(),
        obj_map,
        arrow_map,
    )
}

/// Pre-composition functor `y\X → x\X` induced by `f : x → y`.
pub fn coslice_precompose(
    x_cat: &Cat,
    f: usize,
    src: &Comma,
    dst: &Comma,
) -> Result<FunctorMap> {
    let obj_map = src
        .objs
        .iter()
        .map(|&(w, u)| dst.obj_of(w, x_cat.comp(u, f)))
        .collect();
    let arrow_map = src
        .arrs
        .iter()
        .map(|&(h, u)| dst.arr_of(h, x_cat.comp(u, f)))
        .collect();
    FunctorMap::new(
        format!("−∘{}", x_cat.arrow(f).id),
        src.total.clone(),
        dst.total.clone(),
        obj_map,
        arrow_map,
    )
}

/// The interval category `[x,y] = x\X ×_X X/y`: objects are factorizations
/// `x → z → y`, over `X` via the middle object.
pub fn interval(x_cat: &Cat, x: usize, y: usize, limits: &Limits) -> Result<OverCat> {
    let co = coslice(x_cat, x, limits)?;
    let sl = slice(x_cat, y, limits)?;
    crate::catover::fibered_product(&co, &sl, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn slice_of_terminal_is_terminal() {
        let one = std_cats::terminal(&limits()).unwrap();
        let s = slice(&one, 0, &limits()).unwrap();
        assert_eq!(s.total.n_objects(), 1);
        assert_eq!(s.total.n_arrows(), 1);
    }

    #[test]
    fn slice_of_walking_arrow_over_target() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let b = two.object_id("b").unwrap();
        let s = slice(&two, b, &limits()).unwrap();
        // objects: u : a→b and id_b; arrows: two identities plus one over u
        assert_eq!(s.total.n_objects(), 2);
        assert_eq!(s.total.n_arrows(), 3);
    }

    #[test]
    fn slices_are_connected() {
        for cat in std_cats::library(&limits()) {
            for x in 0..cat.n_objects() {
                let s = slice(&cat, x, &limits()).unwrap();
                let (comps, _) = crate::catover::components_of(&s.total);
                assert_eq!(comps.len(), 1, "slice {}/{x} disconnected", cat.name);
            }
        }
    }

    #[test]
    fn slice_postcompose_is_a_functor_over_x() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let f = c3.arrow_id("c1<c2").unwrap();
        let s1 = slice_comma(&c3, 1, &limits()).unwrap();
        let s2 = slice_comma(&c3, 2, &limits()).unwrap();
        let post = slice_postcompose(&c3, f, &s1, &s2).unwrap();
        // commutes with the projections
        let lhs = s2.proj.after(&post).unwrap();
        assert_eq!(lhs.obj_map, s1.proj.obj_map);
        assert_eq!(lhs.arrow_map, s1.proj.arrow_map);
    }

    #[test]
    fn interval_of_walking_arrow() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let (a, b) = (two.object_id("a").unwrap(), two.object_id("b").unwrap());
        let iv = interval(&two, a, b, &limits()).unwrap();
        // factorizations a→z→b: (id_a, u) and (u, id_b)
        assert_eq!(iv.total.n_objects(), 2);
        assert_eq!(iv.total.n_arrows(), 3);
    }

    #[test]
    fn interval_on_terminal_is_terminal() {
        let one = std_cats::terminal(&limits()).unwrap();
        let iv = interval(&one, 0, 0, &limits()).unwrap();
        assert_eq!(iv.total.n_objects(), 1);
    }
}
