//! Quantification along a functor `f : X → Y`: the left adjoint `∃_f`
//! (pointwise Kan colimit, a quotient of a sum over hom-sets) and the right
//! adjoint `∀_f` (pointwise hom into substituted representables), for both
//! variances, together with their units, counits and adjunction transposes.

use std::sync::Arc;

use super::{hom_left, hom_right, substitute_left, substitute_right, LeftAction, RightAction};
use crate::fincat::diagram::{self, Diagram, NatTransform};
use crate::fincat::{base_eq, opposite, FinSet, FunctorMap};
use crate::{Error, Limits, Result};

/// The pre-quotient carrier of a `∃_f` fiber: which `(x, hom-arrow, element)`
/// triples each class contains. Kept so canonical maps (units, counits,
/// transposes) can be computed instead of searched.
#[derive(Debug, Clone)]
pub struct KanCarrier {
    /// per target object: list of (x, arrow of Y, element) in carrier order
    pub entries: Vec<Vec<(usize, usize, usize)>>,
    /// per target object: class of each carrier entry
    pub class: Vec<Vec<usize>>,
}

impl KanCarrier {
    /// Class of the triple `(x, u, e)` in the fiber over `y`.
    pub fn class_of(&self, y: usize, x: usize, u: usize, e: usize) -> usize {
        let idx = self.entries[y]
            .iter()
            .position(|&(x2, u2, e2)| (x2, u2, e2) == (x, u, e))
            .expect("triple must be in the carrier");
        self.class[y][idx]
    }
}

/// `∃^ℓ_f A` for `f : X → Y`, `A` a presheaf on `X`:
/// `(∃^ℓ_f A) y = (Σ_x Y(y, f x) × A x) / zigzag`.
pub fn exists_left(f: &FunctorMap, a: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    Ok(exists_left_with(f, a, limits)?.0)
}

pub fn exists_left_with(
    f: &FunctorMap,
    a: &LeftAction,
    limits: &Limits,
) -> Result<(LeftAction, KanCarrier)> {
    if !base_eq(&f.dom, a.base()) {
        return Err(Error::BaseMismatch("exists_left: action must live over the functor domain".into()));
    }
    let x_cat = &f.dom;
    let y_cat = &f.cod;
    let y_op = opposite(y_cat);

    // carrier: per y, all (x, u: y → fx, e ∈ A x)
    let mut entries: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); y_cat.n_objects()];
    for y in 0..y_cat.n_objects() {
        for x in 0..x_cat.n_objects() {
            for u in y_cat.hom(y, f.obj_map[x]) {
                for e in 0..a.fiber(x).len() {
                    entries[y].push((x, u, e));
                }
            }
        }
    }
    let index_of = |y: usize, x: usize, u: usize, e: usize| {
        entries[y].iter().position(|&t| t == (x, u, e)).expect("carrier entry")
    };
    let fibers: Vec<FinSet> = entries
        .iter()
        .map(|es| {
            FinSet::new(
                es.iter()
                    .map(|&(x, u, e)| {
                        format!(
                            "({}|{}|{})",
                            x_cat.object_label(x),
                            y_cat.arrow(u).id,
                            a.fiber(x).label(e)
                        )
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect::<Result<_>>()?;
    // presheaf action: g : y' → y sends (u: y → fx, e) to (u∘g, e)
    let maps: Vec<Vec<usize>> = (0..y_cat.n_arrows())
        .map(|g| {
            let arr = y_cat.arrow(g);
            entries[arr.tgt]
                .iter()
                .map(|&(x, u, e)| index_of(arr.src, x, y_cat.comp(u, g), e))
                .collect()
        })
        .collect();
    let pre = Diagram::new(Arc::clone(&y_op), fibers, maps)?;
    // zigzag relations: for w : x → x' in X, u ∈ Y(y, fx), e' ∈ A x':
    //   (f(w)∘u, e') ~ (u, A(w) e')
    let mut seeds = Vec::new();
    for w in 0..x_cat.n_arrows() {
        if x_cat.is_identity(w) {
            continue;
        }
        let warr = x_cat.arrow(w);
        let fw = f.arrow_map[w];
        for y in 0..y_cat.n_objects() {
            for u in y_cat.hom(y, f.obj_map[warr.src]) {
                let fwu = y_cat.comp(fw, u);
                for ep in 0..a.fiber(warr.tgt).len() {
                    seeds.push((
                        y,
                        index_of(y, warr.tgt, fwu, ep),
                        index_of(y, warr.src, u, a.apply(w, ep)),
                    ));
                }
            }
        }
    }
    let (q, class) = diagram::quotient(&pre, &seeds)?;
    let action = LeftAction::from_op_diagram(y_cat, q)?;
    let _ = limits;
    Ok((action, KanCarrier { entries, class }))
}

/// `∃^r_f M` for `f : X → Y`, `M` a copresheaf on `X`:
/// `(∃^r_f M) y = (Σ_x Y(f x, y) × M x) / zigzag`.
pub fn exists_right(f: &FunctorMap, m: &RightAction, limits: &Limits) -> Result<RightAction> {
    Ok(exists_right_with(f, m, limits)?.0)
}

pub fn exists_right_with(
    f: &FunctorMap,
    m: &RightAction,
    limits: &Limits,
) -> Result<(RightAction, KanCarrier)> {
    if !base_eq(&f.dom, m.base()) {
        return Err(Error::BaseMismatch("exists_right: action must live over the functor domain".into()));
    }
    let x_cat = &f.dom;
    let y_cat = &f.cod;

    let mut entries: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); y_cat.n_objects()];
    for y in 0..y_cat.n_objects() {
        for x in 0..x_cat.n_objects() {
            for u in y_cat.hom(f.obj_map[x], y) {
                for e in 0..m.fiber(x).len() {
                    entries[y].push((x, u, e));
                }
            }
        }
    }
    let index_of = |y: usize, x: usize, u: usize, e: usize| {
        entries[y].iter().position(|&t| t == (x, u, e)).expect("carrier entry")
    };
    let fibers: Vec<FinSet> = entries
        .iter()
        .map(|es| {
            FinSet::new(
                es.iter()
                    .map(|&(x, u, e)| {
                        format!(
                            "({}|{}|{})",
                            x_cat.object_label(x),
                            y_cat.arrow(u).id,
                            m.fiber(x).label(e)
                        )
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect::<Result<_>>()?;
    // copresheaf action: g : y → y' sends (u: fx → y, e) to (g∘u, e)
    let maps: Vec<Vec<usize>> = (0..y_cat.n_arrows())
        .map(|g| {
            let arr = y_cat.arrow(g);
            entries[arr.src]
                .iter()
                .map(|&(x, u, e)| index_of(arr.tgt, x, y_cat.comp(g, u), e))
                .collect()
        })
        .collect();
    let pre = Diagram::new(Arc::clone(y_cat), fibers, maps)?;
    // zigzag: for w : x → x', u' ∈ Y(fx', y), e ∈ M x:
    //   (u'∘f(w), e) ~ (u', M(w) e)
    let mut seeds = Vec::new();
    for w in 0..x_cat.n_arrows() {
        if x_cat.is_identity(w) {
            continue;
        }
        let warr = x_cat.arrow(w);
        let fw = f.arrow_map[w];
        for y in 0..y_cat.n_objects() {
            for up in y_cat.hom(f.obj_map[warr.tgt], y) {
                let upfw = y_cat.comp(up, fw);
                for e in 0..m.fiber(warr.src).len() {
                    seeds.push((
                        y,
                        index_of(y, warr.src, upfw, e),
                        index_of(y, warr.tgt, up, m.apply(w, e)),
                    ));
                }
            }
        }
    }
    let (q, class) = diagram::quotient(&pre, &seeds)?;
    let _ = limits;
    Ok((RightAction::from_diagram(q), KanCarrier { entries, class }))
}

/// `∀^ℓ_f A`: fiber at `y` is `Nat_X(f^ℓ(∃^ℓ_y I), A)`, the right adjoint to
/// substitution on presheaves.
pub fn forall_left(f: &FunctorMap, a: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    if !base_eq(&f.dom, a.base()) {
        return Err(Error::BaseMismatch("forall_left: action must live over the functor domain".into()));
    }
    let y_cat = &f.cod;
    let n = y_cat.n_objects();
    let mut weights = Vec::with_capacity(n);
    let mut homs = Vec::with_capacity(n);
    for y in 0..n {
        let w = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        homs.push(hom_left(&w, a, limits)?);
        weights.push(w);
    }
    let fibers: Vec<FinSet> = homs.iter().map(|h| h.set.clone()).collect();
    // action of g : y' → y precomposes with the weight map
    // f^ℓ(y_g) : f^ℓ(∃^ℓ_{y'} I) → f^ℓ(∃^ℓ_y I), u ↦ g∘u.
    let maps = (0..y_cat.n_arrows())
        .map(|g| -> Result<Vec<usize>> {
            let arr = y_cat.arrow(g);
            let (yp, y) = (arr.src, arr.tgt);
            homs[y]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                        .map(|x| {
                            weights[yp]
                                .fiber(x)
                                .labels()
                                .iter()
                                .map(|l| {
                                    let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                                    let gu = y_cat.comp(g, u);
                                    let i = weights[y]
                                        .fiber(x)
                                        .index_of(&y_cat.arrow(gu).id)
                                        .expect("hom closed under composition");
                                    alpha.components[x][i]
                                })
                                .collect()
                        })
                        .collect();
                    homs[yp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("forall_left: precomposed family not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    LeftAction::new(y_cat, fibers, maps)
}

/// `∀^r_f M`: fiber at `y` is `Nat_X(f^r(∃^r_y I), M)`.
pub fn forall_right(f: &FunctorMap, m: &RightAction, limits: &Limits) -> Result<RightAction> {
    if !base_eq(&f.dom, m.base()) {
        return Err(Error::BaseMismatch("forall_right: action must live over the functor domain".into()));
    }
    let y_cat = &f.cod;
    let n = y_cat.n_objects();
    let mut weights = Vec::with_capacity(n);
    let mut homs = Vec::with_capacity(n);
    for y in 0..n {
        let w = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        homs.push(hom_right(&w, m, limits)?);
        weights.push(w);
    }
    let fibers: Vec<FinSet> = homs.iter().map(|h| h.set.clone()).collect();
    // action of g : y → y' precomposes with f^r(∃^r_g) : f^r(∃^r_{y'} I) → f^r(∃^r_y I), u ↦ u∘g.
    let maps = (0..y_cat.n_arrows())
        .map(|g| -> Result<Vec<usize>> {
            let arr = y_cat.arrow(g);
            let (y, yp) = (arr.src, arr.tgt);
            homs[y]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                        .map(|x| {
                            weights[yp]
                                .fiber(x)
                                .labels()
                                .iter()
                                .map(|l| {
                                    let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                                    let ug = y_cat.comp(u, g);
                                    let i = weights[y]
                                        .fiber(x)
                                        .index_of(&y_cat.arrow(ug).id)
                                        .expect("hom closed under composition");
                                    alpha.components[x][i]
                                })
                                .collect()
                        })
                        .collect();
                    homs[yp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("forall_right: precomposed family not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    RightAction::new(y_cat, fibers, maps)
}

/// Counit `∃^ℓ_f f^ℓ B → B` at a presheaf `B` on `Y`: `[(u, b)] ↦ B(u)(b)`.
pub fn counit_exists_left(
    f: &FunctorMap,
    b: &LeftAction,
    limits: &Limits,
) -> Result<(LeftAction, NatTransform)> {
    let fb = substitute_left(f, b)?;
    let (e, carrier) = exists_left_with(f, &fb, limits)?;
    let comps = canonical_from_carrier_left(&carrier, &e, b, |y, _x, u, eidx| {
        let _ = y;
        b.apply(u, eidx)
    });
    let t = NatTransform::new(e.diagram(), b.diagram(), comps)?;
    Ok((e, t))
}

/// Counit `∃^r_f f^r N → N` at a copresheaf `N` on `Y`: `[(u, m)] ↦ N(u)(m)`.
pub fn counit_exists_right(
    f: &FunctorMap,
    n: &RightAction,
    limits: &Limits,
) -> Result<(RightAction, NatTransform)> {
    let fn_ = substitute_right(f, n)?;
    let (e, carrier) = exists_right_with(f, &fn_, limits)?;
    let comps = canonical_from_carrier_right(&carrier, &e, n, |y, _x, u, eidx| {
        let _ = y;
        n.apply(u, eidx)
    });
    let t = NatTransform::new(e.diagram(), n.diagram(), comps)?;
    Ok((e, t))
}

fn canonical_from_carrier_left(
    carrier: &KanCarrier,
    e: &LeftAction,
    target: &LeftAction,
    mut per_entry: impl FnMut(usize, usize, usize, usize) -> usize,
) -> Vec<Vec<usize>> {
    let n = e.base().n_objects();
    let mut comps = vec![Vec::new(); n];
    for y in 0..n {
        let mut comp = vec![usize::MAX; e.fiber(y).len()];
        for (i, &(x, u, el)) in carrier.entries[y].iter().enumerate() {
            let c = carrier.class[y][i];
            let v = per_entry(y, x, u, el);
            debug_assert!(comp[c] == usize::MAX || comp[c] == v, "class map ill-defined");
            comp[c] = v;
        }
        comps[y] = comp;
    }
    let _ = target;
    comps
}

fn canonical_from_carrier_right(
    carrier: &KanCarrier,
    e: &RightAction,
    target: &RightAction,
    mut per_entry: impl FnMut(usize, usize, usize, usize) -> usize,
) -> Vec<Vec<usize>> {
    let n = e.base().n_objects();
    let mut comps = vec![Vec::new(); n];
    for y in 0..n {
        let mut comp = vec![usize::MAX; e.fiber(y).len()];
        for (i, &(x, u, el)) in carrier.entries[y].iter().enumerate() {
            let c = carrier.class[y][i];
            let v = per_entry(y, x, u, el);
            debug_assert!(comp[c] == usize::MAX || comp[c] == v, "class map ill-defined");
            comp[c] = v;
        }
        comps[y] = comp;
    }
    let _ = target;
    comps
}

/// Unit `B → ∀^ℓ_f f^ℓ B` of `f^ℓ ⊣ ∀^ℓ_f`: an element `b ∈ B y` goes to the
/// family `u ∈ Y(f x, y)... ↦ B(u)(b)`.
pub fn unit_forall_left(
    f: &FunctorMap,
    b: &LeftAction,
    limits: &Limits,
) -> Result<(LeftAction, NatTransform)> {
    let fb = substitute_left(f, b)?;
    let fa = forall_left(f, &fb, limits)?;
    // rebuild the hom context to locate families
    let y_cat = &f.cod;
    let mut comps = Vec::with_capacity(y_cat.n_objects());
    for y in 0..y_cat.n_objects() {
        let w = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        let hs = hom_left(&w, &fb, limits)?;
        let mut comp = Vec::with_capacity(b.fiber(y).len());
        for bi in 0..b.fiber(y).len() {
            let family: Vec<Vec<usize>> = (0..f.dom.n_objects())
                .map(|x| {
                    w.fiber(x)
                        .labels()
                        .iter()
                        .map(|l| {
                            let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                            b.apply(u, bi)
                        })
                        .collect()
                })
                .collect();
            let pos = hs.position_of(&family).ok_or_else(|| {
                Error::EngineBug("unit_forall_left: canonical family not natural".into())
            })?;
            comp.push(pos);
        }
        comps.push(comp);
    }
    let t = NatTransform::new(b.diagram(), fa.diagram(), comps)?;
    Ok((fa, t))
}

/// Unit `N → ∀^r_f f^r N` of `f^r ⊣ ∀^r_f`.
pub fn unit_forall_right(
    f: &FunctorMap,
    n: &RightAction,
    limits: &Limits,
) -> Result<(RightAction, NatTransform)> {
    let fn_ = substitute_right(f, n)?;
    let fa = forall_right(f, &fn_, limits)?;
    let y_cat = &f.cod;
    let mut comps = Vec::with_capacity(y_cat.n_objects());
    for y in 0..y_cat.n_objects() {
        let w = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        let hs = hom_right(&w, &fn_, limits)?;
        let mut comp = Vec::with_capacity(n.fiber(y).len());
        for ni in 0..n.fiber(y).len() {
            let family: Vec<Vec<usize>> = (0..f.dom.n_objects())
                .map(|x| {
                    w.fiber(x)
                        .labels()
                        .iter()
                        .map(|l| {
                            let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                            n.apply(u, ni)
                        })
                        .collect()
                })
                .collect();
            let pos = hs.position_of(&family).ok_or_else(|| {
                Error::EngineBug("unit_forall_right: canonical family not natural".into())
            })?;
            comp.push(pos);
        }
        comps.push(comp);
    }
    let t = NatTransform::new(n.diagram(), fa.diagram(), comps)?;
    Ok((fa, t))
}

/// Transpose `Nat_Y(∃^ℓ_f A, B) → Nat_X(A, f^ℓ B)` of the `∃ ⊣ f^*`
/// adjunction: `σ̂_x(a) = σ_{f x}([id, a])`.
pub fn transpose_from_exists_left(
    f: &FunctorMap,
    a: &LeftAction,
    b: &LeftAction,
    carrier: &KanCarrier,
    sigma: &NatTransform,
) -> Result<NatTransform> {
    let fb = substitute_left(f, b)?;
    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
        .map(|x| {
            let fx = f.obj_map[x];
            (0..a.fiber(x).len())
                .map(|e| sigma.components[fx][carrier.class_of(fx, x, f.cod.identity(fx), e)])
                .collect()
        })
        .collect();
    NatTransform::new(a.diagram(), fb.diagram(), comps)
}

/// Transpose `Nat_X(A, f^ℓ B) → Nat_Y(∃^ℓ_f A, B)`: `[(u, a)] ↦ B(u)(τ_x(a))`.
pub fn transpose_to_exists_left(
    f: &FunctorMap,
    a: &LeftAction,
    b: &LeftAction,
    exists: &LeftAction,
    carrier: &KanCarrier,
    tau: &NatTransform,
) -> Result<NatTransform> {
    let _ = (f, a);
    let comps = canonical_from_carrier_left(carrier, exists, b, |_, x, u, e| {
        b.apply(u, tau.components[x][e])
    });
    NatTransform::new(exists.diagram(), b.diagram(), comps)
}

/// Transpose `Nat_Y(∃^r_f M, N) → Nat_X(M, f^r N)`.
pub fn transpose_from_exists_right(
    f: &FunctorMap,
    m: &RightAction,
    n: &RightAction,
    carrier: &KanCarrier,
    sigma: &NatTransform,
) -> Result<NatTransform> {
    let fn_ = substitute_right(f, n)?;
    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
        .map(|x| {
            let fx = f.obj_map[x];
            (0..m.fiber(x).len())
                .map(|e| sigma.components[fx][carrier.class_of(fx, x, f.cod.identity(fx), e)])
                .collect()
        })
        .collect();
    NatTransform::new(m.diagram(), fn_.diagram(), comps)
}

/// Transpose `Nat_X(M, f^r N) → Nat_Y(∃^r_f M, N)`.
pub fn transpose_to_exists_right(
    f: &FunctorMap,
    m: &RightAction,
    n: &RightAction,
    exists: &RightAction,
    carrier: &KanCarrier,
    tau: &NatTransform,
) -> Result<NatTransform> {
    let _ = (f, m);
    let comps = canonical_from_carrier_right(carrier, exists, n, |_, x, u, e| {
        n.apply(u, tau.components[x][e])
    });
    NatTransform::new(exists.diagram(), n.diagram(), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{iso_left, iso_right};
    use crate::fincat::search::enumerate_functors;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn exists_along_identity_is_identity_up_to_iso() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let id = FunctorMap::identity(&two);
        let e = exists_left(&id, &a, &limits()).unwrap();
        assert!(iso_left(&e, &a, &limits()).unwrap().is_some());
        let m = RightAction::representable(&two, 0).unwrap();
        let e = exists_right(&id, &m, &limits()).unwrap();
        assert!(iso_right(&e, &m, &limits()).unwrap().is_some());
    }

    #[test]
    fn representable_agrees_with_exists_along_point() {
        // ∃^ℓ_x I constructed from hom-sets matches the general ∃ along 1 → X.
        for cat in std_cats::library(&limits()) {
            for x in 0..cat.n_objects() {
                let pt = FunctorMap::point(&cat, x, &limits()).unwrap();
                let one_terminal = LeftAction::terminal(&pt.dom);
                let via_exists = exists_left(&pt, &one_terminal, &limits()).unwrap();
                let direct = LeftAction::representable(&cat, x).unwrap();
                assert!(
                    iso_left(&via_exists, &direct, &limits()).unwrap().is_some(),
                    "category {} object {}",
                    cat.name,
                    x
                );
            }
        }
    }

    #[test]
    fn slice_total_is_connected() {
        // ∃^ℓ_X ∃^ℓ_x I ≅ I over the terminal category: the colimit of a
        // representable is a point.
        let c3 = std_cats::chain(3, &limits()).unwrap();
        for x in 0..3 {
            let rep = LeftAction::representable(&c3, x).unwrap();
            let bang = FunctorMap::bang(&c3, &limits()).unwrap();
            let col = exists_left(&bang, &rep, &limits()).unwrap();
            assert_eq!(col.fiber(0).len(), 1);
        }
    }

    #[test]
    fn exists_forall_adjunction_counts() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        for f in enumerate_functors(&two, &c3, &l, None).unwrap() {
            let a = LeftAction::representable(&two, 1).unwrap();
            let b = LeftAction::representable(&c3, 1).unwrap();
            // |hom(∃_f A, B)| = |hom(A, f^ℓ B)|
            let lhs = hom_left(&exists_left(&f, &a, &l).unwrap(), &b, &l).unwrap().len();
            let rhs = hom_left(&a, &substitute_left(&f, &b).unwrap(), &l).unwrap().len();
            assert_eq!(lhs, rhs);
            // |hom(f^ℓ B, A—)| = |hom(B, ∀_f A)|
            let lhs2 = hom_left(&substitute_left(&f, &b).unwrap(), &a, &l).unwrap().len();
            let rhs2 = hom_left(&b, &forall_left(&f, &a, &l).unwrap(), &l).unwrap().len();
            assert_eq!(lhs2, rhs2);
        }
    }

    #[test]
    fn exists_transposes_are_mutually_inverse() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = enumerate_functors(&two, &c3, &l, None)
            .unwrap()
            .into_iter()
            .find(|f| f.obj_map == vec![0, 2])
            .unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let b = LeftAction::representable(&c3, 2).unwrap();
        let (ea, carrier) = exists_left_with(&f, &a, &l).unwrap();
        let homs = hom_left(&ea, &b, &l).unwrap();
        for sigma in &homs.items {
            let tau = transpose_from_exists_left(&f, &a, &b, &carrier, sigma).unwrap();
            let back = transpose_to_exists_left(&f, &a, &b, &ea, &carrier, &tau).unwrap();
            assert_eq!(back.components, sigma.components);
        }
        let fb = substitute_left(&f, &b).unwrap();
        let homs2 = hom_left(&a, &fb, &l).unwrap();
        for tau in &homs2.items {
            let sigma = transpose_to_exists_left(&f, &a, &b, &ea, &carrier, tau).unwrap();
            let back = transpose_from_exists_left(&f, &a, &b, &carrier, &sigma).unwrap();
            assert_eq!(back.components, tau.components);
        }
    }

    #[test]
    fn counit_of_exists_along_full_inclusion_is_iso() {
        // walking arrow into walking iso: a fully faithful, absolutely dense
        // inclusion (the iso collapses), so the counit is pointwise bijective.
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let iso = std_cats::walking_iso(&l).unwrap();
        let f = enumerate_functors(&two, &iso, &l, None)
            .unwrap()
            .into_iter()
            .find(|f| f.obj_map == vec![0, 1] && !iso.is_identity(f.arrow_map[two.arrow_id("u").unwrap()]))
            .unwrap();
        let b = LeftAction::representable(&iso, 0).unwrap();
        let (e, counit) = counit_exists_left(&f, &b, &l).unwrap();
        assert!(counit.is_pointwise_bijective(e.diagram(), b.diagram()));
    }
}
