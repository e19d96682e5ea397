//! The mixed operators computed through `Cat/X`, following the reflection /
//! coreflection recipe: `A ⊙ N = ◇^r(i^ℓA ×_X i^rN)`,
//! `N ▷ M = □^ℓ((i^rM)^{i^rN})` and `A ∗ M = π₀(i^ℓA ×_X i^rM)`.
//! The adjunctions these satisfy are verified by the law suite, never
//! assumed.

use std::collections::HashMap;

use super::{require_mixed_base, require_same_base_left, require_same_base_right, KanCarrier, LeftAction, RightAction};
use crate::catover::{
    self, components_of, diamond_left_with, diamond_right_with, fibered_product_with_legs,
    OverCat, SquareData,
};
use crate::fincat::FinSet;
use crate::{Limits, Result};

/// The quotient set `A ∗ M` together with the class of each `(x, a, m)`.
#[derive(Debug, Clone)]
pub struct TensorClasses {
    pub set: FinSet,
    class: HashMap<(usize, usize, usize), usize>,
}

impl TensorClasses {
    pub fn class_of(&self, x: usize, a: usize, m: usize) -> usize {
        self.class[&(x, a, m)]
    }
}

/// Mixed tensor `A ∗ M`: the components of the total of `i^ℓA ×_X i^rM`.
pub fn mixed_tensor(a: &LeftAction, m: &RightAction, limits: &Limits) -> Result<FinSet> {
    Ok(mixed_tensor_with_classes(a, m, limits)?.set)
}

pub fn mixed_tensor_with_classes(
    a: &LeftAction,
    m: &RightAction,
    limits: &Limits,
) -> Result<TensorClasses> {
    require_mixed_base(a, m, "mixed_tensor")?;
    let el_a = catover::elements_left(a, limits)?;
    let el_m = catover::elements_right(m, limits)?;
    let (prod, leg_a, leg_m) = fibered_product_with_legs(&el_a.over, &el_m.over, limits)?;
    let (set, class_of_obj) = components_of(&prod.total);
    let mut class = HashMap::new();
    for o in 0..prod.total.n_objects() {
        let (x, ae) = el_a.pairs[leg_a.obj_map[o]];
        let (_, me) = el_m.pairs[leg_m.obj_map[o]];
        class.insert((x, ae, me), class_of_obj[o]);
    }
    Ok(TensorClasses { set, class })
}

/// Everything `A ⊙ N` is built from, kept for canonical transposes.
#[derive(Debug, Clone)]
pub struct OodotData {
    pub action: RightAction,
    /// the product `i^ℓA ×_X i^rN` over `X`
    pub product: OverCat,
    /// per product-total object: `(x, a ∈ A x, n ∈ N x)`
    pub triples: Vec<(usize, usize, usize)>,
    triple_index: HashMap<(usize, usize, usize), usize>,
    pub carrier: KanCarrier,
}

impl OodotData {
    /// Class in `(A⊙N) y` of the pair `((x,a,n), u : x → y)`.
    pub fn class_of(&self, y: usize, x: usize, a: usize, n: usize, u: usize) -> usize {
        self.carrier.class_of(y, self.triple_index[&(x, a, n)], u, 0)
    }
}

/// `A ⊙ N = ◇^r_X(i^ℓ_X A ×_X i^r_X N)`.
pub fn oodot(a: &LeftAction, n: &RightAction, limits: &Limits) -> Result<RightAction> {
    Ok(oodot_with(a, n, limits)?.action)
}

pub fn oodot_with(a: &LeftAction, n: &RightAction, limits: &Limits) -> Result<OodotData> {
    require_mixed_base(a, n, "oodot")?;
    let el_a = catover::elements_left(a, limits)?;
    let el_n = catover::elements_right(n, limits)?;
    let (prod, leg_a, leg_n) = fibered_product_with_legs(&el_a.over, &el_n.over, limits)?;
    let (action, carrier) = diamond_right_with(&prod, limits)?;
    let mut triples = Vec::with_capacity(prod.total.n_objects());
    let mut triple_index = HashMap::new();
    for o in 0..prod.total.n_objects() {
        let (x, ae) = el_a.pairs[leg_a.obj_map[o]];
        let (_, ne) = el_n.pairs[leg_n.obj_map[o]];
        triples.push((x, ae, ne));
        triple_index.insert((x, ae, ne), o);
    }
    Ok(OodotData { action, product: prod, triples, triple_index, carrier })
}

/// The symmetric half `N ⊙^r A = ◇^ℓ_X(i^rN ×_X i^ℓA)`, a presheaf.
pub fn oodot_right(n: &RightAction, a: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    require_mixed_base(a, n, "oodot_right")?;
    let el_n = catover::elements_right(n, limits)?;
    let el_a = catover::elements_left(a, limits)?;
    let prod = catover::fibered_product(&el_n.over, &el_a.over, limits)?;
    let (action, _) = diamond_left_with(&prod, limits)?;
    Ok(action)
}

/// Everything `N ▷ M` is built from.
#[derive(Debug, Clone)]
pub struct TriangleData {
    pub action: LeftAction,
    /// `i_X(N ⇒^r M)`, the opfibration exponential `(i^rM)^{i^rN}`
    pub expo: crate::profunctor::Comprehension,
    /// slice commas and section sets per object (fiber order)
    pub squares: SquareData,
}

/// `N ▷ M = □^ℓ_X((i^r M)^{i^r N})`, a presheaf; satisfies
/// `L(A, N▷M) ≅ R(N, A⋔M)`.
pub fn triangleright(n: &RightAction, m: &RightAction, limits: &Limits) -> Result<LeftAction> {
    Ok(triangleright_with(n, m, limits)?.action)
}

pub fn triangleright_with(
    n: &RightAction,
    m: &RightAction,
    limits: &Limits,
) -> Result<TriangleData> {
    require_same_base_right(n, m, "triangleright")?;
    let h = crate::profunctor::hom_arrow(n, m, limits)?;
    let expo = crate::profunctor::comprehend(&h, limits)?;
    let (action, squares) = catover::square_left_with(&expo.over, limits)?;
    Ok(TriangleData { action, expo, squares })
}

/// The symmetric half `A ▷^r B = □^r_X((i^ℓ B)^{i^ℓ A})`, a copresheaf.
pub fn triangleright_right(a: &LeftAction, b: &LeftAction, limits: &Limits) -> Result<RightAction> {
    require_same_base_left(a, b, "triangleright_right")?;
    let h = crate::profunctor::hom_arrow_left(a, b, limits)?;
    let expo = crate::profunctor::comprehend(&h, limits)?;
    catover::square_right(&expo.over, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{hom_left, hom_right, iso_right, complement};
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn unit_oodot_law() {
        // I ⊙ N ≅ N
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let n = RightAction::representable(&two, 0).unwrap();
        let o = oodot(&LeftAction::terminal(&two), &n, &limits()).unwrap();
        assert!(iso_right(&o, &n, &limits()).unwrap().is_some());
    }

    #[test]
    fn oodot_over_terminal_base_is_product() {
        let one = std_cats::terminal(&limits()).unwrap();
        let a = LeftAction::constant(&one, &FinSet::numbered("a", 2));
        let n = RightAction::constant(&one, &FinSet::numbered("n", 3));
        let o = oodot(&a, &n, &limits()).unwrap();
        assert_eq!(o.fiber(0).len(), 6);
    }

    #[test]
    fn triangleright_over_terminal_base_is_function_set() {
        let one = std_cats::terminal(&limits()).unwrap();
        let n = RightAction::constant(&one, &FinSet::numbered("n", 2));
        let m = RightAction::constant(&one, &FinSet::numbered("m", 3));
        let t = triangleright(&n, &m, &limits()).unwrap();
        assert_eq!(t.fiber(0).len(), 9);
    }

    #[test]
    fn triangleright_self_has_identity_point() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let n = RightAction::representable(&two, 0).unwrap();
        let t = triangleright(&n, &n, &limits()).unwrap();
        for x in 0..two.n_objects() {
            assert!(t.fiber(x).len() >= 1);
        }
    }

    #[test]
    fn mixed_tensor_of_representables_is_hom() {
        // ∃^ℓ_x I ∗ M ≅ M x
        for cat in std_cats::library(&limits()) {
            let m = RightAction::representable(&cat, 0).unwrap();
            for x in 0..cat.n_objects() {
                let rep = LeftAction::representable(&cat, x).unwrap();
                let t = mixed_tensor(&rep, &m, &limits()).unwrap();
                assert_eq!(t.len(), m.fiber(x).len(), "category {}", cat.name);
            }
        }
    }

    #[test]
    fn mixed_tensor_with_terminal_is_components() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let a = LeftAction::representable(&c3, 1).unwrap();
        let t = mixed_tensor(&a, &RightAction::terminal(&c3), &limits()).unwrap();
        let el = catover::elements_left(&a, &limits()).unwrap();
        let (comps, _) = components_of(&el.over.total);
        assert_eq!(t.len(), comps.len());
    }

    #[test]
    fn mixed_tensor_matches_naive_coequalizer_oracle() {
        // independent oracle: fixpoint relabeling on Σ_x A x × M x under the
        // relations (A(w)a', m) ~ (a', M(w)m), no union-find.
        let l = limits();
        let c3 = std_cats::chain(3, &l).unwrap();
        let a = LeftAction::representable(&c3, 2).unwrap();
        let m = RightAction::representable(&c3, 0).unwrap();
        let fast = mixed_tensor(&a, &m, &l).unwrap();

        let base = &c3;
        let mut ids = Vec::new();
        let mut key = HashMap::new();
        for x in 0..base.n_objects() {
            for ae in 0..a.fiber(x).len() {
                for me in 0..m.fiber(x).len() {
                    key.insert((x, ae, me), ids.len());
                    ids.push(ids.len());
                }
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for w in 0..base.n_arrows() {
                let arr = base.arrow(w);
                for ap in 0..a.fiber(arr.tgt).len() {
                    for me in 0..m.fiber(arr.src).len() {
                        let i = key[&(arr.src, a.apply(w, ap), me)];
                        let j = key[&(arr.tgt, ap, m.apply(w, me))];
                        let lo = ids[i].min(ids[j]);
                        if ids[i] != lo || ids[j] != lo {
                            ids[i] = lo;
                            ids[j] = lo;
                            changed = true;
                        }
                    }
                }
            }
        }
        // normalize any lagging labels
        for i in 0..ids.len() {
            let mut r = i;
            while ids[r] != r {
                r = ids[r];
            }
            ids[i] = r;
        }
        let mut reps: Vec<usize> = ids.clone();
        reps.sort_unstable();
        reps.dedup();
        assert_eq!(fast.len(), reps.len());
    }

    #[test]
    fn oodot_adjunction_counts() {
        // |R(N, A⋔M)| = |R(A⊙N, M)|
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let n = RightAction::representable(&two, 1).unwrap();
        let comp = complement(&a, &m, &l).unwrap();
        let lhs = hom_right(&n, &comp, &l).unwrap().len();
        let od = oodot(&a, &n, &l).unwrap();
        let rhs = hom_right(&od, &m, &l).unwrap().len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triangleright_enrichment_counts() {
        // |L(A, N▷M)| = |R(N, A⋔M)|
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let n = RightAction::representable(&two, 1).unwrap();
        let comp = complement(&a, &m, &l).unwrap();
        let lhs = hom_right(&n, &comp, &l).unwrap().len();
        let tri = triangleright(&n, &m, &l).unwrap();
        let rhs = hom_left(&a, &tri, &l).unwrap().len();
        assert_eq!(lhs, rhs);
    }
}
