//! Pointwise operator algebra: tensors, internal homs, complements, powers
//! and copowers of actions.

use std::sync::Arc;

use super::{
    hom_left, hom_right, require_mixed_base, require_same_base_left, require_same_base_right,
    HomSet, LeftAction, RightAction,
};
use crate::fincat::diagram::Diagram;
use crate::fincat::{Cat, FinSet};
use crate::{Error, Limits, Result};

/// Pointwise cartesian tensor of presheaves: `(A⊗B)x = A x × B x`.
pub fn tensor(a: &LeftAction, b: &LeftAction) -> Result<LeftAction> {
    require_same_base_left(a, b, "tensor")?;
    let diag = a.diagram().product(b.diagram())?;
    LeftAction::from_op_diagram(a.base(), diag)
}

/// Pointwise cartesian tensor of copresheaves.
pub fn tensor_right(m: &RightAction, n: &RightAction) -> Result<RightAction> {
    require_same_base_right(m, n, "tensor_right")?;
    Ok(RightAction::from_diagram(m.diagram().product(n.diagram())?))
}

/// Encode a function as its index in the lexicographic enumeration of
/// `cod_size^dom_size` value tuples (the order used by
/// [`FinSet::function_labels`]).
pub fn function_index(values: &[usize], cod_size: usize) -> usize {
    values.iter().fold(0, |acc, &v| acc * cod_size + v)
}

fn function_fiber(dom: &FinSet, cod: &FinSet, limits: &Limits) -> Result<(FinSet, Vec<Vec<usize>>)> {
    let size = cod.len().checked_pow(dom.len() as u32).unwrap_or(usize::MAX);
    if size > limits.derived_fiber {
        return Err(Error::size("function-set fiber", size, limits.derived_fiber));
    }
    let tables = dom.function_labels(cod);
    let labels = tables.iter().map(|t| FinSet::function_label(t, cod)).collect();
    Ok((FinSet::new(labels)?, tables))
}

/// The complement `(A ⋔ M)x = M x^{A x}` with `(A⋔M)f = Mf ∘ − ∘ Af`.
pub fn complement(a: &LeftAction, m: &RightAction, limits: &Limits) -> Result<RightAction> {
    require_mixed_base(a, m, "complement")?;
    let base = a.base();
    let mut fibers = Vec::with_capacity(base.n_objects());
    let mut tables = Vec::with_capacity(base.n_objects());
    for x in 0..base.n_objects() {
        let (f, t) = function_fiber(a.fiber(x), m.fiber(x), limits)?;
        fibers.push(f);
        tables.push(t);
    }
    let maps = (0..base.n_arrows())
        .map(|f| {
            let arr = base.arrow(f);
            let m_tgt = m.fiber(arr.tgt).len();
            tables[arr.src]
                .iter()
                .map(|phi| {
                    // image of φ under f: j ↦ Mf(φ(Af(j))) for j in A(tgt f)
                    let values: Vec<usize> = (0..a.fiber(arr.tgt).len())
                        .map(|j| m.apply(f, phi[a.apply(f, j)]))
                        .collect();
                    function_index(&values, m_tgt)
                })
                .collect()
        })
        .collect();
    RightAction::new(base, fibers, maps)
}

/// The symmetric-half complement `(M ⋔^r A)x = A x^{M x}`, a presheaf;
/// `(M⋔^rA)f = Af ∘ − ∘ Mf` for `f : x → y` maps the fiber over `y` to the
/// fiber over `x`.
pub fn complement_right(m: &RightAction, a: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    require_mixed_base(a, m, "complement_right")?;
    let base = a.base();
    let mut fibers = Vec::with_capacity(base.n_objects());
    let mut tables = Vec::with_capacity(base.n_objects());
    for x in 0..base.n_objects() {
        let (f, t) = function_fiber(m.fiber(x), a.fiber(x), limits)?;
        fibers.push(f);
        tables.push(t);
    }
    let maps = (0..base.n_arrows())
        .map(|f| {
            let arr = base.arrow(f);
            let a_src = a.fiber(arr.src).len();
            tables[arr.tgt]
                .iter()
                .map(|psi| {
                    // image of ψ ∈ A y^{M y} under f: j ↦ Af(ψ(Mf(j))) for j in M x
                    let values: Vec<usize> = (0..m.fiber(arr.src).len())
                        .map(|j| a.apply(f, psi[m.apply(f, j)]))
                        .collect();
                    function_index(&values, a_src)
                })
                .collect()
        })
        .collect();
    LeftAction::new(base, fibers, maps)
}

/// Copower `V ⊗ A` (pointwise `V × A x`).
pub fn copower_left(v: &FinSet, a: &LeftAction) -> Result<LeftAction> {
    tensor(&LeftAction::constant(a.base(), v), a)
}

pub fn copower_right(v: &FinSet, m: &RightAction) -> Result<RightAction> {
    tensor_right(&RightAction::constant(m.base(), v), m)
}

/// Power `[V, A]` (pointwise `A x^V`, post-composition action).
pub fn power_left(v: &FinSet, a: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    let diag = power_diagram(v, a.diagram(), limits)?;
    LeftAction::from_op_diagram(a.base(), diag)
}

pub fn power_right(v: &FinSet, m: &RightAction, limits: &Limits) -> Result<RightAction> {
    Ok(RightAction::from_diagram(power_diagram(v, m.diagram(), limits)?))
}

fn power_diagram(v: &FinSet, d: &Diagram, limits: &Limits) -> Result<Diagram> {
    let base: &Cat = &d.base;
    let mut fibers = Vec::with_capacity(base.n_objects());
    let mut tables = Vec::with_capacity(base.n_objects());
    for x in 0..base.n_objects() {
        let (f, t) = function_fiber(v, d.fiber(x), limits)?;
        fibers.push(f);
        tables.push(t);
    }
    let maps = (0..base.n_arrows())
        .map(|f| {
            let arr = base.arrow(f);
            let cod = d.fiber(arr.tgt).len();
            tables[arr.src]
                .iter()
                .map(|phi| {
                    let values: Vec<usize> = phi.iter().map(|&e| d.apply(f, e)).collect();
                    function_index(&values, cod)
                })
                .collect()
        })
        .collect();
    Diagram::new(Arc::clone(base), fibers, maps)
}

/// Absolute complement `A ⋔ V := A ⋔ (constant V)`, a copresheaf.
pub fn absolute_complement(a: &LeftAction, v: &FinSet, limits: &Limits) -> Result<RightAction> {
    complement(a, &RightAction::constant(a.base(), v), limits)
}

/// Absolute complement `M ⋔^r V := M ⋔^r (constant V)`, a presheaf.
pub fn absolute_complement_right(
    m: &RightAction,
    v: &FinSet,
    limits: &Limits,
) -> Result<LeftAction> {
    complement_right(m, &LeftAction::constant(m.base(), v), limits)
}

/// Internal hom of presheaves, `[A,B]x = Nat(∃^ℓ_x I ⊗ A, B)` with the
/// precomposition action. Satisfies the exponential bijection
/// `hom(C⊗A, B) ≅ hom(C, [A,B])`.
pub fn internal_hom(a: &LeftAction, b: &LeftAction, limits: &Limits) -> Result<LeftAction> {
    require_same_base_left(a, b, "internal_hom")?;
    let base = a.base().clone();
    let n = base.n_objects();
    // hom-set fibers per object, kept with their transformations
    let mut reps = Vec::with_capacity(n);
    let mut homs: Vec<HomSet> = Vec::with_capacity(n);
    let mut tensors = Vec::with_capacity(n);
    for x in 0..n {
        let rep = LeftAction::representable(&base, x)?;
        let t = tensor(&rep, a)?;
        homs.push(hom_left(&t, b, limits)?);
        reps.push(rep);
        tensors.push(t);
    }
    let fibers: Vec<FinSet> = homs.iter().map(|h| h.set.clone()).collect();
    // action of f : x' → x sends α ∈ [A,B]x to α ∘ (y_f ⊗ id) ∈ [A,B]x'
    let maps = (0..base.n_arrows())
        .map(|f| -> Result<Vec<usize>> {
            let arr = base.arrow(f);
            let (xp, x) = (arr.src, arr.tgt);
            homs[x]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let mut comps = Vec::with_capacity(n);
                    for w in 0..n {
                        let hom_wx: Vec<usize> = reps[x]
                            .fiber(w)
                            .labels()
                            .iter()
                            .map(|l| base.arrow_id(l).expect("rep labels are arrow ids"))
                            .collect();
                        let hom_wxp: Vec<usize> = reps[xp]
                            .fiber(w)
                            .labels()
                            .iter()
                            .map(|l| base.arrow_id(l).expect("rep labels are arrow ids"))
                            .collect();
                        let na = a.fiber(w).len();
                        let mut comp = Vec::with_capacity(hom_wxp.len() * na);
                        for &u in &hom_wxp {
                            let fu = base.comp(f, u);
                            let i = hom_wx
                                .iter()
                                .position(|&v| v == fu)
                                .expect("hom closed under composition");
                            for e in 0..na {
                                comp.push(alpha.components[w][i * na + e]);
                            }
                        }
                        comps.push(comp);
                    }
                    homs[xp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("internal_hom: precomposed family not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let _ = tensors;
    LeftAction::new(&base, fibers, maps)
}

/// Internal hom of copresheaves, `[M,N]x = Nat(∃^r_x I ⊗ M, N)`.
pub fn internal_hom_right(m: &RightAction, n: &RightAction, limits: &Limits) -> Result<RightAction> {
    require_same_base_right(m, n, "internal_hom_right")?;
    let base = m.base().clone();
    let nn = base.n_objects();
    let mut reps = Vec::with_capacity(nn);
    let mut homs: Vec<HomSet> = Vec::with_capacity(nn);
    for x in 0..nn {
        let rep = RightAction::representable(&base, x)?;
        let t = tensor_right(&rep, m)?;
        homs.push(hom_right(&t, n, limits)?);
        reps.push(rep);
    }
    let fibers: Vec<FinSet> = homs.iter().map(|h| h.set.clone()).collect();
    // action of f : x → x' sends α ∈ [M,N]x to α ∘ (y^r_f ⊗ id) where
    // y^r_f : ∃^r_{x'} I → ∃^r_x I is precomposition with f
    let maps = (0..base.n_arrows())
        .map(|f| -> Result<Vec<usize>> {
            let arr = base.arrow(f);
            let (x, xp) = (arr.src, arr.tgt);
            homs[x]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let mut comps = Vec::with_capacity(nn);
                    for w in 0..nn {
                        let hom_xw: Vec<usize> = reps[x]
                            .fiber(w)
                            .labels()
                            .iter()
                            .map(|l| base.arrow_id(l).expect("rep labels are arrow ids"))
                            .collect();
                        let hom_xpw: Vec<usize> = reps[xp]
                            .fiber(w)
                            .labels()
                            .iter()
                            .map(|l| base.arrow_id(l).expect("rep labels are arrow ids"))
                            .collect();
                        let nm = m.fiber(w).len();
                        let mut comp = Vec::with_capacity(hom_xpw.len() * nm);
                        for &u in &hom_xpw {
                            let uf = base.comp(u, f);
                            let i = hom_xw
                                .iter()
                                .position(|&v| v == uf)
                                .expect("hom closed under composition");
                            for e in 0..nm {
                                comp.push(alpha.components[w][i * nm + e]);
                            }
                        }
                        comps.push(comp);
                    }
                    homs[xp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("internal_hom_right: precomposed family not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    RightAction::new(&base, fibers, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{iso_left, iso_right};
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn tensor_unit_law() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let i = LeftAction::terminal(&two);
        let t = tensor(&i, &a).unwrap();
        assert!(iso_left(&t, &a, &limits()).unwrap().is_some());
    }

    #[test]
    fn tensor_fiber_sizes_multiply() {
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let a = LeftAction::representable(&c3, 2).unwrap();
        let b = LeftAction::representable(&c3, 1).unwrap();
        let t = tensor(&a, &b).unwrap();
        for x in 0..3 {
            assert_eq!(t.fiber(x).len(), a.fiber(x).len() * b.fiber(x).len());
        }
    }

    #[test]
    fn tensor_associativity_witness() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 0).unwrap();
        let b = LeftAction::representable(&two, 1).unwrap();
        let c = LeftAction::terminal(&two);
        let lhs = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let rhs = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        assert!(iso_left(&lhs, &rhs, &limits()).unwrap().is_some());
    }

    #[test]
    fn complement_fiber_is_function_set() {
        let one = std_cats::terminal(&limits()).unwrap();
        let a = LeftAction::constant(&one, &FinSet::numbered("a", 2));
        let m = RightAction::constant(&one, &FinSet::numbered("m", 3));
        let c = complement(&a, &m, &limits()).unwrap();
        assert_eq!(c.fiber(0).len(), 9);
    }

    #[test]
    fn complement_of_empty_is_terminal() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::initial(&two);
        let m = RightAction::representable(&two, 0).unwrap();
        let c = complement(&a, &m, &limits()).unwrap();
        for x in 0..2 {
            assert_eq!(c.fiber(x).len(), 1);
        }
        assert!(iso_right(&c, &RightAction::terminal(&two), &limits()).unwrap().is_some());
    }

    #[test]
    fn unit_complement_law() {
        // I ⋔ M ≅ M
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let c = complement(&LeftAction::terminal(&two), &m, &limits()).unwrap();
        assert!(iso_right(&c, &m, &limits()).unwrap().is_some());
    }

    #[test]
    fn internal_hom_unit_law() {
        // [I, A] ≅ A
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let h = internal_hom(&LeftAction::terminal(&two), &a, &limits()).unwrap();
        assert!(iso_left(&h, &a, &limits()).unwrap().is_some());
    }

    #[test]
    fn internal_hom_into_terminal_is_terminal() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let h = internal_hom(&a, &LeftAction::terminal(&two), &limits()).unwrap();
        assert!(iso_left(&h, &LeftAction::terminal(&two), &limits()).unwrap().is_some());
    }

    #[test]
    fn internal_hom_right_unit_and_exponential() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let h = internal_hom_right(&RightAction::terminal(&two), &m, &limits()).unwrap();
        assert!(iso_right(&h, &m, &limits()).unwrap().is_some());
        let n = RightAction::representable(&two, 1).unwrap();
        let lhs = crate::action::hom_right(&tensor_right(&m, &n).unwrap(), &m, &limits())
            .unwrap()
            .len();
        let rhs = crate::action::hom_right(
            &m,
            &internal_hom_right(&n, &m, &limits()).unwrap(),
            &limits(),
        )
        .unwrap()
        .len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponential_bijection_counts() {
        // hom(A⊗B, C) ≅ hom(A, [B,C]) on a small instance
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let b = LeftAction::representable(&two, 0).unwrap();
        let c = tensor(&a, &b).unwrap();
        let lhs = hom_left(&tensor(&a, &b).unwrap(), &c, &limits()).unwrap().len();
        let rhs = hom_left(&a, &internal_hom(&b, &c, &limits()).unwrap(), &limits()).unwrap().len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_and_copower_unit_laws() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let unit = FinSet::singleton("*");
        assert!(iso_left(&copower_left(&unit, &a).unwrap(), &a, &limits()).unwrap().is_some());
        assert!(
            iso_left(&power_left(&unit, &a, &limits()).unwrap(), &a, &limits()).unwrap().is_some()
        );
    }

    #[test]
    fn absolute_complement_fiber_sizes() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let v = FinSet::numbered("v", 3);
        let c = absolute_complement(&a, &v, &limits()).unwrap();
        for x in 0..2 {
            assert_eq!(c.fiber(x).len(), 3usize.pow(a.fiber(x).len() as u32));
        }
    }
}
