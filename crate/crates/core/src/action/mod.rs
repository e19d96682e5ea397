//! Left actions (presheaves) and right actions (copresheaves) of a finite
//! category on finite sets, their hom-sets, and the operator algebra of the
//! complemented pair: tensor, internal hom, complement, its two adjoints,
//! mixed tensor, powers/copowers, substitution and quantifiers.
//!
//! A left action is stored as a covariant [`Diagram`] over the opposite
//! category (opposite preserves arrow indices, so the action of arrow `f`
//! lives at the same index either way).

use std::sync::Arc;

use crate::fincat::diagram::{self, Diagram, NatTransform};
use crate::fincat::{base_eq, opposite, Cat, FinSet, FunctorMap};
use crate::{Error, Limits, Result};

mod biact;
mod mixed;
mod ops;
mod quant;

pub use biact::{biaction_embed, biaction_from_left, is_biaction, BiAction};
pub use mixed::{
    mixed_tensor, mixed_tensor_with_classes, oodot, oodot_right, oodot_with, triangleright,
    triangleright_right, triangleright_with, OodotData, TensorClasses, TriangleData,
};
pub use ops::{
    absolute_complement, absolute_complement_right, complement, complement_right, copower_left,
    copower_right, function_index, internal_hom, internal_hom_right, power_left, power_right,
    tensor, tensor_right,
};
pub use quant::{
    counit_exists_left, counit_exists_right, exists_left, exists_left_with, exists_right,
    exists_right_with, forall_left, forall_right, transpose_from_exists_left,
    transpose_from_exists_right, transpose_to_exists_left, transpose_to_exists_right, unit_forall_left,
    unit_forall_right, KanCarrier,
};

/// A contravariant finite-set-valued functor on `base`: a presheaf
/// `A ∈ Set^{X^op}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftAction {
    base: Cat,
    /// Covariant diagram over `base^op`; `diag.maps[f]` is `A(f): A(tgt f) → A(src f)`.
    diag: Diagram,
}

/// A covariant finite-set-valued functor on `base`: a copresheaf
/// `M ∈ Set^X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAction {
    diag: Diagram,
}

impl LeftAction {
    /// `maps[f]` must send the fiber over `tgt(f)` to the fiber over `src(f)`.
    pub fn new(base: &Cat, fibers: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<LeftAction> {
        let diag = Diagram::new(opposite(base), fibers, maps)?;
        Ok(LeftAction { base: Arc::clone(base), diag })
    }

    /// Wrap an already-validated diagram over `base^op`.
    pub fn from_op_diagram(base: &Cat, diag: Diagram) -> Result<LeftAction> {
        if !base_eq(&diag.base, &opposite(base)) {
            return Err(Error::BaseMismatch(
                "left action diagram must live over the opposite of its base".into(),
            ));
        }
        Ok(LeftAction { base: Arc::clone(base), diag })
    }

    pub fn base(&self) -> &Cat {
        &self.base
    }

    /// The underlying covariant diagram over `base^op`.
    pub fn diagram(&self) -> &Diagram {
        &self.diag
    }

    pub fn fiber(&self, x: usize) -> &FinSet {
        self.diag.fiber(x)
    }

    /// `A(f) : A(tgt f) → A(src f)` applied to one element.
    pub fn apply(&self, f: usize, e: usize) -> usize {
        self.diag.apply(f, e)
    }

    pub fn map(&self, f: usize) -> &[usize] {
        self.diag.map(f)
    }

    pub fn terminal(base: &Cat) -> LeftAction {
        LeftAction { base: Arc::clone(base), diag: Diagram::terminal(&opposite(base)) }
    }

    pub fn initial(base: &Cat) -> LeftAction {
        LeftAction { base: Arc::clone(base), diag: Diagram::initial(&opposite(base)) }
    }

    pub fn constant(base: &Cat, v: &FinSet) -> LeftAction {
        LeftAction { base: Arc::clone(base), diag: Diagram::constant(&opposite(base), v) }
    }

    /// The representable presheaf `∃^ℓ_x I = hom(−, x)`, built directly from
    /// hom-sets. Fiber elements are labeled by arrow ids; the action of
    /// `f : w' → w` is precomposition.
    pub fn representable(base: &Cat, x: usize) -> Result<LeftAction> {
        let homs: Vec<Vec<usize>> = (0..base.n_objects()).map(|w| base.hom(w, x)).collect();
        let fibers = homs
            .iter()
            .map(|h| FinSet::new(h.iter().map(|&a| base.arrow(a).id.clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        let maps = (0..base.n_arrows())
            .map(|f| {
                let arr = base.arrow(f);
                homs[arr.tgt]
                    .iter()
                    .map(|&u| {
                        let comp = base.comp(u, f);
                        homs[arr.src].iter().position(|&v| v == comp).expect("closed under comp")
                    })
                    .collect()
            })
            .collect();
        LeftAction::new(base, fibers, maps)
    }

    pub fn total_size(&self) -> usize {
        self.diag.total_size()
    }
}

impl RightAction {
    /// `maps[f]` must send the fiber over `src(f)` to the fiber over `tgt(f)`.
    pub fn new(base: &Cat, fibers: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<RightAction> {
        Ok(RightAction { diag: Diagram::new(Arc::clone(base), fibers, maps)? })
    }

    pub fn from_diagram(diag: Diagram) -> RightAction {
        RightAction { diag }
    }

    pub fn base(&self) -> &Cat {
        &self.diag.base
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diag
    }

    pub fn fiber(&self, x: usize) -> &FinSet {
        self.diag.fiber(x)
    }

    /// `M(f) : M(src f) → M(tgt f)` applied to one element.
    pub fn apply(&self, f: usize, e: usize) -> usize {
        self.diag.apply(f, e)
    }

    pub fn map(&self, f: usize) -> &[usize] {
        self.diag.map(f)
    }

    pub fn terminal(base: &Cat) -> RightAction {
        RightAction { diag: Diagram::terminal(base) }
    }

    pub fn initial(base: &Cat) -> RightAction {
        RightAction { diag: Diagram::initial(base) }
    }

    pub fn constant(base: &Cat, v: &FinSet) -> RightAction {
        RightAction { diag: Diagram::constant(base, v) }
    }

    /// Build without validation. Only for deliberately corrupted values in
    /// negative tests; everything else goes through `new`.
    pub fn from_parts_unchecked(base: &Cat, fibers: Vec<FinSet>, maps: Vec<Vec<usize>>) -> RightAction {
        RightAction { diag: Diagram { base: Arc::clone(base), fibers, maps } }
    }

    /// The corepresentable copresheaf `∃^r_x I = hom(x, −)`.
    pub fn representable(base: &Cat, x: usize) -> Result<RightAction> {
        let homs: Vec<Vec<usize>> = (0..base.n_objects()).map(|w| base.hom(x, w)).collect();
        let fibers = homs
            .iter()
            .map(|h| FinSet::new(h.iter().map(|&a| base.arrow(a).id.clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        let maps = (0..base.n_arrows())
            .map(|f| {
                let arr = base.arrow(f);
                homs[arr.src]
                    .iter()
                    .map(|&u| {
                        let comp = base.comp(f, u);
                        homs[arr.tgt].iter().position(|&v| v == comp).expect("closed under comp")
                    })
                    .collect()
            })
            .collect();
        RightAction::new(base, fibers, maps)
    }

    pub fn total_size(&self) -> usize {
        self.diag.total_size()
    }
}

/// A hom-set of natural transformations, with its elements kept as
/// transformations so callers can evaluate them. Labels are canonical
/// encodings of the component families, in enumeration order.
#[derive(Debug, Clone)]
pub struct HomSet {
    pub set: FinSet,
    pub items: Vec<NatTransform>,
}

impl HomSet {
    fn from_nats(items: Vec<NatTransform>, dst: &Diagram) -> Result<HomSet> {
        let labels = items.iter().map(|t| t.canonical_label(dst)).collect();
        Ok(HomSet { set: FinSet::new(labels)?, items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position_of(&self, components: &[Vec<usize>]) -> Option<usize> {
        self.items.iter().position(|t| t.components == components)
    }
}

fn require_same_base_left(a: &LeftAction, b: &LeftAction, what: &str) -> Result<()> {
    if base_eq(&a.base, &b.base) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{what}: left actions over different bases")))
    }
}

fn require_same_base_right(a: &RightAction, b: &RightAction, what: &str) -> Result<()> {
    if base_eq(a.base(), b.base()) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{what}: right actions over different bases")))
    }
}

fn require_mixed_base(a: &LeftAction, m: &RightAction, what: &str) -> Result<()> {
    if base_eq(&a.base, m.base()) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{what}: actions over different bases")))
    }
}

/// The set of natural transformations `A → B` between presheaves.
pub fn hom_left(a: &LeftAction, b: &LeftAction, limits: &Limits) -> Result<HomSet> {
    require_same_base_left(a, b, "hom_left")?;
    let items = diagram::enumerate_nats(&a.diag, &b.diag, limits)?;
    HomSet::from_nats(items, &b.diag)
}

/// The set of natural transformations `M → N` between copresheaves.
pub fn hom_right(m: &RightAction, n: &RightAction, limits: &Limits) -> Result<HomSet> {
    require_same_base_right(m, n, "hom_right")?;
    let items = diagram::enumerate_nats(&m.diag, &n.diag, limits)?;
    HomSet::from_nats(items, &n.diag)
}

/// Witness search for `A ≅ B`.
pub fn iso_left(a: &LeftAction, b: &LeftAction, limits: &Limits) -> Result<Option<NatTransform>> {
    require_same_base_left(a, b, "iso_left")?;
    diagram::find_natural_iso(&a.diag, &b.diag, limits)
}

/// Witness search for `M ≅ N`.
pub fn iso_right(m: &RightAction, n: &RightAction, limits: &Limits) -> Result<Option<NatTransform>> {
    require_same_base_right(m, n, "iso_right")?;
    diagram::find_natural_iso(&m.diag, &n.diag, limits)
}

/// Substitution `f^ℓ` along `f : X → Y`: fibers `A(f x)`, action `A(f u)`.
pub fn substitute_left(f: &FunctorMap, a: &LeftAction) -> Result<LeftAction> {
    if !base_eq(&f.cod, &a.base) {
        return Err(Error::BaseMismatch("substitute_left: functor must land in the base".into()));
    }
    let diag = a.diag.substitute(&f.opposite())?;
    LeftAction::from_op_diagram(&f.dom, diag)
}

/// Substitution `f^r` along `f : X → Y`.
pub fn substitute_right(f: &FunctorMap, m: &RightAction) -> Result<RightAction> {
    if !base_eq(&f.cod, m.base()) {
        return Err(Error::BaseMismatch("substitute_right: functor must land in the base".into()));
    }
    Ok(RightAction { diag: m.diag.substitute(f)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn representable_fibers_are_homs() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let b = two.object_id("b").unwrap();
        let ya = LeftAction::representable(&two, b).unwrap();
        // hom(a,b) = {u}, hom(b,b) = {id_b}
        assert_eq!(ya.fiber(0).len(), 1);
        assert_eq!(ya.fiber(1).len(), 1);
        let a_obj = two.object_id("a").unwrap();
        let xa = LeftAction::representable(&two, a_obj).unwrap();
        assert_eq!(xa.fiber(0).len(), 1);
        assert_eq!(xa.fiber(1).len(), 0);
    }

    #[test]
    fn yoneda_count_on_library() {
        // |Nat(∃^ℓ_x I, A)| = |A x| for every object of every library category.
        for cat in std_cats::library(&limits()) {
            let a = sample_left(&cat);
            for x in 0..cat.n_objects() {
                let rep = LeftAction::representable(&cat, x).unwrap();
                let hom = hom_left(&rep, &a, &limits()).unwrap();
                assert_eq!(hom.len(), a.fiber(x).len(), "category {}", cat.name);
            }
        }
    }

    /// A small non-constant presheaf: the sum of the representables of the
    /// first two objects (or terminal for tiny categories).
    fn sample_left(cat: &Cat) -> LeftAction {
        let l = limits();
        let mut out = LeftAction::representable(cat, 0).unwrap();
        if cat.n_objects() > 1 {
            let other = LeftAction::representable(cat, 1).unwrap();
            out = sum_left(&out, &other);
        }
        let _ = l;
        out
    }

    fn sum_left(a: &LeftAction, b: &LeftAction) -> LeftAction {
        let base = a.base().clone();
        let fibers: Vec<FinSet> = (0..base.n_objects())
            .map(|x| {
                let mut labels: Vec<String> =
                    a.fiber(x).labels().iter().map(|l| format!("l.{l}")).collect();
                labels.extend(b.fiber(x).labels().iter().map(|l| format!("r.{l}")));
                FinSet::new(labels).unwrap()
            })
            .collect();
        let maps = (0..base.n_arrows())
            .map(|f| {
                let arr = base.arrow(f);
                let bn = |x: usize| a.fiber(x).len();
                let mut m: Vec<usize> = a.map(f).to_vec();
                m.extend(b.map(f).iter().map(|&e| e + bn(arr.src)));
                m
            })
            .collect();
        LeftAction::new(&base, fibers, maps).unwrap()
    }

    #[test]
    fn substitution_along_identity_is_identity() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let id = FunctorMap::identity(&two);
        let s = substitute_left(&id, &a).unwrap();
        assert_eq!(s, a);
    }

    #[test]
    fn substitution_along_a_point_is_the_fiber() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        for x in 0..2 {
            let pt = FunctorMap::point(&two, x, &l).unwrap();
            let v = substitute_left(&pt, &a).unwrap();
            assert_eq!(v.fiber(0).len(), a.fiber(x).len());
        }
    }

    #[test]
    fn substitution_composes_structurally() {
        let l = limits();
        let one = std_cats::terminal(&l).unwrap();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        // 1 → 2 → chain3
        let pt = FunctorMap::point(&two, 1, &l).unwrap();
        let g = crate::fincat::search::enumerate_functors(&two, &c3, &l, None)
            .unwrap()
            .into_iter()
            .find(|f| f.obj_map == vec![0, 2])
            .unwrap();
        let a = LeftAction::representable(&c3, 2).unwrap();
        let gf = g.after(&pt).unwrap();
        let lhs = substitute_left(&gf, &a).unwrap();
        let rhs = substitute_left(&pt, &substitute_left(&g, &a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let _ = one;
    }
}
