//! Biactions: presheaves acting by bijections, with the induced copresheaf
//! facet. These are the objects of `B X`, included in both `Set^{X^op}` and
//! `Set^X` by `j^ℓ` and `j^r`.

use super::{LeftAction, RightAction};
use crate::fincat::{Cat, FinSet};
use crate::Result;

/// A presheaf all of whose action maps are bijections, together with the
/// covariant facet induced by the inverse maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiAction {
    left: LeftAction,
    right: RightAction,
}

impl BiAction {
    /// `j^ℓ`: the presheaf facet.
    pub fn j_left(&self) -> &LeftAction {
        &self.left
    }

    /// `j^r`: the copresheaf facet (inverse action maps).
    pub fn j_right(&self) -> &RightAction {
        &self.right
    }

    pub fn base(&self) -> &Cat {
        self.left.base()
    }
}

/// Detect whether a presheaf acts by bijections; if so, build the biaction.
pub fn is_biaction(a: &LeftAction) -> Option<BiAction> {
    let base = a.base().clone();
    let mut inverse_maps = Vec::with_capacity(base.n_arrows());
    for f in 0..base.n_arrows() {
        let arr = base.arrow(f);
        let map = a.map(f);
        let src_size = a.fiber(arr.src).len();
        if map.len() != a.fiber(arr.tgt).len() || src_size != map.len() {
            return None;
        }
        let mut inv = vec![usize::MAX; src_size];
        for (e, &v) in map.iter().enumerate() {
            if inv[v] != usize::MAX {
                return None;
            }
            inv[v] = e;
        }
        inverse_maps.push(inv);
    }
    let fibers: Vec<FinSet> = (0..base.n_objects()).map(|x| a.fiber(x).clone()).collect();
    let right = RightAction::new(&base, fibers, inverse_maps).ok()?;
    Some(BiAction { left: a.clone(), right })
}

/// The constant biaction on a finite set (`j^ℓ V` for `V ∈ B 1`).
pub fn biaction_embed(base: &Cat, v: &FinSet) -> BiAction {
    BiAction {
        left: LeftAction::constant(base, v),
        right: RightAction::constant(base, v),
    }
}

/// Build a biaction from explicit bijective data (validates bijectivity).
pub fn biaction_from_left(a: &LeftAction) -> Result<BiAction> {
    is_biaction(a).ok_or_else(|| {
        crate::Error::InvalidAction {
            action: "biaction".into(),
            detail: "action maps are not all bijective".into(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;
    use crate::Limits;

    #[test]
    fn constant_action_is_biaction() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let a = LeftAction::constant(&two, &FinSet::numbered("v", 3));
        assert!(is_biaction(&a).is_some());
    }

    #[test]
    fn representable_on_non_groupoid_is_not_biaction() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let a = LeftAction::representable(&two, two.object_id("a").unwrap()).unwrap();
        assert!(is_biaction(&a).is_none());
    }

    #[test]
    fn cyclic_group_actions_are_biactions() {
        let limits = Limits::default();
        let c2 = std_cats::cyclic(2, &limits).unwrap();
        // the regular representation: fiber C2 acted on by translation
        let a = LeftAction::representable(&c2, 0).unwrap();
        let b = is_biaction(&a).expect("group actions are bijective");
        // the right facet inverts: applying left then right is the identity
        let g = c2.arrow_id("g1").unwrap();
        for e in 0..a.fiber(0).len() {
            assert_eq!(b.j_right().apply(g, a.apply(g, e)), e);
        }
    }
}
