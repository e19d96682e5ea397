//! Deliberate corruption of computed operators, used by the engine-integrity
//! tests: a corrupted `⋔`, `⊙` or `i_X` must make the corresponding law
//! checks produce counterexamples.

use std::collections::HashMap;
use std::sync::Arc;

use crate::catover::OverCat;
use crate::fincat::{Arrow, FinCat, FunctorMap};
use crate::action::RightAction;
use crate::{Limits, Result};

/// Swap two values in the action map of the first suitable non-identity
/// arrow. The result typically breaks functoriality or the law semantics;
/// returns `None` when the action has no room to corrupt.
pub fn corrupt_right_action(m: &RightAction) -> Option<RightAction> {
    let base = m.base().clone();
    for f in 0..base.n_arrows() {
        if base.is_identity(f) {
            continue;
        }
        let map = m.map(f);
        if map.len() >= 2 {
            let mut maps: Vec<Vec<usize>> = (0..base.n_arrows()).map(|g| m.map(g).to_vec()).collect();
            maps[f].swap(0, 1);
            let fibers = (0..base.n_objects()).map(|o| m.fiber(o).clone()).collect();
            return Some(RightAction::from_parts_unchecked(&base, fibers, maps));
        }
    }
    // fall back: swap inside an identity map (breaks the identity law)
    for f in 0..base.n_arrows() {
        if m.map(f).len() >= 2 {
            let mut maps: Vec<Vec<usize>> = (0..base.n_arrows()).map(|g| m.map(g).to_vec()).collect();
            maps[f].swap(0, 1);
            let fibers = (0..base.n_objects()).map(|o| m.fiber(o).clone()).collect();
            return Some(RightAction::from_parts_unchecked(&base, fibers, maps));
        }
    }
    None
}

/// Remove one total object (with every incident arrow) from an object of
/// `Cat/X`. The induced subcategory is still a category, so the result
/// validates — but it no longer computes what it used to.
pub fn drop_total_object(p: &OverCat, victim: usize, limits: &Limits) -> Result<OverCat> {
    let total = &p.total;
    let keep_obj: Vec<usize> = (0..total.n_objects()).filter(|&o| o != victim).collect();
    let obj_renum: HashMap<usize, usize> =
        keep_obj.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let keep_arr: Vec<usize> = (0..total.n_arrows())
        .filter(|&a| {
            let arr = total.arrow(a);
            arr.src != victim && arr.tgt != victim
        })
        .collect();
    let arr_renum: HashMap<usize, usize> =
        keep_arr.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let objects: Vec<String> = keep_obj.iter().map(|&o| total.object_label(o).to_string()).collect();
    let arrows: Vec<Arrow> = keep_arr
        .iter()
        .map(|&a| {
            let arr = total.arrow(a);
            Arrow { id: arr.id.clone(), src: obj_renum[&arr.src], tgt: obj_renum[&arr.tgt] }
        })
        .collect();
    let identities: Vec<usize> =
        keep_obj.iter().map(|&o| arr_renum[&total.identity(o)]).collect();
    let mut compose = HashMap::new();
    for &g in &keep_arr {
        for &f in &keep_arr {
            if total.arrow(f).tgt == total.arrow(g).src {
                compose.insert((arr_renum[&g], arr_renum[&f]), arr_renum[&total.comp(g, f)]);
            }
        }
    }
    let new_total = FinCat::from_parts(
        format!("{}∖1", total.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("{}∖1", p.proj.name),
        Arc::clone(&new_total),
        Arc::clone(p.base()),
        keep_obj.iter().map(|&o| p.proj.obj_map[o]).collect(),
        keep_arr.iter().map(|&a| p.proj.arrow_map[a]).collect(),
    )?;
    OverCat::new(proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::RightAction;
    use crate::fincat::std_cats;

    #[test]
    fn corrupted_action_fails_validation() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        // representable at a has fibers {id_a} and {u}: too small to corrupt
        // usefully; use a bigger one
        let big = crate::action::tensor_right(&m, &m).unwrap();
        let _ = big;
        let c3 = std_cats::chain(3, &limits).unwrap();
        let mm = RightAction::representable(&c3, 0).unwrap();
        let t = crate::action::tensor_right(
            &mm,
            &RightAction::constant(&c3, &crate::fincat::FinSet::numbered("e", 2)),
        )
        .unwrap();
        let corrupted = corrupt_right_action(&t).expect("room to corrupt");
        assert!(corrupted.diagram().validate().is_err() || {
            // a swap may happen to produce a different valid functor; it must
            // at least differ from the original
            corrupted != t
        });
    }

    #[test]
    fn dropping_an_object_keeps_a_valid_overcat() {
        let limits = Limits::default();
        let two = std_cats::walking_arrow(&limits).unwrap();
        let a = crate::action::LeftAction::representable(&two, 1).unwrap();
        let el = crate::catover::elements_left(&a, &limits).unwrap();
        let dropped = drop_total_object(&el.over, 0, &limits).unwrap();
        assert_eq!(dropped.total.n_objects(), el.over.total.n_objects() - 1);
    }
}
