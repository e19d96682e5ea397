//! Property tests driving the deterministic fuzzer from proptest-chosen
//! seeds: structural invariants that should hold for every generated value.

use actegory_core::action::{hom_left, iso_left, LeftAction};
use actegory_core::fincat::diagram::{check_naturality, enumerate_nats, find_natural_iso};
use actegory_core::fincat::{opposite, std_cats};
use actegory_core::lawsuite::{Fuzzer, FuzzConfig};
use actegory_core::Limits;
use proptest::prelude::*;

fn small_config(seed: u64) -> FuzzConfig {
    FuzzConfig { seed, instances: 1, max_objects: 3, max_arrows: 9, max_fiber: 2 }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn opposite_is_involutive(seed in any::<u64>()) {
        let config = small_config(seed);
        let mut fz = Fuzzer::new(config);
        let input = fz.instance(0).unwrap();
        let op = opposite(&input.x);
        prop_assert_eq!(op.n_arrows(), input.x.n_arrows());
        prop_assert_eq!(&*opposite(&op), &*input.x);
    }

    #[test]
    fn iso_search_is_symmetric(seed in any::<u64>()) {
        let config = small_config(seed);
        let limits = config.limits();
        let mut fz = Fuzzer::new(config);
        let input = fz.instance(0).unwrap();
        let fwd = find_natural_iso(input.a.diagram(), input.b.diagram(), &limits).unwrap();
        let bwd = find_natural_iso(input.b.diagram(), input.a.diagram(), &limits).unwrap();
        prop_assert_eq!(fwd.is_some(), bwd.is_some());
        if let Some(t) = fwd {
            // a found witness is pointwise bijective with a natural inverse
            prop_assert!(t.is_pointwise_bijective(input.a.diagram(), input.b.diagram()));
            let inv = t.inverse().unwrap();
            prop_assert!(check_naturality(input.b.diagram(), input.a.diagram(), &inv.components).is_ok());
        }
    }

    #[test]
    fn nat_enumeration_matches_blind_oracle(seed in any::<u64>()) {
        // tiny instances only: the oracle is the full cartesian product of
        // component functions filtered by naturality
        let config = small_config(seed);
        let limits = config.limits();
        let mut fz = Fuzzer::new(config);
        let input = fz.instance(0).unwrap();
        let (f, g) = (input.m.diagram(), input.n.diagram());
        let total: usize = (0..f.base.n_objects())
            .map(|o| g.fiber(o).len().pow(f.fiber(o).len() as u32))
            .product();
        prop_assume!(total <= 4096);
        let fast = enumerate_nats(f, g, &limits).unwrap().len();
        let mut slow = 0usize;
        let per_obj: Vec<Vec<Vec<usize>>> = (0..f.base.n_objects())
            .map(|o| f.fiber(o).function_labels(g.fiber(o)))
            .collect();
        let mut idx = vec![0usize; per_obj.len()];
        'outer: loop {
            if per_obj.iter().any(|c| c.is_empty()) {
                break;
            }
            let family: Vec<Vec<usize>> =
                idx.iter().enumerate().map(|(o, &i)| per_obj[o][i].clone()).collect();
            if check_naturality(f, g, &family).is_ok() {
                slow += 1;
            }
            for o in 0..per_obj.len() {
                idx[o] += 1;
                if idx[o] < per_obj[o].len() {
                    continue 'outer;
                }
                idx[o] = 0;
            }
            break;
        }
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn yoneda_counts_on_fuzzed_presheaves(seed in any::<u64>()) {
        let config = small_config(seed);
        let limits = config.limits();
        let mut fz = Fuzzer::new(config);
        let input = fz.instance(0).unwrap();
        for x in 0..input.x.n_objects() {
            let rep = LeftAction::representable(&input.x, x).unwrap();
            let hom = hom_left(&rep, &input.a, &limits).unwrap();
            prop_assert_eq!(hom.len(), input.a.fiber(x).len());
        }
    }

    #[test]
    fn representables_on_rigid_posets_are_pairwise_noniso(seed in any::<u64>()) {
        let limits = Limits::default();
        let n = 2 + (seed % 3) as usize;
        let chain = std_cats::chain(n, &limits).unwrap();
        for x in 0..n {
            for y in 0..n {
                let rx = LeftAction::representable(&chain, x).unwrap();
                let ry = LeftAction::representable(&chain, y).unwrap();
                let found = iso_left(&rx, &ry, &limits).unwrap().is_some();
                prop_assert_eq!(found, x == y);
            }
        }
    }
}
