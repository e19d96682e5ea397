//! Deterministic instance generation. Every instance is derived from
//! `(seed, index)` alone, so a counterexample is reproducible from those two
//! numbers and the same seed always yields the identical stream.

use std::sync::Arc;

use crate::action::{is_biaction, biaction_embed, BiAction, LeftAction, RightAction};
use crate::catover::{self, OverCat};
use crate::fincat::diagram::{quotient, Diagram};
use crate::fincat::search::enumerate_functors_constrained;
use crate::fincat::{opposite, std_cats, Cat, FinSet, FunctorMap};
use crate::profunctor::{self, EndoProfunctor};
use crate::{Error, Limits, Result};

/// splitmix64: tiny, seedable, stable forever.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// uniform in `0..n` (n > 0)
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub seed: u64,
    pub instances: usize,
    pub max_objects: usize,
    pub max_arrows: usize,
    pub max_fiber: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { seed: 7, instances: 100, max_objects: 4, max_arrows: 14, max_fiber: 3 }
    }
}

impl FuzzConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_objects: self.max_objects.max(8),
            max_arrows: self.max_arrows.max(40),
            max_fiber: self.max_fiber.max(6),
            ..Limits::default()
        }
    }

    /// s / m / l size classes for the CLI.
    pub fn sized(mut self, class: &str) -> Result<FuzzConfig> {
        match class {
            "s" => {
                self.max_objects = 3;
                self.max_arrows = 9;
                self.max_fiber = 2;
                self.instances = self.instances.min(50);
            }
            "m" => {}
            "l" => {
                self.max_objects = 5;
                self.max_arrows = 20;
                self.max_fiber = 4;
            }
            other => {
                return Err(Error::TypeMismatch(format!("unknown size class `{other}`")));
            }
        }
        Ok(self)
    }
}

/// One fuzzed instance: categories, a composable pair of functors, actions
/// over both ends, finite sets, profunctors and objects of Cat/X.
#[derive(Debug, Clone)]
pub struct LawInput {
    pub index: usize,
    pub x: Cat,
    pub y: Cat,
    pub z: Cat,
    /// f : X → Y
    pub f: FunctorMap,
    /// a second parallel functor X → Y
    pub f2: FunctorMap,
    /// g : Y → Z
    pub g: FunctorMap,
    pub a: LeftAction,
    pub b: LeftAction,
    pub c: LeftAction,
    pub ay: LeftAction,
    pub ay2: LeftAction,
    pub m: RightAction,
    pub n: RightAction,
    pub m2: RightAction,
    pub my: RightAction,
    pub my2: RightAction,
    pub v: FinSet,
    pub v2: FinSet,
    pub h: EndoProfunctor,
    pub k: EndoProfunctor,
    pub hy: EndoProfunctor,
    pub p: OverCat,
    pub q: OverCat,
    pub bi: BiAction,
}

impl LawInput {
    pub fn x_is_groupoid(&self) -> bool {
        (0..self.x.n_arrows()).all(|a| self.x.is_iso(a))
    }
}

pub struct Fuzzer {
    config: FuzzConfig,
    limits: Limits,
}

/// What the category generator produced, for the coverage counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Poset,
    Groupoid,
    Monoid,
    Library,
}

impl Fuzzer {
    pub fn new(config: FuzzConfig) -> Fuzzer {
        let limits = config.limits();
        Fuzzer { config, limits }
    }

    pub fn config(&self) -> &FuzzConfig {
        &self.config
    }

    /// The deterministic instance at `index`.
    pub fn instance(&mut self, index: usize) -> Result<LawInput> {
        let mut rng = SplitMix64::new(
            self.config.seed ^ (index as u64).wrapping_mul(0xa24baed4963ee407),
        );
        let (x, _) = self.gen_cat(&mut rng, index);
        let mut rng_y = SplitMix64::new(rng.next_u64());
        let (y, _) = self.gen_cat(&mut rng_y, index / 3 + 1);
        let mut rng_z = SplitMix64::new(rng.next_u64());
        let (z, _) = self.gen_cat(&mut rng_z, index / 5 + 2);
        let f = self.gen_functor(&mut rng, &x, &y)?;
        let f2 = self.gen_functor(&mut rng, &x, &y)?;
        let g = self.gen_functor(&mut rng, &y, &z)?;
        let a = self.gen_left(&mut rng, &x)?;
        let b = self.gen_left(&mut rng, &x)?;
        let c = self.gen_left(&mut rng, &x)?;
        let ay = self.gen_left(&mut rng, &y)?;
        let ay2 = self.gen_left(&mut rng, &y)?;
        let m = self.gen_right(&mut rng, &x)?;
        let n = self.gen_right(&mut rng, &x)?;
        let m2 = self.gen_right(&mut rng, &x)?;
        let my = self.gen_right(&mut rng, &y)?;
        let my2 = self.gen_right(&mut rng, &y)?;
        let v = FinSet::numbered("v", 1 + rng.below(self.config.max_fiber));
        let v2 = FinSet::numbered("w", rng.below(self.config.max_fiber + 1));
        let h = self.gen_pro(&mut rng, &x)?;
        let k = self.gen_pro(&mut rng, &x)?;
        let hy = self.gen_pro(&mut rng, &y)?;
        let p = self.gen_over(&mut rng, &x)?;
        let q = self.gen_over(&mut rng, &x)?;
        let bi = self.gen_biaction(&mut rng, &x)?;
        Ok(LawInput {
            index,
            x,
            y,
            z,
            f,
            f2,
            g,
            a,
            b,
            c,
            ay,
            ay2,
            m,
            n,
            m2,
            my,
            my2,
            v,
            v2,
            h,
            k,
            hy,
            p,
            q,
            bi,
        })
    }

    /// Category generator; cycles shapes so every batch covers a groupoid, a
    /// non-groupoid and a poset.
    pub fn gen_cat(&self, rng: &mut SplitMix64, index: usize) -> (Cat, Shape) {
        match index % 4 {
            0 => (self.gen_poset(rng), Shape::Poset),
            1 => {
                let n = 2 + rng.below(2);
                (std_cats::cyclic(n, &self.limits).expect("cyclic builds"), Shape::Groupoid)
            }
            2 => (self.gen_monoid(rng), Shape::Monoid),
            _ => {
                let lib = std_cats::library(&self.limits);
                (lib[rng.below(lib.len())].clone(), Shape::Library)
            }
        }
    }

    fn gen_poset(&self, rng: &mut SplitMix64) -> Cat {
        let n = 1 + rng.below(self.config.max_objects);
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
            for j in (i + 1)..n {
                le[i * n + j] = rng.chance(2, 5);
            }
        }
        // transitive closure (only forward pairs are set, so this terminates)
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i * n + k] && le[k * n + j] {
                        le[i * n + j] = true;
                    }
                }
            }
        }
        let labels: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
        std_cats::poset_from_le(format!("P{n}"), &labels, |i, j| le[i * n + j], &self.limits)
            .expect("random poset builds")
    }

    fn gen_monoid(&self, rng: &mut SplitMix64) -> Cat {
        // all monoid tables of order ≤ 3 (unit fixed as element 0)
        let mut tables: Vec<Vec<Vec<usize>>> = vec![vec![vec![0]]];
        for x in 0..2usize {
            tables.push(vec![vec![0, 1], vec![1, x]]);
        }
        let mut order3 = Vec::new();
        for aa in 0..3 {
            for ab in 0..3 {
                for ba in 0..3 {
                    for bb in 0..3 {
                        let t = vec![vec![0, 1, 2], vec![1, aa, ab], vec![2, ba, bb]];
                        if monoid_assoc(&t) {
                            order3.push(t);
                        }
                    }
                }
            }
        }
        tables.extend(order3);
        let t = &tables[rng.below(tables.len())];
        std_cats::monoid(&format!("M{}", t.len()), t, &self.limits).expect("monoid builds")
    }

    /// A random functor: randomized object images, first arrow assignment
    /// found by the complete search; the constant functor always exists, so
    /// this cannot fail.
    pub fn gen_functor(&self, rng: &mut SplitMix64, x: &Cat, y: &Cat) -> Result<FunctorMap> {
        let mut cands: Vec<Vec<usize>> = Vec::with_capacity(x.n_objects());
        for _ in 0..x.n_objects() {
            let mut all: Vec<usize> = (0..y.n_objects()).collect();
            shuffle(rng, &mut all);
            cands.push(all);
        }
        let y2 = Arc::clone(y);
        let found = enumerate_functors_constrained(
            x,
            y,
            &move |o| cands[o].clone(),
            &move |_, s, t| y2.hom(s, t),
            &self.limits,
            Some(1),
        )?;
        let mut f = found.into_iter().next().ok_or_else(|| {
            Error::EngineBug("no functor found although the constant functor exists".into())
        })?;
        f.name = format!("f{}", rng.below(1000));
        Ok(f)
    }

    /// A random presheaf: a sum of representables (and optionally a constant
    /// block), glued by random identifications and clamped to the fiber
    /// bound by further gluing.
    pub fn gen_left(&self, rng: &mut SplitMix64, x: &Cat) -> Result<LeftAction> {
        let base_diag = self.gen_diagram(rng, &opposite(x), |o| {
            LeftAction::representable(x, o).map(|a| a.diagram().clone())
        })?;
        LeftAction::from_op_diagram(x, base_diag)
    }

    pub fn gen_right(&self, rng: &mut SplitMix64, x: &Cat) -> Result<RightAction> {
        let d = self.gen_diagram(rng, x, |o| {
            RightAction::representable(x, o).map(|m| m.diagram().clone())
        })?;
        Ok(RightAction::from_diagram(d))
    }

    fn gen_diagram(
        &self,
        rng: &mut SplitMix64,
        base: &Cat,
        rep: impl Fn(usize) -> Result<Diagram>,
    ) -> Result<Diagram> {
        let n = base.n_objects();
        if n == 0 {
            return Ok(Diagram::initial(base));
        }
        let mut summands: Vec<Diagram> = Vec::new();
        match rng.below(6) {
            0 => summands.push(Diagram::terminal(base)),
            1 => summands.push(Diagram::constant(
                base,
                &FinSet::numbered("c", 1 + rng.below(self.config.max_fiber)),
            )),
            2 => summands.push(Diagram::initial(base)),
            _ => {
                for _ in 0..(1 + rng.below(2)) {
                    summands.push(rep(rng.below(n))?);
                }
                if rng.chance(1, 3) {
                    summands.push(Diagram::terminal(base));
                }
            }
        }
        let mut d = sum_diagrams(base, &summands)?;
        // random gluings
        for _ in 0..rng.below(3) {
            let o = rng.below(n);
            let sz = d.fiber(o).len();
            if sz >= 2 {
                let e1 = rng.below(sz);
                let e2 = rng.below(sz);
                if e1 != e2 {
                    d = quotient(&d, &[(o, e1, e2)])?.0;
                }
            }
        }
        // clamp to the fiber bound by gluing
        loop {
            let Some(o) = (0..n).find(|&o| d.fiber(o).len() > self.config.max_fiber) else {
                break;
            };
            d = quotient(&d, &[(o, 0, 1)])?.0;
        }
        Ok(d)
    }

    pub fn gen_pro(&self, rng: &mut SplitMix64, x: &Cat) -> Result<EndoProfunctor> {
        match rng.below(5) {
            0 => profunctor::hom_profunctor(x, &self.limits),
            1 => {
                let a = self.gen_left(rng, x)?;
                let m = self.gen_right(rng, x)?;
                profunctor::outer_product(&a, &m, &self.limits)
            }
            2 => {
                let a = self.gen_left(rng, x)?;
                profunctor::dummy_left(&a, &self.limits)
            }
            3 => {
                let m = self.gen_right(rng, x)?;
                profunctor::dummy_right(&m, &self.limits)
            }
            _ => {
                let sq = profunctor::square_of(x, &self.limits)?;
                let d = self.gen_diagram(rng, &sq, |o| {
                    RightAction::representable(&sq, o).map(|m| m.diagram().clone())
                })?;
                profunctor::EndoProfunctor::from_inner(x, RightAction::from_diagram(d))
            }
        }
    }

    pub fn gen_over(&self, rng: &mut SplitMix64, x: &Cat) -> Result<OverCat> {
        match rng.below(5) {
            0 => Ok(OverCat::identity(x)),
            1 => crate::fincat::comma::slice(x, rng.below(x.n_objects().max(1)), &self.limits),
            2 => {
                let a = self.gen_left(rng, x)?;
                Ok(catover::elements_left(&a, &self.limits)?.over)
            }
            3 => {
                let m = self.gen_right(rng, x)?;
                Ok(catover::elements_right(&m, &self.limits)?.over)
            }
            _ => {
                let lib = std_cats::library(&self.limits);
                let p = lib[rng.below(lib.len())].clone();
                let pf = self.gen_functor(rng, &p, x)?;
                OverCat::new(pf)
            }
        }
    }

    /// A biaction over `x`: any fuzzed presheaf works on a groupoid;
    /// otherwise a constant one.
    pub fn gen_biaction(&self, rng: &mut SplitMix64, x: &Cat) -> Result<BiAction> {
        let groupoid = (0..x.n_arrows()).all(|a| x.is_iso(a));
        if groupoid {
            let a = self.gen_left(rng, x)?;
            if let Some(bi) = is_biaction(&a) {
                return Ok(bi);
            }
        }
        Ok(biaction_embed(x, &FinSet::numbered("v", 1 + rng.below(self.config.max_fiber))))
    }
}

fn monoid_assoc(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

fn shuffle(rng: &mut SplitMix64, v: &mut [usize]) {
    for i in (1..v.len()).rev() {
        let j = rng.below(i + 1);
        v.swap(i, j);
    }
}

/// Disjoint sum of diagrams over one base, with prefixed labels.
pub fn sum_diagrams(base: &Cat, parts: &[Diagram]) -> Result<Diagram> {
    let n = base.n_objects();
    let mut fibers = Vec::with_capacity(n);
    for o in 0..n {
        let mut labels = Vec::new();
        for (i, d) in parts.iter().enumerate() {
            for l in d.fiber(o).labels() {
                labels.push(format!("{i}.{l}"));
            }
        }
        fibers.push(FinSet::new(labels)?);
    }
    let maps = (0..base.n_arrows())
        .map(|ar| {
            let arr = base.arrow(ar);
            let mut offset_src = 0usize;
            let mut offset_tgt = 0usize;
            let mut m = Vec::new();
            for d in parts {
                for e in 0..d.fiber(arr.src).len() {
                    m.push(offset_tgt + d.apply(ar, e));
                    let _ = e;
                }
                offset_src += d.fiber(arr.src).len();
                offset_tgt += d.fiber(arr.tgt).len();
            }
            let _ = offset_src;
            m
        })
        .collect();
    Diagram::new(Arc::clone(base), fibers, maps)
}

/// Coverage over a batch: used by the suite tests to assert the stream mixes
/// shapes.
pub fn coverage(fuzzer: &Fuzzer, batch: usize) -> (bool, bool, bool) {
    let mut poset = false;
    let mut groupoid = false;
    let mut non_groupoid = false;
    for i in 0..batch {
        let mut rng = SplitMix64::new(
            fuzzer.config.seed ^ (i as u64).wrapping_mul(0xa24baed4963ee407),
        );
        let (cat, shape) = fuzzer.gen_cat(&mut rng, i);
        let is_groupoid = (0..cat.n_arrows()).all(|a| cat.is_iso(a));
        poset |= shape == Shape::Poset;
        groupoid |= is_groupoid;
        non_groupoid |= !is_groupoid;
    }
    (poset, groupoid, non_groupoid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let config = FuzzConfig { instances: 5, ..FuzzConfig::default() };
        let mut f1 = Fuzzer::new(config.clone());
        let mut f2 = Fuzzer::new(config);
        for i in 0..5 {
            let a = f1.instance(i).unwrap();
            let b = f2.instance(i).unwrap();
            assert_eq!(*a.x, *b.x);
            assert_eq!(a.f.obj_map, b.f.obj_map);
            assert_eq!(a.a, b.a);
            assert_eq!(a.h.inner(), b.h.inner());
        }
    }

    #[test]
    fn generated_values_validate() {
        let config = FuzzConfig { instances: 12, ..FuzzConfig::default() };
        let mut fz = Fuzzer::new(config);
        for i in 0..12 {
            let input = fz.instance(i).unwrap();
            // every constructor in the pipeline validates; revalidate the
            // core pieces explicitly
            input.a.diagram().validate().unwrap();
            input.m.diagram().validate().unwrap();
            input.h.inner().diagram().validate().unwrap();
        }
    }

    #[test]
    fn batch_covers_required_shapes() {
        let fz = Fuzzer::new(FuzzConfig::default());
        let (poset, groupoid, non_groupoid) = coverage(&fz, 8);
        assert!(poset && groupoid && non_groupoid);
    }

    #[test]
    fn fibers_respect_bounds() {
        let config = FuzzConfig { instances: 10, ..FuzzConfig::default() };
        let max = config.max_fiber;
        let mut fz = Fuzzer::new(config);
        for i in 0..10 {
            let input = fz.instance(i).unwrap();
            for o in 0..input.x.n_objects() {
                assert!(input.a.fiber(o).len() <= max);
                assert!(input.m.fiber(o).len() <= max);
            }
        }
    }
}
