//! Covariant finite-set-valued functors (`Diagram`) over a [`FinCat`] and the
//! complete natural-transformation search used by every law check.
//!
//! Contravariant functors are represented elsewhere as diagrams over the
//! opposite category; [`super::opposite`] preserves arrow indices, so the two
//! representations share action-map indexing.

use std::collections::HashMap;
use std::sync::Arc;

use super::{base_eq, Cat, FinSet};
use crate::{Error, Limits, Result};

/// One function per object, the components of a transformation.
pub type NatComponents = Vec<Vec<usize>>;

/// A covariant set-valued functor: a fiber per object and a function per
/// arrow (`maps[a]` sends the fiber over `src(a)` to the fiber over
/// `tgt(a)`, elementwise by index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub base: Cat,
    pub fibers: Vec<FinSet>,
    pub maps: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(base: Cat, fibers: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<Diagram> {
        let d = Diagram { base, fibers, maps };
        d.validate()?;
        Ok(d)
    }

    /// Functoriality check: identities act as identities and the action of a
    /// composite is the composite of actions, on every element.
    pub fn validate(&self) -> Result<()> {
        let err = |detail: String| Error::InvalidAction { action: format!("over {}", self.base.name), detail };
        if self.fibers.len() != self.base.n_objects() || self.maps.len() != self.base.n_arrows() {
            return Err(err("fiber or map table has the wrong length".into()));
        }
        for (a, map) in self.maps.iter().enumerate() {
            let arr = self.base.arrow(a);
            if map.len() != self.fibers[arr.src].len() {
                return Err(err(format!("map of `{}` has wrong domain size", arr.id)));
            }
            let cod = self.fibers[arr.tgt].len();
            if map.iter().any(|&v| v >= cod) {
                return Err(err(format!("map of `{}` has out-of-range value", arr.id)));
            }
        }
        for o in 0..self.base.n_objects() {
            let id = self.base.identity(o);
            if self.maps[id].iter().enumerate().any(|(i, &v)| i != v) {
                return Err(err(format!(
                    "identity of `{}` does not act as the identity",
                    self.base.object_label(o)
                )));
            }
        }
        for f in 0..self.base.n_arrows() {
            let tf = self.base.arrow(f).tgt;
            for &g in self.base.arrows_from(tf) {
                let gf = self.base.comp(g, f);
                for e in 0..self.maps[f].len() {
                    if self.maps[gf][e] != self.maps[g][self.maps[f][e]] {
                        return Err(err(format!(
                            "composite `{}`∘`{}` does not act as the composite of actions",
                            self.base.arrow(g).id,
                            self.base.arrow(f).id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn terminal(base: &Cat) -> Diagram {
        Diagram {
            base: Arc::clone(base),
            fibers: vec![FinSet::singleton("*"); base.n_objects()],
            maps: vec![vec![0]; base.n_arrows()],
        }
    }

    pub fn initial(base: &Cat) -> Diagram {
        Diagram {
            base: Arc::clone(base),
            fibers: vec![FinSet::empty(); base.n_objects()],
            maps: vec![Vec::new(); base.n_arrows()],
        }
    }

    /// Constant diagram at a finite set (every arrow acts as the identity).
    pub fn constant(base: &Cat, v: &FinSet) -> Diagram {
        let idmap: Vec<usize> = (0..v.len()).collect();
        Diagram {
            base: Arc::clone(base),
            fibers: vec![v.clone(); base.n_objects()],
            maps: vec![idmap; base.n_arrows()],
        }
    }

    pub fn fiber(&self, o: usize) -> &FinSet {
        &self.fibers[o]
    }

    pub fn map(&self, a: usize) -> &[usize] {
        &self.maps[a]
    }

    pub fn apply(&self, a: usize, e: usize) -> usize {
        self.maps[a][e]
    }

    pub fn total_size(&self) -> usize {
        self.fibers.iter().map(|f| f.len()).sum()
    }

    /// Pointwise product `self × other`, componentwise action.
    pub fn product(&self, other: &Diagram) -> Result<Diagram> {
        if !base_eq(&self.base, &other.base) {
            return Err(Error::BaseMismatch("product of diagrams over different bases".into()));
        }
        let fibers: Vec<FinSet> =
            self.fibers.iter().zip(&other.fibers).map(|(a, b)| a.product(b)).collect();
        let maps = (0..self.base.n_arrows())
            .map(|ar| {
                let src = self.base.arrow(ar).src;
                let (n1, n2) = (self.fibers[src].len(), other.fibers[src].len());
                let m2t = other.fibers[self.base.arrow(ar).tgt].len();
                let mut m = Vec::with_capacity(n1 * n2);
                for i in 0..n1 {
                    for j in 0..n2 {
                        m.push(self.maps[ar][i] * m2t + other.maps[ar][j]);
                    }
                }
                m
            })
            .collect();
        Diagram::new(Arc::clone(&self.base), fibers, maps)
    }

    /// Substitution along a functor `f : W → base`: fibers and maps pulled
    /// back through `f`.
    pub fn substitute(&self, f: &super::FunctorMap) -> Result<Diagram> {
        if !base_eq(&f.cod, &self.base) {
            return Err(Error::BaseMismatch(format!(
                "substitute: functor `{}` does not land in the diagram base",
                f.name
            )));
        }
        let fibers = f.obj_map.iter().map(|&o| self.fibers[o].clone()).collect();
        let maps = f.arrow_map.iter().map(|&a| self.maps[a].clone()).collect();
        Diagram::new(Arc::clone(&f.dom), fibers, maps)
    }
}

/// A natural transformation between two diagrams over the same base,
/// validated on every naturality square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransform {
    pub components: NatComponents,
}

impl NatTransform {
    pub fn new(src: &Diagram, dst: &Diagram, components: NatComponents) -> Result<NatTransform> {
        check_naturality(src, dst, &components)?;
        Ok(NatTransform { components })
    }

    pub fn identity(d: &Diagram) -> NatTransform {
        NatTransform { components: d.fibers.iter().map(|f| (0..f.len()).collect()).collect() }
    }

    pub fn is_pointwise_bijective(&self, src: &Diagram, dst: &Diagram) -> bool {
        self.components.iter().enumerate().all(|(o, c)| {
            let n = dst.fibers[o].len();
            c.len() == src.fibers[o].len() && c.len() == n && {
                let mut seen = vec![false; n];
                c.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            }
        })
    }

    /// Compose `self` after `first` (both families componentwise).
    pub fn after(&self, first: &NatTransform) -> NatTransform {
        NatTransform {
            components: first
                .components
                .iter()
                .zip(&self.components)
                .map(|(f, s)| f.iter().map(|&e| s[e]).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> Option<NatTransform> {
        let mut out = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let mut inv = vec![usize::MAX; c.len()];
            for (i, &v) in c.iter().enumerate() {
                if v >= c.len() || inv[v] != usize::MAX {
                    return None;
                }
                inv[v] = i;
            }
            out.push(inv);
        }
        Some(NatTransform { components: out })
    }

    /// Canonical printable label, used when hom-sets become fibers.
    pub fn canonical_label(&self, dst: &Diagram) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .map(|(o, c)| {
                let vals: Vec<&str> = c.iter().map(|&v| dst.fibers[o].label(v)).collect();
                format!("[{}]", vals.join(","))
            })
            .collect();
        format!("{{{}}}", parts.join(";"))
    }
}

pub fn check_naturality(src: &Diagram, dst: &Diagram, components: &NatComponents) -> Result<()> {
    if !base_eq(&src.base, &dst.base) {
        return Err(Error::BaseMismatch("naturality across different bases".into()));
    }
    let base = &src.base;
    if components.len() != base.n_objects() {
        return Err(Error::NaturalityViolation {
            arrow: "<family>".into(),
            detail: "component family has the wrong length".into(),
        });
    }
    for (o, c) in components.iter().enumerate() {
        if c.len() != src.fibers[o].len() || c.iter().any(|&v| v >= dst.fibers[o].len()) {
            return Err(Error::NaturalityViolation {
                arrow: base.object_label(o).into(),
                detail: "component is not a function between the fibers".into(),
            });
        }
    }
    for a in 0..base.n_arrows() {
        let arr = base.arrow(a);
        for e in 0..src.fibers[arr.src].len() {
            if dst.maps[a][components[arr.src][e]] != components[arr.tgt][src.maps[a][e]] {
                return Err(Error::NaturalityViolation {
                    arrow: arr.id.clone(),
                    detail: format!(
                        "square fails at element `{}`",
                        src.fibers[arr.src].label(e)
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Order objects so that each newly assigned object is maximally constrained
/// by arrows to already-assigned ones (greedy, deterministic).
fn constraint_order(base: &Cat) -> Vec<usize> {
    let n = base.n_objects();
    let mut degree_to_chosen = vec![0usize; n];
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for o in 0..n {
            if chosen[o]
                || (best != usize::MAX
                    && (degree_to_chosen[o], std::cmp::Reverse(o))
                        <= (degree_to_chosen[best], std::cmp::Reverse(best)))
            {
                continue;
            }
            best = o;
        }
        chosen[best] = true;
        order.push(best);
        for a in 0..base.n_arrows() {
            let arr = base.arrow(a);
            if arr.src == best && !chosen[arr.tgt] {
                degree_to_chosen[arr.tgt] += 1;
            }
            if arr.tgt == best && !chosen[arr.src] {
                degree_to_chosen[arr.src] += 1;
            }
        }
    }
    order
}

/// Element-wise backtracking: the variables are the individual source
/// elements (in an order that maximizes constraint propagation), so nothing
/// proportional to `|G|^|F|` is ever materialized and forced values prune
/// immediately.
struct NatSearch<'a> {
    src: &'a Diagram,
    dst: &'a Diagram,
    base: &'a Cat,
    /// flattened (object, element) variables in assignment order
    vars: Vec<(usize, usize)>,
    /// per variable: (arrow, other-var, direction) constraints against
    /// earlier variables; direction true means this var is the source side
    constraints: Vec<Vec<(usize, usize, bool)>>,
    bijective_only: bool,
    budget: usize,
    nodes: usize,
}

impl<'a> NatSearch<'a> {
    fn new(src: &'a Diagram, dst: &'a Diagram, bijective_only: bool, limits: &Limits) -> Self {
        let base = &src.base;
        let order = constraint_order(base);
        let mut vars = Vec::new();
        let mut var_of: Vec<Vec<usize>> =
            (0..base.n_objects()).map(|o| vec![usize::MAX; src.fibers[o].len()]).collect();
        for &o in &order {
            for e in 0..src.fibers[o].len() {
                var_of[o][e] = vars.len();
                vars.push((o, e));
            }
        }
        // constraints: for arrow a and source element e, the square
        // G(a)(α(src,e)) = α(tgt, F(a)(e)) links the two variables; attach
        // the check to whichever comes later in the order.
        let mut constraints: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); vars.len()];
        for a in 0..base.n_arrows() {
            let arr = base.arrow(a);
            for e in 0..src.fibers[arr.src].len() {
                let v_src = var_of[arr.src][e];
                let v_tgt = var_of[arr.tgt][src.maps[a][e]];
                if v_src == v_tgt {
                    // an endo-constraint within one variable (loop arrow)
                    constraints[v_src].push((a, v_src, true));
                } else if v_src < v_tgt {
                    constraints[v_tgt].push((a, v_src, false));
                } else {
                    constraints[v_src].push((a, v_tgt, true));
                }
            }
        }
        NatSearch {
            src,
            dst,
            base,
            vars,
            constraints,
            bijective_only,
            budget: limits.search_nodes,
            nodes: 0,
        }
    }

    fn run(&mut self, max_found: Option<usize>) -> Result<Vec<NatComponents>> {
        if self.bijective_only {
            for o in 0..self.base.n_objects() {
                if self.src.fibers[o].len() != self.dst.fibers[o].len() {
                    return Ok(Vec::new());
                }
            }
        } else if (0..self.base.n_objects())
            .any(|o| self.dst.fibers[o].is_empty() && !self.src.fibers[o].is_empty())
        {
            return Ok(Vec::new());
        }
        let mut assignment = vec![usize::MAX; self.vars.len()];
        let mut used: Vec<Vec<bool>> =
            (0..self.base.n_objects()).map(|o| vec![false; self.dst.fibers[o].len()]).collect();
        let mut found = Vec::new();
        self.descend(0, &mut assignment, &mut used, &mut found, max_found)?;
        Ok(found)
    }

    fn emit(&self, assignment: &[usize]) -> NatComponents {
        let mut comps: Vec<Vec<usize>> =
            (0..self.base.n_objects()).map(|o| vec![0; self.src.fibers[o].len()]).collect();
        for (v, &(o, e)) in self.vars.iter().enumerate() {
            comps[o][e] = assignment[v];
        }
        comps
    }

    fn descend(
        &mut self,
        v: usize,
        assignment: &mut Vec<usize>,
        used: &mut Vec<Vec<bool>>,
        found: &mut Vec<NatComponents>,
        max_found: Option<usize>,
    ) -> Result<bool> {
        if v == self.vars.len() {
            found.push(self.emit(assignment));
            return Ok(max_found.is_some_and(|m| found.len() >= m));
        }
        let (obj, _e) = self.vars[v];
        // a constraint with an assigned source side forces this value
        let mut forced: Option<usize> = None;
        for &(a, other, this_is_src) in &self.constraints[v] {
            if !this_is_src && other != v {
                let want = self.dst.maps[a][assignment[other]];
                match forced {
                    Some(w) if w != want => return Ok(false),
                    _ => forced = Some(want),
                }
            }
        }
        let cands: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => (0..self.dst.fibers[obj].len()).collect(),
        };
        'cand: for cand in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::size(
                    "natural-transformation search nodes",
                    self.nodes,
                    self.budget,
                ));
            }
            if self.bijective_only && used[obj][cand] {
                continue;
            }
            for &(a, other, this_is_src) in &self.constraints[v] {
                let ok = if other == v {
                    // loop constraint within one variable: G(a)(c) = c
                    self.dst.maps[a][cand] == cand
                } else if this_is_src {
                    self.dst.maps[a][cand] == assignment[other]
                } else {
                    self.dst.maps[a][assignment[other]] == cand
                };
                if !ok {
                    continue 'cand;
                }
            }
            assignment[v] = cand;
            if self.bijective_only {
                used[obj][cand] = true;
            }
            let stop = self.descend(v + 1, assignment, used, found, max_found)?;
            if self.bijective_only {
                used[obj][cand] = false;
            }
            assignment[v] = usize::MAX;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Complete enumeration of natural transformations `src → dst`. A hom-set
/// larger than the derived-fiber bound is a size error (the caller turns it
/// into a visible skip), since such sets only appear as fibers of further
/// constructions.
pub fn enumerate_nats(src: &Diagram, dst: &Diagram, limits: &Limits) -> Result<Vec<NatTransform>> {
    if !base_eq(&src.base, &dst.base) {
        return Err(Error::BaseMismatch("enumerate_nats across different bases".into()));
    }
    let mut s = NatSearch::new(src, dst, false, limits);
    let comps = s.run(Some(limits.derived_fiber + 1))?;
    if comps.len() > limits.derived_fiber {
        return Err(Error::size("natural-transformation hom-set", comps.len(), limits.derived_fiber));
    }
    Ok(comps.into_iter().map(|components| NatTransform { components }).collect())
}

/// Complete search for a natural isomorphism. Returns a witness whose
/// components are all bijections (the inverse family of a pointwise-bijective
/// natural transformation is automatically natural), or `None` when a
/// complete search finds none.
pub fn find_natural_iso(
    src: &Diagram,
    dst: &Diagram,
    limits: &Limits,
) -> Result<Option<NatTransform>> {
    if !base_eq(&src.base, &dst.base) {
        return Err(Error::BaseMismatch("find_natural_iso across different bases".into()));
    }
    // Cheap obstructions first: fiber sizes and image sizes per arrow.
    for o in 0..src.base.n_objects() {
        if src.fibers[o].len() != dst.fibers[o].len() {
            return Ok(None);
        }
    }
    for a in 0..src.base.n_arrows() {
        if image_size(&src.maps[a]) != image_size(&dst.maps[a])
            || kernel_signature(&src.maps[a]) != kernel_signature(&dst.maps[a])
        {
            return Ok(None);
        }
    }
    let mut s = NatSearch::new(src, dst, true, limits);
    let comps = s.run(Some(1))?;
    Ok(comps.into_iter().next().map(|components| NatTransform { components }))
}

fn image_size(map: &[usize]) -> usize {
    let mut v: Vec<usize> = map.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Sorted multiset of preimage sizes; invariant under isomorphism.
fn kernel_signature(map: &[usize]) -> Vec<usize> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &v in map {
        *counts.entry(v).or_default() += 1;
    }
    let mut sig: Vec<usize> = counts.into_values().collect();
    sig.sort_unstable();
    sig
}

/// A per-fiber congruence closure: seeds are element identifications, closed
/// under every action map. Returns the quotient diagram and the class maps.
pub fn quotient(
    d: &Diagram,
    seeds: &[(usize, usize, usize)],
) -> Result<(Diagram, Vec<Vec<usize>>)> {
    let n = d.base.n_objects();
    let mut uf: Vec<crate::util::UnionFind> =
        (0..n).map(|o| crate::util::UnionFind::new(d.fibers[o].len())).collect();
    for &(o, a, b) in seeds {
        uf[o].union(a, b);
    }
    // Propagate: if a ~ b in the source fiber then fa ~ fb in the target.
    let mut changed = true;
    while changed {
        changed = false;
        for ar in 0..d.base.n_arrows() {
            let arrow = d.base.arrow(ar);
            let src_sz = d.fibers[arrow.src].len();
            for e1 in 0..src_sz {
                for e2 in (e1 + 1)..src_sz {
                    if uf[arrow.src].find(e1) == uf[arrow.src].find(e2)
                        && uf[arrow.tgt].union(d.maps[ar][e1], d.maps[ar][e2])
                    {
                        changed = true;
                    }
                }
            }
        }
    }
    let mut class_maps = Vec::with_capacity(n);
    let mut fibers = Vec::with_capacity(n);
    for o in 0..n {
        let (labels, class_of) = class_labels(&mut uf[o], d.fibers[o].labels());
        fibers.push(FinSet::new(labels)?);
        class_maps.push(class_of);
    }
    let maps = (0..d.base.n_arrows())
        .map(|ar| {
            let arrow = d.base.arrow(ar);
            let mut m = vec![usize::MAX; fibers[arrow.src].len()];
            for e in 0..d.fibers[arrow.src].len() {
                m[class_maps[arrow.src][e]] = class_maps[arrow.tgt][d.maps[ar][e]];
            }
            m
        })
        .collect();
    let q = Diagram::new(Arc::clone(&d.base), fibers, maps)?;
    Ok((q, class_maps))
}

/// Canonical class labels: each class is labeled by its lexicographically
/// least member wrapped in brackets, classes ordered by first occurrence.
pub(crate) fn class_labels(
    uf: &mut crate::util::UnionFind,
    labels: &[String],
) -> (Vec<String>, Vec<usize>) {
    let n = labels.len();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut out_labels = Vec::new();
    for e in 0..n {
        let r = uf.find(e);
        let existing = reps.iter().position(|&q| q == r);
        match existing {
            Some(c) => class_of[e] = c,
            None => {
                class_of[e] = reps.len();
                reps.push(r);
                out_labels.push(String::new());
            }
        }
    }
    // pick least member label per class
    let mut min_label: Vec<Option<&String>> = vec![None; reps.len()];
    for e in 0..n {
        let c = class_of[e];
        if min_label[c].map_or(true, |cur| labels[e] < *cur) {
            min_label[c] = Some(&labels[e]);
        }
    }
    for (c, m) in min_label.iter().enumerate() {
        out_labels[c] = format!("[{}]", m.unwrap());
    }
    (out_labels, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    /// Independent brute-force oracle: enumerate all families and filter by
    /// naturality, no pruning.
    fn nats_brute(src: &Diagram, dst: &Diagram) -> usize {
        let base = &src.base;
        let per_obj: Vec<Vec<Vec<usize>>> = (0..base.n_objects())
            .map(|o| src.fibers[o].function_labels(&dst.fibers[o]))
            .collect();
        let mut count = 0usize;
        let mut idx = vec![0usize; base.n_objects()];
        'outer: loop {
            if per_obj.iter().any(|c| c.is_empty()) {
                break;
            }
            let family: NatComponents =
                idx.iter().enumerate().map(|(o, &i)| per_obj[o][i].clone()).collect();
            if check_naturality(src, dst, &family).is_ok() {
                count += 1;
            }
            for o in 0..base.n_objects() {
                idx[o] += 1;
                if idx[o] < per_obj[o].len() {
                    continue 'outer;
                }
                idx[o] = 0;
            }
            break;
        }
        count
    }

    fn two_chain_diagram() -> Diagram {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let u = two.arrow_id("u").unwrap();
        let mut maps = vec![Vec::new(); two.n_arrows()];
        maps[two.identity(0)] = vec![0, 1];
        maps[two.identity(1)] = vec![0, 1, 2];
        maps[u] = vec![0, 2];
        Diagram::new(two, vec![FinSet::numbered("a", 2), FinSet::numbered("b", 3)], maps).unwrap()
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        let d = two_chain_diagram();
        let t = Diagram::terminal(&d.base);
        for (f, g) in [(&d, &d), (&d, &t), (&t, &d)] {
            let fast = enumerate_nats(f, g, &limits()).unwrap().len();
            assert_eq!(fast, nats_brute(f, g));
        }
    }

    #[test]
    fn terminal_target_has_exactly_one_nat() {
        let d = two_chain_diagram();
        let t = Diagram::terminal(&d.base);
        assert_eq!(enumerate_nats(&d, &t, &limits()).unwrap().len(), 1);
    }

    #[test]
    fn identity_iso_found() {
        let d = two_chain_diagram();
        let iso = find_natural_iso(&d, &d, &limits()).unwrap().unwrap();
        assert!(iso.is_pointwise_bijective(&d, &d));
        let inv = iso.inverse().unwrap();
        check_naturality(&d, &d, &inv.components).unwrap();
    }

    #[test]
    fn cardinality_obstruction_means_no_iso() {
        let d = two_chain_diagram();
        let t = Diagram::terminal(&d.base);
        assert!(find_natural_iso(&d, &t, &limits()).unwrap().is_none());
    }

    #[test]
    fn iso_search_is_symmetric() {
        let d = two_chain_diagram();
        let t = Diagram::terminal(&d.base);
        for (f, g) in [(&d, &d), (&d, &t)] {
            let fwd = find_natural_iso(f, g, &limits()).unwrap().is_some();
            let bwd = find_natural_iso(g, f, &limits()).unwrap().is_some();
            assert_eq!(fwd, bwd);
        }
    }

    #[test]
    fn quotient_respects_action() {
        let d = two_chain_diagram();
        // glue the two elements over `a`; their images over `b` must merge.
        let (q, classes) = quotient(&d, &[(0, 0, 1)]).unwrap();
        assert_eq!(q.fibers[0].len(), 1);
        assert_eq!(q.fibers[1].len(), 2);
        assert_eq!(classes[1][0], classes[1][2]);
        q.validate().unwrap();
    }
}
