//! The two-valued models: finite posets with their down-set / up-set pair
//! and finite topological spaces with their open / closed pair. The same
//! complement algebra is evaluated with subsets as actions and inclusion as
//! the (truth-valued) hom, exhaustively over the lattices.
//!
//! Subsets are bitmasks (`u32`), so everything here is exact set arithmetic.

use crate::{Error, Result};

/// A finite poset: labeled elements with a validated order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    pub elems: Vec<String>,
    le: Vec<bool>, // row-major n×n
}

impl FinitePoset {
    pub fn new(elems: Vec<String>, le: Vec<bool>) -> Result<FinitePoset> {
        let n = elems.len();
        if le.len() != n * n {
            return Err(Error::TypeMismatch("order table has the wrong size".into()));
        }
        let p = FinitePoset { elems, le };
        for i in 0..n {
            if !p.le(i, i) {
                return Err(Error::TypeMismatch(format!("order not reflexive at {i}")));
            }
            for j in 0..n {
                if p.le(i, j) && p.le(j, i) && i != j {
                    return Err(Error::TypeMismatch(format!("order not antisymmetric at ({i},{j})")));
                }
                for k in 0..n {
                    if p.le(i, j) && p.le(j, k) && !p.le(i, k) {
                        return Err(Error::TypeMismatch(format!(
                            "order not transitive at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.n() + j]
    }

    pub fn chain(n: usize) -> FinitePoset {
        let elems = (0..n).map(|i| format!("p{i}")).collect();
        let mut le = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                le[i * n + j] = true;
            }
        }
        FinitePoset { elems, le }
    }

    pub fn antichain(n: usize) -> FinitePoset {
        let elems = (0..n).map(|i| format!("p{i}")).collect();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        FinitePoset { elems, le }
    }

    /// All partial orders on `n` labeled points.
    pub fn enumerate_all(n: usize) -> Vec<FinitePoset> {
        assert!(n <= 4, "exhaustive poset enumeration is desk-scale only");
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut le = vec![false; n * n];
            for i in 0..n {
                le[i * n + i] = true;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    le[i * n + j] = true;
                }
            }
            let elems = (0..n).map(|i| format!("p{i}")).collect();
            if let Ok(p) = FinitePoset::new(elems, le) {
                out.push(p);
            }
        }
        out
    }

    /// Monotone maps into another poset, as point tables.
    pub fn monotone_maps(&self, other: &FinitePoset) -> Vec<Vec<usize>> {
        let n = self.n();
        let m = other.n();
        let mut out = Vec::new();
        let mut cur = vec![0usize; n];
        if n == 0 {
            return vec![Vec::new()];
        }
        'outer: loop {
            let ok = (0..n).all(|i| {
                (0..n).all(|j| !self.le(i, j) || other.le(cur[i], cur[j]))
            });
            if ok {
                out.push(cur.clone());
            }
            for k in 0..n {
                cur[k] += 1;
                if cur[k] < m {
                    continue 'outer;
                }
                cur[k] = 0;
            }
            break;
        }
        out
    }
}

/// A finite topological space stored by its open-set lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    pub points: Vec<String>,
    opens: Vec<u32>,
}

impl FiniteSpace {
    pub fn new(points: Vec<String>, mut opens: Vec<u32>) -> Result<FiniteSpace> {
        let n = points.len();
        let full = full_mask(n);
        opens.sort_unstable();
        opens.dedup();
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(Error::TypeMismatch("topology must contain ∅ and the whole set".into()));
        }
        for &a in &opens {
            if a & !full != 0 {
                return Err(Error::TypeMismatch("open set out of range".into()));
            }
            for &b in &opens {
                if !opens.contains(&(a | b)) || !opens.contains(&(a & b)) {
                    return Err(Error::TypeMismatch(
                        "topology not closed under union/intersection".into(),
                    ));
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn full(&self) -> u32 {
        full_mask(self.n())
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn is_open(&self, s: u32) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed(&self, s: u32) -> bool {
        self.is_open(!s & self.full())
    }

    pub fn discrete(n: usize) -> FiniteSpace {
        let points = (0..n).map(|i| format!("t{i}")).collect();
        FiniteSpace { points, opens: (0..=full_mask(n)).collect() }
    }

    pub fn sierpinski() -> FiniteSpace {
        // points o (open point) and c; opens ∅, {o}, {o,c}
        FiniteSpace { points: vec!["o".into(), "c".into()], opens: vec![0b00, 0b01, 0b11] }
    }

    /// All topologies on `n` labeled points.
    pub fn enumerate_all(n: usize) -> Vec<FiniteSpace> {
        assert!(n <= 3, "exhaustive topology enumeration is desk-scale only");
        let full = full_mask(n);
        let proper: Vec<u32> = (1..full).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << proper.len()) {
            let mut opens = vec![0, full];
            for (b, &s) in proper.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    opens.push(s);
                }
            }
            let points = (0..n).map(|i| format!("t{i}")).collect();
            if let Ok(sp) = FiniteSpace::new(points, opens) {
                out.push(sp);
            }
        }
        out
    }

    /// Continuous maps into another space, as point tables.
    pub fn continuous_maps(&self, other: &FiniteSpace) -> Vec<Vec<usize>> {
        let n = self.n();
        let m = other.n();
        let mut out = Vec::new();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut cur = vec![0usize; n];
        'outer: loop {
            let ok = other.opens.iter().all(|&o| self.is_open(preimage(&cur, o)));
            if ok {
                out.push(cur.clone());
            }
            for k in 0..n {
                cur[k] += 1;
                if cur[k] < m {
                    continue 'outer;
                }
                cur[k] = 0;
            }
            break;
        }
        out
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 { u32::MAX } else { (1u32 << n) - 1 }
}

fn preimage(map: &[usize], s: u32) -> u32 {
    let mut out = 0u32;
    for (i, &fi) in map.iter().enumerate() {
        if s & (1 << fi) != 0 {
            out |= 1 << i;
        }
    }
    out
}

/// A subset lattice (members sorted ascending as bitmasks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetLattice {
    pub members: Vec<u32>,
}

impl SubsetLattice {
    pub fn contains(&self, s: u32) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The lattice quadruple of a poset: down-sets, up-sets, up-down-closed
/// sets, all subsets.
pub fn lattices_poset(p: &FinitePoset) -> (SubsetLattice, SubsetLattice, SubsetLattice, SubsetLattice) {
    let n = p.n();
    let full = full_mask(n);
    let mut down = Vec::new();
    let mut up = Vec::new();
    let mut both = Vec::new();
    for s in 0..=full {
        let is_down = (0..n).all(|i| {
            s & (1 << i) == 0 || (0..n).all(|j| !p.le(j, i) || s & (1 << j) != 0)
        });
        let is_up = (0..n).all(|i| {
            s & (1 << i) == 0 || (0..n).all(|j| !p.le(i, j) || s & (1 << j) != 0)
        });
        if is_down {
            down.push(s);
        }
        if is_up {
            up.push(s);
        }
        if is_down && is_up {
            both.push(s);
        }
    }
    (
        SubsetLattice { members: down },
        SubsetLattice { members: up },
        SubsetLattice { members: both },
        SubsetLattice { members: (0..=full).collect() },
    )
}

/// The lattice quadruple of a space: opens, closeds, clopens, all subsets.
pub fn lattices_space(
    sp: &FiniteSpace,
) -> (SubsetLattice, SubsetLattice, SubsetLattice, SubsetLattice) {
    let full = sp.full();
    let opens = sp.opens().to_vec();
    let mut closeds: Vec<u32> = opens.iter().map(|&o| !o & full).collect();
    closeds.sort_unstable();
    let clopens: Vec<u32> = opens.iter().copied().filter(|&o| sp.is_closed(o)).collect();
    (
        SubsetLattice { members: opens },
        SubsetLattice { members: closeds },
        SubsetLattice { members: clopens },
        SubsetLattice { members: (0..=full).collect() },
    )
}

/// A complемented pair of subset lattices over one carrier, with its
/// reflections (the closure into the right lattice and the interior into the
/// left one).
#[derive(Debug, Clone)]
pub struct TwoPair {
    pub n: usize,
    pub full: u32,
    pub lefts: SubsetLattice,
    pub rights: SubsetLattice,
    pub bis: SubsetLattice,
    /// representable pairs per point: (left rep = smallest left containing x,
    /// right rep = smallest right containing x)
    pub reps: Vec<(u32, u32)>,
}

impl TwoPair {
    pub fn from_poset(p: &FinitePoset) -> TwoPair {
        let (down, up, both, _) = lattices_poset(p);
        let n = p.n();
        let reps = (0..n)
            .map(|x| {
                let mut d = 0u32;
                let mut u = 0u32;
                for j in 0..n {
                    if p.le(j, x) {
                        d |= 1 << j;
                    }
                    if p.le(x, j) {
                        u |= 1 << j;
                    }
                }
                (d, u)
            })
            .collect();
        TwoPair { n, full: full_mask(n), lefts: down, rights: up, bis: both, reps }
    }

    pub fn from_space(sp: &FiniteSpace) -> TwoPair {
        let (opens, closeds, clopens, _) = lattices_space(sp);
        let n = sp.n();
        let full = sp.full();
        let reps = (0..n)
            .map(|x| {
                let pt = 1u32 << x;
                let min_open =
                    opens.members.iter().copied().filter(|&o| o & pt != 0).fold(full, |a, b| a & b);
                let cl = closeds
                    .members
                    .iter()
                    .copied()
                    .filter(|&c| c & pt != 0)
                    .fold(full, |a, b| a & b);
                (min_open, cl)
            })
            .collect();
        TwoPair { n, full, lefts: opens, rights: closeds, bis: clopens, reps }
    }

    pub fn co(&self, s: u32) -> u32 {
        !s & self.full
    }

    /// Smallest member of the right lattice containing `s`.
    pub fn closure_right(&self, s: u32) -> u32 {
        self.rights.members.iter().copied().filter(|&c| c & s == s).fold(self.full, |a, b| a & b)
    }

    /// Largest member of the left lattice inside `s`.
    pub fn interior_left(&self, s: u32) -> u32 {
        self.lefts.members.iter().copied().filter(|&o| o & s == o).fold(0, |a, b| a | b)
    }

    /// Smallest member of the left lattice containing `s`.
    pub fn closure_left(&self, s: u32) -> u32 {
        self.lefts.members.iter().copied().filter(|&c| c & s == s).fold(self.full, |a, b| a & b)
    }

    /// Largest member of the right lattice inside `s`.
    pub fn interior_right(&self, s: u32) -> u32 {
        self.rights.members.iter().copied().filter(|&o| o & s == o).fold(0, |a, b| a | b)
    }

    /// `A ⋔ M = ∁A ∪ M` (left complement acting on the right lattice).
    pub fn complement2(&self, a: u32, m: u32) -> Result<u32> {
        if !self.lefts.contains(a) {
            return Err(Error::TypeMismatch("first argument of ⋔ must be in the left lattice".into()));
        }
        if !self.rights.contains(m) {
            return Err(Error::TypeMismatch("second argument of ⋔ must be in the right lattice".into()));
        }
        Ok(self.co(a) | m)
    }

    /// `A ⊙ M`: closure of the intersection (right reflection).
    pub fn oodot2(&self, a: u32, m: u32) -> u32 {
        self.closure_right(a & m)
    }

    /// `N ▷ M`: interior of the relative complement (left coreflection).
    pub fn tri2(&self, n: u32, m: u32) -> u32 {
        self.interior_left(self.co(n) | m)
    }

    /// The r-half operators, with the lattice roles exchanged.
    pub fn complement2_r(&self, m: u32, a: u32) -> u32 {
        self.co(m) | a
    }

    pub fn oodot2_r(&self, m: u32, a: u32) -> u32 {
        self.closure_left(m & a)
    }

    pub fn tri2_r(&self, a: u32, b: u32) -> u32 {
        self.interior_right(self.co(a) | b)
    }

    /// Heyting implication in the left lattice.
    pub fn imp_left(&self, a: u32, b: u32) -> u32 {
        self.interior_left(self.co(a) | b)
    }
}

/// A monotone / continuous map between carriers of two pairs, acting by
/// preimage on both lattices.
#[derive(Debug, Clone)]
pub struct TwoMap {
    pub map: Vec<usize>,
}

impl TwoMap {
    pub fn validate(&self, src: &TwoPair, dst: &TwoPair) -> Result<()> {
        for &l in &dst.lefts.members {
            if !src.lefts.contains(preimage(&self.map, l)) {
                return Err(Error::TypeMismatch("preimage of a left set is not left".into()));
            }
        }
        for &r in &dst.rights.members {
            if !src.rights.contains(preimage(&self.map, r)) {
                return Err(Error::TypeMismatch("preimage of a right set is not right".into()));
            }
        }
        Ok(())
    }

    pub fn pre(&self, s: u32) -> u32 {
        preimage(&self.map, s)
    }

    pub fn image(&self, s: u32) -> u32 {
        let mut out = 0;
        for (i, &fi) in self.map.iter().enumerate() {
            if s & (1 << i) != 0 {
                out |= 1 << fi;
            }
        }
        out
    }

    /// `∃^ℓ_f` : left reflection of the image.
    pub fn exists_left(&self, dst: &TwoPair, a: u32) -> u32 {
        dst.closure_left(self.image(a))
    }

    pub fn exists_right(&self, dst: &TwoPair, m: u32) -> u32 {
        dst.closure_right(self.image(m))
    }

    /// `∀^ℓ_f` : largest left set of the codomain pulling back inside `a`.
    pub fn forall_left(&self, src: &TwoPair, dst: &TwoPair, a: u32) -> u32 {
        dst.lefts.members.iter().copied().filter(|&b| self.pre(b) & src.co(a) == 0).fold(0, |x, y| x | y)
    }

    pub fn forall_right(&self, src: &TwoPair, dst: &TwoPair, m: u32) -> u32 {
        dst.rights.members.iter().copied().filter(|&b| self.pre(b) & src.co(m) == 0).fold(0, |x, y| x | y)
    }
}

/// Order-compatible binary relations on a poset (`2^{X^op×X}`): down-closed
/// in the first argument, up-closed in the second.
pub fn compatible_relations(p: &FinitePoset) -> Vec<Vec<bool>> {
    let n = p.n();
    let cells: usize = n * n;
    let mut out = Vec::new();
    for mask in 0u64..(1 << cells) {
        let rel: Vec<bool> = (0..cells).map(|c| mask & (1 << c) != 0).collect();
        let compatible = (0..n).all(|x| {
            (0..n).all(|y| {
                !rel[x * n + y]
                    || (0..n).all(|xp| {
                        (0..n).all(|yp| !(p.le(xp, x) && p.le(y, yp)) || rel[xp * n + yp])
                    })
            })
        });
        if compatible {
            out.push(rel);
        }
    }
    out
}

/// `◇_X P` for a subset `P`: the relation `x ◇ y ⟺ ∃ a ∈ P, x ≤ a ≤ y`.
pub fn poset_comprehension(p: &FinitePoset, pset: u32) -> Vec<bool> {
    let n = p.n();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] =
                (0..n).any(|a| pset & (1 << a) != 0 && p.le(x, a) && p.le(a, y));
        }
    }
    rel
}

/// `i_X H = { x | H(x,x) }`.
pub fn poset_extension(p: &FinitePoset, rel: &[bool]) -> u32 {
    let n = p.n();
    let mut s = 0;
    for x in 0..n {
        if rel[x * n + x] {
            s |= 1 << x;
        }
    }
    s
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// One two-valued law verdict.
#[derive(Debug, Clone)]
pub struct Law2Result {
    pub id: &'static str,
    pub pass: bool,
    pub cases: usize,
}

/// Run the two-valued law table for a pair and a map `f : X → Y` between
/// pairs (use the identity map to exercise only the pair-level laws).
/// Every law is checked exhaustively over the relevant lattices.
pub fn law_suite_2(x: &TwoPair, y: &TwoPair, f: &TwoMap) -> Result<Vec<Law2Result>> {
    f.validate(x, y)?;
    let mut out = Vec::new();
    let mut push = |id: &'static str, pass: bool, cases: usize| {
        out.push(Law2Result { id, pass, cases });
    };

    // comp1 block: unit and associativity for ⊗ = ∩ and the ⋔-action law
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            pass &= (x.full & a) == a;
            cases += 1;
        }
        push("comp1.1", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &b in &x.lefts.members {
                for &c in &x.lefts.members {
                    pass &= ((a & b) & c) == (a & (b & c));
                    cases += 1;
                }
            }
        }
        push("comp1.2", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &m in &x.rights.members {
            pass &= x.complement2(x.full, m)? == m;
            cases += 1;
        }
        push("comp1.3", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &b in &x.lefts.members {
                for &m in &x.rights.members {
                    pass &= x.complement2(a & b, m)? == x.complement2(a, x.complement2(b, m)?)?;
                    cases += 1;
                }
            }
        }
        push("comp1.4", pass, cases);
    }

    // comp2/comp11: the adjunction trinity as inclusions
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &m in &x.rights.members {
                for &nn in &x.rights.members {
                    let c = x.complement2(a, m)?;
                    let lhs = subset(nn, c);
                    let mid = subset(x.oodot2(a, nn), m);
                    let rhs = subset(a, x.tri2(nn, m));
                    pass &= lhs == mid && mid == rhs;
                    cases += 1;
                }
            }
        }
        push("comp2", pass, cases);
    }
    {
        // the r-half trinity
        let mut pass = true;
        let mut cases = 0;
        for &m in &x.rights.members {
            for &a in &x.lefts.members {
                for &b in &x.lefts.members {
                    let c = x.complement2_r(m, a);
                    let lhs = subset(b, c);
                    let mid = subset(x.oodot2_r(m, b), a);
                    let rhs = subset(m, x.tri2_r(b, a));
                    pass &= lhs == mid && mid == rhs;
                    cases += 1;
                }
            }
        }
        push("comp11", pass, cases);
    }

    // comp5: internal hom laws in the left (Heyting) lattice
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            pass &= x.imp_left(x.full, a) == a;
            for &b in &x.lefts.members {
                for &c in &x.lefts.members {
                    pass &= x.imp_left(a & b, c) == x.imp_left(a, x.imp_left(b, c));
                    cases += 1;
                }
            }
        }
        push("comp5", pass, cases);
    }

    // comp6: unit/associativity for ⊙ and the ▷ exchange laws
    {
        let mut pass = true;
        let mut cases = 0;
        for &m in &x.rights.members {
            pass &= x.oodot2(x.full, m) == m;
            cases += 1;
        }
        push("comp6.1", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &b in &x.lefts.members {
                for &m in &x.rights.members {
                    pass &= x.oodot2(a & b, m) == x.oodot2(a, x.oodot2(b, m));
                    cases += 1;
                }
            }
        }
        push("comp6.2", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &m in &x.rights.members {
                for &nn in &x.rights.members {
                    let lhs = x.tri2(x.oodot2(a, m), nn);
                    let mid = x.imp_left(a, x.tri2(m, nn));
                    let rhs = x.tri2(m, x.complement2(a, nn)?);
                    pass &= lhs == mid && mid == rhs;
                    cases += 1;
                }
            }
        }
        push("comp6.3", pass, cases);
    }

    // comp3/comp12: substitution is a morphism of pairs
    {
        let mut pass = true;
        let mut cases = 0;
        pass &= f.pre(y.full) == x.full;
        for &a in &y.lefts.members {
            for &b in &y.lefts.members {
                pass &= f.pre(a & b) == (f.pre(a) & f.pre(b));
                cases += 1;
            }
            for &m in &y.rights.members {
                pass &= f.pre(y.complement2(a, m)?) == x.complement2(f.pre(a), f.pre(m))?;
                cases += 1;
            }
        }
        push("comp3", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &m in &y.rights.members {
            for &nn in &y.rights.members {
                pass &= f.pre(m & nn) == (f.pre(m) & f.pre(nn));
                cases += 1;
            }
            for &a in &y.lefts.members {
                pass &= f.pre(y.complement2_r(m, a)) == x.complement2_r(f.pre(m), f.pre(a));
                cases += 1;
            }
        }
        push("comp12", pass, cases);
    }

    // comp13: the quantifier adjunctions on both sides
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for &b in &y.lefts.members {
                pass &= subset(f.exists_left(y, a), b) == subset(a, f.pre(b));
                pass &= subset(f.pre(b), a) == subset(b, f.forall_left(x, y, a));
                cases += 2;
            }
        }
        for &m in &x.rights.members {
            for &nn in &y.rights.members {
                pass &= subset(f.exists_right(y, m), nn) == subset(m, f.pre(nn));
                pass &= subset(f.pre(nn), m) == subset(nn, f.forall_right(x, y, m));
                cases += 2;
            }
        }
        push("comp13", pass, cases);
    }

    // comp7: Frobenius-type exchange laws
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &y.lefts.members {
            for &m in &x.rights.members {
                let lhs = y.oodot2(a, f.exists_right(y, m));
                let rhs = f.exists_right(y, x.oodot2(f.pre(a), m));
                pass &= lhs == rhs;
                cases += 1;
            }
        }
        push("comp7.2", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &b in &x.lefts.members {
            for &a in &y.lefts.members {
                let lhs = y.imp_left(a, f.forall_left(x, y, b));
                let rhs = f.forall_left(x, y, x.imp_left(f.pre(a), b));
                pass &= lhs == rhs;
                cases += 1;
            }
        }
        push("comp7.1", pass, cases);
    }
    {
        let mut pass = true;
        let mut cases = 0;
        for &m in &x.rights.members {
            for &nn in &y.rights.members {
                let lhs = y.tri2(f.exists_right(y, m), nn);
                let rhs = f.forall_left(x, y, x.tri2(m, f.pre(nn)));
                pass &= lhs == rhs;
                cases += 1;
            }
        }
        push("comp7.3", pass, cases);
    }

    // comp20: the biaction collapse laws
    {
        let mut pass = true;
        let mut cases = 0;
        for &v in &x.bis.members {
            for &a in &x.lefts.members {
                pass &= (v & a) == x.oodot2_r(v, a);
                cases += 1;
            }
            for &m in &x.rights.members {
                pass &= (v & m) == x.oodot2(v, m);
                pass &= x.complement2_r(m, v) == x.tri2(m, v);
                pass &= x.complement2(v, m)? == x.tri2_r(v, m);
                cases += 3;
            }
        }
        push("comp20", pass, cases);
    }

    // nine laws (comp25–comp27) with V ranging over the truth values
    {
        let mut p251 = (true, 0usize);
        let mut p252 = (true, 0usize);
        let mut p253 = (true, 0usize);
        let mut p261 = (true, 0usize);
        let mut p262 = (true, 0usize);
        let mut p263 = (true, 0usize);
        let mut p271 = (true, 0usize);
        let mut p272 = (true, 0usize);
        let mut p273 = (true, 0usize);
        for v in [false, true] {
            for &a in &y.lefts.members {
                // substitution commutes with copowers and powers
                p251.0 &= f.pre(copower(v, a)) == copower(v, f.pre(a));
                p251.1 += 1;
                p263.0 &= f.pre(power(y, v, a)) == power(x, v, f.pre(a));
                p263.1 += 1;
            }
            for &b in &x.lefts.members {
                // quantifiers commute with (co)powers
                p253.0 &= power(y, v, f.forall_left(x, y, b))
                    == f.forall_left(x, y, power(x, v, b));
                p253.1 += 1;
                p261.0 &= copower(v, f.exists_left(y, b)) == f.exists_left(y, copower(v, b));
                p261.1 += 1;
                // absolute complement laws
                p273.0 &= abscomp_left(y, f.exists_left(y, b), v)
                    == f.forall_right(x, y, abscomp_left(x, b, v));
                p273.1 += 1;
            }
            for &m in &y.rights.members {
                p272.0 &= f.pre(abscomp_right(y, m, v)) == abscomp_right(x, f.pre(m), v);
                p272.1 += 1;
            }
        }
        for &a in &y.lefts.members {
            for &b in &x.lefts.members {
                // enriched adjunction laws collapse to the Galois conditions
                p252.0 &= subset(a, f.forall_left(x, y, b)) == subset(f.pre(a), b);
                p252.1 += 1;
                p262.0 &= subset(f.exists_left(y, b), a) == subset(b, f.pre(a));
                p262.1 += 1;
            }
        }
        // the mixed-tensor exchange ∃^ℓ_f B ∗_Y M = B ∗_X f^r M
        for &b in &x.lefts.members {
            for &m in &y.rights.members {
                p271.0 &= (f.exists_left(y, b) & m != 0) == (b & f.pre(m) != 0);
                p271.1 += 1;
            }
        }
        push("comp25.1", p251.0, p251.1);
        push("comp25.2", p252.0, p252.1);
        push("comp25.3", p253.0, p253.1);
        push("comp26.1", p261.0, p261.1);
        push("comp26.2", p262.0, p262.1);
        push("comp26.3", p263.0, p263.1);
        push("comp27.1", p271.0, p271.1);
        push("comp27.2", p272.0, p272.1);
        push("comp27.3", p273.0, p273.1);
    }

    // exy: Yoneda and co-Yoneda with point representables
    {
        let mut pass = true;
        let mut cases = 0;
        for pt in 0..x.n {
            let (dl, ur) = x.reps[pt];
            for &a in &x.lefts.members {
                pass &= subset(dl, a) == (a & (1 << pt) != 0);
                pass &= (a & ur != 0) == (a & (1 << pt) != 0);
                cases += 2;
            }
            for &m in &x.rights.members {
                pass &= (dl & m != 0) == (m & (1 << pt) != 0);
                pass &= subset(ur, m) == (m & (1 << pt) != 0);
                cases += 2;
            }
        }
        push("exy", pass, cases);
    }

    // intro density claim: ◇^r(A ∩ P) = A ⊙ ◇^r P for every subset P
    {
        let mut pass = true;
        let mut cases = 0;
        for &a in &x.lefts.members {
            for p in 0..=x.full {
                pass &= x.closure_right(a & p) == x.oodot2(a, x.closure_right(p));
                cases += 1;
            }
        }
        push("frobcat", pass, cases);
    }

    Ok(out)
}

fn copower(v: bool, a: u32) -> u32 {
    if v { a } else { 0 }
}

fn power(pair: &TwoPair, v: bool, a: u32) -> u32 {
    if v { a } else { pair.full }
}

/// `A ⋔ V` with a truth-value `V`: the absolute complement.
fn abscomp_left(pair: &TwoPair, a: u32, v: bool) -> u32 {
    if v { pair.full } else { pair.co(a) }
}

fn abscomp_right(pair: &TwoPair, m: u32, v: bool) -> u32 {
    if v { pair.full } else { pair.co(m) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_le(a: &[bool], b: &[bool]) -> bool {
        a.iter().zip(b).all(|(&x, &y)| !x || y)
    }

    #[test]
    fn counts_of_enumerations() {
        assert_eq!(FiniteSpace::enumerate_all(3).len(), 29);
        assert_eq!(FinitePoset::enumerate_all(3).len(), 19);
        assert_eq!(FinitePoset::enumerate_all(4).len(), 219);
    }

    #[test]
    fn sierpinski_lattices() {
        let sp = FiniteSpace::sierpinski();
        let (o, c, b, p) = lattices_space(&sp);
        assert_eq!(o.len(), 3);
        assert_eq!(c.len(), 3);
        assert_eq!(b.len(), 2);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn discrete_space_lattices_coincide() {
        let sp = FiniteSpace::discrete(3);
        let (o, c, b, p) = lattices_space(&sp);
        assert_eq!(o.members, p.members);
        assert_eq!(c.members, p.members);
        assert_eq!(b.members, p.members);
    }

    #[test]
    fn antichain_poset_lattices_coincide() {
        let p = FinitePoset::antichain(3);
        let (d, u, b, pw) = lattices_poset(&p);
        assert_eq!(d.members, pw.members);
        assert_eq!(u.members, pw.members);
        assert_eq!(b.members, pw.members);
    }

    #[test]
    fn sierpinski_complement_example() {
        // {o} ⋔ {c} = {c}
        let pair = TwoPair::from_space(&FiniteSpace::sierpinski());
        let a = 0b01; // {o}, open
        let m = 0b10; // {c}, closed
        assert_eq!(pair.complement2(a, m).unwrap(), 0b10);
        // whole-space unit law
        assert_eq!(pair.complement2(pair.full, m).unwrap(), m);
    }

    #[test]
    fn complement_rejects_wrong_lattice() {
        let pair = TwoPair::from_space(&FiniteSpace::sierpinski());
        // {c} is not open
        assert!(pair.complement2(0b10, 0b10).is_err());
    }

    #[test]
    fn poset_comprehension_chain() {
        let p = FinitePoset::chain(3);
        // P = {p1}
        let rel = poset_comprehension(&p, 0b010);
        let n = 3;
        assert!(rel[0 * n + 2]); // p0 ≤ p1 ≤ p2
        assert!(!rel[0 * n + 0]); // p0 ≤ a ≤ p0 needs a = p0 ∉ P
        assert!(rel[1 * n + 1]);
    }

    #[test]
    fn comprehension_of_full_is_order() {
        let p = FinitePoset::chain(3);
        let rel = poset_comprehension(&p, 0b111);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(rel[i * 3 + j], p.le(i, j));
            }
        }
    }

    #[test]
    fn galois_adjunction_on_chains() {
        let p = FinitePoset::chain(3);
        let rels = compatible_relations(&p);
        for pset in 0..=full_mask(3) {
            let dp = poset_comprehension(&p, pset);
            for h in &rels {
                let lhs = rel_le(&dp, h);
                let rhs = subset(pset, poset_extension(&p, h));
                assert_eq!(lhs, rhs, "P={pset:b}");
            }
        }
    }

    #[test]
    fn law_suite_on_small_posets() {
        for p in FinitePoset::enumerate_all(3) {
            let pair = TwoPair::from_poset(&p);
            let id = TwoMap { map: (0..p.n()).collect() };
            for law in law_suite_2(&pair, &pair, &id).unwrap() {
                assert!(law.pass, "law {} fails on a 3-poset", law.id);
            }
        }
    }

    #[test]
    fn law_suite_on_small_spaces() {
        for sp in FiniteSpace::enumerate_all(2) {
            let pair = TwoPair::from_space(&sp);
            let id = TwoMap { map: (0..sp.n()).collect() };
            for law in law_suite_2(&pair, &pair, &id).unwrap() {
                assert!(law.pass, "law {} fails on a 2-space", law.id);
            }
        }
    }

    #[test]
    fn law_suite_on_monotone_maps() {
        let c2 = FinitePoset::chain(2);
        let c3 = FinitePoset::chain(3);
        let (px, py) = (TwoPair::from_poset(&c2), TwoPair::from_poset(&c3));
        for map in c2.monotone_maps(&c3) {
            let f = TwoMap { map };
            for law in law_suite_2(&px, &py, &f).unwrap() {
                assert!(law.pass, "law {} fails along a monotone map", law.id);
            }
        }
    }
}
