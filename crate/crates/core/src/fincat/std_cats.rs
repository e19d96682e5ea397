//! A small library of standard categories used by tests and the fuzzer:
//! terminal, walking arrow, walking isomorphism, chains, the commutative
//! square, parallel pair, cyclic groups as one-object groupoids, discrete
//! categories and finite posets given by an order relation.

use std::collections::HashMap;

use super::{Arrow, Cat, FinCat, RawCategory};
use crate::{Limits, Result};

/// The terminal category `1`.
pub fn terminal(limits: &Limits) -> Result<Cat> {
    RawCategory::new("1").object("*").build(limits)
}

/// The empty category.
pub fn empty(limits: &Limits) -> Result<Cat> {
    RawCategory::new("0").build(limits)
}

/// The walking arrow `2 = {a →u b}`.
pub fn walking_arrow(limits: &Limits) -> Result<Cat> {
    RawCategory::new("2").object("a").object("b").arrow("u", "a", "b").build(limits)
}

/// The walking isomorphism: two objects, mutually inverse arrows.
pub fn walking_iso(limits: &Limits) -> Result<Cat> {
    RawCategory::new("iso")
        .object("a")
        .object("b")
        .arrow("u", "a", "b")
        .arrow("v", "b", "a")
        .composite("v", "u", "id_a")
        .composite("u", "v", "id_b")
        .build(limits)
}

/// The discrete category on `n` objects.
pub fn discrete(n: usize, limits: &Limits) -> Result<Cat> {
    let mut raw = RawCategory::new(format!("disc{n}"));
    for i in 0..n {
        raw = raw.object(&format!("d{i}"));
    }
    raw.build(limits)
}

/// The linear order `0 → 1 → … → n-1` as a category (with all composites).
pub fn chain(n: usize, limits: &Limits) -> Result<Cat> {
    let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    poset_from_le(format!("chain{n}"), &labels, |i, j| i <= j, limits)
}

/// The commutative square poset.
pub fn commutative_square(limits: &Limits) -> Result<Cat> {
    let labels = ["sw", "nw", "se", "ne"].map(String::from).to_vec();
    // sw ≤ nw ≤ ne, sw ≤ se ≤ ne
    let le = |i: usize, j: usize| matches!((i, j), _ if i == j || i == 0 || j == 3);
    poset_from_le("square", &labels, le, limits)
}

/// Two parallel arrows `a ⇉ b`.
pub fn parallel_pair(limits: &Limits) -> Result<Cat> {
    RawCategory::new("pair")
        .object("a")
        .object("b")
        .arrow("u", "a", "b")
        .arrow("v", "a", "b")
        .build(limits)
}

/// The cyclic group `C_n` as a one-object groupoid, arrows `g0=id, g1, …`.
pub fn cyclic(n: usize, limits: &Limits) -> Result<Cat> {
    assert!(n >= 1);
    let objects = vec!["*".to_string()];
    let arrows: Vec<Arrow> = (0..n)
        .map(|i| Arrow { id: if i == 0 { "id_*".into() } else { format!("g{i}") }, src: 0, tgt: 0 })
        .collect();
    let mut compose = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            compose.insert((i, j), (i + j) % n);
        }
    }
    FinCat::from_parts(format!("C{n}"), objects, arrows, vec![0], compose, limits, false)
}

/// A monoid given by its multiplication table (`table[i][j] = i∘j`, index 0
/// is the unit), as a one-object category.
pub fn monoid(name: &str, table: &[Vec<usize>], limits: &Limits) -> Result<Cat> {
    let n = table.len();
    let objects = vec!["*".to_string()];
    let arrows: Vec<Arrow> = (0..n)
        .map(|i| Arrow { id: if i == 0 { "id_*".into() } else { format!("m{i}") }, src: 0, tgt: 0 })
        .collect();
    let mut compose = HashMap::new();
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            compose.insert((i, j), v);
        }
    }
    FinCat::from_parts(name, objects, arrows, vec![0], compose, limits, false)
}

/// Build a poset category from labels and a `le` predicate. One arrow
/// `x→y` (labeled `x<y`) for each strict pair, identities for the rest.
pub fn poset_from_le(
    name: impl Into<String>,
    labels: &[String],
    le: impl Fn(usize, usize) -> bool,
    limits: &Limits,
) -> Result<Cat> {
    let n = labels.len();
    let mut raw = RawCategory::new(name);
    for l in labels {
        raw = raw.object(l);
    }
    let arrow_name = |i: usize, j: usize| format!("{}<{}", labels[i], labels[j]);
    for i in 0..n {
        for j in 0..n {
            if i != j && le(i, j) {
                raw = raw.arrow(&arrow_name(i, j), &labels[i], &labels[j]);
            }
        }
    }
    // Composites in a poset are forced.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k && le(i, j) && le(j, k) {
                    debug_assert!(le(i, k), "input relation is not transitive");
                    raw = raw.composite(&arrow_name(j, k), &arrow_name(i, j), &arrow_name(i, k));
                }
            }
        }
    }
    raw.build(limits)
}

/// Every category the library provides, for sweep tests.
pub fn library(limits: &Limits) -> Vec<Cat> {
    vec![
        terminal(limits).unwrap(),
        walking_arrow(limits).unwrap(),
        walking_iso(limits).unwrap(),
        discrete(2, limits).unwrap(),
        chain(3, limits).unwrap(),
        commutative_square(limits).unwrap(),
        parallel_pair(limits).unwrap(),
        cyclic(2, limits).unwrap(),
        cyclic(3, limits).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_builds() {
        let limits = Limits::default();
        for cat in library(&limits) {
            assert!(cat.n_objects() >= 1 || cat.name == "0");
        }
    }

    #[test]
    fn chain_has_expected_homs() {
        let limits = Limits::default();
        let c3 = chain(3, &limits).unwrap();
        assert_eq!(c3.n_arrows(), 6); // 3 identities + 3 strict pairs
        assert_eq!(c3.hom(0, 2).len(), 1);
        assert_eq!(c3.hom(2, 0).len(), 0);
    }

    #[test]
    fn commutative_square_composes() {
        let limits = Limits::default();
        let sq = commutative_square(&limits).unwrap();
        assert_eq!(sq.n_objects(), 4);
        assert_eq!(sq.n_arrows(), 4 + 5); // identities + sw→nw, sw→se, nw→ne, se→ne, sw→ne
    }
}
