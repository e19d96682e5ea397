//! The law table. One entry per numbered law (dotted parts for the rows of a
//! display); each `run` builds both sides from the fuzzed instance and
//! compares them, canonically where the construction provides the map.

use super::verify::{
    self, decode_function, fail, pass_canonical, verdict_iso_left, verdict_iso_right,
    verdict_over, verdict_sets,
};
use super::{CheckPath, LawSpec, Verdict};
use crate::action::{
    absolute_complement, absolute_complement_right, complement, complement_right, copower_left,
    copower_right, counit_exists_left, counit_exists_right, exists_left, exists_left_with,
    exists_right, exists_right_with, forall_left, forall_right, function_index, hom_left,
    hom_right, internal_hom, mixed_tensor, oodot, oodot_right, oodot_with,
    power_left, power_right, substitute_left, substitute_right, tensor, tensor_right,
    transpose_from_exists_left, transpose_to_exists_left, triangleright, triangleright_right,
    triangleright_with, LeftAction, RightAction,
};
use crate::catover::{
    diamond_right, diamond_right_map, diamond_right_with, elements_left, elements_right,
    fibered_product, over_maps, pullback_along, square_left_with, OverCat,
};
use crate::fincat::diagram::NatTransform;
use crate::fincat::FunctorMap;
use crate::funpred::{
    self, conical_colimit, is_absolutely_dense, is_final, is_fully_faithful,
    is_initial, is_left_adjunctible, is_left_dense, is_right_adjunctible, is_right_dense,
    kan_left, kan_left_comma_oracle, kan_right, kan_right_comma_oracle, partials_agree,
    preserves_colimit, preserves_limit, weighted_colimit, weighted_limit, PartialFunctor, PredEnv,
};
use crate::profunctor::{
    self, coend, comprehend, ddot_substitute, dinaturals, dummy_left, dummy_right, hom_arrow,
    hom_profunctor, is_strong_dinatural, outer_product, strong_coend, strong_dinaturals,
};
use crate::{Limits, Result};

macro_rules! law {
    ($block:literal, $part:literal, $statement:literal, $arity:literal, $f:expr) => {
        LawSpec { block: $block, part: $part, statement: $statement, arity: $arity, run: $f }
    };
}

/// identity-shaped canonical comparison (used when both sides are built with
/// literally the same fiber enumeration)
fn identity_nat(src: &crate::fincat::diagram::Diagram) -> NatTransform {
    NatTransform { components: src.fibers.iter().map(|f| (0..f.len()).collect()).collect() }
}

/// Both sides of these laws are built with the same fiber enumeration, so
/// the identity family is the canonical comparison; fall back to a complete
/// search if a re-presentation ever breaks that.
fn iso_left_canon_id(
    lhs: &LeftAction,
    rhs: &LeftAction,
    limits: &Limits,
) -> Result<Verdict> {
    let id = identity_nat(lhs.diagram());
    if crate::fincat::diagram::check_naturality(lhs.diagram(), rhs.diagram(), &id.components)
        .is_ok()
    {
        verdict_iso_left(lhs, rhs, Some(&id), limits)
    } else {
        verdict_iso_left(lhs, rhs, None, limits)
    }
}

fn iso_right_canon_id(
    lhs: &RightAction,
    rhs: &RightAction,
    limits: &Limits,
) -> Result<Verdict> {
    let id = identity_nat(lhs.diagram());
    if crate::fincat::diagram::check_naturality(lhs.diagram(), rhs.diagram(), &id.components)
        .is_ok()
    {
        verdict_iso_right(lhs, rhs, Some(&id), limits)
    } else {
        verdict_iso_right(lhs, rhs, None, limits)
    }
}

pub fn registry() -> Vec<LawSpec> {
    vec![
        // ------------------------------------------------------ comp1: units
        law!("comp1", "1", "I⊗A / A", "(A)", |i, l| {
            let t = tensor(&LeftAction::terminal(&i.x), &i.a)?;
            let canon = NatTransform {
                components: (0..i.x.n_objects()).map(|o| (0..t.fiber(o).len()).collect()).collect(),
            };
            verdict_iso_left(&t, &i.a, Some(&canon), l)
        }),
        law!("comp1", "2", "(A⊗B)⊗C / A⊗(B⊗C)", "(A,B,C)", |i, l| {
            let lhs = tensor(&tensor(&i.a, &i.b)?, &i.c)?;
            let rhs = tensor(&i.a, &tensor(&i.b, &i.c)?)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("comp1", "3", "I⋔M / M", "(M)", |i, l| {
            let c = complement(&LeftAction::terminal(&i.x), &i.m, l)?;
            let canon = identity_nat(c.diagram());
            verdict_iso_right(&c, &i.m, Some(&canon), l)
        }),
        law!("comp1", "4", "(A⊗B)⋔M / A⋔(B⋔M)", "(A,B,M)", |i, l| {
            let lhs = complement(&tensor(&i.a, &i.b)?, &i.m, l)?;
            let bm = complement(&i.b, &i.m, l)?;
            let rhs = complement(&i.a, &bm, l)?;
            // curry: φ on pairs goes to a ↦ [b ↦ φ(a,b)]
            let comps: Vec<Vec<usize>> = (0..i.x.n_objects())
                .map(|o| {
                    let (na, nb, nm) =
                        (i.a.fiber(o).len(), i.b.fiber(o).len(), i.m.fiber(o).len());
                    (0..lhs.fiber(o).len())
                        .map(|phi| {
                            let vals = decode_function(phi, na * nb, nm);
                            let outer: Vec<usize> = (0..na)
                                .map(|ae| {
                                    let inner: Vec<usize> =
                                        (0..nb).map(|be| vals[ae * nb + be]).collect();
                                    function_index(&inner, nm)
                                })
                                .collect();
                            function_index(&outer, bm.fiber(o).len())
                        })
                        .collect()
                })
                .collect();
            let canon = NatTransform { components: comps };
            verdict_iso_right(&lhs, &rhs, Some(&canon), l)
        }),
        // ------------------------------------------- comp2: the closed structure
        law!("comp2", "1", "V(A⊗B,C) / V(A,[B,C])", "(A,B,C)", |i, l| {
            let lhs = hom_left(&tensor(&i.a, &i.b)?, &i.c, l)?.len();
            let rhs = hom_left(&i.a, &internal_hom(&i.b, &i.c, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp2", "2", "V(A,[B,C]) / V(B,[A,C])", "(A,B,C)", |i, l| {
            let lhs = hom_left(&i.a, &internal_hom(&i.b, &i.c, l)?, l)?.len();
            let rhs = hom_left(&i.b, &internal_hom(&i.a, &i.c, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp2", "3", "R(N,A⋔M) / R(A⊙N,M) / L(A,N▷M)", "(A,M,N)", |i, l| {
            let comp = complement(&i.a, &i.m, l)?;
            let od = oodot_with(&i.a, &i.n, l)?;
            let tri = triangleright_with(&i.n, &i.m, l)?;
            verify::verify_trinity(&i.a, &i.m, &i.n, &comp, &od, &tri, l)
        }),
        // ------------------------- comp3: substitution is a morphism of pairs
        law!("comp3", "1", "f^ℓI / I", "(f)", |i, l| {
            let lhs = substitute_left(&i.f, &LeftAction::terminal(&i.y))?;
            iso_left_canon_id(&lhs, &LeftAction::terminal(&i.x), l)
        }),
        law!("comp3", "2", "f^ℓ(A⊗B) / f^ℓA⊗f^ℓB", "(f,A,B)", |i, l| {
            let lhs = substitute_left(&i.f, &tensor(&i.ay, &i.ay2)?)?;
            let rhs = tensor(&substitute_left(&i.f, &i.ay)?, &substitute_left(&i.f, &i.ay2)?)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("comp3", "3", "f^r(A⋔M) / f^ℓA⋔f^rM", "(f,A,M)", |i, l| {
            let lhs = substitute_right(&i.f, &complement(&i.ay, &i.my, l)?)?;
            let rhs = complement(&substitute_left(&i.f, &i.ay)?, &substitute_right(&i.f, &i.my)?, l)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        // ---------------------------------------- comp4: quantifier adjunctions
        law!("comp4", "1", "V'(f^ℓA,B) / V(A,∀fB)", "(f,A,B)", |i, l| {
            let lhs = hom_left(&substitute_left(&i.f, &i.ay)?, &i.a, l)?.len();
            let rhs = hom_left(&i.ay, &forall_left(&i.f, &i.a, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp4", "2", "M'(M,f^rN) / M(∃fM,N)", "(f,M,N)", |i, l| {
            // the ∃ transposes are constructed and must be mutually inverse
            let (em, carrier) = exists_right_with(&i.f, &i.m, l)?;
            let lhs = hom_right(&i.m, &substitute_right(&i.f, &i.my)?, l)?;
            let rhs = hom_right(&em, &i.my, l)?;
            if lhs.len() != rhs.len() {
                return Ok(fail(format!("hom sizes {} vs {}", lhs.len(), rhs.len())));
            }
            let mut seen = vec![false; rhs.len()];
            for tau in &lhs.items {
                let sigma = crate::action::transpose_to_exists_right(
                    &i.f, &i.m, &i.my, &em, &carrier, tau,
                )?;
                let Some(pos) = rhs.position_of(&sigma.components) else {
                    return Ok(fail("transpose escapes the hom-set"));
                };
                if std::mem::replace(&mut seen[pos], true) {
                    return Ok(fail("transpose not injective"));
                }
                let back = crate::action::transpose_from_exists_right(
                    &i.f, &i.m, &i.my, &carrier, &sigma,
                )?;
                if back.components != tau.components {
                    return Ok(fail("transposes are not mutually inverse"));
                }
            }
            Ok(pass_canonical())
        }),
        // --------------------------------------------- comp5: derived hom laws
        law!("comp5", "1", "[I,A] / A", "(A)", |i, l| {
            let lhs = internal_hom(&LeftAction::terminal(&i.x), &i.a, l)?;
            verdict_iso_left(&lhs, &i.a, None, l)
        }),
        law!("comp5", "2", "[A⊗B,C] / [A,[B,C]]", "(A,B,C)", |i, l| {
            let lhs = internal_hom(&tensor(&i.a, &i.b)?, &i.c, l)?;
            let rhs = internal_hom(&i.a, &internal_hom(&i.b, &i.c, l)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        // --------------------------------------------- comp6: the ⊙ / ▷ laws
        law!("comp6", "1", "I⊙M / M", "(M)", |i, l| {
            let od = oodot_with(&LeftAction::terminal(&i.x), &i.m, l)?;
            // canonical: [(x, *, m), u] ↦ M(u)(m)
            let n = i.x.n_objects();
            let mut comps = vec![Vec::new(); n];
            for y in 0..n {
                let mut comp = vec![usize::MAX; od.action.fiber(y).len()];
                for (idx, &(tot, u, _)) in od.carrier.entries[y].iter().enumerate() {
                    let c = od.carrier.class[y][idx];
                    let (_, _, me) = od.triples[tot];
                    let v = i.m.apply(u, me);
                    if comp[c] != usize::MAX && comp[c] != v {
                        return Ok(fail("counit ill-defined on a class"));
                    }
                    comp[c] = v;
                }
                comps[y] = comp;
            }
            let canon = NatTransform::new(od.action.diagram(), i.m.diagram(), comps)?;
            verdict_iso_right(&od.action, &i.m, Some(&canon), l)
        }),
        law!("comp6", "2", "(A⊗B)⊙M / A⊙(B⊙M)", "(A,B,M)", |i, l| {
            let lhs = oodot(&tensor(&i.a, &i.b)?, &i.m, l)?;
            let rhs = oodot(&i.a, &oodot(&i.b, &i.m, l)?, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        law!("comp6", "3", "(A⊙M)▷N / [A,M▷N]", "(A,M,N)", |i, l| {
            let lhs = triangleright(&oodot(&i.a, &i.m, l)?, &i.n, l)?;
            let rhs = internal_hom(&i.a, &triangleright(&i.m, &i.n, l)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("comp6", "4", "[A,M▷N] / M▷(A⋔N)", "(A,M,N)", |i, l| {
            let lhs = internal_hom(&i.a, &triangleright(&i.m, &i.n, l)?, l)?;
            let rhs = triangleright(&i.m, &complement(&i.a, &i.n, l)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        // ------------------------------------------ comp7: quantifier exchange
        law!("comp7", "1", "[A,∀fB] / ∀f[fA,B]", "(f,A,B)", |i, l| {
            let lhs = internal_hom(&i.ay, &forall_left(&i.f, &i.a, l)?, l)?;
            let rhs = forall_left(
                &i.f,
                &internal_hom(&substitute_left(&i.f, &i.ay)?, &i.a, l)?,
                l,
            )?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("comp7", "2", "A⊙∃fM / ∃f(fA⊙M)", "(f,A,M)", |i, l| {
            let lhs = oodot(&i.ay, &exists_right(&i.f, &i.m, l)?, l)?;
            let rhs = exists_right(&i.f, &oodot(&substitute_left(&i.f, &i.ay)?, &i.m, l)?, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        law!("comp7", "3", "∃fM▷N / ∀f(M▷fN)", "(f,M,N)", |i, l| {
            let lhs = triangleright(&exists_right(&i.f, &i.m, l)?, &i.my2, l)?;
            let rhs = forall_left(
                &i.f,
                &triangleright(&i.m, &substitute_right(&i.f, &i.my2)?, l)?,
                l,
            )?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        // ----------------------------------- comp10: the r-half of the pair laws
        law!("comp10", "1", "I⊗ʳM / M", "(M)", |i, l| {
            let t = tensor_right(&RightAction::terminal(&i.x), &i.m)?;
            let canon = identity_nat(t.diagram());
            verdict_iso_right(&t, &i.m, Some(&canon), l)
        }),
        law!("comp10", "2", "(M⊗N)⊗M₂ / M⊗(N⊗M₂)", "(M,N,M₂)", |i, l| {
            let lhs = tensor_right(&tensor_right(&i.m, &i.n)?, &i.m2)?;
            let rhs = tensor_right(&i.m, &tensor_right(&i.n, &i.m2)?)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        law!("comp10", "3", "Iʳ⋔ʳA / A", "(A)", |i, l| {
            let c = complement_right(&RightAction::terminal(&i.x), &i.a, l)?;
            let canon = identity_nat(c.diagram());
            verdict_iso_left(&c, &i.a, Some(&canon), l)
        }),
        law!("comp10", "4", "(M⊗N)⋔ʳA / M⋔ʳ(N⋔ʳA)", "(M,N,A)", |i, l| {
            let lhs = complement_right(&tensor_right(&i.m, &i.n)?, &i.a, l)?;
            let na = complement_right(&i.n, &i.a, l)?;
            let rhs = complement_right(&i.m, &na, l)?;
            let comps: Vec<Vec<usize>> = (0..i.x.n_objects())
                .map(|o| {
                    let (nm, nn, naa) =
                        (i.m.fiber(o).len(), i.n.fiber(o).len(), i.a.fiber(o).len());
                    (0..lhs.fiber(o).len())
                        .map(|phi| {
                            let vals = decode_function(phi, nm * nn, naa);
                            let outer: Vec<usize> = (0..nm)
                                .map(|me| {
                                    let inner: Vec<usize> =
                                        (0..nn).map(|ne| vals[me * nn + ne]).collect();
                                    function_index(&inner, naa)
                                })
                                .collect();
                            function_index(&outer, na.fiber(o).len())
                        })
                        .collect()
                })
                .collect();
            let canon = NatTransform { components: comps };
            verdict_iso_left(&lhs, &rhs, Some(&canon), l)
        }),
        // ----------------------------------------- comp11: the r-half trinity
        law!("comp11", "1", "L(B,M⋔ʳA) / L(M⊙ʳB,A)", "(M,A,B)", |i, l| {
            let lhs = hom_left(&i.b, &complement_right(&i.m, &i.a, l)?, l)?.len();
            let rhs = hom_left(&oodot_right(&i.m, &i.b, l)?, &i.a, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp11", "2", "L(B,M⋔ʳA) / R(M,B▷ʳA)", "(M,A,B)", |i, l| {
            let lhs = hom_left(&i.b, &complement_right(&i.m, &i.a, l)?, l)?.len();
            let rhs = hom_right(&i.m, &triangleright_right(&i.b, &i.a, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        // ------------------------------------ comp12: substitution, r-half laws
        law!("comp12", "1", "f^rIʳ / Iʳ", "(f)", |i, l| {
            let lhs = substitute_right(&i.f, &RightAction::terminal(&i.y))?;
            iso_right_canon_id(&lhs, &RightAction::terminal(&i.x), l)
        }),
        law!("comp12", "2", "f^r(M⊗N) / f^rM⊗f^rN", "(f,M,N)", |i, l| {
            let lhs = substitute_right(&i.f, &tensor_right(&i.my, &i.my2)?)?;
            let rhs =
                tensor_right(&substitute_right(&i.f, &i.my)?, &substitute_right(&i.f, &i.my2)?)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        law!("comp12", "3", "f^ℓ(M⋔ʳA) / f^rM⋔ʳf^ℓA", "(f,M,A)", |i, l| {
            let lhs = substitute_left(&i.f, &complement_right(&i.my, &i.ay, l)?)?;
            let rhs =
                complement_right(&substitute_right(&i.f, &i.my)?, &substitute_left(&i.f, &i.ay)?, l)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        // ------------------------------------------ comp13: the three-level stack
        law!("comp13", "1", "L'(f^ℓA,B) / L(A,∀fB)", "(f,A,B)", |i, l| {
            let lhs = hom_left(&substitute_left(&i.f, &i.ay)?, &i.b, l)?.len();
            let rhs = hom_left(&i.ay, &forall_left(&i.f, &i.b, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp13", "2", "L(B,f^ℓA) / L(∃fB,A)", "(f,A,B)", |i, l| {
            let (eb, carrier) = exists_left_with(&i.f, &i.b, l)?;
            let lhs = hom_left(&i.b, &substitute_left(&i.f, &i.ay)?, l)?;
            let rhs = hom_left(&eb, &i.ay, l)?;
            if lhs.len() != rhs.len() {
                return Ok(fail(format!("hom sizes {} vs {}", lhs.len(), rhs.len())));
            }
            let mut seen = vec![false; rhs.len()];
            for tau in &lhs.items {
                let sigma = transpose_to_exists_left(&i.f, &i.b, &i.ay, &eb, &carrier, tau)?;
                let Some(pos) = rhs.position_of(&sigma.components) else {
                    return Ok(fail("transpose escapes the hom-set"));
                };
                if std::mem::replace(&mut seen[pos], true) {
                    return Ok(fail("transpose not injective"));
                }
                let back = transpose_from_exists_left(&i.f, &i.b, &i.ay, &carrier, &sigma)?;
                if back.components != tau.components {
                    return Ok(fail("transposes are not mutually inverse"));
                }
            }
            Ok(pass_canonical())
        }),
        law!("comp13", "3", "R'(f^rM,N) / R(M,∀fN)", "(f,M,N)", |i, l| {
            let lhs = hom_right(&substitute_right(&i.f, &i.my)?, &i.m, l)?.len();
            let rhs = hom_right(&i.my, &forall_right(&i.f, &i.m, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp13", "4", "R(M,f^rN) / R(∃fM,N)", "(f,M,N)", |i, l| {
            let lhs = hom_right(&i.m, &substitute_right(&i.f, &i.my)?, l)?.len();
            let rhs = hom_right(&exists_right(&i.f, &i.m, l)?, &i.my, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        // ----------------------------------------- comp20: biaction collapse
        law!("comp20", "1", "jℓV⊗A / jʳV⊙ʳA", "(V,A)", |i, l| {
            let lhs = tensor(i.bi.j_left(), &i.a)?;
            let rhs = oodot_right(i.bi.j_right(), &i.a, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("comp20", "2", "M⋔ʳjℓV / M▷ℓjʳV", "(V,M)", |i, l| {
            let lhs = complement_right(&i.m, i.bi.j_left(), l)?;
            let rhs = triangleright(&i.m, i.bi.j_right(), l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("comp20", "3", "jʳV⊗ʳM / jℓV⊙M", "(V,M)", |i, l| {
            let lhs = tensor_right(i.bi.j_right(), &i.m)?;
            let rhs = oodot(i.bi.j_left(), &i.m, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        law!("comp20", "4", "A⋔jʳV / A▷ʳjℓV", "(V,A)", |i, l| {
            let lhs = complement(&i.a, i.bi.j_right(), l)?;
            let rhs = triangleright_right(&i.a, i.bi.j_left(), l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        // ------------------------------------------------- comp25: first group
        law!("comp25", "1", "f^ℓ(V⊗A) / V⊗f^ℓA", "(f,V,A)", |i, l| {
            let lhs = substitute_left(&i.f, &copower_left(&i.v, &i.ay)?)?;
            let rhs = copower_left(&i.v, &substitute_left(&i.f, &i.ay)?)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("comp25", "2", "{A,∀fB} / {fA,B}", "(f,A,B)", |i, l| {
            let lhs = hom_left(&i.ay, &forall_left(&i.f, &i.b, l)?, l)?.len();
            let rhs = hom_left(&substitute_left(&i.f, &i.ay)?, &i.b, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp25", "3", "[V,∀fB] / ∀f[V,B]", "(f,V,B)", |i, l| {
            let lhs = power_left(&i.v, &forall_left(&i.f, &i.b, l)?, l)?;
            let rhs = forall_left(&i.f, &power_left(&i.v, &i.b, l)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        // ------------------------------------------------ comp26: second group
        law!("comp26", "1", "V⊗∃fB / ∃f(V⊗B)", "(f,V,B)", |i, l| {
            let lhs = copower_left(&i.v, &exists_left(&i.f, &i.b, l)?)?;
            let rhs = exists_left(&i.f, &copower_left(&i.v, &i.b)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("comp26", "2", "{∃fB,A} / {B,fA}", "(f,A,B)", |i, l| {
            let lhs = hom_left(&exists_left(&i.f, &i.b, l)?, &i.ay, l)?.len();
            let rhs = hom_left(&i.b, &substitute_left(&i.f, &i.ay)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp26", "3", "f^ℓ[V,A] / [V,f^ℓA]", "(f,V,A)", |i, l| {
            let lhs = substitute_left(&i.f, &power_left(&i.v, &i.ay, l)?)?;
            let rhs = power_left(&i.v, &substitute_left(&i.f, &i.ay)?, l)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        // ------------------------------------------------- comp27: third group
        law!("comp27", "1", "∃fB∗M / B∗f^rM", "(f,B,M)", |i, l| {
            let lhs = mixed_tensor(&exists_left(&i.f, &i.b, l)?, &i.my, l)?.len();
            let rhs = mixed_tensor(&i.b, &substitute_right(&i.f, &i.my)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("comp27", "2", "f^ℓ(M⋔ʳV) / f^rM⋔ʳV", "(f,M,V)", |i, l| {
            let lhs = substitute_left(&i.f, &absolute_complement_right(&i.my, &i.v, l)?)?;
            let rhs = absolute_complement_right(&substitute_right(&i.f, &i.my)?, &i.v, l)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("comp27", "3", "∃fB⋔V / ∀f(B⋔V)", "(f,B,V)", |i, l| {
            let lhs = absolute_complement(&exists_left(&i.f, &i.b, l)?, &i.v, l)?;
            let rhs = forall_right(&i.f, &absolute_complement(&i.b, &i.v, l)?, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        // ------------------------------------------------- group: the collapse
        law!("group", "", "s(A⋔M) / A⇒sM", "(A,M)", |i, l| {
            if !i.x_is_groupoid() {
                return Ok(Verdict::NotApplicable { reason: "base is not a groupoid".into() });
            }
            verify::verify_group_collapse(&i.x, &i.a, &i.m, l)
        }),
        // ------------------------------------------- ip1: the enriched trinity
        law!("ip1", "1", "{V⊗A,B} / {V,{A,B}}", "(V,A,B)", |i, l| {
            let lhs = hom_left(&copower_left(&i.v, &i.a)?, &i.b, l)?.len();
            let nat = hom_left(&i.a, &i.b, l)?.len();
            let rhs = nat.pow(i.v.len() as u32);
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip1", "2", "{V,{A,B}} / {A,[V,B]}", "(V,A,B)", |i, l| {
            let nat = hom_left(&i.a, &i.b, l)?.len();
            let lhs = nat.pow(i.v.len() as u32);
            let rhs = hom_left(&i.a, &power_left(&i.v, &i.b, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip1", "3", "{A∗M,V} / {A,M⋔ʳV}", "(A,M,V)", |i, l| {
            let star = mixed_tensor(&i.a, &i.m, l)?.len();
            let lhs = i.v.len().pow(star as u32);
            let rhs = hom_left(&i.a, &absolute_complement_right(&i.m, &i.v, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip1", "4", "{A,M⋔ʳV} / {M,A⋔V}", "(A,M,V)", |i, l| {
            let lhs = hom_left(&i.a, &absolute_complement_right(&i.m, &i.v, l)?, l)?.len();
            let rhs = hom_right(&i.m, &absolute_complement(&i.a, &i.v, l)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        // --------------------------- ip2/ip3: substitution preserves (co)powers
        law!("ip2", "1", "f^ℓ(V⊗A) / V⊗f^ℓA", "(f,V,A)", |i, l| {
            let lhs = substitute_left(&i.f, &copower_left(&i.v2, &i.ay)?)?;
            let rhs = copower_left(&i.v2, &substitute_left(&i.f, &i.ay)?)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("ip2", "2", "f^ℓ[V,A] / [V,f^ℓA]", "(f,V,A)", |i, l| {
            let lhs = substitute_left(&i.f, &power_left(&i.v2, &i.ay, l)?)?;
            let rhs = power_left(&i.v2, &substitute_left(&i.f, &i.ay)?, l)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        law!("ip2", "3", "f^r(A⋔V) / f^ℓA⋔V", "(f,A,V)", |i, l| {
            let lhs = substitute_right(&i.f, &absolute_complement(&i.ay, &i.v, l)?)?;
            let rhs = absolute_complement(&substitute_left(&i.f, &i.ay)?, &i.v, l)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        law!("ip3", "1", "f^r(V⊗M) / V⊗f^rM", "(f,V,M)", |i, l| {
            let lhs = substitute_right(&i.f, &copower_right(&i.v, &i.my)?)?;
            let rhs = copower_right(&i.v, &substitute_right(&i.f, &i.my)?)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        law!("ip3", "2", "f^r[V,M] / [V,f^rM]", "(f,V,M)", |i, l| {
            let lhs = substitute_right(&i.f, &power_right(&i.v, &i.my, l)?)?;
            let rhs = power_right(&i.v, &substitute_right(&i.f, &i.my)?, l)?;
            iso_right_canon_id(&lhs, &rhs, l)
        }),
        law!("ip3", "3", "f^ℓ(M⋔ʳV) / f^rM⋔ʳV", "(f,M,V)", |i, l| {
            let lhs = substitute_left(&i.f, &absolute_complement_right(&i.my, &i.v2, l)?)?;
            let rhs = absolute_complement_right(&substitute_right(&i.f, &i.my)?, &i.v2, l)?;
            iso_left_canon_id(&lhs, &rhs, l)
        }),
        // ------------------------------------- ip4/ip5: the adjunction corollaries
        law!("ip4", "1", "{A,∀fB} / {fA,B}", "(f,A,B)", |i, l| {
            let lhs = hom_left(&i.ay, &forall_left(&i.f, &i.c, l)?, l)?.len();
            let rhs = hom_left(&substitute_left(&i.f, &i.ay)?, &i.c, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip4", "2", "{∃fA,B} / {A,fB}", "(f,A,B)", |i, l| {
            let lhs = hom_left(&exists_left(&i.f, &i.c, l)?, &i.ay, l)?.len();
            let rhs = hom_left(&i.c, &substitute_left(&i.f, &i.ay)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip4", "3", "∃fA∗M / A∗f^rM", "(f,A,M)", |i, l| {
            let lhs = mixed_tensor(&exists_left(&i.f, &i.c, l)?, &i.my, l)?.len();
            let rhs = mixed_tensor(&i.c, &substitute_right(&i.f, &i.my)?, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("ip5", "1", "[V,∀fA] / ∀f[V,A]", "(f,V,A)", |i, l| {
            let lhs = power_left(&i.v2, &forall_left(&i.f, &i.c, l)?, l)?;
            let rhs = forall_left(&i.f, &power_left(&i.v2, &i.c, l)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("ip5", "2", "V⊗∃fA / ∃f(V⊗A)", "(f,V,A)", |i, l| {
            let lhs = copower_left(&i.v2, &exists_left(&i.f, &i.c, l)?)?;
            let rhs = exists_left(&i.f, &copower_left(&i.v2, &i.c)?, l)?;
            verdict_iso_left(&lhs, &rhs, None, l)
        }),
        law!("ip5", "3", "∃fA⋔V / ∀f(A⋔V)", "(f,A,V)", |i, l| {
            let lhs = absolute_complement(&exists_left(&i.f, &i.c, l)?, &i.v2, l)?;
            let rhs = forall_right(&i.f, &absolute_complement(&i.c, &i.v2, l)?, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        // --------------------------------------------------- exy: Yoneda laws
        law!("exy", "1", "{∃ℓxI,A} / Ax", "(x,A)", |i, l| {
            for x in 0..i.x.n_objects() {
                let rep = LeftAction::representable(&i.x, x)?;
                let hom = hom_left(&rep, &i.a, l)?;
                if hom.len() != i.a.fiber(x).len() {
                    return Ok(fail(format!(
                        "|Nat(y_{x}, A)| = {} but |A {x}| = {}",
                        hom.len(),
                        i.a.fiber(x).len()
                    )));
                }
                // canonical evaluation at the identity is a bijection
                let id_idx = rep
                    .fiber(x)
                    .index_of(&i.x.arrow(i.x.identity(x)).id)
                    .expect("identity in representable fiber");
                let mut seen = vec![false; i.a.fiber(x).len()];
                for t in &hom.items {
                    let v = t.components[x][id_idx];
                    if std::mem::replace(&mut seen[v], true) {
                        return Ok(fail("Yoneda evaluation not injective"));
                    }
                }
            }
            Ok(pass_canonical())
        }),
        law!("exy", "2", "∃ℓxI∗M / Mx", "(x,M)", |i, l| {
            for x in 0..i.x.n_objects() {
                let rep = LeftAction::representable(&i.x, x)?;
                let t = crate::action::mixed_tensor_with_classes(&rep, &i.m, l)?;
                if t.set.len() != i.m.fiber(x).len() {
                    return Ok(fail(format!(
                        "|y_{x} ∗ M| = {} but |M {x}| = {}",
                        t.set.len(),
                        i.m.fiber(x).len()
                    )));
                }
                // canonical: class of (w, u, m) evaluates to M(u)(m)
                let mut value = vec![usize::MAX; t.set.len()];
                for w in 0..i.x.n_objects() {
                    for (ui, u) in i.x.hom(w, x).into_iter().enumerate() {
                        for me in 0..i.m.fiber(w).len() {
                            let c = t.class_of(w, ui, me);
                            let v = i.m.apply(u, me);
                            if value[c] != usize::MAX && value[c] != v {
                                return Ok(fail("co-Yoneda evaluation ill-defined"));
                            }
                            value[c] = v;
                        }
                    }
                }
                let mut seen = vec![false; i.m.fiber(x).len()];
                for &v in &value {
                    if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
                        return Ok(fail("co-Yoneda evaluation not a bijection"));
                    }
                }
            }
            Ok(pass_canonical())
        }),
        law!("exy", "3", "{∃ʳxI,M} / Mx", "(x,M)", |i, l| {
            for x in 0..i.x.n_objects() {
                let rep = RightAction::representable(&i.x, x)?;
                let hom = hom_right(&rep, &i.m, l)?;
                if hom.len() != i.m.fiber(x).len() {
                    return Ok(fail("co-representable hom size mismatch"));
                }
                let id_idx = rep
                    .fiber(x)
                    .index_of(&i.x.arrow(i.x.identity(x)).id)
                    .expect("identity in corepresentable fiber");
                let mut seen = vec![false; i.m.fiber(x).len()];
                for t in &hom.items {
                    let v = t.components[x][id_idx];
                    if std::mem::replace(&mut seen[v], true) {
                        return Ok(fail("right Yoneda evaluation not injective"));
                    }
                }
            }
            Ok(pass_canonical())
        }),
        law!("exy", "4", "A∗∃ʳxI / Ax", "(x,A)", |i, l| {
            for x in 0..i.x.n_objects() {
                let rep = RightAction::representable(&i.x, x)?;
                let t = crate::action::mixed_tensor_with_classes(&i.a, &rep, l)?;
                if t.set.len() != i.a.fiber(x).len() {
                    return Ok(fail("A ∗ corepresentable size mismatch"));
                }
                // canonical: class of (w, a, u: x→w) evaluates to A(u)(a)
                let mut value = vec![usize::MAX; t.set.len()];
                for w in 0..i.x.n_objects() {
                    for (ui, u) in i.x.hom(x, w).into_iter().enumerate() {
                        for ae in 0..i.a.fiber(w).len() {
                            let c = t.class_of(w, ae, ui);
                            let v = i.a.apply(u, ae);
                            if value[c] != usize::MAX && value[c] != v {
                                return Ok(fail("right co-Yoneda evaluation ill-defined"));
                            }
                            value[c] = v;
                        }
                    }
                }
                let mut seen = vec![false; i.a.fiber(x).len()];
                for &v in &value {
                    if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
                        return Ok(fail("right co-Yoneda evaluation not a bijection"));
                    }
                }
            }
            Ok(pass_canonical())
        }),
        // --------------------------------------------- ax1–ax3: adequacy laws
        law!("ax1", "1", "counit of ∃ along id is iso", "(A)", |i, l| {
            let id = FunctorMap::identity(&i.x);
            let (e, t) = counit_exists_left(&id, &i.a, l)?;
            verdict_iso_left(&e, &i.a, Some(&t), l)
        }),
        law!("ax1", "2", "counit of ∃ʳ along id is iso", "(M)", |i, l| {
            let id = FunctorMap::identity(&i.x);
            let (e, t) = counit_exists_right(&id, &i.m, l)?;
            verdict_iso_right(&e, &i.m, Some(&t), l)
        }),
        law!("ax2", "1", "Nat(f,g) / ∫ Y(fx,gx)", "(f,f₂)", |i, l| {
            let (direct, end) = funpred::functor_nat_end_count(&i.f, &i.f2, l)?;
            Ok(verdict_sets(direct, end))
        }),
        law!("ax3", "1", "weighted (co)limits are iso-invariant", "(A,M,f)", |i, l| {
            let a2 = tensor(&i.a, &LeftAction::terminal(&i.x))?;
            let c1 = weighted_colimit(&i.a, &i.f, l)?;
            let c2 = weighted_colimit(&a2, &i.f, l)?;
            if !partials_agree(&i.y, &c1, &c2) {
                return Ok(fail("colimit not invariant under A ≅ A⊗I"));
            }
            let m2 = tensor_right(&i.m, &RightAction::terminal(&i.x))?;
            let l1 = weighted_limit(&i.m, &i.f, l)?;
            let l2 = weighted_limit(&m2, &i.f, l)?;
            if !partials_agree(&i.y, &l1, &l2) {
                return Ok(fail("limit not invariant under M ≅ M⊗I"));
            }
            Ok(pass_canonical())
        }),
        // --------------------------------------------------- kan: Kan extensions
        law!("kan", "1", "{f^rM,g} / {M,∀fg}", "(f,g,M)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let PartialFunctor::Exists { functor: ran } = kan_right(&i.f, &gf, l)? else {
                return Ok(Verdict::NotApplicable { reason: "∀_f g does not exist".into() });
            };
            let lhs = weighted_limit(&substitute_right(&i.f, &i.my)?, &gf, l)?;
            let rhs = weighted_limit(&i.my, &ran, l)?;
            if partials_agree(&i.z, &lhs, &rhs) {
                Ok(pass_canonical())
            } else {
                Ok(fail("defining bijection of ∀_f fails on a fuzzed weight"))
            }
        }),
        law!("kan", "2", "f^ℓA∗g / A∗∃fg", "(f,g,A)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let PartialFunctor::Exists { functor: lan } = kan_left(&i.f, &gf, l)? else {
                return Ok(Verdict::NotApplicable { reason: "∃_f g does not exist".into() });
            };
            let lhs = weighted_colimit(&substitute_left(&i.f, &i.ay)?, &gf, l)?;
            let rhs = weighted_colimit(&i.ay, &lan, l)?;
            if partials_agree(&i.z, &lhs, &rhs) {
                Ok(pass_canonical())
            } else {
                Ok(fail("defining bijection of ∃_f fails on a fuzzed weight"))
            }
        }),
        law!("kan2", "1", "(∀fg)^r∃ʳzI / ∀ʳf(g^r∃ʳzI)", "(f,g,z)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let PartialFunctor::Exists { functor: ran } = kan_right(&i.f, &gf, l)? else {
                return Ok(Verdict::NotApplicable { reason: "∀_f g does not exist".into() });
            };
            for z in 0..i.z.n_objects() {
                let rep = RightAction::representable(&i.z, z)?;
                let gf = i.g.after(&i.f)?;
                let lhs = substitute_right(&ran, &rep)?;
                let rhs = forall_right(&i.f, &substitute_right(&gf, &rep)?, l)?;
                if crate::action::iso_right(&lhs, &rhs, l)?.is_none() {
                    return Ok(fail(format!("representable at {z} does not preserve ∀_f")));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Search })
        }),
        law!("kan2", "2", "(∃fg)^ℓ∃ℓzI / ∀ℓf(g^ℓ∃ℓzI)", "(f,g,z)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let PartialFunctor::Exists { functor: lan } = kan_left(&i.f, &gf, l)? else {
                return Ok(Verdict::NotApplicable { reason: "∃_f g does not exist".into() });
            };
            for z in 0..i.z.n_objects() {
                let rep = LeftAction::representable(&i.z, z)?;
                let gf = i.g.after(&i.f)?;
                let lhs = substitute_left(&lan, &rep)?;
                let rhs = forall_left(&i.f, &substitute_left(&gf, &rep)?, l)?;
                if crate::action::iso_left(&lhs, &rhs, l)?.is_none() {
                    return Ok(fail(format!("representable at {z} does not convert ∃_f")));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Search })
        }),
        law!("kan3", "1", "(∀fg)y / comma-limit oracle", "(f,g)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let kan = kan_right(&i.f, &gf, l)?;
            for y in 0..i.y.n_objects() {
                let oracle = kan_right_comma_oracle(&i.f, &gf, y, l)?;
                match (&kan, oracle.object()) {
                    (PartialFunctor::Exists { functor }, Some(o)) => {
                        if !i.z.objects_isomorphic(functor.obj_map[y], o) {
                            return Ok(fail(format!("pointwise value at {y} differs from comma oracle")));
                        }
                    }
                    (PartialFunctor::Exists { .. }, None) => {
                        return Ok(fail(format!("comma oracle misses a value the Kan extension has at {y}")));
                    }
                    (PartialFunctor::Absent { at, .. }, _) => {
                        if *at == y && oracle.object().is_some() {
                            return Ok(fail(format!("Kan extension absent at {y} but oracle finds a limit")));
                        }
                    }
                }
            }
            Ok(pass_canonical())
        }),
        law!("kan3", "2", "(∃fg)y / comma-colimit oracle", "(f,g)", |i, l| {
            let gf = i.g.after(&i.f)?;
            let kan = kan_left(&i.f, &gf, l)?;
            for y in 0..i.y.n_objects() {
                let oracle = kan_left_comma_oracle(&i.f, &gf, y, l)?;
                match (&kan, oracle.object()) {
                    (PartialFunctor::Exists { functor }, Some(o)) => {
                        if !i.z.objects_isomorphic(functor.obj_map[y], o) {
                            return Ok(fail(format!("pointwise value at {y} differs from comma oracle")));
                        }
                    }
                    (PartialFunctor::Exists { .. }, None) => {
                        return Ok(fail(format!("comma oracle misses a value the Kan extension has at {y}")));
                    }
                    (PartialFunctor::Absent { at, .. }, _) => {
                        if *at == y && oracle.object().is_some() {
                            return Ok(fail(format!("Kan extension absent at {y} but oracle finds a colimit")));
                        }
                    }
                }
            }
            Ok(pass_canonical())
        }),
        // -------------------------------------------------- con: conical limits
        law!("con", "1", "∃ʳ_X M / Iℓ∗M", "(M)", |i, l| {
            let bang = FunctorMap::bang(&i.x, l)?;
            let lhs = exists_right(&bang, &i.m, l)?.fiber(0).len();
            let rhs = mixed_tensor(&LeftAction::terminal(&i.x), &i.m, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("con", "2", "∀ℓ_X A / {Iℓ,A}", "(A)", |i, l| {
            let bang = FunctorMap::bang(&i.x, l)?;
            let lhs = forall_left(&bang, &i.a, l)?.fiber(0).len();
            let rhs = hom_left(&LeftAction::terminal(&i.x), &i.a, l)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("con", "4", "A∗f / colim(f∘elᴬ)", "(A,f)", |i, l| {
            let el = elements_left(&i.a, l)?;
            let diag = i.f.after(&el.over.proj)?;
            let lhs = weighted_colimit(&i.a, &i.f, l)?;
            let rhs = conical_colimit(&diag, l)?;
            if partials_agree(&i.y, &lhs, &rhs) {
                Ok(pass_canonical())
            } else {
                Ok(fail("weighted colimit differs from the conical reduction"))
            }
        }),
        law!("con", "3", "∃_X f / colim f", "(f)", |i, l| {
            if funpred::kan_along_bang_matches_conical(&i.f, l)? {
                Ok(pass_canonical())
            } else {
                Ok(fail("Kan extension along ! disagrees with the conical (co)limit"))
            }
        }),
        // ------------------------------------------------ dy: diagonal Yoneda
        law!("dy", "", "Cat/X(id,iH) / Nat(hom,H)", "(H)", |i, l| {
            let c = comprehend(&i.h, l)?;
            verify::verify_dy(&i.h, &c, l)
        }),
        // ------------------------------------------------- r0: coend remarks
        law!("r0", "1", "end(M⇒N) / Nat(M,N)", "(M,N)", |i, l| {
            let h = hom_arrow(&i.m, &i.n, l)?;
            let e = profunctor::end(&h, l)?.len();
            let nat = hom_right(&i.m, &i.n, l)?.len();
            Ok(verdict_sets(e, nat))
        }),
        law!("r0", "2", "coend H / H'∗hom", "(H)", |i, l| {
            let ce = coend(&i.h, l)?;
            let hp = i.h.transpose_left()?;
            let hom = hom_profunctor(&i.x, l)?;
            let t = crate::action::mixed_tensor_with_classes(&hp, hom.inner(), l)?;
            if t.set.len() != ce.set.len() {
                return Ok(fail(format!(
                    "|H'∗hom| = {} but |coend H| = {}",
                    t.set.len(),
                    ce.set.len()
                )));
            }
            // canonical: the class of (t ∈ H(y,x), w: x→y) maps to the coend
            // class of H(w,x)(t)
            let n = i.x.n_objects();
            let mut to_coend = vec![usize::MAX; t.set.len()];
            for x in 0..n {
                for y in 0..n {
                    let sq = x * n + y;
                    for te in 0..i.h.fiber(y, x).len() {
                        for (wi, w) in i.x.hom(x, y).into_iter().enumerate() {
                            let cls = t.class_of(sq, te, wi);
                            let v = ce.class_of(x, i.h.lact(w, x, te));
                            if to_coend[cls] != usize::MAX && to_coend[cls] != v {
                                return Ok(fail("coend comparison ill-defined"));
                            }
                            to_coend[cls] = v;
                        }
                    }
                }
            }
            let mut seen = vec![false; ce.set.len()];
            for &v in &to_coend {
                if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
                    return Ok(fail("coend comparison not a bijection"));
                }
            }
            Ok(pass_canonical())
        }),
        law!("r0", "3", "coend(A⨰M) / strong coend / A∗M", "(A,M)", |i, l| {
            let o = outer_product(&i.a, &i.m, l)?;
            let ce = coend(&o, l)?.set.len();
            let sce = strong_coend(&o, l)?.len();
            let t = mixed_tensor(&i.a, &i.m, l)?.len();
            if ce == sce && sce == t {
                Ok(Verdict::Witness { path: CheckPath::SetBijection })
            } else {
                Ok(fail(format!("coend {ce}, strong coend {sce}, mixed tensor {t}")))
            }
        }),
        // --------------------------------------------------- r1: the value chain
        law!("r1", "", "(◇p)(x,y) rows", "(p)", |i, l| verify::verify_r1_all(&i.p, l)),
        // ---------------------------------------------- p1: the comprehension adjunction
        law!("p1", "1", "Nat(◇p,H) / Cat/X(p,iH)", "(p,H)", |i, l| {
            let (dp, carrier) = profunctor::diamond(&i.p, l)?;
            let c = comprehend(&i.h, l)?;
            verify::verify_p1(&i.p, &i.h, &dp, &carrier, &c, l)
        }),
        law!("p1", "2", "◇(id) / hom", "(X)", |i, l| {
            let (d, _) = profunctor::diamond(&OverCat::identity(&i.x), l)?;
            let hom = hom_profunctor(&i.x, l)?;
            verdict_iso_right(d.inner(), hom.inner(), None, l)
        }),
        // --------------------------------------- fact1..fact5: comprehension
        law!("fact1", "", "f*(iY H) / iX(f̈H)", "(f,H)", |i, l| {
            let cy = comprehend(&i.hy, l)?;
            let pulled = pullback_along(&i.f, &cy.over, l)?;
            let cx = comprehend(&ddot_substitute(&i.f, &i.hy, l)?, l)?;
            verdict_over(&pulled, &cx.over, l)
        }),
        law!("fact2", "1", "i(δℓA) / iℓA", "(A)", |i, l| {
            let c = comprehend(&dummy_left(&i.a, l)?, l)?;
            let el = elements_left(&i.a, l)?;
            verdict_over(&c.over, &el.over, l)
        }),
        law!("fact2", "2", "i(δʳM) / iʳM", "(M)", |i, l| {
            let c = comprehend(&dummy_right(&i.m, l)?, l)?;
            let el = elements_right(&i.m, l)?;
            verdict_over(&c.over, &el.over, l)
        }),
        law!("fact3", "1", "i(A⨰M) / iℓA×iʳM", "(A,M)", |i, l| {
            let c = comprehend(&outer_product(&i.a, &i.m, l)?, l)?;
            let fp = fibered_product(
                &elements_left(&i.a, l)?.over,
                &elements_right(&i.m, l)?.over,
                l,
            )?;
            verdict_over(&c.over, &fp, l)
        }),
        law!("fact3", "2", "i(∃ℓyI⨰∃ʳxI) / [x,y]", "(x,y)", |i, l| {
            let x0 = 0;
            let y0 = i.x.n_objects() - 1;
            let rep_y = LeftAction::representable(&i.x, y0)?;
            let rep_x = RightAction::representable(&i.x, x0)?;
            let c = comprehend(&outer_product(&rep_y, &rep_x, l)?, l)?;
            let interval = crate::fincat::comma::interval(&i.x, x0, y0, l)?;
            verdict_over(&c.over, &interval, l)
        }),
        law!("fact4", "", "i(M⇒N) is the exponential", "(q,M,N)", |i, l| {
            let h = hom_arrow(&i.m, &i.n, l)?;
            let expo = comprehend(&h, l)?;
            verify::verify_fact4(&i.q, &i.m, &i.n, &expo, l)
        }),
        law!("fact5", "1", "Cat/X(iH,iK) / Din*(H,K)", "(H,K)", |i, l| {
            let strong = strong_dinaturals(&i.h, &i.k, l)?;
            for fam in &strong {
                if !is_strong_dinatural(&i.h, &i.k, fam) {
                    return Ok(fail("over-map family fails the direct wedge condition"));
                }
                if !profunctor::is_dinatural(&i.h, &i.k, fam) {
                    return Ok(fail("strong dinatural family fails the hexagon"));
                }
            }
            // the direct wedge enumeration agrees
            let direct = direct_strong_dinaturals(&i.h, &i.k, l)?;
            if direct.len() != strong.len() {
                return Ok(fail(format!(
                    "over-map route finds {} families, wedge enumeration {}",
                    strong.len(),
                    direct.len()
                )));
            }
            for fam in &direct {
                if !strong.contains(fam) {
                    return Ok(fail("wedge family missing from the over-map route"));
                }
            }
            // closure under composition (a consequence of the Cat/X
            // representation): composing with endo-families stays strong
            let endo = strong_dinaturals(&i.k, &i.k, l)?;
            for alpha in strong.iter().take(4) {
                for beta in endo.iter().take(4) {
                    let composite: Vec<Vec<usize>> = alpha
                        .iter()
                        .enumerate()
                        .map(|(x, comp)| comp.iter().map(|&e| beta[x][e]).collect())
                        .collect();
                    if !is_strong_dinatural(&i.h, &i.k, &composite) {
                        return Ok(fail("strong dinaturals do not compose"));
                    }
                }
            }
            Ok(pass_canonical())
        }),
        law!("fact5", "2", "Din(A⨰M,K) / Din*(A⨰M,K)", "(A,M,K)", |i, l| {
            let o = outer_product(&i.a, &i.m, l)?;
            let din = dinaturals(&o, &i.k, l)?;
            let strong = strong_dinaturals(&o, &i.k, l)?;
            if din.len() != strong.len() {
                return Ok(fail(format!("{} dinaturals vs {} strong", din.len(), strong.len())));
            }
            for fam in &strong {
                if !din.contains(fam) {
                    return Ok(fail("a strong dinatural is not among the dinaturals"));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::SetBijection })
        }),
        // ------------------------------------------------------- rem: remarks
        law!("rem", "1", "∃ʳ_{π₂}hom_P / I_P", "(p)", |i, l| {
            let pi2 = second_projection(&i.p.total, l)?;
            let hom_p = hom_profunctor(&i.p.total, l)?;
            let e = exists_right(&pi2, hom_p.inner(), l)?;
            let ok = (0..i.p.total.n_objects()).all(|o| e.fiber(o).len() == 1);
            if ok {
                Ok(pass_canonical())
            } else {
                Ok(fail("∃ along the projection of hom is not terminal"))
            }
        }),
        law!("rem", "2", "◇ʳ / ∃ʳ_{π₂}◇", "(p)", |i, l| {
            let dr = diamond_right(&i.p, l)?;
            let (d, _) = profunctor::diamond(&i.p, l)?;
            let pi2 = second_projection(&i.x, l)?;
            let via = exists_right(&pi2, d.inner(), l)?;
            verdict_iso_right(&dr, &via, None, l)
        }),
        // --------------------------------------------- predicate agreement laws
        law!("ff", "", "fully-faithful characterizations agree", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            let rep = is_fully_faithful(&i.f, &env, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("ad", "1", "absolute-density characterizations agree", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            let rep = is_absolutely_dense(&i.f, &env, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("ad", "2", "f, gf absolutely dense ⟹ g too", "(f,g)", |i, l| {
            let env_f = PredEnv::standard(&i.f, l)?;
            let gf = i.g.after(&i.f)?;
            let env_gf = PredEnv::standard(&gf, l)?;
            if is_absolutely_dense(&i.f, &env_f, l)?.holds
                && is_absolutely_dense(&gf, &env_gf, l)?.holds
            {
                let env_g = PredEnv::standard(&i.g, l)?;
                if !is_absolutely_dense(&i.g, &env_g, l)?.holds {
                    return Ok(fail("composition corollary fails"));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("ad", "3", "absolutely dense ⟹ final and initial", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            if is_absolutely_dense(&i.f, &env, l)?.holds {
                if !is_final(&i.f, &env, l)?.holds {
                    return Ok(fail("absolutely dense map is not final"));
                }
                if !is_initial(&i.f, &env, l)?.holds {
                    return Ok(fail("absolutely dense map is not initial"));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("dense", "1", "left-density characterizations agree", "(f)", |i, l| {
            let rep = is_left_dense(&i.f, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("dense", "2", "right-density characterizations agree", "(f)", |i, l| {
            let rep = is_right_dense(&i.f, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("dense", "3", "absolutely dense ⟹ left and right dense", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            if is_absolutely_dense(&i.f, &env, l)?.holds {
                if !is_left_dense(&i.f, l)?.holds || !is_right_dense(&i.f, l)?.holds {
                    return Ok(fail("absolutely dense map is not dense"));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("final", "1", "finality characterizations agree", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            let rep = is_final(&i.f, &env, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("final", "2", "initiality characterizations agree", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            let rep = is_initial(&i.f, &env, l)?;
            match rep.disagreement {
                None => Ok(Verdict::Witness { path: CheckPath::Predicate }),
                Some(d) => Ok(fail(d)),
            }
        }),
        law!("final", "3", "final f: colim(gf) / colim g", "(f,g)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            if is_final(&i.f, &env, l)?.holds {
                let gf = i.g.after(&i.f)?;
                let lhs = conical_colimit(&gf, l)?;
                let rhs = conical_colimit(&i.g, l)?;
                if !partials_agree(&i.z, &lhs, &rhs) {
                    return Ok(fail("final map does not transfer the conical colimit"));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("adj", "1", "adjunctible ⟹ initial/final", "(f)", |i, l| {
            let env = PredEnv::standard(&i.f, l)?;
            let (left_ok, _) = is_left_adjunctible(&i.f, l)?;
            if left_ok && !is_initial(&i.f, &env, l)?.holds {
                return Ok(fail("left adjunctible map is not initial"));
            }
            let (right_ok, _) = is_right_adjunctible(&i.f, l)?;
            if right_ok && !is_final(&i.f, &env, l)?.holds {
                return Ok(fail("right adjunctible map is not final"));
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("adj", "2", "adjunctible maps preserve (co)limits", "(f,p)", |i, l| {
            let (right_ok, _) = is_right_adjunctible(&i.f, l)?;
            if right_ok
                && !preserves_limit(&i.f, &RightAction::terminal(&i.p.total), &i.p.proj, l)?
            {
                return Ok(fail("right adjunctible map fails to preserve a limit"));
            }
            let (left_ok, _) = is_left_adjunctible(&i.f, l)?;
            if left_ok
                && !preserves_colimit(&i.f, &LeftAction::terminal(&i.p.total), &i.p.proj, l)?
            {
                return Ok(fail("left adjunctible map fails to preserve a colimit"));
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        law!("adj", "3", "adjoint pairs are consistent", "(f)", |i, l| {
            // ! ⊣ pt_x exactly when x is terminal (every hom(y,x) a
            // singleton); the conical colimit of the identity must agree too
            let bang = FunctorMap::bang(&i.x, l)?;
            let colim = conical_colimit(&FunctorMap::identity(&i.x), l)?;
            for x in 0..i.x.n_objects() {
                let section = FunctorMap::point(&i.x, x, l)?;
                let is_adj = funpred::check_adjoint_pair(&bang, &section, l)?;
                let is_terminal =
                    (0..i.x.n_objects()).all(|y| i.x.hom(y, x).len() == 1);
                if is_adj != is_terminal {
                    return Ok(fail(format!(
                        "! ⊣ pt_{x} decided {is_adj}, terminal-object check says {is_terminal}"
                    )));
                }
                let colim_here = match colim.object() {
                    Some(o) => i.x.objects_isomorphic(o, x),
                    None => false,
                };
                if is_terminal != colim_here {
                    return Ok(fail(format!(
                        "terminal check at {x}: direct {is_terminal}, colim(id) {colim_here}"
                    )));
                }
            }
            Ok(Verdict::Witness { path: CheckPath::Predicate })
        }),
        // -------------------------------------------- Cat/X level laws
        law!("expcat", "", "iʳ(A⋔M) is the exponential (iʳM)^(iℓA)", "(q,A,M)", |i, l| {
            let c = complement(&i.a, &i.m, l)?;
            let el_c = elements_right(&c, l)?;
            let el_a = elements_left(&i.a, l)?;
            let el_m = elements_right(&i.m, l)?;
            let prod = fibered_product(&i.q, &el_a.over, l)?;
            let lhs = over_maps(&prod, &el_m.over, l, None)?.len();
            let rhs = over_maps(&i.q, &el_c.over, l, None)?.len();
            Ok(verdict_sets(lhs, rhs))
        }),
        law!("substab", "1", "f*(iℓA) / iℓ(f^ℓA)", "(f,A)", |i, l| {
            let el_y = elements_left(&i.ay, l)?;
            let pulled = pullback_along(&i.f, &el_y.over, l)?;
            let el_x = elements_left(&substitute_left(&i.f, &i.ay)?, l)?;
            verdict_over(&pulled, &el_x.over, l)
        }),
        law!("substab", "2", "f*(iʳM) / iʳ(f^rM)", "(f,M)", |i, l| {
            let el_y = elements_right(&i.my, l)?;
            let pulled = pullback_along(&i.f, &el_y.over, l)?;
            let el_x = elements_right(&substitute_right(&i.f, &i.my)?, l)?;
            verdict_over(&pulled, &el_x.over, l)
        }),
        law!("frobcat", "", "◇ʳ(iℓA×p) / A⊙◇ʳp", "(A,p)", |i, l| {
            let el_a = elements_left(&i.a, l)?;
            let prod = fibered_product(&el_a.over, &i.p, l)?;
            let lhs = diamond_right(&prod, l)?;
            let rhs = oodot(&i.a, &diamond_right(&i.p, l)?, l)?;
            verdict_iso_right(&lhs, &rhs, None, l)
        }),
        law!("tri", "1", "◇ʳ ⊣ iʳ triangle identities", "(p,M)", |i, l| {
            // triangle 2 at M: counit ∘ (unit of i^r M) is the identity
            let el = elements_right(&i.m, l)?;
            let (dm, carrier) = diamond_right_with(&el.over, l)?;
            let counit = crate::catover::counit_diamond_right(&i.m, &el, &dm, &carrier)?;
            let el_dm = elements_right(&dm, l)?;
            let unit = crate::catover::unit_diamond_right(&el.over, &dm, &carrier, &el_dm)?;
            for o in 0..el.over.total.n_objects() {
                let (x, e) = el.pairs[o];
                let (x2, c) = el_dm.pairs[unit.obj_map[o]];
                if x != x2 || counit.components[x][c] != e {
                    return Ok(fail("triangle i(ε)∘η_i = id fails"));
                }
            }
            // triangle 1 at p: ε_{◇p} ∘ ◇(η_p) is the identity
            let (dp, cp) = diamond_right_with(&i.p, l)?;
            let el_dp = elements_right(&dp, l)?;
            let unit_p = crate::catover::unit_diamond_right(&i.p, &dp, &cp, &el_dp)?;
            let (d_eldp, c_eldp) = diamond_right_with(&el_dp.over, l)?;
            let d_unit = diamond_right_map(&unit_p, &dp, &cp, &d_eldp, &c_eldp)?;
            let counit_dp =
                crate::catover::counit_diamond_right(&dp, &el_dp, &d_eldp, &c_eldp)?;
            let composed = counit_dp.after(&d_unit);
            for (o, comp) in composed.components.iter().enumerate() {
                if comp.iter().enumerate().any(|(e, &v)| e != v) {
                    return Ok(fail(format!(
                        "triangle ε_◇ ∘ ◇(η) = id fails at object {o}"
                    )));
                }
            }
            Ok(pass_canonical())
        }),
        law!("tri", "2", "iℓ ⊣ □ℓ triangle identities", "(A)", |i, l| {
            // unit A → □(iA) followed by the counit evaluation is the identity
            let el = elements_left(&i.a, l)?;
            let (sq, data) = square_left_with(&el.over, l)?;
            // unit: a ∈ A x ↦ the section (w,u) ↦ (w, A(u)a)
            for x in 0..i.x.n_objects() {
                let comma = &data.commas[x];
                for a_e in 0..i.a.fiber(x).len() {
                    let obj_map: Vec<usize> = comma
                        .objs
                        .iter()
                        .map(|&(w, u)| el.obj_of(w, i.a.apply(u, a_e)))
                        .collect();
                    let arrow_map: Vec<usize> = (0..comma.total.n_arrows())
                        .map(|ai| {
                            let arr = comma.total.arrow(ai);
                            let f_base = comma.proj.arrow_map[ai];
                            el.over
                                .arrows_over(f_base)
                                .into_iter()
                                .find(|&t| {
                                    el.over.total.arrow(t).src == obj_map[arr.src]
                                        && el.over.total.arrow(t).tgt == obj_map[arr.tgt]
                                })
                                .expect("fibration lift")
                        })
                        .collect();
                    let section = FunctorMap::new(
                        "unit",
                        comma.total.clone(),
                        el.over.total.clone(),
                        obj_map,
                        arrow_map,
                    )?;
                    let Some(idx) = data.sections[x].position_of(&section) else {
                        return Ok(fail("unit of i ⊣ □ is not a section"));
                    };
                    // counit: evaluate the section at (x, id_x); must return a_e
                    let got = data.sections[x].items[idx].obj_map
                        [comma.obj_of(x, i.x.identity(x))];
                    if el.pairs[got] != (x, a_e) {
                        return Ok(fail("triangle ε_i ∘ i(η) = id fails"));
                    }
                }
            }
            let _ = sq;
            Ok(pass_canonical())
        }),
        // ----------------------------------------------- tv: two-valued Galois
        law!("tv", "", "poset comprehension Galois adjunction", "(posets ≤ 3)", |_i, _l| {
            use crate::twovalued::{
                compatible_relations, poset_comprehension, poset_extension, FinitePoset,
            };
            for p in FinitePoset::enumerate_all(3) {
                let rels = compatible_relations(&p);
                let full = (1u32 << p.n()) - 1;
                for pset in 0..=full {
                    let dp = poset_comprehension(&p, pset);
                    for h in &rels {
                        let lhs = dp.iter().zip(h).all(|(&a, &b)| !a || b);
                        let rhs = pset & !poset_extension(&p, h) == 0;
                        if lhs != rhs {
                            return Ok(fail(format!(
                                "Galois adjunction fails on a 3-poset at P={pset:b}"
                            )));
                        }
                    }
                }
            }
            Ok(pass_canonical())
        }),
    ]
}

/// Direct backtracking enumeration of strong dinatural families (the wedge
/// condition itself), independent of the over-map route.
fn direct_strong_dinaturals(
    h: &crate::profunctor::EndoProfunctor,
    k: &crate::profunctor::EndoProfunctor,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let base = h.base().clone();
    let n = base.n_objects();
    for x in 0..n {
        let size =
            k.fiber(x, x).len().checked_pow(h.fiber(x, x).len() as u32).unwrap_or(usize::MAX);
        if size > limits.derived_fiber {
            return Err(crate::Error::size(
                "strong-dinatural candidate set",
                size,
                limits.derived_fiber,
            ));
        }
    }
    let per_obj: Vec<Vec<Vec<usize>>> =
        (0..n).map(|x| h.fiber(x, x).function_labels(k.fiber(x, x))).collect();
    let mut found = Vec::new();
    let mut family: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut nodes = 0usize;
    fn descend(
        h: &crate::profunctor::EndoProfunctor,
        k: &crate::profunctor::EndoProfunctor,
        base: &crate::fincat::Cat,
        per_obj: &[Vec<Vec<usize>>],
        x: usize,
        family: &mut Vec<Vec<usize>>,
        found: &mut Vec<Vec<Vec<usize>>>,
        nodes: &mut usize,
        limits: &Limits,
    ) -> Result<()> {
        let n = base.n_objects();
        if x == n {
            found.push(family.clone());
            return Ok(());
        }
        'cand: for cand in &per_obj[x] {
            *nodes += 1;
            if *nodes > limits.search_nodes {
                return Err(crate::Error::size(
                    "strong-dinatural search nodes",
                    *nodes,
                    limits.search_nodes,
                ));
            }
            family[x] = cand.clone();
            for lambda in 0..base.n_arrows() {
                let arr = base.arrow(lambda);
                if arr.src.max(arr.tgt) != x {
                    continue;
                }
                for a in 0..h.fiber(arr.src, arr.src).len() {
                    for b in 0..h.fiber(arr.tgt, arr.tgt).len() {
                        if h.ract(arr.src, lambda, a) == h.lact(lambda, arr.tgt, b)
                            && k.ract(arr.src, lambda, family[arr.src][a])
                                != k.lact(lambda, arr.tgt, family[arr.tgt][b])
                        {
                            continue 'cand;
                        }
                    }
                }
            }
            descend(h, k, base, per_obj, x + 1, family, found, nodes, limits)?;
        }
        family[x] = Vec::new();
        Ok(())
    }
    descend(h, k, &base, &per_obj, 0, &mut family, &mut found, &mut nodes, limits)?;
    Ok(found)
}

/// The projection `π₂ : X^op×X → X`.
fn second_projection(x: &crate::fincat::Cat, limits: &Limits) -> Result<FunctorMap> {
    let sq = profunctor::square_of(x, limits)?;
    let n = x.n_objects();
    let m = x.n_arrows();
    FunctorMap::new(
        "π₂",
        sq,
        x.clone(),
        (0..n * n).map(|o| o % n).collect(),
        (0..m * m).map(|a| a % m).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lawsuite::fuzz::{FuzzConfig, Fuzzer};

    /// every law passes on the first few instances of the default stream
    #[test]
    fn smoke_every_law_on_a_few_instances() {
        let config = FuzzConfig { instances: 3, ..FuzzConfig::default() };
        let mut fz = Fuzzer::new(config.clone());
        let limits = config.limits();
        let inputs: Vec<_> = (0..3).map(|i| fz.instance(i).unwrap()).collect();
        for law in registry() {
            for input in &inputs {
                let v = super::super::check_law(&law, input, &limits);
                assert!(
                    !v.is_fail(),
                    "law {} fails on instance {}: {:?}",
                    law.id(),
                    input.index,
                    v
                );
            }
        }
    }
}
