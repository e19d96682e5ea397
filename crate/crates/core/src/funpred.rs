//! Internal weighted (co)limits, pointwise Kan extensions of functors, and
//! the predicate suite (fully faithful, absolutely dense, dense, final,
//! adjunctible) with the equivalent characterizations evaluated side by side.
//!
//! Limits here are partial: absence is a value, not an error. A limit is a
//! representability witness: `{M,f} = y₀` means the cone presheaf
//! `y ↦ Nat(M, f^r ∃^r_y I)` is isomorphic to `hom(−, y₀)`, and the witness
//! transformation is kept.
//!
//! Characterizations quantified over "all A / M / H / g" are evaluated in two
//! ways: an *exact* finite kernel (representable instances, which determine
//! the general case by density, or a canonical comparison map) decides the
//! boolean; additional *consequence* checks on a test environment must then
//! agree whenever the predicate holds, and a violation is reported as an
//! engine bug.

use crate::action::{
    counit_exists_left, counit_exists_right, exists_left, exists_left_with, exists_right,
    exists_right_with, forall_left, forall_right, hom_left, hom_right, iso_left, iso_right,
    substitute_left, substitute_right, transpose_to_exists_right, unit_forall_left,
    unit_forall_right, HomSet, LeftAction, RightAction,
};
use crate::fincat::diagram::NatTransform;
use crate::fincat::search::{enumerate_functor_nats, find_functor_iso};
use crate::fincat::{base_eq, Cat, FunctorMap};
use crate::profunctor::{self, ddot_exists, ddot_substitute, EndoProfunctor};
use crate::{Error, Limits, Result};

/// A partially defined universal object: either a witness or a reason for
/// absence.
#[derive(Debug, Clone)]
pub enum PartialObject {
    Exists {
        object: usize,
        /// natural isomorphism between the (co)cone functor and the
        /// representable at `object`
        witness: NatTransform,
    },
    Absent {
        reason: String,
    },
}

impl PartialObject {
    pub fn object(&self) -> Option<usize> {
        match self {
            PartialObject::Exists { object, .. } => Some(*object),
            PartialObject::Absent { .. } => None,
        }
    }

    pub fn exists(&self) -> bool {
        self.object().is_some()
    }
}

/// Agreement of two partial objects over the same category: both absent, or
/// both present with isomorphic representing objects.
pub fn partials_agree(cat: &Cat, p: &PartialObject, q: &PartialObject) -> bool {
    match (p.object(), q.object()) {
        (None, None) => true,
        (Some(a), Some(b)) => cat.objects_isomorphic(a, b),
        _ => false,
    }
}

/// The cone presheaf of `(M, f)`: `W(y) = Nat_X(M, f^r ∃^r_y I)` with the
/// precomposition action, kept with its hom-sets and weights.
pub struct ConeData {
    pub action: LeftAction,
    pub homs: Vec<HomSet>,
    pub weights: Vec<RightAction>,
}

pub fn cone_presheaf(m: &RightAction, f: &FunctorMap, limits: &Limits) -> Result<ConeData> {
    if !base_eq(&f.dom, m.base()) {
        return Err(Error::BaseMismatch(
            "cone_presheaf: weight must live over the functor domain".into(),
        ));
    }
    let y_cat = &f.cod;
    let n = y_cat.n_objects();
    let mut weights = Vec::with_capacity(n);
    let mut homs = Vec::with_capacity(n);
    for y in 0..n {
        let w = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        homs.push(hom_right(m, &w, limits)?);
        weights.push(w);
    }
    let fibers = homs.iter().map(|h| h.set.clone()).collect();
    // action of g : y' → y sends α ∈ W(y) to (−∘g) ∘ α ∈ W(y')
    let maps = (0..y_cat.n_arrows())
        .map(|g| -> Result<Vec<usize>> {
            let arr = y_cat.arrow(g);
            let (yp, y) = (arr.src, arr.tgt);
            homs[y]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                        .map(|x| {
                            alpha.components[x]
                                .iter()
                                .map(|&ui| {
                                    let u = y_cat
                                        .arrow_id(weights[y].fiber(x).label(ui))
                                        .expect("weight labels are arrow ids");
                                    let ug = y_cat.comp(u, g);
                                    weights[yp]
                                        .fiber(x)
                                        .index_of(&y_cat.arrow(ug).id)
                                        .expect("hom closed")
                                })
                                .collect()
                        })
                        .collect();
                    homs[yp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("cone_presheaf: restricted cone not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConeData { action: LeftAction::new(y_cat, fibers, maps)?, homs, weights })
}

/// The cocone copresheaf of `(A, f)`: `V(y) = Nat_X(A, f^ℓ ∃^ℓ_y I)`.
pub struct CoconeData {
    pub action: RightAction,
    pub homs: Vec<HomSet>,
    pub weights: Vec<LeftAction>,
}

pub fn cocone_copresheaf(a: &LeftAction, f: &FunctorMap, limits: &Limits) -> Result<CoconeData> {
    if !base_eq(&f.dom, a.base()) {
        return Err(Error::BaseMismatch(
            "cocone_copresheaf: weight must live over the functor domain".into(),
        ));
    }
    let y_cat = &f.cod;
    let n = y_cat.n_objects();
    let mut weights = Vec::with_capacity(n);
    let mut homs = Vec::with_capacity(n);
    for y in 0..n {
        let w = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        homs.push(hom_left(a, &w, limits)?);
        weights.push(w);
    }
    let fibers = homs.iter().map(|h| h.set.clone()).collect();
    // action of g : y → y' sends α ∈ V(y) to (g∘−) ∘ α ∈ V(y')
    let maps = (0..y_cat.n_arrows())
        .map(|g| -> Result<Vec<usize>> {
            let arr = y_cat.arrow(g);
            let (y, yp) = (arr.src, arr.tgt);
            homs[y]
                .items
                .iter()
                .map(|alpha| -> Result<usize> {
                    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                        .map(|x| {
                            alpha.components[x]
                                .iter()
                                .map(|&ui| {
                                    let u = y_cat
                                        .arrow_id(weights[y].fiber(x).label(ui))
                                        .expect("weight labels are arrow ids");
                                    let gu = y_cat.comp(g, u);
                                    weights[yp]
                                        .fiber(x)
                                        .index_of(&y_cat.arrow(gu).id)
                                        .expect("hom closed")
                                })
                                .collect()
                        })
                        .collect();
                    homs[yp].position_of(&comps).ok_or_else(|| {
                        Error::EngineBug("cocone_copresheaf: pushed cocone not natural".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoconeData { action: RightAction::new(y_cat, fibers, maps)?, homs, weights })
}

/// The weighted limit `{M, f}` of `f : X → Y` by `M ∈ R X`: the object of
/// `Y` representing the cone presheaf, if any.
pub fn weighted_limit(m: &RightAction, f: &FunctorMap, limits: &Limits) -> Result<PartialObject> {
    let cone = cone_presheaf(m, f, limits)?;
    representability(&cone.action, &f.cod, limits)
}

/// The weighted colimit `A ∗ f`.
pub fn weighted_colimit(a: &LeftAction, f: &FunctorMap, limits: &Limits) -> Result<PartialObject> {
    let cocone = cocone_copresheaf(a, f, limits)?;
    corepresentability(&cocone.action, &f.cod, limits)
}

fn representability(w: &LeftAction, y_cat: &Cat, limits: &Limits) -> Result<PartialObject> {
    let mut found: Option<(usize, NatTransform)> = None;
    for y0 in 0..y_cat.n_objects() {
        let rep = LeftAction::representable(y_cat, y0)?;
        if let Some(iso) = iso_left(w, &rep, limits)? {
            if let Some((prev, _)) = &found {
                if !y_cat.objects_isomorphic(*prev, y0) {
                    return Err(Error::EngineBug(
                        "two non-isomorphic representing objects for one limit".into(),
                    ));
                }
            } else {
                found = Some((y0, iso));
            }
        }
    }
    Ok(match found {
        Some((object, witness)) => PartialObject::Exists { object, witness },
        None => PartialObject::Absent { reason: "cone presheaf is not representable".into() },
    })
}

fn corepresentability(v: &RightAction, y_cat: &Cat, limits: &Limits) -> Result<PartialObject> {
    let mut found: Option<(usize, NatTransform)> = None;
    for y0 in 0..y_cat.n_objects() {
        let rep = RightAction::representable(y_cat, y0)?;
        if let Some(iso) = iso_right(v, &rep, limits)? {
            if let Some((prev, _)) = &found {
                if !y_cat.objects_isomorphic(*prev, y0) {
                    return Err(Error::EngineBug(
                        "two non-isomorphic corepresenting objects for one colimit".into(),
                    ));
                }
            } else {
                found = Some((y0, iso));
            }
        }
    }
    Ok(match found {
        Some((object, witness)) => PartialObject::Exists { object, witness },
        None => {
            PartialObject::Absent { reason: "cocone copresheaf is not corepresentable".into() }
        }
    })
}

/// Conical limit: weighted by the terminal copresheaf.
pub fn conical_limit(f: &FunctorMap, limits: &Limits) -> Result<PartialObject> {
    weighted_limit(&RightAction::terminal(&f.dom), f, limits)
}

/// Conical colimit: weighted by the terminal presheaf.
pub fn conical_colimit(f: &FunctorMap, limits: &Limits) -> Result<PartialObject> {
    weighted_colimit(&LeftAction::terminal(&f.dom), f, limits)
}

/// Does `g` preserve the limit `{M, f}`? Vacuously true when the limit does
/// not exist.
pub fn preserves_limit(
    g: &FunctorMap,
    m: &RightAction,
    f: &FunctorMap,
    limits: &Limits,
) -> Result<bool> {
    let lim = weighted_limit(m, f, limits)?;
    let Some(l) = lim.object() else { return Ok(true) };
    let gf = g.after(f)?;
    let lim2 = weighted_limit(m, &gf, limits)?;
    Ok(match lim2.object() {
        Some(l2) => g.cod.objects_isomorphic(g.obj_map[l], l2),
        None => false,
    })
}

pub fn preserves_colimit(
    g: &FunctorMap,
    a: &LeftAction,
    f: &FunctorMap,
    limits: &Limits,
) -> Result<bool> {
    let col = weighted_colimit(a, f, limits)?;
    let Some(c) = col.object() else { return Ok(true) };
    let gf = g.after(f)?;
    let col2 = weighted_colimit(a, &gf, limits)?;
    Ok(match col2.object() {
        Some(c2) => g.cod.objects_isomorphic(g.obj_map[c], c2),
        None => false,
    })
}

/// A partially defined Kan extension.
#[derive(Debug, Clone)]
pub enum PartialFunctor {
    Exists { functor: FunctorMap },
    Absent { at: usize, reason: String },
}

impl PartialFunctor {
    pub fn functor(&self) -> Option<&FunctorMap> {
        match self {
            PartialFunctor::Exists { functor } => Some(functor),
            PartialFunctor::Absent { .. } => None,
        }
    }
}

/// The pointwise right Kan extension `∀_f g : Y → Z`, with
/// `(∀_f g) y = {f^r ∃^r_y I, g}` and arrows assembled by Yoneda from the
/// representability witnesses.
pub fn kan_right(f: &FunctorMap, g: &FunctorMap, limits: &Limits) -> Result<PartialFunctor> {
    if !base_eq(&f.dom, &g.dom) {
        return Err(Error::BaseMismatch("kan_right: functors must share a domain".into()));
    }
    let y_cat = &f.cod;
    let z_cat = &g.cod;
    let n = y_cat.n_objects();
    let mut objs = Vec::with_capacity(n);
    let mut cones: Vec<ConeData> = Vec::with_capacity(n);
    let mut isos: Vec<NatTransform> = Vec::with_capacity(n);
    let mut weights_y: Vec<RightAction> = Vec::with_capacity(n);
    for y in 0..n {
        let w_y = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        let cone = cone_presheaf(&w_y, g, limits)?;
        match representability(&cone.action, z_cat, limits)? {
            PartialObject::Exists { object, witness } => {
                objs.push(object);
                isos.push(witness);
                cones.push(cone);
                weights_y.push(w_y);
            }
            PartialObject::Absent { reason } => {
                return Ok(PartialFunctor::Absent { at: y, reason });
            }
        }
    }
    // arrow map by Yoneda: T(v) = ω_{y'}(κ_y ∘ φ_v) evaluated at z = L_y
    let mut arrow_map = Vec::with_capacity(y_cat.n_arrows());
    for v in 0..y_cat.n_arrows() {
        let arr = y_cat.arrow(v);
        let (y, yp) = (arr.src, arr.tgt);
        let ly = objs[y];
        // κ_y: the universal cone = ω_y⁻¹(id_{L_y}) ∈ W_y(L_y)
        let id_idx = rep_index_left(z_cat, ly, z_cat.identity(ly))?;
        let kappa_idx = isos[y]
            .inverse()
            .ok_or_else(|| Error::EngineBug("limit witness not invertible".into()))?
            .components[ly][id_idx];
        let kappa = &cones[y].homs[ly].items[kappa_idx];
        // φ_v : w_{y'} → w_y is precomposition with v; κ' = κ ∘ φ_v
        let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
            .map(|x| {
                weights_y[yp]
                    .fiber(x)
                    .labels()
                    .iter()
                    .map(|l| {
                        let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                        let uv = y_cat.comp(u, v);
                        let i = weights_y[y]
                            .fiber(x)
                            .index_of(&y_cat.arrow(uv).id)
                            .expect("hom closed");
                        kappa.components[x][i]
                    })
                    .collect()
            })
            .collect();
        let kprime = cones[yp].homs[ly].position_of(&comps).ok_or_else(|| {
            Error::EngineBug("kan_right: restricted universal cone not natural".into())
        })?;
        let t = isos[yp].components[ly][kprime];
        arrow_map.push(rep_arrow_left(z_cat, objs[yp], ly, t)?);
    }
    let functor = FunctorMap::new(
        format!("ran_{}({})", f.name, g.name),
        y_cat.clone(),
        z_cat.clone(),
        objs,
        arrow_map,
    )
    .map_err(|e| Error::EngineBug(format!("kan_right assembled map not functorial: {e}")))?;
    Ok(PartialFunctor::Exists { functor })
}

/// The pointwise left Kan extension `∃_f g : Y → Z`,
/// `(∃_f g) y = f^ℓ ∃^ℓ_y I ∗ g`.
pub fn kan_left(f: &FunctorMap, g: &FunctorMap, limits: &Limits) -> Result<PartialFunctor> {
    if !base_eq(&f.dom, &g.dom) {
        return Err(Error::BaseMismatch("kan_left: functors must share a domain".into()));
    }
    let y_cat = &f.cod;
    let z_cat = &g.cod;
    let n = y_cat.n_objects();
    let mut objs = Vec::with_capacity(n);
    let mut cocones: Vec<CoconeData> = Vec::with_capacity(n);
    let mut isos: Vec<NatTransform> = Vec::with_capacity(n);
    let mut weights_y: Vec<LeftAction> = Vec::with_capacity(n);
    for y in 0..n {
        let w_y = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        let cocone = cocone_copresheaf(&w_y, g, limits)?;
        match corepresentability(&cocone.action, z_cat, limits)? {
            PartialObject::Exists { object, witness } => {
                objs.push(object);
                isos.push(witness);
                cocones.push(cocone);
                weights_y.push(w_y);
            }
            PartialObject::Absent { reason } => {
                return Ok(PartialFunctor::Absent { at: y, reason });
            }
        }
    }
    let mut arrow_map = Vec::with_capacity(y_cat.n_arrows());
    for v in 0..y_cat.n_arrows() {
        let arr = y_cat.arrow(v);
        let (y, yp) = (arr.src, arr.tgt);
        let (ey, eyp) = (objs[y], objs[yp]);
        // κ_{y'} = ω_{y'}⁻¹(id_{E_{y'}}) ∈ V_{y'}(E_{y'})
        let id_idx = rep_index_right(z_cat, eyp, z_cat.identity(eyp))?;
        let kappa_idx = isos[yp]
            .inverse()
            .ok_or_else(|| Error::EngineBug("colimit witness not invertible".into()))?
            .components[eyp][id_idx];
        let kappa = &cocones[yp].homs[eyp].items[kappa_idx];
        // φ_v : w_y → w_{y'} is post-composition with v; κ' = κ ∘ φ_v
        let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
            .map(|x| {
                weights_y[y]
                    .fiber(x)
                    .labels()
                    .iter()
                    .map(|l| {
                        let u = y_cat.arrow_id(l).expect("weight labels are arrows");
                        let vu = y_cat.comp(v, u);
                        let i = weights_y[yp]
                            .fiber(x)
                            .index_of(&y_cat.arrow(vu).id)
                            .expect("hom closed");
                        kappa.components[x][i]
                    })
                    .collect()
            })
            .collect();
        let kprime = cocones[y].homs[eyp].position_of(&comps).ok_or_else(|| {
            Error::EngineBug("kan_left: pulled universal cocone not natural".into())
        })?;
        let t = isos[y].components[eyp][kprime];
        arrow_map.push(rep_arrow_right(z_cat, ey, eyp, t)?);
    }
    let functor = FunctorMap::new(
        format!("lan_{}({})", f.name, g.name),
        y_cat.clone(),
        z_cat.clone(),
        objs,
        arrow_map,
    )
    .map_err(|e| Error::EngineBug(format!("kan_left assembled map not functorial: {e}")))?;
    Ok(PartialFunctor::Exists { functor })
}

/// Index of an arrow inside the representable fiber `hom(src(arrow), l)`.
fn rep_index_left(z_cat: &Cat, l: usize, arrow: usize) -> Result<usize> {
    LeftAction::representable(z_cat, l)?
        .fiber(z_cat.arrow(arrow).src)
        .index_of(&z_cat.arrow(arrow).id)
        .ok_or_else(|| Error::EngineBug("arrow missing from representable fiber".into()))
}

fn rep_arrow_left(z_cat: &Cat, rep_at: usize, fiber_at: usize, idx: usize) -> Result<usize> {
    let rep = LeftAction::representable(z_cat, rep_at)?;
    let label = rep.fiber(fiber_at).label(idx).to_string();
    z_cat.arrow_id(&label)
}

fn rep_index_right(z_cat: &Cat, l: usize, arrow: usize) -> Result<usize> {
    RightAction::representable(z_cat, l)?
        .fiber(z_cat.arrow(arrow).tgt)
        .index_of(&z_cat.arrow(arrow).id)
        .ok_or_else(|| Error::EngineBug("arrow missing from corepresentable fiber".into()))
}

fn rep_arrow_right(z_cat: &Cat, rep_at: usize, fiber_at: usize, idx: usize) -> Result<usize> {
    let rep = RightAction::representable(z_cat, rep_at)?;
    let label = rep.fiber(fiber_at).label(idx).to_string();
    z_cat.arrow_id(&label)
}

/// One evaluated characterization inside a predicate report.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub value: bool,
    /// Exact checks must all agree (they decide the predicate); consequence
    /// checks must hold whenever the predicate does.
    pub exact: bool,
}

/// The result of a predicate with its characterization table.
#[derive(Debug, Clone)]
pub struct PredicateReport {
    pub predicate: &'static str,
    pub holds: bool,
    pub checks: Vec<Check>,
    /// set when the exact characterizations disagree, or a consequence fails
    /// while the predicate holds — an engine bug, surfaced verbatim
    pub disagreement: Option<String>,
}

impl PredicateReport {
    fn conclude(predicate: &'static str, checks: Vec<Check>) -> PredicateReport {
        let exact: Vec<&Check> = checks.iter().filter(|c| c.exact).collect();
        let holds = exact.first().map(|c| c.value).unwrap_or(false);
        let mut disagreement = None;
        if exact.iter().any(|c| c.value != holds) {
            let vals: Vec<String> =
                exact.iter().map(|c| format!("{}={}", c.name, c.value)).collect();
            disagreement = Some(format!(
                "engine bug: exact characterizations of `{predicate}` disagree: {}",
                vals.join(", ")
            ));
        } else if holds {
            if let Some(c) = checks.iter().find(|c| !c.exact && !c.value) {
                disagreement = Some(format!(
                    "engine bug: consequence `{}` fails although `{predicate}` holds",
                    c.name
                ));
            }
        }
        PredicateReport { predicate, holds, checks, disagreement }
    }
}

/// Test instances the quantified characterizations run over.
pub struct PredEnv {
    pub left_x: Vec<LeftAction>,
    pub right_x: Vec<RightAction>,
    pub left_y: Vec<LeftAction>,
    pub right_y: Vec<RightAction>,
    pub pro_x: Vec<EndoProfunctor>,
    pub pro_y: Vec<EndoProfunctor>,
    /// composable test functors `g : Y → Z`
    pub from_y: Vec<FunctorMap>,
}

impl PredEnv {
    /// Terminals, all representables and hom profunctors for both ends of
    /// `f`, plus the identity and terminal functors out of the codomain.
    /// Fuzzed instances can be appended on top.
    pub fn standard(f: &FunctorMap, limits: &Limits) -> Result<PredEnv> {
        let (x_cat, y_cat) = (&f.dom, &f.cod);
        let mut left_x = vec![LeftAction::terminal(x_cat)];
        let mut right_x = vec![RightAction::terminal(x_cat)];
        for x in 0..x_cat.n_objects() {
            left_x.push(LeftAction::representable(x_cat, x)?);
            right_x.push(RightAction::representable(x_cat, x)?);
        }
        let mut left_y = vec![LeftAction::terminal(y_cat)];
        let mut right_y = vec![RightAction::terminal(y_cat)];
        for y in 0..y_cat.n_objects() {
            left_y.push(LeftAction::representable(y_cat, y)?);
            right_y.push(RightAction::representable(y_cat, y)?);
        }
        let mut pro_x = vec![profunctor::hom_profunctor(x_cat, limits)?];
        if let (Some(a), Some(m)) = (left_x.get(1), right_x.get(1)) {
            pro_x.push(profunctor::outer_product(a, m, limits)?);
            pro_x.push(profunctor::dummy_left(a, limits)?);
        }
        let mut pro_y = vec![profunctor::hom_profunctor(y_cat, limits)?];
        if let (Some(a), Some(m)) = (left_y.get(1), right_y.get(1)) {
            pro_y.push(profunctor::outer_product(a, m, limits)?);
            pro_y.push(profunctor::dummy_right(m, limits)?);
        }
        let from_y = vec![FunctorMap::identity(y_cat), FunctorMap::bang(y_cat, limits)?];
        Ok(PredEnv { left_x, right_x, left_y, right_y, pro_x, pro_y, from_y })
    }
}

/// The canonical comparison `hom_X → f̈ hom_Y` (the arrow map, pointwise).
fn hom_comparison(
    f: &FunctorMap,
    limits: &Limits,
) -> Result<(EndoProfunctor, EndoProfunctor, NatTransform)> {
    let hom_x = profunctor::hom_profunctor(&f.dom, limits)?;
    let hom_y = profunctor::hom_profunctor(&f.cod, limits)?;
    let pulled = ddot_substitute(f, &hom_y, limits)?;
    let x_cat = &f.dom;
    let n = x_cat.n_objects();
    let comps: Vec<Vec<usize>> = (0..n * n)
        .map(|o| {
            let (x, y) = (o / n, o % n);
            hom_x
                .fiber(x, y)
                .labels()
                .iter()
                .map(|l| {
                    let u = x_cat.arrow_id(l).expect("hom labels are arrows");
                    let fu = f.arrow_map[u];
                    pulled
                        .fiber(x, y)
                        .index_of(&f.cod.arrow(fu).id)
                        .expect("image arrow present in pulled hom")
                })
                .collect()
        })
        .collect();
    let t = NatTransform::new(hom_x.inner().diagram(), pulled.inner().diagram(), comps)?;
    Ok((hom_x, pulled, t))
}

/// Fully faithfulness with its characterization table.
pub fn is_fully_faithful(
    f: &FunctorMap,
    env: &PredEnv,
    limits: &Limits,
) -> Result<PredicateReport> {
    let (x_cat, y_cat) = (&f.dom, &f.cod);
    let mut checks = Vec::new();

    // 1. direct definition: every hom map is a bijection
    let direct = (0..x_cat.n_objects()).all(|x| {
        (0..x_cat.n_objects()).all(|y| {
            let (dom_hom, images) = f.hom_map(x, y);
            let cod_hom = y_cat.hom(f.obj_map[x], f.obj_map[y]);
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            dom_hom.len() == cod_hom.len() && sorted.len() == dom_hom.len()
        })
    });
    checks.push(Check { name: "hom-bijection", value: direct, exact: true });

    // 2. f̈ hom_Y ≅ hom_X via the canonical comparison
    let (hom_x, pulled, cmp) = hom_comparison(f, limits)?;
    let ddot_hom = cmp.is_pointwise_bijective(hom_x.inner().diagram(), pulled.inner().diagram());
    checks.push(Check { name: "ddot-hom", value: ddot_hom, exact: true });

    // 3. representable transfer: canonical ∃^ℓ_x I → f^ℓ ∃^ℓ_{fx} I iso
    let mut rep_form = true;
    for x in 0..x_cat.n_objects() {
        rep_form &= rep_unit_left_iso(f, x)?;
    }
    checks.push(Check { name: "rep-transfer", value: rep_form, exact: true });

    // 4/5. units of ∃ ⊣ f^* iso on the test actions (exact on representables)
    let mut unit_left = true;
    for a in &env.left_x {
        let (e, carrier) = exists_left_with(f, a, limits)?;
        let fe = substitute_left(f, &e)?;
        let comps: Vec<Vec<usize>> = (0..x_cat.n_objects())
            .map(|x| {
                (0..a.fiber(x).len())
                    .map(|el| carrier.class_of(f.obj_map[x], x, y_cat.identity(f.obj_map[x]), el))
                    .collect()
            })
            .collect();
        let unit = NatTransform::new(a.diagram(), fe.diagram(), comps)?;
        unit_left &= unit.is_pointwise_bijective(a.diagram(), fe.diagram());
    }
    checks.push(Check { name: "unit-left", value: unit_left, exact: true });

    let mut unit_right = true;
    for m in &env.right_x {
        let (e, carrier) = exists_right_with(f, m, limits)?;
        let fe = substitute_right(f, &e)?;
        let comps: Vec<Vec<usize>> = (0..x_cat.n_objects())
            .map(|x| {
                (0..m.fiber(x).len())
                    .map(|el| carrier.class_of(f.obj_map[x], x, y_cat.identity(f.obj_map[x]), el))
                    .collect()
            })
            .collect();
        let unit = NatTransform::new(m.diagram(), fe.diagram(), comps)?;
        unit_right &= unit.is_pointwise_bijective(m.diagram(), fe.diagram());
    }
    checks.push(Check { name: "unit-right", value: unit_right, exact: true });

    // 6. hom transfer `{A,B} ≅ {∃_f A, ∃_f B}` on env pairs (consequence)
    let mut hom_transfer = true;
    for a in env.left_x.iter().take(3) {
        for b in env.left_x.iter().take(3) {
            let lhs = hom_left(a, b, limits)?.len();
            let ea = exists_left(f, a, limits)?;
            let eb = exists_left(f, b, limits)?;
            let rhs = hom_left(&ea, &eb, limits)?.len();
            hom_transfer &= lhs == rhs;
        }
    }
    checks.push(Check { name: "hom-transfer", value: hom_transfer, exact: false });

    // 7/8. end/coend transfer on env profunctors (consequences)
    let mut end_transfer = true;
    let mut coend_transfer = true;
    for h in &env.pro_x {
        let fa = profunctor::ddot_forall(f, h, limits)?;
        end_transfer &= profunctor::end(h, limits)?.len() == profunctor::end(&fa, limits)?.len();
        let (ex, _) = ddot_exists(f, h, limits)?;
        coend_transfer &=
            profunctor::coend(h, limits)?.set.len() == profunctor::coend(&ex, limits)?.set.len();
    }
    checks.push(Check { name: "end-transfer", value: end_transfer, exact: false });
    checks.push(Check { name: "coend-transfer", value: coend_transfer, exact: false });

    Ok(PredicateReport::conclude("fully_faithful", checks))
}

/// canonical `∃^ℓ_x I → f^ℓ ∃^ℓ_{fx} I` (send `u : w → x` to `f(u)`) iso?
fn rep_unit_left_iso(f: &FunctorMap, x: usize) -> Result<bool> {
    let rep = LeftAction::representable(&f.dom, x)?;
    let rep_f = substitute_left(f, &LeftAction::representable(&f.cod, f.obj_map[x])?)?;
    let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
        .map(|w| {
            rep.fiber(w)
                .labels()
                .iter()
                .map(|l| {
                    let u = f.dom.arrow_id(l).expect("rep labels");
                    rep_f
                        .fiber(w)
                        .index_of(&f.cod.arrow(f.arrow_map[u]).id)
                        .expect("image present")
                })
                .collect()
        })
        .collect();
    let t = NatTransform::new(rep.diagram(), rep_f.diagram(), comps)?;
    Ok(t.is_pointwise_bijective(rep.diagram(), rep_f.diagram()))
}

/// Absolute density, decided by the counit form and cross-checked against
/// the six classical characterizations.
pub fn is_absolutely_dense(
    f: &FunctorMap,
    env: &PredEnv,
    limits: &Limits,
) -> Result<PredicateReport> {
    let y_cat = &f.cod;
    let mut checks = Vec::new();

    // counit ∃^ℓ_f f^ℓ A → A iso: exact on the representables (every A is a
    // colimit of them and both sides preserve colimits), consequence on the
    // rest of the env
    let mut counit_reps = true;
    let mut counit_rest = true;
    for (i, b) in env.left_y.iter().enumerate() {
        let (e, t) = counit_exists_left(f, b, limits)?;
        let ok = t.is_pointwise_bijective(e.diagram(), b.diagram());
        if i >= 1 && i <= y_cat.n_objects() {
            counit_reps &= ok;
        } else {
            counit_rest &= ok;
        }
    }
    for (i, m) in env.right_y.iter().enumerate() {
        let (e, t) = counit_exists_right(f, m, limits)?;
        let ok = t.is_pointwise_bijective(e.diagram(), m.diagram());
        if i >= 1 && i <= y_cat.n_objects() {
            counit_reps &= ok;
        } else {
            counit_rest &= ok;
        }
    }
    checks.push(Check { name: "counit-iso", value: counit_reps, exact: true });
    checks.push(Check { name: "counit-rest", value: counit_rest, exact: false });

    // (1) ∃̈_f hom_X ≅ hom_Y via the canonical transpose of hom_X → f̈ hom_Y
    let ad1 = ddot_hom_transfer_iso(f, limits)?;
    checks.push(Check { name: "ddot-exists-hom", value: ad1, exact: true });

    // (3) the op-dual canonical comparison (drives coend transfer)
    let fop = f.opposite();
    let ad3 = ddot_hom_transfer_iso(&fop, limits)?;
    checks.push(Check { name: "ddot-exists-hom-op", value: ad3, exact: true });

    // (5) ◇_Y f ≅ hom_Y via the ◇ image of the over-map f → id_Y
    let ad5 = diamond_reflects_to_hom(f, limits)?;
    checks.push(Check { name: "diamond-of-f", value: ad5, exact: true });

    // (4) ◇_Z g ≅ ◇_Z (gf) for the test functors g (contains id_Y, so exact)
    let mut ad4 = true;
    for g in &env.from_y {
        let gf = g.after(f)?;
        let p_gf = crate::catover::OverCat::new(gf.clone())?;
        let p_g = crate::catover::OverCat::new(g.clone())?;
        let (d_gf, c_gf) = profunctor::diamond(&p_gf, limits)?;
        let (d_g, c_g) = profunctor::diamond(&p_g, limits)?;
        let cmp = diamond_overmap_comparison(f, &d_gf, &c_gf, &d_g, &c_g)?;
        ad4 &= cmp.is_pointwise_bijective(d_gf.inner().diagram(), d_g.inner().diagram());
    }
    checks.push(Check { name: "diamond-compose", value: ad4, exact: true });

    // (2)/(6) end and coend invariance on the env profunctors (consequences)
    let mut end_inv = true;
    let mut coend_inv = true;
    for h in &env.pro_y {
        let pulled = ddot_substitute(f, h, limits)?;
        end_inv &= profunctor::end(h, limits)?.len() == profunctor::end(&pulled, limits)?.len();
        coend_inv &= profunctor::coend(h, limits)?.set.len()
            == profunctor::coend(&pulled, limits)?.set.len();
    }
    checks.push(Check { name: "end-invariance", value: end_inv, exact: false });
    checks.push(Check { name: "coend-invariance", value: coend_inv, exact: false });

    // (6) for functors g out of Y^op×Y, g and g(f^op×f) share their (co)end;
    // evaluated for g = id with the hom weight (consequence)
    let gend = {
        let sq_y = profunctor::square_of(y_cat, limits)?;
        let idg = FunctorMap::identity(&sq_y);
        let hom_y = profunctor::hom_profunctor(y_cat, limits)?;
        let lim_y = weighted_limit(hom_y.inner(), &idg, limits)?;
        let sq_f = f.square(limits)?;
        let hom_x = profunctor::hom_profunctor(&f.dom, limits)?;
        let lim_x = weighted_limit(hom_x.inner(), &sq_f, limits)?;
        partials_agree(&sq_y, &lim_y, &lim_x)
    };
    checks.push(Check { name: "gend-invariance", value: gend, exact: false });

    Ok(PredicateReport::conclude("absolutely_dense", checks))
}

/// Transpose of the canonical `hom_X → f̈ hom_Y` along `∃̈_f ⊣ f̈`; iso iff
/// `∃̈_f hom_X ≅ hom_Y` canonically.
fn ddot_hom_transfer_iso(f: &FunctorMap, limits: &Limits) -> Result<bool> {
    let (hom_x, _pulled, cmp) = hom_comparison(f, limits)?;
    let hom_y = profunctor::hom_profunctor(&f.cod, limits)?;
    let sq_f = f.square(limits)?;
    let (ex, carrier) = exists_right_with(&sq_f, hom_x.inner(), limits)?;
    let transposed =
        transpose_to_exists_right(&sq_f, hom_x.inner(), hom_y.inner(), &ex, &carrier, &cmp)?;
    Ok(transposed.is_pointwise_bijective(ex.diagram(), hom_y.inner().diagram()))
}

/// `◇_Y f → ◇_Y id = hom_Y` induced by `f` as an over-map; an isomorphism
/// exactly for absolutely dense `f`.
fn diamond_reflects_to_hom(f: &FunctorMap, limits: &Limits) -> Result<bool> {
    let y_cat = &f.cod;
    let p_f = crate::catover::OverCat::new(f.clone())?;
    let p_id = crate::catover::OverCat::identity(y_cat);
    let (d_f, c_f) = profunctor::diamond(&p_f, limits)?;
    let (d_id, c_id) = profunctor::diamond(&p_id, limits)?;
    let cmp = diamond_overmap_comparison(f, &d_f, &c_f, &d_id, &c_id)?;
    Ok(cmp.is_pointwise_bijective(d_f.inner().diagram(), d_id.inner().diagram()))
}

/// The `◇_Z` image of the over-map `f : (X, gf) → (Y, g)` in `Cat/Z`:
/// carrier entry `((a,b), (u,v), h ∈ X(a,b))` goes to
/// `((fa,fb), (u,v), f(h))`.
fn diamond_overmap_comparison(
    f: &FunctorMap,
    d_src: &EndoProfunctor,
    c_src: &crate::action::KanCarrier,
    d_dst: &EndoProfunctor,
    c_dst: &crate::action::KanCarrier,
) -> Result<NatTransform> {
    let x_cat = &f.dom;
    let y_cat = &f.cod;
    let nx = x_cat.n_objects();
    let ny = y_cat.n_objects();
    let n_out = d_src.inner().base().n_objects();
    let mut comps = Vec::with_capacity(n_out);
    for o in 0..n_out {
        let mut comp = vec![usize::MAX; d_src.inner().fiber(o).len()];
        for (i, &(sq_obj, u, e)) in c_src.entries[o].iter().enumerate() {
            let c = c_src.class[o][i];
            let (a, b) = (sq_obj / nx, sq_obj % nx);
            let h = x_cat.hom(a, b)[e];
            let (fa, fb) = (f.obj_map[a], f.obj_map[b]);
            let fh = f.arrow_map[h];
            let e_dst =
                y_cat.hom(fa, fb).iter().position(|&w| w == fh).expect("image arrow in hom");
            comp[c] = c_dst.class_of(o, fa * ny + fb, u, e_dst);
        }
        comps.push(comp);
    }
    NatTransform::new(d_src.inner().diagram(), d_dst.inner().diagram(), comps)
}

/// Left density: the four characterizations.
pub fn is_left_dense(f: &FunctorMap, limits: &Limits) -> Result<PredicateReport> {
    let y_cat = &f.cod;
    let mut checks = Vec::new();

    // (a) hom transfer on representables: Y(x,y) ≅ Nat(f^ℓ y_x, f^ℓ y_y)
    // via the canonical map v ↦ f^ℓ(y_v)
    let mut hom_rep = true;
    'outer: for x in 0..y_cat.n_objects() {
        let wx = substitute_left(f, &LeftAction::representable(y_cat, x)?)?;
        for y in 0..y_cat.n_objects() {
            let wy = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
            let nat = hom_left(&wx, &wy, limits)?;
            if nat.len() != y_cat.hom(x, y).len() {
                hom_rep = false;
                break 'outer;
            }
            let mut images = Vec::new();
            for v in y_cat.hom(x, y) {
                let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                    .map(|w| {
                        wx.fiber(w)
                            .labels()
                            .iter()
                            .map(|l| {
                                let u = y_cat.arrow_id(l).expect("weight label");
                                let vu = y_cat.comp(v, u);
                                wy.fiber(w).index_of(&y_cat.arrow(vu).id).expect("closed")
                            })
                            .collect()
                    })
                    .collect();
                match nat.position_of(&comps) {
                    Some(i) if !images.contains(&i) => images.push(i),
                    _ => {
                        hom_rep = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(Check { name: "hom-transfer-reps", value: hom_rep, exact: true });

    // (b) unit ∃^ℓ_x I → ∀^ℓ_f f^ℓ ∃^ℓ_x I iso
    let mut unit = true;
    for x in 0..y_cat.n_objects() {
        let rep = LeftAction::representable(y_cat, x)?;
        let (fa, t) = unit_forall_left(f, &rep, limits)?;
        unit &= t.is_pointwise_bijective(rep.diagram(), fa.diagram());
    }
    checks.push(Check { name: "unit-forall-reps", value: unit, exact: true });

    // (c) ∃_f f ≅ id_Y via kan_left
    let kan = match kan_left(f, f, limits)? {
        PartialFunctor::Exists { functor } => {
            find_functor_iso(&functor, &FunctorMap::identity(y_cat), limits)?.is_some()
        }
        PartialFunctor::Absent { .. } => false,
    };
    checks.push(Check { name: "kan-identity", value: kan, exact: true });

    // (d) density colimits f^ℓ ∃^ℓ_x I ∗ f ≅ x
    let mut density = true;
    for x in 0..y_cat.n_objects() {
        let w = substitute_left(f, &LeftAction::representable(y_cat, x)?)?;
        let col = weighted_colimit(&w, f, limits)?;
        density &= match col.object() {
            Some(c) => y_cat.objects_isomorphic(c, x),
            None => false,
        };
    }
    checks.push(Check { name: "density-colimit", value: density, exact: true });

    Ok(PredicateReport::conclude("left_dense", checks))
}

/// Right density (the symmetric conditions).
pub fn is_right_dense(f: &FunctorMap, limits: &Limits) -> Result<PredicateReport> {
    let y_cat = &f.cod;
    let mut checks = Vec::new();

    let mut hom_rep = true;
    'outer: for x in 0..y_cat.n_objects() {
        let wx = substitute_right(f, &RightAction::representable(y_cat, x)?)?;
        for y in 0..y_cat.n_objects() {
            let wy = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
            let nat = hom_right(&wy, &wx, limits)?;
            if nat.len() != y_cat.hom(x, y).len() {
                hom_rep = false;
                break 'outer;
            }
            let mut images = Vec::new();
            for v in y_cat.hom(x, y) {
                let comps: Vec<Vec<usize>> = (0..f.dom.n_objects())
                    .map(|w| {
                        wy.fiber(w)
                            .labels()
                            .iter()
                            .map(|l| {
                                let u = y_cat.arrow_id(l).expect("weight label");
                                let uv = y_cat.comp(u, v);
                                wx.fiber(w).index_of(&y_cat.arrow(uv).id).expect("closed")
                            })
                            .collect()
                    })
                    .collect();
                match nat.position_of(&comps) {
                    Some(i) if !images.contains(&i) => images.push(i),
                    _ => {
                        hom_rep = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(Check { name: "hom-transfer-reps", value: hom_rep, exact: true });

    let mut unit = true;
    for x in 0..y_cat.n_objects() {
        let rep = RightAction::representable(y_cat, x)?;
        let (fa, t) = unit_forall_right(f, &rep, limits)?;
        unit &= t.is_pointwise_bijective(rep.diagram(), fa.diagram());
    }
    checks.push(Check { name: "unit-forall-reps", value: unit, exact: true });

    let kan = match kan_right(f, f, limits)? {
        PartialFunctor::Exists { functor } => {
            find_functor_iso(&functor, &FunctorMap::identity(y_cat), limits)?.is_some()
        }
        PartialFunctor::Absent { .. } => false,
    };
    checks.push(Check { name: "kan-identity", value: kan, exact: true });

    let mut density = true;
    for x in 0..y_cat.n_objects() {
        let w = substitute_right(f, &RightAction::representable(y_cat, x)?)?;
        let lim = weighted_limit(&w, f, limits)?;
        density &= match lim.object() {
            Some(c) => y_cat.objects_isomorphic(c, x),
            None => false,
        };
    }
    checks.push(Check { name: "density-limit", value: density, exact: true });

    Ok(PredicateReport::conclude("right_dense", checks))
}

/// Finality: `∃^ℓ_f I ≅ I`, comma connectedness, (co)limit transfer.
pub fn is_final(f: &FunctorMap, env: &PredEnv, limits: &Limits) -> Result<PredicateReport> {
    let y_cat = &f.cod;
    let mut checks = Vec::new();

    let e = exists_left(f, &LeftAction::terminal(&f.dom), limits)?;
    let fin1 = (0..y_cat.n_objects()).all(|y| e.fiber(y).len() == 1);
    checks.push(Check { name: "exists-terminal", value: fin1, exact: true });

    // comma connectedness: ∃^r_X f^r ∃^r_y I ≅ I
    let bang = FunctorMap::bang(&f.dom, limits)?;
    let mut fin2 = true;
    for y in 0..y_cat.n_objects() {
        let m = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        let c = exists_right(&bang, &m, limits)?;
        fin2 &= c.fiber(0).len() == 1;
    }
    checks.push(Check { name: "comma-connected", value: fin2, exact: true });

    // colimit transfer ∃^r_X f^r M ≅ ∃^r_Y M (exact: the env contains all
    // corepresentables, for which this is comma connectedness)
    let bang_y = FunctorMap::bang(y_cat, limits)?;
    let mut fin3 = true;
    for m in &env.right_y {
        let lhs = exists_right(&bang, &substitute_right(f, m)?, limits)?;
        let rhs = exists_right(&bang_y, m, limits)?;
        fin3 &= lhs.fiber(0).len() == rhs.fiber(0).len();
    }
    checks.push(Check { name: "colimit-transfer", value: fin3, exact: true });

    // limit transfer ∀^ℓ_X f^ℓ A ≅ ∀^ℓ_Y A (consequence)
    let mut fin4 = true;
    for a in &env.left_y {
        let lhs = forall_left(&bang, &substitute_left(f, a)?, limits)?;
        let rhs = forall_left(&bang_y, a, limits)?;
        fin4 &= lhs.fiber(0).len() == rhs.fiber(0).len();
    }
    checks.push(Check { name: "limit-transfer", value: fin4, exact: false });

    // conical colimit transfer along the test functors (consequence)
    let mut fin5 = true;
    for g in &env.from_y {
        let gf = g.after(f)?;
        let lhs = conical_colimit(&gf, limits)?;
        let rhs = conical_colimit(g, limits)?;
        fin5 &= partials_agree(&g.cod, &lhs, &rhs);
    }
    checks.push(Check { name: "conical-transfer", value: fin5, exact: false });

    Ok(PredicateReport::conclude("final", checks))
}

/// Initiality: the dual conditions.
pub fn is_initial(f: &FunctorMap, env: &PredEnv, limits: &Limits) -> Result<PredicateReport> {
    let y_cat = &f.cod;
    let mut checks = Vec::new();

    let e = exists_right(f, &RightAction::terminal(&f.dom), limits)?;
    let in1 = (0..y_cat.n_objects()).all(|y| e.fiber(y).len() == 1);
    checks.push(Check { name: "exists-terminal", value: in1, exact: true });

    let bang = FunctorMap::bang(&f.dom, limits)?;
    let mut in2 = true;
    for y in 0..y_cat.n_objects() {
        let a = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        let c = exists_left(&bang, &a, limits)?;
        in2 &= c.fiber(0).len() == 1;
    }
    checks.push(Check { name: "comma-connected", value: in2, exact: true });

    let bang_y = FunctorMap::bang(y_cat, limits)?;
    let mut in3 = true;
    for a in &env.left_y {
        let lhs = exists_left(&bang, &substitute_left(f, a)?, limits)?;
        let rhs = exists_left(&bang_y, a, limits)?;
        in3 &= lhs.fiber(0).len() == rhs.fiber(0).len();
    }
    checks.push(Check { name: "colimit-transfer", value: in3, exact: true });

    let mut in4 = true;
    for m in &env.right_y {
        let lhs = forall_right(&bang, &substitute_right(f, m)?, limits)?;
        let rhs = forall_right(&bang_y, m, limits)?;
        in4 &= lhs.fiber(0).len() == rhs.fiber(0).len();
    }
    checks.push(Check { name: "limit-transfer", value: in4, exact: false });

    let mut in5 = true;
    for g in &env.from_y {
        let gf = g.after(f)?;
        let lhs = conical_limit(&gf, limits)?;
        let rhs = conical_limit(g, limits)?;
        in5 &= partials_agree(&g.cod, &lhs, &rhs);
    }
    checks.push(Check { name: "conical-transfer", value: in5, exact: false });

    Ok(PredicateReport::conclude("initial", checks))
}

/// Left adjunctibility: each `f^ℓ ∃^ℓ_y I` is representable. Returns the
/// reflection table.
pub fn is_left_adjunctible(f: &FunctorMap, limits: &Limits) -> Result<(bool, Vec<Option<usize>>)> {
    let y_cat = &f.cod;
    let x_cat = &f.dom;
    let mut table = Vec::with_capacity(y_cat.n_objects());
    for y in 0..y_cat.n_objects() {
        let w = substitute_left(f, &LeftAction::representable(y_cat, y)?)?;
        let mut found = None;
        for x in 0..x_cat.n_objects() {
            let rep = LeftAction::representable(x_cat, x)?;
            if iso_left(&w, &rep, limits)?.is_some() {
                found = Some(x);
                break;
            }
        }
        table.push(found);
    }
    Ok((table.iter().all(|t| t.is_some()), table))
}

/// Right adjunctibility: each `f^r ∃^r_y I` is corepresentable.
pub fn is_right_adjunctible(f: &FunctorMap, limits: &Limits) -> Result<(bool, Vec<Option<usize>>)> {
    let y_cat = &f.cod;
    let x_cat = &f.dom;
    let mut table = Vec::with_capacity(y_cat.n_objects());
    for y in 0..y_cat.n_objects() {
        let w = substitute_right(f, &RightAction::representable(y_cat, y)?)?;
        let mut found = None;
        for x in 0..x_cat.n_objects() {
            let rep = RightAction::representable(x_cat, x)?;
            if iso_right(&w, &rep, limits)?.is_some() {
                found = Some(x);
                break;
            }
        }
        table.push(found);
    }
    Ok((table.iter().all(|t| t.is_some()), table))
}

/// Is `g ⊣ f`? Decided by universal arrows: for each `y` an arrow
/// `η_y : y → f(g y)` through which every `y → f x` factors uniquely, with
/// `η` natural. The characterization `∃^r_g M ≅ f^r M` is then verified on
/// the representables as a consistency check.
pub fn check_adjoint_pair(g: &FunctorMap, f: &FunctorMap, limits: &Limits) -> Result<bool> {
    if !base_eq(&g.dom, &f.cod) || !base_eq(&g.cod, &f.dom) {
        return Err(Error::BaseMismatch("check_adjoint_pair: g and f must be opposed".into()));
    }
    let y_cat = &f.cod;
    let x_cat = &f.dom;
    let mut units = Vec::with_capacity(y_cat.n_objects());
    for y in 0..y_cat.n_objects() {
        let gy = g.obj_map[y];
        let mut unit = None;
        'cand: for eta in y_cat.hom(y, f.obj_map[gy]) {
            for x in 0..x_cat.n_objects() {
                for u in y_cat.hom(y, f.obj_map[x]) {
                    let count = x_cat
                        .hom(gy, x)
                        .into_iter()
                        .filter(|&v| y_cat.comp(f.arrow_map[v], eta) == u)
                        .count();
                    if count != 1 {
                        continue 'cand;
                    }
                }
            }
            unit = Some(eta);
            break;
        }
        match unit {
            Some(eta) => units.push(eta),
            None => return Ok(false),
        }
    }
    // naturality of the unit family
    for w in 0..y_cat.n_arrows() {
        let arr = y_cat.arrow(w);
        let lhs = y_cat.comp(units[arr.tgt], w);
        let rhs = y_cat.comp(f.arrow_map[g.arrow_map[w]], units[arr.src]);
        if lhs != rhs {
            return Ok(false);
        }
    }
    // consistency: ∃^r_g ∃^r_y I ≅ f^r ∃^r_y I on all representables
    for y in 0..y_cat.n_objects() {
        let rep = RightAction::representable(y_cat, y)?;
        let lhs = exists_right(g, &rep, limits)?;
        let rhs = substitute_right(f, &rep)?;
        if iso_right(&lhs, &rhs, limits)?.is_none() {
            return Err(Error::EngineBug(
                "adjoint pair accepted but ∃_g and f^* disagree on a representable".into(),
            ));
        }
    }
    Ok(true)
}

/// `∀_X f` / `∃_X f` along the terminal functor match the conical
/// (co)limits.
pub fn kan_along_bang_matches_conical(f: &FunctorMap, limits: &Limits) -> Result<bool> {
    let bang = FunctorMap::bang(&f.dom, limits)?;
    let lim = conical_limit(f, limits)?;
    let kan = kan_right(&bang, f, limits)?;
    let ok_lim = match (&lim, &kan) {
        (PartialObject::Absent { .. }, PartialFunctor::Absent { .. }) => true,
        (PartialObject::Exists { object, .. }, PartialFunctor::Exists { functor }) => {
            f.cod.objects_isomorphic(*object, functor.obj_map[0])
        }
        _ => false,
    };
    let col = conical_colimit(f, limits)?;
    let kan2 = kan_left(&bang, f, limits)?;
    let ok_col = match (&col, &kan2) {
        (PartialObject::Absent { .. }, PartialFunctor::Absent { .. }) => true,
        (PartialObject::Exists { object, .. }, PartialFunctor::Exists { functor }) => {
            f.cod.objects_isomorphic(*object, functor.obj_map[0])
        }
        _ => false,
    };
    Ok(ok_lim && ok_col)
}

/// kan3 oracle: the right Kan value at `y` as the conical limit over the
/// comma `(y ↓ f)`, through an independent comma construction.
pub fn kan_right_comma_oracle(
    f: &FunctorMap,
    g: &FunctorMap,
    y: usize,
    limits: &Limits,
) -> Result<PartialObject> {
    let comma = crate::fincat::comma::comma_from(y, f, limits)?;
    let diag = g.after(&comma.proj)?;
    conical_limit(&diag, limits)
}

pub fn kan_left_comma_oracle(
    f: &FunctorMap,
    g: &FunctorMap,
    y: usize,
    limits: &Limits,
) -> Result<PartialObject> {
    let comma = crate::fincat::comma::comma_to(f, y, limits)?;
    let diag = g.after(&comma.proj)?;
    conical_colimit(&diag, limits)
}

/// Natural transformations between parallel functors vs the end formula
/// `Nat(f,g) = ∫_x Z(fx, gx)`.
pub fn functor_nat_end_count(
    f: &FunctorMap,
    g: &FunctorMap,
    limits: &Limits,
) -> Result<(usize, usize)> {
    let direct = enumerate_functor_nats(f, g, false, limits, None)?.len();
    let z_cat = &f.cod;
    let x_cat = &f.dom;
    let h = profunctor::build_endo(
        x_cat,
        limits,
        |x, y| {
            crate::fincat::FinSet::new(
                z_cat
                    .hom(f.obj_map[x], g.obj_map[y])
                    .iter()
                    .map(|&w| z_cat.arrow(w).id.clone())
                    .collect(),
            )
            .expect("arrow ids distinct")
        },
        |u, y| {
            let arr = x_cat.arrow(u);
            z_cat
                .hom(f.obj_map[arr.tgt], g.obj_map[y])
                .iter()
                .map(|&w| {
                    let wu = z_cat.comp(w, f.arrow_map[u]);
                    z_cat
                        .hom(f.obj_map[arr.src], g.obj_map[y])
                        .iter()
                        .position(|&z| z == wu)
                        .expect("closed")
                })
                .collect()
        },
        |x, v| {
            let arr = x_cat.arrow(v);
            z_cat
                .hom(f.obj_map[x], g.obj_map[arr.src])
                .iter()
                .map(|&w| {
                    let vw = z_cat.comp(g.arrow_map[v], w);
                    z_cat
                        .hom(f.obj_map[x], g.obj_map[arr.tgt])
                        .iter()
                        .position(|&z| z == vw)
                        .expect("closed")
                })
                .collect()
        },
    )?;
    let end = profunctor::end(&h, limits)?.len();
    Ok((direct, end))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::search::enumerate_functors;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    fn skip_functor(two: &Cat, c3: &Cat) -> FunctorMap {
        enumerate_functors(two, c3, &limits(), None)
            .unwrap()
            .into_iter()
            .find(|f| f.obj_map == vec![0, 2])
            .unwrap()
    }

    #[test]
    fn representable_weight_limit_is_the_object() {
        // {∃^r_x I, f} = f x
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = skip_functor(&two, &c3);
        for x in 0..2 {
            let w = RightAction::representable(&two, x).unwrap();
            let lim = weighted_limit(&w, &f, &l).unwrap();
            assert_eq!(lim.object(), Some(f.obj_map[x]));
        }
    }

    #[test]
    fn conical_limits_of_identity_chain() {
        let l = limits();
        let c3 = std_cats::chain(3, &l).unwrap();
        let id = FunctorMap::identity(&c3);
        assert_eq!(conical_limit(&id, &l).unwrap().object(), Some(0));
        assert_eq!(conical_colimit(&id, &l).unwrap().object(), Some(2));
    }

    #[test]
    fn limit_of_a_terminal_diagram_is_the_picked_object() {
        let l = limits();
        let c3 = std_cats::chain(3, &l).unwrap();
        for x in 0..3 {
            let pt = FunctorMap::point(&c3, x, &l).unwrap();
            assert_eq!(conical_limit(&pt, &l).unwrap().object(), Some(x));
            assert_eq!(conical_colimit(&pt, &l).unwrap().object(), Some(x));
        }
    }

    #[test]
    fn parallel_pair_identity_has_no_conical_limit() {
        let l = limits();
        let pp = std_cats::parallel_pair(&l).unwrap();
        let id = FunctorMap::identity(&pp);
        assert!(!conical_limit(&id, &l).unwrap().exists());
        assert!(!conical_colimit(&id, &l).unwrap().exists());
    }

    #[test]
    fn kan_along_identity_is_identity() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = skip_functor(&two, &c3);
        let id2 = FunctorMap::identity(&two);
        let ran = kan_right(&id2, &f, &l).unwrap();
        assert!(find_functor_iso(ran.functor().unwrap(), &f, &l).unwrap().is_some());
        let lan = kan_left(&id2, &f, &l).unwrap();
        assert!(find_functor_iso(lan.functor().unwrap(), &f, &l).unwrap().is_some());
    }

    #[test]
    fn kan_of_fully_faithful_restricts_to_g() {
        // (∃_f g) f ≅ g for fully faithful f
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = skip_functor(&two, &c3);
        let g = FunctorMap::identity(&two);
        if let PartialFunctor::Exists { functor } = kan_left(&f, &g, &l).unwrap() {
            let restricted = functor.after(&f).unwrap();
            assert!(find_functor_iso(&restricted, &g, &l).unwrap().is_some());
        } else {
            panic!("kan_left along a full inclusion into a chain exists");
        }
    }

    #[test]
    fn fully_faithful_identity_and_collapse() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let id = FunctorMap::identity(&two);
        let env = PredEnv::standard(&id, &l).unwrap();
        let rep = is_fully_faithful(&id, &env, &l).unwrap();
        assert!(rep.holds);
        assert!(rep.disagreement.is_none(), "{:?}", rep.disagreement);

        let bang = FunctorMap::bang(&two, &l).unwrap();
        let env2 = PredEnv::standard(&bang, &l).unwrap();
        let rep2 = is_fully_faithful(&bang, &env2, &l).unwrap();
        assert!(!rep2.holds, "2 → 1 is not fully faithful");
        assert!(rep2.disagreement.is_none(), "{:?}", rep2.disagreement);
    }

    #[test]
    fn absolutely_dense_examples() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let id = FunctorMap::identity(&two);
        let env = PredEnv::standard(&id, &l).unwrap();
        let rid = is_absolutely_dense(&id, &env, &l).unwrap();
        assert!(rid.holds, "{rid:?}");
        assert!(rid.disagreement.is_none());

        // the point of the walking isomorphism is absolutely dense
        let iso = std_cats::walking_iso(&l).unwrap();
        let one = std_cats::terminal(&l).unwrap();
        let inc =
            FunctorMap::new("i", one.clone(), iso.clone(), vec![0], vec![iso.identity(0)]).unwrap();
        let env2 = PredEnv::standard(&inc, &l).unwrap();
        let rep = is_absolutely_dense(&inc, &env2, &l).unwrap();
        assert!(rep.holds, "{rep:?}");
        assert!(rep.disagreement.is_none(), "{:?}", rep.disagreement);

        // the inclusion of `a` into the walking arrow is not
        let two2 = std_cats::walking_arrow(&l).unwrap();
        let inc2 = FunctorMap::new("a", one, two2.clone(), vec![0], vec![two2.identity(0)]).unwrap();
        let env3 = PredEnv::standard(&inc2, &l).unwrap();
        let rep2 = is_absolutely_dense(&inc2, &env3, &l).unwrap();
        assert!(!rep2.holds);
        assert!(rep2.disagreement.is_none(), "{:?}", rep2.disagreement);
    }

    #[test]
    fn final_and_initial_inclusions_of_walking_arrow() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let one = std_cats::terminal(&l).unwrap();
        let incl_b =
            FunctorMap::new("b", one.clone(), two.clone(), vec![1], vec![two.identity(1)]).unwrap();
        let envb = PredEnv::standard(&incl_b, &l).unwrap();
        let repb = is_final(&incl_b, &envb, &l).unwrap();
        assert!(repb.holds, "{repb:?}");
        assert!(repb.disagreement.is_none(), "{:?}", repb.disagreement);
        let repb_init = is_initial(&incl_b, &envb, &l).unwrap();
        assert!(!repb_init.holds);
        assert!(repb_init.disagreement.is_none(), "{:?}", repb_init.disagreement);

        let incl_a = FunctorMap::new("a", one, two.clone(), vec![0], vec![two.identity(0)]).unwrap();
        let enva = PredEnv::standard(&incl_a, &l).unwrap();
        assert!(!is_final(&incl_a, &enva, &l).unwrap().holds);
        assert!(is_initial(&incl_a, &enva, &l).unwrap().holds);
    }

    #[test]
    fn adjunctible_examples() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let id = FunctorMap::identity(&two);
        let (ok, table) = is_left_adjunctible(&id, &l).unwrap();
        assert!(ok);
        assert_eq!(table, vec![Some(0), Some(1)]);

        let bang = FunctorMap::bang(&two, &l).unwrap();
        let (ok2, _) = is_left_adjunctible(&bang, &l).unwrap();
        let (ok3, _) = is_right_adjunctible(&bang, &l).unwrap();
        assert!(ok2 && ok3, "2 → 1 is both left and right adjunctible");

        let pp = std_cats::parallel_pair(&l).unwrap();
        let incl = FunctorMap::new(
            "a",
            std_cats::terminal(&l).unwrap(),
            pp.clone(),
            vec![0],
            vec![pp.identity(0)],
        )
        .unwrap();
        let (ok4, table4) = is_left_adjunctible(&incl, &l).unwrap();
        assert!(!ok4, "inclusion of a into the parallel pair: {table4:?}");
    }

    #[test]
    fn adjoint_pair_terminal_section() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let one = std_cats::terminal(&l).unwrap();
        let bang = FunctorMap::bang(&two, &l).unwrap();
        let sect_b =
            FunctorMap::new("b", one.clone(), two.clone(), vec![1], vec![two.identity(1)]).unwrap();
        assert!(check_adjoint_pair(&bang, &sect_b, &l).unwrap());
        let sect_a =
            FunctorMap::new("a", one, two.clone(), vec![0], vec![two.identity(0)]).unwrap();
        assert!(!check_adjoint_pair(&bang, &sect_a, &l).unwrap());
        assert!(!check_adjoint_pair(&sect_b, &bang, &l).unwrap());
    }

    #[test]
    fn kan_matches_comma_oracle() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = skip_functor(&two, &c3);
        let g = FunctorMap::identity(&two);
        let ran = kan_right(&f, &g, &l).unwrap();
        let functor = ran.functor().expect("ran exists here");
        for y in 0..c3.n_objects() {
            let oracle = kan_right_comma_oracle(&f, &g, y, &l).unwrap();
            assert_eq!(oracle.object().is_some(), true);
            assert!(two.objects_isomorphic(functor.obj_map[y], oracle.object().unwrap()));
        }
        let lan = kan_left(&f, &g, &l).unwrap();
        let functor = lan.functor().expect("lan exists here");
        for y in 0..c3.n_objects() {
            let oracle = kan_left_comma_oracle(&f, &g, y, &l).unwrap();
            assert!(two.objects_isomorphic(functor.obj_map[y], oracle.object().unwrap()));
        }
    }

    #[test]
    fn functor_nats_match_end_formula() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let fs = enumerate_functors(&two, &c3, &l, None).unwrap();
        for f in &fs {
            for g in &fs {
                let (direct, end) = functor_nat_end_count(f, g, &l).unwrap();
                assert_eq!(direct, end);
            }
        }
    }

    #[test]
    fn kan_along_bang_is_conical() {
        let l = limits();
        let two = std_cats::walking_arrow(&l).unwrap();
        let c3 = std_cats::chain(3, &l).unwrap();
        let f = skip_functor(&two, &c3);
        assert!(kan_along_bang_matches_conical(&f, &l).unwrap());
    }
}
