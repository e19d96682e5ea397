//! Fully tabulated finite categories, functors between them, finite sets, and
//! the standard constructions (opposite, product, slices, commas) everything
//! else is built from.
//!
//! A [`FinCat`] is validated exhaustively at construction: every composable
//! pair must have a table entry with matching endpoints, identities must be
//! neutral, and every composable triple must associate. Nothing in the crate
//! ever works with an unvalidated category.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::{Error, Limits, Result};

pub mod comma;
pub mod diagram;
pub mod search;
pub mod std_cats;

pub use diagram::{Diagram, NatComponents};

/// Shared handle to an immutable validated category.
pub type Cat = Arc<FinCat>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category: objects, arrows, identities and a total composition
/// table on composable pairs.
///
/// Object and arrow ids are strings; declaration order is kept and used only
/// to make enumeration deterministic, never for semantics.
#[derive(Debug)]
pub struct FinCat {
    pub name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `compose[(g, f)] = g∘f`, defined exactly when `tgt(f) == src(g)`.
    compose: HashMap<(usize, usize), usize>,
    obj_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    by_src: Vec<Vec<usize>>,
    by_tgt: Vec<Vec<usize>>,
    isos: OnceLock<Vec<bool>>,
}

impl PartialEq for FinCat {
    /// Structural equality on the semantic fields; the display name is
    /// ignored so `opposite(opposite(x)) == x` holds on the nose.
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCat {}

/// Shared-or-structural equality for bases.
pub fn base_eq(a: &Cat, b: &Cat) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FinCat {
    /// Build and validate a category from raw parts. `derived` selects the
    /// larger bounds used for internal constructions (products, categories of
    /// elements) as opposed to user input.
    pub fn from_parts(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        mut compose: HashMap<(usize, usize), usize>,
        limits: &Limits,
        derived: bool,
    ) -> Result<Cat> {
        let name = name.into();
        let (max_obj, max_arr) = if derived {
            (limits.derived_objects, limits.derived_arrows)
        } else {
            (limits.max_objects, limits.max_arrows)
        };
        if objects.len() > max_obj {
            return Err(Error::size(format!("objects of `{name}`"), objects.len(), max_obj));
        }
        if arrows.len() > max_arr {
            return Err(Error::size(format!("arrows of `{name}`"), arrows.len(), max_arr));
        }

        let mut obj_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(format!("object `{o}` in `{name}`")));
            }
        }
        let mut arrow_index = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if arrow_index.insert(a.id.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(format!("arrow `{}` in `{name}`", a.id)));
            }
            if a.src >= objects.len() || a.tgt >= objects.len() {
                return Err(Error::DanglingArrow {
                    category: name.clone(),
                    arrow: a.id.clone(),
                    detail: "endpoint out of range".into(),
                });
            }
        }

        if identities.len() != objects.len() {
            return Err(Error::IdentityViolation {
                category: name,
                at: "<table>".into(),
                detail: "identity table length mismatch".into(),
            });
        }
        for (o, &i) in identities.iter().enumerate() {
            let a = &arrows[i];
            if a.src != o || a.tgt != o {
                return Err(Error::IdentityViolation {
                    category: name,
                    at: objects[o].clone(),
                    detail: format!("identity arrow `{}` is not an endo-arrow of the object", a.id),
                });
            }
        }

        // Identity compositions are implicit; fill them in (and reject
        // attempts to redefine them differently).
        for (f, a) in arrows.iter().enumerate() {
            for (k, v) in [((identities[a.tgt], f), f), ((f, identities[a.src]), f)] {
                match compose.insert(k, v) {
                    Some(old) if old != v => {
                        return Err(Error::IdentityViolation {
                            category: name,
                            at: a.id.clone(),
                            detail: format!(
                                "identity composite redefined as `{}`",
                                arrows[old].id
                            ),
                        });
                    }
                    _ => {}
                }
            }
        }

        let mut by_src = vec![Vec::new(); objects.len()];
        let mut by_tgt = vec![Vec::new(); objects.len()];
        for (i, a) in arrows.iter().enumerate() {
            by_src[a.src].push(i);
            by_tgt[a.tgt].push(i);
        }

        let cat = FinCat {
            name,
            objects,
            arrows,
            identities,
            compose,
            obj_index,
            arrow_index,
            by_src,
            by_tgt,
            isos: OnceLock::new(),
        };
        cat.validate()?;
        Ok(Arc::new(cat))
    }

    /// Exhaustive check of the category axioms.
    fn validate(&self) -> Result<()> {
        let n = self.arrows.len();
        // Table totality and endpoint sanity.
        for g in 0..n {
            for &f in &self.by_tgt[self.arrows[g].src] {
                let h = *self.compose.get(&(g, f)).ok_or_else(|| Error::DanglingArrow {
                    category: self.name.clone(),
                    arrow: self.arrows[g].id.clone(),
                    detail: format!(
                        "missing composite with `{}` (composable pair has no table entry)",
                        self.arrows[f].id
                    ),
                })?;
                let (hf, hg, hh) = (&self.arrows[f], &self.arrows[g], &self.arrows[h]);
                if hh.src != hf.src || hh.tgt != hg.tgt {
                    return Err(Error::DanglingArrow {
                        category: self.name.clone(),
                        arrow: hh.id.clone(),
                        detail: format!(
                            "composite `{}` ∘ `{}` has endpoints {}→{}, expected {}→{}",
                            hg.id,
                            hf.id,
                            self.objects[hh.src],
                            self.objects[hh.tgt],
                            self.objects[hf.src],
                            self.objects[hg.tgt]
                        ),
                    });
                }
            }
        }
        for (&(g, f), &h) in &self.compose {
            if g >= n || f >= n || h >= n {
                return Err(Error::DanglingArrow {
                    category: self.name.clone(),
                    arrow: format!("#{g}∘#{f}"),
                    detail: "table entry out of range".into(),
                });
            }
            if self.arrows[f].tgt != self.arrows[g].src {
                return Err(Error::DanglingArrow {
                    category: self.name.clone(),
                    arrow: self.arrows[h].id.clone(),
                    detail: format!(
                        "table entry for non-composable pair (`{}`, `{}`)",
                        self.arrows[g].id, self.arrows[f].id
                    ),
                });
            }
        }
        // Identity neutrality.
        for (f, a) in self.arrows.iter().enumerate() {
            if self.compose[&(self.identities[a.tgt], f)] != f
                || self.compose[&(f, self.identities[a.src])] != f
            {
                return Err(Error::IdentityViolation {
                    category: self.name.clone(),
                    at: a.id.clone(),
                    detail: "identity is not neutral".into(),
                });
            }
        }
        // Associativity on every composable triple.
        for f in 0..n {
            let b = self.arrows[f].tgt;
            for &g in &self.by_src[b] {
                let gf = self.compose[&(g, f)];
                let c = self.arrows[g].tgt;
                for &h in &self.by_src[c] {
                    let hg = self.compose[&(h, g)];
                    if self.compose[&(h, gf)] != self.compose[&(hg, f)] {
                        return Err(Error::AssociativityViolation {
                            category: self.name.clone(),
                            f: self.arrows[f].id.clone(),
                            g: self.arrows[g].id.clone(),
                            h: self.arrows[h].id.clone(),
                            detail: format!(
                                "h∘(g∘f) = `{}` but (h∘g)∘f = `{}`",
                                self.arrows[self.compose[&(h, gf)]].id,
                                self.arrows[self.compose[&(hg, f)]].id
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_label(&self, i: usize) -> &str {
        &self.objects[i]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn is_identity(&self, arrow: usize) -> bool {
        self.identities[self.arrows[arrow].src] == arrow
    }

    pub fn object_id(&self, label: &str) -> Result<usize> {
        self.obj_index.get(label).copied().ok_or_else(|| Error::UnknownObject {
            category: self.name.clone(),
            object: label.into(),
        })
    }

    pub fn arrow_id(&self, label: &str) -> Result<usize> {
        self.arrow_index.get(label).copied().ok_or_else(|| Error::UnknownArrow {
            category: self.name.clone(),
            arrow: label.into(),
        })
    }

    /// `g∘f`. Panics on a non-composable pair; this is an internal invariant,
    /// every caller has already checked endpoints.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        debug_assert_eq!(self.arrows[f].tgt, self.arrows[g].src);
        self.compose[&(g, f)]
    }

    pub fn try_comp(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn arrows_from(&self, obj: usize) -> &[usize] {
        &self.by_src[obj]
    }

    pub fn arrows_into(&self, obj: usize) -> &[usize] {
        &self.by_tgt[obj]
    }

    /// All arrows `x → y`, in declaration order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.by_src[x].iter().copied().filter(|&a| self.arrows[a].tgt == y).collect()
    }

    /// Whether arrow `u` is invertible.
    pub fn is_iso(&self, u: usize) -> bool {
        self.iso_table()[u]
    }

    fn iso_table(&self) -> &[bool] {
        self.isos.get_or_init(|| {
            self.arrows
                .iter()
                .enumerate()
                .map(|(u, a)| {
                    self.hom(a.tgt, a.src).iter().any(|&v| {
                        self.comp(v, u) == self.identities[a.src]
                            && self.comp(u, v) == self.identities[a.tgt]
                    })
                })
                .collect()
        })
    }

    /// Whether two objects are isomorphic in the category.
    pub fn objects_isomorphic(&self, x: usize, y: usize) -> bool {
        x == y || self.hom(x, y).into_iter().any(|u| self.is_iso(u))
    }
}

/// Raw description of a category, as accepted by [`validate_category`].
#[derive(Debug, Clone, Default)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// `(id, source label, target label)`
    pub arrows: Vec<(String, String, String)>,
    /// `(g, f, h)` meaning `g∘f = h`, all by arrow id. Identity composites
    /// are implicit and may not be listed.
    pub compositions: Vec<(String, String, String)>,
}

impl RawCategory {
    pub fn new(name: impl Into<String>) -> Self {
        RawCategory { name: name.into(), ..Default::default() }
    }

    pub fn object(mut self, id: &str) -> Self {
        self.objects.push(id.into());
        self
    }

    pub fn arrow(mut self, id: &str, src: &str, tgt: &str) -> Self {
        self.arrows.push((id.into(), src.into(), tgt.into()));
        self
    }

    pub fn composite(mut self, g: &str, f: &str, h: &str) -> Self {
        self.compositions.push((g.into(), f.into(), h.into()));
        self
    }

    pub fn build(self, limits: &Limits) -> Result<Cat> {
        validate_category(self, limits)
    }
}

/// Validate a raw category description into a [`FinCat`].
///
/// Identity arrows are synthesized as `id_<object>`; listing an arrow with
/// such an id is rejected. Composites with identities are filled in
/// automatically.
pub fn validate_category(raw: RawCategory, limits: &Limits) -> Result<Cat> {
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut identities = Vec::new();
    let mut obj_of = HashMap::new();
    for o in &raw.objects {
        obj_of.insert(o.clone(), objects.len());
        objects.push(o.clone());
    }
    for (i, o) in raw.objects.iter().enumerate() {
        identities.push(arrows.len());
        arrows.push(Arrow { id: format!("id_{o}"), src: i, tgt: i });
    }
    let mut arrow_of: HashMap<String, usize> =
        arrows.iter().enumerate().map(|(i, a)| (a.id.clone(), i)).collect();
    for (id, s, t) in &raw.arrows {
        if arrow_of.contains_key(id) {
            return Err(Error::DuplicateLabel(format!("arrow `{id}` in `{}`", raw.name)));
        }
        let src = *obj_of.get(s).ok_or_else(|| Error::UnknownObject {
            category: raw.name.clone(),
            object: s.clone(),
        })?;
        let tgt = *obj_of.get(t).ok_or_else(|| Error::UnknownObject {
            category: raw.name.clone(),
            object: t.clone(),
        })?;
        arrow_of.insert(id.clone(), arrows.len());
        arrows.push(Arrow { id: id.clone(), src, tgt });
    }
    let mut compose = HashMap::new();
    for (g, f, h) in &raw.compositions {
        let look = |id: &String| {
            arrow_of.get(id).copied().ok_or_else(|| Error::UnknownArrow {
                category: raw.name.clone(),
                arrow: id.clone(),
            })
        };
        let (g, f, h) = (look(g)?, look(f)?, look(h)?);
        if compose.insert((g, f), h).is_some() {
            return Err(Error::DanglingArrow {
                category: raw.name.clone(),
                arrow: arrows[h].id.clone(),
                detail: "composite listed twice".into(),
            });
        }
    }
    FinCat::from_parts(raw.name, objects, arrows, identities, compose, limits, false)
}

/// The opposite category. Object and arrow ids, indices and identities are
/// preserved; sources and targets swap and the table transposes, so the
/// operation is an involution up to structural equality.
pub fn opposite(x: &Cat) -> Cat {
    let arrows = x
        .arrows
        .iter()
        .map(|a| Arrow { id: a.id.clone(), src: a.tgt, tgt: a.src })
        .collect::<Vec<_>>();
    let compose = x.compose.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
    let name = match x.name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", x.name),
    };
    // Rebuilding through from_parts revalidates; the axioms are self-dual so
    // this cannot fail on a validated input.
    FinCat::from_parts(
        name,
        x.objects.clone(),
        arrows,
        x.identities.clone(),
        compose,
        &Limits { derived_objects: usize::MAX, derived_arrows: usize::MAX, ..Default::default() },
        true,
    )
    .expect("opposite of a valid category is valid")
}

/// Product category. Objects and arrows are pairs, labeled `(a,b)`;
/// composition is componentwise.
pub fn product(x: &Cat, y: &Cat, limits: &Limits) -> Result<Cat> {
    let nx = x.n_objects();
    let ny = y.n_objects();
    let n_obj = nx.checked_mul(ny).unwrap_or(usize::MAX);
    let n_arr = x.n_arrows().checked_mul(y.n_arrows()).unwrap_or(usize::MAX);
    if n_obj > limits.derived_objects {
        return Err(Error::size("product objects", n_obj, limits.derived_objects));
    }
    if n_arr > limits.derived_arrows {
        return Err(Error::size("product arrows", n_arr, limits.derived_arrows));
    }
    let mut objects = Vec::with_capacity(n_obj);
    for i in 0..nx {
        for j in 0..ny {
            objects.push(format!("({},{})", x.object_label(i), y.object_label(j)));
        }
    }
    let obj = |i: usize, j: usize| i * ny + j;
    let may = y.n_arrows();
    let arr = |u: usize, v: usize| u * may + v;
    let mut arrows = Vec::with_capacity(n_arr);
    for u in x.arrows() {
        for v in y.arrows() {
            arrows.push(Arrow {
                id: format!("({},{})", u.id, v.id),
                src: obj(u.src, v.src),
                tgt: obj(u.tgt, v.tgt),
            });
        }
    }
    let identities = (0..nx)
        .flat_map(|i| (0..ny).map(move |j| (i, j)))
        .map(|(i, j)| arr(x.identity(i), y.identity(j)))
        .collect();
    let mut compose = HashMap::new();
    for u1 in 0..x.n_arrows() {
        for &u2 in x.arrows_from(x.arrow(u1).tgt) {
            let ux = x.comp(u2, u1);
            for v1 in 0..y.n_arrows() {
                for &v2 in y.arrows_from(y.arrow(v1).tgt) {
                    let vy = y.comp(v2, v1);
                    compose.insert((arr(u2, v2), arr(u1, v1)), arr(ux, vy));
                }
            }
        }
    }
    FinCat::from_parts(
        format!("{}×{}", x.name, y.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )
}

/// A functor between finite categories, validated exhaustively.
#[derive(Debug, Clone)]
pub struct FunctorMap {
    pub name: String,
    pub dom: Cat,
    pub cod: Cat,
    pub obj_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl PartialEq for FunctorMap {
    fn eq(&self, other: &Self) -> bool {
        base_eq(&self.dom, &other.dom)
            && base_eq(&self.cod, &other.cod)
            && self.obj_map == other.obj_map
            && self.arrow_map == other.arrow_map
    }
}

impl FunctorMap {
    pub fn new(
        name: impl Into<String>,
        dom: Cat,
        cod: Cat,
        obj_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<FunctorMap> {
        let f = FunctorMap { name: name.into(), dom, cod, obj_map, arrow_map };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let err = |detail: String| Error::InvalidFunctor { functor: self.name.clone(), detail };
        if self.obj_map.len() != self.dom.n_objects() || self.arrow_map.len() != self.dom.n_arrows()
        {
            return Err(err("object or arrow map has the wrong length".into()));
        }
        for &o in &self.obj_map {
            if o >= self.cod.n_objects() {
                return Err(err(format!("object image #{o} out of range")));
            }
        }
        for (u, &v) in self.arrow_map.iter().enumerate() {
            if v >= self.cod.n_arrows() {
                return Err(err(format!("arrow image #{v} out of range")));
            }
            let a = self.dom.arrow(u);
            let b = self.cod.arrow(v);
            if b.src != self.obj_map[a.src] || b.tgt != self.obj_map[a.tgt] {
                return Err(err(format!("arrow `{}` image `{}` has wrong endpoints", a.id, b.id)));
            }
        }
        for o in 0..self.dom.n_objects() {
            if self.arrow_map[self.dom.identity(o)] != self.cod.identity(self.obj_map[o]) {
                return Err(err(format!(
                    "identity of `{}` not preserved",
                    self.dom.object_label(o)
                )));
            }
        }
        for f in 0..self.dom.n_arrows() {
            for &g in self.dom.arrows_from(self.dom.arrow(f).tgt) {
                let gf = self.dom.comp(g, f);
                if self.arrow_map[gf] != self.cod.comp(self.arrow_map[g], self.arrow_map[f]) {
                    return Err(err(format!(
                        "composite `{}`∘`{}` not preserved",
                        self.dom.arrow(g).id,
                        self.dom.arrow(f).id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: &Cat) -> FunctorMap {
        FunctorMap {
            name: format!("id_{}", x.name),
            dom: Arc::clone(x),
            cod: Arc::clone(x),
            obj_map: (0..x.n_objects()).collect(),
            arrow_map: (0..x.n_arrows()).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FunctorMap) -> Result<FunctorMap> {
        if !base_eq(&first.cod, &self.dom) {
            return Err(Error::BaseMismatch(format!(
                "cannot compose `{}` after `{}`",
                self.name, first.name
            )));
        }
        Ok(FunctorMap {
            name: format!("{}∘{}", self.name, first.name),
            dom: Arc::clone(&first.dom),
            cod: Arc::clone(&self.cod),
            obj_map: first.obj_map.iter().map(|&o| self.obj_map[o]).collect(),
            arrow_map: first.arrow_map.iter().map(|&a| self.arrow_map[a]).collect(),
        })
    }

    /// The same functor between the opposite categories.
    pub fn opposite(&self) -> FunctorMap {
        FunctorMap {
            name: format!("{}^op", self.name),
            dom: opposite(&self.dom),
            cod: opposite(&self.cod),
            obj_map: self.obj_map.clone(),
            arrow_map: self.arrow_map.clone(),
        }
    }

    pub fn apply_obj(&self, o: usize) -> usize {
        self.obj_map[o]
    }

    pub fn apply_arrow(&self, a: usize) -> usize {
        self.arrow_map[a]
    }

    /// The functor `1 → X` picking an object.
    pub fn point(x: &Cat, obj: usize, limits: &Limits) -> Result<FunctorMap> {
        let one = std_cats::terminal(limits)?;
        FunctorMap::new(
            format!("pt_{}", x.object_label(obj)),
            one,
            Arc::clone(x),
            vec![obj],
            vec![x.identity(obj)],
        )
    }

    /// The unique functor `X → 1`.
    pub fn bang(x: &Cat, limits: &Limits) -> Result<FunctorMap> {
        let one = std_cats::terminal(limits)?;
        FunctorMap::new(
            format!("!_{}", x.name),
            Arc::clone(x),
            one,
            vec![0; x.n_objects()],
            vec![0; x.n_arrows()],
        )
    }

    /// Componentwise product functor `f×g`.
    pub fn product_of(f: &FunctorMap, g: &FunctorMap, limits: &Limits) -> Result<FunctorMap> {
        let dom = product(&f.dom, &g.dom, limits)?;
        let cod = product(&f.cod, &g.cod, limits)?;
        let ng = g.dom.n_objects();
        let ng_cod = g.cod.n_objects();
        let mg = g.dom.n_arrows();
        let mg_cod = g.cod.n_arrows();
        let obj_map = (0..dom.n_objects())
            .map(|o| f.obj_map[o / ng] * ng_cod + g.obj_map[o % ng])
            .collect();
        let arrow_map = (0..dom.n_arrows())
            .map(|a| f.arrow_map[a / mg] * mg_cod + g.arrow_map[a % mg])
            .collect();
        FunctorMap::new(format!("{}×{}", f.name, g.name), dom, cod, obj_map, arrow_map)
    }

    /// `f^op × f : X^op×X → Y^op×Y`.
    pub fn square(&self, limits: &Limits) -> Result<FunctorMap> {
        FunctorMap::product_of(&self.opposite(), self, limits)
    }

    /// Whether the functor is bijective on objects and arrows (an
    /// isomorphism of categories; the inverse of a bijective functor is a
    /// functor).
    pub fn is_bijective(&self) -> bool {
        let mut seen_o = vec![false; self.cod.n_objects()];
        for &o in &self.obj_map {
            seen_o[o] = true;
        }
        let mut seen_a = vec![false; self.cod.n_arrows()];
        for &a in &self.arrow_map {
            seen_a[a] = true;
        }
        self.obj_map.len() == self.cod.n_objects()
            && self.arrow_map.len() == self.cod.n_arrows()
            && seen_o.iter().all(|&b| b)
            && seen_a.iter().all(|&b| b)
    }

    /// The arrow map restricted to a hom-set, as a function
    /// `hom(x,y) → hom(fx,fy)`; used by the fully-faithfulness checks.
    pub fn hom_map(&self, x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
        let dom_hom = self.dom.hom(x, y);
        let images = dom_hom.iter().map(|&u| self.arrow_map[u]).collect();
        (dom_hom, images)
    }
}

/// A finite set with distinct ordered labels. Derived sets (products,
/// function sets, quotients) carry canonical labels encoding their
/// construction so structural equality is meaningful across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSet {
    labels: Vec<String>,
}

impl FinSet {
    pub fn new(labels: Vec<String>) -> Result<FinSet> {
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FinSet { labels })
    }

    pub fn empty() -> FinSet {
        FinSet { labels: Vec::new() }
    }

    pub fn singleton(label: impl Into<String>) -> FinSet {
        FinSet { labels: vec![label.into()] }
    }

    /// `{e0, …, e(n-1)}` with a label prefix.
    pub fn numbered(prefix: &str, n: usize) -> FinSet {
        FinSet { labels: (0..n).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cartesian product, labels `(a,b)`, lexicographic in (self, other).
    pub fn product(&self, other: &FinSet) -> FinSet {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        FinSet { labels }
    }

    /// The full function set `other^self`, one element per function
    /// `self → other`, labeled positionally `[t0,t1,…]` in domain order.
    /// Functions are enumerated in lexicographic order of their value tuples.
    pub fn function_labels(&self, other: &FinSet) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let n = self.len();
        let m = other.len();
        if n == 0 {
            return vec![Vec::new()];
        }
        if m == 0 {
            return Vec::new();
        }
        let mut cur = vec![0usize; n];
        loop {
            out.push(cur.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < m {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    pub fn function_label(values: &[usize], cod: &FinSet) -> String {
        let parts: Vec<&str> = values.iter().map(|&v| cod.label(v)).collect();
        format!("[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn terminal_category_is_valid() {
        let one = std_cats::terminal(&limits()).unwrap();
        assert_eq!(one.n_objects(), 1);
        assert_eq!(one.n_arrows(), 1);
    }

    #[test]
    fn walking_arrow_is_valid() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        assert_eq!(two.n_objects(), 2);
        assert_eq!(two.n_arrows(), 3);
        let u = two.arrow_id("u").unwrap();
        assert!(!two.is_iso(u));
    }

    #[test]
    fn corrupted_composition_is_rejected() {
        // 3-object chain a→b→c with the composite pointing at the wrong
        // arrow: rejected as a dangling/associativity problem.
        let raw = RawCategory::new("bad3")
            .object("a")
            .object("b")
            .object("c")
            .arrow("f", "a", "b")
            .arrow("g", "b", "c")
            .composite("g", "f", "g");
        let err = raw.build(&limits()).unwrap_err();
        match err {
            Error::DanglingArrow { .. } | Error::AssociativityViolation { .. } => {}
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn missing_composite_is_rejected() {
        let raw = RawCategory::new("bad")
            .object("a")
            .object("b")
            .object("c")
            .arrow("f", "a", "b")
            .arrow("g", "b", "c");
        assert!(raw.build(&limits()).is_err());
    }

    #[test]
    fn opposite_is_involutive_and_preserves_arrow_count() {
        for cat in std_cats::library(&limits()) {
            let op = opposite(&cat);
            assert_eq!(op.n_arrows(), cat.n_arrows());
            assert_eq!(*opposite(&op), *cat);
        }
    }

    #[test]
    fn product_of_walking_arrows() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let p = product(&two, &two, &limits()).unwrap();
        assert_eq!(p.n_objects(), 4);
        assert_eq!(p.n_arrows(), 9);
    }

    #[test]
    fn product_with_terminal_is_isomorphic() {
        let one = std_cats::terminal(&limits()).unwrap();
        let x = std_cats::commutative_square(&limits()).unwrap();
        let p = product(&one, &x, &limits()).unwrap();
        assert_eq!(p.n_objects(), x.n_objects());
        assert_eq!(p.n_arrows(), x.n_arrows());
    }

    #[test]
    fn square_category_of_walking_arrow() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let sq = product(&opposite(&two), &two, &limits()).unwrap();
        assert_eq!(sq.n_objects(), 4);
        assert_eq!(sq.n_arrows(), 9);
    }

    #[test]
    fn cyclic_group_arrows_are_isos() {
        let c3 = std_cats::cyclic(3, &limits()).unwrap();
        for a in 0..c3.n_arrows() {
            assert!(c3.is_iso(a));
        }
    }

    #[test]
    fn function_set_enumeration_counts() {
        let a = FinSet::numbered("a", 2);
        let b = FinSet::numbered("b", 3);
        assert_eq!(a.function_labels(&b).len(), 9);
        assert_eq!(FinSet::empty().function_labels(&b).len(), 1);
        assert_eq!(a.function_labels(&FinSet::empty()).len(), 0);
    }
}
