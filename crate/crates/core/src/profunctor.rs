//! Endoprofunctors `H ∈ Set^{X^op×X}`, stored as right actions over the
//! square category `X^op × X`, with the comprehension functor `i_X`, its left
//! adjoint `◇_X = ∃̈_p hom_P`, ends, coends, strong coends and (strong)
//! dinatural transformations.

use std::collections::HashMap;
use std::sync::Arc;

use crate::action::{
    exists_right_with, forall_right, substitute_right, KanCarrier, LeftAction, RightAction,
};
use crate::catover::{components_of, over_maps, sections, OverCat, SectionSet};
use crate::fincat::{
    base_eq, opposite, product, Arrow, Cat, FinCat, FinSet, FunctorMap,
};
use crate::{Error, Limits, Result};

/// A finite-set-valued functor on `X^op × X`. The left action is
/// contravariant in the first variable, the right action covariant in the
/// second; commutation of the two is part of functoriality over the square
/// and is checked exhaustively at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoProfunctor {
    base: Cat,
    square: Cat,
    inner: RightAction,
}

impl EndoProfunctor {
    pub fn from_inner(base: &Cat, inner: RightAction) -> Result<EndoProfunctor> {
        let square = square_of(base, &Limits { derived_objects: usize::MAX, derived_arrows: usize::MAX, ..Default::default() })?;
        if !base_eq(inner.base(), &square) {
            return Err(Error::BaseMismatch(
                "endoprofunctor data must live over the square category".into(),
            ));
        }
        Ok(EndoProfunctor { base: Arc::clone(base), square, inner })
    }

    pub fn base(&self) -> &Cat {
        &self.base
    }

    pub fn square(&self) -> &Cat {
        &self.square
    }

    /// The underlying right action over `X^op × X`.
    pub fn inner(&self) -> &RightAction {
        &self.inner
    }

    pub fn n(&self) -> usize {
        self.base.n_objects()
    }

    pub fn obj_of(&self, x: usize, y: usize) -> usize {
        x * self.base.n_objects() + y
    }

    /// square arrow index of the pair `(u, v)`.
    pub fn arrow_of(&self, u: usize, v: usize) -> usize {
        u * self.base.n_arrows() + v
    }

    pub fn fiber(&self, x: usize, y: usize) -> &FinSet {
        self.inner.fiber(self.obj_of(x, y))
    }

    /// Left action `H(u, y) : H(x', y) → H(x, y)` for `u : x → x'`.
    pub fn lact(&self, u: usize, y: usize, e: usize) -> usize {
        self.inner.apply(self.arrow_of(u, self.base.identity(y)), e)
    }

    /// Right action `H(x, v) : H(x, y) → H(x, y')` for `v : y → y'`.
    pub fn ract(&self, x: usize, v: usize, e: usize) -> usize {
        self.inner.apply(self.arrow_of(self.base.identity(x), v), e)
    }

    /// The transposed presheaf `H'` on `X^op × X`, `H'(x,y) = H(y,x)`.
    pub fn transpose_left(&self) -> Result<LeftAction> {
        let n = self.n();
        let fibers: Vec<FinSet> = (0..n * n)
            .map(|o| self.fiber(o % n, o / n).clone())
            .collect();
        // square arrow (u, v) with u : a → b, v : c → d goes (b,c) → (a,d);
        // the presheaf map sends H'(a,d) = H(d,a) to H'(b,c) = H(c,b).
        let maps = (0..self.square.n_arrows())
            .map(|sq| {
                let (u, v) = (sq / self.base.n_arrows(), sq % self.base.n_arrows());
                let a = self.base.arrow(u).src;
                let c = self.base.arrow(v).src;
                (0..self.fiber(self.base.arrow(v).tgt, a).len())
                    .map(|e| {
                        let e1 = self.lact(v, a, e);
                        self.ract(c, u, e1)
                    })
                    .collect()
            })
            .collect();
        LeftAction::new(&self.square, fibers, maps)
    }
}

/// `X^op × X`.
pub fn square_of(x: &Cat, limits: &Limits) -> Result<Cat> {
    product(&opposite(x), x, limits)
}

/// Build an endoprofunctor from per-variable action data.
///
/// `fiber(x, y)`, `lmap(u, y)` (the map `H(x',y) → H(x,y)` for `u : x → x'`)
/// and `rmap(x, v)` (the map `H(x,y) → H(x,y')` for `v : y → y'`).
pub fn build_endo(
    base: &Cat,
    limits: &Limits,
    fiber: impl Fn(usize, usize) -> FinSet,
    lmap: impl Fn(usize, usize) -> Vec<usize>,
    rmap: impl Fn(usize, usize) -> Vec<usize>,
) -> Result<EndoProfunctor> {
    let square = square_of(base, limits)?;
    let n = base.n_objects();
    let fibers: Vec<FinSet> = (0..n * n).map(|o| fiber(o / n, o % n)).collect();
    let m = base.n_arrows();
    let maps = (0..square.n_arrows())
        .map(|sq| {
            let (u, v) = (sq / m, sq % m);
            // square arrow (u, v): (b, c) → (a, d) for u : a → b, v : c → d
            let a = base.arrow(u).src;
            let c = base.arrow(v).src;
            let l = lmap(u, c);
            let r = rmap(a, v);
            l.iter().map(|&e| r[e]).collect()
        })
        .collect();
    let inner = RightAction::new(&square, fibers, maps)?;
    EndoProfunctor::from_inner(base, inner)
}

/// The hom profunctor `hom_X(x, y) = X(x, y)` with composition actions.
pub fn hom_profunctor(x: &Cat, limits: &Limits) -> Result<EndoProfunctor> {
    let homs: Vec<Vec<usize>> = (0..x.n_objects())
        .flat_map(|a| (0..x.n_objects()).map(move |b| (a, b)))
        .map(|(a, b)| x.hom(a, b))
        .collect();
    let n = x.n_objects();
    let hom_at = |a: usize, b: usize| &homs[a * n + b];
    build_endo(
        x,
        limits,
        |a, b| {
            FinSet::new(hom_at(a, b).iter().map(|&w| x.arrow(w).id.clone()).collect())
                .expect("arrow ids distinct")
        },
        |u, y| {
            let arr = x.arrow(u);
            hom_at(arr.tgt, y)
                .iter()
                .map(|&w| {
                    let wu = x.comp(w, u);
                    hom_at(arr.src, y).iter().position(|&z| z == wu).expect("closed")
                })
                .collect()
        },
        |xo, v| {
            let arr = x.arrow(v);
            hom_at(xo, arr.src)
                .iter()
                .map(|&w| {
                    let vw = x.comp(v, w);
                    hom_at(xo, arr.tgt).iter().position(|&z| z == vw).expect("closed")
                })
                .collect()
        },
    )
}

/// Dummy inclusion `δ^ℓ A (x, y) = A x` (right action trivial).
pub fn dummy_left(a: &LeftAction, limits: &Limits) -> Result<EndoProfunctor> {
    build_endo(
        a.base(),
        limits,
        |x, _| a.fiber(x).clone(),
        |u, _| a.map(u).to_vec(),
        |x, _| (0..a.fiber(x).len()).collect(),
    )
}

/// Dummy inclusion `δ^r M (x, y) = M y` (left action trivial).
pub fn dummy_right(m: &RightAction, limits: &Limits) -> Result<EndoProfunctor> {
    build_endo(
        m.base(),
        limits,
        |_, y| m.fiber(y).clone(),
        |_, y| (0..m.fiber(y).len()).collect(),
        |_, v| m.map(v).to_vec(),
    )
}

/// Outer product `(A ⨰ M)(x, y) = A x × M y`.
pub fn outer_product(a: &LeftAction, m: &RightAction, limits: &Limits) -> Result<EndoProfunctor> {
    if !base_eq(a.base(), m.base()) {
        return Err(Error::BaseMismatch("outer_product: actions over different bases".into()));
    }
    build_endo(
        a.base(),
        limits,
        |x, y| a.fiber(x).product(m.fiber(y)),
        |u, y| {
            let arr = a.base().arrow(u);
            let (na_t, nm) = (a.fiber(arr.tgt).len(), m.fiber(y).len());
            let mut out = Vec::with_capacity(na_t * nm);
            for e in 0..na_t {
                for j in 0..nm {
                    out.push(a.apply(u, e) * nm + j);
                }
            }
            out
        },
        |x, v| {
            let arr = m.base().arrow(v);
            let (na, nm_s) = (a.fiber(x).len(), m.fiber(arr.src).len());
            let nm_t = m.fiber(arr.tgt).len();
            let mut out = Vec::with_capacity(na * nm_s);
            for e in 0..na {
                for j in 0..nm_s {
                    out.push(e * nm_t + m.apply(v, j));
                }
            }
            out
        },
    )
}

/// `(M ⇒^r N)(x, y) = [M x, N y]` with pre/post-composition actions.
pub fn hom_arrow(m: &RightAction, n: &RightAction, limits: &Limits) -> Result<EndoProfunctor> {
    if !base_eq(m.base(), n.base()) {
        return Err(Error::BaseMismatch("hom_arrow: actions over different bases".into()));
    }
    let base = m.base().clone();
    let nn = base.n_objects();
    // bound the function-set sizes before materializing anything
    for x in 0..nn {
        for y in 0..nn {
            let size = n
                .fiber(y)
                .len()
                .checked_pow(m.fiber(x).len() as u32)
                .unwrap_or(usize::MAX);
            if size > limits.derived_fiber {
                return Err(Error::size("hom_arrow fiber", size, limits.derived_fiber));
            }
        }
    }
    let fiber_tables: Vec<Vec<Vec<usize>>> = (0..nn)
        .flat_map(|x| (0..nn).map(move |y| (x, y)))
        .map(|(x, y)| m.fiber(x).function_labels(n.fiber(y)))
        .collect();
    build_endo(
        &base,
        limits,
        |x, y| {
            let labels = fiber_tables[x * nn + y]
                .iter()
                .map(|t| FinSet::function_label(t, n.fiber(y)))
                .collect();
            FinSet::new(labels).expect("positional labels distinct")
        },
        |u, y| {
            // φ ∈ [M x', N y] ↦ φ ∘ M(u) ∈ [M x, N y] for u : x → x'
            let arr = base.arrow(u);
            let ny = n.fiber(y).len();
            fiber_tables[arr.tgt * nn + y]
                .iter()
                .map(|phi| {
                    let values: Vec<usize> =
                        (0..m.fiber(arr.src).len()).map(|e| phi[m.apply(u, e)]).collect();
                    crate::action::function_index(&values, ny)
                })
                .collect()
        },
        |x, v| {
            // φ ∈ [M x, N y] ↦ N(v) ∘ φ ∈ [M x, N y'] for v : y → y'
            let arr = base.arrow(v);
            let ny2 = n.fiber(arr.tgt).len();
            fiber_tables[x * nn + arr.src]
                .iter()
                .map(|phi| {
                    let values: Vec<usize> = phi.iter().map(|&e| n.apply(v, e)).collect();
                    crate::action::function_index(&values, ny2)
                })
                .collect()
        },
    )
}

/// `(A ⇒^ℓ B)(x, y) = [A y, B x]`.
pub fn hom_arrow_left(a: &LeftAction, b: &LeftAction, limits: &Limits) -> Result<EndoProfunctor> {
    if !base_eq(a.base(), b.base()) {
        return Err(Error::BaseMismatch("hom_arrow_left: actions over different bases".into()));
    }
    let base = a.base().clone();
    let nn = base.n_objects();
    for x in 0..nn {
        for y in 0..nn {
            let size = b
                .fiber(x)
                .len()
                .checked_pow(a.fiber(y).len() as u32)
                .unwrap_or(usize::MAX);
            if size > limits.derived_fiber {
                return Err(Error::size("hom_arrow fiber", size, limits.derived_fiber));
            }
        }
    }
    let fiber_tables: Vec<Vec<Vec<usize>>> = (0..nn)
        .flat_map(|x| (0..nn).map(move |y| (x, y)))
        .map(|(x, y)| a.fiber(y).function_labels(b.fiber(x)))
        .collect();
    build_endo(
        &base,
        limits,
        |x, y| {
            let labels = fiber_tables[x * nn + y]
                .iter()
                .map(|t| FinSet::function_label(t, b.fiber(x)))
                .collect();
            FinSet::new(labels).expect("positional labels distinct")
        },
        |u, y| {
            // φ ∈ [A y, B x'] ↦ B(u) ∘ φ ∈ [A y, B x] for u : x → x'
            let arr = base.arrow(u);
            let nbx = b.fiber(arr.src).len();
            fiber_tables[arr.tgt * nn + y]
                .iter()
                .map(|phi| {
                    let values: Vec<usize> = phi.iter().map(|&e| b.apply(u, e)).collect();
                    crate::action::function_index(&values, nbx)
                })
                .collect()
        },
        |x, v| {
            // φ ∈ [A c, B x] ↦ φ ∘ A(v) ∈ [A d, B x] for v : c → d
            let arr = base.arrow(v);
            let nbx = b.fiber(x).len();
            fiber_tables[x * nn + arr.src]
                .iter()
                .map(|phi| {
                    let values: Vec<usize> =
                        (0..a.fiber(arr.tgt).len()).map(|e| phi[a.apply(v, e)]).collect();
                    crate::action::function_index(&values, nbx)
                })
                .collect()
        },
    )
}

/// The comprehension `i_X H` with its index data: objects over `x` are the
/// elements of `H(x,x)`, with at most one arrow over each `λ`, present
/// exactly when `H(x,λ)a = H(λ,y)b`.
#[derive(Debug, Clone)]
pub struct Comprehension {
    pub over: OverCat,
    /// per total object: (base object, element of the diagonal fiber)
    pub pairs: Vec<(usize, usize)>,
    obj_index: HashMap<(usize, usize), usize>,
    arr_index: HashMap<(usize, usize, usize), usize>,
}

impl Comprehension {
    pub fn obj_of(&self, x: usize, e: usize) -> usize {
        self.obj_index[&(x, e)]
    }

    /// The unique arrow over `λ` between two total objects, when present.
    pub fn try_arrow(&self, lambda: usize, src: usize, tgt: usize) -> Option<usize> {
        self.arr_index.get(&(lambda, src, tgt)).copied()
    }
}

pub fn comprehend(h: &EndoProfunctor, limits: &Limits) -> Result<Comprehension> {
    let base = h.base().clone();
    let mut objects = Vec::new();
    let mut obj_index = HashMap::new();
    let mut pairs = Vec::new();
    let mut obj_proj = Vec::new();
    for x in 0..base.n_objects() {
        for e in 0..h.fiber(x, x).len() {
            obj_index.insert((x, e), objects.len());
            objects.push(format!("({}|{})", base.object_label(x), h.fiber(x, x).label(e)));
            pairs.push((x, e));
            obj_proj.push(x);
        }
    }
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    let mut arr_proj = Vec::new();
    for lambda in 0..base.n_arrows() {
        let arr = base.arrow(lambda);
        for a in 0..h.fiber(arr.src, arr.src).len() {
            let left = h.ract(arr.src, lambda, a);
            for b in 0..h.fiber(arr.tgt, arr.tgt).len() {
                if left == h.lact(lambda, arr.tgt, b) {
                    let src = obj_index[&(arr.src, a)];
                    let tgt = obj_index[&(arr.tgt, b)];
                    arr_index.insert((lambda, src, tgt), arrows.len());
                    arrows.push(Arrow {
                        id: format!(
                            "({}|{}|{})",
                            arr.id,
                            h.fiber(arr.src, arr.src).label(a),
                            h.fiber(arr.tgt, arr.tgt).label(b)
                        ),
                        src,
                        tgt,
                    });
                    arr_proj.push(lambda);
                }
            }
        }
    }
    let mut identities = vec![usize::MAX; objects.len()];
    for (&(x, e), &o) in &obj_index {
        identities[o] = arr_index[&(base.identity(x), o, o)];
        let _ = (x, e);
    }
    let mut compose = HashMap::new();
    for (i1, a1) in arrows.iter().enumerate() {
        for (i2, a2) in arrows.iter().enumerate() {
            if a2.src == a1.tgt {
                let lam = base.comp(arr_proj[i2], arr_proj[i1]);
                let composite =
                    arr_index.get(&(lam, a1.src, a2.tgt)).copied().ok_or_else(|| {
                        Error::EngineBug("comprehension not closed under composition".into())
                    })?;
                compose.insert((i2, i1), composite);
            }
        }
    }
    let total = FinCat::from_parts(
        format!("i({})", base.name),
        objects,
        arrows,
        identities,
        compose,
        limits,
        true,
    )?;
    let proj = FunctorMap::new(
        format!("i_{}", base.name),
        total.clone(),
        Arc::clone(&base),
        obj_proj,
        arr_proj,
    )?;
    Ok(Comprehension { over: OverCat::new(proj)?, pairs, obj_index, arr_index })
}

/// `◇_X p = ∃̈_p hom_P`, the left adjoint of comprehension, with the Kan
/// carrier over the square category kept for the adjunction transposes.
pub fn diamond(p: &OverCat, limits: &Limits) -> Result<(EndoProfunctor, KanCarrier)> {
    let hom_p = hom_profunctor(&p.total, limits)?;
    let sq_f = p.proj.square(limits)?;
    let (inner, carrier) = exists_right_with(&sq_f, hom_p.inner(), limits)?;
    Ok((EndoProfunctor::from_inner(p.base(), inner)?, carrier))
}

/// The end of `H`: sections of `i_X H`.
pub fn end(h: &EndoProfunctor, limits: &Limits) -> Result<SectionSet> {
    let c = comprehend(h, limits)?;
    sections(&c.over, limits)
}

/// The end computed through diagonal Yoneda as `Nat(hom_X, H)`.
pub fn end_via_nat(h: &EndoProfunctor, limits: &Limits) -> Result<crate::action::HomSet> {
    let hom = hom_profunctor(h.base(), limits)?;
    crate::action::hom_right(hom.inner(), h.inner(), limits)
}

/// The coend carrier: classes of `⨿_x H(x,x)` under the dinaturality
/// relation, with the class lookup.
#[derive(Debug, Clone)]
pub struct CoendSet {
    pub set: FinSet,
    offsets: Vec<usize>,
    class: Vec<usize>,
}

impl CoendSet {
    pub fn class_of(&self, x: usize, e: usize) -> usize {
        self.class[self.offsets[x] + e]
    }
}

/// The coend of `H`: quotient of the diagonal by the zig-zag relation
/// `H(λ,x)t ~ H(y,λ)t` for `λ : x → y`, `t ∈ H(y,x)`.
pub fn coend(h: &EndoProfunctor, _limits: &Limits) -> Result<CoendSet> {
    let base = h.base();
    let n = base.n_objects();
    let mut offsets = vec![0usize; n];
    let mut labels = Vec::new();
    for x in 0..n {
        offsets[x] = labels.len();
        for e in 0..h.fiber(x, x).len() {
            labels.push(format!("{}.{}", base.object_label(x), h.fiber(x, x).label(e)));
        }
    }
    let mut uf = crate::util::UnionFind::new(labels.len());
    for lambda in 0..base.n_arrows() {
        let arr = base.arrow(lambda);
        for t in 0..h.fiber(arr.tgt, arr.src).len() {
            let via_l = h.lact(lambda, arr.src, t);
            let via_r = h.ract(arr.tgt, lambda, t);
            uf.union(offsets[arr.src] + via_l, offsets[arr.tgt] + via_r);
        }
    }
    let (class_labels, class) = crate::fincat::diagram::class_labels(&mut uf, &labels);
    Ok(CoendSet { set: FinSet::new(class_labels)?, offsets, class })
}

/// Strong coend: components of the total of `i_X H`.
pub fn strong_coend(h: &EndoProfunctor, limits: &Limits) -> Result<FinSet> {
    let c = comprehend(h, limits)?;
    Ok(components_of(&c.over.total).0)
}

/// Does a family satisfy the dinaturality hexagon?
pub fn is_dinatural(h: &EndoProfunctor, k: &EndoProfunctor, family: &[Vec<usize>]) -> bool {
    let base = h.base();
    (0..base.n_arrows()).all(|lambda| {
        let arr = base.arrow(lambda);
        (0..h.fiber(arr.tgt, arr.src).len()).all(|t| {
            let lhs = k.ract(arr.src, lambda, family[arr.src][h.lact(lambda, arr.src, t)]);
            let rhs = k.lact(lambda, arr.tgt, family[arr.tgt][h.ract(arr.tgt, lambda, t)]);
            lhs == rhs
        })
    })
}

/// Does a family satisfy the strong (Barr) condition?
pub fn is_strong_dinatural(h: &EndoProfunctor, k: &EndoProfunctor, family: &[Vec<usize>]) -> bool {
    let base = h.base();
    (0..base.n_arrows()).all(|lambda| {
        let arr = base.arrow(lambda);
        (0..h.fiber(arr.src, arr.src).len()).all(|a| {
            (0..h.fiber(arr.tgt, arr.tgt).len()).all(|b| {
                h.ract(arr.src, lambda, a) != h.lact(lambda, arr.tgt, b)
                    || k.ract(arr.src, lambda, family[arr.src][a])
                        == k.lact(lambda, arr.tgt, family[arr.tgt][b])
            })
        })
    })
}

fn require_same_base_endo(h: &EndoProfunctor, k: &EndoProfunctor, what: &str) -> Result<()> {
    if base_eq(h.base(), k.base()) {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{what}: profunctors over different bases")))
    }
}

/// Complete enumeration of dinatural transformations `H → K` (families on
/// the diagonal satisfying the hexagon).
pub fn dinaturals(
    h: &EndoProfunctor,
    k: &EndoProfunctor,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<usize>>>> {
    require_same_base_endo(h, k, "dinaturals")?;
    let base = h.base().clone();
    let n = base.n_objects();
    for x in 0..n {
        let size =
            k.fiber(x, x).len().checked_pow(h.fiber(x, x).len() as u32).unwrap_or(usize::MAX);
        if size > limits.derived_fiber {
            return Err(Error::size("dinatural candidate set", size, limits.derived_fiber));
        }
    }
    let per_obj: Vec<Vec<Vec<usize>>> =
        (0..n).map(|x| h.fiber(x, x).function_labels(k.fiber(x, x))).collect();
    let mut found = Vec::new();
    let mut family: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut nodes = 0usize;
    descend_dinat(h, k, &base, &per_obj, 0, &mut family, &mut found, &mut nodes, limits)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn descend_dinat(
    h: &EndoProfunctor,
    k: &EndoProfunctor,
    base: &Cat,
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
            return Err(Error::size("dinatural search nodes", *nodes, limits.search_nodes));
        }
        family[x] = cand.clone();
        // check hexagons for arrows between assigned objects
        for lambda in 0..base.n_arrows() {
            let arr = base.arrow(lambda);
            if arr.src.max(arr.tgt) != x || arr.src > x || arr.tgt > x {
                continue;
            }
            for t in 0..h.fiber(arr.tgt, arr.src).len() {
                let lhs = k.ract(arr.src, lambda, family[arr.src][h.lact(lambda, arr.src, t)]);
                let rhs = k.lact(lambda, arr.tgt, family[arr.tgt][h.ract(arr.tgt, lambda, t)]);
                if lhs != rhs {
                    continue 'cand;
                }
            }
        }
        descend_dinat(h, k, base, per_obj, x + 1, family, found, nodes, limits)?;
    }
    family[x] = Vec::new();
    Ok(())
}

/// Complete enumeration of strong dinatural transformations, realized as
/// `Cat/X(i_X H, i_X K)` and decoded to diagonal families.
pub fn strong_dinaturals(
    h: &EndoProfunctor,
    k: &EndoProfunctor,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<usize>>>> {
    require_same_base_endo(h, k, "strong_dinaturals")?;
    let ch = comprehend(h, limits)?;
    let ck = comprehend(k, limits)?;
    let maps = over_maps(&ch.over, &ck.over, limits, None)?;
    let n = h.base().n_objects();
    let mut out = Vec::with_capacity(maps.len());
    for f in maps {
        let mut family: Vec<Vec<usize>> =
            (0..n).map(|x| vec![usize::MAX; h.fiber(x, x).len()]).collect();
        for (o, &(x, e)) in ch.pairs.iter().enumerate() {
            let (x2, e2) = ck.pairs[f.obj_map[o]];
            debug_assert_eq!(x, x2);
            family[x][e] = e2;
        }
        out.push(family);
    }
    Ok(out)
}

/// `f̈ H = (f^op×f)^r H`: substitution of an endoprofunctor along a functor.
pub fn ddot_substitute(f: &FunctorMap, h: &EndoProfunctor, limits: &Limits) -> Result<EndoProfunctor> {
    if !base_eq(&f.cod, h.base()) {
        return Err(Error::BaseMismatch("ddot_substitute: functor must land in the base".into()));
    }
    let sq = f.square(limits)?;
    let inner = substitute_right(&sq, h.inner())?;
    EndoProfunctor::from_inner(&f.dom, inner)
}

/// `∃̈_f = ∃^r_{f^op×f}` with its carrier.
pub fn ddot_exists(
    f: &FunctorMap,
    h: &EndoProfunctor,
    limits: &Limits,
) -> Result<(EndoProfunctor, KanCarrier)> {
    if !base_eq(&f.dom, h.base()) {
        return Err(Error::BaseMismatch("ddot_exists: profunctor must live over the functor domain".into()));
    }
    let sq = f.square(limits)?;
    let (inner, carrier) = exists_right_with(&sq, h.inner(), limits)?;
    Ok((EndoProfunctor::from_inner(&f.cod, inner)?, carrier))
}

/// `∀̈_f = ∀^r_{f^op×f}`.
pub fn ddot_forall(f: &FunctorMap, h: &EndoProfunctor, limits: &Limits) -> Result<EndoProfunctor> {
    if !base_eq(&f.dom, h.base()) {
        return Err(Error::BaseMismatch("ddot_forall: profunctor must live over the functor domain".into()));
    }
    let sq = f.square(limits)?;
    let inner = forall_right(&sq, h.inner(), limits)?;
    EndoProfunctor::from_inner(&f.cod, inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::std_cats;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn dummy_left_fibers_ignore_second_variable() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let d = dummy_left(&a, &limits()).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(d.fiber(x, y).len(), a.fiber(x).len());
            }
        }
    }

    #[test]
    fn outer_product_fiber_sizes_multiply() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let o = outer_product(&a, &m, &limits()).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(o.fiber(x, y).len(), a.fiber(x).len() * m.fiber(y).len());
            }
        }
    }

    #[test]
    fn unit_outer_and_hom_arrow_collapse_to_dummy() {
        // I ⨰ M ≅ δʳM ≅ I ⇒ʳ M
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let d = dummy_right(&m, &limits()).unwrap();
        let o = outer_product(&LeftAction::terminal(&two), &m, &limits()).unwrap();
        assert!(crate::action::iso_right(o.inner(), d.inner(), &limits()).unwrap().is_some());
        let h = hom_arrow(&RightAction::terminal(&two), &m, &limits()).unwrap();
        assert!(crate::action::iso_right(h.inner(), d.inner(), &limits()).unwrap().is_some());
    }

    #[test]
    fn comprehend_hom_of_walking_arrow_is_itself() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let hom = hom_profunctor(&two, &limits()).unwrap();
        let c = comprehend(&hom, &limits()).unwrap();
        // objects over x are the identities... hom(a,a)={id_a}, hom(b,b)={id_b}
        assert_eq!(c.over.total.n_objects(), 2);
        assert!(crate::catover::over_iso(
            &c.over,
            &crate::catover::OverCat::identity(&two),
            &limits()
        )
        .unwrap()
        .is_some());
    }

    #[test]
    fn comprehend_dummy_left_is_elements() {
        // i_X δ^ℓ A ≅ i^ℓ_X A
        let c3 = std_cats::chain(3, &limits()).unwrap();
        let a = LeftAction::representable(&c3, 1).unwrap();
        let d = dummy_left(&a, &limits()).unwrap();
        let c = comprehend(&d, &limits()).unwrap();
        let el = crate::catover::elements_left(&a, &limits()).unwrap();
        assert!(crate::catover::over_iso(&c.over, &el.over, &limits()).unwrap().is_some());
    }

    #[test]
    fn end_of_hom_arrow_counts_naturals() {
        // end(M ⇒^r N) ≅ Nat(M, N)
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let n = RightAction::representable(&two, 1).unwrap();
        let e = end(&hom_arrow(&m, &n, &limits()).unwrap(), &limits()).unwrap();
        let nat = crate::action::hom_right(&m, &n, &limits()).unwrap();
        assert_eq!(e.len(), nat.len());
        let e2 = end(&hom_arrow(&m, &m, &limits()).unwrap(), &limits()).unwrap();
        let nat2 = crate::action::hom_right(&m, &m, &limits()).unwrap();
        assert_eq!(e2.len(), nat2.len());
    }

    #[test]
    fn diagonal_yoneda_counts() {
        // |sections(i_X H)| = |Nat(hom_X, H)|
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let h = dummy_right(&m, &limits()).unwrap();
        let lhs = end(&h, &limits()).unwrap().len();
        let rhs = end_via_nat(&h, &limits()).unwrap().len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ends_and_coends_over_terminal_base() {
        let one = std_cats::terminal(&limits()).unwrap();
        let a = LeftAction::constant(&one, &FinSet::numbered("a", 3));
        let d = dummy_left(&a, &limits()).unwrap();
        assert_eq!(end(&d, &limits()).unwrap().len(), 3);
        assert_eq!(coend(&d, &limits()).unwrap().set.len(), 3);
        assert_eq!(strong_coend(&d, &limits()).unwrap().len(), 3);
    }

    #[test]
    fn coend_of_outer_product_is_mixed_tensor() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let a = LeftAction::representable(&two, 1).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let o = outer_product(&a, &m, &limits()).unwrap();
        let c = coend(&o, &limits()).unwrap();
        let s = strong_coend(&o, &limits()).unwrap();
        let t = crate::action::mixed_tensor(&a, &m, &limits()).unwrap();
        assert_eq!(c.set.len(), t.len());
        assert_eq!(s.len(), t.len());
    }

    #[test]
    fn diamond_of_identity_is_hom() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let (d, _) = diamond(&OverCat::identity(&two), &limits()).unwrap();
        let hom = hom_profunctor(&two, &limits()).unwrap();
        assert!(
            crate::action::iso_right(d.inner(), hom.inner(), &limits()).unwrap().is_some()
        );
    }

    #[test]
    fn strong_dinaturals_are_dinatural() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let m = RightAction::representable(&two, 0).unwrap();
        let h = dummy_right(&m, &limits()).unwrap();
        let hom = hom_profunctor(&two, &limits()).unwrap();
        let strong = strong_dinaturals(&h, &hom, &limits()).unwrap();
        for fam in &strong {
            assert!(is_dinatural(&h, &hom, fam));
            assert!(is_strong_dinatural(&h, &hom, fam));
        }
        // outer-product domain: dinaturals = strong dinaturals
        let a = LeftAction::representable(&two, 1).unwrap();
        let o = outer_product(&a, &m, &limits()).unwrap();
        let din = dinaturals(&o, &hom, &limits()).unwrap();
        let sd = strong_dinaturals(&o, &hom, &limits()).unwrap();
        assert_eq!(din.len(), sd.len());
    }

    #[test]
    fn ddot_substitute_along_identity() {
        let two = std_cats::walking_arrow(&limits()).unwrap();
        let hom = hom_profunctor(&two, &limits()).unwrap();
        let id = FunctorMap::identity(&two);
        let s = ddot_substitute(&id, &hom, &limits()).unwrap();
        assert_eq!(s, hom);
    }
}
