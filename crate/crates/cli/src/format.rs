//! The line-oriented text format. UTF-8, `#` comments, blocks terminated by
//! `end`:
//!
//! ```text
//! category C
//!   objects a b
//!   arrow u : a -> b
//!   compose g f = h        # g∘f = h, only for non-identity pairs
//! end
//!
//! functor f : C -> D
//!   obj a -> x
//!   arrow u -> v
//! end
//!
//! leftaction A on C
//!   at a: x y
//!   act u: z -> x          # A(u) elementwise, from the fiber over tgt(u)
//! end
//!
//! rightaction M on C      # act u: maps the fiber over src(u)
//!
//! profunctor H on C
//!   at (a,b): h1 h2
//!   lact u y: e -> e'      # H(u,y) : H(x',y) → H(x,y) for u : x → x'
//!   ract x v: e -> e'      # H(x,v) : H(x,y) → H(x,y')
//! end
//! ```
//!
//! Identity arrows are implicit (`id_<object>`) and may not be redefined;
//! their composites and action maps are implied. All printed enumerations
//! follow declaration order, so `load(print(v))` is structurally identical
//! to `v`.

use std::collections::HashMap;

use actegory_core::action::{LeftAction, RightAction};
use actegory_core::fincat::{Cat, FinSet, FunctorMap, RawCategory};
use actegory_core::profunctor::{build_endo, EndoProfunctor};
use actegory_core::Limits;

use crate::workspace::{Value, Workspace};
use crate::{CliError, Result};

pub fn parse_into(
    ws: &mut Workspace,
    text: &str,
    path: &str,
    limits: &Limits,
) -> Result<()> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect::<Vec<_>>()
        .into_iter()
        .peekable();

    while let Some((lineno, header)) = lines.next() {
        let words: Vec<&str> = header.split_whitespace().collect();
        let err = |msg: String, line: usize| CliError::Parse {
            path: path.to_string(),
            line,
            msg,
        };
        let mut body = Vec::new();
        loop {
            match lines.next() {
                Some((_, l)) if l == "end" => break,
                Some((n, l)) => body.push((n, l)),
                None => return Err(err("unterminated block".into(), lineno)),
            }
        }
        match words.as_slice() {
            ["category", name] => {
                let cat = parse_category(name, &body, path, limits)?;
                ws.insert(name, Value::Cat(cat))?;
            }
            ["functor", name, ":", dom, "->", cod] => {
                let f = parse_functor(ws, name, dom, cod, &body, path)?;
                ws.insert(name, Value::Functor(f))?;
            }
            ["leftaction", name, "on", base] => {
                let a = parse_action(ws, base, &body, path, true, limits)?;
                ws.insert(name, a)?;
            }
            ["rightaction", name, "on", base] => {
                let a = parse_action(ws, base, &body, path, false, limits)?;
                ws.insert(name, a)?;
            }
            ["profunctor", name, "on", base] => {
                let h = parse_profunctor(ws, base, &body, path, limits)?;
                ws.insert(name, Value::Pro(h))?;
            }
            _ => return Err(err(format!("unknown block header `{header}`"), lineno)),
        }
    }
    Ok(())
}

fn parse_category(
    name: &str,
    body: &[(usize, String)],
    path: &str,
    limits: &Limits,
) -> Result<Cat> {
    let mut raw = RawCategory::new(name);
    for (line, l) in body {
        let perr = |msg: String| CliError::Parse { path: path.into(), line: *line, msg };
        let mut words = l.split_whitespace();
        match words.next() {
            Some("objects") => {
                for o in words {
                    raw = raw.object(o);
                }
            }
            Some("arrow") => {
                let rest: Vec<&str> = words.collect();
                match rest.as_slice() {
                    [id, ":", src, "->", tgt] => {
                        if id.starts_with("id_") {
                            return Err(perr("identities are implicit and may not be redefined".into()));
                        }
                        raw = raw.arrow(id, src, tgt);
                    }
                    _ => return Err(perr("expected `arrow <id> : <src> -> <tgt>`".into())),
                }
            }
            Some("compose") => {
                let rest: Vec<&str> = words.collect();
                match rest.as_slice() {
                    [g, f, "=", h] => {
                        if g.starts_with("id_") || f.starts_with("id_") {
                            return Err(perr(
                                "composites with identities are implicit".into(),
                            ));
                        }
                        raw = raw.composite(g, f, h);
                    }
                    _ => return Err(perr("expected `compose <g> <f> = <h>`".into())),
                }
            }
            _ => return Err(perr(format!("unknown category line `{l}`"))),
        }
    }
    Ok(raw.build(limits)?)
}

fn parse_functor(
    ws: &Workspace,
    name: &str,
    dom: &str,
    cod: &str,
    body: &[(usize, String)],
    path: &str,
) -> Result<FunctorMap> {
    let dom = ws.category(dom)?;
    let cod = ws.category(cod)?;
    let mut obj_map = vec![usize::MAX; dom.n_objects()];
    let mut arrow_map = vec![usize::MAX; dom.n_arrows()];
    for (line, l) in body {
        let perr = |msg: String| CliError::Parse { path: path.into(), line: *line, msg };
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.as_slice() {
            ["obj", a, "->", b] => {
                obj_map[dom.object_id(a)?] = cod.object_id(b)?;
            }
            ["arrow", u, "->", v] => {
                if u.starts_with("id_") {
                    return Err(perr("identity arrow images are implied".into()));
                }
                arrow_map[dom.arrow_id(u)?] = cod.arrow_id(v)?;
            }
            _ => return Err(perr(format!("unknown functor line `{l}`"))),
        }
    }
    for o in 0..dom.n_objects() {
        if obj_map[o] == usize::MAX {
            return Err(CliError::Parse {
                path: path.into(),
                line: 0,
                msg: format!("functor `{name}` missing image of object `{}`", dom.object_label(o)),
            });
        }
    }
    for a in 0..dom.n_arrows() {
        if dom.is_identity(a) {
            arrow_map[a] = cod.identity(obj_map[dom.arrow(a).src]);
        } else if arrow_map[a] == usize::MAX {
            return Err(CliError::Parse {
                path: path.into(),
                line: 0,
                msg: format!("functor `{name}` missing image of arrow `{}`", dom.arrow(a).id),
            });
        }
    }
    Ok(FunctorMap::new(name, dom, cod, obj_map, arrow_map)?)
}

fn parse_action(
    ws: &Workspace,
    base_name: &str,
    body: &[(usize, String)],
    path: &str,
    left: bool,
    limits: &Limits,
) -> Result<Value> {
    let base = ws.category(base_name)?;
    let mut fibers: Vec<Option<FinSet>> = vec![None; base.n_objects()];
    let mut entries: Vec<HashMap<usize, usize>> = vec![HashMap::new(); base.n_arrows()];
    for (line, l) in body {
        let perr = |msg: String| CliError::Parse { path: path.into(), line: *line, msg };
        if let Some(rest) = l.strip_prefix("at ") {
            let (obj, elems) =
                rest.split_once(':').ok_or_else(|| perr("expected `at <obj>: e …`".into()))?;
            let o = base.object_id(obj.trim())?;
            let labels: Vec<String> = elems.split_whitespace().map(String::from).collect();
            if labels.len() > limits.max_fiber {
                return Err(CliError::Engine(actegory_core::Error::size(
                    format!("fiber over `{}`", obj.trim()),
                    labels.len(),
                    limits.max_fiber,
                )));
            }
            fibers[o] = Some(FinSet::new(labels).map_err(CliError::Engine)?);
        } else if let Some(rest) = l.strip_prefix("act ") {
            let (arrow, map) =
                rest.split_once(':').ok_or_else(|| perr("expected `act <arrow>: e -> e'`".into()))?;
            let arrow = arrow.trim();
            if arrow.starts_with("id_") {
                return Err(perr("identity action maps are implied".into()));
            }
            let a = base.arrow_id(arrow)?;
            let (src_lbl, tgt_lbl) = map
                .split_once("->")
                .ok_or_else(|| perr("expected `act <arrow>: e -> e'`".into()))?;
            let (from_obj, to_obj) = if left {
                (base.arrow(a).tgt, base.arrow(a).src)
            } else {
                (base.arrow(a).src, base.arrow(a).tgt)
            };
            let from = fibers[from_obj]
                .as_ref()
                .and_then(|f| f.index_of(src_lbl.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", src_lbl.trim())))?;
            let to = fibers[to_obj]
                .as_ref()
                .and_then(|f| f.index_of(tgt_lbl.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", tgt_lbl.trim())))?;
            entries[a].insert(from, to);
        } else {
            return Err(perr(format!("unknown action line `{l}`")));
        }
    }
    let fibers: Vec<FinSet> = fibers.into_iter().map(|f| f.unwrap_or_else(FinSet::empty)).collect();
    let mut maps = Vec::with_capacity(base.n_arrows());
    for a in 0..base.n_arrows() {
        let from_obj = if base.is_identity(a) {
            base.arrow(a).src
        } else if left {
            base.arrow(a).tgt
        } else {
            base.arrow(a).src
        };
        let size = fibers[from_obj].len();
        if base.is_identity(a) {
            maps.push((0..size).collect());
            continue;
        }
        let mut m = vec![usize::MAX; size];
        for (k, v) in &entries[a] {
            m[*k] = *v;
        }
        if let Some(missing) = m.iter().position(|&v| v == usize::MAX) {
            return Err(CliError::Parse {
                path: path.into(),
                line: 0,
                msg: format!(
                    "action of `{}` missing element `{}`",
                    base.arrow(a).id,
                    fibers[from_obj].label(missing)
                ),
            });
        }
        maps.push(m);
    }
    Ok(if left {
        Value::Left(LeftAction::new(&base, fibers, maps)?)
    } else {
        Value::Right(RightAction::new(&base, fibers, maps)?)
    })
}

/// Split a `(x,y)` pair at the top-level comma (labels may contain nested
/// parentheses and commas).
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0usize;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

fn parse_profunctor(
    ws: &Workspace,
    base_name: &str,
    body: &[(usize, String)],
    path: &str,
    limits: &Limits,
) -> Result<EndoProfunctor> {
    let base = ws.category(base_name)?;
    let n = base.n_objects();
    let mut fibers: Vec<Option<FinSet>> = vec![None; n * n];
    struct RawMaps {
        lact: HashMap<(usize, usize, usize), usize>,
        ract: HashMap<(usize, usize, usize), usize>,
    }
    let mut raw = RawMaps { lact: HashMap::new(), ract: HashMap::new() };
    for (line, l) in body {
        let perr = |msg: String| CliError::Parse { path: path.into(), line: *line, msg };
        if let Some(rest) = l.strip_prefix("at ") {
            let (pair, elems) =
                rest.split_once(':').ok_or_else(|| perr("expected `at (x,y): e …`".into()))?;
            let (x, y) = split_pair(pair.trim())
                .ok_or_else(|| perr("expected an `(x,y)` object pair".into()))?;
            let xo = base.object_id(x.trim())?;
            let yo = base.object_id(y.trim())?;
            let labels: Vec<String> = elems.split_whitespace().map(String::from).collect();
            if labels.len() > limits.max_fiber {
                return Err(CliError::Engine(actegory_core::Error::size(
                    format!("fiber over ({},{})", x.trim(), y.trim()),
                    labels.len(),
                    limits.max_fiber,
                )));
            }
            fibers[xo * n + yo] = Some(FinSet::new(labels).map_err(CliError::Engine)?);
        } else if let Some(rest) = l.strip_prefix("lact ") {
            let (head, map) =
                rest.split_once(':').ok_or_else(|| perr("expected `lact <u> <y>: e -> e'`".into()))?;
            let hw: Vec<&str> = head.split_whitespace().collect();
            let [u, y] = hw.as_slice() else {
                return Err(perr("expected `lact <u> <y>: e -> e'`".into()));
            };
            if u.starts_with("id_") {
                return Err(perr("identity action maps are implied".into()));
            }
            let ua = base.arrow_id(u)?;
            let yo = base.object_id(y)?;
            let (from, to) =
                map.split_once("->").ok_or_else(|| perr("expected `e -> e'`".into()))?;
            let from_o = base.arrow(ua).tgt * n + yo;
            let to_o = base.arrow(ua).src * n + yo;
            let fe = fibers[from_o]
                .as_ref()
                .and_then(|f| f.index_of(from.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", from.trim())))?;
            let te = fibers[to_o]
                .as_ref()
                .and_then(|f| f.index_of(to.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", to.trim())))?;
            raw.lact.insert((ua, yo, fe), te);
        } else if let Some(rest) = l.strip_prefix("ract ") {
            let (head, map) =
                rest.split_once(':').ok_or_else(|| perr("expected `ract <x> <v>: e -> e'`".into()))?;
            let hw: Vec<&str> = head.split_whitespace().collect();
            let [x, v] = hw.as_slice() else {
                return Err(perr("expected `ract <x> <v>: e -> e'`".into()));
            };
            if v.starts_with("id_") {
                return Err(perr("identity action maps are implied".into()));
            }
            let xo = base.object_id(x)?;
            let va = base.arrow_id(v)?;
            let (from, to) =
                map.split_once("->").ok_or_else(|| perr("expected `e -> e'`".into()))?;
            let from_o = xo * n + base.arrow(va).src;
            let to_o = xo * n + base.arrow(va).tgt;
            let fe = fibers[from_o]
                .as_ref()
                .and_then(|f| f.index_of(from.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", from.trim())))?;
            let te = fibers[to_o]
                .as_ref()
                .and_then(|f| f.index_of(to.trim()))
                .ok_or_else(|| perr(format!("unknown element `{}`", to.trim())))?;
            raw.ract.insert((xo, va, fe), te);
        } else {
            return Err(perr(format!("unknown profunctor line `{l}`")));
        }
    }
    let fibers: Vec<FinSet> = fibers.into_iter().map(|f| f.unwrap_or_else(FinSet::empty)).collect();
    // totality check, then assemble
    for u in 0..base.n_arrows() {
        if base.is_identity(u) {
            continue;
        }
        for y in 0..n {
            let from = base.arrow(u).tgt * n + y;
            for e in 0..fibers[from].len() {
                if !raw.lact.contains_key(&(u, y, e)) {
                    return Err(CliError::Parse {
                        path: path.into(),
                        line: 0,
                        msg: format!(
                            "profunctor missing `lact {} {}: {} -> …`",
                            base.arrow(u).id,
                            base.object_label(y),
                            fibers[from].label(e)
                        ),
                    });
                }
            }
            let _ = from;
        }
        for x in 0..n {
            let from = x * n + base.arrow(u).src;
            for e in 0..fibers[from].len() {
                if !raw.ract.contains_key(&(x, u, e)) {
                    return Err(CliError::Parse {
                        path: path.into(),
                        line: 0,
                        msg: format!(
                            "profunctor missing `ract {} {}: {} -> …`",
                            base.object_label(x),
                            base.arrow(u).id,
                            fibers[from].label(e)
                        ),
                    });
                }
            }
        }
    }
    let fibers2 = fibers.clone();
    let base2 = base.clone();
    let lact = move |u: usize, y: usize| -> Vec<usize> {
        let from = base2.arrow(u).tgt * n + y;
        (0..fibers2[from].len())
            .map(|e| {
                if base2.is_identity(u) {
                    e
                } else {
                    raw.lact[&(u, y, e)]
                }
            })
            .collect()
    };
    let fibers3 = fibers.clone();
    let base3 = base.clone();
    let ract_map: HashMap<(usize, usize, usize), usize> = raw.ract.clone();
    let ract = move |x: usize, v: usize| -> Vec<usize> {
        let from = x * n + base3.arrow(v).src;
        (0..fibers3[from].len())
            .map(|e| {
                if base3.is_identity(v) {
                    e
                } else {
                    ract_map[&(x, v, e)]
                }
            })
            .collect()
    };
    Ok(build_endo(&base, limits, |x, y| fibers[x * n + y].clone(), lact, ract)?)
}

// ------------------------------------------------------------- printing

pub fn print_category(cat: &Cat) -> String {
    print_category_as(&cat.name.clone(), cat)
}

/// Arrow ids as the parser will know them: identities of derived categories
/// carry construction-specific ids, but the format always names them
/// `id_<object>`.
fn arrow_name(cat: &Cat, a: usize) -> String {
    if cat.is_identity(a) {
        format!("id_{}", cat.object_label(cat.arrow(a).src))
    } else {
        cat.arrow(a).id.clone()
    }
}

pub fn print_category_as(name: &str, cat: &Cat) -> String {
    let mut out = format!("category {name}\n");
    out.push_str("  objects");
    for o in cat.objects() {
        out.push(' ');
        out.push_str(o);
    }
    out.push('\n');
    for a in 0..cat.n_arrows() {
        if cat.is_identity(a) {
            continue;
        }
        let arr = cat.arrow(a);
        out.push_str(&format!(
            "  arrow {} : {} -> {}\n",
            arr.id,
            cat.object_label(arr.src),
            cat.object_label(arr.tgt)
        ));
    }
    for g in 0..cat.n_arrows() {
        for f in 0..cat.n_arrows() {
            if cat.is_identity(g) || cat.is_identity(f) {
                continue;
            }
            if let Some(h) = cat.try_comp(g, f) {
                out.push_str(&format!(
                    "  compose {} {} = {}\n",
                    cat.arrow(g).id,
                    cat.arrow(f).id,
                    arrow_name(cat, h)
                ));
            }
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_functor(name: &str, f: &FunctorMap) -> String {
    print_functor_as(name, f, &f.dom.name, &f.cod.name)
}

pub fn print_functor_as(name: &str, f: &FunctorMap, dom: &str, cod: &str) -> String {
    let mut out = format!("functor {name} : {dom} -> {cod}\n");
    for (o, &img) in f.obj_map.iter().enumerate() {
        out.push_str(&format!(
            "  obj {} -> {}\n",
            f.dom.object_label(o),
            f.cod.object_label(img)
        ));
    }
    for (a, &img) in f.arrow_map.iter().enumerate() {
        if f.dom.is_identity(a) {
            continue;
        }
        out.push_str(&format!(
            "  arrow {} -> {}\n",
            f.dom.arrow(a).id,
            arrow_name(&f.cod, img)
        ));
    }
    out.push_str("end\n");
    out
}

pub fn print_left(name: &str, a: &LeftAction) -> String {
    print_left_as(name, a, &a.base().name)
}

pub fn print_left_as(name: &str, a: &LeftAction, base_name: &str) -> String {
    let base = a.base();
    let mut out = format!("leftaction {name} on {base_name}\n");
    for o in 0..base.n_objects() {
        out.push_str(&format!("  at {}:", base.object_label(o)));
        for l in a.fiber(o).labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    for ar in 0..base.n_arrows() {
        if base.is_identity(ar) {
            continue;
        }
        let arr = base.arrow(ar);
        for e in 0..a.fiber(arr.tgt).len() {
            out.push_str(&format!(
                "  act {}: {} -> {}\n",
                arr.id,
                a.fiber(arr.tgt).label(e),
                a.fiber(arr.src).label(a.apply(ar, e))
            ));
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_right(name: &str, m: &RightAction) -> String {
    print_right_as(name, m, &m.base().name)
}

pub fn print_right_as(name: &str, m: &RightAction, base_name: &str) -> String {
    let base = m.base();
    let mut out = format!("rightaction {name} on {base_name}\n");
    for o in 0..base.n_objects() {
        out.push_str(&format!("  at {}:", base.object_label(o)));
        for l in m.fiber(o).labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    for ar in 0..base.n_arrows() {
        if base.is_identity(ar) {
            continue;
        }
        let arr = base.arrow(ar);
        for e in 0..m.fiber(arr.src).len() {
            out.push_str(&format!(
                "  act {}: {} -> {}\n",
                arr.id,
                m.fiber(arr.src).label(e),
                m.fiber(arr.tgt).label(m.apply(ar, e))
            ));
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_profunctor(name: &str, h: &EndoProfunctor) -> String {
    print_profunctor_as(name, h, &h.base().name)
}

pub fn print_profunctor_as(name: &str, h: &EndoProfunctor, base_name: &str) -> String {
    let base = h.base();
    let n = base.n_objects();
    let mut out = format!("profunctor {name} on {base_name}\n");
    for x in 0..n {
        for y in 0..n {
            out.push_str(&format!(
                "  at ({},{}):",
                base.object_label(x),
                base.object_label(y)
            ));
            for l in h.fiber(x, y).labels() {
                out.push(' ');
                out.push_str(l);
            }
            out.push('\n');
        }
    }
    for u in 0..base.n_arrows() {
        if base.is_identity(u) {
            continue;
        }
        let arr = base.arrow(u);
        for y in 0..n {
            for e in 0..h.fiber(arr.tgt, y).len() {
                out.push_str(&format!(
                    "  lact {} {}: {} -> {}\n",
                    arr.id,
                    base.object_label(y),
                    h.fiber(arr.tgt, y).label(e),
                    h.fiber(arr.src, y).label(h.lact(u, y, e))
                ));
            }
        }
        for x in 0..n {
            for e in 0..h.fiber(x, arr.src).len() {
                out.push_str(&format!(
                    "  ract {} {}: {} -> {}\n",
                    base.object_label(x),
                    arr.id,
                    h.fiber(x, arr.src).label(e),
                    h.fiber(x, arr.tgt).label(h.ract(x, u, e))
                ));
            }
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_value(name: &str, v: &Value) -> String {
    match v {
        Value::Cat(c) => print_category(c),
        Value::Functor(f) => print_functor(name, f),
        Value::Left(a) => print_left(name, a),
        Value::Right(m) => print_right(name, m),
        Value::Pro(h) => print_profunctor(name, h),
    }
}
