//! Prefix expression evaluation over workspace names. Operators mirror the
//! engine's operators; nesting supplies intermediate values, for example
//! `(diamondL (iL A))` or `(end (harrow M N))`.

use actegory_core::action::{self, LeftAction, RightAction};
use actegory_core::catover::{self, OverCat};
use actegory_core::fincat::{FinSet, FunctorMap};
use actegory_core::funpred::{self, PartialFunctor, PartialObject, PredEnv};
use actegory_core::profunctor::{self, EndoProfunctor};
use actegory_core::Limits;

use crate::workspace::{Value, Workspace};
use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Sym(String),
    List(Vec<Expr>),
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut tokens = tokenize(src);
    let e = parse_expr(&mut tokens)?;
    if !tokens.is_empty() {
        return Err(CliError::Expr(format!("trailing input after expression: {tokens:?}")));
    }
    Ok(e)
}

fn tokenize(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in src.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out.reverse();
    out
}

fn parse_expr(tokens: &mut Vec<String>) -> Result<Expr> {
    match tokens.pop() {
        None => Err(CliError::Expr("unexpected end of expression".into())),
        Some(t) if t == "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.last().map(String::as_str) {
                    Some(")") => {
                        tokens.pop();
                        return Ok(Expr::List(items));
                    }
                    Some(_) => items.push(parse_expr(tokens)?),
                    None => return Err(CliError::Expr("unbalanced parentheses".into())),
                }
            }
        }
        Some(t) if t == ")" => Err(CliError::Expr("unexpected `)`".into())),
        Some(t) => Ok(Expr::Sym(t)),
    }
}

/// What an expression evaluates to.
#[derive(Debug, Clone)]
pub enum Eval {
    Left(LeftAction),
    Right(RightAction),
    Pro(EndoProfunctor),
    Over(OverCat),
    Set(FinSet),
    Functor(FunctorMap),
    Bool(bool),
    Text(String),
}

pub fn eval(ws: &Workspace, e: &Expr, limits: &Limits) -> Result<Eval> {
    match e {
        Expr::Sym(name) => Ok(match ws.get(name)? {
            Value::Cat(c) => Eval::Over(OverCat::identity(c)),
            Value::Functor(f) => Eval::Functor(f.clone()),
            Value::Left(a) => Eval::Left(a.clone()),
            Value::Right(m) => Eval::Right(m.clone()),
            Value::Pro(h) => Eval::Pro(h.clone()),
        }),
        Expr::List(items) => {
            let [Expr::Sym(op), args @ ..] = items.as_slice() else {
                return Err(CliError::Expr("expected `(op args…)`".into()));
            };
            apply(ws, op, args, limits)
        }
    }
}

fn want_left(v: Eval) -> Result<LeftAction> {
    match v {
        Eval::Left(a) => Ok(a),
        other => Err(CliError::Expr(format!("expected a left action, got {}", kind(&other)))),
    }
}

fn want_right(v: Eval) -> Result<RightAction> {
    match v {
        Eval::Right(m) => Ok(m),
        other => Err(CliError::Expr(format!("expected a right action, got {}", kind(&other)))),
    }
}

fn want_pro(v: Eval) -> Result<EndoProfunctor> {
    match v {
        Eval::Pro(h) => Ok(h),
        other => Err(CliError::Expr(format!("expected a profunctor, got {}", kind(&other)))),
    }
}

fn want_functor(v: Eval) -> Result<FunctorMap> {
    match v {
        Eval::Functor(f) => Ok(f),
        other => Err(CliError::Expr(format!("expected a functor, got {}", kind(&other)))),
    }
}

/// A functor coerces to an object of Cat/X over its codomain.
fn want_over(v: Eval) -> Result<OverCat> {
    match v {
        Eval::Over(p) => Ok(p),
        Eval::Functor(f) => Ok(OverCat::new(f)?),
        other => Err(CliError::Expr(format!("expected an object of Cat/X, got {}", kind(&other)))),
    }
}

pub fn kind(v: &Eval) -> &'static str {
    match v {
        Eval::Left(_) => "leftaction",
        Eval::Right(_) => "rightaction",
        Eval::Pro(_) => "profunctor",
        Eval::Over(_) => "catover object",
        Eval::Set(_) => "set",
        Eval::Functor(_) => "functor",
        Eval::Bool(_) => "boolean",
        Eval::Text(_) => "report",
    }
}

fn arity(op: &str, args: &[Expr], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(CliError::Arity(format!("`{op}` takes {n} arguments, got {}", args.len())));
    }
    Ok(())
}

fn apply(ws: &Workspace, op: &str, args: &[Expr], l: &Limits) -> Result<Eval> {
    let ev = |e: &Expr| eval(ws, e, l);
    match op {
        "comp" => {
            arity(op, args, 2)?;
            let a = want_left(ev(&args[0])?)?;
            let m = want_right(ev(&args[1])?)?;
            Ok(Eval::Right(action::complement(&a, &m, l)?))
        }
        "oodot" => {
            arity(op, args, 2)?;
            let a = want_left(ev(&args[0])?)?;
            let n = want_right(ev(&args[1])?)?;
            Ok(Eval::Right(action::oodot(&a, &n, l)?))
        }
        "tri" => {
            arity(op, args, 2)?;
            let n = want_right(ev(&args[0])?)?;
            let m = want_right(ev(&args[1])?)?;
            Ok(Eval::Left(action::triangleright(&n, &m, l)?))
        }
        "tensor" => {
            arity(op, args, 2)?;
            match (ev(&args[0])?, ev(&args[1])?) {
                (Eval::Left(a), Eval::Left(b)) => Ok(Eval::Left(action::tensor(&a, &b)?)),
                (Eval::Right(m), Eval::Right(n)) => Ok(Eval::Right(action::tensor_right(&m, &n)?)),
                _ => Err(CliError::Expr("tensor needs two actions of one variance".into())),
            }
        }
        "ihom" => {
            arity(op, args, 2)?;
            match (ev(&args[0])?, ev(&args[1])?) {
                (Eval::Left(a), Eval::Left(b)) => Ok(Eval::Left(action::internal_hom(&a, &b, l)?)),
                (Eval::Right(m), Eval::Right(n)) => {
                    Ok(Eval::Right(action::internal_hom_right(&m, &n, l)?))
                }
                _ => Err(CliError::Expr("ihom needs two actions of one variance".into())),
            }
        }
        "star" => {
            arity(op, args, 2)?;
            let a = want_left(ev(&args[0])?)?;
            let m = want_right(ev(&args[1])?)?;
            Ok(Eval::Set(action::mixed_tensor(&a, &m, l)?))
        }
        "sub" => {
            arity(op, args, 2)?;
            let f = want_functor(ev(&args[0])?)?;
            match ev(&args[1])? {
                Eval::Left(a) => Ok(Eval::Left(action::substitute_left(&f, &a)?)),
                Eval::Right(m) => Ok(Eval::Right(action::substitute_right(&f, &m)?)),
                Eval::Pro(h) => Ok(Eval::Pro(profunctor::ddot_substitute(&f, &h, l)?)),
                other => Err(CliError::Expr(format!("cannot substitute into {}", kind(&other)))),
            }
        }
        "exists" => {
            arity(op, args, 2)?;
            let f = want_functor(ev(&args[0])?)?;
            match ev(&args[1])? {
                Eval::Left(a) => Ok(Eval::Left(action::exists_left(&f, &a, l)?)),
                Eval::Right(m) => Ok(Eval::Right(action::exists_right(&f, &m, l)?)),
                Eval::Pro(h) => Ok(Eval::Pro(profunctor::ddot_exists(&f, &h, l)?.0)),
                other => Err(CliError::Expr(format!("cannot quantify {}", kind(&other)))),
            }
        }
        "forall" => {
            arity(op, args, 2)?;
            let f = want_functor(ev(&args[0])?)?;
            match ev(&args[1])? {
                Eval::Left(a) => Ok(Eval::Left(action::forall_left(&f, &a, l)?)),
                Eval::Right(m) => Ok(Eval::Right(action::forall_right(&f, &m, l)?)),
                Eval::Pro(h) => Ok(Eval::Pro(profunctor::ddot_forall(&f, &h, l)?)),
                other => Err(CliError::Expr(format!("cannot quantify {}", kind(&other)))),
            }
        }
        "diamondL" => {
            arity(op, args, 1)?;
            let p = want_over(ev(&args[0])?)?;
            Ok(Eval::Left(catover::diamond_left(&p, l)?))
        }
        "diamondR" => {
            arity(op, args, 1)?;
            let p = want_over(ev(&args[0])?)?;
            Ok(Eval::Right(catover::diamond_right(&p, l)?))
        }
        "squareL" => {
            arity(op, args, 1)?;
            let p = want_over(ev(&args[0])?)?;
            Ok(Eval::Left(catover::square_left(&p, l)?))
        }
        "squareR" => {
            arity(op, args, 1)?;
            let p = want_over(ev(&args[0])?)?;
            Ok(Eval::Right(catover::square_right(&p, l)?))
        }
        "iL" => {
            arity(op, args, 1)?;
            let a = want_left(ev(&args[0])?)?;
            Ok(Eval::Over(catover::elements_left(&a, l)?.over))
        }
        "iR" => {
            arity(op, args, 1)?;
            let m = want_right(ev(&args[0])?)?;
            Ok(Eval::Over(catover::elements_right(&m, l)?.over))
        }
        "outer" => {
            arity(op, args, 2)?;
            let a = want_left(ev(&args[0])?)?;
            let m = want_right(ev(&args[1])?)?;
            Ok(Eval::Pro(profunctor::outer_product(&a, &m, l)?))
        }
        "harrow" => {
            arity(op, args, 2)?;
            let m = want_right(ev(&args[0])?)?;
            let n = want_right(ev(&args[1])?)?;
            Ok(Eval::Pro(profunctor::hom_arrow(&m, &n, l)?))
        }
        "comprehend" => {
            arity(op, args, 1)?;
            let h = want_pro(ev(&args[0])?)?;
            Ok(Eval::Over(profunctor::comprehend(&h, l)?.over))
        }
        "diamond" => {
            arity(op, args, 1)?;
            let p = want_over(ev(&args[0])?)?;
            Ok(Eval::Pro(profunctor::diamond(&p, l)?.0))
        }
        "end" => {
            arity(op, args, 1)?;
            let h = want_pro(ev(&args[0])?)?;
            Ok(Eval::Set(profunctor::end(&h, l)?.set))
        }
        "coend" => {
            arity(op, args, 1)?;
            let h = want_pro(ev(&args[0])?)?;
            Ok(Eval::Set(profunctor::coend(&h, l)?.set))
        }
        "scoend" => {
            arity(op, args, 1)?;
            let h = want_pro(ev(&args[0])?)?;
            Ok(Eval::Set(profunctor::strong_coend(&h, l)?))
        }
        "lim" => {
            arity(op, args, 2)?;
            let m = want_right(ev(&args[0])?)?;
            let f = want_functor(ev(&args[1])?)?;
            Ok(Eval::Text(print_partial(&f, funpred::weighted_limit(&m, &f, l)?)))
        }
        "colim" => {
            arity(op, args, 2)?;
            let a = want_left(ev(&args[0])?)?;
            let f = want_functor(ev(&args[1])?)?;
            Ok(Eval::Text(print_partial(&f, funpred::weighted_colimit(&a, &f, l)?)))
        }
        "kanL" => {
            arity(op, args, 2)?;
            let f = want_functor(ev(&args[0])?)?;
            let g = want_functor(ev(&args[1])?)?;
            match funpred::kan_left(&f, &g, l)? {
                PartialFunctor::Exists { functor } => Ok(Eval::Functor(functor)),
                PartialFunctor::Absent { at, reason } => Ok(Eval::Text(format!(
                    "does not exist at `{}`: {reason}",
                    f.cod.object_label(at)
                ))),
            }
        }
        "kanR" => {
            arity(op, args, 2)?;
            let f = want_functor(ev(&args[0])?)?;
            let g = want_functor(ev(&args[1])?)?;
            match funpred::kan_right(&f, &g, l)? {
                PartialFunctor::Exists { functor } => Ok(Eval::Functor(functor)),
                PartialFunctor::Absent { at, reason } => Ok(Eval::Text(format!(
                    "does not exist at `{}`: {reason}",
                    f.cod.object_label(at)
                ))),
            }
        }
        "ff" => {
            arity(op, args, 1)?;
            let f = want_functor(ev(&args[0])?)?;
            let env = PredEnv::standard(&f, l)?;
            Ok(Eval::Text(print_report(&funpred::is_fully_faithful(&f, &env, l)?)))
        }
        "absdense" => {
            arity(op, args, 1)?;
            let f = want_functor(ev(&args[0])?)?;
            let env = PredEnv::standard(&f, l)?;
            Ok(Eval::Text(print_report(&funpred::is_absolutely_dense(&f, &env, l)?)))
        }
        "dense" => {
            arity(op, args, 1)?;
            let f = want_functor(ev(&args[0])?)?;
            let left = funpred::is_left_dense(&f, l)?;
            let right = funpred::is_right_dense(&f, l)?;
            Ok(Eval::Text(format!("{}\n{}", print_report(&left), print_report(&right))))
        }
        "final" => {
            arity(op, args, 1)?;
            let f = want_functor(ev(&args[0])?)?;
            let env = PredEnv::standard(&f, l)?;
            let fin = funpred::is_final(&f, &env, l)?;
            let ini = funpred::is_initial(&f, &env, l)?;
            Ok(Eval::Text(format!("{}\n{}", print_report(&fin), print_report(&ini))))
        }
        "adjunctible" => {
            arity(op, args, 1)?;
            let f = want_functor(ev(&args[0])?)?;
            let (lok, ltab) = funpred::is_left_adjunctible(&f, l)?;
            let (rok, rtab) = funpred::is_right_adjunctible(&f, l)?;
            let fmt = |tab: &[Option<usize>]| {
                tab.iter()
                    .enumerate()
                    .map(|(y, t)| match t {
                        Some(x) => format!("{} ↦ {}", f.cod.object_label(y), f.dom.object_label(*x)),
                        None => format!("{} ↦ ∅", f.cod.object_label(y)),
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok(Eval::Text(format!(
                "left adjunctible: {lok} [{}]\nright adjunctible: {rok} [{}]",
                fmt(&ltab),
                fmt(&rtab)
            )))
        }
        "repL" => {
            arity(op, args, 2)?;
            let (cat, obj) = cat_and_object(ws, args, l)?;
            Ok(Eval::Left(LeftAction::representable(&cat, obj)?))
        }
        "repR" => {
            arity(op, args, 2)?;
            let (cat, obj) = cat_and_object(ws, args, l)?;
            Ok(Eval::Right(RightAction::representable(&cat, obj)?))
        }
        "homp" => {
            arity(op, args, 1)?;
            let Expr::Sym(name) = &args[0] else {
                return Err(CliError::Expr("homp takes a category name".into()));
            };
            let cat = ws.category(name)?;
            Ok(Eval::Pro(profunctor::hom_profunctor(&cat, l)?))
        }
        "idp" => {
            arity(op, args, 1)?;
            let Expr::Sym(name) = &args[0] else {
                return Err(CliError::Expr("idp takes a category name".into()));
            };
            let cat = ws.category(name)?;
            Ok(Eval::Over(OverCat::identity(&cat)))
        }
        other => Err(CliError::Expr(format!("unknown operator `{other}`"))),
    }
}

fn cat_and_object(ws: &Workspace, args: &[Expr], _l: &Limits) -> Result<(actegory_core::fincat::Cat, usize)> {
    let Expr::Sym(cname) = &args[0] else {
        return Err(CliError::Expr("expected a category name".into()));
    };
    let Expr::Sym(oname) = &args[1] else {
        return Err(CliError::Expr("expected an object name".into()));
    };
    let cat = ws.category(cname)?;
    let obj = cat.object_id(oname)?;
    Ok((cat, obj))
}

fn print_partial(f: &FunctorMap, p: PartialObject) -> String {
    match p {
        PartialObject::Exists { object, .. } => {
            format!("exists: {}", f.cod.object_label(object))
        }
        PartialObject::Absent { reason } => format!("does not exist: {reason}"),
    }
}

fn print_report(r: &funpred::PredicateReport) -> String {
    let mut out = format!("{}: {}", r.predicate, r.holds);
    for c in &r.checks {
        out.push_str(&format!("\n  {} [{}]: {}", c.name, if c.exact { "exact" } else { "consequence" }, c.value));
    }
    if let Some(d) = &r.disagreement {
        out.push_str(&format!("\n  DISAGREEMENT: {d}"));
    }
    out
}

/// Print an evaluation result in the text formats.
pub fn print_eval(v: &Eval) -> String {
    match v {
        Eval::Left(a) => crate::format::print_left("result", a),
        Eval::Right(m) => crate::format::print_right("result", m),
        Eval::Pro(h) => crate::format::print_profunctor("result", h),
        Eval::Over(p) => format!(
            "{}{}",
            crate::format::print_category(&p.total),
            crate::format::print_functor("projection", &p.proj)
        ),
        Eval::Set(s) => {
            let mut out = String::from("set:");
            for l in s.labels() {
                out.push(' ');
                out.push_str(l);
            }
            out.push('\n');
            out
        }
        Eval::Functor(f) => crate::format::print_functor(&f.name.clone(), f),
        Eval::Bool(b) => format!("{b}\n"),
        Eval::Text(t) => format!("{t}\n"),
    }
}
