//! The internal language: typing contexts (possibly constrained by an
//! equation), term ASTs, elaboration of terms into arrows of the set
//! model, substitution with its constraint obligations, and a small
//! textual syntax for terms, contexts, and types.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::listobj::{self, ListKit};
use crate::setmodel::{
    arrows_equal, compose, constant, pairing, prod, proj, Arrow, Budget, Elem, ObjExpr,
};

/// What a term applies: a registered arrow or one of the builtin names.
#[derive(Clone, Debug)]
pub enum Callee {
    Arrow(Arrow),
    Builtin(String),
}

#[derive(Clone, Debug)]
pub enum Term {
    Var(String),
    App(Callee, Vec<Term>),
    Tuple(Vec<Term>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(n) => write!(f, "{n}"),
            Term::App(callee, args) => {
                let name = match callee {
                    Callee::Arrow(a) => a.describe(),
                    Callee::Builtin(n) => n.clone(),
                };
                if args.is_empty() {
                    write!(f, "{name}")
                } else {
                    let parts: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                    write!(f, "{name}({})", parts.join(", "))
                }
            }
            Term::Tuple(args) => {
                let parts: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

/// A typing context: ordered variables plus optional equational
/// constraints typed over the unconstrained variable list.
#[derive(Clone, Debug, Default)]
pub struct Context {
    pub vars: Vec<(String, ObjExpr)>,
    pub constraints: Vec<(Term, Term)>,
}

/// Named constants and arrows available to terms beyond the builtins.
#[derive(Clone, Debug, Default)]
pub struct Symbols {
    pub consts: Vec<(String, Elem, ObjExpr)>,
    pub arrows: Vec<(String, Arrow)>,
}

impl Symbols {
    pub fn lookup_const(&self, name: &str) -> Option<(&Elem, &ObjExpr)> {
        self.consts.iter().find(|(n, _, _)| n == name).map(|(_, e, t)| (e, t))
    }

    pub fn lookup_arrow(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }
}

pub const BUILTINS: &[&str] = &[
    "0", "s", "P", "add", "mul", "monus", "min", "max", "absdiff", "ite", "nil", "cons",
    "len", "tr", "tail", "zerothDef", "nthDef", "concat", "idUntil",
];

impl Context {
    /// The underlying product of the variable types, before constraints.
    pub fn base(&self) -> ObjExpr {
        prod(self.vars.iter().map(|(_, t)| t.clone()).collect())
    }

    /// `[C]`: the base wrapped in one Sub per constraint, in order.
    pub fn carrier(&self, syms: &Symbols) -> Result<ObjExpr> {
        let mut cur = self.base();
        let unconstrained = Context { vars: self.vars.clone(), constraints: vec![] };
        for (l, r) in &self.constraints {
            let (la, ty) = elaborate(l, &unconstrained, syms, None)?;
            let (ra, _) = elaborate(r, &unconstrained, syms, Some(&ty))?;
            let lhs = la.retyped(cur.clone(), la.cod.clone());
            let rhs = ra.retyped(cur.clone(), ra.cod.clone());
            cur = ObjExpr::sub(cur, lhs, rhs)?;
        }
        Ok(cur)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }
}

fn expect_type(found: &ObjExpr, expected: Option<&ObjExpr>, what: &str) -> Result<()> {
    if let Some(exp) = expected {
        if found != exp {
            return Err(Error::Type(format!("{what} has type {found}, expected {exp}")));
        }
    }
    Ok(())
}

fn list_elem_type(t: &ObjExpr, what: &str) -> Result<ObjExpr> {
    match t {
        ObjExpr::ListOf(x) => Ok((**x).clone()),
        other => Err(Error::Type(format!("{what} must be a list, got {other}"))),
    }
}

fn arity(name: &str, args: &[Term], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::Type(format!("{name} takes {n} arguments, got {}", args.len())));
    }
    Ok(())
}

/// Elaborates a term over the unconstrained base of the context into an
/// arrow (dom = base product) and its type; `expected` is a checking
/// hint needed by type-ambiguous terms such as `nil`.
pub fn elaborate(
    t: &Term,
    ctx: &Context,
    syms: &Symbols,
    expected: Option<&ObjExpr>,
) -> Result<(Arrow, ObjExpr)> {
    let base = ctx.base();
    match t {
        Term::Var(name) => {
            if let Some(i) = ctx.var_index(name) {
                let ty = ctx.vars[i].1.clone();
                let arrow = if ctx.vars.len() == 1 {
                    crate::setmodel::identity(&base)
                } else {
                    proj(&base, i)?
                };
                expect_type(&ty, expected, name)?;
                Ok((arrow, ty))
            } else if let Some((e, ty)) = syms.lookup_const(name) {
                expect_type(ty, expected, name)?;
                Ok((constant(&base, ty, e.clone()), ty.clone()))
            } else {
                Err(Error::UnboundVar(name.clone()))
            }
        }
        Term::Tuple(args) => {
            let hints: Vec<Option<&ObjExpr>> = match expected {
                Some(ObjExpr::Prod(comps)) if comps.len() == args.len() => {
                    comps.iter().map(Some).collect()
                }
                _ => vec![None; args.len()],
            };
            let mut arrows = Vec::new();
            let mut types = Vec::new();
            for (a, hint) in args.iter().zip(hints) {
                let (arr, ty) = elaborate(a, ctx, syms, hint)?;
                arrows.push(arr);
                types.push(ty);
            }
            let ty = prod(types);
            expect_type(&ty, expected, "tuple")?;
            Ok((pairing(&arrows)?, ty))
        }
        Term::App(Callee::Arrow(f), args) => {
            let arr = apply_arrow(f, args, ctx, syms)?;
            expect_type(&f.cod, expected, &f.describe())?;
            Ok((arr, f.cod.clone()))
        }
        Term::App(Callee::Builtin(name), args) => {
            if let Some(f) = syms.lookup_arrow(name) {
                let f = f.clone();
                let arr = apply_arrow(&f, args, ctx, syms)?;
                expect_type(&f.cod, expected, name)?;
                return Ok((arr, f.cod.clone()));
            }
            let (arr, ty) = elaborate_builtin(name, args, ctx, syms, expected)?;
            expect_type(&ty, expected, name)?;
            Ok((arr, ty))
        }
    }
}

fn apply_arrow(f: &Arrow, args: &[Term], ctx: &Context, syms: &Symbols) -> Result<Arrow> {
    // tuple flattening: n separate arguments against a product domain
    // and a single product-typed argument are the same term
    let dom_comps: Vec<ObjExpr> = match &f.dom {
        ObjExpr::Prod(comps) => comps.clone(),
        other => vec![other.clone()],
    };
    let arg_arrow = if args.len() == dom_comps.len() && args.len() > 1 {
        let mut arrows = Vec::new();
        for (a, want) in args.iter().zip(&dom_comps) {
            let (arr, _) = elaborate(a, ctx, syms, Some(want))?;
            arrows.push(arr);
        }
        pairing(&arrows)?
    } else if args.len() == 1 {
        let (arr, _) = elaborate(&args[0], ctx, syms, Some(&f.dom))?;
        arr
    } else {
        return Err(Error::Type(format!(
            "{} expects {} arguments, got {}",
            f.describe(),
            dom_comps.len(),
            args.len()
        )));
    };
    // the elaborated argument lands in the representation of f.dom
    let f_loose = f.retyped(arg_arrow.cod.clone(), f.cod.clone());
    compose(&f_loose, &arg_arrow)
}

fn elaborate_builtin(
    name: &str,
    args: &[Term],
    ctx: &Context,
    syms: &Symbols,
    expected: Option<&ObjExpr>,
) -> Result<(Arrow, ObjExpr)> {
    let base = ctx.base();
    let nat = ObjExpr::Nat;
    match name {
        "0" => {
            arity(name, args, 0)?;
            Ok((constant(&base, &nat, Elem::num(0)), nat))
        }
        "s" | "P" => {
            arity(name, args, 1)?;
            let (a, _) = elaborate(&args[0], ctx, syms, Some(&nat))?;
            let f = if name == "s" { arith::NnoKit::new().succ } else { arith::pred() };
            Ok((compose(&f, &a)?, nat))
        }
        "add" | "mul" | "monus" | "min" | "max" | "absdiff" | "idUntil" => {
            arity(name, args, 2)?;
            let (a, _) = elaborate(&args[0], ctx, syms, Some(&nat))?;
            let (b, _) = elaborate(&args[1], ctx, syms, Some(&nat))?;
            let f = match name {
                "add" => arith::add(),
                "mul" => arith::mul(),
                "monus" => arith::monus(),
                "min" => arith::min_op(),
                "max" => arith::max_op(),
                "absdiff" => arith::absdiff(),
                _ => arith::id_until(),
            };
            Ok((compose(&f, &pairing(&[a, b])?)?, nat))
        }
        "ite" => {
            arity(name, args, 3)?;
            let (a, b_ty) = elaborate(&args[0], ctx, syms, None)?;
            let (b, _) = elaborate(&args[1], ctx, syms, Some(&b_ty))?;
            let (g, _) = elaborate(&args[2], ctx, syms, Some(&nat))?;
            Ok((compose(&arith::ite(&b_ty), &pairing(&[a, b, g])?)?, b_ty))
        }
        "nil" => {
            arity(name, args, 0)?;
            let x = match expected {
                Some(t) => list_elem_type(t, "nil")?,
                None => {
                    return Err(Error::Type(
                        "cannot infer the element type of nil here".into(),
                    ))
                }
            };
            let lx = ObjExpr::list_of(x);
            Ok((constant(&base, &lx, Elem::Seq(vec![])), lx))
        }
        "cons" => {
            arity(name, args, 2)?;
            let x_hint = expected.and_then(|t| list_elem_type(t, "cons").ok());
            let (a, x) = elaborate(&args[0], ctx, syms, x_hint.as_ref())?;
            let lx = ObjExpr::list_of(x.clone());
            let (l, _) = elaborate(&args[1], ctx, syms, Some(&lx))?;
            let kit = ListKit::new(&x);
            Ok((compose(&kit.cons, &pairing(&[a, l])?)?, lx))
        }
        "len" | "tr" => {
            arity(name, args, 1)?;
            let hint = if name == "tr" { expected } else { None };
            let (l, lt) = elaborate(&args[0], ctx, syms, hint)?;
            let x = list_elem_type(&lt, name)?;
            if name == "len" {
                Ok((compose(&listobj::len(&x), &l)?, nat))
            } else {
                Ok((compose(&listobj::tr(&x), &l)?, lt))
            }
        }
        "tail" => {
            arity(name, args, 2)?;
            let (n, _) = elaborate(&args[0], ctx, syms, Some(&nat))?;
            let (l, lt) = elaborate(&args[1], ctx, syms, expected)?;
            let x = list_elem_type(&lt, name)?;
            Ok((compose(&listobj::tail(&x), &pairing(&[n, l])?)?, lt))
        }
        "zerothDef" => {
            arity(name, args, 2)?;
            let (d, x) = elaborate(&args[0], ctx, syms, expected)?;
            let lx = ObjExpr::list_of(x.clone());
            let (l, _) = elaborate(&args[1], ctx, syms, Some(&lx))?;
            Ok((compose(&listobj::zeroth_def(&x), &pairing(&[d, l])?)?, x))
        }
        "nthDef" => {
            arity(name, args, 3)?;
            let (d, x) = elaborate(&args[0], ctx, syms, expected)?;
            let (n, _) = elaborate(&args[1], ctx, syms, Some(&nat))?;
            let lx = ObjExpr::list_of(x.clone());
            let (l, _) = elaborate(&args[2], ctx, syms, Some(&lx))?;
            Ok((compose(&listobj::nth_def(&x), &pairing(&[d, n, l])?)?, x))
        }
        "concat" => {
            arity(name, args, 2)?;
            let (a, lt) = elaborate(&args[0], ctx, syms, expected)?;
            let x = list_elem_type(&lt, name)?;
            let (b, _) = elaborate(&args[1], ctx, syms, Some(&lt))?;
            Ok((compose(&listobj::concat(&x), &pairing(&[a, b])?)?, lt))
        }
        other => Err(Error::UnboundVar(other.to_string())),
    }
}

/// The type of a term in a context.
pub fn typecheck(t: &Term, ctx: &Context, syms: &Symbols) -> Result<ObjExpr> {
    Ok(elaborate(t, ctx, syms, None)?.1)
}

/// The denotation `[C] -> type(t)`; the constrained carrier shares its
/// representation with the base, so the arrow is retyped onto it.
pub fn interpret(t: &Term, ctx: &Context, syms: &Symbols) -> Result<Arrow> {
    let (arr, ty) = elaborate(t, ctx, syms, None)?;
    let carrier = ctx.carrier(syms)?;
    Ok(arr.retyped(carrier, ty))
}

/// Term equality in a context: bounded extensional equality of the two
/// denotations over the (constraint-filtered) carrier.
pub fn terms_equal(
    t1: &Term,
    t2: &Term,
    ctx: &Context,
    syms: &Symbols,
    budget: &Budget,
) -> Result<bool> {
    let a1 = interpret(t1, ctx, syms)?;
    let a2 = interpret(t2, ctx, syms)?;
    Ok(arrows_equal(&a1, &a2, budget)?.equal)
}

/// A substitution: replacement terms (over the target context) for the
/// variables of a source context.
pub type Subst = BTreeMap<String, Term>;

fn replace(t: &Term, sigma: &Subst) -> Term {
    match t {
        Term::Var(n) => sigma.get(n).cloned().unwrap_or_else(|| t.clone()),
        Term::App(c, args) => {
            Term::App(c.clone(), args.iter().map(|a| replace(a, sigma)).collect())
        }
        Term::Tuple(args) => Term::Tuple(args.iter().map(|a| replace(a, sigma)).collect()),
    }
}

/// Capture-free substitution. Each replacement must typecheck at its
/// variable's type in the target context, and if the source context is
/// constrained, the substituted constraints must hold under the budget.
pub fn substitute(
    t: &Term,
    sigma: &Subst,
    c_src: &Context,
    c_tgt: &Context,
    syms: &Symbols,
    budget: &Budget,
) -> Result<Term> {
    for (name, ty) in &c_src.vars {
        if let Some(u) = sigma.get(name) {
            elaborate(u, c_tgt, syms, Some(ty))?;
        }
    }
    for (l, r) in &c_src.constraints {
        let ls = replace(l, sigma);
        let rs = replace(r, sigma);
        let la = interpret(&ls, c_tgt, syms)?;
        let ra = interpret(&rs, c_tgt, syms)?;
        let eq = arrows_equal(&la, &ra, budget)?;
        if let Some(cx) = eq.counterexample {
            return Err(Error::ConstraintViolated {
                constraint: format!("{l} = {r}"),
                witness: format!("{}: {} != {}", cx.input, cx.lhs, cx.rhs),
            });
        }
    }
    Ok(replace(t, sigma))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Pipe,
    Star,
    Eq,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, co) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '(' | ')' | '[' | ']' | ',' | ':' | '|' | '*' | '=' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBrack,
                    ']' => Tok::RBrack,
                    ',' => Tok::Comma,
                    ':' => Tok::Colon,
                    '|' => Tok::Pipe,
                    '*' => Tok::Star,
                    _ => Tok::Eq,
                };
                toks.push((tok, l, co));
            }
            c if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as u64))
                            .ok_or(Error::Parse {
                                line: l,
                                col: co,
                                msg: "numeral too large".into(),
                            })?;
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Num(n), l, co));
            }
            c if c.is_alphanumeric() || c == '_' || c == '\'' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '\'' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(s), l, co));
            }
            other => {
                return Err(Error::Parse {
                    line: l,
                    col: co,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(Lexer { toks, pos: 0, end: (line, col) })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|(_, l, c)| (*l, *c)).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err(format!("expected {what}")))
            }
        }
    }
}

fn numeral(mut n: u64) -> Term {
    let mut t = Term::App(Callee::Builtin("0".into()), vec![]);
    while n > 0 {
        t = Term::App(Callee::Builtin("s".into()), vec![t]);
        n -= 1;
    }
    t
}

fn parse_term_inner(lx: &mut Lexer) -> Result<Term> {
    match lx.next() {
        Some(Tok::Num(n)) => Ok(numeral(n)),
        Some(Tok::Ident(name)) => {
            if lx.peek() == Some(&Tok::LParen) {
                lx.next();
                let mut args = Vec::new();
                if lx.peek() != Some(&Tok::RParen) {
                    loop {
                        args.push(parse_term_inner(lx)?);
                        match lx.peek() {
                            Some(Tok::Comma) => {
                                lx.next();
                            }
                            _ => break,
                        }
                    }
                }
                lx.expect(Tok::RParen, "`)`")?;
                Ok(Term::App(Callee::Builtin(name), args))
            } else if BUILTINS.contains(&name.as_str()) {
                Ok(Term::App(Callee::Builtin(name), vec![]))
            } else {
                Ok(Term::Var(name))
            }
        }
        Some(Tok::LParen) => {
            let mut parts = vec![parse_term_inner(lx)?];
            while lx.peek() == Some(&Tok::Comma) {
                lx.next();
                parts.push(parse_term_inner(lx)?);
            }
            lx.expect(Tok::RParen, "`)`")?;
            if parts.len() == 1 {
                Ok(parts.pop().unwrap())
            } else {
                Ok(Term::Tuple(parts))
            }
        }
        Some(Tok::LBrack) => {
            let mut items = Vec::new();
            if lx.peek() != Some(&Tok::RBrack) {
                loop {
                    items.push(parse_term_inner(lx)?);
                    match lx.peek() {
                        Some(Tok::Comma) => {
                            lx.next();
                        }
                        _ => break,
                    }
                }
            }
            lx.expect(Tok::RBrack, "`]`")?;
            // [a, b] desugars to cons(a, cons(b, nil))
            let mut t = Term::App(Callee::Builtin("nil".into()), vec![]);
            for item in items.into_iter().rev() {
                t = Term::App(Callee::Builtin("cons".into()), vec![item, t]);
            }
            Ok(t)
        }
        _ => {
            lx.pos = lx.pos.saturating_sub(1);
            Err(lx.err("expected a term"))
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut lx = lex(text)?;
    let t = parse_term_inner(&mut lx)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after term"));
    }
    Ok(t)
}

fn parse_type_atom(lx: &mut Lexer, named: &[(String, ObjExpr)]) -> Result<ObjExpr> {
    match lx.next() {
        Some(Tok::Num(1)) => Ok(ObjExpr::Unit),
        Some(Tok::Ident(n)) if n == "N" => Ok(ObjExpr::Nat),
        Some(Tok::Ident(n)) if n == "L" => {
            lx.expect(Tok::LParen, "`(`")?;
            let inner = parse_type_inner(lx, named)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(ObjExpr::list_of(inner))
        }
        Some(Tok::Ident(n)) => named
            .iter()
            .find(|(name, _)| *name == n)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| {
                lx.pos = lx.pos.saturating_sub(1);
                lx.err(format!("unknown type `{n}`"))
            }),
        Some(Tok::LParen) => {
            let inner = parse_type_inner(lx, named)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        }
        _ => {
            lx.pos = lx.pos.saturating_sub(1);
            Err(lx.err("expected a type"))
        }
    }
}

fn parse_type_inner(lx: &mut Lexer, named: &[(String, ObjExpr)]) -> Result<ObjExpr> {
    let mut parts = vec![parse_type_atom(lx, named)?];
    while lx.peek() == Some(&Tok::Star) {
        lx.next();
        parts.push(parse_type_atom(lx, named)?);
    }
    Ok(prod(parts))
}

pub fn parse_type(text: &str, named: &[(String, ObjExpr)]) -> Result<ObjExpr> {
    let mut lx = lex(text)?;
    let t = parse_type_inner(&mut lx, named)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after type"));
    }
    Ok(t)
}

/// `binding ("," binding)* ["|" term "=" term]`; the empty string is the
/// empty context.
pub fn parse_context(text: &str, named: &[(String, ObjExpr)]) -> Result<Context> {
    let mut lx = lex(text)?;
    let mut ctx = Context::default();
    if lx.peek().is_none() {
        return Ok(ctx);
    }
    loop {
        let name = match lx.next() {
            Some(Tok::Ident(n)) => n,
            _ => {
                lx.pos = lx.pos.saturating_sub(1);
                return Err(lx.err("expected a variable name"));
            }
        };
        lx.expect(Tok::Colon, "`:`")?;
        let ty = parse_type_atom(&mut lx, named).and_then(|first| {
            let mut parts = vec![first];
            while lx.peek() == Some(&Tok::Star) {
                lx.next();
                parts.push(parse_type_atom(&mut lx, named)?);
            }
            Ok(prod(parts))
        })?;
        if ctx.vars.iter().any(|(n, _)| *n == name) {
            return Err(lx.err(format!("duplicate variable `{name}`")));
        }
        ctx.vars.push((name, ty));
        match lx.peek() {
            Some(Tok::Comma) => {
                lx.next();
            }
            _ => break,
        }
    }
    if lx.peek() == Some(&Tok::Pipe) {
        lx.next();
        let l = parse_term_inner(&mut lx)?;
        lx.expect(Tok::Eq, "`=`")?;
        let r = parse_term_inner(&mut lx)?;
        ctx.constraints.push((l, r));
    }
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after context"));
    }
    Ok(ctx)
}
