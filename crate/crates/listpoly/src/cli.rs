//! Command-line front end: instance-file parsing and the laws, adjoint,
//! poly, and eval subcommands. Reports are deterministic functions of
//! the inputs and flags.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};

use crate::arith;
use crate::error::{Error, Result};
use crate::lang::{self, Context, Symbols};
use crate::listobj::{self, ListOps};
use crate::polyadj::{self, Instance};
use crate::setmodel::{finite_obj, Budget, Elem, ObjExpr};

#[derive(Parser, Debug)]
#[command(name = "listpoly", version, about = "Checks the polynomial presentation of the list functor on a finite set model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the arithmetic and list law suites
    Laws(LawsArgs),
    /// Solve and verify an instance file (existence and uniqueness)
    Adjoint(AdjointArgs),
    /// Evaluate the polynomial extension and check the list bijection
    Poly(PolyArgs),
    /// Parse and evaluate a term of the internal language
    Eval(EvalArgs),
}

#[derive(Args, Debug)]
pub struct LawsArgs {
    /// Largest natural enumerated
    #[arg(long, default_value_t = 4)]
    pub nat_max: u64,
    /// Largest list length enumerated
    #[arg(long, default_value_t = 3)]
    pub len_max: u64,
    /// Cardinality of the element object X
    #[arg(long, default_value_t = 2)]
    pub card_x: u64,
    /// Seed for the sampled arrows
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampled arrows per naturality law
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct AdjointArgs {
    /// Path to the instance file
    pub path: std::path::PathBuf,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Cardinality of the element object X
    #[arg(long, default_value_t = 2)]
    pub card_x: u64,
    /// Length bound for the bijection with lists
    #[arg(long, default_value_t = 3)]
    pub max_len: u64,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// The term to evaluate
    pub term: String,
    /// Typing context, e.g. "x: N, l: L(N)"
    #[arg(long, default_value = "")]
    pub ctx: String,
    /// Named elements of a finite object X, e.g. "a,b,c"
    #[arg(long)]
    pub x: Option<String>,
    /// Value for a context variable, e.g. "x=3" (repeatable)
    #[arg(long = "bind")]
    pub binds: Vec<String>,
}

/// Outcome of one subcommand: the report text and the exit code.
pub struct Outcome {
    pub report: String,
    pub code: i32,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Budget(_) => 3,
        _ => 2,
    }
}

pub fn run(cli: Cli) -> std::result::Result<Outcome, (Error, i32)> {
    let result = match cli.command {
        Command::Laws(args) => cmd_laws(&args),
        Command::Adjoint(args) => cmd_adjoint(&args.path),
        Command::Poly(args) => cmd_poly(&args),
        Command::Eval(args) => cmd_eval(&args),
    };
    result.map_err(|e| {
        let code = exit_code_for(&e);
        (e, code)
    })
}

/// The full law suite at the given budget; one line per law.
pub fn cmd_laws(args: &LawsArgs) -> Result<Outcome> {
    let budget = Budget {
        nat_max: args.nat_max,
        len_max: args.len_max,
        card_cap: 1_000_000,
        seed: args.seed,
    };
    let mut out = String::new();
    out.push_str(&format!(
        "budget nat_max={} len_max={} card_x={} seed={}\n",
        args.nat_max, args.len_max, args.card_x, args.seed
    ));
    let ops = arith::ArithOps::standard();
    let mut all_pass = true;
    let mut add_report = |r: &crate::report::LawReport, out: &mut String| {
        all_pass &= r.all_pass();
        out.push_str(&r.render());
    };
    add_report(&arith::run_arith_laws(&ops, &budget), &mut out);
    add_report(&arith::run_order_converse_laws(&ops, &budget), &mut out);
    add_report(&arith::run_oracle_equivalence(&ops, &budget), &mut out);
    add_report(&arith::run_id_until_laws(&budget), &mut out);
    add_report(&arith::run_arith_arrow_laws(&ops, &budget)?, &mut out);
    let x = finite_obj(args.card_x);
    let lops = ListOps::standard(&x);
    add_report(&listobj::run_list_laws(&lops, &budget, args.samples), &mut out);
    let nat = polyadj::run_nth_naturality(&x, &budget, args.samples)?;
    for check in &nat.checks {
        all_pass &= check.pass;
        if check.pass {
            out.push_str(&format!("poly.{} PASS\n", check.name));
        } else {
            out.push_str(&format!(
                "poly.{} FAIL {}\n",
                check.name,
                check.counterexample.as_deref().unwrap_or("")
            ));
        }
    }
    Ok(Outcome { report: out, code: if all_pass { 0 } else { 1 } })
}

fn render_x(e: &Elem, x_names: &[String]) -> String {
    let idx: usize = usize::try_from(e.as_nat()).unwrap_or(usize::MAX);
    x_names.get(idx).cloned().unwrap_or_else(|| e.to_string())
}

fn render_list(l: &Elem, x_names: &[String]) -> String {
    let parts: Vec<String> = l.as_seq().iter().map(|e| render_x(e, x_names)).collect();
    format!("[{}]", parts.join(", "))
}

/// Solves an instance file and reports existence and uniqueness.
pub fn cmd_adjoint(path: &std::path::Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Instance(format!("cannot read {}: {e}", path.display())))?;
    cmd_adjoint_text(&text)
}

/// The adjoint report for instance text already in memory.
pub fn cmd_adjoint_text(text: &str) -> Result<Outcome> {
    let inst = parse_instance(text)?;
    inst.validate()?;
    let budget = inst.suggested_budget();
    let h = polyadj::construct_h(&inst)?;
    let mut out = String::new();
    for (i, name) in inst.a_names.iter().enumerate() {
        let ha = h.apply(&Elem::num(i as u64));
        out.push_str(&format!("h: {name} -> {}\n", render_list(&ha, &inst.x_names)));
    }
    let existence = polyadj::verify_solution(&inst, &h, &budget)?;
    out.push_str(if existence.pass() { "EXISTENCE PASS\n" } else { "EXISTENCE FAIL\n" });
    let solutions = polyadj::brute_force_solutions(&inst, &budget)?;
    let mut unique = solutions.len() == 1;
    if unique {
        let winner = &solutions[0];
        for i in 0..inst.a_names.len() {
            let a = Elem::num(i as u64);
            if winner.apply(&a) != h.apply(&a) {
                unique = false;
                break;
            }
        }
        if unique {
            unique = polyadj::uniqueness_by_theory(&inst, &h, winner, &budget)?.pass();
        }
    }
    let plural = if solutions.len() == 1 { "solution" } else { "solutions" };
    out.push_str(&format!(
        "UNIQUENESS {} ({} {plural})\n",
        if unique { "PASS" } else { "FAIL" },
        solutions.len()
    ));
    let code = if existence.pass() && unique { 0 } else { 1 };
    Ok(Outcome { report: out, code })
}

/// Evaluates the list polynomial at X and checks the bijection.
pub fn cmd_poly(args: &PolyArgs) -> Result<Outcome> {
    let budget = Budget {
        nat_max: args.max_len,
        len_max: args.max_len,
        card_cap: 1_000_000,
        seed: 0,
    };
    let x = finite_obj(args.card_x);
    let ext = polyadj::poly_extension(&polyadj::list_polynomial(), &x, &budget)?;
    let mut out = String::new();
    for (b, count) in &ext.per_fiber {
        out.push_str(&format!("fiber {b}: {count}\n"));
    }
    out.push_str(&format!("total {}\n", ext.elems.len()));
    let report = polyadj::check_poly_bijection(&x, &budget)?;
    let pass = report.pass();
    out.push_str(if pass { "BIJECTION PASS\n" } else { "BIJECTION FAIL\n" });
    if !pass {
        for c in report.checks.iter().filter(|c| !c.pass) {
            out.push_str(&format!(
                "  {}: {}\n",
                c.name,
                c.counterexample.as_deref().unwrap_or("")
            ));
        }
    }
    Ok(Outcome { report: out, code: if pass { 0 } else { 1 } })
}

/// Parses and evaluates a term, with optional context and bindings.
pub fn cmd_eval(args: &EvalArgs) -> Result<Outcome> {
    let mut syms = Symbols::default();
    let mut named_types: Vec<(String, ObjExpr)> = Vec::new();
    let mut x_names: Vec<String> = Vec::new();
    if let Some(spec) = &args.x {
        x_names = spec
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let x_obj = finite_obj(x_names.len() as u64);
        for (i, name) in x_names.iter().enumerate() {
            syms.consts.push((name.clone(), Elem::num(i as u64), x_obj.clone()));
        }
        named_types.push(("X".to_string(), x_obj));
    }
    let ctx = lang::parse_context(&args.ctx, &named_types)?;
    let term = lang::parse_term(&args.term)?;

    // bindings evaluate in the empty context, one value per variable
    let mut bound: BTreeMap<String, Elem> = BTreeMap::new();
    let empty = Context::default();
    for bind in &args.binds {
        let (name, value) = bind.split_once('=').ok_or_else(|| {
            Error::Instance(format!("binding `{bind}` is not of the form name=term"))
        })?;
        let name = name.trim();
        let ty = ctx
            .vars
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| Error::UnboundVar(name.to_string()))?;
        let t = lang::parse_term(value.trim())?;
        let (arr, _) = lang::elaborate(&t, &empty, &syms, Some(&ty))?;
        bound.insert(name.to_string(), arr.apply(&Elem::Star));
    }
    let missing: Vec<&str> = ctx
        .vars
        .iter()
        .filter(|(n, _)| !bound.contains_key(n))
        .map(|(n, _)| n.as_str())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Instance(format!(
            "missing --bind for context variable(s): {}",
            missing.join(", ")
        )));
    }

    let arrow = lang::interpret(&term, &ctx, &syms)?;
    let input = match ctx.vars.len() {
        0 => Elem::Star,
        1 => bound.values().next().unwrap().clone(),
        _ => Elem::Tup(ctx.vars.iter().map(|(n, _)| bound[n].clone()).collect()),
    };
    if !crate::setmodel::elem_has_type(&input, &arrow.dom) {
        return Err(Error::ConstraintViolated {
            constraint: "context constraint".into(),
            witness: input.to_string(),
        });
    }
    let value = arrow.apply(&input);
    let ty = lang::typecheck(&term, &ctx, &syms)?;
    let rendered = render_value(&value, &ty, &x_names);
    Ok(Outcome { report: format!("{rendered}\n"), code: 0 })
}

fn render_value(v: &Elem, ty: &ObjExpr, x_names: &[String]) -> String {
    if x_names.is_empty() {
        return v.to_string();
    }
    match (v, ty.repr()) {
        (Elem::Num(_), ObjExpr::Nat) => {
            // a finite X is carried by naturals; the Sub layer was
            // stripped by repr, so decide by the original type
            if matches!(ty, ObjExpr::Sub { .. }) {
                render_x(v, x_names)
            } else {
                v.to_string()
            }
        }
        (Elem::Seq(items), ObjExpr::ListOf(inner)) => {
            let parts: Vec<String> =
                items.iter().map(|i| render_value(i, inner, x_names)).collect();
            format!("[{}]", parts.join(", "))
        }
        (Elem::Tup(items), ObjExpr::Prod(comps)) if items.len() == comps.len() => {
            let parts: Vec<String> = items
                .iter()
                .zip(comps)
                .map(|(i, c)| render_value(i, c, x_names))
                .collect();
            format!("({})", parts.join(", "))
        }
        _ => v.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

/// Line-oriented instance format:
/// `X = {a, b}` / `A = {p, q}` / `lA: p -> 2, q -> 0` /
/// `g: (0, p) -> a, (1, p) -> b`; `#` starts a comment.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut x_names: Option<Vec<String>> = None;
    let mut a_names: Option<Vec<String>> = None;
    let mut l_entries: Vec<(String, u64, usize)> = Vec::new();
    let mut g_entries: Vec<(u64, String, String, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let perr = |msg: String| Error::Parse { line: lineno, col: 1, msg };
        if let Some(rest) = line.strip_prefix("X") {
            let rest = rest.trim_start();
            let rest = rest
                .strip_prefix('=')
                .ok_or_else(|| perr("expected `X = {...}`".into()))?;
            x_names = Some(parse_name_set(rest, lineno)?);
        } else if let Some(rest) = line.strip_prefix("A") {
            let rest = rest.trim_start();
            let rest = rest
                .strip_prefix('=')
                .ok_or_else(|| perr("expected `A = {...}`".into()))?;
            a_names = Some(parse_name_set(rest, lineno)?);
        } else if let Some(rest) = line.strip_prefix("lA") {
            let rest = rest.trim_start();
            let rest = rest
                .strip_prefix(':')
                .ok_or_else(|| perr("expected `lA: name -> nat, ...`".into()))?;
            for entry in split_top_level(rest) {
                let entry = entry.trim();
                if entry.is_empty() {
                    continue;
                }
                let (name, num) = entry
                    .split_once("->")
                    .ok_or_else(|| perr(format!("bad lA entry `{entry}`")))?;
                let n: u64 = num
                    .trim()
                    .parse()
                    .map_err(|_| perr(format!("bad natural in lA entry `{entry}`")))?;
                l_entries.push((name.trim().to_string(), n, lineno));
            }
        } else if let Some(rest) = line.strip_prefix("g") {
            let rest = rest.trim_start();
            let rest = rest
                .strip_prefix(':')
                .ok_or_else(|| perr("expected `g: (nat, name) -> name, ...`".into()))?;
            for entry in split_top_level(rest) {
                let entry = entry.trim();
                if entry.is_empty() {
                    continue;
                }
                let (lhs, value) = entry
                    .split_once("->")
                    .ok_or_else(|| perr(format!("bad g entry `{entry}`")))?;
                let lhs = lhs.trim();
                let inner = lhs
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| perr(format!("bad g key `{lhs}`")))?;
                let (m_str, a_str) = inner
                    .split_once(',')
                    .ok_or_else(|| perr(format!("bad g key `{lhs}`")))?;
                let m: u64 = m_str
                    .trim()
                    .parse()
                    .map_err(|_| perr(format!("bad natural in g key `{lhs}`")))?;
                g_entries.push((m, a_str.trim().to_string(), value.trim().to_string(), lineno));
            }
        } else {
            return Err(perr(format!("unrecognized directive `{line}`")));
        }
    }

    let x_names = x_names.ok_or(Error::Instance("missing `X = {...}`".into()))?;
    let a_names = a_names.ok_or(Error::Instance("missing `A = {...}`".into()))?;
    let a_index = |name: &str, lineno: usize| {
        a_names.iter().position(|n| n == name).ok_or(Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("unknown element of A: `{name}`"),
        })
    };
    let x_index = |name: &str, lineno: usize| {
        x_names.iter().position(|n| n == name).ok_or(Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("unknown element of X: `{name}`"),
        })
    };

    let mut lens = vec![None; a_names.len()];
    for (name, n, lineno) in &l_entries {
        let i = a_index(name, *lineno)?;
        if lens[i].replace(*n).is_some() {
            return Err(Error::Parse {
                line: *lineno,
                col: 1,
                msg: format!("duplicate lA entry for `{name}`"),
            });
        }
    }
    let lens: Vec<u64> = lens
        .into_iter()
        .zip(&a_names)
        .map(|(l, name)| l.ok_or(Error::Instance(format!("missing lA entry for `{name}`"))))
        .collect::<Result<_>>()?;

    let mut g = BTreeMap::new();
    for (m, a_str, x_str, lineno) in &g_entries {
        let a = a_index(a_str, *lineno)?;
        let x = x_index(x_str, *lineno)?;
        if g.insert((*m, a), x).is_some() {
            return Err(Error::Parse {
                line: *lineno,
                col: 1,
                msg: format!("duplicate g entry ({m}, {a_str})"),
            });
        }
    }

    Ok(Instance { x_names, a_names, lens, g })
}

fn parse_name_set(text: &str, lineno: usize) -> Result<Vec<String>> {
    let perr = |msg: String| Error::Parse { line: lineno, col: 1, msg };
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| perr("expected a set `{a, b}`".into()))?;
    let mut names = Vec::new();
    for part in inner.split(',') {
        let name = part.trim();
        if name.is_empty() {
            continue;
        }
        if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(perr(format!("bad element name `{name}`")));
        }
        if names.iter().any(|n| n == name) {
            return Err(perr(format!("duplicate element `{name}`")));
        }
        names.push(name.to_string());
    }
    Ok(names)
}

/// Splits on commas that are not inside parentheses.
fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# a worked instance
X = {a, b}
A = {p, q, r}
lA: p -> 2, q -> 0, r -> 1
g: (0, p) -> a, (1, p) -> b, (0, r) -> a
";

    #[test]
    fn parse_instance_sample() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(inst.x_names, ["a", "b"]);
        assert_eq!(inst.a_names, ["p", "q", "r"]);
        assert_eq!(inst.lens, [2, 0, 1]);
        assert_eq!(inst.g.len(), 3);
        assert_eq!(inst.g[&(1, 0)], 1);
        assert!(inst.validate().is_ok());
    }

    #[test]
    fn parse_instance_errors_carry_line_numbers() {
        let dup = "X = {a}\nA = {p}\nlA: p -> 1\nlA: p -> 2\ng: (0, p) -> a\n";
        match parse_instance(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected a parse error, got {other:?}"),
        }

        let unknown = "X = {a}\nA = {p}\nlA: p -> 1\ng: (0, q) -> a\n";
        match parse_instance(unknown) {
            Err(Error::Parse { line, msg, .. }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("q"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }

        let missing = "X = {a}\nA = {p, q}\nlA: p -> 0\ng:\n";
        assert!(matches!(parse_instance(missing), Err(Error::Instance(_))));

        let no_x = "A = {p}\nlA: p -> 0\n";
        assert!(matches!(parse_instance(no_x), Err(Error::Instance(_))));

        let junk = "X = {a}\nwhatever\n";
        assert!(matches!(parse_instance(junk), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn parse_instance_rejects_extra_g() {
        let extra = "X = {a}\nA = {p}\nlA: p -> 1\ng: (0, p) -> a, (3, p) -> a\n";
        let inst = parse_instance(extra).unwrap();
        assert!(matches!(inst.validate(), Err(Error::Instance(_))));
    }

    #[test]
    fn adjoint_report_bytes() {
        let out = cmd_adjoint_text(SAMPLE).unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(
            out.report,
            "h: p -> [a, b]\nh: q -> []\nh: r -> [a]\nEXISTENCE PASS\nUNIQUENESS PASS (1 solution)\n"
        );
        // rerun gives identical bytes
        assert_eq!(cmd_adjoint_text(SAMPLE).unwrap().report, out.report);
    }

    #[test]
    fn poly_report_counts() {
        let out = cmd_poly(&PolyArgs { card_x: 2, max_len: 3 }).unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(
            out.report,
            "fiber 0: 1\nfiber 1: 2\nfiber 2: 4\nfiber 3: 8\ntotal 15\nBIJECTION PASS\n"
        );
    }

    #[test]
    fn laws_report_header_and_pass() {
        let args = LawsArgs { nat_max: 3, len_max: 2, card_x: 2, seed: 7, samples: 3 };
        let out = cmd_laws(&args).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.report.starts_with("budget nat_max=3 len_max=2 card_x=2 seed=7\n"));
        assert!(!out.report.contains("FAIL"));
        assert_eq!(cmd_laws(&args).unwrap().report, out.report);
    }

    #[test]
    fn eval_closed_and_bound() {
        let closed = |term: &str| {
            cmd_eval(&EvalArgs {
                term: term.into(),
                ctx: String::new(),
                x: None,
                binds: vec![],
            })
            .unwrap()
            .report
        };
        assert_eq!(closed("monus(3, 5)"), "0\n");
        assert_eq!(closed("idUntil(7, 3)"), "2\n");
        assert_eq!(closed("[1, add(1, 1)]"), "[1, 2]\n");

        let out = cmd_eval(&EvalArgs {
            term: "nthDef(x, 1, [a, b, c])".into(),
            ctx: "x: X".into(),
            x: Some("a,b,c".into()),
            binds: vec!["x=a".into()],
        })
        .unwrap();
        assert_eq!(out.report, "b\n");
    }

    #[test]
    fn eval_reports_missing_bindings() {
        let err = cmd_eval(&EvalArgs {
            term: "add(n, 1)".into(),
            ctx: "n: N".into(),
            x: None,
            binds: vec![],
        });
        assert!(matches!(err, Err(Error::Instance(_))));

        let err = cmd_eval(&EvalArgs {
            term: "add(n, 1)".into(),
            ctx: "n: N".into(),
            x: None,
            binds: vec!["m=1".into()],
        });
        assert!(matches!(err, Err(Error::UnboundVar(_))));
    }

    #[test]
    fn exit_codes_match_error_kinds() {
        assert_eq!(exit_code_for(&Error::Budget("cap".into())), 3);
        assert_eq!(exit_code_for(&Error::Instance("bad".into())), 2);
        assert_eq!(
            exit_code_for(&Error::Parse { line: 1, col: 1, msg: "bad".into() }),
            2
        );
    }

    #[test]
    fn cli_parses_subcommands() {
        use clap::Parser;
        let cli = Cli::try_parse_from(["listpoly", "laws", "--nat-max", "5", "--seed", "9"])
            .unwrap();
        match cli.command {
            Command::Laws(args) => {
                assert_eq!(args.nat_max, 5);
                assert_eq!(args.seed, 9);
                assert_eq!(args.len_max, 3);
            }
            other => panic!("wrong subcommand: {other:?}"),
        }
        assert!(Cli::try_parse_from(["listpoly", "laws", "--no-such-flag"]).is_err());
        assert!(Cli::try_parse_from(["listpoly"]).is_err());
    }
}
