//! The natural numbers object, the primitive recursion combinator, the
//! arithmetic and order arrows, if-then-else, IdUntil, the zero/positive
//! case splits, and the arithmetic law suite.
//!
//! All guards desugar through truncated subtraction (`m <= n` iff
//! `m - n = 0`); native comparison appears only in test oracles.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::setmodel::{
    arrows_equal, compose, constant, enumerate, equalizer_obj, identity, pairing, proj,
    terminal_map, Arrow, Budget, Elem, ObjExpr,
};

/// The NNO structure: `N` with its zero and successor arrows.
#[derive(Clone, Debug)]
pub struct NnoKit {
    pub n: ObjExpr,
    pub zero: Arrow,
    pub succ: Arrow,
}

impl NnoKit {
    pub fn new() -> NnoKit {
        let n = ObjExpr::Nat;
        let zero = Arrow::new(ObjExpr::Unit, n.clone(), Some("0".to_string()), |_| Elem::num(0));
        let succ = Arrow::new(n.clone(), n.clone(), Some("s".to_string()), |e: &Elem| {
            Elem::Num(e.as_nat() + BigUint::one())
        });
        NnoKit { n, zero, succ }
    }
}

impl Default for NnoKit {
    fn default() -> Self {
        NnoKit::new()
    }
}

/// Parametrized primitive recursion: given `g : A -> B` and
/// `h : A x N x B -> B`, produces the unique `f : A x N -> B` with
/// `f(a,0) = g(a)` and `f(a,sn) = h(a,n,f(a,n))`.
///
/// The value is computed by iterating `h` n times from `g(a)`.
pub fn nno_rec(g: &Arrow, h: &Arrow) -> Result<Arrow> {
    let a_obj = g.dom.clone();
    let b_obj = g.cod.clone();
    let expected_h_dom = ObjExpr::Prod(vec![a_obj.clone(), ObjExpr::Nat, b_obj.clone()]);
    if h.dom != expected_h_dom || h.cod != b_obj {
        return Err(Error::ObjMismatch {
            expected: format!("{expected_h_dom} -> {b_obj}"),
            found: format!("{} -> {}", h.dom, h.cod),
            context: "nno_rec step arrow".into(),
        });
    }
    let dom = ObjExpr::Prod(vec![a_obj, ObjExpr::Nat]);
    let g = g.clone();
    let h = h.clone();
    Ok(Arrow::new(dom, b_obj, None, move |e: &Elem| {
        let parts = e.as_tup();
        let a = &parts[0];
        let n = parts[1].as_nat().clone();
        let mut b = g.apply(a);
        let mut i = BigUint::zero();
        while i < n {
            b = h.apply(&Elem::Tup(vec![a.clone(), Elem::Num(i.clone()), b]));
            i += BigUint::one();
        }
        b
    }))
}

fn nat2() -> ObjExpr {
    ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat])
}

/// Predecessor, `P(0) = 0`, `P(sy) = y`.
pub fn pred() -> Arrow {
    let kit = NnoKit::new();
    // recursion with trivial parameter: g = 0, h(_, n, _) = n
    let g = kit.zero.clone();
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, ObjExpr::Nat, ObjExpr::Nat]);
    let h = proj(&h_dom, 1).unwrap();
    let rec = nno_rec(&g, &h).unwrap();
    let into = pairing(&[terminal_map(&ObjExpr::Nat), identity(&ObjExpr::Nat)]).unwrap();
    let mut p = compose(&rec, &into).unwrap();
    p.label = Some("P".to_string());
    p
}

/// Addition, `x + 0 = x`, `x + sy = s(x + y)`.
pub fn add() -> Arrow {
    let kit = NnoKit::new();
    let g = identity(&ObjExpr::Nat);
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat, ObjExpr::Nat]);
    let h = compose(&kit.succ, &proj(&h_dom, 2).unwrap()).unwrap();
    let mut f = nno_rec(&g, &h).unwrap();
    f.label = Some("add".to_string());
    f
}

/// Multiplication, `x * 0 = 0`, `x * sy = (x * y) + x`.
pub fn mul() -> Arrow {
    let kit = NnoKit::new();
    let g = compose(&kit.zero, &terminal_map(&ObjExpr::Nat)).unwrap();
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat, ObjExpr::Nat]);
    let h = compose(
        &add(),
        &pairing(&[proj(&h_dom, 2).unwrap(), proj(&h_dom, 0).unwrap()]).unwrap(),
    )
    .unwrap();
    let mut f = nno_rec(&g, &h).unwrap();
    f.label = Some("mul".to_string());
    f
}

/// Truncated subtraction, `x - 0 = x`, `x - sy = P(x - y)`.
pub fn monus() -> Arrow {
    let g = identity(&ObjExpr::Nat);
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat, ObjExpr::Nat]);
    let h = compose(&pred(), &proj(&h_dom, 2).unwrap()).unwrap();
    let mut f = nno_rec(&g, &h).unwrap();
    f.label = Some("monus".to_string());
    f
}

/// `min(x,y) = x - (x - y)`.
pub fn min_op() -> Arrow {
    let d = nat2();
    let m = monus();
    let mut f = compose(&m, &pairing(&[proj(&d, 0).unwrap(), m.clone()]).unwrap()).unwrap();
    f.label = Some("min".to_string());
    f
}

/// `max(x,y) = x + (y - x)`.
pub fn max_op() -> Arrow {
    let d = nat2();
    let m = monus();
    let swapped = compose(&m, &pairing(&[proj(&d, 1).unwrap(), proj(&d, 0).unwrap()]).unwrap()).unwrap();
    let mut f = compose(&add(), &pairing(&[proj(&d, 0).unwrap(), swapped]).unwrap()).unwrap();
    f.label = Some("max".to_string());
    f
}

/// `|x,y| = (x - y) + (y - x)`.
pub fn absdiff() -> Arrow {
    let d = nat2();
    let m = monus();
    let swapped = compose(&m, &pairing(&[proj(&d, 1).unwrap(), proj(&d, 0).unwrap()]).unwrap()).unwrap();
    let mut f = compose(&add(), &pairing(&[m.clone(), swapped]).unwrap()).unwrap();
    f.label = Some("absdiff".to_string());
    f
}

/// `ITE_B(x,y,0) = x`, `ITE_B(x,y,sn) = y`, as an arrow `B x B x N -> B`.
pub fn ite(b_obj: &ObjExpr) -> Arrow {
    let bb = ObjExpr::Prod(vec![b_obj.clone(), b_obj.clone()]);
    let g = proj(&bb, 0).unwrap();
    let h_dom = ObjExpr::Prod(vec![bb.clone(), ObjExpr::Nat, b_obj.clone()]);
    let h = compose(&proj(&bb, 1).unwrap(), &proj(&h_dom, 0).unwrap()).unwrap();
    let rec = nno_rec(&g, &h).unwrap();
    let dom = ObjExpr::Prod(vec![b_obj.clone(), b_obj.clone(), ObjExpr::Nat]);
    Arrow::new(dom, b_obj.clone(), Some("ITE".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        rec.apply(&Elem::Tup(vec![
            Elem::Tup(vec![p[0].clone(), p[1].clone()]),
            p[2].clone(),
        ]))
    })
}

/// `if t = 0 then x else y`, all in a common context `C`.
pub fn ite_guard_zero(x: &Arrow, y: &Arrow, t: &Arrow) -> Result<Arrow> {
    if x.cod != y.cod || x.dom != y.dom || t.dom != x.dom || t.cod != ObjExpr::Nat {
        return Err(Error::ObjMismatch {
            expected: "branches over a common context with a numeric guard".into(),
            found: format!("{} / {} / {}", x.describe(), y.describe(), t.describe()),
            context: "ite_guard_zero".into(),
        });
    }
    compose(&ite(&x.cod), &pairing(&[x.clone(), y.clone(), t.clone()])?)
}

/// `if m <= n then x else y`, desugared through `m - n = 0`.
pub fn if_leq(x: &Arrow, y: &Arrow, m: &Arrow, n: &Arrow) -> Result<Arrow> {
    let t = compose(&monus(), &pairing(&[m.clone(), n.clone()])?)?;
    ite_guard_zero(x, y, &t)
}

/// `if m < n then x else y`, desugared through `s(m) - n = 0`.
pub fn if_lt(x: &Arrow, y: &Arrow, m: &Arrow, n: &Arrow) -> Result<Arrow> {
    let sm = compose(&NnoKit::new().succ, m)?;
    let t = compose(&monus(), &pairing(&[sm, n.clone()])?)?;
    ite_guard_zero(x, y, &t)
}

/// `m < n` evaluated through the monus encoding `s(m) - n = 0`.
pub fn lt_holds(m: &Elem, n: &Elem) -> bool {
    let s = NnoKit::new().succ;
    let test = monus().apply(&Elem::Tup(vec![s.apply(m), n.clone()]));
    test.as_nat().is_zero()
}

/// `m <= n` evaluated through the monus encoding `m - n = 0`.
pub fn leq_holds(m: &Elem, n: &Elem) -> bool {
    let test = monus().apply(&Elem::Tup(vec![m.clone(), n.clone()]));
    test.as_nat().is_zero()
}

/// `IdUntil(m,n) = min(m, Pn)`.
pub fn id_until() -> Arrow {
    let d = nat2();
    let pn = compose(&pred(), &proj(&d, 1).unwrap()).unwrap();
    let mut f = compose(&min_op(), &pairing(&[proj(&d, 0).unwrap(), pn]).unwrap()).unwrap();
    f.label = Some("IdUntil".to_string());
    f
}

/// A subobject part with its inclusion back into the ambient object.
#[derive(Clone, Debug)]
pub struct SubPart {
    pub obj: ObjExpr,
    pub include: Arrow,
}

fn const_num(dom: &ObjExpr, n: u64) -> Arrow {
    constant(dom, &ObjExpr::Nat, Elem::num(n))
}

/// Splits `[C]` into `(C | t = 0)` and `(C | t > 0)`.
pub fn split_by_zero(t: &Arrow) -> Result<(SubPart, SubPart)> {
    if t.cod != ObjExpr::Nat {
        return Err(Error::ObjMismatch {
            expected: "N".into(),
            found: t.cod.to_string(),
            context: "split_by_zero".into(),
        });
    }
    let dom = t.dom.clone();
    let zero_eq = equalizer_obj(t, &const_num(&dom, 0))?;
    // t > 0  iff  0 < t  iff  s(0) - t = 0
    let pos_test = compose(&monus(), &pairing(&[const_num(&dom, 1), t.clone()])?)?;
    let pos_eq = equalizer_obj(&pos_test, &const_num(&dom, 0))?;
    Ok((
        SubPart { obj: zero_eq.obj.clone(), include: zero_eq.include.clone() },
        SubPart { obj: pos_eq.obj.clone(), include: pos_eq.include.clone() },
    ))
}

/// Splits `[C]` into `(C | u < w)` and `(C | u >= w)`.
pub fn split_by_lt(u: &Arrow, w: &Arrow) -> Result<(SubPart, SubPart)> {
    if u.dom != w.dom || u.cod != ObjExpr::Nat || w.cod != ObjExpr::Nat {
        return Err(Error::ObjMismatch {
            expected: "parallel arrows into N".into(),
            found: format!("{} / {}", u.describe(), w.describe()),
            context: "split_by_lt".into(),
        });
    }
    let dom = u.dom.clone();
    let s = NnoKit::new().succ;
    let su = compose(&s, u)?;
    let lt_test = compose(&monus(), &pairing(&[su, w.clone()])?)?;
    let lt_eq = equalizer_obj(&lt_test, &const_num(&dom, 0))?;
    // u >= w  iff  w - u = 0
    let geq_test = compose(&monus(), &pairing(&[w.clone(), u.clone()])?)?;
    let geq_eq = equalizer_obj(&geq_test, &const_num(&dom, 0))?;
    Ok((
        SubPart { obj: lt_eq.obj.clone(), include: lt_eq.include.clone() },
        SubPart { obj: geq_eq.obj.clone(), include: geq_eq.include.clone() },
    ))
}

/// The arithmetic arrows the law suite exercises; tests may inject mutants.
#[derive(Clone)]
pub struct ArithOps {
    pub zero: Arrow,
    pub succ: Arrow,
    pub pred: Arrow,
    pub add: Arrow,
    pub mul: Arrow,
    pub monus: Arrow,
    pub min: Arrow,
    pub max: Arrow,
    pub absdiff: Arrow,
}

impl ArithOps {
    pub fn standard() -> ArithOps {
        let kit = NnoKit::new();
        ArithOps {
            zero: kit.zero,
            succ: kit.succ,
            pred: pred(),
            add: add(),
            mul: mul(),
            monus: monus(),
            min: min_op(),
            max: max_op(),
            absdiff: absdiff(),
        }
    }

    /// Rebuilds the derived arrows on top of a replacement monus, so a
    /// mutant propagates into min/max/absdiff and the order encoding.
    pub fn with_monus(monus: Arrow) -> ArithOps {
        let mut ops = ArithOps::standard();
        let d = nat2();
        let p1 = proj(&d, 0).unwrap();
        let p2 = proj(&d, 1).unwrap();
        let swapped = compose(&monus, &pairing(&[p2.clone(), p1.clone()]).unwrap()).unwrap();
        ops.min = compose(&monus, &pairing(&[p1.clone(), monus.clone()]).unwrap()).unwrap();
        ops.max = compose(&ops.add, &pairing(&[p1.clone(), swapped.clone()]).unwrap()).unwrap();
        ops.absdiff = compose(&ops.add, &pairing(&[monus.clone(), swapped]).unwrap()).unwrap();
        ops.monus = monus;
        ops
    }

    fn ev2(&self, op: &Arrow, a: &Elem, b: &Elem) -> Elem {
        op.apply(&Elem::Tup(vec![a.clone(), b.clone()]))
    }

    pub fn leq(&self, a: &Elem, b: &Elem) -> bool {
        self.ev2(&self.monus, a, b).as_nat().is_zero()
    }

    pub fn lt(&self, a: &Elem, b: &Elem) -> bool {
        self.leq(&Elem::Num(a.as_nat() + BigUint::one()), b)
    }
}

/// Exhaustively checks the appendix arithmetic laws for all naturals up
/// to `budget.nat_max`. Failures are data, not errors.
pub fn run_arith_laws(ops: &ArithOps, budget: &Budget) -> LawReport {
    let mut report = LawReport::new(*budget);
    let nats = enumerate(&ObjExpr::Nat, budget).elems;

    let mut pairs: Vec<(&Elem, &Elem)> = Vec::new();
    let mut triples: Vec<(&Elem, &Elem, &Elem)> = Vec::new();
    for a in &nats {
        for b in &nats {
            pairs.push((a, b));
            for c in &nats {
                triples.push((a, b, c));
            }
        }
    }

    let m = |a: &Elem, b: &Elem| ops.ev2(&ops.monus, a, b);
    let p = |a: &Elem, b: &Elem| ops.ev2(&ops.add, a, b);
    let t = |a: &Elem, b: &Elem| ops.ev2(&ops.mul, a, b);
    let mn = |a: &Elem, b: &Elem| ops.ev2(&ops.min, a, b);
    let mx = |a: &Elem, b: &Elem| ops.ev2(&ops.max, a, b);
    let ad = |a: &Elem, b: &Elem| ops.ev2(&ops.absdiff, a, b);

    let mut check3 = |id: &str, law: &dyn Fn(&Elem, &Elem, &Elem) -> bool| {
        let cx = triples
            .iter()
            .find(|(a, b, c)| !law(a, b, c))
            .map(|(a, b, c)| format!("({a}, {b}, {c})"));
        report.push(id, cx);
    };

    check3("arith.monus-plus-assoc", &|a, b, c| m(a, &p(b, c)) == m(&m(a, b), c));
    check3("arith.leq-trans", &|a, b, c| {
        !(ops.leq(a, b) && ops.leq(b, c)) || ops.leq(a, c)
    });
    check3("arith.leq-mono-add", &|a, b, c| !ops.leq(a, b) || ops.leq(&p(a, c), &p(b, c)));
    check3("arith.leq-mono-mul", &|a, b, c| !ops.leq(a, b) || ops.leq(&t(a, c), &t(b, c)));
    check3("arith.leq-mono-monus", &|a, b, c| !ops.leq(a, b) || ops.leq(&m(a, c), &m(b, c)));
    check3("arith.add-assoc", &|a, b, c| p(a, &p(b, c)) == p(&p(a, b), c));
    check3("arith.mul-assoc", &|a, b, c| t(a, &t(b, c)) == t(&t(a, b), c));
    check3("arith.mul-distrib-add", &|a, b, c| t(a, &p(b, c)) == p(&t(a, b), &t(a, c)));

    let mut check2 = |id: &str, law: &dyn Fn(&Elem, &Elem) -> bool| {
        let cx = pairs.iter().find(|(a, b)| !law(a, b)).map(|(a, b)| format!("({a}, {b})"));
        report.push(id, cx);
    };

    check2("arith.absdiff-max", &|a, b| ad(&mx(a, b), b) == m(a, b));
    check2("arith.monus-antisym-prod", &|a, b| t(&m(a, b), &m(b, a)) == Elem::num(0));
    check2("arith.leq-equiv-max", &|a, b| ops.leq(a, b) == (mx(a, b) == *b));
    check2("arith.leq-equiv-min", &|a, b| ops.leq(a, b) == (mn(a, b) == *a));
    // existence clauses of the five-way equivalence, witnessed by b - a
    check2("arith.leq-equiv-exists-add", &|a, b| !ops.leq(a, b) || p(a, &m(b, a)) == *b);
    check2("arith.leq-equiv-exists-monus", &|a, b| !ops.leq(a, b) || m(b, &m(b, a)) == *a);
    check2("arith.leq-antisym", &|a, b| !(ops.leq(a, b) && ops.leq(b, a)) || a == b);
    check2("arith.lt-iff-monus-pos", &|a, b| ops.lt(a, b) == !m(b, a).as_nat().is_zero());
    check2("arith.natcalc1", &|x, y| {
        let s = |e: &Elem| Elem::Num(e.as_nat() + BigUint::one());
        m(&s(x), &m(x, y)) == s(&m(x, &m(x, y)))
    });
    check2("arith.add-comm", &|a, b| p(a, b) == p(b, a));
    check2("arith.mul-comm", &|a, b| t(a, b) == t(b, a));

    let cx = nats.iter().find(|a| !ops.leq(a, a)).map(|a| a.to_string());
    report.push("arith.leq-refl", cx);

    let succ = &ops.succ;
    let pd = &ops.pred;
    let cx = nats
        .iter()
        .find(|n| {
            !n.as_nat().is_zero() && **n != succ.apply(&pd.apply(n))
        })
        .map(|n| n.to_string());
    report.push("arith.pos-succ-pred", cx);

    report
}

/// Existential converse of the order equivalence: `a + x = b` for some
/// enumerated `x` implies `a <= b` (and likewise through monus). Checked
/// over triples, hence separate from the pairwise clauses above.
pub fn run_order_converse_laws(ops: &ArithOps, budget: &Budget) -> LawReport {
    let mut report = LawReport::new(*budget);
    let nats = enumerate(&ObjExpr::Nat, budget).elems;
    let p = |a: &Elem, b: &Elem| ops.ev2(&ops.add, a, b);
    let m = |a: &Elem, b: &Elem| ops.ev2(&ops.monus, a, b);
    let mut cx = None;
    'outer: for a in &nats {
        for b in &nats {
            for x in &nats {
                if p(a, x) == *b && !ops.leq(a, b) {
                    cx = Some(format!("({a}, {b}, {x})"));
                    break 'outer;
                }
                if m(b, x) == *a && !ops.leq(a, b) {
                    cx = Some(format!("({a}, {b}, {x})"));
                    break 'outer;
                }
            }
        }
    }
    report.push("arith.leq-equiv-converse", cx);
    report
}

/// Oracle comparison of the recursively defined arrows against direct
/// big-integer formulas, on all enumerated pairs.
pub fn run_oracle_equivalence(ops: &ArithOps, budget: &Budget) -> LawReport {
    let mut report = LawReport::new(*budget);
    let nats = enumerate(&ObjExpr::Nat, budget).elems;
    let mut check = |id: &str, op: &Arrow, oracle: &dyn Fn(&BigUint, &BigUint) -> BigUint| {
        let mut cx = None;
        'outer: for a in &nats {
            for b in &nats {
                let got = ops.ev2(op, a, b);
                let want = Elem::Num(oracle(a.as_nat(), b.as_nat()));
                if got != want {
                    cx = Some(format!("({a}, {b}): got {got}, want {want}"));
                    break 'outer;
                }
            }
        }
        report.push(id, cx);
    };
    check("arith.oracle-add", &ops.add, &|a, b| a + b);
    check("arith.oracle-mul", &ops.mul, &|a, b| a * b);
    check("arith.oracle-monus", &ops.monus, &|a, b| if a > b { a - b } else { BigUint::zero() });
    let mut cx = None;
    for a in &nats {
        let got = ops.pred.apply(a);
        let n = a.as_nat();
        let want = Elem::Num(if n.is_zero() { BigUint::zero() } else { n - BigUint::one() });
        if got != want {
            cx = Some(format!("{a}: got {got}, want {want}"));
            break;
        }
    }
    report.push("arith.oracle-pred", cx);
    report
}

/// `IdUntil` clauses from the paper, checked exhaustively.
pub fn run_id_until_laws(budget: &Budget) -> LawReport {
    let mut report = LawReport::new(*budget);
    let nats = enumerate(&ObjExpr::Nat, budget).elems;
    let iu = id_until();
    let mut cx = None;
    for m in &nats {
        for n in &nats {
            let v = iu.apply(&Elem::Tup(vec![m.clone(), n.clone()]));
            if lt_holds(&Elem::num(0), n) && !lt_holds(&v, n) {
                cx = Some(format!("({m}, {n}): IdUntil = {v} not < {n}"));
            }
            if lt_holds(m, n) && v != *m {
                cx = Some(format!("({m}, {n}): IdUntil = {v} != {m}"));
            }
            if cx.is_some() {
                break;
            }
        }
    }
    report.push("arith.idUntil-clauses", cx);
    report
}

/// Equational sanity for the split combinators: each enumerated element
/// of the carrier lands in exactly one part, and the `<` split agrees
/// with the zero split of `w - u`.
pub fn check_split_partition(
    parts: &(SubPart, SubPart),
    carrier: &ObjExpr,
    budget: &Budget,
) -> Option<String> {
    let en = enumerate(carrier, budget);
    for e in &en.elems {
        let in_a = crate::setmodel::elem_has_type(e, &parts.0.obj);
        let in_b = crate::setmodel::elem_has_type(e, &parts.1.obj);
        if in_a == in_b {
            return Some(format!("{e} in {} parts", if in_a { 2 } else { 0 }));
        }
    }
    None
}

/// The arrow-level law suite: the same defining equations, but stated as
/// equalities of composites and decided by `arrows_equal`, so the
/// categorical plumbing is exercised too.
pub fn run_arith_arrow_laws(ops: &ArithOps, budget: &Budget) -> Result<LawReport> {
    let mut report = LawReport::new(*budget);
    let n3 = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat, ObjExpr::Nat]);
    let p1 = proj(&n3, 0)?;
    let p2 = proj(&n3, 1)?;
    let p3 = proj(&n3, 2)?;
    // a - (b + c) = (a - b) - c, as arrows N^3 -> N
    let lhs = compose(&ops.monus, &pairing(&[p1.clone(), compose(&ops.add, &pairing(&[p2.clone(), p3.clone()])?)?])?)?;
    let rhs = compose(
        &ops.monus,
        &pairing(&[compose(&ops.monus, &pairing(&[p1.clone(), p2.clone()])?)?, p3.clone()])?,
    )?;
    let eq = arrows_equal(&lhs, &rhs, budget)?;
    report.push(
        "arith.monus-plus-assoc-arrow",
        eq.counterexample.map(|c| format!("{}: {} != {}", c.input, c.lhs, c.rhs)),
    );
    // sx - (x - y) = s(x - (x - y)), as arrows N^2 -> N
    let d = nat2();
    let q1 = proj(&d, 0)?;
    let q2 = proj(&d, 1)?;
    let inner = compose(&ops.monus, &pairing(&[q1.clone(), compose(&ops.monus, &pairing(&[q1.clone(), q2.clone()])?)?])?)?;
    let sx = compose(&ops.succ, &q1)?;
    let lhs = compose(
        &ops.monus,
        &pairing(&[sx, compose(&ops.monus, &pairing(&[q1.clone(), q2.clone()])?)?])?,
    )?;
    let rhs = compose(&ops.succ, &inner)?;
    let eq = arrows_equal(&lhs, &rhs, budget)?;
    report.push(
        "arith.natcalc1-arrow",
        eq.counterexample.map(|c| format!("{}: {} != {}", c.input, c.lhs, c.rhs)),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setmodel::finite_obj;

    fn b(nat_max: u64) -> Budget {
        Budget { nat_max, len_max: 2, card_cap: 100_000, seed: 0 }
    }

    fn ev2(f: &Arrow, a: u64, bb: u64) -> Elem {
        f.apply(&Elem::Tup(vec![Elem::num(a), Elem::num(bb)]))
    }

    #[test]
    fn nno_rec_defining_equations() {
        let ops = ArithOps::standard();
        // base: f(a, 0) = g(a); here add(a, 0) = a
        assert_eq!(ev2(&ops.add, 7, 0), Elem::num(7));
        // step: add(a, s(n)) = s(add(a, n)) at a few unrolled points
        for a in 0..5u64 {
            for n in 0..5u64 {
                let step = ev2(&ops.add, a, n + 1);
                let prev = ev2(&ops.add, a, n);
                assert_eq!(step, ops.succ.apply(&prev));
            }
        }
    }

    #[test]
    fn nno_rec_rejects_bad_signature() {
        let kit = NnoKit::new();
        assert!(nno_rec(&kit.zero, &kit.succ).is_err());
    }

    #[test]
    fn pred_unrolls() {
        let p = pred();
        assert_eq!(p.apply(&Elem::num(3)), Elem::num(2));
        assert_eq!(p.apply(&Elem::num(0)), Elem::num(0));
    }

    #[test]
    fn arithmetic_examples() {
        let ops = ArithOps::standard();
        assert_eq!(ev2(&ops.monus, 3, 5), Elem::num(0));
        assert_eq!(ev2(&ops.monus, 5, 3), Elem::num(2));
        // mul(2, s(2)) = mul(2, 2) + 2
        assert_eq!(ev2(&ops.mul, 2, 3), Elem::num(6));
        assert_eq!(ev2(&ops.min, 5, 2), Elem::num(2));
        assert_eq!(ev2(&ops.max, 2, 5), Elem::num(5));
        assert_eq!(ev2(&ops.absdiff, 4, 4), Elem::num(0));
        assert_eq!(ev2(&ops.absdiff, 2, 5), Elem::num(3));
    }

    #[test]
    fn oracle_equivalence_small() {
        let ops = ArithOps::standard();
        let report = run_oracle_equivalence(&ops, &b(12));
        assert!(report.all_pass(), "{}", report.render());
    }

    #[test]
    fn ite_selects_by_zero_test() {
        let f = ite(&ObjExpr::Nat);
        let sel = |g: u64| {
            f.apply(&Elem::Tup(vec![Elem::num(10), Elem::num(20), Elem::num(g)]))
        };
        assert_eq!(sel(0), Elem::num(10));
        assert_eq!(sel(7), Elem::num(20));
    }

    #[test]
    fn lt_guard_is_strict() {
        // m < n with (m, n) = (2, 2) selects the else branch
        let nn = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
        let thn = constant(&nn, &ObjExpr::Nat, Elem::num(1));
        let els = constant(&nn, &ObjExpr::Nat, Elem::num(0));
        let m = proj(&nn, 0).unwrap();
        let n = proj(&nn, 1).unwrap();
        let guard = if_lt(&thn, &els, &m, &n).unwrap();
        assert_eq!(ev2(&guard, 2, 2), Elem::num(0));
        assert_eq!(ev2(&guard, 1, 2), Elem::num(1));
    }

    #[test]
    fn order_predicates_match_native() {
        for m in 0..8u64 {
            for n in 0..8u64 {
                let em = Elem::num(m);
                let en = Elem::num(n);
                assert_eq!(lt_holds(&em, &en), m < n);
                assert_eq!(leq_holds(&em, &en), m <= n);
            }
        }
    }

    #[test]
    fn id_until_examples() {
        let f = id_until();
        assert_eq!(ev2(&f, 2, 5), Elem::num(2));
        assert_eq!(ev2(&f, 7, 3), Elem::num(2));
        assert_eq!(ev2(&f, 0, 1), Elem::num(0));
    }

    #[test]
    fn split_by_zero_on_len() {
        let budget = b(4);
        let x = finite_obj(1);
        let len = crate::listobj::len(&x);
        let (zero, pos) = split_by_zero(&len).unwrap();
        let nz = enumerate(&zero.obj, &budget).elems.len();
        let np = enumerate(&pos.obj, &budget).elems.len();
        // len_max = 2 over a singleton X: lengths 0, 1, 2
        assert_eq!((nz, np), (1, 2));
        assert!(check_split_partition(&(zero, pos), &len.dom, &budget).is_none());
    }

    #[test]
    fn split_by_lt_counts() {
        let budget = b(2);
        let nn = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
        let u = proj(&nn, 0).unwrap();
        let w = proj(&nn, 1).unwrap();
        let (lt, geq) = split_by_lt(&u, &w).unwrap();
        assert_eq!(enumerate(&lt.obj, &budget).elems.len(), 3);
        assert_eq!(enumerate(&geq.obj, &budget).elems.len(), 6);
        assert!(check_split_partition(&(lt, geq), &nn, &budget).is_none());

        let (same_lt, _) = split_by_lt(&u, &u).unwrap();
        assert!(enumerate(&same_lt.obj, &budget).elems.is_empty());
    }

    #[test]
    fn law_suite_passes() {
        let ops = ArithOps::standard();
        let report = run_arith_laws(&ops, &b(4));
        assert!(report.all_pass(), "{}", report.render());
        let report = run_order_converse_laws(&ops, &b(4));
        assert!(report.all_pass(), "{}", report.render());
        let report = run_id_until_laws(&b(4));
        assert!(report.all_pass(), "{}", report.render());
        let report = run_arith_arrow_laws(&ops, &b(4)).unwrap();
        assert!(report.all_pass(), "{}", report.render());
    }

    #[test]
    fn law_suite_trivial_at_zero() {
        let ops = ArithOps::standard();
        let report = run_arith_laws(&ops, &b(0));
        assert!(report.all_pass(), "{}", report.render());
    }

    #[test]
    fn mutant_monus_fails_named_law() {
        // monus(x, y) = x, wrong everywhere y > 0
        let nn = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
        let bad = proj(&nn, 0).unwrap().retyped(nn.clone(), ObjExpr::Nat);
        let ops = ArithOps::with_monus(bad);
        let report = run_arith_laws(&ops, &b(4));
        assert!(!report.all_pass());
        // x - x = 0 degrades to x = 0, so reflexivity of <= breaks
        let failed = report.find("arith.leq-refl").unwrap();
        assert!(!failed.pass);
        assert!(failed.counterexample.is_some());
    }

    #[test]
    fn recursor_unique_at_micro_scale() {
        // exhaust all tables 1 x N_{<=3} -> {0, 1} and confirm exactly
        // one satisfies the two defining equations of a fixed (g, h)
        let budget = Budget { nat_max: 3, len_max: 0, card_cap: 1000, seed: 0 };
        let two = finite_obj(2);
        let g = constant(&ObjExpr::Unit, &two, Elem::num(1));
        let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, ObjExpr::Nat, two.clone()]);
        // flip the accumulator each step
        let h = Arrow::new(h_dom, two.clone(), None, |e: &Elem| {
            let v = e.as_tup()[2].as_nat();
            Elem::num(if v.is_zero() { 1 } else { 0 })
        });
        let f = nno_rec(&g, &h).unwrap();
        let inputs: Vec<Elem> = enumerate(&f.dom, &budget).elems;
        let outputs = enumerate(&two, &budget).elems;
        let n_inputs = inputs.len();
        let mut satisfying = 0usize;
        let mut agrees_with_f = 0usize;
        for mask in 0..outputs.len().pow(n_inputs as u32) {
            let mut table = Vec::new();
            let mut m = mask;
            for _ in 0..n_inputs {
                table.push(outputs[m % outputs.len()].clone());
                m /= outputs.len();
            }
            let value = |e: &Elem| {
                let i = inputs.iter().position(|x| x == e).unwrap();
                table[i].clone()
            };
            let mut ok = true;
            for e in &inputs {
                let parts = e.as_tup();
                let n: u64 = parts[1].as_nat().try_into().unwrap();
                let want = if n == 0 {
                    g.apply(&parts[0])
                } else {
                    let prev = Elem::Tup(vec![parts[0].clone(), Elem::num(n - 1)]);
                    h.apply(&Elem::Tup(vec![
                        parts[0].clone(),
                        Elem::num(n - 1),
                        value(&prev),
                    ]))
                };
                if value(e) != want {
                    ok = false;
                    break;
                }
            }
            if ok {
                satisfying += 1;
                if inputs.iter().all(|e| value(e) == f.apply(e)) {
                    agrees_with_f += 1;
                }
            }
        }
        assert_eq!(satisfying, 1);
        assert_eq!(agrees_with_f, 1);
    }
}
