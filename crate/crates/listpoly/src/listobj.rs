//! List objects over an arbitrary element object X: the generalized list
//! recursor, the functor action, len/tr/tail/zerothDef/nthDef, concat,
//! Seq/List builders, the guarded reassembly arrows H and A, and the
//! list law suite.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, NnoKit};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::setmodel::{
    compose, enumerate, identity, pairing, proj, Arrow, Budget, Elem, ObjExpr,
};

/// The list-object structure over X: L(X) with nil and cons.
#[derive(Clone, Debug)]
pub struct ListKit {
    pub x: ObjExpr,
    pub lx: ObjExpr,
    pub nil: Arrow,
    pub cons: Arrow,
}

impl ListKit {
    pub fn new(x: &ObjExpr) -> ListKit {
        let lx = ObjExpr::list_of(x.clone());
        let nil = Arrow::new(ObjExpr::Unit, lx.clone(), Some("nil".to_string()), |_| {
            Elem::Seq(vec![])
        });
        let cons_dom = ObjExpr::Prod(vec![x.clone(), lx.clone()]);
        let cons = Arrow::new(cons_dom, lx.clone(), Some("cons".to_string()), |e: &Elem| {
            let p = e.as_tup();
            let mut items = vec![p[0].clone()];
            items.extend(p[1].as_seq().iter().cloned());
            Elem::Seq(items)
        });
        ListKit { x: x.clone(), lx, nil, cons }
    }
}

/// Generalized list recursion: given `g : A -> B` and
/// `h : A x X x L(X) x B -> B`, produces `f : A x L(X) -> B` with
/// `f(a, nil) = g(a)` and `f(a, x :: l) = h(a, x, l, f(a, l))`.
pub fn list_rec(g: &Arrow, h: &Arrow) -> Result<Arrow> {
    let a_obj = g.dom.clone();
    let b_obj = g.cod.clone();
    let comps = match &h.dom {
        ObjExpr::Prod(comps) if comps.len() == 4 => comps.clone(),
        other => {
            return Err(Error::ObjMismatch {
                expected: "A x X x L(X) x B".into(),
                found: other.to_string(),
                context: "list_rec step arrow".into(),
            })
        }
    };
    let x_obj = comps[1].clone();
    let expected = ObjExpr::Prod(vec![
        a_obj.clone(),
        x_obj.clone(),
        ObjExpr::list_of(x_obj.clone()),
        b_obj.clone(),
    ]);
    if h.dom != expected || h.cod != b_obj {
        return Err(Error::ObjMismatch {
            expected: format!("{expected} -> {b_obj}"),
            found: format!("{} -> {}", h.dom, h.cod),
            context: "list_rec step arrow".into(),
        });
    }
    let dom = ObjExpr::Prod(vec![a_obj, ObjExpr::list_of(x_obj)]);
    let g = g.clone();
    let h = h.clone();
    Ok(Arrow::new(dom, b_obj, None, move |e: &Elem| {
        let parts = e.as_tup();
        let a = &parts[0];
        let items = parts[1].as_seq();
        // right fold: the step for x :: l consumes the result on l
        let mut b = g.apply(a);
        for i in (0..items.len()).rev() {
            let rest = Elem::Seq(items[i + 1..].to_vec());
            b = h.apply(&Elem::Tup(vec![a.clone(), items[i].clone(), rest, b]));
        }
        b
    }))
}

/// The functor action: `L(f)` maps elementwise.
pub fn map_list(f: &Arrow) -> Arrow {
    let dom = ObjExpr::list_of(f.dom.clone());
    let cod = ObjExpr::list_of(f.cod.clone());
    let label = f.label.as_ref().map(|l| format!("L({l})"));
    let f = f.clone();
    Arrow::new(dom, cod, label, move |e: &Elem| {
        Elem::Seq(e.as_seq().iter().map(|i| f.apply(i)).collect())
    })
}

/// Drops a `Unit` first component: wraps `f : 1 x D -> C` as `D -> C`.
fn drop_unit(f: &Arrow, dom: ObjExpr) -> Arrow {
    let f = f.clone();
    Arrow::new(dom, f.cod.clone(), None, move |e: &Elem| {
        f.apply(&Elem::Tup(vec![Elem::Star, e.clone()]))
    })
}

/// Swaps a binary product domain: wraps `f : B x A -> C` as `A x B -> C`.
fn swap_args(f: &Arrow, dom: ObjExpr) -> Arrow {
    let f = f.clone();
    Arrow::new(dom, f.cod.clone(), None, move |e: &Elem| {
        let p = e.as_tup();
        f.apply(&Elem::Tup(vec![p[1].clone(), p[0].clone()]))
    })
}

/// `len : L(X) -> N`, `len(nil) = 0`, `len(x :: l) = s(len(l))`.
pub fn len(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    let nno = NnoKit::new();
    let g = nno.zero.clone();
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, x.clone(), kit.lx.clone(), ObjExpr::Nat]);
    let h = compose(&nno.succ, &proj(&h_dom, 3).unwrap()).unwrap();
    let rec = list_rec(&g, &h).unwrap();
    let mut f = drop_unit(&rec, kit.lx);
    f.label = Some("len".to_string());
    f
}

/// `tr : L(X) -> L(X)`, `tr(nil) = nil`, `tr(x :: l) = l`.
pub fn tr(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    let g = kit.nil.clone();
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, x.clone(), kit.lx.clone(), kit.lx.clone()]);
    let h = proj(&h_dom, 2).unwrap();
    let rec = list_rec(&g, &h).unwrap();
    let mut f = drop_unit(&rec, kit.lx.clone());
    f.label = Some("tr".to_string());
    f
}

/// `tail : N x L(X) -> L(X)`, `tail(0, l) = l`, `tail(sn, l) = tr(tail(n, l))`.
pub fn tail(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    let g = identity(&kit.lx);
    let h_dom = ObjExpr::Prod(vec![kit.lx.clone(), ObjExpr::Nat, kit.lx.clone()]);
    let h = compose(&tr(x), &proj(&h_dom, 2).unwrap()).unwrap();
    let rec = arith::nno_rec(&g, &h).unwrap();
    let dom = ObjExpr::Prod(vec![ObjExpr::Nat, kit.lx.clone()]);
    let mut f = swap_args(&rec, dom);
    f.label = Some("tail".to_string());
    f
}

/// `zerothDef : X x L(X) -> X`, default for nil, head otherwise.
pub fn zeroth_def(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    let g = identity(x);
    let h_dom = ObjExpr::Prod(vec![x.clone(), x.clone(), kit.lx.clone(), x.clone()]);
    let h = proj(&h_dom, 1).unwrap();
    let mut f = list_rec(&g, &h).unwrap();
    f.label = Some("zerothDef".to_string());
    f
}

/// `nthDef : X x N x L(X) -> X`, `nthDef(x, n, l) = zerothDef(x, tail(n, l))`.
pub fn nth_def(x: &ObjExpr) -> Arrow {
    nth_def_from(x, &zeroth_def(x), &tail(x))
}

fn nth_def_from(x: &ObjExpr, zeroth: &Arrow, tail: &Arrow) -> Arrow {
    let kit = ListKit::new(x);
    let dom = ObjExpr::Prod(vec![x.clone(), ObjExpr::Nat, kit.lx.clone()]);
    let zeroth = zeroth.clone();
    let tail = tail.clone();
    Arrow::new(dom, x.clone(), Some("nthDef".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        let t = tail.apply(&Elem::Tup(vec![p[1].clone(), p[2].clone()]));
        zeroth.apply(&Elem::Tup(vec![p[0].clone(), t]))
    })
}

/// Head/rest decomposition of a nonempty list value.
pub fn decompose_nonempty(l: &Elem) -> Result<(Elem, Elem)> {
    let items = l.as_seq();
    match items.split_first() {
        Some((head, rest)) => Ok((head.clone(), Elem::Seq(rest.to_vec()))),
        None => Err(Error::Precondition("decompose_nonempty on the empty list".into())),
    }
}

/// `concat : L(X) x L(X) -> L(X)`, recursion on the first list.
pub fn concat(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    // recursion parameter is the second list; swap afterwards
    let g = identity(&kit.lx);
    let h_dom =
        ObjExpr::Prod(vec![kit.lx.clone(), x.clone(), kit.lx.clone(), kit.lx.clone()]);
    let h = compose(
        &kit.cons,
        &pairing(&[proj(&h_dom, 1).unwrap(), proj(&h_dom, 3).unwrap()]).unwrap(),
    )
    .unwrap();
    let rec = list_rec(&g, &h).unwrap();
    let dom = ObjExpr::Prod(vec![kit.lx.clone(), kit.lx.clone()]);
    let mut f = swap_args(&rec, dom);
    f.label = Some("concat".to_string());
    f
}

/// `singleton : X -> L(X)`, `x -> x :: nil`.
pub fn singleton(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    Arrow::new(x.clone(), kit.lx, Some("singleton".to_string()), |e: &Elem| {
        Elem::Seq(vec![e.clone()])
    })
}

/// `Seq[f] : N x N x A -> L(X)` for `f : N x A -> X`:
/// `Seq[f](m, 0, a) = nil`, `Seq[f](m, sn, a) = Seq[f](m, n, a) ++ [f(m+n, a)]`.
pub fn seq_build(f: &Arrow) -> Result<Arrow> {
    let (a_obj, x_obj) = match &f.dom {
        ObjExpr::Prod(comps) if comps.len() == 2 && comps[0] == ObjExpr::Nat => {
            (comps[1].clone(), f.cod.clone())
        }
        other => {
            return Err(Error::ObjMismatch {
                expected: "N x A".into(),
                found: other.to_string(),
                context: "seq_build entry arrow".into(),
            })
        }
    };
    let kit = ListKit::new(&x_obj);
    // nno_rec over parameter (m, a), recursion in the middle argument
    let p_obj = ObjExpr::Prod(vec![ObjExpr::Nat, a_obj.clone()]);
    let g = compose(&kit.nil, &crate::setmodel::terminal_map(&p_obj))?;
    let h_dom = ObjExpr::Prod(vec![p_obj.clone(), ObjExpr::Nat, kit.lx.clone()]);
    let add = arith::add();
    let f_arrow = f.clone();
    let cat = concat(&x_obj);
    let single = singleton(&x_obj);
    let h = Arrow::new(h_dom, kit.lx.clone(), None, move |e: &Elem| {
        let parts = e.as_tup();
        let p = parts[0].as_tup();
        let idx = add.apply(&Elem::Tup(vec![p[0].clone(), parts[1].clone()]));
        let entry = f_arrow.apply(&Elem::Tup(vec![idx, p[1].clone()]));
        cat.apply(&Elem::Tup(vec![parts[2].clone(), single.apply(&entry)]))
    });
    let rec = arith::nno_rec(&g, &h)?;
    let dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat, a_obj]);
    let rec2 = rec;
    Ok(Arrow::new(dom, kit.lx, Some("Seq".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        rec2.apply(&Elem::Tup(vec![
            Elem::Tup(vec![p[0].clone(), p[2].clone()]),
            p[1].clone(),
        ]))
    }))
}

/// `List[f, p] : A -> L(X)`, `List[f, p](a) = Seq[f](0, p(a), a)`.
pub fn list_build(f: &Arrow, p: &Arrow) -> Result<Arrow> {
    if p.cod != ObjExpr::Nat {
        return Err(Error::ObjMismatch {
            expected: "N".into(),
            found: p.cod.to_string(),
            context: "list_build length arrow".into(),
        });
    }
    let seq = seq_build(f)?;
    let a_obj = p.dom.clone();
    let p = p.clone();
    Ok(Arrow::new(a_obj, seq.cod.clone(), Some("List".to_string()), move |e: &Elem| {
        seq.apply(&Elem::Tup(vec![Elem::num(0), p.apply(e), e.clone()]))
    }))
}

/// `A : X x N x L(X) x L(X) -> L(X)`, the guarded cons step:
/// `L` if `len(l) <= k`, else `nthDef(x, P(len(l) - k), l) :: L`.
pub fn build_a(x: &ObjExpr) -> Arrow {
    build_a_from(x, &nth_def(x))
}

fn build_a_from(x: &ObjExpr, nth_def: &Arrow) -> Arrow {
    let kit = ListKit::new(x);
    let dom = ObjExpr::Prod(vec![x.clone(), ObjExpr::Nat, kit.lx.clone(), kit.lx.clone()]);
    let len = len(x);
    let monus = arith::monus();
    let pred = arith::pred();
    let cons = kit.cons.clone();
    let nth_def = nth_def.clone();
    Arrow::new(dom, kit.lx, Some("A".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        let ln = len.apply(&p[2]);
        let gap = monus.apply(&Elem::Tup(vec![ln, p[1].clone()]));
        if gap.as_nat().is_zero() {
            p[3].clone()
        } else {
            let idx = pred.apply(&gap);
            let head = nth_def.apply(&Elem::Tup(vec![p[0].clone(), idx, p[2].clone()]));
            cons.apply(&Elem::Tup(vec![head, p[3].clone()]))
        }
    })
}

/// `H : X x N x L(X) -> L(X)`, `H(x, k, l) = tail(len(l) - k, l)`.
pub fn build_h(x: &ObjExpr) -> Arrow {
    let kit = ListKit::new(x);
    let dom = ObjExpr::Prod(vec![x.clone(), ObjExpr::Nat, kit.lx.clone()]);
    let len = len(x);
    let monus = arith::monus();
    let tail = tail(x);
    Arrow::new(dom, kit.lx, Some("H".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        let ln = len.apply(&p[2]);
        let gap = monus.apply(&Elem::Tup(vec![ln, p[1].clone()]));
        tail.apply(&Elem::Tup(vec![gap, p[2].clone()]))
    })
}

/// The list arrows over a fixed X; tests may inject mutants (nth_def is
/// rebuilt from the injected tail so a tail mutation propagates).
#[derive(Clone)]
pub struct ListOps {
    pub x: ObjExpr,
    pub kit: ListKit,
    pub len: Arrow,
    pub tr: Arrow,
    pub tail: Arrow,
    pub zeroth_def: Arrow,
    pub nth_def: Arrow,
    pub concat: Arrow,
}

impl ListOps {
    pub fn standard(x: &ObjExpr) -> ListOps {
        ListOps {
            x: x.clone(),
            kit: ListKit::new(x),
            len: len(x),
            tr: tr(x),
            tail: tail(x),
            zeroth_def: zeroth_def(x),
            nth_def: nth_def(x),
            concat: concat(x),
        }
    }

    pub fn with_tail(x: &ObjExpr, tail: Arrow) -> ListOps {
        let mut ops = ListOps::standard(x);
        ops.nth_def = nth_def_from(x, &ops.zeroth_def, &tail);
        ops.tail = tail;
        ops
    }
}

fn random_endo(x_elems: &[Elem], x: &ObjExpr, rng: &mut ChaCha8Rng) -> Arrow {
    let table: Vec<(Elem, Elem)> = x_elems
        .iter()
        .map(|e| (e.clone(), x_elems.choose(rng).unwrap().clone()))
        .collect();
    Arrow::new(x.clone(), x.clone(), Some("f?".to_string()), move |e: &Elem| {
        table
            .iter()
            .find(|(k, _)| k == e)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| panic!("sampled arrow undefined at {e}"))
    })
}

/// The list law suite over a fixed X, exhaustive over enumerated lists,
/// naturals, and defaults, with seeded-random endomorphisms for the
/// naturality laws.
pub fn run_list_laws(ops: &ListOps, budget: &Budget, samples: usize) -> LawReport {
    let mut report = LawReport::new(*budget);
    let lists = enumerate(&ops.kit.lx, budget).elems;
    let nats = enumerate(&ObjExpr::Nat, budget).elems;
    let xs = enumerate(&ops.x, budget).elems;

    let len = |l: &Elem| ops.len.apply(l);
    let tr = |l: &Elem| ops.tr.apply(l);
    let tl = |n: &Elem, l: &Elem| ops.tail.apply(&Elem::Tup(vec![n.clone(), l.clone()]));
    let zd = |x: &Elem, l: &Elem| ops.zeroth_def.apply(&Elem::Tup(vec![x.clone(), l.clone()]));
    let nd = |x: &Elem, n: &Elem, l: &Elem| {
        ops.nth_def.apply(&Elem::Tup(vec![x.clone(), n.clone(), l.clone()]))
    };
    let cat = |a: &Elem, b: &Elem| ops.concat.apply(&Elem::Tup(vec![a.clone(), b.clone()]));
    let cons = |x: &Elem, l: &Elem| ops.kit.cons.apply(&Elem::Tup(vec![x.clone(), l.clone()]));
    let monus = arith::monus();
    let sub = |a: &Elem, b: &Elem| monus.apply(&Elem::Tup(vec![a.clone(), b.clone()]));
    let nil = Elem::Seq(vec![]);

    // len(tail(n, l)) = len(l) - n
    let mut cx = None;
    'a: for n in &nats {
        for l in &lists {
            if len(&tl(n, l)) != sub(&len(l), n) {
                cx = Some(format!("({n}, {l})"));
                break 'a;
            }
        }
    }
    report.push("list.len-tail", cx);

    // len(l) = 0 implies l = nil
    let cx = lists
        .iter()
        .find(|l| len(l).as_nat().is_zero() && **l != nil)
        .map(|l| l.to_string());
    report.push("list.len-zero-nil", cx);

    // nonempty l reassembles: l = zerothDef(x, l) :: tr(l), any default x
    let mut cx = None;
    'b: for l in &lists {
        if len(l).as_nat().is_zero() {
            continue;
        }
        for x in &xs {
            if cons(&zd(x, l), &tr(l)) != *l {
                cx = Some(format!("({x}, {l})"));
                break 'b;
            }
        }
    }
    report.push("list.head-tr-reassemble", cx);

    // nthDef(x, n, l) = zerothDef(x, tail(n, l))
    let mut cx = None;
    'c: for x in &xs {
        for n in &nats {
            for l in &lists {
                if nd(x, n, l) != zd(x, &tl(n, l)) {
                    cx = Some(format!("({x}, {n}, {l})"));
                    break 'c;
                }
            }
        }
    }
    report.push("list.nthDef-via-tail", cx);

    // out of range: len(l) <= n implies nthDef(x, n, l) = x;
    // in range: nthDef ignores the default
    let mut cx_out = None;
    let mut cx_irr = None;
    for x in &xs {
        for n in &nats {
            for l in &lists {
                let in_range = arith::lt_holds(n, &len(l));
                if !in_range && cx_out.is_none() && nd(x, n, l) != *x {
                    cx_out = Some(format!("({x}, {n}, {l})"));
                }
                if in_range && cx_irr.is_none() {
                    if let Some(x2) = xs.iter().find(|x2| nd(x, n, l) != nd(x2, n, l)) {
                        cx_irr = Some(format!("({x}, {x2}, {n}, {l})"));
                    }
                }
            }
        }
    }
    report.push("list.nthDef-default-out-of-range", cx_out);
    report.push("list.nthDef-default-irrelevant", cx_irr);

    // tail expansion: n < len(l) gives tail(n,l) = nthDef(x,n,l) :: tail(sn,l);
    // len(l) <= n gives tail(n,l) = nil
    let mut cx_exp = None;
    let mut cx_empty = None;
    for n in &nats {
        for l in &lists {
            if arith::lt_holds(n, &len(l)) {
                let sn = Elem::Num(n.as_nat() + BigUint::one());
                for x in &xs {
                    if cx_exp.is_none() && tl(n, l) != cons(&nd(x, n, l), &tl(&sn, l)) {
                        cx_exp = Some(format!("({x}, {n}, {l})"));
                    }
                }
            } else if cx_empty.is_none() && tl(n, l) != nil {
                cx_empty = Some(format!("({n}, {l})"));
            }
        }
    }
    report.push("list.tail-expansion", cx_exp);
    report.push("list.tail-past-end-nil", cx_empty);

    // len(l1 ++ l2) = len(l1) + len(l2), and nil is a left unit
    let add = arith::add();
    let mut cx_len = None;
    let mut cx_unit = None;
    for l1 in &lists {
        for l2 in &lists {
            let joined = cat(l1, l2);
            let want = add.apply(&Elem::Tup(vec![len(l1), len(l2)]));
            if cx_len.is_none() && len(&joined) != want {
                cx_len = Some(format!("({l1}, {l2})"));
            }
        }
        if cx_unit.is_none() && cat(&nil, l1) != *l1 {
            cx_unit = Some(l1.to_string());
        }
    }
    report.push("list.len-concat", cx_len);
    report.push("list.concat-nil-unit", cx_unit);

    // Seq laws over entry arrows f : N x 1 -> X sampled from X
    // (A = 1 suffices: the laws are parametric in a)
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let seq_dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Unit]);
    let succ = NnoKit::new().succ;
    let pred = arith::pred();
    let mut cx_head = None;
    let mut cx_tr = None;
    let mut cx_iter = None;
    let mut cx_len_seq = None;
    let seq_samples = if xs.is_empty() { 0 } else { samples.clamp(3, 20) };
    for _ in 0..seq_samples {
        let entries: Vec<Elem> = (0..=2 * budget.nat_max)
            .map(|_| xs.choose(&mut rng).unwrap().clone())
            .collect();
        let f = Arrow::new(seq_dom.clone(), ops.x.clone(), None, move |e: &Elem| {
            let idx: u64 = e.as_tup()[0].as_nat().try_into().expect("index fits");
            entries[idx as usize].clone()
        });
        let seq = seq_build(&f).unwrap();
        let sq = |m: &Elem, n: &Elem| {
            seq.apply(&Elem::Tup(vec![m.clone(), n.clone(), Elem::Star]))
        };
        let fv = |n: &Elem| f.apply(&Elem::Tup(vec![n.clone(), Elem::Star]));
        for m in &nats {
            for n in &nats {
                let sm = succ.apply(m);
                let sn = succ.apply(n);
                // head law on nonzero second argument
                if cx_head.is_none() && sq(m, &sn) != cons(&fv(m), &sq(&sm, n)) {
                    cx_head = Some(format!("Seq[f]({m}, s{n})"));
                }
                // tr(Seq[f](m, n)) = Seq[f](sm, Pn)
                if cx_tr.is_none() && tr(&sq(m, n)) != sq(&sm, &pred.apply(n)) {
                    cx_tr = Some(format!("Seq[f]({m}, {n})"));
                }
                // tail(k, Seq[f](m, n)) = Seq[f](m+k, n-k)
                for k in &nats {
                    let shifted = sq(
                        &add.apply(&Elem::Tup(vec![m.clone(), k.clone()])),
                        &sub(n, k),
                    );
                    if cx_iter.is_none() && tl(k, &sq(m, n)) != shifted {
                        cx_iter = Some(format!("tail({k}, Seq[f]({m}, {n}))"));
                    }
                }
                if cx_len_seq.is_none() && len(&sq(m, n)) != *n {
                    cx_len_seq = Some(format!("Seq[f]({m}, {n})"));
                }
            }
        }
    }
    report.push("list.seq-head", cx_head);
    report.push("list.tr-seq", cx_tr);
    report.push("list.iter-tr-seq", cx_iter);
    report.push("list.len-seq", cx_len_seq);

    // H/A recurrence and endpoints
    let h_arrow = build_h(&ops.x);
    let a_arrow = build_a(&ops.x);
    let mut cx_rec = None;
    let mut cx_zero = None;
    let mut cx_full = None;
    for x in &xs {
        for l in &lists {
            let hv = |k: &Elem| h_arrow.apply(&Elem::Tup(vec![x.clone(), k.clone(), l.clone()]));
            if cx_zero.is_none() && hv(&Elem::num(0)) != nil {
                cx_zero = Some(format!("H({x}, 0, {l})"));
            }
            if cx_full.is_none() && hv(&len(l)) != *l {
                cx_full = Some(format!("H({x}, len, {l})"));
            }
            for k in &nats {
                let sk = succ.apply(k);
                let step = a_arrow.apply(&Elem::Tup(vec![
                    x.clone(),
                    k.clone(),
                    l.clone(),
                    hv(k),
                ]));
                if cx_rec.is_none() && hv(&sk) != step {
                    cx_rec = Some(format!("H({x}, s{k}, {l})"));
                }
            }
        }
    }
    report.push("list.h-zero-nil", cx_zero);
    report.push("list.h-full-length", cx_full);
    report.push("list.h-a-recurrence", cx_rec);

    // naturality of len / zerothDef / nthDef under L(f), sampled f
    let mut cx_nat_len = None;
    let mut cx_nat_zd = None;
    let mut cx_nat_nd = None;
    let nat_samples = if xs.is_empty() { 1 } else { samples };
    for _ in 0..nat_samples {
        let f = if xs.is_empty() {
            identity(&ops.x)
        } else {
            random_endo(&xs, &ops.x, &mut rng)
        };
        let lf = map_list(&f);
        for l in &lists {
            let fl = lf.apply(l);
            if cx_nat_len.is_none() && len(&fl) != len(l) {
                cx_nat_len = Some(format!("({}, {l})", f.describe()));
            }
            for x in &xs {
                let fx = f.apply(x);
                if cx_nat_zd.is_none() && zd(&fx, &fl) != f.apply(&zd(x, l)) {
                    cx_nat_zd = Some(format!("({x}, {l})"));
                }
                for n in &nats {
                    if cx_nat_nd.is_none() && nd(&fx, n, &fl) != f.apply(&nd(x, n, l)) {
                        cx_nat_nd = Some(format!("({x}, {n}, {l})"));
                    }
                }
            }
        }
        // functor laws for this sample
        let lid = map_list(&identity(&ops.x));
        for l in &lists {
            if cx_nat_len.is_some() {
                break;
            }
            if lid.apply(l) != *l {
                cx_nat_len = Some(format!("L(id)({l})"));
            }
        }
    }
    report.push("list.natural-len", cx_nat_len);
    report.push("list.natural-zerothDef", cx_nat_zd);
    report.push("list.natural-nthDef", cx_nat_nd);

    // no-extensionality list equality: equal length and equal nthDef at
    // every default and index force equal lists
    let mut cx = None;
    'd: for l1 in &lists {
        for l2 in &lists {
            if l1 == l2 || len(l1) != len(l2) {
                continue;
            }
            let same = xs.iter().all(|x| {
                nats.iter().all(|n| nd(x, n, l1) == nd(x, n, l2))
            });
            let indices_covered =
                len(l1).as_nat() <= &BigUint::from(budget.nat_max);
            if same && indices_covered && !xs.is_empty() {
                cx = Some(format!("({l1}, {l2})"));
                break 'd;
            }
        }
    }
    report.push("list.eq-by-nthDef", cx);

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setmodel::finite_obj;

    fn b(nat_max: u64, len_max: u64) -> Budget {
        Budget { nat_max, len_max, card_cap: 100_000, seed: 0 }
    }

    fn lst(items: &[u64]) -> Elem {
        Elem::Seq(items.iter().map(|&i| Elem::num(i)).collect())
    }

    #[test]
    fn list_rec_defining_equations() {
        // f = len via the recursor: base on nil, step consumes the suffix
        let x = finite_obj(2);
        let f = len(&x);
        assert_eq!(f.apply(&lst(&[])), Elem::num(0));
        assert_eq!(f.apply(&lst(&[0, 1, 0])), Elem::num(3));
    }

    #[test]
    fn list_rec_rejects_bad_signature() {
        let x = finite_obj(2);
        let kit = ListKit::new(&x);
        assert!(list_rec(&kit.nil, &kit.cons).is_err());
    }

    #[test]
    fn list_rec_step_sees_suffix() {
        // h returns the rest, so f(a, l) = tr(l); checks fold orientation
        let x = ObjExpr::Nat;
        let kit = ListKit::new(&x);
        let g = kit.nil.clone();
        let h_dom =
            ObjExpr::Prod(vec![ObjExpr::Unit, x.clone(), kit.lx.clone(), kit.lx.clone()]);
        let h = proj(&h_dom, 2).unwrap();
        let f = list_rec(&g, &h).unwrap();
        let out = f.apply(&Elem::Tup(vec![Elem::Star, lst(&[5, 6, 7])]));
        assert_eq!(out, lst(&[6, 7]));
    }

    #[test]
    fn map_list_is_elementwise() {
        let s = NnoKit::new().succ;
        let f = map_list(&s);
        assert_eq!(f.apply(&lst(&[1, 2])), lst(&[2, 3]));
        assert_eq!(f.apply(&lst(&[])), lst(&[]));
    }

    #[test]
    fn basic_operations_examples() {
        let x = finite_obj(3);
        let ops = ListOps::standard(&x);
        let abc = lst(&[0, 1, 2]);
        assert_eq!(ops.len.apply(&abc), Elem::num(3));
        assert_eq!(ops.tr.apply(&abc), lst(&[1, 2]));
        assert_eq!(
            ops.tail.apply(&Elem::Tup(vec![Elem::num(2), abc.clone()])),
            lst(&[2])
        );
        assert_eq!(
            ops.tail.apply(&Elem::Tup(vec![Elem::num(5), abc.clone()])),
            lst(&[])
        );
        let nth = |d: u64, n: u64, l: &Elem| {
            ops.nth_def
                .apply(&Elem::Tup(vec![Elem::num(d), Elem::num(n), l.clone()]))
        };
        assert_eq!(nth(0, 1, &abc), Elem::num(1));
        assert_eq!(nth(2, 5, &lst(&[0, 1])), Elem::num(2));
        assert_eq!(
            ops.concat.apply(&Elem::Tup(vec![lst(&[0]), lst(&[1, 2])])),
            abc
        );
    }

    #[test]
    fn seq_build_examples() {
        // f(n, *) = n gives Seq[f](0, 3, *) = [0, 1, 2]
        let dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Unit]);
        let f = proj(&dom, 0).unwrap();
        let seq = seq_build(&f).unwrap();
        let sq = |m: u64, n: u64| {
            seq.apply(&Elem::Tup(vec![Elem::num(m), Elem::num(n), Elem::Star]))
        };
        assert_eq!(sq(0, 3), lst(&[0, 1, 2]));
        assert_eq!(sq(1, 2), lst(&[1, 2]));
        assert_eq!(sq(4, 0), lst(&[]));
    }

    #[test]
    fn seq_build_rejects_bad_entry_arrow() {
        assert!(seq_build(&identity(&ObjExpr::Nat)).is_err());
    }

    #[test]
    fn list_build_reads_length_arrow() {
        // List[f, p] with f(n, a) = n + a and p(a) = a
        let dom = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
        let f = arith::add().retyped(dom, ObjExpr::Nat);
        let p = identity(&ObjExpr::Nat);
        let bld = list_build(&f, &p).unwrap();
        assert_eq!(bld.apply(&Elem::num(3)), lst(&[3, 4, 5]));
        assert_eq!(bld.apply(&Elem::num(0)), lst(&[]));
    }

    #[test]
    fn h_and_a_examples() {
        let x = finite_obj(2);
        let h = build_h(&x);
        let hv = |d: u64, k: u64, l: &Elem| {
            h.apply(&Elem::Tup(vec![Elem::num(d), Elem::num(k), l.clone()]))
        };
        let ab = lst(&[0, 1]);
        assert_eq!(hv(0, 0, &ab), lst(&[]));
        assert_eq!(hv(0, 1, &ab), lst(&[1]));
        assert_eq!(hv(0, 2, &ab), ab);
        assert_eq!(hv(0, 9, &ab), ab);

        let a = build_a(&x);
        // below the boundary: cons the next element from the source list
        let step = a.apply(&Elem::Tup(vec![
            Elem::num(0),
            Elem::num(1),
            ab.clone(),
            lst(&[1]),
        ]));
        assert_eq!(step, ab);
        // at or past the boundary: pass the accumulator through
        let stay = a.apply(&Elem::Tup(vec![
            Elem::num(0),
            Elem::num(2),
            ab.clone(),
            lst(&[0, 1]),
        ]));
        assert_eq!(stay, lst(&[0, 1]));
    }

    #[test]
    fn decompose_nonempty_splits() {
        let (h, t) = decompose_nonempty(&lst(&[4, 5])).unwrap();
        assert_eq!(h, Elem::num(4));
        assert_eq!(t, lst(&[5]));
        assert!(decompose_nonempty(&lst(&[])).is_err());
    }

    #[test]
    fn law_suite_passes_small_cards() {
        for card in 0..=2u64 {
            let ops = ListOps::standard(&finite_obj(card));
            let report = run_list_laws(&ops, &b(3, 2), 3);
            assert!(report.all_pass(), "card {card}: {}", report.render());
        }
    }

    #[test]
    fn mutant_tail_fails_named_law() {
        // tail that never truncates past one step: tail(n, l) = tr(l) for n > 0
        let x = finite_obj(2);
        let kit = ListKit::new(&x);
        let dom = ObjExpr::Prod(vec![ObjExpr::Nat, kit.lx.clone()]);
        let tr_arrow = tr(&x);
        let bad = Arrow::new(dom, kit.lx.clone(), Some("tail".to_string()), move |e: &Elem| {
            let p = e.as_tup();
            if p[0].as_nat().is_zero() {
                p[1].clone()
            } else {
                tr_arrow.apply(&p[1])
            }
        });
        let ops = ListOps::with_tail(&x, bad);
        let report = run_list_laws(&ops, &b(3, 3), 3);
        assert!(!report.all_pass());
        let failed = report.find("list.len-tail").unwrap();
        assert!(!failed.pass, "{}", report.render());
        assert!(failed.counterexample.is_some());
    }
}
