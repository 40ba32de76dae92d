//! The polynomial 1 <- E -> N -> 1 and its extension, nth, the
//! universal-morphism construction and verification, the brute-force
//! oracle, and the slice-category transformers it is built from.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};
use crate::listobj::{self, ListKit};
use crate::report::VerifyReport;
use crate::setmodel::{
    arrows_equal, case_merge, compose, constant, enumerate, finite_obj, pairing, proj,
    pullback_obj, Arrow, Budget, Elem, ObjExpr, Pullback, SliceObj,
};

/// A polynomial diagram `I <-s- A -f-> B -t-> J`.
#[derive(Clone, Debug)]
pub struct PolyDiagram {
    pub s: Arrow,
    pub f: Arrow,
    pub t: Arrow,
}

impl PolyDiagram {
    pub fn new(s: Arrow, f: Arrow, t: Arrow) -> Result<PolyDiagram> {
        if s.dom != f.dom || f.cod != t.dom {
            return Err(Error::ObjMismatch {
                expected: "I <- A -> B -> J with shared A and B".into(),
                found: format!("{:?} / {:?} / {:?}", s, f, t),
                context: "polynomial diagram".into(),
            });
        }
        Ok(PolyDiagram { s, f, t })
    }
}

/// The object `E = {(m, n) : N x N | m < n}` with its second projection.
pub fn make_e() -> (ObjExpr, Arrow) {
    let nn = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
    let succ = arith::NnoKit::new().succ;
    let sm = compose(&succ, &proj(&nn, 0).unwrap()).unwrap();
    let lhs = compose(&arith::monus(), &pairing(&[sm, proj(&nn, 1).unwrap()]).unwrap()).unwrap();
    let rhs = constant(&nn, &ObjExpr::Nat, Elem::num(0));
    let e_obj = ObjExpr::sub(nn, lhs, rhs).expect("E constraint arrows are parallel");
    let mut pi2 = proj(&e_obj, 1).unwrap();
    pi2.label = Some("pi2E".to_string());
    (e_obj, pi2)
}

/// `E x_N A` for a length arrow `l_A : A -> N`, with its reduced form
/// `{(m, a) : N x A | m < l_A(a)}` and the mutually inverse maps.
#[derive(Clone, Debug)]
pub struct ETimes {
    pub pb: Pullback,
    pub reduced: ObjExpr,
    pub to_reduced: Arrow,
    pub from_reduced: Arrow,
}

pub fn e_times(l_a: &Arrow) -> Result<ETimes> {
    if l_a.cod != ObjExpr::Nat {
        return Err(Error::ObjMismatch {
            expected: "N".into(),
            found: l_a.cod.to_string(),
            context: "e_times length arrow".into(),
        });
    }
    let (_, pi2e) = make_e();
    let pb = pullback_obj(&pi2e, l_a)?;
    let a_obj = l_a.dom.clone();
    let na = ObjExpr::Prod(vec![ObjExpr::Nat, a_obj.clone()]);
    let succ = arith::NnoKit::new().succ;
    let sm = compose(&succ, &proj(&na, 0)?)?;
    let la_pi2 = compose(l_a, &proj(&na, 1)?)?;
    let lhs = compose(&arith::monus(), &pairing(&[sm, la_pi2])?)?;
    let rhs = constant(&na, &ObjExpr::Nat, Elem::num(0));
    let reduced = ObjExpr::sub(na, lhs, rhs)?;
    // ((m, n), a) -> (m, a)
    let to_reduced = Arrow::new(pb.obj.clone(), reduced.clone(), None, |e: &Elem| {
        let p = e.as_tup();
        Elem::Tup(vec![p[0].as_tup()[0].clone(), p[1].clone()])
    });
    // (m, a) -> ((m, l_A(a)), a)
    let l_a2 = l_a.clone();
    let from_reduced = Arrow::new(reduced.clone(), pb.obj.clone(), None, move |e: &Elem| {
        let p = e.as_tup();
        let n = l_a2.apply(&p[1]);
        Elem::Tup(vec![Elem::Tup(vec![p[0].clone(), n]), p[1].clone()])
    });
    Ok(ETimes { pb, reduced, to_reduced, from_reduced })
}

/// `Id_E x_N f : E x_N A -> E x_N B`, defined when `l_B . f = l_A`.
pub fn id_times_f(f: &Arrow, l_a: &Arrow, l_b: &Arrow, budget: &Budget) -> Result<Arrow> {
    let triangle = compose(l_b, f)?;
    let eq = arrows_equal(&triangle, l_a, budget)?;
    if let Some(cx) = eq.counterexample {
        return Err(Error::ConstraintViolated {
            constraint: "l_B . f = l_A".into(),
            witness: format!("{}: {} != {}", cx.input, cx.lhs, cx.rhs),
        });
    }
    let src = e_times(l_a)?;
    let dst = e_times(l_b)?;
    let f = f.clone();
    Ok(Arrow::new(src.pb.obj, dst.pb.obj, None, move |e: &Elem| {
        let p = e.as_tup();
        Elem::Tup(vec![p[0].clone(), f.apply(&p[1])])
    }))
}

/// `{(m, l) : N x L(X) | m < len(l)}`, the reduced domain of nth.
pub fn m_lt_len_obj(x: &ObjExpr) -> ObjExpr {
    let kit = ListKit::new(x);
    let nl = ObjExpr::Prod(vec![ObjExpr::Nat, kit.lx]);
    let succ = arith::NnoKit::new().succ;
    let sm = compose(&succ, &proj(&nl, 0).unwrap()).unwrap();
    let len_pi2 = compose(&listobj::len(x), &proj(&nl, 1).unwrap()).unwrap();
    let lhs =
        compose(&arith::monus(), &pairing(&[sm, len_pi2]).unwrap()).unwrap();
    let rhs = constant(&nl, &ObjExpr::Nat, Elem::num(0));
    ObjExpr::sub(nl, lhs, rhs).expect("constraint arrows are parallel")
}

/// The default term: on `{(m, l) | m < len(l)}` the list is nonempty, so
/// its head is a well-typed default.
pub fn default_term(x: &ObjExpr) -> Arrow {
    let dom = m_lt_len_obj(x);
    Arrow::new(dom, x.clone(), Some("def".to_string()), |e: &Elem| {
        let (head, _) = listobj::decompose_nonempty(&e.as_tup()[1])
            .expect("list in the nth domain is nonempty");
        head
    })
}

/// `nth(m, l) = nthDef(def, m, l)` on the reduced domain.
pub fn nth_reduced(x: &ObjExpr) -> Arrow {
    let dom = m_lt_len_obj(x);
    let def = default_term(x);
    let nth_def = listobj::nth_def(x);
    Arrow::new(dom, x.clone(), Some("nth".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        let d = def.apply(e);
        nth_def.apply(&Elem::Tup(vec![d, p[0].clone(), p[1].clone()]))
    })
}

/// `nth : E x_N L(X) -> X` on the pullback representation.
pub fn nth_arrow(x: &ObjExpr) -> Result<Arrow> {
    let et = e_times(&listobj::len(x))?;
    let reduced = nth_reduced(x);
    compose(&reduced, &et.to_reduced)
}

// ---------------------------------------------------------------------------
// Verification problems
// ---------------------------------------------------------------------------

/// A finite verification problem: named elements for X and A, a length
/// per element of A, and a table for g on `{(m, a) | m < l_A(a)}`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub x_names: Vec<String>,
    pub a_names: Vec<String>,
    pub lens: Vec<u64>,
    pub g: BTreeMap<(u64, usize), usize>,
}

impl Instance {
    pub fn validate(&self) -> Result<()> {
        if self.lens.len() != self.a_names.len() {
            return Err(Error::Instance("one length required per element of A".into()));
        }
        for (i, len) in self.lens.iter().enumerate() {
            for m in 0..*len {
                match self.g.get(&(m, i)) {
                    None => {
                        return Err(Error::Instance(format!(
                            "missing g({m}, {})",
                            self.a_names[i]
                        )))
                    }
                    Some(x) if *x >= self.x_names.len() => {
                        return Err(Error::Instance(format!(
                            "g({m}, {}) names an unknown element of X",
                            self.a_names[i]
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        for (m, i) in self.g.keys() {
            if *i >= self.a_names.len() {
                return Err(Error::Instance(format!("g entry with unknown A index {i}")));
            }
            if *m >= self.lens[*i] {
                return Err(Error::Instance(format!(
                    "g({m}, {}) lies outside m < lA",
                    self.a_names[*i]
                )));
            }
        }
        Ok(())
    }

    pub fn x_obj(&self) -> ObjExpr {
        finite_obj(self.x_names.len() as u64)
    }

    pub fn a_obj(&self) -> ObjExpr {
        finite_obj(self.a_names.len() as u64)
    }

    /// `l_A : A -> N` from the table.
    pub fn l_arrow(&self) -> Arrow {
        let lens = self.lens.clone();
        Arrow::new(self.a_obj(), ObjExpr::Nat, Some("lA".to_string()), move |e: &Elem| {
            let i: u64 = e.as_nat().try_into().expect("A index fits");
            Elem::num(lens[i as usize])
        })
    }

    pub fn g_at(&self, m: u64, a_idx: usize) -> Option<Elem> {
        self.g.get(&(m, a_idx)).map(|x| Elem::num(*x as u64))
    }

    /// Budget large enough to enumerate A, X, and all produced lists.
    pub fn suggested_budget(&self) -> Budget {
        let max_len = self.lens.iter().copied().max().unwrap_or(0);
        let nat_max = [self.x_names.len() as u64, self.a_names.len() as u64, max_len + 1]
            .into_iter()
            .max()
            .unwrap();
        Budget { nat_max, len_max: max_len, card_cap: 1_000_000, seed: 0 }
    }
}

/// `g'(m, a) = g(IdUntil(m, l_A(a)), a)`: totalizes g in the index
/// argument over the positive part of A.
pub fn extend_to_total(inst: &Instance) -> Result<Arrow> {
    let l = inst.l_arrow();
    let (_, pos) = arith::split_by_zero(&l)?;
    let dom = ObjExpr::Prod(vec![ObjExpr::Nat, pos.obj.clone()]);
    let id_until = arith::id_until();
    let inst2 = inst.clone();
    let l2 = l.clone();
    Ok(Arrow::new(dom, inst.x_obj(), Some("g'".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        let la = l2.apply(&p[1]);
        let m = id_until.apply(&Elem::Tup(vec![p[0].clone(), la]));
        let m_u64: u64 = m.as_nat().try_into().expect("index fits");
        let a_idx: usize = usize::try_from(p[1].as_nat()).expect("A index fits");
        inst2
            .g_at(m_u64, a_idx)
            .unwrap_or_else(|| panic!("g undefined at ({m_u64}, {a_idx})"))
    }))
}

/// The existence half: `h(a) = nil` on `A_0`, `h(a) = List[g', l_A](a)`
/// on `A_{>0}`, glued by case analysis and rechecked.
pub fn construct_h(inst: &Instance) -> Result<Arrow> {
    inst.validate()?;
    let budget = inst.suggested_budget();
    let x = inst.x_obj();
    let kit = ListKit::new(&x);
    let l = inst.l_arrow();
    let (zero, pos) = arith::split_by_zero(&l)?;
    let nil_branch = constant(&zero.obj, &kit.lx, Elem::Seq(vec![]));
    let g_prime = extend_to_total(inst)?;
    let l_pos = compose(&l, &pos.include)?;
    let pos_branch = listobj::list_build(&g_prime, &l_pos)?;
    let h = case_merge(
        &[(zero.include.clone(), nil_branch), (pos.include.clone(), pos_branch)],
        &budget,
    )?;
    let report = verify_solution(inst, &h, &budget)?;
    if !report.pass() {
        let failing = report
            .checks
            .iter()
            .find(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.counterexample.as_deref().unwrap_or("")))
            .unwrap_or_default();
        return Err(Error::Defect(format!("constructed h fails its own check ({failing})")));
    }
    Ok(h)
}

/// Checks `len . h = l_A` and `g = nth . (Id x_N h)` elementwise.
pub fn verify_solution(inst: &Instance, h: &Arrow, budget: &Budget) -> Result<VerifyReport> {
    let x = inst.x_obj();
    let a_obj = inst.a_obj();
    if h.dom != a_obj || h.cod != ObjExpr::list_of(x.clone()) {
        return Err(Error::ObjMismatch {
            expected: format!("{a_obj} -> L(X)"),
            found: format!("{} -> {}", h.dom, h.cod),
            context: "verify_solution".into(),
        });
    }
    let mut report = VerifyReport::new(*budget);
    let l = inst.l_arrow();
    let len = listobj::len(&x);
    let nth = nth_reduced(&x);
    let elems = enumerate(&a_obj, budget).elems;

    let mut cx = None;
    for a in &elems {
        let got = len.apply(&h.apply(a));
        let want = l.apply(a);
        if got != want {
            cx = Some(format!("a = {a}: len(h(a)) = {got}, lA(a) = {want}"));
            break;
        }
    }
    report.push("len-equation", cx);

    let mut cx = None;
    'outer: for a in &elems {
        let a_idx: usize = usize::try_from(a.as_nat()).expect("A index fits");
        let ha = h.apply(a);
        for m in 0..inst.lens.get(a_idx).copied().unwrap_or(0) {
            let want = match inst.g_at(m, a_idx) {
                Some(v) => v,
                None => continue,
            };
            // nth lives on m < len(l); a short h(a) is a counterexample,
            // not a domain error
            if !arith::lt_holds(&Elem::num(m), &len.apply(&ha)) {
                cx = Some(format!("(m, a) = ({m}, {a}): h(a) = {ha} has no index {m}"));
                break 'outer;
            }
            let got = nth.apply(&Elem::Tup(vec![Elem::num(m), ha.clone()]));
            if got != want {
                cx = Some(format!("(m, a) = ({m}, {a}): nth = {got}, g = {want}"));
                break 'outer;
            }
        }
    }
    report.push("g-equation", cx);
    Ok(report)
}

fn words_of_length(alphabet: &[Elem], n: u64) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for prefix in &out {
            for e in alphabet {
                let mut w = prefix.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Enumerates every `h` with the prescribed lengths and keeps those whose
/// word entries match the g table; the independent oracle for existence
/// and uniqueness. The lengths hold by construction, and the entries are
/// compared natively rather than through the categorical nth.
pub fn brute_force_solutions(inst: &Instance, budget: &Budget) -> Result<Vec<Arrow>> {
    inst.validate()?;
    let x = inst.x_obj();
    let xs = enumerate(&x, budget).elems;
    let mut space = BigUint::one();
    for len in &inst.lens {
        space *= BigUint::from(xs.len()).pow(
            (*len).try_into().expect("length fits"),
        );
    }
    if space > BigUint::from(budget.card_cap) {
        return Err(Error::Budget(format!(
            "brute-force search space has {space} candidates (cap {})",
            budget.card_cap
        )));
    }
    // per-element candidate words, in X enumeration order; a word for a
    // matches iff every prescribed entry equals the g table
    let matches = |a_idx: usize, word: &[Elem]| {
        (0..inst.lens[a_idx]).all(|m| match inst.g_at(m, a_idx) {
            Some(want) => word[m as usize] == want,
            None => true,
        })
    };
    let per_a: Vec<Vec<Vec<Elem>>> =
        inst.lens.iter().map(|len| words_of_length(&xs, *len)).collect();
    let mut tables: Vec<Vec<Elem>> = vec![vec![]];
    for (a_idx, cands) in per_a.iter().enumerate() {
        let mut next = Vec::new();
        for table in &tables {
            for cand in cands {
                if !matches(a_idx, cand) {
                    continue;
                }
                let mut t = table.clone();
                t.push(Elem::Seq(cand.clone()));
                next.push(t);
            }
        }
        tables = next;
    }
    let a_obj = inst.a_obj();
    let lx = ObjExpr::list_of(x);
    Ok(tables
        .into_iter()
        .map(|table| {
            Arrow::new(a_obj.clone(), lx.clone(), None, move |e: &Elem| {
                let i: usize = usize::try_from(e.as_nat()).expect("A index fits");
                table[i].clone()
            })
        })
        .collect())
}

/// Replays the uniqueness argument in three stages: nthDef agreement at
/// every default and index, the parameterized equality through the
/// reassembly arrow H, and the final equality after the zero/positive
/// split of A.
pub fn uniqueness_by_theory(
    inst: &Instance,
    h1: &Arrow,
    h2: &Arrow,
    budget: &Budget,
) -> Result<VerifyReport> {
    for (name, h) in [("h1", h1), ("h2", h2)] {
        if !verify_solution(inst, h, budget)?.pass() {
            return Err(Error::Precondition(format!(
                "{name} does not satisfy the two defining equations"
            )));
        }
    }
    let mut report = VerifyReport::new(*budget);
    let x = inst.x_obj();
    let nth_def = listobj::nth_def(&x);
    let xs = enumerate(&x, budget).elems;
    let a_elems = enumerate(&inst.a_obj(), budget).elems;
    let nats = enumerate(&ObjExpr::Nat, budget).elems;

    // stage 1: nthDef(x, n, h1(a)) = nthDef(x, n, h2(a)) for every
    // default and index (below and above the length alike)
    let mut cx = None;
    'one: for a in &a_elems {
        let l1 = h1.apply(a);
        let l2 = h2.apply(a);
        for x_def in &xs {
            for n in &nats {
                let v1 = nth_def.apply(&Elem::Tup(vec![x_def.clone(), n.clone(), l1.clone()]));
                let v2 = nth_def.apply(&Elem::Tup(vec![x_def.clone(), n.clone(), l2.clone()]));
                if v1 != v2 {
                    cx = Some(format!("(x, n, a) = ({x_def}, {n}, {a}): {v1} != {v2}"));
                    break 'one;
                }
            }
        }
    }
    report.push("nthDef-agreement", cx);

    // stage 2: H(x, k, h1(a)) = H(x, k, h2(a)) for all k, which at
    // k = len recovers the parameterized equality h1(a) =_{x,a} h2(a)
    let h_arrow = listobj::build_h(&x);
    let mut cx = None;
    'two: for a in &a_elems {
        let l1 = h1.apply(a);
        let l2 = h2.apply(a);
        for x_def in &xs {
            for k in &nats {
                let v1 = h_arrow.apply(&Elem::Tup(vec![x_def.clone(), k.clone(), l1.clone()]));
                let v2 = h_arrow.apply(&Elem::Tup(vec![x_def.clone(), k.clone(), l2.clone()]));
                if v1 != v2 {
                    cx = Some(format!("(x, k, a) = ({x_def}, {k}, {a}): {v1} != {v2}"));
                    break 'two;
                }
            }
        }
    }
    report.push("parameterized-equality", cx);

    // stage 3: equality after splitting A into lA = 0 and lA > 0
    let mut cx = None;
    for a in &a_elems {
        let a_idx: usize = usize::try_from(a.as_nat()).expect("A index fits");
        let l1 = h1.apply(a);
        let l2 = h2.apply(a);
        if inst.lens[a_idx] == 0 {
            if l1 != Elem::Seq(vec![]) || l2 != Elem::Seq(vec![]) {
                cx = Some(format!("a = {a} in the zero part: {l1} / {l2}"));
                break;
            }
        } else if l1 != l2 {
            cx = Some(format!("a = {a} in the positive part: {l1} != {l2}"));
            break;
        }
    }
    report.push("split-equality", cx);
    Ok(report)
}

// ---------------------------------------------------------------------------
// Slice transformers and the polynomial extension
// ---------------------------------------------------------------------------

/// `Sigma_f`: post-composition.
pub fn sigma_f(f: &Arrow, p: &SliceObj) -> Result<SliceObj> {
    if p.base != f.dom {
        return Err(Error::ObjMismatch {
            expected: f.dom.to_string(),
            found: p.base.to_string(),
            context: "sigma_f".into(),
        });
    }
    Ok(SliceObj::new(compose(f, &p.proj)?))
}

/// `Delta_f`: pullback along f.
pub fn delta_f(f: &Arrow, p: &SliceObj) -> Result<SliceObj> {
    if p.base != f.cod {
        return Err(Error::ObjMismatch {
            expected: f.cod.to_string(),
            found: p.base.to_string(),
            context: "delta_f".into(),
        });
    }
    let pb = pullback_obj(&p.proj, f)?;
    Ok(SliceObj::new(pb.p2))
}

/// `Pi_f` computed fiberwise: the carrier over `b` is the set of sections
/// assigning to each `a` in the fiber of f over b an element of the
/// p-fiber over a, keyed by fiber enumeration order. Elements are
/// `(b, [section entries])`.
#[derive(Clone, Debug)]
pub struct PiSlice {
    pub slice: SliceObj,
    pub sections: Vec<Elem>,
    pub truncated: bool,
}

pub fn pi_f(f: &Arrow, p: &SliceObj, budget: &Budget) -> Result<PiSlice> {
    if p.base != f.dom {
        return Err(Error::ObjMismatch {
            expected: f.dom.to_string(),
            found: p.base.to_string(),
            context: "pi_f".into(),
        });
    }
    let b_elems = enumerate(&f.cod, budget);
    let a_elems = enumerate(&f.dom, budget);
    let y_elems = enumerate(&p.carrier, budget);
    if a_elems.truncated || y_elems.truncated {
        return Err(Error::Budget("pi_f requires fully enumerated fibers".into()));
    }
    let mut sections = Vec::new();
    let mut truncated = b_elems.truncated;
    'base: for b in &b_elems.elems {
        let fiber: Vec<&Elem> = a_elems.elems.iter().filter(|a| f.apply(a) == *b).collect();
        let choices: Vec<Vec<&Elem>> = fiber
            .iter()
            .map(|a| y_elems.elems.iter().filter(|y| p.proj.apply(y) == **a).collect())
            .collect();
        let mut partial: Vec<Vec<Elem>> = vec![vec![]];
        for opts in &choices {
            let mut next = Vec::new();
            for prefix in &partial {
                for y in opts {
                    let mut s = prefix.clone();
                    s.push((*y).clone());
                    next.push(s);
                }
            }
            partial = next;
            if partial.len() as u64 > budget.card_cap {
                return Err(Error::Budget(format!(
                    "pi_f fiber over {b} exceeds card_cap {}",
                    budget.card_cap
                )));
            }
        }
        for s in partial {
            if sections.len() as u64 >= budget.card_cap {
                truncated = true;
                break 'base;
            }
            sections.push(Elem::Tup(vec![b.clone(), Elem::Seq(s)]));
        }
    }
    // the carrier as a subobject, so membership checks still work
    let base = ObjExpr::Prod(vec![f.cod.clone(), ObjExpr::list_of(p.carrier.clone())]);
    let f2 = f.clone();
    let p2 = p.clone();
    let bb = *budget;
    let chi = Arrow::new(base.clone(), ObjExpr::Nat, None, move |e: &Elem| {
        let parts = e.as_tup();
        let b = &parts[0];
        let entries = parts[1].as_seq();
        let fiber: Vec<Elem> = enumerate(&f2.dom, &bb)
            .elems
            .into_iter()
            .filter(|a| f2.apply(a) == *b)
            .collect();
        let ok = entries.len() == fiber.len()
            && entries.iter().zip(&fiber).all(|(y, a)| p2.proj.apply(y) == *a);
        Elem::num(if ok { 0 } else { 1 })
    });
    let rhs = constant(&base, &ObjExpr::Nat, Elem::num(0));
    let carrier = ObjExpr::sub(base, chi, rhs)?;
    let proj = Arrow::new(carrier.clone(), f.cod.clone(), None, |e: &Elem| {
        e.as_tup()[0].clone()
    });
    Ok(PiSlice { slice: SliceObj::new(proj), sections, truncated })
}

/// The list polynomial `1 <- E -pi2E-> N -> 1`.
pub fn list_polynomial() -> PolyDiagram {
    let (e_obj, pi2e) = make_e();
    let s = crate::setmodel::terminal_map(&e_obj);
    let t = crate::setmodel::terminal_map(&ObjExpr::Nat);
    PolyDiagram { s, f: pi2e, t }
}

/// The computed extension `Sigma_t . Pi_f . Delta_s` applied to X, with
/// the per-fiber counts and (for the list polynomial) the mutually
/// inverse maps to lists.
#[derive(Clone, Debug)]
pub struct PolyExtension {
    pub per_fiber: Vec<(Elem, u64)>,
    pub elems: Vec<Elem>,
}

impl PolyExtension {
    /// Section -> list of X entries (drops the fiber bookkeeping).
    /// Entries of the Delta carrier are `(x, (m, n))` pairs.
    pub fn to_list(&self, section: &Elem) -> Elem {
        let entries = section.as_tup()[1].as_seq();
        Elem::Seq(entries.iter().map(|y| y.as_tup()[0].clone()).collect())
    }

    /// List of X entries -> section over its length.
    pub fn from_list(&self, list: &Elem) -> Elem {
        let items = list.as_seq();
        let n = Elem::num(items.len() as u64);
        let entries: Vec<Elem> = items
            .iter()
            .enumerate()
            .map(|(m, x)| {
                let e_part = Elem::Tup(vec![Elem::num(m as u64), n.clone()]);
                Elem::Tup(vec![x.clone(), e_part])
            })
            .collect();
        Elem::Tup(vec![n, Elem::Seq(entries)])
    }
}

/// Evaluates the polynomial extension of `p` at X over the terminal
/// object, by the composite `Sigma_t . Pi_f . Delta_s`.
pub fn poly_extension(p: &PolyDiagram, x: &ObjExpr, budget: &Budget) -> Result<PolyExtension> {
    if p.s.cod != ObjExpr::Unit || p.t.cod != ObjExpr::Unit {
        return Err(Error::Precondition(
            "poly_extension evaluates polynomials over the terminal object".into(),
        ));
    }
    // Delta_s X: the carrier is A x X over A
    let x_over_unit = SliceObj::new(crate::setmodel::terminal_map(x));
    let delta = delta_f(&p.s, &x_over_unit)?;
    let pi = pi_f(&p.f, &delta, budget)?;
    if pi.truncated {
        return Err(Error::Budget("polynomial carrier exceeds card_cap".into()));
    }
    // Sigma_t just forgets the projection to B; the elements stay
    let mut per_fiber: Vec<(Elem, u64)> = Vec::new();
    for s in &pi.sections {
        let b = s.as_tup()[0].clone();
        match per_fiber.last_mut() {
            Some((last, count)) if *last == b => *count += 1,
            _ => per_fiber.push((b, 1)),
        }
    }
    Ok(PolyExtension { per_fiber, elems: pi.sections })
}

/// Round-trip bijection check between the list-polynomial extension at X
/// and the lists over X of bounded length.
pub fn check_poly_bijection(x: &ObjExpr, budget: &Budget) -> Result<VerifyReport> {
    let budget = Budget { len_max: budget.nat_max, ..*budget };
    let ext = poly_extension(&list_polynomial(), x, &budget)?;
    let lists = enumerate(&ObjExpr::list_of(x.clone()), &budget);
    let mut report = VerifyReport::new(budget);

    let cx = if ext.elems.len() == lists.elems.len() {
        None
    } else {
        Some(format!("{} sections vs {} lists", ext.elems.len(), lists.elems.len()))
    };
    report.push("cardinality", cx);

    let mut cx = None;
    for s in &ext.elems {
        let round = ext.from_list(&ext.to_list(s));
        if round != *s {
            cx = Some(format!("{s} -> {round}"));
            break;
        }
    }
    report.push("section-round-trip", cx);

    let mut cx = None;
    for l in &lists.elems {
        let s = ext.from_list(l);
        if !ext.elems.contains(&s) {
            cx = Some(format!("{l} maps outside the carrier"));
            break;
        }
        if ext.to_list(&s) != *l {
            cx = Some(format!("{l} does not round-trip"));
            break;
        }
    }
    report.push("list-round-trip", cx);
    Ok(report)
}

/// Naturality of nth: `nth(m, L(f)(l)) = f(nth(m, l))` for sampled f.
pub fn run_nth_naturality(x: &ObjExpr, budget: &Budget, samples: usize) -> Result<VerifyReport> {
    use rand::prelude::IndexedRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(budget.seed);
    let xs = enumerate(x, budget).elems;
    let lists = enumerate(&ObjExpr::list_of(x.clone()), budget).elems;
    let len = listobj::len(x);
    let nth = nth_reduced(x);
    let mut report = VerifyReport::new(*budget);
    let mut cx = None;
    let runs = if xs.is_empty() { 0 } else { samples };
    'outer: for _ in 0..runs {
        let table: Vec<(Elem, Elem)> = xs
            .iter()
            .map(|e| (e.clone(), xs.choose(&mut rng).unwrap().clone()))
            .collect();
        let t = table.clone();
        let f = Arrow::new(x.clone(), x.clone(), None, move |e: &Elem| {
            t.iter().find(|(k, _)| k == e).map(|(_, v)| v.clone()).expect("total table")
        });
        let lf = listobj::map_list(&f);
        for l in &lists {
            let ln: u64 = len.apply(l).as_nat().try_into().expect("length fits");
            for m in 0..ln {
                let lhs = nth.apply(&Elem::Tup(vec![Elem::num(m), lf.apply(l)]));
                let rhs = f.apply(&nth.apply(&Elem::Tup(vec![Elem::num(m), l.clone()])));
                if lhs != rhs {
                    cx = Some(format!("(m, l) = ({m}, {l}): {lhs} != {rhs}"));
                    break 'outer;
                }
            }
        }
    }
    report.push("nth-naturality", cx);
    Ok(report)
}
