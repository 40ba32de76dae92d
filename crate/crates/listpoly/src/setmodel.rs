//! The ambient category: lazily enumerated sets and total computable maps.
//!
//! Objects are syntactic expressions (`ObjExpr`), elements are concrete
//! values (`Elem`), and arrows are pure closures with domain/codomain
//! metadata. Arrow equality is semidecided by bounded enumeration of the
//! common domain; every bound is carried explicitly in a `Budget`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Syntactic object of the ambient category.
#[derive(Clone, Debug)]
pub enum ObjExpr {
    Unit,
    Nat,
    ListOf(Box<ObjExpr>),
    /// Invariant: arity >= 2 (use [`prod`] to canonicalize).
    Prod(Vec<ObjExpr>),
    /// Equalizer subobject of `base`, carved out by `lhs = rhs`.
    /// Elements are represented by their underlying `base` elements.
    Sub {
        base: Box<ObjExpr>,
        lhs: Box<Arrow>,
        rhs: Box<Arrow>,
    },
}

/// Canonicalizing product constructor: nullary is `Unit`, unary is the
/// component itself.
pub fn prod(mut comps: Vec<ObjExpr>) -> ObjExpr {
    match comps.len() {
        0 => ObjExpr::Unit,
        1 => comps.pop().unwrap(),
        _ => ObjExpr::Prod(comps),
    }
}

pub fn prod2(a: ObjExpr, b: ObjExpr) -> ObjExpr {
    ObjExpr::Prod(vec![a, b])
}

impl ObjExpr {
    pub fn list_of(x: ObjExpr) -> ObjExpr {
        ObjExpr::ListOf(Box::new(x))
    }

    pub fn sub(base: ObjExpr, lhs: Arrow, rhs: Arrow) -> Result<ObjExpr> {
        if lhs.dom != base || rhs.dom != base {
            return Err(Error::ObjMismatch {
                expected: base.to_string(),
                found: format!("{} / {}", lhs.dom, rhs.dom),
                context: "Sub constraint arrows must share domain = base".into(),
            });
        }
        if lhs.cod != rhs.cod {
            return Err(Error::NotParallel {
                lhs: lhs.describe(),
                rhs: rhs.describe(),
            });
        }
        Ok(ObjExpr::Sub {
            base: Box::new(base),
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        })
    }

    /// Underlying representation object (strips equalizer constraints).
    pub fn repr(&self) -> &ObjExpr {
        match self {
            ObjExpr::Sub { base, .. } => base.repr(),
            other => other,
        }
    }
}

impl PartialEq for ObjExpr {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ObjExpr::Unit, ObjExpr::Unit) => true,
            (ObjExpr::Nat, ObjExpr::Nat) => true,
            (ObjExpr::ListOf(a), ObjExpr::ListOf(b)) => a == b,
            (ObjExpr::Prod(a), ObjExpr::Prod(b)) => a == b,
            (
                ObjExpr::Sub { base: b1, lhs: l1, rhs: r1 },
                ObjExpr::Sub { base: b2, lhs: l2, rhs: r2 },
            ) => b1 == b2 && l1.same_arrow(l2) && r1.same_arrow(r2),
            _ => false,
        }
    }
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjExpr::Unit => write!(f, "1"),
            ObjExpr::Nat => write!(f, "N"),
            ObjExpr::ListOf(x) => write!(f, "L({x})"),
            ObjExpr::Prod(comps) => {
                let parts: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(" * "))
            }
            ObjExpr::Sub { base, lhs, rhs } => {
                write!(f, "{{{} | {} = {}}}", base, lhs.describe(), rhs.describe())
            }
        }
    }
}

/// Element value of an object. `Num` is an arbitrary-precision natural;
/// bounds apply only to enumeration, never to the values themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Star,
    Num(BigUint),
    Tup(Vec<Elem>),
    Seq(Vec<Elem>),
}

impl Elem {
    pub fn num(n: u64) -> Elem {
        Elem::Num(BigUint::from(n))
    }

    pub fn tup(parts: Vec<Elem>) -> Elem {
        Elem::Tup(parts)
    }

    pub fn seq(items: Vec<Elem>) -> Elem {
        Elem::Seq(items)
    }

    pub fn as_nat(&self) -> &BigUint {
        match self {
            Elem::Num(n) => n,
            other => panic!("expected a natural, got {other}"),
        }
    }

    pub fn as_tup(&self) -> &[Elem] {
        match self {
            Elem::Tup(parts) => parts,
            other => panic!("expected a tuple, got {other}"),
        }
    }

    pub fn as_seq(&self) -> &[Elem] {
        match self {
            Elem::Seq(items) => items,
            other => panic!("expected a list, got {other}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Star => write!(f, "()"),
            Elem::Num(n) => write!(f, "{n}"),
            Elem::Tup(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
            Elem::Seq(items) => {
                let items: Vec<String> = items.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", items.join(", "))
            }
        }
    }
}

/// Explicit bounds for enumeration and bounded extensional checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nat_max: u64,
    pub len_max: u64,
    pub card_cap: u64,
    pub seed: u64,
}

impl Budget {
    pub fn new(nat_max: u64, len_max: u64, card_cap: u64, seed: u64) -> Budget {
        Budget { nat_max, len_max, card_cap, seed }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { nat_max: 4, len_max: 3, card_cap: 100_000, seed: 0 }
    }
}

type ApplyFn = Arc<dyn Fn(&Elem) -> Elem + Send + Sync>;

/// Total computable mapping between objects.
#[derive(Clone)]
pub struct Arrow {
    pub dom: ObjExpr,
    pub cod: ObjExpr,
    func: ApplyFn,
    pub label: Option<String>,
}

impl Arrow {
    pub fn new<F>(dom: ObjExpr, cod: ObjExpr, label: impl Into<Option<String>>, f: F) -> Arrow
    where
        F: Fn(&Elem) -> Elem + Send + Sync + 'static,
    {
        Arrow { dom, cod, func: Arc::new(f), label: label.into() }
    }

    pub fn apply(&self, e: &Elem) -> Elem {
        (self.func)(e)
    }

    pub fn describe(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => format!("<{} -> {}>", self.dom, self.cod),
        }
    }

    /// Identity used when comparing `Sub` objects: labels when both are
    /// present, closure identity otherwise.
    fn same_arrow(&self, other: &Arrow) -> bool {
        match (&self.label, &other.label) {
            (Some(a), Some(b)) => a == b && self.dom == other.dom && self.cod == other.cod,
            _ => Arc::ptr_eq(&self.func, &other.func),
        }
    }

    /// Same closure viewed with a different (representation-compatible)
    /// domain or codomain. Used for the identity-on-representation
    /// coercions into and out of `Sub` objects.
    pub fn retyped(&self, dom: ObjExpr, cod: ObjExpr) -> Arrow {
        Arrow { dom, cod, func: self.func.clone(), label: self.label.clone() }
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrow({} : {} -> {})", self.describe(), self.dom, self.cod)
    }
}

/// Result of bounded enumeration: deterministic, duplicate-free, truncated
/// at `card_cap` with a flag.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub elems: Vec<Elem>,
    pub truncated: bool,
}

/// Enumerates the elements of an object, in the fixed deterministic order:
/// numerals ascending, lists by length then lexicographically, tuples
/// lexicographically (last component varies fastest), subobjects by
/// filtering their base.
pub fn enumerate(obj: &ObjExpr, budget: &Budget) -> Enumeration {
    let cap = budget.card_cap as usize;
    let mut truncated = false;
    let elems = match obj {
        ObjExpr::Unit => vec![Elem::Star],
        ObjExpr::Nat => {
            let mut out = Vec::new();
            for i in 0..=budget.nat_max {
                if out.len() >= cap {
                    truncated = true;
                    break;
                }
                out.push(Elem::num(i));
            }
            out
        }
        ObjExpr::ListOf(x) => {
            let inner = enumerate(x, budget);
            truncated |= inner.truncated;
            let mut out = Vec::new();
            'outer: for n in 0..=budget.len_max {
                for combo in tuples_of(&inner.elems, n as usize) {
                    if out.len() >= cap {
                        truncated = true;
                        break 'outer;
                    }
                    out.push(Elem::Seq(combo));
                }
            }
            out
        }
        ObjExpr::Prod(comps) => {
            let parts: Vec<Enumeration> = comps.iter().map(|c| enumerate(c, budget)).collect();
            truncated |= parts.iter().any(|p| p.truncated);
            let lists: Vec<&[Elem]> = parts.iter().map(|p| p.elems.as_slice()).collect();
            let mut out = Vec::new();
            for combo in cartesian(&lists) {
                if out.len() >= cap {
                    truncated = true;
                    break;
                }
                out.push(Elem::Tup(combo));
            }
            out
        }
        ObjExpr::Sub { base, lhs, rhs } => {
            let inner = enumerate(base, budget);
            truncated |= inner.truncated;
            let mut out = Vec::new();
            for e in inner.elems {
                if lhs.apply(&e) == rhs.apply(&e) {
                    if out.len() >= cap {
                        truncated = true;
                        break;
                    }
                    out.push(e);
                }
            }
            out
        }
    };
    Enumeration { elems, truncated }
}

fn tuples_of(alphabet: &[Elem], n: usize) -> Vec<Vec<Elem>> {
    if n == 0 {
        return vec![vec![]];
    }
    if alphabet.is_empty() {
        return vec![];
    }
    let mut out = Vec::new();
    let shorter = tuples_of(alphabet, n - 1);
    for prefix in shorter {
        for e in alphabet {
            let mut combo = prefix.clone();
            combo.push(e.clone());
            out.push(combo);
        }
    }
    out
}

fn cartesian(lists: &[&[Elem]]) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for list in lists {
        let mut next = Vec::new();
        for prefix in &out {
            for e in *list {
                let mut combo = prefix.clone();
                combo.push(e.clone());
                next.push(combo);
            }
        }
        out = next;
    }
    out
}

/// Structural type check; for `Sub`, additionally evaluates the two
/// defining arrows and compares.
pub fn elem_has_type(e: &Elem, obj: &ObjExpr) -> bool {
    match (e, obj) {
        (Elem::Star, ObjExpr::Unit) => true,
        (Elem::Num(_), ObjExpr::Nat) => true,
        (Elem::Seq(items), ObjExpr::ListOf(x)) => {
            items.iter().all(|i| elem_has_type(i, x))
        }
        (Elem::Tup(parts), ObjExpr::Prod(comps)) => {
            parts.len() == comps.len()
                && parts.iter().zip(comps).all(|(p, c)| elem_has_type(p, c))
        }
        (_, ObjExpr::Sub { base, lhs, rhs }) => {
            elem_has_type(e, base) && lhs.apply(e) == rhs.apply(e)
        }
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Category core
// ---------------------------------------------------------------------------

pub fn identity(obj: &ObjExpr) -> Arrow {
    Arrow::new(obj.clone(), obj.clone(), Some("id".to_string()), |e| e.clone())
}

pub fn terminal_map(obj: &ObjExpr) -> Arrow {
    Arrow::new(obj.clone(), ObjExpr::Unit, Some("<>".to_string()), |_| Elem::Star)
}

/// Constant arrow picking out a fixed element of `cod`.
pub fn constant(dom: &ObjExpr, cod: &ObjExpr, value: Elem) -> Arrow {
    let label = format!("const({value})");
    Arrow::new(dom.clone(), cod.clone(), Some(label), move |_| value.clone())
}

/// `g . f` (apply `f` first).
pub fn compose(g: &Arrow, f: &Arrow) -> Result<Arrow> {
    if f.cod != g.dom {
        return Err(Error::ObjMismatch {
            expected: g.dom.to_string(),
            found: f.cod.to_string(),
            context: format!("compose({}, {})", g.describe(), f.describe()),
        });
    }
    let label = match (&g.label, &f.label) {
        (Some(a), Some(b)) => Some(format!("{a}.{b}")),
        _ => None,
    };
    let gf = g.func.clone();
    let ff = f.func.clone();
    Ok(Arrow::new(f.dom.clone(), g.cod.clone(), label, move |e| gf(&ff(e))))
}

/// n-ary pairing `<f_1, ..., f_n>`; all arrows must share a domain.
pub fn pairing(fs: &[Arrow]) -> Result<Arrow> {
    let dom = match fs.first() {
        None => return Err(Error::Precondition("pairing of zero arrows has no domain".into())),
        Some(f) => f.dom.clone(),
    };
    for f in fs {
        if f.dom != dom {
            return Err(Error::ObjMismatch {
                expected: dom.to_string(),
                found: f.dom.to_string(),
                context: format!("pairing component {}", f.describe()),
            });
        }
    }
    if fs.len() == 1 {
        return Ok(fs[0].clone());
    }
    let cod = ObjExpr::Prod(fs.iter().map(|f| f.cod.clone()).collect());
    let funcs: Vec<ApplyFn> = fs.iter().map(|f| f.func.clone()).collect();
    let labels: Vec<Option<String>> = fs.iter().map(|f| f.label.clone()).collect();
    let label = if labels.iter().all(|l| l.is_some()) {
        let parts: Vec<String> = labels.into_iter().map(|l| l.unwrap()).collect();
        Some(format!("<{}>", parts.join(",")))
    } else {
        None
    };
    Ok(Arrow::new(dom, cod, label, move |e| {
        Elem::Tup(funcs.iter().map(|f| f(e)).collect())
    }))
}

/// Projection `pi_i` (0-based) out of a product object.
pub fn proj(obj: &ObjExpr, i: usize) -> Result<Arrow> {
    let comps = match obj.repr() {
        ObjExpr::Prod(comps) => comps.clone(),
        other => {
            return Err(Error::ObjMismatch {
                expected: "a product".into(),
                found: other.to_string(),
                context: format!("proj {i}"),
            })
        }
    };
    if i >= comps.len() {
        return Err(Error::Precondition(format!(
            "projection index {i} out of range for {obj}"
        )));
    }
    let cod = comps[i].clone();
    Ok(Arrow::new(obj.clone(), cod, Some(format!("pi{}", i + 1)), move |e| {
        e.as_tup()[i].clone()
    }))
}

/// `f x g : A x B -> C x D`, componentwise.
pub fn par(f: &Arrow, g: &Arrow) -> Result<Arrow> {
    let dom = prod2(f.dom.clone(), g.dom.clone());
    pairing(&[
        compose(f, &proj(&dom, 0)?)?,
        compose(g, &proj(&dom, 1)?)?,
    ])
}

// ---------------------------------------------------------------------------
// Bounded extensional equality
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub input: Elem,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Clone, Debug)]
pub struct ArrowEq {
    pub equal: bool,
    pub counterexample: Option<Counterexample>,
    pub checked: usize,
    pub truncated: bool,
}

/// Bounded extensional equality: true iff `f` and `g` agree on every
/// enumerated element of their common domain. On failure, returns the
/// least counterexample in enumeration order.
pub fn arrows_equal(f: &Arrow, g: &Arrow, budget: &Budget) -> Result<ArrowEq> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::NotParallel { lhs: f.describe(), rhs: g.describe() });
    }
    let en = enumerate(&f.dom, budget);
    let mut checked = 0;
    for e in &en.elems {
        let a = f.apply(e);
        let b = g.apply(e);
        checked += 1;
        if a != b {
            return Ok(ArrowEq {
                equal: false,
                counterexample: Some(Counterexample { input: e.clone(), lhs: a, rhs: b }),
                checked,
                truncated: en.truncated,
            });
        }
    }
    Ok(ArrowEq { equal: true, counterexample: None, checked, truncated: en.truncated })
}

// ---------------------------------------------------------------------------
// Finite limits
// ---------------------------------------------------------------------------

/// An equalizer subobject with its (representation-identity) inclusion.
#[derive(Clone, Debug)]
pub struct Equalizer {
    pub obj: ObjExpr,
    pub include: Arrow,
    lhs: Arrow,
    rhs: Arrow,
}

impl Equalizer {
    /// Mediates `h` through the equalizer. Rejects (under budget) any `h`
    /// with `lhs . h != rhs . h` on an enumerated witness.
    pub fn mediate(&self, h: &Arrow, budget: &Budget) -> Result<Arrow> {
        if h.cod != self.lhs.dom {
            return Err(Error::ObjMismatch {
                expected: self.lhs.dom.to_string(),
                found: h.cod.to_string(),
                context: "equalizer mediation".into(),
            });
        }
        let lh = compose(&self.lhs, h)?;
        let rh = compose(&self.rhs, h)?;
        let eq = arrows_equal(&lh, &rh, budget)?;
        if let Some(cx) = eq.counterexample {
            return Err(Error::MediateRejected { witness: cx.input.to_string() });
        }
        Ok(h.retyped(h.dom.clone(), self.obj.clone()))
    }
}

/// The equalizer of two parallel arrows, realized as a `Sub` whose
/// inclusion is the identity on representations.
pub fn equalizer_obj(f: &Arrow, g: &Arrow) -> Result<Equalizer> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::NotParallel { lhs: f.describe(), rhs: g.describe() });
    }
    let obj = ObjExpr::sub(f.dom.clone(), f.clone(), g.clone())?;
    let include = Arrow::new(
        obj.clone(),
        f.dom.clone(),
        Some("incl".to_string()),
        |e: &Elem| e.clone(),
    );
    Ok(Equalizer { obj: obj.clone(), include, lhs: f.clone(), rhs: g.clone() })
}

/// A pullback realized as `Sub(Prod(A, B), f.pi1, g.pi2)`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub obj: ObjExpr,
    pub p1: Arrow,
    pub p2: Arrow,
    eq: Equalizer,
}

impl Pullback {
    /// Mediates a cone `(p, q)` with `f . p = g . q`.
    pub fn mediate(&self, p: &Arrow, q: &Arrow, budget: &Budget) -> Result<Arrow> {
        let cone = pairing(&[p.clone(), q.clone()])?;
        self.eq.mediate(&cone, budget)
    }
}

pub fn pullback_obj(f: &Arrow, g: &Arrow) -> Result<Pullback> {
    if f.cod != g.cod {
        return Err(Error::ObjMismatch {
            expected: f.cod.to_string(),
            found: g.cod.to_string(),
            context: "pullback of arrows with different codomains".into(),
        });
    }
    let base = prod2(f.dom.clone(), g.dom.clone());
    let lhs = compose(f, &proj(&base, 0)?)?;
    let rhs = compose(g, &proj(&base, 1)?)?;
    let eq = equalizer_obj(&lhs, &rhs)?;
    let p1 = compose(&proj(&base, 0)?, &eq.include)?;
    let p2 = compose(&proj(&base, 1)?, &eq.include)?;
    Ok(Pullback { obj: eq.obj.clone(), p1, p2, eq })
}

// ---------------------------------------------------------------------------
// Coproduct case analysis (concrete extensivity)
// ---------------------------------------------------------------------------

/// Glues branches defined on subobjects `S_i` of `A` into one arrow
/// `A -> Y`, after checking that the enumerated elements of `A` are
/// covered exactly once.
pub fn case_merge(parts: &[(Arrow, Arrow)], budget: &Budget) -> Result<Arrow> {
    let (first_incl, first_branch) = match parts.first() {
        None => return Err(Error::Coverage("no parts given".into())),
        Some(p) => p,
    };
    let target = first_incl.cod.clone();
    let cod = first_branch.cod.clone();
    for (incl, branch) in parts {
        if incl.cod != target {
            return Err(Error::ObjMismatch {
                expected: target.to_string(),
                found: incl.cod.to_string(),
                context: "case part does not include into the same object".into(),
            });
        }
        if branch.dom != incl.dom {
            return Err(Error::ObjMismatch {
                expected: incl.dom.to_string(),
                found: branch.dom.to_string(),
                context: "case branch domain must be the part subobject".into(),
            });
        }
        if branch.cod != cod {
            return Err(Error::ObjMismatch {
                expected: cod.to_string(),
                found: branch.cod.to_string(),
                context: "case branches must share a codomain".into(),
            });
        }
        match &incl.dom {
            ObjExpr::Sub { base, .. } if **base == target => {}
            other => {
                return Err(Error::ObjMismatch {
                    expected: format!("a Sub of {target}"),
                    found: other.to_string(),
                    context: "case part".into(),
                })
            }
        }
    }
    let subs: Vec<ObjExpr> = parts.iter().map(|(i, _)| i.dom.clone()).collect();
    let en = enumerate(&target, budget);
    let mut bad = Vec::new();
    for e in &en.elems {
        let hits = subs.iter().filter(|s| elem_has_type(e, s)).count();
        if hits != 1 {
            bad.push(format!("{e} (covered {hits} times)"));
            if bad.len() >= 5 {
                break;
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::Coverage(bad.join(", ")));
    }
    let branches: Vec<Arrow> = parts.iter().map(|(_, b)| b.clone()).collect();
    Ok(Arrow::new(target, cod, None, move |e| {
        for (s, branch) in subs.iter().zip(&branches) {
            if elem_has_type(e, s) {
                return branch.apply(e);
            }
        }
        // coverage was verified on the enumerated domain
        panic!("case_merge: element {e} not covered by any part");
    }))
}

// ---------------------------------------------------------------------------
// Slice objects
// ---------------------------------------------------------------------------

/// An object of a slice category: a carrier with its projection to the base.
#[derive(Clone, Debug)]
pub struct SliceObj {
    pub carrier: ObjExpr,
    pub proj: Arrow,
    pub base: ObjExpr,
}

impl SliceObj {
    pub fn new(proj: Arrow) -> SliceObj {
        SliceObj { carrier: proj.dom.clone(), base: proj.cod.clone(), proj }
    }
}

// ---------------------------------------------------------------------------
// Helpers used across the crate
// ---------------------------------------------------------------------------

/// `{n : N | n < k}` with a stable label, used as an explicit finite
/// object with elements `0 .. k-1`.
pub fn finite_obj(k: u64) -> ObjExpr {
    let lhs = Arrow::new(
        ObjExpr::Nat,
        ObjExpr::Nat,
        Some(format!("lt{k}")),
        move |e: &Elem| {
            let n = e.as_nat();
            if n + BigUint::one() > BigUint::from(k) {
                Elem::Num(n + BigUint::one() - BigUint::from(k))
            } else {
                Elem::Num(BigUint::zero())
            }
        },
    );
    let rhs = constant(&ObjExpr::Nat, &ObjExpr::Nat, Elem::num(0));
    ObjExpr::sub(ObjExpr::Nat, lhs, rhs).expect("finite_obj constraints are parallel")
}

/// Spot-checks that an arrow maps enumerated domain elements into its
/// codomain. Test-support but also used by the language layer to
/// discharge coercion obligations.
pub fn spot_check(arrow: &Arrow, budget: &Budget) -> Result<()> {
    let en = enumerate(&arrow.dom, budget);
    for e in &en.elems {
        let out = arrow.apply(e);
        if !elem_has_type(&out, &arrow.cod) {
            return Err(Error::ConstraintViolated {
                constraint: format!("{} lands in {}", arrow.describe(), arrow.cod),
                witness: format!("{e} -> {out}"),
            });
        }
    }
    Ok(())
}
