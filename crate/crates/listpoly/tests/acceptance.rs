//! Acceptance suite: one criterion per test, one PASS/FAIL line each.
//! The whole file stays well under a minute on commodity hardware.

use std::collections::BTreeMap;
use std::process::Command;

use num_bigint::BigUint;
use num_traits::Zero;

use listpoly::arith::{self, ArithOps, NnoKit};
use listpoly::listobj::{self, ListKit, ListOps};
use listpoly::polyadj::{self, Instance};
use listpoly::setmodel::{enumerate, finite_obj, proj, Arrow, Budget, Elem, ObjExpr};

fn budget(nat_max: u64, len_max: u64) -> Budget {
    Budget { nat_max, len_max, card_cap: 1_000_000, seed: 0 }
}

fn verdict(n: u32, what: &str, pass: bool) {
    println!("criterion {n:2} {what}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} ({what}) failed");
}

#[test]
fn criterion_01_arithmetic_laws_exhaustive() {
    let ops = ArithOps::standard();
    let b = budget(8, 0);
    let mut pass = true;
    for report in [
        arith::run_arith_laws(&ops, &b),
        arith::run_order_converse_laws(&ops, &b),
        arith::run_id_until_laws(&b),
        arith::run_arith_arrow_laws(&ops, &b).unwrap(),
    ] {
        if !report.all_pass() {
            eprintln!("{}", report.render());
            pass = false;
        }
    }
    verdict(1, "arithmetic and order laws, naturals <= 8", pass);
}

#[test]
fn criterion_02_oracle_equivalence() {
    let ops = ArithOps::standard();
    let report = arith::run_oracle_equivalence(&ops, &budget(32, 0));
    if !report.all_pass() {
        eprintln!("{}", report.render());
    }
    verdict(2, "big-integer oracle agreement, pairs <= 32", report.all_pass());
}

#[test]
fn criterion_03_list_laws() {
    let b = budget(4, 3);
    let mut pass = true;
    for card in 0..=2u64 {
        let ops = ListOps::standard(&finite_obj(card));
        let report = listobj::run_list_laws(&ops, &b, 100);
        if !report.all_pass() {
            eprintln!("|X| = {card}:\n{}", report.render());
            pass = false;
        }
        let nat = polyadj::run_nth_naturality(&ops.x, &b, 100).unwrap();
        if !nat.pass() {
            eprintln!("|X| = {card}: {:?}", nat.checks);
            pass = false;
        }
    }
    verdict(3, "list laws, |X| <= 2, lengths <= 3, 100 sampled arrows", pass);
}

/// Every table for `f` on `{(m, a) | m < p(a)}`, extended by the first
/// element of X elsewhere, as an arrow `N x A -> X`.
fn f_tables(lens: &[u64], card_x: u64, a_obj: &ObjExpr) -> Vec<Arrow> {
    let slots: Vec<(u64, usize)> = lens
        .iter()
        .enumerate()
        .flat_map(|(i, l)| (0..*l).map(move |m| (m, i)))
        .collect();
    let count = (card_x as usize).pow(slots.len() as u32).max(1);
    let dom = ObjExpr::Prod(vec![ObjExpr::Nat, a_obj.clone()]);
    let mut out = Vec::with_capacity(count);
    for mask in 0..count {
        let mut table: BTreeMap<(u64, usize), u64> = BTreeMap::new();
        let mut m = mask;
        for slot in &slots {
            table.insert(*slot, (m % card_x as usize) as u64);
            m /= card_x as usize;
        }
        out.push(Arrow::new(dom.clone(), finite_obj(card_x), None, move |e: &Elem| {
            let p = e.as_tup();
            let key = (
                u64::try_from(p[0].as_nat()).expect("index fits"),
                usize::try_from(p[1].as_nat()).expect("A index fits"),
            );
            Elem::num(table.get(&key).copied().unwrap_or(0))
        }));
    }
    out
}

fn length_vectors(card_a: usize, max_len: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..card_a {
        let mut next = Vec::new();
        for prefix in &out {
            for l in 0..=max_len {
                let mut v = prefix.clone();
                v.push(l);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[test]
fn criterion_04_nth_of_list_build() {
    let mut pass = true;
    let mut checked = 0u64;
    'outer: for card_a in 1..=3usize {
        for card_x in 1..=2u64 {
            let a_obj = finite_obj(card_a as u64);
            let x = finite_obj(card_x);
            let nth = polyadj::nth_reduced(&x);
            for lens in length_vectors(card_a, 3) {
                let lens_arrow = {
                    let lens = lens.clone();
                    Arrow::new(a_obj.clone(), ObjExpr::Nat, None, move |e: &Elem| {
                        let i: usize = usize::try_from(e.as_nat()).expect("A index fits");
                        Elem::num(lens[i])
                    })
                };
                for f in f_tables(&lens, card_x, &a_obj) {
                    let bld = listobj::list_build(&f, &lens_arrow).unwrap();
                    for (i, l) in lens.iter().enumerate() {
                        let a = Elem::num(i as u64);
                        let built = bld.apply(&a);
                        for m in 0..*l {
                            let got = nth
                                .apply(&Elem::Tup(vec![Elem::num(m), built.clone()]));
                            let want =
                                f.apply(&Elem::Tup(vec![Elem::num(m), a.clone()]));
                            checked += 1;
                            if got != want {
                                eprintln!(
                                    "nth({m}, List[f,p]({a})) = {got}, f({m}, {a}) = {want}"
                                );
                                pass = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    pass &= checked > 0;
    verdict(4, "nth of List[f, p], exhaustive tables", pass);
}

#[test]
fn criterion_05_polynomial_extension_bijection() {
    let b = budget(4, 4);
    let mut pass = true;
    for card in 0..=3u64 {
        let x = finite_obj(card);
        let report = polyadj::check_poly_bijection(&x, &b).unwrap();
        if !report.pass() {
            eprintln!("|X| = {card}: {:?}", report.checks);
            pass = false;
        }
        let ext = polyadj::poly_extension(&polyadj::list_polynomial(), &x, &b).unwrap();
        let expected: u64 = (0..=4u32).map(|n| card.pow(n)).sum();
        if ext.elems.len() as u64 != expected {
            eprintln!("|X| = {card}: {} sections, expected {expected}", ext.elems.len());
            pass = false;
        }
    }
    verdict(5, "polynomial carrier bijects with lists, bound 4", pass);
}

/// Every instance with the given shape: one per total g table.
fn instance_family(card_a: usize, card_x: usize, max_len: u64) -> Vec<Instance> {
    let x_names: Vec<String> = (0..card_x).map(|i| format!("x{i}")).collect();
    let a_names: Vec<String> = (0..card_a).map(|i| format!("a{i}")).collect();
    let mut out = Vec::new();
    for lens in length_vectors(card_a, max_len) {
        let slots: Vec<(u64, usize)> = lens
            .iter()
            .enumerate()
            .flat_map(|(i, l)| (0..*l).map(move |m| (m, i)))
            .collect();
        if card_x == 0 && !slots.is_empty() {
            continue; // no g table exists
        }
        let count = card_x.pow(slots.len() as u32).max(1);
        for mask in 0..count {
            let mut g = BTreeMap::new();
            let mut m = mask;
            for slot in &slots {
                g.insert(*slot, m % card_x.max(1));
                m /= card_x.max(1);
            }
            out.push(Instance {
                x_names: x_names.clone(),
                a_names: a_names.clone(),
                lens: lens.clone(),
                g,
            });
        }
    }
    out
}

#[test]
fn criterion_06_and_07_adjunction_existence_and_uniqueness() {
    let mut existence = true;
    let mut uniqueness = true;
    let mut instances = 0u64;
    'outer: for card_a in 1..=3usize {
        for card_x in 0..=2usize {
            for inst in instance_family(card_a, card_x, 3) {
                instances += 1;
                let b = inst.suggested_budget();
                let h = match polyadj::construct_h(&inst) {
                    Ok(h) => h,
                    Err(e) => {
                        eprintln!("construct_h failed on {inst:?}: {e}");
                        existence = false;
                        break 'outer;
                    }
                };
                if !polyadj::verify_solution(&inst, &h, &b).unwrap().pass() {
                    eprintln!("verify_solution failed on {inst:?}");
                    existence = false;
                    break 'outer;
                }
                let sols = polyadj::brute_force_solutions(&inst, &b).unwrap();
                if sols.len() != 1 {
                    eprintln!("{} solutions on {inst:?}", sols.len());
                    uniqueness = false;
                    break 'outer;
                }
                let eq = listpoly::setmodel::arrows_equal(&sols[0], &h, &b).unwrap();
                if !eq.equal {
                    eprintln!("brute-force winner differs from construct_h on {inst:?}");
                    uniqueness = false;
                    break 'outer;
                }
                let replay = polyadj::uniqueness_by_theory(&inst, &h, &sols[0], &b).unwrap();
                if !replay.pass() {
                    eprintln!("theory replay failed on {inst:?}: {:?}", replay.checks);
                    uniqueness = false;
                    break 'outer;
                }
            }
        }
    }
    existence &= instances > 0;
    verdict(6, "existence over exhaustive g tables", existence);
    verdict(7, "uniqueness: brute force, extensional match, theory replay", uniqueness);
}

#[test]
fn criterion_08_recursor_soundness() {
    let mut pass = true;
    let succ = NnoKit::new().succ;

    // nno_rec products satisfy their inductive equations on all pairs <= 8
    let ops = ArithOps::standard();
    let pred = arith::pred();
    for a in 0..=8u64 {
        for n in 0..=8u64 {
            let pair = |f: &Arrow, x: u64, y: u64| {
                f.apply(&Elem::Tup(vec![Elem::num(x), Elem::num(y)]))
            };
            pass &= pair(&ops.add, a, 0) == Elem::num(a);
            pass &= pair(&ops.add, a, n + 1) == succ.apply(&pair(&ops.add, a, n));
            pass &= pair(&ops.mul, a, 0) == Elem::num(0);
            pass &= pair(&ops.mul, a, n + 1)
                == pair(&ops.add, u64::try_from(pair(&ops.mul, a, n).as_nat()).unwrap(), a);
            pass &= pair(&ops.monus, a, 0) == Elem::num(a);
            pass &= pair(&ops.monus, a, n + 1) == pred.apply(&pair(&ops.monus, a, n));
        }
    }
    pass &= pred.apply(&Elem::num(0)) == Elem::num(0);

    // list_rec products satisfy theirs on all enumerated lists, |X| <= 2
    let b = budget(4, 3);
    for card in 0..=2u64 {
        let x = finite_obj(card);
        let ops = ListOps::standard(&x);
        let kit = ListKit::new(&x);
        let nil = Elem::Seq(vec![]);
        pass &= ops.len.apply(&nil) == Elem::num(0);
        pass &= ops.tr.apply(&nil) == nil;
        let xs = enumerate(&x, &b).elems;
        for l in enumerate(&kit.lx, &b).elems {
            for xe in &xs {
                let consed = kit.cons.apply(&Elem::Tup(vec![xe.clone(), l.clone()]));
                pass &= ops.len.apply(&consed) == succ.apply(&ops.len.apply(&l));
                pass &= ops.tr.apply(&consed) == l;
                pass &= ops
                    .zeroth_def
                    .apply(&Elem::Tup(vec![xe.clone(), consed.clone()]))
                    == *xe;
            }
            for xe in &xs {
                pass &= ops.zeroth_def.apply(&Elem::Tup(vec![xe.clone(), nil.clone()]))
                    == *xe;
            }
        }
    }

    // micro hom-set uniqueness for nno_rec: carrier {0, 1}, n <= 3
    pass &= nno_rec_unique_micro();
    // and for list_rec: lists over a singleton X of length <= 2, carrier {0, 1}
    pass &= list_rec_unique_micro();

    verdict(8, "recursor defining equations and micro uniqueness", pass);
}

fn nno_rec_unique_micro() -> bool {
    let b = Budget { nat_max: 3, len_max: 0, card_cap: 1000, seed: 0 };
    let two = finite_obj(2);
    let g = listpoly::setmodel::constant(&ObjExpr::Unit, &two, Elem::num(0));
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, ObjExpr::Nat, two.clone()]);
    let h = Arrow::new(h_dom, two.clone(), None, |e: &Elem| {
        let v = e.as_tup()[2].as_nat();
        Elem::num(if v.is_zero() { 1 } else { 0 })
    });
    let f = arith::nno_rec(&g, &h).unwrap();
    let inputs = enumerate(&f.dom, &b).elems;
    let satisfying = tables_satisfying(&inputs, 2, |value, e| {
        let parts = e.as_tup();
        let n: u64 = parts[1].as_nat().try_into().unwrap();
        if n == 0 {
            g.apply(&parts[0])
        } else {
            let prev = Elem::Tup(vec![parts[0].clone(), Elem::num(n - 1)]);
            h.apply(&Elem::Tup(vec![parts[0].clone(), Elem::num(n - 1), value(&prev)]))
        }
    });
    satisfying.len() == 1
        && inputs.iter().all(|e| satisfying[0][input_index(&inputs, e)] == f.apply(e))
}

fn list_rec_unique_micro() -> bool {
    let b = Budget { nat_max: 2, len_max: 2, card_cap: 1000, seed: 0 };
    let x = finite_obj(1);
    let kit = ListKit::new(&x);
    let two = finite_obj(2);
    let g = listpoly::setmodel::constant(&ObjExpr::Unit, &two, Elem::num(1));
    let h_dom = ObjExpr::Prod(vec![ObjExpr::Unit, x.clone(), kit.lx.clone(), two.clone()]);
    let h = Arrow::new(h_dom, two.clone(), None, |e: &Elem| {
        let v = e.as_tup()[3].as_nat();
        Elem::num(if v.is_zero() { 1 } else { 0 })
    });
    let f = listobj::list_rec(&g, &h).unwrap();
    let inputs: Vec<Elem> = enumerate(&kit.lx, &b)
        .elems
        .into_iter()
        .map(|l| Elem::Tup(vec![Elem::Star, l]))
        .collect();
    let satisfying = tables_satisfying(&inputs, 2, |value, e| {
        let l = e.as_tup()[1].clone();
        let items = l.as_seq();
        match items.split_first() {
            None => g.apply(&Elem::Star),
            Some((head, rest)) => {
                let rest = Elem::Seq(rest.to_vec());
                let prev = Elem::Tup(vec![Elem::Star, rest.clone()]);
                h.apply(&Elem::Tup(vec![
                    Elem::Star,
                    head.clone(),
                    rest,
                    value(&prev),
                ]))
            }
        }
    });
    satisfying.len() == 1
        && inputs.iter().all(|e| satisfying[0][input_index(&inputs, e)] == f.apply(e))
}

fn input_index(inputs: &[Elem], e: &Elem) -> usize {
    inputs.iter().position(|x| x == e).expect("input enumerated")
}

/// All tables `inputs -> {0..card}` satisfying `table(e) = want(table, e)`.
fn tables_satisfying(
    inputs: &[Elem],
    card: u64,
    want: impl Fn(&dyn Fn(&Elem) -> Elem, &Elem) -> Elem,
) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for mask in 0..(card as usize).pow(inputs.len() as u32) {
        let mut table = Vec::new();
        let mut m = mask;
        for _ in 0..inputs.len() {
            table.push(Elem::num((m % card as usize) as u64));
            m /= card as usize;
        }
        let value = |e: &Elem| table[input_index(inputs, e)].clone();
        if inputs.iter().all(|e| value(e) == want(&value, e)) {
            out.push(table);
        }
    }
    out
}

#[test]
fn criterion_09_mutation_sensitivity() {
    let mut pass = true;

    // monus that returns its first argument unchanged
    let nn = ObjExpr::Prod(vec![ObjExpr::Nat, ObjExpr::Nat]);
    let bad_monus = proj(&nn, 0).unwrap().retyped(nn.clone(), ObjExpr::Nat);
    let ops = ArithOps::with_monus(bad_monus);
    let report = arith::run_arith_laws(&ops, &budget(4, 0));
    let caught = report
        .laws
        .iter()
        .find(|r| !r.pass && r.counterexample.is_some());
    match caught {
        Some(r) => println!(
            "mutant monus caught by {} at {}",
            r.id,
            r.counterexample.as_deref().unwrap()
        ),
        None => pass = false,
    }

    // tail that truncates at most one element
    let x = finite_obj(2);
    let kit = ListKit::new(&x);
    let dom = ObjExpr::Prod(vec![ObjExpr::Nat, kit.lx.clone()]);
    let tr = listobj::tr(&x);
    let bad_tail = Arrow::new(dom, kit.lx.clone(), Some("tail".to_string()), move |e: &Elem| {
        let p = e.as_tup();
        if p[0].as_nat() == &BigUint::zero() {
            p[1].clone()
        } else {
            tr.apply(&p[1])
        }
    });
    let ops = ListOps::with_tail(&x, bad_tail);
    let report = listobj::run_list_laws(&ops, &budget(3, 3), 3);
    let caught = report
        .laws
        .iter()
        .find(|r| !r.pass && r.counterexample.is_some());
    match caught {
        Some(r) => println!(
            "mutant tail caught by {} at {}",
            r.id,
            r.counterexample.as_deref().unwrap()
        ),
        None => pass = false,
    }

    verdict(9, "mutants each fail a named law with a counterexample", pass);
}

#[test]
fn criterion_10_cli_determinism_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_listpoly");
    let dir = std::env::temp_dir().join(format!("listpoly-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p
    };
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).to_string())
    };

    let mut pass = true;

    // the documented sample, byte-identical across two runs
    let sample = write(
        "sample.inst",
        "X = {a, b}\nA = {p, q, r}\nlA: p -> 2, q -> 0, r -> 1\n\
         g: (0, p) -> a, (1, p) -> b, (0, r) -> a\n",
    );
    let (code1, out1) = run(&["adjoint", sample.to_str().unwrap()]);
    let (code2, out2) = run(&["adjoint", sample.to_str().unwrap()]);
    pass &= code1 == 0 && code2 == 0;
    pass &= out1 == out2;
    pass &= out1
        == "h: p -> [a, b]\nh: q -> []\nh: r -> [a]\nEXISTENCE PASS\nUNIQUENESS PASS (1 solution)\n";

    // parse error and ill-formed tables: exit 2
    let garbled = write("garbled.inst", "X = {a}\nnot a directive\n");
    pass &= run(&["adjoint", garbled.to_str().unwrap()]).0 == 2;
    let missing = write("missing.inst", "X = {a}\nA = {p}\nlA: p -> 2\ng: (0, p) -> a\n");
    pass &= run(&["adjoint", missing.to_str().unwrap()]).0 == 2;
    let extra = write(
        "extra.inst",
        "X = {a}\nA = {p}\nlA: p -> 1\ng: (0, p) -> a, (2, p) -> a\n",
    );
    pass &= run(&["adjoint", extra.to_str().unwrap()]).0 == 2;

    // brute-force space past the cap: exit 3
    let mut big = String::from("X = {a, b}\nA = {p}\nlA: p -> 21\ng: ");
    let entries: Vec<String> = (0..21).map(|m| format!("({m}, p) -> a")).collect();
    big.push_str(&entries.join(", "));
    big.push('\n');
    let big = write("big.inst", &big);
    pass &= run(&["adjoint", big.to_str().unwrap()]).0 == 3;

    // usage errors: exit 2
    pass &= run(&["laws", "--no-such-flag"]).0 == 2;
    pass &= run(&[]).0 == 2;

    // laws and poly reports are deterministic and well-formed
    let laws_args = ["laws", "--nat-max", "3", "--len-max", "2", "--seed", "7"];
    let (lc1, lo1) = run(&laws_args);
    let (lc2, lo2) = run(&laws_args);
    pass &= lc1 == 0 && lc2 == 0 && lo1 == lo2;
    pass &= lo1.starts_with("budget nat_max=3 len_max=2 card_x=2 seed=7\n");
    let (pc, po) = run(&["poly", "--card-x", "2", "--max-len", "3"]);
    pass &= pc == 0 && po.contains("total 15\nBIJECTION PASS\n");
    let (pc0, po0) = run(&["poly", "--card-x", "0", "--max-len", "3"]);
    pass &= pc0 == 0 && po0.contains("total 1\n");

    // eval round trip
    let (ec, eo) = run(&["eval", "monus(3, 5)"]);
    pass &= ec == 0 && eo == "0\n";
    let (ec2, _) = run(&["eval", "add(1,"]);
    pass &= ec2 == 2;

    std::fs::remove_dir_all(&dir).ok();
    verdict(10, "CLI determinism and exit-code contract", pass);
}
