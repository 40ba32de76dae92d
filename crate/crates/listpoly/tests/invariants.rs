//! Property tests for cross-cutting invariants: enumeration determinism,
//! print/parse round trips, and agreement with big-integer arithmetic.

use proptest::prelude::*;

use listpoly::arith::ArithOps;
use listpoly::lang::{self, Context, Symbols};
use listpoly::setmodel::{enumerate, finite_obj, Budget, Elem, ObjExpr};

fn small_budget() -> impl Strategy<Value = Budget> {
    (0..6u64, 0..3u64).prop_map(|(nat_max, len_max)| Budget {
        nat_max,
        len_max,
        card_cap: 100_000,
        seed: 0,
    })
}

fn small_obj() -> impl Strategy<Value = ObjExpr> {
    let leaf = prop_oneof![
        Just(ObjExpr::Unit),
        Just(ObjExpr::Nat),
        (0..3u64).prop_map(finite_obj),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(ObjExpr::list_of),
            proptest::collection::vec(inner, 2..=3).prop_map(ObjExpr::Prod),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free(
        obj in small_obj(),
        budget in small_budget(),
    ) {
        let first = enumerate(&obj, &budget);
        let second = enumerate(&obj, &budget);
        prop_assert_eq!(&first.elems, &second.elems);
        for (i, e) in first.elems.iter().enumerate() {
            prop_assert!(!first.elems[i + 1..].contains(e), "duplicate {e}");
        }
    }

    #[test]
    fn enumerated_elements_typecheck(obj in small_obj(), budget in small_budget()) {
        for e in enumerate(&obj, &budget).elems {
            prop_assert!(listpoly::setmodel::elem_has_type(&e, &obj));
        }
    }

    #[test]
    fn term_print_parse_round_trip(
        ns in proptest::collection::vec(0..40u64, 1..5),
    ) {
        // build a nested numeric term, print it, reparse, print again
        let mut text = format!("{}", ns[0]);
        for n in &ns[1..] {
            text = format!("add({text}, {n})");
        }
        let t = lang::parse_term(&text).unwrap();
        let again = lang::parse_term(&t.to_string()).unwrap();
        prop_assert_eq!(t.to_string(), again.to_string());
        // and both denote the same closed value
        let ctx = Context::default();
        let syms = Symbols::default();
        let v1 = lang::interpret(&t, &ctx, &syms).unwrap().apply(&Elem::Star);
        let v2 = lang::interpret(&again, &ctx, &syms).unwrap().apply(&Elem::Star);
        let want: u64 = ns.iter().sum();
        prop_assert_eq!(&v1, &v2);
        prop_assert_eq!(v1, Elem::num(want));
    }

    #[test]
    fn arithmetic_matches_native(a in 0..48u64, b in 0..48u64) {
        let ops = ArithOps::standard();
        let pair = |f: &listpoly::Arrow| {
            f.apply(&Elem::Tup(vec![Elem::num(a), Elem::num(b)]))
        };
        prop_assert_eq!(pair(&ops.add), Elem::num(a + b));
        prop_assert_eq!(pair(&ops.mul), Elem::num(a * b));
        prop_assert_eq!(pair(&ops.monus), Elem::num(a.saturating_sub(b)));
        prop_assert_eq!(pair(&ops.min), Elem::num(a.min(b)));
        prop_assert_eq!(pair(&ops.max), Elem::num(a.max(b)));
        prop_assert_eq!(pair(&ops.absdiff), Elem::num(a.abs_diff(b)));
    }

    #[test]
    fn laws_hold_at_arbitrary_small_budgets(budget in small_budget()) {
        let ops = ArithOps::standard();
        let report = listpoly::arith::run_arith_laws(&ops, &budget);
        prop_assert!(report.all_pass(), "{}", report.render());
    }
}
