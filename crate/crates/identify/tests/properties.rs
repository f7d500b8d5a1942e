use proptest::prelude::*;
use tfnorm_identify::ast::*;
use tfnorm_identify::{measure, normalize, parse};

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, 4.0]).prop_map(Exponent::Finite),
        Just(Exponent::Inf0),
    ]
}

fn weight() -> impl Strategy<Value = WeightExpr> {
    (-2i32..=2).prop_map(|s| WeightExpr(s as f64))
}

fn leaf() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        (prop::sample::select(vec![1.0, 2.0, 3.0]), weight()).prop_map(|(p, w)| Lp(Exponent::Finite(p), w)),
        weight().prop_map(C0),
        (prop::sample::select(vec![1.0, 2.0]), weight()).prop_map(|(p, w)| fl(Lp(Exponent::Finite(p), w))),
        (0i32..3).prop_map(|s| Qs(s as f64)),
        (prop::sample::select(vec![1.0, 2.0]), prop::sample::select(vec![1.0, 2.0]), weight(), weight())
            .prop_map(|(p, q, a, b)| Mpq(Exponent::Finite(p), Exponent::Finite(q), TfWeight::Tensor(a, b))),
    ]
}

fn expr() -> impl Strategy<Value = SpaceExpr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| FL(Box::new(e))),
            inner.clone().prop_map(|e| FLinv(Box::new(e))),
            inner.clone().prop_map(|e| Dual(Box::new(e))),
            (inner.clone(), exponent(), weight()).prop_map(|(e, p, w)| Amalgam(Box::new(e), p, w)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Mod(Box::new(TensorPi(Box::new(a), Box::new(b))))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Mod(Box::new(TensorEps(Box::new(a), Box::new(b))))),
            (inner.clone(), inner).prop_map(|(a, b)| TensorPi(Box::new(a), Box::new(b))),
        ]
    })
}

/// Amalgams whose weights and exponents line up with the two main theorems.
fn theorem_shaped() -> impl Strategy<Value = SpaceExpr> {
    (exponent(), exponent(), weight(), weight(), any::<bool>(), any::<bool>()).prop_map(|(p1, p2, w1, w2, eps, fourier_local)| {
        let f = Lp(Exponent::Finite(2.0), WeightExpr::UNIT);
        let e = if fourier_local { fl(f.clone()) } else { f.clone() };
        let a = Amalgam(Box::new(f), p1, w1);
        let c = FL(Box::new(Amalgam(Box::new(e), p2, w2)));
        if eps {
            Mod(Box::new(TensorEps(Box::new(a), Box::new(c))))
        } else {
            Mod(Box::new(TensorPi(Box::new(a), Box::new(c))))
        }
    })
}

proptest! {
    #[test]
    fn normalization_is_idempotent(e in prop_oneof![expr(), theorem_shaped()]) {
        let n = normalize(&e);
        let again = normalize(&n.normal_form);
        prop_assert!(again.trace.is_empty(), "{} fired {:?}", n.normal_form, again.trace);
        prop_assert_eq!(again.normal_form, n.normal_form);
    }

    #[test]
    fn each_rule_application_decreases_measure(e in prop_oneof![expr(), theorem_shaped()]) {
        for s in normalize(&e).trace {
            let before = measure(&parse(&s.before).unwrap());
            let after = measure(&parse(&s.after).unwrap());
            prop_assert!(after < before, "{} ({}) -> {}", s.before, s.rule_id, s.after);
        }
    }

    #[test]
    fn display_round_trips(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn normalization_is_deterministic(e in expr()) {
        prop_assert_eq!(normalize(&e), normalize(&e));
    }
}
