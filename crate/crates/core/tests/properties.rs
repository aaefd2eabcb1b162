use num_traits::{One, Zero};
use proptest::prelude::*;

use pddo::braid::almost_equal;
use pddo::commute::{commutes_by_composition, commutes_same_index};
use pddo::divdiff::ddiff;
use pddo::json::{parse_descriptor, parse_poly, poly_to_value};
use pddo::{FieldElement, MultiPoly, Pddo, SlotPoly};

fn field() -> impl Strategy<Value = FieldElement> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(a, b, c, d)| {
        &FieldElement::from_ratio(a, b) + &(&FieldElement::zeta() * &FieldElement::from_ratio(c, d))
    })
}

fn slot(max_deg: u32) -> impl Strategy<Value = SlotPoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), field()), 0..5)
        .prop_map(SlotPoly::from_terms)
}

fn poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), field()), 0..6).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(MultiPoly::zero(n), |acc, (e, c)| &acc + &MultiPoly::monomial(e, c))
    })
}

fn pddo() -> impl Strategy<Value = Pddo> {
    (slot(2), slot(2), slot(2), slot(2)).prop_map(|(p, q, r, s)| Pddo::from_pqrs(&p, &q, &r, &s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in field(), b in field(), c in field()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.invert().unwrap(), FieldElement::one());
        }
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
    }

    #[test]
    fn field_text_round_trip(a in field()) {
        prop_assert_eq!(a.to_string().parse::<FieldElement>().unwrap(), a);
    }

    #[test]
    fn poly_json_round_trip(f in poly(3)) {
        let text = poly_to_value(&f).to_string();
        prop_assert_eq!(parse_poly(&text, Some(3)).unwrap(), f);
    }

    #[test]
    fn twisted_leibniz(f in poly(3), g in poly(3), i in 1usize..=2) {
        let lhs = ddiff(&(&f * &g), i).unwrap();
        let rhs = &(&ddiff(&f, i).unwrap() * &g) + &(&f.swap_vars(i).unwrap() * &ddiff(&g, i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn presentation_independence(op in pddo(), a in 0u32..=4, b in 0u32..=4) {
        let f = MultiPoly::monomial(vec![a, b], FieldElement::one());
        let first = op.canonical_forms().first();
        prop_assert_eq!(op.apply(1, &f).unwrap(), first.apply(1, &f).unwrap());
    }

    #[test]
    fn compose_matches_apply(op1 in pddo(), op2 in pddo(), a in 0u32..=3, b in 0u32..=3) {
        let f = MultiPoly::monomial(vec![a, b], FieldElement::one());
        let composed = op1.compose_same_index(&op2).apply(1, &f).unwrap();
        let stepwise = op1.apply(1, &op2.apply(1, &f).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn commutation_paths_agree(op1 in pddo(), op2 in pddo()) {
        prop_assert_eq!(commutes_same_index(&op1, &op2), commutes_by_composition(&op1, &op2));
    }

    #[test]
    fn hecke_identity_when_reported(op in pddo(), a in 0u32..=4, b in 0u32..=4) {
        if let Some((mu, nu)) = op.hecke_params() {
            let f = MultiPoly::monomial(vec![a, b], FieldElement::one());
            let pf = op.apply(1, &f).unwrap();
            prop_assert_eq!(op.apply(1, &pf).unwrap(), &pf.scale(&mu) + &f.scale(&nu));
        }
    }

    #[test]
    fn almost_equal_symmetric_and_scale_invariant(q in slot(2), qt in slot(2), k in field()) {
        prop_assume!(!q.is_zero() && !qt.is_zero() && !k.is_zero());
        let fwd = almost_equal(&q, &qt).unwrap();
        prop_assert_eq!(fwd, almost_equal(&qt, &q).unwrap());
        prop_assert_eq!(fwd, almost_equal(&q.scale(&k), &qt).unwrap());
        prop_assert!(almost_equal(&q, &q).unwrap());
    }

    #[test]
    fn descriptor_parser_total(text in ".{0,200}") {
        let _ = parse_descriptor(&text);
    }
}
