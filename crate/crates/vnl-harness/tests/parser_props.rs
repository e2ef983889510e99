use proptest::prelude::*;

use vnl_harness::expr::{parse_ring_expr, RingExpr};

fn arb_modulus() -> impl Strategy<Value = Vec<u64>> {
    // canonical coefficient vectors over Z_2: nonzero leading coefficient,
    // everything already reduced
    (1usize..4).prop_flat_map(|deg| {
        proptest::collection::vec(0u64..2, deg)
            .prop_map(|mut low| {
                low.push(1);
                low
            })
    })
}

fn arb_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (1u64..40).prop_map(RingExpr::Cyclic),
        (0usize..3, 1usize..4).prop_map(|(pi, k)| RingExpr::GaloisField {
            p: [2, 3, 5][pi],
            k,
            modulus: None,
        }),
        arb_modulus().prop_map(|m| RingExpr::GaloisField {
            p: 2,
            k: m.len() - 1,
            modulus: Some(m),
        }),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (1usize..4, inner.clone()).prop_map(|(n, b)| RingExpr::Matrix(n, Box::new(b))),
            (1usize..4, inner.clone())
                .prop_map(|(n, b)| RingExpr::UpperTriangular(n, Box::new(b))),
            proptest::collection::vec(inner.clone(), 1..4).prop_map(RingExpr::Product),
            (inner.clone(), inner.clone(), 0usize..3).prop_map(|(l, r, m)| {
                RingExpr::Triangular {
                    left: Box::new(l),
                    module: ["self", "zero", "col"][m].to_string(),
                    right: Box::new(r),
                }
            }),
            (inner.clone(), 0usize..12).prop_map(|(b, g)| RingExpr::Quotient {
                base: Box::new(b),
                ideal: format!("gen{g}"),
            }),
            (inner.clone(), 0usize..12).prop_map(|(b, e)| RingExpr::Corner {
                base: Box::new(b),
                idempotent: e,
            }),
            inner.prop_map(|b| RingExpr::Center(Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn parse_after_print_is_identity(expr in arb_expr()) {
        let printed = expr.to_string();
        let reparsed = parse_ring_expr(&printed).expect("canonical forms parse");
        prop_assert_eq!(reparsed, expr);
    }
}
