use proptest::prelude::*;

use vnl_core::construct::{build_cyclic, build_quotient, BuildConfig};
use vnl_core::element::{exchange_witness, regular_witness};
use vnl_core::structure::ideal_generated;

fn cfg() -> BuildConfig {
    BuildConfig::default()
}

proptest! {
    #[test]
    fn regular_witnesses_satisfy_the_reflexive_identity(n in 1usize..48, a in 0usize..48) {
        let ring = build_cyclic(n, &cfg()).unwrap();
        let a = a % n;
        if let Some(w) = regular_witness(&ring, a) {
            prop_assert!(w.verify(&ring));
        }
    }

    #[test]
    fn exchange_witnesses_verify(n in 1usize..48, a in 0usize..48) {
        let ring = build_cyclic(n, &cfg()).unwrap();
        let a = a % n;
        let w = exchange_witness(&ring, a).expect("finite rings are exchange");
        prop_assert!(w.verify(&ring));
    }

    #[test]
    fn quotient_maps_are_surjective_homomorphisms(n in 1usize..40, g in 0usize..40) {
        let ring = build_cyclic(n, &cfg()).unwrap();
        let ideal = ideal_generated(&ring, g % n);
        let q = build_quotient(&ring, &ideal, &cfg()).unwrap();
        let mut hit = vec![false; q.ring().order()];
        for x in 0..n {
            hit[q.project(x)] = true;
            for y in 0..n {
                prop_assert_eq!(
                    q.project(ring.add(x, y)),
                    q.ring().add(q.project(x), q.project(y))
                );
                prop_assert_eq!(
                    q.project(ring.mul(x, y)),
                    q.ring().mul(q.project(x), q.project(y))
                );
            }
        }
        prop_assert!(hit.iter().all(|&b| b));
    }
}
