//! Element-level deciders: regularity, units, exchange witnesses, principal
//! ideals, unimodular rows. Everything is an exhaustive scan in element index
//! order, so every returned witness is the least one.

use serde::Serialize;

use crate::error::RingError;
use crate::ring::Ring;

/// Witness that `a` is (von Neumann) regular: `a·x·a = a`, and the reflexive
/// inverse `y = x·a·x` which additionally satisfies `y·a·y = y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub element: usize,
    pub inner_inverse: usize,
    pub reflexive_inverse: usize,
}

impl RegularityWitness {
    /// Re-checks both identities.
    pub fn verify(&self, ring: &Ring) -> bool {
        let a = self.element;
        let x = self.inner_inverse;
        let y = self.reflexive_inverse;
        ring.prod(&[a, x, a]) == a && ring.prod(&[a, y, a]) == a && ring.prod(&[y, a, y]) == y
    }
}

/// Witness that `a` is an exchange element: an idempotent `e ∈ aR` with
/// `1−e ∈ (1−a)R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub element: usize,
    pub idempotent: usize,
}

impl ExchangeWitness {
    pub fn verify(&self, ring: &Ring) -> bool {
        let (a, e) = (self.element, self.idempotent);
        ring.mul(e, e) == e
            && principal_right_ideal(ring, a).contains(&e)
            && principal_right_ideal(ring, ring.one_minus(a)).contains(&ring.one_minus(e))
    }
}

/// Least `x` with `a·x·a = a`, together with the reflexive inverse `x·a·x`.
pub fn regular_witness(ring: &Ring, a: usize) -> Option<RegularityWitness> {
    let n = ring.order();
    for x in 0..n {
        if ring.mul(ring.mul(a, x), a) == a {
            let y = ring.mul(ring.mul(x, a), x);
            return Some(RegularityWitness {
                element: a,
                inner_inverse: x,
                reflexive_inverse: y,
            });
        }
    }
    None
}

/// Cached regularity bitvector for the whole ring.
pub(crate) fn regular_flags(ring: &Ring) -> &[bool] {
    ring.caches.regular.get_or_init(|| {
        let n = ring.order();
        (0..n)
            .map(|a| (0..n).any(|x| ring.mul(ring.mul(a, x), a) == a))
            .collect()
    })
}

pub fn is_regular(ring: &Ring, a: usize) -> bool {
    regular_flags(ring)[a]
}

/// Two-sided inverse of `a`, when it exists. Finite rings make one-sided
/// inverses two-sided, but both sides are checked anyway.
pub fn unit_inverse(ring: &Ring, a: usize) -> Option<usize> {
    let one = ring.one();
    (0..ring.order()).find(|&x| ring.mul(a, x) == one && ring.mul(x, a) == one)
}

pub(crate) fn unit_flags(ring: &Ring) -> &[bool] {
    ring.caches.units.get_or_init(|| {
        (0..ring.order())
            .map(|a| unit_inverse(ring, a).is_some())
            .collect()
    })
}

pub fn is_unit(ring: &Ring, a: usize) -> bool {
    unit_flags(ring)[a]
}

/// The set `{a·r : r ∈ R}`, ascending.
pub fn principal_right_ideal(ring: &Ring, a: usize) -> Vec<usize> {
    let mut seen = vec![false; ring.order()];
    for r in 0..ring.order() {
        seen[ring.mul(a, r)] = true;
    }
    flags_to_vec(&seen)
}

/// The set `{r·a : r ∈ R}`, ascending.
pub fn principal_left_ideal(ring: &Ring, a: usize) -> Vec<usize> {
    let mut seen = vec![false; ring.order()];
    for r in 0..ring.order() {
        seen[ring.mul(r, a)] = true;
    }
    flags_to_vec(&seen)
}

pub(crate) fn right_ideal_flags(ring: &Ring, a: usize) -> Vec<bool> {
    let mut seen = vec![false; ring.order()];
    for r in 0..ring.order() {
        seen[ring.mul(a, r)] = true;
    }
    seen
}

pub(crate) fn flags_to_vec(flags: &[bool]) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(i, &f)| f.then_some(i))
        .collect()
}

/// Least idempotent `e ∈ aR` with `1−e ∈ (1−a)R`.
pub fn exchange_witness(ring: &Ring, a: usize) -> Option<ExchangeWitness> {
    let in_ar = right_ideal_flags(ring, a);
    let in_car = right_ideal_flags(ring, ring.one_minus(a));
    let idems = crate::structure::idempotents(ring);
    idems
        .iter()
        .copied()
        .find(|&e| in_ar[e] && in_car[ring.one_minus(e)])
        .map(|e| ExchangeWitness {
            element: a,
            idempotent: e,
        })
}

/// Additive closure of a union of additive subgroups. Principal right ideals
/// are additive subgroups, so the closure of `A ∪ B` is the sumset `A + B`;
/// folding that pairwise covers any number of summands.
pub(crate) fn subgroup_sum(ring: &Ring, sets: &[Vec<bool>]) -> Vec<bool> {
    let n = ring.order();
    let mut acc = vec![false; n];
    acc[ring.zero()] = true;
    for set in sets {
        let xs = flags_to_vec(&acc);
        let ys = flags_to_vec(set);
        let mut next = vec![false; n];
        for &x in &xs {
            for &y in &ys {
                next[ring.add(x, y)] = true;
            }
        }
        acc = next;
    }
    acc
}

/// True iff `a_1 R + ... + a_k R = R`, computed as the additive-subgroup
/// closure of the union of the principal right ideals.
pub fn is_unimodular_row(ring: &Ring, elements: &[usize]) -> Result<bool, RingError> {
    if elements.is_empty() {
        return Err(RingError::invalid("unimodular row: empty element list"));
    }
    if let Some(&bad) = elements.iter().find(|&&a| a >= ring.order()) {
        return Err(RingError::invalid(format!(
            "unimodular row: index {bad} out of range for {}",
            ring.label()
        )));
    }
    let ideals: Vec<Vec<bool>> = elements
        .iter()
        .map(|&a| right_ideal_flags(ring, a))
        .collect();
    let closure = subgroup_sum(ring, &ideals);
    Ok(closure.iter().all(|&f| f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_cyclic, BuildConfig};

    fn zn(n: usize) -> std::sync::Arc<Ring> {
        build_cyclic(n, &BuildConfig::default()).unwrap()
    }

    #[test]
    fn regular_witness_scans_in_index_order() {
        let z12 = zn(12);
        let w = regular_witness(&z12, 4).unwrap();
        assert_eq!(w.inner_inverse, 1); // 4*1*4 = 16 = 4 mod 12
        assert!(w.verify(&z12));

        let z4 = zn(4);
        assert!(regular_witness(&z4, 2).is_none());

        // 0 is always regular with inner inverse 0
        let w0 = regular_witness(&z4, 0).unwrap();
        assert_eq!(w0.inner_inverse, 0);
    }

    #[test]
    fn unit_inverse_examples() {
        let z12 = zn(12);
        assert_eq!(unit_inverse(&z12, 5), Some(5));
        assert_eq!(unit_inverse(&z12, 1), Some(1));
        let z4 = zn(4);
        assert_eq!(unit_inverse(&z4, 2), None);
    }

    #[test]
    fn principal_ideal_examples() {
        let z12 = zn(12);
        assert_eq!(principal_right_ideal(&z12, 4), vec![0, 4, 8]);
        assert_eq!(principal_right_ideal(&z12, 1).len(), 12);
        assert_eq!(principal_right_ideal(&z12, 0), vec![0]);
    }

    #[test]
    fn exchange_witness_examples() {
        let z4 = zn(4);
        let w = exchange_witness(&z4, 2).unwrap();
        assert_eq!(w.idempotent, 0); // 0 in 2R, 1 in 3R since 3 is a unit
        assert!(w.verify(&z4));
        assert_eq!(exchange_witness(&z4, 0).unwrap().idempotent, 0);
        // idempotent a is its own witness
        let z12 = zn(12);
        let w = exchange_witness(&z12, 4).unwrap();
        assert!(w.verify(&z12));
    }

    #[test]
    fn unimodular_rows() {
        let z12 = zn(12);
        assert!(is_unimodular_row(&z12, &[4, 3]).unwrap());
        assert!(!is_unimodular_row(&z12, &[2, 4]).unwrap());
        assert!(is_unimodular_row(&z12, &[1, 7]).unwrap());
        assert!(is_unimodular_row(&z12, &[]).is_err());
        assert!(is_unimodular_row(&z12, &[12]).is_err());
    }

    #[test]
    fn reflexive_inverse_identity_holds_everywhere() {
        for n in 1..=24 {
            let r = zn(n);
            for a in 0..r.order() {
                if let Some(w) = regular_witness(&r, a) {
                    assert!(w.verify(&r), "reflexive identity failed in Zn({n}) at {a}");
                }
            }
        }
    }
}
