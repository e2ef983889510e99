//! The finite unital ring type shared by every analysis.
//!
//! Elements are plain indices in `0..order`. A ring is backed either by dense
//! Cayley tables (orders up to the configured cap) or by structured computed
//! arithmetic; every consumer goes through [`Ring::add`] / [`Ring::mul`] /
//! [`Ring::neg`] and never sees the difference.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::RingError;

/// Dense representations index with `u16`, so a table-backed ring can hold at
/// most this many elements.
pub const MAX_DENSE_ORDER: usize = u16::MAX as usize;

/// Computed arithmetic for rings too large to tabulate.
pub trait StructuredOps: Send + Sync {
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
}

pub(crate) struct DenseTables {
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub neg: Vec<u16>,
}

pub(crate) enum Repr {
    Dense(DenseTables),
    Structured(Box<dyn StructuredOps>),
}

/// How a ring is represented, as reported in summaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReprKind {
    #[serde(rename = "dense-table")]
    DenseTable,
    #[serde(rename = "structured")]
    Structured,
}

impl fmt::Display for ReprKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReprKind::DenseTable => write!(f, "dense-table"),
            ReprKind::Structured => write!(f, "structured"),
        }
    }
}

/// JSON summary of a ring: `{label, order, repr_kind}`.
#[derive(Debug, Clone, Serialize)]
pub struct RingSummary {
    pub label: String,
    pub order: usize,
    pub repr_kind: ReprKind,
}

/// Lazily computed per-ring analysis results. Rings are immutable after
/// construction, so populating these from several threads is race-benign:
/// every writer computes the same value.
#[derive(Default)]
pub(crate) struct AnalysisCaches {
    pub units: OnceLock<Vec<bool>>,
    pub regular: OnceLock<Vec<bool>>,
    pub jacobson: OnceLock<Vec<usize>>,
    pub idempotents: OnceLock<Vec<usize>>,
    pub census: OnceLock<crate::structure::IdempotentCensus>,
    pub max_regular_ideal: OnceLock<Vec<usize>>,
    /// `None` = VNL holds; `Some(a)` = witness with `a` and `1-a` both non-regular.
    pub vnl_witness: OnceLock<Option<usize>>,
}

/// A finite unital ring on the index set `0..order`.
pub struct Ring {
    label: String,
    order: usize,
    zero: usize,
    one: usize,
    repr: Repr,
    pub(crate) caches: AnalysisCaches,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("repr", &self.repr_kind())
            .finish()
    }
}

impl Ring {
    pub(crate) fn from_dense(
        label: String,
        zero: usize,
        one: usize,
        tables: DenseTables,
    ) -> Result<Self, RingError> {
        let order = tables.neg.len();
        if order == 0 {
            return Err(RingError::invalid("a ring needs at least one element"));
        }
        if tables.add.len() != order * order || tables.mul.len() != order * order {
            return Err(RingError::invalid("table dimensions do not match order"));
        }
        if order > 1 && zero == one {
            return Err(RingError::invalid("zero = one in a ring of order > 1"));
        }
        Ok(Ring {
            label,
            order,
            zero,
            one,
            repr: Repr::Dense(tables),
            caches: AnalysisCaches::default(),
        })
    }

    pub(crate) fn from_structured(
        label: String,
        order: usize,
        zero: usize,
        one: usize,
        ops: Box<dyn StructuredOps>,
    ) -> Result<Self, RingError> {
        if order == 0 {
            return Err(RingError::invalid("a ring needs at least one element"));
        }
        if order > 1 && zero == one {
            return Err(RingError::invalid("zero = one in a ring of order > 1"));
        }
        Ok(Ring {
            label,
            order,
            zero,
            one,
            repr: Repr::Structured(ops),
            caches: AnalysisCaches::default(),
        })
    }

    /// Tabulates structured ops into dense tables. Caller guarantees the order
    /// fits `u16` indexing.
    pub(crate) fn densify(
        label: String,
        order: usize,
        zero: usize,
        one: usize,
        ops: &dyn StructuredOps,
    ) -> Result<Self, RingError> {
        debug_assert!(order <= MAX_DENSE_ORDER);
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut neg = vec![0u16; order];
        for a in 0..order {
            neg[a] = ops.neg(a) as u16;
            let row = a * order;
            for b in 0..order {
                add[row + b] = ops.add(a, b) as u16;
                mul[row + b] = ops.mul(a, b) as u16;
            }
        }
        Ring::from_dense(label, zero, one, DenseTables { add, mul, neg })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn repr_kind(&self) -> ReprKind {
        match self.repr {
            Repr::Dense(_) => ReprKind::DenseTable,
            Repr::Structured(_) => ReprKind::Structured,
        }
    }

    pub fn summary(&self) -> RingSummary {
        RingSummary {
            label: self.label.clone(),
            order: self.order,
            repr_kind: self.repr_kind(),
        }
    }

    /// True exactly for the ring of order 1, where zero = one.
    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Dense(t) => t.add[a * self.order + b] as usize,
            Repr::Structured(ops) => ops.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Dense(t) => t.mul[a * self.order + b] as usize,
            Repr::Structured(ops) => ops.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.repr {
            Repr::Dense(t) => t.neg[a] as usize,
            Repr::Structured(ops) => ops.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `1 - a`.
    #[inline]
    pub fn one_minus(&self, a: usize) -> usize {
        self.sub(self.one, a)
    }

    /// Product of several factors, left to right.
    pub fn prod(&self, xs: &[usize]) -> usize {
        let mut acc = self.one;
        for &x in xs {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Checks every ring axiom on every pair/triple. Quadratic checks are
    /// always run; the cubic ones (associativity, distributivity) make this
    /// O(order^3), so callers gate it by order.
    pub fn validate_exhaustive(&self) -> Result<(), RingError> {
        let n = self.order;
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return Err(self.axiom_err("additive identity", &[a]));
            }
            if self.add(a, self.neg(a)) != self.zero {
                return Err(self.axiom_err("additive inverse", &[a]));
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return Err(self.axiom_err("multiplicative identity", &[a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(self.axiom_err("additive commutativity", &[a, b]));
                }
                if self.add(a, b) >= n || self.mul(a, b) >= n {
                    return Err(self.axiom_err("closure", &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    self.check_triple(a, b, c)?;
                }
            }
        }
        Ok(())
    }

    /// Samples `budget` random triples and checks the cubic axioms on each,
    /// plus the quadratic axioms exhaustively. The sampler is a fixed
    /// splitmix64 stream so runs are reproducible for a given seed.
    pub fn validate_sampled(&self, budget: usize, seed: u64) -> Result<(), RingError> {
        let n = self.order;
        for a in 0..n {
            if self.add(a, self.zero) != a
                || self.add(a, self.neg(a)) != self.zero
                || self.mul(a, self.one) != a
                || self.mul(self.one, a) != a
            {
                return Err(self.axiom_err("identity/inverse", &[a]));
            }
        }
        let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
        let mut next = move || {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        };
        for _ in 0..budget {
            let a = (next() % n as u64) as usize;
            let b = (next() % n as u64) as usize;
            let c = (next() % n as u64) as usize;
            if self.add(a, b) != self.add(b, a) {
                return Err(self.axiom_err("additive commutativity", &[a, b]));
            }
            self.check_triple(a, b, c)?;
        }
        Ok(())
    }

    #[inline]
    fn check_triple(&self, a: usize, b: usize, c: usize) -> Result<(), RingError> {
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return Err(self.axiom_err("additive associativity", &[a, b, c]));
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return Err(self.axiom_err("multiplicative associativity", &[a, b, c]));
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return Err(self.axiom_err("left distributivity", &[a, b, c]));
        }
        if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            return Err(self.axiom_err("right distributivity", &[a, b, c]));
        }
        Ok(())
    }

    fn axiom_err(&self, axiom: &'static str, witness: &[usize]) -> RingError {
        RingError::AxiomViolation {
            axiom,
            witness: format!("{:?} in {}", witness, self.label),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_are_shareable_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Ring>();
        assert_send_sync::<crate::triangular::Bimodule>();
        assert_send_sync::<crate::triangular::TriangularRing>();
    }

    #[test]
    fn summary_serializes_to_the_pinned_schema() {
        let ring = crate::construct::build_cyclic(12, &crate::BuildConfig::default()).unwrap();
        let json = serde_json::to_string(&ring.summary()).unwrap();
        assert_eq!(json, r#"{"label":"Zn(12)","order":12,"repr_kind":"dense-table"}"#);
    }
}
