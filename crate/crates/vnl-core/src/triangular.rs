//! Bimodules and formal triangular matrix rings.
//!
//! A triangular ring is the set of triples `(r, m, s)` over an `(R, S)`
//! bimodule `M` with multiplication `(r, m, s)(r', m', s') = (rr', rm' + ms',
//! ss')`. Regularity of a triple is decidable from component data: `(a, m,
//! b)` is regular exactly when there are idempotents `e`, `f` with `aR = eR`,
//! `Sb = Sf` and `(1−e)m(1−f) = 0`, and the witness can be assembled in
//! closed form. That criterion and the componentwise VNL criterion both live
//! here, next to the brute-force scans they are checked against.

use std::sync::Arc;

use serde::Serialize;

use crate::construct::{encode_tuple, BuildConfig, MatrixRing, UpperTriangularRing};
use crate::element::{self, RegularityWitness};
use crate::error::RingError;
use crate::properties::{is_vnl_bool, Method, PropertyReport, Witness};
use crate::ring::{Ring, StructuredOps, MAX_DENSE_ORDER};
use crate::structure::{classify_ring, idempotents, SubsetIdeal};

/// Which action of a bimodule a check runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A finite `(R, S)`-bimodule with exhaustively verified axioms: the additive
/// structure is an abelian group, both actions are biadditive and
/// associative, and the identities act trivially.
pub struct Bimodule {
    label: String,
    left: Arc<Ring>,
    right: Arc<Ring>,
    order: usize,
    zero: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// `|R| x order`, row-major: `lact[r * order + m] = r·m`
    lact: Vec<u16>,
    /// `order x |S|`, row-major: `ract[m * |S| + s] = m·s`
    ract: Vec<u16>,
}

impl std::fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Bimodule")
            .field("label", &self.label)
            .field("left", &self.left.label())
            .field("right", &self.right.label())
            .field("order", &self.order)
            .finish()
    }
}

impl Bimodule {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn left_ring(&self) -> &Arc<Ring> {
        &self.left
    }

    pub fn right_ring(&self) -> &Arc<Ring> {
        &self.right
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn lact(&self, r: usize, m: usize) -> usize {
        self.lact[r * self.order + m] as usize
    }

    #[inline]
    pub fn ract(&self, m: usize, s: usize) -> usize {
        self.ract[m * self.right.order() + s] as usize
    }

    /// Builds from action closures and verifies every axiom, reporting the
    /// first failing instance.
    pub fn from_actions(
        left: &Arc<Ring>,
        right: &Arc<Ring>,
        order: usize,
        label: impl Into<String>,
        add: impl Fn(usize, usize) -> usize,
        lact: impl Fn(usize, usize) -> usize,
        ract: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, RingError> {
        let label = label.into();
        if order == 0 || order > MAX_DENSE_ORDER {
            return Err(RingError::invalid(format!(
                "bimodule {label}: order {order} unsupported"
            )));
        }
        let add_t: Vec<u16> = (0..order * order)
            .map(|i| add(i / order, i % order) as u16)
            .collect();
        let lact_t: Vec<u16> = (0..left.order() * order)
            .map(|i| lact(i / order, i % order) as u16)
            .collect();
        let ract_t: Vec<u16> = (0..order * right.order())
            .map(|i| ract(i / right.order(), i % right.order()) as u16)
            .collect();
        Bimodule::from_tables(left, right, order, label, add_t, lact_t, ract_t)
    }

    /// Builds from raw row-major tables (`add` is `order x order`, `lact`
    /// `|R| x order`, `ract` `order x |S|`) and verifies every axiom.
    pub fn from_tables(
        left: &Arc<Ring>,
        right: &Arc<Ring>,
        order: usize,
        label: impl Into<String>,
        add: Vec<u16>,
        lact: Vec<u16>,
        ract: Vec<u16>,
    ) -> Result<Self, RingError> {
        let label = label.into();
        let bad = |msg: String| Err(RingError::invalid(format!("bimodule {label}: {msg}")));
        if add.len() != order * order {
            return bad(format!("add table has {} entries, need {}", add.len(), order * order));
        }
        if lact.len() != left.order() * order {
            return bad("left action table has wrong dimensions".into());
        }
        if ract.len() != order * right.order() {
            return bad("right action table has wrong dimensions".into());
        }
        if let Some(&e) = add.iter().chain(&lact).chain(&ract).find(|&&e| (e as usize) >= order) {
            return bad(format!("table entry {e} out of range"));
        }

        // additive identity and inverses
        let zero = match (0..order).find(|&z| (0..order).all(|m| add[z * order + m] as usize == m))
        {
            Some(z) => z,
            None => return bad("no additive identity".into()),
        };
        let mut neg = vec![0u16; order];
        for m in 0..order {
            match (0..order).find(|&n| add[m * order + n] as usize == zero) {
                Some(n) => neg[m] = n as u16,
                None => return bad(format!("element {m} has no additive inverse")),
            }
        }
        let module = Bimodule {
            label,
            left: left.clone(),
            right: right.clone(),
            order,
            zero,
            add,
            neg,
            lact,
            ract,
        };
        module.verify()?;
        Ok(module)
    }

    fn verify(&self) -> Result<(), RingError> {
        let bad =
            |msg: String| Err(RingError::invalid(format!("bimodule {}: {msg}", self.label)));
        let g = self.order;
        for a in 0..g {
            for b in 0..g {
                if self.add(a, b) != self.add(b, a) {
                    return bad(format!("addition not commutative at ({a},{b})"));
                }
                for c in 0..g {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return bad(format!("addition not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let (r_ring, s_ring) = (&self.left, &self.right);
        for m in 0..g {
            if self.lact(r_ring.one(), m) != m {
                return bad(format!("1·m != m at m={m}"));
            }
            if self.ract(m, s_ring.one()) != m {
                return bad(format!("m·1 != m at m={m}"));
            }
        }
        for r in 0..r_ring.order() {
            for m in 0..g {
                for m2 in 0..g {
                    if self.lact(r, self.add(m, m2)) != self.add(self.lact(r, m), self.lact(r, m2))
                    {
                        return bad(format!("left action not additive in m at ({r},{m},{m2})"));
                    }
                }
                for r2 in 0..r_ring.order() {
                    if self.lact(r_ring.add(r, r2), m)
                        != self.add(self.lact(r, m), self.lact(r2, m))
                    {
                        return bad(format!("left action not additive in r at ({r},{r2},{m})"));
                    }
                    if self.lact(r_ring.mul(r, r2), m) != self.lact(r, self.lact(r2, m)) {
                        return bad(format!("(r1*r2)m != r1(r2*m) at ({r},{r2},{m})"));
                    }
                }
            }
        }
        for s in 0..s_ring.order() {
            for m in 0..g {
                for m2 in 0..g {
                    if self.ract(self.add(m, m2), s) != self.add(self.ract(m, s), self.ract(m2, s))
                    {
                        return bad(format!("right action not additive in m at ({m},{m2},{s})"));
                    }
                }
                for s2 in 0..s_ring.order() {
                    if self.ract(m, s_ring.add(s, s2))
                        != self.add(self.ract(m, s), self.ract(m, s2))
                    {
                        return bad(format!("right action not additive in s at ({m},{s},{s2})"));
                    }
                    if self.ract(m, s_ring.mul(s, s2)) != self.ract(self.ract(m, s), s2) {
                        return bad(format!("m(s1*s2) != (m*s1)s2 at ({m},{s},{s2})"));
                    }
                }
            }
        }
        for r in 0..r_ring.order() {
            for m in 0..g {
                for s in 0..s_ring.order() {
                    if self.ract(self.lact(r, m), s) != self.lact(r, self.ract(m, s)) {
                        return bad(format!("(r*m)s != r(m*s) at ({r},{m},{s})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// A ring as a bimodule over itself.
    pub fn ring_bimodule(ring: &Arc<Ring>, label: impl Into<String>) -> Self {
        Bimodule::from_actions(
            ring,
            ring,
            ring.order(),
            label,
            |a, b| ring.add(a, b),
            |r, m| ring.mul(r, m),
            |m, s| ring.mul(m, s),
        )
        .expect("a ring is a bimodule over itself")
    }

    /// The order-1 bimodule.
    pub fn zero_bimodule(left: &Arc<Ring>, right: &Arc<Ring>, label: impl Into<String>) -> Self {
        Bimodule::from_actions(left, right, 1, label, |_, _| 0, |_, _| 0, |_, _| 0)
            .expect("the zero module is a bimodule")
    }

    /// A two-sided ideal of `R` as an `(R, R)`-bimodule; elements are indexed
    /// by their position in the sorted member list.
    pub fn ideal_bimodule(
        ring: &Arc<Ring>,
        ideal: &SubsetIdeal,
        label: impl Into<String>,
    ) -> Result<Self, RingError> {
        ideal.verify_two_sided(ring)?;
        let members = ideal.members.clone();
        let locate = |x: usize| {
            members
                .binary_search(&x)
                .expect("ideal is closed under the ambient operations")
        };
        Bimodule::from_actions(
            ring,
            ring,
            members.len(),
            label,
            |a, b| locate(ring.add(members[a], members[b])),
            |r, m| locate(ring.mul(r, members[m])),
            |m, s| locate(ring.mul(members[m], s)),
        )
    }

    /// Columns `D^n` as an `(M_n(D), D)`-bimodule: matrices act by
    /// matrix-vector multiplication, scalars entrywise on the right.
    pub fn matrix_column_bimodule(
        matrix: &MatrixRing,
        label: impl Into<String>,
    ) -> Result<Self, RingError> {
        let base = matrix.base().clone();
        let n = matrix.size();
        let radices = vec![base.order(); n];
        let decode = |m: usize| {
            let mut d = vec![0; n];
            crate::construct::decode_tuple(m, &radices, &mut d);
            d
        };
        Bimodule::from_actions(
            matrix.ring(),
            &base,
            base.order().pow(n as u32),
            label,
            |a, b| {
                let (da, db) = (decode(a), decode(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
                encode_tuple(&sum, &radices)
            },
            |r, m| {
                let entries = matrix.decode(r);
                let v = decode(m);
                let out: Vec<usize> = (0..n)
                    .map(|i| {
                        (0..n).fold(base.zero(), |acc, j| {
                            base.add(acc, base.mul(entries[i * n + j], v[j]))
                        })
                    })
                    .collect();
                encode_tuple(&out, &radices)
            },
            |m, s| {
                let v = decode(m);
                let out: Vec<usize> = v.iter().map(|&x| base.mul(x, s)).collect();
                encode_tuple(&out, &radices)
            },
        )
    }

    /// Columns `D^n` as a `(T_n(D), D)`-bimodule, the rightmost column of an
    /// upper triangular ring one size up.
    pub fn triangular_column_bimodule(
        upper: &UpperTriangularRing,
        label: impl Into<String>,
    ) -> Result<Self, RingError> {
        let base = upper.base().clone();
        let n = upper.size();
        let radices = vec![base.order(); n];
        let decode = |m: usize| {
            let mut d = vec![0; n];
            crate::construct::decode_tuple(m, &radices, &mut d);
            d
        };
        let positions = upper.positions().to_vec();
        Bimodule::from_actions(
            upper.ring(),
            &base,
            base.order().pow(n as u32),
            label,
            |a, b| {
                let (da, db) = (decode(a), decode(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
                encode_tuple(&sum, &radices)
            },
            |r, m| {
                let entries = upper.decode(r);
                let v = decode(m);
                let out: Vec<usize> = (0..n)
                    .map(|i| {
                        positions.iter().enumerate().fold(
                            base.zero(),
                            |acc, (slot, &(pi, pj))| {
                                if pi == i {
                                    base.add(acc, base.mul(entries[slot], v[pj]))
                                } else {
                                    acc
                                }
                            },
                        )
                    })
                    .collect();
                encode_tuple(&out, &radices)
            },
            |m, s| {
                let v = decode(m);
                let out: Vec<usize> = v.iter().map(|&x| base.mul(x, s)).collect();
                encode_tuple(&out, &radices)
            },
        )
    }
}

// ---------------------------------------------------------------------------
// formal triangular rings

struct TriOps {
    left: Arc<Ring>,
    module: Arc<Bimodule>,
    right: Arc<Ring>,
    radices: [usize; 3],
}

impl TriOps {
    #[inline]
    fn split(&self, idx: usize) -> (usize, usize, usize) {
        let s = idx % self.radices[2];
        let rest = idx / self.radices[2];
        let m = rest % self.radices[1];
        let r = rest / self.radices[1];
        (r, m, s)
    }

    #[inline]
    fn join(&self, r: usize, m: usize, s: usize) -> usize {
        (r * self.radices[1] + m) * self.radices[2] + s
    }
}

impl StructuredOps for TriOps {
    fn add(&self, a: usize, b: usize) -> usize {
        let (r1, m1, s1) = self.split(a);
        let (r2, m2, s2) = self.split(b);
        self.join(
            self.left.add(r1, r2),
            self.module.add(m1, m2),
            self.right.add(s1, s2),
        )
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let (r1, m1, s1) = self.split(a);
        let (r2, m2, s2) = self.split(b);
        self.join(
            self.left.mul(r1, r2),
            self.module
                .add(self.module.lact(r1, m2), self.module.ract(m1, s2)),
            self.right.mul(s1, s2),
        )
    }
    fn neg(&self, a: usize) -> usize {
        let (r, m, s) = self.split(a);
        self.join(self.left.neg(r), self.module.neg(m), self.right.neg(s))
    }
}

/// The formal triangular matrix ring over `(R, M, S)` with its encode/decode
/// between triples and element indices.
pub struct TriangularRing {
    ring: Arc<Ring>,
    left: Arc<Ring>,
    module: Arc<Bimodule>,
    right: Arc<Ring>,
    radices: [usize; 3],
}

impl std::fmt::Debug for TriangularRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TriangularRing")
            .field("label", &self.ring.label())
            .finish()
    }
}

pub fn build_formal_triangular(
    left: &Arc<Ring>,
    module: &Arc<Bimodule>,
    right: &Arc<Ring>,
    cfg: &BuildConfig,
) -> Result<TriangularRing, RingError> {
    if !Arc::ptr_eq(left, module.left_ring()) || !Arc::ptr_eq(right, module.right_ring()) {
        return Err(RingError::invalid(format!(
            "Tri: module {} is a ({}, {})-bimodule, not ({}, {})",
            module.label(),
            module.left_ring().label(),
            module.right_ring().label(),
            left.label(),
            right.label()
        )));
    }
    let radices = [left.order(), module.order(), right.order()];
    let order = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .ok_or_else(|| RingError::capacity("Tri: order overflows"))?;
    let label = format!(
        "Tri({},{},{})",
        left.label(),
        module.label(),
        right.label()
    );
    let ops = TriOps {
        left: left.clone(),
        module: module.clone(),
        right: right.clone(),
        radices,
    };
    let zero = ops.join(left.zero(), module.zero(), right.zero());
    let one = ops.join(left.one(), module.zero(), right.one());
    if order > cfg.structured_cap {
        return Err(RingError::capacity(format!(
            "{label}: order {order} exceeds structured budget {}",
            cfg.structured_cap
        )));
    }
    let ring = if order <= cfg.dense_cap && order <= MAX_DENSE_ORDER {
        Ring::densify(label, order, zero, one, &ops)?
    } else {
        Ring::from_structured(label, order, zero, one, Box::new(ops))?
    };
    if ring.repr_kind() == crate::ring::ReprKind::DenseTable
        && ring.order() <= cfg.exhaustive_validation_cap
    {
        ring.validate_exhaustive()?;
    } else {
        ring.validate_sampled(cfg.sample_budget, cfg.seed)?;
    }
    Ok(TriangularRing {
        ring: Arc::new(ring),
        left: left.clone(),
        module: module.clone(),
        right: right.clone(),
        radices,
    })
}

impl TriangularRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn left(&self) -> &Arc<Ring> {
        &self.left
    }

    pub fn module(&self) -> &Arc<Bimodule> {
        &self.module
    }

    pub fn right(&self) -> &Arc<Ring> {
        &self.right
    }

    pub fn encode(&self, r: usize, m: usize, s: usize) -> usize {
        (r * self.radices[1] + m) * self.radices[2] + s
    }

    pub fn decode(&self, idx: usize) -> (usize, usize, usize) {
        let s = idx % self.radices[2];
        let rest = idx / self.radices[2];
        (rest / self.radices[1], rest % self.radices[1], s)
    }
}

// ---------------------------------------------------------------------------
// partial modules

/// A module is partial when every idempotent of the acting ring kills it on
/// one side: `eM = 0` or `(1−e)M = 0`. The witness is an idempotent violating
/// that.
pub fn is_partial_module(module: &Bimodule, side: Side) -> PropertyReport {
    let method = Method::BruteForce;
    let property = match side {
        Side::Left => "partial-left-module",
        Side::Right => "partial-right-module",
    };
    let ring = match side {
        Side::Left => module.left_ring(),
        Side::Right => module.right_ring(),
    };
    let zero = module.zero();
    let kills = |e: usize| -> bool {
        (0..module.order()).all(|m| match side {
            Side::Left => module.lact(e, m) == zero,
            Side::Right => module.ract(m, e) == zero,
        })
    };
    let failing = idempotents(ring)
        .iter()
        .copied()
        .find(|&e| !kills(e) && !kills(ring.one_minus(e)));
    match failing {
        None => PropertyReport {
            property: property.into(),
            holds: true,
            witness: None,
            method,
        },
        Some(e) => PropertyReport {
            property: property.into(),
            holds: false,
            witness: Some(Witness {
                elements: vec![e],
                note: format!("idempotent {e} has eM != 0 and (1-e)M != 0"),
            }),
            method,
        },
    }
}

// ---------------------------------------------------------------------------
// regularity of triangular elements from component data

/// Decides regularity of `(a, m, b)` from idempotent ranges: searches
/// idempotents `e` with `aR = eR` and `f` with `Sb = Sf` satisfying
/// `(1−e)m(1−f) = 0`, and on success assembles the inner inverse
/// `(u, −u·m·v, v)` where `a·u = e` and `v·b = f`, verified by direct
/// multiplication. A verification failure is an inconsistency, not a result.
pub fn regular_witness_componentwise(
    tri: &TriangularRing,
    idx: usize,
) -> Result<Option<RegularityWitness>, RingError> {
    let (a, m, b) = tri.decode(idx);
    let (r_ring, s_ring, module) = (&tri.left, &tri.right, &tri.module);

    // Candidates e in aR with e·a = a (that is exactly aR = eR), remembering
    // the first u with a·u = e. Scan order follows u.
    let mut e_candidates: Vec<(usize, usize)> = Vec::new();
    let mut seen_e = vec![false; r_ring.order()];
    for u in 0..r_ring.order() {
        let e = r_ring.mul(a, u);
        if !seen_e[e] {
            seen_e[e] = true;
            if r_ring.mul(e, e) == e && r_ring.mul(e, a) == a {
                e_candidates.push((e, u));
            }
        }
    }
    let mut f_candidates: Vec<(usize, usize)> = Vec::new();
    let mut seen_f = vec![false; s_ring.order()];
    for v in 0..s_ring.order() {
        let f = s_ring.mul(v, b);
        if !seen_f[f] {
            seen_f[f] = true;
            if s_ring.mul(f, f) == f && s_ring.mul(b, f) == b {
                f_candidates.push((f, v));
            }
        }
    }

    for &(e, u) in &e_candidates {
        let ce = r_ring.one_minus(e);
        for &(f, v) in &f_candidates {
            let cf = s_ring.one_minus(f);
            if module.lact(ce, module.ract(m, cf)) != module.zero() {
                continue;
            }
            let mid = module.neg(module.lact(u, module.ract(m, v)));
            let x = tri.encode(u, mid, v);
            let ring = tri.ring();
            if ring.prod(&[idx, x, idx]) != idx {
                return Err(RingError::inconsistency(format!(
                    "componentwise inner inverse failed verification in {} at element {idx}",
                    ring.label()
                )));
            }
            let y = ring.prod(&[x, idx, x]);
            return Ok(Some(RegularityWitness {
                element: idx,
                inner_inverse: x,
                reflexive_inverse: y,
            }));
        }
    }
    Ok(None)
}

/// Closed-form inner inverse for a triple whose left component is regular and
/// whose right component is a unit: `(s, −s·m·l⁻¹, l⁻¹)` for the element
/// `(r, m, l)` with `r·s·r = r`. Absent when the precondition fails.
pub fn regular_witness_unit_corner(
    tri: &TriangularRing,
    idx: usize,
) -> Result<Option<RegularityWitness>, RingError> {
    let (r, m, l) = tri.decode(idx);
    let Some(rw) = element::regular_witness(&tri.left, r) else {
        return Ok(None);
    };
    let Some(li) = element::unit_inverse(&tri.right, l) else {
        return Ok(None);
    };
    let s = rw.inner_inverse;
    let module = &tri.module;
    let mid = module.neg(module.lact(s, module.ract(m, li)));
    let x = tri.encode(s, mid, li);
    let ring = tri.ring();
    if ring.prod(&[idx, x, idx]) != idx {
        return Err(RingError::inconsistency(format!(
            "unit-corner inner inverse failed verification in {} at element {idx}",
            ring.label()
        )));
    }
    let y = ring.prod(&[x, idx, x]);
    Ok(Some(RegularityWitness {
        element: idx,
        inner_inverse: x,
        reflexive_inverse: y,
    }))
}

// ---------------------------------------------------------------------------
// the componentwise VNL criterion

/// The three conditions deciding whether a formal triangular ring is VNL:
/// (1) one of `R`, `S` is regular and the other VNL; (2) one of the two
/// module actions is partial; (3) non-regular `r` have `(1−r)M = M` and
/// non-regular `s` have `M(1−s) = M`. All three are always evaluated so the
/// report carries complete diagnostics; the verdict is their conjunction.
pub fn vnl_criterion_componentwise(module: &Bimodule) -> PropertyReport {
    const METHOD: Method = Method::FastPath("triangular-componentwise");
    let (r_ring, s_ring) = (module.left_ring(), module.right_ring());
    let r_class = classify_ring(r_ring);
    let s_class = classify_ring(s_ring);
    let r_vnl = is_vnl_bool(r_ring);
    let s_vnl = is_vnl_bool(s_ring);
    let cond1 = (r_class.regular && s_vnl) || (s_class.regular && r_vnl);

    let left_partial = is_partial_module(module, Side::Left);
    let right_partial = is_partial_module(module, Side::Right);
    let cond2 = left_partial.holds || right_partial.holds;

    let surjective_left = |r: usize| -> bool {
        let mut hit = vec![false; module.order()];
        for m in 0..module.order() {
            hit[module.lact(r, m)] = true;
        }
        hit.iter().all(|&h| h)
    };
    let surjective_right = |s: usize| -> bool {
        let mut hit = vec![false; module.order()];
        for m in 0..module.order() {
            hit[module.ract(m, s)] = true;
        }
        hit.iter().all(|&h| h)
    };
    let cond3_left = (0..r_ring.order())
        .find(|&r| !element::is_regular(r_ring, r) && !surjective_left(r_ring.one_minus(r)));
    let cond3_right = (0..s_ring.order())
        .find(|&s| !element::is_regular(s_ring, s) && !surjective_right(s_ring.one_minus(s)));
    let cond3 = cond3_left.is_none() && cond3_right.is_none();

    let holds = cond1 && cond2 && cond3;
    let witness = if holds {
        None
    } else if !cond1 {
        Some(Witness {
            elements: vec![],
            note: format!(
                "condition 1 fails: R regular={}, R vnl={}, S regular={}, S vnl={}",
                r_class.regular, r_vnl, s_class.regular, s_vnl
            ),
        })
    } else if !cond2 {
        let mut elements = Vec::new();
        if let Some(w) = &left_partial.witness {
            elements.extend(&w.elements);
        }
        if let Some(w) = &right_partial.witness {
            elements.extend(&w.elements);
        }
        Some(Witness {
            elements,
            note: "condition 2 fails: neither action is partial".into(),
        })
    } else {
        let (el, note) = match (cond3_left, cond3_right) {
            (Some(r), _) => (r, format!("condition 3 fails: (1-{r})M != M for non-regular r={r}")),
            (_, Some(s)) => (s, format!("condition 3 fails: M(1-{s}) != M for non-regular s={s}")),
            _ => unreachable!(),
        };
        Some(Witness {
            elements: vec![el],
            note,
        })
    };
    PropertyReport {
        property: "vnl-triangular-criterion".into(),
        holds,
        witness,
        method: METHOD,
    }
}
