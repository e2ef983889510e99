//! Ring-level property deciders: VNL, NJ, exchange, potent, semipotent,
//! n-VNL, the corner-condition and maximal-regular-quotient routes to VNL,
//! and the semiperfect VNL classifier.
//!
//! Every decider has a brute-force, definition-level implementation. The fast
//! paths report their method so a disagreement with brute force is always
//! attributable; such a disagreement is an implementation bug and is raised
//! as [`RingError::Inconsistency`], never resolved silently.

use std::sync::Arc;

use serde::ser::Serializer;
use serde::Serialize;

use crate::construct::{build_corner, build_quotient, BuildConfig};
use crate::element::{self, exchange_witness, right_ideal_flags};
use crate::error::RingError;
use crate::ring::Ring;
use crate::structure::{
    self, block_members, central_idempotents, corner_is_division, corner_is_local,
    corner_is_nj, corner_is_regular, corner_jacobson, corner_members, idempotents,
    jacobson_flags, jacobson_members, primitive_decomposition,
};

/// How a property was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    FastPath(&'static str),
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Method::BruteForce => s.serialize_str("brute-force"),
            Method::FastPath(name) => s.serialize_str(name),
        }
    }
}

/// Witness for a property report: element indices plus a short note saying
/// what they witness. Negative reports always carry one, and re-evaluating
/// the defining condition on it reproduces the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub note: String,
}

impl Witness {
    fn element(a: usize, note: impl Into<String>) -> Self {
        Witness {
            elements: vec![a],
            note: note.into(),
        }
    }
}

/// Result of a ring-level property check.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl PropertyReport {
    fn positive(property: &str, method: Method) -> Self {
        PropertyReport {
            property: property.into(),
            holds: true,
            witness: None,
            method,
        }
    }

    fn negative(property: &str, method: Method, witness: Witness) -> Self {
        PropertyReport {
            property: property.into(),
            holds: false,
            witness: Some(witness),
            method,
        }
    }
}

// ---------------------------------------------------------------------------
// VNL and friends, brute force

/// Least `a` with both `a` and `1−a` non-regular, cached per ring. The scan
/// exits at the first witness instead of materializing the regularity
/// bitvector, which it consults only when some other analysis has already
/// paid for it.
pub fn vnl_witness(ring: &Ring) -> Option<usize> {
    *ring.caches.vnl_witness.get_or_init(|| {
        if let Some(flags) = ring.caches.regular.get() {
            return (0..ring.order()).find(|&a| !flags[a] && !flags[ring.one_minus(a)]);
        }
        let regular = |a: usize| (0..ring.order()).any(|x| ring.mul(ring.mul(a, x), a) == a);
        (0..ring.order()).find(|&a| !regular(a) && !regular(ring.one_minus(a)))
    })
}

pub fn is_vnl_bool(ring: &Ring) -> bool {
    vnl_witness(ring).is_none()
}

/// For every `a`, either `a` or `1−a` is regular.
pub fn is_vnl(ring: &Ring) -> PropertyReport {
    match vnl_witness(ring) {
        None => PropertyReport::positive("vnl", Method::BruteForce),
        Some(a) => PropertyReport::negative(
            "vnl",
            Method::BruteForce,
            Witness::element(a, format!("{a} and 1-{a} are both non-regular")),
        ),
    }
}

/// Arithmetic criterion for `Z_n`: VNL iff at most one prime divides `n`
/// with exponent at least 2.
pub fn zn_vnl_criterion(n: u64) -> bool {
    assert!(n >= 1, "modulus must be positive");
    let mut m = n;
    let mut repeated = 0;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut exp = 0;
            while m.is_multiple_of(p) {
                m /= p;
                exp += 1;
            }
            if exp >= 2 {
                repeated += 1;
            }
        }
        p += 1;
    }
    // leftover m > 1 is a prime with exponent 1
    repeated <= 1
}

/// Every element outside the radical is regular.
pub fn is_nj(ring: &Ring) -> PropertyReport {
    let jac = jacobson_flags(ring);
    match (0..ring.order()).find(|&a| !jac[a] && !element::is_regular(ring, a)) {
        None => PropertyReport::positive("nj", Method::BruteForce),
        Some(a) => PropertyReport::negative(
            "nj",
            Method::BruteForce,
            Witness::element(a, format!("{a} is outside the radical and non-regular")),
        ),
    }
}

/// Every element has an exchange idempotent.
pub fn is_exchange_ring(ring: &Ring) -> PropertyReport {
    match (0..ring.order()).find(|&a| exchange_witness(ring, a).is_none()) {
        None => PropertyReport::positive("exchange", Method::BruteForce),
        Some(a) => PropertyReport::negative(
            "exchange",
            Method::BruteForce,
            Witness::element(a, format!("no idempotent e in {a}R with 1-e in (1-{a})R")),
        ),
    }
}

/// Every right ideal not inside the radical contains a nonzero idempotent,
/// decided through principal ideals: it is enough that `aR` contains a
/// nonzero idempotent for every `a` outside the radical.
pub fn is_semipotent(ring: &Ring) -> PropertyReport {
    let jac = jacobson_flags(ring);
    let idems = idempotents(ring);
    let zero = ring.zero();
    let failing = (0..ring.order()).find(|&a| {
        if jac[a] {
            return false;
        }
        let ar = right_ideal_flags(ring, a);
        !idems.iter().any(|&e| e != zero && ar[e])
    });
    match failing {
        None => PropertyReport::positive("semipotent", Method::BruteForce),
        Some(a) => PropertyReport::negative(
            "semipotent",
            Method::BruteForce,
            Witness::element(a, format!("{a}R contains no nonzero idempotent")),
        ),
    }
}

/// Semipotent plus idempotent lifting: whenever `a² − a` lies in the radical
/// there is an idempotent `e` with `e − a` in the radical.
pub fn is_potent(ring: &Ring) -> PropertyReport {
    let semi = is_semipotent(ring);
    if !semi.holds {
        return PropertyReport {
            property: "potent".into(),
            ..semi
        };
    }
    let jac = jacobson_flags(ring);
    let idems = idempotents(ring);
    let failing = (0..ring.order()).find(|&a| {
        jac[ring.sub(ring.mul(a, a), a)] && !idems.iter().any(|&e| jac[ring.sub(e, a)])
    });
    match failing {
        None => PropertyReport::positive("potent", Method::BruteForce),
        Some(a) => PropertyReport::negative(
            "potent",
            Method::BruteForce,
            Witness::element(a, format!("{a} is idempotent mod the radical but does not lift")),
        ),
    }
}

// ---------------------------------------------------------------------------
// n-VNL

/// Largest ring order scanned for each tuple length.
pub fn n_vnl_order_cap(n: usize) -> usize {
    match n {
        0 | 1 => 4096,
        2 | 3 => 64,
        _ => 16,
    }
}

/// Whenever `a_1R + ... + a_nR = R`, some `a_i` is regular. Tuples containing
/// a regular entry satisfy the condition vacuously and are skipped, so the
/// scan runs over non-regular tuples only, with partial sums shared across
/// the nesting.
pub fn is_n_vnl(ring: &Ring, n: usize) -> Result<PropertyReport, RingError> {
    if n == 0 {
        return Err(RingError::invalid("n-VNL: n must be >= 1"));
    }
    let cap = n_vnl_order_cap(n);
    if ring.order() > cap {
        return Err(RingError::capacity(format!(
            "{n}-VNL scan capped at order {cap}, ring {} has order {}",
            ring.label(),
            ring.order()
        )));
    }
    let property = format!("{n}-vnl");
    let non_regular: Vec<usize> =
        (0..ring.order()).filter(|&a| !element::is_regular(ring, a)).collect();
    let ideals: Vec<Vec<bool>> = non_regular
        .iter()
        .map(|&a| right_ideal_flags(ring, a))
        .collect();
    let mut start = vec![false; ring.order()];
    start[ring.zero()] = true;
    let mut tuple = Vec::with_capacity(n);
    let witness = scan_tuples(ring, &non_regular, &ideals, &start, n, &mut tuple);
    Ok(match witness {
        None => PropertyReport::positive(&property, Method::BruteForce),
        Some(tuple) => PropertyReport::negative(
            &property,
            Method::BruteForce,
            Witness {
                note: format!("unimodular row {tuple:?} with every entry non-regular"),
                elements: tuple,
            },
        ),
    })
}

fn scan_tuples(
    ring: &Ring,
    non_regular: &[usize],
    ideals: &[Vec<bool>],
    partial: &[bool],
    remaining: usize,
    tuple: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if remaining == 0 {
        if partial.iter().all(|&f| f) {
            return Some(tuple.clone());
        }
        return None;
    }
    for (i, &a) in non_regular.iter().enumerate() {
        let sum = sumset(ring, partial, &ideals[i]);
        tuple.push(a);
        let hit = scan_tuples(ring, non_regular, ideals, &sum, remaining - 1, tuple);
        tuple.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Sum of two additive subgroups, `{x + y}` over the flagged sets.
fn sumset(ring: &Ring, a: &[bool], b: &[bool]) -> Vec<bool> {
    let mut out = vec![false; ring.order()];
    let xs: Vec<usize> = element::flags_to_vec(a);
    let ys: Vec<usize> = element::flags_to_vec(b);
    for &x in &xs {
        for &y in &ys {
            out[ring.add(x, y)] = true;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// fast paths to VNL

/// Exchange ring in which, for every idempotent, one of the complementary
/// corners is regular. Agrees with VNL exactly on abelian rings.
pub fn vnl_via_corner_condition(ring: &Ring) -> PropertyReport {
    const METHOD: Method = Method::FastPath("exchange+corner-condition");
    let exchange = is_exchange_ring(ring);
    if !exchange.holds {
        return PropertyReport {
            property: "vnl-corner-condition".into(),
            holds: false,
            witness: exchange.witness,
            method: METHOD,
        };
    }
    let failing = idempotents(ring)
        .iter()
        .copied()
        .find(|&e| !corner_is_regular(ring, e) && !corner_is_regular(ring, ring.one_minus(e)));
    match failing {
        None => PropertyReport::positive("vnl-corner-condition", METHOD),
        Some(e) => PropertyReport::negative(
            "vnl-corner-condition",
            METHOD,
            Witness::element(e, format!("neither {e}R{e} nor its complement corner is regular")),
        ),
    }
}

/// `R/M(R)` is a local ring, `M(R)` the maximal regular ideal. Agrees with
/// VNL exactly on abelian rings. The zero quotient (R itself regular) counts
/// as local.
pub fn vnl_via_mr_local(ring: &Arc<Ring>, cfg: &BuildConfig) -> Result<PropertyReport, RingError> {
    const METHOD: Method = Method::FastPath("max-regular-quotient-local");
    let mr = structure::maximal_regular_ideal(ring)?;
    let quotient = build_quotient(ring, &mr, cfg)?;
    let class = structure::classify_ring(quotient.ring());
    Ok(if class.local {
        PropertyReport::positive("vnl-mr-local", METHOD)
    } else {
        PropertyReport::negative(
            "vnl-mr-local",
            METHOD,
            Witness {
                elements: mr.members.clone(),
                note: format!(
                    "quotient by the maximal regular ideal (order {}) is not local",
                    mr.order()
                ),
            },
        )
    })
}

// ---------------------------------------------------------------------------
// semiperfect VNL classification

/// Peirce data for a corner split at `f`: `S = fRf`, `L = (1−f)R(1−f)`,
/// `X = fR(1−f)`, `Y = (1−f)Rf`.
#[derive(Debug, Clone, Serialize)]
pub struct CornerSplit {
    pub split_idempotent: usize,
    pub corner_order: usize,
    pub complement_order: usize,
    pub x_order: usize,
    pub y_order: usize,
    pub xy_zero: bool,
    pub yx_zero: bool,
}

impl CornerSplit {
    fn at(ring: &Ring, f: usize) -> Self {
        let g = ring.one_minus(f);
        let x = block_members(ring, f, g);
        let y = block_members(ring, g, f);
        let zero = ring.zero();
        let xy_zero = x.iter().all(|&a| y.iter().all(|&b| ring.mul(a, b) == zero));
        let yx_zero = y.iter().all(|&b| x.iter().all(|&a| ring.mul(b, a) == zero));
        CornerSplit {
            split_idempotent: f,
            corner_order: corner_members(ring, f).len(),
            complement_order: corner_members(ring, g).len(),
            x_order: x.len(),
            y_order: y.len(),
            xy_zero,
            yx_zero,
        }
    }
}

/// Shape of a (finite, hence semiperfect) VNL ring: semisimple, a semisimple
/// corner over a local one with `XY = 0`, a two-primitive NJ corner over a
/// division one with `YX = 0`, or a product of a semisimple ring with one of
/// those.
#[derive(Debug, Clone, Serialize)]
pub enum SemiperfectVnlClass {
    NotVnl {
        witness: usize,
    },
    Semisimple,
    TypeR1(CornerSplit),
    TypeR2(CornerSplit),
    ProductWithSemisimple {
        central_idempotent: usize,
        semisimple_order: usize,
        rest_label: String,
        rest: Box<SemiperfectVnlClass>,
    },
}

impl SemiperfectVnlClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SemiperfectVnlClass::NotVnl { .. } => "NotVNL",
            SemiperfectVnlClass::Semisimple => "Semisimple",
            SemiperfectVnlClass::TypeR1(_) => "TypeR1",
            SemiperfectVnlClass::TypeR2(_) => "TypeR2",
            SemiperfectVnlClass::ProductWithSemisimple { .. } => "ProductWithSemisimple",
        }
    }

    /// Re-checks every claim of the classification inside the ring.
    pub fn verify(&self, ring: &Arc<Ring>, cfg: &BuildConfig) -> Result<(), RingError> {
        let fail = |msg: String| Err(RingError::inconsistency(msg));
        match self {
            SemiperfectVnlClass::NotVnl { witness } => {
                let a = *witness;
                if element::is_regular(ring, a) || element::is_regular(ring, ring.one_minus(a)) {
                    return fail(format!("NotVNL witness {a} does not re-check"));
                }
                Ok(())
            }
            SemiperfectVnlClass::Semisimple => {
                if jacobson_members(ring).len() != 1 {
                    return fail(format!("{} claimed semisimple but has a radical", ring.label()));
                }
                Ok(())
            }
            SemiperfectVnlClass::TypeR1(split) => {
                let f = split.split_idempotent;
                let g = ring.one_minus(f);
                let fresh = CornerSplit::at(ring, f);
                if fresh.corner_order != split.corner_order
                    || fresh.x_order != split.x_order
                    || fresh.y_order != split.y_order
                {
                    return fail("TypeR1 split data does not re-check".into());
                }
                if ring.mul(f, f) != f
                    || corner_jacobson(ring, f) != vec![ring.zero()]
                    || !corner_is_regular(ring, f)
                    || !corner_is_local(ring, g)
                    || !fresh.xy_zero
                {
                    return fail(format!(
                        "TypeR1 shape does not verify in {} at idempotent {f}",
                        ring.label()
                    ));
                }
                Ok(())
            }
            SemiperfectVnlClass::TypeR2(split) => {
                let f = split.split_idempotent;
                let g = ring.one_minus(f);
                let fresh = CornerSplit::at(ring, f);
                if fresh.corner_order != split.corner_order
                    || fresh.x_order != split.x_order
                    || fresh.y_order != split.y_order
                {
                    return fail("TypeR2 split data does not re-check".into());
                }
                let corner_has_proper_idem = corner_members(ring, f)
                    .iter()
                    .any(|&x| x != ring.zero() && x != f && ring.mul(x, x) == x);
                if ring.mul(f, f) != f
                    || !corner_is_nj(ring, f)
                    || !corner_has_proper_idem
                    || !corner_is_division(ring, g)
                    || !fresh.yx_zero
                {
                    return fail(format!(
                        "TypeR2 shape does not verify in {} at idempotent {f}",
                        ring.label()
                    ));
                }
                Ok(())
            }
            SemiperfectVnlClass::ProductWithSemisimple {
                central_idempotent,
                semisimple_order,
                rest,
                ..
            } => {
                let c = *central_idempotent;
                if ring.mul(c, c) != c || !structure::is_central(ring, c) {
                    return fail(format!("{c} is not a central idempotent"));
                }
                if c == ring.zero() || c == ring.one() {
                    return fail("product split must be nontrivial".into());
                }
                if corner_jacobson(ring, c) != vec![ring.zero()] {
                    return fail("claimed semisimple factor has a radical".into());
                }
                if corner_members(ring, c).len() != *semisimple_order {
                    return fail("semisimple factor order does not re-check".into());
                }
                let complement = build_corner(ring, ring.one_minus(c), cfg)?;
                rest.verify(complement.ring(), cfg)
            }
        }
    }
}

/// Classifies a finite VNL ring by splitting off the maximal semisimple
/// central factor and then locating a verifying corner split on the rest.
/// A VNL ring for which no shape verifies is reported as an inconsistency:
/// that outcome would falsify the classification on the instance and must
/// surface, never be swallowed.
pub fn classify_semiperfect_vnl(
    ring: &Arc<Ring>,
    cfg: &BuildConfig,
) -> Result<SemiperfectVnlClass, RingError> {
    let class = classify_inner(ring, cfg)?;
    class.verify(ring, cfg)?;
    Ok(class)
}

fn classify_inner(
    ring: &Arc<Ring>,
    cfg: &BuildConfig,
) -> Result<SemiperfectVnlClass, RingError> {
    if let Some(witness) = vnl_witness(ring) {
        return Ok(SemiperfectVnlClass::NotVnl { witness });
    }
    if jacobson_members(ring).len() == 1 {
        return Ok(SemiperfectVnlClass::Semisimple);
    }

    // Maximal semisimple central factor: the sum of the block idempotents
    // whose corner has zero radical.
    let atoms = block_atoms(ring);
    let ss_sum = atoms
        .iter()
        .copied()
        .filter(|&c| corner_jacobson(ring, c) == vec![ring.zero()])
        .fold(ring.zero(), |acc, c| ring.add(acc, c));
    if ss_sum != ring.zero() {
        let complement_idem = ring.one_minus(ss_sum);
        let complement = build_corner(ring, complement_idem, cfg)?;
        let rest = classify_inner(complement.ring(), cfg)?;
        return Ok(SemiperfectVnlClass::ProductWithSemisimple {
            central_idempotent: ss_sum,
            semisimple_order: corner_members(ring, ss_sum).len(),
            rest_label: complement.ring().label().to_string(),
            rest: Box::new(rest),
        });
    }

    // No semisimple factor splits off: locate a corner split over the
    // primitive decomposition, small corner last.
    let decomp = primitive_decomposition(ring);
    for &g in &decomp.idempotents {
        let f = ring.one_minus(g);
        let split = CornerSplit::at(ring, f);
        if corner_jacobson(ring, f) == vec![ring.zero()]
            && corner_is_regular(ring, f)
            && corner_is_local(ring, g)
            && split.xy_zero
        {
            return Ok(SemiperfectVnlClass::TypeR1(split));
        }
    }
    if decomp.len() == 3 {
        for &g in &decomp.idempotents {
            let f = ring.one_minus(g);
            let split = CornerSplit::at(ring, f);
            let corner_has_proper_idem = corner_members(ring, f)
                .iter()
                .any(|&x| x != ring.zero() && x != f && ring.mul(x, x) == x);
            if corner_is_nj(ring, f)
                && corner_has_proper_idem
                && corner_is_division(ring, g)
                && split.yx_zero
            {
                return Ok(SemiperfectVnlClass::TypeR2(split));
            }
        }
    }
    Err(RingError::inconsistency(format!(
        "{} is VNL but no semiperfect classification shape verifies",
        ring.label()
    )))
}

/// Primitive central idempotents (block idempotents): minimal nonzero central
/// idempotents under `c <= d  iff  cd = c`.
pub fn block_atoms(ring: &Ring) -> Vec<usize> {
    let central = central_idempotents(ring);
    central
        .iter()
        .copied()
        .filter(|&c| c != ring.zero())
        .filter(|&c| {
            !central
                .iter()
                .any(|&d| d != ring.zero() && d != c && ring.mul(d, c) == d)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// the NJ equivalence conditions

/// Hypotheses and conclusion of the equivalence of VNL, exchange, potent,
/// semipotent and NJ on rings with no nontrivial central idempotent, nonzero
/// radical, and radical-free proper corners.
#[derive(Debug, Clone, Serialize)]
pub struct NjEquivalenceReport {
    pub applicable: bool,
    pub conclusion_checked: bool,
    /// (property, holds) for vnl, exchange, potent, semipotent, nj.
    pub flags: Vec<(String, bool)>,
}

pub fn nj_equivalence_conditions(ring: &Ring) -> NjEquivalenceReport {
    let class = structure::classify_ring(ring);
    let radical_nonzero = jacobson_members(ring).len() > 1;
    let proper_corners_radical_free = idempotents(ring)
        .iter()
        .filter(|&&e| e != ring.zero() && e != ring.one())
        .all(|&e| corner_jacobson(ring, e) == vec![ring.zero()]);
    let applicable =
        !class.has_nontrivial_central_idempotent && radical_nonzero && proper_corners_radical_free;
    let flags = vec![
        ("vnl".to_string(), is_vnl(ring).holds),
        ("exchange".to_string(), is_exchange_ring(ring).holds),
        ("potent".to_string(), is_potent(ring).holds),
        ("semipotent".to_string(), is_semipotent(ring).holds),
        ("nj".to_string(), is_nj(ring).holds),
    ];
    let conclusion_checked = flags.windows(2).all(|w| w[0].1 == w[1].1);
    NjEquivalenceReport {
        applicable,
        conclusion_checked,
        flags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        build_cyclic, build_field, build_matrix_ring, build_product, build_upper_triangular,
        BuildConfig,
    };

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zn(n: usize) -> Arc<Ring> {
        build_cyclic(n, &cfg()).unwrap()
    }

    fn gf(p: u64) -> Arc<Ring> {
        build_field(p, 1, &[0, 1], &cfg()).unwrap().ring().clone()
    }

    fn t_n(n: usize, p: u64) -> Arc<Ring> {
        build_upper_triangular(n, &gf(p), &cfg()).unwrap().ring().clone()
    }

    /// Small assortment of rings used by the invariant sweeps below.
    fn mini_corpus() -> Vec<Arc<Ring>> {
        let mut rings: Vec<Arc<Ring>> = (1..=20).map(zn).collect();
        rings.push(zn(36));
        rings.push(gf(3));
        rings.push(build_field(2, 2, &[1, 1, 1], &cfg()).unwrap().ring().clone());
        rings.push(t_n(2, 2));
        rings.push(t_n(3, 2));
        rings.push(build_matrix_ring(2, &gf(2), &cfg()).unwrap().ring().clone());
        rings.push(build_product(&[zn(4), gf(3)], &cfg()).unwrap().ring().clone());
        rings.push(build_product(&[t_n(2, 2), gf(2)], &cfg()).unwrap().ring().clone());
        rings
    }

    #[test]
    fn vnl_examples() {
        assert!(is_vnl(&zn(12)).holds);
        assert!(is_vnl(&zn(4)).holds);
        let report = is_vnl(&zn(36));
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let a = w.elements[0];
        let z36 = zn(36);
        assert!(!element::is_regular(&z36, a));
        assert!(!element::is_regular(&z36, z36.one_minus(a)));
    }

    #[test]
    fn zn_criterion_agrees_with_brute_force() {
        assert!(zn_vnl_criterion(12));
        assert!(!zn_vnl_criterion(36));
        assert!(zn_vnl_criterion(1));
        for n in 1..=60 {
            assert_eq!(
                zn_vnl_criterion(n as u64),
                is_vnl(&zn(n)).holds,
                "disagreement at n = {n}"
            );
        }
    }

    #[test]
    fn nj_examples() {
        assert!(is_nj(&t_n(2, 2)).holds);
        assert!(is_nj(&zn(4)).holds);
        let report = is_nj(&t_n(3, 2));
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let t3 = t_n(3, 2);
        let a = w.elements[0];
        assert!(!element::is_regular(&t3, a));
        assert!(!jacobson_flags(&t3)[a]);
    }

    #[test]
    fn exchange_potent_semipotent_examples() {
        assert!(is_exchange_ring(&zn(12)).holds);
        assert!(is_exchange_ring(&build_matrix_ring(2, &gf(2), &cfg()).unwrap().ring().clone()).holds);
        assert!(is_exchange_ring(&zn(1)).holds);

        assert!(is_semipotent(&zn(12)).holds);
        assert!(is_semipotent(&zn(4)).holds);
        assert!(is_semipotent(&t_n(3, 2)).holds);

        assert!(is_potent(&zn(4)).holds);
        assert!(is_potent(&build_matrix_ring(2, &gf(2), &cfg()).unwrap().ring().clone()).holds);
        // potent but not VNL
        assert!(is_potent(&zn(36)).holds);
        assert!(!is_vnl(&zn(36)).holds);
    }

    #[test]
    fn n_vnl_examples() {
        let t3 = t_n(3, 2);
        assert!(is_n_vnl(&t3, 1).unwrap().holds);
        assert!(is_n_vnl(&t3, 2).unwrap().holds);
        let report = is_n_vnl(&t3, 3).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_eq!(w.elements.len(), 3);
        assert!(element::is_unimodular_row(&t3, &w.elements).unwrap());
        for &a in &w.elements {
            assert!(!element::is_regular(&t3, a));
        }

        assert!(is_n_vnl(&zn(12), 2).unwrap().holds);
        assert!(matches!(
            is_n_vnl(&zn(72), 2),
            Err(RingError::Capacity(_))
        ));
        assert!(is_n_vnl(&zn(12), 0).is_err());
    }

    #[test]
    fn corner_condition_examples() {
        assert!(vnl_via_corner_condition(&zn(12)).holds);
        assert!(vnl_via_corner_condition(&zn(4)).holds);
        let report = vnl_via_corner_condition(&zn(36));
        assert!(!report.holds);
        // the witness idempotent has both corners non-regular
        let e = report.witness.unwrap().elements[0];
        let z36 = zn(36);
        assert!(structure::idempotents(&z36).contains(&e));
        assert!(!structure::corner_is_regular(&z36, e));
        assert!(!structure::corner_is_regular(&z36, z36.one_minus(e)));
    }

    #[test]
    fn mr_local_examples() {
        assert!(vnl_via_mr_local(&zn(12), &cfg()).unwrap().holds);
        assert!(!vnl_via_mr_local(&zn(36), &cfg()).unwrap().holds);
        // regular rings quotient to the zero ring, which counts as local
        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        assert!(vnl_via_mr_local(m2.ring(), &cfg()).unwrap().holds);
    }

    #[test]
    fn classifier_pinned_outputs() {
        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let class = classify_semiperfect_vnl(m2.ring(), &cfg()).unwrap();
        assert_eq!(class.tag(), "Semisimple");

        let t2 = t_n(2, 2);
        match classify_semiperfect_vnl(&t2, &cfg()).unwrap() {
            SemiperfectVnlClass::TypeR1(split) => {
                assert_eq!(split.corner_order, 2); // S = F_2
                assert_eq!(split.complement_order, 2); // L = F_2
                assert_eq!(split.x_order, 2); // X has order 2
                assert_eq!(split.y_order, 1); // Y = 0
                assert!(split.xy_zero);
            }
            other => panic!("T_2(F_2) should be TypeR1, got {}", other.tag()),
        }

        let t3 = t_n(3, 2);
        match classify_semiperfect_vnl(&t3, &cfg()).unwrap() {
            SemiperfectVnlClass::TypeR2(split) => {
                assert_eq!(split.corner_order, 8); // T = T_2(F_2)
                assert_eq!(split.complement_order, 2); // D = F_2
                assert_eq!(split.y_order, 1); // Y = 0
                assert!(split.yx_zero);
            }
            other => panic!("T_3(F_2) should be TypeR2, got {}", other.tag()),
        }

        match classify_semiperfect_vnl(&zn(12), &cfg()).unwrap() {
            SemiperfectVnlClass::ProductWithSemisimple {
                semisimple_order,
                rest,
                ..
            } => {
                assert_eq!(semisimple_order, 3); // the Z_3 block
                assert_eq!(rest.tag(), "TypeR1"); // the local Z_4 block
            }
            other => panic!("Z_12 should split, got {}", other.tag()),
        }

        assert_eq!(classify_semiperfect_vnl(&zn(4), &cfg()).unwrap().tag(), "TypeR1");
        assert_eq!(classify_semiperfect_vnl(&zn(1), &cfg()).unwrap().tag(), "Semisimple");
        assert_eq!(
            classify_semiperfect_vnl(&zn(36), &cfg()).unwrap().tag(),
            "NotVNL"
        );
    }

    #[test]
    fn classifier_never_inconsistent_on_mini_corpus() {
        for ring in mini_corpus() {
            let class = classify_semiperfect_vnl(&ring, &cfg()).unwrap();
            if is_vnl(&ring).holds {
                assert_ne!(class.tag(), "NotVNL", "{}", ring.label());
            } else {
                assert_eq!(class.tag(), "NotVNL", "{}", ring.label());
            }
        }
    }

    #[test]
    fn nj_equivalence_examples() {
        let report = nj_equivalence_conditions(&t_n(2, 2));
        assert!(report.applicable);
        assert!(report.conclusion_checked);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        assert!(!nj_equivalence_conditions(m2.ring()).applicable); // J = 0

        let z4 = nj_equivalence_conditions(&zn(4));
        assert!(z4.applicable); // no proper idempotents, J != 0
        assert!(z4.conclusion_checked);
    }

    #[test]
    fn implication_chain_on_mini_corpus() {
        for ring in mini_corpus() {
            let nj = is_nj(&ring).holds;
            let vnl = is_vnl(&ring).holds;
            let exchange = is_exchange_ring(&ring).holds;
            let potent = is_potent(&ring).holds;
            let semipotent = is_semipotent(&ring).holds;
            assert!(!nj || vnl, "NJ => VNL fails on {}", ring.label());
            assert!(!vnl || exchange, "VNL => exchange fails on {}", ring.label());
            assert!(!exchange || potent, "exchange => potent fails on {}", ring.label());
            assert!(!potent || semipotent, "potent => semipotent fails on {}", ring.label());
            // finite rings are exchange, potent and semipotent
            assert!(exchange && potent && semipotent, "{}", ring.label());
        }
        // strictness witnesses
        assert!(is_potent(&zn(36)).holds && !is_vnl(&zn(36)).holds);
        assert!(is_vnl(&t_n(3, 2)).holds && !is_nj(&t_n(3, 2)).holds);
    }

    #[test]
    fn mccoy_lemma_on_mini_corpus() {
        // if a - a*x*a is regular then a is regular
        for ring in mini_corpus() {
            if ring.order() > 64 {
                continue;
            }
            for a in 0..ring.order() {
                for x in 0..ring.order() {
                    let d = ring.sub(a, ring.prod(&[a, x, a]));
                    if element::is_regular(&ring, d) {
                        assert!(
                            element::is_regular(&ring, a),
                            "McCoy fails in {} at a={a}, x={x}",
                            ring.label()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn units_and_idempotents_are_regular() {
        for ring in mini_corpus() {
            for a in 0..ring.order() {
                if element::is_unit(&ring, a) {
                    assert!(element::is_regular(&ring, a));
                }
            }
            for &e in structure::idempotents(&ring) {
                let w = element::regular_witness(&ring, e).unwrap();
                assert!(w.verify(&ring));
                assert_eq!(ring.prod(&[e, e, e]), e); // e is its own inner inverse
            }
        }
    }

    #[test]
    fn exchange_witness_exists_everywhere_on_mini_corpus() {
        for ring in mini_corpus() {
            for a in 0..ring.order() {
                let w = element::exchange_witness(&ring, a);
                assert!(w.is_some(), "no exchange witness in {} at {a}", ring.label());
                assert!(w.unwrap().verify(&ring));
            }
        }
    }
}
