//! Ring-level structure invariants: Jacobson radical, idempotent census,
//! classification flags, two-sided ideals, the maximal regular ideal, primitive
//! decompositions, projective isomorphism and Peirce corner data.

use serde::Serialize;

use crate::element::{self, flags_to_vec};
use crate::error::RingError;
use crate::ring::Ring;

// ---------------------------------------------------------------------------
// ideals

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

/// A subset of a ring's elements tagged with its sidedness. Construction
/// verifies the closure properties exhaustively and reports the failing
/// instance otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIdeal {
    /// Sorted ascending; always contains the ring's zero.
    pub members: Vec<usize>,
    pub sidedness: Sidedness,
    pub label: String,
}

impl SubsetIdeal {
    /// Wraps a member set as a two-sided ideal after verifying closure.
    pub fn two_sided(
        ring: &Ring,
        mut members: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<Self, RingError> {
        members.sort_unstable();
        members.dedup();
        let ideal = SubsetIdeal {
            members,
            sidedness: Sidedness::TwoSided,
            label: label.into(),
        };
        ideal.verify_two_sided(ring)?;
        Ok(ideal)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn member_flags(&self, ring: &Ring) -> Vec<bool> {
        let mut flags = vec![false; ring.order()];
        for &m in &self.members {
            flags[m] = true;
        }
        flags
    }

    /// Exhaustive closure check: zero, addition, negation, and two-sided
    /// absorption. Errors carry the failing instance.
    pub fn verify_two_sided(&self, ring: &Ring) -> Result<(), RingError> {
        if self.sidedness != Sidedness::TwoSided {
            return Err(RingError::invalid(format!(
                "ideal {}: expected two-sided, got {:?}",
                self.label, self.sidedness
            )));
        }
        if let Some(&bad) = self.members.iter().find(|&&m| m >= ring.order()) {
            return Err(RingError::invalid(format!(
                "ideal {}: member {bad} out of range",
                self.label
            )));
        }
        if !self.contains(ring.zero()) {
            return Err(RingError::invalid(format!(
                "ideal {}: does not contain zero",
                self.label
            )));
        }
        for &a in &self.members {
            if !self.contains(ring.neg(a)) {
                return Err(RingError::invalid(format!(
                    "ideal {}: not closed under negation at {a}",
                    self.label
                )));
            }
            for &b in &self.members {
                if !self.contains(ring.add(a, b)) {
                    return Err(RingError::invalid(format!(
                        "ideal {}: not closed under addition at ({a},{b})",
                        self.label
                    )));
                }
            }
            for r in 0..ring.order() {
                if !self.contains(ring.mul(r, a)) {
                    return Err(RingError::invalid(format!(
                        "ideal {}: not absorbing on the left at ({r},{a})",
                        self.label
                    )));
                }
                if !self.contains(ring.mul(a, r)) {
                    return Err(RingError::invalid(format!(
                        "ideal {}: not absorbing on the right at ({a},{r})",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Additive closure of an arbitrary subset, as a flag vector.
pub(crate) fn additive_closure(ring: &Ring, seed: &[usize]) -> Vec<bool> {
    let mut flags = vec![false; ring.order()];
    flags[ring.zero()] = true;
    let mut work: Vec<usize> = Vec::new();
    for &s in seed {
        if !flags[s] {
            flags[s] = true;
            work.push(s);
        }
    }
    let mut i = 0;
    while i < work.len() {
        let x = work[i];
        i += 1;
        let current: Vec<usize> = flags_to_vec(&flags);
        for y in current {
            let z = ring.add(x, y);
            if !flags[z] {
                flags[z] = true;
                work.push(z);
            }
        }
    }
    flags
}

/// Smallest two-sided ideal containing every generator: the additive closure
/// of `{r·g·s}` over all generators `g`.
pub fn ideal_generated_by(ring: &Ring, generators: &[usize]) -> SubsetIdeal {
    let n = ring.order();
    let mut products = vec![false; n];
    products[ring.zero()] = true;
    for &g in generators {
        // {r·(g·s)} with the inner set deduplicated first
        let mut right = vec![false; n];
        for s in 0..n {
            right[ring.mul(g, s)] = true;
        }
        for b in flags_to_vec(&right) {
            for r in 0..n {
                products[ring.mul(r, b)] = true;
            }
        }
    }
    let members = flags_to_vec(&additive_closure(ring, &flags_to_vec(&products)));
    let label = if generators.is_empty() {
        "gen".to_string()
    } else {
        format!(
            "gen{}",
            generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join("_")
        )
    };
    SubsetIdeal {
        members,
        sidedness: Sidedness::TwoSided,
        label,
    }
}

pub fn ideal_generated(ring: &Ring, a: usize) -> SubsetIdeal {
    ideal_generated_by(ring, &[a])
}

/// True iff every member has an inner inverse in the ambient ring. For a
/// two-sided ideal this is equivalent to the ideal being regular as a ring:
/// if `a·x·a = a` then `x·a·x` is an inner inverse inside the ideal.
pub fn is_regular_ideal(ring: &Ring, ideal: &SubsetIdeal) -> bool {
    ideal.members.iter().all(|&a| element::is_regular(ring, a))
}

// ---------------------------------------------------------------------------
// Jacobson radical

/// The set of `a` such that `1 − r·a` is invertible for every `r`, verified
/// two-sided. Quasi-regularity avoids enumerating maximal ideals.
pub fn jacobson_radical(ring: &Ring) -> SubsetIdeal {
    let members = jacobson_members(ring).to_vec();
    let ideal = SubsetIdeal {
        members,
        sidedness: Sidedness::TwoSided,
        label: "jac".into(),
    };
    ideal
        .verify_two_sided(ring)
        .expect("quasi-regular elements must form a two-sided ideal");
    ideal
}

/// Members of the radical, cached per ring.
pub fn jacobson_members(ring: &Ring) -> &[usize] {
    ring.caches.jacobson.get_or_init(|| {
        let n = ring.order();
        let units = element::unit_flags(ring);
        (0..n)
            .filter(|&a| (0..n).all(|r| units[ring.one_minus(ring.mul(r, a))]))
            .collect()
    })
}

pub fn jacobson_flags(ring: &Ring) -> Vec<bool> {
    let mut flags = vec![false; ring.order()];
    for &a in jacobson_members(ring) {
        flags[a] = true;
    }
    flags
}

// ---------------------------------------------------------------------------
// idempotents

/// All idempotents, ascending.
pub fn idempotents(ring: &Ring) -> &[usize] {
    ring.caches
        .idempotents
        .get_or_init(|| (0..ring.order()).filter(|&e| ring.mul(e, e) == e).collect())
}

pub fn is_central(ring: &Ring, e: usize) -> bool {
    (0..ring.order()).all(|r| ring.mul(e, r) == ring.mul(r, e))
}

pub fn central_idempotents(ring: &Ring) -> Vec<usize> {
    idempotents(ring)
        .iter()
        .copied()
        .filter(|&e| is_central(ring, e))
        .collect()
}

/// `e` is primitive iff it is nonzero and `eRe` has no idempotents besides
/// `0` and `e`.
pub fn is_primitive_idempotent(ring: &Ring, e: usize) -> bool {
    if e == ring.zero() {
        return false;
    }
    corner_members(ring, e)
        .iter()
        .filter(|&&x| ring.mul(x, x) == x)
        .count()
        == 2
}

/// Census of all idempotents with centrality, primitivity and locality flags.
#[derive(Debug, Clone, Serialize)]
pub struct IdempotentCensus {
    pub all: Vec<usize>,
    pub central: Vec<usize>,
    pub primitive: Vec<usize>,
    /// `e` with `eRe` a local ring.
    pub local: Vec<usize>,
}

pub fn idempotent_census(ring: &Ring) -> &IdempotentCensus {
    ring.caches.census.get_or_init(|| {
        let all = idempotents(ring).to_vec();
        let central = all
            .iter()
            .copied()
            .filter(|&e| is_central(ring, e))
            .collect();
        let primitive = all
            .iter()
            .copied()
            .filter(|&e| is_primitive_idempotent(ring, e))
            .collect();
        let local = all
            .iter()
            .copied()
            .filter(|&e| corner_is_local(ring, e))
            .collect();
        IdempotentCensus {
            all,
            central,
            primitive,
            local,
        }
    })
}

// ---------------------------------------------------------------------------
// corner rings eRe, analyzed in place

/// The members of `eRe = {e·r·e}`, ascending.
pub fn corner_members(ring: &Ring, e: usize) -> Vec<usize> {
    let mut flags = vec![false; ring.order()];
    for r in 0..ring.order() {
        flags[ring.prod(&[e, r, e])] = true;
    }
    flags_to_vec(&flags)
}

/// The block `eRf = {e·r·f}`, ascending. `e` and `f` need not be equal.
pub fn block_members(ring: &Ring, e: usize, f: usize) -> Vec<usize> {
    let mut flags = vec![false; ring.order()];
    for r in 0..ring.order() {
        flags[ring.prod(&[e, r, f])] = true;
    }
    flags_to_vec(&flags)
}

/// Units of the corner `eRe` with respect to its identity `e`, as flags
/// aligned with `members`.
fn corner_unit_flags(ring: &Ring, e: usize, members: &[usize]) -> Vec<bool> {
    members
        .iter()
        .map(|&u| {
            members
                .iter()
                .any(|&v| ring.mul(u, v) == e && ring.mul(v, u) == e)
        })
        .collect()
}

/// Jacobson radical of the corner, computed inside the corner via
/// quasi-regularity with respect to the identity `e`.
pub fn corner_jacobson(ring: &Ring, e: usize) -> Vec<usize> {
    let members = corner_members(ring, e);
    corner_jacobson_of(ring, e, &members)
}

fn corner_jacobson_of(ring: &Ring, e: usize, members: &[usize]) -> Vec<usize> {
    let units = corner_unit_flags(ring, e, members);
    let is_corner_unit = |x: usize| -> bool {
        members
            .binary_search(&x)
            .map(|i| units[i])
            .unwrap_or(false)
    };
    members
        .iter()
        .copied()
        .filter(|&a| {
            members
                .iter()
                .all(|&r| is_corner_unit(ring.sub(e, ring.mul(r, a))))
        })
        .collect()
}

/// Every element of `eRe` has an inner inverse inside `eRe`.
pub fn corner_is_regular(ring: &Ring, e: usize) -> bool {
    let members = corner_members(ring, e);
    members
        .iter()
        .all(|&x| members.iter().any(|&y| ring.prod(&[x, y, x]) == x))
}

/// For every `x` in `eRe`, either `x` or `e − x` has an inner inverse in the
/// corner.
pub fn corner_is_vnl(ring: &Ring, e: usize) -> bool {
    corner_vnl_witness(ring, e).is_none()
}

/// Least `x` in `eRe` with both `x` and `e − x` non-regular in the corner.
pub fn corner_vnl_witness(ring: &Ring, e: usize) -> Option<usize> {
    let members = corner_members(ring, e);
    let reg = |x: usize| members.iter().any(|&y| ring.prod(&[x, y, x]) == x);
    members
        .iter()
        .copied()
        .find(|&x| !reg(x) && !reg(ring.sub(e, x)))
}

pub fn corner_is_semisimple(ring: &Ring, e: usize) -> bool {
    corner_jacobson(ring, e) == vec![ring.zero()]
}

/// Local: every non-unit of the corner lies in its radical. The order-1
/// corner (the zero ring) counts as local.
pub fn corner_is_local(ring: &Ring, e: usize) -> bool {
    let members = corner_members(ring, e);
    let units = corner_unit_flags(ring, e, members.as_slice());
    let jac = corner_jacobson_of(ring, e, &members);
    members
        .iter()
        .zip(&units)
        .all(|(&x, &u)| u || jac.binary_search(&x).is_ok())
}

/// Division: every nonzero element of the corner is a unit. Vacuously true
/// for the order-1 corner.
pub fn corner_is_division(ring: &Ring, e: usize) -> bool {
    let members = corner_members(ring, e);
    let units = corner_unit_flags(ring, e, members.as_slice());
    members
        .iter()
        .zip(&units)
        .all(|(&x, &u)| u || x == ring.zero())
}

/// NJ inside the corner: every corner element outside the corner radical has
/// an inner inverse in the corner.
pub fn corner_is_nj(ring: &Ring, e: usize) -> bool {
    let members = corner_members(ring, e);
    let jac = corner_jacobson_of(ring, e, &members);
    members
        .iter()
        .filter(|&&x| jac.binary_search(&x).is_err())
        .all(|&x| members.iter().any(|&y| ring.prod(&[x, y, x]) == x))
}

// ---------------------------------------------------------------------------
// classification flags

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingClassification {
    pub regular: bool,
    pub local: bool,
    pub division: bool,
    pub semisimple: bool,
    pub abelian: bool,
    pub commutative: bool,
    pub has_nontrivial_central_idempotent: bool,
}

pub fn classify_ring(ring: &Ring) -> RingClassification {
    let n = ring.order();
    let regular = (0..n).all(|a| element::is_regular(ring, a));
    let jac = jacobson_flags(ring);
    let local = (0..n).all(|a| element::is_unit(ring, a) || jac[a]);
    let division = (0..n).all(|a| a == ring.zero() || element::is_unit(ring, a));
    let semisimple = jacobson_members(ring).len() == 1;
    let idems = idempotents(ring);
    let abelian = idems.iter().all(|&e| is_central(ring, e));
    let commutative = (0..n).all(|a| (a..n).all(|b| ring.mul(a, b) == ring.mul(b, a)));
    let has_nontrivial_central_idempotent = idems
        .iter()
        .any(|&e| e != ring.zero() && e != ring.one() && is_central(ring, e));
    RingClassification {
        regular,
        local,
        division,
        semisimple,
        abelian,
        commutative,
        has_nontrivial_central_idempotent,
    }
}

/// Simple: the only two-sided ideals are 0 and R. The zero ring is not simple.
pub fn is_simple(ring: &Ring) -> bool {
    if ring.is_zero_ring() {
        return false;
    }
    (0..ring.order())
        .filter(|&a| a != ring.zero())
        .all(|a| ideal_generated(ring, a).order() == ring.order())
}

// ---------------------------------------------------------------------------
// maximal regular ideal

/// The maximal regular ideal: the additive closure of the union of all
/// regular principal two-sided ideals. The result is re-verified to be a
/// regular ideal containing every regular principal ideal; a failure there
/// would contradict the closure of regular ideals under sums and is reported
/// as an inconsistency.
pub fn maximal_regular_ideal(ring: &Ring) -> Result<SubsetIdeal, RingError> {
    let members = ring.caches.max_regular_ideal.get_or_init(|| {
        let mut union: Vec<usize> = vec![ring.zero()];
        for a in 0..ring.order() {
            if !element::is_regular(ring, a) {
                continue;
            }
            let principal = ideal_generated(ring, a);
            if is_regular_ideal(ring, &principal) {
                union.extend_from_slice(&principal.members);
            }
        }
        union.sort_unstable();
        union.dedup();
        flags_to_vec(&additive_closure(ring, &union))
    });
    let ideal = SubsetIdeal {
        members: members.clone(),
        sidedness: Sidedness::TwoSided,
        label: "mr".into(),
    };
    ideal.verify_two_sided(ring).map_err(|e| {
        RingError::inconsistency(format!("maximal regular ideal is not an ideal: {e}"))
    })?;
    if !is_regular_ideal(ring, &ideal) {
        return Err(RingError::inconsistency(format!(
            "sum of regular ideals of {} is not regular",
            ring.label()
        )));
    }
    for a in &ideal.members {
        let principal = ideal_generated(ring, *a);
        if !principal.members.iter().all(|m| ideal.contains(*m)) {
            return Err(RingError::inconsistency(format!(
                "maximal regular ideal of {} is not an ideal over generator {a}",
                ring.label()
            )));
        }
    }
    Ok(ideal)
}

/// Enumerates the whole two-sided ideal lattice by closing sums of principal
/// ideals. Exponential in principle; intended for tiny rings.
pub fn enumerate_two_sided_ideals(ring: &Ring, cap: usize) -> Result<Vec<SubsetIdeal>, RingError> {
    if ring.order() > cap {
        return Err(RingError::capacity(format!(
            "ideal lattice enumeration capped at order {cap}, ring has {}",
            ring.order()
        )));
    }
    let principals: Vec<Vec<usize>> = {
        let mut ps: Vec<Vec<usize>> = (0..ring.order())
            .map(|a| ideal_generated(ring, a).members)
            .collect();
        ps.sort();
        ps.dedup();
        ps
    };
    let mut found: Vec<Vec<usize>> = vec![vec![ring.zero()]];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].clone();
        i += 1;
        for p in &principals {
            let mut seed = current.clone();
            seed.extend_from_slice(p);
            let sum = flags_to_vec(&additive_closure(ring, &seed));
            if !found.contains(&sum) {
                found.push(sum);
            }
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|members| SubsetIdeal::two_sided(ring, members, "lattice"))
        .collect()
}

/// Independent oracle for the maximal regular ideal: enumerate every
/// two-sided ideal, keep the regular ones, and check they have a unique
/// maximum under inclusion.
pub fn maximal_regular_ideal_exhaustive(
    ring: &Ring,
    cap: usize,
) -> Result<SubsetIdeal, RingError> {
    let regular_ideals: Vec<SubsetIdeal> = enumerate_two_sided_ideals(ring, cap)?
        .into_iter()
        .filter(|i| is_regular_ideal(ring, i))
        .collect();
    let max = regular_ideals
        .iter()
        .max_by_key(|i| i.order())
        .cloned()
        .expect("the zero ideal is always regular");
    for i in &regular_ideals {
        if !i.members.iter().all(|m| max.contains(*m)) {
            return Err(RingError::inconsistency(format!(
                "regular ideals of {} have no unique maximum",
                ring.label()
            )));
        }
    }
    Ok(SubsetIdeal {
        members: max.members,
        sidedness: Sidedness::TwoSided,
        label: "mr".into(),
    })
}

// ---------------------------------------------------------------------------
// primitive decompositions

/// An ordered list of pairwise orthogonal primitive idempotents summing to 1.
/// The zero ring decomposes as the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimitiveDecomposition {
    pub idempotents: Vec<usize>,
}

impl PrimitiveDecomposition {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn verify(&self, ring: &Ring) -> bool {
        let sum = self
            .idempotents
            .iter()
            .fold(ring.zero(), |acc, &e| ring.add(acc, e));
        if sum != ring.one() {
            return false;
        }
        for (i, &e) in self.idempotents.iter().enumerate() {
            if !is_primitive_idempotent(ring, e) {
                return false;
            }
            for &f in &self.idempotents[i + 1..] {
                if ring.mul(e, f) != ring.zero() || ring.mul(f, e) != ring.zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Splits 1 into orthogonal primitive idempotents by repeatedly replacing a
/// non-primitive summand `e` with `(f, e−f)`, where `f` is the least
/// nontrivial idempotent of `eRe`. Deterministic by construction.
pub fn primitive_decomposition(ring: &Ring) -> PrimitiveDecomposition {
    if ring.is_zero_ring() {
        return PrimitiveDecomposition {
            idempotents: Vec::new(),
        };
    }
    let mut parts = vec![ring.one()];
    loop {
        let mut split_at = None;
        for (i, &e) in parts.iter().enumerate() {
            if !is_primitive_idempotent(ring, e) {
                let f = corner_members(ring, e)
                    .into_iter()
                    .find(|&x| x != ring.zero() && x != e && ring.mul(x, x) == x)
                    .expect("a non-primitive idempotent has a nontrivial corner idempotent");
                split_at = Some((i, f, ring.sub(e, f)));
                break;
            }
        }
        match split_at {
            Some((i, f, rest)) => {
                parts[i] = f;
                parts.insert(i + 1, rest);
            }
            None => break,
        }
    }
    PrimitiveDecomposition { idempotents: parts }
}

// ---------------------------------------------------------------------------
// projectives and Peirce data

/// Decides `eR ≅ fR` via the standard criterion: some `x ∈ eRf`, `y ∈ fRe`
/// with `xy = e` and `yx = f`.
pub fn projectives_isomorphic(ring: &Ring, e: usize, f: usize) -> Result<bool, RingError> {
    for (name, idem) in [("e", e), ("f", f)] {
        if ring.mul(idem, idem) != idem {
            return Err(RingError::invalid(format!(
                "projectives_isomorphic: {name} = {idem} is not idempotent"
            )));
        }
    }
    let erf = block_members(ring, e, f);
    let fre = block_members(ring, f, e);
    Ok(erf
        .iter()
        .any(|&x| fre.iter().any(|&y| ring.mul(x, y) == e && ring.mul(y, x) == f)))
}

/// The off-diagonal Peirce pieces of an idempotent along with the products
/// and radical inclusions of interest.
#[derive(Debug, Clone, Serialize)]
pub struct PeirceBlocks {
    /// `X = eR(1−e)`
    pub x_members: Vec<usize>,
    /// `Y = (1−e)Re`
    pub y_members: Vec<usize>,
    pub xy_zero: bool,
    pub yx_zero: bool,
    pub x_in_jacobson: bool,
    pub y_in_jacobson: bool,
}

pub fn peirce_corner_product(ring: &Ring, e: usize) -> Result<PeirceBlocks, RingError> {
    if ring.mul(e, e) != e {
        return Err(RingError::invalid(format!(
            "peirce_corner_product: {e} is not idempotent"
        )));
    }
    let c = ring.one_minus(e);
    let x_members = block_members(ring, e, c);
    let y_members = block_members(ring, c, e);
    let zero = ring.zero();
    let xy_zero = x_members
        .iter()
        .all(|&x| y_members.iter().all(|&y| ring.mul(x, y) == zero));
    let yx_zero = y_members
        .iter()
        .all(|&y| x_members.iter().all(|&x| ring.mul(y, x) == zero));
    let jac = jacobson_flags(ring);
    let x_in_jacobson = x_members.iter().all(|&x| jac[x]);
    let y_in_jacobson = y_members.iter().all(|&y| jac[y]);
    Ok(PeirceBlocks {
        x_members,
        y_members,
        xy_zero,
        yx_zero,
        x_in_jacobson,
        y_in_jacobson,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        build_corner, build_cyclic, build_field, build_matrix_ring, build_product,
        build_quotient, build_upper_triangular, BuildConfig,
    };
    use std::sync::Arc;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zn(n: usize) -> Arc<Ring> {
        build_cyclic(n, &cfg()).unwrap()
    }

    fn gf(p: u64) -> Arc<Ring> {
        build_field(p, 1, &[0, 1], &cfg()).unwrap().ring().clone()
    }

    #[test]
    fn jacobson_examples() {
        assert_eq!(jacobson_radical(&zn(12)).members, vec![0, 6]);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        assert_eq!(jacobson_radical(m2.ring()).members, vec![0]);

        let t2 = build_upper_triangular(2, &gf(2), &cfg()).unwrap();
        let e01 = t2.unit(0, 1);
        assert_eq!(jacobson_radical(t2.ring()).members, vec![0, e01]);
    }

    #[test]
    fn radical_of_quotient_by_radical_is_zero() {
        for ring in [zn(12), zn(36), zn(8)] {
            let jac = jacobson_radical(&ring);
            let q = build_quotient(&ring, &jac, &cfg()).unwrap();
            assert_eq!(jacobson_radical(q.ring()).members, vec![0]);
        }
    }

    #[test]
    fn census_examples() {
        assert_eq!(idempotent_census(&zn(12)).all, vec![0, 1, 4, 9]);
        assert_eq!(idempotent_census(&zn(4)).all, vec![0, 1]);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let census = idempotent_census(m2.ring());
        assert_eq!(census.all.len(), 8);
        assert_eq!(census.central, vec![0, m2.ring().one()]);
        // the six rank-one idempotents are primitive and local
        assert_eq!(census.primitive.len(), 6);
        assert!(census.primitive.iter().all(|e| census.local.contains(e)));
    }

    #[test]
    fn classification_examples() {
        let z4 = classify_ring(&zn(4));
        assert!(z4.local && !z4.regular && z4.abelian && z4.commutative);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let cm2 = classify_ring(m2.ring());
        assert!(cm2.semisimple && cm2.regular && !cm2.abelian && !cm2.commutative);

        let f4 = build_field(2, 2, &[1, 1, 1], &cfg()).unwrap();
        let cf4 = classify_ring(f4.ring());
        assert!(cf4.division && cf4.local && cf4.regular);

        let zero = classify_ring(&zn(1));
        assert!(zero.regular && zero.semisimple && zero.local && zero.division);

        assert!(is_simple(m2.ring()));
        assert!(!is_simple(&zn(12)));
        assert!(is_simple(&gf(3)));
    }

    #[test]
    fn ideal_generation() {
        let z12 = zn(12);
        assert_eq!(ideal_generated(&z12, 4).members, vec![0, 4, 8]);
        assert_eq!(ideal_generated(&z12, 0).members, vec![0]);
        assert_eq!(ideal_generated(&z12, 1).order(), 12);
        assert_eq!(ideal_generated(&z12, 4).label, "gen4");

        assert!(is_regular_ideal(&z12, &ideal_generated(&z12, 0)));
        assert!(!is_regular_ideal(
            &z12,
            &SubsetIdeal::two_sided(&z12, vec![0, 6], "gen6").unwrap()
        ));
        assert!(is_regular_ideal(&z12, &ideal_generated(&z12, 4)));
    }

    #[test]
    fn maximal_regular_ideal_examples() {
        assert_eq!(maximal_regular_ideal(&zn(12)).unwrap().members, vec![0, 4, 8]);

        let t2 = build_upper_triangular(2, &gf(2), &cfg()).unwrap();
        assert_eq!(maximal_regular_ideal(t2.ring()).unwrap().members, vec![0]);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        assert_eq!(
            maximal_regular_ideal(m2.ring()).unwrap().order(),
            m2.ring().order()
        );
    }

    #[test]
    fn closure_sum_matches_lattice_oracle_on_small_rings() {
        let mut rings: Vec<Arc<Ring>> = (1..=16).map(zn).collect();
        rings.push(build_upper_triangular(2, &gf(2), &cfg()).unwrap().ring().clone());
        rings.push(build_field(2, 2, &[1, 1, 1], &cfg()).unwrap().ring().clone());
        rings.push(
            build_product(&[zn(4), gf(3)], &cfg()).unwrap().ring().clone(),
        );
        rings.push(
            build_matrix_ring(2, &gf(2), &cfg()).unwrap().ring().clone(),
        );
        for ring in rings {
            let fast = maximal_regular_ideal(&ring).unwrap();
            let oracle = maximal_regular_ideal_exhaustive(&ring, 16).unwrap();
            assert_eq!(fast.members, oracle.members, "M(R) mismatch on {}", ring.label());
        }
    }

    #[test]
    fn primitive_decomposition_examples() {
        let z12 = zn(12);
        let d = primitive_decomposition(&z12);
        assert_eq!(d.idempotents, vec![4, 9]);
        assert!(d.verify(&z12));

        let z4 = zn(4);
        assert_eq!(primitive_decomposition(&z4).idempotents, vec![1]);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let dm = primitive_decomposition(m2.ring());
        assert_eq!(dm.len(), 2);
        assert!(dm.verify(m2.ring()));

        assert!(primitive_decomposition(&zn(1)).is_empty());

        // representation-order invariance of the summand count: Z_6 and
        // Z_2 x Z_3 are the same ring in two encodings
        let p = build_product(&[zn(2), zn(3)], &cfg()).unwrap();
        assert_eq!(
            primitive_decomposition(&zn(6)).len(),
            primitive_decomposition(p.ring()).len()
        );
    }

    #[test]
    fn projectives_examples() {
        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let (e11, e22) = (m2.unit(0, 0), m2.unit(1, 1));
        assert!(projectives_isomorphic(m2.ring(), e11, e11).unwrap());
        assert!(projectives_isomorphic(m2.ring(), e11, e22).unwrap());

        let p = build_product(&[gf(2), gf(3)], &cfg()).unwrap();
        let e = p.inject(0, 1);
        let f = p.inject(1, 1);
        assert!(!projectives_isomorphic(p.ring(), e, f).unwrap());

        assert!(projectives_isomorphic(m2.ring(), m2.unit(0, 1), e11).is_err());
    }

    #[test]
    fn peirce_examples() {
        let t2 = build_upper_triangular(2, &gf(2), &cfg()).unwrap();
        let e11 = t2.unit(0, 0);
        let blocks = peirce_corner_product(t2.ring(), e11).unwrap();
        assert_eq!(blocks.x_members, vec![0, t2.unit(0, 1)]);
        assert_eq!(blocks.y_members, vec![0]);
        assert!(blocks.xy_zero && blocks.yx_zero);
        assert!(blocks.x_in_jacobson && blocks.y_in_jacobson);

        let m2 = build_matrix_ring(2, &gf(2), &cfg()).unwrap();
        let blocks = peirce_corner_product(m2.ring(), m2.unit(0, 0)).unwrap();
        assert!(!blocks.xy_zero);
        assert!(!blocks.x_in_jacobson);

        // central idempotents have trivial off-diagonal pieces
        let p = build_product(&[gf(2), gf(3)], &cfg()).unwrap();
        let blocks = peirce_corner_product(p.ring(), p.inject(0, 1)).unwrap();
        assert_eq!(blocks.x_members, vec![0]);
        assert_eq!(blocks.y_members, vec![0]);
    }

    #[test]
    fn corner_scans_agree_with_corner_rings() {
        let rings: Vec<Arc<Ring>> = vec![
            zn(12),
            build_upper_triangular(2, &gf(2), &cfg()).unwrap().ring().clone(),
            build_matrix_ring(2, &gf(2), &cfg()).unwrap().ring().clone(),
            build_product(&[zn(4), gf(3)], &cfg()).unwrap().ring().clone(),
        ];
        for ring in rings {
            for &e in idempotents(&ring) {
                let corner = build_corner(&ring, e, &cfg()).unwrap();
                let c = corner.ring();
                let class = classify_ring(c);
                assert_eq!(corner_is_regular(&ring, e), class.regular, "{} e={e}", ring.label());
                assert_eq!(corner_is_local(&ring, e), class.local, "{} e={e}", ring.label());
                assert_eq!(corner_is_division(&ring, e), class.division);
                assert_eq!(
                    corner_is_semisimple(&ring, e),
                    class.semisimple,
                    "{} e={e}",
                    ring.label()
                );
                // corner radical matches eJe and the built corner's radical
                let via_scan = corner_jacobson(&ring, e);
                let via_ring: Vec<usize> = jacobson_radical(c)
                    .members
                    .iter()
                    .map(|&q| corner.include(q))
                    .collect();
                assert_eq!(via_scan, via_ring);
                let jac = jacobson_flags(&ring);
                let eje: Vec<usize> = corner_members(&ring, e)
                    .into_iter()
                    .filter(|&x| jac[x])
                    .collect();
                assert_eq!(via_scan, eje, "eJe mismatch in {} at {e}", ring.label());
            }
        }
    }
}
