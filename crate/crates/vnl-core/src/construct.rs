//! Verified constructions of finite rings.
//!
//! Every builder produces a validated [`Ring`]: dense Cayley tables up to the
//! configured cap, structured computed arithmetic above it. Element indexing
//! is the lexicographic (big-endian) order of the construction's tuple
//! encoding, so indices are stable across runs.

use std::sync::Arc;

use crate::error::RingError;
use crate::ring::{Ring, StructuredOps, MAX_DENSE_ORDER};
use crate::structure::SubsetIdeal;

/// Representation and validation budgets shared by all builders.
#[derive(Debug, Clone)]
pub struct BuildConfig {
    /// Orders up to this get dense Cayley tables.
    pub dense_cap: usize,
    /// Orders up to this may be represented with computed arithmetic.
    pub structured_cap: usize,
    /// Dense rings up to this order are axiom-checked exhaustively at
    /// construction; larger ones are sampled.
    pub exhaustive_validation_cap: usize,
    /// Number of random triples for sampled axiom validation.
    pub sample_budget: usize,
    /// Seed for the sampled validator.
    pub seed: u64,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            dense_cap: 4096,
            structured_cap: 65536,
            exhaustive_validation_cap: 128,
            sample_budget: 100_000,
            seed: 0,
        }
    }
}

impl BuildConfig {
    /// Same budgets but with dense representation disabled above `cap`,
    /// used to force structured arithmetic for particular constructions.
    pub fn with_dense_cap(mut self, cap: usize) -> Self {
        self.dense_cap = cap;
        self
    }
}

fn finish(
    label: String,
    order: usize,
    zero: usize,
    one: usize,
    ops: Box<dyn StructuredOps>,
    cfg: &BuildConfig,
) -> Result<Arc<Ring>, RingError> {
    if order > cfg.structured_cap {
        return Err(RingError::capacity(format!(
            "{label}: order {order} exceeds structured budget {}",
            cfg.structured_cap
        )));
    }
    let ring = if order <= cfg.dense_cap && order <= MAX_DENSE_ORDER {
        Ring::densify(label, order, zero, one, ops.as_ref())?
    } else {
        Ring::from_structured(label, order, zero, one, ops)?
    };
    validate(&ring, cfg)?;
    Ok(Arc::new(ring))
}

fn validate(ring: &Ring, cfg: &BuildConfig) -> Result<(), RingError> {
    if ring.repr_kind() == crate::ring::ReprKind::DenseTable
        && ring.order() <= cfg.exhaustive_validation_cap
    {
        ring.validate_exhaustive()
    } else {
        ring.validate_sampled(cfg.sample_budget, cfg.seed)
    }
}

// ---------------------------------------------------------------------------
// mixed-radix tuple encoding

pub(crate) fn encode_tuple(digits: &[usize], radices: &[usize]) -> usize {
    let mut idx = 0;
    for (d, r) in digits.iter().zip(radices) {
        idx = idx * r + d;
    }
    idx
}

pub(crate) fn decode_tuple(mut idx: usize, radices: &[usize], out: &mut [usize]) {
    for i in (0..radices.len()).rev() {
        out[i] = idx % radices[i];
        idx /= radices[i];
    }
}

// ---------------------------------------------------------------------------
// Z_n

struct CyclicOps {
    n: usize,
}

impl StructuredOps for CyclicOps {
    fn add(&self, a: usize, b: usize) -> usize {
        (a + b) % self.n
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        (a * b) % self.n
    }
    fn neg(&self, a: usize) -> usize {
        (self.n - a) % self.n
    }
}

/// The ring of integers mod `n`. `n = 1` is the zero ring.
pub fn build_cyclic(n: usize, cfg: &BuildConfig) -> Result<Arc<Ring>, RingError> {
    if n == 0 {
        return Err(RingError::invalid("Zn(0): modulus must be positive"));
    }
    let one = if n == 1 { 0 } else { 1 };
    finish(format!("Zn({n})"), n, 0, one, Box::new(CyclicOps { n }), cfg)
}

// ---------------------------------------------------------------------------
// polynomials over Z_p (coefficient vectors, lowest degree first)

pub(crate) fn poly_trim(coeffs: &mut Vec<u64>) {
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
}

pub(crate) fn poly_deg(coeffs: &[u64]) -> usize {
    coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b);
    let lead_inv = mod_inverse(b[db], p).expect("divisor must have invertible leading coefficient");
    while poly_deg(&a) >= db && a.iter().any(|&c| c != 0) {
        let da = poly_deg(&a);
        if da < db {
            break;
        }
        let factor = a[da] * lead_inv % p;
        for i in 0..=db {
            let idx = da - db + i;
            a[idx] = (a[idx] + p - factor * b[i] % p) % p;
        }
    }
    poly_trim(&mut a);
    a
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    // p is prime here, so a^(p-2) works, but extended Euclid keeps it honest.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(((t0 % p as i128 + p as i128) % p as i128) as u64)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Finds a monic factor of `m` of degree in `1..deg(m)`, or `None` when `m`
/// is irreducible. Trial division over all monic candidates up to half the
/// degree.
pub(crate) fn poly_find_factor(m: &[u64], p: u64) -> Option<Vec<u64>> {
    let k = poly_deg(m);
    for d in 1..=k / 2 {
        // all monic polynomials of degree d
        let count = (p as usize).pow(d as u32);
        for enc in 0..count {
            let mut cand = vec![0u64; d + 1];
            let mut e = enc;
            for c in cand.iter_mut().take(d) {
                *c = (e % p as usize) as u64;
                e /= p as usize;
            }
            cand[d] = 1;
            if poly_is_zero(&poly_rem(m.to_vec(), &cand, p)) {
                return Some(cand);
            }
        }
    }
    None
}

/// Canonical display: descending powers, `x^2+x+1` style.
pub fn poly_to_string(coeffs: &[u64]) -> String {
    let deg = poly_deg(coeffs);
    if coeffs.iter().all(|&c| c == 0) {
        return "0".into();
    }
    let mut parts = Vec::new();
    for e in (0..=deg).rev() {
        let c = coeffs.get(e).copied().unwrap_or(0);
        if c == 0 {
            continue;
        }
        let term = match (e, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (e, 1) => format!("x^{e}"),
            (e, c) => format!("{c}x^{e}"),
        };
        parts.push(term);
    }
    parts.join("+")
}

/// The lexicographically least monic irreducible of degree `k` over `Z_p`.
pub fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    let count = (p as usize).pow(k as u32);
    for enc in 0..count {
        let mut cand = vec![0u64; k + 1];
        let mut e = enc;
        for c in cand.iter_mut().take(k) {
            *c = (e % p as usize) as u64;
            e /= p as usize;
        }
        cand[k] = 1;
        if poly_find_factor(&cand, p).is_none() {
            return cand;
        }
    }
    unreachable!("an irreducible of every degree exists over a prime field")
}

/// Galois field of order `p^k` as polynomial residues mod `modulus`.
/// Element `i` has coefficients given by the base-`p` digits of `i`
/// (constant term least significant).
#[derive(Debug)]
pub struct GaloisField {
    ring: Arc<Ring>,
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

struct FieldOps {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl FieldOps {
    fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut c = vec![0u64; self.k];
        for coeff in c.iter_mut() {
            *coeff = (idx % self.p as usize) as u64;
            idx /= self.p as usize;
        }
        c
    }

    fn encode(&self, coeffs: &[u64]) -> usize {
        let mut idx = 0usize;
        for i in (0..self.k).rev() {
            idx = idx * self.p as usize + coeffs.get(i).copied().unwrap_or(0) as usize;
        }
        idx
    }
}

impl StructuredOps for FieldOps {
    fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(prod, &self.modulus, self.p);
        self.encode(&rem)
    }
    fn neg(&self, a: usize) -> usize {
        let ca = self.decode(a);
        let neg: Vec<u64> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }
}

/// Field of order `p^k`. The modulus must be monic of degree `k` and
/// irreducible; a reducible modulus is rejected with a factor as witness.
pub fn build_field(
    p: u64,
    k: usize,
    modulus: &[u64],
    cfg: &BuildConfig,
) -> Result<GaloisField, RingError> {
    if !is_prime(p) {
        return Err(RingError::invalid(format!("GF: {p} is not prime")));
    }
    if k == 0 {
        return Err(RingError::invalid("GF: extension degree must be >= 1"));
    }
    let mut m: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
    poly_trim(&mut m);
    if poly_deg(&m) != k || m[k] != 1 {
        return Err(RingError::invalid(format!(
            "GF({p},{k}): modulus {} is not monic of degree {k}",
            poly_to_string(&m)
        )));
    }
    if let Some(factor) = poly_find_factor(&m, p) {
        return Err(RingError::invalid(format!(
            "GF({p},{k}): modulus {} is reducible, divisible by {}",
            poly_to_string(&m),
            poly_to_string(&factor)
        )));
    }
    let order = (p as usize)
        .checked_pow(k as u32)
        .ok_or_else(|| RingError::capacity("GF: order overflows"))?;
    let label = if k == 1 {
        format!("GF({p})")
    } else {
        format!("GF({p},{k},{})", poly_to_string(&m))
    };
    let ops = FieldOps {
        p,
        k,
        modulus: m.clone(),
    };
    let one = if order == 1 { 0 } else { 1 };
    let ring = finish(label, order, 0, one, Box::new(ops), cfg)?;
    Ok(GaloisField {
        ring,
        p,
        k,
        modulus: m,
    })
}

impl GaloisField {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }
}

// ---------------------------------------------------------------------------
// products

struct ProductOps {
    factors: Vec<Arc<Ring>>,
    radices: Vec<usize>,
}

impl ProductOps {
    fn zip(&self, a: usize, b: usize, f: impl Fn(&Ring, usize, usize) -> usize) -> usize {
        let k = self.radices.len();
        let mut da = vec![0; k];
        let mut db = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        decode_tuple(b, &self.radices, &mut db);
        let out: Vec<usize> = self
            .factors
            .iter()
            .zip(da.iter().zip(&db))
            .map(|(r, (&x, &y))| f(r, x, y))
            .collect();
        encode_tuple(&out, &self.radices)
    }
}

impl StructuredOps for ProductOps {
    fn add(&self, a: usize, b: usize) -> usize {
        self.zip(a, b, |r, x, y| r.add(x, y))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.zip(a, b, |r, x, y| r.mul(x, y))
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.radices.len();
        let mut da = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        let out: Vec<usize> = self
            .factors
            .iter()
            .zip(&da)
            .map(|(r, &x)| r.neg(x))
            .collect();
        encode_tuple(&out, &self.radices)
    }
}

/// Componentwise product with projections and injections exposed.
pub struct ProductRing {
    ring: Arc<Ring>,
    factors: Vec<Arc<Ring>>,
    radices: Vec<usize>,
}

pub fn build_product(factors: &[Arc<Ring>], cfg: &BuildConfig) -> Result<ProductRing, RingError> {
    if factors.is_empty() {
        return Err(RingError::invalid("Prod: needs at least one factor"));
    }
    let radices: Vec<usize> = factors.iter().map(|r| r.order()).collect();
    let order = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .ok_or_else(|| RingError::capacity("Prod: order overflows"))?;
    let label = format!(
        "Prod({})",
        factors
            .iter()
            .map(|r| r.label().to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let zero_t: Vec<usize> = factors.iter().map(|r| r.zero()).collect();
    let one_t: Vec<usize> = factors.iter().map(|r| r.one()).collect();
    let zero = encode_tuple(&zero_t, &radices);
    let one = encode_tuple(&one_t, &radices);
    let ops = ProductOps {
        factors: factors.to_vec(),
        radices: radices.clone(),
    };
    let ring = finish(label, order, zero, one, Box::new(ops), cfg)?;
    Ok(ProductRing {
        ring,
        factors: factors.to_vec(),
        radices,
    })
}

impl ProductRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn factors(&self) -> &[Arc<Ring>] {
        &self.factors
    }

    /// Component of `idx` in position `i`.
    pub fn project(&self, i: usize, idx: usize) -> usize {
        let mut d = vec![0; self.radices.len()];
        decode_tuple(idx, &self.radices, &mut d);
        d[i]
    }

    /// Element with `x` in position `i` and zero elsewhere.
    pub fn inject(&self, i: usize, x: usize) -> usize {
        let mut d: Vec<usize> = self.factors.iter().map(|r| r.zero()).collect();
        d[i] = x;
        encode_tuple(&d, &self.radices)
    }

    pub fn encode(&self, components: &[usize]) -> usize {
        encode_tuple(components, &self.radices)
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.radices.len()];
        decode_tuple(idx, &self.radices, &mut d);
        d
    }
}

// ---------------------------------------------------------------------------
// full matrix rings

struct MatrixOps {
    base: Arc<Ring>,
    n: usize,
    radices: Vec<usize>,
}

impl MatrixOps {
    #[inline]
    fn at(entries: &[usize], n: usize, i: usize, j: usize) -> usize {
        entries[i * n + j]
    }
}

impl StructuredOps for MatrixOps {
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.n * self.n;
        let mut da = vec![0; k];
        let mut db = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        decode_tuple(b, &self.radices, &mut db);
        let out: Vec<usize> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect();
        encode_tuple(&out, &self.radices)
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut da = vec![0; n * n];
        let mut db = vec![0; n * n];
        decode_tuple(a, &self.radices, &mut da);
        decode_tuple(b, &self.radices, &mut db);
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.base.zero();
                for k in 0..n {
                    acc = self.base.add(
                        acc,
                        self.base
                            .mul(Self::at(&da, n, i, k), Self::at(&db, n, k, j)),
                    );
                }
                out[i * n + j] = acc;
            }
        }
        encode_tuple(&out, &self.radices)
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.n * self.n;
        let mut da = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        let out: Vec<usize> = da.iter().map(|&x| self.base.neg(x)).collect();
        encode_tuple(&out, &self.radices)
    }
}

/// The full matrix ring over `base`, entries row-major in the tuple encoding.
pub struct MatrixRing {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    n: usize,
    radices: Vec<usize>,
}

pub fn build_matrix_ring(
    n: usize,
    base: &Arc<Ring>,
    cfg: &BuildConfig,
) -> Result<MatrixRing, RingError> {
    if n == 0 {
        return Err(RingError::invalid("M: size must be >= 1"));
    }
    let entries = n * n;
    let order = base
        .order()
        .checked_pow(entries as u32)
        .filter(|&o| o <= cfg.structured_cap)
        .ok_or_else(|| {
            RingError::capacity(format!(
                "M({n},{}): order {}^{entries} exceeds structured budget {}",
                base.label(),
                base.order(),
                cfg.structured_cap
            ))
        })?;
    let radices = vec![base.order(); entries];
    let mut one_t = vec![base.zero(); entries];
    for i in 0..n {
        one_t[i * n + i] = base.one();
    }
    let zero = encode_tuple(&vec![base.zero(); entries], &radices);
    let one = encode_tuple(&one_t, &radices);
    let label = format!("M({n},{})", base.label());
    let ops = MatrixOps {
        base: base.clone(),
        n,
        radices: radices.clone(),
    };
    let ring = finish(label, order, zero, one, Box::new(ops), cfg)?;
    Ok(MatrixRing {
        ring,
        base: base.clone(),
        n,
        radices,
    })
}

impl MatrixRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Index of the matrix with given row-major entries.
    pub fn encode(&self, entries: &[usize]) -> usize {
        encode_tuple(entries, &self.radices)
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.n * self.n];
        decode_tuple(idx, &self.radices, &mut d);
        d
    }

    /// Matrix unit `E_{ij}` (1-based would invite off-by-ones; rows and
    /// columns are 0-based here).
    pub fn unit(&self, i: usize, j: usize) -> usize {
        let mut entries = vec![self.base.zero(); self.n * self.n];
        entries[i * self.n + j] = self.base.one();
        self.encode(&entries)
    }
}

// ---------------------------------------------------------------------------
// upper triangular matrix rings

struct UpperTriangularOps {
    base: Arc<Ring>,
    positions: Vec<(usize, usize)>,
    slot: Vec<Vec<Option<usize>>>,
    radices: Vec<usize>,
}

impl UpperTriangularOps {
    fn entry(&self, d: &[usize], i: usize, j: usize) -> usize {
        match self.slot[i][j] {
            Some(s) => d[s],
            None => self.base.zero(),
        }
    }
}

impl StructuredOps for UpperTriangularOps {
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.positions.len();
        let mut da = vec![0; k];
        let mut db = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        decode_tuple(b, &self.radices, &mut db);
        let out: Vec<usize> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect();
        encode_tuple(&out, &self.radices)
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.positions.len();
        let mut da = vec![0; k];
        let mut db = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        decode_tuple(b, &self.radices, &mut db);
        let mut out = vec![0; k];
        for (s, &(i, j)) in self.positions.iter().enumerate() {
            let mut acc = self.base.zero();
            for m in i..=j {
                acc = self
                    .base
                    .add(acc, self.base.mul(self.entry(&da, i, m), self.entry(&db, m, j)));
            }
            out[s] = acc;
        }
        encode_tuple(&out, &self.radices)
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.positions.len();
        let mut da = vec![0; k];
        decode_tuple(a, &self.radices, &mut da);
        let out: Vec<usize> = da.iter().map(|&x| self.base.neg(x)).collect();
        encode_tuple(&out, &self.radices)
    }
}

/// The ring of upper triangular `n x n` matrices over `base`. Entries are
/// stored row-major over positions `(i, j)` with `i <= j`.
pub struct UpperTriangularRing {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    n: usize,
    positions: Vec<(usize, usize)>,
    radices: Vec<usize>,
}

pub fn build_upper_triangular(
    n: usize,
    base: &Arc<Ring>,
    cfg: &BuildConfig,
) -> Result<UpperTriangularRing, RingError> {
    if n == 0 {
        return Err(RingError::invalid("T: size must be >= 1"));
    }
    let entries = n * (n + 1) / 2;
    let order = base
        .order()
        .checked_pow(entries as u32)
        .filter(|&o| o <= cfg.structured_cap)
        .ok_or_else(|| {
            RingError::capacity(format!(
                "T({n},{}): order {}^{entries} exceeds structured budget {}",
                base.label(),
                base.order(),
                cfg.structured_cap
            ))
        })?;
    let mut positions = Vec::with_capacity(entries);
    let mut slot = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i..n {
            slot[i][j] = Some(positions.len());
            positions.push((i, j));
        }
    }
    let radices = vec![base.order(); entries];
    let mut one_t = vec![base.zero(); entries];
    for (s, &(i, j)) in positions.iter().enumerate() {
        if i == j {
            one_t[s] = base.one();
        }
    }
    let zero = encode_tuple(&vec![base.zero(); entries], &radices);
    let one = encode_tuple(&one_t, &radices);
    let label = format!("T({n},{})", base.label());
    let ops = UpperTriangularOps {
        base: base.clone(),
        positions: positions.clone(),
        slot,
        radices: radices.clone(),
    };
    let ring = finish(label, order, zero, one, Box::new(ops), cfg)?;
    Ok(UpperTriangularRing {
        ring,
        base: base.clone(),
        n,
        positions,
        radices,
    })
}

impl UpperTriangularRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Positions `(i, j)`, `i <= j`, in storage order.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    pub fn encode(&self, entries: &[usize]) -> usize {
        encode_tuple(entries, &self.radices)
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.positions.len()];
        decode_tuple(idx, &self.radices, &mut d);
        d
    }

    /// Matrix unit at position `(i, j)` (0-based, `i <= j`).
    pub fn unit(&self, i: usize, j: usize) -> usize {
        let mut entries = vec![self.base.zero(); self.positions.len()];
        let s = self
            .positions
            .iter()
            .position(|&p| p == (i, j))
            .expect("position must be upper triangular");
        entries[s] = self.base.one();
        self.encode(&entries)
    }
}

// ---------------------------------------------------------------------------
// quotients

/// Quotient by a verified two-sided ideal. Each coset is represented by its
/// minimal element index, and quotient elements are those representatives in
/// ascending order.
pub struct QuotientRing {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    /// base index -> quotient index
    map: Vec<usize>,
    /// quotient index -> representative base index
    reps: Vec<usize>,
}

pub fn build_quotient(
    base: &Arc<Ring>,
    ideal: &SubsetIdeal,
    cfg: &BuildConfig,
) -> Result<QuotientRing, RingError> {
    ideal.verify_two_sided(base)?;
    let n = base.order();
    let mut rep_of = vec![usize::MAX; n];
    for x in 0..n {
        let mut rep = usize::MAX;
        for &i in &ideal.members {
            rep = rep.min(base.add(x, i));
        }
        rep_of[x] = rep;
    }
    let mut reps: Vec<usize> = rep_of.to_vec();
    reps.sort_unstable();
    reps.dedup();
    let order = reps.len();
    if order > cfg.dense_cap || order > MAX_DENSE_ORDER {
        return Err(RingError::capacity(format!(
            "Quot: quotient order {order} exceeds dense cap"
        )));
    }
    let mut compact = vec![usize::MAX; n];
    for (q, &r) in reps.iter().enumerate() {
        compact[r] = q;
    }
    let map: Vec<usize> = (0..n).map(|x| compact[rep_of[x]]).collect();

    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut neg = vec![0u16; order];
    for (qa, &ra) in reps.iter().enumerate() {
        neg[qa] = map[base.neg(ra)] as u16;
        for (qb, &rb) in reps.iter().enumerate() {
            add[qa * order + qb] = map[base.add(ra, rb)] as u16;
            mul[qa * order + qb] = map[base.mul(ra, rb)] as u16;
        }
    }
    let label = format!("Quot({},{})", base.label(), ideal.label);
    let ring = Ring::from_dense(
        label,
        map[base.zero()],
        map[base.one()],
        crate::ring::DenseTables { add, mul, neg },
    )?;
    validate(&ring, cfg)?;
    Ok(QuotientRing {
        ring: Arc::new(ring),
        base: base.clone(),
        map,
        reps,
    })
}

impl QuotientRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    /// The quotient map on element indices.
    pub fn project(&self, base_idx: usize) -> usize {
        self.map[base_idx]
    }

    /// Minimal representative of a quotient element.
    pub fn representative(&self, q_idx: usize) -> usize {
        self.reps[q_idx]
    }
}

// ---------------------------------------------------------------------------
// corners eRe and the center

/// The corner ring `eRe` for an idempotent `e`, with its inclusion into the
/// ambient ring. Identity is `e`.
pub struct CornerRing {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    e: usize,
    /// corner index -> base index
    members: Vec<usize>,
}

pub fn build_corner(
    base: &Arc<Ring>,
    e: usize,
    cfg: &BuildConfig,
) -> Result<CornerRing, RingError> {
    if base.mul(e, e) != e {
        return Err(RingError::invalid(format!(
            "Corner({},{e}): element is not idempotent",
            base.label()
        )));
    }
    let members = crate::structure::corner_members(base, e);
    build_subring(
        base,
        members,
        base.zero(),
        e,
        format!("Corner({},{e})", base.label()),
        cfg,
    )
    .map(|(ring, members)| CornerRing {
        ring,
        base: base.clone(),
        e,
        members,
    })
}

impl CornerRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn idempotent(&self) -> usize {
        self.e
    }

    /// Base-ring index of a corner element.
    pub fn include(&self, corner_idx: usize) -> usize {
        self.members[corner_idx]
    }

    /// Corner index of a base element of `eRe`, if it lies in the corner.
    pub fn restrict(&self, base_idx: usize) -> Option<usize> {
        self.members.binary_search(&base_idx).ok()
    }
}

/// The center `{z : zr = rz for all r}` as a ring with inclusion.
pub struct CenterRing {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    members: Vec<usize>,
}

pub fn center(base: &Arc<Ring>, cfg: &BuildConfig) -> Result<CenterRing, RingError> {
    let n = base.order();
    let members: Vec<usize> = (0..n)
        .filter(|&z| (0..n).all(|r| base.mul(z, r) == base.mul(r, z)))
        .collect();
    build_subring(
        base,
        members,
        base.zero(),
        base.one(),
        format!("Center({})", base.label()),
        cfg,
    )
    .map(|(ring, members)| CenterRing {
        ring,
        base: base.clone(),
        members,
    })
}

impl CenterRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn include(&self, center_idx: usize) -> usize {
        self.members[center_idx]
    }

    pub fn restrict(&self, base_idx: usize) -> Option<usize> {
        self.members.binary_search(&base_idx).ok()
    }
}

/// Shared path for corner and center: `members` must be sorted, closed under
/// the ambient operations, and contain `zero` and `one`.
fn build_subring(
    base: &Arc<Ring>,
    members: Vec<usize>,
    zero: usize,
    one: usize,
    label: String,
    cfg: &BuildConfig,
) -> Result<(Arc<Ring>, Vec<usize>), RingError> {
    let order = members.len();
    if order > cfg.dense_cap || order > MAX_DENSE_ORDER {
        return Err(RingError::capacity(format!(
            "{label}: order {order} exceeds dense cap"
        )));
    }
    let locate = |x: usize| -> Result<usize, RingError> {
        members.binary_search(&x).map_err(|_| {
            RingError::inconsistency(format!("subring construction: not closed at element {x}"))
        })
    };
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut neg = vec![0u16; order];
    for (ia, &a) in members.iter().enumerate() {
        neg[ia] = locate(base.neg(a))? as u16;
        for (ib, &b) in members.iter().enumerate() {
            add[ia * order + ib] = locate(base.add(a, b))? as u16;
            mul[ia * order + ib] = locate(base.mul(a, b))? as u16;
        }
    }
    let ring = Ring::from_dense(
        label,
        locate(zero)?,
        locate(one)?,
        crate::ring::DenseTables { add, mul, neg },
    )?;
    validate(&ring, cfg)?;
    Ok((Arc::new(ring), members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    #[test]
    fn cyclic_arithmetic() {
        let z4 = build_cyclic(4, &cfg()).unwrap();
        assert_eq!(z4.add(2, 3), 1);
        assert_eq!(z4.mul(2, 2), 0);
        assert_eq!(z4.label(), "Zn(4)");

        let z1 = build_cyclic(1, &cfg()).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.zero(), z1.one());

        let z12 = build_cyclic(12, &cfg()).unwrap();
        assert_eq!(z12.order(), 12);
        assert!((0..12).all(|a| (0..12).all(|b| z12.mul(a, b) == z12.mul(b, a))));

        assert!(build_cyclic(0, &cfg()).is_err());
    }

    #[test]
    fn field_construction() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        assert_eq!(f2.ring().order(), 2);
        assert_eq!(f2.ring().label(), "GF(2)");

        // F_4 over x^2+x+1: the class of x is element 2 and x*x = x+1 = 3
        let f4 = build_field(2, 2, &[1, 1, 1], &cfg()).unwrap();
        let r = f4.ring();
        assert_eq!(r.order(), 4);
        assert_eq!(r.mul(2, 2), 3);
        r.validate_exhaustive().unwrap();
        // every nonzero element is a unit
        for a in 1..4 {
            assert!((1..4).any(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one()));
        }

        // x^2+1 = (x+1)^2 over F_2
        let err = build_field(2, 2, &[1, 0, 1], &cfg()).unwrap_err();
        match err {
            RingError::InvalidParameter(msg) => assert!(msg.contains("x+1"), "{msg}"),
            other => panic!("expected invalid parameter, got {other:?}"),
        }

        assert!(build_field(4, 1, &[0, 1], &cfg()).is_err());
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
            let m = default_modulus(p, k);
            assert_eq!(poly_deg(&m), k);
            assert!(poly_find_factor(&m, p).is_none());
        }
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]); // x^2+x+1
    }

    #[test]
    fn product_is_componentwise() {
        let z2 = build_cyclic(2, &cfg()).unwrap();
        let z3 = build_cyclic(3, &cfg()).unwrap();
        let p = build_product(&[z2.clone(), z3.clone()], &cfg()).unwrap();
        assert_eq!(p.ring().order(), 6);
        // CRT: x mod 6 -> (x mod 2, x mod 3) is an isomorphism onto the product
        let embed = |x: usize| p.encode(&[x % 2, x % 3]);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.ring().add(embed(a), embed(b)), embed((a + b) % 6));
                assert_eq!(p.ring().mul(embed(a), embed(b)), embed((a * b) % 6));
            }
        }
        // projections are ring homomorphisms
        for i in 0..2 {
            let f = [&z2, &z3][i];
            for a in 0..6 {
                for b in 0..6 {
                    assert_eq!(
                        p.project(i, p.ring().mul(a, b)),
                        f.mul(p.project(i, a), p.project(i, b))
                    );
                    assert_eq!(
                        p.project(i, p.ring().add(a, b)),
                        f.add(p.project(i, a), p.project(i, b))
                    );
                }
            }
        }

        let z4 = build_cyclic(4, &cfg()).unwrap();
        let f3 = build_field(3, 1, &[0, 1], &cfg()).unwrap();
        let q = build_product(&[z4, f3.ring().clone()], &cfg()).unwrap();
        assert_eq!(q.ring().order(), 12);

        let single = build_product(std::slice::from_ref(&z2), &cfg()).unwrap();
        assert_eq!(single.ring().order(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(single.ring().mul(a, b), z2.mul(a, b));
            }
        }
        assert!(build_product(&[], &cfg()).is_err());
    }

    #[test]
    fn matrix_ring_shapes() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let m2 = build_matrix_ring(2, f2.ring(), &cfg()).unwrap();
        assert_eq!(m2.ring().order(), 16);
        m2.ring().validate_exhaustive().unwrap();
        // E_01 * E_10 = E_00, E_10 * E_01 = E_11
        let e01 = m2.unit(0, 1);
        let e10 = m2.unit(1, 0);
        assert_eq!(m2.ring().mul(e01, e10), m2.unit(0, 0));
        assert_eq!(m2.ring().mul(e10, e01), m2.unit(1, 1));

        let z5 = build_cyclic(5, &cfg()).unwrap();
        let m1 = build_matrix_ring(1, &z5, &cfg()).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(m1.ring().mul(a, b), z5.mul(a, b));
            }
        }

        let z4 = build_cyclic(4, &cfg()).unwrap();
        assert_eq!(build_matrix_ring(2, &z4, &cfg()).unwrap().ring().order(), 256);

        let z8 = build_cyclic(8, &cfg()).unwrap();
        let tiny = BuildConfig {
            structured_cap: 1000,
            ..cfg()
        };
        assert!(matches!(
            build_matrix_ring(2, &z8, &tiny),
            Err(RingError::Capacity(_))
        ));
    }

    #[test]
    fn upper_triangular_shapes() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let t2 = build_upper_triangular(2, f2.ring(), &cfg()).unwrap();
        assert_eq!(t2.ring().order(), 8);
        t2.ring().validate_exhaustive().unwrap();
        let t3 = build_upper_triangular(3, f2.ring(), &cfg()).unwrap();
        assert_eq!(t3.ring().order(), 64);
        let t4 = build_upper_triangular(4, f2.ring(), &cfg()).unwrap();
        assert_eq!(t4.ring().order(), 1024);
        // strictly upper entries multiply to zero when they should
        let e01 = t2.unit(0, 1);
        assert_eq!(t2.ring().mul(e01, e01), t2.ring().zero());
    }

    #[test]
    fn quotient_examples() {
        let z12 = build_cyclic(12, &cfg()).unwrap();
        let ideal = SubsetIdeal::two_sided(&z12, vec![0, 4, 8], "gen4").unwrap();
        let q = build_quotient(&z12, &ideal, &cfg()).unwrap();
        assert_eq!(q.ring().order(), 4);
        // quotient map is a surjective homomorphism
        let mut image = [false; 4];
        for x in 0..12 {
            image[q.project(x)] = true;
            for y in 0..12 {
                assert_eq!(
                    q.project(z12.add(x, y)),
                    q.ring().add(q.project(x), q.project(y))
                );
                assert_eq!(
                    q.project(z12.mul(x, y)),
                    q.ring().mul(q.project(x), q.project(y))
                );
            }
        }
        assert!(image.iter().all(|&b| b));
        // arithmetic is Z_4's under representative indexing 0..3
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(q.ring().add(a, b), (a + b) % 4);
                assert_eq!(q.ring().mul(a, b), (a * b) % 4);
            }
        }

        let zero_ideal = SubsetIdeal::two_sided(&z12, vec![0], "gen0").unwrap();
        let q0 = build_quotient(&z12, &zero_ideal, &cfg()).unwrap();
        assert_eq!(q0.ring().order(), 12);

        let full = SubsetIdeal::two_sided(&z12, (0..12).collect(), "gen1").unwrap();
        let q1 = build_quotient(&z12, &full, &cfg()).unwrap();
        assert!(q1.ring().is_zero_ring());

        // {0, 6, 9} is not closed under addition
        assert!(SubsetIdeal::two_sided(&z12, vec![0, 6, 9], "bad").is_err());
    }

    #[test]
    fn corner_examples() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let m2 = build_matrix_ring(2, f2.ring(), &cfg()).unwrap();
        let e11 = m2.unit(0, 0);
        let corner = build_corner(m2.ring(), e11, &cfg()).unwrap();
        assert_eq!(corner.ring().order(), 2);
        assert_eq!(corner.ring().one(), corner.restrict(e11).unwrap());

        let whole = build_corner(m2.ring(), m2.ring().one(), &cfg()).unwrap();
        assert_eq!(whole.ring().order(), 16);
        let zero = build_corner(m2.ring(), m2.ring().zero(), &cfg()).unwrap();
        assert!(zero.ring().is_zero_ring());

        // corner multiplication agrees with the ambient one
        for a in 0..corner.ring().order() {
            for b in 0..corner.ring().order() {
                let ambient = m2.ring().mul(corner.include(a), corner.include(b));
                assert_eq!(corner.include(corner.ring().mul(a, b)), ambient);
            }
        }

        assert!(build_corner(m2.ring(), m2.unit(0, 1), &cfg()).is_err());
    }

    #[test]
    fn center_examples() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let m2 = build_matrix_ring(2, f2.ring(), &cfg()).unwrap();
        assert_eq!(center(m2.ring(), &cfg()).unwrap().ring().order(), 2);

        let t2 = build_upper_triangular(2, f2.ring(), &cfg()).unwrap();
        assert_eq!(center(t2.ring(), &cfg()).unwrap().ring().order(), 2);

        let z12 = build_cyclic(12, &cfg()).unwrap();
        assert_eq!(center(&z12, &cfg()).unwrap().ring().order(), 12);
    }

    #[test]
    fn structured_matches_dense() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let dense = build_matrix_ring(2, f2.ring(), &cfg()).unwrap();
        let structured = build_matrix_ring(2, f2.ring(), &cfg().with_dense_cap(8)).unwrap();
        assert_eq!(
            structured.ring().repr_kind(),
            crate::ring::ReprKind::Structured
        );
        assert_eq!(dense.ring().repr_kind(), crate::ring::ReprKind::DenseTable);
        for a in 0..16 {
            assert_eq!(structured.ring().neg(a), dense.ring().neg(a));
            for b in 0..16 {
                assert_eq!(structured.ring().add(a, b), dense.ring().add(a, b));
                assert_eq!(structured.ring().mul(a, b), dense.ring().mul(a, b));
            }
        }
        structured.ring().validate_sampled(100_000, 7).unwrap();
    }

    #[test]
    fn every_structured_construction_matches_its_dense_tables() {
        let f2 = build_field(2, 1, &[0, 1], &cfg()).unwrap();
        let z6 = build_cyclic(6, &cfg()).unwrap();
        let forced = cfg().with_dense_cap(2);

        let pairs: Vec<(Arc<Ring>, Arc<Ring>)> = vec![
            (
                build_cyclic(12, &cfg()).unwrap(),
                build_cyclic(12, &forced).unwrap(),
            ),
            (
                build_field(3, 2, &default_modulus(3, 2), &cfg()).unwrap().ring().clone(),
                build_field(3, 2, &default_modulus(3, 2), &forced).unwrap().ring().clone(),
            ),
            (
                build_product(&[f2.ring().clone(), z6.clone()], &cfg()).unwrap().ring().clone(),
                build_product(&[f2.ring().clone(), z6.clone()], &forced).unwrap().ring().clone(),
            ),
            (
                build_upper_triangular(3, f2.ring(), &cfg()).unwrap().ring().clone(),
                build_upper_triangular(3, f2.ring(), &forced).unwrap().ring().clone(),
            ),
        ];
        for (dense, structured) in pairs {
            assert_eq!(dense.repr_kind(), crate::ring::ReprKind::DenseTable);
            assert_eq!(structured.repr_kind(), crate::ring::ReprKind::Structured);
            assert_eq!(dense.order(), structured.order());
            assert_eq!(dense.zero(), structured.zero());
            assert_eq!(dense.one(), structured.one());
            for a in 0..dense.order() {
                assert_eq!(dense.neg(a), structured.neg(a), "{}", dense.label());
                for b in 0..dense.order() {
                    assert_eq!(dense.add(a, b), structured.add(a, b), "{}", dense.label());
                    assert_eq!(dense.mul(a, b), structured.mul(a, b), "{}", dense.label());
                }
            }
        }
    }

    #[test]
    fn large_structured_ring_is_constructible() {
        // order 6561 sits above the default dense cap
        let f9 = build_field(3, 2, &default_modulus(3, 2), &cfg()).unwrap();
        let m2 = build_matrix_ring(2, f9.ring(), &cfg()).unwrap();
        assert_eq!(m2.ring().order(), 6561);
        assert_eq!(m2.ring().repr_kind(), crate::ring::ReprKind::Structured);
        m2.ring().validate_sampled(20_000, 1).unwrap();
        let e01 = m2.unit(0, 1);
        let e10 = m2.unit(1, 0);
        assert_eq!(m2.ring().mul(e01, e10), m2.unit(0, 0));
    }

    #[test]
    fn validator_catches_corruption() {
        let z6 = build_cyclic(6, &cfg()).unwrap();
        let mut add = vec![0u16; 36];
        let mut mul = vec![0u16; 36];
        let mut neg = vec![0u16; 6];
        for a in 0..6 {
            neg[a] = z6.neg(a) as u16;
            for b in 0..6 {
                add[a * 6 + b] = z6.add(a, b) as u16;
                mul[a * 6 + b] = z6.mul(a, b) as u16;
            }
        }
        mul[2 * 6 + 3] = 1; // 2*3 = 1 breaks distributivity
        let bad = Ring::from_dense("bad".into(), 0, 1, crate::ring::DenseTables { add, mul, neg })
            .unwrap();
        assert!(bad.validate_exhaustive().is_err());
        assert!(bad.validate_sampled(100_000, 0).is_err());
    }
}
