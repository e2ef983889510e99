//! The ring-expression DSL.
//!
//! Grammar:
//!
//! ```text
//! expr := "Zn(" int ")"
//!       | "GF(" int ["," int ["," poly]] ")"
//!       | "M(" int "," expr ")"
//!       | "T(" int "," expr ")"
//!       | "Prod(" expr {"," expr} ")"
//!       | "Tri(" expr "," module-ref "," expr ")"
//!       | "Quot(" expr "," ideal-ref ")"
//!       | "Corner(" expr "," int ")"
//!       | "Center(" expr ")"
//! poly := term {"+" term},  term := int | "x" | "x^" int | int "x" [^ int]
//! ```
//!
//! Module and ideal references name entries in a sidecar JSON file, falling
//! back to the built-ins documented on [`Elaborator`]. Syntax errors carry
//! the byte offset of the offending token.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use vnl_core::construct::{
    build_corner, build_cyclic, build_field, build_matrix_ring, build_product, build_quotient,
    build_upper_triangular, center, default_modulus, poly_to_string, BuildConfig,
};
use vnl_core::structure::{ideal_generated_by, jacobson_radical, maximal_regular_ideal, SubsetIdeal};
use vnl_core::triangular::{build_formal_triangular, Bimodule, TriangularRing};
use vnl_core::{Ring, RingError};

use crate::report::HarnessError;

// ---------------------------------------------------------------------------
// AST

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Cyclic(u64),
    GaloisField {
        p: u64,
        k: usize,
        modulus: Option<Vec<u64>>,
    },
    Matrix(usize, Box<RingExpr>),
    UpperTriangular(usize, Box<RingExpr>),
    Product(Vec<RingExpr>),
    Triangular {
        left: Box<RingExpr>,
        module: String,
        right: Box<RingExpr>,
    },
    Quotient {
        base: Box<RingExpr>,
        ideal: String,
    },
    Corner {
        base: Box<RingExpr>,
        idempotent: usize,
    },
    Center(Box<RingExpr>),
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Cyclic(n) => write!(f, "Zn({n})"),
            RingExpr::GaloisField { p, k, modulus } => match (k, modulus) {
                (1, None) => write!(f, "GF({p})"),
                (_, None) => write!(f, "GF({p},{k})"),
                (_, Some(m)) => write!(f, "GF({p},{k},{})", poly_to_string(m)),
            },
            RingExpr::Matrix(n, base) => write!(f, "M({n},{base})"),
            RingExpr::UpperTriangular(n, base) => write!(f, "T({n},{base})"),
            RingExpr::Product(factors) => {
                write!(f, "Prod(")?;
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            RingExpr::Triangular {
                left,
                module,
                right,
            } => write!(f, "Tri({left},{module},{right})"),
            RingExpr::Quotient { base, ideal } => write!(f, "Quot({base},{ideal})"),
            RingExpr::Corner { base, idempotent } => write!(f, "Corner({base},{idempotent})"),
            RingExpr::Center(base) => write!(f, "Center({base})"),
        }
    }
}

// ---------------------------------------------------------------------------
// tokenizer and parser

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    Plus,
    Caret,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl From<ParseError> for HarnessError {
    fn from(e: ParseError) -> Self {
        HarnessError::Usage(e.to_string())
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push(Token { tok: Tok::LParen, offset: i });
                i += 1;
            }
            ')' => {
                toks.push(Token { tok: Tok::RParen, offset: i });
                i += 1;
            }
            ',' => {
                toks.push(Token { tok: Tok::Comma, offset: i });
                i += 1;
            }
            '+' => {
                toks.push(Token { tok: Tok::Plus, offset: i });
                i += 1;
            }
            '^' => {
                toks.push(Token { tok: Tok::Caret, offset: i });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = text[start..i].parse().map_err(|_| ParseError {
                    offset: start,
                    message: "integer literal out of range".into(),
                })?;
                toks.push(Token { tok: Tok::Int(n), offset: start });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric()
                        || bytes[i] == b'_'
                        || bytes[i] == b'-')
                {
                    i += 1;
                }
                toks.push(Token {
                    tok: Tok::Ident(text[start..i].to_string()),
                    offset: start,
                });
            }
            other => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        let head_offset = self.offset();
        let name = self.ident("a constructor name")?;
        self.expect(Tok::LParen, "'('")?;
        let out = match name.as_str() {
            "Zn" => {
                let n = self.int("a modulus")?;
                RingExpr::Cyclic(n)
            }
            "GF" => {
                let p = self.int("a prime")?;
                let mut k = 1usize;
                let mut modulus = None;
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    k = self.int("an extension degree")? as usize;
                    if self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        modulus = Some(self.poly(p)?);
                    }
                }
                RingExpr::GaloisField { p, k, modulus }
            }
            "M" => {
                let n = self.int("a matrix size")? as usize;
                self.expect(Tok::Comma, "','")?;
                RingExpr::Matrix(n, Box::new(self.expr()?))
            }
            "T" => {
                let n = self.int("a matrix size")? as usize;
                self.expect(Tok::Comma, "','")?;
                RingExpr::UpperTriangular(n, Box::new(self.expr()?))
            }
            "Prod" => {
                let mut factors = vec![self.expr()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    factors.push(self.expr()?);
                }
                RingExpr::Product(factors)
            }
            "Tri" => {
                let left = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let module = self.ident("a module reference")?;
                self.expect(Tok::Comma, "','")?;
                let right = self.expr()?;
                RingExpr::Triangular {
                    left: Box::new(left),
                    module,
                    right: Box::new(right),
                }
            }
            "Quot" => {
                let base = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let ideal = self.ident("an ideal reference")?;
                RingExpr::Quotient {
                    base: Box::new(base),
                    ideal,
                }
            }
            "Corner" => {
                let base = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let idempotent = self.int("an element index")? as usize;
                RingExpr::Corner {
                    base: Box::new(base),
                    idempotent,
                }
            }
            "Center" => RingExpr::Center(Box::new(self.expr()?)),
            other => {
                return Err(ParseError {
                    offset: head_offset,
                    message: format!("unknown constructor {other:?}"),
                })
            }
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(out)
    }

    /// Comma-free polynomial over `Z_p`: a sum of `c`, `x`, `cx`, `x^e`,
    /// `cx^e` terms. Coefficients are collected lowest degree first.
    fn poly(&mut self, p: u64) -> Result<Vec<u64>, ParseError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let mut coeff = 1u64;
            let mut have_coeff = false;
            if let Some(Tok::Int(c)) = self.peek() {
                coeff = *c;
                have_coeff = true;
                self.pos += 1;
            }
            let exp = match self.peek() {
                Some(Tok::Ident(x)) if x == "x" => {
                    self.pos += 1;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        self.int("an exponent")? as usize
                    } else {
                        1
                    }
                }
                _ if have_coeff => 0,
                _ => return Err(self.err("expected a polynomial term")),
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] = (coeffs[exp] + coeff) % p;
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(coeffs)
    }
}

/// Parses one ring expression, requiring the whole input to be consumed.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.pos != toks.len() {
        return Err(parser.err("trailing input"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// sidecar

#[derive(Debug, Clone, Deserialize)]
pub struct SidecarModule {
    pub left_ring: String,
    pub right_ring: String,
    pub group_order: usize,
    pub add_table: Vec<Vec<usize>>,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
}

/// Named bimodules and ideals referenced from expressions.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct Sidecar {
    #[serde(default)]
    pub modules: BTreeMap<String, SidecarModule>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<usize>>,
}

impl Sidecar {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text)
            .map_err(|e| HarnessError::Usage(format!("sidecar parse error: {e}")))
    }
}

// ---------------------------------------------------------------------------
// elaboration

/// A constructed ring, with the triangular presentation kept when the
/// expression was a `Tri(...)`.
#[derive(Clone)]
pub struct ElaboratedRing {
    pub ring: Arc<Ring>,
    pub triangular: Option<Arc<TriangularRing>>,
}

/// Elaborates expressions to rings. Module references resolve first in the
/// sidecar, then among the built-ins:
///
/// - `self`: the ring as a bimodule over itself (left and right must match);
/// - `zero`: the order-1 bimodule;
/// - `col`: columns `D^n` over `M(n,D)` or `T(n,D)` on the left, `D` on the
///   right;
/// - `row`: rows `D^n` with `D` on the left and `M(n,D)` on the right;
/// - `lastcol`: matrices with zero first column, an `(M(2,D), T(2,D))`
///   bimodule;
/// - `factor1`: for `Prod(A,B,...)` on both sides, the ideal `A x 0 x ...`.
///
/// Ideal references resolve in the sidecar, then: `gen<i>_<j>_...` for the
/// two-sided ideal generated by the listed element indices, `jac` for the
/// radical, `mr` for the maximal regular ideal.
pub struct Elaborator {
    pub cfg: BuildConfig,
    pub sidecar: Sidecar,
}

impl Elaborator {
    pub fn new(cfg: BuildConfig) -> Self {
        Elaborator {
            cfg,
            sidecar: Sidecar::default(),
        }
    }

    pub fn with_sidecar(cfg: BuildConfig, sidecar: Sidecar) -> Self {
        Elaborator { cfg, sidecar }
    }

    pub fn elaborate_str(&self, text: &str) -> Result<ElaboratedRing, HarnessError> {
        let expr = parse_ring_expr(text)?;
        self.elaborate(&expr)
    }

    pub fn elaborate(&self, expr: &RingExpr) -> Result<ElaboratedRing, HarnessError> {
        let plain = |ring: Arc<Ring>| ElaboratedRing {
            ring,
            triangular: None,
        };
        match expr {
            RingExpr::Cyclic(n) => Ok(plain(build_cyclic(*n as usize, &self.cfg)?)),
            RingExpr::GaloisField { p, k, modulus } => {
                let m = match modulus {
                    Some(m) => m.clone(),
                    None => default_modulus(*p, *k),
                };
                Ok(plain(build_field(*p, *k, &m, &self.cfg)?.ring().clone()))
            }
            RingExpr::Matrix(n, base) => {
                let base = self.elaborate(base)?;
                Ok(plain(
                    build_matrix_ring(*n, &base.ring, &self.cfg)?.ring().clone(),
                ))
            }
            RingExpr::UpperTriangular(n, base) => {
                let base = self.elaborate(base)?;
                Ok(plain(
                    build_upper_triangular(*n, &base.ring, &self.cfg)?
                        .ring()
                        .clone(),
                ))
            }
            RingExpr::Product(factors) => {
                let rings: Vec<Arc<Ring>> = factors
                    .iter()
                    .map(|f| self.elaborate(f).map(|e| e.ring))
                    .collect::<Result<_, _>>()?;
                Ok(plain(build_product(&rings, &self.cfg)?.ring().clone()))
            }
            RingExpr::Triangular {
                left,
                module,
                right,
            } => {
                let tri = self.build_triangular(left, module, right)?;
                Ok(ElaboratedRing {
                    ring: tri.ring().clone(),
                    triangular: Some(Arc::new(tri)),
                })
            }
            RingExpr::Quotient { base, ideal } => {
                let base = self.elaborate(base)?.ring;
                let ideal = self.resolve_ideal(&base, ideal)?;
                Ok(plain(build_quotient(&base, &ideal, &self.cfg)?.ring().clone()))
            }
            RingExpr::Corner { base, idempotent } => {
                let base = self.elaborate(base)?.ring;
                if *idempotent >= base.order() {
                    return Err(HarnessError::Usage(format!(
                        "Corner: element {idempotent} out of range for {} (order {})",
                        base.label(),
                        base.order()
                    )));
                }
                Ok(plain(
                    build_corner(&base, *idempotent, &self.cfg)?.ring().clone(),
                ))
            }
            RingExpr::Center(base) => {
                let base = self.elaborate(base)?.ring;
                Ok(plain(center(&base, &self.cfg)?.ring().clone()))
            }
        }
    }

    pub fn build_triangular(
        &self,
        left: &RingExpr,
        module: &str,
        right: &RingExpr,
    ) -> Result<TriangularRing, HarnessError> {
        if let Some(entry) = self.sidecar.modules.get(module) {
            let declared_left = parse_ring_expr(&entry.left_ring)?;
            let declared_right = parse_ring_expr(&entry.right_ring)?;
            if declared_left != *left || declared_right != *right {
                return Err(HarnessError::Usage(format!(
                    "Tri: module {module} is declared over ({}, {}), used with ({left}, {right})",
                    entry.left_ring, entry.right_ring
                )));
            }
            let l = self.elaborate(left)?.ring;
            let r = self.elaborate(right)?.ring;
            let flat =
                |t: &[Vec<usize>], rows: usize, cols: usize| -> Result<Vec<u16>, HarnessError> {
                    if t.len() != rows || t.iter().any(|row| row.len() != cols) {
                        return Err(HarnessError::Usage(format!(
                            "Tri: module {module} table must be {rows}x{cols} row-major"
                        )));
                    }
                    Ok(t.iter().flatten().map(|&v| v as u16).collect())
                };
            let g = entry.group_order;
            let m = Bimodule::from_tables(
                &l,
                &r,
                g,
                module.to_string(),
                flat(&entry.add_table, g, g)?,
                flat(&entry.left_action, l.order(), g)?,
                flat(&entry.right_action, g, r.order())?,
            )?;
            return Ok(build_formal_triangular(&l, &Arc::new(m), &r, &self.cfg)?);
        }
        let unusable = |why: String| {
            HarnessError::Usage(format!("Tri: module reference {module:?} {why}"))
        };
        match module {
            "self" => {
                if left != right {
                    return Err(unusable(format!(
                        "needs matching rings, got {left} and {right}"
                    )));
                }
                let l = self.elaborate(left)?.ring;
                let m = Arc::new(Bimodule::ring_bimodule(&l, "self"));
                Ok(build_formal_triangular(&l, &m, &l, &self.cfg)?)
            }
            "zero" => {
                let l = self.elaborate(left)?.ring;
                let r = self.elaborate(right)?.ring;
                let m = Arc::new(Bimodule::zero_bimodule(&l, &r, "zero"));
                Ok(build_formal_triangular(&l, &m, &r, &self.cfg)?)
            }
            "col" => {
                let base_expr = match left {
                    RingExpr::Matrix(_, b) | RingExpr::UpperTriangular(_, b) if **b == *right => b,
                    _ => {
                        return Err(unusable(format!(
                            "needs M(n,D) or T(n,D) on the left and D on the right, got {left} and {right}"
                        )))
                    }
                };
                let base = self.elaborate(base_expr)?.ring;
                match left {
                    RingExpr::Matrix(n, _) => {
                        let mx = build_matrix_ring(*n, &base, &self.cfg)?;
                        let m = Arc::new(Bimodule::matrix_column_bimodule(&mx, "col")?);
                        Ok(build_formal_triangular(mx.ring(), &m, &base, &self.cfg)?)
                    }
                    RingExpr::UpperTriangular(n, _) => {
                        let ut = build_upper_triangular(*n, &base, &self.cfg)?;
                        let m = Arc::new(Bimodule::triangular_column_bimodule(&ut, "col")?);
                        Ok(build_formal_triangular(ut.ring(), &m, &base, &self.cfg)?)
                    }
                    _ => unreachable!(),
                }
            }
            "row" => {
                let (n, base_expr) = match right {
                    RingExpr::Matrix(n, b) if **b == *left => (*n, b),
                    _ => {
                        return Err(unusable(format!(
                            "needs D on the left and M(n,D) on the right, got {left} and {right}"
                        )))
                    }
                };
                let base = self.elaborate(base_expr)?.ring;
                let mx = build_matrix_ring(n, &base, &self.cfg)?;
                let m = Arc::new(row_bimodule(&base, &mx)?);
                Ok(build_formal_triangular(&base, &m, mx.ring(), &self.cfg)?)
            }
            "lastcol" => {
                let base_expr = match (left, right) {
                    (RingExpr::Matrix(2, b), RingExpr::UpperTriangular(2, b2)) if b == b2 => b,
                    _ => {
                        return Err(unusable(format!(
                            "needs M(2,D) on the left and T(2,D) on the right, got {left} and {right}"
                        )))
                    }
                };
                let base = self.elaborate(base_expr)?.ring;
                let mx = build_matrix_ring(2, &base, &self.cfg)?;
                let ut = build_upper_triangular(2, &base, &self.cfg)?;
                let m = Arc::new(last_column_bimodule(&mx, &ut)?);
                Ok(build_formal_triangular(mx.ring(), &m, ut.ring(), &self.cfg)?)
            }
            "factor1" => {
                let factors = match (left, right) {
                    (RingExpr::Product(fs), RingExpr::Product(fs2)) if fs == fs2 => fs,
                    _ => {
                        return Err(unusable(format!(
                            "needs the same Prod(...) on both sides, got {left} and {right}"
                        )))
                    }
                };
                let rings: Vec<Arc<Ring>> = factors
                    .iter()
                    .map(|f| self.elaborate(f).map(|e| e.ring))
                    .collect::<Result<_, _>>()?;
                let p = build_product(&rings, &self.cfg)?;
                let ideal = vnl_core::structure::ideal_generated(p.ring(), p.inject(0, rings[0].one()));
                let m = Arc::new(Bimodule::ideal_bimodule(p.ring(), &ideal, "factor1")?);
                Ok(build_formal_triangular(p.ring(), &m, p.ring(), &self.cfg)?)
            }
            other => Err(HarnessError::Usage(format!(
                "unknown module reference {other:?} (expected a sidecar name or one of self, zero, col, row, lastcol, factor1)"
            ))),
        }
    }

    fn resolve_ideal(&self, base: &Arc<Ring>, name: &str) -> Result<SubsetIdeal, HarnessError> {
        if let Some(members) = self.sidecar.ideals.get(name) {
            return Ok(SubsetIdeal::two_sided(base, members.clone(), name)?);
        }
        if name == "jac" {
            return Ok(jacobson_radical(base));
        }
        if name == "mr" {
            return Ok(maximal_regular_ideal(base)?);
        }
        if let Some(rest) = name.strip_prefix("gen") {
            let gens: Result<Vec<usize>, _> = rest.split('_').map(|s| s.parse::<usize>()).collect();
            if let Ok(gens) = gens {
                if let Some(&bad) = gens.iter().find(|&&g| g >= base.order()) {
                    return Err(HarnessError::Usage(format!(
                        "ideal {name}: generator {bad} out of range for {}",
                        base.label()
                    )));
                }
                return Ok(ideal_generated_by(base, &gens));
            }
        }
        Err(HarnessError::Usage(format!(
            "unknown ideal reference {name:?} (expected a sidecar name, gen<i>_<j>..., jac, or mr)"
        )))
    }
}

/// Rows `D^n` as a `(D, M_n(D))`-bimodule: scalars on the left, row vector
/// times matrix on the right.
fn row_bimodule(
    base: &Arc<Ring>,
    matrix: &vnl_core::construct::MatrixRing,
) -> Result<Bimodule, RingError> {
    let n = matrix.size();
    let d = base.order();
    let decode = |mut m: usize| {
        let mut v = vec![0usize; n];
        for i in (0..n).rev() {
            v[i] = m % d;
            m /= d;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0usize, |acc, &x| acc * d + x);
    Bimodule::from_actions(
        base,
        matrix.ring(),
        d.pow(n as u32),
        "row",
        |a, b| {
            let (va, vb) = (decode(a), decode(b));
            let sum: Vec<usize> = va.iter().zip(&vb).map(|(&x, &y)| base.add(x, y)).collect();
            encode(&sum)
        },
        |r, m| {
            let v = decode(m);
            let out: Vec<usize> = v.iter().map(|&x| base.mul(r, x)).collect();
            encode(&out)
        },
        |m, s| {
            let v = decode(m);
            let entries = matrix.decode(s);
            let out: Vec<usize> = (0..n)
                .map(|j| {
                    (0..n).fold(base.zero(), |acc, i| {
                        base.add(acc, base.mul(v[i], entries[i * n + j]))
                    })
                })
                .collect();
            encode(&out)
        },
    )
}

/// 2x2 matrices with zero first column, an `(M_2(D), T_2(D))`-bimodule of
/// order `|D|^2`: the left action is matrix-vector on the surviving column,
/// the right action scales by the lower-right entry.
fn last_column_bimodule(
    matrix: &vnl_core::construct::MatrixRing,
    upper: &vnl_core::construct::UpperTriangularRing,
) -> Result<Bimodule, RingError> {
    let base = matrix.base().clone();
    let d = base.order();
    let decode = |m: usize| [m / d, m % d];
    let encode = |v: [usize; 2]| v[0] * d + v[1];
    Bimodule::from_actions(
        matrix.ring(),
        upper.ring(),
        d * d,
        "lastcol",
        |a, b| {
            let (va, vb) = (decode(a), decode(b));
            encode([base.add(va[0], vb[0]), base.add(va[1], vb[1])])
        },
        |r, m| {
            let e = matrix.decode(r);
            let v = decode(m);
            encode([
                base.add(base.mul(e[0], v[0]), base.mul(e[1], v[1])),
                base.add(base.mul(e[2], v[0]), base.mul(e[3], v[1])),
            ])
        },
        |m, s| {
            let e = upper.decode(s); // (a00, a01, a11)
            let v = decode(m);
            encode([base.mul(v[0], e[2]), base.mul(v[1], e[2])])
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elab() -> Elaborator {
        Elaborator::new(BuildConfig::default())
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_ring_expr("Zn(12)").unwrap(), RingExpr::Cyclic(12));
        let t3 = parse_ring_expr("T(3,GF(2))").unwrap();
        assert_eq!(
            t3,
            RingExpr::UpperTriangular(
                3,
                Box::new(RingExpr::GaloisField {
                    p: 2,
                    k: 1,
                    modulus: None
                })
            )
        );
        assert_eq!(elab().elaborate(&t3).unwrap().ring.order(), 64);

        let err = parse_ring_expr("Zn(").unwrap_err();
        assert_eq!(err.offset, 3);

        let err = parse_ring_expr("Zn(4) junk").unwrap_err();
        assert_eq!(err.offset, 6);

        let poly = parse_ring_expr("GF(2,2,x^2+x+1)").unwrap();
        assert_eq!(
            poly,
            RingExpr::GaloisField {
                p: 2,
                k: 2,
                modulus: Some(vec![1, 1, 1])
            }
        );
    }

    #[test]
    fn print_parse_roundtrip_on_canonical_forms() {
        let exprs = [
            "Zn(12)",
            "GF(2)",
            "GF(2,2)",
            "GF(2,2,x^2+x+1)",
            "GF(3,2,x^2+1)",
            "M(2,GF(2))",
            "T(3,GF(2))",
            "Prod(Zn(4),GF(3))",
            "Prod(Zn(4),GF(2),GF(3))",
            "Tri(GF(2),self,GF(2))",
            "Tri(T(2,GF(2)),col,GF(2))",
            "Quot(Zn(12),gen4)",
            "Corner(M(2,GF(2)),1)",
            "Center(T(2,GF(2)))",
        ];
        for text in exprs {
            let ast = parse_ring_expr(text).unwrap();
            assert_eq!(ast.to_string(), text);
            assert_eq!(parse_ring_expr(&ast.to_string()).unwrap(), ast);
        }
    }

    #[test]
    fn elaborate_constructions() {
        let e = elab();
        assert_eq!(e.elaborate_str("Zn(12)").unwrap().ring.order(), 12);
        assert!(e.elaborate_str("GF(4)").is_err()); // 4 is not prime
        assert_eq!(e.elaborate_str("GF(2,2)").unwrap().ring.order(), 4);
        assert_eq!(e.elaborate_str("Prod(Zn(4),GF(3))").unwrap().ring.order(), 12);
        assert_eq!(
            e.elaborate_str("Quot(Zn(12),gen4)").unwrap().ring.order(),
            4
        );
        assert_eq!(e.elaborate_str("Quot(Zn(12),jac)").unwrap().ring.order(), 6);
        assert_eq!(e.elaborate_str("Quot(Zn(12),mr)").unwrap().ring.order(), 4);
        assert_eq!(e.elaborate_str("Center(M(2,GF(2)))").unwrap().ring.order(), 2);

        let tri = e.elaborate_str("Tri(GF(2),self,GF(2))").unwrap();
        assert_eq!(tri.ring.order(), 8);
        assert!(tri.triangular.is_some());

        let tri3 = e.elaborate_str("Tri(T(2,GF(2)),col,GF(2))").unwrap();
        assert_eq!(tri3.ring.order(), 64);

        let row = e.elaborate_str("Tri(GF(2),row,M(2,GF(2)))").unwrap();
        assert_eq!(row.ring.order(), 2 * 4 * 16);

        let lastcol = e
            .elaborate_str("Tri(M(2,GF(2)),lastcol,T(2,GF(2)))")
            .unwrap();
        assert_eq!(lastcol.ring.order(), 16 * 4 * 8);

        let cor216 = e
            .elaborate_str("Tri(Prod(GF(2),GF(2)),factor1,Prod(GF(2),GF(2)))")
            .unwrap();
        assert_eq!(cor216.ring.order(), 4 * 2 * 4);

        // corner of a non-idempotent is rejected
        assert!(e.elaborate_str("Corner(Zn(12),2)").is_err());
        assert!(e.elaborate_str("Corner(Zn(12),99)").is_err());
    }

    #[test]
    fn sidecar_modules_and_ideals() {
        let sidecar = Sidecar::from_json(
            r#"{
                "modules": {
                    "m": {
                        "left_ring": "GF(2)",
                        "right_ring": "GF(2)",
                        "group_order": 2,
                        "add_table": [[0,1],[1,0]],
                        "left_action": [[0,0],[0,1]],
                        "right_action": [[0,0],[0,1]]
                    }
                },
                "ideals": { "i": [0, 4, 8] }
            }"#,
        )
        .unwrap();
        let e = Elaborator::with_sidecar(BuildConfig::default(), sidecar);
        assert_eq!(
            e.elaborate_str("Tri(GF(2),m,GF(2))").unwrap().ring.order(),
            8
        );
        assert_eq!(e.elaborate_str("Quot(Zn(12),i)").unwrap().ring.order(), 4);
        // sidecar module used with the wrong rings
        assert!(e.elaborate_str("Tri(GF(3),m,GF(3))").is_err());
        // sidecar ideal that is not an ideal of the base
        assert!(e.elaborate_str("Quot(Zn(10),i)").is_err());
    }
}
