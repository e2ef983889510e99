//! Deterministic corpus of small rings.
//!
//! The quick profile covers every `Z_n` for `n <= 36`, the small fields,
//! `M_2(F_2)`, upper triangular rings over `F_2` with their formal triangular
//! presentations, all ordered products of two rings from a fixed small pool,
//! and the corner/quotient closure of those up to order 64. The full profile
//! extends the moduli to 64, adds `T_4(F_2)`, `T_2(F_3)`, a structured
//! `M_2(F_3)`, the named triangular instances, and closes corners and
//! quotients up to order 256. Generation is byte-identical across runs for a
//! fixed profile and seed.

use std::collections::BTreeSet;
use std::sync::Arc;

use vnl_core::construct::BuildConfig;
use vnl_core::element::is_regular;
use vnl_core::structure::{ideal_generated_by, idempotents, is_regular_ideal, SubsetIdeal};
use vnl_core::triangular::TriangularRing;
use vnl_core::Ring;

use crate::expr::Elaborator;
use crate::report::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    pub fn name(&self) -> &'static str {
        match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        }
    }

    pub fn parse(s: &str) -> Result<Self, HarnessError> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(HarnessError::Usage(format!(
                "unknown profile {other:?} (expected quick or full)"
            ))),
        }
    }
}

/// Extra structure carried by corpus entries whose construction has parts
/// the checks want to see.
#[derive(Clone)]
pub enum EntryParts {
    Plain,
    Product(Vec<Arc<Ring>>),
    Triangular(Arc<TriangularRing>),
}

#[derive(Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub ring: Arc<Ring>,
    pub parts: EntryParts,
}

impl CorpusEntry {
    fn plain(label: impl Into<String>, ring: Arc<Ring>) -> Self {
        CorpusEntry {
            label: label.into(),
            ring,
            parts: EntryParts::Plain,
        }
    }

    pub fn triangular(&self) -> Option<&Arc<TriangularRing>> {
        match &self.parts {
            EntryParts::Triangular(t) => Some(t),
            _ => None,
        }
    }
}

/// FNV-1a over the dense tables; used only to deduplicate derived corpus
/// entries, so a dropped duplicate is the worst a collision could cause.
fn table_fingerprint(ring: &Ring) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut put = |x: usize| {
        for b in (x as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    put(ring.order());
    put(ring.zero());
    put(ring.one());
    for a in 0..ring.order() {
        put(ring.neg(a));
        for b in 0..ring.order() {
            put(ring.add(a, b));
            put(ring.mul(a, b));
        }
    }
    h
}

pub fn generate_corpus(
    profile: Profile,
    cfg: &BuildConfig,
) -> Result<Vec<CorpusEntry>, HarnessError> {
    let cfg = cfg.clone();
    let elab = Elaborator::new(cfg.clone());
    let mut entries: Vec<CorpusEntry> = Vec::new();

    let push_expr = |entries: &mut Vec<CorpusEntry>, text: &str| -> Result<(), HarnessError> {
        let e = elab.elaborate_str(text)?;
        let parts = match e.triangular {
            Some(t) => EntryParts::Triangular(t),
            None => EntryParts::Plain,
        };
        entries.push(CorpusEntry {
            label: text.to_string(),
            ring: e.ring,
            parts,
        });
        Ok(())
    };

    let max_n = match profile {
        Profile::Quick => 36,
        Profile::Full => 64,
    };
    for n in 1..=max_n {
        push_expr(&mut entries, &format!("Zn({n})"))?;
    }
    push_expr(&mut entries, "GF(2)")?;
    push_expr(&mut entries, "GF(3)")?;
    push_expr(&mut entries, "GF(2,2,x^2+x+1)")?;
    push_expr(&mut entries, "M(2,GF(2))")?;
    push_expr(&mut entries, "T(2,GF(2))")?;
    push_expr(&mut entries, "T(3,GF(2))")?;
    push_expr(&mut entries, "Tri(GF(2),self,GF(2))")?;
    push_expr(&mut entries, "Tri(T(2,GF(2)),col,GF(2))")?;

    // ordered products of any two of the pool
    let pool = ["Zn(4)", "GF(2)", "GF(3)", "T(2,GF(2))"];
    for a in pool {
        for b in pool {
            let text = format!("Prod({a},{b})");
            let e = elab.elaborate_str(&text)?;
            let factors = vec![
                elab.elaborate_str(a)?.ring,
                elab.elaborate_str(b)?.ring,
            ];
            entries.push(CorpusEntry {
                label: text,
                ring: e.ring,
                parts: EntryParts::Product(factors),
            });
        }
    }

    if profile == Profile::Full {
        push_expr(&mut entries, "T(4,GF(2))")?;
        push_expr(&mut entries, "T(2,GF(3))")?;
        // structured representation, forced below the dense cap
        {
            let structured_cap = cfg.dense_cap.min(64);
            let structured_elab = Elaborator::new(cfg.clone().with_dense_cap(structured_cap));
            let e = structured_elab.elaborate_str("M(2,GF(3))")?;
            entries.push(CorpusEntry::plain("M(2,GF(3))", e.ring));
        }
        push_expr(&mut entries, "Tri(M(2,GF(2)),col,GF(2))")?;
        push_expr(&mut entries, "Tri(M(2,GF(2)),lastcol,T(2,GF(2)))")?;
        push_expr(
            &mut entries,
            "Tri(Prod(GF(2),GF(2)),factor1,Prod(GF(2),GF(2)))",
        )?;
        push_expr(
            &mut entries,
            "Tri(Prod(GF(2),M(2,GF(2))),factor1,Prod(GF(2),M(2,GF(2))))",
        )?;
        push_expr(&mut entries, "Tri(M(2,GF(2)),self,M(2,GF(2)))")?;
    }

    // corner/quotient closure of the primary entries, deduplicated against
    // everything already present by dense-table fingerprint
    let derived_cap = match profile {
        Profile::Quick => 64,
        Profile::Full => 256,
    };
    let mut seen: BTreeSet<u64> = entries
        .iter()
        .filter(|e| e.ring.order() <= derived_cap)
        .map(|e| table_fingerprint(&e.ring))
        .collect();
    let primaries: Vec<(String, Arc<Ring>)> = entries
        .iter()
        .map(|e| (e.label.clone(), e.ring.clone()))
        .collect();

    for (label, ring) in &primaries {
        for &e in idempotents(ring) {
            if e == ring.zero() || e == ring.one() {
                continue;
            }
            let corner = vnl_core::construct::build_corner(ring, e, &cfg)?;
            if corner.ring().order() > derived_cap {
                continue;
            }
            let fp = table_fingerprint(corner.ring());
            if seen.insert(fp) {
                entries.push(CorpusEntry::plain(
                    format!("Corner({label},{e})"),
                    corner.ring().clone(),
                ));
            }
        }
    }

    for (label, ring) in &primaries {
        if ring.order() > derived_cap {
            continue;
        }
        for ideal in regular_ideals(ring) {
            if ideal.order() <= 1 {
                continue;
            }
            let quotient = vnl_core::construct::build_quotient(ring, &ideal, &cfg)?;
            let fp = table_fingerprint(quotient.ring());
            if seen.insert(fp) {
                entries.push(CorpusEntry::plain(
                    format!("Quot({label},{})", ideal.label),
                    quotient.ring().clone(),
                ));
            }
        }
    }

    Ok(entries)
}

/// All regular two-sided ideals of a ring, as closure-sums of the regular
/// principal ideals, labeled by their generator sets. Includes the zero
/// ideal.
pub fn regular_ideals(ring: &Arc<Ring>) -> Vec<SubsetIdeal> {
    let mut principals: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (gens, members)
    for a in 0..ring.order() {
        if a == ring.zero() || !is_regular(ring, a) {
            continue;
        }
        let ideal = ideal_generated_by(ring, &[a]);
        if is_regular_ideal(ring, &ideal) && !principals.iter().any(|(_, m)| *m == ideal.members) {
            principals.push((vec![a], ideal.members));
        }
    }
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![], vec![ring.zero()])];
    let mut i = 0;
    while i < found.len() {
        let (gens, _) = found[i].clone();
        i += 1;
        for (pgens, _) in &principals {
            let mut union_gens = gens.clone();
            union_gens.extend_from_slice(pgens);
            union_gens.sort_unstable();
            union_gens.dedup();
            if union_gens == gens {
                continue;
            }
            let sum = ideal_generated_by(ring, &union_gens);
            if !found.iter().any(|(_, m)| *m == sum.members) {
                found.push((union_gens, sum.members));
            }
        }
    }
    found
        .into_iter()
        .map(|(gens, members)| {
            let label = if gens.is_empty() {
                "gen0".to_string()
            } else {
                format!(
                    "gen{}",
                    gens.iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join("_")
                )
            };
            SubsetIdeal {
                members,
                sidedness: vnl_core::structure::Sidedness::TwoSided,
                label,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_cfg() -> BuildConfig {
        BuildConfig {
            seed: 7,
            ..BuildConfig::default()
        }
    }

    #[test]
    fn quick_corpus_contents() {
        let corpus = generate_corpus(Profile::Quick, &test_cfg()).unwrap();
        let labels: Vec<&str> = corpus.iter().map(|e| e.label.as_str()).collect();
        assert!(labels.contains(&"Zn(12)"));
        assert!(labels.contains(&"T(3,GF(2))"));
        assert!(labels.contains(&"Tri(T(2,GF(2)),col,GF(2))"));
        assert!(labels.contains(&"Prod(Zn(4),GF(3))"));
        assert!(corpus.iter().all(|e| e.ring.order() <= 64
            || matches!(e.parts, EntryParts::Plain | EntryParts::Product(_))
            || e.ring.order() <= 256));
        // deterministic across runs
        let again = generate_corpus(Profile::Quick, &test_cfg()).unwrap();
        let labels2: Vec<&str> = again.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, labels2);
    }

    #[test]
    fn full_corpus_contents() {
        let corpus = generate_corpus(Profile::Full, &test_cfg()).unwrap();
        let labels: Vec<&str> = corpus.iter().map(|e| e.label.as_str()).collect();
        assert!(labels.contains(&"T(4,GF(2))"));
        assert!(labels.contains(&"M(2,GF(3))"));
        assert!(labels.contains(&"Tri(M(2,GF(2)),self,M(2,GF(2)))"));
        let t4 = corpus.iter().find(|e| e.label == "T(4,GF(2))").unwrap();
        assert_eq!(t4.ring.order(), 1024);
        let m2f3 = corpus.iter().find(|e| e.label == "M(2,GF(3))").unwrap();
        assert_eq!(
            m2f3.ring.repr_kind(),
            vnl_core::ring::ReprKind::Structured
        );
    }

    #[test]
    fn regular_ideal_enumeration() {
        let cfg = BuildConfig::default();
        let z12 = vnl_core::construct::build_cyclic(12, &cfg).unwrap();
        let ideals = regular_ideals(&z12);
        // {0}, {0,4,8}
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().any(|i| i.members == vec![0, 4, 8]));

        let z30 = vnl_core::construct::build_cyclic(30, &cfg).unwrap();
        // Z_30 is regular: the whole ideal lattice is regular, one ideal per divisor
        assert_eq!(regular_ideals(&z30).len(), 8);
    }
}
