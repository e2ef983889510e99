//! The registry of executable theorem checks.
//!
//! Each check runs a named statement over every corpus instance satisfying
//! its hypotheses and reports witness-carrying failures. The registry is
//! code, not configuration, so every hypothesis (abelian-only, order budget)
//! is explicit here. Checks that compare a fast path against brute force
//! raise [`HarnessError::Inconsistency`] on disagreement: that outcome is an
//! implementation bug, distinct from a theorem failure.

use std::sync::Arc;
use std::time::Instant;

use vnl_core::construct::{
    build_corner, build_cyclic, build_field, build_matrix_ring, build_product, build_quotient,
    build_upper_triangular, center, BuildConfig,
};
use vnl_core::element;
use vnl_core::properties::{
    classify_semiperfect_vnl, is_n_vnl, is_vnl_bool, nj_equivalence_conditions,
    vnl_via_corner_condition, vnl_via_mr_local, SemiperfectVnlClass,
};
use vnl_core::structure::{
    block_members, classify_ring, corner_is_division, corner_is_local, corner_is_nj,
    corner_is_regular, corner_jacobson, corner_members, corner_vnl_witness, idempotent_census,
    idempotents, is_primitive_idempotent, is_simple, jacobson_flags, jacobson_members,
    maximal_regular_ideal, peirce_corner_product, primitive_decomposition,
    projectives_isomorphic,
};
use vnl_core::triangular::{
    is_partial_module, regular_witness_componentwise, regular_witness_unit_corner,
    vnl_criterion_componentwise, Bimodule, Side,
};
use vnl_core::Ring;

use crate::corpus::{CorpusEntry, Profile};
use crate::expr::Elaborator;
use crate::report::{Failure, HarnessError, TheoremReport};

/// Order caps for the heavier sweeps. These are part of the check
/// definitions, not runtime configuration.
const CORNER_SWEEP_CAP: usize = 2048;
const MATRIX_BASE_CAP: usize = 8;
const UNIMODULAR_CAP: usize = 32;
const TRIANGULAR_ELEMENT_CAP: usize = 512;
const REGULAR_IDEAL_CAP: usize = 128;
const NVNL_SWEEP_CAP: usize = 64;

pub struct CheckContext<'a> {
    pub corpus: &'a [CorpusEntry],
    pub cfg: BuildConfig,
    pub profile: Profile,
}

impl CheckContext<'_> {
    fn corpus_description(&self) -> String {
        format!("{} corpus ({} rings)", self.profile.name(), self.corpus.len())
    }
}

pub struct CheckOutcome {
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckOutcome {
    fn new() -> Self {
        CheckOutcome {
            instances_checked: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, ring: &str, witness: impl Into<String>, condition: impl Into<String>) {
        self.failures.push(Failure {
            ring: ring.to_string(),
            witness: witness.into(),
            condition: condition.into(),
        });
    }
}

type CheckFn = fn(&CheckContext) -> Result<CheckOutcome, HarnessError>;

pub struct CheckDef {
    pub id: &'static str,
    pub description: &'static str,
    pub run: CheckFn,
}

pub const REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "prop-2.2",
        description: "the center of a VNL ring is VNL",
        run: check_center_vnl,
    },
    CheckDef {
        id: "cor-2.3",
        description: "a VNL ring is indecomposable iff its center is local",
        run: check_indecomposable_iff_center_local,
    },
    CheckDef {
        id: "lemma-2.4",
        description: "in a VNL ring one of eRe, (1-e)R(1-e) is regular for every idempotent e",
        run: check_corner_pair_regular,
    },
    CheckDef {
        id: "cor-2.6",
        description: "M_2(R) is VNL iff R is regular",
        run: check_matrix_vnl_iff_regular,
    },
    CheckDef {
        id: "cor-2.7",
        description: "in an abelian VNL ring every unimodular row has a regular entry",
        run: check_unimodular_rows_have_regular_entry,
    },
    CheckDef {
        id: "prop-2.8",
        description: "componentwise regularity criterion for triangular rings matches brute force",
        run: check_triangular_regularity_criterion,
    },
    CheckDef {
        id: "prop-2.11",
        description: "no nonzero module over M_2(F_q) is partial",
        run: check_matrix_modules_not_partial,
    },
    CheckDef {
        id: "thm-2.12",
        description: "componentwise VNL criterion for triangular rings matches brute force",
        run: check_triangular_vnl_criterion,
    },
    CheckDef {
        id: "cor-2.13",
        description: "T_n(F_q) is VNL exactly for n = 2, 3 over a field, and T_2(Z_4) is not",
        run: check_upper_triangular_vnl_table,
    },
    CheckDef {
        id: "cor-2.14",
        description: "triangular rings over a regular ring and a local ring are VNL",
        run: check_regular_over_local_vnl,
    },
    CheckDef {
        id: "cor-2.15",
        description: "triangular rings over simple artinian rings are VNL iff M = 0 or a side is division",
        run: check_simple_artinian_triangular,
    },
    CheckDef {
        id: "cor-2.16",
        description: "Tri(R, I, R) for commutative R is VNL exactly in the field-times-regular shape",
        run: check_commutative_ideal_triangular,
    },
    CheckDef {
        id: "cor-2.17",
        description: "Tri(R, I, R) for semisimple-shaped R is VNL with its corner reduction",
        run: check_semisimple_ideal_triangular,
    },
    CheckDef {
        id: "lemma-2.18",
        description: "corners of VNL rings are VNL",
        run: check_corners_of_vnl_are_vnl,
    },
    CheckDef {
        id: "thm-3.1",
        description: "abelian: VNL iff exchange with the corner condition",
        run: check_abelian_corner_condition,
    },
    CheckDef {
        id: "lemma-3.4",
        description: "R is VNL iff R/I is VNL for every regular ideal I",
        run: check_vnl_iff_quotient_by_regular_ideal,
    },
    CheckDef {
        id: "thm-3.5",
        description: "abelian: VNL iff the quotient by the maximal regular ideal is local",
        run: check_abelian_mr_quotient_local,
    },
    CheckDef {
        id: "example-3.3",
        description: "the maximal regular ideal of T_2(D) is zero",
        run: check_t2_maximal_regular_ideal_zero,
    },
    CheckDef {
        id: "lemma-4.1",
        description: "XY = 0 or YX = 0 forces the off-diagonal Peirce pieces into the radical",
        run: check_offdiagonal_in_radical,
    },
    CheckDef {
        id: "lemma-4.2",
        description: "local idempotents have isomorphic projectives or radical cross blocks",
        run: check_local_idempotent_dichotomy,
    },
    CheckDef {
        id: "cor-4.3",
        description: "two-primitive semiperfect rings are VNL exactly in the matrix or division-local shape",
        run: check_two_primitive_shapes,
    },
    CheckDef {
        id: "cor-4.4",
        description: "three-primitive semiperfect rings are VNL exactly in the three listed shapes",
        run: check_three_primitive_shapes,
    },
    CheckDef {
        id: "lemma-4.5",
        description: "closed-form inner inverses and the 2x2 unit-inverse formula verify",
        run: check_closed_form_witnesses,
    },
    CheckDef {
        id: "thm-4.6",
        description: "every VNL corpus ring classifies into a verifying semiperfect shape",
        run: check_semiperfect_classification,
    },
    CheckDef {
        id: "thm-4.7",
        description: "semiperfect VNL rings are 2-VNL",
        run: check_vnl_implies_2vnl,
    },
    CheckDef {
        id: "thm-4.8",
        description: "a primitive idempotent with radical corner forces the complementary regular shape",
        run: check_primitive_radical_corner_shape,
    },
    CheckDef {
        id: "lemma-5.1",
        description: "semipotent rings with radical-free proper corners confine cross blocks to the radical",
        run: check_semipotent_cross_blocks,
    },
    CheckDef {
        id: "prop-5.2",
        description: "VNL, exchange, potent, semipotent and NJ coincide under the corner hypotheses",
        run: check_nj_equivalence,
    },
];

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id == id)
}

pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Runs the named checks in the order given (all of them when `ids` is
/// empty), timing each.
pub fn run_theorem_suite(
    ids: &[String],
    ctx: &CheckContext,
) -> Result<Vec<TheoremReport>, HarnessError> {
    let defs: Vec<&CheckDef> = if ids.is_empty() {
        REGISTRY.iter().collect()
    } else {
        ids.iter()
            .map(|id| {
                find_check(id).ok_or_else(|| {
                    HarnessError::Usage(format!(
                        "unknown theorem id {id:?}; known ids: {}",
                        registry_ids().join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for def in defs {
        let start = Instant::now();
        let outcome = (def.run)(ctx)?;
        reports.push(TheoremReport {
            theorem_id: def.id.to_string(),
            corpus_description: ctx.corpus_description(),
            instances_checked: outcome.instances_checked,
            failures: outcome.failures,
            wall_time_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// individual checks

fn check_center_vnl(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if !is_vnl_bool(&entry.ring) {
            continue;
        }
        out.instances_checked += 1;
        let c = center(&entry.ring, &ctx.cfg)?;
        if !is_vnl_bool(c.ring()) {
            out.fail(
                &entry.label,
                format!("center of order {}", c.ring().order()),
                "center of a VNL ring must be VNL",
            );
        }
    }
    Ok(out)
}

fn check_indecomposable_iff_center_local(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if !is_vnl_bool(&entry.ring) {
            continue;
        }
        out.instances_checked += 1;
        let indecomposable = !classify_ring(&entry.ring).has_nontrivial_central_idempotent;
        let center_local = classify_ring(center(&entry.ring, &ctx.cfg)?.ring()).local;
        if indecomposable != center_local {
            out.fail(
                &entry.label,
                format!("indecomposable={indecomposable}, center local={center_local}"),
                "a VNL ring is indecomposable iff its center is local",
            );
        }
    }
    Ok(out)
}

fn check_corner_pair_regular(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP || !is_vnl_bool(&entry.ring) {
            continue;
        }
        let ring = &entry.ring;
        for &e in idempotents(ring) {
            out.instances_checked += 1;
            if !corner_is_regular(ring, e) && !corner_is_regular(ring, ring.one_minus(e)) {
                out.fail(
                    &entry.label,
                    format!("idempotent {e}"),
                    "one of eRe, (1-e)R(1-e) must be regular in a VNL ring",
                );
            }
        }
    }
    Ok(out)
}

fn check_matrix_vnl_iff_regular(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    // structured representation: the scan is witness-driven and never needs
    // the full tables
    let cfg = ctx.cfg.clone().with_dense_cap(512);
    for entry in ctx.corpus {
        if entry.ring.order() > MATRIX_BASE_CAP {
            continue;
        }
        out.instances_checked += 1;
        let m2 = build_matrix_ring(2, &entry.ring, &cfg)?;
        let matrix_vnl = is_vnl_bool(m2.ring());
        let base_regular = classify_ring(&entry.ring).regular;
        if matrix_vnl != base_regular {
            out.fail(
                &entry.label,
                format!("M_2 VNL={matrix_vnl}, base regular={base_regular}"),
                "M_2(R) is VNL iff R is regular",
            );
        }
    }
    Ok(out)
}

fn check_unimodular_rows_have_regular_entry(
    ctx: &CheckContext,
) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > UNIMODULAR_CAP
            || !classify_ring(&entry.ring).abelian
            || !is_vnl_bool(&entry.ring)
        {
            continue;
        }
        for n in [2usize, 3] {
            out.instances_checked += 1;
            let report = is_n_vnl(&entry.ring, n)?;
            if !report.holds {
                let w = report.witness.expect("negative reports carry witnesses");
                out.fail(
                    &entry.label,
                    format!("{:?}", w.elements),
                    "a unimodular row over an abelian VNL ring must contain a regular entry",
                );
            }
        }
    }
    Ok(out)
}

fn check_triangular_regularity_criterion(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        let Some(tri) = entry.triangular() else {
            continue;
        };
        if tri.ring().order() > TRIANGULAR_ELEMENT_CAP {
            continue;
        }
        for idx in 0..tri.ring().order() {
            out.instances_checked += 1;
            let fast = regular_witness_componentwise(tri, idx)?;
            let brute = element::regular_witness(tri.ring(), idx);
            if fast.is_some() != brute.is_some() {
                return Err(HarnessError::Inconsistency(format!(
                    "componentwise regularity disagrees with brute force in {} at element {idx}",
                    entry.label
                )));
            }
        }
    }
    Ok(out)
}

fn check_matrix_modules_not_partial(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for q in [2u64, 3] {
        let f = build_field(q, 1, &[0, 1], &ctx.cfg)?;
        let mx = build_matrix_ring(2, f.ring(), &ctx.cfg)?;
        let col = Bimodule::matrix_column_bimodule(&mx, "col")?;
        let ring = mx.ring();
        for m in 0..col.order() {
            if m == col.zero() {
                continue;
            }
            out.instances_checked += 1;
            let split = idempotents(ring).iter().any(|&e| {
                col.lact(e, m) != col.zero() && col.lact(ring.one_minus(e), m) != col.zero()
            });
            if !split {
                out.fail(
                    &format!("column module over M(2,GF({q}))"),
                    format!("m = {m}"),
                    "every nonzero column must be split by some idempotent",
                );
            }
        }
        // and therefore the module is not partial on the matrix side
        let report = is_partial_module(&col, Side::Left);
        out.instances_checked += 1;
        if report.holds {
            out.fail(
                &format!("column module over M(2,GF({q}))"),
                "no witness",
                "no nonzero module over a proper matrix ring is partial",
            );
        }
    }
    Ok(out)
}

fn check_triangular_vnl_criterion(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        let Some(tri) = entry.triangular() else {
            continue;
        };
        out.instances_checked += 1;
        let fast = vnl_criterion_componentwise(tri.module()).holds;
        let brute = is_vnl_bool(tri.ring());
        if fast != brute {
            return Err(HarnessError::Inconsistency(format!(
                "componentwise VNL criterion ({fast}) disagrees with brute force ({brute}) on {}",
                entry.label
            )));
        }
    }
    Ok(out)
}

fn check_upper_triangular_vnl_table(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for q in [2u64, 3] {
        let f = build_field(q, 1, &[0, 1], &ctx.cfg)?;
        for n in [2usize, 3, 4] {
            let order = (f.ring().order() as u64).pow((n * (n + 1) / 2) as u32);
            if order > ctx.cfg.dense_cap as u64 {
                continue; // T_4(F_3) exceeds the analyzable budget
            }
            out.instances_checked += 1;
            let t = build_upper_triangular(n, f.ring(), &ctx.cfg)?;
            let expected = n <= 3;
            let actual = is_vnl_bool(t.ring());
            if actual != expected {
                out.fail(
                    &format!("T({n},GF({q}))"),
                    format!("vnl={actual}"),
                    "T_n over a field is VNL exactly for n = 2, 3",
                );
            }
        }
    }
    // a non-division base fails even at n = 2
    out.instances_checked += 1;
    let z4 = build_cyclic(4, &ctx.cfg)?;
    let t2z4 = build_upper_triangular(2, &z4, &ctx.cfg)?;
    if is_vnl_bool(t2z4.ring()) {
        out.fail(
            "T(2,Zn(4))",
            "vnl=true",
            "T_2 over a non-division ring must not be VNL",
        );
    }
    Ok(out)
}

fn check_regular_over_local_vnl(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        let Some(tri) = entry.triangular() else {
            continue;
        };
        let left = classify_ring(tri.left());
        let right = classify_ring(tri.right());
        if !(left.regular && right.local) {
            continue;
        }
        out.instances_checked += 1;
        if !is_vnl_bool(tri.ring()) {
            out.fail(
                &entry.label,
                "",
                "a triangular ring over a regular ring and a local ring must be VNL",
            );
        }
    }
    // the matrix-over-triangular instance with the zero-first-column module
    let elab = Elaborator::new(ctx.cfg.clone());
    let tri = elab
        .elaborate_str("Tri(M(2,GF(2)),lastcol,T(2,GF(2)))")?
        .ring;
    out.instances_checked += 1;
    if !is_vnl_bool(&tri) {
        out.fail(
            "Tri(M(2,GF(2)),lastcol,T(2,GF(2)))",
            "",
            "the zero-first-column bimodule instance must be VNL",
        );
    }
    Ok(out)
}

fn check_simple_artinian_triangular(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        let Some(tri) = entry.triangular() else {
            continue;
        };
        if !is_simple(tri.left()) || !is_simple(tri.right()) {
            continue;
        }
        out.instances_checked += 1;
        let expected = tri.module().order() == 1
            || classify_ring(tri.left()).division
            || classify_ring(tri.right()).division;
        let actual = is_vnl_bool(tri.ring());
        if actual != expected {
            out.fail(
                &entry.label,
                format!("vnl={actual}, expected={expected}"),
                "simple artinian sides: VNL iff M = 0 or one side is a division ring",
            );
        }
    }
    // constructed instances: M = 0 between two matrix rings, and a division
    // ring on the left of a matrix ring
    let elab = Elaborator::new(ctx.cfg.clone());
    for (text, expected) in [
        ("Tri(M(2,GF(2)),zero,M(2,GF(2)))", true),
        ("Tri(GF(2),row,M(2,GF(2)))", true),
    ] {
        out.instances_checked += 1;
        let ring = elab.elaborate_str(text)?.ring;
        if is_vnl_bool(&ring) != expected {
            out.fail(text, format!("vnl={}", !expected), "expected value mismatch");
        }
    }
    Ok(out)
}

fn check_commutative_ideal_triangular(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    let elab = Elaborator::new(ctx.cfg.clone());
    for (text, expected) in [
        // R = F_2 x F_2 with I = F_2 x 0: the field-times-regular shape
        ("Tri(Prod(GF(2),GF(2)),factor1,Prod(GF(2),GF(2)))", true),
        // R = Z_4 is not regular
        ("Tri(Zn(4),self,Zn(4))", false),
        // I = R itself is not of the F x 0 shape
        ("Tri(Prod(GF(2),GF(2)),self,Prod(GF(2),GF(2)))", false),
    ] {
        out.instances_checked += 1;
        let ring = elab.elaborate_str(text)?.ring;
        let actual = is_vnl_bool(&ring);
        if actual != expected {
            out.fail(
                text,
                format!("vnl={actual}"),
                "commutative Tri(R, I, R) is VNL exactly in the field-times-regular shape",
            );
        }
    }
    Ok(out)
}

fn check_semisimple_ideal_triangular(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    // R = F_2 x M_2(F_2), I = F_2 x 0
    let f2 = build_field(2, 1, &[0, 1], &ctx.cfg)?.ring().clone();
    let m2 = build_matrix_ring(2, &f2, &ctx.cfg)?.ring().clone();
    let p = build_product(&[f2.clone(), m2], &ctx.cfg)?;
    let ideal = vnl_core::structure::ideal_generated(p.ring(), p.inject(0, f2.one()));
    let module = Arc::new(Bimodule::ideal_bimodule(p.ring(), &ideal, "factor1")?);
    let tri =
        vnl_core::triangular::build_formal_triangular(p.ring(), &module, p.ring(), &ctx.cfg)?;
    out.instances_checked += 1;
    if !is_vnl_bool(tri.ring()) {
        out.fail(
            "Tri(Prod(GF(2),M(2,GF(2))),factor1,Prod(GF(2),M(2,GF(2))))",
            "",
            "the division-times-semisimple instance must be VNL",
        );
    }
    // the central corner at E = (e, 0, e), e = (1, 0), reduces to the
    // 2x2 triangular shape over F_2 and must be VNL of order 8
    let e = p.inject(0, f2.one());
    let big_e = tri.encode(e, module.zero(), e);
    let corner = build_corner(tri.ring(), big_e, &ctx.cfg)?;
    out.instances_checked += 1;
    if corner.ring().order() != 8 || !is_vnl_bool(corner.ring()) {
        out.fail(
            "Corner(Tri(Prod(GF(2),M(2,GF(2))),factor1,...),E)",
            format!("order {}", corner.ring().order()),
            "the E-corner must be the order-8 VNL triangular ring",
        );
    }
    Ok(out)
}

fn check_corners_of_vnl_are_vnl(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP || !is_vnl_bool(&entry.ring) {
            continue;
        }
        let ring = &entry.ring;
        for &e in idempotents(ring) {
            out.instances_checked += 1;
            if let Some(x) = corner_vnl_witness(ring, e) {
                out.fail(
                    &entry.label,
                    format!("idempotent {e}, corner element {x}"),
                    "corners of VNL rings must be VNL",
                );
            }
        }
    }
    Ok(out)
}

fn check_abelian_corner_condition(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if !classify_ring(&entry.ring).abelian {
            continue;
        }
        out.instances_checked += 1;
        let fast = vnl_via_corner_condition(&entry.ring).holds;
        let brute = is_vnl_bool(&entry.ring);
        if fast != brute {
            return Err(HarnessError::Inconsistency(format!(
                "corner-condition criterion ({fast}) disagrees with brute force ({brute}) on abelian ring {}",
                entry.label
            )));
        }
    }
    Ok(out)
}

fn check_vnl_iff_quotient_by_regular_ideal(
    ctx: &CheckContext,
) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > REGULAR_IDEAL_CAP {
            continue;
        }
        let vnl = is_vnl_bool(&entry.ring);
        for ideal in crate::corpus::regular_ideals(&entry.ring) {
            out.instances_checked += 1;
            let q = build_quotient(&entry.ring, &ideal, &ctx.cfg)?;
            let q_vnl = is_vnl_bool(q.ring());
            if q_vnl != vnl {
                out.fail(
                    &entry.label,
                    format!("regular ideal {} of order {}", ideal.label, ideal.order()),
                    "R is VNL iff R/I is VNL for a regular ideal I",
                );
            }
        }
    }
    Ok(out)
}

fn check_abelian_mr_quotient_local(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if !classify_ring(&entry.ring).abelian {
            continue;
        }
        out.instances_checked += 1;
        let fast = vnl_via_mr_local(&entry.ring, &ctx.cfg)?.holds;
        let brute = is_vnl_bool(&entry.ring);
        if fast != brute {
            return Err(HarnessError::Inconsistency(format!(
                "maximal-regular-quotient criterion ({fast}) disagrees with brute force ({brute}) on abelian ring {}",
                entry.label
            )));
        }
    }
    Ok(out)
}

fn check_t2_maximal_regular_ideal_zero(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for q in [2u64, 3] {
        out.instances_checked += 1;
        let f = build_field(q, 1, &[0, 1], &ctx.cfg)?;
        let t2 = build_upper_triangular(2, f.ring(), &ctx.cfg)?;
        let mr = maximal_regular_ideal(t2.ring())?;
        if mr.members != vec![t2.ring().zero()] {
            out.fail(
                &format!("T(2,GF({q}))"),
                format!("M(R) has order {}", mr.order()),
                "the maximal regular ideal of T_2 over a field is zero",
            );
        }
    }
    Ok(out)
}

fn check_offdiagonal_in_radical(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let ring = &entry.ring;
        for &e in idempotents(ring) {
            out.instances_checked += 1;
            let blocks = peirce_corner_product(ring, e)?;
            if (blocks.xy_zero || blocks.yx_zero)
                && !(blocks.x_in_jacobson && blocks.y_in_jacobson)
            {
                out.fail(
                    &entry.label,
                    format!("idempotent {e}"),
                    "XY = 0 or YX = 0 must force X and Y into the radical",
                );
            }
        }
    }
    Ok(out)
}

fn check_local_idempotent_dichotomy(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let ring = &entry.ring;
        let jac = jacobson_flags(ring);
        let locals: Vec<usize> = idempotent_census(ring)
            .local
            .iter()
            .copied()
            .filter(|&e| e != ring.zero())
            .collect();
        for (i, &e1) in locals.iter().enumerate() {
            for &e2 in &locals[i..] {
                out.instances_checked += 1;
                let iso = projectives_isomorphic(ring, e1, e2)?;
                let cross_in_radical = block_members(ring, e1, e2).iter().all(|&x| jac[x])
                    && block_members(ring, e2, e1).iter().all(|&x| jac[x]);
                if !iso && !cross_in_radical {
                    out.fail(
                        &entry.label,
                        format!("local idempotents {e1}, {e2}"),
                        "either e1R = e2R as projectives or both cross blocks lie in the radical",
                    );
                }
            }
        }
    }
    Ok(out)
}

/// `eRf · fRe = 0` inside the ambient ring.
fn blocks_product_zero(ring: &Ring, e: usize, f: usize) -> bool {
    let erf = block_members(ring, e, f);
    let fre = block_members(ring, f, e);
    erf.iter()
        .all(|&x| fre.iter().all(|&y| ring.mul(x, y) == ring.zero()))
}

fn check_two_primitive_shapes(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let ring = &entry.ring;
        let decomp = primitive_decomposition(ring);
        if decomp.len() != 2 {
            continue;
        }
        out.instances_checked += 1;
        let (e1, e2) = (decomp.idempotents[0], decomp.idempotents[1]);
        let matrix_shape = projectives_isomorphic(ring, e1, e2)? && corner_is_division(ring, e1);
        let division_local_shape = [(e1, e2), (e2, e1)].iter().any(|&(d, l)| {
            corner_is_division(ring, d) && corner_is_local(ring, l) && blocks_product_zero(ring, d, l)
        });
        let expected = matrix_shape || division_local_shape;
        let actual = is_vnl_bool(ring);
        if actual != expected {
            out.fail(
                &entry.label,
                format!("vnl={actual}, matrix shape={matrix_shape}, division-local shape={division_local_shape}"),
                "two-primitive rings are VNL exactly in the matrix or division-local shape",
            );
        }
    }
    Ok(out)
}

fn check_three_primitive_shapes(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let ring = &entry.ring;
        let decomp = primitive_decomposition(ring);
        if decomp.len() != 3 {
            continue;
        }
        out.instances_checked += 1;
        let es = &decomp.idempotents;
        let matrix_shape = projectives_isomorphic(ring, es[0], es[1])?
            && projectives_isomorphic(ring, es[0], es[2])?
            && corner_is_division(ring, es[0]);
        // f over nonempty proper subset sums
        let subset_sums: Vec<usize> = (1usize..7)
            .map(|mask| {
                (0..3)
                    .filter(|i| mask & (1 << i) != 0)
                    .fold(ring.zero(), |acc, i| ring.add(acc, es[i]))
            })
            .collect();
        let semisimple_local_shape = subset_sums.iter().any(|&f| {
            let g = ring.one_minus(f);
            corner_jacobson(ring, f) == vec![ring.zero()]
                && corner_is_local(ring, g)
                && blocks_product_zero(ring, f, g)
        });
        let nj_division_shape = subset_sums
            .iter()
            .filter(|&&f| {
                // sums of exactly two primitives
                corner_members(ring, f).len() != ring.order()
                    && es.iter().filter(|&&e| ring.mul(f, e) == e).count() == 2
            })
            .any(|&f| {
                let g = ring.one_minus(f);
                corner_is_nj(ring, f)
                    && corner_is_division(ring, g)
                    && blocks_product_zero(ring, g, f)
            });
        let expected = matrix_shape || semisimple_local_shape || nj_division_shape;
        let actual = is_vnl_bool(ring);
        if actual != expected {
            out.fail(
                &entry.label,
                format!("vnl={actual}, shapes=({matrix_shape},{semisimple_local_shape},{nj_division_shape})"),
                "three-primitive rings are VNL exactly in the three listed shapes",
            );
        }
    }
    Ok(out)
}

fn check_closed_form_witnesses(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    // closed-form inner inverses on every triangular corpus element where the
    // preconditions hold; verification happens inside, a failure surfaces as
    // an inconsistency
    for entry in ctx.corpus {
        let Some(tri) = entry.triangular() else {
            continue;
        };
        if tri.ring().order() > TRIANGULAR_ELEMENT_CAP {
            continue;
        }
        for idx in 0..tri.ring().order() {
            if regular_witness_unit_corner(tri, idx)?.is_some() {
                out.instances_checked += 1;
            }
        }
    }
    // the 2x2 unit-inverse formula on every two-primitive NJ-over-division
    // split of T_3 over small fields
    for q in [2u64, 3] {
        let f = build_field(q, 1, &[0, 1], &ctx.cfg)?;
        let t3 = build_upper_triangular(3, f.ring(), &ctx.cfg)?;
        let ring = t3.ring();
        let decomp = primitive_decomposition(ring);
        for i in 0..decomp.len() {
            for j in i + 1..decomp.len() {
                let split = ring.add(decomp.idempotents[i], decomp.idempotents[j]);
                let checked = validate_unit_inverse_formula(ring, split)?;
                out.instances_checked += checked;
            }
        }
    }
    Ok(out)
}

/// For a split `R = (T X; Y D)` with `T = fRf` NJ, `D = gRg` division and
/// `YX = 0`, every `c = u + x + y + d` with `u` a unit of `T` and `d` a unit
/// of `D` must be invertible with inverse
/// `(u - x d^-1 y)^-1 - u^-1 x d^-1 - d^-1 y (u - x d^-1 y)^-1 + d^-1`.
fn validate_unit_inverse_formula(ring: &Arc<Ring>, f: usize) -> Result<usize, HarnessError> {
    let g = ring.one_minus(f);
    if !(corner_is_nj(ring, f) && corner_is_division(ring, g) && blocks_product_zero(ring, g, f)) {
        return Ok(0);
    }
    let t_members = corner_members(ring, f);
    let d_members = corner_members(ring, g);
    let xs = block_members(ring, f, g);
    let ys = block_members(ring, g, f);
    let corner_inverse = |members: &[usize], identity: usize, u: usize| -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&v| ring.mul(u, v) == identity && ring.mul(v, u) == identity)
    };
    let t_units: Vec<usize> = t_members
        .iter()
        .copied()
        .filter(|&u| corner_inverse(&t_members, f, u).is_some())
        .collect();
    let d_units: Vec<usize> = d_members
        .iter()
        .copied()
        .filter(|&d| corner_inverse(&d_members, g, d).is_some())
        .collect();
    let mut checked = 0;
    for &u in &t_units {
        let u_inv = corner_inverse(&t_members, f, u).expect("u is a corner unit");
        for &d in &d_units {
            let d_inv = corner_inverse(&d_members, g, d).expect("d is a corner unit");
            for &x in &xs {
                for &y in &ys {
                    checked += 1;
                    let c = ring.add(ring.add(u, x), ring.add(y, d));
                    let schur = ring.sub(u, ring.prod(&[x, d_inv, y]));
                    let Some(schur_inv) = corner_inverse(&t_members, f, schur) else {
                        return Err(HarnessError::Inconsistency(format!(
                            "u - x d^-1 y is not a unit of the NJ corner in {} at split {f}",
                            ring.label()
                        )));
                    };
                    let c_inv = ring.add(
                        ring.add(schur_inv, ring.neg(ring.prod(&[u_inv, x, d_inv]))),
                        ring.add(ring.neg(ring.prod(&[d_inv, y, schur_inv])), d_inv),
                    );
                    if ring.mul(c, c_inv) != ring.one() || ring.mul(c_inv, c) != ring.one() {
                        return Err(HarnessError::Inconsistency(format!(
                            "2x2 unit-inverse formula fails in {} at split {f}, u={u}, x={x}, y={y}, d={d}",
                            ring.label()
                        )));
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn check_semiperfect_classification(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        out.instances_checked += 1;
        let class = classify_semiperfect_vnl(&entry.ring, &ctx.cfg)?;
        let vnl = is_vnl_bool(&entry.ring);
        let not_vnl_tag = matches!(class, SemiperfectVnlClass::NotVnl { .. });
        if vnl == not_vnl_tag {
            out.fail(
                &entry.label,
                format!("tag {}", class.tag()),
                "the classification tag must match the brute-force VNL verdict",
            );
        }
        let expected_tag = match entry.label.as_str() {
            "T(2,GF(2))" => Some("TypeR1"),
            "T(3,GF(2))" => Some("TypeR2"),
            "M(2,GF(2))" => Some("Semisimple"),
            _ => None,
        };
        if let Some(expected) = expected_tag {
            if class.tag() != expected {
                out.fail(
                    &entry.label,
                    format!("tag {}", class.tag()),
                    format!("pinned classification {expected}"),
                );
            }
        }
    }
    Ok(out)
}

fn check_vnl_implies_2vnl(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > NVNL_SWEEP_CAP || !is_vnl_bool(&entry.ring) {
            continue;
        }
        out.instances_checked += 1;
        let report = is_n_vnl(&entry.ring, 2)?;
        if !report.holds {
            let w = report.witness.expect("negative reports carry witnesses");
            out.fail(
                &entry.label,
                format!("{:?}", w.elements),
                "a semiperfect VNL ring must be 2-VNL",
            );
        }
    }
    Ok(out)
}

fn check_primitive_radical_corner_shape(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP || !is_vnl_bool(&entry.ring) {
            continue;
        }
        let ring = &entry.ring;
        for &e in idempotents(ring) {
            if !is_primitive_idempotent(ring, e)
                || corner_jacobson(ring, e) == vec![ring.zero()]
            {
                continue;
            }
            out.instances_checked += 1;
            let g = ring.one_minus(e);
            let blocks = peirce_corner_product(ring, e)?;
            let complement_regular = corner_is_regular(ring, g);
            let yx_zero = blocks_product_zero(ring, g, e);
            if !(complement_regular && blocks.x_in_jacobson && blocks.y_in_jacobson && yx_zero) {
                out.fail(
                    &entry.label,
                    format!("primitive idempotent {e}"),
                    "J(eRe) != 0 in a VNL ring forces the complementary regular Peirce shape",
                );
            }
        }
    }
    Ok(out)
}

fn check_semipotent_cross_blocks(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let ring = &entry.ring;
        let proper: Vec<usize> = idempotents(ring)
            .iter()
            .copied()
            .filter(|&e| e != ring.zero() && e != ring.one())
            .collect();
        let applicable = vnl_core::properties::is_semipotent(ring).holds
            && !classify_ring(ring).has_nontrivial_central_idempotent
            && jacobson_members(ring).len() > 1
            && proper
                .iter()
                .all(|&e| corner_jacobson(ring, e) == vec![ring.zero()]);
        if !applicable {
            continue;
        }
        out.instances_checked += 1;
        for &e in &proper {
            let blocks = peirce_corner_product(ring, e)?;
            if !(blocks.x_in_jacobson && blocks.y_in_jacobson) {
                out.fail(
                    &entry.label,
                    format!("proper idempotent {e}"),
                    "both off-diagonal pieces must lie in the radical",
                );
            }
        }
        let jac = jacobson_members(ring);
        for &e in idempotents(ring) {
            if e == ring.zero() {
                continue;
            }
            let fixes_radical = jac
                .iter()
                .all(|&a| ring.mul(a, e) == a && ring.mul(e, a) == a);
            if fixes_radical && e != ring.one() {
                out.fail(
                    &entry.label,
                    format!("idempotent {e}"),
                    "a nonzero idempotent acting as identity on the radical must be 1",
                );
            }
        }
    }
    Ok(out)
}

fn check_nj_equivalence(ctx: &CheckContext) -> Result<CheckOutcome, HarnessError> {
    let mut out = CheckOutcome::new();
    for entry in ctx.corpus {
        if entry.ring.order() > CORNER_SWEEP_CAP {
            continue;
        }
        let report = nj_equivalence_conditions(&entry.ring);
        if !report.applicable {
            continue;
        }
        out.instances_checked += 1;
        if !report.conclusion_checked {
            out.fail(
                &entry.label,
                format!("{:?}", report.flags),
                "VNL, exchange, potent, semipotent and NJ must coincide under the hypotheses",
            );
        }
    }
    Ok(out)
}
