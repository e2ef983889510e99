//! Counterexample searches for the two open questions. Findings are reported
//! as candidates, never asserted as theorems; an empty result means no
//! counterexample up to the searched bound.

use std::time::Instant;

use vnl_core::properties::{is_exchange_ring, is_n_vnl, is_vnl_bool, vnl_via_corner_condition};

use crate::checks::CheckContext;
use crate::report::{Failure, HarnessError, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    /// Is every exchange ring with the corner condition VNL?
    Q53,
    /// Is every VNL ring 2-VNL?
    Q54,
}

impl Question {
    pub fn parse(s: &str) -> Result<Self, HarnessError> {
        match s {
            "q53" => Ok(Question::Q53),
            "q54" => Ok(Question::Q54),
            other => Err(HarnessError::Usage(format!(
                "unknown question tag {other:?} (expected q53 or q54)"
            ))),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Question::Q53 => "question-5.3",
            Question::Q54 => "question-5.4",
        }
    }
}

/// Scans the corpus for candidate counterexamples. The reported "failures"
/// are candidates worth human attention, not theorem violations.
pub fn search_question(
    question: Question,
    ctx: &CheckContext,
) -> Result<TheoremReport, HarnessError> {
    let start = Instant::now();
    let mut candidates = Vec::new();
    let mut instances = 0usize;
    let mut skipped = 0usize;
    match question {
        Question::Q53 => {
            for entry in ctx.corpus {
                instances += 1;
                let exchange = is_exchange_ring(&entry.ring).holds;
                let corner_condition = vnl_via_corner_condition(&entry.ring).holds;
                if exchange && corner_condition && !is_vnl_bool(&entry.ring) {
                    candidates.push(Failure {
                        ring: entry.label.clone(),
                        witness: "exchange with the corner condition but not VNL".into(),
                        condition: "candidate counterexample".into(),
                    });
                }
            }
        }
        Question::Q54 => {
            for entry in ctx.corpus {
                if entry.ring.order() > 64 {
                    skipped += 1;
                    continue;
                }
                if !is_vnl_bool(&entry.ring) {
                    continue;
                }
                instances += 1;
                let report = is_n_vnl(&entry.ring, 2)?;
                if !report.holds {
                    let w = report.witness.expect("negative reports carry witnesses");
                    candidates.push(Failure {
                        ring: entry.label.clone(),
                        witness: format!("{:?}", w.elements),
                        condition: "candidate counterexample: VNL but not 2-VNL".into(),
                    });
                }
            }
        }
    }
    let bound_note = if skipped > 0 {
        format!(", {skipped} rings above the scan bound skipped")
    } else {
        String::new()
    };
    Ok(TheoremReport {
        theorem_id: question.id().to_string(),
        corpus_description: format!(
            "{} corpus ({} rings scanned{bound_note})",
            ctx.profile.name(),
            instances
        ),
        instances_checked: instances,
        failures: candidates,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
