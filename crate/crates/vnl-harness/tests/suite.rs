//! Guards on the theorem suite itself: the registry surface is pinned and no
//! check is allowed to pass vacuously on the quick corpus.

use vnl_core::construct::BuildConfig;
use vnl_harness::checks::{registry_ids, run_theorem_suite, CheckContext};
use vnl_harness::corpus::{generate_corpus, Profile};

fn cfg() -> BuildConfig {
    BuildConfig {
        seed: 7,
        ..BuildConfig::default()
    }
}

#[test]
fn registry_ids_are_pinned() {
    assert_eq!(
        registry_ids(),
        vec![
            "prop-2.2", "cor-2.3", "lemma-2.4", "cor-2.6", "cor-2.7", "prop-2.8", "prop-2.11",
            "thm-2.12", "cor-2.13", "cor-2.14", "cor-2.15", "cor-2.16", "cor-2.17", "lemma-2.18",
            "thm-3.1", "lemma-3.4", "thm-3.5", "example-3.3", "lemma-4.1", "lemma-4.2", "cor-4.3",
            "cor-4.4", "lemma-4.5", "thm-4.6", "thm-4.7", "thm-4.8", "lemma-5.1", "prop-5.2",
        ]
    );
}

#[test]
fn no_check_is_vacuous_on_the_quick_corpus() {
    let corpus = generate_corpus(Profile::Quick, &cfg()).unwrap();
    let ctx = CheckContext {
        corpus: &corpus,
        cfg: cfg(),
        profile: Profile::Quick,
    };
    let reports = run_theorem_suite(&[], &ctx).unwrap();
    assert_eq!(reports.len(), registry_ids().len());
    for report in &reports {
        assert!(
            report.instances_checked > 0,
            "{} checked nothing on the quick corpus",
            report.theorem_id
        );
        assert!(
            report.failures.is_empty(),
            "{} reported failures: {:?}",
            report.theorem_id,
            report.failures
        );
    }
}
