//! Command-line front end.
//!
//! Exit codes: 0 = all pass, 1 = theorem/property failure (with witnesses),
//! 2 = usage error, 3 = internal inconsistency (a fast path disagreed with
//! brute force).

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use vnl_core::construct::BuildConfig;
use vnl_core::element;
use vnl_core::properties::{
    classify_semiperfect_vnl, is_exchange_ring, is_n_vnl, is_nj, is_potent, is_semipotent,
    is_vnl, nj_equivalence_conditions, vnl_via_corner_condition, vnl_via_mr_local,
    zn_vnl_criterion, PropertyReport,
};
use vnl_core::structure::{
    classify_ring, idempotent_census, is_simple, jacobson_radical, maximal_regular_ideal,
};
use vnl_core::Ring;

use vnl_harness::checks::{run_theorem_suite, CheckContext};
use vnl_harness::corpus::{generate_corpus, Profile};
use vnl_harness::expr::{parse_ring_expr, ElaboratedRing, Elaborator, RingExpr, Sidecar};
use vnl_harness::report::{HarnessError, SuiteReport, TheoremReport, TOOL_VERSION};
use vnl_harness::search::{search_question, Question};

#[derive(Parser)]
#[command(
    name = "vnl",
    version,
    about = "Finite-ring workbench: constructions, property checks and a theorem suite"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled validation
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest order represented by dense Cayley tables
    #[arg(long, global = true, default_value_t = 4096)]
    dense_cap: usize,

    /// Random triples sampled when validating structured rings
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,

    /// JSON file with named bimodules and ideals for Tri(...) and Quot(...)
    #[arg(long, global = true)]
    sidecar: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a ring and print its summary
    Build { expr: String },
    /// Structure report: flags, census, radical, maximal regular ideal, shape
    Classify { expr: String },
    /// Decide a property of a ring (vnl, nj, exchange, potent, semipotent,
    /// 2-vnl, 3-vnl, regular, local, division, semisimple, abelian,
    /// commutative, simple, vnl-corner, vnl-mr)
    Check { property: String, expr: String },
    /// Element report: regularity, unit inverse, exchange witness, ideals
    Element { expr: String, index: usize },
    /// Run theorem checks over the corpus (all of them when no ids given)
    Verify {
        ids: Vec<String>,
        #[arg(long, default_value = "quick")]
        profile: String,
    },
    /// Search the corpus for counterexample candidates to an open question
    Search {
        question: String,
        #[arg(long, default_value = "quick")]
        profile: String,
    },
    /// Corpus inspection
    Corpus {
        #[command(subcommand)]
        sub: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Print every corpus ring with its order and representation
    List {
        #[arg(long, default_value = "quick")]
        profile: String,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes, e.g. under `vnl corpus list | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn build_config(cli: &Cli) -> BuildConfig {
    BuildConfig {
        dense_cap: cli.dense_cap,
        sample_budget: cli.budget,
        seed: cli.seed,
        ..BuildConfig::default()
    }
}

fn elaborator(cli: &Cli) -> Result<Elaborator, HarnessError> {
    let sidecar = match &cli.sidecar {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                HarnessError::Usage(format!("cannot read sidecar {}: {e}", path.display()))
            })?;
            Sidecar::from_json(&text)?
        }
        None => Sidecar::default(),
    };
    Ok(Elaborator::with_sidecar(build_config(cli), sidecar))
}

fn run(cli: &Cli) -> Result<u8, HarnessError> {
    match &cli.command {
        Command::Build { expr } => {
            let ring = elaborator(cli)?.elaborate_str(expr)?.ring;
            let summary = ring.summary();
            if cli.json {
                println!("{}", serde_json::to_string(&summary).unwrap());
            } else {
                println!(
                    "{} order={} repr={}",
                    summary.label, summary.order, summary.repr_kind
                );
            }
            Ok(0)
        }
        Command::Classify { expr } => {
            let cfg = build_config(cli);
            let ring = elaborator(cli)?.elaborate_str(expr)?.ring;
            classify_command(&ring, &cfg, cli.json)
        }
        Command::Check { property, expr } => {
            let cfg = build_config(cli);
            let elaborated = elaborator(cli)?.elaborate_str(expr)?;
            check_command(property, expr, &elaborated, &cfg, cli.json)
        }
        Command::Element { expr, index } => {
            let ring = elaborator(cli)?.elaborate_str(expr)?.ring;
            element_command(&ring, *index, cli.json)
        }
        Command::Verify { ids, profile } => {
            let profile = Profile::parse(profile)?;
            let corpus = generate_corpus(profile, &build_config(cli))?;
            let ctx = CheckContext {
                corpus: &corpus,
                cfg: build_config(cli),
                profile,
            };
            let reports = run_theorem_suite(ids, &ctx)?;
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            print_reports(&reports, profile, cli)?;
            Ok(if failures > 0 { 1 } else { 0 })
        }
        Command::Search { question, profile } => {
            let question = Question::parse(question)?;
            let profile = Profile::parse(profile)?;
            let corpus = generate_corpus(profile, &build_config(cli))?;
            let ctx = CheckContext {
                corpus: &corpus,
                cfg: build_config(cli),
                profile,
            };
            let report = search_question(question, &ctx)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else if report.failures.is_empty() {
                println!(
                    "{}: no counterexample up to the searched bound ({})",
                    report.theorem_id, report.corpus_description
                );
            } else {
                println!(
                    "{}: {} candidate counterexample(s)",
                    report.theorem_id,
                    report.failures.len()
                );
                for f in &report.failures {
                    println!("  {} — {} [{}]", f.ring, f.condition, f.witness);
                }
            }
            Ok(0)
        }
        Command::Corpus { sub } => match sub {
            CorpusCmd::List { profile } => {
                let profile = Profile::parse(profile)?;
                let corpus = generate_corpus(profile, &build_config(cli))?;
                if cli.json {
                    let list: Vec<_> = corpus.iter().map(|e| e.ring.summary()).collect();
                    println!("{}", serde_json::to_string(&list).unwrap());
                } else {
                    for e in &corpus {
                        println!(
                            "{} order={} repr={}",
                            e.label,
                            e.ring.order(),
                            e.ring.repr_kind()
                        );
                    }
                }
                Ok(0)
            }
        },
    }
}

fn print_reports(reports: &[TheoremReport], profile: Profile, cli: &Cli) -> Result<(), HarnessError> {
    if cli.json {
        let suite = SuiteReport {
            tool_version: TOOL_VERSION.to_string(),
            profile: profile.name().to_string(),
            seed: cli.seed,
            reports: reports.to_vec(),
        };
        println!("{}", serde_json::to_string(&suite).unwrap());
    } else {
        for r in reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!(
                "{:12} {} ({} instances, {} failures, {} ms)",
                r.theorem_id,
                verdict,
                r.instances_checked,
                r.failures.len(),
                r.wall_time_ms
            );
            for f in &r.failures {
                println!("  {} — {} [{}]", f.ring, f.condition, f.witness);
            }
        }
    }
    Ok(())
}

fn classify_command(ring: &Arc<Ring>, cfg: &BuildConfig, as_json: bool) -> Result<u8, HarnessError> {
    let class = classify_ring(ring);
    let census = idempotent_census(ring);
    let jac = jacobson_radical(ring);
    let mr = maximal_regular_ideal(ring)?;
    let vnl = is_vnl(ring);
    let nj = is_nj(ring);
    let shape = classify_semiperfect_vnl(ring, cfg)?;
    if as_json {
        println!(
            "{}",
            serde_json::to_string(&json!({
                "ring": ring.summary(),
                "classification": class,
                "idempotents": {
                    "all": census.all.len(),
                    "central": census.central.len(),
                    "primitive": census.primitive.len(),
                    "local": census.local.len(),
                },
                "jacobson_radical_order": jac.order(),
                "maximal_regular_ideal_order": mr.order(),
                "vnl": vnl,
                "nj": nj,
                "semiperfect_shape": shape,
            }))
            .unwrap()
        );
    } else {
        println!("{} order={} repr={}", ring.label(), ring.order(), ring.repr_kind());
        println!(
            "flags: regular={} local={} division={} semisimple={} abelian={} commutative={}",
            class.regular,
            class.local,
            class.division,
            class.semisimple,
            class.abelian,
            class.commutative
        );
        println!(
            "idempotents: {} total, {} central, {} primitive, {} local",
            census.all.len(),
            census.central.len(),
            census.primitive.len(),
            census.local.len()
        );
        println!("radical order: {}", jac.order());
        println!("maximal regular ideal order: {}", mr.order());
        println!("vnl: {} nj: {}", vnl.holds, nj.holds);
        println!("semiperfect shape: {}", shape.tag());
    }
    Ok(0)
}

fn element_command(ring: &Arc<Ring>, index: usize, as_json: bool) -> Result<u8, HarnessError> {
    if index >= ring.order() {
        return Err(HarnessError::Usage(format!(
            "element {index} out of range for {} (order {})",
            ring.label(),
            ring.order()
        )));
    }
    let regular = element::regular_witness(ring, index);
    let unit = element::unit_inverse(ring, index);
    let exchange = element::exchange_witness(ring, index);
    let idempotent = ring.mul(index, index) == index;
    let right_ideal = element::principal_right_ideal(ring, index);
    let left_ideal = element::principal_left_ideal(ring, index);
    if as_json {
        println!(
            "{}",
            serde_json::to_string(&json!({
                "ring": ring.summary(),
                "element": index,
                "idempotent": idempotent,
                "regular": regular,
                "unit_inverse": unit,
                "exchange": exchange,
                "right_ideal_order": right_ideal.len(),
                "left_ideal_order": left_ideal.len(),
            }))
            .unwrap()
        );
    } else {
        println!("element {index} of {}", ring.label());
        println!("idempotent: {idempotent}");
        match regular {
            Some(w) => println!(
                "regular: yes, inner inverse {}, reflexive inverse {}",
                w.inner_inverse, w.reflexive_inverse
            ),
            None => println!("regular: no"),
        }
        match unit {
            Some(u) => println!("unit: yes, inverse {u}"),
            None => println!("unit: no"),
        }
        match exchange {
            Some(w) => println!("exchange idempotent: {}", w.idempotent),
            None => println!("exchange idempotent: none"),
        }
        println!(
            "principal ideals: right order {}, left order {}",
            right_ideal.len(),
            left_ideal.len()
        );
    }
    Ok(0)
}

/// Decides one property, cross-validating every fast path whose hypotheses
/// the ring satisfies. A fast-path disagreement aborts with the dedicated
/// inconsistency exit code.
fn check_command(
    property: &str,
    expr_text: &str,
    elaborated: &ElaboratedRing,
    cfg: &BuildConfig,
    as_json: bool,
) -> Result<u8, HarnessError> {
    let ring = &elaborated.ring;
    let class_flag = |flag: bool| PropertyReport {
        property: property.to_string(),
        holds: flag,
        witness: None,
        method: vnl_core::properties::Method::BruteForce,
    };
    let report: PropertyReport = match property {
        "vnl" => {
            let brute = is_vnl(ring);
            cross_validate_vnl(expr_text, elaborated, cfg, brute.holds)?;
            brute
        }
        "nj" => is_nj(ring),
        "exchange" => is_exchange_ring(ring),
        "potent" => is_potent(ring),
        "semipotent" => is_semipotent(ring),
        "vnl-corner" => vnl_via_corner_condition(ring),
        "vnl-mr" => vnl_via_mr_local(ring, cfg)?,
        "regular" => class_flag(classify_ring(ring).regular),
        "local" => class_flag(classify_ring(ring).local),
        "division" => class_flag(classify_ring(ring).division),
        "semisimple" => class_flag(classify_ring(ring).semisimple),
        "abelian" => class_flag(classify_ring(ring).abelian),
        "commutative" => class_flag(classify_ring(ring).commutative),
        "simple" => class_flag(is_simple(ring)),
        "nj-equivalence" => {
            let report = nj_equivalence_conditions(ring);
            if as_json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                println!(
                    "applicable: {}, conclusion checked: {}",
                    report.applicable, report.conclusion_checked
                );
            }
            return Ok(if report.applicable && !report.conclusion_checked {
                1
            } else {
                0
            });
        }
        other => {
            if let Some(n) = other.strip_suffix("-vnl").and_then(|s| s.parse::<usize>().ok()) {
                is_n_vnl(ring, n)?
            } else {
                return Err(HarnessError::Usage(format!(
                    "unknown property {other:?} (try vnl, nj, exchange, potent, semipotent, \
                     2-vnl, 3-vnl, vnl-corner, vnl-mr, regular, local, division, semisimple, \
                     abelian, commutative, simple, nj-equivalence)"
                )));
            }
        }
    };
    if as_json {
        println!(
            "{}",
            serde_json::to_string(&json!({
                "ring": ring.summary(),
                "report": report,
            }))
            .unwrap()
        );
    } else {
        println!(
            "{} on {}: {}",
            report.property,
            ring.label(),
            if report.holds { "holds" } else { "fails" }
        );
        if let Some(w) = &report.witness {
            println!("witness: {:?} ({})", w.elements, w.note);
        }
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cross_validate_vnl(
    expr_text: &str,
    elaborated: &ElaboratedRing,
    cfg: &BuildConfig,
    brute: bool,
) -> Result<(), HarnessError> {
    let ring = &elaborated.ring;
    if let Ok(RingExpr::Cyclic(n)) = parse_ring_expr(expr_text) {
        let criterion = zn_vnl_criterion(n);
        if criterion != brute {
            return Err(HarnessError::Inconsistency(format!(
                "Zn criterion ({criterion}) disagrees with brute force ({brute}) on Zn({n})"
            )));
        }
    }
    if classify_ring(ring).abelian {
        let corner = vnl_via_corner_condition(ring).holds;
        if corner != brute {
            return Err(HarnessError::Inconsistency(format!(
                "corner-condition criterion ({corner}) disagrees with brute force ({brute}) on {}",
                ring.label()
            )));
        }
        let mr = vnl_via_mr_local(ring, cfg)?.holds;
        if mr != brute {
            return Err(HarnessError::Inconsistency(format!(
                "maximal-regular-quotient criterion ({mr}) disagrees with brute force ({brute}) on {}",
                ring.label()
            )));
        }
    }
    if let Some(tri) = &elaborated.triangular {
        let fast = vnl_core::triangular::vnl_criterion_componentwise(tri.module()).holds;
        if fast != brute {
            return Err(HarnessError::Inconsistency(format!(
                "componentwise criterion ({fast}) disagrees with brute force ({brute}) on {}",
                ring.label()
            )));
        }
    }
    Ok(())
}
