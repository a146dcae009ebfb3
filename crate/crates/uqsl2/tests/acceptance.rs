//! End-to-end acceptance gate.
//!
//! One full default-grid verification run (d ≤ 8, q ∈ {4, 9}, both θ-modes,
//! t ∈ {-2, …, 2}, both identifications, seed 42, the three default
//! direct-sum profiles) feeds eleven criteria, each printed as its own
//! `ACCEPTANCE n: PASS|FAIL` line. The eleventh criterion runs negative
//! controls directly: a single-entry perturbation of n_z must break the
//! q-exponential, rotator, and factorization batteries.

use std::collections::BTreeSet;

use uqsl2::expr::GenSym;
use uqsl2::lusztig;
use uqsl2::module::BasisKind;
use uqsl2::qexp;
use uqsl2::rotator;
use uqsl2::scalar::{IdentKind, QContext, Rat, ThetaMode};
use uqsl2::{run_suites, CheckRecord, Realization, Report, SuiteConfig};

fn records_of<'a>(report: &'a Report, suite: &str) -> Vec<&'a CheckRecord> {
    report.records.iter().filter(|r| r.suite == suite).collect()
}

fn all_pass(records: &[&CheckRecord], what: &str) -> Result<(), String> {
    if records.is_empty() {
        return Err(format!("no records for {what}"));
    }
    match records.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{what}: {} failed at {:?} ({})",
            r.identity,
            r.params,
            r.counterexample.as_deref().unwrap_or("no counterexample")
        )),
    }
}

fn require(condition: bool, message: &str) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

/// Identity names present in a record slice.
fn names(records: &[&CheckRecord]) -> BTreeSet<String> {
    records.iter().map(|r| r.identity.clone()).collect()
}

fn criterion_1_relations(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "relations");
    all_pass(&recs, "relations suite")?;
    for basis in ["chevalley", "equitable"] {
        require(
            recs.iter().any(|r| r.params.get("basis").is_some_and(|b| b == basis)),
            &format!("no relation checks on the {basis} basis"),
        )?;
    }
    for epsilon in ["1", "-1"] {
        require(
            recs.iter().any(|r| r.params.get("epsilon").is_some_and(|e| e == epsilon)),
            &format!("no relation checks at epsilon = {epsilon}"),
        )?;
    }
    require(
        recs.iter().any(|r| r.params.get("shape").is_some_and(|s| s.contains(','))),
        "no relation checks on direct sums",
    )
}

fn criterion_2_casimir(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "casimir");
    all_pass(&recs, "casimir suite")?;
    for epsilon in ["1", "-1"] {
        require(
            recs.iter().any(|r| r.params.get("epsilon").is_some_and(|e| e == epsilon)),
            &format!("no Casimir checks at epsilon = {epsilon}"),
        )?;
    }
    let present = names(&recs);
    for name in [
        "casimir/scalar",
        "casimir/blocks",
        "casimir/xyz",
        "casimir/zyx",
        "casimir/yzx",
        "casimir/xzy",
        "casimir/zxy",
        "casimir/yxz",
    ] {
        require(present.contains(name), &format!("missing check {name}"))?;
    }
    Ok(())
}

fn criterion_3_identifications(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "identifications");
    all_pass(&recs, "identifications suite")?;
    // Round trips must cover every (q, theta-mode, t, kind) cell of the
    // default grid: 2 x 2 x 5 x 2 = 40 cells.
    let cells: BTreeSet<(String, String, String, String)> = recs
        .iter()
        .filter(|r| r.identity.starts_with("ident/round-"))
        .map(|r| {
            (
                r.params["q"].clone(),
                r.params["theta_mode"].clone(),
                r.params["t"].clone(),
                r.params["ident"].clone(),
            )
        })
        .collect();
    require(cells.len() == 40, &format!("round trips cover {} of 40 grid cells", cells.len()))?;
    let present = names(&recs);
    for name in [
        "cross/e-is-yt-nz",
        "cross/f-is-nx-yinv",
        "cross/nz-is-kinvt-e",
        "cross/nx-is-f-kt",
        "cross/f-is-yt-nz",
        "cross/e-is-nx-yinv",
        "cross/nz-is-kt-f",
        "cross/nx-is-e-kinvt",
    ] {
        require(present.contains(name), &format!("missing cross identity {name}"))?;
    }
    Ok(())
}

fn criterion_4_qexp(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "qexp");
    all_pass(&recs, "qexp suite")?;
    for d in 0..=8usize {
        let shape = format!("[{d}]");
        require(
            recs.iter().any(|r| r.params.get("shape").is_some_and(|s| *s == shape)),
            &format!("no q-exponential checks on the irreducible of diameter {d}"),
        )?;
    }
    // The bracket recurrence runs through i = d + 1 on the largest module.
    require(
        recs.iter().any(|r| {
            r.identity == "qexp/rec-9" && r.params.get("shape").is_some_and(|s| s == "[8]")
        }),
        "recurrence did not reach i = 9 on the diameter-8 module",
    )?;
    for basis in ["chevalley", "equitable"] {
        require(
            recs.iter().any(|r| r.params.get("basis").is_some_and(|b| b == basis)),
            &format!("no q-exponential checks on the {basis} basis"),
        )?;
    }
    Ok(())
}

fn criterion_5_rotators(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "rotators");
    all_pass(&recs, "rotators suite")?;
    for d in 0..=8usize {
        let shape = format!("[{d}]");
        for name in ["rot/law-x", "rot/cube"] {
            require(
                recs.iter().any(|r| {
                    r.identity == name && r.params.get("shape").is_some_and(|s| *s == shape)
                }),
                &format!("missing {name} at diameter {d}"),
            )?;
        }
    }
    let present = names(&recs);
    for i in 2..=9 {
        let name = format!("rot/form-{i}");
        require(present.contains(&name), &format!("missing product form {name}"))?;
    }
    Ok(())
}

fn criterion_6_lusztig_oracles(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "lusztig");
    all_pass(&recs, "lusztig suite")?;
    for d in 0..=8usize {
        let shape = format!("[{d}]");
        for name in ["lusz/oracle-T", "lusz/oracle-Tvee", "lusz/oracle-Tinv", "lusz/oracle-TveeInv"]
        {
            require(
                recs.iter().any(|r| {
                    r.identity == name && r.params.get("shape").is_some_and(|s| *s == shape)
                }),
                &format!("missing {name} at diameter {d}"),
            )?;
        }
    }
    let present = names(&recs);
    for name in [
        "lusz/inv-T",
        "lusz/inv-Tvee",
        "lusz/flip-T",
        "lusz/flip-Tvee",
        "lusz/flip-Tinv",
        "lusz/flip-TveeInv",
        "lusz/ttcomp",
        "lusz/ttcomp-inv",
    ] {
        require(present.contains(name), &format!("missing check {name}"))?;
    }
    Ok(())
}

fn criterion_7_conjugation(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "lusztig");
    for table in ["L", "Lvee"] {
        for gen in ["e", "f", "k"] {
            let name = format!("lusz/conj-{table}-gen-{gen}");
            require(
                recs.iter().any(|r| r.identity == name),
                &format!("missing generator conjugation {name}"),
            )?;
        }
        // Exactly one hundred seeded words, each checked on direct-sum
        // profiles.
        let word_names: BTreeSet<&str> = recs
            .iter()
            .filter(|r| r.identity.starts_with(&format!("lusz/conj-{table}-word-")))
            .map(|r| r.identity.as_str())
            .collect();
        require(
            word_names.len() == 100,
            &format!("{} distinct word checks for table {table}, expected 100", word_names.len()),
        )?;
        require(
            recs.iter().any(|r| {
                r.identity.starts_with(&format!("lusz/conj-{table}-word-"))
                    && r.params.get("shape").is_some_and(|s| s.contains(','))
            }),
            &format!("word conjugations for {table} never ran on a direct sum"),
        )?;
    }
    require(
        recs.iter().any(|r| r.identity.starts_with("lusz/cd-")),
        "missing the commuting-square checks on generators",
    )?;
    require(
        recs.iter().any(|r| r.identity.starts_with("lusz/conj-") && r.identity.contains("-route-")),
        "missing the dual-route agreement checks",
    )?;
    all_pass(
        &recs
            .iter()
            .copied()
            .filter(|r| r.identity.starts_with("lusz/conj-") || r.identity.starts_with("lusz/cd-"))
            .collect::<Vec<_>>(),
        "conjugation checks",
    )
}

fn criterion_8_equitable_cells(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "lusztig");
    for ident in ["primary", "secondary"] {
        for case in ["1", "2"] {
            let name = format!("lusz/equit{case}-nx");
            require(
                recs.iter().any(|r| {
                    r.identity == name && r.params.get("ident").is_some_and(|i| i == ident)
                }),
                &format!("missing {name} under the {ident} identification"),
            )?;
        }
    }
    for mode in ["sq-q", "sq-qinv"] {
        require(
            recs.iter().any(|r| {
                r.identity == "lusz/goodtheta-nx"
                    && r.params.get("theta_mode").is_some_and(|m| m == mode)
            }),
            &format!("missing the literal-scalar specialization under {mode}"),
        )?;
    }
    all_pass(
        &recs
            .iter()
            .copied()
            .filter(|r| {
                r.identity.starts_with("lusz/equit") || r.identity.starts_with("lusz/goodtheta")
            })
            .collect::<Vec<_>>(),
        "equitable-conjugation checks",
    )
}

fn criterion_9_tau_factorization(report: &Report) -> Result<(), String> {
    let recs: Vec<&CheckRecord> = records_of(report, "lusztig")
        .into_iter()
        .filter(|r| r.identity == "lusz/tau-lu")
        .collect();
    all_pass(&recs, "tau factorization")?;
    for d in 0..=8usize {
        let shape = format!("[{d}]");
        require(
            recs.iter().any(|r| r.params.get("shape").is_some_and(|s| *s == shape)),
            &format!("missing tau factorization at diameter {d}"),
        )?;
    }
    let cells: BTreeSet<(String, String)> = recs
        .iter()
        .map(|r| (r.params["theta_mode"].clone(), r.params["ident"].clone()))
        .collect();
    require(cells.len() == 4, &format!("tau factorization covers {} of 4 cells", cells.len()))
}

fn criterion_10_main_theorem(report: &Report) -> Result<(), String> {
    let recs = records_of(report, "main-theorem");
    for d in 0..=6usize {
        let shape = format!("[{d}]");
        let on_d: Vec<&CheckRecord> = recs
            .iter()
            .copied()
            .filter(|r| r.params.get("shape").is_some_and(|s| *s == shape))
            .collect();
        all_pass(&on_d, &format!("factorization theorem at diameter {d}"))?;
    }
    for shape in ["[1,3]", "[0,2,2]", "[1,2,3]"] {
        let on_shape: Vec<&CheckRecord> = recs
            .iter()
            .copied()
            .filter(|r| r.params.get("shape").is_some_and(|s| *s == shape))
            .collect();
        all_pass(&on_shape, &format!("factorization theorem on the sum {shape}"))?;
    }
    let cells: BTreeSet<(String, String)> = recs
        .iter()
        .map(|r| (r.params["theta_mode"].clone(), r.params["ident"].clone()))
        .collect();
    require(cells.len() == 4, &format!("factorization covers {} of 4 cells", cells.len()))
}

fn criterion_11_negative_controls() -> Result<(), String> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)
        .map_err(|e| e.to_string())?;
    let mut real =
        Realization::irreducible(&ctx, 2, BasisKind::Equitable).map_err(|e| e.to_string())?;
    real.perturb_generator(GenSym::Nz, 0, 1, Rat::one());

    let suites: [(&str, Vec<uqsl2::IdentityCheck>); 3] = [
        ("q-exponential battery", qexp::all_checks(&real, &ctx)),
        ("rotator battery", rotator::all_checks(&real, &ctx)),
        ("factorization battery", lusztig::main_theorem_checks(&real, &ctx)),
    ];
    for (what, checks) in suites {
        require(
            checks.iter().any(|c| !c.pass),
            &format!("{what} still passed after perturbing n_z"),
        )?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let config = SuiteConfig::default();
    let report = run_suites(&config).expect("default grid must be a valid configuration");

    let criteria: Vec<(usize, Result<(), String>)> = vec![
        (1, criterion_1_relations(&report)),
        (2, criterion_2_casimir(&report)),
        (3, criterion_3_identifications(&report)),
        (4, criterion_4_qexp(&report)),
        (5, criterion_5_rotators(&report)),
        (6, criterion_6_lusztig_oracles(&report)),
        (7, criterion_7_conjugation(&report)),
        (8, criterion_8_equitable_cells(&report)),
        (9, criterion_9_tau_factorization(&report)),
        (10, criterion_10_main_theorem(&report)),
        (11, criterion_11_negative_controls()),
    ];

    let mut failures = Vec::new();
    for (n, outcome) in &criteria {
        match outcome {
            Ok(()) => println!("ACCEPTANCE {n}: PASS"),
            Err(message) => {
                println!("ACCEPTANCE {n}: FAIL — {message}");
                failures.push(format!("criterion {n}: {message}"));
            }
        }
    }
    println!(
        "grid: {} checks, {} passed, {} failed, {} ms",
        report.summary.total, report.summary.passed, report.summary.failed, report.wall_ms
    );

    assert!(failures.is_empty(), "{}", failures.join("\n"));
    assert_eq!(report.summary.failed, 0, "default grid reported failing checks");
}
