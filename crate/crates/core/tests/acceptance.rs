//! Acceptance battery: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use staircase_core::grothendieck::{dual_grothendieck, schur};
use staircase_core::verify::{
    self, converse_scan, verify_alpha_recurrence, verify_arithmetic, verify_basis_identities,
    verify_hopf, verify_lattice_rules, verify_stembridge_big_g, verify_stembridge_g, HopfBounds,
    Report,
};
use staircase_core::{
    star_join, Partition, SetFilling, SkewShape, SymFunc, TruncationProfile, Word,
};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn gate(report: &Report) -> Verdict {
    if report.passed {
        Ok(format!("{} cases", report.cases.len()))
    } else {
        let bad: Vec<_> = report.gates().filter(|c| !c.holds).take(3).collect();
        Err(format!("{} failed: {:?}", report.suite, bad))
    }
}

fn all(reports: impl IntoIterator<Item = Report>) -> Verdict {
    let mut total = 0;
    for r in reports {
        total += r.cases.len();
        gate(&r)?;
    }
    Ok(format!("{total} cases"))
}

fn sf(pairs: &[(&str, i64)], d: usize) -> SymFunc {
    SymFunc::from_coeffs(
        pairs
            .iter()
            .map(|(k, v)| (p(k), BigInt::from(*v)))
            .collect(),
        TruncationProfile::degree(d),
    )
}

fn check(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn stembridge_g() -> Verdict {
    let counts: Vec<usize> = (1..=4)
        .map(|n| Partition::staircase(n).subpartitions().len())
        .collect();
    check(
        counts == [2, 5, 14, 42],
        &format!("subpartition counts {counts:?}"),
    )?;
    all((1..=4).map(verify_stembridge_g)).map(|s| format!("{s}; mu counts {counts:?}"))
}

fn stembridge_big_g() -> Verdict {
    all((1..=3).map(|n| verify_stembridge_big_g(n, 3)))
}

fn worked_examples() -> Verdict {
    let s = schur(&"2,1,1/1".parse().unwrap(), TruncationProfile::degree(3)).unwrap();
    check(s == sf(&[("2,1", 1), ("1,1,1", 3)], 3), "s[(2,1,1)/(1)]")?;
    let g = dual_grothendieck(&"2,2/1".parse().unwrap(), TruncationProfile::degree(3)).unwrap();
    check(
        g == sf(&[("2", 1), ("1,1", 1), ("2,1", 1), ("1,1,1", 2)], 3),
        "g[(2,2)/(1)]",
    )?;
    let shape: SkewShape = "5,4,3/2,1".parse().unwrap();
    let t = SetFilling::from_rows(
        shape,
        &[
            vec![vec![1, 2], vec![2, 3, 4], vec![7]],
            vec![vec![3], vec![3, 5], vec![5]],
            vec![vec![2], vec![4, 5, 6], vec![6]],
        ],
    );
    let word = t
        .map(|t| t.reverse_reading_word().to_string())
        .unwrap_or_default();
    check(word == "743252153636542", &format!("reading word {word}"))?;
    let lattice = |w: &str| w.parse::<Word>().unwrap().is_lattice();
    check(lattice("1121322") && !lattice("121221"), "lattice verdicts")?;
    check(
        star_join(&p("2,1"), &p("4")) == "6,5,4/4,4".parse().unwrap(),
        "(2,1)*(4)",
    )?;
    Ok("5 examples".into())
}

/// Lattice-rule reports for `n <= 4`, with the polynomial identity for `n <= 3`.
fn lattice_reports() -> Vec<Report> {
    (1..=4)
        .map(|n| verify_lattice_rules(n, (n <= 3).then_some(3)))
        .collect()
}

fn cases_with(reports: &[Report], prefixes: &[&str]) -> Verdict {
    let mut n = 0;
    for r in reports {
        for c in r
            .cases
            .iter()
            .filter(|c| prefixes.iter().any(|p| c.inputs.starts_with(p)))
        {
            n += 1;
            if !c.holds {
                return Err(format!(
                    "n-suite {}: {} ({:?})",
                    r.command, c.inputs, c.witness
                ));
            }
        }
    }
    check(n > 0, "no cases ran")?;
    Ok(format!("{n} cases"))
}

fn alpha_recurrence() -> Verdict {
    let reports: Vec<Report> = (2..=4)
        .map(|n| verify_alpha_recurrence(n, None, true))
        .collect();
    let literal_holding: usize = reports
        .iter()
        .flat_map(|r| r.findings())
        .filter(|c| c.holds)
        .count();
    check(literal_holding > 0, "(a) no literal case holds")?;
    let known = reports[0]
        .case("literal row k=1 nu=1,1")
        .ok_or("(b) discrepancy case missing")?;
    let witness = known.witness.as_ref().ok_or("(b) no witness")?;
    check(
        !known.holds
            && witness.detail.contains("left 1 vs right 2")
            && witness.rerun.contains("--case"),
        "(b) discrepancy not recorded as expected",
    )?;
    let refined: usize = reports.iter().map(|r| r.gates().count()).sum();
    for r in &reports {
        gate(r).map_err(|e| format!("(c) {e}"))?;
    }
    let differing: usize = reports
        .iter()
        .flat_map(|r| r.findings())
        .filter(|c| !c.holds)
        .count();
    Ok(format!(
        "literal holds on {literal_holding}, differs on {differing}; refined holds on all {refined}"
    ))
}

fn converse() -> Verdict {
    let r = converse_scan(12);
    gate(&r)?;
    let passing: Vec<String> = Partition::all_up_to(12)
        .into_iter()
        .filter(|l| verify::passes_converse(l).is_ok())
        .map(|l| format!("({l})"))
        .collect();
    check(
        passing == ["()", "(1)", "(2,1)", "(3,2,1)", "(4,3,2,1)"],
        &format!("passing {passing:?}"),
    )?;
    Ok(format!(
        "{} partitions; passing {}",
        r.cases.len() - 1,
        passing.join(" ")
    ))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let lattice = std::cell::OnceCell::new();
    let criteria: Vec<Criterion> = vec![
        (
            "1 Stembridge equality for g, n <= 4",
            Box::new(stembridge_g),
        ),
        (
            "2 Stembridge equality for G, n <= 3, D = |rho/mu| + 3",
            Box::new(stembridge_big_g),
        ),
        ("3 worked examples", Box::new(worked_examples)),
        (
            "4 c-equality and its lemmas, n <= 4",
            Box::new(|| cases_with(lattice.get_or_init(lattice_reports), &["c ", "lemmas "])),
        ),
        (
            "5 alpha-equality n <= 4; G[rho/(k)] = G[rho/(1^k)] n <= 3",
            Box::new(|| cases_with(lattice.get_or_init(lattice_reports), &["alpha ", "G "])),
        ),
        (
            "6 basis identities, k <= 4, D = 7",
            Box::new(|| gate(&verify_basis_identities(4, 7))),
        ),
        (
            "7 Hopf suite",
            Box::new(|| gate(&verify_hopf(HopfBounds::default()))),
        ),
        ("8 converse scan, |lam| <= 12", Box::new(converse)),
        ("9 alpha-recurrence findings", Box::new(alpha_recurrence)),
        (
            "10 multiply vs explicit expansion, 100 seeded pairs",
            Box::new(|| gate(&verify_arithmetic(verify::DEFAULT_SEED, 100))),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let verdict = run();
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(summary) => println!("PASS criterion {name}: {summary} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass [{:.1}s]",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
