//! The twelve acceptance criteria, one line each. Runs without the libtest harness so the
//! lines show up in `cargo test` output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chevalley_basis::ChevalleyData;
use root_systems::{CartanType, RootSystem};
use twchev::suites::tag_counts;
use twchev::{enumerate, run_suite, Report, SuiteConfig};

/// Criteria expected to fail, with the reason printed next to the line.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    9,
    "z2xz2 with the swap has no proper nonzero θ-invariant ideal, so no proper level exists",
)];

type Outcome = Result<String, String>;

fn cfg(t: &str, ring: &str) -> SuiteConfig {
    SuiteConfig::new(t, ring).expect("valid config")
}

fn report(suite: &str, c: &SuiteConfig) -> Result<Report, String> {
    run_suite(suite, c)
        .map_err(|e| format!("{suite} {} {}: {e}", c.twisted_type, c.ring.short_name()))
}

/// Runs the suites and folds them into one outcome listing the failing cases.
fn all_pass(runs: &[(&str, SuiteConfig)]) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for (suite, c) in runs {
        let rep = report(suite, c)?;
        cases += rep.summary.total;
        for f in rep.failures() {
            bad.push(format!(
                "{suite} {} {}: {}",
                c.twisted_type,
                c.ring.short_name(),
                f.id
            ));
        }
    }
    if bad.is_empty() {
        Ok(format!("{cases} cases"))
    } else {
        Err(format!(
            "{} of {cases} cases failed: {}",
            bad.len(),
            bad.join("; ")
        ))
    }
}

fn structure_constants() -> Outcome {
    for (t, n) in [(CartanType::A, 3), (CartanType::D, 4), (CartanType::E, 6)] {
        let sys = RootSystem::new(t, n).map_err(|e| e.to_string())?;
        let rep = ChevalleyData::new(&sys).verify_structure();
        if !rep.passed() {
            return Err(format!("{rep:?}"));
        }
    }
    Ok("A3 D4 E6".into())
}

fn normalization() -> Outcome {
    let cases = [
        (CartanType::A, 3, 2),
        (CartanType::A, 4, 2),
        (CartanType::A, 5, 2),
        (CartanType::D, 4, 2),
        (CartanType::D, 5, 2),
        (CartanType::D, 4, 3),
        (CartanType::E, 6, 2),
    ];
    for (t, n, o) in cases {
        let sys = RootSystem::new(t, n).map_err(|e| e.to_string())?;
        let rho = sys.standard_twist(o).map_err(|e| e.to_string())?;
        let data = ChevalleyData::new(&sys)
            .normalize_signs(&rho)
            .map_err(|e| e.to_string())?;
        match data.verify_normalization() {
            Some(rep) if rep.passed() => {}
            other => return Err(format!("{o}{t}{n}: {other:?}")),
        }
    }
    Ok("7 twisted systems".into())
}

fn untwisted_suite() -> Outcome {
    all_pass(&[
        ("steinberg", cfg("A2", "z4").exhaustive()),
        ("commutators", cfg("A2", "z4").exhaustive()),
        ("steinberg", cfg("A3", "gf5").with_samples(200)),
        (
            "commutators",
            cfg("A3", "gf5").with_samples(200).with_seed(1),
        ),
        ("steinberg", cfg("D4", "z36").with_samples(200)),
        (
            "commutators",
            cfg("D4", "z36").with_samples(200).with_seed(2),
        ),
    ])
}

fn twisted_commutators() -> Outcome {
    let mut seen = BTreeSet::new();
    let mut d4 = BTreeSet::new();
    let mut cases = 0;
    for (t, ring) in [
        ("2A4", "gf9"),
        ("2A4", "gf25"),
        ("2A5", "gf9"),
        ("2A5", "gf25"),
        ("2D4", "gf9"),
        ("3D4", "gf343"),
    ] {
        let c = cfg(t, ring).with_seed(4);
        let rep = report("twisted-commutators", &c)?;
        if let Some(f) = rep.failures().next() {
            return Err(format!("{t} {ring}: unmatched {}", f.id));
        }
        cases += rep.summary.total;
        let tags = tag_counts(&rep.cases).into_keys();
        if t.ends_with("D4") {
            d4.extend(tags);
        } else {
            seen.extend(tags);
        }
    }
    let want_a = ["a1", "a2-i", "a2-ii", "b-ii", "c-i", "c-ii", "d-i", "d-ii"];
    let missing: Vec<_> = want_a.iter().filter(|t| !seen.contains(**t)).collect();
    let missing_d: Vec<_> = ["b-i", "e", "f", "g"]
        .iter()
        .filter(|t| !d4.contains(**t))
        .collect();
    if !missing.is_empty() || !missing_d.is_empty() {
        return Err(format!("tags never exercised: {missing:?} {missing_d:?}"));
    }
    Ok(format!(
        "{cases} cases, 100% branch-matched, tags {seen:?} + {d4:?}"
    ))
}

fn wh_lemmas() -> Outcome {
    all_pass(&[
        ("whlemmas", cfg("2A3", "gf9").exhaustive()),
        ("whlemmas", cfg("2A4", "gf9").exhaustive()),
    ])
}

fn conjugation() -> Outcome {
    all_pass(&[
        ("conjugation", cfg("2A3", "gf9").with_seed(6)),
        ("conjugation", cfg("2A4", "gf9").with_seed(6)),
        ("conjugation", cfg("2D4", "gf9").with_seed(6)),
        ("conjugation", cfg("3D4", "gf8").with_seed(6)),
    ])
}

fn enumeration() -> Outcome {
    let mut out = Vec::new();
    for (t, want) in [("2A2", 216), ("2A3", 25920)] {
        let c = cfg(t, "gf4");
        let e = enumerate(&c).map_err(|e| e.to_string())?;
        if e.order != want {
            return Err(format!("{t}: order {} instead of {want}", e.order));
        }
        let rep = report("bruhat", &c)?;
        if !rep.passed() {
            return Err(format!(
                "{t}: Bruhat cells {:?}",
                rep.failures().map(|f| &f.id).collect::<Vec<_>>()
            ));
        }
        out.push(format!("{t} {}", e.order));
    }
    Ok(out.join(", "))
}

fn congruence() -> Outcome {
    all_pass(&[(
        "congruence-uhv",
        cfg("2A3", "dual-gf9").with_samples(100).with_seed(8),
    )])
}

fn theorem_instances() -> Outcome {
    all_pass(&[
        ("levels", cfg("2A3", "gf4")),
        ("levels", cfg("2A3", "z2xz2")),
    ])
}

fn untwisting() -> Outcome {
    all_pass(&[
        ("untwist", cfg("2A3", "z3").with_samples(100).with_seed(10)),
        ("untwist", cfg("2D4", "z3").with_samples(100).with_seed(10)),
    ])
}

fn key_lemma_and_tangent() -> Outcome {
    all_pass(&[
        ("key-lemma", cfg("2A2", "gf25")),
        ("key-lemma", cfg("2A3", "gf25")),
        ("key-lemma", cfg("2A4", "gf25")),
        ("tangent", cfg("2A3", "gf9")),
        ("tangent", cfg("2A3", "gf25")),
        ("tangent", cfg("2A4", "gf25")),
    ])
}

fn a_group() -> Outcome {
    let runs = [
        ("agroup", cfg("2A3", "gf4")),
        ("agroup", cfg("2A3", "gf9")),
        ("agroup", cfg("2A3", "dual-gf9")),
    ];
    let summary = all_pass(&runs)?;
    // Over GF(4) the helpers that need 1/2 must refuse rather than answer.
    let rep = report("agroup", &runs[0].1)?;
    let skipped: Vec<&str> = rep
        .cases
        .iter()
        .filter(|c| c.status == twchev::Status::Skip)
        .map(|c| c.id.as_str())
        .collect();
    Ok(format!(
        "{summary}; gf4 rejects {skipped:?} for lack of 1/2"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("structure constants", 10, structure_constants),
        ("ε-normalization", 30, normalization),
        ("untwisted Steinberg suite", 60, untwisted_suite),
        ("twisted commutator formulas", 300, twisted_commutators),
        ("σ-fixed generators and W/H lemmas", 60, wh_lemmas),
        ("conjugation calculus", 180, conjugation),
        ("enumeration instances", 300, enumeration),
        ("congruence constructions", 120, congruence),
        ("theorem instances", 600, theorem_instances),
        ("untwisting isomorphism", 60, untwisting),
        ("key lemma and tangent algebra", 120, key_lemma_and_tangent),
        ("𝒜(R)-group suite", 30, a_group),
    ];
    let mut unexpected = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let mut res = f();
        let took = start.elapsed();
        if res.is_ok() && took > Duration::from_secs(*limit) {
            res = Err(format!("took {:.1}s, limit {limit}s", took.as_secs_f64()));
        }
        let known = KNOWN_FAILURES.iter().find(|k| k.0 == n);
        let line = match (&res, known) {
            (Ok(d), None) => format!(
                "PASS criterion {n:2} {name} [{:.1}s] {d}",
                took.as_secs_f64()
            ),
            (Ok(d), Some(_)) => {
                unexpected += 1;
                format!(
                    "PASS criterion {n:2} {name} [{:.1}s] {d} (listed as a known failure)",
                    took.as_secs_f64()
                )
            }
            (Err(e), None) => {
                unexpected += 1;
                format!(
                    "FAIL criterion {n:2} {name} [{:.1}s] {e}",
                    took.as_secs_f64()
                )
            }
            (Err(e), Some((_, why))) => format!(
                "FAIL criterion {n:2} {name} [{:.1}s] {e} (known: {why})",
                took.as_secs_f64()
            ),
        };
        println!("{line}");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria differ from the expected outcome");
        ExitCode::FAILURE
    }
}
