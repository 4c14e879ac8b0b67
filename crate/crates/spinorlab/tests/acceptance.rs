//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use spinorlab::verify::{fpk_identities, run_suite, PropertyOutcome, SuiteConfig};

const SEED: u64 = 20_251_019;

fn describe(p: &PropertyOutcome) -> String {
    let worst = p
        .worst
        .map_or_else(|| "-".to_string(), |w| format!("{w:.3e}"));
    format!(
        "{} worst {worst} over {} draws, {} violations",
        p.name, p.draws, p.violations
    )
}

fn properties(all: &[PropertyOutcome], names: &[&str]) -> (bool, String) {
    let picked: Vec<&PropertyOutcome> = names
        .iter()
        .map(|n| {
            all.iter()
                .find(|p| p.name == *n)
                .unwrap_or_else(|| panic!("no property {n}"))
        })
        .collect();
    let ok = picked.iter().all(|p| p.passed);
    let detail = picked
        .iter()
        .map(|p| describe(p))
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn spinorlab(args: &[&str], stdin: &str) -> Vec<u8> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spinorlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn spinorlab");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    if out.status.success() {
        out.stdout
    } else {
        Vec::new()
    }
}

fn cli_determinism() -> (bool, String) {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut mismatches = Vec::new();
    for n in 1..=6 {
        let job = golden.join(format!("class{n}.job.json"));
        let expected =
            std::fs::read(golden.join(format!("class{n}.report.json"))).unwrap_or_default();
        let actual = spinorlab(&["--job", job.to_str().unwrap()], "");
        if actual.is_empty() || actual != expected {
            mismatches.push(format!("class{n}"));
        }
    }
    let job = r#"{"mode": "sample", "seed": 42, "count": 1000, "population": "random_raw"}"#;
    let first = spinorlab(&[], job);
    let repeat_ok = !first.is_empty() && first == spinorlab(&[], job);
    let ok = mismatches.is_empty() && repeat_ok;
    let detail = format!(
        "6 golden reports, mismatched: [{}]; repeated sample run identical: {repeat_ok}",
        mismatches.join(", ")
    );
    (ok, detail)
}

fn main() {
    let mut results: Vec<(&str, bool, String)> = Vec::new();

    let started = Instant::now();
    let fpk = fpk_identities(&SuiteConfig::new(SEED, 100_000));
    let elapsed = started.elapsed();
    results.push((
        "AC1",
        fpk.passed && elapsed < Duration::from_secs(10),
        format!(
            "{} in {:.2} s (limit 10 s)",
            describe(&fpk),
            elapsed.as_secs_f64()
        ),
    ));

    let started = Instant::now();
    let suite = run_suite(&SuiteConfig::new(SEED, 10_000));
    let suite_time = started.elapsed();
    let all = &suite.properties;

    let (ok, d) = properties(all, &["constructor_class_table"]);
    results.push(("AC2", ok, d));
    let (ok, d) = properties(all, &["helicity_dichotomy"]);
    results.push(("AC3", ok, d));
    let (ok, d) = properties(all, &["parity_link_dirac"]);
    results.push(("AC4", ok, d));
    let (ok, d) = properties(all, &["dual_helicity_not_dirac", "dual_helicity_flip"]);
    results.push(("AC5", ok, d));
    let (ok, d) = properties(
        all,
        &[
            "charge_conjugation_involution",
            "self_conjugate_eigen",
            "single_helicity_not_c_eigen",
            "norm_constraint_fixture",
        ],
    );
    results.push(("AC6", ok, d));
    let (ok, d) = properties(all, &["theta_link"]);
    results.push(("AC7", ok, d));
    let (ok, d) = properties(all, &["klein_gordon"]);
    results.push(("AC8", ok, d));

    let (ok, d) = cli_determinism();
    results.push(("AC9", ok, d));

    results.push((
        "AC10",
        suite.passed && suite_time < Duration::from_secs(60),
        format!(
            "{} properties, all passed: {}, {:.2} s (limit 60 s)",
            all.len(),
            suite.passed,
            suite_time.as_secs_f64()
        ),
    ));

    let mut failed = 0;
    for (id, ok, detail) in &results {
        println!("{id} {}: {detail}", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
