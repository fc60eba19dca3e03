//! Acceptance suite: one line per criterion with its runtime budget.
//! Criteria 1 to 6 drive the `adjrank` binary end to end; criterion 7 runs
//! the exact pencil decision against the brute-force grid oracle.
//!
//! Runs with `harness = false`; exits nonzero if any criterion fails.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use std::process::Command;
use std::time::{Duration, Instant};

use adjrank_core::subspace::pencil::verify_pencil_witness;
use adjrank_core::subspace::pencil_minrank_exact;
use adjrank_core::{seed, ExactMatrix};
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn adjrank(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_adjrank"))
        .args(args)
        .env_remove("ADJRANK_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`adjrank {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proposition<'a>(report: &'a Value, name: &str) -> Result<&'a Value, String> {
    report["propositions"]
        .as_array()
        .and_then(|ps| ps.iter().find(|p| p["name"] == name))
        .ok_or_else(|| format!("no proposition `{name}` in report"))
}

/// Passed with exactly `cases` cases and no failures.
fn clean(report: &Value, name: &str, cases: Option<u64>) -> Result<u64, String> {
    let p = proposition(report, name)?;
    let got = p["cases"].as_u64().unwrap_or(0);
    ensure(p["passed"] == true && p["failures"] == 0, || format!("{name}: {} failures", p["failures"]))?;
    if let Some(c) = cases {
        ensure(got == c, || format!("{name}: {got} cases, expected {c}"))?;
    }
    Ok(got)
}

fn table() -> Check {
    let rows = adjrank(&["rho", "--table", "--b-max", "2"])?;
    let rows = rows.as_array().ok_or("table is not an array")?;
    ensure(rows.len() == 12, || format!("{} rows, expected 12", rows.len()))?;
    let rho_a = [1, 2, 4, 8];
    let rho_c_a = [2, 4, 6, 8];
    for b in 0..=2u64 {
        for a in 0..4usize {
            let row = rows
                .iter()
                .find(|r| r["a"] == a as u64 && r["b"] == b)
                .ok_or_else(|| format!("missing row a={a} b={b}"))?;
            let want = (rho_a[a] + 8 * b, rho_c_a[a] + 8 * b);
            let got = (row["rho"].as_u64(), row["rho_c"].as_u64());
            ensure(got == (Some(want.0), Some(want.1)), || format!("a={a} b={b}: got {got:?}, want {want:?}"))?;
            ensure(row["n"].as_u64() == Some(1 << (a as u64 + 4 * b)), || format!("a={a} b={b}: wrong n"))?;
        }
    }
    Ok("12 rows exact".into())
}

fn ktheory() -> Check {
    let r = adjrank(&["verify", "--suite", "ktheory", "--n-max", "256", "--d-max", "64"])?;
    clean(&r, "n_mu_zero_iff_d_le_rho_c", Some(16_384))?;
    clean(&r, "ring_relations", None)?;
    Ok("16384 cases, 0 mismatches".into())
}

fn psi_sweep() -> Check {
    let r = adjrank(&["verify", "--suite", "psi", "--n", "2..8", "--trials", "1000"])?;
    clean(&r, "psi_invertible_on_z", Some(14_000))?;
    let odd = clean(&r, "psi_odd_for_even_order", None)?;
    let even = clean(&r, "cofactor_even_for_odd_order", None)?;
    Ok(format!("14000 invertible, {odd} oddness and {even} parity cases"))
}

fn adjugate() -> Check {
    let r = adjrank(&[
        "verify", "--suite", "adjugate", "--n", "1..6", "--trials", "500", "--low-rank-trials", "100",
    ])?;
    clean(&r, "adjugate_identity", Some(3000))?;
    // Rank ≤ n − 2 needs n ≥ 2.
    clean(&r, "cofactor_vanishes_at_low_rank", Some(500))?;
    Ok("3000 identities, 500 low-rank zeros".into())
}

fn sharpness() -> Check {
    let r = adjrank(&["verify", "--suite", "hr", "--n", "8,16"])?;
    let d8 = &proposition(&r, "sharpness_n8")?["detail"];
    let c8 = &d8["certificate"];
    ensure(
        c8["size"] == 8
            && c8["anticommutation_checks"] == 28
            && c8["orthogonality_checks"] == 8
            && c8["violations"].as_array().is_some_and(Vec::is_empty),
        || format!("n=8 certificate: {c8}"),
    )?;
    ensure(d8["r_n_n_minus_1"] == 8 && d8["lower"] == 8 && d8["upper"] == 8, || format!("n=8: {d8}"))?;
    ensure(d8["verdict"] == "EQUALITY", || format!("n=8 verdict {}", d8["verdict"]))?;
    clean(&r, "sharpness_n8", None)?;
    clean(&r, "norm_identity_n8", None)?;

    let d16 = &proposition(&r, "sharpness_n16")?["detail"];
    ensure(d16["certificate"]["size"] == 9, || format!("n=16 size {}", d16["certificate"]["size"]))?;
    ensure(d16["lower"] == 9 && d16["upper"] == 10, || format!("n=16 interval [{}, {}]", d16["lower"], d16["upper"]))?;
    clean(&r, "sharpness_n16", None)?;
    clean(&r, "norm_identity_n16", None)?;
    Ok("n=8 EQUALITY r=8 (28+8 checks), n=16 [9,10]".into())
}

fn homotopy() -> Check {
    let r = adjrank(&["verify", "--suite", "homotopy", "--n", "1..6", "--trials", "200"])?;
    let fixed = clean(&r, "psi_s_fixes_low_rank", None)?;
    let inv = clean(&r, "psi_s_invertible_on_z", Some(1200))?;
    clean(&r, "psi_s_endpoints", None)?;
    Ok(format!("{fixed} low-rank fixed, {inv} invertible"))
}

fn pencils() -> Check {
    const PENCILS: u64 = 700;
    let pts = oracles::grid_points();
    let mut agree = 0;
    for t in 0..PENCILS {
        let mut rng = seed::stream(2024, t);
        let (n, a, b) = oracles::random_pencil(&mut rng);
        let (am, bm) = (oracles::int_matrix(n, &a), oracles::int_matrix(n, &b));
        let report = pencil_minrank_exact(&am, &bm).map_err(|e| format!("pencil {t}: {e}"))?;
        let (grid_min, _) = oracles::grid_min_rank(n, &a, &b, &pts);
        ensure(verify_pencil_witness(&am, &bm, &report), || format!("pencil {t}: witness fails"))?;
        ensure(report.m_upper <= grid_min, || format!("pencil {t}: {} above grid {grid_min}", report.m_upper))?;
        if report.m_upper == grid_min {
            agree += 1;
        }
    }
    ensure(agree >= 500, || format!("only {agree} of {PENCILS} attain the minimum on the grid"))?;
    let worked = [
        ([[1, 0], [0, 1]], [[0, -1], [1, 0]], 2),
        ([[1, 0], [0, 0]], [[0, 0], [0, 1]], 1),
        ([[1, 0], [0, 1]], [[1, 0], [0, -1]], 1),
    ];
    for (a, b, m) in worked {
        let r = pencil_minrank_exact(&ExactMatrix::from_int_rows(&a), &ExactMatrix::from_int_rows(&b))
            .map_err(|e| e.to_string())?;
        ensure(r.m_upper == m && r.m_lower == Some(m), || format!("worked pencil {a:?}, {b:?}: {}", r.m_upper))?;
    }
    Ok(format!("{agree}/{PENCILS} agree on the grid, rest below it; 3 worked pencils"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("radon-hurwitz table", 1, table),
        ("ring n·mu = 0 exhaustive", 10, ktheory),
        ("psi soundness sweep", 120, psi_sweep),
        ("adjugate identity", 60, adjugate),
        ("sharpness witness", 10, sharpness),
        ("homotopy", 60, homotopy),
        ("pencil oracle", 120, pencils),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        let (status, msg) = match &result {
            Ok(m) if !over => ("PASS", m.clone()),
            Ok(m) => ("FAIL", format!("{m}; over budget")),
            Err(e) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {status} {name:<26} {:>7.2}s (limit {budget}s)  {msg}",
            i + 1,
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} of 7 criteria failed");
        std::process::exit(1);
    }
    println!("all 7 criteria passed");
}
