//! Report rendering. JSON is the canonical form; CSV and text are flat views
//! of the same fields. Nothing here depends on time or scheduling, so equal
//! reports render to equal bytes.

use std::fmt::Write;

use adjrank_core::radon_hurwitz::{table_csv, table_text, RhoReport, RhoRow};
use adjrank_core::subspace::{MinRankReport, Witness};
use adjrank_core::verify::VerifyReport;
use serde::Serialize;

use crate::args::Format;
use crate::commands::{HrReport, PsiReport};

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

/// Minimal CSV quoting for free-form cells.
fn cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rho(r: &RhoReport, f: Format) -> String {
    match f {
        Format::Json => json(r),
        Format::Csv => format!("n,a,b,k,rho,rho_c\n{},{},{},{},{},{}\n", r.n, r.a, r.b, r.k, r.rho, r.rho_c),
        Format::Text => format!(
            "n = {} = 2^({} + 4*{}) * {}\nrho = {}\nrho_c = {}\n",
            r.n,
            r.a,
            r.b,
            2 * r.k + 1,
            r.rho,
            r.rho_c
        ),
    }
}

pub fn rho_table(rows: &[RhoRow], f: Format) -> String {
    match f {
        Format::Json => json(&rows),
        Format::Csv => table_csv(rows),
        Format::Text => table_text(rows),
    }
}

pub fn verify(r: &VerifyReport, f: Format) -> String {
    match f {
        Format::Json => json(r),
        Format::Csv => {
            let mut out = String::from("suite,proposition,passed,cases,failures,seed\n");
            for p in &r.propositions {
                let suite = serde_json::to_value(p.suite).expect("suite serializes");
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    suite.as_str().unwrap_or_default(),
                    cell(&p.name),
                    p.passed,
                    p.cases,
                    p.failures,
                    r.seed
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("seed {}\n", r.seed);
            for p in &r.propositions {
                let mark = if p.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {:<40} {:>8} cases {:>6} failures", p.name, p.cases, p.failures).unwrap();
            }
            writeln!(out, "{}", if r.passed { "all passed" } else { "FAILED" }).unwrap();
            out
        }
    }
}

pub fn psi(r: &PsiReport, f: Format) -> String {
    let c = &r.certificate;
    match f {
        Format::Json => json(r),
        Format::Csv => format!(
            "n,s,in_z,reason,det_output,invertible\n{},{},{},{},{},{}\n",
            c.input.n(),
            cell(&c.s),
            r.z_membership.in_z,
            serde_json::to_value(r.z_membership.reason).expect("reason serializes").as_str().unwrap_or_default(),
            cell(&c.det_output.to_string()),
            c.invertible
        ),
        Format::Text => format!(
            "s = {}\npsi_s(A) =\n{}det = {}\ninvertible = {}\nin_z = {}\n",
            c.s,
            adjrank_core::exact::to_text(&c.output),
            c.det_output,
            c.invertible,
            r.z_membership.in_z
        ),
    }
}

pub fn minrank(r: &MinRankReport, f: Format) -> String {
    let mode = serde_json::to_value(r.mode).expect("mode serializes");
    let mode = mode.as_str().unwrap_or_default();
    let lower = r.m_lower.map(|m| m.to_string()).unwrap_or_default();
    let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
    match f {
        Format::Json => json(r),
        Format::Csv => format!(
            "mode,n,d,m_lower,m_upper,samples,seed\n{mode},{},{},{lower},{},{},{seed}\n",
            r.n, r.d, r.m_upper, r.samples
        ),
        Format::Text => {
            let mut out = format!("mode {mode}\nn = {}, d = {}\n", r.n, r.d);
            match r.m_lower {
                Some(m) => writeln!(out, "m_V = {m}").unwrap(),
                None => writeln!(out, "m_V <= {}", r.m_upper).unwrap(),
            }
            match &r.witness {
                Witness::Rational {
                    coefficients, matrix, ..
                } => {
                    writeln!(out, "witness coefficients ({})", coefficients.join(", ")).unwrap();
                    out.push_str(&adjrank_core::exact::to_text(matrix));
                }
                Witness::Algebraic {
                    minor_size,
                    polynomial,
                    interval,
                    ..
                } => {
                    writeln!(
                        out,
                        "witness x*A + B at the root in ({}, {}] of the gcd of {minor_size}-minors, coefficients [{}]",
                        interval[0],
                        interval[1],
                        polynomial.join(", ")
                    )
                    .unwrap();
                }
            }
            if let Some(s) = r.seed {
                writeln!(out, "seed {s}, {} samples", r.samples).unwrap();
            }
            out
        }
    }
}

pub fn hr(r: &HrReport, f: Format) -> String {
    let c = &r.certificate;
    match f {
        Format::Json => json(r),
        Format::Csv => format!(
            "n,size,anticommutation_checks,orthogonality_checks,skewness_checks,violations,passed\n{},{},{},{},{},{},{}\n",
            c.n,
            c.size,
            c.anticommutation_checks,
            c.orthogonality_checks,
            c.skewness_checks,
            c.violations.len(),
            c.passed()
        ),
        Format::Text => {
            let mut out = format!(
                "order {}, {} matrices\n{} anticommutation, {} orthogonality, {} skewness checks\n",
                c.n, c.size, c.anticommutation_checks, c.orthogonality_checks, c.skewness_checks
            );
            if c.passed() {
                out.push_str("certified: every nonzero combination is invertible\n");
            } else {
                writeln!(out, "{} violations: {:?}", c.violations.len(), c.violations).unwrap();
            }
            if let Some(p) = &r.written {
                writeln!(out, "written to {p}").unwrap();
            }
            out
        }
    }
}
