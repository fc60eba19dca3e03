//! Seeded end-to-end sweeps, one proposition per [`PropositionResult`].
//!
//! Every trial draws from its own stream `(seed, index)`, so reports are
//! identical for a fixed configuration however rayon schedules the work.
//! Counterexamples are kept in full (capped at [`MAX_COUNTEREXAMPLES`] per
//! proposition) so a failing run can be replayed from its output alone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exact::ExactMatrix;
use crate::hurwitz::{build_hr_family, norm_identity_holds, witness_sharpness, SharpnessReport};
use crate::ktheory::{self, KElement};
use crate::psi::{psi, psi_s, z_membership};
use crate::radon_hurwitz::{rho, rho_c};
use crate::seed;
use crate::subspace::{random_matrix, sample_matrix, SubspaceClass};
use crate::HurwitzError;

pub const MAX_COUNTEREXAMPLES: usize = 5;

/// Parameters `s` at which the homotopy is checked.
pub const HOMOTOPY_S: [(i64, i64); 4] = [(0, 1), (1, 3), (1, 2), (1, 1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Suite {
    Psi,
    Adjugate,
    Homotopy,
    Ktheory,
    Hr,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Psi, Suite::Adjugate, Suite::Homotopy, Suite::Ktheory, Suite::Hr];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropositionResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    pub counterexamples: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl PropositionResult {
    fn from_outcomes(suite: Suite, name: &str, outcomes: Vec<Option<Value>>) -> Self {
        let cases = outcomes.len() as u64;
        let failed: Vec<Value> = outcomes.into_iter().flatten().collect();
        PropositionResult {
            suite,
            name: name.to_string(),
            passed: failed.is_empty(),
            cases,
            failures: failed.len() as u64,
            counterexamples: failed.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
            detail: None,
        }
    }

    fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub propositions: Vec<PropositionResult>,
}

impl VerifyReport {
    pub fn new(seed: u64, propositions: Vec<PropositionResult>) -> Self {
        VerifyReport {
            seed,
            passed: propositions.iter().all(|p| p.passed),
            propositions,
        }
    }
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn trial_index(n: usize, class: u64, trial: usize) -> u64 {
    ((n as u64) << 40) | (class << 32) | trial as u64
}

/// A hermitian (`class = 0`) or real (`class = 1`) sample of rank `n−1` or `n`.
fn z_sample(n: usize, class: u64, trial: usize, master: u64) -> ExactMatrix {
    let mut rng = seed::stream(master, trial_index(n, class, trial));
    let rank = if rng.gen_bool(0.5) { n } else { n - 1 };
    let class = if class == 0 {
        SubspaceClass::Hermitian
    } else {
        SubspaceClass::Real
    };
    sample_matrix(class, n, rank, &mut rng).expect("rank within range")
}

/// A sample of rank at most `n − 2`; `n >= 2`.
fn low_rank_sample(n: usize, trial: usize, master: u64) -> ExactMatrix {
    let mut rng = seed::stream(master, trial_index(n, 7, trial));
    let rank = rng.gen_range(0..=n - 2);
    sample_matrix(SubspaceClass::General, n, rank, &mut rng).expect("rank within range")
}

fn matrix_payload(a: &ExactMatrix) -> Value {
    serde_json::to_value(a).expect("matrices serialize")
}

/// `det ψ(A) ≠ 0` on hermitian and real samples of rank `>= n−1`, with the
/// parity checks: `ψ(−A) = −ψ(A)` for even `n`, `(−A)ᶜ = Aᶜ` for odd `n`.
pub fn psi_suite(ns: &[usize], trials: usize, master: u64) -> Vec<PropositionResult> {
    let cases: Vec<(usize, u64, usize)> = ns
        .iter()
        .flat_map(|&n| (0..2u64).flat_map(move |c| (0..trials).map(move |t| (n, c, t))))
        .collect();
    let outcomes: Vec<(Option<Value>, bool, Option<Value>)> = cases
        .par_iter()
        .map(|&(n, class, t)| {
            let a = z_sample(n, class, t, master);
            let c = a.cofactor();
            let image = a.add(&c.map(|z| z.conj().mul_i()));
            let soundness = (!z_membership(&a).in_z || image.det().is_zero())
                .then(|| json!({ "n": n, "trial": t, "matrix": matrix_payload(&a) }));
            let minus = a.neg();
            let even = n % 2 == 0;
            let ok = if even {
                psi(&minus) == image.neg()
            } else {
                minus.cofactor() == c
            };
            let parity = (!ok).then(|| json!({ "n": n, "trial": t, "matrix": matrix_payload(&a) }));
            (soundness, even, parity)
        })
        .collect();

    let mut sound = Vec::with_capacity(outcomes.len());
    let mut odd = Vec::new();
    let mut parity = Vec::new();
    for (s, even, p) in outcomes {
        sound.push(s);
        if even {
            odd.push(p);
        } else {
            parity.push(p);
        }
    }
    vec![
        PropositionResult::from_outcomes(Suite::Psi, "psi_invertible_on_z", sound),
        PropositionResult::from_outcomes(Suite::Psi, "psi_odd_for_even_order", odd),
        PropositionResult::from_outcomes(Suite::Psi, "cofactor_even_for_odd_order", parity),
    ]
}

/// `A·ᵗ(Aᶜ) = det(A)·I` on general samples, and `Aᶜ = 0` once
/// `rank A <= n − 2`.
pub fn adjugate_suite(ns: &[usize], trials: usize, low_rank_trials: usize, master: u64) -> Vec<PropositionResult> {
    let identity: Vec<Option<Value>> = ns
        .iter()
        .flat_map(|&n| (0..trials).map(move |t| (n, t)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, t)| {
            let a = random_matrix(n, &mut seed::stream(master, trial_index(n, 5, t)));
            let lhs = a.mul(&a.cofactor().transpose());
            let rhs = ExactMatrix::identity(n).scale(&a.det());
            (lhs != rhs).then(|| json!({ "n": n, "trial": t, "matrix": matrix_payload(&a) }))
        })
        .collect();
    let vanishing: Vec<Option<Value>> = ns
        .iter()
        .filter(|&&n| n >= 2)
        .flat_map(|&n| (0..low_rank_trials).map(move |t| (n, t)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, t)| {
            let a = low_rank_sample(n, t, master);
            (!a.cofactor().is_zero()).then(|| json!({ "n": n, "trial": t, "matrix": matrix_payload(&a) }))
        })
        .collect();
    vec![
        PropositionResult::from_outcomes(Suite::Adjugate, "adjugate_identity", identity),
        PropositionResult::from_outcomes(Suite::Adjugate, "cofactor_vanishes_at_low_rank", vanishing),
    ]
}

/// `ψ_s` fixes rank `<= n−2` matrices for every sampled `s`, is invertible on
/// `𝒵` for `s > 0`, and has endpoints `ψ_0 = id`, `ψ_1 = ψ`.
pub fn homotopy_suite(ns: &[usize], trials: usize, master: u64) -> Vec<PropositionResult> {
    let ss: Vec<BigRational> = HOMOTOPY_S.iter().map(|&(p, q)| rational(p, q)).collect();
    let fixed: Vec<Option<Value>> = ns
        .iter()
        .filter(|&&n| n >= 2)
        .flat_map(|&n| (0..trials).map(move |t| (n, t)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, t)| {
            let a = low_rank_sample(n, t, master.wrapping_add(1));
            let bad: Vec<String> = ss.iter().filter(|s| psi_s(&a, s) != a).map(ToString::to_string).collect();
            (!bad.is_empty()).then(|| json!({ "n": n, "trial": t, "s": bad, "matrix": matrix_payload(&a) }))
        })
        .collect();

    // Hermitian, real and general members of 𝒵, in rotation.
    let z_cases: Vec<(Option<Value>, Option<Value>)> = ns
        .iter()
        .flat_map(|&n| (0..trials).map(move |t| (n, t)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, t)| {
            let a = match t % 3 {
                0 | 1 => z_sample(n, (t % 3) as u64, t, master.wrapping_add(2)),
                _ => {
                    let mut rng = seed::stream(master.wrapping_add(2), trial_index(n, 9, t));
                    loop {
                        let m = random_matrix(n, &mut rng);
                        if z_membership(&m).in_z {
                            break m;
                        }
                    }
                }
            };
            let bad: Vec<String> = ss[1..]
                .iter()
                .filter(|s| psi_s(&a, s).det().is_zero())
                .map(ToString::to_string)
                .collect();
            let invertible =
                (!bad.is_empty()).then(|| json!({ "n": n, "trial": t, "s": bad, "matrix": matrix_payload(&a) }));
            let endpoints_ok = psi_s(&a, &BigRational::zero()) == a && psi_s(&a, &BigRational::one()) == psi(&a);
            let endpoints = (!endpoints_ok).then(|| json!({ "n": n, "trial": t, "matrix": matrix_payload(&a) }));
            (invertible, endpoints)
        })
        .collect();
    let (invertible, endpoints): (Vec<_>, Vec<_>) = z_cases.into_iter().unzip();
    vec![
        PropositionResult::from_outcomes(Suite::Homotopy, "psi_s_fixes_low_rank", fixed),
        PropositionResult::from_outcomes(Suite::Homotopy, "psi_s_invertible_on_z", invertible),
        PropositionResult::from_outcomes(Suite::Homotopy, "psi_s_endpoints", endpoints),
    ]
}

/// Exhaustive `n ≤ n_max`, `d ≤ d_max`: `n·μ = 0` by ring arithmetic agrees
/// with `2^g(d) | n` and with `d ≤ ρ_C(n)`; plus the relations `μ² = −2μ` and
/// `μ^(g+1) = 0` in every dimension.
pub fn ktheory_suite(n_max: u64, d_max: u32) -> Vec<PropositionResult> {
    let equivalence: Vec<Option<Value>> = (1..=d_max)
        .into_par_iter()
        .flat_map_iter(|d| {
            let mu = KElement::mu(d).expect("d >= 1");
            let mut acc = KElement::zero(d).expect("d >= 1");
            let modulus: u64 = 1u64.checked_shl(ktheory::g(d)).unwrap_or(0);
            (1..=n_max)
                .map(|n| {
                    acc = ktheory::k_add(&acc, &mu).expect("same dimension");
                    let ring = acc.is_zero();
                    let divides = modulus != 0 && n % modulus == 0;
                    let bound = u64::from(d) <= rho_c(n).expect("n >= 1");
                    (ring != divides || ring != bound).then(|| {
                        json!({ "n": n, "d": d, "ring": ring, "divisibility": divides, "rho_c_bound": bound })
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let relations: Vec<Option<Value>> = (1..=d_max)
        .map(|d| {
            let mu = KElement::mu(d).expect("d >= 1");
            let sq = ktheory::k_mul(&mu, &mu).expect("same dimension");
            let minus_two_mu = mu.times(&BigInt::from(-2));
            let nilpotent = mu.pow(ktheory::g(d) + 1).is_zero();
            (sq != minus_two_mu || !nilpotent).then(|| json!({ "d": d }))
        })
        .collect();
    vec![
        PropositionResult::from_outcomes(Suite::Ktheory, "n_mu_zero_iff_d_le_rho_c", equivalence)
            .with_detail(json!({ "n_max": n_max, "d_max": d_max })),
        PropositionResult::from_outcomes(Suite::Ktheory, "ring_relations", relations),
    ]
}

/// Certifies the family of order `n`, checks `ᵗM·M = |x|²·I` on seeded
/// nonzero combinations `M`, and reports the sharpness verdict for
/// `r_{n,n−1}`.
pub fn hr_suite(ns: &[u64], trials: usize, master: u64) -> Result<Vec<PropositionResult>, HurwitzError> {
    let mut out = Vec::new();
    for &n in ns {
        let report: SharpnessReport = witness_sharpness(n, false)?;
        let family = build_hr_family(n)?;
        let consistent = report.lower == rho(n).expect("n >= 1")
            && report.upper == rho_c(n).expect("n >= 1")
            && report.certificate.passed();
        let detail = serde_json::to_value(&report).expect("report serializes");
        let sharp = PropositionResult::from_outcomes(
            Suite::Hr,
            &format!("sharpness_n{n}"),
            vec![(!consistent).then(|| detail.clone())],
        )
        .with_detail(detail);

        let norms: Vec<Option<Value>> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = seed::stream(master, trial_index(n as usize, 11, t));
                let x: Vec<BigRational> = (0..family.size()).map(|_| seed::nonzero_rational(&mut rng, 9)).collect();
                // With x ≠ 0 the identity already forces det M ≠ 0.
                (!norm_identity_holds(&family, &x)).then(|| json!({ "n": n, "trial": t, "x": x.iter().map(ToString::to_string).collect::<Vec<_>>() }))
            })
            .collect();
        out.push(sharp);
        out.push(PropositionResult::from_outcomes(Suite::Hr, &format!("norm_identity_n{n}"), norms));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for p in psi_suite(&[2, 3], 10, 1)
            .into_iter()
            .chain(adjugate_suite(&[1, 2, 3], 10, 5, 1))
            .chain(homotopy_suite(&[1, 2, 3], 6, 1))
            .chain(ktheory_suite(32, 12))
        {
            assert!(p.passed, "{p:?}");
            assert!(p.cases > 0, "{p:?}");
        }
    }

    #[test]
    fn case_counts() {
        let r = psi_suite(&[2, 3], 4, 1);
        assert_eq!(r[0].cases, 16);
        assert_eq!(r[1].cases, 8);
        assert_eq!(r[2].cases, 8);
        assert_eq!(ktheory_suite(10, 7)[0].cases, 70);
    }

    #[test]
    fn deterministic() {
        assert_eq!(psi_suite(&[3], 5, 9), psi_suite(&[3], 5, 9));
        assert_eq!(homotopy_suite(&[3], 5, 9), homotopy_suite(&[3], 5, 9));
    }

    #[test]
    fn hr_verdicts() {
        let r = hr_suite(&[8, 16], 5, 0).unwrap();
        assert!(r.iter().all(|p| p.passed));
        assert_eq!(r[0].detail.as_ref().unwrap()["verdict"], "EQUALITY");
        assert_eq!(r[2].detail.as_ref().unwrap()["verdict"], "GAP");
        assert!(hr_suite(&[3], 1, 0).is_err());
    }

    #[test]
    fn failures_are_reported() {
        let p = PropositionResult::from_outcomes(Suite::Psi, "x", (0..8).map(|i| Some(json!(i))).collect());
        assert!(!p.passed);
        assert_eq!((p.cases, p.failures, p.counterexamples.len()), (8, 8, MAX_COUNTEREXAMPLES));
        assert!(!VerifyReport::new(0, vec![p]).passed);
    }
}
