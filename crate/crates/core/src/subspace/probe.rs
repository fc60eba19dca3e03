//! Certified upper bounds on the minimal rank by exact evaluation at seeded
//! and structured points of the subspace.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{MinRankReport, ReportMode, SubspaceBasis, Witness};
use crate::error::SubspaceError;
use crate::exact::fmt_rational;
use crate::seed;

const COEFF_BOUND: i64 = 5;

/// Structured points: every `eᵢ`, then `eᵢ + eⱼ` and `eᵢ − eⱼ` for `i < j`.
/// Negations are omitted since `rank(−M) = rank(M)`.
fn structured_points(d: usize) -> Vec<Vec<BigRational>> {
    let unit = |i: usize, s: i64| {
        let mut v = vec![BigRational::zero(); d];
        v[i] = BigRational::from_integer(BigInt::from(s));
        v
    };
    let mut out: Vec<Vec<BigRational>> = (0..d).map(|i| unit(i, 1)).collect();
    for i in 0..d {
        for j in i + 1..d {
            for s in [1i64, -1] {
                let mut v = unit(i, 1);
                v[j] = BigRational::from_integer(BigInt::from(s));
                out.push(v);
            }
        }
    }
    out
}

fn random_point(d: usize, master: u64, trial: u64) -> Vec<BigRational> {
    let mut rng = seed::stream(master, trial);
    (0..d)
        .map(|_| seed::nonzero_rational(&mut rng, COEFF_BOUND))
        .collect()
}

/// Minimum exact rank over the structured points and `trials` seeded random
/// points. The report's `m_upper` is achieved by its witness, so `m_V <=
/// m_upper`; no lower bound is claimed. Ties keep the earliest point, so the
/// result is independent of evaluation order.
pub fn minrank_probe(
    v: &SubspaceBasis,
    trials: usize,
    seed: u64,
) -> Result<MinRankReport, SubspaceError> {
    if trials == 0 {
        return Err(SubspaceError::NoTrials);
    }
    let d = v.d();
    let structured = structured_points(d);
    let n_struct = structured.len();
    let total = n_struct + trials;
    let (best_idx, best_rank) = (0..total)
        .into_par_iter()
        .map(|idx| {
            let x = if idx < n_struct {
                structured[idx].clone()
            } else {
                random_point(d, seed, (idx - n_struct) as u64)
            };
            (idx, v.combination(&x).rank())
        })
        .min_by_key(|&(idx, rank)| (rank, idx))
        .expect("at least one point");

    let x = if best_idx < n_struct {
        structured[best_idx].clone()
    } else {
        random_point(d, seed, (best_idx - n_struct) as u64)
    };
    let matrix = v.combination(&x);
    debug_assert_eq!(matrix.rank(), best_rank);
    Ok(MinRankReport {
        mode: ReportMode::Probe,
        n: v.n(),
        d,
        m_lower: None,
        m_upper: best_rank,
        witness: Witness::Rational {
            coefficients: x.iter().map(fmt_rational).collect(),
            matrix,
            rank: best_rank,
        },
        samples: total,
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactMatrix;
    use crate::hurwitz::build_hr_family;
    use crate::subspace::SubspaceClass;

    #[test]
    fn diagonal_pair() {
        let v = SubspaceBasis::new(
            SubspaceClass::Real,
            vec![
                ExactMatrix::from_int_rows(&[[1, 0], [0, 0]]),
                ExactMatrix::from_int_rows(&[[0, 0], [0, 1]]),
            ],
        )
        .unwrap();
        let r = minrank_probe(&v, 10, 3).unwrap();
        assert_eq!(r.m_upper, 1);
        match &r.witness {
            Witness::Rational { matrix, .. } => {
                assert_eq!(*matrix, ExactMatrix::from_int_rows(&[[1, 0], [0, 0]]))
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert_eq!(r.samples, 2 + 2 + 10);
    }

    #[test]
    fn identity_line() {
        let v = SubspaceBasis::new(SubspaceClass::Real, vec![ExactMatrix::identity(2)]).unwrap();
        let r = minrank_probe(&v, 5, 0).unwrap();
        assert_eq!(r.m_upper, 2);
        assert_eq!(r.m_lower, None);
    }

    #[test]
    fn hurwitz_span_never_drops() {
        let f = build_hr_family(8).unwrap();
        let v = SubspaceBasis::new(SubspaceClass::Real, f.matrices().to_vec()).unwrap();
        let r = minrank_probe(&v, 50, 42).unwrap();
        assert_eq!(r.m_upper, 8);
    }

    #[test]
    fn seeded_reports_are_identical() {
        let f = build_hr_family(4).unwrap();
        let v = SubspaceBasis::new(SubspaceClass::Real, f.matrices().to_vec()).unwrap();
        assert_eq!(minrank_probe(&v, 20, 9).unwrap(), minrank_probe(&v, 20, 9).unwrap());
        assert_eq!(minrank_probe(&v, 0, 9), Err(SubspaceError::NoTrials));
    }
}
