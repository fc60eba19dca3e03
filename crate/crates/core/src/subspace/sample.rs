//! Seeded matrices of prescribed class and exact rank.

use num_traits::Zero;
use rand::Rng;

use super::SubspaceClass;
use crate::error::SubspaceError;
use crate::exact::{ExactMatrix, GaussianRational};
use crate::seed;

const MAX_ATTEMPTS: usize = 64;
const ENTRY_BOUND: i64 = 3;

/// A matrix of the requested class with rank exactly `rank`.
///
/// Hermitian samples are `B·D·B*` with `B` an invertible Gaussian-integer
/// matrix and `D` real diagonal with `rank` nonzero entries. Real and general
/// samples are products `X·Y` of `n × rank` and `rank × n` integer (resp.
/// Gaussian-integer) matrices. The rank is verified exactly; draws are
/// retried a bounded number of times.
pub fn sample_matrix<R: Rng>(
    class: SubspaceClass,
    n: usize,
    rank: usize,
    rng: &mut R,
) -> Result<ExactMatrix, SubspaceError> {
    if n == 0 || rank > n {
        return Err(SubspaceError::RankOutOfRange { n, rank });
    }
    if rank == 0 {
        return Ok(ExactMatrix::zeros(n));
    }
    for _ in 0..MAX_ATTEMPTS {
        let m = match class {
            SubspaceClass::Hermitian => hermitian_candidate(n, rank, rng),
            SubspaceClass::Real => product_candidate(n, rank, rng, false),
            SubspaceClass::General => product_candidate(n, rank, rng, true),
        };
        if let Some(m) = m {
            if m.rank() == rank {
                return Ok(m);
            }
        }
    }
    Err(SubspaceError::SamplingExhausted {
        rank,
        attempts: MAX_ATTEMPTS,
    })
}

fn hermitian_candidate<R: Rng>(n: usize, rank: usize, rng: &mut R) -> Option<ExactMatrix> {
    let b = ExactMatrix::from_fn(n, |_, _| seed::gaussian_int(rng, 2));
    if b.det().is_zero() {
        return None;
    }
    let d = ExactMatrix::diag(
        (0..n)
            .map(|i| {
                if i < rank {
                    GaussianRational::from_int(nonzero_int(rng, ENTRY_BOUND))
                } else {
                    GaussianRational::zero()
                }
            })
            .collect(),
    );
    Some(b.mul(&d).mul(&b.conj_transpose()))
}

fn product_candidate<R: Rng>(n: usize, rank: usize, rng: &mut R, complex: bool) -> Option<ExactMatrix> {
    let entry = |rng: &mut R| {
        if complex {
            seed::gaussian_int(rng, ENTRY_BOUND)
        } else {
            GaussianRational::from_int(seed::small_int(rng, ENTRY_BOUND))
        }
    };
    let x: Vec<GaussianRational> = (0..n * rank).map(|_| entry(rng)).collect();
    let y: Vec<GaussianRational> = (0..rank * n).map(|_| entry(rng)).collect();
    Some(ExactMatrix::from_fn(n, |i, j| {
        (0..rank).fold(GaussianRational::zero(), |acc, t| {
            acc + &x[i * rank + t] * &y[t * n + j]
        })
    }))
}

fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = seed::small_int(rng, bound);
        if v != 0 {
            return v;
        }
    }
}

/// A general complex matrix with small Gaussian-rational entries, some of
/// them non-integral.
pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> ExactMatrix {
    ExactMatrix::from_fn(n, |_, _| {
        let re = seed::small_int(rng, 4);
        let im = seed::small_int(rng, 4);
        let den = rng.gen_range(1..=3);
        GaussianRational::new(
            num_rational::BigRational::new(re.into(), den.into()),
            num_rational::BigRational::new(im.into(), 1.into()),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::z_membership;

    #[test]
    fn class_and_rank_postconditions() {
        for n in 1..=5 {
            for r in 0..=n {
                for class in [SubspaceClass::Hermitian, SubspaceClass::Real, SubspaceClass::General] {
                    let mut rng = seed::stream(11, (n * 10 + r) as u64);
                    let m = sample_matrix(class, n, r, &mut rng).unwrap();
                    assert_eq!(m.rank(), r, "{class:?} n={n} r={r}");
                    assert!(class.admits(&m));
                }
            }
        }
    }

    #[test]
    fn examples() {
        let mut rng = seed::stream(1, 0);
        let h = sample_matrix(SubspaceClass::Hermitian, 3, 3, &mut rng).unwrap();
        assert!(h.is_hermitian());
        assert!(h.det().is_real() && !h.det().is_zero());
        let r = sample_matrix(SubspaceClass::Real, 4, 3, &mut rng).unwrap();
        assert_eq!(r.rank(), 3);
        let h = sample_matrix(SubspaceClass::Hermitian, 2, 1, &mut rng).unwrap();
        assert_eq!(h.rank(), 1);
        assert!(z_membership(&h).in_z);
    }

    #[test]
    fn rejects_bad_rank() {
        let mut rng = seed::stream(1, 0);
        assert_eq!(
            sample_matrix(SubspaceClass::Real, 2, 3, &mut rng),
            Err(SubspaceError::RankOutOfRange { n: 2, rank: 3 })
        );
    }

    #[test]
    fn deterministic_per_stream() {
        let a = sample_matrix(SubspaceClass::Hermitian, 4, 3, &mut seed::stream(5, 9)).unwrap();
        let b = sample_matrix(SubspaceClass::Hermitian, 4, 3, &mut seed::stream(5, 9)).unwrap();
        assert_eq!(a, b);
    }
}
