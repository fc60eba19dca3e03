//! Fraction-free kernels over the Gaussian integers `Z[i]`.
//!
//! A matrix over `Q(i)` is scaled by the lcm `L` of its denominators; the
//! elimination then runs on integer pairs with exact divisions only, which
//! avoids the gcd normalization that dominates rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    fn neg(self) -> Self {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussInt {
                re: &self.re * &o.re,
                im: BigInt::zero(),
            };
        }
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// `self·a − other·b`, the fraction-free update.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let x = a.mul(b);
        let y = c.mul(d);
        GaussInt {
            re: x.re - y.re,
            im: x.im - y.im,
        }
    }

    /// Division known to be exact.
    fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            debug_assert!((&self.re % &d.re).is_zero() && (&self.im % &d.re).is_zero());
            return GaussInt {
                re: &self.re / &d.re,
                im: &self.im / &d.re,
            };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &norm).is_zero() && (&im % &norm).is_zero());
        GaussInt {
            re: re / &norm,
            im: im / &norm,
        }
    }

    pub(crate) fn into_rational(self, scale: &BigInt) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(self.re, scale.clone()),
            BigRational::new(self.im, scale.clone()),
        )
    }
}

/// `(L·x, L)` for `L` the lcm of all denominators.
pub(crate) fn clear_denominators(entries: &[GaussianRational]) -> (Vec<GaussInt>, BigInt) {
    let l = entries.iter().fold(BigInt::one(), |acc, z| {
        acc.lcm(z.re().denom()).lcm(z.im().denom())
    });
    let scaled = entries
        .iter()
        .map(|z| GaussInt {
            re: z.re().numer() * (&l / z.re().denom()),
            im: z.im().numer() * (&l / z.im().denom()),
        })
        .collect();
    (scaled, l)
}

/// Bareiss determinant of a row-major `n × n` Gaussian-integer matrix.
pub(crate) fn det(n: usize, mut m: Vec<GaussInt>) -> GaussInt {
    if n == 0 {
        return GaussInt::one();
    }
    let mut negate = false;
    let mut prev = GaussInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return GaussInt::default();
            };
            for c in k..n {
                m.swap(k * n + c, r * n + c);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = GaussInt::cross(&m[i * n + j], &m[k * n + k], &m[i * n + k], &m[k * n + j]);
                m[i * n + j] = if prev.is_one() { t } else { t.div_exact(&prev) };
            }
        }
        prev = m[k * n + k].clone();
    }
    let d = m[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Rank of a row-major `rows × cols` matrix by fraction-free elimination.
/// After each step the active entries are minors of the input, so the
/// division by the previous pivot stays exact even when columns are skipped.
pub(crate) fn rank(rows: usize, cols: usize, mut m: Vec<GaussInt>) -> usize {
    let mut rank = 0;
    let mut prev = GaussInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for c in 0..cols {
                m.swap(p * cols + c, rank * cols + c);
            }
        }
        let pivot = m[rank * cols + col].clone();
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = GaussInt::cross(&m[i * cols + j], &pivot, &m[i * cols + col], &m[rank * cols + j]);
                m[i * cols + j] = if prev.is_one() { t } else { t.div_exact(&prev) };
            }
            m[i * cols + col] = GaussInt::default();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Classical adjugate `adj(M)` of a nonsingular `M` by fraction-free
/// Gauss–Jordan on `[M | I]`, which ends at `[d·I | d·M⁻¹]` with
/// `d = ±det M` (the sign tracks row swaps). Returns `None` when `M` is
/// singular.
pub(crate) fn adjugate(n: usize, m: &[GaussInt]) -> Option<Vec<GaussInt>> {
    let w = 2 * n;
    let mut a: Vec<GaussInt> = Vec::with_capacity(n * w);
    for i in 0..n {
        a.extend_from_slice(&m[i * n..(i + 1) * n]);
        a.extend((0..n).map(|j| if i == j { GaussInt::one() } else { GaussInt::default() }));
    }
    let mut prev = GaussInt::one();
    let mut negate = false;
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r * w + k].is_zero())?;
        if p != k {
            for c in 0..w {
                a.swap(p * w + c, k * w + c);
            }
            negate = !negate;
        }
        let pivot = a[k * w + k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let lead = a[i * w + k].clone();
            for j in (0..w).filter(|&j| j != k) {
                let t = GaussInt::cross(&a[i * w + j], &pivot, &lead, &a[k * w + j]);
                a[i * w + j] = if prev.is_one() { t } else { t.div_exact(&prev) };
            }
            a[i * w + k] = GaussInt::default();
        }
        prev = pivot;
    }
    Some(
        (0..n)
            .flat_map(|i| a[i * w + n..(i + 1) * w].to_vec())
            .map(|z| if negate { z.neg() } else { z })
            .collect(),
    )
}
