//! Complex K-theory of real projective space `RP^(d-1)`, modelled as the unital
//! quotient `Z[μ] / (μ² + 2μ, 2^g(d)·μ)` with `g(d) = ⌊(d − 1)/2⌋`.
//!
//! Every element has the unique normal form `c + m·μ` with `0 <= m < 2^g(d)`.
//! The reduced group consists of the elements with `c = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::KTheoryError;
use crate::radon_hurwitz;

/// `g(d) = ⌊(d − 1)/2⌋`.
pub fn g(d: u32) -> u32 {
    d.saturating_sub(1) / 2
}

fn modulus(d: u32) -> BigInt {
    BigInt::one() << g(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KElement {
    d: u32,
    c: BigInt,
    m: BigInt,
}

impl KElement {
    fn reduced(d: u32, c: BigInt, m: BigInt) -> Self {
        let m = m.mod_floor(&modulus(d));
        KElement { d, c, m }
    }

    pub fn from_int(d: u32, c: i64) -> Result<Self, KTheoryError> {
        check_dim(d)?;
        Ok(KElement {
            d,
            c: c.into(),
            m: BigInt::zero(),
        })
    }

    pub fn one(d: u32) -> Result<Self, KTheoryError> {
        Self::from_int(d, 1)
    }

    pub fn zero(d: u32) -> Result<Self, KTheoryError> {
        Self::from_int(d, 0)
    }

    /// The generator `μ = [ξ_C] − [C]`.
    pub fn mu(d: u32) -> Result<Self, KTheoryError> {
        check_dim(d)?;
        Ok(Self::reduced(d, BigInt::zero(), BigInt::one()))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Coefficient of `1`.
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Coefficient of `μ`, in `[0, 2^g(d))`.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.m.is_zero()
    }

    /// Member of the reduced ring (the ideal generated by `μ`).
    pub fn is_reduced(&self) -> bool {
        self.c.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self::reduced(self.d, -&self.c, -&self.m)
    }

    /// `k·x` for an integer `k`.
    pub fn times(&self, k: &BigInt) -> Self {
        Self::reduced(self.d, &self.c * k, &self.m * k)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::reduced(self.d, BigInt::one(), BigInt::zero());
        while e > 0 {
            if e & 1 == 1 {
                acc = k_mul(&acc, &base).expect("same dimension");
            }
            base = k_mul(&base, &base).expect("same dimension");
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*mu (d = {})", self.c, self.m, self.d)
    }
}

fn check_dim(d: u32) -> Result<(), KTheoryError> {
    if d == 0 {
        Err(KTheoryError::ZeroDimension)
    } else {
        Ok(())
    }
}

fn check_same(x: &KElement, y: &KElement) -> Result<(), KTheoryError> {
    if x.d != y.d {
        Err(KTheoryError::DimensionMismatch(x.d, y.d))
    } else {
        Ok(())
    }
}

/// Normal form of `Σ coeffs[j]·μ^j`, using `μ^j = (−2)^(j−1)·μ` for `j >= 1`.
pub fn k_normalize(coeffs: &[i64], d: u32) -> Result<KElement, KTheoryError> {
    check_dim(d)?;
    let gd = g(d) as usize;
    let c = coeffs.first().copied().map(BigInt::from).unwrap_or_default();
    let mut m = BigInt::zero();
    let mut power = BigInt::one();
    // (-2)^(j-1) vanishes modulo 2^g once j - 1 >= g.
    for &coef in coeffs.iter().skip(1).take(gd) {
        m += &power * coef;
        power *= -2;
    }
    Ok(KElement::reduced(d, c, m))
}

pub fn k_add(x: &KElement, y: &KElement) -> Result<KElement, KTheoryError> {
    check_same(x, y)?;
    Ok(KElement::reduced(x.d, &x.c + &y.c, &x.m + &y.m))
}

/// `(c₁ + m₁μ)(c₂ + m₂μ) = c₁c₂ + (c₁m₂ + c₂m₁ − 2m₁m₂)·μ`.
pub fn k_mul(x: &KElement, y: &KElement) -> Result<KElement, KTheoryError> {
    check_same(x, y)?;
    let c = &x.c * &y.c;
    let m = &x.c * &y.m + &y.c * &x.m - BigInt::from(2) * &x.m * &y.m;
    Ok(KElement::reduced(x.d, c, m))
}

/// `n·μ = 0` decided by ring arithmetic: `μ` added to itself `n` times.
pub fn n_mu_zero_by_ring(n: u64, d: u32) -> Result<bool, KTheoryError> {
    let mu = KElement::mu(d)?;
    let mut acc = KElement::zero(d)?;
    for _ in 0..n {
        acc = k_add(&acc, &mu)?;
    }
    Ok(acc.is_zero())
}

/// `n·μ = 0 ⟺ d <= ρ_C(n)`. Both sides are evaluated independently (the
/// divisibility `2^g(d) | n` and the comparison with `ρ_C(n)`); disagreement
/// is reported as an error rather than resolved.
pub fn n_mu_zero(n: u64, d: u32) -> Result<bool, KTheoryError> {
    check_dim(d)?;
    if n == 0 {
        return Err(KTheoryError::ZeroMultiple);
    }
    let by_divisibility = n_mu_zero_by_divisibility(n, d);
    let rho_c = radon_hurwitz::rho_c(n).map_err(|_| KTheoryError::ZeroMultiple)?;
    let by_rho = u64::from(d) <= rho_c;
    if by_divisibility != by_rho {
        return Err(KTheoryError::PropositionViolated { n, d });
    }
    Ok(by_divisibility)
}

fn n_mu_zero_by_divisibility(n: u64, d: u32) -> bool {
    (BigInt::from(n) % modulus(d)).is_zero()
}
