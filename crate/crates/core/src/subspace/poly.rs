//! Dense univariate integer polynomials, exact gcd and Sturm sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SubspaceError;

/// `Σ coeffs[j]·x^j` with no trailing (high-degree) zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Remainder of `self` by `d` scaled by the positive factor
    /// `|lc(d)|^(deg self − deg d + 1)`, so its sign agrees with the true
    /// rational remainder. Panics if `d` is zero.
    pub fn sign_preserving_prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(mut da) = self.degree() else {
            return Self::zero();
        };
        if da < dd {
            return self.clone();
        }
        let lc = d.leading().expect("nonzero").clone();
        let lc_abs = lc.abs();
        let delta = (da - dd + 1) as u32;
        let mut r = self.coeffs.clone();
        let mut used = 0u32;
        // r <- lc·r − r_lead·x^(da−dd)·d, repeated; each step multiplies by lc.
        loop {
            let lead = r[da].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[da - dd + j] -= &lead * dj;
            }
            used += 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            match r.len().checked_sub(1) {
                Some(nd) if nd >= dd => da = nd,
                _ => break,
            }
        }
        // Multiplied by lc^used so far; bring the factor to |lc|^delta.
        let mut out = Self::new(r);
        let extra = lc_abs.pow(delta - used);
        if !extra.is_one() {
            out = Self::new(out.coeffs.iter().map(|c| c * &extra).collect());
        }
        if lc.is_negative() && used % 2 == 1 {
            out = out.neg();
        }
        out
    }

    /// Exact quotient over `Q`, returned as a primitive integer polynomial.
    /// `None` if `d` does not divide `self` in `Q[x]`.
    pub fn div_exact_primitive(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < dd {
            return None;
        }
        let lc = BigRational::from_integer(d.leading()?.clone());
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut q = vec![BigRational::zero(); da - dd + 1];
        for shift in (0..=da - dd).rev() {
            let f = &r[shift + dd] / &lc;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &f * BigRational::from_integer(dj.clone());
            }
            q[shift] = f;
        }
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        Some(from_rational_coeffs(&q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.sign_preserving_prem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive();
        }
        self.div_exact_primitive(&g).expect("gcd divides")
    }

    /// Cauchy bound: every real root lies strictly inside `(−B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let lc = BigRational::from_integer(self.leading().expect("nonzero").abs());
        let m = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lc)
            .max()
            .unwrap_or_default();
        m + BigRational::one()
    }
}

fn from_rational_coeffs(q: &[BigRational]) -> IntPolynomial {
    let l = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPolynomial::new(
        q.iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect(),
    )
    .primitive()
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{j}")?,
                (_, false) => write!(f, "{a}*x^{j}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The Sturm chain of the square-free part of a nonzero polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Result<Self, SubspaceError> {
        if p.is_zero() {
            return Err(SubspaceError::ZeroPolynomial);
        }
        let p0 = p.square_free();
        let mut chain = vec![p0.clone()];
        let mut prev = p0;
        let mut cur = chain[0].derivative();
        while !cur.is_zero() {
            let next = prev.sign_preserving_prem(&cur).neg();
            // Dividing by the (positive) content keeps every sign intact.
            let c = next.content();
            let next = if c.is_zero() || c.is_one() {
                next
            } else {
                IntPolynomial::new(next.coeffs.iter().map(|a| a / &c).collect())
            };
            chain.push(cur.clone());
            prev = cur;
            cur = next;
        }
        Ok(Self { chain })
    }

    /// The square-free polynomial heading the chain.
    pub fn head(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lc = sign_int(p.leading().expect("chain members are nonzero"));
            let deg_odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !deg_odd {
                lc
            } else {
                -lc
            }
        }))
    }

    pub fn count_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Disjoint half-open intervals `(lo, hi]`, each holding exactly one real
    /// root, with `hi − lo <= width`.
    pub fn isolate(&self, width: &BigRational) -> Vec<(BigRational, BigRational)> {
        let b = self.head().root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        let two = BigRational::from_integer(2.into());
        while let Some((lo, hi)) = stack.pop() {
            match self.count_in(&lo, &hi) {
                0 => {}
                1 if &(&hi - &lo) <= width => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort();
        out
    }
}

fn sign(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_int(q: &BigInt) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

/// Number of distinct real roots of `p`.
pub fn sturm_real_roots(p: &IntPolynomial) -> Result<usize, SubspaceError> {
    Ok(SturmSequence::new(p)?.count_real_roots())
}

/// Coefficients beyond this magnitude skip rational-root enumeration.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

fn divisors(x: &BigInt) -> Option<Vec<u64>> {
    let x: u64 = x.abs().try_into().ok()?;
    if x > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            if d * d != x {
                out.push(x / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// All rational roots, ascending. `None` when the coefficients are too large
/// for divisor enumeration.
pub fn rational_roots(p: &IntPolynomial) -> Option<Vec<BigRational>> {
    if p.is_zero() {
        return None;
    }
    let mut q = p.square_free();
    let mut roots = Vec::new();
    if q.coeffs[0].is_zero() {
        roots.push(BigRational::zero());
        q = IntPolynomial::new(q.coeffs[1..].to_vec());
    }
    if q.is_constant() {
        return Some(roots);
    }
    let num = divisors(&q.coeffs[0])?;
    let den = divisors(q.leading().expect("nonconstant"))?;
    for u in &num {
        for v in &den {
            for s in [-1i64, 1] {
                let r = BigRational::new(BigInt::from(*u) * s, BigInt::from(*v));
                if q.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_real_roots(&p(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_real_roots(&p(&[0, -1, 0, 1])).unwrap(), 3);
        assert_eq!(sturm_real_roots(&p(&[5])).unwrap(), 0);
        assert_eq!(sturm_real_roots(&IntPolynomial::zero()), Err(SubspaceError::ZeroPolynomial));
    }

    #[test]
    fn repeated_roots_count_once() {
        // (x - 1)^2 (x + 2)^3
        let f = p(&[-1, 1]);
        let gq = p(&[2, 1]);
        let mut prod = p(&[1]);
        for m in [&f, &f, &gq, &gq, &gq] {
            prod = mul(&prod, m);
        }
        assert_eq!(sturm_real_roots(&prod).unwrap(), 2);
        assert_eq!(prod.square_free(), mul(&f, &gq));
    }

    fn mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
        let mut c = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        IntPolynomial::new(c)
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(x^2 - 2) with odd-degree members in the chain.
        assert_eq!(sturm_real_roots(&p(&[2, 0, -1])).unwrap(), 2);
        assert_eq!(sturm_real_roots(&p(&[0, 1, 0, -1])).unwrap(), 3);
        assert_eq!(sturm_real_roots(&p(&[-3, 0, 0, -2])).unwrap(), 1);
    }

    #[test]
    fn gcd_and_division() {
        let a = mul(&p(&[-1, 1]), &p(&[1, 0, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[3, 2]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact_primitive(&p(&[-1, 1])).unwrap(), p(&[1, 0, 1]));
        assert!(a.div_exact_primitive(&p(&[1, 1])).is_none());
        assert_eq!(p(&[4, 6]).gcd(&p(&[6])), p(&[1]));
        assert_eq!(p(&[-4, -2]).primitive(), p(&[2, 1]));
    }

    #[test]
    fn prem_matches_rational_sign() {
        // x^3 + 1 divided by -2x + 1: rational remainder is 9/8 > 0.
        let r = p(&[1, 0, 0, 1]).sign_preserving_prem(&p(&[1, -2]));
        assert_eq!(r.degree(), Some(0));
        assert!(r.coeffs()[0].is_positive());
    }

    #[test]
    fn isolation_brackets_roots() {
        let s = SturmSequence::new(&p(&[-2, 0, 1])).unwrap();
        let iv = s.isolate(&q(1, 64));
        assert_eq!(iv.len(), 2);
        let f = p(&[-2, 0, 1]);
        for (lo, hi) in &iv {
            assert_eq!(s.count_in(lo, hi), 1);
            assert!(hi - lo <= q(1, 64));
            assert!(f.eval(lo) * f.eval(hi) < BigRational::zero());
        }
        assert!(iv[0].1 < BigRational::zero() && iv[1].0 > BigRational::zero());
    }

    #[test]
    fn rational_root_search() {
        // (2x - 1)(x + 3)x(x^2 - 2)
        let f = mul(&mul(&mul(&p(&[-1, 2]), &p(&[3, 1])), &p(&[0, 1])), &p(&[-2, 0, 1]));
        assert_eq!(rational_roots(&f).unwrap(), vec![q(-3, 1), q(0, 1), q(1, 2)]);
        assert_eq!(rational_roots(&p(&[1, 0, 1])).unwrap(), vec![]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "x^3 - 3*x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
