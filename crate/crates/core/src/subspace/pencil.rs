//! Exact minimal rank of a real pencil `{xA + yB}`.
//!
//! `rank(xA + yB) < k` exactly when every `k × k` minor vanishes at `(x, y)`,
//! i.e. when `(x : y)` is a root of `G_k`, the gcd of the `k`-minors as
//! homogeneous polynomials. The minimal rank is the least `k − 1` for which
//! `G_k` has a real projective root, or the generic rank if there is none.
//! Roots with `y ≠ 0` are found with Sturm sequences on the chart `y = 1`; the
//! point `(1 : 0)` is checked by the rank of `A` directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rational_roots, IntPolynomial, SturmSequence};
use super::{MinRankReport, ReportMode, SubspaceBasis, SubspaceClass, Witness};
use crate::error::SubspaceError;
use crate::exact::{fmt_rational, ExactMatrix};

/// Width of the isolating interval reported for irrational witnesses.
const ISOLATION_WIDTH_LOG2: usize = 20;

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Integer matrix `scale·A` with `scale` the lcm of all denominators of `A`
/// and `B` (so the pencil is unchanged up to a common factor).
fn common_integer_form(a: &ExactMatrix, b: &ExactMatrix) -> (Vec<BigInt>, Vec<BigInt>) {
    let l = a
        .entries()
        .iter()
        .chain(b.entries())
        .fold(BigInt::one(), |acc, z| acc.lcm(z.re().denom()));
    let lr = BigRational::from_integer(l);
    let conv = |m: &ExactMatrix| {
        m.entries()
            .iter()
            .map(|z| (z.re() * &lr).to_integer())
            .collect::<Vec<_>>()
    };
    (conv(a), conv(b))
}

/// Bareiss determinant over the integers.
fn int_det(k: usize, mut m: Vec<BigInt>) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for p in 0..k - 1 {
        if m[p * k + p].is_zero() {
            let Some(r) = (p + 1..k).find(|&r| !m[r * k + p].is_zero()) else {
                return BigInt::zero();
            };
            for c in p..k {
                m.swap(p * k + c, r * k + c);
            }
            negate = !negate;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let t = &m[i * k + j] * &m[p * k + p] - &m[i * k + p] * &m[p * k + j];
                m[i * k + j] = t / &prev;
            }
        }
        prev = m[p * k + p].clone();
    }
    let d = m[k * k - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Lagrange basis at nodes `0..=k`, as ascending coefficient vectors.
fn lagrange_basis(k: usize) -> Vec<Vec<BigRational>> {
    (0..=k)
        .map(|i| {
            let mut poly = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for j in (0..=k).filter(|&j| j != i) {
                // poly *= (t - j)
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (e, c) in poly.iter().enumerate() {
                    next[e + 1] += c;
                    next[e] -= c * BigRational::from_integer(BigInt::from(j));
                }
                poly = next;
                denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
            }
            poly.into_iter().map(|c| c / &denom).collect()
        })
        .collect()
}

struct Pencil {
    n: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl Pencil {
    /// `t·A + B` as an integer matrix.
    fn at(&self, t: i64) -> Vec<BigInt> {
        let t = BigInt::from(t);
        self.a.iter().zip(&self.b).map(|(x, y)| &t * x + y).collect()
    }

    fn minor(m: &[BigInt], n: usize, rows: &[usize], cols: &[usize]) -> BigInt {
        let k = rows.len();
        let sub = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| m[r * n + c].clone()))
            .collect();
        int_det(k, sub)
    }

    /// Gcd on the chart `y = 1` of all `k`-minors of `xA + B`, stopping as
    /// soon as it is a nonzero constant. `None` if every minor vanishes
    /// identically. Also returns the number of minors evaluated.
    fn minor_gcd(&self, k: usize) -> (Option<IntPolynomial>, usize) {
        let evals: Vec<Vec<BigInt>> = (0..=k as i64).map(|t| self.at(t)).collect();
        let basis = lagrange_basis(k);
        let subsets = combinations(self.n, k);
        let mut g: Option<IntPolynomial> = None;
        let mut count = 0;
        for rows in &subsets {
            for cols in &subsets {
                count += 1;
                let values: Vec<BigInt> = evals.iter().map(|m| Self::minor(m, self.n, rows, cols)).collect();
                let mut coeffs = vec![BigRational::zero(); k + 1];
                for (y, l) in values.iter().zip(&basis) {
                    if y.is_zero() {
                        continue;
                    }
                    let y = BigRational::from_integer(y.clone());
                    for (c, lc) in coeffs.iter_mut().zip(l) {
                        *c += &y * lc;
                    }
                }
                let p = IntPolynomial::new(
                    coeffs
                        .into_iter()
                        .map(|c| {
                            debug_assert!(c.is_integer());
                            c.to_integer()
                        })
                        .collect(),
                );
                if p.is_zero() {
                    continue;
                }
                let next = match &g {
                    None => p.primitive(),
                    Some(g) => g.gcd(&p),
                };
                if next.is_constant() {
                    return (Some(next), count);
                }
                g = Some(next);
            }
        }
        (g, count)
    }
}

fn rational_witness(a: &ExactMatrix, b: &ExactMatrix, x: BigRational, y: BigRational) -> Witness {
    let m = a.scale_rational(&x).add(&b.scale_rational(&y));
    let rank = m.rank();
    Witness::Rational {
        coefficients: vec![fmt_rational(&x), fmt_rational(&y)],
        matrix: m,
        rank,
    }
}

/// Exact `m_V` for `V = span{A, B}` with `A`, `B` real and independent.
pub fn pencil_minrank_exact(a: &ExactMatrix, b: &ExactMatrix) -> Result<MinRankReport, SubspaceError> {
    if a.n() != b.n() {
        return Err(SubspaceError::OrderMismatch {
            index: 1,
            got: b.n(),
            expected: a.n(),
        });
    }
    if !a.is_real() || !b.is_real() {
        return Err(SubspaceError::NotReal);
    }
    SubspaceBasis::new(SubspaceClass::Real, vec![a.clone(), b.clone()])?;

    let n = a.n();
    let (ai, bi) = common_integer_form(a, b);
    let pencil = Pencil { n, a: ai, b: bi };
    let rank_a = a.rank();
    let mut samples = 0;
    let mut generic_rank = n;

    let report = |m: usize, witness: Witness, samples: usize| {
        debug_assert_eq!(witness.rank(), m);
        MinRankReport {
            mode: ReportMode::Exact,
            n,
            d: 2,
            m_lower: Some(m),
            m_upper: m,
            witness,
            samples,
            seed: None,
        }
    };

    for k in 1..=n {
        let (g, evaluated) = pencil.minor_gcd(k);
        samples += evaluated;
        let Some(g) = g else {
            generic_rank = k - 1;
            break;
        };
        if rank_a < k {
            let w = rational_witness(a, b, BigRational::one(), BigRational::zero());
            return Ok(report(k - 1, w, samples));
        }
        if g.is_constant() {
            continue;
        }
        let sturm = SturmSequence::new(&g).expect("nonzero gcd");
        if sturm.count_real_roots() == 0 {
            continue;
        }
        if let Some(x) = rational_roots(&g).and_then(|r| r.into_iter().next()) {
            let w = rational_witness(a, b, x, BigRational::one());
            return Ok(report(k - 1, w, samples));
        }
        let width = BigRational::new(BigInt::one(), BigInt::one() << ISOLATION_WIDTH_LOG2);
        let (lo, hi) = sturm
            .isolate(&width)
            .into_iter()
            .next()
            .expect("a real root exists");
        let w = Witness::Algebraic {
            minor_size: k,
            polynomial: g.coeffs().iter().map(ToString::to_string).collect(),
            interval: [fmt_rational(&lo), fmt_rational(&hi)],
            rank: k - 1,
        };
        return Ok(report(k - 1, w, samples));
    }

    // No drop anywhere: any point of generic rank is a witness.
    let w = if rank_a == generic_rank {
        rational_witness(a, b, BigRational::one(), BigRational::zero())
    } else {
        (0..)
            .map(|t| rational_witness(a, b, BigRational::from_integer(BigInt::from(t)), BigRational::one()))
            .find(|w| w.rank() == generic_rank)
            .expect("only finitely many points have lower rank")
    };
    Ok(report(generic_rank, w, samples))
}

/// Re-checks an exact pencil report: a rational witness must have the stated
/// rank; an algebraic one must have its polynomial dividing every minor of the
/// stated size and exactly one root in its interval.
pub fn verify_pencil_witness(a: &ExactMatrix, b: &ExactMatrix, report: &MinRankReport) -> bool {
    match &report.witness {
        Witness::Rational {
            coefficients,
            matrix,
            rank,
        } => {
            let parse = |s: &String| crate::exact::parse_rational(s).ok();
            let (Some(x), Some(y)) = (
                coefficients.first().and_then(parse),
                coefficients.get(1).and_then(parse),
            ) else {
                return false;
            };
            let m = a.scale_rational(&x).add(&b.scale_rational(&y));
            !(x.is_zero() && y.is_zero())
                && m == *matrix
                && m.rank() == *rank
                && *rank == report.m_upper
        }
        Witness::Algebraic {
            minor_size,
            polynomial,
            interval,
            rank,
        } => {
            let Ok(coeffs) = polynomial.iter().map(|c| c.parse::<BigInt>()).collect::<Result<Vec<_>, _>>() else {
                return false;
            };
            let g = IntPolynomial::new(coeffs);
            let (Ok(lo), Ok(hi)) = (
                crate::exact::parse_rational(&interval[0]),
                crate::exact::parse_rational(&interval[1]),
            ) else {
                return false;
            };
            let Ok(sturm) = SturmSequence::new(&g) else {
                return false;
            };
            if sturm.count_in(&lo, &hi) != 1 || *rank + 1 != *minor_size || *rank != report.m_upper {
                return false;
            }
            let (ai, bi) = common_integer_form(a, b);
            let pencil = Pencil { n: a.n(), a: ai, b: bi };
            let k = *minor_size;
            let set = combinations(pencil.n, k);
            let evals: Vec<Vec<BigInt>> = (0..=k as i64).map(|t| pencil.at(t)).collect();
            let basis = lagrange_basis(k);
            set.iter().all(|rows| {
                set.iter().all(|cols| {
                    let mut coeffs = vec![BigRational::zero(); k + 1];
                    for (m, l) in evals.iter().zip(&basis) {
                        let y = BigRational::from_integer(Pencil::minor(m, pencil.n, rows, cols));
                        for (c, lc) in coeffs.iter_mut().zip(l) {
                            *c += &y * lc;
                        }
                    }
                    let p = IntPolynomial::new(coeffs.into_iter().map(|c| c.to_integer()).collect());
                    p.is_zero() || p.div_exact_primitive(&g).is_some()
                })
            })
        }
    }
}
