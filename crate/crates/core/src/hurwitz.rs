//! Hurwitz–Radon families: `{B₀ = I, B₁, …, B_{s−1}}` with every `Bᵢ` (`i >= 1`)
//! skew and orthogonal and the `Bᵢ` pairwise anticommuting. Every nonzero real
//! combination `M = Σ xᵢBᵢ` then satisfies `ᵗM·M = (Σ xᵢ²)·I`, so the real span
//! minus zero lies in `GL_n(R)`.
//!
//! Families of size `ρ(n)` are assembled from fixed families on `R¹, R², R⁴, R⁸`
//! by Kronecker products with the 2 × 2 blocks
//!
//! ```text
//! P = [[0, 1], [1, 0]]   Q = [[0, -1], [1, 0]]   R = [[1, 0], [0, -1]]
//! ```
//!
//! a step from `m` to `16m` that adds 8 members, and tensoring with `I_odd`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{HurwitzError, ParseError};
use crate::exact::{ExactMatrix, GaussianRational};
use crate::radon_hurwitz::{self, factorize};

pub const MAX_VALUATION: u32 = 7;
pub const MAX_ORDER: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    I,
    P,
    Q,
    R,
}

impl Block {
    fn matrix(self) -> ExactMatrix {
        match self {
            Block::I => ExactMatrix::identity(2),
            Block::P => ExactMatrix::from_int_rows(&[[0, 1], [1, 0]]),
            Block::Q => ExactMatrix::from_int_rows(&[[0, -1], [1, 0]]),
            Block::R => ExactMatrix::from_int_rows(&[[1, 0], [0, -1]]),
        }
    }
}

fn word(blocks: &[Block]) -> ExactMatrix {
    blocks
        .iter()
        .map(|b| b.matrix())
        .reduce(|acc, m| acc.kron(&m))
        .expect("nonempty word")
}

/// Skew members of the 8-dimensional base family: an odd number of `Q`
/// factors in each word makes it skew, and any two words differ by an
/// anticommuting pair in an odd number of positions.
const OCTONIC: [[Block; 3]; 7] = {
    use Block::*;
    [
        [I, I, Q],
        [I, Q, P],
        [P, Q, R],
        [Q, I, R],
        [Q, P, P],
        [Q, R, P],
        [R, Q, R],
    ]
};

fn base_family(dyadic: u64) -> Vec<ExactMatrix> {
    use Block::*;
    match dyadic {
        1 => vec![ExactMatrix::identity(1)],
        2 => vec![ExactMatrix::identity(2), word(&[Q])],
        4 => vec![
            ExactMatrix::identity(4),
            word(&[Q, I]),
            word(&[P, Q]),
            word(&[R, Q]),
        ],
        8 => std::iter::once(ExactMatrix::identity(8))
            .chain(OCTONIC.iter().map(|w| word(w)))
            .collect(),
        _ => unreachable!("base family orders are 1, 2, 4, 8"),
    }
}

/// From a family of size `s` on `Rᵐ` to one of size `s + 8` on `R^(16m)`:
/// `Q⊗I₈⊗Iₘ`, `P⊗Eᵢ⊗Iₘ` for the seven skew `Eᵢ` on `R⁸`, and `R⊗I₈⊗Aⱼ` for
/// the skew members `Aⱼ` of the input.
fn periodicity_step(family: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let m = family[0].n();
    let im = ExactMatrix::identity(m);
    let i8 = ExactMatrix::identity(8);
    let octonic = &base_family(8)[1..];
    let mut out = Vec::with_capacity(family.len() + 8);
    out.push(ExactMatrix::identity(16 * m));
    out.push(Block::Q.matrix().kron(&i8).kron(&im));
    for e in octonic {
        out.push(Block::P.matrix().kron(e).kron(&im));
    }
    for a in &family[1..] {
        out.push(Block::R.matrix().kron(&i8).kron(a));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzRadonFamily {
    n: usize,
    matrices: Vec<ExactMatrix>,
}

impl HurwitzRadonFamily {
    /// Wraps arbitrary matrices; nothing is checked until [`certify_hr`].
    pub fn from_matrices(matrices: Vec<ExactMatrix>) -> Result<Self, HurwitzError> {
        let n = matrices.first().map(ExactMatrix::n).ok_or(HurwitzError::Zero)?;
        Ok(Self { n, matrices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    /// `Σ xᵢBᵢ` for rational coefficients; `x` shorter than the family is
    /// padded with zeros.
    pub fn combination(&self, x: &[BigRational]) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.n);
        for (b, xi) in self.matrices.iter().zip(x) {
            if !xi.is_zero() {
                acc = acc.add(&b.scale_rational(xi));
            }
        }
        acc
    }
}

pub fn build_hr_family(n: u64) -> Result<HurwitzRadonFamily, HurwitzError> {
    let f = factorize(n).map_err(|_| HurwitzError::Zero)?;
    if f.valuation() > MAX_VALUATION || n > MAX_ORDER {
        return Err(HurwitzError::UnsupportedOrder {
            n,
            max_valuation: MAX_VALUATION,
            max_order: MAX_ORDER,
        });
    }
    let mut family = base_family(1 << f.a);
    for _ in 0..f.b {
        family = periodicity_step(&family);
    }
    let odd = (2 * f.k + 1) as usize;
    if odd > 1 {
        let io = ExactMatrix::identity(odd);
        family = family.iter().map(|b| b.kron(&io)).collect();
    }
    debug_assert_eq!(family.len() as u64, f.rho());
    HurwitzRadonFamily::from_matrices(family)
}

/// One failed identity in a candidate family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum Violation {
    /// `B₀` must be the identity.
    FirstNotIdentity,
    OrderMismatch { index: usize, order: usize },
    /// Entries must lie in `{−1, 0, 1}` and be real.
    EntryRange { index: usize },
    /// `ᵗBᵢ = −Bᵢ` for `i >= 1`.
    Skew { index: usize },
    /// `ᵗBᵢ·Bᵢ = I`.
    Orthogonal { index: usize },
    /// `ᵗBᵢ·Bⱼ + ᵗBⱼ·Bᵢ = 0` for `i < j`; for `i, j >= 1` with skew members
    /// this is `BᵢBⱼ + BⱼBᵢ = 0`.
    Anticommute { i: usize, j: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HrVerdict {
    /// `span(B) ∖ {0} ⊂ GL_n(R)`: the span has minimal rank `n`.
    NonsingularSpan,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HrCertificate {
    pub n: usize,
    pub size: usize,
    pub anticommutation_checks: usize,
    pub orthogonality_checks: usize,
    pub skewness_checks: usize,
    pub violations: Vec<Violation>,
    pub verdict: HrVerdict,
}

impl HrCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == HrVerdict::NonsingularSpan
    }
}

fn is_signed_unit(z: &GaussianRational) -> bool {
    z.is_real() && {
        let r = z.re();
        r.is_zero() || r.is_one() || *r == -BigRational::one()
    }
}

/// Verifies every family identity with exact arithmetic and lists all
/// violations.
pub fn certify_hr(family: &HurwitzRadonFamily) -> HrCertificate {
    let n = family.n;
    let ms = &family.matrices;
    let s = ms.len();
    let mut violations = Vec::new();

    if let Some((index, m)) = ms.iter().enumerate().find(|(_, m)| m.n() != n) {
        violations.push(Violation::OrderMismatch {
            index,
            order: m.n(),
        });
        return HrCertificate {
            n,
            size: s,
            anticommutation_checks: 0,
            orthogonality_checks: 0,
            skewness_checks: 0,
            violations,
            verdict: HrVerdict::Failed,
        };
    }

    if !ms[0].is_identity() {
        violations.push(Violation::FirstNotIdentity);
    }
    let transposes: Vec<ExactMatrix> = ms.iter().map(ExactMatrix::transpose).collect();
    for (index, m) in ms.iter().enumerate() {
        if !m.entries().iter().all(is_signed_unit) {
            violations.push(Violation::EntryRange { index });
        }
    }
    for index in 1..s {
        if transposes[index] != ms[index].neg() {
            violations.push(Violation::Skew { index });
        }
    }
    for index in 0..s {
        if !transposes[index].mul(&ms[index]).is_identity() {
            violations.push(Violation::Orthogonal { index });
        }
    }
    let pairs: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
        .collect();
    let failed_pairs: Vec<Violation> = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            !transposes[i]
                .mul(&ms[j])
                .add(&transposes[j].mul(&ms[i]))
                .is_zero()
        })
        .map(|&(i, j)| Violation::Anticommute { i, j })
        .collect();
    violations.extend(failed_pairs);

    let verdict = if violations.is_empty() {
        HrVerdict::NonsingularSpan
    } else {
        HrVerdict::Failed
    };
    HrCertificate {
        n,
        size: s,
        anticommutation_checks: pairs.len(),
        orthogonality_checks: s,
        skewness_checks: s.saturating_sub(1),
        violations,
        verdict,
    }
}

/// `ᵗM·M = (Σ xᵢ²)·I` for `M = Σ xᵢBᵢ`.
pub fn norm_identity_holds(family: &HurwitzRadonFamily, x: &[BigRational]) -> bool {
    let m = family.combination(x);
    let norm: BigRational = x.iter().map(|xi| xi * xi).sum();
    m.transpose().mul(&m)
        == ExactMatrix::identity(family.n).scale_rational(&norm)
}

/// On-disk form: the matrix JSON format plus a small manifest.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyFile {
    pub n: usize,
    pub size: usize,
    pub certified: bool,
    pub matrices: Vec<ExactMatrix>,
}

impl FamilyFile {
    pub fn new(family: &HurwitzRadonFamily, certificate: &HrCertificate) -> Self {
        FamilyFile {
            n: family.n,
            size: family.size(),
            certified: certificate.passed(),
            matrices: family.matrices.clone(),
        }
    }

    /// Imports a family for re-certification. The stored `certified` flag
    /// is not trusted.
    pub fn into_family(self) -> Result<HurwitzRadonFamily, ParseError> {
        if self.matrices.len() != self.size {
            return Err(ParseError::Json(format!(
                "manifest size {} but {} matrices",
                self.size,
                self.matrices.len()
            )));
        }
        if self.matrices.iter().any(|m| m.n() != self.n) {
            return Err(ParseError::Json(format!("matrices must all have order {}", self.n)));
        }
        HurwitzRadonFamily::from_matrices(self.matrices)
            .map_err(|e| ParseError::Json(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SharpnessVerdict {
    /// `r_{n,n−1} = ρ(n) = ρ_C(n)`.
    Equality,
    /// `ρ(n) <= r_{n,n−1} <= ρ_C(n)` with `ρ(n) < ρ_C(n)`.
    Gap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub n: u64,
    /// Size of the certified real family: `r_{n,n} >= lower`, hence `r_{n,n−1} >= lower`.
    pub lower: u64,
    /// `ρ_C(n)`, the upper bound for both `r_{n,n−1}` and `h_{n,n−1}`.
    pub upper: u64,
    pub verdict: SharpnessVerdict,
    /// Set only under [`SharpnessVerdict::Equality`].
    pub r_n_n_minus_1: Option<u64>,
    /// `r_{n,n} = r_{n,n−1}` witnesses a non-strict step in the chain
    /// `r_{n,n} <= r_{n,n−1} <= … <= r_{n,1}`.
    pub chain_step_not_strict: bool,
    /// `[h_{n,n}, ρ_C(n)]`; which endpoint `h_{n,n−1}` takes is not decided.
    pub hermitian_interval: [u64; 2],
    pub certificate: HrCertificate,
}

pub fn witness_sharpness(n: u64, require_div8: bool) -> Result<SharpnessReport, HurwitzError> {
    if n == 0 {
        return Err(HurwitzError::Zero);
    }
    if n % 2 == 1 {
        return Err(HurwitzError::OddOrder(n));
    }
    if require_div8 && !n.is_multiple_of(8) {
        return Err(HurwitzError::NotDivisibleBy8(n));
    }
    let family = build_hr_family(n)?;
    let certificate = certify_hr(&family);
    if !certificate.passed() {
        return Err(HurwitzError::NotCertified(certificate.violations.len()));
    }
    let lower = family.size() as u64;
    let upper = radon_hurwitz::rho_c(n).map_err(|_| HurwitzError::Zero)?;
    let alp = radon_hurwitz::alp_reference(n).map_err(|_| HurwitzError::OddOrder(n))?;
    let verdict = if lower == upper {
        SharpnessVerdict::Equality
    } else {
        SharpnessVerdict::Gap
    };
    Ok(SharpnessReport {
        n,
        lower,
        upper,
        verdict,
        r_n_n_minus_1: (verdict == SharpnessVerdict::Equality).then_some(lower),
        chain_step_not_strict: verdict == SharpnessVerdict::Equality,
        hermitian_interval: [alp.h_nn, upper],
        certificate,
    })
}
