//! The adjugate-twisted map `ψ(A) = A + i·conj(Aᶜ)`, its homotopy `ψ_s`, the
//! admissible set `𝒵` and exact invertibility certificates.
//!
//! `𝒵` is the set of `n × n` complex matrices of rank at least `n − 1` whose
//! determinant is not of the form `i·r` with `r < 0`. Every real or hermitian
//! matrix of rank `≥ n − 1` belongs to it, and `ψ` maps it into `GL_n(C)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PsiError;
use crate::exact::{ExactMatrix, GaussianRational};

/// `ψ(A) = A + i·conj(Aᶜ)`. For `rank A <= n − 2` the cofactor matrix
/// vanishes and `ψ(A) = A`.
pub fn psi(a: &ExactMatrix) -> ExactMatrix {
    psi_s(a, &BigRational::one())
}

/// `ψ_s(A) = A + s·i·conj(Aᶜ)`: the identity at `s = 0`, `ψ` at `s = 1`.
pub fn psi_s(a: &ExactMatrix, s: &BigRational) -> ExactMatrix {
    if s.is_zero() {
        return a.clone();
    }
    let twist = twist_term(&a.cofactor(), s);
    a.add(&twist)
}

/// `s·i·conj(C)` entrywise.
fn twist_term(cofactor: &ExactMatrix, s: &BigRational) -> ExactMatrix {
    cofactor.map(|c| c.conj().mul_i().scale(s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZReason {
    Ok,
    RankTooLow,
    DetOnNegativeImaginaryRay,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZMembershipReport {
    pub in_z: bool,
    pub n: usize,
    pub rank: usize,
    pub det: GaussianRational,
    pub reason: ZReason,
    pub is_hermitian: bool,
    pub is_real: bool,
}

pub fn z_membership(a: &ExactMatrix) -> ZMembershipReport {
    let n = a.n();
    let rank = a.rank();
    let det = a.det();
    let reason = if rank + 1 < n {
        ZReason::RankTooLow
    } else if det.is_on_negative_imaginary_ray() {
        ZReason::DetOnNegativeImaginaryRay
    } else {
        ZReason::Ok
    };
    ZMembershipReport {
        in_z: reason == ZReason::Ok,
        n,
        rank,
        det,
        reason,
        is_hermitian: a.is_hermitian(),
        is_real: a.is_real(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiCertificate {
    pub input: ExactMatrix,
    pub output: ExactMatrix,
    pub s: String,
    pub det_output: GaussianRational,
    pub invertible: bool,
    pub in_z: bool,
}

/// Computes `ψ(A)` and its exact determinant. Fails only when `A ∈ 𝒵`
/// and `ψ(A)` is singular.
pub fn certify_psi_invertible(a: &ExactMatrix) -> Result<PsiCertificate, PsiError> {
    certify_psi_s_invertible(a, &BigRational::one())
}

/// Certificate for `ψ_s`. For `s > 0` a singular `ψ_s(A)` with `A ∈ 𝒵` is a
/// counterexample; at `s <= 0` no claim is made and the certificate is
/// returned as is.
pub fn certify_psi_s_invertible(
    a: &ExactMatrix,
    s: &BigRational,
) -> Result<PsiCertificate, PsiError> {
    let output = psi_s(a, s);
    let det_output = output.det();
    let invertible = !det_output.is_zero();
    let in_z = z_membership(a).in_z;
    if in_z && !invertible && *s > BigRational::zero() {
        return Err(PsiError::Counterexample {
            matrix: a.to_string(),
        });
    }
    Ok(PsiCertificate {
        input: a.clone(),
        output,
        s: crate::exact::fmt_rational(s),
        det_output,
        invertible,
        in_z,
    })
}
