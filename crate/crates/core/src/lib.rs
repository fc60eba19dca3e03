//! Exact verification kernels for real spaces of bounded-rank matrices.
//!
//! The crate works entirely over the Gaussian rationals `Q(i)`:
//!
//! - [`exact`]: scalars, dense matrices, determinant, rank and cofactor matrix;
//! - [`psi`]: the map `ψ(A) = A + i·conj(Aᶜ)` and its invertibility certificates;
//! - [`radon_hurwitz`] and [`ktheory`]: Radon–Hurwitz numbers and the ring
//!   `K̃_C(RP^(d−1))` in normal form;
//! - [`hurwitz`]: certified Hurwitz–Radon families;
//! - [`subspace`]: minimal rank of matrix subspaces and pencils;
//! - [`verify`]: seeded sweeps that check each proposition end to end.

pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod ktheory;
pub mod psi;
pub mod radon_hurwitz;
pub mod seed;
pub mod subspace;
pub mod verify;

pub use error::{HurwitzError, KTheoryError, ParseError, PsiError, RadonHurwitzError, SubspaceError};
pub use exact::{ExactMatrix, GaussianRational};
pub use hurwitz::{HurwitzRadonFamily, HrCertificate, SharpnessReport};
pub use ktheory::KElement;
pub use psi::{PsiCertificate, ZMembershipReport};
pub use radon_hurwitz::RHFactorization;
pub use subspace::{MinRankReport, SubspaceBasis, SubspaceClass, Witness};
pub use verify::{PropositionResult, Suite, VerifyReport};
