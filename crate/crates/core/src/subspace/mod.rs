//! Minimal rank `m_V = min { rank A : A ∈ V ∖ {0} }` of real subspaces `V` of
//! `M_n(C)`.
//!
//! Two-dimensional real pencils are decided exactly ([`pencil_minrank_exact`]);
//! general subspaces get a certified upper bound from seeded probing
//! ([`minrank_probe`]).

pub mod pencil;
pub mod poly;
pub mod probe;
pub mod sample;

use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{ParseError, SubspaceError};
use crate::exact::{rank_of_rows, ExactMatrix, GaussianRational};

pub use pencil::pencil_minrank_exact;
pub use poly::{rational_roots, sturm_real_roots, IntPolynomial, SturmSequence};
pub use probe::minrank_probe;
pub use sample::{random_matrix, sample_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubspaceClass {
    Hermitian,
    Real,
    General,
}

impl SubspaceClass {
    pub fn admits(self, m: &ExactMatrix) -> bool {
        match self {
            SubspaceClass::Hermitian => m.is_hermitian(),
            SubspaceClass::Real => m.is_real(),
            SubspaceClass::General => true,
        }
    }
}

/// A validated basis of a real subspace of `M_n(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    n: usize,
    class: SubspaceClass,
    basis: Vec<ExactMatrix>,
}

impl SubspaceBasis {
    /// Checks orders, class membership and independence over `R`.
    pub fn new(class: SubspaceClass, basis: Vec<ExactMatrix>) -> Result<Self, SubspaceError> {
        let n = basis.first().map(ExactMatrix::n).ok_or(SubspaceError::EmptyBasis)?;
        for (index, m) in basis.iter().enumerate() {
            if m.n() != n {
                return Err(SubspaceError::OrderMismatch {
                    index,
                    got: m.n(),
                    expected: n,
                });
            }
            if !class.admits(m) {
                return Err(SubspaceError::ClassViolation(index));
            }
        }
        if real_rank(&basis) != basis.len() {
            return Err(SubspaceError::DegenerateBasis);
        }
        Ok(Self { n, class, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.basis.len()
    }

    pub fn class(&self) -> SubspaceClass {
        self.class
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// `Σ xᵢ·Bᵢ` for real rational coefficients.
    pub fn combination(&self, x: &[num_rational::BigRational]) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.n);
        for (b, xi) in self.basis.iter().zip(x) {
            if !xi.is_zero() {
                acc = acc.add(&b.scale_rational(xi));
            }
        }
        acc
    }
}

/// Rank over `R` of matrices viewed as vectors in `R^(2n²)`.
fn real_rank(ms: &[ExactMatrix]) -> usize {
    let rows = ms
        .iter()
        .map(|m| {
            m.entries()
                .iter()
                .map(|z| GaussianRational::real(z.re().clone()))
                .chain(m.entries().iter().map(|z| GaussianRational::real(z.im().clone())))
                .collect()
        })
        .collect();
    rank_of_rows(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReportMode {
    Exact,
    Probe,
}

/// A point of `V` achieving the reported rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Witness {
    /// Rational coefficients on the basis and the resulting matrix.
    Rational {
        coefficients: Vec<String>,
        matrix: ExactMatrix,
        rank: usize,
    },
    /// The rank drop happens at `x·A + B` for an irrational root `x` of
    /// `polynomial`, the gcd of all `minor_size`-minors; `interval` is a
    /// half-open `(lo, hi]` holding exactly one root.
    Algebraic {
        minor_size: usize,
        /// Ascending coefficients.
        polynomial: Vec<String>,
        interval: [String; 2],
        rank: usize,
    },
}

impl Witness {
    pub fn rank(&self) -> usize {
        match self {
            Witness::Rational { rank, .. } | Witness::Algebraic { rank, .. } => *rank,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinRankReport {
    pub mode: ReportMode,
    pub n: usize,
    pub d: usize,
    /// Equals `m_upper` in exact mode; absent when probing.
    pub m_lower: Option<usize>,
    pub m_upper: usize,
    pub witness: Witness,
    pub samples: usize,
    pub seed: Option<u64>,
}

/// Subspace input file: class, order, dimension and the basis, given either
/// inline in matrix JSON or as paths relative to the manifest.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceManifest {
    pub class: SubspaceClass,
    pub n: usize,
    pub d: usize,
    pub basis: Vec<BasisEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisEntry {
    Inline(ExactMatrix),
    Path(String),
}

impl SubspaceManifest {
    pub fn from_basis(b: &SubspaceBasis) -> Self {
        SubspaceManifest {
            class: b.class,
            n: b.n,
            d: b.d(),
            basis: b.basis.iter().cloned().map(BasisEntry::Inline).collect(),
        }
    }

    /// Resolves path entries against `base_dir`, which may be `None` for
    /// manifests with inline matrices only.
    pub fn resolve(self, base_dir: Option<&Path>) -> Result<(SubspaceClass, Vec<ExactMatrix>), ParseError> {
        let mut out = Vec::with_capacity(self.basis.len());
        for entry in self.basis {
            let m = match entry {
                BasisEntry::Inline(m) => m,
                BasisEntry::Path(p) => {
                    let path = match base_dir {
                        Some(dir) => dir.join(&p),
                        None => p.clone().into(),
                    };
                    let src = std::fs::read_to_string(&path).map_err(|e| ParseError::Io {
                        path: path.display().to_string(),
                        msg: e.to_string(),
                    })?;
                    crate::exact::parse_matrix(&src)?
                }
            };
            if m.n() != self.n {
                return Err(ParseError::Json(format!(
                    "basis matrix of order {} in a manifest with n = {}",
                    m.n(),
                    self.n
                )));
            }
            out.push(m);
        }
        if out.len() != self.d {
            return Err(ParseError::Json(format!(
                "manifest declares d = {} but lists {} matrices",
                self.d,
                out.len()
            )));
        }
        Ok((self.class, out))
    }

    pub fn load(path: &Path) -> Result<(SubspaceClass, Vec<ExactMatrix>), ParseError> {
        let src = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        let manifest: SubspaceManifest = serde_json::from_str(&src)?;
        manifest.resolve(path.parent())
    }
}
