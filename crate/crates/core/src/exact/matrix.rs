//! Dense square matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::format::MatrixJson;
use super::gauss_int;
use super::scalar::GaussianRational;
use crate::error::ParseError;

/// Up to this order the cofactor matrix is built from its `n²` minors; above
/// it, from the rank: `det(A)·ᵗA⁻¹` when invertible, a scaled rank-one
/// product of kernel vectors at rank `n − 1`, and zero below that.
pub const COFACTOR_MINOR_LIMIT: usize = 2;

/// An `n × n` matrix of [`GaussianRational`] stored row-major, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<GaussianRational>) -> Result<Self, ParseError> {
        if n == 0 || entries.len() != n * n {
            return Err(ParseError::Shape {
                n,
                rows: entries.len().checked_div(n).unwrap_or(0),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, ParseError> {
        let n = rows.len();
        if n == 0 {
            return Err(ParseError::Shape { n: 0, rows: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(ParseError::RowLength {
                    row,
                    len: r.len(),
                    n,
                });
            }
            entries.extend(r);
        }
        Ok(Self { n, entries })
    }

    /// Real integer matrix; panics if `rows` is not square and nonempty.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| GaussianRational::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        assert!(n > 0, "matrix order must be positive");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| GaussianRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn diag(d: Vec<GaussianRational>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, x) in d.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussianRational]> {
        self.entries.chunks(self.n)
    }

    pub fn map(&self, f: impl FnMut(&GaussianRational) -> GaussianRational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        self.map(|x| x * s)
    }

    pub fn scale_rational(&self, s: &BigRational) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Matrix product. Zero entries of the left factor are skipped, which
    /// makes products of signed permutation matrices cost `O(n²)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        let mut out = vec![GaussianRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Self { n, entries: out }
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (p, q) = (self.n, rhs.n);
        Self::from_fn(p * q, |i, j| {
            &self[(i / q, j / q)] * &rhs[(i % q, j % q)]
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `conj(A) = ᵗA`.
    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self[(i, j)] == self[(j, i)].conj()))
    }

    /// `conj(A) = A`.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_real)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Submatrix obtained by deleting row `i` and column `j`; `None` for `n = 1`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Option<Self> {
        if self.n == 1 {
            return None;
        }
        let m = self.n - 1;
        let mut entries = Vec::with_capacity(m * m);
        for r in (0..self.n).filter(|&r| r != i) {
            for c in (0..self.n).filter(|&c| c != j) {
                entries.push(self[(r, c)].clone());
            }
        }
        Some(Self { n: m, entries })
    }

    /// Exact determinant by Bareiss fraction-free elimination on the
    /// denominator-cleared matrix: `det A = det(L·A) / Lⁿ`.
    pub fn det(&self) -> GaussianRational {
        let (m, l) = gauss_int::clear_denominators(&self.entries);
        gauss_int::det(self.n, m).into_rational(&num_traits::pow(l, self.n))
    }

    /// Exact rank by fraction-free elimination on the denominator-cleared matrix.
    pub fn rank(&self) -> usize {
        let (m, _) = gauss_int::clear_denominators(&self.entries);
        gauss_int::rank(self.n, self.n, m)
    }

    /// Exact inverse by Gauss–Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let w = 2 * n;
        let mut a: Vec<GaussianRational> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(self.row(i));
            a.extend((0..n).map(|j| {
                if i == j {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                }
            }));
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * w + col].is_zero())?;
            if piv != col {
                for c in 0..w {
                    a.swap(piv * w + c, col * w + c);
                }
            }
            let inv = a[col * w + col].inv().expect("nonzero pivot");
            for c in col..w {
                a[col * w + c] = &a[col * w + c] * &inv;
            }
            for r in (0..n).filter(|&r| r != col) {
                let f = a[r * w + col].clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..w {
                    let t = &f * &a[col * w + c];
                    a[r * w + c] -= &t;
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| a[i * w + n..(i + 1) * w].to_vec())
            .collect();
        Some(Self { n, entries })
    }

    /// The cofactor matrix `Aᶜ`, `(Aᶜ)ᵢⱼ = (−1)^(i+j) det Aᵢⱼ`, i.e. the
    /// transpose of the classical adjugate. It satisfies `A·ᵗAᶜ = det(A)·I`.
    ///
    /// For `n = 1` the empty minor has determinant one, so `[a]ᶜ = [1]`.
    pub fn cofactor(&self) -> Self {
        let n = self.n;
        if n <= COFACTOR_MINOR_LIMIT {
            return self.cofactor_by_minors();
        }
        let rank = self.rank();
        if rank == n {
            // (L·A)ᶜ = L^(n−1)·Aᶜ.
            let (m, l) = gauss_int::clear_denominators(&self.entries);
            let adj = gauss_int::adjugate(n, &m).expect("full rank");
            let scale = num_traits::pow(l, n - 1);
            let mut entries: Vec<GaussianRational> = adj.into_iter().map(|z| z.into_rational(&scale)).collect();
            // Transpose in place: Aᶜ = ᵗadj(A).
            for i in 0..n {
                for j in i + 1..n {
                    entries.swap(i * n + j, j * n + i);
                }
            }
            return Self { n, entries };
        }
        if rank + 1 < n {
            return Self::zeros(n);
        }
        // A·adj(A) = adj(A)·A = 0 and adj(A) has rank one, so
        // Aᶜ = c·v·ᵗu with A·u = 0, ᵗv·A = 0; one minor fixes c.
        let u = self.kernel_vector().expect("rank n - 1");
        let v = self.transpose().kernel_vector().expect("rank n - 1");
        let i = v.iter().position(|z| !z.is_zero()).expect("nonzero kernel vector");
        let j = u.iter().position(|z| !z.is_zero()).expect("nonzero kernel vector");
        let mut c = self.minor_matrix(i, j).expect("n >= 2").det();
        if (i + j) % 2 == 1 {
            c = -c;
        }
        let c = &c / &(&v[i] * &u[j]);
        Self::from_fn(n, |r, col| {
            if v[r].is_zero() || u[col].is_zero() {
                GaussianRational::zero()
            } else {
                &(&c * &v[r]) * &u[col]
            }
        })
    }

    /// A nonzero solution of `A·u = 0` from the reduced row echelon form,
    /// with the first free coordinate set to one; `None` if `A` is invertible.
    pub fn kernel_vector(&self) -> Option<Vec<GaussianRational>> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut pivots = Vec::with_capacity(n);
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            for c in 0..n {
                a.swap(p * n + c, row * n + c);
            }
            let inv = a[row * n + col].inv().expect("nonzero pivot");
            for c in col..n {
                a[row * n + c] = &a[row * n + c] * &inv;
            }
            for r in (0..n).filter(|&r| r != row) {
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let t = &f * &a[row * n + c];
                    a[r * n + c] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free = (0..n).find(|c| !pivots.contains(c))?;
        let mut u = vec![GaussianRational::zero(); n];
        u[free] = GaussianRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            u[pc] = -a[r * n + free].clone();
        }
        Some(u)
    }

    /// The cofactor matrix computed entry by entry from `n²` minors.
    pub fn cofactor_by_minors(&self) -> Self {
        if self.n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(self.n, |i, j| {
            let d = self.minor_matrix(i, j).expect("n >= 2").det();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::to_text(self))
    }
}

/// Rank of a rectangular matrix given as rows of equal length.
pub fn rank_of_rows(rows: Vec<Vec<GaussianRational>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let height = rows.len();
    let flat: Vec<GaussianRational> = rows.into_iter().flatten().collect();
    let (m, _) = gauss_int::clear_denominators(&flat);
    gauss_int::rank(height, width, m)
}
