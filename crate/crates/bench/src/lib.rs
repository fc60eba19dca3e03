//! Seeded fixtures shared by the kernel benchmarks.

use adjrank_core::subspace::{random_matrix, sample_matrix, IntPolynomial};
use adjrank_core::{seed, ExactMatrix, SubspaceClass};

pub const SEED: u64 = 0xbe7c;

/// A dense random matrix of order `n` over `Q(i)`.
pub fn dense(n: usize) -> ExactMatrix {
    random_matrix(n, &mut seed::stream(SEED, n as u64))
}

/// A hermitian matrix of order `n` and rank `n − 1`, the corank-one branch
/// of the cofactor.
pub fn corank_one(n: usize) -> ExactMatrix {
    sample_matrix(SubspaceClass::Hermitian, n, n - 1, &mut seed::stream(SEED, 1 << 32 | n as u64)).unwrap()
}

/// `∏ (t − r)` over `roots`, times `t² + 1`.
pub fn poly_with_roots(roots: &[i64]) -> IntPolynomial {
    let mut c = vec![1i64, 0, 1];
    for &r in roots {
        let mut next = vec![0i64; c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            next[i] -= r * x;
            next[i + 1] += x;
        }
        c = next;
    }
    IntPolynomial::from_i64(&c)
}

/// A real integer pencil of order `n` whose determinant has `n` real roots.
pub fn pencil(n: usize) -> (ExactMatrix, ExactMatrix) {
    let a = ExactMatrix::identity(n);
    let b = ExactMatrix::from_fn(n, |i, j| {
        let v = if i == j { i as i64 - 2 } else if j == i + 1 { 1 } else { 0 };
        adjrank_core::GaussianRational::from_int(v)
    });
    (a, b)
}
