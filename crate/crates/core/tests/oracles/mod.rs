//! Reference implementations used only by tests. They share no code with the
//! library beyond the scalar type: determinants by Laplace expansion, ranks
//! by machine-integer elimination, pencil minimal rank by brute force.

#![allow(dead_code)]

use adjrank_core::{ExactMatrix, GaussianRational};
use num_traits::Zero;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &ExactMatrix) -> GaussianRational {
    let rows: Vec<Vec<GaussianRational>> = m.rows().map(|r| r.to_vec()).collect();
    laplace(&rows)
}

fn laplace(rows: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = rows.len();
    if n == 0 {
        return GaussianRational::from_int(1);
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = GaussianRational::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<GaussianRational>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, z)| z.clone()).collect())
            .collect();
        let term = &rows[0][j] * &laplace(&sub);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Cofactor matrix from Laplace minors.
pub fn laplace_cofactor(m: &ExactMatrix) -> ExactMatrix {
    let n = m.n();
    if n == 1 {
        return ExactMatrix::identity(1);
    }
    ExactMatrix::from_fn(n, |i, j| {
        let rows: Vec<Vec<GaussianRational>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| (0..n).filter(|&c| c != j).map(|c| m[(r, c)].clone()).collect())
            .collect();
        let d = laplace(&rows);
        if (i + j) % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

/// Rank of a small integer matrix by fraction-free elimination in `i128`.
pub fn int_rank(rows: usize, cols: usize, m: &[i128]) -> usize {
    let mut a = m.to_vec();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        for c in 0..cols {
            a.swap(p * cols + c, rank * cols + c);
        }
        let piv = a[rank * cols + col];
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = a[i * cols + j] * piv - a[i * cols + col] * a[rank * cols + j];
                assert_eq!(t % prev, 0, "inexact Bareiss step");
                a[i * cols + j] = t / prev;
            }
            a[i * cols + col] = 0;
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub const GRID: i64 = 50;

/// Projective grid points `(p, q)` with `|p|, |q| <= GRID`, `gcd = 1`, one
/// representative per line through the origin.
pub fn grid_points() -> Vec<(i64, i64)> {
    let mut pts = vec![(1, 0)];
    for q in 1..=GRID {
        for p in -GRID..=GRID {
            if gcd(p, q) == 1 {
                pts.push((p, q));
            }
        }
    }
    pts
}

/// `min rank(pA + qB)` over the grid, with the first point attaining it.
pub fn grid_min_rank(n: usize, a: &[i64], b: &[i64], pts: &[(i64, i64)]) -> (usize, (i64, i64)) {
    let mut best = (usize::MAX, (0, 0));
    for &(p, q) in pts {
        let m: Vec<i128> = a.iter().zip(b).map(|(&x, &y)| (p * x + q * y) as i128).collect();
        let r = int_rank(n, n, &m);
        if r < best.0 {
            best = (r, (p, q));
        }
    }
    best
}

pub fn int_matrix(n: usize, m: &[i64]) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = m.chunks(n).map(<[i64]>::to_vec).collect();
    ExactMatrix::from_int_rows(&rows)
}

/// A small real pencil with entries in `{−2..2}`: order 2..=4, a random
/// fraction of zero entries to make rank drops common, independent pair.
pub fn random_pencil<R: Rng>(rng: &mut R) -> (usize, Vec<i64>, Vec<i64>) {
    loop {
        let n = rng.gen_range(2..=4);
        let zero_bias = [0.0, 0.35, 0.6][rng.gen_range(0..3)];
        let mut draw = || -> Vec<i64> {
            (0..n * n)
                .map(|_| if rng.gen_bool(zero_bias) { 0 } else { rng.gen_range(-2..=2) })
                .collect()
        };
        let a = draw();
        let b = draw();
        // Independence over R: no (p, q) ≠ 0 with pA + qB = 0.
        let stacked: Vec<i128> = a.iter().chain(&b).map(|&x| x as i128).collect();
        if int_rank(2, n * n, &stacked) == 2 {
            return (n, a, b);
        }
    }
}
