//! Radon–Hurwitz numbers.
//!
//! Writing `n = 2^(a+4b)·(2k+1)` with `0 <= a <= 3`, the real number is
//! `ρ(n) = 2^a + 8b` and the complex number is `ρ_C(n) = 2(a+4b) + 2`.

use serde::{Deserialize, Serialize};

use crate::error::RadonHurwitzError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RHFactorization {
    pub n: u64,
    pub a: u32,
    pub b: u32,
    pub k: u64,
}

impl RHFactorization {
    pub fn valuation(&self) -> u32 {
        self.a + 4 * self.b
    }

    pub fn rho(&self) -> u64 {
        (1u64 << self.a) + 8 * u64::from(self.b)
    }

    pub fn rho_c(&self) -> u64 {
        2 * u64::from(self.valuation()) + 2
    }
}

pub fn factorize(n: u64) -> Result<RHFactorization, RadonHurwitzError> {
    if n == 0 {
        return Err(RadonHurwitzError::Zero);
    }
    let v = n.trailing_zeros();
    let odd = n >> v;
    Ok(RHFactorization {
        n,
        a: v % 4,
        b: v / 4,
        k: (odd - 1) / 2,
    })
}

pub fn rho(n: u64) -> Result<u64, RadonHurwitzError> {
    factorize(n).map(|f| f.rho())
}

pub fn rho_c(n: u64) -> Result<u64, RadonHurwitzError> {
    factorize(n).map(|f| f.rho_c())
}

/// The reference values for invertible spaces: `h_{n,n} = ρ_C(n/2) + 1` for
/// hermitian and `r_{n,n} = ρ(n)` for real matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlpReference {
    pub n: u64,
    pub h_nn: u64,
    pub r_nn: u64,
}

pub fn alp_reference(n: u64) -> Result<AlpReference, RadonHurwitzError> {
    let r_nn = rho(n)?;
    if n % 2 == 1 {
        return Err(RadonHurwitzError::OddOrder(n));
    }
    Ok(AlpReference {
        n,
        h_nn: rho_c(n / 2)? + 1,
        r_nn,
    })
}

/// Serialized form of a factorization for the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoReport {
    pub n: u64,
    pub a: u32,
    pub b: u32,
    pub k: u64,
    pub rho: u64,
    pub rho_c: u64,
}

impl From<RHFactorization> for RhoReport {
    fn from(f: RHFactorization) -> Self {
        RhoReport {
            n: f.n,
            a: f.a,
            b: f.b,
            k: f.k,
            rho: f.rho(),
            rho_c: f.rho_c(),
        }
    }
}

/// One row of the `a | ρ(n) | ρ_C(n)` table, computed at the representative
/// `n = 2^(a+4b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoRow {
    pub a: u32,
    pub b: u32,
    pub n: u64,
    pub rho: u64,
    pub rho_c: u64,
}

/// Largest `b` for which `2^(3+4b)` fits in a `u64`.
pub const MAX_TABLE_B: u32 = 15;

/// Rows ordered by `b`, then `a ∈ {0, 1, 2, 3}`.
pub fn emit_rho_table(b_max: u32) -> Result<Vec<RhoRow>, RadonHurwitzError> {
    if b_max > MAX_TABLE_B {
        return Err(RadonHurwitzError::TableTooLarge(b_max));
    }
    let mut rows = Vec::with_capacity(4 * (b_max as usize + 1));
    for b in 0..=b_max {
        for a in 0..4 {
            let n = 1u64 << (a + 4 * b);
            let f = factorize(n)?;
            debug_assert_eq!((f.a, f.b), (a, b));
            rows.push(RhoRow {
                a,
                b,
                n,
                rho: f.rho(),
                rho_c: f.rho_c(),
            });
        }
    }
    Ok(rows)
}

pub fn table_csv(rows: &[RhoRow]) -> String {
    let mut out = String::from("a,b,n,rho,rho_c\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}\n", r.a, r.b, r.n, r.rho, r.rho_c));
    }
    out
}

pub fn table_text(rows: &[RhoRow]) -> String {
    let w = rows.iter().map(|r| r.n.to_string().len()).max().unwrap_or(1).max(1);
    let mut out = format!("{:>2} {:>2} {:>w$} {:>5} {:>5}\n", "a", "b", "n", "rho", "rho_c");
    for r in rows {
        out.push_str(&format!(
            "{:>2} {:>2} {:>w$} {:>5} {:>5}\n",
            r.a, r.b, r.n, r.rho, r.rho_c
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_examples() {
        let f = factorize(1).unwrap();
        assert_eq!((f.a, f.b, f.k, f.rho(), f.rho_c()), (0, 0, 0, 1, 2));
        let f = factorize(8).unwrap();
        assert_eq!((f.a, f.b, f.k, f.rho(), f.rho_c()), (3, 0, 0, 8, 8));
        let f = factorize(16).unwrap();
        assert_eq!((f.a, f.b, f.k, f.rho(), f.rho_c()), (0, 1, 0, 9, 10));
        let f = factorize(24).unwrap();
        assert_eq!((f.a, f.b, f.k), (3, 0, 1));
        assert_eq!(factorize(0), Err(RadonHurwitzError::Zero));
    }

    #[test]
    fn rho_examples() {
        assert_eq!((rho(2).unwrap(), rho_c(2).unwrap()), (2, 4));
        assert_eq!((rho(4).unwrap(), rho_c(4).unwrap()), (4, 6));
        assert_eq!((rho(24).unwrap(), rho_c(24).unwrap()), (8, 8));
    }

    #[test]
    fn factorization_reconstructs_n() {
        for n in 1..=4096u64 {
            let f = factorize(n).unwrap();
            assert!(f.a <= 3);
            assert_eq!((1u64 << f.valuation()) * (2 * f.k + 1), n);
            assert!(f.rho() <= f.rho_c());
            assert_eq!(f.rho() == f.rho_c(), f.a == 3, "n = {n}");
        }
    }

    #[test]
    fn alp_examples() {
        assert_eq!(alp_reference(2).unwrap(), AlpReference { n: 2, h_nn: 3, r_nn: 2 });
        assert_eq!(alp_reference(8).unwrap(), AlpReference { n: 8, h_nn: 7, r_nn: 8 });
        // n = 2^a (2k+1): h_{n,n} = 2a + 1.
        assert_eq!(alp_reference(4).unwrap().h_nn, 5);
        assert_eq!(alp_reference(12).unwrap().h_nn, 5);
        assert_eq!(alp_reference(3), Err(RadonHurwitzError::OddOrder(3)));
        assert_eq!(alp_reference(0), Err(RadonHurwitzError::Zero));
    }

    #[test]
    fn table_rows() {
        let rows = emit_rho_table(1).unwrap();
        let pairs: Vec<_> = rows.iter().map(|r| (r.rho, r.rho_c)).collect();
        assert_eq!(
            pairs,
            vec![(1, 2), (2, 4), (4, 6), (8, 8), (9, 10), (10, 12), (12, 14), (16, 16)]
        );
        assert!(emit_rho_table(MAX_TABLE_B).is_ok());
        assert!(emit_rho_table(MAX_TABLE_B + 1).is_err());
    }

    #[test]
    fn table_renderings() {
        let rows = emit_rho_table(0).unwrap();
        let csv = table_csv(&rows);
        assert_eq!(csv.lines().count(), 5);
        assert_eq!(csv.lines().nth(4).unwrap(), "3,0,8,8,8");
        let text = table_text(&rows);
        assert!(text.lines().nth(1).unwrap().trim_start().starts_with('0'));
    }
}
