//! Exact arithmetic over `Q(i)` and the dense matrix kernel.

pub mod format;
mod gauss_int;
pub mod matrix;
pub mod scalar;

pub use format::{parse_matrix, parse_matrix_text, to_text, MatrixJson};
pub use matrix::{rank_of_rows, ExactMatrix, COFACTOR_MINOR_LIMIT};
pub use scalar::{fmt_rational, parse_rational, GaussianRational};
