//! Text and JSON encodings of [`ExactMatrix`].
//!
//! Text: one row per line, whitespace-separated entries (`p/q`, `p/q+r/s*i`,
//! `r/s*i`, integers), blank lines and `#` comment lines ignored.
//!
//! JSON: `{"n": n, "rows": [[["p/q","r/s"], ...], ...]}` with `[re, im]` pairs.

use serde::{Deserialize, Serialize};

use super::matrix::ExactMatrix;
use super::scalar::GaussianRational;
use crate::error::ParseError;

pub fn parse_matrix_text(src: &str) -> Result<ExactMatrix, ParseError> {
    let mut rows = Vec::new();
    for (k, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<GaussianRational>().map_err(|e| ParseError::Text {
                    line: k + 1,
                    msg: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    ExactMatrix::from_rows(rows)
}

pub fn to_text(m: &ExactMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses either encoding, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_matrix(src: &str) -> Result<ExactMatrix, ParseError> {
    if src.trim_start().starts_with('{') {
        Ok(serde_json::from_str::<ExactMatrix>(src)?)
    } else {
        parse_matrix_text(src)
    }
}

/// Wire form of a matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<[String; 2]>>,
}

impl From<ExactMatrix> for MatrixJson {
    fn from(m: ExactMatrix) -> Self {
        MatrixJson {
            n: m.n(),
            rows: m.rows().map(|r| r.iter().map(GaussianRational::to_pair).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for ExactMatrix {
    type Error = ParseError;

    fn try_from(j: MatrixJson) -> Result<Self, ParseError> {
        if j.rows.len() != j.n {
            return Err(ParseError::Shape {
                n: j.n,
                rows: j.rows.len(),
            });
        }
        let rows = j
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|[re, im]| GaussianRational::from_pair(re, im))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(rows)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pair().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [re, im] = <[String; 2]>::deserialize(d)?;
        GaussianRational::from_pair(&re, &im).map_err(serde::de::Error::custom)
    }
}
