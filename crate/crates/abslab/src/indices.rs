//! Bond-incident-degree indices: each index is a sum over edges of a weight
//! depending only on the endpoint degrees. ABS is the principal index here;
//! ABC, SC and Randic are carried along for comparison output.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Abs,
    Abc,
    Sc,
    Randic,
}

impl IndexKind {
    pub const ALL: [IndexKind; 4] = [
        IndexKind::Abs,
        IndexKind::Abc,
        IndexKind::Sc,
        IndexKind::Randic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Abs => "abs",
            IndexKind::Abc => "abc",
            IndexKind::Sc => "sc",
            IndexKind::Randic => "randic",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, IndexError> {
        match s.to_ascii_lowercase().as_str() {
            "abs" => Ok(IndexKind::Abs),
            "abc" => Ok(IndexKind::Abc),
            "sc" => Ok(IndexKind::Sc),
            "randic" => Ok(IndexKind::Randic),
            other => Err(IndexError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("degrees must be positive, got ({0}, {1})")]
    NonPositiveDegree(usize, usize),
    #[error("unknown index kind `{0}`")]
    UnknownKind(String),
}

/// Weight of an edge whose endpoints have degrees `du`, `dv`. Symmetric.
pub fn edge_weight(kind: IndexKind, du: usize, dv: usize) -> Result<f64, IndexError> {
    if du == 0 || dv == 0 {
        return Err(IndexError::NonPositiveDegree(du, dv));
    }
    Ok(edge_weight_unchecked(kind, du, dv))
}

pub(crate) fn edge_weight_unchecked(kind: IndexKind, du: usize, dv: usize) -> f64 {
    let (a, b) = (du as f64, dv as f64);
    match kind {
        IndexKind::Abs => (1.0 - 2.0 / (a + b)).sqrt(),
        IndexKind::Abc => ((a + b - 2.0) / (a * b)).sqrt(),
        IndexKind::Sc => 1.0 / (a + b).sqrt(),
        IndexKind::Randic => 1.0 / (a * b).sqrt(),
    }
}

/// Sum of `edge_weight` over all edges of `t`. Zero for the one-vertex tree.
pub fn index_value(t: &Tree, kind: IndexKind) -> f64 {
    let deg = t.degrees();
    t.edges()
        .iter()
        .map(|&(u, v)| edge_weight_unchecked(kind, deg[u], deg[v]))
        .sum()
}

/// ABS value of `t`; shorthand for the crate's principal index.
pub fn abs_index(t: &Tree) -> f64 {
    index_value(t, IndexKind::Abs)
}
