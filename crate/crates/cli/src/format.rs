//! On-disk algebra format.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "labels": ["X1", "X2", "X3"],
//!   "brackets": [{ "i": 1, "j": 2, "terms": [{ "k": 3, "c": "1" }] }]
//! }
//! ```
//!
//! Indices are 1-based, each bracket is listed once with `i < j`, and
//! coefficients are rational strings. Brackets not listed are zero.

use std::collections::BTreeSet;

use pfiliform::exactlin::parse_rational;
use pfiliform::LieAlgebra;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] pfiliform::Error),
    #[error("bracket ({i},{j}): indices must satisfy 1 <= i < j <= {dim}")]
    BadPair { i: usize, j: usize, dim: usize },
    #[error("bracket ({i},{j}): term index {k} outside 1..={dim}")]
    BadTerm { i: usize, j: usize, k: usize, dim: usize },
    #[error("bracket ({i},{j}) listed twice")]
    Duplicate { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .brackets()
            .map(|((i, j), terms)| BracketEntry {
                i: i + 1,
                j: j + 1,
                terms: terms
                    .iter()
                    .map(|(k, c)| TermEntry {
                        k: k + 1,
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        AlgebraFile {
            dim: g.dim(),
            labels: g.labels().to_vec(),
            brackets,
        }
    }

    /// An empty `labels` list falls back to the default labels.
    pub fn to_algebra(&self) -> Result<LieAlgebra, FormatError> {
        let dim = self.dim;
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for b in &self.brackets {
            let (i, j) = (b.i, b.j);
            if i == 0 || i >= j || j > dim {
                return Err(FormatError::BadPair { i, j, dim });
            }
            if !seen.insert((i, j)) {
                return Err(FormatError::Duplicate { i, j });
            }
            for t in &b.terms {
                if t.k == 0 || t.k > dim {
                    return Err(FormatError::BadTerm { i, j, k: t.k, dim });
                }
                entries.push((i - 1, j - 1, t.k - 1, parse_rational(&t.c)?));
            }
        }
        let labels = (!self.labels.is_empty()).then(|| self.labels.clone());
        Ok(LieAlgebra::from_brackets(dim, labels, entries)?)
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfiliform::catalog::build_family;
    use pfiliform::exactlin::frac;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trip_on_random_brackets(
            dim in 2usize..7,
            raw in prop::collection::vec((0usize..7, 0usize..7, 0usize..7, -9i64..10, 1i64..5), 0..12),
        ) {
            let entries: Vec<_> = raw
                .into_iter()
                .filter(|&(i, j, k, _, _)| i < dim && j < dim && k < dim && i != j)
                .map(|(i, j, k, a, b)| (i, j, k, frac(a, b)))
                .collect();
            let g = LieAlgebra::from_brackets(dim, None, entries).unwrap();
            let text = AlgebraFile::from_algebra(&g).to_json();
            prop_assert_eq!(AlgebraFile::parse(&text).unwrap().to_algebra().unwrap(), g);
        }
    }

    #[test]
    fn round_trip_preserves_structure_constants() {
        let g = build_family(24, 7, Some(&frac(3, 2))).unwrap();
        let text = AlgebraFile::from_algebra(&g).to_json();
        let back = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
        assert_eq!(back, g);
        assert!(text.contains("\"-3/2\""));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = |s: &str| AlgebraFile::parse(s).and_then(|f| f.to_algebra()).unwrap_err();
        assert!(matches!(
            bad(r#"{"dim":3,"brackets":[{"i":2,"j":1,"terms":[]}]}"#),
            FormatError::BadPair { .. }
        ));
        assert!(matches!(
            bad(r#"{"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":4,"c":"1"}]}]}"#),
            FormatError::BadTerm { k: 4, .. }
        ));
        assert!(matches!(
            bad(r#"{"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1.5"}]}]}"#),
            FormatError::Algebra(pfiliform::Error::InvalidRational(_))
        ));
        assert!(matches!(bad(r#"{"dim":3}"#), FormatError::Json(_)));
    }
}
