//! JSON (and TOML) encodings of PHFEs and decision matrices.
//!
//! A cell is either explicit pairs, `{"pairs": [{"v": 0.5, "p": 0.4}]}`, or
//! probabilistic linguistic terms, `{"terms": [{"t": 4, "p": 0.6}], "tau": 3}`.
//! Inside a matrix a linguistic cell may omit `tau` and inherit the matrix's.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcdm::{CriterionSpec, DecisionMatrix};
use crate::phfe::{canonicalize, from_linguistic, LinguisticScale, Phfe};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub v: f64,
    pub p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub t: i64,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellSpec {
    Pairs {
        pairs: Vec<PairSpec>,
    },
    Linguistic {
        terms: Vec<TermSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tau: Option<u32>,
    },
}

impl CellSpec {
    pub fn to_phfe(&self, default_tau: Option<u32>) -> Result<Phfe> {
        match self {
            CellSpec::Pairs { pairs } => canonicalize(pairs.iter().map(|p| (p.v, p.p))),
            CellSpec::Linguistic { terms, tau } => {
                let tau = tau.or(default_tau).ok_or_else(|| {
                    Error::Parse("linguistic cell without `tau`".to_string())
                })?;
                let scale = LinguisticScale::new(tau)?;
                let terms: Vec<(i64, f64)> = terms.iter().map(|t| (t.t, t.p)).collect();
                from_linguistic(&terms, scale)
            }
        }
    }
}

impl From<&Phfe> for CellSpec {
    fn from(a: &Phfe) -> Self {
        CellSpec::Pairs {
            pairs: a
                .pairs()
                .iter()
                .map(|m| PairSpec {
                    v: m.value,
                    p: m.prob,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub criteria: Vec<CriterionSpec>,
    pub alternatives: Vec<String>,
    pub cells: Vec<Vec<CellSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<u32>,
}

impl MatrixSpec {
    pub fn to_matrix(&self) -> Result<DecisionMatrix> {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| {
                        c.to_phfe(self.tau)
                            .map_err(|e| Error::Parse(format!("cell ({i}, {j}): {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        DecisionMatrix::new(self.alternatives.clone(), self.criteria.clone(), cells)
    }
}

pub fn parse_cell(json: &str) -> Result<Phfe> {
    let spec: CellSpec = serde_json::from_str(json)?;
    spec.to_phfe(None)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CellList {
    Many(Vec<CellSpec>),
    One(CellSpec),
}

/// A single cell or a JSON array of cells.
pub fn parse_phfe_list(json: &str) -> Result<Vec<Phfe>> {
    let cells = match serde_json::from_str::<CellList>(json)? {
        CellList::Many(v) => v,
        CellList::One(c) => vec![c],
    };
    if cells.is_empty() {
        return Err(Error::EmptyInput("no PHFEs in input"));
    }
    cells
        .iter()
        .enumerate()
        .map(|(i, c)| c.to_phfe(None).map_err(|e| Error::Parse(format!("element {i}: {e}"))))
        .collect()
}

pub fn parse_matrix(json: &str) -> Result<DecisionMatrix> {
    let spec: MatrixSpec = serde_json::from_str(json)?;
    spec.to_matrix()
}
