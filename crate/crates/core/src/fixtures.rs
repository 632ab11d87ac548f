//! Embedded data for the published comparison tables.
//!
//! One TOML file per table lives in `fixtures/`. The files are compiled in,
//! so `reproduce` needs no filesystem access.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::MatrixSpec;
use crate::mcdm::DecisionMatrix;
use crate::phfe::{canonicalize, Phfe};

const SOURCES: [(&str, &str); 11] = [
    ("table1", include_str!("../fixtures/table1.toml")),
    ("table2", include_str!("../fixtures/table2.toml")),
    ("table3", include_str!("../fixtures/table3.toml")),
    ("table4", include_str!("../fixtures/table4.toml")),
    ("table5", include_str!("../fixtures/table5.toml")),
    ("table6", include_str!("../fixtures/table6.toml")),
    ("table7", include_str!("../fixtures/table7.toml")),
    ("table8", include_str!("../fixtures/table8.toml")),
    ("table9", include_str!("../fixtures/table9.toml")),
    ("table10", include_str!("../fixtures/table10.toml")),
    ("table11", include_str!("../fixtures/table11.toml")),
];

/// Whether a mismatch fails `reproduce` or is only reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    Accept,
    #[default]
    Report,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedElement {
    pub name: String,
    pub pairs: Vec<[f64; 2]>,
}

impl NamedElement {
    pub fn to_phfe(&self) -> Result<Phfe> {
        canonicalize(self.pairs.iter().map(|&[v, p]| (v, p)))
    }
}

fn default_tolerance() -> f64 {
    5e-4
}

fn default_psi() -> String {
    "id".to_string()
}

/// A measure evaluated on every element of a table.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureRow {
    pub label: String,
    pub measure: String,
    #[serde(default)]
    pub printed: Option<Vec<f64>>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub value_grade: Grade,
    /// Restricts `value_grade` to these columns; empty means all.
    #[serde(default)]
    pub accept_columns: Vec<String>,
    #[serde(default)]
    pub ranking: Option<String>,
    #[serde(default)]
    pub ranking_grade: Grade,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightRow {
    pub label: String,
    pub config: String,
    pub printed: Vec<f64>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub ranking: Option<String>,
    #[serde(default)]
    pub ranking_grade: Grade,
    #[serde(default)]
    pub argmax: Option<String>,
    #[serde(default)]
    pub argmax_grade: Grade,
    #[serde(default)]
    pub sum_grade: Option<Grade>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopsisRow {
    pub label: String,
    pub config: String,
    #[serde(default = "default_psi")]
    pub psi: String,
    pub printed: Vec<f64>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    pub ranking: String,
    #[serde(default)]
    pub ranking_grade: Grade,
}

/// Printed numbers from other methods, shown for comparison only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantRow {
    pub label: String,
    pub values: Vec<f64>,
    #[serde(default)]
    pub ranking: Option<String>,
}

/// "`best` ranks first under every comprehensive configuration."
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AllConfigsCheck {
    pub best: String,
    #[serde(default = "default_psi")]
    pub psi: String,
    #[serde(default)]
    pub grade: Grade,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFixture {
    pub id: String,
    pub title: String,
    #[serde(default)]
    pub elements: Vec<NamedElement>,
    #[serde(default, rename = "matrix")]
    matrix_field: Option<MatrixField>,
    #[serde(default)]
    pub rows: Vec<MeasureRow>,
    #[serde(default)]
    pub weights: Vec<WeightRow>,
    #[serde(default)]
    pub topsis: Vec<TopsisRow>,
    #[serde(default)]
    pub constants: Vec<ConstantRow>,
    #[serde(default)]
    pub all_configs: Option<AllConfigsCheck>,
}

/// Either an inline matrix or the id of the table that holds it.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
enum MatrixField {
    Reference(String),
    Inline(MatrixSpec),
}

impl TableFixture {
    pub fn element_names(&self) -> Vec<&str> {
        self.elements.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn phfes(&self) -> Result<Vec<Phfe>> {
        self.elements.iter().map(NamedElement::to_phfe).collect()
    }

    pub fn inline_matrix(&self) -> Option<&MatrixSpec> {
        match &self.matrix_field {
            Some(MatrixField::Inline(m)) => Some(m),
            _ => None,
        }
    }

    /// The decision matrix this table uses, resolving references.
    pub fn matrix(&self) -> Result<Option<DecisionMatrix>> {
        match &self.matrix_field {
            None => Ok(None),
            Some(MatrixField::Inline(m)) => m.to_matrix().map(Some),
            Some(MatrixField::Reference(id)) => {
                let target = table(id)?;
                let spec = target
                    .inline_matrix()
                    .ok_or_else(|| Error::Parse(format!("{id} holds no matrix")))?;
                spec.to_matrix().map(Some)
            }
        }
    }
}

fn parse(id: &str, src: &str) -> Result<TableFixture> {
    let t: TableFixture =
        toml::from_str(src).map_err(|e| Error::Parse(format!("fixture {id}: {e}")))?;
    if t.id != id {
        return Err(Error::Parse(format!("fixture {id} declares id {}", t.id)));
    }
    Ok(t)
}

/// Every table fixture in order.
pub fn all() -> Result<Vec<TableFixture>> {
    SOURCES.iter().map(|(id, src)| parse(id, src)).collect()
}

pub fn table(id: &str) -> Result<TableFixture> {
    SOURCES
        .iter()
        .find(|(k, _)| *k == id)
        .ok_or_else(|| Error::Parse(format!("no fixture named {id}")))
        .and_then(|(k, src)| parse(k, src))
}

/// The published case-study decision matrix.
pub fn case_study_matrix() -> DecisionMatrix {
    table("table9")
        .and_then(|t| t.matrix())
        .ok()
        .flatten()
        .expect("embedded matrix fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        let tables = all().unwrap();
        assert_eq!(tables.len(), 11);
        for t in &tables {
            t.phfes().unwrap();
            for r in &t.rows {
                if let Some(p) = &r.printed {
                    assert_eq!(p.len(), t.elements.len(), "{} {}", t.id, r.label);
                }
            }
        }
    }

    #[test]
    fn case_study_matrix_shape() {
        let m = case_study_matrix();
        assert_eq!((m.rows(), m.cols()), (3, 4));
        assert_eq!(m.cell(0, 0), &Phfe::new([(0.5, 0.4), (4.0 / 6.0, 0.6)]).unwrap());
        assert_eq!(m.cell(2, 2).len(), 3);
        assert_eq!(m.cell(1, 2).pairs()[0].value, 1.0 / 6.0);
    }

    #[test]
    fn references_resolve() {
        for id in ["table10", "table11"] {
            assert!(table(id).unwrap().matrix().unwrap().is_some());
        }
        assert!(table("table1").unwrap().matrix().unwrap().is_none());
        assert!(table("table12").is_err());
    }
}
