//! Entropy-weighted TOPSIS over a PHFE decision matrix.
//!
//! 1. criterion weights from the mean comprehensive entropy of each column,
//! 2. weighted entropy-based distances to the ideal solutions,
//! 3. relative closeness `D- / (D+ + D-)`,
//! 4. ranking by descending closeness.
//!
//! All sums run row-major in index order so results are bit-reproducible.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::distance::{entropy_distance, PsiFunction};
use crate::entropy::{comprehensive_entropy, EntropyConfig};
use crate::error::{Error, Result};
use crate::phfe::Phfe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    #[default]
    Benefit,
    Cost,
}

impl CriterionKind {
    /// `(PIS, NIS)` for this kind of criterion.
    pub fn ideals(&self) -> (Phfe, Phfe) {
        match self {
            CriterionKind::Benefit => (Phfe::full_set(), Phfe::empty_set()),
            CriterionKind::Cost => (Phfe::empty_set(), Phfe::full_set()),
        }
    }

    pub fn flipped(&self) -> CriterionKind {
        match self {
            CriterionKind::Benefit => CriterionKind::Cost,
            CriterionKind::Cost => CriterionKind::Benefit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    #[serde(default)]
    pub kind: CriterionKind,
}

impl CriterionSpec {
    pub fn benefit(name: impl Into<String>) -> Self {
        CriterionSpec {
            name: name.into(),
            kind: CriterionKind::Benefit,
        }
    }

    pub fn cost(name: impl Into<String>) -> Self {
        CriterionSpec {
            name: name.into(),
            kind: CriterionKind::Cost,
        }
    }
}

/// `m` alternatives rated on `n` criteria, one PHFE per cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    cells: Vec<Vec<Phfe>>,
}

impl DecisionMatrix {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        cells: Vec<Vec<Phfe>>,
    ) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::InvalidMatrix("no alternatives".into()));
        }
        if criteria.is_empty() {
            return Err(Error::InvalidMatrix("no criteria".into()));
        }
        let mut seen = HashSet::new();
        for c in &criteria {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::InvalidMatrix(format!(
                    "duplicate criterion name `{}`",
                    c.name
                )));
            }
        }
        if cells.len() != alternatives.len() {
            return Err(Error::InvalidMatrix(format!(
                "{} rows of cells for {} alternatives",
                cells.len(),
                alternatives.len()
            )));
        }
        for (i, row) in cells.iter().enumerate() {
            if row.len() != criteria.len() {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} cells, expected {}",
                    i,
                    row.len(),
                    criteria.len()
                )));
            }
        }
        Ok(DecisionMatrix {
            alternatives,
            criteria,
            cells,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn cells(&self) -> &[Vec<Phfe>] {
        &self.cells
    }

    pub fn cell(&self, alternative: usize, criterion: usize) -> &Phfe {
        &self.cells[alternative][criterion]
    }

    /// Number of alternatives `m`.
    pub fn rows(&self) -> usize {
        self.alternatives.len()
    }

    /// Number of criteria `n`.
    pub fn cols(&self) -> usize {
        self.criteria.len()
    }

    /// Copy with criterion `j`'s kind switched between benefit and cost.
    pub fn with_flipped_kind(&self, j: usize) -> DecisionMatrix {
        let mut out = self.clone();
        out.criteria[j].kind = out.criteria[j].kind.flipped();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    /// `Ēp_j`, the column mean of comprehensive entropies.
    pub mean_entropy: Vec<f64>,
    /// `1 - Ēp_j` before normalization.
    pub raw: Vec<f64>,
    /// `w_j`, non-negative and summing to one.
    pub normalized: Vec<f64>,
}

impl WeightVector {
    /// Normalizes arbitrary non-negative raw weights by their sum.
    pub fn from_raw(raw: Vec<f64>) -> Result<Self> {
        let total: f64 = raw.iter().sum();
        if !(total > 0.0) {
            return Err(Error::DegenerateWeights);
        }
        let normalized = raw.iter().map(|r| r / total).collect();
        Ok(WeightVector {
            mean_entropy: raw.iter().map(|r| 1.0 - r).collect(),
            raw,
            normalized,
        })
    }

    /// Index of the largest normalized weight (first on ties).
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (j, &w) in self.normalized.iter().enumerate() {
            if w > self.normalized[best] {
                best = j;
            }
        }
        best
    }
}

const DEGENERATE_EPS: f64 = 1e-12;

/// `w_j = (1 - Ēp_j) / (n - Σ Ēp_j)`.
pub fn entropy_weights(matrix: &DecisionMatrix, cfg: &EntropyConfig) -> Result<WeightVector> {
    let m = matrix.rows() as f64;
    let n = matrix.cols();
    let mut sums = vec![0.0; n];
    for row in matrix.cells() {
        for (j, cell) in row.iter().enumerate() {
            sums[j] += comprehensive_entropy(cell, cfg);
        }
    }
    let mean_entropy: Vec<f64> = sums.into_iter().map(|s| s / m).collect();
    let denominator = n as f64 - mean_entropy.iter().sum::<f64>();
    if denominator <= DEGENERATE_EPS {
        return Err(Error::DegenerateWeights);
    }
    let raw: Vec<f64> = mean_entropy.iter().map(|e| 1.0 - e).collect();
    let normalized = raw.iter().map(|r| r / denominator).collect();
    Ok(WeightVector {
        mean_entropy,
        raw,
        normalized,
    })
}

/// Unweighted `Dp` of every cell to its criterion's (PIS, NIS).
pub fn cell_ideal_distances(
    matrix: &DecisionMatrix,
    psi: PsiFunction,
    cfg: &EntropyConfig,
) -> Vec<Vec<(f64, f64)>> {
    let ideals: Vec<(Phfe, Phfe)> = matrix.criteria().iter().map(|c| c.kind.ideals()).collect();
    matrix
        .cells()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&ideals)
                .map(|(cell, (pis, nis))| {
                    (
                        entropy_distance(cell, pis, psi, cfg),
                        entropy_distance(cell, nis, psi, cfg),
                    )
                })
                .collect()
        })
        .collect()
}

/// `(D+, D-)` per alternative.
pub fn ideal_distances(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    psi: PsiFunction,
    cfg: &EntropyConfig,
) -> (Vec<f64>, Vec<f64>) {
    let per_cell = cell_ideal_distances(matrix, psi, cfg);
    let mut d_plus = Vec::with_capacity(matrix.rows());
    let mut d_minus = Vec::with_capacity(matrix.rows());
    for row in &per_cell {
        let mut plus = 0.0;
        let mut minus = 0.0;
        for (&(dp, dm), w) in row.iter().zip(&weights.normalized) {
            plus += w * dp;
            minus += w * dm;
        }
        d_plus.push(plus);
        d_minus.push(minus);
    }
    (d_plus, d_minus)
}

pub fn closeness(d_plus: f64, d_minus: f64) -> Result<f64> {
    let total = d_plus + d_minus;
    if !(total > 0.0) {
        return Err(Error::ZeroDenominator { alternative: None });
    }
    Ok(d_minus / total)
}

/// Indices sorted by descending score; ties keep their original order.
pub fn rank_descending(scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    order
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopsisResult {
    pub config: String,
    pub psi: PsiFunction,
    pub alternatives: Vec<String>,
    pub weights: WeightVector,
    pub d_plus: Vec<f64>,
    pub d_minus: Vec<f64>,
    pub closeness: Vec<f64>,
    /// Alternative indices, best first.
    pub ranking: Vec<usize>,
}

impl TopsisResult {
    /// e.g. `x1 > x3 > x2`.
    pub fn ranking_string(&self) -> String {
        self.ranking
            .iter()
            .map(|&i| self.alternatives[i].as_str())
            .collect::<Vec<_>>()
            .join(" > ")
    }

    pub fn best(&self) -> usize {
        self.ranking[0]
    }
}

pub fn run_topsis(
    matrix: &DecisionMatrix,
    cfg: &EntropyConfig,
    psi: PsiFunction,
) -> Result<TopsisResult> {
    let weights = entropy_weights(matrix, cfg)?;
    let (d_plus, d_minus) = ideal_distances(matrix, &weights, psi, cfg);
    let closeness = d_plus
        .iter()
        .zip(&d_minus)
        .enumerate()
        .map(|(i, (&p, &m))| {
            closeness(p, m).map_err(|_| Error::ZeroDenominator {
                alternative: Some(i),
            })
        })
        .collect::<Result<Vec<f64>>>()?;
    let ranking = rank_descending(&closeness);
    Ok(TopsisResult {
        config: cfg.to_string(),
        psi,
        alternatives: matrix.alternatives().to_vec(),
        weights,
        d_plus,
        d_minus,
        closeness,
        ranking,
    })
}
