//! Recomputes the published comparison tables from the embedded fixtures.
//!
//! Each fixture cell becomes a [`Check`] holding the computed and printed
//! observation, a MATCH/MISMATCH status and a grade. Only `Accept`-grade
//! mismatches fail a run unless `strict` is requested.

use serde::Serialize;

use crate::entropy::EntropyConfig;
use crate::error::{Error, Result};
use crate::fixtures::{self, ConstantRow, Grade, TableFixture};
use crate::mcdm::{entropy_weights, run_topsis, DecisionMatrix};
use crate::measure::Measure;
use crate::distance::PsiFunction;

/// Values closer than this are reported as ties in ranking chains.
pub const TIE_TOLERANCE: f64 = 1e-12;
pub const SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Value,
    Ranking,
    Argmax,
    WeightSum,
    BestEverywhere,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Observation {
    Number(f64),
    Text(String),
}

impl std::fmt::Display for Observation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Observation::Number(x) => write!(f, "{x}"),
            Observation::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub row: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<String>,
    pub kind: CheckKind,
    pub computed: Observation,
    pub printed: Observation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub status: Status,
    pub grade: Grade,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Whether this check fails the run.
    pub fn fails(&self, strict: bool) -> bool {
        self.status == Status::Mismatch && (strict || self.grade == Grade::Accept)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub id: String,
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constants: Vec<ConstantRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReproduceReport {
    pub tables: Vec<TableReport>,
}

impl ReproduceReport {
    pub fn passed(&self, strict: bool) -> bool {
        self.failures(strict).is_empty()
    }

    pub fn failures(&self, strict: bool) -> Vec<(&str, &Check)> {
        self.tables
            .iter()
            .flat_map(|t| t.checks.iter().map(move |c| (t.id.as_str(), c)))
            .filter(|(_, c)| c.fails(strict))
            .collect()
    }

    pub fn table(&self, id: &str) -> Option<&TableReport> {
        self.tables.iter().find(|t| t.id == id)
    }
}

/// Descending chain such as `h2 > h3 = h1`; ties keep input order.
pub fn ranking_chain(names: &[&str], values: &[f64]) -> String {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut out = String::new();
    for (k, &i) in order.iter().enumerate() {
        if k > 0 {
            let prev = values[order[k - 1]];
            out.push_str(if (prev - values[i]).abs() <= TIE_TOLERANCE { " = " } else { " > " });
        }
        out.push_str(names[i]);
    }
    out
}

/// Checks every adjacent relation of a printed chain against `values`.
pub fn chain_holds(chain: &str, names: &[&str], values: &[f64]) -> Result<bool> {
    let mut items = Vec::new();
    let mut ops = Vec::new();
    let mut current = String::new();
    for ch in chain.chars() {
        match ch {
            '>' | '<' | '=' => {
                items.push(std::mem::take(&mut current));
                ops.push(ch);
            }
            _ => current.push(ch),
        }
    }
    items.push(current);
    let lookup = |name: &str| {
        let name = name.trim();
        names
            .iter()
            .position(|n| *n == name)
            .map(|i| values[i])
            .ok_or_else(|| Error::Parse(format!("unknown name `{name}` in ranking `{chain}`")))
    };
    for (k, op) in ops.iter().enumerate() {
        let (a, b) = (lookup(&items[k])?, lookup(&items[k + 1])?);
        let holds = match op {
            '>' => a - b > TIE_TOLERANCE,
            '<' => b - a > TIE_TOLERANCE,
            _ => (a - b).abs() <= TIE_TOLERANCE,
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Match
    } else {
        Status::Mismatch
    }
}

fn error_check(row: &str, kind: CheckKind, printed: Observation, grade: Grade, e: &Error) -> Check {
    Check {
        row: row.to_string(),
        column: None,
        kind,
        computed: Observation::Text(format!("error: {e}")),
        printed,
        tolerance: None,
        status: Status::Mismatch,
        grade,
        note: None,
    }
}

fn ranking_check(
    row: &str,
    printed: &str,
    names: &[&str],
    values: &[f64],
    grade: Grade,
    note: Option<String>,
) -> Check {
    let (ok, note) = match chain_holds(printed, names, values) {
        Ok(ok) => (ok, note),
        Err(e) => (false, Some(e.to_string())),
    };
    Check {
        row: row.to_string(),
        column: None,
        kind: CheckKind::Ranking,
        computed: Observation::Text(ranking_chain(names, values)),
        printed: Observation::Text(printed.to_string()),
        tolerance: None,
        status: status(ok),
        grade,
        note,
    }
}

fn value_check(row: &str, column: &str, computed: f64, printed: f64, tol: f64, grade: Grade) -> Check {
    Check {
        row: row.to_string(),
        column: Some(column.to_string()),
        kind: CheckKind::Value,
        computed: Observation::Number(computed),
        printed: Observation::Number(printed),
        tolerance: Some(tol),
        status: status((computed - printed).abs() <= tol),
        grade,
        note: None,
    }
}

fn measure_table(t: &TableFixture) -> Result<Vec<Check>> {
    let names = t.element_names();
    let phfes = t.phfes()?;
    let mut checks = Vec::new();
    for row in &t.rows {
        let measure: Measure = row.measure.parse()?;
        let values: Vec<f64> = phfes.iter().map(|a| measure.eval(a)).collect();
        if let Some(printed) = &row.printed {
            for (k, (&c, &p)) in values.iter().zip(printed).enumerate() {
                let accepted = row.value_grade == Grade::Accept
                    && (row.accept_columns.is_empty() || row.accept_columns.iter().any(|n| n == names[k]));
                let grade = if accepted { Grade::Accept } else { Grade::Report };
                let mut check = value_check(&row.label, names[k], c, p, row.tolerance, grade);
                check.note = row.note.clone();
                checks.push(check);
            }
        }
        if let Some(r) = &row.ranking {
            checks.push(ranking_check(&row.label, r, &names, &values, row.ranking_grade, None));
        }
    }
    Ok(checks)
}

fn weight_table(t: &TableFixture, m: &DecisionMatrix) -> Result<Vec<Check>> {
    let wnames: Vec<String> = (1..=m.cols()).map(|j| format!("w{j}")).collect();
    let wrefs: Vec<&str> = wnames.iter().map(String::as_str).collect();
    let mut checks = Vec::new();
    for row in &t.weights {
        let cfg: EntropyConfig = row.config.parse()?;
        let w = match entropy_weights(m, &cfg) {
            Ok(w) => w,
            Err(e) => {
                let printed = Observation::Text(format!("{:?}", row.printed));
                checks.push(error_check(&row.label, CheckKind::Value, printed, Grade::Report, &e));
                continue;
            }
        };
        for (j, (&c, &p)) in w.raw.iter().zip(&row.printed).enumerate() {
            checks.push(value_check(&row.label, wrefs[j], c, p, row.tolerance, Grade::Report));
        }
        if let Some(r) = &row.ranking {
            checks.push(ranking_check(&row.label, r, &wrefs, &w.raw, row.ranking_grade, None));
        }
        if let Some(best) = &row.argmax {
            let got = &m.criteria()[w.argmax()].name;
            checks.push(Check {
                row: row.label.clone(),
                column: None,
                kind: CheckKind::Argmax,
                computed: Observation::Text(got.clone()),
                printed: Observation::Text(best.clone()),
                tolerance: None,
                status: status(got == best),
                grade: row.argmax_grade,
                note: None,
            });
        }
        if let Some(grade) = row.sum_grade {
            let total: f64 = w.normalized.iter().sum();
            checks.push(Check {
                row: row.label.clone(),
                column: None,
                kind: CheckKind::WeightSum,
                computed: Observation::Number(total),
                printed: Observation::Number(1.0),
                tolerance: Some(SUM_TOLERANCE),
                status: status((total - 1.0).abs() <= SUM_TOLERANCE),
                grade,
                note: Some("normalized weights".into()),
            });
        }
    }
    Ok(checks)
}

fn topsis_table(t: &TableFixture, m: &DecisionMatrix) -> Result<Vec<Check>> {
    let names: Vec<&str> = m.alternatives().iter().map(String::as_str).collect();
    let mut checks = Vec::new();
    for row in &t.topsis {
        let cfg: EntropyConfig = row.config.parse()?;
        let psi: PsiFunction = row.psi.parse()?;
        let r = match run_topsis(m, &cfg, psi) {
            Ok(r) => r,
            Err(e) => {
                let printed = Observation::Text(row.ranking.clone());
                checks.push(error_check(&row.label, CheckKind::Ranking, printed, row.ranking_grade, &e));
                continue;
            }
        };
        for (i, (&c, &p)) in r.closeness.iter().zip(&row.printed).enumerate() {
            checks.push(value_check(&row.label, names[i], c, p, row.tolerance, Grade::Report));
        }
        checks.push(ranking_check(&row.label, &row.ranking, &names, &r.closeness, row.ranking_grade, None));
    }
    if let Some(all) = &t.all_configs {
        let psi: PsiFunction = all.psi.parse()?;
        let configs = EntropyConfig::all(1.0);
        let mut firsts = Vec::new();
        let mut errors = Vec::new();
        for cfg in &configs {
            match run_topsis(m, cfg, psi) {
                Ok(r) => firsts.push((cfg.to_string(), names[r.ranking[0]].to_string())),
                Err(e) => errors.push(format!("{cfg}: {e}")),
            }
        }
        let hits = firsts.iter().filter(|(_, b)| *b == all.best).count();
        let others: Vec<String> = firsts
            .iter()
            .filter(|(_, b)| *b != all.best)
            .map(|(c, b)| format!("{c}: {b}"))
            .collect();
        let mut note_parts = others;
        note_parts.extend(errors);
        checks.push(Check {
            row: format!("all configurations, psi = {psi}"),
            column: None,
            kind: CheckKind::BestEverywhere,
            computed: Observation::Text(format!("{} first in {hits}/{}", all.best, configs.len())),
            printed: Observation::Text(format!("{} first in {n}/{n}", all.best, n = configs.len())),
            tolerance: None,
            status: status(hits == configs.len()),
            grade: all.grade,
            note: (!note_parts.is_empty()).then(|| note_parts.join("; ")),
        });
    }
    Ok(checks)
}

pub fn reproduce_table(t: &TableFixture) -> Result<TableReport> {
    let mut checks = measure_table(t)?;
    if !t.weights.is_empty() || !t.topsis.is_empty() {
        let m = t
            .matrix()?
            .ok_or_else(|| Error::Parse(format!("{} has weight or TOPSIS rows but no matrix", t.id)))?;
        checks.extend(weight_table(t, &m)?);
        checks.extend(topsis_table(t, &m)?);
    }
    Ok(TableReport {
        id: t.id.clone(),
        title: t.title.clone(),
        checks,
        constants: t.constants.clone(),
    })
}

/// Every table that carries checks; the input-only matrix table is skipped.
pub fn reproduce() -> Result<ReproduceReport> {
    let tables = fixtures::all()?
        .iter()
        .filter(|t| t.inline_matrix().is_none())
        .map(reproduce_table)
        .collect::<Result<Vec<_>>>()?;
    Ok(ReproduceReport { tables })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        let names = ["a", "b", "c"];
        assert_eq!(ranking_chain(&names, &[0.2, 0.9, 0.2]), "b > a = c");
        assert!(chain_holds("b>a=c", &names, &[0.2, 0.9, 0.2]).unwrap());
        assert!(chain_holds("a < b", &names, &[0.2, 0.9, 0.2]).unwrap());
        assert!(!chain_holds("a>c", &names, &[0.2, 0.9, 0.2]).unwrap());
        assert!(chain_holds("a>d", &names, &[0.2, 0.9, 0.2]).is_err());
    }

    #[test]
    fn table1_accepts() {
        let report = reproduce().unwrap();
        let t1 = report.table("table1").unwrap();
        for c in &t1.checks {
            if c.grade == Grade::Accept {
                assert_eq!(c.status, Status::Match, "{c:?}");
            }
        }
        assert!(report.table("table9").is_none());
        assert_eq!(report.tables.len(), 10);
    }

    #[test]
    fn strict_counts_report_only_mismatches() {
        let report = reproduce().unwrap();
        assert!(report.failures(true).len() > report.failures(false).len());
    }
}
