use std::io::Read;
use std::path::Path;

use phfe_core::axioms::{run_suites, AxiomReport, Mutation};
use phfe_core::io::{parse_matrix, parse_phfe_list};
use phfe_core::mcdm::run_topsis;
use phfe_core::reproduce::{self, Observation, ReproduceReport};
use phfe_core::{entropy_breakdown, entropy_distance, EntropyConfig, Measure, PsiFunction};
use serde::Serialize;

use crate::format::{emit, json, sig6, Format, Grid};
use crate::Failure;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_config(config: &str, r: Option<f64>) -> Result<EntropyConfig, Failure> {
    let cfg: EntropyConfig = config.parse()?;
    match r {
        None => Ok(cfg),
        Some(r) => match Measure::Comprehensive(cfg).with_exponent(r)? {
            Measure::Comprehensive(cfg) => Ok(cfg),
            _ => unreachable!("with_exponent keeps the measure family"),
        },
    }
}

#[derive(Serialize)]
struct EntropyRow {
    element: usize,
    phfe: String,
    measure: String,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    fuzziness: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonspecificity: Option<f64>,
}

pub fn entropy(input: &Path, measures: &[String], r: Option<f64>, format: Format) -> Result<(), Failure> {
    let phfes = parse_phfe_list(&read_input(input)?)?;
    let measures = measures
        .iter()
        .map(|id| {
            let m: Measure = id.parse()?;
            match r {
                Some(r) => m.with_exponent(r),
                None => Ok(m),
            }
        })
        .collect::<phfe_core::Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    for (i, a) in phfes.iter().enumerate() {
        for m in &measures {
            let (fuzziness, nonspecificity) = match m {
                Measure::Comprehensive(cfg) => {
                    let b = entropy_breakdown(a, cfg);
                    (Some(b.fuzziness), Some(b.nonspecificity))
                }
                _ => (None, None),
            };
            rows.push(EntropyRow {
                element: i + 1,
                phfe: a.to_string(),
                measure: m.to_string(),
                value: m.eval(a),
                fuzziness,
                nonspecificity,
            });
        }
    }

    if format == Format::Json {
        emit(&json(&rows));
        return Ok(());
    }
    let mut g = Grid::new(["element", "phfe", "measure", "value", "fuzziness", "nonspecificity"]);
    let opt = |x: Option<f64>| x.map(sig6).unwrap_or_default();
    for r in &rows {
        g.push(vec![
            r.element.to_string(),
            r.phfe.clone(),
            r.measure.clone(),
            sig6(r.value),
            opt(r.fuzziness),
            opt(r.nonspecificity),
        ]);
    }
    emit(&g.render(format));
    Ok(())
}

#[derive(Serialize)]
struct DistanceReport {
    config: String,
    psi: PsiFunction,
    elements: Vec<String>,
    distances: Vec<Vec<f64>>,
}

pub fn distance(
    input: &Path,
    config: &str,
    psi: &str,
    r: Option<f64>,
    format: Format,
) -> Result<(), Failure> {
    let phfes = parse_phfe_list(&read_input(input)?)?;
    let cfg = parse_config(config, r)?;
    let psi: PsiFunction = psi.parse()?;
    let distances: Vec<Vec<f64>> = phfes
        .iter()
        .map(|a| phfes.iter().map(|b| entropy_distance(a, b, psi, &cfg)).collect())
        .collect();
    let report = DistanceReport {
        config: cfg.to_string(),
        psi,
        elements: phfes.iter().map(ToString::to_string).collect(),
        distances,
    };

    if format == Format::Json {
        emit(&json(&report));
        return Ok(());
    }
    let labels: Vec<String> = (1..=phfes.len()).map(|i| format!("e{i}")).collect();
    let mut g = Grid::new(std::iter::once("").chain(labels.iter().map(String::as_str)));
    for (label, row) in labels.iter().zip(&report.distances) {
        g.push(std::iter::once(label.clone()).chain(row.iter().map(|&d| sig6(d))).collect());
    }
    if format == Format::Table {
        let mut out = format!("config {}  psi {}\n", report.config, report.psi);
        for (label, e) in labels.iter().zip(&report.elements) {
            out.push_str(&format!("{label} = {e}\n"));
        }
        out.push('\n');
        out.push_str(&g.text());
        emit(&out);
    } else {
        emit(&g.csv());
    }
    Ok(())
}

pub fn topsis(
    input: &Path,
    config: &str,
    psi: &str,
    r: Option<f64>,
    format: Format,
) -> Result<(), Failure> {
    let matrix = parse_matrix(&read_input(input)?)?;
    let cfg = parse_config(config, r)?;
    let psi: PsiFunction = psi.parse()?;
    let result = run_topsis(&matrix, &cfg, psi)?;

    if format == Format::Json {
        emit(&json(&result));
        return Ok(());
    }
    let mut alts = Grid::new(["alternative", "d_plus", "d_minus", "closeness", "rank"]);
    let mut rank = vec![0; result.alternatives.len()];
    for (pos, &i) in result.ranking.iter().enumerate() {
        rank[i] = pos + 1;
    }
    for (i, name) in result.alternatives.iter().enumerate() {
        alts.push(vec![
            name.clone(),
            sig6(result.d_plus[i]),
            sig6(result.d_minus[i]),
            sig6(result.closeness[i]),
            rank[i].to_string(),
        ]);
    }
    if format == Format::Csv {
        emit(&alts.csv());
        return Ok(());
    }
    let mut weights = Grid::new(["criterion", "kind", "mean_entropy", "raw", "weight"]);
    for (j, c) in matrix.criteria().iter().enumerate() {
        weights.push(vec![
            c.name.clone(),
            format!("{:?}", c.kind).to_lowercase(),
            sig6(result.weights.mean_entropy[j]),
            sig6(result.weights.raw[j]),
            sig6(result.weights.normalized[j]),
        ]);
    }
    let out = format!(
        "config {}  psi {}\n\n{}\n{}\nranking: {}\n",
        result.config,
        result.psi,
        weights.text(),
        alts.text(),
        result.ranking_string()
    );
    emit(&out);
    Ok(())
}

fn observation(o: &Observation) -> String {
    match o {
        Observation::Number(x) => sig6(*x),
        Observation::Text(s) => s.clone(),
    }
}

fn reproduce_text(report: &ReproduceReport, strict: bool, format: Format) -> String {
    let headers = ["table", "row", "column", "kind", "computed", "printed", "tolerance", "status", "grade"];
    let mut all = Grid::new(headers);
    let mut out = String::new();
    for t in &report.tables {
        let mut g = Grid::new(headers[1..].iter().copied());
        for c in &t.checks {
            let cells = vec![
                c.row.clone(),
                c.column.clone().unwrap_or_default(),
                serde_json::to_value(c.kind).unwrap().as_str().unwrap_or_default().to_string(),
                observation(&c.computed),
                observation(&c.printed),
                c.tolerance.map(sig6).unwrap_or_default(),
                format!("{:?}", c.status).to_uppercase(),
                match c.grade {
                    phfe_core::fixtures::Grade::Accept => "ACCEPT".to_string(),
                    phfe_core::fixtures::Grade::Report => "REPORT-ONLY".to_string(),
                },
            ];
            let mut full = vec![t.id.clone()];
            full.extend(cells.iter().cloned());
            all.push(full);
            g.push(cells);
        }
        out.push_str(&format!("== {}: {} ==\n", t.id, t.title));
        out.push_str(&g.text());
        for c in &t.constants {
            let values: Vec<String> = c.values.iter().map(|&v| sig6(v)).collect();
            out.push_str(&format!(
                "comparison {}: {}{}\n",
                c.label,
                values.join(", "),
                c.ranking.as_ref().map(|r| format!("  ({r})")).unwrap_or_default()
            ));
        }
        let mut seen: Vec<(&str, &str)> = Vec::new();
        for c in &t.checks {
            if let Some(note) = &c.note {
                if !seen.contains(&(c.row.as_str(), note.as_str())) {
                    seen.push((c.row.as_str(), note.as_str()));
                    out.push_str(&format!("note {}: {note}\n", c.row));
                }
            }
        }
        out.push('\n');
    }
    if format == Format::Csv {
        return all.csv();
    }
    let total: usize = report.tables.iter().map(|t| t.checks.len()).sum();
    let failures = report.failures(strict);
    out.push_str(&format!(
        "{} checks, {} failing{}\n",
        total,
        failures.len(),
        if strict { " (strict)" } else { "" }
    ));
    for (table, c) in failures {
        out.push_str(&format!(
            "FAIL {table} {} {} {}: computed {}, printed {}\n",
            c.row,
            c.column.as_deref().unwrap_or("-"),
            serde_json::to_value(c.kind).unwrap().as_str().unwrap_or_default(),
            observation(&c.computed),
            observation(&c.printed)
        ));
    }
    out
}

pub fn reproduce(strict: bool, format: Format) -> Result<(), Failure> {
    let report = reproduce::reproduce()?;
    if format == Format::Json {
        #[derive(Serialize)]
        struct Out<'a> {
            passed: bool,
            strict: bool,
            #[serde(flatten)]
            report: &'a ReproduceReport,
        }
        emit(&json(&Out {
            passed: report.passed(strict),
            strict,
            report: &report,
        }));
    } else {
        emit(&reproduce_text(&report, strict, format));
    }
    if report.passed(strict) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn axioms_text(report: &AxiomReport, format: Format) -> String {
    let mut g = Grid::new(["suite", "checks", "result", "description"]);
    for s in &report.suites {
        g.push(vec![
            s.name.to_string(),
            s.checks.to_string(),
            if s.passed() { "PASS" } else { "FAIL" }.to_string(),
            s.description.to_string(),
        ]);
    }
    if format == Format::Csv {
        return g.csv();
    }
    let mut out = format!("seed {}  samples {}\n\n{}", report.seed, report.samples, g.text());
    for s in &report.suites {
        if let Some(c) = &s.counterexample {
            out.push_str(&format!("\ncounterexample {}: {c}\n", s.name));
        } else if s.expects_witness && s.witness.is_none() {
            out.push_str(&format!("\nno witness found for {}\n", s.name));
        }
    }
    for s in report.suites.iter().filter(|s| s.witness.is_some()) {
        out.push_str(&format!("witness {}: {}\n", s.name, s.witness.as_ref().unwrap()));
    }
    out
}

pub fn axioms(seed: u64, samples: usize, mutate: Option<&str>, format: Format) -> Result<(), Failure> {
    if samples == 0 {
        return Err(Failure::Usage("--samples must be at least 1".into()));
    }
    let mutation = mutate.map(str::parse::<Mutation>).transpose()?;
    let report = run_suites(seed, samples, mutation);
    if format == Format::Json {
        emit(&json(&report));
    } else {
        emit(&axioms_text(&report, format));
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
