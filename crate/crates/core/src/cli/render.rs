//! JSON and plain-text output.  Rationals are always written exactly as
//! "p/q", integers without a denominator.

use serde::Serialize;

use crate::d3::ModularityReport;
use crate::exactmath::{PowerSeries, Rational};
use crate::grassmann::{GeometryInfo, HSeriesPair};
use crate::solver::{CountingMatrix, PeriodVector};

use super::pipeline::{PipelineReport, VarietyGeometry};
use super::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

/// Aligned "key  value" lines; values spanning several lines are indented
/// under their key.
#[derive(Default)]
struct Block {
    lines: Vec<(String, String)>,
}

impl Block {
    fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    fn finish(&self) -> String {
        let width = self
            .lines
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.lines {
            let mut rows = v.lines();
            let first = rows.next().unwrap_or("");
            let pad = width - k.chars().count();
            out.push_str(&format!("{k}{}  {first}\n", " ".repeat(pad)));
            for row in rows {
                out.push_str(&format!("{}  {row}\n", " ".repeat(width)));
            }
        }
        out
    }
}

fn list(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

fn pair_lines(b: &mut Block, prefix: &str, pair: &HSeriesPair) {
    b.kv(&format!("{prefix}c0"), list(pair.c0.coeffs()));
    b.kv(&format!("{prefix}c1"), list(pair.c1.coeffs()));
}

fn geometry_lines(b: &mut Block, g: &VarietyGeometry) {
    b.kv("spec", &g.spec)
        .kv("dimension", g.dimension)
        .kv("fano index", g.fano_index)
        .kv("degree", g.anticanonical_degree);
}

fn series(s: &PowerSeries) -> String {
    list(s.coeffs())
}

#[derive(Debug, Clone, Serialize)]
pub struct IseriesOutput {
    pub ambient: String,
    pub geometry: GeometryInfo,
    pub series: HSeriesPair,
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzOutput {
    pub variety: String,
    pub geometry: VarietyGeometry,
    pub shift: Rational,
    pub series: HSeriesPair,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixOutput {
    pub variety: String,
    pub matrix: CountingMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeriodsOutput {
    pub variety: String,
    pub matrix: CountingMatrix,
    pub periods: PeriodVector,
    pub discriminant: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertOutput {
    pub periods: PeriodVector,
    pub discriminant: Rational,
    pub matrix: CountingMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct D3Output {
    pub variety: String,
    pub lambda: Rational,
    pub operator: String,
    pub indicial: String,
    pub solution: PowerSeries,
    /// L applied to the solution vanishes through the computed order
    pub annihilated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModularityOutput {
    pub variety: String,
    pub report: ModularityReport,
}

/// Anything a subcommand prints.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Output {
    Iseries(IseriesOutput),
    Lefschetz(LefschetzOutput),
    Matrix(MatrixOutput),
    Periods(PeriodsOutput),
    Invert(InvertOutput),
    D3(D3Output),
    Modularity(ModularityOutput),
    Verify(VerifyReport),
    Report(Box<PipelineReport>),
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
                s.push('\n');
                s
            }
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut b = Block::default();
        match self {
            Output::Iseries(o) => {
                b.kv("ambient", &o.ambient)
                    .kv("dimension", o.geometry.dimension)
                    .kv("fano index", o.geometry.fano_index)
                    .kv("degree", o.geometry.plucker_degree);
                pair_lines(&mut b, "", &o.series);
            }
            Output::Lefschetz(o) => {
                b.kv("variety", &o.variety);
                geometry_lines(&mut b, &o.geometry);
                b.kv("shift", &o.shift);
                pair_lines(&mut b, "", &o.series);
                for w in &o.warnings {
                    b.kv("warning", w);
                }
            }
            Output::Matrix(o) => {
                b.kv("variety", &o.variety)
                    .kv("degree", o.matrix.deg())
                    .kv("matrix", &o.matrix);
            }
            Output::Periods(o) => {
                b.kv("variety", &o.variety)
                    .kv("matrix", &o.matrix)
                    .kv("d2..d6", list(&o.periods.0))
                    .kv("discriminant", &o.discriminant);
            }
            Output::Invert(o) => {
                b.kv("d2..d6", list(&o.periods.0))
                    .kv("discriminant", &o.discriminant)
                    .kv("degree", o.matrix.deg())
                    .kv("matrix", &o.matrix);
            }
            Output::D3(o) => {
                b.kv("variety", &o.variety)
                    .kv("lambda", &o.lambda)
                    .kv("operator", &o.operator)
                    .kv("indicial", &o.indicial)
                    .kv("solution", series(&o.solution))
                    .kv("annihilated", o.annihilated);
            }
            Output::Modularity(o) => return modularity_text(&o.variety, &o.report),
            Output::Verify(r) => return verify_text(r),
            Output::Report(r) => return report_text(r),
        }
        b.finish()
    }
}

fn modularity_text(variety: &str, r: &ModularityReport) -> String {
    let mut b = Block::default();
    b.kv("variety", variety)
        .kv("level", r.level)
        .kv("alpha", &r.alpha);
    for (cand, s) in &r.candidates {
        b.kv(cand.label(), series(s));
    }
    for s in &r.solutions {
        let key = format!("lambda={}", s.lambda);
        match (&s.solution, &s.error) {
            (Some(phi), _) => b.kv(&key, series(phi)),
            (None, Some(e)) => b.kv(&key, e),
            (None, None) => b.kv(&key, "-"),
        };
    }
    let mut out = b.finish();
    out.push('\n');
    let width = r
        .rows
        .iter()
        .map(|row| row.candidate.label().len())
        .max()
        .unwrap_or(0);
    out.push_str(&format!(
        "{:<8}  {:<width$}  first mismatch\n",
        "lambda", "candidate"
    ));
    for row in &r.rows {
        let verdict = match (&row.error, row.first_mismatch) {
            (Some(e), _) => e.clone(),
            (None, Some(m)) => m.to_string(),
            (None, None) => format!("none below {}", r.order),
        };
        out.push_str(&format!(
            "{:<8}  {:<width$}  {verdict}\n",
            row.lambda.to_string(),
            row.candidate.label()
        ));
    }
    out
}

fn verify_text(r: &VerifyReport) -> String {
    let name_w = r.rows.iter().map(|x| x.name.len()).max().unwrap_or(0);
    let printed_w = r
        .rows
        .iter()
        .map(|x| x.printed.to_string().len())
        .max()
        .unwrap_or(0);
    let derived_w = r
        .rows
        .iter()
        .map(|x| x.derived.as_ref().map_or(1, |d| d.to_string().len()))
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for row in &r.rows {
        let derived = row
            .derived
            .as_ref()
            .map_or("-".to_string(), Rational::to_string);
        let mut line = format!(
            "{:<name_w$}  {:>printed_w$}  {:>derived_w$}  {}",
            row.name,
            row.printed.to_string(),
            derived,
            row.status.label()
        );
        if let Some(n) = &row.note {
            line.push_str(&format!("  ({n})"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&format!(
        "{} values, {} unexplained mismatches\n",
        r.rows.len(),
        r.mismatches
    ));
    out
}

fn report_text(r: &PipelineReport) -> String {
    let mut b = Block::default();
    b.kv("variety", &r.name).kv("status", r.status);
    geometry_lines(&mut b, &r.geometry);
    b.kv("shift", &r.shift);
    pair_lines(&mut b, "ambient ", &r.ambient_series);
    pair_lines(&mut b, "", &r.variety_series);
    if let Some(m) = &r.matrix {
        b.kv("matrix", m);
    }
    if let Some(p) = &r.periods {
        b.kv("d2..d6", list(&p.0));
    }
    if let Some(d) = &r.discriminant {
        b.kv("discriminant", d);
    }
    if let Some(d3) = &r.d3 {
        b.kv("lambda", &d3.lambda)
            .kv("operator", &d3.operator)
            .kv("solution", series(&d3.solution));
    }
    for w in &r.warnings {
        b.kv("warning", w);
    }
    for n in &r.notes {
        b.kv("note", n);
    }
    let mut out = b.finish();
    if let Some(m) = &r.modularity {
        out.push('\n');
        out.push_str(&modularity_text(&r.name, m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_rational_encoding() {
        let v = serde_json::to_value(Rational::frac(67, 2)).unwrap();
        assert_eq!(v, serde_json::json!("67/2"));
        let v = serde_json::to_value(Rational::from(156)).unwrap();
        assert_eq!(v, serde_json::json!("156"));
    }

    #[test]
    fn matrix_is_nested_strings() {
        let v = serde_json::to_value(CountingMatrix::v10()).unwrap();
        assert_eq!(
            v["matrix"][0],
            serde_json::json!(["0", "156", "3600", "33120"])
        );
        assert_eq!(v["matrix"][3], serde_json::json!(["0", "0", "1", "0"]));
        assert_eq!(v["a12"], serde_json::json!("380"));
    }

    #[test]
    fn text_block_alignment() {
        let mut b = Block::default();
        b.kv("a", 1).kv("long key", "x\ny");
        assert_eq!(b.finish(), "a         1\nlong key  x\n          y\n");
    }
}
