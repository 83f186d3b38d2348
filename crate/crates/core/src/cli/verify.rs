//! Recomputes the catalog varieties and compares with published values.

use serde::Serialize;

use crate::exactmath::{Entry, Rational};
use crate::grassmann::HSeriesPair;
use crate::solver::{predicted_iseries, CountingMatrix};

use super::config::VarietyConfig;
use super::pipeline::{run_pipeline, PipelineError, PipelineReport};

/// Where a golden value lives in a pipeline report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    MatrixEntry(Entry),
    Shift,
    Degree,
    /// unit coefficient of the ambient series at q^d
    AmbientC0(usize),
    /// H coefficient of the ambient series at q^d, printed as a magnitude
    AmbientC1(usize),
    VarietyC0(usize),
    VarietyC1(usize),
}

impl Quantity {
    pub fn label(self) -> String {
        match self {
            Quantity::MatrixEntry(e) => e.name().to_string(),
            Quantity::Shift => "shift".into(),
            Quantity::Degree => "degree".into(),
            Quantity::AmbientC0(d) => format!("ambient c0[{d}]"),
            Quantity::AmbientC1(d) => format!("ambient c1[{d}]"),
            Quantity::VarietyC0(d) => format!("c0[{d}]"),
            Quantity::VarietyC1(d) => format!("c1[{d}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenEntry {
    pub variety: &'static str,
    pub quantity: Quantity,
    pub printed: Rational,
}

impl GoldenEntry {
    /// "V14 c0[3]"
    pub fn name(&self) -> String {
        format!("{} {}", self.variety, self.quantity.label())
    }
}

fn entries(variety: &'static str, values: &[(Quantity, i64, i64)]) -> Vec<GoldenEntry> {
    values
        .iter()
        .map(|&(quantity, p, q)| GoldenEntry {
            variety,
            quantity,
            printed: Rational::frac(p, q),
        })
        .collect()
}

/// Published values for one catalog variety.
pub fn golden_table(variety: &str) -> Vec<GoldenEntry> {
    use Quantity::*;
    match variety.to_ascii_uppercase().as_str() {
        "V10" => entries(
            "V10",
            &[
                (MatrixEntry(Entry::A01), 156, 1),
                (MatrixEntry(Entry::A11), 10, 1),
                (MatrixEntry(Entry::A02), 3600, 1),
                (MatrixEntry(Entry::A12), 380, 1),
                (MatrixEntry(Entry::A03), 33120, 1),
                (Shift, 6, 1),
                (Degree, 10, 1),
                (AmbientC0(1), 3, 1),
                (AmbientC0(2), 19, 32),
                (AmbientC0(3), 49, 2592),
                (AmbientC0(4), 139, 884736),
                (AmbientC1(1), 10, 1),
                (AmbientC1(2), 105, 32),
                (AmbientC1(3), 3115, 23328),
                (AmbientC1(4), 6875, 5308416),
                (VarietyC0(2), 39, 1),
                (VarietyC0(3), 220, 1),
                (VarietyC0(4), 6291, 4),
                (VarietyC1(1), 10, 1),
                (VarietyC1(2), 67, 2),
                (VarietyC1(3), 3200, 9),
                (VarietyC1(4), 89387, 48),
            ],
        ),
        "V14" => entries(
            "V14",
            &[
                (MatrixEntry(Entry::A01), 64, 1),
                (MatrixEntry(Entry::A11), 5, 1),
                (MatrixEntry(Entry::A02), 924, 1),
                (MatrixEntry(Entry::A12), 140, 1),
                (MatrixEntry(Entry::A03), 5936, 1),
                (Shift, 4, 1),
                (Degree, 14, 1),
                (AmbientC0(1), 4, 1),
                (AmbientC0(2), 3, 4),
                (AmbientC0(3), 95, 5832),
                (AmbientC0(4), 865, 11943936),
                (AmbientC1(1), 15, 1),
                (AmbientC1(2), 609, 128),
                (AmbientC1(3), 6197, 46656),
                (AmbientC1(4), 528737, 764411904),
                (VarietyC0(2), 16, 1),
                (VarietyC0(3), 2, 1),
                (VarietyC0(4), 230, 1),
                (VarietyC1(1), 5, 1),
                (VarietyC1(2), 31, 4),
                (VarietyC1(3), 1031, 18),
                (VarietyC1(4), 14863, 96),
            ],
        ),
        _ => Vec::new(),
    }
}

/// Published counting matrix of a catalog variety, read off its table.
fn printed_matrix(table: &[GoldenEntry]) -> Option<CountingMatrix> {
    let find = |q: Quantity| {
        table
            .iter()
            .find(|g| g.quantity == q)
            .map(|g| g.printed.clone())
    };
    let deg = find(Quantity::Degree)?;
    let entries = Entry::ALL.map(|e| find(Quantity::MatrixEntry(e)));
    if entries.iter().any(Option::is_none) {
        return None;
    }
    let deg = u64::try_from(deg.numer()).ok()?;
    Some(CountingMatrix::new(deg, entries.map(Option::unwrap)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    /// the printed value is the magnitude of the signed derived value
    SignConvention,
    /// differs from the printed value but agrees with the printed matrix
    PrintedTypo,
    Mismatch,
}

impl Status {
    pub fn is_explained(self) -> bool {
        self != Status::Mismatch
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::SignConvention => "sign convention",
            Status::PrintedTypo => "printed typo",
            Status::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub name: String,
    pub printed: Rational,
    pub derived: Option<Rational>,
    pub status: Status,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub mismatches: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

fn derived_value(report: &PipelineReport, q: Quantity) -> Option<Rational> {
    let at = |s: &crate::exactmath::PowerSeries, d: usize| s.coeff(d).cloned();
    match q {
        Quantity::MatrixEntry(e) => report.matrix.as_ref().map(|m| m.get(e).clone()),
        Quantity::Shift => Some(report.shift.clone()),
        Quantity::Degree => Some(Rational::from(report.geometry.anticanonical_degree)),
        Quantity::AmbientC0(d) => at(&report.ambient_series.c0, d),
        Quantity::AmbientC1(d) => at(&report.ambient_series.c1, d),
        Quantity::VarietyC0(d) => at(&report.variety_series.c0, d),
        Quantity::VarietyC1(d) => at(&report.variety_series.c1, d),
    }
}

/// What the printed matrix predicts for a variety-series coefficient.
fn matrix_prediction(
    printed: Option<&CountingMatrix>,
    q: Quantity,
    order: usize,
) -> Option<Rational> {
    let pair: HSeriesPair = predicted_iseries(printed?, order);
    match q {
        Quantity::VarietyC0(d) => pair.c0.coeff(d).cloned(),
        Quantity::VarietyC1(d) => pair.c1.coeff(d).cloned(),
        _ => None,
    }
}

fn classify(
    entry: &GoldenEntry,
    derived: Option<&Rational>,
    printed_matrix: Option<&CountingMatrix>,
    order: usize,
) -> (Status, Option<String>) {
    let Some(derived) = derived else {
        return (Status::Mismatch, Some("not computed".into()));
    };
    if derived == &entry.printed {
        return (Status::Match, None);
    }
    if matches!(entry.quantity, Quantity::AmbientC1(_)) && derived == &-entry.printed.clone() {
        return (
            Status::SignConvention,
            Some(format!("signed value {derived}, printed as its magnitude")),
        );
    }
    if matrix_prediction(printed_matrix, entry.quantity, order).as_ref() == Some(derived) {
        return (
            Status::PrintedTypo,
            Some(format!(
                "derived {derived}, printed {}, matrix-consistent",
                entry.printed
            )),
        );
    }
    (
        Status::Mismatch,
        Some(format!("derived {derived}, printed {}", entry.printed)),
    )
}

/// Compares a pipeline report with a golden table.
pub fn compare(report: &PipelineReport, table: &[GoldenEntry]) -> Vec<VerifyRow> {
    let printed = printed_matrix(table);
    table
        .iter()
        .map(|g| {
            let derived = derived_value(report, g.quantity);
            let (status, note) = classify(g, derived.as_ref(), printed.as_ref(), report.order);
            VerifyRow {
                name: g.name(),
                printed: g.printed.clone(),
                derived,
                status,
                note,
            }
        })
        .collect()
}

/// Explained differences between a catalog variety's series and the
/// published one, as report notes.
pub fn discrepancy_notes(config: &VarietyConfig, series: &HSeriesPair) -> Vec<String> {
    let table = golden_table(&config.label());
    let printed = printed_matrix(&table);
    table
        .iter()
        .filter_map(|g| {
            let derived = match g.quantity {
                Quantity::VarietyC0(d) => series.c0.coeff(d)?,
                Quantity::VarietyC1(d) => series.c1.coeff(d)?,
                _ => return None,
            };
            match classify(g, Some(derived), printed.as_ref(), series.order()) {
                (Status::PrintedTypo, Some(note)) => Some(format!("{}: {note}", g.name())),
                _ => None,
            }
        })
        .collect()
}

/// Which varieties `verify` covers for an argument of "V10", "V14" or "all".
pub fn verify_targets(arg: &str) -> Option<Vec<&'static str>> {
    match arg.to_ascii_uppercase().as_str() {
        "ALL" => Some(VarietyConfig::catalog_names().to_vec()),
        "V10" => Some(vec!["V10"]),
        "V14" => Some(vec!["V14"]),
        _ => None,
    }
}

/// Recomputes each target from scratch and compares with its golden table.
/// `corrupt` names a golden entry to bump by one, to exercise the failure
/// path.
pub fn verify(
    targets: &[&str],
    order: usize,
    corrupt: Option<&str>,
) -> Result<VerifyReport, PipelineError> {
    let mut rows = Vec::new();
    for &name in targets {
        let config = VarietyConfig::catalog(name).expect("catalog name");
        let report = run_pipeline(&config, order.max(5))?;
        let mut table = golden_table(name);
        for g in &mut table {
            if corrupt == Some(g.name().as_str()) {
                g.printed = &g.printed + &Rational::one();
            }
        }
        rows.extend(compare(&report, &table));
    }
    let mismatches = rows.iter().filter(|r| !r.status.is_explained()).count();
    Ok(VerifyReport { rows, mismatches })
}
