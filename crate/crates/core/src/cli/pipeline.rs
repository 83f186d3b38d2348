//! Ambient series → Lefschetz → counting matrix → D3, as one report.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::d3::{d3_operator, frobenius_solve, modularity_report, D3Error, ModularityReport};
use crate::exactmath::{PowerSeries, Rational};
use crate::grassmann::{ambient_iseries, GrassmannError, HSeriesPair};
use crate::lefschetz::{ci_geometry, lefschetz_shift, quantum_lefschetz, LefschetzError};
use crate::solver::{
    discriminant, forward_periods, predicted_iseries, recover_matrix, CountingMatrix, PeriodVector,
    SolverError,
};

use super::config::VarietyConfig;
use super::verify::discrepancy_notes;

/// Smallest order the matrix recovery can work with.
pub const MIN_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Config,
    Grassmann,
    Lefschetz,
    Solver,
    D3,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Config => "config",
            Stage::Grassmann => "grassmann",
            Stage::Lefschetz => "lefschetz",
            Stage::Solver => "solver",
            Stage::D3 => "d3",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StageError {
    #[error("InvalidInput: {0}")]
    Config(String),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    D3(#[from] D3Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{stage} stage: {error}")]
pub struct PipelineError {
    pub stage: Stage,
    pub error: StageError,
}

impl PipelineError {
    pub fn new(stage: Stage, error: StageError) -> Self {
        PipelineError { stage, error }
    }

    /// 2 for bad input, 3 for failures inside the computation.
    pub fn exit_code(&self) -> i32 {
        let bad_input = match &self.error {
            StageError::Config(_) => true,
            StageError::Grassmann(GrassmannError::InvalidSpec(_)) => true,
            StageError::Lefschetz(e) => match e {
                LefschetzError::NotFano { .. }
                | LefschetzError::InvalidSpec(_)
                | LefschetzError::SeriesTooShort { .. } => true,
                LefschetzError::Grassmann(g) => matches!(g, GrassmannError::InvalidSpec(_)),
            },
            StageError::D3(D3Error::InvalidLevel(_)) => true,
            StageError::Solver(SolverError::DegenerateLocus) => true,
            _ => false,
        };
        if bad_input {
            2
        } else {
            3
        }
    }
}

/// Tags a module error with the stage it came from.
pub(crate) fn at<T, E: Into<StageError>>(
    stage: Stage,
    r: Result<T, E>,
) -> Result<T, PipelineError> {
    r.map_err(|e| PipelineError::new(stage, e.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyGeometry {
    pub spec: String,
    pub ambient: String,
    pub degrees: Vec<u32>,
    pub dimension: u32,
    pub fano_index: u32,
    pub anticanonical_degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct D3Summary {
    pub lambda: Rational,
    pub operator: String,
    pub solution: PowerSeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub name: String,
    /// "verified" for catalog entries, "unverified" otherwise
    pub status: &'static str,
    pub order: usize,
    pub geometry: VarietyGeometry,
    pub warnings: Vec<String>,
    pub shift: Rational,
    pub ambient_series: HSeriesPair,
    pub variety_series: HSeriesPair,
    pub matrix: Option<CountingMatrix>,
    pub periods: Option<PeriodVector>,
    pub discriminant: Option<Rational>,
    pub d3: Option<D3Summary>,
    pub modularity: Option<ModularityReport>,
    pub notes: Vec<String>,
}

/// Ambient and variety series through q^{order-1}, plus geometry and shift.
pub fn series_stage(
    config: &VarietyConfig,
    order: usize,
) -> Result<
    (
        VarietyGeometry,
        Vec<String>,
        Rational,
        HSeriesPair,
        HSeriesPair,
    ),
    PipelineError,
> {
    if order < 1 {
        return Err(PipelineError::new(
            Stage::Config,
            StageError::Config("order must be positive".into()),
        ));
    }
    let spec = config.spec()?;
    let model = at(Stage::Lefschetz, ci_geometry(&spec))?;
    let ambient = at(
        Stage::Grassmann,
        ambient_iseries(spec.ambient(), (order - 1) as u32),
    )?;
    let shift = at(Stage::Lefschetz, lefschetz_shift(&spec, &ambient.c0))?;
    let variety = at(
        Stage::Lefschetz,
        quantum_lefschetz(&ambient, &spec, order - 1),
    )?;
    let geometry = VarietyGeometry {
        spec: spec.to_string(),
        ambient: spec.ambient().to_string(),
        degrees: spec.degrees().to_vec(),
        dimension: model.dimension,
        fano_index: model.fano_index,
        anticanonical_degree: model.anticanonical_degree,
    };
    Ok((geometry, model.warnings, shift, ambient, variety))
}

/// Counting matrix of an index-one threefold, checked against every
/// coefficient of its series.
pub fn matrix_stage(variety: &HSeriesPair, deg: u64) -> Result<CountingMatrix, PipelineError> {
    let matrix = at(Stage::Solver, recover_matrix(variety, deg))?;
    let predicted = predicted_iseries(&matrix, variety.order());
    for (component, got, want) in [
        ("H^0", &predicted.c0, &variety.c0),
        ("H^1", &predicted.c1, &variety.c1),
    ] {
        if let Some(d) = got.first_mismatch(want) {
            return Err(PipelineError::new(
                Stage::Solver,
                SolverError::ConsistencyCheckFailed {
                    component,
                    degree: d,
                    residual: &got.coeffs()[d] - &want.coeffs()[d],
                }
                .into(),
            ));
        }
    }
    Ok(matrix)
}

pub fn run_pipeline(config: &VarietyConfig, order: usize) -> Result<PipelineReport, PipelineError> {
    if order < MIN_ORDER {
        return Err(PipelineError::new(
            Stage::Config,
            StageError::Config(format!("order must be at least {MIN_ORDER}, got {order}")),
        ));
    }
    let (geometry, warnings, shift, ambient, variety) = series_stage(config, order)?;
    let mut notes = Vec::new();
    if config.ambient_spec()?.r() >= 2 {
        notes.push(
            "ambient H coefficients carry the sign of the Hori-Vafa formula; \
             published tables list their magnitudes"
                .to_string(),
        );
    }

    let mut report = PipelineReport {
        name: config.label(),
        status: if config.is_catalog() {
            "verified"
        } else {
            "unverified"
        },
        order,
        geometry,
        warnings,
        shift: shift.clone(),
        ambient_series: ambient,
        variety_series: variety,
        matrix: None,
        periods: None,
        discriminant: None,
        d3: None,
        modularity: None,
        notes,
    };

    if report.geometry.dimension != 3 || report.geometry.fano_index != 1 {
        report.notes.push(
            "counting matrices and D3 operators need an index-one threefold; \
             stopped after the Lefschetz stage"
                .into(),
        );
        return Ok(report);
    }

    let matrix = matrix_stage(&report.variety_series, report.geometry.anticanonical_degree)?;
    let periods = forward_periods(&matrix);
    report.discriminant = Some(discriminant(&periods));
    report.periods = Some(periods);

    let op = at(Stage::D3, d3_operator(&matrix, &shift))?;
    let solution = at(Stage::D3, frobenius_solve(&op, order))?;
    report.d3 = Some(D3Summary {
        lambda: shift.clone(),
        operator: op.to_string(),
        solution,
    });
    match modularity_report(&matrix, &shift, order) {
        Ok(m) => report.modularity = Some(m),
        Err(e) => report.notes.push(format!("modularity report skipped: {e}")),
    }

    if config.is_catalog() {
        report
            .notes
            .extend(discrepancy_notes(config, &report.variety_series));
    }
    report.matrix = Some(matrix);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::AmbientConfig;

    #[test]
    fn catalog_pipelines() {
        let r = run_pipeline(&VarietyConfig::v10(), 5).unwrap();
        assert_eq!(r.matrix, Some(CountingMatrix::v10()));
        assert_eq!(r.shift, Rational::from(6));
        assert_eq!(r.status, "verified");

        let r = run_pipeline(&VarietyConfig::v14(), 5).unwrap();
        assert_eq!(r.matrix, Some(CountingMatrix::v14()));
        assert_eq!(r.shift, Rational::from(4));
        assert!(r.notes.iter().any(|n| n.contains("derived 52, printed 2")));
    }

    #[test]
    fn index_zero_is_a_lefschetz_error() {
        let config = VarietyConfig {
            name: None,
            ambient: AmbientConfig::Grassmannian { r: 2, n: 5 },
            degrees: vec![1, 1, 1, 1, 1],
        };
        let err = run_pipeline(&config, 5).unwrap_err();
        assert_eq!(err.stage, Stage::Lefschetz);
        assert!(err.to_string().starts_with("lefschetz stage: NotFano"));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn small_order_rejected() {
        let err = run_pipeline(&VarietyConfig::v10(), 4).unwrap_err();
        assert_eq!(err.stage, Stage::Config);
    }

    #[test]
    fn higher_index_stops_early() {
        // G(2,6) cut by four hyperplanes has index 2
        let config = VarietyConfig {
            name: None,
            ambient: AmbientConfig::Grassmannian { r: 2, n: 6 },
            degrees: vec![1, 1, 1, 1],
        };
        let r = run_pipeline(&config, 5).unwrap();
        assert_eq!(r.geometry.fano_index, 2);
        assert_eq!(r.shift, Rational::zero());
        assert!(r.matrix.is_none());
        assert_eq!(r.status, "unverified");
    }

    #[test]
    fn quartic_threefold() {
        let config = VarietyConfig::from_json(
            r#"{"ambient": {"type": "projective", "n": 5}, "degrees": [4]}"#,
        )
        .unwrap();
        let r = run_pipeline(&config, 7).unwrap();
        assert_eq!(r.geometry.anticanonical_degree, 4);
        assert_eq!(r.shift, Rational::from(24));
        assert_eq!(
            r.matrix.unwrap(),
            CountingMatrix::from_integers(4, [3888, 80, 504576, 13600, 18323712])
        );
    }
}
