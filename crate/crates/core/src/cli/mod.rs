//! Command-line front end, variety configs, the end-to-end pipeline and
//! verification against published values.
//!
//! [`run`] does all the work and returns what the binary should print, so
//! the binary itself is a thin wrapper.

pub mod config;
pub mod pipeline;
pub mod render;
pub mod verify;

use std::ffi::OsString;

use clap::{Parser, Subcommand};

use crate::d3::{d3_operator, frobenius_solve};
use crate::exactmath::Rational;
use crate::grassmann::{ambient_iseries, grassmannian_geometry};
use crate::solver::{discriminant, forward_periods, invert_periods, PeriodVector};

pub use config::{AmbientConfig, VarietyConfig};
pub use pipeline::{run_pipeline, PipelineError, PipelineReport, Stage, StageError};
pub use render::{Format, Output};
pub use verify::{verify, VerifyReport};

use pipeline::{at, matrix_stage, series_stage};
use render::{
    D3Output, InvertOutput, IseriesOutput, LefschetzOutput, MatrixOutput, ModularityOutput,
    PeriodsOutput,
};

#[derive(Debug, Parser)]
#[command(
    name = "fano-gw",
    version,
    about = "Counting matrices and D3 operators of Fano threefolds, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Number of series coefficients, q^0 through q^(N-1)
    #[arg(long, global = true, default_value_t = 7, value_name = "N")]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Catalog name (V10, V14) or path to a JSON config
    #[arg(long, global = true)]
    pub variety: Option<String>,
    /// Pencil parameter for `d3`, as P/Q; defaults to the shift
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "P/Q")]
    pub lambda: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I-series of the ambient Grassmannian modulo H^2
    Iseries,
    /// I-series of the variety modulo H^2, with the shift
    Lefschetz,
    /// Counting matrix recovered from the I-series
    Matrix,
    /// Constant-term periods d2..d6 of the counting matrix
    Periods,
    /// Counting matrix from the periods d2..d6
    Invert {
        /// Comma-separated d2,d3,d4,d5,d6; read off the variety if omitted
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        periods: Option<Vec<Rational>>,
        /// Anticanonical degree for explicit periods; defaults to the variety's
        #[arg(long)]
        deg: Option<u64>,
    },
    /// D3 operator and its normalized power-series solution
    D3,
    /// Comparison of D3 solutions with weight-two Eisenstein series
    Modularity,
    /// Recompute the catalog and compare with published values
    Verify {
        #[arg(long, hide = true)]
        corrupt_golden: Option<String>,
    },
    /// Every stage in one report
    Report,
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn failed(stderr: String, code: i32) -> Self {
        Outcome {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

fn invalid(msg: impl Into<String>) -> PipelineError {
    PipelineError::new(Stage::Config, StageError::Config(msg.into()))
}

fn variety_config(cli: &Cli) -> Result<VarietyConfig, PipelineError> {
    VarietyConfig::resolve(cli.variety.as_deref().unwrap_or("V10"))
}

/// Parses arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::failed(text, 2)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok((output, code)) => Outcome {
            stdout: output.render(format),
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome::failed(format!("error: {e}\n"), e.exit_code()),
    }
}

fn execute(cli: &Cli) -> Result<(Output, i32), PipelineError> {
    if cli.order == 0 {
        return Err(invalid("order must be positive"));
    }
    let out = match &cli.command {
        Command::Iseries => {
            let config = variety_config(cli)?;
            let spec = config.ambient_spec()?;
            let series = at(
                Stage::Grassmann,
                ambient_iseries(spec, (cli.order - 1) as u32),
            )?;
            Output::Iseries(IseriesOutput {
                ambient: spec.to_string(),
                geometry: grassmannian_geometry(spec),
                series,
            })
        }
        Command::Lefschetz => {
            let config = variety_config(cli)?;
            let (geometry, warnings, shift, _, series) = series_stage(&config, cli.order)?;
            Output::Lefschetz(LefschetzOutput {
                variety: config.label(),
                geometry,
                shift,
                series,
                warnings,
            })
        }
        Command::Matrix => {
            let (config, matrix) = counting_matrix(cli)?;
            Output::Matrix(MatrixOutput {
                variety: config.label(),
                matrix,
            })
        }
        Command::Periods => {
            let (config, matrix) = counting_matrix(cli)?;
            let periods = forward_periods(&matrix);
            Output::Periods(PeriodsOutput {
                variety: config.label(),
                discriminant: discriminant(&periods),
                periods,
                matrix,
            })
        }
        Command::Invert { periods, deg } => {
            let (periods, deg) = match periods {
                Some(v) => {
                    let values: [Rational; 5] = v
                        .clone()
                        .try_into()
                        .map_err(|_| invalid("--periods needs exactly five values d2..d6"))?;
                    let deg = match deg {
                        Some(d) => *d,
                        None => {
                            series_stage(&variety_config(cli)?, 1)?
                                .0
                                .anticanonical_degree
                        }
                    };
                    (PeriodVector(values), deg)
                }
                None => {
                    let config = variety_config(cli)?;
                    let (geometry, _, _, _, series) = series_stage(&config, cli.order.max(7))?;
                    let periods = at(Stage::Solver, PeriodVector::from_series(&series.c0))?;
                    (periods, deg.unwrap_or(geometry.anticanonical_degree))
                }
            };
            let matrix = at(Stage::Solver, invert_periods(&periods, deg))?;
            Output::Invert(InvertOutput {
                discriminant: discriminant(&periods),
                periods,
                matrix,
            })
        }
        Command::D3 => {
            let (config, matrix) = counting_matrix(cli)?;
            let lambda = match &cli.lambda {
                Some(l) => l.clone(),
                None => series_stage(&config, 2)?.2,
            };
            let op = at(Stage::D3, d3_operator(&matrix, &lambda))?;
            let solution = at(Stage::D3, frobenius_solve(&op, cli.order))?;
            Output::D3(D3Output {
                variety: config.label(),
                indicial: op.indicial_polynomial().format_in("m"),
                annihilated: op.apply(&solution).is_zero(),
                operator: op.to_string(),
                lambda,
                solution,
            })
        }
        Command::Modularity => {
            let (config, matrix) = counting_matrix(cli)?;
            let shift = series_stage(&config, 2)?.2;
            let report = at(
                Stage::D3,
                crate::d3::modularity_report(&matrix, &shift, cli.order),
            )?;
            Output::Modularity(ModularityOutput {
                variety: config.label(),
                report,
            })
        }
        Command::Verify { corrupt_golden } => {
            let arg = cli.variety.as_deref().unwrap_or("all");
            let targets = verify::verify_targets(arg)
                .ok_or_else(|| invalid(format!("verify takes V10, V14 or all, not {arg:?}")))?;
            let report = verify(&targets, cli.order, corrupt_golden.as_deref())?;
            let code = report.exit_code();
            return Ok((Output::Verify(report), code));
        }
        Command::Report => {
            let config = variety_config(cli)?;
            Output::Report(Box::new(run_pipeline(&config, cli.order)?))
        }
    };
    Ok((out, 0))
}

fn counting_matrix(
    cli: &Cli,
) -> Result<(VarietyConfig, crate::solver::CountingMatrix), PipelineError> {
    let config = variety_config(cli)?;
    let order = cli.order.max(pipeline::MIN_ORDER);
    let (geometry, _, _, _, series) = series_stage(&config, order)?;
    if geometry.dimension != 3 || geometry.fano_index != 1 {
        return Err(invalid(format!(
            "{} has dimension {} and index {}; counting matrices need an index-one threefold",
            geometry.spec, geometry.dimension, geometry.fano_index
        )));
    }
    let matrix = matrix_stage(&series, geometry.anticanonical_degree)?;
    Ok((config, matrix))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("fano-gw").chain(args.iter().copied()))
    }

    #[test]
    fn matrix_text() {
        let out = cli(&["matrix", "--variety", "V14"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(
            out.stdout.contains("[   0   64  924 5936]"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn invert_explicit_periods() {
        let out = cli(&[
            "invert",
            "--periods",
            "16,52,230,764,41291/18",
            "--deg",
            "14",
            "--format",
            "json",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["matrix"]["a03"], "5936");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["matrix", "--variety", "nowhere"]).code, 2);
        assert_eq!(cli(&["bogus"]).code, 2);
        assert_eq!(
            cli(&["invert", "--periods", "0,0,0,0,0", "--deg", "10"]).code,
            2
        );
        assert_eq!(
            cli(&["verify", "--variety", "V10", "--corrupt-golden", "V10 a01"]).code,
            1
        );
        assert_eq!(cli(&["--help"]).code, 0);
    }

    #[test]
    fn lambda_flag() {
        let out = cli(&["d3", "--lambda", "-6", "--order", "4"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("(1, -6, 114, -300)"), "{}", out.stdout);
    }
}
