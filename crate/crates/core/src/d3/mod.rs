//! D3 operators of a counting matrix.
//!
//! Operators live in the ring generated by t and D = t d/dt with
//! D t = t D + t.  For a counting matrix M and a parameter λ the pencil
//! DE - M^λ has a right determinant divisible on the left by D; the
//! quotient L^λ is a third-order operator whose normalized power-series
//! solution is compared with weight-two Eisenstein series.

mod modular;
mod operator;
mod pencil;

use thiserror::Error;

pub use modular::{
    borel_regularize, eisenstein_e2, eisenstein_weight2, modularity_report, Candidate,
    LambdaSolution, ModularityReport, ReportRow,
};
pub use operator::DifferentialOperator;
pub use pencil::{
    build_pencil, d3_operator, frobenius_solve, left_divide_by_D, right_determinant, OperatorMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum D3Error {
    #[error("NotSquare: operator matrices must be square and nonempty")]
    NotSquare,
    #[error("NotLeftDivisible: remainder {remainder}")]
    NotLeftDivisible { remainder: DifferentialOperator },
    #[error("ObstructedRecursion: indicial polynomial vanishes at {m}")]
    ObstructedRecursion { m: usize },
    #[error("InvalidLevel: level {0} is below 2")]
    InvalidLevel(u64),
}
