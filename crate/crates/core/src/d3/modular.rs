//! Weight-two Eisenstein series and the comparison table for D3 solutions.

use serde::Serialize;

use crate::exactmath::{exp_linear, rational::factorial, PowerSeries, Rational};
use crate::solver::{predicted_iseries, CountingMatrix};

use super::pencil::{d3_operator, frobenius_solve};
use super::D3Error;

fn sigma1(m: u64) -> u64 {
    (1..=m).filter(|k| m.is_multiple_of(*k)).sum()
}

/// E₂(q) = 1 - 24 Σ σ₁(m) q^m.
pub fn eisenstein_e2(order: usize) -> PowerSeries {
    PowerSeries::from_coeffs(
        (0..order as u64)
            .map(|m| {
                if m == 0 {
                    Rational::one()
                } else {
                    Rational::from(-24 * sigma1(m) as i64)
                }
            })
            .collect(),
    )
}

/// φ_N(q) = (N E₂(q^N) - E₂(q)) / (N - 1), so φ_N(0) = 1.
pub fn eisenstein_weight2(level: u64, order: usize) -> Result<PowerSeries, D3Error> {
    if level < 2 {
        return Err(D3Error::InvalidLevel(level));
    }
    let e2 = eisenstein_e2(order);
    let n = Rational::from(level);
    let coeffs = (0..order)
        .map(|m| {
            let dilated = if (m as u64).is_multiple_of(level) {
                e2.coeffs()[m / level as usize].clone()
            } else {
                Rational::zero()
            };
            (&n * dilated - &e2.coeffs()[m]) / (&n - Rational::one())
        })
        .collect();
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// Σ m! a_m t^m.
pub fn borel_regularize(s: &PowerSeries) -> PowerSeries {
    PowerSeries::from_coeffs(
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| c * factorial(m as u64))
            .collect(),
    )
}

/// Series a D3 solution is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Candidate {
    /// φ_N with q = t
    Eisenstein,
    /// Σ m! c0[m] t^m for the constant term c0 of I^Y
    RegularizedPeriod,
    /// the same after multiplying c0 by e^{αq}
    TwistedPlus,
    /// the same after multiplying c0 by e^{-αq}
    TwistedMinus,
}

impl Candidate {
    pub const ALL: [Candidate; 4] = [
        Candidate::Eisenstein,
        Candidate::RegularizedPeriod,
        Candidate::TwistedPlus,
        Candidate::TwistedMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Candidate::Eisenstein => "phi_N(t)",
            Candidate::RegularizedPeriod => "sum m! c0[m] t^m",
            Candidate::TwistedPlus => "sum m! (e^{+aq} c0)[m] t^m",
            Candidate::TwistedMinus => "sum m! (e^{-aq} c0)[m] t^m",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSolution {
    pub lambda: Rational,
    pub operator: Option<String>,
    pub solution: Option<PowerSeries>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub lambda: Rational,
    pub candidate: Candidate,
    /// First index where the solution and the candidate differ; `None` if
    /// they agree through the whole order.
    pub first_mismatch: Option<usize>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularityReport {
    pub level: u64,
    pub order: usize,
    pub alpha: Rational,
    pub eisenstein: PowerSeries,
    pub candidates: Vec<(Candidate, PowerSeries)>,
    pub solutions: Vec<LambdaSolution>,
    pub rows: Vec<ReportRow>,
}

/// Solves L^λ for λ in {0, α, -α} and records where each solution first
/// departs from each candidate.  Descriptive only.
pub fn modularity_report(
    matrix: &CountingMatrix,
    alpha: &Rational,
    order: usize,
) -> Result<ModularityReport, D3Error> {
    let level = matrix.deg() / 2;
    let eisenstein = eisenstein_weight2(level, order)?;
    let c0 = predicted_iseries(matrix, order).c0;
    let twisted = |sign: i64| {
        let a = alpha * Rational::from(sign);
        borel_regularize(&c0.mul(&exp_linear(&a, order)))
    };
    let candidates = vec![
        (Candidate::Eisenstein, eisenstein.clone()),
        (Candidate::RegularizedPeriod, borel_regularize(&c0)),
        (Candidate::TwistedPlus, twisted(1)),
        (Candidate::TwistedMinus, twisted(-1)),
    ];

    let mut solutions = Vec::new();
    let mut rows = Vec::new();
    for lambda in [Rational::zero(), alpha.clone(), -alpha] {
        let solved = d3_operator(matrix, &lambda)
            .and_then(|op| frobenius_solve(&op, order).map(|phi| (op, phi)));
        match solved {
            Ok((op, phi)) => {
                for (cand, series) in &candidates {
                    rows.push(ReportRow {
                        lambda: lambda.clone(),
                        candidate: *cand,
                        first_mismatch: phi.first_mismatch(series),
                        error: None,
                    });
                }
                solutions.push(LambdaSolution {
                    lambda,
                    operator: Some(op.to_string()),
                    solution: Some(phi),
                    error: None,
                });
            }
            Err(e) => {
                for (cand, _) in &candidates {
                    rows.push(ReportRow {
                        lambda: lambda.clone(),
                        candidate: *cand,
                        first_mismatch: None,
                        error: Some(e.to_string()),
                    });
                }
                solutions.push(LambdaSolution {
                    lambda,
                    operator: None,
                    solution: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    Ok(ModularityReport {
        level,
        order,
        alpha: alpha.clone(),
        eisenstein,
        candidates,
        solutions,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> PowerSeries {
        PowerSeries::from_coeffs(v.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn eisenstein_expansions() {
        assert_eq!(eisenstein_e2(3).coeffs()[2], Rational::from(-72));
        assert_eq!(
            eisenstein_weight2(5, 8).unwrap(),
            ints(&[1, 6, 18, 24, 42, 6, 72, 48])
        );
        assert_eq!(
            eisenstein_weight2(7, 8).unwrap(),
            ints(&[1, 4, 12, 16, 28, 24, 48, 4])
        );
        assert_eq!(eisenstein_weight2(1, 8), Err(D3Error::InvalidLevel(1)));
    }

    #[test]
    fn report_shape() {
        let r = modularity_report(&CountingMatrix::v10(), &Rational::from(6), 8).unwrap();
        assert_eq!(r.level, 5);
        assert_eq!(r.rows.len(), 12);
        let r = modularity_report(&CountingMatrix::v14(), &Rational::from(4), 8).unwrap();
        assert_eq!(r.level, 7);
        assert_eq!(r.rows.len(), 12);
        assert!(r.solutions.iter().all(|s| s.error.is_none()));
    }

    #[test]
    fn untwisted_solution_is_the_regularized_period() {
        let r = modularity_report(&CountingMatrix::v10(), &Rational::from(6), 8).unwrap();
        let row = r
            .rows
            .iter()
            .find(|row| row.lambda.is_zero() && row.candidate == Candidate::RegularizedPeriod)
            .unwrap();
        assert_eq!(row.first_mismatch, None);
    }

    #[test]
    fn report_is_deterministic() {
        let a = modularity_report(&CountingMatrix::v14(), &Rational::from(4), 8).unwrap();
        let b = modularity_report(&CountingMatrix::v14(), &Rational::from(4), 8).unwrap();
        assert_eq!(a, b);
    }
}
