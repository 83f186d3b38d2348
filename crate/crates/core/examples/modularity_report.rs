//! Compares D3 solutions for λ = 0, ±α with the weight-two Eisenstein
//! series φ_N and its exponential twists.
//!
//! ```bash
//! cargo run --example modularity_report
//! ```

use fano_gw::d3::modularity_report;
use fano_gw::exactmath::Rational;
use fano_gw::solver::CountingMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, m, alpha) in [
        ("V10", CountingMatrix::v10(), 6),
        ("V14", CountingMatrix::v14(), 4),
    ] {
        let report = modularity_report(&m, &Rational::from(alpha), 10)?;
        println!(
            "{name}: N = {}, φ_N = {:?}",
            report.level,
            report.eisenstein.coeffs()
        );
        for row in &report.rows {
            let verdict = match (&row.error, row.first_mismatch) {
                (Some(e), _) => e.clone(),
                (None, Some(i)) => format!("first mismatch at q^{i}"),
                (None, None) => "agrees through q^9".to_string(),
            };
            println!(
                "  λ = {:>2}  {:<30} {verdict}",
                row.lambda.to_string(),
                row.candidate.label()
            );
        }
    }
    Ok(())
}
