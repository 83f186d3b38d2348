//! Recovers the counting matrices of V10 and V14 from their I-series and
//! checks every remaining coefficient against the symbolic series.
//!
//! ```bash
//! cargo run --example counting_matrix
//! ```

use fano_gw::lefschetz::{model_with_series, CompleteIntersectionSpec};
use fano_gw::solver::{predicted_iseries, recover_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, spec) in [
        ("V10", CompleteIntersectionSpec::v10()),
        ("V14", CompleteIntersectionSpec::v14()),
    ] {
        let (model, _, variety) = model_with_series(&spec, 4)?;
        let matrix = recover_matrix(&variety, model.anticanonical_degree)?;
        let predicted = predicted_iseries(&matrix, variety.order());
        println!("{name}, deg {}:\n{matrix}", matrix.deg());
        println!("closure through q^4: {}\n", predicted == variety);
    }
    Ok(())
}
