//! Quantum Lefschetz for V10 = G(2,5) ∩ Q ∩ H ∩ H and V14 = G(2,6) ∩ H^5.
//!
//! ```bash
//! cargo run --example quantum_lefschetz
//! ```

use fano_gw::lefschetz::{model_with_series, CompleteIntersectionSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, spec) in [
        ("V10", CompleteIntersectionSpec::v10()),
        ("V14", CompleteIntersectionSpec::v14()),
    ] {
        let (model, ambient, variety) = model_with_series(&spec, 4)?;
        println!(
            "{name} = {spec}: dimension {}, index {}, -K^3 = {}",
            model.dimension, model.fano_index, model.anticanonical_degree
        );
        println!("  ambient 1: {:?}", ambient.c0);
        println!("  variety 1: {:?}", variety.c0);
        println!("  variety H: {:?}", variety.c1);
    }
    Ok(())
}
