//! Runs the whole pipeline on a variety described by a JSON config, here
//! the quartic threefold in P^4.
//!
//! ```bash
//! cargo run --example custom_variety
//! cargo run --example custom_variety -- path/to/config.json
//! ```

use fano_gw::cli::{run_pipeline, VarietyConfig};

const QUARTIC: &str = include_str!("quartic.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = match std::env::args().nth(1) {
        Some(path) => VarietyConfig::from_path(path.as_ref())?,
        None => VarietyConfig::from_json(QUARTIC)?,
    };
    let report = run_pipeline(&config, 8)?;
    println!("{} ({})", report.name, report.status);
    println!("  {}", report.geometry.spec);
    println!("  shift α = {}", report.shift);
    if let Some(m) = &report.matrix {
        println!("{m}");
    }
    if let Some(d3) = &report.d3 {
        println!("  L = {}", d3.operator);
        println!("  Φ = {:?}", d3.solution.coeffs());
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
    Ok(())
}
