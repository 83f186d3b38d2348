//! I-series of G(2,5) and G(2,6) modulo H^2, checked against the closed
//! form for the constant terms.
//!
//! ```bash
//! cargo run --example grassmannian_iseries
//! ```

use fano_gw::grassmann::{
    ambient_iseries, closed_form_constant, grassmannian_geometry, GrassmannianSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [5, 6] {
        let spec = GrassmannianSpec::new(2, n)?;
        let geometry = grassmannian_geometry(spec);
        let series = ambient_iseries(spec, 6)?;
        println!(
            "{spec}: dimension {}, index {}, degree {}",
            geometry.dimension, geometry.fano_index, geometry.plucker_degree
        );
        for d in 0..series.order() {
            let (c0, c1) = series.at(d).expect("within order");
            let check = if *c0 == closed_form_constant(n, d as u32) {
                "ok"
            } else {
                "MISMATCH"
            };
            println!("  q^{d}:  1 -> {c0:<14} H -> {c1:<16} closed form {check}");
        }
    }
    Ok(())
}
