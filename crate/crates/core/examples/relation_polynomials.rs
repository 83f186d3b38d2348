//! Descendant invariants ⟨τ_k H^m⟩_d as polynomials in the counting matrix
//! entries a01, a11, a02, a12, a03.
//!
//! ```bash
//! cargo run --example relation_polynomials
//! ```

use fano_gw::relations::{one_point_relation, symbolic_iseries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (k, d) in [(0, 2), (1, 3), (2, 4), (0, 1), (1, 2), (2, 3), (3, 4)] {
        let m = d + 1 - k;
        let p = one_point_relation(k, d)?;
        println!("<τ_{k} H^{m}>_{d} / deg = {p}");
    }

    println!();
    for (d, (c0, c1)) in symbolic_iseries(4).iter().enumerate() {
        println!("I_{d} / deg: 1 -> {c0}");
        println!("{:10}H -> {c1}", "");
    }
    Ok(())
}
