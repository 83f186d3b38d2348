//! D3 operators from the pencil DE - M^λ, and their power-series solutions.
//!
//! ```bash
//! cargo run --example d3_operator
//! ```

use fano_gw::d3::{build_pencil, d3_operator, frobenius_solve, right_determinant};
use fano_gw::exactmath::Rational;
use fano_gw::solver::CountingMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, m, alpha) in [
        ("V10", CountingMatrix::v10(), 6),
        ("V14", CountingMatrix::v14(), 4),
    ] {
        let lambda = Rational::from(alpha);
        let det = right_determinant(&build_pencil(&m, &lambda));
        let op = d3_operator(&m, &lambda)?;
        let phi = frobenius_solve(&op, 8)?;
        println!("{name}, λ = {lambda}");
        println!("  right determinant  {det}");
        println!("  L                  {op}");
        println!(
            "  indicial           {}",
            op.indicial_polynomial().format_in("m")
        );
        println!("  Φ                  {:?}", phi.coeffs());
        println!("  L[Φ] = 0 mod t^8   {}", op.apply(&phi).is_zero());
    }
    Ok(())
}
