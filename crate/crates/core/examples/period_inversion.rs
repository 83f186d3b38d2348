//! Periods d2..d6 from a counting matrix, the discriminant, and the matrix
//! recovered from the periods alone.
//!
//! ```bash
//! cargo run --example period_inversion
//! ```

use fano_gw::exactmath::Rational;
use fano_gw::solver::{
    discriminant, elimination_polynomial, forward_periods, invert_periods, CountingMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let made_up = CountingMatrix::new(22, [7, 3, 41, 12, 300].map(|x| Rational::from(x as i64)));
    for (name, m) in [
        ("V10", CountingMatrix::v10()),
        ("V14", CountingMatrix::v14()),
        ("made up", made_up),
    ] {
        let periods = forward_periods(&m);
        let back = invert_periods(&periods, m.deg())?;
        println!("{name}");
        println!("  periods        {:?}", periods.0);
        println!("  discriminant   {}", discriminant(&periods));
        println!(
            "  eliminant a11  {}",
            elimination_polynomial(&periods)?.format_in("a11")
        );
        println!("  roundtrip      {}", back == m);
    }
    Ok(())
}
