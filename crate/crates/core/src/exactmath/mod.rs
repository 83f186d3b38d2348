//! Exact scalar, power-series and polynomial arithmetic.

use std::collections::BTreeMap;

use thiserror::Error;

pub mod chern;
pub mod entry;
pub mod rational;
pub mod series;
pub mod unipoly;

pub use chern::{divide_by_vandermonde, vandermonde, ChernPolynomial};
pub use entry::{Entry, EntryPolynomial};
pub use rational::{rational_arith, ArithOp, Rational};
pub use series::{exp_linear, series_combine, PowerSeries, SeriesOp};
pub use unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("DivisionByZero: division by zero")]
    DivisionByZero,
    #[error("NonExactDivision: nonzero remainder in Vandermonde division")]
    NonExactDivision,
    #[error("Parse: cannot read {0:?} as a rational number")]
    Parse(String),
}

/// Adds `c` to the coefficient of `e`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Rational>, e: K, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
