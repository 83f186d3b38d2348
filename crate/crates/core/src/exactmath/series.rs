//! Truncated power series in one formal variable.

use std::fmt;

use serde::Serialize;

use super::rational::{factorial, Rational};

/// Power series known exactly through degree `order - 1`.
///
/// Coefficients at or beyond the truncation bound are unknown, so
/// [`PowerSeries::coeff`] refuses to report them.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

/// Operation selector for [`series_combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

pub fn series_combine(op: SeriesOp, a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
    }
}

/// exp(c q) truncated to `order` terms.
pub fn exp_linear(c: &Rational, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order);
    let mut power = Rational::one();
    for m in 0..order {
        coeffs.push(&power / factorial(m as u64));
        power *= c;
    }
    PowerSeries { coeffs }
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// c q^d, truncated at `order`.
    pub fn monomial(c: Rational, d: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if d < order {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, d: usize) -> Option<&Rational> {
        self.coeffs.get(d)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, c: Rational) {
        self.coeffs[d] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Euler operator q d/dq.
    pub fn theta(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c * Rational::from(m as u64))
                .collect(),
        }
    }

    /// Multiplication by q^b, keeping the same truncation order.
    pub fn shift(&self, b: usize) -> PowerSeries {
        let n = self.order();
        let mut s = Self::zero(n);
        for m in 0..n.saturating_sub(b) {
            s.coeffs[m + b] = self.coeffs[m].clone();
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Index of the first coefficient where the two series differ, over the
    /// range both of them know.
    pub fn first_mismatch(&self, other: &PowerSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
