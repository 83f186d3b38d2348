//! Differential operators in t and D = t d/dt.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactmath::{PowerSeries, Rational, UniPoly};

/// Σ c · t^b D^a, normal ordered with t to the left.  Keys are (b, a).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DifferentialOperator {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl DifferentialOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    /// c · t^b D^a
    pub fn monomial(c: Rational, t_power: u32, d_power: u32) -> Self {
        let mut op = Self::zero();
        op.add_term((t_power, d_power), c);
        op
    }

    pub fn d() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The word D∘t = t(D + 1).
    pub fn dt() -> Self {
        Self::d().mul(&Self::t())
    }

    /// t^b · p(D).
    pub fn from_slice(t_power: u32, p: &UniPoly) -> Self {
        let mut op = Self::zero();
        for (a, c) in p.coeffs().iter().enumerate() {
            op.add_term((t_power, a as u32), c.clone());
        }
        op
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        crate::exactmath::accumulate(&mut self.terms, key, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    /// Highest power of D, `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, a)| a).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(b, _)| b).max()
    }

    /// The polynomial in D multiplying t^b.
    pub fn t_slice(&self, t_power: u32) -> UniPoly {
        let top = self.order().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (&(b, a), c) in &self.terms {
            if b == t_power {
                coeffs[a as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// Nonzero slices keyed by power of t.
    pub fn t_slices(&self) -> BTreeMap<u32, UniPoly> {
        let mut powers: Vec<u32> = self.terms.keys().map(|&(b, _)| b).collect();
        powers.dedup();
        powers.into_iter().map(|b| (b, self.t_slice(b))).collect()
    }

    /// The t-free part as a polynomial in m, so that L t^m = P(m) t^m + O(t^{m+1}).
    pub fn indicial_polynomial(&self) -> UniPoly {
        self.t_slice(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Product in the Weyl algebra: t^b D^a · t^c D^e = t^{b+c} (D+c)^a D^e.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(b, a), x) in &self.terms {
            for (&(c, e), y) in &rhs.terms {
                let xy = x * y;
                let shift = Rational::from(c);
                // (D + c)^a = Σ_k binom(a, k) c^{a-k} D^k
                let mut binom = Rational::one();
                for k in 0..=a {
                    let coeff = &xy * &binom * shift.pow((a - k) as i32).expect("nonnegative");
                    out.add_term((b + c, k + e), coeff);
                    binom = binom * Rational::from(a - k) / Rational::from(k + 1);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Applies the operator to a series in t, with D acting as t d/dt.
    pub fn apply(&self, f: &PowerSeries) -> PowerSeries {
        let top = self.order().unwrap_or(0);
        let mut thetas = vec![f.clone()];
        for _ in 0..top {
            let next = thetas.last().expect("nonempty").theta();
            thetas.push(next);
        }
        let mut out = PowerSeries::zero(f.order());
        for (&(b, a), c) in &self.terms {
            out = out.add(&thetas[a as usize].shift(b as usize).scale(c));
        }
        out
    }
}

impl fmt::Display for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, p) in self.t_slices() {
            let inner = p.format_in("D");
            let t = match b {
                0 => String::new(),
                1 => "t".to_string(),
                b => format!("t^{b}"),
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if t.is_empty() {
                write!(f, "{inner}")?;
            } else if p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
                && !inner.starts_with('-')
            {
                if inner == "1" {
                    write!(f, "{t}")?;
                } else {
                    write!(f, "{t}*{inner}")?;
                }
            } else {
                write!(f, "{t}*({inner})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
