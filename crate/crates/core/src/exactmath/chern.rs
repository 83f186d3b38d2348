//! Truncated polynomials in Chern roots x_1..x_r.

use std::collections::BTreeMap;
use std::fmt;

use super::rational::{binomial, Rational};
use super::{accumulate, ExactError};

type Exponents = Vec<u32>;

/// Polynomial in `r` variables, exact through total degree `degree_bound`.
/// Monomials above the bound are discarded on every operation.
#[derive(Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    vars: usize,
    degree_bound: u32,
    terms: BTreeMap<Exponents, Rational>,
}

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl ChernPolynomial {
    pub fn zero(vars: usize, degree_bound: u32) -> Self {
        ChernPolynomial {
            vars,
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, vars: usize, degree_bound: u32) -> Self {
        let mut p = Self::zero(vars, degree_bound);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize, degree_bound: u32) -> Self {
        Self::constant(Rational::one(), vars, degree_bound)
    }

    /// The single variable x_i (0-based).
    pub fn var(i: usize, vars: usize, degree_bound: u32) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars, degree_bound);
        p.add_term(e, Rational::one());
        p
    }

    /// Build from explicit (exponents, coefficient) pairs.
    pub fn from_terms(
        vars: usize,
        degree_bound: u32,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars, degree_bound);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// (x_i + shift)^(-power) expanded by the binomial series; `shift`
    /// must be nonzero.
    pub fn inverse_power_of_shifted_var(
        i: usize,
        shift: &Rational,
        power: u32,
        vars: usize,
        degree_bound: u32,
    ) -> Result<Self, ExactError> {
        // shift^-n * (1 + x/shift)^-n
        let lead = shift.pow(-(power as i32))?;
        let minus_n = -Rational::from(power);
        let inv_shift = shift.recip()?;
        let mut p = Self::zero(vars, degree_bound);
        let mut shift_pow = Rational::one();
        for k in 0..=degree_bound {
            let mut e = vec![0; vars];
            e[i] = k;
            p.add_term(e, &lead * &binomial(&minus_n, k as u64) * &shift_pow);
            shift_pow *= &inv_shift;
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.vars])
    }

    /// Coefficient of the linear monomial x_i.
    pub fn linear_coeff(&self, i: usize) -> Rational {
        let mut e = vec![0; self.vars];
        e[i] = 1;
        self.coeff(&e)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() || total_degree(&e) > self.degree_bound {
            return;
        }
        accumulate(&mut self.terms, e, c);
    }

    pub fn with_degree_bound(&self, degree_bound: u32) -> Self {
        let mut p = Self::zero(self.vars, degree_bound);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn add(&self, rhs: &ChernPolynomial) -> ChernPolynomial {
        assert_eq!(self.vars, rhs.vars);
        let mut p = self.with_degree_bound(self.degree_bound.min(rhs.degree_bound));
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &ChernPolynomial) -> ChernPolynomial {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ChernPolynomial {
        let mut p = Self::zero(self.vars, self.degree_bound);
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    /// Truncated product; the result is exact through the smaller bound.
    pub fn mul(&self, rhs: &ChernPolynomial) -> ChernPolynomial {
        assert_eq!(self.vars, rhs.vars);
        let bound = self.degree_bound.min(rhs.degree_bound);
        let mut p = Self::zero(self.vars, bound);
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &rhs.terms {
                if da + total_degree(eb) > bound {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    /// Exact quotient by x_i - x_j.  Each homogeneous component is divided
    /// separately, so the quotient is exact through `degree_bound - 1`.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<ChernPolynomial, ExactError> {
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.vars, self.degree_bound.saturating_sub(1));
        loop {
            // largest exponent of x_i among remaining terms
            let lead = rem
                .iter()
                .filter(|(e, _)| e[i] > 0)
                .max_by_key(|(e, _)| e[i])
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = lead else { break };
            let mut q = e.clone();
            q[i] -= 1;
            // rem -= (x_i - x_j) * c * x^q
            rem.remove(&e);
            let mut shifted = q.clone();
            shifted[j] += 1;
            accumulate(&mut rem, shifted, c.clone());
            quot.add_term(q, c);
        }
        if rem.is_empty() {
            Ok(quot)
        } else {
            Err(ExactError::NonExactDivision)
        }
    }

    /// Permute variables: new x_k is old x_perm[k].
    pub fn permute(&self, perm: &[usize]) -> ChernPolynomial {
        let mut p = Self::zero(self.vars, self.degree_bound);
        for (e, c) in &self.terms {
            let ne: Exponents = perm.iter().map(|&k| e[k]).collect();
            p.add_term(ne, c.clone());
        }
        p
    }
}

/// The Vandermonde product over i < j of (x_i - x_j).
pub fn vandermonde(vars: usize, degree_bound: u32) -> ChernPolynomial {
    let mut p = ChernPolynomial::one(vars, degree_bound);
    for i in 0..vars {
        for j in i + 1..vars {
            let diff = ChernPolynomial::var(i, vars, degree_bound).sub(&ChernPolynomial::var(
                j,
                vars,
                degree_bound,
            ));
            p = p.mul(&diff);
        }
    }
    p
}

/// Divide by the Vandermonde product, one linear factor at a time.  The
/// degree bound drops by r(r-1)/2.
pub fn divide_by_vandermonde(p: &ChernPolynomial) -> Result<ChernPolynomial, ExactError> {
    let mut q = p.clone();
    for i in 0..p.vars() {
        for j in i + 1..p.vars() {
            q = q.divide_by_difference(i, j)?;
        }
    }
    Ok(q)
}

impl fmt::Display for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if mono.is_empty() {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{}*{}", c, mono.join("*")));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg<={})", self.degree_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, bound: u32) -> ChernPolynomial {
        ChernPolynomial::var(i, 2, bound)
    }

    #[test]
    fn vandermonde_division_examples() {
        let p = x(0, 4).mul(&x(0, 4)).sub(&x(1, 4).mul(&x(1, 4)));
        let q = divide_by_vandermonde(&p).unwrap();
        assert_eq!(q, x(0, 3).add(&x(1, 3)));
        assert_eq!(q.degree_bound(), 3);

        let d = x(0, 4).sub(&x(1, 4));
        assert_eq!(
            divide_by_vandermonde(&d).unwrap(),
            ChernPolynomial::one(2, 3)
        );

        assert_eq!(
            divide_by_vandermonde(&x(0, 4)),
            Err(ExactError::NonExactDivision)
        );
    }

    #[test]
    fn division_roundtrip_three_variables() {
        let bound = 7;
        let v = vandermonde(3, bound);
        let sym = ChernPolynomial::var(0, 3, bound)
            .add(&ChernPolynomial::var(1, 3, bound))
            .add(&ChernPolynomial::var(2, 3, bound))
            .add(&ChernPolynomial::constant(Rational::frac(2, 3), 3, bound));
        let p = v.mul(&sym);
        let q = divide_by_vandermonde(&p).unwrap();
        assert_eq!(q.degree_bound(), bound - 3);
        assert_eq!(q, sym.with_degree_bound(bound - 3));
        let back = q
            .mul(&vandermonde(3, bound - 3))
            .with_degree_bound(bound - 3);
        assert_eq!(back, p.with_degree_bound(bound - 3));
    }

    #[test]
    fn inverse_power_series() {
        // (x + 1)^-5 = 1 - 5x + 15x^2 - ...
        let p =
            ChernPolynomial::inverse_power_of_shifted_var(0, &Rational::one(), 5, 1, 2).unwrap();
        assert_eq!(p.coeff(&[0]), Rational::one());
        assert_eq!(p.coeff(&[1]), Rational::from(-5));
        assert_eq!(p.coeff(&[2]), Rational::from(15));
        // times (x + 1)^5 gives 1
        let mut fwd = ChernPolynomial::one(1, 2);
        for _ in 0..5 {
            fwd = fwd.mul(&ChernPolynomial::var(0, 1, 2).add(&ChernPolynomial::one(1, 2)));
        }
        assert_eq!(fwd.mul(&p), ChernPolynomial::one(1, 2));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = x(0, 3).sub(&x(0, 3));
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }
}
