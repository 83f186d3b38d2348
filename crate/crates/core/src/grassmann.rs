//! Hori–Vafa I-series of Grassmannians, truncated modulo H².
//!
//! The degree-d coefficient of the I-series of G(r, n) is a symmetric power
//! series in the Chern roots x_1..x_r of the dual tautological bundle:
//!
//! ```text
//! I_d = (-1)^{(r-1)d} Σ_{d_1+..+d_r=d}  Π_{i<j}(x_i+d_i-x_j-d_j)
//!       ───────────────────────────────────────────────────────
//!       Π_{i<j}(x_i-x_j) · Π_i Π_{l=1}^{d_i} (x_i+l)^n
//! ```
//!
//! Only the unit and hyperplane (H = x_1+..+x_r) components are kept
//! downstream, so every expansion is carried to total degree
//! `target + r(r-1)/2` and the Vandermonde division brings it back to
//! `target`.

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactmath::{
    divide_by_vandermonde, rational::factorial, rational::harmonic, ChernPolynomial, ExactError,
    PowerSeries, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),
    #[error("AsymmetricSeries: linear coefficients differ between Chern roots at q^{degree}")]
    AsymmetricSeries { degree: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// G(r, n): r-dimensional subspaces of an n-dimensional space.  G(1, n) is
/// the projective space P^{n-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianSpec {
    r: u32,
    n: u32,
}

impl GrassmannianSpec {
    pub fn new(r: u32, n: u32) -> Result<Self, GrassmannError> {
        if r < 1 || r >= n {
            return Err(GrassmannError::InvalidSpec(format!(
                "G({r},{n}) needs 1 <= r < n"
            )));
        }
        Ok(GrassmannianSpec { r, n })
    }

    /// P^{n-1}, i.e. G(1, n).
    pub fn projective(n: u32) -> Result<Self, GrassmannError> {
        Self::new(1, n)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_projective(&self) -> bool {
        self.r == 1
    }

    fn vandermonde_degree(&self) -> u32 {
        self.r * (self.r - 1) / 2
    }
}

impl std::fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_projective() {
            write!(f, "P^{}", self.n - 1)
        } else {
            write!(f, "G({},{})", self.r, self.n)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GeometryInfo {
    pub dimension: u32,
    pub fano_index: u32,
    pub plucker_degree: u64,
}

pub fn grassmannian_geometry(spec: GrassmannianSpec) -> GeometryInfo {
    let (r, n) = (spec.r as u64, spec.n as u64);
    let dim = r * (n - r);
    // (r(n-r))! * Π_{i<r} i!/(n-r+i)!
    let mut deg = factorial(dim);
    for i in 0..r {
        deg = deg * factorial(i) / factorial(n - r + i);
    }
    assert!(deg.is_integer(), "Plücker degree is an integer");
    GeometryInfo {
        dimension: dim as u32,
        fano_index: spec.n,
        plucker_degree: deg.numer().to_u64().expect("Plücker degree fits in u64"),
    }
}

/// Cohomology-valued series c0 + c1·H modulo H².
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct HSeriesPair {
    pub c0: PowerSeries,
    pub c1: PowerSeries,
}

impl HSeriesPair {
    pub fn new(c0: PowerSeries, c1: PowerSeries) -> Self {
        assert_eq!(
            c0.order(),
            c1.order(),
            "components share one truncation order"
        );
        HSeriesPair { c0, c1 }
    }

    pub fn order(&self) -> usize {
        self.c0.order()
    }

    /// (unit, H) coefficients at q^d.
    pub fn at(&self, d: usize) -> Option<(&Rational, &Rational)> {
        Some((self.c0.coeff(d)?, self.c1.coeff(d)?))
    }

    /// Multiplies both components by a scalar-valued series.
    pub fn mul_series(&self, s: &PowerSeries) -> Self {
        HSeriesPair::new(self.c0.mul(s), self.c1.mul(s))
    }

    pub fn truncate(&self, order: usize) -> Self {
        HSeriesPair::new(self.c0.truncate(order), self.c1.truncate(order))
    }
}

/// Compositions of `d` into `parts` nonnegative parts, lexicographic.
fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Degree-d coefficient of the Hori–Vafa series, exact through total
/// degree `target_degree` in the Chern roots.
pub fn hv_degree_part(
    spec: GrassmannianSpec,
    d: u32,
    target_degree: u32,
) -> Result<ChernPolynomial, GrassmannError> {
    let r = spec.r as usize;
    let bound = target_degree + spec.vandermonde_degree();
    let x = |i: usize| ChernPolynomial::var(i, r, bound);

    let mut numerator = ChernPolynomial::zero(r, bound);
    for parts in compositions(d, r) {
        let mut term = ChernPolynomial::one(r, bound);
        for i in 0..r {
            for j in i + 1..r {
                let shift = Rational::from(parts[i] as i64 - parts[j] as i64);
                let factor = x(i)
                    .sub(&x(j))
                    .add(&ChernPolynomial::constant(shift, r, bound));
                term = term.mul(&factor);
            }
        }
        for (i, &di) in parts.iter().enumerate() {
            for l in 1..=di {
                term = term.mul(&ChernPolynomial::inverse_power_of_shifted_var(
                    i,
                    &Rational::from(l),
                    spec.n,
                    r,
                    bound,
                )?);
            }
        }
        numerator = numerator.add(&term);
    }

    let mut part = divide_by_vandermonde(&numerator)?;
    if ((spec.r - 1) * d) % 2 == 1 {
        part = part.scale(&-Rational::one());
    }
    Ok(part)
}

/// Hori–Vafa coefficients for d = 0..=d_max.  Projective spaces go through
/// [`projective_iseries`] instead.
pub fn hv_iseries(
    spec: GrassmannianSpec,
    d_max: u32,
    target_degree: u32,
) -> Result<Vec<ChernPolynomial>, GrassmannError> {
    if spec.r < 2 {
        return Err(GrassmannError::InvalidSpec(format!(
            "{spec} is a projective space; use projective_iseries"
        )));
    }
    (0..=d_max)
        .map(|d| hv_degree_part(spec, d, target_degree))
        .collect()
}

/// I-series of P^{n-1} modulo H²: Σ_d q^d Π_{i=1}^d (H+i)^{-n}.
pub fn projective_iseries(n: u32, d_max: u32) -> HSeriesPair {
    assert!(n >= 2, "P^(n-1) needs n >= 2");
    let order = d_max as usize + 1;
    let mut c0 = PowerSeries::zero(order);
    let mut c1 = PowerSeries::zero(order);
    // (H+i)^{-n} = i^{-n}(1 - nH/i) mod H²
    let (mut a, mut b) = (Rational::one(), Rational::zero());
    for d in 0..order {
        if d > 0 {
            let i = Rational::from(d as u64);
            let lead = i.pow(-(n as i32)).expect("i >= 1");
            let lin = -(Rational::from(n) / &i) * &lead;
            let na = &a * &lead;
            let nb = &a * &lin + &b * &lead;
            a = na;
            b = nb;
        }
        c0.set_coeff(d, a.clone());
        c1.set_coeff(d, b.clone());
    }
    HSeriesPair::new(c0, c1)
}

/// Closed form for the constant term of the G(2, n) I-series at q^d.
pub fn closed_form_constant(n: u32, d: u32) -> Rational {
    let d64 = d as u64;
    let mut sum = Rational::zero();
    for m in 0..=d64 {
        let binom = factorial(d64) / (factorial(m) * factorial(d64 - m));
        let weight = binom.pow(n as i32).expect("positive exponent");
        let gap = Rational::from(n as i64 * (d64 as i64 - 2 * m as i64));
        let inner = gap * (harmonic(m) - harmonic(d64 - m)) + Rational::from(2);
        sum += weight * inner;
    }
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    let prefactor = Rational::frac(sign, 2) / factorial(d64).pow(n as i32).expect("positive");
    prefactor * sum
}

/// Unit and H components of symmetric Hori–Vafa parts.  The H component is
/// the coefficient of x_1, which must agree with every other x_i.
pub fn extract_h_pair(parts: &[ChernPolynomial]) -> Result<HSeriesPair, GrassmannError> {
    let mut c0 = PowerSeries::zero(parts.len());
    let mut c1 = PowerSeries::zero(parts.len());
    for (d, p) in parts.iter().enumerate() {
        let lin = if p.degree_bound() >= 1 {
            p.linear_coeff(0)
        } else {
            Rational::zero()
        };
        if p.degree_bound() >= 1 && (1..p.vars()).any(|i| p.linear_coeff(i) != lin) {
            return Err(GrassmannError::AsymmetricSeries { degree: d });
        }
        c0.set_coeff(d, p.constant_term());
        c1.set_coeff(d, lin);
    }
    Ok(HSeriesPair::new(c0, c1))
}

/// Total degree kept in Hori–Vafa expansions: H needs degree 1, one more
/// lets symmetry be checked past the linear part.
pub const MOD_H2_TARGET_DEGREE: u32 = 2;

/// Ambient I-series modulo H² for any Grassmannian, projective included.
pub fn ambient_iseries(spec: GrassmannianSpec, d_max: u32) -> Result<HSeriesPair, GrassmannError> {
    if spec.is_projective() {
        Ok(projective_iseries(spec.n, d_max))
    } else {
        extract_h_pair(&hv_iseries(spec, d_max, MOD_H2_TARGET_DEGREE)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: u32, n: u32) -> GrassmannianSpec {
        GrassmannianSpec::new(r, n).unwrap()
    }

    fn q(p: i64, s: i64) -> Rational {
        Rational::frac(p, s)
    }

    #[test]
    fn geometry_examples() {
        let info = grassmannian_geometry(g(2, 5));
        assert_eq!(
            (info.dimension, info.fano_index, info.plucker_degree),
            (6, 5, 5)
        );
        let info = grassmannian_geometry(g(2, 6));
        assert_eq!(
            (info.dimension, info.fano_index, info.plucker_degree),
            (8, 6, 14)
        );
        let info = grassmannian_geometry(g(1, 4));
        assert_eq!(
            (info.dimension, info.fano_index, info.plucker_degree),
            (3, 4, 1)
        );
        // anticanonical degrees of the Mukai sections: 1·5·1·1·2 and 1·14
        assert_eq!(grassmannian_geometry(g(2, 5)).plucker_degree * 2, 10);
    }

    #[test]
    fn invalid_specs() {
        assert!(GrassmannianSpec::new(0, 4).is_err());
        assert!(GrassmannianSpec::new(4, 4).is_err());
        assert!(hv_iseries(g(1, 5), 2, 2).is_err());
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(3, 3).len(), 10);
    }

    #[test]
    fn degree_zero_and_one_parts() {
        let p0 = hv_degree_part(g(2, 5), 0, 2).unwrap();
        assert_eq!(p0, ChernPolynomial::one(2, 2));

        let p1 = hv_degree_part(g(2, 5), 1, 2).unwrap();
        assert_eq!(p1.constant_term(), Rational::from(3));
        assert_eq!(p1.linear_coeff(0), Rational::from(-10));
        assert_eq!(p1.linear_coeff(1), Rational::from(-10));

        let p1 = hv_degree_part(g(2, 6), 1, 2).unwrap();
        assert_eq!(p1.constant_term(), Rational::from(4));
        assert_eq!(p1.linear_coeff(0), Rational::from(-15));
    }

    #[test]
    fn published_grassmannian_series() {
        let pair = extract_h_pair(&hv_iseries(g(2, 5), 4, 2).unwrap()).unwrap();
        let c0 = [q(1, 1), q(3, 1), q(19, 32), q(49, 2592), q(139, 884736)];
        let c1 = [
            q(0, 1),
            q(10, 1),
            q(105, 32),
            q(3115, 23328),
            q(6875, 5308416),
        ];
        assert_eq!(pair.c0.coeffs(), &c0);
        for (got, printed) in pair.c1.coeffs().iter().zip(&c1) {
            assert_eq!(&got.abs(), printed);
            // the formula's sign; the published table prints magnitudes
            assert!(got <= &Rational::zero());
        }

        let pair = extract_h_pair(&hv_iseries(g(2, 6), 4, 2).unwrap()).unwrap();
        let c0 = [q(1, 1), q(4, 1), q(3, 4), q(95, 5832), q(865, 11943936)];
        let c1 = [
            q(0, 1),
            q(15, 1),
            q(609, 128),
            q(6197, 46656),
            q(528737, 764411904),
        ];
        assert_eq!(pair.c0.coeffs(), &c0);
        let mags: Vec<_> = pair.c1.coeffs().iter().map(Rational::abs).collect();
        assert_eq!(mags, c1);
    }

    #[test]
    fn closed_form_matches_hori_vafa() {
        for n in [5, 6] {
            let parts = hv_iseries(g(2, n), 6, 1).unwrap();
            for (d, p) in parts.iter().enumerate() {
                assert_eq!(
                    p.constant_term(),
                    closed_form_constant(n, d as u32),
                    "n={n} d={d}"
                );
            }
        }
        assert_eq!(closed_form_constant(5, 1), Rational::from(3));
        assert_eq!(closed_form_constant(6, 1), Rational::from(4));
        assert_eq!(closed_form_constant(5, 2), q(19, 32));
    }

    #[test]
    fn parts_are_symmetric() {
        for spec in [g(2, 5), g(2, 6), g(3, 6)] {
            for d in 0..=3 {
                let p = hv_degree_part(spec, d, 2).unwrap();
                let r = spec.r() as usize;
                let mut swap: Vec<usize> = (0..r).collect();
                swap.swap(0, r - 1);
                assert_eq!(p.permute(&swap), p, "{spec} d={d}");
            }
        }
    }

    #[test]
    fn projective_series_examples() {
        let pair = projective_iseries(5, 2);
        assert_eq!(pair.at(0).unwrap(), (&Rational::one(), &Rational::zero()));
        assert_eq!(pair.at(1).unwrap(), (&Rational::one(), &Rational::from(-5)));
        assert_eq!(pair.at(2).unwrap(), (&q(1, 32), &q(-15, 64)));
    }

    #[test]
    fn projective_matches_generic_formula_for_rank_one() {
        for n in [3, 5] {
            let pair = projective_iseries(n, 4);
            for d in 0..=4 {
                let p = hv_degree_part(g(1, n), d, 1).unwrap();
                let (a, b) = pair.at(d as usize).unwrap();
                assert_eq!(&p.constant_term(), a);
                assert_eq!(&p.linear_coeff(0), b);
            }
        }
    }

    #[test]
    fn extract_rejects_asymmetric_input() {
        let asym = ChernPolynomial::var(0, 2, 2);
        assert_eq!(
            extract_h_pair(&[ChernPolynomial::one(2, 2), asym]),
            Err(GrassmannError::AsymmetricSeries { degree: 1 })
        );
        let pair = extract_h_pair(&[ChernPolynomial::one(2, 2)]).unwrap();
        assert_eq!(pair.at(0).unwrap(), (&Rational::one(), &Rational::zero()));
    }
}
