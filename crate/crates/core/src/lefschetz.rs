//! Quantum Lefschetz for Fano complete intersections in Grassmannians.
//!
//! For Y cut out of X by hypersurfaces of degrees d_1..d_k in the Plücker
//! (or hyperplane) class,
//!
//! ```text
//! Σ_d E_d · I_d^X q^d = exp(α_Y q) · Σ_d I_d^Y q^d      (mod H²)
//! E_d = Π_j Π_{i=1}^{d_j d} (d_j H + i)
//! ```
//!
//! with α_Y = Π d_j! · I^X_{1,H⁰} when Y has index 1 and α_Y = 0 otherwise.
//! The i = 0 factors contribute the same Euler class on both sides and are
//! left out.

use thiserror::Error;

use crate::exactmath::{exp_linear, rational::factorial, PowerSeries, Rational};
use crate::grassmann::{grassmannian_geometry, GrassmannError, GrassmannianSpec, HSeriesPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("NotFano: {spec} has Fano index {index}")]
    NotFano { spec: String, index: i64 },
    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),
    #[error("SeriesTooShort: need the ambient series through q^{needed}, have order {order}")]
    SeriesTooShort { needed: usize, order: usize },
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
}

/// Complete intersection of hypersurfaces of the given degrees in a
/// Grassmannian (projective spaces are G(1, n)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionSpec {
    ambient: GrassmannianSpec,
    degrees: Vec<u32>,
}

impl CompleteIntersectionSpec {
    pub fn new(ambient: GrassmannianSpec, degrees: Vec<u32>) -> Result<Self, LefschetzError> {
        if degrees.contains(&0) {
            return Err(LefschetzError::InvalidSpec(
                "hypersurface degrees must be positive".into(),
            ));
        }
        let dim = grassmannian_geometry(ambient).dimension as i64;
        if dim - (degrees.len() as i64) < 1 {
            return Err(LefschetzError::InvalidSpec(format!(
                "{} hypersurfaces in {ambient} leave nothing of positive dimension",
                degrees.len()
            )));
        }
        Ok(CompleteIntersectionSpec { ambient, degrees })
    }

    /// V₁₀: G(2,5) ∩ two hyperplanes ∩ a quadric.
    pub fn v10() -> Self {
        Self::new(GrassmannianSpec::new(2, 5).unwrap(), vec![1, 1, 2]).unwrap()
    }

    /// V₁₄: G(2,6) ∩ five hyperplanes.
    pub fn v14() -> Self {
        Self::new(GrassmannianSpec::new(2, 6).unwrap(), vec![1; 5]).unwrap()
    }

    pub fn ambient(&self) -> GrassmannianSpec {
        self.ambient
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dimension(&self) -> u32 {
        grassmannian_geometry(self.ambient).dimension - self.degrees.len() as u32
    }

    /// n - Σ d_j, possibly nonpositive.
    pub fn fano_index(&self) -> i64 {
        self.ambient.n() as i64 - self.degrees.iter().map(|&d| d as i64).sum::<i64>()
    }
}

impl std::fmt::Display for CompleteIntersectionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "{}[{}]", self.ambient, degs.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoModel {
    pub spec: CompleteIntersectionSpec,
    pub dimension: u32,
    pub fano_index: u32,
    /// (-K_Y)^dim = index^dim · (Plücker degree) · Π d_j
    pub anticanonical_degree: u64,
    pub shift: Option<Rational>,
    pub warnings: Vec<String>,
}

impl FanoModel {
    pub fn is_index_one_threefold(&self) -> bool {
        self.dimension == 3 && self.fano_index == 1
    }
}

pub fn ci_geometry(spec: &CompleteIntersectionSpec) -> Result<FanoModel, LefschetzError> {
    let index = spec.fano_index();
    if index <= 0 {
        return Err(LefschetzError::NotFano {
            spec: spec.to_string(),
            index,
        });
    }
    let dimension = spec.dimension();
    let plucker = grassmannian_geometry(spec.ambient).plucker_degree;
    let anticanonical_degree = (index as u64).pow(dimension)
        * plucker
        * spec.degrees.iter().map(|&d| d as u64).product::<u64>();
    let mut warnings = Vec::new();
    if dimension != 3 {
        warnings.push(format!(
            "NotThreefold: {spec} has dimension {dimension}; counting matrices need dimension 3"
        ));
    }
    Ok(FanoModel {
        spec: spec.clone(),
        dimension,
        fano_index: index as u32,
        anticanonical_degree,
        shift: None,
        warnings,
    })
}

/// α_Y: Π d_j! times the q¹ constant term of the ambient series for
/// index one, zero for higher index.
pub fn lefschetz_shift(
    spec: &CompleteIntersectionSpec,
    ambient_c0: &PowerSeries,
) -> Result<Rational, LefschetzError> {
    let index = spec.fano_index();
    if index <= 0 {
        return Err(LefschetzError::NotFano {
            spec: spec.to_string(),
            index,
        });
    }
    if index >= 2 {
        return Ok(Rational::zero());
    }
    let first = ambient_c0.coeff(1).ok_or(LefschetzError::SeriesTooShort {
        needed: 1,
        order: ambient_c0.order(),
    })?;
    let prod: Rational = spec.degrees.iter().map(|&d| factorial(d as u64)).product();
    Ok(prod * first)
}

/// E_d modulo H² as (constant, H-coefficient).
fn euler_factor(degrees: &[u32], d: u64) -> (Rational, Rational) {
    // Π (a H + i) = Π i · (1 + H Σ a/i)
    let mut constant = Rational::one();
    let mut log_lin = Rational::zero();
    for &a in degrees {
        for i in 1..=(a as u64 * d) {
            constant = constant * Rational::from(i);
            log_lin += Rational::from(a) / Rational::from(i);
        }
    }
    let lin = &constant * &log_lin;
    (constant, lin)
}

/// Applies E_d to each q^d coefficient of the ambient series.
pub fn euler_corrected_series(pair: &HSeriesPair, degrees: &[u32], d_max: usize) -> HSeriesPair {
    let order = (d_max + 1).min(pair.order());
    let mut c0 = PowerSeries::zero(order);
    let mut c1 = PowerSeries::zero(order);
    for d in 0..order {
        let (a, b) = pair.at(d).expect("within order");
        let (e0, e1) = euler_factor(degrees, d as u64);
        c0.set_coeff(d, &e0 * a);
        c1.set_coeff(d, &e0 * b + &e1 * a);
    }
    HSeriesPair::new(c0, c1)
}

/// I-series of Y modulo H², through q^d_max.
pub fn quantum_lefschetz(
    ambient: &HSeriesPair,
    spec: &CompleteIntersectionSpec,
    d_max: usize,
) -> Result<HSeriesPair, LefschetzError> {
    if ambient.order() <= d_max {
        return Err(LefschetzError::SeriesTooShort {
            needed: d_max,
            order: ambient.order(),
        });
    }
    let alpha = lefschetz_shift(spec, &ambient.c0)?;
    let corrected = euler_corrected_series(ambient, &spec.degrees, d_max);
    Ok(corrected.mul_series(&exp_linear(&-alpha, d_max + 1)))
}

/// Geometry, shift and both I-series in one go.
pub fn model_with_series(
    spec: &CompleteIntersectionSpec,
    d_max: usize,
) -> Result<(FanoModel, HSeriesPair, HSeriesPair), LefschetzError> {
    let mut model = ci_geometry(spec)?;
    let ambient = crate::grassmann::ambient_iseries(spec.ambient, d_max as u32)?;
    model.shift = Some(lefschetz_shift(spec, &ambient.c0)?);
    let variety = quantum_lefschetz(&ambient, spec, d_max)?;
    Ok((model, ambient, variety))
}
