//! Counting matrices from I-series, and the period map in both directions.
//!
//! A counting matrix of an index-one threefold has five free entries
//! a01, a11, a02, a12, a03.  The relation polynomials express the I-series
//! coefficients in those entries and each new coefficient brings in exactly
//! one new entry linearly, so the matrix can be peeled off in the order
//!
//! ```text
//! c1[1] -> a11,  c0[2] -> a01,  c1[2] -> a12,  c0[3] -> a02,  c0[4] -> a03
//! ```
//!
//! leaving c1[3] and c1[4] as consistency checks.
//!
//! The period map sends a matrix to the constant terms d2..d6.  Its inverse
//! is linear in a01, a02, a03 once a11 and a12 are known; the d5 and d6
//! equations are then linear in a12, and eliminating a12 leaves a linear
//! equation in a11 whose leading coefficient is -disc/81000.

use serde::Serialize;
use thiserror::Error;

use crate::exactmath::{Entry, EntryPolynomial, PowerSeries, Rational, UniPoly};
use crate::grassmann::HSeriesPair;
use crate::relations::RelationEngine;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("SeriesTooShort: need order {needed}, have {order}")]
    SeriesTooShort { needed: usize, order: usize },
    #[error("ConsistencyCheckFailed: {component} coefficient at q^{degree} is off by {residual}")]
    ConsistencyCheckFailed {
        component: &'static str,
        degree: usize,
        residual: Rational,
    },
    #[error("NonlinearStep: {0} does not enter linearly")]
    NonlinearStep(&'static str),
    #[error("DegenerateLocus: the discriminant vanishes")]
    DegenerateLocus,
    #[error("NoRationalSolution: {0}")]
    NoRationalSolution(String),
    #[error("AmbiguousSolution: {0}")]
    AmbiguousSolution(String),
}

/// Counting matrix of an index-one Fano threefold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountingMatrix {
    deg: u64,
    entries: [Rational; 5],
}

impl CountingMatrix {
    /// Entries in the order a01, a11, a02, a12, a03.
    pub fn new(deg: u64, entries: [Rational; 5]) -> Self {
        CountingMatrix { deg, entries }
    }

    pub fn from_integers(deg: u64, entries: [i64; 5]) -> Self {
        Self::new(deg, entries.map(Rational::from))
    }

    pub fn v10() -> Self {
        Self::from_integers(10, [156, 10, 3600, 380, 33120])
    }

    pub fn v14() -> Self {
        Self::from_integers(14, [64, 5, 924, 140, 5936])
    }

    pub fn deg(&self) -> u64 {
        self.deg
    }

    pub fn entries(&self) -> &[Rational; 5] {
        &self.entries
    }

    pub fn get(&self, e: Entry) -> &Rational {
        &self.entries[e.index()]
    }

    /// a_ij for any indices; zero outside 0..=3.
    pub fn at(&self, i: i64, j: i64) -> Rational {
        EntryPolynomial::matrix_entry(i, j).eval(&self.entries)
    }

    pub fn full(&self) -> [[Rational; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.at(i as i64, j as i64)))
    }
}

impl Serialize for CountingMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CountingMatrix", 7)?;
        st.serialize_field("deg", &self.deg)?;
        for e in Entry::ALL {
            st.serialize_field(e.name(), self.get(e))?;
        }
        st.serialize_field("matrix", &self.full())?;
        st.end()
    }
}

impl std::fmt::Display for CountingMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let full = self.full();
        let cells: Vec<Vec<String>> = full
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (n, row) in cells.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

/// Constant terms d2..d6 of the I-series of an index-one threefold.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodVector(pub [Rational; 5]);

impl PeriodVector {
    pub fn from_integers(v: [i64; 5]) -> Self {
        PeriodVector(v.map(Rational::from))
    }

    /// d_i for i in 2..=6.
    pub fn d(&self, i: usize) -> &Rational {
        &self.0[i - 2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Reads d2..d6 off an I-series constant term.
    pub fn from_series(c0: &PowerSeries) -> Result<Self, SolverError> {
        if c0.order() < 7 {
            return Err(SolverError::SeriesTooShort {
                needed: 7,
                order: c0.order(),
            });
        }
        Ok(PeriodVector(std::array::from_fn(|k| {
            c0.coeffs()[k + 2].clone()
        })))
    }
}

/// Images for `EntryPolynomial::compose` that fix the known entries and
/// leave the others symbolic.
fn partial_images(known: &[Option<Rational>; 5]) -> [EntryPolynomial; 5] {
    std::array::from_fn(|k| match &known[k] {
        Some(v) => EntryPolynomial::constant(v.clone()),
        None => EntryPolynomial::var(Entry::ALL[k]),
    })
}

/// Solves `p = value` for `v`, where `p` has no unknowns besides `v` and is
/// affine in it.
fn solve_affine(p: &EntryPolynomial, v: Entry, value: &Rational) -> Result<Rational, SolverError> {
    let u = p
        .to_univariate(v)
        .filter(|u| u.degree() == Some(1))
        .ok_or(SolverError::NonlinearStep(v.name()))?;
    Ok((value - u.coeff(0)) / u.coeff(1))
}

/// Counting matrix from the (unit, H) coefficients of I^Y mod H².
pub fn recover_matrix(pair: &HSeriesPair, deg: u64) -> Result<CountingMatrix, SolverError> {
    if pair.order() < 5 {
        return Err(SolverError::SeriesTooShort {
            needed: 5,
            order: pair.order(),
        });
    }
    let symbolic = RelationEngine::new().symbolic_iseries(4);
    let c0 = pair.c0.coeffs();
    let c1 = pair.c1.coeffs();
    let steps = [
        (&symbolic[1].1, &c1[1], Entry::A11),
        (&symbolic[2].0, &c0[2], Entry::A01),
        (&symbolic[2].1, &c1[2], Entry::A12),
        (&symbolic[3].0, &c0[3], Entry::A02),
        (&symbolic[4].0, &c0[4], Entry::A03),
    ];
    let mut known: [Option<Rational>; 5] = Default::default();
    for (poly, value, v) in steps {
        let reduced = poly.compose(&partial_images(&known));
        known[v.index()] = Some(solve_affine(&reduced, v, value)?);
    }
    let matrix = CountingMatrix::new(deg, known.map(|x| x.expect("all entries solved")));
    for d in 3..=4 {
        let residual = &symbolic[d].1.eval(matrix.entries()) - &c1[d];
        if !residual.is_zero() {
            return Err(SolverError::ConsistencyCheckFailed {
                component: "H^1",
                degree: d,
                residual,
            });
        }
    }
    Ok(matrix)
}

/// I^Y mod H² through q^{order-1} as predicted by the relations.
pub fn predicted_iseries(matrix: &CountingMatrix, order: usize) -> HSeriesPair {
    let symbolic = RelationEngine::new().symbolic_iseries(order.saturating_sub(1));
    let (c0, c1): (Vec<_>, Vec<_>) = symbolic
        .iter()
        .take(order)
        .map(|(p0, p1)| (p0.eval(matrix.entries()), p1.eval(matrix.entries())))
        .unzip();
    HSeriesPair::new(PowerSeries::from_coeffs(c0), PowerSeries::from_coeffs(c1))
}

fn period_polynomials() -> [EntryPolynomial; 5] {
    let mut engine = RelationEngine::new();
    std::array::from_fn(|k| engine.period_polynomial(k as i64 + 2))
}

pub fn forward_periods(matrix: &CountingMatrix) -> PeriodVector {
    PeriodVector(period_polynomials().map(|p| p.eval(matrix.entries())))
}

/// 56d2⁴ - 312d2²d4 + 261d2d3² - 495d3d5 + 432d4².
pub fn discriminant(v: &PeriodVector) -> Rational {
    let (d2, d3, d4, d5) = (v.d(2), v.d(3), v.d(4), v.d(5));
    let c = |n: i64| Rational::from(n);
    c(56) * d2 * d2 * d2 * d2 - c(312) * d2 * d2 * d4 + c(261) * d2 * d3 * d3 - c(495) * d3 * d5
        + c(432) * d4 * d4
}

/// The d5 and d6 equations with a01, a02, a03 eliminated, as polynomials in
/// a11 and a12.
fn reduced_equations(v: &PeriodVector) -> Result<[EntryPolynomial; 2], SolverError> {
    let p = period_polynomials();
    let mut images: [EntryPolynomial; 5] = partial_images(&Default::default());
    let steps = [(0, Entry::A01), (1, Entry::A02), (2, Entry::A03)];
    for (k, e) in steps {
        let reduced = p[k].compose(&images);
        if reduced.degree_in(e) != 1 {
            return Err(SolverError::NonlinearStep(e.name()));
        }
        let lin = reduced.coeff_of_power(e, 1);
        if lin.total_degree() != 0 || lin.is_zero() {
            return Err(SolverError::NonlinearStep(e.name()));
        }
        let rest = reduced.coeff_of_power(e, 0);
        let value = EntryPolynomial::constant(v.0[k].clone()).sub(&rest);
        images[e.index()] = value.scale(&lin.constant_term().recip().expect("nonzero"));
    }
    let shift = |k: usize| {
        p[k].compose(&images)
            .sub(&EntryPolynomial::constant(v.0[k].clone()))
    };
    Ok([shift(3), shift(4)])
}

/// Splits an equation that is affine in a12 into its a12 and constant
/// parts, each a polynomial in a11.
fn split_a12(g: &EntryPolynomial) -> Result<(UniPoly, UniPoly), SolverError> {
    if g.degree_in(Entry::A12) > 1 {
        return Err(SolverError::NonlinearStep(Entry::A12.name()));
    }
    let part = |k| {
        g.coeff_of_power(Entry::A12, k)
            .to_univariate(Entry::A11)
            .ok_or(SolverError::NonlinearStep(Entry::A11.name()))
    };
    Ok((part(1)?, part(0)?))
}

/// Resultant in a12 of the reduced d5, d6 equations, a polynomial in a11.
pub fn elimination_polynomial(v: &PeriodVector) -> Result<UniPoly, SolverError> {
    let [g5, g6] = reduced_equations(v)?;
    let (l5, r5) = split_a12(&g5)?;
    let (l6, r6) = split_a12(&g6)?;
    Ok(l5.mul(&r6).sub(&l6.mul(&r5)))
}

/// Inverse of [`forward_periods`] off the discriminant locus.
pub fn invert_periods(v: &PeriodVector, deg: u64) -> Result<CountingMatrix, SolverError> {
    if v.is_zero() || discriminant(v).is_zero() {
        return Err(SolverError::DegenerateLocus);
    }
    let resultant = elimination_polynomial(v)?;
    let a11 = match resultant.degree() {
        None => {
            return Err(SolverError::AmbiguousSolution(
                "the eliminant in a11 vanishes identically".into(),
            ))
        }
        Some(1) => -(resultant.coeff(0) / resultant.coeff(1)),
        Some(k) => {
            return Err(SolverError::NoRationalSolution(format!(
                "eliminant in a11 has degree {k}"
            )))
        }
    };
    let [g5, g6] = reduced_equations(v)?;
    let a12 = [&g5, &g6]
        .into_iter()
        .find_map(|g| {
            let (l, r) = split_a12(g).ok()?;
            let lv = l.eval(&a11);
            (!lv.is_zero()).then(|| -(r.eval(&a11) / lv))
        })
        .ok_or_else(|| SolverError::AmbiguousSolution("a12 is unconstrained".into()))?;

    let mut known: [Option<Rational>; 5] = Default::default();
    known[Entry::A11.index()] = Some(a11);
    known[Entry::A12.index()] = Some(a12);
    let p = period_polynomials();
    for (k, e) in [(0, Entry::A01), (1, Entry::A02), (2, Entry::A03)] {
        let reduced = p[k].compose(&partial_images(&known));
        known[e.index()] = Some(solve_affine(&reduced, e, &v.0[k])?);
    }
    let matrix = CountingMatrix::new(deg, known.map(|x| x.expect("all entries solved")));
    if &forward_periods(&matrix) != v {
        return Err(SolverError::NoRationalSolution(
            "back-substitution does not reproduce the periods".into(),
        ));
    }
    Ok(matrix)
}
