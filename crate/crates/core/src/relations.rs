//! One-pointed descendant invariants of an index-one Fano threefold as
//! polynomials in its counting-matrix entries.
//!
//! Every invariant here is divided by deg Y, so the polynomials do not
//! depend on the variety.  Cohomology is spanned by 1, H, H², H³ with
//! H³ = deg Y, and an invariant is nonzero only when its insertions fill
//! the virtual dimension:
//!
//! * one point, ⟨τ_k H^m⟩_d: k + m = d + 1
//! * two points, ⟨H^p, τ_k H^m⟩_d: p + k + m = d + 2
//!
//! Prime two-point invariants are the matrix entries themselves,
//! ⟨H^p, H^m⟩_d = (deg/d)·a_{3-p,m}.  Descendants are removed with the
//! divisor axiom followed by topological recursion:
//!
//! ```text
//! ⟨τ_k H^m⟩_d        = Σ_{i=0}^k (-1)^i / d^{i+1} ⟨H, τ_{k-i} H^{m+i}⟩_d
//! ⟨H^a, τ_k H^b⟩_d   = 1/d ( Σ_{d'=1}^{d} a_{e,a} ⟨H^e, τ_{k-1} H^b⟩_{d'}
//!                            - ⟨H^a, τ_{k-1} H^{b+1}⟩_d ),   e = d'-d+1+a
//! ```
//!
//! The d' = d term carries the subdiagonal entry a_{a+1,a} = 1, which is the
//! classical triple intersection.

use std::collections::HashMap;

use thiserror::Error;

use crate::exactmath::{EntryPolynomial, Rational};

/// Top nonvanishing power of H on a threefold.
const TOP_POWER: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("GateViolation: {0} does not fill the virtual dimension")]
    GateViolation(InvariantKey),
}

/// A genus-zero invariant of a threefold of index one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKey {
    /// ⟨τ_k H^m⟩_d
    OnePoint { k: i64, m: i64, d: i64 },
    /// ⟨H^p, τ_k H^m⟩_d
    TwoPoint { p: i64, k: i64, m: i64, d: i64 },
}

impl InvariantKey {
    pub fn satisfies_gate(&self) -> bool {
        match *self {
            InvariantKey::OnePoint { k, m, d } => k + m == d + 1,
            InvariantKey::TwoPoint { p, k, m, d } => p + k + m == d + 2,
        }
    }

    /// Dimension gate, H-powers in 0..=3, k >= 0 and d >= 1.
    pub fn is_admissible(&self) -> bool {
        let powers_ok = |x: i64| (0..=TOP_POWER).contains(&x);
        let shape_ok = match *self {
            InvariantKey::OnePoint { k, m, d } => k >= 0 && d >= 1 && powers_ok(m),
            InvariantKey::TwoPoint { p, k, m, d } => {
                k >= 0 && d >= 1 && powers_ok(p) && powers_ok(m)
            }
        };
        shape_ok && self.satisfies_gate()
    }
}

impl std::fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tau = |k: i64| match k {
            0 => String::new(),
            1 => "τ ".to_string(),
            k => format!("τ_{k} "),
        };
        match *self {
            InvariantKey::OnePoint { k, m, d } => write!(f, "<{}H^{}>_{}", tau(k), m, d),
            InvariantKey::TwoPoint { p, k, m, d } => {
                write!(f, "<H^{}, {}H^{}>_{}", p, tau(k), m, d)
            }
        }
    }
}

/// Prime two-point invariant ⟨H^p, H^m⟩_d / deg: a_{3-p,m}/d when the gate
/// holds, zero otherwise.
pub fn two_point_symbol(p: i64, m: i64, d: i64) -> EntryPolynomial {
    let key = InvariantKey::TwoPoint { p, k: 0, m, d };
    if !key.is_admissible() {
        return EntryPolynomial::zero();
    }
    EntryPolynomial::matrix_entry(TOP_POWER - p, m).scale(&Rational::frac(1, d))
}

/// Memoizing generator for the relation polynomials.
#[derive(Debug, Clone)]
pub struct RelationEngine {
    memo: HashMap<(i64, i64, i64, i64), EntryPolynomial>,
    classical_term: bool,
}

impl Default for RelationEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl RelationEngine {
    pub fn new() -> Self {
        RelationEngine {
            memo: HashMap::new(),
            classical_term: true,
        }
    }

    /// Deliberately wrong engine that drops the subdiagonal ones, i.e. the
    /// classical cup product in the splitting.
    #[cfg(test)]
    fn without_classical_term() -> Self {
        RelationEngine {
            memo: HashMap::new(),
            classical_term: false,
        }
    }

    fn entry(&self, i: i64, j: i64) -> EntryPolynomial {
        if !self.classical_term && j - i + 1 == 0 {
            return EntryPolynomial::zero();
        }
        EntryPolynomial::matrix_entry(i, j)
    }

    /// ⟨H^a, τ_k H^b⟩_d / deg.
    pub fn two_point(&mut self, a: i64, k: i64, b: i64, d: i64) -> EntryPolynomial {
        if !(InvariantKey::TwoPoint { p: a, k, m: b, d }).is_admissible() {
            return EntryPolynomial::zero();
        }
        if k == 0 {
            return self.entry(TOP_POWER - a, b).scale(&Rational::frac(1, d));
        }
        if let Some(p) = self.memo.get(&(a, k, b, d)) {
            return p.clone();
        }
        let mut acc = EntryPolynomial::zero();
        for d1 in 1..=d {
            let e = d1 - d + 1 + a;
            let weight = self.entry(e, a);
            if weight.is_zero() {
                continue;
            }
            let inner = self.two_point(e, k - 1, b, d1);
            acc = acc.add(&weight.mul(&inner));
        }
        acc = acc.sub(&self.two_point(a, k - 1, b + 1, d));
        let result = acc.scale(&Rational::frac(1, d));
        self.memo.insert((a, k, b, d), result.clone());
        result
    }

    /// ⟨τ_k H^m⟩_d / deg.
    pub fn one_point(&mut self, k: i64, m: i64, d: i64) -> Result<EntryPolynomial, RelationError> {
        let key = InvariantKey::OnePoint { k, m, d };
        if !key.satisfies_gate() {
            return Err(RelationError::GateViolation(key));
        }
        if !key.is_admissible() {
            return Ok(EntryPolynomial::zero());
        }
        let mut acc = EntryPolynomial::zero();
        let inv_d = Rational::frac(1, d);
        let mut weight = inv_d.clone();
        for i in 0..=k {
            let term = self.two_point(1, k - i, m + i, d);
            acc = acc.add(&term.scale(&weight));
            weight = -(weight * &inv_d);
        }
        Ok(acc)
    }

    /// (unit, H) coefficients of I_d^Y / deg for d = 0..=d_max: the unit
    /// part is ⟨τ_{d-2} H³⟩_d, the H part ⟨τ_{d-1} H²⟩_d.
    pub fn symbolic_iseries(&mut self, d_max: usize) -> Vec<(EntryPolynomial, EntryPolynomial)> {
        let mut out = vec![(EntryPolynomial::one(), EntryPolynomial::zero())];
        for d in 1..=d_max as i64 {
            let c0 = if d >= 2 {
                self.one_point(d - 2, 3, d).expect("gate holds")
            } else {
                EntryPolynomial::zero()
            };
            let c1 = self.one_point(d - 1, 2, d).expect("gate holds");
            out.push((c0, c1));
        }
        out
    }

    /// Unit coefficient of I_d^Y / deg, i.e. ⟨τ_{d-2} pt⟩_d / deg.
    pub fn period_polynomial(&mut self, d: i64) -> EntryPolynomial {
        if d < 2 {
            return if d == 0 {
                EntryPolynomial::one()
            } else {
                EntryPolynomial::zero()
            };
        }
        self.one_point(d - 2, 3, d).expect("gate holds")
    }
}

/// f_k^d with ⟨τ_k H^{d+1-k}⟩_d = deg · f_k^d.
pub fn one_point_relation(k: i64, d: i64) -> Result<EntryPolynomial, RelationError> {
    let m = d + 1 - k;
    let key = InvariantKey::OnePoint { k, m, d };
    if !key.is_admissible() {
        return Err(RelationError::GateViolation(key));
    }
    RelationEngine::new().one_point(k, m, d)
}

pub fn symbolic_iseries(d_max: usize) -> Vec<(EntryPolynomial, EntryPolynomial)> {
    RelationEngine::new().symbolic_iseries(d_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Entry;

    fn q(p: i64, s: i64) -> Rational {
        Rational::frac(p, s)
    }

    /// Builds a polynomial from (coefficient, [a01, a11, a02, a12, a03]).
    fn poly(terms: &[(Rational, [u32; 5])]) -> EntryPolynomial {
        EntryPolynomial::from_terms(terms.iter().map(|(c, e)| (*e, c.clone())))
    }

    // exponent order: a01, a11, a02, a12, a03
    const A01: [u32; 5] = [1, 0, 0, 0, 0];
    const A02: [u32; 5] = [0, 0, 1, 0, 0];
    const A03: [u32; 5] = [0, 0, 0, 0, 1];
    const A12: [u32; 5] = [0, 0, 0, 1, 0];
    const A11: [u32; 5] = [0, 1, 0, 0, 0];

    #[test]
    fn prime_two_point_symbols() {
        assert_eq!(
            two_point_symbol(3, 1, 2),
            EntryPolynomial::var(Entry::A01).scale(&q(1, 2))
        );
        assert_eq!(
            two_point_symbol(2, 2, 2),
            EntryPolynomial::var(Entry::A12).scale(&q(1, 2))
        );
        assert!(two_point_symbol(2, 2, 3).is_zero());
    }

    #[test]
    fn published_constant_term_polynomials() {
        assert_eq!(one_point_relation(0, 2).unwrap(), poly(&[(q(1, 4), A01)]));
        assert_eq!(
            one_point_relation(1, 3).unwrap(),
            poly(&[(q(1, 18), [1, 1, 0, 0, 0]), (q(1, 27), A02)])
        );
        assert_eq!(
            one_point_relation(2, 4).unwrap(),
            poly(&[
                (q(1, 64), [2, 0, 0, 0, 0]),
                (q(1, 96), [1, 2, 0, 0, 0]),
                (q(7, 576), [0, 1, 1, 0, 0]),
                (q(1, 128), [1, 0, 0, 1, 0]),
                (q(1, 256), A03),
            ])
        );
    }

    #[test]
    fn published_linear_term_polynomials() {
        assert_eq!(one_point_relation(0, 1).unwrap(), poly(&[(q(1, 1), A11)]));
        assert_eq!(
            one_point_relation(1, 2).unwrap(),
            poly(&[(q(1, 4), [0, 2, 0, 0, 0]), (q(1, 8), A12), (q(-1, 4), A01)])
        );
        assert_eq!(
            one_point_relation(2, 3).unwrap(),
            poly(&[
                (q(5, 108), [1, 1, 0, 0, 0]),
                (q(1, 18), [0, 3, 0, 0, 0]),
                (q(1, 12), [0, 1, 0, 1, 0]),
                (q(-2, 81), A02),
            ])
        );
        assert_eq!(
            one_point_relation(3, 4).unwrap(),
            poly(&[
                (q(13, 576), [1, 2, 0, 0, 0]),
                (q(17, 1728), [0, 1, 1, 0, 0]),
                (q(-1, 256), A03),
                (q(-3, 128), [2, 0, 0, 0, 0]),
                (q(1, 96), [0, 4, 0, 0, 0]),
                (q(1, 256), [0, 0, 0, 2, 0]),
                (q(1, 32), [0, 2, 0, 1, 0]),
            ])
        );
    }

    #[test]
    fn gate_violations() {
        assert!(matches!(
            one_point_relation(5, 2),
            Err(RelationError::GateViolation(_))
        ));
        assert!(matches!(
            RelationEngine::new().one_point(0, 2, 2),
            Err(RelationError::GateViolation(_))
        ));
        // m = 4 is past the top power
        assert!(one_point_relation(0, 3).is_err());
    }

    #[test]
    fn symbolic_series_low_degrees() {
        let s = symbolic_iseries(2);
        assert_eq!(s[0], (EntryPolynomial::one(), EntryPolynomial::zero()));
        assert_eq!(
            s[1],
            (EntryPolynomial::zero(), EntryPolynomial::var(Entry::A11))
        );
        assert_eq!(s[2].0, poly(&[(q(1, 4), A01)]));
        assert_eq!(
            s[2].1,
            poly(&[(q(1, 4), [0, 2, 0, 0, 0]), (q(1, 8), A12), (q(-1, 4), A01)])
        );
    }

    #[test]
    fn relations_only_see_curves_of_bounded_degree() {
        let series = symbolic_iseries(6);
        for (d, (c0, c1)) in series.iter().enumerate() {
            for v in c0.variables().into_iter().chain(c1.variables()) {
                assert!(v.curve_degree() as usize <= d, "{v:?} in degree {d}");
            }
        }
    }

    #[test]
    fn dropping_classical_term_changes_outputs() {
        let mut honest = RelationEngine::new();
        let mut broken = RelationEngine::without_classical_term();
        let differs = (2..=4).any(|d| {
            honest.one_point(d - 2, 3, d).unwrap() != broken.one_point(d - 2, 3, d).unwrap()
                || honest.one_point(d - 1, 2, d).unwrap() != broken.one_point(d - 1, 2, d).unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn key_display() {
        let k = InvariantKey::OnePoint { k: 2, m: 3, d: 4 };
        assert_eq!(k.to_string(), "<τ_2 H^3>_4");
        assert!(k.is_admissible());
        let k = InvariantKey::TwoPoint {
            p: 1,
            k: 0,
            m: 3,
            d: 2,
        };
        assert_eq!(k.to_string(), "<H^1, H^3>_2");
    }
}
