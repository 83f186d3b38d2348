//! Polynomials in the five independent counting-matrix entries.

use std::collections::BTreeMap;
use std::fmt;

use super::accumulate;
use super::rational::Rational;
use super::unipoly::UniPoly;

/// The independent entries of a counting matrix.  Every other entry is
/// zero, one, or equal to one of these through the anti-diagonal symmetry
/// a_ij = a_{3-j,3-i}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    A01,
    A11,
    A02,
    A12,
    A03,
}

impl Entry {
    pub const ALL: [Entry; 5] = [Entry::A01, Entry::A11, Entry::A02, Entry::A12, Entry::A03];

    pub fn index(self) -> usize {
        self as usize
    }

    /// (row, column) in the 4x4 matrix.
    pub fn position(self) -> (usize, usize) {
        match self {
            Entry::A01 => (0, 1),
            Entry::A11 => (1, 1),
            Entry::A02 => (0, 2),
            Entry::A12 => (1, 2),
            Entry::A03 => (0, 3),
        }
    }

    /// Degree of the curves the entry counts, j - i + 1.
    pub fn curve_degree(self) -> u32 {
        let (i, j) = self.position();
        (j + 1 - i) as u32
    }

    pub fn name(self) -> &'static str {
        match self {
            Entry::A01 => "a01",
            Entry::A11 => "a11",
            Entry::A02 => "a02",
            Entry::A12 => "a12",
            Entry::A03 => "a03",
        }
    }
}

/// What a_ij is once structure and symmetry are taken into account.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSlot {
    Zero,
    One,
    Free(Entry),
}

/// Classifies a_ij for 0 <= i, j <= 3; indices outside that range are zero.
pub fn matrix_slot(i: i64, j: i64) -> MatrixSlot {
    if !(0..=3).contains(&i) || !(0..=3).contains(&j) {
        return MatrixSlot::Zero;
    }
    let span = j - i + 1;
    if span < 0 {
        return MatrixSlot::Zero;
    }
    if span == 0 {
        return MatrixSlot::One;
    }
    let (i, j) = if (i, j) <= (3 - j, 3 - i) {
        (i, j)
    } else {
        (3 - j, 3 - i)
    };
    match (i, j) {
        (0, 0) => MatrixSlot::Zero,
        (0, 1) => MatrixSlot::Free(Entry::A01),
        (1, 1) => MatrixSlot::Free(Entry::A11),
        (0, 2) => MatrixSlot::Free(Entry::A02),
        (1, 2) => MatrixSlot::Free(Entry::A12),
        (0, 3) => MatrixSlot::Free(Entry::A03),
        _ => unreachable!("canonical representative ({i},{j})"),
    }
}

type Exponents = [u32; 5];

/// Sparse polynomial over the rationals in a01, a11, a02, a12, a03.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EntryPolynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl EntryPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        accumulate(&mut p.terms, [0; 5], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(e: Entry) -> Self {
        let mut ex = [0; 5];
        ex[e.index()] = 1;
        let mut p = Self::zero();
        p.terms.insert(ex, Rational::one());
        p
    }

    /// a_ij as a polynomial: 0, 1, or one of the independent entries.
    pub fn matrix_entry(i: i64, j: i64) -> Self {
        match matrix_slot(i, j) {
            MatrixSlot::Zero => Self::zero(),
            MatrixSlot::One => Self::one(),
            MatrixSlot::Free(e) => Self::var(e),
        }
    }

    /// Build from (exponents of a01, a11, a02, a12, a03; coefficient) pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            accumulate(&mut p.terms, e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[0; 5])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut p.terms, *e, c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut p.terms, *e, -c);
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut p = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                accumulate(&mut p.terms, e, ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Entry) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// Entries that occur with a nonzero exponent somewhere.
    pub fn variables(&self) -> Vec<Entry> {
        Entry::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    pub fn eval(&self, values: &[Rational; 5]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(values).fold(c.clone(), |acc, (&k, v)| {
                    acc * v.pow(k as i32).expect("nonnegative exponent")
                })
            })
            .sum()
    }

    /// Substitutes a polynomial for every indeterminate.
    pub fn compose(&self, images: &[EntryPolynomial; 5]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[v].pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Coefficient of v^k, as a polynomial in the remaining entries.
    pub fn coeff_of_power(&self, v: Entry, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e[v.index()] == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[v.index()] = 0;
                    (e, c.clone())
                }),
        )
    }

    /// Views the polynomial as univariate in `v`; `None` if any other entry
    /// occurs.
    pub fn to_univariate(&self, v: Entry) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != v.index() && k > 0) {
                return None;
            }
            coeffs[e[v.index()] as usize] += c;
        }
        Some(UniPoly::new(coeffs))
    }
}

impl fmt::Display for EntryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, reads closer to hand-written formulas
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = Entry::ALL
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EntryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_rewrites_dependent_entries() {
        assert_eq!(matrix_slot(2, 3), MatrixSlot::Free(Entry::A01));
        assert_eq!(matrix_slot(2, 2), MatrixSlot::Free(Entry::A11));
        assert_eq!(matrix_slot(1, 3), MatrixSlot::Free(Entry::A02));
        assert_eq!(matrix_slot(3, 3), MatrixSlot::Zero);
        assert_eq!(matrix_slot(0, 0), MatrixSlot::Zero);
        assert_eq!(matrix_slot(2, 1), MatrixSlot::One);
        assert_eq!(matrix_slot(3, 0), MatrixSlot::Zero);
        assert_eq!(matrix_slot(4, 1), MatrixSlot::Zero);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a01 = EntryPolynomial::var(Entry::A01);
        let a11 = EntryPolynomial::var(Entry::A11);
        let p = a01.mul(&a11).add(&a11.pow(2).scale(&Rational::frac(1, 4)));
        let vals = [
            Rational::from(156),
            Rational::from(10),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        assert_eq!(p.eval(&vals), Rational::from(1585));
        assert_eq!(p.sub(&p), EntryPolynomial::zero());
        assert_eq!(p.to_string(), "a01*a11 + 1/4*a11^2");
        assert_eq!(p.variables(), vec![Entry::A01, Entry::A11]);
    }

    #[test]
    fn compose_and_univariate_view() {
        // p = a01 + a11*a12, substitute a01 -> 2, a12 -> a11 + 1
        let p = EntryPolynomial::var(Entry::A01)
            .add(&EntryPolynomial::var(Entry::A11).mul(&EntryPolynomial::var(Entry::A12)));
        let a11 = EntryPolynomial::var(Entry::A11);
        let images = [
            EntryPolynomial::constant(Rational::from(2)),
            a11.clone(),
            EntryPolynomial::var(Entry::A02),
            a11.add(&EntryPolynomial::one()),
            EntryPolynomial::var(Entry::A03),
        ];
        let q = p.compose(&images);
        let u = q.to_univariate(Entry::A11).unwrap();
        assert_eq!(
            u,
            UniPoly::new(vec![Rational::from(2), Rational::one(), Rational::one()])
        );
        assert!(p.to_univariate(Entry::A11).is_none());
        assert_eq!(p.coeff_of_power(Entry::A12, 1), a11);
    }
}
