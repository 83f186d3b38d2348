//! The pencil DE - M^λ, its right determinant, and the operator L^λ.

use crate::exactmath::{PowerSeries, Rational, UniPoly};
use crate::solver::CountingMatrix;

use super::operator::DifferentialOperator;
use super::D3Error;

/// Square matrix of operators, rows and columns numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    rows: Vec<Vec<DifferentialOperator>>,
}

impl OperatorMatrix {
    pub fn new(rows: Vec<Vec<DifferentialOperator>>) -> Result<Self, D3Error> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(D3Error::NotSquare);
        }
        Ok(OperatorMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &DifferentialOperator {
        &self.rows[i][j]
    }

    /// Deletes row `i` and the last column.
    fn minor_last_column(&self, i: usize) -> OperatorMatrix {
        let n = self.size();
        let rows = (0..n)
            .filter(|&r| r != i)
            .map(|r| self.rows[r][..n - 1].to_vec())
            .collect();
        OperatorMatrix { rows }
    }
}

/// DE - M^λ with M^λ = M + λE: the diagonal is D - (a_kk + λ)(Dt), the
/// subdiagonal -1, and above it -a_kl (Dt)^{l-k+1}.
pub fn build_pencil(matrix: &CountingMatrix, lambda: &Rational) -> OperatorMatrix {
    let dt = DifferentialOperator::dt();
    let rows = (0..4)
        .map(|k| {
            (0..4)
                .map(|l| {
                    if k == l + 1 {
                        return DifferentialOperator::scalar(Rational::from(-1));
                    }
                    if k > l + 1 {
                        return DifferentialOperator::zero();
                    }
                    let mut a = matrix.at(k as i64, l as i64);
                    if k == l {
                        a += lambda;
                    }
                    let entry = dt.pow((l - k + 1) as u32).scale(&-a);
                    if k == l {
                        DifferentialOperator::d().add(&entry)
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    OperatorMatrix { rows }
}

/// Cofactor expansion along the last column, each cofactor multiplied on
/// the right by its column entry; minors are expanded the same way.
pub fn right_determinant(m: &OperatorMatrix) -> DifferentialOperator {
    let n = m.size();
    if n == 1 {
        return m.rows[0][0].clone();
    }
    let mut total = DifferentialOperator::zero();
    for i in 0..n {
        let entry = &m.rows[i][n - 1];
        if entry.is_zero() {
            continue;
        }
        let term = right_determinant(&m.minor_last_column(i)).mul(entry);
        total = if (i + n - 1).is_multiple_of(2) {
            total.add(&term)
        } else {
            total.sub(&term)
        };
    }
    total
}

/// L with op = D·L.  Since D·t^b p(D) = t^b (D+b) p(D), each t-slice has
/// to be divisible by D + b.
#[allow(non_snake_case)]
pub fn left_divide_by_D(op: &DifferentialOperator) -> Result<DifferentialOperator, D3Error> {
    let mut quotient = DifferentialOperator::zero();
    let mut remainder = DifferentialOperator::zero();
    for (b, slice) in op.t_slices() {
        let divisor = UniPoly::new(vec![Rational::from(b), Rational::one()]);
        let (q, r) = slice.div_rem(&divisor);
        quotient = quotient.add(&DifferentialOperator::from_slice(b, &q));
        remainder = remainder.add(&DifferentialOperator::from_slice(b, &r));
    }
    if !remainder.is_zero() {
        return Err(D3Error::NotLeftDivisible { remainder });
    }
    Ok(quotient)
}

/// L^λ for a counting matrix.
pub fn d3_operator(
    matrix: &CountingMatrix,
    lambda: &Rational,
) -> Result<DifferentialOperator, D3Error> {
    left_divide_by_D(&right_determinant(&build_pencil(matrix, lambda)))
}

/// The solution Σ c_m t^m of L[Φ] = 0 with c_0 = 1, through t^{order-1}.
///
/// Writing L = Σ_j t^j P_j(D), the coefficients satisfy
/// P_0(m) c_m = -Σ_{j≥1} P_j(m-j) c_{m-j}.
pub fn frobenius_solve(op: &DifferentialOperator, order: usize) -> Result<PowerSeries, D3Error> {
    let slices = op.t_slices();
    let indicial = op.indicial_polynomial();
    if order == 0 {
        return Ok(PowerSeries::zero(0));
    }
    if !indicial.eval(&Rational::zero()).is_zero() {
        return Err(D3Error::ObstructedRecursion { m: 0 });
    }
    let mut c = vec![Rational::one()];
    for m in 1..order {
        let p0 = indicial.eval(&Rational::from(m as u64));
        let rhs: Rational = slices
            .iter()
            .filter(|(&j, _)| j >= 1 && j as usize <= m)
            .map(|(&j, p)| {
                let s = m - j as usize;
                p.eval(&Rational::from(s as u64)) * &c[s]
            })
            .sum();
        if p0.is_zero() {
            return Err(D3Error::ObstructedRecursion { m });
        }
        c.push(-(rhs / p0));
    }
    Ok(PowerSeries::from_coeffs(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(v: &[i64]) -> UniPoly {
        UniPoly::new(v.iter().map(|&x| Rational::from(x)).collect())
    }

    fn ops(v: &[&[i64]]) -> OperatorMatrix {
        OperatorMatrix::new(
            v.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| DifferentialOperator::scalar(x.into()))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    /// Gaussian elimination over the rationals.
    fn gauss_det(mut a: Vec<Vec<Rational>>) -> Rational {
        let n = a.len();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let (top, rest) = a.split_at_mut(col + 1);
            for row in rest {
                let f = &row[col] / &pivot;
                for (x, y) in row.iter_mut().zip(&top[col]).skip(col) {
                    *x -= &f * y;
                }
            }
        }
        det
    }

    #[test]
    fn scalar_matrices_give_ordinary_determinants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=5);
            let a: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rational::from(rng.gen_range(-9i64..=9)))
                        .collect()
                })
                .collect();
            let m = OperatorMatrix::new(
                a.iter()
                    .map(|r| {
                        r.iter()
                            .cloned()
                            .map(DifferentialOperator::scalar)
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            assert_eq!(
                right_determinant(&m),
                DifferentialOperator::scalar(gauss_det(a))
            );
        }
    }

    #[test]
    fn two_by_two_by_hand() {
        let c = Rational::from(3);
        let d = DifferentialOperator::d();
        let m = OperatorMatrix::new(vec![
            vec![d.clone(), DifferentialOperator::dt().scale(&-c.clone())],
            vec![DifferentialOperator::scalar((-1).into()), d.clone()],
        ])
        .unwrap();
        // D·D - (-1)·(-c Dt) = D² - c t(D+1)
        let want = d
            .pow(2)
            .sub(&DifferentialOperator::from_slice(1, &poly(&[3, 3])));
        assert_eq!(right_determinant(&m), want);
        assert_eq!(ops(&[&[1, 2], &[3, 4]]).size(), 2);
        assert_eq!(
            right_determinant(&ops(&[&[1, 2], &[3, 4]])),
            DifferentialOperator::scalar((-2).into())
        );
    }

    #[test]
    fn pencil_entries() {
        let m = build_pencil(&CountingMatrix::v10(), &Rational::zero());
        assert_eq!(m.get(0, 0), &DifferentialOperator::d());
        assert_eq!(
            m.get(0, 1),
            &DifferentialOperator::dt()
                .pow(2)
                .scale(&Rational::from(-156))
        );
        assert_eq!(m.get(2, 1), &DifferentialOperator::scalar((-1).into()));
        assert!(m.get(3, 0).is_zero());
    }

    #[test]
    fn left_division() {
        let d = DifferentialOperator::d();
        assert_eq!(left_divide_by_D(&d.pow(4)).unwrap(), d.pow(3));
        let x = DifferentialOperator::dt();
        assert_eq!(left_divide_by_D(&d.mul(&x)).unwrap(), x);
        assert!(matches!(
            left_divide_by_D(&DifferentialOperator::t()),
            Err(D3Error::NotLeftDivisible { .. })
        ));
    }

    #[test]
    fn known_operators() {
        let l = d3_operator(&CountingMatrix::v10(), &Rational::from(6)).unwrap();
        // D³ - 2t(2D+1)(11D²+11D+3) - 4t²(D+1)(2D+1)(2D+3)
        let s1 = poly(&[1, 2])
            .mul(&poly(&[3, 11, 11]))
            .scale(&Rational::from(-2));
        let s2 = poly(&[1, 1])
            .mul(&poly(&[1, 2]))
            .mul(&poly(&[3, 2]))
            .scale(&Rational::from(-4));
        let want = DifferentialOperator::d()
            .pow(3)
            .add(&DifferentialOperator::from_slice(1, &s1))
            .add(&DifferentialOperator::from_slice(2, &s2));
        assert_eq!(l, want);

        let l = d3_operator(&CountingMatrix::v14(), &Rational::from(4)).unwrap();
        let s1 = poly(&[1, 2])
            .mul(&poly(&[4, 13, 13]))
            .scale(&Rational::from(-1));
        let s2 = poly(&[1, 1])
            .mul(&poly(&[2, 3]))
            .mul(&poly(&[4, 3]))
            .scale(&Rational::from(-3));
        let want = DifferentialOperator::d()
            .pow(3)
            .add(&DifferentialOperator::from_slice(1, &s1))
            .add(&DifferentialOperator::from_slice(2, &s2));
        assert_eq!(l, want);
    }

    #[test]
    fn full_determinant_has_leading_d4() {
        let det = right_determinant(&build_pencil(&CountingMatrix::v10(), &Rational::zero()));
        assert_eq!(det.order(), Some(4));
        assert_eq!(det.indicial_polynomial(), poly(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn frobenius_examples() {
        let d3 = DifferentialOperator::d().pow(3);
        assert_eq!(frobenius_solve(&d3, 6).unwrap(), PowerSeries::one(6));

        let shifted = DifferentialOperator::from_slice(
            1,
            &poly(&[1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[1, 1])),
        );
        let geometric = frobenius_solve(&d3.sub(&shifted), 6).unwrap();
        assert_eq!(
            geometric,
            PowerSeries::from_coeffs(vec![Rational::one(); 6])
        );

        // P(m) = m(m-1) vanishes at 1
        let bad = DifferentialOperator::from_slice(0, &poly(&[0, -1, 1]));
        assert_eq!(
            frobenius_solve(&bad, 4),
            Err(D3Error::ObstructedRecursion { m: 1 })
        );
    }

    #[test]
    fn normalized_solutions() {
        let expect = |m: &CountingMatrix, lambda: i64, v: &[i64]| {
            let l = d3_operator(m, &Rational::from(lambda)).unwrap();
            let phi = frobenius_solve(&l, v.len()).unwrap();
            let want = PowerSeries::from_coeffs(v.iter().map(|&x| Rational::from(x)).collect());
            assert_eq!(phi, want, "lambda = {lambda}");
            assert!(l.apply(&phi).is_zero());
        };
        let v10 = CountingMatrix::v10();
        expect(
            &v10,
            0,
            &[1, 0, 78, 1320, 37746, 1051920, 31464780, 971757360],
        );
        expect(&v10, 6, &[1, 6, 114, 2940, 87570]);
        expect(&v10, -6, &[1, -6, 114, -300]);
        let v14 = CountingMatrix::v14();
        expect(&v14, 0, &[1, 0, 32, 312, 5520, 91680, 1651640, 30604560]);
        expect(&v14, 4, &[1, 4, 48, 760, 13840]);
    }
}
