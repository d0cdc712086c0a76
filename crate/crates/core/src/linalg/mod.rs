//! Exact determinants, characteristic polynomials and adjugate traces.
//!
//! All arithmetic runs over arbitrary-precision integers: rational inputs are
//! scaled to integer matrices first and the scale is divided back out at the
//! end, so no intermediate rational reduction is ever needed.

mod matrix;
mod polynomial;

pub use matrix::{MatrixError, RationalMatrix};
pub use polynomial::RationalPolynomial;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::Rational;

type IntMatrix = Vec<Vec<BigInt>>;

fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn scaled_row(row: &[Rational], scale: &BigInt) -> Vec<BigInt> {
    row.iter()
        .map(|x| x.numer() * (scale / x.denom()))
        .collect()
}

/// Fraction-free Gaussian elimination. Every division is exact.
fn bareiss(mut a: IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square matrix; the 0x0 determinant is 1.
pub fn determinant(a: &RationalMatrix) -> Result<Rational, MatrixError> {
    let n = a.order()?;
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let l = lcm_of_denominators(a.row(i));
        rows.push(scaled_row(a.row(i), &l));
        scale *= l;
    }
    Ok(Rational::new(bareiss(rows), scale))
}

/// Characteristic polynomial `det(λI - A)` by Faddeev–LeVerrier.
///
/// The recurrence runs on `D·A` for the common denominator `D`, where every
/// division by `k` is exact over the integers; coefficient `k` of the result
/// is then the integer coefficient divided by `D^(n-k)`.
pub fn char_poly(a: &RationalMatrix) -> Result<RationalPolynomial, MatrixError> {
    let n = a.order()?;
    let denom = lcm_of_denominators((0..n).flat_map(|i| a.row(i)));
    let b: IntMatrix = (0..n).map(|i| scaled_row(a.row(i), &denom)).collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_k; starts as M_1 = I.
    let mut m: IntMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        let bm = int_mul(&b, &m);
        let tr: BigInt = (0..n).map(|i| &bm[i][i]).sum();
        let (q, r) = (-tr).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier trace not divisible by {k}");
        coeffs[n - k] = q;
        if k < n {
            m = bm;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &coeffs[n - k];
            }
        }
    }
    let out = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| Rational::new(c, Pow::pow(&denom, (n - k) as u32)))
        .collect();
    Ok(RationalPolynomial::new(out))
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += x * &b[k][j];
                }
            }
        }
    }
    out
}

/// `tr(adj A)`, read off the linear coefficient `a₁` of the characteristic
/// polynomial as `(-1)^(n-1)·a₁`.
pub fn adjugate_trace(a: &RationalMatrix) -> Result<Rational, MatrixError> {
    let n = a.order()?;
    if n == 0 {
        return Err(MatrixError::Empty);
    }
    let a1 = char_poly(a)?.coefficient(1);
    Ok(if n % 2 == 1 { a1 } else { -a1 })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
    }

    fn square_matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
        (0..=max).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(small_rational(), n), n)
                .prop_map(RationalMatrix::from_rows)
        })
    }

    #[test]
    fn determinant_examples() {
        let a = RationalMatrix::from_ints(&[&[2, -1], &[-1, 2]]);
        assert_eq!(determinant(&a).unwrap(), rat(3, 1));
        let empty = RationalMatrix::from_rows(vec![]);
        assert_eq!(determinant(&empty).unwrap(), rat(1, 1));
        // needs a row swap
        let b = RationalMatrix::from_ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(determinant(&b).unwrap(), rat(-2, 1));
        let singular = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&singular).unwrap(), rat(0, 1));
    }

    #[test]
    fn determinant_of_frozen_4x4() {
        // Expected value from the cofactor-expansion oracle.
        let a = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(2, 7)],
            vec![rat(4, 5), rat(1, 3), rat(-1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 9), rat(5, 1), rat(-6, 5)],
            vec![rat(-1, 4), rat(0, 1), rat(3, 8), rat(1, 1)],
        ]);
        let expected = oracle::laplace(&a);
        assert_eq!(expected, rat(167_773, 12_600));
        assert_eq!(determinant(&a).unwrap(), expected);
    }

    #[test]
    fn non_square_is_rejected() {
        let m = RationalMatrix::zeros(vec!["a".into()], vec!["x".into(), "y".into()]);
        assert_eq!(determinant(&m), Err(MatrixError::NotSquare(1, 2)));
        assert!(char_poly(&m).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let one = RationalMatrix::from_rows(vec![vec![rat(5, 3)]]);
        assert_eq!(
            char_poly(&one).unwrap().coefficients(),
            &[rat(-5, 3), rat(1, 1)]
        );
        let a = RationalMatrix::from_ints(&[&[2, -1], &[-1, 2]]);
        assert_eq!(
            char_poly(&a).unwrap(),
            RationalPolynomial::from_ints(&[3, -4, 1])
        );
        // triangular: λ(λ-1)^2 = λ^3 - 2λ^2 + λ
        let t = RationalMatrix::from_ints(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 0]]);
        assert_eq!(
            char_poly(&t).unwrap(),
            RationalPolynomial::from_ints(&[0, 1, -2, 1])
        );
        let empty = RationalMatrix::from_rows(vec![]);
        assert_eq!(char_poly(&empty).unwrap(), RationalPolynomial::one());
    }

    #[test]
    fn adjugate_trace_examples() {
        let one = RationalMatrix::from_ints(&[&[5]]);
        assert_eq!(adjugate_trace(&one).unwrap(), rat(1, 1));
        let a = RationalMatrix::from_ints(&[&[2, -1], &[-1, 2]]);
        assert_eq!(adjugate_trace(&a).unwrap(), rat(4, 1));
        let empty = RationalMatrix::from_rows(vec![]);
        assert_eq!(adjugate_trace(&empty), Err(MatrixError::Empty));
    }

    proptest! {
        #[test]
        fn determinant_matches_laplace(a in square_matrix(5)) {
            prop_assert_eq!(determinant(&a).unwrap(), oracle::laplace(&a));
        }

        #[test]
        fn char_poly_is_monic_and_matches_determinant(a in square_matrix(5)) {
            let n = a.rows();
            let p = char_poly(&a).unwrap();
            prop_assert_eq!(p.degree(), Some(n));
            prop_assert!(p.is_monic());
            let det = determinant(&a).unwrap();
            let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            prop_assert_eq!(p.eval(&rat(0, 1)), sign * det);
            // degree-n polynomials agreeing at n+1 points are equal
            for t in 0..=n as i64 {
                let x = rat(2 * t - 3, 2);
                let shifted = &RationalMatrix::identity(a.row_labels().to_vec()).scaled(&x) - &a;
                prop_assert_eq!(p.eval(&x), oracle::laplace(&shifted));
            }
        }

        #[test]
        fn adjugate_trace_is_sum_of_principal_minors(a in square_matrix(5)) {
            prop_assume!(a.rows() >= 1);
            let minors: Rational = a
                .row_labels()
                .iter()
                .map(|l| determinant(&a.delete_row_col(l).unwrap()).unwrap())
                .sum();
            prop_assert_eq!(adjugate_trace(&a).unwrap(), minors);
        }
    }
}
