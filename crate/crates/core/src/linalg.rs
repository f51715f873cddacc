//! Determinants over exact integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// An integral domain with exact division.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / divisor` when the quotient lies in the domain.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
///
/// Every intermediate entry is a minor of the input, so each division is
/// exact; a failed division means the arithmetic is broken and panics.
pub fn bareiss_determinant<T: ExactDomain>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    if n == 0 {
        return T::one();
    }
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut previous = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = numerator
                    .exact_div(&previous)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = T::zero();
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential; meant for small
/// matrices and as a cross-check.
pub fn cofactor_determinant<T: ExactDomain>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    match n {
        0 => T::one(),
        1 => matrix[0][0].clone(),
        _ => {
            let mut total = T::zero();
            for col in 0..n {
                if matrix[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = matrix[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = matrix[0][col].mul(&cofactor_determinant(&minor));
                total = if col % 2 == 0 {
                    total.add(&term)
                } else {
                    total.sub(&term)
                };
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        let m = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(2));
        assert_eq!(cofactor_determinant(&m), BigInt::from(2));
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(bareiss_determinant(&singular), BigInt::from(0));
        let zero_column = mat(&[&[0, 1], &[0, 3]]);
        assert_eq!(bareiss_determinant(&zero_column), BigInt::from(0));
    }

    proptest::proptest! {
        #[test]
        fn bareiss_agrees_with_laplace(
            n in 1usize..6,
            cells in proptest::collection::vec(-5i64..6, 36),
        ) {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(cells[i * 6 + j])).collect())
                .collect();
            proptest::prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
        }
    }
}
