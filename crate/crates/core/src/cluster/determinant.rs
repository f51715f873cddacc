use num_bigint::BigInt;

use super::{ClusterError, ClusterFrieze, Generator, LaurentElement, Monomial};
use crate::linalg::{bareiss_determinant, cofactor_determinant};

/// Largest n accepted by [`det_symbolic`].
pub const MAX_SYMBOLIC: usize = 8;

/// `M[i][j] = x_{ij}` with zero diagonal.
pub fn symbolic_matrix(cf: &ClusterFrieze) -> Vec<Vec<LaurentElement>> {
    let n = cf.n();
    (1..=n)
        .map(|i| (1..=n).map(|j| cf.get(i, j)).collect())
        .collect()
}

/// Determinant over the Laurent ring: cofactor expansion up to 5x5,
/// fraction-free elimination up to [`MAX_SYMBOLIC`].
pub fn det_symbolic(m: &[Vec<LaurentElement>]) -> Result<LaurentElement, ClusterError> {
    let n = m.len();
    if n > MAX_SYMBOLIC {
        return Err(ClusterError::TooLarge { n, max: MAX_SYMBOLIC });
    }
    Ok(if n <= 5 {
        cofactor_determinant(m)
    } else {
        bareiss_determinant(m)
    })
}

/// `-(-2)^(n-2) x_{12} x_{23} ... x_{n-1,n} x_{1n}`.
pub fn expected_det_symbolic(n: usize) -> LaurentElement {
    let boundary = (1..=n).fold(Monomial::one(), |acc, i| acc.mul(&Monomial::of(Generator::new(i, i % n + 1))));
    LaurentElement::from_terms([(boundary, -BigInt::from(-2).pow(n as u32 - 2))], Monomial::one())
}
