use num_bigint::BigInt;
use serde::Serialize;

use super::PolygonTriangulation;
use crate::grid::{generate, FriezeGrid};
use crate::linalg::{bareiss_determinant, cofactor_determinant};

/// Symmetric matrix of frieze entries: `M[i][j] = a_{i,j}` for vertices
/// `i < j`, zero diagonal, 1 on the super/subdiagonal and in the corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriezeMatrix {
    pub n: usize,
    pub entries: Vec<Vec<BigInt>>,
}

/// Closed frieze of `t`, generated from its quiddity sequence.
pub fn frieze_of(t: &PolygonTriangulation) -> FriezeGrid {
    let grid = generate(&t.quiddity(), t.n());
    debug_assert_eq!(grid.classification().order(), Some(t.n()));
    grid
}

pub fn frieze_matrix(t: &PolygonTriangulation) -> FriezeMatrix {
    let n = t.n();
    let grid = frieze_of(t);
    let mut entries = vec![vec![BigInt::from(0); n]; n];
    for i in 1..=n {
        for j in i + 1..=n {
            let value = grid.a(i as isize, j as isize).expect("closed friezes have every entry");
            entries[i - 1][j - 1] = value.clone();
            entries[j - 1][i - 1] = value;
        }
    }
    FriezeMatrix { n, entries }
}

/// Exact determinant by fraction-free elimination. Matrices up to 5x5 are
/// also expanded by cofactors and the two results compared.
pub fn det_int(m: &FriezeMatrix) -> BigInt {
    let det = bareiss_determinant(&m.entries);
    if m.n <= 5 {
        assert_eq!(det, cofactor_determinant(&m.entries), "determinant routes disagree");
    }
    det
}

/// The value every triangulated n-gon gives: `-(-2)^(n-2)`.
pub fn expected_det(n: usize) -> BigInt {
    -BigInt::from(-2).pow(n as u32 - 2)
}
