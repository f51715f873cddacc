//! Cluster variables as Laurent polynomials and the symbolic determinant.

use frieze::cluster::{cluster_frieze, cluster_variable, det_symbolic, specialize_to_one, symbolic_matrix};
use frieze::polygon::PolygonTriangulation;

fn main() {
    let t = PolygonTriangulation::new(5, [(1, 3), (1, 4)]).unwrap();
    for (i, j) in [(2, 4), (2, 5), (3, 5)] {
        println!("x{i}{j} = {}", cluster_variable(&t, i, j).unwrap());
    }
    let cf = cluster_frieze(&t);
    println!("det = {}", det_symbolic(&symbolic_matrix(&cf)).unwrap());
    let grid = specialize_to_one(&cf);
    println!("at one: {:?}", grid.rows()[1]);
}
