//! The frieze matrix determinant of a triangulated polygon.

use frieze::polygon::{det_int, enumerate_triangulations, expected_det, frieze_matrix};

fn main() {
    for n in 3..=8 {
        let dets: Vec<_> = enumerate_triangulations(n)
            .unwrap()
            .iter()
            .map(|t| det_int(&frieze_matrix(t)))
            .collect();
        assert!(dets.iter().all(|d| d == &expected_det(n)));
        println!("n = {n}: {} triangulations, det = {}", dets.len(), expected_det(n));
    }
}
