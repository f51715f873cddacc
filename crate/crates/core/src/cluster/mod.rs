//! Cluster variables of polygon diagonals.
//!
//! Each boundary edge and each diagonal of an initial triangulation `T` gets
//! a generator; every other diagonal is expanded through Ptolemy exchanges
//! into a Laurent polynomial in those generators. Setting every generator to
//! 1 recovers the integer frieze of `T`.

mod determinant;
mod laurent;
mod variables;

use thiserror::Error;

pub use determinant::{det_symbolic, expected_det_symbolic, symbolic_matrix, MAX_SYMBOLIC};
pub use laurent::{Generator, LaurentElement, Monomial, ParseLaurentError};
pub use variables::{
    cluster_frieze, cluster_variable, cluster_variable_with, specialize_to_one, ClusterFrieze,
    CrossingChoice,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("symbolic determinant is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a segment needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
}
