//! Triangulated polygons and closed friezes.
//!
//! Vertices are labelled `1..=n` clockwise. The quiddity sequence of a
//! triangulation counts triangles at each vertex; the frieze it generates
//! has `a_{i,j}` equal to the number of matchings between the vertices
//! strictly between `i` and `j` and the triangles.

mod matching;
mod matrix;
mod triangulation;

use thiserror::Error;

use crate::quiddity::{QuiddityError, QuidditySequence};

pub use matching::{matchings, MatchingSet};
pub use matrix::{det_int, expected_det, frieze_matrix, frieze_of, FriezeMatrix};
pub use triangulation::{
    catalan, crosses, enumerate_triangulations, quiddity_of, triangulation_from_quiddity, validate,
    Diagonal, PolygonTriangulation, Triangle, MAX_ENUMERATION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0:?} is a boundary edge or degenerate, not a diagonal")]
    NotADiagonal(Diagonal),
    #[error("diagonal {0:?} is listed twice")]
    DuplicateDiagonal(Diagonal),
    #[error("diagonals {0:?} and {1:?} cross")]
    CrossingDiagonals(Diagonal, Diagonal),
    #[error("found {found} diagonals, a triangulation has {expected}")]
    WrongCount { found: usize, expected: usize },
    #[error("refusing to enumerate triangulations of a {n}-gon (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("{quiddity} is not the quiddity sequence of a closed frieze of its own length ({classification})")]
    NotClosed {
        quiddity: QuidditySequence,
        classification: &'static str,
    },
    #[error("vertices {0} and {1} are equal or adjacent")]
    AdjacentVertices(usize, usize),
}

/// Glue an ear after 1-based `position`; see [`QuidditySequence::glue`].
pub fn glue(q: &QuidditySequence, position: usize) -> Result<QuidditySequence, QuiddityError> {
    q.glue(position)
}

/// Cut the ear at 1-based `position`; see [`QuidditySequence::cut`].
pub fn cut(q: &QuidditySequence, position: usize) -> Result<QuidditySequence, QuiddityError> {
    q.cut(position)
}
