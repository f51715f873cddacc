//! Infinite friezes from triangulated surfaces.
//!
//! Punctured disks give the sequences that reduce to all 2s; annuli with
//! marked points on both boundaries give the rest. Both reductions cut ears
//! at entries equal to 1, and the ears come back as peripheral arcs.

mod annulus;
mod disk;

use num_bigint::BigInt;
use thiserror::Error;

pub use annulus::{annulus_from_quiddity, thicken, AnnulusTriangulation, GlueTrace, Mark};
pub use disk::{
    enumerate_disk_triangulations, quiddity_of_disk, star_triangulation, DiskArc, PuncturedDiskTriangulation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("{quiddity} is not the quiddity sequence of an infinite frieze ({classification})")]
    NotInfinite {
        quiddity: crate::QuidditySequence,
        classification: &'static str,
    },
    #[error("the spiralling triangulation has no inner boundary")]
    SpiralHasNoInnerQuiddity,
    #[error("position {position} is not in 1..={len}")]
    OutOfRange { position: usize, len: usize },
    #[error("thickening amount must be positive, got {0}")]
    NonPositiveThickening(BigInt),
    #[error("construction needs {arcs} arcs, more than the limit {max}")]
    TooLarge { arcs: BigInt, max: usize },
    #[error("a punctured disk needs at least {min} marked points without self-folded triangles, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arc {0} does not cut off any marked point")]
    DegenerateArc(DiskArc),
    #[error("arc {0} is listed twice")]
    DuplicateArc(DiskArc),
    #[error("arcs {0} and {1} cross")]
    CrossingArcs(DiskArc, DiskArc),
    #[error("found {found} arcs, a triangulation has {expected}")]
    WrongCount { found: usize, expected: usize },
    #[error("{0} arcs reach the puncture; at least 2 are needed to avoid self-folded triangles")]
    SelfFolded(usize),
    #[error("the arcs do not cut the surface into triangles")]
    NotTriangulated,
}
