//! Conway–Coxeter frieze patterns over exact integers.
//!
//! A frieze is a staggered array that starts with a row of 0s and a row of
//! 1s, and in which every diamond
//!
//! ```text
//!     b
//!   a   d
//!     c
//! ```
//!
//! satisfies `ad - bc = 1`. The first nontrivial row (the quiddity
//! sequence) determines everything else. This crate
//!
//! * generates and classifies friezes ([`grid`], [`classify`]),
//! * computes growth coefficients of infinite friezes ([`growth`]),
//! * realises closed friezes by polygon triangulations, with matching
//!   numbers and the frieze determinant ([`polygon`]),
//! * lifts the whole picture to Laurent polynomials in cluster variables
//!   ([`cluster`]),
//! * realises infinite friezes by triangulations of punctured disks and
//!   annuli ([`annulus`]).
//!
//! ```
//! use frieze::{generate, QuidditySequence};
//!
//! let q: QuidditySequence = "4,1,2,2,2,1".parse().unwrap();
//! let grid = generate(&q, 10);
//! assert_eq!(grid.classification().order(), Some(6));
//! ```

pub mod annulus;
pub mod classify;
pub mod cli;
pub mod cluster;
pub mod grid;
pub mod growth;
pub mod linalg;
pub mod polygon;
pub mod quiddity;

pub use classify::{classify, cross_check};
pub use grid::{check_tame, generate, next_row, ClassKind, Classification, FriezeGrid};
pub use growth::{growth_closed_form, growth_rate, growth_sequence, GrowthSequence};
pub use quiddity::QuidditySequence;
