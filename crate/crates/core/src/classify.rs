//! Certified classification of quiddity sequences.
//!
//! Closed friezes are recognised by cutting ears down to `(1,1,1)`.
//! Everything else is reduced by cutting at the smallest-index 1 until
//! either all entries are at least 2 (infinite frieze) or the reduction
//! gets stuck (invalid).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::grid::{generate, ClassKind, Classification, Invalidity, ReductionFailure};
use crate::quiddity::{cut_raw, minimal_period, QuidditySequence};

/// Order of the closed frieze with this first row, if there is one.
///
/// A closed frieze of order `N` has a quiddity sequence of length `N` with
/// sum `3(N - 2)`. Writing `N = m p` for the minimal period `p` with block
/// sum `S` gives `m (3p - S) = 6`, so `m` is one of 1, 2, 3, 6. The block
/// is repeated `m` times and cut down to `(1,1,1)`.
pub(crate) fn closed_order(entries: &[BigInt]) -> Option<usize> {
    if entries.iter().any(|e| !e.is_positive()) {
        return None;
    }
    let p = minimal_period(entries);
    let block_sum: BigInt = entries[..p].iter().sum();
    let deficit = (BigInt::from(3 * p) - block_sum).to_i64()?;
    if deficit <= 0 || 6 % deficit != 0 {
        return None;
    }
    let copies = (6 / deficit) as usize;
    let order = copies * p;
    let mut seq: Vec<BigInt> = entries[..p].iter().cycle().take(order).cloned().collect();
    while seq.len() > 3 {
        let i = seq.iter().position(One::is_one)?;
        seq = cut_raw(&seq, i);
        if seq.iter().any(|e| !e.is_positive()) {
            return None;
        }
    }
    seq.iter().all(One::is_one).then_some(order)
}

/// A sequence reduced to entries all at least 2, plus the 0-based cut
/// positions in the order they were applied. Undoing the cuts in reverse
/// with [`crate::quiddity::QuidditySequence::glue`] restores the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: Vec<BigInt>,
    pub cuts: Vec<usize>,
}

fn reduce(q: &QuidditySequence) -> Result<Reduction, Classification> {
    let mut cur = q.entries().to_vec();
    let mut cuts = Vec::new();
    loop {
        if let Some(position) = cur.iter().position(|e| !e.is_positive()) {
            return Err(Classification::Invalid(Invalidity::Reduction {
                reason: ReductionFailure::NonPositiveEntry,
                position,
                reduced: cur,
            }));
        }
        if let Some(order) = closed_order(&cur) {
            if cuts.is_empty() {
                return Err(Classification::Closed { order });
            }
            let position = cur.iter().position(One::is_one).unwrap_or(0);
            return Err(Classification::Invalid(Invalidity::Reduction {
                reason: ReductionFailure::ReducesToClosed,
                position,
                reduced: cur,
            }));
        }
        match cur.iter().position(One::is_one) {
            None => return Ok(Reduction { reduced: cur, cuts }),
            Some(i) => {
                // length 1 with entry 1 is closed, handled above
                cur = cut_raw(&cur, i);
                cuts.push(i);
            }
        }
    }
}

/// Classify `q` as the first row of a closed frieze (with its order), an
/// infinite integral frieze, or neither.
///
/// Infinite friezes split further: a reduced sequence of all 2s comes from
/// a punctured disk, anything else from an annulus with marked points on
/// both boundaries.
pub fn classify(q: &QuidditySequence) -> Classification {
    match reduce(q) {
        Ok(_) => Classification::Infinite,
        Err(c) => c,
    }
}

/// Reduce an infinite quiddity sequence to entries all at least 2.
pub fn reduce_infinite(q: &QuidditySequence) -> Result<Reduction, Classification> {
    reduce(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("classification {certified:?} disagrees with simulation {simulated:?} for {quiddity}")]
pub struct ClassifyMismatch {
    pub quiddity: QuidditySequence,
    pub certified: ClassKind,
    pub simulated: ClassKind,
}

/// Classify and confirm the answer by generating rows by the diamond rule.
/// Infinite answers are confirmed up to `depth` rows; closed ones up to
/// their closing row.
pub fn cross_check(q: &QuidditySequence, depth: usize) -> Result<Classification, ClassifyMismatch> {
    let certified = classify(q);
    let rows = match certified {
        Classification::Closed { order } => depth.max(order - 1),
        _ => depth,
    };
    let simulated = generate(q, rows).classification().kind();
    if simulated == certified.kind() {
        Ok(certified)
    } else {
        Err(ClassifyMismatch {
            quiddity: q.clone(),
            certified: certified.kind(),
            simulated,
        })
    }
}
