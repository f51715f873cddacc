//! Quiddity sequences: the first nontrivial row of a frieze.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiddityError {
    #[error("a quiddity sequence needs at least one entry")]
    Empty,
    #[error("entry {index} is {value}, entries must be positive")]
    NonPositive { index: usize, value: BigInt },
    #[error("cannot parse quiddity entry {0:?}")]
    Parse(String),
    #[error("position {position} is out of range for a sequence of length {len}")]
    OutOfRange { position: usize, len: usize },
    #[error("cannot cut at position {position}: entry is {value}, not 1")]
    CutAtNonOne { position: usize, value: BigInt },
    #[error("cutting needs at least three entries, got {0}")]
    TooShortToCut(usize),
    #[error("cutting at position {position} leaves a non-positive neighbour")]
    CutLeavesNonPositive { position: usize },
}

/// Cyclic tuple of positive integers. Entry `k` (0-based) is the entry
/// attached to vertex `k + 1`, i.e. `a_{k,k+2}` in frieze coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<BigInt>", into = "Vec<BigInt>")]
pub struct QuidditySequence {
    entries: Vec<BigInt>,
}

impl QuidditySequence {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, QuiddityError> {
        if entries.is_empty() {
            return Err(QuiddityError::Empty);
        }
        if let Some((index, value)) = entries.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(QuiddityError::NonPositive {
                index,
                value: value.clone(),
            });
        }
        Ok(Self { entries })
    }

    pub fn from_ints<I>(entries: I) -> Result<Self, QuiddityError>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Self::new(entries.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    /// Cyclic access, any integer index.
    pub fn get(&self, index: isize) -> &BigInt {
        &self.entries[index.rem_euclid(self.len() as isize) as usize]
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// Rotate left by `k`: the result starts at entry `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_left(k % self.len());
        Self { entries }
    }

    /// Smallest `d` dividing the length with `q[i] = q[i + d]` for all `i`.
    ///
    /// The diamond rule only ever combines entries at fixed relative
    /// offsets, so any shift symmetry of the first row is inherited by
    /// every later row: the minimal period of the whole frieze equals
    /// the minimal period of its quiddity sequence.
    pub fn minimal_period(&self) -> usize {
        minimal_period(&self.entries)
    }

    /// Glue an ear after 1-based position `position`: `(.., a_i + 1, 1, a_{i+1} + 1, ..)`.
    pub fn glue(&self, position: usize) -> Result<Self, QuiddityError> {
        let n = self.len();
        if position == 0 || position > n {
            return Err(QuiddityError::OutOfRange { position, len: n });
        }
        Ok(Self {
            entries: glue_raw(&self.entries, position - 1),
        })
    }

    /// Remove the entry 1 at 1-based `position`, decrementing both neighbours.
    pub fn cut(&self, position: usize) -> Result<Self, QuiddityError> {
        let n = self.len();
        if position == 0 || position > n {
            return Err(QuiddityError::OutOfRange { position, len: n });
        }
        let value = &self.entries[position - 1];
        if !value.is_one() {
            return Err(QuiddityError::CutAtNonOne {
                position,
                value: value.clone(),
            });
        }
        if n < 3 {
            return Err(QuiddityError::TooShortToCut(n));
        }
        let entries = cut_raw(&self.entries, position - 1);
        Self::new(entries).map_err(|_| QuiddityError::CutLeavesNonPositive { position })
    }
}

pub(crate) fn minimal_period<T: PartialEq>(entries: &[T]) -> usize {
    let n = entries.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (0..n).all(|i| entries[i] == entries[(i + d) % n]))
        .unwrap_or(n)
}

/// Insert a 1 after 0-based index `i`, incrementing its cyclic neighbours.
pub(crate) fn glue_raw(entries: &[BigInt], i: usize) -> Vec<BigInt> {
    let n = entries.len();
    let mut out = entries.to_vec();
    out[i] += 1;
    out[(i + 1) % n] += 1;
    out.insert(i + 1, BigInt::one());
    out
}

/// Remove 0-based index `i` and decrement its cyclic neighbours. For a
/// sequence of length 2 both neighbours are the same entry, which is then
/// decremented twice; this is the cut of the periodic bi-infinite sequence.
pub(crate) fn cut_raw(entries: &[BigInt], i: usize) -> Vec<BigInt> {
    let n = entries.len();
    debug_assert!(n >= 2);
    let mut out = entries.to_vec();
    out[(i + n - 1) % n] -= 1;
    out[(i + 1) % n] -= 1;
    out.remove(i);
    out
}

impl fmt::Display for QuidditySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Parses `4,1,2,2,2,1`, optionally wrapped in parentheses or brackets.
impl FromStr for QuidditySequence {
    type Err = QuiddityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let entries = trimmed
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<BigInt>()
                    .map_err(|_| QuiddityError::Parse(part.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<BigInt>> for QuidditySequence {
    type Error = QuiddityError;

    fn try_from(entries: Vec<BigInt>) -> Result<Self, Self::Error> {
        Self::new(entries)
    }
}

impl From<QuidditySequence> for Vec<BigInt> {
    fn from(q: QuidditySequence) -> Self {
        q.entries
    }
}
