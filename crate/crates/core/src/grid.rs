//! Frieze rows generated by the diamond rule.
//!
//! Coordinates: `rows[r][i] = a_{i, i+r+1}` with `i` taken modulo the
//! quiddity length. Row 1 is the quiddity sequence, and rows 0, -1, -2
//! (all 1, all 0, all -1) are virtual. The diamond
//!
//! ```text
//!         a_{i+1,j}
//!  a_{i,j}         a_{i+1,j+1}
//!         a_{i,j+1}
//! ```
//!
//! satisfies `a_{i,j} a_{i+1,j+1} - a_{i+1,j} a_{i,j+1} = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiddity::QuidditySequence;

/// Why a single diamond could not be completed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondFailure {
    InexactDivision,
    NonPositive,
    ZeroDivisor,
}

impl std::fmt::Display for DiamondFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DiamondFailure::InexactDivision => "division is not exact",
            DiamondFailure::NonPositive => "entry is not positive",
            DiamondFailure::ZeroDivisor => "divisor is zero",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowError {
    #[error("inexact division at position {0}")]
    InexactDivision(usize),
    #[error("non-positive entry at position {0}")]
    NonPositive(usize),
    #[error("zero divisor at position {0}")]
    ZeroDivisor(usize),
    #[error("rows have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
}

impl RowError {
    fn failure(&self) -> (DiamondFailure, usize) {
        match *self {
            RowError::InexactDivision(i) => (DiamondFailure::InexactDivision, i),
            RowError::NonPositive(i) => (DiamondFailure::NonPositive, i),
            RowError::ZeroDivisor(i) => (DiamondFailure::ZeroDivisor, i),
            RowError::LengthMismatch(..) => unreachable!("generate always passes equal lengths"),
        }
    }
}

/// Why a sequence does not give an integral frieze.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Invalidity {
    /// The first failing diamond, in row-major order, found by simulation.
    Diamond {
        reason: DiamondFailure,
        row: usize,
        index: usize,
    },
    /// Reduction by cutting at entries 1 got stuck. `position` is the
    /// 0-based index in `reduced` where it happened.
    Reduction {
        reason: ReductionFailure,
        position: usize,
        reduced: Vec<BigInt>,
    },
}

impl std::fmt::Display for Invalidity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Invalidity::Diamond { reason, row, index } => {
                write!(f, "diamond rule fails in row {row} at position {index}: {reason}")
            }
            Invalidity::Reduction {
                reason,
                position,
                reduced,
            } => {
                let listed: Vec<String> = reduced.iter().map(ToString::to_string).collect();
                write!(f, "{reason} at position {position} after reducing to ({})", listed.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionFailure {
    /// Cutting produced an entry that is zero or negative.
    NonPositiveEntry,
    /// The reduced sequence is the quiddity of a closed frieze although the
    /// original is not; gluing cannot restore a consistent frieze.
    ReducesToClosed,
}

impl std::fmt::Display for ReductionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReductionFailure::NonPositiveEntry => "cutting leaves a non-positive entry",
            ReductionFailure::ReducesToClosed => "reduces to the quiddity of a closed frieze",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Closed { order: usize },
    Infinite,
    Invalid(Invalidity),
}

/// `closed (order n)`, `infinite`, or `invalid: <reason>`.
impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Closed { order } => write!(f, "closed (order {order})"),
            Classification::Infinite => f.write_str("infinite"),
            Classification::Invalid(why) => write!(f, "invalid: {why}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Closed(usize),
    Infinite,
    Invalid,
}

impl Classification {
    pub fn kind(&self) -> ClassKind {
        match self {
            Classification::Closed { order } => ClassKind::Closed(*order),
            Classification::Infinite => ClassKind::Infinite,
            Classification::Invalid(_) => ClassKind::Invalid,
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            Classification::Closed { order } => Some(*order),
            _ => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Classification::Closed { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Classification::Infinite)
    }

    pub fn is_invalid(&self) -> bool {
        matches!(self, Classification::Invalid(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Classification::Closed { .. } => "closed",
            Classification::Infinite => "infinite",
            Classification::Invalid(_) => "invalid",
        }
    }
}

/// Solve the diamond rule for the row below `cur`:
/// `out[i] = (cur[i] * cur[i+1] - 1) / prev[i+1]`, indices cyclic.
///
/// A row of zeros is returned as a success (it closes the frieze). Any
/// other row must be exact and strictly positive; the first offending
/// position is reported.
pub fn next_row(prev: &[BigInt], cur: &[BigInt]) -> Result<Vec<BigInt>, RowError> {
    if prev.len() != cur.len() {
        return Err(RowError::LengthMismatch(prev.len(), cur.len()));
    }
    let n = cur.len();
    let mut out = Vec::with_capacity(n);
    let mut first_failure: Option<RowError> = None;
    for i in 0..n {
        let j = (i + 1) % n;
        let divisor = &prev[j];
        let numerator = &cur[i] * &cur[j] - 1u32;
        if divisor.is_zero() {
            return Err(first_failure.unwrap_or(RowError::ZeroDivisor(i)));
        }
        let (quotient, remainder) = numerator.div_rem(divisor);
        if !remainder.is_zero() {
            return Err(first_failure.unwrap_or(RowError::InexactDivision(i)));
        }
        if !quotient.is_positive() && first_failure.is_none() {
            first_failure = Some(RowError::NonPositive(i));
        }
        out.push(quotient);
    }
    match first_failure {
        Some(_) if out.iter().all(Zero::is_zero) => Ok(out),
        Some(err) => Err(err),
        None => Ok(out),
    }
}

/// A generated frieze: the quiddity sequence, the stored rows 1, 2, ...
/// and the classification reached while generating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeGrid {
    quiddity: QuidditySequence,
    rows: Vec<Vec<BigInt>>,
    classification: Classification,
}

impl FriezeGrid {
    /// Assemble a grid without checking the diamond rule.
    pub fn from_parts(
        quiddity: QuidditySequence,
        rows: Vec<Vec<BigInt>>,
        classification: Classification,
    ) -> Self {
        Self {
            quiddity,
            rows,
            classification,
        }
    }

    pub fn quiddity(&self) -> &QuidditySequence {
        &self.quiddity
    }

    /// Stored rows; `rows()[0]` is row 1.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn width(&self) -> usize {
        self.quiddity.len()
    }

    /// Index of the last row that can be read through [`FriezeGrid::entry`]
    /// without extrapolation. Closed friezes extend to row `order`, the row
    /// of -1s below the closing zeros.
    pub fn last_row(&self) -> isize {
        match self.classification {
            Classification::Closed { order } => order as isize,
            _ => self.rows.len() as isize,
        }
    }

    /// Entry in row `r` at position `i` (cyclic), `r >= -2`.
    ///
    /// For a closed frieze of order `N` every row is available through
    /// `a_{i,j+N} = -a_{i,j}`; otherwise rows past the stored ones are `None`.
    pub fn entry(&self, r: isize, i: isize) -> Option<BigInt> {
        if r < -2 {
            return None;
        }
        if let Classification::Closed { order } = self.classification {
            let order = order as isize;
            let d = r + 1;
            let flips = d.div_euclid(order);
            let reduced = d.rem_euclid(order) - 1;
            let value = self.raw_entry(reduced, i)?;
            return Some(if flips % 2 == 0 { value } else { -value });
        }
        self.raw_entry(r, i)
    }

    fn raw_entry(&self, r: isize, i: isize) -> Option<BigInt> {
        match r {
            -2 => Some(-BigInt::one()),
            -1 => Some(BigInt::zero()),
            0 => Some(BigInt::one()),
            _ => {
                let row = self.rows.get(r as usize - 1)?;
                Some(row[i.rem_euclid(row.len() as isize) as usize].clone())
            }
        }
    }

    /// Entry `a_{i,j}` in frieze coordinates.
    pub fn a(&self, i: isize, j: isize) -> Option<BigInt> {
        self.entry(j - i - 1, i)
    }
}

/// Fill rows by the diamond rule until the frieze closes, fails, or
/// `max_rows` rows (counting the quiddity row) exist. In the last case the
/// classification is `Infinite`, which is provisional: [`crate::classify`]
/// certifies it. `max_rows` below 1 is treated as 1.
pub fn generate(q: &QuidditySequence, max_rows: usize) -> FriezeGrid {
    let max_rows = max_rows.max(1);
    let n = q.len();
    let mut rows: Vec<Vec<BigInt>> = vec![q.entries().to_vec()];
    let mut prev = vec![BigInt::one(); n];
    let mut classification = Classification::Infinite;
    while rows.len() < max_rows {
        let cur = rows.last().expect("at least the quiddity row");
        match next_row(&prev, cur) {
            Ok(row) => {
                let closes = row.iter().all(Zero::is_zero);
                prev = cur.clone();
                rows.push(row);
                if closes {
                    classification = Classification::Closed {
                        order: rows.len() + 1,
                    };
                    break;
                }
            }
            Err(err) => {
                let (reason, index) = err.failure();
                classification = Classification::Invalid(Invalidity::Diamond {
                    reason,
                    row: rows.len() + 1,
                    index,
                });
                break;
            }
        }
    }
    FriezeGrid {
        quiddity: q.clone(),
        rows,
        classification,
    }
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// True iff every 3x3 diamond `(a_{i+x, j+y})_{x,y in 0..3}` whose rows
/// lie in the readable range (from row -2 to [`FriezeGrid::last_row`]) has
/// determinant zero.
pub fn check_tame(f: &FriezeGrid) -> bool {
    let n = f.width() as isize;
    let last = f.last_row();
    // centre row c uses rows c-2 ..= c+2
    for c in 0..=(last - 2) {
        for i in 0..n {
            let mut m: [[BigInt; 3]; 3] = Default::default();
            for (x, row) in m.iter_mut().enumerate() {
                for (y, cell) in row.iter_mut().enumerate() {
                    let (x, y) = (x as isize, y as isize);
                    match f.entry(c + y - x, i + x) {
                        Some(v) => *cell = v,
                        None => return false,
                    }
                }
            }
            if !det3(&m).is_zero() {
                return false;
            }
        }
    }
    true
}
