//! Growth coefficients of integral friezes.
//!
//! For a frieze with minimal period `n0` the differences
//! `s_k = a_{i,i+k n0+1} - a_{i+1,i+k n0}` do not depend on `i`, start at
//! `s_0 = 2`, and satisfy `s_{k+2} = s_1 s_{k+1} - s_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::classify;
use crate::grid::{generate, Classification};
use crate::quiddity::QuidditySequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("{0} is not the quiddity sequence of an integral frieze")]
    NotAFrieze(QuidditySequence),
    /// The differences in rows `k n0` and `k n0 - 2` are not constant.
    /// Integral friezes never trigger this.
    #[error("differences at level {k} disagree between positions {i} and {j}")]
    NotConstant { k: usize, i: usize, j: usize },
    #[error("growth rate needs s >= 3, got {0}")]
    Domain(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSequence {
    /// The period used for the levels, normally the minimal one.
    pub n0: usize,
    /// `s_0, s_1, ..., s_K`.
    pub s_values: Vec<BigInt>,
}

impl GrowthSequence {
    /// The growth coefficient `s = s_1`, if computed.
    pub fn s(&self) -> Option<&BigInt> {
        self.s_values.get(1)
    }
}

/// Compute `s_0..=s_K` from generated rows, using the minimal period.
pub fn growth_sequence(q: &QuidditySequence, k_max: usize) -> Result<GrowthSequence, GrowthError> {
    growth_sequence_with_period(q, q.minimal_period(), k_max)
}

/// Same as [`growth_sequence`] with an explicit period, which must be a
/// multiple of the minimal one (for instance the length of `q`).
pub fn growth_sequence_with_period(
    q: &QuidditySequence,
    period: usize,
    k_max: usize,
) -> Result<GrowthSequence, GrowthError> {
    let grid = match classify(q) {
        Classification::Invalid(_) => return Err(GrowthError::NotAFrieze(q.clone())),
        Classification::Closed { order } => generate(q, order),
        Classification::Infinite => generate(q, (k_max * period).max(1)),
    };
    let n = q.len() as isize;
    let mut s_values = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let level = (k * period) as isize;
        let diffs: Vec<BigInt> = (0..n)
            .map(|i| {
                let lower = grid.entry(level, i).expect("rows generated up to k_max * period");
                let upper = grid.entry(level - 2, i + 1).expect("rows generated up to k_max * period");
                lower - upper
            })
            .collect();
        if let Some(j) = diffs.iter().position(|d| d != &diffs[0]) {
            return Err(GrowthError::NotConstant { k, i: 0, j });
        }
        s_values.push(diffs.into_iter().next().expect("non-empty sequence"));
    }
    Ok(GrowthSequence { n0: period, s_values })
}

/// Explicit Chebyshev-type formula
/// `s_k = s^k + k * sum_{l=1}^{floor(k/2)} (-1)^l / (k-l) * C(k-l, l) * s^(k-2l)`,
/// with `s_0 = 2`.
pub fn growth_closed_form(s: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return BigInt::from(2);
    }
    let mut total = s.pow(k);
    for l in 1..=k / 2 {
        let weighted = BigInt::from(k) * binomial(k - l, l);
        let (coefficient, remainder) = weighted.div_rem(&BigInt::from(k - l));
        assert!(remainder.is_zero(), "k C(k-l, l) is divisible by k-l");
        let term = coefficient * s.pow(k - 2 * l);
        if l % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Dominant root `(s + sqrt(s^2 - 4)) / 2` of `x^2 = s x - 1`, the limit of
/// `s_{k+1} / s_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRate {
    s: BigInt,
}

pub fn growth_rate(s: &BigInt) -> Result<GrowthRate, GrowthError> {
    if *s < BigInt::from(3) {
        return Err(GrowthError::Domain(s.clone()));
    }
    Ok(GrowthRate { s: s.clone() })
}

impl GrowthRate {
    pub fn coefficient(&self) -> &BigInt {
        &self.s
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.s.to_f64().unwrap_or(f64::INFINITY);
        // s - sqrt(s^2 - 4) loses precision, the dominant root does not
        (s + (s * s - 4.0).sqrt()) / 2.0
    }

    /// `floor(lambda * 10^digits)`, exact.
    pub fn scaled_floor(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10).pow(digits);
        let radicand: BigInt = (&self.s * &self.s - BigInt::from(4)) * &scale * &scale;
        (&self.s * &scale + radicand.sqrt()) / 2
    }

    /// Decimal expansion truncated to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = self.scaled_floor(digits).to_string();
        if digits == 0 {
            return scaled;
        }
        let split = scaled.len() - digits as usize;
        format!("{}.{}", &scaled[..split], &scaled[split..])
    }
}
