//! Oracles shared by the integration tests. None of them call into the
//! code paths they check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant by Gaussian elimination over the rationals.
pub fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let factor = &a[r][col] / &p;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

pub fn int_matrix_det(m: &[Vec<BigInt>]) -> BigInt {
    let q: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let d = rational_det(&q);
    assert!(d.is_integer());
    d.to_integer()
}

/// Every sequence of length `1..=max_len` with entries in `lo..=hi`.
pub fn exhaustive(lo: i64, hi: i64, max_len: usize) -> Vec<Vec<i64>> {
    let base = (hi - lo + 1) as usize;
    let mut out = Vec::new();
    for len in 1..=max_len {
        for code in 0..base.pow(len as u32) {
            out.push(
                (0..len)
                    .map(|p| (code / base.pow(p as u32) % base) as i64 + lo)
                    .collect(),
            );
        }
    }
    out
}

/// Rows 1..=rows of the frieze with first row `q`, by the diamond rule on
/// plain i128, for sequences whose entries stay small.
pub fn small_rows(q: &[i64], rows: usize) -> Option<Vec<Vec<i128>>> {
    let n = q.len();
    let mut prev = vec![1i128; n];
    let mut cur: Vec<i128> = q.iter().map(|&v| v as i128).collect();
    let mut out = vec![cur.clone()];
    while out.len() < rows {
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let num = cur[i].checked_mul(cur[(i + 1) % n])? - 1;
            let den = prev[(i + 1) % n];
            if den == 0 || num % den != 0 {
                return None;
            }
            next.push(num / den);
        }
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    Some(out)
}
