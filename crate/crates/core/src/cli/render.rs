use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::grid::FriezeGrid;

/// Lines wider than this switch the grid to one entry per line.
pub const LIST_MODE_WIDTH: usize = 120;

/// JSON number when exactly representable in a double, decimal string
/// otherwise.
pub fn big(v: &BigInt) -> Value {
    const SAFE: i64 = (1 << 53) - 1;
    match v.to_i64() {
        Some(x) if (-SAFE..=SAFE).contains(&x) => Value::from(x),
        _ => Value::from(v.to_string()),
    }
}

/// Staggered text grid: the row of 0s, the row of 1s, then the stored
/// rows, each shifted half a cell against the one above. All cells share
/// the width of the widest entry. Row `r` shows `a_{i,i+r+1}` in cell
/// `i + floor((r+1)/2)`, so every entry sits between the two it is
/// computed from.
pub fn render_grid(grid: &FriezeGrid) -> String {
    let n = grid.width();
    let last = grid.rows().len() as isize;
    let rows: Vec<(isize, Vec<String>)> = (-1..=last)
        .map(|r| {
            let shift = (r + 1).div_euclid(2);
            let cells = (0..n as isize)
                .map(|c| {
                    grid.entry(r, c - shift)
                        .expect("rows up to the stored ones are readable")
                        .to_string()
                })
                .collect();
            (r, cells)
        })
        .collect();
    let width = rows.iter().flat_map(|(_, c)| c.iter().map(String::len)).max().unwrap_or(1);
    let half = (width + 2) / 2;
    let pitch = 2 * half;
    if pitch * n + half > LIST_MODE_WIDTH {
        let mut out = String::new();
        for (r, _) in &rows {
            out.push_str(&format!("row {r}\n"));
            for i in 0..n as isize {
                let v = grid.entry(*r, i).expect("readable row");
                out.push_str(&format!("  a[{},{}] = {v}\n", i, i + r + 1));
            }
        }
        return out;
    }
    let mut out = String::new();
    for (r, cells) in &rows {
        let mut line = " ".repeat(if (r + 1) % 2 == 1 { half } else { 0 });
        for cell in cells {
            line.push_str(&format!("{cell:>width$}"));
            line.push_str(&" ".repeat(pitch - width));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
