//! Generate a frieze from its quiddity sequence and print its rows.

use frieze::{generate, QuidditySequence};

fn main() {
    let q: QuidditySequence = "4,1,2,2,2,1".parse().unwrap();
    let grid = generate(&q, 10);
    println!("{q}: {}", grid.classification());
    for (r, row) in grid.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("row {:>2}: {}", r + 1, cells.join(" "));
    }
}
