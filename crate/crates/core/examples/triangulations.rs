//! Closed friezes and triangulated polygons, in both directions.

use frieze::polygon::{enumerate_triangulations, quiddity_of, triangulation_from_quiddity};
use frieze::QuidditySequence;

fn main() {
    for t in enumerate_triangulations(5).unwrap() {
        println!("{t} -> {}", quiddity_of(&t));
    }
    let q: QuidditySequence = "4,1,2,2,2,1".parse().unwrap();
    let t = triangulation_from_quiddity(&q).unwrap();
    println!("{q} <- {t}");
}
