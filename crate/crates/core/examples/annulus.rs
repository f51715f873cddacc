//! Triangulate an annulus from an infinite quiddity sequence.

use frieze::annulus::annulus_from_quiddity;
use frieze::{growth_sequence, QuidditySequence};

fn main() {
    for text in ["3,4,2,4", "1,4,3,4", "2,2,2"] {
        let q: QuidditySequence = text.parse().unwrap();
        let (a, trace) = annulus_from_quiddity(&q).unwrap();
        println!("outer {}", a.outer_quiddity());
        println!("  cuts {:?}, rotation {}", trace.cuts, trace.rotation);
        let arcs: Vec<String> = a.arcs().iter().map(|(x, y)| format!("{x}-{y}")).collect();
        println!("  arcs {}", arcs.join(" "));
        match a.inner_quiddity() {
            Ok(inner) => {
                let s_in = growth_sequence(&inner, 1).unwrap();
                println!("  inner {inner}, s = {}", s_in.s().unwrap());
            }
            Err(e) => println!("  {e}"),
        }
    }
}
