//! Punctured disk triangulations give infinite friezes with s = 2.

use frieze::annulus::{enumerate_disk_triangulations, star_triangulation};
use frieze::{generate, growth_sequence};

fn main() {
    let star = star_triangulation(4).unwrap();
    let grid = generate(&star.quiddity(), 6);
    for row in grid.rows() {
        println!("{row:?}");
    }
    for t in enumerate_disk_triangulations(4).unwrap() {
        let q = t.quiddity();
        let s = growth_sequence(&q, 1).unwrap();
        let arcs: Vec<String> = t.arcs().iter().map(ToString::to_string).collect();
        println!("{} -> {q}, s = {}", arcs.join(" "), s.s().unwrap());
    }
}
