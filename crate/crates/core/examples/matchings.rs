//! Count matchings between vertices and triangles; each count is a frieze entry.

use frieze::polygon::{frieze_of, matchings, PolygonTriangulation};

fn main() {
    let t = PolygonTriangulation::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
    let grid = frieze_of(&t);
    for (i, j) in [(2, 5), (3, 6), (5, 2)] {
        let m = matchings(&t, i, j).unwrap();
        let entry = if i < j { grid.a(i as isize, j as isize) } else { grid.a(i as isize, j as isize + 6) };
        println!("|M({i},{j})| = {} and a({i},{j}) = {}", m.len(), entry.unwrap());
        for matching in &m.matchings {
            let pairs: Vec<String> = m
                .vertices
                .iter()
                .zip(matching)
                .map(|(v, &k)| format!("{v}->{:?}", t.triangles()[k]))
                .collect();
            println!("  {}", pairs.join(" "));
        }
    }
}
