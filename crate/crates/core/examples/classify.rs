//! Classify quiddity sequences as closed, infinite or invalid.

use frieze::{classify, cross_check, QuidditySequence};

fn main() {
    for text in ["4,1,2,2,2,1", "3,4,2,4", "1,1,2,2", "1,1,1", "2,2,2"] {
        let q: QuidditySequence = text.parse().unwrap();
        let c = classify(&q);
        let checked = cross_check(&q, 40).expect("rules agree with simulation");
        assert_eq!(c, checked);
        println!("({text}) -> {c}");
    }
}
