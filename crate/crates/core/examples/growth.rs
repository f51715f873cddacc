//! Growth coefficients and growth rate of an infinite frieze.

use num_bigint::BigInt;

use frieze::{growth_closed_form, growth_rate, growth_sequence, QuidditySequence};

fn main() {
    let q: QuidditySequence = "3,4,2,4".parse().unwrap();
    let g = growth_sequence(&q, 6).unwrap();
    let s = g.s().unwrap().clone();
    for (k, value) in g.s_values.iter().enumerate() {
        assert_eq!(value, &growth_closed_form(&s, k as u32));
        println!("s_{k} = {value}");
    }
    let rate = growth_rate(&s).unwrap();
    println!("rate = {}", rate.to_decimal(15));
    assert_eq!(s, BigInt::from(58));
}
