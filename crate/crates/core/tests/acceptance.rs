//! Acceptance checks, one line of output per criterion.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use frieze::annulus::{annulus_from_quiddity, enumerate_disk_triangulations, star_triangulation, thicken};
use frieze::cluster::{cluster_frieze, det_symbolic, expected_det_symbolic, specialize_to_one, symbolic_matrix};
use frieze::polygon::{
    det_int, enumerate_triangulations, frieze_matrix, matchings, quiddity_of, triangulation_from_quiddity,
};
use frieze::{classify, cross_check, generate, growth_closed_form, growth_sequence, Classification, QuidditySequence};

fn q(v: &[i64]) -> QuidditySequence {
    QuidditySequence::from_ints(v.iter().copied()).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Row `r` of `grid` read from position `start` on, cyclically.
fn row_from(grid: &frieze::FriezeGrid, r: usize, start: usize) -> Vec<BigInt> {
    let row = &grid.rows()[r - 1];
    (0..row.len()).map(|c| row[(c + start) % row.len()].clone()).collect()
}

fn sorted(mut v: Vec<BigInt>) -> Vec<BigInt> {
    v.sort();
    v
}

fn corpus_closed(max_n: usize) -> Vec<(usize, QuidditySequence)> {
    (3..=max_n)
        .flat_map(|n| {
            enumerate_triangulations(n)
                .unwrap()
                .into_iter()
                .map(move |t| (n, quiddity_of(&t)))
        })
        .collect()
}

fn infinite_corpus(lo: i64, hi: i64, max_len: usize) -> Vec<QuidditySequence> {
    common::exhaustive(lo, hi, max_len)
        .into_iter()
        .map(|v| q(&v))
        .filter(|s| classify(s).is_infinite())
        .collect()
}

fn c1_order_six() {
    let t = Instant::now();
    let grid = generate(&q(&[4, 1, 2, 2, 2, 1]), 10);
    let elapsed = t.elapsed();
    assert_eq!(grid.classification(), &Classification::Closed { order: 6 });
    // rows as printed in the standard drawing, each read from its left end, starting
    // rows 1 and 2 at position 4 and row 3 at position 3
    assert_eq!(row_from(&grid, 1, 4), ints(&[2, 1, 4, 1, 2, 2]));
    assert_eq!(row_from(&grid, 2, 4), ints(&[1, 3, 3, 1, 3, 3]));
    assert_eq!(row_from(&grid, 3, 3), ints(&[1, 2, 2, 2, 1, 4]));
    assert_eq!(row_from(&grid, 4, 0), ints(&[1; 6]));
    assert_eq!(row_from(&grid, 5, 0), ints(&[0; 6]));
    assert_eq!(grid.rows().len(), 5);
    assert!(elapsed < Duration::from_millis(1), "{elapsed:?}");
}

fn c2_fast_grid() {
    let t = Instant::now();
    let grid = generate(&q(&[3, 4, 2, 4]), 5);
    let elapsed = t.elapsed();
    // the example prints row r starting at position 3 - floor((r - 1) / 2)
    let printed: [&[i64]; 5] = [
        &[4, 3, 4, 2],
        &[11, 11, 7, 7],
        &[19, 40, 19, 24],
        &[69, 69, 65, 65],
        &[236, 119, 236, 176],
    ];
    let distinct: [&[i64]; 4] = [&[11, 7], &[19, 24, 40], &[65, 69], &[119, 176, 236]];
    for (k, want) in printed.iter().enumerate() {
        let r = k + 1;
        let start = 3 - (r - 1) / 2;
        assert_eq!(row_from(&grid, r, start % 4), ints(want), "row {r}");
    }
    for (k, want) in distinct.iter().enumerate() {
        let mut values = grid.rows()[k + 1].clone();
        values.sort();
        values.dedup();
        assert_eq!(values, sorted(ints(want)), "row {}", k + 2);
    }
    assert!(elapsed < Duration::from_millis(1), "{elapsed:?}");
}

fn c3_growth_coefficient() {
    let t = Instant::now();
    let g = growth_sequence(&q(&[3, 4, 2, 4]), 6).unwrap();
    let elapsed = t.elapsed();
    assert_eq!(g.s(), Some(&BigInt::from(58)));
    // s_{k+2} = 58 s_{k+1} - s_k from s_0 = 2, s_1 = 58
    let mut by_hand = vec![BigInt::from(2), BigInt::from(58)];
    while by_hand.len() < 7 {
        let k = by_hand.len();
        by_hand.push(BigInt::from(58) * &by_hand[k - 1] - &by_hand[k - 2]);
    }
    assert_eq!(g.s_values, by_hand);
    assert_eq!(g.s_values[2], BigInt::from(3362));
    assert_eq!(g.s_values[3], BigInt::from(194938));
    for (k, s) in g.s_values.iter().enumerate() {
        assert_eq!(s, &growth_closed_form(&BigInt::from(58), k as u32));
    }
    assert!(elapsed < Duration::from_millis(50), "{elapsed:?}");
}

fn c4_growth_rate() {
    let t = Instant::now();
    let g = growth_sequence(&q(&[3, 4, 2, 4]), 11).unwrap();
    let ratio = BigRational::new(g.s_values[11].clone(), g.s_values[10].clone())
        .to_f64()
        .unwrap();
    let elapsed = t.elapsed();
    let lambda = (58.0 + (58.0f64 * 58.0 - 4.0).sqrt()) / 2.0;
    assert!((ratio - lambda).abs() < 1e-6, "{ratio} vs {lambda}");
    assert!((lambda - 57.982_753_492_378_88).abs() < 1e-9);
    let rate = frieze::growth_rate(&BigInt::from(58)).unwrap();
    assert!((rate.to_f64() - ratio).abs() < 1e-6);
    assert!(elapsed < Duration::from_millis(50), "{elapsed:?}");
}

fn c5_matchings() {
    let t = Instant::now();
    let mut cases = 0;
    for n in 5..=7 {
        for tri in enumerate_triangulations(n).unwrap() {
            let grid = generate(&quiddity_of(&tri), n);
            for i in 1..=n {
                for j in 1..=n {
                    let gap = (j + n - i) % n;
                    if gap < 2 || gap == n - 1 {
                        continue;
                    }
                    let forward = matchings(&tri, i, j).unwrap().len();
                    let backward = matchings(&tri, j, i).unwrap().len();
                    let entry = grid.a(i as isize, (i + gap) as isize).unwrap();
                    assert_eq!(BigInt::from(forward), entry, "{tri} ({i},{j})");
                    assert_eq!(forward, backward, "{tri} ({i},{j})");
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 0);
    assert!(t.elapsed() < Duration::from_secs(5), "{:?}", t.elapsed());
}

fn c6_integer_determinant() {
    let t = Instant::now();
    let mut count = 0;
    for n in 4..=8 {
        let expected = -BigInt::from(-2).pow(n as u32 - 2);
        for tri in enumerate_triangulations(n).unwrap() {
            let m = frieze_matrix(&tri);
            assert_eq!(det_int(&m), expected, "{tri}");
            assert_eq!(common::int_matrix_det(&m.entries), expected, "{tri}");
            count += 1;
        }
    }
    assert_eq!(count, 2 + 5 + 14 + 42 + 132);
    assert!(t.elapsed() < Duration::from_secs(10), "{:?}", t.elapsed());
}

fn c7_symbolic_determinant() {
    let t = Instant::now();
    for n in 3..=6 {
        let want = expected_det_symbolic(n);
        for tri in enumerate_triangulations(n).unwrap() {
            let det = det_symbolic(&symbolic_matrix(&cluster_frieze(&tri))).unwrap();
            assert_eq!(det, want, "{tri}");
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    let n = 7;
    for tri in enumerate_triangulations(n).unwrap() {
        let m = symbolic_matrix(&cluster_frieze(&tri));
        for _ in 0..20 {
            let values: Vec<i64> = (0..n * n).map(|_| rng.gen_range(1..=9)).collect();
            let value = |g: frieze::cluster::Generator| {
                let (a, b) = g.endpoints();
                BigInt::from(values[(a - 1) * n + (b - 1)])
            };
            let evaluated: Vec<Vec<BigRational>> = m
                .iter()
                .map(|row| row.iter().map(|e| e.evaluate(value)).collect())
                .collect();
            let boundary: BigInt = (1..=n).map(|i| value(frieze::cluster::Generator::new(i, i % n + 1))).product();
            let want = BigRational::from_integer(BigInt::from(32) * boundary);
            assert_eq!(common::rational_det(&evaluated), want, "{tri}");
        }
    }
    let fan = frieze::polygon::PolygonTriangulation::fan(7).unwrap();
    assert_eq!(
        det_symbolic(&symbolic_matrix(&cluster_frieze(&fan))).unwrap(),
        expected_det_symbolic(7)
    );
    assert!(t.elapsed() < Duration::from_secs(60), "{:?}", t.elapsed());
}

fn c8_specialization() {
    let t = Instant::now();
    for n in 3..=7 {
        for tri in enumerate_triangulations(n).unwrap() {
            let specialised = specialize_to_one(&cluster_frieze(&tri));
            let generated = generate(&quiddity_of(&tri), n);
            assert_eq!(specialised.rows(), generated.rows(), "{tri}");
            assert_eq!(specialised.classification(), generated.classification(), "{tri}");
        }
    }
    assert!(t.elapsed() < Duration::from_secs(30), "{:?}", t.elapsed());
}

fn c9_round_trip() {
    let t = Instant::now();
    let corpus = corpus_closed(10);
    assert_eq!(corpus.iter().filter(|(n, _)| *n == 10).count(), 1430);
    for (n, seq) in &corpus {
        assert_eq!(classify(seq), Classification::Closed { order: *n }, "{seq}");
        let tri = triangulation_from_quiddity(seq).unwrap();
        assert_eq!(&quiddity_of(&tri), seq);
    }
    assert!(t.elapsed() < Duration::from_secs(10), "{:?}", t.elapsed());
}

fn c10_punctured_disk() {
    let t = Instant::now();
    for n in 1..=6 {
        let seq = q(&vec![2; n]);
        let grid = generate(&seq, 31);
        for (r, row) in grid.rows().iter().enumerate() {
            assert!(row.iter().all(|v| v == &BigInt::from(r as i64 + 2)), "row {}", r + 1);
        }
        let g = growth_sequence(&seq, 5).unwrap();
        assert_eq!(g.s_values, vec![BigInt::from(2); 6]);
    }
    for n in 2..=6 {
        assert_eq!(star_triangulation(n).unwrap().quiddity(), q(&vec![2; n]));
        for disk in enumerate_disk_triangulations(n).unwrap() {
            let seq = disk.quiddity();
            assert!(classify(&seq).is_infinite(), "{seq}");
            let rows = common::small_rows(&ints_to_i64(&seq), 31).expect("integral rows");
            for i in 0..n {
                let diagonal: Vec<i128> = (1..=30).map(|r| rows[r - 1][i]).collect();
                for start in 0..n {
                    let progression: Vec<i128> = diagonal.iter().skip(start).step_by(n).copied().collect();
                    let steps: Vec<i128> = progression.windows(2).map(|w| w[1] - w[0]).collect();
                    assert!(steps.windows(2).all(|w| w[0] == w[1]), "{seq} diagonal {i} class {start}");
                }
            }
            let g = growth_sequence(&seq, 5).unwrap();
            assert_eq!(g.s_values, vec![BigInt::from(2); 6], "{seq}");
        }
    }
    assert!(t.elapsed() < Duration::from_secs(5), "{:?}", t.elapsed());
}

fn ints_to_i64(seq: &QuidditySequence) -> Vec<i64> {
    seq.entries().iter().map(|v| v.to_i64().unwrap()).collect()
}

fn c11_annulus() {
    let t = Instant::now();
    let (a, _) = annulus_from_quiddity(&q(&[3, 4, 2, 4])).unwrap();
    assert_eq!(a.n_inner(), 5);
    let inner = a.inner_quiddity().unwrap();
    assert!((0..5).any(|r| inner.rotated(r) == q(&[3, 2, 4, 2, 3])), "{inner}");
    let mut checked = 0;
    for seq in infinite_corpus(2, 4, 4) {
        if seq.entries().iter().all(|v| v == &BigInt::from(2)) {
            continue;
        }
        let (a, _) = annulus_from_quiddity(&seq).unwrap();
        assert_eq!(a.outer_quiddity(), seq);
        let inner = a.inner_quiddity().unwrap();
        assert_eq!(
            growth_sequence(&seq, 1).unwrap().s(),
            growth_sequence(&inner, 1).unwrap().s(),
            "{seq} / {inner}"
        );
        checked += 1;
    }
    assert!(checked > 0, "empty corpus");
    assert!(t.elapsed() < Duration::from_secs(10), "{:?}", t.elapsed());
}

fn c12_thickening_and_classification() {
    let t = Instant::now();
    let corpus = common::exhaustive(1, 4, 6);
    let mut infinite = Vec::new();
    for v in &corpus {
        let seq = q(v);
        let c = cross_check(&seq, 40).unwrap_or_else(|m| panic!("{m}"));
        if c.is_infinite() {
            infinite.push(seq);
        }
    }
    assert!(!infinite.is_empty());
    for seq in &infinite {
        for i in 1..=seq.len() {
            for b in 1..=3 {
                let thick = thicken(seq, i, &BigInt::from(b)).unwrap();
                assert!(classify(&thick).is_infinite(), "{seq} + {b} at {i}");
            }
        }
    }
    assert!(t.elapsed() < Duration::from_secs(30), "{:?}", t.elapsed());
}

fn c13_quiddity_facts() {
    let t = Instant::now();
    for (n, seq) in corpus_closed(9) {
        if n <= 3 {
            continue;
        }
        let e = seq.entries();
        let ones = e.iter().filter(|v| *v == &BigInt::from(1)).count();
        assert!(ones >= 2, "{seq}");
        for i in 0..n {
            assert!(!(e[i] == BigInt::from(1) && e[(i + 1) % n] == BigInt::from(1)), "{seq}");
        }
    }
    assert!(t.elapsed() < Duration::from_secs(5), "{:?}", t.elapsed());
}

fn main() {
    let criteria: [(&str, fn()); 13] = [
        ("1 closed frieze of order 6 reproduced", c1_order_six),
        ("2 rows of the (3,4,2,4) frieze reproduced", c2_fast_grid),
        ("3 growth coefficient s = 58 and closed form", c3_growth_coefficient),
        ("4 growth rate is the dominant root", c4_growth_rate),
        ("5 matching counts equal frieze entries", c5_matchings),
        ("6 integer determinant -(-2)^(n-2), n = 4..8", c6_integer_determinant),
        ("7 symbolic determinant", c7_symbolic_determinant),
        ("8 cluster frieze specialises to the integer frieze", c8_specialization),
        ("9 quiddity / triangulation round trip", c9_round_trip),
        ("10 punctured disk friezes", c10_punctured_disk),
        ("11 annulus construction and growth equality", c11_annulus),
        ("12 thickening and certified classification", c12_thickening_and_classification),
        ("13 ones in closed quiddity sequences", c13_quiddity_facts),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS  {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                let message = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  {name} ({elapsed:.2?}): {message}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
