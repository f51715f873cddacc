mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use frieze::annulus::{
    annulus_from_quiddity, enumerate_disk_triangulations, star_triangulation, thicken, DiskArc, Mark,
    PuncturedDiskTriangulation,
};
use frieze::growth::growth_sequence_with_period;
use frieze::polygon::glue;
use frieze::{classify, generate, growth_sequence, QuidditySequence};

fn q(v: &[i64]) -> QuidditySequence {
    QuidditySequence::from_ints(v.iter().copied()).unwrap()
}

fn infinite_corpus(lo: i64, hi: i64, max_len: usize) -> Vec<Vec<i64>> {
    common::exhaustive(lo, hi, max_len)
        .into_iter()
        .filter(|v| classify(&q(v)).is_infinite())
        .collect()
}

/// Arc ends at each marked point, loops counted twice.
fn arc_ends(arcs: &[(Mark, Mark)]) -> BTreeMap<Mark, i64> {
    let mut ends = BTreeMap::new();
    for &(a, b) in arcs {
        *ends.entry(a).or_insert(0) += 1;
        *ends.entry(b).or_insert(0) += 1;
    }
    ends
}

#[test]
fn boundary_quiddities_count_arc_ends() {
    for v in infinite_corpus(1, 4, 4) {
        let seq = q(&v);
        let (a, _) = annulus_from_quiddity(&seq).unwrap();
        a.validate().unwrap();
        let ends = arc_ends(a.arcs());
        let all_two = v.iter().all(|&x| x == 2) || a.is_spiral();
        let outer: Vec<i64> = (1..=a.n_outer())
            .map(|i| ends.get(&Mark::Outer(i)).copied().unwrap_or(0) + 1)
            .collect();
        if !all_two {
            assert_eq!(q(&outer), seq, "{v:?}");
            assert_eq!(a.outer_quiddity(), seq);
            let inner: Vec<i64> = (1..=a.n_inner())
                .map(|i| ends.get(&Mark::Inner(i)).copied().unwrap_or(0) + 1)
                .collect();
            assert_eq!(a.inner_quiddity().unwrap(), q(&inner), "{v:?}");
            // Euler count: a triangulated annulus with m marked points has m triangles
            assert_eq!(a.triangles().len(), a.n_outer() + a.n_inner(), "{v:?}");
        } else {
            assert_eq!(a.outer_quiddity(), seq, "{v:?}");
            assert!(a.inner_quiddity().is_err());
        }
    }
}

#[test]
fn inner_points_match_the_surplus() {
    for v in infinite_corpus(2, 5, 4) {
        let seq = q(&v);
        let (a, trace) = annulus_from_quiddity(&seq).unwrap();
        assert!(trace.cuts.is_empty());
        if v.iter().all(|&x| x == 2) {
            assert!(a.is_spiral());
            continue;
        }
        let surplus: i64 = v.iter().map(|x| x - 2).sum();
        assert_eq!(a.n_inner() as i64, surplus, "{v:?}");
        let inner_surplus: i64 = a
            .inner_quiddity()
            .unwrap()
            .entries()
            .iter()
            .map(|x| i64::try_from(x).unwrap() - 2)
            .sum();
        assert_eq!(inner_surplus, v.len() as i64, "{v:?}");
    }
}

#[test]
fn growth_coefficients_agree_across_the_annulus() {
    for v in infinite_corpus(1, 4, 4) {
        let seq = q(&v);
        let (a, _) = annulus_from_quiddity(&seq).unwrap();
        let Ok(inner) = a.inner_quiddity() else { continue };
        let outer_s = growth_sequence_with_period(&seq, seq.len(), 3).unwrap().s_values;
        let inner_s = growth_sequence_with_period(&inner, inner.len(), 3).unwrap().s_values;
        assert_eq!(outer_s, inner_s, "{v:?} / {inner}");
        if v.iter().all(|&x| x >= 2) {
            assert_eq!(growth_sequence(&seq, 1).unwrap().s(), growth_sequence(&inner, 1).unwrap().s(), "{v:?}");
        }
    }
}

#[test]
fn the_worked_example() {
    let (a, trace) = annulus_from_quiddity(&q(&[3, 4, 2, 4])).unwrap();
    assert_eq!(trace.rotation, 0);
    assert_eq!(a.n_inner(), 5);
    assert_eq!(a.inner_quiddity().unwrap(), q(&[3, 2, 4, 2, 3]));
    assert_eq!(growth_sequence(&q(&[3, 2, 4, 2, 3]), 1).unwrap().s(), Some(&BigInt::from(58)));
}

#[test]
fn closed_and_invalid_inputs_are_rejected() {
    assert!(annulus_from_quiddity(&q(&[4, 1, 2, 2, 2, 1])).is_err());
    assert!(annulus_from_quiddity(&q(&[1, 1, 2, 2])).is_err());
    assert!(thicken(&q(&[1, 1, 1]), 1, &BigInt::from(1)).is_err());
    assert!(thicken(&q(&[3, 3]), 3, &BigInt::from(1)).is_err());
    assert!(thicken(&q(&[3, 3]), 1, &BigInt::from(0)).is_err());
}

#[test]
fn thickening_keeps_friezes_infinite() {
    for v in infinite_corpus(1, 4, 5) {
        let seq = q(&v);
        for i in 1..=v.len() {
            for b in 1..=3 {
                let thick = thicken(&seq, i, &BigInt::from(b)).unwrap();
                let mut want = v.clone();
                want[i - 1] += b;
                assert_eq!(thick, q(&want));
                assert!(classify(&thick).is_infinite(), "{v:?} + {b} at {i}");
            }
        }
    }
}

#[test]
fn disk_triangulations_give_progressions() {
    for n in 2..=6 {
        let star = star_triangulation(n).unwrap();
        assert_eq!(star.quiddity(), q(&vec![2; n]));
        let rows = common::small_rows(&vec![2; n], 30).unwrap();
        for (r, row) in rows.iter().enumerate() {
            assert!(row.iter().all(|&x| x == r as i128 + 2));
        }
        for disk in enumerate_disk_triangulations(n).unwrap() {
            let v: Vec<i64> = disk.quiddity().entries().iter().map(|x| i64::try_from(x).unwrap()).collect();
            let rows = common::small_rows(&v, 31).unwrap();
            for i in 0..n {
                for class in 0..n {
                    let progression: Vec<i128> = (1..=30).skip(class).step_by(n).map(|r| rows[r - 1][i]).collect();
                    let steps: Vec<i128> = progression.windows(2).map(|w| w[1] - w[0]).collect();
                    assert!(steps.windows(2).all(|w| w[0] == w[1]), "{v:?} at {i}");
                }
            }
            let g = growth_sequence_with_period(&disk.quiddity(), n, 5).unwrap();
            assert!(g.s_values.iter().all(|s| s == &BigInt::from(2)), "{v:?}");
        }
    }
}

#[test]
fn disk_enumeration_count() {
    // spoke sets times polygon triangulations of each sector
    let catalan = |k: usize| -> u64 {
        let mut c = vec![1u64];
        for m in 1..=k {
            c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
        }
        c[k]
    };
    for n in 2..=7 {
        let mut want = 0;
        for mask in 1u32..(1 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let spokes: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let mut ways = 1;
            for (k, &s) in spokes.iter().enumerate() {
                let next = spokes[(k + 1) % spokes.len()];
                let gap = (next + n - s - 1) % n + 1;
                // the triangle at the puncture is forced, leaving a (gap + 1)-gon
                ways *= catalan(gap - 1);
            }
            want += ways;
        }
        assert_eq!(enumerate_disk_triangulations(n).unwrap().len() as u64, want, "n = {n}");
    }
}

#[test]
fn disk_validation() {
    assert!(PuncturedDiskTriangulation::new(3, [DiskArc::Puncture(1)]).is_err());
    assert!(PuncturedDiskTriangulation::new(3, [DiskArc::Puncture(1), DiskArc::Puncture(4), DiskArc::Puncture(2)]).is_err());
    assert!(PuncturedDiskTriangulation::new(4, [DiskArc::Puncture(1), DiskArc::Puncture(3), DiskArc::Boundary(1, 3), DiskArc::Boundary(2, 4)]).is_err());
    let ok = PuncturedDiskTriangulation::new(
        4,
        [DiskArc::Puncture(1), DiskArc::Puncture(3), DiskArc::Boundary(1, 3), DiskArc::Boundary(3, 1)],
    )
    .unwrap();
    assert_eq!(ok.quiddity(), q(&[4, 1, 4, 1]));
    assert!(classify(&ok.quiddity()).is_infinite());
    assert!(generate(&ok.quiddity(), 10).classification().is_infinite());
}

proptest! {
    #[test]
    fn gluing_ears_keeps_the_inner_boundary(v in prop::collection::vec(2i64..5, 1..5), at in prop::collection::vec(0usize..8, 0..3)) {
        let base = q(&v);
        prop_assume!(!v.iter().all(|&x| x == 2));
        let (a0, _) = annulus_from_quiddity(&base).unwrap();
        let mut seq = base.clone();
        for p in at {
            seq = glue(&seq, p % seq.len() + 1).unwrap();
        }
        let (a, trace) = annulus_from_quiddity(&seq).unwrap();
        prop_assert_eq!(a.outer_quiddity(), seq.clone());
        prop_assert_eq!(a.n_inner(), a0.n_inner());
        prop_assert_eq!(trace.reduced.len(), v.len());
        let inner = a.inner_quiddity().unwrap();
        let s_outer = growth_sequence_with_period(&seq, seq.len(), 1).unwrap().s_values;
        let s_inner = growth_sequence_with_period(&inner, inner.len(), 1).unwrap().s_values;
        prop_assert_eq!(s_outer, s_inner);
    }
}
