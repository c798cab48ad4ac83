//! Exhaustive small-range checks of the partition lattice and the
//! horizontal-strip machinery.

use std::collections::BTreeSet;

use groth_core::{Partition, StripMode};

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn universe(max_size: u32) -> Vec<Partition> {
    Partition::all_up_to(max_size)
}

#[test]
fn lattice_laws_on_pairs() {
    let all = universe(8);
    for x in &all {
        assert_eq!(x.meet(x), *x);
        assert_eq!(x.join(x), *x);
        for y in &all {
            let m = x.meet(y);
            let j = x.join(y);
            assert_eq!(m, y.meet(x), "meet commutes");
            assert_eq!(j, y.join(x), "join commutes");
            assert!(x.contains(&m) && y.contains(&m), "meet is a lower bound");
            assert!(j.contains(x) && j.contains(y), "join is an upper bound");
            assert_eq!(x.meet(&j), *x, "absorption");
            assert_eq!(x.join(&m), *x, "absorption");
            // Meet and join are diagram intersection and union, both of
            // which commute with transposing the diagrams.
            assert_eq!(
                m.conjugate(),
                x.conjugate().meet(&y.conjugate()),
                "conjugation preserves meets"
            );
            assert_eq!(
                j.conjugate(),
                x.conjugate().join(&y.conjugate()),
                "conjugation preserves joins"
            );
        }
    }
}

#[test]
fn lattice_associativity() {
    let all = universe(6);
    for x in &all {
        for y in &all {
            for z in &all {
                assert_eq!(x.meet(y).meet(z), x.meet(&y.meet(z)));
                assert_eq!(x.join(y).join(z), x.join(&y.join(z)));
            }
        }
    }
}

#[test]
fn canonical_order_is_size_then_lex() {
    let all = universe(6);
    for w in all.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        assert!(a < b);
        assert!(
            a.size() < b.size() || (a.size() == b.size() && a.parts() < b.parts()),
            "{a} should precede {b} by size then lexicographic parts"
        );
    }
    assert!(pt(&[2, 1]) < pt(&[3]));
    assert!(pt(&[1]) < pt(&[1, 1]));
}

#[test]
fn conjugation_is_an_involution_and_reverses_nothing() {
    let all = universe(8);
    for x in &all {
        let c = x.conjugate();
        assert_eq!(c.size(), x.size());
        assert_eq!(c.conjugate(), *x);
        for y in &all {
            assert_eq!(
                x.contains(y),
                x.conjugate().contains(&y.conjugate()),
                "containment is conjugation-invariant"
            );
        }
    }
}

#[test]
fn display_and_parse_round_trip() {
    for x in universe(6) {
        let shown = x.to_string();
        assert_eq!(shown.parse::<Partition>().unwrap(), x, "parse {shown}");
    }
    assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!("3,1".parse::<Partition>().unwrap(), pt(&[3, 1]));
    assert_eq!(" 3 , 1 ".parse::<Partition>().unwrap(), pt(&[3, 1]));
    assert!("1,3".parse::<Partition>().is_err());
    assert!("x".parse::<Partition>().is_err());
    assert!("3,,1".parse::<Partition>().is_err());
}

#[test]
fn exact_strips_partition_the_at_most_family() {
    for lambda in universe(6) {
        for a in 0..=4u32 {
            let at_most = lambda.horizontal_strips(StripMode::AtMost, a);
            let mut union = BTreeSet::new();
            for b in 0..=a {
                let exact = lambda.horizontal_strips(StripMode::Exact, b);
                for mu in &exact {
                    assert_eq!(mu.size(), lambda.size() + b);
                    assert!(
                        union.insert(mu.clone()),
                        "exact families of different sizes are disjoint"
                    );
                }
            }
            assert_eq!(union, at_most);
        }
    }
}

#[test]
fn every_enumerated_strip_is_a_strip_of_the_right_size() {
    for lambda in universe(6) {
        for a in 1..=4u32 {
            type SizeCheck = fn(u32, u32) -> bool;
            let modes: [(StripMode, SizeCheck); 3] = [
                (StripMode::Exact, |s, a| s == a),
                (StripMode::AtMost, |s, a| s <= a),
                (StripMode::AtLeast, |s, a| s >= a),
            ];
            for (mode, check) in modes {
                for mu in lambda.horizontal_strips(mode, a) {
                    assert!(mu.is_horizontal_strip_over(&lambda));
                    assert!(check(mu.size() - lambda.size(), a), "size bound for {mu}");
                }
            }
        }
    }
}

#[test]
fn at_most_family_is_meet_closed_and_at_least_join_closed() {
    for lambda in universe(5) {
        for a in 1..=3u32 {
            let at_most: Vec<Partition> = lambda
                .horizontal_strips(StripMode::AtMost, a)
                .into_iter()
                .collect();
            for x in &at_most {
                for y in &at_most {
                    let m = x.meet(y);
                    assert!(
                        at_most.contains(&m),
                        "meet {m} of {x}, {y} escapes the at-most family"
                    );
                }
            }
            let at_least: Vec<Partition> = lambda
                .horizontal_strips(StripMode::AtLeast, a)
                .into_iter()
                .collect();
            for x in &at_least {
                for y in &at_least {
                    let j = x.join(y);
                    assert!(
                        at_least.contains(&j),
                        "join {j} of {x}, {y} escapes the at-least family"
                    );
                }
            }
        }
    }
}

#[test]
fn strip_coordinates_biject_with_exact_strips() {
    for lambda in universe(6) {
        for a in 0..=4u32 {
            let strips = lambda.horizontal_strips(StripMode::Exact, a);
            // Every strip round-trips through its coordinates.
            for mu in &strips {
                let coords = lambda.strip_coordinates(mu).unwrap();
                assert_eq!(coords.shape(), *mu);
                assert_eq!(coords.size(), a);
                assert_eq!(coords.base(), &lambda);
            }
            // Coordinate vectors with the right sum produce exactly the
            // enumerated strips, one each.
            let rows = lambda.addable_rows();
            let mut produced = Vec::new();
            let mut stack = vec![Vec::<u32>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == rows.len() {
                    if prefix.iter().sum::<u32>() == a {
                        produced.push(
                            groth_core::StripCoordinates::new(lambda.clone(), prefix)
                                .unwrap()
                                .shape(),
                        );
                    }
                    continue;
                }
                let cap = match rows[prefix.len()].capacity {
                    groth_core::Capacity::Finite(n) => n.min(a),
                    groth_core::Capacity::Infinite => a,
                };
                for b in 0..=cap {
                    let mut next = prefix.clone();
                    next.push(b);
                    stack.push(next);
                }
            }
            assert_eq!(produced.len(), strips.len(), "one vector per strip");
            assert_eq!(
                produced.into_iter().collect::<BTreeSet<_>>(),
                strips,
                "coordinates cover the exact strips bijectively over {lambda}"
            );
        }
    }
}

#[test]
fn strip_stats_match_independent_recomputation() {
    for lambda in universe(6) {
        for a in 0..=4u32 {
            for mu in lambda.horizontal_strips(StripMode::Exact, a) {
                let stats = lambda.strip_stats(&mu).unwrap();
                assert_eq!(stats.size, mu.size() - lambda.size());

                let rows_direct = (0..mu.len())
                    .filter(|&i| mu.part(i) > lambda.part(i))
                    .count() as u32;
                assert_eq!(stats.rows, rows_direct);

                // Co-rows: the rows of lambda that survive after slicing off
                // the first row of mu, i.e. rows of the skew shape
                // lambda / (mu_2, mu_3, ...).
                let shifted =
                    Partition::new(mu.parts().iter().skip(1).copied().collect::<Vec<_>>()).unwrap();
                let co_direct = (0..lambda.len())
                    .filter(|&i| lambda.part(i) > shifted.part(i))
                    .count() as u32;
                assert_eq!(stats.co_rows, co_direct);
            }
        }
    }
}

#[test]
fn strip_stats_reject_non_strips() {
    assert!(pt(&[1]).strip_stats(&pt(&[2, 2])).is_err());
    assert!(pt(&[2]).strip_stats(&pt(&[1])).is_err());
    assert!(pt(&[1, 1]).strip_stats(&pt(&[2, 2])).is_err());
}

#[test]
fn rotated_complement_is_an_involution_in_range() {
    for lambda in universe(5) {
        let rows = lambda.len() as u32 + 1;
        let cols = lambda.part(0) + 2;
        let comp = lambda.rotated_complement(rows, cols).unwrap();
        assert_eq!(comp.size(), rows * cols - lambda.size());
        assert_eq!(comp.rotated_complement(rows, cols).unwrap(), lambda);
    }
    assert!(pt(&[3]).rotated_complement(2, 2).is_err());
    assert!(pt(&[1, 1, 1]).rotated_complement(2, 5).is_err());
}

#[test]
fn sub_partitions_match_containment_filter() {
    for lambda in universe(6) {
        let subs = lambda.sub_partitions();
        let expected: Vec<Partition> = universe(lambda.size())
            .into_iter()
            .filter(|mu| lambda.contains(mu))
            .collect();
        assert_eq!(subs, expected, "ideal below {lambda} in canonical order");
    }
}
