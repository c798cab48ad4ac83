//! End-to-end checks of the `g`/`G` expansions, Pieri rules, and the
//! self-check runner, at ranges small enough for quick feedback.

use std::collections::BTreeSet;

use groth_core::{
    dual_grothendieck_schur, dual_grothendieck_sum, grothendieck_schur, grothendieck_sum,
    mobius_pieri_coefficient, pieri_dual, pieri_grothendieck, pieri_ideal_support, pieri_unit_sum,
    rectangle_project, run_all, Basis, Cutoff, Error, Partition, StripBound, SymFunc,
};

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn dual_expansions_are_unitriangular_downwards() {
    for lambda in Partition::all_up_to(5) {
        let g = dual_grothendieck_schur(&lambda);
        assert_eq!(g.coeff(&lambda), 1, "leading term of g_{lambda}");
        for (mu, _) in g.terms() {
            assert!(
                *mu == lambda || mu.size() < lambda.size(),
                "g_{lambda} contains the higher key {mu}"
            );
            assert!(
                lambda.contains(mu) || *mu == lambda,
                "support inside the ideal"
            );
        }
    }
}

#[test]
fn stable_expansions_are_unitriangular_upwards() {
    for lambda in Partition::all_up_to(4) {
        let big = grothendieck_schur(&lambda, lambda.size() + 3).unwrap();
        assert_eq!(big.coeff(&lambda), 1, "leading term of G_{lambda}");
        for (mu, _) in big.terms() {
            assert!(
                *mu == lambda || mu.size() > lambda.size(),
                "G_{lambda} contains the lower key {mu}"
            );
        }
    }
}

#[test]
fn truncation_commutes_with_the_degree_cap() {
    for lambda in Partition::all_up_to(4) {
        for d in lambda.size()..lambda.size() + 3 {
            let narrow = grothendieck_schur(&lambda, d).unwrap();
            let wide = grothendieck_schur(&lambda, d + 1).unwrap();
            assert_eq!(
                wide.truncated(d),
                narrow,
                "coefficients of G_{lambda} below degree {d} depend only on the shape"
            );
        }
    }
}

#[test]
fn sum_bases_round_trip_through_schur() {
    for lambda in Partition::all_up_to(4) {
        let g = dual_grothendieck_sum(&lambda);
        let round = g
            .convert(Basis::Schur)
            .unwrap()
            .convert(Basis::DualGrothendieck)
            .unwrap();
        assert_eq!(round, g, "ideal sum over {lambda}");

        let d = lambda.size() + 2;
        let big = grothendieck_sum(&lambda, d).unwrap();
        let round = big
            .convert(Basis::Schur)
            .unwrap()
            .convert(Basis::Grothendieck)
            .unwrap();
        assert_eq!(round, big, "filter sum over {lambda} at degree {d}");
    }
}

#[test]
fn dual_pieri_matches_brute_products() {
    // Independent of the verify suites: assemble the right-hand side by
    // hand from the closed-form coefficients.
    for lambda in Partition::all_up_to(3) {
        for a in 1..=2u32 {
            let row = SymFunc::basis_element(Basis::DualGrothendieck, pt(&[a]), Cutoff::Infinite)
                .unwrap()
                .convert(Basis::Schur)
                .unwrap();
            let product = row.multiply(&dual_grothendieck_schur(&lambda));

            let mut rhs = SymFunc::zero(Basis::Schur, Cutoff::Infinite).unwrap();
            for (mu, c) in pieri_dual(&lambda, a).iter() {
                rhs = rhs.add(&dual_grothendieck_schur(mu).scaled(c)).unwrap();
            }
            assert_eq!(product, rhs, "g-product at lambda={lambda} a={a}");
        }
    }
}

#[test]
fn pieri_coefficients_live_on_strips_only() {
    for lambda in Partition::all_up_to(4) {
        for a in 1..=3u32 {
            for (mu, _) in pieri_dual(&lambda, a).iter() {
                assert!(mu.is_horizontal_strip_over(&lambda));
                assert!(mu.size() - lambda.size() <= a);
            }
            for (mu, _) in pieri_grothendieck(&lambda, a).iter() {
                assert!(mu.is_horizontal_strip_over(&lambda));
                assert!(mu.size() - lambda.size() >= a);
            }
        }
    }
}

#[test]
fn mobius_form_and_unit_sums_error_outside_the_class() {
    let lambda = pt(&[2]);
    // (3,1) is a horizontal strip of size 2 over (2), so it misses the
    // at-most-1 class.
    assert!(matches!(
        mobius_pieri_coefficient(&lambda, 1, &pt(&[3, 1]), StripBound::AtMost),
        Err(Error::NotInStripClass { .. })
    ));
    // The base shape itself is a strip of size 0, below the at-least-2 bar.
    assert!(matches!(
        pieri_unit_sum(&lambda, 2, &pt(&[2]), StripBound::AtLeast),
        Err(Error::NotInStripClass { .. })
    ));
    // (2,2,1) is not a horizontal strip over (2): its third row overhangs
    // the second row of the base.
    assert!(matches!(
        pieri_unit_sum(&lambda, 1, &pt(&[2, 2, 1]), StripBound::AtMost),
        Err(Error::NotInStripClass { .. })
    ));
}

#[test]
fn ideal_support_matches_sub_partitions_of_strips() {
    let support = pieri_ideal_support(&pt(&[1]), 1);
    let expected: BTreeSet<Partition> = [pt(&[]), pt(&[1]), pt(&[1, 1]), pt(&[2])]
        .into_iter()
        .collect();
    assert_eq!(support, expected);
}

#[test]
fn rectangle_projection_filters_support() {
    let f = SymFunc::from_terms(
        Basis::DualGrothendieck,
        Cutoff::Infinite,
        [(pt(&[3]), 2), (pt(&[2, 1]), 1), (pt(&[1]), -1)],
    )
    .unwrap();
    let projected = rectangle_project(&f, 1, 3).unwrap();
    assert_eq!(projected.coeff(&pt(&[3])), 2);
    assert_eq!(projected.coeff(&pt(&[1])), -1);
    assert_eq!(projected.coeff(&pt(&[2, 1])), 0, "too many rows");
    assert!(rectangle_project(&f.convert(Basis::Schur).unwrap(), 2, 2).is_err());
}

#[test]
fn verify_runner_passes_and_reports() {
    let results = run_all(3, 2);
    assert_eq!(results.len(), 15);
    for suite in &results {
        assert!(suite.cases > 0, "suite {} ran nothing", suite.suite);
        assert!(
            suite.passed(),
            "suite {} failed first at {:?}",
            suite.suite,
            suite.failures.first()
        );
    }
    // Suite names are unique and stable, in a fixed order.
    let names: Vec<&str> = results.iter().map(|r| r.suite.as_str()).collect();
    let unique: BTreeSet<&str> = names.iter().copied().collect();
    assert_eq!(unique.len(), names.len());
    assert_eq!(names[0], "dual-pieri-oracle");
}
