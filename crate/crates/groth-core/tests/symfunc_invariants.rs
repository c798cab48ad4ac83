//! Ring laws, basis round trips, duality, and the one-variable
//! specialization, exercised over random and exhaustive small inputs.

use groth_core::{
    hall_pairing, kostka_number, Basis, Cutoff, Error, Partition, SymFunc, TableauFamily,
};
use proptest::prelude::*;

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn schur(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::Schur, lambda.clone(), Cutoff::Infinite).unwrap()
}

fn arb_symfunc(max_deg: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec(
        (
            prop::sample::select(Partition::all_up_to(max_deg)),
            -3i64..=3,
        ),
        0..4,
    )
    .prop_map(|terms| SymFunc::from_terms(Basis::Schur, Cutoff::Infinite, terms).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_laws(f in arb_symfunc(5), g in arb_symfunc(5), h in arb_symfunc(5)) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().add(&h).unwrap(),
            f.add(&g.add(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.sub(&g).unwrap(), g.sub(&f).unwrap().scaled(-1));
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn multiplication_laws(f in arb_symfunc(4), g in arb_symfunc(4), h in arb_symfunc(4)) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
        prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
        prop_assert_eq!(
            f.multiply(&g.add(&h).unwrap()),
            f.multiply(&g).add(&f.multiply(&h)).unwrap()
        );
        let one = schur(&Partition::empty());
        prop_assert_eq!(f.multiply(&one), f);
    }

    #[test]
    fn truncation_is_compatible_with_products(f in arb_symfunc(5), g in arb_symfunc(5), d in 0u32..7) {
        // Degrees add, so terms above the cutoff never feed back below it.
        prop_assert_eq!(
            f.multiply(&g).truncated(d),
            f.truncated(d).multiply(&g.truncated(d)).truncated(d)
        );
    }

    #[test]
    fn conversion_round_trips_random_combinations(f in arb_symfunc(5)) {
        for basis in [Basis::Monomial, Basis::Homogeneous, Basis::Elementary, Basis::DualGrothendieck] {
            let there = f.convert(basis).unwrap();
            prop_assert_eq!(there.convert(Basis::Schur).unwrap(), f.clone());
        }
    }

    #[test]
    fn specialization_is_a_ring_morphism(f in arb_symfunc(4), g in arb_symfunc(4)) {
        let alphabet = 12;
        let sum = f.add(&g).unwrap();
        prop_assert_eq!(
            sum.specialize_one(alphabet).unwrap(),
            f.specialize_one(alphabet).unwrap().add(&g.specialize_one(alphabet).unwrap()).unwrap()
        );
        let product = f.multiply(&g);
        prop_assert_eq!(
            product.specialize_one(alphabet).unwrap(),
            f.specialize_one(alphabet).unwrap().multiply(&g.specialize_one(alphabet).unwrap())
        );
    }
}

#[test]
fn basis_round_trips_exhaustive() {
    for lambda in Partition::all_up_to(6) {
        let s = schur(&lambda);
        for basis in [
            Basis::Monomial,
            Basis::Homogeneous,
            Basis::Elementary,
            Basis::DualGrothendieck,
        ] {
            let round = s.convert(basis).unwrap().convert(Basis::Schur).unwrap();
            assert_eq!(round, s, "{lambda} through {basis:?}");
        }
        // The stable basis needs a finite cutoff; any cutoff at or above
        // the degree is exact on the span of lower-degree Schur terms.
        let truncated = SymFunc::basis_element(
            Basis::Schur,
            lambda.clone(),
            Cutoff::Finite(lambda.size() + 3),
        )
        .unwrap();
        let round = truncated
            .convert(Basis::Grothendieck)
            .unwrap()
            .convert(Basis::Schur)
            .unwrap();
        assert_eq!(round, truncated, "{lambda} through the stable basis");
    }
}

#[test]
fn grothendieck_basis_requires_finite_cutoff() {
    let s = schur(&pt(&[2]));
    assert!(matches!(
        s.convert(Basis::Grothendieck),
        Err(Error::InfiniteGrothendieckCutoff)
    ));
    assert!(matches!(
        SymFunc::basis_element(Basis::Grothendieck, pt(&[2]), Cutoff::Infinite),
        Err(Error::InfiniteGrothendieckCutoff)
    ));
}

#[test]
fn hall_pairing_is_orthonormal_on_dual_bases() {
    let all = Partition::all_up_to(5);
    for lambda in &all {
        for mu in &all {
            let delta = i64::from(lambda == mu);
            let s_pair = hall_pairing(&schur(lambda), &schur(mu)).unwrap();
            assert_eq!(s_pair, delta, "schur self-duality at ({lambda}, {mu})");
            let h = SymFunc::basis_element(Basis::Homogeneous, lambda.clone(), Cutoff::Infinite)
                .unwrap();
            let m = SymFunc::basis_element(Basis::Monomial, mu.clone(), Cutoff::Infinite).unwrap();
            assert_eq!(
                hall_pairing(&h, &m).unwrap(),
                delta,
                "h/m duality at ({lambda}, {mu})"
            );
        }
    }
}

#[test]
fn hall_pairing_flags_inconclusive_truncation() {
    let f = SymFunc::basis_element(Basis::Schur, pt(&[2]), Cutoff::Finite(2)).unwrap();
    let g = schur(&pt(&[3, 1]));
    // A degree-4 function against data truncated at 2 cannot be decided.
    assert!(matches!(
        hall_pairing(&f, &g),
        Err(Error::InconclusivePairing { .. })
    ));
    // Two finite cutoffs never certify the full pairing.
    let h = SymFunc::basis_element(Basis::Schur, pt(&[1]), Cutoff::Finite(5)).unwrap();
    assert!(hall_pairing(&f, &h).is_err());
}

#[test]
fn semistandard_generating_functions_are_schur() {
    for lambda in Partition::all_up_to(5) {
        let family = TableauFamily::semistandard(lambda.clone(), lambda.size()).unwrap();
        let expected = schur(&lambda).convert(Basis::Monomial).unwrap();
        assert_eq!(
            family.generating_function(),
            expected,
            "tableau weights of {lambda}"
        );
    }
}

#[test]
fn kostka_matrix_is_unitriangular() {
    for lambda in Partition::all_up_to(5) {
        assert_eq!(kostka_number(&lambda, &lambda), 1);
        for mu in Partition::all_of_size(lambda.size()) {
            let k = kostka_number(&lambda, &mu);
            assert!(k >= 0);
            // Nonzero only when lambda dominates mu; in particular the
            // count against a strictly larger key in dominance vanishes.
            if k != 0 {
                let dominated = (0..lambda.len().max(mu.len())).all(|i| {
                    let head_l: u32 = (0..=i).map(|r| lambda.part(r)).sum();
                    let head_m: u32 = (0..=i).map(|r| mu.part(r)).sum();
                    head_l >= head_m
                });
                assert!(dominated, "K({lambda}, {mu}) = {k} violates dominance");
            }
        }
    }
}

#[test]
fn specialization_requires_a_large_alphabet() {
    let f = schur(&pt(&[2, 1]));
    assert!(matches!(
        f.specialize_one(3),
        Err(Error::AlphabetTooSmall { .. })
    ));
    assert!(f.specialize_one(4).is_ok());
    let g = SymFunc::basis_element(Basis::Grothendieck, pt(&[1]), Cutoff::Finite(3)).unwrap();
    assert!(matches!(
        g.specialize_one(9),
        Err(Error::UnsupportedBasis { .. })
    ));
}

#[test]
fn display_is_stable() {
    let f = SymFunc::from_terms(
        Basis::Schur,
        Cutoff::Infinite,
        [(pt(&[2, 1]), 1), (pt(&[1, 1]), -1), (pt(&[3]), 3)],
    )
    .unwrap();
    assert_eq!(f.to_string(), "-s[1,1] + s[2,1] + 3 s[3]");
    assert_eq!(
        SymFunc::zero(Basis::Monomial, Cutoff::Infinite)
            .unwrap()
            .to_string(),
        "0"
    );
}
