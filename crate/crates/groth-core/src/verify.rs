//! Deterministic self-check suites over configurable ranges.
//!
//! [`run_all`] sweeps every identity the crate exposes — Pieri oracles
//! against tableau-level products, agreement of the closed, inclusion–
//! exclusion, and Möbius forms, unit sums, multiplicity-free products,
//! the binomial telescoping grid, Hall duality, the Möbius machinery on
//! strip posets and reference lattices, and the series/specialization
//! identities — and reports one [`SuiteResult`] per suite with a count of
//! checked cases and a minimal description of each failure.
//!
//! Everything is deterministic: partitions are swept in canonical order
//! and randomized checks draw from a fixed-seed generator, so repeated
//! runs produce identical reports.

use std::collections::BTreeMap;
use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binom::binomial_telescope;
use crate::grothendieck::{
    dual_grothendieck_schur, dual_grothendieck_sum, dual_sum_is_specialization, grothendieck_schur,
    grothendieck_sum, h1_times_grothendieck, pieri_dual, pieri_dual_alternating,
    pieri_filter_support, pieri_grothendieck, pieri_grothendieck_alternating, pieri_ideal_support,
    pieri_unit_sum,
};
use crate::partition::{Partition, StripMode};
use crate::poset::{
    boolean_poset, coatom_meet_expansion, divisor_poset, mobius_inversion_holds,
    mobius_restricts_to_meet_closure, strip_poset, top_mobius_coefficients, FinitePoset,
    StripBound, StripNode,
};
use crate::symfunc::{
    alternating_elementary_series, complete_homogeneous_series, hall_pairing, Basis, Cutoff,
    SymFunc,
};

/// One failed check: the case that failed and both sides of the mismatch.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite: how many cases ran and which failed.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    fn new(suite: &str) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, case: String, expected: String, got: String, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                case,
                expected,
                got,
            });
        }
    }

    fn expect_eq<V: PartialEq + Display>(&mut self, case: String, expected: V, got: V) {
        let ok = expected == got;
        self.record(case, expected.to_string(), got.to_string(), ok);
    }

    fn expect_true(&mut self, case: String, got: bool) {
        self.expect_eq(case, true, got);
    }
}

/// Runs every suite over partitions of size at most `max_size` and row
/// lengths `1..=max_a`.
pub fn run_all(max_size: u32, max_a: u32) -> Vec<SuiteResult> {
    vec![
        dual_pieri_oracle(max_size, max_a),
        grothendieck_pieri_oracle(max_size, max_a),
        pieri_three_forms(max_size, max_a),
        pieri_mobius_form(max_size, max_a),
        pieri_unit_sums(max_size, max_a),
        multiplicity_free_products(max_size, max_a),
        binomial_telescoping_grid(),
        hall_duality(max_size),
        mobius_recurrences(max_size, max_a),
        mobius_inversion(max_size, max_a),
        coatom_expansion(max_size, max_a),
        meet_support(max_size, max_a),
        inverse_series(max_size + max_a),
        filter_sum_action(max_size),
        specialization_ideal_sum(max_size),
    ]
}

fn one_row(a: u32) -> Partition {
    Partition::new(vec![a]).expect("single row")
}

/// Assembles `Σ w_i · f_i` as Schur data at the given cutoff.
fn combination(cutoff: Cutoff, parts: impl IntoIterator<Item = (SymFunc, i64)>) -> SymFunc {
    let mut terms: Vec<(Partition, i64)> = Vec::new();
    for (f, w) in parts {
        for (p, c) in f.terms() {
            terms.push((p.clone(), c * w));
        }
    }
    SymFunc::from_terms(Basis::Schur, cutoff, terms).expect("collected terms fit the cutoff")
}

/// The product `g_(a) · g_lambda` equals the closed-form expansion
/// `Σ d_mu g_mu`, compared exactly as Schur data.
fn dual_pieri_oracle(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("dual-pieri-oracle");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            let product =
                dual_grothendieck_schur(&one_row(a)).multiply(&dual_grothendieck_schur(&lambda));
            let expansion = combination(
                Cutoff::Infinite,
                pieri_dual(&lambda, a)
                    .iter()
                    .map(|(mu, c)| (dual_grothendieck_schur(mu), c)),
            );
            suite.expect_eq(format!("lambda={lambda} a={a}"), product, expansion);
        }
    }
    suite
}

/// The truncated product `G_(a) · G_lambda` equals `Σ c_mu G_mu` in every
/// coefficient of degree at most `|lambda| + a + 4`.
fn grothendieck_pieri_oracle(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("grothendieck-pieri-oracle");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            let d = lambda.size() + a + 4;
            let expand = |mu: &Partition| {
                grothendieck_schur(mu, d).expect("degree covers every support shape")
            };
            let product = expand(&one_row(a)).multiply(&expand(&lambda));
            let expansion = combination(
                Cutoff::Finite(d),
                pieri_grothendieck(&lambda, a)
                    .iter()
                    .filter(|(mu, _)| mu.size() <= d)
                    .map(|(mu, c)| (expand(mu), c)),
            );
            suite.expect_eq(format!("lambda={lambda} a={a} D={d}"), product, expansion);
        }
    }
    suite
}

/// The closed binomial forms agree with the inclusion–exclusion forms over
/// meets (dual side) and joins (stable side) of the size-`a` strips.
fn pieri_three_forms(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("pieri-three-forms");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            suite.expect_eq(
                format!("dual lambda={lambda} a={a}"),
                pieri_dual(&lambda, a),
                pieri_dual_alternating(&lambda, a),
            );
            suite.expect_eq(
                format!("stable lambda={lambda} a={a}"),
                pieri_grothendieck(&lambda, a),
                pieri_grothendieck_alternating(&lambda, a),
            );
        }
    }
    suite
}

/// The Pieri coefficients are Möbius values of the strip posets:
/// `d_mu = -mobius(mu, top)` on the at-most poset and
/// `c_mu = -mobius(bottom, mu)` on the at-least poset.
fn pieri_mobius_form(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("pieri-mobius-form");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            let closed = pieri_dual(&lambda, a);
            let poset = strip_poset(&lambda, a, StripBound::AtMost);
            for (node, coeff) in top_mobius_coefficients(&poset).expect("poset has a top") {
                if let StripNode::Strip(mu) = node {
                    suite.expect_eq(
                        format!("dual lambda={lambda} a={a} mu={mu}"),
                        closed.get(&mu),
                        coeff,
                    );
                }
            }

            let closed = pieri_grothendieck(&lambda, a);
            let poset = strip_poset(&lambda, a, StripBound::AtLeast);
            let table = poset.mobius_table();
            let bottom = poset.index_of(&StripNode::Bottom).expect("adjoined bottom");
            for (idx, node) in poset.elements().iter().enumerate() {
                if let StripNode::Strip(mu) = node {
                    let coeff = -table.get(bottom, idx).expect("bottom is below all");
                    suite.expect_eq(
                        format!("stable lambda={lambda} a={a} mu={mu}"),
                        closed.get(mu),
                        coeff,
                    );
                }
            }
        }
    }
    suite
}

/// Every ideal/filter partial sum of Pieri coefficients telescopes to 1.
fn pieri_unit_sums(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("pieri-unit-sums");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            for mu in lambda.horizontal_strips(StripMode::AtLeast, a) {
                let got = pieri_unit_sum(&lambda, a, &mu, StripBound::AtLeast)
                    .expect("enumerated strip is in class");
                suite.expect_eq(format!("filter lambda={lambda} a={a} mu={mu}"), 1, got);
            }
            for mu in lambda.horizontal_strips(StripMode::AtMost, a) {
                let got = pieri_unit_sum(&lambda, a, &mu, StripBound::AtMost)
                    .expect("enumerated strip is in class");
                suite.expect_eq(format!("ideal lambda={lambda} a={a} mu={mu}"), 1, got);
            }
        }
    }
    suite
}

/// Products with one-row sums are multiplicity-free: `ĝ_(a) · ĝ_lambda`
/// has coefficient exactly 1 on the ideal generated by the size-`a` strips,
/// and `G_(a) · G̃_lambda` expands with coefficient 1 over the filter.
fn multiplicity_free_products(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("multiplicity-free-products");
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            let product =
                dual_grothendieck_sum(&one_row(a)).multiply(&dual_grothendieck_sum(&lambda));
            let in_g = product
                .convert(Basis::DualGrothendieck)
                .expect("exact finite data");
            let ideal = SymFunc::from_terms(
                Basis::DualGrothendieck,
                Cutoff::Infinite,
                pieri_ideal_support(&lambda, a)
                    .into_iter()
                    .map(|mu| (mu, 1)),
            )
            .expect("ideal support is finite");
            suite.expect_eq(format!("ideal lambda={lambda} a={a}"), ideal, in_g);

            let d = lambda.size() + a + 4;
            let expand = |mu: &Partition| {
                grothendieck_schur(mu, d).expect("degree covers every support shape")
            };
            let filter_sum = grothendieck_sum(&lambda, d)
                .expect("degree covers lambda")
                .convert(Basis::Schur)
                .expect("finite cutoff");
            let product = expand(&one_row(a)).multiply(&filter_sum);
            let filter = combination(
                Cutoff::Finite(d),
                pieri_filter_support(&lambda, a, d)
                    .into_iter()
                    .map(|mu| (expand(&mu), 1)),
            );
            suite.expect_eq(
                format!("filter lambda={lambda} a={a} D={d}"),
                filter,
                product,
            );
        }
    }
    suite
}

/// The guarded telescoping identity for binomial sums holds on the full
/// reference grid.
fn binomial_telescoping_grid() -> SuiteResult {
    let mut suite = SuiteResult::new("binomial-telescoping");
    for r in -2..=5i64 {
        for q in 0..=6i64 {
            for lo in -1..=6i64 {
                for hi in lo..=6i64 {
                    let (lhs, rhs) = binomial_telescope(r, q, lo, hi);
                    suite.expect_eq(format!("r={r} q={q} lo={lo} hi={hi}"), rhs, lhs);
                }
            }
        }
    }
    suite
}

/// Hall duality: `(G_lambda, g_mu) = delta` with the stable side truncated
/// at `max_size`, which covers the degree of every `g_mu` in range.
fn hall_duality(max_size: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("hall-duality");
    for lambda in Partition::all_up_to(max_size) {
        let big = grothendieck_schur(&lambda, max_size).expect("size within cutoff");
        for mu in Partition::all_up_to(max_size) {
            let pairing =
                hall_pairing(&big, &dual_grothendieck_schur(&mu)).expect("cutoff covers degree");
            suite.expect_eq(
                format!("lambda={lambda} mu={mu}"),
                i64::from(lambda == mu),
                pairing,
            );
        }
    }
    suite
}

/// All strip posets in range, labeled, for the Möbius suites.
fn strip_posets(max_size: u32, max_a: u32) -> Vec<(String, FinitePoset<StripNode>)> {
    let mut out = Vec::new();
    for lambda in Partition::all_up_to(max_size) {
        for a in 1..=max_a {
            for (tag, bound) in [("le", StripBound::AtMost), ("ge", StripBound::AtLeast)] {
                out.push((
                    format!("strips({lambda},a={a},{tag})"),
                    strip_poset(&lambda, a, bound),
                ));
            }
        }
    }
    out
}

/// The reference lattices named in the verification plan.
fn named_divisor_posets() -> Vec<(String, FinitePoset<u64>)> {
    [12, 30, 60]
        .into_iter()
        .map(|n| (format!("divisors({n})"), divisor_poset(n)))
        .collect()
}

fn named_boolean_posets() -> Vec<(String, FinitePoset<u32>)> {
    [2, 3]
        .into_iter()
        .map(|k| (format!("boolean({k})"), boolean_poset(k)))
        .collect()
}

fn check_recurrences<T: Clone + Eq>(suite: &mut SuiteResult, name: &str, p: &FinitePoset<T>) {
    let table = p.mobius_table();
    suite.expect_true(
        format!("{name}: defining recurrences"),
        p.table_satisfies_recurrences(&table),
    );
}

/// Both defining recurrences of the Möbius function hold on every
/// constructed table.
fn mobius_recurrences(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("mobius-recurrences");
    for (name, p) in strip_posets(max_size, max_a) {
        check_recurrences(&mut suite, &name, &p);
    }
    for (name, p) in named_divisor_posets() {
        check_recurrences(&mut suite, &name, &p);
    }
    for (name, p) in named_boolean_posets() {
        check_recurrences(&mut suite, &name, &p);
    }
    suite
}

fn check_inversion<T: Clone + Eq>(
    suite: &mut SuiteResult,
    name: &str,
    p: &FinitePoset<T>,
    rng: &mut ChaCha8Rng,
) {
    for trial in 0..100 {
        let g: Vec<i64> = (0..p.len()).map(|_| rng.gen_range(-9..=9)).collect();
        suite.expect_true(
            format!("{name}: inversion trial {trial}"),
            mobius_inversion_holds(p, &g),
        );
    }
}

/// Möbius inversion recovers 100 random integer functions on each poset.
fn mobius_inversion(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("mobius-inversion");
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f_6269_7573);
    for (name, p) in strip_posets(max_size, max_a) {
        check_inversion(&mut suite, &name, &p, &mut rng);
    }
    for (name, p) in named_divisor_posets() {
        check_inversion(&mut suite, &name, &p, &mut rng);
    }
    for (name, p) in named_boolean_posets() {
        check_inversion(&mut suite, &name, &p, &mut rng);
    }
    suite
}

fn render_pairs<T: Display>(pairs: &BTreeMap<T, i64>) -> String {
    let body: Vec<String> = pairs.iter().map(|(t, c)| format!("{t}: {c}")).collect();
    format!("{{{}}}", body.join(", "))
}

fn check_coatom_net<T: Clone + Eq + Ord + Display>(
    suite: &mut SuiteResult,
    name: &str,
    p: &FinitePoset<T>,
) {
    let mut net: BTreeMap<T, i64> = BTreeMap::new();
    for (t, sign) in coatom_meet_expansion(p).expect("lattice with top") {
        *net.entry(t).or_insert(0) += sign;
    }
    net.retain(|_, c| *c != 0);
    let tops: BTreeMap<T, i64> = top_mobius_coefficients(p)
        .expect("poset has a top")
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .collect();
    let ok = net == tops;
    suite.record(
        format!("{name}: coatom net"),
        render_pairs(&tops),
        render_pairs(&net),
        ok,
    );
}

/// Inclusion–exclusion over coatom meets nets to the top Möbius
/// coefficients on the at-most strip posets and the reference lattices.
fn coatom_expansion(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("coatom-expansion");
    for (name, p) in strip_posets(max_size, max_a) {
        if name.contains("le") {
            check_coatom_net(&mut suite, &name, &p);
        }
    }
    for (name, p) in named_divisor_posets() {
        check_coatom_net(&mut suite, &name, &p);
    }
    for (name, p) in named_boolean_posets() {
        check_coatom_net(&mut suite, &name, &p);
    }
    suite
}

fn check_meet_support<T: Clone + Eq + Display>(
    suite: &mut SuiteResult,
    name: &str,
    p: &FinitePoset<T>,
) {
    let mut sub: Vec<T> = Vec::new();
    for (t, _) in coatom_meet_expansion(p).expect("lattice with top") {
        if !sub.contains(&t) {
            sub.push(t);
        }
    }
    let top = p.maximum().expect("poset has a top");
    let top_label = p.elements()[top].clone();
    if !sub.contains(&top_label) {
        sub.push(top_label);
    }
    suite.expect_true(
        format!("{name}: restriction to coatom meets"),
        mobius_restricts_to_meet_closure(p, &sub).expect("meet-closed subset"),
    );
}

/// Top Möbius values vanish off coatom meets and survive restriction to
/// the meet closure, on the same posets as [`coatom_expansion`].
fn meet_support(max_size: u32, max_a: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("mobius-meet-support");
    for (name, p) in strip_posets(max_size, max_a) {
        if name.contains("le") {
            check_meet_support(&mut suite, &name, &p);
        }
    }
    for (name, p) in named_divisor_posets() {
        check_meet_support(&mut suite, &name, &p);
    }
    for (name, p) in named_boolean_posets() {
        check_meet_support(&mut suite, &name, &p);
    }
    suite
}

/// `(Σ h_i)(Σ (-1)^i e_i) = 1` at every cutoff up to the bound.
fn inverse_series(max_degree: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("inverse-series");
    for d in 0..=max_degree {
        let product = complete_homogeneous_series(d).multiply(&alternating_elementary_series(d));
        let one = SymFunc::from_terms(Basis::Schur, Cutoff::Finite(d), [(Partition::empty(), 1)])
            .expect("constant term");
        suite.expect_eq(format!("cutoff={d}"), one, product);
    }
    suite
}

/// `(Σ h_i) · G_lambda = Σ_{mu ⊇ lambda} G_mu` truncated at `|lambda|+4`.
fn filter_sum_action(max_size: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("filter-sum-action");
    for lambda in Partition::all_up_to(max_size) {
        let d = lambda.size() + 4;
        let got = h1_times_grothendieck(&lambda, d).expect("degree covers lambda");
        let expected = grothendieck_sum(&lambda, d).expect("degree covers lambda");
        suite.expect_eq(format!("lambda={lambda} D={d}"), expected, got);
    }
    suite
}

/// `g_lambda(1, x) = Σ_{mu ⊆ lambda} g_mu(x)`.
fn specialization_ideal_sum(max_size: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("specialization-ideal-sum");
    for lambda in Partition::all_up_to(max_size) {
        suite.expect_true(
            format!("lambda={lambda}"),
            dual_sum_is_specialization(&lambda),
        );
    }
    suite
}
