//! Stable and dual stable Grothendieck functions and their Pieri rules.
//!
//! For a partition `lambda`, the dual stable function `g_lambda` is the
//! column-weighted generating function of reverse plane partitions of shape
//! `lambda` — a genuine symmetric function of degree `|lambda|` whose top
//! component is the Schur function `s_lambda`.  The stable function
//! `G_lambda` is the signed generating function of set-valued tableaux — a
//! series of unbounded degree with bottom component `s_lambda`, handled
//! here through exact truncations at a chosen degree.  The two families are
//! dual under the Hall pairing.
//!
//! Multiplying by a one-row function expands multiplicity-freely in the
//! *sum* bases `ĝ_mu = Σ_{nu ⊆ mu} g_nu` and `G̃_mu = Σ_{nu ⊇ mu} G_nu`,
//! and the coefficients on `g`/`G` themselves are supported on horizontal
//! strips over `lambda`:
//!
//! * dual side — strips of size at most `a`, coefficient
//!   `(-1)^(a - |mu/lambda|) * C(co_rows, a - |mu/lambda|)`;
//! * stable side — strips of size at least `a`, coefficient
//!   `(-1)^(|mu/lambda| - a) * C(rows - 1, |mu/lambda| - a)`.
//!
//! Both coefficient maps are also computed in two independent ways: as an
//! inclusion–exclusion over meets (joins) of the size-`a` strips, and as
//! Möbius-function values on the strip containment posets from
//! [`crate::poset`].

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::binom::binomial;
use crate::partition::{Partition, StripMode};
use crate::poset::{strip_poset, StripBound, StripNode};
use crate::symfunc::{self, Basis, Cutoff, SymFunc};
use crate::tableau::TableauFamily;
use crate::{Error, Result};

type Row = BTreeMap<Partition, i64>;

/// A finite map from partitions to integer coefficients with no zero
/// entries, as produced by the Pieri rules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientMap(BTreeMap<Partition, i64>);

impl CoefficientMap {
    /// Collects entries, summing duplicate keys and dropping zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (mu, c) in entries {
            *map.entry(mu).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        CoefficientMap(map)
    }

    /// Coefficient of `mu` (0 when absent).
    pub fn get(&self, mu: &Partition) -> i64 {
        self.0.get(mu).copied().unwrap_or(0)
    }

    /// Entries in canonical (degree, lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.0.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.0.keys().cloned().collect()
    }

    /// Keeps only the partitions fitting in a `rows x cols` rectangle.
    pub fn restrict_to_rectangle(&self, rows: u32, cols: u32) -> CoefficientMap {
        CoefficientMap(
            self.0
                .iter()
                .filter(|(mu, _)| mu.len() as u32 <= rows && mu.part(0) <= cols)
                .map(|(mu, &c)| (mu.clone(), c))
                .collect(),
        )
    }
}

/// Renders as `{[2]: 1, [2,1]: -1}`; the empty map as `{}`.
impl std::fmt::Display for CoefficientMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (mu, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mu}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for CoefficientMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            part: &'a Partition,
            coeff: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (part, &coeff) in &self.0 {
            seq.serialize_element(&Term { part, coeff })?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// Schur expansions (memoized rows).
// ---------------------------------------------------------------------------

type RowCache<K> = LazyLock<Mutex<HashMap<K, Arc<Row>>>>;

static DUAL_ROWS: RowCache<Partition> = LazyLock::new(Default::default);
static GROTH_ROWS: RowCache<(Partition, u32)> = LazyLock::new(Default::default);

/// Schur row of `g_lambda` (finite, exact).
pub(crate) fn dual_row(lambda: &Partition) -> Arc<Row> {
    if let Some(row) = DUAL_ROWS.lock().unwrap().get(lambda) {
        return Arc::clone(row);
    }
    let family = TableauFamily::reverse_plane(lambda.clone(), lambda.size())
        .expect("alphabet equals the degree bound");
    let row = Arc::new(family.generating_function().schur_data());
    Arc::clone(
        DUAL_ROWS
            .lock()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(row),
    )
}

/// Schur row of `G_lambda` truncated at `degree`; requires
/// `degree >= |lambda|`.  When they are equal only the bottom component
/// `s_lambda` survives, with no tableaux to enumerate.
pub(crate) fn grothendieck_row(lambda: &Partition, degree: u32) -> Arc<Row> {
    assert!(
        degree >= lambda.size(),
        "truncation below the bottom degree"
    );
    let key = (lambda.clone(), degree);
    if let Some(row) = GROTH_ROWS.lock().unwrap().get(&key) {
        return Arc::clone(row);
    }
    let row = if degree == lambda.size() {
        Row::from([(lambda.clone(), 1)])
    } else {
        let family = TableauFamily::set_valued(lambda.clone(), degree, degree)
            .expect("alphabet equals the degree cap");
        family.generating_function().schur_data()
    };
    let row = Arc::new(row);
    Arc::clone(GROTH_ROWS.lock().unwrap().entry(key).or_insert(row))
}

/// The dual stable function `g_lambda`, expanded over Schur functions.
/// Exact (infinite cutoff): its degree is `|lambda|`.
pub fn dual_grothendieck_schur(lambda: &Partition) -> SymFunc {
    let row = dual_row(lambda);
    SymFunc::from_terms(
        Basis::Schur,
        Cutoff::Infinite,
        row.iter().map(|(mu, &c)| (mu.clone(), c)),
    )
    .expect("finite exact data")
}

/// The stable function `G_lambda` truncated at `degree`, expanded over
/// Schur functions.  Errors when `degree < |lambda|`, the bottom degree.
pub fn grothendieck_schur(lambda: &Partition, degree: u32) -> Result<SymFunc> {
    if degree < lambda.size() {
        return Err(Error::CutoffExceeded {
            degree: lambda.size(),
            cutoff: degree,
        });
    }
    let row = grothendieck_row(lambda, degree);
    Ok(SymFunc::from_terms(
        Basis::Schur,
        Cutoff::Finite(degree),
        row.iter().map(|(mu, &c)| (mu.clone(), c)),
    )
    .expect("rows respect the cutoff"))
}

/// The ideal sum `ĝ_lambda = Σ_{mu ⊆ lambda} g_mu`, in the `g` basis.
pub fn dual_grothendieck_sum(lambda: &Partition) -> SymFunc {
    SymFunc::from_terms(
        Basis::DualGrothendieck,
        Cutoff::Infinite,
        lambda.sub_partitions().into_iter().map(|mu| (mu, 1)),
    )
    .expect("sub-partitions fit any cutoff")
}

/// The filter sum `G̃_lambda = Σ_{mu ⊇ lambda} G_mu` truncated at `degree`,
/// in the `G` basis.  Errors when `degree < |lambda|`.
pub fn grothendieck_sum(lambda: &Partition, degree: u32) -> Result<SymFunc> {
    if degree < lambda.size() {
        return Err(Error::CutoffExceeded {
            degree: lambda.size(),
            cutoff: degree,
        });
    }
    let terms = (lambda.size()..=degree)
        .flat_map(Partition::all_of_size)
        .filter(|mu| mu.contains(lambda))
        .map(|mu| (mu, 1));
    SymFunc::from_terms(Basis::Grothendieck, Cutoff::Finite(degree), terms)
}

// ---------------------------------------------------------------------------
// Pieri coefficients: closed form, inclusion–exclusion form, Möbius form.
// ---------------------------------------------------------------------------

/// Coefficients of `g_(a) * g_lambda = Σ_mu d_mu g_mu` (closed form):
/// horizontal strips `mu/lambda` of size at most `a`, with
/// `d_mu = (-1)^(a - size) * C(co_rows, a - size)`.
pub fn pieri_dual(lambda: &Partition, a: u32) -> CoefficientMap {
    CoefficientMap::from_entries(
        lambda
            .horizontal_strips(StripMode::AtMost, a)
            .into_iter()
            .map(|mu| {
                let stats = lambda.strip_stats(&mu).expect("enumerated strip");
                let slack = a - stats.size;
                let sign = if slack.is_multiple_of(2) { 1 } else { -1 };
                let coeff = sign * binomial(i64::from(stats.co_rows), i64::from(slack));
                (mu, coeff)
            }),
    )
}

/// Coefficients of `G_(a) * G̃_lambda = Σ_mu c_mu G̃_mu`, equivalently of
/// the stable Pieri expansion (closed form): horizontal strips `mu/lambda`
/// of size at least `a`, with
/// `c_mu = (-1)^(size - a) * C(rows - 1, size - a)`.
pub fn pieri_grothendieck(lambda: &Partition, a: u32) -> CoefficientMap {
    CoefficientMap::from_entries(
        lambda
            .horizontal_strips(StripMode::AtLeast, a)
            .into_iter()
            .map(|mu| {
                let stats = lambda.strip_stats(&mu).expect("enumerated strip");
                let over = i64::from(stats.size - a);
                let sign = if over % 2 == 0 { 1 } else { -1 };
                let coeff = sign * binomial(i64::from(stats.rows) - 1, over);
                (mu, coeff)
            }),
    )
}

/// The dual Pieri coefficients by inclusion–exclusion: a signed sum of
/// `(-1)^(|S| - 1)` over nonempty subsets `S` of the size-`a` strips,
/// attributed to the meet (componentwise minimum) of `S`.
pub fn pieri_dual_alternating(lambda: &Partition, a: u32) -> CoefficientMap {
    alternating_over_strips(lambda, a, Partition::meet)
}

/// The stable Pieri coefficients by inclusion–exclusion over joins
/// (componentwise maxima) of nonempty subsets of the size-`a` strips.
pub fn pieri_grothendieck_alternating(lambda: &Partition, a: u32) -> CoefficientMap {
    alternating_over_strips(lambda, a, Partition::join)
}

fn alternating_over_strips(
    lambda: &Partition,
    a: u32,
    combine: fn(&Partition, &Partition) -> Partition,
) -> CoefficientMap {
    let strips: Vec<Partition> = lambda
        .horizontal_strips(StripMode::Exact, a)
        .into_iter()
        .collect();
    assert!(
        strips.len() < usize::BITS as usize,
        "subset enumeration over strips"
    );
    let mut acc = BTreeMap::new();
    for mask in 1u64..(1 << strips.len()) {
        let mut chosen = (0..strips.len()).filter(|i| mask & (1 << i) != 0);
        let first = strips[chosen.next().expect("nonempty subset")].clone();
        let combined = chosen.fold(first, |acc, i| combine(&acc, &strips[i]));
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *acc.entry(combined).or_insert(0) += sign;
    }
    CoefficientMap::from_entries(acc)
}

/// A single Pieri coefficient read off the Möbius function of the strip
/// containment poset: `-mobius(mu, top)` on the at-most poset for the dual
/// side, `-mobius(bottom, mu)` on the at-least poset for the stable side.
///
/// Errors with [`Error::NotInStripClass`] when `mu` is not an element of
/// the poset.
pub fn mobius_pieri_coefficient(
    lambda: &Partition,
    a: u32,
    mu: &Partition,
    bound: StripBound,
) -> Result<i64> {
    let poset = strip_poset(lambda, a, bound);
    let node = StripNode::Strip(mu.clone());
    let Some(idx) = poset.index_of(&node) else {
        return Err(Error::NotInStripClass {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    };
    let table = poset.mobius_table();
    let value = match bound {
        StripBound::AtMost => {
            let top = poset.maximum().expect("adjoined top");
            table.get(idx, top).expect("strips sit below the top")
        }
        StripBound::AtLeast => {
            let bottom = poset.index_of(&StripNode::Bottom).expect("adjoined bottom");
            table.get(bottom, idx).expect("strips sit above the bottom")
        }
    };
    Ok(-value)
}

/// The telescoping sum of Pieri coefficients over one order ideal or
/// filter of the strip class; always 1.
///
/// For the at-least bound this is `Σ c_nu` over strips `nu ⊆ mu` of size at
/// least `a`; for the at-most bound, `Σ d_nu` over strips `nu ⊇ mu` of size
/// at most `a`.  Errors when `mu` itself is not a strip of the class.
pub fn pieri_unit_sum(
    lambda: &Partition,
    a: u32,
    mu: &Partition,
    bound: StripBound,
) -> Result<i64> {
    let not_in_class = || Error::NotInStripClass {
        lambda: lambda.clone(),
        mu: mu.clone(),
    };
    if !mu.is_horizontal_strip_over(lambda) {
        return Err(not_in_class());
    }
    let size = mu.size() - lambda.size();
    match bound {
        StripBound::AtLeast => {
            if size < a {
                return Err(not_in_class());
            }
            Ok(pieri_grothendieck(lambda, a)
                .iter()
                .filter(|(nu, _)| mu.contains(nu))
                .map(|(_, c)| c)
                .sum())
        }
        StripBound::AtMost => {
            if size > a {
                return Err(not_in_class());
            }
            Ok(pieri_dual(lambda, a)
                .iter()
                .filter(|(nu, _)| nu.contains(mu))
                .map(|(_, c)| c)
                .sum())
        }
    }
}

/// Support of `g_(a) * ĝ_lambda` in the `g` basis: the union of the order
/// ideals below the size-`a` strips.
pub fn pieri_ideal_support(lambda: &Partition, a: u32) -> BTreeSet<Partition> {
    lambda
        .horizontal_strips(StripMode::Exact, a)
        .iter()
        .flat_map(|mu| mu.sub_partitions())
        .collect()
}

/// Support of `G_(a) * G̃_lambda` in the `G` basis up to degree `degree`:
/// the union of the order filters above the size-`a` strips.
pub fn pieri_filter_support(lambda: &Partition, a: u32, degree: u32) -> BTreeSet<Partition> {
    let strips = lambda.horizontal_strips(StripMode::Exact, a);
    Partition::all_up_to(degree)
        .into_iter()
        .filter(|mu| strips.iter().any(|sigma| mu.contains(sigma)))
        .collect()
}

// ---------------------------------------------------------------------------
// Identities.
// ---------------------------------------------------------------------------

/// `(Σ_i h_i) * G_lambda` truncated at `degree`, re-expanded in the `G`
/// basis; equals [`grothendieck_sum`] of `lambda`.
pub fn h1_times_grothendieck(lambda: &Partition, degree: u32) -> Result<SymFunc> {
    let g = grothendieck_schur(lambda, degree)?;
    symfunc::complete_homogeneous_series(degree)
        .multiply(&g)
        .convert(Basis::Grothendieck)
}

/// Whether `g_lambda(1, x) = Σ_{mu ⊆ lambda} g_mu(x)`: the specialization
/// sending one variable to 1 turns `g_lambda` into the ideal sum.
pub fn dual_sum_is_specialization(lambda: &Partition) -> bool {
    let specialized = dual_grothendieck_schur(lambda)
        .specialize_one(lambda.size() + 1)
        .expect("ample alphabet on an exact function");
    let summed = dual_grothendieck_sum(lambda)
        .convert(Basis::Schur)
        .expect("dual basis converts exactly");
    specialized == summed
}

/// Deletes the `g`/`G` terms not fitting in a `rows x cols` rectangle; the
/// projection onto the Grothendieck ring of the corresponding Grassmannian.
/// Rejects other bases, whose elements do not simply vanish under that
/// quotient.
pub fn rectangle_project(f: &SymFunc, rows: u32, cols: u32) -> Result<SymFunc> {
    if !matches!(f.basis(), Basis::DualGrothendieck | Basis::Grothendieck) {
        return Err(Error::UnsupportedBasis {
            op: "rectangle_project",
            basis: f.basis(),
        });
    }
    let terms = f
        .terms()
        .filter(|(mu, _)| mu.len() as u32 <= rows && mu.part(0) <= cols)
        .map(|(mu, c)| (mu.clone(), c));
    SymFunc::from_terms(f.basis(), f.cutoff(), terms)
}
