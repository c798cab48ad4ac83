//! Degree-truncated symmetric functions over exact integer coefficients.
//!
//! A [`SymFunc`] is a finite map from partitions to `i64` coefficients,
//! tagged with the basis it is written in and a degree cutoff.  Terms of
//! degree above a finite cutoff are *unknown* (truncated away), not zero;
//! all operations track cutoffs so that every stored coefficient is exact.
//!
//! Conversions run through the Schur basis.  The classical bases are
//! related by iterated Pieri expansion (`h` to `s`), conjugation (`e` from
//! `h`), and unitriangular Kostka recursions (`m` and `s` in both
//! directions).  The two Grothendieck bases are unitriangular over Schur by
//! degree — `g` elements are `s` plus lower-degree terms, `G` elements are
//! `s` plus higher-degree terms — so those conversions are triangular
//! eliminations ordered by degree.  All conversion rows are memoized in
//! process-wide caches.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::grothendieck;
use crate::partition::{Partition, StripMode};
use crate::{Error, Result};

/// The six bases a [`SymFunc`] can be written in.
///
/// The first four are the classical ones, indexed by partitions: monomial
/// `m`, Schur `s`, complete homogeneous `h`, elementary `e`.  The last two
/// are the dual stable Grothendieck basis `g` (finite-degree elements) and
/// the stable Grothendieck basis `G` (elements of unbounded degree, so data
/// in this basis always carries a finite cutoff).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "monomial")]
    Monomial,
    #[serde(rename = "schur")]
    Schur,
    #[serde(rename = "homogeneous")]
    Homogeneous,
    #[serde(rename = "elementary")]
    Elementary,
    #[serde(rename = "g")]
    DualGrothendieck,
    #[serde(rename = "G")]
    Grothendieck,
}

/// Degree cutoff of a symmetric function: terms of degree above a finite
/// cutoff are unknown (truncated away), not zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cutoff {
    Finite(u32),
    Infinite,
}

impl Cutoff {
    /// True when degree `d` is within this cutoff.
    pub fn admits(self, d: u32) -> bool {
        match self {
            Cutoff::Finite(cut) => d <= cut,
            Cutoff::Infinite => true,
        }
    }

    /// The coarser of two cutoffs (minimum).
    pub fn min(self, other: Cutoff) -> Cutoff {
        match (self, other) {
            (Cutoff::Finite(a), Cutoff::Finite(b)) => Cutoff::Finite(a.min(b)),
            (Cutoff::Finite(a), Cutoff::Infinite) | (Cutoff::Infinite, Cutoff::Finite(a)) => {
                Cutoff::Finite(a)
            }
            (Cutoff::Infinite, Cutoff::Infinite) => Cutoff::Infinite,
        }
    }
}

type Row = BTreeMap<Partition, i64>;

/// An exact symmetric function: basis tag, degree cutoff, and a sparse
/// coefficient map with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    cutoff: Cutoff,
    coeffs: Row,
}

impl SymFunc {
    pub fn zero(basis: Basis, cutoff: Cutoff) -> Result<Self> {
        SymFunc::from_terms(basis, cutoff, [])
    }

    /// The single basis element `mu`, coefficient 1.
    pub fn basis_element(basis: Basis, mu: Partition, cutoff: Cutoff) -> Result<Self> {
        SymFunc::from_terms(basis, cutoff, [(mu, 1)])
    }

    /// Builds a function from (partition, coefficient) terms, summing
    /// duplicates and dropping zeros.
    ///
    /// Errors when a term exceeds the cutoff, or when the `G` basis is
    /// paired with an infinite cutoff (its elements have unbounded degree,
    /// so untruncated data in that basis cannot be represented).
    pub fn from_terms(
        basis: Basis,
        cutoff: Cutoff,
        terms: impl IntoIterator<Item = (Partition, i64)>,
    ) -> Result<Self> {
        if basis == Basis::Grothendieck && cutoff == Cutoff::Infinite {
            return Err(Error::InfiniteGrothendieckCutoff);
        }
        let mut coeffs = Row::new();
        for (mu, c) in terms {
            if !cutoff.admits(mu.size()) {
                let degree = mu.size();
                let Cutoff::Finite(cut) = cutoff else {
                    unreachable!()
                };
                return Err(Error::CutoffExceeded {
                    degree,
                    cutoff: cut,
                });
            }
            *coeffs.entry(mu).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(SymFunc {
            basis,
            cutoff,
            coeffs,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    /// Coefficient of the given basis element (0 when absent).
    pub fn coeff(&self, mu: &Partition) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Terms in canonical order: by (degree, lexicographic) partition key.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest degree with a stored term; 0 for the zero function.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Sum; both sides must share a basis, and the result carries the
    /// coarser cutoff.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        let cutoff = self.cutoff.min(other.cutoff);
        let terms = self
            .coeffs
            .iter()
            .chain(other.coeffs.iter())
            .filter(|(mu, _)| cutoff.admits(mu.size()))
            .map(|(mu, &c)| (mu.clone(), c));
        SymFunc::from_terms(self.basis, cutoff, terms)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scaled(-1))
    }

    pub fn scaled(&self, factor: i64) -> SymFunc {
        let mut out = self.clone();
        if factor == 0 {
            out.coeffs.clear();
        } else {
            for c in out.coeffs.values_mut() {
                *c *= factor;
            }
        }
        out
    }

    /// Drops terms of degree above `d` and tightens the cutoff to `d`.
    pub fn truncated(&self, d: u32) -> SymFunc {
        let cutoff = self.cutoff.min(Cutoff::Finite(d));
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(mu, _)| mu.size() <= d)
            .map(|(mu, &c)| (mu.clone(), c))
            .collect();
        SymFunc {
            basis: self.basis,
            cutoff,
            coeffs,
        }
    }

    /// Product, returned in the Schur basis at the coarser cutoff.  Inputs
    /// may be in any bases; every coefficient of degree within the result
    /// cutoff is exact.
    ///
    /// The route is through the complete homogeneous basis, where
    /// multiplication is concatenation of indexing partitions.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let cutoff = self.cutoff.min(other.cutoff);
        let left = h_data(&self.schur_data());
        let right = h_data(&other.schur_data());
        let mut product = Row::new();
        for (a, ca) in &left {
            for (b, cb) in &right {
                if !cutoff.admits(a.size() + b.size()) {
                    continue;
                }
                let key = merge_parts(a, b);
                *product.entry(key).or_insert(0) += ca * cb;
            }
        }
        product.retain(|_, c| *c != 0);
        let mut schur = Row::new();
        for (mu, c) in &product {
            accumulate(&mut schur, &h_to_s_row(mu), *c);
        }
        schur.retain(|mu, c| *c != 0 && cutoff.admits(mu.size()));
        SymFunc {
            basis: Basis::Schur,
            cutoff,
            coeffs: schur,
        }
    }

    /// Rewrites the function in another basis; exact at the same cutoff.
    ///
    /// Targeting the `G` basis requires a finite cutoff.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        if target == Basis::Grothendieck && self.cutoff == Cutoff::Infinite {
            return Err(Error::InfiniteGrothendieckCutoff);
        }
        let schur = self.schur_data();
        let coeffs = match target {
            Basis::Schur => schur,
            Basis::Monomial => expand_by_rows(&schur, s_to_m_row),
            Basis::Homogeneous => expand_by_rows(&schur, s_to_h_row),
            Basis::Elementary => expand_by_rows(&schur, s_to_e_row),
            Basis::DualGrothendieck => eliminate_from_top(schur),
            Basis::Grothendieck => {
                let Cutoff::Finite(d) = self.cutoff else {
                    unreachable!()
                };
                eliminate_from_bottom(schur, d)
            }
        };
        Ok(SymFunc {
            basis: target,
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// The Schur-coefficient map of this function (exact within cutoff).
    pub(crate) fn schur_data(&self) -> Row {
        let mut out = Row::new();
        match self.basis {
            Basis::Schur => out = self.coeffs.clone(),
            Basis::Monomial => {
                for (mu, c) in &self.coeffs {
                    accumulate(&mut out, &m_to_s_row(mu), *c);
                }
            }
            Basis::Homogeneous => {
                for (mu, c) in &self.coeffs {
                    accumulate(&mut out, &h_to_s_row(mu), *c);
                }
            }
            Basis::Elementary => {
                for (mu, c) in &self.coeffs {
                    accumulate(&mut out, &e_to_s_row(mu), *c);
                }
            }
            Basis::DualGrothendieck => {
                for (mu, c) in &self.coeffs {
                    accumulate(&mut out, &grothendieck::dual_row(mu), *c);
                }
            }
            Basis::Grothendieck => {
                let Cutoff::Finite(d) = self.cutoff else {
                    unreachable!("G-basis invariant")
                };
                for (mu, c) in &self.coeffs {
                    accumulate(&mut out, &grothendieck::grothendieck_row(mu, d), *c);
                }
            }
        }
        out.retain(|mu, c| *c != 0 && self.cutoff.admits(mu.size()));
        out
    }

    /// The specialization sending one variable to 1: `f(x) -> f(1, x)`,
    /// re-expanded in the original basis.  A ring morphism.
    ///
    /// `alphabet` is the total number of variables of the monomial-level
    /// model and must exceed the degree of `f`, which guarantees the result
    /// determines the symmetric function exactly; functions in the `G`
    /// basis are rejected (their data is truncated, the specialization of
    /// the missing tail is not).
    pub fn specialize_one(&self, alphabet: u32) -> Result<SymFunc> {
        if self.basis == Basis::Grothendieck {
            return Err(Error::UnsupportedBasis {
                op: "specialize_one",
                basis: self.basis,
            });
        }
        let degree = self.degree();
        if alphabet < degree + 1 {
            return Err(Error::AlphabetTooSmall { alphabet, degree });
        }
        // In the elementary basis the substitution is exact and finite:
        // e_k(1, x) = e_k(x) + e_{k-1}(x).
        let elementary = self.convert(Basis::Elementary)?;
        let mut out = Row::new();
        for (mu, c) in &elementary.coeffs {
            let mut partial: Vec<(Vec<u32>, i64)> = vec![(Vec::new(), *c)];
            for &part in mu.parts() {
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (parts, coeff) in partial {
                    for kept in [part, part - 1] {
                        let mut extended = parts.clone();
                        if kept > 0 {
                            extended.push(kept);
                        }
                        next.push((extended, coeff));
                    }
                }
                partial = next;
            }
            for (mut parts, coeff) in partial {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                *out.entry(Partition::new(parts).unwrap()).or_insert(0) += coeff;
            }
        }
        out.retain(|_, c| *c != 0);
        SymFunc {
            basis: Basis::Elementary,
            cutoff: self.cutoff,
            coeffs: out,
        }
        .convert(self.basis)
    }
}

impl Basis {
    /// One-letter tag used in rendered terms: `m`, `s`, `h`, `e`, `g`, `G`.
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Homogeneous => 'h',
            Basis::Elementary => 'e',
            Basis::DualGrothendieck => 'g',
            Basis::Grothendieck => 'G',
        }
    }
}

/// Renders terms like `s[2,1] - s[1,1] + 3 s[3]`; the zero function as `0`.
impl std::fmt::Display for SymFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if magnitude != 1 {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{}{}", self.basis.letter(), mu)?;
        }
        Ok(())
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SymFunc", 3)?;
        st.serialize_field("basis", &self.basis)?;
        let cutoff = match self.cutoff {
            Cutoff::Finite(d) => Some(d),
            Cutoff::Infinite => None,
        };
        st.serialize_field("cutoff", &cutoff)?;
        st.serialize_field("terms", &Terms(&self.coeffs))?;
        st.end()
    }
}

struct Terms<'a>(&'a Row);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            part: &'a Partition,
            coeff: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (part, &coeff) in self.0 {
            seq.serialize_element(&Term { part, coeff })?;
        }
        seq.end()
    }
}

/// The Hall inner product, under which the Schur basis is orthonormal.
///
/// Both arguments are converted to Schur data and paired termwise.  To be
/// conclusive, at least one side must be untruncated and the other's cutoff
/// must cover its degree; otherwise unknown high-degree terms could change
/// the value and the pairing errors out.
pub fn hall_pairing(f: &SymFunc, g: &SymFunc) -> Result<i64> {
    match (f.cutoff(), g.cutoff()) {
        (Cutoff::Infinite, Cutoff::Infinite) => {}
        (Cutoff::Finite(d), Cutoff::Infinite) => {
            if g.degree() > d {
                return Err(Error::InconclusivePairing {
                    cutoff: d,
                    degree: g.degree(),
                });
            }
        }
        (Cutoff::Infinite, Cutoff::Finite(d)) => {
            if f.degree() > d {
                return Err(Error::InconclusivePairing {
                    cutoff: d,
                    degree: f.degree(),
                });
            }
        }
        (Cutoff::Finite(a), Cutoff::Finite(b)) => {
            return Err(Error::InconclusivePairing {
                cutoff: a.min(b),
                degree: f.degree().max(g.degree()),
            });
        }
    }
    let fs = f.schur_data();
    let gs = g.schur_data();
    Ok(fs
        .iter()
        .filter_map(|(mu, cf)| gs.get(mu).map(|cg| cf * cg))
        .sum())
}

/// `Σ_{i <= d} h_i`: the inverse of the alternating elementary series,
/// truncated at degree `d`.
pub fn complete_homogeneous_series(d: u32) -> SymFunc {
    let terms = (0..=d).map(|i| {
        (
            Partition::from_decreasing(if i == 0 { vec![] } else { vec![i] }),
            1,
        )
    });
    SymFunc::from_terms(Basis::Homogeneous, Cutoff::Finite(d), terms).unwrap()
}

/// `Σ_{i <= d} (-1)^i e_i`, truncated at degree `d`.
pub fn alternating_elementary_series(d: u32) -> SymFunc {
    let terms = (0..=d).map(|i| {
        (
            Partition::from_decreasing(if i == 0 { vec![] } else { vec![i] }),
            if i % 2 == 0 { 1 } else { -1 },
        )
    });
    SymFunc::from_terms(Basis::Elementary, Cutoff::Finite(d), terms).unwrap()
}

// ---------------------------------------------------------------------------
// Conversion kernels.  Each returns the expansion of one basis element as a
// coefficient row over the target basis, memoized process-wide.
// ---------------------------------------------------------------------------

fn cached<K, F>(cache: &Mutex<HashMap<K, Arc<Row>>>, key: &K, compute: F) -> Arc<Row>
where
    K: Clone + Eq + std::hash::Hash,
    F: FnOnce() -> Row,
{
    if let Some(row) = cache.lock().unwrap().get(key) {
        return Arc::clone(row);
    }
    // Compute outside the lock: the computation may recurse into the cache.
    let row = Arc::new(compute());
    Arc::clone(cache.lock().unwrap().entry(key.clone()).or_insert(row))
}

static H_TO_S: LazyLock<Mutex<HashMap<Partition, Arc<Row>>>> = LazyLock::new(Default::default);
static S_TO_H: LazyLock<Mutex<HashMap<Partition, Arc<Row>>>> = LazyLock::new(Default::default);
static S_TO_M: LazyLock<Mutex<HashMap<Partition, Arc<Row>>>> = LazyLock::new(Default::default);
static M_TO_S: LazyLock<Mutex<HashMap<Partition, Arc<Row>>>> = LazyLock::new(Default::default);

pub(crate) fn accumulate(target: &mut Row, row: &Row, factor: i64) {
    if factor == 0 {
        return;
    }
    for (mu, c) in row {
        let entry = target.entry(mu.clone()).or_insert(0);
        *entry += c * factor;
        if *entry == 0 {
            target.remove(mu);
        }
    }
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_decreasing(parts)
}

fn expand_by_rows(schur: &Row, row_of: impl Fn(&Partition) -> Arc<Row>) -> Row {
    let mut out = Row::new();
    for (mu, c) in schur {
        accumulate(&mut out, &row_of(mu), *c);
    }
    out
}

fn h_data(schur: &Row) -> Row {
    expand_by_rows(schur, s_to_h_row)
}

/// Schur expansion of `h_mu`, by iterated horizontal-strip addition:
/// multiplying by `h_a` sends `s_nu` to the sum of `s_kappa` over horizontal
/// strips `kappa/nu` of size `a`.
fn h_to_s_row(mu: &Partition) -> Arc<Row> {
    cached(&H_TO_S, mu, || {
        let mut acc = Row::from([(Partition::empty(), 1)]);
        for &a in mu.parts() {
            let mut next = Row::new();
            for (nu, c) in &acc {
                for kappa in nu.horizontal_strips(StripMode::Exact, a) {
                    *next.entry(kappa).or_insert(0) += c;
                }
            }
            acc = next;
        }
        acc
    })
}

/// Kostka number `K_{lambda,mu}`: the coefficient of `s_lambda` in `h_mu`;
/// equivalently the number of semistandard tableaux of shape `lambda` and
/// content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> i64 {
    h_to_s_row(mu).get(lambda).copied().unwrap_or(0)
}

/// `h`-expansion of `s_nu`, inverting the unitriangular Kostka relation
/// `h_nu = s_nu + Σ_{lambda > nu} K_{lambda,nu} s_lambda` (strictly larger
/// in dominance), by recursion on the correction terms.
fn s_to_h_row(nu: &Partition) -> Arc<Row> {
    cached(&S_TO_H, nu, || {
        let mut out = Row::from([(nu.clone(), 1)]);
        for (lambda, k) in h_to_s_row(nu).iter() {
            if lambda != nu {
                accumulate(&mut out, &s_to_h_row(lambda), -k);
            }
        }
        out
    })
}

/// `e`-expansion of `s_nu`: conjugation swaps `h` and `e` while sending
/// `s_nu` to `s_{nu'}`, so this is the `h`-row of the conjugate shape.
fn s_to_e_row(nu: &Partition) -> Arc<Row> {
    s_to_h_row(&nu.conjugate())
}

/// Schur expansion of `e_mu`: conjugate the keys of the `h_mu` row.
fn e_to_s_row(mu: &Partition) -> Arc<Row> {
    let base = h_to_s_row(mu);
    Arc::new(
        base.iter()
            .map(|(lambda, &c)| (lambda.conjugate(), c))
            .collect(),
    )
}

/// Monomial expansion of `s_lambda`: the Kostka row
/// `s_lambda = Σ_mu K_{lambda,mu} m_mu` over partitions of the same size.
fn s_to_m_row(lambda: &Partition) -> Arc<Row> {
    cached(&S_TO_M, lambda, || {
        Partition::all_of_size(lambda.size())
            .into_iter()
            .filter_map(|mu| {
                let k = kostka_number(lambda, &mu);
                (k != 0).then_some((mu, k))
            })
            .collect()
    })
}

/// Schur expansion of `m_nu`, inverting the Kostka relation
/// `s_nu = m_nu + Σ_{mu < nu} K_{nu,mu} m_mu` by recursion.
fn m_to_s_row(nu: &Partition) -> Arc<Row> {
    cached(&M_TO_S, nu, || {
        let mut out = Row::from([(nu.clone(), 1)]);
        for (mu, k) in s_to_m_row(nu).iter() {
            if mu != nu {
                accumulate(&mut out, &m_to_s_row(mu), -k);
            }
        }
        out
    })
}

/// Solves `schur = Σ c_lambda g_lambda` by eliminating the highest-degree
/// term first: `g_lambda = s_lambda + lower-degree terms`, so the top
/// surviving Schur coefficient is the next `g` coefficient.
fn eliminate_from_top(mut schur: Row) -> Row {
    let mut out = Row::new();
    while let Some((lambda, c)) = schur.iter().next_back().map(|(p, &c)| (p.clone(), c)) {
        debug_assert_ne!(c, 0);
        out.insert(lambda.clone(), c);
        accumulate(&mut schur, &grothendieck::dual_row(&lambda), -c);
        debug_assert!(!schur.contains_key(&lambda));
    }
    out
}

/// Solves `schur = Σ c_lambda G_lambda` (all data truncated at degree `d`)
/// by eliminating the lowest-degree term first: `G_lambda = s_lambda +
/// higher-degree terms`.
fn eliminate_from_bottom(mut schur: Row, d: u32) -> Row {
    let mut out = Row::new();
    while let Some((lambda, c)) = schur.iter().next().map(|(p, &c)| (p.clone(), c)) {
        debug_assert_ne!(c, 0);
        out.insert(lambda.clone(), c);
        accumulate(&mut schur, &grothendieck::grothendieck_row(&lambda, d), -c);
        debug_assert!(!schur.contains_key(&lambda));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, pt(parts), Cutoff::Infinite).unwrap()
    }

    // === construction ===

    #[test]
    fn construction_and_invariants() {
        let f = SymFunc::from_terms(
            Basis::Schur,
            Cutoff::Infinite,
            [(pt(&[2]), 1), (pt(&[1, 1]), 2), (pt(&[2]), -1)],
        )
        .unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coeff(&pt(&[1, 1])), 2);
        assert_eq!(f.coeff(&pt(&[2])), 0);
        assert_eq!(f.degree(), 2);

        assert!(matches!(
            SymFunc::basis_element(Basis::Schur, pt(&[3, 1]), Cutoff::Finite(2)),
            Err(Error::CutoffExceeded {
                degree: 4,
                cutoff: 2
            })
        ));
        assert!(matches!(
            SymFunc::zero(Basis::Grothendieck, Cutoff::Infinite),
            Err(Error::InfiniteGrothendieckCutoff)
        ));
    }

    #[test]
    fn add_requires_matching_bases() {
        let h = SymFunc::basis_element(Basis::Homogeneous, pt(&[1]), Cutoff::Infinite).unwrap();
        assert!(matches!(s(&[1]).add(&h), Err(Error::BasisMismatch { .. })));
        let sum = s(&[1]).add(&s(&[1])).unwrap();
        assert_eq!(sum.coeff(&pt(&[1])), 2);
        assert!(s(&[1]).sub(&s(&[1])).unwrap().is_zero());
    }

    // === kernels against hand values ===

    #[test]
    fn kostka_values() {
        assert_eq!(kostka_number(&pt(&[2, 1]), &pt(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&pt(&[2, 1]), &pt(&[2, 1])), 1);
        assert_eq!(kostka_number(&pt(&[2, 1]), &pt(&[3])), 0);
        assert_eq!(kostka_number(&pt(&[3]), &pt(&[1, 1, 1])), 1);
        assert_eq!(kostka_number(&pt(&[1, 1, 1]), &pt(&[1, 1, 1])), 1);
    }

    #[test]
    fn classical_small_expansions() {
        // h2 = s2, e2 = s11, h21 = s21 + s3, m11 = s11 - ... check a few.
        let h2 = SymFunc::basis_element(Basis::Homogeneous, pt(&[2]), Cutoff::Infinite).unwrap();
        assert_eq!(h2.convert(Basis::Schur).unwrap(), s(&[2]));

        let e2 = SymFunc::basis_element(Basis::Elementary, pt(&[2]), Cutoff::Infinite).unwrap();
        assert_eq!(e2.convert(Basis::Schur).unwrap(), s(&[1, 1]));

        let h21 =
            SymFunc::basis_element(Basis::Homogeneous, pt(&[2, 1]), Cutoff::Infinite).unwrap();
        assert_eq!(
            h21.convert(Basis::Schur).unwrap(),
            s(&[2, 1]).add(&s(&[3])).unwrap()
        );

        let m1 = SymFunc::basis_element(Basis::Monomial, pt(&[1]), Cutoff::Infinite).unwrap();
        assert_eq!(m1.convert(Basis::Schur).unwrap(), s(&[1]));

        // s_(2,1) in monomials: K_{(2,1),(2,1)} = 1, K_{(2,1),(1,1,1)} = 2.
        let s21_m = s(&[2, 1]).convert(Basis::Monomial).unwrap();
        assert_eq!(s21_m.coeff(&pt(&[2, 1])), 1);
        assert_eq!(s21_m.coeff(&pt(&[1, 1, 1])), 2);
        assert_eq!(s21_m.coeff(&pt(&[3])), 0);
    }

    #[test]
    fn multiplication_examples() {
        let p = s(&[1]).multiply(&s(&[1]));
        assert_eq!(p, s(&[2]).add(&s(&[1, 1])).unwrap());

        let h1 = SymFunc::basis_element(Basis::Homogeneous, pt(&[1]), Cutoff::Infinite).unwrap();
        assert_eq!(h1.multiply(&h1), s(&[2]).add(&s(&[1, 1])).unwrap());

        let one =
            SymFunc::basis_element(Basis::Schur, Partition::empty(), Cutoff::Infinite).unwrap();
        let f = s(&[2, 1]).add(&s(&[1]).scaled(-3)).unwrap();
        assert_eq!(f.multiply(&one), f.convert(Basis::Schur).unwrap());

        // Pieri: s21 * s2 = s41 + s31 + s311 + s321 + s221.
        let p = s(&[2, 1]).multiply(&s(&[2]));
        let expected = SymFunc::from_terms(
            Basis::Schur,
            Cutoff::Infinite,
            [
                (pt(&[4, 1]), 1),
                (pt(&[3, 2]), 1),
                (pt(&[3, 1, 1]), 1),
                (pt(&[2, 2, 1]), 1),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn truncated_multiplication_respects_cutoff() {
        let f = s(&[1]).truncated(2);
        let g = s(&[1]).truncated(3);
        let p = f.multiply(&g);
        assert_eq!(p.cutoff(), Cutoff::Finite(2));
        assert_eq!(p.coeff(&pt(&[2])), 1);
        assert_eq!(p.coeff(&pt(&[1, 1])), 1);
    }

    #[test]
    fn conversion_round_trips() {
        let bases = [
            Basis::Monomial,
            Basis::Schur,
            Basis::Homogeneous,
            Basis::Elementary,
            Basis::DualGrothendieck,
        ];
        for lambda in Partition::all_up_to(5) {
            let f = s(lambda.parts());
            for b in bases {
                let round = f.convert(b).unwrap().convert(Basis::Schur).unwrap();
                assert_eq!(round, f, "round trip through {b:?} at {lambda}");
            }
        }
    }

    #[test]
    fn grothendieck_basis_round_trip_needs_cutoff() {
        let f = s(&[2, 1]);
        assert!(matches!(
            f.convert(Basis::Grothendieck),
            Err(Error::InfiniteGrothendieckCutoff)
        ));
        let t = f.truncated(5);
        let round = t
            .convert(Basis::Grothendieck)
            .unwrap()
            .convert(Basis::Schur)
            .unwrap();
        assert_eq!(round, t);
    }

    // === Hall pairing ===

    #[test]
    fn hall_pairing_orthonormality() {
        for lambda in Partition::all_up_to(4) {
            for mu in Partition::all_up_to(4) {
                let expected = i64::from(lambda == mu);
                assert_eq!(
                    hall_pairing(&s(lambda.parts()), &s(mu.parts())).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn hall_pairing_h_m_duality() {
        for lambda in Partition::all_up_to(5) {
            for mu in Partition::all_up_to(5) {
                let h =
                    SymFunc::basis_element(Basis::Homogeneous, lambda.clone(), Cutoff::Infinite)
                        .unwrap();
                let m =
                    SymFunc::basis_element(Basis::Monomial, mu.clone(), Cutoff::Infinite).unwrap();
                assert_eq!(
                    hall_pairing(&h, &m).unwrap(),
                    i64::from(lambda == mu),
                    "pairing h_{lambda} with m_{mu}"
                );
            }
        }
    }

    #[test]
    fn hall_pairing_truncation_rules() {
        let truncated = s(&[1]).truncated(1);
        assert!(matches!(
            hall_pairing(&truncated, &s(&[1, 1])),
            Err(Error::InconclusivePairing {
                cutoff: 1,
                degree: 2
            })
        ));
        assert_eq!(hall_pairing(&truncated, &s(&[1])).unwrap(), 1);
        assert!(hall_pairing(&truncated, &s(&[1]).truncated(1)).is_err());
    }

    // === series and the inverse identity ===

    #[test]
    fn series_are_inverse_up_to_cutoff() {
        assert_eq!(
            complete_homogeneous_series(0),
            SymFunc::from_terms(
                Basis::Homogeneous,
                Cutoff::Finite(0),
                [(Partition::empty(), 1)]
            )
            .unwrap()
        );
        for d in 0..=6 {
            let product =
                complete_homogeneous_series(d).multiply(&alternating_elementary_series(d));
            let one =
                SymFunc::from_terms(Basis::Schur, Cutoff::Finite(d), [(Partition::empty(), 1)])
                    .unwrap();
            assert_eq!(product, one, "degree-{d} inverse identity");
        }
    }

    // === specialization ===

    #[test]
    fn specialize_one_examples() {
        let e1 = SymFunc::basis_element(Basis::Elementary, pt(&[1]), Cutoff::Infinite).unwrap();
        let spec = e1.specialize_one(2).unwrap();
        let expected = SymFunc::from_terms(
            Basis::Elementary,
            Cutoff::Infinite,
            [(Partition::empty(), 1), (pt(&[1]), 1)],
        )
        .unwrap();
        assert_eq!(spec, expected);

        let one =
            SymFunc::basis_element(Basis::Schur, Partition::empty(), Cutoff::Infinite).unwrap();
        assert_eq!(one.specialize_one(1).unwrap(), one);

        // h2(1, x) = 1 + h1 + h2.
        let h2 = SymFunc::basis_element(Basis::Homogeneous, pt(&[2]), Cutoff::Infinite).unwrap();
        let spec = h2.specialize_one(3).unwrap();
        let expected = SymFunc::from_terms(
            Basis::Homogeneous,
            Cutoff::Infinite,
            [(Partition::empty(), 1), (pt(&[1]), 1), (pt(&[2]), 1)],
        )
        .unwrap();
        assert_eq!(spec, expected);

        assert!(matches!(
            h2.specialize_one(2),
            Err(Error::AlphabetTooSmall {
                alphabet: 2,
                degree: 2
            })
        ));
    }

    #[test]
    fn specialize_one_is_multiplicative_on_samples() {
        let samples = [
            s(&[2]),
            s(&[1, 1]),
            s(&[2, 1]).add(&s(&[1])).unwrap(),
            s(&[3]).sub(&s(&[1, 1, 1])).unwrap(),
        ];
        for f in &samples {
            for g in &samples {
                let lhs = f.multiply(g).specialize_one(9).unwrap();
                let rhs = f
                    .specialize_one(9)
                    .unwrap()
                    .multiply(&g.specialize_one(9).unwrap());
                assert_eq!(lhs.convert(Basis::Schur).unwrap(), rhs);
            }
        }
    }

    // === serialization ===

    #[test]
    fn json_shape_is_stable() {
        let f = s(&[2, 1]).sub(&s(&[1])).unwrap().truncated(6);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"schur","cutoff":6,"terms":[{"part":[1],"coeff":-1},{"part":[2,1],"coeff":1}]}"#
        );
        let g =
            SymFunc::basis_element(Basis::DualGrothendieck, pt(&[1]), Cutoff::Infinite).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"basis":"g","cutoff":null,"terms":[{"part":[1],"coeff":1}]}"#
        );
    }
}
