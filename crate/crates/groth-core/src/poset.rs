//! Finite posets and their Möbius functions.
//!
//! A [`FinitePoset`] stores an explicit element list and relation table,
//! validated to be a partial order on construction.  The Möbius function is
//! computed by the defining recurrence `μ(x,x) = 1`,
//! `μ(x,y) = -Σ_{x<=z<y} μ(x,z)`, memoized in a [`MobiusTable`].
//!
//! The poset that drives everything else here is the containment order on
//! horizontal strips over a base shape, bounded above or below in size and
//! completed by an artificial top or bottom element ([`strip_poset`]); the
//! negated Möbius values of that completed poset against the artificial
//! bound are exactly the Pieri coefficients computed in closed form by the
//! `grothendieck` module.

use crate::partition::{Partition, StripMode};
use crate::{Error, Result};

/// An explicit finite poset: elements plus a reflexive, antisymmetric,
/// transitive relation table.  Immutable once constructed.
#[derive(Clone, Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<Vec<bool>>,
}

impl<T: Clone + Eq> FinitePoset<T> {
    /// Builds a poset from distinct elements and a comparison predicate,
    /// verifying the partial-order axioms.
    #[allow(clippy::needless_range_loop)]
    pub fn new(elements: Vec<T>, rel: impl Fn(&T, &T) -> bool) -> Result<Self> {
        for (i, x) in elements.iter().enumerate() {
            if elements[..i].contains(x) {
                return Err(Error::DuplicateElement);
            }
        }
        let n = elements.len();
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|x| elements.iter().map(|y| rel(x, y)).collect())
            .collect();
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::InvalidPoset("reflexive"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset("antisymmetric"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] && !leq[i][k] {
                        return Err(Error::InvalidPoset("transitive"));
                    }
                }
            }
        }
        Ok(FinitePoset { elements, leq })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    /// Relation by element index.
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Relation by element value.
    pub fn leq(&self, x: &T, y: &T) -> Result<bool> {
        let i = self.index_of(x).ok_or(Error::ElementNotFound)?;
        let j = self.index_of(y).ok_or(Error::ElementNotFound)?;
        Ok(self.leq[i][j])
    }

    /// Index of the unique maximum, if the poset has one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
    }

    /// Indices of the coatoms: elements covered by the unique maximum,
    /// i.e. the maximal elements once the maximum is removed.
    pub fn coatoms(&self) -> Result<Vec<usize>> {
        let top = self.maximum().ok_or(Error::NoMaximum)?;
        Ok((0..self.len())
            .filter(|&x| x != top && (0..self.len()).all(|z| z == x || z == top || !self.leq[x][z]))
            .collect())
    }

    /// Greatest lower bound of a nonempty index set, when it exists.
    pub fn meet_of(&self, indices: &[usize]) -> Option<usize> {
        assert!(!indices.is_empty(), "meet of an empty index set");
        let lower: Vec<usize> = (0..self.len())
            .filter(|&z| indices.iter().all(|&i| self.leq[z][i]))
            .collect();
        lower
            .iter()
            .find(|&&m| lower.iter().all(|&w| self.leq[w][m]))
            .copied()
    }

    /// The poset extended by a new element above everything.
    pub fn adjoin_top(&self, label: T) -> Result<Self> {
        if self.elements.contains(&label) {
            return Err(Error::DuplicateElement);
        }
        let n = self.len();
        let mut elements = self.elements.clone();
        elements.push(label);
        let mut leq = self.leq.clone();
        for row in &mut leq {
            row.push(true);
        }
        let mut top_row = vec![false; n];
        top_row.push(true);
        leq.push(top_row);
        Ok(FinitePoset { elements, leq })
    }

    /// The poset extended by a new element below everything.
    pub fn adjoin_bottom(&self, label: T) -> Result<Self> {
        if self.elements.contains(&label) {
            return Err(Error::DuplicateElement);
        }
        let n = self.len();
        let mut elements = vec![label];
        elements.extend(self.elements.iter().cloned());
        let mut leq = vec![vec![true; n + 1]];
        for row in &self.leq {
            let mut new_row = vec![false];
            new_row.extend(row.iter().copied());
            leq.push(new_row);
        }
        Ok(FinitePoset { elements, leq })
    }

    /// The induced subposet on the given (distinct, present) elements.
    pub fn induced(&self, subset: &[T]) -> Result<Self> {
        let indices: Vec<usize> = subset
            .iter()
            .map(|x| self.index_of(x).ok_or(Error::ElementNotFound))
            .collect::<Result<_>>()?;
        for (k, i) in indices.iter().enumerate() {
            if indices[..k].contains(i) {
                return Err(Error::DuplicateElement);
            }
        }
        let elements = subset.to_vec();
        let leq = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.leq[i][j]).collect())
            .collect();
        Ok(FinitePoset { elements, leq })
    }

    /// The full Möbius table, via the top-down recurrence along a linear
    /// extension (elements ordered by down-set size).
    #[allow(clippy::needless_range_loop)]
    pub fn mobius_table(&self) -> MobiusTable {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        let down_size: Vec<usize> = (0..n)
            .map(|i| (0..n).filter(|&j| self.leq[j][i]).count())
            .collect();
        order.sort_by_key(|&i| down_size[i]);

        let mut values = vec![vec![None; n]; n];
        for x in 0..n {
            for &y in &order {
                if !self.leq[x][y] {
                    continue;
                }
                if y == x {
                    values[x][x] = Some(1);
                    continue;
                }
                let mut sum: i64 = 0;
                for z in 0..n {
                    if z != y && self.leq[x][z] && self.leq[z][y] {
                        sum += values[x][z].expect("linear extension order");
                    }
                }
                values[x][y] = Some(-sum);
            }
        }
        MobiusTable { values }
    }

    /// Checks a Möbius table against both defining recurrences:
    /// `Σ_{x<=z<=y} μ(x,z) = δ_{xy}` and `Σ_{x<=z<=y} μ(z,y) = δ_{xy}`,
    /// and that values are present exactly on related pairs.
    pub fn table_satisfies_recurrences(&self, table: &MobiusTable) -> bool {
        let n = self.len();
        if table.values.len() != n {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if table.get(x, y).is_some() != self.leq[x][y] {
                    return false;
                }
                if !self.leq[x][y] {
                    continue;
                }
                let delta = i64::from(x == y);
                let mut down = 0i64;
                let mut up = 0i64;
                for z in 0..n {
                    if self.leq[x][z] && self.leq[z][y] {
                        down += table.get(x, z).unwrap();
                        up += table.get(z, y).unwrap();
                    }
                }
                if down != delta || up != delta {
                    return false;
                }
            }
        }
        true
    }
}

/// Memoized Möbius values of a poset; `get(i, j)` is `μ(i, j)` for related
/// index pairs and `None` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<Vec<Option<i64>>>,
}

impl MobiusTable {
    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.values[i][j]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Möbius inversion: with `gt(t) = Σ_{s<=t} g(s)`, checks
/// `g(t) = Σ_{s<=t} μ(s,t) gt(s)` for every `t`.  `g` is indexed by element
/// order and must match the poset size.
pub fn mobius_inversion_holds<T: Clone + Eq>(p: &FinitePoset<T>, g: &[i64]) -> bool {
    assert_eq!(g.len(), p.len(), "one value per poset element");
    let n = p.len();
    let table = p.mobius_table();
    let cumulative: Vec<i64> = (0..n)
        .map(|t| (0..n).filter(|&s| p.leq_idx(s, t)).map(|s| g[s]).sum())
        .collect();
    (0..n).all(|t| {
        let recovered: i64 = (0..n)
            .filter(|&s| p.leq_idx(s, t))
            .map(|s| table.get(s, t).unwrap() * cumulative[s])
            .sum();
        recovered == g[t]
    })
}

/// For a poset with unique maximum `top`, the coefficients `-μ(s, top)` for
/// every `s != top`, in element order, zeros included.
///
/// These are the weights expressing a plain sum over the poset as a
/// combination of down-set sums: `Σ_s g(s) = Σ_s (-μ(s,top)) Σ_{t<=s} g(t)`.
pub fn top_mobius_coefficients<T: Clone + Eq>(p: &FinitePoset<T>) -> Result<Vec<(T, i64)>> {
    let top = p.maximum().ok_or(Error::NoMaximum)?;
    let table = p.mobius_table();
    Ok((0..p.len())
        .filter(|&s| s != top)
        .map(|s| (p.elements()[s].clone(), -table.get(s, top).unwrap()))
        .collect())
}

/// Inclusion–exclusion over the coatoms: the signed list
/// `(-1)^(m-1) (x_{i_1} ∧ … ∧ x_{i_m})` over nonempty coatom subsets, in
/// ascending bitmask order.  After cancellation the net coefficient of each
/// element equals `-μ(s, top)`.
///
/// Errors when the poset has no unique maximum or some coatom subset has no
/// greatest lower bound below the maximum.
pub fn coatom_meet_expansion<T: Clone + Eq>(p: &FinitePoset<T>) -> Result<Vec<(T, i64)>> {
    let coatoms = p.coatoms()?;
    let m = coatoms.len();
    assert!(m < usize::BITS as usize, "too many coatoms to enumerate");
    let mut out = Vec::new();
    for mask in 1usize..(1 << m) {
        let subset: Vec<usize> = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| coatoms[i])
            .collect();
        let meet = p.meet_of(&subset).ok_or(Error::MeetUndefined)?;
        let sign = if subset.len() % 2 == 1 { 1 } else { -1 };
        out.push((p.elements()[meet].clone(), sign));
    }
    Ok(out)
}

/// Checks that Möbius values against the top survive restriction: for a
/// subposet `sub` containing the maximum and every meet of coatom subsets,
/// `μ_sub(s, top) = μ_p(s, top)` for all `s` in `sub`, and `μ_p(s, top) = 0`
/// for every `s` that is not a meet of coatoms.
///
/// Errors when the precondition on `sub` fails or a coatom meet is missing.
pub fn mobius_restricts_to_meet_closure<T: Clone + Eq>(
    p: &FinitePoset<T>,
    sub: &[T],
) -> Result<bool> {
    let top = p.maximum().ok_or(Error::NoMaximum)?;
    let q = p.induced(sub)?;
    if q.index_of(&p.elements()[top]).is_none() {
        return Err(Error::NotMeetClosed);
    }

    let coatoms = p.coatoms()?;
    let m = coatoms.len();
    assert!(m < usize::BITS as usize, "too many coatoms to enumerate");
    let mut is_meet = vec![false; p.len()];
    for mask in 1usize..(1 << m) {
        let subset: Vec<usize> = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| coatoms[i])
            .collect();
        let meet = p.meet_of(&subset).ok_or(Error::MeetUndefined)?;
        is_meet[meet] = true;
    }
    for (s, flag) in is_meet.iter().enumerate() {
        if *flag && q.index_of(&p.elements()[s]).is_none() {
            return Err(Error::NotMeetClosed);
        }
    }

    let p_table = p.mobius_table();
    let q_table = q.mobius_table();
    let q_top = q.maximum().expect("maximum survives restriction");

    let restricted_agree = (0..q.len()).all(|sq| {
        let sp = p.index_of(&q.elements()[sq]).unwrap();
        q_table.get(sq, q_top) == p_table.get(sp, top)
    });
    let zero_off_meets = (0..p.len())
        .filter(|&s| s != top && !is_meet[s])
        .all(|s| p_table.get(s, top) == Some(0));
    Ok(restricted_agree && zero_off_meets)
}

/// Which side of the strip-size constraint a strip poset carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripBound {
    /// Strips of size at most `a`, completed by an artificial top.
    AtMost,
    /// Strips of size at least `a` (finitely capped), completed by an
    /// artificial bottom.
    AtLeast,
}

/// An element of a completed strip poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StripNode {
    Bottom,
    Strip(Partition),
    Top,
}

impl std::fmt::Display for StripNode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StripNode::Bottom => write!(f, "bottom"),
            StripNode::Strip(p) => write!(f, "{p}"),
            StripNode::Top => write!(f, "top"),
        }
    }
}

fn strip_node_leq(x: &StripNode, y: &StripNode) -> bool {
    match (x, y) {
        (StripNode::Bottom, _) | (_, StripNode::Top) => true,
        (_, StripNode::Bottom) | (StripNode::Top, _) => false,
        (StripNode::Strip(p), StripNode::Strip(q)) => q.contains(p),
    }
}

/// The containment poset of horizontal strips over `lambda` with size at
/// most (resp. at least) `a`, completed by an artificial top (resp. bottom).
/// Strip elements appear in canonical partition order.
pub fn strip_poset(lambda: &Partition, a: u32, bound: StripBound) -> FinitePoset<StripNode> {
    let mut elements = Vec::new();
    let mode = match bound {
        StripBound::AtMost => StripMode::AtMost,
        StripBound::AtLeast => StripMode::AtLeast,
    };
    if bound == StripBound::AtLeast {
        elements.push(StripNode::Bottom);
    }
    elements.extend(
        lambda
            .horizontal_strips(mode, a)
            .into_iter()
            .map(StripNode::Strip),
    );
    if bound == StripBound::AtMost {
        elements.push(StripNode::Top);
    }
    FinitePoset::new(elements, strip_node_leq).expect("containment is a partial order")
}

/// The divisors of `n` under divisibility, in increasing order.
pub fn divisor_poset(n: u64) -> FinitePoset<u64> {
    assert!(n > 0);
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    FinitePoset::new(divisors, |a, b| b % a == 0).expect("divisibility is a partial order")
}

/// The subsets of `{0, …, k-1}` as bitmasks under inclusion.
pub fn boolean_poset(k: u32) -> FinitePoset<u32> {
    assert!(k <= 16, "boolean poset too large");
    let masks: Vec<u32> = (0..1u32 << k).collect();
    FinitePoset::new(masks, |a, b| a & b == *a).expect("inclusion is a partial order")
}
