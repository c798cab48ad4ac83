//! Integer partitions and horizontal strips.
//!
//! Partitions are kept in canonical form (weakly decreasing, no trailing
//! zeros) and ordered by containment of Young diagrams, which makes them a
//! lattice under componentwise min/max.  A skew shape `mu/lambda` is a
//! *horizontal strip* when it has at most one box per column; the strips over
//! a fixed base are parametrised by how many boxes land in each *addable
//! row*, and most strip computations here go through that coordinate system.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// An integer partition in canonical form: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, discarding trailing zeros.
    ///
    /// Errors unless the input is weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Internal constructor for parts already known to be weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th part, 0-based, with `0` past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes `|lambda|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Containment of Young diagrams: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &part)| part <= self.part(i))
    }

    /// Lattice meet: componentwise minimum (intersection of diagrams).
    pub fn meet(&self, other: &Partition) -> Partition {
        let parts = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition::from_decreasing(parts)
    }

    /// Lattice join: componentwise maximum (union of diagrams).
    pub fn join(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        let parts = (0..rows).map(|i| self.part(i).max(other.part(i))).collect();
        Partition::from_decreasing(parts)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.0.iter().take_while(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition::from_decreasing(parts)
    }

    /// True when `self/lambda` is a horizontal strip: `lambda ⊆ self` and no
    /// column holds two boxes of the skew shape (`self_{i+1} <= lambda_i`).
    pub fn is_horizontal_strip_over(&self, lambda: &Partition) -> bool {
        self.contains(lambda) && (1..self.len()).all(|i| self.part(i) <= lambda.part(i - 1))
    }

    /// The rows in which a box can be appended, with how many boxes fit.
    ///
    /// Row `r` (1-based) is addable when `lambda_{r-1} > lambda_r`, where
    /// `lambda_0` is treated as infinite; the capacity is the difference.
    /// Row 1 is always addable with infinite capacity, and the list is never
    /// empty (the empty partition yields exactly `[(1, ∞)]`).
    pub fn addable_rows(&self) -> Vec<AddableRow> {
        let mut rows = vec![AddableRow {
            row: 1,
            capacity: Capacity::Infinite,
        }];
        for r in 2..=self.len() as u32 + 1 {
            let prev = self.part(r as usize - 2);
            let cur = self.part(r as usize - 1);
            if prev > cur {
                rows.push(AddableRow {
                    row: r,
                    capacity: Capacity::Finite(prev - cur),
                });
            }
        }
        rows
    }

    /// All horizontal strips `mu ⊇ self` whose size `|mu/self|` is exactly,
    /// at most, or at least `a`.
    ///
    /// The first two modes are complete.  `AtLeast` is an infinite family;
    /// it is restricted to first-row coordinate `b_0 <= a + t` (with `t + 1`
    /// addable rows), which keeps every strip that can carry a nonzero
    /// stable Pieri coefficient and is closed under shrinking strips, so
    /// Möbius computations on the restricted family are unaffected.
    pub fn horizontal_strips(&self, mode: StripMode, a: u32) -> BTreeSet<Partition> {
        let rows = self.addable_rows();
        let t = rows.len() as u32 - 1;
        let caps: Vec<u32> = rows
            .iter()
            .map(|r| match r.capacity {
                Capacity::Finite(n) => match mode {
                    StripMode::Exact | StripMode::AtMost => n.min(a),
                    StripMode::AtLeast => n,
                },
                Capacity::Infinite => match mode {
                    StripMode::Exact | StripMode::AtMost => a,
                    StripMode::AtLeast => a + t,
                },
            })
            .collect();

        let mut out = BTreeSet::new();
        let mut values = vec![0u32; rows.len()];
        self.strip_rec(&rows, &caps, mode, a, 0, 0, &mut values, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn strip_rec(
        &self,
        rows: &[AddableRow],
        caps: &[u32],
        mode: StripMode,
        a: u32,
        i: usize,
        sum: u32,
        values: &mut Vec<u32>,
        out: &mut BTreeSet<Partition>,
    ) {
        if i == rows.len() {
            let keep = match mode {
                StripMode::Exact => sum == a,
                StripMode::AtMost => sum <= a,
                StripMode::AtLeast => sum >= a,
            };
            if keep {
                let coords = StripCoordinates {
                    base: self.clone(),
                    rows: rows.to_vec(),
                    values: values.clone(),
                };
                out.insert(coords.shape());
            }
            return;
        }
        let budget = match mode {
            StripMode::Exact | StripMode::AtMost => caps[i].min(a - sum),
            StripMode::AtLeast => caps[i],
        };
        for b in 0..=budget {
            values[i] = b;
            self.strip_rec(rows, caps, mode, a, i + 1, sum + b, values, out);
        }
        values[i] = 0;
    }

    /// Row coordinates of the horizontal strip `mu/self`: for each addable
    /// row, the number of boxes the strip places there.
    pub fn strip_coordinates(&self, mu: &Partition) -> Result<StripCoordinates> {
        if !mu.is_horizontal_strip_over(self) {
            return Err(Error::NotAHorizontalStrip {
                lambda: self.clone(),
                mu: mu.clone(),
            });
        }
        let rows = self.addable_rows();
        let values: Vec<u32> = rows
            .iter()
            .map(|r| mu.part(r.row as usize - 1) - self.part(r.row as usize - 1))
            .collect();
        debug_assert_eq!(values.iter().sum::<u32>(), mu.size() - self.size());
        Ok(StripCoordinates {
            base: self.clone(),
            rows,
            values,
        })
    }

    /// Size, row count and co-row count of the horizontal strip `mu/self`.
    ///
    /// `rows` counts the rows meeting the strip.  `co_rows` counts the rows
    /// of `self/(mu_2, mu_3, …)`, the complementary statistic appearing in
    /// the dual Pieri rule.
    pub fn strip_stats(&self, mu: &Partition) -> Result<SkewStats> {
        if !mu.is_horizontal_strip_over(self) {
            return Err(Error::NotAHorizontalStrip {
                lambda: self.clone(),
                mu: mu.clone(),
            });
        }
        let size = mu.size() - self.size();
        let rows = (0..mu.len()).filter(|&i| mu.part(i) > self.part(i)).count() as u32;
        let co_rows = (0..self.len())
            .filter(|&i| self.part(i) > mu.part(i + 1))
            .count() as u32;
        Ok(SkewStats {
            size,
            rows,
            co_rows,
        })
    }

    /// The 180°-rotated complement of `self` inside a `rows x cols`
    /// rectangle: pad to `rows` parts, subtract each from `cols`, reverse.
    pub fn rotated_complement(&self, rows: u32, cols: u32) -> Result<Partition> {
        if self.len() as u32 > rows || self.part(0) > cols {
            return Err(Error::RectangleOverflow {
                mu: self.clone(),
                rows,
                cols,
            });
        }
        let parts = (0..rows as usize)
            .rev()
            .map(|i| cols - self.part(i))
            .collect();
        Ok(Partition::from_decreasing(parts))
    }

    /// All partitions contained in `self`, sorted.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = BTreeSet::new();
        let mut current = Vec::new();
        self.sub_rec(0, u32::MAX, &mut current, &mut out);
        out.into_iter().collect()
    }

    fn sub_rec(
        &self,
        row: usize,
        prev: u32,
        current: &mut Vec<u32>,
        out: &mut BTreeSet<Partition>,
    ) {
        out.insert(Partition::from_decreasing(current.clone()));
        if row == self.len() {
            return;
        }
        for part in 1..=self.part(row).min(prev) {
            current.push(part);
            self.sub_rec(row + 1, part, current, out);
            current.pop();
        }
    }

    /// All partitions of `n`, sorted lexicographically.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                current.push(part);
                rec(remaining - part, part, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions of size at most `n`, sorted by (size, lexicographic).
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

/// Partitions are sorted by size first, then lexicographically by parts.
/// This is the canonical term order used for all serialized output.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Parses `"3,1"` or `"[3,1]"`; the empty string and `"0"` denote the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            s = inner.trim();
        }
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts) => Partition::new(parts),
            Err(_) => Err(Error::NotAPartition(Vec::new())),
        }
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for part in &self.0 {
            seq.serialize_element(part)?;
        }
        seq.end()
    }
}

/// Capacity of an addable row; the first row always has infinite capacity.
/// The infinite value compares greater than every finite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Capacity {
    Finite(u32),
    Infinite,
}

/// A row index (1-based) together with how many boxes can be appended to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AddableRow {
    pub row: u32,
    pub capacity: Capacity,
}

/// Size constraint for strip enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripMode {
    Exact,
    AtMost,
    AtLeast,
}

/// A horizontal strip over `base`, recorded as the number of boxes placed in
/// each addable row.  Strips over a fixed base are in bijection with
/// coordinate vectors bounded by the row capacities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripCoordinates {
    base: Partition,
    rows: Vec<AddableRow>,
    values: Vec<u32>,
}

impl StripCoordinates {
    /// Builds coordinates over `base`, checking the capacity bounds.
    pub fn new(base: Partition, values: Vec<u32>) -> Result<Self> {
        let rows = base.addable_rows();
        let in_bounds = values.len() == rows.len()
            && rows.iter().zip(&values).all(|(r, &v)| match r.capacity {
                Capacity::Finite(n) => v <= n,
                Capacity::Infinite => true,
            });
        if !in_bounds {
            return Err(Error::CoordinatesOutOfBounds {
                lambda: base,
                values,
            });
        }
        Ok(StripCoordinates { base, rows, values })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn rows(&self) -> &[AddableRow] {
        &self.rows
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Total number of boxes in the strip.
    pub fn size(&self) -> u32 {
        self.values.iter().sum()
    }

    /// The partition obtained by adding the strip to the base shape.
    pub fn shape(&self) -> Partition {
        let max_row = self.rows.last().map_or(0, |r| r.row as usize);
        let mut parts: Vec<u32> = (0..self.base.len().max(max_row))
            .map(|i| self.base.part(i))
            .collect();
        for (row, &b) in self.rows.iter().zip(&self.values) {
            parts[row.row as usize - 1] += b;
        }
        let shape = Partition::from_decreasing(parts);
        debug_assert!(shape.is_horizontal_strip_over(&self.base));
        shape
    }
}

/// Statistics of a horizontal strip `mu/lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewStats {
    /// `|mu| - |lambda|`, the number of boxes.
    pub size: u32,
    /// Number of rows the strip meets.
    pub rows: u32,
    /// Number of rows of `lambda/(mu_2, mu_3, …)`.
    pub co_rows: u32,
}
