//! Tableau families and their generating functions.
//!
//! Three families of fillings of a Young diagram are supported, each with
//! the weight that makes its generating function a distinguished symmetric
//! function:
//!
//! * **Semistandard** tableaux (rows weakly increase, columns strictly
//!   increase; one value per cell) generate the Schur function of the shape.
//! * **Set-valued** tableaux (nonempty sets per cell; `max` of a cell at
//!   most the `min` of its right neighbor and strictly below the `min` of
//!   the cell underneath) generate, with sign `(-1)^(entries - boxes)` and
//!   total entries capped at the degree bound, the truncation of the stable
//!   Grothendieck function of the shape.
//! * **Reverse plane partitions** (rows and columns weakly increase) with
//!   each value weighted once per column it occupies generate the dual
//!   stable Grothendieck function of the shape.
//!
//! Generating functions are returned as monomial-basis [`SymFunc`] data:
//! the coefficient of `m_kappa` is the signed number of fillings whose
//! content is exactly the weakly decreasing vector `kappa`.  Constructors
//! require the alphabet to be at least the degree bound of the family, so
//! that this finite-alphabet count determines the symmetric function.
//!
//! Two evaluation strategies are provided.  [`generating_function`] runs a
//! profile dynamic program over the values `1, 2, …`: its state is the
//! subdiagram of cells whose entries are all at most the current value, and
//! one matrix step per value adds the cells and extra entries that value
//! contributes.  [`generating_function_by_enumeration`] backtracks over
//! explicit fillings — exponentially slower, but a direct transcription of
//! the definitions, kept as the reference the dynamic program is tested
//! against.
//!
//! [`generating_function`]: TableauFamily::generating_function
//! [`generating_function_by_enumeration`]: TableauFamily::generating_function_by_enumeration

use std::collections::BTreeMap;

use crate::binom::binomial;
use crate::partition::{Partition, StripMode};
use crate::symfunc::{Basis, Cutoff, SymFunc};
use crate::{Error, Result};

/// Which filling rule a [`TableauFamily`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    Semistandard,
    SetValued,
    ReversePlane,
}

/// A finite family of tableaux: a filling rule, a shape, an alphabet
/// `{1, …, n}`, and (for set-valued fillings) a cap on total entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauFamily {
    kind: TableauKind,
    shape: Partition,
    alphabet: u32,
    degree_cap: Option<u32>,
}

impl TableauFamily {
    /// Semistandard tableaux of the given shape over `{1, …, alphabet}`.
    ///
    /// Requires `alphabet >= |shape|` so the content counts determine the
    /// Schur function exactly.
    pub fn semistandard(shape: Partition, alphabet: u32) -> Result<Self> {
        if alphabet < shape.size() {
            return Err(Error::AlphabetTooSmall {
                alphabet,
                degree: shape.size(),
            });
        }
        Ok(TableauFamily {
            kind: TableauKind::Semistandard,
            shape,
            alphabet,
            degree_cap: None,
        })
    }

    /// Set-valued tableaux of the given shape over `{1, …, alphabet}` with
    /// at most `degree_cap` total entries.
    ///
    /// Requires `degree_cap >= |shape|` (every cell holds at least one
    /// entry) and `alphabet >= degree_cap` (faithfulness of the count).
    pub fn set_valued(shape: Partition, alphabet: u32, degree_cap: u32) -> Result<Self> {
        if degree_cap < shape.size() {
            return Err(Error::CutoffExceeded {
                degree: shape.size(),
                cutoff: degree_cap,
            });
        }
        if alphabet < degree_cap {
            return Err(Error::AlphabetTooSmall {
                alphabet,
                degree: degree_cap,
            });
        }
        Ok(TableauFamily {
            kind: TableauKind::SetValued,
            shape,
            alphabet,
            degree_cap: Some(degree_cap),
        })
    }

    /// Reverse plane partitions of the given shape over `{1, …, alphabet}`.
    ///
    /// Requires `alphabet >= |shape|` (the column-weighted degree is at most
    /// the number of boxes).
    pub fn reverse_plane(shape: Partition, alphabet: u32) -> Result<Self> {
        if alphabet < shape.size() {
            return Err(Error::AlphabetTooSmall {
                alphabet,
                degree: shape.size(),
            });
        }
        Ok(TableauFamily {
            kind: TableauKind::ReversePlane,
            shape,
            alphabet,
            degree_cap: None,
        })
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    fn max_degree(&self) -> u32 {
        match self.kind {
            TableauKind::SetValued => self.degree_cap.expect("set-valued families carry a cap"),
            _ => self.shape.size(),
        }
    }

    fn cutoff(&self) -> Cutoff {
        match self.kind {
            TableauKind::SetValued => Cutoff::Finite(self.max_degree()),
            _ => Cutoff::Infinite,
        }
    }

    /// The signed, weighted generating function in the monomial basis,
    /// computed by the value-by-value dynamic program.
    pub fn generating_function(&self) -> SymFunc {
        let mut terms = BTreeMap::new();
        for kappa in Partition::all_up_to(self.max_degree()) {
            debug_assert!(kappa.len() as u32 <= self.alphabet);
            let count = self.content_count(&kappa);
            if count != 0 {
                terms.insert(kappa, count);
            }
        }
        SymFunc::from_terms(Basis::Monomial, self.cutoff(), terms)
            .expect("contents are bounded by the family degree")
    }

    /// Signed number of fillings whose content is exactly `kappa` (value
    /// `v` used `kappa_v` times, under the family's weight).
    ///
    /// One dynamic-programming step per value `v`: states are subdiagrams
    /// `rho ⊆ shape` holding the cells filled by values `< v`, and the step
    /// enumerates how value `v` extends `rho` to some `nu`:
    ///
    /// * semistandard — `nu/rho` is a horizontal strip of `kappa_v` cells;
    /// * set-valued — `nu/rho` is a horizontal strip of the cells where `v`
    ///   is alone; the other `e = kappa_v - |nu/rho|` occurrences of `v`
    ///   join smaller values in cells of `rho` that end their row in `rho`
    ///   and their column in `nu`, giving `C(co_rows(nu/rho), e)` signed
    ///   placements;
    /// * reverse plane — `nu/rho` is any skew diagram occupying `kappa_v`
    ///   columns (repeats down a column are allowed and weigh once).
    fn content_count(&self, kappa: &Partition) -> i64 {
        let mut state: BTreeMap<Partition, i64> = BTreeMap::new();
        state.insert(Partition::empty(), 1);
        for v in 0..kappa.len() {
            let want = kappa.part(v);
            let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
            for (rho, &weight) in &state {
                match self.kind {
                    TableauKind::Semistandard => {
                        for nu in rho.horizontal_strips(StripMode::Exact, want) {
                            if self.shape.contains(&nu) {
                                *next.entry(nu).or_insert(0) += weight;
                            }
                        }
                    }
                    TableauKind::SetValued => {
                        for nu in rho.horizontal_strips(StripMode::AtMost, want) {
                            if !self.shape.contains(&nu) {
                                continue;
                            }
                            let stats = rho.strip_stats(&nu).expect("enumerated strip");
                            let extra = i64::from(want - stats.size);
                            let ways = binomial(i64::from(stats.co_rows), extra);
                            if ways == 0 {
                                continue;
                            }
                            let sign = if extra % 2 == 0 { 1 } else { -1 };
                            *next.entry(nu).or_insert(0) += weight * sign * ways;
                        }
                    }
                    TableauKind::ReversePlane => {
                        for nu in shapes_between(rho, &self.shape) {
                            if skew_column_count(rho, &nu) == want {
                                *next.entry(nu).or_insert(0) += weight;
                            }
                        }
                    }
                }
            }
            next.retain(|_, c| *c != 0);
            state = next;
            if state.is_empty() {
                return 0;
            }
        }
        state.get(&self.shape).copied().unwrap_or(0)
    }

    /// The same generating function by explicit backtracking over fillings.
    ///
    /// Cost grows exponentially with the shape and alphabet; intended as
    /// the reference implementation for validating the dynamic program on
    /// small families.
    pub fn generating_function_by_enumeration(&self) -> SymFunc {
        let terms = match self.kind {
            TableauKind::Semistandard => self.enumerate_grid(false),
            TableauKind::ReversePlane => self.enumerate_grid(true),
            TableauKind::SetValued => self.enumerate_set_valued(),
        };
        SymFunc::from_terms(Basis::Monomial, self.cutoff(), terms)
            .expect("contents are bounded by the family degree")
    }

    /// Backtracking over single-valued grids; `weak_columns` selects the
    /// reverse-plane rule (and its column-wise weight) over the
    /// semistandard one.
    fn enumerate_grid(&self, weak_columns: bool) -> BTreeMap<Partition, i64> {
        let rows = self.shape.len();
        let mut grid: Vec<Vec<u32>> = (0..rows)
            .map(|i| vec![0; self.shape.part(i) as usize])
            .collect();
        let cells: Vec<(usize, usize)> = (0..rows)
            .flat_map(|i| (0..self.shape.part(i) as usize).map(move |j| (i, j)))
            .collect();
        let mut out = BTreeMap::new();
        self.grid_rec(&cells, 0, weak_columns, &mut grid, &mut out);
        out
    }

    fn grid_rec(
        &self,
        cells: &[(usize, usize)],
        at: usize,
        weak_columns: bool,
        grid: &mut Vec<Vec<u32>>,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        let Some(&(i, j)) = cells.get(at) else {
            let content = if weak_columns {
                self.column_weight_content(grid)
            } else {
                let mut content = vec![0u32; self.alphabet as usize];
                for row in grid.iter() {
                    for &v in row {
                        content[v as usize - 1] += 1;
                    }
                }
                content
            };
            if let Ok(kappa) = Partition::new(content) {
                *out.entry(kappa).or_insert(0) += 1;
            }
            return;
        };
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 {
            grid[i - 1][j] + u32::from(!weak_columns)
        } else {
            1
        };
        for v in left.max(above).max(1)..=self.alphabet {
            grid[i][j] = v;
            self.grid_rec(cells, at + 1, weak_columns, grid, out);
        }
        grid[i][j] = 0;
    }

    /// Content of a reverse plane partition: each value counts once per
    /// column it occupies.
    fn column_weight_content(&self, grid: &[Vec<u32>]) -> Vec<u32> {
        let mut content = vec![0u32; self.alphabet as usize];
        for j in 0..self.shape.part(0) as usize {
            let mut seen = vec![false; self.alphabet as usize];
            for (i, row) in grid.iter().enumerate() {
                if j < self.shape.part(i) as usize {
                    let v = row[j] as usize - 1;
                    if !seen[v] {
                        seen[v] = true;
                        content[v] += 1;
                    }
                }
            }
        }
        content
    }

    /// Backtracking over set-valued fillings, cells as bitmasks over the
    /// alphabet (bit `v - 1` for value `v`).
    fn enumerate_set_valued(&self) -> BTreeMap<Partition, i64> {
        assert!(
            self.alphabet <= 20,
            "explicit set-valued enumeration is for small families"
        );
        let cap = self.degree_cap.expect("set-valued families carry a cap");
        let rows = self.shape.len();
        let mut grid: Vec<Vec<u32>> = (0..rows)
            .map(|i| vec![0; self.shape.part(i) as usize])
            .collect();
        let cells: Vec<(usize, usize)> = (0..rows)
            .flat_map(|i| (0..self.shape.part(i) as usize).map(move |j| (i, j)))
            .collect();
        let mut out = BTreeMap::new();
        self.set_valued_rec(&cells, 0, cap, &mut grid, &mut out);
        out
    }

    fn set_valued_rec(
        &self,
        cells: &[(usize, usize)],
        at: usize,
        budget: u32,
        grid: &mut Vec<Vec<u32>>,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        let Some(&(i, j)) = cells.get(at) else {
            let mut content = vec![0u32; self.alphabet as usize];
            let mut total = 0u32;
            for row in grid.iter() {
                for &mask in row {
                    total += mask.count_ones();
                    for v in 0..self.alphabet {
                        if mask & (1 << v) != 0 {
                            content[v as usize] += 1;
                        }
                    }
                }
            }
            if let Ok(kappa) = Partition::new(content) {
                let sign = if (total - self.shape.size()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                *out.entry(kappa).or_insert(0) += sign;
            }
            return;
        };
        // Remaining cells after this one each need at least one entry.
        let room = budget - (cells.len() - at - 1) as u32;
        // Lowest value allowed here: at least the max of the left cell, and
        // strictly above the max of the cell above.
        let left_max = if j > 0 {
            32 - grid[i][j - 1].leading_zeros()
        } else {
            1
        };
        let above_max = if i > 0 {
            33 - grid[i - 1][j].leading_zeros()
        } else {
            1
        };
        let lo = left_max.max(above_max).max(1);
        if lo > self.alphabet {
            return;
        }
        let width = self.alphabet - lo + 1;
        for choice in 1u32..(1 << width) {
            let used = choice.count_ones();
            if used > room {
                continue;
            }
            grid[i][j] = choice << (lo - 1);
            self.set_valued_rec(cells, at + 1, budget - used, grid, out);
        }
        grid[i][j] = 0;
    }
}

/// All partitions `nu` with `lo ⊆ nu ⊆ hi`.
fn shapes_between(lo: &Partition, hi: &Partition) -> Vec<Partition> {
    debug_assert!(hi.contains(lo));
    fn rec(
        lo: &Partition,
        hi: &Partition,
        row: usize,
        prev: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == hi.len() {
            out.push(Partition::from_decreasing(acc.clone()));
            return;
        }
        for v in lo.part(row)..=hi.part(row).min(prev) {
            acc.push(v);
            rec(lo, hi, row + 1, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(lo, hi, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Number of nonempty columns of the skew diagram `outer/inner`.
fn skew_column_count(inner: &Partition, outer: &Partition) -> u32 {
    (1..=outer.part(0))
        .filter(|&j| (0..outer.len()).any(|i| inner.part(i) < j && j <= outer.part(i)))
        .count() as u32
}
