//! Partitions, Young-diagram cell calculus, hook lengths, simultaneous cores,
//! the hook multiset of cells lying in an n-row and a p-column, and the skew
//! length statistic.
//!
//! Cells are 1-based with row 1 at the top and column 1 at the left, so the
//! corner cell (1,1) carries the maximal hook length.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::parse::Scanner;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

/// A finite multiset of positive integers, stored as a sorted sequence with
/// repetitions. Equality is sequence equality after sorting, hence
/// order-independent and multiplicity-sensitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookMultiset {
    entries: Vec<u64>,
}

impl HookMultiset {
    pub fn from_entries(mut entries: Vec<u64>) -> Self {
        entries.sort_unstable();
        HookMultiset { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.entries.binary_search(&value).is_ok()
    }

    pub fn multiplicity(&self, value: u64) -> usize {
        let lo = self.entries.partition_point(|&x| x < value);
        let hi = self.entries.partition_point(|&x| x <= value);
        hi - lo
    }
}

impl fmt::Display for HookMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition { index: index + 1 });
            }
        }
        if let Some(index) = parts.iter().position(|&x| x == 0) {
            return Err(Error::InvalidPartition { index });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain trailing zeros
    /// (vector form); zeros are stripped.
    pub fn from_vector(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.parts.len() && (j as u64) <= self.parts[i - 1]
    }

    /// The conjugate partition: part i counts the parts of `self` that are >= i.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        if self.parts.is_empty() {
            return Partition::empty();
        }
        for i in 1..=self.parts[0] {
            parts.push(self.parts.iter().filter(|&&x| x >= i).count() as u64);
        }
        Partition { parts }
    }

    /// Hook length of the cell (i,j): arm + leg + 1.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<u64> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutOfDiagram { i, j });
        }
        let arm = self.parts[i - 1] - j as u64;
        let leg = self
            .parts
            .iter()
            .skip(i)
            .filter(|&&x| x >= j as u64)
            .count() as u64;
        Ok(arm + leg + 1)
    }

    /// Hook lengths of the cells in the first column, largest first.
    /// Row i has hook part(i) + len − i.
    pub fn first_column_hooks(&self) -> Vec<u64> {
        let l = self.parts.len() as u64;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + l - (i as u64 + 1))
            .collect()
    }

    /// Hook lengths of the cells in the top row, largest first.
    pub fn top_row_hooks(&self) -> Vec<u64> {
        self.conjugate().first_column_hooks()
    }

    /// Maximal hook length (of the corner cell), or None for the empty partition.
    pub fn max_hook(&self) -> Option<u64> {
        self.first_column_hooks().into_iter().next()
    }

    /// Hook lengths of the row whose first-column cell has hook length `h`;
    /// the empty set when no row qualifies.
    pub fn row_hooks(&self, h: u64) -> BTreeSet<u64> {
        let fch = self.first_column_hooks();
        match fch.iter().position(|&x| x == h) {
            None => BTreeSet::new(),
            Some(idx) => {
                let i = idx + 1;
                (1..=self.parts[idx] as usize)
                    .map(|j| self.hook_length(i, j).expect("cell in diagram"))
                    .collect()
            }
        }
    }

    /// Hook lengths of the column whose top-row cell has hook length `h`.
    pub fn column_hooks(&self, h: u64) -> BTreeSet<u64> {
        self.conjugate().row_hooks(h)
    }

    /// True iff no cell has hook length `n`; decided on the first-column hook
    /// set: the beads H must satisfy h − n ∈ H or h − n < 0 for every h ∈ H.
    pub fn is_core(&self, n: u64) -> bool {
        assert!(n >= 1, "modulus must be positive");
        let hooks: BTreeSet<u64> = self.first_column_hooks().into_iter().collect();
        hooks.iter().all(|&h| h < n || hooks.contains(&(h - n)))
    }

    fn require_core(&self, n: u64) -> Result<()> {
        if self.is_core(n) {
            Ok(())
        } else {
            Err(Error::NotCore { n })
        }
    }

    /// Leftmost hook lengths of the n-rows, decreasing: h in the first-column
    /// hook set with h + n not in it.
    pub fn n_rows(&self, n: u64) -> Result<Vec<u64>> {
        self.require_core(n)?;
        let fch = self.first_column_hooks();
        let set: BTreeSet<u64> = fch.iter().copied().collect();
        Ok(fch
            .into_iter()
            .filter(|&h| !set.contains(&(h + n)))
            .collect())
    }

    /// Top hook lengths of the n-columns, decreasing; dual to [`Self::n_rows`].
    pub fn n_columns(&self, n: u64) -> Result<Vec<u64>> {
        self.require_core(n)?;
        self.conjugate().n_rows(n)
    }

    /// Multiset of hook lengths of the cells lying both in an n-row and in a
    /// p-column. Defined for any simultaneous n,p-core; coprimality is not
    /// required.
    pub fn h_np(&self, n: u64, p: u64) -> Result<HookMultiset> {
        self.require_core(n)?;
        self.require_core(p)?;
        let fch = self.first_column_hooks();
        let trh = self.top_row_hooks();
        let row_set: BTreeSet<u64> = fch.iter().copied().collect();
        let col_set: BTreeSet<u64> = trh.iter().copied().collect();
        let rows: Vec<usize> = fch
            .iter()
            .enumerate()
            .filter(|(_, &h)| !row_set.contains(&(h + n)))
            .map(|(idx, _)| idx + 1)
            .collect();
        let cols: Vec<usize> = trh
            .iter()
            .enumerate()
            .filter(|(_, &h)| !col_set.contains(&(h + p)))
            .map(|(idx, _)| idx + 1)
            .collect();
        let mut entries = Vec::new();
        for &i in &rows {
            for &j in &cols {
                if self.contains_cell(i, j) {
                    entries.push(self.hook_length(i, j)?);
                }
            }
        }
        Ok(HookMultiset::from_entries(entries))
    }

    /// Skew length: the number of cells contained in an n-row with hook length
    /// less than p. Also computed as #h_np(n, p); the two routes must agree.
    pub fn skew_length(&self, n: u64, p: u64) -> Result<u64> {
        self.require_core(n)?;
        self.require_core(p)?;
        let fch = self.first_column_hooks();
        let row_set: BTreeSet<u64> = fch.iter().copied().collect();
        let mut by_cells = 0u64;
        for (idx, &h) in fch.iter().enumerate() {
            if row_set.contains(&(h + n)) {
                continue;
            }
            let i = idx + 1;
            for j in 1..=self.parts[idx] as usize {
                if self.hook_length(i, j)? < p {
                    by_cells += 1;
                }
            }
        }
        let by_multiset = self.h_np(n, p)?.len() as u64;
        if by_cells != by_multiset {
            return Err(Error::Invariant(format!(
                "skew length mismatch for {self}: cells in n-rows below p give {by_cells}, \
                 hook multiset gives {by_multiset}"
            )));
        }
        Ok(by_cells)
    }

    /// The unique partition whose first-column hook lengths are exactly `hooks`.
    /// With the hooks sorted decreasingly h1 > ... > hl, part i is hi − l + i.
    pub fn from_first_column_hooks(hooks: &BTreeSet<u64>) -> Result<Partition> {
        if hooks.contains(&0) {
            return Err(Error::InvalidPartition { index: 0 });
        }
        let l = hooks.len() as u64;
        let parts: Vec<u64> = hooks
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &h)| h + 1 + i as u64 - l)
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Text form: comma-separated decreasing integers, empty string for the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut sc = Scanner::new(s);
        let mut parts = Vec::new();
        loop {
            let at = sc.pos();
            let v = sc.int()?;
            if v <= 0 {
                return Err(Error::Parse {
                    pos: at,
                    msg: "parts must be positive".into(),
                });
            }
            parts.push(v as u64);
            if !sc.eat(",") {
                break;
            }
        }
        sc.finish()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in the reverse lexicographic order of their part lists.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of size at most `max_size` (including the empty one).
pub fn partitions_up_to(max_size: u64) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}
