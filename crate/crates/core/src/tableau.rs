//! Staircase tableaux: nonnegative integers indexed by pairs i < j in 1..=n.
//! The shared shape of inversion tables, Shi tableaux, and codinv tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StaircaseTableau {
    n: usize,
    /// Entries for (i,j), 1 <= i < j <= n, ordered by (i,j).
    data: Vec<u64>,
}

impl StaircaseTableau {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1);
        StaircaseTableau {
            n,
            data: vec![0; n * (n - 1) / 2],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(
            1 <= i && i < j && j <= self.n,
            "index ({i},{j}) out of range"
        );
        // row i (1-based) starts after rows 1..i-1 of lengths n-1, n-2, ...
        let before: usize = (0..i - 1).map(|r| self.n - 1 - r).sum();
        before + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        let idx = self.index(i, j);
        self.data[idx] = value;
    }

    pub fn sum(&self) -> u64 {
        self.data.iter().sum()
    }

    /// Entry (i,j) of the result is entry (n+1−j, n+1−i) of `self`.
    pub fn transpose(&self) -> StaircaseTableau {
        let mut out = StaircaseTableau::zeros(self.n);
        for i in 1..self.n {
            for j in i + 1..=self.n {
                out.set(i, j, self.get(self.n + 1 - j, self.n + 1 - i));
            }
        }
        out
    }

    /// For each j in 1..=n, the sum over i < j of entry (i,j).
    pub fn sums_by_larger_index(&self) -> Vec<u64> {
        (1..=self.n)
            .map(|j| (1..j).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// For each i in 1..=n, the sum over j > i of entry (i,j).
    pub fn sums_by_smaller_index(&self) -> Vec<u64> {
        (1..=self.n)
            .map(|i| (i + 1..=self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    /// Entrywise `self[i,j] <= other[i,j]`.
    pub fn dominated_by(&self, other: &StaircaseTableau) -> bool {
        self.n == other.n && self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonTableau::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: JsonTableau = serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTableau {
    n: usize,
    entries: Vec<(usize, usize, u64)>,
}

impl From<&StaircaseTableau> for JsonTableau {
    fn from(t: &StaircaseTableau) -> Self {
        let mut entries = Vec::with_capacity(t.data.len());
        for i in 1..t.n {
            for j in i + 1..=t.n {
                entries.push((i, j, t.get(i, j)));
            }
        }
        JsonTableau { n: t.n, entries }
    }
}

impl TryFrom<JsonTableau> for StaircaseTableau {
    type Error = Error;

    fn try_from(raw: JsonTableau) -> Result<Self> {
        if raw.n == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "n must be positive".into(),
            });
        }
        let mut t = StaircaseTableau::zeros(raw.n);
        let mut seen = vec![false; t.data.len()];
        for (i, j, v) in raw.entries {
            if !(1 <= i && i < j && j <= raw.n) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("bad entry index ({i},{j})"),
                });
            }
            let idx = t.index(i, j);
            if seen[idx] {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("duplicate entry ({i},{j})"),
                });
            }
            seen[idx] = true;
            t.set(i, j, v);
        }
        if !seen.iter().all(|&b| b) {
            return Err(Error::Parse {
                pos: 0,
                msg: "missing entries".into(),
            });
        }
        Ok(t)
    }
}

impl fmt::Display for StaircaseTableau {
    /// n−1 lines; line i lists the entries (i, i+1) ... (i, n) space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..self.n {
            for j in i + 1..=self.n {
                if j > i + 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StaircaseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "StaircaseTableau(n={})", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

/// Builds a tableau from rows `[t_{1,2}..t_{1,n}], [t_{2,3}..], ...`.
pub fn from_rows(n: usize, rows: &[Vec<u64>]) -> StaircaseTableau {
    let mut t = StaircaseTableau::zeros(n);
    assert_eq!(rows.len(), n.saturating_sub(1));
    for (r, row) in rows.iter().enumerate() {
        let i = r + 1;
        assert_eq!(row.len(), n - i);
        for (c, &v) in row.iter().enumerate() {
            t.set(i, i + 1 + c, v);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_and_sums() {
        let t = from_rows(4, &[vec![1, 2, 3], vec![4, 5], vec![6]]);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(2, 4), 5);
        assert_eq!(t.get(3, 4), 6);
        assert_eq!(t.sum(), 21);
        assert_eq!(t.sums_by_larger_index(), vec![0, 1, 6, 14]);
        assert_eq!(t.sums_by_smaller_index(), vec![6, 9, 6, 0]);
    }

    #[test]
    fn transpose_is_involutive() {
        let t = from_rows(4, &[vec![1, 2, 3], vec![4, 5], vec![6]]);
        let tt = t.transpose();
        assert_eq!(tt.get(1, 2), t.get(3, 4));
        assert_eq!(tt.transpose(), t);
    }

    #[test]
    fn text_and_json_forms() {
        let t = from_rows(3, &[vec![1, 2], vec![3]]);
        assert_eq!(t.to_string(), "1 2\n3");
        let json = t.to_json();
        assert_eq!(json, r#"{"n":3,"entries":[[1,2,1],[1,3,2],[2,3,3]]}"#);
        assert_eq!(StaircaseTableau::from_json(&json).unwrap(), t);
    }
}
