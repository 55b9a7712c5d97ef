//! Rational Dyck paths and their label calculus: the positive label set,
//! area, codinv tableaux, the hook-set bijection onto simultaneous cores,
//! the composite map from dominant p-stable affine permutations, the zeta
//! and eta maps, and complements.
//!
//! Paths start at the origin; E steps move right, N steps move up. The label
//! of the step starting at the lattice point (i, j) is jp − in, and the box
//! whose bottom-right corner is (i, j) carries the same label.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abacus::{alpha, alpha_inv};
use crate::affine::AffinePermutation;
use crate::partition::Partition;
use crate::tableau::StaircaseTableau;
use crate::{gcd, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    N,
    E,
}

/// A lattice path with n north and p east steps, gcd(n,p) = 1, staying
/// weakly above the diagonal of slope n/p: every visited point (i,j)
/// satisfies jp − in >= 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalDyckPath {
    n: u64,
    p: u64,
    word: Vec<Step>,
}

impl RationalDyckPath {
    pub fn new(n: u64, p: u64, word: Vec<Step>) -> Result<Self> {
        if n == 0 || p == 0 || gcd(n, p) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        let norths = word.iter().filter(|&&s| s == Step::N).count() as u64;
        let easts = word.len() as u64 - norths;
        if norths != n || easts != p {
            return Err(Error::InvalidWord {
                reason: format!("expected {n} N and {p} E steps, found {norths} and {easts}"),
            });
        }
        let (mut i, mut j) = (0i64, 0i64);
        for (pos, &s) in word.iter().enumerate() {
            match s {
                Step::N => j += 1,
                Step::E => i += 1,
            }
            if j * p as i64 - i * (n as i64) < 0 {
                return Err(Error::InvalidWord {
                    reason: format!("path dips below the diagonal after step {}", pos + 1),
                });
            }
        }
        Ok(RationalDyckPath { n, p, word })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    /// The label jp − in of each step's starting point, in path order.
    pub fn step_labels(&self) -> Vec<i64> {
        let (mut i, mut j) = (0i64, 0i64);
        let mut labels = Vec::with_capacity(self.word.len());
        for &s in &self.word {
            labels.push(j * self.p as i64 - i * self.n as i64);
            match s {
                Step::N => j += 1,
                Step::E => i += 1,
            }
        }
        labels
    }

    /// Labels of the north steps, sorted increasingly.
    pub fn north_labels(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .step_labels()
            .into_iter()
            .zip(&self.word)
            .filter(|(_, &s)| s == Step::N)
            .map(|(l, _)| l)
            .collect();
        out.sort_unstable();
        out
    }

    /// x-coordinates of the starting points of the north steps, in path order.
    fn north_x_coords(&self) -> Vec<u64> {
        let mut i = 0u64;
        let mut out = Vec::with_capacity(self.n as usize);
        for &s in &self.word {
            match s {
                Step::N => out.push(i),
                Step::E => i += 1,
            }
        }
        out
    }

    /// Height of the path over the column a (the number of north steps taken
    /// before the a-th east step), for a = 1..=p.
    fn column_heights(&self) -> Vec<u64> {
        let mut h = Vec::with_capacity(self.p as usize);
        let mut j = 0u64;
        for &s in &self.word {
            match s {
                Step::N => j += 1,
                Step::E => h.push(j),
            }
        }
        h
    }

    /// The set of positive labels of boxes below the path; these are exactly
    /// the boxes between the path and the diagonal.
    pub fn h_set(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for (a, &height) in self.column_heights().iter().enumerate() {
            let a = a as i64 + 1;
            for b in 0..height as i64 {
                let label = b * self.p as i64 - a * self.n as i64;
                if label > 0 {
                    out.insert(label as u64);
                }
            }
        }
        out
    }

    /// area = the number of boxes below the path and strictly above the diagonal.
    pub fn area(&self) -> u64 {
        self.h_set().len() as u64
    }

    /// Codinv tableau: with the north labels l1 < ... < ln, entry (i,j)
    /// counts the h in the positive label set with li < h < li + p and
    /// h ≡ lj mod n.
    pub fn codinv_tableau(&self) -> StaircaseTableau {
        let n = self.n as usize;
        let labels = self.north_labels();
        let hs = self.h_set();
        let mut t = StaircaseTableau::zeros(n);
        let ni = self.n as i64;
        for i in 1..n {
            for j in i + 1..=n {
                let li = labels[i - 1];
                let lj = labels[j - 1];
                let count = hs
                    .iter()
                    .filter(|&&h| {
                        let h = h as i64;
                        li < h && h < li + self.p as i64 && (h - lj).rem_euclid(ni) == 0
                    })
                    .count() as u64;
                t.set(i, j, count);
            }
        }
        t
    }

    /// The simultaneous core whose first-column hook lengths are the positive
    /// label set of the path.
    pub fn to_core(&self) -> Partition {
        let kappa = Partition::from_first_column_hooks(&self.h_set())
            .expect("positive label set is a valid hook set");
        debug_assert!(kappa.is_core(self.n) && kappa.is_core(self.p));
        kappa
    }

    /// Inverse of [`Self::to_core`]: rebuilds the path of an n,p-core from its
    /// first-column hook lengths.
    pub fn from_core(kappa: &Partition, n: u64, p: u64) -> Result<Self> {
        if n == 0 || p == 0 || gcd(n, p) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        if !kappa.is_core(n) {
            return Err(Error::NotCore { n });
        }
        if !kappa.is_core(p) {
            return Err(Error::NotCore { n: p });
        }
        let hooks: BTreeSet<u64> = kappa.first_column_hooks().into_iter().collect();
        let mut word = Vec::with_capacity((n + p) as usize);
        let mut current = 0u64;
        for a in 1..=p as i64 {
            let mut height = 0u64;
            for b in 0..n as i64 {
                let label = b * p as i64 - a * n as i64;
                if label <= 0 || hooks.contains(&(label as u64)) {
                    height += 1;
                }
            }
            for _ in current..height {
                word.push(Step::N);
            }
            if height < current {
                return Err(Error::Invariant(format!(
                    "hook set of {kappa} does not describe a monotone path"
                )));
            }
            current = height;
            word.push(Step::E);
        }
        for _ in current..n {
            word.push(Step::N);
        }
        let path = RationalDyckPath::new(n, p, word)?;
        if path.h_set() != hooks {
            return Err(Error::Invariant(format!(
                "path rebuilt from {kappa} has a different label set"
            )));
        }
        Ok(path)
    }

    /// The composite bijection from dominant p-stable affine permutations to
    /// rational Dyck paths, via the bead-set abacus and the core.
    pub fn from_permutation(w: &AffinePermutation, p: u64) -> Result<Self> {
        let n = w.n() as u64;
        if gcd(n, p) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        if !w.is_p_stable(p) {
            return Err(Error::NotStable { p });
        }
        let kappa = alpha_inv(&w.bead_set()?)?;
        RationalDyckPath::from_core(&kappa, n, p)
    }

    /// Inverse of [`Self::from_permutation`].
    pub fn to_permutation(&self) -> Result<AffinePermutation> {
        AffinePermutation::from_bead_set(&alpha(&self.to_core()), self.n)
    }

    /// The zeta map: the steps of the path reordered by increasing label.
    /// Labels are pairwise distinct, so no tie-breaking is ever involved.
    pub fn zeta(&self) -> RationalDyckPath {
        let labels = self.step_labels();
        let mut order: Vec<usize> = (0..self.word.len()).collect();
        order.sort_by_key(|&idx| labels[idx]);
        for w in order.windows(2) {
            assert_ne!(labels[w[0]], labels[w[1]], "step labels must be distinct");
        }
        let word: Vec<Step> = order.into_iter().map(|idx| self.word[idx]).collect();
        RationalDyckPath::new(self.n, self.p, word).expect("sorting by label yields a valid path")
    }

    /// Conjugates the associated core: an involution on paths.
    pub fn rank_complement(&self) -> RationalDyckPath {
        RationalDyckPath::from_core(&self.to_core().conjugate(), self.n, self.p)
            .expect("conjugate of an n,p-core is an n,p-core")
    }

    /// The eta map: zeta after the rank complement.
    pub fn eta(&self) -> RationalDyckPath {
        self.rank_complement().zeta()
    }

    /// Preimage under the zeta map, found by table inversion over the whole
    /// family; desk scale only, since no closed-form inverse is implemented.
    pub fn zeta_inv(&self) -> Result<RationalDyckPath> {
        enumerate_paths(self.n, self.p)?
            .find(|candidate| candidate.zeta() == *self)
            .ok_or_else(|| Error::Invariant(format!("no zeta preimage found for {self}")))
    }

    /// The partition inside the p-by-n rectangle whose south-east boundary is
    /// the path, as exactly n weakly decreasing entries with trailing zeros.
    pub fn complement(&self) -> Vec<u64> {
        let mut xs = self.north_x_coords();
        xs.reverse();
        xs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonPath::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: JsonPath = serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        let word = parse_word(&raw.word)?;
        RationalDyckPath::new(raw.n, raw.p, word)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPath {
    n: u64,
    p: u64,
    word: String,
}

impl From<&RationalDyckPath> for JsonPath {
    fn from(x: &RationalDyckPath) -> Self {
        JsonPath {
            n: x.n,
            p: x.p,
            word: x.to_string(),
        }
    }
}

fn parse_word(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .map(|(pos, c)| match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            _ => Err(Error::Parse {
                pos,
                msg: format!("expected N or E, found `{c}`"),
            }),
        })
        .collect()
}

impl fmt::Display for RationalDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.word {
            write!(f, "{}", if s == Step::N { 'N' } else { 'E' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalDyckPath({}/{}: {})", self.n, self.p, self)
    }
}

impl FromStr for RationalDyckPath {
    type Err = Error;

    /// Parses the N/E word, inferring n and p from the step counts.
    fn from_str(s: &str) -> Result<Self> {
        let word = parse_word(s.trim())?;
        let n = word.iter().filter(|&&c| c == Step::N).count() as u64;
        let p = word.len() as u64 - n;
        RationalDyckPath::new(n, p, word)
    }
}

/// Streams every rational Dyck path for the coprime pair (n, p) exactly once,
/// in lexicographic word order with N before E.
pub fn enumerate_paths(n: u64, p: u64) -> Result<PathIter> {
    if n == 0 || p == 0 || gcd(n, p) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    Ok(PathIter {
        n,
        p,
        stack: vec![(Vec::new(), 0, 0)],
    })
}

pub struct PathIter {
    n: u64,
    p: u64,
    /// Depth-first frontier of (prefix, norths used, easts used); E pushed
    /// first so N-first prefixes are popped first.
    stack: Vec<(Vec<Step>, u64, u64)>,
}

impl Iterator for PathIter {
    type Item = RationalDyckPath;

    fn next(&mut self) -> Option<RationalDyckPath> {
        while let Some((prefix, norths, easts)) = self.stack.pop() {
            if norths == self.n && easts == self.p {
                return Some(RationalDyckPath {
                    n: self.n,
                    p: self.p,
                    word: prefix,
                });
            }
            // E keeps the point above the diagonal iff norths*p - (easts+1)*n >= 0
            if easts < self.p
                && norths as i64 * self.p as i64 - (easts as i64 + 1) * self.n as i64 >= 0
            {
                let mut w = prefix.clone();
                w.push(Step::E);
                self.stack.push((w, norths, easts + 1));
            }
            if norths < self.n {
                let mut w = prefix;
                w.push(Step::N);
                self.stack.push((w, norths + 1, easts));
            }
        }
        None
    }
}

/// The unique area-0 path, hugging the diagonal from below the label grid.
pub fn minimal_area_path(n: u64, p: u64) -> Result<RationalDyckPath> {
    if n == 0 || p == 0 || gcd(n, p) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    let mut word = Vec::with_capacity((n + p) as usize);
    let mut current = 0u64;
    for a in 1..=p {
        // lowest admissible height over column a
        let height = (a * n).div_ceil(p);
        for _ in current..height {
            word.push(Step::N);
        }
        word.push(Step::E);
        current = height;
    }
    for _ in current..n {
        word.push(Step::N);
    }
    RationalDyckPath::new(n, p, word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_catalan;
    use crate::tableau::from_rows;

    fn fig_path() -> RationalDyckPath {
        "NEENENENEENNEEEEENEEEEE".parse().unwrap()
    }

    fn fig_core() -> Partition {
        Partition::new(vec![19, 13, 7, 6, 5, 5, 4, 3, 2, 2, 2, 2, 1]).unwrap()
    }

    #[test]
    fn validation() {
        assert!("NEE".parse::<RationalDyckPath>().is_ok());
        assert!("ENE".parse::<RationalDyckPath>().is_err()); // dips below
        assert!("NENE".parse::<RationalDyckPath>().is_err()); // gcd(2,2) != 1
        assert!(matches!(
            "NEX".parse::<RationalDyckPath>(),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn labels() {
        let x = "NEE".parse::<RationalDyckPath>().unwrap();
        assert_eq!(x.step_labels(), vec![0, 2, 1]);
        let f = fig_path();
        assert_eq!(f.step_labels()[0], 0);
        assert_eq!(f.north_labels(), vec![0, 2, 11, 19, 20, 22, 38]);
    }

    #[test]
    fn h_set_and_area() {
        let f = fig_path();
        let hs: Vec<u64> = f.h_set().into_iter().collect();
        assert_eq!(hs, vec![1, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 24, 31]);
        assert_eq!(f.area(), 13);
        assert_eq!(minimal_area_path(7, 16).unwrap().area(), 0);
        // the all-N-first path has maximal area (n-1)(p-1)/2
        let top: RationalDyckPath = "NNEEE".parse().unwrap();
        assert_eq!(top.area(), 1);
        assert_eq!(top.h_set().into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn codinv_matches_running_example() {
        let f = fig_path();
        let expected = from_rows(
            7,
            &[
                vec![0, 1, 2, 2, 3, 2],
                vec![1, 2, 2, 2, 3],
                vec![1, 1, 1, 2],
                vec![0, 0, 2],
                vec![0, 2],
                vec![2],
            ],
        );
        assert_eq!(f.codinv_tableau(), expected);
        assert_eq!(f.codinv_tableau().sum(), 31);
        let min = minimal_area_path(5, 7).unwrap();
        assert_eq!(min.codinv_tableau(), StaircaseTableau::zeros(5));
    }

    #[test]
    fn core_bijection() {
        assert_eq!(
            minimal_area_path(7, 16).unwrap().to_core(),
            Partition::empty()
        );
        assert_eq!(fig_path().to_core(), fig_core());
        assert_eq!(
            RationalDyckPath::from_core(&fig_core(), 7, 16).unwrap(),
            fig_path()
        );
        for x in enumerate_paths(3, 4).unwrap() {
            assert_eq!(RationalDyckPath::from_core(&x.to_core(), 3, 4).unwrap(), x);
        }
        let not_core = Partition::new(vec![2, 1]).unwrap(); // has hook 3
        assert_eq!(
            RationalDyckPath::from_core(&not_core, 3, 4),
            Err(Error::NotCore { n: 3 })
        );
    }

    #[test]
    fn permutation_round_trip() {
        let w: AffinePermutation = "[-2,15,-1,16,-14,10,4]".parse().unwrap();
        let x = RationalDyckPath::from_permutation(&w, 16).unwrap();
        assert_eq!(x, fig_path());
        assert_eq!(x.to_permutation().unwrap(), w);
        let id = AffinePermutation::identity(7);
        assert_eq!(
            RationalDyckPath::from_permutation(&id, 16).unwrap(),
            minimal_area_path(7, 16).unwrap()
        );
    }

    #[test]
    fn zeta_eta_complement() {
        let f = fig_path();
        assert_eq!(f.complement(), vec![11, 6, 6, 4, 3, 2, 0]);
        let z = f.zeta();
        assert_eq!(z.to_string(), "NNEENEEENNENEEEEEEENEEE");
        assert_eq!(z.complement(), vec![13, 6, 5, 5, 2, 0, 0]);
        assert_eq!(z.area(), 14);
        assert_eq!(f.eta().complement(), vec![10, 10, 5, 2, 2, 2, 0]);
        // n = 1: a single path, fixed by zeta
        let only = enumerate_paths(1, 4).unwrap().next().unwrap();
        assert_eq!(only.zeta(), only);
        // top boundary path has all-zero complement; the area-0 path has the
        // largest staircase-like one
        let top: RationalDyckPath = "NNEEE".parse().unwrap();
        assert_eq!(top.complement(), vec![0, 0]);
        assert_eq!(minimal_area_path(2, 3).unwrap().complement(), vec![1, 0]);
        assert_eq!(minimal_area_path(3, 4).unwrap().complement(), vec![2, 1, 0]);
        // rank complement is an involution
        assert_eq!(f.rank_complement().rank_complement(), f);
    }

    #[test]
    fn zeta_table_inversion() {
        for x in enumerate_paths(3, 5).unwrap() {
            assert_eq!(x.zeta().zeta_inv().unwrap(), x);
        }
        let f = fig_path();
        assert_eq!(f.zeta().zeta_inv().unwrap(), f);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_paths(1, 2).unwrap().count(), 1);
        assert_eq!(enumerate_paths(3, 4).unwrap().count(), 5);
        assert_eq!(
            enumerate_paths(5, 6).unwrap().count() as u128,
            rational_catalan(5, 6)
        );
        assert!(enumerate_paths(4, 6).is_err());
        // each path exactly once
        let all: Vec<_> = enumerate_paths(4, 7).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
        assert_eq!(all.len() as u128, rational_catalan(4, 7));
        // the stream order is lexicographic with N before E
        let words: Vec<String> = enumerate_paths(2, 3)
            .unwrap()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(words, vec!["NNEEE", "NENEE"]);
        let mut sorted = words.clone();
        sorted.sort_by_key(|w| w.replace('N', "A"));
        assert_eq!(words, sorted);
    }

    #[test]
    fn json_round_trip() {
        let f = fig_path();
        let json = f.to_json();
        assert_eq!(json, r#"{"n":7,"p":16,"word":"NEENENENEENNEEEEENEEEEE"}"#);
        assert_eq!(RationalDyckPath::from_json(&json).unwrap(), f);
    }
}
