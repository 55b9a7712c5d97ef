//! The affine symmetric group in window notation: group operations, the
//! translation/permutation decomposition, the involutive diagram automorphism,
//! inversion tables, p-stability, rational Shi tableaux, Pak–Stanley
//! labellings, and the bead-set bijection onto balanced flush abaci.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::abacus::{alpha_inv, Abacus};
use crate::parse::Scanner;
use crate::partition::Partition;
use crate::tableau::StaircaseTableau;
use crate::{gcd, Error, Result};

/// A finite permutation of 1..n, stored as 1-based images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePerm {
    images: Vec<usize>,
}

impl FinitePerm {
    pub fn identity(n: usize) -> Self {
        FinitePerm {
            images: (1..=n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::Invariant(format!("not a permutation: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(FinitePerm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> FinitePerm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        FinitePerm { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Debug for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An affine permutation of period n, stored by its window (w(1),...,w(n)).
/// The window sums to n(n+1)/2 and its residues mod n are pairwise distinct;
/// the bijection extends to all of Z by w(i+n) = w(i) + n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidWindow {
                reason: "window is empty".into(),
            });
        }
        let ni = n as i64;
        let sum: i64 = window.iter().sum();
        if sum != ni * (ni + 1) / 2 {
            return Err(Error::InvalidWindow {
                reason: format!("window sums to {sum}, expected {}", ni * (ni + 1) / 2),
            });
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow {
                    reason: format!("residue {r} occurs twice"),
                });
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// The simple transposition s_i for i in 1..=n; s_n is the affine one.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i > n || n < 2 {
            return Err(Error::InvalidWindow {
                reason: format!("no simple transposition s_{i} for period {n}"),
            });
        }
        let mut window: Vec<i64> = (1..=n as i64).collect();
        if i < n {
            window.swap(i - 1, i);
        } else {
            window[0] = 0;
            window[n - 1] = n as i64 + 1;
        }
        Ok(AffinePermutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Quasi-periodic evaluation at any integer.
    pub fn evaluate(&self, i: i64) -> i64 {
        let n = self.window.len() as i64;
        let k = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n) as usize;
        self.window[r] + k * n
    }

    /// Function composition: (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &AffinePermutation) -> Result<AffinePermutation> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = (1..=self.n() as i64)
            .map(|i| self.evaluate(other.evaluate(i)))
            .collect();
        Ok(AffinePermutation { window })
    }

    pub fn inverse(&self) -> AffinePermutation {
        let n = self.window.len() as i64;
        let mut window = vec![0i64; self.window.len()];
        for i in 1..=n {
            let v = self.evaluate(i);
            let a = (v - 1).div_euclid(n);
            let b = (v - 1).rem_euclid(n) as usize; // value v = a*n + (b+1)
            window[b] = i - a * n;
        }
        AffinePermutation { window }
    }

    /// The involutive diagram automorphism: w*(i) = 1 − w(1−i), window
    /// [n+1−w(n), ..., n+1−w(1)].
    pub fn star(&self) -> AffinePermutation {
        let n = self.window.len() as i64;
        let window = self.window.iter().rev().map(|&v| n + 1 - v).collect();
        AffinePermutation { window }
    }

    /// Minimal-length coset representative: strictly increasing window.
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|w| w[0] < w[1])
    }

    /// The alcove lies in the dominant chamber; equivalently the inverse is
    /// Grassmannian.
    pub fn is_dominant(&self) -> bool {
        self.inverse().is_grassmannian()
    }

    /// Writes self = t_mu ∘ sigma with sigma ∈ S_n and mu in the coroot
    /// lattice (sum-zero integer vector); also returns nu with
    /// nu(i) = −(w(i) − sigma(i))/n, so that self = sigma ∘ t_{−nu}.
    pub fn decompose(&self) -> (FinitePerm, Vec<i64>, Vec<i64>) {
        let n = self.window.len() as i64;
        let mut sigma = vec![0usize; self.n()];
        let mut mu = vec![0i64; self.n()];
        let mut nu = vec![0i64; self.n()];
        for (idx, &v) in self.window.iter().enumerate() {
            let a = (v - 1).div_euclid(n);
            let b = (v - 1).rem_euclid(n) as usize + 1;
            sigma[idx] = b;
            mu[b - 1] = a;
            nu[idx] = -a;
        }
        (FinitePerm { images: sigma }, mu, nu)
    }

    /// The translation t_q, q a sum-zero integer vector: t_q(i) = q_i n + i.
    pub fn translation(q: &[i64]) -> Result<AffinePermutation> {
        let n = q.len() as i64;
        if q.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidWindow {
                reason: "translation vector must sum to zero".into(),
            });
        }
        let window = q
            .iter()
            .enumerate()
            .map(|(i, &qi)| qi * n + i as i64 + 1)
            .collect();
        Ok(AffinePermutation { window })
    }

    /// Inversion table: entry (i,j) is |floor((w^{-1}(j) − w^{-1}(i))/n)|,
    /// with exact floored division toward −∞.
    pub fn inversion_table(&self) -> StaircaseTableau {
        let n = self.n();
        let inv = self.inverse();
        let mut t = StaircaseTableau::zeros(n);
        let ni = n as i64;
        for i in 1..n {
            for j in i + 1..=n {
                let d = inv.evaluate(j as i64) - inv.evaluate(i as i64);
                t.set(i, j, d.div_euclid(ni).unsigned_abs());
            }
        }
        t
    }

    /// Coxeter length: the number of affine inversions, computed as the sum
    /// of the inversion table.
    pub fn length(&self) -> u64 {
        self.inversion_table().sum()
    }

    /// Direct affine-inversion count: pairs (a,b) with a in 1..=n, a < b and
    /// w(a) > w(b). Independent of [`Self::inversion_table`]; used as an oracle.
    pub fn count_inversions_directly(&self) -> u64 {
        let n = self.n() as i64;
        let min = *self.window.iter().min().expect("nonempty");
        let mut count = 0;
        for a in 1..=n {
            let va = self.evaluate(a);
            // beyond this horizon every value exceeds va
            let horizon = a + n * ((va - min).div_euclid(n) + 2);
            for b in a + 1..=horizon {
                if self.evaluate(b) < va {
                    count += 1;
                }
            }
        }
        count
    }

    /// Counts the affine inversions (a, b) with w(a) ≡ i and w(b) ≡ j modulo
    /// the period; for dominant permutations this reproduces the inversion
    /// table entrywise, so it serves as its oracle.
    pub fn count_inversions_by_residue(&self, i: usize, j: usize) -> u64 {
        let n = self.n() as i64;
        let min = *self.window.iter().min().expect("nonempty");
        let mut count = 0;
        for a in 1..=n {
            let va = self.evaluate(a);
            if va.rem_euclid(n) != (i as i64).rem_euclid(n) {
                continue;
            }
            let horizon = a + n * ((va - min).div_euclid(n) + 2);
            for b in a + 1..=horizon {
                let vb = self.evaluate(b);
                if va > vb && vb.rem_euclid(n) == (j as i64).rem_euclid(n) {
                    count += 1;
                }
            }
        }
        count
    }

    /// w(i) < w(i+p) for all i; periodicity reduces this to i in 1..=n.
    pub fn is_p_stable(&self, p: u64) -> bool {
        assert!(p >= 1);
        (1..=self.n() as i64).all(|i| self.evaluate(i) < self.evaluate(i + p as i64))
    }

    fn require_stable_shi_input(&self, p: u64) -> Result<()> {
        let n = self.n() as u64;
        if gcd(n, p) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        if !self.is_dominant() {
            return Err(Error::NotDominant);
        }
        if !self.is_p_stable(p) {
            return Err(Error::NotStable { p });
        }
        Ok(())
    }

    /// Rational Shi tableau of a dominant p-stable affine permutation,
    /// gcd(n,p) = 1. Writing the inverse as t_q s and p = mn + r with
    /// r in [n−1], entry (i,j) caps the inversion-table entry at m when
    /// r + s(i) < s(j) or s(i) + r − n < s(j) < s(i), and at m+1 otherwise.
    pub fn shi_tableau(&self, p: u64) -> Result<StaircaseTableau> {
        self.require_stable_shi_input(p)?;
        let (s, _, _) = self.inverse().decompose();
        Ok(self.shi_tableau_with_perm(p, &s))
    }

    /// The capping rule of [`Self::shi_tableau`] evaluated with an explicit
    /// finite permutation; exposed so callers can print alternative readings.
    pub fn shi_tableau_with_perm(&self, p: u64, s: &FinitePerm) -> StaircaseTableau {
        let n = self.n();
        let k = self.inversion_table();
        if n == 1 {
            return k;
        }
        let ni = n as i64;
        let m = (p as i64).div_euclid(ni);
        let r = (p as i64).rem_euclid(ni);
        let mut t = StaircaseTableau::zeros(n);
        for i in 1..n {
            for j in i + 1..=n {
                let si = s.apply(i) as i64;
                let sj = s.apply(j) as i64;
                let cap = if r + si < sj || (si + r - ni < sj && sj < si) {
                    m
                } else {
                    m + 1
                };
                t.set(i, j, k.get(i, j).min(cap as u64));
            }
        }
        t
    }

    /// Pak–Stanley labelling: f_j = sum over i < j of the Shi tableau entry
    /// (i,j). Cross-checked against the direct inversion-counting definition.
    pub fn pak_stanley(&self, p: u64) -> Result<Vec<u64>> {
        let t = self.shi_tableau(p)?;
        let sums = t.sums_by_larger_index();
        let direct = self.pak_stanley_direct(p);
        if sums != direct {
            return Err(Error::Invariant(format!(
                "Pak-Stanley row sums {sums:?} disagree with direct counts {direct:?} for {self}"
            )));
        }
        Ok(sums)
    }

    /// Direct definition: f_i counts pairs (a,b) with a in 1..=n, a < b < a+p,
    /// w(a) > w(b) and w(b) ≡ i mod n. Defined for any p-stable permutation.
    pub fn pak_stanley_direct(&self, p: u64) -> Vec<u64> {
        let n = self.n();
        let ni = n as i64;
        let mut f = vec![0u64; n];
        for a in 1..=ni {
            let va = self.evaluate(a);
            for b in a + 1..a + p as i64 {
                let vb = self.evaluate(b);
                if va > vb {
                    let residue = vb.rem_euclid(ni) as usize; // class i=n shows up as 0
                    let i = if residue == 0 { n } else { residue };
                    f[i - 1] += 1;
                }
            }
        }
        f
    }

    /// Dual Pak–Stanley labelling: column sums of the Shi tableau, equal to
    /// the Pak–Stanley labelling of the star image.
    pub fn dual_pak_stanley(&self, p: u64) -> Result<Vec<u64>> {
        let t = self.shi_tableau(p)?;
        let by_smaller = t.sums_by_smaller_index();
        let n = self.n();
        let dual: Vec<u64> = (1..=n).map(|i| by_smaller[n - i]).collect();
        let via_star = self.star().pak_stanley(p)?;
        if dual != via_star {
            return Err(Error::Invariant(format!(
                "dual Pak-Stanley {dual:?} disagrees with star route {via_star:?} for {self}"
            )));
        }
        Ok(dual)
    }

    /// The bead set {z : w(z) <= 0} of a dominant affine permutation: a
    /// balanced n-flush abacus, p-flush exactly when w is p-stable.
    pub fn bead_set(&self) -> Result<Abacus> {
        if !self.is_dominant() {
            return Err(Error::NotDominant);
        }
        let n = self.n() as i64;
        let mut pos_beads = BTreeSet::new();
        let mut neg_gaps = BTreeSet::new();
        for i in 1..=n {
            // top bead in the residue class of i: largest z ≡ i with w(z) <= 0
            let top = i + n * (-self.evaluate(i)).div_euclid(n);
            let mut z = top;
            while z >= 0 {
                pos_beads.insert(z);
                z -= n;
            }
            let mut g = top + n;
            while g < 0 {
                neg_gaps.insert(g);
                g += n;
            }
        }
        Abacus::new(pos_beads, neg_gaps)
    }

    /// Reconstructs the dominant affine permutation from a balanced n-flush
    /// abacus: the minimal gaps of the n runners, sorted increasingly, form
    /// the window of the inverse.
    pub fn from_bead_set(a: &Abacus, n: u64) -> Result<AffinePermutation> {
        if !a.is_balanced() {
            return Err(Error::NotBalanced);
        }
        if !a.is_flush(n) {
            return Err(Error::NotFlush { n });
        }
        let ni = n as i64;
        let mut min_gaps = Vec::with_capacity(n as usize);
        for r in 0..ni {
            // the beads of a flush abacus form a down-closed ray inside each
            // runner; the minimal gap sits just above the top bead
            let top_pos = a.pos_beads().iter().rev().find(|&&b| b.rem_euclid(ni) == r);
            let top = match top_pos {
                Some(&b) => b,
                None => {
                    let mut z = r - ni;
                    while !a.contains(z) {
                        z -= ni;
                    }
                    z
                }
            };
            min_gaps.push(top + ni);
        }
        min_gaps.sort_unstable();
        let inv = AffinePermutation::new(min_gaps)
            .map_err(|e| Error::Invariant(format!("balanced flush abacus gave no window: {e}")))?;
        let w = inv.inverse();
        if !w.is_dominant() {
            return Err(Error::Invariant(format!(
                "abacus decoded to non-dominant permutation {w}"
            )));
        }
        Ok(w)
    }

    /// The n-core attached to a dominant affine permutation via its bead set.
    pub fn core(&self) -> Result<Partition> {
        alpha_inv(&self.bead_set()?)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePermutation{self}")
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    /// Text form: `[a1,a2,...,an]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sc = Scanner::new(s.trim());
        sc.expect("[")?;
        let vals = sc.int_list_until("]")?;
        sc.expect("]")?;
        sc.finish()?;
        if vals.is_empty() {
            return Err(Error::Parse {
                pos: 1,
                msg: "window must be nonempty".into(),
            });
        }
        AffinePermutation::new(vals).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })
    }
}

/// Word length by breadth-first search over products of simple transpositions;
/// an independent oracle for [`AffinePermutation::length`] at small length.
pub fn bfs_length(target: &AffinePermutation, max_length: u64) -> Option<u64> {
    use std::collections::{HashMap, VecDeque};
    let n = target.n();
    let id = AffinePermutation::identity(n);
    if *target == id {
        return Some(0);
    }
    let gens: Vec<AffinePermutation> = (1..=n)
        .filter_map(|i| AffinePermutation::simple(n, i).ok())
        .collect();
    let mut dist: HashMap<AffinePermutation, u64> = HashMap::new();
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == max_length {
            continue;
        }
        for g in &gens {
            let next = w.compose(g).expect("same period");
            if !dist.contains_key(&next) {
                if next == *target {
                    return Some(d + 1);
                }
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    None
}
