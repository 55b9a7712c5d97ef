//! Uniform crystallographic root systems of types A, B, C, D (bounded rank)
//! and G2, their affine roots and affine Weyl groups, Shi coordinates,
//! root-indexed inversion counts, p-stability, and the height-restricted
//! inversion counts generalising staircase tableaux.
//!
//! Roots are stored in simple-root coordinates and translation parts in
//! simple-coroot coordinates; every pairing reduces to the integer Cartan
//! matrix <s_i, s_j^v>, so the whole layer is exact integer arithmetic.

// index loops over several matrices at once read better than zipped iterators
#![allow(clippy::needless_range_loop)]

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{gcd, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SystemType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            SystemType::A => 'A',
            SystemType::B => 'B',
            SystemType::C => 'C',
            SystemType::D => 'D',
            SystemType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl std::str::FromStr for SystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(SystemType::A),
            "B" | "b" => Ok(SystemType::B),
            "C" | "c" => Ok(SystemType::C),
            "D" | "d" => Ok(SystemType::D),
            "G" | "g" => Ok(SystemType::G),
            _ => Err(Error::UnsupportedSystem(s.to_string())),
        }
    }
}

/// Square integer matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    pub(crate) fn identity(n: usize) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    fn get(&self, r: usize, c: usize) -> i64 {
        self.a[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.a[r * self.n + c] = v;
    }

    pub(crate) fn mul(&self, rhs: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat {
            n,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v != 0 {
                    for j in 0..n {
                        out.a[i * n + j] += v * rhs.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                *slot += self.get(i, j) * x;
            }
        }
        out
    }
}

/// A finite Weyl group element, acting on root coordinates and on coroot
/// coordinates; the matrices of the inverse are carried along so inversion
/// is free. Matrix equality (on root coordinates) is authoritative; the
/// cached word is a witness expression, not necessarily reduced.
#[derive(Clone)]
pub struct WeylElement {
    pub(crate) root_mat: Mat,
    pub(crate) coroot_mat: Mat,
    pub(crate) inv_root_mat: Mat,
    pub(crate) inv_coroot_mat: Mat,
    pub(crate) word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root_mat == other.root_mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.root_mat.hash(state);
    }
}

impl WeylElement {
    pub(crate) fn identity(rank: usize) -> Self {
        let id = Mat::identity(rank);
        WeylElement {
            root_mat: id.clone(),
            coroot_mat: id.clone(),
            inv_root_mat: id.clone(),
            inv_coroot_mat: id,
            word: Vec::new(),
        }
    }

    pub(crate) fn multiply(&self, rhs: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&rhs.word);
        WeylElement {
            root_mat: self.root_mat.mul(&rhs.root_mat),
            coroot_mat: self.coroot_mat.mul(&rhs.coroot_mat),
            inv_root_mat: rhs.inv_root_mat.mul(&self.inv_root_mat),
            inv_coroot_mat: rhs.inv_coroot_mat.mul(&self.inv_coroot_mat),
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            root_mat: self.inv_root_mat.clone(),
            coroot_mat: self.inv_coroot_mat.clone(),
            inv_root_mat: self.root_mat.clone(),
            inv_coroot_mat: self.coroot_mat.clone(),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.root_mat == Mat::identity(self.root_mat.n)
    }

    pub fn act_coroot(&self, q: &[i64]) -> Vec<i64> {
        self.coroot_mat.apply(q)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.word)
    }
}

/// An affine root a + k*delta, with the finite part stored as a root index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineRoot {
    pub root: usize,
    pub k: i64,
}

/// An affine Weyl group element written as t_q s with q in the coroot
/// lattice (simple-coroot coordinates) and s in the finite Weyl group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub(crate) q: Vec<i64>,
    pub(crate) s: WeylElement,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            q: vec![0; rank],
            s: WeylElement::identity(rank),
        }
    }

    pub fn translation(q: Vec<i64>) -> Self {
        let rank = q.len();
        AffineWeylElement {
            q,
            s: WeylElement::identity(rank),
        }
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.q
    }

    pub fn finite_part(&self) -> &WeylElement {
        &self.s
    }

    pub fn compose(&self, rhs: &AffineWeylElement) -> AffineWeylElement {
        let mut q = self.s.act_coroot(&rhs.q);
        for (qi, si) in q.iter_mut().zip(&self.q) {
            *qi += si;
        }
        AffineWeylElement {
            q,
            s: self.s.multiply(&rhs.s),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let s_inv = self.s.inverse();
        let q = s_inv.act_coroot(&self.q).iter().map(|x| -x).collect();
        AffineWeylElement { q, s: s_inv }
    }

    pub fn is_translation(&self) -> bool {
        self.s.is_identity()
    }

    /// Canonical JSON form with 1-based generator indices.
    pub fn to_json(&self) -> String {
        let shadow = JsonElement {
            q: self.q.clone(),
            word: self.s.word.iter().map(|&i| i + 1).collect(),
        };
        serde_json::to_string(&shadow).expect("serializable")
    }

    pub fn from_json(rs: &RootSystem, s: &str) -> Result<AffineWeylElement> {
        let raw: JsonElement = serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        if raw.q.len() != rs.rank {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {} coordinates", rs.rank),
            });
        }
        let mut s_el = WeylElement::identity(rs.rank);
        for &i in &raw.word {
            if i < 1 || i > rs.rank {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("bad generator index {i}"),
                });
            }
            s_el = s_el.multiply(&rs.simple_refl[i - 1]);
        }
        Ok(AffineWeylElement { q: raw.q, s: s_el })
    }
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    q: Vec<i64>,
    word: Vec<usize>,
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}*{:?}", self.q, self.s)
    }
}

/// An irreducible crystallographic root system with cached integer data.
pub struct RootSystem {
    label: SystemType,
    rank: usize,
    /// cartan[i][j] = <s_i, s_j^v>.
    cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, scaled to integers.
    norms: Vec<i64>,
    /// All roots in simple-root coordinates.
    roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    heights: Vec<i64>,
    positive: Vec<usize>,
    highest: usize,
    coxeter_number: i64,
    /// pairing[a][j] = <root_a, s_j^v>.
    pairing: Vec<Vec<i64>>,
    pub(crate) simple_refl: Vec<WeylElement>,
    /// Reflection in the highest root.
    highest_refl: WeylElement,
    /// The highest coroot in simple-coroot coordinates.
    highest_coroot: Vec<i64>,
    weyl_order: u128,
}

impl RootSystem {
    /// Builds the root system `label` of the given rank. Supported:
    /// A (rank 1..=8), B and C (rank 2..=8), D (rank 3..=8), G (rank 2).
    pub fn build(label: SystemType, rank: usize) -> Result<RootSystem> {
        let ok = match label {
            SystemType::A => (1..=8).contains(&rank),
            SystemType::B | SystemType::C => (2..=8).contains(&rank),
            SystemType::D => (3..=8).contains(&rank),
            SystemType::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedSystem(format!("{label}{rank}")));
        }

        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut norms = vec![2i64; rank];
        match label {
            SystemType::A => {
                for i in 0..rank.saturating_sub(1) {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
            }
            SystemType::B => {
                for i in 0..rank - 1 {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
                // the last simple root is short
                cartan[rank - 2][rank - 1] = -2;
                norms[rank - 1] = 1;
            }
            SystemType::C => {
                for i in 0..rank - 1 {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
                // the last simple root is long
                cartan[rank - 1][rank - 2] = -2;
                norms[rank - 1] = 4;
            }
            SystemType::D => {
                for i in 0..rank - 2 {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
                cartan[rank - 2][rank - 1] = 0;
                cartan[rank - 1][rank - 2] = 0;
                cartan[rank - 3][rank - 1] = -1;
                cartan[rank - 1][rank - 3] = -1;
            }
            SystemType::G => {
                cartan[0][1] = -1;
                cartan[1][0] = -3;
                norms[1] = 6;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if cartan[i][j] * norms[j] != cartan[j][i] * norms[i] {
                    return Err(Error::Invariant("Cartan data is not symmetrisable".into()));
                }
            }
        }

        // simple reflections: s_i(s_j) = s_j - C_ji s_i on root coordinates,
        // s_i(s_j^v) = s_j^v - C_ij s_i^v on coroot coordinates
        let mut simple_refl = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut root_mat = Mat::identity(rank);
            let mut coroot_mat = Mat::identity(rank);
            for j in 0..rank {
                root_mat.set(i, j, root_mat.get(i, j) - cartan[j][i]);
                coroot_mat.set(i, j, coroot_mat.get(i, j) - cartan[i][j]);
            }
            simple_refl.push(WeylElement {
                inv_root_mat: root_mat.clone(),
                inv_coroot_mat: coroot_mat.clone(),
                root_mat,
                coroot_mat,
                word: vec![i],
            });
        }

        // close the simple roots under the reflections
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut root_index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            root_index.insert(e.clone(), roots.len());
            roots.push(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for refl in &simple_refl {
                let img = refl.root_mat.apply(&v);
                if !root_index.contains_key(&img) {
                    root_index.insert(img.clone(), roots.len());
                    roots.push(img.clone());
                    queue.push_back(img);
                }
            }
        }

        let heights: Vec<i64> = roots.iter().map(|c| c.iter().sum()).collect();
        for (c, &h) in roots.iter().zip(&heights) {
            let all_nonneg = c.iter().all(|&x| x >= 0);
            let all_nonpos = c.iter().all(|&x| x <= 0);
            if !(all_nonneg || all_nonpos) || h == 0 {
                return Err(Error::Invariant(format!("mixed-sign root {c:?}")));
            }
        }
        let positive: Vec<usize> = (0..roots.len()).filter(|&a| heights[a] > 0).collect();
        let expected_positive = match label {
            SystemType::A => rank * (rank + 1) / 2,
            SystemType::B | SystemType::C => rank * rank,
            SystemType::D => rank * (rank - 1),
            SystemType::G => 6,
        };
        if positive.len() != expected_positive {
            return Err(Error::Invariant(format!(
                "expected {expected_positive} positive roots, found {}",
                positive.len()
            )));
        }

        let max_height = heights.iter().copied().max().expect("nonempty");
        let highest_candidates: Vec<usize> = (0..roots.len())
            .filter(|&a| heights[a] == max_height)
            .collect();
        if highest_candidates.len() != 1 {
            return Err(Error::Invariant("highest root is not unique".into()));
        }
        let highest = highest_candidates[0];
        let coxeter_number = max_height + 1;
        let expected_h = match label {
            SystemType::A => rank as i64 + 1,
            SystemType::B | SystemType::C => 2 * rank as i64,
            SystemType::D => 2 * rank as i64 - 2,
            SystemType::G => 6,
        };
        if coxeter_number != expected_h {
            return Err(Error::Invariant(format!(
                "Coxeter number {coxeter_number}, expected {expected_h}"
            )));
        }

        let pairing: Vec<Vec<i64>> = roots
            .iter()
            .map(|c| {
                (0..rank)
                    .map(|j| (0..rank).map(|i| c[i] * cartan[i][j]).sum())
                    .collect()
            })
            .collect();

        // twice the symmetrised form (x, y) on root coordinates
        let twice_form = |x: &[i64], y: &[i64]| -> i64 {
            let mut acc = 0;
            for i in 0..rank {
                for j in 0..rank {
                    acc += x[i] * y[j] * cartan[i][j] * norms[j];
                }
            }
            acc
        };
        let tn_high = twice_form(&roots[highest], &roots[highest]);
        let highest_coroot: Vec<i64> = roots[highest]
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let num = 2 * b * norms[i];
                assert_eq!(num % tn_high, 0, "comark must be integral");
                num / tn_high
            })
            .collect();

        // reflection in the highest root a~: on root coordinates
        // x -> x - <x, a~^v> a~, on coroot coordinates y -> y - <a~, y> a~^v
        let mut high_root_mat = Mat::identity(rank);
        let mut high_coroot_mat = Mat::identity(rank);
        for j in 0..rank {
            let mut e = vec![0i64; rank];
            e[j] = 1;
            let tj = twice_form(&e, &roots[highest]);
            assert_eq!(
                2 * tj % tn_high,
                0,
                "crystallographic pairing must be integral"
            );
            let coeff_root = 2 * tj / tn_high; // <s_j, a~^v>
            for r in 0..rank {
                high_root_mat.set(
                    r,
                    j,
                    high_root_mat.get(r, j) - coeff_root * roots[highest][r],
                );
            }
            let coeff_coroot = pairing[highest][j]; // <a~, s_j^v>
            for r in 0..rank {
                high_coroot_mat.set(
                    r,
                    j,
                    high_coroot_mat.get(r, j) - coeff_coroot * highest_coroot[r],
                );
            }
        }
        let highest_refl = WeylElement {
            inv_root_mat: high_root_mat.clone(),
            inv_coroot_mat: high_coroot_mat.clone(),
            root_mat: high_root_mat,
            coroot_mat: high_coroot_mat,
            word: Vec::new(),
        };

        let weyl_order: u128 = match label {
            SystemType::A => (1..=rank as u128 + 1).product(),
            SystemType::B | SystemType::C => (1..=rank as u128).product::<u128>() << rank,
            SystemType::D => ((1..=rank as u128).product::<u128>() << rank) / 2,
            SystemType::G => 12,
        };

        let rs = RootSystem {
            label,
            rank,
            cartan,
            norms,
            roots,
            root_index,
            heights,
            positive,
            highest,
            coxeter_number,
            pairing,
            simple_refl,
            highest_refl,
            highest_coroot,
            weyl_order,
        };
        debug_assert!(rs.check_highest_reflection());
        Ok(rs)
    }

    fn check_highest_reflection(&self) -> bool {
        let m = &self.highest_refl.root_mat;
        let neg: Vec<i64> = self.roots[self.highest].iter().map(|x| -x).collect();
        m.apply(&self.roots[self.highest]) == neg && m.mul(m) == Mat::identity(self.rank)
    }

    pub fn label(&self) -> SystemType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// The integer pairing matrix <s_i, s_j^v> of the simple system.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Scaled squared lengths of the simple roots.
    pub fn simple_norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    pub fn highest_coroot(&self) -> &[i64] {
        &self.highest_coroot
    }

    pub fn root_coords(&self, a: usize) -> &[i64] {
        &self.roots[a]
    }

    pub fn root_index_of(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    pub fn height(&self, a: usize) -> i64 {
        self.heights[a]
    }

    pub fn is_positive_root(&self, a: usize) -> bool {
        self.heights[a] > 0
    }

    pub fn negate_root(&self, a: usize) -> usize {
        let neg: Vec<i64> = self.roots[a].iter().map(|x| -x).collect();
        self.root_index[&neg]
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// <root_a, q> for q in simple-coroot coordinates.
    pub fn pair(&self, a: usize, q: &[i64]) -> i64 {
        self.pairing[a].iter().zip(q).map(|(x, y)| x * y).sum()
    }

    pub fn simple_reflection(&self, i: usize) -> AffineWeylElement {
        AffineWeylElement {
            q: vec![0; self.rank],
            s: self.simple_refl[i].clone(),
        }
    }

    /// The affine simple reflection, through the wall <highest, x> = 1.
    pub fn affine_reflection(&self) -> AffineWeylElement {
        AffineWeylElement {
            q: self.highest_coroot.clone(),
            s: self.highest_refl.clone(),
        }
    }

    pub fn act_on_root(&self, w: &WeylElement, a: usize) -> usize {
        let img = w.root_mat.apply(&self.roots[a]);
        self.root_index[&img]
    }

    /// Positivity of the affine root a + k*delta: height(a) + k*h > 0.
    pub fn affine_positive(&self, rho: AffineRoot) -> bool {
        self.heights[rho.root] + rho.k * self.coxeter_number > 0
    }

    pub fn affine_height(&self, rho: AffineRoot) -> i64 {
        self.heights[rho.root] + rho.k * self.coxeter_number
    }

    /// The affine Weyl action: (t_q s)(a + k delta) = s.a + (k - <q, s.a>) delta.
    pub fn act(&self, w: &AffineWeylElement, rho: AffineRoot) -> AffineRoot {
        let img = self.act_on_root(&w.s, rho.root);
        AffineRoot {
            root: img,
            k: rho.k - self.pair(img, &w.q),
        }
    }

    /// Shi coordinates of the alcove of w = t_q s: for each positive root a,
    /// <a,q> when s^{-1}.a is positive and <a,q> - 1 otherwise.
    pub fn shi_coordinates(&self, w: &AffineWeylElement) -> Vec<(usize, i64)> {
        self.positive
            .iter()
            .map(|&a| {
                let pre = self.root_index[&w.s.inv_root_mat.apply(&self.roots[a])];
                let correction = i64::from(!self.is_positive_root(pre));
                (a, self.pair(a, &w.q) - correction)
            })
            .collect()
    }

    pub fn is_dominant(&self, w: &AffineWeylElement) -> bool {
        self.shi_coordinates(w).iter().all(|&(_, k)| k >= 0)
    }

    /// |Shi coordinate| of the root line through a: the number of affine
    /// inversions of w^{-1} of the form ±a + k delta (closed form).
    pub fn k_alpha(&self, w: &AffineWeylElement, a: usize) -> u64 {
        let pre = self.root_index[&w.s.inv_root_mat.apply(&self.roots[a])];
        let pairing = self.pair(a, &w.q);
        if self.is_positive_root(pre) {
            pairing.unsigned_abs()
        } else {
            (pairing - 1).unsigned_abs()
        }
    }

    /// Coxeter length: the total number of affine inversions, summed over
    /// the root lines (the inverse has the same length).
    pub fn length(&self, w: &AffineWeylElement) -> u64 {
        self.positive.iter().map(|&a| self.k_alpha(w, a)).sum()
    }

    /// Counts Inv(w^{-1}) along {±a + k delta} directly; an independent
    /// oracle for [`Self::k_alpha`].
    pub fn k_alpha_counting(&self, w: &AffineWeylElement, a: usize) -> u64 {
        let w_inv = w.inverse();
        let bound = self.pair(a, &w.q).abs() + 2;
        let neg_a = self.negate_root(a);
        let mut count = 0;
        for root in [a, neg_a] {
            for k in -bound..=bound {
                let rho = AffineRoot { root, k };
                if self.affine_positive(rho) && !self.affine_positive(self.act(&w_inv, rho)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The finite set of affine roots of height exactly p.
    pub fn affine_roots_of_height(&self, p: i64) -> Vec<AffineRoot> {
        let h = self.coxeter_number;
        (0..self.roots.len())
            .filter_map(|a| {
                let diff = p - self.heights[a];
                (diff.rem_euclid(h) == 0).then(|| AffineRoot {
                    root: a,
                    k: diff / h,
                })
            })
            .collect()
    }

    /// Positive affine roots of height strictly between 0 and p.
    pub fn affine_positive_below(&self, p: i64) -> Vec<AffineRoot> {
        let h = self.coxeter_number;
        let mut out = Vec::new();
        for a in 0..self.roots.len() {
            let ht = self.heights[a];
            let k_min = (1 - ht + h - 1).div_euclid(h); // smallest k with ht + kh >= 1
            let k_max = (p - 1 - ht).div_euclid(h);
            for k in k_min..=k_max {
                out.push(AffineRoot { root: a, k });
            }
        }
        out
    }

    /// w maps every affine root of height p to a positive affine root.
    /// Requires gcd(p, h) = 1.
    pub fn is_p_stable(&self, w: &AffineWeylElement, p: u64) -> Result<bool> {
        let h = self.coxeter_number as u64;
        if gcd(p, h) != 1 {
            return Err(Error::NotCoprime { n: h, p });
        }
        Ok(self
            .affine_roots_of_height(p as i64)
            .into_iter()
            .all(|rho| self.affine_positive(self.act(w, rho))))
    }

    /// Height-restricted inversion count along the root line of `a`, for a
    /// dominant p-stable element. Computed both from the counting definition
    /// and from the min(k_alpha, m or m+1) closed form keyed on the height of
    /// s^{-1}.a; the two routes must agree.
    pub fn t_alpha_p(&self, w: &AffineWeylElement, a: usize, p: u64) -> Result<u64> {
        let h = self.coxeter_number;
        if gcd(p, h as u64) != 1 {
            return Err(Error::NotCoprime { n: h as u64, p });
        }
        if !self.is_dominant(w) {
            return Err(Error::NotDominant);
        }
        if !self.is_p_stable(w, p)? {
            return Err(Error::NotStable { p });
        }
        let m = (p as i64).div_euclid(h);
        let r = (p as i64).rem_euclid(h);
        let pre = self.root_index[&w.s.inv_root_mat.apply(&self.roots[a])];
        let ht_pre = self.heights[pre];
        let cap = if (r - h < ht_pre && ht_pre < 0) || r < ht_pre {
            m
        } else {
            m + 1
        };
        let closed = self.k_alpha(w, a).min(cap as u64);

        // counting route: images of negated positive affine roots of height
        // below p that land on -a + k delta with k >= 1
        let neg_a = self.negate_root(a);
        let counting = self
            .affine_positive_below(p as i64)
            .into_iter()
            .map(|rho| {
                self.act(
                    w,
                    AffineRoot {
                        root: self.negate_root(rho.root),
                        k: -rho.k,
                    },
                )
            })
            .filter(|img| img.root == neg_a && img.k >= 1)
            .count() as u64;

        if closed != counting {
            return Err(Error::Invariant(format!(
                "height-restricted inversion count mismatch ({closed} vs {counting}) \
                 for root {a} in {}",
                self.name()
            )));
        }
        Ok(closed)
    }

    /// Sum of [`Self::t_alpha_p`] over all positive roots.
    pub fn t_statistic(&self, w: &AffineWeylElement, p: u64) -> Result<u64> {
        let mut acc = 0;
        for &a in &self.positive {
            acc += self.t_alpha_p(w, a, p)?;
        }
        Ok(acc)
    }

    /// The vector of height-restricted counts, indexed like
    /// [`Self::positive_roots`].
    pub fn shi_vector(&self, w: &AffineWeylElement, p: u64) -> Result<Vec<u64>> {
        self.positive
            .iter()
            .map(|&a| self.t_alpha_p(w, a, p))
            .collect()
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem({}, {} roots, h={})",
            self.name(),
            self.roots.len(),
            self.coxeter_number
        )
    }
}

mod enumeration;
mod type_a;

pub use enumeration::enumerate_dominant_p_stable;
pub use type_a::{type_a_element, type_a_root, type_a_window};

#[cfg(test)]
mod tests;
