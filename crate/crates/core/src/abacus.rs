//! Finite encodings of abaci (subsets of Z cofinite below and finite above)
//! and the two classical bijections between n-cores and flush abaci: `alpha`
//! onto balanced abaci and `beta` onto normalised abaci.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::parse::Scanner;
use crate::partition::Partition;
use crate::{Error, Result};

/// An abacus is encoded by its nonnegative beads and its negative gaps; the
/// encoded set is {z < 0 : z not a gap} ∪ pos_beads. The encoding is unique,
/// so derived equality is set equality of the encoded subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    pos_beads: BTreeSet<i64>,
    neg_gaps: BTreeSet<i64>,
}

impl Abacus {
    pub fn new(pos_beads: BTreeSet<i64>, neg_gaps: BTreeSet<i64>) -> Result<Self> {
        if let Some(&b) = pos_beads.iter().find(|&&b| b < 0) {
            return Err(Error::Invariant(format!("positive bead {b} is negative")));
        }
        if let Some(&g) = neg_gaps.iter().find(|&&g| g >= 0) {
            return Err(Error::Invariant(format!("negative gap {g} is nonnegative")));
        }
        Ok(Abacus {
            pos_beads,
            neg_gaps,
        })
    }

    pub fn pos_beads(&self) -> &BTreeSet<i64> {
        &self.pos_beads
    }

    pub fn neg_gaps(&self) -> &BTreeSet<i64> {
        &self.neg_gaps
    }

    /// Membership of z in the encoded subset of Z.
    pub fn contains(&self, z: i64) -> bool {
        if z >= 0 {
            self.pos_beads.contains(&z)
        } else {
            !self.neg_gaps.contains(&z)
        }
    }

    /// Zero is a gap and there are no negative gaps.
    pub fn is_normalised(&self) -> bool {
        self.neg_gaps.is_empty() && !self.pos_beads.contains(&0)
    }

    /// The number of positive beads equals the number of non-positive gaps.
    pub fn is_balanced(&self) -> bool {
        let positive_beads = self.pos_beads.iter().filter(|&&b| b > 0).count();
        let nonpositive_gaps = self.neg_gaps.len() + usize::from(!self.pos_beads.contains(&0));
        positive_beads == nonpositive_gaps
    }

    /// True iff z − n is a bead for every bead z; equivalently g + n is a gap
    /// for every gap g, which needs only finitely many checks.
    pub fn is_flush(&self, n: u64) -> bool {
        assert!(n >= 1);
        let n = n as i64;
        self.pos_beads.iter().all(|&b| self.contains(b - n))
            && self.neg_gaps.iter().all(|&g| !self.contains(g + n))
    }

    /// The abacus {z + d : z in self}; flushness for every modulus is preserved.
    pub fn shift(&self, d: i64) -> Abacus {
        let mut pos_beads: BTreeSet<i64> = self
            .pos_beads
            .iter()
            .map(|&b| b + d)
            .filter(|&b| b >= 0)
            .collect();
        let mut neg_gaps: BTreeSet<i64> = self
            .neg_gaps
            .iter()
            .map(|&g| g + d)
            .filter(|&g| g < 0)
            .collect();
        if d >= 0 {
            // former negative positions that slid up to >= 0
            for z in -d..0 {
                if self.contains(z) && z + d >= 0 {
                    pos_beads.insert(z + d);
                }
            }
        } else {
            // former nonnegative positions that slid below 0
            for z in 0..-d {
                if !self.contains(z) {
                    neg_gaps.insert(z + d);
                }
            }
        }
        Abacus {
            pos_beads,
            neg_gaps,
        }
    }

    /// Pretty-print on n runners: one column per residue class mod n, beads
    /// shown as filled circles. Levels run top-down from the largest relevant
    /// position to just below the smallest gap.
    pub fn runner_diagram(&self, n: u64) -> String {
        let n = n as i64;
        let hi = self.pos_beads.iter().max().copied().unwrap_or(0).max(0) + n;
        let lo = self.neg_gaps.iter().min().copied().unwrap_or(0).min(0) - n;
        let width = hi.to_string().len().max(lo.to_string().len()) + 1;
        let mut out = String::new();
        for level in (lo.div_euclid(n)..=hi.div_euclid(n)).rev() {
            for r in 0..n {
                let z = level * n + r;
                let mark = if self.contains(z) { '*' } else { 'o' };
                out.push_str(&format!("{:>width$}{}", z, mark, width = width));
            }
            out.push('\n');
        }
        out
    }
}

/// alpha(kappa) = {kappa_i + 1 − i : i >= 1}; a balanced abacus, n-flush
/// exactly when kappa is an n-core.
pub fn alpha(kappa: &Partition) -> Abacus {
    let l = kappa.len() as i64;
    let mut pos_beads = BTreeSet::new();
    let mut window = BTreeSet::new();
    for (idx, &part) in kappa.parts().iter().enumerate() {
        let z = part as i64 - idx as i64; // part + 1 - (idx+1)
        window.insert(z);
        if z >= 0 {
            pos_beads.insert(z);
        }
    }
    if kappa.is_empty() {
        pos_beads.insert(0);
    }
    let neg_gaps = (-l + 1..0).filter(|z| !window.contains(z)).collect();
    Abacus {
        pos_beads,
        neg_gaps,
    }
}

/// Inverse of [`alpha`]; defined on balanced abaci.
pub fn alpha_inv(a: &Abacus) -> Result<Partition> {
    if !a.is_balanced() {
        return Err(Error::NotBalanced);
    }
    // With the beads b1 > b2 > ... listed decreasingly, part i is bi + i - 1.
    // Below the smallest gap every position is a bead and the parts are 0, so
    // listing beads down to min(neg_gaps) - 1 is enough.
    let g_min = a.neg_gaps.iter().min().copied().unwrap_or(0);
    let mut beads: Vec<i64> = a.pos_beads.iter().rev().copied().collect();
    let mut z = -1;
    while z >= g_min - 1 {
        if a.contains(z) {
            beads.push(z);
        }
        z -= 1;
    }
    let mut parts = Vec::new();
    for (idx, b) in beads.into_iter().enumerate() {
        let part = b + idx as i64;
        if part <= 0 {
            break;
        }
        parts.push(part as u64);
    }
    Partition::new(parts)
        .map_err(|_| Error::Invariant("balanced abacus did not decode to a partition".into()))
}

/// beta(kappa): the first-column hook lengths together with all negatives;
/// a normalised abacus. Equals alpha(kappa) shifted by len(kappa) − 1; for
/// the empty partition this is the set of negative integers.
pub fn beta(kappa: &Partition) -> Abacus {
    let pos_beads: BTreeSet<i64> = kappa
        .first_column_hooks()
        .into_iter()
        .map(|h| h as i64)
        .collect();
    Abacus {
        pos_beads,
        neg_gaps: BTreeSet::new(),
    }
}

/// Inverse of [`beta`]; defined on normalised abaci.
pub fn beta_inv(a: &Abacus) -> Result<Partition> {
    if !a.is_normalised() {
        return Err(Error::NotNormalised);
    }
    let hooks: BTreeSet<u64> = a.pos_beads.iter().map(|&b| b as u64).collect();
    Partition::from_first_column_hooks(&hooks)
        .map_err(|_| Error::Invariant("normalised abacus did not decode to a partition".into()))
}

impl fmt::Display for Abacus {
    /// Text form: `beads:{...};gaps:{...}` with sorted integer lists.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |set: &BTreeSet<i64>| {
            set.iter()
                .map(|z| z.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "beads:{{{}}};gaps:{{{}}}",
            join(&self.pos_beads),
            join(&self.neg_gaps)
        )
    }
}

impl fmt::Debug for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Abacus({self})")
    }
}

impl FromStr for Abacus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sc = Scanner::new(s.trim());
        sc.expect("beads:{")?;
        let beads = sc.int_list_until("}")?;
        sc.expect("}")?;
        sc.expect(";gaps:{")?;
        let gaps = sc.int_list_until("}")?;
        sc.expect("}")?;
        sc.finish()?;
        Abacus::new(beads.into_iter().collect(), gaps.into_iter().collect()).map_err(|e| {
            Error::Parse {
                pos: 0,
                msg: e.to_string(),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn fig_core() -> Partition {
        p(&[19, 13, 7, 6, 5, 5, 4, 3, 2, 2, 2, 2, 1])
    }

    #[test]
    fn alpha_examples() {
        let a = alpha(&Partition::empty());
        assert_eq!(a.pos_beads().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert!(a.neg_gaps().is_empty());
        assert!(a.is_balanced());
        assert!(a.is_flush(1));
        assert!(a.is_flush(13));

        let a1 = alpha(&p(&[1]));
        assert_eq!(a1.pos_beads().iter().copied().collect::<Vec<_>>(), vec![1]);
        assert!(a1.neg_gaps().is_empty());
        assert!(a1.is_balanced());

        let ak = alpha(&fig_core());
        assert_eq!(
            ak.pos_beads().iter().copied().collect::<Vec<_>>(),
            vec![0, 1, 3, 5, 12, 19]
        );
        assert_eq!(
            ak.neg_gaps().iter().copied().collect::<Vec<_>>(),
            vec![-12, -10, -5, -3, -1]
        );
        assert!(ak.is_balanced());
        assert!(ak.is_flush(7));
        assert!(ak.is_flush(16));
        assert!(!ak.is_flush(3));
    }

    #[test]
    fn beta_examples() {
        let b = beta(&Partition::empty());
        assert!(b.pos_beads().is_empty());
        assert!(b.neg_gaps().is_empty());
        assert!(b.is_normalised());

        assert_eq!(
            beta(&p(&[1]))
                .pos_beads()
                .iter()
                .copied()
                .collect::<Vec<_>>(),
            vec![1]
        );

        let bk = beta(&fig_core());
        assert_eq!(
            bk.pos_beads().iter().copied().collect::<Vec<_>>(),
            vec![1, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 24, 31]
        );
        assert!(bk.is_normalised());
        assert!(bk.is_flush(7));
        assert!(bk.is_flush(16));
    }

    #[test]
    fn shift_relates_alpha_and_beta() {
        let k = fig_core();
        let a = alpha(&k);
        assert_eq!(a.shift(0), a);
        assert_eq!(a.shift(12), beta(&k));
        assert_eq!(a.shift(3).shift(-3), a);
        assert_eq!(beta(&k).shift(-12), a);
        for lam in partitions_up_to(9) {
            let l = lam.len() as i64;
            assert_eq!(alpha(&lam).shift(l - 1), beta(&lam), "partition {lam}");
        }
    }

    #[test]
    fn flushness_is_shift_invariant() {
        let a = alpha(&fig_core());
        for d in [-5, -1, 0, 1, 4, 20] {
            for n in [2u64, 3, 7, 16] {
                assert_eq!(a.shift(d).is_flush(n), a.is_flush(n));
            }
        }
    }

    #[test]
    fn non_flush_example() {
        let a = Abacus::new([0, 2].into_iter().collect(), [-2].into_iter().collect()).unwrap();
        assert!(!a.is_flush(2));
    }

    #[test]
    fn round_trips() {
        for lam in partitions_up_to(10) {
            assert_eq!(alpha_inv(&alpha(&lam)).unwrap(), lam);
            assert_eq!(beta_inv(&beta(&lam)).unwrap(), lam);
        }
        assert_eq!(alpha_inv(&alpha(&fig_core())).unwrap(), fig_core());
        assert_eq!(beta_inv(&beta(&fig_core())).unwrap(), fig_core());
    }

    #[test]
    fn inverse_preconditions() {
        let not_balanced = Abacus::new([1, 2].into_iter().collect(), BTreeSet::new()).unwrap();
        assert!(!not_balanced.is_balanced());
        assert_eq!(alpha_inv(&not_balanced), Err(Error::NotBalanced));
        // a lone positive bead balances against the gap at zero
        let shifted = Abacus::new([5].into_iter().collect(), BTreeSet::new()).unwrap();
        assert!(shifted.is_balanced());
        assert_eq!(alpha_inv(&shifted).unwrap(), p(&[5]));
        let not_normalised = Abacus::new([0].into_iter().collect(), BTreeSet::new()).unwrap();
        assert_eq!(beta_inv(&not_normalised), Err(Error::NotNormalised));
    }

    #[test]
    fn text_round_trip() {
        let a = alpha(&fig_core());
        let s = a.to_string();
        assert_eq!(s, "beads:{0,1,3,5,12,19};gaps:{-12,-10,-5,-3,-1}");
        assert_eq!(s.parse::<Abacus>().unwrap(), a);
        assert_eq!(
            "beads:{};gaps:{}".parse::<Abacus>().unwrap(),
            beta(&Partition::empty())
        );
        assert!(matches!(
            "beads:{1,x};gaps:{}".parse::<Abacus>(),
            Err(Error::Parse { .. })
        ));
    }
}
