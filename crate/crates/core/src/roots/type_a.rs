//! Exact bridge between window notation and the rank n−1 root system of
//! type A: the ambient coordinates e_i − e_j translate to interval vectors
//! in simple-root coordinates, and sum-zero translation vectors to partial
//! sums in simple-coroot coordinates.

use super::{AffineWeylElement, Mat, RootSystem, SystemType, WeylElement};
use crate::affine::AffinePermutation;
use crate::{Error, Result};

fn require_type_a(rs: &RootSystem, n: usize) -> Result<()> {
    if rs.label() != SystemType::A || rs.rank() + 1 != n {
        return Err(Error::UnsupportedSystem(format!(
            "expected A{} for period {n}, got {}",
            n - 1,
            rs.name()
        )));
    }
    Ok(())
}

/// The root e_i − e_j (i != j, 1-based) as a root index.
pub fn type_a_root(rs: &RootSystem, i: usize, j: usize) -> Result<usize> {
    let n = rs.rank() + 1;
    if rs.label() != SystemType::A || i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::UnsupportedSystem(format!(
            "no root e_{i} - e_{j} in {}",
            rs.name()
        )));
    }
    let mut coords = vec![0i64; rs.rank()];
    let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
    for c in coords.iter_mut().take(hi - 1).skip(lo - 1) {
        *c = sign;
    }
    rs.root_index_of(&coords)
        .ok_or_else(|| Error::Invariant("interval vector is not a root".into()))
}

/// Finite permutation of 1..n -> Weyl element of A_{n-1}, acting on the
/// ambient space by permuting coordinates.
fn weyl_from_perm(rs: &RootSystem, images: &[usize]) -> WeylElement {
    let rank = rs.rank();
    let n = rank + 1;
    // root coordinates of e_a − e_b as a column
    let interval = |a: usize, b: usize| -> Vec<i64> {
        let mut v = vec![0i64; rank];
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for x in v.iter_mut().take(hi - 1).skip(lo - 1) {
            *x = sign;
        }
        v
    };
    let build = |imgs: &[usize]| -> Mat {
        let mut m = Mat::identity(rank);
        for j in 0..rank {
            let col = interval(imgs[j], imgs[j + 1]);
            for r in 0..rank {
                m.set(r, j, col[r]);
            }
        }
        m
    };
    let mut inv_images = vec![0usize; n];
    for (i, &v) in images.iter().enumerate() {
        inv_images[v - 1] = i + 1;
    }
    let mat = build(images);
    let inv_mat = build(&inv_images);
    // type A is simply laced: root and coroot coordinates transform alike
    let mut el = WeylElement {
        root_mat: mat.clone(),
        coroot_mat: mat.clone(),
        inv_root_mat: inv_mat.clone(),
        inv_coroot_mat: inv_mat,
        word: Vec::new(),
    };
    // witness word by adjacent-transposition sorting
    let mut work: Vec<usize> = images.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..n - 1 {
            if work[i] > work[i + 1] {
                work.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    el.word = word;
    el
}

/// Embeds a window-notation affine permutation as t_q s over A_{n-1}.
pub fn type_a_element(rs: &RootSystem, w: &AffinePermutation) -> Result<AffineWeylElement> {
    require_type_a(rs, w.n())?;
    let (sigma, mu, _) = w.decompose();
    // partial sums convert the sum-zero ambient vector to coroot coordinates
    let mut q = Vec::with_capacity(rs.rank());
    let mut acc = 0i64;
    for &m in mu.iter().take(rs.rank()) {
        acc += m;
        q.push(acc);
    }
    Ok(AffineWeylElement {
        q,
        s: weyl_from_perm(rs, sigma.images()),
    })
}

/// Recovers the window of t_q s over A_{n-1}.
pub fn type_a_window(rs: &RootSystem, el: &AffineWeylElement) -> Result<AffinePermutation> {
    let rank = rs.rank();
    let n = rank + 1;
    if rs.label() != SystemType::A {
        return Err(Error::UnsupportedSystem(rs.name()));
    }
    // ambient sum-zero vector from coroot coordinates
    let mut mu = vec![0i64; n];
    mu[0] = el.q.first().copied().unwrap_or(0);
    for j in 1..rank {
        mu[j] = el.q[j] - el.q[j - 1];
    }
    if rank >= 1 {
        mu[n - 1] = -el.q[rank - 1];
    }
    // permutation from the images of the simple roots
    let mut images = vec![0usize; n];
    let mut prev_b: Option<usize> = None;
    for j in 0..rank {
        let col: Vec<i64> = {
            let mut e = vec![0i64; rank];
            e[j] = 1;
            el.s.root_mat.apply(&e)
        };
        // expand to the ambient difference vector
        let mut amb = vec![0i64; n];
        for (i, &c) in col.iter().enumerate() {
            amb[i] += c;
            amb[i + 1] -= c;
        }
        let a = amb.iter().position(|&x| x == 1).ok_or_else(|| {
            Error::Invariant("simple-root image is not an ambient difference".into())
        })? + 1;
        let b = amb
            .iter()
            .position(|&x| x == -1)
            .expect("difference vector")
            + 1;
        if let Some(pb) = prev_b {
            if pb != a {
                return Err(Error::Invariant("inconsistent permutation chain".into()));
            }
        }
        images[j] = a;
        images[j + 1] = b;
        prev_b = Some(b);
    }
    if rank == 0 {
        images[0] = 1;
    }
    let window: Vec<i64> = (1..=n)
        .map(|i| {
            let s_i = images[i - 1];
            mu[s_i - 1] * n as i64 + s_i as i64
        })
        .collect();
    AffinePermutation::new(window)
}
