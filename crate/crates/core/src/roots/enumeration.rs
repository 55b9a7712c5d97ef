//! Exhaustive enumeration of the dominant p-stable affine Weyl group
//! elements.
//!
//! An element w is p-stable exactly when every affine root of height p is
//! positive on the alcove of w^{-1}, i.e. when w^{-1}(A) lies in the convex
//! region cut out by the finitely many height-p affine root hyperplanes.
//! That region is a union of alcoves of the affine arrangement, so the
//! alcoves inside it are gallery-connected and a breadth-first search from
//! the fundamental alcove visits each exactly once: explore u -> u * s for
//! the r + 1 simple affine reflections, keeping u iff u^{-1} is p-stable.
//! Dominance of u^{-1} is then a filter on the visited set.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{BuildHasherDefault, Hasher};

use super::{AffineRoot, AffineWeylElement, Mat, RootSystem, WeylElement};
use crate::{gcd, Error, Result};

/// Multiplicative mixer for the packed alcove keys on the hot path.
#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("only u128 keys are hashed");
    }

    fn write_u128(&mut self, key: u128) {
        let lo = key as u64;
        let hi = (key >> 64) as u64;
        let mut x = lo ^ hi.rotate_left(32) ^ 0x9e37_79b9_7f4a_7c15;
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.0 = x ^ (x >> 31) ^ hi;
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type KeySet = HashSet<u128, BuildHasherDefault<KeyHasher>>;

const MAX_WEYL_ORDER: u128 = 400_000;
const MAX_REGION_ALCOVES: u128 = 100_000_000;

/// Finite Weyl group closure with the lookup tables used by the alcove walk.
struct WeylTable {
    rank: usize,
    size: usize,
    /// Coroot-coordinate action, one rank x rank block per element.
    coroot_mats: Vec<i32>,
    /// BFS tree: parent element and generator used to reach each element.
    parent: Vec<u32>,
    gen: Vec<u8>,
    inv: Vec<u32>,
    /// rmult[g][w] = index of w * s_g for the finite simple reflections.
    rmult: Vec<Vec<u32>>,
    /// Index of w * (reflection in the highest root).
    rmult_high: Vec<u32>,
    /// w acting on the highest coroot, one rank-vector per element.
    salpha: Vec<i32>,
    /// act[r][w] = index of w . root for each tracked root r.
    act: Vec<Vec<u32>>,
    /// Position of each tracked root in `act`.
    tracked: HashMap<usize, usize>,
}

impl WeylTable {
    fn build(rs: &RootSystem, tracked_roots: &[usize]) -> Result<WeylTable> {
        if rs.weyl_order() > MAX_WEYL_ORDER {
            return Err(Error::UnsupportedSystem(format!(
                "{} has Weyl group order {}, too large for enumeration",
                rs.name(),
                rs.weyl_order()
            )));
        }
        let rank = rs.rank();
        let mut mats: Vec<Mat> = vec![Mat::identity(rank)];
        let mut coroot: Vec<Mat> = vec![Mat::identity(rank)];
        let mut index: HashMap<Mat, u32> = HashMap::new();
        index.insert(Mat::identity(rank), 0);
        let mut parent = vec![0u32];
        let mut gen = vec![u8::MAX];
        let mut head = 0usize;
        while head < mats.len() {
            let w = head;
            head += 1;
            for g in 0..rank {
                let m = mats[w].mul(&rs.simple_refl[g].root_mat);
                if !index.contains_key(&m) {
                    index.insert(m.clone(), mats.len() as u32);
                    mats.push(m);
                    coroot.push(coroot[w].mul(&rs.simple_refl[g].coroot_mat));
                    parent.push(w as u32);
                    gen.push(g as u8);
                }
            }
        }
        let size = mats.len();
        if size as u128 != rs.weyl_order() {
            return Err(Error::Invariant(format!(
                "generated {} Weyl elements, expected {}",
                size,
                rs.weyl_order()
            )));
        }
        let mut rmult: Vec<Vec<u32>> = vec![vec![0u32; size]; rank];
        for g in 0..rank {
            for w in 0..size {
                let m = mats[w].mul(&rs.simple_refl[g].root_mat);
                rmult[g][w] = index[&m];
            }
        }

        // inverses by walking the reversed tree word
        let mut inv = vec![0u32; size];
        for w in 0..size {
            let mut word = Vec::new();
            let mut cur = w as u32;
            while cur != 0 {
                word.push(gen[cur as usize]);
                cur = parent[cur as usize];
            }
            // word holds the tree word reversed already (leaf to root)
            let mut acc = 0u32;
            for &g in &word {
                acc = rmult[g as usize][acc as usize];
            }
            inv[w] = acc;
        }

        // right multiplication by the highest-root reflection
        let high = &rs.highest_refl.root_mat;
        let mut rmult_high = vec![0u32; size];
        for w in 0..size {
            rmult_high[w] = index[&mats[w].mul(high)];
        }

        // coroot matrices flattened, plus the action on the highest coroot
        let mut coroot_mats = vec![0i32; size * rank * rank];
        let mut salpha = vec![0i32; size * rank];
        for w in 0..size {
            for i in 0..rank {
                for j in 0..rank {
                    let v = coroot[w].get(i, j);
                    coroot_mats[w * rank * rank + i * rank + j] =
                        i32::try_from(v).expect("coroot entry fits i32");
                }
            }
            let img = coroot[w].apply(rs.highest_coroot());
            for i in 0..rank {
                salpha[w * rank + i] = i32::try_from(img[i]).expect("fits i32");
            }
        }

        // tracked root actions
        let mut tracked = HashMap::new();
        let mut act = Vec::with_capacity(tracked_roots.len());
        for (pos, &root) in tracked_roots.iter().enumerate() {
            tracked.insert(root, pos);
            let mut row = vec![0u32; size];
            for (w, mat) in mats.iter().enumerate() {
                let img = mat.apply(rs.root_coords(root));
                row[w] = rs.root_index_of(&img).expect("root image is a root") as u32;
            }
            act.push(row);
        }

        Ok(WeylTable {
            rank,
            size,
            coroot_mats,
            parent,
            gen,
            inv,
            rmult,
            rmult_high,
            salpha,
            act,
            tracked,
        })
    }

    fn apply_coroot(&self, w: usize, q: &[i64], out: &mut [i64]) {
        let r = self.rank;
        let base = w * r * r;
        for i in 0..r {
            let mut acc = 0i64;
            for j in 0..r {
                acc += self.coroot_mats[base + i * r + j] as i64 * q[j];
            }
            out[i] = acc;
        }
    }

    fn act_root(&self, w: usize, root: usize) -> usize {
        self.act[self.tracked[&root]][w] as usize
    }

    /// Rebuilds the full Weyl element for table index `w`.
    fn materialise(&self, rs: &RootSystem, w: usize) -> WeylElement {
        let mut word = Vec::new();
        let mut cur = w;
        while cur != 0 {
            word.push(self.gen[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        word.reverse();
        let mut el = WeylElement::identity(self.rank);
        for &g in &word {
            el = el.multiply(&rs.simple_refl[g]);
        }
        el
    }
}

/// Packs (q, s index) into a u128 BFS key.
struct Packer {
    rank: usize,
    bits: u32,
    offset: i64,
}

impl Packer {
    fn new(rank: usize) -> Packer {
        let bits = ((128 - 24) / rank as u32).min(20);
        Packer {
            rank,
            bits,
            offset: 1 << (bits - 1),
        }
    }

    fn pack(&self, q: &[i64], s: u32) -> Result<u128> {
        let mut key: u128 = 0;
        for (i, &qi) in q.iter().enumerate() {
            let shifted = qi + self.offset;
            if shifted < 0 || shifted >= (1 << self.bits) {
                return Err(Error::Invariant(format!(
                    "translation coordinate {qi} exceeds the packing range"
                )));
            }
            key |= (shifted as u128) << (self.bits * i as u32);
        }
        key |= (s as u128) << (self.bits * self.rank as u32);
        Ok(key)
    }

    fn unpack(&self, key: u128) -> (Vec<i64>, u32) {
        let mask = (1u128 << self.bits) - 1;
        let q = (0..self.rank)
            .map(|i| ((key >> (self.bits * i as u32)) & mask) as i64 - self.offset)
            .collect();
        let s = (key >> (self.bits * self.rank as u32)) as u32;
        (q, s)
    }
}

/// Enumerates every dominant p-stable element of the affine Weyl group,
/// each exactly once, in a deterministic breadth-first order.
pub fn enumerate_dominant_p_stable(rs: &RootSystem, p: u64) -> Result<Vec<AffineWeylElement>> {
    let h = rs.coxeter_number() as u64;
    if gcd(p, h) != 1 {
        return Err(Error::NotCoprime { n: h, p });
    }
    let rank = rs.rank();
    let region_alcoves = (p as u128).pow(rank as u32);
    if region_alcoves > MAX_REGION_ALCOVES {
        return Err(Error::InvalidParams(format!(
            "stable region of {} for p = {p} has {region_alcoves} alcoves",
            rs.name()
        )));
    }
    let cap = region_alcoves + region_alcoves / 16 + 10_000;

    let base: Vec<AffineRoot> = rs.affine_roots_of_height(p as i64);
    let mut tracked_roots: Vec<usize> = rs.positive_roots().to_vec();
    for rho in &base {
        if !tracked_roots.contains(&rho.root) {
            tracked_roots.push(rho.root);
        }
    }
    let table = WeylTable::build(rs, &tracked_roots)?;
    let pairing_rows: Vec<Vec<i64>> = (0..rs.num_roots()).map(|a| rs.pairing[a].clone()).collect();
    let heights: Vec<i64> = (0..rs.num_roots()).map(|a| rs.height(a)).collect();
    let hh = rs.coxeter_number();

    // u^{-1} = t_{q'} s' with s' = s^{-1}, q' = -(s^{-1} . q)
    let mut q_inv = vec![0i64; rank];
    let stable = |q: &[i64], s: usize, q_inv: &mut [i64]| -> bool {
        let s_inv = table.inv[s] as usize;
        table.apply_coroot(s_inv, q, q_inv);
        for x in q_inv.iter_mut() {
            *x = -*x;
        }
        base.iter().all(|rho| {
            let img = table.act_root(s_inv, rho.root);
            let k = rho.k
                - pairing_rows[img]
                    .iter()
                    .zip(q_inv.iter())
                    .map(|(a, b)| a * b)
                    .sum::<i64>();
            heights[img] + k * hh > 0
        })
    };

    let packer = Packer::new(rank);
    let mut visited: KeySet = KeySet::default();
    let mut queue: VecDeque<u128> = VecDeque::new();
    let origin = packer.pack(&vec![0i64; rank], 0)?;
    assert!(
        stable(&vec![0i64; rank], 0, &mut q_inv),
        "identity must be stable"
    );
    visited.insert(origin);
    queue.push_back(origin);

    let mut out = Vec::new();
    let mut scratch_q = vec![0i64; rank];
    while let Some(key) = queue.pop_front() {
        let (q, s) = packer.unpack(key);
        let s = s as usize;

        // dominance filter on u^{-1} = t_{q'} s'
        let s_inv = table.inv[s] as usize;
        table.apply_coroot(s_inv, &q, &mut q_inv);
        for x in q_inv.iter_mut() {
            *x = -*x;
        }
        let dominant = rs.positive_roots().iter().all(|&a| {
            let pre = table.act_root(s, a);
            let pairing: i64 = pairing_rows[a]
                .iter()
                .zip(q_inv.iter())
                .map(|(x, y)| x * y)
                .sum();
            pairing - i64::from(heights[pre] < 0) >= 0
        });
        if dominant {
            out.push(AffineWeylElement {
                q: q_inv.clone(),
                s: table.materialise(rs, s_inv),
            });
        }

        // neighbours: right multiplication by the simple affine reflections
        for g in 0..=rank {
            let (nq, ns): (&[i64], usize) = if g < rank {
                (&q, table.rmult[g][s] as usize)
            } else {
                let base_off = s * rank;
                for i in 0..rank {
                    scratch_q[i] = q[i] + table.salpha[base_off + i] as i64;
                }
                (&scratch_q, table.rmult_high[s] as usize)
            };
            let key = packer.pack(nq, ns as u32)?;
            if !visited.contains(&key) && stable(nq, ns, &mut q_inv) {
                if visited.len() as u128 >= cap {
                    return Err(Error::Invariant(format!(
                        "stable-region walk for {} p={p} exceeded {cap} alcoves",
                        rs.name()
                    )));
                }
                visited.insert(key);
                queue.push_back(key);
            }
        }
    }
    debug_assert_eq!(table.size as u128, rs.weyl_order());
    Ok(out)
}
