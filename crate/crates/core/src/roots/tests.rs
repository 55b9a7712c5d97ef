use super::*;
use crate::affine::AffinePermutation;
use crate::rational_catalan;
use crate::roots::{enumerate_dominant_p_stable, type_a_element, type_a_root, type_a_window};

fn build(label: SystemType, rank: usize) -> RootSystem {
    RootSystem::build(label, rank).unwrap()
}

/// Materialises the whole finite Weyl group by closure.
fn weyl_group(rs: &RootSystem) -> Vec<WeylElement> {
    let mut out = vec![WeylElement::identity(rs.rank())];
    let mut seen: std::collections::HashSet<Mat> = [out[0].root_mat.clone()].into_iter().collect();
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for refl in &rs.simple_refl {
            let next = w.multiply(refl);
            if seen.insert(next.root_mat.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// Brute-force enumeration over a (q, s) grid; an independent oracle for the
/// alcove walk at small scale.
fn brute_force_dominant_p_stable(rs: &RootSystem, p: u64, bound: i64) -> Vec<AffineWeylElement> {
    let rank = rs.rank();
    let mut out = Vec::new();
    let mut q = vec![-bound; rank];
    'outer: loop {
        for s in weyl_group(rs) {
            let el = AffineWeylElement { q: q.clone(), s };
            if rs.is_dominant(&el) && rs.is_p_stable(&el, p).unwrap() {
                out.push(el);
            }
        }
        for i in 0..rank {
            if q[i] < bound {
                q[i] += 1;
                continue 'outer;
            }
            q[i] = -bound;
        }
        break;
    }
    out
}

#[test]
fn build_examples() {
    let a2 = build(SystemType::A, 2);
    assert_eq!(a2.positive_roots().len(), 3);
    assert_eq!(a2.coxeter_number(), 3);
    let g2 = build(SystemType::G, 2);
    assert_eq!(g2.positive_roots().len(), 6);
    assert_eq!(g2.coxeter_number(), 6);
    let b3 = build(SystemType::B, 3);
    assert_eq!(b3.positive_roots().len(), 9);
    assert_eq!(b3.coxeter_number(), 6);
    let c3 = build(SystemType::C, 3);
    assert_eq!(c3.positive_roots().len(), 9);
    assert_eq!(c3.coxeter_number(), 6);
    let d4 = build(SystemType::D, 4);
    assert_eq!(d4.positive_roots().len(), 12);
    assert_eq!(d4.coxeter_number(), 6);
    assert_eq!(d4.weyl_order(), 192);
    assert!(RootSystem::build(SystemType::G, 3).is_err());
    assert!(RootSystem::build(SystemType::D, 2).is_err());
    assert!(RootSystem::build(SystemType::A, 9).is_err());
}

#[test]
fn heights_and_highest_root() {
    for (label, rank) in [
        (SystemType::A, 3),
        (SystemType::B, 2),
        (SystemType::C, 3),
        (SystemType::D, 4),
        (SystemType::G, 2),
    ] {
        let rs = build(label, rank);
        let h = rs.coxeter_number();
        assert_eq!(rs.height(rs.highest_root()), h - 1);
        // every root height lies in [-(h-1), h-1] and is nonzero
        for a in 0..rs.num_roots() {
            let ht = rs.height(a);
            assert!(ht != 0 && ht.abs() < h);
        }
        // number of roots of height 1 equals the rank
        let simples = (0..rs.num_roots()).filter(|&a| rs.height(a) == 1).count();
        assert_eq!(simples, rank);
    }
}

#[test]
fn affine_action_is_a_group_action() {
    let rs = build(SystemType::B, 2);
    let s0 = rs.affine_reflection();
    let s1 = rs.simple_reflection(0);
    let s2 = rs.simple_reflection(1);
    let w = s0.compose(&s1).compose(&s2).compose(&s0);
    let v = s2.compose(&s0).compose(&s1);
    let wv = w.compose(&v);
    for root in 0..rs.num_roots() {
        for k in -3..=3 {
            let rho = AffineRoot { root, k };
            assert_eq!(rs.act(&wv, rho), rs.act(&w, rs.act(&v, rho)));
            // identities act trivially
            let id = AffineWeylElement::identity(rs.rank());
            assert_eq!(rs.act(&id, rho), rho);
        }
    }
    // inverse undoes the action
    for root in 0..rs.num_roots() {
        let rho = AffineRoot { root, k: 2 };
        assert_eq!(rs.act(&w.inverse(), rs.act(&w, rho)), rho);
    }
}

#[test]
fn translations_shift_the_delta_coefficient() {
    let rs = build(SystemType::A, 2);
    // q with <a, q> = 1 for the first simple root: the fundamental coweight
    // is not in the coroot lattice, so use q = a^v itself: <a, a^v> = 2
    let q = vec![1i64, 0];
    let t = AffineWeylElement::translation(q.clone());
    let a0 = rs.root_index_of(&[1, 0]).unwrap();
    let pairing = rs.pair(a0, &q);
    assert_eq!(pairing, 2);
    for k in -2..=2 {
        let img = rs.act(&t, AffineRoot { root: a0, k });
        assert_eq!(img.root, a0);
        assert_eq!(img.k, k - 2);
    }
}

#[test]
fn shi_coordinates_and_dominance() {
    let rs = build(SystemType::A, 2);
    let id = AffineWeylElement::identity(2);
    assert!(rs.is_dominant(&id));
    assert!(rs.shi_coordinates(&id).iter().all(|&(_, k)| k == 0));
    // translation by the highest coroot: <a~, a~^v> = 2 and all other
    // coordinates stay nonnegative, so the element is dominant
    let t = AffineWeylElement::translation(rs.highest_coroot().to_vec());
    assert!(rs.is_dominant(&t));
    let top = rs.highest_root();
    let coords = rs.shi_coordinates(&t);
    assert_eq!(coords.iter().find(|&&(a, _)| a == top).unwrap().1, 2);
    // translation by a simple coroot pairs to -1 against the other simple
    // root, hence is not dominant in rank two
    let t_simple = AffineWeylElement::translation(vec![1, 0]);
    assert!(!rs.is_dominant(&t_simple));
    let a0 = rs.root_index_of(&[1, 0]).unwrap();
    let simple_coords = rs.shi_coordinates(&t_simple);
    assert_eq!(simple_coords.iter().find(|&&(a, _)| a == a0).unwrap().1, 2);
    // a bare reflection is never dominant
    for i in 0..rs.rank() {
        assert!(!rs.is_dominant(&rs.simple_reflection(i)));
    }
}

#[test]
fn lemma_dominant_pairing_zero_forces_positive_preimage() {
    let rs = build(SystemType::B, 2);
    for el in enumerate_dominant_p_stable(&rs, 3).unwrap() {
        for &a in rs.positive_roots() {
            if rs.pair(a, el.translation_part()) == 0 {
                let pre = rs.act_on_root(&el.finite_part().inverse(), a);
                assert!(rs.is_positive_root(pre));
            }
        }
    }
}

#[test]
fn k_alpha_matches_counting_oracle() {
    for (label, rank, p) in [
        (SystemType::A, 2, 4u64),
        (SystemType::B, 2, 3),
        (SystemType::G, 2, 5),
    ] {
        let rs = build(label, rank);
        for el in enumerate_dominant_p_stable(&rs, p).unwrap() {
            for &a in rs.positive_roots() {
                assert_eq!(rs.k_alpha(&el, a), rs.k_alpha_counting(&el, a));
                // and |Shi coordinate| agrees
                let coords = rs.shi_coordinates(&el);
                let shi = coords.iter().find(|&&(x, _)| x == a).unwrap().1;
                assert_eq!(rs.k_alpha(&el, a), shi.unsigned_abs());
            }
        }
    }
    // also on assorted non-dominant elements
    let rs = build(SystemType::A, 2);
    let s0 = rs.affine_reflection();
    let s1 = rs.simple_reflection(0);
    let mix = s1.compose(&s0).compose(&s1).compose(&s0);
    for &a in rs.positive_roots() {
        assert_eq!(rs.k_alpha(&mix, a), rs.k_alpha_counting(&mix, a));
    }
}

#[test]
fn identity_is_p_stable_and_flat() {
    for (label, rank) in [(SystemType::A, 3), (SystemType::B, 3), (SystemType::G, 2)] {
        let rs = build(label, rank);
        let id = AffineWeylElement::identity(rank);
        let h = rs.coxeter_number() as u64;
        for p in 1..3 * h {
            if crate::gcd(p, h) != 1 {
                assert!(rs.is_p_stable(&id, p).is_err());
                continue;
            }
            assert!(rs.is_p_stable(&id, p).unwrap());
            for &a in rs.positive_roots() {
                assert_eq!(rs.t_alpha_p(&id, a, p).unwrap(), 0);
            }
        }
    }
}

#[test]
fn rank_one_stable_elements() {
    let rs = build(SystemType::A, 1);
    // t_{a^v} is not 3-stable; t_{a^v} s_a is
    let t = AffineWeylElement::translation(vec![1]);
    assert!(!rs.is_p_stable(&t, 3).unwrap());
    let refl = rs.simple_reflection(0);
    let el = t.compose(&refl);
    assert!(rs.is_p_stable(&el, 3).unwrap());
    assert!(rs.is_dominant(&el));
    let a = rs.positive_roots()[0];
    assert_eq!(rs.t_alpha_p(&el, a, 3).unwrap(), 1);
    let all = enumerate_dominant_p_stable(&rs, 3).unwrap();
    assert_eq!(all.len(), 2);
}

#[test]
fn enumeration_counts() {
    // p = 1 gives exactly the identity
    for (label, rank) in [
        (SystemType::A, 1),
        (SystemType::A, 3),
        (SystemType::B, 2),
        (SystemType::C, 3),
        (SystemType::D, 4),
        (SystemType::G, 2),
    ] {
        let rs = build(label, rank);
        let one = enumerate_dominant_p_stable(&rs, 1).unwrap();
        assert_eq!(one.len(), 1, "{}", rs.name());
        assert!(one[0].is_translation() && one[0].translation_part().iter().all(|&x| x == 0));
    }
    // type A counts match the rational Catalan numbers
    let a2 = build(SystemType::A, 2);
    assert_eq!(
        enumerate_dominant_p_stable(&a2, 4).unwrap().len() as u128,
        rational_catalan(3, 4)
    );
    assert_eq!(
        enumerate_dominant_p_stable(&a2, 5).unwrap().len() as u128,
        rational_catalan(3, 5)
    );
    let a3 = build(SystemType::A, 3);
    assert_eq!(
        enumerate_dominant_p_stable(&a3, 5).unwrap().len() as u128,
        rational_catalan(4, 5)
    );
}

#[test]
fn enumeration_matches_brute_force() {
    use std::collections::HashSet;
    for (label, rank, p, bound) in [
        (SystemType::A, 2, 4u64, 6i64),
        (SystemType::B, 2, 3, 5),
        (SystemType::G, 2, 5, 5),
    ] {
        let rs = build(label, rank);
        let walked: HashSet<AffineWeylElement> = enumerate_dominant_p_stable(&rs, p)
            .unwrap()
            .into_iter()
            .collect();
        let brute: HashSet<AffineWeylElement> = brute_force_dominant_p_stable(&rs, p, bound)
            .into_iter()
            .collect();
        assert_eq!(walked, brute, "{} p={p}", rs.name());
    }
    // hand count for B2, p = 3
    let b2 = build(SystemType::B, 2);
    assert_eq!(enumerate_dominant_p_stable(&b2, 3).unwrap().len(), 3);
}

#[test]
fn length_matches_alcove_walk_distance() {
    use std::collections::HashMap;
    // breadth-first word length over the affine generators is an
    // independent oracle for the inversion-count length
    for (label, rank) in [(SystemType::A, 2), (SystemType::B, 2), (SystemType::G, 2)] {
        let rs = build(label, rank);
        let gens: Vec<AffineWeylElement> = (0..rank)
            .map(|i| rs.simple_reflection(i))
            .chain([rs.affine_reflection()])
            .collect();
        let mut dist: HashMap<AffineWeylElement, u64> = [(AffineWeylElement::identity(rank), 0)]
            .into_iter()
            .collect();
        let mut frontier = vec![AffineWeylElement::identity(rank)];
        for d in 1..=5u64 {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let v = w.compose(g);
                    if !dist.contains_key(&v) {
                        dist.insert(v.clone(), d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        for (w, d) in &dist {
            assert_eq!(rs.length(w), *d, "{} at distance {d}", rs.name());
        }
    }
    // and against the window-calculus length in type A
    let rs = build(SystemType::A, 6);
    let w: AffinePermutation = "[-2,15,-1,16,-14,10,4]".parse().unwrap();
    let el = type_a_element(&rs, &w).unwrap();
    assert_eq!(rs.length(&el), 37);
    assert_eq!(rs.length(&el), w.length());
}

#[test]
fn type_a_embedding_consistency() {
    let rs = build(SystemType::A, 6);
    let w: AffinePermutation = "[-2,15,-1,16,-14,10,4]".parse().unwrap();
    let el = type_a_element(&rs, &w).unwrap();
    assert!(rs.is_dominant(&el));
    assert!(rs.is_p_stable(&el, 16).unwrap());
    let k = w.inversion_table();
    let shi = w.shi_tableau(16).unwrap();
    for i in 1..=6 {
        for j in i + 1..=7 {
            let a = type_a_root(&rs, i, j).unwrap();
            assert_eq!(rs.k_alpha(&el, a), k.get(i, j), "k at ({i},{j})");
            assert_eq!(
                rs.t_alpha_p(&el, a, 16).unwrap(),
                shi.get(i, j),
                "t at ({i},{j})"
            );
        }
    }
    assert_eq!(type_a_window(&rs, &el).unwrap(), w);
    // window route and root route agree on stability for other moduli
    for p in [2u64, 3, 5, 9, 11] {
        assert_eq!(rs.is_p_stable(&el, p).unwrap(), w.is_p_stable(p), "p = {p}");
    }
}

#[test]
fn equal_inversion_tables_in_rank_two() {
    let rs = build(SystemType::A, 2);
    let w1: AffinePermutation = "[0,1,5]".parse().unwrap();
    let w2: AffinePermutation = "[-1,3,4]".parse().unwrap();
    let e1 = type_a_element(&rs, &w1).unwrap();
    let e2 = type_a_element(&rs, &w2).unwrap();
    for &a in rs.positive_roots() {
        assert_eq!(rs.k_alpha(&e1, a), rs.k_alpha(&e2, a));
    }
    assert_ne!(e1, e2);
}

#[test]
fn element_json_round_trip() {
    let rs = build(SystemType::B, 2);
    for el in enumerate_dominant_p_stable(&rs, 5).unwrap() {
        let json = el.to_json();
        let back = AffineWeylElement::from_json(&rs, &json).unwrap();
        assert_eq!(back, el);
    }
}

#[test]
fn compose_and_inverse() {
    let rs = build(SystemType::G, 2);
    let gens: Vec<AffineWeylElement> = (0..2)
        .map(|i| rs.simple_reflection(i))
        .chain([rs.affine_reflection()])
        .collect();
    let mut w = AffineWeylElement::identity(2);
    for g in [0, 2, 1, 2, 0, 1] {
        w = w.compose(&gens[g]);
    }
    let id = AffineWeylElement::identity(2);
    assert_eq!(w.compose(&w.inverse()), id);
    assert_eq!(w.inverse().compose(&w), id);
    // translations compose additively
    let t1 = AffineWeylElement::translation(vec![2, -1]);
    let t2 = AffineWeylElement::translation(vec![-1, 3]);
    assert_eq!(t1.compose(&t2), AffineWeylElement::translation(vec![1, 2]));
}
