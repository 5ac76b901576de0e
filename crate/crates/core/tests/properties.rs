mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::prufer_decode;
use extremal_trees::enumerate::free_trees;
use extremal_trees::extremal::{FamilyKind, Theorem};
use extremal_trees::indices::{approx_eq, Index};
use extremal_trees::structure::{squeeze, structural_profile};
use extremal_trees::transforms::TransformKind;
use extremal_trees::{canonical_code, Tree};

fn arb_tree() -> impl Strategy<Value = Tree> {
    (2usize..=24).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2)
            .prop_map(move |seq| Tree::from_edges(n, &prufer_decode(&seq, n)).unwrap())
    })
}

fn arb_relabeled() -> impl Strategy<Value = (Tree, Vec<usize>)> {
    arb_tree().prop_flat_map(|t| {
        let perm: Vec<usize> = (0..t.n()).collect();
        (Just(t), Just(perm).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn relabeling_keeps_code((t, perm) in arb_relabeled()) {
        let u = t.relabel(&perm);
        prop_assert_eq!(canonical_code(&t), canonical_code(&u));
        prop_assert_eq!(t.degree_sequence(), u.degree_sequence());
    }

    #[test]
    fn relabeling_keeps_indices((t, perm) in arb_relabeled(), alpha in -3.0f64..3.0, a in 0.05f64..3.0) {
        prop_assume!(alpha != 0.0 && alpha != 1.0 && a != 1.0);
        let u = t.relabel(&perm);
        for index in [Index::r0(alpha).unwrap(), Index::sei(a).unwrap()] {
            prop_assert!(approx_eq(index.of_tree(&t), index.of_tree(&u)));
            prop_assert!(approx_eq(index.of_tree(&t), index.of_degrees(&t.degree_sequence())));
        }
    }

    #[test]
    fn relabeling_keeps_structure((t, perm) in arb_relabeled()) {
        let u = t.relabel(&perm);
        prop_assert_eq!(structural_profile(&t).unwrap(), structural_profile(&u).unwrap());
        prop_assert_eq!(canonical_code(&squeeze(&t).unwrap()), canonical_code(&squeeze(&u).unwrap()));
    }

    #[test]
    fn edge_list_round_trip(t in arb_tree()) {
        let back = extremal_trees::parse_tree(&t.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), t.edges());
    }
}

fn isomorphic_by_search(s: &Tree, t: &Tree) -> bool {
    fn extend(s: &Tree, t: &Tree, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == s.n() {
            return true;
        }
        for w in 0..t.n() {
            if used[w] || s.degree(v) != t.degree(w) {
                continue;
            }
            // every earlier neighbor of v must map onto a neighbor of w
            let fits = s
                .neighbors(v)
                .iter()
                .filter(|&&x| x < v)
                .all(|&x| t.neighbors(w).contains(&map[x]));
            if fits {
                map.push(w);
                used[w] = true;
                if extend(s, t, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    s.n() == t.n() && extend(s, t, &mut Vec::new(), &mut vec![false; t.n()])
}

#[test]
fn codes_agree_with_isomorphism_search() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for n in 2..=9 {
        let trees: Vec<Tree> = free_trees(n).unwrap().collect();
        for (i, s) in trees.iter().enumerate() {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let shuffled = s.relabel(&perm);
            assert!(isomorphic_by_search(s, &shuffled));
            assert_eq!(canonical_code(s), canonical_code(&shuffled));
            for t in &trees[i + 1..] {
                assert!(!isomorphic_by_search(s, t));
                assert_ne!(canonical_code(s), canonical_code(t));
            }
        }
    }
}

fn internal_square_sum(t: &Tree) -> usize {
    t.degrees().iter().filter(|&&d| d > 1).map(|d| d * d).sum()
}

#[test]
fn p2_fixpoint_is_balanced() {
    for n in 6..=11 {
        for start in free_trees(n).unwrap() {
            let n1 = start.degree_sequence().pendent();
            if !(3..=n - 2).contains(&n1) {
                continue;
            }
            let mut t = start;
            let mut steps = 0;
            while let Ok(m) = TransformKind::P2.apply(&t) {
                assert!(internal_square_sum(&m.after) < internal_square_sum(&m.before));
                assert_eq!(m.after.degree_sequence().pendent(), n1);
                t = m.after;
                steps += 1;
                assert!(steps <= n * n);
            }
            let expected = Theorem::PtBalanced.equality_degseq(n, Some(n1)).unwrap();
            assert_eq!(t.degree_sequence(), expected, "n={n} n1={n1}");
        }
    }
}

#[test]
fn b4_fixpoint_has_no_branch_next_to_degree_two() {
    let index = Index::r0(2.0).unwrap();
    for n in 4..=10 {
        for start in free_trees(n).unwrap() {
            let b = start.degree_sequence().branching();
            let mut t = start;
            while let Ok(m) = TransformKind::B4.apply(&t) {
                assert!(index.of_tree(&m.after) > index.of_tree(&m.before));
                assert_eq!(m.after.degree_sequence().branching(), b);
                t = m.after;
            }
            for v in 0..t.n() {
                if t.degree(v) >= 3 {
                    assert!(t.neighbors(v).iter().all(|&w| t.degree(w) != 2), "{t:?}");
                }
            }
        }
    }
}

#[test]
fn moves_preserve_their_family() {
    for n in 4..=12 {
        for t in free_trees(n).unwrap() {
            for kind in TransformKind::ALL {
                let Ok(m) = kind.apply(&t) else { continue };
                let family: FamilyKind = kind.preserves();
                let before = family.param_of(&m.before.degree_sequence());
                let after = family.param_of(&m.after.degree_sequence());
                assert_eq!(before, after, "{kind} on {t:?}");
                assert_eq!(m.after.n(), m.before.n());
                assert_ne!(
                    canonical_code(&m.after),
                    canonical_code(&m.before),
                    "{kind} on {t:?} is a no-op"
                );
                if !m.normalized {
                    assert_eq!(canonical_code(&m.before), canonical_code(&t));
                }
            }
        }
    }
}
