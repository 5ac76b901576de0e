//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use extremal_trees::{canonical_code, CanonicalCode, Tree};

/// Decodes a Prüfer sequence over labels `0..n` into its edge set.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn class_of(seq: &[usize], n: usize) -> CanonicalCode {
    canonical_code(&Tree::from_edges(n, &prufer_decode(seq, n)).unwrap())
}

/// Isomorphism classes of `n`-vertex trees from all `n^(n-2)` labeled trees.
pub fn prufer_classes_full(n: usize) -> HashSet<CanonicalCode> {
    assert!((2..=8).contains(&n));
    if n == 2 {
        return HashSet::from([class_of(&[], 2)]);
    }
    let mut classes = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        classes.insert(class_of(&seq, n));
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return classes;
        }
        seq[i] += 1;
    }
}

/// Isomorphism classes of `n`-vertex trees from the labeled trees whose
/// degrees do not increase with the label. Every class has such a labeling
/// (sort vertices by degree), so this covers all classes at a fraction of
/// the cost of the full sweep.
pub fn prufer_classes(n: usize) -> HashSet<CanonicalCode> {
    assert!(n >= 2);
    let mut classes = HashSet::new();
    for counts in partitions(n - 2, n - 2, n) {
        let mut multiplicity = vec![0usize; n];
        multiplicity[..counts.len()].copy_from_slice(&counts);
        let mut seq = Vec::with_capacity(n - 2);
        arrangements(&mut multiplicity, &mut seq, n - 2, &mut |s| {
            classes.insert(class_of(s, n));
        });
    }
    classes
}

/// Partitions of `total` into at most `parts` parts, each at most `cap`,
/// listed with non-increasing parts.
pub fn partitions(total: usize, cap: usize, parts: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    if parts == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(total)).rev() {
        for mut rest in partitions(total - first, first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn arrangements(left: &mut [usize], seq: &mut Vec<usize>, len: usize, visit: &mut dyn FnMut(&[usize])) {
    if seq.len() == len {
        visit(seq);
        return;
    }
    for label in 0..left.len() {
        if left[label] > 0 {
            left[label] -= 1;
            seq.push(label);
            arrangements(left, seq, len, visit);
            seq.pop();
            left[label] += 1;
        }
    }
}

/// Every degree sequence of an `n`-vertex tree: `n` positive parts summing
/// to `2(n-1)`, non-increasing.
pub fn tree_degree_sequences(n: usize) -> Vec<Vec<usize>> {
    partitions(n - 2, n - 2, n)
        .into_iter()
        .map(|excess| {
            let mut d: Vec<usize> = excess.iter().map(|e| e + 1).collect();
            d.resize(n, 1);
            d
        })
        .collect()
}

pub fn r0_of(degrees: &[usize], alpha: f64) -> f64 {
    degrees.iter().map(|&d| (d as f64).powf(alpha)).sum()
}

pub fn sei_of(degrees: &[usize], a: f64) -> f64 {
    degrees.iter().map(|&d| d as f64 * a.powf(d as f64)).sum()
}

pub fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= (1e-9 * x.abs().max(y.abs())).max(1e-12)
}

/// Optimum over the degree sequences passing `keep`, and the set of
/// sequences attaining it.
pub fn degree_oracle(
    n: usize,
    keep: impl Fn(&[usize]) -> bool,
    value: impl Fn(&[usize]) -> f64,
    maximize: bool,
) -> Option<(f64, BTreeSet<Vec<usize>>)> {
    let scored: Vec<(f64, Vec<usize>)> = tree_degree_sequences(n)
        .into_iter()
        .filter(|d| keep(d))
        .map(|d| (value(&d), d))
        .collect();
    let best = scored
        .iter()
        .map(|s| s.0)
        .reduce(|x, y| if maximize { x.max(y) } else { x.min(y) })?;
    let attaining = scored.into_iter().filter(|s| close(s.0, best)).map(|s| s.1).collect();
    Some((best, attaining))
}

pub fn pendent(d: &[usize]) -> usize {
    d.iter().filter(|&&x| x == 1).count()
}

pub fn twos(d: &[usize]) -> usize {
    d.iter().filter(|&&x| x == 2).count()
}

pub fn branching(d: &[usize]) -> usize {
    d.iter().filter(|&&x| x >= 3).count()
}
