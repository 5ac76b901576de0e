//! Isomorphism-free enumeration of free trees.
//!
//! Trees are generated as canonical level sequences (depth of each vertex in
//! a preorder walk from the root) with the constant-amortized-time successor
//! scheme of Wright, Richmond, Odlyzko and McKay: rooted-tree successors à la
//! Beyer–Hedetniemi, filtered so that only the center-rooted representative
//! of each free tree is emitted. No dedup set is kept.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::extremal::{FamilyConstraint, FamilyKind};
use crate::tree::Tree;

/// Largest order accepted by default.
pub const DEFAULT_MAX_ORDER: usize = 18;

/// Iterator over one representative per isomorphism class of `n`-vertex
/// trees, in a fixed order.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
}

pub fn free_trees(n: usize) -> Result<FreeTrees> {
    free_trees_up_to(n, DEFAULT_MAX_ORDER)
}

pub fn free_trees_up_to(n: usize, max: usize) -> Result<FreeTrees> {
    if !(2..=max).contains(&n) {
        return Err(Error::EnumerationRange { n, min: 2, max });
    }
    // path rooted at its center
    let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(FreeTrees { layout: Some(layout) })
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let candidate = self.layout.take()?;
        let valid = next_free(candidate)?;
        let tree = layout_to_tree(&valid);
        self.layout = next_rooted(&valid, None);
        Some(tree)
    }
}

/// Beyer–Hedetniemi successor of a rooted level sequence, optionally forcing
/// the pivot position `p`.
fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (depths
/// shifted up by one) and the remainder with the root kept.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Advances `candidate` to the first level sequence at or after it that is
/// the center-rooted representative of a free tree.
fn next_free(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split(&candidate);
        let lh = left.iter().copied().max().unwrap_or(0);
        let rh = rest.iter().copied().max().unwrap_or(0);
        let left_heavier = left.len() > rest.len() || (left.len() == rest.len() && left > rest);
        if rh > lh || (rh == lh && !left_heavier) {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (slot, depth) in next[len - (h + 1)..].iter_mut().zip(1..) {
                *slot = depth;
            }
        }
        candidate = next;
    }
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut last_at_depth: Vec<usize> = vec![0; layout.len() + 1];
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (v, &d) in layout.iter().enumerate() {
        if d > 0 {
            edges.push((last_at_depth[d - 1], v));
        }
        last_at_depth[d] = v;
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequence encodes a tree")
}

/// An enumerated tree with the data verification needs.
#[derive(Debug, Clone)]
pub struct TreeRecord {
    pub tree: Tree,
    pub degrees: DegreeSequence,
    pub code: CanonicalCode,
}

/// All free trees of one order, in enumeration order, with degree sequences
/// and canonical codes computed in parallel.
#[derive(Debug, Clone)]
pub struct Catalogue {
    pub n: usize,
    pub records: Vec<TreeRecord>,
}

impl Catalogue {
    pub fn build(n: usize) -> Result<Self> {
        let trees: Vec<Tree> = free_trees(n)?.collect();
        let records = trees
            .into_par_iter()
            .map(|tree| TreeRecord {
                degrees: tree.degree_sequence(),
                code: canonical_code(&tree),
                tree,
            })
            .collect();
        Ok(Catalogue { n, records })
    }

    /// Distinct degree sequences with the index of their first realization.
    pub fn degree_classes(&self) -> BTreeMap<DegreeSequence, usize> {
        let mut classes = BTreeMap::new();
        for (i, r) in self.records.iter().enumerate() {
            classes.entry(r.degrees.clone()).or_insert(i);
        }
        classes
    }
}

pub fn family_members(c: &FamilyConstraint) -> Result<impl Iterator<Item = Tree>> {
    let c = *c;
    Ok(free_trees(c.n())?.filter(move |t| c.contains(&t.degree_sequence())))
}

/// Tree counts per family parameter value at one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCensus {
    pub n: usize,
    pub total: usize,
    pub by_pendent: BTreeMap<usize, usize>,
    pub by_segments: BTreeMap<usize, usize>,
    pub by_branching: BTreeMap<usize, usize>,
}

impl FamilyCensus {
    pub fn marginal(&self, kind: FamilyKind) -> &BTreeMap<usize, usize> {
        match kind {
            FamilyKind::Pendent => &self.by_pendent,
            FamilyKind::Segment => &self.by_segments,
            FamilyKind::Branching => &self.by_branching,
        }
    }

    pub fn count(&self, kind: FamilyKind, param: usize) -> usize {
        self.marginal(kind).get(&param).copied().unwrap_or(0)
    }
}

pub fn family_census(n: usize) -> Result<FamilyCensus> {
    let mut census = FamilyCensus {
        n,
        total: 0,
        by_pendent: BTreeMap::new(),
        by_segments: BTreeMap::new(),
        by_branching: BTreeMap::new(),
    };
    for t in free_trees(n)? {
        let d = t.degree_sequence();
        census.total += 1;
        *census.by_pendent.entry(d.pendent()).or_insert(0) += 1;
        *census.by_segments.entry(d.segments()).or_insert(0) += 1;
        *census.by_branching.entry(d.branching()).or_insert(0) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (2..=10).map(|n| free_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn first_tree_is_the_path() {
        let first = free_trees(7).unwrap().next().unwrap();
        assert_eq!(canonical_code(&first), canonical_code(&Tree::path(7)));
    }

    #[test]
    fn codes_are_distinct() {
        for n in 2..=11 {
            let codes: HashSet<_> = free_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
            assert_eq!(codes.len(), free_trees(n).unwrap().count(), "n = {n}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(free_trees(1).is_err());
        assert!(free_trees(19).is_err());
        assert!(free_trees_up_to(19, 20).is_ok());
    }

    #[test]
    fn census_marginals() {
        let c = family_census(6).unwrap();
        assert_eq!(c.total, 6);
        assert!(c.by_branching.keys().all(|&b| b <= 2));
        let c = family_census(7).unwrap();
        assert_eq!(c.count(FamilyKind::Segment, 2), 0);
        let c = family_census(8).unwrap();
        for kind in [FamilyKind::Pendent, FamilyKind::Segment, FamilyKind::Branching] {
            assert_eq!(c.marginal(kind).values().sum::<usize>(), 23);
        }
    }

    #[test]
    fn segment_family_matches_degree_two_count() {
        let c = FamilyConstraint::segments(7, 3).unwrap();
        let members: Vec<_> = family_members(&c).unwrap().collect();
        assert!(!members.is_empty());
        assert!(members.iter().all(|t| t.degree_sequence().count(2) == 3));
    }
}
