//! Degree statistics, segments and the squeeze of a tree.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Degree counts and the family parameters derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub n: usize,
    /// degree -> number of vertices with that degree
    pub degree_counts: BTreeMap<usize, usize>,
    pub pendent: usize,
    pub branching: usize,
    pub segments: usize,
    pub max_degree: usize,
}

impl StructuralProfile {
    pub fn count(&self, degree: usize) -> usize {
        self.degree_counts.get(&degree).copied().unwrap_or(0)
    }
}

pub fn structural_profile(t: &Tree) -> Result<StructuralProfile> {
    if t.n() < 2 {
        return Err(Error::TooSmall { n: t.n(), min: 2 });
    }
    let mut degree_counts = BTreeMap::new();
    for d in t.degrees() {
        *degree_counts.entry(d).or_insert(0) += 1;
    }
    let n2 = degree_counts.get(&2).copied().unwrap_or(0);
    Ok(StructuralProfile {
        n: t.n(),
        pendent: degree_counts.get(&1).copied().unwrap_or(0),
        branching: degree_counts.range(3..).map(|(_, c)| c).sum(),
        segments: t.n() - n2 - 1,
        max_degree: t.max_degree(),
        degree_counts,
    })
}

/// The maximal paths whose interior vertices all have degree two and whose
/// end vertices do not. Each path is listed from its smaller end id.
pub fn segment_decomposition(t: &Tree) -> Result<Vec<Vec<usize>>> {
    if t.n() < 2 {
        return Err(Error::TooSmall { n: t.n(), min: 2 });
    }
    let mut segments = Vec::new();
    for start in (0..t.n()).filter(|&v| t.degree(v) != 2) {
        for &first in t.neighbors(start) {
            let mut path = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            while t.degree(cur) == 2 {
                let next = t.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                path.push(next);
                prev = cur;
                cur = next;
            }
            if start < cur {
                segments.push(path);
            }
        }
    }
    Ok(segments)
}

/// Contracts every segment to a single edge. Surviving vertices keep their
/// relative id order.
pub fn squeeze(t: &Tree) -> Result<Tree> {
    let segments = segment_decomposition(t)?;
    let mut new_id = vec![usize::MAX; t.n()];
    let mut next = 0;
    for v in (0..t.n()).filter(|&v| t.degree(v) != 2) {
        new_id[v] = next;
        next += 1;
    }
    let edges: Vec<_> = segments
        .iter()
        .map(|p| (new_id[p[0]], new_id[*p.last().unwrap()]))
        .collect();
    Tree::from_edges(next, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    #[test]
    fn path_profile() {
        let p = structural_profile(&Tree::path(6)).unwrap();
        assert_eq!((p.pendent, p.branching, p.segments), (2, 0, 1));
    }

    #[test]
    fn star_profile() {
        let p = structural_profile(&Tree::star(6)).unwrap();
        assert_eq!((p.pendent, p.branching, p.segments), (5, 1, 5));
        assert_eq!(p.max_degree, 5);
    }

    #[test]
    fn spider_profile() {
        let p = structural_profile(&Tree::spider(&[2, 2, 2])).unwrap();
        assert_eq!(p.n, 7);
        assert_eq!((p.pendent, p.branching, p.count(2), p.segments), (3, 1, 3, 3));
    }

    #[test]
    fn singleton_rejected() {
        assert!(structural_profile(&Tree::singleton()).is_err());
        assert!(squeeze(&Tree::singleton()).is_err());
    }

    #[test]
    fn segments_of_basic_trees() {
        assert_eq!(
            segment_decomposition(&Tree::path(5)).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        let star = segment_decomposition(&Tree::star(6)).unwrap();
        assert_eq!(star.len(), 5);
        assert!(star.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn spider_segments_walked_directly() {
        // legs: 0-1-2, 0-3-4, 0-5-6
        let segs = segment_decomposition(&Tree::spider(&[2, 2, 2])).unwrap();
        assert_eq!(segs, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]);
    }

    #[test]
    fn squeeze_examples() {
        let s = squeeze(&Tree::spider(&[2, 2, 2])).unwrap();
        assert_eq!(canonical_code(&s), canonical_code(&Tree::star(4)));
        assert_eq!(squeeze(&Tree::path(7)).unwrap(), Tree::path(2));
        let star = Tree::star(6);
        assert_eq!(squeeze(&star).unwrap(), star);
    }

    #[test]
    fn squeeze_is_idempotent() {
        let t = Tree::spider(&[3, 1, 2, 4]);
        let once = squeeze(&t).unwrap();
        assert_eq!(squeeze(&once).unwrap(), once);
        assert_eq!(once.n(), t.n() - structural_profile(&t).unwrap().count(2));
    }
}
