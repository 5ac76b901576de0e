//! Tree degree sequences and their caterpillar realization.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Non-increasing list of vertex degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Validates a tree degree sequence: at least two entries, all
    /// positive, summing to `2(n - 1)`. Input order is irrelevant.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if n < 2 {
            return Err(Error::DegreeSequence(format!("need at least two entries, got {n}")));
        }
        if degrees.contains(&0) {
            return Err(Error::DegreeSequence("zero-degree entry".into()));
        }
        let sum: usize = degrees.iter().sum();
        if sum != 2 * (n - 1) {
            return Err(Error::DegreeSequence(format!(
                "degree sum {sum} != 2(n-1) = {}",
                2 * (n - 1)
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    /// Builds a sequence from groups of `(degree, multiplicity)`.
    pub fn from_groups(groups: &[(usize, usize)]) -> Result<Self> {
        let degrees = groups
            .iter()
            .flat_map(|&(d, count)| std::iter::repeat_n(d, count))
            .collect();
        Self::new(degrees)
    }

    /// Sorts without validating; callers guarantee tree-realizability.
    pub(crate) fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of entries equal to `d`.
    pub fn count(&self, d: usize) -> usize {
        self.0.iter().filter(|&&x| x == d).count()
    }

    pub fn max_degree(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn pendent(&self) -> usize {
        self.count(1)
    }

    pub fn branching(&self) -> usize {
        self.0.iter().filter(|&&d| d >= 3).count()
    }

    /// Segment count `n - n_2 - 1`.
    pub fn segments(&self) -> usize {
        self.0.len() - self.count(2) - 1
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Realizes `degrees` as a caterpillar. The spine consists of the entries
/// of degree at least two, laid out as the path `0-1-...-(s-1)` in
/// non-increasing degree order; pendent vertices follow, attached to spine
/// vertices in spine order.
pub fn realize_caterpillar(degrees: &DegreeSequence) -> Tree {
    let d = degrees.as_slice();
    let n = d.len();
    let spine = d.iter().take_while(|&&x| x >= 2).count();
    let mut edges = Vec::with_capacity(n - 1);
    if spine == 0 {
        // only (1,1)
        edges.push((0, 1));
    } else {
        for i in 1..spine {
            edges.push((i - 1, i));
        }
        let mut next_leaf = spine;
        for (i, &deg) in d[..spine].iter().enumerate() {
            let spine_neighbors = usize::from(i > 0) + usize::from(i + 1 < spine);
            for _ in 0..deg - spine_neighbors {
                edges.push((i, next_leaf));
                next_leaf += 1;
            }
        }
        debug_assert_eq!(next_leaf, n);
    }
    Tree::from_edges(n, &edges).expect("valid degree sequence realizes as a caterpillar")
}
