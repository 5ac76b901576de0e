//! Immutable simple trees over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

/// A finite simple tree. Vertex ids are `0..n`; edges are stored as sorted
/// `(min, max)` pairs and adjacency lists are sorted by id.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an explicit vertex count and edge list, rejecting
    /// self-loops, duplicate edges, cycles and disconnected vertex sets.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        let mut dsu = Dsu::new(n);
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: i + 1, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if adj[e.0].contains(&e.1) {
                return Err(Error::DuplicateEdge { u: e.0, v: e.1 });
            }
            if !dsu.union(u, v) {
                return Err(Error::Cycle { u: e.0, v: e.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push(e);
        }
        if normalized.len() != n - 1 {
            return Err(Error::Disconnected {
                components: n - normalized.len(),
            });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        normalized.sort_unstable();
        Ok(Tree {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Single-vertex tree.
    pub fn singleton() -> Self {
        Tree {
            n: 1,
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    /// Star with center `0`.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Tree::from_edges(n, &edges).expect("star is a tree")
    }

    /// Spider with center `0` and the given leg lengths.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edges(next, &edges).expect("spider is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    /// BFS distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        self.bfs(source).0
    }

    /// Vertices of the unique path from `from` to `to`, inclusive.
    pub fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let (_, parent) = self.bfs(from);
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    fn bfs(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        parent[source] = source;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Returns a new tree with `edges_out` removed and `edges_in` added.
    pub fn rewire(&self, edges_out: &[(usize, usize)], edges_in: &[(usize, usize)]) -> Result<Tree> {
        let mut edges: Vec<(usize, usize)> = self.edges.clone();
        for &(u, v) in edges_out {
            let e = (u.min(v), u.max(v));
            let pos = edges.iter().position(|&x| x == e).ok_or_else(|| Error::NotApplicable {
                kind: "rewire".into(),
                reason: format!("edge {}-{} not present", e.0, e.1),
            })?;
            edges.swap_remove(pos);
        }
        edges.extend_from_slice(edges_in);
        Tree::from_edges(self.n, &edges)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(self.n, &edges).expect("relabeling preserves tree structure")
    }

    /// Deleting all pendent vertices leaves a path (or nothing).
    pub fn is_caterpillar(&self) -> bool {
        if self.n <= 2 {
            return true;
        }
        let spine: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 2).collect();
        spine
            .iter()
            .all(|&v| self.adj[v].iter().filter(|&&w| self.degree(w) >= 2).count() <= 2)
    }

    /// Edge-list text, one `u v` pair per line, no trailing newline.
    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(u, v)| format!("{u} {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, {:?})", self.n, self.edges)
    }
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_edge_list())
    }
}

/// Parses edge-list text: one `u v` pair per line, `#` comments and blank
/// lines ignored. The vertex count is one more than the largest id; input
/// with no edges denotes the single-vertex tree.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let mut next_id = |what: &str| -> Result<usize> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {what} vertex"),
            })?;
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        let u = next_id("first")?;
        let v = next_id("second")?;
        if let Some(extra) = fields.next() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unexpected token {extra:?}"),
            });
        }
        if u == v {
            return Err(Error::SelfLoop {
                line: lineno,
                vertex: u,
            });
        }
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Ok(Tree::singleton());
    }
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    Tree::from_edges(n, &edges)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path_and_star() {
        let p3 = parse_tree("0 1\n1 2").unwrap();
        assert_eq!(p3, Tree::path(3));
        let s4 = parse_tree("0 1\n0 2\n0 3").unwrap();
        assert_eq!(s4, Tree::star(4));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let t = parse_tree("# a path\n\n0 1\n  # indented comment\n1\t2\n").unwrap();
        assert_eq!(t.n(), 3);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(parse_tree("0 1\n2 3"), Err(Error::Disconnected { components: 2 }));
        assert_eq!(parse_tree("0 1\n1 2\n2 0"), Err(Error::Cycle { u: 0, v: 2 }));
        assert_eq!(parse_tree("0 1\n1 0"), Err(Error::DuplicateEdge { u: 0, v: 1 }));
        assert!(matches!(parse_tree("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_tree("0 1\n2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_tree("0 1 2"), Err(Error::Parse { .. })));
        assert_eq!(parse_tree("0 1\n# c\n1 1"), Err(Error::SelfLoop { line: 3, vertex: 1 }));
    }

    #[test]
    fn gap_in_vertex_ids_is_disconnected() {
        assert_eq!(parse_tree("0 2"), Err(Error::Disconnected { components: 2 }));
    }

    #[test]
    fn empty_input_is_singleton() {
        let t = parse_tree("# nothing\n").unwrap();
        assert_eq!(t.n(), 1);
        assert!(t.edges().is_empty());
    }

    #[test]
    fn edge_list_round_trip() {
        let t = Tree::spider(&[2, 2, 2]);
        assert_eq!(parse_tree(&t.to_edge_list()).unwrap(), t);
    }

    #[test]
    fn path_between_walks_the_tree() {
        let t = Tree::spider(&[2, 1]);
        // 0-1-2 and 0-3
        assert_eq!(t.path_between(2, 3), vec![2, 1, 0, 3]);
        assert_eq!(t.distances_from(2), vec![2, 1, 0, 3]);
    }

    #[test]
    fn caterpillar_predicate() {
        assert!(Tree::path(6).is_caterpillar());
        assert!(Tree::star(6).is_caterpillar());
        assert!(!Tree::spider(&[2, 2, 2]).is_caterpillar());
    }
}
