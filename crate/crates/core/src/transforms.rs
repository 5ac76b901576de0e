//! Executable edge moves, each of which shifts degree between vertices
//! while keeping one family parameter (pendent count, branching count or
//! segment count) fixed.
//!
//! Target selection is deterministic. Vertices are ranked by degree
//! descending, then id; among qualifying vertex pairs the lexicographically
//! smallest by rank is used, and among candidate neighbors the smallest id.
//! A longest path through given vertices is the one with the
//! lexicographically smallest `(min end, max end)`; the larger end id plays
//! the role of the far end that receives moved vertices.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degseq::realize_caterpillar;
use crate::error::{Error, Result};
use crate::extremal::FamilyKind;
use crate::indices::{two_fours_sei_delta, Index, IndexKind, IndexRegime, R0Regime, SeiRegime};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TransformKind {
    /// merge toward the larger of two branching vertices
    P1,
    /// move a neighbor from `u` to `v` when `d_u >= d_v + 2`
    P2,
    /// peel one neighbor off a vertex of degree >= 4 onto a path end
    B1,
    /// strip a degree >= 4 vertex down to 3 in favor of a larger one
    B3,
    /// turn a degree-2 neighbor of a branching vertex into a pendent vertex
    B4,
    /// move two pendent vertices from a degree >= 5 vertex to a path end
    S1A,
    /// move one pendent vertex from each of two degree-4 vertices to a path end
    S1AA,
}

impl TransformKind {
    pub const ALL: [TransformKind; 7] = [
        TransformKind::P1,
        TransformKind::P2,
        TransformKind::B1,
        TransformKind::B3,
        TransformKind::B4,
        TransformKind::S1A,
        TransformKind::S1AA,
    ];

    /// The family parameter the move leaves unchanged.
    pub fn preserves(self) -> FamilyKind {
        match self {
            TransformKind::P1 | TransformKind::P2 => FamilyKind::Pendent,
            TransformKind::B1 | TransformKind::B3 | TransformKind::B4 => FamilyKind::Branching,
            TransformKind::S1A | TransformKind::S1AA => FamilyKind::Segment,
        }
    }

    /// Claimed sign of `index(before) - index(after)`, or `None` when no
    /// claim is made in that regime.
    pub fn claimed_sign(self, index: &Index) -> Option<i8> {
        use IndexRegime::{Sei, R0};
        use R0Regime::{Concave, Convex};
        use TransformKind::*;
        let (convex, above_one, below_one) = match self {
            P1 => (-1, None, Some(1)),
            P2 => (1, None, Some(-1)),
            B1 => (1, Some(1), Some(-1)),
            B3 => (-1, Some(-1), Some(1)),
            B4 => (-1, Some(-1), Some(1)),
            S1A => (1, Some(1), Some(-1)),
            S1AA => (1, Some(1), Some(-1)),
        };
        match index.regime() {
            R0(Convex) => Some(convex),
            R0(Concave) => Some(-convex),
            Sei(SeiRegime::AboveOne) => above_one,
            Sei(SeiRegime::Low) if self == S1AA => None,
            Sei(_) => below_one,
        }
    }

    pub fn apply(self, t: &Tree) -> Result<MoveRecord> {
        match self {
            TransformKind::P1 => apply_p1(t),
            TransformKind::P2 => apply_p2(t),
            TransformKind::B1 => apply_b1(t),
            TransformKind::B3 => apply_b3(t),
            TransformKind::B4 => apply_b4(t),
            TransformKind::S1A => apply_s1a(t),
            TransformKind::S1AA => apply_s1aa(t),
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TransformKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Constraint(format!("unknown lemma {s:?}")))
    }
}

/// An applied move. `before` is the tree the edge edits act on (the
/// caterpillar realization for S1A/S1AA when the input was not already a
/// caterpillar). `anchors` are the vertices whose degrees the closed-form
/// delta reads, in the order `predicted_delta` expects.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoveRecord {
    pub kind: TransformKind,
    pub removed_edges: Vec<(usize, usize)>,
    pub added_edges: Vec<(usize, usize)>,
    pub anchors: Vec<usize>,
    pub normalized: bool,
    pub before: Tree,
    pub after: Tree,
}

fn not_applicable(kind: TransformKind, reason: &str) -> Error {
    Error::NotApplicable {
        kind: kind.to_string(),
        reason: reason.to_string(),
    }
}

/// Vertices by degree descending, then id.
fn ranked(t: &Tree) -> Vec<usize> {
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(t.degree(v)), v));
    order
}

/// Neighbor of `from` on the path toward `to`.
fn step_toward(t: &Tree, from: usize, to: usize) -> usize {
    t.path_between(from, to)[1]
}

/// Ends `(x, y)`, `x < y`, of the longest path containing every vertex in
/// `through`.
fn longest_path_through(t: &Tree, through: &[usize]) -> (usize, usize) {
    let dist: Vec<Vec<usize>> = (0..t.n()).map(|v| t.distances_from(v)).collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..t.n() {
        for y in x + 1..t.n() {
            let d = dist[x][y];
            if !through.iter().all(|&u| dist[x][u] + dist[u][y] == d) {
                continue;
            }
            if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, x, y));
            }
        }
    }
    let (_, x, y) = best.expect("a tree on >= 2 vertices has a path through any vertex set");
    (x, y)
}

fn finish(
    kind: TransformKind,
    before: Tree,
    normalized: bool,
    anchors: Vec<usize>,
    removed_edges: Vec<(usize, usize)>,
    added_edges: Vec<(usize, usize)>,
) -> Result<MoveRecord> {
    let after = before.rewire(&removed_edges, &added_edges)?;
    Ok(MoveRecord {
        kind,
        removed_edges,
        added_edges,
        anchors,
        normalized,
        before,
        after,
    })
}

/// `T' = T - vw + uw` for branching `u`, `v` with `d_u >= d_v`, `w` a
/// neighbor of `v` off the `u`-`v` path.
pub fn apply_p1(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::P1;
    let branching: Vec<usize> = ranked(t).into_iter().filter(|&v| t.degree(v) >= 3).collect();
    if branching.len() < 2 {
        return Err(not_applicable(kind, "fewer than two branching vertices"));
    }
    let (u, v) = (branching[0], branching[1]);
    let toward = step_toward(t, v, u);
    let w = *t
        .neighbors(v)
        .iter()
        .find(|&&x| x != toward)
        .expect("branching vertex has off-path neighbors");
    finish(kind, t.clone(), false, vec![u, v], vec![(v, w)], vec![(u, w)])
}

/// `T' = T - uw + vw` for non-pendent `u`, `v` with `d_u >= d_v + 2`, `w` a
/// neighbor of `u` off the `u`-`v` path.
pub fn apply_p2(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::P2;
    let order: Vec<usize> = ranked(t).into_iter().filter(|&v| t.degree(v) >= 2).collect();
    let pair = order
        .iter()
        .find_map(|&u| order.iter().find(|&&v| t.degree(u) >= t.degree(v) + 2).map(|&v| (u, v)));
    let Some((u, v)) = pair else {
        return Err(not_applicable(kind, "no non-pendent pair with degree gap >= 2"));
    };
    let toward = step_toward(t, u, v);
    let w = *t.neighbors(u).iter().find(|&&x| x != toward).expect("d_u >= 4");
    finish(kind, t.clone(), false, vec![u, v], vec![(u, w)], vec![(v, w)])
}

/// `T' = T - uw + w v_{r+1}` for `d_u >= 4`, along a longest path
/// `v_0 ... v_{r+1}` containing `u`, with `w` a neighbor of `u` off the path.
pub fn apply_b1(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::B1;
    let u = ranked(t)[0];
    if t.degree(u) < 4 {
        return Err(not_applicable(kind, "maximum degree is at most 3"));
    }
    let (x, y) = longest_path_through(t, &[u]);
    let path = t.path_between(x, y);
    let w = *t
        .neighbors(u)
        .iter()
        .find(|w| !path.contains(w))
        .expect("d_u >= 4 leaves off-path neighbors");
    finish(kind, t.clone(), false, vec![u], vec![(u, w)], vec![(w, y)])
}

/// For `d_u >= d_v >= 4`: all neighbors of `v` except the one toward `u` and
/// two others are handed to `u`.
pub fn apply_b3(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::B3;
    let big: Vec<usize> = ranked(t).into_iter().filter(|&v| t.degree(v) >= 4).collect();
    if big.len() < 2 {
        return Err(not_applicable(kind, "fewer than two vertices of degree >= 4"));
    }
    let (u, v) = (big[0], big[1]);
    let toward = step_toward(t, v, u);
    let moved: Vec<usize> = t
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| x != toward)
        .take(t.degree(v) - 3)
        .collect();
    let removed = moved.iter().map(|&x| (v, x)).collect();
    let added = moved.iter().map(|&x| (u, x)).collect();
    finish(kind, t.clone(), false, vec![u, v], removed, added)
}

/// `T' = T - vw + uw` for adjacent `u` (degree >= 3) and `v` (degree 2) with
/// `N(v) = {u, w}`.
pub fn apply_b4(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::B4;
    let pair = ranked(t).into_iter().filter(|&u| t.degree(u) >= 3).find_map(|u| {
        // all degree-2 vertices share a rank key so id order is rank order
        t.neighbors(u).iter().find(|&&v| t.degree(v) == 2).map(|&v| (u, v))
    });
    let Some((u, v)) = pair else {
        return Err(not_applicable(
            kind,
            "no degree-2 vertex adjacent to a branching vertex",
        ));
    };
    let w = *t.neighbors(v).iter().find(|&&x| x != u).unwrap();
    finish(kind, t.clone(), false, vec![u, v], vec![(v, w)], vec![(u, w)])
}

fn caterpillar_of(t: &Tree) -> (Tree, bool) {
    if t.is_caterpillar() {
        (t.clone(), false)
    } else {
        (realize_caterpillar(&t.degree_sequence()), true)
    }
}

/// On the caterpillar realization: two pendent neighbors of a vertex of
/// degree >= 5, off a longest path through it, move to the path's far end.
pub fn apply_s1a(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::S1A;
    if t.max_degree() < 5 {
        return Err(not_applicable(kind, "maximum degree is at most 4"));
    }
    let (cat, normalized) = caterpillar_of(t);
    let vi = ranked(&cat)[0];
    let (x, y) = longest_path_through(&cat, &[vi]);
    let path = cat.path_between(x, y);
    let pendants: Vec<usize> = cat
        .neighbors(vi)
        .iter()
        .copied()
        .filter(|w| !path.contains(w))
        .take(2)
        .collect();
    debug_assert!(pendants.iter().all(|&p| cat.degree(p) == 1));
    let removed = pendants.iter().map(|&p| (p, vi)).collect();
    let added = pendants.iter().map(|&p| (p, y)).collect();
    finish(kind, cat, normalized, vec![vi], removed, added)
}

/// On the caterpillar realization: one pendent neighbor from each of two
/// degree-4 vertices moves to the far end of a longest path through both.
pub fn apply_s1aa(t: &Tree) -> Result<MoveRecord> {
    let kind = TransformKind::S1AA;
    if t.degrees().iter().filter(|&&d| d == 4).count() < 2 {
        return Err(not_applicable(kind, "fewer than two vertices of degree 4"));
    }
    let (cat, normalized) = caterpillar_of(t);
    let fours: Vec<usize> = (0..cat.n()).filter(|&v| cat.degree(v) == 4).take(2).collect();
    let (vi, vj) = (fours[0], fours[1]);
    let (x, y) = longest_path_through(&cat, &[vi, vj]);
    let path = cat.path_between(x, y);
    let off = |v: usize| *cat.neighbors(v).iter().find(|w| !path.contains(w)).unwrap();
    let (u1, u2) = (off(vi), off(vj));
    debug_assert!(cat.degree(u1) == 1 && cat.degree(u2) == 1);
    finish(
        kind,
        cat,
        normalized,
        vec![vi, vj],
        vec![(u1, vi), (u2, vj)],
        vec![(u1, y), (u2, y)],
    )
}

/// `index(before) - index(after)` from the degree bookkeeping of the move
/// alone, without evaluating either tree.
pub fn predicted_delta(m: &MoveRecord, index: &Index) -> f64 {
    let f = |d: usize| index.term(d);
    let deg = |i: usize| m.before.degree(m.anchors[i]);
    match m.kind {
        TransformKind::P1 => {
            let (du, dv) = (deg(0), deg(1));
            f(dv) - f(dv - 1) - (f(du + 1) - f(du))
        }
        TransformKind::P2 => {
            let (du, dv) = (deg(0), deg(1));
            f(du) - f(du - 1) - (f(dv + 1) - f(dv))
        }
        TransformKind::B1 => {
            let du = deg(0);
            f(du) - f(du - 1) - (f(2) - f(1))
        }
        TransformKind::B3 => {
            let (du, dv) = (deg(0), deg(1));
            f(dv) - f(3) - (f(du + dv - 3) - f(du))
        }
        TransformKind::B4 => {
            let du = deg(0);
            f(2) - f(1) - (f(du + 1) - f(du))
        }
        TransformKind::S1A => {
            let d = deg(0);
            f(d) - f(d - 2) - (f(3) - f(1))
        }
        TransformKind::S1AA => match index.kind() {
            IndexKind::Sei => two_fours_sei_delta(index.param()),
            IndexKind::R0 => 2.0 * (f(4) - f(3)) - (f(3) - f(1)),
        },
    }
}

/// `index(before) - index(after)` evaluated on both trees.
pub fn observed_delta(m: &MoveRecord, index: &Index) -> f64 {
    index.of_tree(&m.before) - index.of_tree(&m.after)
}
