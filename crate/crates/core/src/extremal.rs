//! Closed-form extremal bounds for the pendent-vertex, branching-vertex and
//! segment families, each paired with the degree sequence that attains it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degseq::{realize_caterpillar, DegreeSequence};
use crate::error::{Error, Result};
use crate::indices::{power, Index, IndexKind, IndexRegime, R0Regime, SeiRegime};
use crate::tree::Tree;

/// Smallest order for which the families are studied.
pub const MIN_FAMILY_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyKind {
    /// fixed number of pendent vertices `n1`
    #[serde(rename = "PT")]
    Pendent,
    /// fixed number of segments `k`
    #[serde(rename = "ST")]
    Segment,
    /// fixed number of branching vertices `b`
    #[serde(rename = "BT")]
    Branching,
}

impl FamilyKind {
    pub fn param_name(self) -> &'static str {
        match self {
            FamilyKind::Pendent => "n1",
            FamilyKind::Segment => "k",
            FamilyKind::Branching => "b",
        }
    }

    /// Valid parameter range for order `n` (empty below order 6).
    pub fn param_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        if n < MIN_FAMILY_ORDER {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        match self {
            FamilyKind::Pendent | FamilyKind::Segment => 3..=n - 2,
            FamilyKind::Branching => 1..=(n - 2) / 2,
        }
    }

    /// The family parameter of a tree with degree sequence `d`.
    pub fn param_of(self, d: &DegreeSequence) -> usize {
        match self {
            FamilyKind::Pendent => d.pendent(),
            FamilyKind::Segment => d.segments(),
            FamilyKind::Branching => d.branching(),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Pendent => "PT",
            FamilyKind::Segment => "ST",
            FamilyKind::Branching => "BT",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pt" => Ok(FamilyKind::Pendent),
            "st" => Ok(FamilyKind::Segment),
            "bt" => Ok(FamilyKind::Branching),
            other => Err(Error::Constraint(format!("unknown family {other:?}"))),
        }
    }
}

/// One of `PT(n, n1)`, `ST(n, k)`, `BT(n, b)` with its parameter validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyConstraint {
    kind: FamilyKind,
    n: usize,
    param: usize,
}

impl FamilyConstraint {
    pub fn new(kind: FamilyKind, n: usize, param: usize) -> Result<Self> {
        if n < MIN_FAMILY_ORDER {
            return Err(Error::Constraint(format!(
                "{kind}({n},{param}): families need n >= {MIN_FAMILY_ORDER}"
            )));
        }
        let range = kind.param_range(n);
        if !range.contains(&param) {
            return Err(Error::Constraint(format!(
                "{kind}({n},{param}): {} must lie in {}..={}",
                kind.param_name(),
                range.start(),
                range.end()
            )));
        }
        Ok(FamilyConstraint { kind, n, param })
    }

    pub fn pendent(n: usize, n1: usize) -> Result<Self> {
        Self::new(FamilyKind::Pendent, n, n1)
    }

    pub fn segments(n: usize, k: usize) -> Result<Self> {
        Self::new(FamilyKind::Segment, n, k)
    }

    pub fn branching(n: usize, b: usize) -> Result<Self> {
        Self::new(FamilyKind::Branching, n, b)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn contains(&self, d: &DegreeSequence) -> bool {
        d.len() == self.n && self.kind.param_of(d) == self.param
    }
}

impl fmt::Display for FamilyConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind, self.n, self.param)
    }
}

/// The set of trees a bound ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Population {
    AllTrees { n: usize },
    Family(FamilyConstraint),
}

impl Population {
    pub fn n(&self) -> usize {
        match self {
            Population::AllTrees { n } => *n,
            Population::Family(c) => c.n(),
        }
    }

    pub fn contains(&self, d: &DegreeSequence) -> bool {
        match self {
            Population::AllTrees { n } => d.len() == *n,
            Population::Family(c) => c.contains(d),
        }
    }
}

impl fmt::Display for Population {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Population::AllTrees { n } => write!(f, "T({n})"),
            Population::Family(c) => c.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

/// A bound together with the claimed optimization direction and the unique
/// degree sequence attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: f64,
    pub direction: Direction,
    pub equality_degseq: DegreeSequence,
}

/// Internal degrees of a `PT(n, n1)` tree spread as evenly as possible:
/// `count_t` vertices of degree `t` and `count_t1` of degree `t + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BalancedCounts {
    pub t: usize,
    pub count_t: usize,
    pub count_t1: usize,
}

/// Solves `x + y = n - n1`, `t x + (t+1) y = 2(n-1) - n1` with
/// `t = floor((n-2)/(n-n1)) + 1`.
pub fn balanced_counts(n: usize, n1: usize) -> Result<BalancedCounts> {
    FamilyConstraint::pendent(n, n1)?;
    let internal = n - n1;
    let t = (n - 2) / internal + 1;
    let count_t1 = (n - 2) % internal;
    Ok(BalancedCounts {
        t,
        count_t: internal - count_t1,
        count_t1,
    })
}

/// The count expressions as printed alongside the balanced extremal tree:
/// `((n-n1)t - n1 + 2, n - (n-n1)t - 2)`. Kept for auditing only; they do
/// not satisfy the degree-sum identity in general.
pub fn printed_balanced_counts(n: usize, n1: usize) -> (i64, i64) {
    let (n, n1) = (n as i64, n1 as i64);
    let t = (n - 2) / (n - n1) + 1;
    ((n - n1) * t - n1 + 2, n - (n - n1) * t - 2)
}

/// Whether `(count_t, count_t1)` of degree `t`, `t+1` complete a `PT(n, n1)`
/// degree sequence: non-negative, right vertex count, right degree sum.
pub fn balanced_identities_hold(n: usize, n1: usize, t: usize, count_t: i64, count_t1: i64) -> bool {
    let (n, n1, t) = (n as i64, n1 as i64, t as i64);
    count_t >= 0
        && count_t1 >= 0
        && count_t + count_t1 == n - n1
        && t * count_t + (t + 1) * count_t1 == 2 * (n - 1) - n1
}

/// The bound statements, one per extremal result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Theorem {
    /// `PT(n, n1)`: spider `(n1, 2^(n-n1-1), 1^n1)`
    #[serde(rename = "PT_MIN_SPIDER")]
    PtSpider,
    /// `PT(n, n1)`: internal degrees differ by at most one
    #[serde(rename = "PT_BALANCED")]
    PtBalanced,
    /// `BT(n, b)`: all branching vertices of degree 3
    #[serde(rename = "BT_SMALL")]
    BtSmall,
    /// `BT(n, b)`: one big vertex, the rest of degree 3, no degree 2
    #[serde(rename = "BT_BIG")]
    BtBig,
    /// `ST(n, k)`: squeeze is a star
    #[serde(rename = "ST_STAR_SIDE")]
    StStar,
    /// `ST(n, k)`: degrees at most 4 with at most one 4, by parity of `k`
    #[serde(rename = "ST_PARITY")]
    StParity,
    /// all `n`-vertex trees: the star
    #[serde(rename = "STAR_GLOBAL")]
    StarGlobal,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::PtSpider,
        Theorem::PtBalanced,
        Theorem::BtSmall,
        Theorem::BtBig,
        Theorem::StStar,
        Theorem::StParity,
        Theorem::StarGlobal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::PtSpider => "PT_MIN_SPIDER",
            Theorem::PtBalanced => "PT_BALANCED",
            Theorem::BtSmall => "BT_SMALL",
            Theorem::BtBig => "BT_BIG",
            Theorem::StStar => "ST_STAR_SIDE",
            Theorem::StParity => "ST_PARITY",
            Theorem::StarGlobal => "STAR_GLOBAL",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Theorem::PtSpider => "pt-spider",
            Theorem::PtBalanced => "pt-balanced",
            Theorem::BtSmall => "bt-small",
            Theorem::BtBig => "bt-big",
            Theorem::StStar => "st-star",
            Theorem::StParity => "st-parity",
            Theorem::StarGlobal => "star",
        }
    }

    pub fn family_kind(self) -> Option<FamilyKind> {
        match self {
            Theorem::PtSpider | Theorem::PtBalanced => Some(FamilyKind::Pendent),
            Theorem::BtSmall | Theorem::BtBig => Some(FamilyKind::Branching),
            Theorem::StStar | Theorem::StParity => Some(FamilyKind::Segment),
            Theorem::StarGlobal => None,
        }
    }

    /// Smallest order the statement covers.
    pub fn min_order(self) -> usize {
        match self {
            Theorem::StarGlobal => 4,
            _ => MIN_FAMILY_ORDER,
        }
    }

    /// Direction the statement claims for `index`, or `None` when the
    /// statement says nothing about that parameter regime.
    pub fn claimed_direction(self, index: &Index) -> Option<Direction> {
        use Direction::{Max, Min};
        use IndexRegime::{Sei, R0};
        use R0Regime::{Concave, Convex};
        match (self, index.regime()) {
            (Theorem::PtSpider, R0(Convex)) => Some(Max),
            (Theorem::PtSpider, R0(Concave)) => Some(Min),
            (Theorem::PtSpider, Sei(s)) => s.below_one().then_some(Min),

            (Theorem::PtBalanced, R0(Convex)) => Some(Min),
            (Theorem::PtBalanced, R0(Concave)) => Some(Max),
            (Theorem::PtBalanced, Sei(s)) => s.below_one().then_some(Max),

            (Theorem::BtSmall, R0(Convex)) => Some(Min),
            (Theorem::BtSmall, R0(Concave)) => Some(Max),
            (Theorem::BtSmall, Sei(SeiRegime::AboveOne)) => Some(Min),
            (Theorem::BtSmall, Sei(_)) => Some(Max),

            (Theorem::BtBig, R0(Convex)) => Some(Max),
            (Theorem::BtBig, R0(Concave)) => Some(Min),
            (Theorem::BtBig, Sei(SeiRegime::AboveOne)) => Some(Max),
            (Theorem::BtBig, Sei(_)) => Some(Min),

            (Theorem::StStar, R0(Convex)) => Some(Max),
            (Theorem::StStar, R0(Concave)) => Some(Min),
            (Theorem::StStar, Sei(SeiRegime::AboveOne)) => Some(Max),
            (Theorem::StStar, Sei(_)) => None,

            (Theorem::StParity, R0(Convex)) => Some(Min),
            (Theorem::StParity, R0(Concave)) => Some(Max),
            (Theorem::StParity, Sei(SeiRegime::AboveOne)) => Some(Min),
            (Theorem::StParity, Sei(SeiRegime::Window)) => Some(Max),
            (Theorem::StParity, Sei(SeiRegime::Low)) => None,

            (Theorem::StarGlobal, R0(Convex)) => Some(Max),
            (Theorem::StarGlobal, R0(Concave)) => Some(Min),
            (Theorem::StarGlobal, Sei(SeiRegime::AboveOne)) => Some(Max),
            (Theorem::StarGlobal, Sei(_)) => None,
        }
    }

    /// Family parameters the statement covers at order `n`; `[None]` for
    /// the unconstrained star bound.
    pub fn params(self, n: usize) -> Vec<Option<usize>> {
        match self.family_kind() {
            Some(kind) => kind.param_range(n).map(Some).collect(),
            None if n >= self.min_order() => vec![None],
            None => Vec::new(),
        }
    }

    pub fn population(self, n: usize, param: Option<usize>) -> Result<Population> {
        match (self.family_kind(), param) {
            (Some(kind), Some(p)) => Ok(Population::Family(FamilyConstraint::new(kind, n, p)?)),
            (Some(kind), None) => Err(Error::Constraint(format!(
                "{} needs --{}",
                self.id(),
                kind.param_name()
            ))),
            (None, None) => {
                if n < self.min_order() {
                    Err(Error::TooSmall {
                        n,
                        min: self.min_order(),
                    })
                } else {
                    Ok(Population::AllTrees { n })
                }
            }
            (None, Some(_)) => Err(Error::Constraint(format!("{} takes no family parameter", self.id()))),
        }
    }

    /// The characterized extremal degree sequence.
    pub fn equality_degseq(self, n: usize, param: Option<usize>) -> Result<DegreeSequence> {
        self.population(n, param)?;
        let p = param.unwrap_or(0);
        let groups: Vec<(usize, usize)> = match self {
            Theorem::PtSpider => vec![(p, 1), (2, n - p - 1), (1, p)],
            Theorem::PtBalanced => {
                let c = balanced_counts(n, p)?;
                vec![(c.t + 1, c.count_t1), (c.t, c.count_t), (1, p)]
            }
            Theorem::BtSmall => vec![(3, p), (2, n - 2 * p - 2), (1, p + 2)],
            Theorem::BtBig => vec![(n - 2 * p + 1, 1), (3, p - 1), (1, n - p)],
            Theorem::StStar => vec![(p, 1), (2, n - p - 1), (1, p)],
            Theorem::StParity => {
                if p.is_multiple_of(2) {
                    if p < 4 {
                        return Err(Error::Constraint(format!("even k = {p} < 4")));
                    }
                    vec![(4, 1), (3, (p - 4) / 2), (2, n - p - 1), (1, (p + 4) / 2)]
                } else {
                    vec![(3, (p - 1) / 2), (2, n - p - 1), (1, (p + 3) / 2)]
                }
            }
            Theorem::StarGlobal => vec![(n - 1, 1), (1, n - 1)],
        };
        DegreeSequence::from_groups(&groups)
    }

    /// Closed-form bound value, claimed direction and equality sequence.
    pub fn bound(self, n: usize, param: Option<usize>, index: &Index) -> Result<BoundValue> {
        let equality_degseq = self.equality_degseq(n, param)?;
        let direction = self.claimed_direction(index).ok_or_else(|| Error::NoClaim {
            theorem: self.id().to_string(),
            index: index.to_string(),
        })?;
        let p = param.unwrap_or(0);
        let value = match index.kind() {
            IndexKind::R0 => r0_closed_form(self, n, p, index.param())?,
            IndexKind::Sei => sei_closed_form(self, n, p, index.param())?,
        };
        Ok(BoundValue {
            value,
            direction,
            equality_degseq,
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.cli_name().eq_ignore_ascii_case(s) || t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Constraint(format!("unknown theorem {s:?}")))
    }
}

fn r0_closed_form(theorem: Theorem, n: usize, p: usize, alpha: f64) -> Result<f64> {
    let pw = |x: f64| power(x, alpha);
    let nf = n as f64;
    let pf = p as f64;
    let two = pw(2.0);
    let three = pw(3.0);
    Ok(match theorem {
        Theorem::PtSpider | Theorem::StStar => two * nf + pw(pf) - (two - 1.0) * pf - two,
        Theorem::PtBalanced => {
            let c = balanced_counts(n, p)?;
            c.count_t as f64 * pw(c.t as f64) + c.count_t1 as f64 * pw((c.t + 1) as f64) + pf
        }
        Theorem::BtSmall => two * nf + (three - 2.0 * two + 1.0) * pf - 2.0 * two + 2.0,
        Theorem::BtBig => pw((n - 2 * p + 1) as f64) + nf + (three - 1.0) * pf - three,
        Theorem::StParity => {
            let f = two * nf + (three - 2.0 * two + 1.0) / 2.0 * pf;
            if p.is_multiple_of(2) {
                f + pw(4.0) - 2.0 * three - two + 2.0
            } else {
                f + (3.0 - three - 2.0 * two) / 2.0
            }
        }
        Theorem::StarGlobal => pw(nf - 1.0) + nf - 1.0,
    })
}

fn sei_closed_form(theorem: Theorem, n: usize, p: usize, a: f64) -> Result<f64> {
    let nf = n as f64;
    let pf = p as f64;
    let a2 = a * a;
    let a3 = a2 * a;
    Ok(match theorem {
        Theorem::PtSpider => 2.0 * a2 * nf + (a.powi(p as i32) - 2.0 * a2 + a) * pf - 2.0 * a2,
        Theorem::PtBalanced => {
            let c = balanced_counts(n, p)?;
            let t = c.t as i32;
            c.count_t as f64 * c.t as f64 * a.powi(t) + c.count_t1 as f64 * (c.t + 1) as f64 * a.powi(t + 1) + pf * a
        }
        Theorem::BtSmall => 2.0 * a2 * nf + (3.0 * a3 - 4.0 * a2 + a) * pf - 2.0 * a * (2.0 * a - 1.0),
        Theorem::BtBig => {
            let big = n - 2 * p + 1;
            big as f64 * a.powi(big as i32) + nf * a + (3.0 * a3 - a) * pf - 3.0 * a3
        }
        Theorem::StStar => 2.0 * a2 * nf + pf * a.powi(p as i32) - (2.0 * a - 1.0) * a * pf - 2.0 * a2,
        Theorem::StParity => {
            let g = 2.0 * a2 * nf + (3.0 * a3 - 4.0 * a2 + a) / 2.0 * pf;
            if p.is_multiple_of(2) {
                g + 4.0 * a2 * a2 - 6.0 * a3 - 2.0 * a2 + 2.0 * a
            } else {
                g + (3.0 * a - 3.0 * a3 - 4.0 * a2) / 2.0
            }
        }
        Theorem::StarGlobal => (nf - 1.0) * a.powi(n as i32 - 1) + (nf - 1.0) * a,
    })
}

pub fn pt_spider_bound(n: usize, n1: usize, index: &Index) -> Result<BoundValue> {
    Theorem::PtSpider.bound(n, Some(n1), index)
}

pub fn pt_balanced_bound(n: usize, n1: usize, index: &Index) -> Result<BoundValue> {
    Theorem::PtBalanced.bound(n, Some(n1), index)
}

pub fn bt_bound_small_degrees(n: usize, b: usize, index: &Index) -> Result<BoundValue> {
    Theorem::BtSmall.bound(n, Some(b), index)
}

pub fn bt_bound_one_big_vertex(n: usize, b: usize, index: &Index) -> Result<BoundValue> {
    Theorem::BtBig.bound(n, Some(b), index)
}

pub fn st_star_side_bound(n: usize, k: usize, index: &Index) -> Result<BoundValue> {
    Theorem::StStar.bound(n, Some(k), index)
}

pub fn st_parity_bound(n: usize, k: usize, index: &Index) -> Result<BoundValue> {
    Theorem::StParity.bound(n, Some(k), index)
}

pub fn star_global_bound(n: usize, index: &Index) -> Result<BoundValue> {
    Theorem::StarGlobal.bound(n, None, index)
}

/// Caterpillar realization of the theorem's equality sequence.
pub fn construct_extremal(theorem: Theorem, n: usize, param: Option<usize>) -> Result<Tree> {
    Ok(realize_caterpillar(&theorem.equality_degseq(n, param)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::approx_eq;
    use crate::structure::structural_profile;

    fn r0(alpha: f64) -> Index {
        Index::r0(alpha).unwrap()
    }

    fn sei(a: f64) -> Index {
        Index::sei(a).unwrap()
    }

    fn close(x: f64, y: f64) {
        assert!(approx_eq(x, y), "{x} != {y}");
    }

    #[test]
    fn constraint_ranges() {
        assert!(FamilyConstraint::pendent(6, 2).is_err());
        assert!(FamilyConstraint::pendent(6, 5).is_err());
        assert!(FamilyConstraint::pendent(6, 4).is_ok());
        assert!(FamilyConstraint::branching(6, 0).is_err());
        assert!(FamilyConstraint::branching(6, 2).is_ok());
        assert!(FamilyConstraint::branching(7, 3).is_err());
        assert!(FamilyConstraint::segments(9, 8).is_err());
        assert!(FamilyConstraint::segments(9, 2).is_err());
        assert!(FamilyConstraint::segments(5, 3).is_err());
    }

    #[test]
    fn balanced_count_examples() {
        let c = balanced_counts(10, 7).unwrap();
        assert_eq!((c.t, c.count_t, c.count_t1), (3, 1, 2));
        let c = balanced_counts(8, 5).unwrap();
        assert_eq!((c.t, c.count_t, c.count_t1), (3, 3, 0));
        let c = balanced_counts(9, 4).unwrap();
        assert_eq!((c.t, c.count_t, c.count_t1), (2, 3, 2));
    }

    #[test]
    fn printed_counts_break_the_identity_at_10_7() {
        let (x, y) = printed_balanced_counts(10, 7);
        assert_eq!((x, y), (4, -1));
        assert!(!balanced_identities_hold(10, 7, 3, x, y));
    }

    #[test]
    fn pt_spider_examples() {
        let b = pt_spider_bound(8, 3, &sei(0.5)).unwrap();
        close(b.value, 3.875);
        assert_eq!(b.direction, Direction::Min);
        let b = pt_spider_bound(8, 3, &r0(2.0)).unwrap();
        close(b.value, 28.0);
        assert_eq!(b.direction, Direction::Max);
        let b = pt_spider_bound(9, 7, &r0(2.0)).unwrap();
        assert_eq!(b.equality_degseq.as_slice(), &[7, 2, 1, 1, 1, 1, 1, 1, 1]);
        assert!(matches!(pt_spider_bound(8, 3, &sei(2.0)), Err(Error::NoClaim { .. })));
    }

    #[test]
    fn pt_balanced_examples() {
        let b = pt_balanced_bound(10, 7, &r0(2.0)).unwrap();
        close(b.value, 48.0);
        assert_eq!(b.equality_degseq.as_slice(), &[4, 4, 3, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(b.direction, Direction::Min);
        close(pt_balanced_bound(8, 5, &sei(0.5)).unwrap().value, 3.625);
        close(pt_balanced_bound(9, 4, &r0(2.0)).unwrap().value, 34.0);
    }

    #[test]
    fn bt_examples() {
        let b = bt_bound_small_degrees(8, 1, &sei(2.0)).unwrap();
        close(b.value, 62.0);
        assert_eq!(b.direction, Direction::Min);
        close(bt_bound_small_degrees(8, 1, &r0(2.0)).unwrap().value, 28.0);
        let b = bt_bound_small_degrees(10, 4, &r0(2.0)).unwrap();
        assert_eq!(b.equality_degseq.count(2), 0);

        close(bt_bound_one_big_vertex(8, 2, &r0(2.0)).unwrap().value, 40.0);
        close(bt_bound_one_big_vertex(10, 3, &sei(2.0)).unwrap().value, 222.0);
        for alpha in [-1.0, 0.5, 3.0] {
            let big = bt_bound_one_big_vertex(9, 1, &r0(alpha)).unwrap().value;
            close(big, power(8.0, alpha) + 8.0);
        }
    }

    #[test]
    fn st_examples() {
        close(st_star_side_bound(8, 3, &r0(2.0)).unwrap().value, 28.0);
        assert!(st_star_side_bound(9, 8, &r0(2.0)).is_err());
        close(st_star_side_bound(12, 5, &sei(2.0)).unwrap().value, 218.0);
        assert!(matches!(
            st_star_side_bound(12, 5, &sei(0.5)),
            Err(Error::NoClaim { .. })
        ));

        let b = st_parity_bound(9, 4, &r0(2.0)).unwrap();
        close(b.value, 36.0);
        assert_eq!(b.equality_degseq.as_slice(), &[4, 2, 2, 2, 2, 1, 1, 1, 1]);
        close(st_parity_bound(8, 3, &r0(2.0)).unwrap().value, 28.0);
        // (4,3,2,2,2,1,1,1,1,1) at a = 0.6
        let b = st_parity_bound(10, 6, &sei(0.6)).unwrap();
        let direct = 4.0 * 0.6f64.powi(4) + 3.0 * 0.6f64.powi(3) + 3.0 * 2.0 * 0.36 + 5.0 * 0.6;
        close(b.value, direct);
        assert_eq!(b.direction, Direction::Max);
        assert!(matches!(st_parity_bound(10, 6, &sei(0.3)), Err(Error::NoClaim { .. })));
    }

    #[test]
    fn star_examples() {
        close(star_global_bound(6, &sei(2.0)).unwrap().value, 170.0);
        close(star_global_bound(6, &r0(2.0)).unwrap().value, 30.0);
        close(star_global_bound(4, &r0(-1.0)).unwrap().value, 1.0 / 3.0 + 3.0);
        assert!(star_global_bound(3, &r0(2.0)).is_err());
    }

    #[test]
    fn constructions_hit_their_families() {
        let t = construct_extremal(Theorem::PtSpider, 8, Some(3)).unwrap();
        let p = structural_profile(&t).unwrap();
        assert_eq!((p.pendent, p.segments), (3, 3));
        close(sei(0.5).of_tree(&t), 3.875);

        let t = construct_extremal(Theorem::BtSmall, 8, Some(1)).unwrap();
        let p = structural_profile(&t).unwrap();
        assert_eq!((p.branching, p.pendent), (1, 3));

        let t = construct_extremal(Theorem::StParity, 9, Some(4)).unwrap();
        assert_eq!(structural_profile(&t).unwrap().segments, 4);
        assert_eq!(t.degree_sequence().as_slice(), &[4, 2, 2, 2, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn closed_forms_agree_with_constructions() {
        let indices = [
            r0(-1.0),
            r0(-0.5),
            r0(0.5),
            r0(2.0),
            r0(3.0),
            sei(0.3),
            sei(0.6),
            sei(1.5),
            sei(2.0),
        ];
        for theorem in Theorem::ALL {
            for n in 6..=16 {
                for param in theorem.params(n) {
                    let t = construct_extremal(theorem, n, param).unwrap();
                    let pop = theorem.population(n, param).unwrap();
                    assert!(pop.contains(&t.degree_sequence()), "{theorem} {pop}");
                    for index in &indices {
                        if let Ok(b) = theorem.bound(n, param, index) {
                            close(index.of_tree(&t), b.value);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn star_side_decomposes_through_the_squeeze() {
        for n in 6..=14 {
            for k in 3..=n - 2 {
                for alpha in [-1.0, 0.5, 2.0] {
                    let side = st_star_side_bound(n, k, &r0(alpha)).unwrap().value;
                    let star = star_global_bound(k + 1, &r0(alpha)).unwrap().value;
                    close(side, star + power(2.0, alpha) * (n - k - 1) as f64);
                }
                for a in [1.5, 2.0] {
                    let side = st_star_side_bound(n, k, &sei(a)).unwrap().value;
                    let star = star_global_bound(k + 1, &sei(a)).unwrap().value;
                    close(side, star + 2.0 * a * a * (n - k - 1) as f64);
                }
            }
        }
    }

    #[test]
    fn big_vertex_bound_at_b1_is_the_star() {
        for n in 6..=14 {
            for index in [r0(-0.5), r0(3.0), sei(2.0)] {
                close(
                    bt_bound_one_big_vertex(n, 1, &index).unwrap().value,
                    star_global_bound(n, &index).unwrap().value,
                );
            }
        }
    }

    #[test]
    fn balanced_sequence_is_balanced() {
        for n in 6..=20 {
            for n1 in 3..=n - 2 {
                let d = Theorem::PtBalanced.equality_degseq(n, Some(n1)).unwrap();
                let internal: Vec<_> = d.as_slice().iter().filter(|&&x| x > 1).collect();
                assert!(*internal[0] - *internal[internal.len() - 1] <= 1);
                assert_eq!(d.pendent(), n1);
            }
        }
    }

    #[test]
    fn theorem_names_parse() {
        for t in Theorem::ALL {
            assert_eq!(t.cli_name().parse::<Theorem>().unwrap(), t);
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("bogus".parse::<Theorem>().is_err());
    }
}
