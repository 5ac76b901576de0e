//! The zeroth-order general Randić index `R0_alpha = sum d^alpha` and the
//! variable sum exdeg index `SEI_a = sum d * a^d`, plus the parameter regimes
//! that decide which way each extremal result points.

use std::fmt;

use serde::Serialize;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Relative tolerance for comparing index values.
pub const REL_TOL: f64 = 1e-9;
/// Absolute floor under [`REL_TOL`].
pub const ABS_TOL: f64 = 1e-12;

/// Lower end of the open window `((1 + sqrt 33) / 16, 1)` on which
/// `8a^3 - 9a^2 + 1 < 0`.
pub fn sei_window_lower() -> f64 {
    (1.0 + 33f64.sqrt()) / 16.0
}

pub fn approx_eq(x: f64, y: f64) -> bool {
    (x - y).abs() <= (REL_TOL * x.abs().max(y.abs())).max(ABS_TOL)
}

/// Sign of `x`, treating values within tolerance of zero (relative to
/// `scale`) as zero.
pub fn tolerant_sign(x: f64, scale: f64) -> i8 {
    if x.abs() <= (REL_TOL * scale.abs()).max(ABS_TOL) {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IndexKind {
    #[serde(rename = "R0")]
    R0,
    #[serde(rename = "SEI")]
    Sei,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::R0 => "R0",
            IndexKind::Sei => "SEI",
        })
    }
}

/// An index together with its validated parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Index {
    kind: IndexKind,
    param: f64,
}

impl Index {
    /// `R0_alpha`; `alpha` must be finite and not 0 or 1.
    pub fn r0(alpha: f64) -> Result<Self> {
        validate_alpha(alpha)?;
        Ok(Index {
            kind: IndexKind::R0,
            param: alpha,
        })
    }

    /// `SEI_a`; `a` must be finite, positive and not 1.
    pub fn sei(a: f64) -> Result<Self> {
        validate_a(a)?;
        Ok(Index {
            kind: IndexKind::Sei,
            param: a,
        })
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn param(&self) -> f64 {
        self.param
    }

    /// Contribution `f(d)` of one vertex of degree `d`.
    pub fn term(&self, d: usize) -> f64 {
        let x = d as f64;
        match self.kind {
            IndexKind::R0 => power(x, self.param),
            IndexKind::Sei => x * self.param.powi(d as i32),
        }
    }

    pub fn of_tree(&self, t: &Tree) -> f64 {
        (0..t.n()).map(|v| self.term(t.degree(v))).sum()
    }

    pub fn of_degrees(&self, d: &DegreeSequence) -> f64 {
        d.as_slice().iter().map(|&x| self.term(x)).sum()
    }

    pub fn regime(&self) -> IndexRegime {
        match self.kind {
            IndexKind::R0 => IndexRegime::R0(r0_regime(self.param)),
            IndexKind::Sei => IndexRegime::Sei(sei_regime(self.param)),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            IndexKind::R0 => write!(f, "R0[alpha={}]", self.param),
            IndexKind::Sei => write!(f, "SEI[a={}]", self.param),
        }
    }
}

/// `x^alpha` as `exp(alpha ln x)`; `x >= 1` for every tree degree.
pub fn power(x: f64, alpha: f64) -> f64 {
    (alpha * x.ln()).exp()
}

fn validate_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha == 0.0 || alpha == 1.0 {
        return Err(Error::Parameter(format!(
            "alpha must be a finite real other than 0 and 1, got {alpha}"
        )));
    }
    Ok(())
}

fn validate_a(a: f64) -> Result<()> {
    if !a.is_finite() || a <= 0.0 || a == 1.0 {
        return Err(Error::Parameter(format!(
            "a must be a finite positive real other than 1, got {a}"
        )));
    }
    Ok(())
}

/// Both index parameters at once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexParams {
    pub alpha: f64,
    pub a: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum R0Regime {
    /// `alpha < 0` or `alpha > 1`
    Convex,
    /// `0 < alpha < 1`
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeiRegime {
    /// `a > 1`
    AboveOne,
    /// `(1 + sqrt 33)/16 < a < 1`
    Window,
    /// `0 < a <= (1 + sqrt 33)/16`
    Low,
}

impl SeiRegime {
    pub fn below_one(self) -> bool {
        !matches!(self, SeiRegime::AboveOne)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Regime {
    pub r0: R0Regime,
    pub sei: SeiRegime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum IndexRegime {
    R0(R0Regime),
    Sei(SeiRegime),
}

impl fmt::Display for IndexRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexRegime::R0(R0Regime::Convex) => "convex",
            IndexRegime::R0(R0Regime::Concave) => "concave",
            IndexRegime::Sei(SeiRegime::AboveOne) => "above_one",
            IndexRegime::Sei(SeiRegime::Window) => "window",
            IndexRegime::Sei(SeiRegime::Low) => "low",
        })
    }
}

fn r0_regime(alpha: f64) -> R0Regime {
    if alpha > 0.0 && alpha < 1.0 {
        R0Regime::Concave
    } else {
        R0Regime::Convex
    }
}

fn sei_regime(a: f64) -> SeiRegime {
    if a > 1.0 {
        SeiRegime::AboveOne
    } else if a > sei_window_lower() {
        SeiRegime::Window
    } else {
        SeiRegime::Low
    }
}

pub fn classify_regime(params: IndexParams) -> Result<Regime> {
    validate_alpha(params.alpha)?;
    validate_a(params.a)?;
    Ok(Regime {
        r0: r0_regime(params.alpha),
        sei: sei_regime(params.a),
    })
}

pub fn r0_general(t: &Tree, alpha: f64) -> Result<f64> {
    Ok(Index::r0(alpha)?.of_tree(t))
}

pub fn sei(t: &Tree, a: f64) -> Result<f64> {
    Ok(Index::sei(a)?.of_tree(t))
}

pub fn r0_of_degseq(d: &DegreeSequence, alpha: f64) -> Result<f64> {
    Ok(Index::r0(alpha)?.of_degrees(d))
}

pub fn sei_of_degseq(d: &DegreeSequence, a: f64) -> Result<f64> {
    Ok(Index::sei(a)?.of_degrees(d))
}

/// `a(8a^3 - 9a^2 + 1)`, the SEI change when two degree-4 vertices each hand
/// one pendent vertex to a path end.
pub fn two_fours_sei_delta(a: f64) -> f64 {
    a * (8.0 * a.powi(3) - 9.0 * a.powi(2) + 1.0)
}
