//! Side-by-side evaluation of both sides of each identity.
//!
//! When both sides are exact truncated sums they are compared exactly.
//! Otherwise the sides agree when `|lhs − rhs| ≤ tail_lhs + tail_rhs + tolerance`.

use itertools::Itertools;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eval::{EvalResult, Tail, TruncationConfig, Value};
use crate::formal::{self, GiambelliVariant, HookVariant};
use crate::mzv::ContentAssignment;
use crate::par;
use crate::partition::Partition;
use crate::scalar::Rational;
use crate::schur::{self, AntiHookArgs, VariableTableau};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Identity {
    /// `ζ_{(p+1,1^q)}` against the first hook formula.
    Hook1 { p: usize, q: usize },
    /// `ζ_{(p+1,1^q)}` against the second hook formula.
    Hook2 { p: usize, q: usize },
    /// `ζ_λ` against the determinant of hook values.
    Giambelli { shape: Partition },
    /// `ζ_λ` against the expanded permutation sum.
    Thm41 { shape: Partition },
    /// As `Thm41`, expanded with the second hook formula.
    Thm41Reversed { shape: Partition },
    /// `ζ_λ` against the root-system expression.
    Thm42 { shape: Partition },
    /// Skew anti-hook against the alternating ζ★·ζ sum.
    Antihook(AntiHookArgs),
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::Hook1 { .. } => "hook1",
            Identity::Hook2 { .. } => "hook2",
            Identity::Giambelli { .. } => "giambelli",
            Identity::Thm41 { .. } => "thm41",
            Identity::Thm41Reversed { .. } => "thm41-reversed",
            Identity::Thm42 { .. } => "thm42",
            Identity::Antihook(_) => "antihook",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Exact,
    Tolerance,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: &'static str,
    pub lhs: EvalResult,
    pub rhs: EvalResult,
    pub difference: Value,
    pub comparison: Comparison,
    /// `tail_lhs + tail_rhs + tolerance`; zero for exact comparisons.
    pub allowed: f64,
    pub equal: bool,
}

pub fn compare(identity: &'static str, lhs: EvalResult, rhs: EvalResult, tolerance: f64) -> VerifyReport {
    if let (Value::Exact(a), Value::Exact(b)) = (&lhs.value, &rhs.value) {
        let d = a - b;
        let equal = d == Rational::from_integer(0.into());
        return VerifyReport {
            identity,
            difference: Value::Exact(d),
            lhs,
            rhs,
            comparison: Comparison::Exact,
            allowed: 0.0,
            equal,
        };
    }
    let d = lhs.approx() - rhs.approx();
    let allowed = lhs.tail_bound() + rhs.tail_bound() + tolerance;
    VerifyReport {
        identity,
        difference: Value::Float(d),
        lhs,
        rhs,
        comparison: Comparison::Tolerance,
        allowed,
        equal: d.norm() <= allowed,
    }
}

/// Determinant of evaluated entries. In floating mode each permutation
/// term contributes `Π(|f| + b) − Π|f|` to the estimate.
fn det_of_results(grid: &[Vec<EvalResult>]) -> EvalResult {
    let n = grid.len();
    let m = grid.first().and_then(|r| r.first()).map_or(0, |e| e.truncation);
    let perms: Vec<(i64, Vec<usize>)> = (0..n)
        .permutations(n)
        .map(|s| {
            let inv = (0..n).tuple_combinations().filter(|&(i, j)| s[i] > s[j]).count();
            (if inv % 2 == 0 { 1 } else { -1 }, s)
        })
        .collect();
    let exact: Option<Vec<Vec<&Rational>>> =
        grid.iter().map(|row| row.iter().map(|e| e.value.as_exact()).collect()).collect();
    if let Some(q) = exact {
        let mut acc = Rational::from_integer(0.into());
        for (sgn, s) in &perms {
            let mut t = Rational::from_integer((*sgn).into());
            for (k, &c) in s.iter().enumerate() {
                t *= q[c][k];
            }
            acc += t;
        }
        return EvalResult::exact(acc, m);
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    for (sgn, s) in &perms {
        let mut t = Complex64::new(*sgn as f64, 0.0);
        let (mut with, mut without) = (1.0, 1.0);
        for (k, &c) in s.iter().enumerate() {
            let e = &grid[c][k];
            t *= e.approx();
            with *= e.approx().norm() + e.tail_bound();
            without *= e.approx().norm();
        }
        value += t;
        bound += with - without;
    }
    let heuristic = grid.iter().flatten().any(|e| matches!(e.tail, Tail::Heuristic(_)));
    let tail = if heuristic { Tail::Heuristic(bound) } else { Tail::Rigorous(bound) };
    EvalResult::float(value, tail, m)
}

fn straight(shape: Partition, z: &ContentAssignment, cfg: &TruncationConfig) -> Result<EvalResult> {
    schur::eval_schur(&VariableTableau::content_straight(shape, z.clone()), cfg)
}

/// Evaluates both sides of `id`; `z` is ignored by the anti-hook identity.
pub fn verify(id: &Identity, z: &ContentAssignment, cfg: &TruncationConfig) -> Result<VerifyReport> {
    let (lhs, rhs) = match id {
        Identity::Hook1 { p, q } | Identity::Hook2 { p, q } => {
            let v = if matches!(id, Identity::Hook1 { .. }) { HookVariant::Hook1 } else { HookVariant::Hook2 };
            let lhs = straight(Partition::hook(*p, *q), z, cfg)?;
            (lhs, formal::evaluate_expr(&formal::expand_hook(*p, *q, v), z, cfg)?)
        }
        Identity::Giambelli { shape } => {
            let lhs = straight(shape.clone(), z, cfg)?;
            let grid = formal::giambelli_det_expr(shape)?;
            let cells: Vec<_> = grid.iter().flatten().copied().collect();
            let vals = par::map_slice(&cells, |h| straight(h.shape(), z, cfg));
            let mut it = vals.into_iter();
            let mut rows = Vec::with_capacity(grid.len());
            for row in &grid {
                rows.push(it.by_ref().take(row.len()).collect::<Result<Vec<_>>>()?);
            }
            (lhs, det_of_results(&rows))
        }
        Identity::Thm41 { shape } | Identity::Thm41Reversed { shape } => {
            let v = if matches!(id, Identity::Thm41 { .. }) {
                GiambelliVariant::Standard
            } else {
                GiambelliVariant::Reversed
            };
            let lhs = straight(shape.clone(), z, cfg)?;
            (lhs, formal::evaluate_expr(&formal::expand_giambelli(shape, v)?, z, cfg)?)
        }
        Identity::Thm42 { shape } => (straight(shape.clone(), z, cfg)?, formal::eval_thm42(shape, z, cfg)?),
        Identity::Antihook(a) => {
            (schur::eval_skew_antihook_lhs(a, cfg)?, schur::eval_skew_antihook_rhs(a, cfg)?)
        }
    };
    Ok(compare(id.name(), lhs, rhs, cfg.tolerance))
}
