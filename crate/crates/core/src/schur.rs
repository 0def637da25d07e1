//! Schur multiple zeta-functions of (skew) shapes.
//!
//! The truncated sum over tableaux with entries `≤ M` is computed by a
//! transfer recurrence over the entry value: the cells holding entries
//! `≤ v` form a partition `ν` with `μ ⊆ ν ⊆ λ`, and the cells holding
//! exactly `v` form the horizontal strip `ν / ν_prev`. One step per value
//! `v` updates the weight of every intermediate shape, so the cost is
//! linear in `M` and every truncation `≤ M` is available along the way.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Mode, Tail, TruncationConfig, Value};
use crate::mzv::{self, ContentAssignment, ProductTerm};
use crate::partition::{Cell, Partition, SkewShape};
use crate::scalar::{Rational, Scalar};

/// Exponents attached to the cells of a shape.
#[derive(Clone, Debug, PartialEq)]
pub enum Exponents {
    /// `s_ij = z_{j-i}`.
    Content(ContentAssignment),
    /// Row `i` lists the exponents of its skew cells, left to right.
    Cells(Vec<Vec<Complex64>>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VariableTableau {
    pub shape: SkewShape,
    pub exponents: Exponents,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VariableTableauRepr {
    shape: SkewShape,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    content: Option<ContentAssignment>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cells: Option<Vec<Vec<Complex64>>>,
}

impl Serialize for VariableTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (content, cells) = match &self.exponents {
            Exponents::Content(a) => (Some(a.clone()), None),
            Exponents::Cells(c) => (None, Some(c.clone())),
        };
        VariableTableauRepr { shape: self.shape.clone(), content, cells }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VariableTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = VariableTableauRepr::deserialize(d)?;
        match (r.content, r.cells) {
            (Some(a), None) => Ok(VariableTableau::content(r.shape, a)),
            (None, Some(c)) => VariableTableau::per_cell(r.shape, c).map_err(D::Error::custom),
            _ => Err(D::Error::custom("exactly one of `content` or `cells` is required")),
        }
    }
}

impl VariableTableau {
    pub fn content(shape: SkewShape, z: ContentAssignment) -> Self {
        VariableTableau { shape, exponents: Exponents::Content(z) }
    }

    pub fn content_straight(shape: Partition, z: ContentAssignment) -> Self {
        Self::content(SkewShape::straight(shape), z)
    }

    pub fn per_cell(shape: SkewShape, rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let ok = rows.len() == shape.rows()
            && rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == shape.outer.row(i + 1) - shape.inner.row(i + 1));
        if !ok {
            return Err(Error::Domain(format!("exponent rows do not match the shape {}", shape)));
        }
        Ok(VariableTableau { shape, exponents: Exponents::Cells(rows) })
    }

    pub fn exponent(&self, c: Cell) -> Result<Complex64> {
        match &self.exponents {
            Exponents::Content(z) => z.get(c.content()),
            Exponents::Cells(rows) => Ok(rows[c.row - 1][c.col - 1 - self.shape.inner.row(c.row)]),
        }
    }

    /// `(cell, exponent)` in row-major order.
    pub fn cell_exponents(&self) -> Result<Vec<(Cell, Complex64)>> {
        self.shape.cells().into_iter().map(|c| Ok((c, self.exponent(c)?))).collect()
    }
}

/// Membership in `W_λ`: `Re s ≥ 1` off the corners and `Re s > 1` on them.
/// Skew shapes use the corners of the skew diagram.
pub fn check_w_lambda(vt: &VariableTableau) -> Result<bool> {
    let corners = vt.shape.corners();
    for (c, s) in vt.cell_exponents()? {
        let ok = if corners.contains(&c) { s.re > 1.0 } else { s.re >= 1.0 };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Intermediate shapes and horizontal-strip moves between them.
struct StripGraph {
    /// From index, to index, exponent slots of the added cells.
    moves: Vec<(usize, usize, Vec<usize>)>,
    /// Number of intermediate shapes; index 0 is `μ`, the last is `λ`.
    states: usize,
}

impl StripGraph {
    fn new(shape: &SkewShape, slot: &HashMap<Cell, usize>) -> Self {
        let rows = shape.rows();
        let outer: Vec<usize> = (1..=rows).map(|i| shape.outer.row(i)).collect();
        let inner: Vec<usize> = (1..=rows).map(|i| shape.inner.row(i)).collect();

        let mut shapes = Vec::new();
        fn grow(i: usize, cur: &mut Vec<usize>, lo: &[usize], hi: &[usize], out: &mut Vec<Vec<usize>>) {
            if i == lo.len() {
                out.push(cur.clone());
                return;
            }
            let cap = if i == 0 { hi[0] } else { hi[i].min(cur[i - 1]) };
            for v in lo[i]..=cap {
                cur.push(v);
                grow(i + 1, cur, lo, hi, out);
                cur.pop();
            }
        }
        grow(0, &mut Vec::new(), &inner, &outer, &mut shapes);
        // sort by size so μ comes first and λ last
        shapes.sort_by_key(|s| (s.iter().sum::<usize>(), s.clone()));
        let index: HashMap<Vec<usize>, usize> =
            shapes.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();

        let mut moves = Vec::new();
        for (from, nu) in shapes.iter().enumerate() {
            // ν'_i ∈ [ν_i, min(λ_i, ν_{i-1})]
            let lo = nu.clone();
            let hi: Vec<usize> = (0..rows)
                .map(|i| if i == 0 { outer[0] } else { outer[i].min(nu[i - 1]) })
                .collect();
            let mut targets = Vec::new();
            grow(0, &mut Vec::new(), &lo, &hi, &mut targets);
            for t in targets {
                if t == *nu {
                    continue;
                }
                let added = (0..rows)
                    .flat_map(|i| (nu[i] + 1..=t[i]).map(move |j| Cell::new(i + 1, j)))
                    .map(|c| slot[&c])
                    .collect();
                moves.push((from, index[&t], added));
            }
        }
        // in-place update needs sources in decreasing size
        moves.sort_by_key(|mv| std::cmp::Reverse(mv.0));
        StripGraph { moves, states: shapes.len() }
    }
}

/// Truncated sums `Σ_{T ∈ SSYT, entries ≤ M} Π m_ij^{-s_ij}` for each checkpoint `M`.
pub fn partial_sums<S: Scalar>(vt: &VariableTableau, checkpoints: &[u64]) -> Result<Vec<S>> {
    let cells = vt.cell_exponents()?;
    let mut distinct: Vec<Complex64> = Vec::new();
    let mut slot = HashMap::new();
    for (c, s) in &cells {
        let k = match distinct.iter().position(|t| t == s) {
            Some(k) => k,
            None => {
                distinct.push(*s);
                distinct.len() - 1
            }
        };
        slot.insert(*c, k);
    }
    let exps = distinct.iter().map(|&s| S::exponent(s)).collect::<Result<Vec<_>>>()?;
    let graph = StripGraph::new(&vt.shape, &slot);
    let top = graph.states - 1;

    let mut dp = vec![S::zero(); graph.states];
    dp[0] = S::one();
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = 0;
    while next < checkpoints.len() && checkpoints[next] == 0 {
        out.push(dp[top].clone());
        next += 1;
    }
    let last = checkpoints.last().copied().unwrap_or(0);
    let mut pow = vec![S::zero(); exps.len()];
    for v in 1..=last {
        let b = S::int_base(v);
        for (p, e) in pow.iter_mut().zip(&exps) {
            *p = S::inv_pow(b, e);
        }
        for (from, to, added) in &graph.moves {
            if dp[*from].is_zero() {
                continue;
            }
            let mut w = dp[*from].clone();
            for &k in added {
                w = w * pow[k].clone();
            }
            dp[*to] += w;
        }
        while next < checkpoints.len() && checkpoints[next] == v {
            out.push(dp[top].clone());
            next += 1;
        }
    }
    Ok(out)
}

/// Σ over tableaux with entries `≤ m`; exact when all exponents are
/// non-negative integers.
pub fn eval_schur_truncated(vt: &VariableTableau, m: u64) -> Result<Value> {
    match partial_sums::<Rational>(vt, &[m]) {
        Ok(mut v) => Ok(Value::Exact(v.pop().unwrap())),
        Err(Error::NotExact(_)) => Ok(Value::Float(partial_sums::<Complex64>(vt, &[m])?.pop().unwrap())),
        Err(e) => Err(e),
    }
}

/// Evaluates the Schur multiple zeta-function at truncation `cfg.m`.
///
/// The floating estimate is `2·|v(M) − v(⌊M/2⌋)|` and is heuristic; with
/// `accelerate` the value is extrapolated from `M/16 .. M` instead.
pub fn eval_schur(vt: &VariableTableau, cfg: &TruncationConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !check_w_lambda(vt)? {
        return Err(Error::Convergence(format!(
            "exponents on {} are outside W_λ",
            vt.shape
        )));
    }
    let m = cfg.m;
    let mut notes = Vec::new();
    if !vt.shape.is_straight() {
        notes.push("convergence region for skew shapes is heuristic".to_string());
    }
    let exps: Vec<Complex64> = vt.cell_exponents()?.into_iter().map(|(_, s)| s).collect();
    if cfg.mode == Mode::Exact {
        match partial_sums::<Rational>(vt, &[m]) {
            Ok(mut v) => {
                let mut r = EvalResult::exact(v.pop().unwrap(), m);
                r.notes = notes;
                return Ok(r);
            }
            Err(Error::NotExact(why)) => notes.push(format!("{why}; evaluated in floating mode")),
            Err(e) => return Err(e),
        }
    }
    if cfg.accelerate {
        if accel::applicable(&exps) && m >= accel::MIN_M {
            let ms = accel::checkpoints(m);
            let vals = partial_sums::<Complex64>(vt, &ms)?;
            let (v, est) = accel::extrapolate(&ms, &vals);
            let mut r = EvalResult::float(v, Tail::Heuristic(est), m);
            r.notes = notes;
            return Ok(r);
        }
        notes.push("extrapolation needs integer exponents ≥ 2 and M ≥ 128; plain truncation used".into());
    }
    let v = partial_sums::<Complex64>(vt, &[m / 2, m])?;
    let mut r = EvalResult::float(v[1], Tail::Heuristic(2.0 * (v[1] - v[0]).norm()), m);
    r.notes = notes;
    Ok(r)
}

/// Exponents of the anti-hook `((k+1)^{ℓ+1}) / (k^ℓ)`: a bottom row
/// `s_00 .. s_k0` and, above its last cell, a column `s_k1 .. s_kℓ`
/// (listed bottom to top).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntiHookArgs {
    pub bottom: Vec<Complex64>,
    pub column: Vec<Complex64>,
}

impl AntiHookArgs {
    pub fn new(bottom: Vec<Complex64>, column: Vec<Complex64>) -> Result<Self> {
        if bottom.len() < 2 || column.is_empty() {
            return Err(Error::Domain("anti-hook needs k ≥ 1 and ℓ ≥ 1".into()));
        }
        Ok(AntiHookArgs { bottom, column })
    }

    pub fn k(&self) -> usize {
        self.bottom.len() - 1
    }

    pub fn l(&self) -> usize {
        self.column.len()
    }

    pub fn shape(&self) -> SkewShape {
        let (k, l) = (self.k(), self.l());
        SkewShape::new(Partition::rectangle(l + 1, k + 1), Partition::rectangle(l, k)).unwrap()
    }

    /// The skew shape with its exponents, top row first.
    pub fn tableau(&self) -> VariableTableau {
        let mut rows: Vec<Vec<Complex64>> = self.column.iter().rev().map(|&s| vec![s]).collect();
        rows.push(self.bottom.clone());
        VariableTableau::per_cell(self.shape(), rows).unwrap()
    }

    /// `Σ_{i=0}^{k} (-1)^{k-i} ζ★(s_00, .., s_{i-1,0}) ζ(s_kℓ, .., s_k1, s_k0, s_{k-1,0}, .., s_i0)`.
    pub fn rhs_terms(&self) -> Vec<ProductTerm> {
        let k = self.k();
        (0..=k)
            .map(|i| {
                let sign = if (k - i).is_multiple_of(2) { 1 } else { -1 };
                let star: Vec<Complex64> = self.bottom[..i].to_vec();
                let mut strict: Vec<Complex64> = self.column.iter().rev().copied().collect();
                strict.extend(self.bottom[i..].iter().rev());
                let mut factors = Vec::new();
                if !star.is_empty() {
                    factors.push((true, star));
                }
                factors.push((false, strict));
                ProductTerm { coeff: sign, factors }
            })
            .collect()
    }
}

pub fn eval_skew_antihook_rhs(args: &AntiHookArgs, cfg: &TruncationConfig) -> Result<EvalResult> {
    mzv::eval_product_sum(&args.rhs_terms(), cfg)
}

pub fn eval_skew_antihook_lhs(args: &AntiHookArgs, cfg: &TruncationConfig) -> Result<EvalResult> {
    eval_schur(&args.tableau(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn z(pairs: &[(i64, f64)]) -> ContentAssignment {
        ContentAssignment::from_real(pairs.iter().copied())
    }

    #[test]
    fn w_lambda_examples() {
        let vt = VariableTableau::content_straight(part(&[2, 2]), z(&[(0, 1.0), (1, 1.0), (-1, 1.0)]));
        assert!(!check_w_lambda(&vt).unwrap());
        let vt = VariableTableau::content_straight(part(&[1]), z(&[(0, 2.0)]));
        assert!(check_w_lambda(&vt).unwrap());
        let vt = VariableTableau::content_straight(part(&[2, 1]), z(&[(0, 1.0), (1, 2.0), (-1, 2.0)]));
        assert!(check_w_lambda(&vt).unwrap());
    }

    #[test]
    fn unassigned_content_is_reported() {
        let vt = VariableTableau::content_straight(part(&[2]), z(&[(0, 2.0)]));
        assert_eq!(check_w_lambda(&vt), Err(Error::Unassigned(1)));
    }

    #[test]
    fn truncated_examples() {
        let vt = VariableTableau::content_straight(part(&[1]), z(&[(0, 2.0)]));
        assert_eq!(eval_schur_truncated(&vt, 2).unwrap(), Value::Exact(q(5, 4)));
        let vt = VariableTableau::content_straight(part(&[1, 1]), z(&[(0, 2.0), (-1, 2.0)]));
        assert_eq!(eval_schur_truncated(&vt, 3).unwrap(), Value::Exact(q(7, 18)));
        let vt = VariableTableau::content_straight(part(&[2]), z(&[(0, 2.0), (1, 2.0)]));
        assert_eq!(eval_schur_truncated(&vt, 2).unwrap(), Value::Exact(q(21, 16)));
    }

    #[test]
    fn empty_shape_is_one() {
        let vt = VariableTableau::content_straight(Partition::empty(), ContentAssignment::new());
        assert_eq!(eval_schur_truncated(&vt, 4).unwrap(), Value::Exact(q(1, 1)));
    }

    #[test]
    fn matches_enumeration() {
        let vt = VariableTableau::per_cell(
            SkewShape::new(part(&[3, 2, 2]), part(&[1])).unwrap(),
            vec![
                vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
                vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 0.0)],
                vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
            ],
        )
        .unwrap();
        for m in 1..=5u32 {
            let mut want = Rational::from_integer(0.into());
            for t in vt.shape.enumerate_ssyt(m) {
                let mut w = Rational::from_integer(1.into());
                for (c, v) in t.iter() {
                    let e = <Rational as Scalar>::exponent(vt.exponent(c).unwrap()).unwrap();
                    w *= <Rational as Scalar>::inv_pow(v as u64, &e);
                }
                want += w;
            }
            assert_eq!(eval_schur_truncated(&vt, m as u64).unwrap(), Value::Exact(want));
        }
    }

    #[test]
    fn outside_w_lambda_is_an_error() {
        let vt = VariableTableau::content_straight(part(&[1]), z(&[(0, 1.0)]));
        assert!(matches!(eval_schur(&vt, &TruncationConfig::floating(10)), Err(Error::Convergence(_))));
    }

    #[test]
    fn classical_values_within_estimate() {
        let pi = std::f64::consts::PI;
        let cases = [
            (vec![1], vec![(0, 2.0)], pi.powi(2) / 6.0),
            (vec![1, 1], vec![(0, 2.0), (-1, 2.0)], pi.powi(4) / 120.0),
            (vec![2], vec![(0, 2.0), (1, 2.0)], 7.0 * pi.powi(4) / 360.0),
        ];
        for (shape, zs, want) in cases {
            let vt = VariableTableau::content_straight(part(&shape), z(&zs));
            let r = eval_schur(&vt, &TruncationConfig::floating(1000)).unwrap();
            assert_eq!(r.tail.kind(), "heuristic");
            assert!(r.brackets(Complex64::new(want, 0.0)), "{shape:?}");
        }
    }

    #[test]
    fn antihook_layout() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let a = AntiHookArgs::new(vec![c(2.0), c(3.0)], vec![c(4.0)]).unwrap();
        assert_eq!(a.shape().to_string(), "(2,2)/(1)");
        let t = a.tableau();
        assert_eq!(t.exponent(Cell::new(1, 2)).unwrap(), c(4.0));
        assert_eq!(t.exponent(Cell::new(2, 1)).unwrap(), c(2.0));
        // k = ℓ = 1: −ζ(s11, s10, s00) + ζ★(s00) ζ(s11, s10)
        let terms = a.rhs_terms();
        assert_eq!(terms[0].coeff, -1);
        assert_eq!(terms[0].factors, vec![(false, vec![c(4.0), c(3.0), c(2.0)])]);
        assert_eq!(terms[1].coeff, 1);
        assert_eq!(terms[1].factors, vec![(true, vec![c(2.0)]), (false, vec![c(4.0), c(3.0)])]);
    }

    #[test]
    fn antihook_m_one_is_zero() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let a = AntiHookArgs::new(vec![c(2.0), c(2.0)], vec![c(2.0)]).unwrap();
        let cfg = TruncationConfig::exact(1);
        let l = eval_skew_antihook_lhs(&a, &cfg).unwrap();
        let r = eval_skew_antihook_rhs(&a, &cfg).unwrap();
        assert_eq!(l.value, Value::Exact(q(0, 1)));
        assert_eq!(r.value, Value::Exact(q(0, 1)));
    }

    #[test]
    fn json_forms() {
        let vt: VariableTableau =
            serde_json::from_str(r#"{"shape":[2,1],"content":{"0":[2,0],"1":3,"-1":[2,0]}}"#).unwrap();
        assert_eq!(vt.exponent(Cell::new(1, 2)).unwrap(), Complex64::new(3.0, 0.0));
        let vt: VariableTableau =
            serde_json::from_str(r#"{"shape":{"outer":[2,2],"inner":[1]},"cells":[[[4,0]],[[2,0],[3,0]]]}"#)
                .unwrap();
        assert_eq!(vt.exponent(Cell::new(2, 2)).unwrap(), Complex64::new(3.0, 0.0));
        assert!(serde_json::from_str::<VariableTableau>(r#"{"shape":[1]}"#).is_err());
        assert!(serde_json::from_str::<VariableTableau>(r#"{"shape":[1],"content":{},"extra":1}"#).is_err());
    }
}
