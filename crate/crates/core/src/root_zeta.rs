//! Zeta-functions of the root system `A_r` and their modified forms.
//!
//! ```text
//! ζ_r(s, A_r)          = Σ_{m_k ≥ 1} Π_{i<j} (m_i + .. + m_{j-1})^{-s(i,j)}
//! ζ•_{r,d}(s, A_r)     = same, m_1..m_d from 0, factors with zero base omitted
//! ζ^H_r(s, x, A_r)     = Σ_{m_k ≥ 1} Π_{i<j} (x + m_i + .. + m_{j-1})^{-s(i,j)}
//! ζ•,H_{r,d}(s, x, A_r) = same, m_1..m_d from 0
//! ```
//!
//! Variables are stored in the canonical order `s(1,2), s(2,3), .., s(r,r+1),
//! s(1,3), .., s(1,r+1)`: by height `j - i`, then by `i`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Mode, Tail, TruncationConfig};
use crate::mzv::{check_ez_domain, fmt_args};
use crate::par;
use crate::scalar::{Rational, Scalar};

/// Root variables for `A_r`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootZetaArgs {
    pub rank: usize,
    /// Canonical order, or `s(1,2), .., s(1,r+1)` when `first_row_only`.
    pub values: Vec<Complex64>,
    #[serde(default)]
    pub first_row_only: bool,
}

impl RootZetaArgs {
    pub fn full(rank: usize, values: Vec<Complex64>) -> Result<Self> {
        let a = RootZetaArgs { rank, values, first_row_only: false };
        a.validate()?;
        Ok(a)
    }

    /// `s(1, j+1) = values[j-1]` for `1 ≤ j ≤ r`; every other root variable is zero.
    pub fn first_row(values: Vec<Complex64>) -> Self {
        RootZetaArgs { rank: values.len(), values, first_row_only: true }
    }

    pub fn validate(&self) -> Result<()> {
        let want = if self.first_row_only { self.rank } else { num_roots(self.rank) };
        if self.values.len() != want {
            return Err(Error::Domain(format!(
                "A_{} needs {want} variables, got {}",
                self.rank,
                self.values.len()
            )));
        }
        Ok(())
    }

    /// `s(i, j)` for `1 ≤ i < j ≤ r + 1`.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        assert!(1 <= i && i < j && j <= self.rank + 1);
        if self.first_row_only {
            if i == 1 {
                self.values[j - 2]
            } else {
                Complex64::new(0.0, 0.0)
            }
        } else {
            self.values[root_position(self.rank, i, j)]
        }
    }

    /// The same function with every root variable listed.
    pub fn to_full(&self) -> RootZetaArgs {
        let r = self.rank;
        let mut values = vec![Complex64::new(0.0, 0.0); num_roots(r)];
        for i in 1..=r {
            for j in i + 1..=r + 1 {
                values[root_position(r, i, j)] = self.get(i, j);
            }
        }
        RootZetaArgs { rank: r, values, first_row_only: false }
    }

    /// Convergence check. For first-row vectors the sum is a (shifted)
    /// nested series and the Euler-Zagier region applies; otherwise the
    /// check requires `Re s(i,j) ≥ 0` and, for each position `k`, that the
    /// real parts of the roots covering `k` add up to more than 1.
    pub fn check_domain(&self) -> bool {
        if self.first_row_only {
            return check_ez_domain(&self.values, true);
        }
        let r = self.rank;
        if self.values.iter().any(|s| s.re < 0.0) {
            return false;
        }
        (1..=r).all(|k| {
            let mut acc = 0.0;
            for i in 1..=k {
                for j in k + 1..=r + 1 {
                    acc += self.get(i, j).re;
                }
            }
            acc > 1.0
        })
    }
}

pub fn num_roots(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

/// Index of `s(i, j)` in the canonical order.
pub fn root_position(rank: usize, i: usize, j: usize) -> usize {
    let h = j - i;
    let before: usize = (1..h).map(|g| rank + 1 - g).sum();
    before + i - 1
}

/// Which index tuples are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootTruncation {
    /// Every `m_k ≤ M`.
    Box(u64),
    /// Every base is at most `M`, i.e. `x + m_1 + .. + m_r ≤ M`. This is the
    /// tableau-entry convention when the sum arises from a hook.
    Entries(u64),
}

/// Shift `x > 0` of the `H` variants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftParam(pub f64);

impl ShiftParam {
    pub fn new(x: f64) -> Result<Self> {
        if x > 0.0 && x.is_finite() {
            Ok(ShiftParam(x))
        } else {
            Err(Error::Domain(format!("shift x must be positive, got {x}")))
        }
    }
}

/// Which of the four functions, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RootVariant {
    A,
    Bullet { d: usize },
    H { x: f64 },
    BulletH { d: usize, x: f64 },
}

impl RootVariant {
    fn zero_based(&self) -> usize {
        match *self {
            RootVariant::A | RootVariant::H { .. } => 0,
            RootVariant::Bullet { d } | RootVariant::BulletH { d, .. } => d,
        }
    }

    fn shift(&self) -> Option<f64> {
        match *self {
            RootVariant::H { x } | RootVariant::BulletH { x, .. } => Some(x),
            _ => None,
        }
    }
}

/// The truncated sum in the backend `S`.
///
/// First-row vectors use a prefix-sum recurrence over the running base;
/// full vectors enumerate every index tuple, in parallel over `m_1`.
pub fn truncated_sum<S: Scalar>(
    args: &RootZetaArgs,
    variant: RootVariant,
    trunc: RootTruncation,
) -> Result<S> {
    args.validate()?;
    let d = variant.zero_based();
    if d > args.rank {
        return Err(Error::Domain(format!("d = {d} exceeds the rank {}", args.rank)));
    }
    let x = variant.shift().map(ShiftParam::new).transpose()?.map_or(0.0, |s| s.0);
    let base0 = if x > 0.0 { S::shift_base(x)? } else { S::int_base(0) };
    // bound on m_1 + .. + m_r
    let limit = match trunc {
        RootTruncation::Box(m) => Limit::PerIndex(m),
        RootTruncation::Entries(m) => {
            if x > m as f64 {
                return Ok(S::zero());
            }
            Limit::Total((m as f64 - x).floor() as u64)
        }
    };
    let exps = args.values.iter().map(|&s| S::exponent(s)).collect::<Result<Vec<_>>>()?;
    if args.first_row_only {
        Ok(first_row_sum::<S>(&exps, d, base0, limit))
    } else {
        Ok(generic_sum::<S>(args.rank, &exps, d, base0, limit))
    }
}

#[derive(Clone, Copy)]
enum Limit {
    PerIndex(u64),
    Total(u64),
}

/// `Σ Π_i (x + m_1 + .. + m_i)^{-z_i}` by a recurrence on `n = m_1 + .. + m_i`.
fn first_row_sum<S: Scalar>(exps: &[S::Exp], d: usize, base0: S::Base, limit: Limit) -> S {
    let r = exps.len();
    if r == 0 {
        return S::one();
    }
    let (n_max, window) = match limit {
        Limit::PerIndex(m) => (m * r as u64, Some(m)),
        Limit::Total(t) => (t, None),
    };
    let len = n_max as usize + 1;
    // f[n]: weighted sum over prefixes with m_1 + .. + m_i = n
    let mut f = vec![S::zero(); len];
    f[0] = S::one();
    for (i, e) in exps.iter().enumerate() {
        let lo = if i < d { 0u64 } else { 1 };
        let mut cum = Vec::with_capacity(len + 1);
        cum.push(S::zero());
        for v in &f {
            let next = cum.last().unwrap().clone() + v.clone();
            cum.push(next);
        }
        let mut g = vec![S::zero(); len];
        for n in lo..=n_max {
            // previous partial sum t ranges over [n - hi, n - lo]
            let top = (n - lo) as usize + 1;
            let bottom = match window {
                Some(hi) if n > hi => (n - hi) as usize,
                _ => 0,
            };
            let s = cum[top].clone() - cum[bottom].clone();
            if s.is_zero() {
                continue;
            }
            let b = S::add_base(base0, n);
            g[n as usize] = if S::base_is_zero(b) { s } else { S::inv_pow(b, e) * s };
        }
        f = g;
    }
    let mut acc = S::zero();
    for v in f {
        acc += v;
    }
    acc
}

fn generic_sum<S: Scalar>(rank: usize, exps: &[S::Exp], d: usize, base0: S::Base, limit: Limit) -> S {
    if rank == 0 {
        return S::one();
    }
    let roots: Vec<(usize, usize, S::Exp)> = (1..=rank)
        .flat_map(|i| (i + 1..=rank + 1).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, exps[root_position(rank, i, j)].clone()))
        .filter(|(_, _, e)| !S::exp_is_zero(e))
        .collect();
    let lo: Vec<u64> = (0..rank).map(|k| if k < d { 0 } else { 1 }).collect();
    let walk = Walk::<S> { rank, roots: &roots, lo: &lo, limit, base0 };
    let first_hi = walk.hi(0, 0);
    if first_hi < lo[0] {
        return S::zero();
    }
    par::sum_range(lo[0]..first_hi + 1, |m1| {
        let mut prefix = vec![0u64; rank + 1];
        prefix[1] = m1;
        walk.descend(1, &mut prefix)
    })
}

struct Walk<'a, S: Scalar> {
    rank: usize,
    roots: &'a [(usize, usize, S::Exp)],
    lo: &'a [u64],
    limit: Limit,
    base0: S::Base,
}

impl<S: Scalar> Walk<'_, S> {
    /// Largest admissible `m_{k+1}` given `m_1 + .. + m_k = used`.
    fn hi(&self, k: usize, used: u64) -> u64 {
        match self.limit {
            Limit::PerIndex(m) => m,
            Limit::Total(t) => {
                let rest_min: u64 = self.lo[k + 1..].iter().sum();
                t.saturating_sub(used + rest_min)
            }
        }
    }

    /// `prefix[k] = m_1 + .. + m_k` is filled for the first `k` indices.
    fn descend(&self, k: usize, prefix: &mut Vec<u64>) -> S {
        if k == self.rank {
            return self.weight(prefix);
        }
        let hi = self.hi(k, prefix[k]);
        let mut acc = S::zero();
        if hi < self.lo[k] {
            return acc;
        }
        for m in self.lo[k]..=hi {
            prefix[k + 1] = prefix[k] + m;
            acc += self.descend(k + 1, prefix);
        }
        acc
    }

    fn weight(&self, prefix: &[u64]) -> S {
        let mut w = S::one();
        for (i, j, e) in self.roots {
            let n = prefix[j - 1] - prefix[i - 1];
            let b = S::add_base(self.base0, n);
            if !S::base_is_zero(b) {
                w = w * S::inv_pow(b, e);
            }
        }
        w
    }
}

fn check_args(args: &RootZetaArgs, cfg: &TruncationConfig) -> Result<Vec<String>> {
    cfg.validate()?;
    args.validate()?;
    if !args.check_domain() {
        return Err(Error::Convergence(format!(
            "root-system zeta with variables ({}) fails the convergence check",
            fmt_args(&args.values)
        )));
    }
    let mut notes = Vec::new();
    if !args.first_row_only {
        notes.push("convergence region for general root variables is heuristic".to_string());
    }
    Ok(notes)
}

/// Evaluates one of the four functions with box truncation at `cfg.m`.
///
/// Exact mode gives the truncated sum when every variable (and the shift) is
/// an integer. Floating mode reports the heuristic estimate
/// `2·|v(M) − v(⌊M/2⌋)|`.
pub fn eval_root_zeta(
    args: &RootZetaArgs,
    variant: RootVariant,
    cfg: &TruncationConfig,
) -> Result<EvalResult> {
    let mut notes = check_args(args, cfg)?;
    let m = cfg.m;
    if cfg.mode == Mode::Exact {
        match truncated_sum::<Rational>(args, variant, RootTruncation::Box(m)) {
            Ok(q) => {
                let mut r = EvalResult::exact(q, m);
                r.notes = notes;
                return Ok(r);
            }
            Err(Error::NotExact(why)) => notes.push(format!("{why}; evaluated in floating mode")),
            Err(e) => return Err(e),
        }
    }
    if cfg.accelerate {
        notes.push("extrapolation is not offered for root-system sums; plain truncation used".into());
    }
    let v = truncated_sum::<Complex64>(args, variant, RootTruncation::Box(m))?;
    let half = truncated_sum::<Complex64>(args, variant, RootTruncation::Box(m / 2))?;
    let mut r = EvalResult::float(v, Tail::Heuristic(2.0 * (v - half).norm()), m);
    r.notes = notes;
    Ok(r)
}

pub fn eval_zeta_a(args: &RootZetaArgs, cfg: &TruncationConfig) -> Result<EvalResult> {
    eval_root_zeta(args, RootVariant::A, cfg)
}

pub fn eval_zeta_bullet(args: &RootZetaArgs, d: usize, cfg: &TruncationConfig) -> Result<EvalResult> {
    eval_root_zeta(args, RootVariant::Bullet { d }, cfg)
}

pub fn eval_zeta_h(args: &RootZetaArgs, x: ShiftParam, cfg: &TruncationConfig) -> Result<EvalResult> {
    eval_root_zeta(args, RootVariant::H { x: x.0 }, cfg)
}

pub fn eval_zeta_bullet_h(
    args: &RootZetaArgs,
    d: usize,
    x: ShiftParam,
    cfg: &TruncationConfig,
) -> Result<EvalResult> {
    eval_root_zeta(args, RootVariant::BulletH { d, x: x.0 }, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv;
    use crate::eval::Value;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn c(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn inv(b: u64, e: u32) -> Rational {
        <Rational as Scalar>::inv_pow(b, &e)
    }

    #[test]
    fn canonical_order() {
        // r = 3: s12 s23 s34 s13 s24 s14
        let order = [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)];
        for (k, &(i, j)) in order.iter().enumerate() {
            assert_eq!(root_position(3, i, j), k);
        }
        assert_eq!(num_roots(3), 6);
    }

    #[test]
    fn wrong_variable_count() {
        assert!(RootZetaArgs::full(2, c(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn rank_one_is_riemann() {
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        let r = eval_zeta_a(&a, &TruncationConfig::exact(3)).unwrap();
        assert_eq!(r.value, Value::Exact(q(49, 36)));
        let r = eval_zeta_a(&a, &TruncationConfig::floating(20_000)).unwrap();
        let target = std::f64::consts::PI.powi(2) / 6.0;
        assert!(r.brackets(Complex64::new(target, 0.0)), "{r:?}");
    }

    #[test]
    fn witten_a2_doubling() {
        let a = RootZetaArgs::full(2, c(&[2.0, 2.0, 2.0])).unwrap();
        let r = eval_zeta_a(&a, &TruncationConfig::floating(300)).unwrap();
        let r2 = eval_zeta_a(&a, &TruncationConfig::floating(600)).unwrap();
        assert!((r2.approx() - r.approx()).norm() < r.tail_bound());
    }

    #[test]
    fn first_row_a2_is_double_zeta() {
        // m_1^{-2}(m_1+m_2)^{-2}; with m_1 + m_2 ≤ M this is exactly ζ_{≤M}(2,2)
        let a = RootZetaArgs::first_row(c(&[2.0, 2.0]));
        for m in 2..9 {
            let v: Rational = truncated_sum(&a, RootVariant::A, RootTruncation::Entries(m)).unwrap();
            assert_eq!(v, mzv::truncated::<Rational>(&[2, 2], m, false));
        }
        // box truncation: brute force over m_1, m_2 ≤ 3
        let v: Rational = truncated_sum(&a, RootVariant::A, RootTruncation::Box(3)).unwrap();
        let mut want = Rational::zero();
        for m1 in 1..=3u64 {
            for m2 in 1..=3u64 {
                want += inv(m1, 2) * inv(m1 + m2, 2);
            }
        }
        assert_eq!(v, want);
    }

    #[test]
    fn bullet_rank_one_omits_zero_factor() {
        // m = 0 contributes the empty product 1
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        let r = eval_zeta_bullet(&a, 1, &TruncationConfig::exact(2)).unwrap();
        assert_eq!(r.value, Value::Exact(Rational::one() + q(5, 4)));
    }

    #[test]
    fn bullet_d_zero_is_plain() {
        let a = RootZetaArgs::full(2, c(&[2.0, 3.0, 1.0])).unwrap();
        let x = eval_zeta_bullet(&a, 0, &TruncationConfig::exact(4)).unwrap();
        let y = eval_zeta_a(&a, &TruncationConfig::exact(4)).unwrap();
        assert_eq!(x.value, y.value);
    }

    #[test]
    fn bullet_rank_two_brute_force() {
        // m_1 ∈ {0,1,2}, m_2 ∈ {1,2}; factor m_1^{-2} dropped when m_1 = 0
        let a = RootZetaArgs::first_row(c(&[2.0, 3.0]));
        let r = eval_zeta_bullet(&a, 1, &TruncationConfig::exact(2)).unwrap();
        let mut want = Rational::zero();
        for m1 in 0..=2u64 {
            for m2 in 1..=2u64 {
                let f1 = if m1 == 0 { Rational::one() } else { inv(m1, 2) };
                want += f1 * inv(m1 + m2, 3);
            }
        }
        assert_eq!(r.value, Value::Exact(want));
    }

    #[test]
    fn bullet_d_out_of_range() {
        let a = RootZetaArgs::first_row(c(&[2.0, 3.0]));
        assert!(matches!(
            eval_zeta_bullet(&a, 3, &TruncationConfig::exact(2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn shifted_rank_one() {
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        let r = eval_zeta_h(&a, ShiftParam(1.0), &TruncationConfig::floating(50_000)).unwrap();
        let target = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
        assert!(r.brackets(Complex64::new(target, 0.0)), "{r:?}");

        let r = eval_zeta_h(&a, ShiftParam(0.5), &TruncationConfig::floating(1000)).unwrap();
        let direct: f64 = (1..=1000).map(|m| (0.5 + m as f64).powi(-2)).sum();
        assert!((r.approx().re - direct).abs() < 1e-13);
    }

    #[test]
    fn shifted_single_term() {
        let a = RootZetaArgs::first_row(c(&[2.0, 3.0]));
        let r = eval_zeta_h(&a, ShiftParam(1.5), &TruncationConfig::floating(1)).unwrap();
        let want = 2.5f64.powi(-2) * 3.5f64.powi(-3);
        assert!((r.approx().re - want).abs() < 1e-16);
    }

    #[test]
    fn shifted_requires_positive_x() {
        assert!(ShiftParam::new(0.0).is_err());
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        assert!(eval_root_zeta(&a, RootVariant::H { x: -1.0 }, &TruncationConfig::floating(5)).is_err());
    }

    #[test]
    fn bullet_shifted_examples() {
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        let r = eval_zeta_bullet_h(&a, 1, ShiftParam(1.0), &TruncationConfig::floating(50_000)).unwrap();
        let target = std::f64::consts::PI.powi(2) / 6.0;
        assert!(r.brackets(Complex64::new(target, 0.0)), "{r:?}");

        let a = RootZetaArgs::first_row(c(&[2.0, 2.0]));
        let r = eval_zeta_bullet_h(&a, 2, ShiftParam(1.0), &TruncationConfig::exact(2)).unwrap();
        let mut want = Rational::zero();
        for m1 in 0..=2u64 {
            for m2 in 0..=2u64 {
                want += inv(1 + m1, 2) * inv(1 + m1 + m2, 2);
            }
        }
        assert_eq!(r.value, Value::Exact(want));

        let x = eval_zeta_bullet_h(&a, 0, ShiftParam(2.0), &TruncationConfig::exact(3)).unwrap();
        let y = eval_zeta_h(&a, ShiftParam(2.0), &TruncationConfig::exact(3)).unwrap();
        assert_eq!(x.value, y.value);
    }

    #[test]
    fn first_row_matches_full_vector() {
        let a = RootZetaArgs::first_row(c(&[1.0, 2.0, 2.0]));
        let full = a.to_full();
        for variant in [
            RootVariant::A,
            RootVariant::Bullet { d: 2 },
            RootVariant::H { x: 2.0 },
            RootVariant::BulletH { d: 3, x: 1.0 },
        ] {
            for trunc in [RootTruncation::Box(3), RootTruncation::Entries(6)] {
                let x: Rational = truncated_sum(&a, variant, trunc).unwrap();
                let y: Rational = truncated_sum(&full, variant, trunc).unwrap();
                assert_eq!(x, y, "{variant:?} {trunc:?}");
            }
        }
    }

    #[test]
    fn domain_checks() {
        assert!(RootZetaArgs::first_row(c(&[2.0, 2.0])).check_domain());
        // inner sum diverges even though each position is covered by > 1
        assert!(!RootZetaArgs::first_row(c(&[0.2, 1.5])).check_domain());
        assert!(RootZetaArgs::full(2, c(&[1.0, 1.0, 1.0])).unwrap().check_domain());
        assert!(!RootZetaArgs::full(2, c(&[1.0, -1.0, 1.0])).unwrap().check_domain());
    }

    #[test]
    fn exact_falls_back_for_fractional_shift() {
        let a = RootZetaArgs::full(1, c(&[2.0])).unwrap();
        let r = eval_zeta_h(&a, ShiftParam(0.5), &TruncationConfig::exact(10)).unwrap();
        assert!(matches!(r.value, Value::Float(_)));
        assert!(!r.notes.is_empty());
    }
}
