//! Euler-Zagier multiple zeta values and their star variants.
//!
//! Argument order follows the nested sums: `s[0]` belongs to the smallest
//! index, `s[r-1]` to the outermost one,
//!
//! ```text
//! ζ (s_1..s_r) = Σ_{0 < m_1 <  .. <  m_r} m_1^{-s_1} .. m_r^{-s_r}
//! ζ★(s_1..s_r) = Σ_{0 < m_1 <= .. <= m_r} m_1^{-s_1} .. m_r^{-s_r}
//! ```
//!
//! Truncation at `M` restricts `m_r ≤ M`. All truncated sums are computed
//! with one running partial sum per depth, so the cost is `O(M·r)`.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel;
use crate::error::{Error, Result};
use crate::par;
use crate::eval::{EvalResult, Mode, Tail, TruncationConfig, Value};
use crate::scalar::{Rational, Scalar};

/// Values of the content variables `z_k`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ContentAssignment {
    values: BTreeMap<i64, Complex64>,
}

impl ContentAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_real(pairs: impl IntoIterator<Item = (i64, f64)>) -> Self {
        ContentAssignment {
            values: pairs.into_iter().map(|(k, v)| (k, Complex64::new(v, 0.0))).collect(),
        }
    }

    pub fn with(mut self, k: i64, z: impl Into<Complex64>) -> Self {
        self.values.insert(k, z.into());
        self
    }

    pub fn set(&mut self, k: i64, z: impl Into<Complex64>) {
        self.values.insert(k, z.into());
    }

    pub fn get(&self, k: i64) -> Result<Complex64> {
        self.values.get(&k).copied().ok_or(Error::Unassigned(k))
    }

    /// Exponent sequence for a sequence of content indices.
    pub fn resolve(&self, indices: &[i64]) -> Result<Vec<Complex64>> {
        indices.iter().map(|&k| self.get(k)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ZRepr {
    Real(f64),
    Pair([f64; 2]),
}

impl Serialize for ContentAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<i64, [f64; 2]> = self.values.iter().map(|(&k, v)| (k, [v.re, v.im])).collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ContentAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        // keys arrive as strings from JSON, also when buffered by a tagged enum
        let m = BTreeMap::<String, ZRepr>::deserialize(d)?;
        let values = m
            .into_iter()
            .map(|(k, v)| {
                let k: i64 = k.trim().parse().map_err(|_| D::Error::custom(format!("bad content index `{k}`")))?;
                let z = match v {
                    ZRepr::Real(re) => Complex64::new(re, 0.0),
                    ZRepr::Pair([re, im]) => Complex64::new(re, im),
                };
                Ok((k, z))
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(ContentAssignment { values })
    }
}

/// `Σ_{j=r-i+1}^{r} Re(s_j) > i` for every `1 ≤ i ≤ r`. Same region for ζ and ζ★.
pub fn check_ez_domain(s: &[Complex64], _star: bool) -> bool {
    let mut acc = 0.0;
    for (i, z) in s.iter().rev().enumerate() {
        acc += z.re;
        if acc <= (i + 1) as f64 {
            return false;
        }
    }
    true
}

/// Truncated sums at each checkpoint (ascending), from a single pass.
///
/// The empty argument list gives `1` at every checkpoint.
pub fn partial_sums<S: Scalar>(exps: &[S::Exp], star: bool, checkpoints: &[u64]) -> Vec<S> {
    prefix_sums::<S>(exps, star, checkpoints).into_iter().map(|mut p| p.pop().unwrap()).collect()
}

/// For each checkpoint, the truncated sums of every prefix `s_1..s_k`, `k = 0..=r`.
fn prefix_sums<S: Scalar>(exps: &[S::Exp], star: bool, checkpoints: &[u64]) -> Vec<Vec<S>> {
    let r = exps.len();
    let mut p = vec![S::zero(); r + 1];
    p[0] = S::one();
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = 0;
    let last = checkpoints.last().copied().unwrap_or(0);
    while next < checkpoints.len() && checkpoints[next] == 0 {
        out.push(p.clone());
        next += 1;
    }
    for m in 1..=last {
        let b = S::int_base(m);
        if star {
            for k in 1..=r {
                let t = S::inv_pow(b, &exps[k - 1]) * p[k - 1].clone();
                p[k] += t;
            }
        } else {
            for k in (1..=r).rev() {
                let t = S::inv_pow(b, &exps[k - 1]) * p[k - 1].clone();
                p[k] += t;
            }
        }
        while next < checkpoints.len() && checkpoints[next] == m {
            out.push(p.clone());
            next += 1;
        }
    }
    out
}

pub fn truncated<S: Scalar>(exps: &[S::Exp], m: u64, star: bool) -> S {
    partial_sums::<S>(exps, star, &[m]).pop().unwrap()
}

/// Exponents in exact form when they are all non-negative integers.
pub fn exact_exponents(s: &[Complex64]) -> Option<Vec<u32>> {
    s.iter().map(|&z| <Rational as Scalar>::exponent(z).ok()).collect()
}

/// The truncated sum with `m_r ≤ M`; exact when every exponent is a
/// non-negative integer, floating otherwise.
pub fn eval_ez_truncated(s: &[Complex64], m: u64, star: bool) -> Value {
    match exact_exponents(s) {
        Some(e) => Value::Exact(truncated::<Rational>(&e, m, star)),
        None => Value::Float(truncated::<Complex64>(s, m, star)),
    }
}

/// Evaluates ζ(s) or ζ★(s) at truncation `cfg.m` with an error bound.
pub fn eval_ez(s: &[Complex64], cfg: &TruncationConfig, star: bool) -> Result<EvalResult> {
    cfg.validate()?;
    if s.is_empty() {
        return Err(Error::Domain("empty argument list".into()));
    }
    if !check_ez_domain(s, star) {
        return Err(Error::Convergence(format!(
            "{}({}) is outside the convergence domain",
            if star { "ζ★" } else { "ζ" },
            fmt_args(s)
        )));
    }
    let m = cfg.m;
    let mut notes = Vec::new();
    if cfg.mode == Mode::Exact {
        match exact_exponents(s) {
            Some(e) => return Ok(EvalResult::exact(truncated::<Rational>(&e, m, star), m)),
            None => notes.push("exact mode needs non-negative integer exponents; evaluated in floating mode".to_string()),
        }
    }
    if cfg.accelerate {
        if accel::applicable(s) && m >= accel::MIN_M {
            let ms = accel::checkpoints(m);
            let vals = partial_sums::<Complex64>(s, star, &ms);
            let (v, est) = accel::extrapolate(&ms, &vals);
            let mut r = EvalResult::float(v, Tail::Heuristic(est), m);
            r.notes = notes;
            return Ok(r);
        }
        notes.push("extrapolation needs integer exponents ≥ 2 and M ≥ 128; plain truncation used".to_string());
    }
    let v = truncated::<Complex64>(s, m, star);
    let sig: Vec<f64> = s.iter().map(|z| z.re).collect();
    let mut r = EvalResult::float(v, tail_bound(&sig, m, star), m);
    r.notes = notes;
    Ok(r)
}

/// Bound on `Σ_{m_r > M}` of the absolute series, given the real parts `sig`.
///
/// When every inner real part exceeds 1 the bound is recursive:
/// `T_k = M^{1-σ_k}/(σ_k-1) · (A_{k-1} + T_{k-1})` with `A_k` the truncated
/// absolute sum of the first `k` arguments. Otherwise the inner sum up to
/// `n` is bounded by a product of harmonic-type sums `C·n^β·(1 + ln n)^ℓ`
/// and the tail by the corresponding integral. Both are rigorous; if the
/// integral diverges the crude first-order rule is returned as heuristic.
pub fn tail_bound(sig: &[f64], m: u64, star: bool) -> Tail {
    let r = sig.len();
    if r == 0 {
        return Tail::Rigorous(0.0);
    }
    let mf = m as f64;
    let sr = sig[r - 1];
    let inner = &sig[..r - 1];
    let abs_exps: Vec<Complex64> = sig.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let prefixes = prefix_sums::<Complex64>(&abs_exps, star, &[m]).pop().unwrap();

    if sr > 1.0 && inner.iter().all(|&x| x > 1.0) {
        let mut t = 0.0;
        for k in 1..=r {
            let a = prefixes[k - 1].re;
            t = mf.powf(1.0 - sig[k - 1]) / (sig[k - 1] - 1.0) * (a + t);
        }
        return Tail::Rigorous(t);
    }

    // I(n) ≤ C · n^β · (1 + ln n)^ℓ
    let mut c = 1.0;
    let mut beta = 0.0;
    let mut logs = 0i32;
    for &x in inner {
        if x > 1.0 {
            let h = truncated::<Complex64>(&[Complex64::new(x, 0.0)], m, false).re;
            c *= h + mf.powf(1.0 - x) / (x - 1.0);
        } else if x == 1.0 {
            logs += 1;
        } else {
            beta += 1.0 - x;
            c *= if x >= 0.0 { 1.0 / (1.0 - x) } else { 1.0 };
        }
    }
    let gamma = sr - beta;
    if gamma <= 1.0 {
        let crude = mf.powf(1.0 - sr) / (sr - 1.0).max(f64::EPSILON)
            * prefixes[r - 1].re
            * (1.0 + mf.ln()).powi(r as i32 - 1);
        return Tail::Heuristic(crude);
    }
    let f = |x: f64| x.powf(-gamma) * (1.0 + x.ln()).powi(logs);
    // f decreases once γ(1 + ln x) ≥ ℓ; sum the head directly before that.
    let start = (((logs as f64 / gamma) - 1.0).exp().ceil() as u64).max(m);
    let head: f64 = (m + 1..=start).map(|n| f(n as f64)).sum();
    let a = gamma - 1.0;
    let l = 1.0 + (start as f64).ln();
    let mut series = 0.0;
    let mut term = 1.0;
    for i in 0..=logs {
        if i > 0 {
            term *= a * l / i as f64;
        }
        series += term;
    }
    let fact: f64 = (1..=logs).map(|i| i as f64).product();
    let integral = (start as f64).powf(-a) * fact * series / a.powi(logs + 1);
    Tail::Rigorous(c * (head + integral))
}

/// `coeff · Π ζ^{(★)}(args)`; a factor is `(star, args)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductTerm {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

type FactorKey = (bool, Vec<(u64, u64)>);

/// A factor: `(star, args)`.
pub type Factor = (bool, Vec<Complex64>);

fn factor_key(star: bool, s: &[Complex64]) -> FactorKey {
    (star, s.iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect())
}

/// Distinct factors across all terms, in first-seen order, and each term's
/// factor indices into that list.
fn distinct_factors(terms: &[ProductTerm]) -> (Vec<Factor>, Vec<Vec<usize>>) {
    let mut seen: HashMap<FactorKey, usize> = HashMap::new();
    let mut list = Vec::new();
    let idx = terms
        .iter()
        .map(|t| {
            t.factors
                .iter()
                .map(|(star, s)| {
                    *seen.entry(factor_key(*star, s)).or_insert_with(|| {
                        list.push((*star, s.clone()));
                        list.len() - 1
                    })
                })
                .collect()
        })
        .collect();
    (list, idx)
}

fn combine_terms<S: Scalar>(terms: &[ProductTerm], idx: &[Vec<usize>], vals: &[S]) -> S {
    let mut acc = S::zero();
    for (t, ix) in terms.iter().zip(idx) {
        let mut p = S::from_i64(t.coeff);
        for &k in ix {
            p = p * vals[k].clone();
        }
        acc += p;
    }
    acc
}

/// Evaluates `Σ_t coeff_t Π ζ^{(★)}(...)` with each factor truncated at `cfg.m`.
///
/// In floating mode a term with factor values `f_i` and bounds `b_i`
/// contributes `|c|·(Π(|f_i| + b_i) − Π|f_i|)` to the estimate.
pub fn eval_product_sum(terms: &[ProductTerm], cfg: &TruncationConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let m = cfg.m;
    let (factors, idx) = distinct_factors(terms);
    if factors.iter().any(|(_, s)| s.is_empty()) {
        return Err(Error::Domain("empty argument list in a factor".into()));
    }
    let mut notes = Vec::new();
    if cfg.mode == Mode::Exact {
        let exact: Option<Vec<Vec<u32>>> = factors.iter().map(|(_, s)| exact_exponents(s)).collect();
        match exact {
            Some(e) => {
                let vals: Vec<Rational> = par::map_range(0..e.len() as u64, |k| {
                    truncated::<Rational>(&e[k as usize], m, factors[k as usize].0)
                });
                return Ok(EvalResult::exact(combine_terms(terms, &idx, &vals), m));
            }
            None => notes.push("exact mode needs non-negative integer exponents; evaluated in floating mode".to_string()),
        }
    }
    // truncated sums need no convergence; the floating estimates do
    for (star, s) in &factors {
        if !check_ez_domain(s, *star) {
            return Err(Error::Convergence(format!(
                "factor {}({}) is outside the convergence domain",
                if *star { "ζ★" } else { "ζ" },
                fmt_args(s)
            )));
        }
    }
    if cfg.accelerate {
        if factors.iter().all(|(_, s)| accel::applicable(s)) && m >= accel::MIN_M {
            let ms = accel::checkpoints(m);
            let per_factor: Vec<Vec<Complex64>> =
                par::map_slice(&factors, |(star, s)| partial_sums::<Complex64>(s, *star, &ms));
            let vals: Vec<Complex64> = (0..ms.len())
                .map(|c| {
                    let at: Vec<Complex64> = per_factor.iter().map(|f| f[c]).collect();
                    combine_terms(terms, &idx, &at)
                })
                .collect();
            let (v, est) = accel::extrapolate(&ms, &vals);
            let mut r = EvalResult::float(v, Tail::Heuristic(est), m);
            r.notes = notes;
            return Ok(r);
        }
        notes.push("extrapolation needs integer exponents ≥ 2 and M ≥ 128; plain truncation used".to_string());
    }
    let evals: Vec<(Complex64, Tail)> = par::map_slice(&factors, |(star, s)| {
        let v = truncated::<Complex64>(s, m, *star);
        let sig: Vec<f64> = s.iter().map(|z| z.re).collect();
        (v, tail_bound(&sig, m, *star))
    });
    let vals: Vec<Complex64> = evals.iter().map(|e| e.0).collect();
    let value = combine_terms(terms, &idx, &vals);
    let total: f64 = terms
        .iter()
        .zip(&idx)
        .map(|(t, ix)| {
            let with: f64 = ix.iter().map(|&k| evals[k].0.norm() + evals[k].1.bound()).product();
            let without: f64 = ix.iter().map(|&k| evals[k].0.norm()).product();
            t.coeff.unsigned_abs() as f64 * (with - without)
        })
        .sum();
    let heuristic = evals.iter().any(|e| matches!(e.1, Tail::Heuristic(_)));
    let tail = if heuristic { Tail::Heuristic(total) } else { Tail::Rigorous(total) };
    let mut r = EvalResult::float(value, tail, m);
    r.notes = notes;
    Ok(r)
}

pub(crate) fn fmt_args(s: &[Complex64]) -> String {
    s.iter()
        .map(|z| if z.im == 0.0 { format!("{}", z.re) } else { format!("{z}") })
        .collect::<Vec<_>>()
        .join(", ")
}
