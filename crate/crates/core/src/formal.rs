//! Formal sums of products of ζ / ζ★ symbols in the content variables.
//!
//! A symbol records only the kind and the content indices of its arguments,
//! so `ζ★(z_{-1}, z_0, z_1)` is `Star [-1, 0, 1]`. The constant 1 is the
//! empty product; there is no empty-argument symbol.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Mode, Tail, TruncationConfig};
use crate::mzv::{self, ContentAssignment, ProductTerm};
use crate::par;
use crate::partition::Partition;
use crate::root_zeta::{self, RootTruncation, RootVariant, RootZetaArgs};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaKind {
    Strict,
    Star,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZetaSymbol {
    pub kind: ZetaKind,
    /// Content indices, innermost summation index first.
    pub args: Vec<i64>,
}

impl ZetaSymbol {
    pub fn strict(args: Vec<i64>) -> Self {
        ZetaSymbol { kind: ZetaKind::Strict, args }
    }

    pub fn star(args: Vec<i64>) -> Self {
        ZetaSymbol { kind: ZetaKind::Star, args }
    }

    pub fn is_star(&self) -> bool {
        self.kind == ZetaKind::Star
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormalTerm {
    pub coeff: i64,
    /// Sorted; repeated symbols are repeated factors.
    pub factors: Vec<ZetaSymbol>,
}

impl FormalTerm {
    pub fn new(coeff: i64, mut factors: Vec<ZetaSymbol>) -> Self {
        factors.sort();
        FormalTerm { coeff, factors }
    }
}

/// A normalized sum of terms: distinct factor multisets, non-zero
/// coefficients, ordered by factor count and then by the factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FormalExpr {
    terms: Vec<FormalTerm>,
}

impl<'de> Deserialize<'de> for FormalExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<FormalTerm>::deserialize(d)?;
        if terms.iter().flat_map(|t| &t.factors).any(|f| f.args.is_empty()) {
            return Err(D::Error::custom("a ζ symbol needs at least one argument"));
        }
        Ok(normalize(terms))
    }
}

/// Collects like terms, drops zero coefficients and sorts.
pub fn normalize(terms: impl IntoIterator<Item = FormalTerm>) -> FormalExpr {
    let mut acc: BTreeMap<(usize, Vec<ZetaSymbol>), i64> = BTreeMap::new();
    for t in terms {
        let t = FormalTerm::new(t.coeff, t.factors);
        *acc.entry((t.factors.len(), t.factors)).or_insert(0) += t.coeff;
    }
    FormalExpr {
        terms: acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((_, factors), coeff)| FormalTerm { coeff, factors })
            .collect(),
    }
}

impl FormalExpr {
    pub fn zero() -> Self {
        FormalExpr::default()
    }

    pub fn one() -> Self {
        FormalExpr { terms: vec![FormalTerm { coeff: 1, factors: vec![] }] }
    }

    pub fn symbol(s: ZetaSymbol) -> Self {
        FormalExpr { terms: vec![FormalTerm { coeff: 1, factors: vec![s] }] }
    }

    pub fn terms(&self) -> &[FormalTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: i64) -> FormalExpr {
        normalize(self.terms.iter().map(|t| FormalTerm { coeff: t.coeff * c, factors: t.factors.clone() }))
    }

    pub fn to_latex(&self) -> String {
        latex_terms(&self.terms)
    }
}

impl Add for &FormalExpr {
    type Output = FormalExpr;
    fn add(self, o: &FormalExpr) -> FormalExpr {
        normalize(self.terms.iter().chain(&o.terms).cloned())
    }
}

impl Sub for &FormalExpr {
    type Output = FormalExpr;
    fn sub(self, o: &FormalExpr) -> FormalExpr {
        self + &(-o)
    }
}

impl Neg for &FormalExpr {
    type Output = FormalExpr;
    fn neg(self) -> FormalExpr {
        self.scale(-1)
    }
}

impl Mul for &FormalExpr {
    type Output = FormalExpr;
    fn mul(self, o: &FormalExpr) -> FormalExpr {
        normalize(self.terms.iter().flat_map(|a| {
            o.terms.iter().map(move |b| {
                FormalTerm::new(a.coeff * b.coeff, a.factors.iter().chain(&b.factors).cloned().collect())
            })
        }))
    }
}

fn fmt_symbol(f: &mut impl fmt::Write, s: &ZetaSymbol, latex: bool) -> fmt::Result {
    let head = match (s.kind, latex) {
        (ZetaKind::Strict, false) => "ζ",
        (ZetaKind::Star, false) => "ζ★",
        (ZetaKind::Strict, true) => "\\zeta",
        (ZetaKind::Star, true) => "\\zeta^{\\star}",
    };
    write!(f, "{head}(")?;
    for (i, a) in s.args.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "z_{{{a}}}")?;
    }
    write!(f, ")")
}

fn fmt_terms(f: &mut impl fmt::Write, terms: &[FormalTerm], latex: bool) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, t) in terms.iter().enumerate() {
        let sign = if t.coeff < 0 { "-" } else { "+" };
        match (i, t.coeff < 0) {
            (0, false) => {}
            (0, true) => write!(f, "-")?,
            _ => write!(f, " {sign} ")?,
        }
        let c = t.coeff.unsigned_abs();
        if c != 1 || t.factors.is_empty() {
            write!(f, "{c}")?;
        }
        for (k, s) in t.factors.iter().enumerate() {
            if k > 0 && !latex {
                write!(f, "·")?;
            }
            fmt_symbol(f, s, latex)?;
        }
    }
    Ok(())
}

fn latex_terms(terms: &[FormalTerm]) -> String {
    let mut s = String::new();
    fmt_terms(&mut s, terms, true).unwrap();
    s
}

impl fmt::Display for FormalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, false)
    }
}

impl fmt::Display for ZetaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbol(f, self, false)
    }
}

/// Renders an uncollected term list, e.g. the raw Giambelli expansion.
pub fn terms_to_latex(terms: &[FormalTerm]) -> String {
    latex_terms(terms)
}

pub fn terms_to_string(terms: &[FormalTerm]) -> String {
    let mut s = String::new();
    fmt_terms(&mut s, terms, false).unwrap();
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HookVariant {
    Hook1,
    Hook2,
}

fn asc(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

fn desc(hi: i64, lo: i64) -> Vec<i64> {
    (lo..=hi).rev().collect()
}

/// Term `j` of the hook formula for `(p+1, 1^q)`, with its sign and
/// without an empty trailing factor.
fn hook_term(p: usize, q: usize, j: usize, variant: HookVariant) -> (i64, Vec<ZetaSymbol>) {
    let (p, q, ji) = (p as i64, q as i64, j as i64);
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    let mut f = Vec::with_capacity(2);
    match variant {
        // ζ★(z_{-j}, .., z_p) ζ(z_{-j-1}, .., z_{-q})
        HookVariant::Hook1 => {
            f.push(ZetaSymbol::star(asc(-ji, p)));
            if ji < q {
                f.push(ZetaSymbol::strict(desc(-ji - 1, -q)));
            }
        }
        // ζ(z_j, .., z_{-q}) ζ★(z_{j+1}, .., z_p)
        HookVariant::Hook2 => {
            f.push(ZetaSymbol::strict(desc(ji, -q)));
            if ji < p {
                f.push(ZetaSymbol::star(asc(ji + 1, p)));
            }
        }
    }
    (sign, f)
}

fn hook_range(p: usize, q: usize, variant: HookVariant) -> usize {
    match variant {
        HookVariant::Hook1 => q,
        HookVariant::Hook2 => p,
    }
}

/// The hook formula for `ζ_{(p+1, 1^q)}` as a formal sum.
pub fn expand_hook(p: usize, q: usize, variant: HookVariant) -> FormalExpr {
    normalize((0..=hook_range(p, q, variant)).map(|j| {
        let (c, f) = hook_term(p, q, j, variant);
        FormalTerm::new(c, f)
    }))
}

/// The hook `(p+1, 1^q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookDescriptor {
    pub p: usize,
    pub q: usize,
}

impl HookDescriptor {
    pub fn shape(&self) -> Partition {
        Partition::hook(self.p, self.q)
    }
}

impl fmt::Display for HookDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hook({},{})", self.p, self.q)
    }
}

/// Entry `(i, j)` is the hook `(p_i + 1, 1^{q_j})` in Frobenius coordinates.
pub fn giambelli_det_expr(lambda: &Partition) -> Result<Vec<Vec<HookDescriptor>>> {
    let fr = lambda.to_frobenius()?;
    Ok(fr
        .arms
        .iter()
        .map(|&p| fr.legs.iter().map(|&q| HookDescriptor { p, q }).collect())
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GiambelliVariant {
    /// Every entry expanded by the first hook formula.
    #[default]
    Standard,
    /// Every entry expanded by the second hook formula.
    Reversed,
}

fn sign_of(perm: &[usize]) -> i64 {
    let inv = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inv % 2 == 0 { 1 } else { -1 }
}

/// The permutation-sum expansion before like terms are collected.
///
/// Standard: `Σ_σ sgn σ Σ_{j_k ≤ q_k} Π_k (hook-1 term j_k of (p_{σ(k)}, q_k))`,
/// `N!·Π(q_k+1)` terms. Reversed: `Σ_σ sgn σ Σ_{j_k ≤ p_k} Π_k (hook-2 term
/// j_k of (p_k, q_{σ(k)}))`, `N!·Π(p_k+1)` terms.
pub fn expand_giambelli_raw(lambda: &Partition, variant: GiambelliVariant) -> Result<Vec<FormalTerm>> {
    let fr = lambda.to_frobenius()?;
    let n = fr.rank();
    let mut out = Vec::new();
    for sigma in (0..n).permutations(n) {
        let sgn = sign_of(&sigma);
        let hooks: Vec<(usize, usize)> = match variant {
            GiambelliVariant::Standard => (0..n).map(|k| (fr.arms[sigma[k]], fr.legs[k])).collect(),
            GiambelliVariant::Reversed => (0..n).map(|k| (fr.arms[k], fr.legs[sigma[k]])).collect(),
        };
        let hv = match variant {
            GiambelliVariant::Standard => HookVariant::Hook1,
            GiambelliVariant::Reversed => HookVariant::Hook2,
        };
        let ranges = hooks.iter().map(|&(p, q)| 0..=hook_range(p, q, hv));
        for js in ranges.multi_cartesian_product() {
            let mut coeff = sgn;
            let mut factors = Vec::with_capacity(2 * n);
            for (&(p, q), &j) in hooks.iter().zip(&js) {
                let (c, f) = hook_term(p, q, j, hv);
                coeff *= c;
                factors.extend(f);
            }
            out.push(FormalTerm::new(coeff, factors));
        }
        if n == 0 {
            out.push(FormalTerm::new(sgn, vec![]));
        }
    }
    Ok(out)
}

pub fn expand_giambelli(lambda: &Partition, variant: GiambelliVariant) -> Result<FormalExpr> {
    Ok(normalize(expand_giambelli_raw(lambda, variant)?))
}

/// Determinant by Laplace expansion along the last column.
pub fn det_by_cofactors(grid: &[Vec<FormalExpr>]) -> FormalExpr {
    let n = grid.len();
    if n == 0 {
        return FormalExpr::one();
    }
    let mut acc = FormalExpr::zero();
    for h in 0..n {
        let minor: Vec<Vec<FormalExpr>> = grid
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != h)
            .map(|(_, row)| row[..n - 1].to_vec())
            .collect();
        let t = &grid[h][n - 1] * &det_by_cofactors(&minor);
        acc = if (h + n - 1).is_multiple_of(2) { &acc + &t } else { &acc - &t };
    }
    acc
}

/// The Giambelli grid with every entry replaced by its hook expansion.
pub fn hook_grid(lambda: &Partition, variant: HookVariant) -> Result<Vec<Vec<FormalExpr>>> {
    Ok(giambelli_det_expr(lambda)?
        .into_iter()
        .map(|row| row.into_iter().map(|h| expand_hook(h.p, h.q, variant)).collect())
        .collect())
}

fn product_terms(e: &FormalExpr, z: &ContentAssignment) -> Result<Vec<ProductTerm>> {
    e.terms
        .iter()
        .map(|t| {
            let factors = t
                .factors
                .iter()
                .map(|f| Ok((f.is_star(), z.resolve(&f.args)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(ProductTerm { coeff: t.coeff, factors })
        })
        .collect()
}

/// `Σ coeff · Π factor` with every factor truncated at `cfg.m`.
///
/// Convergence of the factors is only required when a floating value is produced.
pub fn evaluate_expr(e: &FormalExpr, z: &ContentAssignment, cfg: &TruncationConfig) -> Result<EvalResult> {
    for f in e.terms.iter().flat_map(|t| &t.factors) {
        let s = z.resolve(&f.args)?;
        let exact = cfg.mode == Mode::Exact && mzv::exact_exponents(&s).is_some();
        if !exact && !mzv::check_ez_domain(&s, f.is_star()) {
            return Err(Error::Convergence(format!("factor {f} is outside the convergence domain")));
        }
    }
    mzv::eval_product_sum(&product_terms(e, z)?, cfg)
}

type Tables<S> = (Vec<Vec<S>>, Vec<Vec<S>>);

/// Tables `P_p(x)` and `Q_q(x)` for `x = 1..=m` under entry truncation.
fn thm42_tables<S: Scalar>(
    z: &ContentAssignment,
    arms: &[usize],
    legs: &[usize],
    m: u64,
) -> Result<Tables<S>> {
    let table = |vals: Vec<Complex64>, bullet: bool| -> Result<Vec<S>> {
        let r = vals.len();
        let args = RootZetaArgs::first_row(vals);
        let rows: Vec<Result<S>> = par::map_range(1..m + 1, |x| {
            if r == 0 {
                return Ok(S::one());
            }
            let variant = if bullet {
                RootVariant::BulletH { d: r, x: x as f64 }
            } else {
                RootVariant::H { x: x as f64 }
            };
            root_zeta::truncated_sum::<S>(&args, variant, RootTruncation::Entries(m))
        });
        rows.into_iter().collect()
    };
    let plus = arms
        .iter()
        .map(|&p| table(z.resolve(&(1..=p as i64).collect::<Vec<_>>())?, true))
        .collect::<Result<Vec<_>>>()?;
    let minus = legs
        .iter()
        .map(|&q| table(z.resolve(&(1..=q as i64).map(|i| -i).collect::<Vec<_>>())?, false))
        .collect::<Result<Vec<_>>>()?;
    Ok((plus, minus))
}

/// `Σ_{m_11..m_NN ≤ M} (Π m_kk)^{-z_0} Σ_σ sgn σ Π_k P_{p_k}(m_{σ(k)σ(k)}) Π_j Q_{q_j}(m_jj)`.
fn thm42_sum<S: Scalar>(lambda: &Partition, z: &ContentAssignment, m: u64) -> Result<S> {
    let fr = lambda.to_frobenius()?;
    let n = fr.rank();
    let z0 = S::exponent(z.get(0)?)?;
    let (plus, minus) = thm42_tables::<S>(z, &fr.arms, &fr.legs, m)?;
    let lead: Vec<S> = (1..=m).map(|x| S::inv_pow(S::int_base(x), &z0)).collect();
    let perms: Vec<(i64, Vec<usize>)> = (0..n).permutations(n).map(|s| (sign_of(&s), s)).collect();
    let mu = m as usize;
    let total = par::sum_range(0..m, |first| {
        let mut acc = S::zero();
        let mut idx = vec![0usize; n];
        idx[0] = first as usize;
        loop {
            let mut w = S::one();
            for (k, &x) in idx.iter().enumerate() {
                w = w * lead[x].clone() * minus[k][x].clone();
            }
            let mut det = S::zero();
            for (sgn, s) in &perms {
                let mut t = S::from_i64(*sgn);
                for k in 0..n {
                    t = t * plus[k][idx[s[k]]].clone();
                }
                det += t;
            }
            acc += w * det;
            // odometer over idx[1..]
            let mut k = n;
            loop {
                if k <= 1 {
                    return acc;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < mu {
                    break;
                }
                idx[k] = 0;
            }
        }
    });
    Ok(total)
}

/// The root-system expression for `ζ_λ` truncated at `cfg.m`: every outer
/// index and every tableau entry reconstructed from the inner sums is `≤ M`.
///
/// Floating mode reports the heuristic estimate `2·|v(M) − v(⌊M/2⌋)|`.
pub fn eval_thm42(lambda: &Partition, z: &ContentAssignment, cfg: &TruncationConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let fr = lambda.to_frobenius()?;
    let z0 = z.get(0)?;
    if z0.re <= 1.0 {
        return Err(Error::Convergence(format!("Re z_0 = {} must exceed 1", z0.re)));
    }
    let max_p = fr.arms.iter().copied().max().unwrap_or(0) as i64;
    let max_q = fr.legs.iter().copied().max().unwrap_or(0) as i64;
    let plus = z.resolve(&(1..=max_p).collect::<Vec<_>>())?;
    let minus = z.resolve(&(1..=max_q).map(|i| -i).collect::<Vec<_>>())?;
    for (p, s) in fr.arms.iter().map(|&p| (p, &plus[..p])).chain(fr.legs.iter().map(|&q| (q, &minus[..q]))) {
        if p > 0 && !mzv::check_ez_domain(s, true) {
            return Err(Error::Convergence(format!(
                "inner factor with variables ({}) does not converge",
                mzv::fmt_args(s)
            )));
        }
    }
    let m = cfg.m;
    let mut notes = Vec::new();
    if cfg.mode == Mode::Exact {
        match thm42_sum::<Rational>(lambda, z, m) {
            Ok(q) => return Ok(EvalResult::exact(q, m)),
            Err(Error::NotExact(why)) => notes.push(format!("{why}; evaluated in floating mode")),
            Err(e) => return Err(e),
        }
    }
    if cfg.accelerate {
        notes.push("extrapolation is not offered for the root-system expression; plain truncation used".into());
    }
    let v = thm42_sum::<Complex64>(lambda, z, m)?;
    let half = thm42_sum::<Complex64>(lambda, z, m / 2)?;
    let mut r = EvalResult::float(v, Tail::Heuristic(2.0 * (v - half).norm()), m);
    r.notes = notes;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::Value;
    use crate::schur::{self, VariableTableau};
    use num_bigint::BigInt;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn z(pairs: &[(i64, f64)]) -> ContentAssignment {
        ContentAssignment::from_real(pairs.iter().copied())
    }

    fn term(c: i64, f: Vec<ZetaSymbol>) -> FormalTerm {
        FormalTerm::new(c, f)
    }

    #[test]
    fn hook_examples() {
        let e = expand_hook(0, 1, HookVariant::Hook1);
        let want = normalize([
            term(1, vec![ZetaSymbol::star(vec![0]), ZetaSymbol::strict(vec![-1])]),
            term(-1, vec![ZetaSymbol::star(vec![-1, 0])]),
        ]);
        assert_eq!(e, want);
        assert_eq!(expand_hook(0, 0, HookVariant::Hook1).to_string(), "ζ★(z_{0})");
        let e = expand_hook(1, 1, HookVariant::Hook2);
        let want = normalize([
            term(1, vec![ZetaSymbol::strict(vec![0, -1]), ZetaSymbol::star(vec![1])]),
            term(-1, vec![ZetaSymbol::strict(vec![1, 0, -1])]),
        ]);
        assert_eq!(e, want);
    }

    #[test]
    fn grid_examples() {
        let g = giambelli_det_expr(&part(&[2, 2])).unwrap();
        let h = |p, q| HookDescriptor { p, q };
        assert_eq!(g, vec![vec![h(1, 1), h(1, 0)], vec![h(0, 1), h(0, 0)]]);
        let g = giambelli_det_expr(&part(&[6, 4, 4, 2, 2])).unwrap();
        assert_eq!(
            g,
            vec![
                vec![h(5, 4), h(5, 3), h(5, 0)],
                vec![h(2, 4), h(2, 3), h(2, 0)],
                vec![h(1, 4), h(1, 3), h(1, 0)],
            ]
        );
        assert_eq!(giambelli_det_expr(&part(&[1])).unwrap(), vec![vec![h(0, 0)]]);
    }

    #[test]
    fn term_counts_and_identity_sign() {
        for shape in [&[2, 2][..], &[3, 2, 1], &[1], &[4, 3, 3]] {
            let l = part(shape);
            let fr = l.to_frobenius().unwrap();
            let fact: usize = (1..=fr.rank()).product();
            let raw = expand_giambelli_raw(&l, GiambelliVariant::Standard).unwrap();
            assert_eq!(raw.len(), fact * fr.legs.iter().map(|q| q + 1).product::<usize>());
            assert_eq!(raw[0].coeff, 1);
            let rev = expand_giambelli_raw(&l, GiambelliVariant::Reversed).unwrap();
            assert_eq!(rev.len(), fact * fr.arms.iter().map(|p| p + 1).product::<usize>());
            assert_eq!(rev[0].coeff, 1);
        }
        assert_eq!(expand_giambelli(&part(&[1]), GiambelliVariant::Standard).unwrap().to_string(), "ζ★(z_{0})");
    }

    #[test]
    fn normalize_examples() {
        let a = FormalExpr::symbol(ZetaSymbol::star(vec![0]));
        assert!((&a - &a).is_empty());
        let t = vec![ZetaSymbol::strict(vec![1, 2])];
        let e = normalize([term(2, t.clone()), term(3, t.clone())]);
        assert_eq!(e.terms(), &[term(5, t)]);
        let g = expand_giambelli(&part(&[3, 2, 1]), GiambelliVariant::Standard).unwrap();
        assert_eq!(normalize(g.terms().to_vec()), g);
    }

    #[test]
    fn permutation_sum_matches_cofactors() {
        for shape in [&[2, 2][..], &[3, 3, 2], &[2, 1]] {
            let l = part(shape);
            for (gv, hv) in [
                (GiambelliVariant::Standard, HookVariant::Hook1),
                (GiambelliVariant::Reversed, HookVariant::Hook2),
            ] {
                let want = det_by_cofactors(&hook_grid(&l, hv).unwrap());
                assert_eq!(expand_giambelli(&l, gv).unwrap(), want, "{l}");
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let e = expand_hook(0, 0, HookVariant::Hook1);
        let r = evaluate_expr(&e, &z(&[(0, 2.0)]), &TruncationConfig::exact(2)).unwrap();
        assert_eq!(r.value, Value::Exact(Rational::new(BigInt::from(5), BigInt::from(4))));
        let e = expand_hook(0, 1, HookVariant::Hook1);
        let r = evaluate_expr(&e, &z(&[(0, 2.0), (-1, 2.0)]), &TruncationConfig::exact(3)).unwrap();
        assert_eq!(r.value, Value::Exact(Rational::new(BigInt::from(7), BigInt::from(18))));
    }

    #[test]
    fn evaluate_names_bad_factor() {
        let e = expand_hook(0, 1, HookVariant::Hook1);
        let err = evaluate_expr(&e, &z(&[(0, 2.0), (-1, 0.5)]), &TruncationConfig::floating(10)).unwrap_err();
        assert!(matches!(err, Error::Convergence(ref s) if s.contains("ζ")), "{err}");
    }

    #[test]
    fn thm42_rank_one_is_riemann() {
        let r = eval_thm42(&part(&[1]), &z(&[(0, 2.0)]), &TruncationConfig::exact(3)).unwrap();
        assert_eq!(r.value, Value::Exact(Rational::new(BigInt::from(49), BigInt::from(36))));
    }

    #[test]
    fn thm42_hook_is_exact_at_truncation() {
        let zs = z(&[(0, 3.0), (1, 2.0), (2, 3.0), (-1, 3.0), (-2, 2.0)]);
        for shape in [&[2, 1][..], &[3, 1, 1], &[2]] {
            let l = part(shape);
            for m in [1, 3, 5] {
                let a = eval_thm42(&l, &zs, &TruncationConfig::exact(m)).unwrap();
                let b = schur::eval_schur_truncated(&VariableTableau::content_straight(l.clone(), zs.clone()), m)
                    .unwrap();
                assert_eq!(a.value, b, "{l} M={m}");
            }
        }
    }

    #[test]
    fn json_and_latex() {
        let e = expand_hook(0, 1, HookVariant::Hook1);
        let j = serde_json::to_string(&e).unwrap();
        assert_eq!(
            j,
            r#"[{"coeff":-1,"factors":[{"kind":"star","args":[-1,0]}]},{"coeff":1,"factors":[{"kind":"strict","args":[-1]},{"kind":"star","args":[0]}]}]"#
        );
        assert_eq!(serde_json::from_str::<FormalExpr>(&j).unwrap(), e);
        assert_eq!(e.to_latex(), r"-\zeta^{\star}(z_{-1}, z_{0}) + \zeta(z_{-1})\zeta^{\star}(z_{0})");
        assert!(serde_json::from_str::<FormalExpr>(r#"[{"coeff":1,"factors":[{"kind":"star","args":[]}]}]"#).is_err());
    }
}
