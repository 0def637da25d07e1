//! Configuration and result types shared by the evaluators.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact rational truncated sums; exponents must be non-negative integers.
    Exact,
    #[default]
    Floating,
}

/// Truncation bound, arithmetic mode and comparison tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncationConfig {
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Replace the plain truncated value by a Richardson extrapolation over
    /// `M/16, M/8, .., M` (floating mode, integer exponents ≥ 2 only).
    #[serde(default)]
    pub accelerate: bool,
}

pub const DEFAULT_M: u64 = 1000;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

impl Default for TruncationConfig {
    fn default() -> Self {
        TruncationConfig {
            m: DEFAULT_M,
            mode: Mode::Floating,
            tolerance: DEFAULT_TOLERANCE,
            accelerate: false,
        }
    }
}

impl TruncationConfig {
    pub fn floating(m: u64) -> Self {
        TruncationConfig { m, ..Default::default() }
    }

    pub fn exact(m: u64) -> Self {
        TruncationConfig { m, mode: Mode::Exact, ..Default::default() }
    }

    pub fn accelerated(m: u64) -> Self {
        TruncationConfig { m, accelerate: true, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::Domain("truncation M must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// A computed value: exact rational (truncated sum) or complex float.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Float(Complex64),
}

impl Value {
    pub fn approx(&self) -> Complex64 {
        match self {
            Value::Exact(q) => Complex64::new(rational_to_f64(q), 0.0),
            Value::Float(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Float(_) => None,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Float(z) if z.im == 0.0 => write!(f, "{:.15}", z.re),
            Value::Float(z) => write!(f, "{:.15}{:+.15}i", z.re, z.im),
        }
    }
}

/// How far the truncated value may be from the full series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tail {
    /// Exact mode: the value is the truncated sum itself.
    None,
    /// Proven upper bound on the truncation error.
    Rigorous(f64),
    /// Estimate without proof (doubling or extrapolation based).
    Heuristic(f64),
}

impl Tail {
    pub fn bound(&self) -> f64 {
        match *self {
            Tail::None => 0.0,
            Tail::Rigorous(b) | Tail::Heuristic(b) => b,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Tail::None => "none",
            Tail::Rigorous(_) => "rigorous",
            Tail::Heuristic(_) => "heuristic",
        }
    }

    /// Sum of two estimates; heuristic if either is.
    pub fn combine(self, other: Tail, extra: f64) -> Tail {
        let b = self.bound() + other.bound() + extra;
        match (self, other) {
            (Tail::None, Tail::None) if extra == 0.0 => Tail::None,
            (Tail::Heuristic(_), _) | (_, Tail::Heuristic(_)) => Tail::Heuristic(b),
            _ => Tail::Rigorous(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult {
    pub value: Value,
    pub tail: Tail,
    pub truncation: u64,
    pub notes: Vec<String>,
}

impl EvalResult {
    pub fn exact(q: Rational, m: u64) -> Self {
        EvalResult { value: Value::Exact(q), tail: Tail::None, truncation: m, notes: Vec::new() }
    }

    pub fn float(z: Complex64, tail: Tail, m: u64) -> Self {
        EvalResult { value: Value::Float(z), tail, truncation: m, notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn approx(&self) -> Complex64 {
        self.value.approx()
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail.bound()
    }

    /// Whether `target` lies within the reported tail of the value.
    pub fn brackets(&self, target: Complex64) -> bool {
        (self.approx() - target).norm() <= self.tail_bound()
    }
}

#[derive(Serialize)]
struct ValueRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
    re: f64,
    im: f64,
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let z = self.approx();
        ValueRepr { exact: self.as_exact().map(|q| q.to_string()), re: z.re, im: z.im }.serialize(s)
    }
}

#[derive(Serialize)]
struct EvalResultRepr<'a> {
    value: &'a Value,
    tail_bound: Option<f64>,
    tail_kind: &'static str,
    truncation: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: &'a Vec<String>,
}

impl Serialize for EvalResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EvalResultRepr {
            value: &self.value,
            tail_bound: match self.tail {
                Tail::None => None,
                t => Some(t.bound()),
            },
            tail_kind: self.tail.kind(),
            truncation: self.truncation,
            notes: &self.notes,
        }
        .serialize(s)
    }
}
