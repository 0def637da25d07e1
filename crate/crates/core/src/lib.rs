//! Schur multiple zeta-functions and their expansions.
//!
//! * [`partition`]: partitions, Frobenius coordinates, skew shapes, tableaux.
//! * [`mzv`]: Euler-Zagier ζ and ζ★ with truncation and tail bounds.
//! * [`root_zeta`]: zeta-functions of the root system `A_r` and the shifted,
//!   zero-based variants used by the hook and Giambelli expansions.
//! * [`schur`]: Schur multiple zeta-functions by a transfer sum over
//!   horizontal strips, and the anti-hook expansion.
//! * [`formal`]: a formal algebra of ζ/ζ★ products, the hook and Giambelli
//!   expansions, and their evaluation.
//! * [`verify`]: side-by-side checks of every identity.
//!
//! Every evaluator shares one truncation convention: all running indices
//! (equivalently, all tableau entries) are at most `M`.

pub mod accel;
pub mod error;
pub mod eval;
pub mod formal;
pub mod mzv;
pub mod par;
pub mod partition;
pub mod root_zeta;
pub mod scalar;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{EvalResult, Mode, Tail, TruncationConfig, Value};
pub use mzv::ContentAssignment;
pub use num_complex::Complex64;
pub use partition::{Cell, FrobeniusForm, Partition, SkewShape, Tableau};
pub use scalar::{Rational, Scalar};
