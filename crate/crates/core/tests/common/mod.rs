//! Reference computations used by the integration tests. None of these go
//! through the transfer recurrence or the prefix-sum recurrences.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use schurzeta::partition::Partition;
use schurzeta::schur::VariableTableau;
use schurzeta::Rational;

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn inv_pow(m: u32, e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(m).pow(e))
}

fn int_exp(s: Complex64) -> u32 {
    assert!(s.im == 0.0 && s.re.fract() == 0.0 && s.re >= 0.0);
    s.re as u32
}

/// `Σ Π m_ij^{-s_ij}` over every SSYT with entries `≤ m`, by enumeration.
pub fn brute_schur(vt: &VariableTableau, m: u32) -> Rational {
    let exps: Vec<_> = vt.cell_exponents().unwrap();
    let mut acc = Rational::zero();
    for t in vt.shape.enumerate_ssyt(m) {
        let mut w = Rational::one();
        for (cell, s) in &exps {
            w *= inv_pow(t.entry(*cell).unwrap(), int_exp(*s));
        }
        acc += w;
    }
    acc
}

/// `Σ_{m_1 < .. < m_r ≤ m}` (or `≤` when `star`) by nested loops.
pub fn brute_ez(s: &[u32], m: u32, star: bool) -> Rational {
    fn go(s: &[u32], lo: u32, m: u32, star: bool) -> Rational {
        let Some((&first, rest)) = s.split_first() else {
            return Rational::one();
        };
        let mut acc = Rational::zero();
        for k in lo..=m {
            let next = if star { k } else { k + 1 };
            acc += inv_pow(k, first) * go(rest, next, m, star);
        }
        acc
    }
    go(s, 1, m, star)
}

/// Number of SSYT of shape `λ` with entries `≤ n`, by the hook-content formula.
pub fn hook_content(l: &Partition, n: u32) -> u64 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for cell in l.cells() {
        let f = n as i64 + cell.content();
        if f <= 0 {
            return 0;
        }
        num *= f;
        den *= l.hook_length(cell);
    }
    let q: BigInt = num / den;
    u64::try_from(q).unwrap()
}

/// `ζ(s)` for integer `s ≥ 2` by Euler-Maclaurin with ten Bernoulli corrections.
pub fn zeta_em(s: u32) -> f64 {
    const B2K: [f64; 10] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
    ];
    let n = 30.0_f64;
    let sf = s as f64;
    let mut acc: f64 = (1..30).map(|k| (k as f64).powf(-sf)).sum();
    acc += n.powf(1.0 - sf) / (sf - 1.0) + 0.5 * n.powf(-sf);
    // B_{2k}/(2k)! · s(s+1)..(s+2k-2) · N^{-s-2k+1}
    let mut rising = sf;
    let mut fact = 2.0;
    for (k, b) in B2K.iter().enumerate() {
        let k = k as i32 + 1;
        acc += b / fact * rising * n.powf(-sf - 2.0 * k as f64 + 1.0);
        rising *= (sf + 2.0 * k as f64 - 1.0) * (sf + 2.0 * k as f64);
        fact *= (2.0 * k as f64 + 1.0) * (2.0 * k as f64 + 2.0);
    }
    acc
}
