//! Closed-form evaluators of `p(n,3)`.
//!
//! Each evaluator is written independently of the others and runs in exact
//! integer arithmetic. All of them return 0 for `n ∈ {0, 1, 2}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ehrhart::h_star;
use crate::error::Error;
use crate::partitions::count_bruteforce;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Nearest,
    Monomial,
    Binomial,
    Circulator,
    Brute,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Brute,
        Method::Nearest,
        Method::Monomial,
        Method::Binomial,
        Method::Circulator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Nearest => "nearest",
            Method::Monomial => "monomial",
            Method::Binomial => "binomial",
            Method::Circulator => "circulator",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolyResult {
    pub n: u64,
    pub value: u64,
    pub method: Method,
}

/// Nearest integer to `n²/12`, computed as `⌊(n²+6)/12⌋`.
///
/// `n² mod 12 ∈ {0,1,4,9}`, so `n²/12` is never a half-integer and the floor
/// form rounds correctly.
pub fn p3_nearest(n: u64) -> u64 {
    let n = n as u128;
    ((n * n + 6) / 12) as u64
}

/// Six-case polynomial table in `k` for `n = 6k + r`.
pub fn p3_monomial(n: u64) -> u64 {
    let k = n / 6;
    let kk = 3 * k * k;
    match n % 6 {
        0 => kk,
        1 => kk + k,
        2 => kk + 2 * k,
        3 => kk + 3 * k + 1,
        4 => kk + 4 * k + 1,
        _ => kk + 5 * k + 2,
    }
}

fn choose2(x: i64) -> u64 {
    if x < 2 {
        0
    } else {
        let x = x as u64;
        x * (x - 1) / 2
    }
}

/// `h*_r C(k+2,2) + h*_{6+r} C(k+1,2) + h*_{12+r} C(k,2)` for `n = 6k + r`.
pub fn p3_binomial(n: u64) -> u64 {
    let h = h_star();
    let k = (n / 6) as i64;
    let r = (n % 6) as usize;
    (0..3)
        .map(|i| h.get(r + 6 * i) * choose2(k + 2 - i as i64))
        .sum()
}

/// Circulator form `(n² − 7/6)/12 − (−1)ⁿ/8 + (ω^n + ω^{2n})/9` with `ω` a
/// primitive cube root of unity.
///
/// Over the common denominator 72 this is `6n² − 7 − 9(−1)ⁿ + 8c` where the
/// root-of-unity sum `c` is 2 when `3 | n` and −1 otherwise.
pub fn p3_circulator(n: u64) -> Result<u64, Error> {
    let nn = n as i128;
    let parity = if n.is_multiple_of(2) { 1 } else { -1 };
    let cube = if n.is_multiple_of(3) { 2 } else { -1 };
    let numerator = 6 * nn * nn - 7 - 9 * parity + 8 * cube;
    if numerator % 72 != 0 {
        return Err(Error::Internal(format!("circulator value for n={n} is {numerator}/72")));
    }
    Ok((numerator / 72) as u64)
}

pub fn evaluate(method: Method, n: u64) -> Result<QuasiPolyResult, Error> {
    let value = match method {
        Method::Nearest => p3_nearest(n),
        Method::Monomial => p3_monomial(n),
        Method::Binomial => p3_binomial(n),
        Method::Circulator => p3_circulator(n)?,
        Method::Brute => count_bruteforce(n),
    };
    Ok(QuasiPolyResult { n, value, method })
}
