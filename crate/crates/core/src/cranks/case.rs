//! Residue cases `r′` of the progressions `n = 6mk′ + r′` and their rectangle parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::congruence::{family, Family};
use crate::error::Error;

/// One of the nine residues `±0, ±1, ±2, ±(2m−2), ±(2m+1)` modulo `6m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    Zero,
    One,
    Two,
    MinusOne,
    MinusTwo,
    TwoMMinusTwo,
    MinusTwoMMinusTwo,
    TwoMPlusOne,
    MinusTwoMPlusOne,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::MinusTwoMPlusOne,
        CaseLabel::MinusTwoMMinusTwo,
        CaseLabel::MinusTwo,
        CaseLabel::MinusOne,
        CaseLabel::Zero,
        CaseLabel::One,
        CaseLabel::Two,
        CaseLabel::TwoMMinusTwo,
        CaseLabel::TwoMPlusOne,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Zero => "0",
            CaseLabel::One => "1",
            CaseLabel::Two => "2",
            CaseLabel::MinusOne => "-1",
            CaseLabel::MinusTwo => "-2",
            CaseLabel::TwoMMinusTwo => "2m-2",
            CaseLabel::MinusTwoMMinusTwo => "-(2m-2)",
            CaseLabel::TwoMPlusOne => "2m+1",
            CaseLabel::MinusTwoMPlusOne => "-(2m+1)",
        }
    }

    /// The signed offset `r′` for modulus `m`.
    pub fn offset(self, m: u64) -> i64 {
        let m = m as i64;
        match self {
            CaseLabel::Zero => 0,
            CaseLabel::One => 1,
            CaseLabel::Two => 2,
            CaseLabel::MinusOne => -1,
            CaseLabel::MinusTwo => -2,
            CaseLabel::TwoMMinusTwo => 2 * m - 2,
            CaseLabel::MinusTwoMMinusTwo => -(2 * m - 2),
            CaseLabel::TwoMPlusOne => 2 * m + 1,
            CaseLabel::MinusTwoMPlusOne => -(2 * m + 1),
        }
    }

    /// The case whose residue class mod `6m` contains `n`.
    pub fn from_height(n: u64, m: u64) -> Option<CaseLabel> {
        let period = 6 * m as i64;
        let rho = (n as i64).rem_euclid(period);
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.offset(m).rem_euclid(period) == rho)
    }

    /// Rows use width-divisible rectangles; the rest use height-divisible ones.
    pub fn orientation(self) -> Orientation {
        match self {
            CaseLabel::TwoMMinusTwo
            | CaseLabel::MinusTwoMMinusTwo
            | CaseLabel::TwoMPlusOne
            | CaseLabel::MinusTwoMPlusOne => Orientation::Horizontal,
            _ => Orientation::Vertical,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace('\u{2212}', "-");
        let canonical = match compact.as_str() {
            "+0" | "-0" | "±0" => "0",
            "+1" => "1",
            "+2" => "2",
            "+(2m-2)" | "(2m-2)" => "2m-2",
            "+(2m+1)" | "(2m+1)" => "2m+1",
            "-2m+2" => "-(2m-2)",
            "-2m-1" => "-(2m+1)",
            other => other,
        };
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.as_str() == canonical)
            .ok_or_else(|| Error::Parse(format!("unknown residue case {s:?}")))
    }
}

/// Whether cycles run along rows (width divisible by `m`) or columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// `slope · k′ + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub slope: i64,
    pub intercept: i64,
}

impl Affine {
    pub const fn new(slope: i64, intercept: i64) -> Self {
        Affine { slope, intercept }
    }

    pub fn at(&self, kp: i64) -> i64 {
        self.slope * kp + self.intercept
    }

    /// `m` divides the value for every `k′`.
    pub fn always_divisible_by(&self, m: i64) -> bool {
        self.slope % m == 0 && self.intercept % m == 0
    }
}

/// One row of rectangle parameters for a residue case and modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub case: CaseLabel,
    pub m: u64,
    /// Triangle index `k(k′)` with `6mk′ + r′ = 6k + r`.
    pub k: Affine,
    pub r: u8,
    pub width: Affine,
    pub height: Affine,
    /// `(h*_r, h*_{r+6}, h*_{r+12})`
    pub split: [u64; 3],
}

impl TableRow {
    /// Parameters for `m ≡ −1 (mod 6)` prime.
    pub fn new(case: CaseLabel, m: u64) -> Result<TableRow, Error> {
        if family(m)? != Family::MinusOne {
            return Err(Error::UnsupportedModulus(m));
        }
        let mi = m as i64;
        // m = 6j − 1 makes both thirds integral
        let third_minus = (mi - 2) / 3;
        let third_plus = (mi + 1) / 3;
        debug_assert!(3 * third_minus == mi - 2 && 3 * third_plus == mi + 1);
        let a = Affine::new;
        let (k, r, width, height, split) = match case {
            CaseLabel::MinusTwoMPlusOne => (a(mi, -third_plus), 1, a(3 * mi, -mi), a(mi, -third_plus), [0, 4, 2]),
            CaseLabel::MinusTwoMMinusTwo => (a(mi, -third_plus), 4, a(3 * mi, -mi), a(mi, -third_minus), [1, 5, 0]),
            CaseLabel::MinusTwo => (a(mi, -1), 4, a(3 * mi, -2), a(mi, 0), [1, 5, 0]),
            CaseLabel::MinusOne => (a(mi, -1), 5, a(3 * mi, -1), a(mi, 0), [2, 4, 0]),
            CaseLabel::Zero => (a(mi, 0), 0, a(3 * mi, 0), a(mi, 0), [0, 3, 3]),
            CaseLabel::One => (a(mi, 0), 1, a(3 * mi, 1), a(mi, 0), [0, 4, 2]),
            CaseLabel::Two => (a(mi, 0), 2, a(3 * mi, 2), a(mi, 0), [0, 5, 1]),
            CaseLabel::TwoMMinusTwo => (a(mi, third_minus), 2, a(3 * mi, mi), a(mi, third_minus), [0, 5, 1]),
            CaseLabel::TwoMPlusOne => (a(mi, third_minus), 5, a(3 * mi, mi), a(mi, third_plus), [2, 4, 0]),
        };
        Ok(TableRow { case, m, k, r, width, height, split })
    }

    pub fn n_at(&self, kp: u64) -> i64 {
        6 * self.m as i64 * kp as i64 + self.case.offset(self.m)
    }

    /// The progression instance exists (`n ≥ 0`).
    pub fn admissible(&self, kp: u64) -> bool {
        self.n_at(kp) >= 0
    }

    /// `ℓ₂(k′) − k(k′)`, constant across `k′`.
    pub fn height_excess(&self) -> i64 {
        self.height.intercept - self.k.intercept
    }

    pub fn orientation(&self) -> Orientation {
        self.case.orientation()
    }
}
