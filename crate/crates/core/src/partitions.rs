//! Partitions of `n` into exactly three positive parts.
//!
//! A partition is stored as the weakly decreasing triple `(λ₁, λ₂, λ₃)`.
//! Enumeration order is fixed: decreasing `λ₁`, then decreasing `λ₂`. This
//! keeps every downstream report and drawing byte-for-byte reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A partition `λ₁ ≥ λ₂ ≥ λ₃ ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u64; 3]", into = "[u64; 3]")]
pub struct Partition3 {
    parts: [u64; 3],
}

/// Largest supported `|λ|`; keeps lattice arithmetic scaled by 36 inside `i64`.
pub const MAX_HEIGHT: u64 = 1 << 56;

impl Partition3 {
    pub fn new(l1: u64, l2: u64, l3: u64) -> Result<Self, Error> {
        if l3 == 0 || l2 < l3 || l1 < l2 {
            return Err(Error::InvalidPartition([l1, l2, l3]));
        }
        if l1 > MAX_HEIGHT || l1 + l2 + l3 > MAX_HEIGHT {
            return Err(Error::TooLarge([l1, l2, l3]));
        }
        Ok(Partition3 { parts: [l1, l2, l3] })
    }

    /// Builds a partition from signed coordinates, as produced by lattice arithmetic.
    pub fn from_signed(v: [i64; 3]) -> Result<Self, Error> {
        if v.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidSignedPartition(v));
        }
        Partition3::new(v[0] as u64, v[1] as u64, v[2] as u64)
    }

    #[inline]
    pub fn parts(&self) -> [u64; 3] {
        self.parts
    }

    #[inline]
    pub fn signed(&self) -> [i64; 3] {
        [self.parts[0] as i64, self.parts[1] as i64, self.parts[2] as i64]
    }

    #[inline]
    pub fn largest(&self) -> u64 {
        self.parts[0]
    }

    #[inline]
    pub fn middle(&self) -> u64 {
        self.parts[1]
    }

    #[inline]
    pub fn smallest(&self) -> u64 {
        self.parts[2]
    }

    /// The number being partitioned, `|λ|`.
    #[inline]
    pub fn height(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl TryFrom<[u64; 3]> for Partition3 {
    type Error = Error;

    fn try_from(v: [u64; 3]) -> Result<Self, Error> {
        Partition3::new(v[0], v[1], v[2])
    }
}

impl From<Partition3> for [u64; 3] {
    fn from(p: Partition3) -> [u64; 3] {
        p.parts
    }
}

impl fmt::Display for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.parts[0], self.parts[1], self.parts[2])
    }
}

/// Parses `"13,4,3"`, `"13 4 3"` or `"(13,4,3)"`.
impl FromStr for Partition3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let fields: Vec<&str> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("expected three parts, got {:?}", s)));
        }
        let mut parts = [0u64; 3];
        for (slot, field) in parts.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| Error::Parse(format!("not a non-negative integer: {:?}", field)))?;
        }
        Partition3::new(parts[0], parts[1], parts[2])
    }
}

/// Column multiplicities of the Ferrers diagram: `(λ₁−λ₂, λ₂−λ₃, λ₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnMultiplicity {
    pub bar: [u64; 3],
}

pub fn column_multiplicities(lambda: &Partition3) -> ColumnMultiplicity {
    let [l1, l2, l3] = lambda.parts();
    ColumnMultiplicity {
        bar: [l1 - l2, l2 - l3, l3],
    }
}

/// Inverse of [`column_multiplicities`]: applies the upper all-ones triangular matrix.
pub fn mult_to_partition(bar: &ColumnMultiplicity) -> Result<Partition3, Error> {
    let [b1, b2, b3] = bar.bar;
    Partition3::new(b1 + b2 + b3, b2 + b3, b3)
}

/// Iterator over `P(n,3)` in the canonical order.
#[derive(Clone, Debug)]
pub struct Partitions3 {
    n: u64,
    l1: u64,
    l2: u64,
    done: bool,
}

impl Partitions3 {
    pub fn new(n: u64) -> Self {
        if n < 3 {
            return Partitions3 { n, l1: 0, l2: 0, done: true };
        }
        // largest λ₁ is n−2, reached by (n−2,1,1)
        Partitions3 { n, l1: n - 2, l2: 1, done: false }
    }

    /// Smallest admissible `λ₂` for the current `λ₁`.
    fn first_l2(n: u64, l1: u64) -> Option<u64> {
        // λ₃ = n − λ₁ − λ₂ must satisfy 1 ≤ λ₃ ≤ λ₂ ≤ λ₁
        let rest = n.checked_sub(l1)?;
        let lo = rest.div_ceil(2);
        let hi = l1.min(rest.checked_sub(1)?);
        (lo <= hi).then_some(hi)
    }
}

impl Iterator for Partitions3 {
    type Item = Partition3;

    fn next(&mut self) -> Option<Partition3> {
        if self.done {
            return None;
        }
        let l3 = self.n - self.l1 - self.l2;
        let out = Partition3 { parts: [self.l1, self.l2, l3] };
        // advance: λ₂ decreases within a fixed λ₁, then λ₁ decreases
        let rest = self.n - self.l1;
        if self.l2 > rest.div_ceil(2) {
            self.l2 -= 1;
        } else {
            loop {
                if self.l1 == 0 {
                    self.done = true;
                    break;
                }
                self.l1 -= 1;
                if 3 * self.l1 < self.n {
                    self.done = true;
                    break;
                }
                if let Some(l2) = Self::first_l2(self.n, self.l1) {
                    self.l2 = l2;
                    break;
                }
            }
        }
        Some(out)
    }
}

pub fn enumerate_partitions(n: u64) -> Vec<Partition3> {
    Partitions3::new(n).collect()
}

/// Independent count of `P(n,3)` by looping over `λ₃` and counting the
/// admissible range of `λ₂`. Uses no closed formula.
pub fn count_bruteforce(n: u64) -> u64 {
    let mut total = 0u64;
    let mut l3 = 1;
    while 3 * l3 <= n {
        // λ₂ ∈ [λ₃, ⌊(n−λ₃)/2⌋]
        let hi = (n - l3) / 2;
        if hi >= l3 {
            total += hi - l3 + 1;
        }
        l3 += 1;
    }
    total
}

/// Dense ranking of `P(n,3)` by rows of constant `λ₃`.
///
/// Lets permutations over `P(n,3)` be checked with flat arrays instead of hash sets.
#[derive(Clone, Debug)]
pub struct PartitionIndex {
    n: u64,
    row_start: Vec<usize>,
}

impl PartitionIndex {
    pub fn new(n: u64) -> Self {
        let mut row_start = vec![0usize];
        let mut l3 = 1;
        let mut acc = 0usize;
        while 3 * l3 <= n {
            acc += ((n - l3) / 2 - l3 + 1) as usize;
            row_start.push(acc);
            l3 += 1;
        }
        PartitionIndex { n, row_start }
    }

    pub fn len(&self) -> usize {
        *self.row_start.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of rows, i.e. the largest possible smallest part.
    pub fn rows(&self) -> u64 {
        (self.row_start.len() - 1) as u64
    }

    pub fn rank(&self, lambda: &Partition3) -> Option<usize> {
        if lambda.height() != self.n {
            return None;
        }
        let l3 = lambda.smallest();
        let start = *self.row_start.get((l3 - 1) as usize)?;
        Some(start + (lambda.middle() - l3) as usize)
    }

    pub fn unrank(&self, idx: usize) -> Option<Partition3> {
        if idx >= self.len() {
            return None;
        }
        let row = self.row_start.partition_point(|&s| s <= idx) - 1;
        let l3 = row as u64 + 1;
        let l2 = l3 + (idx - self.row_start[row]) as u64;
        Some(Partition3 { parts: [self.n - l2 - l3, l2, l3] })
    }
}
