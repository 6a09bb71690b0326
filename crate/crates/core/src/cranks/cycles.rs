//! A permutation of `P(n,3)` whose cycles advance largest-minus-smallest by one.
//!
//! Partitions sit in rows of constant smallest part `t`. Inside a row the map
//! moves one unit from the middle part to the largest part. The last entry of a
//! row, `(n−2t, t, t)`, jumps to the first entry of another row; which row
//! depends on the residue case of `n` modulo `6m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::congruence::{family, Family};
use crate::error::Error;
use crate::partitions::{Partition3, PartitionIndex, Partitions3};

use super::case::CaseLabel;

fn part(v: [i64; 3]) -> Result<Partition3, Error> {
    Partition3::from_signed(v)
}

/// Image of the row end `(n−2t, t, t)`.
fn border_step(case: CaseLabel, m: i64, kp: i64, t: i64) -> Result<Partition3, Error> {
    let r = case.offset(m as u64);
    let n = 6 * m * kp + r;
    let mk = m * kp;
    let b = mk + r.div_euclid(6);
    let h3 = 3 * mk;
    let j = (m + 1) / 6;
    // rows of the form (H−u, H−u, 2u−1) or (H−u, H−u, 2u), shifted by the row count
    let v = match case {
        CaseLabel::MinusTwoMPlusOne => {
            let h = (n + 1) / 2;
            if t <= b {
                [h - t, h - t - 1, 2 * t]
            } else {
                let u = t - b;
                [h - u, h - u, 2 * u - 1]
            }
        }
        CaseLabel::MinusTwoMMinusTwo => {
            let h = n / 2;
            if t <= b + 1 {
                [h - (t - 1), h - t, 2 * t - 1]
            } else {
                let u = t - b - 1;
                [h - u, h - u, 2 * u]
            }
        }
        CaseLabel::MinusTwo => {
            if t < mk {
                [h3 - (t + 1), h3 - (t + 1), 2 * t]
            } else if t <= mk - 1 + 2 * j {
                let u = t - 2 * j;
                [h3 - (u + 1), h3 - (u + 2), 2 * u + 1]
            } else {
                let u = t + 1 - 2 * j - mk;
                [h3 - u, h3 - (u + 1), 2 * u - 1]
            }
        }
        CaseLabel::MinusOne => {
            if t < mk {
                [h3 - t, h3 - (t + 1), 2 * t]
            } else {
                let u = if t < mk + 4 * j { t + 1 - 4 * j } else { t + 1 - 4 * j - mk };
                [h3 - u, h3 - u, 2 * u - 1]
            }
        }
        CaseLabel::Zero => {
            if t <= mk {
                let u = if t <= mk - 2 * j { t + 2 * j } else { t + 2 * j - mk };
                [h3 - (u - 1), h3 - u, 2 * u - 1]
            } else {
                let u = if t <= mk + 2 * j { t - 2 * j } else { t - 2 * j - mk };
                [h3 - u, h3 - u, 2 * u]
            }
        }
        CaseLabel::One => {
            if t <= mk {
                [h3 - (t - 1), h3 - (t - 1), 2 * t - 1]
            } else {
                let u = if t <= mk + 2 * j { t - 2 * j } else { t - 2 * j - mk };
                [h3 - (u - 1), h3 - u, 2 * u]
            }
        }
        CaseLabel::Two => {
            if t <= mk {
                [h3 - (t - 2), h3 - (t - 1), 2 * t - 1]
            } else {
                let u = if t <= mk + 4 * j { t - 4 * j } else { t - 4 * j - mk };
                [h3 - (u - 1), h3 - (u - 1), 2 * u]
            }
        }
        CaseLabel::TwoMMinusTwo => {
            let h = n / 2;
            if t <= b {
                [h - t, h - t, 2 * t]
            } else {
                [h - (t - 1 - b), h - (t - b), 2 * (t - b) - 1]
            }
        }
        CaseLabel::TwoMPlusOne => {
            let h = (n + 1) / 2;
            if t <= b + 1 {
                [h - t, h - t, 2 * t - 1]
            } else {
                [h - (t - 1 - b), h - (t - b), 2 * (t - 1 - b)]
            }
        }
    };
    part(v)
}

/// One step of the permutation on `P(n,3)`, `n = λ₁+λ₂+λ₃`.
///
/// Requires `m ≡ −1 (mod 6)` prime and `n` in one of the nine divisible
/// residue classes modulo `6m`.
pub fn step_f(lambda: &Partition3, m: u64) -> Result<Partition3, Error> {
    if family(m)? != Family::MinusOne {
        return Err(Error::UnsupportedModulus(m));
    }
    let n = lambda.height();
    let case = CaseLabel::from_height(n, m).ok_or(Error::NonQualifyingHeight { n, m })?;
    let [l1, l2, l3] = lambda.signed();
    if l2 != l3 {
        return part([l1 + 1, l2 - 1, l3]);
    }
    let mi = m as i64;
    let kp = (n as i64 - case.offset(m)) / (6 * mi);
    border_step(case, mi, kp, l3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub n: u64,
    pub m: u64,
    /// Cycles in order of first appearance in the lexicographic listing.
    pub cycles: Vec<Vec<Partition3>>,
}

impl CycleDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Which row each row end jumps to, on row indices `t = 1, 2, …`.
    pub fn row_permutation(&self) -> Result<RowPermutation, Error> {
        let rows = self.n / 3;
        let image = (1..=rows)
            .map(|t| {
                let end = Partition3::new(self.n - 2 * t, t, t)?;
                Ok(step_f(&end, self.m)?.smallest())
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(RowPermutation { image })
    }
}

/// A permutation of `{1, …, len}`, stored as `image[i−1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowPermutation {
    pub image: Vec<u64>,
}

impl RowPermutation {
    /// Disjoint cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<u64>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 1..=self.image.len() as u64 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur as usize - 1] {
                seen[cur as usize - 1] = true;
                cycle.push(cur);
                cur = self.image[cur as usize - 1];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for RowPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let body: Vec<String> = c.iter().map(u64::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Follows [`step_f`] from every partition; fails if it is not a bijection.
pub fn cycle_decomposition(n: u64, m: u64) -> Result<CycleDecomposition, Error> {
    let index = PartitionIndex::new(n);
    let mut seen = vec![false; index.len()];
    let mut cycles = Vec::new();
    for start in Partitions3::new(n) {
        let rank = index.rank(&start).ok_or_else(|| Error::Internal(format!("{start} not indexed")))?;
        if seen[rank] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            let r = index
                .rank(&cur)
                .ok_or_else(|| Error::Internal(format!("{cur} has the wrong height")))?;
            if seen[r] {
                if cur != start {
                    return Err(Error::NotInjective);
                }
                break;
            }
            seen[r] = true;
            cycle.push(cur);
            cur = step_f(&cur, m)?;
        }
        cycles.push(cycle);
    }
    Ok(CycleDecomposition { n, m, cycles })
}
