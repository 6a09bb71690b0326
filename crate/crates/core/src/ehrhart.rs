//! The partition cone, its fundamental parallelepiped and the box decomposition.
//!
//! Every partition into three parts is written uniquely as `λ = μ + V·τ` where
//! the columns of `V` are `(6,0,0)`, `(3,3,0)`, `(2,2,2)`, the *box remainder*
//! `μ` is a lattice point of the half-open parallelepiped `V·([0,1)² × (0,1])`
//! and the *box quotient* `τ` is a non-negative integer vector.
//!
//! All membership tests run on exact rationals with the common denominator
//! `det V = 36`, so the half-open boundaries are decided without rounding.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::{Partition3, Partitions3};

/// Number of slices `H_0 … H_17` of the fundamental parallelepiped.
pub const SLICES: usize = 18;

/// Height shared by all three generators, `lcm(1,2,3)`.
pub const GENERATOR_HEIGHT: i64 = 6;

/// The generator matrix `V₃`, stored by rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: [[i64; 3]; 3],
}

pub const V3: GeneratorMatrix = GeneratorMatrix {
    rows: [[6, 3, 2], [0, 3, 2], [0, 0, 2]],
};

/// `36 · V₃⁻¹`, an integer matrix since `det V₃ = 36`.
const V3_INV_36: [[i64; 3]; 3] = [[6, -6, 0], [0, 12, -12], [0, 0, 18]];

const DENOM: i64 = 36;

impl GeneratorMatrix {
    pub fn columns(&self) -> [[i64; 3]; 3] {
        let r = &self.rows;
        [
            [r[0][0], r[1][0], r[2][0]],
            [r[0][1], r[1][1], r[2][1]],
            [r[0][2], r[1][2], r[2][2]],
        ]
    }

    pub fn determinant(&self) -> i64 {
        let r = &self.rows;
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    }

    pub fn apply(&self, tau: [i64; 3]) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (o, row) in out.iter_mut().zip(&self.rows) {
            *o = row.iter().zip(&tau).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Exact solution `a` of `V·a = x`, returned as numerators over 36.
    pub fn solve_over_36(&self, x: [i64; 3]) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (o, row) in out.iter_mut().zip(&V3_INV_36) {
            *o = row.iter().zip(&x).map(|(a, b)| a * b).sum();
        }
        out
    }
}

/// A lattice point of the fundamental parallelepiped `F₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalPoint {
    point: [i64; 3],
}

impl FundamentalPoint {
    pub fn new(point: [i64; 3]) -> Result<Self, Error> {
        if in_parallelepiped(point) {
            Ok(FundamentalPoint { point })
        } else {
            Err(Error::NotFundamental(point))
        }
    }

    pub fn point(&self) -> [i64; 3] {
        self.point
    }

    pub fn height(&self) -> usize {
        self.point.iter().sum::<i64>() as usize
    }

    /// Column multiplicities `μ̄ = (μ₁−μ₂, μ₂−μ₃, μ₃)`; ranges over `[0,5]×[0,2]×[1,2]`.
    pub fn bar(&self) -> [i64; 3] {
        let [a, b, c] = self.point;
        [a - b, b - c, c]
    }
}

impl std::fmt::Display for FundamentalPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.point;
        write!(f, "({a},{b},{c})")
    }
}

/// Exact half-open membership test `V⁻¹x ∈ [0,1)² × (0,1]`.
pub fn in_parallelepiped(x: [i64; 3]) -> bool {
    let a = V3.solve_over_36(x);
    (0..DENOM).contains(&a[0]) && (0..DENOM).contains(&a[1]) && a[2] > 0 && a[2] <= DENOM
}

/// Lattice points of `F₃` grouped by height.
#[derive(Clone, Debug)]
pub struct FundamentalPoints {
    slices: [Vec<FundamentalPoint>; SLICES],
}

impl FundamentalPoints {
    pub fn slice(&self, height: usize) -> &[FundamentalPoint] {
        self.slices.get(height).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &FundamentalPoint> {
        self.slices.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Scans the bounding box of `F₃`. `V·(1,1,1) = (11,5,2)` is the componentwise
/// supremum of the parallelepiped, so `0 ≤ μ₁ ≤ 11, 0 ≤ μ₂ ≤ 5, 0 ≤ μ₃ ≤ 2`.
fn scan_fundamental_points() -> FundamentalPoints {
    let mut slices: [Vec<FundamentalPoint>; SLICES] = Default::default();
    for a in (0..=11).rev() {
        for b in (0..=5).rev() {
            for c in (0..=2).rev() {
                let x = [a, b, c];
                if in_parallelepiped(x) {
                    slices[(a + b + c) as usize].push(FundamentalPoint { point: x });
                }
            }
        }
    }
    FundamentalPoints { slices }
}

/// The 36 lattice points of `F₃`, computed once.
pub fn fundamental_points() -> &'static FundamentalPoints {
    static CELL: OnceLock<FundamentalPoints> = OnceLock::new();
    CELL.get_or_init(scan_fundamental_points)
}

/// Lattice point counts per slice of `F₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStarVector {
    pub counts: [u64; SLICES],
}

impl HStarVector {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// `h*_i = h*_{18−i}` for `3 ≤ i ≤ 15`.
    pub fn is_symmetric(&self) -> bool {
        (3..=15).all(|i| self.counts[i] == self.counts[18 - i])
    }
}

pub fn h_star() -> HStarVector {
    let pts = fundamental_points();
    let mut counts = [0u64; SLICES];
    for (i, c) in counts.iter_mut().enumerate() {
        *c = pts.slice(i).len() as u64;
    }
    HStarVector { counts }
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Full numerator `q³(1+q+…+q⁵)(1+q²+q⁴)(1+q³)` of the generating function
/// over `(1−q⁶)³`, lowest degree first.
pub fn gf_numerator() -> Vec<u64> {
    let shift = [0, 0, 0, 1];
    let ones = [1, 1, 1, 1, 1, 1];
    let evens = [1, 0, 1, 0, 1];
    let cube = [1, 0, 0, 1];
    poly_mul(&poly_mul(&poly_mul(&shift, &ones), &evens), &cube)
}

/// The h*-vector read off the generating-function numerator; independent of [`h_star`].
pub fn h_star_from_gf() -> HStarVector {
    let num = gf_numerator();
    let mut counts = [0u64; SLICES];
    for (i, c) in counts.iter_mut().enumerate() {
        *c = num.get(i).copied().unwrap_or(0);
    }
    HStarVector { counts }
}

/// The triangle `T_k` of non-negative integer vectors with coordinate sum `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleSet {
    pub k: i64,
    pub points: Vec<[i64; 3]>,
}

impl TriangleSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `C(k+2, 2)` for `k ≥ 0`, else 0.
pub fn triangle_size(k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        let k = k as u64;
        (k + 2) * (k + 1) / 2
    }
}

/// Points of `T_k` in increasing lexicographic order of `(τ₁, τ₂)`.
pub fn triangle(k: i64) -> TriangleSet {
    let mut points = Vec::with_capacity(triangle_size(k) as usize);
    if k >= 0 {
        for t1 in 0..=k {
            for t2 in 0..=(k - t1) {
                points.push([t1, t2, k - t1 - t2]);
            }
        }
    }
    TriangleSet { k, points }
}

/// The box decomposition `(μ, τ)` of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxDecomposition {
    pub remainder: FundamentalPoint,
    pub quotient: [i64; 3],
}

impl BoxDecomposition {
    pub fn quotient_size(&self) -> i64 {
        self.quotient.iter().sum()
    }
}

pub fn box_decompose(lambda: &Partition3) -> BoxDecomposition {
    let x = lambda.signed();
    let a = V3.solve_over_36(x);
    // a₁, a₂ land in [0,1) after subtracting the floor; a₃ lands in (0,1]
    // after subtracting ⌈a₃⌉ − 1, so an integral a₃ keeps μ₃ > 0.
    let tau = [
        a[0].div_euclid(DENOM),
        a[1].div_euclid(DENOM),
        (a[2] + DENOM - 1).div_euclid(DENOM) - 1,
    ];
    let vt = V3.apply(tau);
    let mu = [x[0] - vt[0], x[1] - vt[1], x[2] - vt[2]];
    debug_assert!(in_parallelepiped(mu), "remainder {mu:?} of {lambda} not in F3");
    BoxDecomposition {
        remainder: FundamentalPoint { point: mu },
        quotient: tau,
    }
}

pub fn box_compose(mu: &FundamentalPoint, tau: [i64; 3]) -> Result<Partition3, Error> {
    if tau.iter().any(|&t| t < 0) {
        return Err(Error::NegativeQuotient(tau));
    }
    let vt = V3.apply(tau);
    let m = mu.point();
    Partition3::from_signed([m[0] + vt[0], m[1] + vt[1], m[2] + vt[2]])
}

/// One translated triangle `μ + V·T_s` inside `P(n,3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileGroup {
    pub remainder: FundamentalPoint,
    /// Size `s` of the triangle `T_s` carrying this group.
    pub triangle: i64,
    pub members: Vec<Partition3>,
}

/// Groups `P(n,3)` by box remainder, ordered by remainder height then scan order.
///
/// For `n = 6k + r`, the group of `μ ∈ H_{r+6i}` is `μ + V·T_{k−i}`.
pub fn tile_partition_triangle(n: u64) -> Vec<TileGroup> {
    let r = (n % 6) as usize;
    let k = (n / 6) as i64;
    let pts = fundamental_points();
    let mut groups: Vec<TileGroup> = Vec::new();
    for i in 0..3 {
        for mu in pts.slice(r + 6 * i) {
            groups.push(TileGroup {
                remainder: *mu,
                triangle: k - i as i64,
                members: Vec::new(),
            });
        }
    }
    for lambda in Partitions3::new(n) {
        let dec = box_decompose(&lambda);
        let g = groups
            .iter_mut()
            .find(|g| g.remainder == dec.remainder)
            .expect("every remainder of P(n,3) lies in H_r, H_r+6 or H_r+12");
        g.members.push(lambda);
    }
    groups.retain(|g| !g.members.is_empty());
    groups
}
