//! Triangle-to-rectangle plans and the Ehrhart cranks they define.
//!
//! A plan places, for every box remainder `μ` of the residue class, the triangle
//! `T_{k−i}` of box quotients into a lattice rectangle via an affine map `ψ_μ`.
//! The maps do not depend on `k′`: growth of the rectangle is encoded through
//! `|τ| = k − i`, which keeps one plan valid for the whole progression.
//!
//! Layouts are assembled from two primitives, each a pair of staircase
//! triangles in opposite orientations:
//!
//! * a *square* block: `T_a` and `T_{a−1}`, covering `(a+1)²` cells;
//! * a *rectangular* block: two copies of `T_a`, covering `(a+1)(a+2)` cells.
//!
//! Triangles are always drawn in the two orientations `(x, y) = (τ₃, τ₁)` and
//! `(C − τ₁, D − τ₃)`. In both, `λ₁ − λ₃` changes by `−3` per step right and
//! `+3` per step up, which is what makes largest-minus-smallest label-compatible
//! with some layouts.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::congruence::{family, Family};
use crate::ehrhart::{box_compose, box_decompose, fundamental_points, triangle, FundamentalPoint};
use crate::error::Error;
use crate::partitions::{column_multiplicities, Partition3};

use super::c_ls;
use super::case::{CaseLabel, Orientation, TableRow};

/// Sample triangle used to check injectivity of a map on construction.
const SAMPLE_TRIANGLE: i64 = 6;

/// Cover checks run for these `k′` when a plan is built.
pub const CHECKED_K_PRIMES: std::ops::RangeInclusive<u64> = 0..=4;

/// An affine map `ℝ³ → ℝ²`, `τ ↦ Aτ + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap2 {
    matrix: [[i64; 3]; 2],
    offset: [i64; 2],
}

impl AffineMap2 {
    pub fn new(matrix: [[i64; 3]; 2], offset: [i64; 2]) -> Result<Self, Error> {
        let map = AffineMap2 { matrix, offset };
        let pts = triangle(SAMPLE_TRIANGLE).points;
        let images: HashSet<[i64; 2]> = pts.iter().map(|t| map.apply(*t)).collect();
        if images.len() != pts.len() || map.augmented_det() == 0 {
            return Err(Error::NotInjective);
        }
        Ok(map)
    }

    pub fn matrix(&self) -> [[i64; 3]; 2] {
        self.matrix
    }

    pub fn offset(&self) -> [i64; 2] {
        self.offset
    }

    pub fn apply(&self, tau: [i64; 3]) -> [i64; 2] {
        let row = |r: &[i64; 3]| r.iter().zip(&tau).map(|(a, b)| a * b).sum::<i64>();
        [row(&self.matrix[0]) + self.offset[0], row(&self.matrix[1]) + self.offset[1]]
    }

    fn augmented(&self) -> [[i64; 3]; 3] {
        [self.matrix[0], self.matrix[1], [1, 1, 1]]
    }

    fn augmented_det(&self) -> i64 {
        det3(&self.augmented())
    }

    /// The unique `τ ∈ T_s` with `ψ(τ) = cell`, if any.
    pub fn preimage(&self, cell: [i64; 2], s: i64) -> Option<[i64; 3]> {
        let a = self.augmented();
        let d = det3(&a);
        if d == 0 {
            return None;
        }
        let rhs = [cell[0] - self.offset[0], cell[1] - self.offset[1], s];
        let mut tau = [0i64; 3];
        for (col, t) in tau.iter_mut().enumerate() {
            let mut ac = a;
            for (row, r) in ac.iter_mut().zip(&rhs) {
                row[col] = *r;
            }
            let num = det3(&ac);
            if num % d != 0 {
                return None;
            }
            *t = num / d;
        }
        tau.iter().all(|&t| t >= 0).then_some(tau)
    }
}

fn det3(a: &[[i64; 3]; 3]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// `η(x, y) = αx + βy + γ mod m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eta {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl Eta {
    pub const X: Eta = Eta { alpha: 1, beta: 0, gamma: 0 };
    pub const Y: Eta = Eta { alpha: 0, beta: 1, gamma: 0 };

    pub fn apply(&self, cell: [i64; 2], m: u64) -> u64 {
        (self.alpha * cell[0] + self.beta * cell[1] + self.gamma).rem_euclid(m as i64) as u64
    }
}

/// Triangle `T_{k−shift}` of remainder `μ`, placed by `map`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub remainder: FundamentalPoint,
    pub shift: i64,
    pub map: AffineMap2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectanglePlan {
    pub table: TableRow,
    pub placements: Vec<Placement>,
    pub eta: Eta,
    pub step: Orientation,
}

impl RectanglePlan {
    pub fn case(&self) -> CaseLabel {
        self.table.case
    }

    pub fn modulus(&self) -> u64 {
        self.table.m
    }

    pub fn width(&self, kp: u64) -> i64 {
        self.table.width.at(kp as i64)
    }

    pub fn height(&self, kp: u64) -> i64 {
        self.table.height.at(kp as i64)
    }

    /// Sufficient conditions for `η ∘ ψ ∘ φ` to be a crank: `gcd(α,m) = 1` with
    /// `m | ℓ₁` for every `k′`, or `gcd(β,m) = 1` with `m | ℓ₂` for every `k′`.
    pub fn crank_conditions_hold(&self) -> bool {
        let m = self.modulus() as i64;
        match self.step {
            Orientation::Horizontal => gcd(self.eta.alpha, m) == 1 && self.table.width.always_divisible_by(m),
            Orientation::Vertical => gcd(self.eta.beta, m) == 1 && self.table.height.always_divisible_by(m),
        }
    }

    /// `k′` of a height in this plan's progression.
    pub fn k_prime_for(&self, n: u64) -> Result<u64, Error> {
        let period = 6 * self.modulus() as i64;
        let diff = n as i64 - self.case().offset(self.modulus());
        if diff < 0 || diff % period != 0 {
            return Err(Error::NonQualifyingHeight { n, m: self.modulus() });
        }
        Ok((diff / period) as u64)
    }

    fn placement_for(&self, mu: &FundamentalPoint) -> Option<&Placement> {
        self.placements.iter().find(|p| p.remainder == *mu)
    }

    /// Rectangle cell `ψ(φ(λ))`, together with `k′`.
    pub fn position(&self, lambda: &Partition3) -> Result<(u64, [i64; 2]), Error> {
        let kp = self.k_prime_for(lambda.height())?;
        let dec = box_decompose(lambda);
        let pl = self
            .placement_for(&dec.remainder)
            .ok_or(Error::NoPlacement(dec.remainder.point()))?;
        Ok((kp, pl.map.apply(dec.quotient)))
    }

    /// Inverse of [`RectanglePlan::position`] for a fixed `k′`.
    pub fn partition_at(&self, kp: u64, cell: [i64; 2]) -> Option<Partition3> {
        let k = self.table.k.at(kp as i64);
        self.placements.iter().find_map(|pl| {
            let s = k - pl.shift;
            if s < 0 {
                return None;
            }
            let tau = pl.map.preimage(cell, s)?;
            box_compose(&pl.remainder, tau).ok()
        })
    }

    /// Exhaustive disjoint-cover check; returns the grid in row-major order (`y` outer).
    pub fn grid(&self, kp: u64) -> Result<Vec<Partition3>, Error> {
        if !self.table.admissible(kp) {
            return Err(Error::CoverCheck(format!("k'={kp} gives a negative height")));
        }
        let (w, h) = (self.width(kp), self.height(kp));
        let k = self.table.k.at(kp as i64);
        if w < 0 || h < 0 {
            return Err(Error::CoverCheck(format!("negative dimensions {w}x{h}")));
        }
        let mut cells: Vec<Option<Partition3>> = vec![None; (w * h) as usize];
        let mut placed = 0usize;
        for pl in &self.placements {
            for tau in triangle(k - pl.shift).points {
                let [x, y] = pl.map.apply(tau);
                if !(0..w).contains(&x) || !(0..h).contains(&y) {
                    return Err(Error::CoverCheck(format!(
                        "{} at tau={tau:?} maps outside {w}x{h} to ({x},{y})",
                        pl.remainder
                    )));
                }
                let slot = &mut cells[(y * w + x) as usize];
                if slot.is_some() {
                    return Err(Error::CoverCheck(format!("cell ({x},{y}) covered twice")));
                }
                *slot = Some(box_compose(&pl.remainder, tau)?);
                placed += 1;
            }
        }
        if placed != cells.len() {
            return Err(Error::CoverCheck(format!("{placed} points for {} cells", cells.len())));
        }
        Ok(cells.into_iter().map(|c| c.expect("all cells counted")).collect())
    }

    pub fn cover_check(&self, kp: u64) -> Result<(), Error> {
        self.grid(kp).map(|_| ())
    }

    pub fn crank(&self, lambda: &Partition3) -> Result<u64, Error> {
        let (_, cell) = self.position(lambda)?;
        Ok(self.eta.apply(cell, self.modulus()))
    }

    pub fn cycle_step(&self, lambda: &Partition3) -> Result<Partition3, Error> {
        let (kp, [x, y]) = self.position(lambda)?;
        let next = match self.step {
            Orientation::Horizontal => [(x + 1).rem_euclid(self.width(kp)), y],
            Orientation::Vertical => [x, (y + 1).rem_euclid(self.height(kp))],
        };
        self.partition_at(kp, next)
            .ok_or_else(|| Error::Internal(format!("no partition at {next:?} for k'={kp}")))
    }

    /// Runs the cover check on every admissible `k′` in [`CHECKED_K_PRIMES`].
    fn verified(self) -> Result<Self, Error> {
        for kp in CHECKED_K_PRIMES {
            if self.table.admissible(kp) {
                self.cover_check(kp)?;
            }
        }
        Ok(self)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn ehrhart_crank(plan: &RectanglePlan, lambda: &Partition3) -> Result<u64, Error> {
    plan.crank(lambda)
}

pub fn rectangle_cycle_step(plan: &RectanglePlan, lambda: &Partition3) -> Result<Partition3, Error> {
    plan.cycle_step(lambda)
}

fn fp(p: [i64; 3]) -> FundamentalPoint {
    FundamentalPoint::new(p).expect("listed remainders are fundamental")
}

/// The explicit six-map arrangement for `r′ = 2m − 2`, cycles along rows, `η = x mod m`.
///
/// Five triangles `T_{k−1}` (remainders of height 8) and one `T_{k−2}` (remainder
/// `(8,4,2)`) fill a `(3k+2) × k` rectangle as two rectangular blocks and one
/// square block.
pub fn arrangement_2m_minus_2(m: u64) -> Result<RectanglePlan, Error> {
    // remainder, triangle shift, map rows, translation
    type MapSpec = ([i64; 3], i64, [[i64; 3]; 2], [i64; 2]);
    let table = TableRow::new(CaseLabel::TwoMMinusTwo, m)?;
    let spec: [MapSpec; 6] = [
        ([6, 1, 1], 1, [[0, 1, 0], [0, 0, 1]], [0, 0]),
        ([4, 2, 2], 1, [[1, 1, 0], [0, 1, 1]], [1, 0]),
        ([5, 2, 1], 1, [[1, 2, 1], [0, 0, 1]], [2, 0]),
        ([3, 3, 2], 1, [[2, 2, 1], [0, 1, 1]], [3, 0]),
        ([4, 3, 1], 1, [[2, 3, 2], [0, 0, 1]], [4, 0]),
        // T_{k−2} completes the k×k square that starts at column 2k+2
        ([8, 4, 2], 2, [[3, 3, 2], [0, 1, 1]], [7, 1]),
    ];
    let placements = spec
        .into_iter()
        .map(|(mu, shift, matrix, offset)| {
            Ok(Placement {
                remainder: fp(mu),
                shift,
                map: AffineMap2::new(matrix, offset)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    RectanglePlan {
        table,
        placements,
        eta: Eta::X,
        step: Orientation::Horizontal,
    }
    .verified()
}

/// Closed form of the `r′ = 2m − 2` crank in terms of `λ̄ = (λ₁−λ₂, λ₂−λ₃, λ₃)`.
///
/// With `τ₁ = ⌊λ̄₁/6⌋`, `τ₂ = ⌊λ̄₂/3⌋`, `q = ⌊λ̄₁/6⌋+⌊λ̄₂/3⌋+⌊λ̄₃/2⌋−[λ̄₃/2 ∈ ℤ]`:
///
/// `c(λ) = τ₂ + (2{λ̄₃/2} + 2[λ̄₃/2 ∈ ℤ] − 1)(τ₁ + 1) + 3{λ̄₂/3}(2 + q + [|μ| = 14]) mod m`
///
/// The bracket `[|μ| = 14]` accounts for the single `T_{k−2}` triangle, whose
/// quotient sum is one less than that of the `T_{k−1}` triangles.
pub fn ehrhart_crank_closed_form(lambda: &Partition3, m: u64) -> Result<u64, Error> {
    if family(m)? != Family::MinusOne {
        return Err(Error::UnsupportedModulus(m));
    }
    let n = lambda.height();
    let target = CaseLabel::TwoMMinusTwo.offset(m) as u64;
    if n % (6 * m) != target {
        return Err(Error::NonQualifyingHeight { n, m });
    }
    let [b1, b2, b3] = column_multiplicities(lambda).bar.map(|v| v as i64);
    let b3_even = i64::from(b3 % 2 == 0);
    let t1 = b1 / 6;
    let t2 = b2 / 3;
    let q = t1 + t2 + b3 / 2 - b3_even;
    let frac3_b2 = b2 % 3; // 3·{λ̄₂/3}
    let frac2_b3 = b3 % 2; // 2·{λ̄₃/2}
    let remainder_height = n as i64 - 6 * q;
    let far_triangle = i64::from(remainder_height == 14);
    let c = t2 + (frac2_b3 + 2 * b3_even - 1) * (t1 + 1) + frac3_b2 * (2 + q + far_triangle);
    Ok(c.rem_euclid(m as i64) as u64)
}

/// Value `c + q·k` of an offset that grows with the triangle index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Lin {
    c: i64,
    q: i64,
}

impl Lin {
    const ZERO: Lin = Lin { c: 0, q: 0 };

    fn plus(self, c: i64) -> Lin {
        Lin { c: self.c + c, q: self.q }
    }

    fn add(self, o: Lin) -> Lin {
        Lin { c: self.c + o.c, q: self.q + o.q }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum BlockKind {
    /// `T_a` with `T_{a−1}`, side `a + 1`
    Square,
    /// two `T_a`, width `a + 2`, height `a + 1`
    Wide,
    /// two `T_a`, width `a + 1`, height `a + 2`
    Tall,
}

/// A block whose larger triangle is `T_{k−shift}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Block {
    kind: BlockKind,
    shift: i64,
}

impl Block {
    /// Shifts of the (lower-left, upper-right) slots.
    fn slot_shifts(&self, big_lower: bool) -> [i64; 2] {
        match self.kind {
            BlockKind::Square if big_lower => [self.shift, self.shift + 1],
            BlockKind::Square => [self.shift + 1, self.shift],
            _ => [self.shift, self.shift],
        }
    }

    /// `(width, C, D)` as functions of `k`, with `a = k − shift`.
    fn geometry(&self) -> (Lin, Lin, Lin) {
        let a = Lin { c: -self.shift, q: 1 };
        match self.kind {
            BlockKind::Square => (a.plus(1), a, a),
            BlockKind::Wide => (a.plus(2), a.plus(1), a),
            BlockKind::Tall => (a.plus(1), a, a.plus(1)),
        }
    }
}

/// `(x, y) = (X₀ + τ₃, τ₁)` on `T_{k−shift}`.
fn lower_map(x0: Lin, shift: i64) -> AffineMap2 {
    let q = x0.q;
    AffineMap2 {
        matrix: [[q, q, 1 + q], [1, 0, 0]],
        offset: [x0.c + q * shift, 0],
    }
}

/// `(x, y) = (X₀ + C − τ₁, D − τ₃)` on `T_{k−shift}`.
fn upper_map(x0: Lin, c: Lin, d: Lin, shift: i64) -> AffineMap2 {
    let xc = x0.add(c);
    AffineMap2 {
        matrix: [[xc.q - 1, xc.q, xc.q], [d.q, d.q, d.q - 1]],
        offset: [xc.c + xc.q * shift, d.c + d.q * shift],
    }
}

/// Which block primitives fill the target rectangle for this row.
fn blocks_for(table: &TableRow) -> Result<Vec<Block>, Error> {
    let [c0, c1, c2] = table.split.map(|c| c as i64);
    let fail = || Error::NoArrangement(format!("case {} with split {:?}", table.case, table.split));
    let mut blocks = Vec::new();
    match table.height_excess() {
        // height k: squares T_{k−1}+T_{k−2}, rest as wide pairs of T_{k−1}
        0 => {
            if c0 != 0 || c1 < c2 || (c1 - c2) % 2 != 0 {
                return Err(fail());
            }
            blocks.extend(std::iter::repeat_n(Block { kind: BlockKind::Square, shift: 1 }, c2 as usize));
            blocks.extend(std::iter::repeat_n(Block { kind: BlockKind::Wide, shift: 1 }, ((c1 - c2) / 2) as usize));
        }
        // height k+1: squares T_k+T_{k−1}, rest as tall pairs of T_{k−1}
        1 => {
            if c2 != 0 || c1 < c0 || (c1 - c0) % 2 != 0 {
                return Err(fail());
            }
            blocks.extend(std::iter::repeat_n(Block { kind: BlockKind::Square, shift: 0 }, c0 as usize));
            blocks.extend(std::iter::repeat_n(Block { kind: BlockKind::Tall, shift: 1 }, ((c1 - c0) / 2) as usize));
        }
        _ => return Err(fail()),
    }
    Ok(blocks)
}

/// A concrete choice of block order, square orientations and slot remainders.
struct Layout<'a> {
    blocks: &'a [Block],
    big_lower: &'a [bool],
    remainders: &'a [FundamentalPoint],
}

impl Layout<'_> {
    fn slot_shifts(&self) -> Vec<i64> {
        self.blocks
            .iter()
            .zip(self.big_lower)
            .flat_map(|(b, &bl)| b.slot_shifts(bl))
            .collect()
    }

    /// Placements and total width.
    fn placements(&self) -> (Vec<Placement>, Lin) {
        let mut x0 = Lin::ZERO;
        let mut out = Vec::with_capacity(2 * self.blocks.len());
        for ((block, &bl), mus) in self.blocks.iter().zip(self.big_lower).zip(self.remainders.chunks(2)) {
            let [lo, hi] = block.slot_shifts(bl);
            let (width, c, d) = block.geometry();
            out.push(Placement { remainder: mus[0], shift: lo, map: lower_map(x0, lo) });
            out.push(Placement { remainder: mus[1], shift: hi, map: upper_map(x0, c, d, hi) });
            x0 = x0.add(width);
        }
        (out, x0)
    }
}

/// Lexicographic successor; after the last permutation, wraps to the first and returns false.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Requirement on how largest-minus-smallest relates to the rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Labeling {
    /// any exact cover
    Any,
    /// `c_ls ≡ −3x + 3y + γ` on the whole rectangle
    Global,
    /// `c_ls − 3y` constant along each column
    Columns,
}

/// `c_ls + 3x − 3y mod m` per placement, sampled at `k′`.
fn placement_labels(plan: &RectanglePlan, kp: u64) -> Option<Vec<u64>> {
    let m = plan.modulus() as i64;
    let k = plan.table.k.at(kp as i64);
    plan.placements
        .iter()
        .map(|pl| {
            let pts = triangle(k - pl.shift).points;
            let mut labels = pts.iter().map(|&tau| {
                let lambda = box_compose(&pl.remainder, tau).ok()?;
                let [x, y] = pl.map.apply(tau);
                Some((c_ls(&lambda, m as u64) as i64 + 3 * x - 3 * y).rem_euclid(m) as u64)
            });
            let first = labels.next()??;
            labels.all(|l| l == Some(first)).then_some(first)
        })
        .collect()
}

fn satisfies(plan: &RectanglePlan, labeling: Labeling) -> bool {
    if labeling == Labeling::Any {
        return true;
    }
    // probe k′ values where every triangle is non-empty
    (2..=3u64).all(|kp| {
        let Some(labels) = placement_labels(plan, kp) else {
            return false;
        };
        match labeling {
            Labeling::Global => labels.windows(2).all(|w| w[0] == w[1]),
            // the two placements of a block share its columns
            Labeling::Columns => labels.chunks(2).all(|c| c[0] == c[1]),
            Labeling::Any => true,
        }
    })
}

fn search(case: CaseLabel, m: u64, labeling: Labeling) -> Result<RectanglePlan, Error> {
    let table = TableRow::new(case, m)?;
    let mut blocks = blocks_for(&table)?;
    blocks.sort();
    let pts = fundamental_points();
    // sorted so the odometer below starts from the first permutation of each pool
    let pools: Vec<Vec<FundamentalPoint>> = (0..3)
        .map(|i| {
            let mut pool = pts.slice(table.r as usize + 6 * i).to_vec();
            pool.sort_by_key(|p| p.point());
            pool
        })
        .collect();
    let eta = match case.orientation() {
        Orientation::Horizontal => Eta::X,
        Orientation::Vertical => Eta::Y,
    };
    loop {
        let squares = blocks.iter().filter(|b| b.kind == BlockKind::Square).count();
        for mask in 0..(1u32 << squares) {
            let mut bit = 0;
            let big_lower: Vec<bool> = blocks
                .iter()
                .map(|b| {
                    if b.kind == BlockKind::Square {
                        bit += 1;
                        mask & (1 << (bit - 1)) == 0
                    } else {
                        true
                    }
                })
                .collect();
            let shell = Layout { blocks: &blocks, big_lower: &big_lower, remainders: &[] };
            let shifts = shell.slot_shifts();
            let mut perm = pools.clone();
            loop {
                let mut cursor = [0usize; 3];
                let remainders: Vec<FundamentalPoint> = shifts
                    .iter()
                    .map(|&s| {
                        let i = s as usize;
                        cursor[i] += 1;
                        perm[i][cursor[i] - 1]
                    })
                    .collect();
                let layout = Layout { blocks: &blocks, big_lower: &big_lower, remainders: &remainders };
                let (placements, width) = layout.placements();
                let width_fits = width.q * m as i64 == table.width.slope
                    && width.c + width.q * table.k.intercept == table.width.intercept;
                if !width_fits {
                    return Err(Error::NoArrangement(format!("block widths do not sum to the width of case {case}")));
                }
                let mut plan = RectanglePlan { table, placements, eta, step: case.orientation() };
                if satisfies(&plan, labeling) {
                    if labeling == Labeling::Global {
                        let gamma = placement_labels(&plan, 2).expect("checked above")[0] as i64;
                        plan.eta = Eta { alpha: -3, beta: 3, gamma };
                    }
                    return plan.verified();
                }
                // advance the remainder assignment like an odometer
                let mut advanced = false;
                for pool in perm.iter_mut() {
                    if next_permutation(pool) {
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
        }
        if !next_permutation(&mut blocks) {
            break;
        }
    }
    Err(Error::NoArrangement(format!("no {labeling:?}-labeled layout for case {case}, m={m}")))
}

/// A plan with the standard rectangle dimensions for any residue case, built from square and rectangular blocks.
pub fn build_arrangement(case: CaseLabel, m: u64) -> Result<RectanglePlan, Error> {
    search(case, m, Labeling::Any)
}

/// A plan on which largest-minus-smallest is compatible with the rectangle.
///
/// Horizontal cases: `c_ls(λ) = −3x + 3y + γ mod m` everywhere, so the plan's
/// `η` reproduces `c_ls` exactly and every step right lowers it by 3.
/// Vertical cases: every step up raises `c_ls` by 3, including the wrap from
/// top to bottom.
pub fn labeled_arrangement(case: CaseLabel, m: u64) -> Result<RectanglePlan, Error> {
    let labeling = match case.orientation() {
        Orientation::Horizontal => Labeling::Global,
        Orientation::Vertical => Labeling::Columns,
    };
    search(case, m, labeling)
}
