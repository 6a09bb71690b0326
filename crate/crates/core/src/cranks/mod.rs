//! Crank statistics on `P(n,3)`.
//!
//! * [`c_ls`]: largest part minus smallest part, reduced mod `m`.
//! * [`plan`]: Ehrhart cranks `η ∘ ψ ∘ φ` built from triangle-to-rectangle plans.
//! * [`cycles`]: the row-walking permutation whose cycles advance `c_ls` by one.

pub mod case;
pub mod cycles;
pub mod plan;

use serde::{Deserialize, Serialize};

use crate::ehrhart::{box_compose, FundamentalPoint};
use crate::partitions::{Partition3, Partitions3};

pub use case::{CaseLabel, Orientation, TableRow};
pub use cycles::{cycle_decomposition, step_f, CycleDecomposition};
pub use plan::{
    arrangement_2m_minus_2, build_arrangement, ehrhart_crank, ehrhart_crank_closed_form, labeled_arrangement,
    rectangle_cycle_step, AffineMap2, Eta, Placement, RectanglePlan,
};

/// `(λ₁ − λ₃) mod m`.
#[inline]
pub fn c_ls(lambda: &Partition3, m: u64) -> u64 {
    (lambda.largest() - lambda.smallest()) % m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrankHistogram {
    pub modulus: u64,
    pub counts: Vec<u64>,
}

impl CrankHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_uniform(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

/// Counts `P(n,3)` by crank value.
///
/// # Panics
///
/// If `crank` returns a value `≥ m`.
pub fn histogram<F>(n: u64, m: u64, crank: F) -> CrankHistogram
where
    F: Fn(&Partition3) -> u64,
{
    let mut counts = vec![0u64; m as usize];
    for lambda in Partitions3::new(n) {
        counts[crank(&lambda) as usize] += 1;
    }
    CrankHistogram { modulus: m, counts }
}

/// `c_ls` histogram by rows of constant `λ₃`, without enumerating partitions.
///
/// In row `λ₃ = t`, `λ₂` runs over `[t, ⌊(n−t)/2⌋]` and `λ₁ − λ₃ = n − 2t − λ₂`
/// runs over a contiguous interval, so each row costs `O(m)`.
pub fn c_ls_histogram_by_rows(n: u64, m: u64) -> CrankHistogram {
    let mut counts = vec![0u64; m as usize];
    let mut t = 1;
    while 3 * t <= n {
        let hi_l2 = (n - t) / 2;
        // values n−2t−λ₂ for λ₂ ∈ [t, hi_l2] form [lo, hi]
        let lo = n - 2 * t - hi_l2;
        let hi = n - 3 * t;
        add_interval(&mut counts, lo, hi, m);
        t += 1;
    }
    CrankHistogram { modulus: m, counts }
}

fn add_interval(counts: &mut [u64], lo: u64, hi: u64, m: u64) {
    let len = hi - lo + 1;
    let full = len / m;
    for c in counts.iter_mut() {
        *c += full;
    }
    let mut v = lo % m;
    for _ in 0..len % m {
        counts[v as usize] += 1;
        v = (v + 1) % m;
    }
}

/// Corner of a triangle `T_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    /// `(s, 0, 0)`
    L,
    /// `(0, s, 0)`
    R,
    /// `(0, 0, s)`
    T,
}

impl Vertex {
    pub fn at(self, s: i64) -> [i64; 3] {
        match self {
            Vertex::L => [s, 0, 0],
            Vertex::R => [0, s, 0],
            Vertex::T => [0, 0, s],
        }
    }
}

/// `c_ls` at the three corners `L, R, T` of `μ + V·T_s`.
pub fn vertex_crank_values(mu: &FundamentalPoint, s: i64, m: u64) -> [u64; 3] {
    [Vertex::L, Vertex::R, Vertex::T].map(|v| {
        let lambda = box_compose(mu, v.at(s)).expect("corners of T_s are non-negative for s >= 0");
        c_ls(&lambda, m)
    })
}

/// Exact integer change of `λ₁ − λ₃` when the box quotient moves by `d`.
pub fn crank_delta(mu: &FundamentalPoint, tau: [i64; 3], d: [i64; 3]) -> Option<i64> {
    let moved = [tau[0] + d[0], tau[1] + d[1], tau[2] + d[2]];
    let a = box_compose(mu, tau).ok()?;
    let b = box_compose(mu, moved).ok()?;
    let diff = |p: &Partition3| p.largest() as i64 - p.smallest() as i64;
    Some(diff(&b) - diff(&a))
}

/// Crank changes for one step between triangle corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDeltas {
    pub l_to_r: i64,
    pub l_to_t: i64,
    pub r_to_t: i64,
}

pub const L_TO_R: [i64; 3] = [-1, 1, 0];
pub const L_TO_T: [i64; 3] = [-1, 0, 1];
pub const R_TO_T: [i64; 3] = [0, -1, 1];

pub fn step_deltas() -> StepDeltas {
    let mu = FundamentalPoint::new([1, 1, 1]).expect("(1,1,1) is fundamental");
    let base = [1, 1, 1];
    let d = |dir| crank_delta(&mu, base, dir).expect("base point stays inside the cone");
    StepDeltas {
        l_to_r: d(L_TO_R),
        l_to_t: d(L_TO_T),
        r_to_t: d(R_TO_T),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::fundamental_points;

    fn p(a: u64, b: u64, c: u64) -> Partition3 {
        Partition3::new(a, b, c).unwrap()
    }

    #[test]
    fn c_ls_examples() {
        assert_eq!(c_ls(&p(17, 3, 2), 5), 0);
        for m in 2..20 {
            assert_eq!(c_ls(&p(3, 3, 3), m), 0);
        }
        assert_eq!(c_ls(&p(7, 1, 1), 7), 6);
    }

    #[test]
    fn histogram_examples() {
        let cl = |m| move |l: &Partition3| c_ls(l, m);
        assert_eq!(histogram(8, 5, cl(5)).counts, vec![1, 1, 1, 1, 1]);
        assert_eq!(histogram(9, 7, cl(7)).counts, vec![1, 0, 1, 2, 1, 1, 1]);
        assert_eq!(histogram(22, 5, cl(5)).counts, vec![8; 5]);
    }

    #[test]
    fn row_histogram_matches_enumeration() {
        for m in [2u64, 3, 5, 7, 11] {
            for n in 0..200 {
                assert_eq!(c_ls_histogram_by_rows(n, m), histogram(n, m, |l| c_ls(l, m)), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn vertex_values_611() {
        let mu = FundamentalPoint::new([6, 1, 1]).unwrap();
        // r' = 2m−2 sizing: s = k − 1 with k = m k' + (m−2)/3
        for (m, expect) in [(5u64, [0, 0, 0]), (11, [6, 0, 5])] {
            for kp in 0..4 {
                let s = (m * kp + (m - 2) / 3) as i64 - 1;
                assert_eq!(vertex_crank_values(&mu, s, m), expect, "m={m} k'={kp}");
            }
        }
        let one = FundamentalPoint::new([1, 1, 1]).unwrap();
        assert_eq!(vertex_crank_values(&one, 0, 13), [0, 0, 0]);
    }

    #[test]
    fn step_delta_constants() {
        let d = step_deltas();
        assert_eq!((d.l_to_r, d.l_to_t, d.r_to_t), (-3, -6, -3));
        for mu in fundamental_points().iter() {
            for tau in [[3, 0, 2], [1, 5, 1], [2, 2, 2]] {
                assert_eq!(crank_delta(mu, tau, L_TO_T), Some(-6));
            }
        }
    }
}
