//! Partitions into three parts through the lens of a three-dimensional cone.
//!
//! `P(n,3)` is the set of lattice points of height `n` in the cone generated by
//! `(6,0,0)`, `(3,3,0)`, `(2,2,2)`, all of height 6. Every partition splits
//! uniquely as a remainder in a fixed box of 36 points plus a non-negative
//! integer combination of the generators. This crate uses that split to
//! count `P(n,3)`, to decide when a prime divides the count, and to build
//! statistics that sort `P(n,3)` into equal classes.
//!
//! * [`partitions`]: the partitions themselves, iteration and indexing.
//! * [`ehrhart`]: the box decomposition, its remainders and `h*`.
//! * [`quasipoly`]: several exact evaluators of `p(n,3)`.
//! * [`congruence`]: residue classes of `n` with `m | p(n,3)`.
//! * [`cranks`]: crank statistics, rectangle plans and cycle structure.

pub mod congruence;
pub mod cranks;
pub mod ehrhart;
pub mod error;
pub mod partitions;
pub mod quasipoly;

pub use error::Error;
pub use partitions::Partition3;
