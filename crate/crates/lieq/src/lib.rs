//! Exact-arithmetic computational Lie theory for split reductive groups.
//!
//! The crate provides, over exact rationals (no floating point anywhere):
//!
//! * [`rootdata`] — root data in ambient Euclidean coordinates for the split
//!   adjoint families `A`–`G`: simple roots/coroots, fundamental
//!   (co)weights, positive coroots with levels, dominance and hermiticity
//!   tests, and diagram folding for quasi-split descent.
//! * [`orbits`] — nilpotent orbit catalogs for the dual group: classical
//!   orbits from partitions (with parity rules and very even splitting) and
//!   checked-in exceptional catalogs with neutral elements and centralizers.
//! * [`repweights`] — weight multisets of distinguished representations of
//!   the dual group, integral weight patterns of rational parameters, and
//!   the level filtration rows attached to orbits.
//! * [`unitarity`] — the fundamental alcove, maximal-level coroot bounds,
//!   the half-integral spherical unitary classification, chamber region
//!   counts, central and extraneous complementary-series points, the
//!   `E8/4A1` membership test, and quasi-split reduction.
//! * [`analysis`] — marginal matrices, the truncation/violation dichotomy
//!   check, the elimination table for extraneous points, orbit recovery
//!   from filtration rows, and half-spin discriminators for very even
//!   orbit pairs.

pub mod analysis;
pub mod linalg;
pub mod orbits;
pub mod rational;
pub mod repweights;
pub mod rootdata;
pub mod unitarity;

pub use rational::{parse_rational, Rat, RationalVector};
