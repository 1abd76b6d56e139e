//! Exact construction and verification of hypersimplicial subdivisions of
//! dilated hypersimplices.
//!
//! The hypersimplex `D(d, i)` is the convex hull of the 0/1 vectors of length
//! `d + 1` with exactly `i` ones. Its `r`-fold dilation decomposes into
//! lattice translates of smaller hypersimplices: one cell `v + D(d, j)` for
//! every level `j` in `[1, d]` and every weak composition `v` of `i*r - j`
//! into `d + 1` parts bounded by `r - 1`. Summing normalized volumes of the
//! cells then gives the Brenti–Welker identity
//!
//! ```text
//! sum_{j=1}^{d} C(r-1, d+1, i*r - j) * A(d, j) = r^d * A(d, i)
//! ```
//!
//! with `A(d, j)` the Eulerian numbers and `C` the bounded composition
//! counts.
//!
//! The crate machine-checks all of this with exact arithmetic only:
//!
//! * [`combinatorics`] — Eulerian numbers (recurrence and brute-force descent
//!   enumeration), bounded compositions (enumerated and counted by dynamic
//!   programming), and both sides of the identity.
//! * [`geometry`] — rational points, hypersimplex translates, membership by
//!   H-description and by a floor/fractional-part criterion, the family of
//!   translates containing a point, pairwise intersections as common faces,
//!   and facet enumeration.
//! * [`subdivision`] — building the subdivision, a deterministic covering
//!   witness for any rational point of the dilated hypersimplex, a
//!   verification report (containment, coverage, pairwise faces, exact volume
//!   additivity), and an independent volume oracle via Ehrhart lattice-point
//!   counting.
//! * [`dualgraph`] — the dual graph of the subdivision, built by the
//!   unit-translation rule, cross-checked against facet dimensions, exported
//!   as DOT or JSON.
//!
//! There is no floating point anywhere; all checks are exact integer or
//! rational identities, and all outputs are deterministic for a given seed.

pub mod combinatorics;
pub mod dualgraph;
mod error;
pub mod geometry;
pub mod subdivision;

pub use error::{Error, Result};
