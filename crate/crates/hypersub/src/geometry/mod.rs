//! Exact rational geometry of lattice hypersimplex translates: points,
//! cells, membership tests, the family of translates containing a point,
//! pairwise intersections as common faces, and facet enumeration.
//!
//! All coordinates are exact rationals (arbitrary-precision numerator and
//! denominator, always in lowest terms); translation vectors and vertices are
//! arbitrary-precision integer vectors. Every object carries its ambient
//! dimension, and binary operations reject mismatches.

mod cell;
mod face;
mod point;
mod rational;
mod vector;

pub use cell::{containing_translates, Cell};
pub use face::{Face, FaceHull};
pub use point::{FracProfile, RationalPoint};
pub use rational::{floor_int, frac_part, parse_rational, Rational};
pub use vector::LatticeVector;

pub(crate) use cell::CellDto;
pub(crate) use face::index_combinations;
