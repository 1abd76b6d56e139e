use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::face::{index_combinations, index_subsets, Face};
use crate::geometry::point::RationalPoint;
use crate::geometry::vector::LatticeVector;

/// A lattice translate of a hypersimplex: the polytope `v + D(d, j)` where
/// `D(d, j)` is the convex hull of the 0/1 vectors of length `d + 1` with
/// exactly `j` ones. The pair `(v, j)` is the atom every subdivision is made
/// of.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    v: LatticeVector,
    j: usize,
}

impl Cell {
    pub fn new(v: LatticeVector, j: usize) -> Result<Self> {
        if v.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "a cell needs at least 2 coordinates, got {}",
                v.len()
            )));
        }
        let d = v.len() - 1;
        if j < 1 || j > d {
            return Err(Error::InvalidParameter(format!(
                "level j must lie in [1, {d}], got {j}"
            )));
        }
        Ok(Cell { v, j })
    }

    pub fn from_i64s(coords: &[i64], j: usize) -> Result<Self> {
        Self::new(LatticeVector::from_i64s(coords), j)
    }

    /// The translation vector `v`.
    pub fn translation(&self) -> &LatticeVector {
        &self.v
    }

    /// The level `j` (how many ones each vertex adds to `v`).
    pub fn level(&self) -> usize {
        self.j
    }

    pub fn ambient_dim(&self) -> usize {
        self.v.len() - 1
    }

    /// Every point of the cell has this coordinate sum.
    pub fn hyperplane_level(&self) -> BigInt {
        self.v.sum() + BigInt::from(self.j)
    }

    /// Membership by the H-description of the translate: `x - v` sums to `j`
    /// and each coordinate of `x - v` lies in `[0, 1]`.
    pub fn contains(&self, x: &RationalPoint) -> Result<bool> {
        self.check_dim(x.ambient_dim())?;
        if !x.coordinate_sum().is_integer()
            || x.coordinate_sum().to_integer() != self.hyperplane_level()
        {
            return Ok(false);
        }
        for (t, coord) in x.coords().iter().enumerate() {
            // 0 <= x_t - v_t <= 1, i.e. 0 <= numer - v_t*denom <= denom.
            let shifted = coord.numer() - &self.v[t] * coord.denom();
            if shifted.is_negative() || &shifted > coord.denom() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership by the floor/fractional-part characterization, used as a
    /// cross-check of [`Cell::contains`]. For a point with integral
    /// coordinate sum, `x` lies in the cell iff
    ///
    /// * every fractional coordinate has `v_t = floor(x_t)`,
    /// * every integral coordinate has `x_t` equal to `v_t` or `v_t + 1`, and
    /// * `#{t : x_t = v_t + 1}` plus the fractional total of `x` equals `j`.
    ///
    /// Requires an integral coordinate sum (unlike the H-description).
    pub fn contains_by_criterion(&self, x: &RationalPoint) -> Result<bool> {
        self.check_dim(x.ambient_dim())?;
        let profile = x.frac_profile()?;
        let mut ones = 0usize;
        let mut in_support = vec![false; x.coords().len()];
        for &t in &profile.support {
            in_support[t] = true;
        }
        for (t, fractional) in in_support.iter().enumerate() {
            if *fractional {
                if profile.floor[t] != self.v[t] {
                    return Ok(false);
                }
            } else {
                let offset = &profile.floor[t] - &self.v[t];
                if offset.is_one() {
                    ones += 1;
                } else if !offset.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(ones + profile.frac_sum == self.j)
    }

    /// The vertex set `{ v + e_T : |T| = j }`, of size `binom(d + 1, j)`.
    pub fn vertices(&self) -> BTreeSet<LatticeVector> {
        let all: Vec<usize> = (0..self.v.len()).collect();
        index_combinations(&all, self.j)
            .iter()
            .map(|subset| self.v.plus_indicator(subset))
            .collect()
    }

    /// The facets of the cell, i.e. its faces of dimension `d - 1`. For each
    /// coordinate `t` there are up to two: one with the `t`-th coordinate
    /// pinned to 1 (absent when `j = 1`, except in dimension 1 where it
    /// degenerates to a vertex) and one with it pinned to 0 (absent when
    /// `j = d`, with the same caveat). A segment thus has its two endpoints
    /// as facets, and otherwise there are `d + 1` facets when `j` is 1 or `d`
    /// and `2(d + 1)` in between.
    pub fn facets(&self) -> Vec<Face> {
        let d = self.ambient_dim();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for t in 0..self.v.len() {
            let free: Vec<usize> = (0..self.v.len()).filter(|&s| s != t).collect();
            let pinned_to_one = Face::hull(self.v.plus_unit(t), free.clone(), self.j - 1);
            let pinned_to_zero = Face::hull(self.v.clone(), free, self.j);
            for face in [pinned_to_one, pinned_to_zero] {
                if face.dim() == Some(d - 1) && seen.insert(face.clone()) {
                    out.push(face);
                }
            }
        }
        out
    }

    /// The intersection of two translates, as a face of both. Returns the
    /// empty face when the translates are disjoint; never an error besides a
    /// dimension mismatch.
    pub fn intersect(&self, other: &Cell) -> Result<Face> {
        self.check_dim(other.ambient_dim())?;
        // Offsets beyond +-1 in any coordinate, or different hyperplanes,
        // force an empty intersection.
        let mut ours_up = Vec::new(); // t with other.v[t] = self.v[t] + 1
        let mut theirs_up = Vec::new(); // t with self.v[t] = other.v[t] + 1
        let mut free = Vec::new();
        for t in 0..self.v.len() {
            let delta = &other.v[t] - &self.v[t];
            if delta.is_zero() {
                free.push(t);
            } else if delta.is_one() {
                ours_up.push(t);
            } else if (-&delta).is_one() {
                theirs_up.push(t);
            } else {
                return Ok(Face::Empty);
            }
        }
        if self.hyperplane_level() != other.hyperplane_level() {
            return Ok(Face::Empty);
        }
        if self.j < ours_up.len() {
            return Ok(Face::Empty);
        }
        let k = self.j - ours_up.len();
        debug_assert_eq!(k as i64, other.j as i64 - theirs_up.len() as i64);
        if k > free.len() {
            return Ok(Face::Empty);
        }
        Ok(Face::hull(self.v.plus_indicator(&ours_up), free, k))
    }

    fn check_dim(&self, other_dim: usize) -> Result<()> {
        if self.ambient_dim() != other_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim(),
                right: other_dim,
            });
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CellDto::from(self)).expect("cell serialization cannot fail")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&CellDto::from(self)).expect("cell serialization cannot fail")
    }

    /// Parse the JSON form `{"v":[...], "j":n}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let dto: CellDto =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("cell JSON: {e}")))?;
        dto.try_into()
    }
}

/// Cells order by level first, then lexicographically by translation; this is
/// the deterministic order used everywhere cells are listed.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j, &self.v).cmp(&(other.j, &other.v))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} j={}", self.v, self.j)
    }
}

/// Wire form of a cell.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct CellDto {
    pub v: Vec<serde_json::Number>,
    pub j: u64,
}

impl From<&Cell> for CellDto {
    fn from(cell: &Cell) -> Self {
        CellDto {
            v: cell.v.coords().iter().map(bigint_to_number).collect(),
            j: cell.j as u64,
        }
    }
}

impl TryFrom<CellDto> for Cell {
    type Error = Error;

    fn try_from(dto: CellDto) -> Result<Cell> {
        let coords = dto
            .v
            .iter()
            .map(number_to_bigint)
            .collect::<Result<Vec<_>>>()?;
        let j = usize::try_from(dto.j)
            .map_err(|_| Error::Parse(format!("level out of range: {}", dto.j)))?;
        Cell::new(LatticeVector::new(coords), j)
    }
}

pub(crate) fn bigint_to_number(b: &BigInt) -> serde_json::Number {
    serde_json::from_str(&b.to_string()).expect("an integer literal is a valid JSON number")
}

pub(crate) fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt> {
    n.to_string()
        .parse()
        .map_err(|_| Error::Parse(format!("coordinate `{n}` is not an integer")))
}

/// Every lattice hypersimplex translate containing `x`: for a point with
/// integral coordinate sum these are exactly
/// `floor(x) - e_T + D(d, |T| + o)` for `T` ranging over the subsets of the
/// integral coordinates, where `o` is the fractional total of `x`, keeping
/// only levels in `[1, d]`. Sorted in the canonical cell order.
pub fn containing_translates(x: &RationalPoint) -> Result<Vec<Cell>> {
    let d = x.ambient_dim();
    let profile = x.frac_profile()?;
    let mut out = Vec::new();
    for subset in index_subsets(&profile.complement()) {
        let level = subset.len() + profile.frac_sum;
        if level < 1 || level > d {
            continue;
        }
        let cell = Cell::new(profile.floor.minus_indicator(&subset), level)
            .expect("level was checked against [1, d]");
        debug_assert_eq!(cell.contains(x), Ok(true));
        out.push(cell);
    }
    out.sort();
    Ok(out)
}
