use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::vector::LatticeVector;

/// A face of a hypersimplex translate, stored combinatorially: either the
/// empty polytope or `base + conv{ e_T : T subset of free, |T| = k }`.
///
/// Values are kept canonical: a face that is a single point is stored with an
/// empty `free` set and `k = 0`, so structural equality coincides with
/// point-set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Face {
    Empty,
    Hull(FaceHull),
}

/// The nonempty payload of [`Face`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceHull {
    base: LatticeVector,
    free: Vec<usize>,
    k: usize,
}

impl FaceHull {
    pub fn base(&self) -> &LatticeVector {
        &self.base
    }

    /// Sorted 0-based indices of the non-fixed coordinates.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Face {
    /// Build `base + conv{ e_T : T subset of free, |T| = k }` in canonical
    /// form. `free` must be strictly increasing and `k <= free.len()`.
    pub fn hull(base: LatticeVector, free: Vec<usize>, k: usize) -> Face {
        assert!(k <= free.len(), "face level {k} exceeds |free| = {}", free.len());
        assert!(
            free.windows(2).all(|w| w[0] < w[1]),
            "free index set must be strictly increasing"
        );
        assert!(
            free.last().is_none_or(|&t| t < base.len()),
            "free index out of range"
        );
        if k == 0 {
            Face::Hull(FaceHull {
                base,
                free: Vec::new(),
                k: 0,
            })
        } else if k == free.len() {
            Face::Hull(FaceHull {
                base: base.plus_indicator(&free),
                free: Vec::new(),
                k: 0,
            })
        } else {
            Face::Hull(FaceHull { base, free, k })
        }
    }

    pub fn point(base: LatticeVector) -> Face {
        Face::Hull(FaceHull {
            base,
            free: Vec::new(),
            k: 0,
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Face::Empty)
    }

    /// Dimension of the face; `None` for the empty face, `Some(0)` for a
    /// point, otherwise `|free| - 1`.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Face::Empty => None,
            Face::Hull(h) if h.free.is_empty() => Some(0),
            Face::Hull(h) => Some(h.free.len() - 1),
        }
    }

    /// The vertex set `{ base + e_T : T subset of free, |T| = k }`.
    /// Rejects the empty face.
    pub fn vertices(&self) -> Result<BTreeSet<LatticeVector>> {
        let h = match self {
            Face::Empty => return Err(Error::EmptyFace),
            Face::Hull(h) => h,
        };
        let mut out = BTreeSet::new();
        for subset in index_combinations(&h.free, h.k) {
            out.insert(h.base.plus_indicator(&subset));
        }
        Ok(out)
    }
}

/// All `k`-element subsets of `pool`, in lexicographic order of positions.
pub(crate) fn index_combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > pool.len() {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fill_combinations(pool, k, 0, &mut current, &mut out);
    out
}

fn fill_combinations(
    pool: &[usize],
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let needed = k - current.len();
    for pos in start..=pool.len() - needed {
        current.push(pool[pos]);
        fill_combinations(pool, k, pos + 1, current, out);
        current.pop();
    }
}

/// All subsets of `pool`, smallest first, lexicographic within a size.
pub(crate) fn index_subsets(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=pool.len() {
        out.extend(index_combinations(pool, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(coords)
    }

    #[test]
    fn vertices_of_an_edge() {
        let face = Face::hull(vec_of(&[1, 0, 0]), vec![1, 2], 1);
        let verts = face.vertices().unwrap();
        let expected: BTreeSet<_> = [vec_of(&[1, 1, 0]), vec_of(&[1, 0, 1])].into();
        assert_eq!(verts, expected);
        assert_eq!(face.dim(), Some(1));
    }

    #[test]
    fn degenerate_levels_are_points() {
        let low = Face::hull(vec_of(&[0, 0, 0]), vec![0, 1, 2], 0);
        assert_eq!(low.dim(), Some(0));
        assert_eq!(low.vertices().unwrap(), [vec_of(&[0, 0, 0])].into());

        let high = Face::hull(vec_of(&[0, 0, 0]), vec![0, 1, 2], 3);
        assert_eq!(high.dim(), Some(0));
        assert_eq!(high.vertices().unwrap(), [vec_of(&[1, 1, 1])].into());

        // Canonical form: both are stored as bare points, so equal point sets
        // mean equal values.
        assert_eq!(low, Face::point(vec_of(&[0, 0, 0])));
        assert_eq!(high, Face::point(vec_of(&[1, 1, 1])));
    }

    #[test]
    fn empty_face_has_no_vertices() {
        assert!(Face::Empty.is_empty());
        assert_eq!(Face::Empty.dim(), None);
        assert_eq!(Face::Empty.vertices(), Err(Error::EmptyFace));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(index_combinations(&[0, 1, 2, 3], 2).len(), 6);
        assert_eq!(index_combinations(&[0, 1], 3).len(), 0);
        assert_eq!(index_combinations(&[], 0), vec![Vec::<usize>::new()]);
        assert_eq!(index_subsets(&[0, 1]).len(), 4);
    }
}
