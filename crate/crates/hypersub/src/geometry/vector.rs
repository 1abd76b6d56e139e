use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An integer vector in the ambient space; translation vectors, floors and
/// vertices are all of this kind. Coordinates are arbitrary precision.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn zeros(len: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); len])
    }

    /// The `t`-th unit vector of the given length (0-based).
    pub fn unit(len: usize, t: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[t] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Self plus the indicator vector of `indices` (0-based, no duplicates).
    pub fn plus_indicator(&self, indices: &[usize]) -> Self {
        let mut v = self.clone();
        for &t in indices {
            v.0[t] += 1;
        }
        v
    }

    /// Self minus the indicator vector of `indices` (0-based, no duplicates).
    pub fn minus_indicator(&self, indices: &[usize]) -> Self {
        let mut v = self.clone();
        for &t in indices {
            v.0[t] -= 1;
        }
        v
    }

    pub fn plus_unit(&self, t: usize) -> Self {
        self.plus_indicator(&[t])
    }

    pub fn minus_unit(&self, t: usize) -> Self {
        self.minus_indicator(&[t])
    }
}

impl Index<usize> for LatticeVector {
    type Output = BigInt;

    fn index(&self, t: usize) -> &BigInt {
        &self.0[t]
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, c) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_arithmetic() {
        let v = LatticeVector::from_i64s(&[1, 0, 2]);
        assert_eq!(v.plus_indicator(&[0, 2]), LatticeVector::from_i64s(&[2, 0, 3]));
        assert_eq!(v.minus_unit(2), LatticeVector::from_i64s(&[1, 0, 1]));
        assert_eq!(v.sum(), BigInt::from(3));
        assert_eq!(format!("{v}"), "(1,0,2)");
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = LatticeVector::from_i64s(&[0, 0, 1]);
        let b = LatticeVector::from_i64s(&[0, 1, 0]);
        let c = LatticeVector::from_i64s(&[1, 0, 0]);
        assert!(a < b && b < c);
    }
}
