use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::rational::{floor_int, frac_part, parse_rational, Rational};
use crate::geometry::vector::LatticeVector;

/// A point of the ambient space with exact rational coordinates. A point of
/// ambient dimension `d` has `d + 1` coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<Rational>,
    sum: Rational,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "a point needs at least 2 coordinates (ambient dimension >= 1), got {}",
                coords.len()
            )));
        }
        let sum = coords.iter().sum();
        Ok(RationalPoint { coords, sum })
    }

    /// Parse the comma-separated text form: entries `a` or `a/b` with `b > 0`,
    /// e.g. `1/2,1/2,1,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn from_lattice(v: &LatticeVector) -> Result<Self> {
        Self::new(
            v.coords()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// The ambient dimension `d`; the point has `d + 1` coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coordinate_sum(&self) -> &Rational {
        &self.sum
    }

    /// The fractional-part profile: which coordinates are fractional, their
    /// total, and the coordinatewise floor. Requires the coordinate sum to be
    /// an integer, which forces the fractional total to be one as well.
    pub fn frac_profile(&self) -> Result<FracProfile> {
        if !self.sum.is_integer() {
            return Err(Error::NonIntegralSum(format!("sum is {}", self.sum)));
        }
        let mut support = Vec::new();
        let mut floor = Vec::with_capacity(self.coords.len());
        let mut frac_total = Rational::zero();
        for (t, x) in self.coords.iter().enumerate() {
            let f = frac_part(x);
            if !f.is_zero() {
                support.push(t);
                frac_total += f;
            }
            floor.push(floor_int(x));
        }
        debug_assert!(frac_total.is_integer());
        let frac_sum = usize::try_from(frac_total.to_integer())
            .expect("fractional parts are in [0, 1), so their integral sum fits usize");
        Ok(FracProfile {
            support,
            frac_sum,
            floor: LatticeVector::new(floor),
        })
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, c) in self.coords.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Output of [`RationalPoint::frac_profile`].
///
/// `support` holds the (0-based) indices of coordinates with positive
/// fractional part, `frac_sum` their integer total, and `floor` the
/// coordinatewise floor. If `support` is nonempty then
/// `1 <= frac_sum <= support.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracProfile {
    pub support: Vec<usize>,
    pub frac_sum: usize,
    pub floor: LatticeVector,
}

impl FracProfile {
    /// Indices not in the support, i.e. coordinates that are integers.
    pub fn complement(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.floor.len() - self.support.len());
        let mut support = self.support.iter().peekable();
        for t in 0..self.floor.len() {
            if support.peek() == Some(&&t) {
                support.next();
            } else {
                out.push(t);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(s: &str) -> RationalPoint {
        RationalPoint::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = point("1/2,1/2,1,0");
        assert_eq!(p.ambient_dim(), 3);
        assert_eq!(format!("{p}"), "1/2,1/2,1,0");
        assert_eq!(RationalPoint::parse(&format!("{p}")).unwrap(), p);
        assert!(RationalPoint::parse("1").is_err());
        assert!(RationalPoint::parse("1,,2").is_err());
    }

    #[test]
    fn frac_profile_examples() {
        let profile = point("1/2,1/2,1,0").frac_profile().unwrap();
        assert_eq!(profile.support, vec![0, 1]);
        assert_eq!(profile.frac_sum, 1);
        assert_eq!(profile.floor, LatticeVector::from_i64s(&[0, 0, 1, 0]));
        assert_eq!(profile.complement(), vec![2, 3]);

        let profile = point("2,0,0,0").frac_profile().unwrap();
        assert!(profile.support.is_empty());
        assert_eq!(profile.frac_sum, 0);
        assert_eq!(profile.floor, LatticeVector::from_i64s(&[2, 0, 0, 0]));

        let profile = point("1/3,1/3,1/3,1").frac_profile().unwrap();
        assert_eq!(profile.support, vec![0, 1, 2]);
        assert_eq!(profile.frac_sum, 1);
        assert_eq!(profile.floor, LatticeVector::from_i64s(&[0, 0, 0, 1]));
    }

    #[test]
    fn frac_profile_rejects_non_integral_sum() {
        assert!(matches!(
            point("1/2,0,0").frac_profile(),
            Err(Error::NonIntegralSum(_))
        ));
    }

    #[test]
    fn frac_profile_handles_negative_coordinates() {
        // floor(-3/2) = -2, fractional part 1/2.
        let profile = point("-3/2,1/2,1,0").frac_profile().unwrap();
        assert_eq!(profile.support, vec![0, 1]);
        assert_eq!(profile.frac_sum, 1);
        assert_eq!(profile.floor, LatticeVector::from_i64s(&[-2, 0, 1, 0]));
    }

    #[test]
    fn frac_sum_bounds() {
        // Whenever the support is nonempty, 1 <= frac_sum <= |support| - 1.
        for s in [
            "1/2,1/2,0,0",
            "1/3,1/3,1/3,5",
            "2/3,2/3,2/3,-1",
            "1/4,3/4,1/2,1/2",
            "9/10,1/10,3,4",
        ] {
            let profile = point(s).frac_profile().unwrap();
            assert!(!profile.support.is_empty());
            assert!(profile.frac_sum >= 1);
            assert!(profile.frac_sum < profile.support.len());
        }
    }
}
