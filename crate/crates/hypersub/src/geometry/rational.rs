use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

/// The coordinate scalar: an exact fraction with arbitrary-precision parts,
/// kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Coordinatewise floor as an integer.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac_part(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parse `a` or `a/b` with `b > 0` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational entry".into()));
    }
    let mut pieces = s.splitn(2, '/');
    let numer_src = pieces.next().expect("splitn yields at least one piece");
    let numer: BigInt = numer_src
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer `{numer_src}`")))?;
    match pieces.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(denom_src) => {
            let denom_src = denom_src.trim();
            if denom_src.starts_with(['+', '-']) {
                return Err(Error::Parse(format!(
                    "denominator must be a positive integer, got `{denom_src}`"
                )));
            }
            let denom: BigInt = denom_src
                .parse()
                .map_err(|_| Error::Parse(format!("invalid denominator `{denom_src}`")))?;
            if !denom.is_positive() {
                return Err(Error::Parse(format!(
                    "denominator must be positive, got `{denom}`"
                )));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}
