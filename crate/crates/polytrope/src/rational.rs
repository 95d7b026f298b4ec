//! Exact rational scalars.
//!
//! Every weight in this crate is a `Rational`: an arbitrary-precision
//! fraction kept in lowest terms with positive denominator. Exactness is
//! load-bearing, since the fan structure downstream depends on deciding
//! ties between cycle means.

use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational, reduced. Panics on `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p"` or `"p/q"` with optional leading sign, exactly.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let mut it = s.splitn(2, '/');
    let num_s = it.next().unwrap_or("");
    let num = BigInt::from_str(num_s).map_err(|_| Error::Parse(format!("bad numerator {num_s:?}")))?;
    match it.next() {
        None => Ok(Rational::from_integer(num)),
        Some(den_s) => {
            let den =
                BigInt::from_str(den_s).map_err(|_| Error::Parse(format!("bad denominator {den_s:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Render in the same format `parse_rational` accepts: `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "5/2", "-7/3", "200000000000000000001/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
    }

    #[test]
    fn parse_rejects_junk() {
        for s in ["", "/", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "1 /2"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }
}
