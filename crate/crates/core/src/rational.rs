//! Exact rational scalars and their interchange format.
//!
//! All numeric values in the engine are arbitrary-precision rationals, stored
//! in lowest terms with a positive denominator (the representation invariant
//! of [`num_rational::BigRational`]). The interchange format is the string
//! `"p/q"`, or `"p"` for integers; no emitter ever writes a float.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Error;

pub type Rational = num_rational::BigRational;

/// Small-literal helper: `rat(1, 2)` is 1/2. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Whitespace around either part is tolerated.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            (n.trim().parse().map_err(|_| bad())?, d)
        }
        None => (t.parse().map_err(|_| bad())?, BigInt::one()),
    };
    Ok(Rational::new(num, den))
}

/// Formats in lowest terms, omitting the denominator when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
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
        for s in ["1/2", "-3/4", "0", "7", "-2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a/b", "1.5", "1//2"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }
}
