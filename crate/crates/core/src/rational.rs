//! Exact rationals and their `"p/q"` string form.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Parses `"p/q"` or `"p"` with optional sign on the numerator.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Reduced `"p/q"` form; the denominator is always written.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: `"3"`, `"-1/2"`.
pub fn pretty(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn pow(r: &Rational, e: usize) -> Rational {
    let mut acc = one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["0/1", "3/1", "-7/4", "12345678901234567890123/7"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert!(parse("6/-4").is_err());
        assert_eq!(format(&parse("6/4").unwrap()), "3/2");
        assert_eq!(format(&parse("-5").unwrap()), "-5/1");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "/", "1/", "1/0", "a/b", "1.5", "--1", "1/2/3", " / 3"] {
            assert!(parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn zero_power_is_one() {
        assert_eq!(pow(&zero(), 0), one());
        assert_eq!(pow(&int(-2), 3), int(-8));
    }
}
