//! Parsing and formatting of exact rationals as `"num/den"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parse a decimal-free rational string: `"5"`, `"-3/2"`, `"0"`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("bad integer in rational: {num:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad integer in rational: {den:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Format a rational canonically: integers without the `/1` suffix.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_from_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// True if `q` is a non-negative integer multiple of `1/k`.
pub fn has_denominator_dividing(q: &BigRational, k: &BigInt) -> bool {
    (q * BigRational::from_integer(k.clone())).is_integer()
}

pub fn is_positive(q: &BigRational) -> bool {
    q.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_are_canonical() {
        for s in ["0", "5", "-3/2", "7/3", "-1"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("2/-4").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
