//! Helpers around [`num_rational::BigRational`].

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn ints(values: &[i64]) -> Vec<Q> {
    values.iter().map(|&v| int(v)).collect()
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` (surrounding whitespace allowed).
pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => BigInt::from_str(s).ok().map(Q::from_integer),
    }
}

/// Parses a comma-separated coordinate list such as `"1,5/2"`.
pub fn parse_list(s: &str) -> Option<Vec<Q>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(parse).collect()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_list(values: &[Q]) -> Vec<String> {
    values.iter().map(format).collect()
}

pub fn to_i64(q: &Q) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of all denominators.
pub fn common_denominator(values: &[Q]) -> BigInt {
    values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the absolute values; zero for an all-zero slice.
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |acc, &v| acc.gcd(&v))
}

pub fn is_negative(q: &Q) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("5/2"), Some(ratio(5, 2)));
        assert_eq!(parse(" -4/2 "), Some(int(-2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(format(&ratio(-6, 4)), "-3/2");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(parse_list("1,5/2"), Some(vec![int(1), ratio(5, 2)]));
        assert_eq!(parse_list("(1, -1)"), Some(vec![int(1), int(-1)]));
    }

    #[test]
    fn gcd_and_denominators() {
        assert_eq!(gcd_all(&[4, -6, 0]), 2);
        assert_eq!(gcd_all(&[0, 0]), 0);
        assert_eq!(common_denominator(&[ratio(1, 4), ratio(5, 6), int(3)]), BigInt::from(12));
    }
}
