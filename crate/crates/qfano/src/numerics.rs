//! Exact rational arithmetic and modular helpers.
//!
//! Every fractional quantity in the crate (degrees `A^3`, correction terms,
//! Euler characteristics, discrepancies) is a [`Rational`]: an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Intermediate products in the Euler-characteristic formulas
//! overflow 64-bit integers for large baskets, so arbitrary precision is not
//! optional.
//!
//! Rationals serialize as `"p/q"` in lowest terms and plain integers as
//! `"p"`; parsing accepts both forms. Ordering and hashing are defined on the
//! canonical form, so candidate records deduplicate deterministically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in canonical reduced form.
///
/// `BigRational` maintains the invariants this crate relies on: the fraction
/// is reduced, the denominator is positive, and zero is `0/1`. Its `Display`
/// prints `p/q` (or `p` when the denominator is one) and `FromStr` accepts
/// both forms, which is exactly the text format used by the CLI.
pub type Rational = BigRational;

/// Build the canonical rational `numerator / denominator`.
///
/// Sign and common factors are normalized: `(-3, -6)` becomes `1/2`, `(0, 5)`
/// becomes `0/1`. A zero denominator is an error.
pub fn normalize(numerator: i64, denominator: i64) -> Result<Rational> {
    if denominator == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(numerator), BigInt::from(denominator)))
}

/// Shorthand for a rational from a (numerator, denominator) pair known to be
/// valid. Panics on a zero denominator, so only use with constants.
pub fn rat(numerator: i64, denominator: i64) -> Rational {
    normalize(numerator, denominator).expect("nonzero denominator")
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Least non-negative representative of `x` modulo `r`.
pub fn residue(x: i64, r: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::InvalidInput(format!("residue modulus {r} must be >= 1")));
    }
    Ok(x.rem_euclid(r))
}

/// The unique `u` in `[1, r)` with `a * u = 1 (mod r)`.
///
/// Requires `gcd(a, r) = 1` and `r >= 2`; computed by the extended Euclidean
/// algorithm.
pub fn inverse_mod(a: i64, r: i64) -> Result<i64> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("inverse_mod modulus {r} must be >= 2")));
    }
    // Extended Euclid on (a mod r, r): old_s tracks the Bezout coefficient of a.
    let a0 = a.rem_euclid(r);
    let (mut old_r, mut cur_r) = (a0, r);
    let (mut old_s, mut cur_s) = (1i64, 0i64);
    while cur_r != 0 {
        let quot = old_r / cur_r;
        (old_r, cur_r) = (cur_r, old_r - quot * cur_r);
        (old_s, cur_s) = (cur_s, old_s - quot * cur_s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { a, r });
    }
    Ok(old_s.rem_euclid(r))
}

/// `gcd` on `u64`, with `gcd(0, n) = n`.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `lcm` on `u64`.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// True if the rational is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// The value of an integral rational as `i64`; errors when fractional or out
/// of range.
pub fn to_i64(x: &Rational) -> Result<i64> {
    if !is_integer(x) {
        return Err(Error::NonIntegralChi {
            chi: x.to_string(),
            what: "integer conversion".into(),
        });
    }
    i64::try_from(x.numer().clone())
        .map_err(|_| Error::InvalidInput(format!("{x} does not fit in i64")))
}

/// Smallest integer `m` with `m >= x`.
pub fn ceil_to_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Smallest non-negative integer `m` with `frac + m >= bound`.
///
/// Used for the threshold inequalities `beta >= t * alpha` where
/// `beta = frac + m` with `0 <= frac < 1`.
pub fn min_shift(frac: &Rational, bound: &Rational) -> Result<i64> {
    if frac.is_negative() || *frac >= rat_int(1) {
        return Err(Error::InvalidInput(format!("fractional part {frac} outside [0, 1)")));
    }
    let need = bound - frac;
    if need.is_negative() || need.is_zero() {
        return Ok(0);
    }
    let m = ceil_to_int(&need);
    i64::try_from(m).map_err(|_| Error::InvalidInput("threshold shift out of range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::str::FromStr;

    #[test]
    fn normalize_reduces() {
        assert_eq!(normalize(2, 4).unwrap(), rat(1, 2));
    }

    #[test]
    fn normalize_fixes_signs() {
        assert_eq!(normalize(-3, -6).unwrap(), rat(1, 2));
        assert_eq!(normalize(3, -6).unwrap(), rat(-1, 2));
    }

    #[test]
    fn normalize_zero() {
        let z = normalize(0, 5).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert!(matches!(normalize(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn normalize_idempotent() {
        let x = normalize(42, -90).unwrap();
        let again = Rational::new(x.numer().clone(), x.denom().clone());
        assert_eq!(x, again);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(7, 5).unwrap(), 2);
        assert_eq!(residue(-1, 7).unwrap(), 6);
        assert_eq!(residue(0, 3).unwrap(), 0);
        assert!(residue(1, 0).is_err());
        assert!(residue(1, -4).is_err());
    }

    #[test]
    fn inverse_mod_examples() {
        // 7 * 3 = 21 = 1 mod 5, checked exhaustively below as well.
        assert_eq!(inverse_mod(7, 5).unwrap(), 3);
        // 13 * 6 = 78 = 1 mod 7.
        assert_eq!(inverse_mod(13, 7).unwrap(), 6);
        assert_eq!(inverse_mod(1, 11).unwrap(), 1);
        assert!(matches!(inverse_mod(6, 4), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn inverse_mod_exhaustive_small_moduli() {
        for r in 2..=60i64 {
            for a in 1..r {
                if gcd_u64(a as u64, r as u64) == 1 {
                    let u = inverse_mod(a, r).unwrap();
                    assert!((1..r).contains(&u));
                    assert_eq!(residue(a * u, r).unwrap(), 1, "a={a} r={r}");
                } else {
                    assert!(inverse_mod(a, r).is_err());
                }
            }
        }
    }

    #[test]
    fn display_integer_and_fraction_forms() {
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(1157, 210).to_string(), "1157/210");
        assert_eq!(rat(-1, 8).to_string(), "-1/8");
        assert_eq!(Rational::from_str("1157/210").unwrap(), rat(1157, 210));
        assert_eq!(Rational::from_str("-7").unwrap(), rat_int(-7));
    }

    #[test]
    fn min_shift_examples() {
        // 1/2 + m >= 3  =>  m >= 3 (the q = 9 center-of-index-2 threshold).
        assert_eq!(min_shift(&rat(1, 2), &rat_int(3)).unwrap(), 3);
        // 4/5 >= 4/5 already.
        assert_eq!(min_shift(&rat(4, 5), &rat(4, 5)).unwrap(), 0);
        assert_eq!(min_shift(&rat_int(0), &rat_int(0)).unwrap(), 0);
        // 2/3 + m >= 2  =>  m >= 2.
        assert_eq!(min_shift(&rat(2, 3), &rat_int(2)).unwrap(), 2);
    }

    proptest! {
        // Canonical-form round trip: parse . to_string is the identity.
        #[test]
        fn display_parse_round_trip(n in -100_000i64..100_000, d in 1i64..10_000) {
            let x = normalize(n, d).unwrap();
            let back = Rational::from_str(&x.to_string()).unwrap();
            prop_assert_eq!(back, x);
        }

        // residue(a * inverse_mod(a, r), r) = 1 for all coprime pairs.
        #[test]
        fn inverse_property(a in 1i64..5_000, r in 2i64..500) {
            prop_assume!(gcd_u64(a as u64, r as u64) == 1);
            let u = inverse_mod(a, r).unwrap();
            prop_assert_eq!(residue(a * u, r).unwrap(), 1);
        }
    }
}
