//! Exact scalar arithmetic helpers.
//!
//! All symbolic coefficients in this crate are `BigRational`. Denominators
//! grow like q^n under the truncated geometric series in [`crate::bszcore`],
//! so fixed-width rationals are not an option.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Nonnegative integer power with exact arithmetic.
pub fn pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Parses "p/q" or "p". Used for CLI parameters and config files.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    s.parse::<Rat>().map_err(|_| Error::Parse {
        detail: format!("expected rational like 2/3 or -1, got {s:?}"),
    })
}

/// Canonical "p/q" (or "p" for integers) string, as emitted in JSON.
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Checks a Szego parameter: nonzero and strictly inside the unit interval.
pub fn check_parameter(t: &Rat) -> Result<()> {
    if t.is_zero() || t.abs() >= Rat::one() {
        return Err(Error::ParameterDomain {
            detail: format!("parameter {t} outside (-1,1) \\ {{0}}"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/3", "-2/7", "4", "0", "-1"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_str(&r), s);
        }
        assert!(parse_rat("x").is_err());
        // Non-canonical input normalizes.
        assert_eq!(rat_str(&parse_rat("2/4").unwrap()), "1/2");
    }

    #[test]
    fn f64_conversion_accuracy() {
        let r = ratio(-355, 113);
        assert!((rat_to_f64(&r) - (-355.0 / 113.0)).abs() < 1e-14);
    }

    #[test]
    fn parameter_domain() {
        assert!(check_parameter(&ratio(1, 2)).is_ok());
        assert!(check_parameter(&ratio(-8, 9)).is_ok());
        assert!(check_parameter(&rat(0)).is_err());
        assert!(check_parameter(&rat(1)).is_err());
        assert!(check_parameter(&ratio(-9, 9)).is_err());
        assert!(check_parameter(&ratio(10, 9)).is_err());
    }
}
