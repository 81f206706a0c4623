//! Exact rational scalars.
//!
//! Every computation in this crate is exact: scalars are arbitrary-precision
//! rationals, always stored in lowest terms with a positive denominator.
//! Parsing accepts the textual forms `"p"` and `"p/q"` used by the algebra
//! file format and rejects zero denominators.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Scalar = num_rational::BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair. Panics on zero denominator;
/// intended for literals in code, not for input data.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"` with optional sign, rejecting zero denominators
/// and malformed text.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = |_| Error::Parse(format!("invalid rational coefficient {text:?}"));
    match text.split_once('/') {
        None => {
            let p: BigInt = text.parse().map_err(bad)?;
            Ok(Scalar::from_integer(p))
        }
        Some((num, den)) => {
            let p: BigInt = num.trim().parse().map_err(bad)?;
            let q: BigInt = den.trim().parse().map_err(bad)?;
            if q.is_zero() {
                return Err(Error::Parse(format!(
                    "zero denominator in coefficient {text:?}"
                )));
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Canonical text form: `"p"` when the denominator is one, else `"p/q"`
/// with q positive and gcd(p, q) = 1.
pub fn render_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// True when the scalar is a negative number (used only for display).
pub fn is_negative(s: &Scalar) -> bool {
    s.numer().is_negative()
}
