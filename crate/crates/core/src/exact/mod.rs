//! Exact rational linear algebra and univariate polynomial arithmetic over ℚ.
//!
//! Everything here is arbitrary precision; no floating point is used anywhere
//! in the engine.

mod factor;
mod matrix;
mod poly;
pub(crate) mod sparse;
mod sturm;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use factor::factor_over_q;
pub use matrix::RatMatrix;
pub(crate) use matrix::{apply_poly, krylov_min_poly};
pub use poly::RatPoly;
pub use sturm::count_real_roots;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` rendering (denominator always present, lowest terms).
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let err = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_format() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(0)), "0/1");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
