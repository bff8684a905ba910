//! Numeric abstraction used by bound formulas and Monte-Carlo statistics.
//!
//! Theorem rows are evaluated in any [`Scalar`]; the canonical choice is the
//! exact [`Rational`] so that tight bounds compare exactly. Floating scalars
//! (`f32`, `f64`) are accepted for quick screening.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Exact rational arithmetic on 64-bit integers.
pub type Rational = Ratio<i64>;

pub trait Scalar:
    Num + Signed + FromPrimitive + Copy + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// `num / den` in this scalar. `den` must be nonzero.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("integer fits scalar") / Self::from_i64(den).expect("integer fits scalar")
    }

    fn from_count(count: usize) -> Self {
        Self::from_usize(count).expect("count fits scalar")
    }

    /// Lossy conversion used for display columns.
    fn approx_f64(&self) -> f64;

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Scalar for Rational {
    fn approx_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for f64 {
    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn approx_f64(&self) -> f64 {
        f64::from(*self)
    }
}

/// `ln(k)/k`, the asymptotic order of the total transversal ratio.
pub fn log_ratio<F: num_traits::Float>(k: usize) -> F {
    let k = F::from(k).expect("k fits float");
    k.ln() / k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ratio_reduces() {
        let r = Rational::ratio(4, 10);
        assert_eq!(r, Rational::new(2, 5));
        assert_eq!(r.to_string(), "2/5");
    }

    #[test]
    fn float_ratio() {
        assert!((f64::ratio(1, 3) - 1.0 / 3.0).abs() < 1e-15);
        assert!((f32::ratio(2, 7) - 2.0 / 7.0).abs() < 1e-6);
    }

    #[test]
    fn max_of_prefers_larger() {
        assert_eq!(Rational::ratio(2, 5).max_of(Rational::ratio(1, 3)), Rational::ratio(2, 5));
    }

    #[test]
    fn log_ratio_k20() {
        let v: f64 = log_ratio(20);
        assert!((v - 0.149_786_6).abs() < 1e-6);
    }
}
