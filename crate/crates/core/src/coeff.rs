//! Exact coefficient rings used throughout the crate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

/// A coefficient ring: either arbitrary-precision integers or exact rationals.
pub trait Coeff: Clone + fmt::Debug + fmt::Display + PartialEq + Signed + From<BigInt> + Send + Sync + 'static {
    /// `Some(n)` when the value is an integer.
    fn as_integer(&self) -> Option<BigInt>;
}

impl Coeff for BigInt {
    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Coeff for BigRational {
    fn as_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ints(vs: &[i64]) -> Vec<BigInt> {
    vs.iter().map(|&v| BigInt::from(v)).collect()
}
