//! The integer scalar the linear-algebra layer is generic over.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use thiserror::Error;

/// Signalled by the checked fixed-width scalar when an operation would
/// wrap. The unbounded scalar never raises it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in fixed-width arithmetic")]
pub struct Overflow;

/// An exact signed integer scalar.
///
/// Normal-form computations (Hermite, Smith) make coefficients grow, so the
/// default scalar is the unbounded [`BigInt`]. The fixed-width `i64`
/// implementation checks every operation and signals [`Overflow`] instead
/// of wrapping.
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + 'static
{
    fn try_add(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn try_sub(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn try_neg(&self) -> Result<Self, Overflow>;
    fn from_i64(v: i64) -> Self;
    fn to_i64(&self) -> Option<i64>;
}

impl Int for BigInt {
    fn try_add(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self * rhs)
    }
    fn try_neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self)
    }
}

impl Int for i64 {
    fn try_add(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_add(*rhs).ok_or(Overflow)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*rhs).ok_or(Overflow)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*rhs).ok_or(Overflow)
    }
    fn try_neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
}
