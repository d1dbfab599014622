//! Small helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

/// `q` as an `i64` when it is an integer that fits.
pub fn to_i64(q: &Q) -> Option<i64> {
    if is_integer(q) {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Representative of `q` modulo `modulus` in `[0, modulus)`.
pub fn reduce_mod(q: &Q, modulus: &Q) -> Q {
    let k = (q / modulus).floor();
    q - k * modulus
}

pub fn ceil_div(n: i64, d: i64) -> i64 {
    Integer::div_ceil(&n, &d)
}

pub fn abs(q: &Q) -> Q {
    q.abs()
}

/// Renders `a/b`, or `a` for integers.
pub fn fmt(q: &Q) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn zero() -> Q {
    Q::zero()
}
