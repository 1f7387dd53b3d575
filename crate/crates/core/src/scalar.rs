//! Exact coefficient fields for homology computations.
//!
//! Every rank computation in the crate is generic over [`Scalar`]. Two
//! families implement it: the prime fields [`Fp`] (const-generic modulus)
//! and the rationals [`BigRational`]. Runtime field selection goes through
//! [`FieldSpec`] and the [`with_field!`](crate::with_field) dispatch macro.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An exact field usable as a coefficient ring.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// 0 for the rationals, `p` for `Fp<p>`.
    const CHARACTERISTIC: u32;

    fn from_i64(value: i64) -> Self;
}

/// Integers modulo the prime `P`.
///
/// `P` must be prime and below 2^31; division by zero panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(value: u64) -> Self {
        Fp((value % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P as u64 - 2)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u64 + P as u64 - rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Scalar for Fp<P> {
    const CHARACTERISTIC: u32 = P;

    fn from_i64(value: i64) -> Self {
        Fp(value.rem_euclid(P as i64) as u32)
    }
}

impl Scalar for BigRational {
    const CHARACTERISTIC: u32 = 0;

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

/// Primes with a compiled `Fp` instantiation, in ascending order.
pub const SUPPORTED_PRIMES: &[u32] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 32003, 65521, 2147483647,
];

/// Coefficient field chosen at runtime: characteristic 0 (rationals) or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const GF32003: FieldSpec = FieldSpec { characteristic: 32003 };

    pub fn new(characteristic: u32) -> Result<Self, Error> {
        if characteristic == 0 || SUPPORTED_PRIMES.contains(&characteristic) {
            Ok(FieldSpec { characteristic })
        } else if is_prime(characteristic) {
            Err(Error::UnsupportedCharacteristic(characteristic))
        } else {
            Err(Error::NotPrime(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF32003
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "QQ")
        } else {
            write!(f, "ZZ/{}", self.characteristic)
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs `$body` with the type alias `$F` bound to the concrete [`Scalar`]
/// selected by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {{
        let spec: $crate::FieldSpec = $spec;
        $crate::__with_field_arms!(spec.characteristic(), $F => $body;
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
            83, 89, 97, 101, 32003, 65521, 2147483647)
    }};
}

#[doc(hidden)]
#[macro_export]
macro_rules! __with_field_arms {
    ($c:expr, $F:ident => $body:expr; $($p:literal),*) => {
        match $c {
            0 => {
                #[allow(dead_code)]
                type $F = $crate::Rational;
                $body
            }
            $(
                $p => {
                    #[allow(dead_code)]
                    type $F = $crate::Fp<$p>;
                    $body
                }
            )*
            other => unreachable!("FieldSpec with unsupported characteristic {other}"),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        type F = Fp<7>;
        let a = F::new(3);
        let b = F::new(5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((a / b) * b, a);
        assert_eq!((-a).value(), 4);
        assert_eq!(F::from_i64(-1).value(), 6);
    }

    #[test]
    fn gf2_one_plus_one_is_zero() {
        type F = Fp<2>;
        assert!((F::one() + F::one()).is_zero());
        assert_eq!(-F::one(), F::one());
    }

    #[test]
    fn large_prime_does_not_overflow() {
        type F = Fp<2147483647>;
        let a = F::from_i64(2147483646);
        assert_eq!((a * a).value(), 1);
        assert_eq!(a.inverse(), a);
    }

    #[test]
    fn supported_table_is_prime_and_matches_macro() {
        for &p in SUPPORTED_PRIMES {
            assert!(is_prime(p));
            let spec = FieldSpec::new(p).unwrap();
            let c = with_field!(spec, F => <F as Scalar>::CHARACTERISTIC);
            assert_eq!(c, p);
        }
        let c = with_field!(FieldSpec::RATIONALS, F => <F as Scalar>::CHARACTERISTIC);
        assert_eq!(c, 0);
    }

    #[test]
    fn field_spec_rejects_composites_and_unlisted_primes() {
        assert!(matches!(FieldSpec::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(
            FieldSpec::new(103),
            Err(Error::UnsupportedCharacteristic(103))
        ));
    }
}
