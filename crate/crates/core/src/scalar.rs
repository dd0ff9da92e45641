//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Every algorithm in the crate is generic over [`Scalar`]. Two families of
//! implementors are provided: [`Rational`] (arbitrary precision, always
//! reduced) and [`Fp`] (residues modulo a prime fixed at compile time).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as a {field} coefficient")]
pub struct ScalarParseError {
    pub input: String,
    pub field: FieldTag,
}

/// Runtime description of a field, as it appears in data files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    Fp(u64),
}

impl FieldTag {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Rational => 0,
            FieldTag::Fp(p) => p,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// 0 for the rationals, `p` for `F_p`.
    const CHARACTERISTIC: u64;

    fn field_tag() -> FieldTag;

    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Parses the textual coefficient format used by data files
    /// (`"4"`, `"-2"`, `"2/3"`).
    fn parse_coefficient(s: &str) -> Result<Self, ScalarParseError>;
}

impl Scalar for Rational {
    const CHARACTERISTIC: u64 = 0;

    fn field_tag() -> FieldTag {
        FieldTag::Rational
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_coefficient(s: &str) -> Result<Self, ScalarParseError> {
        let err = || ScalarParseError {
            input: s.to_string(),
            field: FieldTag::Rational,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        let q = BigRational::from_str(t).map_err(|_| err())?;
        Ok(q)
    }
}

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`, kept in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID_MODULUS: () = assert!(is_prime(P) && P < (1 << 32), "Fp modulus must be a prime below 2^32");

    pub fn new(n: i64) -> Self {
        Self::from_reduced(n.rem_euclid(P as i64) as u64)
    }

    fn from_reduced(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID_MODULUS;
        debug_assert!(v < P);
        Fp(v)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::from_reduced(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_reduced((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_reduced((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_reduced(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    // Division is multiplication by the inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in F_p")
    }
}

/// Remainder in a field: zero for every nonzero divisor.
impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero in F_p");
        Self::from_reduced(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_reduced((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::from_reduced(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::from_reduced(1)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = ScalarParseError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let n = BigInt::from_str_radix(s.trim(), radix).map_err(|_| ScalarParseError {
            input: s.to_string(),
            field: FieldTag::Fp(P),
        })?;
        Ok(reduce_bigint(&n))
    }
}

fn reduce_bigint<const P: u64>(n: &BigInt) -> Fp<P> {
    let m = BigInt::from(P);
    let r = ((n % &m) + &m) % &m;
    Fp::from_reduced(r.to_u64().expect("residue fits in u64"))
}

impl<const P: u64> Scalar for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn field_tag() -> FieldTag {
        FieldTag::Fp(P)
    }

    fn from_i64(n: i64) -> Self {
        Self::new(n)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn parse_coefficient(s: &str) -> Result<Self, ScalarParseError> {
        let err = || ScalarParseError {
            input: s.to_string(),
            field: FieldTag::Fp(P),
        };
        let q = Rational::parse_coefficient(s).map_err(|_| err())?;
        let num = reduce_bigint::<P>(q.numer());
        let den = reduce_bigint::<P>(q.denom());
        if den.is_zero() {
            return Err(err());
        }
        Ok(num / den)
    }
}

/// Integer value of a rational, if it is one and fits in `i64`.
pub fn rational_to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Height of a rational (max of |numerator|, denominator); handy for
/// keeping random test data small.
pub fn rational_height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}
