//! Exact rational numbers.
//!
//! [`Rat`] keeps values that fit in machine words inline and only promotes
//! to a heap-allocated [`BigRational`] when a result overflows. Values are
//! always stored in lowest terms with a positive denominator, and a value
//! that fits the inline form is never stored as `Big`, so derived structural
//! equality coincides with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone)]
enum Repr {
    /// `den > 0`, `gcd(|num|, den) == 1`, `num != i64::MIN`.
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone)]
pub struct Rat(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rat {
    pub fn zero() -> Self {
        Rat(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rat(Repr::Small { num: 1, den: 1 })
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Rat::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Rat(Repr::Small { num: n, den: 1 })
    }

    /// Builds `num / den`, reducing to lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat::from_i128_pair(num as i128, den as i128)
    }

    pub fn from_big(value: BigRational) -> Self {
        let (Some(num), Some(den)) = (value.numer().to_i64(), value.denom().to_i64()) else {
            return Rat(Repr::Big(Box::new(value)));
        };
        if num == i64::MIN {
            return Rat(Repr::Big(Box::new(value)));
        }
        Rat(Repr::Small { num, den })
    }

    pub fn from_bigint(value: BigInt) -> Self {
        Rat::from_big(BigRational::from_integer(value))
    }

    fn from_i128_pair(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_u128(num.unsigned_abs(), den as u128);
        if g > 1 {
            num /= g as i128;
            den /= g as i128;
        }
        if num > i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128 {
            Rat(Repr::Small { num: num as i64, den: den as i64 })
        } else {
            Rat(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(num), BigInt::from(den)))))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small { num, den: 1 } => Some(*num),
            Repr::Small { .. } => None,
            Repr::Big(b) if b.is_integer() => b.numer().to_i64(),
            Repr::Big(_) => None,
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Rat {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small { num, den } => Rat::from_i128_pair(*den as i128, *num as i128),
            Repr::Big(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn pow(&self, exp: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let big = self.to_big();
        big.numer().div_floor(big.denom())
    }
}

fn add_ref(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
            if ad == bd {
                Rat::from_i128_pair(*an as i128 + *bn as i128, *ad as i128)
            } else {
                let num = *an as i128 * *bd as i128 + *bn as i128 * *ad as i128;
                Rat::from_i128_pair(num, *ad as i128 * *bd as i128)
            }
        }
        _ => Rat::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_ref(a: &Rat, b: &Rat) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
            if *an == 0 || *bn == 0 {
                return Rat::zero();
            }
            Rat::from_i128_pair(*an as i128 * *bn as i128, *ad as i128 * *bd as i128)
        }
        _ => {
            if a.is_zero() || b.is_zero() {
                return Rat::zero();
            }
            Rat::from_big(a.to_big() * b.to_big())
        }
    }
}

fn neg_ref(a: &Rat) -> Rat {
    match &a.0 {
        Repr::Small { num, den } => Rat(Repr::Small { num: -num, den: *den }),
        Repr::Big(b) => Rat::from_big(-(**b).clone()),
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_ref(&self)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        neg_ref(self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $f:expr) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                $f(self, rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $f(self, &rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                $f(&self, rhs)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $f(&self, &rhs)
            }
        }
        impl $assign_trait<&Rat> for Rat {
            fn $assign(&mut self, rhs: &Rat) {
                *self = $f(&*self, rhs);
            }
        }
        impl $assign_trait<Rat> for Rat {
            fn $assign(&mut self, rhs: Rat) {
                *self = $f(&*self, &rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, add_ref);
binop!(Sub, sub, SubAssign, sub_assign, |a: &Rat, b: &Rat| add_ref(a, &neg_ref(b)));
binop!(Mul, mul, MulAssign, mul_assign, mul_ref);
binop!(Div, div, DivAssign, div_assign, |a: &Rat, b: &Rat| mul_ref(a, &b.recip()));

impl Zero for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat::one()
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n as i64)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_bigint(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat::from_big(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to read a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {text:?}: {reason}")]
pub struct ParseRatError {
    pub text: String,
    pub reason: &'static str,
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p` or `p/q` with an optional sign on `p` and `q > 0`.
    fn from_str(text: &str) -> Result<Rat, ParseRatError> {
        let err = |reason| ParseRatError { text: text.chars().take(64).collect(), reason };
        let (num_part, den_part) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let unsigned = num_part.strip_prefix(['-', '+']).unwrap_or(num_part);
        if !is_digits(unsigned) {
            return Err(err("numerator is not an integer"));
        }
        let num: BigInt = num_part.parse().map_err(|_| err("numerator is not an integer"))?;
        let den: BigInt = match den_part {
            None => BigInt::one(),
            Some(d) => {
                if !is_digits(d) {
                    return Err(err("denominator is not a positive integer"));
                }
                d.parse().map_err(|_| err("denominator is not a positive integer"))?
            }
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rat::from_big(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Rat::from_int(n)),
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}
