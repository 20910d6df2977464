//! Arbitrary-precision nonnegative exponents.
//!
//! Exponents live inline as `u64` and promote to a boxed [`BigUint`] only when
//! a value no longer fits. The representation is canonical (a `Big` value is
//! always larger than `u64::MAX`), so derived equality and hashing are sound.

use alloc::boxed::Box;
use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(u64),
    Big(Box<BigUint>),
}

/// A nonnegative integer exponent with no fixed-width overflow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Repr);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Repr::Small(0));
    pub const ONE: Exponent = Exponent(Repr::Small(1));

    #[inline]
    pub const fn new(value: u64) -> Self {
        Exponent(Repr::Small(value))
    }

    pub fn from_biguint(value: BigUint) -> Self {
        match value.to_u64() {
            Some(v) => Exponent(Repr::Small(v)),
            None => Exponent(Repr::Big(Box::new(value))),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    /// The value as `u64`, if it fits.
    #[inline]
    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match &self.0 {
            Repr::Small(v) => BigUint::from(*v),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.to_biguint())
    }

    /// `self - rhs`, or `None` when the difference would be negative.
    pub fn checked_sub(&self, rhs: &Exponent) -> Option<Exponent> {
        match (&self.0, &rhs.0) {
            (Repr::Small(a), Repr::Small(b)) => a.checked_sub(*b).map(Exponent::new),
            _ => {
                let (a, b) = (self.to_biguint(), rhs.to_biguint());
                if a < b {
                    None
                } else {
                    Some(Exponent::from_biguint(a - b))
                }
            }
        }
    }

    /// `self * factor`.
    pub fn scale(&self, factor: u64) -> Exponent {
        if let Repr::Small(a) = self.0 {
            if let Some(p) = a.checked_mul(factor) {
                return Exponent::new(p);
            }
        }
        Exponent::from_biguint(self.to_biguint() * BigUint::from(factor))
    }

    pub fn gcd(&self, other: &Exponent) -> Exponent {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => Exponent::new(a.gcd(b)),
            _ => Exponent::from_biguint(self.to_biguint().gcd(&other.to_biguint())),
        }
    }

    /// Exact quotient `self / divisor` when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Exponent) -> Option<Exponent> {
        if divisor.is_zero() {
            return None;
        }
        match (&self.0, &divisor.0) {
            (Repr::Small(a), Repr::Small(b)) => (a % b == 0).then(|| Exponent::new(a / b)),
            _ => {
                let (q, r) = self.to_biguint().div_rem(&divisor.to_biguint());
                r.is_zero().then(|| Exponent::from_biguint(q))
            }
        }
    }
}

impl Default for Exponent {
    fn default() -> Self {
        Exponent::ZERO
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            (Repr::Small(_), Repr::Big(_)) => Ordering::Less,
            (Repr::Big(_), Repr::Small(_)) => Ordering::Greater,
            (Repr::Big(a), Repr::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Exponent {
    type Output = Exponent;

    #[inline]
    fn add(self, rhs: &Exponent) -> Exponent {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                return Exponent::new(s);
            }
        }
        Exponent::from_biguint(self.to_biguint() + rhs.to_biguint())
    }
}

impl Add for Exponent {
    type Output = Exponent;

    #[inline]
    fn add(self, rhs: Exponent) -> Exponent {
        &self + &rhs
    }
}

impl AddAssign<&Exponent> for Exponent {
    #[inline]
    fn add_assign(&mut self, rhs: &Exponent) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                *a = s;
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl<'a> Sum<&'a Exponent> for Exponent {
    fn sum<I: Iterator<Item = &'a Exponent>>(iter: I) -> Exponent {
        let mut total = Exponent::ZERO;
        for e in iter {
            total += e;
        }
        total
    }
}

impl From<u64> for Exponent {
    fn from(value: u64) -> Self {
        Exponent::new(value)
    }
}

impl From<u32> for Exponent {
    fn from(value: u32) -> Self {
        Exponent::new(u64::from(value))
    }
}

impl From<usize> for Exponent {
    fn from(value: usize) -> Self {
        Exponent::new(value as u64)
    }
}

impl From<BigUint> for Exponent {
    fn from(value: BigUint) -> Self {
        Exponent::from_biguint(value)
    }
}

impl PartialEq<u64> for Exponent {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
