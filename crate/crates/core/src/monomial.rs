use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};
use crate::exponent::Exponent;

/// A monomial `x^a`, stored as its exponent vector.
///
/// The derived ordering is lexicographic on the exponent sequence, which is
/// the canonical generator order used by [`MonomialIdeal`](crate::MonomialIdeal).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Monomial { exps }
    }

    pub fn from_u64s(exps: &[u64]) -> Self {
        Monomial { exps: exps.iter().map(|&e| Exponent::new(e)).collect() }
    }

    /// The constant monomial `1` in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial { exps: alloc::vec![Exponent::ZERO; arity] }
    }

    /// `x_var^exp` in `arity` variables.
    pub fn pure_power(arity: usize, var: usize, exp: Exponent) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[var] = exp;
        m
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> &Exponent {
        &self.exps[var]
    }

    pub fn into_exponents(self) -> Vec<Exponent> {
        self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> Exponent {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(Exponent::is_zero)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(i, _)| i)
    }

    /// If this is `x_i^e` with `e > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.support();
        let first = support.next()?;
        support.next().is_none().then_some(first)
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(CoreError::ArityMismatch { expected: self.arity(), found: other.arity() })
        }
    }

    /// Whether `self` divides `other`, i.e. every exponent is componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product `self * other` (exponent sum).
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.max(b).clone()).collect(),
        }
    }

    /// Greatest common divisor (componentwise min).
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.min(b).clone()).collect(),
        })
    }

    /// `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        if self.arity() != divisor.arity() {
            return None;
        }
        self.exps
            .iter()
            .zip(&divisor.exps)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `x_var * self`.
    pub fn times_var(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[var] += &Exponent::ONE;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Monomial").field(&self.exps).finish()
    }
}

/// Writes `x^2*y` style text: variables are named `x, y, z, t` for arity
/// up to four and `x1, x2, ...` otherwise. The constant monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHORT: [&str; 4] = ["x", "y", "z", "t"];
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if self.arity() <= SHORT.len() {
                f.write_str(SHORT[i])?;
            } else {
                write!(f, "x{}", i + 1)?;
            }
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_u64s(e)
    }

    #[test]
    fn divisibility_examples() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])).unwrap());
        assert!(!m(&[2, 1]).divides(&m(&[1, 5])).unwrap());
        let u = m(&[4, 0, 7]);
        assert!(u.divides(&u).unwrap());
    }

    #[test]
    fn divides_rejects_arity_mismatch() {
        assert_eq!(
            m(&[1, 0]).divides(&m(&[1, 0, 0])),
            Err(CoreError::ArityMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn display_uses_short_names() {
        assert_eq!(m(&[2, 1]).to_string(), "x^2*y");
        assert_eq!(m(&[0, 0, 0, 3]).to_string(), "t^3");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[1, 0, 0, 0, 2]).to_string(), "x1*x5^2");
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_var(), None);
        assert_eq!(m(&[0, 0]).pure_power_var(), None);
    }

    #[test]
    fn lcm_gcd_quotient() {
        let a = m(&[3, 0, 2]);
        let b = m(&[1, 4, 2]);
        assert_eq!(a.lcm(&b).unwrap(), m(&[3, 4, 2]));
        assert_eq!(a.gcd(&b).unwrap(), m(&[1, 0, 2]));
        assert_eq!(a.quotient(&m(&[1, 0, 1])), Some(m(&[2, 0, 1])));
        assert_eq!(a.quotient(&b), None);
    }
}
