//! Monomial ideals represented by their unique minimal generating set.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};
use crate::exponent::Exponent;
use crate::monomial::Monomial;

/// A monomial ideal in `arity` variables.
///
/// The generator list is always the divisibility antichain `G(I)` in
/// ascending lexicographic order, so two ideals are equal exactly when their
/// generator lists are. An empty list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

/// Whether `u` divides `v`.
pub fn divides(u: &Monomial, v: &Monomial) -> Result<bool> {
    u.divides(v)
}

/// The ideal generated by `monomials`, reduced to its minimal generators.
///
/// An empty list is rejected; use [`MonomialIdeal::zero`] for the zero ideal.
pub fn minimalize(monomials: &[Monomial]) -> Result<MonomialIdeal> {
    let first = monomials.first().ok_or(CoreError::Empty("generator list"))?;
    MonomialIdeal::from_generators(first.arity(), monomials.iter().cloned())
}

/// Sorts, deduplicates and keeps only the divisibility-minimal elements.
fn minimal_elements(mut v: Vec<Monomial>, arity: usize) -> Vec<Monomial> {
    v.sort_unstable();
    v.dedup();
    match arity {
        0 => v,
        1 => {
            v.truncate(1);
            v
        }
        2 => {
            // Lex order sorts by x-exponent first; an element survives iff its
            // y-exponent beats every element with smaller or equal x-exponent.
            let mut min_y: Option<Exponent> = None;
            v.retain(|m| {
                let y = m.exponent(1);
                match &min_y {
                    Some(b) if y >= b => false,
                    _ => {
                        min_y = Some(y.clone());
                        true
                    }
                }
            });
            v
        }
        _ => {
            let mut by_degree: Vec<(Exponent, Monomial)> =
                v.into_iter().map(|m| (m.degree(), m)).collect();
            by_degree.sort_unstable();
            let mut kept: Vec<(Exponent, Monomial)> = Vec::new();
            for (deg, m) in by_degree {
                // After dedup, a proper divisor has strictly smaller degree.
                if !kept.iter().any(|(d, g)| *d < deg && g.divides_unchecked(&m)) {
                    kept.push((deg, m));
                }
            }
            let mut out: Vec<Monomial> = kept.into_iter().map(|(_, m)| m).collect();
            out.sort_unstable();
            out
        }
    }
}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero(arity: usize) -> Self {
        MonomialIdeal { arity, gens: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit(arity: usize) -> Self {
        MonomialIdeal { arity, gens: alloc::vec![Monomial::one(arity)] }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal { arity: m.arity(), gens: alloc::vec![m] }
    }

    /// Builds the ideal generated by `gens`; every monomial must have `arity` variables.
    pub fn from_generators<I>(arity: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(CoreError::Empty("generator list"));
        }
        if let Some(bad) = gens.iter().find(|g| g.arity() != arity) {
            return Err(CoreError::ArityMismatch { expected: arity, found: bad.arity() });
        }
        Ok(MonomialIdeal { arity, gens: minimal_elements(gens, arity) })
    }

    /// Convenience constructor from exponent rows, all of the same length.
    pub fn from_rows(rows: &[&[u64]]) -> Result<Self> {
        let first = rows.first().ok_or(CoreError::Empty("generator list"))?;
        Self::from_generators(first.len(), rows.iter().map(|r| Monomial::from_u64s(r)))
    }

    /// `(x_1, ..., x_n)^d`.
    pub fn maximal_power(arity: usize, d: u64) -> Self {
        let mut gens = Vec::new();
        let mut current = alloc::vec![0u64; arity];
        fn rec(var: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Monomial>) {
            if var + 1 == cur.len() {
                cur[var] = left;
                out.push(Monomial::from_u64s(cur));
                return;
            }
            for e in 0..=left {
                cur[var] = e;
                rec(var + 1, left - e, cur, out);
            }
            cur[var] = 0;
        }
        if arity == 0 {
            return MonomialIdeal::unit(0);
        }
        rec(0, d, &mut current, &mut gens);
        gens.sort_unstable();
        MonomialIdeal { arity, gens }
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `G(I)` in canonical (ascending lexicographic) order.
    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    #[inline]
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    fn check_arity(&self, other: usize) -> Result<()> {
        if self.arity == other {
            Ok(())
        } else {
            Err(CoreError::ArityMismatch { expected: self.arity, found: other })
        }
    }

    /// Whether `u` lies in the ideal.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_arity(u.arity())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other.arity)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// `IJ`. A zero factor gives the zero ideal.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.arity));
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                sums.push(g.mul_unchecked(h));
            }
        }
        Ok(MonomialIdeal { arity: self.arity, gens: minimal_elements(sums, self.arity) })
    }

    /// `I^k` by iterated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, k: usize) -> MonomialIdeal {
        self.powers().nth(k).expect("powers() is infinite")
    }

    /// `I^0, I^1, I^2, ...`.
    pub fn powers(&self) -> Powers<'_> {
        Powers { base: self, prev: None }
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.arity));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm_unchecked(h));
            }
        }
        Ok(MonomialIdeal { arity: self.arity, gens: minimal_elements(lcms, self.arity) })
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        let union: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { arity: self.arity, gens: minimal_elements(union, self.arity) })
    }

    /// The least degree of a generator.
    pub fn order(&self) -> Result<Exponent> {
        self.gens.iter().map(Monomial::degree).min().ok_or(CoreError::ZeroIdeal)
    }

    /// The common generator degree, if all generators share one.
    pub fn equigenerated_degree(&self) -> Option<Exponent> {
        let mut degrees = self.gens.iter().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.equigenerated_degree().is_some()
    }

    /// For each variable, the exponent of the pure power of it among the
    /// generators, if every variable has one.
    pub fn pure_power_exponents(&self) -> Option<Vec<Exponent>> {
        let mut found: Vec<Option<Exponent>> = alloc::vec![None; self.arity];
        for g in &self.gens {
            if let Some(v) = g.pure_power_var() {
                found[v] = Some(g.exponent(v).clone());
            }
        }
        found.into_iter().collect()
    }

    /// Height equal to the number of variables, i.e. a pure power of every
    /// variable is a generator.
    pub fn is_artinian(&self) -> bool {
        self.arity > 0 && self.pure_power_exponents().is_some()
    }

    /// Greatest common divisor of the generators.
    pub fn generator_gcd(&self) -> Option<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.gcd(g).expect("same arity")))
    }

    /// Splits `I = f * J` with `f` the gcd of the generators, so that `J` has
    /// no monomial factor in common. `μ(I^k) = μ(J^k)` for every `k`.
    pub fn factor_common(&self) -> Result<(Monomial, MonomialIdeal)> {
        let f = self.generator_gcd().ok_or(CoreError::ZeroIdeal)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.quotient(&f).expect("gcd divides every generator"))
            .collect();
        Ok((f, MonomialIdeal { arity: self.arity, gens }))
    }

    /// `f * I`.
    pub fn scale(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(f.arity())?;
        let gens = self.gens.iter().map(|g| g.mul_unchecked(f)).collect();
        Ok(MonomialIdeal { arity: self.arity, gens })
    }

    /// Image under the map sending every variable outside `vars` to zero,
    /// kept in the same ambient ring: the generators supported on `vars`.
    pub fn restrict_support(&self, vars: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support().all(|v| vars.contains(&v)))
            .cloned()
            .collect();
        MonomialIdeal { arity: self.arity, gens }
    }
}

/// Iterator over the powers of an ideal.
pub struct Powers<'a> {
    base: &'a MonomialIdeal,
    prev: Option<MonomialIdeal>,
}

impl Iterator for Powers<'_> {
    type Item = MonomialIdeal;

    fn next(&mut self) -> Option<MonomialIdeal> {
        let current = match self.prev.take() {
            None => MonomialIdeal::unit(self.base.arity),
            Some(p) => p.product(self.base).expect("same arity"),
        };
        self.prev = Some(current.clone());
        Some(current)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[{}]({})", self.arity, self)
    }
}

/// Comma-separated generators in canonical order; the zero ideal prints as `0`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
