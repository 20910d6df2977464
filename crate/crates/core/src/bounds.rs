//! Generator-count bounds for products, powers and intersections.
//!
//! Each checker evaluates one inequality on one instance and reports the
//! numbers involved. Inputs outside the hypotheses are rejected with
//! [`CoreError::Hypothesis`] instead of producing a verdict.

use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::ideal::MonomialIdeal;

/// Outcome of evaluating a claim on one instance.
pub trait Check {
    /// Whether the asserted statement holds on this instance.
    fn holds(&self) -> bool;
}

fn require_nonzero_proper(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(CoreError::Hypothesis("ideal must be nonzero"));
    }
    if i.is_unit() {
        return Err(CoreError::Hypothesis("ideal must be proper"));
    }
    Ok(())
}

fn require_same_arity(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if i.arity() != j.arity() {
        return Err(CoreError::ArityMismatch { expected: i.arity(), found: j.arity() });
    }
    Ok(())
}

fn require_height_two_plane(i: &MonomialIdeal) -> Result<()> {
    if i.arity() != 2 {
        return Err(CoreError::Hypothesis("ideal must live in two variables"));
    }
    require_nonzero_proper(i)?;
    if !i.is_artinian() {
        return Err(CoreError::Hypothesis("ideal must have height 2"));
    }
    Ok(())
}

/// `μ(IJ) ≥ μ(I) + μ(J) − 1` for equigenerated `I`, `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBound {
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_product: usize,
}

impl ProductBound {
    pub fn lower_bound(&self) -> usize {
        self.mu_left + self.mu_right - 1
    }

    /// The strict form `μ(IJ) > max(μ(I), μ(J))`, meaningful when neither
    /// factor is principal.
    pub fn exceeds_both(&self) -> bool {
        self.mu_product > self.mu_left.max(self.mu_right)
    }
}

impl Check for ProductBound {
    fn holds(&self) -> bool {
        let strict_ok = self.mu_left == 1 || self.mu_right == 1 || self.exceeds_both();
        self.mu_product >= self.lower_bound() && strict_ok
    }
}

pub fn check_product_bound(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<ProductBound> {
    require_same_arity(i, j)?;
    require_nonzero_proper(i)?;
    require_nonzero_proper(j)?;
    if !i.is_equigenerated() || !j.is_equigenerated() {
        return Err(CoreError::Hypothesis("both ideals must be equigenerated"));
    }
    let p = i.product(j)?;
    Ok(ProductBound { mu_left: i.mu(), mu_right: j.mu(), mu_product: p.mu() })
}

/// `μ(I_1 ⋯ I_r) ≥ Σ μ(I_j) − (r − 1)` for equigenerated factors, with
/// equality when every factor is a contracted ideal of `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedProductBound {
    pub mus: Vec<usize>,
    pub mu_product: usize,
    pub all_contracted: bool,
}

impl IteratedProductBound {
    pub fn lower_bound(&self) -> usize {
        self.mus.iter().sum::<usize>() + 1 - self.mus.len()
    }
}

impl Check for IteratedProductBound {
    fn holds(&self) -> bool {
        let bound = self.lower_bound();
        self.mu_product >= bound && (!self.all_contracted || self.mu_product == bound)
    }
}

pub fn check_iterated_product_bound(ideals: &[MonomialIdeal]) -> Result<IteratedProductBound> {
    let first = ideals.first().ok_or(CoreError::Empty("factor list"))?;
    let mut product = MonomialIdeal::unit(first.arity());
    for i in ideals {
        require_same_arity(first, i)?;
        require_nonzero_proper(i)?;
        if !i.is_equigenerated() {
            return Err(CoreError::Hypothesis("all factors must be equigenerated"));
        }
        product = product.product(i)?;
    }
    let all_contracted = first.arity() == 2 && ideals.iter().all(is_contracted_unchecked);
    Ok(IteratedProductBound {
        mus: ideals.iter().map(MonomialIdeal::mu).collect(),
        mu_product: product.mu(),
        all_contracted,
    })
}

/// `μ(I^k) ≥ k(μ(I) − 1) + 1` for `k = 1..=k_max`, with equality throughout
/// when `I` is a contracted ideal of `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerBound {
    pub mu: usize,
    /// `μ(I^k)` for `k = 0..=k_max`.
    pub series: Vec<usize>,
    pub contracted: bool,
}

impl PowerBound {
    pub fn lower_bound(&self, k: usize) -> usize {
        k * (self.mu - 1) + 1
    }

    /// First `k` at which the claim fails, if any.
    pub fn first_failure(&self) -> Option<usize> {
        (1..self.series.len()).find(|&k| {
            let bound = self.lower_bound(k);
            self.series[k] < bound || (self.contracted && self.series[k] != bound)
        })
    }
}

impl Check for PowerBound {
    fn holds(&self) -> bool {
        self.first_failure().is_none()
    }
}

pub fn check_power_bound(i: &MonomialIdeal, k_max: usize) -> Result<PowerBound> {
    require_nonzero_proper(i)?;
    if !i.is_equigenerated() {
        return Err(CoreError::Hypothesis("ideal must be equigenerated"));
    }
    let series = i.powers().take(k_max + 1).map(|p| p.mu()).collect();
    let contracted = i.arity() == 2 && is_contracted_unchecked(i);
    Ok(PowerBound { mu: i.mu(), series, contracted })
}

/// `μ(I ∩ J) ≤ μ(I) + μ(J) − 1` for height-2 ideals of `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionBound {
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_intersection: usize,
}

impl Check for IntersectionBound {
    fn holds(&self) -> bool {
        self.mu_intersection + 1 <= self.mu_left + self.mu_right
    }
}

pub fn check_intersection_bound(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<IntersectionBound> {
    require_height_two_plane(i)?;
    require_height_two_plane(j)?;
    Ok(IntersectionBound {
        mu_left: i.mu(),
        mu_right: j.mu(),
        mu_intersection: i.intersect(j)?.mu(),
    })
}

/// `μ(I) = o(I) + 1`, the contractedness criterion in two variables.
pub fn is_contracted(i: &MonomialIdeal) -> Result<bool> {
    if i.arity() != 2 {
        return Err(CoreError::Hypothesis("contractedness is decided in two variables only"));
    }
    if i.is_zero() {
        return Err(CoreError::ZeroIdeal);
    }
    Ok(is_contracted_unchecked(i))
}

fn is_contracted_unchecked(i: &MonomialIdeal) -> bool {
    i.order().is_ok_and(|o| o.to_u64().is_some_and(|o| o + 1 == i.mu() as u64))
}

/// For contracted `I`, `J` in `K[x, y]`: `μ(IJ) = μ(I) + μ(J) − 1` and `IJ`
/// is contracted again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedProduct {
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_product: usize,
    pub product_contracted: bool,
}

impl Check for ContractedProduct {
    fn holds(&self) -> bool {
        self.mu_product + 1 == self.mu_left + self.mu_right && self.product_contracted
    }
}

pub fn check_contracted_product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<ContractedProduct> {
    require_height_two_plane(i)?;
    require_height_two_plane(j)?;
    if !is_contracted_unchecked(i) || !is_contracted_unchecked(j) {
        return Err(CoreError::Hypothesis("both ideals must be contracted (μ = order + 1)"));
    }
    let p = i.product(j)?;
    Ok(ContractedProduct {
        mu_left: i.mu(),
        mu_right: j.mu(),
        mu_product: p.mu(),
        product_contracted: is_contracted_unchecked(&p),
    })
}
