use alloc::vec::Vec;

use crate::bounds::Check;
use crate::error::{CoreError, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::Staircase;

fn require_equigenerated_height_two(i: &MonomialIdeal) -> Result<Exponent> {
    if i.arity() != 2 {
        return Err(CoreError::Hypothesis("ideal must live in two variables"));
    }
    if i.is_zero() || i.is_unit() {
        return Err(CoreError::Hypothesis("ideal must be nonzero and proper"));
    }
    if !i.is_artinian() {
        return Err(CoreError::Hypothesis("ideal must have height 2"));
    }
    i.equigenerated_degree().ok_or(CoreError::Hypothesis("ideal must be equigenerated"))
}

/// `(x^a, y^a)^r` in `K[x, y]`.
pub fn pure_power_ideal_power(a: &Exponent, r: usize) -> MonomialIdeal {
    let base = MonomialIdeal::from_generators(
        2,
        [
            Monomial::new(alloc::vec![a.clone(), Exponent::ZERO]),
            Monomial::new(alloc::vec![Exponent::ZERO, a.clone()]),
        ],
    )
    .expect("two generators");
    base.power(r)
}

/// If `I = (x^a, y^a)^r` for positive `a`, `r`, returns `(a, r)`.
///
/// `a` is read off as the gcd of the gaps in the `x`-exponents and the
/// answer is confirmed by rebuilding the ideal.
pub fn power_shape(i: &MonomialIdeal) -> Option<(Exponent, usize)> {
    if i.arity() != 2 || i.mu() < 2 {
        return None;
    }
    let stair = Staircase::from_ideal(i).ok()?;
    let a = stair
        .a()
        .windows(2)
        .map(|w| w[0].checked_sub(&w[1]).expect("strictly decreasing"))
        .fold(Exponent::ZERO, |g, gap| g.gcd(&gap));
    let r = stair.len() - 1;
    (pure_power_ideal_power(&a, r) == *i).then_some((a, r))
}

/// The two sides of the equivalence "`μ(IJ) = μ(I) + μ(J) − 1` iff
/// `I = (x^a, y^a)^r` and `J = (x^a, y^a)^s`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEquality {
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_product: usize,
    /// `(a, r, s)` when both ideals are powers of one `(x^a, y^a)`.
    pub shape: Option<(Exponent, usize, usize)>,
}

impl ProductEquality {
    pub fn count_equal(&self) -> bool {
        self.mu_product + 1 == self.mu_left + self.mu_right
    }
}

impl Check for ProductEquality {
    fn holds(&self) -> bool {
        self.count_equal() == self.shape.is_some()
    }
}

pub fn classify_product_equality(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<ProductEquality> {
    require_equigenerated_height_two(i)?;
    require_equigenerated_height_two(j)?;
    let shape = match (power_shape(i), power_shape(j)) {
        (Some((a, r)), Some((b, s))) if a == b => Some((a, r, s)),
        _ => None,
    };
    Ok(ProductEquality {
        mu_left: i.mu(),
        mu_right: j.mu(),
        mu_product: i.product(j)?.mu(),
        shape,
    })
}

/// `μ(I ∩ J) < μ(IJ)` for equigenerated height-2 ideals of `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionBelowProduct {
    pub mu_intersection: usize,
    pub mu_product: usize,
}

impl Check for IntersectionBelowProduct {
    fn holds(&self) -> bool {
        self.mu_intersection < self.mu_product
    }
}

pub fn check_intersection_below_product(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<IntersectionBelowProduct> {
    require_equigenerated_height_two(i)?;
    require_equigenerated_height_two(j)?;
    Ok(IntersectionBelowProduct {
        mu_intersection: i.intersect(j)?.mu(),
        mu_product: i.product(j)?.mu(),
    })
}

/// For equigenerated height-2 `I` with `μ(I) = m`: `μ(I^k) = k(m−1)+1` at
/// one `k ≥ 2`, at every `k ≥ 2`, and `I = (x^a, y^a)^r` are equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerEquality {
    pub mu: usize,
    /// `μ(I^k)` for `k = 0..=k_max`.
    pub series: Vec<usize>,
    pub shape: Option<(Exponent, usize)>,
}

impl PowerEquality {
    fn attains(&self, k: usize) -> bool {
        self.series[k] == k * (self.mu - 1) + 1
    }
}

impl Check for PowerEquality {
    fn holds(&self) -> bool {
        let lower = (1..self.series.len()).all(|k| self.series[k] >= k * (self.mu - 1) + 1);
        lower && (2..self.series.len()).all(|k| self.attains(k) == self.shape.is_some())
    }
}

pub fn check_power_equality(i: &MonomialIdeal, k_max: usize) -> Result<PowerEquality> {
    require_equigenerated_height_two(i)?;
    if k_max < 2 {
        return Err(CoreError::OutOfRange { what: "k_max", value: k_max as u64 });
    }
    Ok(PowerEquality {
        mu: i.mu(),
        series: i.powers().take(k_max + 1).map(|p| p.mu()).collect(),
        shape: power_shape(i),
    })
}

/// Whether `I² = (x^d, y^d) I`, i.e. `I` has reduction number 1 with
/// respect to the pure powers of its generating degree `d`.
pub fn reduction_check(i: &MonomialIdeal) -> Result<bool> {
    let d = require_equigenerated_height_two(i)?;
    let j = pure_power_ideal_power(&d, 1);
    Ok(i.power(2) == j.product(i)?)
}

/// `I² = JI` against `μ(I²) = 2μ(I) − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub mu: usize,
    pub mu_square: usize,
    pub square_is_reduction_product: bool,
}

impl Check for ReductionCheck {
    fn holds(&self) -> bool {
        self.square_is_reduction_product == (self.mu_square + 1 == 2 * self.mu)
    }
}

pub fn check_reduction(i: &MonomialIdeal) -> Result<ReductionCheck> {
    let square_is_reduction_product = reduction_check(i)?;
    Ok(ReductionCheck { mu: i.mu(), mu_square: i.power(2).mu(), square_is_reduction_product })
}

fn sum_all(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let first = ideals.first().ok_or(CoreError::Empty("ideal list"))?;
    ideals[1..].iter().try_fold(first.clone(), |acc, i| acc.sum(i))
}

/// `(I_1 + … + I_r)^k = I_1^k + … + I_r^k`, evaluated without checking any
/// hypotheses.
pub fn sum_of_powers_matches(ideals: &[MonomialIdeal], k: usize) -> Result<bool> {
    let lhs = sum_all(ideals)?.power(k);
    let powers: Vec<MonomialIdeal> = ideals.iter().map(|i| i.power(k)).collect();
    Ok(lhs == sum_all(&powers)?)
}

/// [`sum_of_powers_matches`] restricted to its hypotheses: every `I_j`
/// generated in one degree `d`, of height 2, with sum `(x, y)^d`.
pub fn sum_power_distributes(ideals: &[MonomialIdeal], k: usize) -> Result<bool> {
    require_cold_hypotheses(ideals)?;
    sum_of_powers_matches(ideals, k)
}

fn require_cold_hypotheses(ideals: &[MonomialIdeal]) -> Result<()> {
    let first = ideals.first().ok_or(CoreError::Empty("ideal list"))?;
    let d = require_equigenerated_height_two(first)?;
    for i in ideals {
        if require_equigenerated_height_two(i)? != d {
            return Err(CoreError::Hypothesis("ideals must share one generating degree"));
        }
    }
    let d = d.to_u64().ok_or(CoreError::OutOfRange { what: "degree", value: u64::MAX })?;
    if sum_all(ideals)? != MonomialIdeal::maximal_power(2, d) {
        return Err(CoreError::Hypothesis("sum must be (x, y)^d"));
    }
    Ok(())
}

/// Distribution of powers over the sum, for `k = 1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPowerCheck {
    pub first_failure: Option<usize>,
}

impl Check for SumPowerCheck {
    fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn check_sum_power(ideals: &[MonomialIdeal], k_max: usize) -> Result<SumPowerCheck> {
    require_cold_hypotheses(ideals)?;
    for k in 1..=k_max {
        if !sum_of_powers_matches(ideals, k)? {
            return Ok(SumPowerCheck { first_failure: Some(k) });
        }
    }
    Ok(SumPowerCheck { first_failure: None })
}

/// Products of ideals with `G(I_j) = {x^{ia} y^{b_{i,j}}}_{i = s_j..=t_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackProduct {
    pub step: Exponent,
    pub mus: Vec<usize>,
    /// `s = Σ s_j`.
    pub s: u64,
    /// `c_s, …, c_t` with `c_i = min{b_{i_1,1} + … + b_{i_r,r} : Σ i_j = i}`.
    pub c: Vec<Exponent>,
    pub product: MonomialIdeal,
}

impl BackProduct {
    pub fn c_strictly_decreasing(&self) -> bool {
        self.c.windows(2).all(|w| w[0] > w[1])
    }

    /// The ideal generated by `x^{ia} y^{c_i}`.
    pub fn predicted(&self) -> MonomialIdeal {
        let gens = self.c.iter().enumerate().map(|(offset, c)| {
            Monomial::new(alloc::vec![self.step.scale(self.s + offset as u64), c.clone()])
        });
        MonomialIdeal::from_generators(2, gens).expect("c is nonempty")
    }

    pub fn predicted_mu(&self) -> usize {
        self.mus.iter().sum::<usize>() + 1 - self.mus.len()
    }
}

impl Check for BackProduct {
    fn holds(&self) -> bool {
        self.c_strictly_decreasing()
            && self.product.mu() == self.predicted_mu()
            && self.predicted() == self.product
            && self.product.mu() == self.c.len()
    }
}

/// Reads `(s_j, [b_{s_j}, …, b_{t_j}])` from `G(I)`, requiring the
/// `x`-exponents to be the consecutive multiples `s_j a, …, t_j a`.
fn back_shape(i: &MonomialIdeal, step: &Exponent) -> Result<(u64, Vec<Exponent>)> {
    if i.arity() != 2 {
        return Err(CoreError::Hypothesis("ideal must live in two variables"));
    }
    if i.is_zero() {
        return Err(CoreError::ZeroIdeal);
    }
    // canonical order is ascending in the x-exponent, so i runs s..=t
    let mut s = None;
    let mut bs = Vec::with_capacity(i.mu());
    for (offset, g) in i.generators().iter().enumerate() {
        let q = g
            .exponent(0)
            .exact_div(step)
            .ok_or(CoreError::Hypothesis("x-exponents must be multiples of the step"))?
            .to_u64()
            .ok_or(CoreError::OutOfRange { what: "x-exponent multiple", value: u64::MAX })?;
        let s0 = *s.get_or_insert(q);
        if q != s0 + offset as u64 {
            return Err(CoreError::Hypothesis("x-exponents must be consecutive multiples of the step"));
        }
        bs.push(g.exponent(1).clone());
    }
    Ok((s.expect("nonzero ideal"), bs))
}

fn min_plus(left: &[Exponent], right: &[Exponent]) -> Vec<Exponent> {
    let mut out: Vec<Option<Exponent>> = alloc::vec![None; left.len() + right.len() - 1];
    for (p, l) in left.iter().enumerate() {
        for (q, r) in right.iter().enumerate() {
            let v = l + r;
            let slot = &mut out[p + q];
            if slot.as_ref().is_none_or(|cur| v < *cur) {
                *slot = Some(v);
            }
        }
    }
    out.into_iter().map(|v| v.expect("every index is reached")).collect()
}

/// Computes `G(I_1 ⋯ I_r)` both directly and through the `c_i`.
pub fn back_product(ideals: &[MonomialIdeal], step: &Exponent) -> Result<BackProduct> {
    if step.is_zero() {
        return Err(CoreError::OutOfRange { what: "step", value: 0 });
    }
    let first = ideals.first().ok_or(CoreError::Empty("ideal list"))?;
    let (mut s, mut c) = back_shape(first, step)?;
    let mut product = first.clone();
    for i in &ideals[1..] {
        let (sj, bj) = back_shape(i, step)?;
        s += sj;
        c = min_plus(&c, &bj);
        product = product.product(i)?;
    }
    Ok(BackProduct {
        step: step.clone(),
        mus: ideals.iter().map(MonomialIdeal::mu).collect(),
        s,
        c,
        product,
    })
}
