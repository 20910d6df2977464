//! Hilbert-function numerics of the fiber ring `F(I)`, whose `k`-th graded
//! piece has dimension `μ(I^k)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};

use crate::bounds::Check;
use crate::error::{CoreError, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;

/// Ceiling on `μ(I^k)` during a series computation unless overridden.
pub const DEFAULT_GENERATOR_CEILING: usize = 200_000;

/// Default number of trailing zero coefficients required before an h-vector
/// is reported as stabilized.
pub const DEFAULT_TAIL_WINDOW: usize = 3;

/// `μ(I^0), μ(I^1), …, μ(I^{k_max})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuSeries {
    pub values: Vec<usize>,
}

impl MuSeries {
    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }
}

pub fn mu_series(i: &MonomialIdeal, k_max: usize) -> Result<MuSeries> {
    mu_series_with_ceiling(i, k_max, DEFAULT_GENERATOR_CEILING)
}

/// As [`mu_series`], failing with [`CoreError::ResourceLimit`] as soon as a
/// power would have more than `ceiling` generators.
pub fn mu_series_with_ceiling(i: &MonomialIdeal, k_max: usize, ceiling: usize) -> Result<MuSeries> {
    if i.is_zero() {
        return Err(CoreError::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(CoreError::Hypothesis("ideal must be proper"));
    }
    if k_max < 1 {
        return Err(CoreError::OutOfRange { what: "k_max", value: 0 });
    }
    let mut values = Vec::with_capacity(k_max + 1);
    values.push(1);
    let mut power = MonomialIdeal::unit(i.arity());
    for _ in 1..=k_max {
        // the raw product has μ(I^{k-1})·μ(I) candidates; refuse before forming it
        if power.mu().saturating_mul(i.mu()) > ceiling.saturating_mul(64) {
            return Err(CoreError::ResourceLimit { what: "power candidates", limit: ceiling as u64 });
        }
        power = power.product(i)?;
        if power.mu() > ceiling {
            return Err(CoreError::ResourceLimit { what: "generators of a power", limit: ceiling as u64 });
        }
        values.push(power.mu());
    }
    Ok(MuSeries { values })
}

/// Rows are the exponent vectors of `G(I)`.
pub fn exponent_matrix(i: &MonomialIdeal) -> Vec<Vec<BigInt>> {
    i.generators()
        .iter()
        .map(|g| g.exponents().iter().map(|e| e.to_bigint()).collect())
        .collect()
}

pub fn matrix_rank(rows: &[Vec<BigInt>]) -> usize {
    linalg::rank(rows)
}

/// `ℓ(I)` as the rank of the exponent matrix, valid for equigenerated `I`.
pub fn analytic_spread_equigenerated(i: &MonomialIdeal) -> Result<usize> {
    if i.is_zero() {
        return Err(CoreError::ZeroIdeal);
    }
    if !i.is_equigenerated() {
        return Err(CoreError::Hypothesis("ideal must be equigenerated; use the estimate instead"));
    }
    Ok(matrix_rank(&exponent_matrix(i)))
}

/// Degree-plus-one of the polynomial eventually matching `μ(I^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadEstimate {
    pub spread: usize,
    /// The top finite difference is constant and nonzero across the window.
    pub confident: bool,
}

/// Reads the degree of `k ↦ μ(I^k)` from finite differences over
/// `k_lo..=k_hi`.
pub fn analytic_spread_estimate(i: &MonomialIdeal, k_lo: usize, k_hi: usize) -> Result<SpreadEstimate> {
    if k_hi < k_lo || k_hi - k_lo + 1 < 4 {
        return Err(CoreError::OutOfRange { what: "estimate window length", value: (k_hi + 1).saturating_sub(k_lo) as u64 });
    }
    let series = mu_series(i, k_hi)?;
    let window: Vec<BigInt> = series.values[k_lo..=k_hi].iter().map(|&v| BigInt::from(v)).collect();
    Ok(spread_from_window(&window))
}

pub fn spread_from_window(window: &[BigInt]) -> SpreadEstimate {
    let mut diffs = window.to_vec();
    let mut degree = 0;
    // find the first order whose differences are constant
    while diffs.len() >= 2 && !diffs.windows(2).all(|w| w[0] == w[1]) {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        degree += 1;
    }
    let confident = diffs.len() >= 2 && !diffs[0].is_zero();
    SpreadEstimate { spread: degree + 1, confident }
}

/// The spread used by the h-vector: exact for equigenerated ideals and in
/// two variables, estimated (and required to be confident) otherwise.
pub fn spread_for_h_vector(i: &MonomialIdeal, k_max: usize) -> Result<usize> {
    if i.is_equigenerated() {
        return analytic_spread_equigenerated(i);
    }
    if i.arity() == 2 {
        // after factoring out the generator gcd a non-principal ideal of
        // K[x, y] has height 2, so μ(I^k) grows linearly
        return Ok(if i.is_principal() { 1 } else { 2 });
    }
    let k_lo = (k_max / 2).max(1);
    let est = analytic_spread_estimate(i, k_lo, k_max)?;
    if !est.confident {
        return Err(CoreError::Hypothesis("analytic spread estimate is not confident on this window"));
    }
    Ok(est.spread)
}

/// `h_i = Σ_{j ≤ min(i, ℓ)} (−1)^j C(ℓ, j) μ(I^{i−j})` for every index of
/// the series.
pub fn h_coefficients(series: &[usize], spread: usize) -> Vec<BigInt> {
    let ell = BigInt::from(spread);
    (0..series.len())
        .map(|i| {
            (0..=i.min(spread)).fold(BigInt::zero(), |acc, j| {
                let term = binomial(ell.clone(), BigInt::from(j)) * BigInt::from(series[i - j]);
                if j % 2 == 0 { acc + term } else { acc - term }
            })
        })
        .collect()
}

/// `μ(I^k) = Σ_{i ≤ k} h_i C(k − i + ℓ − 1, ℓ − 1)` for `k = 0..len`.
pub fn reconstruct_series(spread: usize, h: &[BigInt], len: usize) -> Vec<BigInt> {
    let top = BigInt::from(spread) - BigInt::from(1u8);
    (0..len)
        .map(|k| {
            h.iter().take(k + 1).enumerate().fold(BigInt::zero(), |acc, (i, hi)| {
                acc + hi * binomial(BigInt::from(k - i) + &top, top.clone())
            })
        })
        .collect()
}

/// The numerator `Q(t) = Σ h_i t^i` of the Hilbert series of `F(I)` over
/// `(1 − t)^ℓ`, truncated at the computed window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub spread: usize,
    /// `h_0, …, h_{k_max}`.
    pub coefficients: Vec<BigInt>,
    pub stabilized: bool,
    pub tail_window: usize,
}

impl HVector {
    /// Coefficients with trailing zeros dropped, padded to `ℓ` entries.
    pub fn trimmed(&self) -> &[BigInt] {
        let last = self.coefficients.iter().rposition(|h| !h.is_zero()).map_or(0, |p| p + 1);
        &self.coefficients[..last.max(self.spread).min(self.coefficients.len())]
    }

    pub fn h(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }
}

pub fn h_vector(i: &MonomialIdeal, k_max: usize, tail_window: usize) -> Result<HVector> {
    if tail_window < 1 {
        return Err(CoreError::OutOfRange { what: "tail window", value: 0 });
    }
    let spread = spread_for_h_vector(i, k_max)?;
    if k_max < spread + tail_window {
        return Err(CoreError::OutOfRange { what: "k_max below spread + tail window", value: k_max as u64 });
    }
    let series = mu_series(i, k_max)?;
    Ok(h_vector_from_series(&series.values, spread, tail_window))
}

pub fn h_vector_from_series(series: &[usize], spread: usize, tail_window: usize) -> HVector {
    let coefficients = h_coefficients(series, spread);
    let stabilized = coefficients.len() >= tail_window
        && coefficients[coefficients.len() - tail_window..].iter().all(Zero::is_zero);
    HVector { spread, coefficients, stabilized, tail_window }
}

pub type Point = Vec<BigInt>;

/// `S(I)`: the exponent vectors of `G(I)`.
pub fn exponent_points(i: &MonomialIdeal) -> Vec<Point> {
    exponent_matrix(i)
}

/// `2S = {a + b : a, b ∈ S}`, sorted and deduplicated.
pub fn doubling(set: &[Point]) -> Vec<Point> {
    let mut out = Vec::with_capacity(set.len() * (set.len() + 1) / 2);
    for (p, a) in set.iter().enumerate() {
        for b in &set[p..] {
            out.push(a.iter().zip(b).map(|(x, y)| x + y).collect::<Point>());
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Dimension of the affine hull of `S`.
pub fn freiman_dimension(set: &[Point]) -> Result<usize> {
    let base = set.first().ok_or(CoreError::Empty("point set"))?;
    let rows: Vec<Point> =
        set[1..].iter().map(|p| p.iter().zip(base).map(|(x, y)| x - y).collect()).collect();
    Ok(matrix_rank(&rows))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `|2S| ≥ (d+1)|S| − C(d+1, 2)` for a finite set of Freiman dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanSet {
    pub size: usize,
    pub doubling_size: usize,
    pub dimension: usize,
}

impl FreimanSet {
    pub fn lower_bound(&self) -> isize {
        ((self.dimension + 1) * self.size) as isize - choose2(self.dimension + 1) as isize
    }
}

impl Check for FreimanSet {
    fn holds(&self) -> bool {
        self.doubling_size as isize >= self.lower_bound()
    }
}

pub fn check_freiman_set(set: &[Point]) -> Result<FreimanSet> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(FreimanSet {
        dimension: freiman_dimension(&s)?,
        size: s.len(),
        doubling_size: doubling(&s).len(),
    })
}

/// `μ(I²) ≥ ℓμ(I) − C(ℓ, 2)` for equigenerated monomial `I`, together with
/// the identities `|2S(I)| = μ(I²)` and `dim S(I) + 1 = ℓ` it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanBound {
    pub spread: usize,
    pub mu: usize,
    pub mu_square: usize,
    pub doubling_size: usize,
    pub freiman_dimension: usize,
}

impl FreimanBound {
    pub fn lower_bound(&self) -> isize {
        (self.spread * self.mu) as isize - choose2(self.spread) as isize
    }
}

impl Check for FreimanBound {
    fn holds(&self) -> bool {
        self.mu_square as isize >= self.lower_bound()
            && self.doubling_size == self.mu_square
            && self.freiman_dimension + 1 == self.spread
    }
}

pub fn freiman_lower_bound(i: &MonomialIdeal) -> Result<FreimanBound> {
    if i.is_unit() {
        return Err(CoreError::Hypothesis("ideal must be proper"));
    }
    let spread = analytic_spread_equigenerated(i)?;
    let points = exponent_points(i);
    Ok(FreimanBound {
        spread,
        mu: i.mu(),
        mu_square: i.power(2).mu(),
        doubling_size: doubling(&points).len(),
        freiman_dimension: freiman_dimension(&points)?,
    })
}

/// For `ℓ(I) = 2` on the window `k = 0..=k_max`:
/// (a) `μ(I²) ≥ 2μ(I) − 1 ⟺ h_2 ≥ 0`;
/// (b) all `h_i ≥ 0 ⟹ μ(I^k) ≥ k(μ(I) − 1) + 1`;
/// (c) `h_i = 0` for all `i ≥ 2 ⟺ μ(I^k) = k(μ(I) − 1) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareCheck {
    pub series: Vec<usize>,
    pub h: Vec<BigInt>,
    pub clause_a: bool,
    pub clause_b: bool,
    pub clause_c: bool,
}

impl Check for CompareCheck {
    fn holds(&self) -> bool {
        self.clause_a && self.clause_b && self.clause_c
    }
}

pub fn check_compare(i: &MonomialIdeal, k_max: usize) -> Result<CompareCheck> {
    if k_max < 2 {
        return Err(CoreError::OutOfRange { what: "k_max", value: k_max as u64 });
    }
    let spread = spread_for_h_vector(i, k_max)?;
    if spread != 2 {
        return Err(CoreError::Hypothesis("analytic spread must be 2"));
    }
    let series = mu_series(i, k_max)?.values;
    let h = h_coefficients(&series, 2);
    let m = series[1];
    let line = |k: usize| k * (m - 1) + 1;
    let clause_a = (series[2] >= line(2)) == !h[2].is_negative();
    let all_nonneg = h.iter().all(|v| !v.is_negative());
    let clause_b = !all_nonneg || (1..=k_max).all(|k| series[k] >= line(k));
    let tail_zero = h[2..].iter().all(Zero::is_zero);
    let clause_c = tail_zero == (1..=k_max).all(|k| series[k] == line(k));
    Ok(CompareCheck { series, h, clause_a, clause_b, clause_c })
}

/// `μ(I) = h_1 + ℓ` and `μ(I²) = ℓμ(I) − C(ℓ, 2) + h_2`, with `μ` taken from
/// the ideal and its square directly and `h` from the series transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCheck {
    pub spread: usize,
    pub mu: usize,
    pub mu_square: usize,
    pub h1: BigInt,
    pub h2: BigInt,
}

impl Check for DifferenceCheck {
    fn holds(&self) -> bool {
        let ell = BigInt::from(self.spread);
        let first = BigInt::from(self.mu) == &self.h1 + &ell;
        let second = BigInt::from(self.mu_square)
            == &ell * BigInt::from(self.mu) - BigInt::from(choose2(self.spread)) + &self.h2;
        first && second
    }
}

pub fn check_difference(i: &MonomialIdeal, k_max: usize) -> Result<DifferenceCheck> {
    let spread = spread_for_h_vector(i, k_max.max(2))?;
    let series = mu_series(i, 2)?.values;
    let h = h_coefficients(&series, spread);
    Ok(DifferenceCheck {
        spread,
        mu: i.mu(),
        mu_square: i.power(2).mu(),
        h1: h[1].clone(),
        h2: h[2].clone(),
    })
}

/// `h_2 ≥ 0` for equigenerated monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Check {
    pub spread: usize,
    pub h2: BigInt,
}

impl Check for H2Check {
    fn holds(&self) -> bool {
        !self.h2.is_negative()
    }
}

pub fn check_h2_nonneg(i: &MonomialIdeal) -> Result<H2Check> {
    let spread = analytic_spread_equigenerated(i)?;
    let series = mu_series(i, 2)?.values;
    Ok(H2Check { spread, h2: h_coefficients(&series, spread)[2].clone() })
}
