//! Monomial ideals of `K[x, y]` through their staircase sequences.
//!
//! A nonzero monomial ideal in two variables is the same thing as a pair of
//! sequences `a_1 > … > a_m ≥ 0` and `0 ≤ b_1 < … < b_m` with
//! `G(I) = {x^{a_i} y^{b_i}}`. Generator indices in this module are 1-based,
//! so that the `k`-th diagonal of the triangle of products is `i + j = k`.

mod equality;
mod lex;

pub use equality::{
    back_product, check_intersection_below_product, check_power_equality, check_reduction,
    check_sum_power, classify_product_equality, power_shape, pure_power_ideal_power,
    reduction_check, sum_of_powers_matches, sum_power_distributes, BackProduct,
    IntersectionBelowProduct, PowerEquality, ProductEquality, ReductionCheck, SumPowerCheck,
};
pub use lex::{is_lexsegment, lexsegment_generate};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bounds::Check;
use crate::error::{CoreError, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The exponent sequences of the generators of a monomial ideal in `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    a: Vec<Exponent>,
    b: Vec<Exponent>,
}

impl Staircase {
    /// Validates `a` strictly decreasing, `b` strictly increasing, equal lengths.
    pub fn new(a: Vec<Exponent>, b: Vec<Exponent>) -> Result<Self> {
        if a.is_empty() {
            return Err(CoreError::InvalidStaircase("sequences must be nonempty"));
        }
        if a.len() != b.len() {
            return Err(CoreError::InvalidStaircase("sequences must have equal length"));
        }
        if a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CoreError::InvalidStaircase("x-exponents must strictly decrease"));
        }
        if b.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::InvalidStaircase("y-exponents must strictly increase"));
        }
        Ok(Staircase { a, b })
    }

    pub fn from_u64s(a: &[u64], b: &[u64]) -> Result<Self> {
        Self::new(a.iter().map(|&v| v.into()).collect(), b.iter().map(|&v| v.into()).collect())
    }

    /// Reads the staircase of a nonzero ideal of `K[x, y]`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.arity() != 2 {
            return Err(CoreError::ArityMismatch { expected: 2, found: ideal.arity() });
        }
        if ideal.is_zero() {
            return Err(CoreError::ZeroIdeal);
        }
        // canonical order is ascending in x; staircase order is descending
        let (a, b) = ideal
            .generators()
            .iter()
            .rev()
            .map(|g| (g.exponent(0).clone(), g.exponent(1).clone()))
            .unzip();
        Ok(Staircase { a, b })
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(2, (1..=self.len()).map(|i| self.generator(i)))
            .expect("staircase is nonempty")
    }

    /// `m = μ(I)`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn a(&self) -> &[Exponent] {
        &self.a
    }

    pub fn b(&self) -> &[Exponent] {
        &self.b
    }

    /// `u_i = x^{a_i} y^{b_i}`, 1-based.
    pub fn generator(&self, i: usize) -> Monomial {
        Monomial::new(alloc::vec![self.a[i - 1].clone(), self.b[i - 1].clone()])
    }

    /// Writes `I = x^{a_m} y^{b_1} J` and returns the common factor with the
    /// staircase of `J`, which has height 2 (`a_m = 0`, `b_1 = 0`).
    pub fn normalize(&self) -> (Monomial, Staircase) {
        let ax = self.a[self.len() - 1].clone();
        let by = self.b[0].clone();
        let a = self.a.iter().map(|v| v.checked_sub(&ax).expect("a_m is the minimum")).collect();
        let b = self.b.iter().map(|v| v.checked_sub(&by).expect("b_1 is the minimum")).collect();
        (Monomial::new(alloc::vec![ax, by]), Staircase { a, b })
    }

    pub fn has_height_two(&self) -> bool {
        self.a[self.len() - 1].is_zero() && self.b[0].is_zero()
    }
}

/// Free-function form of [`Staircase::from_ideal`].
pub fn staircase(ideal: &MonomialIdeal) -> Result<Staircase> {
    Staircase::from_ideal(ideal)
}

/// One entry `u_i u_j` (`i ≤ j`, 1-based) of the triangle of products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrianglePosition {
    pub i: usize,
    pub j: usize,
    pub monomial: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEntry {
    pub position: TrianglePosition,
    /// Whether this entry is the marked representative of a generator of `I²`.
    pub marked: bool,
}

fn position(stair: &Staircase, i: usize, j: usize) -> TrianglePosition {
    let monomial = Monomial::new(alloc::vec![
        &stair.a[i - 1] + &stair.a[j - 1],
        &stair.b[i - 1] + &stair.b[j - 1],
    ]);
    TrianglePosition { i, j, monomial }
}

/// All `m(m+1)/2` products `u_i u_j` in row order, with the generators of
/// `I²` marked.
///
/// When several positions carry the same monomial, only the one with the
/// largest row index `i` is marked, so the marked entries are in bijection
/// with `G(I²)`.
pub fn triangle(stair: &Staircase) -> Vec<TriangleEntry> {
    let m = stair.len();
    let square = stair.to_ideal().power(2);
    let gens: BTreeSet<&Monomial> = square.generators().iter().collect();
    let mut entries: Vec<TriangleEntry> = Vec::with_capacity(m * (m + 1) / 2);
    for i in 1..=m {
        for j in i..=m {
            entries.push(TriangleEntry { position: position(stair, i, j), marked: false });
        }
    }
    let mut claimed: BTreeSet<&Monomial> = BTreeSet::new();
    for idx in (0..entries.len()).rev() {
        let mono = &entries[idx].position.monomial;
        if gens.contains(mono) && !claimed.contains(mono) {
            claimed.insert(gens.get(mono).copied().expect("present"));
            entries[idx].marked = true;
        }
    }
    entries
}

/// The `k`-th diagonal `D_k = {u_i u_j : i + j = k}`, `2 ≤ k ≤ 2m`.
pub fn diagonal(stair: &Staircase, k: usize) -> Result<Vec<TrianglePosition>> {
    let m = stair.len();
    if k < 2 || k > 2 * m {
        return Err(CoreError::OutOfRange { what: "diagonal index", value: k as u64 });
    }
    let lo = k.saturating_sub(m).max(1);
    Ok((lo..=k / 2).map(|i| position(stair, i, k - i)).collect())
}

fn check_position(m: usize, i: usize, j: usize) -> Result<()> {
    if i < 1 || i > j || j > m {
        return Err(CoreError::OutOfRange { what: "triangle position", value: (i * 1000 + j) as u64 });
    }
    Ok(())
}

/// Whether `(k, l)` lies in the safe area of `(i, j)`; all positions have
/// the first index at most the second.
///
/// Positions above-left of `(i, j)` in the triangle, to the right of it in
/// its own row, and below-right of it: for all of these, neither product
/// divides the other.
#[inline]
pub fn in_safe_area(i: usize, j: usize, k: usize, l: usize) -> bool {
    (k < i && l <= j) || (k == i && l != j) || (k > i && l >= j)
}

/// `S_{ij}` as a list of positions.
pub fn safe_area(stair: &Staircase, i: usize, j: usize) -> Result<Vec<TrianglePosition>> {
    let m = stair.len();
    check_position(m, i, j)?;
    Ok(safe_area_indices(m, i, j).into_iter().map(|(k, l)| position(stair, k, l)).collect())
}

pub fn safe_area_indices(m: usize, i: usize, j: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=m {
        for l in k..=m {
            if in_safe_area(i, j, k, l) {
                out.push((k, l));
            }
        }
    }
    out
}

/// `∩_{(i,j) ∈ S} S_{ij}` on index pairs.
pub fn common_safe_area_indices(m: usize, set: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    if set.is_empty() {
        return Err(CoreError::Empty("position set"));
    }
    for &(i, j) in set {
        check_position(m, i, j)?;
    }
    let mut out = Vec::new();
    for k in 1..=m {
        for l in k..=m {
            if set.iter().all(|&(i, j)| in_safe_area(i, j, k, l)) {
                out.push((k, l));
            }
        }
    }
    Ok(out)
}

/// `∩_{(i,j) ∈ S} S_{ij}`; nonempty means `S` cannot generate `I²`.
pub fn common_safe_area(stair: &Staircase, set: &[(usize, usize)]) -> Result<Vec<TrianglePosition>> {
    Ok(common_safe_area_indices(stair.len(), set)?
        .into_iter()
        .map(|(k, l)| position(stair, k, l))
        .collect())
}

/// Whether the products at the given positions generate `I²`.
pub fn positions_generate_square(stair: &Staircase, set: &[(usize, usize)]) -> Result<bool> {
    let m = stair.len();
    for &(i, j) in set {
        check_position(m, i, j)?;
    }
    let square = stair.to_ideal().power(2);
    let gens: Vec<Monomial> = set.iter().map(|&(i, j)| position(stair, i, j).monomial).collect();
    let generated = crate::ideal::minimalize(&gens)?;
    Ok(generated == square)
}

/// One instance of the implication "nonempty common safe area ⇒ not a
/// generating set of `I²`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafeAreaCheck {
    pub common_nonempty: bool,
    pub generates_square: bool,
}

impl Check for SafeAreaCheck {
    fn holds(&self) -> bool {
        !(self.common_nonempty && self.generates_square)
    }
}

pub fn check_common_safe_area(stair: &Staircase, set: &[(usize, usize)]) -> Result<SafeAreaCheck> {
    Ok(SafeAreaCheck {
        common_nonempty: !common_safe_area_indices(stair.len(), set)?.is_empty(),
        generates_square: positions_generate_square(stair, set)?,
    })
}

fn second_difference_signs<T: Ord>(
    seq: &[Exponent],
    mut ok: impl FnMut(&Exponent, &Exponent) -> T,
    want: impl Fn(T) -> bool,
) -> bool {
    seq.windows(3).all(|w| want(ok(&(&w[1] + &w[1]), &(&w[0] + &w[2]))))
}

/// `2 c_i ≤ c_{i−1} + c_{i+1}` for every interior index.
pub fn is_concave(seq: &[Exponent]) -> bool {
    second_difference_signs(seq, |l, r| l.cmp(r), |o| o.is_le())
}

/// `2 c_i ≥ c_{i−1} + c_{i+1}` for every interior index.
pub fn is_convex(seq: &[Exponent]) -> bool {
    second_difference_signs(seq, |l, r| l.cmp(r), |o| o.is_ge())
}

/// Which shape drives the prediction of `G(I²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareShape {
    /// Both sequences concave: `G(I²) = {u_i²} ∪ {u_i u_{i+1}}`.
    Concave,
    /// Both sequences convex: `G(I²) = {u_1 u_j} ∪ {u_j u_m}`.
    Convex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarePrediction {
    pub shape: SquareShape,
    pub positions: Vec<TrianglePosition>,
}

impl SquarePrediction {
    pub fn monomials(&self) -> BTreeSet<Monomial> {
        self.positions.iter().map(|p| p.monomial.clone()).collect()
    }
}

/// Predicted `G(I²)` when `a` and `b` are both concave or both convex
/// (concave wins when both apply); `None` otherwise.
pub fn predicted_square_generators(stair: &Staircase) -> Option<SquarePrediction> {
    let m = stair.len();
    let shape = if is_concave(&stair.a) && is_concave(&stair.b) {
        SquareShape::Concave
    } else if is_convex(&stair.a) && is_convex(&stair.b) {
        SquareShape::Convex
    } else {
        return None;
    };
    let mut idx: Vec<(usize, usize)> = match shape {
        SquareShape::Concave => {
            (1..=m).map(|i| (i, i)).chain((1..m).map(|i| (i, i + 1))).collect()
        }
        SquareShape::Convex => (1..=m).map(|j| (1, j)).chain((2..=m).map(|i| (i, m))).collect(),
    };
    idx.sort_unstable();
    idx.dedup();
    Some(SquarePrediction {
        shape,
        positions: idx.into_iter().map(|(i, j)| position(stair, i, j)).collect(),
    })
}

/// The convex/concave prediction against the actual square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexCheck {
    pub shape: SquareShape,
    pub mu: usize,
    pub mu_square: usize,
    pub prediction_matches: bool,
    /// `|G(I²) ∩ D_k| = 1` for every `k`, counted on marked positions.
    pub one_per_diagonal: bool,
}

impl Check for ConvexCheck {
    fn holds(&self) -> bool {
        self.prediction_matches && self.one_per_diagonal && self.mu_square + 1 == 2 * self.mu
    }
}

pub fn check_convex(stair: &Staircase) -> Result<ConvexCheck> {
    let prediction = predicted_square_generators(stair)
        .ok_or(CoreError::Hypothesis("sequences are neither both convex nor both concave"))?;
    let square = stair.to_ideal().power(2);
    let actual: BTreeSet<Monomial> = square.generators().iter().cloned().collect();
    let m = stair.len();
    let mut per_diagonal = alloc::vec![0usize; 2 * m + 1];
    for e in triangle(stair) {
        if e.marked {
            per_diagonal[e.position.i + e.position.j] += 1;
        }
    }
    Ok(ConvexCheck {
        shape: prediction.shape,
        mu: m,
        mu_square: square.mu(),
        prediction_matches: prediction.monomials() == actual,
        one_per_diagonal: per_diagonal[2..].iter().all(|&c| c == 1),
    })
}

/// `μ(I²)` straight from word-sized staircase sequences.
///
/// The products `u_iu_j` are sorted by `x`-exponent and a point is a minimal
/// generator exactly when its `y`-exponent undercuts everything before it.
/// `scratch` is reused between calls to avoid allocating.
pub fn square_mu_u64(a: &[u64], b: &[u64], scratch: &mut Vec<(u64, u64)>) -> usize {
    scratch.clear();
    for i in 0..a.len() {
        for j in i..a.len() {
            scratch.push((a[i] + a[j], b[i] + b[j]));
        }
    }
    scratch.sort_unstable();
    let mut count = 0;
    let mut min_y = u64::MAX;
    for &(_, y) in scratch.iter() {
        if y < min_y {
            min_y = y;
            count += 1;
        }
    }
    count
}

/// `μ(I²) > μ(I)` for a non-principal ideal of `K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareGrowth {
    pub mu: usize,
    pub mu_square: usize,
}

impl Check for SquareGrowth {
    fn holds(&self) -> bool {
        self.mu_square > self.mu
    }
}

pub fn check_square_growth(stair: &Staircase) -> Result<SquareGrowth> {
    if stair.len() < 2 {
        return Err(CoreError::Hypothesis("ideal must not be principal"));
    }
    Ok(SquareGrowth { mu: stair.len(), mu_square: stair.to_ideal().power(2).mu() })
}

/// The four corner products `u_1², u_1u_2, u_{m−1}u_m, u_m²` lie in `G(I²)`
/// when `m ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerGenerators {
    pub mu_square: usize,
    pub corners_are_generators: bool,
}

impl Check for CornerGenerators {
    fn holds(&self) -> bool {
        self.corners_are_generators && self.mu_square >= 4
    }
}

pub fn check_corner_generators(stair: &Staircase) -> Result<CornerGenerators> {
    let m = stair.len();
    if m < 3 {
        return Err(CoreError::Hypothesis("needs at least three generators"));
    }
    let square = stair.to_ideal().power(2);
    let corners = [(1, 1), (1, 2), (m - 1, m), (m, m)];
    let corners_are_generators = corners
        .iter()
        .all(|&(i, j)| square.generators().binary_search(&position(stair, i, j).monomial).is_ok());
    Ok(CornerGenerators { mu_square: square.mu(), corners_are_generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u64]) -> Vec<Exponent> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn diag1() -> Staircase {
        Staircase::from_u64s(&[7, 6, 5, 3, 0], &[0, 2, 3, 4, 7]).unwrap()
    }

    fn diag2() -> Staircase {
        Staircase::from_u64s(&[7, 6, 4, 3, 0], &[0, 4, 5, 6, 8]).unwrap()
    }

    fn marked(stair: &Staircase) -> BTreeSet<(u64, u64)> {
        triangle(stair)
            .into_iter()
            .filter(|t| t.marked)
            .map(|t| {
                let m = t.position.monomial;
                (m.exponent(0).to_u64().unwrap(), m.exponent(1).to_u64().unwrap())
            })
            .collect()
    }

    #[test]
    fn staircase_of_example_ideal() {
        let i = MonomialIdeal::from_rows(&[&[7, 0], &[6, 2], &[5, 3], &[3, 4], &[0, 7]]).unwrap();
        let s = staircase(&i).unwrap();
        assert_eq!(s.a(), e(&[7, 6, 5, 3, 0]).as_slice());
        assert_eq!(s.b(), e(&[0, 2, 3, 4, 7]).as_slice());
        assert_eq!(s.to_ideal(), i);
        let s = staircase(&MonomialIdeal::maximal_power(2, 1)).unwrap();
        assert_eq!((s.a(), s.b()), (e(&[1, 0]).as_slice(), e(&[0, 1]).as_slice()));
    }

    #[test]
    fn staircase_validation() {
        assert!(Staircase::from_u64s(&[3, 3], &[0, 1]).is_err());
        assert!(Staircase::from_u64s(&[3, 1], &[2, 1]).is_err());
        assert!(Staircase::from_u64s(&[3], &[0, 1]).is_err());
        assert!(Staircase::from_ideal(&MonomialIdeal::maximal_power(3, 1)).is_err());
    }

    #[test]
    fn normalization_factors_out_corner() {
        let s = Staircase::from_u64s(&[5, 3, 2], &[1, 4, 6]).unwrap();
        let (f, j) = s.normalize();
        assert_eq!(f, Monomial::from_u64s(&[2, 1]));
        assert!(j.has_height_two());
        assert_eq!(j.to_ideal().scale(&f).unwrap(), s.to_ideal());
    }

    #[test]
    fn example_diagonal_one_marks() {
        let expected: BTreeSet<(u64, u64)> = [
            (14, 0), (13, 2), (12, 3), (10, 4), (7, 7), (9, 6), (5, 10), (6, 8), (3, 11), (0, 14),
        ]
        .into_iter()
        .collect();
        assert_eq!(marked(&diag1()), expected);
        // D_7 holds only u_2u_5 and u_3u_4, and neither is a generator
        let d7: BTreeSet<Monomial> =
            diagonal(&diag1(), 7).unwrap().into_iter().map(|p| p.monomial).collect();
        let expected: BTreeSet<Monomial> =
            [Monomial::from_u64s(&[8, 7]), Monomial::from_u64s(&[6, 9])].into_iter().collect();
        assert_eq!(d7, expected);
        let square = diag1().to_ideal().power(2);
        assert!(d7.iter().all(|m| square.generators().binary_search(m).is_err()));
    }

    #[test]
    fn example_diagonal_two_second_row_unmarked() {
        let t = triangle(&diag2());
        assert_eq!(t.iter().filter(|e| e.marked).count(), 9);
        assert!(t.iter().filter(|e| e.position.i == 2).all(|e| !e.marked));
    }

    #[test]
    fn diagonal_bounds() {
        let s = diag1();
        assert_eq!(diagonal(&s, 2).unwrap().len(), 1);
        assert_eq!(diagonal(&s, 10).unwrap()[0].i, 5);
        assert!(diagonal(&s, 1).is_err());
        assert!(diagonal(&s, 11).is_err());
    }

    #[test]
    fn word_sized_square_count() {
        let mut scratch = Vec::new();
        for s in [diag1(), diag2(), Staircase::from_u64s(&[4], &[1]).unwrap()] {
            let a: Vec<u64> = s.a().iter().map(|e| e.to_u64().unwrap()).collect();
            let b: Vec<u64> = s.b().iter().map(|e| e.to_u64().unwrap()).collect();
            assert_eq!(square_mu_u64(&a, &b, &mut scratch), s.to_ideal().power(2).mu());
        }
    }

    #[test]
    fn single_generator_triangle() {
        let s = Staircase::from_u64s(&[2], &[3]).unwrap();
        let t = triangle(&s);
        assert_eq!(t.len(), 1);
        assert!(t[0].marked);
    }

    #[test]
    fn safe_area_of_first_square_is_everything_else() {
        let m = 5;
        let area = safe_area_indices(m, 1, 1);
        assert_eq!(area.len(), m * (m + 1) / 2 - 1);
        assert!(!area.contains(&(1, 1)));
    }

    #[test]
    fn safe_area_soundness_on_examples() {
        for s in [diag1(), diag2()] {
            let m = s.len();
            for i in 1..=m {
                for j in i..=m {
                    let uij = position(&s, i, j).monomial;
                    for p in safe_area(&s, i, j).unwrap() {
                        assert!(!p.monomial.divides(&uij).unwrap());
                        assert!(!uij.divides(&p.monomial).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn common_safe_area_examples() {
        let m = 7;
        let all: Vec<(usize, usize)> =
            (1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))).collect();
        assert!(common_safe_area_indices(m, &all).unwrap().is_empty());
        let s = [(1, 1), (1, 2), (2, 2), (6, 6), (1, 7), (6, 7), (7, 7)];
        assert!(common_safe_area_indices(m, &s).unwrap().is_empty());
        assert!(common_safe_area_indices(m, &[]).is_err());
    }

    #[test]
    fn corner_generators() {
        let c = check_corner_generators(&diag2()).unwrap();
        assert!(c.holds());
    }

    #[test]
    fn convexity_examples() {
        assert!(is_convex(&e(&[1, 3, 5, 7])) && is_concave(&e(&[1, 3, 5, 7])));
        assert!(!is_concave(&e(&[7, 6, 5, 3, 0])));
        assert!(!is_convex(&e(&[0, 2, 3, 4, 7])));
        assert!(is_convex(&e(&[4])) && is_concave(&e(&[4, 9])));
    }

    #[test]
    fn prediction_for_linear_sequences() {
        let s = Staircase::from_u64s(&[6, 4, 2, 0], &[0, 1, 2, 3]).unwrap();
        let p = predicted_square_generators(&s).unwrap();
        assert_eq!(p.shape, SquareShape::Concave);
        assert_eq!(p.positions.len(), 7);
        assert_eq!(s.to_ideal().power(2).mu(), 7);
        assert!(check_convex(&s).unwrap().holds());
        assert!(predicted_square_generators(&diag1()).is_none());
    }

    #[test]
    fn prediction_for_two_generators() {
        let s = Staircase::from_u64s(&[5, 0], &[0, 2]).unwrap();
        let p = predicted_square_generators(&s).unwrap();
        assert_eq!(p.positions.len(), 3);
        assert!(check_convex(&s).unwrap().holds());
    }
}
