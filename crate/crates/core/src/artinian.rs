//! Socles, Cohen–Macaulay type and irreducible decompositions of artinian
//! monomial ideals.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::bounds::Check;
use crate::error::{CoreError, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Box volume ceiling for socle enumeration unless overridden.
pub const DEFAULT_VOLUME_CEILING: u64 = 10_000_000;

/// `(x_1^{a_1}, …, x_n^{a_n})` with every `a_i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    exponents: Vec<Exponent>,
}

impl IrreducibleComponent {
    pub fn new(exponents: Vec<Exponent>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(CoreError::Empty("component exponents"));
        }
        if exponents.iter().any(Exponent::is_zero) {
            return Err(CoreError::Hypothesis("component exponents must be positive"));
        }
        Ok(IrreducibleComponent { exponents })
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exponents
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.exponents.len();
        MonomialIdeal::from_generators(
            n,
            self.exponents.iter().enumerate().map(|(v, e)| Monomial::pure_power(n, v, e.clone())),
        )
        .expect("nonempty")
    }
}

fn box_sides(i: &MonomialIdeal, ceiling: u64) -> Result<Vec<u64>> {
    let sides = i
        .pure_power_exponents()
        .filter(|_| i.arity() > 0)
        .ok_or(CoreError::Hypothesis("ideal must be artinian"))?;
    let volume = sides.iter().fold(BigUint::one(), |acc, e| acc * e.to_biguint());
    if volume > BigUint::from(ceiling) {
        return Err(CoreError::ResourceLimit { what: "socle box volume", limit: ceiling });
    }
    Ok(sides.iter().map(|e| e.to_u64().expect("bounded by the volume")).collect())
}

pub fn socle(i: &MonomialIdeal) -> Result<Vec<Monomial>> {
    socle_with_ceiling(i, DEFAULT_VOLUME_CEILING)
}

/// Monomials `u ∉ I` with `x_v u ∈ I` for every variable, in lex order.
///
/// Walks the box `∏ [0, p_v)` below the pure powers depth first; a partial
/// point already in `I` cuts off its whole subtree.
pub fn socle_with_ceiling(i: &MonomialIdeal, ceiling: u64) -> Result<Vec<Monomial>> {
    if i.is_unit() {
        return Err(CoreError::Hypothesis("ideal must be proper"));
    }
    let sides = box_sides(i, ceiling)?;
    let n = sides.len();
    let mut out = Vec::new();
    let mut point = Monomial::one(n);
    walk(i, &sides, 0, &mut point, &mut out);
    Ok(out)
}

fn walk(i: &MonomialIdeal, sides: &[u64], var: usize, point: &mut Monomial, out: &mut Vec<Monomial>) {
    if var == sides.len() {
        if (0..sides.len()).all(|v| i.contains_unchecked(&point.times_var(v))) {
            out.push(point.clone());
        }
        return;
    }
    for e in 0..sides[var] {
        let mut exps = core::mem::replace(point, Monomial::one(0)).into_exponents();
        exps[var] = Exponent::new(e);
        *point = Monomial::new(exps);
        if i.contains_unchecked(point) {
            break;
        }
        walk(i, sides, var + 1, point, out);
    }
    let mut exps = core::mem::replace(point, Monomial::one(0)).into_exponents();
    exps[var] = Exponent::ZERO;
    *point = Monomial::new(exps);
}

/// Cohen–Macaulay type of `S/I`, the size of the socle.
pub fn cm_type(i: &MonomialIdeal) -> Result<usize> {
    Ok(socle(i)?.len())
}

pub fn cm_type_with_ceiling(i: &MonomialIdeal, ceiling: u64) -> Result<usize> {
    Ok(socle_with_ceiling(i, ceiling)?.len())
}

/// `∩ Q_u` over the socle, `Q_u = (x_1^{u_1+1}, …, x_n^{u_n+1})`, checked to
/// intersect back to `I`.
pub fn irreducible_decomposition(i: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    irreducible_decomposition_with_ceiling(i, DEFAULT_VOLUME_CEILING)
}

pub fn irreducible_decomposition_with_ceiling(
    i: &MonomialIdeal,
    ceiling: u64,
) -> Result<Vec<IrreducibleComponent>> {
    let components: Vec<IrreducibleComponent> = socle_with_ceiling(i, ceiling)?
        .into_iter()
        .map(|u| IrreducibleComponent {
            exponents: u.exponents().iter().map(|e| e + &Exponent::ONE).collect(),
        })
        .collect();
    if intersect_components(&components)? != *i {
        return Err(CoreError::Inconsistent("irreducible components do not intersect to the ideal"));
    }
    Ok(components)
}

pub fn intersect_components(components: &[IrreducibleComponent]) -> Result<MonomialIdeal> {
    let first = components.first().ok_or(CoreError::Empty("component list"))?;
    components[1..].iter().try_fold(first.to_ideal(), |acc, q| acc.intersect(&q.to_ideal()))
}

fn require_artinian(i: &MonomialIdeal) -> Result<()> {
    if i.is_unit() || !i.is_artinian() {
        return Err(CoreError::Hypothesis("ideal must be proper and artinian"));
    }
    Ok(())
}

fn require_artinian_pair(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if i.arity() != j.arity() {
        return Err(CoreError::ArityMismatch { expected: i.arity(), found: j.arity() });
    }
    require_artinian(i)?;
    require_artinian(j)
}

/// For height-2 `I, J ⊂ K[x, y]`: `μ(IJ) ≥ 3`, and `μ(IJ) ≥ 4` once
/// `max(μ(I), μ(J)) ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BabyCheck {
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_product: usize,
}

impl Check for BabyCheck {
    fn holds(&self) -> bool {
        self.mu_product >= 3 && (self.mu_left.max(self.mu_right) < 3 || self.mu_product >= 4)
    }
}

pub fn check_baby(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<BabyCheck> {
    if i.arity() != 2 || j.arity() != 2 {
        return Err(CoreError::Hypothesis("ideals must live in two variables"));
    }
    require_artinian_pair(i, j)?;
    Ok(BabyCheck { mu_left: i.mu(), mu_right: j.mu(), mu_product: i.product(j)?.mu() })
}

/// The image of `IJ` under `φ_{ab}` (all variables but `x_a`, `x_b` sent to
/// zero), and a generator of `IJ` supported exactly on `{x_a, x_b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub a: usize,
    pub b: usize,
    /// `φ_{ab}(IJ) = φ_{ab}(I) φ_{ab}(J)`.
    pub projection_commutes: bool,
    pub mixed_generator: Option<Monomial>,
}

/// `μ(IJ) ≥ n + C(n, 2)` for artinian `I, J` in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughCheck {
    pub arity: usize,
    pub mu_product: usize,
    pub pure_powers_in_product: usize,
    pub pairs: Vec<PairWitness>,
}

impl RoughCheck {
    pub fn lower_bound(&self) -> usize {
        self.arity + self.arity * (self.arity - 1) / 2
    }
}

impl Check for RoughCheck {
    fn holds(&self) -> bool {
        self.mu_product >= self.lower_bound()
            && self.pure_powers_in_product == self.arity
            && self
                .pairs
                .iter()
                .all(|p| p.projection_commutes && p.mixed_generator.is_some())
    }
}

pub fn check_rough(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<RoughCheck> {
    require_artinian_pair(i, j)?;
    let n = i.arity();
    let product = i.product(j)?;
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            let vars = [a, b];
            let projected = product.restrict_support(&vars);
            let factors = i.restrict_support(&vars).product(&j.restrict_support(&vars))?;
            let mixed_generator = projected
                .generators()
                .iter()
                .find(|g| g.support().count() == 2)
                .cloned();
            pairs.push(PairWitness { a, b, projection_commutes: projected == factors, mixed_generator });
        }
    }
    Ok(RoughCheck {
        arity: n,
        mu_product: product.mu(),
        pure_powers_in_product: product.generators().iter().filter(|g| g.pure_power_var().is_some()).count(),
        pairs,
    })
}

/// `type(S/IJ) ≥ 3` when `n ≥ 3`, or `n = 2` and `max(μ(I), μ(J)) ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCheck {
    pub arity: usize,
    pub max_mu: usize,
    pub product_type: usize,
    /// False only in the boundary case `n = 2`, `μ(I) = μ(J) = 2`, where the
    /// type is still computed but no bound is claimed.
    pub hypothesis_met: bool,
}

impl Check for TypeCheck {
    fn holds(&self) -> bool {
        !self.hypothesis_met || self.product_type >= 3
    }
}

pub fn check_type_theorem(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<TypeCheck> {
    check_type_theorem_with_ceiling(i, j, DEFAULT_VOLUME_CEILING)
}

pub fn check_type_theorem_with_ceiling(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    ceiling: u64,
) -> Result<TypeCheck> {
    require_artinian_pair(i, j)?;
    let n = i.arity();
    if n < 2 {
        return Err(CoreError::Hypothesis("needs at least two variables"));
    }
    let max_mu = i.mu().max(j.mu());
    Ok(TypeCheck {
        arity: n,
        max_mu,
        product_type: cm_type_with_ceiling(&i.product(j)?, ceiling)?,
        hypothesis_met: n >= 3 || max_mu >= 3,
    })
}

/// `type(S/I) = μ(I) − 1` for artinian `I ⊂ K[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub mu: usize,
    pub cm_type: usize,
    pub components: usize,
}

impl Check for DualityCheck {
    fn holds(&self) -> bool {
        self.cm_type + 1 == self.mu && self.components == self.cm_type
    }
}

pub fn check_plane_duality(i: &MonomialIdeal) -> Result<DualityCheck> {
    if i.arity() != 2 {
        return Err(CoreError::Hypothesis("ideal must live in two variables"));
    }
    require_artinian(i)?;
    Ok(DualityCheck {
        mu: i.mu(),
        cm_type: cm_type(i)?,
        components: irreducible_decomposition(i)?.len(),
    })
}
