//! Theorem suites: corpora, checkers and the parallel runner.
//!
//! A suite is a list of sources. Each source enumerates instances (lists of
//! ideals) by index and owns the checker applied to them. Work is split into
//! fixed index ranges, evaluated on a bounded worker pool and merged in
//! range order, so the report does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::ops::Range;
use std::sync::Arc;
use std::time::Instant;

use mugen_core::artinian::{
    check_baby, check_plane_duality, check_rough, check_type_theorem_with_ceiling, cm_type_with_ceiling,
};
use mugen_core::bounds::{
    check_contracted_product, check_intersection_bound, check_iterated_product_bound, check_power_bound,
    check_product_bound, is_contracted,
};
use mugen_core::fiber::{
    check_compare, check_difference, check_freiman_set, check_h2_nonneg, exponent_points, freiman_lower_bound,
    h_vector, mu_series_with_ceiling, reconstruct_series, spread_for_h_vector,
};
use mugen_core::planar::{
    back_product, check_common_safe_area, check_convex, check_corner_generators, check_intersection_below_product,
    check_power_equality, check_reduction, check_square_growth, check_sum_power, classify_product_equality,
    common_safe_area_indices, is_lexsegment, pure_power_ideal_power, square_mu_u64, staircase, triangle,
};
use mugen_core::{Check, CoreError, Exponent, Monomial, MonomialIdeal, Staircase};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{
    self, next_combination, random_back_family, random_cold_family, random_ideal_from, random_staircase,
    RandomMode, StaircaseSpace,
};
use crate::parse::parse_ideal_with;
use crate::report::{ideal_rows, Counts, Report, SourceSummary, Verdict, Witness};
use crate::rng::Draw;

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The instance lies outside the statement's hypotheses.
    NotApplicable(String),
    Resource(String),
}

impl Outcome {
    fn from_check<T: Check + Debug>(r: Result<T, CoreError>) -> Outcome {
        match r {
            Ok(c) if c.holds() => Outcome::Pass,
            Ok(c) => Outcome::Fail(format!("{c:?}")),
            Err(e) => Outcome::from_error(e),
        }
    }

    fn from_error(e: CoreError) -> Outcome {
        match e {
            CoreError::Hypothesis(_)
            | CoreError::ZeroIdeal
            | CoreError::Empty(_)
            | CoreError::ArityMismatch { .. }
            | CoreError::InvalidStaircase(_) => Outcome::NotApplicable(e.to_string()),
            CoreError::ResourceLimit { .. } => Outcome::Resource(e.to_string()),
            CoreError::OutOfRange { .. } | CoreError::Inconsistent(_) => Outcome::Fail(e.to_string()),
        }
    }

    fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

pub type Checks = Vec<(&'static str, Outcome)>;
pub type CheckFn = Arc<dyn Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync>;
pub type GenerateFn = Arc<dyn Fn(u64) -> Vec<MonomialIdeal> + Send + Sync>;
/// A specialised evaluation of a whole index range. It must agree with the
/// source's checker; it only avoids building ideals.
pub type ScanFn = Arc<dyn Fn(Range<u64>, &Params, &mut dyn FnMut(u64, &'static str, Outcome)) + Send + Sync>;

/// Numeric knobs handed to every checker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub k_max: usize,
    pub tail_window: usize,
    pub volume_ceiling: u64,
    pub generator_ceiling: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    Exhaustive,
    Random,
    Fixture,
}

impl SourceKind {
    fn name(self) -> &'static str {
        match self {
            SourceKind::Exhaustive => "exhaustive",
            SourceKind::Random => "random",
            SourceKind::Fixture => "fixture",
        }
    }
}

#[derive(Clone)]
pub struct Source {
    pub label: String,
    pub kind: SourceKind,
    pub count: u64,
    /// Seed used to draw the instances, for random sources.
    pub seed: Option<u64>,
    pub generate: GenerateFn,
    pub check: CheckFn,
    pub scan: Option<ScanFn>,
}

impl Debug for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Source").field("label", &self.label).field("kind", &self.kind).field("count", &self.count).finish()
    }
}

impl Source {
    pub fn new(
        label: impl Into<String>,
        kind: SourceKind,
        count: u64,
        generate: impl Fn(u64) -> Vec<MonomialIdeal> + Send + Sync + 'static,
        check: impl Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync + 'static,
    ) -> Self {
        Source {
            label: label.into(),
            kind,
            count,
            seed: None,
            generate: Arc::new(generate),
            check: Arc::new(check),
            scan: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Suite {
    pub name: String,
    pub sources: Vec<Source>,
}

/// Run configuration. Unset options fall back to per-suite defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: Option<u64>,
    pub workers: Option<usize>,
    pub max_gens: Option<usize>,
    pub max_exp: Option<u64>,
    pub arity: Option<usize>,
    pub k_max: Option<usize>,
    pub tail_window: Option<usize>,
    pub max_witnesses: usize,
    pub volume_ceiling: u64,
    pub generator_ceiling: usize,
    /// Skip the exhaustive sources.
    pub random_only: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: None,
            workers: None,
            max_gens: None,
            max_exp: None,
            arity: None,
            k_max: None,
            tail_window: None,
            max_witnesses: 5,
            volume_ceiling: mugen_core::artinian::DEFAULT_VOLUME_CEILING,
            generator_ceiling: mugen_core::fiber::DEFAULT_GENERATOR_CEILING,
            random_only: false,
        }
    }
}

/// The configuration as actually used, echoed into every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolved {
    pub seed: u64,
    pub samples: u64,
    pub workers: usize,
    pub max_gens: usize,
    pub max_exp: u64,
    pub arity: Option<usize>,
    pub random_only: bool,
    pub max_witnesses: usize,
    #[serde(flatten)]
    pub params: Params,
}

impl RunConfig {
    fn resolve(&self, samples: u64, max_gens: usize, max_exp: u64) -> Resolved {
        Resolved {
            seed: self.seed,
            samples: self.samples.unwrap_or(samples),
            workers: self.workers.unwrap_or_else(default_workers).max(1),
            max_gens: self.max_gens.unwrap_or(max_gens),
            max_exp: self.max_exp.unwrap_or(max_exp),
            arity: self.arity,
            random_only: self.random_only,
            max_witnesses: self.max_witnesses,
            params: Params {
                k_max: self.k_max.unwrap_or(5),
                tail_window: self.tail_window.unwrap_or(mugen_core::fiber::DEFAULT_TAIL_WINDOW),
                volume_ceiling: self.volume_ceiling,
                generator_ceiling: self.generator_ceiling,
            },
        }
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    UnknownSuite(String),
    Config(String),
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::UnknownSuite(s) => write!(f, "unknown suite '{s}' (known: {})", SUITE_NAMES.join(", ")),
            SuiteError::Config(s) => write!(f, "invalid configuration: {s}"),
        }
    }
}

impl std::error::Error for SuiteError {}

pub const SUITE_NAMES: &[&str] = &[
    "shalom",
    "kill",
    "museum",
    "huneke",
    "freiman",
    "compare",
    "difference",
    "h2",
    "new",
    "yes",
    "truered",
    "cold",
    "convex",
    "lexsegment",
    "brexit",
    "bar",
    "small",
    "baby",
    "rough",
    "type",
    "duality",
    "paper-fixtures",
];

/// Stable per-label stream tag (FNV-1a).
fn tag(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

type DrawFn = Arc<dyn Fn(&mut Draw) -> Result<Vec<MonomialIdeal>, String> + Send + Sync>;

struct Builder<'a> {
    r: &'a Resolved,
    sources: Vec<Source>,
}

impl Builder<'_> {
    fn exhaustive(
        &mut self,
        label: &str,
        list: Vec<Vec<MonomialIdeal>>,
        check: impl Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync + 'static,
    ) {
        if self.r.random_only {
            return;
        }
        let list = Arc::new(list);
        let n = list.len() as u64;
        self.sources.push(Source::new(label, SourceKind::Exhaustive, n, move |i| list[i as usize].clone(), check));
    }

    fn singles(
        &mut self,
        label: &str,
        list: Vec<MonomialIdeal>,
        check: impl Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync + 'static,
    ) {
        self.exhaustive(label, list.into_iter().map(|i| vec![i]).collect(), check);
    }

    /// Every ordered pair from `list`.
    fn pairs(
        &mut self,
        label: &str,
        list: Vec<MonomialIdeal>,
        check: impl Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync + 'static,
    ) {
        if self.r.random_only {
            return;
        }
        let list = Arc::new(list);
        let n = list.len() as u64;
        self.sources.push(Source::new(
            label,
            SourceKind::Exhaustive,
            n * n,
            move |i| vec![list[(i / n) as usize].clone(), list[(i % n) as usize].clone()],
            check,
        ));
    }

    fn random(
        &mut self,
        label: &str,
        draw: impl Fn(&mut Draw) -> Result<Vec<MonomialIdeal>, String> + Send + Sync + 'static,
        check: impl Fn(u64, &[MonomialIdeal], &Params) -> Checks + Send + Sync + 'static,
    ) -> Result<(), SuiteError> {
        let seed = self.r.seed;
        let t = tag(label);
        let draw: DrawFn = Arc::new(draw);
        // infeasible parameters surface here rather than inside a worker
        draw(&mut Draw::new(seed, t, 0)).map_err(|e| SuiteError::Config(format!("{label}: {e}")))?;
        let mut s = Source::new(
            label,
            SourceKind::Random,
            self.r.samples,
            move |i| draw(&mut Draw::new(seed, t, i)).expect("parameters were validated"),
            check,
        );
        s.seed = Some(seed);
        self.sources.push(s);
        Ok(())
    }
}

fn arity_in(fixed: Option<usize>, lo: usize, hi: usize) -> impl Fn(&mut Draw) -> usize + Send + Sync {
    move |d| fixed.unwrap_or_else(|| d.range(lo as u64, hi as u64) as usize)
}

fn draw_mode(mode: &RandomMode, d: &mut Draw) -> Result<MonomialIdeal, String> {
    random_ideal_from(mode, d).map_err(|e| e.to_string())
}

fn one(name: &'static str, o: Outcome) -> Checks {
    vec![(name, o)]
}

fn power_shape_pair(d: &mut Draw, d_max: u64) -> Vec<MonomialIdeal> {
    let a = d.range(1, d_max.clamp(1, 3));
    let r = d.range(1, 3) as usize;
    let s = d.range(1, 3) as usize;
    let b = if d.coin() { a } else { d.range(1, 3) };
    vec![pure_power_ideal_power(&Exponent::new(a), r), pure_power_ideal_power(&Exponent::new(b), s)]
}

fn plane_equigenerated(d: &mut Draw, d_max: u64, m_max: usize) -> Result<MonomialIdeal, String> {
    draw_mode(&RandomMode::Equigenerated { arity: 2, d_max, m_max: m_max.max(2), artinian: true }, d)
}

fn height_two_staircase(d: &mut Draw, m_max: usize, bound: u64) -> Result<MonomialIdeal, String> {
    random_staircase(d, m_max.max(2), bound.max(m_max as u64), true).map(|s| s.to_ideal()).map_err(|e| e.to_string())
}

fn exhaustive_height_two(m_max: usize, bound: u64) -> Vec<MonomialIdeal> {
    let space = StaircaseSpace::height_two(m_max, bound).expect("fixed bounds");
    (0..space.count()).map(|i| space.get(i).to_ideal()).collect()
}

fn exhaustive_staircases(m_max: usize, bound: u64) -> Vec<MonomialIdeal> {
    let space = StaircaseSpace::new(m_max, bound).expect("fixed bounds");
    (0..space.count()).map(|i| space.get(i).to_ideal()).collect()
}

fn with_stair(i: &MonomialIdeal, f: impl FnOnce(&Staircase) -> Outcome) -> Outcome {
    match staircase(i) {
        Ok(s) => f(&s),
        Err(e) => Outcome::from_error(e),
    }
}

fn h_reconstruct(i: &MonomialIdeal, p: &Params) -> Outcome {
    let ell = match spread_for_h_vector(i, p.k_max.max(2)) {
        Ok(l) => l,
        Err(e) => return Outcome::from_error(e),
    };
    let k_max = p.k_max.max(ell + p.tail_window);
    let series = match mu_series_with_ceiling(i, k_max, p.generator_ceiling) {
        Ok(s) => s.values,
        Err(e) => return Outcome::from_error(e),
    };
    let hv = match h_vector(i, k_max, p.tail_window) {
        Ok(h) => h,
        Err(e) => return Outcome::from_error(e),
    };
    let rebuilt = reconstruct_series(hv.spread, &hv.coefficients, k_max + 1);
    let expected: Vec<BigInt> = series.iter().map(|&v| BigInt::from(v)).collect();
    Outcome::expect(rebuilt == expected, || format!("series {series:?} rebuilt as {rebuilt:?} from ℓ={}", hv.spread))
}

/// `G(I^k)` has `k(t − s) + 1` elements when the `x`-exponents of `G(I)`
/// are consecutive integers `s..=t`.
fn brexit_power(i: &MonomialIdeal, p: &Params) -> Outcome {
    if i.arity() != 2 || i.is_zero() || i.is_unit() {
        return Outcome::NotApplicable("needs a proper nonzero ideal of K[x, y]".into());
    }
    let xs: Vec<Option<u64>> = i.generators().iter().map(|g| g.exponent(0).to_u64()).collect();
    let consecutive = xs.windows(2).all(|w| matches!((w[0], w[1]), (Some(a), Some(b)) if b == a + 1));
    if !consecutive {
        return Outcome::NotApplicable("x-exponents are not consecutive".into());
    }
    let span = i.mu() - 1;
    match mu_series_with_ceiling(i, p.k_max, p.generator_ceiling) {
        Ok(s) => Outcome::expect((1..=p.k_max).all(|k| s.values[k] == k * span + 1), || {
            format!("μ(I^k) = {:?}, expected k·{span} + 1", &s.values[1..])
        }),
        Err(e) => Outcome::from_error(e),
    }
}

fn infer_step(ideals: &[MonomialIdeal]) -> Exponent {
    let g = ideals
        .iter()
        .flat_map(|i| i.generators().iter().map(|m| m.exponent(0).clone()))
        .fold(Exponent::ZERO, |g, e| g.gcd(&e));
    if g.is_zero() {
        Exponent::ONE
    } else {
        g
    }
}

fn crash(i: &MonomialIdeal) -> Checks {
    match is_lexsegment(i) {
        Ok(true) => {
            let mu = i.mu();
            let mu2 = i.power(2).mu();
            let crash = Outcome::expect(mu2 + 1 == 2 * mu, || format!("μ(I) = {mu}, μ(I²) = {mu2}"));
            let contracted = if i.is_artinian() {
                Outcome::expect(is_contracted(i).unwrap_or(false), || "height-2 lexsegment is not contracted".into())
            } else {
                Outcome::NotApplicable("height-1 lexsegment".into())
            };
            vec![("crash", crash), ("lexsegment-contracted", contracted)]
        }
        Ok(false) => vec![
            ("crash", Outcome::NotApplicable("not a lexsegment ideal".into())),
            ("lexsegment-contracted", Outcome::NotApplicable("not a lexsegment ideal".into())),
        ],
        Err(e) => vec![("crash", Outcome::from_error(e.clone())), ("lexsegment-contracted", Outcome::from_error(e))],
    }
}

/// Up to `cap` subsets of the triangle of size `m`, in lexicographic order
/// of position indices.
fn triangle_subsets(m: usize, size: usize, cap: usize) -> Vec<Vec<(usize, usize)>> {
    let cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))).collect();
    let n = cells.len() as u64;
    if size == 0 || size as u64 > n {
        return Vec::new();
    }
    let mut comb: Vec<u64> = (0..size as u64).collect();
    let mut out = Vec::new();
    loop {
        out.push(comb.iter().map(|&c| cells[c as usize]).collect());
        if out.len() >= cap || !next_combination(&mut comb, n) {
            return out;
        }
    }
}

fn bar(i: &MonomialIdeal) -> Outcome {
    with_stair(i, |s| {
        for set in triangle_subsets(s.len(), s.len(), 256) {
            match check_common_safe_area(s, &set) {
                Ok(c) if c.holds() => {}
                Ok(c) => return Outcome::Fail(format!("S = {set:?}: {c:?}")),
                Err(e) => return Outcome::from_error(e),
            }
        }
        Outcome::Pass
    })
}

/// Every `m`-subset of `T(I)` has a nonempty common safe area when `m ≤ 6`.
fn safe_area_cover(m: usize) -> Outcome {
    for set in triangle_subsets(m, m, usize::MAX) {
        match common_safe_area_indices(m, &set) {
            Ok(v) if !v.is_empty() => {}
            Ok(_) => return Outcome::Fail(format!("m = {m}: S = {set:?} has empty common safe area")),
            Err(e) => return Outcome::from_error(e),
        }
    }
    Outcome::Pass
}

fn type_outcome(i: &MonomialIdeal, j: &MonomialIdeal, p: &Params) -> Outcome {
    match check_type_theorem_with_ceiling(i, j, p.volume_ceiling) {
        Ok(c) if !c.hypothesis_met => {
            Outcome::NotApplicable("boundary case n = 2, μ(I) = μ(J) = 2: no bound claimed".into())
        }
        r => Outcome::from_check(r),
    }
}

const SMALL_NOT_PRINCIPAL: CoreError = CoreError::Hypothesis("ideal must not be principal");

fn small_scan(space: StaircaseSpace) -> ScanFn {
    Arc::new(move |range, _p, sink| {
        let mut scratch = Vec::new();
        space.for_each(range, |index, a, b| {
            let m = a.len();
            if m < 2 {
                sink(index, "small", Outcome::from_error(SMALL_NOT_PRINCIPAL));
                return;
            }
            let mu2 = square_mu_u64(a, b, &mut scratch);
            if mu2 > m {
                sink(index, "small", Outcome::Pass);
            } else {
                sink(index, "small", Outcome::Fail(format!("SquareGrowth {{ mu: {m}, mu_square: {mu2} }}")));
            }
        });
    })
}

fn parse(text: &str) -> MonomialIdeal {
    crate::parse::parse_ideal(text).expect("fixture text parses")
}

struct Fixture {
    name: &'static str,
    ideals: &'static [&'static str],
}

const FIXTURES: &[Fixture] = &[
    Fixture { name: "failure-square", ideals: &["x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6"] },
    Fixture { name: "failure-series", ideals: &["x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6"] },
    Fixture { name: "failure-h-vector", ideals: &["x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6"] },
    Fixture { name: "maximal-cube", ideals: &["x^3, x^2*y, x^2*z, x*y^2, x*y*z, x*z^2, y^3, y^2*z, y*z^2, z^3"] },
    Fixture { name: "conca-1", ideals: &["x^4, x^3*y, x*y^3, y^4, x^2*y^2*z, x^2*y^2*t"] },
    Fixture {
        name: "conca-2",
        ideals: &["x^4, x^3*y, x*y^3, y^4, x^2*y^2*z^2, x^2*y^2*z*t, x^2*y^2*t^2"],
    },
    Fixture {
        name: "conca-3",
        ideals: &["x^4, x^3*y, x*y^3, y^4, x^2*y^2*z^3, x^2*y^2*z^2*t, x^2*y^2*z*t^2, x^2*y^2*t^3"],
    },
    Fixture { name: "diagonal-1", ideals: &["x^7, x^6*y^2, x^5*y^3, x^3*y^4, y^7"] },
    Fixture { name: "diagonal-2", ideals: &["x^7, x^6*y^4, x^4*y^5, x^3*y^6, y^8"] },
    Fixture { name: "yes-not-equigenerated", ideals: &["x^2, y", "x, y^2"] },
    Fixture { name: "yes-height-one", ideals: &["x^3, x*y^2", "x^2*y, y^3"] },
    Fixture { name: "cold-height-one", ideals: &["x^2, y^2", "x*y"] },
    Fixture {
        name: "cold-three-variables",
        ideals: &[
            "x^5, y^5, z^5, x*y*z^3, x*y^2*z^2, x^2*y^3, x^2*z^3, x^3*y^2, x^3*y*z, x^3*z^2",
            "x^5, y^5, z^5, x^2*y^2*z, x^2*y*z^2, x*z^4, x*y^3*z, y*z^4, y^2*z^3, y^3*z^2, y^4*z, x*y^4, x^4*z, x^4*y",
        ],
    },
    Fixture { name: "type-boundary", ideals: &["x, y", "x, y"] },
];

fn marked(i: &MonomialIdeal) -> Vec<(u64, u64, usize, usize)> {
    let s = staircase(i).expect("plane fixture");
    triangle(&s)
        .into_iter()
        .filter(|e| e.marked)
        .map(|e| {
            let m = &e.position.monomial;
            (m.exponent(0).to_u64().unwrap(), m.exponent(1).to_u64().unwrap(), e.position.i, e.position.j)
        })
        .collect()
}

fn fixture_check(index: u64, v: &[MonomialIdeal], p: &Params) -> Checks {
    let f = &FIXTURES[index as usize];
    let o = match f.name {
        "failure-square" => {
            let (mu, mu2) = (v[0].mu(), v[0].power(2).mu());
            Outcome::expect(mu == 5 && mu2 == 8 && 2 * mu - 1 == 9, || format!("μ = {mu}, μ² = {mu2}"))
        }
        "failure-series" => match mu_series_with_ceiling(&v[0], 6, p.generator_ceiling) {
            Ok(s) => Outcome::expect((1..=6).all(|k| s.values[k] == 3 * k + 2), || format!("{:?}", s.values)),
            Err(e) => Outcome::from_error(e),
        },
        "failure-h-vector" => match h_vector(&v[0], 8, 3) {
            Ok(h) => {
                let want: Vec<BigInt> = [1, 3, -1].into_iter().map(BigInt::from).collect();
                Outcome::expect(h.spread == 2 && h.trimmed() == want.as_slice() && h.stabilized, || {
                    format!("{h:?}")
                })
            }
            Err(e) => Outcome::from_error(e),
        },
        "maximal-cube" => {
            let (mu, mu2) = (v[0].mu(), v[0].power(2).mu());
            Outcome::expect(mu == 10 && mu2 == 28 && mu2 > 3 * mu - 3, || format!("μ = {mu}, μ² = {mu2}"))
        }
        "conca-1" | "conca-2" | "conca-3" => {
            let a = (index - 3) as usize;
            let sq = v[0].power(2);
            let xy8 = MonomialIdeal::from_generators(
                4,
                (0..=8u64).map(|k| Monomial::from_u64s(&[8 - k, k, 0, 0])),
            )
            .expect("nonempty");
            Outcome::expect(v[0].mu() == 5 + a && sq.mu() == 9 && sq == xy8, || {
                format!("μ = {}, μ² = {}", v[0].mu(), sq.mu())
            })
        }
        "diagonal-1" => {
            let got: Vec<(u64, u64)> = marked(&v[0]).into_iter().map(|(x, y, _, _)| (x, y)).collect();
            let mut want = vec![(14, 0), (13, 2), (12, 3), (10, 4), (7, 7), (9, 6), (5, 10), (6, 8), (3, 11), (0, 14)];
            let mut sorted = got.clone();
            sorted.sort_unstable();
            want.sort_unstable();
            Outcome::expect(sorted == want && v[0].power(2).mu() == 10, || format!("marked {got:?}"))
        }
        "diagonal-2" => {
            let got = marked(&v[0]);
            let mut set: Vec<(u64, u64)> = got.iter().map(|&(x, y, _, _)| (x, y)).collect();
            set.sort_unstable();
            let mut want = vec![(14, 0), (13, 4), (11, 5), (10, 6), (7, 8), (4, 13), (6, 12), (3, 14), (0, 16)];
            want.sort_unstable();
            let row_two_empty = got.iter().all(|&(_, _, i, _)| i != 2);
            Outcome::expect(set == want && row_two_empty, || format!("marked {got:?}"))
        }
        "yes-not-equigenerated" | "yes-height-one" => {
            let (int, prod) = (v[0].intersect(&v[1]).unwrap(), v[0].product(&v[1]).unwrap());
            let (wi, wp) = if f.name == "yes-not-equigenerated" {
                ("x^2, x*y, y^2", "x^3, x*y, y^3")
            } else {
                ("x^3*y, x^2*y^2, x*y^3", "x*y^5, x^3*y^3, x^5*y")
            };
            Outcome::expect(int == parse(wi) && prod == parse(wp) && int.mu() == prod.mu(), || {
                format!("I ∩ J = ({int}), IJ = ({prod})")
            })
        }
        "cold-height-one" => {
            let sum = v[0].sum(&v[1]).unwrap();
            let sq = v[0].power(2).sum(&v[1].power(2)).unwrap();
            Outcome::expect(sum == MonomialIdeal::maximal_power(2, 2) && sq != MonomialIdeal::maximal_power(2, 4), || {
                format!("I₁ + I₂ = ({sum}), I₁² + I₂² = ({sq})")
            })
        }
        "cold-three-variables" => {
            let sum = v[0].sum(&v[1]).unwrap();
            let sq = v[0].power(2).sum(&v[1].power(2)).unwrap();
            let witness = Monomial::from_u64s(&[3, 3, 4]);
            let absent = !sq.contains(&witness).unwrap();
            let in_power = MonomialIdeal::maximal_power(3, 10).contains(&witness).unwrap();
            Outcome::expect(sum == MonomialIdeal::maximal_power(3, 5) && absent && in_power, || {
                format!("I + J = ({sum}), x³y³z⁴ ∈ I² + J²: {}", !absent)
            })
        }
        "type-boundary" => match check_type_theorem_with_ceiling(&v[0], &v[1], p.volume_ceiling) {
            Ok(c) => Outcome::expect(!c.hypothesis_met && c.product_type == 2, || format!("{c:?}")),
            Err(e) => Outcome::from_error(e),
        },
        other => Outcome::Fail(format!("no checker for fixture {other}")),
    };
    vec![(f.name, o)]
}

/// Builds the named suite under `cfg`.
pub fn suite(name: &str, cfg: &RunConfig) -> Result<(Suite, Resolved), SuiteError> {
    let (samples, m_def, e_def) = match name {
        "new" => (10_000, 6, 12),
        "small" => (1_000, 7, 12),
        "type" | "rough" => (1_000, 4, 4),
        "shalom" | "kill" | "freiman" | "h2" | "difference" => (1_000, 6, 4),
        _ => (1_000, 7, 12),
    };
    let r = cfg.resolve(samples, m_def, e_def);
    if r.max_gens == 0 || r.max_exp == 0 || r.params.k_max == 0 || r.params.tail_window == 0 {
        return Err(SuiteError::Config("bounds must be positive".into()));
    }
    if r.arity == Some(0) {
        return Err(SuiteError::Config("arity must be positive".into()));
    }
    let (m, e, arity, seed_samples) = (r.max_gens, r.max_exp, r.arity, r.samples);
    let _ = seed_samples;
    let mut b = Builder { r: &r, sources: Vec::new() };
    match name {
        "shalom" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| one("shalom", Outcome::from_check(check_product_bound(&v[0], &v[1])));
            let mut list = corpus::equigenerated_plane(3, false);
            list.extend(corpus::equigenerated_all(3, 2));
            // pairs across arities are skipped as not applicable
            b.pairs("equigenerated-small", list, chk);
            let pick = arity_in(arity, 2, 4);
            b.random(
                "equigenerated-pairs",
                move |d| {
                    let n = pick(d);
                    let mode = RandomMode::Equigenerated { arity: n, d_max: e, m_max: m, artinian: false };
                    Ok(vec![draw_mode(&mode, d)?, draw_mode(&mode, d)?])
                },
                chk,
            )?;
            let pick = arity_in(arity, 2, 4);
            b.random(
                "equigenerated-triples",
                move |d| {
                    let n = pick(d);
                    let mode = RandomMode::Equigenerated { arity: n, d_max: e.min(3), m_max: m, artinian: false };
                    (0..3).map(|_| draw_mode(&mode, d)).collect()
                },
                |_, v, _| one("shalom-iterated", Outcome::from_check(check_iterated_product_bound(v))),
            )?;
        }
        "kill" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| one("kill", Outcome::from_check(check_power_bound(&v[0], p.k_max)));
            let mut list = corpus::equigenerated_plane(6, false);
            list.extend(corpus::equigenerated_all(3, 2));
            b.singles("equigenerated-small", list, chk);
            let pick = arity_in(arity, 2, 3);
            b.random(
                "equigenerated",
                move |d| {
                    let n = pick(d);
                    Ok(vec![draw_mode(&RandomMode::Equigenerated { arity: n, d_max: e, m_max: m, artinian: false }, d)?])
                },
                chk,
            )?;
            b.random(
                "plane-maximal-powers",
                move |d| Ok(vec![MonomialIdeal::maximal_power(2, d.range(1, e))]),
                chk,
            )?;
        }
        "museum" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("museum", Outcome::from_check(check_intersection_bound(&v[0], &v[1])))
            };
            b.pairs("height-two-m3-b4", exhaustive_height_two(3, 4), chk);
            b.random("height-two-pairs", move |d| Ok(vec![height_two_staircase(d, m, e)?, height_two_staircase(d, m, e)?]), chk)?;
        }
        "huneke" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("huneke", Outcome::from_check(check_contracted_product(&v[0], &v[1])))
            };
            let contracted: Vec<MonomialIdeal> =
                exhaustive_height_two(4, 5).into_iter().filter(|i| is_contracted(i).unwrap()).collect();
            b.pairs("contracted-m4-b5", contracted, chk);
            let mode = RandomMode::Contracted { m_max: m.max(2), step_max: e.min(4) };
            b.random("contracted-pairs", move |d| Ok(vec![draw_mode(&mode, d)?, draw_mode(&mode, d)?]), chk)?;
        }
        "freiman" | "h2" => {
            let full = name == "freiman";
            let chk = move |_: u64, v: &[MonomialIdeal], _: &Params| {
                let mut out = vec![("h2", Outcome::from_check(check_h2_nonneg(&v[0])))];
                if full {
                    out.push(("freiman", Outcome::from_check(freiman_lower_bound(&v[0]))));
                    out.push(("freiman-set", Outcome::from_check(check_freiman_set(&exponent_points(&v[0])))));
                }
                out
            };
            let mut list = corpus::equigenerated_plane(5, false);
            list.extend(corpus::equigenerated_all(3, 2));
            list.extend(corpus::equigenerated_all(4, 1));
            b.singles("equigenerated-small", list, chk);
            let pick = arity_in(arity, 2, 4);
            b.random(
                "equigenerated",
                move |d| {
                    let n = pick(d);
                    Ok(vec![draw_mode(&RandomMode::Equigenerated { arity: n, d_max: e, m_max: m, artinian: false }, d)?])
                },
                chk,
            )?;
            let fixed3 = arity.unwrap_or(3);
            b.random(
                "equigenerated-3ary",
                move |d| {
                    Ok(vec![draw_mode(
                        &RandomMode::Equigenerated { arity: fixed3, d_max: e, m_max: m.max(8), artinian: false },
                        d,
                    )?])
                },
                chk,
            )?;
        }
        "compare" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                vec![
                    ("compare", Outcome::from_check(check_compare(&v[0], p.k_max))),
                    ("h-reconstruct", h_reconstruct(&v[0], p)),
                ]
            };
            let mut list = corpus::equigenerated_plane(5, false);
            list.extend(exhaustive_staircases(3, 4).into_iter().filter(|i| i.mu() >= 2));
            b.singles("plane-small", list, chk);
            b.random(
                "staircases",
                move |d| Ok(vec![random_staircase(d, m.max(2), e.max(m as u64), false).map_err(|x| x.to_string())?.to_ideal()]),
                chk,
            )?;
            b.random("equigenerated-height-two", move |d| Ok(vec![plane_equigenerated(d, e.min(10), m)?]), chk)?;
        }
        "difference" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                vec![
                    ("difference", Outcome::from_check(check_difference(&v[0], p.k_max))),
                    ("h-reconstruct", h_reconstruct(&v[0], p)),
                ]
            };
            let mut list = corpus::equigenerated_plane(4, false);
            list.extend(corpus::equigenerated_all(3, 2));
            b.singles("equigenerated-small", list, chk);
            let pick = arity_in(arity, 2, 4);
            b.random(
                "equigenerated",
                move |d| {
                    let n = pick(d);
                    Ok(vec![draw_mode(&RandomMode::Equigenerated { arity: n, d_max: e, m_max: m, artinian: false }, d)?])
                },
                chk,
            )?;
            b.random(
                "staircases",
                move |d| Ok(vec![random_staircase(d, m.max(2), e.max(m as u64), false).map_err(|x| x.to_string())?.to_ideal()]),
                chk,
            )?;
        }
        "new" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("new", Outcome::from_check(classify_product_equality(&v[0], &v[1])))
            };
            b.pairs("equigenerated-height-two-d8", corpus::equigenerated_plane(8, true), chk);
            b.random(
                "equigenerated-height-two-pairs",
                move |d| {
                    if d.below(4) == 0 {
                        Ok(power_shape_pair(d, e))
                    } else {
                        Ok(vec![plane_equigenerated(d, e, m)?, plane_equigenerated(d, e, m)?])
                    }
                },
                chk,
            )?;
        }
        "yes" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("yes", Outcome::from_check(check_intersection_below_product(&v[0], &v[1])))
            };
            b.pairs("equigenerated-height-two-d6", corpus::equigenerated_plane(6, true), chk);
            b.random(
                "equigenerated-height-two-pairs",
                move |d| {
                    if d.below(4) == 0 {
                        Ok(power_shape_pair(d, e))
                    } else {
                        Ok(vec![plane_equigenerated(d, e, m)?, plane_equigenerated(d, e, m)?])
                    }
                },
                chk,
            )?;
        }
        "truered" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                vec![
                    ("truered", Outcome::from_check(check_reduction(&v[0]))),
                    ("true", Outcome::from_check(check_power_equality(&v[0], p.k_max.max(2)))),
                ]
            };
            b.singles("equigenerated-height-two-d9", corpus::equigenerated_plane(9, true), chk);
            b.random(
                "equigenerated-height-two",
                move |d| {
                    if d.below(4) == 0 {
                        Ok(vec![power_shape_pair(d, e).swap_remove(0)])
                    } else {
                        Ok(vec![plane_equigenerated(d, e, m)?])
                    }
                },
                chk,
            )?;
        }
        "cold" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                one("cold", Outcome::from_check(check_sum_power(v, p.k_max.min(4))))
            };
            let mut fams = Vec::new();
            for deg in 1..=4u64 {
                let plane: Vec<MonomialIdeal> =
                    corpus::equigenerated_plane(deg, true).into_iter().filter(|i| i.equigenerated_degree() == Some(Exponent::new(deg))).collect();
                let full = MonomialIdeal::maximal_power(2, deg);
                for i in &plane {
                    for j in &plane {
                        if i.sum(j).unwrap() == full {
                            fams.push(vec![i.clone(), j.clone()]);
                        }
                    }
                }
            }
            b.exhaustive("covering-pairs-d4", fams, chk);
            let r_max = m.clamp(2, 4);
            b.random("covering-families", move |d| Ok(random_cold_family(d, e.min(8), r_max)), chk)?;
        }
        "convex" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("convex", with_stair(&v[0], |s| Outcome::from_check(check_convex(s))))
            };
            b.singles("staircases-m5-b6", exhaustive_staircases(5, 6), chk);
            for concave in [true, false] {
                let mode = RandomMode::Shaped { m_max: m, gap_max: e.min(6), concave };
                let label = if concave { "concave" } else { "convex" };
                b.random(label, move |d| Ok(vec![draw_mode(&mode, d)?]), chk)?;
            }
        }
        "lexsegment" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| crash(&v[0]);
            b.singles("lexsegments-d8-b10", corpus::lexsegments(8, 10), chk);
            let mode = RandomMode::Lexsegment { d_max: e, gap_max: 3 };
            b.random("lexsegments", move |d| Ok(vec![draw_mode(&mode, d)?]), chk)?;
        }
        "brexit" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                let step = infer_step(v);
                let mut out = vec![("brexit", Outcome::from_check(back_product(v, &step)))];
                if v.len() == 1 {
                    out.push(("brexit-power", brexit_power(&v[0], p)));
                }
                out
            };
            let shapes = corpus::back_shapes(3, 5);
            b.singles("back-shapes-t3-b5", shapes.clone(), chk);
            b.pairs("back-shape-pairs-t2-b4", corpus::back_shapes(2, 4), chk);
            let len = (m as u64).saturating_sub(1).max(1);
            b.random("back-families", move |d| Ok(random_back_family(d, 3, len, 3)), chk)?;
        }
        "bar" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| one("bar", bar(&v[0]));
            b.singles("staircases-m4-b4", exhaustive_staircases(4, 4), chk);
            b.random(
                "staircases",
                move |d| Ok(vec![random_staircase(d, m, e.max(m as u64), false).map_err(|x| x.to_string())?.to_ideal()]),
                chk,
            )?;
        }
        "small" => {
            let space = StaircaseSpace::new(m, e).map_err(|x| SuiteError::Config(x.to_string()))?;
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| {
                one("small", with_stair(&v[0], |s| Outcome::from_check(check_square_growth(s))))
            };
            if !r.random_only {
                let mut s = Source::new(
                    format!("staircases-m{m}-b{e}"),
                    SourceKind::Exhaustive,
                    space.count(),
                    move |i| vec![space.get(i).to_ideal()],
                    chk,
                );
                s.scan = Some(small_scan(space));
                b.sources.push(s);
            }
            let (rm, re) = (m.max(10), e.max(40));
            b.random(
                "staircases-wide",
                move |d| Ok(vec![random_staircase(d, rm, re, false).map_err(|x| x.to_string())?.to_ideal()]),
                |_, v, _| {
                    vec![
                        ("small", with_stair(&v[0], |s| Outcome::from_check(check_square_growth(s)))),
                        ("corners", with_stair(&v[0], |s| Outcome::from_check(check_corner_generators(s)))),
                    ]
                },
            )?;
            b.exhaustive(
                "safe-area-m2-6",
                (2..=6).map(|k| vec![MonomialIdeal::maximal_power(2, k - 1)]).collect(),
                |i, _, _| one("safe-area-cover", safe_area_cover(i as usize + 2)),
            );
        }
        "baby" => {
            let chk = |_: u64, v: &[MonomialIdeal], _: &Params| one("baby", Outcome::from_check(check_baby(&v[0], &v[1])));
            b.pairs("height-two-m3-b4", exhaustive_height_two(3, 4), chk);
            b.random("height-two-pairs", move |d| Ok(vec![height_two_staircase(d, m, e)?, height_two_staircase(d, m, e)?]), chk)?;
        }
        "rough" | "type" => {
            let rough = name == "rough";
            let chk = move |_: u64, v: &[MonomialIdeal], p: &Params| {
                if rough {
                    one("rough", Outcome::from_check(check_rough(&v[0], &v[1])))
                } else {
                    one("type", type_outcome(&v[0], &v[1], p))
                }
            };
            b.pairs("artinian-2ary-p3", corpus::small_artinian(2, 3), chk);
            b.pairs("artinian-3ary-p2", corpus::small_artinian(3, 2), chk);
            let pick = arity_in(arity, 2, if rough { 4 } else { 3 });
            b.random(
                "artinian-pairs",
                move |d| {
                    let n = pick(d);
                    let mode = RandomMode::Artinian { arity: n, max_exp: e, extra: m };
                    Ok(vec![draw_mode(&mode, d)?, draw_mode(&mode, d)?])
                },
                chk,
            )?;
            b.random(
                "equigenerated-artinian-pairs",
                move |d| {
                    let n = pick_fixed(arity, d);
                    let mode = RandomMode::Equigenerated { arity: n, d_max: e.min(3), m_max: m.max(n), artinian: true };
                    Ok(vec![draw_mode(&mode, d)?, draw_mode(&mode, d)?])
                },
                chk,
            )?;
        }
        "duality" => {
            let chk = |_: u64, v: &[MonomialIdeal], p: &Params| {
                let i = &v[0];
                let duality = Outcome::from_check(check_plane_duality(i));
                let socle_type = match cm_type_with_ceiling(i, p.volume_ceiling) {
                    Ok(t) => Outcome::expect(t + 1 == i.mu(), || format!("type {t}, μ {}", i.mu())),
                    Err(e) => Outcome::from_error(e),
                };
                vec![("duality", duality), ("type-mu", socle_type)]
            };
            b.singles("height-two-m5-b6", exhaustive_height_two(5, 6), chk);
            b.random("height-two", move |d| Ok(vec![height_two_staircase(d, m, e)?]), chk)?;
        }
        "paper-fixtures" => {
            let list: Vec<Vec<MonomialIdeal>> = FIXTURES.iter().map(|f| f.ideals.iter().map(|t| parse(t)).collect()).collect();
            let list = Arc::new(list);
            let n = list.len() as u64;
            b.sources.push(Source::new("fixtures", SourceKind::Fixture, n, move |i| list[i as usize].clone(), fixture_check));
        }
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    }
    let sources = b.sources;
    Ok((Suite { name: name.to_string(), sources }, r))
}

fn pick_fixed(arity: Option<usize>, d: &mut Draw) -> usize {
    arity.unwrap_or_else(|| d.range(2, 3) as usize)
}

#[derive(Default)]
struct Tally {
    pass: u64,
    fail: u64,
    not_applicable: u64,
    resource: u64,
    reasons: BTreeMap<String, u64>,
    fails: Vec<(usize, u64, String)>,
}

type ChunkTally = BTreeMap<&'static str, Tally>;

fn record(t: &mut ChunkTally, cap: usize, source: usize, index: u64, check: &'static str, o: Outcome) {
    let e = t.entry(check).or_default();
    match o {
        Outcome::Pass => e.pass += 1,
        Outcome::NotApplicable(r) => {
            e.not_applicable += 1;
            *e.reasons.entry(r).or_default() += 1;
        }
        Outcome::Resource(r) => {
            e.resource += 1;
            *e.reasons.entry(r).or_default() += 1;
        }
        Outcome::Fail(detail) => {
            e.fail += 1;
            if e.fails.len() < cap {
                e.fails.push((source, index, detail));
            }
        }
    }
}

const CHUNK: u64 = 512;
const SCAN_CHUNK: u64 = 1 << 16;

/// Runs `suite` with the resolved configuration.
pub fn run_suite_with(suite: &Suite, r: &Resolved) -> Report {
    let start = Instant::now();
    let mut work: Vec<(usize, Range<u64>)> = Vec::new();
    for (si, s) in suite.sources.iter().enumerate() {
        let step = if s.scan.is_some() { SCAN_CHUNK } else { CHUNK };
        let mut lo = 0;
        while lo < s.count {
            let hi = (lo + step).min(s.count);
            work.push((si, lo..hi));
            lo = hi;
        }
    }
    let cap = r.max_witnesses;
    let params = &r.params;
    let eval = |(si, range): &(usize, Range<u64>)| -> ChunkTally {
        let s = &suite.sources[*si];
        let mut t = ChunkTally::new();
        if let Some(scan) = &s.scan {
            scan(range.clone(), params, &mut |idx, check, o| record(&mut t, cap, *si, idx, check, o));
        } else {
            for idx in range.clone() {
                let ideals = (s.generate)(idx);
                for (check, o) in (s.check)(idx, &ideals, params) {
                    record(&mut t, cap, *si, idx, check, o);
                }
            }
        }
        t
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(r.workers).build().expect("thread pool");
    let tallies: Vec<ChunkTally> = pool.install(|| work.par_iter().map(eval).collect());

    let mut merged: BTreeMap<&'static str, Tally> = BTreeMap::new();
    for t in tallies {
        for (check, c) in t {
            let m = merged.entry(check).or_default();
            m.pass += c.pass;
            m.fail += c.fail;
            m.not_applicable += c.not_applicable;
            m.resource += c.resource;
            for (reason, n) in c.reasons {
                *m.reasons.entry(reason).or_default() += n;
            }
            for f in c.fails {
                if m.fails.len() < cap {
                    m.fails.push(f);
                }
            }
        }
    }
    let mut counts = Counts { instances: suite.sources.iter().map(|s| s.count).sum(), ..Counts::default() };
    let verdicts: Vec<Verdict> = merged
        .into_iter()
        .map(|(check, t)| {
            counts.pass += t.pass;
            counts.fail += t.fail;
            counts.not_applicable += t.not_applicable;
            counts.resource += t.resource;
            let witnesses = t
                .fails
                .into_iter()
                .map(|(si, index, detail)| {
                    let s = &suite.sources[si];
                    let ideals = (s.generate)(index);
                    Witness {
                        check: check.to_string(),
                        source: s.label.clone(),
                        index,
                        seed: s.seed,
                        ideals: ideals.iter().map(ideal_rows).collect(),
                        text: ideals.iter().map(|i| i.to_string()).collect(),
                        detail,
                    }
                })
                .collect();
            Verdict {
                check: check.to_string(),
                pass: t.pass,
                fail: t.fail,
                not_applicable: t.not_applicable,
                resource: t.resource,
                not_applicable_reasons: t.reasons,
                witnesses,
            }
        })
        .collect();
    Report {
        suite: suite.name.clone(),
        config: serde_json::to_value(r).expect("config serializes"),
        sources: suite
            .sources
            .iter()
            .map(|s| SourceSummary { label: s.label.clone(), kind: s.kind.name(), instances: s.count })
            .collect(),
        partial: counts.resource > 0,
        verdicts,
        counts,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report, SuiteError> {
    let (s, r) = suite(name, cfg)?;
    Ok(run_suite_with(&s, &r))
}

/// Re-checks a witness from its recorded generator text alone.
pub fn replay(suite: &Suite, witness: &Witness, params: &Params) -> Result<Outcome, String> {
    let source = suite
        .sources
        .iter()
        .find(|s| s.label == witness.source)
        .ok_or_else(|| format!("suite {} has no source {}", suite.name, witness.source))?;
    let ideals = witness
        .text
        .iter()
        .zip(&witness.ideals)
        .map(|(t, rows)| {
            let arity = rows.first().map_or(1, Vec::len);
            parse_ideal_with(t, Some(arity)).map(|p| p.ideal).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    (source.check)(witness.index, &ideals, params)
        .into_iter()
        .find(|(c, _)| *c == witness.check)
        .map(|(_, o)| o)
        .ok_or_else(|| format!("check {} not produced on replay", witness.check))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> RunConfig {
        RunConfig { samples: Some(40), workers: Some(2), ..RunConfig::default() }
    }

    #[test]
    fn every_suite_builds_and_passes_a_quick_run() {
        for name in SUITE_NAMES {
            if *name == "small" {
                continue;
            }
            let cfg = RunConfig { random_only: matches!(*name, "new" | "rough" | "type"), ..quick() };
            let report = run_suite(name, &cfg).unwrap();
            assert!(report.passed(), "{name}: {}", report.to_table());
            assert!(!report.partial, "{name}");
            assert!(report.verdicts.iter().any(|v| v.pass > 0), "{name} is vacuous");
        }
    }

    #[test]
    fn small_scan_agrees_with_checker() {
        let cfg = RunConfig { max_gens: Some(4), max_exp: Some(5), samples: Some(10), workers: Some(1), ..RunConfig::default() };
        let (s, r) = suite("small", &cfg).unwrap();
        let fast = &s.sources[0];
        let mut slow = fast.clone();
        slow.scan = None;
        let a = run_suite_with(&Suite { name: "a".into(), sources: vec![fast.clone()] }, &r);
        let b = run_suite_with(&Suite { name: "a".into(), sources: vec![slow] }, &r);
        assert_eq!(a.verdicts, b.verdicts);
        assert!(a.passed());
    }

    #[test]
    fn safe_area_cover_holds_up_to_six() {
        for m in 2..=6 {
            assert_eq!(safe_area_cover(m), Outcome::Pass, "m = {m}");
        }
    }

    #[test]
    fn unknown_suite_and_bad_bounds() {
        assert!(matches!(run_suite("nope", &RunConfig::default()), Err(SuiteError::UnknownSuite(_))));
        let cfg = RunConfig { max_exp: Some(0), ..RunConfig::default() };
        assert!(matches!(suite("museum", &cfg), Err(SuiteError::Config(_))));
        let cfg = RunConfig { max_gens: Some(9), max_exp: Some(3), ..RunConfig::default() };
        assert!(matches!(suite("small", &cfg), Err(SuiteError::Config(_))));
    }

    #[test]
    fn fixtures_pass() {
        let report = run_suite("paper-fixtures", &RunConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.to_table());
        assert_eq!(report.counts.pass as usize, FIXTURES.len());
    }

    #[test]
    fn error_mapping_keeps_hypotheses_apart() {
        assert!(matches!(Outcome::from_error(CoreError::Hypothesis("h")), Outcome::NotApplicable(_)));
        assert!(matches!(Outcome::from_error(CoreError::ResourceLimit { what: "w", limit: 1 }), Outcome::Resource(_)));
        assert!(matches!(Outcome::from_error(CoreError::Inconsistent("i")), Outcome::Fail(_)));
    }
}
