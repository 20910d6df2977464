//! Counterexample search over bounded or sampled spaces.
//!
//! The space is scanned in index order, split into ranges that run in
//! parallel; the reported witness is always the one of least index, so the
//! answer does not depend on the number of workers.

use std::fmt;
use std::time::Instant;

use mugen_core::planar::square_mu_u64;
use mugen_core::{MonomialIdeal, Staircase};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::corpus::{equigenerated_plane, random_staircase, StaircaseSpace};
use crate::report::ideal_rows;
use crate::rng::Draw;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// Non-principal staircases with `μ(I²) ≤ μ(I)`.
    #[value(name = "mu2_le_mu")]
    #[serde(rename = "mu2_le_mu")]
    Mu2LeMu,
    /// Staircases that are not equigenerated with `μ(I²) < 2μ(I) − 1`.
    #[value(name = "mu2_lt_2mu_minus_1")]
    #[serde(rename = "mu2_lt_2mu_minus_1")]
    Mu2LtTwoMuMinus1,
    /// Equigenerated height-2 pairs with `μ(I ∩ J) > μ(IJ)`.
    #[value(name = "intersection_exceeds_product")]
    #[serde(rename = "intersection_exceeds_product")]
    IntersectionExceedsProduct,
    /// Staircases with at least six generators and `μ(I²) = 9`.
    #[value(name = "mu2_eq_9")]
    #[serde(rename = "mu2_eq_9")]
    Mu2Eq9,
    /// Height-2 staircases with `μ(I^{k+1}) ≤ μ(I^k)` for some `k < k_max`.
    #[value(name = "mu_not_increasing")]
    #[serde(rename = "mu_not_increasing")]
    MuNotIncreasing,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Mu2LeMu => "mu2_le_mu",
            Predicate::Mu2LtTwoMuMinus1 => "mu2_lt_2mu_minus_1",
            Predicate::IntersectionExceedsProduct => "intersection_exceeds_product",
            Predicate::Mu2Eq9 => "mu2_eq_9",
            Predicate::MuNotIncreasing => "mu_not_increasing",
        }
    }

    /// A witness to this predicate would contradict a proved statement.
    pub fn refutes_theorem(self) -> bool {
        matches!(self, Predicate::Mu2LeMu | Predicate::IntersectionExceedsProduct)
    }

    fn on_pairs(self) -> bool {
        self == Predicate::IntersectionExceedsProduct
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Draw this many random instances instead of scanning exhaustively.
    pub samples: Option<u64>,
    pub workers: Option<usize>,
    pub max_gens: Option<usize>,
    pub max_exp: Option<u64>,
    pub k_max: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 0, samples: None, workers: None, max_gens: None, max_exp: None, k_max: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchError(pub String);

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SearchError {}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchWitness {
    pub index: u64,
    pub ideals: Vec<Vec<Vec<Value>>>,
    pub text: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub predicate: &'static str,
    pub space: String,
    pub config: Value,
    pub size: u64,
    pub witness: Option<SearchWitness>,
    /// True when the whole space was scanned without finding a witness.
    pub exhausted: bool,
    pub duration_ms: u64,
}

impl SearchReport {
    pub fn exit_code(&self, predicate: Predicate) -> i32 {
        if self.witness.is_some() && predicate.refutes_theorem() {
            crate::EXIT_FAIL
        } else {
            crate::EXIT_OK
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("search {} over {} ({} instances)\n", self.predicate, self.space, self.size);
        match &self.witness {
            Some(w) => {
                out += &format!("  witness #{}: {}\n", w.index, w.detail);
                for t in &w.text {
                    out += &format!("    ({t})\n");
                }
            }
            None => out += "  exhausted: no witness\n",
        }
        out += &format!("  {} ms\n", self.duration_ms);
        out
    }
}

#[derive(Debug, Clone, Copy)]
enum Space {
    Staircases(StaircaseSpace),
    RandomStaircases { count: u64, m_max: usize, bound: u64, height_two: bool },
    Pairs { d_max: u64, random: Option<u64> },
}

const CHUNK: u64 = 1 << 14;

pub fn counterexample_search(predicate: Predicate, cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    let exhaustive = cfg.samples.is_none();
    if exhaustive && (cfg.max_gens.is_none() || cfg.max_exp.is_none()) && !predicate.on_pairs() {
        return Err(SearchError(
            "unbounded search space: give --max-gens and --max-exp, or --samples for random search".into(),
        ));
    }
    if exhaustive && predicate.on_pairs() && cfg.max_exp.is_none() {
        return Err(SearchError("unbounded search space: give --max-exp (largest degree), or --samples".into()));
    }
    let height_two = predicate == Predicate::MuNotIncreasing;
    let space = if predicate.on_pairs() {
        Space::Pairs { d_max: cfg.max_exp.unwrap_or(6), random: cfg.samples }
    } else if let Some(count) = cfg.samples {
        Space::RandomStaircases {
            count,
            m_max: cfg.max_gens.unwrap_or(8),
            bound: cfg.max_exp.unwrap_or(12),
            height_two,
        }
    } else {
        let (m, b) = (cfg.max_gens.unwrap(), cfg.max_exp.unwrap());
        let mut s = if height_two { StaircaseSpace::height_two(m, b) } else { StaircaseSpace::new(m, b) }
            .map_err(|e| SearchError(e.to_string()))?;
        s.m_min = s.m_min.max(match predicate {
            Predicate::Mu2Eq9 => 6,
            _ => 2,
        });
        if s.m_min > s.m_max {
            return Err(SearchError(format!("{} needs more generators than --max-gens allows", predicate.name())));
        }
        Space::Staircases(s)
    };

    let pairs_list = match space {
        Space::Pairs { d_max, .. } => equigenerated_plane(d_max, true),
        _ => Vec::new(),
    };
    let size = match space {
        Space::Staircases(s) => s.count(),
        Space::RandomStaircases { count, .. } => count,
        Space::Pairs { random: Some(n), .. } => n,
        Space::Pairs { random: None, .. } => (pairs_list.len() as u64).pow(2),
    };
    let description = match space {
        Space::Staircases(s) => format!(
            "{}staircases with {} ≤ m ≤ {}, exponents ≤ {}",
            if s.height_two { "height-2 " } else { "" },
            s.m_min,
            s.m_max,
            s.bound
        ),
        Space::RandomStaircases { count, m_max, bound, height_two } => format!(
            "{count} random {}staircases with m ≤ {m_max}, exponents ≤ {bound} (seed {})",
            if height_two { "height-2 " } else { "" },
            cfg.seed
        ),
        Space::Pairs { d_max, random } => match random {
            Some(n) => format!("{n} random equigenerated height-2 pairs of degree ≤ {d_max} (seed {})", cfg.seed),
            None => format!("equigenerated height-2 pairs of degree ≤ {d_max}"),
        },
    };

    let k_max = cfg.k_max.max(2);
    let n = pairs_list.len() as u64;
    let seed = cfg.seed;
    let instance = |index: u64| -> Vec<MonomialIdeal> {
        match space {
            Space::Staircases(s) => vec![s.get(index).to_ideal()],
            Space::RandomStaircases { m_max, bound, height_two, .. } => {
                let mut d = Draw::new(seed, 0, index);
                vec![random_staircase(&mut d, m_max, bound, height_two).expect("validated").to_ideal()]
            }
            Space::Pairs { random: None, .. } => {
                vec![pairs_list[(index / n) as usize].clone(), pairs_list[(index % n) as usize].clone()]
            }
            Space::Pairs { random: Some(_), .. } => {
                let mut d = Draw::new(seed, 0, index);
                let pick = |d: &mut Draw| pairs_list[d.below(n) as usize].clone();
                vec![pick(&mut d), pick(&mut d)]
            }
        }
    };
    if let Space::RandomStaircases { m_max, bound, height_two, .. } = space {
        random_staircase(&mut Draw::new(seed, 0, 0), m_max, bound, height_two).map_err(|e| SearchError(e.to_string()))?;
    }

    let test = |ideals: &[MonomialIdeal]| -> Option<String> { evaluate(predicate, ideals, k_max) };
    let scan_chunk = |c: u64| -> Option<(u64, String)> {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(size);
        if let Space::Staircases(s) = space {
            if matches!(predicate, Predicate::Mu2LeMu | Predicate::Mu2LtTwoMuMinus1 | Predicate::Mu2Eq9) {
                let mut scratch = Vec::new();
                let mut hit = None;
                s.for_each(lo..hi, |index, a, b| {
                    if hit.is_none() {
                        if let Some(detail) = fast(predicate, a, b, &mut scratch) {
                            hit = Some((index, detail));
                        }
                    }
                });
                return hit;
            }
        }
        (lo..hi).find_map(|index| test(&instance(index)).map(|d| (index, d)))
    };
    let chunks = size.div_ceil(CHUNK);
    let workers = cfg.workers.unwrap_or_else(crate::suites::default_workers).max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    let hit = pool.install(|| (0..chunks).into_par_iter().find_map_first(scan_chunk));

    let witness = hit.map(|(index, detail)| {
        let ideals = instance(index);
        SearchWitness {
            index,
            ideals: ideals.iter().map(ideal_rows).collect(),
            text: ideals.iter().map(|i| i.to_string()).collect(),
            detail,
        }
    });
    Ok(SearchReport {
        predicate: predicate.name(),
        space: description,
        config: serde_json::json!({
            "seed": cfg.seed,
            "samples": cfg.samples,
            "workers": workers,
            "max_gens": cfg.max_gens,
            "max_exp": cfg.max_exp,
            "k_max": k_max,
        }),
        size,
        exhausted: witness.is_none(),
        witness,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

fn fast(predicate: Predicate, a: &[u64], b: &[u64], scratch: &mut Vec<(u64, u64)>) -> Option<String> {
    let m = a.len();
    let mu2 = square_mu_u64(a, b, scratch);
    let hit = match predicate {
        Predicate::Mu2LeMu => mu2 <= m,
        Predicate::Mu2LtTwoMuMinus1 => {
            let equi = a.iter().zip(b).all(|(x, y)| x + y == a[0] + b[0]);
            !equi && mu2 + 1 < 2 * m
        }
        Predicate::Mu2Eq9 => mu2 == 9,
        _ => unreachable!("no fast path"),
    };
    hit.then(|| format!("μ(I) = {m}, μ(I²) = {mu2}"))
}

fn evaluate(predicate: Predicate, ideals: &[MonomialIdeal], k_max: usize) -> Option<String> {
    let i = &ideals[0];
    match predicate {
        Predicate::IntersectionExceedsProduct => {
            let j = &ideals[1];
            let (a, b) = (i.intersect(j).ok()?.mu(), i.product(j).ok()?.mu());
            (a > b).then(|| format!("μ(I ∩ J) = {a}, μ(IJ) = {b}"))
        }
        Predicate::MuNotIncreasing => {
            let series: Vec<usize> = i.powers().take(k_max + 1).map(|p| p.mu()).collect();
            (0..k_max).find(|&k| series[k + 1] <= series[k]).map(|k| format!("k = {k}: μ series {series:?}"))
        }
        _ => {
            let s = Staircase::from_ideal(i).ok()?;
            let a: Vec<u64> = s.a().iter().map(|e| e.to_u64().expect("corpus exponents are small")).collect();
            let b: Vec<u64> = s.b().iter().map(|e| e.to_u64().expect("corpus exponents are small")).collect();
            if predicate == Predicate::Mu2Eq9 && a.len() < 6 || a.len() < 2 {
                return None;
            }
            fast(predicate, &a, &b, &mut Vec::new())
        }
    }
}
