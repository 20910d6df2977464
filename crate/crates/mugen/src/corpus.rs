//! Deterministic enumerations and seeded random families of ideals.

use std::fmt;

use mugen_core::{minimalize, Exponent, Monomial, MonomialIdeal, Staircase};
use serde::Serialize;

use crate::rng::Draw;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusError(pub String);

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CorpusError {}

fn infeasible(msg: impl Into<String>) -> CorpusError {
    CorpusError(msg.into())
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64")
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub fn unrank_combination(n: u64, k: usize, mut rank: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k as u64 {
        loop {
            let rest = binomial(n - next - 1, k as u64 - slot - 1);
            if rank < rest {
                break;
            }
            rank -= rest;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Advances to the lexicographically next `k`-subset of `0..n`; false when
/// `comb` was the last one.
pub fn next_combination(comb: &mut [u64], n: u64) -> bool {
    let k = comb.len();
    for pos in (0..k).rev() {
        if comb[pos] < n - (k - pos) as u64 {
            comb[pos] += 1;
            for q in pos + 1..k {
                comb[q] = comb[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every staircase with `m_min ≤ m ≤ m_max` and entries at most `bound`, in
/// the order: by `m`, then by the `a`-set, then by the `b`-set (each set in
/// lexicographic order of its increasing listing).
///
/// With `height_two` only sequences with `a_m = b_1 = 0` are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StaircaseSpace {
    pub m_min: usize,
    pub m_max: usize,
    pub bound: u64,
    pub height_two: bool,
}

impl StaircaseSpace {
    pub fn new(m_max: usize, bound: u64) -> Result<Self, CorpusError> {
        if m_max < 1 {
            return Err(infeasible("need at least one generator"));
        }
        if bound + 1 < m_max as u64 {
            return Err(infeasible(format!(
                "bound {bound} admits no staircase with {m_max} generators (need bound ≥ m − 1)"
            )));
        }
        Ok(StaircaseSpace { m_min: 1, m_max, bound, height_two: false })
    }

    /// Height-2 staircases with `2 ≤ m ≤ m_max`.
    pub fn height_two(m_max: usize, bound: u64) -> Result<Self, CorpusError> {
        let mut s = Self::new(m_max, bound)?;
        s.m_min = 2;
        s.height_two = true;
        Ok(s)
    }

    /// Free positions per sequence and their pool size.
    fn pool(&self, m: usize) -> (u64, usize) {
        if self.height_two {
            (self.bound, m - 1)
        } else {
            (self.bound + 1, m)
        }
    }

    fn block(&self, m: usize) -> u64 {
        let (n, k) = self.pool(m);
        let c = binomial(n, k as u64);
        c * c
    }

    pub fn count(&self) -> u64 {
        (self.m_min..=self.m_max).map(|m| self.block(m)).sum()
    }

    fn locate(&self, mut index: u64) -> (usize, u64) {
        for m in self.m_min..=self.m_max {
            let b = self.block(m);
            if index < b {
                return (m, index);
            }
            index -= b;
        }
        panic!("index out of range");
    }

    fn sequences(&self, m: usize, comb_a: &[u64], comb_b: &[u64], a: &mut Vec<u64>, b: &mut Vec<u64>) {
        a.clear();
        b.clear();
        if self.height_two {
            a.extend(comb_a.iter().rev().map(|v| v + 1));
            a.push(0);
            b.push(0);
            b.extend(comb_b.iter().map(|v| v + 1));
        } else {
            a.extend(comb_a.iter().rev());
            b.extend(comb_b.iter());
        }
        debug_assert_eq!(a.len(), m);
    }

    pub fn get(&self, index: u64) -> Staircase {
        let (m, local) = self.locate(index);
        let (n, k) = self.pool(m);
        let c = binomial(n, k as u64);
        let ca = unrank_combination(n, k, local / c);
        let cb = unrank_combination(n, k, local % c);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        self.sequences(m, &ca, &cb, &mut a, &mut b);
        Staircase::from_u64s(&a, &b).expect("valid by construction")
    }

    /// Calls `f(index, a, b)` for every index in `range`, walking
    /// combinations incrementally instead of unranking each one.
    pub fn for_each(&self, range: std::ops::Range<u64>, mut f: impl FnMut(u64, &[u64], &[u64])) {
        if range.is_empty() {
            return;
        }
        let (mut m, local) = self.locate(range.start);
        let (mut n, mut k) = self.pool(m);
        let mut c = binomial(n, k as u64);
        let mut ca = unrank_combination(n, k, local / c);
        let mut cb = unrank_combination(n, k, local % c);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        self.sequences(m, &ca, &cb, &mut a, &mut b);
        for index in range.clone() {
            f(index, &a, &b);
            if index + 1 == range.end {
                break;
            }
            if next_combination(&mut cb, n) {
                // only b changed
                if self.height_two {
                    for (slot, v) in cb.iter().enumerate() {
                        b[slot + 1] = v + 1;
                    }
                } else {
                    b.copy_from_slice(&cb);
                }
                continue;
            }
            cb = (0..k as u64).collect();
            if !next_combination(&mut ca, n) {
                m += 1;
                (n, k) = self.pool(m);
                c = binomial(n, k as u64);
                let _ = c;
                ca = (0..k as u64).collect();
                cb = (0..k as u64).collect();
            }
            self.sequences(m, &ca, &cb, &mut a, &mut b);
        }
    }
}

/// All staircase ideals with `m ≤ m_max` generators and exponents `≤ bound`.
pub fn enumerate_staircases(
    m_max: usize,
    bound: u64,
) -> Result<impl Iterator<Item = MonomialIdeal>, CorpusError> {
    let space = StaircaseSpace::new(m_max, bound)?;
    Ok((0..space.count()).map(move |i| space.get(i).to_ideal()))
}

/// All exponent vectors of total degree `d` in `n` variables, in descending
/// lexicographic order.
pub fn compositions(n: usize, d: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn ideal_from_rows(arity: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> MonomialIdeal {
    let gens: Vec<Monomial> = rows.into_iter().map(|r| Monomial::from_u64s(&r)).collect();
    let ideal = minimalize(&gens).expect("nonempty");
    debug_assert_eq!(ideal.arity(), arity);
    ideal
}

/// Every ideal of `K[x, y]` generated in one degree `d ≤ d_max`; with
/// `height_two` only those containing `x^d` and `y^d`.
pub fn equigenerated_plane(d_max: u64, height_two: bool) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        if height_two {
            let interior = d - 1;
            for mask in 0u64..(1 << interior) {
                let rows = std::iter::once(vec![d, 0])
                    .chain((1..d).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| vec![d - i, i]))
                    .chain(std::iter::once(vec![0, d]));
                out.push(ideal_from_rows(2, rows));
            }
        } else {
            let all = compositions(2, d);
            for mask in 1u64..(1 << all.len()) {
                let rows = all.iter().enumerate().filter(|(p, _)| mask >> p & 1 == 1).map(|(_, r)| r.clone());
                out.push(ideal_from_rows(2, rows));
            }
        }
    }
    out
}

/// Every nonempty set of degree-`d` monomials in `n` variables, `d ≤ d_max`.
pub fn equigenerated_all(arity: usize, d_max: u64) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        let all = compositions(arity, d);
        assert!(all.len() < 20, "too many subsets to list");
        for mask in 1u64..(1 << all.len()) {
            let rows = all.iter().enumerate().filter(|(p, _)| mask >> p & 1 == 1).map(|(_, r)| r.clone());
            out.push(ideal_from_rows(arity, rows));
        }
    }
    out
}

/// Lexsegment ideals `(x^d, x^{d−1}y^{b_1}, …, x^{d−s}y^{b_s})` with
/// `d ≤ d_max` and `b_s ≤ b_max`.
pub fn lexsegments(d_max: u64, b_max: u64) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for s in 0..=d.min(b_max) {
            let mut comb: Vec<u64> = (0..s).collect();
            loop {
                let rows = std::iter::once(vec![d, 0])
                    .chain(comb.iter().enumerate().map(|(k, v)| vec![d - 1 - k as u64, v + 1]));
                out.push(ideal_from_rows(2, rows));
                if s == 0 || !next_combination(&mut comb, b_max) {
                    break;
                }
            }
        }
    }
    out
}

/// `(x_1^{p_1}, …, x_n^{p_n})` with each `p_v ∈ {1, …, p_max}`, optionally
/// enlarged by any subset of the squarefree monomials of degree ≥ 2.
pub fn small_artinian(arity: usize, p_max: u64) -> Vec<MonomialIdeal> {
    let squarefree: Vec<Vec<u64>> = (1u64..(1 << arity))
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| (0..arity).map(|v| mask >> v & 1).collect())
        .collect();
    let mut out = std::collections::BTreeSet::new();
    let mut pure = vec![1u64; arity];
    loop {
        for mask in 0u64..(1 << squarefree.len()) {
            let rows = (0..arity)
                .map(|v| {
                    let mut r = vec![0; arity];
                    r[v] = pure[v];
                    r
                })
                .chain(squarefree.iter().enumerate().filter(|(p, _)| mask >> p & 1 == 1).map(|(_, r)| r.clone()));
            out.insert(ideal_from_rows(arity, rows));
        }
        let Some(v) = (0..arity).find(|&v| pure[v] < p_max) else { break };
        pure[v] += 1;
        pure[..v].fill(1);
    }
    out.into_iter().collect()
}

/// Random families of ideals. Each mode documents exactly what it draws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum RandomMode {
    /// Uniform `m ∈ 1..=m_max`, then uniform `a`- and `b`-sets in
    /// `0..=bound`; with `height_two`, `m ≥ 2` and `a_m = b_1 = 0`.
    Staircase { m_max: usize, bound: u64, height_two: bool },
    /// Uniform degree `d ∈ 1..=d_max`, then a uniform subset of the degree-`d`
    /// monomials of size at most `m_max`; with `artinian` every pure power
    /// `x_v^d` is included.
    Equigenerated { arity: usize, d_max: u64, m_max: usize, artinian: bool },
    /// Pure powers `x_v^{p_v}`, `p_v ∈ 1..=max_exp`, plus up to `extra`
    /// monomials inside the box below them.
    Artinian { arity: usize, max_exp: u64, extra: usize },
    /// Staircases with `μ = o + 1`: one generator of degree `m − 1` sits on
    /// the diagonal and the steps away from it are `1..=step_max`.
    Contracted { m_max: usize, step_max: u64 },
    /// `(x^d, x^{d−1}y^{b_1}, …)` with `d ∈ 1..=d_max` and gaps `1..=gap_max`.
    Lexsegment { d_max: u64, gap_max: u64 },
    /// Staircases whose gap sequences make both `a` and `b` concave (or both
    /// convex).
    Shaped { m_max: usize, gap_max: u64, concave: bool },
}

pub fn random_ideal(mode: &RandomMode, seed: u64, index: u64) -> Result<MonomialIdeal, CorpusError> {
    random_ideal_from(mode, &mut Draw::new(seed, 0, index))
}

pub fn random_ideal_from(mode: &RandomMode, d: &mut Draw) -> Result<MonomialIdeal, CorpusError> {
    match *mode {
        RandomMode::Staircase { m_max, bound, height_two } => {
            let s = random_staircase(d, m_max, bound, height_two)?;
            Ok(s.to_ideal())
        }
        RandomMode::Equigenerated { arity, d_max, m_max, artinian } => {
            if arity < 1 || d_max < 1 || m_max < 1 {
                return Err(infeasible("equigenerated mode needs arity, degree and size ≥ 1"));
            }
            if artinian && m_max < arity {
                return Err(infeasible("an artinian ideal needs at least one generator per variable"));
            }
            let deg = d.range(1, d_max);
            let all = compositions(arity, deg);
            let rows: Vec<Vec<u64>> = if artinian {
                let (pure, mixed): (Vec<_>, Vec<_>) =
                    all.into_iter().partition(|r| r.iter().filter(|&&v| v > 0).count() == 1);
                let k = d.range(0, (m_max - arity).min(mixed.len()) as u64) as usize;
                let pick = d.subset(mixed.len() as u64, k);
                pure.into_iter().chain(pick.into_iter().map(|p| mixed[p as usize].clone())).collect()
            } else {
                let k = d.range(1, m_max.min(all.len()) as u64) as usize;
                d.subset(all.len() as u64, k).into_iter().map(|p| all[p as usize].clone()).collect()
            };
            Ok(ideal_from_rows(arity, rows))
        }
        RandomMode::Artinian { arity, max_exp, extra } => {
            if arity < 1 || max_exp < 1 {
                return Err(infeasible("artinian mode needs arity and exponent bound ≥ 1"));
            }
            let pure: Vec<u64> = (0..arity).map(|_| d.range(1, max_exp)).collect();
            let mut rows: Vec<Vec<u64>> = (0..arity)
                .map(|v| {
                    let mut r = vec![0; arity];
                    r[v] = pure[v];
                    r
                })
                .collect();
            let k = d.range(0, extra as u64);
            for _ in 0..k {
                let r: Vec<u64> = pure.iter().map(|&p| d.below(p)).collect();
                if r.iter().any(|&v| v > 0) {
                    rows.push(r);
                }
            }
            Ok(ideal_from_rows(arity, rows))
        }
        RandomMode::Contracted { m_max, step_max } => {
            if m_max < 2 || step_max < 1 {
                return Err(infeasible("contracted mode needs m_max ≥ 2 and step_max ≥ 1"));
            }
            let m = d.range(2, m_max as u64) as usize;
            let pivot = d.range(1, m as u64) as usize;
            let mut a = vec![0u64; m + 1];
            let mut b = vec![0u64; m + 1];
            for j in pivot..=m {
                a[j] = (m - j) as u64;
            }
            for j in (1..pivot).rev() {
                a[j] = a[j + 1] + d.range(1, step_max);
            }
            for j in 1..=pivot {
                b[j] = (j - 1) as u64;
            }
            for j in pivot + 1..=m {
                b[j] = b[j - 1] + d.range(1, step_max);
            }
            Ok(Staircase::from_u64s(&a[1..], &b[1..]).expect("valid").to_ideal())
        }
        RandomMode::Lexsegment { d_max, gap_max } => {
            if d_max < 1 || gap_max < 1 {
                return Err(infeasible("lexsegment mode needs d_max, gap_max ≥ 1"));
            }
            let deg = d.range(1, d_max);
            let s = d.range(0, deg);
            let mut rows = vec![vec![deg, 0]];
            let mut b = 0;
            for k in 1..=s {
                b += d.range(1, gap_max);
                rows.push(vec![deg - k, b]);
            }
            Ok(ideal_from_rows(2, rows))
        }
        RandomMode::Shaped { m_max, gap_max, concave } => {
            if m_max < 1 || gap_max < 1 {
                return Err(infeasible("shaped mode needs m_max, gap_max ≥ 1"));
            }
            let m = d.range(1, m_max as u64) as usize;
            let mut ga: Vec<u64> = (1..m).map(|_| d.range(1, gap_max)).collect();
            let mut gb: Vec<u64> = (1..m).map(|_| d.range(1, gap_max)).collect();
            // concave a: gaps shrink along the sequence; concave b: gaps grow
            ga.sort_unstable_by(|x, y| y.cmp(x));
            gb.sort_unstable();
            if !concave {
                ga.reverse();
                gb.reverse();
            }
            let mut a = vec![d.range(0, 2)];
            for g in ga.iter().rev() {
                a.push(a.last().unwrap() + g);
            }
            a.reverse();
            let mut b = vec![d.range(0, 2)];
            for g in &gb {
                b.push(b.last().unwrap() + g);
            }
            Ok(Staircase::from_u64s(&a, &b).expect("valid").to_ideal())
        }
    }
}

pub fn random_staircase(d: &mut Draw, m_max: usize, bound: u64, height_two: bool) -> Result<Staircase, CorpusError> {
    if height_two {
        if m_max < 2 || bound < m_max as u64 - 1 {
            return Err(infeasible("height-2 staircases need m_max ≥ 2 and bound ≥ m_max − 1"));
        }
        let m = d.range(2, m_max as u64) as usize;
        let mut a: Vec<u64> = d.subset(bound, m - 1).into_iter().map(|v| v + 1).rev().collect();
        a.push(0);
        let b: Vec<u64> = std::iter::once(0).chain(d.subset(bound, m - 1).into_iter().map(|v| v + 1)).collect();
        Ok(Staircase::from_u64s(&a, &b).expect("valid"))
    } else {
        let space = StaircaseSpace::new(m_max, bound)?;
        let m = d.range(1, space.m_max as u64) as usize;
        let a: Vec<u64> = d.subset(bound + 1, m).into_iter().rev().collect();
        let b = d.subset(bound + 1, m);
        Ok(Staircase::from_u64s(&a, &b).expect("valid"))
    }
}

/// Lists of height-2 ideals generated in one degree `d` whose sum is
/// `(x, y)^d`: every interior monomial goes to one random member and, by
/// coin flips, to others.
pub fn random_cold_family(d: &mut Draw, d_max: u64, r_max: usize) -> Vec<MonomialIdeal> {
    let deg = d.range(1, d_max.max(1));
    let r = d.range(1, r_max.max(1) as u64) as usize;
    let mut rows: Vec<Vec<Vec<u64>>> = vec![vec![vec![deg, 0], vec![0, deg]]; r];
    for i in 1..deg {
        let owner = d.below(r as u64) as usize;
        for (j, member) in rows.iter_mut().enumerate() {
            if j == owner || d.coin() {
                member.push(vec![deg - i, i]);
            }
        }
    }
    rows.into_iter().map(|r| ideal_from_rows(2, r)).collect()
}

/// `r` ideals with `G(I_j) = {x^{ia} y^{b_{i,j}}}_{i = s_j..=t_j}`.
pub fn random_back_family(d: &mut Draw, step_max: u64, len_max: u64, r_max: usize) -> Vec<MonomialIdeal> {
    let step = d.range(1, step_max.max(1));
    let r = d.range(1, r_max.max(1) as u64) as usize;
    (0..r)
        .map(|_| {
            let s = d.range(0, 2);
            let t = s + d.range(0, len_max);
            let mut b = d.range(0, 2);
            let mut rows = Vec::new();
            for i in (s..=t).rev() {
                rows.push(vec![i * step, b]);
                b += d.range(1, 4);
            }
            ideal_from_rows(2, rows)
        })
        .collect()
}

/// Every `G(I) = {x^i y^{b_i}}_{i = 0..=t}` with `t ≤ t_max` and `b_0 ≤ b_max`.
pub fn back_shapes(t_max: u64, b_max: u64) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for t in 0..=t_max.min(b_max) {
        let k = (t + 1) as usize;
        let mut comb: Vec<u64> = (0..k as u64).collect();
        loop {
            // comb lists b_t < … < b_0
            let rows = comb.iter().enumerate().map(|(p, &bv)| vec![t - p as u64, bv]);
            out.push(ideal_from_rows(2, rows));
            if !next_combination(&mut comb, b_max + 1) {
                break;
            }
        }
    }
    out
}

/// Exponent vectors as plain integers, for reports; `None` entries never
/// occur for corpus-generated ideals.
pub fn rows_u64(i: &MonomialIdeal) -> Vec<Vec<Option<u64>>> {
    i.generators().iter().map(|g| g.exponents().iter().map(Exponent::to_u64).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mugen_core::planar::{is_concave, is_convex};
    use mugen_core::bounds::is_contracted;

    #[test]
    fn combination_ranks() {
        let n = 6;
        let k = 3;
        let mut comb: Vec<u64> = (0..k as u64).collect();
        let mut rank = 0;
        loop {
            assert_eq!(unrank_combination(n, k, rank), comb);
            rank += 1;
            if !next_combination(&mut comb, n) {
                break;
            }
        }
        assert_eq!(rank, binomial(n, k as u64));
    }

    #[test]
    fn staircase_counts() {
        let s = StaircaseSpace::new(2, 1).unwrap();
        let two: Vec<Staircase> = (0..s.count()).map(|i| s.get(i)).filter(|st| st.len() == 2).collect();
        assert_eq!(two, [Staircase::from_u64s(&[1, 0], &[0, 1]).unwrap()]);
        let s = StaircaseSpace::new(1, 0).unwrap();
        assert_eq!(s.count(), 1);
        assert!(s.get(0).to_ideal().is_unit());
        // independent count: brute force over pairs of bitmasks
        let bound = 3u64;
        let mut brute = 0;
        for ma in 1u32..(1 << (bound + 1)) {
            for mb in 1u32..(1 << (bound + 1)) {
                if ma.count_ones() == mb.count_ones() && ma.count_ones() <= 3 {
                    brute += 1;
                }
            }
        }
        assert_eq!(StaircaseSpace::new(3, bound).unwrap().count(), brute);
        assert!(StaircaseSpace::new(5, 3).is_err());
        assert!(StaircaseSpace::new(0, 3).is_err());
    }

    #[test]
    fn incremental_walk_matches_unranking() {
        for space in [StaircaseSpace::new(4, 5).unwrap(), StaircaseSpace::height_two(4, 5).unwrap()] {
            let total = space.count();
            for (lo, hi) in [(0, total), (3, 77), (total - 5, total)] {
                let mut seen = 0;
                space.for_each(lo..hi, |idx, a, b| {
                    let s = space.get(idx);
                    let au: Vec<u64> = s.a().iter().map(|e| e.to_u64().unwrap()).collect();
                    let bu: Vec<u64> = s.b().iter().map(|e| e.to_u64().unwrap()).collect();
                    assert_eq!((a, b), (au.as_slice(), bu.as_slice()), "index {idx}");
                    seen += 1;
                });
                assert_eq!(seen, hi - lo);
            }
            let all: std::collections::BTreeSet<_> = (0..total).map(|i| space.get(i).to_ideal()).collect();
            assert_eq!(all.len() as u64, total);
        }
        let h = StaircaseSpace::height_two(3, 4).unwrap();
        assert!((0..h.count()).all(|i| h.get(i).has_height_two()));
    }

    #[test]
    fn enumerate_staircases_contract() {
        let v: Vec<_> = enumerate_staircases(3, 3).unwrap().collect();
        assert_eq!(v.len() as u64, binomial(4, 1).pow(2) + binomial(4, 2).pow(2) + binomial(4, 3).pow(2));
        assert!(enumerate_staircases(4, 2).is_err());
    }

    #[test]
    fn fixed_families() {
        assert_eq!(equigenerated_plane(8, true).len(), 255);
        assert_eq!(equigenerated_plane(3, false).len(), 3 + 7 + 15);
        assert!(equigenerated_plane(5, true).iter().all(|i| i.is_artinian() && i.is_equigenerated()));
        assert_eq!(equigenerated_all(3, 1).len(), 7);
        let lex = lexsegments(4, 5);
        assert!(lex.iter().all(|i| mugen_core::planar::is_lexsegment(i).unwrap()));
        let set: std::collections::BTreeSet<_> = lex.iter().collect();
        assert_eq!(set.len(), lex.len());
        let arts = small_artinian(3, 2);
        assert!(arts.iter().all(|i| i.is_artinian()));
        assert!(back_shapes(3, 5).iter().all(|i| i.generators().iter().all(|g| g.exponent(0).to_u64().unwrap() <= 3)));
    }

    #[test]
    fn random_modes_keep_their_contracts() {
        let seed = 11;
        for index in 0..300 {
            let i = random_ideal(&RandomMode::Equigenerated { arity: 2, d_max: 4, m_max: 5, artinian: true }, seed, index).unwrap();
            let d = i.equigenerated_degree().unwrap().to_u64().unwrap();
            assert!(i.contains(&Monomial::from_u64s(&[d, 0])).unwrap());
            assert!(i.generators().contains(&Monomial::from_u64s(&[0, d])));

            let i = random_ideal(&RandomMode::Staircase { m_max: 5, bound: 10, height_two: false }, seed, index).unwrap();
            let s = Staircase::from_ideal(&i).unwrap();
            assert_eq!(s.to_ideal(), i);

            let i = random_ideal(&RandomMode::Contracted { m_max: 6, step_max: 3 }, seed, index).unwrap();
            assert!(is_contracted(&i).unwrap() && i.is_artinian());

            let i = random_ideal(&RandomMode::Lexsegment { d_max: 6, gap_max: 3 }, seed, index).unwrap();
            assert!(mugen_core::planar::is_lexsegment(&i).unwrap());

            let i = random_ideal(&RandomMode::Artinian { arity: 3, max_exp: 4, extra: 4 }, seed, index).unwrap();
            assert!(i.is_artinian() && !i.is_unit());

            for concave in [true, false] {
                let i = random_ideal(&RandomMode::Shaped { m_max: 7, gap_max: 4, concave }, seed, index).unwrap();
                let s = Staircase::from_ideal(&i).unwrap();
                if concave {
                    assert!(is_concave(s.a()) && is_concave(s.b()));
                } else {
                    assert!(is_convex(s.a()) && is_convex(s.b()));
                }
            }

            let fam = random_cold_family(&mut Draw::new(seed, 0, index), 6, 3);
            let sum = fam.iter().skip(1).fold(fam[0].clone(), |acc, i| acc.sum(i).unwrap());
            let d = fam[0].equigenerated_degree().unwrap().to_u64().unwrap();
            assert_eq!(sum, MonomialIdeal::maximal_power(2, d));
        }
    }

    #[test]
    fn same_seed_same_ideal() {
        let mode = RandomMode::Staircase { m_max: 7, bound: 12, height_two: false };
        for index in 0..50 {
            assert_eq!(random_ideal(&mode, 5, index).unwrap(), random_ideal(&mode, 5, index).unwrap());
        }
        let differs = (0..50).any(|i| random_ideal(&mode, 5, i).unwrap() != random_ideal(&mode, 6, i).unwrap());
        assert!(differs);
    }
}
