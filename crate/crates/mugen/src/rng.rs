//! Seeded randomness with a fixed, documented derivation.
//!
//! Every random draw comes from ChaCha8 (`rand_chacha` 0.3) keyed by the
//! 32 bytes `seed.to_le_bytes() ‖ tag.to_le_bytes() ‖ 0…0`, with the stream
//! number set to the instance index. The tag separates independent corpora
//! of one run. Integers in a range are drawn by rejection from `next_u64`,
//! so the mapping from `(seed, tag, index)` to values never depends on a
//! particular `rand` release.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct Draw {
    inner: ChaCha8Rng,
}

impl Draw {
    pub fn new(seed: u64, tag: u64, index: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&tag.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(index);
        Draw { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        // reject the final partial block so every residue is equally likely
        let zone = u64::MAX - (u64::MAX % n + 1) % n;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi, "empty range");
        if hi - lo == u64::MAX {
            return self.next_u64();
        }
        lo + self.below(hi - lo + 1)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// `k` distinct values of `0..n` in increasing order (partial Fisher–Yates).
    pub fn subset(&mut self, n: u64, k: usize) -> Vec<u64> {
        assert!(k as u64 <= n, "subset larger than its ground set");
        let mut picked: Vec<u64> = Vec::with_capacity(k);
        let mut swaps: std::collections::HashMap<u64, u64> = std::collections::HashMap::new();
        for i in 0..k as u64 {
            let j = i + self.below(n - i);
            let vj = *swaps.get(&j).unwrap_or(&j);
            let vi = *swaps.get(&i).unwrap_or(&i);
            swaps.insert(j, vi);
            picked.push(vj);
        }
        picked.sort_unstable();
        picked
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_per_triple() {
        let a: Vec<u64> = (0..4).map(|_| Draw::new(7, 1, 3).next_u64()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut x = Draw::new(7, 1, 3);
        let mut y = Draw::new(7, 1, 4);
        let mut z = Draw::new(7, 2, 3);
        let v = x.next_u64();
        assert_ne!(v, y.next_u64());
        assert_ne!(v, z.next_u64());
    }

    #[test]
    fn known_answer() {
        // pins the derivation: changing it changes every recorded corpus
        let mut d = Draw::new(0, 0, 0);
        let first = d.next_u64();
        let mut r = ChaCha8Rng::from_seed([0u8; 32]);
        assert_eq!(first, r.next_u64());
    }

    #[test]
    fn bounded_draws() {
        let mut d = Draw::new(1, 0, 0);
        for n in [1u64, 2, 3, 10, 1 << 40] {
            for _ in 0..100 {
                assert!(d.below(n) < n);
            }
        }
        for _ in 0..100 {
            let v = d.range(5, 9);
            assert!((5..=9).contains(&v));
        }
        let mut seen = [0u32; 6];
        for _ in 0..6000 {
            seen[d.below(6) as usize] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800 && c < 1200));
    }

    #[test]
    fn subsets_are_distinct_and_sorted() {
        let mut d = Draw::new(3, 0, 0);
        for _ in 0..200 {
            let s = d.subset(10, 4);
            assert_eq!(s.len(), 4);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&v| v < 10));
        }
        assert_eq!(d.subset(5, 5), [0, 1, 2, 3, 4]);
        assert!(d.subset(5, 0).is_empty());
    }
}
