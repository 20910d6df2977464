use crate::error::{CoreError, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::Staircase;

/// Whether `I = (x^d, x^{d−1}y^{b_1}, …, x^{d−s}y^{b_s})` with
/// `0 < b_1 < … < b_s`, the generator shape of a lexsegment ideal in
/// `K[x, y]`.
pub fn is_lexsegment(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.arity() != 2 {
        return Err(CoreError::ArityMismatch { expected: 2, found: ideal.arity() });
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    let stair = Staircase::from_ideal(ideal)?;
    if !stair.b()[0].is_zero() {
        return Ok(false);
    }
    Ok(stair.a().windows(2).all(|w| &w[1] + &Exponent::ONE == w[0]))
}

/// `I_{d,a}` with `G(I_{d,a}) = {x^{d−i} y^i : i = 0..=a}`.
pub fn lexsegment_generate(d: u64, a: u64) -> Result<MonomialIdeal> {
    if d < 1 {
        return Err(CoreError::OutOfRange { what: "lexsegment degree", value: d });
    }
    if a < 1 || a > d {
        return Err(CoreError::OutOfRange { what: "lexsegment length", value: a });
    }
    MonomialIdeal::from_generators(2, (0..=a).map(|i| Monomial::from_u64s(&[d - i, i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    /// Closure under lex-larger monomials of the same degree, checked
    /// directly on every generator.
    fn lex_closed(i: &MonomialIdeal) -> bool {
        i.generators().iter().all(|u| {
            let x = u.exponent(0).to_u64().unwrap();
            let y = u.exponent(1).to_u64().unwrap();
            (1..=y).all(|j| i.contains(&Monomial::from_u64s(&[x + j, y - j])).unwrap())
        })
    }

    #[test]
    fn shape_examples() {
        assert!(is_lexsegment(&ideal(&[&[3, 0], &[2, 1], &[1, 3]])).unwrap());
        assert!(!is_lexsegment(&ideal(&[&[6, 0], &[5, 2], &[4, 3], &[2, 4], &[0, 6]])).unwrap());
        assert!(!is_lexsegment(&ideal(&[&[2, 0], &[0, 2]])).unwrap());
        assert!(is_lexsegment(&MonomialIdeal::maximal_power(2, 4)).unwrap());
        assert!(!is_lexsegment(&ideal(&[&[3, 1], &[2, 2]])).unwrap());
    }

    #[test]
    fn generated_segments() {
        assert_eq!(lexsegment_generate(3, 1).unwrap(), ideal(&[&[3, 0], &[2, 1]]));
        assert_eq!(lexsegment_generate(4, 4).unwrap(), MonomialIdeal::maximal_power(2, 4));
        for d in 1..6 {
            for a in 1..=d {
                assert!(is_lexsegment(&lexsegment_generate(d, a).unwrap()).unwrap());
            }
        }
        assert!(lexsegment_generate(2, 3).is_err());
        assert!(lexsegment_generate(0, 0).is_err());
    }

    #[test]
    fn shape_agrees_with_lex_closure() {
        let bound = 6u64;
        // all staircases with m ≤ 4 and entries ≤ bound
        let mut count = 0;
        for mask_a in 1u32..(1 << (bound + 1)) {
            let a: alloc::vec::Vec<u64> = (0..=bound).rev().filter(|v| mask_a & (1 << v) != 0).collect();
            if a.len() > 4 {
                continue;
            }
            for mask_b in 1u32..(1 << (bound + 1)) {
                let b: alloc::vec::Vec<u64> = (0..=bound).filter(|v| mask_b & (1 << v) != 0).collect();
                if b.len() != a.len() {
                    continue;
                }
                let i = Staircase::from_u64s(&a, &b).unwrap().to_ideal();
                assert_eq!(is_lexsegment(&i).unwrap(), lex_closed(&i), "{i}");
                count += 1;
            }
        }
        assert!(count > 1000);
    }
}
