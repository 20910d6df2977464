use mugen::parse::{parse_ideal, parse_ideal_with};
use mugen_core::MonomialIdeal;
use proptest::prelude::*;

fn rows() -> impl Strategy<Value = Vec<Vec<u64>>> {
    (1usize..=6).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(0u64..12, n), 1..8))
}

fn ideal(rows: &[Vec<u64>]) -> MonomialIdeal {
    let r: Vec<&[u64]> = rows.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_rows(&r).unwrap()
}

proptest! {
    #[test]
    fn display_parses_back(rows in rows()) {
        let i = ideal(&rows);
        let back = parse_ideal_with(&i.to_string(), Some(i.arity())).unwrap();
        prop_assert_eq!(back.ideal, i);
    }

    #[test]
    fn redundant_inputs_are_reported(rows in rows()) {
        let i = ideal(&rows);
        let text = rows
            .iter()
            .map(|r| mugen_core::Monomial::from_u64s(r).to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let p = parse_ideal_with(&text, Some(i.arity())).unwrap();
        prop_assert_eq!(p.ideal.mu() + p.redundant.len(), rows.len());
    }

    #[test]
    fn whitespace_is_ignored(rows in rows()) {
        let i = ideal(&rows);
        let spaced: String = i.to_string().chars().flat_map(|c| [c, ' ']).collect();
        prop_assert_eq!(parse_ideal_with(&spaced, Some(i.arity())).unwrap().ideal, i);
    }
}

#[test]
fn junk_is_rejected() {
    for bad in ["", "x^", "x^-1", "x0", "x**y", "x,,y", "q"] {
        assert!(parse_ideal(bad).is_err(), "{bad:?}");
    }
}
