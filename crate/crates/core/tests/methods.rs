use alexsum_core::braid::{parse_braid_word, BraidWord};
use alexsum_core::hecke::alexander_via_trace;
use alexsum_core::laurent::{to_conway, LaurentPoly};
use alexsum_core::state_sum::{
    evaluate_dp, list_states, render_state_table, state_sum, EnumBounds,
};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(k, neg)| if neg { -k } else { k });
        prop::collection::vec(letter, 0..7).prop_map(move |ls| {
            BraidWord::from_signed(&ls)
                .unwrap()
                .with_strands(n)
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_routes_agree(w in word()) {
        let dp = evaluate_dp(&w).unwrap();
        prop_assert_eq!(&state_sum(&w, &EnumBounds::default()).unwrap(), &dp);
        prop_assert_eq!(&alexander_via_trace(&w).unwrap(), &dp);
    }

    #[test]
    fn mirror_is_bar(w in word()) {
        prop_assert_eq!(evaluate_dp(&w.mirror()).unwrap(), evaluate_dp(&w).unwrap().bar());
    }

    #[test]
    fn inverse_pair_cancels(w in word(), k in 1usize..4) {
        let k = k.min(w.strands() - 1) as i64;
        let mut ls: Vec<i64> = w.letters().iter().map(|l| l.to_signed()).collect();
        ls.splice(0..0, [k, -k]);
        let longer = BraidWord::from_signed(&ls).unwrap().with_strands(w.strands()).unwrap();
        prop_assert_eq!(evaluate_dp(&longer).unwrap(), evaluate_dp(&w).unwrap());
    }
}

#[test]
fn skein_relation_on_two_strands() {
    // A(s1^(k+1)) - A(s1^(k-1)) = z * A(s1^k)
    let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let a = |k: usize| evaluate_dp(&parse_braid_word(&"1 ".repeat(k), Some(2)).unwrap()).unwrap();
    for k in 1..8 {
        assert_eq!(&a(k + 1) - &a(k - 1), &z * &a(k), "k = {k}");
    }
}

#[test]
fn state_table_rendering() {
    let w = parse_braid_word("-2 1 -2 1", Some(3)).unwrap();
    let rows = list_states(&w, &EnumBounds::default()).unwrap();
    let table = render_state_table(&rows);
    assert_eq!(rows.len(), 6);
    assert!(table.contains("[3]/[2]"));
    assert_eq!(table.lines().count(), 7);
}

#[test]
fn enumeration_bounds_are_enforced() {
    let long = parse_braid_word(&"1 -2 ".repeat(10), Some(3)).unwrap();
    assert!(state_sum(&long, &EnumBounds::default()).is_err());
    assert!(to_conway(&evaluate_dp(&long).unwrap()).is_ok());
}
