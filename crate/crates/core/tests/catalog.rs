use skb_core::brace::{are_isomorphic_braces, right_nilpotency_class};
use skb_core::enumeration::{
    brute_force_oracle, braces_of_order_with_cap, catalog_query, skew_braces_on_with_cap, EnumerationError,
};
use skb_core::group::{cyclic, elementary_abelian, symmetric};
use skb_core::validate_brace;

#[test]
fn class_counts_up_to_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| braces_of_order_with_cap(n, 8).unwrap().entries.len()).collect();
    assert_eq!(counts, [1, 1, 1, 4, 1, 6, 1, 47]);
}

#[test]
fn order_eight_left_braces() {
    let cat = braces_of_order_with_cap(8, 8).unwrap();
    assert_eq!(cat.entries.iter().filter(|a| a.is_left_brace()).count(), 27);
}

#[test]
fn order_six_splits_by_additive_group() {
    assert_eq!(skew_braces_on_with_cap(&cyclic(6), 8).unwrap().len(), 2);
    assert_eq!(skew_braces_on_with_cap(&symmetric(3), 8).unwrap().len(), 4);
}

#[test]
fn entries_are_valid_and_pairwise_non_isomorphic() {
    let cat = braces_of_order_with_cap(8, 8).unwrap();
    for (i, a) in cat.entries.iter().enumerate() {
        validate_brace(a.additive().clone(), a.multiplicative().clone()).unwrap();
        for b in &cat.entries[i + 1..] {
            assert!(are_isomorphic_braces(a, b).is_none());
        }
    }
}

#[test]
fn prime_orders_have_only_the_trivial_brace() {
    for p in [2, 3, 5, 7] {
        let cat = braces_of_order_with_cap(p, 8).unwrap();
        assert_eq!(catalog_query(&cat, "trivial=true").unwrap().len(), 1);
        assert_eq!(cat.entries.len(), 1);
    }
}

#[test]
fn oracle_agrees_at_order_four() {
    let cat = braces_of_order_with_cap(4, 8).unwrap();
    let oracle = brute_force_oracle(4).unwrap();
    assert_eq!(oracle.entries.len(), cat.entries.len());
    for b in &oracle.entries {
        assert_eq!(cat.entries.iter().filter(|a| are_isomorphic_braces(a, b).is_some()).count(), 1);
    }
    assert!(matches!(brute_force_oracle(7), Err(EnumerationError::OrderCapExceeded { .. })));
}

#[test]
fn same_group_pair_different_braces() {
    let cat = braces_of_order_with_cap(8, 8).unwrap();
    let pair = catalog_query(&cat, "add=C2^3,mult=D8").unwrap();
    let classes: Vec<Option<usize>> = pair.iter().map(|a| right_nilpotency_class(a)).collect();
    assert!(classes.contains(&None));
    assert!(classes.iter().any(Option::is_some));
}

#[test]
fn larger_orders_need_a_raised_cap() {
    assert!(matches!(
        braces_of_order_with_cap(9, 8),
        Err(EnumerationError::OrderCapExceeded { order: 9, cap: 8 })
    ));
    assert_eq!(braces_of_order_with_cap(9, 9).unwrap().entries.len(), 4);
    assert!(skew_braces_on_with_cap(&elementary_abelian(2, 3), 8).unwrap().len() > 1);
}
