//! Cross-module checks at desk scale: the shadow-neighbor pair of the
//! length-112 code and feasibility of the published count lists.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use sdcodes::catalog;
use sdcodes::codes::ParityClass;
use sdcodes::enumerators::{doubly_even_family, substitute};
use sdcodes::shadow::{doubly_even_neighbors, neighbor_via_vector, shadow_decompose};
use sdcodes::weights::find_low_weight;

#[test]
fn sibling_neighbor_has_weight_16_witness() {
    // the two doubly even neighbors of the length-112 code have minimum
    // weights 20 and 16; the extremal one is the support-constructed
    // code, so its sibling must expose a weight-16 word
    let c112 = catalog::c112().code();
    let d112 = neighbor_via_vector(&c112, &catalog::d112_vector())
        .unwrap()
        .code;
    let (n1, n3) = doubly_even_neighbors(&c112).unwrap();
    let sibling = if d112.codewords_eq(&n1) { n3 } else { n1 };
    assert!(!sibling.codewords_eq(&d112));
    assert_eq!(sibling.parity_class(), ParityClass::DoublyEven);

    let w16 = find_low_weight(&sibling, 16, 500, 11).expect("weight-16 witness");
    assert_eq!(w16.weight() % 4, 0);
    assert!(w16.weight() <= 16);
    assert!(sibling.contains(&w16).unwrap());
    // a weight-16 word rules out extremality for the sibling
    assert!(w16.weight() < 20);
}

#[test]
fn shadow_representatives_of_c112_have_expected_parities() {
    let c112 = catalog::c112().code();
    let decomp = shadow_decompose(&c112).unwrap();
    assert_eq!(decomp.even_subcode.k(), 55);
    // shadow vectors of a length ≡ 0 (mod 8) code weigh n/2 ≡ 0 (mod 4)
    assert_eq!(decomp.t1.weight() % 4, 0);
    assert_eq!(decomp.t3.weight() % 4, 0);
    assert_eq!(decomp.t2.weight() % 4, 2);
}

#[test]
fn published_count_lists_substitute_into_the_families() {
    // every published weight-20 count must be a feasible parameter value:
    // the substituted enumerator has nonnegative integer coefficients
    let cases = [
        (120usize, catalog::weight20_counts_120()),
        (128, catalog::weight20_counts_128()),
    ];
    for (n, counts) in cases {
        let family = doubly_even_family(n, 20).unwrap();
        // endpoints plus a thin deterministic sample
        let picks: Vec<_> = counts
            .iter()
            .step_by(counts.len() / 7)
            .chain(std::iter::once(counts.last().unwrap()))
            .collect();
        for a in picks {
            let values: BTreeMap<String, BigRational> = [(
                "a".to_string(),
                BigRational::from_integer(BigInt::from(a.clone())),
            )]
            .into_iter()
            .collect();
            let dist =
                substitute(&family.code, &values).unwrap_or_else(|e| panic!("n={n}, a={a}: {e}"));
            assert_eq!(dist.count(20), a.clone(), "n={n}");
            assert!(dist.is_palindromic());
        }
    }
}
