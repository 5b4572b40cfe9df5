mod common;

use itertools::Itertools;
use proptest::prelude::*;
use ucfam_core::enumerate::{family_mask, union_closed_masks};
use ucfam_core::{
    canonical_form, enumerate_union_closed, hyperisomorphic, is_hyperisomorphism, GroundMap,
    MemberSet, Method, SetFamily,
};

#[test]
fn direct_and_generator_methods_agree() {
    for n in 0..=4 {
        for require_empty in [false, true] {
            let direct: Vec<SetFamily> = enumerate_union_closed(n, require_empty, Method::Direct)
                .unwrap()
                .collect();
            let generated: Vec<SetFamily> =
                enumerate_union_closed(n, require_empty, Method::Generator)
                    .unwrap()
                    .collect();
            assert_eq!(direct, generated, "n={n}");
            assert!(direct.iter().all(|f| f.is_union_closed()));
            assert!(direct
                .iter()
                .all(|f| !require_empty || f.contains(MemberSet::EMPTY)));
            let masks: Vec<u64> = direct.iter().map(|f| family_mask(f).unwrap()).collect();
            assert!(
                masks.windows(2).all(|w| w[0] < w[1]),
                "ascending and distinct"
            );
        }
    }
}

#[test]
fn generator_reaches_five_elements() {
    let with_empty = union_closed_masks(5, true, Method::Generator)
        .unwrap()
        .count();
    let all = union_closed_masks(5, false, Method::Generator)
        .unwrap()
        .count();
    // Adding ∅ maps the families without it one-to-one onto those with it.
    assert_eq!(all, 2 * with_empty);
}

fn relabel(f: &SetFamily, perm: &[u32]) -> SetFamily {
    SetFamily::new(
        f.ground_size(),
        f.members().iter().map(|m| {
            m.iter()
                .fold(MemberSet::EMPTY, |acc, e| acc.with(perm[e as usize - 1]))
        }),
    )
    .unwrap()
}

/// Some bijection of the unions carries `a`'s members onto `b`'s and induces
/// an isomorphism.
fn witness_exists(a: &SetFamily, b: &SetFamily) -> bool {
    let (ua, ub): (Vec<u32>, Vec<u32>) = (a.union().iter().collect(), b.union().iter().collect());
    if ua.len() != ub.len() {
        return false;
    }
    ub.iter().copied().permutations(ub.len()).any(|p| {
        let g = GroundMap::new(ua.iter().copied().zip(p)).unwrap();
        is_hyperisomorphism(&g, a, b)
    })
}

#[test]
fn canonical_equality_matches_witness_search() {
    let fams: Vec<SetFamily> = enumerate_union_closed(3, false, Method::Direct)
        .unwrap()
        .collect();
    for a in &fams {
        for b in &fams {
            assert_eq!(
                hyperisomorphic(a, b).unwrap(),
                witness_exists(a, b),
                "{a} vs {b}"
            );
        }
    }
}

fn arb_family() -> impl Strategy<Value = SetFamily> {
    prop::collection::btree_set(0u64..64, 0..16)
        .prop_map(|bits| SetFamily::new(6, bits.into_iter().map(MemberSet::from_bits)).unwrap())
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabeling(
        f in arb_family(),
        perm in Just((1u32..=6).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let g = relabel(&f, &perm);
        prop_assert_eq!(canonical_form(&f).unwrap(), canonical_form(&g).unwrap());
        prop_assert!(hyperisomorphic(&f, &g).unwrap());
    }

    #[test]
    fn canonical_representative_is_in_the_class(f in arb_family()) {
        let c = canonical_form(&f).unwrap();
        let rep = c.to_family();
        prop_assert_eq!(rep.len(), f.len());
        prop_assert_eq!(canonical_form(&rep).unwrap(), c);
    }
}
