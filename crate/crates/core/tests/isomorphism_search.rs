mod common;

use common::{brute_force_isomorphisms, union_closed_up_to};
use ucfam_core::checks::all_isomorphisms;
use ucfam_core::{find_isomorphisms, SetFamily};

fn small_families() -> Vec<SetFamily> {
    let mut out: Vec<SetFamily> = union_closed_up_to(3)
        .into_iter()
        .filter(|f| f.len() <= 6)
        .collect();
    out.extend(
        union_closed_up_to(4)
            .into_iter()
            .filter(|f| f.ground_size() == 4 && f.len() <= 3),
    );
    out
}

#[test]
fn pruned_search_matches_brute_force() {
    let fams = small_families();
    let mut compared = 0;
    for a in &fams {
        for b in fams.iter().filter(|b| b.len() == a.len()) {
            let pruned = find_isomorphisms(a, b, None);
            let oracle = brute_force_isomorphisms(a, b);
            assert_eq!(pruned, oracle, "{a} -> {b}");
            compared += 1;
        }
    }
    assert!(compared > 1000);
}

#[test]
fn limit_returns_a_prefix() {
    let boolean = SetFamily::from_lists(
        3,
        &[
            &[][..],
            &[1],
            &[2],
            &[3],
            &[1, 2],
            &[1, 3],
            &[2, 3],
            &[1, 2, 3],
        ],
    )
    .unwrap();
    let all = find_isomorphisms(&boolean, &boolean, None);
    assert_eq!(all.len(), 6);
    assert_eq!(find_isomorphisms(&boolean, &boolean, Some(4)).len(), 4);
}

#[test]
fn non_union_closed_inputs_have_no_isomorphisms() {
    let f = SetFamily::from_lists(2, &[&[1][..], &[2]]).unwrap();
    assert!(find_isomorphisms(&f, &f, None).is_empty());
}

#[test]
fn isomorphisms_compose_and_invert() {
    let fams = union_closed_up_to(3);
    let isos = all_isomorphisms(&fams);
    for (_, _, hs) in &isos {
        for h in hs {
            let inv = h.inverse().expect("bijective");
            assert!(inv.is_isomorphism().unwrap());
            for g in &isos
                .iter()
                .find(|(a, b, _)| fams[*a] == *h.target() && fams[*b] == *h.target())
                .unwrap()
                .2
            {
                assert!(h.then(g).unwrap().is_isomorphism().unwrap());
            }
        }
    }
}
