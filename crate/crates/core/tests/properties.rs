//! Structural facts about union-closed families, checked on every family over
//! at most four ground elements (three where pairs of isomorphic families are
//! quantified).

mod common;

use common::{all_maps, element_induced_maps, union_closed_up_to};
use ucfam_core::checks::{self, all_isomorphisms};
use ucfam_core::SetFamily;

fn assert_all<T>(items: &[T], check: impl Fn(&T) -> checks::Check) {
    for item in items {
        if let Err(e) = check(item) {
            panic!("counterexample: {e}");
        }
    }
}

fn homomorphisms() -> Vec<ucfam_core::FamilyMap> {
    let mut maps: Vec<_> = union_closed_up_to(4)
        .iter()
        .flat_map(element_induced_maps)
        .collect();
    // Arbitrary member maps between small families, most of them not
    // induced by any element map.
    let small = union_closed_up_to(2);
    for a in &small {
        for b in &small {
            maps.extend(
                all_maps(a, b)
                    .into_iter()
                    .filter(|h| h.is_homomorphism().unwrap()),
            );
        }
    }
    maps
}

#[test]
fn homomorphisms_are_monotone_and_images_union_closed() {
    let homs = homomorphisms();
    assert!(homs.len() > 100_000);
    for h in &homs {
        assert!(h.is_homomorphism().unwrap());
        checks::homomorphism_is_monotone(h).unwrap();
        checks::image_is_union_closed(h).unwrap();
        assert!(h.image_family().unwrap().is_union_closed());
        checks::injective_homomorphism_is_isomorphism_onto_image(h).unwrap();
    }
}

#[test]
fn isomorphisms_are_strictly_monotone_and_keep_minimality() {
    let fams = union_closed_up_to(3);
    let isos = all_isomorphisms(&fams);
    assert!(!isos.is_empty());
    for (_, _, hs) in &isos {
        assert_all(hs, checks::isomorphism_is_strictly_monotone);
        assert_all(hs, checks::minimal_maps_to_minimal);
    }
}

#[test]
fn removing_minimal_members_keeps_union_closed() {
    assert_all(
        &union_closed_up_to(4),
        checks::minimal_removal_keeps_union_closed,
    );
}

#[test]
fn unique_minimal_member_of_pure_family_is_empty() {
    let fams = union_closed_up_to(4);
    assert_all(&fams, checks::unique_minimal_is_empty);
    // The hypothesis is met often enough to matter.
    let hits = fams
        .iter()
        .filter(|f| ucfam_core::is_pure(f) && f.minimal_members().len() == 1)
        .count();
    assert!(hits > 100);
}

#[test]
fn pure_families_have_distinct_stars() {
    assert_all(&union_closed_up_to(4), checks::stars_are_distinct);
}

#[test]
fn star_cores_cover_at_least_their_elements() {
    assert_all(
        &union_closed_up_to(4),
        checks::star_cores_cover_their_elements,
    );
}

#[test]
fn star_core_union_is_exact() {
    assert_all(&union_closed_up_to(4), checks::star_core_is_closed);
}

#[test]
fn impure_families_may_share_stars() {
    // {∅, {1,2}}: 1 and 2 always occur together.
    let f = SetFamily::from_lists(2, &[&[][..], &[1, 2]]).unwrap();
    assert!(checks::stars_are_distinct(&f).is_ok());
    assert_eq!(f.member_star(1).unwrap(), f.member_star(2).unwrap());
}
