//! Structural facts about union-closed families and their maps, phrased as
//! checks that either pass or return a counterexample.
//!
//! Each check states its own hypotheses; inputs that do not meet them pass
//! vacuously. The sweep helpers at the bottom collect isomorphisms among many
//! families at once.

use std::collections::HashMap;
use std::fmt;

use crate::family::{MemberSet, SetFamily};
use crate::hyperiso::{star_core, union_of_star_cores};
use crate::morphism::{find_isomorphisms, FamilyMap};
use crate::purify::{is_pure, redundant_elements};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample(pub String);

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Counterexample {}

pub type Check = Result<(), Counterexample>;

fn fail<T>(msg: impl Into<String>) -> Result<T, Counterexample> {
    Err(Counterexample(msg.into()))
}

fn is_hom(h: &FamilyMap) -> bool {
    h.is_homomorphism().unwrap_or(false)
}

fn is_iso(h: &FamilyMap) -> bool {
    h.is_isomorphism().unwrap_or(false)
}

/// A homomorphism maps `A ⊆ B` to `h(A) ⊆ h(B)`.
pub fn homomorphism_is_monotone(h: &FamilyMap) -> Check {
    if !is_hom(h) {
        return Ok(());
    }
    for (a, ha) in h.pairs() {
        for (b, hb) in h.pairs() {
            if a.is_subset(b) && !ha.is_subset(hb) {
                return fail(format!("{a} ⊆ {b} but {ha} ⊄ {hb}"));
            }
        }
    }
    Ok(())
}

/// An isomorphism maps `A ⊂ B` to `h(A) ⊂ h(B)`.
pub fn isomorphism_is_strictly_monotone(h: &FamilyMap) -> Check {
    if !is_iso(h) {
        return Ok(());
    }
    for (a, ha) in h.pairs() {
        for (b, hb) in h.pairs() {
            if a.is_proper_subset(b) && !ha.is_proper_subset(hb) {
                return fail(format!("{a} ⊂ {b} but not {ha} ⊂ {hb}"));
            }
        }
    }
    Ok(())
}

/// The image of a homomorphism is union-closed.
pub fn image_is_union_closed(h: &FamilyMap) -> Check {
    if !is_hom(h) {
        return Ok(());
    }
    let image = SetFamily::collect_dedup(h.target().ground_size(), h.pairs().map(|(_, b)| b));
    if image.is_union_closed() {
        Ok(())
    } else {
        fail(format!("image {image} is not union-closed"))
    }
}

/// An injective homomorphism is an isomorphism onto its image.
pub fn injective_homomorphism_is_isomorphism_onto_image(h: &FamilyMap) -> Check {
    if !is_hom(h) {
        return Ok(());
    }
    let mut seen: Vec<usize> = h.assignment().to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != h.assignment().len() {
        return Ok(());
    }
    let image = SetFamily::collect_dedup(h.target().ground_size(), h.pairs().map(|(_, b)| b));
    let onto = FamilyMap::from_fn(h.source().clone(), image, |a| h.apply(a).unwrap())
        .map_err(|e| Counterexample(e.to_string()))?;
    if is_iso(&onto) {
        Ok(())
    } else {
        fail("injective homomorphism is not an isomorphism onto its image")
    }
}

/// Removing a minimal member from a union-closed family keeps it union-closed.
pub fn minimal_removal_keeps_union_closed(family: &SetFamily) -> Check {
    if !family.is_union_closed() {
        return Ok(());
    }
    for x in family.minimal_members() {
        let rest = family.remove_member(x).expect("minimal member is a member");
        if !rest.is_union_closed() {
            return fail(format!("{family} without {x} is not union-closed"));
        }
    }
    Ok(())
}

/// An isomorphism maps minimal members to minimal members.
pub fn minimal_maps_to_minimal(h: &FamilyMap) -> Check {
    if !is_iso(h) {
        return Ok(());
    }
    let target_min = h.target().minimal_members();
    for x in h.source().minimal_members() {
        let hx = h.apply(x).unwrap();
        if !target_min.contains(&hx) {
            return fail(format!("minimal {x} maps to non-minimal {hx}"));
        }
    }
    Ok(())
}

/// A pure union-closed family with a single minimal member has `∅` as that member.
pub fn unique_minimal_is_empty(family: &SetFamily) -> Check {
    if !family.is_union_closed() || !is_pure(family) {
        return Ok(());
    }
    match family.minimal_members().as_slice() {
        [x] if !x.is_empty() => fail(format!("{family}: unique minimal member {x} is nonempty")),
        _ => Ok(()),
    }
}

/// In a pure union-closed family, distinct elements have distinct stars.
pub fn stars_are_distinct(family: &SetFamily) -> Check {
    if !family.is_union_closed() || !is_pure(family) {
        return Ok(());
    }
    let elements: Vec<u32> = family.union().iter().collect();
    for (k, &i) in elements.iter().enumerate() {
        for &j in &elements[k + 1..] {
            if family.star_indices(i) == family.star_indices(j) {
                return fail(format!("{family}: elements {i} and {j} share a star"));
            }
        }
    }
    Ok(())
}

/// For any distinct `a_1..a_k` in the union, `|⋃ ⋂ K^{a_i}| ≥ k`. Checked for
/// every subset of the union.
pub fn star_cores_cover_their_elements(family: &SetFamily) -> Check {
    if !family.is_union_closed() {
        return Ok(());
    }
    let union: Vec<u32> = family.union().iter().collect();
    for pick in 0u64..(1u64 << union.len()) {
        let subset = MemberSet::from_elements(
            union
                .iter()
                .enumerate()
                .filter(|(k, _)| pick >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap();
        let covered = union_of_star_cores(family, subset);
        if covered.len() < subset.len() {
            return fail(format!("{family}: cores of {subset} cover only {covered}"));
        }
    }
    Ok(())
}

/// If `⋂ K^i = {a_1..a_n}` then `|⋃_j ⋂ K^{a_j}| = n`.
pub fn star_core_is_closed(family: &SetFamily) -> Check {
    if !family.is_union_closed() {
        return Ok(());
    }
    for i in family.union().iter() {
        let core = star_core(family, i);
        let covered = union_of_star_cores(family, core);
        if covered.len() != core.len() {
            return fail(format!(
                "{family}: core of {i} is {core} but its cores cover {covered}"
            ));
        }
    }
    Ok(())
}

/// For an isomorphism between pure families, each `h(K1^i)` equals `K2^j` for
/// exactly one `j` in the union of the target.
pub fn star_images_match_uniquely(h: &FamilyMap) -> Check {
    if !is_iso(h) || !is_pure(h.source()) || !is_pure(h.target()) {
        return Ok(());
    }
    let (f1, f2) = (h.source(), h.target());
    for i in f1.union().iter() {
        let mut image: Vec<usize> = f1
            .star_indices(i)
            .into_iter()
            .map(|k| h.assignment()[k])
            .collect();
        image.sort_unstable();
        let matches = f2
            .union()
            .iter()
            .filter(|&j| f2.star_indices(j) == image)
            .count();
        if matches != 1 {
            return fail(format!("{f1}: star of {i} matches {matches} target stars"));
        }
    }
    Ok(())
}

/// Facts about removing a minimal member `X` from a pure union-closed family
/// when the remainder becomes impure: the remainder has exactly one redundant
/// element `z`, and `z` lies in every remaining member.
///
/// Returns the redundant element, or `None` when the hypotheses do not apply.
pub fn minimal_removal_redundancy(
    family: &SetFamily,
    x: MemberSet,
) -> Result<Option<u32>, Counterexample> {
    if !family.is_union_closed() || !is_pure(family) || !family.minimal_members().contains(&x) {
        return Ok(None);
    }
    let rest = family.remove_member(x).unwrap();
    let redundant = redundant_elements(&rest);
    match redundant.as_slice() {
        [] => Ok(None),
        [z] => {
            let z = z.get();
            if let Some(c) = rest.members().iter().find(|c| !c.contains(z)) {
                return fail(format!(
                    "{family} without {x}: redundant {z} is missing from {c}"
                ));
            }
            Ok(Some(z))
        }
        many => fail(format!(
            "{family} without {x}: {} redundant elements",
            many.len()
        )),
    }
}

/// With `z` redundant after removing the minimal `X`, the set
/// `R = h(X ∪ {z}) \ h(X)` is a single element that is redundant in the target
/// without `h(X)`.
pub fn paired_redundant_element(h: &FamilyMap, x: MemberSet, z: u32) -> Check {
    let Some(hx) = h.apply(x) else {
        return fail(format!("{x} is not a source member"));
    };
    let Some(hxz) = h.apply(x.with(z)) else {
        return fail(format!("{} is not a source member", x.with(z)));
    };
    let r = hxz.difference(hx);
    if r.len() != 1 {
        return fail(format!("R = {r} does not have exactly one element"));
    }
    let rest = h.target().remove_member(hx).unwrap();
    let r_elem = r.iter().next().unwrap();
    if redundant_elements(&rest).iter().any(|e| e.get() == r_elem) {
        Ok(())
    } else {
        fail(format!(
            "{r_elem} is not redundant in {} without {hx}",
            h.target()
        ))
    }
}

/// Family size and sorted `(members below, members above)` counts.
pub type OrderInvariant = (usize, Vec<(usize, usize)>);

/// An order invariant of a union-closed family: its size plus the sorted
/// multiset of `(members below, members above)` counts. Isomorphic families
/// share it, since an isomorphism preserves inclusion in both directions.
pub fn order_invariant(family: &SetFamily) -> OrderInvariant {
    let m = family.members();
    let mut profile: Vec<(usize, usize)> = m
        .iter()
        .map(|&a| {
            let below = m.iter().filter(|&&b| b.is_subset(a)).count();
            let above = m.iter().filter(|&&b| a.is_subset(b)).count();
            (below, above)
        })
        .collect();
    profile.sort_unstable();
    (m.len(), profile)
}

/// Every isomorphism between every ordered pair of `families` (an index pair
/// plus the maps), skipping pairs whose order invariants differ.
pub fn all_isomorphisms(families: &[SetFamily]) -> Vec<(usize, usize, Vec<FamilyMap>)> {
    let mut buckets: HashMap<OrderInvariant, Vec<usize>> = HashMap::new();
    for (k, f) in families.iter().enumerate() {
        buckets.entry(order_invariant(f)).or_default().push(k);
    }
    let mut keys: Vec<_> = buckets.keys().cloned().collect();
    keys.sort();
    let mut out = Vec::new();
    for key in keys {
        let bucket = &buckets[&key];
        for &a in bucket {
            for &b in bucket {
                let isos = find_isomorphisms(&families[a], &families[b], None);
                if !isos.is_empty() {
                    out.push((a, b, isos));
                }
            }
        }
    }
    out.sort_by_key(|(a, b, _)| (*a, *b));
    out
}
