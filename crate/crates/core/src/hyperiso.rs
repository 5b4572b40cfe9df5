//! Ground-set bijections that induce family isomorphisms.
//!
//! For pure union-closed families every isomorphism `h: K1 → K2` is induced by
//! a unique bijection `H: ∪K1 → ∪K2`. [`extract_hyperisomorphism`] builds `H`
//! one element at a time: `H(i)` is the element `j` whose star `K2^j` equals the
//! image of `K1^i`, and `j` is searched for only inside the intersection of
//! that image. [`brute_force_hyperisomorphism`] is the permutation oracle.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result, Side};
use crate::family::{intersection_of, MemberSet, SetFamily};
use crate::morphism::FamilyMap;
use crate::purify::is_pure;

/// Default cap on `|∪K|` for permutation search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

/// A bijection between two ground unions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundMap {
    source_union: MemberSet,
    target_union: MemberSet,
    // Sorted by source element.
    pairs: Vec<(u32, u32)>,
}

impl GroundMap {
    /// Builds a bijection from `(i, H(i))` pairs in any order.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let mut source_union = MemberSet::EMPTY;
        let mut target_union = MemberSet::EMPTY;
        for &(i, j) in &pairs {
            let (si, sj) = (
                MemberSet::from_elements([i])?,
                MemberSet::from_elements([j])?,
            );
            if !source_union.intersection(si).is_empty() {
                return Err(Error::InvalidGroundMap(format!("element {i} mapped twice")));
            }
            if !target_union.intersection(sj).is_empty() {
                return Err(Error::InvalidGroundMap(format!("element {j} hit twice")));
            }
            source_union = source_union.union(si);
            target_union = target_union.union(sj);
        }
        Ok(GroundMap {
            source_union,
            target_union,
            pairs,
        })
    }

    pub fn identity(on: MemberSet) -> Self {
        GroundMap {
            source_union: on,
            target_union: on,
            pairs: on.iter().map(|e| (e, e)).collect(),
        }
    }

    pub fn source_union(&self) -> MemberSet {
        self.source_union
    }

    pub fn target_union(&self) -> MemberSet {
        self.target_union
    }

    /// `(i, H(i))` in ascending `i`.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn get(&self, element: u32) -> Option<u32> {
        self.pairs
            .binary_search_by_key(&element, |&(i, _)| i)
            .ok()
            .map(|k| self.pairs[k].1)
    }

    /// `{H(a) | a ∈ set}`; `set` must lie inside the source union.
    pub fn apply_set(&self, set: MemberSet) -> MemberSet {
        debug_assert!(set.is_subset(self.source_union));
        set.iter().fold(MemberSet::EMPTY, |acc, a| {
            acc.with(self.get(a).expect("element in source union"))
        })
    }
}

impl fmt::Display for GroundMap {
    /// One `i -> j` line per element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.pairs {
            writeln!(f, "{i} -> {j}")?;
        }
        Ok(())
    }
}

/// The member map `A ↦ H[A]`.
pub fn induced_map(map: &GroundMap, f1: &SetFamily, f2: &SetFamily) -> Result<FamilyMap> {
    if map.source_union != f1.union() || map.target_union != f2.union() {
        return Err(Error::InvalidGroundMap(format!(
            "map goes {} -> {}, families have unions {} and {}",
            map.source_union,
            map.target_union,
            f1.union(),
            f2.union()
        )));
    }
    FamilyMap::from_fn(f1.clone(), f2.clone(), |a| map.apply_set(a))
}

/// Whether `map` induces an isomorphism `f1 → f2`.
pub fn is_hyperisomorphism(map: &GroundMap, f1: &SetFamily, f2: &SetFamily) -> bool {
    induced_map(map, f1, f2)
        .and_then(|h| h.is_isomorphism())
        .unwrap_or(false)
}

/// `⋂ K^i`: the elements present in every member that contains `i`.
/// An empty star yields `∪K`.
pub fn star_core(family: &SetFamily, element: u32) -> MemberSet {
    intersection_of(
        family.members().iter().filter(|m| m.contains(element)),
        family.union(),
    )
}

/// `⋃_a ⋂ K^a` over the given elements.
pub fn union_of_star_cores(family: &SetFamily, elements: MemberSet) -> MemberSet {
    elements
        .iter()
        .fold(MemberSet::EMPTY, |acc, a| acc.union(star_core(family, a)))
}

fn check_iso_between_pure(h: &FamilyMap) -> Result<()> {
    match h.is_isomorphism() {
        Ok(true) => {}
        Ok(false) | Err(Error::SourceNotUnionClosed) => return Err(Error::NotAnIsomorphism),
        Err(e) => return Err(e),
    }
    if !is_pure(h.source()) {
        return Err(Error::NotPure(Side::Source));
    }
    if !is_pure(h.target()) {
        return Err(Error::NotPure(Side::Target));
    }
    Ok(())
}

/// Recovers the bijection of ground unions that induces the isomorphism `h`.
///
/// Both families must be pure and `h` a verified isomorphism. The result is
/// checked to induce `h` member for member; a failed uniqueness or
/// reconstruction check is reported as [`Error::InternalContradiction`].
pub fn extract_hyperisomorphism(h: &FamilyMap) -> Result<GroundMap> {
    check_iso_between_pure(h)?;
    let (f1, f2) = (h.source(), h.target());

    let mut pairs = Vec::new();
    for i in f1.union().iter() {
        // h(K1^i) as sorted target indices.
        let mut image: Vec<usize> = f1
            .star_indices(i)
            .into_iter()
            .map(|k| h.assignment()[k])
            .collect();
        image.sort_unstable();
        let core = intersection_of(image.iter().map(|&t| &f2.members()[t]), f2.union());
        let matches: Vec<u32> = core
            .iter()
            .filter(|&j| f2.star_indices(j) == image)
            .collect();
        match matches.as_slice() {
            [j] => pairs.push((i, *j)),
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "element {i}: {} candidate images among {core}",
                    matches.len()
                )))
            }
        }
    }

    let map = GroundMap::new(pairs).map_err(|e| {
        Error::InternalContradiction(format!("extracted map is not injective: {e}"))
    })?;
    if map.target_union != f2.union() {
        return Err(Error::InternalContradiction(format!(
            "extracted map hits {}, target union is {}",
            map.target_union,
            f2.union()
        )));
    }
    let induced = induced_map(&map, f1, f2)
        .map_err(|e| Error::InternalContradiction(format!("extracted map fails to induce: {e}")))?;
    if induced.assignment() != h.assignment() {
        return Err(Error::InternalContradiction(
            "extracted map induces a different member map".into(),
        ));
    }
    Ok(map)
}

/// Every bijection `∪K1 → ∪K2` whose induced map equals `h`, by trying all
/// permutations. Empty when the unions differ in size.
pub fn brute_force_hyperisomorphism(h: &FamilyMap, cap: usize) -> Result<Vec<GroundMap>> {
    let src: Vec<u32> = h.source().union().iter().collect();
    let tgt: Vec<u32> = h.target().union().iter().collect();
    if src.len() != tgt.len() {
        return Ok(Vec::new());
    }
    if src.len() > cap {
        return Err(Error::UnionTooLarge {
            size: src.len(),
            cap,
        });
    }
    let wanted: Vec<(MemberSet, MemberSet)> = h.pairs().collect();
    let mut found = Vec::new();
    for perm in tgt.iter().copied().permutations(tgt.len()) {
        let image_of = |a: MemberSet| {
            a.iter().fold(MemberSet::EMPTY, |acc, e| {
                let pos = src.binary_search(&e).expect("element in union");
                acc.with(perm[pos])
            })
        };
        if wanted.iter().all(|&(a, b)| image_of(a) == b) {
            found.push(GroundMap::new(
                src.iter().copied().zip(perm.iter().copied()),
            )?);
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizePair {
    pub source: usize,
    pub target: usize,
}

impl SizePair {
    pub fn holds(self) -> bool {
        self.source == self.target
    }
}

/// Size comparisons for an ordered pair of source members `(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSizes {
    pub a: MemberSet,
    pub b: MemberSet,
    pub union: SizePair,
    pub intersection: SizePair,
    pub difference: SizePair,
}

/// Outcome of checking that an isomorphism between pure families preserves
/// member sizes, union size, and the sizes of unions, intersections,
/// differences and complements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityReport {
    /// `(|A|, |h(A)|)` in source canonical order.
    pub member_sizes: Vec<SizePair>,
    /// `(|∪K1|, |∪K2|)`.
    pub union_size: SizePair,
    /// All ordered pairs of source members.
    pub pairs: Vec<PairSizes>,
    /// `(|∪K1 \ A|, |∪K2 \ h(A)|)`.
    pub complement_sizes: Vec<SizePair>,
    pub passed: bool,
}

pub fn verify_cardinality_theorem(h: &FamilyMap) -> Result<CardinalityReport> {
    check_iso_between_pure(h)?;
    let (u1, u2) = (h.source().union(), h.target().union());
    let images: Vec<(MemberSet, MemberSet)> = h.pairs().collect();
    let size = |a: MemberSet, b: MemberSet| SizePair {
        source: a.len(),
        target: b.len(),
    };

    let member_sizes: Vec<SizePair> = images.iter().map(|&(a, b)| size(a, b)).collect();
    let complement_sizes: Vec<SizePair> = images
        .iter()
        .map(|&(a, b)| size(u1.difference(a), u2.difference(b)))
        .collect();
    let union_size = size(u1, u2);
    let mut pairs = Vec::with_capacity(images.len() * images.len());
    for &(a, ha) in &images {
        for &(b, hb) in &images {
            pairs.push(PairSizes {
                a,
                b,
                union: size(a.union(b), ha.union(hb)),
                intersection: size(a.intersection(b), ha.intersection(hb)),
                difference: size(a.difference(b), ha.difference(hb)),
            });
        }
    }
    let passed = union_size.holds()
        && member_sizes.iter().all(|p| p.holds())
        && complement_sizes.iter().all(|p| p.holds())
        && pairs
            .iter()
            .all(|p| p.union.holds() && p.intersection.holds() && p.difference.holds());
    Ok(CardinalityReport {
        member_sizes,
        union_size,
        pairs,
        complement_sizes,
        passed,
    })
}
