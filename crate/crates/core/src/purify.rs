//! Redundant elements, reduced families and purification.
//!
//! An element `z` of the union is redundant when deleting it from every member
//! keeps all members distinct. Repeatedly deleting redundant elements yields a
//! pure family; the strip maps compose into an isomorphism onto it.

use crate::error::{Error, Result};
use crate::family::{GroundElement, SetFamily};
use crate::morphism::FamilyMap;

/// Whether deleting `z` from every member keeps the members distinct.
pub fn is_redundant(family: &SetFamily, z: impl Into<GroundElement>) -> Result<bool> {
    let z = in_union(family, z.into())?;
    Ok(strip_is_injective(family, z))
}

/// The reduced family `{X \ {z}}`. The ground size is kept.
pub fn reduce(family: &SetFamily, z: impl Into<GroundElement>) -> Result<SetFamily> {
    let z = in_union(family, z.into())?;
    if !strip_is_injective(family, z) {
        return Err(Error::NotRedundant(z));
    }
    Ok(stripped(family, z))
}

/// The strip map `X ↦ X \ {z}` from `family` onto its reduction.
pub fn strip_map(family: &SetFamily, z: impl Into<GroundElement>) -> Result<FamilyMap> {
    let z = z.into();
    let reduced = reduce(family, z)?;
    FamilyMap::from_fn(family.clone(), reduced, |x| x.without(z.get()))
}

/// Redundant elements of the union, ascending.
pub fn redundant_elements(family: &SetFamily) -> Vec<GroundElement> {
    family
        .union()
        .iter()
        .filter(|&z| strip_is_injective(family, z))
        .map(GroundElement::new)
        .collect()
}

/// True when no element of the union is redundant.
pub fn is_pure(family: &SetFamily) -> bool {
    family
        .union()
        .iter()
        .all(|z| !strip_is_injective(family, z))
}

fn in_union(family: &SetFamily, z: GroundElement) -> Result<u32> {
    let z = z.get();
    if family.union().contains(z) {
        Ok(z)
    } else {
        Err(Error::ElementNotInUnion(z))
    }
}

fn strip_is_injective(family: &SetFamily, z: u32) -> bool {
    // X \ {z} = Y \ {z} for X ≠ Y only when Y = X ∪ {z} with z ∉ X.
    family
        .members()
        .iter()
        .filter(|m| !m.contains(z))
        .all(|&m| !family.contains(m.with(z)))
}

fn stripped(family: &SetFamily, z: u32) -> SetFamily {
    SetFamily::collect_dedup(
        family.ground_size(),
        family.members().iter().map(|m| m.without(z)),
    )
}

/// Chooses which redundant element to delete next.
pub trait RemovalPolicy {
    /// `redundant` is nonempty and ascending.
    fn choose(&mut self, family: &SetFamily, redundant: &[GroundElement]) -> GroundElement;
}

/// Built-in removal orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalOrder {
    #[default]
    Smallest,
    Largest,
}

impl RemovalPolicy for RemovalOrder {
    fn choose(&mut self, _family: &SetFamily, redundant: &[GroundElement]) -> GroundElement {
        match self {
            RemovalOrder::Smallest => redundant[0],
            RemovalOrder::Largest => redundant[redundant.len() - 1],
        }
    }
}

impl<F> RemovalPolicy for F
where
    F: FnMut(&SetFamily, &[GroundElement]) -> GroundElement,
{
    fn choose(&mut self, family: &SetFamily, redundant: &[GroundElement]) -> GroundElement {
        self(family, redundant)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurificationStep {
    pub removed: GroundElement,
    pub before: SetFamily,
    pub after: SetFamily,
}

/// The deletions performed by [`purify`], in order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PurificationTrace {
    pub steps: Vec<PurificationStep>,
}

impl PurificationTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn removed(&self) -> Vec<GroundElement> {
        self.steps.iter().map(|s| s.removed).collect()
    }

    /// Composes the strip maps into the member map from the original family to
    /// the purified one. Returns `None` for an empty trace; use
    /// [`FamilyMap::identity`] then.
    pub fn composed_map(&self) -> Option<Result<FamilyMap>> {
        let mut steps = self.steps.iter();
        let first = steps.next()?;
        let mut map = match strip_map(&first.before, first.removed) {
            Ok(m) => m,
            Err(e) => return Some(Err(e)),
        };
        for step in steps {
            let next = strip_map(&step.before, step.removed).and_then(|s| map.then(&s));
            match next {
                Ok(m) => map = m,
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(map))
    }
}

/// Deletes redundant elements chosen by `policy` until the family is pure.
///
/// Works on any family. Only for union-closed input is the composed strip map
/// guaranteed to be an isomorphism.
pub fn purify<P: RemovalPolicy>(
    family: &SetFamily,
    mut policy: P,
) -> (SetFamily, PurificationTrace) {
    let mut current = family.clone();
    let mut trace = PurificationTrace::default();
    loop {
        let redundant = redundant_elements(&current);
        if redundant.is_empty() {
            return (current, trace);
        }
        let z = policy.choose(&current, &redundant);
        assert!(
            redundant.contains(&z),
            "removal policy chose {z}, which is not redundant"
        );
        let after = stripped(&current, z.get());
        trace.steps.push(PurificationStep {
            removed: z,
            before: current,
            after: after.clone(),
        });
        current = after;
    }
}

/// Every distinct family reachable by purifying in some removal order, sorted.
pub fn all_purifications(family: &SetFamily) -> Vec<SetFamily> {
    fn walk(f: &SetFamily, out: &mut Vec<SetFamily>) {
        let redundant = redundant_elements(f);
        if redundant.is_empty() {
            out.push(f.clone());
            return;
        }
        for z in redundant {
            walk(&stripped(f, z.get()), out);
        }
    }
    let mut out = Vec::new();
    walk(family, &mut out);
    out.sort_by(|a, b| a.members().cmp(b.members()));
    out.dedup();
    out
}
