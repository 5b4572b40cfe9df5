//! Member-to-member maps between families: homomorphism and isomorphism
//! checks, image families, and a pruned isomorphism search.

use crate::error::{Error, Result};
use crate::family::{MemberSet, SetFamily};
use crate::purify::is_pure;

/// A total map from the members of `source` to the members of `target`.
///
/// `assignment[k]` is the target index of the source member at canonical
/// index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyMap {
    source: SetFamily,
    target: SetFamily,
    assignment: Vec<usize>,
}

impl FamilyMap {
    pub fn new(source: SetFamily, target: SetFamily, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::InvalidMap(format!(
                "assignment has {} entries for {} source members",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.len()) {
            return Err(Error::InvalidMap(format!(
                "target index {bad} out of range for {} target members",
                target.len()
            )));
        }
        Ok(FamilyMap {
            source,
            target,
            assignment,
        })
    }

    /// Builds the map `A ↦ f(A)`; every image must be a target member.
    pub fn from_fn<F>(source: SetFamily, target: SetFamily, mut f: F) -> Result<Self>
    where
        F: FnMut(MemberSet) -> MemberSet,
    {
        let assignment = source
            .members()
            .iter()
            .map(|&a| target.index_of(f(a)).ok_or(Error::ImageNotInTarget(a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(family: SetFamily) -> Self {
        let assignment = (0..family.len()).collect();
        FamilyMap {
            source: family.clone(),
            target: family,
            assignment,
        }
    }

    pub fn source(&self) -> &SetFamily {
        &self.source
    }

    pub fn target(&self) -> &SetFamily {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Image of the source member at canonical index `k`.
    pub fn image_at(&self, k: usize) -> MemberSet {
        self.target.members()[self.assignment[k]]
    }

    /// Image of a source member, or `None` if `member` is not in the source.
    pub fn apply(&self, member: MemberSet) -> Option<MemberSet> {
        self.source.index_of(member).map(|k| self.image_at(k))
    }

    /// `(A, h(A))` pairs in source canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (MemberSet, MemberSet)> + '_ {
        self.source
            .members()
            .iter()
            .enumerate()
            .map(|(k, &a)| (a, self.image_at(k)))
    }

    /// Checks `h(A ∪ B) = h(A) ∪ h(B)` over every pair, `A = B` included.
    pub fn is_homomorphism(&self) -> Result<bool> {
        if !self.source.is_union_closed() {
            return Err(Error::SourceNotUnionClosed);
        }
        let src = self.source.members();
        for i in 0..src.len() {
            for j in i..src.len() {
                let u = self
                    .source
                    .index_of(src[i].union(src[j]))
                    .expect("union-closed source contains the union");
                if self.image_at(u) != self.image_at(i).union(self.image_at(j)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        for &t in &self.assignment {
            if std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        true
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_homomorphism()? && self.is_bijective())
    }

    /// The set of images `{h(A)}`. Union-closed whenever `h` is a homomorphism.
    pub fn image_family(&self) -> Result<SetFamily> {
        if !self.is_homomorphism()? {
            return Err(Error::NotAHomomorphism);
        }
        let image = SetFamily::collect_dedup(
            self.target.ground_size(),
            self.assignment.iter().map(|&t| self.target.members()[t]),
        );
        assert!(
            image.is_union_closed(),
            "image of a homomorphism must be union-closed"
        );
        Ok(image)
    }

    /// `other ∘ self`; requires `self.target == other.source`.
    pub fn then(&self, other: &FamilyMap) -> Result<FamilyMap> {
        if self.target != other.source {
            return Err(Error::InvalidMap(
                "composition requires matching target and source".into(),
            ));
        }
        Ok(FamilyMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment: self
                .assignment
                .iter()
                .map(|&t| other.assignment[t])
                .collect(),
        })
    }

    /// The inverse map, when the assignment is bijective.
    pub fn inverse(&self) -> Option<FamilyMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut assignment = vec![0; self.assignment.len()];
        for (k, &t) in self.assignment.iter().enumerate() {
            assignment[t] = k;
        }
        Some(FamilyMap {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment,
        })
    }
}

/// Finds up to `limit` isomorphisms `f1 → f2` (`None` for all), sorted by
/// assignment.
///
/// Source members are assigned in decreasing cardinality. A candidate image is
/// rejected when it breaks a union with an already assigned member, when it
/// disagrees with the source member on minimality, or, when both families are
/// pure, when its cardinality differs. Non-union-closed inputs have no
/// isomorphisms.
pub fn find_isomorphisms(f1: &SetFamily, f2: &SetFamily, limit: Option<usize>) -> Vec<FamilyMap> {
    if f1.len() != f2.len() || !f1.is_union_closed() || !f2.is_union_closed() {
        return Vec::new();
    }
    if limit == Some(0) {
        return Vec::new();
    }
    let both_pure = is_pure(f1) && is_pure(f2);
    let src = f1.members();
    let tgt = f2.members();

    // Decreasing cardinality, ties by ascending bit value.
    let mut order: Vec<usize> = (0..src.len()).collect();
    order.sort_by(|&a, &b| {
        src[b]
            .len()
            .cmp(&src[a].len())
            .then(src[a].bits().cmp(&src[b].bits()))
    });
    let src_min: Vec<bool> = src.iter().map(|&m| f1.is_minimal(m)).collect();
    let tgt_min: Vec<bool> = tgt.iter().map(|&m| f2.is_minimal(m)).collect();
    // union_index[i][j] = index of src[i] ∪ src[j].
    let union_index: Vec<Vec<usize>> = src
        .iter()
        .map(|&a| {
            src.iter()
                .map(|&b| f1.index_of(a.union(b)).expect("union-closed"))
                .collect()
        })
        .collect();

    let mut search = IsoSearch {
        src,
        tgt,
        order: &order,
        src_min: &src_min,
        tgt_min: &tgt_min,
        union_index: &union_index,
        both_pure,
        assigned: vec![None; src.len()],
        used: vec![false; tgt.len()],
        found: Vec::new(),
        limit,
    };
    search.extend(0);

    let mut found = search.found;
    found.sort();
    found
        .into_iter()
        .map(|assignment| FamilyMap {
            source: f1.clone(),
            target: f2.clone(),
            assignment,
        })
        .collect()
}

struct IsoSearch<'a> {
    src: &'a [MemberSet],
    tgt: &'a [MemberSet],
    order: &'a [usize],
    src_min: &'a [bool],
    tgt_min: &'a [bool],
    union_index: &'a [Vec<usize>],
    both_pure: bool,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
    limit: Option<usize>,
}

impl IsoSearch<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.found
                .push(self.assigned.iter().map(|t| t.unwrap()).collect());
            return;
        }
        let a = self.order[depth];
        for b in 0..self.tgt.len() {
            if self.used[b] || !self.admissible(a, b) {
                continue;
            }
            self.assigned[a] = Some(b);
            self.used[b] = true;
            self.extend(depth + 1);
            self.used[b] = false;
            self.assigned[a] = None;
            if self.done() {
                return;
            }
        }
    }

    fn admissible(&self, a: usize, b: usize) -> bool {
        if self.src_min[a] != self.tgt_min[b] {
            return false;
        }
        if self.both_pure && self.src[a].len() != self.tgt[b].len() {
            return false;
        }
        let image_b = self.tgt[b];
        for (other, slot) in self.assigned.iter().enumerate() {
            let Some(ob) = *slot else { continue };
            // Unions only grow, so src[a] ∪ src[other] is either src[a]
            // itself or a larger member that is already assigned.
            let u = self.union_index[a][other];
            let image_u = if u == a {
                image_b
            } else {
                match self.assigned[u] {
                    Some(t) => self.tgt[t],
                    None => continue,
                }
            };
            if image_u != image_b.union(self.tgt[ob]) {
                return false;
            }
        }
        true
    }
}
