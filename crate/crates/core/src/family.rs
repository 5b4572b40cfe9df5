//! Finite set families over a ground set `[n] = {1, ..., n}`.
//!
//! A [`MemberSet`] is a subset of the ground set packed into one machine
//! word; element `i` occupies bit `i - 1`. A [`SetFamily`] is a duplicate-free
//! list of members kept in canonical order: by cardinality, then by the
//! numeric value of the bit-vector.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground size. A member must fit in one `u64`.
pub const MAX_GROUND_SIZE: u32 = 64;

/// An element of the ground set `[n]`, numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundElement(u32);

impl GroundElement {
    pub const fn new(value: u32) -> Self {
        GroundElement(value)
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl From<u32> for GroundElement {
    fn from(value: u32) -> Self {
        GroundElement(value)
    }
}

impl fmt::Display for GroundElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the ground set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MemberSet(u64);

impl MemberSet {
    pub const EMPTY: MemberSet = MemberSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        MemberSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_GROUND_SIZE);
        if n >= 64 {
            MemberSet(u64::MAX)
        } else {
            MemberSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(element: u32) -> Self {
        debug_assert!((1..=MAX_GROUND_SIZE).contains(&element));
        MemberSet(1u64 << (element - 1))
    }

    /// Builds a set from 1-based elements. Elements outside `1..=64` are rejected.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > MAX_GROUND_SIZE {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    ground_size: MAX_GROUND_SIZE,
                });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(MemberSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: u32) -> bool {
        (1..=MAX_GROUND_SIZE).contains(&element) && self.0 & (1u64 << (element - 1)) != 0
    }

    pub fn union(self, other: Self) -> Self {
        MemberSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        MemberSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        MemberSet(self.0 & !other.0)
    }

    pub fn without(self, element: u32) -> Self {
        if self.contains(element) {
            MemberSet(self.0 & !(1u64 << (element - 1)))
        } else {
            self
        }
    }

    pub fn with(self, element: u32) -> Self {
        self.union(MemberSet::singleton(element))
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl Ord for MemberSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MemberSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MemberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for MemberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the elements of a [`MemberSet`], ascending.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// A finite family of distinct subsets of `[ground_size]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetFamily {
    ground_size: u32,
    members: Vec<MemberSet>,
}

impl SetFamily {
    /// Builds a family, sorting members into canonical order.
    ///
    /// Fails on a repeated member or on an element above `ground_size`.
    pub fn new<I: IntoIterator<Item = MemberSet>>(ground_size: u32, members: I) -> Result<Self> {
        check_ground(ground_size)?;
        let full = MemberSet::full(ground_size);
        let mut members: Vec<MemberSet> = members.into_iter().collect();
        for m in &members {
            if !m.is_subset(full) {
                return Err(Error::ElementOutOfRange {
                    element: m.difference(full).max_element(),
                    ground_size,
                });
            }
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0]));
        }
        Ok(SetFamily {
            ground_size,
            members,
        })
    }

    /// Builds a family from element lists, e.g. `from_lists(2, &[&[], &[1], &[1, 2]])`.
    pub fn from_lists<L: AsRef<[u32]>>(ground_size: u32, lists: &[L]) -> Result<Self> {
        check_ground(ground_size)?;
        let mut members = Vec::with_capacity(lists.len());
        for list in lists {
            let mut bits = MemberSet::EMPTY;
            for &e in list.as_ref() {
                if e == 0 || e > ground_size {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        ground_size,
                    });
                }
                bits = bits.with(e);
            }
            members.push(bits);
        }
        SetFamily::new(ground_size, members)
    }

    /// Builds a family, silently merging repeated members.
    pub(crate) fn collect_dedup<I: IntoIterator<Item = MemberSet>>(
        ground_size: u32,
        members: I,
    ) -> Self {
        let mut members: Vec<MemberSet> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        debug_assert!(members
            .iter()
            .all(|m| m.is_subset(MemberSet::full(ground_size))));
        SetFamily {
            ground_size,
            members,
        }
    }

    /// The empty family over `[ground_size]`.
    pub fn empty(ground_size: u32) -> Result<Self> {
        check_ground(ground_size)?;
        Ok(SetFamily {
            ground_size,
            members: Vec::new(),
        })
    }

    pub fn ground_size(&self) -> u32 {
        self.ground_size
    }

    pub fn members(&self) -> &[MemberSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, member: MemberSet) -> bool {
        self.index_of(member).is_some()
    }

    /// Position of `member` in canonical order.
    pub fn index_of(&self, member: MemberSet) -> Option<usize> {
        self.members.binary_search(&member).ok()
    }

    /// Whether `A ∪ B` is a member for every pair of members.
    pub fn is_union_closed(&self) -> bool {
        let m = &self.members;
        for i in 0..m.len() {
            for j in (i + 1)..m.len() {
                if !self.contains(m[i].union(m[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest union-closed family containing every member.
    pub fn union_closure(&self) -> SetFamily {
        let mut current = self.members.clone();
        loop {
            let mut next = current.clone();
            for i in 0..current.len() {
                for j in (i + 1)..current.len() {
                    next.push(current[i].union(current[j]));
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.len() == current.len() {
                break;
            }
            current = next;
        }
        SetFamily {
            ground_size: self.ground_size,
            members: current,
        }
    }

    /// Union of all members; empty for the empty family.
    pub fn union(&self) -> MemberSet {
        self.members
            .iter()
            .fold(MemberSet::EMPTY, |acc, &m| acc.union(m))
    }

    /// The subfamily of members that contain `element`.
    pub fn member_star(&self, element: impl Into<GroundElement>) -> Result<SetFamily> {
        let e = self.check_element(element.into())?;
        Ok(SetFamily {
            ground_size: self.ground_size,
            members: self
                .members
                .iter()
                .copied()
                .filter(|m| m.contains(e))
                .collect(),
        })
    }

    /// Indices (canonical order) of the members containing `element`.
    pub(crate) fn star_indices(&self, element: u32) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(element))
            .map(|(k, _)| k)
            .collect()
    }

    /// Members with no proper subset in the family, in canonical order.
    pub fn minimal_members(&self) -> Vec<MemberSet> {
        self.members
            .iter()
            .copied()
            .filter(|&x| self.is_minimal(x))
            .collect()
    }

    pub(crate) fn is_minimal(&self, x: MemberSet) -> bool {
        // Proper subsets are strictly smaller in canonical order.
        self.members
            .iter()
            .take_while(|m| m.len() < x.len())
            .all(|m| !m.is_subset(x))
    }

    /// The family with `member` removed.
    pub fn remove_member(&self, member: MemberSet) -> Result<SetFamily> {
        let idx = self.index_of(member).ok_or(Error::NotAMember(member))?;
        let mut members = self.members.clone();
        members.remove(idx);
        Ok(SetFamily {
            ground_size: self.ground_size,
            members,
        })
    }

    pub(crate) fn check_element(&self, element: GroundElement) -> Result<u32> {
        let e = element.get();
        if e == 0 || e > self.ground_size {
            return Err(Error::ElementOutOfRange {
                element: e,
                ground_size: self.ground_size,
            });
        }
        Ok(e)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

fn check_ground(ground_size: u32) -> Result<()> {
    if ground_size > MAX_GROUND_SIZE {
        return Err(Error::GroundTooLarge {
            ground_size,
            limit: MAX_GROUND_SIZE,
        });
    }
    Ok(())
}

/// Intersection of the given members, or `ambient` when there are none.
pub fn intersection_of<'a, I>(members: I, ambient: MemberSet) -> MemberSet
where
    I: IntoIterator<Item = &'a MemberSet>,
{
    members
        .into_iter()
        .fold(None, |acc: Option<MemberSet>, &m| {
            Some(acc.map_or(m, |a| a.intersection(m)))
        })
        .unwrap_or(ambient)
}
