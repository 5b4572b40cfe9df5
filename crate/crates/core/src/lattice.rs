//! The inclusion lattice of a union-closed family with a least member, and a
//! Frankl abundance check.
//!
//! Join is set union. Meet of `a` and `b` is the union of every member
//! contained in `a ∩ b`, which is itself a member because the family is
//! union-closed and the least member lies below everything.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::{GroundElement, MemberSet, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    elements: Vec<MemberSet>,
    cover_edges: Vec<(usize, usize)>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Members in canonical order; indices below refer to this list.
    pub fn elements(&self) -> &[MemberSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(lower, upper)` pairs where `upper` covers `lower`, sorted.
    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.len() + b]
    }

    pub fn index_of(&self, member: MemberSet) -> Option<usize> {
        self.elements.binary_search(&member).ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].is_subset(self.elements[b])
    }
}

/// Builds the inclusion lattice. The family must be union-closed with exactly
/// one minimal member (containing `∅` is enough).
pub fn to_lattice(family: &SetFamily) -> Result<Lattice> {
    if !family.is_union_closed() {
        return Err(Error::NotUnionClosed);
    }
    let minimal = family.minimal_members();
    if minimal.len() != 1 {
        return Err(Error::NoUniqueBottom {
            minimal: minimal.len(),
        });
    }
    let elements = family.members().to_vec();
    let n = elements.len();
    let index = |m: MemberSet| family.index_of(m).expect("member of union-closed family");

    let mut join_table = vec![0; n * n];
    let mut meet_table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            join_table[a * n + b] = index(elements[a].union(elements[b]));
            let common = elements[a].intersection(elements[b]);
            let lower = elements
                .iter()
                .filter(|m| m.is_subset(common))
                .fold(MemberSet::EMPTY, |acc, &m| acc.union(m));
            meet_table[a * n + b] = index(lower);
        }
    }

    let mut cover_edges = Vec::new();
    for lo in 0..n {
        for hi in 0..n {
            let (x, y) = (elements[lo], elements[hi]);
            if !x.is_proper_subset(y) {
                continue;
            }
            let between = elements
                .iter()
                .any(|&m| x.is_proper_subset(m) && m.is_proper_subset(y));
            if !between {
                cover_edges.push((lo, hi));
            }
        }
    }

    Ok(Lattice {
        bottom: index(minimal[0]),
        top: index(family.union()),
        elements,
        cover_edges,
        meet_table,
        join_table,
    })
}

/// Commutativity, associativity, idempotence and both absorption laws over
/// all triples, plus the consistency of meet and join with inclusion.
pub fn verify_lattice_laws(lattice: &Lattice) -> bool {
    let n = lattice.len();
    let (m, j) = (|a, b| lattice.meet(a, b), |a, b| lattice.join(a, b));
    for a in 0..n {
        if m(a, a) != a || j(a, a) != a {
            return false;
        }
        for b in 0..n {
            if m(a, b) != m(b, a) || j(a, b) != j(b, a) {
                return false;
            }
            if m(a, j(a, b)) != a || j(a, m(a, b)) != a {
                return false;
            }
            if lattice.leq(a, b) != (j(a, b) == b) || lattice.leq(a, b) != (m(a, b) == a) {
                return false;
            }
            for c in 0..n {
                if m(a, m(b, c)) != m(m(a, b), c) || j(a, j(b, c)) != j(j(a, b), c) {
                    return false;
                }
            }
        }
    }
    true
}

/// `(i, |K^i|)` for every element of the union, ascending.
pub fn element_frequencies(family: &SetFamily) -> Vec<(GroundElement, usize)> {
    family
        .union()
        .iter()
        .map(|i| {
            let count = family.members().iter().filter(|m| m.contains(i)).count();
            (GroundElement::new(i), count)
        })
        .collect()
}

/// Elements lying in at least half of the members, ascending.
pub fn frankl_abundant_elements(family: &SetFamily) -> Result<Vec<GroundElement>> {
    Ok(frankl_abundance(family)?
        .into_iter()
        .map(|(i, _)| i)
        .collect())
}

/// Like [`frankl_abundant_elements`] but with each element's member count.
pub fn frankl_abundance(family: &SetFamily) -> Result<Vec<(GroundElement, usize)>> {
    if !family.is_union_closed() {
        return Err(Error::NotUnionClosed);
    }
    if family.union().is_empty() {
        return Err(Error::NoNonemptyMember);
    }
    let total = family.len();
    Ok(element_frequencies(family)
        .into_iter()
        .filter(|&(_, count)| 2 * count >= total)
        .collect())
}

/// Graphviz rendering of the Hasse diagram, bottom to top.
///
/// One statement per line; nodes in canonical member order, edges sorted.
/// Minimal members are filled red.
pub fn export_dot(lattice: &Lattice) -> String {
    let mut out = String::new();
    out.push_str("digraph lattice {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=circle];\n");
    for (k, m) in lattice.elements.iter().enumerate() {
        let minimal = lattice
            .elements
            .iter()
            .all(|other| !other.is_proper_subset(*m));
        let style = if minimal {
            ", style=filled, fillcolor=\"#ff000080\", color=red"
        } else {
            ""
        };
        writeln!(out, "  n{k} [label=\"{m}\"{style}];").unwrap();
    }
    for &(lo, hi) in &lattice.cover_edges {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u32, lists: &[&[u32]]) -> SetFamily {
        SetFamily::from_lists(n, lists).unwrap()
    }

    fn two_atoms() -> SetFamily {
        fam(3, &[&[], &[1], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
    }

    fn set(e: &[u32]) -> MemberSet {
        MemberSet::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn two_atoms_lattice_shape() {
        let l = to_lattice(&two_atoms()).unwrap();
        assert_eq!(l.elements()[l.bottom()], MemberSet::EMPTY);
        assert_eq!(l.elements()[l.top()], MemberSet::full(3));
        let edges: Vec<(MemberSet, MemberSet)> = l
            .cover_edges()
            .iter()
            .map(|&(a, b)| (l.elements()[a], l.elements()[b]))
            .collect();
        let mut expected = vec![
            (set(&[]), set(&[1])),
            (set(&[]), set(&[3])),
            (set(&[1]), set(&[1, 2])),
            (set(&[1]), set(&[1, 3])),
            (set(&[3]), set(&[1, 3])),
            (set(&[3]), set(&[2, 3])),
            (set(&[1, 2]), set(&[1, 2, 3])),
            (set(&[1, 3]), set(&[1, 2, 3])),
            (set(&[2, 3]), set(&[1, 2, 3])),
        ];
        let mut got = edges;
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn lattice_errors_and_singleton() {
        assert_eq!(
            to_lattice(&fam(2, &[&[1], &[2], &[1, 2]])),
            Err(Error::NoUniqueBottom { minimal: 2 })
        );
        assert_eq!(
            to_lattice(&fam(2, &[&[1], &[2]])),
            Err(Error::NotUnionClosed)
        );
        assert_eq!(
            to_lattice(&SetFamily::empty(1).unwrap()),
            Err(Error::NoUniqueBottom { minimal: 0 })
        );
        let one = to_lattice(&fam(0, &[&[]])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.bottom(), one.top());
        assert!(verify_lattice_laws(&one));
    }

    #[test]
    fn meet_and_join_examples() {
        let l = to_lattice(&two_atoms()).unwrap();
        let ix = |e: &[u32]| l.index_of(set(e)).unwrap();
        assert_eq!(l.join(ix(&[1]), ix(&[3])), ix(&[1, 3]));
        assert_eq!(l.meet(ix(&[1, 2]), ix(&[1, 3])), ix(&[1]));
        assert_eq!(l.meet(ix(&[1, 2]), ix(&[2, 3])), ix(&[]));
        assert!(verify_lattice_laws(&l));
    }

    #[test]
    fn nonempty_bottom_is_accepted() {
        let l = to_lattice(&fam(2, &[&[1], &[1, 2]])).unwrap();
        assert_eq!(l.elements()[l.bottom()], MemberSet::singleton(1));
        assert!(verify_lattice_laws(&l));
    }

    #[test]
    fn broken_tables_fail_the_laws() {
        let mut l = to_lattice(&two_atoms()).unwrap();
        let n = l.len();
        l.meet_table[n + 2] = l.top;
        assert!(!verify_lattice_laws(&l));
    }

    #[test]
    fn frankl_examples() {
        let g = GroundElement::new;
        assert_eq!(
            frankl_abundant_elements(&fam(1, &[&[], &[1]])).unwrap(),
            vec![g(1)]
        );
        assert_eq!(
            frankl_abundance(&two_atoms()).unwrap(),
            vec![(g(1), 4), (g(3), 4)]
        );
        assert_eq!(
            frankl_abundant_elements(&fam(2, &[&[1], &[2], &[1, 2]])).unwrap(),
            vec![g(1), g(2)]
        );
        assert_eq!(
            frankl_abundant_elements(&fam(1, &[&[]])),
            Err(Error::NoNonemptyMember)
        );
        assert_eq!(
            frankl_abundant_elements(&fam(2, &[&[1], &[2]])),
            Err(Error::NotUnionClosed)
        );
    }

    #[test]
    fn dot_examples() {
        let one = export_dot(&to_lattice(&fam(0, &[&[]])).unwrap());
        assert_eq!(one.matches("->").count(), 0);
        assert_eq!(one.matches("label=").count(), 1);

        let chain = export_dot(&to_lattice(&fam(2, &[&[], &[1], &[1, 2]])).unwrap());
        assert!(chain.contains("  n0 -> n1;\n  n1 -> n2;\n"));
        assert_eq!(chain.matches("->").count(), 2);

        let fig = export_dot(&to_lattice(&two_atoms()).unwrap());
        assert_eq!(fig.matches("label=").count(), 7);
        assert_eq!(fig.matches("->").count(), 9);
        assert_eq!(fig.matches("fillcolor").count(), 1);
        assert!(fig.contains("n0 [label=\"{}\", style=filled"));
    }
}
