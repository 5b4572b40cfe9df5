#![allow(dead_code)]

use itertools::Itertools;
use ucfam_core::{enumerate_pure, enumerate_union_closed, FamilyMap, MemberSet, Method, SetFamily};

pub fn union_closed_up_to(max_n: u32) -> Vec<SetFamily> {
    (0..=max_n)
        .flat_map(|n| enumerate_union_closed(n, false, Method::Direct).unwrap())
        .collect()
}

pub fn pure_up_to(max_n: u32) -> Vec<SetFamily> {
    (0..=max_n)
        .flat_map(|n| enumerate_pure(n).unwrap())
        .collect()
}

/// All member bijections `f1 → f2` that pass `is_isomorphism`, sorted.
pub fn brute_force_isomorphisms(f1: &SetFamily, f2: &SetFamily) -> Vec<FamilyMap> {
    if f1.len() != f2.len() {
        return Vec::new();
    }
    let mut out: Vec<FamilyMap> = (0..f2.len())
        .permutations(f2.len())
        .map(|p| FamilyMap::new(f1.clone(), f2.clone(), p).unwrap())
        .filter(|h| h.is_isomorphism().unwrap())
        .collect();
    out.sort_by(|a, b| a.assignment().cmp(b.assignment()));
    out
}

/// Member maps `A ↦ φ[A]`, each onto its image family. For ground size up to
/// three every `φ: [n] → {drop} ∪ [n]` is used; above that only the identity,
/// single drops, merges `i ↦ j` and transpositions.
pub fn element_induced_maps(f: &SetFamily) -> Vec<FamilyMap> {
    let n = f.ground_size();
    if n == 0 {
        return vec![FamilyMap::identity(f.clone())];
    }
    let identity: Vec<u32> = (1..=n).collect();
    let phis: Vec<Vec<u32>> = if n <= 3 {
        (0..n).map(|_| 0..=n).multi_cartesian_product().collect()
    } else {
        let mut phis = vec![identity.clone()];
        for i in 0..n as usize {
            let mut drop = identity.clone();
            drop[i] = 0;
            phis.push(drop);
            for j in 1..=n {
                if j as usize != i + 1 {
                    let mut merge = identity.clone();
                    merge[i] = j;
                    phis.push(merge);
                }
            }
            for j in i + 1..n as usize {
                let mut swap = identity.clone();
                swap.swap(i, j);
                phis.push(swap);
            }
        }
        phis
    };
    phis.into_iter()
        .map(|phi| {
            let apply = |a: MemberSet| {
                a.iter()
                    .fold(MemberSet::EMPTY, |acc, e| match phi[e as usize - 1] {
                        0 => acc,
                        t => acc.with(t),
                    })
            };
            let image = SetFamily::new(
                f.ground_size(),
                f.members().iter().map(|&a| apply(a)).unique(),
            )
            .unwrap();
            FamilyMap::from_fn(f.clone(), image, apply).unwrap()
        })
        .collect()
}

/// Every total member map between two families.
pub fn all_maps(f1: &SetFamily, f2: &SetFamily) -> Vec<FamilyMap> {
    if f2.is_empty() {
        return if f1.is_empty() {
            vec![FamilyMap::new(f1.clone(), f2.clone(), vec![]).unwrap()]
        } else {
            vec![]
        };
    }
    if f1.is_empty() {
        return vec![FamilyMap::new(f1.clone(), f2.clone(), vec![]).unwrap()];
    }
    (0..f1.len())
        .map(|_| 0..f2.len())
        .multi_cartesian_product()
        .map(|a| FamilyMap::new(f1.clone(), f2.clone(), a).unwrap())
        .collect()
}
