//! Exhaustive generation of union-closed families over small ground sets, and
//! classification up to relabeling of ground elements.
//!
//! A family over `[n]` (n ≤ 6) is identified with its characteristic mask: bit
//! `s` is set when the subset with bit pattern `s` is a member. Streams are
//! produced in ascending mask order, except the generator at n = 6, which
//! streams lazily in a fixed depth-first order.
//!
//! Two independent generators are provided. [`Method::Direct`] tests all
//! `2^(2^n)` candidate masks. [`Method::Generator`] walks the irreducible
//! generating sets (members that are not unions of other members) and closes
//! each one under union.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::family::{MemberSet, SetFamily};
use crate::purify::is_pure;

/// Largest ground size for [`Method::Direct`].
pub const MAX_DIRECT_GROUND: u32 = 4;
/// Largest ground size for [`Method::Generator`].
pub const MAX_GENERATOR_GROUND: u32 = 6;
/// Above this ground size the generator streams in walk order instead of
/// ascending mask order, since the full list no longer fits in memory.
pub const SORTED_GENERATOR_GROUND: u32 = 5;
/// Largest union size accepted by [`canonical_form`].
pub const MAX_CANONICAL_UNION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Direct,
    Generator,
}

/// Characteristic mask of a family over `[n]`, `n ≤ 6`.
pub fn family_mask(family: &SetFamily) -> Result<u64> {
    if family.ground_size() > MAX_GENERATOR_GROUND {
        return Err(Error::GroundTooLarge {
            ground_size: family.ground_size(),
            limit: MAX_GENERATOR_GROUND,
        });
    }
    Ok(family
        .members()
        .iter()
        .fold(0u64, |acc, m| acc | 1u64 << m.bits()))
}

/// The family whose characteristic mask is `mask`.
pub fn family_from_mask(n: u32, mask: u64) -> SetFamily {
    debug_assert!(n <= MAX_GENERATOR_GROUND);
    SetFamily::collect_dedup(n, BitIter(mask).map(|s| MemberSet::from_bits(s as u64)))
}

fn mask_is_union_closed(mask: u64) -> bool {
    let mut outer = mask;
    while outer != 0 {
        let s = outer.trailing_zeros();
        outer &= outer - 1;
        let mut inner = outer;
        while inner != 0 {
            let t = inner.trailing_zeros();
            inner &= inner - 1;
            if mask & (1u64 << (s | t)) == 0 {
                return false;
            }
        }
    }
    true
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t)
    }
}

/// Every union-closed family over `[n]`, each exactly once, in ascending
/// mask order (walk order for the generator at n = 6). With `require_empty`
/// only families containing `∅`.
pub fn enumerate_union_closed(
    n: u32,
    require_empty: bool,
    method: Method,
) -> Result<Box<dyn Iterator<Item = SetFamily> + Send>> {
    let masks = union_closed_masks(n, require_empty, method)?;
    Ok(Box::new(masks.map(move |m| family_from_mask(n, m))))
}

/// As [`enumerate_union_closed`] but yielding characteristic masks.
pub fn union_closed_masks(
    n: u32,
    require_empty: bool,
    method: Method,
) -> Result<Box<dyn Iterator<Item = u64> + Send>> {
    match method {
        Method::Direct => {
            check_ground(n, MAX_DIRECT_GROUND)?;
            let candidates = 1u64 << (1u32 << n);
            Ok(Box::new((0..candidates).filter(move |&mask| {
                (!require_empty || mask & 1 != 0) && mask_is_union_closed(mask)
            })))
        }
        Method::Generator => {
            check_ground(n, MAX_GENERATOR_GROUND)?;
            let closures = Closures::new(n);
            let masks: Box<dyn Iterator<Item = u64> + Send> = if require_empty {
                Box::new(closures.map(|m| m | 1))
            } else {
                Box::new(closures.flat_map(|m| [m, m | 1]))
            };
            if n > SORTED_GENERATOR_GROUND {
                return Ok(masks);
            }
            let mut out: Vec<u64> = masks.collect();
            out.sort_unstable();
            Ok(Box::new(out.into_iter()))
        }
    }
}

// Depth-first walk over irreducible generating sets, adding nonempty subsets
// in increasing bit order. A later subset is never contained in an earlier
// one, so a new generator only has to avoid the current closure. Yields the
// closures, none of which contain ∅.
struct Closures {
    universe: u64,
    // (closure, next candidate subset)
    stack: Vec<(u64, u64)>,
    started: bool,
}

impl Closures {
    fn new(n: u32) -> Self {
        Closures {
            universe: 1u64 << n,
            stack: vec![(0, 1)],
            started: false,
        }
    }
}

impl Iterator for Closures {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.started {
            self.started = true;
            return Some(0);
        }
        while let Some(top) = self.stack.last_mut() {
            let closure = top.0;
            let Some(s) = (top.1..self.universe).find(|&s| closure & (1u64 << s) == 0) else {
                self.stack.pop();
                continue;
            };
            top.1 = s + 1;
            let mut grown = closure | 1u64 << s;
            for t in BitIter(closure) {
                grown |= 1u64 << (t as u64 | s);
            }
            self.stack.push((grown, s + 1));
            return Some(grown);
        }
        None
    }
}

fn check_ground(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::GroundTooLarge {
            ground_size: n,
            limit,
        });
    }
    Ok(())
}

/// Pure union-closed families over `[n]` whose union is all of `[n]`.
pub fn enumerate_pure(n: u32) -> Result<Box<dyn Iterator<Item = SetFamily> + Send>> {
    let method = if n <= MAX_DIRECT_GROUND {
        Method::Direct
    } else {
        Method::Generator
    };
    let full = MemberSet::full(n);
    Ok(Box::new(
        enumerate_union_closed(n, false, method)?.filter(move |f| f.union() == full && is_pure(f)),
    ))
}

/// Relabeling-invariant fingerprint: the least sorted member encoding over
/// every bijection from `∪K` onto `{1, ..., |∪K|}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    union_size: usize,
    members: Vec<u64>,
}

impl CanonicalForm {
    pub fn union_size(&self) -> usize {
        self.union_size
    }

    /// Member bit-vectors of the minimal relabeling, in canonical order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// A representative family over `[union_size]`.
    pub fn to_family(&self) -> SetFamily {
        SetFamily::collect_dedup(
            self.union_size as u32,
            self.members.iter().map(|&b| MemberSet::from_bits(b)),
        )
    }
}

pub fn canonical_form(family: &SetFamily) -> Result<CanonicalForm> {
    let elements: Vec<u32> = family.union().iter().collect();
    let k = elements.len();
    if k > MAX_CANONICAL_UNION {
        return Err(Error::UnionTooLarge {
            size: k,
            cap: MAX_CANONICAL_UNION,
        });
    }
    let mut best: Option<Vec<MemberSet>> = None;
    let mut buf = Vec::with_capacity(family.len());
    for perm in (0..k as u32).permutations(k) {
        buf.clear();
        buf.extend(family.members().iter().map(|m| {
            m.iter().fold(MemberSet::EMPTY, |acc, e| {
                let pos = elements.binary_search(&e).expect("element in union");
                acc.with(perm[pos] + 1)
            })
        }));
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    Ok(CanonicalForm {
        union_size: k,
        members: best
            .unwrap_or_default()
            .into_iter()
            .map(MemberSet::bits)
            .collect(),
    })
}

/// Whether some bijection of the unions maps one member list onto the other.
pub fn hyperisomorphic(f1: &SetFamily, f2: &SetFamily) -> Result<bool> {
    if f1.len() != f2.len() || f1.union().len() != f2.union().len() {
        // Still validate the size cap for both inputs.
        canonical_form(f1)?;
        canonical_form(f2)?;
        return Ok(false);
    }
    Ok(canonical_form(f1)? == canonical_form(f2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u32, lists: &[&[u32]]) -> SetFamily {
        SetFamily::from_lists(n, lists).unwrap()
    }

    fn f1() -> SetFamily {
        fam(2, &[&[], &[1], &[1, 2]])
    }

    fn f2() -> SetFamily {
        fam(2, &[&[], &[2], &[1, 2]])
    }

    #[test]
    fn ground_one_families() {
        let all: Vec<SetFamily> = enumerate_union_closed(1, false, Method::Direct)
            .unwrap()
            .collect();
        assert_eq!(
            all,
            vec![
                SetFamily::empty(1).unwrap(),
                fam(1, &[&[]]),
                fam(1, &[&[1]]),
                fam(1, &[&[], &[1]]),
            ]
        );
        let with_empty: Vec<SetFamily> = enumerate_union_closed(1, true, Method::Direct)
            .unwrap()
            .collect();
        assert_eq!(with_empty, vec![fam(1, &[&[]]), fam(1, &[&[], &[1]])]);
    }

    #[test]
    fn methods_agree_at_small_sizes() {
        for n in 0..=3 {
            for req in [false, true] {
                let d: Vec<u64> = union_closed_masks(n, req, Method::Direct)
                    .unwrap()
                    .collect();
                let g: Vec<u64> = union_closed_masks(n, req, Method::Generator)
                    .unwrap()
                    .collect();
                assert_eq!(d, g, "n={n} require_empty={req}");
            }
        }
    }

    #[test]
    fn ground_six_streams_lazily() {
        let first: Vec<u64> = union_closed_masks(6, true, Method::Generator)
            .unwrap()
            .take(2000)
            .collect();
        assert_eq!(first.len(), 2000);
        let distinct: std::collections::BTreeSet<u64> = first.iter().copied().collect();
        assert_eq!(distinct.len(), first.len());
        for &m in &first {
            assert!(m & 1 == 1 && family_from_mask(6, m).is_union_closed());
        }
    }

    #[test]
    fn ground_limits() {
        assert!(matches!(
            enumerate_union_closed(5, false, Method::Direct),
            Err(Error::GroundTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_union_closed(7, false, Method::Generator),
            Err(Error::GroundTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_pure(7),
            Err(Error::GroundTooLarge { .. })
        ));
    }

    #[test]
    fn pure_examples() {
        let zero: Vec<SetFamily> = enumerate_pure(0).unwrap().collect();
        assert_eq!(zero, vec![SetFamily::empty(0).unwrap(), fam(0, &[&[]])]);
        let two: Vec<SetFamily> = enumerate_pure(2).unwrap().collect();
        assert!(two.contains(&f1()));
        assert!(two.contains(&f2()));
        assert!(!two.contains(&fam(2, &[&[], &[1, 2]])));
        assert!(two.iter().all(|f| f.is_union_closed() && is_pure(f)));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_form(&f1()).unwrap(),
            canonical_form(&f2()).unwrap()
        );
        assert_ne!(
            canonical_form(&f1()).unwrap(),
            canonical_form(&fam(2, &[&[], &[1], &[2], &[1, 2]])).unwrap()
        );
        let bottom = canonical_form(&fam(3, &[&[]])).unwrap();
        assert_eq!(bottom.union_size(), 0);
        assert_eq!(bottom.members(), &[0]);
        assert_eq!(canonical_form(&f1()).unwrap().members(), &[0, 1, 3]);
        // Elements outside the union are ignored.
        assert_eq!(
            canonical_form(&fam(5, &[&[], &[4], &[2, 4]])).unwrap(),
            canonical_form(&f1()).unwrap()
        );
        let wide = SetFamily::new(9, [MemberSet::full(9)]).unwrap();
        assert_eq!(
            canonical_form(&wide),
            Err(Error::UnionTooLarge { size: 9, cap: 8 })
        );
    }

    #[test]
    fn hyperisomorphic_examples() {
        assert!(hyperisomorphic(&f1(), &f2()).unwrap());
        assert!(hyperisomorphic(&f1(), &f1()).unwrap());
        assert!(!hyperisomorphic(&f1(), &fam(2, &[&[1], &[2], &[1, 2]])).unwrap());
    }

    #[test]
    fn mask_round_trip() {
        for mask in union_closed_masks(3, false, Method::Direct).unwrap() {
            let f = family_from_mask(3, mask);
            assert_eq!(family_mask(&f).unwrap(), mask);
        }
    }
}
