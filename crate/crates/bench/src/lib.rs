//! Fixture families shared by the benchmarks.

use ucfam_core::{enumerate_pure, SetFamily};

/// The power set of `[n]`.
pub fn boolean_lattice(n: u32) -> SetFamily {
    SetFamily::new(n, (0..1u64 << n).map(ucfam_core::MemberSet::from_bits)).unwrap()
}

/// Pure families over `[n]` with the most members.
pub fn largest_pure(n: u32, count: usize) -> Vec<SetFamily> {
    let mut all: Vec<SetFamily> = enumerate_pure(n).unwrap().collect();
    all.sort_by_key(|f| std::cmp::Reverse(f.len()));
    all.truncate(count);
    all
}
