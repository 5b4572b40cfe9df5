//! Finite union-closed set families.
//!
//! * [`family`]: families over `[n]`, union-closedness, stars `K^i`, minimal members.
//! * [`purify`]: redundant elements and purification.
//! * [`morphism`]: member maps, homomorphism and isomorphism checks, isomorphism search.
//! * [`hyperiso`]: ground bijections inducing isomorphisms, and their extraction
//!   from an isomorphism between pure families.
//! * [`lattice`]: the inclusion lattice, Hasse diagram export, Frankl abundance.
//! * [`enumerate`]: exhaustive generation and canonical forms up to relabeling.
//!
//! ```
//! use ucfam_core::{find_isomorphisms, extract_hyperisomorphism, SetFamily};
//!
//! let k1 = SetFamily::from_lists(2, &[&[][..], &[1], &[1, 2]]).unwrap();
//! let k2 = SetFamily::from_lists(2, &[&[][..], &[2], &[1, 2]]).unwrap();
//! let h = &find_isomorphisms(&k1, &k2, Some(1))[0];
//! let ground = extract_hyperisomorphism(h).unwrap();
//! assert_eq!(ground.to_string(), "1 -> 2\n2 -> 1\n");
//! ```

pub mod checks;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod hyperiso;
pub mod lattice;
pub mod morphism;
pub mod purify;

pub use enumerate::{
    canonical_form, enumerate_pure, enumerate_union_closed, hyperisomorphic, union_closed_masks,
    CanonicalForm, Method,
};
pub use error::{Error, Result, Side};
pub use family::{GroundElement, MemberSet, SetFamily, MAX_GROUND_SIZE};
pub use hyperiso::{
    brute_force_hyperisomorphism, extract_hyperisomorphism, induced_map, is_hyperisomorphism,
    verify_cardinality_theorem, CardinalityReport, GroundMap, DEFAULT_BRUTE_FORCE_CAP,
};
pub use lattice::{
    element_frequencies, export_dot, frankl_abundance, frankl_abundant_elements, to_lattice,
    verify_lattice_laws, Lattice,
};
pub use morphism::{find_isomorphisms, FamilyMap};
pub use purify::{
    is_pure, is_redundant, purify, reduce, redundant_elements, PurificationTrace, RemovalOrder,
    RemovalPolicy,
};
