use thiserror::Error;

use crate::family::MemberSet;

/// Which side of a map a precondition failed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Source,
    Target,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Source => f.write_str("source"),
            Side::Target => f.write_str("target"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("member {0} appears more than once")]
    DuplicateMember(MemberSet),
    #[error("element {element} is outside the ground set [1..{ground_size}]")]
    ElementOutOfRange { element: u32, ground_size: u32 },
    #[error("ground size {ground_size} exceeds the supported limit of {limit}")]
    GroundTooLarge { ground_size: u32, limit: u32 },
    #[error("{0} is not a member of the family")]
    NotAMember(MemberSet),
    #[error("element {0} does not occur in any member")]
    ElementNotInUnion(u32),
    #[error("element {0} is not redundant: stripping it merges members")]
    NotRedundant(u32),
    #[error("the source family is not union-closed")]
    SourceNotUnionClosed,
    #[error("the family is not union-closed")]
    NotUnionClosed,
    #[error("the map is not a homomorphism")]
    NotAHomomorphism,
    #[error("the map is not an isomorphism")]
    NotAnIsomorphism,
    #[error("the {0} family is not pure")]
    NotPure(Side),
    #[error("invalid family map: {0}")]
    InvalidMap(String),
    #[error("invalid ground map: {0}")]
    InvalidGroundMap(String),
    #[error("image of member {0} is not a member of the target family")]
    ImageNotInTarget(MemberSet),
    #[error("union of {size} elements exceeds the search cap of {cap}")]
    UnionTooLarge { size: usize, cap: usize },
    #[error("family has {minimal} minimal members; a lattice needs exactly one")]
    NoUniqueBottom { minimal: usize },
    #[error("family has no nonempty member")]
    NoNonemptyMember,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
