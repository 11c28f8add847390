//! Finite abelian groups, their character duals, and the representation
//! ring `Z[G-hat]`.
//!
//! [`group`] holds the invariant-factor presentation, elements, characters,
//! subgroup enumeration, and the character pairing.  [`subgroup`] turns a
//! subgroup given as a member list into an abstract group with exact
//! coordinate maps both ways, and materializes quotients.  [`rep`] is the
//! representation ring: virtual characters with restriction, induction,
//! inflation, evaluation, and the lambda operations.

pub mod group;
pub mod rep;
pub mod subgroup;

pub use group::{DualCharacter, FiniteAbelianGroup, GroupElement, Subgroup};
pub use rep::{lambda_minus1, lambda_total, VirtualRep};
pub use subgroup::{QuotientMap, SubgroupIsomorphism};
