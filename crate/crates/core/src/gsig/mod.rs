//! Fixed-point data and the equivariant signature evaluators.
//!
//! The data model carries user-supplied germ data of a smooth action on a
//! closed even-dimensional manifold: per cyclic subgroup, the fixed
//! components with their cohomology models, orientation signs, tangent
//! roots, and normal pieces.  On top of it sit the two payloads — the
//! localized fiber class of a normal bundle (exact fraction or truncated
//! series), and the signature of a group element evaluated through the
//! fixed-point data — plus the decomposition report walking the
//! localization through collapse, restriction, or fixed-set branches, and
//! brute-force oracles (cup-form signatures, Dedekind sums) used to pin
//! the conventions.

mod contribution;
mod data;
mod decompose;
mod oracle;

pub use contribution::{
    component_contribution, fiber_class_point, fiber_class_series, g_signature,
    projective_plane_data, sphere_rotation_data,
};
pub use data::{FixedComponentDescriptor, GManifoldFixedData, NormalPiece};
pub use decompose::{
    decompose_localized_class, ContributionEntry, ContributionReport, DecompositionBranch,
    InflationStep,
};
pub use oracle::{
    cup_form_matrix, dedekind_sum, reciprocity_check, signature_from_cohomology,
};

use alloc::string::String;
use core::fmt;

use crate::primeloc::PrimeError;

/// Errors from fixed-point data validation and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GsigError {
    /// A normal piece's rotation is trivial at the evaluation element —
    /// the hypothesis that the trivial character does not occur fails.
    TrivialRotation,
    /// No component data filed under the needed subgroup (the identity
    /// always has a nonempty fixed set, so its data cannot be omitted).
    MissingComponents,
    /// A descriptor violates a structural invariant; the message says
    /// which.
    InvalidDescriptor(String),
    /// Data and prime (or element) belong to different groups.
    GroupMismatch,
    /// Dedekind sums need coprime arguments.
    NotCoprime { q: u64, n: u64 },
    /// An underlying prime-ideal operation failed.
    Prime(PrimeError),
}

impl fmt::Display for GsigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GsigError::TrivialRotation => {
                write!(f, "a normal piece rotates trivially at the evaluation element")
            }
            GsigError::MissingComponents => {
                write!(f, "no fixed-component data filed under the required subgroup")
            }
            GsigError::InvalidDescriptor(msg) => write!(f, "invalid component descriptor: {msg}"),
            GsigError::GroupMismatch => write!(f, "data and evaluation belong to different groups"),
            GsigError::NotCoprime { q, n } => {
                write!(f, "{q} and {n} are not coprime")
            }
            GsigError::Prime(e) => write!(f, "prime-ideal error: {e}"),
        }
    }
}

impl From<PrimeError> for GsigError {
    fn from(e: PrimeError) -> Self {
        GsigError::Prime(e)
    }
}
