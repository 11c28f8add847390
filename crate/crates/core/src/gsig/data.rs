//! The fixed-point data model: normal pieces, component descriptors, and
//! the per-subgroup filing of germ data.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::charseries::{IntersectionFunctional, LinearForm};
use crate::grouprep::{DualCharacter, FiniteAbelianGroup, Subgroup};

use super::GsigError;

/// One isotypic piece of a normal bundle: the rotation character (of the
/// ambient group — restriction happens where needed), its complex rank,
/// and one Chern root per rank unit, as linear forms in the component's
/// cohomology variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalPiece {
    pub character: DualCharacter,
    pub rank: u32,
    pub roots: Vec<LinearForm>,
}

/// One fixed component: a label, its stabilizer, the orientation sign,
/// the cohomology model (variables of degree two and the intersection
/// numbers), the dimension, the tangent Chern roots, and the normal
/// pieces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FixedComponentDescriptor {
    pub label: String,
    pub stabilizer: Subgroup,
    pub sign: i64,
    pub nvars: usize,
    pub functional: IntersectionFunctional,
    pub dim_f: u32,
    pub tangent_roots: Vec<LinearForm>,
    pub pieces: Vec<NormalPiece>,
}

/// Germ data of an action: the group, the manifold dimension, and the
/// fixed components filed per cyclic subgroup.  Construction validates
/// every structural invariant, so downstream evaluators can trust the
/// shape.
#[derive(Debug, Clone)]
pub struct GManifoldFixedData {
    group: FiniteAbelianGroup,
    dim_m: u32,
    components: BTreeMap<Subgroup, Vec<FixedComponentDescriptor>>,
}

impl GManifoldFixedData {
    pub fn new(
        group: &FiniteAbelianGroup,
        dim_m: u32,
        components: BTreeMap<Subgroup, Vec<FixedComponentDescriptor>>,
    ) -> Result<Self, GsigError> {
        if dim_m % 2 != 0 {
            return Err(GsigError::InvalidDescriptor(format!(
                "manifold dimension {dim_m} is odd"
            )));
        }
        for (h, list) in &components {
            if h.ambient() != group {
                return Err(GsigError::GroupMismatch);
            }
            for c in list {
                validate_descriptor(group, dim_m, h, c)?;
            }
        }
        Ok(GManifoldFixedData { group: group.clone(), dim_m, components })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn dim_m(&self) -> u32 {
        self.dim_m
    }

    /// Components filed under exactly this subgroup, if any.
    pub fn components_for(&self, h: &Subgroup) -> Option<&[FixedComponentDescriptor]> {
        self.components.get(h).map(Vec::as_slice)
    }

    pub fn filed_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.components.keys()
    }
}

fn validate_descriptor(
    group: &FiniteAbelianGroup,
    dim_m: u32,
    filed_under: &Subgroup,
    c: &FixedComponentDescriptor,
) -> Result<(), GsigError> {
    let fail = |msg: String| Err(GsigError::InvalidDescriptor(msg));
    if c.stabilizer.ambient() != group {
        return Err(GsigError::GroupMismatch);
    }
    if !filed_under.members().iter().all(|h| c.stabilizer.contains(h)) {
        return fail(format!(
            "component {:?} is filed under a subgroup its stabilizer does not contain",
            c.label
        ));
    }
    if c.sign != 1 && c.sign != -1 {
        return fail(format!("component {:?} has orientation sign {}", c.label, c.sign));
    }
    if c.dim_f % 2 != 0 {
        return fail(format!("component {:?} has odd dimension {}", c.label, c.dim_f));
    }
    let codim: u32 = 2 * c.pieces.iter().map(|p| p.rank).sum::<u32>();
    if c.dim_f + codim != dim_m {
        return fail(format!(
            "component {:?}: dimension {} plus normal codimension {} misses the manifold dimension {}",
            c.label, c.dim_f, codim, dim_m
        ));
    }
    if c.tangent_roots.len() as u32 != c.dim_f / 2 {
        return fail(format!(
            "component {:?} has {} tangent roots for dimension {}",
            c.label,
            c.tangent_roots.len(),
            c.dim_f
        ));
    }
    if c.functional.nvars() != c.nvars || c.functional.top_degree() != c.dim_f {
        return fail(format!(
            "component {:?}: intersection numbers must live on its variables in its top degree",
            c.label
        ));
    }
    for form in &c.tangent_roots {
        if form.nvars() != c.nvars {
            return fail(format!(
                "component {:?} has a tangent root over the wrong variable list",
                c.label
            ));
        }
    }
    for piece in &c.pieces {
        if piece.rank == 0 {
            return fail(format!("component {:?} has a rank-zero normal piece", c.label));
        }
        if piece.roots.len() != piece.rank as usize {
            return fail(format!(
                "component {:?}: a normal piece of rank {} carries {} roots",
                c.label,
                piece.rank,
                piece.roots.len()
            ));
        }
        for form in &piece.roots {
            if form.nvars() != c.nvars {
                return fail(format!(
                    "component {:?} has a normal root over the wrong variable list",
                    c.label
                ));
            }
        }
        // The rotation must be nontrivial on the subgroup the component
        // is filed under; in particular nothing with normal pieces can
        // be filed under the trivial subgroup.
        let nontrivial = filed_under
            .members()
            .iter()
            .any(|h| !group.pairing(&piece.character, h).is_one());
        if !nontrivial {
            return fail(format!(
                "component {:?}: a normal piece rotates trivially on its filing subgroup",
                c.label
            ));
        }
    }
    Ok(())
}
