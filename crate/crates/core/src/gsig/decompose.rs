//! Structural decomposition of a localized signature class.
//!
//! Localizing the representation ring at a prime steers the evaluation of
//! the signature class down one of three roads: with trivial support the
//! class collapses to the plain signature (or merely restricts, when the
//! residual characteristic divides the group order); with support `H` the
//! class concentrates on the components fixed by `H`, grouped into orbits,
//! each carrying the localized fiber class of its normal bundle and an
//! inflation step from the stabilizer's ring to the ring of the quotient
//! acting on the base.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::charseries::TruncatedSeries;
use crate::exactnum::cyclotomic::CyclotomicNumber;
use crate::exactnum::rational::frac;
use crate::grouprep::rep::restrict_character;
use crate::grouprep::{
    FiniteAbelianGroup, GroupElement, QuotientMap, Subgroup, SubgroupIsomorphism,
};
use crate::primeloc::{LocalizedElement, PrimeIdealSpec};

use super::contribution::{component_contribution, fiber_class_point, fiber_class_series};
use super::data::{FixedComponentDescriptor, GManifoldFixedData, NormalPiece};
use super::GsigError;

/// Which road the localization takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionBranch {
    /// Trivial support away from the group order: the localized class is
    /// the plain signature with no equivariant content left.
    Collapse,
    /// Trivial support at a characteristic dividing the group order: the
    /// class only restricts; no further splitting is available.
    Restriction,
    /// Nontrivial support `H`: the class concentrates on the fixed set of
    /// `H` and splits over its component orbits.
    FixedSet,
}

/// One ring change: from the representation ring of the stabilizer to the
/// ring of its quotient by the support, which is what acts on the base
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationStep {
    pub from_factors: Vec<u64>,
    pub to_factors: Vec<u64>,
}

/// One orbit of fixed components in the decomposition.
#[derive(Debug, Clone)]
pub struct ContributionEntry {
    /// Label of the representative component.
    pub label: String,
    /// How many components this orbit accounts for.
    pub orbit_size: u64,
    /// The ring change for the base of this orbit, when the branch splits
    /// over a fixed set.
    pub inflation: Option<InflationStep>,
    /// The exact localized fiber class of the normal bundle, for
    /// point-type components (no cohomology variables).
    pub fiber_class: Option<LocalizedElement>,
    /// The truncated-series fiber class, for components with cohomology
    /// variables.
    pub fiber_series: Option<TruncatedSeries>,
    /// A symbolic stand-in for the untwisted base class of the orbit.
    pub base_token: String,
    /// The numeric contribution of the whole orbit at the requested
    /// evaluation element, when one was supplied.
    pub pairing: Option<CyclotomicNumber>,
}

/// The full report: the prime, the branch taken, and the orbit entries.
#[derive(Debug, Clone)]
pub struct ContributionReport {
    pub prime: PrimeIdealSpec,
    pub branch: DecompositionBranch,
    pub entries: Vec<ContributionEntry>,
}

fn restricted_pieces(
    group: &FiniteAbelianGroup,
    pieces: &[NormalPiece],
    iso: &SubgroupIsomorphism,
) -> Vec<NormalPiece> {
    pieces
        .iter()
        .map(|p| NormalPiece {
            character: restrict_character(group, &p.character, iso),
            rank: p.rank,
            roots: p.roots.clone(),
        })
        .collect()
}

fn inflation_between(
    stabilizer_factors: &[u64],
    ambient: &FiniteAbelianGroup,
    support_members: &[GroupElement],
) -> InflationStep {
    let normal = Subgroup::new(ambient.clone(), support_members.to_vec());
    let q = QuotientMap::quotient(ambient, &normal);
    InflationStep {
        from_factors: stabilizer_factors.to_vec(),
        to_factors: q.group().factors().to_vec(),
    }
}

fn orbit_entry(
    data_group: &FiniteAbelianGroup,
    prime: &PrimeIdealSpec,
    support: &Subgroup,
    rep: &FixedComponentDescriptor,
    orbit_size: u64,
    eval: Option<&GroupElement>,
) -> Result<ContributionEntry, GsigError> {
    let stabilizer = &rep.stabilizer;
    let full = stabilizer.order() == data_group.order();
    let (fiber_class, fiber_series, inflation) = if full {
        let fc = if rep.nvars == 0 {
            Some(fiber_class_point(prime, &rep.pieces)?)
        } else {
            None
        };
        let fs = if rep.nvars > 0 {
            Some(fiber_class_series(
                data_group,
                prime.element(),
                &rep.pieces,
                rep.nvars,
                rep.dim_f,
            )?)
        } else {
            None
        };
        let inf = inflation_between(data_group.factors(), data_group, support.members());
        (fc, fs, Some(inf))
    } else {
        // Work over the stabilizer's own ring: carry the prime and the
        // support through the materialized isomorphism.
        let iso = SubgroupIsomorphism::materialize(stabilizer);
        let abstract_group = iso.group().clone();
        let g_abs = iso.to_abstract(prime.element());
        let sub_prime = PrimeIdealSpec::new(
            &abstract_group,
            &g_abs,
            prime.characteristic(),
            prime.residue_prime().cloned(),
        )?;
        let pieces = restricted_pieces(data_group, &rep.pieces, &iso);
        let fc = if rep.nvars == 0 {
            Some(fiber_class_point(&sub_prime, &pieces)?)
        } else {
            None
        };
        let fs = if rep.nvars > 0 {
            Some(fiber_class_series(
                &abstract_group,
                &g_abs,
                &pieces,
                rep.nvars,
                rep.dim_f,
            )?)
        } else {
            None
        };
        let support_abs: Vec<GroupElement> =
            support.members().iter().map(|m| iso.to_abstract(m)).collect();
        let inf = inflation_between(abstract_group.factors(), &abstract_group, &support_abs);
        (fc, fs, Some(inf))
    };
    let pairing = match eval {
        Some(g) => {
            let one_component = component_contribution(g, rep, 1)?;
            Some(one_component.scale(&frac(orbit_size as i64, 1)))
        }
        None => None,
    };
    Ok(ContributionEntry {
        label: rep.label.clone(),
        orbit_size,
        inflation,
        fiber_class,
        fiber_series,
        base_token: format!("[D_{}]", rep.label),
        pairing,
    })
}

/// Decompose the localized signature class of the given fixed-point data
/// at a prime of its representation ring.  When `eval` names a group
/// element, every entry also carries its orbit's numeric contribution
/// there, so the report stays checkable against the direct evaluation.
pub fn decompose_localized_class(
    data: &GManifoldFixedData,
    prime: &PrimeIdealSpec,
    eval: Option<&GroupElement>,
) -> Result<ContributionReport, GsigError> {
    let group = data.group();
    if prime.group() != group {
        return Err(GsigError::GroupMismatch);
    }
    let support = prime.support()?;
    if support.is_trivial() {
        let p = prime.characteristic();
        let branch = if p == 0 || group.order() % p != 0 {
            DecompositionBranch::Collapse
        } else {
            DecompositionBranch::Restriction
        };
        let mut entries = Vec::new();
        if let Some(list) = data.components_for(&group.trivial_subgroup()) {
            for c in list {
                let pairing = match eval {
                    Some(g) => Some(component_contribution(g, c, 1)?),
                    None => None,
                };
                entries.push(ContributionEntry {
                    label: c.label.clone(),
                    orbit_size: 1,
                    inflation: None,
                    fiber_class: Some(LocalizedElement::from_rep(
                        &crate::grouprep::VirtualRep::one(group),
                        prime,
                    )),
                    fiber_series: None,
                    base_token: format!("[D_{}]", c.label),
                    pairing,
                });
            }
        }
        return Ok(ContributionReport { prime: prime.clone(), branch, entries });
    }
    let Some(list) = data.components_for(&support) else {
        return Err(GsigError::MissingComponents);
    };
    // Group structurally identical descriptors (same everything but the
    // label) into orbit classes.
    let mut classes: BTreeMap<FixedComponentDescriptor, Vec<&FixedComponentDescriptor>> =
        BTreeMap::new();
    for c in list {
        let mut key = c.clone();
        key.label = String::new();
        classes.entry(key).or_default().push(c);
    }
    let mut entries = Vec::new();
    for (_, members) in classes {
        let orbit = group.order() / members[0].stabilizer.order();
        let mut idx = 0usize;
        while idx < members.len() {
            let take = orbit.min((members.len() - idx) as u64);
            entries.push(orbit_entry(group, prime, &support, members[idx], take, eval)?);
            idx += take as usize;
        }
    }
    Ok(ContributionReport {
        prime: prime.clone(),
        branch: DecompositionBranch::FixedSet,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charseries::{angle_factor, IntersectionFunctional, LinearForm};
    use crate::grouprep::VirtualRep;
    use crate::gsig::contribution::{g_signature, sphere_rotation_data};
    use alloc::vec;

    #[test]
    fn mismatched_groups_are_rejected() {
        let data = sphere_rotation_data(2);
        let other = FiniteAbelianGroup::cyclic(3);
        let prime = PrimeIdealSpec::characteristic_zero(&other, &other.element(&[1]));
        assert!(matches!(
            decompose_localized_class(&data, &prime, None),
            Err(GsigError::GroupMismatch)
        ));
    }

    #[test]
    fn sphere_poles_decompose_into_two_point_entries() {
        let data = sphere_rotation_data(6);
        let group = data.group().clone();
        let gen = group.element(&[1]);
        let prime = PrimeIdealSpec::characteristic_zero(&group, &gen);
        let report = decompose_localized_class(&data, &prime, Some(&gen)).unwrap();
        assert_eq!(report.branch, DecompositionBranch::FixedSet);
        assert_eq!(report.entries.len(), 2);
        for entry in &report.entries {
            assert_eq!(entry.orbit_size, 1);
            assert!(entry.fiber_series.is_none());
            let fc = entry.fiber_class.as_ref().unwrap();
            let residue = if entry.label == "north" { 1 } else { 5 };
            let chi = VirtualRep::character(&group, &group.character(&[residue]));
            assert_eq!(fc.numerator(), &(&VirtualRep::one(&group) + &chi));
            assert_eq!(fc.denominator(), &(&VirtualRep::one(&group) - &chi));
            assert_eq!(entry.base_token, format!("[D_{}]", entry.label));
            // The whole group is the stabilizer and the support, so the
            // base keeps no group action at all.
            assert_eq!(
                entry.inflation,
                Some(InflationStep { from_factors: vec![6], to_factors: vec![] })
            );
        }
        // The entry pairings reassemble the direct evaluation.
        let mut total = CyclotomicNumber::zero();
        for entry in &report.entries {
            total = &total + entry.pairing.as_ref().unwrap();
        }
        assert_eq!(total, g_signature(&data, &gen).unwrap());
        assert!(total.is_zero());
    }

    #[test]
    fn no_piece_component_yields_an_inflation_only_entry() {
        let group = FiniteAbelianGroup::cyclic(2);
        // The involution acts trivially: the whole surface is fixed, with
        // no normal directions, modeled without cohomology variables.
        let whole = FixedComponentDescriptor {
            label: String::from("all"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::new(0, 2, []),
            dim_f: 2,
            tangent_roots: vec![LinearForm::zero(0)],
            pieces: vec![],
        };
        let mut map = BTreeMap::new();
        map.insert(group.full_subgroup(), vec![whole]);
        let data = GManifoldFixedData::new(&group, 2, map).unwrap();
        let gen = group.element(&[1]);
        let prime = PrimeIdealSpec::characteristic_zero(&group, &gen);
        let report = decompose_localized_class(&data, &prime, None).unwrap();
        assert_eq!(report.branch, DecompositionBranch::FixedSet);
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        let fc = entry.fiber_class.as_ref().unwrap();
        assert_eq!(fc.numerator(), &VirtualRep::one(&group));
        assert_eq!(fc.denominator(), &VirtualRep::one(&group));
        assert_eq!(
            entry.inflation,
            Some(InflationStep { from_factors: vec![2], to_factors: vec![] })
        );
    }

    #[test]
    fn trivial_support_away_from_the_order_collapses() {
        let group = FiniteAbelianGroup::cyclic(3);
        let point = FixedComponentDescriptor {
            label: String::from("m"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![],
        };
        let mut map = BTreeMap::new();
        map.insert(group.trivial_subgroup(), vec![point]);
        let data = GManifoldFixedData::new(&group, 0, map).unwrap();
        let id = group.identity();
        let prime = PrimeIdealSpec::with_canonical_residue(&group, &id, 5).unwrap();
        let report = decompose_localized_class(&data, &prime, Some(&id)).unwrap();
        assert_eq!(report.branch, DecompositionBranch::Collapse);
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        assert_eq!(entry.orbit_size, 1);
        assert!(entry.inflation.is_none());
        assert!(entry.pairing.as_ref().unwrap().is_one());

        // Characteristic zero at the identity collapses as well.
        let zero = PrimeIdealSpec::characteristic_zero(&group, &id);
        let r0 = decompose_localized_class(&data, &zero, None).unwrap();
        assert_eq!(r0.branch, DecompositionBranch::Collapse);
    }

    #[test]
    fn characteristic_dividing_the_order_only_restricts() {
        let group = FiniteAbelianGroup::cyclic(3);
        let point = FixedComponentDescriptor {
            label: String::from("m"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![],
        };
        let mut map = BTreeMap::new();
        map.insert(group.trivial_subgroup(), vec![point]);
        let data = GManifoldFixedData::new(&group, 0, map).unwrap();
        let id = group.identity();
        let prime = PrimeIdealSpec::with_canonical_residue(&group, &id, 3).unwrap();
        let report = decompose_localized_class(&data, &prime, None).unwrap();
        assert_eq!(report.branch, DecompositionBranch::Restriction);
        assert_eq!(report.entries.len(), 1);
    }

    #[test]
    fn structurally_equal_components_group_into_one_orbit() {
        let group = FiniteAbelianGroup::cyclic(4);
        let h = group.subgroup_generated(&group.element(&[2]));
        let pt = |label: &str| FixedComponentDescriptor {
            label: String::from(label),
            stabilizer: h.clone(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![NormalPiece {
                character: group.character(&[1]),
                rank: 1,
                roots: vec![LinearForm::zero(0)],
            }],
        };
        let mut map = BTreeMap::new();
        map.insert(h.clone(), vec![pt("a"), pt("b")]);
        let data = GManifoldFixedData::new(&group, 2, map).unwrap();
        let x = group.element(&[2]);
        let prime = PrimeIdealSpec::characteristic_zero(&group, &x);
        let report = decompose_localized_class(&data, &prime, None).unwrap();
        assert_eq!(report.branch, DecompositionBranch::FixedSet);
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        assert_eq!(entry.orbit_size, 2);
        // The fiber class lives over the stabilizer's own ring: the
        // two-element group, with the restricted character and the
        // transported prime.
        let fc = entry.fiber_class.as_ref().unwrap();
        let a2 = FiniteAbelianGroup::from_factors(&[2]);
        assert_eq!(fc.prime().group(), &a2);
        let chi = VirtualRep::character(&a2, &a2.character(&[1]));
        assert_eq!(fc.numerator(), &(&VirtualRep::one(&a2) + &chi));
        assert_eq!(fc.denominator(), &(&VirtualRep::one(&a2) - &chi));
        // The support ⟨2⟩ is the whole stabilizer, so the base ring is
        // trivial again.
        assert_eq!(
            entry.inflation,
            Some(InflationStep { from_factors: vec![2], to_factors: vec![] })
        );
    }

    #[test]
    fn series_components_report_the_angle_product() {
        let group = FiniteAbelianGroup::cyclic(3);
        let surface = FixedComponentDescriptor {
            label: String::from("curve"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 1,
            functional: IntersectionFunctional::new(1, 2, [(vec![1], frac(1, 1))]),
            dim_f: 2,
            tangent_roots: vec![LinearForm::variable(1, 0)],
            pieces: vec![NormalPiece {
                character: group.character(&[1]),
                rank: 1,
                roots: vec![LinearForm::variable(1, 0)],
            }],
        };
        let mut map = BTreeMap::new();
        map.insert(group.full_subgroup(), vec![surface]);
        let data = GManifoldFixedData::new(&group, 4, map).unwrap();
        let gen = group.element(&[1]);
        let prime = PrimeIdealSpec::characteristic_zero(&group, &gen);
        let report = decompose_localized_class(&data, &prime, None).unwrap();
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        assert!(entry.fiber_class.is_none());
        let series = entry.fiber_series.as_ref().unwrap();
        let zeta = CyclotomicNumber::root_of_unity(1, 3);
        let expected = angle_factor(&zeta, &LinearForm::variable(1, 0), 2).unwrap();
        assert_eq!(series, &expected);
    }

    #[test]
    fn missing_fixed_set_data_is_reported() {
        let group = FiniteAbelianGroup::cyclic(3);
        let point = FixedComponentDescriptor {
            label: String::from("m"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![],
        };
        let mut map = BTreeMap::new();
        map.insert(group.trivial_subgroup(), vec![point]);
        let data = GManifoldFixedData::new(&group, 0, map).unwrap();
        let gen = group.element(&[1]);
        let prime = PrimeIdealSpec::characteristic_zero(&group, &gen);
        assert!(matches!(
            decompose_localized_class(&data, &prime, None),
            Err(GsigError::MissingComponents)
        ));
    }
}
