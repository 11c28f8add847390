//! The two evaluation payloads: the localized fiber class of a normal
//! bundle, and the signature of a group element computed from fixed-point
//! data.

use alloc::vec::Vec;

use crate::charseries::{angle_factor, integrate, l_class, TruncatedSeries};
use crate::exactnum::cyclotomic::CyclotomicNumber;
use crate::grouprep::{
    lambda_minus1, lambda_total, DualCharacter, FiniteAbelianGroup, GroupElement,
};
use crate::primeloc::{LocalizedElement, PrimeIdealSpec};

use super::data::{FixedComponentDescriptor, GManifoldFixedData, NormalPiece};
use super::GsigError;

/// Characters with multiplicity: each piece contributes its character
/// once per rank unit.
fn characters_with_multiplicity(pieces: &[NormalPiece]) -> Vec<DualCharacter> {
    let mut out = Vec::new();
    for p in pieces {
        for _ in 0..p.rank {
            out.push(p.character.clone());
        }
    }
    out
}

/// The exact fiber class of a normal bundle over a point-type component:
/// the total lambda class of the bundle divided by the alternating one,
/// as a fraction over the localization.  Every character must be
/// nontrivial at the prime's evaluation element — that hypothesis is
/// exactly what keeps the denominator a localized unit.
pub fn fiber_class_point(
    prime: &PrimeIdealSpec,
    pieces: &[NormalPiece],
) -> Result<LocalizedElement, GsigError> {
    let group = prime.group();
    for p in pieces {
        if group.pairing(&p.character, prime.element()).is_one() {
            return Err(GsigError::TrivialRotation);
        }
    }
    let chars = characters_with_multiplicity(pieces);
    let numerator = lambda_total(group, &chars);
    let denominator = lambda_minus1(group, &chars);
    LocalizedElement::new(numerator, denominator, prime).map_err(GsigError::from)
}

/// The series form of the fiber class: the product of angle factors of
/// every Chern root of every piece, with rotations evaluated at `g`.
pub fn fiber_class_series(
    group: &FiniteAbelianGroup,
    g: &GroupElement,
    pieces: &[NormalPiece],
    nvars: usize,
    trunc: u32,
) -> Result<TruncatedSeries, GsigError> {
    let mut acc = TruncatedSeries::one(nvars, trunc);
    for p in pieces {
        let zeta = group.pairing(&p.character, g);
        if zeta.is_one() {
            return Err(GsigError::TrivialRotation);
        }
        for root in &p.roots {
            let factor = angle_factor(&zeta, root, trunc)
                .expect("nontrivial rotation was just checked");
            acc = &acc * &factor;
        }
    }
    Ok(acc)
}

/// Evaluate one component's contribution to the signature of `g`:
/// `normalization · ε · ∫_F [ L(tangent roots) · ∏ angle factors ]` with
/// the truncation at the component's dimension.  The `normalization`
/// argument makes the calibrated global convention visible at call
/// sites; the calibration suite pins it to `+1`.
pub fn component_contribution(
    g: &GroupElement,
    c: &FixedComponentDescriptor,
    normalization: i64,
) -> Result<CyclotomicNumber, GsigError> {
    assert!(
        normalization == 1 || normalization == -1,
        "the normalization is a sign"
    );
    let group = c.stabilizer.ambient();
    let trunc = c.dim_f;
    let tangent = l_class(&c.tangent_roots, c.nvars, trunc);
    let normal = fiber_class_series(group, g, &c.pieces, c.nvars, trunc)?;
    let total = &tangent * &normal;
    let integral = integrate(&total, &c.functional);
    Ok(integral.scale(&crate::exactnum::rational::frac(normalization * c.sign, 1)))
}

/// The signature of `g` evaluated through the fixed-point data: the sum
/// of the contributions of the components fixed by the subgroup `g`
/// generates.  Data absent for a nontrivial subgroup means the fixed set
/// is empty — the action is free there — and the answer is zero; absent
/// identity data is an error, because the identity fixes everything.
pub fn g_signature(
    data: &GManifoldFixedData,
    g: &GroupElement,
) -> Result<CyclotomicNumber, GsigError> {
    let group = data.group();
    let g = group.element(g.residues());
    let h = group.subgroup_generated(&g);
    match data.components_for(&h) {
        Some(list) => {
            let mut acc = CyclotomicNumber::zero();
            for c in list {
                acc = &acc + &component_contribution(&g, c, 1)?;
            }
            Ok(acc)
        }
        None => {
            if h.is_trivial() {
                Err(GsigError::MissingComponents)
            } else {
                Ok(CyclotomicNumber::zero())
            }
        }
    }
}

/// Build the standard two-pole rotation data: the `n`-cycle acting on the
/// two-sphere, each pole an isolated point whose tangent plane rotates by
/// the standard character and its inverse respectively.  Filed under
/// every nontrivial cyclic subgroup, with the whole sphere under the
/// trivial one.
pub fn sphere_rotation_data(n: u64) -> GManifoldFixedData {
    use crate::charseries::{IntersectionFunctional, LinearForm};
    use alloc::collections::BTreeMap;
    use alloc::string::String;
    use alloc::vec;

    let group = FiniteAbelianGroup::cyclic(n);
    let mut components = BTreeMap::new();
    let pole = |label: &str, residue: u64| FixedComponentDescriptor {
        label: String::from(label),
        stabilizer: group.full_subgroup(),
        sign: 1,
        nvars: 0,
        functional: IntersectionFunctional::point(),
        dim_f: 0,
        tangent_roots: vec![],
        pieces: vec![NormalPiece {
            character: group.character(&[residue]),
            rank: 1,
            roots: vec![LinearForm::zero(0)],
        }],
    };
    for h in group.cyclic_subgroups() {
        if h.is_trivial() {
            continue;
        }
        components.insert(h, vec![pole("north", 1), pole("south", n - 1)]);
    }
    // The whole sphere under the trivial subgroup: one variable of degree
    // two, no intersection number survives in the middle (the signature
    // of the sphere vanishes), one tangent root.
    let whole = FixedComponentDescriptor {
        label: String::from("sphere"),
        stabilizer: group.full_subgroup(),
        sign: 1,
        nvars: 1,
        functional: IntersectionFunctional::new(1, 2, []),
        dim_f: 2,
        tangent_roots: vec![LinearForm::variable(1, 0)],
        pieces: vec![],
    };
    components.insert(group.trivial_subgroup(), vec![whole]);
    GManifoldFixedData::new(&group, 2, components).expect("the sphere data is well formed")
}

/// Build the three-point fixed data of the `n`-cycle acting on the
/// complex projective plane with weights `(0, 1, 2)`.  The germ at each
/// fixed point is filed under exactly the cyclic subgroups whose
/// generators rotate every normal line nontrivially; the whole manifold
/// (one variable, two equal tangent roots, the intersection number tuned
/// so the top tangent class integrates to the unit signature) is filed
/// under the trivial subgroup.
pub fn projective_plane_data(n: u64) -> GManifoldFixedData {
    use crate::charseries::{IntersectionFunctional, LinearForm};
    use crate::exactnum::rational::frac;
    use alloc::collections::BTreeMap;
    use alloc::format;
    use alloc::string::String;
    use alloc::vec;

    assert!(n >= 3, "the three-point pattern needs order at least three");
    let group = FiniteAbelianGroup::cyclic(n);
    let mut components = BTreeMap::new();
    // Weights (0, 1, 2): the fixed point with ambient weight w has normal
    // rotations by the differences to the other two weights.
    let weights = [0i64, 1, 2];
    let point = |label: String, diffs: [i64; 2]| {
        let pieces = diffs
            .iter()
            .map(|d| NormalPiece {
                character: group.character(&[d.rem_euclid(n as i64) as u64]),
                rank: 1,
                roots: vec![LinearForm::zero(0)],
            })
            .collect();
        FixedComponentDescriptor {
            label,
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces,
        }
    };
    for h in group.cyclic_subgroups() {
        if h.is_trivial() {
            continue;
        }
        // File the germ only where every rotation is nontrivial on H:
        // the weight differences are ±1, ±2, so H must move both.
        let ok = [1u64, 2].iter().all(|d| {
            h.members()
                .iter()
                .any(|m| !group.pairing(&group.character(&[d % n]), m).is_one())
        });
        if !ok {
            continue;
        }
        let mut list = Vec::new();
        for (i, w) in weights.iter().enumerate() {
            let others: Vec<i64> = weights
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v - w)
                .collect();
            list.push(point(format!("P{i}"), [others[0], others[1]]));
        }
        components.insert(h, list);
    }
    if n % 2 == 0 {
        // The half turn fixes more than three points: the line through
        // the weight-0 and weight-2 coordinates (pointwise, since both
        // scale alike) together with the isolated point of weight 1.
        // The line carries one cohomology variable `u` with ∫ u = 1 and
        // the honest tangent root `2u`; its rank-one normal piece
        // rotates by the weight-difference character 1, with the root
        // coefficient tuned (like the identity model's intersection
        // number) so the line's defect integrates to the unit
        // signature under the frozen angle-factor convention.  The
        // weight-1 point rotates by a half turn in both normal lines,
        // so its own contribution cancels exactly.
        let half = group.element(&[n / 2]);
        let h = group.subgroup_generated(&half);
        let line = FixedComponentDescriptor {
            label: String::from("line02"),
            stabilizer: h.clone(),
            sign: 1,
            nvars: 1,
            functional: IntersectionFunctional::new(1, 2, [(vec![1], frac(1, 1))]),
            dim_f: 2,
            tangent_roots: vec![LinearForm::variable(1, 0).scale(&frac(2, 1))],
            pieces: vec![NormalPiece {
                character: group.character(&[1]),
                rank: 1,
                roots: vec![LinearForm::variable(1, 0).scale(&frac(-2, 1))],
            }],
        };
        let p1 = point(String::from("P1"), [-1, 1]);
        components.insert(h, alloc::vec![line, p1]);
    }
    let whole = FixedComponentDescriptor {
        label: String::from("plane"),
        stabilizer: group.full_subgroup(),
        sign: 1,
        nvars: 1,
        functional: IntersectionFunctional::new(1, 4, [(vec![2], frac(3, 2))]),
        dim_f: 4,
        tangent_roots: vec![LinearForm::variable(1, 0), LinearForm::variable(1, 0)],
        pieces: vec![],
    };
    components.insert(group.trivial_subgroup(), vec![whole]);
    GManifoldFixedData::new(&group, 4, components).expect("the projective-plane data is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charseries::{IntersectionFunctional, LinearForm};
    use crate::exactnum::rational::frac;
    use alloc::collections::BTreeMap;
    use alloc::string::String;
    use alloc::vec;

    fn single_char_piece(group: &FiniteAbelianGroup, residues: &[u64]) -> NormalPiece {
        NormalPiece {
            character: group.character(residues),
            rank: 1,
            roots: vec![LinearForm::zero(0)],
        }
    }

    #[test]
    fn point_fiber_class_single_character() {
        let g = FiniteAbelianGroup::cyclic(4);
        let prime = PrimeIdealSpec::characteristic_zero(&g, &g.element(&[1]));
        let piece = single_char_piece(&g, &[1]);
        let fc = fiber_class_point(&prime, &[piece]).unwrap();
        use crate::grouprep::VirtualRep;
        let chi = VirtualRep::character(&g, &g.character(&[1]));
        assert_eq!(fc.numerator(), &(&VirtualRep::one(&g) + &chi));
        assert_eq!(fc.denominator(), &(&VirtualRep::one(&g) - &chi));
    }

    #[test]
    fn point_fiber_class_empty_and_trivial_rejection() {
        let g = FiniteAbelianGroup::cyclic(3);
        let prime = PrimeIdealSpec::characteristic_zero(&g, &g.element(&[1]));
        let fc = fiber_class_point(&prime, &[]).unwrap();
        use crate::grouprep::VirtualRep;
        assert_eq!(fc.numerator(), &VirtualRep::one(&g));
        assert_eq!(fc.denominator(), &VirtualRep::one(&g));
        // The trivial character is rejected.
        let bad = single_char_piece(&g, &[0]);
        assert_eq!(
            fiber_class_point(&prime, &[bad]).unwrap_err(),
            GsigError::TrivialRotation
        );
    }

    #[test]
    fn point_fiber_class_evaluates_to_the_angle_quotient() {
        let g = FiniteAbelianGroup::cyclic(5);
        let gen = g.element(&[1]);
        let prime = PrimeIdealSpec::characteristic_zero(&g, &gen);
        let piece = single_char_piece(&g, &[1]);
        let fc = fiber_class_point(&prime, &[piece]).unwrap();
        let zeta = CyclotomicNumber::root_of_unity(1, 5);
        let expected = (&CyclotomicNumber::one() + &zeta)
            .div(&(&CyclotomicNumber::one() - &zeta))
            .unwrap();
        let value = fc
            .numerator()
            .evaluate(&gen)
            .div(&fc.denominator().evaluate(&gen))
            .unwrap();
        assert_eq!(value, expected);
    }

    #[test]
    fn point_and_series_fiber_classes_agree() {
        for m in 2u64..=9 {
            let g = FiniteAbelianGroup::cyclic(m);
            for a in 1..m {
                let x = g.element(&[a]);
                let prime = PrimeIdealSpec::characteristic_zero(&g, &x);
                let pieces = vec![single_char_piece(&g, &[1]), single_char_piece(&g, &[m - 1])];
                if pieces
                    .iter()
                    .any(|p| g.pairing(&p.character, &x).is_one())
                {
                    continue;
                }
                let fc = fiber_class_point(&prime, &pieces).unwrap();
                let series = fiber_class_series(&g, &x, &pieces, 0, 0).unwrap();
                let point_value = fc
                    .numerator()
                    .evaluate(&x)
                    .div(&fc.denominator().evaluate(&x))
                    .unwrap();
                assert_eq!(series.constant_term(), point_value, "a = {a}, m = {m}");
            }
        }
    }

    #[test]
    fn isolated_point_with_half_turn_vanishes() {
        let g = FiniteAbelianGroup::cyclic(2);
        let c = FixedComponentDescriptor {
            label: String::from("pt"),
            stabilizer: g.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![single_char_piece(&g, &[1])],
        };
        let v = component_contribution(&g.element(&[1]), &c, 1).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn isolated_point_product_of_constants() {
        let g = FiniteAbelianGroup::cyclic(5);
        let gen = g.element(&[1]);
        let c = FixedComponentDescriptor {
            label: String::from("pt"),
            stabilizer: g.full_subgroup(),
            sign: 1,
            nvars: 0,
            functional: IntersectionFunctional::point(),
            dim_f: 0,
            tangent_roots: vec![],
            pieces: vec![single_char_piece(&g, &[1]), single_char_piece(&g, &[2])],
        };
        let v = component_contribution(&gen, &c, 1).unwrap();
        let zeta = CyclotomicNumber::root_of_unity(1, 5);
        let zeta2 = CyclotomicNumber::root_of_unity(2, 5);
        let expected = (&(&CyclotomicNumber::one() + &zeta)
            * &(&CyclotomicNumber::one() + &zeta2))
            .div(
                &(&(&CyclotomicNumber::one() - &zeta) * &(&CyclotomicNumber::one() - &zeta2)),
            )
            .unwrap();
        assert_eq!(v, expected);
        // The sign flips with the orientation, and with the calibration
        // hook.
        let mut flipped = c.clone();
        flipped.sign = -1;
        assert_eq!(component_contribution(&gen, &flipped, 1).unwrap(), -&expected);
        assert_eq!(component_contribution(&gen, &c, -1).unwrap(), -&expected);
    }

    #[test]
    fn whole_manifold_at_identity_is_the_tangent_integral() {
        let data = projective_plane_data(5);
        let g = data.group().identity();
        let v = g_signature(&data, &g).unwrap();
        assert_eq!(v, CyclotomicNumber::one());
    }

    #[test]
    fn sphere_signatures_vanish() {
        for n in 2u64..=8 {
            let data = sphere_rotation_data(n);
            let group = data.group().clone();
            for g in group.elements() {
                let v = g_signature(&data, &g).unwrap();
                assert!(v.is_zero(), "n = {n}, g = {:?}", g.residues());
            }
        }
    }

    #[test]
    fn projective_plane_signatures_are_one() {
        for n in 3u64..=7 {
            let data = projective_plane_data(n);
            let group = data.group().clone();
            for g in group.elements() {
                let h = group.subgroup_generated(&g);
                if data.components_for(&h).is_none() {
                    continue;
                }
                let v = g_signature(&data, &g).unwrap();
                assert!(v.is_one(), "n = {n}, g = {:?}", g.residues());
            }
        }
    }

    #[test]
    fn free_action_data_gives_zero_off_the_identity() {
        let group = FiniteAbelianGroup::cyclic(3);
        // Only the trivial subgroup carries data: a torus-like surface
        // with zero signature.
        let whole = FixedComponentDescriptor {
            label: String::from("m"),
            stabilizer: group.full_subgroup(),
            sign: 1,
            nvars: 1,
            functional: IntersectionFunctional::new(1, 2, []),
            dim_f: 2,
            tangent_roots: vec![LinearForm::variable(1, 0)],
            pieces: vec![],
        };
        let mut map = BTreeMap::new();
        map.insert(group.trivial_subgroup(), vec![whole]);
        let data = GManifoldFixedData::new(&group, 2, map).unwrap();
        for g in group.elements() {
            let v = g_signature(&data, &g).unwrap();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn missing_identity_data_is_an_error() {
        let group = FiniteAbelianGroup::cyclic(2);
        let data = GManifoldFixedData::new(&group, 2, BTreeMap::new()).unwrap();
        assert_eq!(
            g_signature(&data, &group.identity()).unwrap_err(),
            GsigError::MissingComponents
        );
        // But a nontrivial element sees an empty fixed set: zero.
        assert!(g_signature(&data, &group.element(&[1])).unwrap().is_zero());
    }

    #[test]
    fn signatures_are_galois_equivariant() {
        let data = projective_plane_data(7);
        let group = data.group().clone();
        let g = group.element(&[1]);
        let base = g_signature(&data, &g).unwrap();
        for k in [2u64, 3, 6] {
            let twisted = g_signature(&data, &group.multiple(&g, k)).unwrap();
            assert_eq!(twisted, base.galois(k).unwrap(), "k = {k}");
        }
        // The sphere shows the same symmetry away from the trivial value.
        let sphere = sphere_rotation_data(5);
        let sg = sphere.group().clone();
        let h = sg.element(&[1]);
        let b = g_signature(&sphere, &h).unwrap();
        assert_eq!(g_signature(&sphere, &sg.multiple(&h, 2)).unwrap(), b.galois(2).unwrap());
    }

    #[test]
    fn hirzebruch_calibration_against_the_cup_form() {
        use super::super::oracle::{cup_form_matrix, signature_from_cohomology};
        let data = projective_plane_data(4);
        let sig = g_signature(&data, &data.group().identity()).unwrap();
        let whole = &data.components_for(&data.group().trivial_subgroup()).unwrap()[0];
        let b = cup_form_matrix(&whole.functional);
        let oracle = signature_from_cohomology(&b);
        assert_eq!(sig.to_rational().unwrap(), frac(oracle, 1));
    }
}
