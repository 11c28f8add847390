//! The representation ring of a finite abelian group: integer combinations
//! of characters with convolution product, plus the maps between groups —
//! restriction, induction along a subgroup, inflation along a quotient —
//! and the lambda operations on sums of characters.
//!
//! Everything is exact; evaluation of a virtual representation at a group
//! element is a cyclotomic number.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::cyclotomic::CyclotomicNumber;
use crate::exactnum::rational::Rational;

use super::group::{DualCharacter, FiniteAbelianGroup, GroupElement};
use super::subgroup::{QuotientMap, SubgroupIsomorphism};

/// An integer combination of characters of a fixed group; the concrete
/// model of the representation ring.  Zero coefficients are pruned, so
/// structural equality is equality in the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualRep {
    group: FiniteAbelianGroup,
    coeffs: BTreeMap<DualCharacter, BigInt>,
}

impl VirtualRep {
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        VirtualRep { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// The ring unit: the trivial character with coefficient 1.
    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self::character(group, &group.trivial_character())
    }

    /// A single character with coefficient 1.
    pub fn character(group: &FiniteAbelianGroup, chi: &DualCharacter) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(chi.clone(), BigInt::one());
        VirtualRep { group: group.clone(), coeffs }
    }

    /// The regular representation: every character once.
    pub fn regular(group: &FiniteAbelianGroup) -> Self {
        let mut coeffs = BTreeMap::new();
        for chi in group.characters() {
            coeffs.insert(chi, BigInt::one());
        }
        VirtualRep { group: group.clone(), coeffs }
    }

    /// Builds from explicit (character, coefficient) pairs; repeated
    /// characters accumulate, zeros are pruned.
    pub fn from_pairs(
        group: &FiniteAbelianGroup,
        pairs: impl IntoIterator<Item = (DualCharacter, BigInt)>,
    ) -> Self {
        let mut rep = Self::zero(group);
        for (chi, c) in pairs {
            rep.add_term(&chi, &c);
        }
        rep
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// The stored (character, coefficient) pairs, zeros pruned, in
    /// deterministic character order.
    pub fn terms(&self) -> impl Iterator<Item = (&DualCharacter, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, chi: &DualCharacter) -> BigInt {
        self.coeffs.get(chi).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored characters.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, chi: &DualCharacter, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(chi.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(chi);
        }
    }

    /// The virtual dimension: the sum of coefficients, i.e. evaluation at
    /// the identity.
    pub fn dimension(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Scales every coefficient.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        VirtualRep {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(chi, x)| (chi.clone(), x * c)).collect(),
        }
    }

    /// Evaluates at a group element: the sum of coefficients times
    /// character values, an exact cyclotomic number.
    pub fn evaluate(&self, g: &GroupElement) -> CyclotomicNumber {
        let mut sum = CyclotomicNumber::zero();
        for (chi, c) in &self.coeffs {
            let value = self.group.pairing(chi, g).scale(&Rational::from_integer(c.clone()));
            sum = &sum + &value;
        }
        sum
    }

    /// The coefficient inner product; irreducible characters are an
    /// orthonormal basis, so this is the representation-theoretic inner
    /// product.
    pub fn inner_product(&self, other: &Self) -> BigInt {
        assert_eq!(self.group, other.group, "inner product needs a common group");
        let mut acc = BigInt::zero();
        for (chi, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(chi) {
                acc += c * d;
            }
        }
        acc
    }

    /// Restriction along a materialized subgroup: each character maps to
    /// its restriction, and coefficients combine.
    pub fn restrict(&self, iso: &SubgroupIsomorphism) -> VirtualRep {
        assert_eq!(&self.group, iso.ambient(), "restriction needs the ambient group to match");
        let mut out = VirtualRep::zero(iso.group());
        for (chi, c) in &self.coeffs {
            let restricted = restrict_character(&self.group, chi, iso);
            out.add_term(&restricted, c);
        }
        out
    }

    /// Induction from a materialized subgroup up to its ambient group: a
    /// character goes to the sum of all ambient characters restricting to
    /// it.  Dimension multiplies by the index.
    pub fn induce(&self, iso: &SubgroupIsomorphism) -> VirtualRep {
        assert_eq!(&self.group, iso.group(), "induction starts from the abstract subgroup");
        let ambient = iso.ambient();
        let mut out = VirtualRep::zero(ambient);
        for psi in ambient.characters() {
            let down = restrict_character(ambient, &psi, iso);
            if let Some(c) = self.coeffs.get(&down) {
                out.add_term(&psi, c);
            }
        }
        out
    }

    /// Inflation along a quotient map: characters of the quotient pull
    /// back to characters of the ambient group trivial on the kernel.
    pub fn inflate(&self, q: &QuotientMap) -> VirtualRep {
        assert_eq!(&self.group, q.group(), "inflation starts from the quotient group");
        let ambient = q.ambient();
        let nq = q.group().exponent();
        let mut out = VirtualRep::zero(ambient);
        for (chi, c) in &self.coeffs {
            // The pullback's residue at coordinate i is fixed by its value
            // on the i-th basis element, a d_i-th root of unity.
            let residues: Vec<u64> = (0..ambient.rank())
                .map(|i| {
                    let mut basis = alloc::vec![0u64; ambient.rank()];
                    basis[i] = 1;
                    let e_i = ambient.element(&basis);
                    let w = q.group().pairing_exponent(chi, &q.project(&e_i));
                    let d = ambient.factors()[i];
                    let num = w as u128 * d as u128;
                    assert!(num % nq as u128 == 0, "pullback character must be well defined");
                    ((num / nq as u128) % d as u128) as u64
                })
                .collect();
            out.add_term(&ambient.character(&residues), c);
        }
        out
    }
}

/// Restricts a single ambient character to a materialized subgroup: its
/// abstract residue at coordinate j is read off from the pairing with the
/// j-th generator image, an exact root of unity of order dividing that
/// generator's order.
pub(crate) fn restrict_character(
    ambient: &FiniteAbelianGroup,
    chi: &DualCharacter,
    iso: &SubgroupIsomorphism,
) -> DualCharacter {
    let n = ambient.exponent();
    let residues: Vec<u64> = iso
        .generator_images()
        .iter()
        .zip(iso.group().factors())
        .map(|(h, e)| {
            let w = ambient.pairing_exponent(chi, h);
            let num = w as u128 * *e as u128;
            assert!(num % n as u128 == 0, "restricted character must be well defined");
            ((num / n as u128) % *e as u128) as u64
        })
        .collect();
    iso.group().character(&residues)
}

/// `prod (1 + chi_i)` over a list of characters.
pub fn lambda_total(group: &FiniteAbelianGroup, characters: &[DualCharacter]) -> VirtualRep {
    let mut acc = VirtualRep::one(group);
    for chi in characters {
        let factor = &VirtualRep::one(group) + &VirtualRep::character(group, chi);
        acc = &acc * &factor;
    }
    acc
}

/// `prod (1 - chi_i)` over a list of characters.
pub fn lambda_minus1(group: &FiniteAbelianGroup, characters: &[DualCharacter]) -> VirtualRep {
    let mut acc = VirtualRep::one(group);
    for chi in characters {
        let factor = &VirtualRep::one(group) - &VirtualRep::character(group, chi);
        acc = &acc * &factor;
    }
    acc
}

impl Add for &VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        assert_eq!(self.group, rhs.group, "cannot add over different groups");
        let mut out = self.clone();
        for (chi, c) in &rhs.coeffs {
            out.add_term(chi, c);
        }
        out
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &(-rhs)
    }
}

impl Neg for &VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        VirtualRep {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(chi, c)| (chi.clone(), -c)).collect(),
        }
    }
}

impl Mul for &VirtualRep {
    type Output = VirtualRep;
    fn mul(self, rhs: &VirtualRep) -> VirtualRep {
        assert_eq!(self.group, rhs.group, "cannot multiply over different groups");
        let mut out = VirtualRep::zero(&self.group);
        for (chi, a) in &self.coeffs {
            for (psi, b) in &rhs.coeffs {
                let prod = self.group.character_mul(chi, psi);
                out.add_term(&prod, &(a * b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chi_k(g: &FiniteAbelianGroup, k: u64) -> DualCharacter {
        g.character(&[k])
    }

    #[test]
    fn ring_identities() {
        let g = FiniteAbelianGroup::cyclic(4);
        let one = VirtualRep::one(&g);
        let chi = VirtualRep::character(&g, &chi_k(&g, 1));
        let lhs = &(&one - &chi) * &(&one + &chi);
        let chi2 = VirtualRep::character(&g, &chi_k(&g, 2));
        assert_eq!(lhs, &one - &chi2);
        // Adding zero changes nothing.
        let zero = VirtualRep::zero(&g);
        assert_eq!(&chi + &zero, chi);
    }

    #[test]
    fn the_regular_representation_absorbs_characters() {
        let g = FiniteAbelianGroup::cyclic(3);
        let reg = VirtualRep::regular(&g);
        for chi in g.characters() {
            assert_eq!(&reg * &VirtualRep::character(&g, &chi), reg);
        }
    }

    #[test]
    fn evaluation_basics() {
        for n in [3u64, 4, 5] {
            let g = FiniteAbelianGroup::cyclic(n);
            let reg = VirtualRep::regular(&g);
            assert_eq!(
                reg.evaluate(&g.identity()),
                CyclotomicNumber::from_integer(n as i64)
            );
            for x in g.elements() {
                if x != g.identity() {
                    assert!(reg.evaluate(&x).is_zero(), "the regular character vanishes off 1");
                }
            }
        }
        let g = FiniteAbelianGroup::cyclic(4);
        let chi = VirtualRep::character(&g, &chi_k(&g, 1));
        assert_eq!(chi.evaluate(&g.element(&[1])), CyclotomicNumber::root_of_unity(1, 4));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism() {
        let g = FiniteAbelianGroup::from_factors(&[2, 4]);
        let u = VirtualRep::from_pairs(
            &g,
            vec![
                (g.character(&[1, 0]), BigInt::from(2)),
                (g.character(&[0, 3]), BigInt::from(-1)),
            ],
        );
        let v = VirtualRep::from_pairs(
            &g,
            vec![
                (g.character(&[1, 1]), BigInt::from(1)),
                (g.character(&[0, 2]), BigInt::from(5)),
            ],
        );
        for x in g.elements() {
            assert_eq!(
                (&u * &v).evaluate(&x),
                &u.evaluate(&x) * &v.evaluate(&x)
            );
            assert_eq!(
                (&u + &v).evaluate(&x),
                &u.evaluate(&x) + &v.evaluate(&x)
            );
        }
    }

    #[test]
    fn restriction_examples() {
        let g = FiniteAbelianGroup::cyclic(4);
        let iso = SubgroupIsomorphism::materialize(&g.subgroup_generated(&g.element(&[2])));
        // The unit restricts to the unit.
        assert_eq!(VirtualRep::one(&g).restrict(&iso), VirtualRep::one(iso.group()));
        // The generator character restricts to the nontrivial character.
        let chi = VirtualRep::character(&g, &chi_k(&g, 1));
        assert_eq!(
            chi.restrict(&iso),
            VirtualRep::character(iso.group(), &iso.group().character(&[1]))
        );
        // The regular representation restricts to index-many copies of the
        // regular representation of the subgroup.
        let reg = VirtualRep::regular(&g);
        assert_eq!(reg.restrict(&iso), VirtualRep::regular(iso.group()).scale(&BigInt::from(2)));
    }

    #[test]
    fn induction_examples() {
        // From the trivial subgroup, the unit induces the regular
        // representation.
        let g = FiniteAbelianGroup::cyclic(4);
        let trivial = SubgroupIsomorphism::materialize(&g.trivial_subgroup());
        let one = VirtualRep::one(trivial.group());
        assert_eq!(one.induce(&trivial), VirtualRep::regular(&g));
        // From the index-two subgroup, the nontrivial character induces the
        // two odd characters.
        let iso = SubgroupIsomorphism::materialize(&g.subgroup_generated(&g.element(&[2])));
        let sgn = VirtualRep::character(iso.group(), &iso.group().character(&[1]));
        let expected = &VirtualRep::character(&g, &chi_k(&g, 1))
            + &VirtualRep::character(&g, &chi_k(&g, 3));
        assert_eq!(sgn.induce(&iso), expected);
    }

    #[test]
    fn induced_dimension_scales_by_the_index() {
        let g = FiniteAbelianGroup::from_factors(&[2, 4]);
        for gen in [[1u64, 1], [0, 2], [1, 0]] {
            let iso = SubgroupIsomorphism::materialize(&g.subgroup_generated(&g.element(&gen)));
            let index = BigInt::from(g.order() / iso.group().order());
            let w = VirtualRep::from_pairs(
                iso.group(),
                iso.group()
                    .characters()
                    .into_iter()
                    .enumerate()
                    .map(|(i, chi)| (chi, BigInt::from(i as i64 - 1))),
            );
            assert_eq!(w.induce(&iso).dimension(), w.dimension() * &index);
        }
    }

    #[test]
    fn frobenius_reciprocity_and_the_projection_formula() {
        // Deterministic pseudo-random coefficients over several ambient
        // groups of order up to 16.
        let mut state = 0xDEADBEEFCAFEBABEu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let groups = [
            FiniteAbelianGroup::cyclic(12),
            FiniteAbelianGroup::from_factors(&[2, 4]),
            FiniteAbelianGroup::from_factors(&[4, 4]),
            FiniteAbelianGroup::from_factors(&[2, 2]),
        ];
        for g in &groups {
            for sub in g.cyclic_subgroups() {
                let iso = SubgroupIsomorphism::materialize(&sub);
                for _ in 0..3 {
                    let w = VirtualRep::from_pairs(
                        iso.group(),
                        iso.group()
                            .characters()
                            .into_iter()
                            .map(|chi| (chi, BigInt::from((next() % 5) as i64 - 2))),
                    );
                    let v = VirtualRep::from_pairs(
                        g,
                        g.characters()
                            .into_iter()
                            .map(|chi| (chi, BigInt::from((next() % 5) as i64 - 2))),
                    );
                    // Frobenius reciprocity.
                    assert_eq!(
                        w.induce(&iso).inner_product(&v),
                        w.inner_product(&v.restrict(&iso))
                    );
                    // Projection formula.
                    assert_eq!(
                        (&w * &v.restrict(&iso)).induce(&iso),
                        &w.induce(&iso) * &v
                    );
                }
            }
        }
    }

    #[test]
    fn inflation_examples() {
        let g = FiniteAbelianGroup::cyclic(4);
        let n = g.subgroup_generated(&g.element(&[2]));
        let q = QuotientMap::quotient(&g, &n);
        // The unit inflates to the unit.
        assert_eq!(VirtualRep::one(q.group()).inflate(&q), VirtualRep::one(&g));
        // The nontrivial character of the quotient pulls back to the unique
        // nontrivial character killing the kernel.
        let sgn = VirtualRep::character(q.group(), &q.group().character(&[1]));
        assert_eq!(sgn.inflate(&q), VirtualRep::character(&g, &chi_k(&g, 2)));
    }

    #[test]
    fn inflation_commutes_with_evaluation_and_restricts_back() {
        let g = FiniteAbelianGroup::from_factors(&[2, 4]);
        let mut state = 0x12345678u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for gen in [[1u64, 1], [0, 2], [0, 1]] {
            let n = g.subgroup_generated(&g.element(&gen));
            let q = QuotientMap::quotient(&g, &n);
            let w = VirtualRep::from_pairs(
                q.group(),
                q.group()
                    .characters()
                    .into_iter()
                    .map(|chi| (chi, BigInt::from((next() % 7) as i64 - 3))),
            );
            let lifted = w.inflate(&q);
            for x in g.elements() {
                assert_eq!(lifted.evaluate(&x), w.evaluate(&q.project(&x)));
            }
            // Restricting the lift along the quotient's own image recovers
            // nothing new: pulling back and pushing to the quotient again
            // is the identity on characters of the quotient.
            let again = VirtualRep::from_pairs(
                q.group(),
                lifted.terms().map(|(chi, c)| {
                    // Project each pulled-back character to the quotient by
                    // reading its values on section images.
                    let residues: Vec<u64> = q
                        .group()
                        .factors()
                        .iter()
                        .enumerate()
                        .map(|(j, e)| {
                            let mut basis = vec![0u64; q.group().rank()];
                            basis[j] = 1;
                            let s = q.section(&q.group().element(&basis));
                            let wexp = g.pairing_exponent(chi, &s);
                            let nexp = g.exponent();
                            ((wexp as u128 * *e as u128 / nexp as u128) % *e as u128) as u64
                        })
                        .collect();
                    (q.group().character(&residues), c.clone())
                }),
            );
            assert_eq!(again, w);
        }
    }

    #[test]
    fn lambda_operations() {
        let g = FiniteAbelianGroup::cyclic(4);
        assert_eq!(lambda_minus1(&g, &[]), VirtualRep::one(&g));
        assert_eq!(lambda_total(&g, &[]), VirtualRep::one(&g));
        let chi = chi_k(&g, 1);
        assert_eq!(
            lambda_minus1(&g, &[chi.clone()]),
            &VirtualRep::one(&g) - &VirtualRep::character(&g, &chi)
        );
        // [chi, chi^2]: 1 - chi - chi^2 + chi^3.
        let got = lambda_minus1(&g, &[chi_k(&g, 1), chi_k(&g, 2)]);
        let expected = VirtualRep::from_pairs(
            &g,
            vec![
                (chi_k(&g, 0), BigInt::from(1)),
                (chi_k(&g, 1), BigInt::from(-1)),
                (chi_k(&g, 2), BigInt::from(-1)),
                (chi_k(&g, 3), BigInt::from(1)),
            ],
        );
        assert_eq!(got, expected);
        // lambda_total of the same list.
        let tot = lambda_total(&g, &[chi_k(&g, 1), chi_k(&g, 2)]);
        let expected_tot = VirtualRep::from_pairs(
            &g,
            vec![
                (chi_k(&g, 0), BigInt::from(1)),
                (chi_k(&g, 1), BigInt::from(1)),
                (chi_k(&g, 2), BigInt::from(1)),
                (chi_k(&g, 3), BigInt::from(1)),
            ],
        );
        assert_eq!(tot, expected_tot);
    }

    #[test]
    #[should_panic(expected = "different groups")]
    fn group_mismatch_is_rejected() {
        let a = VirtualRep::one(&FiniteAbelianGroup::cyclic(3));
        let b = VirtualRep::one(&FiniteAbelianGroup::cyclic(4));
        let _ = &a + &b;
    }
}
