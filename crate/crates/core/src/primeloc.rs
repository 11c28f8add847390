//! Prime ideals of the representation ring and exact localization.
//!
//! A prime of `Z[G-hat]` is specified constructively: an evaluation element
//! `g`, a residual characteristic `p` (zero, or a prime not dividing
//! `ord(g)`), and — for positive characteristic — an irreducible factor of
//! the `ord(g)`-th cyclotomic polynomial mod `p` cutting out the residue
//! field.  Membership is then one exact evaluation: a virtual
//! representation lies in the ideal when its character value at `g`
//! vanishes (in the cyclotomic field for `p = 0`, in `F_p[x]/(pi)`
//! otherwise).
//!
//! On top of membership sit the support computation (with a verification
//! pass), the minimal primes below a given prime, exact zero- and
//! equality-decisions for localized fractions, the descent report
//! identifying the localization with one over the support subgroup, and
//! the vanishing predicate for localized restrictions.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::exactnum::cyclotomic::{gcd_u64, CyclotomicNumber};
use crate::exactnum::matrix::{lattice_kernel, IntegerMatrix};
use crate::exactnum::modpoly::{
    cyclotomic_factor_set, factor_cyclotomic_mod_p, is_prime_u64, multiplicative_order,
    ModPolynomial,
};
use crate::grouprep::rep::restrict_character;
use crate::grouprep::{
    FiniteAbelianGroup, GroupElement, Subgroup, SubgroupIsomorphism, VirtualRep,
};

/// Errors from prime construction and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeError {
    /// The residual characteristic is neither zero nor prime.
    NotPrime(u64),
    /// The characteristic divides the order of the evaluation element, so
    /// roots of unity of that order collapse in the residue field.
    CharacteristicDividesOrder { p: u64, order: u64 },
    /// A residue prime was supplied for characteristic zero.
    UnexpectedResiduePrime,
    /// Characteristic `p > 0` needs a residue prime.
    MissingResiduePrime,
    /// The residue prime is not a monic irreducible factor of the right
    /// cyclotomic polynomial mod p.
    InvalidResiduePrime,
    /// The support verification pass failed; the spec is inconsistent.
    SupportVerificationFailed,
    /// A denominator was drawn from inside the ideal.
    DenominatorInIdeal,
}

impl fmt::Display for PrimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeError::NotPrime(p) => write!(f, "{p} is neither zero nor prime"),
            PrimeError::CharacteristicDividesOrder { p, order } => {
                write!(f, "characteristic {p} divides the element order {order}")
            }
            PrimeError::UnexpectedResiduePrime => {
                write!(f, "characteristic zero takes no residue prime")
            }
            PrimeError::MissingResiduePrime => {
                write!(f, "positive characteristic needs a residue prime")
            }
            PrimeError::InvalidResiduePrime => {
                write!(f, "residue prime is not an irreducible factor of the cyclotomic polynomial")
            }
            PrimeError::SupportVerificationFailed => {
                write!(f, "support verification failed: the prime is inconsistent")
            }
            PrimeError::DenominatorInIdeal => {
                write!(f, "denominator lies in the prime ideal")
            }
        }
    }
}

/// A constructively specified prime ideal of the representation ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealSpec {
    group: FiniteAbelianGroup,
    element: GroupElement,
    characteristic: u64,
    residue_prime: Option<ModPolynomial>,
}

impl PrimeIdealSpec {
    /// The characteristic-zero prime at `g`: characters vanishing at `g`.
    pub fn characteristic_zero(group: &FiniteAbelianGroup, element: &GroupElement) -> Self {
        // Range-check the element against the group.
        let element = group.element(element.residues());
        PrimeIdealSpec {
            group: group.clone(),
            element,
            characteristic: 0,
            residue_prime: None,
        }
    }

    /// A prime with the given characteristic and residue prime; `p = 0`
    /// must come with no residue prime, `p > 0` with a monic irreducible
    /// factor of the `ord(g)`-th cyclotomic polynomial mod p.
    pub fn new(
        group: &FiniteAbelianGroup,
        element: &GroupElement,
        p: u64,
        residue_prime: Option<ModPolynomial>,
    ) -> Result<Self, PrimeError> {
        let element = group.element(element.residues());
        if p == 0 {
            if residue_prime.is_some() {
                return Err(PrimeError::UnexpectedResiduePrime);
            }
            return Ok(Self::characteristic_zero(group, &element));
        }
        if !is_prime_u64(p) {
            return Err(PrimeError::NotPrime(p));
        }
        let order = group.element_order(&element);
        if order % p == 0 {
            return Err(PrimeError::CharacteristicDividesOrder { p, order });
        }
        let Some(pi) = residue_prime else {
            return Err(PrimeError::MissingResiduePrime);
        };
        if pi.modulus() != p
            || !pi.is_monic()
            || pi.degree() != Some(multiplicative_order(p, order) as usize)
        {
            return Err(PrimeError::InvalidResiduePrime);
        }
        // A monic divisor of the expected degree is automatically one of
        // the irreducible factors; still, check divisibility explicitly.
        let full = cyclotomic_factor_set(order, p)
            .map_err(|_| PrimeError::InvalidResiduePrime)?;
        if !full.contains(&pi) {
            return Err(PrimeError::InvalidResiduePrime);
        }
        Ok(PrimeIdealSpec {
            group: group.clone(),
            element,
            characteristic: p,
            residue_prime: Some(pi),
        })
    }

    /// A prime at `g` in characteristic `p`, taking the canonical
    /// (lexicographically least) irreducible factor as residue prime.
    pub fn with_canonical_residue(
        group: &FiniteAbelianGroup,
        element: &GroupElement,
        p: u64,
    ) -> Result<Self, PrimeError> {
        if p == 0 {
            return Ok(Self::characteristic_zero(group, element));
        }
        if !is_prime_u64(p) {
            return Err(PrimeError::NotPrime(p));
        }
        let order = group.element_order(&group.element(element.residues()));
        if order % p == 0 {
            return Err(PrimeError::CharacteristicDividesOrder { p, order });
        }
        let pi = factor_cyclotomic_mod_p(order, p).map_err(|_| PrimeError::InvalidResiduePrime)?;
        Self::new(group, element, p, Some(pi))
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    /// Zero, or the residual prime p.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn residue_prime(&self) -> Option<&ModPolynomial> {
        self.residue_prime.as_ref()
    }

    pub fn element_order(&self) -> u64 {
        self.group.element_order(&self.element)
    }

    /// Ideal membership: does the character value of `v` at the evaluation
    /// element vanish (exactly, or in the residue field)?
    pub fn contains(&self, v: &VirtualRep) -> bool {
        assert_eq!(v.group(), &self.group, "membership needs the same group");
        let value = v.evaluate(&self.element);
        match &self.residue_prime {
            None => value.is_zero(),
            Some(pi) => {
                residue_is_zero(&value, self.element_order(), self.characteristic, pi)
            }
        }
    }

    /// The localization at a prime is local, so units are exactly the
    /// elements outside the ideal.
    pub fn is_unit_localized(&self, v: &VirtualRep) -> bool {
        !self.contains(v)
    }

    /// The support: the cyclic subgroup generated by the evaluation
    /// element, verified — the ideal must pull back from the support's
    /// representation ring and from no proper subgroup of it.
    pub fn support(&self) -> Result<Subgroup, PrimeError> {
        let h = self.group.subgroup_generated(&self.element);
        // Pulls back from the support: the restriction kernel sits inside
        // the ideal.
        for v in restriction_kernel_basis(&self.group, &h) {
            if !self.contains(&v) {
                return Err(PrimeError::SupportVerificationFailed);
            }
        }
        // ... and from no proper subgroup: each one's restriction kernel
        // must stick out.  Subgroups of a cyclic group are one per divisor.
        let m = self.element_order();
        for e in crate::exactnum::cyclotomic::divisors(m) {
            if e == m {
                continue;
            }
            let k = self.group.subgroup_generated(&self.group.multiple(&self.element, m / e));
            let basis = restriction_kernel_basis(&self.group, &k);
            if basis.iter().all(|v| self.contains(v)) {
                return Err(PrimeError::SupportVerificationFailed);
            }
        }
        Ok(h)
    }

    /// Representatives (least residue vector per Galois class) of the
    /// elements whose evaluation kernels — the minimal primes of the ring —
    /// lie inside this ideal.
    pub fn minimal_primes_contained(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for x in galois_class_representatives(&self.group) {
            let basis = evaluation_kernel_basis(&self.group, &x);
            if basis.iter().all(|v| self.contains(v)) {
                out.push(x);
            }
        }
        out
    }

    /// The descent report: the unique prime over the support's own ring,
    /// and a certificate (when it exists) that localizing there changes
    /// nothing.
    pub fn check_support_descent(&self) -> Result<SupportDescentReport, PrimeError> {
        let h = self.support()?;
        let iso = SubgroupIsomorphism::materialize(&h);
        let g_abs = iso.to_abstract(&self.element);
        let subgroup_prime = PrimeIdealSpec::new(
            iso.group(),
            &g_abs,
            self.characteristic,
            self.residue_prime.clone(),
        )?;
        let index = self.group.order() / h.order();
        // The witness: the induction of the unit, whose character value is
        // the index on the support and zero off it.  It certifies the
        // identification when it is a localized unit and kills the
        // restriction kernel; the first condition fails exactly when p
        // divides the index.
        let witness = VirtualRep::one(iso.group()).induce(&iso);
        let unit_witness_outside = self.is_unit_localized(&witness);
        let annihilates_restriction_kernel = restriction_kernel_basis(&self.group, &h)
            .iter()
            .all(|v| (&witness * v).is_zero());
        Ok(SupportDescentReport {
            subgroup_prime,
            index,
            unit_witness_outside,
            annihilates_restriction_kernel,
            certified: unit_witness_outside && annihilates_restriction_kernel,
        })
    }
}

/// Outcome of [`PrimeIdealSpec::check_support_descent`].
#[derive(Debug, Clone)]
pub struct SupportDescentReport {
    /// The unique prime of the support subgroup's ring below the given
    /// one.
    pub subgroup_prime: PrimeIdealSpec,
    /// Index of the support in the ambient group.
    pub index: u64,
    /// The induced-unit witness lies outside the ideal.
    pub unit_witness_outside: bool,
    /// The witness annihilates the kernel of restriction to the support.
    pub annihilates_restriction_kernel: bool,
    /// Both certificate halves hold: the two localizations agree.
    pub certified: bool,
}

/// Does the localized restriction ring vanish?  True exactly when the
/// support is not contained in `k`.
pub fn localized_restriction_vanishes(prime: &PrimeIdealSpec, k: &Subgroup) -> bool {
    assert_eq!(k.ambient(), prime.group(), "subgroup of the wrong group");
    !k.contains(prime.element())
}

/// The same question answered by an explicit module computation: the
/// restriction ring vanishes after localizing iff the kernel of the
/// restriction map is not contained in the prime.  Cross-validates
/// [`localized_restriction_vanishes`] on small groups.
pub fn localized_restriction_vanishes_by_module(prime: &PrimeIdealSpec, k: &Subgroup) -> bool {
    assert_eq!(k.ambient(), prime.group(), "subgroup of the wrong group");
    let basis = restriction_kernel_basis(prime.group(), k);
    basis.iter().any(|v| !prime.contains(v))
}

/// A fraction over the localization at a prime; the denominator is checked
/// to be a unit there.
#[derive(Debug, Clone)]
pub struct LocalizedElement {
    numerator: VirtualRep,
    denominator: VirtualRep,
    prime: PrimeIdealSpec,
}

impl LocalizedElement {
    pub fn new(
        numerator: VirtualRep,
        denominator: VirtualRep,
        prime: &PrimeIdealSpec,
    ) -> Result<Self, PrimeError> {
        assert_eq!(numerator.group(), prime.group(), "numerator over the wrong group");
        assert_eq!(denominator.group(), prime.group(), "denominator over the wrong group");
        if prime.contains(&denominator) {
            return Err(PrimeError::DenominatorInIdeal);
        }
        Ok(LocalizedElement { numerator, denominator, prime: prime.clone() })
    }

    /// `v / 1`.
    pub fn from_rep(v: &VirtualRep, prime: &PrimeIdealSpec) -> Self {
        Self::new(v.clone(), VirtualRep::one(prime.group()), prime)
            .expect("the unit is never inside a prime ideal")
    }

    pub fn numerator(&self) -> &VirtualRep {
        &self.numerator
    }

    pub fn denominator(&self) -> &VirtualRep {
        &self.denominator
    }

    pub fn prime(&self) -> &PrimeIdealSpec {
        &self.prime
    }

    /// Exact zero test: the localization embeds into the product of the
    /// quotient domains by the minimal primes below the prime, and the
    /// image vanishes iff the numerator's character value is exactly zero
    /// at every representative.
    pub fn is_zero(&self) -> bool {
        self.prime
            .minimal_primes_contained()
            .iter()
            .all(|x| self.numerator.evaluate(x).is_zero())
    }

    /// Exact equality via the cross-multiplied difference.
    pub fn equals(&self, other: &LocalizedElement) -> bool {
        assert_eq!(self.prime, other.prime, "equality needs a common prime");
        let diff = &(&self.numerator * &other.denominator)
            - &(&other.numerator * &self.denominator);
        LocalizedElement::new(diff, &self.denominator * &other.denominator, &self.prime)
            .expect("product of units is a unit")
            .is_zero()
    }

    /// Sum of two fractions over the same prime.
    pub fn add(&self, other: &LocalizedElement) -> LocalizedElement {
        assert_eq!(self.prime, other.prime, "sum needs a common prime");
        LocalizedElement::new(
            &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
            &self.prime,
        )
        .expect("product of units is a unit")
    }

    /// Product of two fractions over the same prime.
    pub fn mul(&self, other: &LocalizedElement) -> LocalizedElement {
        assert_eq!(self.prime, other.prime, "product needs a common prime");
        LocalizedElement::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
            &self.prime,
        )
        .expect("product of units is a unit")
    }
}

/// Image of a cyclotomic value in `F_p[x]/(pi)` is zero?  The value must
/// lie in the field of the `m`-th roots of unity; rational coefficients
/// reduce via modular inverse of the denominator (well defined because
/// character values are algebraic integers, so denominators are units mod
/// p in every case this module produces).
fn residue_is_zero(value: &CyclotomicNumber, m: u64, p: u64, pi: &ModPolynomial) -> bool {
    let coeffs = value
        .embedded_at(m)
        .expect("character values live in the field of the element order");
    let p_big = BigInt::from(p);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let den = c.denom().mod_floor(&p_big).to_u64().expect("small residue");
            assert!(den != 0, "denominator must be a unit modulo p");
            let num = c.numer().mod_floor(&p_big).to_u64().expect("small residue");
            (num as u128 * mod_pow(den, p - 2, p) as u128 % p as u128) as u64
        })
        .collect();
    ModPolynomial::new(p, reduced).rem(pi).is_zero()
}

fn mod_pow(base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = (base % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// A lattice basis of the kernel of the restriction map from the ambient
/// ring to the subgroup's ring, as virtual representations.
pub fn restriction_kernel_basis(group: &FiniteAbelianGroup, k: &Subgroup) -> Vec<VirtualRep> {
    let iso = SubgroupIsomorphism::materialize(k);
    let ambient_chars = group.characters();
    let sub_chars = iso.group().characters();
    let index_of: BTreeMap<_, _> =
        sub_chars.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    // 0/1 matrix of the restriction map on character bases.
    let mut m = IntegerMatrix::zero(sub_chars.len(), ambient_chars.len());
    for (j, psi) in ambient_chars.iter().enumerate() {
        let down = restrict_character(group, psi, &iso);
        m.set(index_of[&down], j, BigInt::one());
    }
    lattice_kernel(&m)
        .into_iter()
        .map(|coeffs| {
            VirtualRep::from_pairs(
                group,
                ambient_chars.iter().cloned().zip(coeffs.iter().cloned()),
            )
        })
        .collect()
}

/// A lattice basis of the kernel of evaluation at `x`: the character-value
/// matrix (integer coordinates in the field of `ord(x)`-th roots of unity)
/// followed by a kernel computation.
pub fn evaluation_kernel_basis(group: &FiniteAbelianGroup, x: &GroupElement) -> Vec<VirtualRep> {
    let m_x = group.element_order(x);
    let phi = crate::exactnum::cyclotomic::euler_phi(m_x) as usize;
    let chars = group.characters();
    let mut m = IntegerMatrix::zero(phi, chars.len());
    for (j, psi) in chars.iter().enumerate() {
        let value = group.pairing(psi, x);
        let coords = value.embedded_at(m_x).expect("value lies in the field of ord(x)");
        for (i, c) in coords.iter().enumerate() {
            assert!(c.is_integer(), "roots of unity have integer coordinates");
            m.set(i, j, c.numer().clone());
        }
    }
    lattice_kernel(&m)
        .into_iter()
        .map(|coeffs| {
            VirtualRep::from_pairs(group, chars.iter().cloned().zip(coeffs.iter().cloned()))
        })
        .collect()
}

/// One representative per Galois class of group elements (classes under
/// `x -> k*x`, `k` coprime to the element order), each the least residue
/// vector in its class, listed in ascending order.
pub fn galois_class_representatives(group: &FiniteAbelianGroup) -> Vec<GroupElement> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut reps = Vec::new();
    for x in group.elements() {
        if seen.contains(&x) {
            continue;
        }
        let m = group.element_order(&x);
        let mut class: Vec<GroupElement> = (1..=m)
            .filter(|k| gcd_u64(*k, m) == 1)
            .map(|k| group.multiple(&x, k))
            .collect();
        class.sort();
        // x is the first unseen member in enumeration order, which is also
        // the class minimum because enumeration is ascending.
        reps.push(class.first().expect("classes are nonempty").clone());
        seen.extend(class);
    }
    reps
}
