//! Finite abelian groups in invariant-factor coordinates.
//!
//! A group is a chain of invariant factors `d_1 | d_2 | ... | d_k`, each at
//! least 2 (`k = 0` is the trivial group); elements and characters are
//! residue vectors against those factors.  Arbitrary direct-product
//! presentations are normalized to invariant factors on construction, so
//! structural equality of groups means isomorphism-as-presented.  The
//! character pairing lands in the cyclotomic field of the group exponent.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactnum::cyclotomic::{gcd_u64, lcm_u64, CyclotomicNumber};

/// Largest supported group order; keeps exhaustive enumerations cheap.
pub const MAX_GROUP_ORDER: u64 = 10_000;

/// A finite abelian group presented by its invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

/// An element of a [`FiniteAbelianGroup`]: componentwise residues.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

}

/// A character of a [`FiniteAbelianGroup`], also stored as a residue
/// vector; the pairing with elements is [`FiniteAbelianGroup::pairing`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualCharacter {
    residues: Vec<u64>,
}

impl DualCharacter {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

}

/// A subgroup stored as its sorted member list, tied to an ambient group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    group: FiniteAbelianGroup,
    members: Vec<GroupElement>,
}

impl FiniteAbelianGroup {
    /// Builds a group from an arbitrary list of cyclic-factor moduli,
    /// normalizing to the invariant-factor chain (factors of 1 are
    /// dropped).  Panics on order 0 factors or order above
    /// [`MAX_GROUP_ORDER`].
    pub fn from_factors(moduli: &[u64]) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "factors must be positive");
        // Collect prime-power exponents per prime, largest first; the j-th
        // largest invariant factor multiplies the j-th largest power of
        // every prime.
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &m in moduli {
            let mut m = m;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    let mut e = 0;
                    while m % p == 0 {
                        m /= p;
                        e += 1;
                    }
                    push_exponent(&mut per_prime, p, e);
                }
                p += 1;
            }
            if m > 1 {
                push_exponent(&mut per_prime, m, 1);
            }
        }
        for (_, exps) in per_prime.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let k = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut descending = vec![1u64; k];
        for (p, exps) in &per_prime {
            for (j, &e) in exps.iter().enumerate() {
                descending[j] *= p.pow(e);
            }
        }
        descending.reverse();
        let group = FiniteAbelianGroup { factors: descending };
        assert!(group.order() <= MAX_GROUP_ORDER, "group order exceeds the supported cap");
        group
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_factors(&[n])
    }

    /// The invariant factors `d_1 | d_2 | ... | d_k`.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of invariant factors.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// The exponent: the largest invariant factor (1 for the trivial
    /// group).
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { residues: vec![0; self.factors.len()] }
    }

    pub fn trivial_character(&self) -> DualCharacter {
        DualCharacter { residues: vec![0; self.factors.len()] }
    }

    /// Checked element constructor.
    pub fn element(&self, residues: &[u64]) -> GroupElement {
        assert_eq!(residues.len(), self.factors.len(), "residue count must match rank");
        for (r, d) in residues.iter().zip(&self.factors) {
            assert!(r < d, "residue out of range");
        }
        GroupElement { residues: residues.to_vec() }
    }

    /// Checked character constructor.
    pub fn character(&self, residues: &[u64]) -> DualCharacter {
        self.element(residues);
        DualCharacter { residues: residues.to_vec() }
    }

    /// All elements, in mixed-radix order with the last coordinate moving
    /// fastest.
    pub fn elements(&self) -> Vec<GroupElement> {
        self.residue_vectors().into_iter().map(|residues| GroupElement { residues }).collect()
    }

    /// All characters, in the same deterministic order as [`elements`].
    ///
    /// [`elements`]: Self::elements
    pub fn characters(&self) -> Vec<DualCharacter> {
        self.residue_vectors().into_iter().map(|residues| DualCharacter { residues }).collect()
    }

    fn residue_vectors(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut current = vec![0u64; self.factors.len()];
        loop {
            out.push(current.clone());
            // Increment as a mixed-radix counter.
            let mut i = self.factors.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                current[i] += 1;
                if current[i] < self.factors[i] {
                    break;
                }
                current[i] = 0;
            }
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.check(a);
        self.check(b);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.factors)
                .map(|((x, y), d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn negate(&self, a: &GroupElement) -> GroupElement {
        self.check(a);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.factors)
                .map(|(x, d)| if *x == 0 { 0 } else { d - x })
                .collect(),
        }
    }

    /// Integer multiple `m * a` (m may be any u64).
    pub fn multiple(&self, a: &GroupElement, m: u64) -> GroupElement {
        self.check(a);
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.factors)
                .map(|(x, d)| ((*x as u128 * m as u128) % *d as u128) as u64)
                .collect(),
        }
    }

    /// Pointwise product of characters (addition of residue vectors).
    pub fn character_mul(&self, a: &DualCharacter, b: &DualCharacter) -> DualCharacter {
        DualCharacter {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.factors)
                .map(|((x, y), d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn character_inverse(&self, a: &DualCharacter) -> DualCharacter {
        DualCharacter {
            residues: a
                .residues
                .iter()
                .zip(&self.factors)
                .map(|(x, d)| if *x == 0 { 0 } else { d - x })
                .collect(),
        }
    }

    /// Order of an element: the lcm of its componentwise orders.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        self.check(a);
        a.residues
            .iter()
            .zip(&self.factors)
            .map(|(x, d)| d / gcd_u64(*x, *d))
            .fold(1, lcm_u64)
    }

    /// The character pairing `chi(g)`, an exact root of unity in the field
    /// of the group exponent.
    pub fn pairing(&self, chi: &DualCharacter, g: &GroupElement) -> CyclotomicNumber {
        self.check(g);
        assert_eq!(chi.residues.len(), self.factors.len(), "character rank mismatch");
        let n = self.exponent();
        if n == 1 {
            return CyclotomicNumber::one();
        }
        let mut acc: u128 = 0;
        for ((a, g), d) in chi.residues.iter().zip(&g.residues).zip(&self.factors) {
            acc = (acc + *a as u128 * *g as u128 * (n / d) as u128) % n as u128;
        }
        CyclotomicNumber::root_of_unity(acc as u64, n)
    }

    /// The exponent of the pairing: `chi(g) = zeta_N^w` for `N` the group
    /// exponent; returns `w` reduced mod `N`.
    pub fn pairing_exponent(&self, chi: &DualCharacter, g: &GroupElement) -> u64 {
        let n = self.exponent();
        if n == 1 {
            return 0;
        }
        let mut acc: u128 = 0;
        for ((a, g), d) in chi.residues.iter().zip(&g.residues).zip(&self.factors) {
            acc = (acc + *a as u128 * *g as u128 * (n / d) as u128) % n as u128;
        }
        acc as u64
    }

    fn check(&self, a: &GroupElement) {
        assert_eq!(a.residues.len(), self.factors.len(), "element rank mismatch");
    }

    /// The cyclic subgroup generated by `g`.
    pub fn subgroup_generated(&self, g: &GroupElement) -> Subgroup {
        let mut members = Vec::new();
        let mut current = self.identity();
        loop {
            members.push(current.clone());
            current = self.add(&current, g);
            if current == self.identity() {
                break;
            }
        }
        members.sort();
        Subgroup { group: self.clone(), members }
    }

    /// The trivial subgroup.
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { group: self.clone(), members: vec![self.identity()] }
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { group: self.clone(), members: self.elements() }
    }

    /// Every cyclic subgroup exactly once, sorted by order then member
    /// list.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        for g in self.elements() {
            let h = self.subgroup_generated(&g);
            seen.insert(h.members);
        }
        let mut out: Vec<Subgroup> = seen
            .into_iter()
            .map(|members| Subgroup { group: self.clone(), members })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        out
    }

    /// Every subgroup (cyclic or not), via closure under joins of cyclic
    /// subgroups; intended for exhaustive checks on small groups.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let elements = self.elements();
        let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        let trivial = vec![self.identity()];
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(members) = queue.pop() {
            for g in &elements {
                let joined = self.join_with_cyclic(&members, g);
                if seen.insert(joined.clone()) {
                    queue.push(joined);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen
            .into_iter()
            .map(|members| Subgroup { group: self.clone(), members })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        out
    }

    /// The subgroup generated by an existing subgroup and one element: the
    /// sumset with the cyclic subgroup of that element.
    fn join_with_cyclic(&self, members: &[GroupElement], g: &GroupElement) -> Vec<GroupElement> {
        let cyc = self.subgroup_generated(g);
        let mut joined: BTreeSet<GroupElement> = BTreeSet::new();
        for h in members {
            for x in &cyc.members {
                joined.insert(self.add(h, x));
            }
        }
        joined.into_iter().collect()
    }
}

fn push_exponent(per_prime: &mut Vec<(u64, Vec<u32>)>, p: u64, e: u32) {
    if let Some((_, exps)) = per_prime.iter_mut().find(|(q, _)| *q == p) {
        exps.push(e);
    } else {
        per_prime.push((p, vec![e]));
    }
}

impl Subgroup {
    /// Builds from explicit members; panics unless the set is closed and
    /// contains the identity.
    pub fn new(group: FiniteAbelianGroup, mut members: Vec<GroupElement>) -> Self {
        members.sort();
        members.dedup();
        let s = Subgroup { group, members };
        assert!(s.contains(&s.group.identity()), "subgroup must contain the identity");
        for a in &s.members {
            for b in &s.members {
                assert!(s.contains(&s.group.add(a, b)), "subgroup must be closed");
            }
        }
        s
    }

    /// The subgroup generated by a set of elements.
    pub fn generated_by(group: &FiniteAbelianGroup, generators: &[GroupElement]) -> Self {
        let mut members = vec![group.identity()];
        for g in generators {
            members = group.join_with_cyclic(&members, g);
        }
        Subgroup { group: group.clone(), members }
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Sorted member list.
    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.members.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn presentations_normalize_to_invariant_factors() {
        assert_eq!(FiniteAbelianGroup::from_factors(&[2, 4, 3]).factors(), &[2, 12]);
        assert_eq!(FiniteAbelianGroup::from_factors(&[6, 4]).factors(), &[2, 12]);
        assert_eq!(FiniteAbelianGroup::from_factors(&[2, 3]).factors(), &[6]);
        assert_eq!(FiniteAbelianGroup::from_factors(&[1, 1]).factors(), &[] as &[u64]);
        assert_eq!(FiniteAbelianGroup::from_factors(&[2, 2]).factors(), &[2, 2]);
        let g = FiniteAbelianGroup::from_factors(&[12, 2, 3]);
        assert_eq!(g.factors(), &[6, 12]);
        assert_eq!(g.order(), 72);
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn element_orders_and_arithmetic() {
        let g = FiniteAbelianGroup::from_factors(&[2, 4]);
        let a = g.element(&[1, 2]);
        assert_eq!(g.element_order(&a), 2);
        assert_eq!(g.element_order(&g.element(&[1, 1])), 4);
        assert_eq!(g.element_order(&g.identity()), 1);
        assert_eq!(g.add(&a, &a), g.identity());
        assert_eq!(g.negate(&g.element(&[0, 3])), g.element(&[0, 1]));
        assert_eq!(g.multiple(&g.element(&[1, 1]), 3), g.element(&[1, 3]));
    }

    #[test]
    fn pairing_matches_the_root_of_unity_definition() {
        let g = FiniteAbelianGroup::cyclic(4);
        let chi = g.character(&[1]);
        let gen = g.element(&[1]);
        assert_eq!(g.pairing(&chi, &gen), CyclotomicNumber::root_of_unity(1, 4));
        // Bimultiplicative in both slots.
        let g2 = FiniteAbelianGroup::from_factors(&[2, 4]);
        for chi in g2.characters() {
            for psi in g2.characters() {
                for x in g2.elements() {
                    let lhs = g2.pairing(&g2.character_mul(&chi, &psi), &x);
                    let rhs = &g2.pairing(&chi, &x) * &g2.pairing(&psi, &x);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = FiniteAbelianGroup::trivial();
        assert_eq!(g.order(), 1);
        let subs = g.cyclic_subgroups();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].is_trivial());
        assert!(g.pairing(&g.trivial_character(), &g.identity()).is_one());
    }

    #[test]
    fn subgroup_counts_of_small_groups() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        assert_eq!(z4.cyclic_subgroups().len(), 3);
        assert_eq!(z4.all_subgroups().len(), 3);
        let klein = FiniteAbelianGroup::from_factors(&[2, 2]);
        assert_eq!(klein.cyclic_subgroups().len(), 4);
        assert_eq!(klein.all_subgroups().len(), 5);
        // Orders of members divide the subgroup order throughout.
        for h in klein.all_subgroups() {
            for m in h.members() {
                assert_eq!(h.order() % klein.element_order(m), 0);
            }
        }
    }

    #[test]
    fn generated_subgroups_are_closed_and_complete() {
        let g = FiniteAbelianGroup::from_factors(&[2, 6]);
        for x in g.elements() {
            let h = g.subgroup_generated(&x);
            assert_eq!(h.order(), g.element_order(&x));
            assert!(h.contains(&g.identity()));
            for a in h.members() {
                for b in h.members() {
                    assert!(h.contains(&g.add(a, b)));
                }
                assert!(h.contains(&g.negate(a)));
            }
        }
    }

    #[test]
    fn character_table_is_unitary() {
        for factors in [vec![3u64], vec![4], vec![2, 2], vec![2, 4]] {
            let g = FiniteAbelianGroup::from_factors(&factors);
            let order = CyclotomicNumber::from_rational(rat(g.order() as i64));
            for chi in g.characters() {
                for psi in g.characters() {
                    let mut sum = CyclotomicNumber::zero();
                    for x in g.elements() {
                        sum = &sum + &(&g.pairing(&chi, &x) * &g.pairing(&psi, &x).conj());
                    }
                    if chi == psi {
                        assert_eq!(sum, order);
                    } else {
                        assert!(sum.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "residue out of range")]
    fn out_of_range_elements_are_rejected() {
        FiniteAbelianGroup::cyclic(3).element(&[3]);
    }
}
