//! Coordinates for subgroups and quotients.
//!
//! A [`Subgroup`](super::group::Subgroup) is just a member list; to restrict
//! or induce representations it must become a group in its own right.
//! [`SubgroupIsomorphism`] computes an abstract invariant-factor
//! presentation together with exact coordinate maps in both directions, via
//! two Smith normal forms: one for the lattice the subgroup spans inside
//! the ambient coordinate lattice, one for the quotient presenting the
//! subgroup abstractly.  [`QuotientMap`] does the analogous job for `G/N`,
//! with a projection and a (set-theoretic) section.
//!
//! All arithmetic is exact; every division asserts its own exactness, so a
//! malformed input fails loudly instead of corrupting coordinates.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::matrix::{smith_normal_form, IntegerMatrix};

use super::group::{FiniteAbelianGroup, GroupElement, Subgroup};

/// An isomorphism between a subgroup-as-member-list and an abstract
/// invariant-factor group, with exact maps both ways.
#[derive(Debug, Clone)]
pub struct SubgroupIsomorphism {
    ambient: FiniteAbelianGroup,
    group: FiniteAbelianGroup,
    /// Left transform of the lattice normal form; `y = dtilde^-1 (u x)` is
    /// the coordinate vector of `x` in the subgroup-lattice basis.
    u: IntegerMatrix,
    dtilde: Vec<BigInt>,
    /// Subgroup-lattice basis as columns (ambient coordinates).
    c: IntegerMatrix,
    /// Normal form of the relation matrix presenting the subgroup.
    u_m: IntegerMatrix,
    u_m_inv: IntegerMatrix,
    m_diag: Vec<BigInt>,
    /// Indices of relation divisors exceeding 1: the abstract coordinates.
    kept: Vec<usize>,
}

impl SubgroupIsomorphism {
    /// Materializes a subgroup: computes the abstract group and the
    /// coordinate maps.
    pub fn materialize(subgroup: &Subgroup) -> Self {
        let ambient = subgroup.ambient().clone();
        let k = ambient.rank();
        let members = subgroup.members();
        // Columns: the ambient relation lattice diag(d), then a lift of
        // every member; their span is the full preimage of the subgroup.
        let mut a = IntegerMatrix::zero(k, k + members.len());
        for (i, d) in ambient.factors().iter().enumerate() {
            a.set(i, i, BigInt::from(*d));
        }
        for (j, m) in members.iter().enumerate() {
            for (i, r) in m.residues().iter().enumerate() {
                a.set(i, k + j, BigInt::from(*r));
            }
        }
        let s1 = smith_normal_form(&a);
        let dtilde = s1.diag.clone();
        assert!(dtilde.iter().all(|d| !d.is_zero()), "subgroup lattice has full rank");
        // Basis of the subgroup lattice: c = u^-1 * diag(dtilde).
        let mut c = IntegerMatrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                c.set(i, j, s1.u_inv.entry(i, j) * &dtilde[j]);
            }
        }
        // Relation matrix m = c^-1 * diag(d): row i of u * diag(d) divided
        // exactly by dtilde[i].
        let mut m = IntegerMatrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                let num = s1.u.entry(i, j) * BigInt::from(ambient.factors()[j]);
                let (q, r) = num.div_rem(&dtilde[i]);
                assert!(r.is_zero(), "relation matrix must be integral");
                m.set(i, j, q);
            }
        }
        let s2 = smith_normal_form(&m);
        let m_diag = s2.diag.clone();
        assert!(m_diag.iter().all(|d| d.is_positive()), "relation divisors are positive");
        let total: BigInt = m_diag.iter().product();
        assert_eq!(
            total,
            BigInt::from(members.len()),
            "presented order must match the member count"
        );
        let kept: Vec<usize> = (0..k).filter(|&i| !m_diag[i].is_one()).collect();
        let factors: Vec<u64> =
            kept.iter().map(|&i| m_diag[i].to_u64().expect("small factor")).collect();
        let group = FiniteAbelianGroup::from_factors(&factors);
        SubgroupIsomorphism {
            ambient,
            group,
            u: s1.u,
            dtilde,
            c,
            u_m: s2.u,
            u_m_inv: s2.u_inv,
            m_diag,
            kept,
        }
    }

    /// The ambient group the subgroup lives in.
    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    /// The abstract presentation of the subgroup.
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Maps a member of the subgroup to its abstract coordinates.  Panics
    /// if the element does not lie in the subgroup.
    pub fn to_abstract(&self, g: &GroupElement) -> GroupElement {
        let k = self.ambient.rank();
        let x: Vec<BigInt> = g.residues().iter().map(|&r| BigInt::from(r)).collect();
        assert_eq!(x.len(), k, "element rank mismatch");
        let w = self.u.mul_vec(&x);
        let mut y = Vec::with_capacity(k);
        for (wi, di) in w.iter().zip(&self.dtilde) {
            let (q, r) = wi.div_rem(di);
            assert!(r.is_zero(), "element is not in the subgroup");
            y.push(q);
        }
        let z = self.u_m.mul_vec(&y);
        let residues: Vec<u64> = self
            .kept
            .iter()
            .map(|&i| z[i].mod_floor(&self.m_diag[i]).to_u64().expect("small residue"))
            .collect();
        self.group.element(&residues)
    }

    /// Maps abstract coordinates back to the ambient member they present.
    pub fn from_abstract(&self, z: &GroupElement) -> GroupElement {
        let k = self.ambient.rank();
        assert_eq!(z.residues().len(), self.kept.len(), "abstract rank mismatch");
        let mut full = vec![BigInt::zero(); k];
        for (slot, &r) in self.kept.iter().zip(z.residues()) {
            full[*slot] = BigInt::from(r);
        }
        let y = self.u_m_inv.mul_vec(&full);
        let x = self.c.mul_vec(&y);
        let residues: Vec<u64> = x
            .iter()
            .zip(self.ambient.factors())
            .map(|(xi, d)| xi.mod_floor(&BigInt::from(*d)).to_u64().expect("small residue"))
            .collect();
        self.ambient.element(&residues)
    }

    /// Ambient images of the abstract basis elements, one per invariant
    /// factor of the abstract group.
    pub fn generator_images(&self) -> Vec<GroupElement> {
        (0..self.group.rank())
            .map(|j| {
                let mut residues = vec![0u64; self.group.rank()];
                residues[j] = 1;
                self.from_abstract(&self.group.element(&residues))
            })
            .collect()
    }
}

/// The quotient `G/N` with its projection and a section.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ambient: FiniteAbelianGroup,
    group: FiniteAbelianGroup,
    u_b: IntegerMatrix,
    u_b_inv: IntegerMatrix,
    b_diag: Vec<BigInt>,
    kept: Vec<usize>,
}

impl QuotientMap {
    /// Materializes `G/N` from a normal (here: any) subgroup's member
    /// list.
    pub fn quotient(ambient: &FiniteAbelianGroup, n: &Subgroup) -> Self {
        assert_eq!(n.ambient(), ambient, "subgroup must live in the ambient group");
        let k = ambient.rank();
        let members = n.members();
        let mut b = IntegerMatrix::zero(k, k + members.len());
        for (i, d) in ambient.factors().iter().enumerate() {
            b.set(i, i, BigInt::from(*d));
        }
        for (j, m) in members.iter().enumerate() {
            for (i, r) in m.residues().iter().enumerate() {
                b.set(i, k + j, BigInt::from(*r));
            }
        }
        let s = smith_normal_form(&b);
        let b_diag = s.diag.clone();
        assert!(b_diag.iter().all(|d| d.is_positive()), "quotient divisors are positive");
        let kept: Vec<usize> = (0..k).filter(|&i| !b_diag[i].is_one()).collect();
        let factors: Vec<u64> =
            kept.iter().map(|&i| b_diag[i].to_u64().expect("small factor")).collect();
        let group = FiniteAbelianGroup::from_factors(&factors);
        assert_eq!(
            group.order() * n.order(),
            ambient.order(),
            "quotient order must be the index"
        );
        QuotientMap { ambient: ambient.clone(), group, u_b: s.u, u_b_inv: s.u_inv, b_diag, kept }
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    /// The quotient group.
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// The projection `G -> G/N`.
    pub fn project(&self, g: &GroupElement) -> GroupElement {
        let x: Vec<BigInt> = g.residues().iter().map(|&r| BigInt::from(r)).collect();
        let w = self.u_b.mul_vec(&x);
        let residues: Vec<u64> = self
            .kept
            .iter()
            .map(|&i| w[i].mod_floor(&self.b_diag[i]).to_u64().expect("small residue"))
            .collect();
        self.group.element(&residues)
    }

    /// A section of the projection: a preimage of each coset.
    pub fn section(&self, q: &GroupElement) -> GroupElement {
        let k = self.ambient.rank();
        assert_eq!(q.residues().len(), self.kept.len(), "quotient rank mismatch");
        let mut full = vec![BigInt::zero(); k];
        for (slot, &r) in self.kept.iter().zip(q.residues()) {
            full[*slot] = BigInt::from(r);
        }
        let x = self.u_b_inv.mul_vec(&full);
        let residues: Vec<u64> = x
            .iter()
            .zip(self.ambient.factors())
            .map(|(xi, d)| xi.mod_floor(&BigInt::from(*d)).to_u64().expect("small residue"))
            .collect();
        self.ambient.element(&residues)
    }
}
