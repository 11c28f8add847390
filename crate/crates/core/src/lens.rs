//! Weighted lens spaces and their exact rho vectors.
//!
//! A lens space here is the quotient of the unit sphere in `ℂ^m` by the
//! cyclic group of order `n` acting with weights coprime to `n`.  The
//! module computes the exact rho vector — the family of fixed-point
//! product values of the covering linear action over the nontrivial group
//! elements — together with the classical homotopy and linear-equivalence
//! predicates, and searches for homotopy-equivalent, non-isometric pairs
//! whose rho vectors differ.  Distinct vectors witness distinct
//! signature-operator invariants; nothing is claimed about the converse.

use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::cyclotomic::{gcd_u64, CyclotomicNumber};

/// Errors from lens-space construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LensError {
    /// The order must be at least two.
    OrderTooSmall(u64),
    /// At least one weight is required.
    NoWeights,
    /// Every weight must be a unit modulo the order.
    WeightNotCoprime { q: u64, n: u64 },
}

impl fmt::Display for LensError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LensError::OrderTooSmall(n) => write!(f, "lens-space order {n} is below two"),
            LensError::NoWeights => write!(f, "a lens space needs at least one weight"),
            LensError::WeightNotCoprime { q, n } => {
                write!(f, "weight {q} is not coprime to the order {n}")
            }
        }
    }
}

/// The quotient of the unit sphere in `ℂ^m` by the order-`n` rotation
/// with the given weights: a closed manifold of dimension `2m − 1`.
/// Weights are stored reduced modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LensSpace {
    n: u64,
    weights: Vec<u64>,
}

impl LensSpace {
    pub fn new(n: u64, weights: &[u64]) -> Result<Self, LensError> {
        if n < 2 {
            return Err(LensError::OrderTooSmall(n));
        }
        if weights.is_empty() {
            return Err(LensError::NoWeights);
        }
        let mut reduced = Vec::with_capacity(weights.len());
        for &q in weights {
            if gcd_u64(q % n, n) != 1 {
                return Err(LensError::WeightNotCoprime { q, n });
            }
            reduced.push(q % n);
        }
        Ok(LensSpace { n, weights: reduced })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// The number of complex coordinates upstairs.
    pub fn weight_count(&self) -> usize {
        self.weights.len()
    }

    /// `2m − 1` for `m` weights.
    pub fn dimension(&self) -> u64 {
        2 * self.weights.len() as u64 - 1
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}; ", self.n)?;
        for (i, q) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

/// The exact rho vector: one cyclotomic value for each nontrivial
/// element `k` of the deck group, Galois-equivariantly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoVector {
    n: u64,
    entries: Vec<CyclotomicNumber>,
}

impl RhoVector {
    pub fn order(&self) -> u64 {
        self.n
    }

    /// The value at `k`, for `1 ≤ k ≤ n − 1`.
    pub fn entry(&self, k: u64) -> &CyclotomicNumber {
        assert!(k >= 1 && k < self.n, "rho entries live at 1..n-1");
        &self.entries[(k - 1) as usize]
    }

    /// All `(k, value)` pairs in increasing `k`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, &CyclotomicNumber)> {
        self.entries.iter().enumerate().map(|(i, v)| (i as u64 + 1, v))
    }
}

/// The rho vector of a lens space: the entry at `k` is
/// `∏_j (1 + ζ^{k·q_j}) / (1 − ζ^{k·q_j})` with `ζ = ζ_n` — the
/// fixed-point defect of the element `k` of the covering rotation.  The
/// exponents are nonzero mod `n` because the weights are units, so every
/// denominator is invertible.
pub fn rho_vector(l: &LensSpace) -> RhoVector {
    let n = l.order();
    let mut entries = Vec::with_capacity((n - 1) as usize);
    for k in 1..n {
        let mut acc = CyclotomicNumber::one();
        for &q in l.weights() {
            let zeta = CyclotomicNumber::root_of_unity((k * q) % n, n);
            let factor = (&CyclotomicNumber::one() + &zeta)
                .div(&(&CyclotomicNumber::one() - &zeta))
                .expect("k·q is a unit multiple of k, nonzero mod n");
            acc = &acc * &factor;
        }
        entries.push(acc);
    }
    RhoVector { n, entries }
}

fn units(n: u64) -> impl Iterator<Item = u64> {
    (1..n).filter(move |&u| gcd_u64(u, n) == 1)
}

fn product_mod(weights: &[u64], n: u64) -> u64 {
    weights.iter().fold(1u64, |acc, &q| (acc * q) % n)
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    base %= n;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        exp >>= 1;
    }
    acc
}

/// Classical homotopy classification: spaces of the same order and
/// dimension are homotopy equivalent exactly when the weight products
/// agree up to a sign and an `m`-th power of a unit mod `n`.  Order or
/// dimension mismatch is simply `false`.
pub fn homotopy_equivalent(l: &LensSpace, r: &LensSpace) -> bool {
    if l.order() != r.order() || l.weight_count() != r.weight_count() {
        return false;
    }
    let n = l.order();
    let m = l.weight_count() as u64;
    let pl = product_mod(l.weights(), n);
    let pr = product_mod(r.weights(), n);
    units(n).any(|c| {
        let scaled = pow_mod(c, m, n) * pr % n;
        scaled == pl || (n - scaled) % n == pl
    })
}

/// The canonical form of a weight multiset under per-weight signs: each
/// weight replaced by the smaller of `q` and `n − q`, sorted.
fn signless_sorted(weights: &[u64], n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = weights.iter().map(|&q| q.min(n - q)).collect();
    out.sort_unstable();
    out
}

/// Linear equivalence: the weight multisets agree up to a permutation,
/// individual signs, and simultaneous scaling by a unit mod `n`.  Signs
/// and permutation are absorbed by comparing sign-canonical sorted
/// multisets; the unit is searched exhaustively.
pub fn isometric(l: &LensSpace, r: &LensSpace) -> bool {
    if l.order() != r.order() || l.weight_count() != r.weight_count() {
        return false;
    }
    let n = l.order();
    let target = signless_sorted(r.weights(), n);
    units(n).any(|u| {
        let scaled: Vec<u64> = l.weights().iter().map(|&q| u * q % n).collect();
        signless_sorted(&scaled, n) == target
    })
}

/// A witness pair from the search: homotopy equivalent, not isometric,
/// with rho vectors differing first at `first_k` by the recorded exact
/// difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExoticPair {
    pub left: LensSpace,
    pub right: LensSpace,
    pub first_k: u64,
    pub difference: CyclotomicNumber,
}

/// The search at a single order `n`: enumerate the classical family
/// `L(n; q_1, …, q_m, 1)` over unit weight tuples, keep one
/// representative per isometry class, and report every pair of classes
/// that is homotopy equivalent with distinct rho vectors.  Pure and
/// deterministic, so searches over different orders can run on separate
/// threads and merge in order.
pub fn exotic_pairs_for_order(n: u64, m: usize) -> Vec<ExoticPair> {
    assert!(n >= 2, "lens spaces need order at least two");
    assert!(m >= 1 && m <= 4, "the search is desk scale: 1 ≤ m ≤ 4");
    // All unit tuples of length m, lexicographically.
    let unit_list: Vec<u64> = units(n).collect();
    let mut tuples: Vec<Vec<u64>> = alloc::vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for t in &tuples {
            for &u in &unit_list {
                let mut s = t.clone();
                s.push(u);
                next.push(s);
            }
        }
        tuples = next;
    }
    // One representative per isometry class, in first-seen order.
    let mut classes: Vec<LensSpace> = Vec::new();
    for t in &tuples {
        let mut weights = t.clone();
        weights.push(1);
        let space = LensSpace::new(n, &weights).expect("unit weights are coprime");
        if !classes.iter().any(|c| isometric(c, &space)) {
            classes.push(space);
        }
    }
    let rhos: Vec<RhoVector> = classes.iter().map(rho_vector).collect();
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if !homotopy_equivalent(&classes[i], &classes[j]) {
                continue;
            }
            let diff = (1..n).find_map(|k| {
                let d = rhos[i].entry(k) - rhos[j].entry(k);
                if d.is_zero() {
                    None
                } else {
                    Some((k, d))
                }
            });
            if let Some((first_k, difference)) = diff {
                out.push(ExoticPair {
                    left: classes[i].clone(),
                    right: classes[j].clone(),
                    first_k,
                    difference,
                });
            }
        }
    }
    out
}

/// The full search over `2 ≤ n ≤ n_max` of the classical family with `m`
/// varying weights (hence dimension `2m + 1`), concatenated in order of
/// `n`.
pub fn find_exotic_pairs(n_max: u64, m: usize) -> Vec<ExoticPair> {
    assert!(n_max <= 200, "the search is desk scale: n ≤ 200");
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(exotic_pairs_for_order(n, m));
    }
    out
}

/// A realization of an isometry: `r` equals `l` with weights scaled by
/// `unit`, individually negated at `flips` positions, and permuted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryWitness {
    pub unit: u64,
    pub flips: u32,
}

/// Search for a unit and per-weight signs (with some permutation)
/// realizing an isometry between `l` and `r`; `flips` counts the negated
/// weights.  Returns `None` when the spaces are not isometric.
pub fn isometry_witness(l: &LensSpace, r: &LensSpace) -> Option<IsometryWitness> {
    if l.order() != r.order() || l.weight_count() != r.weight_count() {
        return None;
    }
    let n = l.order();
    for u in units(n) {
        // Greedy multiset matching: each scaled left weight consumes a
        // right weight equal to it or to its negative.
        let mut remaining: Vec<u64> = r.weights().to_vec();
        let mut flips = 0u32;
        let mut ok = true;
        for &q in l.weights() {
            let plus = u * q % n;
            let minus = (n - plus) % n;
            if let Some(pos) = remaining.iter().position(|&w| w == plus) {
                remaining.swap_remove(pos);
            } else if let Some(pos) = remaining.iter().position(|&w| w == minus) {
                remaining.swap_remove(pos);
                flips += 1;
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            return Some(IsometryWitness { unit: u, flips });
        }
    }
    None
}
