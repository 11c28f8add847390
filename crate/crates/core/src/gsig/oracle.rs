//! Brute-force cross-checks: signatures read off a cup-product matrix by
//! congruence diagonalization, and Dedekind cotangent sums with their
//! reciprocity law.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::charseries::IntersectionFunctional;
use crate::exactnum::cyclotomic::{gcd_u64, CyclotomicNumber};
use crate::exactnum::rational::{frac, Rational};

use super::GsigError;

/// The signature (positive minus negative inertia index) of a symmetric
/// rational bilinear form, by symmetric congruence elimination: a
/// nonzero diagonal entry is counted and its row and column cleared; if
/// every remaining diagonal entry vanishes but some off-diagonal entry
/// does not, a row-and-column addition creates a nonzero diagonal entry
/// without changing the congruence class; what remains at the end is the
/// kernel and contributes nothing.
pub fn signature_from_cohomology(form: &[Vec<Rational>]) -> i64 {
    let n = form.len();
    for (i, row) in form.iter().enumerate() {
        assert_eq!(row.len(), n, "the form must be square");
        for (j, v) in row.iter().enumerate() {
            assert_eq!(*v, form[j][i], "the form must be symmetric");
        }
    }
    let mut m: Vec<Vec<Rational>> = form.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut signature = 0i64;
    loop {
        // A nonzero diagonal entry, if any, is a 1×1 block: count it and
        // split it off.
        if let Some(&k) = active.iter().find(|&&k| !m[k][k].is_zero()) {
            signature += if m[k][k].is_positive() { 1 } else { -1 };
            let pivot = m[k][k].clone();
            let others: Vec<usize> = active.iter().copied().filter(|&j| j != k).collect();
            for &i in &others {
                let factor = &m[i][k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for &j in &others {
                    let delta = &factor * &m[k][j];
                    m[i][j] = &m[i][j] - &delta;
                }
                m[i][k] = Rational::zero();
                m[k][i] = Rational::zero();
            }
            active.retain(|&j| j != k);
            continue;
        }
        // All diagonal entries vanish; a nonzero off-diagonal entry c at
        // (i, j) turns into a diagonal 2c after adding row j to row i and
        // column j to column i.
        let mut pair = None;
        'outer: for (a, &i) in active.iter().enumerate() {
            for &j in &active[a + 1..] {
                if !m[i][j].is_zero() {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = pair else {
            break;
        };
        for &k in &active {
            let v = m[j][k].clone();
            m[i][k] = &m[i][k] + &v;
        }
        for &k in &active {
            let v = m[k][j].clone();
            m[k][i] = &m[k][i] + &v;
        }
    }
    signature
}

/// All exponent vectors over `nvars` variables summing to `total`, in
/// lexicographic order.
fn exponent_vectors(nvars: usize, total: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in exponent_vectors(nvars - 1, total - first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The Gram matrix of the cup product on middle-degree monomials, paired
/// through the intersection numbers.  With every variable of degree two,
/// the middle degree is realized only when four divides the top degree;
/// otherwise the matrix is empty and the signature vanishes.
pub fn cup_form_matrix(f: &IntersectionFunctional) -> Vec<Vec<Rational>> {
    let top = f.top_degree();
    if top % 4 != 0 {
        return Vec::new();
    }
    // Middle cohomological degree top/2; each variable has degree two, so
    // the exponents sum to top/4.
    let monos = exponent_vectors(f.nvars(), top / 4);
    monos
        .iter()
        .map(|a| {
            monos
                .iter()
                .map(|b| {
                    let product: Vec<u32> =
                        a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                    f.value(&product)
                })
                .collect()
        })
        .collect()
}

/// The tangent coefficient `(1 + ζ^j) / (1 − ζ^j)` entering the cotangent
/// form of the Dedekind sum.
fn angle_coefficient(j: u64, n: u64) -> CyclotomicNumber {
    let zeta = CyclotomicNumber::root_of_unity(j % n, n);
    (&CyclotomicNumber::one() + &zeta)
        .div(&(&CyclotomicNumber::one() - &zeta))
        .expect("j is nonzero mod n, so 1 − ζ^j is invertible")
}

/// The Dedekind sum `s(q, n)` in cotangent form, computed exactly:
/// `cot(πj/n) = −i·(1 + ζ^j)/(1 − ζ^j)` with `ζ = e^{2πi/n}`, so the
/// product of two cotangents is minus the product of the angle
/// coefficients and
/// `s(q, n) = −(1/4n)·Σ_{j=1}^{n−1} A_j · A_{qj mod n}`.
/// The sum of roots of unity is invariant under conjugation, hence
/// rational.
pub fn dedekind_sum(q: u64, n: u64) -> Result<Rational, GsigError> {
    assert!(n >= 1, "the modulus is positive");
    if gcd_u64(q, n) != 1 {
        return Err(GsigError::NotCoprime { q, n });
    }
    let mut acc = CyclotomicNumber::zero();
    for j in 1..n {
        let term = &angle_coefficient(j, n) * &angle_coefficient((q % n) * j, n);
        acc = &acc + &term;
    }
    let scaled = acc.scale(&frac(-1, 4 * n as i64));
    Ok(scaled
        .to_rational()
        .expect("the cotangent sum is Galois-invariant, hence rational"))
}

/// Dedekind reciprocity: for coprime `q, n ≥ 1`,
/// `s(q, n) + s(n, q) = −1/4 + (q² + n² + 1)/(12·q·n)`.
pub fn reciprocity_check(q: u64, n: u64) -> Result<bool, GsigError> {
    let lhs = &dedekind_sum(q, n)? + &dedekind_sum(n, q)?;
    let qi = BigInt::from(q);
    let ni = BigInt::from(n);
    let rhs = Rational::new(BigInt::from(-1), BigInt::from(4))
        + Rational::new(
            &qi * &qi + &ni * &ni + BigInt::one(),
            BigInt::from(12u32) * &qi * &ni,
        );
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| frac(v, 1)).collect())
            .collect()
    }

    #[test]
    fn diagonal_signatures() {
        assert_eq!(signature_from_cohomology(&rat_matrix(&[&[1]])), 1);
        assert_eq!(signature_from_cohomology(&rat_matrix(&[&[-2]])), -1);
        assert_eq!(
            signature_from_cohomology(&rat_matrix(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]])),
            1
        );
        assert_eq!(signature_from_cohomology(&rat_matrix(&[&[0]])), 0);
        assert_eq!(signature_from_cohomology(&[]), 0);
    }

    #[test]
    fn hyperbolic_plane_has_zero_signature() {
        assert_eq!(signature_from_cohomology(&rat_matrix(&[&[0, 1], &[1, 0]])), 0);
        assert_eq!(signature_from_cohomology(&rat_matrix(&[&[0, 2], &[2, 0]])), 0);
        // A hyperbolic block next to a definite line.
        assert_eq!(
            signature_from_cohomology(&rat_matrix(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])),
            1
        );
    }

    #[test]
    fn e8_form_has_signature_eight() {
        let mut m = vec![vec![frac(0, 1); 8]; 8];
        for i in 0..8 {
            m[i][i] = frac(2, 1);
        }
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
            m[i][j] = frac(-1, 1);
            m[j][i] = frac(-1, 1);
        }
        assert_eq!(signature_from_cohomology(&m), 8);
    }

    #[test]
    fn congruence_moves_preserve_known_signatures() {
        // A dense symmetric matrix with known inertia: x² + 2xy + 2xz
        // diagonalizes to (x+y+z)² − (y − ...)² ...; check against a
        // direct eigen-sign count done by hand.
        // [[1,1,1],[1,2,0],[1,0,0]]: leading minors 1, 1, −2 → signature
        // (2 positive, 1 negative) = 1 by Jacobi's rule.
        let m = rat_matrix(&[&[1, 1, 1], &[1, 2, 0], &[1, 0, 0]]);
        assert_eq!(signature_from_cohomology(&m), 1);
    }

    #[test]
    fn cup_form_of_the_projective_plane_model() {
        let f = IntersectionFunctional::new(1, 4, [(vec![2], frac(3, 2))]);
        let b = cup_form_matrix(&f);
        assert_eq!(b, vec![vec![frac(3, 2)]]);
        assert_eq!(signature_from_cohomology(&b), 1);
    }

    #[test]
    fn cup_form_in_degree_not_divisible_by_four_is_empty() {
        let f = IntersectionFunctional::new(1, 2, []);
        assert!(cup_form_matrix(&f).is_empty());
    }

    #[test]
    fn cup_form_two_variables() {
        // Top degree 8, two degree-2 variables: middle monomials x², xy,
        // y².  Pair everything through x²y² = 1, x⁴ = y⁴ = 0, x³y = xy³ = 0.
        let f = IntersectionFunctional::new(2, 8, [(vec![2, 2], frac(1, 1))]);
        let b = cup_form_matrix(&f);
        // Lex order of exponent vectors summing to 2: [0,2], [1,1], [2,0].
        assert_eq!(
            b,
            rat_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
        );
        assert_eq!(signature_from_cohomology(&b), 1);
    }

    #[test]
    fn small_dedekind_sums() {
        assert_eq!(dedekind_sum(1, 1).unwrap(), frac(0, 1));
        assert_eq!(dedekind_sum(1, 2).unwrap(), frac(0, 1));
        assert_eq!(dedekind_sum(1, 3).unwrap(), frac(1, 18));
        assert_eq!(dedekind_sum(2, 3).unwrap(), frac(-1, 18));
        assert_eq!(dedekind_sum(1, 4).unwrap(), frac(1, 8));
        assert_eq!(dedekind_sum(1, 5).unwrap(), frac(1, 5));
        assert_eq!(dedekind_sum(2, 5).unwrap(), frac(0, 1));
        // s(q, n) only depends on q mod n.
        assert_eq!(dedekind_sum(7, 5).unwrap(), dedekind_sum(2, 5).unwrap());
    }

    #[test]
    fn non_coprime_arguments_are_rejected() {
        assert_eq!(
            dedekind_sum(2, 4).unwrap_err(),
            GsigError::NotCoprime { q: 2, n: 4 }
        );
        assert_eq!(
            reciprocity_check(6, 9).unwrap_err(),
            GsigError::NotCoprime { q: 6, n: 9 }
        );
    }

    #[test]
    fn reciprocity_holds_on_seeded_pairs() {
        // A fixed linear-congruential stream keeps the case list stable.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        let mut checked = 0;
        while checked < 20 {
            let q = next() % 50 + 1;
            let n = next() % 50 + 1;
            if gcd_u64(q, n) != 1 {
                continue;
            }
            assert!(reciprocity_check(q, n).unwrap(), "q = {q}, n = {n}");
            checked += 1;
        }
    }
}
