//! Truncated multivariate power series with exact cyclotomic
//! coefficients.
//!
//! Variables stand for formal Chern roots and carry cohomological degree
//! two; truncation is by total cohomological degree, and arithmetic
//! silently discards overflow.  On top of ring arithmetic sit the
//! exponential of a linear form, the tangent factor `ℓ/tanh(ℓ)` with its
//! product over root lists, the angle factor `(1+ζe^ℓ)/(1−ζe^ℓ)` for a
//! root of unity `ζ ≠ 1`, a half-angle identity check relating the angle
//! factor to the hyperbolic cotangent, and evaluation against an
//! intersection functional standing in for the fundamental class.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::cyclotomic::CyclotomicNumber;
use crate::exactnum::rational::{frac, Rational};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Errors from series construction and inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion needs an invertible (nonzero) constant term.
    NonInvertibleConstant,
    /// The angle factor is undefined at the trivial root of unity: the
    /// denominator `1 − ζ` degenerates.
    TrivialRotation,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonInvertibleConstant => {
                write!(f, "series inversion needs a nonzero constant term")
            }
            SeriesError::TrivialRotation => {
                write!(f, "angle factor is undefined at the trivial root of unity")
            }
        }
    }
}

/// A linear form in the series variables with rational coefficients and
/// no constant term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn zero(nvars: usize) -> Self {
        LinearForm { coeffs: vec![Rational::zero(); nvars] }
    }

    /// The `i`-th variable as a form.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut coeffs = vec![Rational::zero(); nvars];
        coeffs[i] = Rational::one();
        LinearForm { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LinearForm { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &LinearForm) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "linear forms over different variable lists");
        LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        LinearForm { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    /// The form as a truncated series (its monomials are degree two, so
    /// they vanish when the truncation order is below two).
    pub fn into_series(&self, trunc: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.nvars(), trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut mono = vec![0u32; self.nvars()];
                mono[i] = 1;
                s.add_term(mono, CyclotomicNumber::from_rational(c.clone()));
            }
        }
        s
    }
}

/// A power series truncated by total cohomological degree (each variable
/// counts two); coefficients are exact cyclotomic numbers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TruncatedSeries {
    nvars: usize,
    trunc: u32,
    coeffs: BTreeMap<Monomial, CyclotomicNumber>,
}

fn monomial_degree(mono: &[u32]) -> u32 {
    2 * mono.iter().sum::<u32>()
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, trunc: u32) -> Self {
        TruncatedSeries { nvars, trunc, coeffs: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, trunc: u32, c: CyclotomicNumber) -> Self {
        let mut s = Self::zero(nvars, trunc);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, trunc: u32) -> Self {
        Self::constant(nvars, trunc, CyclotomicNumber::one())
    }

    /// The `i`-th variable as a series (zero when the truncation order is
    /// below two).
    pub fn variable(nvars: usize, trunc: u32, i: usize) -> Self {
        LinearForm::variable(nvars, i).into_series(trunc)
    }

    pub fn from_terms<I>(nvars: usize, trunc: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, CyclotomicNumber)>,
    {
        let mut s = Self::zero(nvars, trunc);
        for (mono, c) in terms {
            s.add_term(mono, c);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CyclotomicNumber)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, mono: &[u32]) -> CyclotomicNumber {
        assert_eq!(mono.len(), self.nvars, "monomial over the wrong variable list");
        self.coeffs.get(mono).cloned().unwrap_or_else(CyclotomicNumber::zero)
    }

    pub fn constant_term(&self) -> CyclotomicNumber {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `c · mono`, discarding overflow and pruning zeros.
    fn add_term(&mut self, mono: Monomial, c: CyclotomicNumber) {
        assert_eq!(mono.len(), self.nvars, "monomial over the wrong variable list");
        if c.is_zero() || monomial_degree(&mono) > self.trunc {
            return;
        }
        let entry = match self.coeffs.remove(&mono) {
            Some(old) => &old + &c,
            None => c,
        };
        if !entry.is_zero() {
            self.coeffs.insert(mono, entry);
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.trunc);
        }
        TruncatedSeries {
            nvars: self.nvars,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&CyclotomicNumber::from_rational(c.clone()))
    }

    /// Exact inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<TruncatedSeries, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::NonInvertibleConstant);
        }
        let c0_inv = c0.inv().expect("nonzero cyclotomic numbers are invertible");
        // s = c0 (1 + t) with t of positive degree; invert the unit part
        // by the geometric series, which terminates at the truncation.
        let t = &self.scale(&c0_inv) - &Self::one(self.nvars, self.trunc);
        let minus_t = -&t;
        let mut acc = Self::one(self.nvars, self.trunc);
        let mut power = Self::one(self.nvars, self.trunc);
        for _ in 0..(self.trunc / 2) {
            power = &power * &minus_t;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&c0_inv))
    }

    fn assert_same_shape(&self, other: &TruncatedSeries) {
        assert_eq!(self.nvars, other.nvars, "series over different variable lists");
        assert_eq!(self.trunc, other.trunc, "series with different truncation orders");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            nvars: self.nvars,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(rhs);
        let mut out = TruncatedSeries::zero(self.nvars, self.trunc);
        for (m1, c1) in &self.coeffs {
            if monomial_degree(m1) > self.trunc {
                continue;
            }
            for (m2, c2) in &rhs.coeffs {
                let mono: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                if monomial_degree(&mono) > self.trunc {
                    continue;
                }
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }
}

/// `Σ ℓ^k / k!` truncated; the form has no constant term, so the sum is
/// finite.
pub fn exp_linear(form: &LinearForm, trunc: u32) -> TruncatedSeries {
    let lin = form.into_series(trunc);
    let mut acc = TruncatedSeries::one(form.nvars(), trunc);
    let mut term = TruncatedSeries::one(form.nvars(), trunc);
    for k in 1..=(trunc / 2) as u64 {
        term = (&term * &lin).scale_rational(&frac(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    acc
}

/// The angle factor `(1 + ζ e^ℓ) / (1 − ζ e^ℓ)` for a root of unity
/// `ζ ≠ 1`; the exclusion is exactly the hypothesis that the rotation is
/// nontrivial, which keeps the denominator invertible.
pub fn angle_factor(
    zeta: &CyclotomicNumber,
    form: &LinearForm,
    trunc: u32,
) -> Result<TruncatedSeries, SeriesError> {
    if zeta.is_one() {
        return Err(SeriesError::TrivialRotation);
    }
    let nvars = form.nvars();
    let ze = exp_linear(form, trunc).scale(zeta);
    let num = &TruncatedSeries::one(nvars, trunc) + &ze;
    let den = &TruncatedSeries::one(nvars, trunc) - &ze;
    Ok(&num * &den.invert()?)
}

/// Exact Bernoulli numbers `B_0 .. B_n` (convention `B_1 = −1/2`) by the
/// defining recurrence.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        // Σ_{j=0}^{m} C(m+1, j) B_j = [m = 0]; solve for B_m.
        let mut sum = Rational::zero();
        let mut binom = Rational::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            sum += &binom * bj;
            // C(m+1, j+1) = C(m+1, j) · (m+1−j)/(j+1)
            binom *= frac((m + 1 - j) as i64, (j + 1) as i64);
        }
        let rhs = if m == 0 { Rational::one() } else { Rational::zero() };
        // Here binom = C(m+1, m).
        b.push((rhs - sum) / binom);
    }
    b
}

/// The per-root tangent factor `ℓ / tanh(ℓ) = Σ B_{2k} (2ℓ)^{2k} / (2k)!`
/// — an even series with rational coefficients.
pub fn l_class_factor(form: &LinearForm, trunc: u32) -> TruncatedSeries {
    let nvars = form.nvars();
    // ℓ^{2k} has cohomological degree 4k.
    let kmax = (trunc / 4) as usize;
    let bern = bernoulli_numbers(2 * kmax);
    let lin = form.into_series(trunc);
    let square = &lin * &lin;
    let mut acc = TruncatedSeries::one(nvars, trunc);
    let mut power = TruncatedSeries::one(nvars, trunc);
    let mut factorial = Rational::one();
    for k in 1..=kmax {
        power = &power * &square;
        if power.is_zero() {
            break;
        }
        // (2k)! built incrementally from (2k−2)!.
        factorial *= frac((2 * k - 1) as i64, 1) * frac((2 * k) as i64, 1);
        let four_pow = Rational::from_integer(BigInt::one() << (2 * k));
        let coeff = &bern[2 * k] * four_pow / &factorial;
        acc = &acc + &power.scale_rational(&coeff);
    }
    acc
}

/// Product of the per-root factors over a tangent root list; multiplicative
/// by construction, and the empty list gives 1.
pub fn l_class(roots: &[LinearForm], nvars: usize, trunc: u32) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(nvars, trunc);
    for root in roots {
        assert_eq!(root.nvars(), nvars, "root over the wrong variable list");
        acc = &acc * &l_class_factor(root, trunc);
    }
    acc
}

/// Outcome of [`coth_identity_check`]: whether the half-angle expansion
/// matched the angle factor up to sign, and which sign was observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CothIdentityReport {
    pub holds: bool,
    /// `+1` or `−1` when the identity holds; the observed proportionality
    /// sign between the hyperbolic cotangent and the angle factor.
    pub sign: i64,
}

/// Expand `coth((x + iθ)/2)` for the rotation number `θ/2π = a/m` through
/// the half-angle root of unity in the conductor-doubled field, and
/// compare with `± angle_factor(ζ, x)`; the sign is recorded, not
/// assumed.
pub fn coth_identity_check(a: u64, m: u64, trunc: u32) -> CothIdentityReport {
    assert!(m >= 2 && a > 0 && a < m, "rotation number must lie strictly between 0 and 1");
    let zeta = CyclotomicNumber::root_of_unity(a, m);
    let half = CyclotomicNumber::root_of_unity(a, 2 * m);
    let half_inv = half.inv().expect("roots of unity are invertible");
    let x_half = LinearForm::variable(1, 0).scale(&frac(1, 2));
    let e_plus = exp_linear(&x_half, trunc).scale(&half);
    let e_minus = exp_linear(&x_half.negate(), trunc).scale(&half_inv);
    let num = &e_plus + &e_minus;
    let den = &e_plus - &e_minus;
    let coth = &num
        * &den
            .invert()
            .expect("the half-angle denominator has nonzero constant term");
    let af = angle_factor(&zeta, &LinearForm::variable(1, 0), trunc)
        .expect("the rotation is nontrivial");
    if coth == af {
        CothIdentityReport { holds: true, sign: 1 }
    } else if coth == -&af {
        CothIdentityReport { holds: true, sign: -1 }
    } else {
        CothIdentityReport { holds: false, sign: 0 }
    }
}

/// Intersection numbers of the top-degree monomials: the evaluation
/// against the fundamental class.  Monomials absent from the table pair
/// to zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntersectionFunctional {
    nvars: usize,
    top_degree: u32,
    values: BTreeMap<Monomial, Rational>,
}

impl IntersectionFunctional {
    pub fn new<I>(nvars: usize, top_degree: u32, entries: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut values = BTreeMap::new();
        for (mono, v) in entries {
            assert_eq!(mono.len(), nvars, "monomial over the wrong variable list");
            assert_eq!(
                monomial_degree(&mono),
                top_degree,
                "intersection numbers are defined exactly in the top degree"
            );
            if !v.is_zero() {
                values.insert(mono, v);
            }
        }
        IntersectionFunctional { nvars, top_degree, values }
    }

    /// The model of a point: no variables, top degree zero, and the empty
    /// monomial pairs to one.
    pub fn point() -> Self {
        Self::new(0, 0, [(vec![], Rational::one())])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.values.iter()
    }

    pub fn value(&self, mono: &[u32]) -> Rational {
        self.values.get(mono).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Pair the top-degree part of a series with the intersection numbers.
pub fn integrate(s: &TruncatedSeries, f: &IntersectionFunctional) -> CyclotomicNumber {
    assert_eq!(s.nvars(), f.nvars(), "series over the wrong variable list");
    assert!(
        s.truncation() >= f.top_degree(),
        "truncation order must reach the top degree"
    );
    let mut acc = CyclotomicNumber::zero();
    for (mono, c) in s.terms() {
        if monomial_degree(mono) == f.top_degree() {
            let w = f.value(mono);
            if !w.is_zero() {
                acc = &acc + &c.scale(&w);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc_rat(n: i64, d: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(frac(n, d))
    }

    fn x_series(trunc: u32) -> TruncatedSeries {
        TruncatedSeries::variable(1, trunc, 0)
    }

    #[test]
    fn multiplication_truncates() {
        let one = TruncatedSeries::one(1, 4);
        let x = x_series(4);
        let product = &(&one + &x) * &(&one - &x);
        let expected = &one - &(&x * &x);
        assert_eq!(product, expected);
        // At truncation 2 the square disappears entirely.
        let one2 = TruncatedSeries::one(1, 2);
        let x2 = x_series(2);
        let sq = &(&one2 + &x2) * &(&one2 + &x2);
        assert_eq!(sq.coefficient(&[1]), cyc_rat(2, 1));
        assert!(sq.coefficient(&[2]).is_zero());
    }

    #[test]
    fn geometric_inverse() {
        let one = TruncatedSeries::one(1, 4);
        let x = x_series(4);
        let s = &one - &x;
        let inv = s.invert().unwrap();
        let expected = TruncatedSeries::from_terms(
            1,
            4,
            [
                (vec![0], CyclotomicNumber::one()),
                (vec![1], CyclotomicNumber::one()),
                (vec![2], CyclotomicNumber::one()),
            ],
        );
        assert_eq!(inv, expected);
        assert_eq!(&s * &inv, one);
    }

    #[test]
    fn inverse_with_cyclotomic_constant() {
        let zeta3 = CyclotomicNumber::root_of_unity(1, 3);
        let c = &CyclotomicNumber::one() - &zeta3;
        let s = &TruncatedSeries::constant(1, 2, c) + &x_series(2);
        let inv = s.invert().unwrap();
        // 1/(1−ζ₃) = (2+ζ₃)/3.
        let expected = &cyc_rat(2, 3) + &zeta3.scale(&frac(1, 3));
        assert_eq!(inv.constant_term(), expected);
        assert_eq!(&s * &inv, TruncatedSeries::one(1, 2));
        // Zero constant term rejected.
        assert_eq!(x_series(2).invert(), Err(SeriesError::NonInvertibleConstant));
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(exp_linear(&LinearForm::zero(1), 4), TruncatedSeries::one(1, 4));
        let e = exp_linear(&LinearForm::variable(1, 0), 4);
        assert_eq!(e.coefficient(&[0]), CyclotomicNumber::one());
        assert_eq!(e.coefficient(&[1]), CyclotomicNumber::one());
        assert_eq!(e.coefficient(&[2]), cyc_rat(1, 2));
        let back = exp_linear(&LinearForm::variable(1, 0).negate(), 8);
        let forth = exp_linear(&LinearForm::variable(1, 0), 8);
        assert_eq!(&back * &forth, TruncatedSeries::one(1, 8));
    }

    #[test]
    fn exponential_is_a_homomorphism() {
        let x = LinearForm::variable(2, 0);
        let y = LinearForm::variable(2, 1);
        let both = exp_linear(&x.add(&y), 6);
        let split = &exp_linear(&x, 6) * &exp_linear(&y, 6);
        assert_eq!(both, split);
        // A rational-coefficient form works the same way.
        let mixed = x.scale(&frac(2, 3)).add(&y.scale(&frac(-1, 2)));
        assert_eq!(
            exp_linear(&mixed.add(&mixed), 6),
            &exp_linear(&mixed, 6) * &exp_linear(&mixed, 6)
        );
    }

    #[test]
    fn angle_factor_examples() {
        // Constant case: (1+ζ)/(1−ζ).
        let zeta3 = CyclotomicNumber::root_of_unity(1, 3);
        let af = angle_factor(&zeta3, &LinearForm::zero(1), 4).unwrap();
        let expected = (&CyclotomicNumber::one() + &zeta3)
            .div(&(&CyclotomicNumber::one() - &zeta3))
            .unwrap();
        assert_eq!(af.constant_term(), expected);
        assert!(af.coefficient(&[1]).is_zero());
        // ζ = −1 at zero form: the factor vanishes identically.
        let minus_one = CyclotomicNumber::root_of_unity(1, 2);
        let af = angle_factor(&minus_one, &LinearForm::zero(1), 4).unwrap();
        assert!(af.is_zero());
        // ζ = −1 with the variable: −tanh(x/2), so the linear coefficient
        // is −1/2.
        let af = angle_factor(&minus_one, &LinearForm::variable(1, 0), 4).unwrap();
        assert!(af.constant_term().is_zero());
        assert_eq!(af.coefficient(&[1]), cyc_rat(-1, 2));
        // ζ = 1 rejected.
        assert_eq!(
            angle_factor(&CyclotomicNumber::one(), &LinearForm::zero(1), 4),
            Err(SeriesError::TrivialRotation)
        );
    }

    #[test]
    fn angle_factor_antisymmetry() {
        // Substituting (ζ, x) → (ζ⁻¹, −x) negates the factor; the product
        // of the two is therefore −(angle factor)², not 1.
        let x = LinearForm::variable(1, 0);
        for (a, m) in [(1u64, 3u64), (1, 4), (2, 5), (1, 2), (5, 12)] {
            let zeta = CyclotomicNumber::root_of_unity(a, m);
            let zinv = zeta.inv().unwrap();
            let af = angle_factor(&zeta, &x, 6).unwrap();
            let mirrored = angle_factor(&zinv, &x.negate(), 6).unwrap();
            assert_eq!(mirrored, -&af, "a/m = {a}/{m}");
            assert_eq!(&af * &mirrored, (&af * &af).scale(&cyc_rat(-1, 1)));
        }
        // Concretely at ζ₃ and zero form the product is 1/3.
        let zeta3 = CyclotomicNumber::root_of_unity(1, 3);
        let p = &angle_factor(&zeta3, &LinearForm::zero(1), 2).unwrap()
            * &angle_factor(&zeta3.inv().unwrap(), &LinearForm::zero(1), 2).unwrap();
        assert_eq!(p.constant_term(), cyc_rat(1, 3));
    }

    #[test]
    fn bernoulli_table() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[0], frac(1, 1));
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[3], frac(0, 1));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[6], frac(1, 42));
        assert_eq!(b[8], frac(-1, 30));
    }

    #[test]
    fn tangent_factor_leading_coefficients() {
        let y = LinearForm::variable(1, 0);
        let f = l_class_factor(&y, 8);
        assert_eq!(f.coefficient(&[0]), CyclotomicNumber::one());
        assert_eq!(f.coefficient(&[2]), cyc_rat(1, 3));
        assert_eq!(f.coefficient(&[4]), cyc_rat(-1, 45));
        let g = l_class_factor(&y, 12);
        assert_eq!(g.coefficient(&[6]), cyc_rat(2, 945));
        // Even series: odd powers vanish.
        for s in [&f, &g] {
            for (mono, _) in s.terms() {
                assert_eq!(mono[0] % 2, 0);
            }
        }
        // At truncation 4 only the first two terms survive.
        let short = l_class_factor(&y, 4);
        assert_eq!(short.coefficient(&[2]), cyc_rat(1, 3));
        assert!(short.coefficient(&[4]).is_zero());
    }

    #[test]
    fn tangent_class_is_multiplicative() {
        assert_eq!(l_class(&[], 2, 8), TruncatedSeries::one(2, 8));
        let x = LinearForm::variable(2, 0);
        let y = LinearForm::variable(2, 1);
        let joint = l_class(&[x.clone(), y.clone()], 2, 8);
        let split = &l_class_factor(&x, 8) * &l_class_factor(&y, 8);
        assert_eq!(joint, split);
    }

    #[test]
    fn half_angle_identity_at_theta_pi() {
        let report = coth_identity_check(1, 2, 4);
        assert!(report.holds);
        assert_eq!(report.sign, -1);
    }

    #[test]
    fn half_angle_constant_terms_match() {
        // With the form set to zero the statement reduces to an equality
        // of cyclotomic constants.
        let a = 1u64;
        let m = 3u64;
        let half = CyclotomicNumber::root_of_unity(a, 2 * m);
        let half_inv = half.inv().unwrap();
        let lhs = (&half + &half_inv).div(&(&half - &half_inv)).unwrap();
        let zeta = CyclotomicNumber::root_of_unity(a, m);
        let rhs = (&CyclotomicNumber::one() + &zeta)
            .div(&(&CyclotomicNumber::one() - &zeta))
            .unwrap();
        assert_eq!(lhs, -&rhs);
    }

    #[test]
    fn half_angle_identity_sweep() {
        for m in 2u64..=12 {
            for a in 1..m {
                let report = coth_identity_check(a, m, 6);
                assert!(report.holds, "a/m = {a}/{m}");
                assert_eq!(report.sign, -1, "a/m = {a}/{m}");
            }
        }
    }

    #[test]
    fn integration_examples() {
        let f = IntersectionFunctional::new(1, 4, [(vec![2], frac(1, 1))]);
        assert!(integrate(&TruncatedSeries::zero(1, 4), &f).is_zero());
        let t2 = &x_series(4) * &x_series(4);
        assert_eq!(integrate(&t2, &f), CyclotomicNumber::one());
        // Lower-degree terms do not contribute.
        let mixed = &t2 + &TruncatedSeries::one(1, 4);
        assert_eq!(integrate(&mixed, &f), CyclotomicNumber::one());
        // The point model integrates to the constant term.
        let c = TruncatedSeries::constant(0, 0, cyc_rat(7, 2));
        assert_eq!(integrate(&c, &IntersectionFunctional::point()), cyc_rat(7, 2));
        // Fractional intersection numbers scale the answer.
        let halves = IntersectionFunctional::new(1, 4, [(vec![2], frac(3, 2))]);
        assert_eq!(integrate(&t2, &halves), cyc_rat(3, 2));
    }
}
