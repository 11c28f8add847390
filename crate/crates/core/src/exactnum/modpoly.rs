//! Polynomial arithmetic over prime fields and factorization of cyclotomic
//! polynomials mod p.
//!
//! [`factor_cyclotomic_mod_p`] returns the canonical monic irreducible
//! factor of the n-th cyclotomic polynomial over `F_p` (for `p` not dividing
//! `n`): every irreducible factor has degree equal to the multiplicative
//! order of `p` mod `n`, and the canonical representative is the one whose
//! ascending coefficient sequence is lexicographically least.  The search is
//! equal-degree splitting with an internal deterministic generator seeded
//! from `(n, p)`, so results are reproducible across runs and platforms.

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::cyclotomic_polynomial;

/// Errors from mod-p polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModPolyError {
    /// The supplied modulus is not a prime number.
    NotPrime(u64),
    /// The prime divides n, so the factorization pattern is not the
    /// unramified one this routine computes.
    Ramified { n: u64, p: u64 },
}

impl fmt::Display for ModPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModPolyError::NotPrime(p) => write!(f, "{p} is not prime"),
            ModPolyError::Ramified { n, p } => {
                write!(f, "prime {p} divides {n}; only the unramified case is supported")
            }
        }
    }
}

/// Trial-division primality check, adequate for the word-sized primes used
/// as residue characteristics.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Multiplicative order of `p` modulo `n` (requires `gcd(p, n) = 1`).
pub fn multiplicative_order(p: u64, n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let base = p % n;
    let mut acc = base;
    let mut ord = 1;
    while acc != 1 {
        acc = (acc as u128 * base as u128 % n as u128) as u64;
        ord += 1;
        assert!(ord <= n, "order search exceeded the modulus; p and n not coprime?");
    }
    ord
}

/// A polynomial over `F_p`, ascending coefficients with no trailing zeros
/// (the zero polynomial stores an empty vector).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    /// Builds from arbitrary coefficients, reducing mod p and trimming.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2);
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPolynomial { p, coeffs: c }
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, vec![])
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Ascending coefficients, trimmed.
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn leading(&self) -> u64 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading() == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; len];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        Self::new(self.p, out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; len];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        Self::new(self.p, out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    let t = (a as u128 * b as u128 + out[i + j] as u128) % self.p as u128;
                    out[i + j] = t as u64;
                }
            }
        }
        Self::new(self.p, out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, den: &Self) -> (Self, Self) {
        assert_eq!(self.p, den.p);
        let p = self.p;
        let dd = den.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Self::zero(p), self.clone());
        }
        let lead_inv = mod_inverse(den.leading(), p);
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..rem.len() - dd).rev() {
            let c = (rem[k + dd] as u128 * lead_inv as u128 % p as u128) as u64;
            if c != 0 {
                for i in 0..=dd {
                    let sub = (c as u128 * den.coeffs[i] as u128) % p as u128;
                    rem[k + i] = ((rem[k + i] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
            quot[k] = c;
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, den: &Self) -> Self {
        self.divmod(den).1
    }

    /// Scales to leading coefficient 1.
    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        let inv = mod_inverse(self.leading(), self.p);
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&c| (c as u128 * inv as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `self^e` reduced modulo `m`, square-and-multiply over the exponent's
    /// bits.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.p);
        let mut base = self.rem(m);
        let mut e = e.clone();
        let two = BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    /// Evaluates at a point of `F_p`.
    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let x = (x % self.p) as u128;
        let mut acc: u128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c as u128) % p;
        }
        acc as u64
    }
}

impl fmt::Display for ModPolynomial {
    /// Descending-degree rendering: `x^4 + 3*x^2 + 2`, coefficients in
    /// `0..p`, suppressing unit coefficients and zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut result: u128 = 1;
    let mut base = (a % p) as u128;
    let mut e = p - 2;
    let p = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result as u64
}

/// Deterministic xorshift64* stream; the seed mixes `(n, p)` so repeated
/// factorizations of the same polynomial walk the same splitting path.
struct SplitRng {
    state: u64,
}

impl SplitRng {
    fn new(n: u64, p: u64) -> Self {
        let mut state = (n << 32) ^ p ^ 0x9E37_79B9_7F4A_7C15;
        if state == 0 {
            state = 0x0123_4567_89AB_CDEF;
        }
        // A few warmup steps decorrelate nearby seeds.
        let mut rng = SplitRng { state };
        for _ in 0..4 {
            rng.next_u64();
        }
        rng
    }

    fn next_u64(&mut self) -> u64 {
        self.state ^= self.state >> 12;
        self.state ^= self.state << 25;
        self.state ^= self.state >> 27;
        self.state.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
}

/// All monic irreducible factors of the n-th cyclotomic polynomial over
/// `F_p`, sorted by ascending coefficient sequence.  Requires `p` prime and
/// not dividing `n`.
pub fn cyclotomic_factor_set(n: u64, p: u64) -> Result<Vec<ModPolynomial>, ModPolyError> {
    if !is_prime_u64(p) {
        return Err(ModPolyError::NotPrime(p));
    }
    if n % p == 0 {
        return Err(ModPolyError::Ramified { n, p });
    }
    let f = ModPolynomial::new(
        p,
        cyclotomic_polynomial(n)
            .into_iter()
            .map(|c| {
                let m = c.mod_floor(&num_bigint::BigInt::from(p));
                m.to_u64().expect("reduced residue fits u64")
            })
            .collect(),
    );
    let d = multiplicative_order(p, n) as usize;
    let mut rng = SplitRng::new(n, p);
    let mut stack = vec![f];
    let mut factors = Vec::new();
    while let Some(g) = stack.pop() {
        let deg = g.degree().expect("factors are nonzero");
        if deg == d {
            factors.push(g.make_monic());
        } else {
            let (a, b) = equal_degree_split(&g, d, &mut rng);
            stack.push(a);
            stack.push(b);
        }
    }
    factors.sort();
    Ok(factors)
}

/// The canonical monic irreducible factor of the n-th cyclotomic polynomial
/// over `F_p`: lexicographically least ascending coefficient sequence among
/// all irreducible factors (each of degree `ord_n(p)`).
pub fn factor_cyclotomic_mod_p(n: u64, p: u64) -> Result<ModPolynomial, ModPolyError> {
    let factors = cyclotomic_factor_set(n, p)?;
    Ok(factors.into_iter().next().expect("cyclotomic polynomials are nonconstant"))
}

/// Splits a product of distinct irreducibles, all of degree `d`, into two
/// nontrivial parts (Cantor–Zassenhaus for odd p, trace maps for p = 2).
fn equal_degree_split(g: &ModPolynomial, d: usize, rng: &mut SplitRng) -> (ModPolynomial, ModPolynomial) {
    let p = g.modulus();
    let deg = g.degree().expect("nonzero");
    loop {
        // Random polynomial of degree in [1, deg); deg >= 2 whenever a
        // split is needed, so index 1 exists.
        let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.next_u64() % p).collect();
        if coeffs.iter().skip(1).all(|&c| c == 0) {
            coeffs[1] = 1;
        }
        let a = ModPolynomial::new(p, coeffs);
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        let c = a.gcd(g);
        if let Some(dc) = c.degree() {
            if dc > 0 && dc < deg {
                let (q, r) = g.divmod(&c);
                debug_assert!(r.is_zero());
                return (c, q.make_monic());
            }
        }
        let t = if p == 2 {
            // Trace map sum a + a^2 + a^4 + ... over F_{2^d}.
            let mut acc = a.rem(g);
            let mut sq = a.rem(g);
            for _ in 1..d {
                sq = sq.mul(&sq).rem(g);
                acc = acc.add(&sq);
            }
            acc
        } else {
            // a^((p^d - 1)/2) - 1 vanishes on about half the factors.
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, g);
            b.sub(&ModPolynomial::one(p))
        };
        let c = t.gcd(g);
        if let Some(dc) = c.degree() {
            if dc > 0 && dc < deg {
                let (q, r) = g.divmod(&c);
                debug_assert!(r.is_zero());
                return (c, q.make_monic());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(p: u64, coeffs: &[u64]) -> ModPolynomial {
        ModPolynomial::new(p, coeffs.to_vec())
    }

    fn cyclotomic_mod(n: u64, p: u64) -> ModPolynomial {
        ModPolynomial::new(
            p,
            cyclotomic_polynomial(n)
                .into_iter()
                .map(|c| c.mod_floor(&num_bigint::BigInt::from(p)).to_u64().unwrap())
                .collect(),
        )
    }

    /// Complete irreducibility check for degree-d polynomials over F_p:
    /// x^(p^d) = x mod f, and gcd(x^(p^k) - x, f) is constant for k < d.
    fn assert_irreducible(f: &ModPolynomial) {
        let p = f.modulus();
        let d = f.degree().unwrap();
        let x = ModPolynomial::x(p);
        let mut frob = x.rem(f);
        for k in 1..=d {
            frob = frob.pow_mod(&BigUint::from(p), f);
            let probe = frob.sub(&x).gcd(f);
            if k < d {
                assert!(
                    probe.degree().map_or(true, |dd| dd == 0),
                    "nontrivial gcd at step {k} for {f}"
                );
            } else {
                assert_eq!(frob, x.rem(f), "Frobenius orbit must close after d steps for {f}");
            }
        }
    }

    #[test]
    fn inert_primes_leave_the_polynomial_whole() {
        // 2 has order 2 mod 3 = phi(3): irreducible.
        let f = factor_cyclotomic_mod_p(3, 2).unwrap();
        assert_eq!(f, poly(2, &[1, 1, 1]));
        assert_eq!(f.to_string(), "x^2 + x + 1");
        // 2 has order 4 mod 5 = phi(5): irreducible.
        let f = factor_cyclotomic_mod_p(5, 2).unwrap();
        assert_eq!(f, poly(2, &[1, 1, 1, 1, 1]));
        assert_eq!(f.to_string(), "x^4 + x^3 + x^2 + x + 1");
    }

    #[test]
    fn split_primes_give_the_least_linear_factor() {
        // 11 = 1 mod 5, so the factors are x - r over the four elements of
        // order 5 mod 11, namely r in {3, 4, 5, 9}.  Ascending coefficient
        // sequences (11-r, 1); the least is (2, 1), i.e. x - 9 = x + 2.
        let f = factor_cyclotomic_mod_p(5, 11).unwrap();
        assert_eq!(f, poly(11, &[2, 1]));
        assert_eq!(f.to_string(), "x + 2");
        // And the full set is exactly the four linear polynomials.
        let all = cyclotomic_factor_set(5, 11).unwrap();
        assert_eq!(all, vec![poly(11, &[2, 1]), poly(11, &[6, 1]), poly(11, &[7, 1]), poly(11, &[8, 1])]);
    }

    #[test]
    fn intermediate_orders_split_into_equal_degrees() {
        // ord_12(5) = 2: the degree-4 polynomial splits into two quadratics;
        // x^2 + 2x + 4 beats x^2 + 3x + 4.
        let f = factor_cyclotomic_mod_p(12, 5).unwrap();
        assert_eq!(f, poly(5, &[4, 2, 1]));
        let all = cyclotomic_factor_set(12, 5).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1], poly(5, &[4, 3, 1]));
    }

    #[test]
    fn factor_invariants_over_a_sweep() {
        for n in [1u64, 3, 4, 5, 7, 8, 9, 12, 15, 16] {
            for p in [2u64, 3, 5, 7, 11, 13] {
                if n % p == 0 {
                    assert_eq!(
                        factor_cyclotomic_mod_p(n, p),
                        Err(ModPolyError::Ramified { n, p })
                    );
                    continue;
                }
                let full = cyclotomic_mod(n, p);
                let d = multiplicative_order(p, n) as usize;
                let factors = cyclotomic_factor_set(n, p).unwrap();
                // Degrees all equal ord_n(p), count matches phi(n)/d, the
                // canonical pick is the sorted head, each factor divides and
                // is irreducible, and the product rebuilds the polynomial.
                let mut product = ModPolynomial::one(p);
                for f in &factors {
                    assert_eq!(f.degree(), Some(d));
                    assert!(f.is_monic());
                    assert!(full.rem(f).is_zero(), "factor must divide: n={n} p={p}");
                    assert_irreducible(f);
                    product = product.mul(f);
                }
                assert_eq!(product, full, "n={n} p={p}");
                assert_eq!(factors[0], factor_cyclotomic_mod_p(n, p).unwrap());
                assert_eq!(factors.len() * d, full.degree().unwrap());
            }
        }
    }

    #[test]
    fn determinism_across_repeated_runs() {
        for _ in 0..3 {
            assert_eq!(factor_cyclotomic_mod_p(15, 2).unwrap(), factor_cyclotomic_mod_p(15, 2).unwrap());
            assert_eq!(cyclotomic_factor_set(21, 5).unwrap(), cyclotomic_factor_set(21, 5).unwrap());
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(factor_cyclotomic_mod_p(5, 6), Err(ModPolyError::NotPrime(6)));
        assert_eq!(factor_cyclotomic_mod_p(5, 1), Err(ModPolyError::NotPrime(1)));
    }

    #[test]
    fn division_and_gcd_basics() {
        let p = 7;
        let a = poly(p, &[1, 0, 2, 1]); // x^3 + 2x^2 + 1
        let b = poly(p, &[3, 1]); // x + 3
        let (q, r) = a.divmod(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree().map_or(true, |d| d < 1));
        let g = a.mul(&b).gcd(&b.mul(&poly(p, &[5, 0, 1])));
        assert!(g.is_monic());
        assert!(a.mul(&b).rem(&g).is_zero());
    }
}
