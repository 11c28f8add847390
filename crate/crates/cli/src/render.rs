//! Human-readable rendering: symbolic virtual representations
//! (`1 − χ − χ² + χ³`), exact rationals (`a/b`), cyclotomic numbers, and
//! the optional decimal approximations for human readers.
//!
//! All exact values render exactly; the decimal forms exist only as an
//! opt-in convenience and never feed back into any computation.

use equisig_core::exactnum::{CyclotomicNumber, Rational};
use equisig_core::grouprep::VirtualRep;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(mut n: u64, table: &[char; 10]) -> String {
    if n == 0 {
        return table[0].to_string();
    }
    let mut out = Vec::new();
    while n > 0 {
        out.push(table[(n % 10) as usize]);
        n /= 10;
    }
    out.iter().rev().collect()
}

fn superscript(n: u64) -> String {
    digits(n, &SUPERSCRIPTS)
}

fn subscript(n: u64) -> String {
    digits(n, &SUBSCRIPTS)
}

/// The symbolic name of a character given by its residue vector: the
/// trivial character is `1`; over a single cyclic factor the powers are
/// `χ`, `χ²`, `χ³`, …; over several factors each factor gets a
/// subscript, as in `χ₁χ₂²`.
pub fn character_symbol(rank: usize, residues: &[u64]) -> String {
    if residues.iter().all(|&r| r == 0) {
        return "1".to_string();
    }
    let mut out = String::new();
    for (i, &r) in residues.iter().enumerate() {
        if r == 0 {
            continue;
        }
        out.push('χ');
        if rank > 1 {
            out.push_str(&subscript(i as u64 + 1));
        }
        if r > 1 {
            out.push_str(&superscript(r));
        }
    }
    out
}

/// A virtual representation as a signed sum of character symbols, in the
/// canonical character order, using the typographic minus sign:
/// `1 − χ − χ² + χ³`.  The zero representation renders as `0`.
pub fn rep_pretty(rep: &VirtualRep) -> String {
    let rank = rep.group().rank();
    let mut out = String::new();
    for (chi, coeff) in rep.terms() {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let abs = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('−');
            }
        } else if negative {
            out.push_str(" − ");
        } else {
            out.push_str(" + ");
        }
        let symbol = character_symbol(rank, chi.residues());
        if symbol == "1" {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&symbol);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Exact rational rendering: `a` for integers, `a/b` otherwise.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// Decimal approximation of a rational, for human readers only.
pub fn rational_decimal(r: &Rational) -> String {
    match r.to_f64() {
        Some(x) => format!("{x:.6}"),
        None => "overflow".to_string(),
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal approximation of a cyclotomic number as a complex value
/// `a+bi`, evaluating the power basis at the first primitive root of
/// unity.  For human readers only.
pub fn cyclotomic_decimal(z: &CyclotomicNumber) -> String {
    let n = z.conductor();
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    for (i, c) in z.coefficients().iter().enumerate() {
        let angle = core::f64::consts::TAU * (i as f64) / (n as f64);
        let c = rational_to_f64(c);
        re += c * angle.cos();
        im += c * angle.sin();
    }
    format!("{re:.6}{im:+.6}i")
}

/// Exact coefficient vector of a cyclotomic number on its power basis,
/// each coefficient as `a/b` text.
pub fn cyclotomic_coefficients(z: &CyclotomicNumber) -> Vec<String> {
    z.coefficients().iter().map(rational_str).collect()
}

/// A big integer as decimal text (exact; used for representation
/// coefficients that may exceed machine integers).
pub fn bigint_str(n: &BigInt) -> String {
    n.to_string()
}
