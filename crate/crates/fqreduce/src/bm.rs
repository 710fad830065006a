//! Berlekamp-Massey over a prime field.

use crate::field::{Felt, PrimeField};
use crate::poly::Poly;

/// Monic minimal polynomial of the shortest linear recurrence generating
/// `s`: returns m with m_d = 1 and sum_j m_j s_{i+j} = 0 for all valid i.
/// The all-zero sequence yields the constant 1.
pub fn berlekamp_massey(field: PrimeField, s: &[Felt]) -> Poly {
    let f = field;
    // Connection polynomial convention: C(D) = 1 + c_1 D + ... , with
    // s_n = -sum_{i>=1} c_i s_{n-i} for n >= L.
    let mut c = vec![f.one()];
    let mut b = vec![f.one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bb = f.one();
    for n in 0..s.len() {
        let mut delta = s[n];
        for i in 1..=l {
            if i < c.len() {
                delta = f.add(delta, f.mul(c[i], s[n - i]));
            }
        }
        if delta == f.zero() {
            m += 1;
        } else if 2 * l <= n {
            let t = c.clone();
            let coef = f.mul(delta, f.inv(bb).expect("bb nonzero"));
            add_shifted(f, &mut c, &b, coef, m);
            l = n + 1 - l;
            b = t;
            bb = delta;
            m = 1;
        } else {
            let coef = f.mul(delta, f.inv(bb).expect("bb nonzero"));
            add_shifted(f, &mut c, &b, coef, m);
            m += 1;
        }
    }
    // Reverse into the monic annihilator of degree L.
    let mut coeffs = vec![f.zero(); l + 1];
    for (i, &ci) in c.iter().enumerate() {
        if i <= l {
            coeffs[l - i] = ci;
        }
    }
    Poly::new(f, coeffs)
}

/// c <- c - coef * D^shift * b
fn add_shifted(f: PrimeField, c: &mut Vec<Felt>, b: &[Felt], coef: Felt, shift: usize) {
    if c.len() < b.len() + shift {
        c.resize(b.len() + shift, f.zero());
    }
    for (i, &bi) in b.iter().enumerate() {
        c[i + shift] = f.sub(c[i + shift], f.mul(coef, bi));
    }
}

/// True iff `m` annihilates the whole sequence.
pub fn annihilates(m: &Poly, s: &[Felt]) -> bool {
    let f = m.field();
    let d = match m.deg() {
        None => return s.iter().all(|&x| x == f.zero()),
        Some(d) => d,
    };
    if d >= s.len() {
        return true;
    }
    for i in 0..=(s.len() - 1 - d) {
        let mut acc = f.zero();
        for j in 0..=d {
            acc = f.add(acc, f.mul(m.coeff(j), s[i + j]));
        }
        if acc != f.zero() {
            return false;
        }
    }
    true
}
