//! Cyclotomic polynomials over F_q by the Moebius product
//! Phi_k = prod_{d|k} (lambda^{k/d} - 1)^{mu(d)}, with exact division.
//! The identity holds over the integers, so the reduction mod p is valid
//! for every k, including p | k.

use crate::field::PrimeField;
use crate::intmath::{divisors, mobius};
use crate::poly::Poly;

pub fn cyclotomic(k: u64, field: PrimeField) -> Poly {
    assert!(k >= 1);
    let mut num = Poly::one(field);
    let mut den = Poly::one(field);
    for d in divisors(k) {
        match mobius(k / d) {
            1 => num = num.mul(&x_pow_minus_one(field, d)),
            -1 => den = den.mul(&x_pow_minus_one(field, d)),
            _ => {}
        }
    }
    num.div_exact(&den).expect("Moebius product divides exactly")
}

fn x_pow_minus_one(field: PrimeField, d: u64) -> Poly {
    let mut coeffs = vec![field.zero(); d as usize + 1];
    coeffs[0] = field.neg(field.one());
    coeffs[d as usize] = field.one();
    Poly::new(field, coeffs)
}
