//! Prime-field scalar arithmetic.
//!
//! A [`PrimeField`] is a context for arithmetic modulo a prime `p < 2^62`;
//! a [`Felt`] is a canonical residue in `[0, p)`. Every operation returns
//! canonical residues, so intermediate values always fit in a `u64` and
//! products fit in a `u128`.

use crate::error::{Error, Result};
use crate::rng::Rng;
use num_bigint::BigUint;

/// Largest admissible modulus (exclusive): keeps `a + b` and `a * b`
/// comfortably inside `u64`/`u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// A field element in canonical form. Only meaningful together with the
/// [`PrimeField`] it was produced by.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Felt(pub(crate) u64);

impl Felt {
    pub fn value(self) -> u64 {
        self.0
    }
}

/// Arithmetic context for the prime field F_p. The field size q of the
/// ambient theory equals p here (prime fields only).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds the field, rejecting composites via deterministic Miller-Rabin.
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::TooLarge(format!("modulus {p} >= 2^62")));
        }
        if p < 2 || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Characteristic; coincides with the modulus for prime fields.
    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn zero(self) -> Felt {
        Felt(0)
    }

    pub fn one(self) -> Felt {
        Felt(1 % self.p)
    }

    /// Canonicalizes an arbitrary `u64` into the field.
    pub fn elt(self, v: u64) -> Felt {
        Felt(v % self.p)
    }

    pub fn add(self, a: Felt, b: Felt) -> Felt {
        let s = a.0 + b.0;
        Felt(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(self, a: Felt, b: Felt) -> Felt {
        Felt(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    pub fn neg(self, a: Felt) -> Felt {
        Felt(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(self, a: Felt, b: Felt) -> Felt {
        Felt(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64)
    }

    /// Square-and-multiply with a native exponent.
    pub fn pow_u64(self, a: Felt, mut e: u64) -> Felt {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Square-and-multiply with an arbitrary-precision exponent.
    pub fn pow(self, a: Felt, e: &BigUint) -> Felt {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    /// Multiplicative inverse via Fermat.
    pub fn inv(self, a: Felt) -> Result<Felt> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_u64(a, self.p - 2))
    }

    /// Uniform element, rejection-free (the modulus divides no power of two,
    /// so we reject draws above the largest multiple of p).
    pub fn rand(self, rng: &mut Rng) -> Felt {
        Felt(rng.below(self.p))
    }

    /// Uniform nonzero element.
    pub fn rand_nonzero(self, rng: &mut Rng) -> Felt {
        debug_assert!(self.p >= 2);
        Felt(1 + rng.below(self.p - 1))
    }
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, a, m);
        }
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set below is proven complete for
/// every modulus under 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_accepts_primes() {
        assert_eq!(PrimeField::new(2).unwrap().modulus(), 2);
        assert_eq!(PrimeField::new(101).unwrap().modulus(), 101);
    }

    #[test]
    fn constructor_rejects_composites_and_large() {
        assert_eq!(PrimeField::new(91), Err(Error::NotPrime(91)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
        assert!(matches!(PrimeField::new(1 << 62), Err(Error::TooLarge(_))));
    }

    #[test]
    fn primality_matches_trial_division_small() {
        for n in 0..2000u64 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "n = {n}");
        }
    }

    #[test]
    fn arith_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.mul(Felt(3), Felt(4)), Felt(2));
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(Felt(3)).unwrap(), Felt(5));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.pow(Felt(1), &BigUint::from(1_000_000_000u64)), Felt(1));
        assert_eq!(f7.inv(Felt(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn ring_axioms_randomized() {
        // 60-bit prime: 2^59 + 21 is prime? use a known one instead.
        let sixty_bit = 1_152_921_504_606_846_883u64; // 2^60 - 93, prime
        assert!(is_prime_u64(sixty_bit));
        for &p in &[2u64, 3, 5, 101, sixty_bit] {
            let f = PrimeField::new(p).unwrap();
            let mut rng = Rng::new(0xA11CE ^ p);
            for _ in 0..200 {
                let a = f.rand(&mut rng);
                let b = f.rand(&mut rng);
                let c = f.rand(&mut rng);
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            }
        }
    }

    #[test]
    fn fermat_randomized() {
        for &p in &[2u64, 3, 5, 101, 4611686018427387847] {
            let f = PrimeField::new(p).unwrap();
            let mut rng = Rng::new(0xFE12_3400 + p);
            for _ in 0..100 {
                let a = f.rand_nonzero(&mut rng);
                assert_eq!(f.pow_u64(a, p - 1), f.one(), "p = {p}");
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = Rng::new(7);
        for _ in 0..100 {
            let a = f.rand_nonzero(&mut rng);
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }
}
