//! Arithmetic in F_q[x]/(f(x)) for a fixed monic modulus.
//!
//! Remainders use the precomputed Newton inverse of the reversed modulus,
//! so reducing a product costs two multiplications. The Frobenius base
//! x^q mod f is cached lazily behind a `OnceLock`.

use crate::error::{Error, Result};
use crate::field::{Felt, PrimeField};
use crate::poly::Poly;
use num_bigint::BigUint;
use std::sync::OnceLock;

/// Composition strategy for [`ModCtx::compose`]; both give bit-identical
/// results.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComposeStrategy {
    Horner,
    BrentKung,
}

pub struct ModCtx {
    modulus: Poly,
    /// Inverse of rev(f) mod x^n; enough precision for inputs of degree
    /// up to 2n-1.
    rev_inv: Poly,
    frob_base: OnceLock<Poly>,
}

impl ModCtx {
    pub fn new(modulus: Poly) -> Result<Self> {
        if modulus.is_zero() || modulus.is_constant() || !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = modulus.degree();
        let rev = modulus.reverse(n);
        let rev_inv = newton_inverse(&rev, n.max(1));
        Ok(ModCtx {
            modulus,
            rev_inv,
            frob_base: OnceLock::new(),
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn field(&self) -> PrimeField {
        self.modulus.field()
    }

    pub fn n(&self) -> usize {
        self.modulus.degree()
    }

    /// x reduced mod f (a constant when deg f = 1).
    pub fn x(&self) -> Poly {
        self.reduce(&Poly::x(self.field()))
    }

    /// Remainder of `a` mod the modulus.
    pub fn reduce(&self, a: &Poly) -> Poly {
        let n = self.n();
        let m = match a.deg() {
            None => return a.clone(),
            Some(m) if m < n => return a.clone(),
            Some(m) => m,
        };
        if m > 2 * n - 1 {
            // Rare path: callers normally reduce factors first.
            return a.divrem(&self.modulus).expect("monic modulus").1;
        }
        let k = m - n + 1;
        let arev = a.reverse(m);
        let qrev = arev.mul(&self.rev_inv).truncate(k);
        let q = qrev.reverse(k - 1);
        a.sub(&q.mul(&self.modulus)).truncate(n)
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b))
    }

    /// base^e mod f with an arbitrary-precision exponent.
    pub fn modpow(&self, base: &Poly, e: &BigUint) -> Poly {
        let b = self.reduce(base);
        let mut acc = Poly::one(self.field());
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc);
            if e.bit(i) {
                acc = self.mulmod(&acc, &b);
            }
        }
        self.reduce(&acc)
    }

    pub fn modpow_u64(&self, base: &Poly, e: u64) -> Poly {
        self.modpow(base, &BigUint::from(e))
    }

    /// Cached x^q mod f.
    pub fn frobenius_base(&self) -> &Poly {
        self.frob_base.get_or_init(|| {
            let q = self.field().modulus();
            self.modpow_u64(&Poly::x(self.field()), q)
        })
    }

    /// sigma(a) = a^q mod f. Raising to the q-th power costs ~log2(q)
    /// products while composing with x^q costs ~2*sqrt(n); pick whichever
    /// is cheaper. The two routes agree because the coefficients are fixed
    /// by the Frobenius.
    pub fn frobenius_apply(&self, a: &Poly) -> Poly {
        let q = self.field().modulus();
        let qbits = 64 - q.leading_zeros() as usize;
        let compose_muls = 2 * isqrt_usize(self.n()) + 2;
        if 2 * qbits <= compose_muls {
            self.modpow_u64(a, q)
        } else {
            self.compose_auto(&self.reduce(a), self.frobenius_base())
        }
    }

    /// g(h) mod f for residues g, h (degrees below deg f).
    pub fn compose(&self, g: &Poly, h: &Poly, strategy: ComposeStrategy) -> Poly {
        assert!(
            g.deg().map_or(true, |d| d < self.n()),
            "outer polynomial must be reduced"
        );
        assert!(
            h.deg().map_or(true, |d| d < self.n()),
            "inner polynomial must be reduced"
        );
        match strategy {
            ComposeStrategy::Horner => self.compose_horner(g, h),
            ComposeStrategy::BrentKung => self.compose_brent_kung(g, h),
        }
    }

    /// Strategy chosen by outer degree; output identical either way.
    pub fn compose_auto(&self, g: &Poly, h: &Poly) -> Poly {
        if g.coeffs().len() <= 8 {
            self.compose_horner(g, h)
        } else {
            self.compose_brent_kung(g, h)
        }
    }

    fn compose_horner(&self, g: &Poly, h: &Poly) -> Poly {
        let f = self.field();
        let mut acc = Poly::zero(f);
        for &c in g.coeffs().iter().rev() {
            acc = self.mulmod(&acc, h).add(&Poly::constant(f, c));
        }
        acc
    }

    fn compose_brent_kung(&self, g: &Poly, h: &Poly) -> Poly {
        let f = self.field();
        let len = g.coeffs().len();
        if len == 0 {
            return Poly::zero(f);
        }
        // ~sqrt(len) baby steps, then Horner over h^l blocks.
        let l = (1..).find(|&l| l * l >= len).unwrap();
        let blocks = len.div_ceil(l);

        let mut baby = Vec::with_capacity(l + 1);
        baby.push(Poly::one(f));
        for i in 1..=l {
            let prev = &baby[i - 1];
            baby.push(self.mulmod(prev, h));
        }
        let giant = baby[l].clone();

        let n = self.n();
        let block_poly = |i: usize| -> Poly {
            let mut acc = vec![Felt::default(); n];
            for j in 0..l {
                let idx = i * l + j;
                if idx >= len {
                    break;
                }
                let c = g.coeff(idx);
                if c == f.zero() {
                    continue;
                }
                for (t, &bc) in baby[j].coeffs().iter().enumerate() {
                    acc[t] = f.add(acc[t], f.mul(c, bc));
                }
            }
            Poly::new(f, acc)
        };

        let mut acc = block_poly(blocks - 1);
        for i in (0..blocks - 1).rev() {
            acc = self.mulmod(&acc, &giant).add(&block_poly(i));
        }
        acc
    }
}

fn isqrt_usize(n: usize) -> usize {
    crate::intmath::isqrt(n as u64) as usize
}

/// Inverse of `a` mod x^prec by Newton iteration; `a` must have unit
/// constant term (reversals of monic polynomials do).
fn newton_inverse(a: &Poly, prec: usize) -> Poly {
    let f = a.field();
    debug_assert_eq!(a.coeff(0), f.one());
    let mut inv = Poly::one(f);
    let mut k = 1;
    while k < prec {
        k = (2 * k).min(prec);
        // inv <- inv * (2 - a * inv) mod x^k
        let t = a.truncate(k).mul(&inv).truncate(k);
        let two_minus = Poly::constant(f, f.elt(2)).sub(&t);
        inv = inv.mul(&two_minus).truncate(k);
    }
    inv.truncate(prec)
}
