//! Dense univariate polynomials over a prime field.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial has an empty coefficient vector.

use crate::error::{Error, Result};
use crate::field::{Felt, PrimeField};
use crate::rng::Rng;
use std::cmp::Ordering;

const KARATSUBA_THRESHOLD: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<Felt>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<Felt>) -> Self {
        while coeffs.last() == Some(&Felt(0)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Builds from raw integers, reducing each into the field.
    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.elt(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: PrimeField, c: Felt) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Self {
        Poly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: PrimeField, c: Felt, deg: usize) -> Self {
        if c == Felt(0) {
            return Poly::zero(field);
        }
        let mut coeffs = vec![Felt(0); deg + 1];
        coeffs[deg] = c;
        Poly { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree assuming nonzero; panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        self.deg().expect("degree of zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Felt(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs.get(i).copied().unwrap_or(Felt(0))
    }

    pub fn leading(&self) -> Felt {
        self.coeffs.last().copied().unwrap_or(Felt(0))
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Felt(1)
    }

    fn check_field(&self, other: &Poly) {
        assert_eq!(self.field, other.field, "field mismatch");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(self.coeff(i), other.coeff(i)));
        }
        Poly::new(f, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.sub(self.coeff(i), other.coeff(i)));
        }
        Poly::new(f, out)
    }

    pub fn neg(&self) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn mul_scalar(&self, c: Felt) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Felt(0); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field,
            coeffs,
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let out = mul_slices(self.field, &self.coeffs, &other.coeffs);
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; `deg(r) < deg(b)`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(b);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        let db = b.degree();
        if self.is_zero() || self.degree() < db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let da = self.degree();
        let lead_inv = f.inv(b.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Felt(0); da - db + 1];
        for i in (db..=da).rev() {
            let c = rem[i];
            if c == Felt(0) {
                continue;
            }
            let qc = f.mul(c, lead_inv);
            quo[i - db] = qc;
            for j in 0..=db {
                let t = f.mul(qc, b.coeffs[j]);
                rem[i - db + j] = f.sub(rem[i - db + j], t);
            }
        }
        Ok((Poly::new(f, quo), Poly::new(f, rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact division: remainder degree {:?}",
                r.deg()
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Least common multiple, monic. lcm(0, b) = 0.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let g = self.gcd(other)?;
        Ok(self.div_exact(&g)?.mul(other).monic())
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading())
            .expect("nonzero leading coefficient");
        self.mul_scalar(inv)
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        if self.is_constant() {
            return Poly::zero(f);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(f.mul(c, f.elt(i as u64)));
        }
        Poly::new(f, out)
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, at: Felt) -> Felt {
        let f = self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, at), c);
        }
        acc
    }

    /// Small native power, by repeated squaring (no modulus).
    pub fn pow_usize(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient reversal to length `n + 1`: x^n * p(1/x).
    pub(crate) fn reverse(&self, n: usize) -> Poly {
        let mut coeffs = vec![Felt(0); n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i <= n {
                coeffs[n - i] = c;
            }
        }
        Poly::new(self.field, coeffs)
    }

    /// Truncation mod x^k.
    pub(crate) fn truncate(&self, k: usize) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().take(k).copied().collect(),
        )
    }
}

/// Canonical order: degree first, then coefficient sequences
/// lexicographically from the constant term up. Zero sorts first.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn mul_slices(f: PrimeField, a: &[Felt], b: &[Felt]) -> Vec<Felt> {
    if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
        return mul_schoolbook(f, a, b);
    }
    mul_karatsuba(f, a, b)
}

fn mul_schoolbook(f: PrimeField, a: &[Felt], b: &[Felt]) -> Vec<Felt> {
    let p = f.modulus();
    let mut out = vec![Felt(0); a.len() + b.len() - 1];
    if p < (1 << 31) {
        // Products fit in 62 bits; accumulate inner sums lazily in u128.
        for (i, &ai) in a.iter().enumerate() {
            if ai.0 == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                let t = out[i + j].0 as u128 + (ai.0 as u128) * (bj.0 as u128);
                out[i + j] = Felt((t % p as u128) as u64);
            }
        }
    } else {
        for (i, &ai) in a.iter().enumerate() {
            if ai.0 == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(ai, bj));
            }
        }
    }
    out
}

fn mul_karatsuba(f: PrimeField, a: &[Felt], b: &[Felt]) -> Vec<Felt> {
    let m = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = a.split_at(a.len().min(m));
    let (b0, b1) = b.split_at(b.len().min(m));

    let z0 = mul_slices(f, a0, b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        mul_slices(f, a1, b1)
    };
    let asum = add_slices(f, a0, a1);
    let bsum = add_slices(f, b0, b1);
    let mut z1 = mul_slices(f, &asum, &bsum);
    for (i, &c) in z0.iter().enumerate() {
        z1[i] = f.sub(z1[i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] = f.sub(z1[i], c);
    }

    let mut out = vec![Felt(0); a.len() + b.len() - 1];
    for (i, &c) in z0.iter().enumerate() {
        out[i] = f.add(out[i], c);
    }
    // z1 may carry explicit zeros beyond the true degree when one operand
    // is shorter than the split point.
    for (i, &c) in z1.iter().enumerate() {
        if i + m < out.len() {
            out[i + m] = f.add(out[i + m], c);
        } else {
            debug_assert_eq!(c, Felt(0));
        }
    }
    for (i, &c) in z2.iter().enumerate() {
        out[i + 2 * m] = f.add(out[i + 2 * m], c);
    }
    out
}

fn add_slices(f: PrimeField, a: &[Felt], b: &[Felt]) -> Vec<Felt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            f.add(
                a.get(i).copied().unwrap_or(Felt(0)),
                b.get(i).copied().unwrap_or(Felt(0)),
            )
        })
        .collect()
}

/// Uniform polynomial of degree < `len` (any coefficients, possibly zero).
pub fn random_poly_below(field: PrimeField, len: usize, rng: &mut Rng) -> Poly {
    let coeffs = (0..len).map(|_| field.rand(rng)).collect();
    Poly::new(field, coeffs)
}

/// Uniform monic polynomial of degree exactly `n`.
pub fn random_monic(field: PrimeField, n: usize, rng: &mut Rng) -> Poly {
    let mut coeffs: Vec<Felt> = (0..n).map(|_| field.rand(rng)).collect();
    coeffs.push(field.one());
    Poly { field, coeffs }
}

/// True iff `f` has no repeated irreducible factor.
pub fn is_squarefree(f: &Poly) -> bool {
    match f.deg() {
        None => false,
        Some(0) => true,
        Some(1) => true,
        Some(_) => {
            let d = f.derivative();
            if d.is_zero() {
                return false;
            }
            f.gcd(&d).map(|g| g.is_one()).unwrap_or(false)
        }
    }
}

/// Uniform monic squarefree polynomial of degree `n >= 1`, by rejection.
pub fn random_monic_squarefree(field: PrimeField, n: usize, rng: &mut Rng) -> Poly {
    assert!(n >= 1);
    loop {
        let f = random_monic(field, n, rng);
        if is_squarefree(&f) {
            return f;
        }
    }
}
