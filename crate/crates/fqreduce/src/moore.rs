//! Moore and Vandermonde determinants mod f.
//!
//! The decision problems never expand the determinant: squarefreeness of f
//! collapses Delta(1, x, ..., x^m) = 0 mod f to prod_{d<=m} (x^{q^d} - x)
//! = 0 mod f, and the Vandermonde residue over the index set S_m is a
//! plain pair product. Direct determinant evaluation survives as a
//! small-scale oracle (division-free, since the quotient ring has zero
//! divisors).

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::frobenius::FrobTable;
use crate::intmath::isqrt;
use crate::linalg::det_division_free;
use crate::modctx::ModCtx;
use crate::poly::Poly;

/// The index set S_m: {0..b-1} together with every multiple of b up to m,
/// and m itself (b = floor(sqrt(m))). Stopping the multiples at b^2
/// instead would lose differences in (b^2 + b, m) -- m = 8 already misses
/// 5 -- and the gcd identity underneath the Vandermonde reduction needs
/// the full cover {1..=m}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSetSm {
    pub m: usize,
    pub elements: Vec<usize>,
}

pub fn build_sm(m: usize) -> IndexSetSm {
    assert!(m >= 1);
    let b = isqrt(m as u64) as usize;
    let mut set = std::collections::BTreeSet::new();
    for i in 0..b {
        set.insert(i);
    }
    let mut j = b;
    while j <= m {
        set.insert(j);
        j += b;
    }
    set.insert(m);
    IndexSetSm {
        m,
        elements: set.into_iter().collect(),
    }
}

impl IndexSetSm {
    /// |S_m| <= 2*floor(sqrt(m)) + 3 (the extra multiples past b^2 cost at
    /// most two elements over the b^2-truncated set).
    pub fn size_bound_holds(&self) -> bool {
        self.elements.len() <= 2 * isqrt(self.m as u64) as usize + 3
    }

    /// {j - i : i < j in S_m} covers 1..=m.
    pub fn differences_cover(&self) -> bool {
        let mut hit = vec![false; self.m + 1];
        for (a, &i) in self.elements.iter().enumerate() {
            for &j in &self.elements[a + 1..] {
                let d = j - i;
                if d <= self.m {
                    hit[d] = true;
                }
            }
        }
        hit[1..].iter().all(|&h| h)
    }
}

const DIRECT_DET_GUARD: u128 = 1 << 33;

/// Determinant of the (m+1)x(m+1) Moore matrix with entries
/// x^{j*q^i} mod f, evaluated division-free over the quotient ring.
/// Desk-scale oracle only.
pub fn moore_det_direct(ctx: &ModCtx, m: usize) -> Result<Poly> {
    let n = ctx.n();
    if m > n {
        return Err(Error::TooLarge(format!("m = {m} exceeds deg f = {n}")));
    }
    let k = (m + 1) as u128;
    if k * k * k * (n as u128) * (n as u128) > DIRECT_DET_GUARD {
        return Err(Error::TooLarge(format!(
            "direct Moore determinant guard exceeded: m = {m}, n = {n}"
        )));
    }
    let field = ctx.field();
    let mut table = FrobTable::new(ctx);
    let mut mat = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let base = table.power(i);
        let mut row = Vec::with_capacity(m + 1);
        let mut cell = Poly::one(field);
        for j in 0..=m {
            if j > 0 {
                cell = ctx.mulmod(&cell, &base);
            }
            row.push(cell.clone());
        }
        mat.push(row);
    }
    Ok(det_division_free(field, &mat, |a, b| ctx.mulmod(a, b)))
}

/// Symbolic Moore determinant of (1, x, ..., x^m) over F_q[x] with no
/// modulus; exact, for the Carlitz-factorial identity at tiny sizes.
pub fn moore_det_symbolic(field: PrimeField, m: usize) -> Result<Poly> {
    let q = field.modulus();
    let top = (q as u128).saturating_pow(m as u32) * (m as u128);
    if top > (1 << 22) {
        return Err(Error::TooLarge(format!(
            "symbolic Moore determinant guard exceeded: q = {q}, m = {m}"
        )));
    }
    let mut mat = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let qi = (q as u128).pow(i as u32) as usize;
        let row: Vec<Poly> = (0..=m)
            .map(|j| Poly::monomial(field, field.one(), j * qi))
            .collect();
        mat.push(row);
    }
    Ok(det_division_free(field, &mat, |a, b| a.mul(b)))
}

/// The Carlitz factorial prod_{0<=i<j<=m} (x^{q^{j-i}} - x)^{q^i}, exact
/// over F_q[x]; pairs with [`moore_det_symbolic`].
pub fn carlitz_factorial_symbolic(field: PrimeField, m: usize) -> Result<Poly> {
    let q = field.modulus();
    let top = (q as u128).saturating_pow(m as u32) * (m as u128);
    if top > (1 << 22) {
        return Err(Error::TooLarge(format!(
            "symbolic Carlitz factorial guard exceeded: q = {q}, m = {m}"
        )));
    }
    let x = Poly::x(field);
    let mut acc = Poly::one(field);
    for i in 0..m {
        for j in i + 1..=m {
            let d = j - i;
            let term = Poly::monomial(field, field.one(), (q as u128).pow(d as u32) as usize)
                .sub(&x);
            acc = acc.mul(&term.pow_usize((q as u128).pow(i as u32) as usize));
        }
    }
    Ok(acc)
}

/// Decides Delta(1, x, ..., x^m) = 0 mod f without large exponents:
/// for squarefree f this is prod_{d=1}^{m} (x^{q^d} - x) = 0 mod f,
/// with early exit once the running product hits zero.
pub fn moore_zero_test(ctx: &ModCtx, m: usize, table: &mut FrobTable) -> bool {
    debug_assert!(m >= 1);
    let x = ctx.x();
    let mut acc = Poly::one(ctx.field());
    for d in 1..=m {
        let term = table.power(d).sub(&x);
        acc = ctx.mulmod(&acc, &term);
        if acc.is_zero() {
            return true;
        }
    }
    false
}

/// The exact Vandermonde residue V_m mod f over the index set S_m:
/// prod_{i<j in S_m} (x^{q^j} - x^{q^i}), about 2m modular products.
pub fn vandermonde_det(ctx: &ModCtx, m: usize, table: &mut FrobTable) -> Poly {
    let s = build_sm(m);
    let powers: Vec<Poly> = s.elements.iter().map(|&i| table.power(i)).collect();
    let mut acc = Poly::one(ctx.field());
    for a in 0..powers.len() {
        for b in a + 1..powers.len() {
            let term = powers[b].sub(&powers[a]);
            acc = ctx.mulmod(&acc, &term);
            if acc.is_zero() {
                return acc;
            }
        }
    }
    acc
}

/// Splits f into (product of factors of degree <= m, the rest), computed
/// from gcd(prod_{1<=d<=m} (x^{q^d} - x), f). The identity
/// gcd(V_m, f) = low is a test property, not the computation path.
pub fn vandermonde_gcd_split(ctx: &ModCtx, m: usize, table: &mut FrobTable) -> Result<(Poly, Poly)> {
    if m == 0 {
        return Err(Error::BadInput("m must be at least 1".into()));
    }
    let f = ctx.modulus();
    let x = ctx.x();
    let mut acc = Poly::one(ctx.field());
    for d in 1..=m {
        let term = table.power(d).sub(&x);
        acc = ctx.mulmod(&acc, &term);
        if acc.is_zero() {
            break;
        }
    }
    let low = if acc.is_zero() {
        f.clone()
    } else {
        acc.gcd(f)?
    };
    let high = f.div_exact(&low)?;
    Ok((low, high))
}

/// Binary search for the largest irreducible factor degree, given a
/// monotone zero oracle ("true" from the answer upward). Returns the
/// degree and the number of oracle calls spent.
pub fn largest_degree_binary_search<F>(n: usize, mut zero_oracle: F) -> Result<(usize, usize)>
where
    F: FnMut(usize) -> Result<bool>,
{
    if n == 0 {
        return Err(Error::BadInput("constant polynomial".into()));
    }
    let mut lo = 1usize;
    let mut hi = n;
    let mut calls = 0usize;
    let mut confirmed_true: Option<usize> = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        calls += 1;
        if zero_oracle(mid)? {
            confirmed_true = Some(mid);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if confirmed_true != Some(lo) {
        calls += 1;
        if !zero_oracle(lo)? {
            return Err(Error::OracleInconsistent(format!(
                "zero test false at the bracketed answer m = {lo}"
            )));
        }
    }
    Ok((lo, calls))
}
