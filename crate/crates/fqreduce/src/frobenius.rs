//! Iterated Frobenius powers, linear-functional projections, and the
//! minimal polynomial of the Frobenius endomorphism sigma: a -> a^q on
//! F_q[x]/(f(x)).

use crate::error::Result;
use crate::factor;
use crate::field::{Felt, PrimeField};
use crate::linalg;
use crate::modctx::ModCtx;
use crate::poly::{random_poly_below, Poly};
use crate::rng::Rng;
use std::collections::BTreeMap;

const MINPOLY_TRIALS: usize = 3;
const MINPOLY_EXTRA_TRIALS: usize = 3;

/// Table of x^{q^i} mod f, extended on demand by composition doubling:
/// x^{q^{a+b}} = h_a(h_b) mod f.
pub struct FrobTable<'a> {
    ctx: &'a ModCtx,
    entries: BTreeMap<usize, Poly>,
}

impl<'a> FrobTable<'a> {
    pub fn new(ctx: &'a ModCtx) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(0usize, ctx.x());
        FrobTable { ctx, entries }
    }

    /// Eagerly builds entries for all requested indices.
    pub fn with_indices(ctx: &'a ModCtx, indices: &[usize]) -> Self {
        let mut table = FrobTable::new(ctx);
        for &i in indices {
            table.power(i);
        }
        table
    }

    pub fn ctx(&self) -> &ModCtx {
        self.ctx
    }

    pub fn get(&self, i: usize) -> Option<&Poly> {
        self.entries.get(&i)
    }

    /// x^{q^i} mod f, computing and caching intermediates.
    pub fn power(&mut self, i: usize) -> Poly {
        if let Some(p) = self.entries.get(&i) {
            return p.clone();
        }
        let result = if i == 1 {
            self.ctx.frobenius_base().clone()
        } else if let Some(prev) = self.entries.get(&(i - 1)) {
            // Sequential fill: one Frobenius application per step.
            self.ctx.frobenius_apply(prev)
        } else {
            let half = i / 2;
            let a = self.power(half);
            let b = self.power(i - half);
            self.ctx.compose_auto(&a, &b)
        };
        self.entries.insert(i, result.clone());
        result
    }
}

/// An F_q-linear map F_q[x]/(f) -> F_q given by coefficient weights.
#[derive(Clone, Debug)]
pub struct LinearFunctional {
    weights: Vec<Felt>,
}

impl LinearFunctional {
    pub fn new(weights: Vec<Felt>) -> Self {
        LinearFunctional { weights }
    }

    pub fn random(n: usize, field: PrimeField, rng: &mut Rng) -> Self {
        LinearFunctional {
            weights: (0..n).map(|_| field.rand(rng)).collect(),
        }
    }

    pub fn apply(&self, field: PrimeField, a: &Poly) -> Felt {
        let mut acc = field.zero();
        for (j, &w) in self.weights.iter().enumerate() {
            acc = field.add(acc, field.mul(w, a.coeff(j)));
        }
        acc
    }
}

/// The projection sequence u(alpha^{q^1}), ..., u(alpha^{q^count}), one
/// modular composition with x^q per step.
pub fn automorphism_projection(
    ctx: &ModCtx,
    alpha: &Poly,
    u: &LinearFunctional,
    count: usize,
) -> Vec<Felt> {
    let field = ctx.field();
    let mut beta = ctx.reduce(alpha);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        beta = ctx.frobenius_apply(&beta);
        out.push(u.apply(field, &beta));
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FrobMode {
    /// Projection sequences + Berlekamp-Massey, verified by annihilation,
    /// with a dense deterministic fallback. Never factors.
    Independent,
    /// Factors f with the reference engine and assembles
    /// lcm(lambda^{d_i} - 1) over the factor degrees.
    Reference,
}

/// Minimal polynomial of the Frobenius endomorphism on F_q[x]/(f).
/// Both modes return identical results on identical (monic squarefree)
/// inputs.
pub fn frob_minpoly(ctx: &ModCtx, rng: &mut Rng, mode: FrobMode) -> Result<Poly> {
    match mode {
        FrobMode::Reference => {
            let fz = factor::factor(ctx.modulus(), rng)?;
            let mut degrees = fz.distinct_degrees();
            degrees.sort_unstable();
            degrees.dedup();
            Ok(lcm_of_cyclic(ctx.field(), &degrees))
        }
        FrobMode::Independent => Ok(frob_minpoly_independent(ctx, rng)),
    }
}

fn frob_minpoly_independent(ctx: &ModCtx, rng: &mut Rng) -> Poly {
    let field = ctx.field();
    let n = ctx.n();
    let mut table = FrobTable::new(ctx);
    let mut acc: Option<Poly> = None;
    for _ in 0..MINPOLY_TRIALS + MINPOLY_EXTRA_TRIALS {
        let alpha = random_poly_below(field, n, rng);
        let u = LinearFunctional::random(n, field, rng);
        // i = 0 prepended so the recurrence aligns with powers of sigma.
        let mut seq = vec![u.apply(field, &alpha)];
        seq.extend(automorphism_projection(ctx, &alpha, &u, 2 * n));
        let cand = crate::bm::berlekamp_massey(field, &seq);
        let merged = match &acc {
            None => cand,
            Some(a) => a.lcm(&cand).expect("nonzero lcm"),
        };
        acc = Some(merged);
        let g = acc.as_ref().unwrap();
        if !g.is_constant() && verify_annihilates(g, &mut table) {
            return g.clone();
        }
    }
    // Dense fallback: minimal polynomial of the Frobenius matrix.
    linalg::matrix_minpoly(field, &frobenius_matrix(ctx))
}

/// Checks g(sigma) = 0 on every basis monomial x^k, k < n. Only the
/// nonzero coefficients of g contribute, so the cost scales with the
/// sparsity of g.
pub fn verify_annihilates(g: &Poly, table: &mut FrobTable) -> bool {
    let ctx = table.ctx;
    let field = ctx.field();
    let n = ctx.n();
    let support: Vec<usize> = g
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != field.zero())
        .map(|(j, _)| j)
        .collect();
    let bases: Vec<Poly> = support.iter().map(|&j| table.power(j)).collect();
    let mut powers: Vec<Poly> = vec![Poly::one(field); support.len()];
    for k in 0..n {
        let mut sum = Poly::zero(field);
        for (t, &j) in support.iter().enumerate() {
            sum = sum.add(&powers[t].mul_scalar(g.coeff(j)));
        }
        if !sum.is_zero() {
            return false;
        }
        if k + 1 < n {
            for (t, p) in powers.iter_mut().enumerate() {
                *p = ctx.mulmod(p, &bases[t]);
            }
        }
    }
    true
}

/// Matrix of sigma in the monomial basis: column k holds (x^q)^k mod f.
pub fn frobenius_matrix(ctx: &ModCtx) -> linalg::Matrix {
    let field = ctx.field();
    let n = ctx.n();
    let xq = ctx.frobenius_base().clone();
    let mut mat = vec![vec![field.zero(); n]; n];
    let mut col = Poly::one(field);
    for k in 0..n {
        for i in 0..n {
            mat[i][k] = col.coeff(i);
        }
        if k + 1 < n {
            col = ctx.mulmod(&col, &xq);
        }
    }
    mat
}

/// lcm of lambda^d - 1 over a set of degrees.
pub fn lcm_of_cyclic(field: PrimeField, degrees: &[usize]) -> Poly {
    let mut acc = Poly::one(field);
    for &d in degrees {
        acc = acc.lcm(&x_d_minus_one(field, d)).expect("nonzero");
    }
    acc
}

/// Characteristic polynomial of sigma from a degree multiset:
/// prod (lambda^{d_i} - 1).
pub fn frob_charpoly_from_degrees(field: PrimeField, degrees: &[usize]) -> Poly {
    assert!(!degrees.is_empty());
    let mut acc = Poly::one(field);
    for &d in degrees {
        acc = acc.mul(&x_d_minus_one(field, d));
    }
    acc
}

fn x_d_minus_one(field: PrimeField, d: usize) -> Poly {
    let mut coeffs = vec![field.zero(); d + 1];
    coeffs[0] = field.neg(field.one());
    coeffs[d] = field.one();
    Poly::new(field, coeffs)
}
