//! Reference factorization: distinct-degree splitting (plain iteration or
//! the baby-steps/giant-steps interval strategy), equal-degree splitting,
//! the full factor routine, and an exhaustive trial-division oracle.

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::modctx::ModCtx;
use crate::poly::{is_squarefree, random_poly_below, Poly};
use crate::rng::Rng;
use crate::sqfree::squarefree_decompose;
use num_bigint::BigUint;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DdfStrategy {
    /// One Frobenius composition per degree.
    Plain,
    /// ~sqrt(t) baby steps and interval polynomials, refined inside each
    /// hit interval by individual-degree gcds.
    Bsgs,
}

/// Distinct-degree split: `parts[k] = (product of irreducible factors of
/// degree exactly d_k, d_k)`, plus the unsplit remainder (factors of degree
/// beyond the requested bound).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DdfSplit {
    pub parts: Vec<(Poly, usize)>,
    pub remainder: Poly,
}

/// Splits the (monic squarefree) modulus of `ctx` by factor degree, up to
/// degree `up_to` (`None` = all the way).
pub fn ddf(ctx: &ModCtx, up_to: Option<usize>, strategy: DdfStrategy) -> Result<DdfSplit> {
    let n = ctx.n();
    let t = up_to.unwrap_or(n).min(n);
    if t == 0 {
        return Ok(DdfSplit {
            parts: Vec::new(),
            remainder: ctx.modulus().clone(),
        });
    }
    match strategy {
        DdfStrategy::Plain => ddf_plain(ctx, t),
        DdfStrategy::Bsgs => ddf_bsgs(ctx, t),
    }
}

fn ddf_plain(ctx: &ModCtx, t: usize) -> Result<DdfSplit> {
    let field = ctx.field();
    let x = Poly::x(field);
    let mut h = ctx.x();
    let mut rem = ctx.modulus().clone();
    let mut parts = Vec::new();
    for d in 1..=t {
        if rem.is_constant() {
            break;
        }
        // All remaining factors have degree >= d; fewer than 2d of degree
        // left means a single irreducible.
        if rem.degree() < 2 * d {
            if rem.degree() <= t {
                parts.push((rem.clone(), rem.degree()));
                rem = Poly::one(field);
            }
            break;
        }
        h = ctx.frobenius_apply(&h);
        let g = h.sub(&x).gcd(&rem)?;
        if !g.is_constant() {
            if g.degree() % d != 0 {
                return Err(Error::NotSquarefree);
            }
            rem = rem.div_exact(&g)?;
            parts.push((g, d));
        }
    }
    Ok(DdfSplit {
        parts,
        remainder: rem,
    })
}

fn ddf_bsgs(ctx: &ModCtx, t: usize) -> Result<DdfSplit> {
    let field = ctx.field();
    let l = (1..).find(|&l| l * l >= t).unwrap();

    let mut baby = Vec::with_capacity(l + 1);
    baby.push(ctx.x());
    baby.push(ctx.frobenius_base().clone());
    for i in 2..=l {
        baby.push(ctx.frobenius_apply(&baby[i - 1]));
    }

    let mut rem = ctx.modulus().clone();
    let mut parts = Vec::new();
    let mut giant = baby[l].clone(); // x^{q^{l*j}} for the current j
    let intervals = t.div_ceil(l);
    for j in 1..=intervals {
        if rem.is_constant() {
            break;
        }
        let lo = (j - 1) * l + 1;
        let hi = (j * l).min(t);
        if rem.degree() < 2 * lo {
            if rem.degree() <= t {
                parts.push((rem.clone(), rem.degree()));
                rem = Poly::one(field);
            }
            break;
        }
        if j > 1 {
            giant = ctx.compose_auto(&giant, &baby[l]);
        }
        // Interval polynomial: prod_{i<l} (x^{q^{lj}} - x^{q^i}) catches
        // factor degrees in ((j-1)l, jl].
        let mut interval = Poly::one(field);
        for b in baby.iter().take(l) {
            interval = ctx.mulmod(&interval, &giant.sub(b));
            if interval.is_zero() {
                break;
            }
        }
        let mut captured = if interval.is_zero() {
            rem.clone()
        } else {
            interval.gcd(&rem)?
        };
        if captured.is_constant() {
            continue;
        }
        rem = rem.div_exact(&captured)?;
        // Refine ascending so that a factor of degree d | d' cannot be
        // swept up by a later d'.
        for d in lo..=hi {
            if captured.is_constant() {
                break;
            }
            let i = l * j - d;
            let g = giant.sub(&baby[i]).gcd(&captured)?;
            if !g.is_constant() {
                if g.degree() % d != 0 {
                    return Err(Error::NotSquarefree);
                }
                captured = captured.div_exact(&g)?;
                parts.push((g, d));
            }
        }
        if !captured.is_constant() {
            // Degrees beyond t that the last interval overshot into.
            rem = rem.mul(&captured);
        }
    }
    parts.sort_by_key(|(_, d)| *d);
    Ok(DdfSplit {
        parts,
        remainder: rem,
    })
}

/// Equal-degree factorization: splits a monic product of distinct
/// irreducibles, all of degree exactly `d`, into the irreducibles.
pub fn edf(g: &Poly, d: usize, rng: &mut Rng) -> Result<Vec<Poly>> {
    if g.is_zero() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if d == 0 || g.degree() % d != 0 {
        return Err(Error::BadInput(format!(
            "degree {} not a multiple of {d}",
            g.degree()
        )));
    }
    if g.is_constant() {
        return Ok(Vec::new());
    }
    if g.degree() == d {
        return Ok(vec![g.clone()]);
    }
    let field = g.field();
    let q = field.modulus();
    let ctx = ModCtx::new(g.clone())?;
    let budget = 64 * (usize::BITS - g.degree().leading_zeros()) as usize;

    for _ in 0..budget.max(8) {
        let a = random_poly_below(field, g.degree(), rng);
        if a.is_zero() {
            continue;
        }
        // A common factor with a already splits.
        let c = a.gcd(g)?;
        let split = if !c.is_constant() && c.degree() < g.degree() {
            c
        } else if q == 2 {
            // Trace map T(a) = a + a^2 + ... + a^{2^{d-1}} lands in F_2 on
            // each component.
            let mut term = ctx.reduce(&a);
            let mut trace = term.clone();
            for _ in 1..d {
                term = ctx.mulmod(&term, &term);
                trace = trace.add(&term);
            }
            trace.gcd(g)?
        } else {
            // a^{(q^d-1)/2} is +-1 on each component.
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            let b = ctx.modpow(&a, &e);
            b.sub(&Poly::one(field)).gcd(g)?
        };
        if !split.is_constant() && split.degree() < g.degree() {
            let mut out = edf(&split, d, rng)?;
            out.extend(edf(&g.div_exact(&split)?, d, rng)?);
            return Ok(out);
        }
    }
    Err(Error::Internal(format!(
        "equal-degree split failed after {} draws",
        budget.max(8)
    )))
}

/// Complete canonical factorization of a monic nonconstant polynomial
/// (squarefree not required; decomposition runs first).
pub fn factor(f: &Poly, rng: &mut Rng) -> Result<Factorization> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = f.field();
    let mut items: Vec<(Poly, u32)> = Vec::new();
    for (g, e) in squarefree_decompose(f)? {
        let ctx = ModCtx::new(g)?;
        let split = ddf(&ctx, None, DdfStrategy::Bsgs)?;
        if !split.remainder.is_constant() {
            return Err(Error::Internal("ddf left an unsplit remainder".into()));
        }
        for (part, d) in split.parts {
            for irr in edf(&part, d, rng)? {
                items.push((irr, e as u32));
            }
        }
    }
    let fz = Factorization::new(field, items);
    if fz.product() != *f {
        return Err(Error::Internal("factor product check failed".into()));
    }
    Ok(fz)
}

/// Exhaustive trial division, the test oracle. Enumerates monic divisor
/// candidates in canonical order; provably correct wherever the guard
/// admits it.
pub fn trial_factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = f.field();
    let q = field.modulus();
    let half = f.degree().div_ceil(2);
    let mut candidates: u128 = 0;
    for d in 1..=half {
        candidates += (q as u128).saturating_pow(d as u32);
        if candidates > (1 << 22) {
            return Err(Error::TooLarge(format!(
                "trial division would enumerate more than 2^22 candidates for degree {} over F_{q}",
                f.degree()
            )));
        }
    }

    let mut rem = f.clone();
    let mut items: Vec<(Poly, u32)> = Vec::new();
    'outer: for d in 1..=half {
        if rem.is_constant() || 2 * d > rem.degree() {
            break;
        }
        // Monic degree-d candidates in lexicographic coefficient order.
        let mut counter = vec![0u64; d];
        loop {
            let mut coeffs: Vec<u64> = counter.clone();
            coeffs.push(1);
            let cand = Poly::from_u64(field, &coeffs);
            let mut mult = 0u32;
            while rem.divrem(&cand)?.1.is_zero() {
                rem = rem.div_exact(&cand)?;
                mult += 1;
            }
            if mult > 0 {
                items.push((cand, mult));
                if rem.is_constant() || 2 * d > rem.degree() {
                    break 'outer;
                }
            }
            // Increment the base-q counter.
            let mut pos = 0;
            loop {
                if pos == d {
                    break;
                }
                counter[pos] += 1;
                if counter[pos] < q {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
    }
    if !rem.is_constant() {
        items.push((rem, 1));
    }
    let fz = Factorization::new(field, items);
    if fz.product() != *f {
        return Err(Error::Internal("trial factor product check failed".into()));
    }
    Ok(fz)
}

/// Smallest irreducible factor degree of a monic squarefree f, by plain
/// distinct-degree iteration stopped at the first hit.
pub fn factor_degree_ref(f: &Poly) -> Result<usize> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let field = f.field();
    let ctx = ModCtx::new(f.clone())?;
    let x = Poly::x(field);
    let mut h = ctx.x();
    for d in 1..=f.degree() {
        if f.degree() < 2 * d {
            return Ok(f.degree());
        }
        h = ctx.frobenius_apply(&h);
        let g = h.sub(&x).gcd(f)?;
        if !g.is_constant() {
            return Ok(d);
        }
    }
    Ok(f.degree())
}

/// True iff `f` is irreducible: its own distinct-degree split at its own
/// degree.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.is_zero() || f.is_constant() {
        return Ok(false);
    }
    if f.degree() == 1 {
        return Ok(true);
    }
    if !is_squarefree(f) {
        return Ok(false);
    }
    Ok(factor_degree_ref(&f.monic())? == f.degree())
}
