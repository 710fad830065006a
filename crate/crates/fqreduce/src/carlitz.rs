//! The Carlitz F_q[x]-module action on F_q[x]/(f(x)): x acts as
//! rho_x(a) = a^q + x*a, a constant u acts as multiplication by u. The
//! characteristic polynomial chi_f of rho_x equals prod (f_i - 1) over the
//! monic irreducible factors of a squarefree f, which makes it a
//! factorization oracle target.

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::linalg;
use crate::modctx::ModCtx;
use crate::poly::Poly;

/// One Carlitz step: rho_x(a) = a^q + x*a mod f.
pub fn carlitz_step(ctx: &ModCtx, a: &Poly) -> Poly {
    let frob = ctx.frobenius_apply(a);
    frob.add(&ctx.reduce(&a.shift_up(1)))
}

/// rho_m(alpha) = (m(sigma + tau))(alpha), by iterating the single step and
/// accumulating m's coefficients.
pub fn carlitz_apply(ctx: &ModCtx, m: &Poly, alpha: &Poly) -> Poly {
    let mut beta = ctx.reduce(alpha);
    let mut acc = beta.mul_scalar(m.coeff(0));
    for i in 1..m.coeffs().len() {
        beta = carlitz_step(ctx, &beta);
        acc = acc.add(&beta.mul_scalar(m.coeff(i)));
    }
    acc
}

#[derive(Clone, Copy, Debug)]
pub enum CharPolyMode<'a> {
    /// Dense matrix of rho_x on the monomial basis, then a deterministic
    /// O(n^3) characteristic polynomial. Unconditionally correct; this is
    /// the oracle route.
    Direct,
    /// prod (f_i - 1) over a known factorization (must be squarefree).
    FromFactors(&'a Factorization),
}

/// Characteristic polynomial of rho_x on F_q[x]/(f); monic of degree
/// deg(f). Both modes agree on squarefree inputs.
pub fn carlitz_charpoly(f: &Poly, mode: CharPolyMode<'_>) -> Result<Poly> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    match mode {
        CharPolyMode::Direct => {
            let ctx = ModCtx::new(f.clone())?;
            Ok(linalg::charpoly(f.field(), &carlitz_matrix(&ctx)))
        }
        CharPolyMode::FromFactors(fz) => {
            if fz.factors().iter().any(|(_, m)| *m != 1) {
                return Err(Error::NotSquarefree);
            }
            let one = Poly::one(f.field());
            let mut acc = one.clone();
            for (fi, _) in fz.factors() {
                acc = acc.mul(&fi.sub(&one));
            }
            Ok(acc)
        }
    }
}

/// Matrix of rho_x in the monomial basis: column j holds
/// x^{jq} + x^{j+1} mod f.
pub fn carlitz_matrix(ctx: &ModCtx) -> linalg::Matrix {
    let field = ctx.field();
    let n = ctx.n();
    let xq = ctx.frobenius_base().clone();
    let x = Poly::x(field);
    let mut frob_pow = Poly::one(field); // x^{jq} mod f
    let mut x_pow = Poly::one(field); // x^j mod f
    let mut mat = vec![vec![field.zero(); n]; n];
    for j in 0..n {
        let col = frob_pow.add(&ctx.reduce(&x_pow.mul(&x)));
        for i in 0..n {
            mat[i][j] = col.coeff(i);
        }
        if j + 1 < n {
            frob_pow = ctx.mulmod(&frob_pow, &xq);
            x_pow = ctx.mulmod(&x_pow, &x);
        }
    }
    mat
}

/// deg(f) - deg(f - chi_f), the smallest irreducible factor degree when
/// the characteristic does not divide the number of smallest-degree
/// factors. The caller owns that precondition; on p | count the difference
/// can degenerate (error) or silently report a larger value, which is why
/// reduction callers re-validate by a gcd split.
pub fn smallest_degree_via_carlitz(f: &Poly, chi: &Poly) -> Result<usize> {
    let diff = f.sub(chi);
    if diff.is_zero() {
        return Err(Error::DegenerateDifference);
    }
    Ok(f.degree() - diff.degree())
}
