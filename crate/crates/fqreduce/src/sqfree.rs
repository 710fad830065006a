//! Squarefree decomposition in characteristic p.
//!
//! Yun-style peeling handles multiplicities coprime to p; when the
//! derivative vanishes the input is a p-th power, and since q = p the
//! coefficientwise p-th root is just the coefficients at indices divisible
//! by p (c^(1/p) = c on the prime field).

use crate::error::{Error, Result};
use crate::poly::Poly;
use std::collections::BTreeMap;

/// Returns pairwise-coprime squarefree parts g_i with multiplicities e_i
/// such that f = prod g_i^{e_i}, sorted by multiplicity.
pub fn squarefree_decompose(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut parts: BTreeMap<usize, Poly> = BTreeMap::new();
    decompose_into(f, 1, &mut parts)?;
    Ok(parts.into_iter().map(|(e, g)| (g, e)).collect())
}

fn decompose_into(f: &Poly, outer: usize, parts: &mut BTreeMap<usize, Poly>) -> Result<()> {
    let p = f.field().characteristic() as usize;
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = h(x)^p with h picked out of every p-th coefficient.
        let root = pth_root(f);
        return decompose_into(&root, outer * p, parts);
    }

    let mut c = f.gcd(&deriv)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if !z.is_one() {
            record(parts, i * outer, z);
        }
        i += 1;
        c = c.div_exact(&y)?;
        w = y;
    }
    if !c.is_one() {
        // Remaining factors all have multiplicity divisible by p.
        let root = pth_root(&c);
        decompose_into(&root, outer * p, parts)?;
    }
    Ok(())
}

fn record(parts: &mut BTreeMap<usize, Poly>, mult: usize, part: Poly) {
    parts
        .entry(mult)
        .and_modify(|g| *g = g.mul(&part))
        .or_insert(part);
}

fn pth_root(f: &Poly) -> Poly {
    let p = f.field().characteristic() as usize;
    let coeffs: Vec<_> = f
        .coeffs()
        .iter()
        .copied()
        .step_by(p)
        .collect();
    Poly::new(f.field(), coeffs)
}
