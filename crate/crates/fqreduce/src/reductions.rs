//! The reduction web: Factor from a Factor-Degree oracle, Factor from a
//! Frobenius-Min-Poly oracle (with the FindOrder / FindCyclotomic / Findk
//! / FindT subroutines), Factor Degree from the Carlitz characteristic
//! polynomial and from Moore/Vandermonde zero tests, plus the easy
//! factorization-backed directions.
//!
//! Every oracle is a pluggable handle: `Reference` routes through the
//! factor engine, `Independent` never touches it. Call counters make the
//! independence claim checkable.

use crate::carlitz::{carlitz_charpoly, smallest_degree_via_carlitz, CharPolyMode};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::factor::{ddf, edf, factor, factor_degree_ref, DdfStrategy};
use crate::factorization::Factorization;
use crate::field::{is_prime_u64, PrimeField};
use crate::frobenius::{frob_charpoly_from_degrees, frob_minpoly, FrobMode, FrobTable};
use crate::intmath::{ceil_pow_two_thirds, divisors, euler_phi};
use crate::minpoly::minpoly_mod;
use crate::modctx::ModCtx;
use crate::moore::{largest_degree_binary_search, moore_zero_test, vandermonde_det};
use crate::poly::{is_squarefree, Poly};
use crate::rng::Rng;
use crate::sqfree::squarefree_decompose;
use std::cell::Cell;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleMode {
    /// Backed by the reference factor engine.
    Reference,
    /// Factorization-free computation from the frobenius / carlitz /
    /// moore-vandermonde modules.
    Independent,
}

#[derive(Default, Debug)]
pub struct OracleCounters {
    pub factor_degree_calls: Cell<u64>,
    pub frob_minpoly_calls: Cell<u64>,
    pub carlitz_calls: Cell<u64>,
    pub moore_zero_calls: Cell<u64>,
    /// Incremented whenever the factor engine runs on behalf of an oracle
    /// handle or a declared fallback. Stays zero in independent mode
    /// unless a fallback fires.
    pub engine_calls: Cell<u64>,
}

/// Pluggable oracle handles with per-oracle call counters.
pub struct OracleSet {
    pub factor_degree: OracleMode,
    pub frob_minpoly: OracleMode,
    pub carlitz_charpoly: OracleMode,
    pub moore_zero: OracleMode,
    counters: OracleCounters,
}

impl OracleSet {
    pub fn all(mode: OracleMode) -> Self {
        OracleSet {
            factor_degree: mode,
            frob_minpoly: mode,
            carlitz_charpoly: mode,
            moore_zero: mode,
            counters: OracleCounters::default(),
        }
    }

    pub fn reference() -> Self {
        Self::all(OracleMode::Reference)
    }

    pub fn independent() -> Self {
        Self::all(OracleMode::Independent)
    }

    pub fn counters(&self) -> &OracleCounters {
        &self.counters
    }

    fn note_engine_use(&self) {
        self.counters
            .engine_calls
            .set(self.counters.engine_calls.get() + 1);
    }

    /// A true irreducible factor degree of f. The reference handle reports
    /// the smallest degree, the independent handle the largest (via Moore
    /// zero tests); either satisfies the Factor Degree contract.
    pub fn call_factor_degree(&self, f: &Poly, _rng: &mut Rng) -> Result<usize> {
        self.counters
            .factor_degree_calls
            .set(self.counters.factor_degree_calls.get() + 1);
        match self.factor_degree {
            OracleMode::Reference => {
                self.note_engine_use();
                factor_degree_ref(f)
            }
            OracleMode::Independent => {
                let ctx = ModCtx::new(f.clone())?;
                let mut table = FrobTable::new(&ctx);
                let (d, _) = largest_degree_binary_search(f.degree(), |m| {
                    Ok(moore_zero_test(&ctx, m, &mut table))
                })?;
                Ok(d)
            }
        }
    }

    /// Minimal polynomial of the Frobenius endomorphism on F_q[x]/(f).
    pub fn call_frob_minpoly(&self, f: &Poly, rng: &mut Rng) -> Result<Poly> {
        self.counters
            .frob_minpoly_calls
            .set(self.counters.frob_minpoly_calls.get() + 1);
        let ctx = ModCtx::new(f.clone())?;
        match self.frob_minpoly {
            OracleMode::Reference => {
                self.note_engine_use();
                frob_minpoly(&ctx, rng, FrobMode::Reference)
            }
            OracleMode::Independent => frob_minpoly(&ctx, rng, FrobMode::Independent),
        }
    }

    /// Carlitz characteristic polynomial chi_f.
    pub fn call_carlitz_charpoly(&self, f: &Poly, rng: &mut Rng) -> Result<Poly> {
        self.counters
            .carlitz_calls
            .set(self.counters.carlitz_calls.get() + 1);
        match self.carlitz_charpoly {
            OracleMode::Reference => {
                self.note_engine_use();
                let fz = factor(f, rng)?;
                carlitz_charpoly(f, CharPolyMode::FromFactors(&fz))
            }
            OracleMode::Independent => carlitz_charpoly(f, CharPolyMode::Direct),
        }
    }
}

/// Flattens a squarefree factorization into its factor list.
fn irreducible_list(fz: &Factorization) -> Vec<Poly> {
    let mut out = Vec::new();
    for (p, m) in fz.factors() {
        for _ in 0..*m {
            out.push(p.clone());
        }
    }
    out
}

fn ensure_monic_squarefree(f: &Poly) -> Result<()> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Factor from a Factor-Degree oracle
// ---------------------------------------------------------------------

/// Two-stage reduction: strip all factor degrees <= t with the splitting
/// polynomial s(x) = prod_{i<=t} (x^{q^i} - x), then repeatedly ask the
/// oracle for a degree of the remainder and split it off by gcd. The
/// stage-2 loop runs at most n/t rounds.
pub fn reduce_factor_via_factordegree(
    f: &Poly,
    oracles: &OracleSet,
    t_override: Option<usize>,
    rng: &mut Rng,
) -> Result<Factorization> {
    ensure_monic_squarefree(f)?;
    let field = f.field();
    let n = f.degree();
    let t = t_override
        .unwrap_or(ceil_pow_two_thirds(n as u64) as usize)
        .clamp(1, n);

    let ctx = ModCtx::new(f.clone())?;
    let mut table = FrobTable::new(&ctx);
    let x = Poly::x(field);

    // Stage 1: s(x) mod f and the small-degree part g = gcd(s, f).
    let mut s = Poly::one(field);
    for i in 1..=t {
        let term = table.power(i).sub(&x);
        s = ctx.mulmod(&s, &term);
        if s.is_zero() {
            break;
        }
    }
    let g = if s.is_zero() { f.clone() } else { s.gcd(f)? };

    let mut out: Vec<Poly> = Vec::new();
    if !g.is_constant() {
        let gctx = ModCtx::new(g.clone())?;
        let split = ddf(&gctx, Some(t), DdfStrategy::Bsgs)?;
        if !split.remainder.is_constant() {
            return Err(Error::Internal(
                "stage-1 part contained degrees above t".into(),
            ));
        }
        for (part, d) in split.parts {
            out.extend(edf(&part, d, rng)?);
        }
    }

    // Stage 2: oracle rounds on the large-degree remainder.
    let mut cur = f.div_exact(&g)?;
    let budget = (n / t).max(1);
    let mut rounds = 0usize;
    while !cur.is_constant() {
        rounds += 1;
        if rounds > budget {
            return Err(Error::LoopBudgetExceeded);
        }
        let d = oracles.call_factor_degree(&cur, rng)?;
        if d == 0 || d > cur.degree() {
            return Err(Error::OracleLied(d));
        }
        let curctx = ModCtx::new(cur.clone())?;
        let mut curtable = FrobTable::new(&curctx);
        let split = curtable.power(d).sub(&x).gcd(&cur)?;
        if split.is_constant() {
            return Err(Error::OracleLied(d));
        }
        cur = cur.div_exact(&split)?;
        // The gcd also captures factors whose degree properly divides d;
        // peel divisors in ascending order so each EDF input is pure.
        let mut pending = split;
        for dd in divisors(d as u64) {
            if pending.is_constant() {
                break;
            }
            let dd = dd as usize;
            let gdd = if dd == d {
                pending.clone()
            } else {
                curtable.power(dd).sub(&x).gcd(&pending)?
            };
            if !gdd.is_constant() {
                pending = pending.div_exact(&gdd)?;
                out.extend(edf(&gdd, dd, rng)?);
            }
        }
        if !pending.is_constant() {
            return Err(Error::Internal("divisor refinement left residue".into()));
        }
    }

    let fz = Factorization::from_irreducibles(field, out);
    if fz.product() != *f {
        return Err(Error::Internal(
            "factor-degree reduction product check failed".into(),
        ));
    }
    Ok(fz)
}

// ---------------------------------------------------------------------
// Factor from a Frobenius-Min-Poly oracle
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Default, Debug)]
pub struct Alg1Diagnostics {
    pub fallback_used: bool,
    pub max_depth: usize,
    pub find_t_retries: u64,
    pub oracle_calls: u64,
}

const FIND_T_ATTEMPTS: usize = 4;

/// Recursive reduction from Factor to Frobenius Min-Poly: strip degrees up
/// to ~n^{2/3}, query the oracle, factor its answer recursively, infer the
/// candidate degree set S through FindT, and split f along S. Randomized
/// subroutines are verified deterministically; bounded retries, then a
/// loudly-flagged fallback to the reference engine.
pub fn reduce_factor_via_frobminpoly(
    f: &Poly,
    oracles: &OracleSet,
    rng: &mut Rng,
) -> Result<(Factorization, Alg1Diagnostics)> {
    ensure_monic_squarefree(f)?;
    let n = f.degree();
    let depth_cap = 2 * (usize::BITS - n.leading_zeros()) as usize + 2;
    let mut diag = Alg1Diagnostics::default();
    let factors = alg1(f, oracles, rng, 1, depth_cap, &mut diag)?;
    let fz = Factorization::from_irreducibles(f.field(), factors);
    if fz.product() != *f {
        return Err(Error::Internal(
            "frobminpoly reduction product check failed".into(),
        ));
    }
    Ok((fz, diag))
}

fn alg1(
    f: &Poly,
    oracles: &OracleSet,
    rng: &mut Rng,
    depth: usize,
    depth_cap: usize,
    diag: &mut Alg1Diagnostics,
) -> Result<Vec<Poly>> {
    diag.max_depth = diag.max_depth.max(depth);
    let field = f.field();
    let n = f.degree();
    if depth > depth_cap {
        diag.fallback_used = true;
        oracles.note_engine_use();
        return Ok(irreducible_list(&factor(f, rng)?));
    }
    let b = ceil_pow_two_thirds(n as u64) as usize;

    // Line 1: output factors of degree <= b; if at most one larger factor
    // can remain, finish without the oracle.
    let ctx = ModCtx::new(f.clone())?;
    let split = ddf(&ctx, Some(b), DdfStrategy::Bsgs)?;
    let mut out = Vec::new();
    for (part, d) in split.parts {
        out.extend(edf(&part, d, rng)?);
    }
    let rem = split.remainder;
    if rem.is_constant() {
        return Ok(out);
    }
    if rem.degree() < 2 * (b + 1) {
        out.push(rem);
        return Ok(out);
    }

    // Line 2: the oracle, spot-checked on the basis element x.
    diag.oracle_calls += 1;
    let g = oracles.call_frob_minpoly(&rem, rng)?;
    let rem_ctx = ModCtx::new(rem.clone())?;
    let mut rem_table = FrobTable::new(&rem_ctx);
    let mut probe = Poly::zero(field);
    for (j, &c) in g.coeffs().iter().enumerate() {
        if c != field.zero() {
            probe = probe.add(&rem_table.power(j).mul_scalar(c));
        }
    }
    if !probe.is_zero() {
        return Err(Error::OracleInconsistent(
            "frobenius minimal polynomial does not annihilate x".into(),
        ));
    }

    // Line 3: factor g recursively, carrying multiplicities into the
    // flattened multiset.
    let mut l0: Vec<Poly> = Vec::new();
    for (u, e) in squarefree_decompose(&g)? {
        let sub = alg1(&u, oracles, rng, depth + 1, depth_cap, diag)?;
        for h in sub {
            for _ in 0..e {
                l0.push(h.clone());
            }
        }
    }
    l0.sort();

    // Lines 4-6 with bounded retries on the randomized certificate.
    for attempt in 0..FIND_T_ATTEMPTS {
        if attempt > 0 {
            diag.find_t_retries += 1;
        }
        let cert = match find_t(l0.clone(), n, rng) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let s_values = cert.s_values();
        if !s_budget_holds(&s_values, n, b) {
            return Err(Error::Internal("S budget inequality violated".into()));
        }
        match strip_by_degrees(&rem, &mut rem_table, &s_values, b, rng) {
            Ok(stripped) => {
                out.extend(stripped);
                return Ok(out);
            }
            Err(_) => continue,
        }
    }

    diag.fallback_used = true;
    oracles.note_engine_use();
    out.extend(irreducible_list(&factor(&rem, rng)?));
    Ok(out)
}

/// Number of s in S above the cutoff is at most (sum of S) / n^{2/3};
/// compared exactly via cubes.
fn s_budget_holds(s_values: &[u64], n: usize, b: usize) -> bool {
    let count = s_values.iter().filter(|&&s| s > b as u64).count() as u128;
    let total: u128 = s_values.iter().map(|&s| s as u128).sum();
    count.pow(3) * (n as u128).pow(2) <= total.pow(3)
}

/// Line 6: for each s in S above the cutoff, ascending, split off
/// gcd(x^{q^s} - x, f) and factor it by EDF at degree s. Errors if any
/// factor remains unaccounted (certificate was incomplete).
fn strip_by_degrees(
    rem: &Poly,
    table: &mut FrobTable,
    s_values: &[u64],
    b: usize,
    rng: &mut Rng,
) -> Result<Vec<Poly>> {
    let x = Poly::x(rem.field());
    let mut cur = rem.clone();
    let mut out = Vec::new();
    for &s in s_values {
        let s = s as usize;
        if s <= b || cur.is_constant() {
            continue;
        }
        if s > rem.degree() {
            break;
        }
        let g = table.power(s).sub(&x).gcd(&cur)?;
        if g.is_constant() {
            continue;
        }
        cur = cur.div_exact(&g)?;
        out.extend(edf(&g, s, rng)?);
    }
    if !cur.is_constant() {
        return Err(Error::Internal(
            "degree certificate missed a factor degree".into(),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// FindOrder / FindCyclotomic / Findk / FindT
// ---------------------------------------------------------------------

/// A set of monic irreducible factors of a common cyclotomic polynomial,
/// with canonical-order fast lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorSet {
    polys: BTreeSet<Poly>,
}

impl CycloFactorSet {
    pub fn singleton(g0: Poly) -> Self {
        let mut polys = BTreeSet::new();
        polys.insert(g0);
        CycloFactorSet { polys }
    }

    pub fn from_iter<I: IntoIterator<Item = Poly>>(it: I) -> Self {
        CycloFactorSet {
            polys: it.into_iter().collect(),
        }
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.polys.contains(p)
    }

    pub fn insert(&mut self, p: Poly) -> bool {
        self.polys.insert(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Poly> {
        self.polys.iter()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn product(&self) -> Poly {
        let field = self
            .polys
            .first()
            .expect("nonempty factor set")
            .field();
        let mut acc = Poly::one(field);
        for p in &self.polys {
            acc = acc.mul(p);
        }
        acc
    }
}

/// Iteration tripwire for [`find_order`]; termination is guaranteed by the
/// repeat-detection, the cap only catches implementation bugs.
const FIND_ORDER_CAP: usize = 100_000;

/// Algorithm: walk r_e = r_{e-1}^ell in F_q[lambda]/(f_0) and watch the
/// minimal polynomials. If ell is a unit mod k this returns the order of
/// H*ell in G/H for the subgroup H associated with L; otherwise 0.
pub fn find_order(ell: u64, l_set: &CycloFactorSet, rng: &mut Rng) -> Result<u64> {
    let f0 = l_set
        .iter()
        .next()
        .ok_or_else(|| Error::BadInput("empty cyclotomic factor set".into()))?
        .clone();
    let ctx = ModCtx::new(f0.clone())?;
    let mut r = ctx.x();
    let mut seen: BTreeSet<Poly> = BTreeSet::new();
    seen.insert(f0);
    for e in 1..=FIND_ORDER_CAP {
        r = ctx.modpow_u64(&r, ell);
        let fe = minpoly_mod(&r, &ctx, rng);
        if l_set.contains(&fe) {
            return Ok(e as u64);
        }
        if !seen.insert(fe) {
            return Ok(0);
        }
    }
    Err(Error::Internal("find_order iteration cap exceeded".into()))
}

/// Repetition count floor(c * ln n * ln ln max(n,3)) with c = 8, floored
/// at one.
fn cyclotomic_reps(n: usize) -> usize {
    let nf = n as f64;
    let lnln = (n.max(3) as f64).ln().ln();
    ((8.0 * nf.ln() * lnln).floor() as usize).max(1)
}

/// Grows the factor set of Phi_k from one irreducible factor by powering
/// roots with random exponents; complete with high probability (failures
/// surface later through the FindT divisibility check).
pub fn find_cyclotomic(g0: &Poly, n: usize, rng: &mut Rng) -> Result<CycloFactorSet> {
    let mut l = CycloFactorSet::singleton(g0.clone());
    let reps = cyclotomic_reps(n);
    for _ in 0..reps {
        let ell = rng.uniform(1, n.max(1) as u64)?;
        let e = find_order(ell, &l, rng)?;
        if e <= 1 {
            continue;
        }
        let snapshot: Vec<Poly> = l.iter().cloned().collect();
        for h in snapshot {
            let ctx = ModCtx::new(h)?;
            let mut r = ctx.x();
            for _ in 1..e {
                r = ctx.modpow_u64(&r, ell);
                l.insert(minpoly_mod(&r, &ctx, rng));
            }
        }
    }
    Ok(l)
}

/// Recovers k (or a divisor of it) from an irreducible factor g_0 of
/// Phi_k, given d | phi(k): for each prime ell with (ell-1) | d, the inner
/// loop determines the ell-adic valuation of k. Exact when d = phi(k).
pub fn find_k(d: u64, g0: &Poly, rng: &mut Rng) -> Result<u64> {
    let mut k0: u64 = 1;
    let ctx0 = ModCtx::new(g0.clone())?;
    for ell in prime_candidates(d) {
        let mut e = 0u32;
        let mut r = ctx0.x();
        let mut h = g0.clone();
        loop {
            let single = CycloFactorSet::singleton(h.clone());
            if find_order(ell, &single, rng)? != 0 {
                break;
            }
            e += 1;
            if e > 64 {
                return Err(Error::Internal("find_k valuation cap exceeded".into()));
            }
            r = ctx0.modpow_u64(&r, ell);
            h = minpoly_mod(&r, &ctx0, rng);
        }
        k0 = ell
            .checked_pow(e)
            .and_then(|pe| k0.checked_mul(pe))
            .ok_or_else(|| Error::Internal("find_k overflow".into()))?;
    }
    Ok(k0)
}

/// Primes ell with (ell - 1) | d, ascending.
fn prime_candidates(d: u64) -> Vec<u64> {
    divisors(d)
        .into_iter()
        .map(|e| e + 1)
        .filter(|&l| is_prime_u64(l))
        .collect()
}

/// The set T = {k : p does not divide k, Phi_k | g} with multiplicities
/// m_k, plus the derived degree candidates S = {k p^e : e <= log_p m_k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub p: u64,
    pub multiplicities: BTreeMap<u64, u32>,
}

impl DegreeCertificate {
    pub fn t_set(&self) -> Vec<u64> {
        self.multiplicities.keys().copied().collect()
    }

    pub fn s_values(&self) -> Vec<u64> {
        let mut out = BTreeSet::new();
        for (&k, &mk) in &self.multiplicities {
            let mut pe: u64 = 1;
            loop {
                out.insert(k * pe);
                match pe.checked_mul(self.p) {
                    Some(next) if next <= mk as u64 => pe = next,
                    _ => break,
                }
            }
        }
        out.into_iter().collect()
    }

    /// sum over T of m_k * phi(k); bounded by deg(g).
    pub fn weighted_phi_sum(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&k, &mk)| euler_phi(k) * mk as u64)
            .sum()
    }
}

/// FindT: repeatedly pick a factor from the multiset, recover the full
/// factor set of its cyclotomic polynomial and the integer k, verify by
/// the divisibility check, and consume the found factors. Failed rounds
/// retry with fresh randomness up to 32 rounds per initial element.
pub fn find_t(l0: Vec<Poly>, n: usize, rng: &mut Rng) -> Result<DegreeCertificate> {
    let mut remaining = l0;
    remaining.sort();
    let p = match remaining.first() {
        None => {
            return Ok(DegreeCertificate {
                p: 2,
                multiplicities: BTreeMap::new(),
            })
        }
        Some(f0) => f0.field().characteristic(),
    };
    let field = remaining[0].field();
    let k_cap = 4 * (n as u64).pow(2) + 16;
    let round_cap = remaining.len() * 32;
    let mut multiplicities: BTreeMap<u64, u32> = BTreeMap::new();
    let mut rounds = 0usize;
    while !remaining.is_empty() {
        rounds += 1;
        if rounds > round_cap {
            return Err(Error::Stuck(format!(
                "find_t made no progress after {round_cap} rounds"
            )));
        }
        let g0 = remaining[0].clone();
        let Ok(l) = find_cyclotomic(&g0, n, rng) else {
            continue;
        };
        let h = l.product();
        let d = h.degree() as u64;
        let Ok(k0) = find_k(d, &g0, rng) else {
            continue;
        };
        if k0 == 0 || k0 > k_cap {
            continue;
        }
        // h | lambda^{k0} - 1 certifies k0 = k.
        let mut xk = vec![field.zero(); k0 as usize + 1];
        xk[0] = field.neg(field.one());
        xk[k0 as usize] = field.one();
        let xk = Poly::new(field, xk);
        if !xk.divrem(&h)?.1.is_zero() {
            continue;
        }
        *multiplicities.entry(k0).or_insert(0) += 1;
        for fi in l.iter() {
            if let Ok(pos) = remaining.binary_search(fi) {
                remaining.remove(pos);
            }
        }
    }
    Ok(DegreeCertificate { p, multiplicities })
}

// ---------------------------------------------------------------------
// Factor Degree via Carlitz and via determinants
// ---------------------------------------------------------------------

/// Asks the Carlitz oracle for chi_f and reads off
/// deg(f) - deg(f - chi_f). Untrusted when p divides the number of
/// smallest-degree factors; pair with [`validate_factor_degree`].
pub fn factor_degree_via_carlitz(f: &Poly, oracles: &OracleSet, rng: &mut Rng) -> Result<usize> {
    ensure_monic_squarefree(f)?;
    let chi = oracles.call_carlitz_charpoly(f, rng)?;
    smallest_degree_via_carlitz(f, &chi)
}

/// gcd(x^{q^d} - x, f) != 1, i.e. f really has a factor of a degree
/// dividing d.
pub fn validate_factor_degree(f: &Poly, d: usize) -> Result<bool> {
    if d == 0 {
        return Ok(false);
    }
    let ctx = ModCtx::new(f.clone())?;
    let mut table = FrobTable::new(&ctx);
    let g = table.power(d).sub(&Poly::x(f.field())).gcd(f)?;
    Ok(!g.is_one())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DetVariant {
    Moore,
    Vandermonde,
}

/// Largest irreducible factor degree by binary search over determinant
/// zero tests. Returns the degree and the number of zero-test calls.
pub fn factor_degree_via_determinant(
    f: &Poly,
    which: DetVariant,
    oracles: &OracleSet,
    rng: &mut Rng,
) -> Result<(usize, usize)> {
    ensure_monic_squarefree(f)?;
    let ctx = ModCtx::new(f.clone())?;
    let mut table = FrobTable::new(&ctx);
    let reference_max = match oracles.moore_zero {
        OracleMode::Reference => {
            oracles.note_engine_use();
            Some(factor(f, rng)?.max_degree().expect("nonconstant"))
        }
        OracleMode::Independent => None,
    };
    let counters = oracles.counters();
    largest_degree_binary_search(f.degree(), |m| {
        counters
            .moore_zero_calls
            .set(counters.moore_zero_calls.get() + 1);
        Ok(match reference_max {
            Some(dmax) => dmax <= m,
            None => match which {
                DetVariant::Moore => moore_zero_test(&ctx, m, &mut table),
                DetVariant::Vandermonde => vandermonde_det(&ctx, m, &mut table).is_zero(),
            },
        })
    })
}

// ---------------------------------------------------------------------
// Easy directions
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EasyTarget {
    FrobMinPoly,
    FrobCharPoly,
    CarlitzCharPoly,
}

/// The nearly-linear directions: factor with the engine, then assemble
/// the requested polynomial from the factor degrees (or factors).
pub fn easy_directions(f: &Poly, target: EasyTarget, rng: &mut Rng) -> Result<Poly> {
    ensure_monic_squarefree(f)?;
    let fz = factor(f, rng)?;
    match target {
        EasyTarget::FrobMinPoly => {
            let mut degrees = fz.distinct_degrees();
            degrees.sort_unstable();
            degrees.dedup();
            Ok(crate::frobenius::lcm_of_cyclic(f.field(), &degrees))
        }
        EasyTarget::FrobCharPoly => Ok(frob_charpoly_from_degrees(f.field(), &fz.degrees())),
        EasyTarget::CarlitzCharPoly => carlitz_charpoly(f, CharPolyMode::FromFactors(&fz)),
    }
}

/// Convenience wrapper used by tests: all irreducible factors of Phi_k
/// over F_q, via the reference engine.
pub fn cyclotomic_factors(k: u64, field: PrimeField, rng: &mut Rng) -> Result<CycloFactorSet> {
    let phi = cyclotomic(k, field);
    if phi.is_constant() {
        return Err(Error::BadInput("constant cyclotomic".into()));
    }
    let fz = factor(&phi, rng)?;
    Ok(CycloFactorSet::from_iter(
        fz.factors().iter().map(|(p, _)| p.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::random_monic_squarefree;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, coeffs: &[u64]) -> Poly {
        Poly::from_u64(fp(p), coeffs)
    }

    #[test]
    fn find_order_examples_k7_q2() {
        // G = (Z/7Z)^x, G_0 = <2> = {1,2,4}; L = {l^3+l+1} is associated
        // with G_0 itself.
        let l = CycloFactorSet::singleton(poly(2, &[1, 1, 0, 1]));
        let mut rng = Rng::new(0xF0F0);
        assert_eq!(find_order(2, &l, &mut rng).unwrap(), 1);
        assert_eq!(find_order(3, &l, &mut rng).unwrap(), 2);
        assert_eq!(find_order(7, &l, &mut rng).unwrap(), 0);
    }

    #[test]
    fn find_cyclotomic_examples() {
        let mut rng = Rng::new(0xC1C10);
        // Phi_3 over F_2 is irreducible: the set stays a singleton.
        let l = find_cyclotomic(&poly(2, &[1, 1, 1]), 3, &mut rng).unwrap();
        assert_eq!(l.len(), 1);

        // Phi_7 over F_2 has the two cubic factors.
        let l = find_cyclotomic(&poly(2, &[1, 1, 0, 1]), 7, &mut rng).unwrap();
        let expect =
            CycloFactorSet::from_iter([poly(2, &[1, 1, 0, 1]), poly(2, &[1, 0, 1, 1])]);
        assert_eq!(l, expect);

        // Phi_2 over F_3 is linear.
        let l = find_cyclotomic(&poly(3, &[1, 1]), 2, &mut rng).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn find_k_examples() {
        let mut rng = Rng::new(0x88);
        // d = 6, g0 = l^3+l+1 over F_2 (a factor of Phi_7): k = 7.
        assert_eq!(find_k(6, &poly(2, &[1, 1, 0, 1]), &mut rng).unwrap(), 7);
        // d = 1, g0 = l + 1 = Phi_1 over F_2: k = 1.
        assert_eq!(find_k(1, &poly(2, &[1, 1]), &mut rng).unwrap(), 1);
    }

    #[test]
    fn find_t_examples() {
        let mut rng = Rng::new(0x71);
        // g = (l-1)^2 over F_3: two copies of l-1, T = {1} with m_1 = 2,
        // S = {1} because floor(log_3 2) = 0.
        let cert = find_t(vec![poly(3, &[2, 1]), poly(3, &[2, 1])], 4, &mut rng).unwrap();
        assert_eq!(cert.t_set(), vec![1]);
        assert_eq!(cert.multiplicities[&1], 2);
        assert_eq!(cert.s_values(), vec![1]);

        // g = l^2+1 = (l+1)^2 over F_2: T = {1}, m_1 = 2, S = {1, 2}.
        let cert = find_t(vec![poly(2, &[1, 1]), poly(2, &[1, 1])], 4, &mut rng).unwrap();
        assert_eq!(cert.t_set(), vec![1]);
        assert_eq!(cert.s_values(), vec![1, 2]);

        // g = Phi_7 over F_2: one round consumes both cubics.
        let cert = find_t(
            vec![poly(2, &[1, 1, 0, 1]), poly(2, &[1, 0, 1, 1])],
            7,
            &mut rng,
        )
        .unwrap();
        assert_eq!(cert.t_set(), vec![7]);
        assert_eq!(cert.multiplicities[&7], 1);
        assert_eq!(cert.s_values(), vec![7]);
    }

    #[test]
    fn factordegree_reduction_known_instance() {
        // f = x(x+1)(x^3+x+1)(x^3+x^2+1) over F_2 with t = 1.
        let f = poly(2, &[0, 1])
            .mul(&poly(2, &[1, 1]))
            .mul(&poly(2, &[1, 1, 0, 1]))
            .mul(&poly(2, &[1, 0, 1, 1]));
        let oracles = OracleSet::reference();
        let mut rng = Rng::new(0x5EC);
        let fz = reduce_factor_via_factordegree(&f, &oracles, Some(1), &mut rng).unwrap();
        assert_eq!(fz, factor(&f, &mut rng).unwrap());
        assert!(oracles.counters().factor_degree_calls.get() >= 1);
    }

    #[test]
    fn factordegree_reduction_stage1_only() {
        // All factor degrees <= t: stage 2 never invokes the oracle.
        let f = poly(2, &[0, 1, 0, 0, 1]); // x(x+1)(x^2+x+1)
        let oracles = OracleSet::reference();
        let mut rng = Rng::new(0x5ED);
        let fz = reduce_factor_via_factordegree(&f, &oracles, Some(2), &mut rng).unwrap();
        assert_eq!(fz, factor(&f, &mut rng).unwrap());
        assert_eq!(oracles.counters().factor_degree_calls.get(), 0);
    }

    #[test]
    fn factordegree_reduction_randomized_both_oracles() {
        for &p in &[2u64, 5] {
            let field = fp(p);
            for mode in [OracleMode::Reference, OracleMode::Independent] {
                let oracles = OracleSet::all(mode);
                let mut rng = Rng::new(0xFD + p);
                for _ in 0..15 {
                    let n = 2 + rng.below(20) as usize;
                    let f = random_monic_squarefree(field, n, &mut rng);
                    let fz = reduce_factor_via_factordegree(&f, &oracles, None, &mut rng).unwrap();
                    assert_eq!(fz, factor(&f, &mut rng).unwrap(), "p={p} mode={mode:?}");
                }
                if mode == OracleMode::Independent {
                    assert_eq!(oracles.counters().engine_calls.get(), 0);
                }
            }
        }
    }

    #[test]
    fn frobminpoly_reduction_small_grid() {
        for &p in &[2u64, 3, 5] {
            let field = fp(p);
            let oracles = OracleSet::independent();
            let mut rng = Rng::new(0xA19 + p);
            for _ in 0..12 {
                let n = 2 + rng.below(24) as usize;
                let f = random_monic_squarefree(field, n, &mut rng);
                let (fz, diag) = reduce_factor_via_frobminpoly(&f, &oracles, &mut rng).unwrap();
                assert_eq!(fz, factor(&f, &mut rng).unwrap(), "p={p} f={f:?}");
                let bound = 2 * (usize::BITS - n.leading_zeros()) as usize + 2;
                assert!(diag.max_depth <= bound);
                if !diag.fallback_used {
                    assert_eq!(oracles.counters().engine_calls.get(), 0);
                }
            }
        }
    }

    #[test]
    fn frobminpoly_reduction_irreducible_shortcut() {
        // Small irreducible: emitted at the line-1 boundary check.
        let f = poly(2, &[1, 1, 0, 1]);
        let oracles = OracleSet::independent();
        let mut rng = Rng::new(0x1111);
        let (fz, _) = reduce_factor_via_frobminpoly(&f, &oracles, &mut rng).unwrap();
        assert_eq!(fz.factors(), &[(f.clone(), 1)]);
        assert_eq!(oracles.counters().frob_minpoly_calls.get(), 0);
    }

    #[test]
    fn carlitz_degree_reduction() {
        let oracles = OracleSet::independent();
        let mut rng = Rng::new(0xCA);
        // f irreducible: degree n, validated.
        let f = poly(2, &[1, 1, 0, 1]);
        let d = factor_degree_via_carlitz(&f, &oracles, &mut rng).unwrap();
        assert_eq!(d, 3);
        assert!(validate_factor_degree(&f, d).unwrap());

        // F_5: x(x+1)(x^2+2): smallest degree 1, 5 does not divide 2.
        let f = poly(5, &[0, 1])
            .mul(&poly(5, &[1, 1]))
            .mul(&poly(5, &[2, 0, 1]));
        assert_eq!(factor_degree_via_carlitz(&f, &oracles, &mut rng).unwrap(), 1);

        // F_3: x(x+1)(x+2): degenerates.
        let f = poly(3, &[0, 2, 0, 1]);
        assert_eq!(
            factor_degree_via_carlitz(&f, &oracles, &mut rng),
            Err(Error::DegenerateDifference)
        );
        assert_eq!(oracles.counters().engine_calls.get(), 0);
    }

    #[test]
    fn determinant_degree_reduction() {
        let oracles = OracleSet::independent();
        let mut rng = Rng::new(0xDE);
        let f = poly(2, &[0, 1, 0, 0, 1]); // x(x+1)(x^2+x+1)
        let (d1, c1) =
            factor_degree_via_determinant(&f, DetVariant::Moore, &oracles, &mut rng).unwrap();
        let (d2, c2) =
            factor_degree_via_determinant(&f, DetVariant::Vandermonde, &oracles, &mut rng)
                .unwrap();
        assert_eq!(d1, 2);
        assert_eq!(d2, 2);
        let budget = (usize::BITS - 4usize.leading_zeros()) as usize + 1;
        assert!(c1 <= budget && c2 <= budget);
        assert_eq!(oracles.counters().engine_calls.get(), 0);

        let g = poly(2, &[1, 1, 0, 0, 1]); // irreducible quartic
        let (d, _) =
            factor_degree_via_determinant(&g, DetVariant::Moore, &oracles, &mut rng).unwrap();
        assert_eq!(d, 4);
    }

    #[test]
    fn easy_direction_examples() {
        let mut rng = Rng::new(0xEA);
        let f = poly(2, &[0, 1, 0, 0, 1]); // x(x+1)(x^2+x+1)
        assert_eq!(
            easy_directions(&f, EasyTarget::FrobMinPoly, &mut rng).unwrap(),
            poly(2, &[1, 0, 1])
        );
        let g = poly(2, &[0, 1, 1]); // x(x+1)
        assert_eq!(
            easy_directions(&g, EasyTarget::CarlitzCharPoly, &mut rng).unwrap(),
            poly(2, &[0, 1, 1])
        );
        let h = poly(2, &[1, 1, 0, 1]); // irreducible cubic
        assert_eq!(
            easy_directions(&h, EasyTarget::FrobMinPoly, &mut rng).unwrap(),
            poly(2, &[1, 0, 0, 1])
        );
        assert_eq!(
            easy_directions(&h, EasyTarget::FrobCharPoly, &mut rng).unwrap(),
            poly(2, &[1, 0, 0, 1])
        );
        assert_eq!(
            easy_directions(&h, EasyTarget::CarlitzCharPoly, &mut rng).unwrap(),
            poly(2, &[0, 1, 0, 1])
        );
    }
}
