//! Dense linear algebra over a prime field, sized for oracle duty:
//! deterministic, unconditionally correct, O(n^3)-ish.

use crate::field::{Felt, PrimeField};
use crate::poly::Poly;

pub type Matrix = Vec<Vec<Felt>>;

/// Characteristic polynomial det(lambda*I - A) via similarity reduction to
/// upper Hessenberg form followed by the leading-minor recurrence.
pub fn charpoly(field: PrimeField, a: &Matrix) -> Poly {
    let f = field;
    let n = a.len();
    if n == 0 {
        return Poly::one(f);
    }
    let mut h = a.clone();
    debug_assert!(h.iter().all(|row| row.len() == n));

    // Hessenberg reduction with pivoting; row op paired with the inverse
    // column op keeps the spectrum intact.
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&i| h[i][j] != f.zero());
        let Some(pivot) = pivot else { continue };
        if pivot != j + 1 {
            h.swap(pivot, j + 1);
            for row in h.iter_mut() {
                row.swap(pivot, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]).expect("pivot nonzero");
        for i in j + 2..n {
            let factor = f.mul(h[i][j], inv);
            if factor == f.zero() {
                continue;
            }
            for col in 0..n {
                let t = f.mul(factor, h[j + 1][col]);
                h[i][col] = f.sub(h[i][col], t);
            }
            for row in 0..n {
                let t = f.mul(factor, h[row][i]);
                h[row][j + 1] = f.add(h[row][j + 1], t);
            }
        }
    }

    // p_k = (lambda - h_kk) p_{k-1} - sum_i h_{k-1-i,k-1} * (prod subdiag) * p_{k-2-i}
    let lambda = Poly::x(f);
    let mut ps: Vec<Poly> = vec![Poly::one(f)];
    for k in 1..=n {
        let diag = h[k - 1][k - 1];
        let mut p = ps[k - 1].mul(&lambda.sub(&Poly::constant(f, diag)));
        let mut subdiag = f.one();
        for i in 1..k {
            // entry h[k-1-i][k-1] with the product of i subdiagonal entries
            subdiag = f.mul(subdiag, h[k - i][k - i - 1]);
            let coef = f.mul(h[k - 1 - i][k - 1], subdiag);
            if coef == f.zero() {
                continue;
            }
            p = p.sub(&ps[k - 1 - i].mul_scalar(coef));
        }
        ps.push(p);
    }
    ps.pop().unwrap()
}

/// Finds the first linear dependency among `rows` processed in order:
/// returns coefficients c_0..c_j (c_j = 1) with sum c_i rows[i] = 0 for the
/// smallest such prefix, or `None` if the rows are independent.
pub fn first_dependency(field: PrimeField, rows: &[Vec<Felt>]) -> Option<Vec<Felt>> {
    let f = field;
    let width = rows.first().map_or(0, |r| r.len());
    // pivot column -> (echelon row, its expression over the original rows)
    let mut pivots: Vec<Option<(Vec<Felt>, Vec<Felt>)>> = vec![None; width];
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        let mut combo = vec![f.zero(); idx + 1];
        combo[idx] = f.one();
        loop {
            let Some(lead) = v.iter().position(|&x| x != f.zero()) else {
                // Eliminations only mix in earlier rows, so combo[idx] = 1.
                return Some(combo);
            };
            match &pivots[lead] {
                Some((bv, bc)) => {
                    let scale = f.mul(v[lead], f.inv(bv[lead]).unwrap());
                    for t in lead..width {
                        v[t] = f.sub(v[t], f.mul(scale, bv[t]));
                    }
                    for (t, &c) in bc.iter().enumerate() {
                        combo[t] = f.sub(combo[t], f.mul(scale, c));
                    }
                }
                None => {
                    pivots[lead] = Some((v, combo));
                    break;
                }
            }
        }
    }
    None
}

/// Minimal polynomial of a square matrix: lcm over basis vectors of the
/// minimal annihilator of each Krylov chain. Deterministic.
pub fn matrix_minpoly(field: PrimeField, a: &Matrix) -> Poly {
    let f = field;
    let n = a.len();
    let mut acc = Poly::one(f);
    for start in 0..n {
        let mut v = vec![f.zero(); n];
        v[start] = f.one();
        let mut chain = vec![v.clone()];
        for _ in 0..n {
            let prev = chain.last().unwrap();
            chain.push(mat_vec(f, a, prev));
        }
        let dep = first_dependency(f, &chain).expect("n+1 vectors in dimension n");
        let local = Poly::new(f, dep);
        acc = acc.lcm(&local).expect("nonzero lcm");
        if acc.degree() == n {
            break;
        }
    }
    acc
}

pub fn mat_vec(f: PrimeField, a: &Matrix, v: &[Felt]) -> Vec<Felt> {
    let n = a.len();
    let mut out = vec![f.zero(); n];
    for (i, row) in a.iter().enumerate() {
        let mut acc = f.zero();
        for (j, &x) in row.iter().enumerate() {
            acc = f.add(acc, f.mul(x, v[j]));
        }
        out[i] = acc;
    }
    out
}

/// Division-free determinant over any commutative ring whose elements are
/// represented as `Poly` values; `mul` supplies the ring product (plain or
/// modular). Bird's chain of n-1 matrix products, no inverses anywhere,
/// which matters because quotient rings mod reducible moduli have zero
/// divisors.
pub fn det_division_free<F>(field: PrimeField, mat: &[Vec<Poly>], mul: F) -> Poly
where
    F: Fn(&Poly, &Poly) -> Poly,
{
    let n = mat.len();
    if n == 0 {
        return Poly::one(field);
    }
    let mut x = mat.to_vec();
    for _ in 0..n - 1 {
        x = bird_step(field, &x, mat, &mul);
    }
    let det = x[0][0].clone();
    if n % 2 == 0 {
        det.neg()
    } else {
        det
    }
}

fn bird_step<F>(field: PrimeField, x: &[Vec<Poly>], a: &[Vec<Poly>], mul: &F) -> Vec<Vec<Poly>>
where
    F: Fn(&Poly, &Poly) -> Poly,
{
    let n = a.len();
    // mu(X): strictly upper part of X, diagonal entry i replaced by
    // -(X_{i+1,i+1} + ... + X_{nn}).
    let mut mu = vec![vec![Poly::zero(field); n]; n];
    let mut tail = Poly::zero(field);
    for i in (0..n).rev() {
        mu[i][i] = tail.neg();
        tail = tail.add(&x[i][i]);
        for j in i + 1..n {
            mu[i][j] = x[i][j].clone();
        }
    }
    let mut out = vec![vec![Poly::zero(field); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Poly::zero(field);
            for (k, mu_ik) in mu[i].iter().enumerate() {
                if mu_ik.is_zero() || a[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&mul(mu_ik, &a[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}
