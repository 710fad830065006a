//! Canonical multiset of monic irreducible factors.

use crate::field::PrimeField;
use crate::poly::Poly;

/// Factors sorted by (degree, lexicographic coefficients) with duplicates
/// merged into multiplicities, so factorizations compare with `==` across
/// implementations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    field: PrimeField,
    factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn new(field: PrimeField, raw: Vec<(Poly, u32)>) -> Self {
        let mut items = raw;
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut factors: Vec<(Poly, u32)> = Vec::with_capacity(items.len());
        for (p, m) in items {
            debug_assert!(p.is_monic() && !p.is_constant());
            debug_assert!(m >= 1);
            match factors.last_mut() {
                Some((last, mult)) if *last == p => *mult += m,
                _ => factors.push((p, m)),
            }
        }
        Factorization { field, factors }
    }

    pub fn from_irreducibles(field: PrimeField, polys: Vec<Poly>) -> Self {
        Factorization::new(field, polys.into_iter().map(|p| (p, 1)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Poly {
        let mut acc = Poly::one(self.field);
        for (p, m) in &self.factors {
            acc = acc.mul(&p.pow_usize(*m as usize));
        }
        acc
    }

    /// Factor degrees repeated by multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (p, m) in &self.factors {
            for _ in 0..*m {
                out.push(p.degree());
            }
        }
        out
    }

    /// Degrees of distinct factors (each once, regardless of multiplicity).
    pub fn distinct_degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|(p, _)| p.degree()).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.factors.iter().map(|(p, _)| p.degree()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.factors.iter().map(|(p, _)| p.degree()).max()
    }
}
