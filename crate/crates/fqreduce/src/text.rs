//! The line-oriented text format: `q=<prime> f=<c0>,<c1>,...,<cn>` with
//! decimal coefficients in ascending degree order. Parsing is
//! whitespace-tolerant; printing is canonical, so parse(print(p)) = p.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Poly;

/// Parses one polynomial line. Rejects non-prime q, residues >= q, and a
/// zero leading coefficient.
pub fn parse_poly_line(line: &str) -> Result<Poly> {
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact
        .strip_prefix("q=")
        .ok_or_else(|| Error::Parse("expected leading q=<prime>".into()))?;
    let fpos = rest
        .find("f=")
        .ok_or_else(|| Error::Parse("expected f=<coefficients>".into()))?;
    let q_str = &rest[..fpos];
    let coeff_str = &rest[fpos + 2..];

    let q: u64 = q_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad modulus {q_str:?}")))?;
    let field = match PrimeField::new(q) {
        Ok(f) => f,
        Err(Error::NotPrime(p)) => return Err(Error::Parse(format!("q = {p} is not prime"))),
        Err(e) => return Err(e),
    };

    if coeff_str.is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    let mut coeffs = Vec::new();
    for tok in coeff_str.split(',') {
        if tok.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        let c: u64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
        if c >= q {
            return Err(Error::Parse(format!(
                "coefficient {c} is not a canonical residue mod {q}"
            )));
        }
        coeffs.push(c);
    }
    if coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        return Err(Error::Parse("leading coefficient must be nonzero".into()));
    }
    Ok(Poly::from_u64(field, &coeffs))
}

/// Canonical one-line form. The zero polynomial prints as `f=0`.
pub fn format_poly(p: &Poly) -> String {
    let q = p.field().modulus();
    if p.is_zero() {
        return format!("q={q} f=0");
    }
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.value().to_string()).collect();
    format!("q={q} f={}", coeffs.join(","))
}

/// One factor per line in canonical order, `^<mult>` appended when the
/// multiplicity exceeds one.
pub fn format_factorization(fz: &crate::factorization::Factorization) -> String {
    let mut out = String::new();
    for (p, m) in fz.factors() {
        out.push_str(&format_poly(p));
        if *m > 1 {
            out.push_str(&format!("^{m}"));
        }
        out.push('\n');
    }
    out
}
