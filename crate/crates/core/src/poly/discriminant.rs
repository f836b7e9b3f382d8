use serde::Serialize;

use super::multi::MultiPoly;
use super::uni::{Ring, UniPoly};
use crate::error::{Error, Result};

use num_bigint::BigInt;
use num_traits::Zero;

/// Sylvester matrix of `p` (degree m) and `q` (degree n), size `m + n`.
pub fn sylvester(p: &UniPoly<MultiPoly>, q: &UniPoly<MultiPoly>) -> Vec<Vec<MultiPoly>> {
    let m = p.degree().expect("nonzero polynomial");
    let n = q.degree().expect("nonzero polynomial");
    let zero = p.coeffs()[0].zero_like();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(p, m, n), (q, n, m)] {
        for shift in 0..count {
            let mut row = vec![zero.clone(); size];
            for j in 0..=deg {
                row[shift + j] = poly.coeffs()[deg - j].clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free Bareiss elimination with row swaps.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = m.len();
    if size == 0 {
        panic!("determinant of an empty matrix");
    }
    let nvars = m[0][0].nvars();
    let mut sign = 1i64;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..size.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = MultiPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    m[size - 1][size - 1].scale(&BigInt::from(sign))
}

pub fn resultant(p: &UniPoly<MultiPoly>, q: &UniPoly<MultiPoly>) -> MultiPoly {
    bareiss_det(sylvester(p, q))
}

/// `(-1)^{n(n-1)/2} Res(P, P') / lc(P)`.
pub fn discriminant(p: &UniPoly<MultiPoly>) -> Result<MultiPoly> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        other => return Err(Error::DegreeTooLow(other.unwrap_or(0))),
    };
    let res = resultant(p, &p.derivative());
    let lc = p.leading().expect("nonzero");
    let mut disc = res
        .exact_div(lc)
        .expect("leading coefficient divides the resultant");
    if (n * (n - 1) / 2) % 2 == 1 {
        disc = disc.neg();
    }
    Ok(disc)
}

/// Outcome of dividing a polynomial by a claimed product of factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorReport {
    pub claimed: String,
    /// `Some(c)` when the polynomial equals `c` times the product.
    pub constant: Option<String>,
    /// Remainder of the first division that failed, or the final quotient
    /// when it is not constant, truncated for display.
    pub remainder: Option<String>,
    pub remainder_terms: usize,
    pub holds: bool,
}

/// Divides `target` successively by each `factor^power` and reports whether
/// the final quotient is an integer constant.
pub fn factor_check(target: &MultiPoly, factors: &[(&str, &MultiPoly, u32)]) -> FactorReport {
    let claimed = factors
        .iter()
        .map(|(name, _, p)| if *p == 1 { name.to_string() } else { format!("{name}^{p}") })
        .collect::<Vec<_>>()
        .join("*");
    let mut quotient = target.clone();
    for (_, f, power) in factors {
        for _ in 0..*power {
            let (q, r) = quotient.div_rem(f);
            if !r.is_zero() {
                return FactorReport {
                    claimed,
                    constant: None,
                    remainder: Some(truncate(&r.to_string())),
                    remainder_terms: r.num_terms(),
                    holds: false,
                };
            }
            quotient = q;
        }
    }
    match quotient.as_constant() {
        Some(c) if !c.is_zero() => FactorReport {
            claimed,
            constant: Some(c.to_string()),
            remainder: None,
            remainder_terms: 0,
            holds: true,
        },
        _ => FactorReport {
            claimed,
            constant: None,
            remainder: Some(truncate(&quotient.to_string())),
            remainder_terms: quotient.num_terms(),
            holds: false,
        },
    }
}

fn truncate(s: &str) -> String {
    const LIMIT: usize = 160;
    match s.char_indices().nth(LIMIT) {
        Some((i, _)) => format!("{} ...", &s[..i]),
        None => s.to_string(),
    }
}

/// Integer discriminant of a univariate integer polynomial, used for spot checks.
pub fn discriminant_int(coeffs: &[i64]) -> Result<BigInt> {
    let p = UniPoly::new(coeffs.iter().map(|&c| MultiPoly::constant(1, c)).collect());
    let d = discriminant(&p)?;
    Ok(d.as_constant().unwrap_or_else(BigInt::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monic(nvars: usize, coeffs_high_to_low: &[&str]) -> UniPoly<MultiPoly> {
        let mut c: Vec<MultiPoly> = coeffs_high_to_low
            .iter()
            .map(|s| MultiPoly::parse(nvars, s).unwrap())
            .collect();
        c.reverse();
        UniPoly::new(c)
    }

    #[test]
    fn quadratic() {
        let p = monic(1, &["1", "X", "1"]);
        assert_eq!(discriminant(&p).unwrap(), MultiPoly::parse(1, "X^2 - 4").unwrap());
    }

    #[test]
    fn cubic_matches_classical_formula() {
        let p = monic(2, &["1", "X", "Y", "1"]);
        let expected = MultiPoly::parse(2, "X^2 Y^2 + 18 X Y - 4 X^3 - 4 Y^3 - 27").unwrap();
        assert_eq!(discriminant(&p).unwrap(), expected);
    }

    #[test]
    fn integer_spot_checks() {
        // (x-1)(x-2)(x-3): disc = (1*2*1)^2 = 4
        assert_eq!(discriminant_int(&[-6, 11, -6, 1]).unwrap(), BigInt::from(4));
        // x^2 + 1: disc = -4
        assert_eq!(discriminant_int(&[1, 0, 1]).unwrap(), BigInt::from(-4));
        // double root
        assert_eq!(discriminant_int(&[1, 2, 1]).unwrap(), BigInt::zero());
        // non-monic: 2x^2 + 3x + 1 has disc 9 - 8 = 1
        assert_eq!(discriminant_int(&[1, 3, 2]).unwrap(), BigInt::from(1));
        assert_eq!(discriminant_int(&[1, 1]), Err(Error::DegreeTooLow(1)));
    }

    #[test]
    fn bareiss_pivots_through_zero() {
        let c = |k: i64| MultiPoly::constant(1, k);
        let m = vec![
            vec![c(0), c(1), c(2)],
            vec![c(1), c(0), c(3)],
            vec![c(4), c(5), c(6)],
        ];
        // det = 0*(0-15) - 1*(6-12) + 2*(5-0) = 16
        assert_eq!(bareiss_det(m).as_constant(), Some(BigInt::from(16)));
    }

    #[test]
    fn factor_report() {
        let a = MultiPoly::parse(2, "X - Y").unwrap();
        let b = MultiPoly::parse(2, "X + Y + 1").unwrap();
        let t = a.mul(&a).mul(&b).scale(&BigInt::from(-3));
        let r = factor_check(&t, &[("A", &a, 2), ("B", &b, 1)]);
        assert!(r.holds);
        assert_eq!(r.constant.as_deref(), Some("-3"));
        assert_eq!(r.claimed, "A^2*B");
        let r = factor_check(&t, &[("B", &b, 2)]);
        assert!(!r.holds);
        assert!(r.remainder.is_some());
    }
}
