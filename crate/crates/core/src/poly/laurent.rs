use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::repweights::WeightSystem;
use crate::rootdata::RootDatum;

use std::f64::consts::PI;

/// Laurent polynomial in `k_1..k_n` with exponents in `(1/denom)ℤ`.
///
/// Stored exponents are scaled by `denom`, which is kept minimal so that
/// structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    denom: u32,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            denom: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// `coef · ∏ k_i^{exps_i / denom}`.
    pub fn monomial(exps: &[i64], denom: u32, coef: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exps.to_vec(), coef);
        }
        Self::from_terms(exps.len(), denom, terms)
    }

    /// Integer-exponent monomial `∏ k_i^{e_i}`.
    pub fn k_monomial(exps: &[i64]) -> Self {
        Self::monomial(exps, 1, BigInt::one())
    }

    pub fn from_terms(nvars: usize, denom: u32, terms: BTreeMap<Vec<i64>, BigInt>) -> Self {
        assert!(denom > 0, "denominator must be positive");
        let mut p = Self {
            nvars,
            denom,
            terms,
        };
        p.terms.retain(|_, c| !c.is_zero());
        p.reduce();
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// Scaled exponent vectors mapped to coefficients.
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn reduce(&mut self) {
        let mut g = self.denom as i64;
        for e in self.terms.keys().flatten() {
            g = g.gcd(e);
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            self.denom /= g as u32;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(e, c)| (e.into_iter().map(|x| x / g).collect(), c))
                .collect();
        }
    }

    /// Same polynomial with exponents rescaled to denominator `denom`, which
    /// must be a multiple of the current one.
    fn lifted_terms(&self, denom: u32) -> BTreeMap<Vec<i64>, BigInt> {
        debug_assert_eq!(denom % self.denom, 0);
        let f = (denom / self.denom) as i64;
        if f == 1 {
            return self.terms.clone();
        }
        self.terms
            .iter()
            .map(|(e, c)| (e.iter().map(|x| x * f).collect(), c.clone()))
            .collect()
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "Laurent polynomials in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let denom = self.denom.lcm(&other.denom);
        let mut terms = self.lifted_terms(denom);
        for (e, c) in other.lifted_terms(denom) {
            *terms.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_terms(self.nvars, denom, terms)
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            denom: self.denom,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_terms(
            self.nvars,
            self.denom,
            self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let denom = self.denom.lcm(&other.denom);
        let a = self.lifted_terms(denom);
        let b = other.lifted_terms(denom);
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Self::from_terms(self.nvars, denom, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitution `k_i → k_i^{-1}`.
    pub fn invert_vars(&self) -> Self {
        Self {
            nvars: self.nvars,
            denom: self.denom,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Linear change of exponents `e -> M e`, with `M` given by rows.
    pub fn transform_exponents(&self, m: &[Vec<i64>]) -> Self {
        let nvars = m.len();
        Self::from_terms(
            nvars,
            self.denom,
            self.terms
                .iter()
                .map(|(e, c)| {
                    let row = |r: &Vec<i64>| r.iter().zip(e).map(|(a, b)| a * b).sum();
                    (m.iter().map(row).collect(), c.clone())
                })
                .collect(),
        )
    }

    /// Value at `k_i = 1`, the sum of coefficients.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `k_i = e^{2π t_i}`.
    pub fn eval_at_t(&self, t: &[f64]) -> f64 {
        assert_eq!(t.len(), self.nvars);
        let scale = 2.0 * PI / self.denom as f64;
        self.terms
            .iter()
            .map(|(e, c)| {
                let x: f64 = e.iter().zip(t).map(|(&a, b)| a as f64 * b).sum();
                c.to_f64().unwrap_or(f64::NAN) * (scale * x).exp()
            })
            .collect::<CompensatedSum>()
            .value()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let g = x.gcd(&(self.denom as i64));
                let (num, den) = (x / g, self.denom as i64 / g);
                factors.push(match (num, den) {
                    (1, 1) => format!("k{}", i + 1),
                    (_, 1) => format!("k{}^{}", i + 1, num),
                    _ => format!("k{}^({}/{})", i + 1, num, den),
                });
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Smallest denominator making every exponent `-2·c_i` of the weight system
/// integral after scaling.
pub fn weight_system_denom(d: &RootDatum, ws: &WeightSystem) -> u32 {
    let mut den = BigInt::one();
    for (c, _) in ws.root_coords(d) {
        for x in c {
            let two_x = x * BigInt::from(2);
            den = den.lcm(two_x.denom());
        }
    }
    den.to_u32().expect("small exponent denominator")
}

/// Character of `ws` as a Laurent polynomial: weight `μ` with root
/// coordinates `c` becomes `∏ k_i^{-2c_i}`, so that evaluating at
/// `k_i = e^{2π t_i}` gives `Σ m_μ e^{-4π μ(t)}`.
pub fn laurent_from_weight_system(
    d: &RootDatum,
    ws: &WeightSystem,
    denom: u32,
) -> Result<LaurentPoly> {
    if denom == 0 {
        return Err(Error::DenominatorTooSmall(denom));
    }
    let n = d.rank();
    let big_den = BigInt::from(denom);
    let mut terms = BTreeMap::new();
    for (c, m) in ws.root_coords(d) {
        let mut exps = Vec::with_capacity(n);
        for x in &c {
            let scaled = x * &big_den * BigInt::from(-2);
            if !scaled.is_integer() {
                return Err(Error::DenominatorTooSmall(denom));
            }
            exps.push(scaled.to_integer().to_i64().ok_or(Error::Overflow)?);
        }
        terms.insert(exps, BigInt::from(m));
    }
    Ok(LaurentPoly::from_terms(n, denom, terms))
}

/// As [`laurent_from_weight_system`] with the smallest admissible denominator.
pub fn laurent_character(d: &RootDatum, ws: &WeightSystem) -> LaurentPoly {
    laurent_from_weight_system(d, ws, weight_system_denom(d, ws))
        .expect("denominator chosen from the weights")
}

/// `(D, D_s, D_l)` as Laurent polynomials: products of `1 - ∏ k_i^{-2c_i}`
/// over all roots. In simply-laced types `D_l = 1`.
pub fn root_products(d: &RootDatum) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let n = d.rank();
    let one = LaurentPoly::one(n);
    let mut d_s = one.clone();
    let mut d_l = one.clone();
    for r in d.positive_roots() {
        let plus: Vec<i64> = r.iter().map(|&c| -2 * c).collect();
        let minus: Vec<i64> = r.iter().map(|&c| 2 * c).collect();
        let f = one
            .sub(&LaurentPoly::k_monomial(&plus))
            .mul(&one.sub(&LaurentPoly::k_monomial(&minus)));
        if d.is_long_root(r) {
            d_l = d_l.mul(&f);
        } else {
            d_s = d_s.mul(&f);
        }
    }
    (d_s.mul(&d_l), d_s, d_l)
}
