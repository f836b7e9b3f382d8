use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::LaurentPoly;
use crate::numeric::CompensatedSum;

/// Graded-lexicographic monomial order.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Polynomial with integer coefficients in `X_1..X_n`, which stand for the
/// central characters `C_1..C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Failure of [`MultiPoly::parse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse polynomial: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn var_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["X", "Y", "Z"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("X{i}")).collect()
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `X_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(e, BigInt::one())])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { nvars, terms: map }
    }

    /// Parses sums of monomials such as `36 + 40 X^2 - 27 X^4 - 132 Y`.
    /// Factors may be separated by spaces or `*`. Variables are `X, Y, Z`
    /// for up to three variables and `X1, X2, ...` otherwise.
    pub fn parse(nvars: usize, text: &str) -> Result<Self, ParseError> {
        let names = var_names(nvars);
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let mut terms = Vec::new();
        if chars.is_empty() {
            return Err(ParseError("empty input".into()));
        }
        while pos < chars.len() {
            let mut sign = BigInt::one();
            match chars[pos] {
                '+' => pos += 1,
                '-' | '−' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if pos > 0 => return Err(ParseError(format!("expected sign at {pos}"))),
                _ => {}
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef: BigInt = if pos > start {
                chars[start..pos].iter().collect::<String>().parse().unwrap()
            } else {
                BigInt::one()
            };
            let mut exps = vec![0u32; nvars];
            let mut any = pos > start;
            loop {
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                }
                if pos >= chars.len() || !chars[pos].is_ascii_alphabetic() {
                    break;
                }
                let vstart = pos;
                pos += 1;
                while pos < chars.len() && chars[pos].is_ascii_digit() && nvars > 3 {
                    pos += 1;
                }
                let name: String = chars[vstart..pos].iter().collect();
                let idx = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| ParseError(format!("unknown variable {name}")))?;
                let mut power = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let pstart = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    power = chars[pstart..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| ParseError(format!("bad exponent at {pstart}")))?;
                }
                exps[idx] += power;
                any = true;
            }
            if !any {
                return Err(ParseError(format!("empty term at {start}")));
            }
            terms.push((exps, sign * coef));
        }
        Ok(Self::from_terms(nvars, terms))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(e, _)| e.iter().all(|&x| x == 0))
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Leading term in grlex order.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), c * s)),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    /// Multivariate division by a single divisor in grlex order. The
    /// remainder has no term divisible by the divisor's leading monomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check_vars(divisor);
        let (lm, lc) = divisor.leading().expect("division by zero polynomial");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut quotient: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut remainder: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut p = self.clone();
        while let Some((e, c)) = p.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let divisible = e.iter().zip(&lm).all(|(a, b)| a >= b);
            let (q, r) = c.div_rem(&lc);
            if divisible && r.is_zero() {
                let qe: Vec<u32> = e.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let mono = Self::from_terms(self.nvars, [(qe.clone(), q.clone())]);
                p = p.sub(&mono.mul(divisor));
                quotient.insert(qe, q);
            } else {
                remainder.insert(e.clone(), c);
                p.terms.remove(&e);
            }
        }
        (
            Self {
                nvars: self.nvars,
                terms: quotient,
            },
            Self {
                nvars: self.nvars,
                terms: remainder,
            },
        )
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Swaps variables according to `perm`: `X_i` becomes `X_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut out = vec![0; self.nvars];
                for (i, &x) in e.iter().enumerate() {
                    out[perm[i]] = x;
                }
                (out, c.clone())
            }),
        )
    }

    pub fn eval_int(&self, x: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&p, v)| acc * num_traits::pow(v.clone(), p as usize))
            })
            .sum()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.to_f64().unwrap_or(f64::NAN), |acc, (&p, v)| acc * v.powi(p as i32))
            })
            .collect::<CompensatedSum>()
            .value()
    }

    /// Sum of the absolute values of all terms at `x`, a scale for residuals.
    pub fn eval_abs(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.to_f64().unwrap_or(f64::NAN).abs(), |acc, (&p, v)| {
                        acc * v.abs().powi(p as i32)
                    })
            })
            .sum()
    }

    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut e = e.clone();
                let p = e[i];
                e[i] -= 1;
                (e, c * BigInt::from(p))
            }),
        )
    }

    /// Euclidean norm of the gradient at `x`.
    pub fn gradient_norm(&self, x: &[f64]) -> f64 {
        (0..self.nvars)
            .map(|i| self.partial(i).eval(x).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// Substitutes `X_i → values[i]`, caching powers.
    pub fn substitute(&self, values: &[LaurentPoly]) -> LaurentPoly {
        assert_eq!(values.len(), self.nvars);
        let nk = values.first().map(|v| v.nvars()).unwrap_or(0);
        let mut powers: Vec<Vec<LaurentPoly>> = values
            .iter()
            .map(|v| vec![LaurentPoly::one(nk), v.clone()])
            .collect();
        for e in self.terms.keys() {
            for (i, &p) in e.iter().enumerate() {
                while powers[i].len() <= p as usize {
                    let next = powers[i].last().unwrap().mul(&values[i]);
                    powers[i].push(next);
                }
            }
        }
        let mut acc = LaurentPoly::zero(nk);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(nk, c.clone());
            for (i, &p) in e.iter().enumerate() {
                if p > 0 {
                    term = term.mul(&powers[i][p as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Gcd of all coefficients, with the sign of the leading one.
    pub fn content(&self) -> BigInt {
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        match self.leading() {
            Some((_, c)) if c.is_negative() => -g,
            _ => g,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = var_names(self.nvars);
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|a, b| grlex(b.0, a.0));
        for (n, (e, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], p)
                    }
                })
                .collect();
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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p3(s: &str) -> MultiPoly {
        MultiPoly::parse(3, s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = p3("36 + 40 X^2 - 27 X^4 - 132 Y + Y^2 Z^2 - X");
        assert_eq!(p.num_terms(), 6);
        assert_eq!(p.to_string(), "-27*X^4 + Y^2*Z^2 + 40*X^2 - X - 132*Y + 36");
        assert_eq!(p3(&p.to_string()), p);
        let q = MultiPoly::parse(4, "X1*X3 - 4 X2 + X4^2").unwrap();
        assert_eq!(q.to_string(), "X1*X3 + X4^2 - 4*X2");
        assert!(MultiPoly::parse(2, "Z").is_err());
        assert!(MultiPoly::parse(2, "").is_err());
        assert!(MultiPoly::parse(2, "X Y 3").is_err());
    }

    #[test]
    fn a2_identity_expands() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let lhs = x.mul(&y).add(&MultiPoly::constant(2, 9)).pow(2).sub(
            &x.pow(3)
                .add(&y.pow(3))
                .add(&MultiPoly::constant(2, 27))
                .scale(&BigInt::from(4)),
        );
        let expected = MultiPoly::parse(2, "X^2 Y^2 + 18 X Y - 4 X^3 - 4 Y^3 - 27").unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn exact_division() {
        let a = p3("X^2 - 4 Y + 4 Z - 8");
        let b = p3("X Y + 3 Z^2 - 1");
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.add(&MultiPoly::one(3)).exact_div(&a), None);
        let (q, r) = p3("X^2 + 1").div_rem(&p3("X"));
        assert_eq!(q, p3("X"));
        assert_eq!(r, MultiPoly::one(3));
    }

    #[test]
    fn eval_and_gradient() {
        let p = MultiPoly::parse(2, "X^2 - 4 Y + 4").unwrap();
        assert_eq!(p.eval_int(&[4.into(), 5.into()]), BigInt::zero());
        assert_eq!(p.eval(&[4.0, 5.0]), 0.0);
        assert!((p.gradient_norm(&[4.0, 5.0]) - (64.0f64 + 16.0).sqrt()).abs() < 1e-12);
        assert_eq!(p.permute_vars(&[1, 0]).to_string(), "Y^2 - 4*X + 4");
        assert_eq!(p.as_constant(), None);
        assert_eq!(MultiPoly::constant(2, -3).as_constant(), Some(BigInt::from(-3)));
        assert_eq!(p.scale(&BigInt::from(-6)).content(), BigInt::from(-6));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 2), -4i64..5), 1..5).prop_map(
            |ts| MultiPoly::from_terms(2, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))),
        )
    }

    proptest! {
        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a.clone()));
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -3i64..4, y in -3i64..4) {
            let pt = [BigInt::from(x), BigInt::from(y)];
            prop_assert_eq!(a.mul(&b).eval_int(&pt), a.eval_int(&pt) * b.eval_int(&pt));
            prop_assert_eq!(a.add(&b).eval_int(&pt), a.eval_int(&pt) + b.eval_int(&pt));
        }
    }
}
