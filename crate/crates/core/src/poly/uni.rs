use std::fmt;

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::multi::MultiPoly;

/// Commutative ring operations needed by [`UniPoly`]. Zero and one are taken
/// from an existing element since they depend on the number of variables.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_int(&self, k: i64) -> Self;
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }
}

/// Polynomial in `x` with coefficients in `T`; `coeffs[j]` multiplies `x^j`.
/// The leading coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<T: Ring> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `∏ (x + r_j)`, with `one` supplying the coefficient ring.
    pub fn from_roots_plus(roots: &[T], one: &T) -> Self {
        let mut p = Self::new(vec![one.one_like()]);
        for r in roots {
            p = p.mul(&Self::new(vec![r.clone(), one.one_like()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, or `None` above the degree.
    pub fn coeff(&self, j: usize) -> Option<&T> {
        self.coeffs.get(j)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale_int(j as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self { coeffs: Vec::new() };
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_expand_to_elementary_symmetric() {
        let x = MultiPoly::var(3, 0);
        let y = MultiPoly::var(3, 1);
        let z = MultiPoly::var(3, 2);
        let p = UniPoly::from_roots_plus(&[x.clone(), y.clone(), z.clone()], &x);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coeff(2), Some(&MultiPoly::parse(3, "X + Y + Z").unwrap()));
        assert_eq!(p.coeff(1), Some(&MultiPoly::parse(3, "X Y + X Z + Y Z").unwrap()));
        assert_eq!(p.coeff(0), Some(&MultiPoly::parse(3, "X Y Z").unwrap()));
        assert_eq!(p.leading(), Some(&MultiPoly::one(3)));
    }

    #[test]
    fn derivative_and_trim() {
        let one = MultiPoly::one(1);
        let x = MultiPoly::var(1, 0);
        let p = UniPoly::new(vec![one.clone(), x.clone(), one.clone(), MultiPoly::zero(1)]);
        assert_eq!(p.degree(), Some(2));
        let dp = p.derivative();
        assert_eq!(dp.coeffs(), &[x, one.scale_int(2)]);
        assert_eq!(UniPoly::<MultiPoly>::new(vec![]).degree(), None);
    }
}
