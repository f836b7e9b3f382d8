//! Virtual lowest and highest weights.
//!
//! These are the only computations that see the deformation parameter `b`,
//! through `b_i = b sqrt(d_i)`, `q_i = e^{iπ b_i²}` and `Q_i = b_i + b_i^{-1}`.
//! The spectral parameters here are the unscaled `λ_i`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, WeylWord};

use std::f64::consts::PI;

/// Relative tolerance for the K-scalar consistency check.
pub const K_SCALAR_TOL: f64 = 1e-10;

/// Per-node deformation data derived from `b`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamContext {
    pub b: f64,
    pub b_i: Vec<f64>,
    pub big_q: Vec<f64>,
}

impl ParamContext {
    pub fn new(d: &RootDatum, b: f64) -> Self {
        let b_i: Vec<f64> = (0..d.rank()).map(|i| b * d.dsym_f64(i).sqrt()).collect();
        let big_q = b_i.iter().map(|&x| x + 1.0 / x).collect();
        Self { b, b_i, big_q }
    }

    /// `q_i = e^{iπ b_i²}`.
    pub fn q(&self, i: usize) -> Complex64 {
        Complex64::from_polar(1.0, PI * self.b_i[i] * self.b_i[i])
    }

    /// Rescaled parameters `t_i = b_i λ_i`.
    pub fn rescale(&self, lambda: &[f64]) -> Vec<f64> {
        lambda.iter().zip(&self.b_i).map(|(l, b)| l * b).collect()
    }
}

/// Point of virtual lowest weight for one reduced word of `w_0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VirtualPoint {
    pub word: Vec<usize>,
    pub v: Vec<Complex64>,
}

fn check_lambda(d: &RootDatum, lambda: &[f64]) -> Result<()> {
    if lambda.len() != d.rank() {
        return Err(Error::LengthMismatch {
            found: lambda.len(),
            rank: d.rank(),
        });
    }
    Ok(())
}

/// `v_j = (1/b_{i_j}) ( -iQ/2 - 2λ_b , s_{i_1}...s_{i_{j-1}}(α_{i_j}) )` where
/// `iQ/2 = Σ (i Q_i b_i / 2) W_i`.
pub fn virtual_lowest_point(
    d: &RootDatum,
    word: &WeylWord,
    ctx: &ParamContext,
    lambda: &[f64],
) -> Result<VirtualPoint> {
    check_lambda(d, lambda)?;
    if !d.is_longest_word(word) {
        return Err(Error::NotLongestWord);
    }
    let n = d.rank();
    // the covector -iQ/2 - 2λ_b in the coweight basis
    let covector: Vec<Complex64> = (0..n)
        .map(|i| {
            Complex64::new(
                -2.0 * lambda[i] * ctx.b_i[i],
                -ctx.big_q[i] * ctx.b_i[i] / 2.0,
            )
        })
        .collect();
    let letters = &word.letters;
    let v = (0..letters.len())
        .map(|j| {
            let mut e = vec![0i64; n];
            e[letters[j]] = 1;
            let beta = d.apply_word_ints(&letters[..j], &e);
            let pairing: Complex64 = beta
                .iter()
                .zip(&covector)
                .map(|(&c, x)| x * c as f64)
                .sum();
            pairing / ctx.b_i[letters[j]]
        })
        .collect();
    Ok(VirtualPoint {
        word: letters.clone(),
        v,
    })
}

/// `K_i = exp(-π Σ_k a_{i_k,i} b_{i_k} v_k - 2π b_i λ_i)` on the virtual lowest
/// weight point, checked against `-q_i e^{2π b_i λ_{σ(i)}}`.
pub fn virtual_k_scalar(
    d: &RootDatum,
    vp: &VirtualPoint,
    ctx: &ParamContext,
    lambda: &[f64],
    i: usize,
) -> Result<Complex64> {
    check_lambda(d, lambda)?;
    d.check_node(i)?;
    let mut exponent = Complex64::new(-2.0 * PI * ctx.b_i[i] * lambda[i], 0.0);
    for (&ik, vk) in vp.word.iter().zip(&vp.v) {
        exponent -= vk * (PI * d.a(ik, i) as f64 * ctx.b_i[ik]);
    }
    let computed = exponent.exp();
    let sigma = d.diagram_involution();
    let expected = -ctx.q(i) * (2.0 * PI * ctx.b_i[i] * lambda[sigma[i]]).exp();
    let err = (computed - expected).norm() / expected.norm();
    if err > K_SCALAR_TOL || !err.is_finite() {
        return Err(Error::KScalarMismatch {
            node: i,
            computed: format!("{computed}"),
            expected: format!("{expected}"),
        });
    }
    Ok(computed)
}

/// Virtual weights: lowest `Λ_i = Q_i/2 - iλ_{σ(i)}`, highest `Λ_i = -Q_i/2 + iλ_i`.
pub fn virtual_weights(
    ctx: &ParamContext,
    lambda: &[f64],
    sigma: &[usize],
) -> (Vec<Complex64>, Vec<Complex64>) {
    let lowest = (0..lambda.len())
        .map(|i| Complex64::new(ctx.big_q[i] / 2.0, -lambda[sigma[i]]))
        .collect();
    let highest = (0..lambda.len())
        .map(|i| Complex64::new(-ctx.big_q[i] / 2.0, lambda[i]))
        .collect();
    (lowest, highest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;

    fn datum(s: &str) -> RootDatum {
        RootDatum::new(s.parse::<LieType>().unwrap())
    }

    #[test]
    fn context_normalization() {
        let b = 0.6;
        let b2 = ParamContext::new(&datum("B2"), b);
        assert!((b2.b_i[0] - b / 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(b2.b_i[1], b);
        let g2 = ParamContext::new(&datum("G2"), b);
        assert_eq!(g2.b_i[0], b);
        assert!((g2.b_i[1] - b / 3f64.sqrt()).abs() < 1e-15);
        assert!((g2.big_q[1] - (g2.b_i[1] + 1.0 / g2.b_i[1])).abs() < 1e-15);
    }

    #[test]
    fn a1_base_case() {
        let d = datum("A1");
        let ctx = ParamContext::new(&d, 0.6);
        let w = d.longest_word();
        let vp = virtual_lowest_point(&d, &w, &ctx, &[1.0]).unwrap();
        let q = ctx.big_q[0];
        assert!((vp.v[0] - Complex64::new(-2.0, -q / 2.0)).norm() < 1e-14);
        let k = virtual_k_scalar(&d, &vp, &ctx, &[1.0], 0).unwrap();
        let expected = -ctx.q(0) * (2.0 * PI * 0.6).exp();
        assert!((k - expected).norm() / expected.norm() < 1e-12);
        let (low, high) = virtual_weights(&ctx, &[1.0], &[0]);
        assert!((low[0] - Complex64::new(q / 2.0, -1.0)).norm() < 1e-15);
        assert!((high[0] - Complex64::new(-q / 2.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn zero_lambda_gives_imaginary_points_and_minus_q() {
        for s in ["A2", "B2", "G2", "C3"] {
            let d = datum(s);
            let ctx = ParamContext::new(&d, 0.7);
            let lambda = vec![0.0; d.rank()];
            let vp = virtual_lowest_point(&d, &d.longest_word(), &ctx, &lambda).unwrap();
            assert!(vp.v.iter().all(|v| v.re == 0.0), "{s}");
            for i in 0..d.rank() {
                let k = virtual_k_scalar(&d, &vp, &ctx, &lambda, i).unwrap();
                assert!((k + ctx.q(i)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn a2_uses_the_involution() {
        let d = datum("A2");
        let ctx = ParamContext::new(&d, 0.45);
        let lambda = [0.3, 1.1];
        for w in d.longest_reduced_words(usize::MAX) {
            let vp = virtual_lowest_point(&d, &w, &ctx, &lambda).unwrap();
            let k = virtual_k_scalar(&d, &vp, &ctx, &lambda, 0).unwrap();
            let expected = -ctx.q(0) * (2.0 * PI * 0.45 * 1.1).exp();
            assert!((k - expected).norm() / expected.norm() < 1e-12);
        }
        let (low, _) = virtual_weights(&ctx, &[0.2, 0.9], &d.diagram_involution());
        assert!((low[0].im + 0.9).abs() < 1e-15);
        assert!((low[1].im + 0.2).abs() < 1e-15);
        let b2 = datum("B2");
        let (low, _) = virtual_weights(&ctx, &[0.2, 0.9], &b2.diagram_involution());
        assert!((low[0].im + 0.2).abs() < 1e-15);
    }

    #[test]
    fn rejects_words_that_are_not_w0() {
        let d = datum("A2");
        let ctx = ParamContext::new(&d, 0.5);
        let err = virtual_lowest_point(&d, &WeylWord::new(vec![0, 0, 1]), &ctx, &[0.0, 0.0])
            .unwrap_err();
        assert_eq!(err, Error::NotLongestWord);
    }

    #[test]
    fn mismatched_point_is_caught() {
        let d = datum("A2");
        let ctx = ParamContext::new(&d, 0.5);
        let mut vp = virtual_lowest_point(&d, &d.longest_word(), &ctx, &[0.3, 0.4]).unwrap();
        vp.v[1] += Complex64::new(0.25, 0.0);
        assert!(matches!(
            virtual_k_scalar(&d, &vp, &ctx, &[0.3, 0.4], 0),
            Err(Error::KScalarMismatch { .. })
        ));
    }
}
