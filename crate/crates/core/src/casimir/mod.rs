//! Positive central characters and the map `Φ`.
//!
//! Every evaluator here takes the rescaled spectral parameters
//! `t_i = b_i λ_i`, so that `λ_b = Σ t_i W_i` and a weight with root
//! coordinates `c` pairs to `μ(λ_b) = Σ c_i t_i`. Nothing in this module
//! accepts the deformation parameter: the eigenvalues do not depend on it.
//! The virtual weight computations, which do, live in [`virtual_weight`].

pub mod virtual_weight;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::repweights::{self, root_coords_f64, WeightSystem, DEFAULT_DIM_BOUND};
use crate::rootdata::{enumerate_weyl, RootDatum, WeylElement};

use std::f64::consts::PI;

pub use virtual_weight::{
    virtual_k_scalar, virtual_lowest_point, virtual_weights, ParamContext, VirtualPoint,
};

/// Largest exponent accepted before declaring overflow.
const MAX_EXPONENT: f64 = 700.0;

/// Threshold below which `|α(t)|` makes the Weyl denominator vanish.
pub const DEGENERATE_ROOT_VALUE: f64 = 1e-8;

/// Rescaled spectral parameters `t_i = b_i λ_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralParams(pub Vec<f64>);

impl SpectralParams {
    pub fn new(t: Vec<f64>) -> Self {
        Self(t)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<f64>> for SpectralParams {
    fn from(t: Vec<f64>) -> Self {
        Self(t)
    }
}

/// Image of one parameter point under `Φ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPoint {
    pub t: SpectralParams,
    pub c: Vec<f64>,
}

fn check_params(d: &RootDatum, t: &[f64]) -> Result<()> {
    if t.len() != d.rank() {
        return Err(Error::LengthMismatch {
            found: t.len(),
            rank: d.rank(),
        });
    }
    if t.iter().any(|x| !x.is_finite()) {
        return Err(Error::Overflow);
    }
    Ok(())
}

/// A weight system flattened for fast evaluation: root coordinates of each
/// distinct weight as `f64`, with multiplicities.
#[derive(Debug, Clone)]
pub struct Character {
    coords: Vec<Vec<f64>>,
    mults: Vec<f64>,
    dim: u64,
}

impl Character {
    pub fn new(d: &RootDatum, ws: &WeightSystem) -> Self {
        let mut coords = Vec::with_capacity(ws.num_distinct());
        let mut mults = Vec::with_capacity(ws.num_distinct());
        for (m, &mult) in ws.entries() {
            coords.push(root_coords_f64(d, m));
            mults.push(mult as f64);
        }
        Self {
            coords,
            mults,
            dim: ws.dim(),
        }
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// `Σ_μ m_μ exp(-4π μ(t))`.
    pub fn eval(&self, t: &[f64]) -> Result<f64> {
        let mut sum = CompensatedSum::new();
        for (c, &m) in self.coords.iter().zip(&self.mults) {
            let e = -4.0 * PI * dot(c, t);
            if e > MAX_EXPONENT {
                return Err(Error::Overflow);
            }
            sum.add(m * e.exp());
        }
        let v = sum.value();
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Overflow)
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `C(t) = Σ_μ m_μ exp(-4π μ(λ_b))` for the given weight system.
pub fn central_character(d: &RootDatum, ws: &WeightSystem, t: &SpectralParams) -> Result<f64> {
    check_params(d, t.as_slice())?;
    Character::new(d, ws).eval(t.as_slice())
}

/// The map `Φ: t -> (C_1(t), ..., C_n(t))` with the fundamental characters
/// precomputed.
#[derive(Debug, Clone)]
pub struct CasimirMap {
    datum: RootDatum,
    characters: Vec<Character>,
}

impl CasimirMap {
    pub fn new(d: &RootDatum) -> Result<Self> {
        Self::with_dim_bound(d, DEFAULT_DIM_BOUND)
    }

    pub fn with_dim_bound(d: &RootDatum, bound: u128) -> Result<Self> {
        let characters = (0..d.rank())
            .map(|k| {
                let ws = repweights::fundamental_rep(d, k, bound)?;
                Ok(Character::new(d, &ws))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            datum: d.clone(),
            characters,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn character(&self, k: usize) -> &Character {
        &self.characters[k]
    }

    /// Dimensions of the fundamental representations, `Φ(0)`.
    pub fn dims(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.dim()).collect()
    }

    pub fn eval(&self, t: &[f64]) -> Result<Vec<f64>> {
        check_params(&self.datum, t)?;
        self.characters.iter().map(|c| c.eval(t)).collect()
    }

    pub fn phi(&self, t: &SpectralParams) -> Result<CharPoint> {
        Ok(CharPoint {
            t: t.clone(),
            c: self.eval(t.as_slice())?,
        })
    }
}

/// `Φ(t)` in node order.
pub fn phi(d: &RootDatum, t: &SpectralParams) -> Result<CharPoint> {
    CasimirMap::new(d)?.phi(t)
}

/// Weyl character formula evaluator. Holds the enumerated group.
#[derive(Debug, Clone)]
pub struct WeylOracle {
    datum: RootDatum,
    group: Vec<WeylElement>,
    rho: Vec<f64>,
    roots: Vec<Vec<f64>>,
}

impl WeylOracle {
    pub fn new(d: &RootDatum, cap: usize) -> Result<Self> {
        let group = enumerate_weyl(d, cap)?;
        let rho = d.rho().to_f64();
        let roots = d
            .positive_roots()
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect();
        Ok(Self {
            datum: d.clone(),
            group,
            rho,
            roots,
        })
    }

    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    /// `Σ_w sgn(w) e^{-4π (w_k+ρ)(w·λ_b)} / ∏_{α>0} (e^{-2πα(λ_b)} - e^{2πα(λ_b)})`,
    /// evaluated in log space.
    pub fn eval(&self, k: usize, t: &[f64]) -> Result<f64> {
        let d = &self.datum;
        check_params(d, t)?;
        d.check_node(k)?;

        let mut log_den = 0.0;
        let mut den_negative = false;
        let mut min_root = f64::INFINITY;
        for r in &self.roots {
            let a = dot(r, t);
            min_root = min_root.min(a.abs());
            // e^{-2πa} - e^{2πa} = -2 sinh(2πa)
            log_den += log_two_sinh_abs(2.0 * PI * a);
            if a > 0.0 {
                den_negative = !den_negative;
            }
        }
        if min_root < DEGENERATE_ROOT_VALUE {
            return Err(Error::DegeneratePoint {
                min_root_value: min_root,
            });
        }

        let wk = d.fundamental_weight(k, crate::rootdata::Basis::Root).to_f64();
        let shifted: Vec<f64> = wk.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let exponents: Vec<(f64, f64)> = self
            .group
            .iter()
            .map(|w| {
                let wt = d.weyl_act_params_word(&w.word.letters, t);
                (w.sign(), -4.0 * PI * dot(&shifted, &wt))
            })
            .collect();
        let max = exponents
            .iter()
            .map(|&(_, e)| e)
            .fold(f64::NEG_INFINITY, f64::max);
        let sum: CompensatedSum = exponents
            .iter()
            .map(|&(s, e)| s * (e - max).exp())
            .collect();
        let num = sum.value();
        let sign = if (num < 0.0) != den_negative { -1.0 } else { 1.0 };
        let log_value = max + num.abs().ln() - log_den;
        if log_value > MAX_EXPONENT {
            return Err(Error::Overflow);
        }
        Ok(sign * log_value.exp())
    }
}

/// `ln |2 sinh x|` without overflow.
fn log_two_sinh_abs(x: f64) -> f64 {
    let a = x.abs();
    if a > 20.0 {
        a + (-(-2.0 * a).exp()).ln_1p()
    } else {
        (2.0 * a.sinh()).ln()
    }
}

/// One-shot Weyl character formula evaluation for `V_k`.
pub fn weyl_character_oracle(
    d: &RootDatum,
    k: usize,
    t: &SpectralParams,
    cap: usize,
) -> Result<f64> {
    WeylOracle::new(d, cap)?.eval(k, t.as_slice())
}

/// `D = ∏_{α∈Δ}(1 - e^{-4πα(λ_b)})` and its short/long split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootProduct {
    pub d: f64,
    pub d_s: f64,
    pub d_l: f64,
}

/// Product over all roots, positive and negative. Each pair `±α` contributes
/// `(1-e^{-x})(1-e^{x}) = -4 sinh²(x/2)` with `x = 4π α(t)`. In simply-laced
/// types every root counts as short, so `D_l = 1`.
pub fn product_d(d: &RootDatum, t: &SpectralParams) -> RootProduct {
    let mut d_s = 1.0;
    let mut d_l = 1.0;
    for r in d.positive_roots() {
        let a: f64 = r.iter().zip(t.as_slice()).map(|(&c, x)| c as f64 * x).sum();
        let s = (2.0 * PI * a).sinh();
        let factor = -4.0 * s * s;
        if d.is_long_root(r) {
            d_l *= factor;
        } else {
            d_s *= factor;
        }
    }
    RootProduct {
        d: d_s * d_l,
        d_s,
        d_l,
    }
}

/// Product of the per-root factor magnitudes, used to scale "D ≈ 0" checks.
pub fn product_scale(d: &RootDatum, t: &SpectralParams) -> f64 {
    d.positive_roots()
        .iter()
        .map(|r| {
            let a: f64 = r.iter().zip(t.as_slice()).map(|(&c, x)| c as f64 * x).sum();
            let x = 4.0 * PI * a;
            (1.0 + (-x).exp()) * (1.0 + x.exp())
        })
        .product()
}

/// Exact check of `s_{i_1}...s_{i_t}(α_k) = α_k - Σ_j a_{i_j k} s_{i_1}...s_{i_{j-1}}(α_{i_j})`.
pub fn root_com_check(d: &RootDatum, word: &[usize], k: usize) -> bool {
    let n = d.rank();
    if k >= n || word.iter().any(|&i| i >= n) {
        return false;
    }
    let unit = |i: usize| {
        let mut e = vec![0i64; n];
        e[i] = 1;
        e
    };
    let lhs = d.apply_word_ints(word, &unit(k));
    let mut rhs = unit(k);
    for j in 0..word.len() {
        let beta = d.apply_word_ints(&word[..j], &unit(word[j]));
        let a = d.a(word[j], k);
        for (x, b) in rhs.iter_mut().zip(&beta) {
            *x -= a * b;
        }
    }
    lhs == rhs
}
