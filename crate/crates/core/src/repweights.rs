//! Weight systems and dimensions of finite-dimensional irreducibles.
//!
//! Multiplicities come from Freudenthal's recursion over the dominant
//! weights, expanded to full Weyl orbits. All arithmetic is exact: inner
//! products are scaled to integers by a common denominator.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{rat, Basis, Family, RootDatum, WeightVec};

/// Default cap on the dimension of representations expanded into weights.
pub const DEFAULT_DIM_BOUND: u128 = 20_000;

/// Multiset of weights of one irreducible representation, keyed by integer
/// weight-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    highest: Vec<i64>,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn highest(&self) -> &[i64] {
        &self.highest
    }

    pub fn highest_weight(&self) -> WeightVec {
        WeightVec::from_ints(&self.highest, Basis::Weight)
    }

    /// Weight-basis coordinates mapped to multiplicities.
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn num_distinct(&self) -> usize {
        self.entries.len()
    }

    /// `(root-basis coordinates, multiplicity)` for each distinct weight.
    pub fn root_coords(&self, d: &RootDatum) -> Vec<(Vec<BigRational>, u64)> {
        self.entries
            .iter()
            .map(|(m, &mult)| {
                let w = d
                    .to_root_basis(&WeightVec::from_ints(m, Basis::Weight))
                    .expect("weight basis, matching rank");
                (w.coords, mult)
            })
            .collect()
    }
}

/// Common integer scale `L` such that `L (μ, ν)` is an integer for all
/// integral weights, together with the scaled weight-basis Gram matrix.
struct ScaledForm {
    gram: Vec<Vec<BigInt>>,
}

impl ScaledForm {
    fn new(d: &RootDatum) -> Self {
        let n = d.rank();
        // (w_i, w_j) = (A^{-1})_{ji} d_j
        let raw: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &d.cartan_inv()[j][i] * &d.dsym()[j])
                    .collect()
            })
            .collect();
        let mut l = BigInt::one();
        for row in &raw {
            for x in row {
                l = l.lcm(x.denom());
            }
        }
        let scale = BigRational::from_integer(l);
        let gram = raw
            .iter()
            .map(|row| row.iter().map(|x| (x * &scale).to_integer()).collect())
            .collect();
        Self { gram }
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> BigInt {
        let mut s = BigInt::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += &self.gram[i][j] * (ai * bj);
                }
            }
        }
        s
    }
}

fn check_dominant(d: &RootDatum, hw: &WeightVec) -> Result<Vec<i64>> {
    let w = match hw.basis {
        Basis::Weight => hw.clone(),
        Basis::Root => d.to_weight_basis(hw)?,
    };
    if w.len() != d.rank() {
        return Err(Error::LengthMismatch {
            found: w.len(),
            rank: d.rank(),
        });
    }
    let ints = w.to_ints().ok_or(Error::NonDominant)?;
    if ints.iter().any(|&m| m < 0) {
        return Err(Error::NonDominant);
    }
    Ok(ints)
}

/// Weyl dimension formula `∏_{α>0} (hw+ρ, α) / (ρ, α)`, exact.
pub fn weyl_dim(d: &RootDatum, hw: &WeightVec) -> Result<u128> {
    let m = check_dominant(d, hw)?;
    Ok(weyl_dim_ints(d, &m))
}

pub(crate) fn weyl_dim_ints(d: &RootDatum, m: &[i64]) -> u128 {
    // (μ, α) for μ = Σ m_i w_i and α = Σ c_j α_j is Σ_j m_j d_j c_j
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for alpha in d.positive_roots() {
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for j in 0..d.rank() {
            let dc = &d.dsym()[j] * rat(alpha[j]);
            a += &dc * rat(m[j] + 1);
            b += dc;
        }
        num *= a;
        den *= b;
    }
    let q = num / den;
    debug_assert!(q.is_integer());
    q.to_integer().to_u128().expect("positive dimension")
}

/// Dimension of the `k`-th fundamental representation.
pub fn fundamental_dim(d: &RootDatum, k: usize) -> u128 {
    let mut m = vec![0i64; d.rank()];
    m[k] = 1;
    weyl_dim_ints(d, &m)
}

fn dominant_conjugate(d: &RootDatum, m: &[i64]) -> Vec<i64> {
    let mut v = m.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        v = d.reflect_weight_ints(i, &v);
    }
    v
}

fn orbit(d: &RootDatum, m: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(m.to_vec());
    queue.push_back(m.to_vec());
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for i in 0..d.rank() {
            if v[i] != 0 {
                let w = d.reflect_weight_ints(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        out.push(v);
    }
    out
}

/// Dominant weights `μ ≤ hw`, listed with their depth (height of `hw - μ`).
fn dominant_weights(d: &RootDatum, hw: &[i64]) -> Vec<(Vec<i64>, i64)> {
    // Subtract positive roots from dominant weights; the dominant weights of
    // V(hw) are connected this way.
    let roots_w: Vec<(Vec<i64>, i64)> = d
        .positive_roots()
        .iter()
        .map(|r| (d.root_to_weight_ints(r), r.iter().sum()))
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = vec![(hw.to_vec(), 0)];
    seen.insert(hw.to_vec());
    let mut head = 0;
    while head < out.len() {
        let (mu, depth) = out[head].clone();
        for (rw, h) in &roots_w {
            let nu: Vec<i64> = mu.iter().zip(rw).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                out.push((nu, depth + h));
            }
        }
        head += 1;
    }
    out.sort_by_key(|(_, depth)| *depth);
    out
}

/// Full weight system of the irreducible with highest weight `hw`.
pub fn weight_system(d: &RootDatum, hw: &WeightVec, dim_bound: u128) -> Result<WeightSystem> {
    let hw = check_dominant(d, hw)?;
    let dim = weyl_dim_ints(d, &hw);
    if dim > dim_bound {
        return Err(Error::DimensionBound {
            dim,
            bound: dim_bound,
        });
    }
    let form = ScaledForm::new(d);
    let n = d.rank();
    let rho = vec![1i64; n];
    let shift = |m: &[i64]| -> Vec<i64> { m.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let hw_rho = shift(&hw);
    let top = form.inner(&hw_rho, &hw_rho);
    let roots_w: Vec<Vec<i64>> = d
        .positive_roots()
        .iter()
        .map(|r| d.root_to_weight_ints(r))
        .collect();

    let dominant = dominant_weights(d, &hw);
    let dominant_set: HashSet<Vec<i64>> = dominant.iter().map(|(m, _)| m.clone()).collect();
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (mu, depth) in &dominant {
        if *depth == 0 {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc = BigInt::zero();
        for alpha in &roots_w {
            let mut k = 1i64;
            loop {
                let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                let dom = dominant_conjugate(d, &nu);
                if !dominant_set.contains(&dom) {
                    break;
                }
                let m_nu = mult.get(&dom).copied().unwrap_or(0);
                if m_nu > 0 {
                    acc += form.inner(&nu, alpha) * BigInt::from(m_nu);
                }
                k += 1;
            }
        }
        let mu_rho = shift(mu);
        let denom = &top - form.inner(&mu_rho, &mu_rho);
        let value: BigInt = (acc * 2) / &denom;
        let m = value.to_u64().expect("nonnegative multiplicity");
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }

    let mut entries = BTreeMap::new();
    for (mu, m) in &mult {
        for w in orbit(d, mu) {
            entries.insert(w, *m);
        }
    }
    Ok(WeightSystem {
        highest: hw,
        entries,
    })
}

/// Weight system of the `k`-th fundamental representation `V_k`.
pub fn fundamental_rep(d: &RootDatum, k: usize, dim_bound: u128) -> Result<WeightSystem> {
    d.check_node(k)?;
    let w = d.fundamental_weight(k, Basis::Weight);
    weight_system(d, &w, dim_bound)
}

fn binom(n: u64, k: i64) -> u128 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let k = k as u64;
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Fundamental dimensions as tabulated for each family, keyed by node
/// label. These are reproduced as printed; the A_n and D_n closed forms do
/// not agree with the Weyl dimension formula.
pub fn tabulated_dim(d: &RootDatum, index: usize) -> u128 {
    let t = d.lie_type();
    let n = t.rank() as u64;
    let k = t.label(index);
    match t.family() {
        Family::A => binom(n, k),
        Family::B => {
            if k == 1 {
                1u128 << n
            } else {
                binom(2 * n + 1, n as i64 + k)
            }
        }
        Family::C => {
            if k as u64 == n {
                2 * n as u128
            } else {
                binom(2 * n, n as i64 + 1 - k) - binom(2 * n, n as i64 + 1 + k)
            }
        }
        Family::D => {
            if k == 0 || k == 1 {
                1u128 << (n - 1)
            } else {
                binom(2 * n, n as i64 + 1 + k)
            }
        }
        Family::E => {
            let table: &[u128] = match n {
                6 => &[78, 27, 351, 2925, 351, 27],
                7 => &[912, 133, 8645, 365750, 27664, 1539, 56],
                _ => &[
                    147250, 3875, 6696000, 6899079264, 146325270, 2450240, 30380, 248,
                ],
            };
            table[k as usize]
        }
        Family::F => [52, 1274, 273, 26][(k - 1) as usize],
        Family::G => [14, 7][(k - 1) as usize],
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimAuditRow {
    pub label: i64,
    pub tabulated: u128,
    pub weyl_dim: u128,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimAudit {
    pub lie_type: String,
    pub rows: Vec<DimAuditRow>,
    pub all_match: bool,
}

/// Compare the tabulated fundamental dimensions with the Weyl dimension
/// formula node by node. Mismatches are flagged, never raised.
pub fn audit_tabulated_dims(d: &RootDatum) -> DimAudit {
    let rows: Vec<DimAuditRow> = (0..d.rank())
        .map(|i| {
            let tabulated = tabulated_dim(d, i);
            let wd = fundamental_dim(d, i);
            DimAuditRow {
                label: d.lie_type().label(i),
                tabulated,
                weyl_dim: wd,
                matches: tabulated == wd,
            }
        })
        .collect();
    DimAudit {
        lie_type: d.lie_type().to_string(),
        all_match: rows.iter().all(|r| r.matches),
        rows,
    }
}

/// Root-basis coordinates of a weight as `f64`.
pub(crate) fn root_coords_f64(d: &RootDatum, m: &[i64]) -> Vec<f64> {
    let n = d.rank();
    (0..n)
        .map(|i| {
            let mut s = BigRational::zero();
            for (j, &mj) in m.iter().enumerate() {
                if mj != 0 {
                    s += &d.cartan_inv()[i][j] * rat(mj);
                }
            }
            crate::rootdata::rat_to_f64(&s)
        })
        .collect()
}
