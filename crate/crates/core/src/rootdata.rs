//! Root data for the simple Lie algebras and the Weyl group combinatorics
//! used by everything downstream.
//!
//! Node labels follow these diagram conventions:
//!
//! | type  | labels            | short nodes | Bourbaki image of label `k` |
//! |-------|-------------------|-------------|-----------------------------|
//! | `A_n` | `1..n` chain      | none        | `k`                         |
//! | `B_n` | `1..n` chain      | `1`         | `n+1-k`                     |
//! | `C_n` | `1..n` chain      | `2..n`      | `n+1-k`                     |
//! | `D_n` | `0,1` branch, `2..n-1` chain | none | `0 -> n`, `1 -> n-1`, `k -> n-k` |
//! | `E_n` | `1..n-1` chain, `0` on `3` | none | `0 -> 2`, `1 -> 1`, `k -> k+1` |
//! | `F_4` | `1..4` chain      | `3,4`       | `k`                         |
//! | `G_2` | `1,2`             | `2`         | `3-k`                       |
//!
//! Internally nodes are zero-based indices. For `D_n` and `E_n` the index
//! equals the label; for every other family the label is `index + 1`.
//!
//! The Cartan matrix is `a_ij = 2(α_i,α_j)/(α_i,α_i)` with symmetrizer
//! `d_i = (α_i,α_i)/2` equal to 1 on long nodes, 1/2 on short nodes of
//! B/C/F and 1/3 on the short node of G_2. The simple reflections act by
//! `s_i(α_j) = α_j - a_ij α_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on Weyl group enumeration (covers `E_6`).
pub const DEFAULT_WEYL_CAP: usize = 60_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie type such as `A2` or `G2`. Only admissible pairs exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InadmissibleRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Label of the zero-based node index.
    pub fn label(&self, index: usize) -> i64 {
        match self.family {
            Family::D | Family::E => index as i64,
            _ => index as i64 + 1,
        }
    }

    /// Zero-based node index of a diagram label.
    pub fn index_of_label(&self, label: i64) -> Result<usize> {
        let idx = match self.family {
            Family::D | Family::E => label,
            _ => label - 1,
        };
        if idx < 0 || idx as usize >= self.rank {
            return Err(Error::UnknownNodeLabel(label));
        }
        Ok(idx as usize)
    }

    pub fn labels(&self) -> Vec<i64> {
        (0..self.rank).map(|i| self.label(i)).collect()
    }

    /// Bourbaki number of the node with the given zero-based index.
    pub fn bourbaki_node(&self, index: usize) -> usize {
        let n = self.rank;
        let label = self.label(index) as usize;
        match self.family {
            Family::A | Family::F => label,
            Family::B | Family::C => n + 1 - label,
            Family::D => match label {
                0 => n,
                1 => n - 1,
                k => n - k,
            },
            Family::E => match label {
                0 => 2,
                1 => 1,
                k => k + 1,
            },
            Family::G => 3 - label,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::MalformedType(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::MalformedType(s.to_string()));
        }
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::MalformedType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// Parse a type string such as `"B3"`.
pub fn parse_lie_type(text: &str) -> Result<LieType> {
    text.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    /// Coordinates in the simple roots `α_i`.
    Root,
    /// Coordinates in the fundamental weights `w_i`.
    Weight,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Root => "root-basis",
            Basis::Weight => "weight-basis",
        }
    }
}

/// An exact rational weight tagged with its coordinate basis.
///
/// In root coordinates `c`, the pairing with the coweight `W_i` is `c_i`; in
/// weight coordinates `m`, the pairing with the coroot `H_i` is `m_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    pub coords: Vec<BigRational>,
    pub basis: Basis,
}

impl WeightVec {
    pub fn new(coords: Vec<BigRational>, basis: Basis) -> Self {
        Self { coords, basis }
    }

    pub fn from_ints(coords: &[i64], basis: Basis) -> Self {
        Self {
            coords: coords.iter().map(|&c| rat(c)).collect(),
            basis,
        }
    }

    pub fn zero(n: usize, basis: Basis) -> Self {
        Self {
            coords: vec![BigRational::zero(); n],
            basis,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rat_to_f64).collect()
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis.name(),
                found: self.basis.name(),
            })
        }
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A word `s_{i_1} s_{i_2} ... s_{i_t}` in the simple reflections, stored as
/// zero-based node indices. Acting on a vector applies `s_{i_t}` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word written with diagram labels, e.g. `[1, 2, 1]`.
    pub fn labels(&self, t: &LieType) -> Vec<i64> {
        self.letters.iter().map(|&i| t.label(i)).collect()
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Cartan datum of one simple type, with its positive roots.
#[derive(Debug, Clone)]
pub struct RootDatum {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    dsym: Vec<BigRational>,
    cartan_inv: Vec<Vec<BigRational>>,
    gram: Vec<Vec<BigRational>>,
    positive_roots: Vec<Vec<i64>>,
    long_norm: BigRational,
}

/// Build the root datum of a Lie type.
pub fn build_root_datum(t: LieType) -> RootDatum {
    RootDatum::new(t)
}

impl RootDatum {
    pub fn new(t: LieType) -> Self {
        let n = t.rank();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let one = BigRational::one();

        // symmetrizers and edges (i, j) in zero-based indices
        let mut dsym = vec![one.clone(); n];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match t.family() {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n - 1 {
                    edges.push((i, i + 1));
                }
            }
            Family::D => {
                edges.push((0, 2));
                edges.push((1, 2));
                for i in 2..n - 1 {
                    edges.push((i, i + 1));
                }
            }
            Family::E => {
                for i in 1..n - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((0, 3));
            }
        }
        match t.family() {
            Family::B => dsym[0] = half.clone(),
            Family::C => {
                for d in dsym.iter_mut().skip(1) {
                    *d = half.clone();
                }
            }
            Family::F => {
                dsym[2] = half.clone();
                dsym[3] = half.clone();
            }
            Family::G => dsym[1] = third,
            _ => {}
        }

        // (α_i, α_j): 2 d_i on the diagonal; adjacent nodes pair to -1 unless
        // both are short, in which case -d (so that a_ij = -1).
        let mut gram = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            gram[i][i] = &dsym[i] * rat(2);
        }
        for &(i, j) in &edges {
            let g = if dsym[i] == dsym[j] {
                -dsym[i].clone()
            } else {
                -one.clone()
            };
            gram[i][j] = g.clone();
            gram[j][i] = g;
        }

        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = &gram[i][j] / &dsym[i];
                        debug_assert!(a.is_integer());
                        i64::try_from(a.to_integer()).expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();

        let cartan_inv = invert_integer_matrix(&cartan);
        let positive_roots = positive_roots_by_closure(&cartan);

        let mut datum = Self {
            lie_type: t,
            cartan,
            dsym,
            cartan_inv,
            gram,
            positive_roots,
            long_norm: BigRational::zero(),
        };
        datum.long_norm = datum
            .positive_roots
            .iter()
            .map(|r| datum.root_norm(r))
            .max()
            .unwrap_or_else(BigRational::zero);
        datum
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn dsym(&self) -> &[BigRational] {
        &self.dsym
    }

    pub fn dsym_f64(&self, i: usize) -> f64 {
        rat_to_f64(&self.dsym[i])
    }

    pub fn cartan_inv(&self) -> &[Vec<BigRational>] {
        &self.cartan_inv
    }

    /// Symmetric matrix of `(α_i, α_j)`.
    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn labels(&self) -> Vec<i64> {
        self.lie_type.labels()
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i,
                rank: self.rank(),
            })
        }
    }

    /// `(β, β)` for a vector in root coordinates.
    pub fn root_norm(&self, c: &[i64]) -> BigRational {
        self.root_inner(c, c)
    }

    /// `(β, γ)` for vectors in root coordinates.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += &self.gram[i][j] * rat(ai * bj);
                }
            }
        }
        s
    }

    /// Whether a root (root coordinates) is long. In simply-laced types every
    /// root counts as short.
    pub fn is_long_root(&self, c: &[i64]) -> bool {
        !self.lie_type.is_simply_laced() && self.root_norm(c) == self.long_norm
    }

    /// Short/long flag of each simple node.
    pub fn is_short_node(&self, i: usize) -> bool {
        self.dsym[i] != BigRational::one()
    }

    /// Fundamental weight `w_k` in the requested basis.
    pub fn fundamental_weight(&self, k: usize, basis: Basis) -> WeightVec {
        let n = self.rank();
        let mut m = vec![0i64; n];
        m[k] = 1;
        let w = WeightVec::from_ints(&m, Basis::Weight);
        match basis {
            Basis::Weight => w,
            Basis::Root => self.to_root_basis(&w).expect("weight basis input"),
        }
    }

    /// `ρ`, the half sum of positive roots, in root coordinates.
    pub fn rho(&self) -> WeightVec {
        let n = self.rank();
        let mut sum = vec![0i64; n];
        for r in &self.positive_roots {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        WeightVec::new(
            sum.into_iter()
                .map(|s| BigRational::new(BigInt::from(s), BigInt::from(2)))
                .collect(),
            Basis::Root,
        )
    }

    /// Weight-basis coordinates `m = A c` to root-basis `c = A^{-1} m`.
    pub fn to_root_basis(&self, v: &WeightVec) -> Result<WeightVec> {
        v.expect_basis(Basis::Weight)?;
        self.check_len(v.len())?;
        let n = self.rank();
        let coords = (0..n)
            .map(|i| {
                let mut s = BigRational::zero();
                for j in 0..n {
                    s += &self.cartan_inv[i][j] * &v.coords[j];
                }
                s
            })
            .collect();
        Ok(WeightVec::new(coords, Basis::Root))
    }

    pub fn to_weight_basis(&self, v: &WeightVec) -> Result<WeightVec> {
        v.expect_basis(Basis::Root)?;
        self.check_len(v.len())?;
        let n = self.rank();
        let coords = (0..n)
            .map(|i| {
                let mut s = BigRational::zero();
                for j in 0..n {
                    if self.cartan[i][j] != 0 {
                        s += &v.coords[j] * rat(self.cartan[i][j]);
                    }
                }
                s
            })
            .collect();
        Ok(WeightVec::new(coords, Basis::Weight))
    }

    /// Integer root coordinates to weight coordinates (`m = A c`).
    pub fn root_to_weight_ints(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.cartan[i][j] * c[j]).sum())
            .collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                found: len,
                rank: self.rank(),
            })
        }
    }

    /// Simple reflection on a root-basis vector: only coordinate `i` changes,
    /// `c_i -> c_i - Σ_j a_ij c_j`.
    pub fn reflect(&self, i: usize, v: &WeightVec) -> Result<WeightVec> {
        v.expect_basis(Basis::Root)?;
        self.check_len(v.len())?;
        self.check_node(i)?;
        let mut out = v.clone();
        let mut pairing = BigRational::zero();
        for j in 0..self.rank() {
            if self.cartan[i][j] != 0 {
                pairing += &v.coords[j] * rat(self.cartan[i][j]);
            }
        }
        out.coords[i] -= pairing;
        Ok(out)
    }

    /// Integer version of [`RootDatum::reflect`].
    pub fn reflect_ints(&self, i: usize, c: &[i64]) -> Vec<i64> {
        let mut out = c.to_vec();
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * c[j]).sum();
        out[i] -= pairing;
        out
    }

    /// Apply `s_{i_1} ... s_{i_t}` to an integer root-basis vector.
    pub fn apply_word_ints(&self, word: &[usize], c: &[i64]) -> Vec<i64> {
        word.iter()
            .rev()
            .fold(c.to_vec(), |v, &i| self.reflect_ints(i, &v))
    }

    /// Reflect a weight-basis integer vector: `m_j -= m_i a_ji`.
    pub fn reflect_weight_ints(&self, i: usize, m: &[i64]) -> Vec<i64> {
        let mi = m[i];
        let mut out = m.to_vec();
        if mi != 0 {
            for (j, o) in out.iter_mut().enumerate() {
                *o -= mi * self.cartan[j][i];
            }
        }
        out
    }

    /// Simple reflection on the rescaled parameters `t_j = λ_j b_j` of
    /// `λ_b = Σ t_j W_j`: `t_j -> t_j - a_ij t_i`.
    pub fn weyl_act_params(&self, i: usize, t: &[f64]) -> Vec<f64> {
        let ti = t[i];
        t.iter()
            .enumerate()
            .map(|(j, &tj)| tj - self.cartan[i][j] as f64 * ti)
            .collect()
    }

    pub fn weyl_act_params_exact(&self, i: usize, t: &[BigRational]) -> Vec<BigRational> {
        let ti = t[i].clone();
        t.iter()
            .enumerate()
            .map(|(j, tj)| tj - &ti * rat(self.cartan[i][j]))
            .collect()
    }

    /// Apply a word to parameters, `s_{i_t}` first.
    pub fn weyl_act_params_word(&self, word: &[usize], t: &[f64]) -> Vec<f64> {
        word.iter()
            .rev()
            .fold(t.to_vec(), |v, &i| self.weyl_act_params(i, &v))
    }

    /// A reduced word for the longest element `w_0`.
    ///
    /// Starting from `ρ` (all weight coordinates 1), repeatedly reflect in the
    /// first node with a positive coordinate until reaching `-ρ`. The reflections
    /// applied in order are the word read from right to left.
    pub fn longest_word(&self) -> WeylWord {
        let n = self.rank();
        let mut m = vec![1i64; n];
        let mut applied = Vec::with_capacity(self.num_positive_roots());
        while let Some(i) = m.iter().position(|&x| x > 0) {
            m = self.reflect_weight_ints(i, &m);
            applied.push(i);
        }
        applied.reverse();
        WeylWord::new(applied)
    }

    /// All reduced words of `w_0`, up to `limit` of them, in lexicographic
    /// order of the word.
    pub fn longest_reduced_words(&self, limit: usize) -> Vec<WeylWord> {
        // Words are read backwards from -ρ: the first letter s_{i_1} is the
        // last reflection applied to ρ. Walk from -ρ upwards instead: at -ρ
        // apply s_i for any i with negative coordinate, which is i_1.
        let n = self.rank();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let start = vec![-1i64; n];
        self.reduced_words_dfs(&start, &mut prefix, &mut out, limit);
        out
    }

    fn reduced_words_dfs(
        &self,
        m: &[i64],
        prefix: &mut Vec<usize>,
        out: &mut Vec<WeylWord>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if m.iter().all(|&x| x > 0) {
            out.push(WeylWord::new(prefix.clone()));
            return;
        }
        for i in 0..self.rank() {
            if m[i] < 0 {
                prefix.push(i);
                let next = self.reflect_weight_ints(i, m);
                self.reduced_words_dfs(&next, prefix, out, limit);
                prefix.pop();
                if out.len() >= limit {
                    return;
                }
            }
        }
    }

    /// A uniformly chosen step-by-step random reduced word of `w_0`.
    pub fn random_longest_word<R: rand::Rng>(&self, rng: &mut R) -> WeylWord {
        let n = self.rank();
        let mut m = vec![-1i64; n];
        let mut word = Vec::with_capacity(self.num_positive_roots());
        loop {
            let choices: Vec<usize> = (0..n).filter(|&i| m[i] < 0).collect();
            if choices.is_empty() {
                break;
            }
            let i = choices[rng.gen_range(0..choices.len())];
            word.push(i);
            m = self.reflect_weight_ints(i, &m);
        }
        WeylWord::new(word)
    }

    /// Whether `word` is a reduced expression of `w_0`: its length is
    /// `|Δ^+|` and it sends every positive root to a negative root.
    pub fn is_longest_word(&self, word: &WeylWord) -> bool {
        word.len() == self.num_positive_roots()
            && word.letters.iter().all(|&i| i < self.rank())
            && self.positive_roots.iter().all(|r| {
                let img = self.apply_word_ints(&word.letters, r);
                img.iter().all(|&x| x <= 0) && img.iter().any(|&x| x < 0)
            })
    }

    /// The diagram involution `σ` with `w_0(α_i) = -α_{σ(i)}`.
    pub fn diagram_involution(&self) -> Vec<usize> {
        let w0 = self.longest_word();
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                let img = self.apply_word_ints(&w0.letters, &e);
                img.iter()
                    .position(|&x| x == -1)
                    .expect("w_0 maps simple roots to negative simple roots")
            })
            .collect()
    }
}

fn invert_integer_matrix(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| rat(x)).collect();
            r.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
            let mut s = r.clone();
            s[i] -= pairing;
            if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// One Weyl group element: its matrix on root coordinates (column `j` is the
/// image of `α_j`) and a reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub word: WeylWord,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn sign(&self) -> f64 {
        if self.word.len().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Apply to an integer root-basis vector.
    pub fn apply(&self, c: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Enumerate the Weyl group breadth-first by word length. Each element is
/// identified by its image of `ρ`; words are built by left multiplication so
/// each stored word is reduced.
pub fn enumerate_weyl(d: &RootDatum, cap: usize) -> Result<Vec<WeylElement>> {
    let n = d.rank();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let rho = vec![1i64; n];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(rho.clone(), 0);
    let mut elements = vec![WeylElement {
        matrix: identity,
        word: WeylWord::default(),
    }];
    let mut images = vec![rho];
    let mut head = 0;
    while head < elements.len() {
        for i in 0..n {
            let img = d.reflect_weight_ints(i, &images[head]);
            if index.contains_key(&img) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            let parent = &elements[head];
            // s_i * M: row i becomes row_i - Σ_k a_ik row_k
            let mut matrix = parent.matrix.clone();
            for c in 0..n {
                let pairing: i64 = (0..n).map(|k| d.a(i, k) * parent.matrix[k][c]).sum();
                matrix[i][c] -= pairing;
            }
            let mut letters = Vec::with_capacity(parent.word.len() + 1);
            letters.push(i);
            letters.extend_from_slice(&parent.word.letters);
            index.insert(img.clone(), elements.len());
            images.push(img);
            elements.push(WeylElement {
                matrix,
                word: WeylWord::new(letters),
            });
        }
        head += 1;
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::new(s.parse().unwrap())
    }

    #[test]
    fn parses_types() {
        assert_eq!(
            parse_lie_type("A2").unwrap(),
            LieType::new(Family::A, 2).unwrap()
        );
        assert_eq!(
            parse_lie_type("G2").unwrap(),
            LieType::new(Family::G, 2).unwrap()
        );
        assert_eq!(
            parse_lie_type("D3"),
            Err(Error::InadmissibleRank {
                family: 'D',
                rank: 3
            })
        );
        assert!(matches!(parse_lie_type("X2"), Err(Error::MalformedType(_))));
        assert!(matches!(parse_lie_type("A"), Err(Error::MalformedType(_))));
        assert!(matches!(parse_lie_type("A2x"), Err(Error::MalformedType(_))));
        assert!(parse_lie_type("E9").is_err());
        assert!(parse_lie_type("F3").is_err());
        assert!(parse_lie_type("B1").is_err());
        assert_eq!(parse_lie_type("b3").unwrap().to_string(), "B3");
    }

    #[test]
    fn cartan_matrices_in_diagram_labeling() {
        assert_eq!(datum("A2").cartan(), &[vec![2, -1], vec![-1, 2]]);
        let g2 = datum("G2");
        assert_eq!(g2.a(0, 1), -1);
        assert_eq!(g2.a(1, 0), -3);
        assert_eq!(g2.dsym()[1], BigRational::new(1.into(), 3.into()));
        let b2 = datum("B2");
        assert_eq!(b2.a(0, 1), -2);
        assert_eq!(b2.a(1, 0), -1);
        assert_eq!(b2.dsym()[0], BigRational::new(1.into(), 2.into()));
        let c3 = datum("C3");
        assert_eq!(c3.a(0, 1), -1);
        assert_eq!(c3.a(1, 0), -2);
        assert_eq!(c3.a(1, 2), -1);
        let d4 = datum("D4");
        assert_eq!(d4.a(0, 2), -1);
        assert_eq!(d4.a(1, 2), -1);
        assert_eq!(d4.a(0, 1), 0);
        assert_eq!(d4.a(2, 3), -1);
        let e6 = datum("E6");
        assert_eq!(e6.a(0, 3), -1);
        assert_eq!(e6.a(0, 1), 0);
    }

    #[test]
    fn cartan_axioms_and_inverse() {
        for s in ["A1", "A4", "B2", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let d = datum(s);
            let n = d.rank();
            for i in 0..n {
                assert_eq!(d.a(i, i), 2);
                for j in 0..n {
                    if i != j {
                        assert!(d.a(i, j) <= 0);
                    }
                    assert_eq!(
                        &d.dsym()[i] * rat(d.a(i, j)),
                        &d.dsym()[j] * rat(d.a(j, i)),
                        "{s} symmetrizable"
                    );
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let mut s_ij = BigRational::zero();
                    for k in 0..n {
                        s_ij += &d.cartan_inv()[i][k] * rat(d.a(k, j));
                    }
                    assert_eq!(s_ij, rat(i64::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn adjacent_pairing_minus_one_when_a_long_node_is_involved() {
        for s in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let d = datum(s);
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    if i != j && d.a(i, j) != 0 && !(d.is_short_node(i) && d.is_short_node(j)) {
                        assert_eq!(d.gram()[i][j], rat(-1), "{s} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn short_nodes_match_diagrams() {
        let short = |s: &str| -> Vec<i64> {
            let d = datum(s);
            (0..d.rank())
                .filter(|&i| d.is_short_node(i))
                .map(|i| d.lie_type().label(i))
                .collect()
        };
        assert_eq!(short("B4"), vec![1]);
        assert_eq!(short("C4"), vec![2, 3, 4]);
        assert_eq!(short("F4"), vec![3, 4]);
        assert_eq!(short("G2"), vec![2]);
        assert!(short("E7").is_empty());
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (s, count) in expected {
            assert_eq!(datum(s).num_positive_roots(), count, "{s}");
        }
        let a2 = datum("A2");
        assert_eq!(
            a2.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn rho_equals_sum_of_fundamental_weights() {
        for s in [
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C2", "C3", "C4",
            "D4", "D5", "E6", "F4", "G2",
        ] {
            let d = datum(s);
            let rho = d.rho();
            let mut sum = WeightVec::zero(d.rank(), Basis::Root);
            for k in 0..d.rank() {
                let w = d.fundamental_weight(k, Basis::Root);
                for (a, b) in sum.coords.iter_mut().zip(w.coords) {
                    *a += b;
                }
            }
            assert_eq!(rho, sum, "{s}");
            let rho_w = d.to_weight_basis(&rho).unwrap();
            assert_eq!(rho_w, WeightVec::from_ints(&vec![1; d.rank()], Basis::Weight));
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = datum("A2");
        let a = WeightVec::from_ints(&[0, 1], Basis::Root);
        assert_eq!(
            a2.reflect(0, &a).unwrap(),
            WeightVec::from_ints(&[1, 1], Basis::Root)
        );
        let g2 = datum("G2");
        let a1 = WeightVec::from_ints(&[1, 0], Basis::Root);
        assert_eq!(
            g2.reflect(1, &a1).unwrap(),
            WeightVec::from_ints(&[1, 3], Basis::Root)
        );
        for i in 0..2 {
            let mut e = vec![0; 2];
            e[i] = 1;
            let mut neg = vec![0; 2];
            neg[i] = -1;
            assert_eq!(
                g2.reflect(i, &WeightVec::from_ints(&e, Basis::Root)).unwrap(),
                WeightVec::from_ints(&neg, Basis::Root)
            );
        }
        let w = WeightVec::from_ints(&[1, 0], Basis::Weight);
        assert!(matches!(
            a2.reflect(0, &w),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn reflections_permute_positive_roots_other_than_simple() {
        for s in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let d = datum(s);
            let set: HashSet<&Vec<i64>> = d.positive_roots().iter().collect();
            for i in 0..d.rank() {
                for r in d.positive_roots() {
                    let is_simple = r.iter().sum::<i64>() == 1 && r[i] == 1;
                    if is_simple {
                        continue;
                    }
                    let img = d.reflect_ints(i, r);
                    assert!(set.contains(&img), "{s}: s_{i} {r:?} -> {img:?}");
                }
            }
        }
    }

    #[test]
    fn weyl_act_params_examples() {
        let a1 = datum("A1");
        assert_eq!(a1.weyl_act_params(0, &[0.7]), vec![-0.7]);
        let a2 = datum("A2");
        assert_eq!(a2.weyl_act_params(0, &[1.0, 0.0]), vec![-1.0, 1.0]);
        for s in ["B3", "G2", "F4"] {
            let d = datum(s);
            let z = vec![0.0; d.rank()];
            for i in 0..d.rank() {
                assert_eq!(d.weyl_act_params(i, &z), z);
            }
        }
        let t = vec![rat(1), rat(0)];
        assert_eq!(a2.weyl_act_params_exact(0, &t), vec![rat(-1), rat(1)]);
    }

    #[test]
    fn weyl_group_orders() {
        let expected = [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
        ];
        for (s, order) in expected {
            let w = enumerate_weyl(&datum(s), DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(w.len(), order, "{s}");
            let max_len = w.iter().map(|e| e.length()).max().unwrap();
            assert_eq!(max_len, datum(s).num_positive_roots());
        }
        assert_eq!(
            enumerate_weyl(&datum("F4"), 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
        assert!(enumerate_weyl(&datum("E7"), DEFAULT_WEYL_CAP).is_err());
    }

    #[test]
    fn weyl_elements_match_their_words() {
        let d = datum("B3");
        let w = enumerate_weyl(&d, DEFAULT_WEYL_CAP).unwrap();
        for e in &w {
            for j in 0..3 {
                let mut v = vec![0; 3];
                v[j] = 1;
                assert_eq!(e.apply(&v), d.apply_word_ints(&e.word.letters, &v));
            }
        }
    }

    #[test]
    fn longest_words() {
        let a1 = datum("A1");
        assert_eq!(a1.longest_word().letters, vec![0]);
        let a2 = datum("A2");
        let w0 = a2.longest_word();
        assert_eq!(w0.labels(&a2.lie_type()), vec![1, 2, 1]);
        assert!(a2.is_longest_word(&w0));
        let b2 = datum("B2");
        assert_eq!(b2.longest_word().len(), 4);
        for s in ["A4", "B3", "C3", "D4", "D5", "F4", "G2", "E6", "E7", "E8"] {
            let d = datum(s);
            let w0 = d.longest_word();
            assert!(d.is_longest_word(&w0), "{s}");
        }
        assert!(!a2.is_longest_word(&WeylWord::new(vec![0, 0, 1])));
        assert!(!a2.is_longest_word(&WeylWord::new(vec![0, 1])));
    }

    #[test]
    fn reduced_word_enumeration() {
        let count = |s: &str| datum(s).longest_reduced_words(usize::MAX).len();
        assert_eq!(count("A2"), 2);
        assert_eq!(count("B2"), 2);
        assert_eq!(count("G2"), 2);
        assert_eq!(count("A3"), 16);
        assert_eq!(count("B3"), 42);
        let d = datum("A3");
        for w in d.longest_reduced_words(usize::MAX) {
            assert!(d.is_longest_word(&w));
        }
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        for _ in 0..20 {
            let w = d.random_longest_word(&mut rng);
            assert!(d.is_longest_word(&w));
        }
    }

    #[test]
    fn diagram_involutions() {
        assert_eq!(datum("A1").diagram_involution(), vec![0]);
        assert_eq!(datum("A2").diagram_involution(), vec![1, 0]);
        assert_eq!(datum("A4").diagram_involution(), vec![3, 2, 1, 0]);
        assert_eq!(datum("B2").diagram_involution(), vec![0, 1]);
        assert_eq!(datum("D4").diagram_involution(), vec![0, 1, 2, 3]);
        assert_eq!(datum("D5").diagram_involution(), vec![1, 0, 2, 3, 4]);
        // E_6: chain 1..5 reversed, branch node fixed
        assert_eq!(datum("E6").diagram_involution(), vec![0, 5, 4, 3, 2, 1]);
        for s in ["B3", "C3", "F4", "G2", "E7", "E8"] {
            let d = datum(s);
            let sigma = d.diagram_involution();
            assert_eq!(sigma, (0..d.rank()).collect::<Vec<_>>(), "{s}");
        }
    }

    #[test]
    fn longest_element_matrix_is_minus_sigma() {
        for s in ["A3", "B2", "C3", "D4", "G2"] {
            let d = datum(s);
            let sigma = d.diagram_involution();
            let w = enumerate_weyl(&d, DEFAULT_WEYL_CAP).unwrap();
            let w0 = w.iter().max_by_key(|e| e.length()).unwrap();
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    let expected = if sigma[j] == i { -1 } else { 0 };
                    assert_eq!(w0.matrix[i][j], expected, "{s}");
                }
                assert_eq!(sigma[sigma[i]], i);
                assert_eq!(d.dsym()[i], d.dsym()[sigma[i]]);
            }
        }
    }

    #[test]
    fn bourbaki_labels() {
        let g2: LieType = "G2".parse().unwrap();
        assert_eq!(g2.bourbaki_node(0), 2);
        let e8: LieType = "E8".parse().unwrap();
        assert_eq!(
            (0..8).map(|i| e8.bourbaki_node(i)).collect::<Vec<_>>(),
            vec![2, 1, 3, 4, 5, 6, 7, 8]
        );
        let d4: LieType = "D4".parse().unwrap();
        assert_eq!(d4.index_of_label(3).unwrap(), 3);
        let b3: LieType = "B3".parse().unwrap();
        assert_eq!(b3.index_of_label(1).unwrap(), 0);
        assert!(b3.index_of_label(0).is_err());
    }
}
