//! Characteristic polynomials `P(x) = ∏(x + r_j)` built from weights of one
//! fundamental representation, and the identities expressing their
//! coefficients through the central characters.

use num_bigint::BigInt;
use serde::Serialize;

use super::laurent::{laurent_character, LaurentPoly};
use super::multi::MultiPoly;
use super::printed;
use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::repweights::{fundamental_dim, fundamental_rep, DEFAULT_DIM_BOUND};
use crate::rootdata::{Family, LieType, RootDatum};

/// How the roots `r_j` are taken from the weights of a representation.
#[derive(Debug, Clone, PartialEq)]
pub enum RootSource {
    /// Every weight monomial, with multiplicity.
    AllWeights,
    /// Every nonzero weight monomial.
    NonzeroWeights,
    /// `r + r^{-1}` for each pair `±μ` of nonzero weights.
    SymmetrizedPairs,
    /// Explicit roots.
    Given(Vec<LaurentPoly>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyRecipe {
    pub lie_type: LieType,
    /// Node index of the representation supplying the roots.
    pub node: usize,
    pub source: RootSource,
    /// Claimed coefficient of `x^j` as a polynomial in the characters,
    /// `x^0` first. Variable `i` stands for the character of node index `i`.
    pub coefficients: Vec<MultiPoly>,
}

fn p(nvars: usize, s: &str) -> MultiPoly {
    MultiPoly::parse(nvars, s).expect("built-in polynomial parses")
}

/// Built-in recipe for `A_n`, `B_3`, `C_3`, `D_4` and `G_2`.
pub fn builtin_recipe(t: LieType) -> Result<CharPolyRecipe> {
    let n = t.rank();
    let recipe = match (t.family(), n) {
        (Family::A, _) => {
            let mut coefficients = vec![MultiPoly::one(n)];
            for k in (0..n).rev() {
                coefficients.push(MultiPoly::var(n, k));
            }
            coefficients.push(MultiPoly::one(n));
            CharPolyRecipe {
                lie_type: t,
                node: 0,
                source: RootSource::AllWeights,
                coefficients,
            }
        }
        (Family::B, 3) => {
            let c = ["1", "Z - 1", "Y - Z + 1", "X^2 - 2 Y - 2", "Y - Z + 1", "Z - 1", "1"];
            CharPolyRecipe {
                lie_type: t,
                node: 2,
                source: RootSource::NonzeroWeights,
                coefficients: c.iter().map(|s| p(3, s)).collect(),
            }
        }
        (Family::C, 3) => CharPolyRecipe {
            lie_type: t,
            node: 2,
            source: RootSource::Given(printed::c3_roots()),
            coefficients: printed::c3_coefficients(),
        },
        (Family::D, 4) => {
            let c = [
                "X2^2 + X4^2 - 4 X3",
                "X2 X4 - 4 X1",
                "X3 - 4",
                "X1",
                "1",
            ];
            CharPolyRecipe {
                lie_type: t,
                node: 0,
                source: RootSource::SymmetrizedPairs,
                coefficients: c.iter().map(|s| p(4, s)).collect(),
            }
        }
        (Family::G, 2) => {
            let y1 = p(2, "Y - 1");
            let c0 = y1.pow(2).sub(&p(2, "2 X"));
            CharPolyRecipe {
                lie_type: t,
                node: 1,
                source: RootSource::SymmetrizedPairs,
                coefficients: vec![c0, p(2, "X - 2"), y1, MultiPoly::one(2)],
            }
        }
        _ => return Err(Error::UnsupportedType(t.to_string())),
    };
    Ok(recipe)
}

/// Laurent characters of all fundamental representations, in node order.
pub fn fundamental_characters(d: &RootDatum) -> Result<Vec<LaurentPoly>> {
    (0..d.rank())
        .map(|k| {
            let ws = fundamental_rep(d, k, DEFAULT_DIM_BOUND)?;
            Ok(laurent_character(d, &ws))
        })
        .collect()
}

/// Roots `r_j` of the recipe's polynomial.
pub fn recipe_roots(d: &RootDatum, recipe: &CharPolyRecipe) -> Result<Vec<LaurentPoly>> {
    if let RootSource::Given(roots) = &recipe.source {
        return Ok(roots.clone());
    }
    let ws = fundamental_rep(d, recipe.node, DEFAULT_DIM_BOUND)?;
    let ch = laurent_character(d, &ws);
    let denom = ch.denom();
    let mut roots = Vec::new();
    for (e, m) in ch.terms() {
        let zero = e.iter().all(|&x| x == 0);
        let mono = LaurentPoly::monomial(e, denom, BigInt::from(1));
        let count: usize = m.try_into().map_err(|_| Error::Overflow)?;
        let root = match &recipe.source {
            RootSource::AllWeights => Some(mono),
            RootSource::NonzeroWeights => (!zero).then_some(mono),
            RootSource::SymmetrizedPairs => {
                let neg: Vec<i64> = e.iter().map(|x| -x).collect();
                (!zero && *e > neg).then(|| mono.add(&mono.invert_vars()))
            }
            RootSource::Given(_) => unreachable!(),
        };
        if let Some(r) = root {
            roots.extend(std::iter::repeat_n(r, count));
        }
    }
    Ok(roots)
}

/// `∏ (x + r_j)` expanded exactly.
pub fn char_poly(d: &RootDatum, recipe: &CharPolyRecipe) -> Result<UniPoly<LaurentPoly>> {
    let roots = recipe_roots(d, recipe)?;
    Ok(UniPoly::from_roots_plus(&roots, &LaurentPoly::one(d.rank())))
}

/// The recipe's polynomial with coefficients in `X_i = C_i`.
pub fn printed_poly(recipe: &CharPolyRecipe) -> UniPoly<MultiPoly> {
    UniPoly::new(recipe.coefficients.clone())
}

/// Comparison of one expanded coefficient against its claimed expression.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffIdentity {
    pub lie_type: String,
    pub power: usize,
    pub claimed: String,
    /// Exact Laurent equality.
    pub exact: bool,
    /// Equality of the values at `k_i = 1`.
    pub anchor: bool,
    pub expanded_at_one: String,
    pub claimed_at_one: String,
    /// Terms of `expanded - claimed`, when nonzero.
    pub difference_terms: usize,
}

impl CoeffIdentity {
    pub fn holds(&self) -> bool {
        self.exact && self.anchor
    }
}

/// Compares coefficients of an expanded polynomial with claimed expressions
/// in the given characters.
pub fn compare_coefficients(
    lie_type: LieType,
    expanded: &UniPoly<LaurentPoly>,
    claimed: &[MultiPoly],
    characters: &[LaurentPoly],
) -> Vec<CoeffIdentity> {
    let nk = characters.first().map(|c| c.nvars()).unwrap_or(0);
    let dims: Vec<BigInt> = characters.iter().map(|c| c.at_one()).collect();
    claimed
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let lhs = expanded
                .coeff(j)
                .cloned()
                .unwrap_or_else(|| LaurentPoly::zero(nk));
            let rhs = c.substitute(characters);
            let diff = lhs.sub(&rhs);
            let lhs_one = lhs.at_one();
            let rhs_one = c.eval_int(&dims);
            CoeffIdentity {
                lie_type: lie_type.to_string(),
                power: j,
                claimed: c.to_string(),
                exact: diff.is_zero(),
                anchor: lhs_one == rhs_one,
                expanded_at_one: lhs_one.to_string(),
                claimed_at_one: rhs_one.to_string(),
                difference_terms: diff.num_terms(),
            }
        })
        .collect()
}

/// Checks every coefficient of the built-in recipe for `d` against the
/// computed characters.
pub fn verify_coeff_identities(d: &RootDatum) -> Result<Vec<CoeffIdentity>> {
    let recipe = builtin_recipe(d.lie_type())?;
    let expanded = char_poly(d, &recipe)?;
    let chars = fundamental_characters(d)?;
    if expanded.degree() != Some(recipe.coefficients.len() - 1) {
        return Err(Error::UnsupportedType(d.lie_type().to_string()));
    }
    Ok(compare_coefficients(
        d.lie_type(),
        &expanded,
        &recipe.coefficients,
        &chars,
    ))
}

/// Single-coefficient form of [`verify_coeff_identities`].
pub fn verify_coeff_identity(d: &RootDatum, power: usize) -> Result<CoeffIdentity> {
    verify_coeff_identities(d)?
        .into_iter()
        .nth(power)
        .ok_or(Error::DegreeTooLow(power))
}

/// Fundamental dimensions as big integers, for anchoring at `k = 1`.
pub fn dims_big(d: &RootDatum) -> Vec<BigInt> {
    (0..d.rank())
        .map(|k| BigInt::from(fundamental_dim(d, k)))
        .collect()
}
