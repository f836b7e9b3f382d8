//! Exact polynomial arithmetic: Laurent polynomials in `k_i = e^{2π t_i}`,
//! integer polynomials in the central characters, characteristic
//! polynomials and their discriminants.

pub mod discriminant;
pub mod laurent;
pub mod multi;
pub mod printed;
pub mod recipes;
pub mod uni;

pub use discriminant::{bareiss_det, discriminant, factor_check, resultant, sylvester, FactorReport};
pub use laurent::{
    laurent_character, laurent_from_weight_system, root_products, weight_system_denom, LaurentPoly,
};
pub use multi::{MultiPoly, ParseError};
pub use recipes::{
    builtin_recipe, char_poly, fundamental_characters, printed_poly, verify_coeff_identities,
    verify_coeff_identity, CharPolyRecipe, CoeffIdentity, RootSource,
};
pub use uni::{Ring, UniPoly};
