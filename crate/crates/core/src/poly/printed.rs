//! Polynomials and characters exactly as printed, with `X, Y, Z` standing
//! for `C_1, C_2, C_3`. Printed characters use `k_i = e^{2π t_i}` with the
//! opposite exponent sign to [`laurent_character`](super::laurent_character);
//! compare them after [`LaurentPoly::invert_vars`] when the character is not
//! inversion symmetric.

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::multi::MultiPoly;

fn p(nvars: usize, s: &str) -> MultiPoly {
    MultiPoly::parse(nvars, s).expect("built-in polynomial parses")
}

/// `Σ` over the given integer-exponent monomials and their inverses.
pub fn symmetric_sum(nvars: usize, constant: i64, monomials: &[&[i64]]) -> LaurentPoly {
    let mut acc = LaurentPoly::constant(nvars, BigInt::from(constant));
    for m in monomials {
        let mono = LaurentPoly::k_monomial(m);
        acc = acc.add(&mono).add(&mono.invert_vars());
    }
    acc
}

/// Cusp curve of A_2: `(XY+9)² - 4(X³+Y³+27)`.
pub fn a2_boundary() -> MultiPoly {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let xy9 = x.mul(&y).add(&MultiPoly::constant(2, 9));
    let cubes = x.pow(3).add(&y.pow(3)).add(&MultiPoly::constant(2, 27));
    xy9.pow(2).sub(&cubes.scale(&BigInt::from(4)))
}

/// Quartic discriminant of A_3, 16 terms.
pub fn a3_discriminant() -> MultiPoly {
    p(
        3,
        "256 - 27 X^4 + 144 X^2 Y - 128 Y^2 - 4 X^2 Y^3 + 16 Y^4 - 192 X Z
         + 18 X^3 Y Z - 80 X Y^2 Z - 6 X^2 Z^2 + 144 Y Z^2 + X^2 Y^2 Z^2
         - 4 Y^3 Z^2 - 4 X^3 Z^3 + 18 X Y Z^3 - 27 Z^4",
    )
}

/// B_2 short-root factor `C_1² - 4C_2 + 4`.
pub fn b2_d_s() -> MultiPoly {
    p(2, "X^2 - 4 Y + 4")
}

/// B_2 long-root factor as printed: `(C_2+3)² - 4C_2²`.
pub fn b2_d_l_printed() -> MultiPoly {
    let y3 = p(2, "Y + 3");
    y3.pow(2).sub(&p(2, "4 Y^2"))
}

/// B_2 long-root factor `(C_2+3)² - 4C_1²`, which vanishes at the cusp.
pub fn b2_d_l() -> MultiPoly {
    let y3 = p(2, "Y + 3");
    y3.pow(2).sub(&p(2, "4 X^2"))
}

/// The two B_2 boundary curves `X² = 4(Y-1)` and `2X = Y+3`.
pub fn b2_curves() -> (MultiPoly, MultiPoly) {
    (p(2, "X^2 - 4 Y + 4"), p(2, "2 X - Y - 3"))
}

/// B_2 `C_1` as printed, with the repeated `k_2` in the first term.
pub fn b2_c1_printed() -> LaurentPoly {
    [[0, 3], [0, 1], [0, -1], [-2, -1]]
        .iter()
        .fold(LaurentPoly::zero(2), |acc, e| acc.add(&LaurentPoly::k_monomial(e)))
}

/// B_2 `C_1` with the first term read as `k_1²k_2`.
pub fn b2_c1_corrected() -> LaurentPoly {
    symmetric_sum(2, 0, &[&[2, 1], &[0, 1]])
}

pub fn b2_c2_printed() -> LaurentPoly {
    symmetric_sum(2, 1, &[&[2, 2], &[2, 0]])
}

pub fn b3_d_s() -> MultiPoly {
    p(3, "X^2 - 4 Y + 4 Z - 8")
}

pub fn b3_d_l() -> MultiPoly {
    p(
        3,
        "36 + 40 X^2 - 27 X^4 - 132 Y + 90 X^2 Y - 47 Y^2 - 4 Y^3 - 36 Z
         + 78 X^2 Z - 162 Y Z + 18 X^2 Y Z - 26 Y^2 Z - 27 Z^2 - 6 X^2 Z^2
         - 36 Y Z^2 + Y^2 Z^2 + 18 Z^3 - 4 X^2 Z^3 + 6 Y Z^3 + 9 Z^4",
    )
}

pub fn b3_characters() -> [LaurentPoly; 3] {
    let c1 = symmetric_sum(3, 0, &[&[3, 2, 1], &[1, 2, 1], &[1, 0, 1], &[1, 0, -1]]);
    let c2 = symmetric_sum(
        3,
        3,
        &[
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[4, 2, 0],
            &[2, 2, 0],
            &[0, 2, 2],
            &[4, 2, 2],
            &[2, 2, 2],
            &[4, 4, 2],
        ],
    );
    let c3 = symmetric_sum(3, 1, &[&[2, 0, 0], &[2, 2, 0], &[2, 2, 2]]);
    [c1, c2, c3]
}

/// C_3 characters as printed; their values at `k = 1` are `(8, 21, 6)`.
pub fn c3_characters() -> [LaurentPoly; 3] {
    let c1 = symmetric_sum(3, 0, &[&[5, 4, 0], &[1, 4, 2], &[1, 0, 2], &[1, 0, -2]]);
    let c2 = symmetric_sum(
        3,
        3,
        &[
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[2, 2, 0],
            &[2, 4, 0],
            &[2, 2, 2],
            &[2, 4, 2],
            &[2, 4, 4],
            &[0, 2, 2],
        ],
    );
    let c3 = symmetric_sum(3, 0, &[&[1, 0, 0], &[1, 2, 0], &[1, 2, 2]]);
    [c1, c2, c3]
}

/// Roots of the printed C_3 sextic.
pub fn c3_roots() -> Vec<LaurentPoly> {
    let mut roots = Vec::new();
    for e in [[2, 0, 0], [1, 2, 0], [1, 2, 2]] {
        let m = LaurentPoly::k_monomial(&e);
        roots.push(m.invert_vars());
        roots.push(m);
    }
    roots
}

/// Printed C_3 sextic coefficients, `x^0` first.
pub fn c3_coefficients() -> Vec<MultiPoly> {
    let c = [
        "1",
        "Z",
        "Z^2 - Y",
        "X + 2 Z",
        "Z^2 - Y",
        "Z",
        "1",
    ];
    c.iter().map(|s| p(3, s)).collect()
}

/// C_3 long-root factor `X² - (2(Z-1)² - 2Y)²`.
pub fn c3_d_l() -> MultiPoly {
    let z1 = p(3, "Z - 1");
    let inner = z1.pow(2).scale(&BigInt::from(2)).sub(&p(3, "2 Y"));
    p(3, "X^2").sub(&inner.pow(2))
}

pub fn c3_d_s() -> MultiPoly {
    p(
        3,
        "108 - 27 X^2 + 108 Y + 36 Y^2 + 4 Y^3 - 54 X Z - 18 X Y Z - 99 Z^2
         - 66 Y Z^2 - 11 Y^2 Z^2 + 14 X Z^3 + 30 Z^4 + 10 Y Z^4 - 3 Z^6",
    )
}

/// G_2 factors as printed, with `X = C_1` (14-dim) and `Y = C_2` (7-dim).
pub fn g2_d_s_printed() -> MultiPoly {
    p(2, "4 Y + 8").sub(&p(2, "X + 1").pow(2))
}

pub fn g2_d_l_printed() -> MultiPoly {
    p(2, "4 X^3 - X^2 - Y^2 - 10 X Y - 2 X - 10 Y + 7")
}

/// The printed G_2 factors with `X` and `Y` exchanged, the reading under
/// which they divide the discriminant of the printed cubic.
pub fn g2_d_s() -> MultiPoly {
    g2_d_s_printed().permute_vars(&[1, 0])
}

pub fn g2_d_l() -> MultiPoly {
    g2_d_l_printed().permute_vars(&[1, 0])
}

pub fn g2_characters() -> [LaurentPoly; 2] {
    let c2 = symmetric_sum(2, 1, &[&[2, 1], &[1, 1], &[1, 0]]);
    let c1 = symmetric_sum(2, 1, &[&[3, 2], &[3, 1], &[0, 1]]).add(&c2);
    [c1, c2]
}

/// D_4 characters in node order `0, 1, 2, 3`.
pub fn d4_characters() -> [LaurentPoly; 4] {
    let c0 = symmetric_sum(4, 0, &[&[2, 1, 2, 1], &[0, 1, 2, 1], &[0, 1, 0, 1], &[0, -1, 0, 1]]);
    let c1 = symmetric_sum(4, 0, &[&[1, 2, 2, 1], &[1, 0, 2, 1], &[1, 0, 0, 1], &[-1, 0, 0, 1]]);
    let c3 = symmetric_sum(4, 0, &[&[1, 1, 2, 2], &[1, 1, 2, 0], &[1, 1, 0, 0], &[-1, 1, 0, 0]]);
    let c2 = symmetric_sum(
        4,
        4,
        &[
            &[2, 0, 0, 0],
            &[0, 2, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, 2],
            &[2, 0, 2, 0],
            &[0, 2, 2, 0],
            &[0, 0, 2, 2],
            &[2, 2, 2, 0],
            &[2, 0, 2, 2],
            &[0, 2, 2, 2],
            &[2, 2, 2, 2],
            &[2, 2, 4, 2],
        ],
    );
    [c0, c1, c2, c3]
}

/// A_2 characters: `k^{4/3}`-type exponents, so denominator 3.
pub fn a2_characters() -> [LaurentPoly; 2] {
    let m = |e: [i64; 2]| LaurentPoly::monomial(&e, 3, BigInt::from(1));
    let c1 = m([4, 2]).add(&m([-2, 2])).add(&m([-2, -4]));
    let c2 = m([2, 4]).add(&m([2, -2])).add(&m([-4, -2]));
    [c1, c2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn cusp_values() {
        let at = |q: &MultiPoly, v: &[i64]| {
            q.eval_int(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
        };
        assert!(at(&a2_boundary(), &[3, 3]).is_zero());
        assert!(at(&a3_discriminant(), &[4, 6, 4]).is_zero());
        assert!(at(&b2_d_s(), &[4, 5]).is_zero());
        assert!(at(&b2_d_l(), &[4, 5]).is_zero());
        assert_eq!(at(&b2_d_l_printed(), &[4, 5]), BigInt::from(-36));
        assert!(at(&b3_d_s(), &[8, 21, 7]).is_zero());
        assert!(at(&b3_d_l(), &[8, 21, 7]).is_zero());
        assert!(at(&g2_d_s(), &[14, 7]).is_zero());
        assert!(at(&g2_d_l(), &[14, 7]).is_zero());
        assert!(!at(&g2_d_s_printed(), &[14, 7]).is_zero());
    }

    #[test]
    fn term_counts() {
        assert_eq!(a3_discriminant().num_terms(), 16);
        assert_eq!(b3_d_l().num_terms(), 20);
        assert_eq!(c3_d_s().num_terms(), 14);
        assert_eq!(c3_coefficients().len(), 7);
    }

    #[test]
    fn printed_dimensions() {
        let dims = |cs: &[LaurentPoly]| cs.iter().map(|c| c.at_one()).collect::<Vec<_>>();
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(dims(&b3_characters()), v(&[8, 21, 7]));
        assert_eq!(dims(&c3_characters()), v(&[8, 21, 6]));
        assert_eq!(dims(&g2_characters()), v(&[14, 7]));
        assert_eq!(dims(&d4_characters()), v(&[8, 8, 28, 8]));
        assert_eq!(dims(&a2_characters()), v(&[3, 3]));
        assert_eq!(b2_c1_printed().at_one(), BigInt::from(4));
        assert_eq!(b2_c2_printed().at_one(), BigInt::from(5));
    }
}
