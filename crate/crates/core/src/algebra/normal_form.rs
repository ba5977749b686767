//! Normal forms modulo the principal ideal `<y^2 - f>`.
//!
//! `y^2 - f` is a Gröbner basis of its ideal under both lexicographic
//! orders, so the remainders are unique. `nf1` lands in `{b0(x) + b1(x) y}`
//! and `nf2` in polynomials of x-degree below `deg f`. Both are computed by
//! direct rewriting (`y^2 -> f`, resp. `x^n -> y^2 - (f - x^n)`) instead of
//! the generic division loop; the tests check the two agree.

use super::bipoly::{BiPoly, Monomial};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// `f` must be monic of odd degree at least 3.
pub fn check_curve_poly(f: &UniPoly) -> Result<usize> {
    match f.degree() {
        Some(d) if d >= 3 && d % 2 == 1 && f.is_monic() => Ok(d),
        _ => Err(Error::InvalidCurvePoly),
    }
}

/// Remainder of `g` under `lex(y>x)` division by `y^2 - f`, as the pair
/// `(b0, b1)` with `g = b0 + b1 y` on the curve.
pub fn nf1_parts(g: &BiPoly, f: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    check_curve_poly(f)?;
    let rows = g.y_coeffs();
    // Horner in y^2 = f over the even and the odd rows
    let mut even = UniPoly::zero();
    let mut odd = UniPoly::zero();
    for (j, row) in rows.iter().enumerate().rev() {
        if j % 2 == 0 {
            even = &(&even * f) + row;
        } else {
            odd = &(&odd * f) + row;
        }
    }
    Ok((even, odd))
}

pub fn nf1(g: &BiPoly, f: &UniPoly) -> Result<BiPoly> {
    let (b0, b1) = nf1_parts(g, f)?;
    Ok(BiPoly::from_rep(&b0, &b1))
}

pub fn nf2(g: &BiPoly, f: &UniPoly) -> Result<BiPoly> {
    let n = check_curve_poly(f)? as u32;
    // x^n = y^2 - tail(x)
    let tail = f - &UniPoly::monomial(f.leading_coeff(), n as usize);
    let replacement = &BiPoly::term(f.leading_coeff(), 0, 2) - &BiPoly::from_uni_x(&tail);
    let mut rows = g.x_coeffs();
    for i in (n as usize..rows.len()).rev() {
        let row = std::mem::replace(&mut rows[i], UniPoly::zero());
        if row.is_zero() {
            continue;
        }
        // row(y) * x^(i-n) * replacement
        let add = &BiPoly::from_uni_y(&row) * &replacement;
        for (m, c) in add.terms() {
            let target = m.x as usize + i - n as usize;
            let piece = UniPoly::monomial(c.clone(), m.y as usize);
            rows[target] = &rows[target] + &piece;
        }
    }
    Ok(BiPoly::from_terms(rows.iter().enumerate().take(n as usize).flat_map(
        |(i, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(j, c)| (Monomial::new(i as u32, j as u32), c.clone()))
        },
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::division::divmod_multi;
    use crate::algebra::order::MonomialOrder;
    use crate::algebra::parse::parse_xy;

    fn p(s: &str) -> BiPoly {
        parse_xy(s).unwrap()
    }

    fn f(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn nf1_examples() {
        let fx = f(&[1, -3, 0, 1]);
        let rel = BiPoly::curve_relation(&fx);
        assert!(nf1(&rel, &fx).unwrap().is_zero());
        assert_eq!(
            nf1(&p("y^3"), &fx).unwrap(),
            &BiPoly::from_uni_x(&fx) * &BiPoly::y()
        );
        let e4 = f(&[0, 4, -3, 1]);
        assert_eq!(
            nf1(&p("(y - x)^2"), &e4).unwrap(),
            p("x^3 - 2*x^2 + 4*x - 2*x*y")
        );
    }

    #[test]
    fn nf2_examples() {
        let e6 = UniPoly::new(vec![
            crate::algebra::rat(1),
            crate::algebra::rat(-3),
            crate::algebra::ratio(1, 4),
            crate::algebra::rat(1),
        ]);
        assert_eq!(nf2(&p("y"), &e6).unwrap(), p("y"));
        assert_eq!(nf2(&p("x^3"), &e6).unwrap(), p("y^2 - 1/4*x^2 + 3*x - 1"));
        let e2 = f(&[0, -1, 0, 1]);
        assert_eq!(
            nf2(&p("x^3 - x^2 + x - 1 + 2*(x - 1)*y"), &e2).unwrap(),
            p("y^2 + 2*x*y - x^2 - 2*y + 2*x - 1")
        );
    }

    #[test]
    fn rejects_bad_curve_polys() {
        assert_eq!(nf1(&p("y"), &f(&[1, 0, 2])), Err(Error::InvalidCurvePoly));
        assert_eq!(nf2(&p("y"), &f(&[1, 0, 0, 2])), Err(Error::InvalidCurvePoly));
        assert_eq!(nf1(&p("y"), &f(&[1, 0, 0, 0, 1])), Err(Error::InvalidCurvePoly));
    }

    #[test]
    fn agrees_with_generic_division_in_genus_two() {
        let quintic = f(&[3, 0, -1, 2, 0, 1]);
        let rel = BiPoly::curve_relation(&quintic);
        let g = p("x^7*y^3 - 2*x^5*y^4 + y^5 + 3*x*y^2 - 11");
        let (_, r1) = divmod_multi(&g, std::slice::from_ref(&rel), MonomialOrder::LexYoverX);
        let (_, r2) = divmod_multi(&g, std::slice::from_ref(&rel), MonomialOrder::LexXoverY);
        assert_eq!(nf1(&g, &quintic).unwrap(), r1);
        assert_eq!(nf2(&g, &quintic).unwrap(), r2);
        assert!(nf2(&g, &quintic).unwrap().degree_x().unwrap() <= 4);
    }
}
