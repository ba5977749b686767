use super::bipoly::BiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Determinant of a square matrix over `Q[x]` by fraction-free (Bareiss)
/// elimination.
pub fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign_negative = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UniPoly::zero();
            };
            m.swap(k, swap);
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_negative {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of two polynomials given by coefficient lists (index =
/// degree), entries in `Q[x]`.
pub fn sylvester(a: &[UniPoly], b: &[UniPoly]) -> Vec<Vec<UniPoly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant with respect to `y`, a polynomial in `x`.
///
/// When exactly one argument is constant in `y`, say `g` with
/// `deg_y h = n`, the result is `g^n` (the Sylvester matrix degenerates to
/// `n` copies of `g` on the diagonal).
pub fn resultant_y(g: &BiPoly, h: &BiPoly) -> Result<UniPoly> {
    let a = g.y_coeffs();
    let b = h.y_coeffs();
    let da = a.len().saturating_sub(1);
    let db = b.len().saturating_sub(1);
    if a.is_empty() || b.is_empty() {
        // a zero polynomial shares every root
        return Ok(UniPoly::zero());
    }
    if da == 0 && db == 0 {
        return Err(Error::BothConstantInY);
    }
    if da == 0 {
        return Ok(a[0].pow(db as u32));
    }
    if db == 0 {
        return Ok(b[0].pow(da as u32));
    }
    Ok(bareiss_det(sylvester(&a, &b)))
}

/// Resultant with respect to `x`, as a polynomial in `y`.
pub fn resultant_x(g: &BiPoly, h: &BiPoly) -> Result<UniPoly> {
    resultant_y(&g.swap_xy(), &h.swap_xy())
}
