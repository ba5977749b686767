//! Multivariate division with remainder and exact division.

use super::bipoly::BiPoly;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Divides `g` by `divisors` under `order`. Returns quotients `q_i` and the
/// remainder `r` with `g = sum q_i d_i + r`, where no term of `r` is
/// divisible by any leading term. Divisors are tried in sequence order.
///
/// Panics if `divisors` is empty or contains zero.
pub fn divmod_multi(g: &BiPoly, divisors: &[BiPoly], order: MonomialOrder) -> (Vec<BiPoly>, BiPoly) {
    assert!(!divisors.is_empty(), "divmod_multi needs at least one divisor");
    let leads: Vec<_> = divisors
        .iter()
        .map(|d| d.leading(order).expect("nonzero divisor"))
        .collect();
    let mut quotients = vec![BiPoly::zero(); divisors.len()];
    let mut remainder = BiPoly::zero();
    let mut p = g.clone();
    while let Some((lm, lc)) = p.leading(order) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (dm, dc))| dm.quotient_of(&lm).map(|q| (i, q, &lc / dc)));
        match hit {
            Some((i, qm, qc)) => {
                quotients[i].add_term(qm, qc.clone());
                p = &p - &divisors[i].mul_term(&qm, &qc);
            }
            None => {
                remainder.add_term(lm, lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    (quotients, remainder)
}

/// `g / h` when `h` divides `g` exactly.
pub fn exact_divide(g: &BiPoly, h: &BiPoly) -> Result<BiPoly> {
    if h.is_zero() {
        return Err(Error::InvalidParameter("division by the zero polynomial".into()));
    }
    let (q, r) = divmod_multi(g, std::slice::from_ref(h), MonomialOrder::LexYoverX);
    if r.is_zero() {
        Ok(q.into_iter().next().expect("one quotient"))
    } else {
        Err(Error::NotDivisible { remainder: Box::new(r) })
    }
}

/// True if every coefficient of `p` is zero after reduction by `divisors`.
pub fn reduces_to_zero(p: &BiPoly, divisors: &[BiPoly], order: MonomialOrder) -> bool {
    divmod_multi(p, divisors, order).1.is_zero()
}
