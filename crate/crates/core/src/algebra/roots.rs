//! Exact rational root finding via Sturm sequences.
//!
//! Each real root is isolated in an interval narrower than `1/lc^2`; a
//! rational root `p/q` must have `q | lc`, so it is then the simplest
//! rational in its interval and a single exact evaluation decides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{primitive_scale, rat, Rational};
use super::unipoly::UniPoly;

fn positive_primitive(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.scale(&primitive_scale(p.coeffs().iter()).abs())
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![positive_primitive(p), positive_primitive(&p.derivative())];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(positive_primitive(&-r));
    }
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for s in seq {
        let v = s.eval(x);
        let sg = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if sg != 0 {
            if last != 0 && sg != last {
                changes += 1;
            }
            last = sg;
        }
    }
    changes
}

/// Simplest rational (least denominator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    if !lo.is_positive() {
        return Rational::zero();
    }
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let fl = lo.floor();
    let inner = simplest_between(
        &(Rational::one() / (hi - &fl)),
        &(Rational::one() / (lo - &fl)),
    );
    fl + Rational::one() / inner
}

/// Rational roots of a square-free polynomial with integer coefficients.
pub fn rational_roots_squarefree(p: &UniPoly) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-p.coeff(0) / p.coeff(1)];
    }
    let lc = p.leading_coeff();
    let lc_int: BigInt = lc.numer().abs().div_floor(lc.denom());
    let lc_int = if lc_int.is_zero() { BigInt::one() } else { lc_int };
    let width_bound = Rational::new(BigInt::one(), &lc_int * &lc_int * 2);

    let bound = p
        .coeffs()
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(Rational::zero(), |acc, v| if v > acc { v } else { acc })
        + rat(2);
    let seq = sturm_sequence(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let count = sign_changes(&seq, &a) - sign_changes(&seq, &b);
        if count == 0 {
            continue;
        }
        if count == 1 && (&b - &a) < width_bound {
            if p.eval(&b).is_zero() {
                out.push(b);
                continue;
            }
            let s = simplest_between(&a, &b);
            if s != a && p.eval(&s).is_zero() {
                out.push(s);
            }
            continue;
        }
        let mut mid = (&a + &b) / rat(2);
        if p.eval(&mid).is_zero() {
            // nudge the split point off the root; the root stays in (a, mid]
            let mut delta = (&b - &a) / rat(8);
            loop {
                let m2 = &mid + &delta;
                if !p.eval(&m2).is_zero()
                    && sign_changes(&seq, &mid) == sign_changes(&seq, &m2)
                {
                    mid = m2;
                    break;
                }
                delta /= rat(2);
            }
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort();
    out.dedup();
    out
}
