use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::format::{monomial_string, write_terms};
use super::order::MonomialOrder;
use super::rational::{primitive_scale, rat, Rational};
use super::unipoly::{forward_owned, UniPoly};

/// `x^x * y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `other / self`, if `self` divides it.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial::new(other.x - self.x, other.y - self.y))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    /// Printing order: total degree descending, then x-degree descending.
    pub fn print_cmp(&self, other: &Monomial) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(other.x.cmp(&self.x))
    }
}

/// Sparse polynomial in `x, y` over the rationals. No zero coefficient is
/// ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(i, j), c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Embeds `u(x)`.
    pub fn from_uni_x(u: &UniPoly) -> Self {
        Self::from_terms(
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(i as u32, 0), c.clone())),
        )
    }

    /// Embeds `u(y)`.
    pub fn from_uni_y(u: &UniPoly) -> Self {
        Self::from_terms(
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| (Monomial::new(0, j as u32), c.clone())),
        )
    }

    /// `b0(x) + b1(x) y`.
    pub fn from_rep(b0: &UniPoly, b1: &UniPoly) -> Self {
        &Self::from_uni_x(b0) + &(&Self::from_uni_x(b1) * &Self::y())
    }

    /// `y^2 - f(x)`.
    pub fn curve_relation(f: &UniPoly) -> Self {
        &Self::term(Rational::one(), 0, 2) - &Self::from_uni_x(f)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.y_coeffs().iter().enumerate() {
            let mut yp = Rational::one();
            for _ in 0..i {
                yp *= y;
            }
            acc += row.eval(x) * yp;
        }
        acc
    }

    /// Coefficients with respect to `y`: entry `j` is the coefficient of
    /// `y^j` as a polynomial in `x`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut rows = vec![Vec::new(); dy as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut rows[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, Rational::zero());
            }
            row[m.x as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::new).collect()
    }

    /// Coefficients with respect to `x`: entry `i` is the coefficient of
    /// `x^i` as a polynomial in `y`.
    pub fn x_coeffs(&self) -> Vec<UniPoly> {
        self.swap_xy().y_coeffs()
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a constant for `x`, giving a polynomial in `y`.
    pub fn eval_x(&self, x0: &Rational) -> UniPoly {
        let mut out = UniPoly::zero();
        for (j, row) in self.y_coeffs().iter().enumerate() {
            out = &out + &UniPoly::monomial(row.eval(x0), j);
        }
        out
    }

    pub fn diff_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Monomial::new(m.x - 1, m.y), c * rat(m.x as i64))),
        )
    }

    pub fn diff_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c * rat(m.y as i64))),
        )
    }

    /// Scalar multiple with coprime integer coefficients whose largest
    /// monomial under `lex(y>x)` has a positive coefficient. Two
    /// polynomials agree up to a nonzero constant iff their canonical forms
    /// are equal.
    pub fn canonical(&self) -> Self {
        self.scale(&self.canonical_scale())
    }

    /// The scalar `canonical()` multiplies by (1 for zero).
    pub fn canonical_scale(&self) -> Rational {
        let Some((_, lc)) = self.leading(MonomialOrder::LexYoverX) else {
            return Rational::one();
        };
        let s = primitive_scale(self.terms.values());
        if lc.is_negative() {
            -s
        } else {
            s
        }
    }

    /// `Some(c)` with `self = c * other`, when the two are proportional.
    pub fn proportional_factor(&self, other: &Self) -> Option<Rational> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then(Rational::one);
        }
        let (m, c_self) = self.leading(MonomialOrder::LexYoverX)?;
        let c_other = other.terms.get(&m)?;
        let factor = c_self / c_other;
        (other.scale(&factor) == *self).then_some(factor)
    }

    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        self.proportional_factor(other).is_some()
    }

    /// Terms in printing order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| a.0.print_cmp(&b.0));
        v
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.sorted_terms()
                .into_iter()
                .map(|(m, c)| (c, monomial_string(&["x", "y"], &[m.x, m.y]))),
        )
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn display_orders_by_total_then_x_degree() {
        let p = &(&BiPoly::x().pow(2) + &BiPoly::y().pow(2)) - &(&BiPoly::x() * &BiPoly::y());
        assert_eq!(p.to_string(), "x^2 - x*y + y^2");
        let q = &BiPoly::term(ratio(-3, 4), 1, 0) + &BiPoly::constant(rat(1));
        assert_eq!(q.to_string(), "-3/4*x + 1");
    }

    #[test]
    fn canonical_form_is_scale_invariant() {
        let p = &BiPoly::term(ratio(1, 2), 2, 0) - &BiPoly::term(ratio(3, 4), 0, 1);
        let c = p.canonical();
        // leading monomial under lex(y>x) is y
        assert_eq!(c.coeff(0, 1), rat(3));
        assert_eq!(c.coeff(2, 0), rat(-2));
        assert_eq!(p.scale(&ratio(-7, 3)).canonical(), c);
        assert!(p.equal_up_to_scalar(&c));
    }

    #[test]
    fn y_coeff_rows() {
        let p = &BiPoly::from_rep(&UniPoly::from_i64(&[1, 2]), &UniPoly::from_i64(&[0, 0, 3]))
            + &BiPoly::term(rat(5), 1, 3);
        let rows = p.y_coeffs();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[1], UniPoly::from_i64(&[0, 0, 3]));
        assert!(rows[2].is_zero());
        assert_eq!(p.eval(&rat(1), &rat(2)), rat(1 + 2 + 3 * 2 + 5 * 8));
    }
}
