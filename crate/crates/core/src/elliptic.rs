//! Elliptic curves `y^2 = x^3 + a x^2 + b x + c` over the rationals and the
//! chord-tangent group law with the point at infinity as zero.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{rat, BiPoly, Rational, UniPoly};
use crate::error::{Error, Result};

pub const DEFAULT_TORSION_BOUND: u64 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    a: Rational,
    b: Rational,
    c: Rational,
    f: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EPoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            EPoint::Infinity => None,
            EPoint::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn x(&self) -> Result<&Rational> {
        self.coords().map(|(x, _)| x).ok_or(Error::InfinityPoint)
    }

    pub fn y(&self) -> Result<&Rational> {
        self.coords().map(|(_, y)| y).ok_or(Error::InfinityPoint)
    }
}

impl fmt::Display for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EPoint::Infinity => write!(f, "O"),
            EPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl EllipticCurve {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let f = UniPoly::new(vec![c.clone(), b.clone(), a.clone(), rat(1)]);
        let curve = EllipticCurve { a, b, c, f };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// From a monic cubic `f`.
    pub fn from_poly(f: &UniPoly) -> Result<Self> {
        if f.degree() != Some(3) || !f.is_monic() {
            return Err(Error::InvalidCurvePoly);
        }
        EllipticCurve::new(f.coeff(2), f.coeff(1), f.coeff(0))
    }

    pub fn coefficients(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c)
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    /// `y^2 - f(x)`.
    pub fn relation(&self) -> BiPoly {
        BiPoly::curve_relation(&self.f)
    }

    /// Discriminant of the cubic `f`.
    pub fn discriminant(&self) -> Rational {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let a2 = a * a;
        let b2 = b * b;
        &a2 * &b2 - rat(4) * &b2 * b - rat(4) * &a2 * a * c - rat(27) * c * c
            + rat(18) * a * b * c
    }

    pub fn contains(&self, p: &EPoint) -> bool {
        match p {
            EPoint::Infinity => true,
            EPoint::Affine { x, y } => y * y == self.f.eval(x),
        }
    }

    /// Checked constructor for affine points.
    pub fn point(&self, x: Rational, y: Rational) -> Result<EPoint> {
        let p = EPoint::affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            let (x, y) = p.coords().expect("affine");
            Err(Error::PointNotOnCurve {
                point: format!("({x}, {y})"),
            })
        }
    }

    fn check(&self, p: &EPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    pub fn neg(&self, p: &EPoint) -> EPoint {
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine { x, y } => EPoint::affine(x.clone(), -y.clone()),
        }
    }

    pub fn add(&self, p: &EPoint, q: &EPoint) -> Result<EPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &EPoint, q: &EPoint) -> EPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EPoint::Infinity, _) => return q.clone(),
            (_, EPoint::Infinity) => return p.clone(),
            (EPoint::Affine { x: x1, y: y1 }, EPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return EPoint::Infinity;
            }
            self.f.derivative().eval(x1) / (rat(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - &self.a - x1 - x2;
        let y3 = &lambda * (x1 - &x3) - y1;
        EPoint::affine(x3, y3)
    }

    pub fn scalar_mul(&self, k: i64, p: &EPoint) -> Result<EPoint> {
        self.check(p)?;
        let base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = EPoint::Infinity;
        let mut run = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &run);
            }
            run = self.add_unchecked(&run, &run);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Least `k <= bound` with `[k]P = O`, or `None` when `P` is not torsion
    /// within the bound.
    pub fn order_of(&self, p: &EPoint, bound: u64) -> Result<Option<u64>> {
        self.check(p)?;
        let mut acc = p.clone();
        for k in 1..=bound {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }

    /// Errors unless `order_of(p) = n`.
    pub fn require_order(&self, p: &EPoint, n: u64) -> Result<()> {
        let actual = self.order_of(p, n.max(DEFAULT_TORSION_BOUND))?;
        if actual == Some(n) {
            Ok(())
        } else {
            Err(Error::WrongOrder {
                expected: n,
                actual,
            })
        }
    }

    /// Tangent line at `p`; vertical when `p` is 2-torsion.
    pub fn tangent_line(&self, p: &EPoint) -> Result<BiPoly> {
        self.check(p)?;
        let (x0, y0) = p.coords().ok_or(Error::InfinityPoint)?;
        if y0.is_zero() {
            return Ok(vertical_line(x0));
        }
        let m = self.f.derivative().eval(x0) / (rat(2) * y0);
        Ok(line_through(x0, y0, &m))
    }

    /// Line through two distinct points; vertical when they are conjugate.
    pub fn chord_line(&self, p: &EPoint, q: &EPoint) -> Result<BiPoly> {
        self.check(p)?;
        self.check(q)?;
        let (x1, y1) = p.coords().ok_or(Error::InfinityPoint)?;
        let (x2, y2) = q.coords().ok_or(Error::InfinityPoint)?;
        if p == q {
            return Err(Error::EqualPoints);
        }
        if x1 == x2 {
            return Ok(vertical_line(x1));
        }
        let m = (y2 - y1) / (x2 - x1);
        Ok(line_through(x1, y1, &m))
    }

    /// The line cutting out `p + q + (-(p+q))` on `E`: tangent when the
    /// points coincide, chord otherwise, vertical when one of them is `O`.
    pub fn line_function(&self, p: &EPoint, q: &EPoint) -> Result<BiPoly> {
        match (p, q) {
            (EPoint::Infinity, EPoint::Infinity) => Ok(BiPoly::one()),
            (EPoint::Infinity, r) | (r, EPoint::Infinity) => {
                Ok(vertical_line(r.x()?))
            }
            _ if p == q => self.tangent_line(p),
            _ => self.chord_line(p, q),
        }
    }

    /// All rational 2-torsion points `(x0, 0)`.
    pub fn two_torsion(&self) -> Vec<EPoint> {
        self.f
            .rational_roots()
            .into_iter()
            .map(|(r, _)| EPoint::affine(r, Rational::zero()))
            .collect()
    }

    /// Substitute `x -> x + shift`, returning the translated curve.
    pub fn translate_x(&self, shift: &Rational) -> Result<Self> {
        let mut g = UniPoly::zero();
        let lin = UniPoly::new(vec![shift.clone(), Rational::one()]);
        for c in self.f.coeffs().iter().rev() {
            g = &(&g * &lin) + &UniPoly::constant(c.clone());
        }
        EllipticCurve::from_poly(&g)
    }
}

/// `x - x0`.
pub fn vertical_line(x0: &Rational) -> BiPoly {
    &BiPoly::x() - &BiPoly::constant(x0.clone())
}

/// `y - y0 - m (x - x0)`.
fn line_through(x0: &Rational, y0: &Rational, m: &Rational) -> BiPoly {
    let mut l = BiPoly::y();
    l.add_term(crate::algebra::Monomial::new(1, 0), -m.clone());
    l.add_term(crate::algebra::Monomial::ONE, m * x0 - y0);
    l
}

/// `order / gcd(k, order)`.
pub fn multiple_order(order: u64, k: i64) -> u64 {
    order / order.gcd(&k.unsigned_abs())
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_xy, ratio};

    fn e6() -> EllipticCurve {
        EllipticCurve::new(ratio(1, 4), rat(-3), rat(1)).unwrap()
    }

    fn e4() -> EllipticCurve {
        EllipticCurve::new(rat(-5), rat(9), rat(0)).unwrap()
    }

    fn pt(x: i64, y: i64) -> EPoint {
        EPoint::affine(rat(x), rat(y))
    }

    #[test]
    fn construction() {
        assert_eq!(e6().to_string(), "y^2 = x^3 + 1/4*x^2 - 3*x + 1");
        assert_eq!(e4().f(), &UniPoly::from_i64(&[0, 9, -5, 1]));
        assert_eq!(EllipticCurve::new(rat(0), rat(0), rat(0)), Err(Error::SingularCurve));
        assert_eq!(
            EllipticCurve::new(rat(0), rat(-3), rat(2)),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn negation() {
        let e = e6();
        assert_eq!(e.neg(&pt(0, 1)), pt(0, -1));
        assert_eq!(e.neg(&EPoint::Infinity), EPoint::Infinity);
        assert_eq!(e.neg(&pt(-2, 0)), pt(-2, 0));
    }

    #[test]
    fn addition() {
        let e = e6();
        let t = pt(0, 1);
        assert_eq!(e.add(&EPoint::Infinity, &t).unwrap(), t);
        assert_eq!(e.add(&t, &pt(0, -1)).unwrap(), EPoint::Infinity);
        assert_eq!(e.add(&t, &t).unwrap(), pt(2, 2));
        assert_eq!(e.add(&t, &pt(5, 5)), Err(Error::CurveMismatch));
    }

    #[test]
    fn scalar_multiples() {
        assert_eq!(e4().scalar_mul(2, &pt(3, 3)).unwrap(), pt(0, 0));
        assert_eq!(e6().scalar_mul(3, &pt(0, 1)).unwrap(), pt(-2, 0));
        assert_eq!(e6().scalar_mul(0, &pt(0, 1)).unwrap(), EPoint::Infinity);
        assert_eq!(e6().scalar_mul(-2, &pt(0, 1)).unwrap(), pt(2, -2));
    }

    #[test]
    fn orders() {
        assert_eq!(e6().order_of(&pt(0, 1), 24).unwrap(), Some(6));
        assert_eq!(e4().order_of(&pt(0, 0), 24).unwrap(), Some(2));
        let e8 = EllipticCurve::new(ratio(25, 4), rat(-21), rat(9)).unwrap();
        assert_eq!(e8.order_of(&pt(0, 3), 24).unwrap(), Some(8));
        let e = EllipticCurve::new(rat(0), rat(0), rat(-2)).unwrap();
        assert_eq!(e.order_of(&pt(3, 5), 24).unwrap(), None);
        assert!(matches!(
            e6().require_order(&pt(0, 1), 3),
            Err(Error::WrongOrder { expected: 3, actual: Some(6) })
        ));
    }

    #[test]
    fn lines() {
        let e3 = EllipticCurve::new(rat(1), rat(2), rat(1)).unwrap();
        assert_eq!(e3.tangent_line(&pt(0, 1)).unwrap(), parse_xy("y - x - 1").unwrap());
        assert_eq!(e4().tangent_line(&pt(3, 3)).unwrap(), parse_xy("y - x").unwrap());
        assert_eq!(e4().tangent_line(&pt(0, 0)).unwrap(), parse_xy("x").unwrap());
        assert_eq!(e4().tangent_line(&EPoint::Infinity), Err(Error::InfinityPoint));
        let e = EllipticCurve::new(rat(0), rat(0), rat(1)).unwrap();
        assert_eq!(e.chord_line(&pt(0, 1), &pt(2, 3)).unwrap(), parse_xy("y - x - 1").unwrap());
        assert_eq!(e.chord_line(&pt(0, 1), &pt(0, -1)).unwrap(), parse_xy("x").unwrap());
        assert_eq!(e.chord_line(&pt(0, 1), &pt(0, 1)), Err(Error::EqualPoints));
    }

    #[test]
    fn translation_preserves_points() {
        let e = e6();
        let moved = e.translate_x(&rat(2)).unwrap();
        // (2,2) on e becomes (0,2) on the translated curve
        assert!(moved.contains(&pt(0, 2)));
    }
}
