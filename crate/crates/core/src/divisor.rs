//! Effective divisors on an elliptic curve and the polynomial functions
//! `b0(x) + b1(x) y` representing them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{linalg, nf1_parts, rat, BiPoly, Matrix, Rational, UniPoly};
use crate::elliptic::{EPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::report::Report;

/// Finite sum of affine points with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveDivisor {
    curve: EllipticCurve,
    points: BTreeMap<EPoint, u32>,
}

/// `k` copies of the fiber `pi^*(x = x0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub x: Rational,
    pub count: u32,
}

impl EffectiveDivisor {
    pub fn zero(curve: &EllipticCurve) -> Self {
        EffectiveDivisor {
            curve: curve.clone(),
            points: BTreeMap::new(),
        }
    }

    pub fn from_points(curve: &EllipticCurve, pts: impl IntoIterator<Item = (EPoint, u32)>) -> Result<Self> {
        let mut d = EffectiveDivisor::zero(curve);
        for (p, m) in pts {
            d.add_point(p, m)?;
        }
        Ok(d)
    }

    pub fn add_point(&mut self, p: EPoint, m: u32) -> Result<()> {
        if p.is_infinity() {
            return Err(Error::InfinityPoint);
        }
        if !self.curve.contains(&p) {
            let (x, y) = p.coords().expect("affine");
            return Err(Error::PointNotOnCurve {
                point: format!("({x}, {y})"),
            });
        }
        if m > 0 {
            *self.points.entry(p).or_insert(0) += m;
        }
        Ok(())
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn points(&self) -> impl Iterator<Item = (&EPoint, u32)> {
        self.points.iter().map(|(p, m)| (p, *m))
    }

    pub fn multiplicity(&self, p: &EPoint) -> u32 {
        self.points.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.points.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.points.is_empty()
    }

    fn same_curve(&self, other: &Self) -> Result<()> {
        if self.curve == other.curve {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        let mut out = self.clone();
        for (p, m) in other.points() {
            out.add_point(p.clone(), m)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, n: u32) -> Self {
        let mut out = EffectiveDivisor::zero(&self.curve);
        if n > 0 {
            out.points = self.points.iter().map(|(p, m)| (p.clone(), m * n)).collect();
        }
        out
    }

    /// Semi-reduced: no conjugate pair `P + iota P` and ramification points
    /// with multiplicity at most one.
    pub fn is_semi_reduced(&self) -> bool {
        self.points.iter().all(|(p, m)| {
            let (x, y) = p.coords().expect("affine");
            if y.is_zero() {
                *m <= 1
            } else {
                !self.points.contains_key(&EPoint::affine(x.clone(), -y.clone()))
            }
        })
    }

    /// `pi^*` of the given fibers, as a divisor.
    pub fn from_fibers(curve: &EllipticCurve, fibers: &[Fiber]) -> Result<Self> {
        let mut d = EffectiveDivisor::zero(curve);
        for fib in fibers {
            let fx = curve.f().eval(&fib.x);
            if fx.is_zero() {
                d.add_point(EPoint::affine(fib.x.clone(), fx), 2 * fib.count)?;
                continue;
            }
            let y = rational_sqrt(&fx).ok_or_else(|| {
                Error::InvalidParameter(format!("fiber over x = {} is not rational", fib.x))
            })?;
            d.add_point(EPoint::affine(fib.x.clone(), y.clone()), fib.count)?;
            d.add_point(EPoint::affine(fib.x.clone(), -y), fib.count)?;
        }
        Ok(d)
    }
}

impl fmt::Display for EffectiveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "{{ }}");
        }
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(p, m)| {
                let (x, y) = p.coords().expect("affine");
                format!("({x}, {y}): {m}")
            })
            .collect();
        write!(f, "{{ {} }}", parts.join(", "))
    }
}

/// `d = d_sr + d_o` with `d_sr` semi-reduced and `d_o` a sum of fibers.
pub fn decompose(d: &EffectiveDivisor) -> (EffectiveDivisor, Vec<Fiber>) {
    let mut sr = EffectiveDivisor::zero(&d.curve);
    let mut fibers: Vec<Fiber> = Vec::new();
    for (p, m) in d.points() {
        let (x, y) = p.coords().expect("affine");
        let (keep, count) = if y.is_zero() {
            (m % 2, m / 2)
        } else {
            let conj = d.multiplicity(&EPoint::affine(x.clone(), -y.clone()));
            // each pair is seen from both sides; record it once
            let k = m.min(conj);
            (m - k, if y.is_positive() { k } else { 0 })
        };
        if keep > 0 {
            sr.points.insert(p.clone(), keep);
        }
        if count > 0 {
            fibers.push(Fiber { x: x.clone(), count });
        }
    }
    (sr, fibers)
}

pub fn divisor_gcd(d1: &EffectiveDivisor, d2: &EffectiveDivisor) -> Result<EffectiveDivisor> {
    d1.same_curve(d2)?;
    let mut out = EffectiveDivisor::zero(&d1.curve);
    for (p, m) in d1.points() {
        let k = m.min(d2.multiplicity(p));
        if k > 0 {
            out.points.insert(p.clone(), k);
        }
    }
    Ok(out)
}

/// `P_1 + ... + P_d` in the group law.
pub fn divisor_sum_point(d: &EffectiveDivisor) -> EPoint {
    let mut acc = EPoint::Infinity;
    for (p, m) in d.points() {
        let pm = d.curve.scalar_mul(m as i64, p).expect("point on curve");
        acc = d.curve.add(&acc, &pm).expect("point on curve");
    }
    acc
}

/// The function `b0(x) + b1(x) y` on a curve, optionally annotated with the
/// residual zero `P_o`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionRep {
    curve: EllipticCurve,
    b0: UniPoly,
    b1: UniPoly,
    p_o: Option<EPoint>,
}

impl FunctionRep {
    pub fn new(curve: &EllipticCurve, b0: UniPoly, b1: UniPoly) -> Self {
        FunctionRep {
            curve: curve.clone(),
            b0,
            b1,
            p_o: None,
        }
    }

    /// Reduces `g` to its `NF_1` representative.
    pub fn from_poly(curve: &EllipticCurve, g: &BiPoly) -> Self {
        let (b0, b1) = nf1_parts(g, curve.f()).expect("cubic is a valid curve polynomial");
        FunctionRep::new(curve, b0, b1)
    }

    pub fn with_p_o(mut self, p: EPoint) -> Self {
        self.p_o = Some(p);
        self
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn b0(&self) -> &UniPoly {
        &self.b0
    }

    pub fn b1(&self) -> &UniPoly {
        &self.b1
    }

    pub fn p_o(&self) -> Option<&EPoint> {
        self.p_o.as_ref()
    }

    pub fn poly(&self) -> BiPoly {
        BiPoly::from_rep(&self.b0, &self.b1)
    }

    pub fn is_zero(&self) -> bool {
        self.b0.is_zero() && self.b1.is_zero()
    }

    pub fn eval(&self, p: &EPoint) -> Result<Rational> {
        let (x, y) = p.coords().ok_or(Error::InfinityPoint)?;
        Ok(self.b0.eval(x) + self.b1.eval(x) * y)
    }

    /// `b0^2 - f b1^2`, the product with the conjugate function.
    pub fn norm(&self) -> UniPoly {
        &self.b0.pow(2) - &(self.curve.f() * &self.b1.pow(2))
    }

    /// Product in the coordinate ring, already in normal form.
    pub fn mul(&self, other: &Self) -> Self {
        let b0 = &(&self.b0 * &other.b0) + &(&(&self.b1 * &other.b1) * self.curve.f());
        let b1 = &(&self.b0 * &other.b1) + &(&self.b1 * &other.b0);
        FunctionRep::new(&self.curve, b0, b1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FunctionRep::new(&self.curve, UniPoly::one(), UniPoly::zero());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FunctionRep {
            curve: self.curve.clone(),
            b0: self.b0.scale(c),
            b1: self.b1.scale(c),
            p_o: self.p_o.clone(),
        }
    }

    /// Divides both parts by `q`, which must divide them exactly.
    pub fn div_uni(&self, q: &UniPoly) -> Result<Self> {
        let b0 = self.b0.exact_div(q);
        let b1 = self.b1.exact_div(q);
        match (b0, b1) {
            (Some(b0), Some(b1)) => Ok(FunctionRep {
                curve: self.curve.clone(),
                b0,
                b1,
                p_o: self.p_o.clone(),
            }),
            _ => {
                let (_, r0) = self.b0.div_rem(q);
                let (_, r1) = self.b1.div_rem(q);
                Err(Error::NotDivisible {
                    remainder: Box::new(BiPoly::from_rep(&r0, &r1)),
                })
            }
        }
    }

    /// Primitive integer coefficients, leading term under `y > x` positive.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.poly().canonical_scale())
    }

    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        self.poly().equal_up_to_scalar(&other.poly())
    }

    /// Pole order at `O`: `max(2 deg b0, 2 deg b1 + 3)`.
    pub fn pole_order(&self) -> Option<u32> {
        let p0 = self.b0.degree().map(|d| 2 * d as u32);
        let p1 = self.b1.degree().map(|d| 2 * d as u32 + 3);
        p0.max(p1)
    }

    /// Degree of the plane curve `b0(x) + b1(x) y = 0`.
    pub fn projective_degree(&self) -> Option<u32> {
        self.poly().total_degree()
    }
}

impl fmt::Display for FunctionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn rational_sqrt(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer();
    let d = v.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Coefficients of `p(a + u)` in `u`, lowest first.
fn taylor_shift(p: &UniPoly, a: &Rational) -> Vec<Rational> {
    let lin = UniPoly::new(vec![a.clone(), Rational::one()]);
    let mut acc = UniPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &lin) + &UniPoly::constant(c.clone());
    }
    acc.coeffs().to_vec()
}

fn get(v: &[Rational], i: usize) -> Rational {
    v.get(i).cloned().unwrap_or_else(Rational::zero)
}

/// First `k` coefficients of the branch `y(x0 + u)` of `y^2 = f` through
/// `(x0, y0)`, `y0 != 0`.
fn y_series(f: &UniPoly, x0: &Rational, y0: &Rational, k: usize) -> Vec<Rational> {
    let fs = taylor_shift(f, x0);
    let mut ys = vec![y0.clone()];
    let two_y0 = rat(2) * y0;
    for n in 1..k {
        let mut acc = get(&fs, n);
        for i in 1..n {
            acc -= &ys[i] * &ys[n - i];
        }
        ys.push(acc / &two_y0);
    }
    ys.truncate(k);
    ys
}

/// First `k` coefficients of `b0 + b1 y` along the branch.
fn rep_series(b0: &UniPoly, b1: &UniPoly, x0: &Rational, ys: &[Rational], k: usize) -> Vec<Rational> {
    let s0 = taylor_shift(b0, x0);
    let s1 = taylor_shift(b1, x0);
    (0..k)
        .map(|n| {
            let mut acc = get(&s0, n);
            for i in 0..=n {
                let c = get(&s1, i);
                if !c.is_zero() {
                    acc += c * get(ys, n - i);
                }
            }
            acc
        })
        .collect()
}

fn root_order(p: &UniPoly, x0: &Rational) -> Option<u32> {
    if p.is_zero() {
        None
    } else {
        Some(p.root_multiplicity(x0) as u32)
    }
}

/// Order of vanishing of `g` at the affine point `p`, capped at `cap`.
pub fn order_of_vanishing(g: &FunctionRep, p: &EPoint, cap: u32) -> Result<u32> {
    let (x0, y0) = p.coords().ok_or(Error::InfinityPoint)?;
    if !g.curve.contains(p) {
        return Err(Error::CurveMismatch);
    }
    if g.is_zero() {
        return Ok(cap);
    }
    if y0.is_zero() {
        // local parameter y, and x - x0 has order 2
        let o0 = root_order(&g.b0, x0).map(|o| 2 * o);
        let o1 = root_order(&g.b1, x0).map(|o| 2 * o + 1);
        let ord = match (o0, o1) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => cap,
        };
        return Ok(ord.min(cap));
    }
    let k = cap as usize;
    let ys = y_series(g.curve.f(), x0, y0, k);
    let s = rep_series(&g.b0, &g.b1, x0, &ys, k);
    Ok(s.iter().position(|c| !c.is_zero()).map_or(cap, |i| i as u32))
}

/// Rational part of the zero divisor of `g`, plus the monic factor of the
/// norm whose roots are not rational points.
pub fn zero_divisor_rational(g: &FunctionRep) -> Result<(EffectiveDivisor, UniPoly)> {
    if g.is_zero() {
        return Err(Error::InvalidParameter("zero function has no divisor".into()));
    }
    let norm = g.norm();
    let mut unresolved = norm.monic();
    let mut d = EffectiveDivisor::zero(&g.curve);
    for (x0, k) in norm.rational_roots() {
        let k = k as u32;
        let fx = g.curve.f().eval(&x0);
        let placed = if fx.is_zero() {
            d.add_point(EPoint::affine(x0.clone(), fx), k)?;
            true
        } else if let Some(y0) = rational_sqrt(&fx) {
            let plus = EPoint::affine(x0.clone(), y0.clone());
            let minus = EPoint::affine(x0.clone(), -y0);
            let m_plus = order_of_vanishing(g, &plus, k)?;
            d.add_point(plus, m_plus)?;
            d.add_point(minus, k - m_plus)?;
            true
        } else {
            false
        };
        if placed {
            let lin = UniPoly::linear_root(&x0).pow(k);
            unresolved = unresolved.exact_div(&lin).expect("root of the norm");
        }
    }
    Ok((d, unresolved))
}

/// Number of coefficients of `b0` and `b1` allowed for a divisor of degree
/// `d`.
pub fn rep_shape(d: u32) -> (usize, usize) {
    let eps = (d + 1) % 2;
    let n0 = ((d + 1 - eps) / 2) as usize + 1;
    let n1 = if d + eps >= 3 {
        ((d + eps - 3) / 2) as usize + 1
    } else {
        0
    };
    (n0, n1)
}

/// The function `b` with `(b) = d + P_o - (deg d + 1) O`, unique up to a
/// scalar, found by linear interpolation.
pub fn construct_b(d: &EffectiveDivisor) -> Result<FunctionRep> {
    if !d.is_semi_reduced() {
        return Err(Error::NotSemiReduced(d.to_string()));
    }
    let curve = &d.curve;
    let deg = d.degree();
    let (n0, n1) = rep_shape(deg);
    let cols = n0 + n1;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (p, m) in d.points() {
        let (x0, y0) = p.coords().expect("affine");
        if y0.is_zero() {
            // b(P) = b0(x0)
            let mut row = vec![Rational::zero(); cols];
            let mut pw = Rational::one();
            for c in row.iter_mut().take(n0) {
                *c = pw.clone();
                pw *= x0;
            }
            rows.push(row);
            continue;
        }
        let k = m as usize;
        let ys = y_series(curve.f(), x0, y0, k);
        let mut per_unknown: Vec<Vec<Rational>> = Vec::with_capacity(cols);
        for i in 0..n0 {
            let b0 = UniPoly::monomial(Rational::one(), i);
            per_unknown.push(rep_series(&b0, &UniPoly::zero(), x0, &ys, k));
        }
        for i in 0..n1 {
            let b1 = UniPoly::monomial(Rational::one(), i);
            per_unknown.push(rep_series(&UniPoly::zero(), &b1, x0, &ys, k));
        }
        for order in 0..k {
            rows.push(per_unknown.iter().map(|s| s[order].clone()).collect());
        }
    }
    let basis = if rows.is_empty() {
        // no conditions: only the constants survive the pole bound
        vec![std::iter::once(Rational::one())
            .chain(std::iter::repeat_n(Rational::zero(), cols - 1))
            .collect()]
    } else {
        linalg::nullspace(&Matrix::from_rows(rows)?)
    };
    if basis.len() != 1 {
        return Err(Error::DegenerateSystem(basis.len()));
    }
    let v = &basis[0];
    let b0 = UniPoly::new(v[..n0].to_vec());
    let b1 = UniPoly::new(v[n0..].to_vec());
    let b = FunctionRep::new(curve, b0, b1).canonical();
    let p_o = curve.neg(&divisor_sum_point(d));
    let consistent = match &p_o {
        EPoint::Infinity => b.pole_order() == Some(deg),
        p => b.eval(p)?.is_zero() && b.pole_order() == Some(deg + 1),
    };
    if !consistent {
        return Err(Error::InvalidRepresentation);
    }
    Ok(b.with_p_o(p_o))
}

/// Mumford pair `(u, v)` of `d` from `b = y + b0` (up to scalar).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordPair {
    pub u: UniPoly,
    pub v: UniPoly,
}

pub fn mumford_pair(d: &EffectiveDivisor, b: &FunctionRep) -> Result<MumfordPair> {
    if b.b1.degree() != Some(0) {
        return Err(Error::ShapeError(
            "b1 must be a nonzero constant for a Mumford pair".into(),
        ));
    }
    let lead = b.b1.coeff(0);
    let mut u = UniPoly::one();
    for (p, m) in d.points() {
        let (x, _) = p.coords().expect("affine");
        u = &u * &UniPoly::linear_root(x).pow(m);
    }
    let v = b.b0.scale(&(-Rational::one() / lead)).rem(&u);
    let check = &v.pow(2) - d.curve.f();
    if !check.rem(&u).is_zero() {
        return Err(Error::InvalidRepresentation);
    }
    Ok(MumfordPair { u, v })
}

/// Checks the interpolation contract for `b` against `d`: zero divisor,
/// coefficient degree bounds and the multiplicity `nu` at `O` of the plane
/// curve `b = 0`.
pub fn verify_representation(d: &EffectiveDivisor, b: &FunctionRep) -> Result<Report> {
    let deg = d.degree();
    let mut r = Report::new("divisor representation");
    r.value("b", b.poly()).value("degree", deg);

    let (zeros, unresolved) = zero_divisor_rational(b)?;
    let p_o = curve_residual(d);
    let mut expected = d.clone();
    if let EPoint::Affine { .. } = &p_o {
        expected.add_point(p_o.clone(), 1)?;
    }
    r.value("p_o", &p_o);
    r.check(
        "zero_divisor",
        zeros == expected && unresolved.degree() == Some(0),
        format!("zeros {zeros}, expected {expected}"),
    );

    let (n0, n1) = rep_shape(deg);
    let ok0 = b.b0.degree().is_none_or(|e| e < n0);
    let ok1 = b.b1.degree().is_none_or(|e| e < n1);
    r.check(
        "degree_bounds",
        ok0 && ok1,
        format!("deg b0 < {n0}, deg b1 < {n1}"),
    );

    match b.projective_degree() {
        Some(pd) => {
            let nu = 3 * pd as i64 - (deg as i64 + 1);
            // when P_o = O it is itself one of the intersections at O
            let at_o = nu + i64::from(p_o.is_infinity());
            r.value("nu", nu);
            r.check(
                "nu",
                (0..=2).contains(&at_o) && (deg as i64 + 1 + nu) % 3 == 0,
                "nu in {0,1,2} and d + 1 + nu = 0 mod 3",
            );
        }
        None => {
            r.check("nu", false, "b is zero");
        }
    }
    Ok(r)
}

fn curve_residual(d: &EffectiveDivisor) -> EPoint {
    d.curve.neg(&divisor_sum_point(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_xy, ratio};

    fn pt(x: i64, y: i64) -> EPoint {
        EPoint::affine(rat(x), rat(y))
    }

    fn e6() -> EllipticCurve {
        EllipticCurve::new(ratio(1, 4), rat(-3), rat(1)).unwrap()
    }

    fn e4() -> EllipticCurve {
        EllipticCurve::new(rat(-5), rat(9), rat(0)).unwrap()
    }

    fn cube_plus_one() -> EllipticCurve {
        EllipticCurve::new(rat(0), rat(0), rat(1)).unwrap()
    }

    fn div(curve: &EllipticCurve, pts: &[((i64, i64), u32)]) -> EffectiveDivisor {
        EffectiveDivisor::from_points(curve, pts.iter().map(|&((x, y), m)| (pt(x, y), m))).unwrap()
    }

    fn rep(curve: &EllipticCurve, s: &str) -> FunctionRep {
        FunctionRep::from_poly(curve, &parse_xy(s).unwrap())
    }

    #[test]
    fn decomposition() {
        let e = e6();
        let (sr, fib) = decompose(&div(&e, &[((0, 1), 1), ((0, -1), 1)]));
        assert!(sr.is_zero());
        assert_eq!(fib, vec![Fiber { x: rat(0), count: 1 }]);

        let e = e4();
        let d = div(&e, &[((0, 0), 3)]);
        let (sr, fib) = decompose(&d);
        assert_eq!(sr, div(&e, &[((0, 0), 1)]));
        assert_eq!(fib, vec![Fiber { x: rat(0), count: 1 }]);
        assert_eq!(sr.sum(&EffectiveDivisor::from_fibers(&e, &fib).unwrap()).unwrap(), d);

        let e = e6();
        let d = div(&e, &[((0, 1), 2)]);
        assert_eq!(decompose(&d), (d.clone(), vec![]));
    }

    #[test]
    fn gcd_and_sum_point() {
        let e = e6();
        let d1 = div(&e, &[((0, 1), 2), ((2, 2), 1)]);
        let d2 = div(&e, &[((0, 1), 1)]);
        assert_eq!(divisor_gcd(&d1, &d2).unwrap(), d2);
        assert_eq!(divisor_gcd(&d1, &d1).unwrap(), d1);
        assert!(divisor_gcd(&d1, &EffectiveDivisor::zero(&e)).unwrap().is_zero());
        assert_eq!(
            divisor_gcd(&d1, &EffectiveDivisor::zero(&e4())),
            Err(Error::CurveMismatch)
        );

        assert_eq!(divisor_sum_point(&div(&e, &[((0, 1), 3)])), pt(-2, 0));
        assert_eq!(divisor_sum_point(&div(&e, &[((0, 1), 1), ((0, -1), 1)])), EPoint::Infinity);
        assert_eq!(divisor_sum_point(&div(&e, &[((0, 1), 1), ((2, 2), 1)])), pt(-2, 0));
    }

    #[test]
    fn interpolation_examples() {
        let e = cube_plus_one();
        let b = construct_b(&div(&e, &[((0, 1), 1), ((2, 3), 1)])).unwrap();
        assert_eq!(b.poly(), parse_xy("y - x - 1").unwrap());
        assert_eq!(b.p_o(), Some(&pt(-1, 0)));

        let e = EllipticCurve::new(rat(0), rat(-1), rat(0)).unwrap();
        let b = construct_b(&div(&e, &[((0, 0), 1), ((1, 0), 1)])).unwrap();
        assert_eq!(b.poly(), parse_xy("y").unwrap());
        assert_eq!(b.p_o(), Some(&pt(-1, 0)));

        let e = e6();
        let b = construct_b(&div(&e, &[((2, 2), 1)])).unwrap();
        assert_eq!(b.poly(), parse_xy("x - 2").unwrap());
        assert_eq!(b.p_o(), Some(&pt(2, -2)));
    }

    #[test]
    fn interpolation_with_multiplicity() {
        // 2T on E4(3): the tangent line at T = (3, 3)
        let e = e4();
        let b = construct_b(&div(&e, &[((3, 3), 2)])).unwrap();
        assert!(b.poly().equal_up_to_scalar(&parse_xy("y - x").unwrap()));
        assert_eq!(b.p_o(), Some(&pt(0, 0)));
        assert!(matches!(
            construct_b(&div(&e, &[((3, 3), 1), ((3, -3), 1)])),
            Err(Error::NotSemiReduced(_))
        ));
    }

    #[test]
    fn norms() {
        let e = e4();
        assert_eq!(rep(&e, "y").norm(), -e.f().clone());
        assert_eq!(
            rep(&e, "x^2 - 4*x + 9 - 2*y").norm(),
            UniPoly::from_i64(&[-3, 1]).pow(4)
        );
        let e = cube_plus_one();
        assert_eq!(rep(&e, "y - x - 1").norm(), UniPoly::from_i64(&[0, 2, 1, -1]));
    }

    #[test]
    fn rational_zero_divisors() {
        let e = cube_plus_one();
        let (d, u) = zero_divisor_rational(&rep(&e, "y - x - 1")).unwrap();
        assert_eq!(d, div(&e, &[((0, 1), 1), ((2, 3), 1), ((-1, 0), 1)]));
        assert_eq!(u, UniPoly::one());

        let e = e4();
        let (d, u) = zero_divisor_rational(&rep(&e, "x - 3")).unwrap();
        assert_eq!(d, div(&e, &[((3, 3), 1), ((3, -3), 1)]));
        assert_eq!(u, UniPoly::one());

        let (d, u) = zero_divisor_rational(&rep(&e, "x^2 - 4*x + 9 - 2*y")).unwrap();
        assert_eq!(d, div(&e, &[((3, 3), 4)]));
        assert_eq!(u, UniPoly::one());

        // x - 1 on E4(3): f(1) = 5 is not a square
        let (d, u) = zero_divisor_rational(&rep(&e, "x - 1")).unwrap();
        assert!(d.is_zero());
        assert_eq!(u, UniPoly::from_i64(&[-1, 1]).pow(2));
    }

    #[test]
    fn mumford_pairs() {
        let e = cube_plus_one();
        let d = div(&e, &[((0, 1), 1), ((2, 3), 1), ((-1, 0), 1)]);
        let mp = mumford_pair(&d, &rep(&e, "y - x - 1")).unwrap();
        assert_eq!(mp.u, UniPoly::from_i64(&[0, -2, -1, 1]));
        assert_eq!(mp.v, UniPoly::from_i64(&[1, 1]));

        let e = e4();
        let mp = mumford_pair(&div(&e, &[((3, 3), 1)]), &rep(&e, "y - 3")).unwrap();
        assert_eq!(mp.u, UniPoly::from_i64(&[-3, 1]));
        assert_eq!(mp.v, UniPoly::from_i64(&[3]));

        assert!(matches!(
            mumford_pair(&div(&e, &[((3, 3), 1)]), &rep(&e, "x - 3")),
            Err(Error::ShapeError(_))
        ));
        assert_eq!(
            mumford_pair(&div(&e, &[((3, 3), 1)]), &rep(&e, "y + 1")),
            Err(Error::InvalidRepresentation)
        );
    }

    #[test]
    fn interpolation_contract() {
        let e = cube_plus_one();
        let d = div(&e, &[((0, 1), 1), ((2, 3), 1)]);
        let b = construct_b(&d).unwrap();
        let r = verify_representation(&d, &b).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get("nu"), Some("0"));

        let d = div(&e, &[((2, 3), 1)]);
        let r = verify_representation(&d, &construct_b(&d).unwrap()).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get("nu"), Some("1"));

        let r = verify_representation(&d, &rep(&e, "x - 5")).unwrap();
        assert_eq!(r.check_passed("zero_divisor"), Some(false));
    }

    #[test]
    fn shapes() {
        assert_eq!(rep_shape(1), (2, 0));
        assert_eq!(rep_shape(2), (2, 1));
        assert_eq!(rep_shape(3), (3, 1));
        assert_eq!(rep_shape(4), (3, 2));
        assert_eq!(rep_shape(5), (4, 2));
    }

    #[test]
    fn products_and_square_roots() {
        let e = e4();
        let g = rep(&e, "y - x");
        assert_eq!(g.mul(&g), rep(&e, "(y - x)^2"));
        assert_eq!(g.pow(3), rep(&e, "(y - x)^3"));
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(5)), None);
    }
}
