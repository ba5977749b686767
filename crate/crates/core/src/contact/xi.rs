//! Functions `xi` with divisor `n T - n O` for an `n`-torsion point `T`.

use crate::algebra::{BiPoly, UniPoly};
use crate::divisor::FunctionRep;
use crate::elliptic::{EPoint, EllipticCurve};
use crate::error::{Error, Result};

/// A way of producing `xi` with `(xi) = n (T - O)`.
pub trait XiBuilder: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    /// Unchecked construction; callers go through [`build_xi_with`].
    fn construct(&self, curve: &EllipticCurve, t: &EPoint, n: u64) -> Result<FunctionRep>;
}

/// Double-and-add accumulation of lines, dividing out verticals exactly.
pub struct MillerXi;

/// Products of tangent lines at `T` and `[2]T`, for `n` in 2, 3, 4, 6, 8.
pub struct LadderXi;

fn vertical(p: &EPoint) -> UniPoly {
    match p {
        EPoint::Infinity => UniPoly::one(),
        EPoint::Affine { x, .. } => UniPoly::linear_root(x),
    }
}

/// `g_k` has divisor `k T + iota([k]T) - (k + 1) O`.
struct Step {
    g: FunctionRep,
    point: EPoint,
}

fn combine(curve: &EllipticCurve, a: &Step, b: &Step) -> Result<Step> {
    let line = curve.line_function(&a.point, &b.point)?;
    let prod = a.g.mul(&b.g).mul(&FunctionRep::from_poly(curve, &line));
    let denom = &vertical(&a.point) * &vertical(&b.point);
    let g = prod.div_uni(&denom)?.canonical();
    Ok(Step {
        g,
        point: curve.add(&a.point, &b.point)?,
    })
}

impl XiBuilder for MillerXi {
    fn name(&self) -> &'static str {
        "miller"
    }

    fn describe(&self) -> &'static str {
        "double-and-add over tangent and chord lines (any n)"
    }

    fn construct(&self, curve: &EllipticCurve, t: &EPoint, n: u64) -> Result<FunctionRep> {
        let x_t = t.x()?;
        let first = Step {
            g: FunctionRep::new(curve, UniPoly::linear_root(x_t), UniPoly::zero()),
            point: t.clone(),
        };
        let mut acc = Step {
            g: first.g.clone(),
            point: first.point.clone(),
        };
        let bits = 64 - n.leading_zeros();
        for i in (0..bits - 1).rev() {
            acc = combine(curve, &acc, &acc)?;
            if (n >> i) & 1 == 1 {
                acc = combine(curve, &acc, &first)?;
            }
        }
        Ok(acc.g)
    }
}

impl XiBuilder for LadderXi {
    fn name(&self) -> &'static str {
        "ladder"
    }

    fn describe(&self) -> &'static str {
        "tangent-line ladders at T and [2]T (n = 2, 3, 4, 6, 8)"
    }

    fn construct(&self, curve: &EllipticCurve, t: &EPoint, n: u64) -> Result<FunctionRep> {
        let rep = |g: &BiPoly| FunctionRep::from_poly(curve, g);
        let x_of = |k: i64| -> Result<UniPoly> {
            let p = curve.scalar_mul(k, t)?;
            Ok(UniPoly::linear_root(p.x()?))
        };
        let l = rep(&curve.tangent_line(t)?);
        let out = match n {
            2 => FunctionRep::new(curve, UniPoly::linear_root(t.x()?), UniPoly::zero()),
            3 => l,
            4 => l.pow(2).div_uni(&x_of(2)?)?,
            6 => {
                let l1 = rep(&curve.tangent_line(&curve.scalar_mul(2, t)?)?);
                l.pow(3).mul(&l1).div_uni(&x_of(2)?.pow(3))?
            }
            8 => {
                let l1 = rep(&curve.tangent_line(&curve.scalar_mul(2, t)?)?);
                let denom = &x_of(2)?.pow(4) * &x_of(4)?;
                l.pow(4).mul(&l1.pow(2)).div_uni(&denom)?
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "the ladder strategy covers n = 2, 3, 4, 6, 8, not {n}"
                )))
            }
        };
        Ok(out)
    }
}

/// Checks that `T` is affine of exact order `n`, builds `xi`, normalizes it
/// and confirms `norm(xi) = c (x - x_T)^n`.
pub fn build_xi_with(
    builder: &dyn XiBuilder,
    curve: &EllipticCurve,
    t: &EPoint,
    n: u64,
) -> Result<FunctionRep> {
    if t.is_infinity() {
        return Err(Error::InfinityPoint);
    }
    curve.require_order(t, n)?;
    let xi = builder.construct(curve, t, n)?.canonical();
    let target = UniPoly::linear_root(t.x()?).pow(n as u32);
    let norm = xi.norm();
    if norm.monic() != target {
        return Err(Error::InvalidRepresentation);
    }
    Ok(xi)
}

/// `xi` by the default double-and-add strategy.
pub fn build_xi(curve: &EllipticCurve, t: &EPoint, n: u64) -> Result<FunctionRep> {
    build_xi_with(&MillerXi, curve, t, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_xy, rat, ratio};

    fn pt(x: i64, y: i64) -> EPoint {
        EPoint::affine(rat(x), rat(y))
    }

    fn same(a: &FunctionRep, s: &str) -> bool {
        a.poly().equal_up_to_scalar(&parse_xy(s).unwrap())
    }

    #[test]
    fn four_torsion_on_e4() {
        let e = EllipticCurve::new(rat(-5), rat(9), rat(0)).unwrap();
        for b in [&MillerXi as &dyn XiBuilder, &LadderXi] {
            let xi = build_xi_with(b, &e, &pt(3, 3), 4).unwrap();
            assert!(same(&xi, "x^2 - 4*x + 9 - 2*y"), "{}: {xi}", b.name());
        }
    }

    #[test]
    fn six_torsion_on_e6() {
        let e = EllipticCurve::new(ratio(1, 4), rat(-3), rat(1)).unwrap();
        for b in [&MillerXi as &dyn XiBuilder, &LadderXi] {
            let xi = build_xi_with(b, &e, &pt(0, 1), 6).unwrap();
            assert!(same(&xi, "2*x^3 + 4*x^2 + 4*x*y - 7*x - 2*y + 2"), "{}: {xi}", b.name());
        }
    }

    #[test]
    fn two_and_three_torsion() {
        let e = EllipticCurve::new(rat(0), rat(-1), rat(0)).unwrap();
        assert!(same(&build_xi(&e, &pt(1, 0), 2).unwrap(), "x - 1"));
        let e3 = EllipticCurve::new(rat(1), rat(2), rat(1)).unwrap();
        assert!(same(&build_xi(&e3, &pt(0, 1), 3).unwrap(), "y - x - 1"));
        assert!(same(&build_xi_with(&LadderXi, &e3, &pt(0, 1), 3).unwrap(), "y - x - 1"));
    }

    #[test]
    fn order_is_checked() {
        let e = EllipticCurve::new(ratio(1, 4), rat(-3), rat(1)).unwrap();
        assert_eq!(
            build_xi(&e, &pt(0, 1), 4),
            Err(Error::WrongOrder {
                expected: 4,
                actual: Some(6)
            })
        );
        let e5 = EllipticCurve::new(rat(0), rat(0), rat(1)).unwrap();
        // (2, 3) has order 6 on y^2 = x^3 + 1; the ladder has no 5 rung anyway
        assert!(matches!(
            build_xi_with(&LadderXi, &e5, &pt(2, 3), 5),
            Err(Error::WrongOrder { .. })
        ));
    }
}
