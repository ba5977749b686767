//! The worked families: curves with a rational torsion point of order
//! 2, 3, 4, 6 and 8, together with reference polynomials in their parameters.

use num_traits::{One, Zero};

use crate::algebra::parse::parse_sparse;
use crate::algebra::{BiPoly, Monomial, Rational, UniPoly};
use crate::divisor::FunctionRep;
use crate::elliptic::{EPoint, EllipticCurve};
use crate::error::{Error, Result};

/// Substitutes parameter values into a polynomial in `x`, `y` and the
/// parameters.
pub fn specialize(text: &str, params: &[(&str, Rational)]) -> Result<BiPoly> {
    let mut vars = vec!["x", "y"];
    vars.extend(params.iter().map(|(n, _)| *n));
    let sp = parse_sparse(text, &vars)?;
    let mut out = BiPoly::zero();
    for (e, c) in sp {
        let mut v = c;
        for (k, (_, val)) in params.iter().enumerate() {
            for _ in 0..e[k + 2] {
                v *= val;
            }
        }
        out.add_term(Monomial::new(e[0], e[1]), v);
    }
    Ok(out)
}

fn curve_from(text: &str, params: &[(&str, Rational)]) -> Result<EllipticCurve> {
    let g = specialize(text, params)?;
    if g.degree_y().unwrap_or(0) > 0 {
        return Err(Error::InvalidCurvePoly);
    }
    let f = g.y_coeffs().into_iter().next().unwrap_or_else(UniPoly::zero);
    EllipticCurve::from_poly(&f)
}

/// A curve, a torsion point `T` of order `n`, and `b_d` vanishing at
/// `iota(T)`.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub curve: EllipticCurve,
    pub t: EPoint,
    pub n: u64,
    pub b_d: FunctionRep,
}

impl Family {
    fn new(name: String, curve: EllipticCurve, t: EPoint, n: u64, b: BiPoly) -> Result<Self> {
        let t = curve.point(t.x()?.clone(), t.y()?.clone())?;
        let b_d = FunctionRep::from_poly(&curve, &b);
        Ok(Family {
            name,
            curve,
            t,
            n,
            b_d,
        })
    }
}

/// `y^2 = (x - xo)(x^2 + c1 x + c2)`, `T = (xo, 0)`, `b = y + a (x - xo)(x - b)`.
pub fn two_torsion(a: &Rational, b: &Rational, c1: &Rational, c2: &Rational, xo: &Rational) -> Result<Family> {
    let p = [
        ("a", a.clone()),
        ("b", b.clone()),
        ("c1", c1.clone()),
        ("c2", c2.clone()),
        ("xo", xo.clone()),
    ];
    let curve = curve_from("(x - xo)*(x^2 + c1*x + c2)", &p)?;
    let bd = specialize("y + a*(x - xo)*(x - b)", &p)?;
    let name = format!("E2(a={a}, b={b}, c1={c1}, c2={c2}, xo={xo})");
    Family::new(name, curve, EPoint::affine(xo.clone(), Rational::zero()), 2, bd)
}

/// `y^2 = (x - xo)^3 + (x + 1)^2`, tangent `y = x + 1` at the 3-torsion point
/// over `x = xo`.
///
/// `T = (xo, -(xo + 1))` and `b = y - (x - xo)(x - s) - xo - 1`, the
/// configuration the reference polynomials below belong to.
pub fn three_torsion(xo: &Rational, s: &Rational) -> Result<Family> {
    let p = [("xo", xo.clone()), ("s", s.clone())];
    let curve = curve_from("(x - xo)^3 + (x + 1)^2", &p)?;
    let bd = specialize("y - (x - xo)*(x - s) - xo - 1", &p)?;
    let t = EPoint::affine(xo.clone(), -(xo + Rational::one()));
    Family::new(format!("E3(xo={xo}, s={s})"), curve, t, 3, bd)
}

/// `y^2 = x (x^2 - (2t - 1) x + t^2)`, `T = (t, t)`, `b = y - (x - t)(x - 2) + t`.
pub fn four_torsion(t: &Rational) -> Result<Family> {
    let p = [("t", t.clone())];
    let curve = curve_from("x*(x^2 - (2*t - 1)*x + t^2)", &p)?;
    let bd = specialize("y - (x - t)*(x - 2) + t", &p)?;
    Family::new(format!("E4(t={t})"), curve, EPoint::affine(t.clone(), t.clone()), 4, bd)
}

pub const F6: &str = "x^3 - (3/4*t^2 - 3*t + 2)*x^2 + 1/2*(-t^2 + 3*t - 2)*t*x + 1/4*(-t^2 + 3*t - 2)^2";

pub const F8: &str = concat!(
    "(x - t^4 + t^3)*(x^2 - (2*t^3 - 4*t^2 + 2*t - 1/4)*x - t^6 + 2*t^5 - 5/4*t^4 ",
    "+ 1/4*t^3)",
);

/// The 6-torsion family, `T = (0, (t - 1)(t - 2)/2)`, `b = y - x (x - s) + y_T`.
pub fn six_torsion(t: &Rational, s: &Rational) -> Result<Family> {
    let p = [("t", t.clone()), ("s", s.clone())];
    let curve = curve_from(F6, &p)?;
    let yo = specialize("1/2*(t - 1)*(t - 2)", &p)?.coeff(0, 0);
    let bd = specialize("y - x*(x - s) + 1/2*(t - 1)*(t - 2)", &p)?;
    Family::new(format!("E6(t={t}, s={s})"), curve, EPoint::affine(Rational::zero(), yo), 6, bd)
}

/// The 8-torsion family, `T = (0, -t^5 + 3/2 t^4 - 1/2 t^3)`, `b = y - x (x - s) + y_T`.
pub fn eight_torsion(t: &Rational, s: &Rational) -> Result<Family> {
    let p = [("t", t.clone()), ("s", s.clone())];
    let curve = curve_from(F8, &p)?;
    let yo = specialize("-t^5 + 3/2*t^4 - 1/2*t^3", &p)?.coeff(0, 0);
    let bd = specialize("y - x*(x - s) - t^5 + 3/2*t^4 - 1/2*t^3", &p)?;
    Family::new(format!("E8(t={t}, s={s})"), curve, EPoint::affine(Rational::zero(), yo), 8, bd)
}

/// `xi` for the 4-torsion family: `x^2 + (c1 + m) x + c2 - 2 m y` with
/// `c1 = -(2t - 1)`, `c2 = t^2`, `m = 1`.
pub const XI4: &str = "x^2 + (-(2*t - 1) + 1)*x + t^2 - 2*y";

/// Multipliers `q` giving smooth curves `h + q (y^2 - f)` for `n = 4, 6, 8`.
pub const FIX4: &str = "x + y + 1";
pub const FIX6: &str = "x^3 + y^3 + 1";
pub const FIX8: &str = "x^5 + y^5 + 1";

/// Reference `h` for the 2-torsion family, in `a, b, c1, c2, xo`.
pub const H2: &str = concat!(
    "(- 2*a^2*b - a^2*c1 + 1)*x^2 + 2*a*x*y + (a^2*b^2 + 2*a^2*b*xo + a^2*c1*xo ",
    "- a^2*c2 + c1)*x + a^2*y^2 - 2*a*b*y - a^2*b^2*xo + a^2*c2*xo + c2",
);

/// Reference weak contact function for the 3-torsion family, in `s, xo`.
pub const B3: &str = concat!(
    "s^3*x + s^3*y - 6*s^2*x*xo - 3*s^2*x*y + 3*s^2*xo^2 - 3*s*x^3 + 12*s*x^2*xo ",
    "+ 3*s*x^2*y - 6*s*x*xo^2 + 2*x^4 - 6*x^3*xo - x^3*y + 3*x^2*xo^2 + s^3 ",
    "+ 3*s^2*y - 9*s*x*xo - 3*s*x*y + 6*s*xo^2 - 3*s*xo*y + 6*x^2*xo - 3*x*xo^2 ",
    "+ 3*x*xo*y - xo^3 + 3*s^2 - 6*s*x + 3*s*xo + 3*s*y + 5*x^2 - 6*x*xo - 2*x*y ",
    "+ 3*xo^2 - 3*xo*y + 3*s - x + 3*xo - y + 3",
);

/// Reference `h` for the 3-torsion family, in `s, xo`.
pub const H3: &str = concat!(
    "x^2*y*(3*s - 3*xo + 1) + x^2*(3*s*xo - 3*xo^2 + 3*s + 3) + 2*x*y^2 ",
    "+ x*y*(- 3*s^2 + 3*xo^2 - 3*s + 3*xo) + x*(s^3 - 6*s^2*xo + 3*s*xo^2 + 2*xo^3 ",
    "- 9*s*xo + 3*xo^2 - 6*xo + 1) - y^3 + y^2*(- 3*s - 2) + y*(s^3 - xo^3 + 3*s^2 ",
    "- 3*s*xo + 3*s - 3*xo) + 3*s^2*xo^2 - 3*s*xo^3 + s^3 + 6*s*xo^2 - 3*xo^3 ",
    "+ 3*s^2 + 3*xo*s + 3*xo^2 + 6*s + 3*xo + 5",
);

/// Reference weak contact function for the 4-torsion family, in `t`.
pub const B4: &str = concat!(
    "(t^2*x^4 - 2*t*x^5 + x^6 + 2*t^2*x^3 - 8*t*x^4 + 4*t*x^3*y + 8*x^5 - 6*x^4*y ",
    "- 5*t^2*x^2 + 26*t*x^3 - 8*t*x^2*y - 29*x^4 + 16*x^3*y + 2*t^2*x - 20*t*x^2 ",
    "+ 8*t*x*y + 32*x^3 - 18*x^2*y + t^2 + 2*t*x - 4*t*y - 11*x^2 + 12*x*y + 2*x ",
    "- 2*y)",
);

/// Reference `h` for the 4-torsion family, in `t`.
pub const H4: &str = concat!(
    "x^2*y^2*(2*t + 6) + x^2*y*(- 10*t^2 + 44*t - 40) + x^2*(8*t^3 - 80*t^2 + 168*t ",
    "- 79) - 6*x*y^3 + x*y^2*(- t^2 + 6*t - 36) + x*y*(8*t^3 - 22*t^2 + 8*t + 12) ",
    "+ x*(- 7*t^4 + 52*t^3 - 66*t^2 + 2*t + 2) + y^4 + y^3*(- 8*t + 22) + y^2*(7*t^2 ",
    "- 52*t + 68) + y*(- 4*t - 2) + t^2",
);

/// Tangent-ladder `xi` for the 6-torsion family, in `t`.
pub const XI6: &str = concat!(
    "t^3 - 3*t^2*x + 2*x^3 - 5*t^2 + 8*t*x - 2*t*y + 4*x^2 + 4*x*y + 8*t - 4*x + 4*y ",
    "- 4",
);

/// Weak contact function on the 6-torsion curve at `t = 3, s = 4`.
pub const B6: &str = concat!(
    "128*x^9 - 2432*x^8 - 512*x^7*y + 24864*x^7 + 8832*x^6*y - 173184*x^6 ",
    "- 57024*x^5*y + 738248*x^5 + 107168*x^4*y - 1310712*x^4 + 590592*x^3*y ",
    "- 1918138*x^3 - 3714312*x^2*y + 11061932*x^2 + 7111844*x*y - 12378399*x ",
    "- 3541074*y + 3545170",
);

pub const H6: &str = concat!(
    "(68872271/32) - 2528*x^2*y^4 - 512*x*y^5 + 128*y^6 - 64608*x^2*y^3 ",
    "+ 27256*x*y^4 + 9088*y^5 + (1997169/2)*y^2*x^2 + 177536*y^3*x - 201632*y^4 ",
    "- 3294680*x^2*y - (21965953/8)*y^2*x + 352704*y^3 + (448707487/128)*x^2 ",
    "+ 8047460*x*y + (51021297/32)*y^2 - (194729737/32)*x - 3902866*y",
);

/// Tangent-ladder `xi` for the 8-torsion family, in `t`.
pub const XI8: &str = concat!(
    "4*t^12 - 8*t^11 + 5*t^10 + 16*t^9*x - t^9 - 32*t^8*x + 18*t^7*x + 4*t^7*y ",
    "+ 16*t^6*x^2 - 3*t^6*x - 2*t^6*y - 40*t^5*x^2 + 21*t^4*x^2 + 12*t^4*x*y ",
    "- 3*t^3*x^2 - 4*t^3*x*y - 16*t^2*x^3 + 8*t*x^3 + 8*t*x^2*y - 2*x^4 - x^3 ",
    "- 2*x^2*y",
);

/// Weak contact function on the 8-torsion curve at `t = -1, s = 1`.
pub const B8: &str = concat!(
    "512*x^12 - 3840*x^11 - 1536*x^10*y + 53760*x^10 - 4096*x^9*y - 78848*x^9 ",
    "+ 226304*x^8*y - 4409664*x^8 - 2783232*x^7*y + 48818400*x^7 + 20539072*x^6*y ",
    "- 283514336*x^6 - 97078784*x^5*y + 1066337424*x^5 + 304250784*x^4*y ",
    "- 2692293822*x^4 - 639609984*x^3*y + 4513159593*x^3 + 874149354*x^2*y ",
    "- 4813270128*x^2 - 702018576*x*y + 2958279813*x + 250317702*y - 798728850",
);

pub const H8: &str = concat!(
    "(-986999682916161/512) - 16640*x^2*y^6 - 1536*x*y^7 + 512*y^8 - 153664*x^2*y^5 ",
    "+ 288768*x*y^6 + 24704*y^7 + 54601398*x^2*y^4 - 2994208*x*y^5 - 4303600*y^6 ",
    "- 974116559*x^2*y^3 - 272142150*x*y^4 + 69041954*y^5 ",
    "- (157122991069/16)*x^2*y^2 + (45769674189/8)*x*y^3 + (11197406491/8)*y^4 ",
    "+ (41898589232589/128)*y*x^2 + (755425355935/128)*y^2*x ",
    "- (1214565010245/32)*y^3 - (3844005564383585/2048)*x^2 ",
    "- (26329075721469/32)*x*y + (103349774295737/512)*y^2 ",
    "+ (2415502623658065/512)*x + (10759562218989/32)*y",
);
