//! From a function `b_d` vanishing on `d + iota(T)` to an `n`-contact curve.

use num_traits::{One, Zero};

use crate::algebra::{nf1, nf2, BiPoly, Rational, UniPoly};
use crate::divisor::{zero_divisor_rational, EffectiveDivisor, FunctionRep};
use crate::elliptic::{EPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::report::Report;

use super::xi::{build_xi_with, MillerXi, XiBuilder};

/// Output of the weak contact step: `(b_nd) = n d - n deg(d) O`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakContact {
    pub b_nd: FunctionRep,
    pub xi: FunctionRep,
    pub t: EPoint,
    pub n: u64,
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactResult {
    pub curve: EllipticCurve,
    pub t: EPoint,
    pub n: u64,
    pub d: u32,
    pub xi: FunctionRep,
    pub b_nd: FunctionRep,
    /// `NF_2` representative, x-degree at most 2.
    pub h_nd: BiPoly,
    pub report: Report,
}

impl ContactResult {
    /// Degree of the contact curve, `n d / 3`.
    pub fn degree(&self) -> u32 {
        (self.n as u32 * self.d) / 3
    }
}

pub fn weak_contact(b_d: &FunctionRep, t: &EPoint, n: u64) -> Result<WeakContact> {
    weak_contact_with(&MillerXi, b_d, t, n)
}

/// `NF_1(b_d^n xi) / (x - x_T)^n`, normalized.
pub fn weak_contact_with(
    builder: &dyn XiBuilder,
    b_d: &FunctionRep,
    t: &EPoint,
    n: u64,
) -> Result<WeakContact> {
    let curve = b_d.curve();
    if !curve.contains(t) {
        let (x, y) = t.coords().ok_or(Error::InfinityPoint)?;
        return Err(Error::PointNotOnCurve {
            point: format!("({x}, {y})"),
        });
    }
    let pole = b_d
        .pole_order()
        .ok_or_else(|| Error::InvalidParameter("b_d is the zero function".into()))?;
    if pole < 2 {
        return Err(Error::InvalidParameter("b_d is constant".into()));
    }
    let xi = build_xi_with(builder, curve, t, n)?;
    let n32 = u32::try_from(n).map_err(|_| Error::InvalidParameter(format!("n = {n} too large")))?;
    let prod = b_d.pow(n32).mul(&xi);
    let b_nd = prod
        .div_uni(&UniPoly::linear_root(t.x()?).pow(n32))?
        .canonical();
    Ok(WeakContact {
        b_nd,
        xi,
        t: t.clone(),
        n,
        d: pole - 1,
    })
}

/// Reduces the weak contact function to the curve `h_nd = NF_2(b_nd)`.
pub fn contact_from_weak(weak: &WeakContact) -> Result<ContactResult> {
    let nd = weak.n * weak.d as u64;
    if !nd.is_multiple_of(3) {
        return Err(Error::DegreeMismatch(format!(
            "n d = {nd} is not divisible by 3"
        )));
    }
    let curve = weak.b_nd.curve();
    let h = nf2(&weak.b_nd.poly(), curve.f())?;
    let r = (nd / 3) as u32;
    let mut report = Report::new(format!("{}-contact curve of degree {r}", weak.n));
    report
        .value("n", weak.n)
        .value("d", weak.d)
        .value("degree", r);
    let lead = h.coeff(0, r);
    report.check(
        "o_avoidance",
        !lead.is_zero(),
        format!("coefficient of y^{r} is {lead}"),
    );
    Ok(ContactResult {
        curve: curve.clone(),
        t: weak.t.clone(),
        n: weak.n,
        d: weak.d,
        xi: weak.xi.clone(),
        b_nd: weak.b_nd.clone(),
        h_nd: h,
        report,
    })
}

/// `build_xi`, `weak_contact`, `contact_from_weak` and `verify_contact` in
/// sequence; the verification lands in the result's report.
pub fn contact_pipeline(
    builder: &dyn XiBuilder,
    b_d: &FunctionRep,
    t: &EPoint,
    n: u64,
) -> Result<ContactResult> {
    let weak = weak_contact_with(builder, b_d, t, n)?;
    let mut res = contact_from_weak(&weak)?;
    let mut report = verify_contact(&res, b_d, t);
    report.title = res.report.title.clone();
    res.report = report;
    Ok(res)
}

/// `c` with `a = c b`, if the two are proportional.
fn proportionality(a: &UniPoly, b: &UniPoly) -> Option<Rational> {
    if b.is_zero() {
        return None;
    }
    let c = a.leading_coeff() / b.leading_coeff();
    (a == &b.scale(&c)).then_some(c)
}

fn remove_point(d: &EffectiveDivisor, p: &EPoint) -> Option<EffectiveDivisor> {
    if d.multiplicity(p) == 0 {
        return None;
    }
    let mut left = true;
    let pts = d.points().filter_map(|(q, m)| {
        if left && q == p {
            left = false;
            (m > 1).then(|| (q.clone(), m - 1))
        } else {
            Some((q.clone(), m))
        }
    });
    EffectiveDivisor::from_points(d.curve(), pts.collect::<Vec<_>>()).ok()
}

/// Checks the contact contract of `res` against the input `b_d` and `T`.
pub fn verify_contact(res: &ContactResult, b_d: &FunctionRep, t: &EPoint) -> Report {
    let mut r = Report::new(format!("verification of the {}-contact curve", res.n));
    let curve = &res.curve;
    let n = res.n as u32;
    let nd = n * res.d;
    r.value("n", res.n).value("d", res.d);

    let h_class = match nf1(&res.h_nd, curve.f()) {
        Ok(p) => FunctionRep::from_poly(curve, &p),
        Err(e) => {
            r.check("norm_identity", false, e.to_string());
            return r;
        }
    };

    // (a) norm(h) (x - x_T)^n = c norm(b_d)^n
    let norm_ok = match t.x() {
        Ok(xt) => {
            let lhs = &h_class.norm() * &UniPoly::linear_root(xt).pow(n);
            let rhs = b_d.norm().pow(n);
            match proportionality(&lhs, &rhs) {
                Some(c) if !c.is_zero() => {
                    r.value("scalar_c", &c);
                    r.check("norm_identity", true, "");
                    true
                }
                _ => {
                    r.check("norm_identity", false, "norms are not proportional");
                    false
                }
            }
        }
        Err(e) => {
            r.check("norm_identity", false, e.to_string());
            false
        }
    };

    // (b) the curve avoids O
    let deg = nd / 3;
    let lead = if nd.is_multiple_of(3) {
        res.h_nd.coeff(0, deg)
    } else {
        Rational::zero()
    };
    r.check(
        "o_avoidance",
        nd.is_multiple_of(3) && !lead.is_zero(),
        format!("coefficient of y^{deg} is {lead}"),
    );

    // (c) degree
    let actual = res.h_nd.total_degree().unwrap_or(0);
    r.value("degree", actual);
    r.check(
        "projective_degree",
        nd.is_multiple_of(3) && actual == deg,
        format!("expected {deg}, found {actual}"),
    );

    r.check(
        "same_class",
        h_class.poly() == res.b_nd.poly(),
        "NF_1(h) against b_nd",
    );

    // the weak curve b_nd = 0 meets E in n d + s O
    if let Some(d1) = res.b_nd.projective_degree() {
        let s = 3 * d1 as i64 - nd as i64;
        r.value("weak_degree", d1).value("o_multiplicity", s);
        r.check("weak_multiplicity", s >= 0, format!("3 * {d1} - {nd} = {s}"));
    }

    // (d) rational support: zeros of b_nd are exactly n d
    let support = zero_divisor_rational(b_d).ok().and_then(|(zeros, rest)| {
        if rest != UniPoly::one() {
            return None;
        }
        remove_point(&zeros, &curve.neg(t))
    });
    match support {
        Some(dd) if norm_ok => {
            let got = zero_divisor_rational(&h_class);
            let ok = matches!(&got, Ok((z, rest)) if rest == &UniPoly::one() && z == &dd.scaled(n));
            r.value("divisor", &dd);
            r.check("rational_support", ok, format!("zeros equal {n} times the divisor"));
        }
        Some(_) => {
            r.check("rational_support", false, "skipped after norm failure");
        }
        None => {
            r.value("rational_support", "not applicable");
        }
    }
    r
}

/// `h + q (y^2 - f)`, the same function on the curve.
pub fn smoothing_fix(h: &BiPoly, curve: &EllipticCurve, q: &BiPoly) -> BiPoly {
    h + &(q * &curve.relation())
}

/// Multipliers tried by the automatic smoothing search, in order.
pub fn smoothing_candidates(max_degree: u32) -> Vec<BiPoly> {
    let x = BiPoly::x();
    let y = BiPoly::y();
    let one = BiPoly::one();
    let mut out = vec![BiPoly::zero(), one.clone()];
    for k in [1, 3, 5] {
        if k <= max_degree {
            out.push(&(&x.pow(k) + &y.pow(k)) + &one);
        }
    }
    for deg in 1..=max_degree.min(4) {
        for i in (0..=deg).rev() {
            out.push(BiPoly::term(Rational::one(), i, deg - i));
        }
    }
    out
}

/// True if `g` still cuts out a curve of degree `r` avoiding `O`.
pub fn keeps_contact_shape(g: &BiPoly, r: u32) -> bool {
    g.total_degree() == Some(r) && !g.coeff(0, r).is_zero()
}
