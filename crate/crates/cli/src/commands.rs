//! One report per pipeline operation; shared by the subcommands and by
//! session files.

use contact_core::algebra::{parse_rational, parse_xy, BiPoly, UniPoly};
use contact_core::analysis::{modular_certificate, zariski_verdict, SmoothnessEngine, ZariskiReport};
use contact_core::contact::{
    build_xi_with, contact_pipeline, keeps_contact_shape, smoothing_candidates, smoothing_fix,
    XiBuilder,
};
use contact_core::divisor::{construct_b, verify_representation, EffectiveDivisor, FunctionRep};
use contact_core::elliptic::{multiple_order, EPoint, EllipticCurve};
use contact_core::forms::{homogenize, TernaryForm};
use contact_core::report::Report;
use contact_core::{Error, Result};

/// What to add to `h` before testing smoothness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fix {
    None,
    Auto,
    Multiplier(BiPoly),
}

/// `y^2 = f(x)` with `f` a monic cubic.
pub fn parse_curve(text: &str) -> Result<EllipticCurve> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| Error::InvalidParameter(format!("expected `y^2 = f(x)`, got `{text}`")))?;
    if lhs.split_whitespace().collect::<String>() != "y^2" {
        return Err(Error::InvalidParameter(format!(
            "left side must be y^2, got `{}`",
            lhs.trim()
        )));
    }
    let f = contact_core::algebra::poly_parse(rhs, &["x"])?;
    let f = f.y_coeffs().into_iter().next().unwrap_or_else(UniPoly::zero);
    EllipticCurve::from_poly(&f)
}

/// `(x, y)` with rational coordinates, or `O`.
pub fn parse_point(text: &str) -> Result<EPoint> {
    let t = text.trim();
    if t == "O" {
        return Ok(EPoint::Infinity);
    }
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidParameter(format!("expected `(x, y)`, got `{t}`")))?;
    let (x, y) = inner
        .split_once(',')
        .ok_or_else(|| Error::InvalidParameter(format!("expected `(x, y)`, got `{t}`")))?;
    let coord = |s: &str| {
        parse_rational(s).ok_or_else(|| Error::InvalidParameter(format!("`{}` is not a rational number", s.trim())))
    };
    Ok(EPoint::affine(coord(x)?, coord(y)?))
}

pub fn point_on(curve: &EllipticCurve, p: EPoint) -> Result<EPoint> {
    match p {
        EPoint::Infinity => Ok(EPoint::Infinity),
        EPoint::Affine { x, y } => curve.point(x, y),
    }
}

/// `{ (x, y): m, ... }`.
pub fn parse_divisor(curve: &EllipticCurve, text: &str) -> Result<EffectiveDivisor> {
    let bad = || Error::InvalidParameter(format!("expected `{{ (x, y): m, ... }}`, got `{}`", text.trim()));
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut pts = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(bad)?;
        let p = point_on(curve, parse_point(&rest[..=close])?)?;
        let after = rest[close + 1..].trim_start().strip_prefix(':').ok_or_else(bad)?;
        let (m, tail) = match after.find(',') {
            Some(i) => (&after[..i], &after[i + 1..]),
            None => (after, ""),
        };
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        pts.push((p, m));
        rest = tail.trim();
    }
    EffectiveDivisor::from_points(curve, pts)
}

pub fn parse_orders(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("`{}` is not a positive integer", s.trim())))
        })
        .collect()
}

pub fn torsion_report(curve: &EllipticCurve, p: &EPoint, bound: u64) -> Result<Report> {
    let mut r = Report::new(format!("torsion of {p}"));
    r.value("curve", curve).value("point", p);
    match curve.order_of(p, bound)? {
        Some(order) => {
            r.value("order", order);
            for k in 1..order as i64 {
                let q = curve.scalar_mul(k, p)?;
                r.value(format!("[{k}]P"), format!("{q}  order {}", multiple_order(order, k)));
            }
        }
        None => {
            r.value("order", format!("none up to {bound}"));
        }
    }
    Ok(r)
}

pub fn xi_report(curve: &EllipticCurve, t: &EPoint, n: u64, builder: &dyn XiBuilder) -> Result<Report> {
    let xi = build_xi_with(builder, curve, t, n)?;
    let mut r = Report::new(format!("function with divisor {n} (T - O)"));
    r.value("curve", curve)
        .value("T", t)
        .value("n", n)
        .value("strategy", builder.name())
        .value("xi", &xi)
        .value("norm", xi.norm());
    Ok(r)
}

pub fn smooth_report(form: &TernaryForm, engine: &dyn SmoothnessEngine) -> Result<Report> {
    let v = engine.analyze(form)?;
    let mut r = Report::new("projective smoothness");
    r.value("form", form).value("engine", v.engine);
    if let Some((chart, gb)) = &v.witness {
        r.value("witness.chart", chart);
        let polys: Vec<String> = gb.polys.iter().map(|g| g.to_string()).collect();
        r.value("witness.basis", format!("[{}]", polys.join(", ")));
    }
    r.check("smooth", v.smooth, v.to_string());
    Ok(r)
}

pub fn zariski_report(n: u64, orders: &[u64]) -> Result<ZariskiReport> {
    let configs: Vec<(String, u64)> = orders
        .iter()
        .enumerate()
        .map(|(i, d)| (format!("D{}", i + 1), *d))
        .collect();
    zariski_verdict(n, &configs)
}

pub fn construct_report(d: &EffectiveDivisor) -> Result<Report> {
    let b = construct_b(d)?;
    let mut r = Report::new(format!("function through {d}"));
    r.value("b", &b);
    if let Some(p) = b.p_o() {
        r.value("P_o", p);
    }
    let check = verify_representation(d, &b)?;
    r.absorb("verify", &check);
    Ok(r)
}

/// The full contact chain, with an optional smoothing step.
pub fn contact_report(
    curve: &EllipticCurve,
    b: &BiPoly,
    t: &EPoint,
    n: u64,
    fix: &Fix,
    builder: &dyn XiBuilder,
    engine: &dyn SmoothnessEngine,
) -> Result<Report> {
    let b_d = FunctionRep::from_poly(curve, b);
    let res = contact_pipeline(builder, &b_d, t, n)?;
    let mut r = Report::new(res.report.title.clone());
    r.value("curve", curve)
        .value("T", t)
        .value("b", &b_d)
        .value("xi", &res.xi)
        .value("b_nd", &res.b_nd)
        .value("h", &res.h_nd);
    r.extend(&res.report);
    let deg = res.degree();
    let q = match fix {
        Fix::None => return Ok(r),
        Fix::Multiplier(q) => Some(q.clone()),
        Fix::Auto => smoothing_candidates(deg.saturating_sub(3))
            .into_iter()
            .find(|q| {
                let g = smoothing_fix(&res.h_nd, curve, q);
                keeps_contact_shape(&g, deg)
                    && homogenize(&g, deg).is_ok_and(|f| modular_certificate(&f).is_some())
            }),
    };
    let Some(q) = q else {
        r.check("fix.smooth", false, "no multiplier in the search list gives a smooth curve");
        return Ok(r);
    };
    let fixed = smoothing_fix(&res.h_nd, curve, &q);
    r.value("fix.q", &q).value("fix.h", &fixed);
    r.check(
        "fix.degree",
        keeps_contact_shape(&fixed, deg),
        format!("degree {deg}, avoiding O"),
    );
    let v = engine.analyze(&homogenize(&fixed, fixed.total_degree().unwrap_or(0).max(deg))?)?;
    r.check("fix.smooth", v.smooth, v.to_string());
    Ok(r)
}

/// A polynomial in `x, y`, shared by the flags and the session grammar.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    parse_xy(text)
}
