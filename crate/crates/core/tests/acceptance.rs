//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use num_traits::Zero;
use proptest::prelude::*;

use common::{small_rat, SUITE};
use contact_core::algebra::{parse_xy, rat, ratio, BiPoly, Rational};
use contact_core::analysis::{zariski_verdict, GroebnerEngine, SmoothnessEngine};
use contact_core::cases::{self, specialize};
use contact_core::contact::{contact_pipeline, smoothing_fix, ContactResult, MillerXi};
use contact_core::elliptic::{EPoint, EllipticCurve};
use contact_core::forms::homogenize;
use contact_core::report::Report;
use contact_core::reproduce::reproduce;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn section(id: &str) -> Result<Report, String> {
    let r = reproduce(id).map_err(|e| format!("{id}: {e}"))?;
    ensure(r.all_passed(), format!("{id} failed: {}", r.failures().join(", ")))?;
    Ok(r)
}

fn run(fam: &cases::Family) -> Result<ContactResult, String> {
    contact_pipeline(&MillerXi, &fam.b_d, &fam.t, fam.n).map_err(|e| format!("{}: {e}", fam.name))
}

/// Coefficient of `(i, j)` after scaling `p` so that `(ri, rj)` has coefficient `target`.
fn normalized(p: &BiPoly, (ri, rj): (u32, u32), target: i64, (i, j): (u32, u32)) -> Rational {
    p.coeff(i, j) * rat(target) / p.coeff(ri, rj)
}

fn params2(v: &[Rational; 5]) -> [(&'static str, Rational); 5] {
    let [a, b, c1, c2, xo] = v.clone();
    [("a", a), ("b", b), ("c1", c1), ("c2", c2), ("xo", xo)]
}

fn two_torsion() -> Check {
    let base = [rat(1), rat(1), rat(0), rat(-1), rat(0)];
    let [a, b, c1, c2, xo] = &base;
    let fam = cases::two_torsion(a, b, c1, c2, xo).map_err(|e| e.to_string())?;
    ensure(fam.curve == EllipticCurve::new(rat(0), rat(-1), rat(0)).unwrap(), "curve is y^2 = x^3 - x")?;
    let res = run(&fam)?;
    let expected = parse_xy("y^2 + 2*x*y - x^2 - 2*y + 2*x - 1").unwrap();
    ensure(res.h_nd.equal_up_to_scalar(&expected), format!("h = {}", res.h_nd))?;
    ensure(
        specialize(cases::H2, &params2(&base)).unwrap().equal_up_to_scalar(&expected),
        "formula at the base parameters",
    )?;
    ensure(res.report.all_passed(), res.report.failures().join(", "))?;

    let mut runner = common::runner(5);
    let seen = std::cell::Cell::new(0u32);
    let strat = [small_rat(), small_rat(), small_rat(), small_rat(), small_rat()];
    let outcome = runner.run(&strat, |v| {
        let p = params2(&v);
        let Ok(fam) = cases::two_torsion(&p[0].1, &p[1].1, &p[2].1, &p[3].1, &p[4].1) else {
            return Err(TestCaseError::reject("singular curve"));
        };
        let Ok(res) = contact_pipeline(&MillerXi, &fam.b_d, &fam.t, 2) else {
            return Err(TestCaseError::reject("degenerate b"));
        };
        let formula = specialize(cases::H2, &p).unwrap();
        prop_assert!(res.h_nd.equal_up_to_scalar(&formula), "{}: {} vs {}", fam.name, res.h_nd, formula);
        seen.set(seen.get() + 1);
        Ok(())
    });
    outcome.map_err(|e| e.to_string())?;
    let seen = seen.get();
    ensure(seen >= 3, format!("only {seen} random specializations ran"))?;
    Ok(format!("h matches at the base point and {seen} random specializations"))
}

fn three_torsion() -> Check {
    let fam = cases::three_torsion(&rat(0), &rat(2)).map_err(|e| e.to_string())?;
    let res = run(&fam)?;
    let p = [("s", rat(2)), ("xo", rat(0))];
    ensure(res.b_nd.poly().equal_up_to_scalar(&specialize(cases::B3, &p).unwrap()), "b_3d differs")?;
    ensure(res.h_nd.equal_up_to_scalar(&specialize(cases::H3, &p).unwrap()), "h_3d differs")?;
    let mut smooth_at = Vec::new();
    for s in [2, 3, 5] {
        let res = run(&cases::three_torsion(&rat(0), &rat(s)).unwrap())?;
        let form = homogenize(&res.h_nd, res.degree()).unwrap();
        if GroebnerEngine.analyze(&form).map_err(|e| e.to_string())?.smooth {
            smooth_at.push(s);
        }
    }
    ensure(!smooth_at.is_empty(), "no smooth member for s in {2, 3, 5}")?;
    section("4.2")?;
    Ok(format!("b, h match; smooth for s in {smooth_at:?}"))
}

fn four_torsion() -> Check {
    let fam = cases::four_torsion(&rat(3)).map_err(|e| e.to_string())?;
    let res = run(&fam)?;
    let p = [("t", rat(3))];
    ensure(res.b_nd.poly().equal_up_to_scalar(&specialize(cases::B4, &p).unwrap()), "b_4d differs")?;
    ensure(res.h_nd.equal_up_to_scalar(&specialize(cases::H4, &p).unwrap()), "h_4d differs")?;
    let h = homogenize(&res.h_nd, 4).unwrap();
    ensure(h.is_singular_at(&[rat(1), rat(0), rat(0)]), "[1,0,0] is not singular")?;
    ensure(!GroebnerEngine.analyze(&h).unwrap().smooth, "h_4d is smooth")?;
    let fixed = smoothing_fix(&res.h_nd, &fam.curve, &parse_xy(cases::FIX4).unwrap());
    ensure(
        GroebnerEngine.analyze(&homogenize(&fixed, 4).unwrap()).unwrap().smooth,
        "h + (x + y + 1)(y^2 - f) is singular",
    )?;
    section("4.3")?;
    Ok("b, h match; h singular at [1,0,0]; fixed curve smooth".into())
}

fn six_torsion() -> Check {
    let fam = cases::six_torsion(&rat(3), &rat(4)).map_err(|e| e.to_string())?;
    let res = run(&fam)?;
    let b = res.b_nd.poly();
    ensure(b.equal_up_to_scalar(&parse_xy(cases::B6).unwrap()), "b_6d differs")?;
    ensure(res.h_nd.equal_up_to_scalar(&parse_xy(cases::H6).unwrap()), "h_6d differs")?;
    ensure(normalized(&b, (9, 0), 128, (8, 0)) == rat(-2432), "x^8 coefficient")?;
    ensure(
        normalized(&res.h_nd, (0, 6), 128, (0, 0)) == ratio(68872271, 32),
        "constant term of h_6d",
    )?;
    let r = section("4.4")?;
    ensure(r.check_passed("fix.smooth") == Some(true), "fixed curve not certified")?;
    Ok("b, h match one global scalar; fixed curve smooth".into())
}

fn eight_torsion() -> Check {
    let start = Instant::now();
    let r = section("4.5")?;
    let elapsed = start.elapsed();
    let fam = cases::eight_torsion(&rat(-1), &rat(1)).map_err(|e| e.to_string())?;
    let res = run(&fam)?;
    let b = res.b_nd.poly();
    ensure(b.equal_up_to_scalar(&parse_xy(cases::B8).unwrap()), "b_8d differs")?;
    ensure(res.h_nd.equal_up_to_scalar(&parse_xy(cases::H8).unwrap()), "h_8d differs")?;
    ensure(b.total_degree() == Some(12) && !b.coeff(12, 0).is_zero(), "512 x^12 leads b_8d")?;
    ensure(
        normalized(&res.h_nd, (0, 8), 512, (0, 0)) == ratio(-986999682916161, 512),
        "constant term of h_8d",
    )?;
    ensure(r.check_passed("fix.smooth") == Some(true), "fixed curve not certified")?;
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("b, h match; fixed curve smooth; {:.3} s", elapsed.as_secs_f64()))
}

fn orders(curve: &EllipticCurve, t: &EPoint, ks: &[i64]) -> Vec<Option<u64>> {
    ks.iter()
        .map(|&k| curve.order_of(&curve.scalar_mul(k, t).unwrap(), 24).unwrap())
        .collect()
}

fn torsion_tables() -> Check {
    let e6 = cases::six_torsion(&rat(3), &rat(4)).unwrap();
    ensure(orders(&e6.curve, &e6.t, &[1, 2, 3]) == [Some(6), Some(3), Some(2)], "E6 orders")?;
    let e8 = cases::eight_torsion(&rat(-1), &rat(1)).unwrap();
    ensure(orders(&e8.curve, &e8.t, &[1, 2]) == [Some(8), Some(4)], "E8 orders")?;
    ensure(
        e8.curve.scalar_mul(4, &e8.t).unwrap() == EPoint::affine(rat(2), rat(0)),
        "[4]T = (2, 0) on E8",
    )?;
    ensure(e8.curve.two_torsion().contains(&EPoint::affine(rat(2), rat(0))), "(2, 0) is 2-torsion")?;
    let e4 = cases::four_torsion(&rat(3)).unwrap();
    ensure(orders(&e4.curve, &e4.t, &[1, 2]) == [Some(4), Some(2)], "E4 orders")?;
    Ok("(6,3,2), (8,4) with (2,0), (4,2)".into())
}

fn splitting_tables() -> Check {
    let mut rows = Vec::new();
    for (id, n, expected, name) in [
        ("5.1", 4, "(4,2,1)", "triple"),
        ("5.2", 6, "(6,3,2,1)", "quartet"),
        ("5.3", 8, "(8,4,2,1)", "quartet"),
    ] {
        let r = section(id)?;
        ensure(r.get("splitting") == Some(expected), format!("{id}: {:?}", r.get("splitting")))?;
        ensure(
            r.get("verdict") == Some(&format!("Zariski {name} distinguished")[..]),
            format!("{id}: {:?}", r.get("verdict")),
        )?;
        let ds: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let configs: Vec<(String, u64)> = ds.iter().map(|d| (format!("C{d}"), *d)).collect();
        let z = zariski_verdict(n, &configs).map_err(|e| e.to_string())?;
        ensure(z.distinguished, format!("n = {n} not distinguished"))?;
        rows.push(expected);
    }
    Ok(rows.join(", "))
}

fn property_suites() -> Check {
    let mut failed = Vec::new();
    for (name, prop) in SUITE {
        if let Err(e) = prop(200) {
            failed.push(format!("{name}: {e}"));
        }
    }
    ensure(failed.is_empty(), failed.join("; "))?;
    Ok(format!("{} suites x 200 cases", SUITE.len()))
}

fn scope_of_tuple_verdicts() -> Check {
    // the verdict is a function of the splitting numbers alone
    let repeated = zariski_verdict(4, &[("A".into(), 2), ("B".into(), 2), ("C".into(), 4)]).unwrap();
    ensure(!repeated.distinguished, "repeated splitting numbers counted as distinguished")?;
    let same_orders = zariski_verdict(4, &[("X".into(), 1), ("Y".into(), 2), ("Z".into(), 4)]).unwrap();
    let r = section("5.1")?;
    ensure(
        r.get("verdict") == Some(same_orders.verdict().as_str()),
        "table verdict depends on more than the orders",
    )?;
    Ok("arithmetic table and pairwise-distinct verdict only; embedded topology is not recomputed".into())
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("2-torsion pipeline and formula", two_torsion),
        ("3-torsion example and smoothness", three_torsion),
        ("4-torsion example, singular point, fixed curve", four_torsion),
        ("6-torsion example and fixed curve", six_torsion),
        ("8-torsion example, fixed curve, runtime", eight_torsion),
        ("torsion tables", torsion_tables),
        ("splitting-number tables", splitting_tables),
        ("property suites", property_suites),
        ("scope of the tuple verdicts", scope_of_tuple_verdicts),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: pass  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria pass");
}
