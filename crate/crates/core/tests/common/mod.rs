//! Randomized properties shared by the property suites and the acceptance run.
#![allow(dead_code)]

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use contact_core::algebra::{
    buchberger, divmod_multi, exact_divide, nf1, nf2, ratio, BiPoly, Monomial, MonomialOrder, Rational,
    UniPoly,
};
use contact_core::cases::{self};
pub use contact_core::cases::Family;
use contact_core::contact::{build_xi, contact_pipeline, verify_contact, MillerXi};
use contact_core::divisor::{construct_b, divisor_sum_point, zero_divisor_rational, EffectiveDivisor, FunctionRep};
use contact_core::elliptic::{EPoint, EllipticCurve};

pub type Outcome = Result<(), String>;
pub type Property = fn(u32) -> Outcome;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        max_global_rejects: 20 * cases,
        ..Config::default()
    })
}

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn bipoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, small_rat()), 0..=max_terms)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(i, j, c)| (Monomial::new(i, j), c))))
}

pub fn nonzero_bipoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    bipoly(max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(UniPoly::new)
}

/// Monic cubic `x^3 + a x^2 + b x + c`, possibly singular.
pub fn cubic() -> impl Strategy<Value = UniPoly> {
    (small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c)| UniPoly::new(vec![c, b, a, Rational::from_integer(1.into())]))
}

pub fn smooth_curve() -> impl Strategy<Value = EllipticCurve> {
    (small_rat(), small_rat(), small_rat()).prop_filter_map("singular", |(a, b, c)| EllipticCurve::new(a, b, c).ok())
}

pub fn order() -> impl Strategy<Value = MonomialOrder> {
    prop::sample::select(vec![
        MonomialOrder::LexYoverX,
        MonomialOrder::LexXoverY,
        MonomialOrder::GradedXoverY,
    ])
}

/// Parameters for one of the worked torsion families.
#[derive(Clone, Debug)]
pub enum FamilyParams {
    Two([Rational; 5]),
    Three(Rational, Rational),
    Four(Rational),
    Six(Rational, Rational),
    Eight(Rational, Rational),
}

impl FamilyParams {
    pub fn build(&self) -> Option<Family> {
        match self {
            FamilyParams::Two([a, b, c1, c2, xo]) => cases::two_torsion(a, b, c1, c2, xo),
            FamilyParams::Three(xo, s) => cases::three_torsion(xo, s),
            FamilyParams::Four(t) => cases::four_torsion(t),
            FamilyParams::Six(t, s) => cases::six_torsion(t, s),
            FamilyParams::Eight(t, s) => cases::eight_torsion(t, s),
        }
        .ok()
    }
}

pub fn family_params() -> impl Strategy<Value = FamilyParams> {
    prop_oneof![
        [small_rat(), small_rat(), small_rat(), small_rat(), small_rat()].prop_map(FamilyParams::Two),
        (small_rat(), small_rat()).prop_map(|(a, b)| FamilyParams::Three(a, b)),
        small_rat().prop_map(FamilyParams::Four),
        (small_rat(), small_rat()).prop_map(|(a, b)| FamilyParams::Six(a, b)),
        (small_rat(), small_rat()).prop_map(|(a, b)| FamilyParams::Eight(a, b)),
    ]
}

/// The worked families at the parameters of the examples.
pub fn example_families() -> Vec<Family> {
    let r = |n: i64| Rational::from_integer(n.into());
    vec![
        cases::two_torsion(&r(1), &r(1), &r(0), &r(-1), &r(0)).unwrap(),
        cases::three_torsion(&r(0), &r(2)).unwrap(),
        cases::four_torsion(&r(3)).unwrap(),
        cases::six_torsion(&r(3), &r(4)).unwrap(),
        cases::eight_torsion(&r(-1), &r(1)).unwrap(),
    ]
}

/// `[k]T + e` with `e` a rational 2-torsion point or `O`.
pub fn torsion_element(fam: &Family, k: i64, e: usize) -> EPoint {
    let c = &fam.curve;
    let mut extras = vec![EPoint::Infinity];
    extras.extend(c.two_torsion());
    let base = c.scalar_mul(k, &fam.t).unwrap();
    c.add(&base, &extras[e % extras.len()]).unwrap()
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

pub fn nf_idempotent_and_linear(cases: u32) -> Outcome {
    let strat = (cubic(), bipoly(6, 6), bipoly(6, 6), unipoly(2), unipoly(2));
    runner(cases)
        .run(&strat, |(f, g, h, bx, by)| {
            let n1 = nf1(&g, &f).unwrap();
            prop_assert_eq!(nf1(&n1, &f).unwrap(), n1.clone());
            let n2 = nf2(&g, &f).unwrap();
            prop_assert_eq!(nf2(&n2, &f).unwrap(), n2.clone());
            let rel = BiPoly::curve_relation(&f);
            let (_, rem) = divmod_multi(&(&n2 - &n1), &[rel], MonomialOrder::LexYoverX);
            prop_assert!(rem.is_zero());
            let sum = &g + &h;
            prop_assert_eq!(nf1(&sum, &f).unwrap(), &n1 + &nf1(&h, &f).unwrap());
            let px = BiPoly::from_uni_x(&bx);
            prop_assert_eq!(nf1(&(&px * &g), &f).unwrap(), nf1(&(&px * &n1), &f).unwrap());
            prop_assert_eq!(nf1(&(&px * &g), &f).unwrap(), &px * &n1);
            let py = BiPoly::from_uni_y(&by);
            prop_assert_eq!(nf2(&(&py * &g), &f).unwrap(), &py * &n2);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn divmod_reconstructs(cases: u32) -> Outcome {
    let strat = (bipoly(6, 8), prop::collection::vec(nonzero_bipoly(3, 4), 1..=3), order());
    runner(cases)
        .run(&strat, |(g, ds, ord)| {
            let (qs, r) = divmod_multi(&g, &ds, ord);
            let mut total = r.clone();
            for (q, d) in qs.iter().zip(&ds) {
                total = &total + &(q * d);
            }
            prop_assert_eq!(total, g);
            let leads: Vec<Monomial> = ds.iter().map(|d| d.leading(ord).unwrap().0).collect();
            for (m, _) in r.terms() {
                prop_assert!(!leads.iter().any(|l| l.divides(m)), "remainder term {:?} is reducible", m);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn exact_divide_round_trip(cases: u32) -> Outcome {
    let strat = (bipoly(4, 6), nonzero_bipoly(4, 6));
    runner(cases)
        .run(&strat, |(g, h)| {
            prop_assert_eq!(exact_divide(&(&g * &h), &h).unwrap(), g);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn norm_is_multiplicative(cases: u32) -> Outcome {
    let strat = (smooth_curve(), unipoly(3), unipoly(2), unipoly(3), unipoly(2));
    runner(cases)
        .run(&strat, |(c, a0, a1, b0, b1)| {
            let a = FunctionRep::new(&c, a0, a1);
            let b = FunctionRep::new(&c, b0, b1);
            prop_assert_eq!(a.mul(&b).norm(), &a.norm() * &b.norm());
            let via_nf = FunctionRep::from_poly(&c, &(&a.poly() * &b.poly()));
            prop_assert_eq!(via_nf.norm(), &a.norm() * &b.norm());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Semi-reduced divisors on the example curves built from torsion elements.
fn torsion_divisor(fam: &Family, picks: &[(i64, usize, u32)]) -> Option<EffectiveDivisor> {
    let mut d = EffectiveDivisor::zero(&fam.curve);
    for &(k, e, m) in picks {
        let p = torsion_element(fam, k, e);
        if p.is_infinity() {
            continue;
        }
        let ramified = p.y().map(|y| y.is_zero()).unwrap_or(false);
        d.add_point(p, if ramified { 1 } else { m }).ok()?;
    }
    if d.is_zero() || !d.is_semi_reduced() {
        return None;
    }
    Some(d)
}

pub fn abel_sum_vanishes(cases: u32) -> Outcome {
    let fams = example_families();
    let strat = (0..fams.len(), prop::collection::vec((0i64..8, 0usize..4, 1u32..=2), 1..=3));
    runner(cases)
        .run(&strat, |(i, picks)| {
            let fam = &fams[i];
            let Some(d) = torsion_divisor(fam, &picks) else {
                return Err(TestCaseError::reject("not semi-reduced"));
            };
            let b = construct_b(&d).map_err(|e| fail(format!("{d}: {e}")))?;
            let (zeros, rest) = zero_divisor_rational(&b).unwrap();
            prop_assert_eq!(rest.degree(), Some(0), "zeros of {} are rational", b);
            let p_o = b.p_o().cloned().unwrap();
            let mut expected = d.clone();
            if !p_o.is_infinity() {
                expected.add_point(p_o, 1).unwrap();
            }
            prop_assert_eq!(&zeros, &expected);
            prop_assert!(divisor_sum_point(&zeros).is_infinity(), "{} sums to a nonzero point", zeros);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn group_law_on_torsion(cases: u32) -> Outcome {
    let fams = example_families();
    let elem = || (-9i64..9, 0usize..4);
    let strat = (0..fams.len(), elem(), elem(), elem());
    runner(cases)
        .run(&strat, |(i, (k1, e1), (k2, e2), (k3, e3))| {
            let fam = &fams[i];
            let c = &fam.curve;
            let p = torsion_element(fam, k1, e1);
            let q = torsion_element(fam, k2, e2);
            let r = torsion_element(fam, k3, e3);
            let add = |a: &EPoint, b: &EPoint| c.add(a, b).unwrap();
            prop_assert_eq!(add(&add(&p, &q), &r), add(&p, &add(&q, &r)));
            prop_assert_eq!(add(&p, &q), add(&q, &p));
            prop_assert!(add(&p, &c.neg(&p)).is_infinity());
            prop_assert!(c.contains(&add(&p, &q)));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn xi_norm_is_power(cases: u32) -> Outcome {
    runner(cases)
        .run(&family_params(), |params| {
            let Some(fam) = params.build() else {
                return Err(TestCaseError::reject("degenerate parameters"));
            };
            let c = &fam.curve;
            let Ok(Some(order)) = c.order_of(&fam.t, 24) else {
                return Err(TestCaseError::reject("T is not torsion here"));
            };
            let mut checked = 0;
            for n in 2..=8u64 {
                if order % n != 0 {
                    continue;
                }
                let p = c.scalar_mul((order / n) as i64, &fam.t).unwrap();
                let xi = build_xi(c, &p, n).map_err(|e| fail(format!("{} n={n}: {e}", fam.name)))?;
                let target = UniPoly::linear_root(p.x().unwrap()).pow(n as u32);
                prop_assert_eq!(xi.norm().monic(), target);
                let (zeros, _) = zero_divisor_rational(&xi).unwrap();
                prop_assert_eq!(zeros.multiplicity(&p), n as u32);
                checked += 1;
            }
            prop_assert!(checked > 0);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn pipeline_norm_identity(cases: u32) -> Outcome {
    runner(cases)
        .run(&family_params(), |params| {
            let Some(fam) = params.build() else {
                return Err(TestCaseError::reject("degenerate parameters"));
            };
            let Ok(res) = contact_pipeline(&MillerXi, &fam.b_d, &fam.t, fam.n) else {
                return Err(TestCaseError::reject("pipeline precondition"));
            };
            prop_assert_eq!(res.report.check_passed("norm_identity"), Some(true), "{}", res.report);
            let again = verify_contact(&res, &fam.b_d, &fam.t);
            prop_assert_eq!(again.check_passed("norm_identity"), Some(true));
            prop_assert_eq!(
                nf1(&res.h_nd, fam.curve.f()).unwrap(),
                res.b_nd.poly(),
                "nf1(h) is b_nd"
            );
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn s_poly(f: &BiPoly, g: &BiPoly, ord: MonomialOrder) -> BiPoly {
    let (mf, cf) = f.leading(ord).unwrap();
    let (mg, cg) = g.leading(ord).unwrap();
    let l = mf.lcm(&mg);
    let one = Rational::from_integer(1.into());
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), &(&one / &cf));
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), &(&one / &cg));
    &a - &b
}

pub fn buchberger_self_reduces(cases: u32) -> Outcome {
    let strat = (prop::collection::vec(nonzero_bipoly(3, 3), 1..=3), order());
    runner(cases)
        .run(&strat, |(gens, ord)| {
            let gb = buchberger(&gens, ord);
            for g in &gens {
                prop_assert!(gb.contains(g), "{} not reduced to zero", g);
            }
            for (i, p) in gb.polys.iter().enumerate() {
                prop_assert!(p.leading(ord).unwrap().1 == Rational::from_integer(1.into()));
                let others: Vec<BiPoly> = gb.polys.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
                if !others.is_empty() {
                    prop_assert_eq!(&divmod_multi(p, &others, ord).1, p, "basis element reducible");
                }
                for q in &gb.polys[i + 1..] {
                    prop_assert!(gb.contains(&s_poly(p, q, ord)));
                }
            }
            prop_assert_eq!(buchberger(&gb.polys, ord), gb);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Name and body of every property counted by the acceptance run.
pub const SUITE: [(&str, Property); 9] = [
    ("NF idempotence and linearity", nf_idempotent_and_linear),
    ("divmod reconstruction", divmod_reconstructs),
    ("exact_divide round-trip", exact_divide_round_trip),
    ("norm multiplicativity", norm_is_multiplicative),
    ("Abel sum of constructed zero divisors", abel_sum_vanishes),
    ("group law on torsion points", group_law_on_torsion),
    ("norm(xi) = c (x - x_T)^n", xi_norm_is_power),
    ("pipeline norm identity", pipeline_norm_identity),
    ("Buchberger self-reduction", buchberger_self_reduces),
];
