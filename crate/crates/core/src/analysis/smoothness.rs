//! Smoothness of projective plane curves via the Jacobian ideal in each
//! standard chart.

use std::fmt;

use crate::algebra::modular::{PrimeField, CERTIFICATE_PRIMES};
use crate::algebra::{buchberger, BiPoly, GroebnerBasis, MonomialOrder};
use crate::error::{Error, Result};
use crate::forms::{dehomogenize, Chart, TernaryForm};

const ORDER: MonomialOrder = MonomialOrder::GradedXoverY;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    /// First chart, in `Z, Y, X` order, whose singular-locus ideal is proper.
    pub witness: Option<(Chart, GroebnerBasis)>,
    pub engine: &'static str,
}

impl fmt::Display for SmoothnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "smooth"),
            Some((chart, gb)) => {
                write!(f, "singular in chart {chart}: <")?;
                for (i, g) in gb.polys.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ">")
            }
        }
    }
}

pub trait SmoothnessEngine: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn analyze(&self, form: &TernaryForm) -> Result<SmoothnessVerdict>;
}

/// Reduced Gröbner bases over the rationals in all three charts.
pub struct GroebnerEngine;

/// Unit-ideal certificates modulo large primes; charts left uncertified go
/// through the exact computation of [`GroebnerEngine`].
pub struct ModularEngine;

/// `(F, F_u, F_v)` in the chart, with primitive integer coefficients.
fn jacobian_generators(form: &TernaryForm, chart: Chart) -> [BiPoly; 3] {
    let g = dehomogenize(&form.primitive(), chart);
    let gx = g.diff_x();
    let gy = g.diff_y();
    [g, gx, gy]
}

fn check_form(form: &TernaryForm) -> Result<()> {
    if form.is_zero() {
        return Err(Error::InvalidParameter("the zero form defines no curve".into()));
    }
    Ok(())
}

fn exact_verdict(form: &TernaryForm, charts: &[Chart], engine: &'static str) -> SmoothnessVerdict {
    let bases: Vec<GroebnerBasis> = std::thread::scope(|s| {
        let handles: Vec<_> = charts
            .iter()
            .map(|&chart| s.spawn(move || buchberger(&jacobian_generators(form, chart), ORDER)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("chart worker"))
            .collect()
    });
    let witness = charts
        .iter()
        .zip(bases)
        .find(|(_, gb)| !gb.is_unit())
        .map(|(c, gb)| (*c, gb));
    SmoothnessVerdict {
        smooth: witness.is_none(),
        witness,
        engine,
    }
}

impl SmoothnessEngine for GroebnerEngine {
    fn name(&self) -> &'static str {
        "groebner"
    }

    fn describe(&self) -> &'static str {
        "exact Buchberger over Q in the charts Z=1, Y=1, X=1"
    }

    fn analyze(&self, form: &TernaryForm) -> Result<SmoothnessVerdict> {
        check_form(form)?;
        Ok(exact_verdict(form, &Chart::ALL, self.name()))
    }
}

/// Charts whose singular-locus ideal is the unit ideal modulo `p`.
fn certified_charts(prim: &TernaryForm, p: u64) -> Vec<Chart> {
    let field = PrimeField::new(p);
    Chart::ALL
        .iter()
        .copied()
        .filter(|&chart| {
            let g = dehomogenize(prim, chart);
            let Some(gp) = field.reduce_poly(&g, ORDER) else {
                return false;
            };
            let gens = [field.diff(&gp, true, ORDER), field.diff(&gp, false, ORDER), gp];
            field.is_unit_ideal(&gens, ORDER)
        })
        .collect()
}

/// Prime and charts certified by it, choosing the prime covering the most
/// charts. A singular point over the algebraic closure has integral
/// coordinates at a prime above `p` in some chart, and survives reduction
/// there; so charts certified by one common `p` need no further work and the
/// rest are settled exactly.
fn best_certificate(form: &TernaryForm) -> (u64, Vec<Chart>) {
    let prim = form.primitive();
    let mut best = (CERTIFICATE_PRIMES[0], Vec::new());
    for &p in &CERTIFICATE_PRIMES {
        let charts = certified_charts(&prim, p);
        if charts.len() > best.1.len() {
            best = (p, charts);
        }
        if best.1.len() == Chart::ALL.len() {
            break;
        }
    }
    best
}

/// A prime modulo which the curve is smooth in every chart, which proves
/// smoothness over the algebraic closure.
pub fn modular_certificate(form: &TernaryForm) -> Option<u64> {
    let (p, charts) = best_certificate(form);
    (charts.len() == Chart::ALL.len()).then_some(p)
}

impl SmoothnessEngine for ModularEngine {
    fn name(&self) -> &'static str {
        "modular"
    }

    fn describe(&self) -> &'static str {
        "unit-ideal certificates mod primes near 2^31, exact work on the remaining charts"
    }

    fn analyze(&self, form: &TernaryForm) -> Result<SmoothnessVerdict> {
        check_form(form)?;
        let (_, certified) = best_certificate(form);
        let rest: Vec<Chart> = Chart::ALL
            .iter()
            .copied()
            .filter(|c| !certified.contains(c))
            .collect();
        Ok(exact_verdict(form, &rest, self.name()))
    }
}

/// Smoothness with the default engine.
pub fn is_smooth_projective(form: &TernaryForm) -> Result<SmoothnessVerdict> {
    ModularEngine.analyze(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_xy, rat};

    fn form(s: &str) -> TernaryForm {
        TernaryForm::parse(s).unwrap()
    }

    #[test]
    fn conic_and_cusp() {
        for e in [&GroebnerEngine as &dyn SmoothnessEngine, &ModularEngine] {
            assert!(e.analyze(&form("X^2 + Y^2 + Z^2")).unwrap().smooth);
            let v = e.analyze(&form("Z*Y^2 - X^3")).unwrap();
            assert!(!v.smooth);
            let (chart, gb) = v.witness.unwrap();
            assert_eq!(chart, Chart::Z);
            assert!(gb.contains(&parse_xy("x^2").unwrap()));
            assert!(gb.contains(&parse_xy("y").unwrap()));
        }
    }

    #[test]
    fn singular_only_at_infinity() {
        // cusp at [1, 0, 0], seen only in the chart X = 1
        let f = form("X*Y^2 - Z^3");
        for e in [&GroebnerEngine as &dyn SmoothnessEngine, &ModularEngine] {
            let v = e.analyze(&f).unwrap();
            assert_eq!(v.witness.map(|w| w.0), Some(Chart::X));
        }
        assert!(f.is_singular_at(&[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn smooth_cubic_is_certified() {
        let f = form("Y^2*Z - X^3 + X*Z^2");
        assert!(modular_certificate(&f).is_some());
        assert!(is_smooth_projective(&f).unwrap().smooth);
    }

    #[test]
    fn zero_form_is_rejected() {
        assert!(GroebnerEngine.analyze(&TernaryForm::zero(3)).is_err());
    }
}
