//! Ternary forms in `X, Y, Z` and the passage to and from affine charts.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::format::{monomial_string, write_terms};
use crate::algebra::parse::parse_sparse;
use crate::algebra::rational::primitive_scale;
use crate::algebra::{BiPoly, Monomial, Rational};
use crate::error::{Error, Result};

/// Standard affine chart. The two remaining coordinates become the `x` and
/// `y` of a [`BiPoly`] in their natural order: `Z = 1` gives `(X, Y)`,
/// `Y = 1` gives `(X, Z)` and `X = 1` gives `(Y, Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    Z,
    Y,
    X,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::Z, Chart::Y, Chart::X];

    /// Index of the coordinate set to one.
    fn fixed(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    fn free(self) -> (usize, usize) {
        match self {
            Chart::Z => (0, 1),
            Chart::Y => (0, 2),
            Chart::X => (1, 2),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Chart::Z => "Z=1",
            Chart::Y => "Y=1",
            Chart::X => "X=1",
        };
        f.write_str(s)
    }
}

pub type Exps = [u32; 3];

/// Homogeneous polynomial in `X, Y, Z` of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exps, Rational>,
}

const VARS: [&str; 3] = ["X", "Y", "Z"];

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Errors with `NotHomogeneous` unless all terms share one degree.
    /// An empty term list gives the zero form of degree 0.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Exps, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(|e| e.iter().sum::<u32>());
        let degree = degrees.next().unwrap_or(0);
        if degrees.any(|d| d != degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(TernaryForm { degree, terms: map })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let sp = parse_sparse(text, &VARS)?;
        TernaryForm::from_terms(sp.into_iter().map(|(e, c)| ([e[0], e[1], e[2]], c)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exps) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TernaryForm::zero(self.degree);
        }
        TernaryForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Primitive integer coefficients.
    pub fn primitive(&self) -> Self {
        self.scale(&primitive_scale(self.terms.values()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch(format!(
                "forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            *out.entry(*e).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(TernaryForm { degree, terms: out })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<Exps, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        TernaryForm {
            degree: self.degree + other.degree,
            terms: out,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TernaryForm::from_terms([([0, 0, 0], Rational::one())]).expect("constant");
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to coordinate `i` (0 = X, 1 = Y, 2 = Z).
    pub fn partial(&self, i: usize) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                out.insert(f, c * Rational::from_integer(e[i].into()));
            }
        }
        TernaryForm {
            degree: self.degree.saturating_sub(1),
            terms: out,
        }
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..3 {
                for _ in 0..e[k] {
                    t *= &p[k];
                }
            }
            acc += t;
        }
        acc
    }

    /// `F(X_{perm[0]}, X_{perm[1]}, X_{perm[2]})`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = [0; 3];
            for k in 0..3 {
                f[perm[k]] = e[k];
            }
            (f, c.clone())
        });
        let mut out = TernaryForm::from_terms(terms).expect("permutation keeps degrees");
        out.degree = self.degree;
        out
    }

    /// True if `F` and all its partials vanish at the projective point.
    pub fn is_singular_at(&self, p: &[Rational; 3]) -> bool {
        self.eval(p).is_zero() && (0..3).all(|i| self.partial(i).eval(p).is_zero())
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // lexicographic X > Y > Z, descending
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.cmp(a));
        write_terms(
            f,
            keys.into_iter()
                .map(|e| (self.terms[e].clone(), monomial_string(&VARS, e))),
        )
    }
}

/// The degree-`deg` form agreeing with `p` on the chart `Z = 1`.
pub fn homogenize(p: &BiPoly, deg: u32) -> Result<TernaryForm> {
    let actual = p.total_degree().unwrap_or(0);
    if deg < actual {
        return Err(Error::DegreeTooSmall {
            target: deg,
            actual,
        });
    }
    let mut out = TernaryForm::from_terms(
        p.terms()
            .map(|(m, c)| ([m.x, m.y, deg - m.x - m.y], c.clone())),
    )?;
    out.degree = deg;
    Ok(out)
}

/// Sets the chart's coordinate to one.
pub fn dehomogenize(form: &TernaryForm, chart: Chart) -> BiPoly {
    let (i, j) = chart.free();
    debug_assert!(chart.fixed() != i && chart.fixed() != j);
    BiPoly::from_terms(
        form.terms
            .iter()
            .map(|(e, c)| (Monomial::new(e[i], e[j]), c.clone())),
    )
}
