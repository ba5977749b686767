//! Buchberger's algorithm over the rationals.
//!
//! Internally polynomials are kept with primitive integer coefficients and
//! reduced fraction-free, which keeps coefficient growth far below what
//! rational arithmetic produces. Pairs are pruned with the Gebauer–Möller
//! update and selected by sugar degree.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bipoly::{BiPoly, Monomial};
use super::order::MonomialOrder;
use super::rational::{primitive_scale, Rational};

#[derive(Clone, Debug)]
struct IPoly {
    /// Sorted descending in the active order, no zero coefficients.
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn from_bipoly(p: &BiPoly, order: MonomialOrder) -> IPoly {
        let coeffs: Vec<&Rational> = p.terms().map(|(_, c)| c).collect();
        let s = primitive_scale(coeffs.iter().copied());
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| {
                let v = c * &s;
                debug_assert!(v.denom().is_one());
                (*m, v.numer().clone())
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let sugar = p.total_degree().unwrap_or(0);
        let mut ip = IPoly { terms, sugar };
        ip.normalize();
        ip
    }

    fn to_bipoly(&self) -> BiPoly {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, Rational::from_integer(c.clone()) / &lc)),
        )
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE
    }

    /// Divide out the content and make the leading coefficient positive.
    fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    /// `a * self - b * m * other`, merging in `order`.
    fn combine(
        &self,
        a: &BigInt,
        other: &IPoly,
        b: &BigInt,
        m: &Monomial,
        order: MonomialOrder,
    ) -> Vec<(Monomial, BigInt)> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let lhs = &self.terms;
        let rhs = &other.terms;
        while i < lhs.len() || j < rhs.len() {
            let ord = match (lhs.get(i), rhs.get(j)) {
                (Some(l), Some(r)) => order.cmp(&l.0, &r.0.mul(m)),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push((lhs[i].0, a * &lhs[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((rhs[j].0.mul(m), -(b * &rhs[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a * &lhs[i].1 - b * &rhs[j].1;
                    if !c.is_zero() {
                        out.push((lhs[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

fn s_poly(f: &IPoly, g: &IPoly, order: MonomialOrder) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let tf = f.lm().quotient_of(&l).expect("lcm");
    let tg = g.lm().quotient_of(&l).expect("lcm");
    let cf = &f.terms[0].1;
    let cg = &g.terms[0].1;
    let gg = cf.gcd(cg);
    let af = cg / &gg;
    let ag = cf / &gg;
    let shifted = IPoly {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&tf), c.clone())).collect(),
        sugar: 0,
    };
    let terms = shifted.combine(&af, g, &ag, &tg, order);
    let mut p = IPoly {
        terms,
        sugar: (f.sugar + tf.degree()).max(g.sugar + tg.degree()),
    };
    p.normalize();
    p
}

/// Full (top and tail) fraction-free reduction of `p` by `basis`.
fn reduce_full(mut p: IPoly, basis: &[&IPoly], order: MonomialOrder) -> IPoly {
    let mut i = 0;
    let mut steps = 0u32;
    while i < p.terms.len() {
        let (m, c) = (p.terms[i].0, p.terms[i].1.clone());
        let hit = basis
            .iter()
            .find_map(|g| g.lm().quotient_of(&m).map(|t| (*g, t)));
        match hit {
            Some((g, t)) => {
                let lc = &g.terms[0].1;
                let gg = c.gcd(lc);
                let a = lc / &gg;
                let b = &c / &gg;
                p.terms = p.combine(&a, g, &b, &t, order);
                p.sugar = p.sugar.max(g.sugar + t.degree());
                steps += 1;
                if steps.is_multiple_of(8) {
                    p.normalize();
                }
            }
            None => i += 1,
        }
    }
    p.normalize();
    p
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    /// Monic, sorted by leading monomial ascending.
    pub polys: Vec<BiPoly>,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn normal_form(&self, p: &BiPoly) -> BiPoly {
        if self.polys.is_empty() {
            return p.clone();
        }
        super::division::divmod_multi(p, &self.polys, self.order).1
    }

    pub fn contains(&self, p: &BiPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

pub fn buchberger(gens: &[BiPoly], order: MonomialOrder) -> GroebnerBasis {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_bipoly(g, order))
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    for g in inputs {
        let reducers: Vec<&IPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let h = reduce_full(g, &reducers, order);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(order);
        }
        insert(&mut polys, &mut basis, &mut pairs, h);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then(order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = s_poly(&polys[pair.i], &polys[pair.j], order);
        if s.is_zero() {
            continue;
        }
        let reducers: Vec<&IPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let h = reduce_full(s, &reducers, order);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(order);
        }
        insert(&mut polys, &mut basis, &mut pairs, h);
    }

    // interreduce: drop redundant leading terms, then tail-reduce
    let mut minimal: Vec<usize> = Vec::new();
    for &k in &basis {
        let lm = polys[k].lm();
        let redundant = basis
            .iter()
            .any(|&o| o != k && polys[o].lm().divides(lm) && (polys[o].lm() != lm || o < k));
        if !redundant {
            minimal.push(k);
        }
    }
    let mut reduced: Vec<IPoly> = Vec::new();
    for &k in &minimal {
        let others: Vec<&IPoly> = minimal.iter().filter(|&&o| o != k).map(|&o| &polys[o]).collect();
        let head = IPoly {
            terms: polys[k].terms[..1].to_vec(),
            sugar: 0,
        };
        let tail = IPoly {
            terms: polys[k].terms[1..].to_vec(),
            sugar: 0,
        };
        // reduce only the tail, keeping the leading term
        let lc = &head.terms[0].1;
        let rtail = reduce_tail(tail, &others, order);
        let (scale_head, t) = rtail;
        let mut terms = vec![(head.terms[0].0, lc * &scale_head)];
        terms.extend(t.terms);
        let mut p = IPoly { terms, sugar: 0 };
        p.normalize();
        reduced.push(p);
    }
    let mut out: Vec<BiPoly> = reduced.iter().map(IPoly::to_bipoly).collect();
    out.sort_by(|a, b| {
        order.cmp(
            &a.leading(order).expect("nonzero").0,
            &b.leading(order).expect("nonzero").0,
        )
    });
    GroebnerBasis { order, polys: out }
}

/// Reduces every term of `tail`; returns the factor the (implicit) head was
/// scaled by together with the reduced tail.
fn reduce_tail(tail: IPoly, basis: &[&IPoly], order: MonomialOrder) -> (BigInt, IPoly) {
    let mut p = tail;
    let mut head_scale = BigInt::one();
    let mut i = 0;
    while i < p.terms.len() {
        let (m, c) = (p.terms[i].0, p.terms[i].1.clone());
        let hit = basis
            .iter()
            .find_map(|g| g.lm().quotient_of(&m).map(|t| (*g, t)));
        match hit {
            Some((g, t)) => {
                let lc = &g.terms[0].1;
                let gg = c.gcd(lc);
                let a = lc / &gg;
                let b = &c / &gg;
                p.terms = p.combine(&a, g, &b, &t, order);
                head_scale *= &a;
            }
            None => i += 1,
        }
    }
    (head_scale, p)
}

fn unit_basis(order: MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        order,
        polys: vec![BiPoly::one()],
    }
}

/// Gebauer–Möller update: add `h` to the basis and refresh the pair set.
fn insert(polys: &mut Vec<IPoly>, basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: IPoly) {
    let hi = polys.len();
    let hlm = *h.lm();
    let hsugar = h.sugar;
    polys.push(h);

    let candidates: Vec<Pair> = basis
        .iter()
        .map(|&g| {
            let glm = polys[g].lm();
            let lcm = glm.lcm(&hlm);
            let tg = glm.quotient_of(&lcm).expect("lcm").degree();
            let th = hlm.quotient_of(&lcm).expect("lcm").degree();
            Pair {
                i: g,
                j: hi,
                lcm,
                sugar: (polys[g].sugar + tg).max(hsugar + th),
            }
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    for (a, p) in candidates.iter().enumerate() {
        let plm = polys[p.i].lm();
        if coprime(plm, &hlm) {
            kept.push(*p);
            continue;
        }
        let dominated = candidates.iter().enumerate().any(|(b, q)| {
            b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a)
        });
        if !dominated {
            kept.push(*p);
        }
    }
    // product criterion
    kept.retain(|p| !coprime(polys[p.i].lm(), &hlm));

    // old pairs made redundant by h
    pairs.retain(|p| {
        let li = polys[p.i].lm().lcm(&hlm);
        let lj = polys[p.j].lm().lcm(&hlm);
        !(hlm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    pairs.extend(kept);

    basis.retain(|&g| !hlm.divides(polys[g].lm()));
    basis.push(hi);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_xy;

    fn p(s: &str) -> BiPoly {
        parse_xy(s).unwrap()
    }

    #[test]
    fn variables_are_already_a_basis() {
        let gb = buchberger(&[p("x"), p("y")], MonomialOrder::LexYoverX);
        assert_eq!(gb.polys, vec![p("x"), p("y")]);
    }

    #[test]
    fn cusp_with_a_line() {
        let gb = buchberger(&[p("y^2 - x^3"), p("y")], MonomialOrder::LexYoverX);
        assert_eq!(gb.polys, vec![p("x^3"), p("y")]);
    }

    #[test]
    fn unit_ideal_detected() {
        let gb = buchberger(
            &[p("x - 1"), p("y - 2"), p("(x - 1)*(y - 2) + 1")],
            MonomialOrder::LexYoverX,
        );
        assert!(gb.is_unit());
        assert_eq!(gb.polys, vec![p("1")]);
    }

    #[test]
    fn basis_is_reduced_and_contains_generators() {
        let gens = [p("x^2*y - 1"), p("x*y^2 - x"), p("y^3 + 2*x - 3")];
        for order in [
            MonomialOrder::LexYoverX,
            MonomialOrder::LexXoverY,
            MonomialOrder::GradedXoverY,
        ] {
            let gb = buchberger(&gens, order);
            for g in &gens {
                assert!(gb.contains(g), "{g} under {order}");
            }
            for (a, f) in gb.polys.iter().enumerate() {
                let (lm, lc) = f.leading(order).unwrap();
                assert!(lc.is_one());
                for (b, g) in gb.polys.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    let glm = g.leading(order).unwrap().0;
                    for (m, _) in f.terms() {
                        assert!(!glm.divides(m), "not reduced: {glm:?} divides a term of {f}");
                    }
                    let _ = lm;
                }
            }
        }
    }

    #[test]
    fn same_ideal_same_basis() {
        let a = buchberger(&[p("x^2 - y"), p("x*y - 1")], MonomialOrder::GradedXoverY);
        let b = buchberger(
            &[p("x^2 - y + (x*y - 1)*x"), p("x*y - 1"), p("x^3 - x*y")],
            MonomialOrder::GradedXoverY,
        );
        assert_eq!(a, b);
    }
}
