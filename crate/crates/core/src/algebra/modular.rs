//! Buchberger's algorithm over a prime field `F_p`, `p < 2^31`.
//!
//! Used only to decide whether an ideal is the unit ideal after reduction
//! modulo `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::bipoly::{BiPoly, Monomial};
use super::order::MonomialOrder;

/// Terms sorted descending in the active order, coefficients in `[1, p)`.
pub type Poly = Vec<(Monomial, u64)>;

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31), "prime must fit in 31 bits");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        let mut result = 1;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits")
    }

    /// Image of a polynomial with integer coefficients; `None` if some
    /// coefficient is not an integer.
    pub fn reduce_poly(&self, g: &BiPoly, order: MonomialOrder) -> Option<Poly> {
        let mut out: Poly = Vec::new();
        for (m, c) in g.terms() {
            if !c.is_integer() {
                return None;
            }
            let r = self.reduce_int(c.numer());
            if r != 0 {
                out.push((*m, r));
            }
        }
        out.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Some(out)
    }

    fn make_monic(&self, p: &mut Poly) {
        if let Some(&(_, lc)) = p.first() {
            if lc != 1 {
                let inv = self.inv(lc);
                for t in p.iter_mut() {
                    t.1 = self.mul(t.1, inv);
                }
            }
        }
    }

    /// `a - c * m * b`, both sorted descending.
    fn sub_mul(&self, a: &Poly, c: u64, m: &Monomial, b: &Poly, order: MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0.mul(m)),
                (Some(_), None) => std::cmp::Ordering::Greater,
                (None, _) => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.mul(m), self.sub(0, self.mul(c, b[j].1))));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = self.sub(a[i].1, self.mul(c, b[j].1));
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Full reduction by a basis of monic polynomials.
    fn reduce(&self, mut p: Poly, basis: &[&Poly], order: MonomialOrder) -> Poly {
        let mut i = 0;
        while i < p.len() {
            let (m, c) = p[i];
            let hit = basis
                .iter()
                .find_map(|g| g[0].0.quotient_of(&m).map(|t| (*g, t)));
            match hit {
                Some((g, t)) => p = self.sub_mul(&p, c, &t, g, order),
                None => i += 1,
            }
        }
        self.make_monic(&mut p);
        p
    }

    fn s_poly(&self, f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
        let l = f[0].0.lcm(&g[0].0);
        let tf = f[0].0.quotient_of(&l).expect("lcm");
        let tg = g[0].0.quotient_of(&l).expect("lcm");
        let shifted: Poly = f.iter().map(|(m, c)| (m.mul(&tf), *c)).collect();
        self.sub_mul(&shifted, 1, &tg, g, order)
    }

    /// True if the generators span the unit ideal of `F_p[x, y]`.
    pub fn is_unit_ideal(&self, gens: &[Poly], order: MonomialOrder) -> bool {
        let mut polys: Vec<Poly> = Vec::new();
        let mut basis: Vec<usize> = Vec::new();
        let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();

        let mut work: Vec<Poly> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
        work.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
        for g in work {
            let reducers: Vec<&Poly> = basis.iter().map(|&k| &polys[k]).collect();
            let h = self.reduce(g, &reducers, order);
            if h.is_empty() {
                continue;
            }
            if h[0].0 == Monomial::ONE {
                return true;
            }
            insert(&mut polys, &mut basis, &mut pairs, h);
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    pairs[a]
                        .2
                        .degree()
                        .cmp(&pairs[b].2.degree())
                        .then(order.cmp(&pairs[a].2, &pairs[b].2))
                })
                .expect("nonempty");
            let (i, j, _) = pairs.swap_remove(best);
            let s = self.s_poly(&polys[i], &polys[j], order);
            let reducers: Vec<&Poly> = basis.iter().map(|&k| &polys[k]).collect();
            let h = self.reduce(s, &reducers, order);
            if h.is_empty() {
                continue;
            }
            if h[0].0 == Monomial::ONE {
                return true;
            }
            insert(&mut polys, &mut basis, &mut pairs, h);
        }
        false
    }

    /// Partial derivative of a reduced polynomial.
    pub fn diff(&self, p: &Poly, wrt_x: bool, order: MonomialOrder) -> Poly {
        let mut out: Poly = p
            .iter()
            .filter_map(|(m, c)| {
                let e = if wrt_x { m.x } else { m.y };
                if e == 0 {
                    return None;
                }
                let v = self.mul(*c, e as u64 % self.p);
                let nm = if wrt_x {
                    Monomial::new(m.x - 1, m.y)
                } else {
                    Monomial::new(m.x, m.y - 1)
                };
                (v != 0).then_some((nm, v))
            })
            .collect();
        out.sort_by(|a, b| order.cmp(&b.0, &a.0));
        out
    }
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0)
}

fn insert(polys: &mut Vec<Poly>, basis: &mut Vec<usize>, pairs: &mut Vec<(usize, usize, Monomial)>, h: Poly) {
    let hi = polys.len();
    let hlm = h[0].0;
    polys.push(h);
    let cands: Vec<(usize, usize, Monomial)> = basis
        .iter()
        .map(|&g| (g, hi, polys[g][0].0.lcm(&hlm)))
        .collect();
    let mut kept = Vec::new();
    for (a, p) in cands.iter().enumerate() {
        if coprime(&polys[p.0][0].0, &hlm) {
            continue;
        }
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(b, q)| b != a && q.2.divides(&p.2) && (q.2 != p.2 || b < a));
        if !dominated {
            kept.push(*p);
        }
    }
    pairs.retain(|p| {
        let li = polys[p.0][0].0.lcm(&hlm);
        let lj = polys[p.1][0].0.lcm(&hlm);
        !(hlm.divides(&p.2) && li != p.2 && lj != p.2)
    });
    pairs.extend(kept);
    basis.retain(|&g| !hlm.divides(&polys[g][0].0));
    basis.push(hi);
}

/// Primes just below `2^31`, tried in order by modular certificates.
pub const CERTIFICATE_PRIMES: [u64; 4] = [2147483647, 2147483629, 2147483587, 2147483579];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_xy;

    fn reduce_all(f: &PrimeField, gens: &[&str]) -> Vec<Poly> {
        gens.iter()
            .map(|s| f.reduce_poly(&parse_xy(s).unwrap(), MonomialOrder::GradedXoverY).unwrap())
            .collect()
    }

    #[test]
    fn unit_and_proper_ideals() {
        let f = PrimeField::new(CERTIFICATE_PRIMES[0]);
        let o = MonomialOrder::GradedXoverY;
        assert!(f.is_unit_ideal(&reduce_all(&f, &["x - 1", "y - 2", "(x - 1)*(y - 2) + 1"]), o));
        assert!(!f.is_unit_ideal(&reduce_all(&f, &["y^2 - x^3", "2*y", "3*x^2"]), o));
        assert!(f.is_unit_ideal(&reduce_all(&f, &["x^2 + y^2 - 1", "2*x", "2*y"]), o));
    }

    #[test]
    fn small_prime_sees_extra_common_zeros() {
        // x^2 - 2 and x - 5 share a root mod 23 (25 = 2 mod 23)
        let f = PrimeField::new(23);
        let o = MonomialOrder::GradedXoverY;
        assert!(!f.is_unit_ideal(&reduce_all(&f, &["x^2 - 2", "x - 5"]), o));
        let g = PrimeField::new(CERTIFICATE_PRIMES[0]);
        assert!(g.is_unit_ideal(&reduce_all(&g, &["x^2 - 2", "x - 5"]), o));
    }

    #[test]
    fn inverse_and_derivative() {
        let f = PrimeField::new(101);
        assert_eq!(f.mul(f.inv(7), 7), 1);
        let o = MonomialOrder::GradedXoverY;
        let p = f.reduce_poly(&parse_xy("x^3*y + 5*y^2").unwrap(), o).unwrap();
        let dx = f.diff(&p, true, o);
        assert_eq!(dx, f.reduce_poly(&parse_xy("3*x^2*y").unwrap(), o).unwrap());
    }
}
