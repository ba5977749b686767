//! Exact arithmetic over the rationals: univariate and bivariate
//! polynomials, normal forms on hyperelliptic curves, resultants, linear
//! systems and Gröbner bases.

mod bipoly;
pub mod division;
pub(crate) mod format;
pub mod groebner;
pub mod linalg;
pub mod modular;
pub mod normal_form;
mod order;
pub mod parse;
pub mod rational;
pub mod resultant;
pub mod roots;
mod unipoly;

pub use bipoly::{BiPoly, Monomial};
pub use division::{divmod_multi, exact_divide, reduces_to_zero};
pub use groebner::{buchberger, GroebnerBasis};
pub use linalg::{nullspace, solve_linear, LinearSolution, Matrix};
pub use normal_form::{check_curve_poly, nf1, nf1_parts, nf2};
pub use order::MonomialOrder;
pub use parse::{parse_xy, poly_parse};
pub use rational::{parse_rational, rat, ratio, Rational};
pub use resultant::{resultant_x, resultant_y};
pub use unipoly::UniPoly;

/// Monic gcd in `Q[x]`; zero only if both inputs are zero.
pub fn uni_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    a.gcd(b)
}
