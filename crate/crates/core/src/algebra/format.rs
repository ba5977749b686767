use std::fmt::{self, Write};

use num_traits::{One, Signed};

use super::rational::Rational;

/// Writes `c1*m1 + c2*m2 - ...` in the given term order. An empty monomial
/// string denotes the constant term. Nothing written becomes `0`.
pub(crate) fn write_terms<W: Write>(
    out: &mut W,
    terms: impl IntoIterator<Item = (Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => out.write_str("-")?,
            (true, false) => {}
            (false, true) => out.write_str(" - ")?,
            (false, false) => out.write_str(" + ")?,
        }
        first = false;
        let mag = c.abs();
        if mono.is_empty() {
            write!(out, "{mag}")?;
        } else if mag.is_one() {
            out.write_str(&mono)?;
        } else {
            write!(out, "{mag}*{mono}")?;
        }
    }
    if first {
        out.write_str("0")?;
    }
    Ok(())
}

/// `v^e` pieces joined by `*`, skipping zero exponents.
pub(crate) fn monomial_string(vars: &[&str], exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}
