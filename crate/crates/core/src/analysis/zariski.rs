//! Splitting numbers of cyclic covers and Zariski tuple verdicts.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::forms::TernaryForm;
use crate::report::Report;

/// `n / d` for a contact configuration whose sum has order `d`.
pub fn splitting_number(n: u64, torsion_order: u64) -> Result<u64> {
    if n == 0 || torsion_order == 0 || !n.is_multiple_of(torsion_order) {
        return Err(Error::NotDivisibleInteger {
            numerator: n,
            denominator: torsion_order,
        });
    }
    Ok(n / torsion_order)
}

/// `lambda A + mu B`.
pub fn pencil_member(
    lambda: &Rational,
    mu: &Rational,
    a: &TernaryForm,
    b: &TernaryForm,
) -> Result<TernaryForm> {
    if lambda.is_zero() && mu.is_zero() {
        return Err(Error::ZeroParameters);
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(format!(
            "pencil of forms of degree {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    a.scale(lambda).add(&b.scale(mu))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiEntry {
    pub label: String,
    pub order: u64,
    pub splitting: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiReport {
    pub n: u64,
    pub entries: Vec<ZariskiEntry>,
    /// Splitting numbers pairwise distinct.
    pub distinguished: bool,
}

/// `pair`, `triple`, `quartet`, ... for a family of `k` curves.
pub fn tuple_name(k: usize) -> String {
    match k {
        2 => "pair".into(),
        3 => "triple".into(),
        4 => "quartet".into(),
        5 => "quintet".into(),
        _ => format!("{k}-tuple"),
    }
}

pub fn zariski_verdict(n: u64, configs: &[(String, u64)]) -> Result<ZariskiReport> {
    let entries = configs
        .iter()
        .map(|(label, d)| {
            Ok(ZariskiEntry {
                label: label.clone(),
                order: *d,
                splitting: splitting_number(n, *d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<u64> = entries.iter().map(|e| e.splitting).collect();
    Ok(ZariskiReport {
        n,
        distinguished: entries.len() >= 2 && distinct.len() == entries.len(),
        entries,
    })
}

impl ZariskiReport {
    pub fn splitting_numbers(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.splitting).collect()
    }

    pub fn verdict(&self) -> String {
        let name = tuple_name(self.entries.len());
        if self.distinguished {
            format!("Zariski {name} distinguished")
        } else {
            format!("not distinguished ({name} with repeated splitting numbers)")
        }
    }

    pub fn render_table(&self) -> String {
        let w = self
            .entries
            .iter()
            .map(|e| e.label.len())
            .chain(["curve".len()])
            .max()
            .unwrap_or(5);
        let mut out = format!("n = {}\n", self.n);
        out.push_str(&format!("  {:<w$}  {:>5}  {:>9}\n", "curve", "order", "splitting"));
        for e in &self.entries {
            out.push_str(&format!("  {:<w$}  {:>5}  {:>9}\n", e.label, e.order, e.splitting));
        }
        out.push_str(&format!("  verdict: {}\n", self.verdict()));
        out
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new(format!("splitting numbers for n = {}", self.n));
        r.value("n", self.n);
        for e in &self.entries {
            r.value(format!("{}.order", e.label), e.order);
            r.value(format!("{}.splitting", e.label), e.splitting);
        }
        let list: Vec<String> = self.splitting_numbers().iter().map(u64::to_string).collect();
        r.value("splitting", format!("({})", list.join(",")));
        r.value("verdict", self.verdict());
        r.check("distinguished", self.distinguished, tuple_name(self.entries.len()));
        r
    }

    pub fn render_machine(&self) -> String {
        self.to_report().render_machine()
    }
}

impl fmt::Display for ZariskiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_table())
    }
}
