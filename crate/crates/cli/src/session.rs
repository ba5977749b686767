//! Session files: named declarations followed by pipeline commands.
//!
//! ```text
//! # comments run to the end of the line
//! curve E6: y^2 = x^3 + 1/4*x^2 - 3*x + 1
//! point T on E6 = (0, 1)
//! divisor D on E6 = { (0, 1): 1, (2, 2): 1 }
//! poly b = y - x*(x - 4) + 1
//! poly q = x^3 + y^3 + 1
//! form F = Z*Y^2 - X^3
//!
//! torsion T [bound 24]
//! xi T 6 [using miller]
//! contact b T 6 [fix auto | fix q] [using miller] [engine modular]
//! construct D
//! smooth F [engine groebner]
//! zariski 6 1,2,3,6
//! reproduce 4.4
//! ```

use std::collections::HashMap;
use std::fmt;

use contact_core::algebra::BiPoly;
use contact_core::divisor::EffectiveDivisor;
use contact_core::elliptic::{EPoint, EllipticCurve};
use contact_core::forms::TernaryForm;
use contact_core::registry;
use contact_core::report::Report;
use contact_core::reproduce::reproduce;

use crate::commands::{self, Fix};
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Curve(EllipticCurve),
    Point { curve: String, point: EPoint },
    Divisor { curve: String, divisor: EffectiveDivisor },
    Poly(BiPoly),
    Form(TernaryForm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declaration {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixRef {
    None,
    Auto,
    Poly(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Torsion { point: String, bound: u64 },
    Xi { point: String, n: u64, strategy: String },
    Contact { b: String, point: String, n: u64, fix: FixRef, strategy: String, engine: String },
    Construct { divisor: String },
    Smooth { form: String, engine: String },
    Zariski { n: u64, orders: Vec<u64> },
    Reproduce { section: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub declarations: Vec<Declaration>,
    pub commands: Vec<Command>,
}

fn default_xi() -> String {
    registry::XI_BUILDERS[0].name().to_string()
}

fn default_engine() -> String {
    registry::SMOOTHNESS_ENGINES[0].name().to_string()
}

impl Session {
    pub fn lookup(&self, name: &str) -> Option<&Value> {
        self.declarations.iter().find(|d| d.name == name).map(|d| &d.value)
    }

    fn curve(&self, name: &str) -> Option<&EllipticCurve> {
        match self.lookup(name)? {
            Value::Curve(c) => Some(c),
            _ => None,
        }
    }

    fn point(&self, name: &str) -> Option<(&EllipticCurve, &EPoint)> {
        match self.lookup(name)? {
            Value::Point { curve, point } => Some((self.curve(curve)?, point)),
            _ => None,
        }
    }
}

struct LineParser<'a> {
    line: usize,
    known: HashMap<String, &'static str>,
    session: &'a mut Session,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl LineParser<'_> {
    fn syntax(&self, message: impl Into<String>) -> CliError {
        CliError::Syntax {
            line: self.line,
            message: message.into(),
        }
    }

    fn core(&self, source: contact_core::Error) -> CliError {
        CliError::Core {
            line: self.line,
            source,
        }
    }

    fn name(&self, s: &str) -> Result<String, CliError> {
        let s = s.trim();
        if is_ident(s) {
            Ok(s.to_string())
        } else {
            Err(self.syntax(format!("`{s}` is not a valid name")))
        }
    }

    /// Resolves a prior declaration of the given kind.
    fn reference(&self, s: &str, kind: &'static str) -> Result<String, CliError> {
        let name = self.name(s)?;
        match self.known.get(&name) {
            Some(k) if *k == kind => Ok(name),
            Some(k) => Err(self.syntax(format!("`{name}` is a {k}, expected a {kind}"))),
            None => Err(CliError::UnknownName {
                line: self.line,
                name,
            }),
        }
    }

    fn declare(&mut self, name: String, kind: &'static str, value: Value) -> Result<(), CliError> {
        if self.known.contains_key(&name) {
            return Err(CliError::DuplicateName {
                line: self.line,
                name,
            });
        }
        self.known.insert(name.clone(), kind);
        self.session.declarations.push(Declaration { name, value });
        Ok(())
    }

    fn number(&self, s: Option<&str>, what: &str) -> Result<u64, CliError> {
        let s = s.ok_or_else(|| self.syntax(format!("missing {what}")))?;
        s.parse()
            .map_err(|_| self.syntax(format!("{what} must be a positive integer, got `{s}`")))
    }

    /// `NAME on CURVE = rest`.
    fn on_curve<'t>(&self, rest: &'t str) -> Result<(String, String, &'t str), CliError> {
        let (head, body) = rest
            .split_once('=')
            .ok_or_else(|| self.syntax("expected `NAME on CURVE = ...`"))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        match words.as_slice() {
            [name, "on", curve] => Ok((self.name(name)?, self.reference(curve, "curve")?, body)),
            _ => Err(self.syntax("expected `NAME on CURVE = ...`")),
        }
    }

    fn parse_line(&mut self, text: &str) -> Result<(), CliError> {
        let (kw, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match kw {
            "curve" => {
                let (name, eq) = rest
                    .split_once(':')
                    .ok_or_else(|| self.syntax("expected `curve NAME: y^2 = f(x)`"))?;
                let name = self.name(name)?;
                let curve = commands::parse_curve(eq).map_err(|e| self.core(e))?;
                self.declare(name, "curve", Value::Curve(curve))
            }
            "point" => {
                let (name, curve, body) = self.on_curve(rest)?;
                let c = self.session.curve(&curve).expect("resolved").clone();
                let p = commands::parse_point(body)
                    .and_then(|p| commands::point_on(&c, p))
                    .map_err(|e| self.core(e))?;
                self.declare(name, "point", Value::Point { curve, point: p })
            }
            "divisor" => {
                let (name, curve, body) = self.on_curve(rest)?;
                let c = self.session.curve(&curve).expect("resolved").clone();
                let divisor = commands::parse_divisor(&c, body).map_err(|e| self.core(e))?;
                self.declare(name, "divisor", Value::Divisor { curve, divisor })
            }
            "poly" | "form" => {
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| self.syntax(format!("expected `{kw} NAME = ...`")))?;
                let name = self.name(name)?;
                if kw == "poly" {
                    let p = commands::parse_poly(body).map_err(|e| self.core(e))?;
                    self.declare(name, "poly", Value::Poly(p))
                } else {
                    let f = TernaryForm::parse(body).map_err(|e| self.core(e))?;
                    self.declare(name, "form", Value::Form(f))
                }
            }
            _ => {
                let cmd = self.parse_command(kw, rest)?;
                self.session.commands.push(cmd);
                Ok(())
            }
        }
    }

    /// Splits trailing `key value` options off a word list.
    fn options<'t>(&self, words: &[&'t str], allowed: &[&str]) -> Result<HashMap<&'t str, &'t str>, CliError> {
        let mut out = HashMap::new();
        let mut it = words.iter();
        while let Some(k) = it.next() {
            if !allowed.contains(k) {
                return Err(self.syntax(format!("unexpected `{k}`")));
            }
            let v = it
                .next()
                .ok_or_else(|| self.syntax(format!("`{k}` needs a value")))?;
            if out.insert(*k, *v).is_some() {
                return Err(self.syntax(format!("`{k}` given twice")));
            }
        }
        Ok(out)
    }

    fn strategy(&self, name: Option<&&str>) -> Result<String, CliError> {
        match name {
            None => Ok(default_xi()),
            Some(n) => registry::xi_builder(n)
                .map(|b| b.name().to_string())
                .map_err(|e| self.core(e)),
        }
    }

    fn engine(&self, name: Option<&&str>) -> Result<String, CliError> {
        match name {
            None => Ok(default_engine()),
            Some(n) => registry::smoothness_engine(n)
                .map(|e| e.name().to_string())
                .map_err(|e| self.core(e)),
        }
    }

    fn parse_command(&self, kw: &str, rest: &str) -> Result<Command, CliError> {
        let words: Vec<&str> = rest.split_whitespace().collect();
        let need = |k: usize| -> Result<(), CliError> {
            if words.len() < k {
                Err(self.syntax(format!("`{kw}` needs {k} arguments")))
            } else {
                Ok(())
            }
        };
        match kw {
            "torsion" => {
                need(1)?;
                let opts = self.options(&words[1..], &["bound"])?;
                let bound = match opts.get("bound") {
                    Some(b) => self.number(Some(b), "bound")?,
                    None => contact_core::elliptic::DEFAULT_TORSION_BOUND,
                };
                Ok(Command::Torsion {
                    point: self.reference(words[0], "point")?,
                    bound,
                })
            }
            "xi" => {
                need(2)?;
                let opts = self.options(&words[2..], &["using"])?;
                Ok(Command::Xi {
                    point: self.reference(words[0], "point")?,
                    n: self.number(Some(words[1]), "n")?,
                    strategy: self.strategy(opts.get("using"))?,
                })
            }
            "contact" => {
                need(3)?;
                let opts = self.options(&words[3..], &["fix", "using", "engine"])?;
                let fix = match opts.get("fix") {
                    None => FixRef::None,
                    Some(&"auto") => FixRef::Auto,
                    Some(q) => FixRef::Poly(self.reference(q, "poly")?),
                };
                Ok(Command::Contact {
                    b: self.reference(words[0], "poly")?,
                    point: self.reference(words[1], "point")?,
                    n: self.number(Some(words[2]), "n")?,
                    fix,
                    strategy: self.strategy(opts.get("using"))?,
                    engine: self.engine(opts.get("engine"))?,
                })
            }
            "construct" => {
                need(1)?;
                if words.len() > 1 {
                    return Err(self.syntax(format!("unexpected `{}`", words[1])));
                }
                Ok(Command::Construct {
                    divisor: self.reference(words[0], "divisor")?,
                })
            }
            "smooth" => {
                need(1)?;
                let opts = self.options(&words[1..], &["engine"])?;
                Ok(Command::Smooth {
                    form: self.reference(words[0], "form")?,
                    engine: self.engine(opts.get("engine"))?,
                })
            }
            "zariski" => {
                need(2)?;
                if words.len() > 2 {
                    return Err(self.syntax("orders are written without spaces, e.g. 1,2,4"));
                }
                Ok(Command::Zariski {
                    n: self.number(Some(words[0]), "n")?,
                    orders: commands::parse_orders(words[1]).map_err(|e| self.core(e))?,
                })
            }
            "reproduce" => {
                need(1)?;
                Ok(Command::Reproduce {
                    section: words[0].to_string(),
                })
            }
            other => Err(self.syntax(format!("unknown keyword `{other}`"))),
        }
    }
}

pub fn parse_session(text: &str) -> Result<Session, CliError> {
    let mut session = Session::default();
    let mut p = LineParser {
        line: 0,
        known: HashMap::new(),
        session: &mut session,
    };
    for (i, raw) in text.lines().enumerate() {
        p.line = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        p.parse_line(line)?;
    }
    Ok(session)
}

impl fmt::Display for Declaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = &self.name;
        match &self.value {
            Value::Curve(c) => write!(f, "curve {name}: {c}"),
            Value::Point { curve, point } => write!(f, "point {name} on {curve} = {point}"),
            Value::Divisor { curve, divisor } => write!(f, "divisor {name} on {curve} = {divisor}"),
            Value::Poly(p) => write!(f, "poly {name} = {p}"),
            Value::Form(g) => write!(f, "form {name} = {g}"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Torsion { point, bound } => write!(f, "torsion {point} bound {bound}"),
            Command::Xi { point, n, strategy } => write!(f, "xi {point} {n} using {strategy}"),
            Command::Contact {
                b,
                point,
                n,
                fix,
                strategy,
                engine,
            } => {
                write!(f, "contact {b} {point} {n}")?;
                match fix {
                    FixRef::None => {}
                    FixRef::Auto => write!(f, " fix auto")?,
                    FixRef::Poly(q) => write!(f, " fix {q}")?,
                }
                write!(f, " using {strategy} engine {engine}")
            }
            Command::Construct { divisor } => write!(f, "construct {divisor}"),
            Command::Smooth { form, engine } => write!(f, "smooth {form} engine {engine}"),
            Command::Zariski { n, orders } => {
                let o: Vec<String> = orders.iter().map(u64::to_string).collect();
                write!(f, "zariski {n} {}", o.join(","))
            }
            Command::Reproduce { section } => write!(f, "reproduce {section}"),
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.declarations {
            writeln!(f, "{d}")?;
        }
        for c in &self.commands {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn run_command(session: &Session, cmd: &Command) -> contact_core::Result<Report> {
    let point = |name: &str| session.point(name).expect("validated at parse time");
    let poly = |name: &str| match session.lookup(name) {
        Some(Value::Poly(p)) => p.clone(),
        _ => unreachable!("validated at parse time"),
    };
    match cmd {
        Command::Torsion { point: p, bound } => {
            let (c, t) = point(p);
            commands::torsion_report(c, t, *bound)
        }
        Command::Xi { point: p, n, strategy } => {
            let (c, t) = point(p);
            commands::xi_report(c, t, *n, registry::xi_builder(strategy)?)
        }
        Command::Contact {
            b,
            point: p,
            n,
            fix,
            strategy,
            engine,
        } => {
            let (c, t) = point(p);
            let fix = match fix {
                FixRef::None => Fix::None,
                FixRef::Auto => Fix::Auto,
                FixRef::Poly(q) => Fix::Multiplier(poly(q)),
            };
            commands::contact_report(
                c,
                &poly(b),
                t,
                *n,
                &fix,
                registry::xi_builder(strategy)?,
                registry::smoothness_engine(engine)?,
            )
        }
        Command::Construct { divisor } => match session.lookup(divisor) {
            Some(Value::Divisor { divisor, .. }) => commands::construct_report(divisor),
            _ => unreachable!("validated at parse time"),
        },
        Command::Smooth { form, engine } => match session.lookup(form) {
            Some(Value::Form(g)) => commands::smooth_report(g, registry::smoothness_engine(engine)?),
            _ => unreachable!("validated at parse time"),
        },
        Command::Zariski { n, orders } => Ok(commands::zariski_report(*n, orders)?.to_report()),
        Command::Reproduce { section } => reproduce(section),
    }
}

/// Runs the commands in order.
pub fn execute(session: &Session) -> Result<Vec<Report>, CliError> {
    session
        .commands
        .iter()
        .map(|cmd| {
            run_command(session, cmd).map_err(|source| CliError::Command {
                context: cmd.to_string(),
                source,
            })
        })
        .collect()
}

/// 0 if every check in every report passed, 1 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::all_passed) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn options_and_defaults() {
        let s = parse_session("curve E: y^2 = x^3 - x\npoint T on E = (0, 0)\nxi T 2\ntorsion T bound 5\n").unwrap();
        assert_eq!(
            s.commands,
            vec![
                Command::Xi {
                    point: "T".into(),
                    n: 2,
                    strategy: "miller".into()
                },
                Command::Torsion {
                    point: "T".into(),
                    bound: 5
                }
            ]
        );
    }

    #[test]
    fn kinds_are_checked() {
        let err = parse_session("curve E: y^2 = x^3 - x\nxi E 2\n").unwrap_err();
        assert!(matches!(err, CliError::Syntax { line: 2, .. }));
    }
}
