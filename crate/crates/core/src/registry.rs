//! Strategies selectable by name.

use crate::analysis::{GroebnerEngine, ModularEngine, SmoothnessEngine};
use crate::contact::{LadderXi, MillerXi, XiBuilder};
use crate::error::{Error, Result};

pub static XI_BUILDERS: &[&dyn XiBuilder] = &[&MillerXi, &LadderXi];

pub static SMOOTHNESS_ENGINES: &[&dyn SmoothnessEngine] = &[&ModularEngine, &GroebnerEngine];

/// The first entry of each list is the default.
pub fn xi_builder(name: &str) -> Result<&'static dyn XiBuilder> {
    XI_BUILDERS
        .iter()
        .copied()
        .find(|b| b.name() == name)
        .ok_or_else(|| unknown("xi builder", name, XI_BUILDERS.iter().map(|b| b.name())))
}

pub fn smoothness_engine(name: &str) -> Result<&'static dyn SmoothnessEngine> {
    SMOOTHNESS_ENGINES
        .iter()
        .copied()
        .find(|e| e.name() == name)
        .ok_or_else(|| unknown("smoothness engine", name, SMOOTHNESS_ENGINES.iter().map(|e| e.name())))
}

fn unknown<'a>(kind: &str, name: &str, known: impl Iterator<Item = &'a str>) -> Error {
    let known: Vec<&str> = known.collect();
    Error::UnknownStrategy(format!("{kind} `{name}` (known: {})", known.join(", ")))
}
