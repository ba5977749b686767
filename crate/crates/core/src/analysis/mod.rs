//! Projective smoothness and splitting-number arithmetic.

mod smoothness;
mod zariski;

pub use smoothness::{
    is_smooth_projective, modular_certificate, GroebnerEngine, ModularEngine, SmoothnessEngine,
    SmoothnessVerdict,
};
pub use zariski::{
    pencil_member, splitting_number, tuple_name, zariski_verdict, ZariskiEntry, ZariskiReport,
};
