//! Contact curves from torsion points.

mod pipeline;
mod xi;

pub use pipeline::{
    contact_from_weak, contact_pipeline, keeps_contact_shape, smoothing_candidates, smoothing_fix,
    verify_contact, weak_contact, weak_contact_with, ContactResult, WeakContact,
};
pub use xi::{build_xi, build_xi_with, LadderXi, MillerXi, XiBuilder};
