pub mod algebra;
pub mod analysis;
pub mod cases;
pub mod contact;
pub mod divisor;
pub mod elliptic;
pub mod error;
pub mod forms;
pub mod registry;
pub mod report;
pub mod reproduce;

pub use error::{Error, Result};
