pub mod clifford;
pub mod error;
pub mod exact;
pub mod holonomy;
pub mod invariant;
pub mod par;
pub mod spin_geometry;
pub mod verify;

pub use error::{Error, Result};
