//! Finite abelian hypergroups, fusion rings and their character theory.

pub mod builders;
pub mod burnside;
pub mod criteria;
pub mod dual;
pub mod error;
pub mod galois;
pub mod hypergroup;
pub mod report;
pub mod scalar;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use hypergroup::FusionData;
