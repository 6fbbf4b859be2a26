pub mod error;
pub mod chow;
pub mod groups;
pub mod lattice;
pub mod symalg;
pub mod weil;

pub use error::{Error, ErrorCategory, Result};
