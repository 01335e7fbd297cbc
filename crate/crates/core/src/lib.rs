//! Roman hitting sets and Roman hitting functions on hypergraphs.

pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod extend;
pub mod format;
pub mod generate;
pub mod model;
pub mod optimize;
pub mod oracle;
pub mod reduce;
mod search;

pub use error::{Error, Result};
pub use model::*;
