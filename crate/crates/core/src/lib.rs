pub mod error;
pub mod census;
pub mod golay;
pub mod lattice;
pub mod leech;
pub mod ns;
pub mod report;

pub use error::{Error, Result};
