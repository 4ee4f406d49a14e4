pub mod census;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
