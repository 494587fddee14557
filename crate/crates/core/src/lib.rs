pub mod algebra;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod macdonald;
pub mod report;
pub mod symfun;

pub use error::{Error, Result};
