pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod pairing;
pub mod scan;

pub use error::{Error, Result};
