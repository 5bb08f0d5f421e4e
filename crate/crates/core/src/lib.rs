//! Integer Heronian triangles and perfect pyramids.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod heron;
pub mod numtheory;
pub mod pyramid;

pub use error::{Error, Result};
