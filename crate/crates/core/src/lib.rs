//! Exact colourings of the orthogonality graph on the unit sphere.

pub mod cli;
pub mod error;
pub mod fourcolor;
pub mod generators;
pub mod graphs;
pub mod numtheory;
pub mod projective;
pub mod sphere;

pub use error::{Error, Result};
