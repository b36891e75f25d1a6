//! Spectral graph toolkit: graph families and operations, two independent
//! eigen-engines, equitable-partition quotients and executable checks of
//! line-graph spectral results.

pub mod census;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod quotient;
pub mod report;
pub mod spectral;
pub mod spectrum;
pub mod theorems;

pub use error::{Error, Result};
pub use family::{build, FamilySpec};
pub use graph::Graph;
pub use matrix::DenseMatrix;
pub use spectrum::Spectrum;
