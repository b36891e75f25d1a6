//! Guide chapters as doctests. Each module pulls in one chapter so
//! `cargo test` compiles and runs every Rust snippet in the book.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}

#[doc = include_str!("../../../book/src/rho.md")]
pub mod rho {}

#[doc = include_str!("../../../book/src/quotients.md")]
pub mod quotients {}

#[doc = include_str!("../../../book/src/theorem-suite.md")]
pub mod theorem_suite {}

#[doc = include_str!("../../../book/src/census.md")]
pub mod census {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
