//! Exact computation of total Springer representations of classical Weyl
//! groups, Green polynomials and Kostka–Foulkes polynomials.

pub mod error;
pub mod memo;
pub mod partitions;
pub mod poly;
pub mod springer;
pub mod symfunc;
pub mod weylchar;

pub use error::{Error, Result};
