//! Parameterized algorithms for Partial Grundy Coloring and for Grundy
//! Coloring on K_{i,j}-free graphs, with brute-force oracles for checking.

pub mod bitset;
pub mod cli;
pub mod covering;
pub mod error;
pub mod gen;
pub mod graph;
pub mod greedy;
pub mod grundy;
pub mod io;
pub mod oracle;
pub mod pgc;
pub mod reduction;
pub mod rep;
pub mod rng;
pub mod witness;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Biclique, Graph};
pub use greedy::Coloring;
pub use witness::{Certificate, GrundyWitness, PartialGrundyWitness};
