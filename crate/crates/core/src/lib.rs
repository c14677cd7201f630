pub mod algebra;
pub mod classify;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectra;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Graph6Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
