//! Isomorph-free generation of connected graphs and graph6 ingestion.

pub mod canonical;
pub mod generate;
pub mod ingest;

pub use canonical::{canonical_form, canonical_labeling, rooted_code, CanonicalCode, MAX_CANONICAL_ORDER};
pub use generate::{children, connected_graphs, connected_graphs_vec, ConnectedGraphs, MAX_ENUMERATION_ORDER};
pub use ingest::{ingest_graph6, ErrorPolicy, Ingest, IngestError, IngestOptions};
