//! Structural predicates and the pattern machinery around induced paths.

pub mod independence;
pub mod induced;
pub mod relations;
pub mod trace;
pub mod twins;

pub use independence::{independence_number, nu_equals_two};
pub use induced::{find_induced, find_induced_labeled, has_induced, is_cograph, Embedding};
pub use relations::{check_path_identity, check_pattern_relations, path_identity_poly, pattern_relation_polys, vanishes_at};
pub use trace::{trace_partition, TracePartition};
pub use twins::{check_twin_eigenvalue, twin_cliques};
