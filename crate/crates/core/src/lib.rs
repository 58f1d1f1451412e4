//! Exact computation of clique, coloring, and minor parameters of small
//! graphs (up to 32 vertices), graph-class recognizers with rejection
//! witnesses, hereditary parameter-equality checking over exhaustively
//! enumerated graph universes, and minimal-obstruction mining.

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod matcher;
pub mod oracle;
pub mod patterns;
pub mod perfection;
pub mod recognizers;
pub mod solvers;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use enumerate::{enumerate_graphs, enumerate_up_to, EnumerateError};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines, Graph6Error};
pub use matcher::{contains_induced, find_induced, find_induced_graph};
pub use patterns::{Pattern, PatternCatalog, PatternError};
pub use perfection::{
    is_ab_perfect, minimal_obstructions, AbWitness, ParamSelector, PerfectionError, ProfileCache,
};
pub use recognizers::{
    is_berge, is_chordal, is_free, is_trivially_perfect, ClassVerdict, RecognizerError, Witness,
};
pub use solvers::{
    full_profile, ColoringPartition, ConsistencyError, MinorModel, ParameterProfile,
};
