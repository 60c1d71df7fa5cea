//! Ordered Ramsey and Turán machinery for alternating paths.
//!
//! The crate provides the ordered graph and coloring model, containment
//! checks for the path families, the edge-deletion algorithms that turn a
//! dense host into a certified path copy, exact extremal constructions,
//! exhaustive searches for small Ramsey and Turán values, a CNF encoding of
//! the Ramsey problem, and line-based text formats for all of them.

pub mod cnf;
pub mod contain;
pub mod deletion;
pub mod error;
pub mod graph;
pub mod io;
pub mod path;
pub mod ramsey;
pub mod render;
pub mod search;
pub mod turan;

pub use contain::{contains_path, embed_generic};
pub use deletion::{DeletionTrace, Found};
pub use error::{Error, Result};
pub use graph::{Color, OrderedColoring, OrderedGraph};
pub use path::{PathCertificate, PathFamily, PathSpec};
pub use ramsey::{find_mono, find_mono_ap, ramsey_upper_bound_ap, Mode};
pub use search::{compute_ramsey_exact, search_ramsey_witness, search_turan_max, SearchConfig};
pub use turan::{find_ap_in_dense, find_path_bipartite, turan_number_ap};
