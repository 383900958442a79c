//! Corona multiproducts of graphs and their equitable colorings.
//!
//! The crate has three layers:
//!
//! * construction — simple graphs, standard families, the corona product
//!   `G ∘ H` and its iterated form `G ∘^l H` with a navigable vertex labeling;
//! * constructive colorers — route-tagged equitable colorings of corona
//!   products built from an equitable coloring of the base graph, emitted as
//!   verifiable [`colorers::Certificate`]s;
//! * verification — an exact backtracking oracle for desk-scale instances and
//!   a certificate verifier that cross-checks every claim it can reach.

pub mod coloring;
pub mod colorers;
pub mod corona;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod verifier;

pub use coloring::{analyze_coloring, ClassSizeVector, Coloring, ColoringReport};
pub use colorers::{dispatch, Certificate, CertificateJson, Claim, ColorerError, HShape, TheoremTag};
pub use corona::{
    corona, corona_power, CoronaError, CoronaLabel, CoronaLayout, CoronaSpec, LabelStep,
    DEFAULT_ORDER_CAP,
};
pub use graph::{Graph, GraphError};
pub use oracle::{
    chromatic_number, equitable_chromatic_number, forced_three_coloring_sizes,
    is_equitably_k_colorable, proper_k_coloring, OracleError, SearchLimits,
};
