//! Induced-edge extremal problem on cycle powers `C_n^s`.
//!
//! For `k` vertices of `C_n^s` the maximum number of induced edges is attained
//! by `k` consecutive vertices. This crate computes that maximum exactly,
//! evaluates the Turán and spectral upper bounds, and checks everything against
//! an exhaustive search on small instances.
//!
//! ```
//! use cyclepow::{exact_max, GraphSpec};
//!
//! let spec = GraphSpec::new(1000, 37).unwrap();
//! assert_eq!(exact_max(&spec, 54).unwrap().value, 1295);
//! ```

pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod report;
pub mod search;
pub mod subset;
pub mod verify;

pub use bounds::{
    bound_report, circulant_eigenvalue, clique_number, eigen_expansion, lambda2,
    quadratic_form_edges, spectral_bound, spectral_identity_check, spectrum, turan_bound,
    BoundReport, SpectralBound, SpectrumSummary,
};
pub use error::{Error, Result};
pub use exact::{closed_form, exact_max, interval_degree_profile, ExactResult, Method, RegimeFlags};
pub use graph::{d_cyclic, d_minus, d_plus, GraphSpec};
pub use report::{build_table, builtin_table1, render, Format, TableRow, TableSpec};
pub use search::{brute_force_max, count_maximizers, search, SearchOptions, SearchResult};
pub use subset::VertexSubset;
pub use verify::{verify_theorem_grid, GridReport, Violation};
