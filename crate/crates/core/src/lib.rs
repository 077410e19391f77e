//! Construction, verification and analysis of pentagonal geometries PENT(k,r).
//!
//! A PENT(k,r) is a partial linear space with lines of size `k` and `r` lines
//! through each point, in which the points not collinear with any point `x`
//! form a line, the opposite line of `x`.

pub mod analysis;
pub mod catalog;
pub mod constructors;
pub mod design;
mod error;
pub mod format;
pub mod graph;
pub mod search;
pub mod spectrum;

pub use analysis::{
    count_olps, invariant_violations, max_olps_bound, olps_from_deficiency, opposite_line, two_olp_count,
    two_olp_excluded, verify_pentagonal, OlpSet, PentagonalReport, TwoOlpCount,
};
pub use catalog::{catalog_list, catalog_load, catalog_verify_all, Catalog, CatalogEntry, CatalogReport, EntryReport};
pub use design::{
    divisibility_ok, parameters, parse_design, serialize_design, verify_pls, Design, DesignKind, Line, Parameters,
    Point, VerificationReport, Violation, ViolationCode,
};
pub use error::{Error, Result};
pub use graph::{build_deficiency, classify, girth, is_connected, moore_pent, parse_graph, serialize_graph, Graph};
pub use search::{complete_from_deficiency, partition_p, pent2_count, pent2_enumerate, Completion, CycleType, SearchBudget};
pub use spectrum::{known_spectrum, SpectrumFact, SpectrumStatus};
