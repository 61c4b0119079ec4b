//! Exhaustive ground truth: enumerate every vertex subset and test whether it
//! induces a connected subgraph.

mod census;
mod connectivity;
mod graph;

pub use census::{
    census, census_union_find, footprint_census, span_census, CensusReport, OracleCap, SpanCensus,
};
pub use connectivity::{is_connected_subset, is_connected_subset_union_find};
pub use graph::{build_km_pn, LayeredGraph, SimpleGraph, MAX_VERTICES};
