//! Exact Wiener and Szeged index computations, the pair-surplus machinery
//! behind the bound Sz(G) − W(G) ≥ 4n − 8 for connected bipartite graphs with
//! m ≥ n, and exhaustive verification of that bound over small graphs.
//!
//! ```
//! use szlab::{Graph, InvariantReport};
//!
//! let c4 = szlab::parse_graph6("Cr").unwrap();
//! let report = InvariantReport::compute(&c4).unwrap();
//! assert_eq!((report.wiener, report.szeged, report.gap), (8, 16, 8));
//! assert!(szlab::is_isomorphic(&c4, &Graph::cycle(4)).unwrap());
//! ```

pub mod blocks;
pub mod canon;
pub mod cycle;
pub mod distance;
pub mod enumeration;
mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod proof;

pub use blocks::{block_decomposition, is_two_connected, BlockDecomposition};
pub use canon::{canonical_code, canonical_form, is_isomorphic, CanonicalCode};
pub use cycle::{shortest_cycle, shortest_cycle_through, CycleInfo};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use enumeration::{
    generate, ingest_graph6_stream, verify_conjecture, verify_generated, verify_range, EnumerationRun, EnumerationSpec,
    VerificationOutcome, VerificationReport,
};
pub use error::{Error, Hypothesis, Result};
pub use extremal::{extremal_family, is_extremal_form, rooted_trees, verify_extremal_gaps, ExtremalGraph, RootedTree};
pub use graph::{Bipartition, Graph, OddCycle, Vertex};
pub use graph6::{parse_graph6, to_graph6};
pub use invariants::{
    edge_partition, gap, mu, mu_table, revised_szeged, szeged, wiener, EdgePartition, InvariantReport, MuTable,
    Quarters,
};
pub use proof::{
    check_antipodal_cycle, check_lemma1_claim, gap_decomposition, surplus_map, GapDecomposition, SurplusMap,
};
