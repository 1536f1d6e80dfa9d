//! Monochromatic sub-hypergraphs in edge-colored complete uniform
//! hypergraphs: detection, explicit constructions, block designs and
//! exhaustive search for small Ramsey and Turán numbers.
//!
//! r-subsets of `[0,n)` are strictly increasing vertex lists, indexed by
//! colex rank. Colorings are dense arrays over those ranks.

pub mod budget;
pub mod certificates;
pub mod coloring;
pub mod combinatorics;
pub mod constructions;
pub mod designs;
pub mod embed;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod numbers;
pub mod pattern;
pub mod search;
pub mod trace;

pub use budget::{Budget, Outcome};
pub use certificates::{catalog, certificate, certificate_info, CertificateInfo};
pub use coloring::{Coloring, UNASSIGNED};
pub use combinatorics::{binomial, colex_rank, colex_subsets, colex_unrank, RSubset};
pub use designs::{
    coloring_from_resolution, find_design, is_t_design, pair_partition_coloring, resolve, Design,
    DesignResult, Resolution,
};
pub use embed::{contains_copy, count_copies, count_mono_copies, find_mono_copy, Embedding};
pub use error::{Error, Result};
pub use hypergraph::{density, UniformHypergraph};
pub use numbers::{tower, Tower};
pub use pattern::{pattern_catalog, Pattern};
pub use search::{exists_good_coloring, ramsey_bounds, ramsey_upper_from_turan, turan_number};
pub use trace::trace;
