//! Exhaustive searches: good colorings of complete hosts, Turán numbers and
//! the bound orchestration built on top of them.

mod bounds;
mod good_coloring;
mod turan;

pub use bounds::{ramsey_bounds, BoundsConfig, LowerSource, RamseyBounds, UpperSource};
pub use good_coloring::{
    exists_good_coloring, exists_good_coloring_with, SearchConfig, SearchOutcome, SearchStatus,
};
pub use turan::{ramsey_upper_from_turan, turan_number, TuranResult, TuranUpper};
