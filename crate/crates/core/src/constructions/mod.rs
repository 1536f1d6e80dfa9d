//! Explicit colorings and host hypergraphs. Every output is checkable with
//! the copy detectors in [`crate::embed`].

mod k43e;
mod pasch;
mod random_cover;
mod simple;
mod stepping_up;

pub use k43e::k43e_from_graph;
pub use pasch::{pasch_free_host, projective_plane, ProjectivePlane};
pub use random_cover::{random_cover, CoverOutcome, CoverSpec, COVER_RNG};
pub use simple::{balanced_rpartite, kneser_matching_coloring, sum_mod, two_pentagon_coloring};
pub use stepping_up::{
    default_bit_cap, stepping_up, stepping_up_color, stepping_up_color_count, stepping_up_with_cap,
    SteppingUpInput,
};
