//! Terminating reduction strategies for group algebras and interacting
//! bialgebras.

pub mod group;
pub mod ib;

pub use group::{
    branching_degree, branching_depth, depth_profile, group_reduce, group_reduce_with, group_signature,
    revlex_less, DepthProfile, GroupPack, GroupRun,
};
pub use ib::{apply_kmn, ib_is_reduced, ib_reduce, ib_reduce_swapped, ib_reduce_with, ib_signature, IbRun, IB};
