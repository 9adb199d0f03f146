//! Interval bandwidth and storage allocation.
//!
//! Jobs are time intervals asking for an integer amount of a shared
//! resource of capacity `W`. In the bandwidth problem the amount is all
//! that matters; in the storage problem each served job must also receive a
//! contiguous block of colors from `1..=W`, disjoint from the blocks of
//! overlapping jobs. The crate provides exact solvers for small instances,
//! the greedy eviction sweep for bandwidth, specialized and approximate
//! solvers for uniform and proper instances, instance generators, and a
//! command line around all of it.

pub mod cli;
pub mod dp;
pub mod frac;
pub mod gen;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod paging;
pub mod proper;
pub mod render;
pub mod uniform;
