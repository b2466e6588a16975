//! Exact combinatorial computation of the Eulerian ideal of a simple graph:
//! (T,p)-joins, a Gröbner set, minimal homogeneous generating sets, the
//! generating degrees, even chords, and a fiber-connectivity verifier.
//!
//! Graphs are capped at 64 edges so edge subsets fit in one `u64` mask; the
//! enumeration routines carry their own tighter caps.

pub mod chords;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod joins;
pub mod m2;
pub mod verify;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
pub mod test_graphs;
