//! Capacities of finite directed graphs and random-subgraph threshold
//! experiments.
//!
//! The crate has five functional areas:
//!
//! * [`graph`] — finite directed graphs with exact structural queries
//!   (cliques, homomorphisms, chromatic number, longest-path ranks).
//! * [`capacity`] — the capacity of a graph, `sup` over the vertex simplex
//!   of the edge quadratic form, by closed form, grid enumeration and
//!   replicator ascent.
//! * [`measures`] — finitely-describable probability models on words
//!   (Bernoulli products, mixtures, explicit atoms) with exact event
//!   probabilities and exchangeability checks.
//! * [`thresholds`] — extremal random-subgraph constructions and seeded
//!   Monte Carlo path-threshold experiments on a finite window.
//! * [`ramsey`] — finite-scale extraction of index sets on which
//!   tuple-indexed data converges, monotone metric transforms, 1-Lipschitz
//!   reindexing and L¹ intersection extraction.
//!
//! All randomness is driven by explicit 64-bit seeds through counter-based
//! substreams ([`rng`]), so every experiment is reproducible bit-for-bit
//! regardless of thread scheduling.

pub mod capacity;
pub mod error;
pub mod graph;
pub mod io;
pub mod measures;
pub mod ramsey;
pub mod rng;
pub mod thresholds;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
