//! Exact dominance graphs of two-sided biased coins.
//!
//! A coin `(a, b, x)` shows `b` with probability `x / (1 + x)` and `a`
//! otherwise; coin `i` dominates coin `j` when it shows the strictly larger
//! number more often. This crate computes dominance graphs exactly, decides
//! which labeled tournaments are semiacyclic (no directed cycle with at least
//! as many ascents as descents), searches for numberings and winner/loser
//! splits, and builds explicit winner-only or loser-only coin systems for
//! semiacyclic tournaments.

pub mod coin;
pub mod cycles;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod montecarlo;
pub mod ordering;
pub mod rational;
pub mod realization;
pub mod tournament;

pub use coin::{
    classify_pair, dominance_graph, dominance_matrix, dominance_probabilities, dominates,
    normalize_system, Bias, CoinSystem, CoinType, Direction, DominanceOutcome, Table1Case,
};
pub use cycles::{is_semiacyclic, max_cycle_mean, CycleWitness, Semiacyclicity};
pub use enumeration::{
    count_semiacyclic, count_semiacyclic_parallel, decode, encode, enumerate_semiacyclic,
    TournamentCode,
};
pub use error::{Error, Result};
pub use ordering::{
    find_semiacyclic_ordering, find_winner_loser_partition, validate_partition, Partition,
    SearchConfig, VertexOrdering,
};
pub use rational::Rational;
pub use realization::{linial_region_point, realize_losers, realize_winners, RegionPoint};
pub use tournament::Tournament;
