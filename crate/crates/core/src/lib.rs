//! Exact probabilities `P(P; α < β)` that one element precedes another in a
//! uniformly random linear extension of a finite poset.
//!
//! The generic engine sums over blocking ideals and counts maximal chains in
//! the lattice of order ideals. Cell posets of partitions get a faster route
//! through the hook length formula and the Aitken determinant, and two-row
//! shapes get closed forms including the limits as both rows grow.

pub mod blocking;
pub mod corpus;
pub mod error;
pub mod ideal_lattice;
pub mod poset;
pub mod tableaux;
pub mod two_rows;

pub use blocking::{
    balanced_pair_scan, blocking_ideals, decompose, e_blocking, probability, BalancedPair,
    BlockingDecomposition, ExactRational,
};
pub use error::{Error, Result};
pub use ideal_lattice::{count_linear_extensions, e_with_constraint, linear_extensions, IdealLattice, Limits};
pub use poset::{OrderIdeal, Poset};
pub use tableaux::{Cell, Partition, SkewShape};
pub use two_rows::TwoRowCase;
