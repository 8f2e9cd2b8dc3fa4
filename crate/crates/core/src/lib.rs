//! Finite quasi-lattices: posets in which every pair has at least one
//! minimal upper bound and one maximal lower bound, though not necessarily a
//! unique one.
//!
//! The crate provides the set-valued join and meet, classification of posets
//! as lattices or quasi-lattices, checkers for associativity, modularity and
//! the absorption identities, ideals and filters, congruences and quotients,
//! and an exhaustive harness that re-checks these structural facts over every
//! labeled poset of a given size.

pub mod cli;
pub mod congruence;
pub mod element_set;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod ideals;
pub mod ops;
pub mod poset;
pub mod sweep;
pub mod verdict;

pub use congruence::{Partition, PosetMap, Quotient};
pub use element_set::{ElementSet, MAX_ELEMENTS};
pub use error::{Error, Result};
pub use ops::{classify, Classification, Kind};
pub use poset::{Poset, Side};
pub use sweep::{Claim, SweepReport};
pub use verdict::{Reason, Verdict, Witness};
