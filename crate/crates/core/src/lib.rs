//! Finite permutation groups and the p-Baer / Baer factorisation predicates.
//!
//! Permutations compose left to right: `p.then(q)` applies `p` first.

pub mod baer;
pub mod bitset;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod group;
pub mod perm;
pub mod primes;
pub mod spec;
pub mod structure;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::Group;
pub use perm::Permutation;
pub use primes::{classify_prime_power, PrimePower};
pub use spec::GroupSpec;
pub use structure::Factorisation;
pub use subgroup::Subgroup;
