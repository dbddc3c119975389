//! Weighted bicolored plane trees and the combinatorics around them.

pub mod bounds;
pub mod code;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod galois;
pub mod partition;
pub mod passport;
pub mod random;
pub mod surgery;
pub mod tree;
pub mod unitrees;

pub use code::{automorphism_order, canonical_code, is_isomorphic, Token, TreeCode};
pub use bounds::{construct_witness, is_realizable_as_tree, min_deg_r, BoundReport, Regime};
pub use enumerate::{count_trees, enumerate_passport, unique_tree};
pub use error::{Error, ParseError, Result};
pub use galois::{group_report, orbit_report, to_monodromy, GroupReport, GroupTag, InvariantSignature, MonodromyModel};
pub use partition::Partition;
pub use passport::Passport;
pub use tree::{Color, Edge, TreeBuilder, WeightedTree};
pub use unitrees::{is_unitree_bruteforce, match_family, Family, FamilyTag};

/// Edge weights and vertex degrees.
pub type Weight = u64;

/// Arbitrary-precision counts.
pub type Count = num_bigint::BigUint;

/// Exact rational masses (counts weighted by `1/|Aut|`).
pub type Mass = num_rational::BigRational;
