//! Permutation-group algorithms for counting Sylow subgroups.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`perm`]: permutations, base and strong generating sets, cosets,
//!   homomorphisms, normalizers, quotients, direct and wreath products.
//! * [`constructors`]: symmetric, alternating, cyclic, dihedral and rank-one
//!   linear groups over small finite fields, plus a sweep catalog.
//! * [`sylow`]: Sylow subgroups, Sylow numbers `ν_p`, `p`-cores and
//!   `p`-solvability.
//! * [`subgroups`]: subgroup lattices up to conjugacy and the `DivSyl(p)`
//!   check (does `ν_p(H)` divide `ν_p(G)` for every `H ≤ G`?).
//! * [`series`]: chief, composition and rc-series, induced automorphism
//!   groups and solvable radicals.
//! * [`reduction`]: socle analysis, the embedding into a wreath product and
//!   validators for the divisibility lemmas and the reduction theorem.
//!
//! All randomized routines take an explicit seed and are deterministic.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod constructors;
mod error;
mod outcome;
pub mod perm;
pub mod reduction;
pub mod series;
pub mod subgroups;
pub mod sylow;

pub use error::{Error, Result};
pub use outcome::Outcome;
pub use perm::{Homomorphism, PermGroup, Permutation};

/// Largest group order accepted by the element-scan routines
/// (normalizers, centralizers, intersections, conjugacy classes).
pub const SCAN_BOUND: u64 = 200_000;

/// Largest index accepted when building a coset action.
pub const COSET_BOUND: u64 = 100_000;

/// Largest group order accepted by subgroup-lattice enumeration.
pub const LATTICE_BOUND: u64 = 10_000;

/// Largest number of conjugates collected by a subgroup-orbit computation.
pub const ORBIT_CAP: usize = 1_000_000;
