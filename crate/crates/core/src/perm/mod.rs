//! Permutations, stabilizer chains and the basic group algorithms.

mod bsgs;
mod cosets;
mod group;
mod hom;
pub mod ops;
mod permutation;
mod products;
mod random;

pub use cosets::CosetTable;
pub use group::PermGroup;
pub use hom::Homomorphism;
pub use permutation::Permutation;
pub use products::{DirectProduct, WreathProduct};
pub use random::{ProductReplacement, MIXING_STEPS};
