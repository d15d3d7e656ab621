//! Decision-space and objective-space primitives.

mod bitstring;
mod objective;
mod rng;

pub use bitstring::{bitwise_mutate, random_bitstring, BitString};
pub use objective::{dominance, euclidean_distance, DominanceRelation, ObjectiveVector};
pub use rng::{derive_seed, mix64, RngStream};
