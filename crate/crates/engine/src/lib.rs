//! A word model of the irreducible module `L(λ)` over a finite-type GCM.
//!
//! Vectors are described by their contravariant pairings with f-words, which
//! quotients out the radical automatically. In that picture `e_i` is a slice,
//! `f_i` and the twining map are block transports, and Demazure subspaces,
//! traces and twining characters follow without any reference to folding.

pub mod module;
pub mod shapovalov;
pub mod vector;
pub mod words;

pub use module::{HighestWeightModule, DEFAULT_WORD_CAP};
pub use shapovalov::{gram_matrix, shapovalov_pair};
pub use vector::{PairingVector, Subspace};
pub use words::{word_count, word_rank, words_of_content, FWord};
