//! Binary matroid structure toolkit.

pub mod bmx;
pub mod catalog;
pub mod connectivity;
pub mod error;
pub mod extension;
pub mod gf2;
pub mod isomorphism;
pub mod matroid;
pub mod structure;
pub mod verify;

pub use error::{Error, Hypothesis, Result};
pub use gf2::{BitMatrix, BitVector};
pub use isomorphism::{are_isomorphic, canonical_key, CanonicalKey};
pub use matroid::{Label, Matroid, Subset};
