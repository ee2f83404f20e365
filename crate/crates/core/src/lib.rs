//! Strongly involutive self-dual polyhedra.
//!
//! A polyhedron here is a simple, planar, 3-connected graph, held as a
//! rotation-system map on the sphere. A *strong involution* is a duality
//! `tau` from vertices to faces with `u ∈ tau(v) ⇔ v ∈ tau(u)` and
//! `v ∉ tau(v)`. The crate finds such dualities, reduces strongly involutive
//! polyhedra to odd wheels by remove-contract steps, expands them back by
//! simultaneous vertex splitting and face diagonalization, and enumerates them
//! both through expansion and through an independent generator of all
//! polyhedra.

pub mod census;
pub mod document;
pub mod duality;
mod edit;
pub mod expansion;
pub mod layout;
pub mod planar_map;
pub mod polyhedron;
pub mod reduction;
pub mod squares;

use thiserror::Error;

pub use planar_map::{build_map, embed_planar, CombinatorialMap, Dart, FaceSet, MapError};
pub use polyhedron::{
    are_isomorphic, canonical_code, dual, is_wheel, validate, wheel, CanonicalCode, Polyhedron, ValidationError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Expansion(#[from] expansion::ExpansionError),
    #[error("wheels need a rim of at least 3 vertices, got {0}")]
    WheelTooSmall(usize),
    #[error("the polyhedron admits no strong involution")]
    NotStronglyInvolutive,
}
