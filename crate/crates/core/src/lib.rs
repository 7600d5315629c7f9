//! Tolerances of finite lattices, their factor lattices, weak ordered
//! relations, and the concept lattices they induce.
//!
//! The crate is organised bottom-up:
//!
//! * [`order`], [`lattice`], [`iso`]: finite orders, lattices and isomorphism.
//! * [`relation`], [`tolerance`]: relation algebra, tolerances, weak ordered
//!   relations and the maps between them.
//! * [`blocks`]: tolerance blocks and the factor lattice `L/T`.
//! * [`fca`]: formal contexts, concept lattices and the block/concept
//!   correspondence.
//! * [`verify`]: corpus generation and the exhaustive property suite.
//! * [`io`]: JSON, Burmeister `.cxt` and DOT formats.

pub mod blocks;
pub mod error;
pub mod fca;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod named;
pub mod order;
pub mod relation;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use iso::are_isomorphic;
pub use lattice::{FiniteLattice, GeneratedSet};
pub use order::{FiniteOrder, Poset, Subset};
pub use relation::{alpha, beta, JoinEndomorphism, Relation};
