//! Centrally symmetric subcomplexes `B(i,d)` of the boundary of the
//! `d`-dimensional cross-polytope, their boundaries, and the combinatorial
//! and homological checks that go with them.
//!
//! Vertices of the cross-polytope are `x_1..x_d, y_1..y_d` with `x_j`
//! antipodal to `y_j`. A facet is a word in `{x,y}^d`.

pub mod cli;
pub mod complex;
pub mod crosspoly;
pub mod enumeration;
pub mod error;
pub mod face;
pub mod homology;
pub mod io;
pub mod manifold;
pub mod shelling;
pub mod snf;
pub mod symmetry;
pub mod verify;

pub use complex::{FVector, FaceLattice, HVector, PureComplex};
pub use crosspoly::{build_b, build_boundary, build_complement, BidParams, SwitchSet, Word};
pub use error::{Error, Result};
pub use face::{Face, Sign, VertexLabel};
