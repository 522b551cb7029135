//! Exact enumeration of pairs of monotone lattice paths by their number of
//! intersections.
//!
//! The crate computes each count along several independent routes (brute
//! force enumeration, closed forms, generating-function coefficients and an
//! explicit bijection) and checks that they agree exactly. Probabilities for
//! two random walkers meeting at a barrier are computed by exact dynamic
//! programming and compared with their closed forms.

pub mod arith;
pub mod bijection;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod oracle;
pub mod series;
pub mod verify;

pub use arith::{BigCount, Rat};
pub use error::{Error, Result};
pub use lattice::{PathNE, PathPair, Point, Step};
