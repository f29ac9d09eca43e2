//! Exact scalars and based linear maps.
//!
//! Every axiom in this crate is checked as an equality of [`LinMap`]s, so the
//! equality tolerance is literally zero.

mod linmap;
mod scalar;

pub use linmap::{Atom, LinMap, Space};
pub use scalar::{Field, Scalar};
