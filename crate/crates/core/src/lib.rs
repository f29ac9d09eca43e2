//! Exact construction and verification of crossed group-cograded Hopf
//! quasigroups and their Yetter-Drinfeld (quasi)modules.
//!
//! All structures are finite-dimensional and given by structure constants
//! over `Q` or `GF(p)`. Every axiom is checked as an exact equality of
//! composed linear maps, and every failure carries a witness.

pub mod algebra;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod gchq;
pub mod hq;
pub mod io;
mod laws;
pub mod report;
pub mod tables;
pub mod yd;

pub use error::{Error, Result};
pub use exactlin::{Atom, Field, LinMap, Scalar, Space};
pub use report::{Check, Report, Status, Witness};
pub use tables::{validate_group, validate_ip_loop, CayleyTable, GroupAction, GroupTable, LoopTable};
pub use algebra::UnitalAlgebra;
pub use hq::{antipode_inverse_laws, loop_algebra, loop_algebra_from_table, validate_hopf_quasigroup, HopfQuasigroup};
pub use gchq::{
    from_hopf_quasigroup, mirror, power_construction, validate_all, validate_crossing, validate_gchq, validate_gchq_with,
    CrossedGchq, GchqOptions, HopfAction,
};
pub use yd::{
    braiding, braiding_inverse, check_braiding_laws, check_conjugation_coherence, check_crossed_equivalence,
    crossed_set_module, power_group_algebra, regular_quasimodule, trivial_module, twisted_crossed_set_module,
    validate_yd, yd_conjugate, yd_direct_sum, yd_tensor, DirectSum, YDModule, YDMorphism,
};
