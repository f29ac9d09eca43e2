//! The bundled example structures.

use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::gchq::{from_hopf_quasigroup, mirror, CrossedGchq};
use crate::hq::{loop_algebra, HopfQuasigroup};
use crate::io;
use crate::tables::{GroupAction, GroupTable, LoopTable};
use crate::yd::{crossed_set_module, power_group_algebra, regular_quasimodule, trivial_module, YDModule};

pub fn group_algebra(gamma: &GroupTable, field: Field) -> HopfQuasigroup {
    loop_algebra(&LoopTable::from(gamma), field)
}

pub fn k_c2(field: Field) -> HopfQuasigroup {
    group_algebra(&GroupTable::cyclic(2), field)
}

pub fn k_c3(field: Field) -> HopfQuasigroup {
    group_algebra(&GroupTable::cyclic(3), field)
}

pub fn k_s3(field: Field) -> HopfQuasigroup {
    group_algebra(&GroupTable::symmetric(3), field)
}

/// The 16-dimensional loop algebra of the unit octonions.
pub fn k_o16(field: Field) -> HopfQuasigroup {
    loop_algebra(&LoopTable::octonion_units(), field)
}

/// `C₂` acting on `C₃` by inversion.
pub fn c3_inversion() -> GroupAction {
    GroupAction::inversion(&GroupTable::cyclic(3)).expect("C3 is abelian")
}

/// `power_construction(k[C₃], C₂ by inversion)`.
pub fn power_c3(field: Field) -> CrossedGchq {
    power_group_algebra(&c3_inversion(), field).expect("inversion acts by Hopf automorphisms")
}

pub fn mirror_power_c3(field: Field) -> CrossedGchq {
    mirror(&power_c3(field)).expect("mirror of a valid structure")
}

pub fn trivially_graded(h: &HopfQuasigroup) -> CrossedGchq {
    from_hopf_quasigroup(h).expect("fixture Hopf quasigroups are valid")
}

pub fn s3_base(field: Field) -> Arc<CrossedGchq> {
    Arc::new(trivially_graded(&k_s3(field)))
}

pub fn s3_crossed_set(field: Field) -> YDModule {
    crossed_set_module(s3_base(field), &GroupTable::symmetric(3)).expect("group algebra base")
}

pub fn o16_regular(field: Field) -> YDModule {
    regular_quasimodule(Arc::new(trivially_graded(&k_o16(field)))).expect("trivially graded base")
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "k-c2",
    "k-c3",
    "k-s3",
    "k-o16",
    "gchq-k-c2",
    "gchq-k-o16",
    "power-c3",
    "mirror-power-c3",
    "yd-trivial-c2",
    "yd-trivial-power-c3",
    "yd-crossed-set-c2",
    "yd-crossed-set-s3",
    "yd-regular-o16",
];

/// `(kind, json)` for a bundled fixture; `kind` is `hq`, `gchq` or `yd`.
pub fn by_name(name: &str, field: Field) -> Result<(&'static str, Value)> {
    let c2 = GroupTable::cyclic(2);
    Ok(match name {
        "k-c2" => ("hq", io::hq_to_json(&k_c2(field))),
        "k-c3" => ("hq", io::hq_to_json(&k_c3(field))),
        "k-s3" => ("hq", io::hq_to_json(&k_s3(field))),
        "k-o16" => ("hq", io::hq_to_json(&k_o16(field))),
        "gchq-k-c2" => ("gchq", io::gchq_to_json(&trivially_graded(&k_c2(field)))),
        "gchq-k-o16" => ("gchq", io::gchq_to_json(&trivially_graded(&k_o16(field)))),
        "power-c3" => ("gchq", io::gchq_to_json(&power_c3(field))),
        "mirror-power-c3" => ("gchq", io::gchq_to_json(&mirror_power_c3(field))),
        "yd-trivial-c2" => ("yd", io::yd_to_json(&trivial_module(Arc::new(trivially_graded(&k_c2(field)))))),
        "yd-trivial-power-c3" => ("yd", io::yd_to_json(&trivial_module(Arc::new(power_c3(field))))),
        "yd-crossed-set-c2" => (
            "yd",
            io::yd_to_json(&crossed_set_module(Arc::new(trivially_graded(&k_c2(field))), &c2)?),
        ),
        "yd-crossed-set-s3" => ("yd", io::yd_to_json(&s3_crossed_set(field))),
        "yd-regular-o16" => ("yd", io::yd_to_json(&o16_regular(field))),
        other => return Err(Error::InvalidInput(format!("unknown fixture {other:?}; known: {}", NAMES.join(", ")))),
    })
}
