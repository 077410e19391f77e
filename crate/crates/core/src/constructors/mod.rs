//! Generative machinery: orbit development, Bose-type constructions from
//! triple systems and PBDs, and composition over group divisible designs.

mod bose;
mod gdd;
mod orbit;
mod quasigroup;

pub use bose::{
    bose_pent3, bose_pent3_from_quasigroup, parse_pbd, parse_sts, pbd_pent3, serialize_pbd, serialize_sts, steiner_quasigroup, sts_bose, Pbd, Sts,
};
pub use gdd::{degenerate_pent, gdd_compose, parse_gdd, serialize_gdd, td3, Gdd};
pub use orbit::{expand_orbits, parse_orbit, serialize_orbit, OrbitSpec};
pub use quasigroup::{cyclic_idempotent_quasigroup, Quasigroup};
