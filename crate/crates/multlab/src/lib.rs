//! Ring-spec files, reports and the command-line front end for
//! [`multlab_core`].

pub mod acceptance;
pub mod cli;
pub mod corpus;
pub mod report;
pub mod ringspec;

pub use ringspec::{load_ring_spec, parse_ring_spec, RingSpec, SpecError};
