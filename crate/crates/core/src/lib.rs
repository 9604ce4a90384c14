pub mod cli;
pub mod contact_loci;
pub mod error;
pub mod group_core;
pub mod jet_schemes;
pub mod lattice_mld;
pub mod mld_engine;
pub mod poly_engine;
pub mod rational;
pub mod twist;

pub use error::{Error, Result};
