pub mod caputo;
pub mod error;
pub mod group;
pub mod iterate;
pub mod kv;
pub mod maps;
pub mod orbit;

pub use caputo::{iterate_fo, iterate_fo_real, iterate_fo_with, weights, CaputoWeights, FoSettings};
pub use error::{Error, Result};
pub use group::{elements, to_polar, ComplexPoint, GroupElement};
pub use iterate::iterate_io;
pub use maps::{CartesianForm, MapKind, MapSpec};
pub use orbit::{Orbit, Order, DEFAULT_ESCAPE_RADIUS};
pub mod nn;
pub mod symmetry;
pub mod thresholds;
pub mod spectral;
pub mod bifurcation;
pub mod plot;
pub mod cli;
