//! Spectral radii of uniform hypergraphs, with tooling for outerplanar
//! 3-uniform hypergraphs: triangulation enumeration, recognition, the fan
//! hypergraph, and a harness comparing every maximal outerplanar
//! hypergraph against the fan.

pub mod error;
pub mod hypercore;
pub mod io;
pub mod outerplanar;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use hypercore::{ShadowGraph, UniformHypergraph};
pub use outerplanar::{fan, Triangulation};
pub use spectral::{spectral_radius, PerronResult, SolverConfig};
