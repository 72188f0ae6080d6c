//! Generalized Radon transforms over quadric hypersurfaces with centers on a
//! hypersurface, together with the numerical microlocal machinery they carry:
//! the canonical relation in `(y', x, omega)` coordinates, its left/right
//! projections and their Jacobians, detection of the rank-drop surface, and
//! classification of the resulting singularities (fold / cusp / blowdown),
//! plus discrete forward/adjoint operators, normal-operator point spread
//! functions and artifact prediction by composing the canonical relation.

pub mod artifacts;
pub mod canonical;
pub mod classifier;
pub mod cli;
mod error;
pub mod geometry;
pub mod levelset;
pub mod numerics;
pub mod radon;
pub mod rng;

pub use error::{Error, Result};
