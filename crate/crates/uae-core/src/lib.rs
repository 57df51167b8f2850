//! Deterministic simulator of single-atom quantum heat engines.
//!
//! A single trapped atom in a 1-D harmonic potential is the working fluid;
//! an ultracold thermal cloud of a second species is the bath. The crate
//! provides
//!
//! - exact harmonic-oscillator statistical mechanics ([`oscillator`]),
//! - the four elementary quantum thermodynamic strokes with super-adiabatic
//!   trap ramps and minimum-time search ([`ramp`], [`stroke`]),
//! - bath thermalization, three-body loss and tweezer heating models
//!   ([`bath`]),
//! - Carnot, Otto and Diesel cycle assembly with efficiency and power
//!   accounting ([`cycle`]),
//! - parameter scans and constrained working-point optimization ([`scan`]).
//!
//! Everything is pure and deterministic: identical inputs produce identical
//! results, bit for bit. All quantities are SI internally.

pub mod bath;
pub mod constants;
pub mod cycle;
pub mod error;
pub mod oscillator;
pub mod ramp;
pub mod scan;
pub mod stroke;

pub use error::{Error, Result};
