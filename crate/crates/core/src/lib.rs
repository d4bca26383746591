//! Exactly solvable model of a single-mode cavity coupled to a semi-infinite
//! waveguide through a Drude-form coupling, including the counter-rotating
//! terms.
//!
//! The Hamiltonian is bilinear and is diagonalized exactly (Fano's method),
//! so every observable below stays rigorous into the ultrastrong and
//! deep-strong coupling regimes. Frequencies are angular; `hbar = v = 1`.

pub mod dynamics;
pub mod error;
pub mod field;
pub mod fano;
pub mod fluctuations;
pub mod model;
pub mod numerics;

pub use error::{Error, Result};
pub use model::{DressedPoles, ModelParams, Renormalization};
pub use num_complex::Complex64 as C64;
