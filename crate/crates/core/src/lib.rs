//! Multiplicity-free fusion systems over number fields: verification of the
//! pentagon and hexagon equations, dimensions and modular data, automorphisms,
//! and gauge fixing into the minimal field via gauge-split bases.

#![allow(clippy::needless_range_loop)]

pub mod automorphism;
pub mod cli;
pub mod dims;
pub mod error;
pub mod gauge;
pub mod io;
pub mod linalg;
pub mod modular;
pub mod numeric;
pub mod ring;
pub mod rings;
pub mod system;
pub mod verify;

pub use error::{FusionError, Result};
pub use ring::FusionRing;
pub use system::{FKey, FusionSystem, RKey};
