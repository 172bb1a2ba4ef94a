pub mod cli;
pub mod error;
pub mod grid;
pub mod kummer;
pub mod oscillator;
pub mod painleve;
pub mod seed;
pub mod susy;
pub mod verify;

pub use error::{Error, Result};
pub use grid::Grid;
pub use kummer::ComplexScalar;
pub use painleve::{Family, PivSolution};
pub use seed::{SeedEvaluation, TransformParams};
pub use susy::PartnerSystem;

/// Relative size below which a denominator is treated as a zero.
pub const SINGULAR_TOLERANCE: f64 = 1e-6;
