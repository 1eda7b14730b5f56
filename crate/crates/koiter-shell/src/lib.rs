//! Koiter shell toolkit: reference-surface geometry, shell elastic energies,
//! and time integration of the displacement dynamics with transport noise on
//! the periodic torus, plus Monte Carlo ensembles for buckling statistics.

pub mod elasticity;
pub mod error;
pub mod field;
pub mod geometry;
pub mod spectral;

pub use error::{Error, Result};
pub use field::ScalarField;
pub use spectral::SpectralGrid;
