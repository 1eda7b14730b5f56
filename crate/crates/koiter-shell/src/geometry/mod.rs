//! Reference and deformed surface geometry.
//!
//! A [`Chart`] maps torus coordinates `(y1, y2)` to a surface in R^3 and
//! carries its own partial derivatives. All frame and tensor quantities are
//! derived from the chart pointwise; everything here is pure and re-entrant.

mod chart;
mod deform;
mod frame;
mod validate;

pub use chart::{Chart, TrigTerm};
pub use deform::{
    assemble_eta_n_hessian, change_of_metric, linearized_change_of_curvature,
    linearized_change_of_metric, modified_change_of_curvature,
    modified_change_of_curvature_direct, DisplacementJet,
};
pub use frame::{evaluate_frame, fundamental_forms, normal_derivatives, Frame, NormalJet};
pub use validate::{validate_chart, ValidationReport};

use nalgebra::Vector3;

pub(crate) type V3 = Vector3<f64>;

/// Degeneracy threshold on the area weight `w = |t1 x t2|`.
pub const EPS_W: f64 = 1e-10;

/// Symmetric 2x2 surface tensor stored as three scalars.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymTensor2 {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
}

impl SymTensor2 {
    pub const ZERO: SymTensor2 = SymTensor2 {
        a11: 0.0,
        a12: 0.0,
        a22: 0.0,
    };

    pub fn new(a11: f64, a12: f64, a22: f64) -> Self {
        Self { a11, a12, a22 }
    }

    pub fn diag(a11: f64, a22: f64) -> Self {
        Self {
            a11,
            a12: 0.0,
            a22,
        }
    }

    /// Component by index pair; `(2,1)` is served by the stored `(1,2)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match (i, j) {
            (1, 1) => self.a11,
            (2, 2) => self.a22,
            (1, 2) | (2, 1) => self.a12,
            _ => panic!("tensor indices must be in {{1, 2}}"),
        }
    }

    pub fn add(&self, o: &SymTensor2) -> SymTensor2 {
        SymTensor2::new(self.a11 + o.a11, self.a12 + o.a12, self.a22 + o.a22)
    }

    pub fn sub(&self, o: &SymTensor2) -> SymTensor2 {
        SymTensor2::new(self.a11 - o.a11, self.a12 - o.a12, self.a22 - o.a22)
    }

    pub fn scale(&self, s: f64) -> SymTensor2 {
        SymTensor2::new(s * self.a11, s * self.a12, s * self.a22)
    }

    /// Frobenius norm of the full 2x2 reconstruction.
    pub fn norm(&self) -> f64 {
        (self.a11 * self.a11 + 2.0 * self.a12 * self.a12 + self.a22 * self.a22).sqrt()
    }

    /// Eigenvalues of the full 2x2 reconstruction, ascending.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let tr = self.a11 + self.a22;
        let det = self.a11 * self.a22 - self.a12 * self.a12;
        let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
        (tr / 2.0 - disc, tr / 2.0 + disc)
    }

    pub fn is_finite(&self) -> bool {
        self.a11.is_finite() && self.a12.is_finite() && self.a22.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_diagonal() {
        let t = SymTensor2::diag(3.0, -1.0);
        assert_eq!(t.eigenvalues(), (-1.0, 3.0));
    }

    #[test]
    fn norm_counts_off_diagonal_twice() {
        let t = SymTensor2::new(0.0, 2.0, 0.0);
        assert_eq!(t.norm(), (8.0f64).sqrt());
    }
}
