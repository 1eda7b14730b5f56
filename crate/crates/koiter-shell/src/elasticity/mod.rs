//! Shell elasticity tensor and the energy functionals.

mod energy;
mod gateaux;
mod tensor;

pub use energy::{
    linear_energy, membrane_coercivity_estimate, nonlinear_energy, simplified_energy,
    simplified_force,
};
pub use gateaux::{gateaux_derivative, FunctionalId};
pub use tensor::{elasticity_tensor, ElasticityTensor};

use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::spectral::SpectralGrid;

/// Scalar surface-force specification.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum ScalarLoad {
    #[default]
    Zero,
    Constant(f64),
    /// A pre-resolved gridded field (e.g. loaded from a dump).
    Field(ScalarField),
}

impl ScalarLoad {
    pub fn sample(&self, grid: &SpectralGrid) -> Result<ScalarField> {
        match self {
            ScalarLoad::Zero => Ok(ScalarField::zeros(grid.n1(), grid.n2())),
            ScalarLoad::Constant(c) => Ok(ScalarField::constant(grid.n1(), grid.n2(), *c)),
            ScalarLoad::Field(f) => {
                grid.matches(f)?;
                Ok(f.clone())
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ScalarLoad::Zero => true,
            ScalarLoad::Constant(c) => *c == 0.0,
            ScalarLoad::Field(f) => f.data().iter().all(|v| *v == 0.0),
        }
    }
}

/// Interior force vector, uniform over the surface.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum VectorLoad {
    #[default]
    Zero,
    Constant([f64; 3]),
}

impl VectorLoad {
    pub fn as_vector(&self) -> [f64; 3] {
        match self {
            VectorLoad::Zero => [0.0; 3],
            VectorLoad::Constant(v) => *v,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_vector() == [0.0; 3]
    }
}

/// Physical constants of the shell model.
///
/// `nu_e` and `beta` may take either sign; their signs select the stable,
/// neutral, or buckling-prone regime. `alpha` must stay positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ShellParams {
    /// Half-thickness.
    pub eps0: f64,
    /// Mass density per unit area (together with `eps0`).
    pub rho_s: f64,
    pub lambda_e: f64,
    pub mu_e: f64,
    /// Uniform membrane stiffness of the simplified model.
    pub nu_e: f64,
    /// Bending coefficient of the simplified model.
    pub alpha: f64,
    /// Membrane-stress coefficient of the simplified model.
    pub beta: f64,
    /// Interior force applied along the displaced surface.
    pub g_vec: VectorLoad,
    /// Scalar surface force.
    pub g_scal: ScalarLoad,
    /// Small-displacement threshold on `|grad eta|_inf`.
    pub disp_bound_l: f64,
}

impl Default for ShellParams {
    fn default() -> Self {
        Self {
            eps0: 1.0,
            rho_s: 1.0,
            lambda_e: 1.0,
            mu_e: 1.0,
            nu_e: 1.0,
            alpha: 1.0,
            beta: 1.0,
            g_vec: VectorLoad::Zero,
            g_scal: ScalarLoad::Zero,
            disp_bound_l: 1.0,
        }
    }
}

impl ShellParams {
    pub fn validate(&self) -> Result<()> {
        let check = |ok: bool, constraint: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ValidationError {
                    constraint: constraint.to_string(),
                })
            }
        };
        check(self.eps0 > 0.0, "eps0 > 0")?;
        check(self.rho_s > 0.0, "rho_s > 0")?;
        check(self.alpha > 0.0, "alpha > 0")?;
        check(self.mu_e > 0.0, "Lame condition mu_e > 0")?;
        check(
            3.0 * self.lambda_e + 2.0 * self.mu_e > 0.0,
            "Lame condition 3*lambda_e + 2*mu_e > 0",
        )?;
        check(self.disp_bound_l > 0.0, "disp_bound_l > 0")?;
        Ok(())
    }

    /// Linear mass coefficient `eps0 * rho_s`.
    pub fn mass(&self) -> f64 {
        self.eps0 * self.rho_s
    }
}

/// Energy decomposition of one state evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown {
    /// Membrane (stretching) energy.
    pub k_m: f64,
    /// Flexural (bending) energy.
    pub k_f: f64,
    /// Work of the applied forces.
    pub load: f64,
    /// Kinetic energy of the velocity field.
    pub kinetic: f64,
    /// Potential `k_m + k_f - load`.
    pub total: f64,
    /// Set when `|grad eta|_inf` exceeded the configured small-displacement
    /// bound during a nonlinear evaluation. Warning-level, never an abort.
    pub small_displacement_violated: bool,
}

impl EnergyBreakdown {
    pub fn zero() -> Self {
        Self {
            k_m: 0.0,
            k_f: 0.0,
            load: 0.0,
            kinetic: 0.0,
            total: 0.0,
            small_displacement_violated: false,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.k_m.is_finite()
            && self.k_f.is_finite()
            && self.load.is_finite()
            && self.kinetic.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_params_validate() {
        ShellParams::default().validate().unwrap();
    }

    #[test]
    fn lame_conditions_enforced() {
        let mut p = ShellParams {
            mu_e: -1.0,
            ..Default::default()
        };
        let err = p.validate().unwrap_err();
        assert!(err.to_string().contains("mu_e > 0"), "{err}");

        p.mu_e = 0.5;
        p.lambda_e = -1.0; // 3*(-1) + 2*0.5 = -2
        let err = p.validate().unwrap_err();
        assert!(err.to_string().contains("3*lambda_e + 2*mu_e"), "{err}");
    }

    #[test]
    fn negative_regime_parameters_are_allowed() {
        let p = ShellParams {
            nu_e: -0.5,
            beta: -2.0,
            ..Default::default()
        };
        p.validate().unwrap();
    }
}
