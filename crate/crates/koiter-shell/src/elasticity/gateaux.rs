//! Directional (Gateaux) derivatives of the energy functionals.
//!
//! The derivative is computed as a central difference
//! `(F(eta + tau p) - F(eta - tau p)) / (2 tau)` over the fixed sequence
//! `tau in {1e-4, 5e-5}` with one Richardson extrapolation step. The step
//! sequence is pinned so the oracle is reproducible.

use super::energy::{linear_energy, nonlinear_energy, simplified_energy};
use super::ShellParams;
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::geometry::Chart;
use crate::spectral::SpectralGrid;

/// Which functional to differentiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionalId {
    MembraneNonlinear,
    FlexuralNonlinear,
    MembraneLinear,
    FlexuralLinear,
    MembraneSimplified,
    FlexuralSimplified,
    Load,
}

fn evaluate(
    id: FunctionalId,
    chart: &Chart,
    eta: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<f64> {
    let zero = ScalarField::zeros(grid.n1(), grid.n2());
    let v = match id {
        FunctionalId::MembraneNonlinear => nonlinear_energy(chart, eta, &zero, params, grid)?.k_m,
        FunctionalId::FlexuralNonlinear => nonlinear_energy(chart, eta, &zero, params, grid)?.k_f,
        FunctionalId::MembraneLinear => linear_energy(chart, eta, &zero, params, grid)?.k_m,
        FunctionalId::FlexuralLinear => linear_energy(chart, eta, &zero, params, grid)?.k_f,
        FunctionalId::MembraneSimplified => simplified_energy(eta, &zero, params, grid)?.k_m,
        FunctionalId::FlexuralSimplified => simplified_energy(eta, &zero, params, grid)?.k_f,
        FunctionalId::Load => nonlinear_energy(chart, eta, &zero, params, grid)?.load,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteEnergy {
            context: format!("gateaux evaluation of {id:?}"),
        })
    }
}

/// Directional derivative of the selected functional at `eta` in direction
/// `direction`. The chart is ignored by the simplified functionals, which
/// live on the flat torus.
pub fn gateaux_derivative(
    id: FunctionalId,
    chart: &Chart,
    eta: &ScalarField,
    direction: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<f64> {
    grid.matches(eta)?;
    grid.matches(direction)?;

    let diff = |tau: f64| -> Result<f64> {
        let mut plus = eta.clone();
        plus.axpy(tau, direction);
        let mut minus = eta.clone();
        minus.axpy(-tau, direction);
        Ok((evaluate(id, chart, &plus, params, grid)? - evaluate(id, chart, &minus, params, grid)?)
            / (2.0 * tau))
    };

    let d_coarse = diff(1e-4)?;
    let d_fine = diff(5e-5)?;
    Ok((4.0 * d_fine - d_coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasticity::{simplified_force, ScalarLoad, VectorLoad};
    use crate::spectral;
    use approx::assert_abs_diff_eq;

    const TAU: f64 = 2.0 * std::f64::consts::PI;

    fn grid() -> SpectralGrid {
        SpectralGrid::new(32, 32, (TAU, TAU)).unwrap()
    }

    fn flat() -> Chart {
        Chart::flat(TAU, TAU)
    }

    fn eta_probe(g: &SpectralGrid) -> ScalarField {
        g.sample(|y1, y2| 0.4 * y1.sin() * (2.0 * y2).cos() + 0.2 * (y1 - y2).sin())
    }

    fn dir_probe(g: &SpectralGrid) -> ScalarField {
        g.sample(|y1, y2| 0.3 * (2.0 * y1 + y2).cos() + 0.5 * y2.sin())
    }

    #[test]
    fn simplified_membrane_matches_analytic_pairing() {
        let g = grid();
        let params = ShellParams {
            nu_e: 1.7,
            ..Default::default()
        };
        let eta = eta_probe(&g);
        let p = dir_probe(&g);
        let got = gateaux_derivative(
            FunctionalId::MembraneSimplified,
            &flat(),
            &eta,
            &p,
            &params,
            &g,
        )
        .unwrap();
        let expected = params.nu_e * g.inner(&eta, &p);
        assert!(
            (got - expected).abs() <= 1e-8 * (1.0 + expected.abs()),
            "{got} vs {expected}"
        );
    }

    #[test]
    fn simplified_flexural_matches_analytic_pairing() {
        let g = grid();
        let params = ShellParams {
            alpha: 1.3,
            beta: -0.7,
            ..Default::default()
        };
        let eta = eta_probe(&g);
        let p = dir_probe(&g);
        let got = gateaux_derivative(
            FunctionalId::FlexuralSimplified,
            &flat(),
            &eta,
            &p,
            &params,
            &g,
        )
        .unwrap();
        let bih = spectral::biharmonic(&g, &eta);
        let lap = spectral::laplacian(&g, &eta);
        let mut force = bih.scaled(params.alpha);
        force.axpy(-params.beta, &lap);
        let expected = g.inner(&force, &p);
        assert!(
            (got - expected).abs() <= 1e-6 * (1.0 + expected.abs()),
            "{got} vs {expected}"
        );
    }

    #[test]
    fn combined_simplified_derivative_matches_force_pairing() {
        let g = grid();
        let params = ShellParams {
            nu_e: 0.9,
            alpha: 1.1,
            beta: 0.4,
            ..Default::default()
        };
        let eta = eta_probe(&g);
        let p = dir_probe(&g);
        let got = gateaux_derivative(FunctionalId::MembraneSimplified, &flat(), &eta, &p, &params, &g)
            .unwrap()
            + gateaux_derivative(FunctionalId::FlexuralSimplified, &flat(), &eta, &p, &params, &g)
                .unwrap();
        let force = simplified_force(&eta, &params, &g).unwrap();
        let expected = g.inner(&force, &p);
        assert!((got - expected).abs() <= 1e-6 * (1.0 + expected.abs()));
    }

    #[test]
    fn load_derivative_is_exact_and_base_point_independent() {
        let g = grid();
        let params = ShellParams {
            g_vec: VectorLoad::Constant([0.2, -0.1, 0.8]),
            g_scal: ScalarLoad::Constant(0.3),
            ..Default::default()
        };
        let p = dir_probe(&g);
        // flat chart: n = e3 so the pairing weight is (0.8 + 0.3)
        let expected = 1.1 * g.integral(&p);

        let at_zero = gateaux_derivative(
            FunctionalId::Load,
            &flat(),
            &ScalarField::zeros(32, 32),
            &p,
            &params,
            &g,
        )
        .unwrap();
        // small base amplitude keeps the difference-quotient floor
        // eps * |l(eta)| / tau below the agreement tolerance
        let base = eta_probe(&g).scaled(0.05);
        let at_eta =
            gateaux_derivative(FunctionalId::Load, &flat(), &base, &p, &params, &g).unwrap();
        assert_abs_diff_eq!(at_zero, expected, epsilon = 1e-9);
        assert_abs_diff_eq!(at_zero, at_eta, epsilon = 1e-12 * (1.0 + expected.abs()));
    }

    #[test]
    fn quadratic_functionals_satisfy_euler_relation() {
        // F quadratic: dF(eta)[eta] = 2 F(eta)
        let g = grid();
        let chart = Chart::from_id("graph:waves").unwrap();
        let params = ShellParams::default();
        let eta = eta_probe(&g);
        let zero = ScalarField::zeros(32, 32);
        let lin = linear_energy(&chart, &eta, &zero, &params, &g).unwrap();
        for (id, expected) in [
            (FunctionalId::MembraneLinear, 2.0 * lin.k_m),
            (FunctionalId::FlexuralLinear, 2.0 * lin.k_f),
        ] {
            let got = gateaux_derivative(id, &chart, &eta, &eta, &params, &g).unwrap();
            assert!(
                (got - expected).abs() <= 1e-7 * (1.0 + expected.abs()),
                "{id:?}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn nonlinear_derivative_approaches_linearized_at_small_amplitude() {
        let g = grid();
        let chart = Chart::from_id("graph:waves").unwrap();
        let params = ShellParams::default();
        // phases break the parity that would suppress the cubic term
        let eta = g.sample(|y1, y2| {
            0.4 * (y1 + 0.7).sin() * (2.0 * y2 - 0.3).cos() + 0.2 * (y1 - y2 + 0.4).sin()
        });
        let p = g.sample(|y1, y2| 0.3 * (2.0 * y1 + y2 + 0.9).cos() + 0.5 * (y2 + 0.2).sin());
        let gap = |amp: f64| -> f64 {
            let scaled = eta.scaled(amp);
            let non =
                gateaux_derivative(FunctionalId::MembraneNonlinear, &chart, &scaled, &p, &params, &g)
                    .unwrap();
            let lin =
                gateaux_derivative(FunctionalId::MembraneLinear, &chart, &scaled, &p, &params, &g)
                    .unwrap();
            (non - lin).abs()
        };
        // the mismatch is quadratic in the amplitude
        let ratio = gap(1e-2) / gap(5e-3);
        assert!((3.0..=5.0).contains(&ratio), "ratio {ratio}");
    }
}
