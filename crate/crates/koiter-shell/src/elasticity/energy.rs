//! Energy quadrature over the periodic grid.
//!
//! Surface integrals use the rectangle rule, which is spectrally accurate
//! for smooth periodic integrands; displacement derivatives come from
//! discrete Fourier differentiation. Row sums may be computed in parallel
//! but are always reduced in row order, so results never depend on the
//! worker count.

use super::tensor::elasticity_tensor;
use super::{EnergyBreakdown, ShellParams};
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::geometry::{
    assemble_eta_n_hessian, change_of_metric, evaluate_frame, linearized_change_of_curvature,
    linearized_change_of_metric, modified_change_of_curvature, Chart, DisplacementJet, SymTensor2,
};
use crate::spectral::{self, SpectralGrid};

#[derive(Clone, Copy)]
enum EnergyKind {
    Nonlinear,
    Linearized,
}

#[derive(Default, Clone, Copy)]
struct RowSums {
    k_m: f64,
    k_f: f64,
    load: f64,
    kinetic: f64,
    grad_inf: f64,
}

fn check_chart_domain(chart: &Chart, grid: &SpectralGrid) -> Result<()> {
    let (l1, l2) = chart.domain();
    let (e1, e2) = grid.extents();
    if (l1 - e1).abs() > 1e-12 * l1.max(1.0) || (l2 - e2).abs() > 1e-12 * l2.max(1.0) {
        return Err(Error::ValidationError {
            constraint: format!(
                "grid extents ({e1}, {e2}) must match the chart domain ({l1}, {l2})"
            ),
        });
    }
    Ok(())
}

fn row_sums(
    chart: &Chart,
    grid: &SpectralGrid,
    params: &ShellParams,
    kind: EnergyKind,
    eta: &ScalarField,
    eta_dot: &ScalarField,
    derivs: &EtaDerivatives,
    g_scal: &ScalarField,
    i1: usize,
) -> Result<RowSums> {
    let gv = params.g_vec.as_vector();
    let mass = params.mass();
    let mem_coeff = 0.5 * params.eps0;
    let flex_coeff = params.eps0.powi(3) / 6.0;
    let mut acc = RowSums::default();
    for i2 in 0..grid.n2() {
        let y = grid.node(i1, i2);
        let jet = derivs.jet_at(eta, i1, i2);
        let frame = evaluate_frame(chart, y)?;
        let c = elasticity_tensor(&frame, params);
        let (g, r) = match kind {
            EnergyKind::Nonlinear => {
                let s = assemble_eta_n_hessian(chart, y, &jet)?;
                (
                    change_of_metric(chart, y, &jet)?,
                    modified_change_of_curvature(chart, y, &jet, &s)?,
                )
            }
            EnergyKind::Linearized => (
                linearized_change_of_metric(chart, y, jet.eta)?,
                linearized_change_of_curvature(chart, y, &jet)?,
            ),
        };
        let w = frame.w;
        acc.k_m += mem_coeff * c.quadratic(&g) * w;
        acc.k_f += flex_coeff * c.quadratic(&r) * w;
        let gn = gv[0] * frame.n[0] + gv[1] * frame.n[1] + gv[2] * frame.n[2];
        acc.load += (gn + g_scal.at(i1, i2)) * jet.eta * w;
        let v = eta_dot.at(i1, i2);
        acc.kinetic += 0.5 * mass * v * v * w;
        acc.grad_inf = acc
            .grad_inf
            .max(jet.grad[0].abs())
            .max(jet.grad[1].abs());
    }
    Ok(acc)
}

struct EtaDerivatives {
    g1: ScalarField,
    g2: ScalarField,
    h11: ScalarField,
    h12: ScalarField,
    h22: ScalarField,
}

impl EtaDerivatives {
    fn compute(grid: &SpectralGrid, eta: &ScalarField) -> Self {
        let (g1, g2) = spectral::grad(grid, eta);
        let (h11, h12, h22) = spectral::hessian(grid, eta);
        Self {
            g1,
            g2,
            h11,
            h12,
            h22,
        }
    }

    fn jet_at(&self, eta: &ScalarField, i1: usize, i2: usize) -> DisplacementJet {
        DisplacementJet {
            eta: eta.at(i1, i2),
            grad: [self.g1.at(i1, i2), self.g2.at(i1, i2)],
            hess: SymTensor2::new(self.h11.at(i1, i2), self.h12.at(i1, i2), self.h22.at(i1, i2)),
        }
    }
}

fn surface_energy(
    chart: &Chart,
    eta: &ScalarField,
    eta_dot: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
    kind: EnergyKind,
) -> Result<EnergyBreakdown> {
    grid.matches(eta)?;
    grid.matches(eta_dot)?;
    params.validate()?;
    check_chart_domain(chart, grid)?;

    let derivs = EtaDerivatives::compute(grid, eta);
    let g_scal = params.g_scal.sample(grid)?;

    let per_row = |i1: usize| {
        row_sums(
            chart, grid, params, kind, eta, eta_dot, &derivs, &g_scal, i1,
        )
    };

    #[cfg(feature = "parallel")]
    let rows: Vec<Result<RowSums>> = {
        use rayon::prelude::*;
        (0..grid.n1()).into_par_iter().map(per_row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Result<RowSums>> = (0..grid.n1()).map(per_row).collect();

    let mut total = RowSums::default();
    for row in rows {
        let row = row?;
        total.k_m += row.k_m;
        total.k_f += row.k_f;
        total.load += row.load;
        total.kinetic += row.kinetic;
        total.grad_inf = total.grad_inf.max(row.grad_inf);
    }

    let da = grid.cell_area();
    let breakdown = EnergyBreakdown {
        k_m: total.k_m * da,
        k_f: total.k_f * da,
        load: total.load * da,
        kinetic: total.kinetic * da,
        total: (total.k_m + total.k_f - total.load) * da,
        small_displacement_violated: matches!(kind, EnergyKind::Nonlinear)
            && total.grad_inf > params.disp_bound_l,
    };
    if !breakdown.is_finite() {
        return Err(Error::NonFiniteEnergy {
            context: "surface energy quadrature".into(),
        });
    }
    Ok(breakdown)
}

/// Full nonlinear shell energy
/// `K = int eps0/2 C:G(x)G + eps0^3/6 C:R#(x)R# - (g.n + g) eta  dy_n`
/// plus the kinetic energy of `eta_dot`.
pub fn nonlinear_energy(
    chart: &Chart,
    eta: &ScalarField,
    eta_dot: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<EnergyBreakdown> {
    surface_energy(chart, eta, eta_dot, params, grid, EnergyKind::Nonlinear)
}

/// Same quadrature with the linearized change of metric and curvature.
pub fn linear_energy(
    chart: &Chart,
    eta: &ScalarField,
    eta_dot: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<EnergyBreakdown> {
    surface_energy(chart, eta, eta_dot, params, grid, EnergyKind::Linearized)
}

/// Simplified constant-coefficient energies on the flat torus (`w = 1`):
///
/// `k_m = nu_e/2 int eta^2`, `k_f = 1/2 int (alpha |hess eta|^2 + beta
/// |grad eta|^2)`, `kinetic = eps0 rho_s / 2 int eta_dot^2`.
pub fn simplified_energy(
    eta: &ScalarField,
    eta_dot: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<EnergyBreakdown> {
    grid.matches(eta)?;
    grid.matches(eta_dot)?;

    let (g1, g2) = spectral::grad(grid, eta);
    let (h11, h12, h22) = spectral::hessian(grid, eta);

    let mut eta_sq = 0.0;
    let mut hess_sq = 0.0;
    let mut grad_sq = 0.0;
    let mut vel_sq = 0.0;
    for i in 0..eta.len() {
        let e = eta.data()[i];
        eta_sq += e * e;
        let (a, b, c) = (h11.data()[i], h12.data()[i], h22.data()[i]);
        hess_sq += a * a + 2.0 * b * b + c * c;
        let (p, q) = (g1.data()[i], g2.data()[i]);
        grad_sq += p * p + q * q;
        let v = eta_dot.data()[i];
        vel_sq += v * v;
    }
    let da = grid.cell_area();
    let k_m = 0.5 * params.nu_e * eta_sq * da;
    let k_f = 0.5 * (params.alpha * hess_sq + params.beta * grad_sq) * da;
    let kinetic = 0.5 * params.mass() * vel_sq * da;
    let breakdown = EnergyBreakdown {
        k_m,
        k_f,
        load: 0.0,
        kinetic,
        total: k_m + k_f,
        small_displacement_violated: false,
    };
    if !breakdown.is_finite() {
        return Err(Error::NonFiniteEnergy {
            context: "simplified energy".into(),
        });
    }
    Ok(breakdown)
}

/// Restoring force of the simplified model,
/// `nu_e eta + alpha lap^2 eta - beta lap eta`, via one fused Fourier symbol
/// `nu_e + alpha |k|^4 + beta |k|^2`.
pub fn simplified_force(
    eta: &ScalarField,
    params: &ShellParams,
    grid: &SpectralGrid,
) -> Result<ScalarField> {
    grid.matches(eta)?;
    let mut spec = grid.forward(eta);
    for (s, v) in spec.iter_mut().enumerate() {
        let (k1, k2) = grid.wavenumber(s);
        let k_sq = k1 * k1 + k2 * k2;
        *v *= params.nu_e + params.alpha * k_sq * k_sq + params.beta * k_sq;
    }
    Ok(grid.inverse(&spec))
}

/// Lower-bound estimate of the membrane coercivity constant `c` in
/// `K_m_lin(eta) >= c/2 int eta^2 dy_n`, obtained by minimizing the Rayleigh
/// quotient over the supplied probe fields. Report-only: nothing consumes
/// this automatically.
pub fn membrane_coercivity_estimate(
    chart: &Chart,
    params: &ShellParams,
    grid: &SpectralGrid,
    probes: &[ScalarField],
) -> Result<f64> {
    let zero = ScalarField::zeros(grid.n1(), grid.n2());
    let mut best = f64::INFINITY;
    for probe in probes {
        grid.matches(probe)?;
        // weighted L2 norm against the reference area element
        let mut denom = 0.0;
        for i1 in 0..grid.n1() {
            for i2 in 0..grid.n2() {
                let frame = evaluate_frame(chart, grid.node(i1, i2))?;
                let e = probe.at(i1, i2);
                denom += e * e * frame.w;
            }
        }
        denom *= grid.cell_area();
        if denom < 1e-14 {
            continue;
        }
        let k_m = linear_energy(chart, probe, &zero, params, grid)?.k_m;
        best = best.min(2.0 * k_m / denom);
    }
    if best.is_finite() {
        Ok(best)
    } else {
        Err(Error::NonFiniteEnergy {
            context: "coercivity estimate (no usable probe fields)".into(),
        })
    }
}
