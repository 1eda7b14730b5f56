//! The transport operators of the momentum and kinematic equations.

use super::noise::SigmaField;
use crate::field::ScalarField;
use crate::spectral::{Complex64, SpectralGrid, Workspace};

/// Pure advection `sigma . grad v` (the kinematic noise operator carries no
/// divergence part).
pub fn advect(sigma: &SigmaField, v: &ScalarField, grid: &SpectralGrid) -> ScalarField {
    let mut ws = Workspace::new(grid);
    let mut out = ScalarField::zeros(grid.n1(), grid.n2());
    let mut bufs = TransportBuffers::new(grid);
    advect_into(sigma, v.data(), grid, &mut ws, &mut bufs, out.data_mut());
    out
}

/// Momentum transport operator `sigma . grad v + (v div sigma) / 2`,
/// evaluated in the divergence-split average form
/// `(sigma . grad v + div(sigma v)) / 2`.
///
/// The split form pairs the pointwise products with exact discrete
/// integration by parts, so `<u, L v> + <L u, v>` vanishes to machine
/// precision for any grid fields; transport noise built on it cannot pump
/// the discrete kinetic energy.
pub fn transport_operator(sigma: &SigmaField, v: &ScalarField, grid: &SpectralGrid) -> ScalarField {
    let mut ws = Workspace::new(grid);
    let mut out = ScalarField::zeros(grid.n1(), grid.n2());
    let mut bufs = TransportBuffers::new(grid);
    transport_into(sigma, v.data(), grid, &mut ws, &mut bufs, out.data_mut());
    out
}

/// Scratch fields shared by the stepper-facing kernels.
pub(crate) struct TransportBuffers {
    pub spec_a: Vec<Complex64>,
    pub spec_b: Vec<Complex64>,
    pub spec_c: Vec<Complex64>,
    pub d1: Vec<f64>,
    pub d2: Vec<f64>,
    pub p1: Vec<f64>,
    pub p2: Vec<f64>,
}

impl TransportBuffers {
    pub fn new(grid: &SpectralGrid) -> Self {
        let n = grid.len();
        Self {
            spec_a: vec![Complex64::default(); n],
            spec_b: vec![Complex64::default(); n],
            spec_c: vec![Complex64::default(); n],
            d1: vec![0.0; n],
            d2: vec![0.0; n],
            p1: vec![0.0; n],
            p2: vec![0.0; n],
        }
    }
}

/// `out = sigma . grad v` written into a caller buffer.
pub(crate) fn advect_into(
    sigma: &SigmaField,
    v: &[f64],
    grid: &SpectralGrid,
    ws: &mut Workspace,
    bufs: &mut TransportBuffers,
    out: &mut [f64],
) {
    grid.forward_into(v, ws, &mut bufs.spec_a);
    grid.grad_symbols(&bufs.spec_a, &mut bufs.spec_b, &mut bufs.spec_c);
    grid.inverse_pair_into(&bufs.spec_b, &bufs.spec_c, ws, &mut bufs.d1, &mut bufs.d2);
    let s1 = sigma.u1.data();
    let s2 = sigma.u2.data();
    for i in 0..out.len() {
        out[i] = s1[i] * bufs.d1[i] + s2[i] * bufs.d2[i];
    }
}

/// `out = (sigma . grad v + div(sigma v)) / 2` written into a caller buffer.
pub(crate) fn transport_into(
    sigma: &SigmaField,
    v: &[f64],
    grid: &SpectralGrid,
    ws: &mut Workspace,
    bufs: &mut TransportBuffers,
    out: &mut [f64],
) {
    advect_into(sigma, v, grid, ws, bufs, out);
    let s1 = sigma.u1.data();
    let s2 = sigma.u2.data();
    for i in 0..v.len() {
        bufs.p1[i] = s1[i] * v[i];
        bufs.p2[i] = s2[i] * v[i];
    }
    grid.forward_pair_into(&bufs.p1, &bufs.p2, ws, &mut bufs.spec_a, &mut bufs.spec_b);
    grid.div_symbols(&bufs.spec_a, &bufs.spec_b, &mut bufs.spec_c);
    grid.inverse_into(&bufs.spec_c, ws, &mut bufs.d1);
    for i in 0..out.len() {
        out[i] = 0.5 * (out[i] + bufs.d1[i]);
    }
}
