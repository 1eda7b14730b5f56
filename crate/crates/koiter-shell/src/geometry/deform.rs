//! Deformation measures of the normally displaced surface.
//!
//! The displaced chart is `phi_eta = phi + eta * n`. The membrane-side
//! quantity is the change of metric `G_eta = (A_eta - A) / 2`; the
//! flexural-side quantity is the modified change of curvature
//! `R_eta# = B_eta / w - B` built from the unnormalized deformed normal
//! `n_eta = d1 phi_eta x d2 phi_eta`, which stays well defined even when the
//! deformed tangents become dependent.

use super::{
    evaluate_frame, fundamental_forms, normal_derivatives, Chart, NormalJet, SymTensor2, V3,
};
use crate::error::Result;

/// Pointwise displacement data: value, gradient, and Hessian of `eta`.
#[derive(Debug, Clone, Copy)]
pub struct DisplacementJet {
    pub eta: f64,
    pub grad: [f64; 2],
    pub hess: SymTensor2,
}

impl DisplacementJet {
    pub fn zero() -> Self {
        Self {
            eta: 0.0,
            grad: [0.0; 2],
            hess: SymTensor2::ZERO,
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            eta: s * self.eta,
            grad: [s * self.grad[0], s * self.grad[1]],
            hess: self.hess.scale(s),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.eta.is_finite()
            && self.grad.iter().all(|g| g.is_finite())
            && self.hess.is_finite()
    }
}

/// First derivatives of `eta * n` from the jet and the normal derivatives.
fn d_eta_n(jet: &DisplacementJet, nj: &NormalJet) -> [V3; 2] {
    [
        nj.n * jet.grad[0] + nj.dn[0] * jet.eta,
        nj.n * jet.grad[1] + nj.dn[1] * jet.eta,
    ]
}

/// Second derivatives `(d11, d12, d22)` of `eta * n`, assembled from the
/// displacement jet and the chart's normal derivatives.
pub fn assemble_eta_n_hessian(
    chart: &Chart,
    y: (f64, f64),
    jet: &DisplacementJet,
) -> Result<[V3; 3]> {
    let nj = normal_derivatives(chart, y)?;
    let h = [jet.hess.a11, jet.hess.a12, jet.hess.a22];
    let mut out = [V3::zeros(); 3];
    for (slot, (i, j)) in [(0usize, 0usize), (0, 1), (1, 1)].iter().enumerate() {
        out[slot] = nj.n * h[slot]
            + nj.dn[*j] * jet.grad[*i]
            + nj.dn[*i] * jet.grad[*j]
            + nj.d2n[slot] * jet.eta;
    }
    Ok(out)
}

/// Change of metric `G_eta = (A_eta - A) / 2` of the displaced surface.
pub fn change_of_metric(chart: &Chart, y: (f64, f64), jet: &DisplacementJet) -> Result<SymTensor2> {
    let frame = evaluate_frame(chart, y)?;
    let nj = normal_derivatives(chart, y)?;
    let d = d_eta_n(jet, &nj);
    let a1 = frame.t1 + d[0];
    let a2 = frame.t2 + d[1];
    Ok(SymTensor2::new(
        0.5 * (a1.dot(&a1) - frame.t1.dot(&frame.t1)),
        0.5 * (a1.dot(&a2) - frame.t1.dot(&frame.t2)),
        0.5 * (a2.dot(&a2) - frame.t2.dot(&frame.t2)),
    ))
}

/// Modified change of curvature `R_eta# = B_eta / w - B`, evaluated through
/// the expanded form
///
/// `R#_ij = n . s_ij - d1(eta n) . b2_ij - d2(eta n) . b1_ij + nt_ij / w`
///
/// with `b1_ij = (t1 x phi_ij)/w`, `b2_ij = (phi_ij x t2)/w`,
/// `s_ij = dij(eta n)`, and `nt` collecting the terms quadratic and cubic in
/// the displacement. The caller supplies `s_ij` (see
/// [`assemble_eta_n_hessian`]).
pub fn modified_change_of_curvature(
    chart: &Chart,
    y: (f64, f64),
    jet: &DisplacementJet,
    hess_eta_n: &[V3; 3],
) -> Result<SymTensor2> {
    let frame = evaluate_frame(chart, y)?;
    let nj = normal_derivatives(chart, y)?;
    let d2 = chart.d2_phi(chart.wrap(y));
    let d = d_eta_n(jet, &nj);
    let (u, v) = (d[0], d[1]);
    let uv = u.cross(&v);
    let w = frame.w;

    let mut comps = [0.0; 3];
    for slot in 0..3 {
        let phi_ij = d2[slot];
        let s = hess_eta_n[slot];
        let b1 = frame.t1.cross(&phi_ij) / w;
        let b2 = phi_ij.cross(&frame.t2) / w;
        let nt = (u.cross(&frame.t2) + frame.t1.cross(&v) + uv).dot(&s) + uv.dot(&phi_ij);
        comps[slot] = frame.n.dot(&s) - u.dot(&b2) - v.dot(&b1) + nt / w;
    }
    Ok(SymTensor2::new(comps[0], comps[1], comps[2]))
}

/// Redundant direct evaluation of `R_eta#` via `n_eta . dij(phi_eta)`,
/// kept as an internal cross-check of the expanded form.
pub fn modified_change_of_curvature_direct(
    chart: &Chart,
    y: (f64, f64),
    jet: &DisplacementJet,
    hess_eta_n: &[V3; 3],
) -> Result<SymTensor2> {
    let frame = evaluate_frame(chart, y)?;
    let nj = normal_derivatives(chart, y)?;
    let (_, b) = fundamental_forms(chart, y)?;
    let d2 = chart.d2_phi(chart.wrap(y));
    let d = d_eta_n(jet, &nj);
    let a1 = frame.t1 + d[0];
    let a2 = frame.t2 + d[1];
    let n_eta = a1.cross(&a2);
    let mut comps = [0.0; 3];
    for slot in 0..3 {
        let b_eta = n_eta.dot(&(d2[slot] + hess_eta_n[slot]));
        comps[slot] = b_eta / frame.w - [b.a11, b.a12, b.a22][slot];
    }
    Ok(SymTensor2::new(comps[0], comps[1], comps[2]))
}

/// Linearized change of metric, the triple-product form
/// `(eta / w) * M` with `M_ij = t1 . (phi_ij x t2)`.
pub fn linearized_change_of_metric(chart: &Chart, y: (f64, f64), eta: f64) -> Result<SymTensor2> {
    let frame = evaluate_frame(chart, y)?;
    let d2 = chart.d2_phi(chart.wrap(y));
    let f = eta / frame.w;
    Ok(SymTensor2::new(
        f * frame.t1.dot(&d2[0].cross(&frame.t2)),
        f * frame.t1.dot(&d2[1].cross(&frame.t2)),
        f * frame.t1.dot(&d2[2].cross(&frame.t2)),
    ))
}

/// Linearized modified change of curvature:
/// `R#lin_ij = n . dij(eta n) - d1(eta n) . b2_ij - d2(eta n) . b1_ij`.
pub fn linearized_change_of_curvature(
    chart: &Chart,
    y: (f64, f64),
    jet: &DisplacementJet,
) -> Result<SymTensor2> {
    let frame = evaluate_frame(chart, y)?;
    let nj = normal_derivatives(chart, y)?;
    let d2 = chart.d2_phi(chart.wrap(y));
    let s = assemble_eta_n_hessian(chart, y, jet)?;
    let d = d_eta_n(jet, &nj);
    let w = frame.w;
    let mut comps = [0.0; 3];
    for slot in 0..3 {
        let b1 = frame.t1.cross(&d2[slot]) / w;
        let b2 = d2[slot].cross(&frame.t2) / w;
        comps[slot] = frame.n.dot(&s[slot]) - d[0].dot(&b2) - d[1].dot(&b1);
    }
    Ok(SymTensor2::new(comps[0], comps[1], comps[2]))
}
