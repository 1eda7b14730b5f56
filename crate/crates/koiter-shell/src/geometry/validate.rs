//! Chart self-checks on a probe grid.

use super::{Chart, EPS_W};

/// Outcome of probing a chart: area-weight floor, finite-difference
/// consistency of the supplied first derivatives, and periodicity of the
/// chart data across the identified edges.
///
/// The embedding itself may drift by a constant offset per period (plane,
/// cylinder axis); the offset must be uniform along the edge and all
/// derivative data must match strictly.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub min_w: f64,
    pub max_derivative_inconsistency: f64,
    pub periodicity_defect: f64,
    pub probe_resolution: usize,
    pub ok: bool,
}

impl ValidationReport {
    pub const DERIVATIVE_TOL: f64 = 1e-6;
    pub const PERIODICITY_TOL: f64 = 1e-12;
}

pub fn validate_chart(chart: &Chart, probe_resolution: usize) -> ValidationReport {
    let res = probe_resolution.max(8);
    let (l1, l2) = chart.domain();
    let (h1, h2) = (l1 / res as f64, l2 / res as f64);

    let mut min_w = f64::INFINITY;
    let mut max_inc: f64 = 0.0;
    for i in 0..res {
        for j in 0..res {
            let y = (i as f64 * h1, j as f64 * h2);
            let [t1, t2] = chart.d_phi(y);
            min_w = min_w.min(t1.cross(&t2).norm());

            // 4th-order central differences of phi against the supplied d_phi
            let fd_step = [l1 / 4096.0, l2 / 4096.0];
            for dir in 0..2 {
                let h = fd_step[dir];
                let at = |k: f64| {
                    let p = if dir == 0 {
                        (y.0 + k * h, y.1)
                    } else {
                        (y.0, y.1 + k * h)
                    };
                    chart.phi(p)
                };
                let fd = (-at(2.0) + at(1.0) * 8.0 - at(-1.0) * 8.0 + at(-2.0)) / (12.0 * h);
                let supplied = if dir == 0 { t1 } else { t2 };
                max_inc = max_inc.max((fd - supplied).amax());
            }
        }
    }

    // periodicity across both identified edges; phi may shift by a constant
    let mut defect: f64 = 0.0;
    for dir in 0..2 {
        let offset_at = |s: f64| {
            let y = if dir == 0 { (0.0, s) } else { (s, 0.0) };
            let yp = if dir == 0 { (l1, s) } else { (s, l2) };
            chart.phi(yp) - chart.phi(y)
        };
        let reference = offset_at(0.0);
        for k in 0..res {
            let s = k as f64 * if dir == 0 { h2 } else { h1 };
            defect = defect.max((offset_at(s) - reference).amax());
            let y = if dir == 0 { (0.0, s) } else { (s, 0.0) };
            let yp = if dir == 0 { (l1, s) } else { (s, l2) };
            let da = chart.d_phi(y);
            let db = chart.d_phi(yp);
            defect = defect.max((db[0] - da[0]).amax()).max((db[1] - da[1]).amax());
            let d2a = chart.d2_phi(y);
            let d2b = chart.d2_phi(yp);
            for c in 0..3 {
                defect = defect.max((d2b[c] - d2a[c]).amax());
            }
        }
    }

    ValidationReport {
        min_w,
        max_derivative_inconsistency: max_inc,
        periodicity_defect: defect,
        probe_resolution: res,
        ok: min_w >= EPS_W
            && max_inc <= ValidationReport::DERIVATIVE_TOL
            && defect <= ValidationReport::PERIODICITY_TOL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::V3;

    #[test]
    fn flat_chart_validates() {
        let tau = 2.0 * std::f64::consts::PI;
        let report = validate_chart(&Chart::flat(tau, tau), 64);
        assert!(report.ok, "{report:?}");
        assert!((report.min_w - 1.0).abs() < 1e-14);
    }

    #[test]
    fn graph_chart_validates() {
        let report = validate_chart(&Chart::from_id("graph:waves").unwrap(), 32);
        assert!(report.ok, "{report:?}");
    }

    #[test]
    fn wrong_first_derivative_is_flagged() {
        let tau = 2.0 * std::f64::consts::PI;
        let c = Chart::new(
            "flat-bad-derivative",
            (tau, tau),
            Box::new(|y1, y2| V3::new(y1, y2, 0.0)),
            Box::new(|_, _| [V3::new(1.0 + 1e-3, 0.0, 0.0), V3::new(0.0, 1.0, 0.0)]),
            Box::new(|_, _| [V3::zeros(); 3]),
            None,
        );
        let report = validate_chart(&c, 16);
        assert!(!report.ok);
        assert!(report.max_derivative_inconsistency > 5e-4);
    }

    #[test]
    fn parallel_tangents_are_flagged() {
        let c = Chart::new(
            "degenerate",
            (1.0, 1.0),
            Box::new(|y1, _| V3::new(y1, y1, 0.0)),
            Box::new(|_, _| [V3::new(1.0, 1.0, 0.0), V3::new(1.0, 1.0, 0.0)]),
            Box::new(|_, _| [V3::zeros(); 3]),
            None,
        );
        let report = validate_chart(&c, 16);
        assert!(!report.ok);
        assert!(report.min_w < EPS_W);
    }

    #[test]
    fn sphere_chart_reports_pole_degeneracy() {
        // spherical coordinates collapse on the circles sin(y1) = 0
        let report = validate_chart(&Chart::sphere(2.0), 16);
        assert!(!report.ok);
        assert!(report.min_w < EPS_W);
    }
}
