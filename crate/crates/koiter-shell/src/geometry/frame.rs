//! Surface frames, fundamental forms, and derivatives of the unit normal.

use super::{Chart, SymTensor2, EPS_W, V3};
use crate::error::{Error, Result};

/// Covariant and contravariant tangent frame at a chart point.
#[derive(Debug, Clone)]
pub struct Frame {
    pub t1: V3,
    pub t2: V3,
    pub n: V3,
    /// Area-element weight `|t1 x t2|`, strictly positive.
    pub w: f64,
    pub t1_star: V3,
    pub t2_star: V3,
}

impl Frame {
    /// Contravariant metric components `a*_ij = t_i* . t_j*`.
    pub fn contravariant_metric(&self) -> SymTensor2 {
        SymTensor2::new(
            self.t1_star.dot(&self.t1_star),
            self.t1_star.dot(&self.t2_star),
            self.t2_star.dot(&self.t2_star),
        )
    }
}

/// Evaluates the tangent frame. The point is reduced into the fundamental
/// rectangle first.
pub fn evaluate_frame(chart: &Chart, y: (f64, f64)) -> Result<Frame> {
    let y = chart.wrap(y);
    let [t1, t2] = chart.d_phi(y);
    let m = t1.cross(&t2);
    let w = m.norm();
    if w < EPS_W {
        return Err(Error::DegenerateChart {
            w,
            eps: EPS_W,
            y1: y.0,
            y2: y.1,
        });
    }
    let n = m / w;
    let t1_star = t2.cross(&n) / w;
    let t2_star = -t1.cross(&n) / w;
    Ok(Frame {
        t1,
        t2,
        n,
        w,
        t1_star,
        t2_star,
    })
}

/// First and second fundamental forms `(A, B)` at a chart point.
pub fn fundamental_forms(chart: &Chart, y: (f64, f64)) -> Result<(SymTensor2, SymTensor2)> {
    let y = chart.wrap(y);
    let frame = evaluate_frame(chart, y)?;
    let d2 = chart.d2_phi(y);
    let a = SymTensor2::new(
        frame.t1.dot(&frame.t1),
        frame.t1.dot(&frame.t2),
        frame.t2.dot(&frame.t2),
    );
    let b = SymTensor2::new(
        frame.n.dot(&d2[0]),
        frame.n.dot(&d2[1]),
        frame.n.dot(&d2[2]),
    );
    Ok((a, b))
}

/// The unit normal together with its first and (optionally exact) second
/// derivatives.
#[derive(Debug, Clone)]
pub struct NormalJet {
    pub n: V3,
    /// `(d1 n, d2 n)`
    pub dn: [V3; 2],
    /// `(d11 n, d12 n, d22 n)`
    pub d2n: [V3; 3],
}

/// First derivative of the unit normal from second-order chart data.
///
/// With `m = t1 x t2`, `w = |m|`:
/// `di n = mi / w - m (m . mi) / w^3` where `mi = phi_1i x t2 + t1 x phi_2i`.
fn dn_from_chart(chart: &Chart, y: (f64, f64)) -> Result<(V3, [V3; 2], f64)> {
    let [t1, t2] = chart.d_phi(y);
    let d2 = chart.d2_phi(y);
    let m = t1.cross(&t2);
    let w = m.norm();
    if w < EPS_W {
        return Err(Error::DegenerateChart {
            w,
            eps: EPS_W,
            y1: y.0,
            y2: y.1,
        });
    }
    let n = m / w;
    let mut dn = [V3::zeros(); 2];
    for i in 0..2 {
        // phi_1i and phi_2i from the (11, 12, 22) storage
        let p1i = d2[i]; // (11) for i=0, (12) for i=1
        let p2i = d2[i + 1]; // (12) for i=0, (22) for i=1
        let mi = p1i.cross(&t2) + t1.cross(&p2i);
        dn[i] = mi / w - m * (m.dot(&mi)) / (w * w * w);
    }
    Ok((n, dn, w))
}

/// Assembles the normal and its derivatives at a chart point.
///
/// The second derivatives are analytic when the chart supplies third-order
/// data; otherwise they fall back to 4th-order central differences of the
/// analytic first derivative with step `h = period / 4096`.
pub fn normal_derivatives(chart: &Chart, y: (f64, f64)) -> Result<NormalJet> {
    let y = chart.wrap(y);
    let (n, dn, w) = dn_from_chart(chart, y)?;

    let d2n = if chart.has_third_derivatives() {
        let [t1, t2] = chart.d_phi(y);
        let d2 = chart.d2_phi(y);
        let d3 = chart.d3_phi(y).expect("third derivatives present");
        let m = t1.cross(&t2);

        // mi and mij expand the cross product m = t1 x t2; indices into the
        // distinct-component storages: d2 = (11,12,22), d3 = (111,112,122,222)
        let mi = |i: usize| d2[i].cross(&t2) + t1.cross(&d2[i + 1]);
        let mij = |i: usize, j: usize| {
            d3[i + j].cross(&t2) + d2[i].cross(&d2[j + 1]) + d2[j].cross(&d2[i + 1])
                + t1.cross(&d3[i + j + 1])
        };

        let mut out = [V3::zeros(); 3];
        for (slot, (i, j)) in [(0, 0), (0, 1), (1, 1)].iter().enumerate() {
            let (i, j) = (*i, *j);
            let m_i = mi(i);
            let m_j = mi(j);
            let m_ij = mij(i, j);
            let w_i = m.dot(&m_i) / w;
            let w_j = m.dot(&m_j) / w;
            let w_ij = (m_i.dot(&m_j) + m.dot(&m_ij)) / w - w_i * w_j / w;
            out[slot] = m_ij / w - (m_j * w_i + m_i * w_j) / (w * w)
                + m * (2.0 * w_i * w_j) / (w * w * w)
                - m * w_ij / (w * w);
        }
        out
    } else {
        let (l1, l2) = chart.domain();
        let h = [l1 / 4096.0, l2 / 4096.0];
        let dn_at = |y1: f64, y2: f64, j: usize| -> Result<V3> {
            Ok(dn_from_chart(chart, chart.wrap((y1, y2)))?.1[j])
        };
        let central4 = |dir: usize, j: usize| -> Result<V3> {
            let hstep = h[dir];
            let shift = |k: f64| -> (f64, f64) {
                if dir == 0 {
                    (y.0 + k * hstep, y.1)
                } else {
                    (y.0, y.1 + k * hstep)
                }
            };
            let (a2, a1, b1, b2) = (shift(2.0), shift(1.0), shift(-1.0), shift(-2.0));
            Ok(
                (-dn_at(a2.0, a2.1, j)? + 8.0 * dn_at(a1.0, a1.1, j)?
                    - 8.0 * dn_at(b1.0, b1.1, j)?
                    + dn_at(b2.0, b2.1, j)?)
                    / (12.0 * hstep),
            )
        };
        [central4(0, 0)?, central4(0, 1)?, central4(1, 1)?]
    };

    Ok(NormalJet { n, dn, d2n })
}
