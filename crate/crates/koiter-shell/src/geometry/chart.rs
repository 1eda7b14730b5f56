//! Analytic surface charts with supplied derivatives.

use super::V3;
use crate::error::{Error, Result};

type Map1 = Box<dyn Fn(f64, f64) -> V3 + Send + Sync>;
type Map2 = Box<dyn Fn(f64, f64) -> [V3; 2] + Send + Sync>;
type Map3 = Box<dyn Fn(f64, f64) -> [V3; 3] + Send + Sync>;
type Map4 = Box<dyn Fn(f64, f64) -> [V3; 4] + Send + Sync>;

/// A parametrized mid-surface over a periodic rectangle.
///
/// Second partials are stored as the three distinct components
/// `(d11, d12, d22)`; third partials, when supplied, as
/// `(d111, d112, d122, d222)`. Charts whose embedding drifts by a constant
/// offset per period (the plane and the cylinder axis) are supported: all
/// derivative data must still be strictly periodic.
pub struct Chart {
    id: String,
    domain: (f64, f64),
    phi: Map1,
    d_phi: Map2,
    d2_phi: Map3,
    d3_phi: Option<Map4>,
}

impl std::fmt::Debug for Chart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Chart")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("has_d3", &self.d3_phi.is_some())
            .finish()
    }
}

impl Chart {
    pub fn new(
        id: impl Into<String>,
        domain: (f64, f64),
        phi: Map1,
        d_phi: Map2,
        d2_phi: Map3,
        d3_phi: Option<Map4>,
    ) -> Self {
        Self {
            id: id.into(),
            domain,
            phi,
            d_phi,
            d2_phi,
            d3_phi,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn has_third_derivatives(&self) -> bool {
        self.d3_phi.is_some()
    }

    /// Reduces a point into the fundamental rectangle.
    pub fn wrap(&self, y: (f64, f64)) -> (f64, f64) {
        (y.0.rem_euclid(self.domain.0), y.1.rem_euclid(self.domain.1))
    }

    pub fn phi(&self, y: (f64, f64)) -> V3 {
        (self.phi)(y.0, y.1)
    }

    pub fn d_phi(&self, y: (f64, f64)) -> [V3; 2] {
        (self.d_phi)(y.0, y.1)
    }

    pub fn d2_phi(&self, y: (f64, f64)) -> [V3; 3] {
        (self.d2_phi)(y.0, y.1)
    }

    pub fn d3_phi(&self, y: (f64, f64)) -> Option<[V3; 4]> {
        self.d3_phi.as_ref().map(|f| f(y.0, y.1))
    }

    /// Identity embedding of the flat torus.
    pub fn flat(l1: f64, l2: f64) -> Chart {
        Chart::new(
            "flat",
            (l1, l2),
            Box::new(|y1, y2| V3::new(y1, y2, 0.0)),
            Box::new(|_, _| [V3::new(1.0, 0.0, 0.0), V3::new(0.0, 1.0, 0.0)]),
            Box::new(|_, _| [V3::zeros(); 3]),
            Some(Box::new(|_, _| [V3::zeros(); 4])),
        )
    }

    /// Spherical coordinates of the radius-`r` sphere; `y1` is the polar
    /// angle, so the chart degenerates on the circles `sin(y1) = 0`.
    pub fn sphere(r: f64) -> Chart {
        let tau = 2.0 * std::f64::consts::PI;
        Chart::new(
            format!("sphere:{r}"),
            (tau, tau),
            Box::new(move |y1, y2| {
                V3::new(r * y1.sin() * y2.cos(), r * y1.sin() * y2.sin(), r * y1.cos())
            }),
            Box::new(move |y1, y2| {
                [
                    V3::new(r * y1.cos() * y2.cos(), r * y1.cos() * y2.sin(), -r * y1.sin()),
                    V3::new(-r * y1.sin() * y2.sin(), r * y1.sin() * y2.cos(), 0.0),
                ]
            }),
            Box::new(move |y1, y2| {
                [
                    V3::new(-r * y1.sin() * y2.cos(), -r * y1.sin() * y2.sin(), -r * y1.cos()),
                    V3::new(-r * y1.cos() * y2.sin(), r * y1.cos() * y2.cos(), 0.0),
                    V3::new(-r * y1.sin() * y2.cos(), -r * y1.sin() * y2.sin(), 0.0),
                ]
            }),
            Some(Box::new(move |y1, y2| {
                let d1 =
                    V3::new(r * y1.cos() * y2.cos(), r * y1.cos() * y2.sin(), -r * y1.sin());
                let d2 = V3::new(-r * y1.sin() * y2.sin(), r * y1.sin() * y2.cos(), 0.0);
                [
                    -d1,
                    -d2,
                    V3::new(-r * y1.cos() * y2.cos(), -r * y1.cos() * y2.sin(), 0.0),
                    V3::new(r * y1.sin() * y2.sin(), -r * y1.sin() * y2.cos(), 0.0),
                ]
            })),
        )
    }

    /// Circular cylinder of radius `r` with periodic axial coordinate.
    pub fn cylinder(r: f64) -> Chart {
        let tau = 2.0 * std::f64::consts::PI;
        Chart::new(
            format!("cylinder:{r}"),
            (tau, tau),
            Box::new(move |y1, y2| V3::new(r * y1.cos(), r * y1.sin(), y2)),
            Box::new(move |y1, _| {
                [
                    V3::new(-r * y1.sin(), r * y1.cos(), 0.0),
                    V3::new(0.0, 0.0, 1.0),
                ]
            }),
            Box::new(move |y1, _| {
                [
                    V3::new(-r * y1.cos(), -r * y1.sin(), 0.0),
                    V3::zeros(),
                    V3::zeros(),
                ]
            }),
            Some(Box::new(move |y1, _| {
                [
                    V3::new(r * y1.sin(), -r * y1.cos(), 0.0),
                    V3::zeros(),
                    V3::zeros(),
                    V3::zeros(),
                ]
            })),
        )
    }

    /// Graph surface `(y1, y2, h(y1, y2))` with a trigonometric height
    /// function, fully analytic through third derivatives.
    pub fn trig_graph(id: impl Into<String>, terms: Vec<TrigTerm>) -> Chart {
        let tau = 2.0 * std::f64::consts::PI;
        let t0 = terms.clone();
        let t1 = terms.clone();
        let t2 = terms.clone();
        let t3 = terms;
        Chart::new(
            id,
            (tau, tau),
            Box::new(move |y1, y2| V3::new(y1, y2, height(&t0, y1, y2, 0, 0))),
            Box::new(move |y1, y2| {
                [
                    V3::new(1.0, 0.0, height(&t1, y1, y2, 1, 0)),
                    V3::new(0.0, 1.0, height(&t1, y1, y2, 0, 1)),
                ]
            }),
            Box::new(move |y1, y2| {
                [
                    V3::new(0.0, 0.0, height(&t2, y1, y2, 2, 0)),
                    V3::new(0.0, 0.0, height(&t2, y1, y2, 1, 1)),
                    V3::new(0.0, 0.0, height(&t2, y1, y2, 0, 2)),
                ]
            }),
            Some(Box::new(move |y1, y2| {
                [
                    V3::new(0.0, 0.0, height(&t3, y1, y2, 3, 0)),
                    V3::new(0.0, 0.0, height(&t3, y1, y2, 2, 1)),
                    V3::new(0.0, 0.0, height(&t3, y1, y2, 1, 2)),
                    V3::new(0.0, 0.0, height(&t3, y1, y2, 0, 3)),
                ]
            })),
        )
    }

    /// Resolves a chart registry id: `flat`, `sphere:R`, `cylinder:R`,
    /// `graph:waves`.
    pub fn from_id(id: &str) -> Result<Chart> {
        let bad = |reason: &str| Error::BadFieldSpec {
            spec: id.to_string(),
            reason: reason.to_string(),
        };
        if id == "flat" {
            let tau = 2.0 * std::f64::consts::PI;
            return Ok(Chart::flat(tau, tau));
        }
        if let Some(r) = id.strip_prefix("sphere:") {
            let r: f64 = r.parse().map_err(|_| bad("radius must be a number"))?;
            if !(r > 0.0) {
                return Err(bad("radius must be positive"));
            }
            return Ok(Chart::sphere(r));
        }
        if let Some(r) = id.strip_prefix("cylinder:") {
            let r: f64 = r.parse().map_err(|_| bad("radius must be a number"))?;
            if !(r > 0.0) {
                return Err(bad("radius must be positive"));
            }
            return Ok(Chart::cylinder(r));
        }
        if let Some(name) = id.strip_prefix("graph:") {
            return match name {
                "waves" => Ok(Chart::trig_graph(
                    "graph:waves",
                    vec![
                        TrigTerm::new(1, 1, 0.15, -std::f64::consts::FRAC_PI_2),
                        TrigTerm::new(1, -1, 0.15, -std::f64::consts::FRAC_PI_2),
                    ],
                )),
                _ => Err(bad("unknown graph surface id (registered: waves)")),
            };
        }
        Err(bad(
            "unknown chart id (registered: flat, sphere:R, cylinder:R, graph:waves)",
        ))
    }
}

/// One term `amp * cos(m1*y1 + m2*y2 + phase)` of a trigonometric height.
#[derive(Debug, Clone, Copy)]
pub struct TrigTerm {
    pub m1: i32,
    pub m2: i32,
    pub amp: f64,
    pub phase: f64,
}

impl TrigTerm {
    pub fn new(m1: i32, m2: i32, amp: f64, phase: f64) -> Self {
        Self { m1, m2, amp, phase }
    }
}

/// Mixed partial of order `(d1, d2)` of the trigonometric sum. Each
/// derivative multiplies by the mode number and advances the phase by pi/2.
fn height(terms: &[TrigTerm], y1: f64, y2: f64, d1: u32, d2: u32) -> f64 {
    let shift = (d1 + d2) as f64 * std::f64::consts::FRAC_PI_2;
    terms
        .iter()
        .map(|t| {
            let factor = (t.m1 as f64).powi(d1 as i32) * (t.m2 as f64).powi(d2 as i32);
            t.amp * factor * (t.m1 as f64 * y1 + t.m2 as f64 * y2 + t.phase + shift).cos()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn registry_ids_resolve() {
        assert!(Chart::from_id("flat").is_ok());
        assert!(Chart::from_id("sphere:2").is_ok());
        assert!(Chart::from_id("cylinder:1").is_ok());
        assert!(Chart::from_id("graph:waves").is_ok());
        assert!(Chart::from_id("torus:1").is_err());
        assert!(Chart::from_id("sphere:-1").is_err());
    }

    #[test]
    fn wrap_reduces_into_domain() {
        let c = Chart::from_id("flat").unwrap();
        let tau = 2.0 * std::f64::consts::PI;
        let (y1, y2) = c.wrap((-0.5, tau + 0.25));
        assert_abs_diff_eq!(y1, tau - 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(y2, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn trig_graph_derivatives_consistent_with_finite_differences() {
        let c = Chart::from_id("graph:waves").unwrap();
        let y = (1.3, 0.4);
        let h = 1e-5;
        let fd1 = (c.phi((y.0 + h, y.1)) - c.phi((y.0 - h, y.1))) / (2.0 * h);
        let [d1, _] = c.d_phi(y);
        assert!((fd1 - d1).norm() < 1e-9);

        let fd12 = (c.d_phi((y.0, y.1 + h))[0] - c.d_phi((y.0, y.1 - h))[0]) / (2.0 * h);
        let d2 = c.d2_phi(y);
        assert!((fd12 - d2[1]).norm() < 1e-9);
    }

    #[test]
    fn sphere_third_derivatives_match_finite_differences() {
        let c = Chart::sphere(2.0);
        let y = (1.1, 0.7);
        let h = 1e-5;
        let d3 = c.d3_phi(y).unwrap();
        // d111 via fd of d2[0] in y1
        let fd = (c.d2_phi((y.0 + h, y.1))[0] - c.d2_phi((y.0 - h, y.1))[0]) / (2.0 * h);
        assert!((fd - d3[0]).norm() < 1e-9);
        // d122 via fd of d2[2] in y1
        let fd = (c.d2_phi((y.0 + h, y.1))[2] - c.d2_phi((y.0 - h, y.1))[2]) / (2.0 * h);
        assert!((fd - d3[2]).norm() < 1e-9);
        // d222 via fd of d2[2] in y2
        let fd = (c.d2_phi((y.0, y.1 + h))[2] - c.d2_phi((y.0, y.1 - h))[2]) / (2.0 * h);
        assert!((fd - d3[3]).norm() < 1e-9);
    }
}
