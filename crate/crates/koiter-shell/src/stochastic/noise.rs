//! Prescribed noise vector fields and Brownian increment blocks.

use std::path::Path;

use super::rng;
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::io;
use crate::spectral::SpectralGrid;

/// Registry of noise field specifications.
///
/// - `none`: deterministic run, no fields
/// - `figure3`: the two fields `2(sin y1, -cos y2)` and `2(-cos y1, sin y2)`
/// - `divfree:k1`: one divergence-free field from the stream function
///   `psi = cos y1 cos y2`
/// - `const:cx,cy`: one uniform field
/// - `grid:<stem>`: one field loaded from `<stem>.sigma1.dump` and
///   `<stem>.sigma2.dump`
#[derive(Debug, Clone, PartialEq)]
pub enum NoiseSpec {
    None,
    Figure3,
    DivFreeK1,
    Constant(f64, f64),
    Grid(String),
}

impl NoiseSpec {
    pub fn parse(s: &str) -> Result<NoiseSpec> {
        let bad = |reason: &str| Error::BadFieldSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        match s {
            "none" => Ok(NoiseSpec::None),
            "figure3" => Ok(NoiseSpec::Figure3),
            "divfree:k1" => Ok(NoiseSpec::DivFreeK1),
            _ => {
                if let Some(rest) = s.strip_prefix("const:") {
                    let parts: Vec<&str> = rest.split(',').collect();
                    if parts.len() != 2 {
                        return Err(bad("const takes two components: const:cx,cy"));
                    }
                    let cx: f64 = parts[0].trim().parse().map_err(|_| bad("bad cx"))?;
                    let cy: f64 = parts[1].trim().parse().map_err(|_| bad("bad cy"))?;
                    Ok(NoiseSpec::Constant(cx, cy))
                } else if let Some(stem) = s.strip_prefix("grid:") {
                    if stem.is_empty() {
                        return Err(bad("grid needs a path stem"));
                    }
                    Ok(NoiseSpec::Grid(stem.to_string()))
                } else {
                    Err(bad(
                        "unknown noise spec (registered: none, figure3, divfree:k1, const:cx,cy, grid:<stem>)",
                    ))
                }
            }
        }
    }
}

impl std::fmt::Display for NoiseSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoiseSpec::None => write!(f, "none"),
            NoiseSpec::Figure3 => write!(f, "figure3"),
            NoiseSpec::DivFreeK1 => write!(f, "divfree:k1"),
            NoiseSpec::Constant(cx, cy) => write!(f, "const:{cx},{cy}"),
            NoiseSpec::Grid(stem) => write!(f, "grid:{stem}"),
        }
    }
}

/// One noise vector field sampled on the grid.
#[derive(Debug, Clone)]
pub struct SigmaField {
    pub u1: ScalarField,
    pub u2: ScalarField,
}

/// The prescribed fields plus the seeding configuration.
#[derive(Debug, Clone)]
pub struct NoiseModel {
    sigmas: Vec<SigmaField>,
    master_seed: u64,
}

impl NoiseModel {
    pub fn n_fields(&self) -> usize {
        self.sigmas.len()
    }

    pub fn sigma(&self, i: usize) -> &SigmaField {
        &self.sigmas[i]
    }

    pub fn sigmas(&self) -> &[SigmaField] {
        &self.sigmas
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }
}

/// Increments of the driving Brownian motions for one step of one path.
#[derive(Debug, Clone, PartialEq)]
pub struct IncrementBlock {
    /// One increment per noise field, units sqrt(time).
    pub dw: Vec<f64>,
    pub step_index: u64,
    pub path_index: u64,
}

fn check_periodic(
    grid: &SpectralGrid,
    spec: &NoiseSpec,
    f: &dyn Fn(f64, f64) -> f64,
) -> Result<()> {
    let (l1, l2) = grid.extents();
    let (o1, o2) = grid.origin();
    for k in 0..8 {
        let s = k as f64 / 8.0;
        let along1 = (o1 + s * l1, o2 + 0.37 * l2);
        let along2 = (o1 + 0.61 * l1, o2 + s * l2);
        let d1 = (f(along1.0 + l1, along1.1) - f(along1.0, along1.1)).abs();
        let d2 = (f(along2.0, along2.1 + l2) - f(along2.0, along2.1)).abs();
        if d1 > 1e-12 || d2 > 1e-12 {
            return Err(Error::BadFieldSpec {
                spec: spec.to_string(),
                reason: format!(
                    "field is not periodic on extents ({l1}, {l2}): defect {}",
                    d1.max(d2)
                ),
            });
        }
    }
    Ok(())
}

fn sample_analytic(
    grid: &SpectralGrid,
    spec: &NoiseSpec,
    f1: impl Fn(f64, f64) -> f64 + 'static,
    f2: impl Fn(f64, f64) -> f64 + 'static,
) -> Result<SigmaField> {
    check_periodic(grid, spec, &f1)?;
    check_periodic(grid, spec, &f2)?;
    Ok(SigmaField {
        u1: grid.sample(&f1),
        u2: grid.sample(&f2),
    })
}

/// Builds the noise model for a grid, validating periodicity and finiteness
/// of every field.
pub fn make_noise_model(
    spec: &NoiseSpec,
    grid: &SpectralGrid,
    master_seed: u64,
) -> Result<NoiseModel> {
    let sigmas = match spec {
        NoiseSpec::None => Vec::new(),
        NoiseSpec::Figure3 => vec![
            sample_analytic(
                grid,
                spec,
                |y1, _| 2.0 * y1.sin(),
                |_, y2| -2.0 * y2.cos(),
            )?,
            sample_analytic(
                grid,
                spec,
                |y1, _| -2.0 * y1.cos(),
                |_, y2| 2.0 * y2.sin(),
            )?,
        ],
        NoiseSpec::DivFreeK1 => {
            // sigma = (d2 psi, -d1 psi) for psi = cos y1 cos y2
            vec![sample_analytic(
                grid,
                spec,
                |y1, y2| -y1.cos() * y2.sin(),
                |y1, y2| y1.sin() * y2.cos(),
            )?]
        }
        NoiseSpec::Constant(cx, cy) => {
            let (cx, cy) = (*cx, *cy);
            vec![SigmaField {
                u1: ScalarField::constant(grid.n1(), grid.n2(), cx),
                u2: ScalarField::constant(grid.n1(), grid.n2(), cy),
            }]
        }
        NoiseSpec::Grid(stem) => {
            let load = |suffix: &str| -> Result<ScalarField> {
                let path = format!("{stem}.{suffix}.dump");
                let (field, _meta) = io::read_grid_dump(Path::new(&path))?;
                grid.matches(&field).map_err(|_| Error::BadFieldSpec {
                    spec: spec.to_string(),
                    reason: format!(
                        "{path}: dump is {}x{}, grid is {}x{}",
                        field.n1(),
                        field.n2(),
                        grid.n1(),
                        grid.n2()
                    ),
                })?;
                if !field.is_finite() {
                    return Err(Error::BadFieldSpec {
                        spec: spec.to_string(),
                        reason: format!("{path}: non-finite samples"),
                    });
                }
                Ok(field)
            };
            vec![SigmaField {
                u1: load("sigma1")?,
                u2: load("sigma2")?,
            }]
        }
    };
    Ok(NoiseModel {
        sigmas,
        master_seed,
    })
}

/// Tag values separating the increment blocks consumed by different
/// sub-steps of one time step.
pub(crate) const TAG_FULL: u64 = 0;
pub(crate) const TAG_HALF_A: u64 = 1;
pub(crate) const TAG_HALF_B: u64 = 2;

fn sample_with_tag(model: &NoiseModel, path: u64, step: u64, var: f64, tag: u64) -> IncrementBlock {
    let path_seed = rng::derive_path_seed(model.master_seed, path);
    let scale = var.sqrt();
    let dw = (0..model.n_fields() as u64)
        .map(|i| scale * rng::standard_normal(rng::increment_key(path_seed, step, i, tag)))
        .collect();
    IncrementBlock {
        dw,
        step_index: step,
        path_index: path,
    }
}

/// Brownian increments `dw_i ~ Normal(0, dt)` for one full step, fully
/// determined by `(master_seed, path, step, field)`.
pub fn sample_increments(model: &NoiseModel, path: u64, step: u64, dt: f64) -> IncrementBlock {
    debug_assert!(dt > 0.0);
    sample_with_tag(model, path, step, dt, TAG_FULL)
}

/// Half-variance blocks for the two stochastic sub-steps of a split step:
/// independent draws with variance `dt/2` each.
pub(crate) fn sample_half_increments(
    model: &NoiseModel,
    path: u64,
    step: u64,
    dt: f64,
    second_half: bool,
) -> IncrementBlock {
    let tag = if second_half { TAG_HALF_B } else { TAG_HALF_A };
    sample_with_tag(model, path, step, 0.5 * dt, tag)
}
