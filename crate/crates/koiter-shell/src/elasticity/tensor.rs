//! The fourth-order shell elasticity tensor.

use super::ShellParams;
use crate::geometry::{Frame, SymTensor2};

/// Contravariant components `C^ijkl` at one surface point, `i,j,k,l` in
/// `{1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticityTensor {
    c: [f64; 16],
}

#[inline]
fn idx(i: usize, j: usize, k: usize, l: usize) -> usize {
    debug_assert!((1..=2).contains(&i) && (1..=2).contains(&j));
    debug_assert!((1..=2).contains(&k) && (1..=2).contains(&l));
    ((i - 1) << 3) | ((j - 1) << 2) | ((k - 1) << 1) | (l - 1)
}

impl ElasticityTensor {
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.c[idx(i, j, k, l)]
    }

    /// Full contraction `C : M (x) N = C^ijkl M_ij N_kl`.
    pub fn contract(&self, m: &SymTensor2, n: &SymTensor2) -> f64 {
        let mut acc = 0.0;
        for i in 1..=2 {
            for j in 1..=2 {
                let mij = m.get(i, j);
                for k in 1..=2 {
                    for l in 1..=2 {
                        acc += self.get(i, j, k, l) * mij * n.get(k, l);
                    }
                }
            }
        }
        acc
    }

    /// Quadratic form `C : M (x) M`.
    pub fn quadratic(&self, m: &SymTensor2) -> f64 {
        self.contract(m, m)
    }
}

/// Builds the elasticity tensor from the contravariant metric of a frame:
///
/// `C^ijkl = (4 lam mu / (lam + 2 mu)) a*_ij a*_kl
///           + 2 mu (a*_ik a*_jl + a*_il a*_jk)`
pub fn elasticity_tensor(frame: &Frame, params: &ShellParams) -> ElasticityTensor {
    let a = frame.contravariant_metric();
    let (lam, mu) = (params.lambda_e, params.mu_e);
    let c1 = 4.0 * lam * mu / (lam + 2.0 * mu);
    let mut c = [0.0; 16];
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    c[idx(i, j, k, l)] = c1 * a.get(i, j) * a.get(k, l)
                        + 2.0 * mu * (a.get(i, k) * a.get(j, l) + a.get(i, l) * a.get(j, k));
                }
            }
        }
    }
    ElasticityTensor { c }
}
