//! Fourier pseudospectral machinery on the uniform periodic grid.
//!
//! Fields live on an `n1 x n2` grid over a rectangle of extents
//! `(ly1, ly2)` identified periodically. Derivatives are exact Fourier-symbol
//! multiplications: `ik` for odd operators (Nyquist mode zeroed), `-|k|^2` and
//! `|k|^4` for the Laplacian and biharmonic.
//!
//! Spectra are stored transposed relative to physical fields: the coefficient
//! of mode `(m1, m2)` sits at index `m2 * n1 + m1`. This saves one transpose
//! per 2-D transform. Two real fields are packed into a single complex
//! transform wherever the call sites come in pairs; on a single-threaded
//! machine the transform count dominates the step cost.

use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::field::ScalarField;

pub type Complex64 = Complex<f64>;

pub struct SpectralGrid {
    n1: usize,
    n2: usize,
    extents: (f64, f64),
    origin: (f64, f64),
    k1: Vec<f64>,
    k2: Vec<f64>,
    k1_odd: Vec<f64>,
    k2_odd: Vec<f64>,
    fwd1: Arc<dyn Fft<f64>>,
    inv1: Arc<dyn Fft<f64>>,
    fwd2: Arc<dyn Fft<f64>>,
    inv2: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for SpectralGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralGrid")
            .field("n1", &self.n1)
            .field("n2", &self.n2)
            .field("extents", &self.extents)
            .field("origin", &self.origin)
            .finish()
    }
}

/// Reusable scratch buffers for the transform kernels.
pub struct Workspace {
    buf: Vec<Complex64>,
    tr: Vec<Complex64>,
    fft_scratch: Vec<Complex64>,
}

impl Workspace {
    pub fn new(grid: &SpectralGrid) -> Self {
        let n = grid.len();
        let scratch = grid
            .fwd1
            .get_inplace_scratch_len()
            .max(grid.fwd2.get_inplace_scratch_len())
            .max(grid.inv1.get_inplace_scratch_len())
            .max(grid.inv2.get_inplace_scratch_len());
        Self {
            buf: vec![Complex64::default(); n],
            tr: vec![Complex64::default(); n],
            fft_scratch: vec![Complex64::default(); scratch],
        }
    }
}

fn wavenumbers(n: usize, extent: f64, zero_nyquist: bool) -> Vec<f64> {
    let base = 2.0 * std::f64::consts::PI / extent;
    (0..n)
        .map(|m| {
            if zero_nyquist && m == n / 2 {
                0.0
            } else if m <= n / 2 {
                base * m as f64
            } else {
                base * (m as f64 - n as f64)
            }
        })
        .collect()
}

impl SpectralGrid {
    pub fn new(n1: usize, n2: usize, extents: (f64, f64)) -> Result<Self> {
        Self::with_origin(n1, n2, extents, (0.0, 0.0))
    }

    pub fn with_origin(
        n1: usize,
        n2: usize,
        extents: (f64, f64),
        origin: (f64, f64),
    ) -> Result<Self> {
        if n1 < 8 || n2 < 8 || n1 % 2 != 0 || n2 % 2 != 0 {
            return Err(Error::BadGridSize { n1, n2 });
        }
        if !(extents.0 > 0.0 && extents.1 > 0.0) {
            return Err(Error::ValidationError {
                constraint: "grid extents must be positive".into(),
            });
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            n1,
            n2,
            extents,
            origin,
            k1: wavenumbers(n1, extents.0, false),
            k2: wavenumbers(n2, extents.1, false),
            k1_odd: wavenumbers(n1, extents.0, true),
            k2_odd: wavenumbers(n2, extents.1, true),
            fwd1: planner.plan_fft_forward(n1),
            inv1: planner.plan_fft_inverse(n1),
            fwd2: planner.plan_fft_forward(n2),
            inv2: planner.plan_fft_inverse(n2),
        })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn extents(&self) -> (f64, f64) {
        self.extents
    }

    pub fn origin(&self) -> (f64, f64) {
        self.origin
    }

    pub fn spacing(&self) -> (f64, f64) {
        (self.extents.0 / self.n1 as f64, self.extents.1 / self.n2 as f64)
    }

    pub fn cell_area(&self) -> f64 {
        let (h1, h2) = self.spacing();
        h1 * h2
    }

    pub fn domain_area(&self) -> f64 {
        self.extents.0 * self.extents.1
    }

    pub fn node(&self, i1: usize, i2: usize) -> (f64, f64) {
        let (h1, h2) = self.spacing();
        (self.origin.0 + h1 * i1 as f64, self.origin.1 + h2 * i2 as f64)
    }

    /// Evaluates `f(y1, y2)` at every node.
    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> ScalarField {
        ScalarField::from_index_fn(self.n1, self.n2, |i1, i2| {
            let (y1, y2) = self.node(i1, i2);
            f(y1, y2)
        })
    }

    pub fn matches(&self, field: &ScalarField) -> Result<()> {
        if field.n1() != self.n1 || field.n2() != self.n2 {
            return Err(Error::DimensionMismatch {
                got_n1: field.n1(),
                got_n2: field.n2(),
                n1: self.n1,
                n2: self.n2,
            });
        }
        Ok(())
    }

    /// Wavenumber pair at spectrum index `s` (full convention, Nyquist kept).
    pub fn wavenumber(&self, s: usize) -> (f64, f64) {
        (self.k1[s % self.n1], self.k2[s / self.n1])
    }

    /// Spectrum index of the signed mode `(m1, m2)`.
    pub fn mode_index(&self, m1: i64, m2: i64) -> usize {
        let w1 = m1.rem_euclid(self.n1 as i64) as usize;
        let w2 = m2.rem_euclid(self.n2 as i64) as usize;
        w2 * self.n1 + w1
    }

    /// Grid inner product `sum(f * g) * dA`.
    pub fn inner(&self, f: &ScalarField, g: &ScalarField) -> f64 {
        let s: f64 = f.data().iter().zip(g.data()).map(|(a, b)| a * b).sum();
        s * self.cell_area()
    }

    /// Quadrature of a field: `sum(f) * dA`.
    pub fn integral(&self, f: &ScalarField) -> f64 {
        f.sum() * self.cell_area()
    }

    pub fn l2_norm(&self, f: &ScalarField) -> f64 {
        self.inner(f, f).sqrt()
    }

    // ---- transform kernels ----------------------------------------------

    fn transpose(src: &[Complex64], dst: &mut [Complex64], rows: usize, cols: usize) {
        // src is rows x cols, dst becomes cols x rows
        const B: usize = 32;
        for rb in (0..rows).step_by(B) {
            for cb in (0..cols).step_by(B) {
                for r in rb..(rb + B).min(rows) {
                    for c in cb..(cb + B).min(cols) {
                        dst[c * rows + r] = src[r * cols + c];
                    }
                }
            }
        }
    }

    /// Full 2-D forward transform of the packed complex buffer in `ws.buf`
    /// (physical layout); result lands in `out` in spectrum layout.
    fn fft2_forward(&self, ws: &mut Workspace, out: &mut [Complex64]) {
        self.fwd2
            .process_with_scratch(&mut ws.buf, &mut ws.fft_scratch);
        Self::transpose(&ws.buf, out, self.n1, self.n2);
        self.fwd1.process_with_scratch(out, &mut ws.fft_scratch);
    }

    /// Inverse of `fft2_forward`: spectrum layout in `ws.tr`, normalized
    /// physical-layout complex result left in `ws.buf`.
    fn fft2_inverse_to_buf(&self, ws: &mut Workspace) {
        self.inv1
            .process_with_scratch(&mut ws.tr, &mut ws.fft_scratch);
        Self::transpose(&ws.tr, &mut ws.buf, self.n2, self.n1);
        self.inv2
            .process_with_scratch(&mut ws.buf, &mut ws.fft_scratch);
        let scale = 1.0 / self.len() as f64;
        for v in ws.buf.iter_mut() {
            *v *= scale;
        }
    }

    pub fn forward_into(&self, field: &[f64], ws: &mut Workspace, out: &mut [Complex64]) {
        for (c, &v) in ws.buf.iter_mut().zip(field) {
            *c = Complex64::new(v, 0.0);
        }
        self.fft2_forward(ws, out);
    }

    /// Transforms two real fields with a single complex FFT.
    pub fn forward_pair_into(
        &self,
        a: &[f64],
        b: &[f64],
        ws: &mut Workspace,
        out_a: &mut [Complex64],
        out_b: &mut [Complex64],
    ) {
        for ((c, &x), &y) in ws.buf.iter_mut().zip(a).zip(b) {
            *c = Complex64::new(x, y);
        }
        self.fft2_forward(ws, out_a);
        // unpack via Hermitian symmetry: A(k) = (C(k) + conj(C(-k)))/2,
        // B(k) = (C(k) - conj(C(-k)))/(2i)
        let n1 = self.n1;
        let n2 = self.n2;
        for m2 in 0..n2 {
            let m2r = (n2 - m2) % n2;
            for m1 in 0..n1 {
                let m1r = (n1 - m1) % n1;
                let s = m2 * n1 + m1;
                let sr = m2r * n1 + m1r;
                if sr < s {
                    continue;
                }
                let c = out_a[s];
                let cr = out_a[sr];
                let ah = 0.5 * (c + cr.conj());
                let bh = Complex64::new(0.0, -0.5) * (c - cr.conj());
                let ahr = 0.5 * (cr + c.conj());
                let bhr = Complex64::new(0.0, -0.5) * (cr - c.conj());
                out_a[s] = ah;
                out_a[sr] = ahr;
                out_b[s] = bh;
                out_b[sr] = bhr;
            }
        }
    }

    pub fn inverse_into(&self, spec: &[Complex64], ws: &mut Workspace, out: &mut [f64]) {
        ws.tr.copy_from_slice(spec);
        self.fft2_inverse_to_buf(ws);
        for (o, c) in out.iter_mut().zip(&ws.buf) {
            *o = c.re;
        }
    }

    /// Inverse-transforms two conjugate-symmetric spectra with one complex FFT.
    pub fn inverse_pair_into(
        &self,
        s1: &[Complex64],
        s2: &[Complex64],
        ws: &mut Workspace,
        out_a: &mut [f64],
        out_b: &mut [f64],
    ) {
        for ((t, &x), &y) in ws.tr.iter_mut().zip(s1).zip(s2) {
            *t = Complex64::new(x.re - y.im, x.im + y.re);
        }
        self.fft2_inverse_to_buf(ws);
        for ((c, a), b) in ws.buf.iter().zip(out_a.iter_mut()).zip(out_b.iter_mut()) {
            *a = c.re;
            *b = c.im;
        }
    }

    // ---- allocating conveniences ----------------------------------------

    pub fn forward(&self, field: &ScalarField) -> Vec<Complex64> {
        let mut ws = Workspace::new(self);
        let mut out = vec![Complex64::default(); self.len()];
        self.forward_into(field.data(), &mut ws, &mut out);
        out
    }

    pub fn inverse(&self, spec: &[Complex64]) -> ScalarField {
        let mut ws = Workspace::new(self);
        let mut out = vec![0.0; self.len()];
        self.inverse_into(spec, &mut ws, &mut out);
        ScalarField::from_data(self.n1, self.n2, out)
    }

    // ---- symbol application ----------------------------------------------

    /// `out_i = i * k_i * spec` with the Nyquist mode of each direction zeroed.
    pub fn grad_symbols(
        &self,
        spec: &[Complex64],
        out1: &mut [Complex64],
        out2: &mut [Complex64],
    ) {
        let n1 = self.n1;
        for (s, &v) in spec.iter().enumerate() {
            let k1 = self.k1_odd[s % n1];
            let k2 = self.k2_odd[s / n1];
            let iv = Complex64::new(-v.im, v.re);
            out1[s] = k1 * iv;
            out2[s] = k2 * iv;
        }
    }

    /// `out = i k1 s1 + i k2 s2` (spectral divergence of a vector field).
    pub fn div_symbols(&self, s1: &[Complex64], s2: &[Complex64], out: &mut [Complex64]) {
        let n1 = self.n1;
        for s in 0..self.len() {
            let k1 = self.k1_odd[s % n1];
            let k2 = self.k2_odd[s / n1];
            let a = s1[s];
            let b = s2[s];
            out[s] = Complex64::new(-(k1 * a.im + k2 * b.im), k1 * a.re + k2 * b.re);
        }
    }

    /// Multiplies by `-|k|^2` in place.
    pub fn laplacian_symbol(&self, spec: &mut [Complex64]) {
        let n1 = self.n1;
        for (s, v) in spec.iter_mut().enumerate() {
            let k1 = self.k1[s % n1];
            let k2 = self.k2[s / n1];
            *v *= -(k1 * k1 + k2 * k2);
        }
    }

    /// Multiplies by `|k|^4` in place.
    pub fn biharmonic_symbol(&self, spec: &mut [Complex64]) {
        let n1 = self.n1;
        for (s, v) in spec.iter_mut().enumerate() {
            let k1 = self.k1[s % n1];
            let k2 = self.k2[s / n1];
            let k2sum = k1 * k1 + k2 * k2;
            *v *= k2sum * k2sum;
        }
    }
}

// ---- public differential operators --------------------------------------

pub fn grad(grid: &SpectralGrid, f: &ScalarField) -> (ScalarField, ScalarField) {
    let mut ws = Workspace::new(grid);
    let n = grid.len();
    let mut spec = vec![Complex64::default(); n];
    grid.forward_into(f.data(), &mut ws, &mut spec);
    let mut s1 = vec![Complex64::default(); n];
    let mut s2 = vec![Complex64::default(); n];
    grid.grad_symbols(&spec, &mut s1, &mut s2);
    let mut d1 = vec![0.0; n];
    let mut d2 = vec![0.0; n];
    grid.inverse_pair_into(&s1, &s2, &mut ws, &mut d1, &mut d2);
    (
        ScalarField::from_data(grid.n1(), grid.n2(), d1),
        ScalarField::from_data(grid.n1(), grid.n2(), d2),
    )
}

pub fn div(grid: &SpectralGrid, f1: &ScalarField, f2: &ScalarField) -> ScalarField {
    let mut ws = Workspace::new(grid);
    let n = grid.len();
    let mut s1 = vec![Complex64::default(); n];
    let mut s2 = vec![Complex64::default(); n];
    grid.forward_pair_into(f1.data(), f2.data(), &mut ws, &mut s1, &mut s2);
    let mut out = vec![Complex64::default(); n];
    grid.div_symbols(&s1, &s2, &mut out);
    let mut d = vec![0.0; n];
    grid.inverse_into(&out, &mut ws, &mut d);
    ScalarField::from_data(grid.n1(), grid.n2(), d)
}

pub fn laplacian(grid: &SpectralGrid, f: &ScalarField) -> ScalarField {
    let mut spec = grid.forward(f);
    grid.laplacian_symbol(&mut spec);
    grid.inverse(&spec)
}

pub fn biharmonic(grid: &SpectralGrid, f: &ScalarField) -> ScalarField {
    let mut spec = grid.forward(f);
    grid.biharmonic_symbol(&mut spec);
    grid.inverse(&spec)
}

/// Second derivatives `(d11, d12, d22)`. The mixed derivative zeroes the
/// Nyquist mode in both directions; the diagonal entries keep it.
pub fn hessian(grid: &SpectralGrid, f: &ScalarField) -> (ScalarField, ScalarField, ScalarField) {
    let mut ws = Workspace::new(grid);
    let n = grid.len();
    let n1 = grid.n1();
    let mut spec = vec![Complex64::default(); n];
    grid.forward_into(f.data(), &mut ws, &mut spec);
    let mut s11 = vec![Complex64::default(); n];
    let mut s12 = vec![Complex64::default(); n];
    let mut s22 = vec![Complex64::default(); n];
    for (s, &v) in spec.iter().enumerate() {
        let k1 = grid.k1[s % n1];
        let k2 = grid.k2[s / n1];
        let k1o = grid.k1_odd[s % n1];
        let k2o = grid.k2_odd[s / n1];
        s11[s] = -(k1 * k1) * v;
        s12[s] = -(k1o * k2o) * v;
        s22[s] = -(k2 * k2) * v;
    }
    let mut d11 = vec![0.0; n];
    let mut d12 = vec![0.0; n];
    let mut d22 = vec![0.0; n];
    grid.inverse_pair_into(&s11, &s22, &mut ws, &mut d11, &mut d22);
    grid.inverse_into(&s12, &mut ws, &mut d12);
    (
        ScalarField::from_data(grid.n1(), grid.n2(), d11),
        ScalarField::from_data(grid.n1(), grid.n2(), d12),
        ScalarField::from_data(grid.n1(), grid.n2(), d22),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid64() -> SpectralGrid {
        SpectralGrid::new(64, 64, (2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI))
            .unwrap()
    }

    fn pseudo_random_field(grid: &SpectralGrid, seed: u64) -> ScalarField {
        // cheap deterministic noise, full spectrum
        let mut state = seed;
        ScalarField::from_index_fn(grid.n1(), grid.n2(), |_, _| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / (1u64 << 53) as f64 - 0.5
        })
    }

    #[test]
    fn wavenumber_scaling() {
        let g = grid64();
        let s = g.mode_index(1, 0);
        assert_eq!(g.wavenumber(s), (1.0, 0.0));

        let g4pi = SpectralGrid::new(
            64,
            64,
            (4.0 * std::f64::consts::PI, 4.0 * std::f64::consts::PI),
        )
        .unwrap();
        let s = g4pi.mode_index(1, 0);
        assert_eq!(g4pi.wavenumber(s), (0.5, 0.0));
    }

    #[test]
    fn bad_grid_sizes_rejected() {
        assert!(SpectralGrid::new(6, 64, (1.0, 1.0)).is_err());
        assert!(SpectralGrid::new(64, 9, (1.0, 1.0)).is_err());
    }

    #[test]
    fn round_trip_identity() {
        let g = grid64();
        let f = pseudo_random_field(&g, 7);
        let back = g.inverse(&g.forward(&f));
        for (a, b) in f.data().iter().zip(back.data()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn pair_transforms_match_single() {
        let g = grid64();
        let a = pseudo_random_field(&g, 1);
        let b = pseudo_random_field(&g, 2);
        let sa = g.forward(&a);
        let sb = g.forward(&b);

        let mut ws = Workspace::new(&g);
        let mut pa = vec![Complex64::default(); g.len()];
        let mut pb = vec![Complex64::default(); g.len()];
        g.forward_pair_into(a.data(), b.data(), &mut ws, &mut pa, &mut pb);
        for s in 0..g.len() {
            assert_abs_diff_eq!(sa[s].re, pa[s].re, epsilon = 1e-9);
            assert_abs_diff_eq!(sa[s].im, pa[s].im, epsilon = 1e-9);
            assert_abs_diff_eq!(sb[s].re, pb[s].re, epsilon = 1e-9);
            assert_abs_diff_eq!(sb[s].im, pb[s].im, epsilon = 1e-9);
        }

        let mut ra = vec![0.0; g.len()];
        let mut rb = vec![0.0; g.len()];
        g.inverse_pair_into(&sa, &sb, &mut ws, &mut ra, &mut rb);
        for i in 0..g.len() {
            assert_abs_diff_eq!(ra[i], a.data()[i], epsilon = 1e-12);
            assert_abs_diff_eq!(rb[i], b.data()[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn laplacian_eigenfunction() {
        let g = grid64();
        let f = g.sample(|y1, _| y1.sin());
        let lap = laplacian(&g, &f);
        for i in 0..g.len() {
            assert_abs_diff_eq!(lap.data()[i], -f.data()[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn biharmonic_eigenfunction() {
        // |k|^4 amplifies spectral roundoff by k_max^4; 16^2 keeps the
        // eigenfunction identity inside 1e-12 in f64
        let g = SpectralGrid::new(16, 16, (2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI))
            .unwrap();
        let f = g.sample(|y1, _| y1.sin());
        let bih = biharmonic(&g, &f);
        for i in 0..g.len() {
            assert_abs_diff_eq!(bih.data()[i], f.data()[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn grad_of_constant_is_zero() {
        let g = grid64();
        let f = ScalarField::constant(64, 64, 3.25);
        let (d1, d2) = grad(&g, &f);
        assert_eq!(d1.norm_inf(), 0.0);
        assert_eq!(d2.norm_inf(), 0.0);
    }

    #[test]
    fn grad_matches_hand_derivative() {
        let g = grid64();
        let f = g.sample(|y1, y2| (y1 + 2.0 * y2).cos());
        let (d1, d2) = grad(&g, &f);
        for i1 in (0..64).step_by(7) {
            for i2 in (0..64).step_by(5) {
                let (y1, y2) = g.node(i1, i2);
                let exact = -(y1 + 2.0 * y2).sin();
                assert_abs_diff_eq!(d1.at(i1, i2), exact, epsilon = 1e-11);
                assert_abs_diff_eq!(d2.at(i1, i2), 2.0 * exact, epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn hessian_matches_hand_derivative() {
        let g = grid64();
        let f = g.sample(|y1, y2| (y1).sin() * (2.0 * y2).cos());
        let (d11, d12, d22) = hessian(&g, &f);
        for i1 in (0..64).step_by(11) {
            for i2 in (0..64).step_by(13) {
                let (y1, y2) = g.node(i1, i2);
                assert_abs_diff_eq!(
                    d11.at(i1, i2),
                    -y1.sin() * (2.0 * y2).cos(),
                    epsilon = 1e-11
                );
                assert_abs_diff_eq!(
                    d12.at(i1, i2),
                    -2.0 * y1.cos() * (2.0 * y2).sin(),
                    epsilon = 1e-11
                );
                assert_abs_diff_eq!(
                    d22.at(i1, i2),
                    -4.0 * y1.sin() * (2.0 * y2).cos(),
                    epsilon = 1e-11
                );
            }
        }
    }

    #[test]
    fn odd_derivative_zeroes_nyquist() {
        let g = SpectralGrid::new(8, 8, (2.0 * std::f64::consts::PI, 1.0)).unwrap();
        // pure Nyquist content in y1
        let f = g.sample(|y1, _| (4.0 * y1).cos());
        let (d1, _) = grad(&g, &f);
        assert!(d1.norm_inf() < 1e-12);
        // even derivative keeps it
        let lap = laplacian(&g, &f);
        assert!(lap.norm_inf() > 1.0);
    }

    #[test]
    #[ignore]
    fn timing_probe() {
        for n in [64usize, 128] {
            let g = SpectralGrid::new(n, n, (1.0, 1.0)).unwrap();
            let f = pseudo_random_field(&g, 3);
            let mut ws = Workspace::new(&g);
            let mut spec = vec![Complex64::default(); g.len()];
            let mut out = vec![0.0; g.len()];
            let t0 = std::time::Instant::now();
            let reps = 2000;
            for _ in 0..reps {
                g.forward_into(f.data(), &mut ws, &mut spec);
                g.inverse_into(&spec, &mut ws, &mut out);
            }
            let dt = t0.elapsed().as_secs_f64() / (2 * reps) as f64;
            println!("fft2 {}x{}: {:.1} us", n, n, dt * 1e6);
        }
    }

    #[test]
    fn div_of_gradient_equals_laplacian() {
        let g = grid64();
        let f = g.sample(|y1, y2| (2.0 * y1).sin() + (y1 + y2).cos());
        let (d1, d2) = grad(&g, &f);
        let dv = div(&g, &d1, &d2);
        let lap = laplacian(&g, &f);
        for i in 0..g.len() {
            assert_abs_diff_eq!(dv.data()[i], lap.data()[i], epsilon = 1e-10);
        }
    }
}
