//! Scalar samples on a uniform periodic grid.
//!
//! Storage is row-major with the second coordinate varying fastest:
//! `data[i1 * n2 + i2]` holds the sample at node `(i1, i2)`. This matches
//! the on-disk dump layout exactly.

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    n1: usize,
    n2: usize,
    data: Vec<f64>,
}

impl ScalarField {
    pub fn zeros(n1: usize, n2: usize) -> Self {
        Self {
            n1,
            n2,
            data: vec![0.0; n1 * n2],
        }
    }

    pub fn constant(n1: usize, n2: usize, value: f64) -> Self {
        Self {
            n1,
            n2,
            data: vec![value; n1 * n2],
        }
    }

    pub fn from_data(n1: usize, n2: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n1 * n2, "data length must equal n1 * n2");
        Self { n1, n2, data }
    }

    /// Builds a field by evaluating `f` at the node indices.
    pub fn from_index_fn(n1: usize, n2: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n1 * n2);
        for i1 in 0..n1 {
            for i2 in 0..n2 {
                data.push(f(i1, i2));
            }
        }
        Self { n1, n2, data }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn at(&self, i1: usize, i2: usize) -> f64 {
        self.data[i1 * self.n2 + i2]
    }

    pub fn set(&mut self, i1: usize, i2: usize, v: f64) {
        self.data[i1 * self.n2 + i2] = v;
    }

    pub fn same_shape(&self, other: &ScalarField) -> bool {
        self.n1 == other.n1 && self.n2 == other.n2
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn min(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn norm_inf(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Plain sum of all samples.
    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn scaled(&self, s: f64) -> ScalarField {
        let mut out = self.clone();
        out.scale(s);
        out
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: f64, other: &ScalarField) {
        assert!(self.same_shape(other));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn add(&self, other: &ScalarField) -> ScalarField {
        let mut out = self.clone();
        out.axpy(1.0, other);
        out
    }

    pub fn sub(&self, other: &ScalarField) -> ScalarField {
        let mut out = self.clone();
        out.axpy(-1.0, other);
        out
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ScalarField) -> ScalarField {
        assert!(self.same_shape(other));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .collect();
        ScalarField {
            n1: self.n1,
            n2: self.n2,
            data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_row_major_y2_fastest() {
        let f = ScalarField::from_index_fn(2, 3, |i1, i2| (i1 * 10 + i2) as f64);
        assert_eq!(f.data(), &[0.0, 1.0, 2.0, 10.0, 11.0, 12.0]);
        assert_eq!(f.at(1, 2), 12.0);
    }

    #[test]
    fn axpy_and_norms() {
        let mut a = ScalarField::constant(4, 4, 1.0);
        let b = ScalarField::constant(4, 4, 2.0);
        a.axpy(-0.5, &b);
        assert_eq!(a.max(), 0.0);
        assert_eq!(a.min(), 0.0);
        assert_eq!(a.norm_inf(), 0.0);
    }
}
