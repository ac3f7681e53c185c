//! Row-major dense f64 matrix with exactly the operations the crate needs.

use super::Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data: Vec<f64> = rows.into_iter().flatten().collect();
        let m = Matrix { rows: r, cols: c, data };
        m.assert_finite("Matrix::from_rows");
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        let m = Matrix { rows, cols, data };
        m.assert_finite("Matrix::from_fn");
        m
    }

    /// Entries i.i.d. uniform in `(-scale, scale)`.
    pub fn random_uniform(rows: usize, cols: usize, scale: f64, rng: &mut Rng) -> Self {
        Matrix::from_fn(rows, cols, |_, _| rng.range(-scale, scale))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// `self * x`.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(
            x.len(),
            self.cols,
            "matvec shape mismatch: {}x{} * {}",
            self.rows,
            self.cols,
            x.len()
        );
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(w, xv)| w * xv)
                    .sum::<f64>()
            })
            .collect()
    }

    /// `selfᵀ * y`.
    pub fn matvec_transpose(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(
            y.len(),
            self.rows,
            "matvec_transpose shape mismatch: ({}x{})ᵀ * {}",
            self.rows,
            self.cols,
            y.len()
        );
        let mut out = vec![0.0; self.cols];
        for (i, yi) in y.iter().enumerate() {
            if *yi == 0.0 {
                continue;
            }
            for (o, w) in out.iter_mut().zip(self.row(i)) {
                *o += w * yi;
            }
        }
        out
    }

    /// `self += a * y xᵀ` (rank-one update; shapes `rows == |y|`, `cols == |x|`).
    pub fn add_outer(&mut self, a: f64, y: &[f64], x: &[f64]) {
        assert_eq!(y.len(), self.rows);
        assert_eq!(x.len(), self.cols);
        for (i, yi) in y.iter().enumerate() {
            let row = &mut self.data[i * self.cols..(i + 1) * self.cols];
            for (r, xj) in row.iter_mut().zip(x) {
                *r += a * yi * xj;
            }
        }
    }

    pub fn assert_finite(&self, context: &str) {
        assert!(
            self.data.iter().all(|v| v.is_finite()),
            "non-finite entry in {context}"
        );
    }
}
