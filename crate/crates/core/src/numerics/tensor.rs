//! Dense row-major tensor storage and deterministic matrix arithmetic.

use crate::error::{Error, Result};

/// Dense numeric array. Row-major `f64` storage; the only numeric
/// currency between modules. Checkpoints narrow to `f32` on disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; n],
        }
    }

    pub fn filled(shape: &[usize], value: f64) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![value; n],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<f64>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::Shape(format!(
                "shape {:?} implies {} elements, got {}",
                shape,
                n,
                data.len()
            )));
        }
        if shape.iter().any(|&d| d == 0) {
            return Err(Error::Shape(format!("zero extent in shape {:?}", shape)));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut t = Tensor::zeros(&[n, n]);
        for i in 0..n {
            t.data[i * n + i] = 1.0;
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Row count of a 2-D tensor.
    pub fn rows(&self) -> usize {
        debug_assert_eq!(self.shape.len(), 2);
        self.shape[0]
    }

    /// Column count of a 2-D tensor.
    pub fn cols(&self) -> usize {
        debug_assert_eq!(self.shape.len(), 2);
        self.shape[1]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        let c = self.cols();
        &self.data[r * c..(r + 1) * c]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        let c = self.cols();
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    /// self += s * other (shapes must match).
    pub fn add_scaled(&mut self, other: &Tensor, s: f64) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::Shape(format!(
                "add_scaled: {:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
        Ok(())
    }

    pub fn l2_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Standard matrix product with deterministic row-major accumulation.
pub fn matmul(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    if a.shape().len() != 2 || b.shape().len() != 2 {
        return Err(Error::Shape(format!(
            "matmul needs 2-D operands, got {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let (m, k) = (a.rows(), a.cols());
    let (k2, n) = (b.rows(), b.cols());
    if k != k2 {
        return Err(Error::Shape(format!(
            "matmul inner extents differ: {:?} x {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let mut out = Tensor::zeros(&[m, n]);
    // ikj order: each c[i][j] accumulates over k ascending.
    for i in 0..m {
        let arow = a.row(i);
        let orow = out.row_mut(i);
        for (kk, &av) in arow.iter().enumerate() {
            if av == 0.0 {
                continue;
            }
            let brow = b.row(kk);
            for j in 0..n {
                orow[j] += av * brow[j];
            }
        }
    }
    Ok(out)
}

/// y = W x for 2-D `w` and 1-D `x`.
pub fn matvec(w: &Tensor, x: &[f64]) -> Vec<f64> {
    let (m, n) = (w.rows(), w.cols());
    assert_eq!(n, x.len(), "matvec: {}x{} times len {}", m, n, x.len());
    let mut y = vec![0.0; m];
    for i in 0..m {
        let row = w.row(i);
        let mut acc = 0.0;
        for j in 0..n {
            acc += row[j] * x[j];
        }
        y[i] = acc;
    }
    y
}

/// y = W^T x for 2-D `w` and 1-D `x` of length rows(w).
pub fn matvec_t(w: &Tensor, x: &[f64]) -> Vec<f64> {
    let (m, n) = (w.rows(), w.cols());
    assert_eq!(m, x.len(), "matvec_t: {}x{} with len {}", m, n, x.len());
    let mut y = vec![0.0; n];
    for i in 0..m {
        let row = w.row(i);
        let xi = x[i];
        if xi == 0.0 {
            continue;
        }
        for j in 0..n {
            y[j] += xi * row[j];
        }
    }
    y
}

/// grad += u v^T (outer product accumulation into a rows(u) x len(v) tensor).
pub fn outer_acc(grad: &mut Tensor, u: &[f64], v: &[f64]) {
    let (m, n) = (grad.rows(), grad.cols());
    assert_eq!(m, u.len());
    assert_eq!(n, v.len());
    for i in 0..m {
        let row = grad.row_mut(i);
        let ui = u[i];
        if ui == 0.0 {
            continue;
        }
        for j in 0..n {
            row[j] += ui * v[j];
        }
    }
}
