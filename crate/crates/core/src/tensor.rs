//! Dense real tensors with explicit shape, plus the handful of pointwise and
//! multilinear operations the composition models need.

use std::fmt;
use std::io::{Read, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("data length {got} does not match shape {shape:?} (expected {expected})")]
    DataLength {
        shape: Vec<usize>,
        expected: usize,
        got: usize,
    },

    #[error("tensor dimensions must be at least 1, got {0:?}")]
    ZeroDimension(Vec<usize>),

    #[error("tensor of {entries} entries exceeds the entry cap {cap}")]
    TooLarge { entries: u128, cap: usize },

    #[error("malformed tensor data: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Row-major dense tensor over `f64`. The empty shape is a scalar.
#[derive(Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor(shape={:?}, data={:?})", self.shape, self.data)
    }
}

pub(crate) fn checked_len(shape: &[usize], cap: usize) -> Result<usize, TensorError> {
    if shape.iter().any(|&d| d == 0) {
        return Err(TensorError::ZeroDimension(shape.to_vec()));
    }
    let entries: u128 = shape.iter().map(|&d| d as u128).product();
    if entries > cap as u128 {
        return Err(TensorError::TooLarge { entries, cap });
    }
    Ok(entries as usize)
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self, TensorError> {
        if shape.iter().any(|&d| d == 0) {
            return Err(TensorError::ZeroDimension(shape));
        }
        let expected: usize = shape.iter().product();
        if data.len() != expected {
            return Err(TensorError::DataLength {
                shape,
                expected,
                got: data.len(),
            });
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Tensor {
            shape,
            data: vec![0.0; len],
        }
    }

    pub fn scalar(value: f64) -> Self {
        Tensor {
            shape: vec![],
            data: vec![value],
        }
    }

    pub fn vector(data: Vec<f64>) -> Self {
        Tensor {
            shape: vec![data.len()],
            data,
        }
    }

    /// The d×d identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut t = Tensor::zeros(vec![dim, dim]);
        for i in 0..dim {
            t.data[i * dim + i] = 1.0;
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0.0)
    }

    /// Value at a multi-index; panics when the index is out of range.
    pub fn get(&self, index: &[usize]) -> f64 {
        self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: f64) {
        let off = self.offset(index);
        self.data[off] = value;
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.shape.len(), "index rank mismatch");
        let mut off = 0;
        for (i, (&ix, &dim)) in index.iter().zip(&self.shape).enumerate() {
            assert!(ix < dim, "index {ix} out of range for axis {i} (dim {dim})");
            off = off * dim + ix;
        }
        off
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        if self.shape != other.shape {
            return Err(TensorError::ShapeMismatch(
                self.shape.clone(),
                other.shape.clone(),
            ));
        }
        Ok(Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &Tensor) -> f64 {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Binary dump: u32 rank, u64 dims, then the data as little-endian f64.
    pub fn write_binary(&self, w: &mut impl Write) -> Result<(), TensorError> {
        w.write_all(&(self.shape.len() as u32).to_le_bytes())?;
        for &d in &self.shape {
            w.write_all(&(d as u64).to_le_bytes())?;
        }
        for &x in &self.data {
            w.write_all(&x.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary(r: &mut impl Read) -> Result<Self, TensorError> {
        let mut b4 = [0u8; 4];
        r.read_exact(&mut b4)?;
        let rank = u32::from_le_bytes(b4) as usize;
        let mut shape = Vec::with_capacity(rank);
        let mut b8 = [0u8; 8];
        for _ in 0..rank {
            r.read_exact(&mut b8)?;
            shape.push(u64::from_le_bytes(b8) as usize);
        }
        let len = checked_len(&shape, usize::MAX)?;
        let mut data = Vec::with_capacity(len);
        for _ in 0..len {
            r.read_exact(&mut b8)?;
            data.push(f64::from_le_bytes(b8));
        }
        Tensor::new(shape, data)
    }

    /// Human-readable form: a `shape:` line then whitespace-separated values.
    pub fn write_text(&self, w: &mut impl Write) -> Result<(), TensorError> {
        write!(w, "shape:")?;
        for &d in &self.shape {
            write!(w, " {d}")?;
        }
        writeln!(w)?;
        for (i, x) in self.data.iter().enumerate() {
            if i > 0 {
                write!(w, " ")?;
            }
            write!(w, "{x}")?;
        }
        writeln!(w)?;
        Ok(())
    }

    pub fn read_text(text: &str) -> Result<Self, TensorError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| TensorError::Format("empty input".to_string()))?;
        let rest = header
            .strip_prefix("shape:")
            .ok_or_else(|| TensorError::Format("missing `shape:` header".to_string()))?;
        let shape = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| TensorError::Format(format!("bad dimension `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let data = lines
            .flat_map(|l| l.split_whitespace())
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|e| TensorError::Format(format!("bad value `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tensor::new(shape, data)
    }
}

/// Outer product; the result shape is the concatenation of both shapes.
pub fn tensor_product(a: &Tensor, b: &Tensor) -> Result<Tensor, TensorError> {
    tensor_product_capped(a, b, crate::semantics::DEFAULT_ENTRY_CAP)
}

pub fn tensor_product_capped(a: &Tensor, b: &Tensor, cap: usize) -> Result<Tensor, TensorError> {
    let shape: Vec<usize> = a.shape.iter().chain(&b.shape).copied().collect();
    checked_len(&shape, cap)?;
    let mut data = Vec::with_capacity(a.data.len() * b.data.len());
    for &x in &a.data {
        for &y in &b.data {
            data.push(x * y);
        }
    }
    Ok(Tensor { shape, data })
}

/// Pointwise (Hadamard) product of equal-shape tensors.
pub fn hadamard(a: &Tensor, b: &Tensor) -> Result<Tensor, TensorError> {
    if a.shape != b.shape {
        return Err(TensorError::ShapeMismatch(a.shape.clone(), b.shape.clone()));
    }
    Ok(Tensor {
        shape: a.shape.clone(),
        data: a.data.iter().zip(&b.data).map(|(x, y)| x * y).collect(),
    })
}

/// Cosine similarity with a degeneracy flag.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CosineSim {
    pub value: f64,
    /// Both inputs were zero tensors; the value was defined as 0.
    pub both_zero: bool,
}

/// Cosine of two equal-shape tensors, compared by flattening (Frobenius inner
/// product over the product of Frobenius norms). Two zero tensors yield 0
/// with `both_zero` set instead of an error.
pub fn cosine(a: &Tensor, b: &Tensor) -> Result<CosineSim, TensorError> {
    if a.shape != b.shape {
        return Err(TensorError::ShapeMismatch(a.shape.clone(), b.shape.clone()));
    }
    let dot: f64 = a.data.iter().zip(&b.data).map(|(x, y)| x * y).sum();
    let na = a.frobenius_norm();
    let nb = b.frobenius_norm();
    if na == 0.0 && nb == 0.0 {
        return Ok(CosineSim {
            value: 0.0,
            both_zero: true,
        });
    }
    if na == 0.0 || nb == 0.0 {
        return Ok(CosineSim {
            value: 0.0,
            both_zero: false,
        });
    }
    Ok(CosineSim {
        value: (dot / (na * nb)).clamp(-1.0, 1.0),
        both_zero: false,
    })
}
