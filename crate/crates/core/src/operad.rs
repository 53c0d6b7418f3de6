//! Endomorphism operad of a finite-dimensional real vector space.
//!
//! An operation `f: V^{⊗n} → V` is stored by its coordinates
//! `f[i][j₁…jₙ]` in a fixed basis, dense and row-major with the output index
//! first. Indices are 0-based here; reports convert to the 1-based notation
//! `f^i_{j₁…jₙ}`.

use std::ops::{Add, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};

/// Multilinear operation `V^{⊗n} → V`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiOp {
    degree: usize,
    dim: usize,
    coeffs: Vec<f64>,
}

fn sign(exponent: usize) -> f64 {
    if exponent.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl MultiOp {
    pub fn new(degree: usize, dim: usize, coeffs: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(dim));
        }
        if degree == 0 {
            return Err(Error::InvalidDegree(degree));
        }
        let expected = dim.pow(degree as u32 + 1);
        if coeffs.len() != expected {
            return Err(Error::CoefficientCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            degree,
            dim,
            coeffs,
        })
    }

    pub fn zero(degree: usize, dim: usize) -> Result<Self> {
        let len = dim.pow(degree as u32 + 1);
        Self::new(degree, dim, vec![0.0; len])
    }

    /// Unary operation from a `d×d` matrix given row by row.
    pub fn from_matrix<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut coeffs = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            coeffs.extend_from_slice(row);
        }
        Self::new(1, dim, coeffs)
    }

    /// Operation with independent coefficients uniform in `[-1, 1)`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: usize, dim: usize) -> Result<Self> {
        let len = dim.pow(degree as u32 + 1);
        let coeffs = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Self::new(degree, dim, coeffs)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `|f| = n − 1`, the grading used in every sign rule.
    pub fn reduced_degree(&self) -> usize {
        self.degree - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    fn flat_index(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.degree + 1);
        index.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    /// Coefficient `f[out][inputs…]`; `index = [out, in₁, …, inₙ]`.
    pub fn get(&self, index: &[usize]) -> f64 {
        self.coeffs[self.flat_index(index)]
    }

    pub fn set(&mut self, index: &[usize], value: f64) {
        let flat = self.flat_index(index);
        self.coeffs[flat] = value;
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            degree: self.degree,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient-wise difference; operations of different shape are
    /// infinitely far apart.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.degree != other.degree || self.dim != other.dim {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.degree != other.degree {
            return Err(Error::InvalidArgument(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Self {
            degree: self.degree,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(-1.0))
    }
}

impl Add for &MultiOp {
    type Output = MultiOp;

    /// Panics on shape mismatch; use [`MultiOp::try_add`] otherwise.
    fn add(self, rhs: Self) -> MultiOp {
        self.try_add(rhs).expect("shape mismatch in MultiOp addition")
    }
}

impl Sub for &MultiOp {
    type Output = MultiOp;

    fn sub(self, rhs: Self) -> MultiOp {
        self.try_sub(rhs).expect("shape mismatch in MultiOp subtraction")
    }
}

impl Neg for &MultiOp {
    type Output = MultiOp;

    fn neg(self) -> MultiOp {
        self.scale(-1.0)
    }
}

/// The identity map `1_V` as a unary operation.
pub fn identity_op(dim: usize) -> Result<MultiOp> {
    let mut op = MultiOp::zero(1, dim)?;
    for i in 0..dim {
        op.set(&[i, i], 1.0);
    }
    Ok(op)
}

/// `f ∘ᵢ g = (−1)^{i|g|} f ∘ (1^{⊗i} ⊗ g ⊗ 1^{⊗(|f|−i)})`.
pub fn partial_compose(f: &MultiOp, g: &MultiOp, i: usize) -> Result<MultiOp> {
    if f.dim != g.dim {
        return Err(Error::DimensionMismatch(f.dim, g.dim));
    }
    if i > f.reduced_degree() {
        return Err(Error::SlotOutOfRange {
            slot: i,
            reduced: f.reduced_degree(),
        });
    }
    let d = f.dim;
    let nf = f.degree;
    let ng = g.degree;
    let nr = nf + ng - 1;
    let s = sign(i * g.reduced_degree());

    let g_block = d.pow(ng as u32);
    // Stride of slot `i` inside f's flat index, and the size of everything
    // to its right.
    let f_tail = d.pow((nf - 1 - i) as u32);
    let f_block = d.pow(nf as u32);
    let r_tail = f_tail;
    let r_mid = g_block;

    let mut out = vec![0.0; d.pow(nr as u32 + 1)];
    let r_block = d.pow(nr as u32);
    for (flat, slot) in out.iter_mut().enumerate() {
        let k = flat / r_block;
        let inputs = flat % r_block;
        let post = inputs % r_tail;
        let mid = (inputs / r_tail) % r_mid;
        let pre = inputs / (r_tail * r_mid);
        let f_base = k * f_block + pre * (d * f_tail) + post;
        let mut acc = 0.0;
        for sidx in 0..d {
            acc += f.coeffs[f_base + sidx * f_tail] * g.coeffs[sidx * g_block + mid];
        }
        *slot = s * acc;
    }
    MultiOp::new(nr, d, out)
}

/// `f ∘ g = Σ_{i=0}^{|f|} f ∘ᵢ g`.
pub fn total_compose(f: &MultiOp, g: &MultiOp) -> Result<MultiOp> {
    let mut acc = partial_compose(f, g, 0)?;
    for i in 1..=f.reduced_degree() {
        acc = acc.try_add(&partial_compose(f, g, i)?)?;
    }
    Ok(acc)
}

/// Gerstenhaber bracket `[f, g] = f ∘ g − (−1)^{|f||g|} g ∘ f`.
pub fn gerstenhaber(f: &MultiOp, g: &MultiOp) -> Result<MultiOp> {
    let fg = total_compose(f, g)?;
    let gf = total_compose(g, f)?;
    let s = sign(f.reduced_degree() * g.reduced_degree());
    fg.try_sub(&gf.scale(s))
}

/// `(−1)^{|f||g|}`, exposed for callers assembling graded identities.
pub fn graded_sign(f: &MultiOp, g: &MultiOp) -> f64 {
    sign(f.reduced_degree() * g.reduced_degree())
}
