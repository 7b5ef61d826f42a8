//! Second-order tensors and vectors in three dimensions.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::TensorError;

/// Relative bound on the symmetric part below which a tensor counts as skew.
const SKEW_TOL: f64 = 1e-12;

/// A vector in three-dimensional space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3(pub [f64; 3]);

impl Vector3 {
    /// The zero vector.
    pub const ZERO: Vector3 = Vector3([0.0; 3]);

    /// Cartesian basis vector `e_i` (zero-based `i`).
    pub fn basis(i: usize) -> Vector3 {
        let mut v = [0.0; 3];
        v[i] = 1.0;
        Vector3(v)
    }

    /// Euclidean inner product.
    pub fn dot(&self, other: &Vector3) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

impl Index<usize> for Vector3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector3 {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

/// A second-order tensor stored row-major: `t[(i, j)]` is the `ij` component.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tensor3(pub [[f64; 3]; 3]);

impl Tensor3 {
    /// The zero tensor.
    pub const ZERO: Tensor3 = Tensor3([[0.0; 3]; 3]);

    /// The identity tensor.
    pub const IDENTITY: Tensor3 = Tensor3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// Diagonal tensor with the given entries.
    pub fn diagonal(d: [f64; 3]) -> Tensor3 {
        let mut t = Tensor3::ZERO;
        for i in 0..3 {
            t.0[i][i] = d[i];
        }
        t
    }

    /// Transpose.
    pub fn transpose(&self) -> Tensor3 {
        let mut t = Tensor3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i];
            }
        }
        t
    }

    /// Trace.
    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Symmetric part `(A + A^T) / 2`.
    pub fn sym(&self) -> Tensor3 {
        (*self + self.transpose()) * 0.5
    }

    /// Skew-symmetric part `(A - A^T) / 2`.
    pub fn skew(&self) -> Tensor3 {
        (*self - self.transpose()) * 0.5
    }

    /// Deviatoric part `A - (tr A / 3) I`.
    pub fn dev(&self) -> Tensor3 {
        *self - Tensor3::IDENTITY * (self.trace() / 3.0)
    }

    /// Deviatoric symmetric part.
    pub fn dev_sym(&self) -> Tensor3 {
        self.sym().dev()
    }

    /// Spherical part `(tr A / 3) I`.
    pub fn sphere(&self) -> Tensor3 {
        Tensor3::IDENTITY * (self.trace() / 3.0)
    }

    /// Orthogonal split into (deviatoric symmetric, skew, spherical) parts.
    ///
    /// The three parts are mutually orthogonal in the Frobenius inner product
    /// and sum back to the original tensor.
    pub fn decompose(&self) -> (Tensor3, Tensor3, Tensor3) {
        (self.dev_sym(), self.skew(), self.sphere())
    }

    /// Frobenius inner product `A : B`.
    pub fn inner(&self, other: &Tensor3) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += self.0[i][j] * other.0[i][j];
            }
        }
        s
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.inner(self).sqrt()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &Vector3) -> Vector3 {
        let mut out = Vector3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out.0[i] += self.0[i][j] * v.0[j];
            }
        }
        out
    }

    /// Axial vector of a skew-symmetric tensor, defined by `A b = axl(A) x b`.
    ///
    /// # Errors
    ///
    /// Returns [`TensorError::NotSkew`] when the symmetric part of the input
    /// exceeds `1e-12` times the tensor norm (with an absolute floor for the
    /// zero tensor).
    pub fn axl(&self) -> Result<Vector3, TensorError> {
        let sym_norm = self.sym().norm();
        let bound = SKEW_TOL * self.norm().max(1.0e-300);
        if sym_norm > bound {
            return Err(TensorError::NotSkew { sym_norm, bound });
        }
        Ok(Vector3([
            0.5 * (self.0[2][1] - self.0[1][2]),
            0.5 * (self.0[0][2] - self.0[2][0]),
            0.5 * (self.0[1][0] - self.0[0][1]),
        ]))
    }

    /// Skew-symmetric tensor with the given axial vector, `anti(v) w = v x w`.
    pub fn anti(v: &Vector3) -> Tensor3 {
        Tensor3([
            [0.0, -v.0[2], v.0[1]],
            [v.0[2], 0.0, -v.0[0]],
            [-v.0[1], v.0[0], 0.0],
        ])
    }
}

impl Add for Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: Tensor3) -> Tensor3 {
        let mut t = self;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] += rhs.0[i][j];
            }
        }
        t
    }
}

impl Sub for Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: Tensor3) -> Tensor3 {
        let mut t = self;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] -= rhs.0[i][j];
            }
        }
        t
    }
}

impl Mul<f64> for Tensor3 {
    type Output = Tensor3;
    fn mul(self, rhs: f64) -> Tensor3 {
        let mut t = self;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] *= rhs;
            }
        }
        t
    }
}

impl Neg for Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        self * -1.0
    }
}

impl Index<(usize, usize)> for Tensor3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}
