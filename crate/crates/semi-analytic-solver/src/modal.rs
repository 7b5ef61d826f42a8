//! Eigenbasis construction for the coupled diagonal micro-distortion system.
//!
//! The reduced bending equations form a three-component linear system
//! `C S'' = E S + g kappa x` with flux-free faces `S'(+-h/2) = 0`. Both `C`
//! and `E` are symmetric positive definite, so the matrix pencil `(E, C)` is
//! diagonalized through a Cholesky split of `C` and a symmetric eigensolve,
//! which keeps every rate real and every mode well conditioned.

use closed_form_solutions::special::{
    layer_antiderivative, layer_derivative, layer_first_moment, layer_value,
};
use closed_form_solutions::{BendingProblem, SolveError};
use nalgebra::{Cholesky, Matrix3, SymmetricEigen, Vector3};

use crate::OdeSystem;

/// The solved system in modal form: a linear particular part plus three
/// decoupled boundary layers `amps[k] * modes[k] * phi_k(x)` where
/// `phi_k(x) = sinh(r_k x) / (r_k cosh(r_k h/2))` has unit face slope.
#[derive(Clone, Copy)]
pub(crate) struct Modal {
    pub h: f64,
    /// Layer rates `r_k`, the square roots of the pencil eigenvalues.
    pub rates: [f64; 3],
    /// Pencil eigenvectors, one per rate.
    pub modes: [Vector3<f64>; 3],
    /// Layer amplitudes fixing the face conditions.
    pub amps: [f64; 3],
    /// Slope of the particular solution `S_p(x) = slope * x`.
    pub slope: Vector3<f64>,
}

impl Modal {
    pub fn new(system: &OdeSystem, h: f64, kappa: f64) -> Result<Modal, SolveError> {

        let c = Matrix3::from(system.c);
        let e = Matrix3::from(system.e);
        let g = Vector3::from(system.g);

        // C has the closed eigenvalues mu lc^2 {a1, a1, 2 a3 / 3}; report
        // them instead of a bare factorization failure.
        let chol = Cholesky::new(c).ok_or_else(|| {
            SolveError::IllPosedCurvature(format!(
                "curvature matrix eigenvalues (mu lc^2 a1 twice, 2 mu lc^2 a3 / 3) = \
                 ({}, {}, {}) must all be positive",
                c[(1, 1)] - c[(0, 1)],
                c[(1, 1)] - c[(0, 1)],
                c.trace() - 2.0 * (c[(1, 1)] - c[(0, 1)])
            ))
        })?;
        let l = chol.l();

        let linv_e = l
            .solve_lower_triangular(&e)
            .ok_or_else(|| degenerate("the curvature factor is singular"))?;
        let m = l
            .solve_lower_triangular(&linv_e.transpose())
            .ok_or_else(|| degenerate("the curvature factor is singular"))?
            .transpose();
        let m = 0.5 * (m + m.transpose());
        let eig = SymmetricEigen::new(m);

        let mut rates = [0.0; 3];
        for k in 0..3 {
            let lam = eig.eigenvalues[k];
            if !(lam > 0.0) {
                return Err(degenerate(&format!(
                    "the elastic coupling matrix is not positive definite \
                     (pencil eigenvalue {lam})"
                )));
            }
            rates[k] = lam.sqrt();
        }
        let w = l
            .transpose()
            .solve_upper_triangular(&eig.eigenvectors)
            .ok_or_else(|| degenerate("the curvature factor is singular"))?;

        let slope = -e
            .lu()
            .solve(&(g * kappa))
            .ok_or_else(|| degenerate("the elastic coupling matrix is singular"))?;

        // Face flux: slope + sum_k amps[k] modes[k] = 0, since phi_k'(h/2) = 1.
        let amps_vec = w
            .lu()
            .solve(&(-slope))
            .ok_or_else(|| degenerate("the modal basis is singular on the faces"))?;

        Ok(Modal {
            h,
            rates,
            modes: [
                w.column(0).into_owned(),
                w.column(1).into_owned(),
                w.column(2).into_owned(),
            ],
            amps: [amps_vec[0], amps_vec[1], amps_vec[2]],
            slope,
        })
    }

    fn layered<F: Fn(f64) -> f64>(&self, base: Vector3<f64>, shape: F) -> Vector3<f64> {
        let mut out = base;
        for k in 0..3 {
            out += self.modes[k] * (self.amps[k] * shape(self.rates[k]));
        }
        out
    }

    pub fn s(&self, x: f64) -> Vector3<f64> {
        self.layered(self.slope * x, |r| layer_value(r, self.h, 1.0, x))
    }

    pub fn s_prime(&self, x: f64) -> Vector3<f64> {
        self.layered(self.slope, |r| layer_derivative(r, self.h, 1.0, x))
    }

    /// `phi'' = r^2 phi`, so the layers carry the entire second derivative.
    pub fn s_second(&self, x: f64) -> Vector3<f64> {
        self.layered(Vector3::zeros(), |r| r * r * layer_value(r, self.h, 1.0, x))
    }

    /// `int_0^x S`, used for the deflection profile.
    pub fn s_integral(&self, x: f64) -> Vector3<f64> {
        self.layered(self.slope * (0.5 * x * x), |r| {
            layer_antiderivative(r, self.h, 1.0, x)
        })
    }

    /// `int_{-h/2}^{h/2} x S(x) dx`, used for the force-stress moment.
    pub fn s_first_moment(&self) -> Vector3<f64> {
        let h = self.h;
        self.layered(self.slope * (h * h * h / 12.0), |r| {
            layer_first_moment(r, h, 1.0)
        })
    }
}

fn degenerate(msg: &str) -> SolveError {
    SolveError::DegenerateMaterial(msg.to_string())
}

/// Builds the modal solution for a validated problem.
pub(crate) fn solve_modal(problem: &BendingProblem) -> Result<Modal, SolveError> {
    let system = crate::diagonal_system(&problem.scales);
    Modal::new(&system, problem.h, problem.kappa)
}
