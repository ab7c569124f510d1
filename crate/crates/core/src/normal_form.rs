//! Reduction of a traceless symmetric matrix to `X_{mu,lambda}`: every
//! trace-free ternary quadratic form is `A(x^2 - y^2) + B xz` in a suitable
//! orthonormal basis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symmat::{conjugate, eigen_sym, Rotation3, SymEigen, SymTraceless3};
use crate::tolerance;

/// Eigensolver signature; lets verification swap in a faulty solver.
pub type EigenSolver = fn(&SymTraceless3) -> SymEigen;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalFormResult {
    pub mu: f64,
    /// Non-negative by convention.
    pub lambda: f64,
    /// `k.A = X_{mu,lambda}`.
    pub rotation: Rotation3,
    pub coeff_a: f64,
    pub coeff_b: f64,
}

impl NormalFormResult {
    pub fn target(&self) -> SymTraceless3 {
        SymTraceless3::normal(self.mu, self.lambda)
    }

    /// `|k.A - X_{mu,lambda}|_F`.
    pub fn reconstruction_error(&self, a: &SymTraceless3) -> f64 {
        conjugate(&self.rotation, a).max_abs_diff(&self.target())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MuLambda {
    pub mu: f64,
    pub lambda: f64,
}

/// `mu = -nu2`, `lambda = sqrt(-nu1 nu3)` for sorted, trace-free eigenvalues.
pub fn mu_lambda(nu1: f64, nu2: f64, nu3: f64) -> Result<MuLambda> {
    let scale = nu1.abs().max(nu2.abs()).max(nu3.abs());
    let slack = tolerance::recon_bound(scale);
    if nu1 < nu2 - slack || nu2 < nu3 - slack {
        return Err(Error::UnsortedEigenvalues);
    }
    let sum = nu1 + nu2 + nu3;
    if sum.abs() > slack {
        return Err(Error::EigenvaluesNotTraceless(sum));
    }
    Ok(MuLambda {
        mu: 0.0 - nu2,
        lambda: (-nu1 * nu3).max(0.0).sqrt(),
    })
}

pub fn normal_form(a: &SymTraceless3) -> NormalFormResult {
    normal_form_with(a, eigen_sym).expect("closed-form eigensolver returns sorted trace-free spectra")
}

/// `k = k_X^-1 k_A`, where `k_A` and `k_X` diagonalize `A` and `X_{mu,lambda}`
/// with the same descending eigenvalue order.
pub fn normal_form_with(a: &SymTraceless3, solver: EigenSolver) -> Result<NormalFormResult> {
    let ea = solver(a);
    let [n1, n2, n3] = ea.values;
    let ml = mu_lambda(n1, n2, n3)?;
    let target = SymTraceless3::normal(ml.mu, ml.lambda);
    let ex = solver(&target);
    let (coeff_a, coeff_b) = coefficients(ml);
    Ok(NormalFormResult {
        mu: ml.mu,
        lambda: ml.lambda,
        rotation: ex.rotation.inverse() * ea.rotation,
        coeff_a,
        coeff_b,
    })
}

fn coefficients(ml: MuLambda) -> (f64, f64) {
    (ml.mu, 2.0 * ml.lambda)
}

/// `(A, B)` with `x^T X_{mu,lambda} x = A(x^2 - y^2) + B xz`.
pub fn corollary_coeffs(a: &SymTraceless3) -> (f64, f64) {
    let nf = normal_form(a);
    (nf.coeff_a, nf.coeff_b)
}
