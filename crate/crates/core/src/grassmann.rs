//! Two-planes `W` in `p`, the restriction of `u2 = det` to the unit circle
//! `W_1`, and the membership test `W in X  <=>  max u2|W_1 = 54^{-1/2}`.

use std::f64::consts::{PI, TAU};

use nalgebra::SMatrix;

use crate::cubic;
use crate::error::{Error, Result};
use crate::symmat::{conjugate, invariants, trace_inner, Rotation3, SymTraceless3};

/// `54^{-1/2}`, the maximum of `det` on the unit sphere of `p`.
pub const C_MAX: f64 = 0.136_082_763_487_954_34;

pub const DEFAULT_MEMBER_TOL: f64 = 1e-7;

pub type Projector = SMatrix<f64, 5, 5>;

/// A 2-plane stored as a trace-form orthonormal ordered basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Subspace2 {
    b1: SymTraceless3,
    b2: SymTraceless3,
}

impl Subspace2 {
    /// Gram-Schmidt under the trace form. Rejects pairs whose normalized Gram
    /// determinant `1 - cos^2` is at most `1e-12`.
    pub fn from_generators(g1: &SymTraceless3, g2: &SymTraceless3) -> Result<Self> {
        let n11 = trace_inner(g1, g1);
        let n22 = trace_inner(g2, g2);
        let n12 = trace_inner(g1, g2);
        let scale = n11 * n22;
        let gram = n11 * n22 - n12 * n12;
        if !(scale > 0.0) || !gram.is_finite() || gram <= 1e-12 * scale {
            return Err(Error::DependentGenerators(gram));
        }
        let b1 = (1.0 / n11.sqrt()) * *g1;
        let mut r = *g2 - trace_inner(g2, &b1) * b1;
        // second pass for orthogonality at the 1e-16 level
        r = r - trace_inner(&r, &b1) * b1;
        let b2 = (1.0 / r.frobenius_norm()) * r;
        Ok(Self { b1, b2 })
    }

    pub fn basis(&self) -> (SymTraceless3, SymTraceless3) {
        (self.b1, self.b2)
    }

    /// `cos(theta) B1 + sin(theta) B2`, a point of `W_1`.
    pub fn point(&self, theta: f64) -> SymTraceless3 {
        let (s, c) = theta.sin_cos();
        c * self.b1 + s * self.b2
    }

    pub fn conjugated(&self, k: &Rotation3) -> Self {
        Self {
            b1: conjugate(k, &self.b1),
            b2: conjugate(k, &self.b2),
        }
    }

    /// Orthogonal projector onto `W` in trace-orthonormal coordinates.
    pub fn projector(&self) -> Projector {
        let c1 = nalgebra::SVector::<f64, 5>::from(self.b1.coords());
        let c2 = nalgebra::SVector::<f64, 5>::from(self.b2.coords());
        c1 * c1.transpose() + c2 * c2.transpose()
    }

    /// Frobenius distance between the two projectors; basis independent.
    pub fn projector_distance(&self, other: &Self) -> f64 {
        (self.projector() - other.projector()).norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.projector_distance(other) <= tol
    }

    /// Component of `x` orthogonal to `W`, measured in trace norm.
    pub fn distance_to(&self, x: &SymTraceless3) -> f64 {
        let p = trace_inner(x, &self.b1) * self.b1 + trace_inner(x, &self.b2) * self.b2;
        (*x - p).frobenius_norm()
    }

    /// Angle of the unit vector of `W` closest to `x` (assumed to lie in `W`).
    pub fn angle_of(&self, x: &SymTraceless3) -> f64 {
        trace_inner(x, &self.b2).atan2(trace_inner(x, &self.b1))
    }
}

/// Fourier expansion `u2(cos t B1 + sin t B2) = a1 cos t + b1 sin t + a3 cos 3t + b3 sin 3t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleCubic {
    pub a1: f64,
    pub b1: f64,
    pub a3: f64,
    pub b3: f64,
}

impl CircleCubic {
    pub fn eval(&self, t: f64) -> f64 {
        self.a1 * t.cos() + self.b1 * t.sin() + self.a3 * (3.0 * t).cos() + self.b3 * (3.0 * t).sin()
    }

    pub fn deriv(&self, t: f64) -> f64 {
        -self.a1 * t.sin() + self.b1 * t.cos() - 3.0 * self.a3 * (3.0 * t).sin()
            + 3.0 * self.b3 * (3.0 * t).cos()
    }

    pub fn deriv2(&self, t: f64) -> f64 {
        -self.a1 * t.cos() - self.b1 * t.sin() - 9.0 * self.a3 * (3.0 * t).cos()
            - 9.0 * self.b3 * (3.0 * t).sin()
    }

    pub fn amplitude(&self) -> f64 {
        self.a1.abs() + self.b1.abs() + self.a3.abs() + self.b3.abs()
    }

    /// The derivative as a binary cubic `h0 c^3 + h1 c^2 s + h2 c s^2 + h3 s^3`
    /// in `(c, s) = (cos t, sin t)`; its zero lines are the critical points.
    fn critical_form(&self) -> [f64; 4] {
        [
            self.b1 + 3.0 * self.b3,
            -self.a1 - 9.0 * self.a3,
            self.b1 - 9.0 * self.b3,
            -self.a1 + 3.0 * self.a3,
        ]
    }

    /// All critical angles in `[0, 2pi)`, Newton-polished.
    pub fn critical_points(&self) -> Vec<f64> {
        let [h0, h1, h2, h3] = self.critical_form();
        let mut cands = Vec::with_capacity(24);
        // t = tan(theta) when cos != 0, u = cot(theta) when sin != 0
        for t in cubic::real_roots([h0, h1, h2, h3]) {
            let th = t.atan();
            cands.push(th);
            cands.push(th + PI);
        }
        for u in cubic::real_roots([h3, h2, h1, h0]) {
            let th = 1f64.atan2(u);
            cands.push(th);
            cands.push(th + PI);
        }
        // seeds guard against roots lost to ill-conditioned coefficients
        for k in 0..12 {
            cands.push(k as f64 * PI / 6.0);
        }
        cands.into_iter().map(|t| self.polish(t).rem_euclid(TAU)).collect()
    }

    fn polish(&self, mut t: f64) -> f64 {
        let mut d = self.deriv(t);
        for _ in 0..12 {
            let dd = self.deriv2(t);
            if d == 0.0 || dd == 0.0 {
                break;
            }
            let step = (d / dd).clamp(-0.5, 0.5);
            let nt = t - step;
            let nd = self.deriv(nt);
            if !(nd.abs() < d.abs()) {
                break;
            }
            t = nt;
            d = nd;
        }
        t
    }

    /// Global maximum `(value, angle)` on the circle.
    pub fn maximize(&self) -> (f64, f64) {
        if self.amplitude() == 0.0 {
            return (0.0, 0.0);
        }
        self.critical_points()
            .into_iter()
            .map(|t| (self.eval(t), t))
            .fold((f64::NEG_INFINITY, 0.0), |best, c| if c.0 > best.0 { c } else { best })
    }

    /// Every angle where the maximum is attained (within `tol`), deduplicated.
    pub fn maximizers(&self, tol: f64) -> Vec<f64> {
        let (fmax, _) = self.maximize();
        let mut out: Vec<f64> = Vec::new();
        for t in self.critical_points() {
            if self.eval(t) >= fmax - tol {
                let dup = out.iter().any(|&o| {
                    let d = (o - t).rem_euclid(TAU);
                    d.min(TAU - d) < 1e-6
                });
                if !dup {
                    out.push(t);
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Fourier coefficients of `u2` on `W_1` from an 8-point DFT; exact because
/// only the harmonics 1 and 3 occur.
pub fn u2_fourier(w: &Subspace2) -> CircleCubic {
    let n = 8;
    let (mut a1, mut b1, mut a3, mut b3) = (0.0, 0.0, 0.0, 0.0);
    for j in 0..n {
        let t = TAU * j as f64 / n as f64;
        let g = invariants(&w.point(t)).u2;
        a1 += g * t.cos();
        b1 += g * t.sin();
        a3 += g * (3.0 * t).cos();
        b3 += g * (3.0 * t).sin();
    }
    let s = 2.0 / n as f64;
    CircleCubic {
        a1: s * a1,
        b1: s * b1,
        a3: s * a3,
        b3: s * b3,
    }
}

/// `f(W) = max_{X in W_1} u2(X)`.
pub fn f_max(w: &Subspace2) -> f64 {
    u2_fourier(w).maximize().0.max(0.0)
}

/// `J = {u2(X) | X in W_1} = [-f(W), f(W)]`.
pub fn interval_j(w: &Subspace2) -> (f64, f64) {
    let f = f_max(w);
    (-f, f)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipReport {
    pub f_value: f64,
    pub in_x: bool,
    pub certificate_theta: Option<f64>,
    /// Unit element of `W` with eigenvalues `(nu, nu, -2 nu)`, `nu > 0`.
    pub certificate_x: Option<SymTraceless3>,
}

/// `W in X` iff `f(W) >= 54^{-1/2} - tol`. The certificate is `-X(theta*)`
/// at the argmax `theta*`: the maximum of `det` is reached where the
/// repeated eigenvalue is negative, so the sign flip makes it positive.
pub fn member_x(w: &Subspace2, tol: f64) -> MembershipReport {
    let cc = u2_fourier(w);
    let (f, theta) = cc.maximize();
    let f = f.max(0.0);
    let in_x = f >= C_MAX - tol;
    let (certificate_theta, certificate_x) = if in_x {
        let t = (theta + PI).rem_euclid(TAU);
        (Some(t), Some(w.point(t)))
    } else {
        (None, None)
    };
    MembershipReport {
        f_value: f,
        in_x,
        certificate_theta,
        certificate_x,
    }
}
