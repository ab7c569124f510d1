//! Small exact linear algebra on `p`, the traceless symmetric 3x3 matrices.
//!
//! Elements are stored as the five independent entries `a11, a22, a12, a13,
//! a23`; `a33 = -a11 - a22` is always derived, so every value of
//! [`SymTraceless3`] is symmetric and trace-free by construction.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance;

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SymTraceless3 {
    pub a11: f64,
    pub a22: f64,
    pub a12: f64,
    pub a13: f64,
    pub a23: f64,
}

impl SymTraceless3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0, 0.0);

    pub const fn new(a11: f64, a22: f64, a12: f64, a13: f64, a23: f64) -> Self {
        Self {
            a11,
            a22,
            a12,
            a13,
            a23,
        }
    }

    /// `diag(x, y, -x-y)`.
    pub const fn diag(x: f64, y: f64) -> Self {
        Self::new(x, y, 0.0, 0.0, 0.0)
    }

    /// `X_0 = diag(1, 1, -2)`.
    pub const fn x0() -> Self {
        Self::diag(1.0, 1.0)
    }

    /// The normal form `X_{mu,lambda} = (mu, 0, lambda; 0, -mu, 0; lambda, 0, 0)`.
    pub const fn normal(mu: f64, lambda: f64) -> Self {
        Self::new(mu, -mu, 0.0, lambda, 0.0)
    }

    /// `Y_{alpha,delta,epsilon} = (alpha, 0, delta; 0, -alpha, epsilon; delta, epsilon, 0)`.
    pub const fn y_shape(alpha: f64, delta: f64, epsilon: f64) -> Self {
        Self::new(alpha, -alpha, 0.0, delta, epsilon)
    }

    #[inline]
    pub fn a33(&self) -> f64 {
        -self.a11 - self.a22
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        Matrix3::new(
            self.a11, self.a12, self.a13, //
            self.a12, self.a22, self.a23, //
            self.a13, self.a23, self.a33(),
        )
    }

    /// Reads the upper triangle of `m` without any validation.
    pub fn from_upper(m: &Matrix3<f64>) -> Self {
        Self::new(m[(0, 0)], m[(1, 1)], m[(0, 1)], m[(0, 2)], m[(1, 2)])
    }

    /// Accepts a full symmetric matrix whose asymmetry and trace are both
    /// within `tol`.
    pub fn from_matrix(m: &Matrix3<f64>, tol: f64) -> Result<Self> {
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asym = asymmetry(m);
        if asym > tol {
            return Err(Error::NotSymmetric(asym));
        }
        let tr = m.trace();
        if tr.abs() > tol {
            return Err(Error::NotTraceless(tr));
        }
        Ok(Self::from_upper(&symmetrize(m)))
    }

    /// Removes the trace part `tr(m)/3 * I` (the center of `Sym(3)`).
    pub fn from_matrix_projected(m: &Matrix3<f64>, tol: f64) -> Result<Self> {
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asym = asymmetry(m);
        if asym > tol {
            return Err(Error::NotSymmetric(asym));
        }
        let s = symmetrize(m);
        let shift = s.trace() / 3.0;
        Ok(Self::new(
            s[(0, 0)] - shift,
            s[(1, 1)] - shift,
            s[(0, 1)],
            s[(0, 2)],
            s[(1, 2)],
        ))
    }

    pub fn frobenius_norm(&self) -> f64 {
        trace_inner(self, self).sqrt()
    }

    /// Coordinates in a trace-form orthonormal basis of `p`:
    /// `diag(1,-1,0)/sqrt2, diag(1,1,-2)/sqrt6, (e12+e21)/sqrt2, (e13+e31)/sqrt2, (e23+e32)/sqrt2`.
    pub fn coords(&self) -> [f64; 5] {
        [
            (self.a11 - self.a22) / SQRT2,
            (self.a11 + self.a22) * (1.5f64).sqrt(),
            SQRT2 * self.a12,
            SQRT2 * self.a13,
            SQRT2 * self.a23,
        ]
    }

    pub fn from_coords(c: [f64; 5]) -> Self {
        let diff = SQRT2 * c[0];
        let sum = c[1] / (1.5f64).sqrt();
        Self::new(
            0.5 * (sum + diff),
            0.5 * (sum - diff),
            c[2] / SQRT2,
            c[3] / SQRT2,
            c[4] / SQRT2,
        )
    }

    /// Quadratic form `v^T X v`.
    pub fn quad(&self, v: &Vector3<f64>) -> f64 {
        v.dot(&(self.to_matrix() * v))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).frobenius_norm()
    }
}

fn asymmetry(m: &Matrix3<f64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in (i + 1)..3 {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

fn symmetrize(m: &Matrix3<f64>) -> Matrix3<f64> {
    (m + m.transpose()) * 0.5
}

impl Add for SymTraceless3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.a11 + o.a11,
            self.a22 + o.a22,
            self.a12 + o.a12,
            self.a13 + o.a13,
            self.a23 + o.a23,
        )
    }
}

impl Sub for SymTraceless3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.a11 - o.a11,
            self.a22 - o.a22,
            self.a12 - o.a12,
            self.a13 - o.a13,
            self.a23 - o.a23,
        )
    }
}

impl Mul<SymTraceless3> for f64 {
    type Output = SymTraceless3;
    fn mul(self, x: SymTraceless3) -> SymTraceless3 {
        SymTraceless3::new(
            self * x.a11,
            self * x.a22,
            self * x.a12,
            self * x.a13,
            self * x.a23,
        )
    }
}

impl Neg for SymTraceless3 {
    type Output = Self;
    fn neg(self) -> Self {
        -1.0 * self
    }
}

/// An element of `SO(3)`, acting on `p` by `k.X = k X k^-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3(Matrix3<f64>);

impl Rotation3 {
    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    /// Validates `RR^T = I` and `det R = 1` against the global orthogonality tolerance.
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        Self::with_tolerance(m, tolerance::global().orth)
    }

    pub fn with_tolerance(m: Matrix3<f64>, tol: f64) -> Result<Self> {
        let defect = (m * m.transpose() - Matrix3::identity()).norm();
        let det = m.determinant();
        if !defect.is_finite() || defect > tol || (det - 1.0).abs() > tol {
            return Err(Error::NotRotation { defect, det });
        }
        Ok(Self(m))
    }

    /// Wraps `m` without checking; callers guarantee it is a rotation.
    pub(crate) fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        Self(m)
    }

    pub fn from_rows(r: [Vector3<f64>; 3]) -> Result<Self> {
        Self::new(Matrix3::from_rows(&[
            r[0].transpose(),
            r[1].transpose(),
            r[2].transpose(),
        ]))
    }

    /// Rotation by `phi` in the 1-2 plane (an element of the torus `T`).
    pub fn torus(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self(Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn orthogonality_defect(&self) -> f64 {
        (self.0 * self.0.transpose() - Matrix3::identity()).norm()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.0 - other.0).norm()
    }
}

impl Mul for Rotation3 {
    type Output = Rotation3;
    fn mul(self, o: Rotation3) -> Rotation3 {
        Rotation3(self.0 * o.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvariantPair {
    /// `tr X^2`, the squared trace norm.
    pub u1: f64,
    /// `det X`.
    pub u2: f64,
}

pub fn invariants(x: &SymTraceless3) -> InvariantPair {
    InvariantPair {
        u1: trace_inner(x, x),
        u2: det(x),
    }
}

fn det(x: &SymTraceless3) -> f64 {
    let a33 = x.a33();
    x.a11 * (x.a22 * a33 - x.a23 * x.a23) - x.a12 * (x.a12 * a33 - x.a23 * x.a13)
        + x.a13 * (x.a12 * x.a23 - x.a22 * x.a13)
}

/// The characteristic polynomial `-x^3 + p x + q` of a traceless matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoly {
    pub p: f64,
    pub q: f64,
}

impl CharPoly {
    pub fn eval(&self, x: f64) -> f64 {
        -x * x * x + self.p * x + self.q
    }

    /// Coefficients `[c0, c1, c2, c3]` of `c0 + c1 x + c2 x^2 + c3 x^3`.
    pub fn coefficients(&self) -> [f64; 4] {
        [self.q, self.p, 0.0, -1.0]
    }
}

pub fn char_poly(x: &SymTraceless3) -> CharPoly {
    let inv = invariants(x);
    CharPoly {
        p: 0.5 * inv.u1,
        q: inv.u2,
    }
}

pub fn trace_inner(a: &SymTraceless3, b: &SymTraceless3) -> f64 {
    a.a11 * b.a11
        + a.a22 * b.a22
        + a.a33() * b.a33()
        + 2.0 * (a.a12 * b.a12 + a.a13 * b.a13 + a.a23 * b.a23)
}

pub fn conjugate(k: &Rotation3, x: &SymTraceless3) -> SymTraceless3 {
    let m = k.0 * x.to_matrix() * k.0.transpose();
    SymTraceless3::from_upper(&m)
}

/// An element of `k = so(3)` written in the basis `X1, X2, X3`:
/// `X1 = e12 - e21`, `X2 = e13 - e31`, `X3 = e23 - e32`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Skew3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Skew3 {
    pub const X1: Self = Self {
        x1: 1.0,
        x2: 0.0,
        x3: 0.0,
    };
    pub const X2: Self = Self {
        x1: 0.0,
        x2: 1.0,
        x3: 0.0,
    };
    pub const X3: Self = Self {
        x1: 0.0,
        x2: 0.0,
        x3: 1.0,
    };

    pub const BASIS: [Self; 3] = [Self::X1, Self::X2, Self::X3];

    pub fn to_matrix(&self) -> Matrix3<f64> {
        Matrix3::new(
            0.0, self.x1, self.x2, //
            -self.x1, 0.0, self.x3, //
            -self.x2, -self.x3, 0.0,
        )
    }

    /// Reads an antisymmetric matrix (upper triangle).
    pub fn from_matrix(m: &Matrix3<f64>) -> Self {
        Self {
            x1: m[(0, 1)],
            x2: m[(0, 2)],
            x3: m[(1, 2)],
        }
    }
}

/// `[U, Z] = UZ - ZU`, symmetric and traceless for antisymmetric `U`.
pub fn bracket_k_p(u: &Skew3, z: &SymTraceless3) -> SymTraceless3 {
    let um = u.to_matrix();
    let zm = z.to_matrix();
    SymTraceless3::from_upper(&(um * zm - zm * um))
}

/// Eigen-decomposition `k.X = diag(values)` with `values` sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymEigen {
    pub values: [f64; 3],
    pub rotation: Rotation3,
}

impl SymEigen {
    /// Unit eigenvector for `values[i]` (row `i` of the rotation).
    pub fn vector(&self, i: usize) -> Vector3<f64> {
        self.rotation.0.row(i).transpose()
    }

    pub fn min_gap(&self) -> f64 {
        (self.values[0] - self.values[1]).min(self.values[1] - self.values[2])
    }
}

/// Closed-form symmetric eigensolver.
///
/// The eigenvalues of the depressed cubic come from the trigonometric
/// formula; the most isolated one fixes an eigenvector by cross products of
/// rows of `X - nu I`, and the remaining pair is resolved exactly as a 2x2
/// symmetric problem on the orthogonal complement. The pair step keeps
/// (near-)double eigenvalues accurate to machine precision, which the
/// characteristic polynomial alone cannot.
pub fn eigen_sym(x: &SymTraceless3) -> SymEigen {
    let scale = x.frobenius_norm();
    if scale == 0.0 {
        return SymEigen {
            values: [0.0; 3],
            rotation: Rotation3::identity(),
        };
    }
    let m = x.to_matrix();
    let [n1, n2, n3] = trig_roots(&char_poly(x));

    let iso = if n1 - n2 >= n2 - n3 { n1 } else { n3 };
    let e = null_vector(&m, iso);
    let iso = e.dot(&(m * e));

    let (u, v) = complement_basis(&e);
    let mu = m * u;
    let mv = m * v;
    let (hi, lo, (c, s)) = sym2_eigen(u.dot(&mu), u.dot(&mv), v.dot(&mv));
    let w_hi = u * c + v * s;
    let w_lo = v * c - u * s;

    let mut pairs = [(iso, e), (hi, w_hi), (lo, w_lo)];
    // stable: ties keep the (isolated, hi, lo) order
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut rows = [pairs[0].1, pairs[1].1, pairs[2].1];
    let r = Matrix3::from_rows(&[rows[0].transpose(), rows[1].transpose(), rows[2].transpose()]);
    if r.determinant() < 0.0 {
        rows[2] = -rows[2];
    }
    let r = Matrix3::from_rows(&[rows[0].transpose(), rows[1].transpose(), rows[2].transpose()]);
    SymEigen {
        values: [pairs[0].0, pairs[1].0, pairs[2].0],
        rotation: Rotation3(r),
    }
}

/// Roots of `-x^3 + p x + q` (p >= 0) sorted descending, by the
/// trigonometric formula with the arccos argument clamped to [-1, 1].
pub fn trig_roots(cp: &CharPoly) -> [f64; 3] {
    if cp.p <= 0.0 {
        return [0.0; 3];
    }
    let r = (cp.p / 3.0).sqrt();
    let arg = (cp.q / (2.0 * r * r * r)).clamp(-1.0, 1.0);
    let phi = arg.acos();
    let tau = 2.0 * std::f64::consts::PI;
    let n1 = 2.0 * r * (phi / 3.0).cos();
    let n3 = 2.0 * r * ((phi + tau) / 3.0).cos();
    [n1, -n1 - n3, n3]
}

fn null_vector(m: &Matrix3<f64>, nu: f64) -> Vector3<f64> {
    let a = m - Matrix3::identity() * nu;
    let r0: Vector3<f64> = a.row(0).transpose();
    let r1: Vector3<f64> = a.row(1).transpose();
    let r2: Vector3<f64> = a.row(2).transpose();
    let cands = [r0.cross(&r1), r0.cross(&r2), r1.cross(&r2)];
    let best = cands
        .iter()
        .max_by(|a, b| a.norm_squared().total_cmp(&b.norm_squared()))
        .copied()
        .unwrap_or_else(Vector3::x);
    let n = best.norm();
    if n == 0.0 {
        Vector3::x()
    } else {
        best / n
    }
}

/// Orthonormal pair spanning `e^perp`, from Gram-Schmidt on the two
/// coordinate axes other than the one most aligned with `e`.
pub(crate) fn complement_basis(e: &Vector3<f64>) -> (Vector3<f64>, Vector3<f64>) {
    let mut imax = 0;
    for i in 1..3 {
        if e[i].abs() > e[imax].abs() {
            imax = i;
        }
    }
    let axis = if imax == 0 { 1 } else { 0 };
    let mut a = Vector3::zeros();
    a[axis] = 1.0;
    let u = (a - e * e[axis]).normalize();
    let v = e.cross(&u);
    (u, v)
}

/// Eigen-decomposition of `[[a, b], [b, d]]`: `(hi, lo, (cos t, sin t))`
/// where `(cos t, sin t)` is the eigenvector of `hi`.
pub(crate) fn sym2_eigen(a: f64, b: f64, d: f64) -> (f64, f64, (f64, f64)) {
    let mean = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let rad = half.hypot(b);
    let t = 0.5 * (2.0 * b).atan2(a - d);
    (mean + rad, mean - rad, (t.cos(), t.sin()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_rotation, random_traceless, rng_from_seed};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn entries() -> impl Strategy<Value = SymTraceless3> {
        prop::array::uniform5(-10.0f64..10.0)
            .prop_map(|a| SymTraceless3::new(a[0], a[1], a[2], a[3], a[4]))
    }

    #[test]
    fn golden_invariants() {
        let inv = invariants(&SymTraceless3::x0());
        assert_eq!((inv.u1, inv.u2), (6.0, -2.0));
        let z = invariants(&SymTraceless3::ZERO);
        assert_eq!((z.u1, z.u2), (0.0, 0.0));
    }

    #[test]
    fn normal_form_matrix_invariants() {
        // eigenvalues 1, 1, -2: sum of squares 6, product -2
        let inv = invariants(&SymTraceless3::normal(-1.0, 2f64.sqrt()));
        assert_relative_eq!(inv.u1, 6.0, epsilon = 1e-14);
        assert_relative_eq!(inv.u2, -2.0, epsilon = 1e-14);
    }

    #[test]
    fn char_poly_examples() {
        let cp = char_poly(&SymTraceless3::x0());
        assert_eq!((cp.p, cp.q), (3.0, -2.0));
        // direct expansion of det(X0 - xI) = (1-x)^2 (-2-x)
        for x in [-3.0, -1.0, 0.5, 2.0] {
            assert_relative_eq!(cp.eval(x), (1.0 - x) * (1.0 - x) * (-2.0 - x), epsilon = 1e-12);
        }

        let x = 6f64.powf(-0.5);
        let d = SymTraceless3::diag(x, x);
        let cp = char_poly(&d);
        assert_relative_eq!(cp.p, 0.5, epsilon = 1e-15);
        assert_relative_eq!(cp.q, -(54f64.powf(-0.5)), epsilon = 1e-15);
        // f1 = 2(x^2+y^2+xy), f2 = -xy(x+y) on the diagonal
        assert_relative_eq!(2.0 * cp.p, 2.0 * (3.0 * x * x), epsilon = 1e-15);
        assert_relative_eq!(cp.q, -x * x * (2.0 * x), epsilon = 1e-15);

        let z = char_poly(&SymTraceless3::ZERO);
        assert_eq!((z.p, z.q), (0.0, 0.0));
    }

    #[test]
    fn eigen_of_sorted_diagonal_is_identity() {
        let e = eigen_sym(&SymTraceless3::diag(2.0, -1.0));
        assert_eq!(e.values, [2.0, -1.0, -1.0]);
        assert!(e.rotation.distance(&Rotation3::identity()) < 1e-15);
    }

    #[test]
    fn eigen_of_normal_form() {
        let e = eigen_sym(&SymTraceless3::normal(1.0, 1.0));
        let s5 = 5f64.sqrt();
        assert_relative_eq!(e.values[0], (1.0 + s5) / 2.0, epsilon = 1e-13);
        // roots -mu and (mu +- sqrt(mu^2 + 4 lambda^2))/2, sorted
        assert_relative_eq!(e.values[1], (1.0 - s5) / 2.0, epsilon = 1e-13);
        assert_relative_eq!(e.values[2], -1.0, epsilon = 1e-13);

        let e = eigen_sym(&SymTraceless3::normal(-1.0, 2f64.sqrt()));
        for (got, want) in e.values.iter().zip([1.0, 1.0, -2.0]) {
            assert!((got - want).abs() <= 1e-12, "{:?}", e.values);
        }
    }

    #[test]
    fn eigen_of_rotated_spectrum() {
        let mut rng = rng_from_seed(7);
        for _ in 0..100 {
            let k = random_rotation(&mut rng);
            let x = conjugate(&k, &SymTraceless3::diag(3.0, 0.0));
            let e = eigen_sym(&x);
            for (got, want) in e.values.iter().zip([3.0, 0.0, -3.0]) {
                assert!((got - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn eigen_values_agree_with_nalgebra() {
        let mut rng = rng_from_seed(11);
        for _ in 0..1000 {
            let x = random_traceless(&mut rng);
            let mut oracle: Vec<f64> = x.to_matrix().symmetric_eigenvalues().iter().copied().collect();
            oracle.sort_by(|a, b| b.total_cmp(a));
            let e = eigen_sym(&x);
            for i in 0..3 {
                assert!((e.values[i] - oracle[i]).abs() < 1e-12 * (1.0 + x.frobenius_norm()));
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let y = SymTraceless3::y_shape(0.3, -1.1, 2.5);
        assert_eq!(conjugate(&Rotation3::identity(), &y), y);
        let m2 = Rotation3::new(Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0))).unwrap();
        assert_eq!(conjugate(&m2, &y), SymTraceless3::y_shape(0.3, 1.1, 2.5));
        // The displayed quarter turn s0 maps Y_{a,d,e} to Y_{-a,e,-d};
        // its inverse realises Y_{-a,-e,d}.
        let s0 = Rotation3::new(Matrix3::new(0.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(conjugate(&s0, &y), SymTraceless3::y_shape(-0.3, 2.5, 1.1));
        assert_eq!(conjugate(&s0.inverse(), &y), SymTraceless3::y_shape(-0.3, -2.5, -1.1));
    }

    #[test]
    fn bracket_matches_displayed_matrices() {
        let (a, d, e, c) = (0.7, -1.3, 2.1, 0.4);
        let z = SymTraceless3::y_shape(a, d, e) + c * SymTraceless3::x0();
        let b1 = bracket_k_p(&Skew3::X1, &z);
        assert_eq!(b1, SymTraceless3::new(0.0, 0.0, -2.0 * a, e, -d));
        let b2 = bracket_k_p(&Skew3::X2, &z);
        assert_relative_eq!(b2.a11, 2.0 * d);
        assert_relative_eq!(b2.a12, e);
        assert_relative_eq!(b2.a13, -3.0 * c - a, epsilon = 1e-15);
        assert_relative_eq!(b2.a22, 0.0);
        assert_relative_eq!(b2.a23, 0.0);
        let b3 = bracket_k_p(&Skew3::X3, &z);
        assert_relative_eq!(b3.a12, d);
        assert_relative_eq!(b3.a22, 2.0 * e);
        assert_relative_eq!(b3.a23, -3.0 * c + a, epsilon = 1e-15);
        assert_eq!(bracket_k_p(&Skew3 { x1: 0.2, x2: -1.0, x3: 3.0 }, &SymTraceless3::ZERO), SymTraceless3::ZERO);
    }

    #[test]
    fn skew_basis_commutator() {
        // [X1, X2] = X1 X2 - X2 X1 computed directly
        let (x1, x2, x3) = (Skew3::X1.to_matrix(), Skew3::X2.to_matrix(), Skew3::X3.to_matrix());
        for x in [x1, x2, x3] {
            assert_eq!(x.transpose(), -x);
        }
        let c = x1 * x2 - x2 * x1;
        assert_eq!(c, -x3);
        assert_eq!(Skew3::from_matrix(&c), Skew3 { x1: 0.0, x2: 0.0, x3: -1.0 });
    }

    #[test]
    fn trace_inner_examples() {
        let x0 = SymTraceless3::x0();
        assert_eq!(trace_inner(&x0, &x0), 6.0);
        let y = SymTraceless3::y_shape(1.7, -0.4, 0.9);
        assert_eq!(trace_inner(&x0, &y), 0.0);
        assert_eq!((x0.to_matrix() * y.to_matrix()).trace(), 0.0);
        assert_eq!(trace_inner(&y, &SymTraceless3::ZERO), 0.0);
    }

    #[test]
    fn coords_are_isometric() {
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let a = random_traceless(&mut rng);
            let b = random_traceless(&mut rng);
            let (ca, cb) = (a.coords(), b.coords());
            let dot: f64 = ca.iter().zip(cb.iter()).map(|(x, y)| x * y).sum();
            assert_relative_eq!(dot, trace_inner(&a, &b), epsilon = 1e-12);
            let back = SymTraceless3::from_coords(ca);
            assert!(back.max_abs_diff(&a) < 1e-14);
        }
    }

    #[test]
    fn from_matrix_validation() {
        let m = Matrix3::new(1.0, 2.0, 0.0, 2.0, 0.5, 0.0, 0.0, 0.0, -1.5);
        assert!(SymTraceless3::from_matrix(&m, 1e-9).is_ok());
        let mut asym = m;
        asym[(0, 1)] = 2.1;
        assert!(matches!(SymTraceless3::from_matrix(&asym, 1e-9), Err(Error::NotSymmetric(_))));
        let tr = Matrix3::from_diagonal(&Vector3::new(1.0, 2.0, 3.0));
        assert!(matches!(SymTraceless3::from_matrix(&tr, 1e-9), Err(Error::NotTraceless(_))));
        let p = SymTraceless3::from_matrix_projected(&tr, 1e-9).unwrap();
        assert_eq!(p, SymTraceless3::diag(-1.0, 0.0));
        let mut nan = m;
        nan[(2, 2)] = f64::NAN;
        assert_eq!(SymTraceless3::from_matrix(&nan, 1e-9), Err(Error::NonFinite));
    }

    #[test]
    fn rotation_validation() {
        assert!(Rotation3::new(Matrix3::identity()).is_ok());
        assert!(Rotation3::new(-Matrix3::<f64>::identity()).is_err());
        assert!(Rotation3::new(Matrix3::identity() * 1.01).is_err());
    }

    #[test]
    fn unit_trace_norm_bound_on_samples() {
        let mut rng = rng_from_seed(99);
        let bound = 54f64.powf(-0.5) + 1e-9;
        for _ in 0..100_000 {
            let x = random_traceless(&mut rng);
            let x = (1.0 / x.frobenius_norm()) * x;
            assert!(invariants(&x).u2.abs() <= bound);
        }
    }

    proptest! {
        #[test]
        fn invariants_are_conjugation_invariant(x in entries(), seed in any::<u64>()) {
            let k = random_rotation(&mut rng_from_seed(seed));
            let a = invariants(&x);
            let b = invariants(&conjugate(&k, &x));
            let s1 = 1.0 + a.u1;
            prop_assert!((a.u1 - b.u1).abs() <= 1e-10 * s1);
            prop_assert!((a.u2 - b.u2).abs() <= 1e-10 * s1.powf(1.5));
        }

        #[test]
        fn eigenvalues_are_char_poly_roots(x in entries()) {
            let e = eigen_sym(&x);
            let cp = char_poly(&x);
            let s = 1.0 + x.frobenius_norm();
            prop_assert!(e.values[0] >= e.values[1] && e.values[1] >= e.values[2]);
            prop_assert!((e.values.iter().sum::<f64>()).abs() <= 1e-12 * s);
            for v in e.values {
                prop_assert!(cp.eval(v).abs() <= 1e-9 * s * s * s);
            }
        }

        #[test]
        fn eigen_reconstructs(x in entries()) {
            let e = eigen_sym(&x);
            prop_assert!(e.rotation.orthogonality_defect() < 1e-12);
            prop_assert!((e.rotation.matrix().determinant() - 1.0).abs() < 1e-12);
            let d = conjugate(&e.rotation, &x);
            let want = SymTraceless3::diag(e.values[0], e.values[1]);
            prop_assert!(d.max_abs_diff(&want) <= 1e-9 * (1.0 + x.frobenius_norm()));
        }

        #[test]
        fn bracket_is_symmetric_traceless(x in entries(), u in prop::array::uniform3(-5.0f64..5.0)) {
            let u = Skew3 { x1: u[0], x2: u[1], x3: u[2] };
            let b = bracket_k_p(&u, &x);
            let full = u.to_matrix() * x.to_matrix() - x.to_matrix() * u.to_matrix();
            prop_assert!((b.to_matrix() - full).norm() <= 1e-12 * (1.0 + full.norm()));
            let m = b.to_matrix();
            prop_assert_eq!(m, m.transpose());
        }

        #[test]
        fn trace_inner_is_symmetric_bilinear(a in entries(), b in entries(), t in -3.0f64..3.0) {
            prop_assert_eq!(trace_inner(&a, &b), trace_inner(&b, &a));
            prop_assert_eq!(trace_inner(&a, &a), invariants(&a).u1);
            let lhs = trace_inner(&(t * a + b), &b);
            let rhs = t * trace_inner(&a, &b) + trace_inner(&b, &b);
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
        }
    }
}
