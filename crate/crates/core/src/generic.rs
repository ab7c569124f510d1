//! Genericity of 2-planes: `L` is generic when `[k, Z] + L = p` for some
//! `Z in L`, i.e. the orbit map `K x L -> p` is submersive somewhere.

use std::f64::consts::PI;

use nalgebra::SMatrix;
use serde::{Deserialize, Serialize};

use crate::grassmann::Subspace2;
use crate::orbit::YCoord;
use crate::symmat::{bracket_k_p, conjugate, eigen_sym, Skew3, SymTraceless3};

pub const RANK_THRESHOLD: f64 = 1e-10;
pub const LEMMA_TOL: f64 = 1e-9;
const GRID: usize = 33;

type Mat5 = SMatrix<f64, 5, 5>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericityMethod {
    RankSearch,
    DetPoly,
    CanonicalLemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub is_generic: bool,
    pub witness_z: Option<SymTraceless3>,
    pub method: GenericityMethod,
    /// `(q2, q1, q0)` for the det-poly method.
    pub det_poly_coeffs: Option<[f64; 3]>,
    /// Best score found: Hadamard ratio for the rank search, `|alpha mu - beta lambda|`
    /// for the lemma, `max |q_i|` for the polynomial.
    pub score: f64,
}

/// `|det| / prod(row norms)` of the rows `[X_i, Z]`, `B1`, `B2` in
/// trace-orthonormal coordinates; 0 when a row vanishes.
pub fn rank_score_at(l: &Subspace2, z: &SymTraceless3) -> f64 {
    let (b1, b2) = l.basis();
    let mut rows = [[0.0; 5]; 5];
    for (i, u) in Skew3::BASIS.iter().enumerate() {
        rows[i] = bracket_k_p(u, z).coords();
    }
    rows[3] = b1.coords();
    rows[4] = b2.coords();
    let mut norms = 1.0;
    for r in &rows {
        let n = r.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n == 0.0 {
            return 0.0;
        }
        norms *= n;
    }
    let m = Mat5::from_fn(|i, j| rows[i][j]);
    m.determinant().abs() / norms
}

/// Grid search of `Z` over the half circle (`Z` and `-Z` give the same span),
/// then golden-section refinement around the best grid angle.
pub fn generic_rank_test(l: &Subspace2) -> GenericityReport {
    let score = |t: f64| rank_score_at(l, &l.point(t));
    let h = PI / GRID as f64;
    let (mut best_t, mut best) = (0.0, f64::NEG_INFINITY);
    for j in 0..GRID {
        let t = h * j as f64;
        let s = score(t);
        if s > best {
            best = s;
            best_t = t;
        }
    }
    let (t, s) = golden_max(&score, best_t - h, best_t + h, 40);
    if s > best {
        best = s;
        best_t = t;
    }
    let is_generic = best > RANK_THRESHOLD;
    GenericityReport {
        is_generic,
        witness_z: is_generic.then(|| l.point(best_t)),
        method: GenericityMethod::RankSearch,
        det_poly_coeffs: None,
        score: best,
    }
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// The 5x5 matrix with rows `[X_1,Z]`, `[X_2,Z]`, `[X_3,Z]`, `X_0`, `Y` for
/// `Z = Y_{alpha,delta,epsilon} + c X_0`, in the coordinates
/// `(a11, a12, a13, a22, a23)`.
pub fn genericity_matrix(alpha: f64, delta: f64, epsilon: f64, c: f64) -> Mat5 {
    let z = SymTraceless3::y_shape(alpha, delta, epsilon) + c * SymTraceless3::x0();
    let row = |x: SymTraceless3| [x.a11, x.a12, x.a13, x.a22, x.a23];
    let rows = [
        row(bracket_k_p(&Skew3::X1, &z)),
        row(bracket_k_p(&Skew3::X2, &z)),
        row(bracket_k_p(&Skew3::X3, &z)),
        row(SymTraceless3::x0()),
        row(SymTraceless3::y_shape(alpha, delta, epsilon)),
    ];
    Mat5::from_fn(|i, j| rows[i][j])
}

/// `(q2, q1, q0)` with `det = q2 c^2 + q1 c + q0`, by interpolation at
/// `c in {-s, 0, s}`.
pub fn genericity_det_poly(alpha: f64, delta: f64, epsilon: f64) -> [f64; 3] {
    let s = (alpha * alpha + delta * delta + epsilon * epsilon).sqrt().max(1.0);
    let d = |c: f64| genericity_matrix(alpha, delta, epsilon, c).determinant();
    let (dm, d0, dp) = (d(-s), d(0.0), d(s));
    [(dp + dm - 2.0 * d0) / (2.0 * s * s), (dp - dm) / (2.0 * s), d0]
}

/// Det-poly certificate for `W_Y`: generic iff the quadratic is nonzero.
pub fn det_poly_report(y: &YCoord) -> GenericityReport {
    let q = genericity_det_poly(y.alpha, y.delta, y.epsilon);
    let score = q.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let is_generic = score > RANK_THRESHOLD;
    let witness_z = is_generic.then(|| {
        let c = [-1.0, 0.0, 1.0]
            .into_iter()
            .max_by(|a: &f64, b: &f64| {
                let v = |c: f64| (q[0] * c * c + q[1] * c + q[2]).abs();
                v(*a).total_cmp(&v(*b))
            })
            .unwrap_or(0.0);
        y.matrix() + c * SymTraceless3::x0()
    });
    GenericityReport {
        is_generic,
        witness_z,
        method: GenericityMethod::DetPoly,
        det_poly_coeffs: Some(q),
        score,
    }
}

/// Lemma test for `L = span{diag(lambda, mu, -lambda-mu), y_full}`:
/// (i) two diagonal entries agree, or (ii) `alpha mu - beta lambda != 0`.
/// Sufficient for genericity; `generic_canonical_search` makes it exact.
pub fn generic_canonical_test(lambda: f64, mu: f64, y_full: &SymTraceless3) -> bool {
    let nu = -lambda - mu;
    let case_i = (lambda - mu).abs() <= LEMMA_TOL || (lambda - nu).abs() <= LEMMA_TOL || (mu - nu).abs() <= LEMMA_TOL;
    case_i || lemma_value(lambda, mu, y_full) > LEMMA_TOL
}

fn lemma_value(lambda: f64, mu: f64, y: &SymTraceless3) -> f64 {
    (y.a11 * mu - y.a22 * lambda).abs()
}

/// `L` is generic iff some `Z in L`, diagonalized, passes the lemma test
/// with the complementary direction as `Y`. Scans the same grid as the
/// rank search.
pub fn generic_canonical_search(l: &Subspace2) -> GenericityReport {
    let h = PI / GRID as f64;
    let mut best = (f64::NEG_INFINITY, SymTraceless3::ZERO);
    for j in 0..GRID {
        let t = h * j as f64;
        let z = l.point(t);
        let e = eigen_sym(&z);
        let [lambda, mu, _] = e.values;
        if e.min_gap() <= LEMMA_TOL {
            return GenericityReport {
                is_generic: true,
                witness_z: Some(z),
                method: GenericityMethod::CanonicalLemma,
                det_poly_coeffs: None,
                score: f64::INFINITY,
            };
        }
        let y = conjugate(&e.rotation, &l.point(t + 0.5 * PI));
        let v = lemma_value(lambda, mu, &y);
        if v > best.0 {
            best = (v, z);
        }
    }
    let is_generic = best.0 > LEMMA_TOL;
    GenericityReport {
        is_generic,
        witness_z: is_generic.then_some(best.1),
        method: GenericityMethod::CanonicalLemma,
        det_poly_coeffs: None,
        score: best.0,
    }
}
