//! Orbit geometry of `X`: every member is `k.W_Y` with
//! `W_Y = span{X_0, Y_{alpha,delta,epsilon}}`, and on `X'` the pair
//! `(k, [Y])` is unique up to the order-8 group `N_0 = <s_0, m_2>`.

use std::cmp::Ordering;

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::cohomology::{close_group, FiniteMatrixGroup};
use crate::error::{Error, Result};
use crate::grassmann::{member_x, Subspace2, DEFAULT_MEMBER_TOL};
use crate::symmat::{conjugate, eigen_sym, sym2_eigen, trace_inner, Rotation3, SymTraceless3};

/// Tolerance for the strata `Y'` and `Y''` on unit coordinates.
pub const STRATUM_TOL: f64 = 1e-9;
/// Projector tolerance for subspace equality.
pub const SUBSPACE_TOL: f64 = 1e-8;

/// Quarter-turn in the 1-2 plane.
pub fn s0() -> Rotation3 {
    Rotation3::from_matrix_unchecked(Matrix3::new(0.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0))
}

/// `m_1 = diag(-1, -1, 1) = s_0^2`.
pub fn m1() -> Rotation3 {
    Rotation3::from_matrix_unchecked(Matrix3::from_diagonal(&nalgebra::Vector3::new(-1.0, -1.0, 1.0)))
}

/// `m_2 = diag(1, -1, -1)`.
pub fn m2() -> Rotation3 {
    Rotation3::from_matrix_unchecked(Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, -1.0, -1.0)))
}

/// `M = {1, m_1, m_2, m_1 m_2}`.
pub fn m_group() -> FiniteMatrixGroup {
    close_group(&[m1(), m2()]).expect("M is finite")
}

pub fn n0_group() -> FiniteMatrixGroup {
    close_group(&[s0(), m2()]).expect("N0 is finite")
}

/// Projective coordinates `[alpha : delta : epsilon]`, stored at unit norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct YCoord {
    pub alpha: f64,
    pub delta: f64,
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    /// `Y''`: all coordinates nonzero and `delta != +-epsilon`.
    #[serde(rename = "Yprime2")]
    Yprime2,
    /// `Y' \ Y''`.
    #[serde(rename = "Yprime_boundary")]
    YprimeBoundary,
    #[serde(rename = "outside")]
    Outside,
}

impl Stratum {
    pub fn label(&self) -> &'static str {
        match self {
            Stratum::Yprime2 => "Yprime2",
            Stratum::YprimeBoundary => "Yprime_boundary",
            Stratum::Outside => "outside",
        }
    }

    pub fn in_yprime(&self) -> bool {
        !matches!(self, Stratum::Outside)
    }
}

impl YCoord {
    pub fn new(alpha: f64, delta: f64, epsilon: f64) -> Option<Self> {
        let n = (alpha * alpha + delta * delta + epsilon * epsilon).sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return None;
        }
        Some(Self {
            alpha: alpha / n,
            delta: delta / n,
            epsilon: epsilon / n,
        })
    }

    pub fn tuple(&self) -> (f64, f64, f64) {
        (self.alpha, self.delta, self.epsilon)
    }

    pub fn matrix(&self) -> SymTraceless3 {
        SymTraceless3::y_shape(self.alpha, self.delta, self.epsilon)
    }

    fn scaled(&self, s: f64) -> Self {
        Self {
            alpha: s * self.alpha,
            delta: s * self.delta,
            epsilon: s * self.epsilon,
        }
    }

    pub fn stratum(&self) -> Stratum {
        let t = STRATUM_TOL;
        let (a, d, e) = self.tuple();
        if a.abs() <= t || d.abs() <= t || e.abs() <= t {
            Stratum::Outside
        } else if (d - e).abs() <= t || (d + e).abs() <= t {
            Stratum::YprimeBoundary
        } else {
            Stratum::Yprime2
        }
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        (self.alpha - o.alpha)
            .abs()
            .max((self.delta - o.delta).abs())
            .max((self.epsilon - o.epsilon).abs())
    }
}

/// `s_0^s_power m_2^m2`; every element of `N_0` has exactly one such form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct N0Element {
    pub s_power: u8,
    pub m2: bool,
}

impl N0Element {
    pub const IDENTITY: Self = Self { s_power: 0, m2: false };
    pub const S0: Self = Self { s_power: 1, m2: false };
    pub const M2: Self = Self { s_power: 0, m2: true };

    /// In tie-break order: `s_0` power first, then the `m_2` flag.
    pub fn all() -> [Self; 8] {
        let mut out = [Self::IDENTITY; 8];
        for a in 0..4u8 {
            for b in 0..2u8 {
                out[(2 * a + b) as usize] = Self { s_power: a, m2: b == 1 };
            }
        }
        out
    }

    pub fn rotation(&self) -> Rotation3 {
        let mut r = Rotation3::identity();
        for _ in 0..self.s_power {
            r = r * s0();
        }
        if self.m2 {
            r = r * m2();
        }
        r
    }

    /// `m_2 s_0 m_2 = s_0^-1` gives `(s^a m^b)(s^c m^d) = s^(a +- c) m^(b+d)`.
    pub fn compose(&self, o: &Self) -> Self {
        let c = if self.m2 { 4 - o.s_power } else { o.s_power };
        Self {
            s_power: (self.s_power + c) % 4,
            m2: self.m2 ^ o.m2,
        }
    }

    pub fn inverse(&self) -> Self {
        if self.m2 {
            *self
        } else {
            Self {
                s_power: (4 - self.s_power) % 4,
                m2: false,
            }
        }
    }
}

/// `g.Y = g Y g^-1` in coordinates: `m_2.(a,d,e) = (a,-d,e)` and
/// `s_0.(a,d,e) = (-a,e,-d)`.
pub fn n0_act(g: &N0Element, y: &YCoord) -> YCoord {
    let (mut a, mut d, mut e) = y.tuple();
    if g.m2 {
        d = -d;
    }
    for _ in 0..g.s_power {
        (a, d, e) = (-a, e, -d);
    }
    YCoord {
        alpha: a,
        delta: d,
        epsilon: e,
    }
}

fn lex(a: &YCoord, b: &YCoord) -> Ordering {
    a.alpha
        .total_cmp(&b.alpha)
        .then(a.delta.total_cmp(&b.delta))
        .then(a.epsilon.total_cmp(&b.epsilon))
}

/// Lexicographic maximum of `{+-g.y}` with the witness: `canonical = sign * g.y`.
pub fn canonical_y_with_witness(y: &YCoord) -> (YCoord, N0Element, f64) {
    let mut best = (*y, N0Element::IDENTITY, 1.0);
    for g in N0Element::all() {
        let gy = n0_act(&g, y);
        for sign in [1.0, -1.0] {
            let cand = gy.scaled(sign);
            if lex(&cand, &best.0) == Ordering::Greater {
                best = (cand, g, sign);
            }
        }
    }
    best
}

pub fn canonical_y(y: &YCoord) -> YCoord {
    canonical_y_with_witness(y).0
}

/// `k.W_Y = span{k.X_0, k.Y}`.
pub fn build_w(k: &Rotation3, y: &YCoord) -> Subspace2 {
    Subspace2::from_generators(&conjugate(k, &SymTraceless3::x0()), &conjugate(k, &y.matrix()))
        .expect("X0 and Y are trace-orthogonal and nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitDecomposition {
    pub rotation: Rotation3,
    pub y: YCoord,
    pub stratum: Stratum,
    /// `sqrt6 X*`, the element of `W` conjugate to `X_0`.
    pub certificate: SymTraceless3,
    /// Projector distance between `build_w(rotation, y)` and the input.
    pub rebuild_error: f64,
}

pub fn decompose(w: &Subspace2) -> Result<OrbitDecomposition> {
    decompose_with_tol(w, DEFAULT_MEMBER_TOL)
}

/// Inverse of `(k, [Y]) -> k.W_Y`.
pub fn decompose_with_tol(w: &Subspace2, tol: f64) -> Result<OrbitDecomposition> {
    let report = member_x(w, tol);
    let cert = match (report.in_x, report.certificate_x) {
        (true, Some(c)) => 6f64.sqrt() * c,
        _ => {
            return Err(Error::NotInX {
                f_value: report.f_value,
                gap: crate::grassmann::C_MAX - report.f_value,
            })
        }
    };
    let eig = eigen_sym(&cert);
    let gap = eig.values[1] - eig.values[2];
    if !(gap >= 1e-8) {
        return Err(Error::DegenerateCertificate(gap));
    }
    let k1 = eig.rotation;
    let x0 = SymTraceless3::x0();
    let (c1, c2) = w.conjugated(&k1).basis();
    let (p, q) = (trace_inner(&x0, &c1), trace_inner(&x0, &c2));
    let b = -q * c1 + p * c2;
    let b = (1.0 / b.frobenius_norm()) * b;
    // rows of t are the eigenvectors of the upper 2x2 block, larger first
    let (_, _, (c, s)) = sym2_eigen(b.a11, b.a12, b.a22);
    let t = Rotation3::from_matrix_unchecked(Matrix3::new(c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0));
    let yb = conjugate(&t, &b);
    let raw = YCoord::new(yb.a11, yb.a13, yb.a23).ok_or(Error::DegenerateCertificate(0.0))?;
    let (y, g, _) = canonical_y_with_witness(&raw);
    // W = k_raw.W_raw and W_raw = g^-1.W_y
    let rotation = (t * k1).inverse() * g.rotation().inverse();
    let rebuild_error = build_w(&rotation, &y).projector_distance(w);
    Ok(OrbitDecomposition {
        rotation,
        y,
        stratum: y.stratum(),
        certificate: cert,
        rebuild_error,
    })
}

/// `(lambda, 0, delta; 0, mu, epsilon; delta, epsilon, -(lambda+mu))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapedX {
    pub lambda: f64,
    pub mu: f64,
    pub delta: f64,
    pub epsilon: f64,
}

impl ShapedX {
    pub fn matrix(&self) -> SymTraceless3 {
        SymTraceless3::new(self.lambda, self.mu, 0.0, self.delta, self.epsilon)
    }

    /// Kills the 1-2 entry with a torus rotation `t`; returns `t.x` in shape.
    pub fn shape(x: &SymTraceless3) -> (Self, Rotation3) {
        let (_, _, (c, s)) = sym2_eigen(x.a11, x.a12, x.a22);
        let t = Rotation3::from_matrix_unchecked(Matrix3::new(c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0));
        let y = conjugate(&t, x);
        (
            Self {
                lambda: y.a11,
                mu: y.a22,
                delta: y.a13,
                epsilon: y.a23,
            },
            t,
        )
    }
}

/// Residuals of `eps^2 (lambda - mu) = (mu + 2)(mu - 1)^2` and
/// `delta^2 (mu - lambda) = (lambda + 2)(lambda - 1)^2`, which hold when the
/// invariants are `(6, -2)`.
pub fn lemma_x_residuals(x: &ShapedX) -> [f64; 2] {
    let ShapedX {
        lambda: l,
        mu: m,
        delta: d,
        epsilon: e,
    } = *x;
    [
        e * e * (l - m) - (m + 2.0) * (m - 1.0) * (m - 1.0),
        d * d * (m - l) - (l + 2.0) * (l - 1.0) * (l - 1.0),
    ]
}

/// Elements of `N_0` fixing `W_y`.
pub fn stabilizer_elements_in_n0(y: &YCoord) -> Result<Vec<N0Element>> {
    if !y.stratum().in_yprime() {
        return Err(Error::OutsideYprime);
    }
    let base = build_w(&Rotation3::identity(), y);
    Ok(N0Element::all()
        .into_iter()
        .filter(|g| build_w(&g.rotation(), y).projector_distance(&base) <= SUBSPACE_TOL)
        .collect())
}

pub fn stabilizer_in_n0(y: &YCoord) -> Result<FiniteMatrixGroup> {
    let gens: Vec<Rotation3> = stabilizer_elements_in_n0(y)?.iter().map(|g| g.rotation()).collect();
    close_group(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::gamma;
    use crate::grassmann::member_x;
    use crate::sampling::{random_rotation, rng_from_seed, SampleRng};
    use crate::symmat::invariants;
    use rand::Rng;

    fn random_y2(rng: &mut SampleRng) -> YCoord {
        loop {
            let y = YCoord::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            )
            .unwrap();
            let (a, d, e) = y.tuple();
            if a.abs() > 0.05 && d.abs() > 0.05 && e.abs() > 0.05 && (d.abs() - e.abs()).abs() > 0.05 {
                return y;
            }
        }
    }

    #[test]
    fn n0_relations() {
        let n0 = n0_group();
        assert_eq!(n0.order(), 8);
        assert!(n0.check_axioms());
        let s = s0();
        assert!((s * s).distance(&m1()) < 1e-15);
        assert!((s * s * s * s).distance(&Rotation3::identity()) < 1e-15);
        assert!((m2() * m2()).distance(&Rotation3::identity()) < 1e-15);
        assert!((m2() * s0()).distance(&gamma()) < 1e-15);
        // dihedral: m2 s0 m2 = s0^-1
        assert!((m2() * s0() * m2()).distance(&s0().inverse()) < 1e-15);
        for g in [s0(), m1(), m2()] {
            assert!(g.orthogonality_defect() < 1e-15);
            assert!((g.matrix().determinant() - 1.0).abs() < 1e-15);
        }
        assert_eq!(m_group().order(), 4);
    }

    #[test]
    fn element_algebra_matches_matrices() {
        let all = N0Element::all();
        let n0 = n0_group();
        for g in all {
            assert!(n0.contains(&g.rotation()));
            assert!((g.compose(&g.inverse())).rotation().distance(&Rotation3::identity()) < 1e-15);
            for h in all {
                let prod = g.rotation() * h.rotation();
                assert!(g.compose(&h).rotation().distance(&prod) < 1e-15);
            }
        }
        for (i, g) in all.iter().enumerate() {
            for h in &all[i + 1..] {
                assert!(g.rotation().distance(&h.rotation()) > 0.5);
            }
        }
    }

    #[test]
    fn action_is_conjugation() {
        let mut rng = rng_from_seed(10);
        for _ in 0..50 {
            let y = random_y2(&mut rng);
            for g in N0Element::all() {
                let lhs = n0_act(&g, &y).matrix();
                let rhs = conjugate(&g.rotation(), &y.matrix());
                assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
                assert_eq!(n0_act(&g, &y).stratum(), y.stratum());
                // k.W_Y = W_{k.Y}
                let a = build_w(&g.rotation(), &y);
                let b = build_w(&Rotation3::identity(), &n0_act(&g, &y));
                assert!(a.projector_distance(&b) < 1e-12);
            }
        }
    }

    #[test]
    fn action_examples() {
        let y = YCoord::new(1.0, 2.0, 3.0).unwrap();
        let (a, d, e) = y.tuple();
        assert_eq!(n0_act(&N0Element::IDENTITY, &y), y);
        assert_eq!(n0_act(&N0Element::M2, &y).tuple(), (a, -d, e));
        // true conjugation by s0; s0^-1 gives (-a, -e, d)
        assert_eq!(n0_act(&N0Element::S0, &y).tuple(), (-a, e, -d));
        assert_eq!(n0_act(&N0Element::S0.inverse(), &y).tuple(), (-a, -e, d));
    }

    #[test]
    fn canonical_representative() {
        let y = YCoord::new(1.0, 2.0, 3.0).unwrap();
        let c = canonical_y(&y);
        // oracle: all 16 images from matrix conjugation
        let mut images = Vec::new();
        for g in n0_group().elements() {
            let m = conjugate(g, &y.matrix());
            for s in [1.0, -1.0] {
                images.push((s * m.a11, s * m.a13, s * m.a23));
            }
        }
        let best = images
            .iter()
            .copied()
            .max_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)).then(p.2.total_cmp(&q.2)))
            .unwrap();
        assert!((c.alpha - best.0).abs() < 1e-15 && (c.delta - best.1).abs() < 1e-15);
        assert!((c.epsilon - best.2).abs() < 1e-15);
        let r = 14f64.sqrt();
        assert!(c.max_abs_diff(&YCoord { alpha: 1.0 / r, delta: 3.0 / r, epsilon: 2.0 / r }) < 1e-15);
        assert_eq!(canonical_y(&c), c);
        let (w, g, s) = canonical_y_with_witness(&y);
        assert_eq!(n0_act(&g, &y).scaled(s), w);
    }

    #[test]
    fn canonical_is_orbit_constant() {
        let mut rng = rng_from_seed(11);
        for _ in 0..100 {
            let y = random_y2(&mut rng);
            let c = canonical_y(&y);
            assert!(c.alpha > 0.0);
            for g in N0Element::all() {
                assert_eq!(canonical_y(&n0_act(&g, &y)), c);
                assert_eq!(canonical_y(&n0_act(&g, &y).scaled(-1.0)), c);
            }
        }
    }

    #[test]
    fn build_w_contains_x0_and_is_in_x() {
        let mut rng = rng_from_seed(12);
        for _ in 0..100 {
            let y = random_y2(&mut rng);
            let k = random_rotation(&mut rng);
            assert!(build_w(&Rotation3::identity(), &y).distance_to(&SymTraceless3::x0()) < 1e-12);
            let w = build_w(&k, &y);
            assert!(w.projector_distance(&build_w(&Rotation3::identity(), &y).conjugated(&k)) < 1e-12);
            assert!(member_x(&w, DEFAULT_MEMBER_TOL).in_x);
        }
    }

    #[test]
    fn decompose_round_trip() {
        let mut rng = rng_from_seed(13);
        for _ in 0..1000 {
            let y0 = random_y2(&mut rng);
            let k0 = random_rotation(&mut rng);
            let w = build_w(&k0, &y0);
            let d = decompose(&w).unwrap();
            assert!(d.rebuild_error <= SUBSPACE_TOL, "{}", d.rebuild_error);
            assert!(d.y.max_abs_diff(&canonical_y(&y0)) < 1e-7, "{:?} {:?}", d.y, canonical_y(&y0));
            assert_eq!(d.stratum, Stratum::Yprime2);
            assert!(d.rotation.orthogonality_defect() < 1e-12);
            let (sx, _) = ShapedX::shape(&d.certificate);
            for r in lemma_x_residuals(&sx) {
                assert!(r.abs() <= 1e-8, "{r}");
            }
        }
    }

    #[test]
    fn decompose_identity_frame() {
        let y0 = YCoord::new(1.0, 1.0, 2.0).unwrap();
        let d = decompose(&build_w(&Rotation3::identity(), &y0)).unwrap();
        assert_eq!(d.stratum, Stratum::Yprime2);
        assert!(d.y.max_abs_diff(&canonical_y(&y0)) < 1e-9);
        // k lies in N0 up to rounding
        assert!(n0_group().elements().iter().any(|g| g.distance(&d.rotation) < 1e-7));
    }

    #[test]
    fn decompose_labels_boundary_strata() {
        let mut rng = rng_from_seed(14);
        for y in [
            YCoord::new(1.0, 1.0, 1.0).unwrap(),
            YCoord::new(1.0, -0.5, 0.5).unwrap(),
            YCoord::new(1.0, 0.0, 0.7).unwrap(),
            YCoord::new(0.0, 0.3, 0.7).unwrap(),
        ] {
            let k = random_rotation(&mut rng);
            let d = decompose(&build_w(&k, &y)).unwrap();
            assert!(d.rebuild_error <= SUBSPACE_TOL);
            assert_eq!(d.stratum, y.stratum());
        }
    }

    #[test]
    fn decompose_rejects_non_members() {
        let w = Subspace2::from_generators(&SymTraceless3::diag(0.0, 1.0), &SymTraceless3::new(0.0, 0.0, 0.0, 0.0, 1.0))
            .unwrap();
        assert!(matches!(decompose(&w), Err(Error::NotInX { .. })));
    }

    #[test]
    fn injectivity_on_y2() {
        let mut rng = rng_from_seed(15);
        let mut checked = 0;
        while checked < 1000 {
            let a = canonical_y(&random_y2(&mut rng));
            let b = canonical_y(&random_y2(&mut rng));
            if a.max_abs_diff(&b) < 1e-3 {
                continue;
            }
            let pa = build_w(&Rotation3::identity(), &a);
            let pb = build_w(&Rotation3::identity(), &b);
            assert!(pa.projector_distance(&pb) > 1e-6);
            checked += 1;
        }
    }

    #[test]
    fn lemma_x_examples() {
        let r = lemma_x_residuals(&ShapedX { lambda: 1.0, mu: 1.0, delta: 0.0, epsilon: 0.0 });
        assert_eq!(r, [0.0, 0.0]);
        // elements I - 3vv^T of K.X0, torus-shaped: epsilon vanishes
        let mut rng = rng_from_seed(16);
        for _ in 0..200 {
            let v = crate::sampling::random_unit3(&mut rng);
            let x = SymTraceless3::new(
                1.0 - 3.0 * v[0] * v[0],
                1.0 - 3.0 * v[1] * v[1],
                -3.0 * v[0] * v[1],
                -3.0 * v[0] * v[2],
                -3.0 * v[1] * v[2],
            );
            let inv = invariants(&x);
            assert!((inv.u1 - 6.0).abs() < 1e-12 && (inv.u2 + 2.0).abs() < 1e-12);
            let (s, _) = ShapedX::shape(&x);
            for r in lemma_x_residuals(&s) {
                assert!(r.abs() <= 1e-10, "{r}");
            }
            assert!((s.delta * s.epsilon).abs() <= 1e-6);
        }
    }

    #[test]
    fn lemma_x_forces_a_zero() {
        // (6,-2) pins delta^2 and epsilon^2 as functions of (lambda, mu); on
        // the admissible square their product is never positive.
        let mut rng = rng_from_seed(17);
        for _ in 0..10_000 {
            let l: f64 = rng.random_range(-2.0..2.0);
            let m: f64 = rng.random_range(-2.0..2.0);
            if (l - m).abs() < 1e-6 {
                continue;
            }
            let e2 = (m + 2.0) * (m - 1.0) * (m - 1.0) / (l - m);
            let d2 = (l + 2.0) * (l - 1.0) * (l - 1.0) / (m - l);
            assert!(d2 * e2 <= 1e-12, "{l} {m}");
        }
    }

    #[test]
    fn stabilizers() {
        let y = YCoord::new(1.0, 1.0, 2.0).unwrap();
        assert_eq!(stabilizer_in_n0(&y).unwrap().order(), 1);
        let mut rng = rng_from_seed(18);
        for _ in 0..100 {
            assert_eq!(stabilizer_in_n0(&random_y2(&mut rng)).unwrap().order(), 1);
        }
        let plus = stabilizer_in_n0(&YCoord::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        let m2s0 = close_group(&[m2() * s0()]).unwrap();
        assert!(plus.same_elements(&m2s0));
        let minus = stabilizer_in_n0(&YCoord::new(1.0, 1.0, -1.0).unwrap()).unwrap();
        let s0m2 = close_group(&[s0() * m2()]).unwrap();
        assert!(minus.same_elements(&s0m2));
        assert_eq!(
            stabilizer_in_n0(&YCoord::new(1.0, 0.0, 1.0).unwrap()),
            Err(Error::OutsideYprime)
        );
    }

    #[test]
    fn stratum_labels() {
        assert_eq!(YCoord::new(1.0, 1.0, 2.0).unwrap().stratum(), Stratum::Yprime2);
        assert_eq!(YCoord::new(1.0, 1.0, -1.0).unwrap().stratum(), Stratum::YprimeBoundary);
        assert_eq!(YCoord::new(0.0, 1.0, 2.0).unwrap().stratum(), Stratum::Outside);
        assert!(YCoord::new(0.0, 0.0, 0.0).is_none());
        assert_eq!(serde_json::to_string(&Stratum::YprimeBoundary).unwrap(), "\"Yprime_boundary\"");
    }
}
