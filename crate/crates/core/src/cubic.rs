//! Real roots of polynomials of degree at most three, and the cubic
//! discriminant used to detect repeated eigenvalues.

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootStructure {
    ThreeDistinct,
    Repeated,
    OneReal,
}

/// Discriminant of `c3 x^3 + c2 x^2 + c1 x + c0`.
pub fn discriminant(c: [f64; 4]) -> f64 {
    let [d, cc, b, a] = c;
    b * b * cc * cc - 4.0 * a * cc * cc * cc - 4.0 * b * b * b * d - 27.0 * a * a * d * d
        + 18.0 * a * b * cc * d
}

/// Classifies the roots of `c`, treating `|disc| <= tol * scale` as zero, where
/// `scale` is the discriminant's natural magnitude `max|c_i|^4`.
pub fn classify(c: [f64; 4], tol: f64) -> RootStructure {
    let m = c.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let disc = discriminant(c);
    if disc.abs() <= tol * m.powi(4) {
        RootStructure::Repeated
    } else if disc > 0.0 {
        RootStructure::ThreeDistinct
    } else {
        RootStructure::OneReal
    }
}

fn eval(c: &[f64; 4], x: f64) -> f64 {
    ((c[3] * x + c[2]) * x + c[1]) * x + c[0]
}

fn eval_deriv(c: &[f64; 4], x: f64) -> f64 {
    (3.0 * c[3] * x + 2.0 * c[2]) * x + c[1]
}

/// Real roots of `c0 + c1 x + c2 x^2 + c3 x^3`, ascending, with multiplicity
/// for double roots found by the trigonometric branch. A vanishing leading
/// coefficient (relative to the others) lowers the degree. The identically
/// zero polynomial yields no roots.
pub fn real_roots(c: [f64; 4]) -> Vec<f64> {
    let m = c.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if m == 0.0 || !m.is_finite() {
        return Vec::new();
    }
    let n = [c[0] / m, c[1] / m, c[2] / m, c[3] / m];
    let mut roots = if n[3].abs() <= 1e-14 {
        quadratic_roots(n[0], n[1], n[2])
    } else {
        cubic_roots(n[2] / n[3], n[1] / n[3], n[0] / n[3])
    };
    for r in roots.iter_mut() {
        *r = polish(&n, *r);
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn polish(c: &[f64; 4], mut x: f64) -> f64 {
    let mut fx = eval(c, x);
    for _ in 0..4 {
        let d = eval_deriv(c, x);
        if d == 0.0 || fx == 0.0 {
            break;
        }
        let nx = x - fx / d;
        let nf = eval(c, nx);
        if !(nf.abs() < fx.abs()) {
            break;
        }
        x = nx;
        fx = nf;
    }
    x
}

fn quadratic_roots(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let m = c0.abs().max(c1.abs()).max(c2.abs());
    if c2.abs() <= 1e-14 * m {
        if c1.abs() <= 1e-14 * m {
            return Vec::new();
        }
        return vec![-c0 / c1];
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    let q = -0.5 * (c1 + c1.signum() * s);
    if q == 0.0 {
        return vec![0.0, 0.0];
    }
    vec![q / c2, c0 / q]
}

/// Roots of the monic cubic `x^3 + b x^2 + c x + d`.
fn cubic_roots(b: f64, c: f64, d: f64) -> Vec<f64> {
    let shift = b / 3.0;
    let p = c - b * shift;
    let q = 2.0 * shift * shift * shift - shift * c + d;
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    if p < 0.0 && disc >= 0.0 {
        let r = (-p / 3.0).sqrt();
        let arg = (-q / (2.0 * r * r * r)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| 2.0 * r * (phi - 2.0 * PI * k as f64 / 3.0).cos() - shift)
            .collect()
    } else {
        let h = (0.25 * q * q + p * p * p / 27.0).max(0.0).sqrt();
        let t = (-0.5 * q + h).cbrt() + (-0.5 * q - h).cbrt();
        vec![t - shift]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_traceless, rng_from_seed};
    use crate::symmat::{char_poly, eigen_sym, invariants};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn three_distinct() {
        // (x-1)(x-2)(x+3) = x^3 - 7x + 6
        let r = real_roots([6.0, -7.0, 0.0, 1.0]);
        assert!(close(&r, &[-3.0, 1.0, 2.0], 1e-13), "{r:?}");
        assert_eq!(classify([6.0, -7.0, 0.0, 1.0], 1e-12), RootStructure::ThreeDistinct);
    }

    #[test]
    fn one_real() {
        // (x-2)(x^2+1)
        let r = real_roots([-2.0, 1.0, -2.0, 1.0]);
        assert!(close(&r, &[2.0], 1e-13), "{r:?}");
        assert_eq!(classify([-2.0, 1.0, -2.0, 1.0], 1e-12), RootStructure::OneReal);
    }

    #[test]
    fn repeated() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let c = [2.0, -3.0, 0.0, 1.0];
        assert_eq!(classify(c, 1e-12), RootStructure::Repeated);
        let r = real_roots(c);
        assert!((r[0] + 2.0).abs() < 1e-12);
        assert!(r[1..].iter().all(|x| (x - 1.0).abs() < 1e-7), "{r:?}");
    }

    #[test]
    fn degenerate_leading_coefficients() {
        assert!(close(&real_roots([-4.0, 0.0, 1.0, 0.0]), &[-2.0, 2.0], 1e-14));
        assert!(close(&real_roots([3.0, 1.5, 0.0, 0.0]), &[-2.0], 1e-14));
        assert!(real_roots([1.0, 0.0, 1.0, 0.0]).is_empty());
        assert!(real_roots([0.0; 4]).is_empty());
        // tiny leading term still finds the large root
        let r = real_roots([-1.0, 0.0, 1.0, 1e-9]);
        assert!(r.iter().any(|x| (x + 1e9).abs() < 1e-3 * 1e9));
    }

    /// The repeated-root criterion `u1^3 = 54 u2^2` agrees with the
    /// eigensolver's spectral gap on sampled matrices.
    #[test]
    fn discriminant_matches_spectral_gap() {
        let mut rng = rng_from_seed(5);
        for _ in 0..1000 {
            let x = random_traceless(&mut rng);
            let inv = invariants(&x);
            let cp = char_poly(&x);
            let disc = discriminant([cp.q, cp.p, 0.0, -1.0]);
            assert!((disc - 0.5 * (inv.u1.powi(3) - 54.0 * inv.u2 * inv.u2)).abs() <= 1e-9 * (1.0 + inv.u1.powi(3)));
            let e = eigen_sym(&x);
            let [a, b, c] = e.values;
            let vandermonde = ((a - b) * (b - c) * (a - c)).powi(2);
            assert!((disc - vandermonde).abs() <= 1e-9 * (1.0 + inv.u1.powi(3)));
        }
        // a matrix with two equal eigenvalues sits on the discriminant locus
        for (x, y) in [(1.0, 1.0), (0.3, -0.6), (-2.0, 1.0)] {
            let d = crate::symmat::SymTraceless3::diag(x, y);
            let inv = invariants(&d);
            assert!((inv.u1.powi(3) - 54.0 * inv.u2 * inv.u2).abs() < 1e-12);
        }
    }
}
