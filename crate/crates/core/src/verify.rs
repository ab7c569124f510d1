//! Property suites behind `normform verify`. The eigensolver is a parameter
//! so a deliberately broken one can be shown to fail.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::cohomology::{close_group, coverage_certificate, gamma, h1, kernel_trivial};
use crate::cubic::discriminant;
use crate::generic::{generic_canonical_search, generic_rank_test, genericity_det_poly};
use crate::grassmann::{f_max, member_x, Subspace2, C_MAX, DEFAULT_MEMBER_TOL};
use crate::normal_form::{normal_form_with, EigenSolver};
use crate::orbit::{
    build_w, canonical_y, decompose, lemma_x_residuals, m1, m2, n0_act, n0_group, s0, stabilizer_in_n0, N0Element,
    ShapedX, YCoord,
};
use crate::sampling::{random_rotation, random_traceless, random_unit3, rng_from_seed, SampleRng};
use crate::symmat::{char_poly, conjugate, eigen_sym, invariants, Rotation3, SymEigen, SymTraceless3};
use crate::tolerance::recon_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Invariants,
    NormalForm,
    Grassmann,
    Orbit,
    Generic,
    Cohomology,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Invariants,
        Suite::NormalForm,
        Suite::Grassmann,
        Suite::Orbit,
        Suite::Generic,
        Suite::Cohomology,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Invariants => "invariants",
            Suite::NormalForm => "normal-form",
            Suite::Grassmann => "grassmann",
            Suite::Orbit => "orbit",
            Suite::Generic => "generic",
            Suite::Cohomology => "cohomology",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub solver: EigenSolver,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            solver: eigen_sym,
            samples: 1000,
            seed: 2024,
        }
    }
}

/// Returns ascending eigenvalues with matching rows; used as a mutation.
pub fn swapped_sort_solver(x: &SymTraceless3) -> SymEigen {
    let e = eigen_sym(x);
    let m = e.rotation.matrix();
    let rows = nalgebra::Matrix3::from_rows(&[m.row(2).into_owned(), m.row(1).into_owned(), m.row(0).into_owned()]);
    // row swap flips the determinant; negate a row to stay in SO(3)
    let rows = nalgebra::Matrix3::from_rows(&[rows.row(0).into_owned(), -rows.row(1), rows.row(2).into_owned()]);
    SymEigen {
        values: [e.values[2], e.values[1], e.values[0]],
        rotation: Rotation3::from_matrix_unchecked(rows),
    }
}

type Outcome = std::result::Result<(), String>;

struct Runner {
    suite: &'static str,
    out: Vec<CheckResult>,
}

impl Runner {
    fn check(&mut self, name: &'static str, f: impl FnOnce() -> Outcome) {
        let r = f();
        self.out.push(CheckResult {
            suite: self.suite,
            name,
            passed: r.is_ok(),
            detail: r.err().unwrap_or_default(),
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckResult> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|s| run(*s, cfg)).collect();
    }
    let mut r = Runner {
        suite: suite.name(),
        out: Vec::new(),
    };
    let mut rng = rng_from_seed(cfg.seed);
    match suite {
        Suite::Invariants => invariants_suite(&mut r, &mut rng, cfg),
        Suite::NormalForm => normal_form_suite(&mut r, &mut rng, cfg),
        Suite::Grassmann => grassmann_suite(&mut r, &mut rng, cfg),
        Suite::Orbit => orbit_suite(&mut r, &mut rng, cfg),
        Suite::Generic => generic_suite(&mut r, &mut rng, cfg),
        Suite::Cohomology => cohomology_suite(&mut r, &mut rng, cfg),
        Suite::All => unreachable!(),
    }
    r.out
}

fn invariants_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    r.check("x0_golden", || {
        let i = invariants(&SymTraceless3::x0());
        ensure(i.u1 == 6.0 && i.u2 == -2.0, || format!("{i:?}"))
    });
    let samples: Vec<(SymTraceless3, Rotation3)> =
        (0..cfg.samples).map(|_| (random_traceless(rng), random_rotation(rng))).collect();
    r.check("conjugation_invariance", || {
        for (a, k) in &samples {
            let (i, j) = (invariants(a), invariants(&conjugate(k, a)));
            let s = 1e-9 * (1.0 + i.u1.powf(1.5));
            ensure((i.u1 - j.u1).abs() <= s && (i.u2 - j.u2).abs() <= s, || format!("{i:?} vs {j:?}"))?;
        }
        Ok(())
    });
    r.check("spectrum_sorted_roots", || {
        for (a, _) in &samples {
            let e = (cfg.solver)(a);
            let [n1, n2, n3] = e.values;
            ensure(n1 >= n2 && n2 >= n3, || format!("unsorted {:?}", e.values))?;
            let cp = char_poly(a);
            let scale = 1.0 + invariants(a).u1.powf(1.5);
            for v in e.values {
                ensure(cp.eval(v).abs() <= 1e-9 * scale, || format!("p({v}) = {}", cp.eval(v)))?;
            }
        }
        Ok(())
    });
    r.check("eigen_reconstruction", || {
        for (a, _) in &samples {
            let e = (cfg.solver)(a);
            let d = conjugate(&e.rotation, a);
            let target = SymTraceless3::diag(e.values[0], e.values[1]);
            let err = d.max_abs_diff(&target);
            ensure(err <= recon_bound(a.frobenius_norm()), || format!("error {err}"))?;
        }
        Ok(())
    });
}

fn normal_form_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    r.check("x0_golden", || {
        let nf = normal_form_with(&SymTraceless3::x0(), cfg.solver).map_err(|e| e.to_string())?;
        ensure(
            (nf.mu + 1.0).abs() <= 1e-12 && (nf.lambda - 2f64.sqrt()).abs() <= 1e-12,
            || format!("mu {} lambda {}", nf.mu, nf.lambda),
        )
    });
    let samples: Vec<SymTraceless3> = (0..cfg.samples).map(|_| random_traceless(rng)).collect();
    r.check("reconstruction", || {
        for a in &samples {
            let nf = normal_form_with(a, cfg.solver).map_err(|e| e.to_string())?;
            let err = nf.reconstruction_error(a);
            ensure(err <= recon_bound(a.frobenius_norm()), || format!("error {err}"))?;
        }
        Ok(())
    });
    r.check("spectrum_preserved", || {
        for a in &samples {
            let nf = normal_form_with(a, cfg.solver).map_err(|e| e.to_string())?;
            let (sa, sx) = (eigen_sym(a).values, eigen_sym(&nf.target()).values);
            for i in 0..3 {
                ensure((sa[i] - sx[i]).abs() <= 1e-9, || format!("{sa:?} vs {sx:?}"))?;
            }
        }
        Ok(())
    });
    r.check("corollary_coefficients", || {
        for a in &samples {
            let nf = normal_form_with(a, cfg.solver).map_err(|e| e.to_string())?;
            ensure(nf.coeff_a == nf.mu && nf.coeff_b == 2.0 * nf.lambda && nf.lambda >= 0.0, || {
                format!("{nf:?}")
            })?;
        }
        Ok(())
    });
}

fn random_plane(rng: &mut SampleRng) -> Subspace2 {
    loop {
        if let Ok(w) = Subspace2::from_generators(&random_traceless(rng), &random_traceless(rng)) {
            return w;
        }
    }
}

fn grassmann_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    let planes: Vec<(Subspace2, Rotation3)> = (0..cfg.samples).map(|_| (random_plane(rng), random_rotation(rng))).collect();
    r.check("upper_bound", || {
        for (w, _) in &planes {
            let f = f_max(w);
            ensure(f <= C_MAX + 1e-9, || format!("f = {f}"))?;
        }
        Ok(())
    });
    r.check("k_invariance", || {
        for (w, k) in &planes {
            let (a, b) = (f_max(w), f_max(&w.conjugated(k)));
            ensure((a - b).abs() <= 1e-10, || format!("{a} vs {b}"))?;
        }
        Ok(())
    });
    let mats: Vec<SymTraceless3> = (0..cfg.samples).map(|_| random_traceless(rng)).collect();
    r.check("discriminant_identity", || {
        for x in &mats {
            let inv = invariants(x);
            let cp = char_poly(x);
            let disc = discriminant([cp.q, cp.p, 0.0, -1.0]);
            let [a, b, c] = (cfg.solver)(x).values;
            let vander = ((a - b) * (b - c) * (a - c)).powi(2);
            let scale = 1e-9 * (1.0 + inv.u1.powi(3));
            let closed = 0.5 * (inv.u1.powi(3) - 54.0 * inv.u2 * inv.u2);
            ensure((disc - closed).abs() <= scale && (disc - vander).abs() <= scale, || {
                format!("disc {disc} closed {closed} vandermonde {vander}")
            })?;
        }
        Ok(())
    });
    r.check("diagonal_plane_max", || {
        let w = Subspace2::from_generators(&SymTraceless3::diag(1.0, -1.0), &SymTraceless3::x0())
            .map_err(|e| e.to_string())?;
        let f = f_max(&w);
        ensure((f - C_MAX).abs() <= 1e-10, || format!("f = {f}"))
    });
    r.check("classification_goldens", || {
        let thm1 = Subspace2::from_generators(&SymTraceless3::diag(1.0, -1.0), &SymTraceless3::new(0.0, 0.0, 0.0, 1.0, 0.0))
            .map_err(|e| e.to_string())?;
        let rem = remark_a();
        let ex = example_41();
        let (a, b, c) = (
            member_x(&thm1, DEFAULT_MEMBER_TOL),
            member_x(&rem, DEFAULT_MEMBER_TOL),
            member_x(&ex, DEFAULT_MEMBER_TOL),
        );
        ensure(a.in_x && !b.in_x && b.f_value <= 1e-12 && !c.in_x, || format!("{a:?} {b:?} {c:?}"))
    });
}

fn remark_a() -> Subspace2 {
    Subspace2::from_generators(&SymTraceless3::diag(0.0, 1.0), &SymTraceless3::new(0.0, 0.0, 0.0, 0.0, 1.0))
        .expect("independent")
}

fn example_41() -> Subspace2 {
    Subspace2::from_generators(&SymTraceless3::diag(0.0, 1.0), &SymTraceless3::new(1.0, 0.0, 0.0, 0.0, 1.6))
        .expect("independent")
}

fn random_y2(rng: &mut SampleRng) -> YCoord {
    loop {
        let v = random_unit3(rng);
        if let Some(y) = YCoord::new(v[0], v[1], v[2]) {
            let (a, d, e) = y.tuple();
            if a.abs() > 0.05 && d.abs() > 0.05 && e.abs() > 0.05 && (d.abs() - e.abs()).abs() > 0.05 {
                return y;
            }
        }
    }
}

fn orbit_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    r.check("n0_relations", || {
        let g = n0_group();
        let id = Rotation3::identity();
        ensure(
            g.order() == 8
                && g.check_axioms()
                && (s0() * s0()).distance(&m1()) <= 1e-15
                && (s0() * s0() * s0() * s0()).distance(&id) <= 1e-15
                && (m2() * m2()).distance(&id) <= 1e-15
                && (m2() * s0()).distance(&gamma()) <= 1e-15,
            || "presentation relations fail".into(),
        )
    });
    let ys: Vec<(YCoord, Rotation3)> = (0..cfg.samples / 5).map(|_| (random_y2(rng), random_rotation(rng))).collect();
    r.check("action_soundness", || {
        for (y, k) in &ys {
            for g in N0Element::all() {
                let d = n0_act(&g, y).matrix().max_abs_diff(&conjugate(&g.rotation(), &y.matrix()));
                ensure(d <= 1e-12, || format!("action mismatch {d}"))?;
            }
            let p = build_w(k, y).projector_distance(&build_w(&Rotation3::identity(), y).conjugated(k));
            ensure(p <= 1e-12, || format!("equivariance {p}"))?;
        }
        Ok(())
    });
    r.check("decompose_round_trip", || {
        for (y, k) in &ys {
            let d = decompose(&build_w(k, y)).map_err(|e| e.to_string())?;
            ensure(d.rebuild_error <= 1e-8 && d.y.max_abs_diff(&canonical_y(y)) <= 1e-7, || {
                format!("rebuild {} y {:?} vs {:?}", d.rebuild_error, d.y, canonical_y(y))
            })?;
        }
        Ok(())
    });
    r.check("lemma_x_residuals", || {
        for _ in 0..cfg.samples / 5 {
            let v = random_unit3(rng);
            let x = SymTraceless3::new(
                1.0 - 3.0 * v[0] * v[0],
                1.0 - 3.0 * v[1] * v[1],
                -3.0 * v[0] * v[1],
                -3.0 * v[0] * v[2],
                -3.0 * v[1] * v[2],
            );
            let (s, _) = ShapedX::shape(&x);
            let res = lemma_x_residuals(&s);
            ensure(res.iter().all(|v| v.abs() <= 1e-8) && (s.delta * s.epsilon).abs() <= 1e-6, || {
                format!("{s:?} {res:?}")
            })?;
        }
        Ok(())
    });
    r.check("stabilizers", || {
        let one = |a, d, e| stabilizer_in_n0(&YCoord::new(a, d, e).expect("nonzero")).map(|g| g.order());
        ensure(
            one(1.0, 1.0, 2.0) == Ok(1) && one(1.0, 1.0, 1.0) == Ok(2) && one(1.0, 1.0, -1.0) == Ok(2),
            || "unexpected stabilizer orders".into(),
        )
    });
}

fn generic_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    r.check("goldens", || {
        ensure(
            !generic_rank_test(&remark_a()).is_generic && generic_rank_test(&example_41()).is_generic,
            || "Remark (a) / epsilon = 1.6 verdicts".into(),
        )
    });
    r.check("members_generic", || {
        for _ in 0..cfg.samples / 5 {
            let v = random_unit3(rng);
            let y = YCoord::new(v[0], v[1], v[2]).ok_or("zero y")?;
            let w = build_w(&random_rotation(rng), &y);
            ensure(generic_rank_test(&w).is_generic, || format!("{y:?}"))?;
        }
        Ok(())
    });
    r.check("method_agreement", || {
        for i in 0..cfg.samples / 5 {
            let (l, m): (f64, f64) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            let mut y = random_traceless(rng);
            if i % 2 == 1 {
                let t: f64 = rng.random_range(-1.0..1.0);
                y.a11 = t * l;
                y.a22 = t * m;
            }
            let Ok(w) = Subspace2::from_generators(&SymTraceless3::diag(l, m), &y) else {
                continue;
            };
            let (a, b) = (generic_rank_test(&w), generic_canonical_search(&w));
            ensure(a.is_generic == b.is_generic, || format!("{l} {m} {y:?}"))?;
        }
        Ok(())
    });
    r.check("det_poly_nonzero", || {
        for _ in 0..cfg.samples / 5 {
            let v = random_unit3(rng);
            let q = genericity_det_poly(v[0], v[1], v[2]);
            ensure(q.iter().any(|c| c.abs() > 1e-10), || format!("{v:?} {q:?}"))?;
            let q0 = genericity_det_poly(0.0, v[1], v[2])[2];
            let expect = 2.0 * (v[1] * v[1] + v[2] * v[2]).powi(2);
            ensure((q0 - expect).abs() <= 1e-8 * (1.0 + expect), || format!("q0 {q0} vs {expect}"))?;
        }
        Ok(())
    });
}

fn cohomology_suite(r: &mut Runner, rng: &mut SampleRng, cfg: &VerifyConfig) {
    r.check("group_orders", || {
        let o = |g: &[Rotation3]| close_group(g).map(|x| x.order()).map_err(|e| e.to_string());
        ensure(
            o(&[s0(), m2()])? == 8 && o(&[m1(), m2()])? == 4 && o(&[Rotation3::identity()])? == 1,
            || "closure orders".into(),
        )
    });
    r.check("h1_and_kernel", || {
        let two = close_group(&[gamma()]).map_err(|e| e.to_string())?;
        let n0 = n0_group();
        ensure(h1(&two).size() == 2 && kernel_trivial(&two) && kernel_trivial(&n0), || {
            "h1 / kernel decisions".into()
        })
    });
    r.check("covers_matches_membership", || {
        let mut planes = vec![remark_a()];
        for _ in 0..cfg.samples / 10 {
            planes.push(build_w(&random_rotation(rng), &random_y2(rng)));
        }
        for y in [(1.0, 1.0, 1.0), (1.0, 1.0, -1.0), (1.0, 1.0, 2.0)] {
            planes.push(build_w(&Rotation3::identity(), &YCoord::new(y.0, y.1, y.2).ok_or("zero y")?));
        }
        for w in &planes {
            let c = coverage_certificate(w).map_err(|e| e.to_string())?;
            let m = member_x(w, DEFAULT_MEMBER_TOL);
            ensure(c.covers == m.in_x, || format!("covers {} in_X {}", c.covers, m.in_x))?;
        }
        Ok(())
    });
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}
