//! JSON documents and command reports. Floats are written in shortest
//! round-trip form and parsed exactly, so a report read back compares equal.

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::cohomology::CoverageCertificate;
use crate::error::Result;
use crate::generic::{GenericityMethod, GenericityReport};
use crate::grassmann::{MembershipReport, Subspace2};
use crate::normal_form::NormalFormResult;
use crate::orbit::{OrbitDecomposition, Stratum, YCoord};
use crate::symmat::{Rotation3, SymTraceless3};

pub type Rows = [[f64; 3]; 3];

pub fn rows_of(m: &Matrix3<f64>) -> Rows {
    let mut r = [[0.0; 3]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = m[(i, j)];
        }
    }
    r
}

pub fn matrix_of(r: &Rows) -> Matrix3<f64> {
    Matrix3::from_fn(|i, j| r[i][j])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub matrix: Rows,
}

impl MatrixDocument {
    /// Validates symmetry and trace within `tol`; with `project` the trace
    /// part is removed instead of rejected.
    pub fn to_sym(&self, tol: f64, project: bool) -> Result<SymTraceless3> {
        let m = matrix_of(&self.matrix);
        if project {
            SymTraceless3::from_matrix_projected(&m, tol)
        } else {
            SymTraceless3::from_matrix(&m, tol)
        }
    }

    pub fn from_sym(x: &SymTraceless3) -> Self {
        Self {
            matrix: rows_of(&x.to_matrix()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubspaceDocument {
    pub generators: [MatrixDocument; 2],
}

impl SubspaceDocument {
    pub fn to_subspace(&self, tol: f64, project: bool) -> Result<Subspace2> {
        let a = self.generators[0].to_sym(tol, project)?;
        let b = self.generators[1].to_sym(tol, project)?;
        Subspace2::from_generators(&a, &b)
    }

    pub fn new(a: &SymTraceless3, b: &SymTraceless3) -> Self {
        Self {
            generators: [MatrixDocument::from_sym(a), MatrixDocument::from_sym(b)],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalFormReport {
    pub mu: f64,
    pub lambda: f64,
    #[serde(rename = "coeff_A")]
    pub coeff_a: f64,
    #[serde(rename = "coeff_B")]
    pub coeff_b: f64,
    pub rotation: Rows,
    pub reconstruction_error: f64,
}

impl NormalFormReport {
    pub fn new(nf: &NormalFormResult, a: &SymTraceless3) -> Self {
        Self {
            mu: nf.mu,
            lambda: nf.lambda,
            coeff_a: nf.coeff_a,
            coeff_b: nf.coeff_b,
            rotation: rows_of(nf.rotation.matrix()),
            reconstruction_error: nf.reconstruction_error(a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub theta: f64,
    pub matrix: Rows,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub f_value: f64,
    #[serde(rename = "in_X")]
    pub in_x: bool,
    pub certificate: Option<CertificateReport>,
    pub is_generic: bool,
}

impl ClassifyReport {
    pub fn new(m: &MembershipReport, g: &GenericityReport) -> Self {
        let certificate = match (m.certificate_theta, m.certificate_x) {
            (Some(theta), Some(x)) => Some(CertificateReport {
                theta,
                matrix: rows_of(&x.to_matrix()),
            }),
            _ => None,
        };
        Self {
            f_value: m.f_value,
            in_x: m.in_x,
            certificate,
            is_generic: g.is_generic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub rotation: Rows,
    pub y: YCoord,
    pub stratum: Stratum,
    /// Order of the stabilizer in `N_0`; absent outside `Y'`.
    pub stabilizer_order: Option<usize>,
    pub rebuild_error: f64,
}

impl DecomposeReport {
    pub fn new(d: &OrbitDecomposition, stabilizer_order: Option<usize>) -> Self {
        Self {
            rotation: rows_of(d.rotation.matrix()),
            y: d.y,
            stratum: d.stratum,
            stabilizer_order,
            rebuild_error: d.rebuild_error,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenericReport {
    pub is_generic: bool,
    pub method: GenericityMethod,
    pub score: f64,
    #[serde(rename = "witness_Z")]
    pub witness_z: Option<Rows>,
    /// Whether the lemma search reaches the same verdict.
    pub canonical_lemma_agrees: bool,
    /// Polynomial of the `W_Y` form, when the plane lies in `X`.
    pub det_poly_coeffs: Option<[f64; 3]>,
}

impl GenericReport {
    pub fn new(rank: &GenericityReport, lemma: &GenericityReport, det_poly: Option<[f64; 3]>) -> Self {
        Self {
            is_generic: rank.is_generic,
            method: rank.method,
            score: rank.score,
            witness_z: rank.witness_z.map(|z| rows_of(&z.to_matrix())),
            canonical_lemma_agrees: rank.is_generic == lemma.is_generic,
            det_poly_coeffs: det_poly,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub generic: bool,
    pub stabilizer_order: Option<usize>,
    pub stabilizer: Option<Vec<Rows>>,
    pub h1_size: Option<usize>,
    pub kernel_trivial: Option<bool>,
    pub covers: bool,
}

impl CohomologyReport {
    pub fn new(c: &CoverageCertificate) -> Self {
        let stabilizer = c
            .stabilizer
            .as_ref()
            .map(|s| s.elements().iter().map(|g: &Rotation3| rows_of(g.matrix())).collect::<Vec<_>>());
        Self {
            generic: c.generic,
            stabilizer_order: c.stabilizer.as_ref().map(|s| s.order()),
            stabilizer,
            h1_size: c.h1_size,
            kernel_trivial: c.kernel_trivial,
            covers: c.covers,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::coverage_certificate;
    use crate::generic::{generic_canonical_search, generic_rank_test};
    use crate::grassmann::{member_x, DEFAULT_MEMBER_TOL};
    use crate::normal_form::normal_form;
    use crate::orbit::{build_w, decompose};
    use crate::sampling::{random_rotation, random_traceless, rng_from_seed};
    use crate::Error;

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(v: &T) {
        let s = serde_json::to_string(v).unwrap();
        let back: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, v, "{s}");
    }

    #[test]
    fn parses_documents() {
        let d: MatrixDocument = serde_json::from_str(r#"{"matrix": [[1, 0, 0], [0, 1e0, 0], [0, 0, -2.0]]}"#).unwrap();
        assert_eq!(d.to_sym(1e-9, false).unwrap(), SymTraceless3::x0());
        let d: MatrixDocument = serde_json::from_str(r#"{"matrix": [[1, 0, 0], [0, 2, 0], [0, 0, 3]]}"#).unwrap();
        assert!(matches!(d.to_sym(1e-9, false), Err(Error::NotTraceless(_))));
        assert_eq!(d.to_sym(1e-9, true).unwrap(), SymTraceless3::diag(-1.0, 0.0));
        let d: MatrixDocument = serde_json::from_str(r#"{"matrix": [[0, 1, 0], [0, 0, 0], [0, 0, 0]]}"#).unwrap();
        assert!(matches!(d.to_sym(1e-9, false), Err(Error::NotSymmetric(_))));
        assert!(serde_json::from_str::<MatrixDocument>(r#"{"matrix": [[1, 0], [0, 1]]}"#).is_err());
        let s = SubspaceDocument::new(&SymTraceless3::x0(), &SymTraceless3::x0());
        assert!(matches!(s.to_subspace(1e-9, false), Err(Error::DependentGenerators(_))));
    }

    #[test]
    fn reports_round_trip() {
        let mut rng = rng_from_seed(60);
        for _ in 0..50 {
            let a = random_traceless(&mut rng);
            round_trip(&NormalFormReport::new(&normal_form(&a), &a));
            round_trip(&MatrixDocument::from_sym(&a));
            let w = Subspace2::from_generators(&a, &random_traceless(&mut rng)).unwrap();
            let g = generic_rank_test(&w);
            round_trip(&ClassifyReport::new(&member_x(&w, DEFAULT_MEMBER_TOL), &g));
            round_trip(&GenericReport::new(&g, &generic_canonical_search(&w), None));
        }
        let y = YCoord::new(0.3, 1.0, 1.0).unwrap();
        let w = build_w(&random_rotation(&mut rng), &y);
        let d = decompose(&w).unwrap();
        round_trip(&DecomposeReport::new(&d, Some(2)));
        round_trip(&ClassifyReport::new(&member_x(&w, DEFAULT_MEMBER_TOL), &generic_rank_test(&w)));
        round_trip(&CohomologyReport::new(&coverage_certificate(&w).unwrap()));
    }
}
