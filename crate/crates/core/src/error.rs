use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("matrix is not symmetric (max |a_ij - a_ji| = {0:e})")]
    NotSymmetric(f64),
    #[error("matrix is not trace-free (trace = {0:e})")]
    NotTraceless(f64),
    #[error("matrix is not a rotation (|RR^T - I|_F = {defect:e}, det = {det})")]
    NotRotation { defect: f64, det: f64 },
    #[error("eigenvalues must be sorted descending")]
    UnsortedEigenvalues,
    #[error("eigenvalues must sum to zero (sum = {0:e})")]
    EigenvaluesNotTraceless(f64),
    #[error("generators are linearly dependent (Gram determinant {0:e})")]
    DependentGenerators(f64),
    #[error("subspace is not in X (f = {f_value}, gap to 54^-1/2 = {gap:e})")]
    NotInX { f_value: f64, gap: f64 },
    #[error("certificate eigenvalues are numerically ambiguous (gap {0:e})")]
    DegenerateCertificate(f64),
    #[error("Y-coordinate outside Y' (alpha, delta and epsilon must all be nonzero)")]
    OutsideYprime,
    #[error("generated group exceeds {0} elements")]
    NotFinite(usize),
    #[error("stabilizer cannot be determined: subspace is not of the form k.W_Y with Y in Y'")]
    UnknownStabilizer,
}

pub type Result<T> = std::result::Result<T, Error>;
