//! Finite subgroups of `K = SO(3)` and the Galois-cohomology coverage
//! certificate.
//!
//! For a generic `L` with finite stabilizer `S`, `K.L = p` holds iff the map
//! `H^1(Gamma, S) -> H^1(Gamma, K_C)` has trivial kernel, where `Gamma =
//! Gal(C|R)` acts trivially on the real group `S`. Then `H^1(Gamma, S)` is the
//! set of involutions of `S` modulo `S`-conjugacy.

use std::collections::{HashMap, VecDeque};

use nalgebra::{Matrix3, Rotation3 as NaRotation, Unit, Vector3};

use crate::error::{Error, Result};
use crate::generic::generic_rank_test;
use crate::grassmann::Subspace2;
use crate::orbit::{decompose, stabilizer_in_n0, Stratum};
use crate::symmat::Rotation3;

pub const GROUP_CAP: usize = 10_000;
const ELEMENT_TOL: f64 = 1e-9;

/// A finite group of rotations with its multiplication table.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMatrixGroup {
    elements: Vec<Rotation3>,
    table: Vec<Vec<usize>>,
    /// Word in the generator indices producing each element.
    words: Vec<Vec<usize>>,
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Rotation3] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Rotation3 {
        &self.elements[i]
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Index of `a * b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The identity is always element 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a]
            .iter()
            .position(|&p| p == 0)
            .expect("group table has an inverse in every row")
    }

    pub fn index_of(&self, r: &Rotation3) -> Option<usize> {
        self.elements.iter().position(|e| e.distance(r) <= ELEMENT_TOL)
    }

    pub fn contains(&self, r: &Rotation3) -> bool {
        self.index_of(r).is_some()
    }

    /// Same set of elements, irrespective of order.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.order() == other.order() && other.elements.iter().all(|e| self.contains(e))
    }

    /// `{k g k^-1}`, the group seen in rotated coordinates.
    pub fn transported(&self, k: &Rotation3) -> Self {
        let elements = self
            .elements
            .iter()
            .map(|g| Rotation3::from_matrix_unchecked(snap(&(*k * *g * k.inverse()).matrix().clone_owned())))
            .collect();
        Self {
            elements,
            table: self.table.clone(),
            words: self.words.clone(),
        }
    }

    /// Closure, identity and inverses checked through the table, plus
    /// associativity on all triples (orders here are tiny).
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        if n == 0 || self.elements[0].distance(&Rotation3::identity()) > ELEMENT_TOL {
            return false;
        }
        for a in 0..n {
            if self.table[0][a] != a || self.table[a][0] != a {
                return false;
            }
            if !self.table[a].contains(&0) {
                return false;
            }
            for b in 0..n {
                let prod = self.elements[a] * self.elements[b];
                if prod.distance(&self.elements[self.table[a][b]]) > 1e-8 {
                    return false;
                }
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

const SNAP_VALUES: [f64; 5] = [
    0.0,
    1.0,
    -1.0,
    std::f64::consts::FRAC_1_SQRT_2,
    -std::f64::consts::FRAC_1_SQRT_2,
];

/// Rounds entries within `1e-9` of `{0, +-1, +-1/sqrt2}` to that value.
fn snap(m: &Matrix3<f64>) -> Matrix3<f64> {
    m.map(|v| {
        SNAP_VALUES
            .iter()
            .copied()
            .find(|s| (v - s).abs() <= ELEMENT_TOL)
            .unwrap_or(v)
    })
}

fn key(m: &Matrix3<f64>) -> [i64; 9] {
    let mut k = [0i64; 9];
    for (slot, v) in k.iter_mut().zip(m.iter()) {
        *slot = (v * 1e6).round() as i64;
    }
    k
}

struct Lookup {
    map: HashMap<[i64; 9], Vec<usize>>,
}

impl Lookup {
    fn find(&self, elements: &[Rotation3], m: &Matrix3<f64>) -> Option<usize> {
        self.map
            .get(&key(m))?
            .iter()
            .copied()
            .find(|&i| (elements[i].matrix() - m).norm() <= ELEMENT_TOL)
    }
}

/// Breadth-first closure of the generators; elements equal within `1e-9`
/// (Frobenius) are identified.
pub fn close_group(generators: &[Rotation3]) -> Result<FiniteMatrixGroup> {
    let gens: Vec<Matrix3<f64>> = generators.iter().map(|g| snap(g.matrix())).collect();
    let mut elements = vec![Rotation3::identity()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut lookup = Lookup { map: HashMap::new() };
    lookup.map.entry(key(&Matrix3::identity())).or_default().push(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let p = snap(&(elements[i].matrix() * g));
            if lookup.find(&elements, &p).is_none() {
                if elements.len() >= GROUP_CAP {
                    return Err(Error::NotFinite(GROUP_CAP));
                }
                let idx = elements.len();
                elements.push(Rotation3::from_matrix_unchecked(p));
                let mut w = words[i].clone();
                w.push(gi);
                words.push(w);
                lookup.map.entry(key(&p)).or_default().push(idx);
                queue.push_back(idx);
            }
        }
    }
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = snap(&(elements[a].matrix() * elements[b].matrix()));
            table[a][b] = lookup
                .find(&elements, &p)
                .expect("product of closed group elements is in the group");
        }
    }
    Ok(FiniteMatrixGroup {
        elements,
        table,
        words,
    })
}

/// One cohomology class: an `S`-conjugacy class of involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Class {
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Set {
    pub classes: Vec<H1Class>,
}

impl H1Set {
    pub fn size(&self) -> usize {
        self.classes.len()
    }
}

pub fn is_involution(s: &Rotation3) -> bool {
    (s.matrix() * s.matrix() - Matrix3::identity()).norm() <= ELEMENT_TOL
}

/// `H^1(Gamma, S) = {s in S | s^2 = 1} / (s ~ h s h^-1)`. The class of the
/// identity comes first.
pub fn h1(s: &FiniteMatrixGroup) -> H1Set {
    let invols: Vec<usize> = (0..s.order()).filter(|&i| is_involution(s.element(i))).collect();
    let mut assigned = vec![false; s.order()];
    let mut classes = Vec::new();
    for &i in &invols {
        if assigned[i] {
            continue;
        }
        let mut members: Vec<usize> = (0..s.order())
            .map(|h| s.mul(s.mul(h, i), s.inverse(h)))
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(H1Class {
            representative: i,
            members,
        });
    }
    H1Set { classes }
}

/// `gamma = m2 s0`, the half-turn about `(1, 1, 0)/sqrt2`.
pub fn gamma() -> Rotation3 {
    Rotation3::from_matrix_unchecked(Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0))
}

/// Image of one class under `Psi: H^1(Gamma, S) -> H^1(Gamma, K_C)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassImage {
    pub representative: Rotation3,
    pub in_kernel: bool,
    /// `r` with `r gamma r^-1 = s`, for nontrivial classes.
    pub conjugator: Option<Rotation3>,
    pub residual: f64,
}

/// Decides `ker Psi` class by class.
///
/// The identity class is realised by `k = 1` (`1 = k sigma(k)^-1`). A
/// nontrivial involution `s` of `SO(3)` is a half-turn; it is conjugated in
/// `K` to `gamma` by aligning the rotation axes. Real conjugation preserves
/// the cohomology class in `H^1(Gamma, K_C)`, and `gamma` is not of the form
/// `k sigma(k)^-1`: `gamma sigma(k) = k` makes the last row of `k` purely
/// imaginary, so its squares cannot sum to 1. Hence `[s]` is outside the
/// kernel. A class whose conjugator cannot be verified is reported in the
/// kernel, which makes the overall decision conservative.
pub fn kernel_images(s: &FiniteMatrixGroup) -> Vec<ClassImage> {
    let g = gamma();
    h1(s)
        .classes
        .iter()
        .map(|c| {
            let rep = *s.element(c.representative);
            if rep.distance(&Rotation3::identity()) <= ELEMENT_TOL {
                return ClassImage {
                    representative: rep,
                    in_kernel: true,
                    conjugator: None,
                    residual: 0.0,
                };
            }
            match conjugator_from_gamma(&rep) {
                Some(r) => {
                    let residual = (r * g * r.inverse()).distance(&rep);
                    ClassImage {
                        representative: rep,
                        in_kernel: residual > ELEMENT_TOL,
                        conjugator: Some(r),
                        residual,
                    }
                }
                None => ClassImage {
                    representative: rep,
                    in_kernel: true,
                    conjugator: None,
                    residual: f64::INFINITY,
                },
            }
        })
        .collect()
}

/// True iff only the identity class maps to the trivial class.
pub fn kernel_trivial(s: &FiniteMatrixGroup) -> bool {
    kernel_images(s).iter().filter(|c| c.in_kernel).count() == 1
}

/// Rotation taking gamma's axis to the +1-eigenvector of the half-turn `s`.
pub fn conjugator_from_gamma(s: &Rotation3) -> Option<Rotation3> {
    if !is_involution(s) {
        return None;
    }
    // s = 2 v v^T - I, so s + I = 2 v v^T
    let p = s.matrix() + Matrix3::identity();
    let col = (0..3).max_by(|&a, &b| p.column(a).norm().total_cmp(&p.column(b).norm()))?;
    let v: Vector3<f64> = p.column(col).into_owned();
    if v.norm() < 1e-6 {
        return None;
    }
    let v = Unit::new_normalize(v);
    let a = Unit::new_normalize(Vector3::new(1.0, 1.0, 0.0));
    let r = NaRotation::rotation_between(&*a, &*v).unwrap_or_else(|| {
        // antiparallel: half-turn about any axis orthogonal to a
        NaRotation::from_axis_angle(&Vector3::z_axis(), std::f64::consts::PI)
    });
    Some(Rotation3::from_matrix_unchecked(r.into_inner()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCertificate {
    pub generic: bool,
    pub stabilizer: Option<FiniteMatrixGroup>,
    pub h1_size: Option<usize>,
    pub kernel_trivial: Option<bool>,
    /// `generic && kernel_trivial`.
    pub covers: bool,
}

/// Certifies `K.L = p` for `L = k.W_Y`, `Y in Y'`, where the stabilizer is
/// contained in `k N_0 k^-1`. Non-generic planes are certified negative
/// without a stabilizer.
pub fn coverage_certificate(w: &Subspace2) -> Result<CoverageCertificate> {
    let generic = generic_rank_test(w).is_generic;
    if !generic {
        return Ok(CoverageCertificate {
            generic,
            stabilizer: None,
            h1_size: None,
            kernel_trivial: None,
            covers: false,
        });
    }
    let d = decompose(w).map_err(|_| Error::UnknownStabilizer)?;
    if d.stratum == Stratum::Outside {
        return Err(Error::UnknownStabilizer);
    }
    let stab = stabilizer_in_n0(&d.y)
        .map_err(|_| Error::UnknownStabilizer)?
        .transported(&d.rotation);
    let h = h1(&stab);
    let kt = kernel_trivial(&stab);
    Ok(CoverageCertificate {
        generic,
        h1_size: Some(h.size()),
        kernel_trivial: Some(kt),
        covers: generic && kt,
        stabilizer: Some(stab),
    })
}
