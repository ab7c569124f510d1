//! Monte-Carlo survey of `f` over random 2-planes. Each row draws from its
//! own stream seeded by `derive_seed(master, index)`, so results do not
//! depend on scheduling and rows come out in index order.

use std::io::{self, Write};

use crate::generic::generic_rank_test;
use crate::grassmann::{member_x, Subspace2};
use crate::orbit::{decompose_with_tol, stabilizer_elements_in_n0, Stratum};
use crate::sampling::{derive_seed, random_traceless, rng_from_seed};

pub const CSV_HEADER: &str = "seed,f_value,in_X,is_generic,stratum,stabilizer_order";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurveyRow {
    pub seed: u64,
    pub f_value: f64,
    pub in_x: bool,
    pub is_generic: bool,
    pub stratum: Option<Stratum>,
    pub stabilizer_order: Option<usize>,
}

impl SurveyRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{:.16e},{},{},{},{}",
            self.seed,
            self.f_value,
            self.in_x,
            self.is_generic,
            self.stratum.map(|s| s.label()).unwrap_or(""),
            self.stabilizer_order.map(|o| o.to_string()).unwrap_or_default(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon when the `parallel` feature is on, otherwise sequential.
    Parallel,
}

/// Span of two standard Gaussian elements of `p`.
pub fn random_plane(seed: u64) -> Subspace2 {
    let mut rng = rng_from_seed(seed);
    loop {
        let a = random_traceless(&mut rng);
        let b = random_traceless(&mut rng);
        if let Ok(w) = Subspace2::from_generators(&a, &b) {
            return w;
        }
    }
}

pub fn survey_row(seed: u64, tol: f64) -> SurveyRow {
    let w = random_plane(seed);
    let m = member_x(&w, tol);
    let is_generic = generic_rank_test(&w).is_generic;
    let (stratum, stabilizer_order) = if m.in_x {
        match decompose_with_tol(&w, tol) {
            Ok(d) => (
                Some(d.stratum),
                stabilizer_elements_in_n0(&d.y).ok().map(|s| s.len()),
            ),
            Err(_) => (None, None),
        }
    } else {
        (None, None)
    };
    SurveyRow {
        seed,
        f_value: m.f_value,
        in_x: m.in_x,
        is_generic,
        stratum,
        stabilizer_order,
    }
}

pub fn run_survey(n: usize, master_seed: u64, tol: f64, exec: Execution) -> Vec<SurveyRow> {
    let seeds: Vec<u64> = (0..n as u64).map(|i| derive_seed(master_seed, i)).collect();
    match exec {
        Execution::Sequential => seeds.iter().map(|&s| survey_row(s, tol)).collect(),
        Execution::Parallel => par_rows(&seeds, tol),
    }
}

#[cfg(feature = "parallel")]
fn par_rows(seeds: &[u64], tol: f64) -> Vec<SurveyRow> {
    use rayon::prelude::*;
    seeds.par_iter().map(|&s| survey_row(s, tol)).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_rows(seeds: &[u64], tol: f64) -> Vec<SurveyRow> {
    seeds.iter().map(|&s| survey_row(s, tol)).collect()
}

pub fn write_csv<W: Write>(rows: &[SurveyRow], out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    out.flush()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurveySummary {
    pub n: usize,
    pub max_f: f64,
    pub in_x_fraction: f64,
    pub generic_fraction: f64,
}

impl SurveySummary {
    pub fn of(rows: &[SurveyRow]) -> Self {
        let n = rows.len();
        let denom = n.max(1) as f64;
        Self {
            n,
            max_f: rows.iter().map(|r| r.f_value).fold(0.0, f64::max),
            in_x_fraction: rows.iter().filter(|r| r.in_x).count() as f64 / denom,
            generic_fraction: rows.iter().filter(|r| r.is_generic).count() as f64 / denom,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "n={} max_f={:.16e} in_X_fraction={} generic_fraction={}",
            self.n, self.max_f, self.in_x_fraction, self.generic_fraction
        )
    }
}
