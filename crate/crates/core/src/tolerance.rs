//! Process-wide numerical tolerances.
//!
//! The reconstruction tolerance is relative: a decomposition of `X` is
//! accepted when its residual is below `recon * (1 + |X|_F)`.

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_RECON: f64 = 1e-9;
pub const DEFAULT_ORTH: f64 = 1e-10;

static RECON_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9
static ORTH_BITS: AtomicU64 = AtomicU64::new(0x3DDB_7CDF_D9D7_BDBB); // 1e-10

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub recon: f64,
    pub orth: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            recon: DEFAULT_RECON,
            orth: DEFAULT_ORTH,
        }
    }
}

pub fn global() -> Tolerances {
    Tolerances {
        recon: f64::from_bits(RECON_BITS.load(Ordering::Relaxed)),
        orth: f64::from_bits(ORTH_BITS.load(Ordering::Relaxed)),
    }
}

pub fn set_global(tol: Tolerances) {
    RECON_BITS.store(tol.recon.to_bits(), Ordering::Relaxed);
    ORTH_BITS.store(tol.orth.to_bits(), Ordering::Relaxed);
}

/// Absolute reconstruction bound for a matrix of Frobenius norm `norm`.
pub fn recon_bound(norm: f64) -> f64 {
    global().recon * (1.0 + norm)
}
