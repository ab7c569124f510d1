//! Normal forms of trace-free real quadratic forms in three variables and
//! the geometry of 2-planes `W` of traceless symmetric matrices with
//! `SO(3).W = p`.

pub mod cohomology;
pub mod cubic;
pub mod error;
pub mod generic;
pub mod grassmann;
pub mod io;
pub mod normal_form;
pub mod orbit;
pub mod sampling;
pub mod survey;
pub mod symmat;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
