//! Exact matrix representations of twin groups and their virtual and welded
//! extensions, with the supporting algebra: Laurent polynomials, rational
//! functions, free-group automorphisms and Fox calculus.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod freegroup;
pub mod matrix;
pub mod presentations;
pub mod reps;
pub mod ring;
pub mod sampling;

pub use error::{Error, Result};
