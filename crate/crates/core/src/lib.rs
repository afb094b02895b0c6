//! Exact computations around Schur Q-functions: the ring Γ, spin Kostka
//! polynomials, principal specializations and fake degrees, and seminormal
//! modules of the affine and finite Hecke–Clifford algebras.

pub mod arith;
mod cache;
pub mod cli;
mod error;
pub mod kostka;
pub mod partitions;
pub mod repn;
pub mod schurq;
pub mod specialize;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
