//! Exact polynomial divided difference operators over ℚ(ζ).
//!
//! An operator acts on polynomials in x₁…x_n through one adjacent pair
//! (x_i, x_{i+1}) as f ↦ ∂(Pf) + Q∂f + Rf + S·sf. The crate builds the
//! classified families satisfying the braid relations, checks braid, Hecke and
//! commutation identities exactly, and generates polynomial tables indexed by
//! permutations.

pub mod braid;
pub mod cli;
pub mod commute;
pub mod divdiff;
pub mod error;
pub mod families;
pub mod field;
pub mod json;
pub mod pddo;
pub mod perm;
pub mod poly;
pub mod table;

pub use error::{Error, Result};
pub use field::FieldElement;
pub use pddo::{Degeneracy, Pddo};
pub use poly::{MultiPoly, SlotPoly};
