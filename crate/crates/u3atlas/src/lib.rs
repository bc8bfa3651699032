//! Exact reconstruction of the finite subgroups of U(3) of order < 2000.
//!
//! The crate builds every catalogued group from explicit generator matrices
//! over cyclotomic fields, enumerates its elements exactly, and re-derives
//! order, SU(3) membership, irreducible-representation dimension profiles and
//! structural flags, checking them against closed-form expectations.

pub mod catalog;
pub mod chardeg;
pub mod cli;
pub mod cyclotomic;
pub mod engine;
pub mod genlib;
pub mod mat3;
