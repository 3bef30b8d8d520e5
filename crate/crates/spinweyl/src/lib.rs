//! Weyl groups, their pin double covers and spin modules, character tables
//! computed from scratch, and one-W-type modules of graded Hecke algebras
//! together with their Dirac cohomology.
//!
//! Everything is exact. Scalars live in cyclotomic fields
//! ([`scalars::CyclotomicNumber`]); large groups are handled through a faithful
//! reduction modulo a prime and lifted back through power maps.

pub mod error;
pub mod scalars;
pub mod linalg;
pub mod rootsystem;
pub mod group;
pub mod clifford;
pub mod chartab;
pub mod combinat;
pub mod heckemod;
pub mod orbits;
pub mod catalog;
pub mod cli;

pub use error::{Error, Result};
pub use scalars::{CyclotomicNumber, Rational};
