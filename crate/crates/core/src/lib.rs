//! Exact computation of local Picard groups and higher unit-sheaf cohomology
//! on punctured spectra of pointed monoids (binoids) and their algebras.
//!
//! The crate computes these invariants two ways and cross-checks them:
//! directly, by assembling the Čech complex of the sheaf of units over the
//! coordinate cover, and in closed form, through reduced cohomology of
//! vertex links. Stanley-Reisner rings additionally pick up a field part
//! evaluated under a chosen [`abelian::FieldModel`], and non-reduced monomial
//! quotients a nilpotent correction table. All arithmetic is exact.

#![allow(clippy::needless_range_loop)] // index-heavy exact linear algebra reads clearest with explicit indices

pub mod abelian;
pub mod binoid;
pub mod cech;
pub mod error;
pub mod io;
pub mod monomial;
pub mod picard;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
