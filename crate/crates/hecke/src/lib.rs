//! Exact seminormal matrix representations of the Iwahori-Hecke algebras
//! of types A1, A2, B3 and F4.
//!
//! Everything is computed over the field Q(p,q) of rational functions in the
//! two Hecke parameters, with arbitrary-precision integer coefficients and
//! canonical normal forms, so every identity in this crate is checked exactly,
//! never numerically.
//!
//! The crate is organised in layers:
//!
//! * [`ratfun`] — Laurent polynomials in Z[p^{±1}, q^{±1}] and their fraction
//!   field, in canonical form.
//! * [`linalg`] — dense matrices over the fraction field, fraction-free
//!   (Bareiss) elimination, block and tensor constructors.
//! * [`weyl`] — the Weyl groups WA1, WA2, WB3, WF4 as explicit reflection
//!   groups, conjugacy classes, exact character tables (Dixon-Schneider),
//!   branching rules and central constants.
//! * [`seminormal`] — the explicit seminormal representation tables for all
//!   four algebras, automorphism orbits, restriction windows.
//! * [`derive`] — re-derivation of the generator images of T4 from Weyl group
//!   character data alone.
//! * [`verify`] — the machine-checkable claims (defining relations, central
//!   elements, branching, specialization, denominators) as named checks.
//!
//! The `parallel` feature (enabled by default) runs the representation sweeps
//! on a rayon thread pool; results are collected in input order so output is
//! identical with and without it.

pub mod derive;
pub mod linalg;
pub mod par;
pub mod ratfun;
pub mod seminormal;
pub mod verify;
pub mod weyl;
