//! Factorization invariants of numerical semigroups, centered on the
//! maximal denumerant: the number of maximal-length factorizations of an
//! element, maximized over the semigroup.
//!
//! The [`semigroup`] module holds the core types and the fully general
//! algorithm, which scans the finitely many maximally reduced elements.
//! The [`embdim3`] module holds three mutually cross-checking closed-form
//! computations for semigroups generated by at most three elements, plus
//! a classification of basic triples and table generation. The [`cli`]
//! module backs the `maxdenum` binary.

pub mod cli;
pub mod embdim3;
pub mod error;
pub mod semigroup;

pub use embdim3::{
    BasicCase, BasicClassification, BezoutPair, GmnForm, ReducedStructure, TableRow,
};
pub use error::Error;
pub use semigroup::{
    DmaxResult, Factorization, Method, NumericalSemigroup, ReducedElementReport,
};
