//! Exact-arithmetic engine for finite-dimensional Hom-Lie algebras:
//! representation validation, shift-indexed coboundary operators,
//! cohomology dimensions, and recovery of a representation from its
//! operator family. All computation is over arbitrary-precision
//! rationals; nothing is approximate.

pub mod catalog;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod format;
pub mod homlie;
pub mod linalg;
pub mod reconstruct;

pub use homlie::{HomLieAlgebra, Representation, ValidationReport};
pub use linalg::{Matrix, Rat};
