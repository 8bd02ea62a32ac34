//! Numerical kernel for moduli spaces of closed n-gons with fixed side
//! lengths in hyperbolic 3-space, together with their Euclidean companions.
//!
//! The library is organised around a matrix-group model of based polygons:
//! a based n-gon is a word `(b_1, ..., b_n)` in the group `B` of
//! upper-triangular complex 2x2 matrices with positive diagonal and unit
//! determinant, acting on hyperbolic 3-space through the Iwasawa
//! decomposition `SL2(C) = B * SU(2)`.  On top of that sit
//!
//! * [`hyp3`] — models of hyperbolic 3-space, isometries, geodesic flow
//!   toward boundary points, Busemann functions;
//! * [`borel`] — the group layer: Iwasawa decomposition, the pairing on
//!   `sl2(C)`, dressing actions, and the correspondence between words and
//!   based polygons;
//! * [`moduli`] — side-length cones, wall detection, closure residuals and
//!   degeneracy tests for polygons;
//! * [`gaussmap`] — the hyperbolic and Euclidean Gauss maps, stability of
//!   weighted point configurations on the sphere, the contraction solver
//!   that inverts the Gauss map, and the conformal center of mass;
//! * [`bending`] — the bending integrable system: diagonal lengths,
//!   closed-form flows, dihedral angle variables, the momentum polyhedron
//!   and action-angle reconstruction;
//! * [`poisson`] — a finite-difference Poisson bracket engine for the
//!   Sklyanin structure on `B^n` plus a family of symplectic forms on the
//!   sphere with an invariant integral;
//! * [`random`] — seeded generators for matrices, words and configurations
//!   used by the verification suites.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is safe to share across threads.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bending;
pub mod borel;
pub mod error;
pub mod gaussmap;
pub mod hyp3;
pub mod mat2;
pub mod moduli;
pub mod poisson;
pub mod random;

pub use error::Error;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
