//! Exact combinatorics of lecture hall simplices and order polytopes.
//!
//! Everything here is integer or rational arithmetic; no floating point is
//! used anywhere. The crate provides:
//!
//! - dense integer polynomials with the distributional property checks used
//!   in Ehrhart theory (symmetry, unimodality, log-concavity, gamma
//!   nonnegativity, real-rootedness, interlacing),
//! - s-inversion sequences with ascent/descent statistics, the s-Eulerian
//!   polynomial, the restricted set behind the s-derangement polynomial, and
//!   a recursion that certifies real-rootedness by interlacing,
//! - lattice simplices with exact enumeration of the lattice points in the
//!   fundamental parallelepiped (h* and local h* polynomials), including the
//!   lecture hall simplex of an s-sequence and its faces,
//! - permutation models: classical descent/excedance statistics, the
//!   cycle-construction bijection onto derangements, Smirnoff words, and
//!   colored permutations with their own bijections,
//! - order polytopes of naturally labeled posets: exact Ehrhart h*
//!   polynomials, the canonical triangulation, links and h-polynomials of
//!   simplicial complexes, and the triangulation-based h* formula,
//! - a verification layer that re-derives the identities on desk-scale
//!   corpora and reports every check.

pub mod caps;
pub mod colored;
pub mod complex;
pub mod error;
pub mod inversion;
pub mod order;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod simplex;
pub mod suites;

mod linalg;

pub use error::{Error, Result};
pub use poly::{GammaVector, IntPolynomial};
