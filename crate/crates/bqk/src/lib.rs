//! Counting invariants of oriented knots and links from finite biquasiles,
//! and their Boltzmann-weight enhancements.
//!
//! A biquasile is a set with two Latin-square operations satisfying a pair
//! of exchange identities. Coloring the regions of a link diagram's dual
//! graph by biquasile elements, subject to one relation per crossing,
//! yields a move-invariant count; weighting each coloring by a signed sum
//! of crossing contributions refines the count into a polynomial that can
//! separate links the bare count cannot.
//!
//! The pieces:
//!
//! - [`modalg`]: exact linear algebra over Z/m (Howell form, kernels) for
//!   counting solution sets, including composite m.
//! - [`biquasile`]: operation tables, axiom checking, the modular affine
//!   ("Alexander") construction, exhaustive enumeration at small order.
//! - [`diagram`]: PD-code parsing, region tracing, crossing signs, dual
//!   graph records, and R1/R2 perturbations for invariance testing.
//! - [`coloring`]: backtracking enumeration and counting of colorings, a
//!   linear-algebra fast path for affine biquasiles, presentations.
//! - [`boltzmann`]: weight axioms, exhaustive weight solving over Z/m,
//!   closed-form linear weights, enhanced polynomials, and the triviality
//!   scanner for linear weights.
//! - [`corpus`]: bundled PD codes for prime knots up to 8 crossings and
//!   prime links up to 7 crossings.
//!
//! Each major capability has a runnable example under `examples/`; start
//! with `cargo run --example hopf_counting`.

pub mod biquasile;
pub mod boltzmann;
pub mod builder;
pub mod coloring;
pub mod corpus;
pub mod diagram;
pub mod modalg;

pub use biquasile::{check_axioms, enumerate_biquasiles, AlexanderParams, Biquasile};
pub use boltzmann::{BoltzmannWeight, EnhancedPolynomial};
pub use coloring::{count_colorings, enumerate_colorings, ColoringAssignment};
pub use diagram::{DualGraphDiagram, LinkDiagram, ReidemeisterMove};
pub use modalg::{ModMatrix, SolutionSpace};
