//! Exact computer algebra for elliptic rational homotopy types of compact
//! Kähler manifolds.
//!
//! The crate is organised around a small exact-arithmetic kernel and a stack
//! of increasingly specialised layers on top of it:
//!
//! - [`poly`] — multivariate polynomials over `Q` with weighted (even) degrees;
//! - [`groebner`] — Buchberger's algorithm, normal forms, Hilbert functions and
//!   the regular-sequence test that decides ellipticity of pure models;
//! - [`linalg`] — dense rational linear algebra (rank, kernels, row spaces);
//! - [`sullivan`] — minimal Sullivan algebras: validation, cohomology,
//!   associated pure models, quotient presentations, minimal models of
//!   finite-dimensional rings and formality witnesses;
//! - [`exponents`] — the exponent calculus for elliptic algebras
//!   (Friedlander–Halperin constraints, enumeration, Hilbert series);
//! - [`hodge`] — Hodge diamonds and the Kähler admissibility filters
//!   (Hard Lefschetz, signature, Hodge level, Hodge–Riemann, geometric genus);
//! - [`fourfold`] — the complex-dimension-4 classification pipeline with
//!   machine-checked exclusion records and explicit realizations;
//! - [`ci`] — Hodge numbers of complete intersections and the ellipticity scan;
//! - [`parse`] — the text formats shared by the CLI (`gen`/`d`/`rel` files and
//!   polynomial expressions).

pub mod betti;
pub mod ci;
pub mod exponents;
pub mod fourfold;
pub mod groebner;
pub mod hodge;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod sullivan;

mod error;

pub use betti::BettiVector;
pub use error::{Error, Result};
pub use poly::{rat, MonomialOrder, PolyRing, Polynomial, Rational, RingRef};
