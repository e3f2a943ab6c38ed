//! Exact computations on symbolic powers of ideals of points lying on an
//! irreducible conic in the projective plane.
//!
//! Everything is computed over a prime field `GF(p)`:
//!
//! - [`exactalg`]: field arithmetic and Gaussian elimination with a fixed
//!   column order.
//! - [`monomials`]: monomials in `x > y > z`, degrevlex, Borel moves.
//! - [`fatpoints`]: points `(1 : t : t²)` on `xz = y²`, vanishing-condition
//!   matrices and Hilbert functions of `I^(m)`.
//! - [`ginlab`]: the reverse-lex generic initial ideal, both by a random
//!   change of coordinates and by reconstruction from the h-vector.
//! - [`resolutions`]: Betti tables, the recursive and closed-form
//!   resolutions, Hilbert–Burch tables of a gin and consecutive cancellation.
//! - [`polytope`]: staircase Newton polytopes, scaled intercepts and the
//!   limiting shape.
//! - [`report`]: CSV and SVG emission for convergence sweeps.
//!
//! The `parallel` feature (on by default) evaluates independent degrees,
//! trials and sweep cells on the rayon pool; see [`Execution`].

pub mod error;
pub mod exactalg;
pub mod exec;
pub mod fatpoints;
pub mod ginlab;
pub mod monomials;
pub mod polytope;
pub mod report;
pub mod resolutions;

pub use error::{Error, Result};
pub use exactalg::{modular_inverse, FFElement, FFMatrix, PrimeField, RowReduction};
pub use exec::Execution;
pub use fatpoints::{ConfigRecord, FatPointConfig, ProjectivePoint};
pub use ginlab::{GinStaircase, ShapeCertificate};
pub use monomials::{Monomial, MonomialSet};
pub use polytope::{LimitShape, Rational, StaircasePolytope};
pub use resolutions::BettiTable;
