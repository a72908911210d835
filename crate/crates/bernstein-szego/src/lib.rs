//! Exact arithmetic for Bernstein-Szego polynomials attached to root systems.
//!
//! A family of Weyl-group symmetric Laurent polynomials `p_lambda` indexed by
//! dominant weights of an irreducible reduced crystallographic root system
//! (rank <= 4, types A-D, G2, F4). The family interpolates between Weyl
//! characters (no parameters) and Hall-Littlewood polynomials (one parameter
//! per root length), and is biorthogonal to the dominant monomial basis with
//! respect to a torus inner product whose weight function is built from
//! finite Szego factors `c(z) = prod_m (1 + t_m z)`, one factor family per
//! root length class.
//!
//! Everything downstream of floating point lives in [`oracle`]; every other
//! module computes over `BigRational` and integer lattice data, so equalities
//! asserted by the verification suites are exact, not approximate.
//!
//! Module map:
//! - [`rootsys`]: Cartan data, positive roots, length classes, height stats.
//! - [`weylgrp`]: Weyl group enumeration, orbits, stabilizers, Poincare series.
//! - [`weightlat`]: weights, dominance order, saturated sets, depth measures.
//! - [`symalg`]: exponential sums, monomial symmetric functions, characters.
//! - [`bszcore`]: the polynomials themselves, norms, exact pairings.
//! - [`univariate`]: the classical rank-one closed forms, kept independent.
//! - [`oracle`]: quadrature on the torus, numeric Gram-Schmidt, shallow scans.
//! - [`verify`]: the exhaustive check suites shared by tests and the CLI.
//! - [`cli`]: everything behind the `bsz` binary.

#![forbid(unsafe_code)]
// Index loops over parallel arrays (Cartan columns, lattice coordinates,
// dense rows) stay as index loops.
#![allow(clippy::needless_range_loop)]

pub mod bszcore;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod rootsys;
pub mod symalg;
pub mod univariate;
pub mod verify;
pub mod weightlat;
pub mod weylgrp;

pub use error::{Error, Result};
pub use rational::Rat;
pub use rootsys::{RootSystem, SystemName};
pub use weightlat::Weight;
