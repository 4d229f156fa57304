//! Exact fractional and integer hyperplane k-covers of the triangular grid
//! `T_d(n) = { x in Z_{>=0}^d : x_1 + ... + x_d <= n - 1 }`.
//!
//! The crate is organised around five layers:
//!
//! * [`grid`] — points, canonical hyperplanes and the finite candidate set;
//! * [`constructions`] — closed-form covers, mass certificates and slope constants;
//! * [`lp`] — an exact rational simplex for the fractional covering LP;
//! * [`search`] — branch-and-bound for minimum integer k-covers;
//! * [`verify`] — solver-free checks of covers and certificates, plus sweeps.
//!
//! ```
//! use tricover::{grid::GridShape, lp::f_star, rational::frac};
//! let sol = f_star(GridShape::new(5, 2).unwrap()).unwrap();
//! assert_eq!(sol.optimum, frac(18, 5));
//! ```

pub mod cli;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod grid;
pub mod lp;
pub mod rational;
pub mod search;
pub mod verify;

pub use cover::{FractionalCover, IntegerCover, MassCertificate};
pub use error::{Error, Result};
pub use grid::{GridPoint, GridShape, Hyperplane};
pub use rational::Rational;
