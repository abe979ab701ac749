//! Exact quantized barycenters of lattice polytopes.
//!
//! For a lattice polytope `P` the k-th quantized barycenter is the average of
//! the lattice points of `kP`, divided by `k`. This crate computes those
//! points exactly, writes each coordinate as a quotient of polynomials in
//! `k`, expands it at `k = infinity`, and derives the toric stability
//! thresholds `delta_k` and Donaldson-Futaki coefficients that depend on it.
//!
//! The univariate algebra in [`exactnum`] is generic over [`Scalar`]; the
//! geometry works over [`Rational`].

pub mod ehrhart;
pub mod error;
pub mod exactnum;
pub mod expansion;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod scalar;
pub mod stability;
pub mod toricrr;

pub use error::{Error, Result};
pub use exactnum::rational::{int, q};
pub use scalar::Scalar;

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Point of `M (x) Q`.
pub type RationalVector = Vec<Rational>;
/// Lattice point of `M = Z^n`.
pub type LatticePoint = Vec<i64>;

pub type Polynomial = exactnum::Poly<Rational>;
pub type RationalFunction = exactnum::RatFunc<Rational>;
pub type LaurentSeries = exactnum::Laurent<Rational>;

pub type PolynomialF64 = exactnum::Poly<f64>;
pub type RationalFunctionF64 = exactnum::RatFunc<f64>;
pub type LaurentSeriesF64 = exactnum::Laurent<f64>;
