//! Exact scalars, univariate polynomials, rational functions, expansions at
//! infinity and Todd-convention Bernoulli numbers.

mod bernoulli;
mod fit;
mod laurent;
mod poly;
mod ratfunc;
pub mod rational;
pub mod sturm;

pub use bernoulli::{bernoulli, bernoulli_table};
pub use fit::poly_fit;
pub use laurent::{laurent_expand, laurent_expand_pair, Laurent};
pub use poly::Poly;
pub use ratfunc::RatFunc;
