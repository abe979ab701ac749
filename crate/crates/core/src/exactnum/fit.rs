use std::collections::HashSet;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exact interpolation through `(k, value)` samples.
///
/// Returns the unique polynomial of degree below the sample count, built
/// from Newton divided differences.
pub fn poly_fit<T: Scalar>(samples: &[(i64, T)]) -> Result<Poly<T>> {
    if samples.is_empty() {
        return Err(Error::InvalidInput("poly_fit needs at least one sample".into()));
    }
    let mut seen = HashSet::new();
    for (k, _) in samples {
        if !seen.insert(*k) {
            return Err(Error::InvalidInput(format!("duplicate abscissa {k}")));
        }
    }
    let xs: Vec<T> = samples.iter().map(|(k, _)| T::from_int(*k)).collect();
    let mut dd: Vec<T> = samples.iter().map(|(_, v)| v.clone()).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
        }
    }
    // Horner on the Newton basis
    let mut out = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Poly::linear(T::one(), -xs[i].clone());
        out = &(&out * &factor) + &Poly::constant(dd[i].clone());
    }
    Ok(out)
}
