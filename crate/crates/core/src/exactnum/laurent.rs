use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncated expansion `sum_j c_j k^(-j)`, `j = 0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Laurent<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `k^(-j)`.
    pub fn coeff(&self, j: usize) -> &T {
        &self.coeffs[j]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs.iter().take(order).cloned().collect() }
    }
}

/// Expands `f` at `k = infinity` to `order` terms.
///
/// With `t = 1/k` and `m = deg(den)`, `f = (t^m num(1/t)) / (t^m den(1/t))`;
/// both reversed polynomials are power series in `t` and the reversed
/// denominator has nonzero constant term, so the quotient is computed by
/// exact series division.
pub fn laurent_expand<T: Scalar>(f: &RatFunc<T>, order: usize) -> Result<Laurent<T>> {
    let den_deg = f.den().degree().expect("denominator is nonzero");
    if let Some(num_deg) = f.num().degree() {
        if num_deg > den_deg {
            return Err(Error::NotBoundedAtInfinity { num: num_deg, den: den_deg });
        }
    }
    Ok(Laurent { coeffs: series_quotient(f.num(), f.den(), den_deg, order) })
}

/// Expansion of `num/den` without requiring the pair to be reduced.
pub fn laurent_expand_pair<T: Scalar>(num: &Poly<T>, den: &Poly<T>, order: usize) -> Result<Laurent<T>> {
    let den_deg = den
        .degree()
        .ok_or_else(|| Error::InvalidInput("zero denominator".into()))?;
    if let Some(num_deg) = num.degree() {
        if num_deg > den_deg {
            return Err(Error::NotBoundedAtInfinity { num: num_deg, den: den_deg });
        }
    }
    Ok(Laurent { coeffs: series_quotient(num, den, den_deg, order) })
}

fn series_quotient<T: Scalar>(num: &Poly<T>, den: &Poly<T>, m: usize, order: usize) -> Vec<T> {
    // reversed coefficient sequences: r[i] = coeff of k^(m-i)
    let rn: Vec<T> = (0..=m).map(|i| num.coeff(m - i)).collect();
    let rd: Vec<T> = (0..=m).map(|i| den.coeff(m - i)).collect();
    let d0 = rd[0].clone();
    let mut out: Vec<T> = Vec::with_capacity(order);
    for j in 0..order {
        let mut acc = rn.get(j).cloned().unwrap_or_else(T::zero);
        for i in 1..=j.min(m) {
            acc = acc - rd[i].clone() * out[j - i].clone();
        }
        out.push(acc / d0.clone());
    }
    out
}
