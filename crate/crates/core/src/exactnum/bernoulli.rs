use crate::scalar::Scalar;

/// Bernoulli numbers in the Todd convention, `x/(1-e^(-x)) = sum B_j x^j / j!`.
///
/// This is the `B_1 = +1/2` sequence, produced by the recurrence
/// `sum_{i<=m} C(m+1, i) B_i = m + 1`.
pub fn bernoulli_table<T: Scalar>(max_j: usize) -> Vec<T> {
    let mut b: Vec<T> = Vec::with_capacity(max_j + 1);
    for m in 0..=max_j {
        let mut acc = T::from_int(m as i64 + 1);
        let mut binom = T::one(); // C(m+1, i)
        for (i, bi) in b.iter().enumerate() {
            acc = acc - binom.clone() * bi.clone();
            binom = binom * T::from_int((m + 1 - i) as i64) / T::from_int(i as i64 + 1);
        }
        b.push(acc / binom);
    }
    b
}

pub fn bernoulli<T: Scalar>(j: usize) -> T {
    bernoulli_table::<T>(j).pop().expect("table has j+1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Rational};
    use num_traits::{One, Zero};

    /// Coefficients of `x/(1-e^(-x))` by inverting the series of
    /// `(1-e^(-x))/x = sum (-1)^j x^j/(j+1)!`.
    fn todd_series(order: usize) -> Vec<Rational> {
        let mut fact = Rational::one();
        let mut g = Vec::new();
        for j in 0..order {
            fact *= Rational::from_integer((j as i64 + 1).into());
            let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            g.push(sign / &fact);
        }
        let mut inv: Vec<Rational> = Vec::new();
        for j in 0..order {
            let mut acc = if j == 0 { Rational::one() } else { Rational::zero() };
            for i in 1..=j {
                acc -= &g[i] * &inv[j - i];
            }
            inv.push(acc / &g[0]);
        }
        inv
    }

    #[test]
    fn todd_convention_values() {
        assert_eq!(bernoulli::<Rational>(0), q(1, 1));
        assert_eq!(bernoulli::<Rational>(1), q(1, 2));
        assert_eq!(bernoulli::<Rational>(2), q(1, 6));
        assert_eq!(bernoulli::<Rational>(3), q(0, 1));
        assert_eq!(bernoulli::<Rational>(4), q(-1, 30));
        // B_4/4! is the x^4 coefficient of the Todd series
        assert_eq!(bernoulli::<Rational>(4) / q(24, 1), q(-1, 720));
    }

    #[test]
    fn matches_series_inversion() {
        let series = todd_series(16);
        let table = bernoulli_table::<Rational>(15);
        let mut fact = Rational::one();
        for j in 0..16 {
            if j > 0 {
                fact *= Rational::from_integer((j as i64).into());
            }
            assert_eq!(&table[j] / &fact, series[j], "j = {j}");
        }
    }
}
