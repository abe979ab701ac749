use std::fmt;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Reduced quotient of two polynomials in `k`.
///
/// Stored with a monic denominator and no common factor, so two equal
/// functions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self { num, den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = T::one() / lead;
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_int(&self, k: i64) -> Option<T> {
        self.eval(&T::from_int(k))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    /// Multiplicative inverse; errors on the zero function.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<T: Scalar> fmt::Debug for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RatFunc").field("num", &self.num).field("den", &self.den).finish()
    }
}

#[cfg(test)]
mod tests {
    use crate::{q, Polynomial, RationalFunction};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&x| q(x, 1)).collect())
    }

    #[test]
    fn reduces_common_factor() {
        let f = RationalFunction::new(p(&[1, 3, 2]), p(&[6, 24, 24])).unwrap();
        // (k+1)/(12k+6) with monic denominator
        assert_eq!(f.den(), &Polynomial::new(vec![q(1, 2), q(1, 1)]));
        assert_eq!(f.num(), &Polynomial::new(vec![q(1, 12), q(1, 12)]));
        assert_eq!(f.eval_int(1), Some(q(1, 9)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p(&[1]), p(&[])).is_err());
    }

    #[test]
    fn arithmetic_matches_pointwise() {
        let f = RationalFunction::new(p(&[1, 1]), p(&[2, 0, 1])).unwrap();
        let g = RationalFunction::new(p(&[3]), p(&[1, 1])).unwrap();
        for k in 1..5 {
            let (fk, gk) = (f.eval_int(k).unwrap(), g.eval_int(k).unwrap());
            assert_eq!(f.add(&g).eval_int(k).unwrap(), &fk + &gk);
            assert_eq!(f.sub(&g).eval_int(k).unwrap(), &fk - &gk);
            assert_eq!(f.mul(&g).eval_int(k).unwrap(), &fk * &gk);
        }
        assert_eq!(f.sub(&f), RationalFunction::zero());
    }
}
