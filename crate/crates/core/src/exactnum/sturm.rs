//! Exact real-root isolation by Sturm sequences.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{Polynomial, Rational};

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(chain: &[Polynomial], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Upper bound on the absolute value of every real root (Cauchy).
pub fn root_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    max + Rational::one()
}

/// Disjoint intervals `(lo, hi]` of width below one, each holding exactly
/// one distinct real root of `p` inside `(from, bound]`.
pub fn isolate_roots(p: &Polynomial, from: &Rational) -> Vec<(Rational, Rational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let g = Polynomial::gcd(p, &p.derivative());
    let (square_free, _) = p.div_rem(&g);
    let chain = sturm_chain(&square_free);
    let mut lo = from.clone();
    while square_free.eval(&lo).is_zero() {
        lo -= Rational::new(BigInt::one(), BigInt::from(3));
    }
    let mut hi = root_bound(&square_free);
    if hi <= lo {
        return Vec::new();
    }
    while square_free.eval(&hi).is_zero() {
        hi += Rational::one();
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let count = variations(&chain, &a) - variations(&chain, &b);
        if count == 0 {
            continue;
        }
        if count == 1 && &b - &a < Rational::one() {
            out.push((a, b));
            continue;
        }
        let two = Rational::from_integer(BigInt::from(2));
        let mut mid = (&a + &b) / &two;
        let mut step = (&b - &a) / Rational::from_integer(BigInt::from(7));
        while square_free.eval(&mid).is_zero() {
            mid += &step;
            step /= &two;
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Largest integer `k >= from` with `p(k) < 0`, or `None` if `p` is
/// nonnegative on every integer from `from` on.
///
/// Requires a positive leading coefficient (so `p` is eventually positive).
pub fn last_negative_integer(p: &Polynomial, from: i64) -> Result<Option<i64>> {
    let Some(lead) = p.leading() else {
        return Ok(None);
    };
    if lead.is_negative() {
        return Err(Error::InvalidInput("polynomial is eventually negative".into()));
    }
    let start = Rational::from_integer(BigInt::from(from)) - Rational::new(BigInt::one(), BigInt::from(2));
    let mut best: Option<i64> = None;
    for (lo, hi) in isolate_roots(p, &start) {
        let a = lo.floor().to_integer();
        let b = hi.ceil().to_integer();
        let mut k = a.clone();
        while k <= b {
            if let Some(ki) = k.to_i64() {
                if ki >= from && p.eval_int(ki).is_negative() && best.is_none_or(|x| ki > x) {
                    best = Some(ki);
                }
            }
            k += 1;
        }
    }
    Ok(best)
}
