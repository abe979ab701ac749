//! Double description: extreme rays of a pointed cone `{x : A x >= 0}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::invert;
use crate::Rational;

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
    v
}

/// Extreme rays of `{x : row . x >= 0 for every row}`, each primitive.
///
/// Returns `None` when the rows do not have full column rank, i.e. the cone
/// contains a line.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let m = rows.first()?.len();
    let n_rows = rows.len();

    // greedy row basis
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r: Vec<Rational> = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
        for e in &echelon {
            let p = e.iter().position(|x| !x.is_zero()).unwrap();
            if !r[p].is_zero() {
                let f = &r[p] / &e[p];
                for j in 0..m {
                    let d = &e[j] * &f;
                    r[j] -= d;
                }
            }
        }
        if r.iter().any(|x| !x.is_zero()) {
            echelon.push(r);
            basis.push(i);
            if basis.len() == m {
                break;
            }
        }
    }
    if basis.len() < m {
        return None;
    }

    let mut sub: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&i| rows[i].iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let inv = invert(&mut sub)?;
    let mut rays: Vec<Ray> = (0..m)
        .map(|j| {
            let col: Vec<Rational> = (0..m).map(|i| inv[i][j].clone()).collect();
            let den = col.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
            let v = make_primitive(col.iter().map(|x| (x * &den).to_integer()).collect());
            let mut zeros = BitSet::new(n_rows);
            for (jj, &b) in basis.iter().enumerate() {
                if jj != j {
                    zeros.insert(b);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let in_basis: Vec<bool> = (0..n_rows).map(|i| basis.contains(&i)).collect();
    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        if neg.is_empty() {
            for (j, r) in rays.iter_mut().enumerate() {
                if vals[j].is_zero() {
                    r.zeros.insert(i);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < m {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(j, r)| j == p || j == q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let (a, b) = (&vals[p], -&vals[q]);
                let v = make_primitive(
                    rays[q].v.iter().zip(&rays[p].v).map(|(x, y)| a * x + &b * y).collect(),
                );
                let mut zeros = common;
                zeros.insert(i);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (j, mut r) in rays.into_iter().enumerate() {
            if vals[j].is_negative() {
                continue;
            }
            if vals[j].is_zero() {
                r.zeros.insert(i);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Some(rays.into_iter().map(|r| r.v).collect())
}
