//! Integer linear algebra over `M = Z^n`: Hermite normal form, primitive
//! vectors and bases of hyperplane sublattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{LatticePoint, Rational};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        Self { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Row as machine integers; `None` on overflow.
    pub fn row_i64(&self, r: usize) -> Option<Vec<i64>> {
        self.row(r).iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidInput("matrix dimension mismatch".into()));
        }
        let mut entries = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        IntegerMatrix::new(self.rows, rhs.cols, entries)
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let rows: Vec<Vec<BigInt>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        Ok(bareiss_det(rows))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] -= factor * row[source]`
    fn sub_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let s = self.entries[source * self.cols + c].clone();
            self.entries[target * self.cols + c] -= factor * s;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.entries[idx] = -self.entries[idx].clone();
        }
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant of a square machine-integer matrix.
pub fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    bareiss_det(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Row Hermite normal form `H = U * A` with `U` unimodular.
///
/// Pivots are positive and entries above each pivot are reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(a.rows);
    let mut pivot = 0;
    for col in 0..a.cols {
        if pivot == a.rows {
            break;
        }
        loop {
            let best = (pivot..a.rows)
                .filter(|&r| !h.get(r, col).is_zero())
                .min_by(|&x, &y| h.get(x, col).abs().cmp(&h.get(y, col).abs()).then(x.cmp(&y)));
            let Some(best) = best else { break };
            h.swap_rows(pivot, best);
            u.swap_rows(pivot, best);
            let mut clean = true;
            for r in pivot + 1..a.rows {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let f = h.get(r, col).div_floor(h.get(pivot, col));
                h.sub_row(r, pivot, &f);
                u.sub_row(r, pivot, &f);
                clean &= h.get(r, col).is_zero();
            }
            if clean {
                break;
            }
        }
        if h.get(pivot, col).is_zero() {
            continue;
        }
        if h.get(pivot, col).is_negative() {
            h.negate_row(pivot);
            u.negate_row(pivot);
        }
        for r in 0..pivot {
            let f = h.get(r, col).div_floor(h.get(pivot, col));
            if !f.is_zero() {
                h.sub_row(r, pivot, &f);
                u.sub_row(r, pivot, &f);
            }
        }
        pivot += 1;
    }
    (h, u)
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides out the content of `v`.
pub fn primitive(v: &[i64]) -> Result<Vec<i64>> {
    let g = gcd_slice(v);
    if g == 0 {
        return Err(Error::InvalidInput("zero vector has no primitive direction".into()));
    }
    Ok(v.iter().map(|x| x / g).collect())
}

/// A basis of `{u in Z^n : <u, v> = 0}` together with a vector `w` such
/// that `<w, v> = 1`; the rows `[basis; w]` form a unimodular matrix.
pub fn hyperplane_basis_with_complement(v: &[i64]) -> Result<(Vec<LatticePoint>, LatticePoint)> {
    if gcd_slice(v) != 1 {
        return Err(Error::InvalidInput(format!("{v:?} is not a primitive vector")));
    }
    let n = v.len();
    let col = IntegerMatrix::new(n, 1, v.iter().map(|&x| BigInt::from(x)).collect())?;
    let (h, u) = hermite_normal_form(&col);
    debug_assert!(h.get(0, 0).is_one());
    let overflow = || Error::InvalidInput("lattice basis entry exceeds i64".into());
    let complement = u.row_i64(0).ok_or_else(overflow)?;
    let mut basis = Vec::with_capacity(n - 1);
    for r in 1..n {
        let mut b = u.row_i64(r).ok_or_else(overflow)?;
        if b.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            b.iter_mut().for_each(|x| *x = -*x);
        }
        basis.push(b);
    }
    Ok((basis, complement))
}

pub fn hyperplane_basis(v: &[i64]) -> Result<Vec<LatticePoint>> {
    hyperplane_basis_with_complement(v).map(|(b, _)| b)
}

/// Integer coordinates on the affine hyperplane `<u, normal> = <origin, normal>`.
#[derive(Clone, Debug)]
pub struct AffineLatticeChart {
    origin: LatticePoint,
    basis: Vec<LatticePoint>,
    normal: Vec<i64>,
    // inverse of the unimodular matrix with rows [basis; complement]
    inverse: Vec<Vec<i64>>,
}

impl AffineLatticeChart {
    pub fn new(origin: LatticePoint, normal: &[i64]) -> Result<Self> {
        let (basis, complement) = hyperplane_basis_with_complement(normal)?;
        let mut rows: Vec<Vec<Rational>> = basis
            .iter()
            .chain(std::iter::once(&complement))
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let inv = invert(&mut rows).ok_or_else(|| Error::InternalInconsistency("singular chart matrix".into()))?;
        let inverse = inv
            .iter()
            .map(|r| r.iter().map(|x| x.to_integer().to_i64().expect("unimodular inverse")).collect())
            .collect();
        Ok(Self { origin, basis, normal: normal.to_vec(), inverse })
    }

    pub fn origin(&self) -> &[i64] {
        &self.origin
    }

    pub fn basis(&self) -> &[LatticePoint] {
        &self.basis
    }

    /// Chart coordinates of a lattice point on the hyperplane.
    pub fn to_chart(&self, u: &[i64]) -> Result<LatticePoint> {
        let n = u.len();
        let d: Vec<i64> = u.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        let c: Vec<i64> = (0..n).map(|j| (0..n).map(|i| d[i] * self.inverse[i][j]).sum()).collect();
        if c[n - 1] != 0 {
            return Err(Error::InvalidInput(format!(
                "{u:?} is not on the hyperplane with normal {:?}",
                self.normal
            )));
        }
        Ok(c[..n - 1].to_vec())
    }

    pub fn from_chart(&self, c: &[i64]) -> LatticePoint {
        let mut out = self.origin.clone();
        for (cj, b) in c.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += cj * x;
            }
        }
        out
    }

    /// Pulls a rational chart point back to ambient coordinates.
    pub fn from_chart_rational(&self, c: &[Rational]) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.origin.iter().map(|&x| Rational::from_integer(x.into())).collect();
        for (cj, b) in c.iter().zip(&self.basis) {
            for (o, &x) in out.iter_mut().zip(b) {
                *o += cj * BigInt::from(x);
            }
        }
        out
    }
}

/// Gauss-Jordan inverse over the rationals; `None` if singular.
pub fn invert(m: &mut [Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let piv = m[c][c].clone();
        for j in 0..n {
            m[c][j] = &m[c][j] / &piv;
            inv[c][j] = &inv[c][j] / &piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..n {
                    let (a, b) = (&m[c][j] * &f, &inv[c][j] * &f);
                    m[r][j] -= a;
                    inv[r][j] -= b;
                }
            }
        }
    }
    Some(inv)
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let d = &m[r][j] * &f;
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn rank_i64<V: AsRef<[i64]>>(rows: &[V]) -> usize {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    rank(&rows)
}

/// Dimension of the affine hull; `None` for an empty set.
pub fn affine_dim<V: AsRef<[i64]>>(points: &[V]) -> Option<usize> {
    let first = points.first()?.as_ref();
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.as_ref().iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank_i64(&diffs))
}

/// Solves `sum_i x_i rows[i] = target` when the rows are independent.
pub fn solve_combination(rows: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = rows.len();
    let n = target.len();
    // augmented system, one equation per coordinate
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|c| {
            let mut eq: Vec<Rational> = rows.iter().map(|r| Rational::from_integer(r[c].into())).collect();
            eq.push(Rational::from_integer(target[c].into()));
            eq
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let p = (r..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let piv = m[r][c].clone();
        for j in 0..=k {
            m[r][j] = &m[r][j] / &piv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let d = &m[r][j] * &f;
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if m[r..].iter().any(|eq| !eq[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&p| m[p][k].clone()).collect())
}
