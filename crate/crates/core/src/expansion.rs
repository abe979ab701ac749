//! Quantized barycenters as rational functions of the dilation `k`, and
//! their expansions at `k = infinity`.

use crate::ehrhart::{ehrhart_polynomial, fit_counts, lattice_sums};
use crate::error::{inconsistency, Error, Result};
use crate::exactnum::laurent_expand_pair;
use crate::exactnum::rational::{scale, sub};
use crate::polytope::{facet_data, measure, polytope_from_halfspaces_capped, Polytope, DEFAULT_MAX_DIM};
use crate::{int, q, LatticePoint, Polynomial, Rational, RationalFunction, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantizedBarycenter {
    pub k: i64,
    pub value: RationalVector,
}

/// `Bc_k(P)` by enumerating `kP ∩ M`.
pub fn quantized_barycenter(p: &Polytope, k: i64) -> Result<QuantizedBarycenter> {
    if k < 1 {
        return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
    }
    Ok(QuantizedBarycenter { k, value: lattice_sums(p, k)?.barycenter(k) })
}

/// Smallest integer `q` with `<u, v> + q > 0` on `P`.
pub fn canonical_offset(p: &Polytope, v: &[i64]) -> i64 {
    1 - p.support_value(v)
}

fn check_direction(p: &Polytope, v: &[i64]) -> Result<()> {
    if v.len() != p.dim() {
        return Err(Error::InvalidInput(format!(
            "direction has {} coordinates, polytope lives in dimension {}",
            v.len(),
            p.dim()
        )));
    }
    Ok(())
}

/// `{(u, h) : u in P, 0 <= h <= <u, v> + q}` assuming only `<u, v> + q >= 0`.
fn rooftop_weak(p: &Polytope, v: &[i64], q: i64) -> Result<Polytope> {
    let n = p.dim();
    let mut normals: Vec<LatticePoint> = p
        .facets()
        .iter()
        .map(|f| {
            let mut a = f.normal.clone();
            a.push(0);
            a
        })
        .collect();
    let mut offsets = p.offsets();
    let mut floor = vec![0; n + 1];
    floor[n] = 1;
    normals.push(floor);
    offsets.push(0);
    let mut roof = v.to_vec();
    roof.push(-1);
    normals.push(roof);
    offsets.push(q);
    polytope_from_halfspaces_capped(&normals, &offsets, DEFAULT_MAX_DIM + 1)
}

/// The rooftop polytope `P_{v,q}` one dimension up.
pub fn rooftop(p: &Polytope, v: &[i64], q: i64) -> Result<Polytope> {
    check_direction(p, v)?;
    if q + p.support_value(v) <= 0 {
        return Err(Error::PreconditionViolation(format!(
            "<u, v> + {q} must be positive on P; need q >= {}",
            canonical_offset(p, v)
        )));
    }
    rooftop_weak(p, v, q)
}

/// Per coordinate, `Bc_{k,i} = Q_i(k) / E_P(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycenterFunction {
    pub numerators: Vec<Polynomial>,
    pub ehrhart: Polynomial,
}

impl BarycenterFunction {
    pub fn dim(&self) -> usize {
        self.numerators.len()
    }

    pub fn component(&self, i: usize) -> Result<RationalFunction> {
        RationalFunction::new(self.numerators[i].clone(), self.ehrhart.clone())
    }

    pub fn components(&self) -> Result<Vec<RationalFunction>> {
        (0..self.dim()).map(|i| self.component(i)).collect()
    }

    pub fn eval(&self, k: i64) -> Option<RationalVector> {
        let e = self.ehrhart.eval_int(k);
        if e == int(0) {
            return None;
        }
        Some(self.numerators.iter().map(|n| n.eval_int(k) / &e).collect())
    }

    /// Numerator of `<Bc_k, v>`; the denominator is [`Self::ehrhart`].
    pub fn pairing_numerator(&self, v: &[i64]) -> Polynomial {
        self.numerators
            .iter()
            .zip(v)
            .fold(Polynomial::zero(), |acc, (n, &c)| &acc + &n.scale(&int(c)))
    }

    /// Numerator of `<Bc_k, v>` for a rational direction.
    pub fn pairing_numerator_rational(&self, v: &[Rational]) -> Polynomial {
        self.numerators
            .iter()
            .zip(v)
            .fold(Polynomial::zero(), |acc, (n, c)| &acc + &n.scale(c))
    }

    pub fn pairing(&self, v: &[i64]) -> Result<RationalFunction> {
        RationalFunction::new(self.pairing_numerator(v), self.ehrhart.clone())
    }
}

pub fn barycenter_function(p: &Polytope) -> Result<BarycenterFunction> {
    let n = p.dim();
    let ehrhart = ehrhart_polynomial(p)?.poly;
    let mut numerators = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let c = (-p.support_value(&e)).max(0);
        let roof = fit_counts(&rooftop_weak(p, &e, c)?)?;
        let dividend = &roof - &(&Polynomial::linear(int(c), int(1)) * &ehrhart);
        if dividend.coeff(0) != int(0) {
            return Err(inconsistency!("rooftop numerator for coordinate {i} has constant term {}", dividend.coeff(0)));
        }
        let (quot, rem) = dividend.div_rem(&Polynomial::monomial(int(1), 1));
        if !rem.is_zero() || quot.degree().is_some_and(|d| d > n) {
            return Err(inconsistency!("rooftop numerator for coordinate {i} is not k times a degree <= {n} polynomial"));
        }
        numerators.push(quot);
    }
    let f = BarycenterFunction { numerators, ehrhart };
    for k in 1..=n as i64 + 1 {
        let direct = quantized_barycenter(p, k)?.value;
        if f.eval(k).as_ref() != Some(&direct) {
            return Err(inconsistency!("barycenter function disagrees with enumeration at k={k}"));
        }
    }
    Ok(f)
}

/// `a_0, a_1, ...` with `Bc_k = sum_j a_j k^{-j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCoefficients {
    pub terms: Vec<RationalVector>,
}

pub fn expand(f: &BarycenterFunction, order: usize) -> Result<ExpansionCoefficients> {
    let series: Vec<Vec<Rational>> = f
        .numerators
        .iter()
        .map(|num| laurent_expand_pair(num, &f.ehrhart, order).map(|l| l.into_coeffs()))
        .collect::<Result<_>>()?;
    let terms = (0..order).map(|j| series.iter().map(|s| s[j].clone()).collect()).collect();
    Ok(ExpansionCoefficients { terms })
}

pub fn asymptotic_coefficients(p: &Polytope, order: usize) -> Result<ExpansionCoefficients> {
    if order < 1 {
        return Err(Error::InvalidInput("order must be at least 1".into()));
    }
    let out = expand(&barycenter_function(p)?, order)?;
    if out.terms[0] != measure(p).barycenter {
        return Err(inconsistency!("a_0 differs from the barycenter"));
    }
    if order >= 2 && out.terms[1] != a1_closed_form(p)? {
        return Err(inconsistency!("a_1 differs from the boundary closed form"));
    }
    Ok(out)
}

/// `a_1 = (Vol(∂P) / 2 Vol(P)) (Bc(∂P) - Bc(P))`.
pub fn a1_closed_form(p: &Polytope) -> Result<RationalVector> {
    let m = measure(p);
    let fd = facet_data(p)?;
    let factor = &fd.boundary_normalized_volume / (&m.volume * int(2));
    Ok(scale(&sub(&fd.boundary_barycenter, &m.barycenter), &factor))
}

/// `Bc_k = (k+1)(2k+1) V / (4 + 2k(k+1) V) Bc` for reflexive polygons, with
/// `V` the boundary volume.
pub fn reflexive_polygon_bck(p: &Polytope, k: i64) -> Result<RationalVector> {
    if p.dim() != 2 || !p.is_reflexive() {
        return Err(Error::Unsupported("closed form applies to reflexive polygons only".into()));
    }
    if k < 1 {
        return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
    }
    let v = facet_data(p)?.boundary_normalized_volume;
    let factor = (int((k + 1) * (2 * k + 1)) * &v) / (int(4) + int(2 * k * (k + 1)) * &v);
    Ok(scale(&measure(p).barycenter, &factor))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stabilization {
    /// `Bc_k` equals this constant for every `k`.
    Stabilizes { constant: RationalVector },
    NonConstant { first: QuantizedBarycenter, second: QuantizedBarycenter },
}

pub fn stabilization_check(p: &Polytope, ks: &[i64]) -> Result<Stabilization> {
    let n = p.dim();
    let mut sorted = ks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ks.len() || sorted.first().is_some_and(|&k| k < 1) {
        return Err(Error::InvalidInput("sample k must be distinct and positive".into()));
    }
    if ks.len() <= n {
        return Err(Error::InsufficientSamples { needed: n + 1, got: ks.len() });
    }
    let first = quantized_barycenter(p, ks[0])?;
    for &k in &ks[1..] {
        let other = quantized_barycenter(p, k)?;
        if other.value != first.value {
            return Ok(Stabilization::NonConstant { first, second: other });
        }
    }
    let f = barycenter_function(p)?;
    for (num, c) in f.numerators.iter().zip(&first.value) {
        if *num != f.ehrhart.scale(c) {
            return Err(inconsistency!(
                "Bc_k agrees at {} values of k but the barycenter function is not constant",
                ks.len()
            ));
        }
    }
    if first.value != measure(p).barycenter {
        return Err(inconsistency!("stable value differs from the barycenter"));
    }
    Ok(Stabilization::Stabilizes { constant: first.value })
}

/// Whether all vectors lie on one line through the origin.
pub fn colinearity_check(vectors: &[RationalVector]) -> Result<bool> {
    if vectors.len() < 2 {
        return Err(Error::InvalidInput("need at least two vectors".into()));
    }
    for (a, u) in vectors.iter().enumerate() {
        for w in &vectors[a + 1..] {
            if u.len() != w.len() {
                return Err(Error::InvalidInput("vectors of different dimension".into()));
            }
            for i in 0..u.len() {
                for j in i + 1..u.len() {
                    if &u[i] * &w[j] != &u[j] * &w[i] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `DF_j = <a_j(P), v>`, from the expansion of `<Bc_k, v>`.
pub fn df_coefficients(p: &Polytope, v: &[i64], order: usize) -> Result<Vec<Rational>> {
    check_direction(p, v)?;
    if order < 1 {
        return Err(Error::InvalidInput("order must be at least 1".into()));
    }
    df_from_function(&barycenter_function(p)?, v, order)
}

pub fn df_from_function(f: &BarycenterFunction, v: &[i64], order: usize) -> Result<Vec<Rational>> {
    Ok(laurent_expand_pair(&f.pairing_numerator(v), &f.ehrhart, order)?.into_coeffs())
}

/// Both sides of `E_{P_{v,q}}(k) = (qk+1) E_P(k) + sum_{u in kP} <u, v>`,
/// each counted directly.
pub fn rooftop_count_identity(p: &Polytope, v: &[i64], q: i64, k: i64) -> Result<(u64, i128)> {
    let roof = rooftop(p, v, q)?;
    let lhs = crate::ehrhart::count_points(&roof, k)?;
    let s = lattice_sums(p, k)?;
    let pairing: i128 = s.sum.iter().zip(v).map(|(a, &b)| a * b as i128).sum();
    let rhs = (q as i128 * k as i128 + 1) * s.count as i128 + pairing;
    Ok((lhs, rhs))
}

/// The vector `Bc(P)/2`, used for the reflexive identity `a_1 = Bc/2`.
pub fn half_barycenter(p: &Polytope) -> RationalVector {
    scale(&measure(p).barycenter, &q(1, 2))
}
