//! Virtual polytopes, mixed volumes, and the Bernoulli-number formulas for
//! Ehrhart coefficients of Delzant polytopes.

use std::collections::{BTreeSet, HashMap};

use crate::ehrhart::fit_counts;
use crate::error::{inconsistency, Error, Result};
use crate::exactnum::bernoulli_table;
use crate::expansion::{canonical_offset, rooftop};
use crate::polytope::{minkowski_sum, polytope_from_halfspaces_capped, Body, Polytope, DEFAULT_MAX_DIM};
use crate::{int, LatticePoint, Polynomial, Rational};

/// Formal integer combination of possibly degenerate lattice polytopes.
#[derive(Clone, Debug)]
pub struct VirtualPolytope {
    dim: usize,
    terms: Vec<(i64, Body)>,
}

impl VirtualPolytope {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    pub fn from_body(b: Body) -> Self {
        Self { dim: b.ambient_dim(), terms: vec![(1, b)] }
    }

    pub fn from_terms(dim: usize, terms: Vec<(i64, Body)>) -> Result<Self> {
        if terms.iter().any(|(_, b)| b.ambient_dim() != dim) {
            return Err(Error::InvalidInput("virtual polytope terms in different dimensions".into()));
        }
        Ok(Self { dim, terms: terms.into_iter().filter(|(c, _)| *c != 0).collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(i64, Body)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.dim, terms)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { dim: self.dim, terms: self.terms.iter().filter(|_| c != 0).map(|(a, b)| (a * c, b.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    /// Minkowski sums of the positive and of the negated negative parts.
    pub fn normal_form(&self) -> Result<(Body, Body)> {
        let mut pos = Body::point(vec![0; self.dim]);
        let mut neg = Body::point(vec![0; self.dim]);
        for (c, b) in &self.terms {
            let scaled = dilate_body(b, c.abs())?;
            if *c > 0 {
                pos = minkowski_sum(&pos, &scaled)?;
            } else {
                neg = minkowski_sum(&neg, &scaled)?;
            }
        }
        Ok((pos, neg))
    }

    /// `A - B ~ C - D` iff `A + D = C + B`.
    pub fn grothendieck_eq(&self, other: &Self) -> Result<bool> {
        if self.dim != other.dim {
            return Ok(false);
        }
        let (a, b) = self.normal_form()?;
        let (c, d) = other.normal_form()?;
        Ok(minkowski_sum(&a, &d)?.same_set(&minkowski_sum(&c, &b)?))
    }
}

fn dilate_body(b: &Body, c: i64) -> Result<Body> {
    let pts: Vec<LatticePoint> = b.vertices().iter().map(|u| u.iter().map(|x| x * c).collect()).collect();
    Body::from_points(&pts)
}

/// Mixed volumes with memoized Minkowski-sum volumes.
pub struct MixedVolumes {
    dim: usize,
    bodies: Vec<Body>,
    sum_volumes: HashMap<Vec<usize>, Rational>,
    mixed: HashMap<Vec<usize>, Rational>,
    factorial: Rational,
}

impl MixedVolumes {
    pub fn new(dim: usize) -> Self {
        let factorial = (1..=dim as i64).fold(int(1), |acc, i| acc * int(i));
        Self { dim, bodies: Vec::new(), sum_volumes: HashMap::new(), mixed: HashMap::new(), factorial }
    }

    fn id(&mut self, b: &Body) -> usize {
        if let Some(i) = self.bodies.iter().position(|x| x.same_set(b)) {
            return i;
        }
        self.bodies.push(b.clone());
        self.bodies.len() - 1
    }

    fn sum_volume(&mut self, ids: &[usize]) -> Result<Rational> {
        if let Some(v) = self.sum_volumes.get(ids) {
            return Ok(v.clone());
        }
        let mut acc = self.bodies[ids[0]].clone();
        for &i in &ids[1..] {
            acc = minkowski_sum(&acc, &self.bodies[i])?;
        }
        let v = acc.volume();
        self.sum_volumes.insert(ids.to_vec(), v.clone());
        Ok(v)
    }

    /// `V(K_1, ..., K_n)` of actual bodies by inclusion-exclusion.
    fn of_bodies(&mut self, ids: &[usize]) -> Result<Rational> {
        let mut key = ids.to_vec();
        key.sort_unstable();
        if let Some(v) = self.mixed.get(&key) {
            return Ok(v.clone());
        }
        let n = key.len();
        let mut total = int(0);
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| key[i]).collect();
            let vol = self.sum_volume(&subset)?;
            if (n - subset.len()).is_multiple_of(2) {
                total += vol;
            } else {
                total -= vol;
            }
        }
        let v = total / &self.factorial;
        self.mixed.insert(key, v.clone());
        Ok(v)
    }

    /// Multilinear extension over virtual arguments, one per slot.
    pub fn of_slots(&mut self, slots: &[&VirtualPolytope]) -> Result<Rational> {
        if slots.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "mixed volume in dimension {} needs {} arguments, got {}",
                self.dim,
                self.dim,
                slots.len()
            )));
        }
        if slots.iter().any(|s| s.dim() != self.dim) {
            return Err(Error::InvalidInput("mixed volume arguments in the wrong dimension".into()));
        }
        let ids: Vec<Vec<(i64, usize)>> = slots
            .iter()
            .map(|s| s.terms().iter().map(|(c, b)| (*c, self.id(b))).collect())
            .collect();
        let mut total = int(0);
        let mut choice = vec![0usize; ids.len()];
        if ids.iter().any(Vec::is_empty) {
            return Ok(total);
        }
        loop {
            let coeff: i64 = choice.iter().zip(&ids).map(|(&c, terms)| terms[c].0).product();
            let chosen: Vec<usize> = choice.iter().zip(&ids).map(|(&c, terms)| terms[c].1).collect();
            total += int(coeff) * self.of_bodies(&chosen)?;
            let mut i = 0;
            loop {
                if i == ids.len() {
                    return Ok(total);
                }
                choice[i] += 1;
                if choice[i] < ids[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// `V(A_1, m_1; ...; A_r, m_r)`.
    pub fn of_multiplicities(&mut self, args: &[(&VirtualPolytope, usize)]) -> Result<Rational> {
        let total: usize = args.iter().map(|(_, m)| m).sum();
        if total != self.dim {
            return Err(Error::InvalidInput(format!(
                "multiplicities sum to {total}, expected {}",
                self.dim
            )));
        }
        let slots: Vec<&VirtualPolytope> = args.iter().flat_map(|(a, m)| std::iter::repeat_n(*a, *m)).collect();
        self.of_slots(&slots)
    }
}

/// `V(A_1, m_1; ...; A_r, m_r)` for virtual polytopes with multiplicities
/// summing to the ambient dimension.
pub fn mixed_volume(args: &[(VirtualPolytope, usize)]) -> Result<Rational> {
    let dim = args
        .first()
        .ok_or_else(|| Error::InvalidInput("no mixed volume arguments".into()))?
        .0
        .dim();
    if args.iter().any(|(_, m)| *m == 0) {
        return Err(Error::InvalidInput("multiplicities must be positive".into()));
    }
    let borrowed: Vec<(&VirtualPolytope, usize)> = args.iter().map(|(a, m)| (a, *m)).collect();
    MixedVolumes::new(dim).of_multiplicities(&borrowed)
}

/// Fan data `(v_i, b_i)` together with the polytope they cut out.
#[derive(Clone, Debug)]
pub struct ToricData {
    rays: Vec<LatticePoint>,
    offsets: Vec<i64>,
    polytope: Polytope,
    delzant: bool,
    reflexive: bool,
}

impl ToricData {
    /// Every inequality must define a facet and every ray be primitive.
    pub fn new(rays: Vec<LatticePoint>, offsets: Vec<i64>) -> Result<Self> {
        Self::with_cap(rays, offsets, DEFAULT_MAX_DIM)
    }

    fn with_cap(rays: Vec<LatticePoint>, offsets: Vec<i64>, cap: usize) -> Result<Self> {
        let polytope = polytope_from_halfspaces_capped(&rays, &offsets, cap)?;
        if polytope.normals() != rays {
            return Err(Error::InvalidInput(
                "every ray must be primitive and define a facet of the polytope".into(),
            ));
        }
        let c = polytope.classify();
        Ok(Self { rays, offsets, polytope, delzant: c.delzant, reflexive: c.reflexive })
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        let c = p.classify();
        Self { rays: p.normals(), offsets: p.offsets(), polytope: p.clone(), delzant: c.delzant, reflexive: c.reflexive }
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn is_delzant(&self) -> bool {
        self.delzant
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive
    }

    fn require_delzant(&self) -> Result<()> {
        if !self.delzant {
            return Err(Error::PreconditionViolation("the polytope is not Delzant".into()));
        }
        Ok(())
    }
}

/// Largest `m` tried when shifting a divisor by `mL` to make it ample.
pub const AMPLE_SHIFT_CAP: u32 = 16;

/// Sets of facets meeting at each vertex.
fn vertex_cones(p: &Polytope) -> BTreeSet<Vec<usize>> {
    (0..p.vertices().len())
        .map(|w| (0..p.facets().len()).filter(|&f| p.incidence()[f].binary_search(&w).is_ok()).collect())
        .collect()
}

/// Same facet normals alone is not enough from dimension 3 on: the vertex
/// cones must match too.
fn same_fan(t: &ToricData, offsets: &[i64]) -> Option<Polytope> {
    let p = polytope_from_halfspaces_capped(&t.rays, offsets, t.dim()).ok()?;
    (p.normals() == t.rays && vertex_cones(&p) == vertex_cones(&t.polytope)).then_some(p)
}

/// The virtual polytope `P_D` of `D = sum_i c_i D_i`.
pub fn divisor_polytope(t: &ToricData, coeffs: &[i64]) -> Result<VirtualPolytope> {
    t.require_delzant()?;
    if coeffs.len() != t.rays.len() {
        return Err(Error::InvalidInput(format!(
            "{} coefficients for {} rays",
            coeffs.len(),
            t.rays.len()
        )));
    }
    let n = t.dim();
    if coeffs.iter().all(|&c| c == 0) {
        return Ok(VirtualPolytope::from_body(Body::point(vec![0; n])));
    }
    if let Some(p) = same_fan(t, coeffs) {
        return Ok(VirtualPolytope::from_body(Body::Full(p)));
    }
    for m in 1..=AMPLE_SHIFT_CAP as i64 {
        let shifted: Vec<i64> = t.offsets.iter().zip(coeffs).map(|(b, c)| m * b + c).collect();
        if let Some(p) = same_fan(t, &shifted) {
            let base = t.polytope.dilate(m)?;
            return VirtualPolytope::from_terms(n, vec![(1, Body::Full(p)), (-1, Body::Full(base))]);
        }
    }
    Err(Error::AmplenessShiftFailure { cap: AMPLE_SHIFT_CAP })
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; d];
    e[i] = 1;
    e
}

/// Calls `f` on every `l` in `N^d` with `sum l = total`.
fn compositions(d: usize, total: usize, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(
        parts: &mut Vec<usize>,
        d: usize,
        left: usize,
        f: &mut impl FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if parts.len() + 1 == d {
            parts.push(left);
            let r = f(parts);
            parts.pop();
            return r;
        }
        for x in 0..=left {
            parts.push(x);
            rec(parts, d, left - x, f)?;
            parts.pop();
        }
        Ok(())
    }
    if d == 0 {
        return if total == 0 { f(&[]) } else { Ok(()) };
    }
    rec(&mut Vec::with_capacity(d), d, total, f)
}

/// `sum_{sum l = N - j} N! prod B_{l_i} / (j! prod l_i!) V(main, j; D_1, l_1; ...)`
fn bernoulli_sum(
    mv: &mut MixedVolumes,
    main: &VirtualPolytope,
    divisors: &[VirtualPolytope],
    j: usize,
) -> Result<Rational> {
    let big_n = mv.dim;
    let b: Vec<Rational> = bernoulli_table(big_n);
    let fact: Vec<Rational> = (0..=big_n).scan(int(1), |acc, i| {
        if i > 0 {
            *acc = &*acc * int(i as i64);
        }
        Some(acc.clone())
    })
    .collect();
    let mut total = int(0);
    compositions(divisors.len(), big_n - j, &mut |ls: &[usize]| {
        let mut coeff = fact[big_n].clone() / &fact[j];
        for &l in ls {
            coeff = coeff * &b[l] / &fact[l];
        }
        if coeff == int(0) {
            return Ok(());
        }
        let mut args: Vec<(&VirtualPolytope, usize)> = Vec::new();
        if j > 0 {
            args.push((main, j));
        }
        for (dv, &l) in divisors.iter().zip(ls) {
            if l > 0 {
                args.push((dv, l));
            }
        }
        total += coeff * mv.of_multiplicities(&args)?;
        Ok(())
    })?;
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrrCoefficients {
    /// `a_0, ..., a_n`
    pub coeffs: Vec<Rational>,
    /// `Vol(P)`
    pub top: Rational,
    /// `(n/2) V(P, n-1; P_{-K}, 1)`
    pub anticanonical: Rational,
}

/// Ehrhart coefficients from mixed volumes of divisor polytopes, checked
/// against the fitted Ehrhart polynomial.
pub fn hrr_coefficients(t: &ToricData) -> Result<HrrCoefficients> {
    t.require_delzant()?;
    let n = t.dim();
    let d = t.rays.len();
    let p = VirtualPolytope::from_body(Body::Full(t.polytope.clone()));
    let divisors: Vec<VirtualPolytope> = (0..d).map(|i| divisor_polytope(t, &unit(d, i))).collect::<Result<_>>()?;
    let mut mv = MixedVolumes::new(n);
    let coeffs: Vec<Rational> = (0..=n).map(|j| bernoulli_sum(&mut mv, &p, &divisors, j)).collect::<Result<_>>()?;
    let top = crate::polytope::measure(&t.polytope).volume;
    let anticanonical = if n >= 1 {
        let minus_k = divisor_polytope(t, &vec![1; d])?;
        let mut args = vec![(&minus_k, 1)];
        if n > 1 {
            args.insert(0, (&p, n - 1));
        }
        int(n as i64) / int(2) * mv.of_multiplicities(&args)?
    } else {
        int(0)
    };
    let fitted = fit_counts(&t.polytope)?;
    let from_formula = Polynomial::new(coeffs.clone());
    if from_formula != fitted {
        return Err(inconsistency!("mixed-volume coefficients {from_formula} differ from Ehrhart fit {fitted}"));
    }
    if coeffs[n] != top || coeffs[n - 1] != anticanonical {
        return Err(inconsistency!("named specializations of the top coefficients disagree"));
    }
    Ok(HrrCoefficients { coeffs, top, anticanonical })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RooftopCoefficients {
    pub q: i64,
    /// `c'_1, ..., c'_{n+1}`
    pub values: Vec<Rational>,
    /// The same values from mixed volumes on the rooftop fan, when that fan
    /// is smooth.
    pub formula: Option<Vec<Rational>>,
}

impl RooftopCoefficients {
    /// `sum_j c'_{j+1} k^j`, the numerator of `<Bc_k, v>` over `E_P(k)`.
    pub fn numerator(&self) -> Polynomial {
        Polynomial::new(self.values.clone())
    }
}

fn ehrhart_route(p: &Polytope, e: &Polynomial, v: &[i64], q: i64) -> Result<Vec<Rational>> {
    let c = fit_counts(&rooftop(p, v, q)?)?;
    let n = p.dim();
    let a = |j: i64| if j < 0 { int(0) } else { e.coeff(j as usize) };
    if c.coeff(0) != a(0) {
        return Err(inconsistency!("rooftop Ehrhart constant term differs from that of P"));
    }
    Ok((1..=n as i64 + 1)
        .map(|j| c.coeff(j as usize) - int(q) * a(j - 1) - a(j))
        .collect())
}

pub fn rooftop_coefficients(t: &ToricData, v: &[i64]) -> Result<RooftopCoefficients> {
    t.require_delzant()?;
    let n = t.dim();
    if v.len() != n {
        return Err(Error::InvalidInput("direction of the wrong dimension".into()));
    }
    let e = fit_counts(&t.polytope)?;
    let q = canonical_offset(&t.polytope, v);
    let values = ehrhart_route(&t.polytope, &e, v, q)?;
    if ehrhart_route(&t.polytope, &e, v, q + 1)? != values {
        return Err(inconsistency!("rooftop coefficients depend on q"));
    }
    let formula = rooftop_formula(t, v, q)?;
    if formula.as_ref().is_some_and(|f| *f != values) {
        return Err(inconsistency!("rooftop coefficients from mixed volumes differ from the Ehrhart route"));
    }
    Ok(RooftopCoefficients { q, values, formula })
}

fn rooftop_formula(t: &ToricData, v: &[i64], q: i64) -> Result<Option<Vec<Rational>>> {
    let fan = rooftop_fan(t, v);
    let mut offsets = t.offsets.clone();
    offsets.extend([0, q]);
    let roof = ToricData::with_cap(fan.rays, offsets, DEFAULT_MAX_DIM + 1)?;
    if !roof.delzant {
        return Ok(None);
    }
    let d = t.rays.len();
    let mut base = t.offsets.clone();
    base.extend([0, 0]);
    let main = divisor_polytope(&roof, &base)?;
    let divisors: Vec<VirtualPolytope> =
        (0..d).map(|i| divisor_polytope(&roof, &unit(d + 2, i))).collect::<Result<_>>()?;
    let mut mv = MixedVolumes::new(t.dim() + 1);
    (1..=t.dim() + 1)
        .map(|j| bernoulli_sum(&mut mv, &main, &divisors, j))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RooftopFan {
    pub rays: Vec<LatticePoint>,
    pub q: i64,
}

/// Rays `(v_1,0), ..., (v_d,0), (0,1), (v,-1)` and the canonical `q`.
pub fn rooftop_fan(t: &ToricData, v: &[i64]) -> RooftopFan {
    let n = t.dim();
    let mut rays: Vec<LatticePoint> = t
        .rays
        .iter()
        .map(|r| {
            let mut x = r.clone();
            x.push(0);
            x
        })
        .collect();
    rays.push(unit(n + 1, n));
    let mut last = v.to_vec();
    last.push(-1);
    rays.push(last);
    RooftopFan { rays, q: canonical_offset(&t.polytope, v) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull_from_vertices;
    use crate::q;

    fn pts(p: &[&[i64]]) -> Vec<LatticePoint> {
        p.iter().map(|x| x.to_vec()).collect()
    }

    fn p2() -> ToricData {
        ToricData::new(pts(&[&[1, 0], &[0, 1], &[-1, -1]]), vec![1, 1, 1]).unwrap()
    }

    fn f1() -> ToricData {
        ToricData::new(pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), vec![1, 1, 1, 1]).unwrap()
    }

    fn segment(a: &[i64], b: &[i64]) -> VirtualPolytope {
        VirtualPolytope::from_body(Body::from_points(&[a.to_vec(), b.to_vec()]).unwrap())
    }

    #[test]
    fn toric_data_validation() {
        assert!(p2().is_delzant() && p2().is_reflexive());
        let redundant = ToricData::new(pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), vec![1, 1, 1, 5]);
        assert_eq!(redundant.unwrap_err().name(), "InvalidInput");
        let non_primitive = ToricData::new(pts(&[&[2, 0], &[0, 1], &[-1, -1]]), vec![2, 1, 1]);
        assert_eq!(non_primitive.unwrap_err().name(), "InvalidInput");
    }

    #[test]
    fn mixed_volume_examples() {
        let tri = VirtualPolytope::from_body(Body::Full(p2().polytope().clone()));
        assert_eq!(mixed_volume(&[(tri.clone(), 2)]).unwrap(), q(9, 2));
        let v = mixed_volume(&[(segment(&[0, 0], &[1, 0]), 1), (segment(&[0, 0], &[0, 1]), 1)]).unwrap();
        assert_eq!(v, q(1, 2));
        let zero = tri.sub(&tri).unwrap();
        assert_eq!(mixed_volume(&[(zero, 1), (segment(&[0, 0], &[3, 1]), 1)]).unwrap(), int(0));
        assert_eq!(mixed_volume(&[(tri, 1)]).unwrap_err().name(), "InvalidInput");
    }

    #[test]
    fn divisor_polytopes() {
        let t = p2();
        let l = divisor_polytope(&t, &[1, 1, 1]).unwrap();
        assert_eq!(l.terms().len(), 1);
        assert!(l.terms()[0].1.same_set(&Body::Full(t.polytope().clone())));
        let z = divisor_polytope(&t, &[0, 0, 0]).unwrap();
        assert_eq!(z.terms()[0].1.vertices(), &[vec![0, 0]][..]);
        let d1 = divisor_polytope(&t, &[1, 0, 0]).unwrap();
        let shifted = VirtualPolytope::from_terms(
            2,
            vec![
                (1, Body::Full(same_fan(&t, &[2, 1, 1]).unwrap())),
                (-1, Body::Full(t.polytope().clone())),
            ],
        )
        .unwrap();
        assert!(d1.grothendieck_eq(&shifted).unwrap());
        assert!(!d1.grothendieck_eq(&l).unwrap());
    }

    #[test]
    fn divisor_needing_shift() {
        // D_1 on P^1 x P^1 is a segment, not a polygon with the right fan
        let t = ToricData::new(pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]), vec![1, 1, 1, 1]).unwrap();
        let d1 = divisor_polytope(&t, &[1, 0, 0, 0]).unwrap();
        assert_eq!(d1.terms().len(), 2);
        let seg = segment(&[-1, 0], &[0, 0]);
        assert!(d1.grothendieck_eq(&seg).unwrap());
    }

    #[test]
    fn pairwise_divisor_mixed_volumes_on_p2() {
        let t = p2();
        let ds: Vec<VirtualPolytope> = (0..3).map(|i| divisor_polytope(&t, &unit(3, i))).collect::<Result<_>>().unwrap();
        for a in &ds {
            for b in &ds {
                assert_eq!(mixed_volume(&[(a.clone(), 1), (b.clone(), 1)]).unwrap(), q(1, 2));
            }
        }
    }

    #[test]
    fn hrr() {
        assert_eq!(hrr_coefficients(&p2()).unwrap().coeffs, vec![int(1), q(9, 2), q(9, 2)]);
        assert_eq!(hrr_coefficients(&f1()).unwrap().coeffs, vec![int(1), int(4), int(4)]);
        let unit_square = ToricData::from_polytope(
            &hull_from_vertices(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap(),
        );
        assert_eq!(hrr_coefficients(&unit_square).unwrap().coeffs, vec![int(1), int(2), int(1)]);
        let diamond = ToricData::from_polytope(
            &hull_from_vertices(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap(),
        );
        assert_eq!(hrr_coefficients(&diamond).unwrap_err().name(), "PreconditionViolation");
    }

    #[test]
    fn rooftop_coefficient_examples() {
        let r = rooftop_coefficients(&p2(), &[1, 0]).unwrap();
        assert_eq!(r.values, vec![int(0), int(0), int(0)]);
        assert_eq!(r.formula, Some(r.values.clone()));
        let r = rooftop_coefficients(&f1(), &[1, 1]).unwrap();
        assert_eq!(r.values, vec![q(1, 3), int(1), q(2, 3)]);
        assert_eq!(r.formula, Some(r.values.clone()));
        let r = rooftop_coefficients(&f1(), &[0, 0]).unwrap();
        assert!(r.values.iter().all(|c| *c == int(0)));
    }

    #[test]
    fn rooftop_fans() {
        let f = rooftop_fan(&p2(), &[1, 0]);
        assert_eq!(f.rays, pts(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[1, 0, -1]]));
        assert_eq!(f.q, 2);
        let f = rooftop_fan(&p2(), &[0, 0]);
        assert_eq!(&f.rays[3..], &pts(&[&[0, 0, 1], &[0, 0, -1]])[..]);
        assert_eq!(f.q, 1);
        let seg = ToricData::new(pts(&[&[1], &[-1]]), vec![1, 1]).unwrap();
        let f = rooftop_fan(&seg, &[1]);
        assert_eq!(f.rays, pts(&[&[1, 0], &[-1, 0], &[0, 1], &[1, -1]]));
        assert_eq!(f.q, 2);
    }

    #[test]
    fn flopped_shift_is_not_ample() {
        // same facet normals, different vertex cones
        let c = rooftop_coefficients(&p2(), &[1, 1]).unwrap();
        assert_eq!(c.q, 3);
        assert_eq!(c.values, vec![int(0); 3]);
        assert_eq!(c.formula, Some(c.values.clone()));
    }
}
