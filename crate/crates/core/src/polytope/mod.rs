//! Lattice polytopes in both representations.
//!
//! A [`Polytope`] stores its lattice vertices (lexicographically sorted) and
//! its facets `<u, v_i> >= -b_i` with primitive `v_i`, plus which vertices
//! lie on which facet. Both constructors compute the missing half.

mod dd;
mod measure;
mod minkowski;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{inconsistency, Error, Result};
use crate::lattice::{affine_dim, det_i64, gcd_slice, primitive, rank_i64};
use crate::{LatticePoint, Rational};

pub use measure::{facet_data, measure, FacetData, FacetMeasure, MeasureData};
pub use minkowski::{minkowski_sum, Body};

/// Largest ambient dimension accepted by the public constructors.
pub const DEFAULT_MAX_DIM: usize = 7;

/// The half-space `<u, normal> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: LatticePoint,
    pub offset: i64,
}

impl Facet {
    /// `<u, normal> + offset`, nonnegative exactly on the closed half-space.
    pub fn slack(&self, u: &[i64]) -> i64 {
        dot(u, &self.normal) + self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    incidence: Vec<Vec<usize>>,
}

/// Reflexive and Delzant flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub reflexive: bool,
    pub delzant: bool,
}

pub(crate) fn dot(u: &[i64], v: &[i64]) -> i64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn check_points(points: &[LatticePoint], max_dim: usize) -> Result<usize> {
    let n = points
        .first()
        .ok_or_else(|| Error::InvalidInput("empty point set".into()))?
        .len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::InvalidInput("points of mixed dimension".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be at least 1".into()));
    }
    if n > max_dim {
        return Err(Error::Unsupported(format!("dimension {n} exceeds the cap {max_dim}")));
    }
    Ok(n)
}

fn big_rows<'a>(rows: impl Iterator<Item = Vec<i64>> + 'a) -> Vec<Vec<BigInt>> {
    rows.map(|r| r.into_iter().map(BigInt::from).collect()).collect()
}

fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::InvalidInput("coordinate exceeds i64".into())))
        .collect()
}

/// Convex hull of lattice points.
pub fn hull_from_vertices(points: &[LatticePoint]) -> Result<Polytope> {
    hull_from_vertices_capped(points, DEFAULT_MAX_DIM)
}

pub fn hull_from_vertices_capped(points: &[LatticePoint], max_dim: usize) -> Result<Polytope> {
    let n = check_points(points, max_dim)?;
    let pts: Vec<LatticePoint> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if affine_dim(&pts) != Some(n) {
        return Err(Error::DegenerateInput(format!(
            "points span an affine space of dimension {} in Z^{n}",
            affine_dim(&pts).unwrap_or(0)
        )));
    }
    // facets are the extreme rays (b, a) of {(b, a) : b + <a, p> >= 0}
    let rows = big_rows(pts.iter().map(|p| {
        let mut r = vec![1];
        r.extend_from_slice(p);
        r
    }));
    let rays = dd::extreme_rays(&rows).ok_or_else(|| inconsistency!("dual cone of a full-dimensional set is not pointed"))?;
    let mut facets = BTreeSet::new();
    for ray in rays {
        let ray = to_i64(&ray)?;
        if ray[1..].iter().all(|&x| x == 0) {
            continue;
        }
        let g = gcd_slice(&ray[1..]);
        facets.insert(Facet { normal: ray[1..].iter().map(|x| x / g).collect(), offset: ray[0] / g });
    }
    let facets: Vec<Facet> = facets.into_iter().collect();
    let vertices: Vec<LatticePoint> = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<&[i64]> = facets.iter().filter(|f| f.slack(p) == 0).map(|f| f.normal.as_slice()).collect();
            rank_i64(&tight) == n
        })
        .collect();
    Ok(Polytope::assemble(n, vertices, facets))
}

/// The polytope `{u : <u, normals[i]> >= -offsets[i]}`.
///
/// Redundant inequalities are dropped; the surviving facets keep their input
/// order and are stored with primitive normals.
pub fn polytope_from_halfspaces(normals: &[Vec<i64>], offsets: &[i64]) -> Result<Polytope> {
    polytope_from_halfspaces_capped(normals, offsets, DEFAULT_MAX_DIM)
}

pub fn polytope_from_halfspaces_capped(normals: &[Vec<i64>], offsets: &[i64], max_dim: usize) -> Result<Polytope> {
    if normals.len() != offsets.len() {
        return Err(Error::InvalidInput(format!(
            "{} normals but {} offsets",
            normals.len(),
            offsets.len()
        )));
    }
    let n = check_points(normals, max_dim)?;
    if normals.iter().any(|v| v.iter().all(|&x| x == 0)) {
        return Err(Error::InvalidInput("zero normal vector".into()));
    }
    if rank_i64(normals) < n {
        return Err(Error::UnboundedInput("normals do not span the dual space".into()));
    }
    // homogenize: t >= 0 and b t + <a, x> >= 0
    let mut rows = vec![{
        let mut r = vec![0i64; n + 1];
        r[0] = 1;
        r
    }];
    rows.extend(normals.iter().zip(offsets).map(|(a, &b)| {
        let mut r = vec![b];
        r.extend_from_slice(a);
        r
    }));
    let rays = dd::extreme_rays(&big_rows(rows.into_iter()))
        .ok_or_else(|| inconsistency!("homogenized cone is not pointed despite full-rank normals"))?;
    let mut vertices = BTreeSet::new();
    for ray in rays {
        let t = &ray[0];
        if t.is_zero() {
            return Err(Error::UnboundedInput("the half-spaces contain a ray".into()));
        }
        let mut v = Vec::with_capacity(n);
        for x in &ray[1..] {
            let (qt, r) = x.div_rem(t);
            if !r.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "vertex {:?} is not a lattice point",
                    ray[1..].iter().map(|x| Rational::new(x.clone(), t.clone()).to_string()).collect::<Vec<_>>()
                )));
            }
            v.push(qt.to_i64().ok_or_else(|| Error::InvalidInput("vertex exceeds i64".into()))?);
        }
        vertices.insert(v);
    }
    let vertices: Vec<LatticePoint> = vertices.into_iter().collect();
    if vertices.is_empty() {
        return Err(Error::DegenerateInput("the half-spaces have empty intersection".into()));
    }
    if affine_dim(&vertices) != Some(n) {
        return Err(Error::DegenerateInput("the half-spaces cut out a lower-dimensional set".into()));
    }
    let mut facets: Vec<Facet> = Vec::new();
    for (a, &b) in normals.iter().zip(offsets) {
        let g = gcd_slice(a);
        let tight: Vec<&LatticePoint> = vertices.iter().filter(|u| dot(u, a) + b == 0).collect();
        if tight.is_empty() || affine_dim(&tight) != Some(n - 1) {
            continue;
        }
        let normal = primitive(a)?;
        if facets.iter().any(|f| f.normal == normal) {
            continue;
        }
        facets.push(Facet { normal, offset: b / g });
    }
    Ok(Polytope::assemble(n, vertices, facets))
}

impl Polytope {
    fn assemble(dim: usize, vertices: Vec<LatticePoint>, facets: Vec<Facet>) -> Self {
        let incidence = facets
            .iter()
            .map(|f| (0..vertices.len()).filter(|&i| f.slack(&vertices[i]) == 0).collect())
            .collect();
        Polytope { dim, vertices, facets, incidence }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices into [`Self::vertices`] of the vertices on each facet.
    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn normals(&self) -> Vec<LatticePoint> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }

    pub fn offsets(&self) -> Vec<i64> {
        self.facets.iter().map(|f| f.offset).collect()
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(u) >= 0)
    }

    pub fn contains_in_interior(&self, u: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(u) > 0)
    }

    /// `min_{u in P} <u, v>`.
    pub fn support_value(&self, v: &[i64]) -> i64 {
        self.vertices.iter().map(|u| dot(u, v)).min().expect("polytope has vertices")
    }

    /// Support value over a rational direction.
    pub fn support_value_rational(&self, v: &[Rational]) -> Rational {
        self.vertices
            .iter()
            .map(|u| crate::exactnum::rational::dot_int(v, u))
            .min()
            .expect("polytope has vertices")
    }

    /// `kP` for `k >= 1`.
    pub fn dilate(&self, k: i64) -> Result<Polytope> {
        if k < 1 {
            return Err(Error::InvalidInput(format!("dilation factor {k} must be positive")));
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|u| u.iter().map(|x| x * k).collect()).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: f.offset * k })
                .collect(),
            incidence: self.incidence.clone(),
        })
    }

    /// `P + t`.
    pub fn translate(&self, t: &[i64]) -> Result<Polytope> {
        if t.len() != self.dim {
            return Err(Error::InvalidInput("translation of the wrong dimension".into()));
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|u| u.iter().zip(t).map(|(a, b)| a + b).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: f.offset - dot(t, &f.normal) })
                .collect(),
            incidence: self.incidence.clone(),
        })
    }

    /// Image under `u -> A u` for a unimodular `A` (given by rows).
    pub fn transform(&self, a: &[Vec<i64>]) -> Result<Polytope> {
        if a.len() != self.dim || det_i64(a).abs() != BigInt::from(1) {
            return Err(Error::InvalidInput("transform must be a unimodular square matrix".into()));
        }
        let image: Vec<LatticePoint> = self
            .vertices
            .iter()
            .map(|u| a.iter().map(|row| dot(row, u)).collect())
            .collect();
        hull_from_vertices_capped(&image, self.dim)
    }

    /// Pairs of vertex indices joined by an edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let nv = self.vertices.len();
        let mut out = Vec::new();
        for a in 0..nv {
            for b in a + 1..nv {
                let mut common: Option<BTreeSet<usize>> = None;
                for inc in &self.incidence {
                    if inc.binary_search(&a).is_ok() && inc.binary_search(&b).is_ok() {
                        let s: BTreeSet<usize> = inc.iter().copied().collect();
                        common = Some(match common {
                            None => s,
                            Some(c) => c.intersection(&s).copied().collect(),
                        });
                    }
                }
                if common.is_some_and(|c| c.len() == 2) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset == 1)
    }

    /// Every vertex has exactly `n` edges whose primitive directions form a
    /// lattice basis.
    pub fn is_delzant(&self) -> bool {
        let edges = self.edges();
        (0..self.vertices.len()).all(|w| {
            let dirs: Vec<Vec<i64>> = edges
                .iter()
                .filter_map(|&(a, b)| match (a == w, b == w) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .map(|o| {
                    let d: Vec<i64> = self.vertices[o].iter().zip(&self.vertices[w]).map(|(x, y)| x - y).collect();
                    primitive(&d).expect("distinct vertices")
                })
                .collect();
            dirs.len() == self.dim && det_i64(&dirs).abs() == BigInt::from(1)
        })
    }

    pub fn classify(&self) -> Classification {
        Classification { reflexive: self.is_reflexive(), delzant: self.is_delzant() }
    }

    /// Bounding box `[lo, hi]` of the vertices.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let lo = (0..self.dim).map(|i| self.vertices.iter().map(|u| u[i]).min().unwrap()).collect();
        let hi = (0..self.dim).map(|i| self.vertices.iter().map(|u| u[i]).max().unwrap()).collect();
        (lo, hi)
    }
}

pub fn classify(p: &Polytope) -> Classification {
    p.classify()
}

pub fn support_value(p: &Polytope, v: &[i64]) -> Result<i64> {
    if v.len() != p.dim() {
        return Err(Error::InvalidInput("direction of the wrong dimension".into()));
    }
    Ok(p.support_value(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(p: &[&[i64]]) -> Vec<LatticePoint> {
        p.iter().map(|x| x.to_vec()).collect()
    }

    #[test]
    fn triangle_drops_interior_point() {
        let p = hull_from_vertices(&pts(&[&[-1, -1], &[2, -1], &[-1, 2], &[0, 0]])).unwrap();
        assert_eq!(p.vertices().len(), 3);
        let facets: BTreeSet<(Vec<i64>, i64)> = p.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect();
        let expected: BTreeSet<(Vec<i64>, i64)> =
            [(vec![1, 0], 1), (vec![0, 1], 1), (vec![-1, -1], 1)].into_iter().collect();
        assert_eq!(facets, expected);
        for inc in p.incidence() {
            assert_eq!(inc.len(), 2);
        }
    }

    #[test]
    fn unit_square_and_degenerate() {
        let p = hull_from_vertices(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.facets().len(), 4);
        let err = hull_from_vertices(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap_err();
        assert_eq!(err.name(), "DegenerateInput");
    }

    #[test]
    fn f1_from_halfspaces() {
        let p = polytope_from_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), &[1, 1, 1, 1]).unwrap();
        assert_eq!(p.vertices(), &pts(&[&[-1, 0], &[-1, 2], &[0, -1], &[2, -1]])[..]);
        assert_eq!(p.normals(), pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]));
    }

    #[test]
    fn halfspace_errors() {
        let square = polytope_from_halfspaces(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]), &[1, 1, 1, 1]).unwrap();
        assert_eq!(square.vertices().len(), 4);
        assert_eq!(polytope_from_halfspaces(&pts(&[&[1, 0]]), &[1]).unwrap_err().name(), "UnboundedInput");
        assert_eq!(
            polytope_from_halfspaces(&pts(&[&[1], &[-1]]), &[-1, -1]).unwrap_err().name(),
            "DegenerateInput"
        );
        assert_eq!(
            polytope_from_halfspaces(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]), &[0, 0, 1, 1])
                .unwrap_err()
                .name(),
            "DegenerateInput"
        );
        assert_eq!(
            polytope_from_halfspaces(&pts(&[&[2], &[-1]]), &[1, 1]).unwrap_err().name(),
            "InvalidInput"
        );
    }

    #[test]
    fn redundant_halfspace_dropped_and_normals_made_primitive() {
        let p = polytope_from_halfspaces(&pts(&[&[2, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1]]), &[2, 1, 1, 1, 5]).unwrap();
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.facets()[0], Facet { normal: vec![1, 0], offset: 1 });
    }

    #[test]
    fn classification_examples() {
        let diamond = hull_from_vertices(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        assert_eq!(diamond.classify(), Classification { reflexive: true, delzant: false });
        let big = hull_from_vertices(&pts(&[&[2, 2], &[-2, 2], &[2, -2], &[-2, -2]])).unwrap();
        assert_eq!(big.classify(), Classification { reflexive: false, delzant: true });
        let f1 = polytope_from_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), &[1, 1, 1, 1]).unwrap();
        assert_eq!(f1.classify(), Classification { reflexive: true, delzant: true });
        let cube = hull_from_vertices(&pts(&[
            &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
        ]))
        .unwrap();
        assert!(cube.is_delzant());
        assert_eq!(cube.edges().len(), 12);
        let octahedron = hull_from_vertices(&pts(&[
            &[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1],
        ]))
        .unwrap();
        assert!(!octahedron.is_delzant());
    }

    #[test]
    fn support_values() {
        let f1 = polytope_from_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), &[1, 1, 1, 1]).unwrap();
        assert_eq!(support_value(&f1, &[1, 0]).unwrap(), -1);
        assert_eq!(support_value(&f1, &[0, 0]).unwrap(), 0);
        let p2 = hull_from_vertices(&pts(&[&[-1, -1], &[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(support_value(&p2, &[-1, -1]).unwrap(), -1);
    }

    #[test]
    fn dilate_translate_keep_facets_consistent() {
        let f1 = polytope_from_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), &[1, 1, 1, 1]).unwrap();
        let moved = f1.dilate(3).unwrap().translate(&[2, -5]).unwrap();
        let rebuilt = hull_from_vertices(moved.vertices()).unwrap();
        let a: BTreeSet<Facet> = moved.facets().iter().cloned().collect();
        let b: BTreeSet<Facet> = rebuilt.facets().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_cap() {
        let p: Vec<LatticePoint> = (0..9).map(|i| (0..8).map(|j| i64::from(i == j + 1)).collect()).collect();
        assert_eq!(hull_from_vertices(&p).unwrap_err().name(), "Unsupported");
        assert!(hull_from_vertices_capped(&p, 8).is_ok());
    }
}
