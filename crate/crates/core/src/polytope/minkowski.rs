use std::collections::BTreeSet;

use super::{hull_from_vertices_capped, measure, Polytope};
use crate::error::{Error, Result};
use crate::lattice::{affine_dim, rank_i64};
use crate::{LatticePoint, Rational};

/// A lattice polytope that may be lower-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Full(Polytope),
    /// Extreme points of a polytope whose affine hull is a proper subspace.
    Flat { dim: usize, points: Vec<LatticePoint> },
}

impl Body {
    /// Convex hull of arbitrary lattice points, full-dimensional or not.
    pub fn from_points(points: &[LatticePoint]) -> Result<Body> {
        let n = points
            .first()
            .ok_or_else(|| Error::InvalidInput("empty point set".into()))?
            .len();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidInput("points of mixed dimension".into()));
        }
        let pts: Vec<LatticePoint> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let d = affine_dim(&pts).unwrap_or(0);
        if d == n {
            return Ok(Body::Full(hull_from_vertices_capped(&pts, n)?));
        }
        if d == 0 {
            return Ok(Body::Flat { dim: n, points: pts });
        }
        // project onto d coordinates on which the affine hull maps injectively
        let diffs: Vec<Vec<i64>> = pts[1..]
            .iter()
            .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
            .collect();
        let mut coords: Vec<usize> = Vec::new();
        for c in 0..n {
            let mut trial = coords.clone();
            trial.push(c);
            let sub: Vec<Vec<i64>> = diffs.iter().map(|r| trial.iter().map(|&i| r[i]).collect()).collect();
            if rank_i64(&sub) == trial.len() {
                coords = trial;
                if coords.len() == d {
                    break;
                }
            }
        }
        let proj: Vec<LatticePoint> = pts.iter().map(|p| coords.iter().map(|&i| p[i]).collect()).collect();
        let hull = hull_from_vertices_capped(&proj, d)?;
        let points = pts
            .iter()
            .zip(&proj)
            .filter(|(_, pr)| hull.vertices().binary_search(pr).is_ok())
            .map(|(p, _)| p.clone())
            .collect();
        Ok(Body::Flat { dim: n, points })
    }

    pub fn point(p: LatticePoint) -> Body {
        Body::Flat { dim: p.len(), points: vec![p] }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Body::Full(p) => p.dim(),
            Body::Flat { dim, .. } => *dim,
        }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        match self {
            Body::Full(p) => p.vertices(),
            Body::Flat { points, .. } => points,
        }
    }

    /// Ambient Lebesgue volume; zero for flat bodies.
    pub fn volume(&self) -> Rational {
        match self {
            Body::Full(p) => measure(p).volume,
            Body::Flat { .. } => Rational::from_integer(0.into()),
        }
    }

    pub fn as_polytope(&self) -> Option<&Polytope> {
        match self {
            Body::Full(p) => Some(p),
            Body::Flat { .. } => None,
        }
    }

    /// Same point set, compared by vertex sets.
    pub fn same_set(&self, other: &Body) -> bool {
        let a: BTreeSet<&LatticePoint> = self.vertices().iter().collect();
        let b: BTreeSet<&LatticePoint> = other.vertices().iter().collect();
        a == b
    }
}

impl From<Polytope> for Body {
    fn from(p: Polytope) -> Body {
        Body::Full(p)
    }
}

pub fn minkowski_sum(p: &Body, q: &Body) -> Result<Body> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::InvalidInput(format!(
            "Minkowski sum of bodies in dimensions {} and {}",
            p.ambient_dim(),
            q.ambient_dim()
        )));
    }
    let mut sums = BTreeSet::new();
    for a in p.vertices() {
        for b in q.vertices() {
            sums.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<LatticePoint>());
        }
    }
    Body::from_points(&sums.into_iter().collect::<Vec<_>>())
}
