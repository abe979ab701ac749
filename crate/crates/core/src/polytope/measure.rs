use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{hull_from_vertices_capped, Polytope};
use crate::error::Result;
use crate::lattice::{affine_dim, det_i64, AffineLatticeChart};
use crate::{LatticePoint, Rational, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureData {
    pub volume: Rational,
    pub barycenter: RationalVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetMeasure {
    pub normal: LatticePoint,
    pub offset: i64,
    pub normalized_volume: Rational,
    pub barycenter: RationalVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetData {
    pub facets: Vec<FacetMeasure>,
    pub boundary_normalized_volume: Rational,
    pub boundary_barycenter: RationalVector,
}

/// Simplices of a fan triangulation of the face spanned by `face`, which has
/// affine dimension `d`. The apex of each fan is the face's lowest-index
/// vertex; since vertices are sorted that is its lexicographic minimum.
fn triangulate(p: &Polytope, face: &[usize], d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let face_set: BTreeSet<usize> = face.iter().copied().collect();
    let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for inc in p.incidence() {
        let sub: Vec<usize> = inc.iter().copied().filter(|i| face_set.contains(i)).collect();
        if sub.is_empty() || sub.len() == face.len() || sub.contains(&apex) {
            continue;
        }
        let coords: Vec<&LatticePoint> = sub.iter().map(|&i| &p.vertices()[i]).collect();
        if affine_dim(&coords) == Some(d - 1) {
            subfaces.insert(sub);
        }
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut s in triangulate(p, &sub, d - 1) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

/// Exact volume and barycenter.
pub fn measure(p: &Polytope) -> MeasureData {
    let n = p.dim();
    let all: Vec<usize> = (0..p.vertices().len()).collect();
    let mut factorial = BigInt::from(1);
    for i in 2..=n {
        factorial *= i;
    }
    let mut total = BigInt::zero();
    let mut moment = vec![BigInt::zero(); n];
    for simplex in triangulate(p, &all, n) {
        let base = &p.vertices()[simplex[0]];
        let rows: Vec<Vec<i64>> = simplex[1..]
            .iter()
            .map(|&i| p.vertices()[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let det = det_i64(&rows).abs();
        for (c, m) in moment.iter_mut().enumerate() {
            let s: i64 = simplex.iter().map(|&i| p.vertices()[i][c]).sum();
            *m += &det * s;
        }
        total += det;
    }
    // volume = total / n!, barycenter = moment / ((n+1) total)
    let volume = Rational::new(total.clone(), factorial);
    let denom = total * BigInt::from(n + 1);
    let barycenter = moment.into_iter().map(|m| Rational::new(m, denom.clone())).collect();
    MeasureData { volume, barycenter }
}

/// Lattice-normalized facet measures and the boundary aggregates.
pub fn facet_data(p: &Polytope) -> Result<FacetData> {
    let n = p.dim();
    let mut facets = Vec::with_capacity(p.facets().len());
    for (f, inc) in p.facets().iter().zip(p.incidence()) {
        let verts: Vec<LatticePoint> = inc.iter().map(|&i| p.vertices()[i].clone()).collect();
        let (normalized_volume, barycenter) = if n == 1 {
            (Rational::from_integer(1.into()), crate::exactnum::rational::int_vector(&verts[0]))
        } else {
            let chart = AffineLatticeChart::new(verts[0].clone(), &f.normal)?;
            let local: Vec<LatticePoint> = verts.iter().map(|u| chart.to_chart(u)).collect::<Result<_>>()?;
            let m = measure(&hull_from_vertices_capped(&local, n - 1)?);
            (m.volume, chart.from_chart_rational(&m.barycenter))
        };
        facets.push(FacetMeasure { normal: f.normal.clone(), offset: f.offset, normalized_volume, barycenter });
    }
    let total: Rational = facets.iter().map(|f| f.normalized_volume.clone()).sum();
    let boundary_barycenter = (0..n)
        .map(|c| facets.iter().map(|f| &f.normalized_volume * &f.barycenter[c]).sum::<Rational>() / &total)
        .collect();
    Ok(FacetData { facets, boundary_normalized_volume: total, boundary_barycenter })
}
