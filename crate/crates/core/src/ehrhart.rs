//! Lattice points in dilates, Ehrhart polynomials and reciprocity.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{inconsistency, Error, Result};
use crate::exactnum::poly_fit;
use crate::polytope::{facet_data, measure, Polytope};
use crate::{q, Polynomial, Rational, RationalVector};

/// Number of lattice points of a region together with their coordinate sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSums {
    pub count: u64,
    pub sum: Vec<i128>,
}

impl LatticeSums {
    /// `(1 / (k count)) * sum`.
    pub fn barycenter(&self, k: i64) -> RationalVector {
        let den = BigInt::from(self.count) * BigInt::from(k);
        self.sum.iter().map(|s| Rational::new(BigInt::from(*s), den.clone())).collect()
    }
}

/// Scans `{u : <u, v_i> >= -k b_i + margin}`. The last coordinate is solved
/// as an interval for each point of the box over the others.
fn scan(p: &Polytope, k: i64, margin: i64) -> LatticeSums {
    let n = p.dim();
    let (lo, hi) = p.bounding_box();
    let lo: Vec<i64> = lo.iter().map(|x| x * k).collect();
    let hi: Vec<i64> = hi.iter().map(|x| x * k).collect();
    let mut out = LatticeSums { count: 0, sum: vec![0; n] };
    let mut prefix: Vec<i64> = lo[..n - 1].to_vec();
    let facets = p.facets();
    loop {
        // interval for the last coordinate
        let (mut a, mut b) = (lo[n - 1], hi[n - 1]);
        for f in facets {
            let rest: i64 = prefix.iter().zip(&f.normal).map(|(x, y)| x * y).sum();
            // c * x >= rhs
            let c = f.normal[n - 1];
            let rhs = margin - k * f.offset - rest;
            if c > 0 {
                a = a.max(Integer::div_ceil(&rhs, &c));
            } else if c < 0 {
                b = b.min(Integer::div_floor(&rhs, &c));
            } else if rhs > 0 {
                b = a - 1;
                break;
            }
        }
        if a <= b {
            let cnt = (b - a + 1) as i128;
            out.count += cnt as u64;
            for (s, &x) in out.sum.iter_mut().zip(&prefix) {
                *s += cnt * x as i128;
            }
            out.sum[n - 1] += (a as i128 + b as i128) * cnt / 2;
        }
        // odometer over the first n-1 coordinates
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if prefix[i] < hi[i] {
                prefix[i] += 1;
                break;
            }
            prefix[i] = lo[i];
        }
    }
}

fn check_dilation(k: i64, min: i64) -> Result<()> {
    if k < min {
        return Err(Error::InvalidInput(format!("dilation factor must be at least {min}, got {k}")));
    }
    Ok(())
}

/// Count and coordinate sums of `kP ∩ M`, `k >= 0`.
pub fn lattice_sums(p: &Polytope, k: i64) -> Result<LatticeSums> {
    check_dilation(k, 0)?;
    Ok(scan(p, k, 0))
}

/// Count and coordinate sums of `int(kP) ∩ M`, `k >= 1`.
pub fn interior_sums(p: &Polytope, k: i64) -> Result<LatticeSums> {
    check_dilation(k, 1)?;
    Ok(scan(p, k, 1))
}

/// `#(kP ∩ M)`.
pub fn count_points(p: &Polytope, k: i64) -> Result<u64> {
    lattice_sums(p, k).map(|s| s.count)
}

/// `#(int(kP) ∩ M)`.
pub fn interior_count(p: &Polytope, k: i64) -> Result<u64> {
    interior_sums(p, k).map(|s| s.count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EhrhartSource {
    Fitted,
    ReflexiveClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub poly: Polynomial,
    pub source: EhrhartSource,
}

/// Interpolates the counts at `k = 0..=n` and checks the fit at
/// `k = n+1..=2n+1`.
pub fn fit_counts(p: &Polytope) -> Result<Polynomial> {
    let n = p.dim() as i64;
    let samples: Vec<(i64, Rational)> = (0..=n)
        .map(|k| Ok((k, Rational::from_integer(count_points(p, k)?.into()))))
        .collect::<Result<_>>()?;
    let poly = poly_fit(&samples)?;
    for k in n + 1..=2 * n + 1 {
        let c = count_points(p, k)?;
        if poly.eval_int(k) != Rational::from_integer(c.into()) {
            return Err(inconsistency!("Ehrhart fit {poly} predicts {} at k={k}, counted {c}", poly.eval_int(k)));
        }
    }
    Ok(poly)
}

/// The Ehrhart polynomial, checked against held-out counts and against
/// `a_n = Vol`, `a_{n-1} = Vol(∂P)/2`, `a_0 = 1`.
pub fn ehrhart_polynomial(p: &Polytope) -> Result<EhrhartPolynomial> {
    let poly = fit_counts(p)?;
    let n = p.dim();
    let vol = measure(p).volume;
    let boundary = facet_data(p)?.boundary_normalized_volume;
    if poly.coeff(n) != vol {
        return Err(inconsistency!("leading Ehrhart coefficient {} differs from volume {vol}", poly.coeff(n)));
    }
    if poly.coeff(n - 1) != &boundary / q(2, 1) && n > 1 {
        return Err(inconsistency!(
            "subleading Ehrhart coefficient {} differs from half the boundary volume {boundary}",
            poly.coeff(n - 1)
        ));
    }
    if poly.coeff(0) != q(1, 1) {
        return Err(inconsistency!("Ehrhart constant term is {}", poly.coeff(0)));
    }
    Ok(EhrhartPolynomial { poly, source: EhrhartSource::Fitted })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityRow {
    pub k: i64,
    /// `E_P(-k)`
    pub at_minus_k: Rational,
    pub interior: u64,
    pub general: bool,
    /// `E_P(-k) = (-1)^n E_P(k-1)`; checked only for reflexive `P`.
    pub reflexive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub rows: Vec<ReciprocityRow>,
}

impl ReciprocityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.general && r.reflexive.unwrap_or(true))
    }
}

pub fn reciprocity_check(p: &Polytope, k_max: i64) -> Result<ReciprocityReport> {
    check_dilation(k_max, 1)?;
    let e = fit_counts(p)?;
    let sign = if p.dim().is_multiple_of(2) { q(1, 1) } else { q(-1, 1) };
    let reflexive = p.is_reflexive();
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let at_minus_k = e.eval_int(-k);
        let interior = interior_count(p, k)?;
        let general = at_minus_k == &sign * Rational::from_integer(interior.into());
        let reflexive = reflexive.then(|| {
            let shifted = Rational::from_integer(count_points(p, k - 1).expect("k >= 1").into());
            at_minus_k == &sign * shifted
        });
        rows.push(ReciprocityRow { k, at_minus_k, interior, general, reflexive });
    }
    Ok(ReciprocityReport { rows })
}

/// Closed-form Ehrhart polynomial of a reflexive polygon or 3-polytope.
pub fn reflexive_closed_form(p: &Polytope) -> Result<EhrhartPolynomial> {
    if !p.is_reflexive() {
        return Err(Error::Unsupported("closed form needs a reflexive polytope".into()));
    }
    let vol = measure(p).volume;
    let poly = match p.dim() {
        2 => Polynomial::new(vec![q(1, 1), vol.clone(), vol]),
        3 => Polynomial::new(vec![q(1, 1), &vol / q(2, 1) + q(2, 1), &vol * q(3, 2), vol]),
        n => return Err(Error::Unsupported(format!("no reflexive closed form in dimension {n}"))),
    };
    Ok(EhrhartPolynomial { poly, source: EhrhartSource::ReflexiveClosedForm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{hull_from_vertices, polytope_from_halfspaces};
    use crate::LatticePoint;

    fn pts(p: &[&[i64]]) -> Vec<LatticePoint> {
        p.iter().map(|x| x.to_vec()).collect()
    }

    fn p2() -> Polytope {
        hull_from_vertices(&pts(&[&[-1, -1], &[2, -1], &[-1, 2]])).unwrap()
    }

    fn f1() -> Polytope {
        polytope_from_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]), &[1, 1, 1, 1]).unwrap()
    }

    fn cube3() -> Polytope {
        let mut v = Vec::new();
        for a in [-1, 1] {
            for b in [-1, 1] {
                for c in [-1, 1] {
                    v.push(vec![a, b, c]);
                }
            }
        }
        hull_from_vertices(&v).unwrap()
    }

    fn brute(p: &Polytope, k: i64, strict: bool) -> u64 {
        let (lo, hi) = p.bounding_box();
        let mut count = 0;
        let mut u: Vec<i64> = lo.iter().map(|x| x * k).collect();
        loop {
            let ok = p.facets().iter().all(|f| {
                let s = f.normal.iter().zip(&u).map(|(a, b)| a * b).sum::<i64>() + k * f.offset;
                if strict { s > 0 } else { s >= 0 }
            });
            count += u64::from(ok);
            let mut i = u.len();
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                if u[i] < hi[i] * k {
                    u[i] += 1;
                    break;
                }
                u[i] = lo[i] * k;
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_points(&p2(), 1).unwrap(), 10);
        assert_eq!(count_points(&f1(), 1).unwrap(), 9);
        assert_eq!(count_points(&cube3(), 2).unwrap(), 125);
        assert_eq!(count_points(&f1(), 0).unwrap(), 1);
        assert!(count_points(&f1(), -1).is_err());
        for k in 1..4 {
            for p in [p2(), f1(), cube3()] {
                assert_eq!(count_points(&p, k).unwrap(), brute(&p, k, false));
                assert_eq!(interior_count(&p, k).unwrap(), brute(&p, k, true));
            }
        }
    }

    #[test]
    fn interior_counts() {
        assert_eq!(interior_count(&f1(), 1).unwrap(), 1);
        let square = hull_from_vertices(&pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]])).unwrap();
        assert_eq!(interior_count(&square, 1).unwrap(), 1);
        assert_eq!(interior_count(&p2(), 2).unwrap(), 10);
        assert!(interior_count(&p2(), 0).is_err());
    }

    #[test]
    fn lattice_sums_of_f1() {
        let s = lattice_sums(&f1(), 1).unwrap();
        assert_eq!(s.barycenter(1), vec![q(1, 9), q(1, 9)]);
    }

    #[test]
    fn polynomials() {
        let e = ehrhart_polynomial(&p2()).unwrap();
        assert_eq!(e.poly, Polynomial::new(vec![q(1, 1), q(9, 2), q(9, 2)]));
        let seg = hull_from_vertices(&pts(&[&[0], &[1]])).unwrap();
        assert_eq!(ehrhart_polynomial(&seg).unwrap().poly, Polynomial::new(vec![q(1, 1), q(1, 1)]));
        let blowup = hull_from_vertices(&pts(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, -1], &[1, -1]])).unwrap();
        assert_eq!(
            ehrhart_polynomial(&blowup).unwrap().poly,
            Polynomial::new(vec![q(1, 1), q(7, 2), q(7, 2)])
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(reflexive_closed_form(&f1()).unwrap().poly, Polynomial::new(vec![q(1, 1), q(4, 1), q(4, 1)]));
        let c = reflexive_closed_form(&cube3()).unwrap();
        assert_eq!(c.poly, Polynomial::new(vec![q(1, 1), q(6, 1), q(12, 1), q(8, 1)]));
        assert_eq!(c.poly, ehrhart_polynomial(&cube3()).unwrap().poly);
        let big = hull_from_vertices(&pts(&[&[2, 2], &[-2, 2], &[2, -2], &[-2, -2]])).unwrap();
        assert_eq!(reflexive_closed_form(&big).unwrap_err().name(), "Unsupported");
    }

    #[test]
    fn reciprocity() {
        let r = reciprocity_check(&f1(), 4).unwrap();
        assert!(r.all_pass());
        assert!(r.rows.iter().all(|row| row.reflexive == Some(true)));
        let big = hull_from_vertices(&pts(&[&[2, 2], &[-2, 2], &[2, -2], &[-2, -2]])).unwrap();
        let r = reciprocity_check(&big, 3).unwrap();
        assert!(r.all_pass());
        assert!(r.rows.iter().all(|row| row.reflexive.is_none()));
        assert!(reciprocity_check(&cube3(), 3).unwrap().all_pass());
    }

    #[test]
    fn dilation_identity() {
        for a in 1..=3 {
            let d = f1().dilate(a).unwrap();
            for b in 0..=3 {
                assert_eq!(count_points(&f1(), a * b).unwrap(), count_points(&d, b).unwrap());
            }
        }
    }
}
