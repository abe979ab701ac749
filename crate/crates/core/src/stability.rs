//! Toric stability thresholds `delta_k` and `delta`.

use std::cmp::Ordering;

use crate::error::{inconsistency, Error, Result};
use crate::exactnum::laurent_expand_pair;
use crate::exactnum::rational::{dot_int, sub};
use crate::exactnum::sturm::last_negative_integer;
use crate::expansion::{barycenter_function, quantized_barycenter, BarycenterFunction};
use crate::lattice::solve_combination;
use crate::polytope::{facet_data, measure};
use crate::toricrr::ToricData;
use crate::{int, LaurentSeries, Polynomial, Rational, RationalFunction};

/// A threshold value and the indices of the rays attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub value: Rational,
    pub argmin: Vec<usize>,
}

/// `min_i 1 / (<c, v_i> + b_i)`.
fn threshold_at(t: &ToricData, c: &[Rational]) -> Result<Threshold> {
    let dens: Vec<Rational> = t
        .rays()
        .iter()
        .zip(t.offsets())
        .map(|(v, &b)| dot_int(c, v) + int(b))
        .collect();
    if let Some(i) = dens.iter().position(|x| *x <= int(0)) {
        return Err(Error::InvalidPolarization(format!(
            "<Bc, v_{i}> + b_{i} = {} is not positive",
            dens[i]
        )));
    }
    let max = dens.iter().max().expect("at least one ray").clone();
    let argmin = (0..dens.len()).filter(|&i| dens[i] == max).collect();
    Ok(Threshold { value: int(1) / max, argmin })
}

pub fn delta_k(t: &ToricData, k: i64) -> Result<Threshold> {
    threshold_at(t, &quantized_barycenter(t.polytope(), k)?.value)
}

pub fn delta(t: &ToricData) -> Result<Threshold> {
    threshold_at(t, &measure(t.polytope()).barycenter)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSequence {
    pub values: Vec<(i64, Threshold)>,
    /// Ray whose term attains the minimum for all `k >= k0`.
    pub dominant: usize,
    /// `delta_k` as a function of `k`, valid for `k >= k0`.
    pub dominant_function: RationalFunction,
    pub k0: i64,
    pub asymptotics: LaurentSeries,
    /// First-order term from boundary data: `-delta^2 (Vol(∂P)/2Vol) max_{i in I} <Bc(∂P) - Bc, v_i>`.
    pub first_order: Rational,
    /// `-delta (1 - delta) / 2`, when every `b_i = 1`.
    pub fano_first_order: Option<Rational>,
}

/// Numerators of `<Bc_k, v_i> + b_i` over `E_P(k)`.
fn facet_numerators(t: &ToricData, f: &BarycenterFunction) -> Vec<Polynomial> {
    t.rays()
        .iter()
        .zip(t.offsets())
        .map(|(v, &b)| &f.pairing_numerator(v) + &f.ehrhart.scale(&int(b)))
        .collect()
}

fn eventual_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    match (a - b).leading() {
        None => Ordering::Equal,
        Some(l) => l.cmp(&int(0)),
    }
}

pub fn delta_sequence(t: &ToricData, ks: &[i64], order: usize) -> Result<DeltaSequence> {
    if order < 2 {
        return Err(Error::InvalidInput("order must be at least 2".into()));
    }
    let p = t.polytope();
    let f = barycenter_function(p)?;
    let nums = facet_numerators(t, &f);
    let series: Vec<Vec<Rational>> = nums
        .iter()
        .map(|g| laurent_expand_pair(g, &f.ehrhart, order).map(|l| l.into_coeffs()))
        .collect::<Result<_>>()?;

    // largest term for large k: lexicographic on the expansions, then exact
    let mut dominant = 0;
    for i in 1..nums.len() {
        let ord = series[i]
            .cmp(&series[dominant])
            .then_with(|| eventual_cmp(&nums[i], &nums[dominant]));
        if ord == Ordering::Greater {
            dominant = i;
        }
    }
    let top = &nums[dominant];
    let mut k0 = 1;
    for (j, g) in nums.iter().enumerate() {
        if j == dominant {
            continue;
        }
        if let Some(k) = last_negative_integer(&(top - g), 1)? {
            k0 = k0.max(k + 1);
        }
    }
    let dominant_function = RationalFunction::new(f.ehrhart.clone(), top.clone())?;
    let asymptotics = laurent_expand_pair(&f.ehrhart, top, order)?;

    let mut values = Vec::with_capacity(ks.len());
    for &k in ks {
        let d = delta_k(t, k)?;
        if k >= k0 && dominant_function.eval_int(k).as_ref() != Some(&d.value) {
            return Err(inconsistency!("dominant rational function disagrees with delta_k at k={k}"));
        }
        values.push((k, d));
    }

    let limit = delta(t)?;
    if *asymptotics.coeff(0) != limit.value {
        return Err(inconsistency!("leading term of delta_k differs from delta"));
    }
    let m = measure(p);
    let fd = facet_data(p)?;
    let shift = sub(&fd.boundary_barycenter, &m.barycenter);
    let best = limit
        .argmin
        .iter()
        .map(|&i| dot_int(&shift, &t.rays()[i]))
        .max()
        .expect("argmin is nonempty");
    let first_order = -(&limit.value * &limit.value) * &fd.boundary_normalized_volume / (int(2) * &m.volume) * best;
    if *asymptotics.coeff(1) != first_order {
        return Err(inconsistency!(
            "first-order term {} of delta_k differs from the boundary formula {first_order}",
            asymptotics.coeff(1)
        ));
    }
    let fano_first_order = t.offsets().iter().all(|&b| b == 1).then(|| {
        -(&limit.value * (int(1) - &limit.value)) / int(2)
    });
    if fano_first_order.as_ref().is_some_and(|a| *a != first_order) {
        return Err(inconsistency!("Fano first-order term differs from the boundary formula"));
    }
    Ok(DeltaSequence { values, dominant, dominant_function, k0, asymptotics, first_order, fano_first_order })
}

/// `delta_k` of a smooth toric del Pezzo surface from `delta` and `K^2`.
pub fn del_pezzo_closed_form(t: &ToricData, k: i64) -> Result<Rational> {
    if t.dim() != 2 || !t.is_reflexive() || !t.is_delzant() {
        return Err(Error::Unsupported("closed form needs a smooth reflexive polygon".into()));
    }
    if k < 1 {
        return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
    }
    let k2 = facet_data(t.polytope())?.boundary_normalized_volume;
    let d = delta(t)?.value;
    let ratio = int((k + 1) * (2 * k + 1)) * &k2 / (int(4) + int(2 * k * (k + 1)) * &k2);
    Ok(int(1) / (int(1) + ratio * (int(1) / d - int(1))))
}

/// `S_k(v) = <Bc_k, v> - min_{u in P} <u, v>`.
pub fn expected_vanishing_order(t: &ToricData, v: &[i64], k: i64) -> Result<Rational> {
    if v.len() != t.dim() {
        return Err(Error::InvalidInput("direction of the wrong dimension".into()));
    }
    let bc = quantized_barycenter(t.polytope(), k)?.value;
    Ok(dot_int(&bc, v) - int(t.polytope().support_value(v)))
}

/// Log discrepancy of the toric valuation `v`: the sum of its coordinates in
/// the rays of a simplicial cone of the fan containing it.
pub fn log_discrepancy(t: &ToricData, v: &[i64]) -> Result<Rational> {
    let n = t.dim();
    if v.len() != n {
        return Err(Error::InvalidInput("direction of the wrong dimension".into()));
    }
    if v.iter().all(|&x| x == 0) {
        return Ok(int(0));
    }
    let p = t.polytope();
    for w in 0..p.vertices().len() {
        let rays: Vec<Vec<i64>> = p
            .incidence()
            .iter()
            .zip(p.facets())
            .filter(|(inc, _)| inc.binary_search(&w).is_ok())
            .map(|(_, f)| f.normal.clone())
            .collect();
        if rays.len() != n {
            continue;
        }
        if let Some(c) = solve_combination(&rays, v) {
            if c.iter().all(|x| *x >= int(0)) {
                return Ok(c.into_iter().sum());
            }
        }
    }
    Err(Error::Unsupported(format!("no simplicial cone of the fan contains {v:?}")))
}
