//! Worked examples, each checked against an independently computed value.

use num_bigint::BigInt;
use qbary::ehrhart::{count_points, ehrhart_polynomial, interior_count, reciprocity_check};
use qbary::exactnum::{laurent_expand, Poly, RatFunc};
use qbary::expansion::{
    a1_closed_form, asymptotic_coefficients, barycenter_function, df_coefficients, rooftop, rooftop_count_identity,
};
use qbary::lattice::{hermite_normal_form, hyperplane_basis, IntegerMatrix};
use qbary::polytope::{hull_from_vertices, measure, Body, Facet};
use qbary::stability::{
    del_pezzo_closed_form, delta, delta_k, delta_sequence, expected_vanishing_order, log_discrepancy,
};
use qbary::toricrr::{
    divisor_polytope, hrr_coefficients, mixed_volume, rooftop_coefficients, rooftop_fan, ToricData, VirtualPolytope,
};
use qbary::{fixtures, int, q, Polynomial, Rational};

fn toric(name: &str) -> ToricData {
    fixtures::load(name).unwrap().toric_data().unwrap()
}

fn poly(c: &[Rational]) -> Polynomial {
    Poly::new(c.to_vec())
}

#[test]
fn laurent_of_f1_coordinate() {
    let f = RatFunc::new(
        poly(&[int(1), int(3), int(2)]),
        poly(&[int(6), int(24), int(24)]),
    )
    .unwrap();
    assert_eq!(laurent_expand(&f, 3).unwrap().coeffs(), &[q(1, 12), q(1, 24), q(-1, 48)]);
    assert_eq!(f.eval_int(1), Some(q(1, 9)));
}

#[test]
fn hnf_is_unimodular_and_triangular() {
    let a = IntegerMatrix::from_rows(&[vec![2, 4], vec![1, 3]]).unwrap();
    let (h, u) = hermite_normal_form(&a);
    assert_eq!(u.mul(&a).unwrap(), h);
    assert!(u.determinant().unwrap() == BigInt::from(1) || u.determinant().unwrap() == BigInt::from(-1));
    assert_eq!(h.get(1, 0), &BigInt::from(0));
    assert_eq!((h.get(0, 0), h.get(1, 1)), (&BigInt::from(1), &BigInt::from(2)));
    // fully reduced: the entry above the pivot 2 lies in [0, 2)
    assert_eq!(h.get(0, 1), &BigInt::from(1));
}

#[test]
fn kernel_bases() {
    assert_eq!(hyperplane_basis(&[1, 1]).unwrap(), vec![vec![1, -1]]);
    let b = hyperplane_basis(&[1, 1, 1]).unwrap();
    assert_eq!(b.len(), 2);
    for r in &b {
        assert_eq!(r.iter().sum::<i64>(), 0);
    }
    // the basis together with e_3 is unimodular, so it spans the whole kernel
    let m = IntegerMatrix::from_rows(&[b[0].clone(), b[1].clone(), vec![0, 0, 1]]).unwrap();
    assert_eq!(m.determinant().unwrap().magnitude(), &num_bigint::BigUint::from(1u32));
}

#[test]
fn hull_drops_interior_point() {
    let p = hull_from_vertices(&[vec![-1, -1], vec![2, -1], vec![-1, 2], vec![0, 0]]).unwrap();
    assert_eq!(p.vertices().len(), 3);
    let mut facets = p.facets().to_vec();
    facets.sort();
    let mut want = vec![
        Facet { normal: vec![1, 0], offset: 1 },
        Facet { normal: vec![0, 1], offset: 1 },
        Facet { normal: vec![-1, -1], offset: 1 },
    ];
    want.sort();
    assert_eq!(facets, want);
    for inc in p.incidence() {
        assert_eq!(inc.len(), 2);
    }
}

#[test]
fn counts() {
    let f1 = toric("f1");
    let p2 = toric("p2");
    assert!(f1.is_reflexive() && f1.is_delzant());
    assert_eq!(count_points(f1.polytope(), 1).unwrap(), 9);
    assert_eq!(interior_count(f1.polytope(), 1).unwrap(), 1);
    assert_eq!(interior_count(p2.polytope(), 2).unwrap(), 10);
    let e = ehrhart_polynomial(p2.polytope()).unwrap().poly;
    assert_eq!(e.eval_int(-2), int(10));
}

#[test]
fn ehrhart_examples() {
    let bl = toric("blowup-p1xp1");
    assert_eq!(ehrhart_polynomial(bl.polytope()).unwrap().poly.coeffs(), &[int(1), q(7, 2), q(7, 2)]);
    let cube = toric("cube3");
    assert!(reciprocity_check(cube.polytope(), 3).unwrap().all_pass());
    let f1 = toric("f1");
    let r = reciprocity_check(f1.polytope(), 4).unwrap();
    assert!(r.all_pass() && r.rows.iter().all(|x| x.reflexive == Some(true)));
    let fano = fixtures::load("fano-3-29").unwrap().polytope().unwrap();
    let e = ehrhart_polynomial(&fano).unwrap().poly;
    assert_eq!(e.coeff(1), measure(&fano).volume / int(2) + int(2));
}

#[test]
fn rooftop_slab_identity() {
    let p = toric("f1").polytope().clone();
    let r = rooftop(&p, &[1, 0], 2).unwrap();
    assert_eq!(r.facets().len(), 6);
    for k in 1..=4 {
        let (lhs, rhs) = rooftop_count_identity(&p, &[1, 0], 2, k).unwrap();
        assert_eq!(lhs as i128, rhs);
    }
}

#[test]
fn f1_barycenter_function_and_expansion() {
    let p = toric("f1").polytope().clone();
    let f = barycenter_function(&p).unwrap();
    assert_eq!(f.ehrhart.coeffs(), &[int(1), int(4), int(4)]);
    assert_eq!(f.numerators[0].coeffs(), &[q(1, 6), q(1, 2), q(1, 3)]);
    let a = asymptotic_coefficients(&p, 3).unwrap().terms;
    assert_eq!(a, vec![vec![q(1, 12); 2], vec![q(1, 24); 2], vec![q(-1, 48); 2]]);
    assert_eq!(a1_closed_form(&p).unwrap(), vec![q(1, 24); 2]);
    assert_eq!(df_coefficients(&p, &[1, 1], 3).unwrap(), vec![q(1, 6), q(1, 12), q(-1, 24)]);
}

#[test]
fn mixed_volume_examples() {
    let seg = |v: Vec<i64>| VirtualPolytope::from_body(Body::from_points(&[vec![0, 0], v]).unwrap());
    assert_eq!(mixed_volume(&[(seg(vec![1, 0]), 1), (seg(vec![0, 1]), 1)]).unwrap(), q(1, 2));

    let p2 = toric("p2");
    let ds: Vec<VirtualPolytope> = (0..3)
        .map(|i| {
            let mut c = vec![0; 3];
            c[i] = 1;
            divisor_polytope(&p2, &c).unwrap()
        })
        .collect();
    for a in &ds {
        for b in &ds {
            assert_eq!(mixed_volume(&[(a.clone(), 1), (b.clone(), 1)]).unwrap(), q(1, 2));
        }
    }
    // two representatives of P_{D_1}
    let l = VirtualPolytope::from_body(Body::Full(p2.polytope().clone()));
    let shifted = |m: i64| {
        let c: Vec<i64> = (0..3).map(|i| m + i64::from(i == 0)).collect();
        let top = VirtualPolytope::from_body(Body::Full(
            qbary::polytope::polytope_from_halfspaces(p2.rays(), &c).unwrap(),
        ));
        top.sub(&l.scale(m)).unwrap()
    };
    assert!(shifted(1).grothendieck_eq(&shifted(2)).unwrap());
    assert!(shifted(1).grothendieck_eq(&ds[0]).unwrap());
}

#[test]
fn hrr_and_rooftop_examples() {
    let f1 = toric("f1");
    assert_eq!(hrr_coefficients(&f1).unwrap().coeffs, vec![int(1), int(4), int(4)]);
    let c = rooftop_coefficients(&f1, &[1, 1]).unwrap();
    assert_eq!(c.values, vec![q(1, 3), int(1), q(2, 3)]);
    let fan = rooftop_fan(&toric("p2"), &[1, 0]);
    assert_eq!(fan.rays, vec![vec![1, 0, 0], vec![0, 1, 0], vec![-1, -1, 0], vec![0, 0, 1], vec![1, 0, -1]]);
    assert_eq!(fan.q, 2);
}

#[test]
fn stability_examples() {
    let f1 = toric("f1");
    let d1 = delta_k(&f1, 1).unwrap();
    assert_eq!(d1.value, q(9, 11));
    assert_eq!(f1.rays()[d1.argmin[0]], vec![1, 1]);
    let d = delta(&f1).unwrap();
    assert_eq!((d.value, f1.rays()[d.argmin[0]].clone()), (q(6, 7), vec![1, 1]));
    let bl = toric("blowup-p1xp1");
    let d = delta(&bl).unwrap();
    assert_eq!((d.value, bl.rays()[d.argmin[0]].clone()), (q(21, 25), vec![-1, -1]));

    let s = delta_sequence(&f1, &[1, 2], 2).unwrap();
    assert_eq!(s.values[1].1.value, q(5, 6));
    assert_eq!(s.asymptotics.coeffs(), &[q(6, 7), q(-3, 49)]);
    assert_eq!(s.fano_first_order, Some(q(-3, 49)));

    assert_eq!(del_pezzo_closed_form(&f1, 2).unwrap(), q(5, 6));
    assert_eq!(del_pezzo_closed_form(&bl, 1).unwrap(), q(4, 5));
    assert_eq!(delta_k(&bl, 1).unwrap().value, q(4, 5));

    let fano = toric("fano-3-29");
    let m = measure(fano.polytope());
    let want = fano
        .rays()
        .iter()
        .zip(fano.offsets())
        .map(|(v, &b)| int(1) / (qbary::exactnum::rational::dot_int(&m.barycenter, v) + int(b)))
        .min()
        .unwrap();
    assert_eq!(delta(&fano).unwrap().value, want);

    assert_eq!(expected_vanishing_order(&f1, &[1, 1], 1).unwrap(), q(11, 9));
    let p2 = toric("p2");
    for k in 1..=3 {
        assert_eq!(expected_vanishing_order(&p2, &[1, 0], k).unwrap(), int(1));
    }
    assert_eq!(log_discrepancy(&p2, &[1, 1]).unwrap(), int(2));
    assert_eq!(log_discrepancy(&p2, &[1, 0]).unwrap(), int(1));
}
