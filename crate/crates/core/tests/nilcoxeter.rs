use cylkit::cylindric::{phi_inv, ribbon_r, CylType, CylindricShape};
use cylkit::nilcoxeter::{
    ee, hh, nc_kschur, nc_kschur_projected, nc_multiply, nc_multiply_in, quotient_project, verify_decomposition,
    verify_ribbon_theorem, NilCoxeterElement,
};
use cylkit::stanley::Expander;
use cylkit::{CyclicSet, Direction, Partition};

#[test]
fn h1_h2_commute_at_n4() {
    let (h1, h2) = (hh(1, 4).unwrap(), hh(2, 4).unwrap());
    assert_eq!(nc_multiply(&h1, &h2).unwrap(), nc_multiply(&h2, &h1).unwrap());
}

#[test]
fn interval_times_member_vanishes() {
    let ty = CylType::new(2, 4).unwrap();
    let d = CyclicSet::new(4, &[0, 1], Direction::Decreasing).unwrap();
    let a0 = NilCoxeterElement::generator(0, 4).unwrap();
    assert!(nc_multiply_in(ty, &NilCoxeterElement::basis(d.element()), &a0).unwrap().is_zero());
}

#[test]
fn ribbon_kschur_at_3_6() {
    let ty = CylType::new(3, 6).unwrap();
    let r = ribbon_r(ty);
    let s = nc_kschur_projected(&r, ty, &mut Expander::new()).unwrap();
    assert_eq!(s.len(), 20);
    assert!(s.terms().all(|(_, c)| c == 1));
    let eh = quotient_project(&nc_multiply(&ee(3, 6).unwrap(), &hh(3, 6).unwrap()).unwrap(), ty);
    assert_eq!(s, eh);
    assert!(verify_ribbon_theorem(ty, &mut Expander::new()).unwrap().passed());
}

#[test]
fn decomposition_instance() {
    let ty = CylType::new(3, 6).unwrap();
    let shape = CylindricShape::straight(ty, Partition::new(vec![2, 1]).unwrap(), 1).unwrap();
    let w = phi_inv(&shape).unwrap();
    assert_eq!(w.length(), 9);
    let report = verify_decomposition(ty, 9, &mut Expander::new()).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn full_kschur_matches_projection_on_quotient() {
    let ty = CylType::new(2, 4).unwrap();
    let r = ribbon_r(ty);
    let full = nc_kschur(&r).unwrap();
    let projected = nc_kschur_projected(&r, ty, &mut Expander::new()).unwrap();
    assert_eq!(quotient_project(&full, ty), projected);
}
