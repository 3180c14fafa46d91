//! Pullbacks of kernels, pushouts of cokernels, induced boundary morphisms
//! and homology objects.

mod common;

use common::*;
use lambek_category::{
    classify, cokernel, comp, homology_object, induced_boundary_morphisms, kernel,
    pullback_of_kernel, pushout_of_cokernel, quotient_equal, subobject_equal, CategoryError,
    CokernelArrow, KernelArrow, Model, Square,
};
use lambek_models::{AbExact, AbMapExact, Pt};

#[test]
fn pulling_a_kernel_back_along_the_identity_returns_it() {
    let beta = KernelArrow::<AbExact>::from_mono(zmap(2)).unwrap();
    let (k, f_leg) = pullback_of_kernel::<AbExact>(&beta, &zmap(1));
    assert!(subobject_equal::<AbExact>(&k, &beta));
    assert!(classify::<AbExact>(&f_leg).is_iso);
}

#[test]
fn pullback_of_even_numbers_along_times_three() {
    let beta = KernelArrow::<AbExact>::from_mono(zmap(2)).unwrap();
    let (k, f_leg) = pullback_of_kernel::<AbExact>(&beta, &zmap(3));
    // 3x even iff x even.
    assert!(subobject_equal::<AbExact>(
        &k,
        &KernelArrow::<AbExact>::from_mono(zmap(2)).unwrap()
    ));
    assert!(AbMapExact::eq(&f_leg, &zmap(3)).unwrap());
    // The square commutes: beta ∘ f_leg = f ∘ k.
    let lhs = comp::<AbExact>(&beta.arrow, &f_leg);
    let rhs = comp::<AbExact>(&zmap(3), &k.arrow);
    assert!(<AbExact as Model>::map_eq(&lhs, &rhs));
}

#[test]
fn pullback_with_disjoint_images_is_trivial_in_ptset() {
    let beta = KernelArrow::<Pt>::from_mono(pt(2, 3, &[0, 1])).unwrap();
    let f = pt(2, 3, &[0, 2]);
    let (k, _) = pullback_of_kernel::<Pt>(&beta, &f);
    assert_eq!(k.arrow.src().size, 1);
}

#[test]
fn pushing_a_cokernel_out_along_the_identity_returns_it() {
    let alpha = cokernel::<AbExact>(&zmap(4));
    let (c, g_leg) = pushout_of_cokernel::<AbExact>(&alpha, &zmap(1));
    assert!(quotient_equal::<AbExact>(&c, &alpha));
    assert!(classify::<AbExact>(&g_leg).is_iso);
}

#[test]
fn pushout_of_z4_along_times_two_is_z8() {
    let alpha = cokernel::<AbExact>(&zmap(4)); // Z -> Z/4
    let (c, g_leg) = pushout_of_cokernel::<AbExact>(&alpha, &zmap(2));
    assert_eq!(factors(c.arrow.dst()), vec![8]);
    // Induced Z/4 -> Z/8 is multiplication by two.
    assert_eq!(
        g_leg.matrix(),
        &lambek_models::IMat::from_i64_rows(&[vec![2]])
    );
    let lhs = comp::<AbExact>(&g_leg, &alpha.arrow);
    let rhs = comp::<AbExact>(&c.arrow, &zmap(2));
    assert!(<AbExact as Model>::map_eq(&lhs, &rhs));
}

#[test]
fn pushout_collapsing_everything_in_ptset() {
    let alpha = CokernelArrow::<Pt>::from_epi(pt(3, 2, &[0, 0, 1])).unwrap();
    let g = pt(3, 2, &[0, 1, 0]);
    let (c, _) = pushout_of_cokernel::<Pt>(&alpha, &g);
    assert_eq!(c.arrow.dst().size, 1);
}

#[test]
fn induced_morphisms_of_the_identity_square_live_on_null_objects() {
    let id = zmap(1);
    let sq = Square::<AbExact>::new(id.clone(), id.clone(), id.clone(), id).unwrap();
    let (g_hat, f_hat) = induced_boundary_morphisms::<AbExact>(&sq);
    assert!(g_hat.src().is_zero_object().unwrap());
    assert!(g_hat.dst().is_zero_object().unwrap());
    assert!(f_hat.src().is_zero_object().unwrap());
    assert!(f_hat.dst().is_zero_object().unwrap());
}

#[test]
fn induced_cokernel_morphism_of_a_commuting_square() {
    // top [2], bottom [2], verticals [1]: the induced map on Z/2 is the identity.
    let sq = Square::<AbExact>::new(zmap(2), zmap(1), zmap(1), zmap(2)).unwrap();
    let (_, f_hat) = induced_boundary_morphisms::<AbExact>(&sq);
    assert_eq!(factors(f_hat.src()), vec![2]);
    assert!(classify::<AbExact>(&f_hat).is_iso);
}

#[test]
fn induced_cokernel_morphism_doubles_into_z4() {
    // top [2], bottom [4], left [1], right [2]: 2·2 = 4·1 commutes.
    let sq = Square::<AbExact>::new(zmap(2), zmap(1), zmap(2), zmap(4)).unwrap();
    let (g_hat, f_hat) = induced_boundary_morphisms::<AbExact>(&sq);
    assert!(g_hat.src().is_zero_object().unwrap());
    assert_eq!(factors(f_hat.src()), vec![2]);
    assert_eq!(factors(f_hat.dst()), vec![4]);
    assert_eq!(
        f_hat.matrix(),
        &lambek_models::IMat::from_i64_rows(&[vec![2]])
    );
}

#[test]
fn square_validation_catches_non_commuting_data() {
    assert!(matches!(
        Square::<AbExact>::new(zmap(2), zmap(1), zmap(1), zmap(3)),
        Err(CategoryError::PreconditionFailed("square does not commute"))
    ));
}

#[test]
fn homology_of_identity_pair_is_the_object_itself() {
    let id = zmap(1);
    let i = KernelArrow::<AbExact>::from_mono(id.clone()).unwrap();
    let q = CokernelArrow::<AbExact>::from_epi(id).unwrap();
    let h = homology_object::<AbExact>(&i, &q).unwrap();
    assert_eq!(factors(&h.h), vec![0]);
    assert!(classify::<AbExact>(&h.pi.arrow).is_iso);
    assert!(classify::<AbExact>(&h.iota.arrow).is_iso);
}

#[test]
fn homology_of_even_numbers_inside_z4() {
    let i = KernelArrow::<AbExact>::from_mono(zmap(2)).unwrap();
    let q = cokernel::<AbExact>(&zmap(4)); // Z -> Z/4
    let h = homology_object::<AbExact>(&i, &q).unwrap();
    assert_eq!(factors(&h.h), vec![2]);
    assert_eq!(
        h.iota.arrow.matrix(),
        &lambek_models::IMat::from_i64_rows(&[vec![2]])
    );
    // iota ∘ pi = q ∘ i on the nose.
    let lhs = comp::<AbExact>(&h.iota.arrow, &h.pi.arrow);
    let rhs = comp::<AbExact>(&q.arrow, &i.arrow);
    assert!(<AbExact as Model>::map_eq(&lhs, &rhs));
}

#[test]
fn homology_collapse_of_the_included_part_is_trivial() {
    let i = KernelArrow::<Pt>::from_mono(pt(2, 3, &[0, 1])).unwrap();
    let q = CokernelArrow::<Pt>::from_epi(pt(3, 2, &[0, 0, 1])).unwrap();
    let h = homology_object::<Pt>(&i, &q).unwrap();
    assert_eq!(h.h.size, 1);
}

#[test]
fn homology_precondition_failure_is_reported() {
    let i = KernelArrow::<Pt>::from_mono(pt(2, 3, &[0, 1])).unwrap();
    // Collapse of {0, 2}: its kernel is not contained in the image of i.
    let q = CokernelArrow::<Pt>::from_epi(pt(3, 2, &[0, 1, 0])).unwrap();
    assert!(matches!(
        homology_object::<Pt>(&i, &q),
        Err(CategoryError::PreconditionFailed(_))
    ));
}

#[test]
fn kernel_arrows_pull_back_to_kernel_arrows() {
    // Axiom 4* shape on a concrete cospan: cokernel leg opposite a kernel.
    let beta = KernelArrow::<Pt>::from_mono(pt(2, 3, &[0, 2])).unwrap();
    let q = CokernelArrow::<Pt>::from_epi(pt(4, 3, &[0, 0, 1, 2])).unwrap();
    let (k, f_leg) = pullback_of_kernel::<Pt>(&beta, &q.arrow);
    assert!(classify::<Pt>(&k.arrow).is_kernel);
    assert!(classify::<Pt>(&f_leg).is_cokernel);
}

#[test]
fn composites_of_kernels_are_kernels_in_homological_models() {
    let k1 = kernel::<AbExact>(&ab(z(), zn(2), &[vec![1]])); // 2Z into Z
    let inner = kernel::<AbExact>(&cokernel::<AbExact>(&zmap(3)).arrow); // 3Z into Z
    let composite = comp::<AbExact>(&k1.arrow, &inner.arrow);
    assert!(classify::<AbExact>(&composite).is_kernel);
}
