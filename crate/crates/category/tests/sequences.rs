//! Null-sequence reports and the six-term sequence of a composition.

mod common;

use common::*;
use lambek_category::{classify, composition_sequence, sequence_report, CategoryError, Model};
use lambek_models::{AbExact, Pt};

#[test]
fn a_single_morphism_yields_an_empty_report() {
    let r = sequence_report::<AbExact>(&[zmap(2)]).unwrap();
    assert!(r.order_two.is_empty());
    assert!(r.exact_at.is_empty());
}

#[test]
fn times_two_then_mod_two_is_exact_in_the_middle() {
    let ms = [zmap(2), ab(z(), zn(2), &[vec![1]])];
    let r = sequence_report::<AbExact>(&ms).unwrap();
    assert_eq!(r.order_two, vec![true]);
    assert_eq!(r.exact_at, vec![true]);
}

#[test]
fn times_four_then_mod_two_has_order_two_but_is_not_exact() {
    let ms = [zmap(4), ab(z(), zn(2), &[vec![1]])];
    let r = sequence_report::<AbExact>(&ms).unwrap();
    assert_eq!(r.order_two, vec![true]);
    assert_eq!(r.exact_at, vec![false]);
}

#[test]
fn non_composable_chains_are_rejected() {
    let ms = [zmap(2), ab(zn(2), zn(2), &[vec![1]])];
    assert_eq!(
        sequence_report::<AbExact>(&ms),
        Err(CategoryError::CompositionMismatch(0, 1))
    );
}

#[test]
fn composition_with_an_identity_has_an_isomorphic_psi() {
    let f = zmap(1);
    let g = zmap(2);
    let s = composition_sequence::<AbExact>(&f, &g).unwrap();
    assert!(<AbExact as Model>::src(&s.phi).is_zero_object().unwrap());
    assert!(classify::<AbExact>(&s.psi).is_iso);
    assert!(s.order_two.iter().all(|&b| b));
    assert!(s.exact_at.iter().all(|&b| b));
}

#[test]
fn six_terms_of_times_two_twice() {
    // 0 -> 0 -> 0 -> Z/2 -> Z/4 -> Z/2 -> 0, exact everywhere.
    let s = composition_sequence::<AbExact>(&zmap(2), &zmap(2)).unwrap();
    assert!(<AbExact as Model>::src(&s.chi).is_zero_object().unwrap());
    assert_eq!(factors(s.epsilon.src()), vec![2]);
    assert_eq!(factors(s.epsilon.dst()), vec![4]);
    assert_eq!(factors(s.omega.dst()), vec![2]);
    assert_eq!(
        s.epsilon.matrix(),
        &lambek_models::IMat::from_i64_rows(&[vec![2]])
    );
    assert_eq!(
        s.omega.matrix(),
        &lambek_models::IMat::from_i64_rows(&[vec![1]])
    );
    assert!(s.order_two.iter().all(|&b| b));
    assert_eq!(s.exact_at, [true; 6]);
    assert!(s.phi_exact && s.psi_exact && s.epsilon_exact && s.omega_exact);
}

#[test]
fn six_terms_of_a_pointed_set_pair() {
    // f maps the only non-basepoint to x; g kills x and keeps y.
    let f = pt(2, 3, &[0, 1]);
    let g = pt(3, 2, &[0, 0, 1]);
    let s = composition_sequence::<Pt>(&f, &g).unwrap();
    assert_eq!(s.phi.dst().size, 2); // Ker(gf) has two elements
    assert_eq!(s.psi.dst().size, 2); // Ker g = {*, x}
    assert!(<Pt as Model>::is_null(&s.chi));
    assert!(s.order_two.iter().all(|&b| b));
    assert_eq!(s.exact_at, [true; 6]); // f and g are both exact here
    assert!(s.psi_exact && s.epsilon_exact);
}

#[test]
fn conditional_exactness_tracks_the_failing_factor() {
    // f = fold map (not exact), g = identity-ish collapse: exactness at
    // Ker g is the clause conditioned on f being exact.
    let f = pt(3, 2, &[0, 1, 1]);
    let g = pt(2, 2, &[0, 1]);
    let s = composition_sequence::<Pt>(&f, &g).unwrap();
    assert!(s.order_two.iter().all(|&b| b));
    // Unconditional positions hold regardless.
    assert!(s.exact_at[0] && s.exact_at[1] && s.exact_at[4] && s.exact_at[5]);
}
