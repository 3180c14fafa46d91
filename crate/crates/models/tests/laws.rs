//! Property suites for the linear-algebra layer and the raw model
//! primitives.

use lambek_models::hnf::{hnf, kernel_basis, lattice_canonical, lattice_contains, lattice_solve};
use lambek_models::mat::Mat;
use lambek_models::snf::snf;
use lambek_models::{abgroup, grp, ptset};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type M = Mat<BigInt>;

fn small_matrix() -> impl Strategy<Value = M> {
    (1usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-6i64..=6, r * c)
            .prop_map(move |data| M::from_fn(r, c, |i, j| BigInt::from(data[i * c + j])))
    })
}

proptest! {
    #[test]
    fn snf_transforms_are_consistent(a in small_matrix()) {
        let n = snf(&a).unwrap();
        let uav = n.u.try_mul(&a).unwrap().try_mul(&n.v).unwrap();
        prop_assert_eq!(&uav, &n.s);
        prop_assert_eq!(n.u.try_mul(&n.u_inv).unwrap(), M::identity(a.rows()));
        prop_assert_eq!(n.v.try_mul(&n.v_inv).unwrap(), M::identity(a.cols()));
        let d = n.diagonal();
        for w in d.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        for x in &d {
            prop_assert!(*x >= BigInt::zero());
        }
    }

    #[test]
    fn hnf_preserves_the_column_lattice(a in small_matrix()) {
        let n = hnf(&a).unwrap();
        prop_assert_eq!(a.try_mul(&n.v).unwrap(), n.h.clone());
        // Mutual containment of the two column lattices.
        for j in 0..a.cols() {
            prop_assert!(lattice_contains(&n.h, &a.col(j)).unwrap());
            prop_assert!(lattice_contains(&a, &n.h.col(j)).unwrap());
        }
        // Canonical form is a fixed point.
        let c = lattice_canonical(&a).unwrap();
        prop_assert_eq!(lattice_canonical(&c).unwrap(), c);
    }

    #[test]
    fn lattice_solve_finds_actual_coefficients(
        a in small_matrix(),
        coeffs in proptest::collection::vec(-4i64..=4, 0..=4),
    ) {
        let c: Vec<BigInt> = (0..a.cols())
            .map(|j| BigInt::from(coeffs.get(j).copied().unwrap_or(1)))
            .collect();
        let target = a.try_mul_vec(&c).unwrap();
        let found = lattice_solve(&a, &target).unwrap();
        prop_assert!(found.is_some(), "a member of the lattice must be solvable");
        let back = a.try_mul_vec(&found.unwrap()).unwrap();
        prop_assert_eq!(back, target);
    }

    #[test]
    fn kernel_basis_annihilates(a in small_matrix()) {
        let k = kernel_basis(&a).unwrap();
        prop_assert!(a.try_mul(&k).unwrap().is_zero());
    }
}

proptest! {
    #[test]
    fn ptset_composition_laws(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = ptset::sample::random_object(&mut rng, 8);
        let y = ptset::sample::random_object(&mut rng, 8);
        let z = ptset::sample::random_object(&mut rng, 8);
        let w = ptset::sample::random_object(&mut rng, 8);
        let f = ptset::sample::random_map_between(&mut rng, &x, &y);
        let g = ptset::sample::random_map_between(&mut rng, &y, &z);
        let h = ptset::sample::random_map_between(&mut rng, &z, &w);
        // Associativity and identities.
        let left = h.compose(&g).compose(&f);
        let right = h.compose(&g.compose(&f));
        prop_assert_eq!(left.table(), right.table());
        let idx = ptset::PtMap::identity(&x);
        let idy = ptset::PtMap::identity(&y);
        let f_id = f.compose(&idx);
        let id_f = idy.compose(&f);
        prop_assert_eq!(f_id.table(), f.table());
        prop_assert_eq!(id_f.table(), f.table());
        // The null ideal is closed under composition.
        let n = ptset::PtMap::null_map(y, z);
        prop_assert!(n.compose(&f).is_null());
        prop_assert!(h.compose(&n.compose(&f)).is_null());
    }

    #[test]
    fn abgroup_sampled_maps_are_well_defined(seed in 0u64..300) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = abgroup::sample::random_map::<BigInt>(&mut rng, 3, 3);
        // The constructor revalidates well-definedness.
        let rebuilt = abgroup::AbMap::new(f.src().clone(), f.dst().clone(), f.matrix().clone());
        prop_assert!(rebuilt.is_ok());
        // Composition with a second sampled map stays well-defined.
        let g = abgroup::sample::random_map_from(&mut rng, f.dst(), 3, 3);
        let gf = g.compose(&f).unwrap();
        let rebuilt = abgroup::AbMap::new(gf.src().clone(), gf.dst().clone(), gf.matrix().clone());
        prop_assert!(rebuilt.is_ok());
    }

    #[test]
    fn grp_enumerated_homs_are_homs_and_complete_for_cyclics(seed in 0u64..100) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = grp::sample::random_group(&mut rng, 12);
        let h = grp::sample::random_group(&mut rng, 12);
        let homs = grp::enumerate_homs(&g, &h);
        prop_assert!(!homs.is_empty());
        for hom in &homs {
            let ok = grp::GrpHom::new(g.clone(), h.clone(), hom.table().to_vec());
            prop_assert!(ok.is_ok());
        }
        // |Hom(C_n, C_m)| = gcd(n, m).
        let n = rng.random_range(1usize..=8);
        let m = rng.random_range(1usize..=8);
        let count = grp::enumerate_homs(
            &grp::CayleyGroup::cyclic(n),
            &grp::CayleyGroup::cyclic(m),
        )
        .len();
        prop_assert_eq!(count, n.gcd(&m));
    }

    #[test]
    fn grp_normal_closure_is_normal_and_minimal_for_subgroups(seed in 0u64..100) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = grp::sample::random_group(&mut rng, 12);
        let seed_els: Vec<usize> = (0..g.order()).filter(|_| rng.random_bool(0.3)).collect();
        let closure = g.normal_closure(&seed_els);
        prop_assert!(g.is_subgroup(&closure));
        prop_assert!(g.is_normal(&closure));
        for &s in &seed_els {
            prop_assert!(closure.binary_search(&s).is_ok());
        }
    }
}
