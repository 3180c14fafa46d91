//! Lattice-arithmetic and enumeration oracles for abelian presentations.
//!
//! Subgroups of a presented group live here as column lattices in the
//! generator space that contain the relation lattice. The two Lambek
//! invariants are quotients of nested lattices, and a quotient's invariant
//! factors come from the Smith form of the expression of the sublattice in
//! a basis of the big one.

use crate::abenum::Enumerator;
use crate::{LambekInput, OracleError};
use lambek_models::abgroup::{AbMap, AbObject};
use lambek_models::hnf::{lattice_canonical, lattice_solve, preimage_lattice};
use lambek_models::int::Int;
use lambek_models::mat::Mat;
use lambek_models::snf::snf;

/// Default enumeration budget.
pub const ENUM_BOUND: u64 = 10_000;

/// The sublattice of `Z^p` presenting the image of `f` inside its target:
/// image columns together with the target's relations.
fn image_lattice<T: Int>(f: &AbMap<T>) -> Result<Mat<T>, OracleError> {
    Ok(lattice_canonical(
        &f.matrix().hstack(f.dst().rels()),
    )?)
}

/// Intersection of two column lattices in the same ambient space.
fn intersect<T: Int>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>, OracleError> {
    let stacked = a.hstack(b);
    let null = lambek_models::hnf::kernel_basis(&stacked)?;
    let x_part = null.submatrix_rows(&(0..a.cols()).collect::<Vec<_>>());
    Ok(lattice_canonical(&a.try_mul(&x_part)?)?)
}

/// Invariant factors of `big / small` for nested lattices: express each
/// basis vector of `small` in a basis of `big` and read the Smith diagonal.
fn quotient_factors<T: Int>(big: &Mat<T>, small: &Mat<T>) -> Result<Vec<T>, OracleError> {
    let mut rels = Mat::zero(big.cols(), small.cols());
    for j in 0..small.cols() {
        let c = lattice_solve(big, &small.col(j))?
            .ok_or(OracleError::Unsupported("lattices are not nested"))?;
        for i in 0..big.cols() {
            rels[(i, j)] = c[i].clone();
        }
    }
    let n = snf(&rels)?;
    let diag = n.diagonal();
    let mut factors = Vec::new();
    for i in 0..big.cols() {
        let d = diag.get(i).cloned().unwrap_or_else(T::zero);
        if !d.is_one() {
            factors.push(d);
        }
    }
    Ok(factors)
}

/// `(Im S, Ker T)` invariant factors by pure lattice arithmetic:
/// `(L(Im b) ∩ L(Im f')) / L(Im bf)` and `L(Ker cg) / (L(Ker b) + L(Ker g))`.
pub fn lambek_fingerprints<T: Int>(
    input: &LambekInput<AbMap<T>>,
) -> Result<(Vec<T>, Vec<T>), OracleError> {
    let im_b = image_lattice(&input.b)?;
    let im_f2 = image_lattice(&input.f2)?;
    let bf = input.b.compose(&input.f)?;
    let im_bf = image_lattice(&bf)?;
    let inter = intersect(&im_b, &im_f2)?;
    let im_s = quotient_factors(&inter, &im_bf)?;

    let cg = input.c.compose(&input.g)?;
    let ker_cg = preimage_lattice(cg.matrix(), cg.dst().rels())?;
    let ker_b = preimage_lattice(input.b.matrix(), input.b.dst().rels())?;
    let ker_g = preimage_lattice(input.g.matrix(), input.g.dst().rels())?;
    let sum = lattice_canonical(&ker_b.hstack(&ker_g))?;
    let ker_t = quotient_factors(&ker_cg, &sum)?;

    Ok((im_s, ker_t))
}

/// `(|ker f|, |coker f|)` by literal element enumeration; requires both
/// endpoints finite within the bound.
pub fn elementwise_kernel_cokernel<T: Int>(
    f: &AbMap<T>,
    bound: u64,
) -> Result<(u64, u64), OracleError> {
    let src_enum = Enumerator::new(f.src())?;
    let dst_enum = Enumerator::new(f.dst())?;
    let src_order = src_enum.bounded_order(bound)?;
    let dst_order = dst_enum.bounded_order(bound)?;

    let zero_dst = dst_enum.canon(&vec![T::zero(); f.dst().rank()]);
    let mut kernel = 0u64;
    let mut image = std::collections::BTreeSet::new();
    for x in src_enum.elements() {
        let y = f.matrix().try_mul_vec(&x)?;
        let cy = dst_enum.canon(&y);
        if cy == zero_dst {
            kernel += 1;
        }
        image.insert(cy);
    }
    debug_assert_eq!(kernel * image.len() as u64, src_order);
    Ok((kernel, dst_order / image.len() as u64))
}

/// The order of a presented group, within the bound.
pub fn bounded_order<T: Int>(obj: &AbObject<T>, bound: u64) -> Result<u64, OracleError> {
    Enumerator::new(obj)?.bounded_order(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Obj = AbObject<BigInt>;
    type Map = AbMap<BigInt>;

    fn z() -> Obj {
        Obj::free(1)
    }

    fn zmap(m: i64) -> Map {
        Map::from_i64(z(), z(), &[vec![m]]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_and_cokernel_of_doubling_on_z4() {
        let z4 = Obj::cyclic(4);
        let f = Map::from_i64(z4.clone(), z4, &[vec![2]]).unwrap();
        assert_eq!(elementwise_kernel_cokernel(&f, 100).unwrap(), (2, 2));
    }

    #[test]
    fn null_map_has_everything_in_the_kernel() {
        let z4 = Obj::cyclic(4);
        let z2 = Obj::cyclic(2);
        let f = Map::from_i64(z4, z2, &[vec![0]]).unwrap();
        assert_eq!(elementwise_kernel_cokernel(&f, 100).unwrap(), (4, 2));
    }

    #[test]
    fn infinite_objects_are_rejected_by_enumeration() {
        assert!(matches!(
            elementwise_kernel_cokernel(&zmap(2), 100),
            Err(OracleError::Unsupported(_))
        ));
    }

    #[test]
    fn golden_diagram_fingerprints() {
        // Rows Z -[2]-> Z -mod2-> Z/2, verticals [2], [2], 0.
        let z2 = Obj::cyclic(2);
        let mod2 = Map::from_i64(z(), z2.clone(), &[vec![1]]).unwrap();
        let input = LambekInput {
            f: zmap(2),
            g: mod2.clone(),
            f2: zmap(2),
            g2: mod2,
            a: zmap(2),
            b: zmap(2),
            c: Map::from_i64(z2.clone(), z2, &[vec![0]]).unwrap(),
        };
        let (im_s, ker_t) = lambek_fingerprints(&input).unwrap();
        assert_eq!(im_s, ints(&[2]));
        assert_eq!(ker_t, ints(&[2]));
    }

    #[test]
    fn identity_diagram_fingerprints_are_trivial() {
        let id = zmap(1);
        let input = LambekInput {
            f: id.clone(),
            g: id.clone(),
            f2: id.clone(),
            g2: id.clone(),
            a: id.clone(),
            b: id.clone(),
            c: id,
        };
        let (im_s, ker_t) = lambek_fingerprints(&input).unwrap();
        assert_eq!(im_s, ints(&[]));
        assert_eq!(ker_t, ints(&[]));
    }
}
