//! Elementwise oracle for pointed sets: everything is counting.

use crate::LambekInput;
use lambek_models::PtMap;
use std::collections::BTreeSet;

fn image(f: &PtMap) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = f.table().iter().copied().collect();
    s.insert(0);
    s
}

fn kernel_set(f: &PtMap) -> BTreeSet<usize> {
    (0..f.src().size).filter(|&i| f.table()[i] == 0).collect()
}

/// `(|ker f|, |coker f|)` by literal preimage and collapse counting.
pub fn elementwise_kernel_cokernel(f: &PtMap) -> (usize, usize) {
    let kernel = kernel_set(f).len();
    let cokernel = f.dst().size - image(f).len() + 1;
    (kernel, cokernel)
}

/// `(|Im S|, |Ker T|)` from the set-level formulas: the pointed quotient
/// by a subset collapses it to the basepoint, and the kernel product is
/// plain union.
pub fn lambek_fingerprints(input: &LambekInput<PtMap>) -> (usize, usize) {
    let im_b = image(&input.b);
    let im_f2 = image(&input.f2);
    let bf = input.b.compose(&input.f);
    let im_bf = image(&bf);
    let inter: BTreeSet<usize> = im_b.intersection(&im_f2).copied().collect();
    debug_assert!(im_bf.is_subset(&inter));
    let im_s = inter.len() - im_bf.len() + 1;

    let cg = input.c.compose(&input.g);
    let ker_cg = kernel_set(&cg);
    let ker_b = kernel_set(&input.b);
    let ker_g = kernel_set(&input.g);
    let union: BTreeSet<usize> = ker_b.union(&ker_g).copied().collect();
    debug_assert!(union.is_subset(&ker_cg));
    let ker_t = ker_cg.len() - union.len() + 1;

    (im_s, ker_t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lambek_models::PtObject;

    fn pt(src: usize, dst: usize, table: &[usize]) -> PtMap {
        PtMap::new(
            PtObject::new(src).unwrap(),
            PtObject::new(dst).unwrap(),
            table.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn null_map_has_full_kernel_and_full_cokernel() {
        let f = pt(3, 4, &[0, 0, 0]);
        assert_eq!(elementwise_kernel_cokernel(&f), (3, 4));
    }

    #[test]
    fn identity_diagram_is_trivial() {
        let id = pt(2, 2, &[0, 1]);
        let input = LambekInput {
            f: id.clone(),
            g: id.clone(),
            f2: id.clone(),
            g2: id.clone(),
            a: id.clone(),
            b: id.clone(),
            c: id,
        };
        assert_eq!(lambek_fingerprints(&input), (1, 1));
    }

    #[test]
    fn two_element_diagram_yields_two_on_both_sides() {
        let input = LambekInput {
            f: pt(1, 2, &[0]),
            g: pt(2, 2, &[0, 1]),
            f2: pt(2, 2, &[0, 1]),
            g2: pt(2, 1, &[0, 0]),
            a: pt(1, 2, &[0]),
            b: pt(2, 2, &[0, 1]),
            c: pt(2, 1, &[0, 0]),
        };
        assert_eq!(lambek_fingerprints(&input), (2, 2));
    }
}
