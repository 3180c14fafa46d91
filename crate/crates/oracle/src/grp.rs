//! Coset-level oracle for finite groups.
//!
//! All subgroup, closure and quotient computations here are local to this
//! module and work on raw element sets; only the multiplication table of
//! the ambient group is shared with the model. The resulting coset tables
//! are fingerprinted with the common invariant.

use crate::{LambekInput, OracleError};
use lambek_models::{CayleyGroup, GrpFingerprint, GrpHom};
use std::collections::BTreeSet;

/// What the Introduction-formula oracle found on a pair of squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrpLambekReport {
    pub im_s: GrpFingerprint,
    pub ker_t: GrpFingerprint,
    /// Whether `Im(bf)` was already normal in `Im b ∩ Im f'`. When it is
    /// not, the quotient used its normal closure and this anomaly flag is
    /// cleared.
    pub im_bf_normal: bool,
    /// Whether `Ker b · Ker g` (the subgroup generated by the union) was
    /// already normal in `Ker(cg)`.
    pub kernel_product_normal: bool,
}

fn closure_under_products(g: &CayleyGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut members: BTreeSet<usize> = seed.clone();
    members.insert(0);
    let mut frontier: Vec<usize> = members.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for y in members.clone() {
            for z in [g.mul(x, y), g.mul(y, x)] {
                if members.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    members
}

fn is_normal_in(g: &CayleyGroup, ambient: &BTreeSet<usize>, sub: &BTreeSet<usize>) -> bool {
    ambient
        .iter()
        .all(|&h| sub.iter().all(|&n| sub.contains(&g.conjugate(h, n))))
}

fn normal_closure_in(
    g: &CayleyGroup,
    ambient: &BTreeSet<usize>,
    seed: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut current = closure_under_products(g, seed);
    loop {
        let mut enlarged = current.clone();
        for &h in ambient {
            for &n in &current {
                enlarged.insert(g.conjugate(h, n));
            }
        }
        let next = closure_under_products(g, &enlarged);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Builds the coset table of `ambient / normal` locally and fingerprints
/// it. `normal` must be closed and normal in `ambient`.
fn subquotient_fingerprint(
    g: &CayleyGroup,
    ambient: &BTreeSet<usize>,
    normal: &BTreeSet<usize>,
) -> GrpFingerprint {
    let ambient_v: Vec<usize> = ambient.iter().copied().collect();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::new();
    for &x in &ambient_v {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &n in normal {
            coset_of[g.mul(x, n)] = idx;
        }
    }
    let q = reps.len();
    let table: Vec<usize> = (0..q)
        .flat_map(|i| (0..q).map(move |j| (i, j)))
        .map(|(i, j)| coset_of[g.mul(reps[i], reps[j])])
        .collect();
    CayleyGroup::new(q, table)
        .expect("coset table of a normal subgroup is a group")
        .fingerprint()
}

fn image_set(f: &GrpHom) -> BTreeSet<usize> {
    f.table().iter().copied().collect()
}

fn kernel_set(f: &GrpHom) -> BTreeSet<usize> {
    (0..f.src().order()).filter(|&x| f.table()[x] == 0).collect()
}

/// `(ker f, coker f)` fingerprints by literal preimage and quotient
/// computation.
pub fn elementwise_kernel_cokernel(f: &GrpHom) -> (GrpFingerprint, GrpFingerprint) {
    let g = f.src();
    let ker = kernel_set(f);
    let kernel_fp = subquotient_fingerprint(g, &ker, &BTreeSet::from([0]));

    let h = f.dst();
    let all_dst: BTreeSet<usize> = (0..h.order()).collect();
    let closure = normal_closure_in(h, &all_dst, &image_set(f));
    let cokernel_fp = subquotient_fingerprint(h, &all_dst, &closure);
    (kernel_fp, cokernel_fp)
}

/// The Introduction formulas on two adjacent squares, with normality
/// anomalies reported rather than asserted away.
pub fn lambek_fingerprints(input: &LambekInput<GrpHom>) -> Result<GrpLambekReport, OracleError> {
    let b_prime = input.b.dst();
    let im_b = image_set(&input.b);
    let im_f2 = image_set(&input.f2);
    let bf = input.b.compose(&input.f);
    let im_bf = image_set(&bf);
    let inter: BTreeSet<usize> = im_b.intersection(&im_f2).copied().collect();
    if !im_bf.is_subset(&inter) {
        return Err(OracleError::Unsupported(
            "Im(bf) escapes the image intersection; the squares cannot commute",
        ));
    }
    let im_bf_normal = is_normal_in(b_prime, &inter, &im_bf);
    let im_divisor = if im_bf_normal {
        im_bf
    } else {
        normal_closure_in(b_prime, &inter, &im_bf)
    };
    let im_s = subquotient_fingerprint(b_prime, &inter, &im_divisor);

    let b_obj = input.b.src();
    let cg = input.c.compose(&input.g);
    let ker_cg = kernel_set(&cg);
    let seed: BTreeSet<usize> = kernel_set(&input.b)
        .union(&kernel_set(&input.g))
        .copied()
        .collect();
    if !seed.is_subset(&ker_cg) {
        return Err(OracleError::Unsupported(
            "a kernel escapes Ker(cg); the squares cannot commute",
        ));
    }
    let product = closure_under_products(b_obj, &seed);
    let kernel_product_normal = is_normal_in(b_obj, &ker_cg, &product);
    let ker_divisor = if kernel_product_normal {
        product
    } else {
        normal_closure_in(b_obj, &ker_cg, &product)
    };
    let ker_t = subquotient_fingerprint(b_obj, &ker_cg, &ker_divisor);

    Ok(GrpLambekReport {
        im_s,
        ker_t,
        im_bf_normal,
        kernel_product_normal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lambek_models::builtin_group;

    fn sign_hom() -> GrpHom {
        let s3 = builtin_group("S3").unwrap();
        let c2 = CayleyGroup::cyclic(2);
        lambek_models::grp::enumerate_homs(&s3, &c2)
            .into_iter()
            .find(|h| !h.is_null())
            .unwrap()
    }

    #[test]
    fn sign_hom_kernel_and_cokernel() {
        let (ker, coker) = elementwise_kernel_cokernel(&sign_hom());
        assert_eq!(ker.order, 3);
        assert_eq!(coker.order, 1);
    }

    #[test]
    fn null_hom_kernel_is_the_source() {
        let s3 = builtin_group("S3").unwrap();
        let c2 = CayleyGroup::cyclic(2);
        let f = GrpHom::null_hom(s3.clone(), c2);
        let (ker, coker) = elementwise_kernel_cokernel(&f);
        assert_eq!(ker, s3.fingerprint());
        assert_eq!(coker.order, 2);
    }

    #[test]
    fn exact_row_diagram_has_matching_fingerprints() {
        // Rows A3 -> S3 -sign-> C2 with identity verticals.
        let s3 = builtin_group("S3").unwrap();
        let sign = sign_hom();
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let (a3_grp, incl) = s3.subgroup(&a3).unwrap();
        let input = LambekInput {
            f: incl.clone(),
            g: sign.clone(),
            f2: incl,
            g2: sign.clone(),
            a: GrpHom::identity(&a3_grp),
            b: GrpHom::identity(&s3),
            c: GrpHom::identity(sign.dst()),
        };
        let report = lambek_fingerprints(&input).unwrap();
        assert_eq!(report.im_s, report.ker_t);
        assert_eq!(report.im_s.order, 1);
        assert!(report.im_bf_normal && report.kernel_product_normal);
    }
}
