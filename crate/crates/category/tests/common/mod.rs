//! Shared construction helpers for the engine tests.
#![allow(dead_code)] // each test binary uses a subset

use lambek_models::{builtin_group, AbMapExact, AbObjectExact, CayleyGroup, GrpHom, PtMap, PtObject};

pub fn pt(src: usize, dst: usize, table: &[usize]) -> PtMap {
    PtMap::new(
        PtObject::new(src).unwrap(),
        PtObject::new(dst).unwrap(),
        table.to_vec(),
    )
    .unwrap()
}

pub fn z() -> AbObjectExact {
    AbObjectExact::free(1)
}

pub fn zn(n: i64) -> AbObjectExact {
    AbObjectExact::cyclic(n)
}

pub fn ab(src: AbObjectExact, dst: AbObjectExact, rows: &[Vec<i64>]) -> AbMapExact {
    AbMapExact::from_i64(src, dst, rows).unwrap()
}

/// `Z -> Z`, multiplication by `m`.
pub fn zmap(m: i64) -> AbMapExact {
    ab(z(), z(), &[vec![m]])
}

pub fn factors(o: &AbObjectExact) -> Vec<i64> {
    use lambek_models::int::Int;
    o.invariant_factors()
        .unwrap()
        .iter()
        .map(|d| d.to_i64().unwrap())
        .collect()
}

pub fn s3() -> CayleyGroup {
    builtin_group("S3").unwrap()
}

pub fn sign_hom() -> GrpHom {
    let s3 = s3();
    let c2 = CayleyGroup::cyclic(2);
    lambek_models::grp::enumerate_homs(&s3, &c2)
        .into_iter()
        .find(|h| !h.is_null())
        .unwrap()
}
