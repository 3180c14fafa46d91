//! Seeded diagram generation with exact rows by construction.
//!
//! The canonical shape: draw `f : A -> B` and an exact `b : B -> B'` at
//! random, then close the diagram with `a = id`, `f' = b∘f`, `g = coker f`,
//! `g' = coker f'` and the `c` induced by the cokernel property. Rows are
//! exact because `im f = ker(coker f)` holds by definition. The abgroup
//! generator additionally samples a nontrivial `a` by solving the
//! commutation equation `f'∘a = b∘f` for `f'`, with rejection.

use crate::doc::{DiagramDoc, ModelTag, MorphDecl, ObjDecl};
use lambek_category::{cofactor_through, cokernel, comp, LambekDiagram, Model};
use lambek_models::int::Int;
use lambek_models::{abgroup, grp, ptset, AbExact, Grp, Pt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub model: ModelTag,
    pub seed: u64,
    pub max_size: usize,
}

/// Generates the seven morphisms of an exact-row diagram in model `M` from
/// `f`, an exact `b`, and an optional `a` already solved against them.
fn close_diagram<M: Model>(
    f: M::Map,
    b: M::Map,
    solved: Option<(M::Map, M::Map)>,
) -> LambekDiagram<M> {
    let (a, f2) = match solved {
        Some((a, f2)) => (a, f2),
        None => (M::identity(M::src(&f)), comp::<M>(&b, &f)),
    };
    let g = cokernel::<M>(&f);
    let g2 = cokernel::<M>(&f2);
    let c = cofactor_through::<M>(&g, &comp::<M>(&g2.arrow, &b))
        .expect("g'∘b kills f because g'∘f' is null and the square S commutes");
    LambekDiagram::new(f, g.arrow, f2, g2.arrow, a, b, c)
        .expect("generated diagram commutes by construction")
}

pub fn generate_ptset(rng: &mut ChaCha8Rng, max_size: usize) -> LambekDiagram<Pt> {
    let a_obj = ptset::sample::random_object(rng, max_size);
    let b_obj = ptset::sample::random_object(rng, max_size);
    let f = ptset::sample::random_map_between(rng, &a_obj, &b_obj);
    // An identity b keeps Im b maximal, which is where the invariants are
    // most often nontrivial.
    let b = if rng.random_bool(0.3) {
        lambek_models::PtMap::identity(&b_obj)
    } else {
        ptset::sample::random_exact_from(rng, &b_obj, max_size)
    };

    // Solver variant: draw a random a : A -> A2 and sample among all
    // solutions f' of f'∘a = b∘f. The minimal solution comes from
    // descending through a; everything outside im(a) is unconstrained, and
    // randomizing it is what makes Im f' exceed Im(bf).
    let solved = if rng.random_bool(0.5) {
        let a2_obj = ptset::sample::random_object(rng, max_size);
        let a = ptset::sample::random_map_between(rng, &a_obj, &a2_obj);
        let bf = b.compose(&f);
        a.descend(&bf).map(|base| {
            let hit: std::collections::BTreeSet<usize> = a.table().iter().copied().collect();
            let mut table = base.table().to_vec();
            for (e, entry) in table.iter_mut().enumerate().skip(1) {
                if !hit.contains(&e) {
                    *entry = rng.random_range(0..base.dst().size);
                }
            }
            let f2 = lambek_models::PtMap::new(a2_obj, *base.dst(), table)
                .expect("surgery preserves validity");
            (a, f2)
        })
    } else {
        None
    };
    close_diagram::<Pt>(f, b, solved)
}

pub fn generate_abgroup(rng: &mut ChaCha8Rng, max_rank: usize) -> LambekDiagram<AbExact> {
    let a_obj = abgroup::sample::random_object(rng, max_rank, 3);
    let b_obj = abgroup::sample::random_object(rng, max_rank, 3);
    let f = abgroup::sample::random_map_between(rng, &a_obj, &b_obj);
    let b = if rng.random_bool(0.3) {
        lambek_models::AbMapExact::identity(&b_obj)
    } else {
        abgroup::sample::random_map_from(rng, &b_obj, max_rank, 3)
    };

    // Solver variant: a random a : A -> A2 with f' sampled from the full
    // solution set of f'∘a = b∘f, which is the minimal solution shifted by
    // anything that kills im(a) — i.e. by h0∘coker(a).
    let solved = if rng.random_bool(0.5) {
        let a2_obj = abgroup::sample::random_object(rng, max_rank, 3);
        let a = abgroup::sample::random_map_between(rng, &a_obj, &a2_obj);
        let bf = b.compose(&f).expect("unbounded scalar");
        a.descend(&bf).expect("unbounded scalar").map(|base| {
            let ca = a.cokernel().expect("unbounded scalar");
            let h0 = abgroup::sample::random_map_between(rng, ca.dst(), b.dst());
            let h = h0.compose(&ca).expect("unbounded scalar");
            let sum = base
                .matrix()
                .try_add_mat(h.matrix())
                .expect("unbounded scalar");
            let f2 = lambek_models::AbMapExact::new(a2_obj.clone(), b.dst().clone(), sum)
                .expect("a sum of morphisms is a morphism");
            (a, f2)
        })
    } else {
        None
    };
    close_diagram::<AbExact>(f, b, solved)
}

pub fn generate_grp(rng: &mut ChaCha8Rng, max_order: usize) -> LambekDiagram<Grp> {
    // Row exactness in grp must be the classical kind — literal images
    // equal to literal kernels — which the cokernel closure only delivers
    // for normal images. Reject until f, b∘f (and a solved f', if any)
    // have normal images; the null hom makes the loop terminate.
    for _ in 0..32 {
        let a_obj = grp::sample::random_group(rng, max_order);
        let b_obj = grp::sample::random_group(rng, max_order);
        let f = grp::sample::random_hom_between(rng, &a_obj, &b_obj);
        let b = if rng.random_bool(0.4) {
            lambek_models::GrpHom::identity(&b_obj)
        } else {
            grp::sample::random_exact_hom_from(rng, &b_obj, max_order)
        };
        if !b_obj.is_normal(&f.image()) {
            continue;
        }
        let bf = b.compose(&f);
        if !b.dst().is_normal(&bf.image()) {
            continue;
        }
        let solved = if rng.random_bool(0.5) {
            let a2_obj = grp::sample::random_group(rng, max_order);
            let a = grp::sample::random_hom_between(rng, &a_obj, &a2_obj);
            // Sample among all homs A2 -> B' solving f'∘a = b∘f with a
            // normal image; the search space is small at catalog scale.
            let candidates: Vec<lambek_models::GrpHom> =
                grp::enumerate_homs(&a2_obj, b.dst())
                    .into_iter()
                    .filter(|h| h.compose(&a).table() == bf.table())
                    .filter(|h| b.dst().is_normal(&h.image()))
                    .collect();
            if candidates.is_empty() {
                None
            } else {
                let f2 = candidates[rng.random_range(0..candidates.len())].clone();
                Some((a, f2))
            }
        } else {
            None
        };
        return close_diagram::<Grp>(f, b, solved);
    }
    // Degenerate but always valid: the null diagram over the last draw.
    let a_obj = grp::sample::random_group(rng, max_order);
    let b_obj = grp::sample::random_group(rng, max_order);
    let f = lambek_models::GrpHom::null_hom(a_obj, b_obj.clone());
    let b = lambek_models::GrpHom::identity(&b_obj);
    close_diagram::<Grp>(f, b, None)
}

/// Renders a generated diagram into document form. Deterministic per seed.
pub fn generate_diagram(cfg: &GenConfig) -> DiagramDoc {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match cfg.model {
        ModelTag::Ptset => render_ptset(&generate_ptset(&mut rng, cfg.max_size.clamp(1, 64))),
        ModelTag::Abgroup => {
            render_abgroup(&generate_abgroup(&mut rng, cfg.max_size.clamp(1, 3)))
        }
        ModelTag::Grp => render_grp(&generate_grp(&mut rng, cfg.max_size.clamp(1, 12))),
    }
}

const OBJECT_NAMES: [&str; 6] = ["A", "B", "C", "A2", "B2", "C2"];
const MORPH_NAMES: [&str; 7] = ["f", "g", "f2", "g2", "a", "b", "c"];

fn lambek_binding() -> [String; 7] {
    std::array::from_fn(|i| MORPH_NAMES[i].to_string())
}

fn six_objects<M: Model>(d: &LambekDiagram<M>) -> [M::Object; 6] {
    [
        M::src(&d.f).clone(),
        M::dst(&d.f).clone(),
        M::dst(&d.g).clone(),
        M::src(&d.f2).clone(),
        M::dst(&d.f2).clone(),
        M::dst(&d.g2).clone(),
    ]
}

fn seven_maps<M: Model>(d: &LambekDiagram<M>) -> [M::Map; 7] {
    [
        d.f.clone(),
        d.g.clone(),
        d.f2.clone(),
        d.g2.clone(),
        d.a.clone(),
        d.b.clone(),
        d.c.clone(),
    ]
}

/// Endpoint names per morphism position, in `OBJECT_NAMES` indices.
const ENDPOINTS: [(usize, usize); 7] = [
    (0, 1), // f : A -> B
    (1, 2), // g : B -> C
    (3, 4), // f2
    (4, 5), // g2
    (0, 3), // a
    (1, 4), // b
    (2, 5), // c
];

fn render_ptset(d: &LambekDiagram<Pt>) -> DiagramDoc {
    let objects = six_objects::<Pt>(d)
        .iter()
        .zip(OBJECT_NAMES)
        .map(|(o, n)| (n.to_string(), ObjDecl::PtSize(o.size)))
        .collect();
    let morphs = seven_maps::<Pt>(d)
        .iter()
        .zip(MORPH_NAMES)
        .zip(ENDPOINTS)
        .map(|((m, n), (s, t))| {
            (
                n.to_string(),
                MorphDecl {
                    src: OBJECT_NAMES[s].to_string(),
                    dst: OBJECT_NAMES[t].to_string(),
                    rows: vec![m.table().iter().map(|&x| x as i64).collect()],
                    line: 0,
                },
            )
        })
        .collect();
    DiagramDoc {
        model: ModelTag::Ptset,
        objects,
        morphs,
        lambek: lambek_binding(),
        lambek_line: 0,
    }
}

fn mat_rows<T: Int>(m: &lambek_models::mat::Mat<T>) -> Vec<Vec<i64>> {
    if m.cols() == 0 {
        // Zero-column matrices round-trip as the empty bracket group; the
        // row count is reconstructed from the declared ranks.
        return Vec::new();
    }
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m[(i, j)].to_i64().expect("generated entries stay small"))
                .collect()
        })
        .collect()
}

fn render_abgroup(d: &LambekDiagram<AbExact>) -> DiagramDoc {
    let objects = six_objects::<AbExact>(d)
        .iter()
        .zip(OBJECT_NAMES)
        .map(|(o, n)| {
            (
                n.to_string(),
                ObjDecl::AbPres {
                    gens: o.rank(),
                    rels: mat_rows(o.rels()),
                },
            )
        })
        .collect();
    let morphs = seven_maps::<AbExact>(d)
        .iter()
        .zip(MORPH_NAMES)
        .zip(ENDPOINTS)
        .map(|((m, n), (s, t))| {
            (
                n.to_string(),
                MorphDecl {
                    src: OBJECT_NAMES[s].to_string(),
                    dst: OBJECT_NAMES[t].to_string(),
                    rows: mat_rows(m.matrix()),
                    line: 0,
                },
            )
        })
        .collect();
    DiagramDoc {
        model: ModelTag::Abgroup,
        objects,
        morphs,
        lambek: lambek_binding(),
        lambek_line: 0,
    }
}

fn render_grp(d: &LambekDiagram<Grp>) -> DiagramDoc {
    let objects = six_objects::<Grp>(d)
        .iter()
        .zip(OBJECT_NAMES)
        .map(|(o, n)| {
            let order = o.order();
            let rows = (0..order)
                .map(|i| (0..order).map(|j| o.mul(i, j)).collect())
                .collect();
            (n.to_string(), ObjDecl::GrpTable { order, rows })
        })
        .collect();
    let morphs = seven_maps::<Grp>(d)
        .iter()
        .zip(MORPH_NAMES)
        .zip(ENDPOINTS)
        .map(|((m, n), (s, t))| {
            (
                n.to_string(),
                MorphDecl {
                    src: OBJECT_NAMES[s].to_string(),
                    dst: OBJECT_NAMES[t].to_string(),
                    rows: vec![m.table().iter().map(|&x| x as i64).collect()],
                    line: 0,
                },
            )
        })
        .collect();
    DiagramDoc {
        model: ModelTag::Grp,
        objects,
        morphs,
        lambek: lambek_binding(),
        lambek_line: 0,
    }
}
