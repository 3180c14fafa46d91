//! Finite groups through validated Cayley tables: the semiexact model that
//! is *not* homological — kernels do not compose here, and images need a
//! normal closure before they can be quotiented out.

use lambek_category::Model;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GrpError {
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(&'static str),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("table is not a homomorphism")]
    NotHomomorphism,
    #[error("hom table length {got} does not match source order {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("hom table entry {0} out of range")]
    EntryOutOfRange(usize),
}

/// A finite group: multiplication table with the identity at index 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<usize>, // row-major: table[i * order + j] = i·j
    inv: Vec<usize>,
}

impl CayleyGroup {
    /// Validates identity, inverses and associativity.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self, GrpError> {
        if order == 0 || table.len() != order * order {
            return Err(GrpError::InvalidTable("wrong table size"));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(GrpError::InvalidTable("entry out of range"));
        }
        let mul = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            if mul(0, i) != i || mul(i, 0) != i {
                return Err(GrpError::InvalidTable("index 0 is not an identity"));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for (i, slot) in inv.iter_mut().enumerate() {
            for j in 0..order {
                if mul(i, j) == 0 && mul(j, i) == 0 {
                    *slot = j;
                }
            }
            if *slot == usize::MAX {
                return Err(GrpError::InvalidTable("an element has no inverse"));
            }
        }
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                        return Err(GrpError::InvalidTable("multiplication is not associative"));
                    }
                }
            }
        }
        Ok(CayleyGroup { order, table, inv })
    }

    pub fn trivial() -> Self {
        CayleyGroup {
            order: 1,
            table: vec![0],
            inv: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let inv = (0..n).map(|i| (n - i) % n).collect();
        CayleyGroup {
            order: n,
            table,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Closure of a subset under multiplication (inverses come for free in
    /// a finite group). Always contains the identity.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = BTreeSet::new();
        members.insert(0usize);
        let mut frontier: Vec<usize> = vec![0];
        let mut gens: Vec<usize> = gens.to_vec();
        gens.retain(|&g| members.insert(g));
        frontier.extend(&gens);
        let all_gens: Vec<usize> = members.iter().copied().collect();
        let _ = all_gens;
        while let Some(x) = frontier.pop() {
            for &g in members.clone().iter() {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if members.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        members.into_iter().collect()
    }

    /// Whether a sorted element list forms a subgroup.
    pub fn is_subgroup(&self, els: &[usize]) -> bool {
        if !els.contains(&0) {
            return false;
        }
        els.iter()
            .all(|&x| els.iter().all(|&y| els.binary_search(&self.mul(x, y)).is_ok()))
    }

    /// Whether a subgroup (given as a sorted element list) is normal.
    pub fn is_normal(&self, els: &[usize]) -> bool {
        (0..self.order).all(|g| {
            els.iter()
                .all(|&x| els.binary_search(&self.conjugate(g, x)).is_ok())
        })
    }

    /// Smallest normal subgroup containing the subset: alternates
    /// conjugation and subgroup closure until stable.
    pub fn normal_closure(&self, subset: &[usize]) -> Vec<usize> {
        let mut current = self.subgroup_generated(subset);
        loop {
            let mut with_conjugates = current.clone();
            for g in 0..self.order {
                for &x in &current {
                    with_conjugates.push(self.conjugate(g, x));
                }
            }
            let next = self.subgroup_generated(&with_conjugates);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// The subgroup on a sorted element list, with its inclusion.
    pub fn subgroup(&self, els: &[usize]) -> Result<(CayleyGroup, GrpHom), GrpError> {
        if !self.is_subgroup(els) {
            return Err(GrpError::NotSubgroup);
        }
        let index_of = |x: usize| els.binary_search(&x).expect("closed under multiplication");
        let order = els.len();
        let table = els
            .iter()
            .flat_map(|&x| els.iter().map(move |&y| (x, y)))
            .map(|(x, y)| index_of(self.mul(x, y)))
            .collect();
        let sub = CayleyGroup::new(order, table).expect("subgroup table inherits the axioms");
        let incl = GrpHom {
            src: sub.clone(),
            dst: self.clone(),
            table: els.to_vec(),
        };
        Ok((sub, incl))
    }

    /// The quotient by a normal subgroup, with the projection. Cosets are
    /// ordered by minimal representative, so the identity coset is first.
    pub fn quotient(&self, normal: &[usize]) -> Result<(CayleyGroup, GrpHom), GrpError> {
        if !self.is_subgroup(normal) {
            return Err(GrpError::NotSubgroup);
        }
        if !self.is_normal(normal) {
            return Err(GrpError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x); // x is minimal in its coset: smaller members were seen first
            for &n in normal {
                coset_of[self.mul(x, n)] = idx;
            }
        }
        let q_order = reps.len();
        let table = (0..q_order)
            .flat_map(|i| (0..q_order).map(move |j| (i, j)))
            .map(|(i, j)| coset_of[self.mul(reps[i], reps[j])])
            .collect();
        let q = CayleyGroup::new(q_order, table).expect("coset table inherits the axioms");
        let proj = GrpHom {
            src: self.clone(),
            dst: q.clone(),
            table: coset_of,
        };
        Ok((q, proj))
    }

    /// Direct product, with the two factor inclusions.
    pub fn direct_product(&self, other: &CayleyGroup) -> (CayleyGroup, GrpHom, GrpHom) {
        let (n, m) = (self.order, other.order);
        let idx = |a: usize, b: usize| a * m + b;
        let table = (0..n * m)
            .flat_map(|x| (0..n * m).map(move |y| (x, y)))
            .map(|(x, y)| {
                let (a1, b1) = (x / m, x % m);
                let (a2, b2) = (y / m, y % m);
                idx(self.mul(a1, a2), other.mul(b1, b2))
            })
            .collect();
        let prod = CayleyGroup::new(n * m, table).expect("product table inherits the axioms");
        let left = GrpHom {
            src: self.clone(),
            dst: prod.clone(),
            table: (0..n).map(|a| idx(a, 0)).collect(),
        };
        let right = GrpHom {
            src: other.clone(),
            dst: prod.clone(),
            table: (0..m).map(|b| idx(0, b)).collect(),
        };
        (prod, left, right)
    }

    /// A small generating set, greedily extended in element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = vec![0usize];
        for x in 1..self.order {
            if generated.binary_search(&x).is_err() {
                gens.push(x);
                generated = self.subgroup_generated(&gens);
                if generated.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Invariant factors of an abelian group, ascending divisibility chain.
    /// Peels a maximal-order cyclic direct summand and recurses.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        assert!(self.is_abelian(), "abelian_invariants needs an abelian group");
        if self.order == 1 {
            return Vec::new();
        }
        let x = (0..self.order)
            .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
            .expect("nonempty");
        let d = self.element_order(x);
        let (q, _) = self
            .quotient(&self.subgroup_generated(&[x]))
            .expect("subgroups of abelian groups are normal");
        let mut factors = q.abelian_invariants();
        factors.push(d);
        factors
    }

    /// `(order, element-order multiset, abelianization invariants)`: an
    /// incomplete but cheap isomorphism invariant; see [`is_isomorphic`]
    /// for the exact fallback.
    pub fn fingerprint(&self) -> GrpFingerprint {
        let mut element_orders: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        element_orders.sort_unstable();
        let commutators: Vec<usize> = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect();
        let derived = self.normal_closure(&commutators);
        let (ab, _) = self
            .quotient(&derived)
            .expect("the derived subgroup is normal");
        GrpFingerprint {
            order: self.order,
            element_orders,
            abelianization: ab.abelian_invariants(),
        }
    }
}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyGroup(order {})", self.order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrpFingerprint {
    pub order: usize,
    pub element_orders: Vec<usize>,
    pub abelianization: Vec<usize>,
}

impl fmt::Display for GrpFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.element_orders.iter().map(|o| o.to_string()).collect();
        let ab: Vec<String> = self.abelianization.iter().map(|o| o.to_string()).collect();
        write!(f, "{}|{}|{}", self.order, orders.join("."), ab.join("."))
    }
}

/// Exact isomorphism test by backtracking over generator images.
pub fn is_isomorphic(a: &CayleyGroup, b: &CayleyGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens = a.generating_set();
    if gens.is_empty() {
        return true; // both trivial
    }
    let mut images = Vec::new();
    backtrack_iso(a, b, &gens, &mut images)
}

fn backtrack_iso(a: &CayleyGroup, b: &CayleyGroup, gens: &[usize], images: &mut Vec<usize>) -> bool {
    if images.len() == gens.len() {
        return match extend_hom(a, b, gens, images) {
            Some(h) => h.is_bijective(),
            None => false,
        };
    }
    let g = gens[images.len()];
    for cand in 0..b.order() {
        if b.element_order(cand) != a.element_order(g) {
            continue;
        }
        images.push(cand);
        if backtrack_iso(a, b, gens, images) {
            images.pop();
            return true;
        }
        images.pop();
    }
    false
}

/// A group homomorphism as an element-image table.
#[derive(Clone, PartialEq, Eq)]
pub struct GrpHom {
    src: CayleyGroup,
    dst: CayleyGroup,
    table: Vec<usize>,
}

impl GrpHom {
    pub fn new(src: CayleyGroup, dst: CayleyGroup, table: Vec<usize>) -> Result<Self, GrpError> {
        if table.len() != src.order() {
            return Err(GrpError::LengthMismatch {
                got: table.len(),
                want: src.order(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= dst.order()) {
            return Err(GrpError::EntryOutOfRange(bad));
        }
        for x in 0..src.order() {
            for y in 0..src.order() {
                if table[src.mul(x, y)] != dst.mul(table[x], table[y]) {
                    return Err(GrpError::NotHomomorphism);
                }
            }
        }
        Ok(GrpHom { src, dst, table })
    }

    pub fn identity(x: &CayleyGroup) -> Self {
        GrpHom {
            src: x.clone(),
            dst: x.clone(),
            table: (0..x.order()).collect(),
        }
    }

    pub fn null_hom(src: CayleyGroup, dst: CayleyGroup) -> Self {
        let table = vec![0; src.order()];
        GrpHom { src, dst, table }
    }

    pub fn src(&self) -> &CayleyGroup {
        &self.src
    }
    pub fn dst(&self) -> &CayleyGroup {
        &self.dst
    }
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn compose(&self, first: &GrpHom) -> GrpHom {
        debug_assert!(first.dst == self.src);
        GrpHom {
            src: first.src.clone(),
            dst: self.dst.clone(),
            table: first.table.iter().map(|&x| self.table[x]).collect(),
        }
    }

    pub fn is_null(&self) -> bool {
        self.table.iter().all(|&x| x == 0)
    }

    pub fn is_bijective(&self) -> bool {
        if self.src.order() != self.dst.order() {
            return false;
        }
        let mut seen = vec![false; self.dst.order()];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.table.iter().copied().collect();
        set.into_iter().collect()
    }

    /// Inclusion of the preimage of the identity.
    pub fn kernel(&self) -> GrpHom {
        let members: Vec<usize> = (0..self.src.order()).filter(|&x| self.table[x] == 0).collect();
        let (_, incl) = self
            .src
            .subgroup(&members)
            .expect("a hom kernel is a subgroup");
        incl
    }

    /// Projection onto the quotient by the normal closure of the image.
    pub fn cokernel(&self) -> GrpHom {
        let closure = self.dst.normal_closure(&self.image());
        let (_, proj) = self
            .dst
            .quotient(&closure)
            .expect("a normal closure is normal");
        proj
    }

    pub fn lift(&self, x: &GrpHom) -> Option<GrpHom> {
        debug_assert!(self.dst == x.dst);
        let mut preimage = vec![None; self.dst.order()];
        for (i, &v) in self.table.iter().enumerate() {
            if preimage[v].is_none() {
                preimage[v] = Some(i);
            }
        }
        let mut table = Vec::with_capacity(x.table.len());
        for &v in &x.table {
            table.push(preimage[v]?);
        }
        let u = GrpHom {
            src: x.src.clone(),
            dst: self.src.clone(),
            table,
        };
        if self.compose(&u).table == x.table && u.check_hom() {
            Some(u)
        } else {
            None
        }
    }

    pub fn descend(&self, y: &GrpHom) -> Option<GrpHom> {
        debug_assert!(self.src == y.src);
        let mut table = vec![None; self.dst.order()];
        for (i, &v) in self.table.iter().enumerate() {
            match table[v] {
                None => table[v] = Some(y.table[i]),
                Some(w) if w == y.table[i] => {}
                Some(_) => return None,
            }
        }
        let table: Vec<usize> = table.into_iter().map(|v| v.unwrap_or(0)).collect();
        let u = GrpHom {
            src: self.dst.clone(),
            dst: y.dst.clone(),
            table,
        };
        if u.compose(self).table == y.table && u.check_hom() {
            Some(u)
        } else {
            None
        }
    }

    fn check_hom(&self) -> bool {
        (0..self.src.order()).all(|x| {
            (0..self.src.order())
                .all(|y| self.table[self.src.mul(x, y)] == self.dst.mul(self.table[x], self.table[y]))
        })
    }
}

impl fmt::Debug for GrpHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GrpHom({} -> {}, {:?})",
            self.src.order(),
            self.dst.order(),
            self.table
        )
    }
}

/// Builds the group of a sorted list of permutations, closed under
/// composition. The lexicographically smallest permutation must be the
/// identity, which holds for full symmetric/alternating/dihedral lists.
fn permutation_group(perms: &[Vec<usize>]) -> CayleyGroup {
    let order = perms.len();
    let index_of = |p: &Vec<usize>| {
        perms
            .binary_search(p)
            .expect("permutation set closed under composition")
    };
    let table = perms
        .iter()
        .flat_map(|p| perms.iter().map(move |q| (p, q)))
        .map(|(p, q)| {
            let composed: Vec<usize> = q.iter().map(|&x| p[x]).collect();
            index_of(&composed)
        })
        .collect();
    CayleyGroup::new(order, table).expect("permutation composition satisfies the axioms")
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

fn parity(p: &[usize]) -> bool {
    let mut even = true;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                even = !even;
            }
        }
    }
    even
}

fn quaternion_group() -> CayleyGroup {
    // Elements: index = 2·basis + sign, basis in {1, i, j, k}.
    // basis_mul[a][b] = (sign, basis) of the product.
    let basis_mul: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (bx, sx) = (x / 2, x % 2 == 1);
        let (by, sy) = (y / 2, y % 2 == 1);
        let (neg, basis) = basis_mul[bx][by];
        let sign = (sx ^ sy) ^ neg;
        basis * 2 + usize::from(sign)
    };
    let table = (0..8)
        .flat_map(|x| (0..8).map(move |y| mul(x, y)))
        .collect();
    CayleyGroup::new(8, table).expect("quaternion table satisfies the axioms")
}

/// The catalog: C1…C8, V4, S3, D4, Q8, A4.
pub fn builtin_group(name: &str) -> Result<CayleyGroup, GrpError> {
    match name {
        "C1" => Ok(CayleyGroup::trivial()),
        "C2" => Ok(CayleyGroup::cyclic(2)),
        "C3" => Ok(CayleyGroup::cyclic(3)),
        "C4" => Ok(CayleyGroup::cyclic(4)),
        "C5" => Ok(CayleyGroup::cyclic(5)),
        "C6" => Ok(CayleyGroup::cyclic(6)),
        "C7" => Ok(CayleyGroup::cyclic(7)),
        "C8" => Ok(CayleyGroup::cyclic(8)),
        "V4" => {
            let c2 = CayleyGroup::cyclic(2);
            Ok(c2.direct_product(&c2).0)
        }
        "S3" => Ok(permutation_group(&all_permutations(3))),
        "D4" => {
            let mut perms = Vec::new();
            for k in 0..4usize {
                perms.push((0..4).map(|x| (x + k) % 4).collect());
                perms.push((0..4).map(|x| (4 + k - x) % 4).collect());
            }
            perms.sort();
            Ok(permutation_group(&perms))
        }
        "Q8" => Ok(quaternion_group()),
        "A4" => {
            let perms: Vec<Vec<usize>> = all_permutations(4)
                .into_iter()
                .filter(|p| parity(p))
                .collect();
            Ok(permutation_group(&perms))
        }
        other => Err(GrpError::UnknownGroup(other.to_string())),
    }
}

/// Catalog names in a fixed order, for seeded sampling.
pub const CATALOG: [&str; 13] = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "D4", "Q8", "A4",
];

/// Extends generator images to a full hom table via words in the
/// generators; `None` when the extension is inconsistent.
fn extend_hom(
    src: &CayleyGroup,
    dst: &CayleyGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<GrpHom> {
    let mut table = vec![usize::MAX; src.order()];
    table[0] = 0;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let fy = dst.mul(table[x], img);
            if table[y] == usize::MAX {
                table[y] = fy;
                frontier.push(y);
            } else if table[y] != fy {
                return None;
            }
        }
    }
    if table.contains(&usize::MAX) {
        return None; // gens failed to generate; cannot happen for generating_set
    }
    let hom = GrpHom {
        src: src.clone(),
        dst: dst.clone(),
        table,
    };
    hom.check_hom().then_some(hom)
}

/// Every homomorphism `src -> dst`, by search over generator images with
/// element-order pruning. Order is deterministic.
pub fn enumerate_homs(src: &CayleyGroup, dst: &CayleyGroup) -> Vec<GrpHom> {
    let gens = src.generating_set();
    if gens.is_empty() {
        return vec![GrpHom::null_hom(src.clone(), dst.clone())];
    }
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search_homs(src, dst, &gens, &mut images, 0, &mut out);
    out
}

fn search_homs(
    src: &CayleyGroup,
    dst: &CayleyGroup,
    gens: &[usize],
    images: &mut Vec<usize>,
    depth: usize,
    out: &mut Vec<GrpHom>,
) {
    if depth == gens.len() {
        if let Some(h) = extend_hom(src, dst, gens, images) {
            out.push(h);
        }
        return;
    }
    let need = src.element_order(gens[depth]);
    for cand in 0..dst.order() {
        // The image's order must divide the generator's order.
        if !need.is_multiple_of(dst.element_order(cand)) {
            continue;
        }
        images[depth] = cand;
        search_homs(src, dst, gens, images, depth + 1, out);
    }
}

/// The Cayley-group model.
pub struct Grp;

impl Model for Grp {
    type Object = CayleyGroup;
    type Map = GrpHom;

    const NAME: &'static str = "grp";
    const IS_HOMOLOGICAL: bool = false;

    fn src(f: &GrpHom) -> &CayleyGroup {
        f.src()
    }
    fn dst(f: &GrpHom) -> &CayleyGroup {
        f.dst()
    }
    fn identity(x: &CayleyGroup) -> GrpHom {
        GrpHom::identity(x)
    }
    fn compose(g: &GrpHom, f: &GrpHom) -> GrpHom {
        g.compose(f)
    }
    fn map_eq(f: &GrpHom, g: &GrpHom) -> bool {
        f.table() == g.table()
    }
    fn is_null(f: &GrpHom) -> bool {
        f.is_null()
    }
    fn is_null_object(x: &CayleyGroup) -> bool {
        x.order() == 1
    }
    fn is_iso(f: &GrpHom) -> bool {
        f.is_bijective()
    }
    fn kernel(f: &GrpHom) -> GrpHom {
        f.kernel()
    }
    fn cokernel(f: &GrpHom) -> GrpHom {
        f.cokernel()
    }
    fn lift(through: &GrpHom, x: &GrpHom) -> Option<GrpHom> {
        through.lift(x)
    }
    fn descend(through: &GrpHom, y: &GrpHom) -> Option<GrpHom> {
        through.descend(y)
    }
}

pub mod sample {
    //! Seeded random groups and homomorphisms over the catalog.

    use super::*;
    use rand::Rng;

    pub fn random_group(rng: &mut impl Rng, max_order: usize) -> CayleyGroup {
        let eligible: Vec<&str> = CATALOG
            .iter()
            .copied()
            .filter(|name| builtin_group(name).expect("catalog name").order() <= max_order.max(1))
            .collect();
        let name = eligible[rng.random_range(0..eligible.len())];
        builtin_group(name).expect("catalog name")
    }

    pub fn random_hom_between(
        rng: &mut impl Rng,
        src: &CayleyGroup,
        dst: &CayleyGroup,
    ) -> GrpHom {
        let homs = enumerate_homs(src, dst);
        homs[rng.random_range(0..homs.len())].clone()
    }

    pub fn random_hom(rng: &mut impl Rng, max_order: usize) -> GrpHom {
        let src = random_group(rng, max_order);
        let dst = random_group(rng, max_order);
        random_hom_between(rng, &src, &dst)
    }

    /// A random hom with normal image — the exact morphisms of this model.
    /// The null hom keeps the pool nonempty.
    pub fn random_exact_hom_from(rng: &mut impl Rng, src: &CayleyGroup, max_order: usize) -> GrpHom {
        let dst = random_group(rng, max_order);
        let exact: Vec<GrpHom> = enumerate_homs(src, &dst)
            .into_iter()
            .filter(|h| h.dst().is_normal(&h.image()))
            .collect();
        exact[rng.random_range(0..exact.len())].clone()
    }

    /// A random normal-subgroup projection out of `g`.
    pub fn random_cokernel_from(rng: &mut impl Rng, g: &CayleyGroup) -> GrpHom {
        let seed: Vec<usize> = (0..g.order()).filter(|_| rng.random_bool(0.3)).collect();
        let closure = g.normal_closure(&seed);
        let (_, proj) = g.quotient(&closure).expect("closure is normal");
        proj
    }

    /// A random kernel arrow out of `g`: its inclusion into a direct
    /// product with a small catalog factor (product factors are normal).
    pub fn random_kernel_from(rng: &mut impl Rng, g: &CayleyGroup, max_order: usize) -> GrpHom {
        let budget = (max_order / g.order()).max(1);
        let factor = random_group(rng, budget.min(3));
        let (_, left, _) = g.direct_product(&factor);
        left
    }
}
