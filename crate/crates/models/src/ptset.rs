//! Finite pointed sets: the homological model where non-exact morphisms
//! are everywhere.
//!
//! Elements of an object of size `n` are `0..n`, the basepoint is `0`. The
//! null morphisms are those factoring through the one-point object, i.e.
//! the all-zero tables. Kernels are basepoint preimages, cokernels collapse
//! the image; both renumber order-preserving with the basepoint first, so
//! they are deterministic.

use lambek_category::Model;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PtError {
    #[error("a pointed set needs at least the basepoint")]
    EmptyObject,
    #[error("table entry {value} at index {index} is out of range for target size {size}")]
    EntryOutOfRange {
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("table must fix the basepoint: table[0] = 0")]
    BasepointNotFixed,
    #[error("table length {got} does not match source size {want}")]
    LengthMismatch { got: usize, want: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PtObject {
    pub size: usize,
}

impl PtObject {
    pub fn new(size: usize) -> Result<Self, PtError> {
        if size == 0 {
            return Err(PtError::EmptyObject);
        }
        Ok(PtObject { size })
    }

    pub fn point() -> Self {
        PtObject { size: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtMap {
    src: PtObject,
    dst: PtObject,
    table: Vec<usize>,
}

impl PtMap {
    pub fn new(src: PtObject, dst: PtObject, table: Vec<usize>) -> Result<Self, PtError> {
        if table.len() != src.size {
            return Err(PtError::LengthMismatch {
                got: table.len(),
                want: src.size,
            });
        }
        if table.first() != Some(&0) {
            return Err(PtError::BasepointNotFixed);
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= dst.size {
                return Err(PtError::EntryOutOfRange {
                    index,
                    value,
                    size: dst.size,
                });
            }
        }
        Ok(PtMap { src, dst, table })
    }

    pub fn identity(x: &PtObject) -> Self {
        PtMap {
            src: *x,
            dst: *x,
            table: (0..x.size).collect(),
        }
    }

    pub fn null_map(src: PtObject, dst: PtObject) -> Self {
        PtMap {
            src,
            dst,
            table: vec![0; src.size],
        }
    }

    pub fn src(&self) -> &PtObject {
        &self.src
    }

    pub fn dst(&self) -> &PtObject {
        &self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn compose(&self, first: &PtMap) -> PtMap {
        debug_assert_eq!(first.dst, self.src);
        PtMap {
            src: first.src,
            dst: self.dst,
            table: first.table.iter().map(|&i| self.table[i]).collect(),
        }
    }

    pub fn is_null(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    pub fn is_bijective(&self) -> bool {
        if self.src.size != self.dst.size {
            return false;
        }
        let mut seen = vec![false; self.dst.size];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Inclusion of the basepoint preimage, renumbered order-preserving.
    pub fn kernel(&self) -> PtMap {
        let members: Vec<usize> = (0..self.src.size).filter(|&i| self.table[i] == 0).collect();
        PtMap {
            src: PtObject {
                size: members.len(),
            },
            dst: self.src,
            table: members,
        }
    }

    /// Collapse of the image to the basepoint, the rest renumbered
    /// order-preserving starting at 1.
    pub fn cokernel(&self) -> PtMap {
        let mut in_image = vec![false; self.dst.size];
        for &v in &self.table {
            in_image[v] = true;
        }
        in_image[0] = true;
        let mut table = Vec::with_capacity(self.dst.size);
        let mut next = 1;
        for hit in in_image {
            if hit {
                table.push(0);
            } else {
                table.push(next);
                next += 1;
            }
        }
        PtMap {
            src: self.dst,
            dst: PtObject { size: next },
            table,
        }
    }

    /// Exactness criterion native to this model: injective away from the
    /// kernel. Used as a cross-check against the categorical route.
    pub fn injective_off_kernel(&self) -> bool {
        let mut seen = vec![false; self.dst.size];
        for &v in &self.table {
            if v == 0 {
                continue;
            }
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn lift(&self, x: &PtMap) -> Option<PtMap> {
        debug_assert_eq!(self.dst, x.dst);
        let mut preimage = vec![None; self.dst.size];
        for (i, &v) in self.table.iter().enumerate() {
            if preimage[v].is_none() {
                preimage[v] = Some(i);
            }
        }
        let mut table = Vec::with_capacity(x.table.len());
        for &v in &x.table {
            table.push(preimage[v]?);
        }
        let u = PtMap {
            src: x.src,
            dst: self.src,
            table,
        };
        // Guards the non-injective corner: the chosen preimages must
        // actually reproduce x.
        if self.compose(&u).table == x.table {
            Some(u)
        } else {
            None
        }
    }

    pub fn descend(&self, y: &PtMap) -> Option<PtMap> {
        debug_assert_eq!(self.src, y.src);
        let mut table = vec![None; self.dst.size];
        for (i, &v) in self.table.iter().enumerate() {
            match table[v] {
                None => table[v] = Some(y.table[i]),
                Some(w) if w == y.table[i] => {}
                Some(_) => return None, // y is not constant on a fiber
            }
        }
        let table: Vec<usize> = table.into_iter().map(|v| v.unwrap_or(0)).collect();
        let u = PtMap {
            src: self.dst,
            dst: y.dst,
            table,
        };
        if u.compose(self).table == y.table {
            Some(u)
        } else {
            None
        }
    }
}

/// The pointed-set model.
pub struct Pt;

impl Model for Pt {
    type Object = PtObject;
    type Map = PtMap;

    const NAME: &'static str = "ptset";
    const IS_HOMOLOGICAL: bool = true;

    fn src(f: &PtMap) -> &PtObject {
        f.src()
    }
    fn dst(f: &PtMap) -> &PtObject {
        f.dst()
    }
    fn identity(x: &PtObject) -> PtMap {
        PtMap::identity(x)
    }
    fn compose(g: &PtMap, f: &PtMap) -> PtMap {
        g.compose(f)
    }
    fn map_eq(f: &PtMap, g: &PtMap) -> bool {
        f.table() == g.table()
    }
    fn is_null(f: &PtMap) -> bool {
        f.is_null()
    }
    fn is_null_object(x: &PtObject) -> bool {
        x.size == 1
    }
    fn is_iso(f: &PtMap) -> bool {
        f.is_bijective()
    }
    fn kernel(f: &PtMap) -> PtMap {
        f.kernel()
    }
    fn cokernel(f: &PtMap) -> PtMap {
        f.cokernel()
    }
    fn lift(through: &PtMap, x: &PtMap) -> Option<PtMap> {
        through.lift(x)
    }
    fn descend(through: &PtMap, y: &PtMap) -> Option<PtMap> {
        through.descend(y)
    }
}

pub mod sample {
    //! Seeded random pointed sets and maps, uniform over tables fixing the
    //! basepoint.

    use super::*;
    use rand::Rng;

    pub fn random_object(rng: &mut impl Rng, max_size: usize) -> PtObject {
        PtObject {
            size: rng.random_range(1..=max_size.max(1)),
        }
    }

    pub fn random_map_between(rng: &mut impl Rng, src: &PtObject, dst: &PtObject) -> PtMap {
        let mut table = vec![0usize];
        for _ in 1..src.size {
            table.push(rng.random_range(0..dst.size));
        }
        PtMap::new(*src, *dst, table).expect("sampled table is valid by construction")
    }

    pub fn random_map(rng: &mut impl Rng, max_size: usize) -> PtMap {
        let src = random_object(rng, max_size);
        let dst = random_object(rng, max_size);
        random_map_between(rng, &src, &dst)
    }

    /// A random exact map from `src`: kill a random subset, embed the rest.
    pub fn random_exact_from(rng: &mut impl Rng, src: &PtObject, max_size: usize) -> PtMap {
        let killed: Vec<bool> = (0..src.size)
            .map(|i| i == 0 || rng.random_bool(0.4))
            .collect();
        let alive = killed.iter().filter(|&&k| !k).count();
        let extra = rng.random_range(0..=2usize);
        let dst_size = (alive + 1 + extra).min(max_size.max(alive + 1));
        let dst = PtObject { size: dst_size };

        let mut targets: Vec<usize> = (1..dst_size).collect();
        // Partial shuffle to pick distinct non-basepoint images.
        for i in 0..alive.min(targets.len()) {
            let j = rng.random_range(i..targets.len());
            targets.swap(i, j);
        }
        let mut table = Vec::with_capacity(src.size);
        let mut next = 0;
        for &kill in &killed {
            if kill {
                table.push(0);
            } else {
                table.push(targets[next]);
                next += 1;
            }
        }
        PtMap::new(*src, dst, table).expect("sampled exact map is valid")
    }

    /// A random injection from `src` into a possibly larger object: always
    /// a kernel arrow in this model.
    pub fn random_kernel_from(rng: &mut impl Rng, src: &PtObject, max_size: usize) -> PtMap {
        let dst_size = rng.random_range(src.size..=max_size.max(src.size));
        let dst = PtObject { size: dst_size };
        let mut targets: Vec<usize> = (1..dst_size).collect();
        for i in 0..(src.size - 1).min(targets.len()) {
            let j = rng.random_range(i..targets.len());
            targets.swap(i, j);
        }
        let mut table = vec![0usize];
        table.extend_from_slice(&targets[..src.size - 1]);
        PtMap::new(*src, dst, table).expect("sampled injection is valid")
    }

    /// A random collapse onto a fresh quotient object: always a cokernel
    /// arrow in this model.
    pub fn random_cokernel_from(rng: &mut impl Rng, src: &PtObject) -> PtMap {
        let killed: Vec<bool> = (0..src.size)
            .map(|i| i == 0 || rng.random_bool(0.4))
            .collect();
        let alive = killed.iter().filter(|&&k| !k).count();
        let dst = PtObject { size: alive + 1 };
        let mut perm: Vec<usize> = (1..=alive).collect();
        for i in 0..perm.len() {
            let j = rng.random_range(i..perm.len());
            perm.swap(i, j);
        }
        let mut table = Vec::with_capacity(src.size);
        let mut next = 0;
        for &kill in &killed {
            if kill {
                table.push(0);
            } else {
                table.push(perm[next]);
                next += 1;
            }
        }
        PtMap::new(*src, dst, table).expect("sampled collapse is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(src: usize, dst: usize, table: &[usize]) -> PtMap {
        PtMap::new(
            PtObject::new(src).unwrap(),
            PtObject::new(dst).unwrap(),
            table.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_null_map_is_identity() {
        let f = map(3, 2, &[0, 0, 0]);
        let k = f.kernel();
        assert_eq!(k.table(), &[0, 1, 2]);
        assert_eq!(k.src().size, 3);
    }

    #[test]
    fn kernel_picks_basepoint_preimage() {
        let f = map(4, 3, &[0, 1, 1, 0]);
        let k = f.kernel();
        assert_eq!(k.table(), &[0, 3]);
    }

    #[test]
    fn kernel_of_injective_map_is_trivial() {
        let f = map(3, 3, &[0, 2, 1]);
        let k = f.kernel();
        assert_eq!(k.table(), &[0]);
    }

    #[test]
    fn cokernel_of_null_map_is_identity() {
        let f = map(2, 3, &[0, 0]);
        let c = f.cokernel();
        assert_eq!(c.table(), &[0, 1, 2]);
        assert_eq!(c.dst().size, 3);
    }

    #[test]
    fn cokernel_collapses_the_image() {
        let f = map(2, 3, &[0, 1]);
        let c = f.cokernel();
        assert_eq!(c.table(), &[0, 0, 1]);
        assert_eq!(c.dst().size, 2);
    }

    #[test]
    fn cokernel_of_surjection_is_trivial() {
        let f = map(3, 3, &[0, 2, 1]);
        let c = f.cokernel();
        assert_eq!(c.dst().size, 1);
        assert!(c.is_null());
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let x = PtObject::new(2).unwrap();
        let y = PtObject::new(2).unwrap();
        assert_eq!(
            PtMap::new(x, y, vec![1, 0]),
            Err(PtError::BasepointNotFixed)
        );
        assert!(matches!(
            PtMap::new(x, y, vec![0, 5]),
            Err(PtError::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            PtMap::new(x, y, vec![0]),
            Err(PtError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn lift_refuses_targets_outside_the_subobject() {
        let incl = map(2, 3, &[0, 1]);
        let inside = map(2, 3, &[0, 1]);
        let outside = map(2, 3, &[0, 2]);
        assert!(incl.lift(&inside).is_some());
        assert!(incl.lift(&outside).is_none());
    }

    #[test]
    fn descend_requires_constancy_on_fibers() {
        let collapse = map(3, 2, &[0, 0, 1]);
        let constant = map(3, 2, &[0, 0, 1]);
        let not_constant = map(3, 2, &[0, 1, 0]);
        assert!(collapse.descend(&constant).is_some());
        assert!(collapse.descend(&not_constant).is_none());
    }
}
