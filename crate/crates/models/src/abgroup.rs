//! Finitely generated abelian groups as integer matrix presentations.
//!
//! An object is `Z^rank` modulo the column lattice of its relation matrix.
//! A morphism is an integer matrix on generators that carries source
//! relations into the target's relation lattice. Kernels are preimage
//! lattices, cokernels extend the relation list, and both are eagerly
//! simplified to the diagonal presentation their Smith form dictates;
//! correctness of the simplification is up to isomorphism, which is the only
//! notion the engine compares by.

use crate::hnf::{lattice_contains_cols, lattice_solve, preimage_lattice};
use crate::int::{Int, Overflow};
use crate::mat::Mat;
use crate::snf::snf;
use lambek_category::Model;

use std::fmt;
use std::marker::PhantomData;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AbError {
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("relation matrix must have exactly one row per generator")]
    RelationShape,
    #[error("matrix does not carry source relations into the target lattice")]
    NotWellDefined,
    #[error("matrix has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    MatrixShape {
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
}

/// A presentation: `rank` generators, relations the columns of `rels`.
#[derive(Clone, PartialEq, Eq)]
pub struct AbObject<T: Int> {
    rank: usize,
    rels: Mat<T>,
}

impl<T: Int> AbObject<T> {
    pub fn new(rank: usize, rels: Mat<T>) -> Result<Self, AbError> {
        if rels.rows() != rank {
            return Err(AbError::RelationShape);
        }
        Ok(AbObject { rank, rels })
    }

    /// `Z^rank` with no relations.
    pub fn free(rank: usize) -> Self {
        AbObject {
            rank,
            rels: Mat::zero(rank, 0),
        }
    }

    /// `Z/n`.
    pub fn cyclic(n: i64) -> Self {
        AbObject {
            rank: 1,
            rels: Mat::from_i64_rows(&[vec![n]]),
        }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rels(&self) -> &Mat<T> {
        &self.rels
    }

    /// Nontrivial invariant factors in divisibility order, `0` for each
    /// free summand, factors `1` dropped. Empty for the zero group.
    pub fn invariant_factors(&self) -> Result<Vec<T>, Overflow> {
        let n = snf(&self.rels)?;
        let diag = n.diagonal();
        let mut factors = Vec::new();
        for i in 0..self.rank {
            let d = diag.get(i).cloned().unwrap_or_else(T::zero);
            if !d.is_one() {
                factors.push(d);
            }
        }
        Ok(factors)
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Result<Option<T>, Overflow> {
        let mut acc = T::one();
        for d in self.invariant_factors()? {
            if d.is_zero() {
                return Ok(None);
            }
            acc = acc.try_mul(&d)?;
        }
        Ok(Some(acc))
    }

    pub fn is_zero_object(&self) -> Result<bool, Overflow> {
        Ok(self.invariant_factors()?.is_empty())
    }
}

impl<T: Int> fmt::Debug for AbObject<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbObject(gens {}, rels {:?})", self.rank, self.rels)
    }
}

/// Canonical display of an invariant-factor list: `1` for the trivial
/// group, otherwise factors joined by `x` (`0` marks a free summand).
pub fn factors_display<T: Int>(factors: &[T]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

/// A simplified copy of a presentation with the isomorphisms to and from
/// the original, on generators.
pub struct Simplified<T: Int> {
    pub object: AbObject<T>,
    /// old -> new coordinates.
    pub to_new: Mat<T>,
    /// new -> old coordinates.
    pub from_new: Mat<T>,
}

/// Diagonalizes the relations of `obj` and drops trivial generators:
/// the result is `⊕ Z/d_i ⊕ Z^k` with every `d_i ≥ 2`.
pub fn simplify<T: Int>(obj: &AbObject<T>) -> Result<Simplified<T>, Overflow> {
    let n = snf(&obj.rels)?;
    let diag = n.diagonal();
    let order_of = |i: usize| diag.get(i).cloned().unwrap_or_else(T::zero);
    let keep: Vec<usize> = (0..obj.rank).filter(|&i| !order_of(i).is_one()).collect();

    let finite: Vec<&usize> = keep.iter().filter(|&&i| !order_of(i).is_zero()).collect();
    let mut rels = Mat::zero(keep.len(), finite.len());
    let mut col = 0;
    for (row, &i) in keep.iter().enumerate() {
        let d = order_of(i);
        if !d.is_zero() {
            rels[(row, col)] = d;
            col += 1;
        }
    }

    Ok(Simplified {
        object: AbObject {
            rank: keep.len(),
            rels,
        },
        to_new: n.u.submatrix_rows(&keep),
        from_new: n.u_inv.submatrix_cols(&keep),
    })
}

/// A morphism of presentations: `matrix` is `dst.rank × src.rank`.
#[derive(Clone)]
pub struct AbMap<T: Int> {
    src: AbObject<T>,
    dst: AbObject<T>,
    matrix: Mat<T>,
}

impl<T: Int> AbMap<T> {
    /// Builds a morphism, checking well-definedness.
    pub fn new(src: AbObject<T>, dst: AbObject<T>, matrix: Mat<T>) -> Result<Self, AbError> {
        if matrix.rows() != dst.rank || matrix.cols() != src.rank {
            return Err(AbError::MatrixShape {
                got_rows: matrix.rows(),
                got_cols: matrix.cols(),
                want_rows: dst.rank,
                want_cols: src.rank,
            });
        }
        let pushed = matrix.try_mul(&src.rels)?;
        if !lattice_contains_cols(&dst.rels, &pushed)? {
            return Err(AbError::NotWellDefined);
        }
        Ok(AbMap { src, dst, matrix })
    }

    pub fn from_i64(src: AbObject<T>, dst: AbObject<T>, rows: &[Vec<i64>]) -> Result<Self, AbError> {
        Self::new(src, dst, Mat::from_i64_rows(rows))
    }

    pub fn identity(x: &AbObject<T>) -> Self {
        AbMap {
            src: x.clone(),
            dst: x.clone(),
            matrix: Mat::identity(x.rank),
        }
    }

    pub fn zero_map(src: AbObject<T>, dst: AbObject<T>) -> Self {
        let matrix = Mat::zero(dst.rank, src.rank);
        AbMap { src, dst, matrix }
    }

    pub fn src(&self) -> &AbObject<T> {
        &self.src
    }

    pub fn dst(&self) -> &AbObject<T> {
        &self.dst
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.matrix
    }

    pub fn compose(&self, first: &AbMap<T>) -> Result<AbMap<T>, Overflow> {
        debug_assert!(first.dst == self.src, "compose: endpoint mismatch");
        Ok(AbMap {
            src: first.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.try_mul(&first.matrix)?,
        })
    }

    /// Equality of parallel maps: the difference lands in the target's
    /// relation lattice, column by column.
    pub fn eq(&self, other: &AbMap<T>) -> Result<bool, Overflow> {
        debug_assert!(self.src == other.src && self.dst == other.dst);
        let diff = self.matrix.try_sub_mat(&other.matrix)?;
        lattice_contains_cols(&self.dst.rels, &diff)
    }

    pub fn is_null(&self) -> Result<bool, Overflow> {
        lattice_contains_cols(&self.dst.rels, &self.matrix)
    }

    /// The kernel arrow. Generators: a basis of the preimage lattice
    /// `{x : F·x ∈ L(R_dst)}`; relations: whatever that basis pulls back
    /// into `L(R_src)`; then simplified.
    pub fn kernel(&self) -> Result<AbMap<T>, Overflow> {
        let pre = preimage_lattice(&self.matrix, &self.dst.rels)?;
        let raw_rels = preimage_lattice(&pre, &self.src.rels)?;
        let raw = AbObject {
            rank: pre.cols(),
            rels: raw_rels,
        };
        let simp = simplify(&raw)?;
        let arrow = pre.try_mul(&simp.from_new)?;
        Ok(AbMap {
            src: simp.object,
            dst: self.src.clone(),
            matrix: arrow,
        })
    }

    /// The cokernel arrow: the target's generators with the image columns
    /// adjoined as relations, then simplified.
    pub fn cokernel(&self) -> Result<AbMap<T>, Overflow> {
        let raw = AbObject {
            rank: self.dst.rank,
            rels: self.dst.rels.hstack(&self.matrix),
        };
        let simp = simplify(&raw)?;
        Ok(AbMap {
            src: self.dst.clone(),
            dst: simp.object,
            matrix: simp.to_new,
        })
    }

    /// Kernel and cokernel both null; valid in an abelian instance.
    pub fn is_iso(&self) -> Result<bool, Overflow> {
        Ok(self.kernel()?.is_null()? && self.cokernel()?.is_null()?)
    }

    /// Some `u` with `self ∘ u = x`: solves `M·U ≡ X (mod R_dst)` jointly
    /// with well-definedness of `U` as a morphism `src(x) -> src(self)`.
    pub fn lift(&self, x: &AbMap<T>) -> Result<Option<AbMap<T>>, Overflow> {
        debug_assert!(self.dst == x.dst);
        let k_obj = &self.src;
        let x_obj = &x.src;
        let a_obj = &self.dst;

        let eq_coef = Mat::identity(x_obj.rank).try_kron(&self.matrix)?;
        let eq_slack = Mat::identity(x_obj.rank).try_kron(&a_obj.rels)?;
        let eq_target = x.matrix.vec_cols();

        let wd_coef = x_obj.rels.transpose().try_kron(&Mat::identity(k_obj.rank))?;
        let wd_slack = Mat::identity(x_obj.rels.cols()).try_kron(&k_obj.rels)?;
        let wd_target = vec![T::zero(); wd_coef.rows()];

        let unknowns = k_obj.rank * x_obj.rank;
        let solution = solve_blocks(
            unknowns,
            &[(eq_coef, eq_slack, eq_target), (wd_coef, wd_slack, wd_target)],
        )?;
        Ok(solution.map(|v| AbMap {
            src: x_obj.clone(),
            dst: k_obj.clone(),
            matrix: Mat::from_vec_cols(k_obj.rank, x_obj.rank, &v),
        }))
    }

    /// Some `u` with `u ∘ self = y`: solves `U·C ≡ Y (mod R_dst(y))`
    /// jointly with well-definedness of `U` on `dst(self)`.
    pub fn descend(&self, y: &AbMap<T>) -> Result<Option<AbMap<T>>, Overflow> {
        debug_assert!(self.src == y.src);
        let c_obj = &self.dst;
        let y_obj = &y.dst;

        let eq_coef = self.matrix.transpose().try_kron(&Mat::identity(y_obj.rank))?;
        let eq_slack = Mat::identity(self.src.rank).try_kron(&y_obj.rels)?;
        let eq_target = y.matrix.vec_cols();

        let wd_coef = c_obj.rels.transpose().try_kron(&Mat::identity(y_obj.rank))?;
        let wd_slack = Mat::identity(c_obj.rels.cols()).try_kron(&y_obj.rels)?;
        let wd_target = vec![T::zero(); wd_coef.rows()];

        let unknowns = y_obj.rank * c_obj.rank;
        let solution = solve_blocks(
            unknowns,
            &[(eq_coef, eq_slack, eq_target), (wd_coef, wd_slack, wd_target)],
        )?;
        Ok(solution.map(|v| AbMap {
            src: c_obj.clone(),
            dst: y_obj.clone(),
            matrix: Mat::from_vec_cols(y_obj.rank, c_obj.rank, &v),
        }))
    }
}

impl<T: Int> fmt::Debug for AbMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AbMap({:?} -> {:?}, {:?})",
            self.src, self.dst, self.matrix
        )
    }
}

/// Solves a stack of linear blocks sharing the leading `unknowns` columns:
/// each block contributes `coef·z + slack·w_block = target`. Returns the
/// `unknowns` prefix of a solution, if any.
fn solve_blocks<T: Int>(
    unknowns: usize,
    blocks: &[(Mat<T>, Mat<T>, Vec<T>)],
) -> Result<Option<Vec<T>>, Overflow> {
    let total_rows: usize = blocks.iter().map(|(c, _, _)| c.rows()).sum();
    let slack_cols: Vec<usize> = blocks.iter().map(|(_, s, _)| s.cols()).collect();
    let total_cols = unknowns + slack_cols.iter().sum::<usize>();

    let mut m = Mat::zero(total_rows, total_cols);
    let mut target = Vec::with_capacity(total_rows);
    let mut row0 = 0;
    let mut slack0 = unknowns;
    for (coef, slack, t) in blocks {
        assert_eq!(coef.cols(), unknowns);
        assert_eq!(coef.rows(), slack.rows());
        assert_eq!(coef.rows(), t.len());
        for i in 0..coef.rows() {
            for j in 0..unknowns {
                m[(row0 + i, j)] = coef[(i, j)].clone();
            }
            for j in 0..slack.cols() {
                m[(row0 + i, slack0 + j)] = slack[(i, j)].clone();
            }
        }
        target.extend(t.iter().cloned());
        row0 += coef.rows();
        slack0 += slack.cols();
    }

    Ok(lattice_solve(&m, &target)?.map(|z| z[..unknowns].to_vec()))
}

/// The abelian-group model, generic over the integer scalar.
pub struct Ab<T: Int>(PhantomData<T>);

const OVERFLOW_MSG: &str =
    "integer overflow in checked fixed-width scalar; use the unbounded scalar instead";

impl<T: Int> Model for Ab<T> {
    type Object = AbObject<T>;
    type Map = AbMap<T>;

    const NAME: &'static str = "abgroup";
    const IS_HOMOLOGICAL: bool = true;

    fn src(f: &AbMap<T>) -> &AbObject<T> {
        f.src()
    }
    fn dst(f: &AbMap<T>) -> &AbObject<T> {
        f.dst()
    }
    fn identity(x: &AbObject<T>) -> AbMap<T> {
        AbMap::identity(x)
    }
    fn compose(g: &AbMap<T>, f: &AbMap<T>) -> AbMap<T> {
        g.compose(f).expect(OVERFLOW_MSG)
    }
    fn map_eq(f: &AbMap<T>, g: &AbMap<T>) -> bool {
        f.eq(g).expect(OVERFLOW_MSG)
    }
    fn is_null(f: &AbMap<T>) -> bool {
        f.is_null().expect(OVERFLOW_MSG)
    }
    fn is_null_object(x: &AbObject<T>) -> bool {
        x.is_zero_object().expect(OVERFLOW_MSG)
    }
    fn is_iso(f: &AbMap<T>) -> bool {
        f.is_iso().expect(OVERFLOW_MSG)
    }
    fn kernel(f: &AbMap<T>) -> AbMap<T> {
        f.kernel().expect(OVERFLOW_MSG)
    }
    fn cokernel(f: &AbMap<T>) -> AbMap<T> {
        f.cokernel().expect(OVERFLOW_MSG)
    }
    fn lift(through: &AbMap<T>, x: &AbMap<T>) -> Option<AbMap<T>> {
        through.lift(x).expect(OVERFLOW_MSG)
    }
    fn descend(through: &AbMap<T>, y: &AbMap<T>) -> Option<AbMap<T>> {
        through.descend(y).expect(OVERFLOW_MSG)
    }
}

pub mod sample {
    //! Seeded random presentations and morphisms.
    //!
    //! Random morphisms are drawn uniformly-ish from the lattice of all
    //! well-defined matrices: a basis of that lattice is computed once and
    //! combined with small random coefficients, so no rejection loop is
    //! needed.

    use super::*;
    use rand::Rng;

    pub fn random_object<T: Int>(rng: &mut impl Rng, max_rank: usize, max_entry: i64) -> AbObject<T> {
        let rank = rng.random_range(0..=max_rank);
        let cols = if rank == 0 {
            0
        } else {
            rng.random_range(0..=rank + 1)
        };
        let rels = Mat::from_fn(rank, cols, |_, _| {
            T::from_i64(rng.random_range(-max_entry..=max_entry))
        });
        AbObject { rank, rels }
    }

    /// A basis of the lattice of well-defined `src -> dst` matrices,
    /// vectorized column-wise.
    pub fn hom_lattice<T: Int>(src: &AbObject<T>, dst: &AbObject<T>) -> Result<Mat<T>, Overflow> {
        let coef = src.rels.transpose().try_kron(&Mat::identity(dst.rank))?;
        let slack = Mat::identity(src.rels.cols()).try_kron(&dst.rels)?;
        preimage_lattice(&coef, &slack)
    }

    pub fn random_map_between<T: Int>(
        rng: &mut impl Rng,
        src: &AbObject<T>,
        dst: &AbObject<T>,
    ) -> AbMap<T> {
        let basis = hom_lattice(src, dst).expect(OVERFLOW_MSG);
        let coeffs: Vec<T> = (0..basis.cols())
            .map(|_| T::from_i64(rng.random_range(-2..=2)))
            .collect();
        let v = basis.try_mul_vec(&coeffs).expect(OVERFLOW_MSG);
        let matrix = Mat::from_vec_cols(dst.rank, src.rank, &v);
        debug_assert!(AbMap::new(src.clone(), dst.clone(), matrix.clone()).is_ok());
        AbMap {
            src: src.clone(),
            dst: dst.clone(),
            matrix,
        }
    }

    pub fn random_map_from<T: Int>(
        rng: &mut impl Rng,
        src: &AbObject<T>,
        max_rank: usize,
        max_entry: i64,
    ) -> AbMap<T> {
        let dst = random_object(rng, max_rank, max_entry);
        random_map_between(rng, src, &dst)
    }

    pub fn random_map<T: Int>(rng: &mut impl Rng, max_rank: usize, max_entry: i64) -> AbMap<T> {
        let src = random_object(rng, max_rank, max_entry);
        random_map_from(rng, &src, max_rank, max_entry)
    }

    /// The inclusion of `src` into `src ⊕ W` for a random `W`: always a
    /// kernel arrow.
    pub fn random_summand_inclusion<T: Int>(
        rng: &mut impl Rng,
        src: &AbObject<T>,
        max_rank: usize,
        max_entry: i64,
    ) -> AbMap<T> {
        let extra: AbObject<T> = random_object(rng, max_rank, max_entry);
        let rank = src.rank + extra.rank;
        let rels = Mat::from_fn(rank, src.rels.cols() + extra.rels.cols(), |i, j| {
            if i < src.rank && j < src.rels.cols() {
                src.rels[(i, j)].clone()
            } else if i >= src.rank && j >= src.rels.cols() {
                extra.rels[(i - src.rank, j - src.rels.cols())].clone()
            } else {
                T::zero()
            }
        });
        let sum = AbObject { rank, rels };
        let matrix = Mat::from_fn(rank, src.rank, |i, j| {
            if i == j {
                T::one()
            } else {
                T::zero()
            }
        });
        AbMap {
            src: src.clone(),
            dst: sum,
            matrix,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Obj = AbObject<BigInt>;
    type Map = AbMap<BigInt>;

    fn factors(o: &Obj) -> Vec<i64> {
        o.invariant_factors()
            .unwrap()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn invariant_factors_of_z() {
        assert_eq!(factors(&Obj::free(1)), vec![0]);
    }

    #[test]
    fn invariant_factors_of_diagonal_presentation() {
        let o = Obj::new(2, Mat::from_i64_rows(&[vec![2, 0], vec![0, 4]])).unwrap();
        assert_eq!(factors(&o), vec![2, 4]);
    }

    #[test]
    fn invariant_factors_merge_coprime_relations() {
        let o = Obj::new(2, Mat::from_i64_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(factors(&o), vec![6]);
    }

    #[test]
    fn orders() {
        assert_eq!(Obj::free(1).order().unwrap(), None);
        assert_eq!(Obj::cyclic(4).order().unwrap(), Some(BigInt::from(4)));
        assert_eq!(Obj::zero().order().unwrap(), Some(BigInt::from(1)));
        assert!(Obj::cyclic(1).is_zero_object().unwrap());
    }

    #[test]
    fn well_definedness_is_enforced() {
        // Z/2 -> Z by the identity matrix is not a morphism.
        assert!(matches!(
            Map::from_i64(Obj::cyclic(2), Obj::free(1), &[vec![1]]),
            Err(AbError::NotWellDefined)
        ));
    }

    #[test]
    fn kernel_of_projection_to_z4_is_multiplication_by_four() {
        let f = Map::from_i64(Obj::free(1), Obj::cyclic(4), &[vec![1]]).unwrap();
        let k = f.kernel().unwrap();
        assert_eq!(factors(k.src()), vec![0]); // kernel object is Z
        assert_eq!(k.matrix(), &Mat::from_i64_rows(&[vec![4]]));
    }

    #[test]
    fn cokernel_of_times_two_is_z2() {
        let f = Map::from_i64(Obj::free(1), Obj::free(1), &[vec![2]]).unwrap();
        let c = f.cokernel().unwrap();
        assert_eq!(factors(c.dst()), vec![2]);
        assert_eq!(c.matrix(), &Mat::from_i64_rows(&[vec![1]]));
    }

    #[test]
    fn kernel_of_times_two_is_zero() {
        let f = Map::from_i64(Obj::free(1), Obj::free(1), &[vec![2]]).unwrap();
        let k = f.kernel().unwrap();
        assert!(k.src().is_zero_object().unwrap());
        assert!(k.is_null().unwrap());
    }

    #[test]
    fn map_equality_is_modulo_target_relations() {
        let z = Obj::free(1);
        let z4 = Obj::cyclic(4);
        let a = Map::from_i64(z.clone(), z4.clone(), &[vec![1]]).unwrap();
        let b = Map::from_i64(z.clone(), z4.clone(), &[vec![5]]).unwrap();
        let c = Map::from_i64(z, z4, &[vec![2]]).unwrap();
        assert!(a.eq(&b).unwrap());
        assert!(!a.eq(&c).unwrap());
    }

    #[test]
    fn lift_divides_inside_the_subobject() {
        let z = Obj::free(1);
        let k = Map::from_i64(z.clone(), z.clone(), &[vec![2]]).unwrap();
        let x = Map::from_i64(z.clone(), z.clone(), &[vec![4]]).unwrap();
        let u = k.lift(&x).unwrap().unwrap();
        assert_eq!(u.matrix(), &Mat::from_i64_rows(&[vec![2]]));
        let odd = Map::from_i64(z.clone(), z, &[vec![3]]).unwrap();
        assert!(k.lift(&odd).unwrap().is_none());
    }

    #[test]
    fn descend_through_a_quotient() {
        // coker([4]): Z -> Z/4; y: Z -> Z/2 descends to Z/4 -> Z/2.
        let z = Obj::free(1);
        let times4 = Map::from_i64(z.clone(), z.clone(), &[vec![4]]).unwrap();
        let q = times4.cokernel().unwrap();
        let y = Map::from_i64(z.clone(), Obj::cyclic(2), &[vec![1]]).unwrap();
        let u = q.descend(&y).unwrap().unwrap();
        assert_eq!(u.src(), q.dst());
        assert!(u.compose(&q).unwrap().eq(&y).unwrap());
        // x -> x is not constant on the fibers of Z -> Z/4 as a map to Z.
        let idz = Map::identity(&z);
        assert!(q.descend(&idz).unwrap().is_none());
    }

    #[test]
    fn is_iso_detects_presentation_changes() {
        // Z/2 presented with redundant generators.
        let fat = Obj::new(2, Mat::from_i64_rows(&[vec![2, 1], vec![0, 1]])).unwrap();
        let slim = Obj::cyclic(2);
        let f = Map::from_i64(fat, slim, &[vec![1, 1]]).unwrap();
        assert!(f.is_iso().unwrap());
    }
}
