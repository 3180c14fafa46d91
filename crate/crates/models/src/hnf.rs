//! Column-style Hermite normal form and the lattice arithmetic built on it.
//!
//! All lattices here are *column* lattices: the integer span of the columns
//! of a matrix. The canonical form is unique per lattice, so lattice
//! equality is matrix equality of the canonical bases.

use crate::int::{Int, Overflow};
use crate::mat::Mat;

/// `h = a · v` with `v` unimodular; `h` in canonical column Hermite form.
#[derive(Debug, Clone)]
pub struct Hnf<T> {
    pub h: Mat<T>,
    pub v: Mat<T>,
    /// `(row, col)` of each pivot, in increasing row order.
    pub pivots: Vec<(usize, usize)>,
}

/// Canonical column Hermite form: pivots strictly descend left to right,
/// every pivot is positive, everything right of a pivot in its row is zero,
/// and entries left of a pivot in its row are reduced into `[0, pivot)`.
pub fn hnf<T: Int>(a: &Mat<T>) -> Result<Hnf<T>, Overflow> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut v = Mat::<T>::identity(cols);
    let mut pivots = Vec::new();
    let mut k = 0usize; // next pivot column

    for r in 0..rows {
        if k == cols {
            break;
        }
        if (k..cols).all(|j| h[(r, j)].is_zero()) {
            continue;
        }
        // Euclidean sweep across columns k.. until a single nonzero remains.
        loop {
            let j0 = (k..cols)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&x, &y| h[(r, x)].abs().cmp(&h[(r, y)].abs()))
                .expect("a nonzero entry exists in this row");
            h.swap_cols(k, j0);
            v.swap_cols(k, j0);
            if h[(r, k)].is_negative() {
                h.negate_col(k)?;
                v.negate_col(k)?;
            }
            let mut clean = true;
            for j in k + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = h[(r, j)].div_floor(&h[(r, k)]).try_neg()?;
                h.col_add(j, k, &q)?;
                v.col_add(j, k, &q)?;
                if !h[(r, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // Reduce the entries left of the pivot into [0, pivot).
        for j in 0..k {
            if h[(r, j)].is_zero() {
                continue;
            }
            let q = h[(r, j)].div_floor(&h[(r, k)]).try_neg()?;
            if !q.is_zero() {
                h.col_add(j, k, &q)?;
                v.col_add(j, k, &q)?;
            }
        }
        pivots.push((r, k));
        k += 1;
    }

    Ok(Hnf { h, v, pivots })
}

/// The canonical basis of the column lattice of `gens`: the nonzero columns
/// of its Hermite form.
pub fn lattice_canonical<T: Int>(gens: &Mat<T>) -> Result<Mat<T>, Overflow> {
    let n = hnf(gens)?;
    let keep: Vec<usize> = n.pivots.iter().map(|&(_, j)| j).collect();
    Ok(n.h.submatrix_cols(&keep))
}

/// Coefficients `c` with `basis · c = target`, or `None` when the target is
/// outside the column lattice.
pub fn lattice_solve<T: Int>(basis: &Mat<T>, target: &[T]) -> Result<Option<Vec<T>>, Overflow> {
    assert_eq!(basis.rows(), target.len(), "lattice_solve: dimension mismatch");
    let n = hnf(basis)?;
    let mut rem: Vec<T> = target.to_vec();
    let mut coeffs = vec![T::zero(); basis.cols()];
    for &(r, j) in &n.pivots {
        let (q, rest) = rem[r].div_rem(&n.h[(r, j)]);
        if !rest.is_zero() {
            return Ok(None);
        }
        if !q.is_zero() {
            for (i, r) in rem.iter_mut().enumerate() {
                *r = r.try_sub(&q.try_mul(&n.h[(i, j)])?)?;
            }
        }
        coeffs[j] = q;
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(n.v.try_mul_vec(&coeffs)?))
}

/// Whether `target` lies in the column lattice of `basis`.
pub fn lattice_contains<T: Int>(basis: &Mat<T>, target: &[T]) -> Result<bool, Overflow> {
    Ok(lattice_solve(basis, target)?.is_some())
}

/// Whether every column of `m` lies in the column lattice of `basis`.
pub fn lattice_contains_cols<T: Int>(basis: &Mat<T>, m: &Mat<T>) -> Result<bool, Overflow> {
    let n = hnf(basis)?;
    'col: for j in 0..m.cols() {
        let mut rem = m.col(j);
        for &(r, jj) in &n.pivots {
            let (q, rest) = rem[r].div_rem(&n.h[(r, jj)]);
            if !rest.is_zero() {
                return Ok(false);
            }
            if !q.is_zero() {
                for (i, r) in rem.iter_mut().enumerate() {
                    *r = r.try_sub(&q.try_mul(&n.h[(i, jj)])?)?;
                }
            }
        }
        if rem.iter().all(|x| x.is_zero()) {
            continue 'col;
        }
        return Ok(false);
    }
    Ok(true)
}

/// A basis for the integer null space `{z : a · z = 0}`: the transform
/// columns sitting over the zero columns of the Hermite form.
pub fn kernel_basis<T: Int>(a: &Mat<T>) -> Result<Mat<T>, Overflow> {
    let n = hnf(a)?;
    let pivot_cols: Vec<usize> = n.pivots.iter().map(|&(_, j)| j).collect();
    let free: Vec<usize> = (0..a.cols()).filter(|j| !pivot_cols.contains(j)).collect();
    Ok(n.v.submatrix_cols(&free))
}

/// A basis of the preimage lattice `{x : f · x ∈ L(rels)}`.
///
/// Computed as the x-part of the null space of `[f | rels]`, then put in
/// canonical form. The result spans at least `L(rels)`'s preimage of zero
/// and always contains `ker f` in the strict sense.
pub fn preimage_lattice<T: Int>(f: &Mat<T>, rels: &Mat<T>) -> Result<Mat<T>, Overflow> {
    assert_eq!(f.rows(), rels.rows(), "preimage_lattice: row mismatch");
    let stacked = f.hstack(rels);
    let null = kernel_basis(&stacked)?;
    let x_part = null.submatrix_rows(&(0..f.cols()).collect::<Vec<_>>());
    lattice_canonical(&x_part)
}
