//! Smith normal form with full unimodular transforms and their inverses.

use crate::int::{Int, Overflow};
use crate::mat::Mat;

/// `u · a · v = s` with `u`, `v` unimodular, `s` diagonal, diagonal entries
/// nonnegative and forming a divisibility chain `d1 | d2 | …`.
#[derive(Debug, Clone)]
pub struct SnfResult<T> {
    pub s: Mat<T>,
    pub u: Mat<T>,
    pub v: Mat<T>,
    pub u_inv: Mat<T>,
    pub v_inv: Mat<T>,
}

impl<T: Int> SnfResult<T> {
    /// The diagonal entries, padded with the implicit zeros of rows beyond
    /// the column count.
    pub fn diagonal(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Work<T> {
    s: Mat<T>,
    u: Mat<T>,
    u_inv: Mat<T>,
    v: Mat<T>,
    v_inv: Mat<T>,
}

impl<T: Int> Work<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }
    fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        self.s.negate_row(i)?;
        self.u.negate_row(i)?;
        self.u_inv.negate_col(i)
    }
    /// `row_i += q · row_k`.
    fn row_add(&mut self, i: usize, k: usize, q: &T) -> Result<(), Overflow> {
        self.s.row_add(i, k, q)?;
        self.u.row_add(i, k, q)?;
        self.u_inv.col_add(k, i, &q.try_neg()?)
    }
    /// `col_j += q · col_k`.
    fn col_add(&mut self, j: usize, k: usize, q: &T) -> Result<(), Overflow> {
        self.s.col_add(j, k, q)?;
        self.v.col_add(j, k, q)?;
        self.v_inv.row_add(k, j, &q.try_neg()?)
    }
}

/// Computes the Smith normal form of `a`. Deterministic: the pivot is
/// always the first entry of minimal absolute value in the remaining block.
pub fn snf<T: Int>(a: &Mat<T>) -> Result<SnfResult<T>, Overflow> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        s: a.clone(),
        u: Mat::identity(rows),
        u_inv: Mat::identity(rows),
        v: Mat::identity(cols),
        v_inv: Mat::identity(cols),
    };

    let mut k = 0usize;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&w.s, k) else {
            break; // remaining block is zero
        };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        if w.s[(k, k)].is_negative() {
            w.negate_row(k)?;
        }

        // Clear row and column k; each sweep strictly shrinks the pivot or
        // finishes, so this terminates.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if w.s[(i, k)].is_zero() {
                    continue;
                }
                let q = w.s[(i, k)].div_floor(&w.s[(k, k)]).try_neg()?;
                w.row_add(i, k, &q)?;
                if !w.s[(i, k)].is_zero() {
                    // Remainder is smaller than the pivot: promote it.
                    w.swap_rows(k, i);
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if w.s[(k, j)].is_zero() {
                    continue;
                }
                let q = w.s[(k, j)].div_floor(&w.s[(k, k)]).try_neg()?;
                w.col_add(j, k, &q)?;
                if !w.s[(k, j)].is_zero() {
                    w.swap_cols(k, j);
                    clean = false;
                }
            }
            if clean && (k + 1..rows).all(|i| w.s[(i, k)].is_zero()) {
                break;
            }
        }
        if w.s[(k, k)].is_negative() {
            w.negate_row(k)?;
        }

        // Enforce divisibility: fold any offending entry into row k and
        // redo the elimination of this pivot.
        if let Some((oi, _)) = divisibility_offender(&w.s, k) {
            let one = num_traits::One::one();
            w.row_add(k, oi, &one)?;
            continue; // re-run with the same k
        }
        k += 1;
    }

    Ok(SnfResult {
        s: w.s,
        u: w.u,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    })
}

fn min_abs_entry<T: Int>(s: &Mat<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..s.rows() {
        for j in k..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if s[(i, j)].abs() < s[(bi, bj)].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn divisibility_offender<T: Int>(s: &Mat<T>, k: usize) -> Option<(usize, usize)> {
    for i in k + 1..s.rows() {
        for j in k + 1..s.cols() {
            if !s[(i, j)].is_multiple_of(&s[(k, k)]) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    type M = Mat<BigInt>;

    fn check(a: &M) -> SnfResult<BigInt> {
        let n = snf(a).unwrap();
        let uav = n.u.try_mul(a).unwrap().try_mul(&n.v).unwrap();
        assert_eq!(uav, n.s, "u·a·v must equal s");
        assert_eq!(n.u.try_mul(&n.u_inv).unwrap(), M::identity(a.rows()));
        assert_eq!(n.v.try_mul(&n.v_inv).unwrap(), M::identity(a.cols()));
        let d = n.diagonal();
        for w in d.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken");
            } else {
                assert!(w[1].is_zero(), "zero must trail the chain");
            }
        }
        n
    }

    #[test]
    fn snf_zero_matrix() {
        let n = check(&M::from_i64_rows(&[vec![0]]));
        assert_eq!(n.diagonal(), vec![BigInt::from(0)]);
    }

    #[test]
    fn snf_single_row_gcd() {
        let n = check(&M::from_i64_rows(&[vec![4, 6]]));
        assert_eq!(n.s, M::from_i64_rows(&[vec![2, 0]]));
    }

    #[test]
    fn snf_mixes_coprime_diagonal() {
        let n = check(&M::from_i64_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(n.s, M::from_i64_rows(&[vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn snf_known_four_by_four() {
        let a = M::from_i64_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let n = check(&a);
        let d: Vec<BigInt> = n.diagonal();
        assert_eq!(
            d,
            vec![1, 3, 21, 0].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn checked_scalar_signals_overflow() {
        let a = Mat::<i64>::from_i64_rows(&[vec![i64::MAX, 3], vec![5, i64::MAX - 1]]);
        assert!(matches!(snf(&a), Err(Overflow)));
    }
}
