//! Element enumeration for finite abelian presentations, through the Smith
//! coordinates of the relation matrix.

use crate::OracleError;
use lambek_models::abgroup::AbObject;
use lambek_models::int::Int;
use lambek_models::mat::Mat;
use lambek_models::snf::snf;

/// Enumerates a presentation's elements and reduces arbitrary coordinate
/// vectors to a canonical representative.
pub struct Enumerator<T: Int> {
    rank: usize,
    /// Per Smith coordinate: the order of the generator (`0` = free).
    orders: Vec<T>,
    u: Mat<T>,
    u_inv: Mat<T>,
}

impl<T: Int> Enumerator<T> {
    pub fn new(obj: &AbObject<T>) -> Result<Self, OracleError> {
        let n = snf(obj.rels())?;
        let diag = n.diagonal();
        let orders: Vec<T> = (0..obj.rank())
            .map(|i| diag.get(i).cloned().unwrap_or_else(T::zero))
            .collect();
        Ok(Enumerator {
            rank: obj.rank(),
            orders,
            u: n.u,
            u_inv: n.u_inv,
        })
    }

    /// Group order, bounded; `Unsupported` for infinite groups, `TooLarge`
    /// beyond the bound.
    pub fn bounded_order(&self, bound: u64) -> Result<u64, OracleError> {
        let mut acc: u64 = 1;
        for d in &self.orders {
            if d.is_zero() {
                return Err(OracleError::Unsupported("infinite group"));
            }
            let d = d.to_i64().ok_or(OracleError::TooLarge { bound })? as u64;
            acc = acc.saturating_mul(d);
            if acc > bound {
                return Err(OracleError::TooLarge { bound });
            }
        }
        Ok(acc)
    }

    /// Canonical form of a coordinate vector: Smith coordinates with each
    /// finite coordinate reduced modulo its order. Two vectors represent
    /// the same element exactly when their canonical forms agree.
    pub fn canon(&self, x: &[T]) -> Vec<T> {
        let y = self.u.try_mul_vec(x).expect("unbounded scalar");
        y.iter()
            .zip(&self.orders)
            .map(|(v, d)| if d.is_zero() { v.clone() } else { v.mod_floor(d) })
            .collect()
    }

    /// All element representatives, in original generator coordinates.
    /// Callers must check [`Enumerator::bounded_order`] first.
    pub fn elements(&self) -> Vec<Vec<T>> {
        let mut smith_tuples: Vec<Vec<T>> = vec![Vec::new()];
        for d in &self.orders {
            let span: Vec<T> = if d.is_zero() {
                vec![T::zero()] // unreachable for finite groups; harmless
            } else {
                let mut v = Vec::new();
                let mut acc = T::zero();
                while &acc < d {
                    v.push(acc.clone());
                    acc = acc + T::one();
                }
                v
            };
            smith_tuples = smith_tuples
                .into_iter()
                .flat_map(|t| {
                    span.iter().map(move |val| {
                        let mut t2 = t.clone();
                        t2.push(val.clone());
                        t2
                    })
                })
                .collect();
        }
        smith_tuples
            .into_iter()
            .map(|t| self.u_inv.try_mul_vec(&t).expect("unbounded scalar"))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}
