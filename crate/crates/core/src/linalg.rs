//! Exact dense linear algebra over a [`Field`].
//!
//! Everything here is small (matrices up to a few hundred rows by eight
//! columns), so plain fraction-free-less Gaussian elimination is fine.

use crate::scalar::Field;

/// Solve `A x = b` exactly for a (possibly overdetermined) consistent system.
///
/// `a` is row-major, `m x n` with `m >= n` allowed. Returns `None` when the
/// system is inconsistent or underdetermined in a pivot column.
pub fn solve_exact<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = if m == 0 { 0 } else { a[0].len() };
    // augmented matrix
    let mut rows: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut v = r.clone();
            v.push(rhs.clone());
            v
        })
        .collect();

    let mut pivot_rows: Vec<usize> = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            return None; // rank-deficient column: basis not independent
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for j in c..=n {
            rows[r][j] = rows[r][j].clone() * inv.clone();
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..=n {
                    let t = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - t;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
        if r == m {
            break;
        }
    }
    if pivot_rows.len() < n {
        return None;
    }
    // consistency of the remaining rows
    for row in rows.iter().skip(n) {
        if !row[n].is_zero() {
            return None;
        }
    }
    Some((0..n).map(|c| rows[c][n].clone()).collect())
}

/// Incrementally maintained row space in reduced echelon form, for
/// rank/closure computations.
pub struct RowSpace<F> {
    /// (pivot column, reduced row)
    rows: Vec<(usize, Vec<F>)>,
    width: usize,
}

impl<F: Field> RowSpace<F> {
    pub fn new(width: usize) -> Self {
        RowSpace { rows: Vec::new(), width }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; if a nonzero remainder survives, adjoin
    /// it and return `true`.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.width);
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    let t = f.clone() * y.clone();
                    *x = x.clone() - t;
                }
            }
        }
        let Some(piv) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = F::one() / v[piv].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        // back-substitute into existing rows to keep reduced form
        for (_, row) in self.rows.iter_mut() {
            if !row[piv].is_zero() {
                let f = row[piv].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    let t = f.clone() * y.clone();
                    *x = x.clone() - t;
                }
            }
        }
        self.rows.push((piv, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    /// True iff `v` lies in the current span.
    pub fn contains(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    let t = f.clone() * y.clone();
                    *x = x.clone() - t;
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int, Rat};

    #[test]
    fn solve_small_system() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(5), rat_int(1)];
        assert_eq!(solve_exact(&a, &b), Some(vec![rat_int(2), rat_int(1)]));
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        let b = vec![rat(1, 2), rat(1, 3), rat(5, 6)];
        assert_eq!(solve_exact(&a, &b), Some(vec![rat(1, 2), rat(1, 3)]));
        let b_bad = vec![rat(1, 2), rat(1, 3), rat_int(1)];
        assert_eq!(solve_exact(&a, &b_bad), None);
    }

    #[test]
    fn row_space_rank() {
        let mut rs: RowSpace<Rat> = RowSpace::new(3);
        assert!(rs.insert(vec![rat_int(1), rat_int(2), rat_int(3)]));
        assert!(rs.insert(vec![rat_int(0), rat_int(1), rat_int(1)]));
        assert!(!rs.insert(vec![rat_int(1), rat_int(3), rat_int(4)]));
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&[rat_int(2), rat_int(5), rat_int(7)]));
        assert!(!rs.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
    }
}
