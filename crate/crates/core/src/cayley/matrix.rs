//! Sparse integer matrices and fraction-free elimination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse matrix over the integers, stored by columns. Each column is a list
/// of `(row, value)` pairs sorted by row with no zero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

type SparseRow = Vec<(usize, BigInt)>;

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from columns; entries are summed per row and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|(r, _)| *r);
                let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row {r} out of range");
                    match out.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|(_, v)| !v.is_zero());
                out
            })
            .collect();
        Self {
            rows,
            cols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        Eliminator::new(self).run(false).pivots.len()
    }

    /// Integer basis of `{x : A x = 0}`, one primitive vector per free
    /// column, as dense coordinate vectors.
    ///
    /// Columns are processed from the last to the first. The vector attached
    /// to free column `f` has `x_f > 0` and is zero at every other free column
    /// and at every column before `f`, so `f` is its first nonzero position.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let ech = Eliminator::new(self).run(true);
        let mut pivot_of_row = vec![None; self.rows];
        for &(c, r) in &ech.pivots {
            pivot_of_row[r] = Some(c);
        }
        let mut out = Vec::new();
        for f in ech.free_columns() {
            // rows with a nonzero at f are all pivot rows after full reduction
            let hits: Vec<(usize, &BigInt, &BigInt)> = ech.col_rows[f]
                .iter()
                .map(|&r| {
                    let c = pivot_of_row[r].expect("nonzero in an unpivoted row");
                    let row = &ech.rows[r];
                    (c, entry(row, c), entry(row, f))
                })
                .collect();
            let l = hits.iter().fold(BigInt::one(), |acc, (_, d, _)| acc.lcm(d));
            let mut x = vec![BigInt::zero(); self.cols];
            x[f] = l.clone();
            for (c, d, v) in hits {
                x[c] = -(v * &l) / d;
            }
            let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            for v in &mut x {
                *v /= &g;
            }
            out.push(x);
        }
        out
    }

    /// `A x` for a dense vector.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![BigInt::zero(); self.rows];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, v) in &self.columns[c] {
                y[*r] += v * xc;
            }
        }
        y
    }
}

fn entry(row: &SparseRow, c: usize) -> &BigInt {
    let i = row
        .binary_search_by_key(&c, |(col, _)| *col)
        .expect("entry must be present");
    &row[i].1
}

struct Eliminator {
    cols: usize,
    rows: Vec<SparseRow>,
    col_rows: Vec<BTreeSet<usize>>,
    pivots: Vec<(usize, usize)>,
}

impl Eliminator {
    fn new(a: &SparseIntMatrix) -> Self {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); a.rows];
        let mut col_rows = vec![BTreeSet::new(); a.cols];
        for (c, col) in a.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
                col_rows[c].insert(*r);
            }
        }
        Self {
            cols: a.cols,
            rows,
            col_rows,
            pivots: Vec::new(),
        }
    }

    /// Processes columns from last to first, taking the lowest-index
    /// unpivoted row as pivot. With `reduce`, the pivot column is cleared in
    /// every other row as well (Gauss-Jordan); otherwise only below.
    fn run(mut self, reduce: bool) -> Self {
        let mut pivoted = vec![false; self.rows.len()];
        for c in (0..self.cols).rev() {
            let Some(p) = self.col_rows[c].iter().copied().find(|&r| !pivoted[r]) else {
                continue;
            };
            pivoted[p] = true;
            self.pivots.push((c, p));
            let targets: Vec<usize> = self.col_rows[c]
                .iter()
                .copied()
                .filter(|&r| r != p && (reduce || !pivoted[r]))
                .collect();
            let pivot_row = std::mem::take(&mut self.rows[p]);
            for t in targets {
                self.eliminate(t, &pivot_row, c);
            }
            self.rows[p] = pivot_row;
        }
        self
    }

    /// row_t <- (p/g) row_t - (v/g) row_p, then divided by its content.
    fn eliminate(&mut self, t: usize, pivot_row: &SparseRow, c: usize) {
        let old = std::mem::take(&mut self.rows[t]);
        let pv = entry(pivot_row, c);
        let tv = entry(&old, c);
        let g = pv.gcd(tv);
        let mt = pv / &g;
        let mp = tv / &g;
        let mut new = Vec::with_capacity(old.len() + pivot_row.len());
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < pivot_row.len() {
            let ci = old.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot_row.get(j).map_or(usize::MAX, |e| e.0);
            if ci < cj {
                new.push((ci, &old[i].1 * &mt));
                i += 1;
            } else if cj < ci {
                new.push((cj, -(&pivot_row[j].1 * &mp)));
                self.col_rows[cj].insert(t);
                j += 1;
            } else {
                let v = &old[i].1 * &mt - &pivot_row[j].1 * &mp;
                if v.is_zero() {
                    self.col_rows[ci].remove(&t);
                } else {
                    new.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        let content = new.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        if !content.is_zero() && !content.is_one() {
            for (_, v) in &mut new {
                *v /= &content;
            }
        }
        if new.first().is_some_and(|(_, v)| v.is_negative()) {
            for (_, v) in &mut new {
                *v = -std::mem::take(v);
            }
        }
        self.rows[t] = new;
    }

    fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &(c, _) in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> SparseIntMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let columns = (0..ncols)
            .map(|c| (0..nrows).map(|r| (r, BigInt::from(rows[r][c]))).collect())
            .collect();
        SparseIntMatrix::from_columns(nrows, columns)
    }

    /// Rank by rational Gaussian elimination on a dense copy.
    fn oracle_rank(rows: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] / &m[rank][c];
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_nullspace() {
        let a = dense(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(a.apply(x).iter().all(Zero::is_zero));
        }
        // free columns are 0 and 1; each vector leads at its free column
        assert_eq!(
            ns[0],
            vec![3, 0, -1]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(
            ns[1],
            vec![0, 3, -2]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn full_rank_square_has_trivial_kernel() {
        let a = dense(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.rank(), 2);
        assert!(a.nullspace().is_empty());
        assert_eq!(SparseIntMatrix::zeros(3, 2).nullspace().len(), 2);
        assert_eq!(a.get(1, 1), BigInt::from(3));
        assert_eq!(a.nnz(), 4);
    }

    proptest! {
        #[test]
        fn rank_and_nullspace(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..6)) {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let a = dense(&refs);
            let r = a.rank();
            prop_assert_eq!(r, oracle_rank(&rows));
            let ns = a.nullspace();
            prop_assert_eq!(ns.len() + r, a.cols());
            for x in &ns {
                prop_assert!(a.apply(x).iter().all(Zero::is_zero));
                let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
                prop_assert!(g.is_one());
            }
            let as_i64: Vec<Vec<i64>> = ns
                .iter()
                .map(|x| x.iter().map(|v| i64::try_from(v).unwrap()).collect())
                .collect();
            prop_assert_eq!(oracle_rank(&as_i64), ns.len());
        }
    }
}
