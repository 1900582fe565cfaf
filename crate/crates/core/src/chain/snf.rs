//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] is the dense reference routine and also returns the
//! unimodular transforms. [`invariant_factors`] is the path used for homology:
//! it removes unit pivots from a sparse matrix first and only hands the
//! residual block to the dense routine.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{BigMatrix, DenseMatrix, IntMatrix, SparseMatrix};

/// `left * m * right = diag(diagonal)` with `left`, `right` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-zero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: BigMatrix,
    pub right: BigMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full `rows x cols` diagonal matrix.
    pub fn diagonal_matrix(&self) -> BigMatrix {
        let mut d = DenseMatrix::filled(self.left.rows(), self.right.cols(), BigInt::zero());
        for (i, e) in self.diagonal.iter().enumerate() {
            d.set(i, i, e.clone());
        }
        d
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut work = m.map(|&v| BigInt::from(v));
    let mut left = BigMatrix::identity(m.rows());
    let mut right = BigMatrix::identity(m.cols());
    let diagonal = reduce_dense(&mut work, Some((&mut left, &mut right)));
    SmithForm { diagonal, left, right }
}

fn row_axpy(m: &mut BigMatrix, target: usize, source: usize, factor: &BigInt) {
    for c in 0..m.cols() {
        let delta = m.get(source, c) * factor;
        if !delta.is_zero() {
            *m.get_mut(target, c) -= delta;
        }
    }
}

fn col_axpy(m: &mut BigMatrix, target: usize, source: usize, factor: &BigInt) {
    for r in 0..m.rows() {
        let delta = m.get(r, source) * factor;
        if !delta.is_zero() {
            *m.get_mut(r, target) -= delta;
        }
    }
}

/// Diagonalizes `a` in place. Row operations are mirrored on `left`, column
/// operations on `right`.
fn reduce_dense(a: &mut BigMatrix, mut transforms: Option<(&mut BigMatrix, &mut BigMatrix)>) -> Vec<BigInt> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        // minimal absolute value pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = a.get(r, c);
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        swap_rows(a, &mut transforms, t, pr);
        swap_cols(a, &mut transforms, t, pc);

        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t).div_floor(a.get(t, t));
                row_axpy(a, r, t, &q);
                if let Some((l, _)) = transforms.as_mut() {
                    row_axpy(l, r, t, &q);
                }
                if !a.get(r, t).is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c).div_floor(a.get(t, t));
                col_axpy(a, c, t, &q);
                if let Some((_, rt)) = transforms.as_mut() {
                    col_axpy(rt, c, t, &q);
                }
                if !a.get(t, c).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in row or column t
                let mut best = (t, t);
                for r in t + 1..rows {
                    if !a.get(r, t).is_zero() && a.get(r, t).abs() < a.get(best.0, best.1).abs() {
                        best = (r, t);
                    }
                }
                for c in t + 1..cols {
                    if !a.get(t, c).is_zero() && a.get(t, c).abs() < a.get(best.0, best.1).abs() {
                        best = (t, c);
                    }
                }
                swap_rows(a, &mut transforms, t, best.0);
                swap_cols(a, &mut transforms, t, best.1);
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    row_axpy(a, t, r, &minus_one);
                    if let Some((l, _)) = transforms.as_mut() {
                        row_axpy(l, t, r, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            for c in 0..cols {
                let v = -a.get(t, c).clone();
                a.set(t, c, v);
            }
            if let Some((l, _)) = transforms.as_mut() {
                for c in 0..l.cols() {
                    let v = -l.get(t, c).clone();
                    l.set(t, c, v);
                }
            }
        }
        diagonal.push(a.get(t, t).clone());
    }
    diagonal
}

fn swap_rows(a: &mut BigMatrix, transforms: &mut Option<(&mut BigMatrix, &mut BigMatrix)>, i: usize, j: usize) {
    a.swap_rows(i, j);
    if let Some((l, _)) = transforms.as_mut() {
        l.swap_rows(i, j);
    }
}

fn swap_cols(a: &mut BigMatrix, transforms: &mut Option<(&mut BigMatrix, &mut BigMatrix)>, i: usize, j: usize) {
    a.swap_cols(i, j);
    if let Some((_, r)) = transforms.as_mut() {
        r.swap_cols(i, j);
    }
}

/// Non-zero invariant factors of a sparse matrix, ascending.
///
/// Unit pivots are eliminated sparsely using a Markowitz cost with
/// deterministic tie-breaking; whatever is left goes through the dense
/// big-integer reduction.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut columns: Vec<Vec<(usize, i128)>> = (0..m.cols())
        .map(|c| m.column(c).iter().map(|&(r, v)| (r, i128::from(v))).collect())
        .collect();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows()];
    for (c, col) in columns.iter().enumerate() {
        for &(r, _) in col {
            row_cols[r].insert(c);
        }
    }
    let mut units = 0usize;

    'outer: loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                if v.abs() != 1 {
                    continue;
                }
                let cost = (col.len() - 1) * (row_cols[r].len() - 1);
                if best.is_none_or(|(bc, _, _)| cost < bc) {
                    best = Some((cost, c, r));
                    if cost == 0 {
                        break;
                    }
                }
            }
            if best.is_some_and(|(cost, _, _)| cost == 0) {
                break;
            }
        }
        let Some((_, pc, pr)) = best else { break };
        let pivot_col = std::mem::take(&mut columns[pc]);
        let unit = pivot_col.iter().find(|&&(r, _)| r == pr).map(|&(_, v)| v).expect("pivot entry");
        let targets: Vec<usize> = row_cols[pr].iter().copied().filter(|&c| c != pc).collect();
        let mut updated = Vec::with_capacity(targets.len());
        for &k in &targets {
            let entry = columns[k].iter().find(|&&(r, _)| r == pr).map(|&(_, v)| v).expect("row index");
            match axpy_sparse(&columns[k], &pivot_col, entry * unit) {
                Some(col) => updated.push((k, col)),
                None => {
                    // overflow: fall back to big integers with the pivot untouched
                    columns[pc] = pivot_col;
                    break 'outer;
                }
            }
        }
        for &(r, _) in &pivot_col {
            row_cols[r].remove(&pc);
        }
        for (k, col) in updated {
            for &(r, _) in &columns[k] {
                row_cols[r].remove(&k);
            }
            for &(r, _) in &col {
                row_cols[r].insert(k);
            }
            columns[k] = col;
        }
        // the pivot row now only meets the pivot column, so the row operations
        // that clear the rest of the pivot column touch nothing else
        debug_assert!(row_cols[pr].is_empty());
        units += 1;
    }

    let mut factors = vec![BigInt::one(); units];
    let live_cols: Vec<usize> = (0..columns.len()).filter(|&c| !columns[c].is_empty()).collect();
    if !live_cols.is_empty() {
        let live_rows: BTreeSet<usize> = live_cols.iter().flat_map(|&c| columns[c].iter().map(|&(r, _)| r)).collect();
        let row_index: std::collections::BTreeMap<usize, usize> =
            live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut dense = DenseMatrix::filled(live_rows.len(), live_cols.len(), BigInt::zero());
        for (j, &c) in live_cols.iter().enumerate() {
            for &(r, v) in &columns[c] {
                dense.set(row_index[&r], j, BigInt::from(v));
            }
        }
        factors.extend(reduce_dense(&mut dense, None));
    }
    factors.sort();
    factors
}

/// `target - factor * source` on sorted sparse columns, `None` on overflow.
fn axpy_sparse(target: &[(usize, i128)], source: &[(usize, i128)], factor: i128) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let next_t = target.get(i).map(|e| e.0);
        let next_s = source.get(j).map(|e| e.0);
        let (row, value) = match (next_t, next_s) {
            (Some(rt), Some(rs)) if rt == rs => {
                let v = target[i].1.checked_sub(factor.checked_mul(source[j].1)?)?;
                i += 1;
                j += 1;
                (rt, v)
            }
            (Some(rt), Some(rs)) if rt < rs => {
                i += 1;
                (rt, target[i - 1].1)
            }
            (Some(rt), None) => {
                i += 1;
                (rt, target[i - 1].1)
            }
            (_, Some(rs)) => {
                j += 1;
                (rs, factor.checked_mul(source[j - 1].1)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if value != 0 {
            out.push((row, value));
        }
    }
    Some(out)
}

/// Rank of an integer matrix.
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn check_transforms(m: &IntMatrix, snf: &SmithForm) {
        let big = m.map(|&v| BigInt::from(v));
        assert_eq!(snf.left.mul(&big).mul(&snf.right), snf.diagonal_matrix());
        for w in snf.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn two_by_two() {
        // rows (2,4),(6,8): r2 -= 3 r1 -> (0,-4); c2 -= 2 c1 -> diag(2,-4) -> (2,4)
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, diag(&[2, 4]));
        check_transforms(&m, &snf);
        assert_eq!(invariant_factors(&SparseMatrix::from_dense(&m)), diag(&[2, 4]));
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::filled(3, 2, 0);
        assert!(smith_normal_form(&z).diagonal.is_empty());
        assert!(invariant_factors(&SparseMatrix::from_dense(&z)).is_empty());
        let mut id = IntMatrix::filled(3, 3, 0);
        for i in 0..3 {
            id.set(i, i, 1);
        }
        let snf = smith_normal_form(&id);
        assert_eq!(snf.diagonal, diag(&[1, 1, 1]));
        check_transforms(&id, &snf);
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(2,3) is not in normal form; the answer is (1,6)
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, diag(&[1, 6]));
        check_transforms(&m, &snf);
        assert_eq!(invariant_factors(&SparseMatrix::from_dense(&m)), diag(&[1, 6]));
    }

    #[test]
    fn empty_shapes() {
        let m = IntMatrix::filled(0, 4, 0);
        let snf = smith_normal_form(&m);
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.right.rows(), 4);
    }
}
