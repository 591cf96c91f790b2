//! Invariant factors of integer matrices.
//!
//! Boundary matrices are sparse with unit entries, so elimination runs in two
//! phases: unit pivots are eliminated on a sparse `i64` representation, and
//! whatever is left goes through a dense Smith normal form over `BigInt`. An
//! overflow in the sparse phase restarts the whole matrix on the dense path.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored by rows; each row holds `(column, value)`
/// pairs sorted by column with no zero values.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, i64)>) {
        row.retain(|&(_, v)| v != 0);
        row.sort_unstable_by_key(|&(c, _)| c);
        self.rows.push(row);
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(cols);
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c, v)).collect());
        }
        m
    }

    fn to_dense_big(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for &(c, v) in r {
                    dense[c] = BigInt::from(v);
                }
                dense
            })
            .collect()
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive; `r` is
/// the rank.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    match sparse_unit_phase(m) {
        Some((units, rest)) => {
            let mut out = vec![BigInt::one(); units];
            out.extend(smith_diagonal(rest));
            out
        }
        None => smith_diagonal(m.to_dense_big()),
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

/// Eliminates unit pivots. Returns the number of pivots and the dense
/// remainder, or `None` on `i64` overflow.
fn sparse_unit_phase(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows: Vec<Vec<(usize, i64)>> = m.rows.clone();
    let mut active = vec![true; rows.len()];
    let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].insert(r);
        }
    }
    let mut units = 0;
    let mut progress = true;
    while progress {
        progress = false;
        let mut order: Vec<usize> = (0..rows.len()).filter(|&r| active[r] && !rows[r].is_empty()).collect();
        order.sort_by_key(|&r| rows[r].len());
        for r in order {
            if !active[r] {
                continue;
            }
            // unit entry whose column touches the fewest rows
            let Some(&(pc, pv)) = rows[r]
                .iter()
                .filter(|&&(_, v)| v == 1 || v == -1)
                .min_by_key(|&&(c, _)| col_rows[c].len())
            else {
                continue;
            };
            let pivot_row = std::mem::take(&mut rows[r]);
            active[r] = false;
            for &(c, _) in &pivot_row {
                col_rows[c].remove(&r);
            }
            let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
            for k in targets {
                let a = rows[k]
                    .iter()
                    .find(|&&(c, _)| c == pc)
                    .map(|&(_, v)| v)
                    .expect("column index is exact");
                // row_k -= (a / pv) * pivot_row, and a / pv = a * pv for units
                let factor = a.checked_mul(pv)?;
                let merged = axpy(&rows[k], &pivot_row, factor)?;
                for &(c, _) in &rows[k] {
                    col_rows[c].remove(&k);
                }
                for &(c, _) in &merged {
                    col_rows[c].insert(k);
                }
                rows[k] = merged;
            }
            debug_assert!(col_rows[pc].is_empty());
            units += 1;
            progress = true;
        }
    }
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let mut pos = vec![usize::MAX; m.cols];
    for (i, &c) in live_cols.iter().enumerate() {
        pos[c] = i;
    }
    let rest = rows
        .iter()
        .zip(&active)
        .filter(|(row, &a)| a && !row.is_empty())
        .map(|(row, _)| {
            let mut dense = vec![BigInt::zero(); live_cols.len()];
            for &(c, v) in row {
                dense[pos[c]] = BigInt::from(v);
            }
            dense
        })
        .collect();
    Some((units, rest))
}

/// `row - factor * pivot`, both sorted by column.
fn axpy(row: &[(usize, i64)], pivot: &[(usize, i64)], factor: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let next = match (row.get(i), pivot.get(j)) {
            (Some(&(cr, vr)), Some(&(cp, vp))) if cr == cp => {
                i += 1;
                j += 1;
                (cr, vr.checked_sub(factor.checked_mul(vp)?)?)
            }
            (Some(&(cr, vr)), Some(&(cp, _))) if cr < cp => {
                i += 1;
                (cr, vr)
            }
            (Some(&(cr, vr)), None) => {
                i += 1;
                (cr, vr)
            }
            (_, Some(&(cp, vp))) => {
                j += 1;
                (cp, factor.checked_mul(vp)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    Some(out)
}

/// Dense Smith normal form: diagonalizes by unimodular row and column
/// operations, pivoting on the entry of least absolute value, then turns the
/// diagonal into invariant factors.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let sub = &q * &a[i][t];
                    a[i][j] -= sub;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // a remainder is now smaller than the pivot; bring it to (t, t)
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    normalize_diagonal(diag)
}

/// Replaces a diagonal by the equivalent divisibility chain, using
/// `diag(a, b) ~ diag(gcd, lcm)`.
pub fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.retain(|v| !v.is_zero());
    for v in d.iter_mut() {
        *v = v.abs();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
