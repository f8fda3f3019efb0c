//! Integer row reduction (Hermite normal form) of lattices given by generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result has positive pivots, strictly increasing pivot columns, and
/// entries above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        while let Some(p) = (top..rows.len()).filter(|&i| !rows[i][col].is_zero()).min_by_key(|&i| rows[i][col].abs()) {
            rows.swap(top, p);
            let mut clean = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                let pivot = rows[top].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[top][col].is_zero() {
            continue;
        }
        if rows[top][col].is_negative() {
            rows[top].iter_mut().for_each(|x| *x = -x.clone());
        }
        let pivot = rows[top].clone();
        for row in rows.iter_mut().take(top) {
            let q = row[col].div_floor(&pivot[col]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &q * y;
            }
        }
        top += 1;
    }
    rows.truncate(top);
    rows
}

/// Index of the first nonzero entry.
pub fn pivot_column(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Splits the lattice generated by `(head | tail)` rows, `head` of width
/// `split`, into the rank of its projection onto the head and an echelon
/// basis of its intersection with `{0} x Z^tail`.
pub fn split_kernel(rows: Vec<Vec<BigInt>>, split: usize) -> (usize, Vec<Vec<BigInt>>) {
    let hnf = hermite_rows(rows);
    let mut head_rank = 0;
    let mut kernel = Vec::new();
    for row in hnf {
        match pivot_column(&row) {
            Some(c) if c < split => head_rank += 1,
            Some(_) => kernel.push(row[split..].to_vec()),
            None => {}
        }
    }
    (head_rank, kernel)
}
