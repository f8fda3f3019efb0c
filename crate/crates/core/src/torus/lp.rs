//! Exact feasibility test for "0 is in the relative interior of the convex
//! hull of a point set".
//!
//! `0` lies in the relative interior of `conv(w_1..w_k)` exactly when there
//! are weights `lambda_i > 0` with `sum lambda_i w_i = 0`. If such weights
//! exist, the point `0` is a strictly positive combination and therefore
//! interior to the hull inside its affine span (which then contains 0, so
//! the affine and linear spans agree). Conversely an interior point has a
//! representation with every coefficient positive. Scaling lets us ask for
//! `lambda_i >= 1`, which is a plain phase-one LP after substituting
//! `mu_i = lambda_i - 1 >= 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `true` iff `sum lambda_i p_i = 0` has a solution with all `lambda_i >= 1`.
pub fn interior_contains_zero(points: &[Vec<i64>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = points[0].len();
    // each coordinate must vanish identically or take both signs
    for c in 0..dim {
        let pos = points.iter().any(|p| p[c] > 0);
        let neg = points.iter().any(|p| p[c] < 0);
        if pos != neg {
            return false;
        }
    }
    let rows: Vec<(Vec<BigRational>, BigRational)> = (0..dim)
        .filter(|&c| points.iter().any(|p| p[c] != 0))
        .map(|c| {
            let coeffs = points.iter().map(|p| rat(p[c])).collect();
            let rhs = rat(-points.iter().map(|p| p[c]).sum::<i64>());
            (coeffs, rhs)
        })
        .collect();
    phase_one_feasible(rows, points.len())
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Decides whether `A x = b, x >= 0` is feasible, by minimizing the sum of
/// artificial variables with Bland's rule.
fn phase_one_feasible(rows: Vec<(Vec<BigRational>, BigRational)>, nvars: usize) -> bool {
    let m = rows.len();
    if m == 0 {
        return true;
    }
    let width = nvars + m + 1;
    let rhs = width - 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (mut coeffs, mut b)) in rows.into_iter().enumerate() {
        if b.is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -c.clone());
            b = -b;
        }
        let mut row = coeffs;
        row.resize(width, BigRational::zero());
        row[nvars + i] = rat(1);
        row[rhs] = b;
        tab.push(row);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();
    let mut cost = vec![BigRational::zero(); width];
    for j in 0..width {
        let colsum = tab.iter().fold(BigRational::zero(), |acc, r| acc + &r[j]);
        cost[j] = if (nvars..nvars + m).contains(&j) { rat(1) - colsum } else { -colsum };
    }

    loop {
        let Some(enter) = (0..rhs).find(|&j| cost[j].is_negative()) else {
            return cost[rhs].is_zero();
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][rhs] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // the phase-one objective is bounded below by zero
        let (row, _) = leave.expect("phase one cannot be unbounded");

        let piv = tab[row][enter].clone();
        tab[row].iter_mut().for_each(|x| *x = &*x / &piv);
        let pivot_row = tab[row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i == row || r[enter].is_zero() {
                continue;
            }
            let f = r[enter].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[row] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn examples() {
        assert!(interior_contains_zero(&pts(&[&[1], &[-1]])));
        assert!(!interior_contains_zero(&pts(&[&[1, 0], &[-1, 0], &[0, 1]])));
        assert!(interior_contains_zero(&pts(&[&[-3], &[-2], &[2], &[5], &[6]])));
        assert!(interior_contains_zero(&pts(&[&[0, 0]])));
        assert!(!interior_contains_zero(&[]));
    }

    #[test]
    fn needs_the_lp() {
        // passes the sign prefilter, but the third point cannot be balanced
        let p = pts(&[&[1, 1], &[-1, -1], &[1, -1], &[2, 0]]);
        assert!(!interior_contains_zero(&p));
        let q = pts(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert!(interior_contains_zero(&q));
        let r = pts(&[&[1, 0], &[0, 1], &[-1, -1], &[3, 3]]);
        assert!(interior_contains_zero(&r));
    }

    // Independent check in the plane: 0 is interior to the hull within the
    // span iff no closed half-plane through 0 holds all points with one strictly inside.
    fn brute_plane(points: &[Vec<i64>]) -> bool {
        let mut dirs = vec![];
        for p in points {
            dirs.push((p[1], -p[0]));
            dirs.push((-p[1], p[0]));
            dirs.push((p[0], p[1]));
        }
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                dirs.push((a, b));
            }
        }
        for (a, b) in dirs {
            if a == 0 && b == 0 {
                continue;
            }
            let vals: Vec<i64> = points.iter().map(|p| a * p[0] + b * p[1]).collect();
            if vals.iter().all(|&v| v >= 0) && vals.iter().any(|&v| v > 0) {
                return false;
            }
        }
        true
    }

    #[test]
    fn agrees_with_halfplane_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..400 {
            let k = rng.gen_range(1..6);
            let p: Vec<Vec<i64>> = (0..k).map(|_| vec![rng.gen_range(-3..4), rng.gen_range(-3..4)]).collect();
            assert_eq!(interior_contains_zero(&p), brute_plane(&p), "{p:?}");
        }
    }
}
