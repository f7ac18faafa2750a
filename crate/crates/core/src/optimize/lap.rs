//! Exact maximum-weight linear assignment.

use num_traits::Zero;

use crate::perm::Permutation;
use crate::rational::Rational;
use crate::tensor::Matrix;

/// Maximizes `Σ_s C[s][π(s)]`. Among optimal assignments the
/// lexicographically smallest `π` is returned.
pub fn lap_max(c: &Matrix) -> (Rational, Permutation) {
    let n = c.n();
    let best = lap_max_value(c);
    let mut image = Vec::with_capacity(n);
    let mut free: Vec<usize> = (0..n).collect();
    let mut remaining = best.clone();
    for s in 0..n {
        // the last row has exactly one choice left
        let pick = if s + 1 == n {
            0
        } else {
            free.iter()
                .position(|&t| {
                    let rest: Vec<usize> = free.iter().copied().filter(|&u| u != t).collect();
                    c.get(s, t) + sub_value(c, s + 1, &rest) == remaining
                })
                .expect("some column completes an optimal assignment")
        };
        let t = free.remove(pick);
        remaining -= c.get(s, t);
        image.push(t);
    }
    (best, Permutation::from_image_unchecked(image))
}

/// Optimal value only.
pub fn lap_max_value(c: &Matrix) -> Rational {
    let cols: Vec<usize> = (0..c.n()).collect();
    sub_value(c, 0, &cols)
}

/// Best assignment of rows `first_row..n` onto `cols` (same count).
fn sub_value(c: &Matrix, first_row: usize, cols: &[usize]) -> Rational {
    let rows: Vec<usize> = (first_row..c.n()).collect();
    debug_assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return Rational::zero();
    }
    // minimize the negated weights
    let cost: Vec<Vec<Rational>> = rows.iter().map(|&r| cols.iter().map(|&k| -c.get(r, k)).collect()).collect();
    let assignment = hungarian_min(&cost);
    rows.iter()
        .zip(&assignment)
        .fold(Rational::zero(), |acc, (&r, &k)| acc + c.get(r, cols[k]))
}

/// O(n³) shortest-augmenting-path Hungarian method with potentials, exact on
/// rationals. Returns the column assigned to each row.
fn hungarian_min(cost: &[Vec<Rational>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    // p[j]: row (1-based) matched to column j; column 0 is the virtual root
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = &cost[i0 - 1][j - 1] - &u[i0] - &v[j];
                if minv[j].as_ref().map_or(true, |m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("set above");
                if delta.as_ref().map_or(true, |d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut row_to_col = vec![0; n];
    for j in 1..=n {
        row_to_col[p[j] - 1] = j - 1;
    }
    row_to_col
}
