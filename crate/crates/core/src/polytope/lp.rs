//! Exact feasibility of `{x ≥ 0 : A x = b}` by phase-1 simplex on rationals.
//!
//! The system is first row-reduced so that the tableau only carries
//! independent equations; pivots follow Bland's smallest-index rule, which
//! cannot cycle.

use num_traits::{Signed, Zero};

use super::linalg::echelon;
use crate::rational::Rational;

/// `rows[k]` is `[a_k1, ..., a_kc, b_k]`.
pub fn feasible(rows: Vec<Vec<Rational>>) -> bool {
    let Some(width) = rows.first().map(Vec::len) else {
        return true;
    };
    let vars = width - 1;
    let reduced = echelon(rows);
    // a pivot in the right-hand side column means 0 = 1
    if reduced.iter().any(|r| r[..vars].iter().all(Zero::is_zero)) {
        return false;
    }
    Tableau::phase_one(reduced, vars).solve()
}

struct Tableau {
    /// `m` constraint rows over `vars + m` columns (originals, artificials)
    /// followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-1 objective, last entry its negated value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn phase_one(system: Vec<Vec<Rational>>, vars: usize) -> Self {
        let m = system.len();
        let width = vars + m + 1;
        let mut rows = Vec::with_capacity(m);
        for (k, eq) in system.into_iter().enumerate() {
            let flip = eq[vars].is_negative();
            let mut row = Vec::with_capacity(width);
            row.extend(eq[..vars].iter().map(|x| if flip { -x } else { x.clone() }));
            row.extend((0..m).map(|a| if a == k { Rational::from_integer(1.into()) } else { Rational::zero() }));
            row.push(if flip { -&eq[vars] } else { eq[vars].clone() });
            rows.push(row);
        }
        // minimize Σ artificials: reduced cost of column j is -Σ_k rows[k][j]
        let mut cost = vec![Rational::zero(); width];
        for row in &rows {
            for (c, x) in cost.iter_mut().zip(row) {
                *c -= x;
            }
        }
        for c in &mut cost[vars..vars + m] {
            *c = Rational::zero();
        }
        Tableau { rows, cost, basis: (vars..vars + m).collect() }
    }

    fn solve(mut self) -> bool {
        let rhs = self.cost.len() - 1;
        while let Some(enter) = (0..rhs).find(|&j| self.cost[j].is_negative()) {
            let leave = self
                .rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[enter].is_positive())
                .map(|(k, r)| (&r[rhs] / &r[enter], self.basis[k], k))
                .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
                .map(|(_, _, k)| k);
            // phase 1 is bounded below by 0, so an entering column always has a pivot row
            let leave = leave.expect("phase-1 objective is bounded");
            self.pivot(leave, enter);
        }
        self.cost[rhs].is_zero()
    }

    fn pivot(&mut self, leave: usize, enter: usize) {
        let inv = self.rows[leave][enter].recip();
        for x in &mut self.rows[leave] {
            *x *= &inv;
        }
        let pivot_row = self.rows[leave].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[enter].clone();
            if factor.is_zero() {
                return;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        };
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k != leave {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[leave] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn sys(rows: &[&[Rational]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0  → x = y = 1/2
        assert!(feasible(sys(&[&[int(1), int(1), int(1)], &[int(1), int(-1), int(0)]])));
        // x + y = 1, x + y = 2
        assert!(!feasible(sys(&[&[int(1), int(1), int(1)], &[int(1), int(1), int(2)]])));
        // x - y = 1 with y ≥ 0 is fine; -x - y = 1 is not
        assert!(feasible(sys(&[&[int(1), int(-1), int(1)]])));
        assert!(!feasible(sys(&[&[int(-1), int(-1), int(1)]])));
        assert!(feasible(sys(&[&[int(2), int(3), ratio(1, 2)]])));
        assert!(feasible(Vec::new()));
    }

    #[test]
    fn degenerate_redundant_rows() {
        let row = [int(1), int(1), int(0), int(1)];
        assert!(feasible(sys(&[&row, &row, &[int(0), int(1), int(1), int(0)]])));
        // y + z = 0 forces y = z = 0, so x = 1
        assert!(feasible(sys(&[&row, &[int(0), int(1), int(1), int(0)], &[int(1), int(0), int(0), int(1)]])));
        assert!(!feasible(sys(&[&row, &[int(0), int(1), int(1), int(0)], &[int(1), int(0), int(0), int(2)]])));
    }
}
