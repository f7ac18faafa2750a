//! Maximization over all vertices `P ⊗ Q`: for each `σ` the pairing is linear
//! in `Q`, so the inner problem is a linear assignment on `q_coefficients`.

use itertools::Itertools;
use num_traits::Zero;

use super::{
    lap_max, lap_max_value, q_coefficients, require_positive, run_branches, Incumbent, Method, OptResult,
    SolveOptions, Witness,
};
use crate::caps::check_cap;
use crate::error::Result;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::tensor::{pair_value, Matrix, ObjectiveTensor};

/// `max{<W, X> : X ∈ ψₙ,ₙ}`. The witness `(σ, π)` has `σ` lexicographically
/// smallest among optimal outer permutations and `π` as chosen by
/// [`lap_max`].
pub fn psi_nn_max(w: &ObjectiveTensor, opts: &SolveOptions) -> Result<OptResult> {
    let n = w.n();
    require_positive(n)?;
    check_cap("psi_nn_max", n, opts.caps.psi_nn)?;
    let merged = match opts.method {
        Method::Exhaustive => run_branches(n, opts.threads, |first| exhaustive_branch(w, first))?,
        Method::BranchAndBound => {
            let mut inc = run_branches(n, opts.threads, |first| {
                let mut search = OuterSearch::new(w);
                search.descend(first);
                search.incumbent
            })?;
            inc.nodes += 1;
            inc
        }
    };
    let (value, witness) = merged.best.expect("n >= 1 has at least one permutation");
    Ok(OptResult { value, witness, nodes_explored: merged.nodes, method: opts.method })
}

fn offer_sigma(inc: &mut Incumbent, w: &ObjectiveTensor, sigma: Permutation) {
    let c = q_coefficients(w, &sigma).expect("dimensions agree");
    let value = lap_max_value(&c);
    inc.offer(value, || Witness::Pair(sigma, lap_max(&c).1));
}

fn exhaustive_branch(w: &ObjectiveTensor, first: usize) -> Incumbent {
    let n = w.n();
    let rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
    let mut inc = Incumbent::empty();
    for tail in rest.iter().copied().permutations(rest.len()) {
        let image: Vec<usize> = std::iter::once(first).chain(tail).collect();
        inc.nodes += 1;
        offer_sigma(&mut inc, w, Permutation::from_image_unchecked(image));
    }
    inc
}

fn max_over_free<'a>(w: &'a ObjectiveTensor, i: usize, free: &[usize], s: usize, t: usize) -> &'a Rational {
    free.iter().map(|&j| w.get(i, j, s, t)).max().expect("free is nonempty")
}

/// Prefix search over `σ`. At a prefix, `U[s][t]` adds the exact
/// contributions of assigned rows to the best any free image could give the
/// others; every completion's `q_coefficients` is dominated entrywise by `U`,
/// so `lap_max_value(U)` bounds the whole subtree.
struct OuterSearch<'a> {
    w: &'a ObjectiveTensor,
    image: Vec<usize>,
    used: Vec<bool>,
    incumbent: Incumbent,
}

impl<'a> OuterSearch<'a> {
    fn new(w: &'a ObjectiveTensor) -> Self {
        OuterSearch { w, image: Vec::new(), used: vec![false; w.n()], incumbent: Incumbent::empty() }
    }

    fn descend(&mut self, target: usize) {
        self.image.push(target);
        self.used[target] = true;
        self.visit();
        self.used[target] = false;
        self.image.pop();
    }

    fn visit(&mut self) {
        let n = self.w.n();
        self.incumbent.nodes += 1;
        if self.image.len() == n {
            let sigma = Permutation::from_image_unchecked(self.image.clone());
            offer_sigma(&mut self.incumbent, self.w, sigma);
            return;
        }
        if !self.incumbent.bound_allows(&lap_max_value(&self.bound_matrix())) {
            return;
        }
        for target in 0..n {
            if !self.used[target] {
                self.descend(target);
            }
        }
    }

    fn bound_matrix(&self) -> Matrix {
        let n = self.w.n();
        let k = self.image.len();
        let free: Vec<usize> = (0..n).filter(|&v| !self.used[v]).collect();
        Matrix::from_fn(n, |s, t| {
            let mut acc = Rational::zero();
            for (i, &j) in self.image.iter().enumerate() {
                acc += self.w.get(i, j, s, t);
            }
            for i in k..n {
                acc += max_over_free(self.w, i, &free, s, t);
            }
            acc
        })
    }
}

/// Reference optimum over all `(n!)²` vertex pairs in lexicographic order.
pub fn psi_nn_brute_force(w: &ObjectiveTensor) -> Result<OptResult> {
    let n = w.n();
    require_positive(n)?;
    let mut inc = Incumbent::empty();
    for sigma in Permutation::all(n) {
        for pi in Permutation::all(n) {
            inc.nodes += 1;
            let value = pair_value(w, &sigma, &pi)?;
            inc.offer(value, || Witness::Pair(sigma.clone(), pi));
        }
    }
    let (value, witness) = inc.best.expect("nonempty");
    Ok(OptResult { value, witness, nodes_explored: inc.nodes, method: Method::Exhaustive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{adjacency_matrix, builtin_graph, GraphKind};
    use crate::rational::int;
    use crate::tensor::{identity_objective, objective_from_pair};

    fn solve(w: &ObjectiveTensor, method: Method) -> OptResult {
        psi_nn_max(w, &SolveOptions::with_method(method)).unwrap()
    }

    #[test]
    fn identity_objective_attains_n_on_the_diagonal() {
        for n in 1..=4 {
            for method in [Method::Exhaustive, Method::BranchAndBound] {
                let r = solve(&identity_objective(n), method);
                assert_eq!(r.value, int(n as i64));
                let id = Permutation::identity(n);
                assert_eq!(r.witness, Witness::Pair(id.clone(), id));
            }
        }
    }

    #[test]
    fn k3_p3_example() {
        let a_g = adjacency_matrix(&builtin_graph(GraphKind::Complete, 3).unwrap());
        let a_h = adjacency_matrix(&builtin_graph(GraphKind::Path, 3).unwrap());
        let w = objective_from_pair(&a_g, &a_h).unwrap();
        let brute = psi_nn_brute_force(&w).unwrap();
        assert_eq!(brute.value, int(4));
        assert_eq!(brute.nodes_explored, 36);
        for method in [Method::Exhaustive, Method::BranchAndBound] {
            let r = solve(&w, method);
            assert_eq!((r.value, r.witness), (brute.value.clone(), brute.witness.clone()));
        }
    }

    #[test]
    fn zero_and_trivial() {
        assert_eq!(solve(&ObjectiveTensor::zeros(3), Method::BranchAndBound).value, int(0));
        let w = ObjectiveTensor::from_flat(1, vec![int(9)]).unwrap();
        assert_eq!(solve(&w, Method::Exhaustive).value, int(9));
    }

    #[test]
    fn cap_is_enforced() {
        let opts = SolveOptions { caps: crate::caps::Caps::uniform(3), ..Default::default() };
        assert!(psi_nn_max(&ObjectiveTensor::zeros(4), &opts).is_err());
    }
}
