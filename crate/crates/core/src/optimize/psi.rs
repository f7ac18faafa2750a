//! Maximization over the diagonal vertices `P ⊗ P`:
//! `max_σ Σ_{i,s} coeff(i, σ(i), s, σ(s))`.

use itertools::Itertools;
use num_traits::Zero;
use std::borrow::Cow;

use super::{lap_max_value, require_positive, run_branches, Incumbent, Method, OptResult, SolveOptions, Witness};
use crate::caps::check_cap;
use crate::error::Result;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::tensor::{Matrix, ObjectiveTensor, PairObjective};

/// An objective that can be evaluated on diagonal vertices.
pub trait QapObjective: Sync {
    fn n(&self) -> usize;

    /// Coefficient of `P[i][j] · P[s][t]`.
    fn coeff(&self, i: usize, j: usize, s: usize, t: usize) -> Cow<'_, Rational>;

    /// `<W, P ⊗ P>` for the permutation matrix `P` of `sigma`.
    fn diagonal_value(&self, sigma: &Permutation) -> Rational;
}

impl QapObjective for ObjectiveTensor {
    fn n(&self) -> usize {
        ObjectiveTensor::n(self)
    }

    fn coeff(&self, i: usize, j: usize, s: usize, t: usize) -> Cow<'_, Rational> {
        Cow::Borrowed(self.get(i, j, s, t))
    }

    fn diagonal_value(&self, sigma: &Permutation) -> Rational {
        let n = self.n();
        let mut acc = Rational::zero();
        for i in 0..n {
            for s in 0..n {
                acc += self.get(i, sigma.apply(i), s, sigma.apply(s));
            }
        }
        acc
    }
}

/// Evaluated through `<P B Pᵀ, A>` without expanding `A ⊗ B`.
impl QapObjective for PairObjective {
    fn n(&self) -> usize {
        PairObjective::n(self)
    }

    fn coeff(&self, i: usize, j: usize, s: usize, t: usize) -> Cow<'_, Rational> {
        Cow::Owned(self.a().get(i, s) * self.b().get(j, t))
    }

    fn diagonal_value(&self, sigma: &Permutation) -> Rational {
        PairObjective::diagonal_value(self, sigma)
    }
}

/// `max{<W, X> : X ∈ ψₙ}` with the lexicographically smallest optimal `σ`.
/// Both methods return the same value and witness.
pub fn psi_n_max<O: QapObjective + ?Sized>(w: &O, opts: &SolveOptions) -> Result<OptResult> {
    let n = w.n();
    require_positive(n)?;
    let merged = match opts.method {
        Method::Exhaustive => {
            check_cap("psi_n_max (exhaustive)", n, opts.caps.psi_exhaustive)?;
            run_branches(n, opts.threads, |first| exhaustive_branch(w, first))?
        }
        Method::BranchAndBound => {
            check_cap("psi_n_max (branch_and_bound)", n, opts.caps.psi_branch_and_bound)?;
            let mut inc = run_branches(n, opts.threads, |first| {
                let mut search = BranchAndBound::new(w);
                search.descend(first);
                search.incumbent
            })?;
            inc.nodes += 1; // root
            inc
        }
    };
    let (value, witness) = merged.best.expect("n >= 1 has at least one permutation");
    Ok(OptResult { value, witness, nodes_explored: merged.nodes, method: opts.method })
}

/// Convenience for `A ⊗ B` objectives.
pub fn psi_n_max_pair(w: &PairObjective, opts: &SolveOptions) -> Result<OptResult> {
    psi_n_max(w, opts)
}

fn exhaustive_branch<O: QapObjective + ?Sized>(w: &O, first: usize) -> Incumbent {
    let n = w.n();
    let rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
    let mut inc = Incumbent::empty();
    for tail in rest.iter().copied().permutations(rest.len()) {
        let mut image = Vec::with_capacity(n);
        image.push(first);
        image.extend(tail);
        let sigma = Permutation::from_image_unchecked(image);
        inc.nodes += 1;
        let value = w.diagonal_value(&sigma);
        inc.offer(value, || Witness::Diagonal(sigma));
    }
    inc
}

/// Depth-first search assigning `σ(0), σ(1), ...` in increasing image order,
/// so the first optimum found is the lexicographically smallest.
struct BranchAndBound<'a, O: QapObjective + ?Sized> {
    w: &'a O,
    image: Vec<usize>,
    used: Vec<bool>,
    /// Σ over assigned `i, s` of `coeff(i, σ(i), s, σ(s))`.
    exact: Rational,
    incumbent: Incumbent,
}

impl<'a, O: QapObjective + ?Sized> BranchAndBound<'a, O> {
    fn new(w: &'a O) -> Self {
        let n = w.n();
        BranchAndBound {
            w,
            image: Vec::with_capacity(n),
            used: vec![false; n],
            exact: Rational::zero(),
            incumbent: Incumbent::empty(),
        }
    }

    fn descend(&mut self, target: usize) {
        let k = self.image.len();
        let mut gain = self.w.coeff(k, target, k, target).into_owned();
        for (i, &j) in self.image.iter().enumerate() {
            gain += &*self.w.coeff(i, j, k, target);
            gain += &*self.w.coeff(k, target, i, j);
        }
        self.exact += &gain;
        self.image.push(target);
        self.used[target] = true;

        self.visit();

        self.used[target] = false;
        self.image.pop();
        self.exact -= &gain;
    }

    fn visit(&mut self) {
        let n = self.w.n();
        self.incumbent.nodes += 1;
        if self.image.len() == n {
            let value = self.exact.clone();
            let image = self.image.clone();
            self.incumbent.offer(value, || Witness::Diagonal(Permutation::from_image_unchecked(image)));
            return;
        }
        if !self.incumbent.bound_allows(&self.upper_bound()) {
            return;
        }
        for target in 0..n {
            if !self.used[target] {
                self.descend(target);
            }
        }
    }

    /// Gilmore-Lawler bound. For an open position `i` placed at a free image
    /// `j`, `score(i, j)` is the exact interaction with the placed prefix
    /// plus, for every other open `s`, the best coefficient `(i, j, s, t)`
    /// over free `t ≠ j`. Every completion is dominated by some assignment of
    /// open positions to free images under these scores.
    fn upper_bound(&self) -> Rational {
        let n = self.w.n();
        let k = self.image.len();
        let free: Vec<usize> = (0..n).filter(|&v| !self.used[v]).collect();
        let scores = Matrix::from_fn(n - k, |a, b| {
            let (i, j) = (k + a, free[b]);
            let mut score = self.w.coeff(i, j, i, j).into_owned();
            for (s, &t) in self.image.iter().enumerate() {
                score += &*self.w.coeff(i, j, s, t);
                score += &*self.w.coeff(s, t, i, j);
            }
            for s in (k..n).filter(|&s| s != i) {
                let best = free.iter().filter(|&&t| t != j).map(|&t| self.w.coeff(i, j, s, t)).max();
                score += best.expect("at least two free images").as_ref();
            }
            score
        });
        &self.exact + lap_max_value(&scores)
    }
}
