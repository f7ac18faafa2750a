//! Exact linear optimization over the vertex sets of `ψₙ` (the diagonal
//! vertices `P ⊗ P`, a quadratic assignment problem) and `ψₙ,ₙ` (all
//! `P ⊗ Q`, solved as an outer enumeration over `P` with an inner linear
//! assignment over `Q`).
//!
//! Ties are broken towards the lexicographically smallest witness. Both
//! searches split the permutation space by the first image `σ(0)`, solve every
//! branch independently and merge in branch order, so a multi-threaded run is
//! bit-identical to a single-threaded one, node counts included.

mod lap;
mod psi;
mod psinn;

pub use lap::{lap_max, lap_max_value};
pub use psi::{psi_n_max, psi_n_max_pair, QapObjective};
pub use psinn::{psi_nn_brute_force, psi_nn_max};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{check_dim, Error, Result};
use crate::perm::Permutation;
use crate::rational::{self, Rational};
use crate::tensor::{Matrix, ObjectiveTensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    #[default]
    BranchAndBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::BranchAndBound => "branch_and_bound",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Method::Exhaustive),
            "branch_and_bound" | "bnb" => Ok(Method::BranchAndBound),
            other => Err(Error::parse(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub method: Method,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
    pub caps: Caps,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { method: Method::default(), threads: 1, caps: Caps::default() }
    }
}

impl SolveOptions {
    pub fn with_method(method: Method) -> Self {
        SolveOptions { method, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// Vertex `P ⊗ P` of `ψₙ`.
    Diagonal(Permutation),
    /// Vertex `P ⊗ Q` of `ψₙ,ₙ`.
    Pair(Permutation, Permutation),
}

impl Witness {
    pub fn sigma(&self) -> &Permutation {
        match self {
            Witness::Diagonal(s) | Witness::Pair(s, _) => s,
        }
    }

    pub fn pi(&self) -> &Permutation {
        match self {
            Witness::Diagonal(s) => s,
            Witness::Pair(_, p) => p,
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Witness::Diagonal(p) => p.one_based().serialize(s),
            Witness::Pair(p, q) => [p.one_based(), q.one_based()].serialize(s),
        }
    }
}

/// Exact optimum with its witness vertex. Serializes as
/// `{"value": "p/q", "witness": [...], "nodes": int, "method": str}` with
/// 1-based witness images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptResult {
    #[serde(with = "rational::as_string")]
    pub value: Rational,
    pub witness: Witness,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
    pub method: Method,
}

/// Best `(value, witness)` of one branch, plus the nodes it visited.
#[derive(Debug, Clone)]
pub(crate) struct Incumbent {
    pub best: Option<(Rational, Witness)>,
    pub nodes: u64,
}

impl Incumbent {
    pub fn empty() -> Self {
        Incumbent { best: None, nodes: 0 }
    }

    pub fn bound_allows(&self, bound: &Rational) -> bool {
        self.best.as_ref().map_or(true, |(v, _)| bound > v)
    }

    pub fn offer(&mut self, value: Rational, witness: impl FnOnce() -> Witness) {
        if self.best.as_ref().map_or(true, |(v, _)| value > *v) {
            self.best = Some((value, witness()));
        }
    }

    /// Associative merge: higher value wins, ties go to the smaller witness.
    pub fn merge(mut self, other: Incumbent) -> Incumbent {
        self.nodes += other.nodes;
        self.best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a }),
        };
        self
    }
}

/// Solves branch `r` for every first image `r = σ(0)` and merges in order.
pub(crate) fn run_branches<F>(n: usize, threads: usize, solve: F) -> Result<Incumbent>
where
    F: Fn(usize) -> Incumbent + Sync + Send,
{
    let results: Vec<Incumbent> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        pool.install(|| (0..n).into_par_iter().map(&solve).collect())
    } else {
        (0..n).map(&solve).collect()
    };
    Ok(results.into_iter().fold(Incumbent::empty(), Incumbent::merge))
}

/// For fixed `σ`, `<W, P ⊗ Q>` is linear in `Q` with coefficients
/// `c[s][t] = Σ_i coeff(i, σ(i), s, t)`.
pub fn q_coefficients(w: &ObjectiveTensor, sigma: &Permutation) -> Result<Matrix> {
    check_dim(w.n(), sigma.n())?;
    let n = w.n();
    Ok(Matrix::from_fn(n, |s, t| {
        (0..n).fold(Rational::zero(), |acc, i| acc + w.get(i, sigma.apply(i), s, t))
    }))
}

pub(crate) fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::invalid("optimization needs n >= 1"))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::tensor::{identity_objective, pair_value};

    #[test]
    fn q_coefficient_examples() {
        let id = Permutation::identity(3);
        assert_eq!(q_coefficients(&identity_objective(3), &id).unwrap(), Matrix::identity(3));
        assert_eq!(q_coefficients(&ObjectiveTensor::zeros(3), &id).unwrap(), Matrix::zeros(3));
        assert!(q_coefficients(&ObjectiveTensor::zeros(2), &id).is_err());
    }

    #[test]
    fn q_coefficients_linearize_pairing() {
        let w = ObjectiveTensor::from_fn(3, |i, j, s, t| rational::ratio((7 * i + 5 * j + 3 * s + t) as i64 % 11 - 5, 1 + (i + t) as i64 % 3));
        for sigma in Permutation::all(3) {
            let c = q_coefficients(&w, &sigma).unwrap();
            for pi in Permutation::all(3) {
                let linear = (0..3).fold(Rational::zero(), |acc, s| acc + c.get(s, pi.apply(s)));
                assert_eq!(linear, pair_value(&w, &sigma, &pi).unwrap());
            }
        }
    }

    #[test]
    fn incumbent_merge_is_order_independent_on_ties() {
        let a = Permutation::identity(2);
        let b = Permutation::transposition(2, 0, 1);
        let mk = |p: &Permutation| Incumbent { best: Some((int(1), Witness::Diagonal(p.clone()))), nodes: 1 };
        let ab = mk(&a).merge(mk(&b));
        let ba = mk(&b).merge(mk(&a));
        assert_eq!(ab.best, ba.best);
        assert_eq!(ab.best.unwrap().1, Witness::Diagonal(a));
        assert_eq!(ab.nodes, 2);
    }

    #[test]
    fn opt_result_json_shape() {
        let r = OptResult {
            value: rational::ratio(7, 2),
            witness: Witness::Pair(Permutation::identity(2), Permutation::transposition(2, 0, 1)),
            nodes_explored: 3,
            method: Method::Exhaustive,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"value":"7/2","witness":[[1,2],[2,1]],"nodes":3,"method":"exhaustive"}"#
        );
    }
}
