#![allow(dead_code)]

use isopoly_core::rational::{self, Rational};
use isopoly_core::{Matrix, ObjectiveTensor, Permutation};
use num_traits::Zero;
use proptest::prelude::*;

/// `<A ⊗ B, P ⊗ Q>` straight from the quadruple sum
/// `Σ_{i,j,s,t} A[i][s] B[j][t] P[i][j] Q[s][t]` with explicit 0/1 matrices.
pub fn naive_pair_value(a: &Matrix, b: &Matrix, sigma: &Permutation, pi: &Permutation) -> Rational {
    let n = a.n();
    let p = |i: usize, j: usize| if sigma.image()[i] == j { 1 } else { 0 };
    let q = |s: usize, t: usize| if pi.image()[s] == t { 1 } else { 0 };
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                for t in 0..n {
                    if p(i, j) * q(s, t) == 1 {
                        acc += a.get(i, s) * b.get(j, t);
                    }
                }
            }
        }
    }
    acc
}

/// `<W, P ⊗ Q>` as a dot product over all `n⁴` coordinates.
pub fn naive_tensor_value(w: &ObjectiveTensor, sigma: &Permutation, pi: &Permutation) -> Rational {
    let n = w.n();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                for t in 0..n {
                    if sigma.image()[i] == j && pi.image()[s] == t {
                        acc += w.get(i, j, s, t);
                    }
                }
            }
        }
    }
    acc
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| rational::ratio(p, q))
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

pub fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(arb_rational(), n * n).prop_map(move |v| {
        let mut it = v.into_iter();
        Matrix::from_fn(n, |_, _| it.next().unwrap())
    })
}

pub fn arb_tensor(n: usize) -> impl Strategy<Value = ObjectiveTensor> {
    proptest::collection::vec(arb_rational(), n.pow(4)).prop_map(move |v| ObjectiveTensor::from_flat(n, v).unwrap())
}
