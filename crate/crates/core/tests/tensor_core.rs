mod common;

use common::*;
use isopoly_core::rational::{self, Rational};
use isopoly_core::tensor::*;
use isopoly_core::{Matrix, ObjectiveTensor, Permutation};
use proptest::prelude::*;

fn case() -> impl Strategy<Value = (Matrix, Matrix, Permutation, Permutation)> {
    (1usize..=6).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), arb_permutation(n), arb_permutation(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fast_pairing_matches_quadruple_sum((a, b, sigma, pi) in case()) {
        let naive = naive_pair_value(&a, &b, &sigma, &pi);
        prop_assert_eq!(fast_pair_value(&a, &b, &sigma, &pi).unwrap(), naive.clone());
        let w = objective_from_pair(&a, &b).unwrap();
        prop_assert_eq!(pair_value(&w, &sigma, &pi).unwrap(), naive);
    }

    #[test]
    fn pair_value_is_the_vertex_dot_product(
        (w, sigma, pi) in (1usize..=4).prop_flat_map(|n| (arb_tensor(n), arb_permutation(n), arb_permutation(n)))
    ) {
        let point = vertex_point(&sigma, &pi).unwrap();
        let dot = w.coefficients().iter().zip(&point).fold(Rational::from_integer(0.into()), |acc, (c, x)| acc + c * x);
        prop_assert_eq!(pair_value(&w, &sigma, &pi).unwrap(), dot.clone());
        prop_assert_eq!(naive_tensor_value(&w, &sigma, &pi), dot);
    }

    #[test]
    fn pair_value_is_bilinear(
        (w1, w2, sigma, pi) in (1usize..=4).prop_flat_map(|n| (arb_tensor(n), arb_tensor(n), arb_permutation(n), arb_permutation(n))),
        c in arb_rational(),
    ) {
        let sum = pair_value(&(&w1 + &w2), &sigma, &pi).unwrap();
        prop_assert_eq!(sum, pair_value(&w1, &sigma, &pi).unwrap() + pair_value(&w2, &sigma, &pi).unwrap());
        prop_assert_eq!(pair_value(&(&w1 * &c), &sigma, &pi).unwrap(), pair_value(&w1, &sigma, &pi).unwrap() * &c);
    }

    #[test]
    fn vertex_points_have_n_squared_ones(
        (sigma, pi) in (1usize..=5).prop_flat_map(|n| (arb_permutation(n), arb_permutation(n)))
    ) {
        let n = sigma.n();
        let point = vertex_point(&sigma, &pi).unwrap();
        prop_assert_eq!(point.len(), n.pow(4));
        prop_assert_eq!(point.iter().filter(|x| **x == rational::one()).count(), n * n);
        prop_assert!(point.iter().all(|x| *x == rational::one() || *x == rational::zero()));
    }

    #[test]
    fn agreement_is_the_identity_pairing(
        (sigma, pi) in (1usize..=6).prop_flat_map(|n| (arb_permutation(n), arb_permutation(n)))
    ) {
        let agree = agreement_count(&sigma, &pi).unwrap();
        prop_assert_eq!(pair_value(&identity_objective(sigma.n()), &sigma, &pi).unwrap(), rational::int(agree as i64));
    }

    #[test]
    fn tensor_json_round_trips(w in (1usize..=3).prop_flat_map(arb_tensor)) {
        let text = w.to_json();
        let back = ObjectiveTensor::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, w);
    }
}

#[test]
fn agreement_separates_diagonal_pairs_exhaustively() {
    for n in 1..=5 {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for sigma in &perms {
            for pi in &perms {
                let agree = agreement_count(sigma, pi).unwrap();
                if sigma == pi {
                    assert_eq!(agree, n);
                } else {
                    assert!(agree < n);
                }
            }
        }
    }
}

#[test]
fn identity_objective_is_the_identity_pair() {
    for n in 1..=4 {
        assert_eq!(objective_from_pair(&Matrix::identity(n), &Matrix::identity(n)).unwrap(), identity_objective(n));
    }
}
