//! Seeded instance generation.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Integer entries are drawn with `gen_range` over the
//! inclusive range, one per coordinate in row-major order; graph edges are
//! drawn with `gen_ratio` for each pair `i < j` in lexicographic order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::Graph;
use crate::perm::Permutation;
use crate::rational::{self, Rational};
use crate::tensor::{Matrix, ObjectiveTensor};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform on `lo..=hi`.
pub fn integer_tensor(rng: &mut SeededRng, n: usize, lo: i64, hi: i64) -> ObjectiveTensor {
    ObjectiveTensor::from_fn(n, |_, _, _, _| rational::int(rng.gen_range(lo..=hi)))
}

pub fn integer_matrix(rng: &mut SeededRng, n: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::from_fn(n, |_, _| rational::int(rng.gen_range(lo..=hi)))
}

/// `p/q` with `p` uniform on `-bound..=bound` and `q` on `1..=bound`.
pub fn rational_entry(rng: &mut SeededRng, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    rational::ratio(p, q)
}

pub fn rational_matrix(rng: &mut SeededRng, n: usize, bound: i64) -> Matrix {
    Matrix::from_fn(n, |_, _| rational_entry(rng, bound))
}

pub fn rational_tensor(rng: &mut SeededRng, n: usize, bound: i64) -> ObjectiveTensor {
    ObjectiveTensor::from_fn(n, |_, _, _, _| rational_entry(rng, bound))
}

/// Each edge present independently with probability `num / den`.
pub fn random_graph(rng: &mut SeededRng, n: usize, num: u32, den: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are in range")
}

pub fn permutation(rng: &mut SeededRng, n: usize) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::from_image_unchecked(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn reproducible() {
        let a = integer_tensor(&mut rng(7), 3, -9, 9);
        let b = integer_tensor(&mut rng(7), 3, -9, 9);
        assert_eq!(a, b);
        assert_ne!(a, integer_tensor(&mut rng(8), 3, -9, 9));
        assert!(a.coefficients().iter().all(|c| c.abs() <= rational::int(9)));
        let g = random_graph(&mut rng(1), 6, 1, 2);
        assert_eq!(g, random_graph(&mut rng(1), 6, 1, 2));
        assert_eq!(permutation(&mut rng(3), 5).n(), 5);
    }
}
