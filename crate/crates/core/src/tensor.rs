//! Dense exact matrices and 4-index objective tensors.
//!
//! Every [`ObjectiveTensor`] is stored in the objective-coefficient
//! convention: `coeff(i, j, s, t)` is the coefficient of `P[i][j] * Q[s][t]`
//! when the tensor is paired with the vertex `P ⊗ Q`. The index shuffle of the
//! tensor-tensor bilinear form is applied once, in [`objective_from_pair`]:
//!
//! ```text
//! <A ⊗ B, P ⊗ Q> = Σ_{i,j,s,t} A[i][s] B[j][t] P[i][j] Q[s][t]
//! ```
//!
//! so pairing with a vertex is a plain contraction over `(i, σ(i), s, π(s))`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul};

use crate::error::{check_dim, Error, Result};
use crate::perm::Permutation;
use crate::rational::{self, JsonRational, Rational};

/// Square `n × n` matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { rational::one() } else { rational::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            check_dim(n, row.len())?;
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rational::int(v)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.n, other.n)?;
        Ok(Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// `P · self · Qᵀ` for the permutation matrices of `sigma` and `pi`, in
    /// O(n²): entry `(i, s)` of the product is `self[σ(i)][π(s)]`.
    pub fn permuted(&self, sigma: &Permutation, pi: &Permutation) -> Result<Matrix> {
        check_dim(self.n, sigma.n())?;
        check_dim(self.n, pi.n())?;
        Ok(Matrix::from_fn(self.n, |i, s| self.get(sigma.apply(i), pi.apply(s)).clone()))
    }
}

/// `n × n × n × n` objective in the objective-coefficient convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectiveTensor {
    n: usize,
    coeff: Vec<Rational>,
}

impl ObjectiveTensor {
    pub fn zeros(n: usize) -> Self {
        ObjectiveTensor { n, coeff: vec![Rational::zero(); n.pow(4)] }
    }

    /// Builds from `f(i, j, s, t)`, visiting indices in row-major order.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Rational) -> Self {
        let mut coeff = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for s in 0..n {
                    for t in 0..n {
                        coeff.push(f(i, j, s, t));
                    }
                }
            }
        }
        ObjectiveTensor { n, coeff }
    }

    /// Wraps a row-major `(i, j, s, t)` coefficient vector of length `n⁴`.
    pub fn from_flat(n: usize, coeff: Vec<Rational>) -> Result<Self> {
        check_dim(n.pow(4), coeff.len())?;
        Ok(ObjectiveTensor { n, coeff })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, s: usize, t: usize) -> usize {
        ((i * self.n + j) * self.n + s) * self.n + t
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, s: usize, t: usize) -> &Rational {
        &self.coeff[self.offset(i, j, s, t)]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeff
    }

    pub fn max_abs(&self) -> Rational {
        self.coeff.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn min_coeff(&self) -> Option<&Rational> {
        self.coeff.iter().min()
    }

    pub fn scaled(&self, c: &Rational) -> ObjectiveTensor {
        ObjectiveTensor { n: self.n, coeff: self.coeff.iter().map(|x| x * c).collect() }
    }

    pub fn checked_add(&self, other: &ObjectiveTensor) -> Result<ObjectiveTensor> {
        check_dim(self.n, other.n)?;
        Ok(ObjectiveTensor {
            n: self.n,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a + b).collect(),
        })
    }

    /// `self + w · (I ⊗ I)`.
    pub fn plus_identity(&self, w: &Rational) -> ObjectiveTensor {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let k = out.offset(i, j, i, j);
                out.coeff[k] += w;
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tensor serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("tensor JSON: {e}")))
    }
}

impl Add for &ObjectiveTensor {
    type Output = ObjectiveTensor;

    fn add(self, rhs: &ObjectiveTensor) -> ObjectiveTensor {
        self.checked_add(rhs).expect("tensor dimensions must agree")
    }
}

impl Mul<&Rational> for &ObjectiveTensor {
    type Output = ObjectiveTensor;

    fn mul(self, rhs: &Rational) -> ObjectiveTensor {
        self.scaled(rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    n: usize,
    coeff: Vec<Vec<Vec<Vec<JsonRational>>>>,
}

impl Serialize for ObjectiveTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.n;
        let mut it = self.coeff.iter();
        let mut next = || JsonRational(it.next().expect("length n^4").clone());
        let coeff = (0..n)
            .map(|_| (0..n).map(|_| (0..n).map(|_| (0..n).map(|_| next()).collect()).collect()).collect())
            .collect();
        TensorJson { n, coeff }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ObjectiveTensor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TensorJson::deserialize(d)?;
        let n = raw.n;
        let shape_err = |depth: usize, len: usize| {
            D::Error::custom(format!("coeff level {depth} has length {len}, expected n = {n}"))
        };
        let mut coeff = Vec::with_capacity(n.pow(4));
        if raw.coeff.len() != n {
            return Err(shape_err(1, raw.coeff.len()));
        }
        for a in raw.coeff {
            if a.len() != n {
                return Err(shape_err(2, a.len()));
            }
            for b in a {
                if b.len() != n {
                    return Err(shape_err(3, b.len()));
                }
                for c in b {
                    if c.len() != n {
                        return Err(shape_err(4, c.len()));
                    }
                    coeff.extend(c.into_iter().map(|r| r.0));
                }
            }
        }
        Ok(ObjectiveTensor { n, coeff })
    }
}

/// The simple tensor `A ⊗ B`, kept unexpanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairObjective {
    a: Matrix,
    b: Matrix,
}

impl PairObjective {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        check_dim(a.n(), b.n())?;
        Ok(PairObjective { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn expand(&self) -> ObjectiveTensor {
        ObjectiveTensor::from_fn(self.n(), |i, j, s, t| self.a.get(i, s) * self.b.get(j, t))
    }

    pub fn value(&self, sigma: &Permutation, pi: &Permutation) -> Result<Rational> {
        fast_pair_value(&self.a, &self.b, sigma, pi)
    }

    /// `Σ_{i,s} A[i][s] · B[σ(i)][σ(s)]`, the value at the diagonal vertex
    /// `P ⊗ P`. Assumes matching dimensions.
    pub(crate) fn diagonal_value(&self, sigma: &Permutation) -> Rational {
        let n = self.n();
        let mut acc = Rational::zero();
        for i in 0..n {
            for s in 0..n {
                let a = self.a.get(i, s);
                if !a.is_zero() {
                    acc += a * self.b.get(sigma.apply(i), sigma.apply(s));
                }
            }
        }
        acc
    }
}

/// The 0/1 permutation matrix with `P[i][σ(i)] = 1`.
pub fn perm_matrix(sigma: &Permutation) -> Matrix {
    Matrix::from_fn(sigma.n(), |i, j| if sigma.apply(i) == j { rational::one() } else { rational::zero() })
}

/// `<A, B> = Σ_{i,j} A[i][j] B[i][j]`.
pub fn matrix_pairing(a: &Matrix, b: &Matrix) -> Result<Rational> {
    check_dim(a.n(), b.n())?;
    Ok(a.entries.iter().zip(&b.entries).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
}

/// Expands `A ⊗ B` into the objective-coefficient convention:
/// `coeff(i, j, s, t) = A[i][s] · B[j][t]`.
pub fn objective_from_pair(a: &Matrix, b: &Matrix) -> Result<ObjectiveTensor> {
    Ok(PairObjective::new(a.clone(), b.clone())?.expand())
}

/// `<W, P ⊗ Q> = Σ_{i,s} coeff(i, σ(i), s, π(s))`.
pub fn pair_value(w: &ObjectiveTensor, sigma: &Permutation, pi: &Permutation) -> Result<Rational> {
    check_dim(w.n(), sigma.n())?;
    check_dim(w.n(), pi.n())?;
    let n = w.n();
    let mut acc = Rational::zero();
    for i in 0..n {
        for s in 0..n {
            acc += w.get(i, sigma.apply(i), s, pi.apply(s));
        }
    }
    Ok(acc)
}

/// `<A ⊗ B, P ⊗ Q>` computed as `<P B Qᵀ, A>` without expanding the tensor.
pub fn fast_pair_value(a: &Matrix, b: &Matrix, sigma: &Permutation, pi: &Permutation) -> Result<Rational> {
    check_dim(a.n(), b.n())?;
    matrix_pairing(&b.permuted(sigma, pi)?, a)
}

/// `I ⊗ I` in the objective-coefficient convention.
pub fn identity_objective(n: usize) -> ObjectiveTensor {
    ObjectiveTensor::from_fn(n, |i, j, s, t| if i == s && j == t { rational::one() } else { rational::zero() })
}

/// Number of positions where `σ` and `π` agree; equals `<I ⊗ I, P ⊗ Q>`.
pub fn agreement_count(sigma: &Permutation, pi: &Permutation) -> Result<usize> {
    check_dim(sigma.n(), pi.n())?;
    Ok(sigma.image().iter().zip(pi.image()).filter(|(a, b)| a == b).count())
}

/// The vertex `P ⊗ Q` as a flat row-major `(i, j, s, t)` vector of length `n⁴`.
pub fn vertex_point(sigma: &Permutation, pi: &Permutation) -> Result<Vec<Rational>> {
    check_dim(sigma.n(), pi.n())?;
    Ok(vertex_ones(sigma, pi)
        .into_iter()
        .map(|b| if b { rational::one() } else { rational::zero() })
        .collect())
}

pub(crate) fn vertex_ones(sigma: &Permutation, pi: &Permutation) -> Vec<bool> {
    let n = sigma.n();
    let mut out = vec![false; n.pow(4)];
    for i in 0..n {
        for s in 0..n {
            out[((i * n + sigma.apply(i)) * n + s) * n + pi.apply(s)] = true;
        }
    }
    out
}
