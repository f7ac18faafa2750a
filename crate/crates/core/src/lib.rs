//! Exact computation with the graph-isomorphism permutation polytopes
//! `ψₙ = conv{P ⊗ P}`, `ψₙ,ₙ = conv{P ⊗ Q}` and the edge-permutation
//! polytope `φₙ`.
//!
//! All arithmetic is over exact rationals. Optimization over `ψₙ` and `ψₙ,ₙ`
//! works on their vertex sets, since a linear functional attains its maximum
//! over a polytope at a vertex.

pub mod caps;
pub mod error;
pub mod graphs;
pub mod optimize;
pub mod perm;
pub mod polytope;
pub mod rational;
pub mod reductions;
pub mod sample;
pub mod tensor;

pub use error::{Error, Result};
pub use caps::Caps;
pub use graphs::{Graph, GraphKind, IsoWitness};
pub use optimize::{Method, OptResult, SolveOptions, Witness};
pub use perm::Permutation;
pub use rational::Rational;
pub use tensor::{Matrix, ObjectiveTensor, PairObjective};
