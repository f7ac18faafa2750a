//! Enumeration caps. Every exhaustive routine refuses dimensions above its cap
//! instead of running for hours.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// `psi_n_max`, exhaustive method (`n!` vertices).
    pub psi_exhaustive: usize,
    /// `psi_n_max`, branch and bound.
    pub psi_branch_and_bound: usize,
    /// `psi_nn_max` (`n!` linear assignments).
    pub psi_nn: usize,
    /// Face verification over `(n!)²` ordered pairs.
    pub face: usize,
    /// Vertex clouds of `ψₙ` and `φₙ` (`n!` points).
    pub cloud: usize,
    /// All-pairs adjacency LPs on a cloud.
    pub adjacency: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { psi_exhaustive: 8, psi_branch_and_bound: 10, psi_nn: 6, face: 6, cloud: 5, adjacency: 4 }
    }
}

impl Caps {
    /// The same ceiling for every routine.
    pub fn uniform(max_n: usize) -> Self {
        Caps {
            psi_exhaustive: max_n,
            psi_branch_and_bound: max_n,
            psi_nn: max_n,
            face: max_n,
            cloud: max_n,
            adjacency: max_n,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
