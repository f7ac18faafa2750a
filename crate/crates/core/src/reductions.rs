//! Executable forms of the polytope statements:
//!
//! * `ψₙ` is the face of `ψₙ,ₙ` cut out by `<I ⊗ I, X> = n`
//!   ([`verify_face`], checked on vertices: the agreement count is `n` exactly
//!   on diagonal pairs and at most `n - 1` elsewhere);
//! * `G` contains a copy of `H` iff `max{<A_G ⊗ A_H, X> : X ∈ ψₙ} = 2m`
//!   ([`decide_subgraph_psi`]);
//! * `max over ψₙ of <W, X>` equals `max over ψₙ,ₙ of <W + w I⊗I, X> - n w`
//!   for `w = 2n² max|W|`, or `w = n²` when `W ≥ 0`
//!   ([`lift_objective`], [`verify_lift`]);
//! * hence `G` contains `H` iff
//!   `max{<A_G ⊗ A_H + n² I⊗I, X> : X ∈ ψₙ,ₙ} = 2m + n³`
//!   ([`decide_subgraph_psinn`]).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use crate::caps::{check_cap, Caps};
use crate::error::{check_dim, Error, Result};
use crate::graphs::{adjacency_matrix, subgraph_iso_oracle, Graph, IsoWitness};
use crate::optimize::{psi_n_max, psi_nn_max, SolveOptions};
use crate::perm::Permutation;
use crate::rational::{self, Rational};
use crate::tensor::{agreement_count, objective_from_pair, ObjectiveTensor, PairObjective};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    pub n: usize,
    pub pairs_checked: u64,
    pub diagonal_pairs: u64,
    pub offdiagonal_pairs: u64,
    /// Largest agreement count over `σ ≠ π`; `None` when `n = 1`.
    pub max_offdiagonal: Option<usize>,
    /// Smallest agreement count over `σ = π`.
    pub min_diagonal: usize,
    pub holds: bool,
}

/// Checks `agreement_count(σ, π) ≤ n - 1` for all `σ ≠ π` and `= n` for
/// `σ = π`, over all `(n!)²` ordered pairs.
pub fn verify_face(n: usize, caps: &Caps) -> Result<FaceReport> {
    check_cap("verify_face", n, caps.face)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut report = FaceReport {
        n,
        pairs_checked: 0,
        diagonal_pairs: 0,
        offdiagonal_pairs: 0,
        max_offdiagonal: None,
        min_diagonal: n,
        holds: true,
    };
    for (a, sigma) in perms.iter().enumerate() {
        for (b, pi) in perms.iter().enumerate() {
            let agree = agreement_count(sigma, pi)?;
            report.pairs_checked += 1;
            if a == b {
                report.diagonal_pairs += 1;
                report.min_diagonal = report.min_diagonal.min(agree);
            } else {
                report.offdiagonal_pairs += 1;
                report.max_offdiagonal = Some(report.max_offdiagonal.map_or(agree, |m| m.max(agree)));
            }
        }
    }
    report.holds = report.min_diagonal == n && report.max_offdiagonal.map_or(true, |m| m < n);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftMode {
    /// `w = 2n² · max|W|`.
    General,
    /// `w = n² · max W` for `W ≥ 0`; this is `n²` whenever the entries are
    /// 0/1, as for `A_G ⊗ A_H`.
    Nonnegative,
}

impl fmt::Display for LiftMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftMode::General => "general",
            LiftMode::Nonnegative => "nonnegative",
        })
    }
}

impl FromStr for LiftMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(LiftMode::General),
            "nonnegative" => Ok(LiftMode::Nonnegative),
            other => Err(Error::parse(format!("unknown lift mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftSpec {
    pub mode: LiftMode,
    #[serde(rename = "W")]
    pub base: ObjectiveTensor,
    #[serde(with = "rational::as_string")]
    pub w: Rational,
    /// `n · w`.
    #[serde(with = "rational::as_string")]
    pub shift: Rational,
    /// `W + w · (I ⊗ I)`.
    pub lifted: ObjectiveTensor,
}

pub fn lift_objective(base: &ObjectiveTensor, mode: LiftMode) -> Result<LiftSpec> {
    let n = base.n();
    let n_sq = rational::int((n * n) as i64);
    let w = match mode {
        LiftMode::General => rational::int(2) * &n_sq * base.max_abs(),
        LiftMode::Nonnegative => {
            if base.min_coeff().is_some_and(|c| c.is_negative()) {
                return Err(Error::invalid("nonnegative lift needs every coefficient >= 0"));
            }
            // every vertex scores in [0, n² max W], so that much separation suffices
            n_sq * base.max_abs()
        }
    };
    lift_with(base, mode, w)
}

/// Lift with an explicitly chosen constant, for probing smaller `w`.
pub fn lift_with(base: &ObjectiveTensor, mode: LiftMode, w: Rational) -> Result<LiftSpec> {
    let shift = rational::int(base.n() as i64) * &w;
    Ok(LiftSpec { mode, base: base.clone(), lifted: base.plus_identity(&w), w, shift })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftCheck {
    pub mode: LiftMode,
    #[serde(with = "rational::as_string")]
    pub w: Rational,
    /// `max{<W, X> : X ∈ ψₙ}`.
    #[serde(with = "rational::as_string")]
    pub left: Rational,
    /// `max{<W + w I⊗I, X> : X ∈ ψₙ,ₙ}`.
    #[serde(with = "rational::as_string")]
    pub lifted_max: Rational,
    /// `lifted_max - n · w`.
    #[serde(with = "rational::as_string")]
    pub right: Rational,
    pub holds: bool,
}

pub fn verify_lift(base: &ObjectiveTensor, mode: LiftMode, opts: &SolveOptions) -> Result<LiftCheck> {
    let spec = lift_objective(base, mode)?;
    check_lift(&spec, opts)
}

pub fn check_lift(spec: &LiftSpec, opts: &SolveOptions) -> Result<LiftCheck> {
    check_cap("verify_lift", spec.base.n(), opts.caps.psi_nn)?;
    let left = psi_n_max(&spec.base, opts)?.value;
    let lifted_max = psi_nn_max(&spec.lifted, opts)?.value;
    let right = &lifted_max - &spec.shift;
    Ok(LiftCheck { mode: spec.mode, w: spec.w.clone(), holds: left == right, left, lifted_max, right })
}

/// Smallest nonnegative integer `w` for which the lift identity holds for
/// this `W`, found by bisection below `⌈2n² max|W|⌉`. Validity is monotone
/// in `w`: raising `w` adds `w` to diagonal vertices and at most
/// `(n - 1) w` to the others.
pub fn min_integer_lift(base: &ObjectiveTensor, opts: &SolveOptions) -> Result<BigInt> {
    let general = lift_objective(base, LiftMode::General)?.w;
    let mut hi = general.ceil().to_integer();
    let mut lo = BigInt::zero();
    let holds = |w: &BigInt| -> Result<bool> {
        let spec = lift_with(base, LiftMode::General, Rational::from_integer(w.clone()))?;
        Ok(check_lift(&spec, opts)?.holds)
    };
    if holds(&lo)? {
        return Ok(lo);
    }
    // invariant: lo fails, hi holds
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) / 2;
        if holds(&mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecisionMethod {
    Psi,
    Psinn,
    Oracle,
}

impl fmt::Display for DecisionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionMethod::Psi => "psi",
            DecisionMethod::Psinn => "psinn",
            DecisionMethod::Oracle => "oracle",
        })
    }
}

/// Answer to "does `G` contain a subgraph isomorphic to `H`?".
///
/// The witness is the vertex map `H → G` (as 1-based images in JSON). For
/// the polytope routes it is the inverse of the optimal vertex `P`, since
/// `<A_G ⊗ A_H, P ⊗ P>` pairs edge `{i, s}` of `G` with `{σ(i), σ(s)}` of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub method: DecisionMethod,
    pub n: usize,
    pub m: usize,
    /// Optimum; the oracle reports `2 · mapped_edges` for a found witness and
    /// nothing otherwise.
    #[serde(serialize_with = "optional_rational")]
    pub value: Option<Rational>,
    #[serde(with = "rational::as_string")]
    pub threshold: Rational,
    pub is_yes: bool,
    #[serde(serialize_with = "optional_one_based")]
    pub witness: Option<Permutation>,
}

fn optional_rational<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(rational::format_rational).serialize(s)
}

fn optional_one_based<S: Serializer>(v: &Option<Permutation>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(Permutation::one_based).serialize(s)
}

fn twice_edges(h: &Graph) -> Rational {
    rational::int(2 * h.edge_count() as i64)
}

/// Witnesses must pass the structural check, not just the value test.
fn checked_witness(g: &Graph, h: &Graph, sigma: Permutation) -> Result<Permutation> {
    if IsoWitness::evaluate(&sigma, g, h)?.is_embedding(h) {
        Ok(sigma)
    } else {
        Err(Error::invalid(format!("internal: witness {sigma} does not embed H into G")))
    }
}

pub fn decide_subgraph_psi(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Decision> {
    check_dim(g.n(), h.n())?;
    let pair = PairObjective::new(adjacency_matrix(g), adjacency_matrix(h))?;
    let opt = psi_n_max(&pair, opts)?;
    let threshold = twice_edges(h);
    let is_yes = opt.value == threshold;
    let witness = if is_yes { Some(checked_witness(g, h, opt.witness.sigma().inverse())?) } else { None };
    Ok(Decision { method: DecisionMethod::Psi, n: g.n(), m: h.edge_count(), value: Some(opt.value), threshold, is_yes, witness })
}

pub fn decide_subgraph_psinn(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Decision> {
    check_dim(g.n(), h.n())?;
    let n = g.n();
    let n_sq = rational::int((n * n) as i64);
    let objective = objective_from_pair(&adjacency_matrix(g), &adjacency_matrix(h))?.plus_identity(&n_sq);
    let opt = psi_nn_max(&objective, opts)?;
    let threshold = twice_edges(h) + rational::int(n.pow(3) as i64);
    let is_yes = opt.value == threshold;
    let witness = match (is_yes, opt.witness.sigma() == opt.witness.pi()) {
        (true, true) => Some(checked_witness(g, h, opt.witness.sigma().inverse())?),
        (true, false) => return Err(Error::invalid("internal: optimum at threshold on an off-diagonal vertex")),
        (false, _) => None,
    };
    Ok(Decision { method: DecisionMethod::Psinn, n, m: h.edge_count(), value: Some(opt.value), threshold, is_yes, witness })
}

pub fn decide_subgraph_oracle(g: &Graph, h: &Graph) -> Result<Decision> {
    let found = subgraph_iso_oracle(g, h)?;
    Ok(Decision {
        method: DecisionMethod::Oracle,
        n: g.n(),
        m: h.edge_count(),
        value: found.as_ref().map(|w| rational::int(2 * w.mapped_edges as i64)),
        threshold: twice_edges(h),
        is_yes: found.is_some(),
        witness: found.map(|w| w.sigma),
    })
}

pub fn decide(method: DecisionMethod, g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Decision> {
    match method {
        DecisionMethod::Psi => decide_subgraph_psi(g, h, opts),
        DecisionMethod::Psinn => decide_subgraph_psinn(g, h, opts),
        DecisionMethod::Oracle => decide_subgraph_oracle(g, h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{builtin_graph, GraphKind};
    use crate::optimize::Method;
    use crate::rational::int;
    use crate::tensor::identity_objective;

    fn k3() -> Graph {
        builtin_graph(GraphKind::Complete, 3).unwrap()
    }

    fn p3() -> Graph {
        builtin_graph(GraphKind::Path, 3).unwrap()
    }

    #[test]
    fn face_examples() {
        let caps = Caps::default();
        let r = verify_face(2, &caps).unwrap();
        assert_eq!((r.max_offdiagonal, r.offdiagonal_pairs, r.holds), (Some(0), 2, true));
        let r = verify_face(3, &caps).unwrap();
        assert_eq!((r.max_offdiagonal, r.offdiagonal_pairs, r.holds), (Some(1), 30, true));
        let r = verify_face(5, &caps).unwrap();
        assert_eq!((r.max_offdiagonal, r.pairs_checked, r.holds), (Some(3), 14_400, true));
        let r = verify_face(1, &caps).unwrap();
        assert_eq!((r.max_offdiagonal, r.holds), (None, true));
        assert!(verify_face(7, &caps).is_err());
    }

    #[test]
    fn psi_decisions() {
        let opts = SolveOptions::default();
        let d = decide_subgraph_psi(&k3(), &p3(), &opts).unwrap();
        assert_eq!((d.value.clone(), d.threshold.clone(), d.is_yes), (Some(int(4)), int(4), true));
        assert!(d.witness.is_some());
        let d = decide_subgraph_psi(&p3(), &k3(), &opts).unwrap();
        assert_eq!((d.value, d.threshold, d.is_yes, d.witness), (Some(int(4)), int(6), false, None));
        let d = decide_subgraph_psi(&p3(), &Graph::empty(3), &opts).unwrap();
        assert_eq!((d.value, d.threshold, d.is_yes), (Some(int(0)), int(0), true));
        assert!(decide_subgraph_psi(&p3(), &Graph::empty(2), &opts).is_err());
    }

    #[test]
    fn psi_witness_is_h_to_g_map() {
        // star K1,3 centred at 3 inside a graph whose only degree-3 vertex is 0
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let h = Graph::new(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
        let d = decide_subgraph_psi(&g, &h, &SolveOptions::default()).unwrap();
        assert!(d.is_yes);
        assert_eq!(d.witness.unwrap().apply(3), 0);
    }

    #[test]
    fn psinn_decisions() {
        let opts = SolveOptions::default();
        let d = decide_subgraph_psinn(&k3(), &p3(), &opts).unwrap();
        assert_eq!((d.value.clone(), d.threshold.clone(), d.is_yes), (Some(int(31)), int(31), true));
        let d = decide_subgraph_psinn(&p3(), &k3(), &opts).unwrap();
        assert_eq!((d.value, d.threshold, d.is_yes), (Some(int(31)), int(33), false));
        let d = decide_subgraph_psinn(&Graph::empty(2), &Graph::empty(2), &opts).unwrap();
        assert_eq!((d.value, d.threshold, d.is_yes), (Some(int(8)), int(8), true));
    }

    #[test]
    fn oracle_decisions() {
        let d = decide_subgraph_oracle(&k3(), &p3()).unwrap();
        assert_eq!((d.value, d.is_yes), (Some(int(4)), true));
        let d = decide_subgraph_oracle(&p3(), &k3()).unwrap();
        assert_eq!((d.value, d.is_yes), (None, false));
    }

    #[test]
    fn lift_examples() {
        let spec = lift_objective(&ObjectiveTensor::zeros(3), LiftMode::General).unwrap();
        assert_eq!((spec.w.clone(), spec.lifted), (int(0), ObjectiveTensor::zeros(3)));
        let spec = lift_objective(&identity_objective(3), LiftMode::General).unwrap();
        assert_eq!((spec.w, spec.shift), (int(18), int(54)));
        let w = objective_from_pair(&adjacency_matrix(&k3()), &adjacency_matrix(&p3())).unwrap();
        let spec = lift_objective(&w, LiftMode::Nonnegative).unwrap();
        assert_eq!((spec.w, spec.shift), (int(9), int(27)));
        let negative = identity_objective(2).scaled(&int(-1));
        assert!(lift_objective(&negative, LiftMode::Nonnegative).is_err());
        let spec = lift_objective(&identity_objective(2).scaled(&int(3)), LiftMode::Nonnegative).unwrap();
        assert_eq!(spec.w, int(12));
    }

    #[test]
    fn unit_constant_is_too_small_for_large_entries() {
        // (id, swap) scores 9 but the diagonal only gains n · n² = 8
        let w = ObjectiveTensor::from_fn(2, |i, j, s, t| if (i, j, s, t) == (0, 0, 0, 1) { int(9) } else { int(0) });
        let opts = SolveOptions::default();
        let unit = check_lift(&lift_with(&w, LiftMode::Nonnegative, int(4)).unwrap(), &opts).unwrap();
        assert_eq!((unit.left, unit.right, unit.holds), (int(0), int(1), false));
        let scaled = verify_lift(&w, LiftMode::Nonnegative, &opts).unwrap();
        assert_eq!((scaled.w, scaled.holds), (int(36), true));
    }

    #[test]
    fn verify_lift_examples() {
        let opts = SolveOptions::default();
        let c = verify_lift(&ObjectiveTensor::zeros(3), LiftMode::General, &opts).unwrap();
        assert_eq!((c.left.clone(), c.right.clone(), c.holds), (int(0), int(0), true));
        let w = objective_from_pair(&adjacency_matrix(&k3()), &adjacency_matrix(&p3())).unwrap();
        let c = verify_lift(&w, LiftMode::Nonnegative, &opts).unwrap();
        assert_eq!((c.left, c.lifted_max, c.right, c.holds), (int(4), int(31), int(4), true));
        let c = verify_lift(&w, LiftMode::General, &SolveOptions::with_method(Method::Exhaustive)).unwrap();
        assert!(c.holds);
    }

    #[test]
    fn min_lift_is_tight_for_its_instance() {
        let opts = SolveOptions::default();
        assert_eq!(min_integer_lift(&ObjectiveTensor::zeros(3), &opts).unwrap(), BigInt::zero());
        // off-diagonal vertex (id, swap) scores 5, diagonal vertices score 0 + 2w, so w = 3
        let w = ObjectiveTensor::from_fn(2, |i, j, s, t| if i == 0 && j == 0 && s == 0 && t == 1 { int(5) } else { int(0) });
        let found = min_integer_lift(&w, &opts).unwrap();
        assert_eq!(found, BigInt::from(3));
    }
}
