use std::fs;
use std::path::Path;

use serde::Serialize;

use isopoly_core::graphs::{adjacency_matrix, pad_graph, parse_edge_list, parse_graph6};
use isopoly_core::optimize::{psi_n_max, psi_nn_max};
use isopoly_core::polytope::{compare_invariants, graph_complete, phi_vertices};
use isopoly_core::reductions::{decide, min_integer_lift, verify_face, verify_lift, DecisionMethod, FaceReport, LiftMode};
use isopoly_core::tensor::{identity_objective, objective_from_pair};
use isopoly_core::{sample, Graph, ObjectiveTensor};

use crate::config::{
    CliError, Command, DecideArgs, DecideMethod, GraphFormat, OptimizeArgs, PhiArgs, Polytope, RunConfig,
    TensorArgs, TensorKind, VerifyArgs,
};
use crate::output::{emit, Agreement, TextLine};

type Lines = Result<Vec<String>, CliError>;

pub fn run(config: &RunConfig) -> Lines {
    match &config.command {
        Command::Decide(args) => cmd_decide(config, args),
        Command::Verify(args) => cmd_verify(config, args),
        Command::Optimize(args) => cmd_optimize(config, args),
        Command::Phi(args) => cmd_phi(config, args),
        Command::Tensor(args) => cmd_tensor(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    let format = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => GraphFormat::G6,
            Some("el") => GraphFormat::El,
            _ => {
                return Err(CliError::Input(format!(
                    "{}: cannot infer graph format from extension; pass --graph-format",
                    path.display()
                )))
            }
        },
    };
    let text = read_file(path)?;
    let parsed = match format {
        GraphFormat::G6 => parse_graph6(&text),
        GraphFormat::El => parse_edge_list(&text),
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Loads `G` and `H`; with `pad`, `H` gains isolated vertices up to `|V(G)|`.
fn load_pair(g: &Path, h: &Path, format: Option<GraphFormat>, pad: bool) -> Result<(Graph, Graph), CliError> {
    let g = load_graph(g, format)?;
    let mut h = load_graph(h, format)?;
    if g.n() != h.n() {
        if !pad {
            return Err(CliError::Input(format!(
                "G has {} vertices and H has {}; pass --pad to add isolated vertices to H",
                g.n(),
                h.n()
            )));
        }
        if h.n() > g.n() {
            return Err(CliError::Input(format!("H has more vertices ({}) than G ({})", h.n(), g.n())));
        }
        h = pad_graph(&h, g.n())?;
    }
    Ok((g, h))
}

fn cmd_decide(config: &RunConfig, args: &DecideArgs) -> Lines {
    let (g, h) = load_pair(&args.g, &args.h, args.graph_format, args.pad)?;
    let opts = config.solve_options(args.solver);
    let methods: &[DecisionMethod] = match args.method {
        DecideMethod::Psi => &[DecisionMethod::Psi],
        DecideMethod::Psinn => &[DecisionMethod::Psinn],
        DecideMethod::Oracle => &[DecisionMethod::Oracle],
        DecideMethod::All => &[DecisionMethod::Psi, DecisionMethod::Psinn, DecisionMethod::Oracle],
    };
    let decisions = methods.iter().map(|&m| decide(m, &g, &h, &opts)).collect::<Result<Vec<_>, _>>()?;
    let mut lines: Vec<String> = decisions.iter().map(|d| emit(config.format, d)).collect();
    if decisions.len() > 1 {
        let first = decisions[0].is_yes;
        let agreement = Agreement { agreement: decisions.iter().all(|d| d.is_yes == first), is_yes: first };
        lines.push(emit(config.format, &agreement));
    }
    Ok(lines)
}

#[derive(Debug, Serialize)]
struct FaceVerification {
    theorem: u8,
    #[serde(flatten)]
    report: FaceReport,
}

impl TextLine for FaceVerification {
    fn text(&self) -> String {
        self.report.text()
    }
}

#[derive(Debug, Serialize)]
pub struct LiftViolation {
    pub trial: usize,
    pub w: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Serialize)]
pub struct LiftBatch {
    pub mode: LiftMode,
    pub entries: String,
    pub checked: usize,
    pub holds: usize,
    pub violations: Vec<LiftViolation>,
}

#[derive(Debug, Serialize)]
pub struct LiftVerification {
    pub theorem: u8,
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub general: LiftBatch,
    pub nonnegative: LiftBatch,
    /// Smallest working integer `w` per signed trial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe_w: Option<Vec<String>>,
    pub all_hold: bool,
}

fn cmd_verify(config: &RunConfig, args: &VerifyArgs) -> Lines {
    if args.theorem == "1" {
        let report = verify_face(args.n, &config.caps)?;
        return Ok(vec![emit(config.format, &FaceVerification { theorem: 1, report })]);
    }
    if args.n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    if args.entry_bound < 0 {
        return Err(CliError::Input("--entry-bound must be nonnegative".into()));
    }
    let opts = config.solve_options(args.solver);
    let bound = args.entry_bound;
    let mut rng = sample::rng(args.seed);
    let mut general = LiftBatch {
        mode: LiftMode::General,
        entries: format!("[{}, {}]", -bound, bound),
        checked: 0,
        holds: 0,
        violations: Vec::new(),
    };
    let mut nonnegative =
        LiftBatch { mode: LiftMode::Nonnegative, entries: "[0, 1]".into(), checked: 0, holds: 0, violations: Vec::new() };
    let mut probe = args.probe_w.then(Vec::new);
    // one stream: each trial draws a signed tensor, then a 0/1 tensor
    for trial in 0..args.trials {
        let signed = sample::integer_tensor(&mut rng, args.n, -bound, bound);
        let unit = sample::integer_tensor(&mut rng, args.n, 0, 1);
        record(&mut general, trial, verify_lift(&signed, LiftMode::General, &opts)?);
        record(&mut nonnegative, trial, verify_lift(&unit, LiftMode::Nonnegative, &opts)?);
        if let Some(probe) = probe.as_mut() {
            probe.push(min_integer_lift(&signed, &opts)?.to_string());
        }
    }
    let all_hold = general.violations.is_empty() && nonnegative.violations.is_empty();
    let report = LiftVerification {
        theorem: 3,
        n: args.n,
        seed: args.seed,
        trials: args.trials,
        general,
        nonnegative,
        probe_w: probe,
        all_hold,
    };
    Ok(vec![emit(config.format, &report)])
}

fn record(batch: &mut LiftBatch, trial: usize, check: isopoly_core::reductions::LiftCheck) {
    batch.checked += 1;
    if check.holds {
        batch.holds += 1;
    } else {
        batch.violations.push(LiftViolation {
            trial,
            w: check.w.to_string(),
            left: check.left.to_string(),
            right: check.right.to_string(),
        });
    }
}

fn cmd_optimize(config: &RunConfig, args: &OptimizeArgs) -> Lines {
    let text = read_file(&args.tensor)?;
    let w = ObjectiveTensor::from_json(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.tensor.display())))?;
    let opts = config.solve_options(args.solver);
    let result = match args.polytope {
        Polytope::Psi => psi_n_max(&w, &opts)?,
        Polytope::Psinn => psi_nn_max(&w, &opts)?,
    };
    Ok(vec![emit(config.format, &result)])
}

fn cmd_phi(config: &RunConfig, args: &PhiArgs) -> Lines {
    if !args.adjacency && !args.compare {
        return Err(CliError::Input("phi needs --adjacency and/or --compare".into()));
    }
    let mut lines = Vec::new();
    if args.adjacency {
        if args.n > config.caps.adjacency {
            return Err(CliError::Cap(format!(
                "phi --adjacency: n = {} exceeds the cap {}",
                args.n, config.caps.adjacency
            )));
        }
        let cloud = phi_vertices(args.n, &config.caps)?;
        let report = graph_complete(&cloud, &config.caps, config.threads)?;
        lines.push(emit(config.format, &crate::output::PhiAdjacency { n: args.n, report }));
    }
    if args.compare {
        let report = compare_invariants(args.n, &config.caps, config.threads)?;
        lines.push(emit(config.format, &report));
    }
    Ok(lines)
}

fn cmd_tensor(args: &TensorArgs) -> Lines {
    let need_n = || args.n.ok_or_else(|| CliError::Input("--n is required for this tensor kind".into()));
    let tensor = match args.kind {
        TensorKind::Zero => ObjectiveTensor::zeros(need_n()?),
        TensorKind::Identity => identity_objective(need_n()?),
        TensorKind::Random => {
            if args.entry_bound < 0 {
                return Err(CliError::Input("--entry-bound must be nonnegative".into()));
            }
            let mut rng = sample::rng(args.seed);
            sample::integer_tensor(&mut rng, need_n()?, -args.entry_bound, args.entry_bound)
        }
        TensorKind::Pair => {
            let (Some(g), Some(h)) = (&args.g, &args.h) else {
                return Err(CliError::Input("--kind pair needs --g and --h".into()));
            };
            let (g, h) = load_pair(g, h, args.graph_format, args.pad)?;
            objective_from_pair(&adjacency_matrix(&g), &adjacency_matrix(&h))?
        }
    };
    Ok(vec![tensor.to_json()])
}

