use serde::Serialize;

use isopoly_core::polytope::{AdjacencyReport, CloudInvariants, InvariantReport};
use isopoly_core::reductions::{Decision, FaceReport};
use isopoly_core::{OptResult, Witness};

use crate::commands::{LiftBatch, LiftVerification};
use crate::config::Format;

/// Human-readable rendering for `--format text`.
pub trait TextLine {
    fn text(&self) -> String;
}

pub fn emit<T: Serialize + TextLine>(format: Format, value: &T) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("report types serialize infallibly"),
        Format::Text => value.text(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

impl TextLine for Decision {
    fn text(&self) -> String {
        let value = self.value.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        let mut line = format!(
            "{}: {} (value {value}, threshold {}, n {}, m {})",
            self.method,
            yes_no(self.is_yes),
            self.threshold,
            self.n,
            self.m
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" witness {w}"));
        }
        line
    }
}

#[derive(Debug, Serialize)]
pub struct Agreement {
    pub agreement: bool,
    pub is_yes: bool,
}

impl TextLine for Agreement {
    fn text(&self) -> String {
        if self.agreement {
            format!("agreement: all methods answer {}", yes_no(self.is_yes))
        } else {
            "agreement: METHODS DISAGREE".to_string()
        }
    }
}

impl TextLine for FaceReport {
    fn text(&self) -> String {
        let max_off = self.max_offdiagonal.map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "face n={}: {} pairs, {} diagonal (min agreement {}), {} off-diagonal (max agreement {max_off}): {}",
            self.n,
            self.pairs_checked,
            self.diagonal_pairs,
            self.min_diagonal,
            self.offdiagonal_pairs,
            if self.holds { "holds" } else { "FAILS" }
        )
    }
}

impl TextLine for OptResult {
    fn text(&self) -> String {
        let at = match &self.witness {
            Witness::Diagonal(p) => format!("{p}"),
            Witness::Pair(p, q) => format!("{p} x {q}"),
        };
        format!("max {} at {at} ({} nodes, {})", self.value, self.nodes_explored, self.method)
    }
}

fn batch_text(b: &LiftBatch) -> String {
    let mut line = format!("  {} entries {}: {}/{} hold", b.mode, b.entries, b.holds, b.checked);
    for v in &b.violations {
        line.push_str(&format!("\n    trial {} w {}: left {} != right {}", v.trial, v.w, v.left, v.right));
    }
    line
}

impl TextLine for LiftVerification {
    fn text(&self) -> String {
        let mut out = format!("lift n={} seed={} trials={}\n", self.n, self.seed, self.trials);
        out.push_str(&batch_text(&self.general));
        out.push('\n');
        out.push_str(&batch_text(&self.nonnegative));
        if let Some(probe) = &self.probe_w {
            out.push_str(&format!("\n  smallest integer w per signed trial: {}", probe.join(" ")));
        }
        out.push_str(if self.all_hold { "\n  all hold" } else { "\n  VIOLATIONS FOUND" });
        out
    }
}

#[derive(Debug, Serialize)]
pub struct PhiAdjacency {
    pub n: usize,
    #[serde(flatten)]
    pub report: AdjacencyReport,
}

impl TextLine for PhiAdjacency {
    fn text(&self) -> String {
        let r = &self.report;
        let mut line = format!(
            "phi_{}: {} vertices, {} pairs tested, {} non-edges: {}",
            self.n,
            r.vertex_count,
            r.pairs_tested,
            r.non_edges.len(),
            if r.is_complete_graph { "complete graph" } else { "not complete" }
        );
        for (u, v) in &r.non_edges {
            line.push_str(&format!("\n  non-edge {} {}", u + 1, v + 1));
        }
        line
    }
}

fn cloud_text(name: &str, c: &CloudInvariants) -> String {
    let spectrum: Vec<String> =
        c.distance_spectrum.iter().map(|e| format!("{}x{}", e.squared_distance, e.count)).collect();
    let graph = match &c.vertex_graph {
        Some(g) => format!("{} of {} pairs adjacent{}", g.edges, g.pairs_tested, if g.complete { " (complete)" } else { "" }),
        None => "not computed".to_string(),
    };
    format!(
        "  {name}: {} vertices in R^{}, affine dimension {}, squared distances {}, vertex graph {graph}",
        c.vertex_count,
        c.ambient_dimension,
        c.affine_dimension,
        spectrum.join(" ")
    )
}

impl TextLine for InvariantReport {
    fn text(&self) -> String {
        let mut out = format!("invariants n={}{}\n", self.n, if self.degenerate { " (phi degenerate)" } else { "" });
        out.push_str(&cloud_text("psi", &self.psi));
        out.push('\n');
        out.push_str(&cloud_text("phi", &self.phi));
        out.push_str(&format!(
            "\n  equal vertex counts {}, equal affine dimensions {}, same spectrum multiplicities {}",
            self.equal_vertex_counts, self.equal_affine_dimensions, self.same_spectrum_multiplicities
        ));
        for l in &self.labels {
            out.push_str(&format!("\n  {}: constrains {}", l.invariant, l.constrains));
        }
        out
    }
}
