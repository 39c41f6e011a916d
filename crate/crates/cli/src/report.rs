use std::fmt::Write;
use std::time::{Duration, Instant};

use almost_lie::cohomology::BettiTable;
use almost_lie::AlgebroidSpec;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SpecSummary {
    pub base_dim: usize,
    pub rank: usize,
    pub kernel_rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiatorSummary {
    pub zero: bool,
    /// `J(e_a, e_b, e_c)` for `a < b < c`, in the kernel frame, when nonzero.
    pub components: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiLine {
    pub degree: usize,
    pub dimension: usize,
    pub kernel: usize,
    pub rank: usize,
    pub betti: usize,
}

/// Everything a command found out. Wall-clock timings are kept separately so
/// that the rendered report depends only on the input file and flags.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub spec: SpecSummary,
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobiator: Option<JacobiatorSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<BettiLine>>,
    #[serde(skip)]
    betti_table: Option<BettiTable>,
    #[serde(skip)]
    timings: Vec<(String, Duration)>,
}

impl RunReport {
    pub fn new(spec: &AlgebroidSpec) -> Self {
        RunReport {
            spec: SpecSummary { base_dim: spec.base_dim(), rank: spec.rank(), kernel_rank: spec.kernel_rank() },
            checks: Vec::new(),
            jacobiator: None,
            betti: None,
            betti_table: None,
            timings: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(CheckLine { name: name.to_string(), status, detail: detail.into() });
    }

    /// Runs `f`, recording its wall-clock time under `phase`.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((phase.to_string(), start.elapsed()));
        out
    }

    pub fn set_betti(&mut self, table: BettiTable) {
        self.betti = Some(
            table
                .rows()
                .iter()
                .map(|r| BettiLine {
                    degree: r.degree,
                    dimension: r.dimension,
                    kernel: r.kernel,
                    rank: r.incoming_rank,
                    betti: r.betti,
                })
                .collect(),
        );
        self.betti_table = Some(table);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = self.spec;
        let _ = writeln!(out, "spec: base_dim {}, rank {}, kernel_rank {}", s.base_dim, s.rank, s.kernel_rank);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(out, "{:width$}  {}", c.name, c.status.label());
            if c.detail.is_empty() {
                out.push('\n');
            } else {
                let _ = writeln!(out, "  {}", c.detail);
            }
        }
        if let Some(j) = &self.jacobiator {
            if j.zero {
                out.push_str("jacobiator: zero\n");
            } else {
                let _ = writeln!(out, "jacobiator: nonzero on {} frame triple(s)", j.components.len());
                for c in &j.components {
                    let _ = writeln!(out, "  {c}");
                }
            }
        }
        if let Some(t) = &self.betti_table {
            out.push_str("betti table:\n");
            out.push_str(&t.to_string());
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    pub fn render_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = serde_json::Value::Bool(self.passed());
        serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
    }

    /// The "degree kernel rank betti" lines, when a Betti table was computed.
    pub fn betti_lines(&self) -> Option<String> {
        self.betti_table.as_ref().map(BettiTable::to_lines)
    }

    pub fn render_timings(&self) -> String {
        self.timings.iter().map(|(p, d)| format!("{p}: {:.3} ms\n", d.as_secs_f64() * 1e3)).collect()
    }
}
