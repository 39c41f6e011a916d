mod params;
mod recipe;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use almost_lie::cochain::{check_dj_zero, q_coordinate_check};
use almost_lie::cohomology::betti_table;
use almost_lie::random::{random_cochains, rng_from_seed};
use almost_lie::{AlgebroidSpec, CochainCalculus, CochainShape};
use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use report::{JacobiatorSummary, RunReport, Status};

/// Exact checks and cohomology for almost Lie algebroids.
#[derive(Parser, Debug)]
#[command(name = "almost-lie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the axiom, Jacobiator, DJ = 0, coordinate and d^2 = 0 checks on a spec file.
    Check {
        path: PathBuf,
        /// Seed for the random cochains of the d^2 = 0 spot check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Weight cutoff for the coordinate cross-check.
        #[arg(long, default_value_t = 3)]
        cutoff: usize,
        /// Number of random cochains (degree at most 6) for d^2 = 0.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Betti numbers of the (constant coefficient) complex of a spec file.
    Cohomology {
        path: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        /// Print only the "degree kernel rank betti" lines.
        #[arg(long)]
        lines: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write a spec file for one of the built-in families.
    Recipe {
        /// tangent, product, b-twist, twisted-poisson, twisted-action or random-algebra
        name: String,
        #[arg(long)]
        base_dim: Option<usize>,
        /// Dimension of the Lie algebra or of the random algebra.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter file with LIE, ANCHOR, TWIST, KERNEL_FRAME, KERNEL_PROJECTION, PI, H or B blocks.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    /// Emit the report as JSON.
    #[arg(long)]
    structured: bool,
    /// Print per-phase wall-clock times to standard error.
    #[arg(long)]
    timings: bool,
}

fn load(path: &Path) -> Result<AlgebroidSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    AlgebroidSpec::parse_spec(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run_check(spec: &AlgebroidSpec, seed: u64, cutoff: usize, samples: usize, report: &mut RunReport) {
    let axioms = report.timed("axioms", || spec.check_axioms());
    for c in &axioms.checks {
        let (status, detail) = match &c.outcome {
            almost_lie::algebroid::Outcome::Pass => (Status::Pass, String::new()),
            almost_lie::algebroid::Outcome::ByConstruction => (Status::Pass, "by construction".to_string()),
            almost_lie::algebroid::Outcome::Fail(msg) => (Status::Fail, msg.clone()),
        };
        report.check(&format!("axiom {}", c.axiom.name()), status, detail);
    }
    let later = ["jacobiator", "dj-zero", "coordinate-form", "d-squared"];
    if !axioms.passed() {
        for name in later {
            report.check(name, Status::Skip, "axioms failed");
        }
        return;
    }

    let jacobiator = match report.timed("jacobiator", || spec.jacobiator_tensor()) {
        Ok(j) => j,
        Err(e) => {
            report.check("jacobiator", Status::Fail, e.to_string());
            for name in &later[1..] {
                report.check(name, Status::Skip, "jacobiator failed");
            }
            return;
        }
    };
    report.check("jacobiator", Status::Pass, "kernel valued");
    report.jacobiator = Some(JacobiatorSummary {
        zero: jacobiator.is_zero(),
        components: jacobiator
            .nonzero()
            .map(|(abc, v)| {
                let shown: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                format!("J(e{}, e{}, e{}) = ({})", abc[0] + 1, abc[1] + 1, abc[2] + 1, shown.join(", "))
            })
            .collect(),
    });

    match report.timed("dj-zero", || check_dj_zero(spec)) {
        Ok(r) if r.passed() => report.check("dj-zero", Status::Pass, format!("{} frame 4-tuples", r.tuples_checked)),
        Ok(r) => report.check("dj-zero", Status::Fail, r.to_string()),
        Err(e) => report.check("dj-zero", Status::Fail, e.to_string()),
    }

    let calc = match CochainCalculus::new(spec) {
        Ok(c) => c,
        Err(e) => {
            report.check("coordinate-form", Status::Fail, e.to_string());
            report.check("d-squared", Status::Skip, "no cochain calculus");
            return;
        }
    };
    match report.timed("coordinate-form", || q_coordinate_check(&calc, cutoff)) {
        Ok(r) if r.passed() => report.check(
            "coordinate-form",
            Status::Pass,
            format!("{} generators, {} monomials up to weight {cutoff}", r.generators_checked, r.monomials_checked),
        ),
        Ok(r) => report.check("coordinate-form", Status::Fail, r.to_string()),
        Err(e) => report.check("coordinate-form", Status::Fail, e.to_string()),
    }

    let outcome = report.timed("d-squared", || {
        let shape = CochainShape::of(spec);
        let cochains = random_cochains(&mut rng_from_seed(seed), shape, 6, samples);
        for gamma in &cochains {
            match calc.d_squared(gamma) {
                Ok(v) if v.is_zero() => {}
                Ok(v) => return Err(format!("d^2({gamma}) = {v}")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(cochains.len())
    });
    match outcome {
        Ok(n) => report.check("d-squared", Status::Pass, format!("{n} random cochains, seed {seed}")),
        Err(msg) => report.check("d-squared", Status::Fail, msg),
    }
}

fn emit(report: &RunReport, output: &OutputArgs) {
    if output.structured {
        print!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    if output.timings {
        eprint!("{}", report.render_timings());
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check { path, seed, cutoff, samples, output } => {
            let spec = load(&path)?;
            let mut report = RunReport::new(&spec);
            run_check(&spec, seed, cutoff, samples, &mut report);
            emit(&report, &output);
            Ok(report.passed())
        }
        Command::Cohomology { path, max_degree, lines, output } => {
            let spec = load(&path)?;
            let mut report = RunReport::new(&spec);
            match report.timed("cohomology", || betti_table(&spec, max_degree)) {
                Ok(table) => {
                    report.check("composite-zero", Status::Pass, format!("d o d = 0 on degrees 0..{max_degree}"));
                    report.set_betti(table);
                }
                Err(e) => report.check("cohomology", Status::Fail, e.to_string()),
            }
            if lines && !output.structured {
                print!("{}", report.betti_lines().unwrap_or_default());
                if output.timings {
                    eprint!("{}", report.render_timings());
                }
            } else {
                emit(&report, &output);
            }
            Ok(report.passed())
        }
        Command::Recipe { name, base_dim, dim, seed, params, output } => {
            let params = match params {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    Some(params::Params::parse(&text).with_context(|| format!("parsing {}", p.display()))?)
                }
                None => None,
            };
            let args = recipe::RecipeArgs { base_dim, dim, seed, params };
            let spec = recipe::build(&name, &args).with_context(|| format!("recipe {name}"))?;
            let text = spec.to_spec_text();
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
