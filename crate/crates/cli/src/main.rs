//! `cheeger`: solve domain files, run invariant suites, render figures.
//!
//! Exit codes: 0 success, 1 input error, 2 property violation or failed check.

mod report;
mod solve;
mod spec;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cheeger_core::solver::SolveOptions;
use cheeger_core::verify::suites::{run_suite, SUITES};
use cheeger_core::Error;

use crate::report::ResultReport;
use crate::solve::Solved;
use crate::spec::DomainSpec;

#[derive(Parser)]
#[command(name = "cheeger", version, about = "Cheeger constants of planar strips and convex bodies")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a domain file and print a JSON report.
    Solve {
        file: PathBuf,
        /// Also write a figure of the domain, inner set and Cheeger set.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Accept strips shorter than 9π/2 half-widths.
        #[arg(long)]
        allow_short_strip: bool,
    },
    /// Run a named invariant suite.
    Verify {
        /// One of steiner, bounds, asymptotic, gallery, continuity, oracle.
        suite: String,
    },
    /// Write an SVG figure of a domain file.
    Render {
        file: PathBuf,
        out: PathBuf,
        #[arg(long)]
        show_inner: bool,
        #[arg(long)]
        show_cheeger: bool,
        #[arg(long)]
        show_balls: bool,
        #[arg(long)]
        allow_short_strip: bool,
    },
}

enum Failure {
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PropertyViolation { .. } => Failure::Violation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn options(allow_short_strip: bool) -> Result<SolveOptions, Failure> {
    let mut o = SolveOptions { allow_short_strip, ..SolveOptions::default() };
    if let Ok(v) = std::env::var("CHEEGER_TOL") {
        match v.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => o.tol = t,
            _ => return Err(Failure::Input(format!("CHEEGER_TOL: '{v}' is not a positive number"))),
        }
    }
    Ok(o)
}

fn load(file: &Path, allow_short_strip: bool) -> Result<Solved, Failure> {
    let text =
        std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let spec = DomainSpec::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    Ok(solve::solve(&spec, &options(allow_short_strip)?)?)
}

fn figure(s: &Solved, inner: bool, cheeger: bool, balls: bool) -> String {
    let outline: Vec<_> = s.outline.iter().collect();
    let mut layers = Vec::new();
    if cheeger {
        layers.push(svg::Layer { parts: s.cheeger.iter().collect(), fill: "#cccccc", stroke: "#888888" });
    }
    if inner {
        layers.push(svg::Layer { parts: s.inner.iter().collect(), fill: "#555555", stroke: "#333333" });
    }
    let circles = if balls { s.balls(12) } else { Vec::new() };
    svg::render(&outline, &layers, &circles)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn finish(report: &ResultReport) -> Result<(), Failure> {
    println!("{}", report.to_json());
    if report.all_pass() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        Err(Failure::Violation(format!("failed checks: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Solve { file, svg, allow_short_strip } => {
            let s = load(&file, allow_short_strip)?;
            for w in &s.report.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(out) = svg {
                write(&out, &figure(&s, true, true, false))?;
                eprintln!("wrote {}", out.display());
            }
            finish(&s.report)
        }
        Cmd::Verify { suite } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Input(format!("unknown suite '{suite}'; expected one of {}", SUITES.join(", "))));
            }
            let checks = run_suite(&suite)?;
            let mut report = ResultReport::new(format!("suite {suite}"));
            let failed = checks.iter().filter(|c| !c.pass).count();
            eprintln!("{suite}: {} of {} checks pass", checks.len() - failed, checks.len());
            report.checks = checks.into_iter().map(Into::into).collect();
            finish(&report)
        }
        Cmd::Render { file, out, show_inner, show_cheeger, show_balls, allow_short_strip } => {
            let s = load(&file, allow_short_strip)?;
            if (show_inner || show_balls) && s.inner.is_empty() {
                eprintln!("warning: no inner set is available for this domain");
            }
            write(&out, &figure(&s, show_inner, show_cheeger, show_balls))?;
            eprintln!("wrote {}", out.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
