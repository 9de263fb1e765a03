use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use alcove::{RootSystemKind, Vector};
use alcove_cli::render::{render_svg, Figure};
use alcove_cli::{
    complex, counterexample, dump_galleries, grid_cells, oracle, parse_lambda, parse_root_coords,
    verify, Basis, Verdict, DEFAULT_GRID, MAX_TYPES,
};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "alcove",
    version,
    about = "Positively folded galleries and dual convexity in affine Weyl groups"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Accepted for interface stability; every algorithm is exact and deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Target {
    /// Root system, e.g. A2, B2, G2.
    #[arg(long)]
    kind: Option<RootSystemKind>,
    /// Dominant λ as a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Coordinates of --lambda.
    #[arg(long, value_enum, default_value_t = Basis::Coroot)]
    basis: Basis,
    /// Grid bound on the sum of ⟨λ, α_i∨⟩; without --kind, applies to every default kind.
    #[arg(long)]
    max_height: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Compare endpoints of positively folded galleries with A^type(λ).
    Verify {
        #[command(flatten)]
        target: Target,
        /// Repeat for several distinct minimal-gallery types.
        #[arg(long)]
        all_minimal_types: bool,
        /// Check the W-convex point y (simple-root coordinates) against the dual hull of λ.
        #[arg(long, value_name = "Y")]
        check_counterexample: Option<String>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Freudenthal support and dimension checks.
    Oracle {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write every positively folded gallery of the minimal type, sorted.
    DumpGalleries {
        #[arg(long)]
        kind: RootSystemKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Basis::Coroot)]
        basis: Basis,
        /// Output file (default: stdout).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Draw a rank-2 apartment as SVG.
    Render {
        #[arg(long)]
        kind: RootSystemKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Basis::Coroot)]
        basis: Basis,
        /// Highlight this point (simple-root coordinates).
        #[arg(long, allow_hyphen_values = true)]
        mark: Option<String>,
        /// Draw the minimal gallery from 0 to λ.
        #[arg(long)]
        gallery: bool,
        #[arg(long, short)]
        output: PathBuf,
    },
}

/// Grid cells in canonical order: kinds as given, λ as enumerated.
fn cells(target: &Target) -> Result<Vec<(RootSystemKind, Vector)>> {
    if let Some(s) = &target.lambda {
        let Some(kind) = target.kind else {
            bail!("--lambda needs --kind")
        };
        let rs = alcove::RootSystem::construct(kind)?;
        return Ok(vec![(kind, parse_lambda(&rs, s, target.basis)?)]);
    }
    let kinds: Vec<(RootSystemKind, u32)> = match target.kind {
        Some(kind) => {
            let cap = DEFAULT_GRID
                .iter()
                .find(|(k, _)| k.parse::<RootSystemKind>().ok() == Some(kind))
                .map(|c| c.1);
            vec![(kind, target.max_height.or(cap).unwrap_or(2))]
        }
        None => DEFAULT_GRID
            .iter()
            .map(|&(k, cap)| (k.parse().unwrap(), target.max_height.unwrap_or(cap)))
            .collect(),
    };
    let mut out = Vec::new();
    for (kind, cap) in kinds {
        out.extend(grid_cells(kind, cap)?.into_iter().map(|v| (kind, v)));
    }
    Ok(out)
}

fn emit_json<T: serde::Serialize>(value: &T, path: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    match cli.command {
        Command::Verify {
            target,
            all_minimal_types,
            check_counterexample,
            json,
        } => {
            let cells = cells(&target)?;
            let max_types = if all_minimal_types { MAX_TYPES } else { 1 };
            let per_cell: Vec<Result<Vec<_>>> = cells
                .par_iter()
                .map(|(kind, lam)| verify(&complex(*kind)?, lam, max_types))
                .collect();
            let mut reports = Vec::new();
            for r in per_cell {
                reports.extend(r?);
            }
            let mut ok = true;
            for r in &reports {
                ok &= r.verdict == Verdict::Match;
                eprintln!(
                    "{} λ=({}) type length {}: {} endpoints, |A^type| = {}, {:?}",
                    r.kind,
                    r.lambda.join(","),
                    r.type_length,
                    r.endpoint_set_size,
                    r.a_type_set_size,
                    r.verdict
                );
            }
            if let Some(y) = check_counterexample {
                let [(kind, lam)] = &cells[..] else {
                    bail!("--check-counterexample needs a single --lambda")
                };
                let cx = complex(*kind)?;
                let y = parse_root_coords(cx.root_system(), &y)?;
                let c = counterexample(&cx, lam, &y)?;
                ok &= c.separates;
                eprintln!(
                    "counterexample: delta(0,x)={} delta(0,y)={} y in Wconv={} y in dual hull={} y in A^type={}",
                    c.distance_x, c.distance_y, c.y_in_wconv, c.y_in_dual_hull, c.y_in_a_type_set
                );
                eprintln!("{}", serde_json::to_string(&c)?);
            }
            emit_json(&reports, json.as_ref())?;
            Ok(ok)
        }
        Command::Oracle { target, json } => {
            let cells = cells(&target)?;
            let reports: Vec<Result<_>> = cells
                .par_iter()
                .map(|(kind, lam)| oracle(&alcove::RootSystem::construct(*kind)?, lam))
                .collect();
            let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
            for r in &reports {
                eprintln!(
                    "{} λ=({}): dim {}, multiplicity sum {}, support {}: {}",
                    r.kind,
                    r.lambda.join(","),
                    r.weyl_dim,
                    r.multiplicity_sum,
                    r.support_matches_dominance,
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
            emit_json(&reports, json.as_ref())?;
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::DumpGalleries {
            kind,
            lambda,
            basis,
            output,
        } => {
            let cx = complex(kind)?;
            let lam = parse_lambda(cx.root_system(), &lambda, basis)?;
            let mut text = dump_galleries(&cx, &lam)?.join("\n");
            text.push('\n');
            match output {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Command::Render {
            kind,
            lambda,
            basis,
            mark,
            gallery,
            output,
        } => {
            let cx = complex(kind)?;
            let lam = parse_lambda(cx.root_system(), &lambda, basis)?;
            let mark = mark
                .map(|m| parse_root_coords(cx.root_system(), &m))
                .transpose()?;
            let svg = render_svg(
                &cx,
                &Figure {
                    lambda: &lam,
                    mark: mark.as_ref(),
                    gallery,
                },
            )?;
            fs::write(&output, svg).with_context(|| format!("writing {}", output.display()))?;
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
