//! Command-line front end: construct and verify hypersimplicial subdivisions
//! of dilated hypersimplices, check the volume identity, query point
//! membership, and export dual graphs.
//!
//! Exit codes: 0 on success, 1 when a verification or identity check fails,
//! 2 for invalid parameters or malformed input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypersub::combinatorics::{eulerian, identity_check, identity_sweep, IdentityCheck};
use hypersub::dualgraph::build_dual_graph;
use hypersub::geometry::{containing_translates, RationalPoint};
use hypersub::subdivision::{
    covering_witness, ehrhart_normalized_volume, Subdivision, VerifyOptions,
};

/// Refuse enumeration beyond these sizes unless `--force` is given.
const GUARD_MAX_D: usize = 7;
const GUARD_MAX_R: usize = 1000;
const GUARD_MAX_CELLS: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "hypersub",
    version,
    about = "Exact hypersimplicial subdivisions of dilated hypersimplices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate both sides of the volume identity for one (d, i, r).
    Identity {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check the identity on every triple with d <= d-max, i in [d], r <= r-max.
    Sweep {
        #[arg(long = "d-max")]
        d_max: usize,
        #[arg(long = "r-max")]
        r_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Construct the subdivision H(r, d, i) and emit it as JSON.
    Subdivide {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the size guardrails.
        #[arg(long)]
        force: bool,
    },
    /// Build H(r, d, i) and verify containment, coverage, faces and volume.
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        /// Number of pseudo-random coverage samples.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the deterministic sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Verify the cell list from this JSON file instead of building it.
        #[arg(long)]
        cells: Option<PathBuf>,
        /// Override the size guardrails.
        #[arg(long)]
        force: bool,
    },
    /// Emit the dual graph of H(r, d, i).
    DualGraph {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the size guardrails.
        #[arg(long)]
        force: bool,
    },
    /// Normalized volume of the hypersimplex D(d, i) by the chosen oracle.
    Volume {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = VolumeOracle::Eulerian)]
        oracle: VolumeOracle,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Covering witness and all containing translates of a rational point.
    Locate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated coordinates, each `a` or `a/b` with b > 0.
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Override the size guardrails.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VolumeOracle {
    /// Degree-d Ehrhart interpolation of lattice-point counts.
    Ehrhart,
    /// The Eulerian-number recurrence.
    Eulerian,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Identity { d, i, r, format } => {
            let check = identity_check(r, d, i).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Text => {
                    println!("lhs={} rhs={} equal={}", check.lhs, check.rhs, check.holds());
                }
                OutputFormat::Json => println!("{}", identity_json(&check)),
            }
            Ok(exit_by(check.holds()))
        }
        Command::Sweep {
            d_max,
            r_max,
            format,
        } => {
            let sweep = identity_sweep(d_max, r_max).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Text => {
                    for entry in &sweep.entries {
                        println!(
                            "d={} i={} r={} lhs={} rhs={} {}",
                            entry.d,
                            entry.i,
                            entry.r,
                            entry.lhs,
                            entry.rhs,
                            if entry.holds() { "ok" } else { "MISMATCH" }
                        );
                    }
                    let failures = sweep.failures().count();
                    if failures == 0 {
                        println!("checked {} triples: all equal", sweep.entries.len());
                    } else {
                        println!(
                            "checked {} triples: {failures} mismatches",
                            sweep.entries.len()
                        );
                    }
                }
                OutputFormat::Json => {
                    let dto = SweepDto {
                        d_max,
                        r_max,
                        triples: sweep.entries.iter().map(IdentityDto::from).collect(),
                        all_equal: sweep.all_hold(),
                    };
                    println!("{}", serde_json::to_string(&dto).expect("serializable"));
                }
            }
            Ok(exit_by(sweep.all_hold()))
        }
        Command::Subdivide { d, i, r, out, force } => {
            enforce_guardrails(r, d, i, force)?;
            let s = Subdivision::build(r, d, i).map_err(|e| e.to_string())?;
            emit(&out, &s.to_json_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            d,
            i,
            r,
            samples,
            seed,
            format,
            cells,
            force,
        } => {
            enforce_guardrails(r, d, i, force)?;
            let s = match cells {
                None => Subdivision::build(r, d, i).map_err(|e| e.to_string())?,
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                    let s = Subdivision::from_json_str(&text).map_err(|e| e.to_string())?;
                    if (s.r(), s.d(), s.i()) != (r, d, i) {
                        return Err(format!(
                            "{} holds H(r={}, d={}, i={}), but the flags say (r={r}, d={d}, i={i})",
                            path.display(),
                            s.r(),
                            s.d(),
                            s.i()
                        ));
                    }
                    s
                }
            };
            let report = s.verify(&VerifyOptions {
                samples,
                seed,
                ..VerifyOptions::default()
            });
            match format {
                OutputFormat::Text => println!("{report}"),
                OutputFormat::Json => println!("{}", report.to_json_string()),
            }
            Ok(exit_by(report.passed()))
        }
        Command::DualGraph {
            d,
            i,
            r,
            format,
            out,
            force,
        } => {
            enforce_guardrails(r, d, i, force)?;
            let s = Subdivision::build(r, d, i).map_err(|e| e.to_string())?;
            let graph = build_dual_graph(&s);
            let payload = match format {
                GraphFormat::Dot => graph.to_dot().trim_end().to_string(),
                GraphFormat::Json => graph.to_json_string(),
            };
            emit(&out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Volume { d, i, oracle, format } => {
            if d < 1 || i < 1 || i > d {
                return Err(format!("need 1 <= i <= d, got d={d}, i={i}"));
            }
            let volume = match oracle {
                VolumeOracle::Ehrhart => {
                    ehrhart_normalized_volume(d, i).map_err(|e| e.to_string())?
                }
                VolumeOracle::Eulerian => eulerian(d, i as i64).map_err(|e| e.to_string())?,
            };
            match format {
                OutputFormat::Text => println!("{volume}"),
                OutputFormat::Json => {
                    let dto = VolumeDto {
                        d,
                        i,
                        oracle: match oracle {
                            VolumeOracle::Ehrhart => "ehrhart",
                            VolumeOracle::Eulerian => "eulerian",
                        },
                        volume: volume.to_string(),
                    };
                    println!("{}", serde_json::to_string(&dto).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Locate {
            d,
            i,
            r,
            point,
            format,
            force,
        } => {
            if !force && d > GUARD_MAX_D {
                return Err(guardrail_message(format!("d = {d} exceeds {GUARD_MAX_D}")));
            }
            let x = RationalPoint::parse(&point).map_err(|e| e.to_string())?;
            if x.ambient_dim() != d {
                return Err(format!(
                    "point has {} coordinates, but d = {d} needs {}",
                    x.ambient_dim() + 1,
                    d + 1
                ));
            }
            let witness = covering_witness(&x, r, d, i).map_err(|e| e.to_string())?;
            let family = containing_translates(&x).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Text => {
                    println!("point: {x}");
                    println!("witness: {witness}");
                    println!("containing translates ({}):", family.len());
                    for cell in &family {
                        println!("  {cell}");
                    }
                }
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "point": x.to_string(),
                        "witness": witness.to_json_value(),
                        "containing": family.iter().map(|c| c.to_json_value()).collect::<Vec<_>>(),
                    });
                    println!("{value}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_by(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn guardrail_message(what: String) -> String {
    format!("{what}; enumeration would be very large, pass --force to proceed anyway")
}

fn enforce_guardrails(r: usize, d: usize, i: usize, force: bool) -> Result<(), String> {
    if force {
        return Ok(());
    }
    if d > GUARD_MAX_D {
        return Err(guardrail_message(format!("d = {d} exceeds {GUARD_MAX_D}")));
    }
    if r > GUARD_MAX_R {
        return Err(guardrail_message(format!("r = {r} exceeds {GUARD_MAX_R}")));
    }
    let cells = Subdivision::expected_cell_count(r, d, i).map_err(|e| e.to_string())?;
    if cells > GUARD_MAX_CELLS.into() {
        return Err(guardrail_message(format!(
            "H({r}, {d}, {i}) has {cells} cells, more than {GUARD_MAX_CELLS}"
        )));
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), String> {
    match out {
        None => {
            println!("{payload}");
            Ok(())
        }
        Some(path) => fs::write(path, format!("{payload}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

#[derive(Serialize)]
struct IdentityDto {
    d: usize,
    i: usize,
    r: usize,
    lhs: String,
    rhs: String,
    equal: bool,
}

impl From<&IdentityCheck> for IdentityDto {
    fn from(check: &IdentityCheck) -> Self {
        IdentityDto {
            d: check.d,
            i: check.i,
            r: check.r,
            lhs: check.lhs.to_string(),
            rhs: check.rhs.to_string(),
            equal: check.holds(),
        }
    }
}

fn identity_json(check: &IdentityCheck) -> String {
    serde_json::to_string(&IdentityDto::from(check)).expect("serializable")
}

#[derive(Serialize)]
struct SweepDto {
    d_max: usize,
    r_max: usize,
    triples: Vec<IdentityDto>,
    all_equal: bool,
}

#[derive(Serialize)]
struct VolumeDto {
    d: usize,
    i: usize,
    oracle: &'static str,
    volume: String,
}
