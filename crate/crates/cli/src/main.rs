use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::feasibility::{self, Method};
use tangle_core::heightmin::{bfs_min_height_simple, dp_min_height, Height};
use tangle_core::instances::{self, NaeFormula};
use tangle_core::io as tio;
use tangle_core::model::{validate_tangle, SwapList};
use tangle_core::oracle;
use tangle_core::Limits;

/// Feasibility and minimum height of tangles.
///
/// Exit status: 0 feasible or valid, 1 infeasible or invalid, 2 error.
/// File arguments accept `-` for stdin or stdout.
#[derive(Parser)]
#[command(name = "tangle", version)]
struct Cli {
    /// Largest DP table, in entries.
    #[arg(long, global = true, default_value_t = tangle_core::sublist::DEFAULT_MAX_TABLE)]
    max_table: u64,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a list is feasible.
    Feasible {
        list: PathBuf,
        #[arg(long, value_enum, default_value_t = FeasMethod::Auto)]
        method: FeasMethod,
    },
    /// Minimum height of a tangle realizing a list.
    Minheight {
        list: PathBuf,
        #[arg(long, value_enum, default_value_t = HeightMethod::Dp)]
        method: HeightMethod,
        /// Write an optimal tangle to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Generate an instance as a list file.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Draw a tangle.
    Render {
        tangle: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Write a DIMACS formula satisfiable iff some tangle of height at most h
    /// realizes the list.
    ExportCnf {
        list: PathBuf,
        #[arg(long)]
        height: usize,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        #[arg(long, default_value_t = tio::DEFAULT_MAX_CLAUSES)]
        max_clauses: u64,
    },
    /// Check that a tangle realizes a list.
    Validate { tangle: PathBuf, list: PathBuf },
    /// Minimum height by brute-force search; small lists only.
    Oracle { list: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Loop list on n wires, minimum height 3n-4.
    Loop { n: usize },
    /// Every pair swaps once.
    Complete { n: usize },
    /// Hypercube list on 2^m wires.
    Hypercube { m: u32 },
    /// Uniform random entries in 0..=max.
    Random { n: usize, max: u32 },
    /// Hardness reduction of a NAE-3-SAT formula (`p nae3sat` format).
    Reduce {
        formula: PathBuf,
        /// Write the role of each wire to this file.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FeasMethod {
    Auto,
    Dp,
    Fpt,
    Simple,
    Odd,
    RichEven,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum HeightMethod {
    Dp,
    Bfs,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        std::io::stdout().write_all(text.as_bytes()).context("writing stdout")
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn read_list(path: &Path) -> Result<SwapList> {
    tio::parse_list(&read_input(path)?).with_context(|| format!("parsing list {}", path.display()))
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = Limits::with_max_table(cli.max_table);
    match cli.command {
        Command::Feasible { list, method } => {
            let l = read_list(&list)?;
            let (ok, used) = match method {
                FeasMethod::Auto => {
                    let d = feasibility::feasible_auto(&l, &limits)?;
                    (d.feasible, d.method.name())
                }
                FeasMethod::Dp => (feasibility::feasible_dp(&l, &limits)?, Method::Dp.name()),
                FeasMethod::Fpt => (feasibility::feasible_fpt(&l, &limits)?, Method::Fpt.name()),
                FeasMethod::Simple => (feasibility::feasible_simple(&l)?, Method::Simple.name()),
                FeasMethod::Odd => (feasibility::feasible_odd(&l)?, Method::Odd.name()),
                FeasMethod::RichEven => (feasibility::feasible_rich_even(&l)?, Method::RichEven.name()),
                FeasMethod::Oracle => (oracle::oracle_feasible(&l)?, "oracle"),
            };
            println!("{} ({used})", if ok { "feasible" } else { "infeasible" });
            Ok(verdict(ok))
        }
        Command::Minheight { list, method, emit } => {
            let l = read_list(&list)?;
            let (height, witness) = match method {
                HeightMethod::Dp => {
                    let r = dp_min_height(&l, &limits)?;
                    (r.height, r.witness)
                }
                HeightMethod::Bfs => {
                    let t = bfs_min_height_simple(&l)?;
                    (Height::Finite(t.height() as u32), Some(t))
                }
                HeightMethod::Oracle => {
                    if emit.is_some() {
                        bail!("the oracle does not produce witnesses; use --method dp");
                    }
                    (oracle::oracle_min_height(&l)?, None)
                }
            };
            match height {
                Height::Finite(h) => println!("{h}"),
                Height::Infinite => println!("infeasible"),
            }
            if let (Some(path), Some(t)) = (emit, witness) {
                write_output(&path, &tio::write_tangle(&t))?;
            }
            Ok(verdict(height.is_finite()))
        }
        Command::Gen { family } => {
            let l = match family {
                Family::Loop { n } => instances::gen_loop(n)?,
                Family::Complete { n } => instances::gen_complete(n),
                Family::Hypercube { m } => instances::gen_hypercube(m)?,
                Family::Random { n, max } => {
                    instances::random_list(n, max, &mut ChaCha8Rng::seed_from_u64(cli.seed))
                }
                Family::Reduce { formula, roles } => {
                    let f = NaeFormula::parse(&read_input(&formula)?)
                        .with_context(|| format!("parsing formula {}", formula.display()))?;
                    let (l, map) = instances::reduce_to_list(&f.to_positive_nae_diff())?;
                    if let Some(path) = roles {
                        let mut text = String::new();
                        for (k, role) in map.roles().iter().enumerate() {
                            text.push_str(&format!("{} {role}\n", k + 1));
                        }
                        write_output(&path, &text)?;
                    }
                    l
                }
            };
            print!("{}", tio::write_list(&l));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { tangle, format, output } => {
            let t = tio::parse_tangle(&read_input(&tangle)?)
                .with_context(|| format!("parsing tangle {}", tangle.display()))?
                .tangle;
            let text = match format {
                Format::Svg => tio::render_svg(&t),
                Format::Ascii => tio::render_ascii(&t),
            };
            write_output(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportCnf { list, height, output, max_clauses } => {
            let l = read_list(&list)?;
            let e = tio::export_cnf(&l, height, max_clauses)?;
            write_output(&output, &e.to_dimacs())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { tangle, list } => {
            if tangle.as_os_str() == "-" && list.as_os_str() == "-" {
                bail!("only one argument can read stdin");
            }
            let tf = tio::parse_tangle(&read_input(&tangle)?)
                .with_context(|| format!("parsing tangle {}", tangle.display()))?;
            let l = read_list(&list)?;
            match validate_tangle(&tf.tangle, &l, &tf.start) {
                Ok(()) => {
                    println!("valid");
                    Ok(ExitCode::SUCCESS)
                }
                Err(v) => {
                    println!("invalid: {v}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Oracle { list } => {
            let l = read_list(&list)?;
            let h = oracle::oracle_min_height(&l)?;
            match h {
                Height::Finite(h) => println!("{h}"),
                Height::Infinite => println!("infeasible"),
            }
            Ok(verdict(h.is_finite()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
