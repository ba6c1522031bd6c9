//! `brsk` — grids, bounded insertion, peeling, folding, Hilbert tables,
//! enumeration streams, and the verification harnesses.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a
//! verification finds counterexamples (serialized on stdout), 2 on invalid
//! input or usage.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use brsk::json::{
    grids_to_json, monomial_from_cells, monomial_to_json, peel_trace_to_json, tableau_from_dto,
    tableau_pair_to_json, tableau_to_json, TableauDto,
};
use brsk::{DominationMode, Error, IndexSet, VerificationReport};

#[derive(Parser)]
#[command(name = "brsk", version, about = "Grid-monomial combinatorics toolkit")]
struct Cli {
    /// Worker threads for the harnesses (default: all cores). Output is
    /// byte-identical for any value.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format; only the `hilbert` subcommand honors `csv`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Check every chain during domination instead of only maximal ones.
    #[arg(long = "all-chains", global = true)]
    all_chains: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VArgs {
    /// Entries of v, comma separated, e.g. `--v 1,3`.
    #[arg(long, value_delimiter = ',', required = true)]
    v: Vec<u32>,

    /// Half the ambient size; defaults to the number of entries of v.
    #[arg(long)]
    d: Option<u32>,
}

impl VArgs {
    fn index_set(&self) -> Result<IndexSet, Error> {
        let d = self.d.unwrap_or(self.v.len() as u32);
        if d as usize != self.v.len() {
            return Err(Error::InvalidInput(format!(
                "v has {} entries but d = {d}",
                self.v.len()
            )));
        }
        IndexSet::new(self.v.clone(), 2 * d)
    }
}

fn parse_w(w: &[u32], v: &IndexSet) -> Result<IndexSet, Error> {
    IndexSet::new(w.to_vec(), v.ambient())
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the four cell grids of v as JSON arrays.
    Grid {
        #[command(flatten)]
        v: VArgs,
    },
    /// Insert a monomial and print the notched tableau pair.
    Brsk {
        #[command(flatten)]
        v: VArgs,
        /// Cells as JSON, e.g. `[[2,1],[4,1],[4,3]]`; repetition encodes
        /// multiplicity.
        #[arg(long)]
        monomial: String,
    },
    /// Peel a monomial to exhaustion and print words plus distinguished
    /// subsets in peel order.
    Pitilde {
        #[command(flatten)]
        v: VArgs,
        #[arg(long)]
        monomial: String,
    },
    /// Map a standard tableau to its folded-grid monomial.
    Eta {
        #[command(flatten)]
        v: VArgs,
        /// Tableau as JSON: `{"pairs":[{"top":[..],"bot":[..]},..]}`.
        #[arg(long)]
        tableau: String,
    },
    /// Degree-indexed counts of w-dominated monomials.
    Hilbert {
        #[command(flatten)]
        v: VArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<u32>,
        #[arg(long = "max-m")]
        max_m: usize,
    },
    /// Stream newline-delimited JSON objects.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCmd,
    },
    /// Run a verification harness; exits 1 on mismatches.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// All w-dominated monomials of each degree up to `--max-m`.
    Monomials {
        #[command(flatten)]
        v: VArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<u32>,
        #[arg(long = "max-m")]
        max_m: usize,
    },
    /// All w-dominated v-compatible standard tableaux of each degree up to
    /// `--max-m`.
    Tableaux {
        #[command(flatten)]
        v: VArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<u32>,
        #[arg(long = "max-m")]
        max_m: u32,
    },
    /// All v-compatible tableaux anti-dominated by v, degree at most
    /// `--max-degree`.
    Anti {
        #[command(flatten)]
        v: VArgs,
        #[arg(long = "max-degree")]
        max_degree: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Peeling against insertion, exhaustively up to `--max-size`.
    Main {
        #[command(flatten)]
        v: VArgs,
        #[arg(long = "max-size")]
        max_size: usize,
    },
    /// Inversion recovers every monomial up to `--max-size`.
    Roundtrip {
        #[command(flatten)]
        v: VArgs,
        #[arg(long = "max-size")]
        max_size: usize,
    },
    /// The folding composition is a degree-preserving bijection up to
    /// `--max-degree`.
    Eta {
        #[command(flatten)]
        v: VArgs,
        #[arg(long = "max-degree")]
        max_degree: u32,
    },
    /// Monomial counts equal tableau counts for each degree up to `--max-m`.
    Counting {
        #[command(flatten)]
        v: VArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<u32>,
        #[arg(long = "max-m")]
        max_m: u32,
    },
}

struct Output {
    out: Option<PathBuf>,
    buffer: String,
}

impl Output {
    fn line(&mut self, s: &str) {
        self.buffer.push_str(s);
        self.buffer.push('\n');
    }

    fn flush(self) -> std::io::Result<()> {
        match self.out {
            Some(path) => std::fs::write(path, self.buffer),
            None => std::io::stdout().write_all(self.buffer.as_bytes()),
        }
    }
}

fn run(cli: Cli, out: &mut Output) -> Result<u8, Error> {
    let mode = if cli.all_chains {
        DominationMode::AllChains
    } else {
        DominationMode::MaximalChains
    };
    match cli.cmd {
        Cmd::Grid { v } => {
            let v = v.index_set()?;
            let grids = brsk::build_grids(&v)?;
            out.line(&grids_to_json(&v, &grids).to_string());
            Ok(0)
        }
        Cmd::Brsk { v, monomial } => {
            let v = v.index_set()?;
            let cells = parse_cells(&monomial)?;
            let m = monomial_from_cells(&v, &cells)?;
            let pair = brsk::brsk(&m)?;
            out.line(&tableau_pair_to_json(&pair).to_string());
            Ok(0)
        }
        Cmd::Pitilde { v, monomial } => {
            let v = v.index_set()?;
            let cells = parse_cells(&monomial)?;
            let m = monomial_from_cells(&v, &cells)?;
            let trace = brsk::peel(&m)?;
            out.line(&peel_trace_to_json(&trace).to_string());
            Ok(0)
        }
        Cmd::Eta { v, tableau } => {
            let v = v.index_set()?;
            let dto: TableauDto = serde_json::from_str(&tableau)
                .map_err(|e| Error::InvalidInput(format!("tableau JSON: {e}")))?;
            let t = tableau_from_dto(&dto, v.ambient())?;
            let image = brsk::eta(&t, &v)?;
            out.line(&monomial_to_json(&image).to_string());
            Ok(0)
        }
        Cmd::Hilbert { v, w, max_m } => {
            let v = v.index_set()?;
            let w = parse_w(&w, &v)?;
            let table = brsk::hilbert_function(&v, &w, max_m, mode)?;
            match cli.format {
                Format::Csv => {
                    for (m, count) in table.counts.iter().enumerate() {
                        out.line(&format!("{m},{count}"));
                    }
                }
                Format::Json => {
                    out.line(
                        &serde_json::json!({
                            "v": v.entries(),
                            "w": w.entries(),
                            "max_m": max_m,
                            "counts": table.counts,
                        })
                        .to_string(),
                    );
                }
            }
            Ok(0)
        }
        Cmd::Enumerate { what } => {
            match what {
                EnumerateCmd::Monomials { v, w, max_m } => {
                    let v = v.index_set()?;
                    let w = parse_w(&w, &v)?;
                    for m in 0..=max_m {
                        for mono in brsk::enumerate_dominated_monomials(&v, &w, m, mode)? {
                            out.line(&monomial_to_json(&mono).to_string());
                        }
                    }
                }
                EnumerateCmd::Tableaux { v, w, max_m } => {
                    let v = v.index_set()?;
                    let w = parse_w(&w, &v)?;
                    for m in 0..=max_m {
                        for t in brsk::enumerate_dominated_tableaux(&v, &w, m)? {
                            out.line(&tableau_to_json(&t).to_string());
                        }
                    }
                }
                EnumerateCmd::Anti { v, max_degree } => {
                    let v = v.index_set()?;
                    for t in brsk::enumerate_anti_dominated_tableaux(&v, max_degree)? {
                        out.line(&tableau_to_json(&t).to_string());
                    }
                }
            }
            Ok(0)
        }
        Cmd::Verify { what } => {
            let report = match what {
                VerifyCmd::Main { v, max_size } => {
                    brsk::verify::main_theorem(&v.index_set()?, max_size)
                }
                VerifyCmd::Roundtrip { v, max_size } => {
                    brsk::verify::round_trip(&v.index_set()?, max_size)
                }
                VerifyCmd::Eta { v, max_degree } => {
                    brsk::verify::eta_bijection(&v.index_set()?, max_degree)?
                }
                VerifyCmd::Counting { v, w, max_m } => {
                    let v = v.index_set()?;
                    let w = parse_w(&w, &v)?;
                    brsk::verify::counting(&v, &w, max_m, mode)?
                }
            };
            emit_report(&report, out)
        }
    }
}

fn emit_report(report: &VerificationReport, out: &mut Output) -> Result<u8, Error> {
    out.line(&report.to_json().to_string());
    eprintln!(
        "{}: {} instances in {:.2?}",
        report.kind, report.instances_checked, report.elapsed
    );
    Ok(if report.pass { 0 } else { 1 })
}

fn parse_cells(s: &str) -> Result<Vec<(u32, u32)>, Error> {
    serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("monomial JSON: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // ignore the error when a pool already exists (e.g. repeated init)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let mut out = Output {
        out: cli.out.clone(),
        buffer: String::new(),
    };
    match run(cli, &mut out) {
        Ok(code) => {
            if out.flush().is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
