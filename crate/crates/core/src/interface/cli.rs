use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use super::{InterfaceError, RepArchive};
use crate::operators::{BuildOptions, Gen, OperatorError, Representation, SparseOperator, StructureConstants};
use crate::patterns::{branching, enumerate, weyl_dim, HighestWeight};
use crate::verify::{self, Suite, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "o2n", version, about = "Exact Gelfand–Tsetlin construction of o(2n) irreducible representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Selects a highest weight.
#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    /// Rank n of o(2n).
    #[arg(long)]
    pub n: usize,
    /// Comma-separated entries λ_1,…,λ_n; halves as "p/2".
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

/// A highest weight, or an archive written by `build`.
#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    #[arg(long, requires = "lambda", conflicts_with = "archive")]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    pub lambda: Option<String>,
    /// Read the representation from an archive instead of building it.
    #[arg(long, required_unless_present = "n")]
    pub archive: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Weyl dimension and the number of patterns.
    Dim {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the basis patterns in order.
    Patterns {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build every canonical generator matrix and write an archive.
    Build {
        #[command(flatten)]
        rep: RepArgs,
        /// Archive path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 picks a default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the matrix of one generator.
    Matrix {
        #[command(flatten)]
        source: SourceArgs,
        /// Label such as "F(1,-2)".
        #[arg(long = "gen", allow_hyphen_values = true)]
        generator: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Suite name, a comma-separated list, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the branching multiplicities to o(2n-2).
    Branch {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

impl RepArgs {
    fn highest_weight(&self) -> Result<HighestWeight, InterfaceError> {
        Ok(HighestWeight::parse(self.n, &self.lambda)?)
    }
}

impl SourceArgs {
    fn load(&self, jobs: usize) -> Result<Representation, InterfaceError> {
        match (&self.archive, self.n, &self.lambda) {
            (Some(path), _, _) => RepArchive::read(path)?.to_representation(),
            (None, Some(n), Some(lambda)) => {
                let hw = HighestWeight::parse(n, lambda)?;
                Ok(Representation::build_with(&hw, BuildOptions { jobs, ..Default::default() })?)
            }
            _ => Err(InterfaceError::Usage("give --n and --lambda, or --archive".into())),
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, InterfaceError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| OperatorError::ThreadPool(e.to_string()).into())
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializes")
}

fn render_matrix(m: &SparseOperator) -> String {
    let mut s = String::new();
    if m.dim() <= 16 {
        let cells: Vec<Vec<String>> =
            m.to_dense().iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            s += &row.join(" ");
            s.push('\n');
        }
    } else {
        for (src, tgt, c) in m.entries() {
            s += &format!("{src} -> {tgt}: {c}\n");
        }
    }
    s
}

fn render_report(r: &VerifyReport) -> String {
    let mut s = format!("{}: {}\n", r.suite, if r.pass { "pass" } else { "FAIL" });
    for c in &r.counterexamples {
        s += &format!("  {}: expected {}, got {}\n", c.context, c.expected, c.got);
    }
    s
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32, InterfaceError> {
    let mut code = 0;
    let mut text = String::new();
    match cmd {
        Command::Dim { rep, format } => {
            let hw = rep.highest_weight()?;
            let weyl = weyl_dim(&hw);
            let count = enumerate(&hw).len();
            if num_bigint::BigUint::from(count) != weyl {
                code = 1;
            }
            text = match format {
                Format::Text => format!("{weyl} {count}\n"),
                Format::Json => {
                    json_line(&serde_json::json!({ "weyl_dim": weyl.to_string(), "patterns": count })) + "\n"
                }
            };
        }
        Command::Patterns { rep, format } => {
            let patterns = enumerate(&rep.highest_weight()?);
            match format {
                Format::Text => {
                    for (i, p) in patterns.iter().enumerate() {
                        text += &format!("{i} {p}\n");
                    }
                }
                Format::Json => text = json_line(&patterns) + "\n",
            }
        }
        Command::Build { rep, out: path, jobs } => {
            let hw = rep.highest_weight()?;
            let r = Representation::build_with(&hw, BuildOptions { jobs: *jobs, ..Default::default() })?;
            let archive = RepArchive::from_representation(&r);
            match path {
                Some(p) => {
                    archive.write(p)?;
                    text = format!("wrote {} (dim {}, {} generators)\n", p.display(), r.dim(), r.generators().len());
                }
                None => text = archive.to_json(),
            }
        }
        Command::Matrix { source, generator, format } => {
            let g: Gen = generator.parse()?;
            let r = source.load(0)?;
            if !g.in_range(r.n()) {
                return Err(InterfaceError::Usage(format!("{g} is out of range for n = {}", r.n())));
            }
            let m = r.op(g);
            text = match format {
                Format::Text => render_matrix(&m),
                Format::Json => json_line(&m) + "\n",
            };
        }
        Command::Verify { source, suite, jobs, format } => {
            let suites = Suite::parse_list(suite).map_err(InterfaceError::Usage)?;
            let r = source.load(*jobs)?;
            let sc = StructureConstants::new(r.n())?;
            let reports: Vec<VerifyReport> =
                pool(*jobs)?.install(|| suites.par_iter().map(|&s| verify::run(s, &r, &sc)).collect());
            if reports.iter().any(|x| !x.pass) {
                code = 1;
            }
            text = match format {
                Format::Text => reports.iter().map(render_report).collect(),
                Format::Json => serde_json::to_string_pretty(&reports).expect("serializes") + "\n",
            };
        }
        Command::Branch { rep, format } => {
            let hw = rep.highest_weight()?;
            if hw.n() < 2 {
                return Err(InterfaceError::Usage("branching needs n ≥ 2".into()));
            }
            let table = branching(&hw);
            let weyl = weyl_dim(&hw);
            let total = table.total_dim();
            if total != weyl {
                code = 1;
            }
            text = json_line(&table) + "\n";
            if *format == Format::Text {
                let eq = if total == weyl { "=" } else { "≠" };
                text += &format!("Σ c(μ) dim V(μ) = {total} {eq} {weyl} = dim V(λ)\n");
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| InterfaceError::Io("stdout".into(), e.to_string()))?;
    Ok(code)
}

/// Runs one command and returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
