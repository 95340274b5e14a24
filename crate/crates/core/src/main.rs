use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclepow::search::budget_from_env;
use cyclepow::{
    bound_report, build_table, builtin_table1, exact_max, render, search, verify_theorem_grid,
    Error, Format, GraphSpec, SearchOptions, TableSpec,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Extremal induced-edge counts on cycle powers C_n^s.
#[derive(Debug, Parser)]
#[command(name = "cyclepow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact maximum number of edges induced by k vertices.
    Exact {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Exact maximum together with the Turán and spectral bounds.
    Bounds {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Comparison table; the built-in n = 1000 table unless --spec is given.
    Table {
        /// CSV file: n on the first line, then one `k,s` pair per line.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// plain, markdown, csv or json.
        #[arg(long, default_value = "plain")]
        format: String,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Exhaustive search for a maximiser.
    Search {
        #[command(flatten)]
        params: Params,
        /// Count every maximiser over all C(n, k) subsets.
        #[arg(long)]
        all_maximizers: bool,
        /// Enumerate all subsets instead of pinning vertex 0.
        #[arg(long)]
        no_symmetry: bool,
        /// Skip branches that cannot reach the current best.
        #[arg(long)]
        prune: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Maximum number of subsets to visit (default from CYCLEPOW_BUDGET).
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Check the interval theorem and both bounds on every (n, s, k) with n <= max-n.
    Verify {
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
}

#[derive(Debug, Args)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: usize,
}

impl Params {
    fn validate(&self) -> Result<GraphSpec, Failure> {
        if self.n < 3 || self.s < 1 || self.k < 1 || self.k > self.n {
            return Err(Failure::usage(format!(
                "need n >= 3, s >= 1 and 1 <= k <= n (got n={}, k={}, s={})",
                self.n, self.k, self.s
            )));
        }
        Ok(GraphSpec::new(self.n, self.s)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Plain,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::SearchTooWide { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable") + "\n"
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[derive(Serialize)]
struct SearchOutput {
    n: usize,
    k: usize,
    s: usize,
    max_edges: u64,
    witness: Vec<usize>,
    maximizer_count: Option<u64>,
    subsets_examined: u64,
    used_symmetry: bool,
}

/// Rendered output plus exit status.
fn run(command: Command) -> Result<(String, u8), Failure> {
    match command {
        Command::Exact { params, format } => {
            let spec = params.validate()?;
            let r = exact_max(&spec, params.k)?;
            let out = match format {
                OutFormat::Plain => format!("{} {}\n", r.value, r.method.as_str()),
                OutFormat::Json => json(&r),
            };
            Ok((out, 0))
        }
        Command::Bounds { params, format } => {
            let spec = params.validate()?;
            let r = bound_report(&spec, params.k)?;
            let out = match format {
                OutFormat::Plain => {
                    let turan = r.turan.map_or_else(|| "NA".to_string(), |t| t.to_string());
                    format!(
                        "n {}\nk {}\ns {}\nexact {}\nturan {}\nspectral {}\nspectral_raw {}\nlambda2 {}\n",
                        r.n, r.k, r.s, r.exact, turan, r.spectral_int, r.spectral_raw, r.lambda2
                    )
                }
                OutFormat::Json => json(&r),
            };
            Ok((out, 0))
        }
        Command::Table { spec, format, jobs } => {
            let format: Format = format.parse()?;
            let ts = match spec {
                None => builtin_table1(),
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Failure::usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    TableSpec::parse(&text)?
                }
            };
            if ts.rows.is_empty() {
                return Err(Failure::usage("table spec has no rows".into()));
            }
            let rows = with_jobs(jobs, || build_table(&ts))?;
            Ok((render(&rows, format), 0))
        }
        Command::Search {
            params,
            all_maximizers,
            no_symmetry,
            prune,
            jobs,
            budget,
            format,
        } => {
            let spec = params.validate()?;
            let options = SearchOptions {
                reduce_symmetry: !no_symmetry,
                count_maximizers: all_maximizers,
                prune,
                jobs,
                budget: budget.unwrap_or_else(budget_from_env),
            };
            let r = search(&spec, params.k, &options)?;
            let out = match format {
                OutFormat::Plain => {
                    let mut out = format!(
                        "max_edges {}\nwitness {}\n",
                        r.max_edges, r.witness
                    );
                    if let Some(c) = r.maximizer_count {
                        out += &format!("maximizer_count {c}\n");
                    }
                    out += &format!(
                        "subsets_examined {}\nused_symmetry {}\n",
                        r.subsets_examined, r.used_symmetry
                    );
                    out
                }
                OutFormat::Json => json(&SearchOutput {
                    n: params.n,
                    k: params.k,
                    s: params.s,
                    max_edges: r.max_edges,
                    witness: r.witness.to_vec(),
                    maximizer_count: r.maximizer_count,
                    subsets_examined: r.subsets_examined,
                    used_symmetry: r.used_symmetry,
                }),
            };
            Ok((out, 0))
        }
        Command::Verify { max_n, jobs, format } => {
            if max_n < 3 {
                return Err(Failure::usage(format!("--max-n must be at least 3 (got {max_n})")));
            }
            let budget = budget_from_env();
            let needed = cyclepow::verify::grid_budget(max_n);
            if needed > budget {
                return Err(Error::BudgetExceeded {
                    projected: needed,
                    budget,
                }
                .into());
            }
            let report = with_jobs(jobs, || verify_theorem_grid(max_n))?;
            let code = if report.passed() { 0 } else { EXIT_VIOLATION };
            let out = match format {
                OutFormat::Plain => {
                    let mut out = format!(
                        "cases {}\nclosed_form_cases {}\nturan_cases {}\nsubsets_examined {}\nviolations {}\n",
                        report.cases,
                        report.closed_form_cases,
                        report.turan_cases,
                        report.subsets_examined,
                        report.violations.len()
                    );
                    for v in &report.violations {
                        out += &format!("violation: {v}\n");
                    }
                    out
                }
                OutFormat::Json => json(&report),
            };
            Ok((out, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
