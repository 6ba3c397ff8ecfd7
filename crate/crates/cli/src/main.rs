use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lielocder::analysis::{self, AnalyzeOptions, Outcome};
use lielocder::report::{to_json, Analysis, OracleSummary, RunReport};
use lielocder::reproduce::{self, ReproduceOptions, Status};
use lielocder::source::{self, LoadedAlgebra};
use lielocder::{conjecture, EXIT_CLAIM, EXIT_OK, EXIT_USAGE};

const CATALOG_HELP: &str = "Catalog names: ex3.1-L1, ex3.1-L2, ex4.5, ex4.5-nil, ex4.6, ex4.6-fixed, Ln:N, abelian:N, \
model:P,..,1, solvmodel:P,..,1, jordan:λ^k,.. (e.g. jordan:1^2, jordan:2^3,5). Anything ending in .lie or \
containing a path separator is read as a file.";

#[derive(Parser)]
#[command(name = "lielocder", version, about = "Derivations and local derivations of finite-dimensional Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Master seed for every sampled stage
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the JSON report on stdout instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity
    #[command(after_help = CATALOG_HELP)]
    Validate {
        #[arg(long, value_name = "NAME|FILE")]
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute Der, ad and a certified verdict on LocDer
    #[command(after_help = CATALOG_HELP)]
    Analyze {
        #[arg(long, value_name = "NAME|FILE")]
        algebra: String,
        /// Cap on sampled points per sampling stage
        #[arg(long)]
        samples: Option<usize>,
        /// Prime for the exhaustive cross-check (default: smallest admissible)
        #[arg(long)]
        prime: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute every headline result and print a pass/fail table
    Reproduce {
        /// Force this prime in every exhaustive row
        #[arg(long)]
        prime: Option<u64>,
        /// Also cross-check this catalog algebra against the exhaustive oracle
        #[arg(long, value_name = "NAME")]
        algebra: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Probe maximal solvable algebras for local derivations beyond Der
    Conjecture {
        /// Number of randomly drawn characteristic sequences
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    ExitCode::from(run(cli))
}

fn load(arg: &str) -> Result<LoadedAlgebra, u8> {
    source::load(arg).map_err(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    })
}

fn emit(json: bool, report: &RunReport) {
    if json {
        print!("{}", to_json(report));
    } else {
        print!("{}", render(report));
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Validate { algebra, common } => {
            let loaded = match load(&algebra) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let Outcome { report, exit_code } = analysis::validate(&loaded, common.seed);
            emit(common.json, &report);
            exit_code
        }
        Command::Analyze { algebra, samples, prime, common } => {
            let loaded = match load(&algebra) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let opts = AnalyzeOptions { seed: common.seed, samples, prime };
            match analysis::analyze(&loaded, &opts) {
                Ok(Outcome { report, exit_code }) => {
                    emit(common.json, &report);
                    exit_code
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_CLAIM
                }
            }
        }
        Command::Reproduce { prime, algebra, common } => {
            let opts = ReproduceOptions { seed: common.seed, prime, algebra };
            let json = common.json;
            let matrix = reproduce::run(&opts, |row| {
                if !json {
                    println!("{:<9} {:<16} {}", row.id, row.status.to_string(), row.claim);
                    println!("{:<26} {}", "", row.detail);
                    let _ = std::io::stdout().flush();
                }
            });
            if json {
                print!("{}", to_json(&matrix));
            } else {
                let count = |s: Status| matrix.rows.iter().filter(|r| r.status == s).count();
                println!(
                    "\n{} rows: {} PASS, {} FAIL, {} ORACLE-DECLINED",
                    matrix.rows.len(),
                    count(Status::Pass),
                    count(Status::Fail),
                    count(Status::OracleDeclined)
                );
            }
            if matrix.passed {
                EXIT_OK
            } else {
                EXIT_CLAIM
            }
        }
        Command::Conjecture { trials, common } => {
            let json = common.json;
            let report = conjecture::run(trials, common.seed, |name, outcome| {
                if json {
                    return;
                }
                match outcome {
                    Ok(c) if c.verdict == "CertifiedEqual" => {
                        println!("{name:<20} {} (Der {}, {} samples)", c.verdict, c.der_dim, c.sample_count)
                    }
                    Ok(c) => println!(
                        "{name:<20} *** {} *** (Der {}, bound {:?}) candidate counterexample",
                        c.verdict, c.der_dim, c.bound_dim
                    ),
                    Err(s) => println!("{name:<20} *** skipped: {} ***", s.reason),
                }
            });
            if json {
                print!("{}", to_json(&report));
            } else {
                println!(
                    "\n{} algebras checked, {} counterexample candidates",
                    report.cases.len(),
                    report.candidates.len()
                );
            }
            if report.candidates.is_empty() {
                EXIT_OK
            } else {
                EXIT_CLAIM
            }
        }
    }
}

fn render(r: &RunReport) -> String {
    let mut s = format!("{} ({}, dim {}, over {})\n", r.algebra, r.command, r.dim, r.field);
    let v = &r.results.validation;
    if v.valid {
        s.push_str("  Lie algebra: yes\n");
    } else {
        s.push_str("  Lie algebra: NO\n");
        for [a, b] in &v.antisymmetry_failures {
            s += &format!("    AntisymmetryFailure [{a}, {b}] + [{b}, {a}] != 0\n");
        }
        for [a, b, c] in &v.jacobi_failures {
            s += &format!("    JacobiFailure ({a}, {b}, {c})\n");
        }
    }
    if let Some(a) = &r.results.analysis {
        s += &render_analysis(a);
    }
    s
}

fn render_analysis(a: &Analysis) -> String {
    let mut s = format!(
        "  dim Der = {}, dim ad = {}, dim Z = {}, Der = ad: {}\n  nilpotent: {}, solvable: {}\n",
        a.der_dim, a.ad_dim, a.center_dim, a.equals_inner, a.nilpotent, a.solvable
    );
    if let Some(c) = &a.characteristic_sequence {
        s += &format!("  characteristic sequence: {} (at {}, sampled)\n", c.sequence, c.witness);
    }
    let l = &a.locder;
    s += &format!("  LocDer: {}", l.verdict);
    if let Some(b) = l.bound_dim {
        s += &format!(" (Der {} <= LocDer <= {b}, {} samples)", l.der_dim, l.sample_count);
    }
    if let (Some(e), Some(p)) = (l.exact_dim, l.prime) {
        s += &format!(" (dim LocDer = {e} over F_{p}, dim Der = {})", l.der_dim);
    }
    s.push('\n');
    for c in &a.certificates {
        s += &format!("  certificate ({}), derivation: {}\n", c.kind, c.is_derivation);
        for img in &c.images {
            s += &format!("    {img}\n");
        }
        if let Some(j) = &c.jordan {
            for k in &j.cases {
                let alphas: Vec<String> = k.alphas.iter().map(|(n, v)| format!("{n} = {v}")).collect();
                s += &format!(
                    "    case {}: {}; residual {}; {} spot checks\n",
                    k.region,
                    alphas.join(", "),
                    k.residual.join(", "),
                    k.spot_checks
                );
            }
        }
    }
    match &a.oracle {
        Some(OracleSummary::Exact { prime, der_dim, locder_dim, points_enumerated, .. }) => {
            s += &format!(
            "  mod {prime}: dim Der = {der_dim}, dim LocDer = {locder_dim} ({points_enumerated} projective points)\n"
        )
        }
        Some(OracleSummary::Declined { reason }) => s += &format!("  mod-p cross-check: ORACLE-DECLINED ({reason})\n"),
        None => {}
    }
    s
}
