use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pattern_moments::characters::character_table;
use pattern_moments::moments::moment_report;
use pattern_moments::oracle::{verify_all, Suite, VerifyConfig};
use pattern_moments::partition_algebra::{multiply_diagrams, SetPartitionKK};
use pattern_moments::{CycleType, Error, Guardrails, Permutation, Rational};

const EXIT_USAGE: u8 = 1;
const EXIT_GUARDRAIL: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "patmom",
    version,
    about = "Exact moments of permutation-pattern counts on conjugacy classes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Worker threads; 0 picks automatically.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    #[command(flatten)]
    guard: GuardArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args)]
struct GuardArgs {
    /// Largest d*k the moment pipeline accepts [env: PATMOM_MAX_DK].
    #[arg(long, global = true)]
    max_dk: Option<usize>,
    /// Largest entry count of an explicit matrix [env: PATMOM_MAX_MATRIX].
    #[arg(long, global = true)]
    max_matrix: Option<u64>,
    /// Largest n for oracle sweeps over S_n [env: PATMOM_ORACLE_MAX_N].
    #[arg(long, global = true)]
    oracle_max_n: Option<usize>,
}

#[derive(Args)]
struct JobArgs {
    /// Pattern in one-line notation, e.g. 231 or 10,1,2,...
    #[arg(long)]
    sigma: String,
    /// Moment order.
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Moment polynomial and stable character decomposition.
    Moment(JobArgs),
    /// Evaluate the moment polynomial on a cycle type such as "1^2 2^2".
    Evaluate {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long = "cycle-type")]
        cycle_type: String,
    },
    /// Cross-check the library against brute-force oracles.
    Verify {
        /// Run only these suites (repeatable).
        #[arg(long)]
        suite: Vec<String>,
        /// Cap every oracle sweep at S_n.
        #[arg(long)]
        n_max: Option<usize>,
        /// Emit the JSON report (same as --output json).
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// Partition algebra operations.
    Partalg {
        #[command(subcommand)]
        op: PartalgOp,
    },
    /// Symmetric group characters.
    Char {
        #[command(subcommand)]
        op: CharOp,
    },
}

#[derive(Subcommand)]
enum PartalgOp {
    /// Product of two (k,k)-diagrams, e.g. "{1,2'}|{2,1'}".
    Multiply { p1: String, p2: String },
}

#[derive(Subcommand)]
enum CharOp {
    /// Character table of S_n.
    Table {
        #[arg(long)]
        n: usize,
    },
}

fn rational_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Guardrail { .. } => EXIT_GUARDRAIL,
        Error::Interpolation(_) | Error::Internal(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn guardrails(args: &GuardArgs) -> pattern_moments::Result<Guardrails> {
    let mut g = Guardrails::from_env()?;
    if let Some(v) = args.max_dk {
        g.max_dk = v;
    }
    if let Some(v) = args.max_matrix {
        g.max_matrix_entries = v;
    }
    if let Some(v) = args.oracle_max_n {
        g.oracle_max_n = v;
    }
    Ok(g)
}

fn parse_job(job: &JobArgs) -> pattern_moments::Result<Permutation> {
    if job.d == 0 {
        return Err(Error::Parse("--d must be at least 1".into()));
    }
    Permutation::parse(&job.sigma)
}

fn cmd_moment(job: &JobArgs, guard: &Guardrails, out: Output) -> pattern_moments::Result<String> {
    let sigma = parse_job(job)?;
    let r = moment_report(&sigma, job.d, guard)?;
    let dk = job.d * sigma.n();
    Ok(match out {
        Output::Json => {
            let v = json!({
                "sigma": job.sigma,
                "d": job.d,
                "polynomial": r.polynomial,
                "decomposition": r.decomposition,
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
        Output::Text => {
            let mut s = format!("sigma = {sigma}, d = {}\nM = {}\n", job.d, r.polynomial);
            s += &format!("stable decomposition (n >= {}):\n", 2 * dk);
            for (lam, a) in r.decomposition.nonzero_terms() {
                s += &format!("  {:<12} {}\n", lam.to_string(), a);
            }
            s += &format!("whole-group moment: {}\n", r.whole_group_moment());
            s += &format!("held-out check at n = {}: passed\n", 3 * dk + 1);
            s.pop();
            s
        }
    })
}

fn cmd_evaluate(job: &JobArgs, ct: &str, guard: &Guardrails, out: Output) -> pattern_moments::Result<String> {
    let sigma = parse_job(job)?;
    let ct: CycleType = ct.parse()?;
    let m = pattern_moments::moments::moment_polynomial(&sigma, job.d, guard)?;
    let v = m.evaluate_at(&ct);
    Ok(match out {
        Output::Json => serde_json::to_string_pretty(&json!({
            "sigma": job.sigma,
            "d": job.d,
            "cycle_type": ct.to_string(),
            "n": ct.n(),
            "value": rational_json(&v),
        }))
        .expect("serializable"),
        Output::Text => v.to_string(),
    })
}

fn cmd_multiply(p1: &str, p2: &str, out: Output) -> pattern_moments::Result<String> {
    let a: SetPartitionKK = p1.parse()?;
    let b: SetPartitionKK = p2.parse()?;
    let (c, p3) = multiply_diagrams(&a, &b)?;
    Ok(match out {
        Output::Json => serde_json::to_string_pretty(&json!({
            "k": a.k(),
            "c": c,
            "product": p3.to_string(),
        }))
        .expect("serializable"),
        Output::Text => format!("({a}) * ({b}) = t^{c} ({p3})"),
    })
}

fn cmd_char_table(n: usize, out: Output) -> pattern_moments::Result<String> {
    if n == 0 {
        return Err(Error::Parse("--n must be at least 1".into()));
    }
    let (lambdas, classes, rows) = character_table(n);
    Ok(match out {
        Output::Json => serde_json::to_string_pretty(&json!({
            "n": n,
            "partitions": lambdas.iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>(),
            "classes": classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "values": rows,
        }))
        .expect("serializable"),
        Output::Text => {
            let heads: Vec<String> = classes
                .iter()
                .map(|c| {
                    let l: Vec<String> = c.cycle_lengths().iter().map(u32::to_string).collect();
                    format!("[{}]", l.join(","))
                })
                .collect();
            let width = heads.iter().map(String::len).max().unwrap_or(1).max(4);
            let lw = lambdas.iter().map(|l| l.to_string().len()).max().unwrap_or(1);
            let mut s = format!("{:<lw$}", "");
            for h in &heads {
                s += &format!(" {h:>width$}");
            }
            for (l, row) in lambdas.iter().zip(&rows) {
                s += &format!("\n{:<lw$}", l.to_string());
                for v in row {
                    s += &format!(" {v:>width$}");
                }
            }
            s
        }
    })
}

fn run(cli: Cli) -> Result<String, (u8, String)> {
    let fail = |e: Error| (error_code(&e), format!("error: {e}"));
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| (EXIT_USAGE, format!("error: {e}")))?;
    }
    let guard = guardrails(&cli.guard).map_err(fail)?;
    match &cli.command {
        Command::Moment(job) => cmd_moment(job, &guard, cli.output).map_err(fail),
        Command::Evaluate { job, cycle_type } => {
            cmd_evaluate(job, cycle_type, &guard, cli.output).map_err(fail)
        }
        Command::Partalg {
            op: PartalgOp::Multiply { p1, p2 },
        } => cmd_multiply(p1, p2, cli.output).map_err(fail),
        Command::Char {
            op: CharOp::Table { n },
        } => cmd_char_table(*n, cli.output).map_err(fail),
        Command::Verify {
            suite,
            n_max,
            json,
            seed,
        } => {
            let suites = suite
                .iter()
                .map(|s| s.parse::<Suite>())
                .collect::<pattern_moments::Result<Vec<_>>>()
                .map_err(fail)?;
            let cfg = VerifyConfig {
                suites,
                n_max: *n_max,
                guard,
                seed: *seed,
            };
            let report = verify_all(&cfg);
            let text = if *json || cli.output == Output::Json {
                serde_json::to_string_pretty(&report).expect("serializable")
            } else {
                report.to_string().trim_end().to_string()
            };
            if report.passed() {
                Ok(text)
            } else {
                Err((EXIT_VERIFY, text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            if code == EXIT_VERIFY {
                println!("{msg}");
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
