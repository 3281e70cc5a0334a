//! `okrank`: rank tables, the overpartition correspondence, k-bar ranks,
//! k-conjugation, and the identity verifier, from the command line.
//!
//! Exit codes: 0 success (or all identities equal), 1 verification
//! mismatch, 2 usage error, 3 domain error.

mod cache;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use okrank_core::bijection::{k_conjugate, kbar_rank, over_to_vector, vector_to_over};
use okrank_core::counting::rank_table;
use okrank_core::identity::{list_identities, verify, verify_all};
use okrank_core::partitions::generalized_durfee;
use okrank_core::{Error, Method, Overpartition, Stat, VectorPartition, VerificationReport};

use cache::{Cache, CacheKey};

#[derive(Parser)]
#[command(name = "okrank", version, about = "overpartition rank machinery and q-series identity verification", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a rank table and print it as TSV or JSON.
    Count(CountArgs),
    /// Decompose an overpartition into its vector partition (or back).
    Map(MapArgs),
    /// Print the k-bar rank of an overpartition.
    Rank(RankArgs),
    /// Print the k-conjugate of an overpartition.
    Conjugate(ConjArgs),
    /// Verify one identity or the whole registry.
    Verify(VerifyArgs),
    /// List every registered identity id.
    ListIdentities,
}

#[derive(Args)]
struct CountArgs {
    /// Statistic: n (rank), m (crank), nk, nbar, or nbark.
    #[arg(long)]
    stat: StatArg,
    /// k for the k-statistics.
    #[arg(long)]
    k: Option<u32>,
    /// Largest weight to tabulate.
    #[arg(long)]
    max_n: u32,
    /// Computation route.
    #[arg(long)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Cache directory (defaults to $OKRANK_CACHE when set).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Timing and cache diagnostics on stderr.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct MapArgs {
    /// Overpartition text, e.g. "13,10,9,7o,6,4o,4,4,3,1,1,1".
    #[arg(long)]
    overpartition: Option<String>,
    /// Map a vector partition back to its overpartition.
    #[arg(long, requires = "vector")]
    inverse: bool,
    /// Vector partition JSON (with --inverse).
    #[arg(long)]
    vector: Option<String>,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    overpartition: String,
}

#[derive(Args)]
struct ConjArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    overpartition: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id (see list-identities).
    #[arg(long, conflicts_with = "all")]
    id: Option<String>,
    /// Run every registered identity.
    #[arg(long)]
    all: bool,
    /// Truncation order for --id (the case default when omitted).
    #[arg(long, conflicts_with = "all")]
    order: Option<i64>,
    /// Fraction of each default order for --all.
    #[arg(long, requires = "all")]
    scale: Option<f64>,
    /// Worker threads for --all.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    N,
    M,
    Nk,
    Nbar,
    Nbark,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Gf,
    Enum,
    Multisum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Tab-separated values (plain text for verify).
    Tsv,
    Json,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::N => Stat::N,
            StatArg::M => Stat::M,
            StatArg::Nk => Stat::Nk,
            StatArg::Nbar => Stat::Nbar,
            StatArg::Nbark => Stat::NbarK,
        }
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Gf => Method::Gf,
            MethodArg::Enum => Method::Enum,
            MethodArg::Multisum => Method::Multisum,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::Parse(_) | Error::Validation(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Count(args) => count(args),
        Command::Map(args) => map(args),
        Command::Rank(args) => {
            let lambda: Overpartition = args.overpartition.parse()?;
            println!("{}", kbar_rank(&lambda, args.k)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjugate(args) => {
            let lambda: Overpartition = args.overpartition.parse()?;
            let image = k_conjugate(&over_to_vector(&lambda), args.k)?;
            println!("{}", vector_to_over(&image));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(args),
        Command::ListIdentities => {
            for id in list_identities() {
                println!("{id}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn count(args: CountArgs) -> Result<ExitCode, Error> {
    let stat: Stat = args.stat.into();
    let method: Method = args.method.into();
    let key = CacheKey {
        stat,
        method,
        k: args.k,
        max_n: args.max_n,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let cache = args
        .cache_dir
        .or_else(|| std::env::var_os("OKRANK_CACHE").map(PathBuf::from))
        .and_then(|dir| Cache::open(&dir, args.verbose));

    let started = Instant::now();
    let (table, from_cache) = match cache.as_ref().and_then(|c| c.load(&key)) {
        Some(table) => (table, true),
        None => {
            let table = rank_table(stat, method, args.k, args.max_n)?;
            if let Some(c) = &cache {
                c.store(&key, &table);
            }
            (table, false)
        }
    };
    if args.verbose {
        eprintln!(
            "count {} via {} in {:.1} ms",
            key.address(),
            if from_cache { "cache" } else { "computation" },
            started.elapsed().as_secs_f64() * 1e3
        );
    }
    match args.format {
        Format::Tsv => print!("{}", table.to_tsv()),
        Format::Json => println!("{}", table.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn map(args: MapArgs) -> Result<ExitCode, Error> {
    if args.inverse {
        let json = args.vector.expect("clap enforces --vector with --inverse");
        let vector: VectorPartition = serde_json::from_str(&json)
            .map_err(|e| Error::Parse(format!("bad vector partition JSON: {e}")))?;
        println!("{}", vector_to_over(&vector));
        return Ok(ExitCode::SUCCESS);
    }
    let text = args
        .overpartition
        .ok_or_else(|| Error::Usage("map needs --overpartition (or --inverse --vector)".into()))?;
    let lambda: Overpartition = text.parse()?;
    let vector = over_to_vector(&lambda);
    let mut ranks: BTreeMap<String, i64> = BTreeMap::new();
    for k in 2..=5u32 {
        ranks.insert(k.to_string(), kbar_rank(&lambda, k)?);
    }
    let out = serde_json::json!({
        "overpartition": lambda.to_string(),
        "generalized_durfee": generalized_durfee(&lambda),
        "vector": vector,
        "kbar_ranks": ranks,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let reports: Vec<VerificationReport> = if args.all {
        let jobs = args.jobs.unwrap_or_else(|| {
            std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
        });
        verify_all(args.scale.unwrap_or(1.0), jobs)?
    } else {
        let id = args
            .id
            .ok_or_else(|| Error::Usage("verify needs --id ID or --all".into()))?;
        vec![verify(&id, args.order)?]
    };
    let mut all_equal = true;
    match args.format {
        Format::Json => {
            // one object for --id, an array for --all
            let body = if args.all {
                serde_json::to_string_pretty(&reports).expect("serializable")
            } else {
                serde_json::to_string_pretty(&reports[0]).expect("serializable")
            };
            println!("{body}");
            all_equal = reports.iter().all(|r| r.is_equal());
        }
        Format::Tsv => {
            for r in &reports {
                println!("{}", r.line());
                all_equal &= r.is_equal();
            }
        }
    }
    Ok(if all_equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
