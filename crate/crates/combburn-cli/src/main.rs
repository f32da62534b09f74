//! `combburn`: burning numbers of comb graphs from the command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 the answer needs more search
//! budget than allowed, 3 I/O failure. Defaults for worker threads and the
//! oracle node budget come from flags, then the `COMBBURN_THREADS`
//! environment variable (threads only), then an optional key=value config
//! file (`--config PATH`, falling back to `./combburn.conf` when present).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use combburn::asymptotics::{empirical_limit, exponent_csv_header, exponent_csv_row};
use combburn::burn::sequence_from_comb_json;
use combburn::comb::CombVertex;
use combburn::sweep::{sweep_csv, sweep_stats, HalfPlane};
use combburn::{
    bnc_bound, bounds, burning_number_exact, burning_number_exact_witness, comb, disprove_k, hat_b,
    normalize, regime, simulate_strict, t_greedy, verify_cover, BurnError, BurningSequence,
    CombError, CombGraph, FormulaError, GeneralGraph, GraphError, GreedyError, NormalizeError,
    OracleConfig, OracleError, SweepSummary,
};
use std::env;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "combburn", version, about = "Burning numbers of comb graphs")]
struct Cli {
    /// Config file with key=value defaults (threads, oracle_node_budget).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bounds, regime, and greedy horizon of one comb.
    Burn {
        n: u64,
        m: u64,
        /// Spine tooth the greedy strategy anchors at.
        #[arg(long, default_value_t = 1)]
        s: u64,
        /// Also run the exact branch-and-bound search.
        #[arg(long)]
        exact_oracle: bool,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// CSV of greedy horizon vs the square-root bound over a full grid.
    Sweep {
        n_max: u64,
        m_max: u64,
        out: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check a burning sequence against an edge-list graph.
    Verify { graph: PathBuf, seq: PathBuf },
    /// Near-balanced table of hat_b, b, and the square-root bound.
    Table { n_min: u64, n_max: u64 },
    /// Sample random comb exponents and compare them with the limit profile.
    Random {
        k: u32,
        trials: u64,
        seed: u64,
        out: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Rewrite a covering sequence into canonical form, one step per line.
    Normalize { n: u64, m: u64, seq: PathBuf },
    /// Exact burning number of an edge-list graph, as one line of JSON.
    Oracle {
        graph: PathBuf,
        /// Refute this horizon instead of searching for the optimum.
        #[arg(long, value_name = "K")]
        disprove: Option<u64>,
        /// Node budget for the search.
        #[arg(long)]
        budget: Option<u64>,
    },
}

enum CliError {
    Invalid(String),
    Budget(String),
    /// Exit 2 where the outcome already went to stdout.
    BudgetReported,
    Io(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Invalid(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            CliError::Budget(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::BudgetReported => ExitCode::from(2),
            CliError::Io(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

macro_rules! invalid_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}

invalid_from!(
    CombError,
    FormulaError,
    GreedyError,
    BurnError,
    GraphError,
    NormalizeError
);

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// A downstream reader that stops early (`combburn table 1 500 | head`)
/// must kill us silently, the way the default SIGPIPE disposition does,
/// not through a printing panic.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let defaults = load_defaults(cli.config.as_deref())?;
    match cli.cmd {
        Cmd::Burn {
            n,
            m,
            s,
            exact_oracle,
            budget,
        } => cmd_burn(n, m, s, exact_oracle, budget, &defaults),
        Cmd::Sweep {
            n_max,
            m_max,
            out,
            threads,
        } => cmd_sweep(n_max, m_max, &out, threads, &defaults),
        Cmd::Verify { graph, seq } => cmd_verify(&graph, &seq),
        Cmd::Table { n_min, n_max } => cmd_table(n_min, n_max),
        Cmd::Random {
            k,
            trials,
            seed,
            out,
            threads,
        } => cmd_random(k, trials, seed, &out, threads, &defaults),
        Cmd::Normalize { n, m, seq } => cmd_normalize(n, m, &seq),
        Cmd::Oracle {
            graph,
            disprove,
            budget,
        } => cmd_oracle(&graph, disprove, budget, &defaults),
    }
}

#[derive(Debug, Default, PartialEq, Eq)]
struct Defaults {
    threads: Option<usize>,
    oracle_node_budget: Option<u64>,
}

fn load_defaults(explicit: Option<&Path>) -> Result<Defaults, CliError> {
    let path = match explicit {
        Some(p) => p.to_owned(),
        None => {
            let fallback = Path::new("combburn.conf");
            if !fallback.exists() {
                return Ok(Defaults::default());
            }
            fallback.to_owned()
        }
    };
    let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
    parse_defaults(&text).map_err(|msg| CliError::Invalid(format!("{}: {msg}", path.display())))
}

fn parse_defaults(text: &str) -> Result<Defaults, String> {
    let mut d = Defaults::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "threads" => {
                d.threads = Some(value.parse().map_err(|_| {
                    format!("line {}: threads must be a non-negative integer", i + 1)
                })?);
            }
            "oracle_node_budget" => {
                d.oracle_node_budget = Some(value.parse().map_err(|_| {
                    format!(
                        "line {}: oracle_node_budget must be a positive integer",
                        i + 1
                    )
                })?);
            }
            other => return Err(format!("line {}: unknown key {other}", i + 1)),
        }
    }
    Ok(d)
}

/// Flag beats COMBBURN_THREADS beats the config file; 0 or absent means
/// every core.
fn resolve_threads(flag: Option<usize>, defaults: &Defaults) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match env::var("COMBBURN_THREADS") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Invalid(format!(
                "COMBBURN_THREADS must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(env::VarError::NotPresent) => Ok(defaults.threads),
        Err(e) => Err(CliError::Invalid(format!("COMBBURN_THREADS: {e}"))),
    }
}

fn build_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))
}

fn resolve_budget(flag: Option<u64>, defaults: &Defaults) -> u64 {
    flag.or(defaults.oracle_node_budget)
        .unwrap_or_else(|| OracleConfig::default().node_budget)
}

fn cmd_burn(
    n: u64,
    m: u64,
    s: u64,
    exact_oracle: bool,
    budget: Option<u64>,
    defaults: &Defaults,
) -> Result<(), CliError> {
    let g = comb(n, m)?;
    let bb = bounds(n, m)?;
    let t = t_greedy(n, m, s)?;
    let bnc = bnc_bound(n, m);
    println!(
        "comb({n}, {m}): {} vertices, regime {}",
        g.vertex_count(),
        regime(n, m)
    );
    match bb.exact {
        Some(e) => println!("bounds: lower {}, upper {}, exact {e}", bb.lower, bb.upper),
        None => println!(
            "bounds: lower {}, upper {}, exact unknown",
            bb.lower, bb.upper
        ),
    }
    println!("bnc bound: {bnc}");
    println!("t_greedy (s = {s}): {t}");
    let tight = match bb.exact {
        Some(e) if e == bnc => "yes",
        Some(_) => "no",
        None => "unknown",
    };
    println!("bnc tight: {tight}");
    if exact_oracle {
        let cfg = OracleConfig {
            node_budget: resolve_budget(budget, defaults),
            ..OracleConfig::default()
        };
        match burning_number_exact(&g.to_general(), &cfg) {
            Ok(k) => println!("oracle: {k}"),
            Err(OracleError::BudgetExhausted { budget }) => {
                println!("oracle: unknown (node budget {budget} exhausted)");
                return Err(CliError::BudgetReported);
            }
            Err(e) => return Err(CliError::Budget(e.to_string())),
        }
    }
    Ok(())
}

/// Peak row = the largest fixed coordinate among the cells attaining the max
/// gap; the range spans the free coordinate within that row.
fn summary_line(s: &SweepSummary) -> String {
    let ties = s.argmax.len();
    let (row, free): (u64, Vec<u64>) = match s.half {
        HalfPlane::Spine => {
            let row = s
                .argmax
                .iter()
                .map(|&(n, _)| n)
                .max()
                .expect("non-empty argmax");
            (
                row,
                s.argmax
                    .iter()
                    .filter(|&&(n, _)| n == row)
                    .map(|&(_, m)| m)
                    .collect(),
            )
        }
        HalfPlane::Tooth => {
            let row = s
                .argmax
                .iter()
                .map(|&(_, m)| m)
                .max()
                .expect("non-empty argmax");
            (
                row,
                s.argmax
                    .iter()
                    .filter(|&&(_, m)| m == row)
                    .map(|&(n, _)| n)
                    .collect(),
            )
        }
    };
    let coord = match s.half {
        HalfPlane::Spine => ("n", "m"),
        HalfPlane::Tooth => ("m", "n"),
    };
    format!(
        "{} half: max gap {}, peak row {} = {} with {} pairs, {} in [{}, {}] ({} ties across the half)",
        s.half,
        s.max_gap,
        coord.0,
        row,
        free.len(),
        coord.1,
        free.first().expect("non-empty row"),
        free.last().expect("non-empty row"),
        ties,
    )
}

fn cmd_sweep(
    n_max: u64,
    m_max: u64,
    out: &Path,
    threads: Option<usize>,
    defaults: &Defaults,
) -> Result<(), CliError> {
    if n_max < 1 || m_max < 1 {
        return Err(CliError::Invalid(format!(
            "sweep needs positive grid sides, got {n_max} x {m_max}"
        )));
    }
    let pool = build_pool(resolve_threads(threads, defaults)?)?;
    let (csv, (spine, tooth)) =
        pool.install(|| (sweep_csv(n_max, m_max), sweep_stats(n_max, m_max)));
    fs::write(out, csv).map_err(|e| io_err(out, e))?;
    println!("wrote {} rows to {}", n_max * m_max, out.display());
    println!("{}", summary_line(&spine));
    println!("{}", summary_line(&tooth));
    Ok(())
}

fn read_graph(path: &Path) -> Result<GeneralGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    GeneralGraph::from_edge_list_str(&text)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn cmd_verify(graph: &Path, seq: &Path) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(seq).map_err(|e| io_err(seq, e))?;
    let raw: BurningSequence = serde_json::from_str(&text)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", seq.display())))?;
    // Deserialization skips the constructor, so re-validate the horizon.
    let seq = BurningSequence::new(raw.k, raw.centers)?;
    let cover = verify_cover(&g, &seq)?;
    if cover.covered {
        let strict = simulate_strict(&g, &seq)?;
        let label = match strict.is_strict_valid() {
            Some(true) => "strict",
            _ => "not strict",
        };
        println!("verdict: covered, {label}");
    } else {
        println!("verdict: not covered");
        let ids: Vec<String> = cover.uncovered.iter().map(u64::to_string).collect();
        println!("uncovered: {}", ids.join(" "));
    }
    Ok(())
}

fn cmd_table(n_min: u64, n_max: u64) -> Result<(), CliError> {
    if n_min < 1 || n_min > n_max {
        return Err(CliError::Invalid(format!(
            "table range must satisfy 1 <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    println!(
        "{:>5} {:>5} {:>6} {:>6} {:>6}",
        "n", "m", "hat_b", "b", "bnc"
    );
    for n in n_min..=n_max {
        for dm in -5i64..=5 {
            let m = n as i64 + dm;
            if m < 1 {
                continue;
            }
            let m = m as u64;
            let b = bounds(n, m)?
                .exact
                .expect("the near-balanced band is exact");
            let bnc = bnc_bound(n, m);
            let mark = if bnc > b { "  *" } else { "" };
            println!(
                "{:>5} {:>5} {:>6} {:>6} {:>6}{}",
                n,
                m,
                hat_b(n, m),
                b,
                bnc,
                mark
            );
        }
    }
    Ok(())
}

fn cmd_random(
    k: u32,
    trials: u64,
    seed: u64,
    out: &Path,
    threads: Option<usize>,
    defaults: &Defaults,
) -> Result<(), CliError> {
    if !(1..=60).contains(&k) {
        return Err(CliError::Invalid(format!("k must be in 1..=60, got {k}")));
    }
    if trials < 1 {
        return Err(CliError::Invalid("trials must be at least 1".into()));
    }
    let pool = build_pool(resolve_threads(threads, defaults)?)?;
    let dev = pool.install(|| empirical_limit(k, trials, seed));
    let mut csv = String::from(exponent_csv_header());
    csv.push('\n');
    for s in &dev.samples {
        csv.push_str(&exponent_csv_row(s));
        csv.push('\n');
    }
    fs::write(out, csv).map_err(|e| io_err(out, e))?;
    println!("k = {k}, trials = {trials}, seed = {seed}");
    println!(
        "max |dev| {:.6}, mean |dev| {:.6}",
        dev.max_abs_dev, dev.mean_abs_dev
    );
    println!("wrote {} rows to {}", dev.samples.len(), out.display());
    Ok(())
}

fn comb_fires(g: &CombGraph, seq: &BurningSequence) -> String {
    let parts: Vec<String> = seq
        .centers
        .iter()
        .map(|&id| g.vertex_from_id(id).to_string())
        .collect();
    parts.join(" ")
}

fn cmd_normalize(n: u64, m: u64, seq: &Path) -> Result<(), CliError> {
    let g = comb(n, m)?;
    let text = fs::read_to_string(seq).map_err(|e| io_err(seq, e))?;
    let seq = sequence_from_comb_json(&g, &text)?;
    let trace = normalize(&g, &seq).map_err(|e| match e {
        NormalizeError::NotCovering { uncovered } => {
            let parts: Vec<String> = uncovered.iter().map(CombVertex::to_string).collect();
            CliError::Invalid(format!(
                "sequence does not cover comb({n}, {m}); uncovered: {}",
                parts.join(" ")
            ))
        }
        other => CliError::Invalid(other.to_string()),
    })?;
    println!(
        "comb({n}, {m}), horizon {}, {} fires",
        seq.k,
        seq.centers.len()
    );
    println!("initial: {}", comb_fires(&g, &trace.initial));
    for (i, (step, snap)) in trace.steps.iter().enumerate() {
        println!("step {} {}: {}", i + 1, step, comb_fires(&g, snap));
    }
    println!(
        "final (after {} rewrites): {}",
        trace.steps.len(),
        comb_fires(&g, trace.final_sequence())
    );
    Ok(())
}

fn cmd_oracle(
    graph: &Path,
    disprove: Option<u64>,
    budget: Option<u64>,
    defaults: &Defaults,
) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let cfg = OracleConfig {
        node_budget: resolve_budget(budget, defaults),
        ..OracleConfig::default()
    };
    let budget_exhausted = || {
        println!("{{\"status\":\"budget_exhausted\"}}");
        CliError::BudgetReported
    };
    match disprove {
        Some(k) => {
            if k < 1 {
                return Err(CliError::Invalid(
                    "horizon to disprove must be positive".into(),
                ));
            }
            match disprove_k(&g, k, &cfg) {
                Ok(d) => println!("{{\"k\":{k},\"disproved\":{d}}}"),
                Err(OracleError::BudgetExhausted { .. }) => return Err(budget_exhausted()),
                Err(e) => return Err(CliError::Budget(e.to_string())),
            }
        }
        None => match burning_number_exact_witness(&g, &cfg) {
            Ok((k, w)) => {
                let ids: Vec<String> = w.centers.iter().map(u64::to_string).collect();
                println!("{{\"k\":{k},\"witness\":[{}]}}", ids.join(","));
            }
            Err(OracleError::BudgetExhausted { .. }) => return Err(budget_exhausted()),
            Err(e) => return Err(CliError::Budget(e.to_string())),
        },
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing_accepts_comments_and_rejects_unknown_keys() {
        let d =
            parse_defaults("# defaults\nthreads = 4\noracle_node_budget=1000 # cap\n\n").unwrap();
        assert_eq!(
            d,
            Defaults {
                threads: Some(4),
                oracle_node_budget: Some(1000)
            }
        );
        assert!(parse_defaults("budget=1")
            .unwrap_err()
            .contains("unknown key"));
        assert!(parse_defaults("threads four")
            .unwrap_err()
            .contains("key=value"));
        assert!(parse_defaults("threads=four")
            .unwrap_err()
            .contains("line 1"));
    }

    #[test]
    fn summary_lines_name_the_peak_row() {
        let spine = SweepSummary {
            half: HalfPlane::Spine,
            max_gap: 3,
            argmax: vec![(7, 2), (9, 4), (9, 6)],
        };
        assert_eq!(
            summary_line(&spine),
            "n >= m half: max gap 3, peak row n = 9 with 2 pairs, m in [4, 6] (3 ties across the half)"
        );
        let tooth = SweepSummary {
            half: HalfPlane::Tooth,
            max_gap: 0,
            argmax: vec![(1, 1)],
        };
        assert_eq!(
            summary_line(&tooth),
            "n <= m half: max gap 0, peak row m = 1 with 1 pairs, n in [1, 1] (1 ties across the half)"
        );
    }
}
