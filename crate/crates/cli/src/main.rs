use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lecactus::census::{census, cross_validate_all, Census, XvalReport};
use lecactus::classify::{block_checks, cross_validate, BlockCheck, SearchStats};
use lecactus::expr::parse_block_list;
use lecactus::{
    classify_chain_union_sum, is_le_cactus_bruteforce, BruteForceOptions, Error, Expr, Method,
    Poset, Verdict,
};

#[derive(Parser)]
#[command(
    name = "lecactus",
    version,
    about = "Cactus relations on linear extensions of posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the LE-cactus property of a poset by exhaustive search.
    Check {
        /// Poset expression, e.g. "A3 > A1" or "D[2,2] > C2".
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        expr: Option<String>,
        /// Read the poset from a file in the `n <size>` / `cover <a> <b>` format.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Classify an ordinal sum of chain unions block by block.
    Classify {
        /// Blocks from bottom to top, e.g. "D[1,1,1] D[1]".
        blocks: String,
        /// Also run the exhaustive search and report agreement.
        #[arg(long)]
        xval: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Classify every ordinal sum of chain unions of a given size.
    Enumerate {
        size: usize,
        #[arg(long, default_value_t = 9)]
        limit: usize,
        /// Also run the exhaustive search on every poset.
        #[arg(long)]
        xval: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Cross-validate the closed form and the ordered-set-partition model
    /// against exhaustive simulation for all sizes up to MAX_SIZE.
    Xval {
        #[arg(default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 8)]
        limit: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args, Clone, Copy)]
struct SearchArgs {
    /// Refuse posets with more linear extensions than this.
    #[arg(long, default_value_t = 1_000_000)]
    max_extensions: usize,
    /// Worker threads for the exhaustive search; 0 uses all cores.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl SearchArgs {
    fn options(self) -> BruteForceOptions {
        BruteForceOptions {
            max_extensions: self.max_extensions,
            threads: self.threads,
        }
    }
}

/// `println!` into the report buffer.
macro_rules! outln {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    }};
}

fn verdict_exit(is_le_cactus: bool) -> ExitCode {
    if is_le_cactus {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe (e.g. `| head`) is not an error
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut String) -> anyhow::Result<ExitCode> {
    match command {
        Command::Check {
            expr,
            file,
            json,
            search,
        } => check(out, expr, file, json, search),
        Command::Classify {
            blocks,
            xval,
            json,
            search,
        } => classify(out, &blocks, xval, json, search),
        Command::Enumerate {
            size,
            limit,
            xval,
            json,
            search,
        } => enumerate(out, size, limit, xval, json, search),
        Command::Xval {
            max_size,
            limit,
            json,
            search,
        } => xval(out, max_size, limit, json, search),
    }
}

#[derive(Serialize)]
struct CheckReport<'a> {
    poset: &'a str,
    verdict: bool,
    method: Method,
    witness: Option<WitnessReport<'a>>,
    stats: Option<SearchStats>,
}

#[derive(Serialize)]
struct WitnessReport<'a> {
    extension: &'a [usize],
    i: usize,
    j: usize,
    k: usize,
}

fn check_report<'a>(name: &'a str, v: &'a Verdict) -> CheckReport<'a> {
    CheckReport {
        poset: name,
        verdict: v.is_le_cactus,
        method: v.method,
        witness: v.witness.as_ref().map(|w| WitnessReport {
            extension: w.extension.labels(),
            i: w.i,
            j: w.j,
            k: w.k,
        }),
        stats: v.stats,
    }
}

fn describe(is_le_cactus: bool) -> &'static str {
    if is_le_cactus {
        "LE-cactus"
    } else {
        "not LE-cactus"
    }
}

fn print_stats(out: &mut String, stats: &SearchStats) {
    outln!(
        out,
        "size {}, {} linear extensions, {} relation triples",
        stats.size,
        stats.linear_extensions,
        stats.relation_triples
    );
}

fn check(
    out: &mut String,
    expr: Option<String>,
    file: Option<PathBuf>,
    json: bool,
    search: SearchArgs,
) -> anyhow::Result<ExitCode> {
    let (name, poset) = match (expr, file) {
        (Some(src), _) => {
            let e = Expr::parse(&src).with_context(|| format!("cannot parse {src:?}"))?;
            (src, e.build())
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let poset = Poset::parse_text(&text)
                .with_context(|| format!("cannot parse {}", path.display()))?;
            (path.display().to_string(), poset)
        }
        (None, None) => bail!("no poset given"),
    };
    let v = match is_le_cactus_bruteforce(&poset, &search.options()) {
        Err(e @ Error::BudgetExceeded { .. }) => {
            bail!("{e} (raise --max-extensions)")
        }
        other => other?,
    };
    if json {
        outln!(
            out,
            "{}",
            serde_json::to_string_pretty(&check_report(&name, &v))?
        );
    } else {
        outln!(out, "poset: {name}");
        if let Some(stats) = &v.stats {
            print_stats(out, stats);
        }
        outln!(out, "verdict: {} ({})", describe(v.is_le_cactus), v.method);
        if let Some(w) = &v.witness {
            outln!(
                out,
                "witness: extension {:?} is moved by (t_{} q_{{{},{}}})^2",
                w.extension.labels(),
                w.i,
                w.j,
                w.k
            );
        }
    }
    Ok(verdict_exit(v.is_le_cactus))
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    blocks: &'a str,
    sizes: Vec<usize>,
    triples: &'a [BlockCheck],
    verdict: bool,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_force: Option<CheckReport<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn classify(
    out: &mut String,
    src: &str,
    xval: bool,
    json: bool,
    search: SearchArgs,
) -> anyhow::Result<ExitCode> {
    let seq = parse_block_list(src).with_context(|| format!("cannot parse blocks {src:?}"))?;
    let checks = block_checks(&seq, 0);
    let closed = classify_chain_union_sum(&seq)?;
    let brute = if xval {
        Some(cross_validate(&seq, &search.options())?.0)
    } else {
        None
    };
    let agreement = brute
        .as_ref()
        .map(|b| b.is_le_cactus == closed.is_le_cactus);
    let name = seq.to_string();
    if json {
        let report = ClassifyReport {
            blocks: &name,
            sizes: seq.sizes(),
            triples: &checks,
            verdict: closed.is_le_cactus,
            method: closed.method,
            brute_force: brute.as_ref().map(|b| check_report(&name, b)),
            agreement,
        };
        outln!(out, "{}", serde_json::to_string_pretty(&report)?);
    } else {
        outln!(out, "blocks: {name}");
        for c in &checks {
            let t = c.triple;
            outln!(
                out,
                "  ({},{},{})  {:<14} {}",
                t.p,
                t.n,
                t.q,
                c.regime.to_string(),
                if c.compatible {
                    "compatible"
                } else {
                    "incompatible"
                }
            );
        }
        outln!(
            out,
            "verdict: {} ({})",
            describe(closed.is_le_cactus),
            closed.method
        );
        if let Some(b) = &brute {
            outln!(out, "brute force: {}", describe(b.is_le_cactus));
            if let Some(stats) = &b.stats {
                print_stats(out, stats);
            }
            if let Some(w) = &b.witness {
                outln!(
                    out,
                    "witness: extension {:?}, (i, j, k) = ({}, {}, {})",
                    w.extension.labels(),
                    w.i,
                    w.j,
                    w.k
                );
            }
            outln!(
                out,
                "agreement: {}",
                if agreement == Some(true) { "yes" } else { "NO" }
            );
        }
    }
    if agreement == Some(false) {
        bail!("closed form and brute force disagree on {name}");
    }
    Ok(verdict_exit(closed.is_le_cactus))
}

fn print_census(out: &mut String, c: &Census) {
    outln!(
        out,
        "size {}: {} posets, {} LE-cactus, {} not LE-cactus",
        c.size,
        c.posets,
        c.le_cactus,
        c.not_le_cactus
    );
    let width = c.entries.iter().map(|e| e.poset.len()).max().unwrap_or(0);
    for e in &c.entries {
        let brute = match e.brute_force {
            Some(true) => "  brute force: LE-cactus",
            Some(false) => "  brute force: not LE-cactus",
            None => "",
        };
        let line = format!(
            "  {:<width$}  {:<13}{brute}",
            e.poset,
            describe(e.closed_form)
        );
        outln!(out, "{}", line.trim_end());
    }
    if c.entries.iter().any(|e| e.brute_force.is_some()) {
        outln!(out, "disagreements: {}", c.disagreements);
    }
}

fn enumerate(
    out: &mut String,
    size: usize,
    limit: usize,
    xval: bool,
    json: bool,
    search: SearchArgs,
) -> anyhow::Result<ExitCode> {
    if size == 0 {
        bail!("size must be at least 1");
    }
    if size > limit {
        bail!("size {size} exceeds the limit {limit} (raise --limit)");
    }
    let opts = search.options();
    let c = census(size, xval.then_some(&opts))?;
    if json {
        outln!(out, "{}", serde_json::to_string_pretty(&c)?);
    } else {
        print_census(out, &c);
    }
    if c.disagreements > 0 {
        bail!(
            "{} disagreements between closed form and brute force",
            c.disagreements
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn print_xval(out: &mut String, r: &XvalReport) {
    outln!(out, "closed form vs brute force");
    outln!(
        out,
        "{:>4} {:>7} {:>9} {:>10} {:>18} {:>13}",
        "size",
        "posets",
        "le-cactus",
        "extensions",
        "relation-instances",
        "disagreements"
    );
    for row in &r.classifier {
        outln!(
            out,
            "{:>4} {:>7} {:>9} {:>10} {:>18} {:>13}",
            row.size,
            row.posets,
            row.le_cactus,
            row.linear_extensions,
            row.relation_instances,
            row.disagreements
        );
    }
    outln!(out);
    outln!(
        out,
        "ordered set partitions vs sliding promotion and evacuation"
    );
    outln!(
        out,
        "{:>4} {:>10} {:>10} {:>7} {:>13}",
        "size",
        "partitions",
        "extensions",
        "checks",
        "disagreements"
    );
    for row in &r.commutation {
        outln!(
            out,
            "{:>4} {:>10} {:>10} {:>7} {:>13}",
            row.size,
            row.partitions,
            row.linear_extensions,
            row.checks,
            row.disagreements
        );
    }
    outln!(out);
    outln!(out, "total disagreements: {}", r.total_disagreements);
    if let Some(c) = &r.counterexample {
        outln!(
            out,
            "smallest counterexample ({}): {}: {}",
            c.kind,
            c.poset,
            c.detail
        );
    }
}

fn xval(
    out: &mut String,
    max_size: usize,
    limit: usize,
    json: bool,
    search: SearchArgs,
) -> anyhow::Result<ExitCode> {
    if max_size > limit {
        bail!("max size {max_size} exceeds the limit {limit} (raise --limit)");
    }
    let r = cross_validate_all(max_size, &search.options())?;
    if json {
        outln!(out, "{}", serde_json::to_string_pretty(&r)?);
    } else {
        print_xval(out, &r);
    }
    Ok(if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
