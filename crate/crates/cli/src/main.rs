//! Command-line front end: batch parameter computation, isomorph-free
//! enumeration, theorem verification, and minimal-obstruction mining.
//!
//! Exit codes: 0 all verified/computed, 1 a verification found a
//! counterexample, 2 input or configuration error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graph_params::enumerate::MAX_ENUMERATION_ORDER;
use graph_params::perfection::theorems::{verify_theorem, TheoremId, TheoremReport};
use graph_params::perfection::{minimal_obstructions, ParamSelector, ProfileCache};
use graph_params::{
    canonical_key, emit_graph6, enumerate_graphs, enumerate_up_to, full_profile,
    parse_graph6_lines, Graph, ParameterProfile, PatternCatalog,
};

#[derive(Parser)]
#[command(
    name = "graph-params",
    version,
    about = "Exact graph parameters, class recognizers, hereditary-equality verification, and obstruction mining for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for parallel sweeps (0 = one per CPU).
    #[arg(long, global = true, default_value_t = 0, env = "GRAPH_PARAMS_WORKERS")]
    workers: usize,

    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "GRAPH_PARAMS_FORMAT")]
    format: Format,

    /// Pattern catalog file overriding the built-in one.
    #[arg(long, global = true, env = "GRAPH_PARAMS_PATTERNS")]
    patterns: Option<PathBuf>,

    /// Profile cache file, loaded before the run and saved after.
    #[arg(long, global = true, env = "GRAPH_PARAMS_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all nine parameters for each graph6 line of the input.
    Params {
        /// graph6 input file, one graph per line.
        #[arg(long, env = "GRAPH_PARAMS_INPUT")]
        input: PathBuf,
    },
    /// One canonical graph6 line per isomorphism class of the given order.
    Enumerate {
        /// Graph order (1..=8); the class count goes to stderr.
        #[arg(long, env = "GRAPH_PARAMS_MAX_ORDER")]
        max_order: usize,
        /// Use the graphs of this graph6 file as the source instead of
        /// generating: they are canonicalized, deduplicated, and sorted.
        #[arg(long, env = "GRAPH_PARAMS_INPUT")]
        input: Option<PathBuf>,
    },
    /// Verify a registered statement over all graphs up to a given order.
    Verify {
        /// Theorem id (T1, T1b, T2, T3, T3b, T4, T5, T6, T7, T8, T9,
        /// CHAINS, HADWIGER, FALSIFY) or "all" for every expected one.
        #[arg(long, env = "GRAPH_PARAMS_THEOREM")]
        theorem: String,
        /// Largest graph order swept (1..=8).
        #[arg(long, env = "GRAPH_PARAMS_MAX_ORDER")]
        max_order: usize,
        /// Sweep tier: "full" caps the two largest-family sweeps at order
        /// 7, "extended" lets them reach order 8.
        #[arg(long, value_enum, default_value_t = Tier::Full, env = "GRAPH_PARAMS_TIER")]
        tier: Tier,
        /// Verify over the graphs of this graph6 file instead of the
        /// enumerated universe; every graph must fit within --max-order.
        #[arg(long, env = "GRAPH_PARAMS_INPUT")]
        input: Option<PathBuf>,
    },
    /// Mine the minimal graphs on which two parameters differ.
    Obstructions {
        /// First parameter id (omega, chi, hadwiger, psi, alpha, b, B,
        /// grundy, pseudo_grundy).
        a: String,
        /// Second parameter id, distinct from the first.
        b: String,
        /// Largest graph order mined (1..=8).
        #[arg(long, env = "GRAPH_PARAMS_MAX_ORDER")]
        max_order: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Tier {
    Full,
    Extended,
}

/// Orders T8 and T9 are allowed to sweep per tier; 3P3 (order 9) stays
/// covered by the targeted checks in every tier.
fn tier_cap(tier: Tier) -> usize {
    match tier {
        Tier::Full => 7,
        Tier::Extended => 8,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let catalog = match &cli.patterns {
        Some(path) => PatternCatalog::load(path).map_err(|e| e.to_string())?,
        None => PatternCatalog::builtin(),
    };
    let cache = match &cli.cache {
        Some(path) if path.exists() => ProfileCache::load(path).map_err(|e| e.to_string())?,
        _ => ProfileCache::new(),
    };

    let code = match &cli.command {
        Command::Params { input } => cmd_params(&cli, input)?,
        Command::Enumerate { max_order, input } => {
            cmd_enumerate(&cli, *max_order, input.as_deref())?
        }
        Command::Verify {
            theorem,
            max_order,
            tier,
            input,
        } => cmd_verify(
            &cli,
            &catalog,
            &cache,
            theorem,
            *max_order,
            *tier,
            input.as_deref(),
        )?,
        Command::Obstructions { a, b, max_order } => {
            cmd_obstructions(&cli, &catalog, &cache, a, b, *max_order)?
        }
    };

    if let Some(path) = &cli.cache {
        cache.save(path).map_err(|e| e.to_string())?;
    }
    Ok(code)
}

#[derive(Serialize)]
struct ParamRecord {
    line: usize,
    n: usize,
    graph6: String,
    #[serde(flatten)]
    profile: ParameterProfile,
}

#[derive(Serialize)]
struct ParamError {
    line: usize,
    error: String,
}

const PARAM_COLUMNS: &str = "n,graph6,omega,chi,hadwiger,psi,alpha,b,B,grundy,pseudo_grundy";

fn cmd_params(cli: &Cli, input: &std::path::Path) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
    let mut records: Vec<ParamRecord> = Vec::new();
    let mut errors: Vec<ParamError> = Vec::new();
    let parsed = parse_graph6_lines(&text);
    let profiles: Vec<_> = {
        use rayon::prelude::*;
        parsed
            .par_iter()
            .map(|(line, result)| match result {
                Ok(g) => full_profile(g)
                    .map(|p| (*line, *g, p))
                    .map_err(|e| (*line, e.to_string())),
                Err(e) => Err((*line, e.to_string())),
            })
            .collect()
    };
    for item in profiles {
        match item {
            Ok((line, g, profile)) => records.push(ParamRecord {
                line,
                n: g.n(),
                graph6: emit_graph6(&g),
                profile,
            }),
            Err((line, error)) => errors.push(ParamError { line, error }),
        }
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => {
            let doc = serde_json::json!({ "records": records, "errors": errors });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                .map_err(|e| e.to_string())?;
        }
        Format::Csv | Format::Text => {
            let sep = if cli.format == Format::Csv { "," } else { " " };
            writeln!(out, "{}", PARAM_COLUMNS.replace(',', sep)).map_err(|e| e.to_string())?;
            for r in &records {
                let v = r.profile.values();
                let fields: Vec<String> = std::iter::once(r.n.to_string())
                    .chain(std::iter::once(r.graph6.clone()))
                    .chain(v.iter().map(|x| x.to_string()))
                    .collect();
                writeln!(out, "{}", fields.join(sep)).map_err(|e| e.to_string())?;
            }
            for e in &errors {
                eprintln!("line {}: {}", e.line, e.error);
            }
        }
    }
    Ok(if errors.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_enumerate(
    cli: &Cli,
    order: usize,
    input: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    check_order(order)?;
    let graphs = match input {
        None => enumerate_graphs(order).map_err(|e| e.to_string())?,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let mut keys = std::collections::BTreeSet::new();
            for (line, parsed) in parse_graph6_lines(&text) {
                let g = parsed.map_err(|e| format!("{}:{line}: {e}", path.display()))?;
                if g.n() > order {
                    return Err(format!(
                        "{}:{line}: graph order {} exceeds --max-order {order}",
                        path.display(),
                        g.n()
                    ));
                }
                keys.insert(canonical_key(&g));
            }
            keys.iter()
                .map(|k| graph_params::parse_graph6(k.as_str()).expect("keys are valid graph6"))
                .collect()
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => {
            let lines: Vec<String> = graphs.iter().map(emit_graph6).collect();
            let doc = serde_json::json!({ "order": order, "count": lines.len(), "graphs": lines });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                .map_err(|e| e.to_string())?;
        }
        Format::Csv | Format::Text => {
            for g in &graphs {
                writeln!(out, "{}", emit_graph6(g)).map_err(|e| e.to_string())?;
            }
        }
    }
    eprintln!("order {order}: {} isomorphism classes", graphs.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cli: &Cli,
    catalog: &PatternCatalog,
    cache: &ProfileCache,
    theorem: &str,
    max_order: usize,
    tier: Tier,
    input: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    check_order(max_order)?;
    let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::all_expected()
    } else {
        vec![theorem
            .parse()
            .map_err(|e: graph_params::PerfectionError| e.to_string())?]
    };

    // Universe per effective order, built once.
    let file_universe: Option<Vec<Graph>> = match input {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let mut graphs = Vec::new();
            for (line, parsed) in parse_graph6_lines(&text) {
                let g = parsed.map_err(|e| format!("{}:{line}: {e}", path.display()))?;
                if g.n() > max_order {
                    return Err(format!(
                        "{}:{line}: graph order {} exceeds --max-order {max_order}",
                        path.display(),
                        g.n()
                    ));
                }
                graphs.push(g);
            }
            Some(graphs)
        }
    };
    let mut universes: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();

    let mut reports = Vec::new();
    for id in ids {
        let effective_order = match id {
            TheoremId::T8 | TheoremId::T9 => max_order.min(tier_cap(tier)),
            _ => max_order,
        };
        let universe: &[Graph] = match &file_universe {
            Some(graphs) => graphs,
            None => universes
                .entry(effective_order)
                .or_insert_with(|| enumerate_up_to(effective_order).expect("order checked")),
        };
        let report = verify_theorem(id, universe, catalog, cache).map_err(|e| e.to_string())?;
        eprintln!(
            "{}: {} ({} graphs, {:.2}s)",
            report.theorem,
            if report.verified {
                "verified"
            } else {
                "counterexamples found"
            },
            report.graph_count,
            report.elapsed.as_secs_f64()
        );
        reports.push(report);
    }

    render_reports(cli, &reports)?;
    Ok(if reports.iter().all(|r| r.verified) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_reports(cli: &Cli, reports: &[TheoremReport]) -> Result<(), String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => {
            let doc = serde_json::json!({ "reports": reports });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                .map_err(|e| e.to_string())?;
        }
        Format::Csv => {
            writeln!(out, "theorem,max_order,graphs,counterexamples,verified")
                .map_err(|e| e.to_string())?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.theorem, r.max_order, r.graph_count, r.counterexamples_total, r.verified
                )
                .map_err(|e| e.to_string())?;
            }
        }
        Format::Text => {
            for r in reports {
                render_text_report(&mut out, r).map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(())
}

fn render_text_report(out: &mut impl Write, r: &TheoremReport) -> std::io::Result<()> {
    writeln!(out, "theorem {}: {}", r.theorem, r.statement)?;
    writeln!(
        out,
        "  universe: orders 1..={}, {} graphs",
        r.max_order, r.graph_count
    )?;
    writeln!(out, "  catalog: sha256 {}", r.catalog_sha256)?;
    for t in &r.targeted {
        writeln!(
            out,
            "  targeted {} [{} vs {}]: {} ({})",
            t.pattern,
            t.a,
            t.b,
            if t.holds { "ok" } else { "FAILED" },
            t.detail
        )?;
    }
    if r.verified {
        writeln!(out, "  verdict: VERIFIED (0 counterexamples)")?;
    } else {
        writeln!(
            out,
            "  verdict: FAILED ({} counterexamples, showing {})",
            r.counterexamples_total,
            r.counterexamples.len()
        )?;
        for ce in &r.counterexamples {
            writeln!(out, "    {} (order {}): {}", ce.graph6, ce.order, ce.detail)?;
            for s in &ce.sides {
                match &s.witness {
                    Some(w) => writeln!(out, "      {}: {} [{}]", s.side, s.holds, w)?,
                    None => writeln!(out, "      {}: {}", s.side, s.holds)?,
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ObstructionRecord {
    order: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    a_value: u32,
    b_value: u32,
}

fn cmd_obstructions(
    cli: &Cli,
    catalog: &PatternCatalog,
    cache: &ProfileCache,
    a: &str,
    b: &str,
    max_order: usize,
) -> Result<ExitCode, String> {
    check_order(max_order)?;
    let a: ParamSelector = a
        .parse()
        .map_err(|e: graph_params::PerfectionError| e.to_string())?;
    let b: ParamSelector = b
        .parse()
        .map_err(|e: graph_params::PerfectionError| e.to_string())?;
    if a == b {
        return Err(format!("parameters must be distinct, got {a} twice"));
    }
    let mined = minimal_obstructions(a, b, max_order, cache).map_err(|e| e.to_string())?;

    // Name mined graphs after catalog patterns when isomorphic.
    let names: BTreeMap<String, String> = catalog
        .patterns()
        .iter()
        .map(|p| (canonical_key(p.graph()).into_string(), p.name().to_string()))
        .collect();
    let records: Vec<ObstructionRecord> = mined
        .iter()
        .map(|g| {
            let key = canonical_key(g).into_string();
            let profile = cache.profile_of(g).map_err(|e| e.to_string())?;
            Ok(ObstructionRecord {
                order: g.n(),
                graph6: emit_graph6(g),
                name: names.get(&key).cloned(),
                a_value: a.value_in(&profile),
                b_value: b.value_in(&profile),
            })
        })
        .collect::<Result<_, String>>()?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => {
            let doc = serde_json::json!({
                "a": a.id(),
                "b": b.id(),
                "max_order": max_order,
                "catalog_sha256": catalog.sha256_hex(),
                "obstructions": records,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                .map_err(|e| e.to_string())?;
        }
        Format::Csv => {
            writeln!(out, "order,graph6,name,{},{}", a.id(), b.id()).map_err(|e| e.to_string())?;
            for r in &records {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.order,
                    r.graph6,
                    r.name.as_deref().unwrap_or(""),
                    r.a_value,
                    r.b_value
                )
                .map_err(|e| e.to_string())?;
            }
        }
        Format::Text => {
            writeln!(
                out,
                "minimal obstructions for {} = {} up to order {max_order}: {} found",
                a.id(),
                b.id(),
                records.len()
            )
            .map_err(|e| e.to_string())?;
            for r in &records {
                let name = r.name.as_deref().unwrap_or("-");
                writeln!(
                    out,
                    "  order={} graph6={} name={} {}={} {}={}",
                    r.order,
                    r.graph6,
                    name,
                    a.id(),
                    r.a_value,
                    b.id(),
                    r.b_value
                )
                .map_err(|e| e.to_string())?;
            }
        }
    }
    eprintln!("mined {} minimal obstructions", records.len());
    Ok(ExitCode::SUCCESS)
}

fn check_order(order: usize) -> Result<(), String> {
    if order == 0 || order > MAX_ENUMERATION_ORDER {
        return Err(format!(
            "--max-order {order} out of range (must be 1..={MAX_ENUMERATION_ORDER})"
        ));
    }
    Ok(())
}
