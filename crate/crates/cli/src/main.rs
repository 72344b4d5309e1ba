//! Command-line harness binding generators, counters, goodness, splitting,
//! extraction, and regularization into reproducible experiments.
//!
//! Exit codes: 0 on success, 1 on failed extraction or verification, 2 on
//! input errors. All randomness flows from `--seed` through the generator
//! named in every artifact header; re-running a command with identical inputs
//! reproduces its outputs byte for byte (bench wall-clock columns excepted).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num::BigRational;
use smalldense::counting::{self, CountReport, StructureKind};
use smalldense::exponent::erdos_renyi_exponent;
use smalldense::extraction::{
    certify, extract, parse_certificate, write_certificate, ExtractMode, ExtractParams,
    ExtractResult,
};
use smalldense::generate::{generate, GraphKind};
use smalldense::goodness::{build_aux, classify_goodness, AuxKind};
use smalldense::graph::Graph;
use smalldense::io::{load_graph, write_graph};
use smalldense::regularization::regularize;
use smalldense::rng::artifact_header;
use smalldense::splitting::{split_with_retries, SplitKind};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "smalldense",
    version,
    about = "Structure counting and small dense subgraph extraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Count a structure and print one CSV row.
    Count(CountArgs),
    /// Classify vertex (or structure) goodness and write the table as CSV.
    Goodness(GoodnessArgs),
    /// Find a validated random partition and write it with its summary.
    Split(SplitArgs),
    /// Run the layered extraction pipeline and write a certificate.
    Extract(ExtractArgs),
    /// Re-certify a stored certificate against a stored graph.
    Verify(VerifyArgs),
    /// Compute the deletion-method exponent of a graph family.
    Exponent(ExponentArgs),
    /// Two-step degree-class regularization of a bipartite graph.
    Regularize(RegularizeArgs),
    /// Run an extraction sweep and emit one CSV row per run.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// gnp | gnm | complete | complete-bipartite | cycle | hypercube-q3 | h-st
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Edge count for gnm.
    #[arg(long)]
    edges: Option<usize>,
    /// Side sizes for complete-bipartite.
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Block sizes for h-st.
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct CountArgs {
    /// star_t | biclique_tt | t_matching | cherry_A | cherry_B | c4 | h_1t |
    /// spider_t | h_st
    #[arg(long)]
    structure: String,
    #[arg(long, default_value_t = 2)]
    t: u32,
    /// First block size for h_st (defaults to t).
    #[arg(long)]
    s: Option<u32>,
    #[arg(long = "cap-aux", default_value_t = counting::DEFAULT_CAP)]
    cap_aux: u64,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GoodnessArgs {
    #[arg(long)]
    h: u32,
    /// Classify t-structures of the auxiliary graph instead of host vertices.
    #[arg(long)]
    t: Option<u32>,
    /// even | odd (aux kind when --t is given).
    #[arg(long, default_value = "even")]
    mode: String,
    #[arg(long = "cap-aux", default_value_t = counting::DEFAULT_CAP)]
    cap_aux: u64,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long, default_value_t = 2)]
    t: u32,
    #[arg(long)]
    h: u32,
    #[arg(long)]
    theta: u64,
    #[arg(long, default_value = "even")]
    mode: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-attempts", default_value_t = 20)]
    max_attempts: u32,
    #[arg(long = "cap-aux", default_value_t = counting::DEFAULT_CAP)]
    cap_aux: u64,
    #[arg(long = "in")]
    input: PathBuf,
    /// Partition file destination.
    #[arg(long = "out")]
    out: PathBuf,
    /// Validation summary CSV destination.
    #[arg(long = "validation-out")]
    validation_out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    mode: String,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    theta: u64,
    /// Collision threshold override; omit for the mode default.
    #[arg(long)]
    collision: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-attempts", default_value_t = 20)]
    max_attempts: u32,
    #[arg(long = "cap-aux", default_value_t = counting::DEFAULT_CAP)]
    cap_aux: u64,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args)]
struct ExponentArgs {
    /// Family file: a count line, then that many edge-list blocks.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct RegularizeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Sweep file: one run per line,
    /// `graph-path mode t r theta collision seed max-attempts`
    /// (`collision` may be `default`).
    #[arg(long)]
    sweep: PathBuf,
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Count(a) => cmd_count(a),
        Command::Goodness(a) => cmd_goodness(a),
        Command::Split(a) => cmd_split(a),
        Command::Extract(a) => cmd_extract(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exponent(a) => cmd_exponent(a),
        Command::Regularize(a) => cmd_regularize(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match run {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_graph(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode> {
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| anyhow!("--{name} required"));
    let kind = match a.kind.as_str() {
        "gnp" => GraphKind::Gnp {
            n: need(a.n, "n")?,
            p: a.p.ok_or_else(|| anyhow!("--p required"))?,
        },
        "gnm" => GraphKind::Gnm {
            n: need(a.n, "n")?,
            m: need(a.edges, "edges")?,
        },
        "complete" => GraphKind::Complete { n: need(a.n, "n")? },
        "complete-bipartite" => GraphKind::CompleteBipartite {
            a: a.a.ok_or_else(|| anyhow!("--a required"))?,
            b: a.b.ok_or_else(|| anyhow!("--b required"))?,
        },
        "cycle" => GraphKind::Cycle { n: need(a.n, "n")? },
        "hypercube-q3" => GraphKind::HypercubeQ3,
        "h-st" => GraphKind::Hst {
            s: a.s.ok_or_else(|| anyhow!("--s required"))?,
            t: a.t.ok_or_else(|| anyhow!("--t required"))?,
        },
        other => bail!("unknown kind `{other}`"),
    };
    let g = generate(kind, a.seed)?;
    let text = write_graph(&g, Some(&artifact_header(Some(a.seed))))?;
    fs::write(&a.out, text).with_context(|| format!("writing {}", a.out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(a: CountArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let cap = a.cap_aux;
    let t = a.t;
    let report = match a.structure.as_str() {
        "star_t" => CountReport {
            structure: StructureKind::StarT,
            t,
            n: g.n(),
            m: g.m(),
            count: counting::count_stars(&g, t),
            bound: None,
            hypotheses_met: false,
        },
        "biclique_tt" => counting::count_bicliques(&g, t, cap)?,
        "t_matching" => counting::count_t_matchings(&g, t)?,
        "cherry_A" | "cherry_B" | "c4" => cherry_report(&g, &a.structure)?,
        "h_1t" => counting::h1t_report(&g, t, cap)?,
        "spider_t" => CountReport {
            structure: StructureKind::SpiderT,
            t,
            n: g.n(),
            m: g.m(),
            count: counting::count_spiders(&g, t)?,
            bound: None,
            hypotheses_met: false,
        },
        "h_st" => CountReport {
            structure: StructureKind::HST,
            t,
            n: g.n(),
            m: g.m(),
            count: counting::count_hst(&g, a.s.unwrap_or(t), t, cap)?,
            bound: None,
            hypotheses_met: false,
        },
        other => bail!("unknown structure `{other}`"),
    };
    let content = format!("{}\n{}\n", CountReport::csv_header(), report.csv_row());
    emit(&a.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

/// Cherry and C4 counts with their convexity bounds; C4 on a host without a
/// declared bipartition counts via codegrees and reports no bound.
fn cherry_report(g: &Graph, which: &str) -> Result<CountReport> {
    let n = g.n();
    let m = g.m();
    if !g.has_bipartition() {
        if which == "c4" {
            return Ok(CountReport {
                structure: StructureKind::C4,
                t: 2,
                n,
                m,
                count: counting::count_c4(g),
                bound: None,
                hypotheses_met: false,
            });
        }
        bail!("cherry counts need a declared bipartition");
    }
    let (w_a, w_b, s) = counting::count_cherries_and_c4(g)?;
    let a_len = g.side_a()?.len() as u64;
    let b_len = g.side_b()?.len() as u64;
    let e = m as u64;
    // hypothesis E >= n^{3/2}, compared squared
    let hyp = (e as u128) * (e as u128) >= (n as u128).pow(3);
    let big = |x: u64| BigRational::from_integer(x.into());
    let (structure, count, bound) = match which {
        "cherry_A" => (
            StructureKind::CherryA,
            w_a,
            big(e) * big(e) / big(4 * a_len),
        ),
        "cherry_B" => (
            StructureKind::CherryB,
            w_b,
            big(e) * big(e) / big(4 * b_len),
        ),
        _ => (
            StructureKind::C4,
            s,
            big(e).pow(4) / (big(32) * big(a_len).pow(2) * big(b_len).pow(2)),
        ),
    };
    Ok(CountReport {
        structure,
        t: 2,
        n,
        m,
        count,
        bound: Some(bound),
        hypotheses_met: hyp,
    })
}

fn cmd_goodness(a: GoodnessArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let csv = match a.t {
        None => classify_goodness(&g, a.h)?.csv(None),
        Some(t) => {
            let kind = match a.mode.as_str() {
                "even" => AuxKind::BicliqueAux,
                "odd" => AuxKind::HttAux,
                other => bail!("unknown mode `{other}`"),
            };
            let aux = build_aux(&g, t, kind, a.cap_aux)?;
            classify_goodness(&aux.adjacency, a.h)?.csv(Some(&aux.structures))
        }
    };
    emit(&a.out, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_split(a: SplitArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let kind = match a.mode.as_str() {
        "even" => SplitKind::Even,
        "odd" => SplitKind::Odd,
        other => bail!("unknown mode `{other}`"),
    };
    let outcome = split_with_retries(
        &g,
        a.t,
        a.h,
        a.theta,
        kind,
        a.max_attempts,
        a.seed,
        a.cap_aux,
    )?;
    match outcome {
        Ok((partition, validation)) => {
            let text = partition.serialize(Some(&artifact_header(Some(a.seed))));
            fs::write(&a.out, text).with_context(|| format!("writing {}", a.out.display()))?;
            if let Some(vpath) = &a.validation_out {
                fs::write(vpath, validation.csv())
                    .with_context(|| format!("writing {}", vpath.display()))?;
            }
            println!(
                "split ok: attempt {} of {}, {} families recorded",
                partition.attempts_used,
                a.max_attempts,
                validation.records.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(fail) => {
            eprintln!("split failed: {fail}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_extract(a: ExtractArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let params = ExtractParams {
        mode: ExtractMode::parse(&a.mode)?,
        t: a.t,
        r: a.r,
        theta: a.theta,
        seed: a.seed,
        max_split_attempts: a.max_attempts,
        collision_threshold: a.collision,
        cap: a.cap_aux,
    };
    let outcome = extract(&g, &params)?;
    match &outcome.result {
        ExtractResult::Certified(cert) => {
            let text = write_certificate(cert, Some(&artifact_header(Some(a.seed))));
            emit(&a.out, &text)?;
            let m = &cert.measured;
            println!(
                "certified: order {}, min degree {}, avg degree {}, radius {}",
                m.order, m.min_degree, m.avg_degree, m.radius
            );
            Ok(ExitCode::SUCCESS)
        }
        ExtractResult::Failed(reason) => {
            eprintln!(
                "extraction failed: {} (layers {:?}, split attempts {})",
                reason.as_str(),
                outcome.stats.layer_sizes,
                outcome.stats.split_attempts
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let text =
        fs::read_to_string(&a.cert).with_context(|| format!("reading {}", a.cert.display()))?;
    let cert = parse_certificate(&text, &g).map_err(|e| anyhow!("{}: {e}", a.cert.display()))?;
    let report = certify(&g, &cert)?;
    for check in &report.checks {
        println!(
            "{}: {}",
            check.name,
            if check.pass { "pass" } else { "FAIL" }
        );
    }
    println!(
        "measured: order {}, min degree {}, avg degree {}, radius {}",
        report.measured.order,
        report.measured.min_degree,
        report.measured.avg_degree,
        report.measured.radius
    );
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_exponent(a: ExponentArgs) -> Result<ExitCode> {
    let text =
        fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let family = smalldense::io::load_family(&text)?;
    let fe = erdos_renyi_exponent(&family)?;
    println!("gamma = {}", fe.gamma);
    println!("c = {}", fe.c_exponent);
    println!("exponent = {}", fe.lower_bound_exponent);
    println!(
        "witness = member {} subgraph with {} vertices, {} edges",
        fe.witness_member,
        fe.witness.n(),
        fe.witness.m()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_regularize(a: RegularizeArgs) -> Result<ExitCode> {
    let g = read_graph(&a.input)?;
    let res = regularize(&g)?;
    let text = res.serialize(Some(&artifact_header(None)))?;
    emit(&a.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

struct BenchSpec {
    graph: PathBuf,
    mode: ExtractMode,
    t: u32,
    r: u32,
    theta: u64,
    collision: Option<u64>,
    seed: u64,
    max_attempts: u32,
}

fn parse_sweep(text: &str) -> Result<Vec<BenchSpec>> {
    let mut specs = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 8 {
            bail!(
                "sweep line {}: expected 8 fields, got {}",
                ln + 1,
                parts.len()
            );
        }
        specs.push(BenchSpec {
            graph: PathBuf::from(parts[0]),
            mode: ExtractMode::parse(parts[1])?,
            t: parts[2].parse().context("t")?,
            r: parts[3].parse().context("r")?,
            theta: parts[4].parse().context("theta")?,
            collision: if parts[5] == "default" {
                None
            } else {
                Some(parts[5].parse().context("collision")?)
            },
            seed: parts[6].parse().context("seed")?,
            max_attempts: parts[7].parse().context("max-attempts")?,
        })
    }
    Ok(specs)
}

const BENCH_HEADER: &str =
    "n,m,t,r,seed,outcome,certificate_order,certificate_min_or_avg_degree,certificate_radius,wall_time_ms";

fn bench_row(spec: &BenchSpec) -> String {
    let start = Instant::now();
    let run = || -> Result<(Graph, smalldense::extraction::ExtractionOutcome)> {
        let g = read_graph(&spec.graph)?;
        let params = ExtractParams {
            mode: spec.mode,
            t: spec.t,
            r: spec.r,
            theta: spec.theta,
            seed: spec.seed,
            max_split_attempts: spec.max_attempts,
            collision_threshold: spec.collision,
            cap: counting::DEFAULT_CAP,
        };
        let outcome = extract(&g, &params)?;
        Ok((g, outcome))
    };
    match run() {
        Ok((g, outcome)) => {
            let ms = start.elapsed().as_millis();
            match outcome.result {
                ExtractResult::Certified(cert) => {
                    let m = &cert.measured;
                    let deg = match spec.mode {
                        ExtractMode::Even => m.min_degree.to_string(),
                        ExtractMode::Odd => m.avg_degree.to_string(),
                    };
                    format!(
                        "{},{},{},{},{},certified,{},{},{},{ms}",
                        g.n(),
                        g.m(),
                        spec.t,
                        spec.r,
                        spec.seed,
                        m.order,
                        deg,
                        m.radius
                    )
                }
                ExtractResult::Failed(reason) => format!(
                    "{},{},{},{},{},{},,,,{ms}",
                    g.n(),
                    g.m(),
                    spec.t,
                    spec.r,
                    spec.seed,
                    reason.as_str()
                ),
            }
        }
        Err(err) => {
            let ms = start.elapsed().as_millis();
            let msg = err.to_string().replace([',', '\n'], ";");
            format!(",,{},{},{},error: {msg},,,,{ms}", spec.t, spec.r, spec.seed)
        }
    }
}

/// Rows run in parallel (capped by `DN_THREADS`) but are emitted in sweep
/// order regardless of completion order.
fn cmd_bench(a: BenchArgs) -> Result<ExitCode> {
    let text =
        fs::read_to_string(&a.sweep).with_context(|| format!("reading {}", a.sweep.display()))?;
    let specs = parse_sweep(&text)?;
    let threads = std::env::var("DN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .clamp(1, specs.len().max(1));

    let mut rows: Vec<Option<String>> = (0..specs.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: std::sync::Mutex<Vec<(usize, String)>> = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= specs.len() {
                    break;
                }
                let row = bench_row(&specs[idx]);
                results.lock().unwrap().push((idx, row));
            });
        }
    });
    for (idx, row) in results.into_inner().unwrap() {
        rows[idx] = Some(row);
    }

    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    let mut certified = 0usize;
    for row in rows.into_iter().flatten() {
        if row.contains(",certified,") {
            certified += 1;
        }
        out.push_str(&row);
        out.push('\n');
    }
    out.push_str(&format!(
        "# summary total={} certified={certified}\n",
        specs.len()
    ));
    emit(&a.out, &out)?;
    Ok(ExitCode::SUCCESS)
}
