//! `cutdom`: compute edge cut domination parameters of a graph, generate the
//! supported graph families, run the verification claim suite, and survey
//! parameter gaps over graph6 streams.

use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cutdom_core::classical::{
    edge_connectivity, edge_cover_number, edge_domination_number, max_matching,
};
use cutdom_core::cutdom::{ct_profile, gamma_ct, DEFAULT_GAMMA_CT_CAP, DEFAULT_PROFILE_CAP};
use cutdom_core::harness::{
    default_corpus, graph6_corpus, run_claims, Caps, ClaimId, ClaimReport, ClaimStatus,
};
use cutdom_core::predicates::Mode;
use cutdom_core::{families, io as gio, EdgeSet, Graph};

#[derive(Parser)]
#[command(
    name = "cutdom",
    version,
    about = "Exact edge cut domination parameters of small graphs, with a claim verification harness"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute parameters of a single graph read from a file or stdin.
    Compute(ComputeArgs),
    /// Generate a family graph and print it in the requested format.
    Gen(GenArgs),
    /// Run the verification claim suite and report per-graph outcomes.
    Check(CheckArgs),
    /// One summary line per graph of a graph6 stream: gamma', lambda,
    /// gamma_ct, and the equality gap flags.
    Survey(SurveyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParamArg {
    #[value(name = "gamma_prime")]
    GammaPrime,
    Lambda,
    Beta1,
    Alpha1,
    #[value(name = "gamma_ct")]
    GammaCt,
    Profile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Literal,
    Strict,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Literal => Mode::Literal,
            ModeArg::Strict => Mode::Strict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckModeArg {
    Literal,
    Strict,
    Both,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input path, or "-" for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Comma-separated list of parameters to compute.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    params: Vec<ParamArg>,
    /// Interpretation mode for the profile parameters.
    #[arg(long, value_enum, default_value_t = ModeArg::Literal)]
    mode: ModeArg,
    /// Also print the witness edge sets.
    #[arg(long)]
    witness: bool,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Order parameter (n); rim size for wheel, smaller side for
    /// complete_bipartite, second clique order for two_cliques.
    #[arg(long)]
    n: Option<usize>,
    /// First side / first clique order for complete_bipartite and
    /// two_cliques.
    #[arg(long)]
    m: Option<usize>,
    /// Connecting path length for two_cliques (1 or 2).
    #[arg(long)]
    len: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Cycle,
    Path,
    Wheel,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    #[value(name = "two_cliques", alias = "two-cliques")]
    TwoCliques,
    Figure1,
    Figure2,
}

#[derive(Args)]
struct CheckArgs {
    /// Largest catalogue order to sweep exhaustively (2..=6).
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(2..=6))]
    max_n: u8,
    /// Also sweep all 853 connected graphs on 7 vertices (slow).
    #[arg(long)]
    with_n7: bool,
    /// Restrict to these claims (comma-separated, e.g. C3,C15).
    #[arg(long, value_delimiter = ',')]
    claims: Option<Vec<String>>,
    /// Verify an external graph6 stream (path or "-") instead of the
    /// built-in corpus.
    #[arg(long)]
    graph6: Option<String>,
    /// Which interpretation mode(s) to run for the mode-sensitive claims.
    #[arg(long, value_enum, default_value_t = CheckModeArg::Both)]
    mode: CheckModeArg,
    /// Emit one JSON object per report instead of the summary table.
    #[arg(long)]
    json: bool,
    /// Include wall-clock milliseconds in JSON reports (breaks byte-for-byte
    /// reproducibility).
    #[arg(long)]
    timings: bool,
    /// Treat counterexamples to soft claims (C5, C13, C14) as failures too.
    #[arg(long)]
    strict_claims: bool,
    /// Worker threads (default: all cores). Output is identical for any
    /// value.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct SurveyArgs {
    /// graph6 stream path, or "-" for stdin.
    #[arg(long, default_value = "-")]
    graph6: String,
    /// Emit one JSON object per graph instead of the table.
    #[arg(long)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Edge-count cap for the ascending gamma_ct search.
    #[arg(long, default_value_t = DEFAULT_GAMMA_CT_CAP)]
    gamma_ct_cap: usize,
    /// Edge-count cap for the full-subset profile scan.
    #[arg(long, default_value_t = DEFAULT_PROFILE_CAP)]
    profile_cap: usize,
}

impl From<CapArgs> for Caps {
    fn from(c: CapArgs) -> Caps {
        Caps {
            gamma_ct_m: c.gamma_ct_cap,
            profile_m: c.profile_cap,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Compute(args) => compute(args),
        Cmd::Gen(args) => gen(args),
        Cmd::Check(args) => check(args),
        Cmd::Survey(args) => survey(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn parse_graph(text: &str, format: Format) -> anyhow::Result<Graph> {
    match format {
        Format::Edgelist => Ok(gio::parse_edgelist(text)?),
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| anyhow!("no graph6 value in input"))?;
            Ok(gio::parse_graph6(line.trim())?)
        }
    }
}

fn caps_hint(err: cutdom_core::Error) -> anyhow::Error {
    if let cutdom_core::Error::CapExceeded { op, m, cap } = &err {
        let flag = if *op == "gamma_ct" { "--gamma-ct-cap" } else { "--profile-cap" };
        return anyhow!("{op}: graph has {m} edges, cap is {cap} (raise with {flag})");
    }
    err.into()
}

// ---------------------------------------------------------------------------
// compute

fn compute(args: ComputeArgs) -> anyhow::Result<ExitCode> {
    let text = read_input(&args.input)?;
    let g = parse_graph(&text, args.format)?;
    let mode: Mode = args.mode.into();
    let caps: Caps = args.caps.into();

    let mut lines: Vec<String> = Vec::new();
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), json!(g.vertex_count()));
    obj.insert("m".into(), json!(g.edge_count()));

    for &param in &args.params {
        match param {
            ParamArg::GammaPrime => {
                let r = edge_domination_number(&g)?;
                push_scalar(&g, &mut lines, &mut obj, "gamma_prime", r.value, &r.witness, args.witness);
            }
            ParamArg::Lambda => {
                let r = edge_connectivity(&g)?;
                push_scalar(&g, &mut lines, &mut obj, "lambda", r.value, &r.witness, args.witness);
            }
            ParamArg::Beta1 => {
                let r = max_matching(&g);
                push_scalar(&g, &mut lines, &mut obj, "beta1", r.value, &r.witness, args.witness);
            }
            ParamArg::Alpha1 => {
                let r = edge_cover_number(&g)?;
                push_scalar(&g, &mut lines, &mut obj, "alpha1", r.value, &r.witness, args.witness);
            }
            ParamArg::GammaCt => {
                let r = gamma_ct(&g, caps.gamma_ct_m).map_err(caps_hint)?;
                push_scalar(&g, &mut lines, &mut obj, "gamma_ct", r.value, &r.witness, args.witness);
            }
            ParamArg::Profile => {
                let p = ct_profile(&g, mode, caps.profile_m).map_err(caps_hint)?;
                lines.push(format!("mode = {}", p.mode.as_str()));
                let mut entry = serde_json::Map::new();
                entry.insert("mode".into(), json!(p.mode.as_str()));
                push_scalar(&g, &mut lines, &mut entry, "gamma_ct", p.gamma_ct.size, &p.gamma_ct.witness, args.witness);
                push_optional(&g, &mut lines, &mut entry, "ir_ct", p.ir_ct.as_ref(), args.witness);
                push_optional(&g, &mut lines, &mut entry, "i_ct", p.i_ct.as_ref(), args.witness);
                push_optional(&g, &mut lines, &mut entry, "beta_ct", p.beta_ct.as_ref(), args.witness);
                push_scalar(&g, &mut lines, &mut entry, "Gamma_ct", p.upper_gamma_ct.size, &p.upper_gamma_ct.witness, args.witness);
                push_optional(&g, &mut lines, &mut entry, "IR_ct", p.upper_ir_ct.as_ref(), args.witness);
                lines.push(format!(
                    "counts: minimal_ecd={} maximal_ec_irredundant={} maximal_ec_independent={}",
                    p.minimal_ecd_count, p.maximal_ec_irredundant_count, p.maximal_ec_independent_count
                ));
                entry.insert(
                    "counts".into(),
                    json!({
                        "minimal_ecd": p.minimal_ecd_count,
                        "maximal_ec_irredundant": p.maximal_ec_irredundant_count,
                        "maximal_ec_independent": p.maximal_ec_independent_count,
                    }),
                );
                obj.insert("profile".into(), serde_json::Value::Object(entry));
            }
        }
    }

    if args.json {
        println!("{}", serde_json::Value::Object(obj));
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn witness_json(g: &Graph, set: &EdgeSet) -> serde_json::Value {
    json!(g.pairs_of(set).iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>())
}

fn witness_text(g: &Graph, set: &EdgeSet) -> String {
    let pairs: Vec<String> = g.pairs_of(set).iter().map(|&(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", pairs.join(", "))
}

fn push_scalar(
    g: &Graph,
    lines: &mut Vec<String>,
    obj: &mut serde_json::Map<String, serde_json::Value>,
    name: &str,
    value: usize,
    witness: &EdgeSet,
    with_witness: bool,
) {
    if with_witness {
        lines.push(format!("{name} = {value}  witness: {}", witness_text(g, witness)));
        obj.insert(name.into(), json!({"value": value, "witness": witness_json(g, witness)}));
    } else {
        lines.push(format!("{name} = {value}"));
        obj.insert(name.into(), json!({"value": value}));
    }
}

fn push_optional(
    g: &Graph,
    lines: &mut Vec<String>,
    obj: &mut serde_json::Map<String, serde_json::Value>,
    name: &str,
    ext: Option<&cutdom_core::Extremum>,
    with_witness: bool,
) {
    match ext {
        Some(e) => push_scalar(g, lines, obj, name, e.size, &e.witness, with_witness),
        None => {
            lines.push(format!("{name} = undefined (empty family)"));
            obj.insert(name.into(), json!({"value": null, "reason": "empty family"}));
        }
    }
}

// ---------------------------------------------------------------------------
// gen

fn gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let need = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| anyhow!("family requires {what} (e.g. --{what} 5)"))
    };
    let g = match args.family {
        FamilyArg::Complete => families::complete(need(args.n, "n")?)?,
        FamilyArg::Cycle => families::cycle(need(args.n, "n")?)?,
        FamilyArg::Path => families::path(need(args.n, "n")?)?,
        FamilyArg::Wheel => families::wheel(need(args.n, "n")?)?,
        FamilyArg::CompleteBipartite => {
            families::complete_bipartite(need(args.m, "m")?, need(args.n, "n")?)?
        }
        FamilyArg::TwoCliques => families::two_cliques(
            need(args.m, "m")?,
            need(args.n, "n")?,
            need(args.len, "len")?,
        )?,
        FamilyArg::Figure1 => families::figure1().0,
        FamilyArg::Figure2 => families::figure2().0,
    };
    match args.format {
        Format::Edgelist => print!("{}", gio::write_edgelist(&g)),
        Format::Graph6 => println!("{}", gio::write_graph6(&g)?),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// check

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .context("building worker pool")?;
            Ok(pool.install(f))
        }
    }
}

fn check(args: CheckArgs) -> anyhow::Result<ExitCode> {
    let caps: Caps = args.caps.into();

    let claims: Vec<ClaimId> = match &args.claims {
        None => ClaimId::ALL.to_vec(),
        Some(names) => {
            let mut out = Vec::new();
            for name in names {
                let id = ClaimId::parse(name)
                    .ok_or_else(|| anyhow!("unknown claim '{name}' (expected C1..C15)"))?;
                if !out.contains(&id) {
                    out.push(id);
                }
            }
            out
        }
    };

    let corpus = match &args.graph6 {
        Some(path) => {
            let text = read_input(path)?;
            let lines = text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.to_string()))
                .collect::<Vec<_>>();
            graph6_corpus(lines)?
        }
        None => default_corpus(args.max_n as usize, args.with_n7)?,
    };

    let reports = with_pool(args.jobs, || {
        let mut reports: Vec<ClaimReport> = Vec::new();
        if args.mode != CheckModeArg::Strict {
            reports.extend(run_claims(&claims, &corpus, Mode::Literal, &caps));
        }
        let strict_claims: Vec<ClaimId> = claims
            .iter()
            .copied()
            .filter(|c| c.mode_sensitive() || args.mode == CheckModeArg::Strict)
            .collect();
        if args.mode != CheckModeArg::Literal {
            // in `both` mode only the mode-sensitive claims run twice; when
            // strict-only is requested, everything runs once under strict
            let list: Vec<ClaimId> = if args.mode == CheckModeArg::Both {
                claims.iter().copied().filter(|c| c.mode_sensitive()).collect()
            } else {
                strict_claims
            };
            reports.extend(run_claims(&list, &corpus, Mode::Strict, &caps));
        }
        reports
    })?;

    if args.json {
        let mut stdout = std::io::stdout().lock();
        for r in &reports {
            writeln!(stdout, "{}", r.to_json(args.timings))?;
        }
    } else {
        print_check_table(&reports);
    }

    let hard_failures = reports
        .iter()
        .filter(|r| r.status == ClaimStatus::Counterexample && r.claim.is_hard())
        .count();
    let soft_failures = reports
        .iter()
        .filter(|r| r.status == ClaimStatus::Counterexample && !r.claim.is_hard())
        .count();

    let summary = format!(
        "{} report(s); hard counterexamples: {hard_failures}; soft counterexamples: {soft_failures}",
        reports.len()
    );
    if args.json {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }

    if hard_failures > 0 || (args.strict_claims && soft_failures > 0) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn print_check_table(reports: &[ClaimReport]) {
    println!("{:<6} {:<8} {:>8} {:>9} {:>16} {:>8}", "claim", "mode", "checked", "verified", "counterexamples", "skipped");
    let mut keys: Vec<(ClaimId, Option<Mode>)> = Vec::new();
    for r in reports {
        let key = (r.claim, r.mode);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    for (claim, mode) in keys {
        let group: Vec<&ClaimReport> = reports
            .iter()
            .filter(|r| r.claim == claim && r.mode == mode)
            .collect();
        let verified = group.iter().filter(|r| r.status == ClaimStatus::Verified).count();
        let counter = group.iter().filter(|r| r.status == ClaimStatus::Counterexample).count();
        let skipped = group.len() - verified - counter;
        println!(
            "{:<6} {:<8} {:>8} {:>9} {:>16} {:>8}",
            claim.as_str(),
            mode.map_or("-", Mode::as_str),
            group.len(),
            verified,
            counter,
            skipped
        );
    }
    let counterexamples: Vec<&ClaimReport> = reports
        .iter()
        .filter(|r| r.status == ClaimStatus::Counterexample)
        .collect();
    const SHOWN: usize = 20;
    for r in counterexamples.iter().take(SHOWN) {
        println!(
            "counterexample: {} [{}] on {}: {}",
            r.claim.as_str(),
            r.mode.map_or("-", Mode::as_str),
            r.graph_id,
            r.values
        );
    }
    if counterexamples.len() > SHOWN {
        println!(
            "... and {} more counterexample(s); use --json for the full list",
            counterexamples.len() - SHOWN
        );
    }
}

// ---------------------------------------------------------------------------
// survey

fn survey(args: SurveyArgs) -> anyhow::Result<ExitCode> {
    use rayon::prelude::*;

    let caps: Caps = args.caps.into();
    let text = read_input(&args.graph6)?;
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    struct Row {
        line: usize,
        g6: String,
        outcome: Result<RowData, String>,
    }
    struct RowData {
        n: usize,
        m: usize,
        status: Option<String>, // skip reason when Some
        gp: usize,
        lambda: usize,
        ct: usize,
        alpha1: usize,
    }

    let rows: Vec<Row> = with_pool(args.jobs, || {
        lines
            .par_iter()
            .map(|(line_no, raw)| {
                let value = raw.strip_prefix(">>graph6<<").unwrap_or(raw);
                if value.is_empty() {
                    return Row {
                        line: *line_no,
                        g6: raw.clone(),
                        outcome: Err("empty graph6 value".into()),
                    };
                }
                let g = match gio::parse_graph6(value) {
                    Ok(g) => g,
                    Err(e) => {
                        let msg = match e {
                            cutdom_core::Error::Parse { msg, .. } => msg,
                            other => other.to_string(),
                        };
                        return Row {
                            line: *line_no,
                            g6: value.to_string(),
                            outcome: Err(msg),
                        };
                    }
                };
                let (n, m) = (g.vertex_count(), g.edge_count());
                let skip = if n < 2 {
                    Some("skip(single-vertex)".to_string())
                } else if !g.is_connected() {
                    Some("skip(disconnected)".to_string())
                } else if m > caps.gamma_ct_m {
                    Some(format!("skip(cap m={m})"))
                } else {
                    None
                };
                if let Some(status) = skip {
                    return Row {
                        line: *line_no,
                        g6: value.to_string(),
                        outcome: Ok(RowData {
                            n,
                            m,
                            status: Some(status),
                            gp: 0,
                            lambda: 0,
                            ct: 0,
                            alpha1: 0,
                        }),
                    };
                }
                let gp = edge_domination_number(&g).expect("connected with an edge");
                let lambda = edge_connectivity(&g).expect("connected");
                let ct = gamma_ct(&g, caps.gamma_ct_m).expect("under cap");
                let beta1 = max_matching(&g);
                Row {
                    line: *line_no,
                    g6: value.to_string(),
                    outcome: Ok(RowData {
                        n,
                        m,
                        status: None,
                        gp: gp.value,
                        lambda: lambda.value,
                        ct: ct.value,
                        alpha1: n - beta1.value,
                    }),
                }
            })
            .collect()
    })?;

    let mut stdout = std::io::stdout().lock();
    if !args.json {
        writeln!(
            stdout,
            "{:<20} {:>3} {:>3} {:>11} {:>6} {:>8}  {:<5} {:<5} {:<8} {}",
            "graph6", "n", "m", "gamma_prime", "lambda", "gamma_ct", "gp=ct", "l=ct", "ct=a1-1", "status"
        )?;
    }
    let mut errors = 0usize;
    for row in &rows {
        match &row.outcome {
            Err(msg) => {
                errors += 1;
                eprintln!("line {}: {}", row.line, msg);
            }
            Ok(d) => {
                if args.json {
                    let value = match &d.status {
                        Some(status) => json!({
                            "graph6": row.g6, "n": d.n, "m": d.m, "status": status,
                        }),
                        None => json!({
                            "graph6": row.g6, "n": d.n, "m": d.m, "status": "ok",
                            "gamma_prime": d.gp, "lambda": d.lambda, "gamma_ct": d.ct,
                            "gp_eq_ct": d.gp == d.ct,
                            "lambda_eq_ct": d.lambda == d.ct,
                            "ct_eq_alpha1_minus_1": d.ct + 1 == d.alpha1,
                        }),
                    };
                    writeln!(stdout, "{value}")?;
                } else {
                    match &d.status {
                        Some(status) => writeln!(
                            stdout,
                            "{:<20} {:>3} {:>3} {:>11} {:>6} {:>8}  {:<5} {:<5} {:<8} {}",
                            row.g6, d.n, d.m, "-", "-", "-", "-", "-", "-", status
                        )?,
                        None => writeln!(
                            stdout,
                            "{:<20} {:>3} {:>3} {:>11} {:>6} {:>8}  {:<5} {:<5} {:<8} {}",
                            row.g6,
                            d.n,
                            d.m,
                            d.gp,
                            d.lambda,
                            d.ct,
                            yesno(d.gp == d.ct),
                            yesno(d.lambda == d.ct),
                            yesno(d.ct == d.alpha1 - 1),
                            "ok"
                        )?,
                    }
                }
            }
        }
    }
    if errors > 0 {
        eprintln!("{errors} line(s) could not be decoded");
    }
    Ok(ExitCode::SUCCESS)
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
