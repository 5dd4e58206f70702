//! Command-line surface: emit term streams, run verification suites, and
//! produce the reconciliation report.
//!
//! All values print as exact integers or `num/den` rationals — never floats —
//! and every command is byte-deterministic for fixed arguments.
//! Counterexamples found by `verify` are findings, not failures: only
//! operational errors (bad arguments, unwritable output) exit non-zero.

use anyhow::{anyhow, bail, Context, Result};
use cartan_horadam::horadam::{preset, HoradamParams};
use cartan_horadam::json::{compact, ToJson};
use cartan_horadam::report::{build_report, render_json, render_markdown, run_suite, SuiteKind};
use cartan_horadam::report::VerifySummary;
use cartan_horadam::sequences::cw_terms;
use cartan_horadam::spinor::spinor_terms;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "cartan-horadam",
    version,
    about = "Exact Horadam recurrences, their four-unit lifting, and reconciliation of quoted constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of the scalar, lifted, or spinor stream of one parameter row.
    Seq(SeqArgs),
    /// Run a verification suite and print its summary.
    Verify(VerifyArgs),
    /// Emit the full reconciliation report.
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Scalar,
    Cartan,
    Spinor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Binet,
    Identities,
    Genfunc,
    All,
    None,
}

impl From<Suite> for SuiteKind {
    fn from(s: Suite) -> Self {
        match s {
            Suite::Binet => SuiteKind::Binet,
            Suite::Identities => SuiteKind::Identities,
            Suite::Genfunc => SuiteKind::Genfunc,
            Suite::All => SuiteKind::All,
            Suite::None => SuiteKind::None,
        }
    }
}

#[derive(Args)]
struct SeqArgs {
    /// Built-in parameter row, or "custom" together with --p --q --a --b.
    #[arg(long)]
    preset: Option<String>,
    /// Recurrence coefficient of the previous term (custom row).
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    /// Recurrence coefficient of the term before that (custom row).
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    /// Initial term H_0 (custom row).
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    /// Initial term H_1 (custom row).
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i64>,
    /// Stream to print.
    #[arg(long, value_enum, default_value_t = Kind::Scalar)]
    kind: Kind,
    /// Half-open index range, written "from..to".
    #[arg(long)]
    range: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Report(args) => cmd_report(args),
    }
}

// ── seq ─────────────────────────────────────────────────────────────────────

fn cmd_seq(args: SeqArgs) -> Result<()> {
    let params = resolve_params(&args)?;
    let (from, to) = parse_range(&args.range)?;
    let rendered = match args.kind {
        Kind::Scalar => render_scalar(&params, from, to, args.format),
        Kind::Cartan => render_cartan(&params, from, to, args.format),
        Kind::Spinor => render_spinor(&params, from, to, args.format),
    };
    emit(&rendered, args.out.as_deref())
}

fn resolve_params(args: &SeqArgs) -> Result<HoradamParams> {
    let custom = [args.p, args.q, args.a, args.b];
    let given = custom.iter().filter(|v| v.is_some()).count();
    let wants_custom =
        args.preset.as_deref() == Some("custom") || (args.preset.is_none() && given > 0);
    if wants_custom {
        if given != 4 {
            bail!("a custom row needs all four of --p, --q, --a, --b");
        }
        return Ok(HoradamParams::new(
            args.p.unwrap(),
            args.q.unwrap(),
            args.a.unwrap(),
            args.b.unwrap(),
        ));
    }
    if given > 0 {
        bail!("--preset cannot be combined with custom parameters (use --preset custom)");
    }
    match args.preset.as_deref() {
        Some(name) => Ok(preset(name)?),
        None => bail!("pass --preset <name>, or --preset custom with --p --q --a --b"),
    }
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (from, to) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("range must be written from..to, got {s:?}"))?;
    let from: u64 = from
        .parse()
        .map_err(|_| anyhow!("invalid range start {from:?}"))?;
    let to: u64 = to
        .parse()
        .map_err(|_| anyhow!("invalid range end {to:?}"))?;
    if from >= to {
        bail!("empty range {s:?}: the range is half-open and needs from < to");
    }
    Ok((from, to))
}

/// One table in the three output formats: `header` names the columns and
/// each row is already rendered cell-wise.
fn table(header: &[&str], rows: Vec<Vec<String>>, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Markdown => {
            let mut out = format!("| {} |\n", header.join(" | "));
            out.push_str(&format!(
                "|{}\n",
                " --- |".repeat(header.len())
            ));
            for row in rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            out
        }
        Format::Json => unreachable!("json output bypasses the table renderer"),
    }
}

fn json_array(values: Vec<Value>) -> String {
    let mut out = Value::Array(values).to_string();
    out.push('\n');
    out
}

fn render_scalar(params: &HoradamParams, from: u64, to: u64, format: Format) -> String {
    let terms = params.terms(to as usize);
    let window = &terms[from as usize..];
    match format {
        Format::Json => json_array(window.iter().map(ToJson::to_json).collect()),
        _ => table(
            &["n", "value"],
            window
                .iter()
                .enumerate()
                .map(|(k, v)| vec![(from + k as u64).to_string(), v.to_string()])
                .collect(),
            format,
        ),
    }
}

fn render_cartan(params: &HoradamParams, from: u64, to: u64, format: Format) -> String {
    let terms = cw_terms(params, from, to);
    match format {
        Format::Json => json_array(terms.iter().map(ToJson::to_json).collect()),
        _ => table(
            &["n", "s", "i", "j", "k"],
            terms
                .iter()
                .enumerate()
                .map(|(k, cw)| {
                    let mut row = vec![(from + k as u64).to_string()];
                    row.extend(cw.coords().iter().map(|c| c.to_string()));
                    row
                })
                .collect(),
            format,
        ),
    }
}

fn render_spinor(params: &HoradamParams, from: u64, to: u64, format: Format) -> String {
    let terms = spinor_terms(params, from, to);
    match format {
        Format::Json => json_array(terms.iter().map(ToJson::to_json).collect()),
        Format::Csv => table(
            &["n", "c1_re", "c1_im", "c2_re", "c2_im"],
            terms
                .iter()
                .enumerate()
                .map(|(k, phi)| {
                    vec![
                        (from + k as u64).to_string(),
                        compact(&phi.c1.re),
                        compact(&phi.c1.im),
                        compact(&phi.c2.re),
                        compact(&phi.c2.im),
                    ]
                })
                .collect(),
            Format::Csv,
        ),
        Format::Markdown => table(
            &["n", "c1", "c2"],
            terms
                .iter()
                .enumerate()
                .map(|(k, phi)| {
                    vec![
                        (from + k as u64).to_string(),
                        compact(&phi.c1),
                        compact(&phi.c2),
                    ]
                })
                .collect(),
            Format::Markdown,
        ),
    }
}

// ── verify ──────────────────────────────────────────────────────────────────

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let summary = run_suite(args.suite.into());
    let rendered = match args.format {
        Format::Json => pretty(&summary.to_json()),
        Format::Markdown => verify_markdown(&summary),
        Format::Csv => verify_csv(&summary),
    };
    emit(&rendered, args.out.as_deref())
}

/// Items carry either a plain label or identity coordinates; fold both into
/// one display label.
fn item_label(item: &Value) -> String {
    if let Some(label) = item["item"].as_str() {
        return label.to_string();
    }
    format!(
        "{} ({}) [{}]",
        item["identity"].as_str().unwrap_or("?"),
        item["preset"].as_str().unwrap_or("?"),
        item["coordinate"].as_str().unwrap_or("?"),
    )
}

fn item_witness(item: &Value) -> String {
    match &item["witness"] {
        Value::Null => String::new(),
        w => w.to_string(),
    }
}

fn verify_markdown(summary: &VerifySummary) -> String {
    let mut out = format!(
        "# Verification: {}\n\ntotal: {}\nverified: {}\n\n",
        summary.suite, summary.total, summary.verified
    );
    out.push_str("| item | status | witness |\n| --- | --- | --- |\n");
    for item in &summary.items {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            item_label(item).replace('|', "\\|"),
            item["status"].as_str().unwrap_or("?"),
            item_witness(item).replace('|', "\\|"),
        ));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verify_csv(summary: &VerifySummary) -> String {
    let mut out = String::from("item,status,witness\n");
    for item in &summary.items {
        out.push_str(&format!(
            "{},{},{}\n",
            csv_field(&item_label(item)),
            item["status"].as_str().unwrap_or("?"),
            csv_field(&item_witness(item)),
        ));
    }
    out
}

// ── report ──────────────────────────────────────────────────────────────────

fn cmd_report(args: ReportArgs) -> Result<()> {
    let rendered = match args.format {
        Format::Json => render_json(&build_report()),
        Format::Markdown => render_markdown(&build_report()),
        Format::Csv => bail!("the report renders as json or markdown only"),
    };
    emit(&rendered, args.out.as_deref())
}

// ── output ──────────────────────────────────────────────────────────────────

fn pretty(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("value serializes");
    out.push('\n');
    out
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}
