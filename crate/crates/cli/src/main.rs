//! Command-line front end over the ringinv library. Three subcommands:
//! `compute` evaluates one generalized inverse, `verify` checks one identity
//! on given inputs or over a whole finite ring, `search` hunts for violations
//! with chosen hypotheses dropped. Output is plain element literals, or the
//! same data as JSON under `--json`; identical invocations produce identical
//! bytes.
//!
//! Exit codes: 0 on success with no violations, 1 when an inverse is absent
//! or a violation was found, 2 on usage errors, 3 if an internal certificate
//! check failed (a bug in the library, never a property of the input).

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ringinv::{
    drazin_inverse, evaluate_law, group_inverse, invert_along, invert_along_sigma, moore_penrose,
    sweep_law_with, AbsentReason, CentralizerMap, Element, ElementSource, Error, Hypothesis,
    LawId, LawReport, LawSweep, Outcome, Result, RingContext, Verdict, ALL_LAWS,
};
use serde_json::{json, Map, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "ringinv",
    version,
    about = "Exact generalized inverses and identity checking in Z_n and Gaussian-rational matrix rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a generalized inverse of one element
    Compute(ComputeArgs),
    /// Check one identity, on given inputs or exhaustively
    Verify(VerifyArgs),
    /// Enumerate inputs hunting for violations, optionally dropping hypotheses
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpKind {
    /// Inverse along the element given by --d
    InvertAlong,
    /// Group inverse
    Group,
    /// Drazin inverse (output includes the index)
    Drazin,
    /// Moore-Penrose inverse
    MoorePenrose,
}

#[derive(Args)]
struct ComputeArgs {
    /// Ring: zmod:<n> or gqmat:<k>
    #[arg(long)]
    ring: String,
    #[arg(long, value_enum)]
    op: OpKind,
    /// Element to invert
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Alignment element, required by --op invert-along
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    /// Twist the criterion by scaling with this element
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// Emit JSON instead of plain literals
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["exhaustive", "inputs"])))]
struct VerifyArgs {
    /// Ring: zmod:<n> or gqmat:<k>
    #[arg(long)]
    ring: String,
    /// Law identifier, e.g. absorption-cross; see the library docs for the list
    #[arg(long)]
    law: String,
    /// Sweep every input tuple the ring offers (finite rings only)
    #[arg(long)]
    exhaustive: bool,
    /// JSON array of element literals, one per law role
    #[arg(long, allow_hyphen_values = true)]
    inputs: Option<String>,
    /// Scaling element of the twist map; enumerated (exhaustive) or identity
    /// (--inputs) when omitted
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Ring: zmod:<n> or gqmat:<k>
    #[arg(long)]
    ring: String,
    /// Law identifier, e.g. along-sigma-criterion
    #[arg(long)]
    law: String,
    /// Hypothesis to drop while still evaluating the conclusion (repeatable)
    #[arg(long)]
    drop: Vec<String>,
    /// JSON file holding an array of element literals to enumerate instead of
    /// the whole ring; the only option for matrix rings
    #[arg(long)]
    candidates: Option<PathBuf>,
    /// Keep at most this many violation reports (earliest first)
    #[arg(long)]
    bound: Option<usize>,
    /// Pin the twist map to scaling by this element instead of enumerating
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

fn main() {
    if let Ok(v) = std::env::var("RINGINV_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            ringinv::configure_thread_cap(n);
        }
    }
    let cli = Cli::parse();
    let code = match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InternalFormulaMismatch { .. } => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Compute(args) => run_compute(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Search(args) => run_search(args),
    }
}

fn parse_sigma(ring: &RingContext, lit: Option<&str>) -> Result<Option<CentralizerMap>> {
    lit.map(|s| Ok(CentralizerMap::scaling(&ring.parse_element(s)?)))
        .transpose()
}

fn parse_law(s: &str) -> Result<LawId> {
    LawId::parse(s).ok_or_else(|| {
        let known: Vec<&str> = ALL_LAWS.iter().map(|l| l.id()).collect();
        Error::Parse(format!("unknown law {s}; expected one of {}", known.join(", ")))
    })
}

fn run_compute(args: ComputeArgs) -> Result<i32> {
    let ring = RingContext::parse_spec(&args.ring)?;
    let a = ring.parse_element(&args.a)?;
    let sigma = parse_sigma(&ring, args.sigma.as_deref())?;
    if args.op != OpKind::InvertAlong && args.d.is_some() {
        return Err(Error::PreconditionFailed(
            "--d only applies to --op invert-along".into(),
        ));
    }
    match args.op {
        OpKind::InvertAlong => {
            let d_lit = args.d.as_ref().ok_or_else(|| {
                Error::PreconditionFailed("--op invert-along requires --d".into())
            })?;
            let d = ring.parse_element(d_lit)?;
            let out = match &sigma {
                None => invert_along(&a, &d)?,
                Some(s) => invert_along_sigma(&a, &d, s)?,
            };
            match out {
                Outcome::Found(inv) => {
                    if args.json {
                        println!(
                            "{}",
                            json!({
                                "b": inv.b.literal(),
                                "u": inv.u.literal(),
                                "u_inv": inv.u_inv.literal(),
                                "v": inv.v.literal(),
                                "v_inv": inv.v_inv.literal(),
                                "left_witness": inv.left_witness.literal(),
                                "right_witness": inv.right_witness.literal(),
                            })
                        );
                    } else {
                        println!("{}", inv.b.literal());
                    }
                    Ok(0)
                }
                Outcome::Absent(r) => Ok(emit_absent(args.json, r)),
            }
        }
        OpKind::Group => finish_plain(args.json, group_inverse(&a, sigma.as_ref())?),
        OpKind::MoorePenrose => finish_plain(args.json, moore_penrose(&a, sigma.as_ref())?),
        OpKind::Drazin => match drazin_inverse(&a, sigma.as_ref())? {
            Outcome::Found(dr) => {
                if args.json {
                    println!(
                        "{}",
                        json!({
                            "b": dr.inverse.literal(),
                            "index": dr.index,
                            "n_used": dr.n_used,
                        })
                    );
                } else {
                    println!("{}", dr.inverse.literal());
                    println!("index: {}", dr.index);
                }
                Ok(0)
            }
            Outcome::Absent(r) => Ok(emit_absent(args.json, r)),
        },
    }
}

fn finish_plain(json_mode: bool, out: Outcome<Element>) -> Result<i32> {
    match out {
        Outcome::Found(b) => {
            if json_mode {
                println!("{}", json!({ "b": b.literal() }));
            } else {
                println!("{}", b.literal());
            }
            Ok(0)
        }
        Outcome::Absent(r) => Ok(emit_absent(json_mode, r)),
    }
}

fn emit_absent(json_mode: bool, reason: AbsentReason) -> i32 {
    if json_mode {
        println!("{}", json!({ "absent": reason.as_str() }));
    } else {
        println!("absent: {reason}");
    }
    1
}

fn run_verify(args: VerifyArgs) -> Result<i32> {
    let ring = RingContext::parse_spec(&args.ring)?;
    let law = parse_law(&args.law)?;
    let sigma = parse_sigma(&ring, args.sigma.as_deref())?;
    if args.exhaustive {
        let sweep = sweep_law_with(&ElementSource::Ring(ring), law, &[], sigma.as_ref())?;
        emit_sweep(args.json, &sweep, &[]);
        return Ok(i32::from(!sweep.violations.is_empty()));
    }
    let raw = args.inputs.as_deref().expect("clap guarantees one mode");
    let lits: Vec<String> = serde_json::from_str(raw)
        .map_err(|e| Error::Parse(format!("--inputs must be a JSON array of literals: {e}")))?;
    let elems: Vec<Element> = lits
        .iter()
        .map(|s| ring.parse_element(s))
        .collect::<Result<_>>()?;
    let report = evaluate_law(law, &elems, sigma.as_ref(), &[])?;
    if args.json {
        println!("{}", report_json(&report));
    } else {
        println!("law: {}", report.law.id());
        println!("verdict: {}", report.verdict.id());
        if let (Some(l), Some(r)) = (&report.lhs, &report.rhs) {
            println!("lhs: {}", l.literal());
            println!("rhs: {}", r.literal());
        }
        if let Some(c) = &report.certificate {
            println!("detail: {c}");
        }
    }
    Ok(i32::from(report.verdict == Verdict::Violated))
}

fn run_search(args: SearchArgs) -> Result<i32> {
    let ring = RingContext::parse_spec(&args.ring)?;
    let law = parse_law(&args.law)?;
    let sigma = parse_sigma(&ring, args.sigma.as_deref())?;
    let dropped: Vec<Hypothesis> = args
        .drop
        .iter()
        .map(|s| {
            Hypothesis::parse(s).ok_or_else(|| {
                Error::Parse(format!(
                    "unknown hypothesis {s}; those droppable from {} are: {}",
                    law.id(),
                    law.droppable()
                        .iter()
                        .map(|h| h.id())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })
        })
        .collect::<Result<_>>()?;
    let source = match &args.candidates {
        None => ElementSource::Ring(ring.clone()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("--candidates {}: {e}", path.display())))?;
            let lits: Vec<String> = serde_json::from_str(&text).map_err(|e| {
                Error::Parse(format!("--candidates must hold a JSON array of literals: {e}"))
            })?;
            let elems: Vec<Element> = lits
                .iter()
                .map(|s| ring.parse_element(s))
                .collect::<Result<_>>()?;
            ElementSource::Candidates(elems)
        }
    };
    let mut sweep = sweep_law_with(&source, law, &dropped, sigma.as_ref())?;
    if let Some(bound) = args.bound {
        sweep.violations.truncate(bound);
    }
    emit_sweep(args.json, &sweep, &dropped);
    Ok(i32::from(!sweep.violations.is_empty()))
}

fn emit_sweep(json_mode: bool, sweep: &LawSweep, dropped: &[Hypothesis]) {
    if json_mode {
        let violations: Vec<Value> = sweep.violations.iter().map(report_json).collect();
        println!(
            "{}",
            json!({
                "law": sweep.law.id(),
                "dropped": dropped.iter().map(|h| h.id()).collect::<Vec<_>>(),
                "checked": sweep.checked,
                "hypotheses_met": sweep.hypotheses_met,
                "holds": sweep.holds,
                "violations": violations,
            })
        );
        return;
    }
    println!("law: {}", sweep.law.id());
    if !dropped.is_empty() {
        let ids: Vec<&str> = dropped.iter().map(|h| h.id()).collect();
        println!("dropped: {}", ids.join(", "));
    }
    println!("checked: {}", sweep.checked);
    println!("hypotheses met: {}", sweep.hypotheses_met);
    println!("holds: {}", sweep.holds);
    println!("violations: {}", sweep.violations.len());
    for report in &sweep.violations {
        println!("{}", violation_line(report));
    }
}

fn violation_line(report: &LawReport) -> String {
    let mut parts: Vec<String> = report
        .inputs
        .iter()
        .map(|(role, e)| format!("{role}={}", e.literal()))
        .collect();
    if let Some(c) = &report.sigma {
        parts.push(format!("sigma={}", c.literal()));
    }
    let detail = match (&report.certificate, &report.lhs, &report.rhs) {
        (Some(c), _, _) => c.clone(),
        (None, Some(l), Some(r)) => format!("{} != {}", l.literal(), r.literal()),
        _ => "conclusion fails".into(),
    };
    format!("violation: {} :: {detail}", parts.join(" "))
}

fn report_json(report: &LawReport) -> Value {
    let mut inputs = Map::new();
    for (role, e) in &report.inputs {
        inputs.insert(role.clone(), Value::String(e.literal()));
    }
    json!({
        "law": report.law.id(),
        "inputs": inputs,
        "sigma": report.sigma.as_ref().map(|c| c.literal()),
        "hypotheses_met": report.hypotheses_met,
        "lhs": report.lhs.as_ref().map(|e| e.literal()),
        "rhs": report.rhs.as_ref().map(|e| e.literal()),
        "verdict": report.verdict.id(),
        "certificate": report.certificate,
    })
}
