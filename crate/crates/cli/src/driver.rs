//! Command-line driver: argument parsing, dispatch, exit codes.
//!
//! Exit codes: 0 = success / all checks passed, 1 = a check failed,
//! 2 = usage or parse error.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use comalg::blowup::{chart, rees_ideal, symmetric_algebra_ideal};
use comalg::hilbert::{colength, hilbert_series};
use comalg::ideal::DEFAULT_ORDER;
use comalg::props::classify;
use comalg::resolution::free_resolution;
use comalg::scenarios::{
    s1_fiber_equations, s2_gorenstein_charts, s3_components, s4_curvilinear, s5_hilbert_identity,
    s6_blowup_component_normal, s7_quadric_cone_blowup, ScenarioReport,
};
use comalg::{Ideal, MonomialOrder, PolyRing};

use crate::parser::parse_source;
use crate::report::{emit_json, emit_text, exit_code};

#[derive(Parser, Debug)]
#[command(
    name = "comalg",
    version,
    about = "Exact commutative algebra: Groebner bases, resolutions, Hilbert series, blow-ups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Monomial order: lex | grevlex | elim:<k> (default: grevlex
    /// refined by the ring weights)
    #[arg(long, global = true)]
    order: Option<String>,
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized property-test sampling (reserved; all
    /// commands here are deterministic)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Unlock parameter values above the default caps
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Args, Debug)]
struct FileArgs {
    /// Input .ca file with ring and ideal declarations
    file: String,
    /// Name of the ideal to use (default: the first declared)
    #[arg(long)]
    ideal: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the reduced Groebner basis of an ideal
    Gb(FileArgs),
    /// Classify the quotient ring: dimension, depth, Cohen-Macaulay,
    /// Gorenstein, smoothness, normality
    Props(FileArgs),
    /// Print the Hilbert series of a graded quotient
    Hilbert(FileArgs),
    /// Print the Krull dimension of the quotient ring
    Dim(FileArgs),
    /// Print the graded Betti table of a minimal free resolution
    Betti(FileArgs),
    /// Present the blow-up along the ideal: symmetric-algebra and Rees
    /// ideals
    Blowup(FileArgs),
    /// Print one affine chart of the blow-up along the ideal
    Chart {
        #[command(flatten)]
        file: FileArgs,
        /// Chart index j (the chart where the j-th generator is a unit)
        #[arg(long)]
        index: usize,
    },
    /// Saturate an ideal by another and report the number of colon steps
    Saturate {
        #[command(flatten)]
        file: FileArgs,
        /// Name of the ideal to saturate by
        #[arg(long)]
        by: String,
    },
    /// Intersect two ideals
    Intersect {
        #[command(flatten)]
        file: FileArgs,
        /// Name of the second ideal
        #[arg(long)]
        with: String,
    },
    /// Run one of the scripted verification scenarios s1..s7
    Paper {
        /// Scenario id: s1..s7
        #[arg(long)]
        scenario: String,
        /// Number of ambient variables n
        #[arg(long)]
        n: Option<usize>,
        /// Jet length parameter for s4
        #[arg(long)]
        ell: Option<u32>,
        /// Largest twist for s5
        #[arg(long)]
        ell_max: Option<u64>,
    },
}

/// Run the command line. Output goes to `out`; diagnostics go to
/// standard error. Returns the process exit code.
pub fn run_command<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version as "errors" with exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(std::io::stderr(), "{e}");
            return code;
        }
    };
    let order = match parse_order(cli.order.as_deref()) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let result = dispatch(&cli, &order, out);
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn parse_order(spec: Option<&str>) -> Result<MonomialOrder, String> {
    match spec {
        None => Ok(DEFAULT_ORDER),
        Some("lex") => Ok(MonomialOrder::Lex),
        Some("grevlex") => Ok(MonomialOrder::GrevLex),
        Some(s) => {
            if let Some(k) = s.strip_prefix("elim:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| format!("invalid elimination block size in '{s}'"))?;
                if k == 0 {
                    return Err("elimination block size must be positive".into());
                }
                Ok(MonomialOrder::elimination(k))
            } else {
                Err(format!(
                    "unknown order '{s}' (expected lex, grevlex or elim:<k>)"
                ))
            }
        }
    }
}

fn load_ideal(args: &FileArgs) -> Result<(String, Ideal), String> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| format!("cannot read {}: {e}", args.file))?;
    let doc = parse_source(&text).map_err(|e| format!("{}:{e}", args.file))?;
    match &args.ideal {
        Some(name) => doc
            .ideal(name)
            .map(|i| (name.clone(), i.clone()))
            .ok_or_else(|| format!("no ideal named {name} in {}", args.file)),
        None => doc
            .first_ideal()
            .map(|(n, i)| (n.to_string(), i.clone()))
            .ok_or_else(|| format!("no ideal declared in {}", args.file)),
    }
}

fn load_second_ideal(args: &FileArgs, name: &str) -> Result<Ideal, String> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| format!("cannot read {}: {e}", args.file))?;
    let doc = parse_source(&text).map_err(|e| format!("{}:{e}", args.file))?;
    doc.ideal(name)
        .cloned()
        .ok_or_else(|| format!("no ideal named {name} in {}", args.file))
}

fn ring_header(ring: &Arc<PolyRing>) -> String {
    let mut s = format!("ring: {}", ring.var_names().join(" "));
    if ring.weights().iter().any(|&w| w != 1) {
        let ws: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
        s.push_str(&format!(" (weights {})", ws.join(" ")));
    }
    s
}

fn order_label(order: &MonomialOrder) -> String {
    match order {
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::WeightedGrevLex => "weighted grevlex".into(),
        MonomialOrder::Block { head, .. } => format!("elimination of the first {head} variables"),
    }
}

fn gens_json(ideal: &Ideal) -> Value {
    Value::Array(
        ideal
            .generators()
            .iter()
            .map(|g| Value::String(g.to_string()))
            .collect(),
    )
}

fn emit_value<W: Write>(out: &mut W, v: &Value) -> i32 {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")).expect("write");
    0
}

fn dispatch<W: Write>(cli: &Cli, order: &MonomialOrder, out: &mut W) -> Result<i32, String> {
    match &cli.cmd {
        Cmd::Gb(args) => {
            let (name, ideal) = load_ideal(args)?;
            let gb = ideal.groebner(order);
            if cli.json {
                let v = json!({
                    "ideal": name,
                    "ring": ideal.ring().var_names(),
                    "order": order_label(order),
                    "basis": gb.elements.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "{}", ring_header(ideal.ring())).expect("write");
            writeln!(out, "order: {}", order_label(order)).expect("write");
            writeln!(out, "reduced Groebner basis ({} elements):", gb.elements.len())
                .expect("write");
            for g in &gb.elements {
                writeln!(out, "  {g}").expect("write");
            }
            Ok(0)
        }
        Cmd::Props(args) => {
            let (name, ideal) = load_ideal(args)?;
            let props = classify(&ideal).map_err(|e| e.to_string())?;
            let opt = |o: Option<usize>| match o {
                Some(v) => v.to_string(),
                None => "-".into(),
            };
            let optb = |o: Option<bool>| match o {
                Some(v) => v.to_string(),
                None => "-".into(),
            };
            if cli.json {
                let v = json!({
                    "ideal": name,
                    "ring": ideal.ring().var_names(),
                    "dim": props.dim,
                    "codim": props.codim,
                    "pd": props.pd,
                    "depth": props.depth,
                    "cohen_macaulay": props.is_cm,
                    "cm_type": props.cm_type,
                    "gorenstein": props.is_gorenstein,
                    "complete_intersection": props.is_ci_presentation,
                    "smooth": props.smooth.label(),
                    "normal": props.normal.label(),
                    "betti_totals": props.betti.as_ref().map(|b| b.totals()),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "{}", ring_header(ideal.ring())).expect("write");
            writeln!(out, "ideal {name} ({} generators)", ideal.generators().len())
                .expect("write");
            writeln!(out, "  dim                   = {}", props.dim).expect("write");
            writeln!(out, "  codim                 = {}", props.codim).expect("write");
            writeln!(out, "  projective dimension  = {}", opt(props.pd)).expect("write");
            writeln!(out, "  depth                 = {}", opt(props.depth)).expect("write");
            writeln!(out, "  Cohen-Macaulay        = {}", optb(props.is_cm)).expect("write");
            writeln!(out, "  CM type               = {}", opt(props.cm_type)).expect("write");
            writeln!(out, "  Gorenstein            = {}", optb(props.is_gorenstein))
                .expect("write");
            writeln!(out, "  complete intersection = {}", props.is_ci_presentation)
                .expect("write");
            writeln!(out, "  smoothness            = {}", props.smooth.label()).expect("write");
            writeln!(out, "  normality             = {}", props.normal.label()).expect("write");
            if let Some(b) = &props.betti {
                writeln!(out, "betti table:\n{b}").expect("write");
            }
            Ok(0)
        }
        Cmd::Hilbert(args) => {
            let (name, ideal) = load_ideal(args)?;
            let hs = hilbert_series(&ideal, order).map_err(|e| e.to_string())?;
            let len = colength(&ideal);
            if cli.json {
                let v = json!({
                    "ideal": name,
                    "numerator": hs.numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "denominator_weights": hs.denominator_weights,
                    "colength": len.as_ref().map(|c| c.to_string()),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "{}", ring_header(ideal.ring())).expect("write");
            writeln!(out, "hilbert series of R/{name}: {hs}").expect("write");
            match len {
                Some(c) => writeln!(out, "colength: {c}").expect("write"),
                None => writeln!(out, "colength: infinite").expect("write"),
            }
            Ok(0)
        }
        Cmd::Dim(args) => {
            let (name, ideal) = load_ideal(args)?;
            match ideal.krull_dim() {
                Some(d) => {
                    if cli.json {
                        let v = json!({ "ideal": name, "dim": d });
                        return Ok(emit_value(out, &v));
                    }
                    writeln!(out, "dim R/{name} = {d}").expect("write");
                    Ok(0)
                }
                None => Err(format!("{name} is the unit ideal; the quotient is empty")),
            }
        }
        Cmd::Betti(args) => {
            let (name, ideal) = load_ideal(args)?;
            let res = free_resolution(&ideal).map_err(|e| e.to_string())?;
            let betti = res.betti();
            if cli.json {
                let rows: Vec<Value> = betti
                    .rows()
                    .iter()
                    .map(|(i, j, b)| json!({ "i": i, "j": j, "betti": b }))
                    .collect();
                let v = json!({
                    "ideal": name,
                    "pd": res.pd(),
                    "depth": res.depth(),
                    "regularity": betti.regularity(),
                    "totals": betti.totals(),
                    "rows": rows,
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "{}", ring_header(ideal.ring())).expect("write");
            writeln!(out, "minimal free resolution of R/{name}:").expect("write");
            writeln!(out, "{betti}").expect("write");
            writeln!(
                out,
                "pd = {}, depth = {}, regularity = {}",
                res.pd(),
                res.depth(),
                betti.regularity()
            )
            .expect("write");
            Ok(0)
        }
        Cmd::Blowup(args) => {
            let (name, ideal) = load_ideal(args)?;
            let sym = symmetric_algebra_ideal(&ideal);
            let rees = rees_ideal(&ideal);
            let equal = sym.sym_ideal.eq_ideal(&rees);
            if cli.json {
                let v = json!({
                    "center": name,
                    "total_ring": sym.total_ring.var_names(),
                    "sym_ideal": gens_json(&sym.sym_ideal),
                    "rees_ideal": gens_json(&rees),
                    "sym_equals_rees": equal,
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "blow-up along {name}").expect("write");
            writeln!(out, "total {}", ring_header(&sym.total_ring)).expect("write");
            writeln!(out, "symmetric-algebra ideal:").expect("write");
            for g in sym.sym_ideal.generators() {
                writeln!(out, "  {g}").expect("write");
            }
            writeln!(out, "rees ideal:").expect("write");
            for g in rees.generators() {
                writeln!(out, "  {g}").expect("write");
            }
            writeln!(out, "sym = rees: {equal}").expect("write");
            Ok(0)
        }
        Cmd::Chart { file, index } => {
            let (name, ideal) = load_ideal(file)?;
            let sym = symmetric_algebra_ideal(&ideal);
            let c = chart(&sym, &sym.sym_ideal, *index).map_err(|e| e.to_string())?;
            if cli.json {
                let v = json!({
                    "center": name,
                    "index": index,
                    "chart_ring": c.ring.var_names(),
                    "raw": gens_json(&c.raw),
                    "simplified_ring": c.simplified_ring.var_names(),
                    "simplified": gens_json(&c.simplified),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "chart u{index} of the blow-up along {name}").expect("write");
            writeln!(out, "raw {}", ring_header(&c.ring)).expect("write");
            for g in c.raw.generators() {
                writeln!(out, "  {g}").expect("write");
            }
            writeln!(out, "simplified {}", ring_header(&c.simplified_ring)).expect("write");
            if c.simplified.generators().is_empty() {
                writeln!(out, "  0").expect("write");
            }
            for g in c.simplified.generators() {
                writeln!(out, "  {g}").expect("write");
            }
            Ok(0)
        }
        Cmd::Saturate { file, by } => {
            let (name, ideal) = load_ideal(file)?;
            let other = load_second_ideal(file, by)?;
            let (sat, steps) = ideal.saturate(&other).map_err(|e| e.to_string())?;
            let gb = sat.groebner(order);
            if cli.json {
                let v = json!({
                    "ideal": name,
                    "by": by,
                    "steps": steps,
                    "basis": gb.elements.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "saturation of {name} by {by} ({steps} colon steps):").expect("write");
            for g in &gb.elements {
                writeln!(out, "  {g}").expect("write");
            }
            Ok(0)
        }
        Cmd::Intersect { file, with } => {
            let (name, ideal) = load_ideal(file)?;
            let other = load_second_ideal(file, with)?;
            let meet = ideal.intersect(&other).map_err(|e| e.to_string())?;
            let gb = meet.groebner(order);
            if cli.json {
                let v = json!({
                    "ideal": name,
                    "with": with,
                    "basis": gb.elements.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                });
                return Ok(emit_value(out, &v));
            }
            writeln!(out, "intersection of {name} and {with}:").expect("write");
            for g in &gb.elements {
                writeln!(out, "  {g}").expect("write");
            }
            Ok(0)
        }
        Cmd::Paper {
            scenario,
            n,
            ell,
            ell_max,
        } => {
            let start = Instant::now();
            let mut report = run_scenario(scenario, *n, *ell, *ell_max, cli.long)?;
            if cli.json {
                writeln!(out, "{}", emit_json(&report)).expect("write");
            } else {
                report.timing_s = Some(start.elapsed().as_secs_f64());
                write!(out, "{}", emit_text(&report)).expect("write");
            }
            Ok(exit_code(&report))
        }
    }
}

/// Default parameters and caps for the scripted scenarios. `long`
/// unlocks values above the caps.
fn run_scenario(
    scenario: &str,
    n: Option<usize>,
    ell: Option<u32>,
    ell_max: Option<u64>,
    long: bool,
) -> Result<ScenarioReport, String> {
    let caps: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::from([
        // scenario -> (default n, min n, capped max n)
        ("s1", (3, 2, 6)),
        ("s2", (3, 3, 6)),
        ("s3", (3, 2, 3)),
        ("s4", (3, 2, 5)),
        ("s5", (3, 2, 8)),
        ("s6", (3, 3, 3)),
        ("s7", (3, 3, 6)),
    ]);
    let (dflt, lo, hi) = *caps
        .get(scenario)
        .ok_or_else(|| format!("unknown scenario '{scenario}' (expected s1..s7)"))?;
    let n = n.unwrap_or(dflt);
    if n < lo {
        return Err(format!("scenario {scenario} needs n >= {lo}"));
    }
    if n > hi && !long {
        return Err(format!(
            "scenario {scenario} is capped at n = {hi}; pass --long to go higher"
        ));
    }
    let report = match scenario {
        "s1" => s1_fiber_equations(n),
        "s2" => s2_gorenstein_charts(n),
        "s3" => s3_components(n),
        "s4" => {
            let l = ell.unwrap_or(2);
            if l < 2 {
                return Err("scenario s4 needs --ell >= 2".into());
            }
            if l > 3 && !long {
                return Err("scenario s4 is capped at ell = 3; pass --long to go higher".into());
            }
            s4_curvilinear(n, l)
        }
        "s5" => {
            let lmax = ell_max.unwrap_or(12);
            if lmax < 1 {
                return Err("scenario s5 needs --ell-max >= 1".into());
            }
            if lmax > 12 && !long {
                return Err(
                    "scenario s5 is capped at ell-max = 12; pass --long to go higher".into(),
                );
            }
            s5_hilbert_identity(n as u64, lmax)
        }
        "s6" => s6_blowup_component_normal(n),
        "s7" => s7_quadric_cone_blowup(n),
        _ => unreachable!(),
    };
    report.map_err(|e| e.to_string())
}
