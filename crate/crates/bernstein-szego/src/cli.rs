//! Command-line front end.
//!
//! Exit codes: 0 success (or all checks pass), 1 usage or domain error,
//! 2 verification failure, 3 enumeration cap exceeded. All exact output is
//! rational strings "p/q"; floating-point results appear only under a
//! "numeric" key alongside their grid metadata.

use crate::bszcore::{
    build_p, exact_pairing_p_m, exact_pairing_p_p, normalization_constant, BszParams,
    DEFAULT_EXPANSION_CAP,
};
use crate::error::{Error, Result};
use crate::oracle::{gram_schmidt_p, shallow_orthogonality_scan, OrderMode, TorusGrid};
use crate::rational::{parse_rat, rat_str, Rat};
use crate::rootsys::{build_root_system, RootSystem, SystemName};
use crate::symalg::CharTable;
use crate::univariate::{classic_norm, classic_p, ClassicParams};
use crate::verify::{run_suites, SuiteReport, VerifyConfig};
use crate::weightlat::{root_coords, Weight};
use crate::weylgrp::WeylGroup;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Parser)]
#[command(
    name = "bsz",
    version,
    about = "Exact Bernstein-Szego polynomials attached to root systems"
)]
struct Cli {
    /// Optional key=value config file; explicit flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Output format: json, plain, or csv.
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// List the supported root systems.
    ListSystems,
    /// Expand P_lambda in Weyl characters and monomials.
    Expand(WeightArgs),
    /// Leading coefficient and squared norm N_lambda (deep weights only).
    Norm(WeightArgs),
    /// Exact pairings of P_lambda against m_mu and P_mu.
    Pair(PairArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Classic one-dimensional polynomials (A1 chain).
    Classic(ClassicArgs),
    /// Numeric Gram-Schmidt coefficients from the quadrature oracle.
    Gram(GramArgs),
    /// Shallow-weight orthogonality experiment (always exits 0).
    ScanShallow(ScanArgs),
}

#[derive(Debug, Args, Default)]
struct WeightArgs {
    #[arg(long)]
    system: Option<String>,
    /// Dominant weight in fundamental-weight coordinates, e.g. "2,1".
    #[arg(long)]
    weight: Option<String>,
    /// Short-root parameters, comma-separated rationals, e.g. "1/2,-1/3".
    #[arg(long)]
    ts: Option<String>,
    /// Long-root parameters (rejected on simply-laced systems).
    #[arg(long)]
    tl: Option<String>,
    #[arg(long)]
    cap: Option<String>,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    common: WeightArgs,
    /// Second weight.
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// classic | theorems | poincare | lattice | all
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    cap: Option<String>,
    /// Grid nodes per dimension for the numeric checks.
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Debug, Args)]
struct ClassicArgs {
    /// Parameters, comma-separated rationals.
    #[arg(long)]
    ts: Option<String>,
    /// Degree of the polynomial.
    #[arg(long)]
    ell: Option<String>,
}

#[derive(Debug, Args)]
struct GramArgs {
    #[command(flatten)]
    common: WeightArgs,
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    system: Option<String>,
    #[arg(long)]
    ts: Option<String>,
    #[arg(long)]
    tl: Option<String>,
    #[arg(long)]
    grid: Option<String>,
    /// Dominant-coordinate bound for the scanned weights.
    #[arg(long)]
    bound: Option<String>,
    /// |value| above this is flagged in the report.
    #[arg(long)]
    threshold: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Plain,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse {
                detail: format!("unknown format {other:?}; expected json, plain, or csv"),
            }),
        }
    }
}

/// Config-file defaults underneath the explicit flags.
struct Ctx {
    cfg: BTreeMap<String, String>,
    format: Format,
}

impl Ctx {
    fn lookup(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.cfg.get(key).cloned())
    }

    fn required(&self, flag: &Option<String>, key: &str) -> Result<String> {
        self.lookup(flag, key).ok_or_else(|| Error::Parse {
            detail: format!("missing required value --{key}"),
        })
    }

    fn parsed<T: FromStr>(&self, flag: &Option<String>, key: &str, default: T) -> Result<T> {
        match self.lookup(flag, key) {
            None => Ok(default),
            Some(s) => s.trim().parse::<T>().map_err(|_| Error::Parse {
                detail: format!("bad value for --{key}: {s:?}"),
            }),
        }
    }

    fn system(&self, flag: &Option<String>) -> Result<RootSystem> {
        build_root_system(&self.required(flag, "system")?)
    }

    fn weight(&self, flag: &Option<String>, key: &str, rank: usize) -> Result<Weight> {
        let w: Weight = self.required(flag, key)?.parse()?;
        if w.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: w.rank(),
            });
        }
        Ok(w)
    }

    fn rationals(&self, flag: &Option<String>, key: &str) -> Result<Vec<Rat>> {
        match self.lookup(flag, key) {
            None => Ok(Vec::new()),
            Some(s) if s.trim().is_empty() => Ok(Vec::new()),
            Some(s) => s.split(',').map(parse_rat).collect(),
        }
    }

    fn params(
        &self,
        rs: &RootSystem,
        ts: &Option<String>,
        tl: &Option<String>,
    ) -> Result<BszParams> {
        BszParams::new(rs, self.rationals(ts, "ts")?, self.rationals(tl, "tl")?)
    }

    fn cap(&self, flag: &Option<String>) -> Result<u128> {
        self.parsed(flag, "cap", DEFAULT_EXPANSION_CAP)
    }

    fn grid(&self, flag: &Option<String>, rs: &RootSystem) -> Result<TorusGrid> {
        let default = TorusGrid::default_for(rs);
        let n = self.parsed(flag, "grid", default.n)?;
        if n < 2 {
            return Err(Error::Parse {
                detail: format!("grid must be at least 2, got {n}"),
            });
        }
        Ok(TorusGrid::new(rs.rank, n))
    }
}

fn read_config(path: &PathBuf) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        detail: format!("cannot read config {}: {e}", path.display()),
    })?;
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            detail: format!("config line {}: expected key=value, got {line:?}", i + 1),
        })?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

/// Expansion keys ordered by (height of lam - mu, lex), leading term first.
fn ordered_keys<'a, V>(
    rs: &RootSystem,
    lam: &Weight,
    map: &'a BTreeMap<Weight, V>,
) -> Vec<&'a Weight> {
    let mut keys: Vec<&Weight> = map.keys().collect();
    keys.sort_by_key(|mu| {
        let h = root_coords(rs, &lam.sub(mu))
            .map(|v| v.iter().sum::<i64>())
            .unwrap_or(i64::MAX);
        (h, (*mu).clone())
    });
    keys
}

fn expansion_json(rs: &RootSystem, lam: &Weight, map: &BTreeMap<Weight, Rat>) -> Value {
    let mut obj = Map::new();
    for mu in ordered_keys(rs, lam, map) {
        obj.insert(mu.to_string(), Value::String(rat_str(&map[mu])));
    }
    Value::Object(obj)
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_list_systems(ctx: &Ctx) -> Result<String> {
    let rows: Vec<(RootSystem, usize, usize)> = SystemName::all()
        .iter()
        .map(|name| {
            let rs = build_root_system(&name.to_string()).expect("fixed system list");
            let short = rs.short_indices().len();
            let long = rs.long_indices().len();
            (rs, short, long)
        })
        .collect();
    Ok(match ctx.format {
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|(rs, short, long)| {
                    json!({
                        "system": rs.name.to_string(),
                        "rank": rs.rank,
                        "positive_roots": rs.positive_roots.len(),
                        "short_roots": short,
                        "long_roots": long,
                        "weyl_order": rs.weyl_order as u64,
                        "simply_laced": rs.simply_laced,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&arr).expect("serializable")
        }
        Format::Plain => {
            let mut out = format!(
                "{:<6} {:>4} {:>7} {:>5} {:>4} {:>8}  laced\n",
                "system", "rank", "roots+", "short", "long", "|W|"
            );
            for (rs, short, long) in &rows {
                out.push_str(&format!(
                    "{:<6} {:>4} {:>7} {:>5} {:>4} {:>8}  {}\n",
                    rs.name.to_string(),
                    rs.rank,
                    rs.positive_roots.len(),
                    short,
                    long,
                    rs.weyl_order,
                    if rs.simply_laced { "yes" } else { "no" }
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from(
                "system,rank,positive_roots,short_roots,long_roots,weyl_order,simply_laced\n",
            );
            for (rs, short, long) in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    rs.name,
                    rs.rank,
                    rs.positive_roots.len(),
                    short,
                    long,
                    rs.weyl_order,
                    rs.simply_laced
                ));
            }
            out
        }
    })
}

fn cmd_expand(ctx: &Ctx, args: &WeightArgs) -> Result<String> {
    let rs = ctx.system(&args.system)?;
    let lam = ctx.weight(&args.weight, "weight", rs.rank)?;
    let params = ctx.params(&rs, &args.ts, &args.tl)?;
    let cap = ctx.cap(&args.cap)?;
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let p = build_p(&rs, &wg, &mut table, &lam, &params, cap)?;
    Ok(match ctx.format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("system".into(), Value::String(rs.name.to_string()));
            obj.insert("weight".into(), Value::String(lam.to_string()));
            obj.insert("deep".into(), Value::Bool(p.deep));
            obj.insert("characters".into(), expansion_json(&rs, &lam, &p.char_exp));
            obj.insert("monomials".into(), expansion_json(&rs, &lam, &p.mono_exp));
            if let Some(n) = &p.norm_const {
                obj.insert("norm".into(), Value::String(rat_str(n)));
            }
            serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
        }
        Format::Plain => {
            let mut out = format!("system {}\nweight {lam}\ndeep {}\n", rs.name, p.deep);
            out.push_str("characters:\n");
            for mu in ordered_keys(&rs, &lam, &p.char_exp) {
                out.push_str(&format!("  {mu} {}\n", rat_str(&p.char_exp[mu])));
            }
            out.push_str("monomials:\n");
            for mu in ordered_keys(&rs, &lam, &p.mono_exp) {
                out.push_str(&format!("  {mu} {}\n", rat_str(&p.mono_exp[mu])));
            }
            if let Some(n) = &p.norm_const {
                out.push_str(&format!("norm {}\n", rat_str(n)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("basis,weight,coefficient\n");
            for mu in ordered_keys(&rs, &lam, &p.char_exp) {
                out.push_str(&format!(
                    "character,{},{}\n",
                    csv_escape(&mu.to_string()),
                    csv_escape(&rat_str(&p.char_exp[mu]))
                ));
            }
            for mu in ordered_keys(&rs, &lam, &p.mono_exp) {
                out.push_str(&format!(
                    "monomial,{},{}\n",
                    csv_escape(&mu.to_string()),
                    csv_escape(&rat_str(&p.mono_exp[mu]))
                ));
            }
            out
        }
    })
}

fn cmd_norm(ctx: &Ctx, args: &WeightArgs) -> Result<String> {
    let rs = ctx.system(&args.system)?;
    let lam = ctx.weight(&args.weight, "weight", rs.rank)?;
    let params = ctx.params(&rs, &args.ts, &args.tl)?;
    let n = normalization_constant(&rs, &lam, &params)?;
    Ok(match ctx.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "system": rs.name.to_string(),
            "weight": lam.to_string(),
            "norm": rat_str(&n),
        }))
        .expect("serializable"),
        Format::Plain => format!("N_{lam} = {}\n", rat_str(&n)),
        Format::Csv => format!("system,weight,norm\n{},{},{}\n", rs.name, lam, rat_str(&n)),
    })
}

fn cmd_pair(ctx: &Ctx, args: &PairArgs) -> Result<String> {
    let rs = ctx.system(&args.common.system)?;
    let lam = ctx.weight(&args.common.weight, "weight", rs.rank)?;
    let mu = ctx.weight(&args.mu, "mu", rs.rank)?;
    let params = ctx.params(&rs, &args.common.ts, &args.common.tl)?;
    let cap = ctx.cap(&args.common.cap)?;
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let pm = exact_pairing_p_m(&rs, &wg, &lam, &mu, &params, cap)?;
    let pp = exact_pairing_p_p(&rs, &wg, &mut table, &lam, &mu, &params, cap)?;
    Ok(match ctx.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "system": rs.name.to_string(),
            "lambda": lam.to_string(),
            "mu": mu.to_string(),
            "monomial_pairing": rat_str(&pm),
            "p_pairing": rat_str(&pp),
        }))
        .expect("serializable"),
        Format::Plain => format!(
            "<P_{lam}, m_{mu}> = {}\n<P_{lam}, P_{mu}> = {}\n",
            rat_str(&pm),
            rat_str(&pp)
        ),
        Format::Csv => format!(
            "system,lambda,mu,monomial_pairing,p_pairing\n{},{},{},{},{}\n",
            rs.name,
            lam,
            mu,
            csv_escape(&rat_str(&pm)),
            csv_escape(&rat_str(&pp))
        ),
    })
}

fn render_suites(ctx: &Ctx, reports: &[SuiteReport]) -> String {
    match ctx.format {
        Format::Json => serde_json::to_string_pretty(reports).expect("serializable"),
        Format::Plain => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "suite {}: {} passed, {} failed, {} skipped\n",
                    r.suite, r.passed, r.failed, r.skipped
                ));
                for c in &r.checks {
                    out.push_str(&format!(
                        "  {:<4} {} — {}\n",
                        c.status.as_str(),
                        c.name,
                        c.detail
                    ));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("suite,check,status,detail\n");
            for r in reports {
                for c in &r.checks {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        r.suite,
                        csv_escape(&c.name),
                        c.status.as_str(),
                        csv_escape(&c.detail)
                    ));
                }
            }
            out
        }
    }
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<(String, bool)> {
    let suite = ctx
        .lookup(&args.suite, "suite")
        .unwrap_or_else(|| "all".into());
    let cfg = VerifyConfig {
        seed: ctx.parsed(&args.seed, "seed", 42_u64)?,
        cap: ctx.parsed(&args.cap, "cap", DEFAULT_EXPANSION_CAP)?,
        draws: 5,
        grid_n: ctx.parsed(&args.grid, "grid", 64_usize)?,
    };
    let reports = run_suites(&suite, &cfg)?;
    let green = reports.iter().all(|r| r.all_green());
    Ok((render_suites(ctx, &reports), green))
}

fn cmd_classic(ctx: &Ctx, args: &ClassicArgs) -> Result<String> {
    let ts = ctx.rationals(&args.ts, "ts")?;
    let ell: i64 = ctx
        .required(&args.ell, "ell")?
        .parse()
        .map_err(|_| Error::Parse {
            detail: "bad value for --ell".into(),
        })?;
    let params = ClassicParams::new(ts)?;
    let norm = classic_norm(ell, &params)?;
    let coeffs = classic_p(ell, &params)?;
    Ok(match ctx.format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("M".into(), Value::Number(params.m().into()));
            obj.insert("ell".into(), Value::Number(ell.into()));
            obj.insert(
                "ts".into(),
                Value::Array(
                    params
                        .ts()
                        .iter()
                        .map(|t| Value::String(rat_str(t)))
                        .collect(),
                ),
            );
            obj.insert("norm".into(), Value::String(rat_str(&norm)));
            let mut cm = Map::new();
            for (j, c) in coeffs.iter().enumerate().rev() {
                cm.insert(format!("m_{j}"), Value::String(rat_str(c)));
            }
            obj.insert("coefficients".into(), Value::Object(cm));
            serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
        }
        Format::Plain => {
            let mut out = format!(
                "M {}\nell {ell}\nnorm {}\ncoefficients:\n",
                params.m(),
                rat_str(&norm)
            );
            for (j, c) in coeffs.iter().enumerate().rev() {
                out.push_str(&format!("  m_{j} {}\n", rat_str(c)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (j, c) in coeffs.iter().enumerate().rev() {
                out.push_str(&format!("{j},{}\n", csv_escape(&rat_str(c))));
            }
            out
        }
    })
}

fn cmd_gram(ctx: &Ctx, args: &GramArgs) -> Result<String> {
    let rs = ctx.system(&args.common.system)?;
    let lam = ctx.weight(&args.common.weight, "weight", rs.rank)?;
    let params = ctx.params(&rs, &args.common.ts, &args.common.tl)?;
    let grid = ctx.grid(&args.grid, &rs)?;
    let wg = WeylGroup::enumerate(&rs);
    let gs = gram_schmidt_p(&rs, &wg, &lam, &params, &grid, OrderMode::Dominance)?;
    Ok(match ctx.format {
        Format::Json => {
            let mut coeffs = Map::new();
            for mu in ordered_keys(&rs, &lam, &gs) {
                coeffs.insert(
                    mu.to_string(),
                    Value::Number(serde_json::Number::from_f64(gs[mu]).unwrap_or_else(|| 0.into())),
                );
            }
            let mut numeric = Map::new();
            numeric.insert("grid_n".into(), Value::Number(grid.n.into()));
            numeric.insert("coefficients".into(), Value::Object(coeffs));
            let mut obj = Map::new();
            obj.insert("system".into(), Value::String(rs.name.to_string()));
            obj.insert("weight".into(), Value::String(lam.to_string()));
            obj.insert("order".into(), Value::String("dominance".into()));
            obj.insert("numeric".into(), Value::Object(numeric));
            serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
        }
        Format::Plain => {
            let mut out = format!("p_{lam} on {} (grid {}):\n", rs.name, grid.n);
            for mu in ordered_keys(&rs, &lam, &gs) {
                out.push_str(&format!("  {mu} {:+.12e}\n", gs[mu]));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("weight,coefficient\n");
            for mu in ordered_keys(&rs, &lam, &gs) {
                out.push_str(&format!("{mu},{:e}\n", gs[mu]));
            }
            out
        }
    })
}

fn cmd_scan_shallow(ctx: &Ctx, args: &ScanArgs) -> Result<String> {
    let rs = ctx.system(&args.system)?;
    let params = ctx.params(&rs, &args.ts, &args.tl)?;
    let grid = ctx.grid(&args.grid, &rs)?;
    let bound: i64 = ctx.parsed(&args.bound, "bound", 2)?;
    let threshold: f64 = ctx.parsed(&args.threshold, "threshold", 1e-6)?;
    let wg = WeylGroup::enumerate(&rs);
    let report = shallow_orthogonality_scan(&rs, &wg, &params, &grid, bound, threshold)?;
    Ok(match ctx.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        Format::Plain => {
            let mut out = format!(
                "shallow scan {} (grid {}, bound {bound}, threshold {threshold:e})\n",
                report.system, report.grid_n
            );
            if !report.note.is_empty() {
                out.push_str(&format!("note: {}\n", report.note));
            }
            for e in &report.entries {
                out.push_str(&format!(
                    "  ({}, {}): value {:+.6e}, error bound {:.3e}{}\n",
                    e.lam,
                    e.mu,
                    e.value,
                    e.error_bound,
                    if e.exceeds_threshold { "  EXCEEDS" } else { "" }
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("lambda,mu,value,error_bound,exceeds_threshold\n");
            for e in &report.entries {
                out.push_str(&format!(
                    "{},{},{:e},{:e},{}\n",
                    csv_escape(&e.lam.to_string()),
                    csv_escape(&e.mu.to_string()),
                    e.value,
                    e.error_bound,
                    e.exceeds_threshold
                ));
            }
            out
        }
    })
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    let cfg = match &cli.config {
        Some(path) => read_config(path)?,
        None => BTreeMap::new(),
    };
    let format = match cli.format.clone().or_else(|| cfg.get("format").cloned()) {
        Some(s) => s.parse::<Format>()?,
        None => Format::Json,
    };
    let ctx = Ctx { cfg, format };
    match &cli.cmd {
        Cmd::ListSystems => Ok((cmd_list_systems(&ctx)?, 0)),
        Cmd::Expand(args) => Ok((cmd_expand(&ctx, args)?, 0)),
        Cmd::Norm(args) => Ok((cmd_norm(&ctx, args)?, 0)),
        Cmd::Pair(args) => Ok((cmd_pair(&ctx, args)?, 0)),
        Cmd::Verify(args) => {
            let (rendered, green) = cmd_verify(&ctx, args)?;
            Ok((rendered, if green { 0 } else { 2 }))
        }
        Cmd::Classic(args) => Ok((cmd_classic(&ctx, args)?, 0)),
        Cmd::Gram(args) => Ok((cmd_gram(&ctx, args)?, 0)),
        Cmd::ScanShallow(args) => Ok((cmd_scan_shallow(&ctx, args)?, 0)),
    }
}

/// Full CLI entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((mut output, code)) => {
            if !output.ends_with('\n') {
                output.push('\n');
            }
            // A closed pipe (`bsz ... | head`) is a normal way to stop
            // reading, not a failure of ours.
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut h = stdout.lock();
            match h.write_all(output.as_bytes()).and_then(|()| h.flush()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r.expect("stdout"),
            }
            code
        }
        Err(Error::CapExceeded { needed, cap }) => {
            eprintln!("error: enumeration would need {needed} cells, cap is {cap}");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
