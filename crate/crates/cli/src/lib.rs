//! The `cobord` command line. [`run`] takes the arguments and output
//! streams so that tests can drive it in-process.
//!
//! Exit codes: 0 for success (proved, equal, valid), 1 for usage and input
//! errors, 2 when the answer is not positive (search exhausted, matrices
//! differ, prover did not report a theorem).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use cobord::corpus::{preset, preset_names, Preset};
use cobord::khovanov::{builtin_table, tangle_polynomial, RankTable};
use cobord::loop_braid::{check_relations, to_permutations, LoopBraidWord};
use cobord::rewrite::{prove_equal, standard_axioms, Budget, Equation};
use cobord::semantics::{equal_in, evaluate, load_model, validate_model, FrobeniusModel, LinearMap};
use cobord::syntax::{parse_equation_sides, parse_term};
use cobord::tptp::{emit, encode_equation, parse_szs, EncodeOptions, PatternEquation, Profile, SzsStatus, ThfProblem};

#[derive(Parser, Debug)]
#[command(name = "cobord", version, about = "Equational reasoning for open-closed cobordisms")]
struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Typecheck a term and print its type.
    Check { term: String },
    /// Search for a rewriting proof of an equation or preset.
    Prove {
        eq: String,
        /// Maximum number of visited terms.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Write the trace here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a term as a matrix in a model.
    Eval {
        term: String,
        /// Built-in model (K, L) or a TOML model file.
        #[arg(long, default_value = "K")]
        model: String,
    },
    /// Compare both sides of an equation in a model.
    OracleEq {
        eq: String,
        #[arg(long, default_value = "K")]
        model: String,
    },
    /// Check the Frobenius laws of a model.
    Validate {
        #[arg(long, default_value = "K")]
        model: String,
    },
    /// Write a THF problem for an equation or preset.
    EmitTptp {
        eq: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Plain type names instead of `$`-prefixed ones.
        #[arg(long)]
        strict_tptp: bool,
        #[arg(long)]
        profile: Option<String>,
        #[arg(long)]
        conjecture: Option<String>,
    },
    /// Read SZS result lines from prover output (`-` for stdin).
    ParseSzs { file: PathBuf },
    /// Reduce a loop braid word and show its permutation.
    Braid {
        /// Letters such as `s1 s2^-1 r1`.
        word: String,
        #[arg(short, default_value_t = 3)]
        n: usize,
        /// Also check the defining relations on n strands.
        #[arg(long)]
        relations: bool,
    },
    /// Filtered Poincaré polynomial of a rank table.
    Khovanov {
        /// barnatan, khovanov, or a table file.
        #[arg(long, default_value = "barnatan")]
        table: String,
    },
    /// Emit a problem, run the configured prover on it, and read its verdict.
    Dispatch {
        eq: String,
        #[arg(long, default_value = "cobord.toml")]
        config: PathBuf,
        #[arg(long)]
        strict_tptp: bool,
    },
    /// List the equation presets.
    Presets,
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

fn ok(text: String, json: Value) -> Result<Outcome, String> {
    Ok(Outcome { code: 0, text, json })
}

pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.cmd) {
        Ok(o) => {
            let _ = if json { writeln!(out, "{}", o.json) } else { write!(out, "{}", o.text) };
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            if json {
                let _ = writeln!(out, "{}", json!({ "error": msg }));
            }
            1
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<Outcome, String> {
    match cmd {
        Cmd::Check { term } => check(&term),
        Cmd::Prove { eq, budget, output } => prove(&eq, budget, output.as_deref()),
        Cmd::Eval { term, model } => eval(&term, &model),
        Cmd::OracleEq { eq, model } => oracle_eq(&eq, &model),
        Cmd::Validate { model } => validate(&model),
        Cmd::EmitTptp { eq, output, strict_tptp, profile, conjecture } => {
            emit_tptp(&eq, output.as_deref(), strict_tptp, profile.as_deref(), conjecture)
        }
        Cmd::ParseSzs { file } => szs(&file),
        Cmd::Braid { word, n, relations } => braid(&word, n, relations),
        Cmd::Khovanov { table } => khovanov(&table),
        Cmd::Dispatch { eq, config, strict_tptp } => run_prover(&eq, &config, strict_tptp),
        Cmd::Presets => {
            let names = preset_names();
            ok(names.iter().map(|n| format!("{n}\n")).collect(), json!(names))
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"));
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn term(src: &str) -> Result<cobord::term::MorphismTerm, String> {
    parse_term(src).map_err(|e| format!("{src}: {e}"))
}

/// A preset name (`pentagon@A,A,A,A`, `frobenius@C`) or `lhs = rhs`.
enum Claim {
    Preset(Preset),
    Text(Equation),
}

impl Claim {
    fn parse(src: &str) -> Result<Claim, String> {
        if !src.contains('=') {
            return preset(src).map(Claim::Preset).map_err(|e| e.to_string());
        }
        let (l, r) = parse_equation_sides(src).map_err(|e| e.to_string())?;
        Equation::new(l, r).map(Claim::Text).map_err(|e| e.to_string())
    }

    fn name(&self) -> String {
        match self {
            Claim::Preset(p) => p.name.clone(),
            Claim::Text(e) => e.to_string(),
        }
    }

    fn ground(&self) -> Result<Equation, String> {
        match self {
            Claim::Preset(p) => p.ground().ok_or_else(|| format!("{} has variables", p.name)),
            Claim::Text(e) => Ok(e.clone()),
        }
    }

    fn pattern(&self) -> PatternEquation {
        match self {
            Claim::Preset(p) => p.equation.clone(),
            Claim::Text(e) => PatternEquation::from(e),
        }
    }
}

fn model(spec: &str) -> Result<FrobeniusModel, String> {
    if let Some(m) = FrobeniusModel::builtin(spec) {
        return Ok(m);
    }
    let text = read(Path::new(spec)).map_err(|e| format!("unknown model {e}"))?;
    load_model(&text).map_err(|e| format!("{spec}: {e}"))
}

fn check(src: &str) -> Result<Outcome, String> {
    let t = term(src)?;
    let (dom, cod) = t.typecheck_strict().map_err(|e| e.to_string())?;
    ok(format!("{dom} -> {cod}\n"), json!({ "term": t.to_string(), "dom": dom.to_string(), "cod": cod.to_string() }))
}

fn prove(src: &str, budget: usize, output: Option<&Path>) -> Result<Outcome, String> {
    let claim = Claim::parse(src)?;
    let eq = claim.ground()?;
    match prove_equal(&eq, Budget::states(budget)) {
        Ok(trace) => {
            trace.replay().map_err(|e| format!("internal: trace does not replay: {e}"))?;
            let text = trace.to_text();
            let summary = format!("proved {} in {} steps ({} rule steps)\n", claim.name(), trace.steps.len(), trace.rule_steps());
            let mut shown = summary.clone();
            match output {
                Some(p) => write_file(p, &text)?,
                None => shown.push_str(&text),
            }
            let steps: Vec<Value> = trace
                .steps
                .iter()
                .map(|s| json!({ "rule": s.rule.to_string(), "dir": s.dir.to_string(), "pos": s.pos.to_string(), "term": s.after.to_string() }))
                .collect();
            ok(shown, json!({ "status": "proved", "equation": claim.name(), "rule_steps": trace.rule_steps(), "steps": steps }))
        }
        Err(e) => Ok(Outcome {
            code: 2,
            text: format!("not proved: {e}\n"),
            json: json!({
                "status": "exhausted",
                "equation": claim.name(),
                "states": e.states,
                "depth": e.depth,
                "forward_frontier": e.forward_frontier,
                "backward_frontier": e.backward_frontier,
                "pruned": e.pruned,
            }),
        }),
    }
}

fn matrix_json(m: &LinearMap) -> Value {
    let rows: Vec<Vec<String>> =
        (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c).to_string()).collect()).collect();
    json!({ "dom": m.dom.to_string(), "cod": m.cod.to_string(), "rows": m.rows, "cols": m.cols, "entries": rows })
}

fn eval(src: &str, spec: &str) -> Result<Outcome, String> {
    let m = model(spec)?;
    let v = evaluate(&term(src)?, &m).map_err(|e| e.to_string())?;
    let mut j = matrix_json(&v);
    j["model"] = json!(m.name);
    ok(v.to_string(), j)
}

fn oracle_eq(src: &str, spec: &str) -> Result<Outcome, String> {
    let m = model(spec)?;
    let eq = Claim::parse(src)?.ground()?;
    let equal = equal_in(&eq.lhs, &eq.rhs, &m).map_err(|e| e.to_string())?;
    let (l, r) = (evaluate(&eq.lhs, &m).map_err(|e| e.to_string())?, evaluate(&eq.rhs, &m).map_err(|e| e.to_string())?);
    let text = if equal {
        format!("equal in {}\n", m.name)
    } else {
        format!("differ in {}\nlhs: {l}rhs: {r}", m.name)
    };
    Ok(Outcome {
        code: if equal { 0 } else { 2 },
        text,
        json: json!({ "model": m.name, "equal": equal, "lhs": matrix_json(&l), "rhs": matrix_json(&r) }),
    })
}

fn validate(spec: &str) -> Result<Outcome, String> {
    let m = model(spec)?;
    let report = validate_model(&m);
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "law": c.law.name(), "atom": c.atom.to_string(), "passed": c.passed(), "witness": c.witness }))
        .collect();
    let j = json!({ "model": m.name, "valid": report.all_passed(), "checks": checks });
    if report.all_passed() {
        ok(report.to_string(), j)
    } else {
        Err(format!("{} is not a Frobenius model:\n{report}", m.name))
    }
}

fn encode(claim: &Claim, strict_tptp: bool, profile: Option<&str>, conjecture: Option<String>) -> Result<ThfProblem, String> {
    let profile = profile.map(str::parse::<Profile>).transpose()?;
    let (profile, conjecture_name) = match claim {
        Claim::Preset(p) => (profile.or(Some(p.profile)), conjecture.or(Some(p.conjecture.clone()))),
        Claim::Text(_) => (profile, conjecture),
    };
    let opts = EncodeOptions { profile, conjecture_name, strict_tptp };
    encode_equation(&claim.pattern(), &standard_axioms(), &opts).map_err(|e| e.to_string())
}

fn emit_tptp(
    src: &str,
    output: Option<&Path>,
    strict_tptp: bool,
    profile: Option<&str>,
    conjecture: Option<String>,
) -> Result<Outcome, String> {
    let claim = Claim::parse(src)?;
    let problem = encode(&claim, strict_tptp, profile, conjecture)?;
    let text = emit(&problem);
    let j = json!({
        "equation": claim.name(),
        "formulas": problem.formulas.len(),
        "conjecture": problem.conjecture().map(|c| c.name.clone()),
        "output": output.map(|p| p.display().to_string()),
        "problem": if output.is_some() { Value::Null } else { json!(text) },
    });
    match output {
        Some(p) => {
            write_file(p, &text)?;
            ok(format!("wrote {} formulas to {}\n", problem.formulas.len(), p.display()), j)
        }
        None => ok(text, j),
    }
}

fn szs(path: &Path) -> Result<Outcome, String> {
    let results = parse_szs(&read(path)?);
    let text = results
        .iter()
        .map(|r| {
            let num = |x: Option<f64>| x.map_or("-".to_string(), |v| v.to_string());
            format!("{} {} {} cpu={} wc={}\n", r.tag, r.prover.as_deref().unwrap_or("-"), r.status, num(r.cpu), num(r.wc))
        })
        .collect();
    ok(text, json!(results))
}

fn braid(src: &str, n: usize, relations: bool) -> Result<Outcome, String> {
    let w = LoopBraidWord::parse(n, src).map_err(|e| e.to_string())?;
    let reduced = w.reduced();
    let p = to_permutations(&w);
    let mut text = format!("word: {w}\nreduced: {reduced}\npermutation: {p}\n");
    let mut j = json!({ "n": n, "word": w.to_string(), "reduced": reduced.to_string(), "permutation": p.images() });
    if relations {
        let report = check_relations(n);
        text.push_str(&report.to_string());
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "relation": c.name, "instance": c.instance, "holds": c.holds }))
            .collect();
        j["relations"] = json!({ "all_hold": report.all_hold(), "checks": checks, "skipped": report.skipped });
    }
    ok(text, j)
}

fn khovanov(spec: &str) -> Result<Outcome, String> {
    let table = match builtin_table(spec) {
        Some(t) => t,
        None => {
            let text = read(Path::new(spec)).map_err(|e| format!("unknown table {e}"))?;
            RankTable::parse(spec, &text).map_err(|e| format!("{spec}: {e}"))?
        }
    };
    let p = tangle_polynomial(&table);
    let terms: Vec<Value> = p.triples().into_iter().map(|(c, t, a)| json!({ "coeff": c, "t": t, "A": a })).collect();
    ok(format!("{p}\n"), json!({ "table": table.name, "polynomial": p.to_string(), "terms": terms }))
}

#[derive(Deserialize)]
struct Config {
    prover: ProverConfig,
}

/// `[prover]` section: the executable and the arguments placed before the
/// problem path.
#[derive(Deserialize)]
struct ProverConfig {
    command: String,
    #[serde(default)]
    args: Vec<String>,
}

fn run_prover(src: &str, config: &Path, strict_tptp: bool) -> Result<Outcome, String> {
    let cfg: Config = toml::from_str(&read(config)?).map_err(|e| format!("{}: {e}", config.display()))?;
    let claim = Claim::parse(src)?;
    let problem = encode(&claim, strict_tptp, None, None)?;
    let mut file = tempfile::Builder::new().prefix("cobord-").suffix(".p").tempfile().map_err(|e| e.to_string())?;
    file.write_all(emit(&problem).as_bytes()).map_err(|e| e.to_string())?;
    let output = Command::new(&cfg.prover.command)
        .args(&cfg.prover.args)
        .arg(file.path())
        .output()
        .map_err(|e| format!("cannot run {}: {e}", cfg.prover.command))?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    let status = parse_szs(&stdout).first().map_or(SzsStatus::Unknown, |r| r.status);
    Ok(Outcome {
        code: if status == SzsStatus::Theorem { 0 } else { 2 },
        text: format!("{}: {status}\n", claim.name()),
        json: json!({ "equation": claim.name(), "prover": cfg.prover.command, "status": status }),
    })
}
