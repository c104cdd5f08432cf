//! The `repdesc` command line: argument parsing, dispatch to the library, and
//! the golden-file corpus runner.
//!
//! Exit codes: 0 when every requested check passes, 1 when a mathematical
//! check fails (the report is still written), 2 for usage errors and 3 for
//! inputs that fail validation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::brauer::{brauer_decompose, devissage, verify_certificate};
use crate::cyclo::{GaloisAut, SubfieldSpec};
use crate::descent::{
    descend_prop7, find_multiplicity_one, hom_dim_base_change_check, noether_deuring, simple_root_scan,
};
use crate::grp::{named, Group, Subgroup, DEFAULT_ORDER_BOUND};
use crate::harness::run_harness;
use crate::io::{self, IoError};
use crate::rep::{char_table, realize_irreducible, MatrixRep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "repdesc", version, about = "Exact representation theory of finite groups over cyclotomic fields")]
struct Cli {
    /// Seed for the randomised Hilbert 90 trials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order accepted (default: REPDESC_BOUND, else 1000).
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Print one pass/fail line per stage instead of the JSON document.
    #[arg(long, global = true)]
    summary: bool,
    /// Write the output document here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupRep {
    /// Group JSON file, or a name such as S3, D4, Q8, A4, C12, S6.
    #[arg(long)]
    group: String,
    /// Representation JSON file, or `irrep:K` for the K-th irreducible of the character table.
    #[arg(long)]
    rep: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table with class representatives and sizes.
    Chartable {
        #[arg(long)]
        group: String,
    },
    /// Explicit matrices for an irreducible character, or a named group as JSON.
    Realize {
        #[arg(long)]
        group: String,
        /// Index into the character table; omitted, the group itself is printed.
        #[arg(long)]
        irrep: Option<usize>,
    },
    /// Integral combination of characters induced from N-elementary subgroups.
    Brauer {
        #[command(flatten)]
        input: GroupRep,
        /// Normal subgroup JSON file, or `trivial`, `whole`, `alternating`.
        #[arg(long, default_value = "trivial")]
        normal: String,
    },
    /// Dévissage certificate for an irreducible representation, verified.
    Devissage {
        #[command(flatten)]
        input: GroupRep,
        #[arg(long)]
        normal: String,
    },
    /// Independent re-verification of a dévissage certificate.
    Verify {
        #[arg(long)]
        certificate: String,
    },
    /// Per-class test for an eigenvalue of multiplicity one.
    SimpleRootScan {
        #[command(flatten)]
        input: GroupRep,
    },
    /// Descend a representation with rational-valued traces to a subfield.
    Descend {
        #[command(flatten)]
        input: GroupRep,
        /// Subfield JSON file, or `Q`, or `Q(zeta_n)`.
        #[arg(long, default_value = "Q")]
        base: String,
        /// Multiplicity-one witness JSON; searched for when omitted.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Recover ρ over k₀ from ρ ⊕ τ₀ ≅ π₀ with τ₀, π₀ defined over k₀.
    NoetherDeuring {
        #[command(flatten)]
        input: GroupRep,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        pi: String,
        #[arg(long, default_value = "Q")]
        base: String,
    },
    /// Compare Hom-space dimensions over k₀ and over an extension k.
    Homcheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "Q")]
        base: String,
        #[arg(long)]
        ext: String,
    },
    /// Dévissage, witnesses, trace identity, twisted family and descent in one run.
    Harness {
        #[command(flatten)]
        input: GroupRep,
        #[arg(long)]
        normal: String,
        /// The twist sends ζ to ζ^K.
        #[arg(long, default_value_t = 1)]
        twist: i64,
        /// Conductor the twist acts on (default: that of the representation).
        #[arg(long)]
        twist_mod: Option<u64>,
    },
    /// Run every case file in a directory and print a pass/fail table.
    Corpus { dir: PathBuf },
}

/// Result of one command: exit code, the document written to the output,
/// and anything destined for standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Math(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

macro_rules! math_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Math(e.to_string())
            }
        }
    )*};
}
math_errors!(
    crate::brauer::BrauerError,
    crate::descent::DescentError,
    crate::harness::HarnessError,
    crate::rep::RepError
);

struct Doc {
    value: Value,
    summary: Vec<String>,
    ok: bool,
}

struct Ctx {
    base_dir: PathBuf,
    bound: usize,
    seed: u64,
}

impl Ctx {
    fn resolve(&self, path: &str) -> PathBuf {
        let p = Path::new(path);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }

    fn read_json(&self, path: &str) -> Result<Value, Failure> {
        let full = self.resolve(path);
        let text = std::fs::read_to_string(&full)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", full.display())))?;
        Ok(io::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", full.display())))?)
    }

    fn group(&self, spec: &str) -> Result<Group, Failure> {
        if !self.resolve(spec).exists() {
            if let Some(g) = named::by_name(spec) {
                if g.order() > self.bound {
                    return Err(Failure::Input(format!("group order {} exceeds the bound {}", g.order(), self.bound)));
                }
                return Ok(g);
            }
        }
        Ok(io::group_from_json(&self.read_json(spec)?, self.bound)?)
    }

    fn rep(&self, spec: &str, g: &Group) -> Result<MatrixRep, Failure> {
        if let Some(k) = spec.strip_prefix("irrep:") {
            let table = char_table(g);
            let k: usize = k.parse().map_err(|_| Failure::Input(format!("bad irreducible index {k:?}")))?;
            let chi = table
                .get(k)
                .ok_or_else(|| Failure::Input(format!("the group has {} irreducible characters", table.len())))?;
            return Ok(realize_irreducible(chi)?);
        }
        Ok(io::rep_from_json(&self.read_json(spec)?, Some(g))?)
    }

    fn subgroup(&self, spec: &str, g: &Group) -> Result<Subgroup, Failure> {
        match spec {
            "trivial" => Ok(Subgroup::trivial(g)),
            "whole" => Ok(Subgroup::whole(g)),
            "alternating" => Ok(named::alternating_in(g)),
            path => Ok(io::subgroup_from_json(&self.read_json(path)?, Some(g))?),
        }
    }

    fn field(&self, spec: &str) -> Result<SubfieldSpec, Failure> {
        match io::subfield_from_json(&Value::String(spec.to_string())) {
            Ok(k) => Ok(k),
            Err(_) => Ok(io::subfield_from_json(&self.read_json(spec)?)?),
        }
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Doc, Failure> {
    match cmd {
        Command::Chartable { group } => {
            let g = ctx.group(group)?;
            let table = char_table(&g);
            Ok(Doc {
                summary: vec![format!("chartable: {} classes", table.len())],
                value: io::char_table_to_json(&g, &table),
                ok: true,
            })
        }
        Command::Realize { group, irrep } => {
            let g = ctx.group(group)?;
            let value = match irrep {
                None => io::group_to_json(&g),
                Some(k) => io::rep_to_json(&ctx.rep(&format!("irrep:{k}"), &g)?),
            };
            Ok(Doc { value, summary: vec!["realize: PASS".into()], ok: true })
        }
        Command::Brauer { input, normal } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let n = ctx.subgroup(normal, &g)?;
            let d = brauer_decompose(&rho.character(), &g, &n)?;
            let ok = d.residual_is_zero()?;
            let mut value = io::decomposition_to_json(&d);
            value["residual_zero"] = json!(ok);
            Ok(Doc { value, summary: vec![format!("brauer: {} ({} terms)", pass(ok), d.terms.len())], ok })
        }
        Command::Devissage { input, normal } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let n = ctx.subgroup(normal, &g)?;
            let cert = devissage(&rho, &g, &n)?;
            let report = verify_certificate(&cert);
            let mut value = io::certificate_to_json(&cert);
            value["verify"] = json!(report.ok());
            value["report"] = io::certificate_report_to_json(&report);
            Ok(Doc {
                summary: vec![format!("devissage: {} (t={}, s={})", pass(report.ok()), cert.t, cert.s)],
                value,
                ok: report.ok(),
            })
        }
        Command::Verify { certificate } => {
            let cert = io::certificate_from_json(&ctx.read_json(certificate)?, None)?;
            let report = verify_certificate(&cert);
            let mut summary = vec![
                format!("(a) N contained in every H: {}", pass(report.contains_n)),
                format!("(b) every sigma irreducible: {}", pass(report.irreducible)),
                format!("(c) every restriction to N irreducible: {}", pass(report.restriction_irreducible)),
                format!("(**) character identity: {}", pass(report.identity)),
            ];
            summary.extend(report.failures.iter().map(|f| format!("violated: {f}")));
            Ok(Doc { value: io::certificate_report_to_json(&report), summary, ok: report.ok() })
        }
        Command::SimpleRootScan { input } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let scan = simple_root_scan(&rho);
            let value = io::scan_to_json(&scan);
            let summary = vec![value["report"].as_str().unwrap_or_default().to_string()];
            Ok(Doc { value, summary, ok: true })
        }
        Command::Descend { input, base, witness } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let k0 = ctx.field(base)?;
            let w = match witness {
                Some(path) => io::mult_one_from_json(&ctx.read_json(path)?, &g)?,
                None => find_multiplicity_one(&rho, &k0)
                    .ok_or_else(|| Failure::Math("no multiplicity-one eigenvalue in the base field".into()))?,
            };
            let d = descend_prop7(&rho, &k0, &w, ctx.seed)?;
            let mut value = io::descent_to_json(&d);
            value["witness"] = io::mult_one_to_json(&w);
            Ok(Doc { value, summary: vec!["descend: PASS".into()], ok: true })
        }
        Command::NoetherDeuring { input, tau, pi, base } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let tau0 = ctx.rep(tau, &g)?;
            let pi0 = ctx.rep(pi, &g)?;
            let k0 = ctx.field(base)?;
            let rho0 = noether_deuring(&rho, &tau0, &pi0, &k0)?;
            Ok(Doc {
                value: json!({"rho0": io::rep_to_json(&rho0), "base": io::subfield_to_json(&k0)}),
                summary: vec!["noether-deuring: PASS".into()],
                ok: true,
            })
        }
        Command::Homcheck { group, m, n, base, ext } => {
            let g = ctx.group(group)?;
            let m = ctx.rep(m, &g)?;
            let n = ctx.rep(n, &g)?;
            let check = hom_dim_base_change_check(&m, &n, &ctx.field(base)?, &ctx.field(ext)?)?;
            Ok(Doc {
                value: io::hom_check_to_json(&check),
                summary: vec![format!(
                    "homcheck: {} ({} over the base, {} over the extension)",
                    pass(check.holds()),
                    check.dim_base,
                    check.dim_extension
                )],
                ok: check.holds(),
            })
        }
        Command::Harness { input, normal, twist, twist_mod } => {
            let g = ctx.group(&input.group)?;
            let rho = ctx.rep(&input.rep, &g)?;
            let n = ctx.subgroup(normal, &g)?;
            let modulus = twist_mod.unwrap_or_else(|| rho.conductor().max(1));
            let s = GaloisAut::new(modulus, *twist).map_err(|e| Failure::Input(e.to_string()))?;
            let report = run_harness(&rho, &g, &n, &s, ctx.seed)?;
            Ok(Doc { value: io::harness_report_to_json(&report), summary: report.summary_lines(), ok: report.passed() })
        }
        Command::Corpus { .. } => unreachable!("handled by run"),
    }
}

fn bound_from_env() -> usize {
    std::env::var("REPDESC_BOUND").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_ORDER_BOUND)
}

/// Parse `argv` (including the program name) and execute it, resolving
/// relative paths against the current directory.
pub fn run(argv: &[String]) -> Output {
    run_in(argv, Path::new("."))
}

/// As [`run`], resolving relative input paths against `base_dir`.
pub fn run_in(argv: &[String], base_dir: &Path) -> Output {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let ctx = Ctx { base_dir: base_dir.to_path_buf(), bound: cli.bound.unwrap_or_else(bound_from_env), seed: cli.seed };
    if let Command::Corpus { dir } = &cli.command {
        let (code, table) = corpus(&ctx.resolve(&dir.to_string_lossy()));
        return finish(&cli, Output { code, stdout: table, stderr: String::new() });
    }
    let out = match dispatch(&cli.command, &ctx) {
        Ok(doc) => {
            let stdout = if cli.summary {
                doc.summary.iter().fold(String::new(), |mut s, l| {
                    let _ = writeln!(s, "{l}");
                    s
                })
            } else {
                io::render(&doc.value)
            };
            let stderr = if doc.ok { String::new() } else { doc.summary.join("\n") + "\n" };
            Output { code: if doc.ok { EXIT_OK } else { EXIT_MATH }, stdout, stderr }
        }
        Err(Failure::Input(msg)) => Output {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("input error: {msg}\n"),
        },
        Err(Failure::Math(msg)) => Output {
            code: EXIT_MATH,
            stdout: io::render(&json!({"ok": false, "error": msg})),
            stderr: format!("check failed: {msg}\n"),
        },
    };
    finish(&cli, out)
}

fn finish(cli: &Cli, mut out: Output) -> Output {
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.stdout) {
            return Output { code: EXIT_INPUT, stdout: String::new(), stderr: format!("cannot write {}: {e}\n", path.display()) };
        }
        out.stdout.clear();
    }
    out
}

/// `expected` matches `actual` when every object key of `expected` is present
/// with a matching value; arrays match elementwise and must have equal length.
pub fn json_subset(expected: &Value, actual: &Value) -> bool {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e.iter().all(|(k, v)| a.get(k).is_some_and(|x| json_subset(v, x))),
        (Value::Array(e), Value::Array(a)) => e.len() == a.len() && e.iter().zip(a).all(|(x, y)| json_subset(x, y)),
        _ => expected == actual,
    }
}

/// Outcome of one corpus case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub command: String,
    pub passed: bool,
    pub detail: String,
}

/// A case file is `{"argv": [...], "expect": {"exit": code, "output": {...}}}`,
/// with `argv` starting at the subcommand; `output` is matched as a subset of
/// the JSON document, and `stdout_contains` against the raw output.
fn run_case(path: &Path) -> CaseResult {
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let fail = |command: String, detail: String| CaseResult { name: name.clone(), command, passed: false, detail };
    let case = match std::fs::read_to_string(path).map_err(|e| e.to_string()).and_then(|t| io::parse(&t).map_err(|e| e.to_string())) {
        Ok(v) => v,
        Err(e) => return fail(String::new(), format!("unreadable case: {e}")),
    };
    let Some(args) = case.get("argv").and_then(Value::as_array) else {
        return fail(String::new(), "case has no argv list".into());
    };
    let mut argv = vec!["repdesc".to_string()];
    argv.extend(args.iter().map(|a| a.as_str().map_or_else(|| a.to_string(), str::to_string)));
    let command = argv.get(1).cloned().unwrap_or_default();
    let base = path.parent().unwrap_or(Path::new("."));
    let out = run_in(&argv, base);
    let expect = case.get("expect").cloned().unwrap_or(json!({}));
    let want_code = expect.get("exit").and_then(Value::as_i64).unwrap_or(0) as i32;
    if out.code != want_code {
        return fail(command, format!("exit {} (expected {want_code}) {}", out.code, out.stderr.trim()));
    }
    if let Some(want) = expect.get("output") {
        match io::parse(&out.stdout) {
            Ok(got) if json_subset(want, &got) => {}
            Ok(_) => return fail(command, "output differs from the expected values".into()),
            Err(e) => return fail(command, format!("output is not JSON: {e}")),
        }
    }
    if let Some(s) = expect.get("stdout_contains").and_then(Value::as_str) {
        if !out.stdout.contains(s) {
            return fail(command, format!("output does not contain {s:?}"));
        }
    }
    CaseResult { name, command, passed: true, detail: String::new() }
}

/// Run every `*.json` case in `dir` (in parallel), ordered by case name.
pub fn corpus_results(dir: &Path) -> Result<Vec<CaseResult>, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("cannot read {}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.is_file())
        .collect();
    files.sort();
    let results = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(move || run_case(f))).collect();
        handles.into_iter().map(|h| h.join().expect("case runner panicked")).collect::<Vec<_>>()
    });
    Ok(results)
}

/// Exit code and the printed table.
pub fn corpus(dir: &Path) -> (i32, String) {
    let results = match corpus_results(dir) {
        Ok(r) => r,
        Err(e) => return (EXIT_INPUT, format!("{e}\n")),
    };
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let mut table = format!("{:width$}  {:18}  result\n", "case", "command");
    for r in &results {
        let _ = write!(table, "{:width$}  {:18}  {}", r.name, r.command, pass(r.passed));
        if !r.passed {
            let _ = write!(table, "  {}", r.detail);
        }
        table.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(table, "{} cases, {} passed, {} failed", results.len(), results.len() - failed, failed);
    (if failed == 0 { EXIT_OK } else { EXIT_MATH }, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("repdesc").chain(s.split_whitespace()).map(str::to_string).collect()
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&argv("frobnicate")).code, EXIT_USAGE);
        assert_eq!(run(&argv("chartable")).code, EXIT_USAGE);
        assert_eq!(run(&argv("--help")).code, EXIT_OK);
    }

    #[test]
    fn input_errors_exit_three() {
        assert_eq!(run(&argv("chartable --group /nonexistent/g.json")).code, EXIT_INPUT);
        assert_eq!(run(&argv("chartable --group S4 --bound 10")).code, EXIT_INPUT);
    }

    #[test]
    fn devissage_on_s3() {
        let out = run(&argv("devissage --group S3 --rep irrep:2 --normal alternating"));
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let v = io::parse(&out.stdout).unwrap();
        assert_eq!((v["t"].as_u64(), v["s"].as_u64(), v["verify"].as_bool()), (Some(0), Some(1), Some(true)));
    }

    #[test]
    fn subset_matching() {
        let a = json!({"x": 1, "y": [1, {"z": 2, "w": 3}]});
        assert!(json_subset(&json!({"y": [1, {"z": 2}]}), &a));
        assert!(!json_subset(&json!({"y": [1]}), &a));
        assert!(!json_subset(&json!({"x": 2}), &a));
    }
}
