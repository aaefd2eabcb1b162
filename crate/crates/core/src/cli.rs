//! Command-line harness.
//!
//! Exit codes: 0 when every checked relation holds, 1 when a verification
//! fails, 2 for usage and configuration errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::braid::{family_braid_check, FamilyReport};
use crate::commute::cross_family_commute;
use crate::error::Error;
use crate::families::{random, Case2Line, OperatorFamily};
use crate::field::FieldElement;
use crate::json::{
    self, FamilyDescriptor, PresetName, SegmentJson,
};
use crate::pddo::Degeneracy;
use crate::poly::{MultiPoly, SlotPoly};
use crate::table::{apply_word, polynomial_table, staircase};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TABLE_HELP: &str = "\
Table convention: permutations are functions composed as (uv)(k) = u(v(k)),
written in one-line notation. The entry for w applies the operators along the
lexicographically smallest reduced word (a1,...,ak) of w^-1 w0, right to left,
to the seed (default: the staircase x1^(n-1) x2^(n-2) ... x(n-1)). Every
reduced word is checked to give the same polynomial. Entries are listed in
lexicographic order of w; n is capped at 6.";

#[derive(Parser, Debug)]
#[command(name = "pddo", version, about = "Divided difference operator families: braid, Hecke and commutation checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the braid relations of a family.
    Verify(FamilyArgs),
    /// Print Hecke parameters (μ, ν) with π² = μπ + ν for each operator.
    Hecke(FamilyArgs),
    /// Check commutation between two families on the same variables.
    Commute(CommuteArgs),
    /// Generate the polynomial table indexed by permutations.
    #[command(after_help = TABLE_HELP)]
    Table(TableArgs),
    /// Apply a word of operators to a polynomial.
    Apply(ApplyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// case1 | case2 | degen-t | vanq0 | zeta-pair | preset:<pure_ddiff|demazure|grothendieck>
    #[arg(long)]
    pub family: Option<String>,
    /// Comma-separated constants: a,b,c,d[,e]; d for pure_ddiff; β for grothendieck; a,b for zeta-pair.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// Second-case line per index, e.g. l1,l4,l2.
    #[arg(long)]
    pub lines: Option<String>,
    /// Variant 1..4 for zeta-pair.
    #[arg(long)]
    pub variant: Option<u8>,
    /// Family descriptor as JSON, inline or a file path.
    #[arg(long)]
    pub config: Option<String>,
    /// Draw this many random constraint-satisfying parameter sets instead of --params.
    #[arg(long)]
    pub random_trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct CommuteArgs {
    #[command(flatten)]
    pub first: FamilyArgs,
    #[arg(long)]
    pub family2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub params2: Option<String>,
    #[arg(long)]
    pub lines2: Option<String>,
    #[arg(long)]
    pub variant2: Option<u8>,
    #[arg(long)]
    pub config2: Option<String>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub fam: FamilyArgs,
    /// Seed polynomial as a JSON term list, inline or a file path.
    #[arg(long)]
    pub seed_poly: Option<String>,
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    #[command(flatten)]
    pub fam: FamilyArgs,
    /// Indices a1,...,ak; π_{a1} is applied last.
    #[arg(long, default_value = "")]
    pub word: String,
    /// Polynomial as a JSON term list, inline or a file path.
    #[arg(long)]
    pub poly: String,
}

/// An error with the exit code it maps to.
#[derive(Debug)]
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

/// Inline JSON, or else the contents of the named file.
fn read_inline_or_file(arg: &str) -> std::result::Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure(EXIT_USAGE, format!("cannot read {}: {}", arg, e)))
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn params_exact(text: Option<&str>, k: usize, what: &str) -> std::result::Result<Vec<FieldElement>, Failure> {
    let v = json::parse_params(text.unwrap_or(""))?;
    if v.len() != k {
        return Err(usage(format!("{} expects {} parameters, got {}", what, k, v.len())));
    }
    Ok(v)
}

fn four(v: &[FieldElement]) -> [FieldElement; 4] {
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

fn parse_lines(text: Option<&str>, len: usize) -> std::result::Result<Vec<Case2Line>, Failure> {
    match text {
        None => Ok(vec![Case2Line::L1; len]),
        Some(t) => t
            .split(',')
            .map(|s| s.parse::<Case2Line>().map_err(Failure::from))
            .collect(),
    }
}

struct FamilySelection<'a> {
    n: Option<usize>,
    family: Option<&'a str>,
    params: Option<&'a str>,
    lines: Option<&'a str>,
    variant: Option<u8>,
    config: Option<&'a str>,
}

impl<'a> FamilySelection<'a> {
    fn first(a: &'a FamilyArgs) -> Self {
        FamilySelection {
            n: a.n,
            family: a.family.as_deref(),
            params: a.params.as_deref(),
            lines: a.lines.as_deref(),
            variant: a.variant,
            config: a.config.as_deref(),
        }
    }

    fn descriptor(&self) -> std::result::Result<FamilyDescriptor, Failure> {
        if let Some(c) = self.config {
            return Ok(json::parse_descriptor(&read_inline_or_file(c)?)?);
        }
        let family = self.family.ok_or_else(|| usage("--family or --config is required"))?;
        let need_n = || self.n.ok_or_else(|| usage("--n is required"));
        let d = match family {
            "case1" => {
                let p = params_exact(self.params, 5, "case1")?;
                FamilyDescriptor::Case1 {
                    n: need_n()?,
                    params: four(&p),
                    e: p[4].clone(),
                }
            }
            "case2" => {
                let n = need_n()?;
                let p = params_exact(self.params, 4, "case2")?;
                FamilyDescriptor::Case2 {
                    n,
                    params: four(&p),
                    lines: parse_lines(self.lines, n.saturating_sub(1))?,
                }
            }
            "zeta-pair" => {
                let p = params_exact(self.params, 2, "zeta-pair")?;
                FamilyDescriptor::ZetaPair {
                    a: p[0].clone(),
                    b: p[1].clone(),
                    variant: self.variant.unwrap_or(1),
                }
            }
            "degen-t" | "vanq0" | "user" => {
                return Err(usage(format!("--family {} needs --config or --random-trials", family)))
            }
            other => match other.strip_prefix("preset:") {
                Some(name) => {
                    let n = need_n()?;
                    let (name, param) = match name {
                        "pure_ddiff" => (PresetName::PureDdiff, Some(params_exact(self.params, 1, name)?)),
                        "demazure" => (PresetName::Demazure, None),
                        "grothendieck" => (PresetName::Grothendieck, Some(params_exact(self.params, 1, name)?)),
                        _ => return Err(usage(format!("unknown preset {:?}", name))),
                    };
                    FamilyDescriptor::Preset {
                        n,
                        name,
                        param: param.map(|p| p[0].clone()),
                    }
                }
                None => return Err(usage(format!("unknown family {:?}", other))),
            },
        };
        Ok(d)
    }

    fn random_descriptor<R: Rng>(&self, rng: &mut R) -> std::result::Result<FamilyDescriptor, Failure> {
        let family = self.family.ok_or_else(|| usage("--random-trials needs --family"))?;
        let n = if family == "zeta-pair" {
            3
        } else {
            self.n.ok_or_else(|| usage("--n is required"))?
        };
        if !(2..=json::MAX_VARS).contains(&n) {
            return Err(usage(format!("n = {} out of range", n)));
        }
        let terms = |p: &SlotPoly| json::poly_terms(p.as_multipoly());
        let params = |p: &crate::families::CaseParams| [p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone()];
        Ok(match family {
            "case1" => {
                let p = random::case_params(rng);
                let e = random::case1_e(rng, &p);
                FamilyDescriptor::Case1 { n, params: params(&p), e }
            }
            "case2" => {
                let p = random::case_params(rng);
                FamilyDescriptor::Case2 {
                    n,
                    params: params(&p),
                    lines: random::lines(rng, n - 1),
                }
            }
            "degen-t" => {
                let (qhat, p, pairs) = random::degenerate_t(rng, n - 1);
                FamilyDescriptor::DegenT {
                    n,
                    qhat: terms(&qhat),
                    p,
                    pairs,
                }
            }
            "vanq0" => {
                if n < 4 {
                    return Err(usage("vanq0 needs n ≥ 4"));
                }
                let mu = random::nonzero_rational(rng);
                let segments = random::vanq0_segments(rng, n, &mu)
                    .into_iter()
                    .map(|s| match s {
                        crate::families::Segment::Scalar(i) => SegmentJson::Scalar(i),
                        crate::families::Segment::Isolated { index, phi, psi } => SegmentJson::Isolated {
                            index,
                            phi: terms(&phi),
                            psi: terms(&psi),
                        },
                        crate::families::Segment::Interval { start, params: p, lines } => {
                            SegmentJson::Interval {
                                start,
                                params: params(&p),
                                lines,
                            }
                        }
                    })
                    .collect();
                FamilyDescriptor::Vanq0 { n, mu, segments }
            }
            "zeta-pair" => FamilyDescriptor::ZetaPair {
                a: random::nonzero_rational(rng),
                b: random::rational(rng),
                variant: rng.gen_range(1..=4),
            },
            other => return Err(usage(format!("no random draws for family {:?}", other))),
        })
    }
}

/// The families selected by the arguments, with their descriptors.
fn families(args: &FamilyArgs) -> std::result::Result<Vec<(FamilyDescriptor, OperatorFamily)>, Failure> {
    let sel = FamilySelection::first(args);
    let descriptors = match args.random_trials {
        Some(k) => {
            if args.params.is_some() || args.config.is_some() {
                return Err(usage("--random-trials cannot be combined with --params or --config"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.rng_seed);
            (0..k)
                .map(|_| sel.random_descriptor(&mut rng))
                .collect::<std::result::Result<Vec<_>, _>>()?
        }
        None => vec![sel.descriptor()?],
    };
    descriptors
        .into_iter()
        .map(|d| {
            let fam = d.build()?;
            Ok((d, fam))
        })
        .collect()
}

fn single_family(args: &FamilyArgs) -> std::result::Result<OperatorFamily, Failure> {
    if args.random_trials.is_some() {
        return Err(usage("--random-trials is only supported by verify and hecke"));
    }
    Ok(families(args)?.pop().expect("one family").1)
}

fn report_json(rep: &FamilyReport) -> Value {
    serde_json::to_value(rep.summary()).expect("summary serializes")
}

fn report_text(rep: &FamilyReport, out: &mut String) {
    for (i, r) in &rep.cubic {
        out.push_str(&format!("  cubic ({}, {}): {}\n", i, i + 1, r));
        if let Some((label, diff)) = &r.failure {
            out.push_str(&format!("    {} difference: {}\n", label, diff));
        }
    }
    for (i, k, ok) in &rep.quadratic {
        out.push_str(&format!("  quadratic ({}, {}): {}\n", i, k, if *ok { "pass" } else { "fail" }));
    }
}

fn verify(args: &FamilyArgs) -> std::result::Result<(String, i32), Failure> {
    let fams = families(args)?;
    let mut all = true;
    let mut text = String::new();
    let mut runs = Vec::new();
    for (k, (d, fam)) in fams.iter().enumerate() {
        let rep = family_braid_check(fam);
        all &= rep.pass();
        match args.output {
            OutputFormat::Json => runs.push(json!({
                "descriptor": d,
                "report": report_json(&rep),
            })),
            OutputFormat::Text => {
                text.push_str(&format!(
                    "family {} ({}), n = {}: {}\n",
                    k + 1,
                    fam.provenance(),
                    fam.n(),
                    if rep.pass() { "pass" } else { "FAIL" }
                ));
                report_text(&rep, &mut text);
            }
        }
    }
    let body = match args.output {
        OutputFormat::Json => pretty(&json!({ "pass": all, "runs": runs })),
        OutputFormat::Text => {
            text.push_str(&format!("overall: {}\n", if all { "pass" } else { "FAIL" }));
            text
        }
    };
    Ok((body, if all { EXIT_PASS } else { EXIT_FAIL }))
}

fn degeneracy_name(d: Degeneracy) -> &'static str {
    match d {
        Degeneracy::NonDegenerate => "non-degenerate",
        Degeneracy::QZero => "q0-zero",
        Degeneracy::TZero => "t-zero",
        Degeneracy::Zero => "zero",
    }
}

fn hecke(args: &FamilyArgs) -> std::result::Result<(String, i32), Failure> {
    let fams = families(args)?;
    let mut text = String::new();
    let mut runs = Vec::new();
    for (d, fam) in &fams {
        let mut ops = Vec::new();
        for (k, op) in fam.ops().iter().enumerate() {
            let h = op.hecke_params();
            match args.output {
                OutputFormat::Json => ops.push(json!({
                    "index": k + 1,
                    "degeneracy": degeneracy_name(op.degeneracy()),
                    "hecke": h.as_ref().map(|(mu, nu)| json!({"mu": mu, "nu": nu})),
                })),
                OutputFormat::Text => text.push_str(&match &h {
                    Some((mu, nu)) => format!("π{}: μ = {}, ν = {}\n", k + 1, mu, nu),
                    None => format!("π{}: no Hecke relation\n", k + 1),
                }),
            }
        }
        runs.push(json!({ "descriptor": d, "operators": ops }));
    }
    let body = match args.output {
        OutputFormat::Json => pretty(&json!({ "runs": runs })),
        OutputFormat::Text => text,
    };
    Ok((body, EXIT_PASS))
}

fn commute(args: &CommuteArgs) -> std::result::Result<(String, i32), Failure> {
    let a = single_family(&args.first)?;
    let second = FamilySelection {
        n: args.first.n,
        family: args.family2.as_deref(),
        params: args.params2.as_deref(),
        lines: args.lines2.as_deref(),
        variant: args.variant2,
        config: args.config2.as_deref(),
    };
    let b = second.descriptor()?.build()?;
    let rep = cross_family_commute(&a, &b)?;
    let code = if rep.pass() { EXIT_PASS } else { EXIT_FAIL };
    let body = match args.first.output {
        OutputFormat::Json => pretty(&json!({
            "pass": rep.pass(),
            "same_index": rep.same.iter().map(|(i, ok)| json!({"index": i, "pass": ok})).collect::<Vec<_>>(),
            "distant": rep.distant.iter().map(|(i, k, ok)| json!({"indices": [i, k], "pass": ok})).collect::<Vec<_>>(),
            "consecutive": rep.consecutive.iter().map(|(i, k, ok)| json!({"indices": [i, k], "pass": ok})).collect::<Vec<_>>(),
        })),
        OutputFormat::Text => {
            let mark = |ok: bool| if ok { "pass" } else { "fail" };
            let mut t = String::new();
            for (i, ok) in &rep.same {
                t.push_str(&format!("same index {}: {}\n", i, mark(*ok)));
            }
            for (i, k, ok) in &rep.distant {
                t.push_str(&format!("distant ({}, {}): {}\n", i, k, mark(*ok)));
            }
            for (i, k, ok) in &rep.consecutive {
                t.push_str(&format!("consecutive ({}, {}): {}\n", i, k, mark(*ok)));
            }
            t.push_str(&format!("overall: {}\n", mark(rep.pass())));
            t
        }
    };
    Ok((body, code))
}

fn table(args: &TableArgs) -> std::result::Result<(String, i32), Failure> {
    let fam = single_family(&args.fam)?;
    let seed = match &args.seed_poly {
        Some(s) => json::parse_poly(&read_inline_or_file(s)?, Some(fam.n()))?,
        None => staircase(fam.n()),
    };
    let entries = match polynomial_table(&fam, &seed) {
        Ok(e) => e,
        Err(Error::BraidFailure(msg)) => return Err(Failure(EXIT_FAIL, format!("braid check failed: {}", msg))),
        Err(e) => return Err(e.into()),
    };
    let body = match args.fam.output {
        OutputFormat::Json => pretty(&json::table_to_value(fam.n(), &entries)),
        OutputFormat::Text => {
            let rows: Vec<(String, String, String)> = entries
                .iter()
                .map(|e| {
                    let word: Vec<String> = e.word.iter().map(|i| i.to_string()).collect();
                    (e.perm.to_string(), format!("[{}]", word.join(",")), e.poly.to_string())
                })
                .collect();
            let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(4);
            let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(4);
            let mut t = format!("{:<w0$}  {:<w1$}  poly\n", "perm", "word");
            for (p, w, poly) in rows {
                t.push_str(&format!("{:<w0$}  {:<w1$}  {}\n", p, w, poly));
            }
            t
        }
    };
    Ok((body, EXIT_PASS))
}

fn apply(args: &ApplyArgs) -> std::result::Result<(String, i32), Failure> {
    let fam = single_family(&args.fam)?;
    let f: MultiPoly = json::parse_poly(&read_inline_or_file(&args.poly)?, Some(fam.n()))?;
    let word: Vec<usize> = if args.word.trim().is_empty() {
        Vec::new()
    } else {
        args.word
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad index {:?}", s))))
            .collect::<std::result::Result<_, _>>()?
    };
    let g = apply_word(&fam, &word, &f)?;
    let body = match args.fam.output {
        OutputFormat::Json => pretty(&serde_json::to_value(json::poly_terms(&g)).expect("terms serialize")),
        OutputFormat::Text => format!("{}\n", g),
    };
    Ok((body, EXIT_PASS))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

/// Run with the given arguments (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Hecke(a) => hecke(a),
        Command::Commute(a) => commute(a),
        Command::Table(a) => table(a),
        Command::Apply(a) => apply(a),
    };
    match result {
        Ok((body, code)) => {
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["pddo"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_case1() {
        let (code, out, _) = run_args(&["verify", "--n", "4", "--family", "case1", "--params", "1,2,1,2,3"]);
        assert_eq!(code, 0, "{}", out);
        assert!(out.contains("overall: pass"));
        let (code, _, err) = run_args(&["verify", "--n", "3", "--family", "case1", "--params", "1,1,1,0,1"]);
        assert_eq!(code, 2);
        assert!(err.contains("ad−bc ≠ 0"));
    }

    #[test]
    fn verify_failure_exit() {
        let user = r#"{"family":"user","n":3,"ops":[
            {"t":[{"e":[1,1],"c":"1"},{"e":[1,0],"c":"1"},{"e":[0,1],"c":"1"}],"q0":[{"e":[1,1],"c":"1"},{"e":[1,0],"c":"2"}]},
            {"t":[{"e":[1,1],"c":"1"},{"e":[1,0],"c":"1"},{"e":[0,1],"c":"1"}],"q0":[{"e":[1,1],"c":"1"},{"e":[1,0],"c":"2"}]}]}"#;
        let (code, out, err) = run_args(&["verify", "--config", user]);
        assert_eq!(code, 1, "{}{}", out, err);
    }

    #[test]
    fn table_json() {
        let (code, out, _) = run_args(&["table", "--n", "3", "--family", "preset:pure_ddiff", "--params", "1", "--output", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify"]).0, 2);
        assert_eq!(run_args(&["verify", "--n", "3", "--family", "nope"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn random_trials_deterministic() {
        let args = ["verify", "--n", "4", "--family", "case2", "--random-trials", "3", "--rng-seed", "7", "--output", "json"];
        let a = run_args(&args);
        let b = run_args(&args);
        assert_eq!(a.0, 0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn apply_word_cli() {
        let (code, out, _) = run_args(&[
            "apply", "--n", "3", "--family", "preset:pure_ddiff", "--params", "1", "--word", "1",
            "--poly", r#"[{"e":[2,0,0],"c":"1"}]"#, "--output", "json",
        ]);
        assert_eq!(code, 0);
        let p = json::parse_poly(&out, None).unwrap();
        assert_eq!(p.to_string(), "x1 + x2");
    }
}
