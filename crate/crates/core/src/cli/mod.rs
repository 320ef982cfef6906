//! The `twinrep` command line.
//!
//! Exit codes: `0` success, `1` a mathematical check failed, `2` usage error.

mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    check_irreducibility_criterion, classify_involution_2x2, irreducibility_verdict, kernel_search,
    verify_relations, wt_obstruction_check, IrreducibilityVerdict,
};
use crate::freegroup::{jacobian_matrix, FreeAut};
use crate::matrix::Matrix;
use crate::presentations::{build_presentation, GroupKind};
use crate::reps::{MatrixRep, RepDescriptor, RepName};
use crate::ring::{format_rational, parse_rational, RatFunc};
use crate::{sampling, Error};

pub use suite::{verify_paper_suite, CheckResult, SuiteOptions, SuiteReport};

#[derive(Parser, Debug)]
#[command(
    name = "twinrep",
    version,
    about = "Exact representations of twin groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct RepArgs {
    /// eta1, eta1p, eta1q, eta2, vt1, t2fam or vtwt2
    #[arg(long, default_value = "eta1")]
    rep: String,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long)]
    family: Option<u8>,
    /// Target group of vtwt2: VT or WT
    #[arg(long)]
    kind: Option<String>,
}

impl RepArgs {
    fn descriptor(&self) -> Result<RepDescriptor, Error> {
        let mut d = RepDescriptor::new(RepName::parse(&self.rep)?, self.n);
        let polys = [
            ("f", &self.f),
            ("b", &self.b),
            ("g", &self.g),
            ("a", &self.a),
            ("c", &self.c),
        ];
        for (k, v) in polys {
            if let Some(v) = v {
                d = d.param(k, v);
            }
        }
        if let Some(fam) = self.family {
            d = d.param("family", fam);
        }
        if let Some(kind) = &self.kind {
            d = d.param("kind", kind);
        }
        Ok(d)
    }

    fn build(&self) -> Result<(RepDescriptor, MatrixRep), Error> {
        let d = self.descriptor()?;
        let rep = d.build()?;
        Ok((d, rep))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generator images of a representation
    Emit {
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Evaluate every defining relation in a representation
    CheckRelations {
        #[command(flatten)]
        rep: RepArgs,
        /// Presentation to check against (defaults to the representation's group)
        #[arg(long)]
        against: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Decide absolute irreducibility at a rational point t
    Irreducible {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Representation to test; eta1p also checks the expected criterion
        #[arg(long, default_value = "eta1p")]
        rep: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// List nonempty twin-group elements up to a length that act trivially
    KernelSearch {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        maxlen: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Fox Jacobian of an endomorphism read from "xi -> word" lines
    FoxJacobian {
        #[arg(long)]
        file: std::path::PathBuf,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Family tag of a 2x2 involution given as "a,b,c,d" (row-major)
    ClassifyT2 {
        #[arg(long, allow_hyphen_values = true)]
        entries: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Check the welded relations on the VT_n extension of eta1
    WtObstruction {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run every check for 2 <= n <= n-max
    VerifyPaper {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, hide = true)]
        corrupt_eta1: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

enum Failure {
    Math(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CriterionMismatch(_)
            | Error::NotInvolution(_)
            | Error::UnclassifiableInvolution
            | Error::BlockStructureViolation(_) => Failure::Math(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    pass: bool,
}

fn pretty<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable output")
}

fn matrix_text(m: &Matrix<RatFunc>) -> String {
    m.to_string()
}

fn emit(rep_args: &RepArgs) -> Result<Output, Failure> {
    let (d, rep) = rep_args.build()?;
    let mut text = String::new();
    let mut images = Vec::new();
    for (l, m) in rep.images() {
        text.push_str(&format!("{l}:\n{}", matrix_text(m)));
        images.push(json!({ "gen": l.to_string(), "matrix": pretty(m) }));
    }
    let json = json!({
        "descriptor": pretty(&d),
        "group": format!("{}_{}", rep.kind(), rep.n()),
        "degree": rep.degree(),
        "images": images,
    });
    Ok(Output {
        text,
        json,
        pass: true,
    })
}

fn check_relations(rep_args: &RepArgs, against: &Option<String>) -> Result<Output, Failure> {
    let (_, rep) = rep_args.build()?;
    let kind = match against {
        Some(k) => GroupKind::parse(k)?,
        None => rep.kind(),
    };
    let report = verify_relations(&rep, &build_presentation(kind, rep.n())?)?;
    let mut text = String::new();
    for r in &report.relations {
        text.push_str(&format!(
            "{} {}\n",
            if r.holds { "ok  " } else { "FAIL" },
            r.relation
        ));
        if !r.holds {
            text.push_str(&format!(
                "  lhs:\n{}  rhs:\n{}",
                matrix_text(&r.lhs),
                matrix_text(&r.rhs)
            ));
        }
    }
    let violations = report.violations().count();
    text.push_str(&format!(
        "{}: {} relations, {violations} violated\n",
        report.presentation,
        report.relations.len()
    ));
    Ok(Output {
        text,
        json: pretty(&report),
        pass: violations == 0,
    })
}

fn verdict_text(v: &IrreducibilityVerdict) -> String {
    let verdict = match v.verdict {
        crate::analysis::Verdict::AbsolutelyIrreducible => "absolutely-irreducible",
        crate::analysis::Verdict::Reducible => "reducible",
    };
    let mut s = format!(
        "n = {}, t = {}: algebra dimension {}, {verdict}\n",
        v.n,
        format_rational(&v.t0),
        v.dim
    );
    if let Some(w) = &v.witness {
        let vector: Vec<String> = w.vector.iter().map(ToString::to_string).collect();
        let signs: Vec<String> = w.signs.iter().map(|(l, e)| format!("{l}:{e:+}")).collect();
        s.push_str(&format!(
            "witness: ({}) on the {} side, eigenvalues {}\n",
            vector.join(", "),
            pretty(&w.side).as_str().unwrap_or_default(),
            signs.join(" ")
        ));
    }
    s
}

fn irreducible(n: usize, t: &str, rep: &str) -> Result<Output, Failure> {
    let t0 = parse_rational(t)?;
    let v = if RepName::parse(rep)? == RepName::Eta1p {
        check_irreducibility_criterion(n, &t0)?
    } else {
        irreducibility_verdict(&RepDescriptor::new(RepName::parse(rep)?, n).build()?, &t0)?
    };
    Ok(Output {
        text: verdict_text(&v),
        json: pretty(&v),
        pass: true,
    })
}

fn kernel(rep_args: &RepArgs, maxlen: usize) -> Result<Output, Failure> {
    let (d, rep) = rep_args.build()?;
    let words: Vec<String> = kernel_search(&rep, maxlen)?
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = if words.is_empty() {
        format!("no nontrivial kernel elements up to length {maxlen}\n")
    } else {
        words.iter().map(|w| format!("{w}\n")).collect()
    };
    let json = json!({ "descriptor": pretty(&d), "maxlen": maxlen, "kernel": words });
    Ok(Output {
        text,
        json,
        pass: true,
    })
}

fn fox(file: &std::path::Path) -> Result<Output, Failure> {
    let src = std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let phi = FreeAut::parse(&src)?;
    let j = jacobian_matrix(&phi);
    let magnus = j.magnus();
    let text = format!("Jacobian:\n{j}Magnus specialization:\n{magnus}");
    let json = json!({ "jacobian": pretty(&j), "magnus": pretty(&magnus) });
    Ok(Output {
        text,
        json,
        pass: true,
    })
}

fn classify(entries: &str) -> Result<Output, Failure> {
    let cells: Vec<String> = entries.split(',').map(|s| s.trim().to_string()).collect();
    if cells.len() != 4 {
        return Err(Failure::Usage(format!(
            "expected 4 comma-separated entries, got {}",
            cells.len()
        )));
    }
    let m = Matrix::parse_rows(&[cells[..2].to_vec(), cells[2..].to_vec()])?;
    let tag = classify_involution_2x2(&m)?;
    Ok(Output {
        text: format!("family {tag}\n"),
        json: json!({ "family": tag }),
        pass: true,
    })
}

fn wt(n: usize, b: &str) -> Result<Output, Failure> {
    let w = wt_obstruction_check(n, &b.parse()?)?;
    let mut text = String::new();
    for c in &w.indices {
        text.push_str(&format!(
            "i = {}: welded {}, welded-alt {}, mixed-variant {}\n",
            c.i,
            holds(c.welded),
            holds(c.welded_alt),
            holds(c.mixed_variant)
        ));
    }
    if let Some(wit) = &w.witness {
        text.push_str(&format!(
            "witness: {} differs at ({}, {}): {} vs {}\n",
            wit.relation, wit.row, wit.col, wit.lhs, wit.rhs
        ));
    }
    text.push_str(if w.obstructed {
        "obstructed\n"
    } else {
        "not obstructed\n"
    });
    Ok(Output {
        text,
        json: pretty(&w),
        pass: w.obstructed,
    })
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn verify_paper(n_max: usize, corrupt_eta1: bool) -> Result<Output, Failure> {
    if n_max < 3 {
        return Err(Failure::Usage(format!(
            "--n-max must be at least 3, got {n_max}"
        )));
    }
    let report = verify_paper_suite(&SuiteOptions {
        n_max,
        seed: sampling::seed_from_env(),
        corrupt_eta1,
    });
    let mut text = String::new();
    for c in &report.checks {
        text.push_str(&format!(
            "{} {:<44} {:<42} {:>9.1} ms\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.reference,
            c.elapsed.as_secs_f64() * 1e3
        ));
        if !c.pass {
            text.push_str(&format!("     {}\n", c.detail));
        }
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    text.push_str(&format!(
        "{}: {passed}/{} checks passed\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.checks.len()
    ));
    Ok(Output {
        text,
        json: pretty(&report),
        pass: report.pass,
    })
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (result, format) = match &cli.command {
        Command::Emit { rep, fmt } => (emit(rep), fmt.format),
        Command::CheckRelations { rep, against, fmt } => {
            (check_relations(rep, against), fmt.format)
        }
        Command::Irreducible { n, t, rep, fmt } => (irreducible(*n, t, rep), fmt.format),
        Command::KernelSearch { rep, maxlen, fmt } => (kernel(rep, *maxlen), fmt.format),
        Command::FoxJacobian { file, fmt } => (fox(file), fmt.format),
        Command::ClassifyT2 { entries, fmt } => (classify(entries), fmt.format),
        Command::WtObstruction { n, b, fmt } => (wt(*n, b), fmt.format),
        Command::VerifyPaper {
            n_max,
            corrupt_eta1,
            fmt,
        } => (verify_paper(*n_max, *corrupt_eta1), fmt.format),
    };
    match result {
        Ok(o) => {
            let _ = match format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                ),
            };
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
