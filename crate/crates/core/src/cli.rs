//! The `pragmaql` command line.
//!
//! [`run`] does all the work and returns the exit code together with what
//! would be written to stdout and stderr, so the binary is a thin shell and
//! the front end can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::evaluation::{
    check_cc, classify_at, justify, pragmatic_extension, sigma, validate_overlay, Overlay,
};
use crate::formula::{parse_assertive, parse_radical, AssertiveFormula, Atom, Formula, RadicalFormula};
use crate::hilbert::{Projector, C64};
use crate::lattice::{
    export_lattice, find_distributivity_violation, generate_quotient, verify_isomorphism,
    verify_orthomodular, verify_ortholattice, ExportFormat, LawReport, QuotientLattice,
};
use crate::model::Model;
use crate::sampling::seeded;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pragmaql", version, about = "Truth and justification for quantum pragmatic formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a formula and print its canonical form
    Parse {
        #[arg(short = 'f', long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Truth value of a radical formula in a state
    Eval {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 's', long)]
        state: String,
        #[arg(short = 'f', long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Pragmatic extension (projector) of a quantum assertive formula
    Extension {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 'f', long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Justification value of a quantum assertive formula in a state
    Justify {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 's', long)]
        state: String,
        #[arg(short = 'f', long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Build the quotient lattice and verify its laws
    Lattice {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        gen: LatticeArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Validate a model, test the correctness criterion and check an overlay
    Check {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        overlay: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Export the quotient lattice as dot or structured JSON
    Export {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        gen: LatticeArgs,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct ModelArg {
    /// Model file; a bundled model name such as `qubit-zx.json` also works
    #[arg(short = 'm', long = "model")]
    pub path: PathBuf,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    /// Comma-separated atoms (default: every atom of the model)
    #[arg(long, value_delimiter = ',')]
    pub atoms: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
    Dot,
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

/// Loads a model file, falling back to a bundled model of the same name
/// when no such file exists.
pub fn resolve_model(path: &Path) -> Result<Model, String> {
    if !path.exists() {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if let Some(m) = Model::builtin(name) {
            return Ok(m);
        }
    }
    Model::load(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(arg: &ModelArg) -> Result<Model, Failure> {
    resolve_model(&arg.path).map_err(Failure::Domain)
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage("--format dot is only available for lattice and export".into()))
    } else {
        Ok(())
    }
}

fn json_out(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
    s.push('\n');
    s
}

/// Assertive when possible, radical otherwise. On failure the error of the
/// stratum the text most plausibly belongs to is reported.
fn parse_any(text: &str) -> Result<Formula, Failure> {
    match parse_assertive(text) {
        Ok(f) => Ok(f.into()),
        Err(ae) => match parse_radical(text) {
            Ok(r) => Ok(r.into()),
            Err(re) => {
                let looks_assertive = text.contains("|-") || text.chars().any(|c| c.is_ascii_uppercase());
                Err(domain(if looks_assertive { ae } else { re }))
            }
        },
    }
}

fn radical_formula(text: &str) -> Result<RadicalFormula, Failure> {
    match parse_radical(text) {
        Ok(r) => Ok(r),
        Err(e) if parse_assertive(text).is_ok() => Err(Failure::Domain(format!(
            "`{text}` is an assertive formula; assertive formulas have justification values, use `justify` ({e})"
        ))),
        Err(e) => Err(domain(e)),
    }
}

fn assertive_formula(text: &str) -> Result<AssertiveFormula, Failure> {
    match parse_assertive(text) {
        Ok(f) => Ok(f),
        Err(e) if parse_radical(text).is_ok() => Err(Failure::Domain(format!(
            "`{text}` is a radical formula; assert it as `|- {text}`, or use `eval` for its truth value ({e})"
        ))),
        Err(e) => Err(domain(e)),
    }
}

fn dispatch(command: Command) -> Result<(i32, String), Failure> {
    match command {
        Command::Parse { formula, format } => {
            no_dot(format)?;
            cmd_parse(&formula, format).map(|s| (EXIT_OK, s))
        }
        Command::Eval {
            model,
            state,
            formula,
            format,
        } => {
            no_dot(format)?;
            let m = load(&model)?;
            cmd_eval(&m, &state, &formula, format).map(|s| (EXIT_OK, s))
        }
        Command::Extension { model, formula, format } => {
            no_dot(format)?;
            let m = load(&model)?;
            cmd_extension(&m, &formula, format).map(|s| (EXIT_OK, s))
        }
        Command::Justify {
            model,
            state,
            formula,
            format,
        } => {
            no_dot(format)?;
            let m = load(&model)?;
            cmd_justify(&m, &state, &formula, format).map(|s| (EXIT_OK, s))
        }
        Command::Lattice { model, gen, format } => {
            let m = load(&model)?;
            cmd_lattice(&m, &gen, format).map(|s| (EXIT_OK, s))
        }
        Command::Check {
            model,
            samples,
            seed,
            overlay,
            format,
        } => {
            no_dot(format)?;
            let m = load(&model)?;
            cmd_check(&m, samples, seed, overlay.as_deref(), format)
        }
        Command::Export { model, gen, format } => {
            let export_format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Structured => ExportFormat::Structured,
                Format::Human => {
                    return Err(Failure::Usage("export writes --format dot or --format structured".into()))
                }
            };
            let m = load(&model)?;
            let lattice = build_lattice(&m, &gen)?;
            let mut out = export_lattice(&lattice, export_format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Ok((EXIT_OK, out))
        }
    }
}

fn cmd_parse(text: &str, format: Format) -> Result<String, Failure> {
    let formula = parse_any(text)?;
    let printed = formula.to_string();
    Ok(match (&formula, format) {
        (Formula::Radical(_), Format::Human) => format!("radical: {printed}\n"),
        (Formula::Assertive(a), Format::Human) => {
            let report = a.quantum_fragment_check();
            let mut s = format!("assertive: {printed}\n");
            if report.is_quantum {
                s.push_str("quantum fragment: yes\n");
            } else {
                s.push_str("quantum fragment: no\n");
                for v in &report.violations {
                    let _ = writeln!(s, "  at {:?}: {}", v.path, v.reason);
                }
            }
            s
        }
        (Formula::Radical(r), _) => json_out(json!({
            "kind": "radical",
            "printed": printed,
            "depth": r.depth(),
        })),
        (Formula::Assertive(a), _) => {
            let report = a.quantum_fragment_check();
            json_out(json!({
                "kind": "assertive",
                "printed": printed,
                "depth": a.depth(),
                "quantum": report.is_quantum,
                "violations": report.violations,
            }))
        }
    })
}

fn cmd_eval(model: &Model, state: &str, text: &str, format: Format) -> Result<String, Failure> {
    let r = radical_formula(text)?;
    let value = sigma(model, state, &r).map_err(domain)?;
    if format == Format::Human {
        return Ok(format!("{value}\n"));
    }
    let s = model.state(state).expect("sigma checked the state");
    let mut atoms = serde_json::Map::new();
    for atom in r.atoms() {
        let p = model.atom_property(atom).expect("sigma checked the atoms");
        atoms.insert(
            atom.to_string(),
            json!({
                "probability": p.expectation(s.amplitudes()),
                "value": classify_at(p, s, model.eps).to_string(),
            }),
        );
    }
    Ok(json_out(json!({
        "state": state,
        "formula": r.to_string(),
        "value": value.to_string(),
        "atoms": atoms,
    })))
}

fn fmt_complex(z: C64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

fn fmt_projector(p: &Projector) -> String {
    let m = p.matrix();
    let mut s = format!("rank {}\n", p.rank());
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| fmt_complex(m[(i, j)])).collect();
        let _ = writeln!(s, "[{}]", row.join(", "));
    }
    s
}

fn cmd_extension(model: &Model, text: &str, format: Format) -> Result<String, Failure> {
    let f = assertive_formula(text)?;
    let p = pragmatic_extension(model, &f).map_err(domain)?;
    Ok(match format {
        Format::Human => fmt_projector(&p),
        _ => json_out(json!({ "formula": f.to_string(), "projector": p })),
    })
}

fn cmd_justify(model: &Model, state: &str, text: &str, format: Format) -> Result<String, Failure> {
    let f = assertive_formula(text)?;
    let value = justify(model, state, &f).map_err(domain)?;
    Ok(match format {
        Format::Human => format!("{value}\n"),
        _ => json_out(json!({
            "state": state,
            "formula": f.to_string(),
            "value": value.to_string(),
        })),
    })
}

fn build_lattice(model: &Model, args: &LatticeArgs) -> Result<QuotientLattice, Failure> {
    let atoms: Vec<Atom> = if args.atoms.is_empty() {
        model.atom_names().into_iter().cloned().collect()
    } else {
        args.atoms
            .iter()
            .map(|a| Atom::new(a.trim()).map_err(domain))
            .collect::<Result<_, _>>()?
    };
    generate_quotient(model, &atoms, args.depth).map_err(domain)
}

fn lattice_laws(lattice: &QuotientLattice) -> Vec<LawReport> {
    let mut laws = verify_ortholattice(&lattice.tables);
    laws.push(verify_orthomodular(&lattice.tables));
    laws.push(verify_isomorphism(lattice));
    laws
}

fn cmd_lattice(model: &Model, args: &LatticeArgs, format: Format) -> Result<String, Failure> {
    let lattice = build_lattice(model, args)?;
    let laws = lattice_laws(&lattice);
    let violation = find_distributivity_violation(&lattice.tables);
    Ok(match format {
        Format::Dot => export_lattice(&lattice, ExportFormat::Dot),
        Format::Structured => json_out(json!({
            "lattice": lattice,
            "laws": laws,
            "distributivity_violation": violation.map(|(a, b, c)| vec![a, b, c]),
        })),
        Format::Human => {
            let t = &lattice.tables;
            let mut s = format!("{} classes (bottom {}, top {})\n", lattice.len(), t.bottom, t.top);
            for e in &lattice.elements {
                let mark = if e.synthesized { "  (closure)" } else { "" };
                let _ = writeln!(s, "  {:>3}  rank {}  {}{mark}", e.id, e.projector.rank(), e.formula);
            }
            s.push_str("laws:\n");
            for law in &laws {
                let _ = writeln!(s, "  {law}");
            }
            match violation {
                Some((a, b, c)) => {
                    let _ = writeln!(s, "distributivity: fails at ({a}, {b}, {c})");
                }
                None => s.push_str("distributivity: holds\n"),
            }
            s
        }
    })
}

fn cmd_check(
    model: &Model,
    samples: usize,
    seed: u64,
    overlay: Option<&Path>,
    format: Format,
) -> Result<(i32, String), Failure> {
    let mut rng = seeded(seed);
    let mut report = check_cc(model, samples, &mut rng);
    if let Some(path) = overlay {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
        let ov = Overlay::parse(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
        report.extend(validate_overlay(model, &ov));
    }
    let code = if report.ok() { EXIT_OK } else { EXIT_DOMAIN };
    let out = match format {
        Format::Human => format!("{report}\n"),
        _ => json_out(json!({
            "samples": samples,
            "seed": seed,
            "report": report,
        })),
    };
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("pragmaql").chain(args.iter().copied()))
    }

    #[test]
    fn eval_undefined() {
        let out = run_args(&["eval", "-m", "qubit-zx.json", "-s", "x+", "-f", "az"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "Undefined\n"));
    }

    #[test]
    fn justify_negation() {
        let out = run_args(&["justify", "-m", "qubit-zx.json", "-s", "z-", "-f", "N(|- az)"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "J\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["eval", "-s", "x+", "-f", "az"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["parse", "-f", "az", "--format", "dot"]).code, EXIT_USAGE);
        let out = run_args(&["eval", "-m", "qubit-zx.json", "-s", "nowhere", "-f", "az"]);
        assert_eq!(out.code, EXIT_DOMAIN);
        assert!(out.stderr.contains("nowhere"));
        assert_eq!(run_args(&["eval", "-m", "/no/such/model.json", "-s", "x+", "-f", "az"]).code, EXIT_DOMAIN);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn strata_are_kept_apart() {
        let out = run_args(&["eval", "-m", "qubit-zx.json", "-s", "z+", "-f", "|- az"]);
        assert_eq!(out.code, EXIT_DOMAIN);
        assert!(out.stderr.contains("justify"));
        let out = run_args(&["justify", "-m", "qubit-zx.json", "-s", "z+", "-f", "az"]);
        assert_eq!(out.code, EXIT_DOMAIN);
        let out = run_args(&["justify", "-m", "qubit-zx.json", "-s", "z+", "-f", "|- (az & ax)"]);
        assert_eq!(out.code, EXIT_DOMAIN);
        assert!(out.stderr.contains("quantum"), "{}", out.stderr);
    }

    #[test]
    fn parse_reports_kind() {
        let out = run_args(&["parse", "-f", "N |- p K |- q"]);
        assert_eq!(out.stdout, "assertive: (N((|- p)) K (|- q))\nquantum fragment: yes\n");
        let out = run_args(&["parse", "-f", "p -> q", "--format", "structured"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["kind"], "radical");
        let out = run_args(&["parse", "-f", "p ->"]);
        assert_eq!(out.code, EXIT_DOMAIN);
    }

    #[test]
    fn lattice_dot() {
        let out = run_args(&["lattice", "-m", "qubit-zx.json", "--atoms", "az,ax", "--depth", "3", "--format", "dot"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().filter(|l| l.contains("[label=")).count(), 6);
    }

    #[test]
    fn check_is_ok() {
        let out = run_args(&["check", "-m", "qubit-zx.json", "--samples", "50", "--seed", "7"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "ok\n"));
    }
}
