use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gradlab::checks::{any_aborted, structure_checks, submodule_rows, unknown_predicates};
use gradlab::error::GradlabError;
use gradlab::format::{format_text, read_file, Document};
use gradlab::harness::generate::GeneratorParams;
use gradlab::harness::run::{load_suite, replay, run_suite, SuiteConfig};
use gradlab::harness::suite::{Kind, Obs};
use gradlab::render::{json_text, report_to_value, reports_table, table};
use gradlab::verify::verify;
use gradlab_core::fixtures::{FixtureOptions, Structure};
use gradlab_core::module_props::ModuleAnalysis;
use gradlab_core::report::{Caps, PropertyReport};
use serde_json::{json, Value};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Parser)]
#[command(name = "gradlab", version, about = "Exact computations with group-graded rings and modules")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,
    /// Largest element set any single check may enumerate.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap_elements: u64,
    /// Largest submodule lattice any single check may enumerate.
    #[arg(long, global = true, default_value_t = 10_000)]
    cap_lattice: usize,
    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run predicates on a ring or module file.
    Check {
        file: PathBuf,
        /// Predicate to run; repeatable. Default: every predicate.
        #[arg(long = "predicate")]
        predicates: Vec<String>,
    },
    /// Inspect the graded submodule lattice of a module file.
    Submodules {
        file: PathBuf,
        /// List every graded submodule.
        #[arg(long)]
        enumerate: bool,
        /// List the graded prime submodules.
        #[arg(long)]
        primes: bool,
        /// Prime, essential, semi-essential and radical rows for each named submodule.
        #[arg(long)]
        report: bool,
    },
    /// Rebuild the worked examples and compare every expected verdict.
    VerifyPaper {
        #[arg(long)]
        example: Option<String>,
        /// Prime field order for the fixtures built over a field.
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
    /// Check the implication suite over fixtures and seeded random instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of generated rings.
        #[arg(long, default_value_t = 200)]
        count: u64,
        /// Number of generated modules.
        #[arg(long, default_value_t = 60)]
        modules: u64,
        /// `default` or a JSON file listing implication names.
        #[arg(long, default_value = "default")]
        suite: String,
        /// Rerun a violation stored by an earlier run.
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Where a violation is written for replay.
        #[arg(long, default_value = "gradlab-violation.json")]
        violation_out: PathBuf,
    },
    /// Print a structure file in canonical form.
    Fmt { file: PathBuf },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ABORTED: u8 = 3;

struct Out {
    format: OutputFormat,
    quiet: bool,
}

impl Out {
    fn emit(&self, json: impl FnOnce() -> Value, text: impl FnOnce() -> String) {
        if self.quiet {
            return;
        }
        match self.format {
            OutputFormat::Json => print!("{}", json_text(&json())),
            OutputFormat::Table => print!("{}", text()),
        }
    }

    fn reports(&self, reports: &[PropertyReport]) {
        self.emit(|| json!({"reports": reports.iter().map(report_to_value).collect::<Vec<_>>()}), || reports_table(reports));
    }
}

fn fail(e: GradlabError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_INPUT)
}

fn load(file: &Path) -> Result<Document, GradlabError> {
    read_file(file)
}

fn cmd_check(out: &Out, caps: &Caps, file: &Path, predicates: &[String]) -> ExitCode {
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let unknown = unknown_predicates(&doc.structure, predicates);
    if !unknown.is_empty() {
        eprintln!("error: unknown predicate(s): {}", unknown.join(", "));
        return ExitCode::from(EXIT_INPUT);
    }
    let reports = structure_checks(&doc.structure, &doc.submodules, predicates, caps);
    out.reports(&reports);
    if any_aborted(&reports) {
        ExitCode::from(EXIT_ABORTED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_submodules(out: &Out, caps: &Caps, file: &Path, enumerate: bool, primes: bool, report: bool) -> ExitCode {
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let Structure::Module(m) = &doc.structure else {
        eprintln!("error: {}: submodules needs a module file", file.display());
        return ExitCode::from(EXIT_INPUT);
    };
    let an = ModuleAnalysis::new(m, *caps);
    let (enumerate, primes) = if !enumerate && !primes && !report { (true, false) } else { (enumerate, primes) };
    let mut reports = Vec::new();
    let mut lists: Vec<(&str, Vec<String>)> = Vec::new();
    let listing = |name: &str, r: gradlab_core::error::Result<&[gradlab_core::module::GradedSubmodule]>| match r {
        Ok(l) => (
            PropertyReport::holds(name).value(l.len().to_string()),
            l.iter().map(|s| s.render(m.basis())).collect::<Vec<_>>(),
        ),
        Err(e) => (PropertyReport::from_error(name, &e), Vec::new()),
    };
    if enumerate {
        let (r, l) = listing("graded_submodules", an.lattice());
        reports.push(r);
        lists.push(("graded_submodules", l));
    }
    if primes {
        let (r, l) = listing("graded_primes", an.primes());
        reports.push(r);
        lists.push(("graded_primes", l));
    }
    if report {
        for (label, s) in &doc.submodules {
            reports.extend(submodule_rows(&an, label, s));
        }
    }
    out.emit(
        || {
            let mut v = json!({"reports": reports.iter().map(report_to_value).collect::<Vec<_>>()});
            for (k, l) in &lists {
                v[*k] = json!(l);
            }
            v
        },
        || {
            let mut s = reports_table(&reports);
            for (k, l) in &lists {
                s.push_str(&format!("\n{k} ({}):\n", l.len()));
                for x in l {
                    s.push_str(&format!("  {x}\n"));
                }
            }
            s
        },
    );
    if any_aborted(&reports) {
        ExitCode::from(EXIT_ABORTED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify(out: &Out, caps: &Caps, example: Option<&str>, field: u64) -> ExitCode {
    let run = match verify(example, FixtureOptions { field }, caps) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    out.emit(|| run.to_value(), || run.to_table());
    if run.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_fuzz(out: &Out, caps: &Caps, seed: u64, count: u64, modules: u64, suite: &str, replay_file: Option<&Path>, violation_out: &Path) -> ExitCode {
    if let Some(path) = replay_file {
        let (imp, obs) = match replay(path, *caps) {
            Ok(x) => x,
            Err(e) => return fail(e),
        };
        let (status, witness) = match &obs {
            Obs::Holds => ("holds", String::new()),
            Obs::Vacuous => ("vacuous", String::new()),
            Obs::Undecided => ("undecided", String::new()),
            Obs::Fails(w) => ("counterexample", w.clone()),
        };
        out.emit(
            || json!({"implication": imp.name, "kind": imp.kind.label(), "observation": status, "witness": witness}),
            || table(&["implication", "kind", "observation", "witness"], &[vec![imp.name.into(), imp.kind.label().into(), status.into(), witness.clone()]]),
        );
        let violated = imp.kind == Kind::Theorem && matches!(obs, Obs::Fails(_));
        return if violated { ExitCode::from(EXIT_FAILURE) } else { ExitCode::SUCCESS };
    }
    let suite = match load_suite(suite) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let cfg = SuiteConfig { params: GeneratorParams::with_seed(seed), rings: count, modules, caps: *caps };
    let report = match run_suite(&cfg, &suite) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if let Some(v) = &report.violation {
        if let Err(e) = std::fs::write(violation_out, json_text(&v.to_value())) {
            eprintln!("error: {}: {e}", violation_out.display());
        } else if !out.quiet {
            eprintln!("violation written to {}", violation_out.display());
        }
    }
    out.emit(|| report.to_value(), || report.to_table());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn cmd_fmt(out: &Out, file: &Path) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(source) => return fail(GradlabError::Io { path: file.to_path_buf(), source }),
    };
    match format_text(&text, file.parent()) {
        Ok(s) => {
            if !out.quiet {
                print!("{s}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.in_file(&file.display().to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let caps = Caps { elements: cli.cap_elements, lattice: cli.cap_lattice };
    let out = Out { format: cli.format, quiet: cli.quiet };
    match &cli.command {
        Command::Check { file, predicates } => cmd_check(&out, &caps, file, predicates),
        Command::Submodules { file, enumerate, primes, report } => cmd_submodules(&out, &caps, file, *enumerate, *primes, *report),
        Command::VerifyPaper { example, field } => cmd_verify(&out, &caps, example.as_deref(), *field),
        Command::Fuzz { seed, count, modules, suite, replay, violation_out } => {
            cmd_fuzz(&out, &caps, *seed, *count, *modules, suite, replay.as_deref(), violation_out)
        }
        Command::Fmt { file } => cmd_fmt(&out, file),
    }
}
