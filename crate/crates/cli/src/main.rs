use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use knotdist::blanchfield::{main_theorem_check, BlanchfieldForm, ModuleElement};
use knotdist::io::parse_seifert_matrix;
use knotdist::laurent::LaurentPoly;
use knotdist::obstruct::{build_report, quadform_represents, KnotInput, QuadFormVerdict, ReportOptions, SearchBounds};
use knotdist::seifert::SeifertMatrix;
use knotdist::table::{import_csv, Table};
use knotdist::verify::{run_suite, Suite};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "knotdist", version, about = "Exact knot invariants and distance obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normalised Alexander polynomial of a Seifert matrix.
    Alex(MatrixArg),
    /// Print Alexander polynomial, signature and determinant.
    Invariants(MatrixArg),
    /// Evaluate the Blanchfield pairing.
    Blanchfield(BlanchfieldArgs),
    /// Decide whether h²x² + (2h−1)xy + y² = ±d has an integer solution.
    Quadform(QuadformArgs),
    /// Run the obstruction battery on a pair of knots.
    Obstruct(ObstructArgs),
    /// Run a seeded randomized property suite.
    Verify(VerifyArgs),
    /// Inspect the bundled knot table.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Debug, Args)]
struct MatrixArg {
    /// Whitespace-separated integer matrix, one row per line.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Debug, Args)]
struct BlanchfieldArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// First element, comma-separated Laurent polynomials.
    #[arg(long, allow_hyphen_values = true, requires = "y")]
    x: Option<String>,
    /// Second element.
    #[arg(long, allow_hyphen_values = true, requires = "x")]
    y: Option<String>,
    /// Check the first self-pairing of `--matrix` read as an a+ border of this matrix.
    #[arg(long, conflicts_with_all = ["x", "y"])]
    inner: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct QuadformArgs {
    #[arg(long, allow_hyphen_values = true)]
    h: i64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Search box for indefinite forms.
    #[arg(long, default_value_t = SearchBounds::default().quadform)]
    bound: u64,
}

#[derive(Debug, Args)]
struct ObstructArgs {
    #[arg(long, allow_hyphen_values = true, group = "k1")]
    delta1: Option<String>,
    #[arg(long, group = "k1")]
    matrix1: Option<PathBuf>,
    /// Table label, e.g. 3_1.
    #[arg(long, group = "k1")]
    knot1: Option<String>,
    #[arg(long, allow_hyphen_values = true, group = "k2")]
    delta2: Option<String>,
    #[arg(long, group = "k2")]
    matrix2: Option<PathBuf>,
    #[arg(long, group = "k2")]
    knot2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    sigma1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma2: Option<i64>,
    /// Known algebraic unknotting number of the first knot.
    #[arg(long)]
    ua1: Option<u32>,
    #[arg(long)]
    ua2: Option<u32>,
    /// Search box for indefinite quadratic forms.
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    cc_breadth: Option<u32>,
    #[arg(long)]
    cc_coeff: Option<u32>,
    /// Extra table rows (label,polynomial,signature,determinant).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Batch mode: one `left | right` pair per line.
    #[arg(long, conflicts_with_all = ["k1", "k2", "sigma1", "sigma2", "ua1", "ua2"])]
    manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    iters: u64,
}

#[derive(Debug, Subcommand)]
enum TableAction {
    List {
        #[arg(long)]
        table: Option<PathBuf>,
    },
    Show {
        label: String,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Validate a CSV file and print its rows.
    Import { file: PathBuf },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("property suite failed")]
    SuiteFailed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::SuiteFailed => 3,
        }
    }
}

fn input<E: std::fmt::Display>(context: impl std::fmt::Display) -> impl FnOnce(E) -> CliError {
    move |e| CliError::Input(format!("{context}: {e}"))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(input(path.display()))
}

fn read_matrix(path: &Path) -> Result<SeifertMatrix, CliError> {
    parse_seifert_matrix(&read_file(path)?).map_err(input(path.display()))
}

fn parse_poly(text: &str) -> Result<LaurentPoly, CliError> {
    text.parse().map_err(input(format!("polynomial {text:?}")))
}

fn parse_element(text: &str, size: usize) -> Result<ModuleElement, CliError> {
    let entries = text.split(',').map(|s| parse_poly(s.trim())).collect::<Result<Vec<_>, _>>()?;
    if entries.len() != size {
        return Err(CliError::Input(format!("element {text:?} has {} entries, expected {size}", entries.len())));
    }
    Ok(ModuleElement(entries))
}

fn load_table(extra: Option<&Path>) -> Result<Table, CliError> {
    let mut table = Table::bundled().map_err(input("bundled table self-check"))?;
    if let Some(path) = extra {
        let rows = import_csv(read_file(path)?.as_bytes()).map_err(input(path.display()))?;
        table.extend(rows).map_err(input(path.display()))?;
    }
    Ok(table)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let table = load_table(None)?;
    match cli.command {
        Command::Alex(a) => emit(out, read_matrix(&a.matrix)?.alexander()),
        Command::Invariants(a) => {
            let inv = read_matrix(&a.matrix)?.invariants();
            emit(
                out,
                format_args!(
                    "alexander: {}\nsignature: {}\ndeterminant: {}",
                    inv.alexander, inv.signature, inv.determinant
                ),
            )
        }
        Command::Blanchfield(a) => blanchfield(a, out),
        Command::Quadform(a) => {
            let v = quadform_represents(a.h, a.d, a.bound).map_err(input("quadform"))?;
            let verdict = match v {
                QuadFormVerdict::Witness { .. } => "witness",
                QuadFormVerdict::Refuted(_) => "refuted",
                QuadFormVerdict::Inconclusive { .. } => "inconclusive",
            };
            emit(out, format_args!("verdict: {verdict}\ncertificate: {}", v.certificate()))
        }
        Command::Obstruct(a) => obstruct(a, table, out),
        Command::Verify(a) => {
            let report = run_suite(a.suite, a.seed, a.iters);
            emit(out, &report)?;
            if report.ok() {
                Ok(())
            } else {
                Err(CliError::SuiteFailed)
            }
        }
        Command::Table { action } => match action {
            TableAction::List { table } => emit(out, load_table(table.as_deref())?.labels().join("\n")),
            TableAction::Show { label, table } => {
                let t = load_table(table.as_deref())?;
                let entry = t.get(&label).map_err(|e| CliError::Usage(e.to_string()))?;
                emit(out, entry)
            }
            TableAction::Import { file } => {
                let rows = import_csv(read_file(&file)?.as_bytes()).map_err(input(file.display()))?;
                let mut t = table;
                t.extend(rows.clone()).map_err(input(file.display()))?;
                let shown: Vec<String> = rows.iter().map(ToString::to_string).collect();
                emit(out, format_args!("imported: {}\n\n{}", rows.len(), shown.join("\n\n")))
            }
        },
    }
}

fn emit(out: &mut impl Write, value: impl std::fmt::Display) -> Result<(), CliError> {
    match writeln!(out, "{value}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Input(format!("write failed: {e}"))),
        _ => Ok(()),
    }
}

fn blanchfield(a: BlanchfieldArgs, out: &mut impl Write) -> Result<(), CliError> {
    let v = read_matrix(&a.matrix)?;
    if v.size() == 0 {
        return Err(CliError::Input("the 0x0 matrix presents the trivial module".into()));
    }
    if let Some(inner) = a.inner {
        let check = main_theorem_check(&v, &read_matrix(&inner)?).map_err(input("border check"))?;
        return emit(
            out,
            format_args!(
                "epsilon: {}\nentry: {}\nexpected: {}\nholds: {}",
                check.epsilon, check.entry, check.expected, check.holds
            ),
        );
    }
    let form = BlanchfieldForm::new(&v);
    if let (Some(x), Some(y)) = (a.x, a.y) {
        let value =
            form.pair(&parse_element(&x, v.size())?, &parse_element(&y, v.size())?).map_err(input("pairing"))?;
        return emit(out, format_args!("pairing: {value}"));
    }
    let gram = form.gram_matrix();
    let mut lines = vec![format!("denominator: {}", form.denominator())];
    for i in 0..v.size() {
        for j in 0..v.size() {
            lines.push(format!("beta[{}][{}]: {}", i + 1, j + 1, gram.get(i, j).num));
        }
    }
    emit(out, lines.join("\n"))
}

fn knot_from_label(table: &Table, label: &str) -> Result<KnotInput, CliError> {
    let entry = table.get(label).map_err(|e| CliError::Input(e.to_string()))?;
    match &entry.matrix {
        Some(v) => Ok(KnotInput::from_matrix(v.clone())),
        None => KnotInput::from_polynomial(entry.expected.alexander.clone())
            .and_then(|k| k.with_signature(entry.expected.signature))
            .map_err(input(label)),
    }
}

fn knot_input(
    table: &Table,
    delta: Option<&str>,
    matrix: Option<&Path>,
    label: Option<&str>,
    sigma: Option<i64>,
    side: usize,
) -> Result<KnotInput, CliError> {
    let k = match (delta, matrix, label) {
        (Some(p), _, _) => KnotInput::from_polynomial(parse_poly(p)?).map_err(input(format!("knot {side}")))?,
        (_, Some(path), _) => KnotInput::from_matrix(read_matrix(path)?),
        (_, _, Some(l)) => knot_from_label(table, l)?,
        _ => {
            return Err(CliError::Usage(format!(
                "knot {side} missing: pass one of --delta{side}, --matrix{side} or --knot{side}"
            )))
        }
    };
    match sigma {
        Some(s) => k.with_signature(s).map_err(input(format!("knot {side}"))),
        None => Ok(k),
    }
}

/// A manifest side: an existing matrix file (relative to the manifest),
/// a table label, or an inline polynomial.
fn manifest_side(table: &Table, base: &Path, token: &str) -> Result<KnotInput, CliError> {
    let path = base.join(token);
    if path.is_file() {
        return Ok(KnotInput::from_matrix(read_matrix(&path)?));
    }
    if table.get(token).is_ok() {
        return knot_from_label(table, token);
    }
    KnotInput::from_polynomial(parse_poly(token)?).map_err(input(token))
}

fn obstruct(a: ObstructArgs, bundled: Table, out: &mut impl Write) -> Result<(), CliError> {
    let table = match &a.table {
        Some(_) => load_table(a.table.as_deref())?,
        None => bundled,
    };
    let defaults = SearchBounds::default();
    let bounds = SearchBounds {
        quadform: a.bound.unwrap_or(defaults.quadform),
        cc_max_breadth: a.cc_breadth.unwrap_or(defaults.cc_max_breadth),
        cc_max_coeff: a.cc_coeff.unwrap_or(defaults.cc_max_coeff),
    };
    if bounds.quadform == 0 {
        return Err(CliError::Usage("--bound must be positive".into()));
    }

    if let Some(manifest) = &a.manifest {
        let text = read_file(manifest)?;
        let base = manifest.parent().unwrap_or(Path::new("."));
        let pairs: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let opts = ReportOptions { ua1: None, ua2: None, bounds };
        let reports: Vec<Result<String, CliError>> = pairs
            .par_iter()
            .map(|&(line, l)| {
                let at = |e: CliError| CliError::Input(format!("{}:{line}: {e}", manifest.display()));
                let (left, right) =
                    l.split_once('|').ok_or_else(|| at(CliError::Input("expected `left | right`".into())))?;
                let k1 = manifest_side(&table, base, left.trim()).map_err(at)?;
                let k2 = manifest_side(&table, base, right.trim()).map_err(at)?;
                let r = build_report(&k1, &k2, &opts).map_err(|e| at(CliError::Input(e.to_string())))?;
                Ok(format!("pair: {line}\n{r}"))
            })
            .collect();
        let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
        return emit(out, reports.join("\n\n"));
    }

    let k1 = knot_input(&table, a.delta1.as_deref(), a.matrix1.as_deref(), a.knot1.as_deref(), a.sigma1, 1)?;
    let k2 = knot_input(&table, a.delta2.as_deref(), a.matrix2.as_deref(), a.knot2.as_deref(), a.sigma2, 2)?;
    let opts = ReportOptions { ua1: a.ua1, ua2: a.ua2, bounds };
    let report = build_report(&k1, &k2, &opts).map_err(|e| CliError::Input(e.to_string()))?;
    emit(out, report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            if !matches!(e, CliError::SuiteFailed) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}
