//! The `bentspectra` command line.
//!
//! Scenario families map onto generator kinds as follows: linear and affine
//! functions are `affine` (linear when `--c 0`), the zero-curvature case is
//! `constant`, "simpler curvature" is `ip-bent`, and "random curvature" is
//! `shuffle-bent` (or the constructive `mm-bent`). Arbitrary functions are
//! `random`.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 internal
//! invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boolfn::{BitVector, ShuffleSearch, TruthTable, MAX_ARITY};
use crate::djsim::{self, STATEVECTOR_MAX_ARITY};
use crate::error::Error;
use crate::spectra::{self, BarFormat, Column, SpectrumReport};
use crate::walsh;

/// Environment variable overriding the arity cap (clamped to [`MAX_ARITY`]).
pub const MAX_N_ENV: &str = "BENTSPECTRA_MAX_N";
/// Arity above which commands print a size warning.
pub const WARN_ARITY: u32 = 20;
/// Largest arity for which `verify` also runs the `O(4^n)` reference routes.
pub const VERIFY_REFERENCE_MAX_ARITY: u32 = 14;
/// Tolerance for the floating-point route comparison in `verify`.
pub const ROUTE_TOLERANCE: f64 = 1e-12;
/// Default seed of the `paper` command.
pub const PAPER_SEED: u64 = 2019;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bentspectra",
    version,
    about = "Walsh spectra, bent-function detection and classical Deutsch-Jozsa simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a truth table.
    Gen(GenArgs),
    /// Print the Walsh spectrum of a table.
    Walsh(WalshArgs),
    /// Print the spectral classification as JSON.
    Classify(ClassifyArgs),
    /// Print the Deutsch-Jozsa spectrum report of a table.
    Dj(DjArgs),
    /// Simulate repeated measurements of the Deutsch-Jozsa output.
    Sample(SampleArgs),
    /// Render one report column as a bar chart.
    Plot(PlotArgs),
    /// Check that all amplitude routes agree.
    Verify(VerifyArgs),
    /// Regenerate the four reference scenarios into a directory.
    Paper(PaperArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Constant,
    Affine,
    IpBent,
    MmBent,
    Random,
    ShuffleBent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColumnArg {
    Walsh,
    Amplitude,
    Probability,
}

impl From<ColumnArg> for Column {
    fn from(c: ColumnArg) -> Self {
        match c {
            ColumnArg::Walsh => Column::Walsh,
            ColumnArg::Amplitude => Column::Amplitude,
            ColumnArg::Probability => Column::Probability,
        }
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Inline truth table (binary, hex or JSON form).
    #[arg(long, conflicts_with = "input")]
    tt: Option<String>,
    /// Read the table from a file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Arity, to disambiguate binary and hex strings.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: u32,
    /// Mask for `affine`.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Constant term for `constant` and `affine`.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    c: u8,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Iteration budget for `shuffle-bent`.
    #[arg(long, default_value_t = 100_000)]
    max_iters: u64,
    /// Emit hex instead of binary.
    #[arg(long, conflicts_with = "json")]
    hex: bool,
    /// Emit `{"n": .., "tt": ..}`.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct WalshArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct DjArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 10_000)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PlotArgs {
    /// A report (CSV or JSON) or a truth table.
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "probability")]
    column: ColumnArg,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    #[arg(long)]
    title: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Check this many seeded random tables of arity `--n` instead of an input.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PaperArgs {
    #[arg(long, default_value = "paper-figures")]
    out: PathBuf,
    #[arg(long, default_value_t = PAPER_SEED)]
    seed: u64,
}

/// A failed command: exit code plus one-line diagnostic.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_VALIDATION,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult<T = ()> = std::result::Result<T, Failure>;

/// The arity cap in force: [`MAX_ARITY`] unless lowered through
/// [`MAX_N_ENV`].
pub fn arity_cap() -> u32 {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .map_or(MAX_ARITY, |v| v.clamp(1, MAX_ARITY))
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    cap: u32,
}

impl Io<'_> {
    fn check_arity(&mut self, n: u32) -> CmdResult {
        if n == 0 || n > self.cap {
            return Err(Error::ArityOutOfRange { n, max: self.cap }.into());
        }
        if n > WARN_ARITY {
            let _ = writeln!(
                self.stderr,
                "warning: n = {n} needs 2^{n} entries per buffer"
            );
        }
        Ok(())
    }

    fn read_source(&mut self, input: &InputArgs) -> CmdResult<String> {
        match (&input.tt, &input.input) {
            (Some(tt), None) => Ok(tt.clone()),
            (None, Some(path)) => fs::read_to_string(path).map_err(|e| Failure::io(path, e)),
            (None, None) => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
                Ok(s)
            }
            (Some(_), Some(_)) => Err(Failure::usage("give either --tt or --input, not both")),
        }
    }

    fn read_table(&mut self, input: &InputArgs) -> CmdResult<TruthTable> {
        if let Some(n) = input.n {
            self.check_arity(n)?;
        }
        let text = self.read_source(input)?;
        let table = TruthTable::parse(&text, input.n)?;
        self.check_arity(table.arity())?;
        Ok(table)
    }

    fn emit(&mut self, output: &OutputArgs, text: &str) -> CmdResult {
        match &output.out {
            Some(path) => fs::write(path, text).map_err(|e| Failure::io(path, e)),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
        }
    }
}

/// Runs the command line with explicit streams and returns the exit code.
/// `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let rendered = e.to_string();
                    let first = rendered.lines().next().unwrap_or("usage error");
                    let _ = writeln!(stderr, "{first}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
        cap: arity_cap(),
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    let _ = std::io::stdout().flush();
    code
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CmdResult {
    match command {
        Command::Gen(a) => cmd_gen(a, io),
        Command::Walsh(a) => cmd_walsh(a, io),
        Command::Classify(a) => cmd_classify(a, io),
        Command::Dj(a) => cmd_dj(a, io),
        Command::Sample(a) => cmd_sample(a, io),
        Command::Plot(a) => cmd_plot(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Paper(a) => cmd_paper(a, io),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json");
    s.push('\n');
    s
}

fn bad_format(command: &str, format: Format) -> Failure {
    Failure::usage(format!(
        "--format {} is not supported by `{command}`",
        format.to_possible_value().expect("value").get_name()
    ))
}

fn generate(a: &GenArgs) -> CmdResult<TruthTable> {
    let c = a.c == 1;
    let table = match a.kind {
        Kind::Constant => TruthTable::constant(a.n, c)?,
        Kind::Affine => TruthTable::affine(a.n, BitVector::new(a.n, a.k)?, c)?,
        Kind::IpBent => TruthTable::inner_product_bent(a.n)?,
        Kind::MmBent => {
            if a.n % 2 == 1 {
                return Err(Error::OddArity(a.n).into());
            }
            TruthTable::random_maiorana_mcfarland(a.n / 2, &mut rng(a.seed))?
        }
        Kind::Random => TruthTable::random(a.n, &mut rng(a.seed))?,
        Kind::ShuffleBent => {
            match TruthTable::shuffle_search_bent(a.n, &mut rng(a.seed), a.max_iters)? {
                ShuffleSearch::Found { table, .. } => table,
                ShuffleSearch::NotFound { iterations } => {
                    return Err(Failure {
                        code: EXIT_VALIDATION,
                        message: format!("no bent function found in {iterations} shuffles"),
                    })
                }
            }
        }
    };
    Ok(table)
}

fn cmd_gen(a: GenArgs, io: &mut Io<'_>) -> CmdResult {
    io.check_arity(a.n)?;
    let table = generate(&a)?;
    let mut text = if a.json {
        table.to_json()
    } else if a.hex {
        table
            .to_hex_string()
            .ok_or_else(|| Failure::usage("hex form needs n >= 2"))?
    } else {
        table.to_binary_string()
    };
    text.push('\n');
    io.emit(&a.output, &text)
}

fn cmd_walsh(a: WalshArgs, io: &mut Io<'_>) -> CmdResult {
    let spectrum = walsh::fwht(&io.read_table(&a.input)?);
    let text = match a.format {
        Format::Csv => {
            let mut s = String::from("p,walsh\n");
            for (p, c) in spectrum.coeffs().iter().enumerate() {
                s.push_str(&format!("{p},{c}\n"));
            }
            s
        }
        Format::Json => to_json(&spectrum),
        other => return Err(bad_format("walsh", other)),
    };
    io.emit(&a.output, &text)
}

fn cmd_classify(a: ClassifyArgs, io: &mut Io<'_>) -> CmdResult {
    let c = walsh::fwht(&io.read_table(&a.input)?).classify();
    io.emit(&a.output, &to_json(&c))
}

fn cmd_dj(a: DjArgs, io: &mut Io<'_>) -> CmdResult {
    let table = io.read_table(&a.input)?;
    let report = SpectrumReport::from_table(&table, "input", None);
    let text = match a.format {
        Format::Csv => report.export_csv(),
        Format::Json => report.export_json(),
        other => return Err(bad_format("dj", other)),
    };
    io.emit(&a.output, &text)
}

#[derive(Serialize)]
struct SampleOutput {
    n: u32,
    shots: u64,
    seed: u64,
    counts: Vec<u64>,
    chi_square: f64,
}

fn cmd_sample(a: SampleArgs, io: &mut Io<'_>) -> CmdResult {
    let table = io.read_table(&a.input)?;
    let amps = djsim::amplitudes_from_walsh(&walsh::fwht(&table));
    let hist = djsim::sample_measurements(&amps, a.shots, &mut rng(a.seed));
    let text = match a.format {
        Format::Csv => {
            let mut s = String::from("p,count\n");
            for (p, c) in hist.counts.iter().enumerate() {
                s.push_str(&format!("{p},{c}\n"));
            }
            s
        }
        Format::Json => {
            let chi_square = if a.shots > 0 {
                hist.chi_square(&amps.probabilities())
            } else {
                0.0
            };
            to_json(&SampleOutput {
                n: hist.n,
                shots: hist.shots,
                seed: a.seed,
                counts: hist.counts,
                chi_square,
            })
        }
        Format::Svg | Format::Ascii => {
            let values: Vec<f64> = hist.counts.iter().map(|&c| c as f64).collect();
            let title = format!("{} measurements, seed {}", a.shots, a.seed);
            spectra::render_bars(&values, &title, bar_format(a.format))?
        }
    };
    io.emit(&a.output, &text)
}

fn bar_format(f: Format) -> BarFormat {
    match f {
        Format::Ascii => BarFormat::Ascii,
        _ => BarFormat::Svg,
    }
}

/// Loads report rows from a JSON report, a CSV report or a truth table.
fn read_rows(io: &mut Io<'_>, input: &InputArgs) -> CmdResult<Vec<spectra::SpectrumRow>> {
    let text = io.read_source(input)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with(spectra::CSV_HEADER) {
        return Ok(spectra::parse_csv_rows(trimmed)?);
    }
    if trimmed.starts_with('{') {
        if let Ok(report) = SpectrumReport::from_json(trimmed) {
            return Ok(report.rows);
        }
    }
    let table = TruthTable::parse(trimmed, input.n)?;
    io.check_arity(table.arity())?;
    Ok(SpectrumReport::from_table(&table, "input", None).rows)
}

fn cmd_plot(a: PlotArgs, io: &mut Io<'_>) -> CmdResult {
    let format = match a.format {
        Format::Svg | Format::Ascii => bar_format(a.format),
        other => return Err(bad_format("plot", other)),
    };
    let rows = read_rows(io, &a.input)?;
    let column = Column::from(a.column);
    let values: Vec<f64> = rows.iter().map(|r| column.get(r)).collect();
    let title = a
        .title
        .clone()
        .unwrap_or_else(|| format!("Deutsch-Jozsa output: {}", column.name()));
    let text = spectra::render_bars(&values, &title, format)?;
    io.emit(&a.output, &text)
}

/// Result of comparing every amplitude route on a batch of tables.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub tables: usize,
    pub n: u32,
    /// Largest deviation of any route from the Walsh route.
    pub max_deviation: f64,
    /// Largest `|sum psi^2 - 1|` over all routes.
    pub max_normalization_error: f64,
    /// Tables whose fast and naive Walsh transforms differ.
    pub walsh_mismatches: usize,
    /// Whether the `O(4^n)` reference routes were run.
    pub reference_routes: bool,
    pub ok: bool,
}

fn verify_one(table: &TruthTable, reference: bool) -> crate::Result<(f64, f64, bool)> {
    let spectrum = walsh::fwht(table);
    let baseline = djsim::amplitudes_from_walsh(&spectrum);
    let mut routes = vec![
        djsim::simulate_circuit(table)?,
        djsim::simulate_with_ancilla(table)?,
    ];
    let mut mismatch = false;
    if reference {
        routes.push(djsim::amplitudes_direct(table));
        mismatch = walsh::walsh_naive(table) != spectrum;
    }
    let mut deviation = 0.0f64;
    let mut norm = (baseline.norm_sqr() - 1.0).abs();
    for r in &routes {
        deviation = deviation.max(r.max_abs_diff(&baseline));
        norm = norm.max((r.norm_sqr() - 1.0).abs());
    }
    Ok((deviation, norm, mismatch))
}

/// Three-route equivalence check over `tables`, fanned out across threads.
/// All tables must share one arity.
pub fn verify_tables(tables: &[TruthTable]) -> crate::Result<VerifyReport> {
    let n = tables.first().map_or(0, TruthTable::arity);
    if let Some(t) = tables.iter().find(|t| t.arity() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            found: t.arity(),
        });
    }
    let reference = n <= VERIFY_REFERENCE_MAX_ARITY;
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
    let chunk = tables.len().div_ceil(workers).max(1);
    let partials: Vec<crate::Result<(f64, f64, usize)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = tables
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut acc = (0.0f64, 0.0f64, 0usize);
                    for t in part {
                        let (d, e, m) = verify_one(t, reference)?;
                        acc = (acc.0.max(d), acc.1.max(e), acc.2 + usize::from(m));
                    }
                    Ok(acc)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker"))
            .collect()
    });
    let mut total = (0.0f64, 0.0f64, 0usize);
    for p in partials {
        let (d, e, m) = p?;
        total = (total.0.max(d), total.1.max(e), total.2 + m);
    }
    Ok(VerifyReport {
        tables: tables.len(),
        n,
        max_deviation: total.0,
        max_normalization_error: total.1,
        walsh_mismatches: total.2,
        reference_routes: reference,
        ok: total.0 < ROUTE_TOLERANCE && total.1 < ROUTE_TOLERANCE && total.2 == 0,
    })
}

fn cmd_verify(a: VerifyArgs, io: &mut Io<'_>) -> CmdResult {
    let tables = match a.random {
        Some(count) => {
            let n = a
                .input
                .n
                .ok_or_else(|| Failure::usage("--random needs --n"))?;
            io.check_arity(n)?;
            let mut r = rng(a.seed);
            (0..count)
                .map(|_| TruthTable::random(n, &mut r))
                .collect::<crate::Result<Vec<_>>>()?
        }
        None => vec![io.read_table(&a.input)?],
    };
    if let Some(t) = tables.first() {
        if t.arity() > STATEVECTOR_MAX_ARITY {
            return Err(Error::ArityOutOfRange {
                n: t.arity(),
                max: STATEVECTOR_MAX_ARITY,
            }
            .into());
        }
    }
    let report = verify_tables(&tables)?;
    io.emit(&a.output, &to_json(&report))?;
    if report.ok {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_INVARIANT,
            message: format!("routes disagree: max deviation {:e}", report.max_deviation),
        })
    }
}

/// One of the four reference scenarios.
#[derive(Debug, Clone)]
pub struct Scenario {
    /// File stem, e.g. `fig1-2_linear_k9`.
    pub stem: &'static str,
    pub title: &'static str,
    pub table: TruthTable,
    pub seed: Option<u64>,
}

/// Builds the four reference scenarios: linear `k = 9`, an arbitrary
/// non-bent function, the inner-product bent function and a shuffle-found
/// bent function, all at `n = 4`.
pub fn paper_scenarios(seed: u64) -> crate::Result<Vec<Scenario>> {
    let linear = TruthTable::affine(4, BitVector::new(4, 9)?, false)?;

    let mut r = rng(seed);
    let arbitrary = loop {
        let t = TruthTable::random(4, &mut r)?;
        let c = walsh::fwht(&t).classify();
        if !c.is_bent && !c.is_affine {
            break t;
        }
    };

    let ip = TruthTable::inner_product_bent(4)?;

    let shuffled = TruthTable::shuffle_search_bent(4, &mut rng(seed), 100_000)?
        .table()
        .ok_or_else(|| Error::Invariant("shuffle search found no bent function".into()))?;

    Ok(vec![
        Scenario {
            stem: "fig1-2_linear_k9",
            title: "linear f(x) = k.x, k = 9",
            table: linear,
            seed: None,
        },
        Scenario {
            stem: "fig3-4_arbitrary",
            title: "arbitrary non-bent function",
            table: arbitrary,
            seed: Some(seed),
        },
        Scenario {
            stem: "fig5-6_ip_bent",
            title: "bent f = x0 x1 + x2 x3",
            table: ip,
            seed: None,
        },
        Scenario {
            stem: "fig7-8_shuffle_bent",
            title: "shuffle-found bent function",
            table: shuffled,
            seed: Some(seed),
        },
    ])
}

/// Writes one CSV report and one two-panel SVG (the function, then its
/// output probabilities) per scenario. Returns the written paths.
pub fn write_paper_figures(dir: &Path, seed: u64) -> crate::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::Invariant(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for s in paper_scenarios(seed)? {
        let report = SpectrumReport::from_table(&s.table, s.title, s.seed);
        let function: Vec<f64> = s.table.iter().map(|b| f64::from(u8::from(b))).collect();
        let svg = spectra::stack_charts(&[
            spectra::render_bars(&function, &format!("{}: f(x)", s.title), BarFormat::Svg)?,
            spectra::render_bars(
                &report.column(Column::Probability),
                &format!("{}: output probabilities", s.title),
                BarFormat::Svg,
            )?,
        ]);
        for (ext, body) in [("csv", report.export_csv()), ("svg", svg)] {
            let path = dir.join(format!("{}.{ext}", s.stem));
            fs::write(&path, body)
                .map_err(|e| Error::Invariant(format!("{}: {e}", path.display())))?;
            written.push(path);
        }
    }
    Ok(written)
}

fn cmd_paper(a: PaperArgs, io: &mut Io<'_>) -> CmdResult {
    let written = write_paper_figures(&a.out, a.seed)?;
    for s in paper_scenarios(a.seed)? {
        let c = walsh::fwht(&s.table).classify();
        let _ = writeln!(
            io.stdout,
            "{:<22} tt={} bent={} affine={} nonlinearity={}",
            s.stem,
            s.table.to_hex_string().expect("n = 4"),
            c.is_bent,
            c.is_affine,
            c.nonlinearity
        );
    }
    for p in written {
        let _ = writeln!(io.stdout, "wrote {}", p.display());
    }
    Ok(())
}
