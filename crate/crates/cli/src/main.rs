//! Command-line front end: exact-rational, machine-readable output for
//! every computation in the library.
//!
//! Exit status contract: 0 on success, 1 on usage errors (bad flags,
//! malformed input files), 2 when a requested check fails or an internal
//! cross-check trips.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use berger_eta::checks;
use berger_eta::error::Error;
use berger_eta::eta::{
    dirac_eta_ratio, signature_eta_ratio, verify_habel, EtaSeries, OperatorKind,
};
use berger_eta::genus::{ball_value, BallValue, MultiplicativeSequence, RhoSpec};
use berger_eta::rational::{rat_to_string, Rat};
use berger_eta::series::{named_series, NamedSeries, PowerSeries};
use berger_eta::weighted::WeightedPolynomial;

mod output;
mod series_file;

use output::{OutputSink, Table};

#[derive(Parser)]
#[command(
    name = "berger-eta",
    about = "Exact computations with multiplicative sequences and Berger-sphere eta invariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add a decimal approximation column (non-authoritative).
    #[arg(long)]
    approx: bool,
}

#[derive(Args, Clone)]
struct SeriesOpts {
    /// Built-in series name: l, ahat, trivial, tanh, artanh, sinh, arsinh.
    #[arg(long, conflicts_with = "coeff_file")]
    series: Option<String>,
    /// Custom series file: a header line `<indeterminate> <order>` followed
    /// by order+1 whitespace-separated coefficient strings.
    #[arg(long)]
    coeff_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Values and expansions of multiplicative sequences.
    #[command(subcommand)]
    Genus(GenusCommand),
    /// Reduced eta-invariants of Berger spheres.
    Eta {
        /// dirac or signature.
        #[arg(long)]
        operator: String,
        /// Largest n (sphere S^{2n-1}) to report.
        #[arg(long)]
        order: usize,
        /// Exact rational value for rho, or "symbolic".
        #[arg(long, default_value = "symbolic")]
        rho: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Compare Habel's conjectural formula with the generating function.
    HabelVerify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        workers: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a named identity suite; exits 2 on failure.
    Check {
        /// mult-identity, etf-ode, null-reduction, ch-exterior or
        /// ch-symmetric.
        name: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        weight: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[arg(long, default_value_t = 0x6265726765721u64)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum GenusCommand {
    /// Values on complex projective spaces CP^1..CP^max_n.
    Cp {
        #[command(flatten)]
        series: SeriesOpts,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Value on the Berger ball B^{2n}: both residue forms.
    Ball {
        #[command(flatten)]
        series: SeriesOpts,
        #[arg(long)]
        n: usize,
        /// Exact rational value for rho, or "symbolic".
        #[arg(long, default_value = "symbolic")]
        rho: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Expansion in Pontryagin variables up to a weight bound.
    Pontryagin {
        #[command(flatten)]
        series: SeriesOpts,
        #[arg(long)]
        weight: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are successes, everything else is usage
            use clap::error::ErrorKind;
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::FormMismatch(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Genus(genus) => run_genus(genus),
        Command::Eta { operator, order, rho, output } => run_eta(&operator, order, &rho, &output),
        Command::HabelVerify { max_n, workers, output } => run_habel(max_n, workers, &output),
        Command::Check { name, trials, order, max_n, weight, max_m, max_d, seed, output } => {
            run_check(&name, trials, order, max_n, weight, max_m, max_d, seed, &output)
        }
    }
}

/// Resolve `--series NAME` / `--coeff-file PATH` into a sequence.
fn resolve_sequence(opts: &SeriesOpts, order: usize) -> Result<MultiplicativeSequence<Rat>, Error> {
    let series = match (&opts.series, &opts.coeff_file) {
        (Some(name), None) => named_series(NamedSeries::parse(name)?, order),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            let series = series_file::parse(&text)?;
            extend_or_check(series, order)?
        }
        _ => {
            return Err(Error::Parse(
                "exactly one of --series and --coeff-file is required".to_string(),
            ))
        }
    };
    MultiplicativeSequence::new(series)
}

/// A custom series must carry at least the requested order.
fn extend_or_check(series: PowerSeries<Rat>, order: usize) -> Result<PowerSeries<Rat>, Error> {
    if series.truncation_order() < order {
        return Err(Error::InsufficientTruncation {
            needed: order,
            have: series.truncation_order(),
        });
    }
    Ok(series.truncated(order))
}

fn run_genus(cmd: GenusCommand) -> Result<ExitCode, Error> {
    match cmd {
        GenusCommand::Cp { series, max_n, output } => {
            if max_n < 1 {
                return Err(Error::Parse("--max-n must be at least 1".to_string()));
            }
            let seq = resolve_sequence(&series, max_n)?;
            let values = seq.cp_values(max_n)?;
            let mut table = Table::new(vec!["n", "value"]);
            for (n, v) in values.iter().enumerate().skip(1) {
                table.push_row(n.to_string(), vec![rat_to_string(v)], approx_of(v, output.approx));
            }
            emit_table(&table, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        GenusCommand::Ball { series, n, rho, output } => {
            if n < 1 {
                return Err(Error::Parse("--n must be at least 1".to_string()));
            }
            let seq = resolve_sequence(&series, n)?;
            let rho = RhoSpec::parse(&rho)?;
            let (power_form, log_form) = seq.ball_residue_forms(n)?;
            let value = ball_value(&seq, n, &rho)?;
            let value_str = match &value {
                BallValue::Poly(p) => p.to_string_with_var("rho"),
                BallValue::Scalar(r) => rat_to_string(r),
            };
            let payload = serde_json::json!({
                "n": n,
                "residue_power_form": rat_to_string(&power_form),
                "residue_log_form": rat_to_string(&log_form),
                "value": value_str,
            });
            let mut sink = OutputSink::open(&output.out)?;
            match output.format {
                Format::Json => sink.writeln(&payload.to_string())?,
                Format::Csv => {
                    sink.writeln("n,residue_power_form,residue_log_form,value")?;
                    sink.writeln(&format!(
                        "{n},{},{},{}",
                        rat_to_string(&power_form),
                        rat_to_string(&log_form),
                        value_str
                    ))?;
                }
                Format::Pretty => {
                    sink.writeln(&format!("res[F^n/z^(n+1)]      = {}", rat_to_string(&power_form)))?;
                    sink.writeln(&format!("res[(log phi)'/z^n]   = {}", rat_to_string(&log_form)))?;
                    sink.writeln(&format!("value on B^{}          = {}", 2 * n, value_str))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        GenusCommand::Pontryagin { series, weight, output } => {
            if weight % 4 != 0 {
                return Err(Error::Parse("--weight must be a multiple of 4".to_string()));
            }
            let seq = resolve_sequence(&series, weight / 2)?;
            let expanded = seq.expand_in_pontryagin(weight)?;
            emit_weighted(&expanded, &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn approx_of(v: &Rat, enabled: bool) -> Option<String> {
    if !enabled {
        return None;
    }
    let num = to_f64(v);
    Some(format!("{num:.12e}"))
}

fn to_f64(v: &Rat) -> f64 {
    // good enough for a non-authoritative display column
    let n: f64 = v.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = v.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn emit_table(table: &Table, output: &OutputOpts) -> Result<(), Error> {
    let mut sink = OutputSink::open(&output.out)?;
    match output.format {
        Format::Json => sink.writeln(&table.to_json().to_string()),
        Format::Csv => sink.write_str(&table.to_csv()),
        Format::Pretty => sink.write_str(&table.to_pretty()),
    }
}

fn emit_weighted(poly: &WeightedPolynomial<Rat>, output: &OutputOpts) -> Result<(), Error> {
    let mut sink = OutputSink::open(&output.out)?;
    match output.format {
        Format::Json => sink.writeln(&poly.to_json().to_string()),
        Format::Csv => {
            sink.writeln("exponents,coeff")?;
            for (idx, c) in poly.terms() {
                let exps: Vec<String> = idx.iter().map(|e| e.to_string()).collect();
                sink.writeln(&format!("{};{}", exps.join(";"), rat_to_string(c)))?;
            }
            Ok(())
        }
        Format::Pretty => sink.writeln(&poly.to_string_with_vars("p")),
    }
}

fn run_eta(operator: &str, order: usize, rho: &str, output: &OutputOpts) -> Result<ExitCode, Error> {
    if order < 1 {
        return Err(Error::Parse("--order must be at least 1".to_string()));
    }
    let kind = OperatorKind::parse(operator)?;
    let rho = RhoSpec::parse(rho)?;
    let eta: EtaSeries = match kind {
        OperatorKind::Dirac => dirac_eta_ratio(order)?,
        OperatorKind::Signature => signature_eta_ratio(order)?,
    };
    let mut table = Table::new(vec!["n", "eta"]);
    for n in 1..=order {
        let poly = eta.value(n);
        match &rho {
            RhoSpec::Symbolic => {
                table.push_row(n.to_string(), vec![poly.to_string_with_var("rho")], None);
            }
            RhoSpec::Exact(r) => {
                let v = poly.eval(r);
                table.push_row(n.to_string(), vec![rat_to_string(&v)], approx_of(&v, output.approx));
            }
        }
    }
    emit_table(&table, output)?;
    Ok(ExitCode::SUCCESS)
}

fn run_habel(max_n: usize, workers: usize, output: &OutputOpts) -> Result<ExitCode, Error> {
    if max_n < 1 {
        return Err(Error::Parse("--max-n must be at least 1".to_string()));
    }
    if workers < 1 {
        return Err(Error::Parse("--workers must be at least 1".to_string()));
    }
    let report = verify_habel(max_n, workers)?;
    let mut sink = OutputSink::open(&output.out)?;
    match output.format {
        Format::Json => sink.write_str(&report.to_json_lines())?,
        Format::Csv => {
            sink.writeln("n,habel,ratio,agree")?;
            for row in &report.rows {
                sink.writeln(&format!(
                    "{},{},{},{}",
                    row.n,
                    rat_to_string(&row.habel.coeff(row.n)),
                    rat_to_string(&row.ratio.coeff(row.n)),
                    row.agree
                ))?;
            }
        }
        Format::Pretty => {
            for row in &report.rows {
                let verdict = if row.agree { "agree" } else { "DISAGREE" };
                sink.writeln(&format!(
                    "n={:<4} eta = {:<30} [{}]",
                    row.n,
                    row.ratio.to_string_with_var("rho"),
                    verdict
                ))?;
            }
            // timing goes to stderr: stdout stays byte-deterministic
            eprintln!(
                "checked n = 1..{max_n} with {} workers in {:?}",
                report.workers, report.wall_time
            );
        }
    }
    if report.all_agree() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    name: &str,
    trials: usize,
    order: usize,
    max_n: usize,
    weight: usize,
    max_m: usize,
    max_d: usize,
    seed: u64,
    output: &OutputOpts,
) -> Result<ExitCode, Error> {
    let outcome = match name {
        "mult-identity" => checks::mult_identity(trials, order, max_n, seed)?,
        "etf-ode" => checks::etf_ode(trials.min(10), seed)?,
        "null-reduction" => checks::null_reduction(trials.min(10), max_n.min(10), order.min(24), seed)?,
        "ch-exterior" => checks::ch_exterior(max_m, max_d, weight)?,
        "ch-symmetric" => checks::ch_symmetric(max_m.min(3), max_d.min(3), weight)?,
        other => return Err(Error::UnknownName(other.to_string())),
    };
    let mut sink = OutputSink::open(&output.out)?;
    match output.format {
        Format::Json => {
            let payload = serde_json::json!({
                "check": outcome.name,
                "cases": outcome.cases,
                "failures": outcome.failures,
                "pass": outcome.passed(),
            });
            sink.writeln(&payload.to_string())?;
        }
        Format::Csv => {
            sink.writeln("check,cases,failures,pass")?;
            sink.writeln(&format!(
                "{},{},{},{}",
                outcome.name,
                outcome.cases,
                outcome.failures.len(),
                outcome.passed()
            ))?;
        }
        Format::Pretty => {
            let verdict = if outcome.passed() { "pass" } else { "FAIL" };
            sink.writeln(&format!(
                "{}: {} ({} cases)",
                outcome.name, verdict, outcome.cases
            ))?;
            for failure in &outcome.failures {
                sink.writeln(&format!("  failed: {failure}"))?;
            }
        }
    }
    if outcome.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
