//! `eigenperm` — generate, verify, enumerate, and search integer matrices
//! whose every coefficient permutation has integer eigenvalues.
//!
//! Exit codes: 0 success/pass, 1 verification failed, 2 argument error,
//! 3 constraint error (valid arguments, impossible operation), 4 search
//! incomplete (budget exhausted; checkpoint written when a path was given).

use std::io::{BufRead, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use eigenperm_cli::format::{decode, encode, Format};
use eigenperm_cli::record::OutputRecord;
use eigenperm_cli::{checkpoint, driver};
use eigenperm_core::eigen::{
    representative_eigenvalues, verify_all_permutations, verify_all_permutations_3x3, EigenPair,
};
use eigenperm_core::families::{
    alt_canonical, canonical, degenerate_family, general_solution, odd_t_solution, rational_family,
    AltCanParams, CoefficientQuad, FactorPair, RationalParam,
};
use eigenperm_core::ratio::Ratio;
use eigenperm_core::search::SearchRange;
use eigenperm_core::triples::{enumerate, PythTriple};
use eigenperm_core::Error as CoreError;

/// Largest entry magnitude for which every 2×2 discriminant fits checked
/// 64-bit arithmetic (12·E² stays below i64::MAX).
const ENTRY_LIMIT_2X2: i64 = 800_000_000;
/// Conservative 3×3 entry bound: characteristic-polynomial coefficients and
/// the cubic root scan stay comfortably inside the checked envelope.
const ENTRY_LIMIT_3X3: i64 = 100_000;
/// Default work budget for 2×2 searches (one unit per multiset).
const DEFAULT_BUDGET_2X2: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "eigenperm",
    version,
    about = "Integer matrices with integer eigenvalues for every permutation of their coefficients",
    after_help = "Output is one record per line. Default format: text on a terminal, json when piped."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Args, Clone, Copy)]
struct FormatOpt {
    /// Output format (default: text on a terminal, json when piped)
    #[arg(long, value_enum, global = true)]
    format: Option<FormatArg>,
}

impl FormatOpt {
    fn resolve(&self) -> Format {
        match self.format {
            Some(FormatArg::Json) => Format::Json,
            Some(FormatArg::Csv) => Format::Csv,
            Some(FormatArg::Text) => Format::Text,
            None => {
                if std::io::stdout().is_terminal() {
                    Format::Text
                } else {
                    Format::Json
                }
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate Pythagorean triples with hypotenuse up to a bound
    Triples {
        /// Largest hypotenuse to include
        #[arg(long = "max-t")]
        max_t: u64,
        /// Only primitive triples (gcd of the sides is 1)
        #[arg(long)]
        primitive: bool,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Generate a coefficient quadruple from one of the solution families
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Verify that every arrangement of 4 (or 9) coefficients has integer
    /// eigenvalues
    Verify {
        /// Four or nine integers (comma or space separated); reads records
        /// or integer lines from stdin when omitted. Lists starting with a
        /// negative value go after `--`.
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        coefficients: Vec<String>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Exhaustively scan a coefficient range for solutions
    Search {
        /// Matrix dimension (2 or 3)
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        /// Smallest coefficient value (inclusive)
        #[arg(long, allow_negative_numbers = true)]
        min: i64,
        /// Largest coefficient value (inclusive)
        #[arg(long, allow_negative_numbers = true)]
        max: i64,
        /// Number of concurrent shards
        #[arg(long, env = "EIGENPERM_SHARDS", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        shards: u32,
        /// Multisets per work unit for 3×3 scans (checkpoint granularity)
        #[arg(long = "block-size", default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..))]
        block_size: u64,
        /// Maximum work units this invocation may process
        #[arg(long)]
        budget: Option<u64>,
        /// Checkpoint file to resume from and/or write (3×3 only)
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Allow negative coefficients in 3×3 searches
        #[arg(long = "allow-negative")]
        allow_negative: bool,
        #[command(flatten)]
        format: FormatOpt,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Canonical solution of a normalized triple: k = r, l = s/2
    Canonical {
        #[arg(long, value_parser = parse_triple)]
        triple: PythTriple,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Alternative canonical form {4m² ± mn, n² ± mn} (n odd, coprime)
    Altcan {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Odd-hypotenuse solution: k = rs/2, l = 1
    Oddt {
        #[arg(long, value_parser = parse_triple)]
        triple: PythTriple,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Scaled rational-factor solution {pqt ± p² ± q²rs/2} plus its reduced
    /// form
    Rational {
        #[arg(long, value_parser = parse_triple)]
        triple: PythTriple,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Outside the pairing ansatz: {g·e1², g·e2², 0, 0}
    Degenerate {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long)]
        e1: i64,
        #[arg(long)]
        e2: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// General ansatz solution for caller-chosen factors with k·l = rs/2
    General {
        #[arg(long, value_parser = parse_triple)]
        triple: PythTriple,
        /// Factor k (integer or rational like 9/2)
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        k: Ratio,
        /// Factor l (integer or rational like 4/3)
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        l: Ratio,
        #[command(flatten)]
        format: FormatOpt,
    },
}

fn parse_triple(raw: &str) -> Result<PythTriple, String> {
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated integers, e.g. 3,4,5".to_string());
    }
    let mut values = [0i64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse::<i64>()
            .map_err(|_| format!("{part:?} is not an integer"))?;
        if slot.unsigned_abs() > ENTRY_LIMIT_2X2 as u64 {
            return Err(format!(
                "component {part} exceeds the checked 64-bit envelope (max {ENTRY_LIMIT_2X2})"
            ));
        }
    }
    PythTriple::new(values[0], values[1], values[2]).map_err(|e| e.to_string())
}

fn parse_ratio(raw: &str) -> Result<Ratio, String> {
    let (numer, denom) = match raw.split_once('/') {
        Some((n, d)) => (
            n.trim()
                .parse::<i64>()
                .map_err(|_| format!("{n:?} is not an integer"))?,
            d.trim()
                .parse::<i64>()
                .map_err(|_| format!("{d:?} is not an integer"))?,
        ),
        None => (
            raw.trim()
                .parse::<i64>()
                .map_err(|_| format!("{raw:?} is not an integer or fraction"))?,
            1,
        ),
    };
    Ratio::new(numer, denom).map_err(|e| e.to_string())
}

/// An error annotated with the exit code it maps to.
struct CliFailure {
    code: u8,
    message: String,
}

impl CliFailure {
    fn new(code: u8, message: impl Into<String>) -> CliFailure {
        CliFailure {
            code,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliFailure {
    fn from(e: CoreError) -> CliFailure {
        let code = match e {
            // The argument itself is out of domain.
            CoreError::BadParameter { .. }
            | CoreError::EvenN { .. }
            | CoreError::NotCoprime { .. }
            | CoreError::InvalidTriple { .. }
            | CoreError::InvalidEuclidParams { .. }
            | CoreError::InvalidRange { .. }
            | CoreError::ZeroDenominator
            | CoreError::BudgetExceeded { .. }
            | CoreError::CheckpointMismatch { .. } => 2,
            // Valid arguments, but the operation's constraints fail.
            CoreError::EvenHypotenuse { .. }
            | CoreError::NotNormalized { .. }
            | CoreError::FactorConstraint { .. }
            | CoreError::NonIntegerEntry { .. }
            | CoreError::Overflow { .. } => 3,
        };
        CliFailure::new(code, e.to_string())
    }
}

impl From<eigenperm_cli::CodecError> for CliFailure {
    fn from(e: eigenperm_cli::CodecError) -> CliFailure {
        CliFailure::new(2, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("eigenperm: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn emit(records: &[OutputRecord], format: Format) -> Result<(), CliFailure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for record in records {
        if writeln!(out, "{}", encode(record, format)).is_err() {
            // Broken pipe downstream is not our error.
            return Ok(());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliFailure> {
    match cli.command {
        Command::Triples {
            max_t,
            primitive,
            format,
        } => cmd_triples(max_t, primitive, format.resolve()),
        Command::Gen { family } => cmd_gen(family),
        Command::Verify {
            coefficients,
            format,
        } => cmd_verify(&coefficients, format.resolve()),
        Command::Search {
            dim,
            min,
            max,
            shards,
            block_size,
            budget,
            checkpoint,
            allow_negative,
            format,
        } => cmd_search(
            dim,
            min,
            max,
            shards,
            block_size,
            budget,
            checkpoint.as_deref(),
            allow_negative,
            format.resolve(),
        ),
    }
}

fn cmd_triples(max_t: u64, primitive: bool, format: Format) -> Result<u8, CliFailure> {
    let bound = i64::try_from(max_t)
        .map_err(|_| CliFailure::new(2, format!("--max-t {max_t} exceeds the 64-bit envelope")))?;
    let records: Vec<OutputRecord> = enumerate(bound, primitive)?
        .iter()
        .map(OutputRecord::triple)
        .collect();
    emit(&records, format)?;
    Ok(0)
}

fn envelope_check_quad(quad: &CoefficientQuad) -> Result<(), CliFailure> {
    let worst = quad
        .entries()
        .iter()
        .map(|e| e.unsigned_abs())
        .max()
        .unwrap_or(0);
    if worst > ENTRY_LIMIT_2X2 as u64 {
        return Err(CliFailure::new(
            2,
            format!(
                "generated coefficients reach {worst}, beyond the checked 64-bit envelope \
                 (max {ENTRY_LIMIT_2X2}); use smaller parameters"
            ),
        ));
    }
    Ok(())
}

/// Verify the quadruple end to end and return its six representative
/// eigenvalue classes.
fn checked_classes(quad: &CoefficientQuad) -> Result<[EigenPair; 6], CliFailure> {
    envelope_check_quad(quad)?;
    let report = verify_all_permutations(quad)?;
    if !report.all_pass {
        return Err(CliFailure::new(
            3,
            format!("internal consistency failure: generated quadruple {quad} does not verify"),
        ));
    }
    let reps = representative_eigenvalues(quad)?;
    let mut classes = [EigenPair::new(0, 0); 6];
    for (slot, rep) in classes.iter_mut().zip(reps.iter()) {
        *slot = rep.ok_or_else(|| {
            CliFailure::new(3, "internal consistency failure: missing eigenvalue class")
        })?;
    }
    Ok(classes)
}

fn cmd_gen(family: Family) -> Result<u8, CliFailure> {
    let (quads, format): (Vec<CoefficientQuad>, Format) = match family {
        Family::Canonical { triple, format } => (vec![canonical(&triple)?], format.resolve()),
        Family::Altcan { m, n, format } => (
            vec![alt_canonical(&AltCanParams::new(m, n)?)?],
            format.resolve(),
        ),
        Family::Oddt { triple, format } => (vec![odd_t_solution(&triple)?], format.resolve()),
        Family::Rational {
            triple,
            p,
            q,
            format,
        } => {
            let quads = rational_family(&triple, &RationalParam::new(p, q)?)?;
            (vec![quads.printed, quads.reduced], format.resolve())
        }
        Family::Degenerate { g, e1, e2, format } => {
            (vec![degenerate_family(g, e1, e2)?], format.resolve())
        }
        Family::General {
            triple,
            k,
            l,
            format,
        } => (
            vec![general_solution(&triple, &FactorPair::new(k, l))?],
            format.resolve(),
        ),
    };
    let mut records = Vec::new();
    for quad in &quads {
        let classes = checked_classes(quad)?;
        records.push(OutputRecord::quad(quad, &classes));
    }
    emit(&records, format)?;
    Ok(0)
}

fn parse_coefficient_tokens(raw: &str) -> Result<Vec<i64>, CliFailure> {
    let values: Result<Vec<i64>, _> = raw
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(str::parse::<i64>)
        .collect();
    values.map_err(|_| CliFailure::new(2, format!("cannot parse coefficients from {raw:?}")))
}

fn check_coefficient_envelope(values: &[i64]) -> Result<(), CliFailure> {
    let limit = match values.len() {
        4 => ENTRY_LIMIT_2X2,
        9 => ENTRY_LIMIT_3X3,
        n => {
            return Err(CliFailure::new(
                2,
                format!("expected four or nine coefficients, got {n}"),
            ))
        }
    };
    for v in values {
        if v.unsigned_abs() > limit as u64 {
            return Err(CliFailure::new(
                2,
                format!(
                    "coefficient {v} exceeds the checked 64-bit envelope for this dimension \
                     (max {limit})"
                ),
            ));
        }
    }
    Ok(())
}

/// Verify one coefficient list; returns (record, all_pass).
fn verify_one(values: &[i64]) -> Result<(OutputRecord, bool), CliFailure> {
    check_coefficient_envelope(values)?;
    match values.len() {
        4 => {
            let quad = CoefficientQuad::new(values[0], values[1], values[2], values[3]);
            let report = verify_all_permutations(&quad)?;
            Ok((OutputRecord::report_2x2(&report), report.all_pass))
        }
        9 => {
            let nonuple: [i64; 9] = values.try_into().expect("checked length");
            let report = verify_all_permutations_3x3(&nonuple)?;
            Ok((OutputRecord::report_3x3(&report), report.all_pass))
        }
        _ => unreachable!("envelope check rejects other lengths"),
    }
}

fn cmd_verify(args: &[String], format: Format) -> Result<u8, CliFailure> {
    let mut inputs: Vec<Vec<i64>> = Vec::new();
    if args.is_empty() {
        // Piped mode: each stdin line is a JSON record or a bare list of
        // integers.
        let stdin = std::io::stdin();
        for line in stdin.lock().lines() {
            let line = line.map_err(|e| CliFailure::new(2, format!("stdin: {e}")))?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with('{') {
                let record = decode(trimmed, Format::Json)?;
                let coefficients = record.coefficients().ok_or_else(|| {
                    CliFailure::new(
                        2,
                        format!("record of kind {:?} carries no coefficients", record.kind()),
                    )
                })?;
                inputs.push(coefficients);
            } else {
                inputs.push(parse_coefficient_tokens(trimmed)?);
            }
        }
        if inputs.is_empty() {
            return Err(CliFailure::new(2, "no coefficients on stdin"));
        }
    } else {
        inputs.push(parse_coefficient_tokens(&args.join(" "))?);
    }

    let mut all_pass = true;
    let mut records = Vec::new();
    for values in &inputs {
        let (record, pass) = verify_one(values)?;
        records.push(record);
        all_pass &= pass;
    }
    emit(&records, format)?;
    Ok(if all_pass { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    dim: u8,
    min: i64,
    max: i64,
    shards: u32,
    block_size: u64,
    budget: Option<u64>,
    checkpoint_path: Option<&Path>,
    allow_negative: bool,
    format: Format,
) -> Result<u8, CliFailure> {
    let limit = if dim == 2 {
        ENTRY_LIMIT_2X2
    } else {
        ENTRY_LIMIT_3X3
    };
    for bound in [min, max] {
        if bound.unsigned_abs() > limit as u64 {
            return Err(CliFailure::new(
                2,
                format!(
                    "range bound {bound} exceeds the checked 64-bit envelope for dimension {dim} \
                     (max {limit})"
                ),
            ));
        }
    }
    let range = SearchRange::new(min, max)?;

    if dim == 2 {
        if checkpoint_path.is_some() {
            return Err(CliFailure::new(
                2,
                "--checkpoint applies to --dim 3 searches only",
            ));
        }
        let records = driver::run_2x2(range, shards, budget.unwrap_or(DEFAULT_BUDGET_2X2))?;
        let out: Vec<OutputRecord> = records.iter().map(OutputRecord::search_2x2).collect();
        emit(&out, format)?;
        for record in &records {
            if matches!(
                record.classification,
                eigenperm_core::search::Classification::Other
            ) {
                eprintln!(
                    "eigenperm: quadruple {:?} passes every permutation but fits no known \
                     family (classified other)",
                    record.coefficients
                );
            }
        }
        return Ok(0);
    }

    if min < 0 && !allow_negative {
        return Err(CliFailure::new(
            2,
            "3x3 searches default to nonnegative ranges; pass --allow-negative to override",
        ));
    }
    let resume = match checkpoint_path {
        Some(path) if path.exists() => Some(checkpoint::load(path)?),
        _ => None,
    };
    let outcome = driver::run_3x3(range, shards, block_size, budget, resume)?;
    if let Some(path) = checkpoint_path {
        checkpoint::save(&outcome.checkpoint, path)?;
    }
    let out: Vec<OutputRecord> = outcome
        .records
        .iter()
        .map(OutputRecord::search_3x3)
        .collect();
    emit(&out, format)?;
    for record in &outcome.records {
        if !record.trivial {
            eprintln!(
                "eigenperm: nontrivial 3x3 solution: {:?} (spectrum of first arrangement {:?})",
                record.coefficients, record.spectrum
            );
        }
    }
    if outcome.complete {
        Ok(0)
    } else {
        let plan = eigenperm_core::search::partition_work(
            range,
            eigenperm_core::search::Dim::Three,
            block_size,
            shards,
        )?;
        let done: u64 = outcome
            .checkpoint
            .shard_next
            .iter()
            .zip(plan.shards.iter())
            .map(|(next, shard)| next - shard.start_unit)
            .sum();
        match checkpoint_path {
            Some(path) => eprintln!(
                "eigenperm: search incomplete ({done} of {} units done); checkpoint written to {}",
                outcome.checkpoint.total_units,
                path.display()
            ),
            None => eprintln!(
                "eigenperm: search incomplete ({done} of {} units done); rerun with --checkpoint \
                 to make it resumable",
                outcome.checkpoint.total_units
            ),
        }
        Ok(4)
    }
}
