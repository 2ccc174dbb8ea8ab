//! Command-line surface. `run` is the whole entry point and is written
//! against abstract output streams so the integration tests can drive it
//! in-process and assert on bytes and exit codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 refusal (rank mismatch,
//! non-orientable profile, vanishing even degree, invalid weights),
//! 3 internal consistency failure (non-integer total, sample
//! disagreement, failed verification).

use crate::gw::{assemble, render, FieldKind};
use crate::localization::{
    signature, signature_verified_with, CountResult, DegreeProfile, LocalizationError,
    OrientationPolicy,
};
use crate::weights::WeightVector;
use crate::{fixtures, orientation, verify};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_REFUSAL: i32 = 2;
const EXIT_INTERNAL: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cubic-count",
    about = "Signed counts of twisted cubics on complete intersections, by exact localization",
    disable_help_subcommand = true
)]
struct TopLevel {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the signature for one instance.
    Count(CountArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Report the orientability congruences for one instance.
    Orient(ProfileArgs),
    /// List all relatively orientable cases up to an ambient dimension.
    Enumerate(EnumerateArgs),
    /// Render the quadratic form for a given signature and rank.
    Gw(GwArgs),
    /// Recompute the published table and diff it against the fixture.
    Table(TableArgs),
    /// Time the largest (n = 12) cases.
    Bench,
}

#[derive(Args)]
struct ProfileArgs {
    /// Ambient projective dimension n.
    #[arg(long)]
    n: usize,
    /// Hypersurface degrees, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<i64>,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    profile: ProfileArgs,
    /// Explicit weight vector (comma separated); skips sampling.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<i64>>,
    /// Number of independent random weight vectors that must agree.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Seed for the weight sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Classical count; adds the assembled quadratic form to the output.
    #[arg(long)]
    rank: Option<String>,
    /// Include per-plane contributions in the output.
    #[arg(long)]
    trace: bool,
    /// Report vanishing (even-degree) cases as count 0 instead of refusing.
    #[arg(long)]
    allow_vanishing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, default_value = "all", value_parser = ["oracle", "combinatorics", "invariance", "all"])]
    suite: String,
    /// Trials for the randomized invariants.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest ambient dimension to scan.
    #[arg(long = "max-n", default_value_t = 12)]
    max_n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GwArgs {
    #[arg(long, allow_hyphen_values = true)]
    signature: String,
    #[arg(long, allow_hyphen_values = true)]
    rank: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Alternate fixture file (same JSON schema as the shipped table).
    #[arg(long = "table-path")]
    table_path: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct PlaneOutput {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct GwOutput {
    signature: String,
    rank: String,
    hyperbolic_multiplicity: String,
    general_form: String,
}

#[derive(Serialize)]
struct CountOutput {
    n: usize,
    degrees: Vec<i64>,
    signature: String,
    weights_used: Vec<i64>,
    samples_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_plane: Option<Vec<PlaneOutput>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gw: Option<GwOutput>,
}

#[derive(Serialize)]
struct ErrorOutput<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

/// Parses arguments, runs one command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match TopLevel::try_parse_from(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match parsed.command {
        Command::Count(args) => count_command(args, out, err),
        Command::Verify(args) => verify_command(args, out),
        Command::Orient(args) => orient_command(args, out),
        Command::Enumerate(args) => enumerate_command(args, out),
        Command::Gw(args) => gw_command(args, out, err),
        Command::Table(args) => table_command(args, out, err),
        Command::Bench => bench_command(out, err),
    }
}

fn emit_error(json: bool, code: &str, message: String, out: &mut dyn Write, err: &mut dyn Write) {
    if json {
        let body = ErrorOutput {
            error: ErrorBody { code, message },
        };
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&body).expect("serializable")
        );
    } else {
        let _ = writeln!(err, "error ({code}): {message}");
    }
}

fn localization_exit(e: &LocalizationError) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_REFUSAL
    }
}

fn build_profile(
    args: &ProfileArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<DegreeProfile, i32> {
    DegreeProfile::new(args.n, args.degrees.clone()).map_err(|e| {
        emit_error(args.json, e.reason_code(), e.to_string(), out, err);
        EXIT_REFUSAL
    })
}

fn count_command(args: CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let json = args.profile.json;
    let profile = match build_profile(&args.profile, out, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let policy = if args.allow_vanishing {
        OrientationPolicy::AllowVanishing
    } else {
        OrientationPolicy::Enforce
    };
    let result: Result<CountResult, LocalizationError> = match &args.weights {
        Some(entries) => WeightVector::new(entries.clone())
            .map_err(LocalizationError::from)
            .and_then(|w| {
                crate::localization::signature_with(
                    &profile,
                    &w,
                    policy,
                    crate::localization::SignConvention::ProductForm,
                )
            }),
        None => signature_verified_with(&profile, args.samples, args.seed, policy),
    };
    let result = match result {
        Ok(result) => result,
        Err(e) => {
            emit_error(json, e.reason_code(), e.to_string(), out, err);
            return localization_exit(&e);
        }
    };

    let gw_output = match &args.rank {
        None => None,
        Some(rank_text) => {
            let rank: BigInt = match rank_text.parse() {
                Ok(rank) => rank,
                Err(_) => {
                    emit_error(
                        json,
                        "invalid-rank",
                        format!("not an integer: {rank_text}"),
                        out,
                        err,
                    );
                    return EXIT_USAGE;
                }
            };
            match assemble(result.signature.clone(), rank) {
                Ok(g) => Some(GwOutput {
                    signature: g.signature.to_string(),
                    rank: g.rank.to_string(),
                    hyperbolic_multiplicity: g.hyperbolic_multiplicity().to_string(),
                    general_form: render(&g, FieldKind::General),
                }),
                Err(e) => {
                    emit_error(json, "parity-mismatch", e.to_string(), out, err);
                    return EXIT_REFUSAL;
                }
            }
        }
    };

    let per_plane = args.trace.then(|| {
        result
            .per_plane
            .iter()
            .map(|(pair, value)| PlaneOutput {
                i: pair.i,
                j: pair.j,
                value: value.to_string(),
            })
            .collect()
    });

    if json {
        let output = CountOutput {
            n: profile.n(),
            degrees: profile.degrees().to_vec(),
            signature: result.signature.to_string(),
            weights_used: result.weights_used.entries().to_vec(),
            samples_checked: result.samples_checked,
            per_plane,
            gw: gw_output,
        };
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&output).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "{profile}");
        let _ = writeln!(out, "signature = {}", result.signature);
        let _ = writeln!(
            out,
            "weights   = {} ({} sample{} checked)",
            result.weights_used,
            result.samples_checked,
            if result.samples_checked == 1 { "" } else { "s" }
        );
        if let Some(planes) = per_plane {
            for plane in planes {
                let _ = writeln!(out, "  plane ({}, {}): {}", plane.i, plane.j, plane.value);
            }
        }
        if let Some(gw) = gw_output {
            let _ = writeln!(out, "quadratic form = {}", gw.general_form);
            let _ = writeln!(
                out,
                "  = {} + {}·H over fields where 2 and 3 are squares",
                gw.signature, gw.hyperbolic_multiplicity
            );
        }
    }
    EXIT_OK
}

fn verify_command(args: VerifyArgs, out: &mut dyn Write) -> i32 {
    let results = match args.suite.as_str() {
        "oracle" => verify::oracle_suite(),
        "combinatorics" => verify::combinatorics_suite(),
        "invariance" => verify::invariance_suite(args.trials, args.seed),
        _ => verify::all_suites(args.trials, args.seed),
    };
    let mut all_passed = true;
    for check in &results {
        all_passed &= check.passed;
        let _ = writeln!(
            out,
            "[{}] {} — {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    }
}

fn orient_command(args: ProfileArgs, out: &mut dyn Write) -> i32 {
    // report-valued: even degenerate profiles get a report line, not a refusal
    let profile = match DegreeProfile::new(args.n, args.degrees.clone()) {
        Ok(p) => p,
        Err(e) => {
            if args.json {
                let body = ErrorOutput {
                    error: ErrorBody {
                        code: e.reason_code(),
                        message: e.to_string(),
                    },
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&body).expect("serializable")
                );
            } else {
                let _ = writeln!(out, "not countable: {e}");
            }
            return EXIT_OK;
        }
    };
    let report = orientation::check(&profile);
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "{profile}");
        let _ = writeln!(
            out,
            "rank condition    : {}",
            if report.rank_ok { "ok" } else { "violated" }
        );
        let _ = writeln!(out, "all degrees odd   : {}", report.all_odd);
        let _ = writeln!(out, "#degrees = 3 mod 4: {}", report.count_neg_mod4);
        let _ = writeln!(
            out,
            "factor parity     : {}",
            if report.r_parity_ok { "ok" } else { "violated" }
        );
        let _ = writeln!(out, "relatively oriented: {}", report.orientable);
        if report.vanishing {
            let _ = writeln!(out, "even degree present: Euler class vanishes, count 0");
        }
        for violation in report.violations() {
            let _ = writeln!(out, "  - {violation}");
        }
    }
    EXIT_OK
}

fn enumerate_command(args: EnumerateArgs, out: &mut dyn Write) -> i32 {
    let profiles = orientation::enumerate_orientable(args.max_n);
    if args.json {
        let listing: Vec<_> = profiles
            .iter()
            .map(|p| serde_json::json!({ "n": p.n(), "degrees": p.degrees() }))
            .collect();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&listing).expect("serializable")
        );
    } else {
        for p in &profiles {
            let _ = writeln!(out, "{p}");
        }
        let _ = writeln!(
            out,
            "{} relatively orientable case(s) with n <= {}",
            profiles.len(),
            args.max_n
        );
    }
    EXIT_OK
}

fn gw_command(args: GwArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let signature: BigInt = match args.signature.parse() {
        Ok(v) => v,
        Err(_) => {
            emit_error(
                args.json,
                "invalid-signature",
                format!("not an integer: {}", args.signature),
                out,
                err,
            );
            return EXIT_USAGE;
        }
    };
    let rank: BigInt = match args.rank.parse() {
        Ok(v) => v,
        Err(_) => {
            emit_error(
                args.json,
                "invalid-rank",
                format!("not an integer: {}", args.rank),
                out,
                err,
            );
            return EXIT_USAGE;
        }
    };
    match assemble(signature, rank) {
        Ok(g) => {
            if args.json {
                let output = GwOutput {
                    signature: g.signature.to_string(),
                    rank: g.rank.to_string(),
                    hyperbolic_multiplicity: g.hyperbolic_multiplicity().to_string(),
                    general_form: render(&g, FieldKind::General),
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&output).expect("serializable")
                );
            } else {
                let _ = writeln!(
                    out,
                    "squares-2-3: {}",
                    render(&g, FieldKind::SquaresTwoThree)
                );
                let _ = writeln!(out, "general    : {}", render(&g, FieldKind::General));
            }
            EXIT_OK
        }
        Err(e) => {
            emit_error(args.json, "parity-mismatch", e.to_string(), out, err);
            EXIT_REFUSAL
        }
    }
}

fn table_command(args: TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let rows = match &args.table_path {
        None => fixtures::table().to_vec(),
        Some(path) => match fixtures::load_table(path) {
            Ok(rows) => rows,
            Err(e) => {
                emit_error(args.json, "table-load", e.to_string(), out, err);
                return EXIT_REFUSAL;
            }
        },
    };
    let mut all_match = true;
    let mut json_rows = Vec::new();
    for row in &rows {
        let profile = match DegreeProfile::new(row.n, row.degrees.clone()) {
            Ok(p) => p,
            Err(e) => {
                emit_error(args.json, e.reason_code(), e.to_string(), out, err);
                return EXIT_REFUSAL;
            }
        };
        let w = match crate::weights::default_weights(profile.weight_count()) {
            Ok(w) => w,
            Err(e) => {
                emit_error(args.json, "invalid-weights", e.to_string(), out, err);
                return EXIT_REFUSAL;
            }
        };
        let computed = match signature(&profile, &w) {
            Ok(result) => result.signature,
            Err(e) => {
                emit_error(args.json, e.reason_code(), e.to_string(), out, err);
                return localization_exit(&e);
            }
        };
        let matches = computed == row.signature;
        all_match &= matches;
        if args.json {
            json_rows.push(serde_json::json!({
                "n": row.n,
                "degrees": row.degrees,
                "computed": computed.to_string(),
                "table": row.signature.to_string(),
                "match": matches,
            }));
        } else {
            let degrees: Vec<String> = row.degrees.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(
                out,
                "[{}] n={} ({}) computed {} table {}",
                if matches { "PASS" } else { "FAIL" },
                row.n,
                degrees.join(","),
                computed,
                row.signature
            );
        }
    }
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&json_rows).expect("serializable")
        );
    }
    if all_match {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    }
}

fn bench_command(out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cases: [(usize, &[i64]); 3] = [(12, &[3, 3, 9]), (12, &[3, 5, 7]), (12, &[5, 5, 5])];
    for (n, degrees) in cases {
        let profile = match DegreeProfile::new(n, degrees.to_vec()) {
            Ok(p) => p,
            Err(e) => {
                emit_error(false, e.reason_code(), e.to_string(), out, err);
                return EXIT_REFUSAL;
            }
        };
        let w = crate::weights::default_weights(profile.weight_count()).expect("s <= 6");
        let start = Instant::now();
        match signature(&profile, &w) {
            Ok(result) => {
                let elapsed = start.elapsed();
                let _ = writeln!(
                    out,
                    "{profile}: signature {} in {:.3} ms",
                    result.signature,
                    elapsed.as_secs_f64() * 1e3
                );
            }
            Err(e) => {
                emit_error(false, e.reason_code(), e.to_string(), out, err);
                return localization_exit(&e);
            }
        }
    }
    EXIT_OK
}
