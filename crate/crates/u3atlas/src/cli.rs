//! Command-line front end: build and inspect single groups, run the full
//! catalog verification, list admissible parameters, classify user-supplied
//! generator sets, and export reports.
//!
//! Exit codes: 0 all-pass, 1 verification failure, 2 usage/input error,
//! 3 internal computation error.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::catalog::{
    self, BuildError, CatalogEntry, Series, SeriesSpec, VerificationReport,
};
use crate::chardeg::{self, DegreeProfile};
use crate::engine::{closure, ClosureError, GroupData};
use crate::mat3::Mat3;

/// Exit code: everything passed.
pub const EXIT_OK: i32 = 0;
/// Exit code: at least one verification check failed.
pub const EXIT_VERIFY_FAIL: i32 = 1;
/// Exit code: usage or input error.
pub const EXIT_USAGE: i32 = 2;
/// Exit code: internal computation error (cap exceeded, degree failure).
pub const EXIT_INTERNAL: i32 = 3;

/// Report rendering format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable lines.
    Text,
    /// One JSON document.
    Json,
    /// Comma-separated rows (export only; elsewhere same as text).
    Csv,
}

/// Resolved run configuration shared by all subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Exclusive upper bound on catalog orders.
    pub max_order: u64,
    /// Worker count for the verification sweep.
    pub jobs: usize,
    /// Seed for the randomized degree splitter.
    pub seed: u64,
    /// Element cap for closures.
    pub element_cap: usize,
    /// Optional report cache directory.
    pub cache_dir: Option<PathBuf>,
    /// Output format.
    pub output: OutputFormat,
}

#[derive(Parser)]
#[command(
    name = "u3atlas",
    version,
    about = "Catalog and verification of the finite subgroups of U(3) of order below 2000",
    after_help = "Spec strings use the grammar Name(key=value,...) with the canonical series \
names Delta3n2, Delta6n2, Cnl, D3ll, T, Delta3n2m, S4j, Delta6n2j, DeltaPrime, Lrknm, P, Q, \
Qprime, Xn, S, Sprime, Yrk, Vrk, M, Mprime, Jrk, Wnm, Znm, Zpnm, Zppnm, Znmj, Zpnmj, Hnmj, \
Ymj, Gmj, G1296_699, Yj, Ytildej, Unmj, Lm, G1701_102, Vj, Dj, Jm, Sporadic729, Sporadic972, \
Sporadic1458, Sporadic1701, Xi, XiHat, Pi, Theta, Upsilon, UpsilonPrime, Omega and the \
parameter keys r, k, n, l, m, j, variant. Example: u3atlas build \"Delta6n2j(n=5,j=3)\"."
)]
struct Cli {
    /// Exclusive upper bound on group orders.
    #[arg(long, global = true, default_value_t = 2000)]
    max_order: u64,
    /// Worker count; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the randomized degree splitter.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Closure element cap.
    #[arg(long, global = true, default_value_t = catalog::DEFAULT_ELEMENT_CAP)]
    element_cap: usize,
    /// Report cache directory; the U3ATLAS_CACHE_DIR environment variable
    /// overrides this flag.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one catalog group from a spec string and verify it.
    Build {
        /// Spec string, e.g. "Delta3n2(n=2)".
        spec: String,
    },
    /// Verify the enumerated catalog (optionally filtered) in parallel.
    Verify {
        /// Restrict to one series (canonical name; "C" is short for Cnl).
        #[arg(long)]
        series: Option<String>,
    },
    /// Print admissible parameters: "rk" for the (r, k) pairs, "C" for the
    /// C-group (r, k, l) triples.
    Params {
        /// Which table: rk | C.
        series: String,
    },
    /// Close and analyze a generator set from a JSON file
    /// (a list of matrices, each 3 rows of 3 cyclotomic literals).
    Classify {
        /// Path to the generator file.
        path: PathBuf,
    },
    /// Write the full catalog report to a file.
    Export {
        /// File format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Output path.
        #[arg(long)]
        path: PathBuf,
    },
}

struct CliError {
    code: i32,
    msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, msg: msg.into() }
    }

    fn internal(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_INTERNAL, msg: msg.into() }
    }
}

/// Parse arguments from the process environment and run; returns the exit
/// code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_cli(cli)
}

fn run_cli(cli: Cli) -> i32 {
    let config = RunConfig {
        max_order: cli.max_order.max(1),
        jobs: cli
            .jobs
            .unwrap_or_else(|| {
                std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
            })
            .max(1),
        seed: cli.seed.unwrap_or(chardeg::DEFAULT_SEED),
        element_cap: cli.element_cap,
        cache_dir: std::env::var_os("U3ATLAS_CACHE_DIR")
            .map(PathBuf::from)
            .or(cli.cache_dir),
        output: cli.output,
    };
    let result = match cli.command {
        Command::Build { spec } => cmd_build(&spec, &config),
        Command::Verify { series } => cmd_verify(series.as_deref(), &config),
        Command::Params { series } => cmd_params(&series, &config),
        Command::Classify { path } => cmd_classify(&path, &config),
        Command::Export { format, path } => cmd_export(format, &path, &config),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            e.code
        }
    }
}

fn parse_spec(s: &str) -> Result<SeriesSpec, CliError> {
    s.parse::<SeriesSpec>().map_err(|e| CliError::usage(e.to_string()))
}

fn series_filter(name: &str) -> Result<Series, CliError> {
    if name == "C" {
        return Ok(Series::Cnl);
    }
    Series::from_name(name).ok_or_else(|| CliError::usage(format!("unknown series: {name}")))
}

fn profile_json(p: Option<&DegreeProfile>) -> Value {
    match p {
        Some(p) => Value::Object(
            p.counts()
                .iter()
                .map(|(d, c)| (d.to_string(), Value::from(*c)))
                .collect(),
        ),
        None => Value::Null,
    }
}

fn params_json(spec: &SeriesSpec) -> Value {
    let p = spec.params;
    let mut obj = serde_json::Map::new();
    for (name, v) in [
        ("r", p.r),
        ("k", p.k),
        ("n", p.n),
        ("l", p.l),
        ("m", p.m),
        ("j", p.j),
        ("variant", p.variant),
    ] {
        if let Some(v) = v {
            obj.insert(name.to_string(), Value::from(v));
        }
    }
    Value::Object(obj)
}

fn report_json(entry: &CatalogEntry, report: &VerificationReport) -> Value {
    let computed = report.computed.as_ref().map(|c| {
        json!({
            "order": c.order,
            "su3": c.su3,
            "class_count": c.class_count,
            "profile": profile_json(c.profile.as_ref()),
            "abelian_invariants": c.abelian_invariants,
            "det_image_order": c.det_image_order,
            "monomial_class": c.monomial_class.as_str(),
            "cyclic_factor": c.cyclic_factor,
        })
    });
    json!({
        "series": entry.spec.series.name(),
        "params": params_json(&entry.spec),
        "expected": {
            "order": entry.expected_order,
            "id": entry.expected_id,
            "su3": entry.expected_su3,
            "profile": profile_json(entry.expected_profile.as_ref()),
        },
        "computed": computed,
        "pass": report.pass,
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "expected": c.expected,
            "got": c.got,
        })).collect::<Vec<_>>(),
        "notes": entry.notes,
    })
}

fn report_text(entry: &CatalogEntry, report: &VerificationReport) -> String {
    let mut out = String::new();
    let status = if report.pass { "PASS" } else { "FAIL" };
    let order = report
        .computed
        .as_ref()
        .map(|c| c.order.to_string())
        .unwrap_or_else(|| "-".to_string());
    out.push_str(&format!("{status} {} order={order}", entry.spec));
    if let Some(c) = &report.computed {
        out.push_str(&format!(
            " su3={} classes={} profile={} {}",
            c.su3,
            c.class_count,
            c.profile.as_ref().map(|p| p.to_string()).unwrap_or_else(|| "-".to_string()),
            c.monomial_class,
        ));
    }
    for check in report.checks.iter().filter(|c| !c.pass) {
        out.push_str(&format!(
            "\n  check {}: expected {}, got {}",
            check.name, check.expected, check.got
        ));
    }
    out
}

/// Cache payload: the verification report together with the key that
/// produced it, so stale files are recomputed rather than trusted.
#[derive(serde::Serialize, serde::Deserialize)]
struct CachedReport {
    spec: String,
    version: String,
    seed: u64,
    report: VerificationReport,
}

fn cache_path(dir: &Path, spec: &SeriesSpec) -> PathBuf {
    let sanitized: String = spec
        .to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    dir.join(format!("{sanitized}.json"))
}

fn cached_verify(entry: &CatalogEntry, config: &RunConfig) -> VerificationReport {
    let version = env!("CARGO_PKG_VERSION");
    let spec_string = entry.spec.to_string();
    let path = config.cache_dir.as_ref().map(|d| cache_path(d, &entry.spec));
    if let Some(path) = &path {
        if let Ok(text) = fs::read_to_string(path) {
            if let Ok(cached) = serde_json::from_str::<CachedReport>(&text) {
                if cached.spec == spec_string
                    && cached.version == version
                    && cached.seed == config.seed
                {
                    return cached.report;
                }
            }
        }
    }
    let report = catalog::verify_entry_seeded(entry, config.seed);
    if let Some(path) = &path {
        let cached = CachedReport {
            spec: spec_string,
            version: version.to_string(),
            seed: config.seed,
            report: report.clone(),
        };
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        if let Ok(text) = serde_json::to_string(&cached) {
            let _ = fs::write(path, text);
        }
    }
    report
}

fn verify_catalog(
    filter: Option<Series>,
    config: &RunConfig,
) -> Result<Vec<(CatalogEntry, VerificationReport)>, CliError> {
    let entries: Vec<CatalogEntry> = catalog::enumerate(config.max_order)
        .into_iter()
        .filter(|e| filter.map(|s| e.spec.series == s).unwrap_or(true))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::internal(format!("thread pool: {e}")))?;
    let reports: Vec<VerificationReport> =
        pool.install(|| entries.par_iter().map(|e| cached_verify(e, config)).collect());
    Ok(entries.into_iter().zip(reports).collect())
}

fn cmd_build(spec: &str, config: &RunConfig) -> Result<i32, CliError> {
    let spec = parse_spec(spec)?;
    let catalog_entry = catalog::enumerate(2000).into_iter().find(|e| e.spec == spec);
    match catalog_entry {
        Some(entry) => {
            let report = catalog::verify_entry_seeded(&entry, config.seed);
            match config.output {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report_json(&entry, &report)).unwrap());
                }
                _ => println!("{}", report_text(&entry, &report)),
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY_FAIL })
        }
        None => {
            // Outside the enumerated catalog: build directly and report the
            // computed invariants without expectations.
            let g = catalog::build_with_cap(&spec, config.element_cap).map_err(|e| match e {
                BuildError::InvalidSpec { .. } => CliError::usage(e.to_string()),
                BuildError::Closure(ClosureError::CapExceeded { .. }) => {
                    CliError::internal(e.to_string())
                }
                BuildError::Closure(_) => CliError::usage(e.to_string()),
            })?;
            print_analysis(&g, Some(&spec), config)
        }
    }
}

fn print_analysis(
    g: &GroupData,
    spec: Option<&SeriesSpec>,
    config: &RunConfig,
) -> Result<i32, CliError> {
    let fingerprint = g
        .fingerprint(config.seed)
        .map_err(|e| CliError::internal(format!("degree computation failed: {e}")))?;
    let classes = g.conjugacy_classes();
    let monomial = g.monomial_class();
    let cyclic = g.has_cyclic_direct_factor();
    match config.output {
        OutputFormat::Json => {
            let doc = json!({
                "spec": spec.map(|s| s.to_string()),
                "order": g.order(),
                "conductor": g.conductor(),
                "su3": g.is_subgroup_of_su3(),
                "class_count": classes.count(),
                "profile": profile_json(Some(&fingerprint.degree_profile)),
                "abelian_invariants": fingerprint.abelian_invariants,
                "det_image_order": fingerprint.det_image_order,
                "monomial_class": monomial.as_str(),
                "cyclic_factor": cyclic,
                "fingerprint": serde_json::to_value(&fingerprint).unwrap(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            if let Some(s) = spec {
                println!("spec: {s}");
            }
            println!("order: {}", g.order());
            println!("conductor: {}", g.conductor());
            println!("su3: {}", g.is_subgroup_of_su3());
            println!("classes: {}", classes.count());
            println!("profile: {}", fingerprint.degree_profile);
            println!(
                "abelian_invariants: {:?}",
                fingerprint.abelian_invariants
            );
            println!("det_image_order: {}", fingerprint.det_image_order);
            println!("monomial_class: {monomial}");
            match cyclic {
                Some(k) => println!("cyclic_factor: {k}"),
                None => println!("cyclic_factor: none"),
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(series: Option<&str>, config: &RunConfig) -> Result<i32, CliError> {
    let filter = series.map(series_filter).transpose()?;
    let results = verify_catalog(filter, config)?;
    let passed = results.iter().filter(|(_, r)| r.pass).count();
    let total = results.len();
    match config.output {
        OutputFormat::Json => {
            let doc = json!({
                "entries": results
                    .iter()
                    .map(|(e, r)| report_json(e, r))
                    .collect::<Vec<_>>(),
                "passed": passed,
                "total": total,
                "pass": passed == total,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            for (entry, report) in &results {
                println!("{}", report_text(entry, report));
            }
            let status = if passed == total { "PASS" } else { "FAIL" };
            println!("{status} {passed}/{total}");
        }
    }
    Ok(if passed == total { EXIT_OK } else { EXIT_VERIFY_FAIL })
}

fn cmd_params(series: &str, config: &RunConfig) -> Result<i32, CliError> {
    match series {
        "rk" | "T" => {
            let max_r = ((config.max_order.saturating_sub(1)) / 9).min(u64::from(u32::MAX)) as u32;
            let pairs = catalog::rk_pairs(max_r);
            match config.output {
                OutputFormat::Json => println!("{}", serde_json::to_string(&pairs).unwrap()),
                _ => {
                    for (r, k) in pairs {
                        println!("{r} {k}");
                    }
                }
            }
        }
        "C" | "Cnl" => {
            let triples = catalog::c_group_parameters(config.max_order);
            match config.output {
                OutputFormat::Json => println!("{}", serde_json::to_string(&triples).unwrap()),
                _ => {
                    for (r, k, l) in triples {
                        println!("{r} {k} {l}");
                    }
                }
            }
        }
        other => return Err(CliError::usage(format!("unknown parameter table: {other}"))),
    }
    Ok(EXIT_OK)
}

fn cmd_classify(path: &Path, config: &RunConfig) -> Result<i32, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let rows: Vec<Vec<Vec<String>>> = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("invalid generator file: {e}")))?;
    let mut gens = Vec::with_capacity(rows.len());
    for m in &rows {
        gens.push(
            Mat3::from_literal_rows(m)
                .map_err(|e| CliError::usage(format!("invalid matrix entry: {e}")))?,
        );
    }
    let g = closure(&gens, config.element_cap).map_err(|e| match e {
        ClosureError::CapExceeded { .. } => CliError::internal(e.to_string()),
        _ => CliError::usage(e.to_string()),
    })?;
    print_analysis(&g, None, config)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn export_csv(results: &[(CatalogEntry, VerificationReport)]) -> String {
    let mut out = String::new();
    out.push_str(
        "series,params,expected_order,computed_order,expected_id,su3_expected,su3_computed,profile_expected,profile_computed,pass\n",
    );
    for (entry, report) in results {
        let spec_string = entry.spec.to_string();
        let params = spec_string
            .split_once('(')
            .map(|(_, rest)| rest.trim_end_matches(')'))
            .unwrap_or("");
        let computed_order = report
            .computed
            .as_ref()
            .map(|c| c.order.to_string())
            .unwrap_or_default();
        let expected_id = entry
            .expected_id
            .map(|[o, j]| format!("[{o},{j}]"))
            .unwrap_or_default();
        let su3_computed = report
            .computed
            .as_ref()
            .map(|c| c.su3.to_string())
            .unwrap_or_default();
        let profile_expected = entry
            .expected_profile
            .as_ref()
            .map(|p| p.to_string())
            .unwrap_or_default();
        let profile_computed = report
            .computed
            .as_ref()
            .and_then(|c| c.profile.as_ref())
            .map(|p| p.to_string())
            .unwrap_or_default();
        let row = [
            entry.spec.series.name().to_string(),
            params.to_string(),
            entry.expected_order.to_string(),
            computed_order,
            expected_id,
            entry.expected_su3.to_string(),
            su3_computed,
            profile_expected,
            profile_computed,
            report.pass.to_string(),
        ];
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn cmd_export(format: OutputFormat, path: &Path, config: &RunConfig) -> Result<i32, CliError> {
    let results = verify_catalog(None, config)?;
    let text = match format {
        OutputFormat::Json => {
            let docs: Vec<Value> = results.iter().map(|(e, r)| report_json(e, r)).collect();
            serde_json::to_string_pretty(&docs).unwrap()
        }
        OutputFormat::Csv => export_csv(&results),
        OutputFormat::Text => {
            let mut out = String::new();
            for (entry, report) in &results {
                out.push_str(&report_text(entry, report));
                out.push('\n');
            }
            out
        }
    };
    let mut file = fs::File::create(path)
        .map_err(|e| CliError::usage(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(text.as_bytes())
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    let passed = results.iter().filter(|(_, r)| r.pass).count();
    eprintln!("wrote {} entries to {} ({passed} passing)", results.len(), path.display());
    Ok(EXIT_OK)
}
