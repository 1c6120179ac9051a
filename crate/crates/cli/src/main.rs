//! Command-line surface for the lecture hall polynomial library: compute any
//! named polynomial, check distributional properties, and run the named
//! verification suites with machine-readable reports.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lhl::inversion::{
    s_derangement_enum, s_derangement_recursive, s_eulerian, SSequence,
};
use lhl::order::{is_reflexive, OrderPolytope};
use lhl::perm::derangement_poly;
use lhl::poly::IntPolynomial;
use lhl::poset::Poset;
use lhl::simplex::{LatticeSimplex, PointEnumerator};
use lhl::suites::{run_all, run_suite, SuiteConfig, VerificationReport};
use lhl::Error;

#[derive(Parser)]
#[command(
    name = "lhl",
    version,
    about = "Exact lecture hall polynomial computations and verification suites",
    after_help = "Exit status: 0 on success or all checks passing, 1 when a \
                  check fails, 2 on usage errors or guardrail violations."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ascent polynomial over all s-inversion sequences.
    Eulerian {
        /// Comma-separated positive entries, e.g. 2,3,4.
        #[arg(long)]
        s: String,
    },
    /// Derangement polynomial of an s-sequence.
    Derangement {
        #[arg(long)]
        s: String,
        /// Column recursion by default; `enum` forces direct enumeration.
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Classical derangement polynomial by excedances.
    #[command(alias = "derangement-poly")]
    Classical {
        #[arg(long)]
        n: usize,
    },
    /// Eulerian polynomial of r-colored permutations.
    Colored {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        /// Statistic to histogram: descents or excedances.
        #[arg(long, value_enum, default_value_t = Stat::Des)]
        stat: Stat,
    },
    /// h* polynomial of a lattice simplex.
    Hstar {
        /// Lecture hall simplex of this s-sequence.
        #[arg(long, conflicts_with = "simplex")]
        s: Option<String>,
        /// JSON file holding an array of integer vertex arrays.
        #[arg(long)]
        simplex: Option<PathBuf>,
    },
    /// Local h* (box) polynomial of a lattice simplex.
    LocalHstar {
        #[arg(long, conflicts_with = "simplex")]
        s: Option<String>,
        #[arg(long)]
        simplex: Option<PathBuf>,
    },
    /// h* polynomial of a weighted order polytope.
    OrderHstar {
        /// JSON file like {"n": 3, "covers": [[1,3],[2,3]]}.
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        s: String,
    },
    /// Compare the triangulation h* formula with direct Ehrhart inversion.
    VerifyBm {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        s: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Per-face box polynomial table of the canonical triangulation.
    BoxReport {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        s: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Symmetric decomposition of the colored derangement polynomial.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
    },
    /// Gamma vector of a polynomial symmetric with respect to a degree.
    Gamma {
        /// Comma-separated coefficients, index = exponent.
        #[arg(long)]
        poly: String,
        /// Symmetry degree; defaults to the polynomial's degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Evaluate distributional properties of a polynomial.
    Check {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        degree: Option<usize>,
        /// Properties to test, comma separated.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Prop::all())]
        props: Vec<Prop>,
    },
    /// Run a named verification suite, or all of them.
    Verify {
        /// Suite name or `all`.
        #[arg(long)]
        suite: String,
        /// Largest sequence length or poset size (default per suite, or LHL_MAX_N).
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest entry of exhaustively or randomly drawn s-sequences.
        #[arg(long)]
        max_entry: Option<u64>,
        /// Number of random cases for sampled suites.
        #[arg(long)]
        cases: Option<usize>,
        /// Seed for the deterministic random corpora.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the available suite names.
    Suites,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    #[value(name = "enum")]
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Des,
    Exc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Prop {
    Symmetric,
    Unimodal,
    #[value(name = "logconcave")]
    LogConcave,
    #[value(name = "realrooted")]
    RealRooted,
    Gamma,
}

impl Prop {
    fn all() -> Vec<Prop> {
        vec![
            Prop::Symmetric,
            Prop::Unimodal,
            Prop::LogConcave,
            Prop::RealRooted,
            Prop::Gamma,
        ]
    }

    fn name(self) -> &'static str {
        match self {
            Prop::Symmetric => "symmetric",
            Prop::Unimodal => "unimodal",
            Prop::LogConcave => "logconcave",
            Prop::RealRooted => "realrooted",
            Prop::Gamma => "gamma",
        }
    }

    /// Key in the emitted `properties` object; matches the other subcommands.
    fn key(self) -> &'static str {
        match self {
            Prop::Symmetric => "symmetric",
            Prop::Unimodal => "unimodal",
            Prop::LogConcave => "log_concave",
            Prop::RealRooted => "real_rooted",
            Prop::Gamma => "gamma_nonnegative",
        }
    }
}

impl std::fmt::Display for Prop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Executes one subcommand. `Ok(true)` means success or all checks passing,
/// `Ok(false)` means a check failed, `Err` is a usage or guardrail problem.
fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Eulerian { s } => {
            let s: SSequence = s.parse()?;
            let poly = s_eulerian(&s);
            emit(poly_output(&poly, s.len()));
            Ok(true)
        }
        Command::Derangement { s, method } => {
            let s: SSequence = s.parse()?;
            let poly = match method {
                Method::Recursive => s_derangement_recursive(&s),
                Method::Enumerate => s_derangement_enum(&s),
            };
            emit(poly_output(&poly, s.len() + 1));
            Ok(true)
        }
        Command::Classical { n } => {
            let poly = derangement_poly(n)?;
            emit(poly_output(&poly, n));
            Ok(true)
        }
        Command::Colored { n, r, stat } => {
            let poly = match stat {
                Stat::Des => lhl::colored::colored_eulerian(n, r)?,
                Stat::Exc => {
                    let mut hist = vec![num_bigint(0); n + 1];
                    for sigma in lhl::colored::all_colored(n, r)? {
                        hist[sigma.excedances()] += 1;
                    }
                    IntPolynomial::new(hist)
                }
            };
            emit(poly_output(&poly, n));
            Ok(true)
        }
        Command::Hstar { s, simplex } => {
            let simplex = load_simplex(s, simplex)?;
            let poly = enumerator()?.hstar(&simplex)?;
            let mut output = poly_output(&poly, simplex.dim());
            output["properties"]["reflexive"] = json!(is_reflexive(&poly, simplex.dim()));
            emit(output);
            Ok(true)
        }
        Command::LocalHstar { s, simplex } => {
            let simplex = load_simplex(s, simplex)?;
            let poly = enumerator()?.local_hstar(&simplex)?;
            emit(poly_output(&poly, simplex.dim() + 1));
            Ok(true)
        }
        Command::OrderHstar { poset, s } => {
            let op = load_order_polytope(&poset, &s)?;
            let n = op.poset().n();
            let poly = op.ehrhart_hstar()?;
            let mut output = poly_output(&poly, n);
            output["properties"]["reflexive"] = json!(is_reflexive(&poly, n));
            emit(output);
            Ok(true)
        }
        Command::VerifyBm { poset, s, format } => {
            let op = load_order_polytope(&poset, &s)?;
            let ehrhart = op.ehrhart_hstar()?;
            let bm = op.betke_mcmullen_hstar()?;
            let report = VerificationReport {
                suite: "verify-bm".to_string(),
                checks: vec![lhl::suites::Check {
                    id: "betke-mcmullen".to_string(),
                    parameters: format!("covers={:?}, s={}", op.poset().covers(), op.weights()),
                    expected: ehrhart.to_string(),
                    actual: bm.to_string(),
                    passed: ehrhart == bm,
                }],
                duration_ms: 0,
            };
            emit_report(&report, format);
            Ok(report.passed())
        }
        Command::BoxReport { poset, s, format } => {
            let op = load_order_polytope(&poset, &s)?;
            let report = op.box_unimodality_report()?;
            let tri = op.canonical_triangulation()?;
            match format {
                Format::Json => {
                    let faces: Vec<_> = report
                        .rows
                        .iter()
                        .map(|row| {
                            json!({
                                "face": face_indices(row.face),
                                "local": row.local,
                                "unimodal": row.unimodal,
                                "real_rooted": row.real_rooted,
                            })
                        })
                        .collect();
                    emit(json!({
                        "covers": op.poset().covers(),
                        "s": op.weights().entries(),
                        "vertices": tri.vertices(),
                        "passes": report.passes(),
                        "faces": faces,
                    }));
                }
                Format::Csv => {
                    let mut out = String::from("face,local,unimodal,real_rooted\n");
                    for row in &report.rows {
                        let face = face_indices(row.face)
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(" ");
                        out.push_str(&format!(
                            "{face},{},{},{}\n",
                            row.local, row.unimodal, row.real_rooted
                        ));
                    }
                    print!("{out}");
                }
            }
            Ok(report.passes())
        }
        Command::Decompose { n, r } => {
            let poly = lhl::colored::colored_derangement_poly(n, r)?;
            let (a, b) = poly.symmetric_decomposition(n)?;
            let mut output = poly_output(&poly, n);
            output["decomposition"] = json!({
                "symmetric_part": a,
                "symmetric_part_degree_convention": n,
                "complementary_part": b,
                "complementary_part_degree_convention": n.saturating_sub(1),
            });
            emit(output);
            Ok(true)
        }
        Command::Gamma { poly, degree } => {
            let poly = parse_poly(&poly)?;
            let degree = resolve_degree(&poly, degree);
            let gamma = poly.gamma_vector(degree)?;
            let entries: Vec<serde_json::Value> = gamma.entries().iter().map(bigint_json).collect();
            emit(json!({
                "poly": poly,
                "degree_convention": degree,
                "gamma": entries,
                "nonnegative": gamma.is_nonnegative(),
            }));
            Ok(true)
        }
        Command::Check {
            poly,
            degree,
            props,
        } => {
            let poly = parse_poly(&poly)?;
            let degree = resolve_degree(&poly, degree);
            let mut results = serde_json::Map::new();
            let mut all = true;
            for prop in props {
                let holds = match prop {
                    Prop::Symmetric => poly.is_symmetric(degree),
                    Prop::Unimodal => poly.is_unimodal(),
                    Prop::LogConcave => poly.is_log_concave(),
                    Prop::RealRooted => poly.is_real_rooted(),
                    Prop::Gamma => poly
                        .gamma_vector(degree)
                        .map(|g| g.is_nonnegative())
                        .unwrap_or(false),
                };
                all &= holds;
                results.insert(prop.key().to_string(), json!(holds));
            }
            emit(json!({
                "poly": poly,
                "degree_convention": degree,
                "properties": results,
            }));
            Ok(all)
        }
        Command::Verify {
            suite,
            max_n,
            max_entry,
            cases,
            seed,
            format,
        } => {
            let config = SuiteConfig {
                max_n: max_n.or_else(|| env_parse("LHL_MAX_N")),
                max_entry,
                cases,
                seed,
            };
            let reports = if suite == "all" {
                run_all(&config)?
            } else {
                vec![run_suite(&suite, &config)?]
            };
            for report in &reports {
                eprintln!("{}", report.summary_line());
            }
            match format {
                Format::Json => {
                    let values: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                    if let [single] = values.as_slice() {
                        emit(single.clone());
                    } else {
                        emit(json!(values));
                    }
                }
                Format::Csv => {
                    let mut out = String::new();
                    for (i, report) in reports.iter().enumerate() {
                        let csv = report.to_csv();
                        if i == 0 {
                            out.push_str(&csv);
                        } else if let Some((_, rows)) = csv.split_once('\n') {
                            out.push_str(rows);
                        }
                    }
                    print!("{out}");
                }
            }
            Ok(reports.iter().all(VerificationReport::passed))
        }
        Command::Suites => {
            emit(json!(lhl::suites::SUITE_NAMES));
            Ok(true)
        }
    }
}

fn num_bigint(v: i64) -> num_bigint::BigInt {
    num_bigint::BigInt::from(v)
}

/// Exact JSON value for a big integer: a number while it fits in 64 bits, a
/// decimal string beyond that.
fn bigint_json(value: &num_bigint::BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match value.to_i64() {
        Some(small) => json!(small),
        None => json!(value.to_string()),
    }
}

fn emit(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

fn emit_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => emit(report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
}

/// Standard polynomial output: coefficients, the degree the property checks
/// are taken against, and the property flags themselves.
fn poly_output(poly: &IntPolynomial, degree_convention: usize) -> serde_json::Value {
    let gamma = poly
        .gamma_vector(degree_convention)
        .ok()
        .map(|g| g.is_nonnegative());
    json!({
        "poly": poly,
        "degree_convention": degree_convention,
        "properties": {
            "symmetric": poly.is_symmetric(degree_convention),
            "unimodal": poly.is_unimodal(),
            "log_concave": poly.is_log_concave(),
            "real_rooted": poly.is_real_rooted(),
            "gamma_nonnegative": gamma,
        },
    })
}

fn parse_poly(text: &str) -> Result<IntPolynomial, Error> {
    let coeffs = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<num_bigint::BigInt>()
                .map_err(|_| Error::Invalid(format!("bad coefficient '{}'", part.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPolynomial::new(coeffs))
}

fn resolve_degree(poly: &IntPolynomial, degree: Option<usize>) -> usize {
    degree.unwrap_or_else(|| poly.degree().unwrap_or(0))
}

fn enumerator() -> Result<PointEnumerator, Error> {
    let mut enumerator = PointEnumerator::new();
    if let Some(cap) = env_parse::<u64>("LHL_MAX_POINTS") {
        enumerator = enumerator.with_volume_cap(cap);
    }
    Ok(enumerator)
}

fn env_parse<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok()?.parse().ok()
}

fn load_simplex(s: Option<String>, file: Option<PathBuf>) -> Result<LatticeSimplex, Error> {
    match (s, file) {
        (Some(s), None) => LatticeSimplex::lecture_hall(&s.parse()?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let vertices: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| Error::Invalid(format!("bad simplex JSON: {e}")))?;
            LatticeSimplex::new(vertices)
        }
        _ => Err(Error::Invalid("pass exactly one of --s or --simplex".to_string())),
    }
}

fn load_order_polytope(path: &Path, s: &str) -> Result<OrderPolytope, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let poset = Poset::from_json(&text)?;
    OrderPolytope::new(poset, s.parse()?)
}

fn face_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
