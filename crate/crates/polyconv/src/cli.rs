//! Command-line front end.
//!
//! Exit codes: 0 success (for `check`: convex), 1 `check` on a non-convex
//! polygon, 2 input/parse error, 3 precondition violation, 4 internal
//! invariant breach (always a bug) or failed verification run.

use crate::convexity::classify;
use crate::cut::cut;
use crate::error::Error;
use crate::harness::{
    bench, check_downward, check_upward, corpus, fuzz, run_corpus, BenchAlgo, GenMode,
    GeneratorConfig, Report,
};
use crate::ordering::{count_strict_convex_orderings, strict_convex_ordering};
use crate::point::{Line, Point};
use crate::polygon::Polygon;
use crate::rational::parse_rational;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;

#[derive(Parser, Debug)]
#[command(
    name = "polyconv",
    about = "Exact convexity tests, cuts and orderings for polygons given as vertex sequences",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a polygon (ordinary, strict, quasi-convex, convex).
    Check {
        /// Polygon file ("x y" per line, '#' comments), or "-" for stdin.
        input: String,
        /// Emit the report as a single JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Cut a convex polygon along a line through its hull interior.
    Cut {
        input: String,
        /// The line as two points: x0 y0 x1 y1 (rationals).
        #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"])]
        line: Vec<String>,
        /// Allow ordinary-but-not-strict input; half convexity is then
        /// reported, not guaranteed.
        #[arg(long)]
        allow_nonstrict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Order a point set into a counterclockwise strictly convex polygon.
    Order { input: String },
    /// Count the strictly convex orderings of a point set by brute force
    /// (n <= 7) and compare them with the dihedral group.
    Perms { input: String },
    /// Print the polygon with one vertex removed.
    Reduce {
        input: String,
        #[arg(long)]
        alpha: usize,
    },
    /// Print the sub-polygon of a strictly increasing index list.
    Sub {
        input: String,
        /// Comma-separated indices, e.g. 0,2,3.
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
    },
    /// List the built-in counterexample corpus; with --run, verify it.
    Corpus {
        #[arg(long)]
        run: bool,
    },
    /// Generate polygons and check the convexity invariants on each.
    Fuzz(FuzzArgs),
    /// Count predicate calls of a convexity algorithm across sizes (CSV).
    Bench {
        #[arg(long)]
        algo: String,
        /// Comma-separated polygon sizes, e.g. 16,32,64.
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
    },
}

#[derive(Args, Debug)]
struct FuzzArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long)]
    n: usize,
    /// Grid coordinate bound for exhaustive_grid (coordinates 0..=grid).
    #[arg(long, default_value_t = 2)]
    grid: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instance budget (caps exhaustive runs, sizes random runs).
    #[arg(long)]
    budget: Option<u64>,
    /// Which property set to run on the generated stream.
    #[arg(long, value_enum, default_value_t = CheckArg::Battery)]
    check: CheckArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    #[value(name = "exhaustive_grid")]
    ExhaustiveGrid,
    #[value(name = "random_convex_position")]
    RandomConvexPosition,
    #[value(name = "degenerate_walks")]
    DegenerateWalks,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    /// Differential agreement of all tests, witness validity included.
    Battery,
    /// Downward hereditariness of ordinary convex polygons.
    Downward,
    /// Upward hereditariness for n >= 5.
    Upward,
}

const EXIT_OK: u8 = 0;
const EXIT_NOT_CONVEX: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

fn error_code(err: &Error) -> u8 {
    match err {
        Error::InvariantBreach(_) => EXIT_INVARIANT,
        _ => EXIT_PRECONDITION,
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn load_polygon(path: &str, err_out: &mut dyn Write) -> Result<Polygon, u8> {
    let text = read_input(path).map_err(|e| {
        let _ = writeln!(err_out, "error: cannot read {path}: {e}");
        EXIT_PARSE
    })?;
    Polygon::parse(&text).map_err(|e| {
        let _ = writeln!(err_out, "error: {path}: {e}");
        EXIT_PARSE
    })
}

/// Run the CLI on `args` (without the binary name), writing to the given
/// streams, and return the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err_out: &mut dyn Write) -> u8 {
    let mut argv: Vec<String> = vec!["polyconv".to_owned()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err_out, "{e}");
                    EXIT_PARSE
                }
            }
        }
    };
    match dispatch(cli.command, out, err_out) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err_out: &mut dyn Write) -> Result<u8, u8> {
    match cmd {
        Command::Check { input, json } => {
            let poly = load_polygon(&input, err_out)?;
            let report = classify(&poly);
            if json {
                let _ = writeln!(out, "{}", serde_json::to_string(&report).unwrap());
            } else {
                let _ = writeln!(out, "n            = {}", report.n);
                let _ = writeln!(out, "dim          = {}", report.dim);
                let _ = writeln!(out, "ordinary     = {}", report.ordinary);
                let _ = writeln!(out, "strict       = {}", report.strict);
                let _ = writeln!(out, "quasi_convex = {}", report.quasi_convex);
                let _ = writeln!(out, "convex       = {}", report.convex);
                if let Some(w) = &report.witness {
                    let _ = writeln!(out, "witness      = {}", serde_json::to_string(w).unwrap());
                }
            }
            Ok(if report.convex { EXIT_OK } else { EXIT_NOT_CONVEX })
        }
        Command::Cut {
            input,
            line,
            allow_nonstrict,
            json,
        } => {
            let poly = load_polygon(&input, err_out)?;
            let mut coords = Vec::with_capacity(4);
            for raw in &line {
                coords.push(parse_rational(raw).map_err(|e| {
                    let _ = writeln!(err_out, "error: bad line coordinate {raw:?}: {e}");
                    EXIT_PARSE
                })?);
            }
            let [x0, y0, x1, y1]: [crate::rational::Rational; 4] =
                coords.try_into().expect("clap enforces four values");
            let line = Line::through(Point::new(x0, y0), Point::new(x1, y1)).map_err(|e| {
                let _ = writeln!(err_out, "error: {e}");
                EXIT_PARSE
            })?;
            match cut(&poly, &line, allow_nonstrict) {
                Ok(result) => {
                    if json {
                        let _ = writeln!(out, "{}", serde_json::to_string(&result).unwrap());
                    } else {
                        let _ = writeln!(out, "i = {}, j = {}", result.i, result.j);
                        let _ = writeln!(out, "p = {}", result.p);
                        let _ = writeln!(out, "q = {}", result.q);
                        let _ = writeln!(
                            out,
                            "plus ({} vertices, convex = {}):",
                            result.plus.len(),
                            result.plus_convex
                        );
                        let _ = write!(out, "{}", result.plus);
                        let _ = writeln!(
                            out,
                            "minus ({} vertices, convex = {}):",
                            result.minus.len(),
                            result.minus_convex
                        );
                        let _ = write!(out, "{}", result.minus);
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
        Command::Order { input } => {
            let poly = load_polygon(&input, err_out)?;
            match strict_convex_ordering(&poly.vertices) {
                Ok(ordered) => {
                    let _ = write!(out, "{ordered}");
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
        Command::Perms { input } => {
            let poly = load_polygon(&input, err_out)?;
            match count_strict_convex_orderings(&poly.vertices) {
                Ok(result) => {
                    let n = result.polygon.len();
                    let total: usize = (1..=n).product();
                    let _ = writeln!(
                        out,
                        "strictly convex orderings: {} of {}",
                        result.orderings_found, total
                    );
                    let qualifying =
                        crate::ordering::strict_convex_permutations(&result.polygon);
                    let mut got = qualifying.clone();
                    let mut want = crate::permutation::dihedral_group(n);
                    got.sort();
                    want.sort();
                    let matches = got == want;
                    let _ = writeln!(out, "dihedral match: {matches}");
                    Ok(if matches { EXIT_OK } else { EXIT_INVARIANT })
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
        Command::Reduce { input, alpha } => {
            let poly = load_polygon(&input, err_out)?;
            match poly.reduce(alpha) {
                Ok(reduced) => {
                    let _ = write!(out, "{reduced}");
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
        Command::Sub { input, indices } => {
            let poly = load_polygon(&input, err_out)?;
            match poly.sub_polygon(&indices) {
                Ok(sub) => {
                    let _ = write!(out, "{sub}");
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
        Command::Corpus { run } => {
            if run {
                let failures = run_corpus();
                for entry in corpus() {
                    let broken: Vec<_> = failures.iter().filter(|f| f.0 == entry.name).collect();
                    if broken.is_empty() {
                        let _ = writeln!(out, "PASS {}", entry.name);
                    } else {
                        for (_, pred, want, got) in broken {
                            let _ = writeln!(
                                out,
                                "FAIL {} ({pred}: expected {want}, got {got})",
                                entry.name
                            );
                        }
                    }
                }
                Ok(if failures.is_empty() { EXIT_OK } else { EXIT_INVARIANT })
            } else {
                for entry in corpus() {
                    let expected: Vec<String> = entry
                        .expected
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    let _ = writeln!(
                        out,
                        "{} (n = {}): {} -- {}",
                        entry.name,
                        entry.polygon.len(),
                        expected.join(", "),
                        entry.notes
                    );
                }
                Ok(EXIT_OK)
            }
        }
        Command::Fuzz(args) => {
            let mode = match args.mode {
                ModeArg::ExhaustiveGrid => GenMode::ExhaustiveGrid,
                ModeArg::RandomConvexPosition => GenMode::RandomConvexPosition,
                ModeArg::DegenerateWalks => GenMode::DegenerateWalks,
            };
            if mode == GenMode::RandomConvexPosition && args.n < 3 {
                let _ = writeln!(err_out, "error: random_convex_position needs n >= 3");
                return Ok(EXIT_PRECONDITION);
            }
            let config = GeneratorConfig {
                grid_max: args.grid,
                n: args.n,
                seed: args.seed,
                mode,
            };
            let report = match args.check {
                CheckArg::Battery => fuzz(&config, args.budget),
                CheckArg::Downward => check_downward(&config, args.budget),
                CheckArg::Upward => check_upward(&config, args.budget),
            };
            emit_report(out, &report);
            Ok(if report.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            })
        }
        Command::Bench { algo, n_list } => {
            let algo: BenchAlgo = match algo.parse() {
                Ok(a) => a,
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    return Ok(EXIT_PARSE);
                }
            };
            match bench(algo, &n_list) {
                Ok(rows) => {
                    let _ = writeln!(out, "n,orientation_calls,oracle_calls");
                    for row in rows {
                        let _ = writeln!(
                            out,
                            "{},{},{}",
                            row.n, row.counter.orientation_calls, row.counter.oracle_calls
                        );
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let _ = writeln!(err_out, "error: {e}");
                    Ok(error_code(&e))
                }
            }
        }
    }
}

fn emit_report(out: &mut dyn Write, report: &Report) {
    for v in &report.violations {
        let _ = writeln!(out, "{}", serde_json::to_string(v).unwrap());
    }
    let _ = writeln!(
        out,
        "{{\"checked\":{},\"violations\":{},\"elapsed_ms\":{}}}",
        report.checked,
        report.violations.len(),
        report.elapsed_ms
    );
}
