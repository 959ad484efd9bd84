//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification run or an `--expect` assertion fails. Everywhere a rank is
//! asked for, `-n` is the number of quiver vertices; the corresponding
//! polygon has `n + 1` cells.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use num::ToPrimitive;

use crate::counting::{count_coloured_quivers, fuss_catalan_tilting, Count};
use crate::geometry::{
    count_rotation_classes, for_each_angulation, rotation_class_representatives, Angulation,
    AngulationDoc, PolygonParams,
};
use crate::quiver::{ColouredQuiver, QuiverDoc};
use crate::verify::{bfs_mutation_class, seed_quiver, verify_all, VerifyOptions};

/// Enumerative methods refuse to run past this many angulations.
const GEOMETRY_ENUMERATION_LIMIT: u64 = 2_000_000;
/// The mutation-graph search refuses to run past this expected class count
/// or this rank.
const BFS_CLASS_LIMIT: u64 = 100_000;
const BFS_MAX_RANK: u64 = 12;
/// The verify grid is exhaustive in several dimensions at once; keep it
/// desk-sized.
const VERIFY_MAX_N: u64 = 6;
const VERIFY_MAX_M: u64 = 4;

#[derive(Parser)]
#[command(
    name = "polyquiver",
    version,
    about = "Coloured quivers of type A: count, enumerate and mutate via polygon angulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count mutation classes of rank-n quivers with colours 0..=m
    Count(CountArgs),
    /// The classic table of class counts, rows n=2.., columns m=1..
    Table(TableArgs),
    /// Count angulations of the polygon (the Fuss-Catalan numbers)
    TiltingCount(RangeArgs),
    /// List all angulations, or one representative per rotation class
    Enumerate(EnumerateArgs),
    /// Mutate a quiver (JSON on stdin or --input) at the given vertices
    Mutate(MutateArgs),
    /// The coloured quiver induced by an angulation
    QuiverOf(QuiverOfArgs),
    /// The colour-zero composition relations of an angulation's quiver
    Relations(RelationsArgs),
    /// Cross-check formula, geometry and mutation search on a small grid
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed-form count
    Formula,
    /// Enumerate angulations up to rotation
    Geometry,
    /// Breadth-first search of the mutation graph
    Bfs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    /// Every angulation
    Angulations,
    /// One angulation per rotation class
    Classes,
}

#[derive(Args)]
struct CountArgs {
    /// Quiver rank: a value or an inclusive range like 2..20
    #[arg(short, long)]
    n: String,
    /// Maximum arrow colour: a value or an inclusive range like 1..4
    #[arg(short, long)]
    m: String,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Exit 2 unless every computed count equals this value
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// Rank rows: a value or an inclusive range like 2..20
    #[arg(long, default_value = "2..20")]
    n: String,
    /// Colour-bound columns: a value or an inclusive range like 1..4
    #[arg(long, default_value = "1..4")]
    m: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RangeArgs {
    /// Quiver rank: a value or an inclusive range like 2..20
    #[arg(short, long)]
    n: String,
    /// Maximum arrow colour: a value or an inclusive range like 1..4
    #[arg(short, long)]
    m: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Quiver rank (the polygon gets n+1 cells)
    #[arg(short, long)]
    n: u64,
    /// Maximum arrow colour (cells have m+2 sides)
    #[arg(short, long)]
    m: u64,
    #[arg(long, value_enum, default_value = "angulations")]
    method: EnumKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MutateArgs {
    /// Quiver JSON file; stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Vertex indices (0-based) to mutate at, in order, e.g. --at 2,0
    #[arg(long, value_delimiter = ',', required = true)]
    at: Vec<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct QuiverOfArgs {
    /// Angulation JSON file; stdin when neither this nor --diagonals is given
    #[arg(long)]
    input: Option<PathBuf>,
    /// Quiver rank, required with --diagonals
    #[arg(short, long)]
    n: Option<u64>,
    /// Maximum arrow colour, required with --diagonals
    #[arg(short, long)]
    m: Option<u64>,
    /// Compact diagonal list like "1-4,1-6", alternative to --input
    #[arg(long)]
    diagonals: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RelationsArgs {
    /// Angulation JSON file; stdin when neither this nor --diagonals is given
    #[arg(long)]
    input: Option<PathBuf>,
    /// Quiver rank, required with --diagonals
    #[arg(short, long)]
    n: Option<u64>,
    /// Maximum arrow colour, required with --diagonals
    #[arg(short, long)]
    m: Option<u64>,
    /// Compact diagonal list like "1-4,1-6", alternative to --input
    #[arg(long)]
    diagonals: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest rank to check (1..=6)
    #[arg(long, default_value_t = 4)]
    max_n: u64,
    /// Largest colour bound to check (1..=4)
    #[arg(long, default_value_t = 3)]
    max_m: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Deliberately flip the colour convention; verification must then fail
    #[arg(long, hide = true)]
    corrupt_colour_convention: bool,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn execute(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Count(args) => run_count(args),
        Command::Table(args) => run_table(args),
        Command::TiltingCount(args) => run_tilting_count(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Mutate(args) => run_mutate(args),
        Command::QuiverOf(args) => run_quiver_of(args),
        Command::Relations(args) => run_relations(args),
        Command::Verify(args) => run_verify(args),
    }
}

/// Parses "7" or an inclusive "2..20".
fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("cannot parse {:?} as a number", s.trim()))
    };
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok((a, b))
    } else {
        let v = parse(text)?;
        Ok((v, v))
    }
}

fn check_positive(value: u64, what: &str) -> Result<(), String> {
    if value == 0 {
        Err(format!("{what} must be at least 1"))
    } else {
        Ok(())
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match path {
        Some(p) => fs::File::create(p)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| format!("cannot create {}: {e}", p.display())),
        None => Ok(Box::new(io::stdout())),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn rank_params(n: u64, m: u64) -> Result<PolygonParams, String> {
    let cells = u32::try_from(n + 1).map_err(|_| format!("rank {n} is too large"))?;
    let m = u32::try_from(m).map_err(|_| format!("colour bound {m} is too large"))?;
    PolygonParams::new(cells, m).map_err(|e| e.to_string())
}

fn count_row(out: &mut dyn Write, format: Format, n: u64, m: u64, count: &str) -> Result<(), String> {
    let line = match format {
        Format::Text => format!("n={n} m={m}: {count}"),
        Format::Csv => format!("{n},{m},{count}"),
        Format::Json => serde_json::json!({"n": n, "m": m, "count": count}).to_string(),
    };
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

fn compute_count(n: u64, m: u64, method: Method) -> Result<String, String> {
    match method {
        Method::Formula => Ok(count_coloured_quivers(n, m).to_string()),
        Method::Geometry => {
            let total = fuss_catalan_tilting(n, m);
            if total > Count::from(GEOMETRY_ENUMERATION_LIMIT) {
                return Err(format!(
                    "geometry would enumerate {total} angulations for n={n} m={m}, \
                     over the limit of {GEOMETRY_ENUMERATION_LIMIT}; use --method formula"
                ));
            }
            Ok(count_rotation_classes(&rank_params(n, m)?).to_string())
        }
        Method::Bfs => {
            let expected = count_coloured_quivers(n, m);
            if expected > Count::from(BFS_CLASS_LIMIT) || n > BFS_MAX_RANK {
                return Err(format!(
                    "the mutation graph for n={n} m={m} is too large to search \
                     (limit: {BFS_CLASS_LIMIT} classes, rank {BFS_MAX_RANK}); use --method formula"
                ));
            }
            let limit = expected
                .to_u64()
                .expect("guarded above")
                .saturating_mul(10);
            let class = bfs_mutation_class(
                &seed_quiver(n as usize, m as u32),
                Some(limit),
            )
            .map_err(|e| e.to_string())?;
            Ok(class.members.len().to_string())
        }
    }
}

fn run_count(args: CountArgs) -> Result<i32, String> {
    let (n0, n1) = parse_range(&args.n)?;
    let (m0, m1) = parse_range(&args.m)?;
    check_positive(n0, "rank -n")?;
    check_positive(m0, "colour bound -m")?;
    if args.expect.is_some() && (n0 != n1 || m0 != m1) {
        return Err("--expect requires a single n and a single m".to_string());
    }
    let mut out = open_output(&args.output)?;
    let mut mismatch = false;
    for n in n0..=n1 {
        for m in m0..=m1 {
            let count = compute_count(n, m, args.method)?;
            if let Some(expect) = &args.expect {
                if expect.trim() != count {
                    mismatch = true;
                    eprintln!("expectation failed for n={n} m={m}: expected {expect}, computed {count}");
                }
            }
            count_row(&mut *out, args.format, n, m, &count)?;
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(if mismatch { 2 } else { 0 })
}

fn run_table(args: TableArgs) -> Result<i32, String> {
    let (n0, n1) = parse_range(&args.n)?;
    let (m0, m1) = parse_range(&args.m)?;
    check_positive(n0, "rank --n")?;
    check_positive(m0, "colour bound --m")?;
    let mut out = open_output(&args.output)?;
    for n in n0..=n1 {
        for m in m0..=m1 {
            let count = count_coloured_quivers(n, m).to_string();
            count_row(&mut *out, args.format, n, m, &count)?;
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn run_tilting_count(args: RangeArgs) -> Result<i32, String> {
    let (n0, n1) = parse_range(&args.n)?;
    let (m0, m1) = parse_range(&args.m)?;
    check_positive(n0, "rank -n")?;
    check_positive(m0, "colour bound -m")?;
    let mut out = open_output(&args.output)?;
    for n in n0..=n1 {
        for m in m0..=m1 {
            let count = fuss_catalan_tilting(n, m).to_string();
            count_row(&mut *out, args.format, n, m, &count)?;
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn angulation_line(a: &Angulation, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(a.to_compact()),
        Format::Json => serde_json::to_string(&a.to_doc()).map_err(|e| e.to_string()),
        Format::Csv => Err("enumerate supports text or json, not csv".to_string()),
    }
}

fn run_enumerate(args: EnumerateArgs) -> Result<i32, String> {
    check_positive(args.n, "rank -n")?;
    check_positive(args.m, "colour bound -m")?;
    if args.format == Format::Csv {
        return Err("enumerate supports text or json, not csv".to_string());
    }
    let total = fuss_catalan_tilting(args.n, args.m);
    if total > Count::from(GEOMETRY_ENUMERATION_LIMIT) {
        return Err(format!(
            "n={} m={} has {total} angulations, over the limit of {GEOMETRY_ENUMERATION_LIMIT}",
            args.n, args.m
        ));
    }
    let params = rank_params(args.n, args.m)?;
    let mut out = open_output(&args.output)?;
    match args.method {
        EnumKind::Angulations => {
            let mut failure: Option<String> = None;
            for_each_angulation(&params, |a| {
                if failure.is_some() {
                    return;
                }
                match angulation_line(a, args.format) {
                    Ok(line) => {
                        if let Err(e) = writeln!(out, "{line}") {
                            failure = Some(e.to_string());
                        }
                    }
                    Err(e) => failure = Some(e),
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        }
        EnumKind::Classes => {
            for a in rotation_class_representatives(&params) {
                let line = angulation_line(&a, args.format)?;
                writeln!(out, "{line}").map_err(|e| e.to_string())?;
            }
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn run_mutate(args: MutateArgs) -> Result<i32, String> {
    let text = read_input(&args.input)?;
    let doc: QuiverDoc =
        serde_json::from_str(&text).map_err(|e| format!("bad quiver JSON: {e}"))?;
    let mut quiver = ColouredQuiver::from_doc(&doc).map_err(|e| e.to_string())?;
    for &j in &args.at {
        quiver = quiver.mutate(j).map_err(|e| e.to_string())?;
    }
    let mut out = open_output(&args.output)?;
    let json = serde_json::to_string(&quiver.to_doc()).map_err(|e| e.to_string())?;
    writeln!(out, "{json}").map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn load_angulation(
    input: &Option<PathBuf>,
    n: Option<u64>,
    m: Option<u64>,
    diagonals: &Option<String>,
) -> Result<Angulation, String> {
    if let Some(compact) = diagonals {
        if input.is_some() {
            return Err("give either --input or --diagonals, not both".to_string());
        }
        let (Some(n), Some(m)) = (n, m) else {
            return Err("-n and -m are required with --diagonals".to_string());
        };
        check_positive(n, "rank -n")?;
        check_positive(m, "colour bound -m")?;
        Angulation::parse_compact(rank_params(n, m)?, compact).map_err(|e| e.to_string())
    } else {
        let text = read_input(input)?;
        let doc: AngulationDoc =
            serde_json::from_str(&text).map_err(|e| format!("bad angulation JSON: {e}"))?;
        Angulation::from_doc(&doc).map_err(|e| e.to_string())
    }
}

fn run_quiver_of(args: QuiverOfArgs) -> Result<i32, String> {
    let angulation = load_angulation(&args.input, args.n, args.m, &args.diagonals)?;
    let quiver = angulation.quiver_of();
    let mut out = open_output(&args.output)?;
    let json = serde_json::to_string(&quiver.to_doc()).map_err(|e| e.to_string())?;
    writeln!(out, "{json}").map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn run_relations(args: RelationsArgs) -> Result<i32, String> {
    let angulation = load_angulation(&args.input, args.n, args.m, &args.diagonals)?;
    let mut out = open_output(&args.output)?;
    for triple in angulation.relations() {
        let line = match args.format {
            Format::Text => format!("{} {} {}", triple[0], triple[1], triple[2]),
            Format::Json => {
                let arrays: Vec<[u32; 2]> = triple
                    .iter()
                    .map(|d| {
                        let (a, b) = d.endpoints();
                        [a, b]
                    })
                    .collect();
                serde_json::to_string(&arrays).map_err(|e| e.to_string())?
            }
            Format::Csv => return Err("relations supports text or json, not csv".to_string()),
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn run_verify(args: VerifyArgs) -> Result<i32, String> {
    if !(1..=VERIFY_MAX_N).contains(&args.max_n) {
        return Err(format!("--max-n must be between 1 and {VERIFY_MAX_N}"));
    }
    if !(1..=VERIFY_MAX_M).contains(&args.max_m) {
        return Err(format!("--max-m must be between 1 and {VERIFY_MAX_M}"));
    }
    let options = VerifyOptions {
        corrupt_colour_convention: args.corrupt_colour_convention,
        ..VerifyOptions::default()
    };
    let report = verify_all(args.max_n, args.max_m, &options);
    let mut out = open_output(&args.output)?;
    match args.format {
        Format::Text => writeln!(out, "{report}").map_err(|e| e.to_string())?,
        Format::Json => {
            let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            writeln!(out, "{json}").map_err(|e| e.to_string())?;
        }
        Format::Csv => return Err("verify supports text or json, not csv".to_string()),
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(if report.passed() { 0 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert_eq!(parse_range("2..20").unwrap(), (2, 20));
        assert_eq!(parse_range(" 3 .. 5 ").unwrap(), (3, 5));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("1..y").is_err());
    }

    #[test]
    fn count_guards_reject_oversized_requests() {
        assert!(compute_count(20, 4, Method::Geometry).is_err());
        assert!(compute_count(20, 4, Method::Bfs).is_err());
        assert_eq!(compute_count(20, 4, Method::Formula).unwrap(), "873654669882574580");
        assert_eq!(compute_count(2, 3, Method::Geometry).unwrap(), "2");
        assert_eq!(compute_count(2, 3, Method::Bfs).unwrap(), "2");
    }
}
