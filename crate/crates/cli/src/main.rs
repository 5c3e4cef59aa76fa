use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twojoin_core::detect::{
    detect_2join_report, detect_nonpath_2join_report, minimally_sided_2join_with, minimally_sided_nonpath_2join_with,
    minimally_sided_nonpath_general_with, Report, DEFAULT_MARKER_LENGTH,
};
use twojoin_core::io::{sniff_format, write_edge_list};
use twojoin_core::oracle::{enumerate_2joins, MAX_ENUMERATION_VERTICES};
use twojoin_core::split::{format_split, parse_split};
use twojoin_core::{decompose_blocks, gen, has_star_cutset, parse_graph, DetectOptions, Error, Format, Graph, TwoJoinSplit};

/// Detect 2-joins, non-path 2-joins and minimally-sided 2-joins.
///
/// Exit status: 0 when something was found (or the command succeeded),
/// 1 when the answer is a certified "none", 2 on input or precondition errors.
#[derive(Parser)]
#[command(name = "twojoin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a 2-join.
    Detect(DetectArgs),
    /// Find a non-path 2-join.
    DetectNonpath(DetectArgs),
    /// Find a 2-join with a smallest possible side.
    Minside {
        #[command(flatten)]
        input: Input,
        /// Only non-path 2-joins; the graph must have no star cutset.
        #[arg(long)]
        nonpath: bool,
        /// Non-path variant for any connected graph (implies --nonpath).
        #[arg(long)]
        general: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Find a star cutset.
    StarCutset {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive enumeration for graphs on at most 16 vertices.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        nonpath: bool,
        /// Print only the smallest side size.
        #[arg(long)]
        min_side: bool,
    },
    /// Print one block of decomposition as an edge list.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Split file with lines X1:, A1:, B1:, X2:, A2:, B2:.
        #[arg(long)]
        split: PathBuf,
        /// Edges on the marker path replacing the other side.
        #[arg(long, default_value_t = DEFAULT_MARKER_LENGTH)]
        marker_length: usize,
        /// Side kept in the block.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        side: u8,
    },
    /// Write a generated graph as an edge list.
    Gen {
        /// cycle K | path K | complete K | star LEAVES | random N P SEED |
        /// figure1 | double-hexagon | double-k4 | double-cycle K
        family: String,
        params: Vec<String>,
    },
    /// Time the detectors on a family at several sizes.
    Bench {
        /// cycle | path | complete | star | double-cycle | random
        family: String,
        /// Vertex counts.
        #[arg(required = true)]
        sizes: Vec<usize>,
        /// Edge probability for the random family.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Args)]
struct DetectArgs {
    #[command(flatten)]
    input: Input,
    /// On absence, list every tuple of the exhausted universal set.
    #[arg(long)]
    certificate: bool,
    /// Worker threads for candidate evaluation; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Compare the answer with exhaustive enumeration (n <= 16).
    #[arg(long)]
    cross_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    EdgeList,
    Dimacs,
}

/// Failure carrying the exit status and a diagnostic.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, format!("error: {e}"))
    }
}

type Outcome = Result<(u8, String), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure(2, format!("error: cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load(input: &Input) -> Result<Graph, Failure> {
    let text = read_input(&input.graph)?;
    let format = match input.format {
        FormatArg::Auto => sniff_format(&text),
        FormatArg::EdgeList => Format::EdgeList,
        FormatArg::Dimacs => Format::Dimacs,
    };
    parse_graph(&text, format).map_err(|e| Failure(2, format!("error: {}: {e}", input.graph.display())))
}

fn options(threads: usize) -> Result<DetectOptions, Failure> {
    if threads == 0 {
        return Err(Failure(2, "error: --threads must be at least 1".into()));
    }
    if threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure(2, format!("error: thread pool: {e}")))?;
    }
    Ok(DetectOptions { parallel: threads > 1 })
}

fn found_text(s: &TwoJoinSplit) -> String {
    format!("found: true\n{}", format_split(s))
}

fn detect(args: &DetectArgs, nonpath: bool) -> Outcome {
    let g = load(&args.input)?;
    let opts = options(args.threads)?;
    let report: Report = if nonpath { detect_nonpath_2join_report(&g, opts)? } else { detect_2join_report(&g, opts)? };
    let mut out = match (&report.split, report.certificate()) {
        (Some(s), _) => found_text(s),
        (None, Some(tuples)) => {
            let mut out = format!("found: false\ncertificate_tuples: {}\n", tuples.len());
            if args.certificate {
                for z in tuples {
                    let _ = writeln!(out, "tuple: {} {} {} {}", z.a1, z.a2, z.b1, z.b2);
                }
            }
            out
        }
        (None, None) => unreachable!("a report without a split has a certificate"),
    };
    if args.cross_check {
        if g.n() > MAX_ENUMERATION_VERTICES {
            let _ = writeln!(out, "cross_check: skipped (n = {} above {MAX_ENUMERATION_VERTICES})", g.n());
        } else {
            let expected = !enumerate_2joins(&g, nonpath)?.is_empty();
            if expected != report.split.is_some() {
                return Err(Failure(2, format!("{out}cross_check: mismatch (oracle found = {expected})")));
            }
            out.push_str("cross_check: agree\n");
        }
    }
    Ok((if report.split.is_some() { 0 } else { 1 }, out))
}

fn minside(input: &Input, nonpath: bool, general: bool, threads: usize) -> Outcome {
    let g = load(input)?;
    let opts = options(threads)?;
    let found = if general {
        minimally_sided_nonpath_general_with(&g, opts)?
    } else if nonpath {
        minimally_sided_nonpath_2join_with(&g, opts)?
    } else {
        minimally_sided_2join_with(&g, opts)?
    };
    Ok(match found {
        Some(s) => (0, format!("{}min_side: {}\n", found_text(&s), s.x1.len())),
        None => (1, "found: false\n".into()),
    })
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn star_cutset(input: &Input) -> Outcome {
    let g = load(input)?;
    Ok(match has_star_cutset(&g)? {
        Some(w) => (0, format!("found: true\ncenter: {}\ncutset: {}\n", w.center, join(&w.cutset))),
        None => (1, "found: false\n".into()),
    })
}

fn oracle(input: &Input, nonpath: bool, min_side: bool) -> Outcome {
    let g = load(input)?;
    let all = enumerate_2joins(&g, nonpath)?;
    if all.is_empty() {
        return Ok((1, "found: false\ncount: 0\n".into()));
    }
    let mut out = format!("found: true\ncount: {}\n", all.len());
    if min_side {
        let _ = writeln!(out, "min_side: {}", all.iter().map(|s| s.min_side_size()).min().unwrap());
    } else {
        for s in &all {
            out.push('\n');
            out.push_str(&format_split(s));
        }
    }
    Ok((0, out))
}

fn decompose(input: &Input, split: &Path, length: usize, side: u8) -> Outcome {
    let g = load(input)?;
    let text = read_input(split)?;
    let s = parse_split(&text).map_err(|e| Failure(2, format!("error: {}: {e}", split.display())))?;
    let (b1, b2) = decompose_blocks(&g, &s, length)?;
    let block = if side == 1 { b1 } else { b2 };
    let mut out = format!("# block keeping side {side}, marker path of {length} edges\n");
    let _ = writeln!(out, "# original: {}", join(&block.original));
    let _ = writeln!(out, "# marker: {}", join(&block.marker));
    out.push_str(&write_edge_list(&block.graph));
    Ok((0, out))
}

fn parse_param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Failure> {
    let raw = params.get(i).ok_or_else(|| Failure(2, format!("error: missing parameter {what}")))?;
    raw.parse().map_err(|_| Failure(2, format!("error: invalid {what} '{raw}'")))
}

fn generate(family: &str, params: &[String]) -> Result<Graph, Failure> {
    let expect = |count: usize| {
        if params.len() == count {
            Ok(())
        } else {
            Err(Failure(2, format!("error: {family} takes {count} parameter(s), got {}", params.len())))
        }
    };
    let g = match family {
        "cycle" | "path" | "complete" | "star" | "double-cycle" => {
            expect(1)?;
            let k: usize = parse_param(params, 0, "size")?;
            match family {
                "cycle" => gen::cycle(k)?,
                "path" => gen::path(k)?,
                "complete" => gen::complete(k)?,
                "star" => gen::star(k)?,
                _ => gen::double_cycle(k)?.0,
            }
        }
        "random" => {
            expect(3)?;
            gen::random_connected(
                parse_param(params, 0, "n")?,
                parse_param(params, 1, "p")?,
                parse_param(params, 2, "seed")?,
            )?
        }
        "figure1" | "double-hexagon" | "double-k4" => {
            expect(0)?;
            match family {
                "figure1" => gen::figure1_graph(),
                "double-hexagon" => gen::double_hexagon().0,
                _ => gen::double_k4().0,
            }
        }
        other => return Err(Failure(2, format!("error: unknown family '{other}'"))),
    };
    Ok(g)
}

fn bench(family: &str, sizes: &[usize], p: f64, seed: u64) -> Outcome {
    let mut out = String::new();
    for &n in sizes {
        let g = match family {
            "cycle" | "path" | "complete" => generate(family, &[n.to_string()])?,
            "star" => gen::star(n.saturating_sub(1))?,
            "double-cycle" => gen::double_cycle(n / 2)?.0,
            "random" => gen::random_connected(n, p, seed)?,
            other => return Err(Failure(2, format!("error: unknown bench family '{other}'"))),
        };
        let opts = DetectOptions::default();
        let start = Instant::now();
        let any = detect_2join_report(&g, opts)?;
        let t_any = start.elapsed();
        let start = Instant::now();
        let np = detect_nonpath_2join_report(&g, opts)?;
        let t_np = start.elapsed();
        let _ = writeln!(
            out,
            "n: {} m: {} universal: {} detect_ms: {:.3} detect_tried: {} detect_found: {} \
             nonpath_ms: {:.3} nonpath_tried: {} nonpath_found: {}",
            g.n(),
            g.m(),
            any.universal.len(),
            t_any.as_secs_f64() * 1e3,
            any.tried,
            any.split.is_some(),
            t_np.as_secs_f64() * 1e3,
            np.tried,
            np.split.is_some(),
        );
    }
    Ok((0, out))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Detect(args) => detect(&args, false),
        Command::DetectNonpath(args) => detect(&args, true),
        Command::Minside { input, nonpath, general, threads } => minside(&input, nonpath, general, threads),
        Command::StarCutset { input } => star_cutset(&input),
        Command::Oracle { input, nonpath, min_side } => oracle(&input, nonpath, min_side),
        Command::Decompose { input, split, marker_length, side } => decompose(&input, &split, marker_length, side),
        Command::Gen { family, params } => Ok((0, write_edge_list(&generate(&family, &params)?))),
        Command::Bench { family, sizes, p, seed } => bench(&family, &sizes, p, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((code, out)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
