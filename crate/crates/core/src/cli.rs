//! Command-line front end. [`run`] takes argv and writers so it can be driven
//! from tests; the binary only forwards the exit code.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{
    find_line_rho_graphs, min_order_connected_complement, named_matches, CENSUS_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::family::{build, FamilySpec};
use crate::graph::{h_join, iterated_line_graph, Graph, DEFAULT_GROWTH_CAP};
use crate::graph6;
use crate::quotient::{
    coarsest_equitable_partition, quotient_cospectrality_witness, quotient_matrices,
    random_quotient_corpus, CospectralityWitness, Partition,
};
use crate::spectral::{
    energy_of_spectrum, is_hyperenergetic, rho_of_spectrum_with_tol, spectrum_of, MatrixKind,
    RHO_TOL,
};
use crate::theorems::{registry, run_suite};

/// Environment variable overriding the worker-thread count.
pub const THREADS_ENV: &str = "SPECTRA_RHO_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spectra-rho",
    version,
    about = "Spectra, energies and the -2 property of line graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Source {
    /// Family spec such as `turan(6,3)`, or a graph6 string.
    #[arg(long, short = 'g', conflicts_with = "graph_file")]
    graph: Option<String>,
    /// File with one graph per line (family spec or graph6); `#` starts a comment.
    #[arg(long)]
    graph_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and print its order, size and graph6 code.
    Build {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Spectrum of the adjacency (A), Laplacian (L) or signless Laplacian (Q) matrix.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, short = 'm', default_value = "A")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Adjacency energy and hyperenergeticity.
    Energy {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Whether every negative eigenvalue of L^k(G) equals -2.
    Rho {
        #[command(flatten)]
        source: Source,
        #[arg(long, short = 'k', default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = RHO_TOL, value_parser = positive_f64)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Quotient matrices of an equitable partition, or the seeded random
    /// H-join corpus with `--random`.
    Quotient {
        #[command(flatten)]
        source: Source,
        /// Blocks as `0,1|2,3`; defaults to the coarsest equitable partition.
        #[arg(long)]
        partition: Option<String>,
        /// Number of random H-joins to check instead of reading a graph.
        #[arg(long, conflicts_with_all = ["graph", "graph_file", "partition"])]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run theorem checks; exits 1 if any applicable check fails.
    Verify {
        #[arg(long, conflicts_with_all = ["theorem", "list"])]
        all: bool,
        #[arg(long, short = 't')]
        theorem: Option<String>,
        /// Print the registered check ids.
        #[arg(long)]
        list: bool,
    },
    /// Connected graphs whose line graph has the -2 property.
    Census {
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Also search for the least order with a connected complement.
        #[arg(long)]
        min_order_complement: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Equienergetic non-cospectral pair K_2[K_2, H_1], K_2[K_2, H_2].
    EquiPair {
        #[arg(long, short = 'n')]
        order: usize,
        #[arg(long, short = 'r')]
        degree: usize,
    },
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// Parses one graph argument: family spec first, graph6 second.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let text = text.trim();
    match text.parse::<FamilySpec>() {
        Ok(spec) => build(&spec),
        Err(family_err) => {
            let looks_graph6 = !text.is_empty() && text.bytes().all(|b| (63..=126).contains(&b));
            if looks_graph6 && !text.contains('(') {
                graph6::decode(text)
            } else {
                Err(family_err)
            }
        }
    }
}

fn read_source(source: &Source) -> Result<Vec<Graph>> {
    match (&source.graph, &source.graph_file) {
        (Some(text), None) => Ok(vec![parse_graph(text)?]),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                token: path.display().to_string(),
                reason: e.to_string(),
            })?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(parse_graph)
                .collect()
        }
        _ => Err(Error::Parse {
            token: "<graph source>".into(),
            reason: "give exactly one of --graph or --graph-file".into(),
        }),
    }
}

fn parse_partition(order: usize, text: &str) -> Result<Partition> {
    let blocks = text
        .split('|')
        .map(|block| {
            block
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| Error::Parse {
                        token: t.trim().to_string(),
                        reason: "expected a vertex id".into(),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(order, blocks)
}

/// Non-cospectral `degree`-regular pairs of a given order.
pub const REGULAR_PAIRS: [(usize, usize, &str, &str); 8] = [
    (6, 2, "cycle(6)", "union(cycle(3),cycle(3))"),
    (7, 2, "cycle(7)", "union(cycle(3),cycle(4))"),
    (8, 2, "cycle(8)", "union(cycle(4),cycle(4))"),
    (9, 2, "cycle(9)", "union(cycle(3),cycle(6))"),
    (10, 2, "cycle(10)", "union(cycle(5),cycle(5))"),
    (6, 3, "kbip(3,3)", "circulant(6;2,3)"),
    (8, 3, "cube(3)", "circulant(8;1,4)"),
    (10, 3, "petersen", "circulant(10;2,5)"),
];

#[derive(Debug, Clone, Serialize)]
pub struct EquiPair {
    pub order: usize,
    pub degree: usize,
    pub parts: [String; 2],
    pub graph6: [String; 2],
    pub witness: CospectralityWitness,
}

/// Looks `(order, degree)` up in [`REGULAR_PAIRS`] and certifies the joins.
pub fn equi_pair(order: usize, degree: usize) -> Result<EquiPair> {
    let Some(&(_, _, a, b)) = REGULAR_PAIRS.iter().find(|p| p.0 == order && p.1 == degree) else {
        let supported: Vec<String> = REGULAR_PAIRS
            .iter()
            .map(|p| format!("({},{})", p.0, p.1))
            .collect();
        return Err(Error::Availability {
            order,
            degree,
            supported: supported.join(" "),
        });
    };
    let k2 = build(&FamilySpec::Complete(2))?;
    let join = |text: &str| -> Result<_> { h_join(&k2, &[k2.clone(), build(&text.parse()?)?]) };
    let (h1, h2) = (join(a)?, join(b)?);
    let witness = quotient_cospectrality_witness(&h1, &h2)?;
    Ok(EquiPair {
        order,
        degree,
        parts: [a.to_string(), b.to_string()],
        graph6: [graph6::encode(&h1.graph), graph6::encode(&h2.graph)],
        witness,
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } | Error::PolynomialDomain(_) | Error::NotSymmetric { .. } => {
            EXIT_FAILURE
        }
        _ => EXIT_USAGE,
    }
}

fn line(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string(v).expect("serializable record");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Structure(format!("output error: {e}"))
}

fn graph_record(g: &Graph) -> Value {
    json!({ "graph": g.label(), "graph6": graph6::encode(g) })
}

fn merge(mut base: Value, extra: impl Serialize) -> Value {
    if let (Value::Object(a), Ok(Value::Object(b))) = (&mut base, serde_json::to_value(extra)) {
        a.extend(b);
    }
    base
}

/// Applies `SPECTRA_RHO_THREADS` to the global rayon pool. Returns an error
/// naming the value when it is not a positive integer.
pub fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads = raw
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::Parse {
            token: raw.clone(),
            reason: format!("{THREADS_ENV} must be a positive integer"),
        })?;
    // a second call in the same process keeps the existing pool
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code: 0 on success, 1 on a failed verification, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Build { source, format } => {
            for g in read_source(&source)? {
                match format {
                    Format::Json => line(
                        out,
                        &merge(
                            graph_record(&g),
                            json!({ "order": g.order(), "size": g.size() }),
                        ),
                    )?,
                    Format::Text => writeln!(out, "{}", graph6::encode(&g)).map_err(io_error)?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum {
            source,
            matrix,
            format,
        } => {
            for g in read_source(&source)? {
                let sp = spectrum_of(&g, matrix);
                match format {
                    Format::Text => writeln!(out, "{sp}").map_err(io_error)?,
                    Format::Json => line(
                        out,
                        &merge(
                            graph_record(&g),
                            json!({ "matrix": matrix, "spectrum": sp }),
                        ),
                    )?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Energy { source, format } => {
            for g in read_source(&source)? {
                let e = energy_of_spectrum(&spectrum_of(&g, MatrixKind::Adjacency));
                match format {
                    Format::Text => writeln!(out, "{}", e.energy).map_err(io_error)?,
                    Format::Json => {
                        let rec = merge(graph_record(&g), &e);
                        line(
                            out,
                            &merge(rec, json!({ "hyperenergetic": is_hyperenergetic(&g) })),
                        )?
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Rho {
            source,
            k,
            tol,
            format,
        } => {
            for g in read_source(&source)? {
                let (lk, growth) = iterated_line_graph(&g, k, DEFAULT_GROWTH_CAP)?;
                let verdict =
                    rho_of_spectrum_with_tol(&spectrum_of(&lk, MatrixKind::Adjacency), tol);
                match format {
                    Format::Text => {
                        writeln!(out, "{} {}", g.label(), verdict.holds && !verdict.vacuous)
                            .map_err(io_error)?
                    }
                    Format::Json => {
                        let rec = merge(graph_record(&g), json!({ "k": k, "growth": growth }));
                        line(out, &merge(rec, &verdict))?
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Quotient {
            source,
            partition,
            random,
            seed,
        } => {
            if let Some(count) = random {
                let reports = random_quotient_corpus(seed, count)?;
                for r in &reports {
                    line(out, r)?;
                }
                let failed = reports.iter().any(|r| r.is_discrepancy());
                return Ok(if failed { EXIT_FAILURE } else { EXIT_OK });
            }
            for g in read_source(&source)? {
                let pi = match &partition {
                    Some(text) => parse_partition(g.order(), text)?,
                    None => coarsest_equitable_partition(&g),
                };
                let qs = quotient_matrices(&g, &pi)?;
                let rec = merge(graph_record(&g), json!({ "blocks": pi.blocks() }));
                line(out, &merge(rec, &qs))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { all, theorem, list } => {
            if list {
                for e in registry() {
                    line(out, &json!({ "theorem_id": e.id, "summary": e.summary }))?;
                }
                return Ok(EXIT_OK);
            }
            let id = match (all, theorem.as_deref()) {
                (true, None) => None,
                (false, Some(id)) => Some(id),
                _ => {
                    return Err(Error::Parse {
                        token: "verify".into(),
                        reason: "give --all, --theorem <id> or --list".into(),
                    })
                }
            };
            let Some(reports) = run_suite(id)? else {
                return Err(Error::Parse {
                    token: id.unwrap_or_default().to_string(),
                    reason: "unknown theorem id; see `verify --list`".into(),
                });
            };
            for r in &reports {
                line(out, r)?;
            }
            let failed = reports.iter().any(|r| r.is_discrepancy());
            Ok(if failed { EXIT_FAILURE } else { EXIT_OK })
        }
        Command::Census {
            max_order,
            min_order_complement,
            format,
        } => {
            if max_order == 0 || max_order > CENSUS_MAX_ORDER {
                return Err(Error::Parse {
                    token: max_order.to_string(),
                    reason: format!("--max-order must be in 1..={CENSUS_MAX_ORDER}"),
                });
            }
            let entries = find_line_rho_graphs(max_order)?;
            for e in &entries {
                match format {
                    Format::Text => writeln!(out, "{}", e.graph6).map_err(io_error)?,
                    Format::Json => line(out, e)?,
                }
            }
            let named: serde_json::Map<String, Value> = named_matches(&entries)?
                .into_iter()
                .map(|(name, code)| (name, Value::String(code)))
                .collect();
            line(
                out,
                &json!({ "order": max_order, "count": entries.len(), "named_matches": named }),
            )?;
            if min_order_complement {
                line(
                    out,
                    &json!({ "min_order_connected_complement": min_order_connected_complement()? }),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::EquiPair { order, degree } => {
            let pair = equi_pair(order, degree)?;
            let certified = pair.witness.certified_equienergetic_pair;
            line(out, &pair)?;
            Ok(if certified { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}
