mod cert;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kappa3::connectivity::vertex_connectivity;
use kappa3::generators::{generate_family, FamilySpec};
use kappa3::io::{parse_edge_list, to_dot, write_edge_list};
use kappa3::oracle::{kappa3_exact_with, ExactOptions};
use kappa3::packing::{kappa3_bounds, pack_trees_constructive, verify_packing};
use kappa3::planar::decide_kappa3_planar;
use kappa3::{Error, Graph};

use cert::{CertificateFile, FORMAT_VERSION};

const DEFAULT_SEED: u64 = 1;

/// Generalized 3-connectivity: exact values, bounds, tree packings and
/// certificates for graphs in edge-list format.
#[derive(Parser)]
#[command(name = "kappa3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertex connectivity κ.
    Kappa { graph: PathBuf },
    /// Print κ₃ (exact, bounds, or the planar decision procedure).
    Kappa3(Kappa3Args),
    /// Build internally disjoint trees for a terminal triple and write a certificate.
    Trees {
        graph: PathBuf,
        /// Three distinct vertices, e.g. `0,1,2`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        terminals: Vec<usize>,
        /// Certificate path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Write a named graph family as an edge list.
    Generate {
        #[arg(long)]
        family: String,
        /// Comma-separated `key=value` pairs, e.g. `k=1,i=0`.
        #[arg(long, default_value = "")]
        params: String,
        /// Seed for the random family.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a graph (and optionally a certificate) as Graphviz DOT.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct Mode {
    /// Exhaustive search over all triples (default).
    #[arg(long)]
    exact: bool,
    /// Closed-form lower and upper bounds with their reasoning.
    #[arg(long)]
    bounds: bool,
    /// Polynomial-size decision for planar graphs.
    #[arg(long)]
    planar: bool,
}

#[derive(Args)]
struct Kappa3Args {
    graph: PathBuf,
    #[command(flatten)]
    mode: Mode,
    /// Worker threads for the exact search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }

    fn verification(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) => Failure { code: 3, msg: format!("{e}; try --bounds") },
            Error::NotFound(_) | Error::Construction(_) => Failure { code: 1, msg: e.to_string() },
            _ => Failure::input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn read_cert(path: &Path) -> Result<CertificateFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let cert: CertificateFile =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if cert.v != FORMAT_VERSION {
        return Err(Failure::input(format!("unsupported certificate version {}", cert.v)));
    }
    Ok(cert)
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn connected(g: &Graph) -> Outcome {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected.into())
    }
}

fn cmd_kappa(path: &Path) -> Outcome {
    let g = read_graph(path)?;
    connected(&g)?;
    println!("{}", vertex_connectivity(&g)?);
    Ok(())
}

fn cmd_kappa3(args: &Kappa3Args) -> Outcome {
    let g = read_graph(&args.graph)?;
    connected(&g)?;
    if args.mode.bounds {
        let b = kappa3_bounds(&g)?;
        println!("[{},{}]", b.lower, b.upper);
        for note in &b.lower_notes {
            println!("lower: {note}");
        }
        for note in &b.upper_notes {
            println!("upper: {note}");
        }
    } else if args.mode.planar {
        let d = decide_kappa3_planar(&g)?;
        println!("{}", d.value);
        println!("kappa: {}", d.kappa);
        if let Some([a, b, c]) = d.failing_triple {
            println!("failing triple: {a},{b},{c}");
        }
    } else {
        let opts = ExactOptions { jobs: args.jobs.max(1), ..ExactOptions::default() };
        let k = kappa3_exact_with(&g, &opts)?;
        let [a, b, c] = k.triple;
        println!("{}", k.value);
        println!("argmin: {a},{b},{c}");
    }
    Ok(())
}

fn cmd_trees(path: &Path, terminals: &[usize], out: Option<&Path>) -> Outcome {
    let g = read_graph(path)?;
    let s: [usize; 3] = terminals
        .try_into()
        .map_err(|_| Failure::input(format!("need exactly three terminals, got {}", terminals.len())))?;
    let packing = pack_trees_constructive(&g, s)?;
    verify_packing(&g, &packing).map_err(|v| Failure::verification(format!("internal packing failed verification: {v}")))?;
    let cert = CertificateFile::new(&g, &packing, None);
    let json = serde_json::to_string_pretty(&cert).expect("certificate serializes");
    emit(out, &(json + "\n"))?;
    if out.is_some() {
        println!("{} trees for {},{},{}", packing.len(), s[0], s[1], s[2]);
    }
    Ok(())
}

fn cmd_verify(path: &Path, cert_path: &Path) -> Outcome {
    let g = read_graph(path)?;
    let cert = read_cert(cert_path)?;
    if cert.graph_hash != g.hash_hex() {
        return Err(Failure::verification("certificate was issued for a different graph (hash mismatch)"));
    }
    let packing = cert.packing();
    verify_packing(&g, &packing).map_err(|v| Failure::verification(format!("violation: {v}")))?;
    println!("ok: {} internally disjoint trees for {:?}", packing.len(), packing.terminals);
    Ok(())
}

fn parse_params(raw: &str) -> Result<BTreeMap<String, String>, Failure> {
    raw.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Failure::input(format!("parameter {p:?} is not key=value")))
        })
        .collect()
}

fn cmd_generate(family: &str, params: &str, seed: Option<u64>, out: Option<&Path>) -> Outcome {
    let mut params = parse_params(params)?;
    if family == "random" {
        let seed = seed.unwrap_or(DEFAULT_SEED);
        eprintln!("seed: {seed}");
        params.insert("seed".into(), seed.to_string());
    }
    let spec = FamilySpec::from_params(family, &params)?;
    let gen = generate_family(&spec)?;
    let mut comments = vec![format!("family: {spec}")];
    if let Some([a, b, c]) = gen.terminals {
        comments.push(format!("terminals: {a},{b},{c}"));
    }
    emit(out, &write_edge_list(&gen.graph, &comments))
}

fn cmd_dot(path: &Path, cert_path: Option<&Path>, out: Option<&Path>) -> Outcome {
    let g = read_graph(path)?;
    let dot = match cert_path {
        Some(p) => {
            let cert = read_cert(p)?;
            if cert.graph_hash != g.hash_hex() {
                return Err(Failure::verification("certificate was issued for a different graph (hash mismatch)"));
            }
            to_dot(&g, Some(&cert.trees), &cert.terminals)
        }
        None => to_dot(&g, None, &[]),
    };
    emit(out, &dot)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Kappa { graph } => cmd_kappa(graph),
        Command::Kappa3(args) => cmd_kappa3(args),
        Command::Trees { graph, terminals, out } => cmd_trees(graph, terminals, out.as_deref()),
        Command::Verify { graph, cert } => cmd_verify(graph, cert),
        Command::Generate { family, params, seed, out } => cmd_generate(family, params, *seed, out.as_deref()),
        Command::Dot { graph, cert, out } => cmd_dot(graph, cert.as_deref(), out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
