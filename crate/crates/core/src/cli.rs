//! Command-line front end. Every subcommand writes deterministic text and
//! exits with 0 on success, 1 on a negative verdict, and 2 on errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::distance::DistanceMatrix;
use crate::error::Error;
use crate::generate::{
    random_circular_split_metric, random_connected_network, random_planar_network, PlanarOptions,
};
use crate::grassmann::{
    classify, omega_matrix, pluecker_coordinates_capped, TnnVerdict, DEFAULT_PLUECKER_CAP,
};
use crate::io::{
    is_network_text, parse_matrix, parse_network, serialize_matrix, serialize_network,
};
use crate::kalmanson::{
    characterize_capped, is_circular_response_matrix, is_kalmanson, is_metric, split_decomposition,
};
use crate::medial::{medial_trace, minimality};
use crate::network::{effective_resistance_matrix, response_matrix, CircularNetwork};
use crate::reconstruction::{reconstruct_topology_capped, tau_from_resistance};
use crate::spanning::{resistance_via_matrix_tree_capped, DEFAULT_VERTEX_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "circnet",
    version,
    about = "Circular planar electrical networks"
)]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Enumeration cap: boundary size for Plücker coordinates, vertex count
    /// for spanning forests.
    #[arg(long = "max-n", global = true)]
    pub max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Response matrix of a network.
    Response { input: PathBuf },
    /// Effective resistance matrix of a network.
    Resistance { input: PathBuf },
    /// Effective resistances by spanning forest enumeration.
    Oracle { input: PathBuf },
    /// The n x 2n matrix Ω of a resistance matrix or network.
    Omega { input: PathBuf },
    /// Maximal minors of Ω without its last row, in colex order.
    Pluecker { input: PathBuf },
    /// Whether the Plücker coordinates share a sign.
    CheckTnn { input: PathBuf },
    /// Triangle and Kalmanson inequalities.
    CheckKalmanson { input: PathBuf },
    /// Circular split coefficients.
    Split { input: PathBuf },
    /// Negated split coefficient matrix, checked as a response matrix.
    DualResponse { input: PathBuf },
    /// Full planar-electrical characterization.
    Characterize { input: PathBuf },
    /// Medial strands and minimality of an embedded network.
    Medial { input: PathBuf },
    /// Strand permutation recovered from resistances.
    Tau { input: PathBuf },
    /// Network topology recovered from resistances.
    Reconstruct { input: PathBuf },
    /// Seeded random instance.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Planar)]
        kind: Kind,
        /// Boundary vertices.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Inner vertices.
        #[arg(long, default_value_t = 2)]
        inner: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Connected circular planar network with a rotation system.
    Planar,
    /// Connected network, not necessarily planar.
    Connected,
    /// Nonnegative combination of circular split metrics.
    Kalmanson,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Input {
    Network(CircularNetwork),
    Matrix(DistanceMatrix),
}

fn read(path: &PathBuf) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_network(path: &PathBuf) -> std::result::Result<CircularNetwork, String> {
    let text = read(path)?;
    parse_network(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_input(path: &PathBuf) -> std::result::Result<Input, String> {
    let text = read(path)?;
    let parsed = if is_network_text(&text) {
        parse_network(&text).map(Input::Network)
    } else {
        parse_matrix(&text).and_then(|m| DistanceMatrix::new(m).map(Input::Matrix))
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

/// Resistance matrix of the input, computing it first for networks.
fn load_metric(path: &PathBuf) -> std::result::Result<DistanceMatrix, String> {
    match load_input(path)? {
        Input::Matrix(d) => Ok(d),
        Input::Network(net) => effective_resistance_matrix(&net)
            .map(DistanceMatrix::from)
            .map_err(|e| e.to_string()),
    }
}

/// Output text and whether the verdict was positive.
type Report = std::result::Result<(String, bool), String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn run_command(cli: &Cli) -> Report {
    let plucker_cap = cli.max_n.unwrap_or(DEFAULT_PLUECKER_CAP);
    match &cli.command {
        Command::Response { input } => {
            let net = load_network(input)?;
            let m = response_matrix(&net).map_err(err)?;
            Ok((serialize_matrix(m.matrix()), true))
        }
        Command::Resistance { input } => {
            let net = load_network(input)?;
            let r = effective_resistance_matrix(&net).map_err(err)?;
            Ok((serialize_matrix(r.matrix()), true))
        }
        Command::Oracle { input } => {
            let net = load_network(input)?;
            let cap = cli.max_n.unwrap_or(DEFAULT_VERTEX_CAP);
            let r = resistance_via_matrix_tree_capped(&net, cap).map_err(err)?;
            Ok((serialize_matrix(r.matrix()), true))
        }
        Command::Omega { input } => {
            let d = load_metric(input)?;
            Ok((serialize_matrix(omega_matrix(&d).matrix()), true))
        }
        Command::Pluecker { input } => {
            let d = load_metric(input)?;
            let point = pluecker_coordinates_capped(&omega_matrix(&d), plucker_cap).map_err(err)?;
            let mut out = String::new();
            for (subset, value) in point.coordinates() {
                let labels: Vec<String> = subset.iter().map(ToString::to_string).collect();
                writeln!(out, "{{{}}} {value}", labels.join(",")).unwrap();
            }
            Ok((out, true))
        }
        Command::CheckTnn { input } => {
            let d = load_metric(input)?;
            let verdict = match pluecker_coordinates_capped(&omega_matrix(&d), plucker_cap) {
                Ok(point) => classify(&point),
                Err(Error::RankMismatch { expected, found }) => {
                    TnnVerdict::RankDeficient { expected, found }
                }
                Err(e) => return Err(err(e)),
            };
            Ok((
                format!("tnn: {} ({verdict})\n", verdict.holds()),
                verdict.holds(),
            ))
        }
        Command::CheckKalmanson { input } => {
            let d = load_metric(input)?;
            let mut out = String::new();
            let triangle = is_metric(&d);
            let kalmanson = is_kalmanson(&d);
            match &triangle {
                None => writeln!(out, "metric: true").unwrap(),
                Some(v) => writeln!(out, "metric: false ({v})").unwrap(),
            }
            match &kalmanson {
                None => writeln!(out, "kalmanson: true").unwrap(),
                Some(v) => writeln!(out, "kalmanson: false ({v})").unwrap(),
            }
            Ok((out, triangle.is_none() && kalmanson.is_none()))
        }
        Command::Split { input } => {
            let d = load_metric(input)?;
            Ok((serialize_matrix(split_decomposition(&d).matrix()), true))
        }
        Command::DualResponse { input } => {
            let d = load_metric(input)?;
            let dual = split_decomposition(&d).dual_response();
            let mut out = serialize_matrix(&dual);
            let defect = is_circular_response_matrix(&dual);
            let rank = dual.rank();
            match &defect {
                None => writeln!(out, "# circular response: true").unwrap(),
                Some(x) => writeln!(out, "# circular response: false ({x})").unwrap(),
            }
            writeln!(out, "# rank: {rank}").unwrap();
            Ok((out, defect.is_none() && rank + 1 == d.n()))
        }
        Command::Characterize { input } => {
            let d = load_metric(input)?;
            let report = characterize_capped(&d, plucker_cap).map_err(err)?;
            Ok((format!("{report}\n"), report.electrical))
        }
        Command::Medial { input } => {
            let net = load_network(input)?;
            let trace = medial_trace(&net).map_err(err)?;
            let mut out = String::new();
            writeln!(out, "tau: {}", trace.permutation().map_err(err)?).unwrap();
            for (k, s) in trace.strands.iter().enumerate() {
                let edges: Vec<String> = s.crossings.iter().map(ToString::to_string).collect();
                match s.endpoints {
                    Some((a, b)) => write!(out, "strand {}: {a} -> {b}", k + 1).unwrap(),
                    None => write!(out, "strand {}: closed", k + 1).unwrap(),
                }
                writeln!(out, " edges [{}]", edges.join(" ")).unwrap();
            }
            let report = minimality(&trace);
            writeln!(out, "minimal: {}", report.minimal).unwrap();
            for d in &report.defects {
                writeln!(out, "defect: {d}").unwrap();
            }
            Ok((out, report.minimal))
        }
        Command::Tau { input } => {
            let d = load_metric(input)?;
            let tau = tau_from_resistance(&d).map_err(err)?;
            Ok((format!("{tau}\n"), true))
        }
        Command::Reconstruct { input } => {
            let d = load_metric(input)?;
            match reconstruct_topology_capped(&d, plucker_cap) {
                Ok(rec) => {
                    let mut out = String::new();
                    writeln!(out, "# g: {}", rec.pattern).unwrap();
                    writeln!(out, "# tau: {}", rec.tau).unwrap();
                    writeln!(out, "# round trip: true").unwrap();
                    writeln!(out, "# connected: {}", rec.connected).unwrap();
                    out.push_str(&serialize_network(&rec.network));
                    Ok((out, true))
                }
                Err(Error::NotElectrical(report)) => Ok((format!("{report}\n"), false)),
                Err(e) => Err(err(e)),
            }
        }
        Command::Generate {
            seed,
            kind,
            n,
            inner,
        } => {
            if *n < 2 {
                return Err(err(Error::TooSmall(*n)));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let text = match kind {
                Kind::Planar => serialize_network(&random_planar_network(
                    &mut rng,
                    &PlanarOptions {
                        n: *n,
                        inner: *inner,
                        sparsity: 0.5,
                    },
                )),
                Kind::Connected => {
                    let total = n + inner;
                    serialize_network(&random_connected_network(&mut rng, *n, total, total))
                }
                Kind::Kalmanson => {
                    serialize_matrix(random_circular_split_metric(&mut rng, *n).matrix())
                }
            };
            Ok((text, true))
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run_command(&cli) {
        Ok((text, positive)) => {
            let code = if positive { 0 } else { 1 };
            match &cli.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                },
            }
        }
        Err(message) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}
