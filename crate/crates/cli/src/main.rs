mod config;
mod error;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coxeter_growth::matrix::{ContractibleEdgeSpec, CoxLabel, CoxeterMatrix};

use crate::config::{FileConfig, Params, MAX_PARAM};
use crate::error::CliError;

pub const VERSION_LINE: &str = concat!("coxgrowth ", env!("CARGO_PKG_VERSION"));

/// Growth series, growth rates and ball experiments for Coxeter systems.
#[derive(Debug, Parser)]
#[command(name = "coxgrowth", version)]
struct Cli {
    /// TOML file with parameter overrides (l_list, rho, r_max, m_max, tol).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

/// Exactly one way of naming a matrix.
#[derive(Debug, Args)]
struct MatrixSource {
    /// Matrix file, line format (`rank n` / `m i j = label`) or JSON.
    path: Option<PathBuf>,
    /// Polygon group from its angle labels, e.g. `2,3,7` or `2,3,inf`.
    #[arg(long)]
    polygon: Option<String>,
    /// Rank-2 system with the given label.
    #[arg(long)]
    rank2: Option<String>,
}

impl MatrixSource {
    fn given(&self) -> usize {
        [
            self.path.is_some(),
            self.polygon.is_some(),
            self.rank2.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }

    fn load(&self) -> Result<CoxeterMatrix, CliError> {
        if self.given() != 1 {
            return Err(CliError::Usage(
                "give exactly one of PATH, --polygon, --rank2".into(),
            ));
        }
        if let Some(p) = &self.path {
            return read_matrix(p);
        }
        if let Some(angles) = &self.polygon {
            return Ok(CoxeterMatrix::polygon(&parse_labels(angles)?)?);
        }
        let label: CoxLabel = self.rank2.as_deref().unwrap_or_default().trim().parse()?;
        Ok(CoxeterMatrix::dihedral(label)?)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Growth type and Gram spectrum.
    Classify {
        #[command(flatten)]
        matrix: MatrixSource,
    },
    /// Growth series, coefficients and optionally the growth rate.
    Growth {
        #[command(flatten)]
        matrix: MatrixSource,
        /// Number of coefficients past the constant term.
        #[arg(long)]
        terms: Option<usize>,
        /// Also isolate the growth rate.
        #[arg(long)]
        rate: bool,
    },
    /// Parameter sweeps over families.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Brute-force Cayley-graph computations.
    Oracle(OracleArgs),
    /// Salem / Pisot classification of growth rates.
    Salem(SalemArgs),
    /// The finite-type catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum SweepKind {
    /// Growth rates along the deformation replacing infinite labels by l.
    Rate {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, value_delimiter = ',')]
        l_list: Option<Vec<u32>>,
    },
    /// Sampled deviation of 1/f along the deformation, with rates.
    Normal {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, value_delimiter = ',')]
        l_list: Option<Vec<u32>>,
        #[arg(long)]
        rho: Option<f64>,
    },
    /// Polygon groups from a template such as `2,3,l`.
    Polygon {
        #[arg(long)]
        template: String,
        #[arg(long, value_delimiter = ',', default_value = "7,10,20,50,100")]
        params: Vec<u32>,
    },
    /// A contractible-edge family and its limit.
    Edge {
        #[command(flatten)]
        matrix: MatrixSource,
        #[command(flatten)]
        edge: EdgeArgs,
    },
}

#[derive(Debug, Args)]
struct EdgeArgs {
    /// The two generators meeting along the edge, 1-based.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pair: Vec<usize>,
    /// Edge type `k1,k2,n,l1,l2`; the incident labels must all be 2.
    #[arg(long, default_value = "2,2,2,2,2")]
    edge_type: String,
    #[arg(long, value_delimiter = ',', default_value = "7,10,20,50,100")]
    params: Vec<u32>,
}

impl EdgeArgs {
    fn spec(&self, rank: usize) -> Result<ContractibleEdgeSpec, CliError> {
        let &[i, j] = self.pair.as_slice() else {
            return Err(CliError::Usage("--pair takes two generators".into()));
        };
        if i == j || i == 0 || j == 0 || i > rank || j > rank {
            return Err(CliError::Usage(format!(
                "--pair {i},{j} invalid for rank {rank}"
            )));
        }
        let labels: [CoxLabel; 5] = parse_labels(&self.edge_type)?
            .try_into()
            .map_err(|_| CliError::Usage("--edge-type takes five labels".into()))?;
        let spec = ContractibleEdgeSpec {
            pair: (i.min(j) - 1, i.max(j) - 1),
            labels,
        };
        spec.check()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    matrix: MatrixSource,
    /// Ball of radius R: sizes per layer, or the graph with --format dot.
    #[arg(long, value_name = "R")]
    ball: Option<usize>,
    /// Shorthand for --format dot.
    #[arg(long, requires = "ball")]
    dot: bool,
    /// Element counts by length up to M.
    #[arg(long, value_name = "M")]
    coeffs: Option<usize>,
    /// Radius up to which --compare inspects balls (default: r_max).
    #[arg(long, value_name = "R", requires = "compare")]
    distance: Option<usize>,
    /// Bound the marked-group distance to the system in PATH.
    #[arg(long, value_name = "PATH")]
    compare: Option<PathBuf>,
    /// Normal form of a word such as `1,2,1`.
    #[arg(long, value_name = "WORD")]
    reduce: Option<String>,
}

#[derive(Debug, Args)]
struct SalemArgs {
    #[command(flatten)]
    matrix: MatrixSource,
    #[arg(long)]
    tol: Option<f64>,
    /// Polygon family template such as `2,3,l`, classified member by member.
    #[arg(long)]
    template: Option<String>,
    /// Edge family generators; with a matrix, classifies the edge family.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pair: Option<Vec<usize>>,
    #[arg(long, default_value = "2,2,2,2,2")]
    edge_type: String,
    #[arg(long, value_delimiter = ',', default_value = "7,10,20,50,100")]
    params: Vec<u32>,
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// All irreducible finite types as JSON.
    Dump {
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        #[arg(long, default_value_t = 12)]
        max_dihedral: u32,
    },
}

fn parse_labels(s: &str) -> Result<Vec<CoxLabel>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<CoxLabel>().map_err(CliError::from))
        .collect()
}

fn read_matrix(path: &Path) -> Result<CoxeterMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(CoxeterMatrix::parse(&text)?)
}

fn check_params(params: &[u32]) -> Result<(), CliError> {
    if params.is_empty() {
        return Err(CliError::Usage("empty parameter list".into()));
    }
    match params.iter().find(|&&p| p > MAX_PARAM) {
        Some(p) => Err(CliError::Cap(format!("parameter {p}"))),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let mut params = Params::merge(&file);
    let format = cli.format;
    match cli.command {
        Command::Classify { matrix } => report::classify(&matrix.load()?, format),
        Command::Growth {
            matrix,
            terms,
            rate,
        } => {
            if let Some(t) = terms {
                params.m_max = t;
            }
            params.check_terms(false)?;
            report::growth(&matrix.load()?, params.m_max, rate, format)
        }
        Command::Sweep { kind } => match kind {
            SweepKind::Rate { matrix, l_list } => {
                if let Some(l) = l_list {
                    params.l_list = l;
                }
                params.check_l_list()?;
                report::sweep_rate(&matrix.load()?, &params.l_list, format)
            }
            SweepKind::Normal {
                matrix,
                l_list,
                rho,
            } => {
                if let Some(l) = l_list {
                    params.l_list = l;
                }
                if let Some(r) = rho {
                    params.rho = r;
                }
                params.check_l_list()?;
                report::sweep_normal(&matrix.load()?, params.rho, &params.l_list, format)
            }
            SweepKind::Polygon {
                template,
                params: p,
            } => {
                check_params(&p)?;
                report::sweep_polygon(&template, &p, format)
            }
            SweepKind::Edge { matrix, edge } => {
                check_params(&edge.params)?;
                let m = matrix.load()?;
                let spec = edge.spec(m.rank())?;
                report::sweep_edge(&m, &spec, &edge.params, format)
            }
        },
        Command::Oracle(args) => oracle(args, params, format),
        Command::Salem(args) => salem(args, params, format),
        Command::Catalog {
            action:
                CatalogAction::Dump {
                    max_rank,
                    max_dihedral,
                },
        } => {
            if max_rank > 64 || max_dihedral > MAX_PARAM {
                return Err(CliError::Cap("catalog bound".into()));
            }
            report::catalog_dump(max_rank, max_dihedral, format)
        }
    }
}

fn oracle(
    args: OracleArgs,
    mut params: Params,
    format: Option<Format>,
) -> Result<String, CliError> {
    let chosen = [
        args.ball.is_some(),
        args.coeffs.is_some(),
        args.compare.is_some(),
        args.reduce.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if chosen != 1 {
        return Err(CliError::Usage(
            "give exactly one of --ball, --coeffs, --compare, --reduce".into(),
        ));
    }
    let m = args.matrix.load()?;
    if let Some(r) = args.ball {
        params.r_max = r;
        params.check_radius()?;
        let format = if args.dot { Some(Format::Dot) } else { format };
        return report::oracle_ball(&m, r, format);
    }
    if let Some(c) = args.coeffs {
        params.m_max = c;
        params.check_terms(true)?;
        return report::oracle_coeffs(&m, c, format);
    }
    if let Some(path) = &args.compare {
        if let Some(r) = args.distance {
            params.r_max = r;
        }
        params.check_radius()?;
        return report::oracle_distance(&m, &read_matrix(path)?, params.r_max, format);
    }
    report::oracle_reduce(&m, args.reduce.as_deref().unwrap_or_default(), format)
}

fn salem(args: SalemArgs, mut params: Params, format: Option<Format>) -> Result<String, CliError> {
    if let Some(t) = args.tol {
        params.tol = t;
    }
    if let Some(template) = &args.template {
        if args.matrix.given() != 0 || args.pair.is_some() {
            return Err(CliError::Usage(
                "--template takes no matrix or --pair".into(),
            ));
        }
        check_params(&args.params)?;
        return report::salem_polygon_family(template, &args.params, params.tol, format);
    }
    let m = args.matrix.load()?;
    match &args.pair {
        Some(pair) => {
            check_params(&args.params)?;
            let edge = EdgeArgs {
                pair: pair.clone(),
                edge_type: args.edge_type.clone(),
                params: args.params.clone(),
            };
            let spec = edge.spec(m.rank())?;
            report::salem_edge_family(&m, &spec, &args.params, params.tol, format)
        }
        None => report::salem_single(&m, params.tol, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let result = run(cli).and_then(|text| match &output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind().exit_code())
        }
    }
}
