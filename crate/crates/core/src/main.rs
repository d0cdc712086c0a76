//! `spantree` command-line front end.
//!
//! Exit codes: 0 success, 1 an identity failed (or was not applicable under
//! `--strict`), 2 input or usage error, 3 oracle limit exceeded.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spantree::complexity::{self, ComplexityError, ComplexityKind};
use spantree::format::{parse_digraph, serialize_digraph};
use spantree::identities::{self, Identity, IdentityError, IdentityReport};
use spantree::linalg::char_poly;
use spantree::oracle::{self, OracleError};
use spantree::random::{self, DigraphDistribution};
use spantree::transform::{line_digraph, middle_digraph};
use spantree::WeightedDigraph;

/// Environment variable overriding the default oracle candidate limit.
const LIMIT_ENV: &str = "SPANTREE_ORACLE_LIMIT";

#[derive(Parser)]
#[command(
    name = "spantree",
    version,
    about = "Exact spanning-tree complexities of weighted digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the middle or line digraph of FILE.
    Transform {
        file: String,
        #[arg(long, value_enum)]
        op: TransformOp,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Accept vertex names containing '>' (e.g. the output of an earlier
        /// transform); label collisions are still rejected.
        #[arg(long)]
        allow_reserved: bool,
    },
    /// Print the edge- or vertex-weighted complexity, total or rooted.
    Count {
        file: String,
        #[arg(long, value_enum, default_value = "edge")]
        kind: Kind,
        #[arg(long)]
        root: Option<String>,
        /// Treat every vertex and arc weight as 1.
        #[arg(long)]
        unweighted: bool,
    },
    /// Print the characteristic polynomial of a Laplacian, ascending coefficients.
    Charpoly {
        file: String,
        #[arg(long, value_enum, default_value = "edge")]
        matrix: Kind,
    },
    /// Check identities on FILE and print one report per check.
    Verify {
        file: String,
        #[arg(long, default_value = "all")]
        identity: String,
        /// Fixed arc for eq6/levine2; every arc is tried when absent.
        #[arg(long, num_args = 2, value_names = ["TAIL", "HEAD"])]
        arc: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        /// Count NOT-APPLICABLE reports as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// List every spanning tree rooted at ROOT.
    Enumerate {
        file: String,
        #[arg(long)]
        root: String,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Run every identity on seeded random digraphs.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Middle,
    Line,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Edge,
    Vertex,
}

impl From<Kind> for ComplexityKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Edge => ComplexityKind::EdgeWeighted,
            Kind::Vertex => ComplexityKind::VertexWeighted,
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = if matches!(e, OracleError::TooLarge { .. }) {
            3
        } else {
            2
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ComplexityError> for Failure {
    fn from(e: ComplexityError) -> Self {
        Self::input(e)
    }
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::Oracle(o) => o.into(),
            other => Self::input(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::input(e)
    }
}

fn read_input(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::input(format!("{file}: {e}")))
    }
}

fn load(file: &str) -> Result<WeightedDigraph, Failure> {
    let text = read_input(file)?;
    parse_digraph(&text).map_err(|e| Failure::input(format!("{file}: {e}")))
}

fn oracle_limit(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var(LIMIT_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("{LIMIT_ENV}={s:?} is not a nonnegative integer"))),
        Err(_) => Ok(oracle::DEFAULT_LIMIT),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Transform {
            file,
            op,
            out: dest,
            allow_reserved,
        } => {
            let d = load(&file)?;
            let reserved = d.vertices().iter().find(|v| v.label.contains('>'));
            if let (Some(v), false) = (reserved, allow_reserved) {
                return Err(Failure::input(format!(
                    "vertex name {:?} contains '>', which is reserved for arc-vertices",
                    v.label
                )));
            }
            let t = match op {
                TransformOp::Middle => middle_digraph(&d),
                TransformOp::Line => line_digraph(&d),
            }
            .map_err(Failure::input)?;
            let text = serialize_digraph(&t);
            match dest {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Count {
            file,
            kind,
            root,
            unweighted,
        } => {
            let mut d = load(&file)?;
            if unweighted {
                d = d.with_unit_weights();
            }
            let value = match root {
                Some(r) => complexity::kappa_rooted(&d, kind.into(), &r)?,
                None => complexity::kappa_total(&d, kind.into())?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Charpoly { file, matrix } => {
            let d = load(&file)?;
            let lap = ComplexityKind::from(matrix).laplacian(&d);
            let p = char_poly(&lap).map_err(Failure::input)?;
            writeln!(out, "{p}")?;
        }
        Command::Verify {
            file,
            identity,
            arc,
            json,
            strict,
            limit,
        } => {
            let limit = oracle_limit(limit)?;
            let d = load(&file)?;
            let e = match &arc {
                Some(ends) => Some(identities::resolve_arc(&d, &ends[0], &ends[1])?),
                None => None,
            };
            let reports = if identity == "all" {
                identities::check_all(&d, e, limit)?
            } else {
                let id = Identity::from_name(&identity)
                    .ok_or_else(|| Failure::input(format!("unknown identity {identity:?}")))?;
                identities::check(id, &d, e, limit)?
            };
            print_reports(out, &reports, json)?;
            return Ok(verdict(&reports, strict));
        }
        Command::Enumerate { file, root, limit } => {
            let limit = oracle_limit(limit)?;
            let d = load(&file)?;
            let trees = oracle::enumerate_spanning_trees(&d, &root, limit)?;
            let mut text = String::new();
            for t in &trees {
                text.push_str(&t.render(&d));
                text.push('\n');
            }
            text.push_str(&format!("count: {}\n", trees.len()));
            out.write_all(text.as_bytes())?;
        }
        Command::Fuzz {
            seed,
            count,
            strict,
            limit,
        } => {
            let limit = oracle_limit(limit)?;
            let corpus = random::corpus(seed, count, DigraphDistribution::default());
            let mut checked = 0usize;
            let mut failed = 0usize;
            let mut not_applicable = 0usize;
            for (i, d) in corpus.iter().enumerate() {
                let reports = identities::check_all(d, None, limit)?;
                for r in &reports {
                    checked += 1;
                    if !r.applicable {
                        not_applicable += 1;
                    }
                    if verdict(std::slice::from_ref(r), strict) != 0 {
                        failed += 1;
                        writeln!(
                            out,
                            "digraph #{i} ({}):\n{}",
                            d.summary(),
                            serialize_digraph(d).trim_end()
                        )?;
                        write!(out, "{r}")?;
                    }
                }
            }
            writeln!(
                out,
                "fuzz seed={seed}: {count} digraphs, {checked} reports, {not_applicable} not applicable, {failed} failed"
            )?;
            return Ok(u8::from(failed > 0));
        }
    }
    Ok(0)
}

fn verdict(reports: &[IdentityReport], strict: bool) -> u8 {
    let bad = reports
        .iter()
        .any(|r| (r.applicable && !r.holds) || (strict && !r.applicable));
    u8::from(bad)
}

fn print_reports(out: &mut impl Write, reports: &[IdentityReport], json: bool) -> io::Result<()> {
    if json {
        let arr: Vec<_> = reports.iter().map(IdentityReport::to_json).collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&arr).expect("serializable")
        )
    } else {
        for r in reports {
            write!(out, "{r}")?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
