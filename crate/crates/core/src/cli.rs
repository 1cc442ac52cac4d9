//! Command-line front end.
//!
//! Verdict commands print `yes` or `no` (or a TE verdict word) on the first
//! line. Commands producing a matroid print it as a `matroid v1` document.
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::element::{ElementLabel, ElementSet, GroundSet};
use crate::exchange::{te1_via_lemma, te_check, white_report, Limits, TeClass, TeVerdict};
use crate::families::{
    graphic_matroid, is_binary, partition_matroid, transversal_matroid, uniform, MultiGraph, SetSystem,
};
use crate::format::{parse, serialize, serialize_family, Document};
use crate::functors::{contract, expand, is_contracted, ExpansionVector};
use crate::iso::families_isomorphic;
use crate::matroid::{add_coloop, direct_sum, Family, Matroid};

#[derive(Debug, Parser)]
#[command(
    name = "matroids",
    version,
    about = "Explicit matroids, expansion, contraction and exchange checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the basis list satisfies the exchange axiom.
    Check { file: PathBuf },
    /// List the circuits.
    Circuits { file: PathBuf },
    /// Print the rank, or the rank of a subset with `--of`.
    Rank {
        file: PathBuf,
        /// Elements, comma or space separated.
        #[arg(long)]
        of: Option<String>,
    },
    /// Restrict to a subset of the ground set.
    Restrict {
        file: PathBuf,
        /// Elements to keep, comma or space separated.
        #[arg(long)]
        keep: String,
    },
    /// Expand by a multiplicity vector.
    Expand {
        file: PathBuf,
        /// An `alpha v1` file or comma separated multiplicities.
        #[arg(long)]
        alpha: String,
    },
    /// Merge elements whose bases leave identical traces.
    Contract { file: PathBuf },
    /// Decide whether contraction leaves the matroid unchanged.
    Iscontracted { file: PathBuf },
    /// Decide whether the matroid is binary.
    Binary { file: PathBuf },
    /// Search for an isomorphism between two basis families.
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Build a matroid from a standard construction.
    #[command(subcommand)]
    Construct(Construct),
    /// Bounded check of exchange connectivity for sequences of length `m`.
    Te {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        class: u8,
        #[arg(long = "m")]
        m: usize,
        #[arg(long, default_value_t = Limits::default().max_nodes)]
        budget: u64,
        /// Decide class 1 through the class 2 check plus a length-2 reordering test.
        #[arg(long)]
        lemma: bool,
    },
    /// Contract, then run every class at every length up to `--mmax`.
    White {
        file: PathBuf,
        #[arg(long)]
        mmax: usize,
        #[arg(long, default_value_t = Limits::default().max_nodes)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Direct sum of two matroids on disjoint ground sets.
    Sum { a: PathBuf, b: PathBuf },
    /// Add a new element lying in every basis.
    Coloop { file: PathBuf, element: String },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// All `t`-subsets of `x1..xn`.
    Uniform { t: usize, n: usize },
    /// Bases meet each block at most once and have size `t`.
    Partition { system: PathBuf, t: usize },
    /// Spanning trees of a connected multigraph.
    Graphic { graph: PathBuf },
    /// Maximum partial transversals of a set system.
    Transversal { system: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Kv,
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_family(path: &Path) -> std::result::Result<Family, Failure> {
    match read(path)? {
        Document::Matroid(f) => Ok(f),
        d => Err(Failure(format!(
            "{}: expected a matroid document, found {}",
            path.display(),
            d.kind()
        ))),
    }
}

fn read_matroid(path: &Path) -> std::result::Result<Matroid, Failure> {
    read_family(path)?
        .into_matroid()
        .map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_system(path: &Path) -> std::result::Result<SetSystem, Failure> {
    match read(path)? {
        Document::System(s) => Ok(s),
        d => Err(Failure(format!(
            "{}: expected a system document, found {}",
            path.display(),
            d.kind()
        ))),
    }
}

fn read_graph(path: &Path) -> std::result::Result<MultiGraph, Failure> {
    match read(path)? {
        Document::Graph(g) => Ok(g),
        d => Err(Failure(format!(
            "{}: expected a graph document, found {}",
            path.display(),
            d.kind()
        ))),
    }
}

fn element_list(ground: &GroundSet, text: &str) -> std::result::Result<ElementSet, Failure> {
    let labels = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<ElementLabel>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(ground.subset(&labels)?)
}

fn alpha_arg(text: &str) -> std::result::Result<ExpansionVector, Failure> {
    let path = Path::new(text);
    if path.exists() {
        return match read(path)? {
            Document::Alpha(a) => Ok(a),
            d => Err(Failure(format!(
                "{text}: expected an alpha document, found {}",
                d.kind()
            ))),
        };
    }
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Failure(format!("bad multiplicity `{t}`")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(ExpansionVector::new(values)?)
}

fn verdict(yes: bool) -> (String, i32) {
    if yes {
        ("yes\n".into(), 0)
    } else {
        ("no\n".into(), 1)
    }
}

fn matroid_doc(m: &Matroid) -> (String, i32) {
    (serialize_family(m.family()), 0)
}

fn sequence_text(ground: &GroundSet, seq: &[ElementSet]) -> String {
    seq.iter().map(|&b| ground.format_set(b)).collect::<Vec<_>>().join(",")
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Check { file } => {
            let family = read_family(&file)?;
            if !family.is_matroid()? {
                return Ok(verdict(false));
            }
            let m = family.into_matroid()?;
            Ok((format!("yes\nrank {}\nbases {}\n", m.rank(), m.bases().len()), 0))
        }
        Command::Circuits { file } => {
            let m = read_matroid(&file)?;
            let mut text = String::new();
            for &c in m.circuits() {
                text += &format!("circuit {}\n", m.ground().format_set(c));
            }
            Ok((text, 0))
        }
        Command::Rank { file, of } => {
            let m = read_matroid(&file)?;
            let r = match of {
                Some(list) => m.rank_of(element_list(m.ground(), &list)?),
                None => m.rank(),
            };
            Ok((format!("{r}\n"), 0))
        }
        Command::Restrict { file, keep } => {
            let m = read_matroid(&file)?;
            let keep = element_list(m.ground(), &keep)?;
            Ok(matroid_doc(&m.restriction(keep)?))
        }
        Command::Expand { file, alpha } => {
            let m = read_matroid(&file)?;
            Ok(matroid_doc(&expand(&m, &alpha_arg(&alpha)?)?))
        }
        Command::Contract { file } => {
            let m = read_matroid(&file)?;
            let c = contract(m.family())?;
            Ok((serialize(&Document::Matroid(c.contracted)), 0))
        }
        Command::Iscontracted { file } => {
            let m = read_matroid(&file)?;
            Ok(verdict(is_contracted(m.family())?))
        }
        Command::Binary { file } => Ok(verdict(is_binary(&read_matroid(&file)?))),
        Command::Isomorphic { a, b } => {
            let (fa, fb) = (read_family(&a)?, read_family(&b)?);
            match families_isomorphic(&fa, &fb) {
                Some(map) => {
                    let mut text = String::from("yes\n");
                    for (x, y) in map.label_pairs(&fa, &fb) {
                        text += &format!("{x} -> {y}\n");
                    }
                    Ok((text, 0))
                }
                None => Ok(verdict(false)),
            }
        }
        Command::Construct(c) => {
            let m = match c {
                Construct::Uniform { t, n } => uniform(t, n)?,
                Construct::Partition { system, t } => partition_matroid(&read_system(&system)?, t)?,
                Construct::Graphic { graph } => graphic_matroid(&read_graph(&graph)?)?,
                Construct::Transversal { system } => transversal_matroid(&read_system(&system)?)?,
            };
            Ok(matroid_doc(&m))
        }
        Command::Te {
            file,
            class,
            m: len,
            budget,
            lemma,
        } => {
            let m = read_matroid(&file)?;
            let class = TeClass::from_number(class).expect("range checked by the parser");
            let limits = Limits { max_nodes: budget };
            let outcome = if lemma {
                if class != TeClass::One {
                    return Err(Failure("--lemma applies to class 1 only".into()));
                }
                te1_via_lemma(&m, len, limits)?
            } else {
                te_check(&m, class, len, limits)?
            };
            let mut text = format!(
                "{}\nexplored {}\nnontrivial_classes {}\n",
                outcome.verdict, outcome.explored, outcome.nontrivial_classes
            );
            if let TeVerdict::FailsAtM { witness: (a, b) } = &outcome.verdict {
                text += &format!(
                    "witness {};{}\n",
                    sequence_text(m.ground(), a),
                    sequence_text(m.ground(), b)
                );
            }
            Ok((text, if outcome.verdict.holds() { 0 } else { 1 }))
        }
        Command::White {
            file,
            mmax,
            budget,
            format,
        } => {
            if mmax < 2 {
                return Err(Failure("--mmax must be at least 2".into()));
            }
            let m = read_matroid(&file)?;
            let report = white_report(&m, mmax, Limits { max_nodes: budget });
            let (head, code) = if report.all_hold() {
                ("yes", 0)
            } else if report.any_fails() {
                ("no", 1)
            } else {
                ("budget_exceeded", 1)
            };
            let body = match format {
                ReportFormat::Table => report.to_table(),
                ReportFormat::Kv => report.to_kv(),
            };
            Ok((format!("{head}\n{body}"), code))
        }
        Command::Sum { a, b } => Ok(matroid_doc(&direct_sum(&read_matroid(&a)?, &read_matroid(&b)?)?)),
        Command::Coloop { file, element } => {
            let m = read_matroid(&file)?;
            Ok(matroid_doc(&add_coloop(&m, element.parse()?)?))
        }
    }
}
