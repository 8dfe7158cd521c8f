//! Batch command-line interface: parse group and graph descriptions, run
//! verifications, searches, constructions, and counts, and emit
//! machine-readable reports.
//!
//! Exit codes: 0 success, 1 a verification found a violation, 2 usage
//! error, 3 a work budget or cap was exhausted.

use crate::construct::{self, hash_family, permanent};
use crate::digraph::{self, counting, glm as glm_mod, patterns, random as drandom, undirected};
use crate::error::Error;
use crate::group::{
    build_group, catalog, point_stabilizer_subset, ElementSet, FiniteGroup, GroupSpec,
};
use crate::report::{
    CountJson, Envelope, GroupInfoJson, PairSetJson, SearchResultJson, VerifyReportJson,
};
use crate::sidon::{self, bounds, search, SkPrimeIndexing, VerifyCaps};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "sidonium",
    version,
    about = "Exact Sidon-set and digraph computations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropArg {
    Sk,
    SkPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexingArg {
    Cyclic,
    Linear,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a group and report its basic data.
    Group {
        /// Group description, e.g. S:4, A:5, Z:12, prod(S:3,S:3),
        /// table:file, os:5,2.
        #[arg(long)]
        spec: Option<String>,
        /// Write the multiplication table to this path.
        #[arg(long)]
        emit_table: Option<PathBuf>,
        /// Write every catalog group of order up to --max-order as table
        /// files into this directory.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value = "16")]
        max_order: usize,
        /// Report the order of this element.
        #[arg(long)]
        order_of: Option<String>,
        /// Report the conjugacy class of this element.
        #[arg(long)]
        class_of: Option<String>,
        /// List the point stabilizer of 1..n in S:n / A:n.
        #[arg(long)]
        stabilizer_of: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Check a Sidon-type property of an explicit set.
    Verify {
        #[arg(long)]
        group: String,
        /// Set literal: comma-separated elements (cycle notation for
        /// permutation groups, integers otherwise).
        #[arg(long)]
        set: Option<String>,
        /// File with one element per line.
        #[arg(long)]
        set_file: Option<PathBuf>,
        #[arg(long, value_enum)]
        prop: PropArg,
        #[arg(long)]
        k: u32,
        /// Index convention for the alternating property.
        #[arg(long, value_enum, default_value = "cyclic")]
        indexing: IndexingArg,
        /// Cap on enumerated words (default also via SIDONIUM_MAX_WORDS).
        #[arg(long)]
        max_words: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive maximum-set search.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        prop: PropArg,
        #[arg(long)]
        k: u32,
        /// Multiplicity bound for the distinct-products search.
        #[arg(long, default_value = "1")]
        g: u64,
        /// Node budget (default also via SIDONIUM_MAX_NODES).
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Stop as soon as a set of this size is found.
        #[arg(long)]
        target: Option<usize>,
        /// Search only among non-identity elements.
        #[arg(long)]
        exclude_identity: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run a construction.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Build or analyze a digraph.
    Digraph {
        #[command(flatten)]
        source: DigraphSource,
        /// Report the degree profile.
        #[arg(long)]
        degrees: bool,
        /// Check freeness from equal-endpoint walk pairs of this length.
        #[arg(long)]
        fk_free: Option<u32>,
        /// Search for two internally disjoint equal-endpoint paths of this
        /// length.
        #[arg(long)]
        find_cll: Option<usize>,
        /// Report the girth (bipartite Cayley graphs only).
        #[arg(long)]
        girth: bool,
        /// Keep only arcs advancing through 2h random classes.
        #[arg(long)]
        layered: Option<u32>,
        /// Random induced subgraph of this many vertices.
        #[arg(long)]
        induced: Option<usize>,
        /// Degree-loss tolerance for --layered / --induced, e.g. 1/2.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "1000")]
        max_tries: u64,
        /// Write the resulting digraph here.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Write the vertex label map here.
        #[arg(long)]
        emit_labels: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Exact counts.
    #[command(subcommand)]
    Count(CountCmd),
    /// Tabulate searches and bounds over a corpus of groups.
    Table {
        /// Directory of group files: *.table (multiplication tables) and
        /// *.spec (one group description per file).
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// Stabilizer or full-group pair construction in S:n x S:n / A:n x A:n.
    SnCross {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        full: bool,
        #[arg(long)]
        alternating: bool,
        /// Verify the claimed multiplicity exactly.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Pairs (α, απ) over an explicit base set.
    Conjugacy {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        set_file: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Pairs built from the conjugacy class of an element.
    Class {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Lift a group subset to the permutations it induces.
    PermanentLift {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        set_file: Option<PathBuf>,
        /// Check the lifted set at this word length.
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Keep the Hamilton cycles respected by a random orientation.
    HamiltonLift {
        /// Edge-list file (1-indexed `u v` lines).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Built-in graph: dodecahedron, petersen, or cycle:<n>.
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Deletion-method probabilistic construction.
    Probabilistic {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Base set literal (first kind).
        #[arg(long)]
        base: Option<String>,
        /// Use the thinned cycle family in A:n as the base (first kind).
        #[arg(long)]
        base_anticommuting: Option<usize>,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "256")]
        attempts: u64,
        #[command(flatten)]
        out: Output,
    },
    /// The thinned full-cycle family in A:n.
    AnticommutingBase {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Cyclic-shift set family with exact cover regularity.
    HashFamily {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        v: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    First,
    Second,
}

#[derive(Debug, Subcommand)]
enum CountCmd {
    /// Directed Hamilton cycles.
    Hamilton {
        /// Layered digraph parameters `l,m`.
        #[arg(long)]
        glm: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "20")]
        cap: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Eulerian circuits with a fixed starting arc.
    Eulerian {
        /// Bidirected complete bipartite K_{m,m}.
        #[arg(long)]
        kmm: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Transition vectors for the layered digraph.
    Transitions {
        #[arg(long)]
        m: usize,
        /// Also enumerate them (m <= 3).
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form Hamilton-cycle count of the layered digraph.
    GlmFormula {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Exact permanent of a 0/1 matrix file (first line n, then rows).
    Permanent {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Doubly stochastic permanent lower bound `rowsum^n n!/n^n`.
    EfBound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rowsum: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Word-family counting bound `C(t,2) q^{(1-(v-2)/(t-1)) n}`.
    HashBound {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        v: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args)]
struct DigraphSource {
    /// Layered digraph parameters `l,m`.
    #[arg(long)]
    glm: Option<String>,
    /// Cayley digraph: requires --group and --set.
    #[arg(long)]
    cayley: bool,
    /// Bipartite Cayley graph (undirected): requires --group and --set.
    #[arg(long)]
    bipartite_cayley: bool,
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    set: Option<String>,
    /// Digraph file (line 1 `n`, then 1-indexed `u v` arcs).
    #[arg(long)]
    input: Option<PathBuf>,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let command_echo: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(cli.command, command_echo.join(" ")) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::WorkCap { .. }
                | Error::OrderCap { .. }
                | Error::EnumerationBudget { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn emit<T: Serialize>(
    out: &Output,
    command: &str,
    seed: Option<u64>,
    result: T,
    text: String,
    csv: Option<String>,
) -> crate::Result<()> {
    let body = match out.format {
        Format::Json => Envelope::new(command.to_string(), seed, result).to_json(),
        Format::Text => text,
        Format::Csv => csv.ok_or_else(|| Error::invalid("this command has no CSV form"))?,
    };
    match &out.output {
        Some(path) => std::fs::write(path, body + "\n").map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?,
        None => println!("{body}"),
    }
    Ok(())
}

fn group_of(spec_text: &str) -> crate::Result<FiniteGroup> {
    let cap = std::env::var("SIDONIUM_ORDER_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(crate::group::DEFAULT_ORDER_CAP);
    crate::group::build_group_with_cap(&GroupSpec::parse(spec_text)?, cap)
}

/// Splits a set literal on top-level commas and parses each element.
fn parse_set_literal(group: &FiniteGroup, text: &str) -> crate::Result<ElementSet> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse("unbalanced parentheses in set literal"))?
            }
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    let mut members = Vec::new();
    for p in parts {
        if p.trim().is_empty() {
            continue;
        }
        members.push(group.parse_element(p)?);
    }
    Ok(ElementSet::from_indices(members))
}

fn load_set(
    group: &FiniteGroup,
    literal: &Option<String>,
    file: &Option<PathBuf>,
) -> crate::Result<ElementSet> {
    match (literal, file) {
        (Some(text), None) => parse_set_literal(group, text),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let mut members = Vec::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                members.push(group.parse_element(line)?);
            }
            Ok(ElementSet::from_indices(members))
        }
        _ => Err(Error::invalid("provide exactly one of --set / --set-file")),
    }
}

fn caps_from(max_words: Option<u64>) -> VerifyCaps {
    let default = std::env::var("SIDONIUM_MAX_WORDS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(VerifyCaps::default().max_words);
    VerifyCaps {
        max_words: max_words.unwrap_or(default),
    }
}

fn budget_from(max_nodes: Option<u64>, target: Option<usize>) -> search::SearchBudget {
    let default = std::env::var("SIDONIUM_MAX_NODES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(search::SearchBudget::default().max_nodes);
    search::SearchBudget {
        max_nodes: max_nodes.unwrap_or(default),
        target,
    }
}

fn parse_two(text: &str, what: &str) -> crate::Result<(usize, usize)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::parse(format!("{what} takes 'a,b'")))?;
    Ok((
        a.trim().parse().map_err(|_| Error::parse("bad number"))?,
        b.trim().parse().map_err(|_| Error::parse("bad number"))?,
    ))
}

fn dispatch(cmd: Command, echo: String) -> crate::Result<i32> {
    match cmd {
        Command::Group {
            spec,
            emit_table,
            catalog: catalog_dir,
            max_order,
            order_of,
            class_of,
            stabilizer_of,
            out,
        } => {
            if let Some(dir) = catalog_dir {
                std::fs::create_dir_all(&dir).map_err(|source| Error::Io {
                    path: dir.clone(),
                    source,
                })?;
                let entries = catalog::small_group_catalog(max_order)?;
                let mut names = Vec::new();
                for (name, g) in &entries {
                    let table = g.to_table()?;
                    table.write(&dir.join(format!("{name}.table")))?;
                    names.push(name.clone());
                }
                let text = format!("wrote {} tables to {}", names.len(), dir.display());
                emit(&out, &echo, None, names, text, None)?;
                return Ok(0);
            }
            let spec_text = spec.ok_or_else(|| Error::invalid("provide --spec or --catalog"))?;
            let group = group_of(&spec_text)?;
            if let Some(path) = emit_table {
                group.to_table()?.write(&path)?;
            }
            #[derive(Serialize)]
            struct Extra {
                info: GroupInfoJson,
                element_order: Option<usize>,
                conjugacy_class: Option<Vec<String>>,
                stabilizer_size: Option<usize>,
            }
            let mut extra = Extra {
                info: GroupInfoJson {
                    spec: group.label().to_string(),
                    order: group.order(),
                    involutions: group.count_involutions(),
                    abelian: group.is_abelian(),
                },
                element_order: None,
                conjugacy_class: None,
                stabilizer_size: None,
            };
            if let Some(e) = order_of {
                extra.element_order = Some(group.element_order(group.parse_element(&e)?)?);
            }
            if let Some(e) = class_of {
                let class = group.conjugacy_class(group.parse_element(&e)?)?;
                extra.conjugacy_class = Some(class.render(&group));
            }
            if let Some(point) = stabilizer_of {
                let alternating =
                    matches!(GroupSpec::parse(&spec_text)?, GroupSpec::Alternating(_));
                let n = match GroupSpec::parse(&spec_text)? {
                    GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => n,
                    _ => return Err(Error::invalid("--stabilizer-of needs S:n or A:n")),
                };
                extra.stabilizer_size = Some(point_stabilizer_subset(n, alternating, point)?.len());
            }
            let text = format!(
                "{}: order {}, {} involutions, abelian: {}",
                extra.info.spec, extra.info.order, extra.info.involutions, extra.info.abelian
            );
            emit(&out, &echo, None, extra, text, None)?;
            Ok(0)
        }

        Command::Verify {
            group,
            set,
            set_file,
            prop,
            k,
            indexing,
            max_words,
            out,
        } => {
            let g = group_of(&group)?;
            let a = load_set(&g, &set, &set_file)?;
            let caps = caps_from(max_words);
            let idx = match indexing {
                IndexingArg::Cyclic => SkPrimeIndexing::Cyclic,
                IndexingArg::Linear => SkPrimeIndexing::Linear,
            };
            let report = match prop {
                PropArg::Sk => sidon::check_sk(&g, &a, k, &caps)?,
                PropArg::SkPrime => sidon::check_sk_prime_with(&g, &a, k, &caps, idx)?,
            };
            let holds = report.holds;
            let json = VerifyReportJson::new(&g, &a, &report, idx);
            let text = format!(
                "{} on {} elements in {}: holds={}, multiplicity={}",
                match prop {
                    PropArg::Sk => format!("S_{k}"),
                    PropArg::SkPrime => format!("S_{k}'"),
                },
                a.len(),
                g.label(),
                report.holds,
                report.multiplicity
            );
            emit(&out, &echo, None, json, text, None)?;
            Ok(if holds { 0 } else { 1 })
        }

        Command::Search {
            group,
            prop,
            k,
            g,
            max_nodes,
            target,
            exclude_identity,
            out,
        } => {
            let grp = group_of(&group)?;
            let budget = budget_from(max_nodes, target);
            let result = match prop {
                PropArg::Sk => {
                    if exclude_identity {
                        let candidates: Vec<usize> = grp.elements().filter(|&e| e != 0).collect();
                        search::max_sk_in(&grp, k, g, &candidates, &budget)?
                    } else {
                        search::max_sk(&grp, k, g, &budget)?
                    }
                }
                PropArg::SkPrime => search::max_sk_prime(&grp, k, &budget)?,
            };
            let json = SearchResultJson {
                group: grp.label().to_string(),
                property: match prop {
                    PropArg::Sk => sidon::SidonProperty::Sk,
                    PropArg::SkPrime => sidon::SidonProperty::SkPrime,
                },
                k,
                g,
                value: result.value,
                witness: result.witness.members().to_vec(),
                witness_rendered: result.witness.render(&grp),
                nodes: result.nodes,
                exact: result.exact,
            };
            let text = format!(
                "maximum size {} in {} ({} nodes, exact: {})",
                result.value,
                grp.label(),
                result.nodes,
                result.exact
            );
            let budget_exhausted = !result.exact && target.map_or(true, |t| result.value < t);
            emit(&out, &echo, None, json, text, None)?;
            Ok(if budget_exhausted { 3 } else { 0 })
        }

        Command::Construct(c) => dispatch_construct(c, echo),
        Command::Count(c) => dispatch_count(c, echo),
        Command::Digraph {
            source,
            degrees,
            fk_free,
            find_cll,
            girth,
            layered,
            induced,
            eps,
            seed,
            max_tries,
            emit: emit_path,
            emit_labels,
            out,
        } => dispatch_digraph(
            source,
            degrees,
            fk_free,
            find_cll,
            girth,
            layered,
            induced,
            eps,
            seed,
            max_tries,
            emit_path,
            emit_labels,
            out,
            echo,
        ),

        Command::Table {
            corpus,
            k,
            max_nodes,
            out,
        } => {
            let csv = table_csv(&corpus, k, budget_from(max_nodes, None))?;
            match out.format {
                Format::Csv | Format::Text => emit(&out, &echo, None, (), csv.clone(), Some(csv))?,
                Format::Json => {
                    let rows: Vec<&str> = csv.lines().collect();
                    emit(&out, &echo, None, rows, csv.clone(), Some(csv.clone()))?
                }
            }
            Ok(0)
        }
    }
}

fn dispatch_construct(cmd: ConstructCmd, echo: String) -> crate::Result<i32> {
    match cmd {
        ConstructCmd::SnCross {
            n,
            full,
            alternating,
            verify,
            out,
        } => {
            let ps = construct::sn_cross(n, full, alternating)?;
            let spec = if alternating {
                GroupSpec::Alternating(n)
            } else {
                GroupSpec::Symmetric(n)
            };
            let base = build_group(&spec)?;
            let verified = if verify {
                Some(ps.verified_multiplicity(&VerifyCaps::default())?)
            } else {
                None
            };
            let json = PairSetJson::new(&base, &ps, verified);
            let csv = pair_set_csv(&json);
            let text = format!(
                "{} pairs in {}, claimed multiplicity {}",
                ps.len(),
                ps.group.label(),
                ps.claimed_g
            );
            emit(&out, &echo, None, json, text, Some(csv))?;
            Ok(0)
        }
        ConstructCmd::Conjugacy {
            group,
            pi,
            set,
            set_file,
            verify,
            out,
        } => {
            let g = group_of(&group)?;
            let pi = g.parse_element(&pi)?;
            let a = load_set(&g, &set, &set_file)?;
            let ps = construct::conjugacy_recipe(&g, pi, &a)?;
            let verified = if verify {
                Some(ps.verified_multiplicity(&VerifyCaps::default())?)
            } else {
                None
            };
            let json = PairSetJson::new(&g, &ps, verified);
            let csv = pair_set_csv(&json);
            let text = format!("{} pairs, claimed multiplicity {}", ps.len(), ps.claimed_g);
            emit(&out, &echo, None, json, text, Some(csv))?;
            Ok(0)
        }
        ConstructCmd::Class {
            group,
            element,
            verify,
            out,
        } => {
            let g = group_of(&group)?;
            let a = g.parse_element(&element)?;
            let ps = construct::class_recipe(&g, a)?;
            let verified = if verify {
                Some(ps.verified_multiplicity(&VerifyCaps::default())?)
            } else {
                None
            };
            let json = PairSetJson::new(&g, &ps, verified);
            let csv = pair_set_csv(&json);
            let text = format!(
                "class of size {}, claimed multiplicity {}",
                ps.len(),
                ps.claimed_g
            );
            emit(&out, &echo, None, json, text, Some(csv))?;
            Ok(0)
        }
        ConstructCmd::PermanentLift {
            group,
            set,
            set_file,
            k,
            out,
        } => {
            let g = group_of(&group)?;
            let a = load_set(&g, &set, &set_file)?;
            let m = permanent::cayley_matrix(&g, &a)?;
            let per = permanent::ryser_permanent(&m)?;
            let lifted = permanent::permanent_lift(&g, &a)?;
            let verified = match k {
                Some(k) => Some(sidon::check_sk_perms(&lifted, k, &VerifyCaps::default())?.holds),
                None => None,
            };
            #[derive(Serialize)]
            struct Lift {
                group: String,
                set: Vec<usize>,
                permanent: String,
                lifted: Vec<String>,
                verified_sk: Option<bool>,
            }
            if BigUint::from(lifted.len() as u64) != per {
                return Err(Error::invalid("lift size disagrees with the permanent"));
            }
            let json = Lift {
                group: g.label().to_string(),
                set: a.members().to_vec(),
                permanent: per.to_string(),
                lifted: lifted.iter().map(|p| p.to_string()).collect(),
                verified_sk: verified,
            };
            let text = format!("lifted {} permutations (permanent {})", lifted.len(), per);
            emit(&out, &echo, None, json, text, None)?;
            Ok(0)
        }
        ConstructCmd::HamiltonLift {
            graph,
            builtin,
            k,
            seed,
            out,
        } => {
            let g = match (&graph, &builtin) {
                (Some(path), None) => undirected::Graph::read(path)?,
                (None, Some(name)) => builtin_graph(name)?,
                _ => return Err(Error::invalid("provide exactly one of --graph / --builtin")),
            };
            let lift = construct::hamilton::hamilton_lift(&g, k, seed)?;
            let holds = sidon::check_sk_perms(&lift.permutations, k, &VerifyCaps::default())?.holds;
            #[derive(Serialize)]
            struct LiftJson {
                vertices: usize,
                hamilton_cycles: usize,
                respected: usize,
                expected_respected: String,
                permutations: Vec<String>,
                verified_sk: bool,
                seed: u64,
            }
            let json = LiftJson {
                vertices: g.n(),
                hamilton_cycles: lift.cycles_in_graph,
                respected: lift.permutations.len(),
                expected_respected: lift.expected_respected().to_string(),
                permutations: lift.permutations.iter().map(|p| p.to_string()).collect(),
                verified_sk: holds,
                seed,
            };
            let text = format!(
                "{} of {} Hamilton cycles respected, verified: {}",
                lift.permutations.len(),
                lift.cycles_in_graph,
                holds
            );
            emit(&out, &echo, Some(seed), json, text, None)?;
            Ok(0)
        }
        ConstructCmd::Probabilistic {
            group,
            kind,
            base,
            base_anticommuting,
            seed,
            attempts,
            out,
        } => {
            let kind = match kind {
                KindArg::First => construct::probabilistic::SidonKind::First,
                KindArg::Second => construct::probabilistic::SidonKind::Second,
            };
            let (g, base_set) = match (base_anticommuting, &base) {
                (Some(n), None) => {
                    let (g, b) = construct::probabilistic::anticommuting_base(n)?;
                    (g, Some(b))
                }
                (None, Some(lit)) => {
                    let g = group_of(&group)?;
                    let b = parse_set_literal(&g, lit)?;
                    (g, Some(b))
                }
                (None, None) => (group_of(&group)?, None),
                _ => {
                    return Err(Error::invalid(
                        "provide at most one of --base / --base-anticommuting",
                    ))
                }
            };
            let outcome = construct::probabilistic::probabilistic_sidon(
                &g,
                kind,
                base_set.as_ref(),
                seed,
                attempts,
                &VerifyCaps::default(),
            )?;
            #[derive(Serialize)]
            struct DeletionJson {
                group: String,
                kind: String,
                vertex_count: usize,
                edge_counts: Vec<(usize, u64)>,
                k_star: usize,
                target: u64,
                size: usize,
                set: Vec<usize>,
                set_rendered: Vec<String>,
                attempts: u64,
                met: bool,
            }
            let json = DeletionJson {
                group: g.label().to_string(),
                kind: format!("{kind:?}").to_lowercase(),
                vertex_count: outcome.profile.vertex_count,
                edge_counts: outcome.profile.edge_counts_by_size.clone(),
                k_star: outcome.k_star,
                target: outcome.target,
                size: outcome.set.len(),
                set: outcome.set.members().to_vec(),
                set_rendered: outcome.set.render(&g),
                attempts: outcome.attempts,
                met: outcome.met,
            };
            let text = format!(
                "size {} (target {}) after {} attempts",
                outcome.set.len(),
                outcome.target,
                outcome.attempts
            );
            let code = if outcome.met { 0 } else { 3 };
            emit(&out, &echo, Some(seed), json, text, None)?;
            Ok(code)
        }
        ConstructCmd::AnticommutingBase { n, out } => {
            let (g, b) = construct::probabilistic::anticommuting_base(n)?;
            #[derive(Serialize)]
            struct BaseJson {
                group: String,
                size: usize,
                members: Vec<usize>,
                rendered: Vec<String>,
            }
            let json = BaseJson {
                group: g.label().to_string(),
                size: b.len(),
                members: b.members().to_vec(),
                rendered: b.render(&g),
            };
            let text = format!("{} cycles in {}", b.len(), g.label());
            emit(&out, &echo, None, json, text, None)?;
            Ok(0)
        }
        ConstructCmd::HashFamily { t, v, out } => {
            let fam = hash_family::hash_shift_family(t, v)?;
            let text = fam
                .iter()
                .map(|s| format!("{s:?}"))
                .collect::<Vec<_>>()
                .join("\n");
            emit(&out, &echo, None, fam, text, None)?;
            Ok(0)
        }
    }
}

fn builtin_graph(name: &str) -> crate::Result<undirected::Graph> {
    if let Some(n) = name.strip_prefix("cycle:") {
        let n: usize = n.parse().map_err(|_| Error::parse("bad cycle size"))?;
        return Ok(undirected::cycle_graph(n));
    }
    match name {
        "dodecahedron" => Ok(undirected::dodecahedron()),
        "petersen" => Ok(undirected::petersen()),
        other => Err(Error::invalid(format!("unknown builtin graph '{other}'"))),
    }
}

fn dispatch_count(cmd: CountCmd, echo: String) -> crate::Result<i32> {
    match cmd {
        CountCmd::Hamilton {
            glm,
            input,
            cap,
            out,
        } => {
            let (d, formula) = match (&glm, &input) {
                (Some(text), None) => {
                    let (l, m) = parse_two(text, "--glm")?;
                    let formula = glm_mod::glm_hamilton_formula(l as u64, m as u64)?;
                    (glm_mod::glm(l, m)?, Some(formula))
                }
                (None, Some(path)) => (digraph::Digraph::read(path)?, None),
                _ => return Err(Error::invalid("provide exactly one of --glm / --input")),
            };
            let count = counting::count_hamilton_cycles(&d, cap)?;
            if let Some(f) = &formula {
                if f != &count {
                    return Err(Error::invalid(format!(
                        "count {count} disagrees with the closed form {f}"
                    )));
                }
            }
            let json = CountJson {
                quantity: "hamilton_cycles".to_string(),
                value: count.to_string(),
                formula: formula
                    .as_ref()
                    .map(|_| "m^(2(m-1)) ((m-1)!)^(2m) (m!)^(2m(r-2))".to_string()),
                formula_value: formula.map(|f| f.to_string()),
            };
            let text = count.to_string();
            emit(&out, &echo, None, json, text, None)?;
            Ok(0)
        }
        CountCmd::Eulerian { kmm, input, out } => {
            let d = match (&kmm, &input) {
                (Some(m), None) => counting::bidirected_complete_bipartite(*m, *m),
                (None, Some(path)) => digraph::Digraph::read(path)?,
                _ => return Err(Error::invalid("provide exactly one of --kmm / --input")),
            };
            let count = counting::best_eulerian_count(&d)?;
            let json = CountJson {
                quantity: "eulerian_circuits_fixed_start_arc".to_string(),
                value: count.to_string(),
                formula: Some("t_v(D) * prod (outdeg(v) - 1)!".to_string()),
                formula_value: None,
            };
            emit(&out, &echo, None, json, count.to_string(), None)?;
            Ok(0)
        }
        CountCmd::Transitions { m, enumerate, out } => {
            let formula = glm_mod::transition_vector_count(m as u64);
            let listed = if enumerate {
                Some(glm_mod::transition_vectors(m)?)
            } else {
                None
            };
            #[derive(Serialize)]
            struct TransJson {
                count: String,
                enumerated: Option<usize>,
                vectors: Option<Vec<glm_mod::TransitionVector>>,
            }
            let json = TransJson {
                count: formula.to_string(),
                enumerated: listed.as_ref().map(|v| v.len()),
                vectors: listed,
            };
            emit(&out, &echo, None, json, formula.to_string(), None)?;
            Ok(0)
        }
        CountCmd::GlmFormula { r, m, out } => {
            let v = glm_mod::glm_hamilton_formula(r, m)?;
            let json = CountJson {
                quantity: "glm_hamilton_formula".to_string(),
                value: v.to_string(),
                formula: Some("m^(2(m-1)) ((m-1)!)^(2m) (m!)^(2m(r-2))".to_string()),
                formula_value: Some(v.to_string()),
            };
            emit(&out, &echo, None, json, v.to_string(), None)?;
            Ok(0)
        }
        CountCmd::Permanent { matrix, out } => {
            let text = std::fs::read_to_string(&matrix).map_err(|source| Error::Io {
                path: matrix.clone(),
                source,
            })?;
            let m = parse_matrix(&text)?;
            let per = permanent::ryser_permanent(&m)?;
            let json = CountJson {
                quantity: "permanent".to_string(),
                value: per.to_string(),
                formula: None,
                formula_value: None,
            };
            emit(&out, &echo, None, json, per.to_string(), None)?;
            Ok(0)
        }
        CountCmd::EfBound { n, rowsum, out } => {
            let b = permanent::ef_bound(n, rowsum)?;
            let json = CountJson {
                quantity: "doubly_stochastic_permanent_bound".to_string(),
                value: b.to_string(),
                formula: Some("rowsum^n n!/n^n".to_string()),
                formula_value: Some(b.to_string()),
            };
            emit(&out, &echo, None, json, b.to_string(), None)?;
            Ok(0)
        }
        CountCmd::HashBound { t, v, q, n, out } => {
            let b = hash_family::hash_code_bound(t, v, q, n)?;
            let json = CountJson {
                quantity: "hash_code_bound".to_string(),
                value: b.to_string(),
                formula: Some("C(t,2) q^((1-(v-2)/(t-1)) n)".to_string()),
                formula_value: Some(b.to_string()),
            };
            emit(&out, &echo, None, json, b.to_string(), None)?;
            Ok(0)
        }
    }
}

fn parse_matrix(text: &str) -> crate::Result<crate::matrix::SquareMatrix01> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::parse("empty matrix file"))?
        .trim()
        .parse()
        .map_err(|_| Error::parse("first line must be the dimension"))?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.next().ok_or_else(|| Error::parse("missing row"))?;
        let row: Vec<u8> = line
            .split_whitespace()
            .map(|t| t.parse::<u8>().map_err(|_| Error::parse("bad entry")))
            .collect::<crate::Result<_>>()?;
        rows.push(row);
    }
    crate::matrix::SquareMatrix01::from_rows(&rows)
}

#[allow(clippy::too_many_arguments)]
fn dispatch_digraph(
    source: DigraphSource,
    degrees: bool,
    fk_free: Option<u32>,
    find_cll_l: Option<usize>,
    girth: bool,
    layered: Option<u32>,
    induced: Option<usize>,
    eps: Option<String>,
    seed: Option<u64>,
    max_tries: u64,
    emit_path: Option<PathBuf>,
    emit_labels: Option<PathBuf>,
    out: Output,
    echo: String,
) -> crate::Result<i32> {
    // undirected bipartite Cayley graph is its own branch
    if source.bipartite_cayley {
        let g = group_of(
            source
                .group
                .as_deref()
                .ok_or_else(|| Error::invalid("--bipartite-cayley needs --group"))?,
        )?;
        let set = parse_set_literal(
            &g,
            source
                .set
                .as_deref()
                .ok_or_else(|| Error::invalid("--bipartite-cayley needs --set"))?,
        )?;
        let graph = undirected::bipartite_cayley(&g, &set)?;
        #[derive(Serialize)]
        struct BipartiteJson {
            vertices: usize,
            edges: usize,
            girth: Option<usize>,
        }
        let json = BipartiteJson {
            vertices: graph.n(),
            edges: graph.edge_count(),
            girth: if girth { graph.girth() } else { None },
        };
        let text = format!(
            "bipartite Cayley graph: {} vertices, {} edges, girth {:?}",
            graph.n(),
            graph.edge_count(),
            json.girth
        );
        emit(&out, &echo, None, json, text, None)?;
        return Ok(0);
    }

    let mut d = match (&source.glm, source.cayley, &source.input) {
        (Some(text), false, None) => {
            let (l, m) = parse_two(text, "--glm")?;
            glm_mod::glm(l, m)?
        }
        (None, true, None) => {
            let g = group_of(
                source
                    .group
                    .as_deref()
                    .ok_or_else(|| Error::invalid("--cayley needs --group"))?,
            )?;
            let set = parse_set_literal(
                &g,
                source
                    .set
                    .as_deref()
                    .ok_or_else(|| Error::invalid("--cayley needs --set"))?,
            )?;
            digraph::cayley_digraph(&g, &set)?
        }
        (None, false, Some(path)) => digraph::Digraph::read(path)?,
        _ => {
            return Err(Error::invalid(
                "provide exactly one of --glm / --cayley / --input / --bipartite-cayley",
            ))
        }
    };

    #[derive(Serialize, Default)]
    struct DigraphJson {
        vertices: usize,
        arcs: usize,
        degrees: Option<digraph::DegreeProfile>,
        fk_free: Option<bool>,
        fk_witness: Option<patterns::WalkPairWitness>,
        cll_free: Option<bool>,
        cll_witness: Option<patterns::TwoPathWitness>,
        layered_met: Option<bool>,
        induced_met: Option<bool>,
        tries: Option<u64>,
    }
    let mut json = DigraphJson {
        vertices: d.n(),
        arcs: d.arc_count(),
        ..Default::default()
    };
    let mut code = 0;

    if let Some(h) = layered {
        let eps = drandom::Eps::parse(eps.as_deref().unwrap_or("1/2"))?;
        let r = drandom::layered_subgraph(&d, h, eps, seed.unwrap_or(0), max_tries)?;
        json.layered_met = Some(r.met);
        json.tries = Some(r.tries);
        if !r.met {
            code = 3;
        }
        d = r.digraph;
        json.vertices = d.n();
        json.arcs = d.arc_count();
    }
    if let Some(m) = induced {
        let eps = drandom::Eps::parse(eps.as_deref().unwrap_or("1/2"))?;
        let r = drandom::random_induced_subgraph(&d, m, eps, seed.unwrap_or(0), max_tries)?;
        json.induced_met = Some(r.met);
        json.tries = Some(r.tries);
        if !r.met {
            code = 3;
        }
        d = r.digraph;
        json.vertices = d.n();
        json.arcs = d.arc_count();
    }
    if degrees {
        json.degrees = Some(digraph::degree_profile(&d));
    }
    if let Some(k) = fk_free {
        let (free, witness) = patterns::is_fk_free(&d, k)?;
        json.fk_free = Some(free);
        json.fk_witness = witness;
        if !free {
            code = 1;
        }
    }
    if let Some(l) = find_cll_l {
        let witness = patterns::find_cll(&d, l, 1 << 24)?;
        json.cll_free = Some(witness.is_none());
        if witness.is_some() {
            code = 1;
        }
        json.cll_witness = witness;
    }
    if let Some(path) = emit_path {
        d.write(&path)?;
    }
    if let Some(path) = emit_labels {
        std::fs::write(&path, glm_mod::glm_label_map_text(&d)).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
    }
    let text = format!(
        "digraph: {} vertices, {} arcs{}",
        json.vertices,
        json.arcs,
        match (json.fk_free, json.cll_free) {
            (Some(f), _) => format!(", walk-pair free: {f}"),
            (_, Some(c)) => format!(", path-pair free: {c}"),
            _ => String::new(),
        }
    );
    emit(&out, &echo, seed, json, text, None)?;
    Ok(code)
}

/// One CSV row per corpus group: order, searched maximum, exactness,
/// every applicable bound, involution count. Rows sorted by order.
fn table_csv(corpus: &PathBuf, k: u32, budget: search::SearchBudget) -> crate::Result<String> {
    let mut rows: Vec<(usize, String, String)> = Vec::new();
    let mut entries: Vec<PathBuf> = std::fs::read_dir(corpus)
        .map_err(|source| Error::Io {
            path: corpus.clone(),
            source,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    entries.sort();
    for path in entries {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_default();
        let ext = path.extension().map(|s| s.to_string_lossy().to_string());
        let group = match ext.as_deref() {
            Some("table") => build_group(&GroupSpec::Table(path.clone())),
            Some("spec") => std::fs::read_to_string(&path)
                .map_err(|source| Error::Io {
                    path: path.clone(),
                    source,
                })
                .and_then(|text| GroupSpec::parse(text.trim()))
                .and_then(|spec| build_group(&spec)),
            _ => continue,
        };
        match group {
            Ok(g) => {
                let result = search::max_sk(&g, k, 1, &budget)?;
                let report = bounds::upper_bound_report(&g, k, 1, None)?;
                let fmt = |name: bounds::BoundName| -> String {
                    report
                        .get(name)
                        .filter(|e| e.applicable)
                        .map(|e| e.value.to_string())
                        .unwrap_or_default()
                };
                let row = format!(
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    csv_quote(&name),
                    g.order(),
                    result.value,
                    result.exact,
                    fmt(bounds::BoundName::Trivial),
                    fmt(bounds::BoundName::DimovskiStrict),
                    fmt(bounds::BoundName::Index2Abelian),
                    fmt(bounds::BoundName::Z2dQuotient),
                    fmt(bounds::BoundName::SkPrimeSubgroup),
                    fmt(bounds::BoundName::OrderCensus),
                    g.count_involutions(),
                );
                rows.push((g.order(), name, row));
            }
            Err(e) => {
                let row = format!(
                    "{},,,,,,,,,,warning: {}",
                    csv_quote(&name),
                    csv_quote(&e.to_string())
                );
                rows.push((usize::MAX, name, row));
            }
        }
    }
    rows.sort();
    let mut csv = String::from(
        "name,order,max_sk,exact,trivial,dimovski_strict,index2_abelian,z2d_quotient,skprime_subgroup,order_census,involutions\n",
    );
    for (_, _, row) in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    Ok(csv)
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per pair: index, components, claimed multiplicity.
fn pair_set_csv(ps: &PairSetJson) -> String {
    let mut csv = String::from("index,left,right,rendered,claimed_g\n");
    for (i, ((l, r), rendered)) in ps
        .members
        .iter()
        .zip(ps.members_rendered.iter())
        .enumerate()
    {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            i,
            l,
            r,
            csv_quote(rendered),
            ps.claimed_g
        ));
    }
    csv
}
