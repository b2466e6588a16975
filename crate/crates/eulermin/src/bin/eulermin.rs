//! Command-line front end: graph file in, reports out. Exit codes follow
//! sysexits where they apply: 64 usage, 65 unparseable/invalid input,
//! 70 cap exceeded. `member` exits 1 on a non-member; `verify` exits 1 on a
//! generation failure and 2 on a minimality failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use eulermin::chords;
use eulermin::graph::{EdgeSet, Graph, DEFAULT_MAX_CYCLE_DIM};
use eulermin::ideal::{self, Binomial, GeneratingSet};
use eulermin::joins::{self, TPPair};
use eulermin::m2;
use eulermin::verify;
use eulermin::Error;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_CAP: u8 = 70;

#[derive(Parser)]
#[command(
    name = "eulermin",
    about = "Minimal generating sets and generating degrees of the Eulerian ideal of a graph",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the minimal homogeneous generating set and its degrees
    Gens {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Base edge for the square-difference generators, e.g. "2-5"
        #[arg(long)]
        base_edge: Option<String>,
        /// Draw representative/anchor choices pseudo-randomly
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the maximal generating degree d(I(G))
    Maxdeg { graph: PathBuf },
    /// Print the structural degree bound and flag strict inequality
    Bound { graph: PathBuf },
    /// Print minimum (T,p)-joins and their equivalence classes
    Joins {
        graph: PathBuf,
        /// Comma-separated vertex list, e.g. "2,5" (empty for T = ∅)
        #[arg(long, default_value = "")]
        t: String,
        /// Join cardinality parity, 0 or 1
        #[arg(long)]
        p: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream the even-cardinality Eulerian edge sets
    Eulerian {
        graph: PathBuf,
        /// Tag each set with its cycle-shape classification
        #[arg(long)]
        classify: bool,
    },
    /// Print the even chords of an Eulerian set with witnesses
    Evenchords {
        graph: PathBuf,
        /// The set as comma-separated edges, e.g. "1-2,2-3,3-4,4-5,5-6,1-6"
        #[arg(long)]
        set: String,
    },
    /// Test ideal membership of a binomial
    Member {
        graph: PathBuf,
        /// e.g. "t[1,2]*t[3,4] - t[2,3]*t[1,4]"
        #[arg(long)]
        binomial: String,
    },
    /// Verify generation and minimality of the minimal generating set
    Verify {
        graph: PathBuf,
        /// Exhaustive fiber search depth; default d(I(G)) + 2
        #[arg(long)]
        max_fiber_degree: Option<usize>,
    },
    /// Write a Macaulay2 cross-check script
    ExportM2 {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_DATA,
            };
            ExitCode::from(code)
        }
    }
}

/// Cycle-space cap, overridable via EULERMIN_MAX_EDGES.
fn max_dim() -> usize {
    std::env::var("EULERMIN_MAX_EDGES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_CYCLE_DIM)
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedLine {
        line: 0,
        content: format!("{}: {e}", path.display()),
    })?;
    Graph::parse(&text)
}

fn parse_edge_token(g: &Graph, token: &str) -> Result<usize, Error> {
    let bad = || Error::MalformedBinomial(format!("bad edge token {token:?}, expected \"u-v\""));
    let (u, v) = token.split_once('-').ok_or_else(bad)?;
    let u: usize = u.trim().parse().map_err(|_| bad())?;
    let v: usize = v.trim().parse().map_err(|_| bad())?;
    g.edge_index(u, v).ok_or(Error::UnknownEdge { u, v })
}

fn parse_edge_set(g: &Graph, text: &str) -> Result<EdgeSet, Error> {
    let mut set = EdgeSet::EMPTY;
    for token in text.split(',').filter(|t| !t.trim().is_empty()) {
        set.insert(parse_edge_token(g, token.trim())?);
    }
    Ok(set)
}

fn parse_t(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::MalformedBinomial(format!("bad vertex {t:?} in --t")))
        })
        .collect()
}

fn render_set(g: &Graph, set: EdgeSet) -> String {
    let parts: Vec<String> = set
        .iter()
        .map(|i| {
            let (u, v) = g.edge(i);
            format!("{u}-{v}")
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| Error::MalformedLine {
            line: 0,
            content: format!("{}: {e}", path.display()),
        }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Gens {
            graph,
            format,
            base_edge,
            seed,
            out,
        } => {
            let g = load_graph(&graph)?;
            let base = base_edge
                .map(|t| parse_edge_token(&g, &t))
                .transpose()?;
            let gens = ideal::minimal_generating_set(&g, base, seed)?;
            let text = match format {
                Format::Text => render_gens_text(&g, &gens),
                Format::Json => render_gens_json(&g, &gens),
                Format::Dot => render_dot(&g, gens.join_binomials.first().map(|(_, b)| {
                    b.lhs().squarefree_part().union(b.rhs().squarefree_part())
                })),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Maxdeg { graph } => {
            let g = load_graph(&graph)?;
            println!("{}", ideal::max_generating_degree(&g)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bound { graph } => {
            let g = load_graph(&graph)?;
            let bound = chords::degree_bound(&g, max_dim())?;
            let d = ideal::max_generating_degree(&g)?;
            println!("{bound}");
            if d < bound {
                println!("strict inequality: d(I(G)) = {d} < {bound}");
            } else {
                println!("equality: d(I(G)) = {d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Joins { graph, t, p, format } => {
            let g = load_graph(&graph)?;
            if p > 1 {
                return Err(Error::Precondition("parity must be 0 or 1"));
            }
            let pair = TPPair::new(parse_t(&t)?, p);
            if !joins::join_exists(&g, &pair) {
                println!("no {pair}-join exists");
                return Ok(ExitCode::SUCCESS);
            }
            let jc = joins::build_join_classes(&g, &pair)?;
            match format {
                Format::Text => {
                    println!("(T,p) = {pair}");
                    println!("minimum cardinality: {}", jc.min_card);
                    println!("minimum joins ({}):", jc.all_min_joins.len());
                    for &j in &jc.all_min_joins {
                        println!("  {}", render_set(&g, j));
                    }
                    println!("classes ({}):", jc.classes.len());
                    for (k, class) in jc.classes.iter().enumerate() {
                        let members: Vec<String> =
                            class.iter().map(|&j| render_set(&g, j)).collect();
                        println!("  class {}: {}", k + 1, members.join(" "));
                    }
                    println!("anchor: {}", render_set(&g, jc.anchor));
                }
                Format::Json => {
                    let set_list = |sets: &[EdgeSet]| -> Vec<Vec<(usize, usize)>> {
                        sets.iter()
                            .map(|j| j.iter().map(|i| g.edge(i)).collect())
                            .collect()
                    };
                    let doc = json!({
                        "schema": "eulermin/1",
                        "T": pair.t(),
                        "p": pair.p(),
                        "min_cardinality": jc.min_card,
                        "min_joins": set_list(&jc.all_min_joins),
                        "classes": jc.classes.iter().map(|c| set_list(c)).collect::<Vec<_>>(),
                        "anchor": set_list(&[jc.anchor])[0],
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                Format::Dot => print!("{}", render_dot(&g, Some(jc.anchor))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Eulerian { graph, classify } => {
            let g = load_graph(&graph)?;
            for c in g.eulerian_even(max_dim())? {
                if classify {
                    let tag = match g.classify_eulerian(c) {
                        eulermin::graph::EulerianClass::EvenCycle(_) => "even-cycle",
                        eulermin::graph::EulerianClass::TwoOddCyclesShared0(..) => {
                            "two-odd-cycles-disjoint"
                        }
                        eulermin::graph::EulerianClass::TwoOddCyclesShared1(..) => {
                            "two-odd-cycles-shared-vertex"
                        }
                        eulermin::graph::EulerianClass::OtherEulerian => "other",
                        eulermin::graph::EulerianClass::NotEulerian => {
                            unreachable!("enumeration yields Eulerian sets")
                        }
                    };
                    println!("{} (card {}) {}", render_set(&g, c), c.card(), tag);
                } else {
                    println!("{} (card {})", render_set(&g, c), c.card());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Evenchords { graph, set } => {
            let g = load_graph(&graph)?;
            let c = parse_edge_set(&g, &set)?;
            let witnesses = chords::even_chords(&g, c, max_dim())?;
            if witnesses.is_empty() {
                println!("no even chords of {}", render_set(&g, c));
            } else {
                println!("even chords of {} ({}):", render_set(&g, c), witnesses.len());
                for w in &witnesses {
                    let (u, v) = g.edge(w.chord);
                    println!(
                        "  chord {u}-{v}: C1={} C2={}",
                        render_set(&g, w.c1),
                        render_set(&g, w.c2)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Member { graph, binomial } => {
            let g = load_graph(&graph)?;
            let b = Binomial::parse(&g, &binomial)?;
            let lhs = joins::classify_join(&g, b.lhs().squarefree_part());
            let rhs = joins::classify_join(&g, b.rhs().squarefree_part());
            let member = ideal::is_member(&g, &b);
            println!("member: {}", if member { "yes" } else { "no" });
            println!("lhs squarefree (T,p): {lhs}");
            println!("rhs squarefree (T,p): {rhs}");
            if b.is_homogeneous() {
                println!("homogeneous: yes (degree {})", b.degree());
            } else {
                println!(
                    "homogeneous: no ({} vs {})",
                    b.lhs().degree(),
                    b.rhs().degree()
                );
            }
            Ok(if member {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Verify {
            graph,
            max_fiber_degree,
        } => {
            let g = load_graph(&graph)?;
            let gens = ideal::minimal_generating_set(&g, None, None)?;
            let depth = max_fiber_degree.unwrap_or(gens.max_degree() + 2);
            println!(
                "generators: {} (degrees {:?})",
                gens.len(),
                gens.degrees()
            );
            if let Some(fiber) = verify::find_disconnected_fiber(&g, &gens.all(), depth)? {
                println!(
                    "generation: FAILED, disconnected fiber at degree {} for (T,p) = {} with {} monomials",
                    fiber.anchor_degree,
                    fiber.pair,
                    fiber.monomials.len()
                );
                for m in fiber.monomials.iter().take(8) {
                    println!("  {}", m.render(&g));
                }
                return Ok(ExitCode::from(1));
            }
            println!("generation: verified up to degree {depth}");
            if let Some(extra) = verify::find_removable(&g, &gens)? {
                println!("minimality: FAILED, removable generator {}", extra.render(&g));
                return Ok(ExitCode::from(2));
            }
            println!("minimality: verified");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ExportM2 { graph, out } => {
            let g = load_graph(&graph)?;
            let script = m2::export_script(&g)?;
            emit(out.as_deref(), &script)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_gens_text(g: &Graph, gens: &GeneratingSet) -> String {
    let mut out = String::new();
    let (u, v) = g.edge(gens.base_edge);
    out.push_str(&format!(
        "graph: {} vertices, {} edges\n",
        g.vertex_count(),
        g.edge_count()
    ));
    out.push_str(&format!("base edge: {u}-{v}\n"));
    let degrees: Vec<String> = gens
        .degrees()
        .iter()
        .map(|(d, k)| format!("{d}: {k}"))
        .collect();
    out.push_str(&format!("degrees: {{{}}}\n", degrees.join(", ")));
    out.push_str(&format!("squares ({}):\n", gens.square_binomials.len()));
    for b in &gens.square_binomials {
        out.push_str(&format!("  {}\n", b.render(g)));
    }
    out.push_str(&format!("joins ({}):\n", gens.join_binomials.len()));
    for (pair, b) in &gens.join_binomials {
        out.push_str(&format!("  {pair}  {}\n", b.render(g)));
    }
    out
}

fn render_gens_json(g: &Graph, gens: &GeneratingSet) -> String {
    let degrees: serde_json::Map<String, serde_json::Value> = gens
        .degrees()
        .iter()
        .map(|(d, k)| (d.to_string(), json!(k)))
        .collect();
    let doc = json!({
        "schema": "eulermin/1",
        "base_edge": g.edge(gens.base_edge),
        "squares": gens
            .square_binomials
            .iter()
            .map(|b| b.render(g))
            .collect::<Vec<_>>(),
        "joins": gens
            .join_binomials
            .iter()
            .map(|(pair, b)| json!({
                "T": pair.t(),
                "p": pair.p(),
                "binomial": b.render(g),
            }))
            .collect::<Vec<_>>(),
        "degrees": degrees,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

/// DOT rendering of the graph; the edges of `highlight` (e.g. a join) are
/// colored for figure reproduction.
fn render_dot(g: &Graph, highlight: Option<EdgeSet>) -> String {
    let marked = highlight.unwrap_or(EdgeSet::EMPTY);
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if marked.contains(i) {
            out.push_str(&format!("  {u} -- {v} [color=red, penwidth=2];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
