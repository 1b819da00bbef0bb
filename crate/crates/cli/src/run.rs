use std::io::Read as _;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};
use skewpart_core::colouring::{colour_berge_traced, max_clique, ColourError};
use skewpart_core::cutsets::{cc_decomposition_tree, is_cutset};
use skewpart_core::generate::{self, rng};
use skewpart_core::io::{parse_colouring, parse_dimacs, parse_edgelist, write_dimacs, write_edgelist};
use skewpart_core::oracles::{find_odd_hole_or_antihole, is_balanced_bruteforce, OracleBudget};
use skewpart_core::skew::{classify, unbalanced_tight_certified, LooseWitness, SkewSearch};
use skewpart_core::{verify_colouring, ExactLeafColourer, Graph, SkewPartition, Tightness};
use thiserror::Error;

use crate::args::{Command, Family, Format, GenArgs, GraphArgs, OutputMode, WriteFormat};
use crate::report::{partition_json, partition_text, show_set, wire, wire_vec, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

/// DIMACS lines start with a letter tag; edge lists start with a digit.
fn looks_like_dimacs(text: &str) -> bool {
    let first = text.lines().map(str::trim_start).find(|l| !l.is_empty() && !l.starts_with('#'));
    first.is_some_and(|l| matches!(l.split_whitespace().next(), Some("c" | "p" | "e")))
}

pub fn load_graph(args: &GraphArgs) -> Result<Graph, CliError> {
    let text = read_text(&args.input)?;
    let dimacs = match args.format {
        Format::Dimacs => true,
        Format::Edgelist => false,
        Format::Auto => looks_like_dimacs(&text),
    };
    let parsed = if dimacs {
        if args.vertices.is_some() {
            return Err(CliError::Input("--vertices only applies to edge lists".into()));
        }
        parse_dimacs(&text)
    } else {
        parse_edgelist(&text, args.vertices)
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))
}

fn budget(args: &GraphArgs) -> OracleBudget {
    OracleBudget { max_vertices: args.budget as usize, ..Default::default() }
}

/// Runs the exhaustive Berge check unless `--assume-berge` was given.
fn require_berge(g: &Graph, args: &GraphArgs) -> Result<(), CliError> {
    if args.assume_berge {
        return Ok(());
    }
    let b = budget(args);
    if g.n() > b.max_vertices {
        return Err(CliError::Precondition(format!(
            "this command needs a Berge graph; {} vertices exceeds the check budget of {} (raise --budget or pass --assume-berge)",
            g.n(),
            b.max_vertices
        )));
    }
    match find_odd_hole_or_antihole(g, &b) {
        Ok(None) => Ok(()),
        Ok(Some(w)) => Err(CliError::Precondition(format!(
            "graph is not Berge: odd {} {:?}",
            if w.antihole { "antihole" } else { "hole" },
            wire_vec(&w.cycle)
        ))),
        Err(e) => Err(CliError::Precondition(e.to_string())),
    }
}

/// Every printed partition is re-derived from scratch before output.
fn revalidate(g: &Graph, p: &SkewPartition, tight: Option<bool>) -> Result<(), CliError> {
    match classify(g, p.a, p.b) {
        Some(c) if tight.map_or(true, |t| c.is_tight() == t) => Ok(()),
        _ => Err(CliError::Internal(format!("emitted partition {} failed re-validation", partition_text(p)))),
    }
}

fn witness_json(t: &Tightness) -> Value {
    match t {
        Tightness::Tight => Value::Null,
        Tightness::Loose(LooseWitness::CompleteToAnticomponent { vertex, anticomponent }) => json!({
            "kind": "vertex-of-A-complete-to-anticomponent-of-B",
            "vertex": vertex + 1,
            "set": wire(*anticomponent),
        }),
        Tightness::Loose(LooseWitness::AnticompleteToComponent { vertex, component }) => json!({
            "kind": "vertex-of-B-anticomplete-to-component-of-A",
            "vertex": vertex + 1,
            "set": wire(*component),
        }),
    }
}

fn list_lines(what: &str, list: &[SkewPartition]) -> Vec<String> {
    let mut lines = vec![format!("{} {what}", list.len())];
    lines.extend(list.iter().map(|p| format!("  {}", partition_text(p))));
    lines
}

fn single_lines(what: &str, p: &Option<SkewPartition>) -> Vec<String> {
    match p {
        Some(p) => vec![format!("{what}: {}", partition_text(p))],
        None => vec![format!("no {what}")],
    }
}

pub fn run_graph_command(cmd: &Command) -> Result<String, CliError> {
    let (args, colouring_file) = match cmd {
        Command::Verify { graph, colouring } => (graph, Some(colouring)),
        Command::TightList(a)
        | Command::UnbalancedTightList(a)
        | Command::Loose(a)
        | Command::Balanced(a)
        | Command::KrList(a)
        | Command::CcTree(a)
        | Command::Colour(a)
        | Command::CheckBerge(a) => (a, None),
        Command::Gen(_) => unreachable!("gen has no input graph"),
    };
    let g = load_graph(args)?;
    let mut report = Report {
        command: cmd.name(),
        n: g.n(),
        m: g.m(),
        result: Value::Null,
        certificates: Value::Null,
        candidates_examined: 0,
        elapsed_ms: None,
        human: Vec::new(),
    };
    if matches!(cmd, Command::UnbalancedTightList(_) | Command::Balanced(_) | Command::Colour(_)) {
        require_berge(&g, args)?;
    }
    let start = Instant::now();
    let search = SkewSearch::new(&g);
    match cmd {
        Command::TightList(_) => {
            let list = search.tight_list();
            for p in &list {
                revalidate(&g, p, Some(true))?;
            }
            report.result = list.iter().map(partition_json).collect();
            report.human = list_lines("tight skew partitions", &list);
        }
        Command::UnbalancedTightList(_) => {
            let list = search.unbalanced_tight_list();
            let certified = unbalanced_tight_certified(&g);
            for p in &list {
                revalidate(&g, p, Some(true))?;
            }
            report.result = list.iter().map(partition_json).collect();
            report.certificates = certified
                .iter()
                .map(|s| {
                    let q = s.base.square;
                    json!({
                        "B": wire(s.partition.b),
                        "square": wire_vec(&[q.a, q.b, q.c, q.d]),
                        "in_complement": s.base.in_complement,
                        "odd_path": wire_vec(&s.parity_path.vertices),
                    })
                })
                .collect();
            report.human = list_lines("unbalanced tight skew partitions", &list);
        }
        Command::Loose(_) => {
            let found = search.find_loose();
            if let Some(p) = &found {
                revalidate(&g, p, Some(false))?;
                report.result = partition_json(p);
                report.certificates = json!({ "witness": witness_json(&p.tightness) });
            }
            report.human = single_lines("loose skew partition", &found);
        }
        Command::Balanced(_) => {
            let found = search.find_balanced();
            if let Some(p) = &found {
                revalidate(&g, p, None)?;
                let b = budget(args);
                let checked = g.n() <= b.max_vertices;
                if checked && !is_balanced_bruteforce(&g, p.a, p.b, &b).unwrap_or(false) {
                    let msg = format!("partition {} is not balanced", partition_text(p));
                    return Err(if args.assume_berge { CliError::Precondition(msg) } else { CliError::Internal(msg) });
                }
                report.result = partition_json(p);
                report.certificates = json!({
                    "tight": p.is_tight(),
                    "witness": witness_json(&p.tightness),
                    "balance_checked_exhaustively": checked,
                });
            }
            report.human = single_lines("balanced skew partition", &found);
        }
        Command::KrList(_) => {
            let list = search.candidate_list();
            if let Some(&x) = list.sets.iter().find(|&&x| !is_cutset(&g, x)) {
                return Err(CliError::Internal(format!("{} is not a cutset", show_set(x))));
            }
            report.result = list.sets.iter().map(|&x| wire(x)).collect();
            report.certificates = json!({ "aux_graphs": list.aux_graphs });
            report.candidates_examined = list.sets.len();
            report.human = vec![format!("{} candidate cutsets from {} auxiliary graphs", list.sets.len(), list.aux_graphs)];
            report.human.extend(list.sets.iter().map(|&x| format!("  {}", show_set(x))));
        }
        Command::CcTree(_) => {
            let tree = cc_decomposition_tree(&g);
            tree.check(&g).map_err(|e| CliError::Internal(format!("decomposition tree invalid: {e:?}")))?;
            let nodes: Vec<Value> = tree
                .nodes
                .iter()
                .map(|node| {
                    let children = node.children.map(|(r, t)| json!([r, t]));
                    let separator = node.children.map(|(r, t)| wire(tree.nodes[r].set & tree.nodes[t].set));
                    json!({ "set": wire(node.set), "children": children, "separator": separator })
                })
                .collect();
            let leaves: Vec<_> = tree.leaves().collect();
            report.result = json!({ "nodes": nodes });
            report.certificates = json!({ "leaves": leaves.iter().map(|&l| wire(l)).collect::<Vec<_>>() });
            report.human = vec![format!("{} nodes, {} internal, {} leaves", tree.nodes.len(), tree.internal_count(), leaves.len())];
            for (i, node) in tree.nodes.iter().enumerate() {
                let line = match node.children {
                    Some((r, t)) => format!(
                        "  node {i}: {} splits at {} into {r}, {t}",
                        show_set(node.set),
                        show_set(tree.nodes[r].set & tree.nodes[t].set)
                    ),
                    None => format!("  node {i}: {} (leaf)", show_set(node.set)),
                };
                report.human.push(line);
            }
        }
        Command::Colour(_) => {
            let (c, stats) = colour_berge_traced(&g, &ExactLeafColourer).map_err(|e| match e {
                ColourError::OddCycle => CliError::Precondition(e.to_string()),
                _ if args.assume_berge => CliError::Precondition(format!("{e} (is the graph Berge?)")),
                _ => CliError::Internal(e.to_string()),
            })?;
            if !verify_colouring(&g, &c) {
                return Err(CliError::Internal("colouring failed re-validation".into()));
            }
            let (omega, clique) = max_clique(&g);
            if c.palette != omega {
                let msg = format!("used {} colours but the clique number is {omega}", c.palette);
                return Err(if args.assume_berge { CliError::Precondition(msg) } else { CliError::Internal(msg) });
            }
            report.result = json!({ "palette": c.palette, "colours": c.colours });
            report.certificates = json!({
                "clique": wire(clique),
                "tree_nodes": stats.tree_nodes,
                "merges": stats.combines.len(),
            });
            report.candidates_examined = stats.candidates_examined;
            report.human = vec![
                format!("{} colours (clique {} is a lower bound)", c.palette, show_set(clique)),
                c.colours.iter().enumerate().map(|(v, k)| format!("{}:{k}", v + 1)).collect::<Vec<_>>().join(" "),
            ];
        }
        Command::CheckBerge(_) => {
            let b = budget(args);
            let w = find_odd_hole_or_antihole(&g, &b).map_err(|e| CliError::Precondition(e.to_string()))?;
            report.result = json!(w.is_none());
            report.human = vec![match &w {
                None => "Berge".to_string(),
                Some(w) => format!(
                    "not Berge: odd {} {:?}",
                    if w.antihole { "antihole" } else { "hole" },
                    wire_vec(&w.cycle)
                ),
            }];
            if let Some(w) = w {
                let kind = if w.antihole { "odd-antihole" } else { "odd-hole" };
                report.certificates = json!({ "kind": kind, "cycle": wire_vec(&w.cycle) });
            }
        }
        Command::Verify { .. } => {
            let path = colouring_file.expect("verify carries a colouring file");
            let text = read_text(path)?;
            let c = parse_colouring(&text, g.n()).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let valid = verify_colouring(&g, &c);
            report.result = json!({ "valid": valid, "palette": c.palette });
            let conflict = g.edges().find(|&(u, v)| c.colour(u) == c.colour(v));
            if let Some((u, v)) = conflict {
                report.certificates = json!({ "conflict": [u + 1, v + 1] });
            }
            report.human = vec![match conflict {
                None => format!("proper colouring with {} colours", c.palette),
                Some((u, v)) => format!("improper: {} and {} share colour {}", u + 1, v + 1, c.colour(u)),
            }];
        }
        Command::Gen(_) => unreachable!(),
    }
    if report.candidates_examined == 0 {
        report.candidates_examined = search.candidates_examined();
    }
    if args.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    Ok(match args.output {
        OutputMode::Json => report.json(),
        OutputMode::Human => report.text(),
    })
}

/// Largest graph the `berge` family will filter by exhaustive search.
const GEN_BERGE_LIMIT: usize = 16;

pub fn run_gen(args: &GenArgs) -> Result<String, CliError> {
    let n = args.n as usize;
    if !(0.0..=1.0).contains(&args.p) {
        return Err(CliError::Input(format!("--p {} is not a probability", args.p)));
    }
    let mut r = rng(args.seed);
    let g = match args.family {
        Family::Gnp => generate::gnp(&mut r, n, args.p),
        Family::Bipartite => generate::random_bipartite(&mut r, n / 2, n - n / 2, args.p),
        Family::CoBipartite => generate::random_bipartite(&mut r, n / 2, n - n / 2, args.p).complement(),
        Family::LineBipartite => {
            if args.max_clique < 1 {
                return Err(CliError::Input("--max-clique must be at least 1".into()));
            }
            let side = n.div_ceil(args.max_clique).max(1) + 1;
            generate::random_bipartite_line_graph(&mut r, side, side, n, args.max_clique)
        }
        Family::Berge => {
            if n > GEN_BERGE_LIMIT {
                return Err(CliError::Input(format!("berge family is limited to {GEN_BERGE_LIMIT} vertices")));
            }
            if args.max_clique < 1 {
                return Err(CliError::Input("--max-clique must be at least 1".into()));
            }
            generate::random_verified_berge(&mut r, n, args.max_clique)
        }
    };
    if g.n() == 0 {
        return Err(CliError::Input("generated graph is empty".into()));
    }
    Ok(match args.write {
        WriteFormat::Dimacs => write_dimacs(&g),
        WriteFormat::Edgelist => write_edgelist(&g),
    })
}
