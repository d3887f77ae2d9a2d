mod bounds;
mod files;
mod label;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lexidis::autosearch::{
    automorphism_group, enumerate_automorphisms, find_preserving, find_preserving_edges,
    ColoredGraph,
};
use lexidis::distinguishing::{distinguishing_index, distinguishing_number, Outcome};
use lexidis::io::{write_edge_labeling, write_graph, write_graph6, write_vertex_labeling, LabelingFile};
use lexidis::lexprod::{lex_power, lex_product};
use lexidis::permgroup::DEFAULT_CAP;
use lexidis::{Capped, EdgeLabeling, Graph, Permutation, VertexLabeling};
use serde_json::{json, Value};

use files::{output_format, read_graph, read_labeling, write_text, Format};
use label::LabelArgs;

/// Distinguishing numbers, indices and labelings of lexicographic products.
///
/// Exit status: 0 success, 1 negative verification, 2 bad arguments,
/// input or precondition, 3 cap exceeded. `LEXIDIS_CAP` sets the default
/// for every `--cap`.
#[derive(Debug, Parser)]
#[command(name = "lexidis", version)]
struct Cli {
    /// One JSON object per line
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    /// K_{1,n}
    Star,
    /// K_{1,n} with every edge subdivided
    Spider,
    Empty,
}

#[derive(Debug, Args)]
struct GraphOut {
    /// Output file; stdout by default or with `-`
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Output format; by default `.g6` files get graph6, everything else an edge list
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph from a named family
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Lexicographic product G[H], or G^k with --power
    Product {
        g: PathBuf,
        h: Option<PathBuf>,
        #[arg(long)]
        power: Option<usize>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Automorphism group order and generators
    Aut {
        graph: PathBuf,
        /// Also list every element, if there are at most --cap of them
        #[arg(long)]
        elements: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Distinguishing number and a witness labeling
    Dnum {
        graph: PathBuf,
        /// Largest label count to try; |V(G)| by default
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        /// Witness file; printed after the value by default
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Distinguishing index and a witness edge labeling
    Dindex {
        graph: PathBuf,
        /// Largest label count to try; |E(G)| by default
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a labeling of a product by one of the constructions
    Label(LabelArgs),
    /// Check a vertex or edge labeling; prints DISTINGUISHING or a
    /// preserving automorphism in cycle notation
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Every applicable bound for G, G[H] and G^k
    Bounds {
        g: PathBuf,
        h: Option<PathBuf>,
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable input or a failed precondition.
    Usage(String),
    /// The report is already printed.
    Negative,
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

pub trait Context<T> {
    /// Prefixes an error with the file or flag it came from.
    fn ctx(self, what: &str) -> Result<T, Failure>;
}

impl<T, E: fmt::Display> Context<T> for Result<T, E> {
    fn ctx(self, what: &str) -> Result<T, Failure> {
        self.map_err(|e| Failure::Usage(format!("{what}: {e}")))
    }
}

pub enum Labeling {
    Vertex(VertexLabeling),
    Edge(EdgeLabeling),
}

impl Labeling {
    fn file(&self) -> String {
        match self {
            Labeling::Vertex(l) => write_vertex_labeling(l),
            Labeling::Edge(l) => write_edge_labeling(l),
        }
    }

    fn json(&self) -> Value {
        match self {
            Labeling::Vertex(l) => json!({ "vertex": l.labels() }),
            Labeling::Edge(l) => {
                let rows: Vec<[usize; 3]> = l.iter().map(|((u, v), x)| [u, v, x as usize]).collect();
                json!({ "edge": rows })
            }
        }
    }

    fn distinct(&self) -> usize {
        match self {
            Labeling::Vertex(l) => l.distinct_labels(),
            Labeling::Edge(l) => l.distinct_labels(),
        }
    }

    /// A nontrivial automorphism preserving the labeling, if any.
    fn certificate(&self, g: &Graph, what: &str) -> Result<Option<Permutation>, Failure> {
        match self {
            Labeling::Vertex(l) => {
                l.check_graph(g).ctx(what)?;
                let colors = l.labels().iter().map(|&x| u64::from(x)).collect();
                let c = ColoredGraph::new(g, colors).ctx(what)?;
                Ok(find_preserving(&c, true).0)
            }
            Labeling::Edge(l) => find_preserving_edges(g, l, true).ctx(what),
        }
    }
}

struct Report {
    json: bool,
    start: Instant,
}

impl Report {
    fn emit(&self, verb: &str, inputs: Value, value: Value, witness: Value) {
        let ms = self.start.elapsed().as_secs_f64() * 1000.0;
        let line = json!({
            "verb": verb,
            "inputs": inputs,
            "value": value,
            "witness": witness,
            "ms": (ms * 1000.0).round() / 1000.0,
        });
        println!("{line}");
    }
}

fn show(p: &Path) -> String {
    p.display().to_string()
}

/// `--cap`, else `LEXIDIS_CAP`.
fn resolve_cap(flag: Option<u64>) -> Result<Option<u64>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("LEXIDIS_CAP") {
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(c) if c >= 1 => Ok(Some(c)),
            _ => Err(Failure::Usage(format!("LEXIDIS_CAP: expected a positive integer, got `{s}`"))),
        },
        Err(_) => Ok(None),
    }
}

fn label_cap(flag: Option<u64>, default: usize) -> Result<u32, Failure> {
    let cap = resolve_cap(flag)?.unwrap_or(default.max(1) as u64);
    Ok(u32::try_from(cap).unwrap_or(u32::MAX))
}

fn write_graph_out(r: &Report, g: &Graph, out: &GraphOut, verb: &str, inputs: Value) -> Result<(), Failure> {
    let path = out.output.as_deref();
    let text = write_graph(g, output_format(path, out.format));
    if r.json {
        if path.is_some() {
            write_text(path, &text)?;
        }
        r.emit(
            verb,
            inputs,
            json!({ "n": g.n(), "m": g.edge_count() }),
            json!(write_graph6(g)),
        );
        Ok(())
    } else {
        write_text(path, &text)
    }
}

fn gen(r: &Report, family: Family, n: usize, out: &GraphOut) -> Result<(), Failure> {
    let g = match family {
        Family::Path => Graph::path(n),
        Family::Cycle => Graph::cycle(n),
        Family::Complete => Graph::complete(n),
        Family::Star => Graph::star(n),
        Family::Spider => Graph::spider(n),
        Family::Empty => Ok(Graph::empty(n)),
    }
    .ctx("--n")?;
    let name = family.to_possible_value().map(|v| v.get_name().to_owned());
    write_graph_out(r, &g, out, "gen", json!({ "family": name, "n": n }))
}

fn product(r: &Report, g: &Path, h: Option<&Path>, power: Option<usize>, out: &GraphOut) -> Result<(), Failure> {
    let gg = read_graph(g)?;
    let (p, inputs) = match (h, power) {
        (Some(h), None) => {
            let hh = read_graph(h)?;
            (lex_product(&gg, &hh).ctx("product")?, json!({ "g": show(g), "h": show(h) }))
        }
        (None, Some(k)) => (lex_power(&gg, k).ctx("--power")?, json!({ "g": show(g), "power": k })),
        (Some(_), Some(_)) => return Err(Failure::Usage("--power takes a single graph".into())),
        (None, None) => return Err(Failure::Usage("product needs H or --power".into())),
    };
    write_graph_out(r, &p, out, "product", inputs)
}

fn aut(r: &Report, path: &Path, elements: bool, cap: Option<u64>) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let group = automorphism_group(&ColoredGraph::uniform(&g));
    let gens: Vec<String> = group.generators.gens().iter().map(ToString::to_string).collect();
    let cap = resolve_cap(cap)?.map_or(DEFAULT_CAP, |c| usize::try_from(c).unwrap_or(usize::MAX));
    let listed = elements.then(|| enumerate_automorphisms(&g, cap));
    let all: Option<Vec<String>> = match &listed {
        Some(Capped::Within(all)) => Some(all.iter().map(ToString::to_string).collect()),
        _ => None,
    };
    if r.json {
        r.emit(
            "aut",
            json!({ "graph": show(path), "elements": elements, "cap": cap }),
            json!(group.order.to_string()),
            json!({ "generators": gens, "elements": all }),
        );
    } else {
        println!("order {}", group.order);
        println!("generators {}", gens.len());
        for s in &gens {
            println!("{s}");
        }
        if let Some(all) = &all {
            println!("elements {}", all.len());
            for s in all {
                println!("{s}");
            }
        }
    }
    match listed {
        Some(Capped::Exceeded { .. }) => Err(Failure::Cap(format!(
            "--cap: more than {cap} elements, not listed"
        ))),
        _ => Ok(()),
    }
}

fn value_and_witness(
    r: &Report,
    verb: &str,
    path: &Path,
    d_max: u32,
    found: Option<(u32, Labeling)>,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let Some((d, w)) = found else {
        return Err(Failure::Cap(format!(
            "--cap: no distinguishing labeling with at most {d_max} labels"
        )));
    };
    if output.is_some() {
        write_text(output, &w.file())?;
    }
    if r.json {
        r.emit(verb, json!({ "graph": show(path), "cap": d_max }), json!(d), w.json());
    } else {
        println!("{d}");
        if output.is_none() {
            print!("{}", w.file());
        }
    }
    Ok(())
}

fn dnum(r: &Report, path: &Path, cap: Option<u64>, output: Option<&Path>) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let d_max = label_cap(cap, g.n())?;
    let found = match distinguishing_number(&g, d_max).ctx(&show(path))? {
        Outcome::Found { d, witness } => Some((d, Labeling::Vertex(witness))),
        Outcome::NotFound { .. } => None,
    };
    value_and_witness(r, "dnum", path, d_max, found, output)
}

fn dindex(r: &Report, path: &Path, cap: Option<u64>, output: Option<&Path>) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let d_max = label_cap(cap, g.edge_count())?;
    let found = match distinguishing_index(&g, d_max).ctx(&show(path))? {
        Outcome::Found { d, witness } => Some((d, Labeling::Edge(witness))),
        Outcome::NotFound { .. } => None,
    };
    value_and_witness(r, "dindex", path, d_max, found, output)
}

/// Prints the verdict; a certificate means exit status 1.
fn verdict(r: &Report, verb: &str, inputs: Value, cert: Option<Permutation>, extra: Value) -> Result<(), Failure> {
    if r.json {
        let mut value = json!({ "distinguishing": cert.is_none() });
        if let (Value::Object(v), Value::Object(e)) = (&mut value, extra) {
            v.extend(e);
        }
        r.emit(verb, inputs, value, json!(cert.as_ref().map(ToString::to_string)));
    } else {
        match &cert {
            None => println!("DISTINGUISHING"),
            Some(p) => println!("{p}"),
        }
    }
    if cert.is_some() {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn verify(r: &Report, gpath: &Path, lpath: &Path) -> Result<(), Failure> {
    let g = read_graph(gpath)?;
    let labeling = match read_labeling(lpath)? {
        LabelingFile::Edge(l) => Labeling::Edge(l),
        v => Labeling::Vertex(v.into_vertex_labeling(g.n()).ctx(&show(lpath))?),
    };
    let cert = labeling.certificate(&g, &show(lpath))?;
    let inputs = json!({ "graph": show(gpath), "labeling": show(lpath) });
    verdict(r, "verify", inputs, cert, json!({}))
}

fn label(r: &Report, a: &LabelArgs) -> Result<(), Failure> {
    let built = label::build(a)?;
    let out = a.output.as_deref();
    let to_stdout = out.is_none_or(|p| p.as_os_str() == "-");
    if !r.json || !to_stdout {
        write_text(out, &built.labeling.file())?;
    }
    let graphs: Vec<String> = a.graphs.iter().map(|p| show(p)).collect();
    let inputs = json!({
        "method": a.method.name(),
        "graphs": graphs,
        "lg": a.lg.as_deref().map(show),
        "lh": a.lh.as_deref().map(show),
        "n": a.n,
        "k": a.k,
    });
    let used = built.labeling.distinct();
    if !a.certify {
        if r.json {
            r.emit("label", inputs, json!({ "labels": used }), built.labeling.json());
        } else if !to_stdout {
            println!("labels {used}");
        }
        return Ok(());
    }
    let cert = built.labeling.certificate(&built.product, a.method.name())?;
    if r.json {
        let extra = json!({ "labels": used, "labeling": built.labeling.json() });
        return verdict(r, "label", inputs, cert, extra);
    }
    // keep stdout a clean labeling file when the labeling went there
    let report = match &cert {
        None => format!("labels {used}\nDISTINGUISHING"),
        Some(p) => format!("labels {used}\nnot distinguishing, preserved by {p}"),
    };
    if to_stdout {
        eprintln!("{report}");
    } else {
        println!("{report}");
    }
    if cert.is_some() {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn bounds_verb(r: &Report, g: &Path, h: Option<&Path>, k: Option<u32>) -> Result<(), Failure> {
    let gg = read_graph(g)?;
    let hh = h.map(read_graph).transpose()?;
    let entries = bounds::compute(&gg, hh.as_ref(), k)?;
    let inputs = json!({ "g": show(g), "h": h.map(show), "k": k });
    for e in entries {
        if r.json {
            let (value, witness) = match e.outcome {
                Ok(a) => (a.value, json!({ "claim": a.claim, "note": a.note })),
                Err(reason) => (Value::Null, json!({ "reason": reason })),
            };
            r.emit(&format!("bounds.{}", e.name), inputs.clone(), value, witness);
        } else {
            match e.outcome {
                Ok(a) => match a.note {
                    Some(n) => println!("{:<11} {} ({n})", e.name, a.claim),
                    None => println!("{:<11} {}", e.name, a.claim),
                },
                Err(reason) => println!("{:<11} n/a: {reason}", e.name),
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let r = Report {
        json: cli.json,
        start: Instant::now(),
    };
    match &cli.command {
        Command::Gen { family, n, out } => gen(&r, *family, *n, out),
        Command::Product { g, h, power, out } => product(&r, g, h.as_deref(), *power, out),
        Command::Aut { graph, elements, cap } => aut(&r, graph, *elements, *cap),
        Command::Dnum { graph, cap, output } => dnum(&r, graph, *cap, output.as_deref()),
        Command::Dindex { graph, cap, output } => dindex(&r, graph, *cap, output.as_deref()),
        Command::Label(a) => label(&r, a),
        Command::Verify { graph, labeling } => verify(&r, graph, labeling),
        Command::Bounds { g, h, k } => bounds_verb(&r, g, h.as_deref(), *k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Cap(m) => eprintln!("error: {m}"),
                Failure::Negative => {}
            }
            ExitCode::from(f.code())
        }
    }
}
