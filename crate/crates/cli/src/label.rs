//! The `label` verb: constructive labelings of products.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use lexidis::constructions::{
    edge_label_gp2, edge_label_k2h, edge_label_path, edge_label_power, edge_label_small_g,
    edge_label_star, edge_label_thm31, label_product_upper, label_thm22,
};
use lexidis::distinguishing::{distinguishing_index_exact, distinguishing_number_exact};
use lexidis::io::LabelingFile;
use lexidis::lexprod::{lex_power, lex_product};
use lexidis::{EdgeLabeling, Graph, VertexLabeling};

use crate::files::{read_graph, read_labeling};
use crate::{Context, Failure, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// G[H], one disjoint label block per copy of H
    Thm21,
    /// G[H], copies grouped by LG and relabeled by replacement patterns
    Thm22,
    /// G[H] edges: copies keep LH, cross edges inherit LG
    Thm31,
    /// K_2[H] edges with two labels
    Prop32,
    /// K_{1,n}[H] edges (needs --n)
    Prop33,
    /// P_n[H] edges with two labels (needs --n)
    Prop34,
    /// G[K_2] edges from LG
    Thm35,
    /// G[H] edges with two labels when |V(G)| <= |E(H)| + 1
    Thm36,
    /// G^k edges with two labels (needs --k)
    Power,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Thm21 => "thm21",
            Method::Thm22 => "thm22",
            Method::Thm31 => "thm31",
            Method::Prop32 => "prop32",
            Method::Prop33 => "prop33",
            Method::Prop34 => "prop34",
            Method::Thm35 => "thm35",
            Method::Thm36 => "thm36",
            Method::Power => "power",
        }
    }

    /// Names of the positional graph files.
    fn graphs(self) -> &'static [&'static str] {
        match self {
            Method::Thm21 | Method::Thm22 | Method::Thm31 | Method::Thm36 => &["G", "H"],
            Method::Prop32 | Method::Prop33 | Method::Prop34 => &["H"],
            Method::Thm35 | Method::Power => &["G"],
        }
    }
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    /// Graph files, G then H as the method needs
    pub graphs: Vec<PathBuf>,
    /// Distinguishing labeling of G; computed exactly when absent
    #[arg(long)]
    pub lg: Option<PathBuf>,
    /// Distinguishing labeling of H; computed exactly when absent
    #[arg(long)]
    pub lh: Option<PathBuf>,
    /// Leaves of the star or vertices of the path
    #[arg(long)]
    pub n: Option<usize>,
    /// Power for `--method power`
    #[arg(long)]
    pub k: Option<usize>,
    /// Labeling file to write; stdout by default
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Check the result with the automorphism search
    #[arg(long)]
    pub certify: bool,
}

pub struct Built {
    pub product: Graph,
    pub labeling: Labeling,
}

fn vertex_input(path: Option<&Path>, g: &Graph, flag: &str) -> Result<VertexLabeling, Failure> {
    match path {
        Some(p) => read_labeling(p)?
            .into_vertex_labeling(g.n())
            .ctx(&p.display().to_string()),
        None => Ok(distinguishing_number_exact(g).ctx(flag)?.1),
    }
}

fn edge_input(path: Option<&Path>, g: &Graph, flag: &str) -> Result<EdgeLabeling, Failure> {
    match path {
        Some(p) => match read_labeling(p)? {
            LabelingFile::Edge(l) => Ok(l),
            LabelingFile::Vertex(m) if m.is_empty() => Ok(EdgeLabeling::default()),
            LabelingFile::Vertex(_) => Err(Failure::Usage(format!(
                "{}: expected `e <u> <v> <label>` lines",
                p.display()
            ))),
        },
        None if g.edge_count() == 0 => Ok(EdgeLabeling::default()),
        None => Ok(distinguishing_index_exact(g).ctx(flag)?.1),
    }
}

fn required<T: Copy>(v: Option<T>, method: Method, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--method {} needs {flag}", method.name())))
}

pub fn build(a: &LabelArgs) -> Result<Built, Failure> {
    let m = a.method;
    let names = m.graphs();
    if a.graphs.len() != names.len() {
        return Err(Failure::Usage(format!(
            "--method {} takes {} graph file(s) ({}), got {}",
            m.name(),
            names.len(),
            names.join(", "),
            a.graphs.len()
        )));
    }
    let graphs = a
        .graphs
        .iter()
        .map(|p| read_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let what = format!("--method {}", m.name());
    let (lg, lh) = (a.lg.as_deref(), a.lh.as_deref());
    let built = match m {
        Method::Thm21 | Method::Thm22 => {
            let (g, h) = (&graphs[0], &graphs[1]);
            let lgv = vertex_input(lg, g, "--lg")?;
            let lhv = vertex_input(lh, h, "--lh")?;
            let l = if m == Method::Thm21 {
                label_product_upper(g, h, &lgv, &lhv)
            } else {
                label_thm22(g, h, &lgv, &lhv)
            };
            Built {
                product: lex_product(g, h).ctx(&what)?,
                labeling: Labeling::Vertex(l.ctx(&what)?),
            }
        }
        Method::Thm31 => {
            let (g, h) = (&graphs[0], &graphs[1]);
            let lge = edge_input(lg, g, "--lg")?;
            let lhe = edge_input(lh, h, "--lh")?;
            Built {
                product: lex_product(g, h).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_thm31(g, h, &lge, &lhe).ctx(&what)?),
            }
        }
        Method::Prop32 => {
            let h = &graphs[0];
            Built {
                product: lex_product(&Graph::complete(2).ctx(&what)?, h).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_k2h(h).ctx(&what)?),
            }
        }
        Method::Prop33 => {
            let h = &graphs[0];
            let n = required(a.n, m, "--n")?;
            let lhe = edge_input(lh, h, "--lh")?;
            let star = Graph::star(n).ctx("--n")?;
            Built {
                product: lex_product(&star, h).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_star(n, h, &lhe).ctx(&what)?),
            }
        }
        Method::Prop34 => {
            let h = &graphs[0];
            let n = required(a.n, m, "--n")?;
            let path = Graph::path(n).ctx("--n")?;
            Built {
                product: lex_product(&path, h).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_path(n, h).ctx(&what)?),
            }
        }
        Method::Thm35 => {
            let g = &graphs[0];
            let lge = edge_input(lg, g, "--lg")?;
            Built {
                product: lex_product(g, &Graph::complete(2).ctx(&what)?).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_gp2(g, &lge).ctx(&what)?),
            }
        }
        Method::Thm36 => {
            let (g, h) = (&graphs[0], &graphs[1]);
            Built {
                product: lex_product(g, h).ctx(&what)?,
                labeling: Labeling::Edge(edge_label_small_g(g, h).ctx(&what)?),
            }
        }
        Method::Power => {
            let g = &graphs[0];
            let k = required(a.k, m, "--k")?;
            let l = edge_label_power(g, k).ctx(&what)?;
            Built {
                product: lex_power(g, k).ctx("--k")?,
                labeling: Labeling::Edge(l),
            }
        }
    };
    Ok(built)
}
