//! Reading and writing graph and labeling files; `-` is stdin/stdout.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::ValueEnum;
use lexidis::io::{parse_graph, parse_labeling, GraphFormat, LabelingFile};
use lexidis::Graph;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// graph6
    G6,
    /// `p`/`e` edge list
    El,
}

fn is_stdio(p: &Path) -> bool {
    p.as_os_str() == "-"
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    let res = if is_stdio(path) {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Format is sniffed from the first byte.
pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn read_labeling(path: &Path) -> Result<LabelingFile, Failure> {
    let text = read_text(path)?;
    parse_labeling(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or stdout when absent or `-`.
pub fn write_text(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if !is_stdio(p) => {
            fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

/// `--format` wins, then a `.g6` extension; edge list otherwise.
pub fn output_format(path: Option<&Path>, flag: Option<Format>) -> GraphFormat {
    match flag {
        Some(Format::G6) => GraphFormat::Graph6,
        Some(Format::El) => GraphFormat::EdgeList,
        None => match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("g6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        },
    }
}
