use std::io::Read;
use std::path::Path;

use dgas_core::graph::{enumerate_graphs, parse_edge_list, parse_graph6, Graph, ENUM_MAX_ORDER};
use dgas_core::par::Execution;

use crate::args::{CorpusInput, GraphInput, InputFormat};
use crate::Failure;

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

/// Non-blank lines with their 1-based line numbers.
pub fn graph6_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_one(text: &str, format: InputFormat) -> Result<Graph, Failure> {
    match format {
        InputFormat::Edgelist => parse_edge_list(text).map_err(|e| Failure::input(e.to_string())),
        InputFormat::Graph6 => {
            let mut lines = graph6_lines(text);
            let (_, first) = lines.next().ok_or_else(|| Failure::input("no graph in input"))?;
            if lines.next().is_some() {
                return Err(Failure::input("expected exactly one graph; use `batch` for lists"));
            }
            parse_graph6(first).map_err(|e| Failure::input(e.to_string()))
        }
    }
}

pub fn single_graph(src: &GraphInput, format: InputFormat) -> Result<Graph, Failure> {
    match (&src.graph, &src.input) {
        (Some(inline), _) => parse_one(&inline.replace(';', "\n"), format),
        (None, Some(path)) => parse_one(&read_text(path)?, format),
        (None, None) => Err(Failure::usage("supply --graph or an input file")),
    }
}

pub fn corpus(src: &CorpusInput, format: InputFormat, exec: Execution) -> Result<Vec<Graph>, Failure> {
    match (src.n, &src.input) {
        (Some(n), _) => {
            if n == 0 || n > ENUM_MAX_ORDER {
                return Err(Failure::usage(format!(
                    "--n must be between 1 and {ENUM_MAX_ORDER}; pass a graph6 file for larger orders"
                )));
            }
            enumerate_graphs(n, src.connected, exec).map_err(|e| Failure::input(e.to_string()))
        }
        (None, Some(path)) => {
            if format != InputFormat::Graph6 {
                return Err(Failure::usage("graph lists must be graph6, one graph per line"));
            }
            let text = read_text(path)?;
            graph6_lines(&text)
                .map(|(line, s)| {
                    parse_graph6(s).map_err(|e| Failure::input(format!("line {line}: {e}")))
                })
                .collect()
        }
        (None, None) => Err(Failure::usage("supply --n or a graph6 file")),
    }
}
