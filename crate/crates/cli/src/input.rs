//! Graph and argument intake for the single-graph subcommands.

use bindfactor_core::family::{generate, FamilySpec};
use bindfactor_core::graph6::{parse_graph6, write_graph6};
use bindfactor_core::{Graph, VertexSet};
use std::io::Read;

/// Usage and computation errors, tagged with the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<bindfactor_core::Error> for CliError {
    fn from(e: bindfactor_core::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

/// Reads the input graph: either `--gen SPEC` or a positional path
/// (`-` for stdin) holding exactly one graph6 line. Returns the graph and
/// its canonical graph6 encoding.
pub fn read_graph(input: Option<&str>, gen: Option<&str>) -> Result<(Graph, String), CliError> {
    match (input, gen) {
        (Some(_), Some(_)) => Err(CliError::usage(
            "give either an input file or --gen, not both",
        )),
        (None, None) => Err(CliError::usage(
            "missing graph input: pass a file, '-' for stdin, or --gen FAMILY:params",
        )),
        (None, Some(spec)) => {
            let spec: FamilySpec = spec.parse()?;
            let g = generate(&spec)?;
            let text = write_graph6(&g).map_err(|e| {
                CliError::usage(format!("generated graph cannot be encoded: {e}"))
            })?;
            Ok((g, text))
        }
        (Some(path), None) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{path}: {e}")))?
            };
            let lines: Vec<&str> = text.lines().map(str::trim_end).filter(|l| !l.is_empty()).collect();
            match lines.as_slice() {
                [] => Err(CliError::usage("input contains no graph6 line")),
                [line] => {
                    let g = parse_graph6(line).map_err(|e| CliError::usage(e.to_string()))?;
                    Ok((g, line.to_string()))
                }
                _ => Err(CliError::usage(
                    "input contains several graph6 lines; single-graph commands take one",
                )),
            }
        }
    }
}

/// Parses a comma-separated vertex list like `0,1,4`.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, CliError> {
    let mut out = VertexSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|_| CliError::usage(format!("bad vertex label '{part}'")))?;
        if v >= n {
            return Err(CliError::usage(format!(
                "vertex {v} out of range for a graph of order {n}"
            )));
        }
        out.insert(v);
    }
    Ok(out)
}
