use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};

use symlab::graph::edgelist::{emit_edge_list, parse_edge_list};
use symlab::graph::graph6::{emit_graph6, parse_graph6};
use symlab::graph::FamilySpec;
use symlab::Graph;

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Named family, e.g. `friendship:5` or `corona:(path:3),(complete:2)`.
    #[arg(long)]
    pub family: Option<String>,
    /// graph6 string; `-` reads the first line of stdin.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge-list file (`n m` header, one edge per line); `-` for stdin.
    #[arg(long)]
    pub edgelist: Option<PathBuf>,
}

pub fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse()?;
            return Ok(spec.build()?);
        }
        if let Some(g6) = &self.g6 {
            let text = if g6 == "-" {
                read_source(Path::new("-"))?
            } else {
                g6.clone()
            };
            let line = text.lines().next().unwrap_or("");
            return Ok(parse_graph6(line.trim())?);
        }
        if let Some(path) = &self.edgelist {
            return Ok(parse_edge_list(&read_source(path)?)?);
        }
        bail!("no graph given")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

pub fn parse_as(format: Format, text: &str) -> Result<Graph> {
    Ok(match format {
        Format::Edgelist => parse_edge_list(text)?,
        Format::Graph6 => {
            let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            match lines.as_slice() {
                [line] => parse_graph6(line.trim())?,
                [] => bail!("empty graph6 input"),
                _ => bail!("expected one graph6 line, got {}", lines.len()),
            }
        }
    })
}

pub fn emit_as(format: Format, g: &Graph) -> String {
    match format {
        Format::Edgelist => emit_edge_list(g),
        Format::Graph6 => format!("{}\n", emit_graph6(g)),
    }
}
