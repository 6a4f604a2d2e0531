//! Dataset readers, writers, and the preprocessing pipeline.
//!
//! Two input formats are supported:
//!
//! * the three-file simplex layout (`<name>-nverts.txt`, `<name>-simplices.txt`,
//!   optional `<name>-times.txt`): one hyperedge size per line, and a
//!   whitespace-separated stream of node ids consumed in those sizes. Times
//!   are ignored;
//! * a plain hyperedge list: one hyperedge per line, labels separated by
//!   spaces, tabs or commas, `#` starting a comment.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Benson,
    Edgelist,
}

/// Hyperedges exactly as read, in file order, duplicates included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEdgeList {
    pub edges: Vec<Vec<String>>,
    pub format: Format,
    pub paths: Vec<PathBuf>,
    /// Non-fatal issues met while reading.
    pub warnings: Vec<String>,
}

impl RawEdgeList {
    pub fn new(edges: Vec<Vec<String>>, format: Format) -> Self {
        RawEdgeList {
            edges,
            format,
            paths: Vec::new(),
            warnings: Vec::new(),
        }
    }

    /// Raw view of an existing hypergraph.
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        RawEdgeList::new(h.label_edges(), Format::Edgelist)
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_owned(),
        source,
    }
}

/// Reads the nverts/simplices pair. A times file, if present, is not read.
pub fn parse_benson(nverts_path: &Path, simplices_path: &Path) -> Result<RawEdgeList> {
    let mut raw = parse_benson_from(
        open(nverts_path)?,
        nverts_path,
        open(simplices_path)?,
        simplices_path,
    )?;
    raw.paths = vec![nverts_path.to_owned(), simplices_path.to_owned()];
    Ok(raw)
}

/// [`parse_benson`] over arbitrary readers; the paths only label errors.
pub fn parse_benson_from<A: BufRead, B: BufRead>(
    nverts: A,
    nverts_path: &Path,
    simplices: B,
    simplices_path: &Path,
) -> Result<RawEdgeList> {
    let mut sizes = Vec::new();
    for (k, line) in nverts.lines().enumerate() {
        let line = line.map_err(io_err(nverts_path))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let size: usize = line.parse().map_err(|_| {
            Error::parse(nverts_path, k + 1, format!("expected a positive integer, found `{line}`"))
        })?;
        if size == 0 {
            return Err(Error::parse(nverts_path, k + 1, "hyperedge size must be positive"));
        }
        sizes.push((size, k + 1));
    }

    let mut tokens = Vec::new();
    let mut last_line = 0;
    for (k, line) in simplices.lines().enumerate() {
        let line = line.map_err(io_err(simplices_path))?;
        last_line = k + 1;
        for tok in line.split_whitespace() {
            if tok.parse::<u64>().is_err() {
                return Err(Error::parse(
                    simplices_path,
                    k + 1,
                    format!("expected a non-negative integer node id, found `{tok}`"),
                ));
            }
            tokens.push(tok.to_owned());
        }
    }

    let declared: usize = sizes.iter().map(|(s, _)| s).sum();
    if tokens.len() < declared {
        let mut consumed = 0;
        let line = sizes
            .iter()
            .find(|(s, _)| {
                consumed += s;
                consumed > tokens.len()
            })
            .map_or(0, |&(_, l)| l);
        return Err(Error::parse(
            nverts_path,
            line,
            format!(
                "stream shorter than declared: sizes sum to {declared} but {} holds {} ids",
                simplices_path.display(),
                tokens.len()
            ),
        ));
    }
    if tokens.len() > declared {
        return Err(Error::parse(
            simplices_path,
            last_line,
            format!(
                "stream longer than declared: sizes sum to {declared} but the stream holds {} ids",
                tokens.len()
            ),
        ));
    }

    let mut stream = tokens.into_iter();
    let edges = sizes
        .iter()
        .map(|&(s, _)| stream.by_ref().take(s).collect())
        .collect();
    Ok(RawEdgeList::new(edges, Format::Benson))
}

/// Reads a plain hyperedge list from a file.
pub fn parse_edgelist(path: &Path) -> Result<RawEdgeList> {
    let mut raw = parse_edgelist_from(open(path)?, path)?;
    raw.paths = vec![path.to_owned()];
    Ok(raw)
}

/// [`parse_edgelist`] over an arbitrary reader. Repeated labels within a line
/// are collapsed with a warning; blank and comment-only lines are skipped.
pub fn parse_edgelist_from<R: BufRead>(reader: R, path: &Path) -> Result<RawEdgeList> {
    let mut edges = Vec::new();
    let mut warnings = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        let content = line.split('#').next().unwrap_or("");
        let mut labels: Vec<String> = Vec::new();
        let mut repeated = false;
        for tok in content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if labels.iter().any(|l| l == tok) {
                repeated = true;
            } else {
                labels.push(tok.to_owned());
            }
        }
        if labels.is_empty() {
            continue;
        }
        if repeated {
            let msg = format!("{}:{}: repeated label collapsed", path.display(), k + 1);
            log::warn!("{msg}");
            warnings.push(msg);
        }
        edges.push(labels);
    }
    Ok(RawEdgeList {
        edges,
        format: Format::Edgelist,
        paths: Vec::new(),
        warnings,
    })
}

/// Locates the nverts and simplices files for a dataset given as a
/// directory, a `<dir>/<name>` prefix, or the nverts file itself.
pub fn benson_paths(input: &Path) -> Result<(PathBuf, PathBuf)> {
    let not_found = |msg: String| Error::Io {
        path: input.to_owned(),
        source: io::Error::new(io::ErrorKind::NotFound, msg),
    };
    let nverts = if input.is_dir() {
        let mut found: Vec<PathBuf> = std::fs::read_dir(input)
            .map_err(io_err(input))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.ends_with("-nverts.txt"))
            })
            .collect();
        found.sort();
        match found.len() {
            1 => found.pop().unwrap(),
            0 => return Err(not_found("no *-nverts.txt file in directory".into())),
            _ => return Err(not_found("several *-nverts.txt files in directory".into())),
        }
    } else {
        let s = input.to_string_lossy();
        if s.ends_with("-nverts.txt") {
            input.to_owned()
        } else {
            PathBuf::from(format!("{s}-nverts.txt"))
        }
    };
    let s = nverts.to_string_lossy();
    let simplices = PathBuf::from(format!("{}-simplices.txt", &s[..s.len() - "-nverts.txt".len()]));
    if !nverts.is_file() {
        return Err(not_found(format!("missing {}", nverts.display())));
    }
    if !simplices.is_file() {
        return Err(not_found(format!("missing {}", simplices.display())));
    }
    Ok((nverts, simplices))
}

/// Preprocessing switches. Duplicate-hyperedge removal always runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PreprocessOptions {
    pub drop_singletons: bool,
    pub take_lcc: bool,
}

impl Default for PreprocessOptions {
    fn default() -> Self {
        PreprocessOptions {
            drop_singletons: false,
            take_lcc: true,
        }
    }
}

/// What preprocessing removed. `raw_edge_count` always equals
/// `edges + duplicates_removed + singletons_removed + edges_dropped_by_lcc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub options: PreprocessOptions,
    pub raw_edge_count: usize,
    /// Hyperedges that had a repeated label collapsed.
    pub edges_with_repeated_labels: usize,
    pub duplicates_removed: usize,
    pub singletons_removed: usize,
    pub nodes_dropped_by_lcc: usize,
    pub edges_dropped_by_lcc: usize,
    pub nodes: usize,
    pub edges: usize,
    pub bipartite_edges: usize,
}

impl Provenance {
    pub fn balances(&self) -> bool {
        self.raw_edge_count
            == self.edges
                + self.duplicates_removed
                + self.singletons_removed
                + self.edges_dropped_by_lcc
    }
}

/// Runs, in order: in-edge label dedup, optional singleton drop, duplicate
/// hyperedge removal (first occurrence kept), optional LCC extraction.
pub fn preprocess(raw: &RawEdgeList, opts: PreprocessOptions) -> Result<(Hypergraph, Provenance)> {
    let mut edges_with_repeated_labels = 0;
    let mut singletons_removed = 0;
    let mut kept: Vec<Vec<&str>> = Vec::with_capacity(raw.edges.len());
    for (index, edge) in raw.edges.iter().enumerate() {
        let mut labels: Vec<&str> = Vec::with_capacity(edge.len());
        for l in edge {
            if !labels.contains(&l.as_str()) {
                labels.push(l);
            }
        }
        if labels.len() < edge.len() {
            edges_with_repeated_labels += 1;
        }
        if labels.is_empty() {
            return Err(Error::EmptyEdge { index });
        }
        if opts.drop_singletons && labels.len() == 1 {
            singletons_removed += 1;
            continue;
        }
        kept.push(labels);
    }
    if kept.is_empty() {
        return Err(Error::NothingLeft);
    }
    let (h, duplicates_removed) = Hypergraph::build(kept)?;
    let (h, nodes_dropped_by_lcc, edges_dropped_by_lcc) = if opts.take_lcc {
        h.lcc_with_counts()
    } else {
        (h, 0, 0)
    };
    let stats = h.summary_stats();
    let prov = Provenance {
        options: opts,
        raw_edge_count: raw.edges.len(),
        edges_with_repeated_labels,
        duplicates_removed,
        singletons_removed,
        nodes_dropped_by_lcc,
        edges_dropped_by_lcc,
        nodes: stats.nodes,
        edges: stats.edges,
        bipartite_edges: stats.bipartite_edges,
    };
    debug_assert!(prov.balances());
    Ok((h, prov))
}

/// Writes hyperedges one per line, labels separated by single spaces.
pub fn write_edgelist<W: Write>(edges: &[Vec<String>], mut out: W) -> io::Result<()> {
    for e in edges {
        writeln!(out, "{}", e.join(" "))?;
    }
    Ok(())
}

/// Writes the nverts and simplices streams (one id per line).
pub fn write_benson<A: Write, B: Write>(
    edges: &[Vec<String>],
    mut nverts: A,
    mut simplices: B,
) -> io::Result<()> {
    for e in edges {
        writeln!(nverts, "{}", e.len())?;
        for l in e {
            writeln!(simplices, "{l}")?;
        }
    }
    Ok(())
}
