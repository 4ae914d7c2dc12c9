//! Canonical labels, exhaustive enumeration of non-isomorphic connected
//! graphs, and ingestion of external graph6 corpora.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};

/// Cap for canonical labeling (exact permutation search).
pub const CANONICAL_MAX: usize = 10;
/// Cap for built-in enumeration; larger inputs must come from a corpus.
pub const ENUMERATION_MAX: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("canonical labeling supports n <= {CANONICAL_MAX}, got {0}")]
    CanonicalTooLarge(usize),
    #[error("built-in enumeration supports n <= {ENUMERATION_MAX}, got {0}; supply a corpus for larger graphs")]
    EnumerationTooLarge(usize),
}

/// Isomorphism-invariant key: the vertex count followed by the
/// lexicographically minimal upper-triangle adjacency bit string (column-major,
/// as in graph6) over all vertex orderings, packed eight bits per byte.
///
/// Two graphs have equal labels iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Search state for the minimal-string search: `best` holds, per depth, the
/// smallest column value seen on any completed prefix (`u64::MAX` = not yet
/// reached); a column at depth `j` is the `j` adjacency bits between the
/// vertex placed at position `j` and the ones placed before it.
struct Minimizer<'a> {
    g: &'a Graph,
    n: usize,
    best: Vec<u64>,
    best_perm: Vec<usize>,
    placed: Vec<usize>,
}

impl Minimizer<'_> {
    fn run(g: &Graph) -> (Vec<u64>, Vec<usize>) {
        let n = g.n();
        let mut s = Minimizer {
            g,
            n,
            best: vec![u64::MAX; n.max(1)],
            best_perm: vec![0; n],
            placed: Vec::with_capacity(n),
        };
        s.dfs(0);
        (s.best, s.best_perm)
    }

    fn dfs(&mut self, used: u64) {
        let j = self.placed.len();
        if j == self.n {
            self.best_perm.copy_from_slice(&self.placed);
            return;
        }
        // Candidate columns, smallest first: only the minimal group survives
        // the prefix comparison, so sorting prunes everything else at once.
        let mut cands: Vec<(u64, usize)> = (0..self.n)
            .filter(|&u| used & (1 << u) == 0)
            .map(|u| {
                let mut col = 0u64;
                for (i, &p) in self.placed.iter().enumerate() {
                    col |= u64::from(self.g.has_edge(p, u)) << (j - 1 - i);
                }
                (col, u)
            })
            .collect();
        cands.sort_unstable();
        for (col, u) in cands {
            if col > self.best[j] {
                break;
            }
            if col < self.best[j] {
                self.best[j] = col;
                for t in (j + 1)..self.n {
                    self.best[t] = u64::MAX;
                }
            }
            self.placed.push(u);
            self.dfs(used | (1 << u));
            self.placed.pop();
        }
    }
}

fn pack_label(n: usize, cols: &[u64]) -> CanonicalLabel {
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (j, &col) in cols.iter().enumerate().skip(1) {
        for i in 0..j {
            acc = (acc << 1) | ((col >> (j - 1 - i)) & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalLabel(bytes)
}

/// Minimal adjacency string over all vertex orderings; deterministic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel, EnumError> {
    if g.n() > CANONICAL_MAX {
        return Err(EnumError::CanonicalTooLarge(g.n()));
    }
    let (cols, _) = Minimizer::run(g);
    Ok(pack_label(g.n(), &cols))
}

/// The canonical representative itself: a relabeling of `g` whose direct
/// encoding equals `canonical_form(g)`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, EnumError> {
    if g.n() > CANONICAL_MAX {
        return Err(EnumError::CanonicalTooLarge(g.n()));
    }
    let (_, perm) = Minimizer::run(g);
    Ok(g.relabeled(&perm))
}

/// All non-isomorphic graphs (connected or not) on exactly `n` vertices, as
/// canonical representatives sorted by label. Levels are built by extending
/// the previous level with one new vertex over every possible neighborhood and
/// rejecting duplicates by canonical label; results are cached per process.
///
/// The cache lock is never held while building, so concurrent callers may
/// duplicate work but can never deadlock the worker pool; results are
/// deterministic either way.
fn all_graphs(n: usize) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    debug_assert!((1..=ENUMERATION_MAX).contains(&n));
    let cache = CACHE.get_or_init(Default::default);
    if let Some(level) = cache.lock().unwrap().get(&n) {
        return level.clone();
    }
    let level = if n == 1 {
        vec![Graph::empty(1).unwrap()]
    } else {
        let prev = all_graphs(n - 1);
        let reps: Vec<(CanonicalLabel, Graph)> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (0..(1u64 << (n - 1))).map(move |nbhd| {
                    let mut edges = g.edges();
                    let mut mask = nbhd;
                    while mask != 0 {
                        let v = mask.trailing_zeros() as usize;
                        edges.push((v, n - 1));
                        mask &= mask - 1;
                    }
                    Graph::from_edges(n, &edges).unwrap()
                })
            })
            .map(|h| {
                let rep = canonical_graph(&h).unwrap();
                (canonical_form(&rep).unwrap(), rep)
            })
            .collect();
        // Identical labels carry identical canonical representatives, so
        // dedup order does not matter; the BTreeMap sorts by label.
        let mut by_label = BTreeMap::new();
        for (label, rep) in reps {
            by_label.entry(label).or_insert(rep);
        }
        by_label.into_values().collect()
    };
    let mut locked = cache.lock().unwrap();
    locked.entry(n).or_insert_with(|| Arc::new(level)).clone()
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices (filtered to exactly `m` edges when given), in label order.
pub fn enumerate_connected(n: usize, m: Option<usize>) -> Result<Vec<Graph>, EnumError> {
    if n == 0 || n > ENUMERATION_MAX {
        return Err(EnumError::EnumerationTooLarge(n));
    }
    Ok(all_graphs(n)
        .iter()
        .filter(|g| g.is_connected() && m.is_none_or(|m| g.m() == m))
        .cloned()
        .collect())
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Streaming reader over a graph6 corpus: one record per line, blank lines and
/// a `">>graph6<<"` header line skipped, 1-based line numbers retained.
pub struct CorpusReader<R> {
    reader: R,
    line: usize,
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<(usize, Graph), CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let mut buf = String::new();
            self.line += 1;
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            let record = buf.trim();
            if record.is_empty() || record == ">>graph6<<" {
                continue;
            }
            return Some(match parse_graph6(record) {
                Ok(g) => Ok((self.line, g)),
                Err(e) => Err(CorpusError::Parse {
                    line: self.line,
                    source: e,
                }),
            });
        }
    }
}

/// Open a newline-delimited graph6 corpus file.
pub fn ingest_corpus(path: &Path) -> io::Result<CorpusReader<BufReader<File>>> {
    Ok(corpus_reader(BufReader::new(File::open(path)?)))
}

/// Corpus stream over any buffered reader (for tests and stdin).
pub fn corpus_reader<R: BufRead>(reader: R) -> CorpusReader<R> {
    CorpusReader { reader, line: 0 }
}
