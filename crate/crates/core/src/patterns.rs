//! Named small graphs loaded from a text catalog.
//!
//! The catalog is data, not code, so a pattern (notably the diamond `D`)
//! can be overridden at run time without rebuilding. Reports embed the
//! catalog hash so runs with an overridden catalog are distinguishable.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Catalog text compiled into the library and used when no override is given.
pub const DEFAULT_CATALOG_TEXT: &str = include_str!("../data/patterns.txt");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern catalog line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("duplicate pattern name {0:?}")]
    DuplicateName(String),
    #[error("unknown pattern name {0:?}")]
    UnknownName(String),
    #[error("failed to read pattern catalog: {0}")]
    Io(String),
}

/// A named small graph given as an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    order: usize,
    edges: Vec<(usize, usize)>,
    graph: Graph,
}

impl Pattern {
    pub fn new(
        name: impl Into<String>,
        order: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Pattern, String> {
        let name = name.into();
        if order == 0 || order > MAX_VERTICES {
            return Err(format!("order {order} out of range"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u >= order || v >= order {
                return Err(format!("edge {u}-{v} references a vertex >= order {order}"));
            }
            if u == v {
                return Err(format!("loop edge {u}-{v}"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(format!("duplicate edge {u}-{v}"));
            }
        }
        let graph = Graph::from_edges(order, &edges).map_err(|e| e.to_string())?;
        Ok(Pattern {
            name,
            order,
            edges,
            graph,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// An ordered collection of named patterns plus the hash of its source text.
#[derive(Debug, Clone)]
pub struct PatternCatalog {
    patterns: Vec<Pattern>,
    sha256: String,
}

impl PatternCatalog {
    /// The compiled-in catalog.
    pub fn builtin() -> PatternCatalog {
        PatternCatalog::from_text(DEFAULT_CATALOG_TEXT).expect("builtin catalog parses")
    }

    pub fn load(path: &Path) -> Result<PatternCatalog, PatternError> {
        let text = std::fs::read_to_string(path).map_err(|e| PatternError::Io(e.to_string()))?;
        PatternCatalog::from_text(&text)
    }

    pub fn from_text(text: &str) -> Result<PatternCatalog, PatternError> {
        let mut patterns: Vec<Pattern> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, rest) = line.split_once(':').ok_or_else(|| PatternError::Syntax {
                line: line_no,
                reason: "missing ':' after pattern name".into(),
            })?;
            let name = name.trim();
            if name.is_empty() {
                return Err(PatternError::Syntax {
                    line: line_no,
                    reason: "empty pattern name".into(),
                });
            }
            if patterns.iter().any(|p| p.name == name) {
                return Err(PatternError::DuplicateName(name.to_string()));
            }
            let rest = rest.trim();
            let (order_tok, edges_part) = match rest.split_once(char::is_whitespace) {
                Some((o, e)) => (o, e.trim()),
                None => (rest, ""),
            };
            let order: usize = order_tok
                .strip_prefix("order=")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| PatternError::Syntax {
                    line: line_no,
                    reason: format!("expected order=<k> prefix, found {order_tok:?}"),
                })?;
            let mut edges = Vec::new();
            if !edges_part.is_empty() {
                for tok in edges_part.split(',') {
                    let tok = tok.trim();
                    let (u, v) = tok.split_once('-').ok_or_else(|| PatternError::Syntax {
                        line: line_no,
                        reason: format!("bad edge token {tok:?}"),
                    })?;
                    let parse = |s: &str| {
                        s.trim().parse::<usize>().map_err(|_| PatternError::Syntax {
                            line: line_no,
                            reason: format!("bad vertex in edge token {tok:?}"),
                        })
                    };
                    edges.push((parse(u)?, parse(v)?));
                }
            }
            let pattern =
                Pattern::new(name, order, edges).map_err(|reason| PatternError::Syntax {
                    line: line_no,
                    reason,
                })?;
            patterns.push(pattern);
        }
        let mut sha256 = String::with_capacity(64);
        for byte in Sha256::digest(text.as_bytes()) {
            let _ = write!(sha256, "{byte:02x}");
        }
        Ok(PatternCatalog { patterns, sha256 })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn get(&self, name: &str) -> Option<&Pattern> {
        self.patterns.iter().find(|p| p.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&Pattern, PatternError> {
        self.get(name)
            .ok_or_else(|| PatternError::UnknownName(name.to_string()))
    }

    pub fn family(&self, names: &[&str]) -> Result<Vec<&Pattern>, PatternError> {
        names.iter().map(|n| self.require(n)).collect()
    }

    /// Hex SHA-256 of the catalog source text.
    pub fn sha256_hex(&self) -> &str {
        &self.sha256
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_has_the_expected_graphs() {
        let cat = PatternCatalog::builtin();
        for (name, order, edge_count) in [
            ("K2", 2, 1),
            ("P3", 3, 2),
            ("P4", 4, 3),
            ("C4", 4, 4),
            ("C5", 5, 5),
            ("C6", 6, 6),
            ("C7", 7, 7),
            ("P3+K2", 5, 3),
            ("3K2", 6, 3),
            ("3P3", 9, 6),
            ("D", 4, 5),
            ("2D", 8, 10),
        ] {
            let p = cat.require(name).unwrap();
            assert_eq!(p.order(), order, "{name}");
            assert_eq!(p.graph().edge_count(), edge_count, "{name}");
        }
        assert_eq!(cat.get("C4").unwrap().graph(), &Graph::cycle(4).unwrap());
        assert_eq!(cat.get("P4").unwrap().graph(), &Graph::path(4).unwrap());
    }

    #[test]
    fn the_diamond_is_k4_minus_one_edge() {
        let cat = PatternCatalog::builtin();
        let d = cat.get("D").unwrap().graph();
        assert_eq!(d.n(), 4);
        assert_eq!(d.edge_count(), 5);
        // Exactly one non-adjacent pair.
        let non_edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .filter(|&(u, v)| !d.has_edge(u, v))
            .collect();
        assert_eq!(non_edges.len(), 1);
    }

    #[test]
    fn syntax_errors_name_lines() {
        assert!(matches!(
            PatternCatalog::from_text("X order=2 0-1"),
            Err(PatternError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            PatternCatalog::from_text("X: 0-1"),
            Err(PatternError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            PatternCatalog::from_text("X: order=2 0-2"),
            Err(PatternError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            PatternCatalog::from_text("X: order=2 0-1\nX: order=2 0-1"),
            Err(PatternError::DuplicateName(_))
        ));
        assert!(matches!(
            PatternCatalog::from_text("X: order=2 0-1, 1-0"),
            Err(PatternError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn edgeless_pattern_line_parses() {
        let cat = PatternCatalog::from_text("K1: order=1\n").unwrap();
        assert_eq!(cat.get("K1").unwrap().graph().n(), 1);
    }

    #[test]
    fn hash_tracks_source_text() {
        let a = PatternCatalog::from_text("X: order=2 0-1\n").unwrap();
        let b = PatternCatalog::from_text("X: order=2  0-1\n").unwrap();
        assert_ne!(a.sha256_hex(), b.sha256_hex());
        assert_eq!(a.sha256_hex().len(), 64);
    }
}
