//! Canonical forms: the lexicographically least graph6 encoding of a graph
//! over all vertex permutations.
//!
//! The search places vertices one position at a time. Because the graph6
//! body is column-major, placing position `d` fixes exactly the `d` bits
//! against earlier positions, so a partial labeling pins a prefix of the
//! encoding and any branch whose prefix exceeds the best known encoding is
//! cut. Candidates are visited low-degree-first (with the neighbor-degree
//! multiset as a tiebreak), which finds a near-minimal leaf early, and a
//! sibling is skipped when transposing it with an already-tried sibling is
//! an automorphism.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6::{pack_graph6, parse_graph6};

/// The least graph6 encoding of a graph over all vertex permutations.
///
/// Equal keys exactly for isomorphic graphs; byte order sorts first by
/// order (the header byte) and then by the encoded body.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    pub(crate) fn from_string(s: String) -> CanonicalKey {
        CanonicalKey(s)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.0)
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey(pack_graph6(g.n(), &canonical_body(g)))
}

/// The canonically labeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    parse_graph6(canonical_key(g).as_str()).expect("canonical key is valid graph6")
}

pub(crate) fn canonical_body(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let total_bits = n * (n - 1) / 2;
    let mut search = Search {
        g,
        n,
        pref: preference_order(g),
        best: Vec::new(),
        have_best: false,
        cur: Vec::with_capacity(total_bits),
        placed: Vec::with_capacity(n),
        used: 0,
    };
    search.dfs();
    debug_assert!(search.have_best);
    search.best
}

/// Whether some labeling that achieves the canonical `body` puts `pinned`
/// at the last position. Only labelings matching `body` bit for bit are
/// explored, so this is far cheaper than a second full search.
pub(crate) fn pinned_can_be_last(g: &Graph, pinned: usize, body: &[u8]) -> bool {
    let n = g.n();
    let mut search = MatchSearch {
        g,
        n,
        pinned,
        body,
        placed: Vec::with_capacity(n),
        used: 0,
        bits_done: 0,
    };
    search.dfs()
}

/// Vertices sorted ascending by degree, then by the sorted multiset of
/// neighbor degrees, then by index. Low-degree-first prefixes tend to be
/// bit-minimal, so the first leaf reached is already close to optimal.
fn preference_order(g: &Graph) -> Vec<usize> {
    let degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut keyed: Vec<(usize, Vec<usize>, usize)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| degs[u]).collect();
            nd.sort_unstable();
            (degs[v], nd, v)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, v)| v).collect()
}

/// Transposing `u` and `v` is an automorphism iff their adjacency rows
/// agree outside the pair itself (covers both twin kinds).
fn swap_is_automorphism(g: &Graph, u: usize, v: usize) -> bool {
    let bu = 1u32 << u;
    let bv = 1u32 << v;
    g.adj_bits(u) & !bv == g.adj_bits(v) & !bu
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    pref: Vec<usize>,
    best: Vec<u8>,
    have_best: bool,
    cur: Vec<u8>,
    placed: Vec<usize>,
    used: u32,
}

impl Search<'_> {
    fn dfs(&mut self) {
        let d = self.placed.len();
        if d == self.n {
            if !self.have_best || self.cur < self.best {
                self.best = self.cur.clone();
                self.have_best = true;
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for idx in 0..self.n {
            let v = self.pref[idx];
            if self.used & (1u32 << v) != 0 {
                continue;
            }
            if tried.iter().any(|&u| swap_is_automorphism(self.g, u, v)) {
                continue;
            }
            tried.push(v);

            let base = self.cur.len();
            for i in 0..d {
                self.cur.push(self.g.has_edge(self.placed[i], v) as u8);
            }
            let viable = !self.have_best || self.cur[..] <= self.best[..self.cur.len()];
            if viable {
                self.placed.push(v);
                self.used |= 1u32 << v;
                self.dfs();
                self.used &= !(1u32 << v);
                self.placed.pop();
            }
            self.cur.truncate(base);
        }
    }
}

struct MatchSearch<'a> {
    g: &'a Graph,
    n: usize,
    pinned: usize,
    body: &'a [u8],
    placed: Vec<usize>,
    used: u32,
    bits_done: usize,
}

impl MatchSearch<'_> {
    fn dfs(&mut self) -> bool {
        let d = self.placed.len();
        if d == self.n {
            return true;
        }
        let mut tried: Vec<usize> = Vec::new();
        'cand: for v in 0..self.n {
            if self.used & (1u32 << v) != 0 {
                continue;
            }
            if v == self.pinned && d != self.n - 1 {
                continue;
            }
            if tried.iter().any(|&u| swap_is_automorphism(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            for i in 0..d {
                let bit = self.g.has_edge(self.placed[i], v) as u8;
                if bit != self.body[self.bits_done + i] {
                    continue 'cand;
                }
            }
            self.placed.push(v);
            self.used |= 1u32 << v;
            self.bits_done += d;
            if self.dfs() {
                return true;
            }
            self.bits_done -= d;
            self.used &= !(1u32 << v);
            self.placed.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn relabeling_invariance() {
        let c4 = Graph::cycle(4).unwrap();
        // 0-2-1-3-0 relabeling of the same cycle.
        let c4_alt = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&c4), canonical_key(&c4_alt));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_key(&c5.complement()), canonical_key(&c5));
        assert!(crate::oracle::are_isomorphic(&c5.complement(), &c5));
    }

    #[test]
    fn different_graphs_different_keys() {
        let p4 = Graph::path(4).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4), canonical_key(&star));
    }

    #[test]
    fn key_is_minimum_over_all_labelings_small() {
        // Exhaustive check against a plain minimum over all 4! labelings.
        let perms4: Vec<Vec<usize>> = permutations(4);
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::path(4).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::edgeless(4).unwrap(),
        ] {
            let min = perms4
                .iter()
                .map(|p| crate::graph6::emit_graph6(&g.permuted(p)))
                .min()
                .unwrap();
            assert_eq!(canonical_key(&g).as_str(), min);
        }
    }

    #[test]
    fn three_edge_graphs_on_four_vertices_have_three_classes() {
        // All 64 labeled 4-vertex graphs with exactly 3 edges fall into
        // P4, K1,3, and K3 + K1.
        let mut keys = std::collections::BTreeSet::new();
        let mut count = 0;
        for mask in 0u32..64 {
            if mask.count_ones() != 3 {
                continue;
            }
            count += 1;
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            keys.insert(canonical_key(&Graph::from_edges(4, &edges).unwrap()));
        }
        assert_eq!(count, 20);
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn canonical_form_is_isomorphic_fixed_point() {
        let g = Graph::from_edges(5, &[(0, 4), (4, 2), (2, 1), (1, 3)]).unwrap();
        let c = canonical_form(&g);
        assert_eq!(canonical_key(&c), canonical_key(&g));
        assert_eq!(crate::graph6::emit_graph6(&c), canonical_key(&g).as_str());
    }

    #[test]
    fn pinned_match_detects_which_vertex_can_be_last() {
        // The minimal labeling of a star puts the center last (edge bits as
        // late as possible), so the center can be the final vertex of a
        // minimal labeling but a leaf cannot.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let body = canonical_body(&star);
        assert!(pinned_can_be_last(&star, 0, &body));
        assert!(!pinned_can_be_last(&star, 1, &body));
    }

    #[test]
    fn induced_subgraph_keys_match_isomorphic_patterns() {
        let c4 = Graph::cycle(4).unwrap();
        let p3 = c4.induced(VertexSet::from_vertices(&[1, 2, 3])).unwrap();
        assert_eq!(canonical_key(&p3), canonical_key(&Graph::path(3).unwrap()));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        heap_permute(&mut items, n, &mut out);
        out
    }

    fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap_permute(items, k - 1, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
}
