//! Pseudoachromatic and achromatic numbers: the most classes over complete
//! (and, for achromatic, proper) colorings.
//!
//! The search assigns vertices in index order and may open class `c + 1`
//! only when classes up to `c` are in use, so each set partition is tried
//! once. Class-pair coverage is tracked incrementally; a branch dies when
//! the pairs still uncovered outnumber the edges that still have an
//! unassigned endpoint.

use crate::graph::{Graph, VertexSet};
use crate::solvers::ColoringPartition;

pub fn pseudoachromatic_number(g: &Graph) -> u32 {
    pseudoachromatic_coloring(g).k() as u32
}

/// A complete coloring with the most classes.
pub fn pseudoachromatic_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=pair_bound(g)).rev() {
        if let Some(classes) = complete_coloring(g, k, false) {
            return ColoringPartition::new(classes);
        }
    }
    unreachable!("the one-class coloring is complete")
}

pub fn achromatic_number(g: &Graph) -> u32 {
    achromatic_coloring(g).k() as u32
}

/// A proper complete coloring with the most classes.
pub fn achromatic_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=pair_bound(g)).rev() {
        if let Some(classes) = complete_coloring(g, k, true) {
            return ColoringPartition::new(classes);
        }
    }
    unreachable!("a minimum proper coloring is complete")
}

/// `k` classes need `k(k-1)/2` distinct witness edges.
fn pair_bound(g: &Graph) -> usize {
    let e = g.edge_count();
    let mut k = g.n();
    while k * (k - 1) / 2 > e {
        k -= 1;
    }
    k
}

fn complete_coloring(g: &Graph, k: usize, proper: bool) -> Option<Vec<VertexSet>> {
    let n = g.n();
    // suffix_edges[i]: edges with at least one endpoint >= i; pairs not yet
    // covered when vertex i is reached must each consume one of them.
    let mut suffix_edges = vec![0usize; n + 1];
    for i in (0..n).rev() {
        let below = g.neighbors(i).bits() & ((1u32 << i) - 1);
        suffix_edges[i] = suffix_edges[i + 1] + below.count_ones() as usize;
    }
    let mut search = Search {
        g,
        k,
        proper,
        needed: k * (k - 1) / 2,
        covered: 0,
        classes: Vec::with_capacity(k),
        cov: vec![0u32; k],
        suffix_edges,
        found: None,
    };
    search.assign(0);
    search
        .found
        .map(|cl| cl.into_iter().map(VertexSet::from_bits).collect())
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    proper: bool,
    needed: usize,
    covered: usize,
    classes: Vec<u32>,
    cov: Vec<u32>,
    suffix_edges: Vec<usize>,
    found: Option<Vec<u32>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if v == n {
            if self.classes.len() == self.k && self.covered == self.needed {
                self.found = Some(self.classes.clone());
                return true;
            }
            return false;
        }
        if self.classes.len() + (n - v) < self.k {
            return false;
        }
        if self.needed - self.covered > self.suffix_edges[v] {
            return false;
        }
        let adj = self.g.adj_bits(v);
        for c in 0..self.classes.len() {
            if self.proper && self.classes[c] & adj != 0 {
                continue;
            }
            if self.place(v, c) {
                return true;
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(0);
            let c = self.classes.len() - 1;
            if self.place(v, c) {
                return true;
            }
            self.classes.pop();
        }
        false
    }

    fn place(&mut self, v: usize, c: usize) -> bool {
        let adj = self.g.adj_bits(v);
        self.classes[c] |= 1 << v;
        let mut newly = 0u32;
        for d in 0..self.classes.len() {
            if d != c && adj & self.classes[d] != 0 && self.cov[c] >> d & 1 == 0 {
                self.cov[c] |= 1 << d;
                self.cov[d] |= 1 << c;
                self.covered += 1;
                newly |= 1 << d;
            }
        }
        if self.assign(v + 1) {
            return true;
        }
        for d in VertexSet::from_bits(newly).iter() {
            self.cov[c] &= !(1 << d);
            self.cov[d] &= !(1 << c);
            self.covered -= 1;
        }
        self.classes[c] &= !(1 << v);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(pseudoachromatic_number(&c4), 3);
        assert_eq!(achromatic_number(&c4), 2);
        assert_eq!(pseudoachromatic_number(&Graph::complete(6).unwrap()), 6);
        // Three disjoint edges: one class per matching pair works, four
        // classes would need six witness edges.
        let tk2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(pseudoachromatic_number(&tk2), 3);
        assert_eq!(achromatic_number(&tk2), 3);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(pseudoachromatic_number(&p4), 3);
        assert_eq!(achromatic_number(&p4), 3);
        // Complete bipartite graphs have achromatic number two.
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(achromatic_number(&k33), 2);
    }

    #[test]
    fn witnesses_satisfy_their_predicates() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let psi_w = pseudoachromatic_coloring(&g);
        assert!(psi_w.is_partition_of(&g));
        assert!(psi_w.is_complete(&g));
        let alpha_w = achromatic_coloring(&g);
        assert!(alpha_w.is_partition_of(&g));
        assert!(alpha_w.is_proper(&g));
        assert!(alpha_w.is_complete(&g));
    }

    #[test]
    fn matches_oracle_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(pseudoachromatic_number(&g), crate::oracle::psi(&g), "{g:?}");
                assert_eq!(achromatic_number(&g), crate::oracle::alpha(&g), "{g:?}");
            }
        }
    }
}
