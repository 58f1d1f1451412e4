//! Maximum clique by branch and bound with a greedy-coloring upper bound.

use crate::graph::{Graph, VertexSet};

pub fn clique_number(g: &Graph) -> u32 {
    max_clique(g).len() as u32
}

/// A maximum clique; the deterministic first one found by the search.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = 0u32;
    expand(g, 0, g.vertex_set().bits(), &mut best);
    VertexSet::from_bits(best)
}

fn expand(g: &Graph, current: u32, candidates: u32, best: &mut u32) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + greedy_color_bound(g, candidates) <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    expand(g, current | 1 << v, candidates & g.adj_bits(v), best);
    expand(g, current, candidates & !(1 << v), best);
}

/// Colors the candidate set greedily; a clique inside it cannot exceed the
/// number of classes used.
fn greedy_color_bound(g: &Graph, candidates: u32) -> u32 {
    let mut remaining = candidates;
    let mut classes = 0;
    while remaining != 0 {
        classes += 1;
        let mut class_pool = remaining;
        while class_pool != 0 {
            let v = class_pool.trailing_zeros() as usize;
            remaining &= !(1 << v);
            class_pool &= !(1 << v) & !g.adj_bits(v);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_clique_numbers() {
        assert_eq!(clique_number(&Graph::cycle(4).unwrap()), 2);
        assert_eq!(clique_number(&Graph::edgeless(1).unwrap()), 1);
        // Diamond K4 minus an edge has a triangle but no K4.
        let d = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(clique_number(&d), 3);
        assert_eq!(clique_number(&Graph::complete(7).unwrap()), 7);
    }

    #[test]
    fn witness_is_a_clique() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let w = max_clique(&g);
        assert_eq!(w.len(), 3);
        for u in w.iter() {
            for v in w.iter() {
                if u < v {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn matches_oracle_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(clique_number(&g), crate::oracle::omega(&g), "{g:?}");
            }
        }
    }
}
