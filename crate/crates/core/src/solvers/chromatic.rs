//! Chromatic number: iterative deepening on the color count with the
//! clique number as the lower bound.

use crate::graph::{Graph, VertexSet};
use crate::solvers::{clique_number, ColoringPartition};

pub fn chromatic_number(g: &Graph) -> u32 {
    chromatic_coloring(g).k() as u32
}

/// A proper coloring with the least possible number of classes.
pub fn chromatic_coloring(g: &Graph) -> ColoringPartition {
    let lower = clique_number(g) as usize;
    for k in lower..=g.n() {
        if let Some(classes) = proper_coloring(g, k) {
            return ColoringPartition::new(classes);
        }
    }
    unreachable!("every graph is properly n-colorable")
}

/// First proper coloring with exactly `k` classes, if one exists. New
/// colors are opened in order, so color-symmetric assignments are tried
/// once.
fn proper_coloring(g: &Graph, k: usize) -> Option<Vec<VertexSet>> {
    let mut classes: Vec<u32> = Vec::with_capacity(k);
    if !assign(g, 0, k, &mut classes) {
        return None;
    }
    Some(classes.into_iter().map(VertexSet::from_bits).collect())
}

fn assign(g: &Graph, v: usize, k: usize, classes: &mut Vec<u32>) -> bool {
    let n = g.n();
    if v == n {
        return classes.len() == k;
    }
    // Unopened classes must still be fillable by the remaining vertices.
    if classes.len() + (n - v) < k {
        return false;
    }
    let adj = g.adj_bits(v);
    for c in 0..classes.len() {
        if classes[c] & adj == 0 {
            classes[c] |= 1 << v;
            if assign(g, v + 1, k, classes) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    if classes.len() < k {
        classes.push(1 << v);
        if assign(g, v + 1, k, classes) {
            return true;
        }
        classes.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::cycle(4).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::complete(5).unwrap()), 5);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::edgeless(6).unwrap()), 1);
    }

    #[test]
    fn witness_is_proper_and_minimal() {
        let g = Graph::cycle(7).unwrap();
        let c = chromatic_coloring(&g);
        assert!(c.is_partition_of(&g));
        assert!(c.is_proper(&g));
        assert_eq!(c.k(), 3);
    }

    #[test]
    fn matches_oracle_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(chromatic_number(&g), crate::oracle::chi(&g), "{g:?}");
            }
        }
    }
}
