//! Exhaustive reference implementations, used only as test oracles.
//!
//! Everything here computes parameters straight from their definitions by
//! enumerating subsets, set partitions, colorings, or permutations. None of
//! it is reachable from the solvers, recognizers, or verification paths;
//! tests compare against these to validate the pruned searches.

use crate::graph::{Graph, VertexSet};

/// Isomorphism by permutation backtracking, independent of canonical keys.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let mut map = vec![usize::MAX; a.n()];
    map_next(a, b, &mut map, 0, 0)
}

fn map_next(a: &Graph, b: &Graph, map: &mut Vec<usize>, v: usize, used: u32) -> bool {
    if v == a.n() {
        return true;
    }
    'cand: for w in b.vertices() {
        if used & (1u32 << w) != 0 || a.degree(v) != b.degree(w) {
            continue;
        }
        for (u, &mu) in map.iter().enumerate().take(v) {
            if a.has_edge(u, v) != b.has_edge(mu, w) {
                continue 'cand;
            }
        }
        map[v] = w;
        if map_next(a, b, map, v + 1, used | (1u32 << w)) {
            return true;
        }
    }
    false
}

/// All labeled graphs on `n` vertices. `2^(n(n-1)/2)` of them; keep `n` small.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("pairs are in range")
        })
        .collect()
}

/// One representative per isomorphism class on `n` vertices, deduplicated
/// by pairwise isomorphism checks (not by canonical keys). Buckets are
/// keyed by the sorted per-vertex (degree, neighbor degrees) signatures so
/// the quadratic scan stays on tiny buckets.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    use std::collections::BTreeMap;
    type Signature = Vec<(usize, Vec<usize>)>;
    let mut buckets: BTreeMap<(usize, Signature), Vec<Graph>> = BTreeMap::new();
    for g in labeled_graphs(n) {
        let mut sig: Signature = g
            .vertices()
            .map(|v| {
                let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
                nd.sort_unstable();
                (g.degree(v), nd)
            })
            .collect();
        sig.sort();
        let reps = buckets.entry((g.edge_count(), sig)).or_default();
        if !reps.iter().any(|r| are_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// All set partitions of `{0..n-1}`, each as a list of disjoint classes.
pub fn set_partitions(n: usize) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut classes: Vec<VertexSet> = Vec::new();
    fn rec(v: usize, n: usize, classes: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if v == n {
            out.push(classes.clone());
            return;
        }
        for i in 0..classes.len() {
            classes[i].insert(v);
            rec(v + 1, n, classes, out);
            classes[i].remove(v);
        }
        classes.push(VertexSet::singleton(v));
        rec(v + 1, n, classes, out);
        classes.pop();
    }
    rec(0, n, &mut classes, &mut out);
    out
}

fn classes_independent(g: &Graph, classes: &[VertexSet]) -> bool {
    classes
        .iter()
        .all(|c| c.iter().all(|v| (g.neighbors(v) & *c).is_empty()))
}

fn classes_pairwise_adjacent(g: &Graph, classes: &[VertexSet]) -> bool {
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if !classes[i]
                .iter()
                .any(|v| !(g.neighbors(v) & classes[j]).is_empty())
            {
                return false;
            }
        }
    }
    true
}

fn classes_dominating(g: &Graph, classes: &[VertexSet]) -> bool {
    classes.iter().enumerate().all(|(i, c)| {
        c.iter().any(|v| {
            classes
                .iter()
                .enumerate()
                .all(|(j, d)| j == i || !(g.neighbors(v) & *d).is_empty())
        })
    })
}

fn classes_connected(g: &Graph, classes: &[VertexSet]) -> bool {
    classes
        .iter()
        .all(|c| g.is_connected_subset(*c).unwrap_or(false))
}

/// Clique number by subset enumeration.
pub fn omega(g: &Graph) -> u32 {
    let n = g.n();
    let mut best = 1u32;
    for mask in 1u32..=VertexSet::full(n).bits() {
        let s = VertexSet::from_bits(mask);
        if s.len() as u32 <= best {
            continue;
        }
        let clique = s.iter().all(|v| s.without(v).is_subset_of(g.neighbors(v)));
        if clique {
            best = s.len() as u32;
        }
    }
    best
}

/// Chromatic number as the least class count over proper partitions.
pub fn chi(g: &Graph) -> u32 {
    set_partitions(g.n())
        .iter()
        .filter(|p| classes_independent(g, p))
        .map(|p| p.len() as u32)
        .min()
        .expect("singleton partition is proper")
}

/// Pseudoachromatic number: most classes over complete partitions.
pub fn psi(g: &Graph) -> u32 {
    set_partitions(g.n())
        .iter()
        .filter(|p| classes_pairwise_adjacent(g, p))
        .map(|p| p.len() as u32)
        .max()
        .expect("one-class partition is complete")
}

/// Achromatic number: most classes over proper complete partitions.
pub fn alpha(g: &Graph) -> u32 {
    set_partitions(g.n())
        .iter()
        .filter(|p| classes_independent(g, p) && classes_pairwise_adjacent(g, p))
        .map(|p| p.len() as u32)
        .max()
        .expect("an optimal proper coloring is complete")
}

/// b-chromatic number: most classes over proper dominating partitions.
pub fn b_chromatic(g: &Graph) -> u32 {
    set_partitions(g.n())
        .iter()
        .filter(|p| classes_independent(g, p) && classes_dominating(g, p))
        .map(|p| p.len() as u32)
        .max()
        .expect("singleton partition is proper and dominating")
}

/// Pseudo-b-chromatic number: most classes over dominating partitions.
pub fn pseudo_b(g: &Graph) -> u32 {
    set_partitions(g.n())
        .iter()
        .filter(|p| classes_dominating(g, p))
        .map(|p| p.len() as u32)
        .max()
        .expect("one-class partition is dominating")
}

/// Hadwiger number via its coloring formulation: per connected component,
/// the most classes over partitions into connected, pairwise adjacent
/// classes; the maximum over components for disconnected graphs.
pub fn hadwiger(g: &Graph) -> u32 {
    g.components()
        .into_iter()
        .map(|comp| {
            let sub = g.induced(comp).expect("components are nonempty");
            set_partitions(sub.n())
                .iter()
                .filter(|p| classes_connected(&sub, p) && classes_pairwise_adjacent(&sub, p))
                .map(|p| p.len() as u32)
                .max()
                .expect("one-class partition of a component works")
        })
        .max()
        .expect("graphs have at least one component")
}

/// Pseudo-Grundy number by enumerating all surjective colorings with at
/// most `max_degree + 1` colors. Exponential; keep instances small.
pub fn pseudo_grundy(g: &Graph) -> u32 {
    let n = g.n();
    let cap = (g.max_degree() + 1) as u32;
    let mut colors = vec![0u32; n];
    for k in (1..=cap).rev() {
        if color_rec(g, &mut colors, 0, k) {
            return k;
        }
    }
    unreachable!("one color always works")
}

fn color_rec(g: &Graph, colors: &mut Vec<u32>, v: usize, k: u32) -> bool {
    let n = g.n();
    if v == n {
        let used: std::collections::BTreeSet<u32> = colors.iter().copied().collect();
        if used.len() as u32 != k {
            return false;
        }
        return (0..n)
            .all(|x| (1..colors[x]).all(|d| g.neighbors(x).iter().any(|w| colors[w] == d)));
    }
    for c in 1..=k.min(g.degree(v) as u32 + 1) {
        colors[v] = c;
        if color_rec(g, colors, v + 1, k) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_distinguishes_and_identifies() {
        let p4 = Graph::path(4).unwrap();
        let p4_relabeled = p4.permuted(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&p4, &p4_relabeled));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
    }

    #[test]
    fn class_counts_small() {
        assert_eq!(isomorphism_classes(1).len(), 1);
        assert_eq!(isomorphism_classes(2).len(), 2);
        assert_eq!(isomorphism_classes(3).len(), 4);
        assert_eq!(isomorphism_classes(4).len(), 11);
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(set_partitions(1).len(), 1);
        assert_eq!(set_partitions(4).len(), 15);
        assert_eq!(set_partitions(6).len(), 203);
    }

    #[test]
    fn known_values_on_named_graphs() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(omega(&c4), 2);
        assert_eq!(chi(&c4), 2);
        assert_eq!(hadwiger(&c4), 3);
        assert_eq!(psi(&c4), 3);
        assert_eq!(alpha(&c4), 2);
        assert_eq!(b_chromatic(&c4), 2);
        assert_eq!(pseudo_b(&c4), 2);
        assert_eq!(pseudo_grundy(&c4), 3);

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(omega(&k5), 5);
        assert_eq!(chi(&k5), 5);
        assert_eq!(psi(&k5), 5);
        assert_eq!(pseudo_grundy(&k5), 5);

        let tk2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(psi(&tk2), 3);
        assert_eq!(alpha(&tk2), 3);
        assert_eq!(hadwiger(&tk2), 2);
    }
}
