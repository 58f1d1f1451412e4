//! Induced-subgraph pattern matching by backtracking.

use crate::graph::Graph;
use crate::patterns::Pattern;

/// Finds an injective vertex map under which `p` occurs as an induced
/// subgraph of `g`. Pattern vertices are mapped in index order and host
/// candidates are tried in increasing order, so the returned image
/// sequence is the lexicographically least embedding.
pub fn find_induced(g: &Graph, p: &Pattern) -> Option<Vec<usize>> {
    find_induced_graph(g, p.graph())
}

pub fn contains_induced(g: &Graph, p: &Pattern) -> bool {
    find_induced(g, p).is_some()
}

/// Same as [`find_induced`] with the pattern given directly as a graph.
pub fn find_induced_graph(host: &Graph, pat: &Graph) -> Option<Vec<usize>> {
    if pat.n() > host.n() {
        return None;
    }
    let mut image = Vec::with_capacity(pat.n());
    if embed(host, pat, &mut image, 0) {
        Some(image)
    } else {
        None
    }
}

fn embed(host: &Graph, pat: &Graph, image: &mut Vec<usize>, used: u32) -> bool {
    let i = image.len();
    if i == pat.n() {
        return true;
    }
    let need = pat.degree(i);
    'cand: for v in host.vertices() {
        if used & (1u32 << v) != 0 || host.degree(v) < need {
            continue;
        }
        for (j, &w) in image.iter().enumerate() {
            if pat.has_edge(j, i) != host.has_edge(w, v) {
                continue 'cand;
            }
        }
        image.push(v);
        if embed(host, pat, image, used | (1u32 << v)) {
            return true;
        }
        image.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::PatternCatalog;

    #[test]
    fn c4_contains_induced_p3() {
        let cat = PatternCatalog::builtin();
        let c4 = Graph::cycle(4).unwrap();
        let hit = find_induced(&c4, cat.get("P3").unwrap()).unwrap();
        assert_eq!(hit, vec![0, 1, 2]); // least embedding
    }

    #[test]
    fn complete_graphs_have_no_induced_non_edges() {
        let cat = PatternCatalog::builtin();
        let k4 = Graph::complete(4).unwrap();
        assert!(find_induced(&k4, cat.get("C4").unwrap()).is_none());
        assert!(find_induced(&k4, cat.get("P3").unwrap()).is_none());
    }

    #[test]
    fn two_diamonds_are_3k2_free() {
        let cat = PatternCatalog::builtin();
        let dd = cat.get("2D").unwrap().graph();
        assert!(find_induced(dd, cat.get("3K2").unwrap()).is_none());
        // But a single independent edge pair is there.
        assert!(find_induced(dd, cat.get("K2").unwrap()).is_some());
    }

    #[test]
    fn embedding_is_induced_isomorphic() {
        let cat = PatternCatalog::builtin();
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let p = cat.get("P4").unwrap();
        let image = find_induced(&g, p).unwrap();
        for i in 0..p.order() {
            for j in i + 1..p.order() {
                assert_eq!(
                    p.graph().has_edge(i, j),
                    g.has_edge(image[i], image[j]),
                    "pair ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn oversized_pattern_never_matches() {
        let cat = PatternCatalog::builtin();
        let p3 = Graph::path(3).unwrap();
        assert!(find_induced(&p3, cat.get("C4").unwrap()).is_none());
    }
}
