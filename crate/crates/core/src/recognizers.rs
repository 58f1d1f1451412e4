//! Graph-class membership with a verifiable witness on every rejection.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::matcher::find_induced;
use crate::patterns::{Pattern, PatternCatalog, PatternError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizerError {
    #[error("graph order {n} too large for the brute-force odd-hole search (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Evidence that a graph is outside a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A forbidden pattern embeds induced at these host vertices.
    Pattern { name: String, embedding: Vec<usize> },
    /// A chordless cycle on four or more vertices, in cycle order.
    InducedCycle { vertices: Vec<usize> },
    /// An induced odd cycle of length five or more, possibly in the
    /// complement, in cycle order.
    OddHole {
        in_complement: bool,
        vertices: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub member: bool,
    pub witness: Option<Witness>,
}

impl ClassVerdict {
    fn member() -> ClassVerdict {
        ClassVerdict {
            member: true,
            witness: None,
        }
    }

    fn reject(witness: Witness) -> ClassVerdict {
        ClassVerdict {
            member: false,
            witness: Some(witness),
        }
    }
}

/// Chordality by lexicographic BFS plus verification of the resulting
/// elimination ordering; a failed verification is turned into an induced
/// cycle witness via a shortest chordless path.
pub fn is_chordal(g: &Graph) -> ClassVerdict {
    let order = lex_bfs(g);
    match check_peo(g, &order) {
        None => ClassVerdict::member(),
        Some((u, v, w)) => {
            // u and w are nonadjacent later neighbors of v.
            let hole = find_hole_through(g, u, v, w)
                .or_else(|| find_any_hole(g))
                .expect("a failed elimination ordering implies an induced cycle");
            ClassVerdict::reject(Witness::InducedCycle { vertices: hole })
        }
    }
}

/// Visit order of lexicographic breadth-first search; ties break toward
/// the lowest vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Checks that the reverse of `order` is a perfect elimination ordering.
/// Returns a failing triple `(u, v, w)`: `u`, `w` are nonadjacent
/// neighbors of `v` that both come later in the elimination order.
fn check_peo(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    // Elimination order is the reverse of the LexBFS visit order.
    let elim: Vec<usize> = order.iter().rev().copied().collect();
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &elim {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        for &w in &later {
            if w != u && !g.has_edge(u, w) {
                return Some((u, v, w));
            }
        }
    }
    None
}

/// Shortest chordless cycle through the path `u - v - w`: `v` plus a
/// shortest `u`-`w` path that avoids the rest of `N[v]`.
fn find_hole_through(g: &Graph, u: usize, v: usize, w: usize) -> Option<Vec<usize>> {
    debug_assert!(g.has_edge(v, u) && g.has_edge(v, w) && !g.has_edge(u, w));
    let blocked = g.neighbors(v).with(v).without(u).without(w);
    let allowed = g.vertex_set() - blocked;
    let path = shortest_path(g, u, w, allowed)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

/// Deterministic BFS shortest path from `a` to `b` inside `allowed`.
fn shortest_path(g: &Graph, a: usize, b: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = VertexSet::singleton(a);
    let mut frontier = vec![a];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in (g.neighbors(x) & allowed).iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    parent[y] = x;
                    next.push(y);
                }
            }
        }
        if seen.contains(b) {
            break;
        }
        frontier = next;
    }
    if !seen.contains(b) {
        return None;
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Fallback hole search: scan all paths `x - y - z` with `x`, `z`
/// nonadjacent and close each through a shortest chordless path.
fn find_any_hole(g: &Graph) -> Option<Vec<usize>> {
    for y in g.vertices() {
        let nbrs: Vec<usize> = g.neighbors(y).iter().collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if !g.has_edge(x, z) {
                    if let Some(hole) = find_hole_through(g, x, y, z) {
                        return Some(hole);
                    }
                }
            }
        }
    }
    None
}

/// Membership in the class of graphs avoiding every pattern in `family`
/// as an induced subgraph; the witness names the first pattern found.
pub fn is_free(g: &Graph, family: &[&Pattern]) -> ClassVerdict {
    for p in family {
        if let Some(embedding) = find_induced(g, p) {
            return ClassVerdict::reject(Witness::Pattern {
                name: p.name().to_string(),
                embedding,
            });
        }
    }
    ClassVerdict::member()
}

/// Trivially perfect graphs: the (C4, P4)-free ones.
pub fn is_trivially_perfect(
    g: &Graph,
    catalog: &PatternCatalog,
) -> Result<ClassVerdict, RecognizerError> {
    Ok(is_free(g, &catalog.family(&["C4", "P4"])?))
}

/// Largest order accepted by the brute-force odd-hole search.
pub const BERGE_MAX_ORDER: usize = 12;

/// Berge graphs: no induced odd cycle of length five or more in the graph
/// or its complement, by subset enumeration.
pub fn is_berge(g: &Graph) -> Result<ClassVerdict, RecognizerError> {
    if g.n() > BERGE_MAX_ORDER {
        return Err(RecognizerError::TooLarge {
            n: g.n(),
            max: BERGE_MAX_ORDER,
        });
    }
    if let Some(vertices) = find_odd_hole(g) {
        return Ok(ClassVerdict::reject(Witness::OddHole {
            in_complement: false,
            vertices,
        }));
    }
    if let Some(vertices) = find_odd_hole(&g.complement()) {
        return Ok(ClassVerdict::reject(Witness::OddHole {
            in_complement: true,
            vertices,
        }));
    }
    Ok(ClassVerdict::member())
}

/// Smallest odd vertex subset (5, 7, ...) inducing a cycle, reported in
/// cycle order.
fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut size = 5;
    while size <= n {
        for subset in (0..n).combinations(size) {
            let s: VertexSet = subset.iter().copied().collect();
            if let Some(cycle) = cycle_order(g, s) {
                return Some(cycle);
            }
        }
        size += 2;
    }
    None
}

/// If `s` induces a cycle, its vertices in cycle order starting at the
/// least vertex.
fn cycle_order(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    if s.iter().any(|v| (g.neighbors(v) & s).len() != 2) {
        return None;
    }
    let start = s.lowest()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & s).lowest()?;
    while cur != start {
        cycle.push(cur);
        let next = (g.neighbors(cur) & s).without(prev).lowest()?;
        prev = cur;
        cur = next;
    }
    // A 2-regular induced subgraph may be a union of shorter cycles.
    if cycle.len() == s.len() {
        Some(cycle)
    } else {
        None
    }
}

/// Checks a rejection witness against the graph it came from.
pub fn witness_verifies(g: &Graph, witness: &Witness, catalog: &PatternCatalog) -> bool {
    match witness {
        Witness::Pattern { name, embedding } => match catalog.get(name) {
            None => false,
            Some(p) => {
                p.order() == embedding.len()
                    && embedding.iter().all(|&v| v < g.n())
                    && embedding.iter().unique().count() == embedding.len()
                    && (0..p.order()).all(|i| {
                        (i + 1..p.order()).all(|j| {
                            p.graph().has_edge(i, j) == g.has_edge(embedding[i], embedding[j])
                        })
                    })
            }
        },
        Witness::InducedCycle { vertices } => is_induced_cycle(g, vertices) && vertices.len() >= 4,
        Witness::OddHole {
            in_complement,
            vertices,
        } => {
            let host = if *in_complement { g.complement() } else { *g };
            vertices.len() >= 5 && vertices.len() % 2 == 1 && is_induced_cycle(&host, vertices)
        }
    }
}

fn is_induced_cycle(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    if k < 3 || vertices.iter().unique().count() != k {
        return false;
    }
    if vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(vertices[i], vertices[j]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_are_not_chordal_and_yield_cycle_witnesses() {
        for k in 4..=8 {
            let g = Graph::cycle(k).unwrap();
            let verdict = is_chordal(&g);
            assert!(!verdict.member, "C{k}");
            let w = verdict.witness.unwrap();
            assert!(witness_verifies(&g, &w, &PatternCatalog::builtin()), "C{k}");
            match w {
                Witness::InducedCycle { vertices } => assert_eq!(vertices.len(), k),
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }

    #[test]
    fn chordal_members() {
        assert!(is_chordal(&Graph::complete(6).unwrap()).member);
        assert!(is_chordal(&Graph::path(4).unwrap()).member);
        assert!(is_chordal(&Graph::edgeless(5).unwrap()).member);
        // C4 plus a chord.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&g).member);
        // Diamond and two disjoint diamonds.
        let d = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_chordal(&d).member);
    }

    #[test]
    fn chordal_agrees_with_cycle_pattern_matching() {
        // Against brute-force induced-cycle search on every graph up to 6.
        for n in 1..=6 {
            for g in crate::oracle::isomorphism_classes(n) {
                let by_lexbfs = is_chordal(&g).member;
                let by_patterns = (4..=n).all(|k| {
                    let ck = Pattern::new(format!("C{k}"), k, cycle_edges(k)).unwrap();
                    find_induced(&g, &ck).is_none()
                });
                assert_eq!(by_lexbfs, by_patterns, "{g:?}");
            }
        }
    }

    fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
        e.push((k - 1, 0));
        e
    }

    #[test]
    fn free_family_rejections_name_first_pattern() {
        let cat = PatternCatalog::builtin();
        let family = cat.family(&["C4", "P4", "P3+K2", "3K2"]).unwrap();
        // C5 contains an induced P4 (but no C4).
        let c5 = Graph::cycle(5).unwrap();
        let verdict = is_free(&c5, &family);
        assert!(!verdict.member);
        match verdict.witness.unwrap() {
            Witness::Pattern { name, .. } => assert_eq!(name, "P4"),
            other => panic!("unexpected witness {other:?}"),
        }
        // A graph is its own forbidden pattern.
        let tk2 = cat.get("3K2").unwrap().graph();
        let verdict = is_free(tk2, &family);
        assert!(!verdict.member);
        match verdict.witness.unwrap() {
            Witness::Pattern { name, .. } => assert_eq!(name, "3K2"),
            other => panic!("unexpected witness {other:?}"),
        }
        // Complete graphs avoid every non-complete pattern.
        assert!(is_free(&Graph::complete(5).unwrap(), &family).member);
    }

    #[test]
    fn trivially_perfect_cases() {
        let cat = PatternCatalog::builtin();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_trivially_perfect(&star, &cat).unwrap().member);
        assert!(
            !is_trivially_perfect(&Graph::path(4).unwrap(), &cat)
                .unwrap()
                .member
        );
        assert!(
            !is_trivially_perfect(&Graph::cycle(4).unwrap(), &cat)
                .unwrap()
                .member
        );
    }

    #[test]
    fn trivially_perfect_implies_chordal_small() {
        let cat = PatternCatalog::builtin();
        for n in 1..=6 {
            for g in crate::oracle::isomorphism_classes(n) {
                if is_trivially_perfect(&g, &cat).unwrap().member {
                    assert!(is_chordal(&g).member, "{g:?}");
                }
            }
        }
    }

    #[test]
    fn berge_cases() {
        let c5 = Graph::cycle(5).unwrap();
        let v = is_berge(&c5).unwrap();
        assert!(!v.member);
        assert!(witness_verifies(
            &c5,
            &v.witness.unwrap(),
            &PatternCatalog::builtin()
        ));
        let c7 = Graph::cycle(7).unwrap();
        assert!(!is_berge(&c7).unwrap().member);
        // The complement of C7 has an odd hole only in its complement.
        let c7c = c7.complement();
        match is_berge(&c7c).unwrap().witness.unwrap() {
            Witness::OddHole { in_complement, .. } => assert!(in_complement),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(is_berge(&Graph::cycle(6).unwrap()).unwrap().member);
        assert!(is_berge(&Graph::complete(8).unwrap()).unwrap().member);
        assert!(is_berge(&Graph::edgeless(13).unwrap()).is_err());
    }

    #[test]
    fn chordal_graphs_are_berge_small() {
        for n in 1..=6 {
            for g in crate::oracle::isomorphism_classes(n) {
                if is_chordal(&g).member {
                    assert!(is_berge(&g).unwrap().member, "{g:?}");
                }
            }
        }
    }
}
