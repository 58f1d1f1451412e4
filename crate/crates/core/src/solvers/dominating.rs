//! b-chromatic and pseudo-b-chromatic numbers: the most classes over
//! dominating (and, for b, proper) colorings.
//!
//! A class is dominated once some member has a neighbor in every other
//! class, so any candidate for `k` classes needs a vertex of degree at
//! least `k - 1` per class; `k` is capped by `max_degree + 1`. During the
//! search a class survives only while some current or future member can
//! still reach the other `k - 1` classes through assigned neighbors plus
//! unassigned ones.

use crate::graph::{Graph, VertexSet};
use crate::solvers::ColoringPartition;

pub fn b_chromatic_number(g: &Graph) -> u32 {
    b_chromatic_coloring(g).k() as u32
}

/// A proper dominating coloring with the most classes.
pub fn b_chromatic_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=g.max_degree() + 1).rev() {
        if let Some(classes) = dominating_coloring(g, k, true) {
            return ColoringPartition::new(classes);
        }
    }
    unreachable!("a minimum proper coloring is dominating")
}

pub fn pseudo_b_chromatic_number(g: &Graph) -> u32 {
    pseudo_b_chromatic_coloring(g).k() as u32
}

/// A dominating coloring with the most classes, properness not required.
pub fn pseudo_b_chromatic_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=g.max_degree() + 1).rev() {
        if let Some(classes) = dominating_coloring(g, k, false) {
            return ColoringPartition::new(classes);
        }
    }
    unreachable!("the one-class coloring is dominating")
}

fn dominating_coloring(g: &Graph, k: usize, proper: bool) -> Option<Vec<VertexSet>> {
    let mut search = Search {
        g,
        k,
        proper,
        classes: Vec::with_capacity(k),
        met: vec![0u32; g.n()],
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
    classes: Vec<u32>,
    /// Per vertex: classes that already contain one of its neighbors.
    met: Vec<u32>,
    found: Option<Vec<u32>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if v == n {
            if self.classes.len() == self.k && self.all_dominated() {
                self.found = Some(self.classes.clone());
                return true;
            }
            return false;
        }
        if self.classes.len() + (n - v) < self.k {
            return false;
        }
        if !self.classes_still_dominatable(v) {
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
        self.classes[c] |= 1 << v;
        let mut touched: Vec<(usize, u32)> = Vec::new();
        for w in self.g.neighbors(v).iter() {
            touched.push((w, self.met[w]));
            self.met[w] |= 1 << c;
        }
        if self.assign(v + 1) {
            return true;
        }
        for (w, old) in touched {
            self.met[w] = old;
        }
        self.classes[c] &= !(1 << v);
        false
    }

    /// Vertices `v..` are unassigned. Each opened class must keep a
    /// candidate b-vertex: a member, or an unassigned vertex that could
    /// still join it, whose met classes plus unassigned neighbors can
    /// reach the other `k - 1` classes.
    fn classes_still_dominatable(&self, v: usize) -> bool {
        let n = self.g.n();
        let unassigned = VertexSet::full(n).bits() & !low_bits(v);
        'class: for (c, &members) in self.classes.iter().enumerate() {
            let own = 1u32 << c;
            for x in VertexSet::from_bits(members).iter() {
                let reach = (self.met[x] & !own).count_ones()
                    + (self.g.adj_bits(x) & unassigned).count_ones();
                if reach as usize >= self.k - 1 {
                    continue 'class;
                }
            }
            for x in VertexSet::from_bits(unassigned).iter() {
                if self.proper && self.g.adj_bits(x) & members != 0 {
                    continue;
                }
                let reach = (self.met[x] & !own).count_ones()
                    + (self.g.adj_bits(x) & unassigned & !(1 << x)).count_ones();
                if reach as usize >= self.k - 1 {
                    continue 'class;
                }
            }
            return false;
        }
        true
    }

    fn all_dominated(&self) -> bool {
        let full = low_bits(self.k);
        self.classes.iter().enumerate().all(|(c, &members)| {
            let want = full & !(1 << c);
            VertexSet::from_bits(members)
                .iter()
                .any(|x| self.met[x] & want == want)
        })
    }
}

fn low_bits(count: usize) -> u32 {
    if count >= 32 {
        u32::MAX
    } else {
        (1u32 << count) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(b_chromatic_number(&Graph::complete(5).unwrap()), 5);
        assert_eq!(pseudo_b_chromatic_number(&Graph::complete(5).unwrap()), 5);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(b_chromatic_number(&c4), 2);
        assert_eq!(pseudo_b_chromatic_number(&c4), 2);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(b_chromatic_number(&p4), 2);
        assert_eq!(pseudo_b_chromatic_number(&p4), 2);
        // Three disjoint paths: the three centers dominate three classes,
        // and degree caps rule out a fourth.
        let tp3 = Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)]).unwrap();
        assert_eq!(b_chromatic_number(&tp3), 3);
        // Two disjoint diamonds: the four degree-3 hubs serve as b-vertices
        // of four distinct colors.
        let dd = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
            ],
        )
        .unwrap();
        assert_eq!(b_chromatic_number(&dd), 4);
    }

    #[test]
    fn witnesses_satisfy_their_predicates() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)])
            .unwrap();
        let bw = b_chromatic_coloring(&g);
        assert!(bw.is_partition_of(&g));
        assert!(bw.is_proper(&g));
        assert!(bw.is_dominating(&g));
        let pw = pseudo_b_chromatic_coloring(&g);
        assert!(pw.is_partition_of(&g));
        assert!(pw.is_dominating(&g));
    }

    #[test]
    fn matches_oracle_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(
                    b_chromatic_number(&g),
                    crate::oracle::b_chromatic(&g),
                    "{g:?}"
                );
                assert_eq!(
                    pseudo_b_chromatic_number(&g),
                    crate::oracle::pseudo_b(&g),
                    "{g:?}"
                );
            }
        }
    }
}
