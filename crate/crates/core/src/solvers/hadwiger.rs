//! Hadwiger number, in both formulations.
//!
//! The minor formulation searches for k disjoint connected branch sets,
//! pairwise joined by an edge, deepening on k. Families are generated with
//! strictly increasing seed vertices (each seed is the minimum of its
//! branch set), and each connected set is grown once via the standard
//! include-or-ban frontier expansion.
//!
//! The coloring formulation partitions each connected component into
//! classes that are connected and pairwise adjacent; it exists as an
//! independent route and must agree with the minor search everywhere.

use crate::graph::{Graph, VertexSet};
use crate::solvers::{ColoringPartition, MinorModel};

pub fn hadwiger_number(g: &Graph) -> u32 {
    hadwiger_model(g).order() as u32
}

/// A largest complete-minor model. For disconnected graphs this is the
/// best model among the components.
pub fn hadwiger_model(g: &Graph) -> MinorModel {
    let mut best: Vec<VertexSet> = Vec::new();
    for comp in g.components() {
        let mut comp_best = vec![VertexSet::singleton(
            comp.lowest().expect("components are nonempty"),
        )];
        for k in 2..=comp.len() {
            match minor_search(g, comp, k) {
                Some(model) => comp_best = model,
                None => break,
            }
        }
        if comp_best.len() > best.len() {
            best = comp_best;
        }
    }
    MinorModel::new(best)
}

fn minor_search(g: &Graph, comp: VertexSet, k: usize) -> Option<Vec<VertexSet>> {
    let mut done: Vec<u32> = Vec::with_capacity(k);
    if extend_family(g, comp.bits(), k, &mut done, 0, 0) {
        Some(done.into_iter().map(VertexSet::from_bits).collect())
    } else {
        None
    }
}

fn extend_family(
    g: &Graph,
    comp: u32,
    k: usize,
    done: &mut Vec<u32>,
    used: u32,
    min_seed: usize,
) -> bool {
    if done.len() == k {
        return true;
    }
    let avail = comp & !used;
    let mut seeds = avail & !low_bits(min_seed);
    while seeds != 0 {
        let seed = seeds.trailing_zeros() as usize;
        seeds &= seeds - 1;
        // This branch set may use any unused vertex above its seed.
        let allowed = avail & !low_bits(seed + 1) | 1 << seed;
        if grow_set(g, comp, k, done, used, seed, 1 << seed, 0, allowed) {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn grow_set(
    g: &Graph,
    comp: u32,
    k: usize,
    done: &mut Vec<u32>,
    used: u32,
    seed: usize,
    set: u32,
    banned: u32,
    allowed: u32,
) -> bool {
    // Close the set here if it touches every earlier branch set and
    // enough vertices remain for the rest of the family.
    let nbrs = neighbor_mask(g, set);
    if done.iter().all(|&d| nbrs & d != 0) {
        let pool = comp & !used & !set & !low_bits(seed + 1);
        if pool.count_ones() as usize >= k - done.len() - 1 {
            done.push(set);
            if extend_family(g, comp, k, done, used | set, seed + 1) {
                return true;
            }
            done.pop();
        }
    }
    let mut ext = nbrs & allowed & !set & !banned;
    let mut local_banned = banned;
    while ext != 0 {
        let v = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        if grow_set(
            g,
            comp,
            k,
            done,
            used,
            seed,
            set | 1 << v,
            local_banned,
            allowed,
        ) {
            return true;
        }
        local_banned |= 1 << v;
    }
    false
}

fn neighbor_mask(g: &Graph, set: u32) -> u32 {
    let mut out = 0u32;
    for v in VertexSet::from_bits(set).iter() {
        out |= g.adj_bits(v);
    }
    out & !set
}

fn low_bits(count: usize) -> u32 {
    if count >= 32 {
        u32::MAX
    } else {
        (1u32 << count) - 1
    }
}

/// Hadwiger number through connected complete colorings, per component.
pub fn hadwiger_via_coloring(g: &Graph) -> u32 {
    g.components()
        .into_iter()
        .map(|comp| component_coloring(g, comp).0)
        .max()
        .expect("graphs have at least one component")
}

/// A best connected-and-complete coloring. For disconnected graphs the
/// classes partition the component attaining the maximum.
pub fn connected_complete_coloring(g: &Graph) -> ColoringPartition {
    let best = g
        .components()
        .into_iter()
        .map(|comp| component_coloring(g, comp))
        .max_by_key(|(k, _)| *k)
        .expect("graphs have at least one component");
    ColoringPartition::new(best.1)
}

fn component_coloring(g: &Graph, comp: VertexSet) -> (u32, Vec<VertexSet>) {
    let verts: Vec<usize> = comp.iter().collect();
    let edges_inside = verts
        .iter()
        .map(|&v| (g.neighbors(v) & comp).len())
        .sum::<usize>()
        / 2;
    let mut bound = verts.len();
    while bound * (bound - 1) / 2 > edges_inside {
        bound -= 1;
    }
    for k in (1..=bound).rev() {
        let mut search = CcSearch {
            g,
            verts: &verts,
            k,
            needed: k * (k - 1) / 2,
            covered: 0,
            classes: Vec::with_capacity(k),
            cov: vec![0u32; k],
            found: None,
        };
        search.assign(0);
        if let Some(classes) = search.found {
            return (
                k as u32,
                classes.into_iter().map(VertexSet::from_bits).collect(),
            );
        }
    }
    unreachable!("one class covering the component is connected and complete")
}

struct CcSearch<'a> {
    g: &'a Graph,
    verts: &'a [usize],
    k: usize,
    needed: usize,
    covered: usize,
    classes: Vec<u32>,
    cov: Vec<u32>,
    found: Option<Vec<u32>>,
}

impl CcSearch<'_> {
    fn assign(&mut self, i: usize) -> bool {
        let m = self.verts.len();
        let unassigned: u32 = self.verts[i..].iter().map(|&v| 1u32 << v).sum();
        if !self.still_viable(unassigned) {
            return false;
        }
        if i == m {
            if self.classes.len() == self.k && self.covered == self.needed {
                self.found = Some(self.classes.clone());
                return true;
            }
            return false;
        }
        if self.classes.len() + (m - i) < self.k {
            return false;
        }
        let v = self.verts[i];
        for c in 0..self.classes.len() {
            if self.place(i, v, c) {
                return true;
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(0);
            let c = self.classes.len() - 1;
            if self.place(i, v, c) {
                return true;
            }
            self.classes.pop();
        }
        false
    }

    /// Every class must stay connectable through unassigned vertices and
    /// every uncovered class pair must still have a potential witness
    /// edge. With nothing left unassigned this is the exact feasibility
    /// check, so leaves need no second pass.
    fn still_viable(&self, unassigned: u32) -> bool {
        for (c, &members) in self.classes.iter().enumerate() {
            let within = VertexSet::from_bits(members | unassigned);
            let start = VertexSet::singleton(members.trailing_zeros() as usize);
            let reach = self.g.reach(start, within);
            if !VertexSet::from_bits(members).is_subset_of(reach) {
                return false;
            }
            for d in c + 1..self.classes.len() {
                if self.cov[c] >> d & 1 == 1 {
                    continue;
                }
                let other = self.classes[d] | unassigned;
                if neighbor_mask_raw(self.g, members | unassigned) & other == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn place(&mut self, i: usize, v: usize, c: usize) -> bool {
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
        if self.assign(i + 1) {
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

fn neighbor_mask_raw(g: &Graph, set: u32) -> u32 {
    let mut out = 0u32;
    for v in VertexSet::from_bits(set).iter() {
        out |= g.adj_bits(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_hadwiger_numbers() {
        assert_eq!(hadwiger_number(&Graph::cycle(4).unwrap()), 3);
        assert_eq!(hadwiger_number(&Graph::path(4).unwrap()), 2);
        // P3 + K2 and 3K2 are forests: every component stays at 2.
        let pk = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(hadwiger_number(&pk), 2);
        let tk2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(hadwiger_number(&tk2), 2);
        // K3,3 has a K4 minor but no K5 minor.
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
        assert_eq!(hadwiger_number(&k33), 4);
        assert_eq!(hadwiger_number(&Graph::complete(6).unwrap()), 6);
        assert_eq!(hadwiger_number(&Graph::edgeless(1).unwrap()), 1);
    }

    #[test]
    fn model_witness_is_valid() {
        let g = Graph::cycle(6).unwrap();
        let m = hadwiger_model(&g);
        assert_eq!(m.order(), 3);
        assert!(m.is_valid_for(&g));
    }

    #[test]
    fn coloring_route_agrees_on_small_graphs() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(hadwiger_number(&g), hadwiger_via_coloring(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn coloring_route_matches_oracle_up_to_five() {
        for n in 1..=5 {
            for g in crate::oracle::isomorphism_classes(n) {
                assert_eq!(
                    hadwiger_via_coloring(&g),
                    crate::oracle::hadwiger(&g),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn coloring_witness_is_valid() {
        let g = Graph::cycle(5).unwrap();
        let w = connected_complete_coloring(&g);
        assert_eq!(w.k(), 3);
        assert!(w.is_partition_of(&g));
        assert!(w.has_connected_classes(&g));
        assert!(w.is_complete(&g));
    }
}
