//! Grundy and pseudo-Grundy numbers.
//!
//! Colors here are order-significant (a vertex of color `c` must see every
//! smaller color among its neighbors), so unlike the symmetric partition
//! searches there is no canonical color introduction; instead each
//! vertex's color domain is capped by `degree + 1` and a per-vertex budget
//! (missing smaller colors vs. unassigned neighbors) prunes the search.

use crate::graph::{Graph, VertexSet};
use crate::solvers::ColoringPartition;

pub fn grundy_number(g: &Graph) -> u32 {
    grundy_coloring(g).k() as u32
}

/// A Grundy coloring (proper, every vertex sees all smaller colors) with
/// the most colors. `classes[i]` holds color `i + 1`.
pub fn grundy_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=g.max_degree() as u32 + 1).rev() {
        if let Some(w) = ordered_coloring(g, k, true) {
            return w;
        }
    }
    unreachable!("first-fit in index order yields a feasible color count")
}

pub fn pseudo_grundy_number(g: &Graph) -> u32 {
    pseudo_grundy_coloring(g).k() as u32
}

/// A pseudo-Grundy coloring (properness not required) with the most colors.
pub fn pseudo_grundy_coloring(g: &Graph) -> ColoringPartition {
    for k in (1..=g.max_degree() as u32 + 1).rev() {
        if let Some(w) = ordered_coloring(g, k, false) {
            return w;
        }
    }
    unreachable!("the all-ones coloring is pseudo-Grundy")
}

/// Greatest color count reached by greedy first-fit over all vertex
/// orderings: the other formulation of the Grundy number. Exponential in
/// the order; meant for small graphs and cross-checks.
pub fn grundy_first_fit_max(g: &Graph) -> u32 {
    let n = g.n();
    let mut color = vec![0u32; n];
    let mut best = 1;
    first_fit_rec(g, 0, 0, 0, &mut color, &mut best);
    best
}

fn first_fit_rec(
    g: &Graph,
    used: u32,
    depth: usize,
    colors: u32,
    color: &mut Vec<u32>,
    best: &mut u32,
) {
    let n = g.n();
    if depth == n {
        if colors > *best {
            *best = colors;
        }
        return;
    }
    // Every remaining vertex can add at most one new color.
    if colors + (n - depth) as u32 <= *best {
        return;
    }
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut seen = 0u32;
        for w in (g.neighbors(v) & VertexSet::from_bits(used)).iter() {
            seen |= 1 << (color[w] - 1);
        }
        let c = (!seen).trailing_zeros() + 1;
        color[v] = c;
        first_fit_rec(g, used | 1 << v, depth + 1, colors.max(c), color, best);
    }
}

fn ordered_coloring(g: &Graph, k: u32, proper: bool) -> Option<ColoringPartition> {
    let mut search = Search {
        g,
        k,
        proper,
        color: vec![0u32; g.n()],
        missing: vec![0u32; g.n()],
        used_colors: 0,
        found: None,
    };
    search.assign(0);
    search.found.map(|colors| {
        let classes = (1..=k)
            .map(|c| {
                colors
                    .iter()
                    .enumerate()
                    .filter(|&(_, &cc)| cc == c)
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect();
        ColoringPartition::new(classes)
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: u32,
    proper: bool,
    color: Vec<u32>,
    /// Bit `d - 1` set: assigned vertex still needs a neighbor of color `d`.
    missing: Vec<u32>,
    used_colors: u32,
    found: Option<Vec<u32>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if v == n {
            if self.used_colors == low_bits(self.k) {
                self.found = Some(self.color.clone());
                return true;
            }
            return false;
        }
        // All k colors must still be reachable by surjectivity.
        if (self.k - self.used_colors.count_ones()) as usize > n - v {
            return false;
        }
        let suffix = !low_bits_usize(v + 1) & self.g.vertex_set().bits();
        let assigned_nbrs = self.g.adj_bits(v) & low_bits_usize(v);
        let mut seen = 0u32;
        for w in VertexSet::from_bits(assigned_nbrs).iter() {
            seen |= 1 << (self.color[w] - 1);
        }
        let own_suffix_deg = (self.g.adj_bits(v) & suffix).count_ones();
        let cap = self.k.min(self.g.degree(v) as u32 + 1);
        'colors: for c in 1..=cap {
            if self.proper && seen >> (c - 1) & 1 == 1 {
                continue;
            }
            let miss = low_bits(c - 1) & !seen;
            if miss.count_ones() > own_suffix_deg {
                continue;
            }
            // Assigned neighbors lose v from their budget but may gain
            // color c; both effects are checked before committing.
            for w in VertexSet::from_bits(assigned_nbrs).iter() {
                let new_missing = self.missing[w] & !(1 << (c - 1));
                let budget = (self.g.adj_bits(w) & suffix).count_ones();
                if new_missing.count_ones() > budget {
                    continue 'colors;
                }
            }
            let mut undo: Vec<(usize, u32)> = Vec::new();
            for w in VertexSet::from_bits(assigned_nbrs).iter() {
                undo.push((w, self.missing[w]));
                self.missing[w] &= !(1 << (c - 1));
            }
            let old_used = self.used_colors;
            self.color[v] = c;
            self.missing[v] = miss;
            self.used_colors |= 1 << (c - 1);
            if self.assign(v + 1) {
                return true;
            }
            self.used_colors = old_used;
            self.color[v] = 0;
            for (w, old) in undo {
                self.missing[w] = old;
            }
        }
        false
    }
}

fn low_bits(count: u32) -> u32 {
    if count >= 32 {
        u32::MAX
    } else {
        (1u32 << count) - 1
    }
}

fn low_bits_usize(count: usize) -> u32 {
    low_bits(count as u32)
}
