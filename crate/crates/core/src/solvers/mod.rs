//! Exact solvers for the nine parameters: clique number, chromatic number,
//! Hadwiger number (minor and coloring formulations), pseudoachromatic and
//! achromatic numbers, b-chromatic and pseudo-b-chromatic numbers, Grundy
//! and pseudo-Grundy numbers.
//!
//! Every solver is a pure function of an immutable [`Graph`]; witnesses
//! come from deterministic searches so reports reproduce byte for byte.

mod chromatic;
mod clique;
mod complete;
mod dominating;
mod grundy;
mod hadwiger;

pub use chromatic::{chromatic_coloring, chromatic_number};
pub use clique::{clique_number, max_clique};
pub use complete::{
    achromatic_coloring, achromatic_number, pseudoachromatic_coloring, pseudoachromatic_number,
};
pub use dominating::{
    b_chromatic_coloring, b_chromatic_number, pseudo_b_chromatic_coloring,
    pseudo_b_chromatic_number,
};
pub use grundy::{
    grundy_coloring, grundy_first_fit_max, grundy_number, pseudo_grundy_coloring,
    pseudo_grundy_number,
};
pub use hadwiger::{
    connected_complete_coloring, hadwiger_model, hadwiger_number, hadwiger_via_coloring,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;

/// A surjective assignment of vertices to `k` color classes. For the
/// Grundy-style parameters the class order is significant: `classes[i]`
/// is color `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringPartition {
    classes: Vec<VertexSet>,
}

impl ColoringPartition {
    pub fn new(classes: Vec<VertexSet>) -> ColoringPartition {
        ColoringPartition { classes }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// Nonempty, disjoint classes covering exactly the vertices of `g`.
    pub fn is_partition_of(&self, g: &Graph) -> bool {
        let mut union = VertexSet::EMPTY;
        for c in &self.classes {
            if c.is_empty() || !union.is_disjoint(*c) {
                return false;
            }
            union = union | *c;
        }
        union == g.vertex_set()
    }

    /// No edge inside any class.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|v| (g.neighbors(v) & *c).is_empty()))
    }

    /// Every pair of classes joined by at least one edge.
    pub fn is_complete(&self, g: &Graph) -> bool {
        for i in 0..self.classes.len() {
            for j in i + 1..self.classes.len() {
                if !g
                    .sets_adjacent(self.classes[i], self.classes[j])
                    .unwrap_or(false)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Every class contains a vertex with a neighbor in every other class.
    pub fn is_dominating(&self, g: &Graph) -> bool {
        self.classes.iter().enumerate().all(|(i, c)| {
            c.iter().any(|v| {
                self.classes
                    .iter()
                    .enumerate()
                    .all(|(j, d)| j == i || !(g.neighbors(v) & *d).is_empty())
            })
        })
    }

    /// Every class induces a connected subgraph.
    pub fn has_connected_classes(&self, g: &Graph) -> bool {
        self.classes
            .iter()
            .all(|c| g.is_connected_subset(*c).unwrap_or(false))
    }

    /// Every vertex of color `i + 1` has a neighbor in each smaller color
    /// class (classes are ordered by color).
    pub fn is_pseudo_grundy(&self, g: &Graph) -> bool {
        self.classes.iter().enumerate().all(|(i, c)| {
            c.iter().all(|v| {
                self.classes[..i]
                    .iter()
                    .all(|d| !(g.neighbors(v) & *d).is_empty())
            })
        })
    }

    /// Proper and pseudo-Grundy.
    pub fn is_grundy(&self, g: &Graph) -> bool {
        self.is_proper(g) && self.is_pseudo_grundy(g)
    }
}

/// Disjoint connected branch sets, pairwise joined by an edge: a complete
/// minor of the host graph with one branch set per minor vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<VertexSet>) -> MinorModel {
        MinorModel { branch_sets }
    }

    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    /// Branch sets are nonempty, disjoint, connected, pairwise adjacent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut union = VertexSet::EMPTY;
        for s in &self.branch_sets {
            if s.is_empty() || !union.is_disjoint(*s) {
                return false;
            }
            if !g.is_connected_subset(*s).unwrap_or(false) {
                return false;
            }
            union = union | *s;
        }
        for i in 0..self.branch_sets.len() {
            for j in i + 1..self.branch_sets.len() {
                if !g
                    .sets_adjacent(self.branch_sets[i], self.branch_sets[j])
                    .unwrap_or(false)
                {
                    return false;
                }
            }
        }
        true
    }
}

/// The nine parameters of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterProfile {
    pub omega: u32,
    pub chi: u32,
    pub hadwiger: u32,
    pub psi: u32,
    pub alpha: u32,
    #[serde(rename = "b")]
    pub b_chromatic: u32,
    #[serde(rename = "B")]
    pub pseudo_b: u32,
    pub grundy: u32,
    pub pseudo_grundy: u32,
}

impl ParameterProfile {
    /// Values in cache-line order: omega chi hadwiger psi alpha b B grundy
    /// pseudo_grundy.
    pub fn values(&self) -> [u32; 9] {
        [
            self.omega,
            self.chi,
            self.hadwiger,
            self.psi,
            self.alpha,
            self.b_chromatic,
            self.pseudo_b,
            self.grundy,
            self.pseudo_grundy,
        ]
    }

    pub fn from_values(v: [u32; 9]) -> ParameterProfile {
        ParameterProfile {
            omega: v[0],
            chi: v[1],
            hadwiger: v[2],
            psi: v[3],
            alpha: v[4],
            b_chromatic: v[5],
            pseudo_b: v[6],
            grundy: v[7],
            pseudo_grundy: v[8],
        }
    }

    /// Violated chain inequalities, empty when the profile is consistent.
    pub fn chain_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !(self.omega <= self.hadwiger && self.hadwiger <= self.psi) {
            out.push("omega <= hadwiger <= psi");
        }
        if !(self.omega <= self.alpha && self.alpha <= self.psi) {
            out.push("omega <= alpha <= psi");
        }
        if !(self.omega <= self.b_chromatic
            && self.b_chromatic <= self.pseudo_b
            && self.pseudo_b <= self.psi)
        {
            out.push("omega <= b <= B <= psi");
        }
        if !(self.omega <= self.grundy && self.grundy <= self.pseudo_grundy) {
            out.push("omega <= grundy <= pseudo_grundy");
        }
        if self.omega > self.chi {
            out.push("omega <= chi");
        }
        out
    }
}

/// A computed profile broke a chain inequality: always a solver bug,
/// never a valid result.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("inconsistent profile for {graph6}: violated {violated:?} in {profile:?}")]
pub struct ConsistencyError {
    pub graph6: String,
    pub violated: Vec<&'static str>,
    pub profile: ParameterProfile,
}

/// Computes all nine parameters and enforces the chain inequalities.
pub fn full_profile(g: &Graph) -> Result<ParameterProfile, ConsistencyError> {
    let profile = ParameterProfile {
        omega: clique_number(g),
        chi: chromatic_number(g),
        hadwiger: hadwiger_number(g),
        psi: pseudoachromatic_number(g),
        alpha: achromatic_number(g),
        b_chromatic: b_chromatic_number(g),
        pseudo_b: pseudo_b_chromatic_number(g),
        grundy: grundy_number(g),
        pseudo_grundy: pseudo_grundy_number(g),
    };
    let violated = profile.chain_violations();
    if violated.is_empty() {
        Ok(profile)
    } else {
        Err(ConsistencyError {
            graph6: emit_graph6(g),
            violated,
            profile,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_profile_is_all_ones() {
        let p = full_profile(&Graph::edgeless(1).unwrap()).unwrap();
        assert_eq!(p.values(), [1; 9]);
    }

    #[test]
    fn complete_graph_profile_is_all_n() {
        for n in [2usize, 3, 4, 5, 6] {
            let p = full_profile(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(p.values(), [n as u32; 9], "K{n}");
        }
    }

    #[test]
    fn c4_profile_matches_known_row() {
        let p = full_profile(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(p.values(), [2, 2, 3, 3, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn chain_violation_detection() {
        let mut p = full_profile(&Graph::cycle(5).unwrap()).unwrap();
        assert!(p.chain_violations().is_empty());
        p.psi = 0;
        assert!(!p.chain_violations().is_empty());
    }
}
