//! Hereditary parameter-equality checking, theorem verification over
//! enumerated graph universes, and minimal-obstruction mining.

mod cache;
pub mod theorems;

pub use cache::{CacheError, ProfileCache};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{enumerate_graphs, EnumerateError};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{ConsistencyError, ParameterProfile};

/// Names one of the nine parameters. The textual ids are `omega`, `chi`,
/// `hadwiger`, `psi`, `alpha`, `b`, `B`, `grundy`, `pseudo_grundy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamSelector {
    Omega,
    Chi,
    Hadwiger,
    Psi,
    Alpha,
    BChromatic,
    PseudoB,
    Grundy,
    PseudoGrundy,
}

impl ParamSelector {
    pub const ALL: [ParamSelector; 9] = [
        ParamSelector::Omega,
        ParamSelector::Chi,
        ParamSelector::Hadwiger,
        ParamSelector::Psi,
        ParamSelector::Alpha,
        ParamSelector::BChromatic,
        ParamSelector::PseudoB,
        ParamSelector::Grundy,
        ParamSelector::PseudoGrundy,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ParamSelector::Omega => "omega",
            ParamSelector::Chi => "chi",
            ParamSelector::Hadwiger => "hadwiger",
            ParamSelector::Psi => "psi",
            ParamSelector::Alpha => "alpha",
            ParamSelector::BChromatic => "b",
            ParamSelector::PseudoB => "B",
            ParamSelector::Grundy => "grundy",
            ParamSelector::PseudoGrundy => "pseudo_grundy",
        }
    }

    pub fn value_in(self, p: &ParameterProfile) -> u32 {
        match self {
            ParamSelector::Omega => p.omega,
            ParamSelector::Chi => p.chi,
            ParamSelector::Hadwiger => p.hadwiger,
            ParamSelector::Psi => p.psi,
            ParamSelector::Alpha => p.alpha,
            ParamSelector::BChromatic => p.b_chromatic,
            ParamSelector::PseudoB => p.pseudo_b,
            ParamSelector::Grundy => p.grundy,
            ParamSelector::PseudoGrundy => p.pseudo_grundy,
        }
    }
}

impl fmt::Display for ParamSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ParamSelector {
    type Err = PerfectionError;
    fn from_str(s: &str) -> Result<ParamSelector, PerfectionError> {
        ParamSelector::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| PerfectionError::UnknownParameter(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerfectionError {
    #[error("unknown parameter id {0:?} (expected omega, chi, hadwiger, psi, alpha, b, B, grundy, or pseudo_grundy)")]
    UnknownParameter(String),
    #[error("parameters must be distinct, got {0} twice")]
    IdenticalParameters(ParamSelector),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error(transparent)]
    Pattern(#[from] crate::patterns::PatternError),
}

/// A subset of a host graph on which two parameters disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbWitness {
    pub subset: VertexSet,
    pub a_value: u32,
    pub b_value: u32,
}

/// Lazily computed profiles of the induced subgraphs of one host graph,
/// deduplicated through the shared cache by canonical key.
pub struct SubgraphProfiles<'c> {
    g: Graph,
    cache: &'c ProfileCache,
    memo: HashMap<u32, ParameterProfile>,
}

impl<'c> SubgraphProfiles<'c> {
    pub fn new(g: Graph, cache: &'c ProfileCache) -> SubgraphProfiles<'c> {
        SubgraphProfiles {
            g,
            cache,
            memo: HashMap::new(),
        }
    }

    pub fn host(&self) -> &Graph {
        &self.g
    }

    pub fn profile(&mut self, subset: VertexSet) -> Result<ParameterProfile, PerfectionError> {
        if let Some(p) = self.memo.get(&subset.bits()) {
            return Ok(*p);
        }
        let sub = self
            .g
            .induced(subset)
            .expect("subsets iterate over host vertices");
        let p = self.cache.profile_of(&sub)?;
        self.memo.insert(subset.bits(), p);
        Ok(p)
    }

    /// First subset (smallest, then lexicographically least) where the two
    /// parameters differ, or `None` when the host is ab-perfect.
    pub fn ab_witness(
        &mut self,
        a: ParamSelector,
        b: ParamSelector,
    ) -> Result<Option<AbWitness>, PerfectionError> {
        if a == b {
            return Err(PerfectionError::IdenticalParameters(a));
        }
        let n = self.g.n();
        for size in 1..=n {
            for combo in (0..n).combinations(size) {
                let subset: VertexSet = combo.into_iter().collect();
                let p = self.profile(subset)?;
                let av = a.value_in(&p);
                let bv = b.value_in(&p);
                if av != bv {
                    return Ok(Some(AbWitness {
                        subset,
                        a_value: av,
                        b_value: bv,
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// Whether `a(H) = b(H)` for every nonempty induced subgraph `H` of `g`.
/// All `2^n - 1` subsets are visited, deduplicated through the cache; on
/// failure the witness subset is minimal by size, then lexicographic.
pub fn is_ab_perfect(
    g: &Graph,
    a: ParamSelector,
    b: ParamSelector,
    cache: &ProfileCache,
) -> Result<(bool, Option<AbWitness>), PerfectionError> {
    let witness = SubgraphProfiles::new(*g, cache).ab_witness(a, b)?;
    Ok((witness.is_none(), witness))
}

/// All graphs of order at most `max_order` on which `a` and `b` differ
/// while agreeing on every proper induced subgraph; ascending by order,
/// then by canonical key.
pub fn minimal_obstructions(
    a: ParamSelector,
    b: ParamSelector,
    max_order: usize,
    cache: &ProfileCache,
) -> Result<Vec<Graph>, PerfectionError> {
    if a == b {
        return Err(PerfectionError::IdenticalParameters(a));
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        for g in enumerate_graphs(n)? {
            if is_minimal_obstruction(&g, a, b, cache)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

pub(crate) fn is_minimal_obstruction(
    g: &Graph,
    a: ParamSelector,
    b: ParamSelector,
    cache: &ProfileCache,
) -> Result<bool, PerfectionError> {
    let p = cache.profile_of(g)?;
    if a.value_in(&p) == b.value_in(&p) {
        return Ok(false);
    }
    // Hereditary equality on all proper subsets reduces to the
    // one-vertex-deleted subgraphs.
    for v in g.vertices() {
        if g.n() == 1 {
            break;
        }
        let h = g.delete_vertex(v).expect("order at least two");
        let (perfect, _) = is_ab_perfect(&h, a, b, cache)?;
        if !perfect {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::patterns::PatternCatalog;

    #[test]
    fn selector_ids_round_trip() {
        for p in ParamSelector::ALL {
            assert_eq!(p.id().parse::<ParamSelector>().unwrap(), p);
        }
        assert!("gamma".parse::<ParamSelector>().is_err());
        // The two ids differing only in case stay distinct.
        assert_eq!(
            "b".parse::<ParamSelector>().unwrap(),
            ParamSelector::BChromatic
        );
        assert_eq!(
            "B".parse::<ParamSelector>().unwrap(),
            ParamSelector::PseudoB
        );
    }

    #[test]
    fn c4_fails_omega_hadwiger_on_itself() {
        let cache = ProfileCache::new();
        let c4 = Graph::cycle(4).unwrap();
        let (perfect, witness) =
            is_ab_perfect(&c4, ParamSelector::Omega, ParamSelector::Hadwiger, &cache).unwrap();
        assert!(!perfect);
        let w = witness.unwrap();
        assert_eq!(w.subset, c4.vertex_set());
        assert_eq!((w.a_value, w.b_value), (2, 3));
    }

    #[test]
    fn complete_graphs_are_perfect_for_every_pair() {
        let cache = ProfileCache::new();
        let k5 = Graph::complete(5).unwrap();
        for (i, a) in ParamSelector::ALL.into_iter().enumerate() {
            for b in ParamSelector::ALL.into_iter().skip(i + 1) {
                let (perfect, _) = is_ab_perfect(&k5, a, b, &cache).unwrap();
                assert!(perfect, "{a}/{b}");
            }
        }
    }

    #[test]
    fn p5_omega_psi_witness_is_an_induced_p4() {
        let cache = ProfileCache::new();
        let p5 = Graph::path(5).unwrap();
        let (perfect, witness) =
            is_ab_perfect(&p5, ParamSelector::Omega, ParamSelector::Psi, &cache).unwrap();
        assert!(!perfect);
        let w = witness.unwrap();
        assert_eq!(w.subset.len(), 4);
        let sub = p5.induced(w.subset).unwrap();
        assert_eq!(canonical_key(&sub), canonical_key(&Graph::path(4).unwrap()));
        assert_eq!((w.a_value, w.b_value), (2, 3));
    }

    #[test]
    fn identical_parameters_rejected() {
        let cache = ProfileCache::new();
        let g = Graph::edgeless(1).unwrap();
        assert!(matches!(
            is_ab_perfect(&g, ParamSelector::Chi, ParamSelector::Chi, &cache),
            Err(PerfectionError::IdenticalParameters(_))
        ));
    }

    #[test]
    fn omega_gamma_obstructions_up_to_five() {
        let cache = ProfileCache::new();
        let mined =
            minimal_obstructions(ParamSelector::Omega, ParamSelector::PseudoGrundy, 5, &cache)
                .unwrap();
        let cat = PatternCatalog::builtin();
        let expect: Vec<_> = ["C4", "P4"]
            .iter()
            .map(|n| canonical_key(cat.get(n).unwrap().graph()))
            .sorted()
            .collect();
        let got: Vec<_> = mined.iter().map(canonical_key).sorted().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn mined_obstructions_reverify() {
        let cache = ProfileCache::new();
        let a = ParamSelector::Omega;
        let b = ParamSelector::Hadwiger;
        for o in minimal_obstructions(a, b, 5, &cache).unwrap() {
            let p = cache.profile_of(&o).unwrap();
            assert_ne!(a.value_in(&p), b.value_in(&p));
            for v in o.vertices() {
                let h = o.delete_vertex(v).unwrap();
                let (perfect, _) = is_ab_perfect(&h, a, b, &cache).unwrap();
                assert!(perfect);
            }
        }
    }
}
