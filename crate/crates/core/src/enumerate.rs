//! Isomorph-free enumeration of small graphs, one canonically labeled
//! representative per class.
//!
//! Orders up to 6 dedup all labeled graphs through their canonical keys.
//! Orders 7 and 8 extend each canonical (n-1)-vertex graph by one vertex
//! and keep a child only if the new vertex can sit at the last position of
//! a minimal labeling, which restricts every class to a single parent;
//! a key set removes the remaining same-parent duplicates.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::canon::{canonical_body, pinned_can_be_last, CanonicalKey};
use crate::graph::Graph;
use crate::graph6::{pack_graph6, parse_graph6};

/// Full enumeration is supported for orders `1..=8`.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Class counts for orders 1..=8, used as self-checks and in tests.
pub const CLASS_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration order {0} out of range (must be 1..=8)")]
    OrderOutOfRange(usize),
}

/// All isomorphism classes of simple graphs on exactly `n` vertices,
/// canonically labeled and sorted by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    let keys = enumerate_keys(n)?;
    Ok(keys
        .into_iter()
        .map(|k| parse_graph6(k.as_str()).expect("canonical key is valid graph6"))
        .collect())
}

/// All classes of orders `1..=max`, ascending by order then canonical key.
pub fn enumerate_up_to(max: usize) -> Result<Vec<Graph>, EnumerateError> {
    if max == 0 || max > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderOutOfRange(max));
    }
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

fn enumerate_keys(n: usize) -> Result<BTreeSet<CanonicalKey>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    if n <= 6 {
        Ok(brute_force_keys(n))
    } else {
        Ok(augmented_keys(n))
    }
}

/// Dedup of all `2^(n(n-1)/2)` labeled graphs by canonical key.
fn brute_force_keys(n: usize) -> BTreeSet<CanonicalKey> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut keys = BTreeSet::new();
    for mask in 0u32..1u32 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("pairs are in range");
        keys.insert(crate::canon::canonical_key(&g));
    }
    keys
}

/// Orderly extension of the canonical (n-1)-vertex representatives.
fn augmented_keys(n: usize) -> BTreeSet<CanonicalKey> {
    let parents = enumerate_graphs(n - 1).expect("n - 1 is in range");
    let mut keys = BTreeSet::new();
    for parent in &parents {
        let base_edges = parent.edges();
        for mask in 0u32..1u32 << (n - 1) {
            let mut edges = base_edges.clone();
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    edges.push((i, n - 1));
                }
            }
            let child = Graph::from_edges(n, &edges).expect("extension stays in range");
            let body = canonical_body(&child);
            if pinned_can_be_last(&child, n - 1, &body) {
                keys.insert(CanonicalKey::from_string(pack_graph6(n, &body)));
            }
        }
    }
    keys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    #[test]
    fn counts_up_to_six() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_graphs(n).unwrap().len(),
                CLASS_COUNTS[n - 1],
                "order {n}"
            );
        }
    }

    #[test]
    fn count_at_seven_via_augmentation() {
        assert_eq!(enumerate_graphs(7).unwrap().len(), 1044);
    }

    #[test]
    fn order_bounds() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn yields_distinct_sorted_canonical_representatives() {
        let graphs = enumerate_graphs(5).unwrap();
        let keys: Vec<_> = graphs.iter().map(canonical_key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        // Each representative is already in canonical labeling.
        for (g, k) in graphs.iter().zip(&keys) {
            assert_eq!(crate::graph6::emit_graph6(g), k.as_str());
        }
    }

    #[test]
    fn up_to_concatenates_orders() {
        let all = enumerate_up_to(4).unwrap();
        assert_eq!(all.len(), 1 + 2 + 4 + 11);
        assert!(all.windows(2).all(|w| w[0].n() <= w[1].n()));
    }
}
